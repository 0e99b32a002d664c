//! Literal root tables for the finite families.

use std::fmt;
use std::str::FromStr;

use super::Parity;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    /// sl(m|n) with m != n.
    Sl(usize, usize),
    Gl(usize),
    /// sl(m|m).
    SlSquare(usize),
    Psl(usize),
    Psq(usize),
    /// osp(m|2n), stored as (m, n).
    Osp(usize, usize),
    D21,
    SuperF4,
    SuperG3,
    H(usize),
}

/// Raw data for one family before projection.
pub(crate) struct RawSystem {
    pub generators: Vec<String>,
    pub relations: Vec<Vec<Scalar>>,
    pub roots: Vec<(Vec<Scalar>, Parity)>,
    pub ships_positive: bool,
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParams(format!("{self}: {msg}")));
        match *self {
            Family::A(n) if n < 1 => bad("rank must be >= 1"),
            Family::B(n) | Family::C(n) if n < 1 => bad("rank must be >= 1"),
            Family::D(n) if n < 2 => bad("rank must be >= 2"),
            Family::Sl(m, n) if m == n => bad("m != n required; use sl(m|m)"),
            Family::Sl(m, n) if m < 1 || n < 1 => bad("m, n >= 1 required"),
            Family::Gl(m) | Family::SlSquare(m) if m < 1 => bad("m >= 1 required"),
            Family::Psl(m) if m < 2 => bad("m >= 2 required"),
            Family::Psq(n) if n < 2 => bad("n >= 2 required"),
            Family::Osp(m, n) if m < 1 || n < 1 => bad("m >= 1 and n >= 1 required"),
            Family::H(n) if n < 5 => bad("n >= 5 required"),
            _ => Ok(()),
        }
    }

    pub(crate) fn raw(&self) -> Result<RawSystem> {
        self.validate()?;
        Ok(match *self {
            Family::A(n) => type_a(n + 1, "e"),
            Family::Psq(n) => type_a(n, "e"),
            Family::B(n) => lie_bcd(n, 'B'),
            Family::C(n) => lie_bcd(n, 'C'),
            Family::D(n) => lie_bcd(n, 'D'),
            Family::E8 => type_e8(),
            Family::E7 => type_e_sub(1),
            Family::E6 => type_e_sub(2),
            Family::F4 => type_f4(),
            Family::G2 => type_g2(),
            Family::Sl(m, n) => type_gl(m, n, GlQuotient::SupertraceOnly),
            Family::SlSquare(m) => type_gl(m, m, GlQuotient::SupertraceOnly),
            Family::Gl(m) => type_gl(m, m, GlQuotient::None),
            Family::Psl(m) => type_gl(m, m, GlQuotient::Both),
            Family::Osp(m, n) => type_osp(m, n),
            Family::D21 => type_d21(),
            Family::SuperF4 => type_super_f4(),
            Family::SuperG3 => type_super_g3(),
            Family::H(n) => type_h(n),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::C(n) => write!(f, "C{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
            Family::F4 => write!(f, "F4"),
            Family::G2 => write!(f, "G2"),
            Family::Sl(m, n) => write!(f, "sl({m}|{n})"),
            Family::Gl(m) => write!(f, "gl({m}|{m})"),
            Family::SlSquare(m) => write!(f, "sl({m}|{m})"),
            Family::Psl(m) => write!(f, "psl({m}|{m})"),
            Family::Psq(n) => write!(f, "psq({n})"),
            Family::Osp(m, n) => write!(f, "osp({m}|{})", 2 * n),
            Family::D21 => write!(f, "D(2,1)"),
            Family::SuperF4 => write!(f, "F(4)"),
            Family::SuperG3 => write!(f, "G(3)"),
            Family::H(n) => write!(f, "H({n})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || Error::UnsupportedFamily(s.to_string());
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| unsupported());
        match s {
            "E6" => return Ok(Family::E6),
            "E7" => return Ok(Family::E7),
            "E8" => return Ok(Family::E8),
            "F4" => return Ok(Family::F4),
            "G2" => return Ok(Family::G2),
            "D(2,1)" | "D(2|1)" => return Ok(Family::D21),
            "F(4)" => return Ok(Family::SuperF4),
            "G(3)" => return Ok(Family::SuperG3),
            _ => {}
        }
        if let Some(open) = s.find('(') {
            let head = &s[..open];
            let body = s[open + 1..].strip_suffix(')').ok_or_else(unsupported)?;
            let pair = || -> Result<(usize, usize)> {
                let (a, b) = body.split_once('|').ok_or_else(unsupported)?;
                Ok((num(a)?, num(b)?))
            };
            let fam = match head {
                "sl" => {
                    let (m, n) = pair()?;
                    if m == n {
                        Family::SlSquare(m)
                    } else {
                        Family::Sl(m, n)
                    }
                }
                "gl" | "psl" => {
                    let (m, n) = pair()?;
                    if m != n {
                        return Err(Error::InvalidParams(format!("{s}: expected m = n")));
                    }
                    if head == "gl" {
                        Family::Gl(m)
                    } else {
                        Family::Psl(m)
                    }
                }
                "osp" => {
                    let (m, n2) = pair()?;
                    if n2 % 2 != 0 {
                        return Err(Error::InvalidParams(format!("{s}: odd part must be even")));
                    }
                    Family::Osp(m, n2 / 2)
                }
                "psq" => Family::Psq(num(body)?),
                "H" => Family::H(num(body)?),
                "A" => Family::A(num(body)?),
                "B" => Family::B(num(body)?),
                "C" => Family::C(num(body)?),
                "D" => Family::D(num(body)?),
                _ => return Err(unsupported()),
            };
            return Ok(fam);
        }
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n = num(tail)?;
        match head {
            "A" => Ok(Family::A(n)),
            "B" => Ok(Family::B(n)),
            "C" => Ok(Family::C(n)),
            "D" => Ok(Family::D(n)),
            _ => Err(unsupported()),
        }
    }
}

fn ints(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

fn unit(dim: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = c;
    v
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn even(v: Vec<i64>) -> (Vec<Scalar>, Parity) {
    (ints(&v), Parity::Even)
}

fn odd(v: Vec<i64>) -> (Vec<Scalar>, Parity) {
    (ints(&v), Parity::Odd)
}

/// All sign choices on `k` entries.
fn signs(k: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1u32 << k).map(move |mask| {
        (0..k)
            .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

fn type_a(n: usize, prefix: &str) -> RawSystem {
    let mut roots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                roots.push(even(v));
            }
        }
    }
    RawSystem {
        generators: names(prefix, n),
        relations: vec![ints(&vec![1; n])],
        roots,
        ships_positive: true,
    }
}

/// `±e_i ± e_j` for i < j inside a block of `n` coordinates at `offset`.
fn pm_pairs(dim: usize, offset: usize, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for s in signs(2) {
                let mut v = vec![0; dim];
                v[offset + i] = s[0];
                v[offset + j] = s[1];
                out.push(v);
            }
        }
    }
    out
}

fn lie_bcd(n: usize, t: char) -> RawSystem {
    let mut roots: Vec<_> = pm_pairs(n, 0, n).into_iter().map(even).collect();
    for i in 0..n {
        for s in [1, -1] {
            match t {
                'B' => roots.push(even(unit(n, i, s))),
                'C' => roots.push(even(unit(n, i, 2 * s))),
                _ => {}
            }
        }
    }
    RawSystem {
        generators: names("e", n),
        relations: Vec::new(),
        roots,
        ships_positive: true,
    }
}

fn e8_roots() -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = pm_pairs(8, 0, 8).iter().map(|v| ints(v)).collect();
    for s in signs(8) {
        if s.iter().filter(|&&x| x < 0).count() % 2 == 0 {
            out.push(s.iter().map(|&x| Scalar::ratio(x, 2)).collect());
        }
    }
    out
}

fn type_e8() -> RawSystem {
    RawSystem {
        generators: names("e", 8),
        relations: Vec::new(),
        roots: e8_roots().into_iter().map(|v| (v, Parity::Even)).collect(),
        ships_positive: true,
    }
}

/// E7 (one relation) or E6 (two relations) as the E8 roots orthogonal to
/// `e7 + e8` and `e6 + e7`.
fn type_e_sub(k: usize) -> RawSystem {
    let thetas = [
        ints(&[0, 0, 0, 0, 0, 0, 1, 1]),
        ints(&[0, 0, 0, 0, 0, 1, 1, 0]),
    ];
    let relations: Vec<Vec<Scalar>> = thetas[..k].to_vec();
    let dot = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).fold(Scalar::zero(), |s, (x, y)| s + x * y);
    let roots = e8_roots()
        .into_iter()
        .filter(|r| relations.iter().all(|t| dot(r, t).is_zero()))
        .map(|v| (v, Parity::Even))
        .collect();
    RawSystem {
        generators: names("e", 8),
        relations,
        roots,
        ships_positive: true,
    }
}

fn type_f4() -> RawSystem {
    let mut roots: Vec<_> = pm_pairs(4, 0, 4).into_iter().map(even).collect();
    for i in 0..4 {
        for s in [1, -1] {
            roots.push(even(unit(4, i, s)));
        }
    }
    for s in signs(4) {
        roots.push((s.iter().map(|&x| Scalar::ratio(x, 2)).collect(), Parity::Even));
    }
    RawSystem {
        generators: names("e", 4),
        relations: Vec::new(),
        roots,
        ships_positive: true,
    }
}

fn type_g2() -> RawSystem {
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let mut v = vec![0; 3];
            v[i] = 1;
            v[j] = -1;
            roots.push(even(v));
        }
        for s in [1, -1] {
            let v: Vec<i64> = (0..3).map(|j| if j == i { 2 * s } else { -s }).collect();
            roots.push(even(v));
        }
    }
    RawSystem {
        generators: names("e", 3),
        relations: vec![ints(&[1, 1, 1])],
        roots,
        ships_positive: true,
    }
}

#[derive(Clone, Copy, PartialEq)]
enum GlQuotient {
    None,
    SupertraceOnly,
    Both,
}

fn type_gl(m: usize, n: usize, q: GlQuotient) -> RawSystem {
    let dim = m + n;
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let mut v = vec![0; dim];
            v[i] = 1;
            v[j] = -1;
            let parity = (i < m) != (j < m);
            roots.push(if parity { odd(v) } else { even(v) });
        }
    }
    let eps: Vec<i64> = (0..dim).map(|i| i64::from(i < m)).collect();
    let tau: Vec<i64> = (0..dim).map(|i| i64::from(i >= m)).collect();
    let relations = match q {
        GlQuotient::None => Vec::new(),
        GlQuotient::SupertraceOnly => {
            vec![ints(&eps.iter().zip(&tau).map(|(a, b)| a - b).collect::<Vec<_>>())]
        }
        GlQuotient::Both => vec![ints(&eps), ints(&tau)],
    };
    let mut generators = names("e", m);
    generators.extend(names("t", n));
    RawSystem {
        generators,
        relations,
        roots,
        ships_positive: q != GlQuotient::Both,
    }
}

fn type_osp(m: usize, n: usize) -> RawSystem {
    let l = m / 2;
    let dim = l + n;
    let mut roots: Vec<_> = pm_pairs(dim, 0, l).into_iter().map(even).collect();
    roots.extend(pm_pairs(dim, l, n).into_iter().map(even));
    for j in 0..n {
        for s in [1, -1] {
            roots.push(even(unit(dim, l + j, 2 * s)));
        }
    }
    for i in 0..l {
        for j in 0..n {
            for s in signs(2) {
                let mut v = vec![0; dim];
                v[i] = s[0];
                v[l + j] = s[1];
                roots.push(odd(v));
            }
        }
    }
    if m % 2 == 1 {
        for i in 0..l {
            for s in [1, -1] {
                roots.push(even(unit(dim, i, s)));
            }
        }
        for j in 0..n {
            for s in [1, -1] {
                roots.push(odd(unit(dim, l + j, s)));
            }
        }
    }
    let mut generators = names("e", l);
    generators.extend(names("t", n));
    RawSystem {
        generators,
        relations: Vec::new(),
        roots,
        ships_positive: true,
    }
}

fn type_d21() -> RawSystem {
    let mut roots = Vec::new();
    for i in 0..3 {
        for s in [2, -2] {
            roots.push(even(unit(3, i, s)));
        }
    }
    for s in signs(3) {
        roots.push(odd(s));
    }
    RawSystem {
        generators: names("e", 3),
        relations: Vec::new(),
        roots,
        ships_positive: true,
    }
}

fn type_super_f4() -> RawSystem {
    let mut roots: Vec<_> = pm_pairs(4, 0, 3).into_iter().map(even).collect();
    for i in 0..3 {
        for s in [1, -1] {
            roots.push(even(unit(4, i, s)));
        }
    }
    for s in [1, -1] {
        roots.push(even(unit(4, 3, s)));
    }
    for s in signs(4) {
        roots.push((s.iter().map(|&x| Scalar::ratio(x, 2)).collect(), Parity::Odd));
    }
    let mut generators = names("e", 3);
    generators.push("d".into());
    RawSystem {
        generators,
        relations: Vec::new(),
        roots,
        ships_positive: true,
    }
}

fn type_super_g3() -> RawSystem {
    // ε-parts are written as sum-zero representatives, scaled by 3
    let third = |v: [i64; 4]| -> Vec<Scalar> { v.iter().map(|&x| Scalar::ratio(x, 3)).collect() };
    let short = |i: usize, s: i64| -> [i64; 3] {
        let mut e = [-s; 3];
        e[i] = 2 * s;
        e
    };
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut v = [0; 4];
                v[i] = 3;
                v[j] = -3;
                roots.push((third(v), Parity::Even));
            }
        }
        for s in [1, -1] {
            let e = short(i, s);
            roots.push((third([e[0], e[1], e[2], 0]), Parity::Even));
            for t in [3, -3] {
                roots.push((third([e[0], e[1], e[2], t]), Parity::Odd));
            }
        }
    }
    for s in [1, -1] {
        roots.push((third([0, 0, 0, 6 * s]), Parity::Even));
        roots.push((third([0, 0, 0, 3 * s]), Parity::Odd));
    }
    let mut generators = names("e", 3);
    generators.push("d".into());
    RawSystem {
        generators,
        relations: vec![ints(&[1, 1, 1, 0])],
        roots,
        ships_positive: true,
    }
}

/// `{0, ±1}^l \ {0}` with `l = floor(n/2)`; parity is the number of nonzero
/// entries mod 2.
fn type_h(n: usize) -> RawSystem {
    let l = n / 2;
    let mut roots = Vec::new();
    let total = 3usize.pow(l as u32);
    for code in 0..total {
        let mut c = code;
        let mut v = vec![0i64; l];
        for x in v.iter_mut() {
            *x = (c % 3) as i64 - 1;
            c /= 3;
        }
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let nz = v.iter().filter(|&&x| x != 0).count();
        roots.push(if nz % 2 == 1 { odd(v) } else { even(v) });
    }
    RawSystem {
        generators: names("e", l),
        relations: Vec::new(),
        roots,
        ships_positive: false,
    }
}

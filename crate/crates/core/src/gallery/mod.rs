//! Named constructions: the H(n) and psl(m|m) subsets that are parabolic but
//! not strongly parabolic, the gl(m|m) image description, and enumeration.

mod enumerate;

use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate_parabolic, parabolic_subsets, search_parabolic, Mode, ENUMERATION_LIMIT};

use crate::error::{Error, Result};
use crate::exactlin::{in_span, Covector, Scalar, Vector};
use crate::parabolic::{classify, is_parabolic, principal_witness, triangular, Verdict};
use crate::rootsys::{Family, RootSubset, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub system: String,
    pub subset: RootSubset,
    pub verdict: Verdict,
    pub checks: Vec<NamedCheck>,
}

impl CounterexampleReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.ok)
    }
}

fn check(name: &str, ok: bool) -> NamedCheck {
    NamedCheck {
        name: name.into(),
        ok,
    }
}

/// Height-zero roots added to the prefix-sum part of the H(10) subset.
pub const H10_SPECIAL: [[i64; 5]; 5] = [
    [-1, 1, 1, -1, 0],
    [-1, 1, 1, 0, -1],
    [-1, 1, 0, 1, -1],
    [-1, 0, 1, 1, -1],
    [0, -1, 1, 1, -1],
];

fn in_h10_subset(k: &[i64]) -> bool {
    let hgt: i64 = k.iter().sum();
    if hgt > 0 {
        return true;
    }
    if hgt < 0 {
        return false;
    }
    let mut prefix = 0;
    let prefixes_ok = k[..4].iter().all(|&x| {
        prefix += x;
        prefix >= 0
    });
    prefixes_ok || H10_SPECIAL.iter().any(|s| s[..] == k[..])
}

fn int_coords(v: &Vector) -> Vec<i64> {
    v.coords().iter().map(|x| x.to_i64().expect("integer root")).collect()
}

/// The subset of H(10) built from height and prefix sums, or its preimage
/// under truncation to the first five coordinates for larger `n`.
pub fn h_subset(sys: &RootSystem) -> RootSubset {
    RootSubset::filter(sys, |r| {
        let k = int_coords(&r.vec);
        let head = &k[..5];
        head.iter().all(|&x| x == 0) || in_h10_subset(head)
    })
}

pub fn h_counterexample(n: usize) -> Result<CounterexampleReport> {
    if n < 10 {
        return Err(Error::InvalidParams(format!("H(n) counterexample needs n >= 10, got {n}")));
    }
    let sys = RootSystem::finite(Family::H(n))?;
    let p = h_subset(&sys);
    let verdict = classify(&sys, &p)?;
    let mut checks = vec![check("parabolic", is_parabolic(&sys, &p).is_ok())];
    let special: Vec<Vector> = H10_SPECIAL
        .iter()
        .map(|s| {
            let mut v = s.to_vec();
            v.resize(sys.dim(), 0);
            Vector::from_ints(&v)
        })
        .collect();
    if let Verdict::ParabolicNotStronglyParabolic { obstruction } = &verdict {
        let forced: Vec<Vector> = obstruction.forced(0).iter().map(|&i| sys.vector(i).clone()).collect();
        checks.push(check("five-roots-forced-at-level-1", special.iter().all(|s| forced.contains(s))));
        let gens: Vec<Vec<Scalar>> = forced.iter().map(|v| v.0.clone()).collect();
        let equal_weights = (0..4).all(|i| {
            let mut d = vec![0; sys.dim()];
            d[i] = 1;
            d[i + 1] = -1;
            in_span(&gens, Vector::from_ints(&d).coords())
        });
        checks.push(check("level-1-forces-equal-weights", equal_weights));
        checks.push(check("collapse-at-level-2", obstruction.levels.len() == 2));
    } else {
        checks.push(check("not-strongly-parabolic", false));
    }
    if n / 2 == 5 {
        checks.push(check("matches-definition-root-for-root", h10_matches_definition(&sys, &p)));
    }
    Ok(CounterexampleReport {
        system: sys.name().to_string(),
        subset: p,
        verdict,
        checks,
    })
}

/// Independent transcription of the H(10) subset by explicit enumeration of
/// the exponent vectors.
fn h10_matches_definition(sys: &RootSystem, p: &RootSubset) -> bool {
    let mut count = 0;
    for code in 0..243u32 {
        let mut c = code;
        let k: Vec<i64> = (0..5)
            .map(|_| {
                let x = (c % 3) as i64 - 1;
                c /= 3;
                x
            })
            .collect();
        if k.iter().all(|&x| x == 0) {
            continue;
        }
        let hgt: i64 = k.iter().sum();
        let p0 = hgt == 0
            && k[0] >= 0
            && k[0] + k[1] >= 0
            && k[0] + k[1] + k[2] >= 0
            && k[0] + k[1] + k[2] + k[3] >= 0;
        let member = hgt > 0 || p0 || H10_SPECIAL.contains(&[k[0], k[1], k[2], k[3], k[4]]);
        let Some(id) = sys.find(&Vector::from_ints(&k)) else {
            return false;
        };
        if p.contains(id) != member {
            return false;
        }
        count += 1;
    }
    count == sys.len()
}

/// `(e_i - e_j), (t_i - t_j)` for `i < j` and `e_i - t_j` for all `i, j`, in
/// raw coordinates of gl(m|m).
fn psl_subset_raw(m: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let diff = |a: usize, b: usize| {
        let mut v = vec![0; 2 * m];
        v[a] = 1;
        v[b] = -1;
        v
    };
    for i in 0..m {
        for j in i + 1..m {
            out.push(diff(i, j));
            out.push(diff(m + i, m + j));
        }
        for j in 0..m {
            out.push(diff(i, m + j));
        }
    }
    out
}

/// The roots of the zero-sum chain with coefficients `1, 2, …, m, …, 2, 1`.
fn psl_chain_raw(m: usize) -> Vec<(i64, Vec<i64>)> {
    let diff = |a: usize, b: usize| {
        let mut v = vec![0; 2 * m];
        v[a] = 1;
        v[b] = -1;
        v
    };
    let mut out = Vec::new();
    for i in 0..m - 1 {
        out.push((i as i64 + 1, diff(i, i + 1)));
    }
    out.push((m as i64, diff(m - 1, m)));
    for i in 0..m - 1 {
        out.push(((m - 1 - i) as i64, diff(m + i, m + i + 1)));
    }
    out
}

pub fn psl_subset(sys: &RootSystem, m: usize) -> Result<RootSubset> {
    let ids = psl_subset_raw(m)
        .iter()
        .map(|r| {
            let v = sys.space().project_ints(r)?;
            sys.find(&v).ok_or_else(|| Error::SelfCheck(format!("{v} is not a root")))
        })
        .collect::<Result<Vec<_>>>()?;
    RootSubset::new(sys, ids)
}

pub fn psl_counterexample(m: usize) -> Result<CounterexampleReport> {
    if m < 3 {
        return Err(Error::InvalidParams(format!("psl(m|m) counterexample needs m >= 3, got {m}")));
    }
    let sys = RootSystem::finite(Family::Psl(m))?;
    let p = psl_subset(&sys, m)?;
    let verdict = classify(&sys, &p)?;
    let mut checks = vec![check("parabolic", verdict.is_parabolic())];
    checks.push(check("not-strongly-parabolic", !verdict.is_strongly_parabolic()));

    let chain = psl_chain_raw(m);
    let mut total = Vector::zero(sys.dim());
    let mut chain_in_strict_part = true;
    for (c, r) in &chain {
        let v = sys.space().project_ints(r)?;
        total = total.add(&v.scale(&Scalar::from_int(*c)));
        let id = sys.find(&v).expect("chain roots are roots");
        chain_in_strict_part &= p.contains(id) && !p.contains(sys.neg(id));
    }
    checks.push(check("chain-sums-to-zero", total.is_zero()));
    checks.push(check("chain-in-P-minus-negative", chain_in_strict_part));

    let sl = RootSystem::finite(Family::SlSquare(m))?;
    let sl_p = psl_subset(&sl, m)?;
    let sl_verdict = classify(&sl, &sl_p)?;
    checks.push(check("sl-subset-not-strongly-parabolic", !sl_verdict.is_strongly_parabolic()));

    let image_ok = match gl_preimage_witness(m, &sys, &p)? {
        Some(lambda) => psl_from_gl_image(m, &lambda).map(|img| img == p).unwrap_or(false),
        None => false,
    };
    checks.push(check("image-of-principal-gl-subset", image_ok));
    Ok(CounterexampleReport {
        system: sys.name().to_string(),
        subset: p,
        verdict,
        checks,
    })
}

/// A principal functional on gl(m|m) whose set maps onto `p`, found by
/// solving the principal sign system of the preimage.
pub fn gl_preimage_witness(m: usize, psl: &RootSystem, p: &RootSubset) -> Result<Option<Covector>> {
    let gl = RootSystem::finite(Family::Gl(m))?;
    let pre = RootSubset::filter(&gl, |r| {
        let img = psl.space().project(r.vec.coords()).expect("same raw coordinates");
        psl.find(&img).is_some_and(|id| p.contains(id))
    });
    Ok(principal_witness(&gl, &pre)?.ok())
}

/// Image in psl(m|m) of the principal subset of gl(m|m) cut out by `lambda`.
pub fn psl_from_gl_image(m: usize, lambda: &Covector) -> Result<RootSubset> {
    let gl = RootSystem::finite(Family::Gl(m))?;
    let psl = RootSystem::finite(Family::Psl(m))?;
    let t = triangular(&gl, lambda)?;
    let mut ids = Vec::new();
    for &i in t.zero.iter().chain(&t.plus) {
        let img = psl.space().project(gl.vector(i).coords())?;
        ids.push(psl.find(&img).ok_or_else(|| Error::SelfCheck(format!("image {img} is not a root")))?);
    }
    let image = RootSubset::new(&psl, ids)?;
    if is_parabolic(&psl, &image).is_err() {
        return Err(Error::NotParabolicInput);
    }
    Ok(image)
}

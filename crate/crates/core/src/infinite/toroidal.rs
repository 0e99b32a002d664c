use serde::{Deserialize, Serialize};

use super::{principal_on, real_parts, require_window};
use crate::conesolve::{relative_interior, solve_inequalities, SignProblem, Solve};
use crate::error::{Error, Result};
use crate::exactlin::{solve, Covector, Scalar};
use crate::parabolic::greedy::greedy_on;
use crate::parabolic::{is_parabolic, WitnessChain};
use crate::rootsys::{build_toroidal, Kind, RootSubset, RootSystem};

/// How one level of the witness was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ToroidalCase {
    /// `P` is the whole system.
    Full,
    /// Some real coset lies inside `P`; the cosets meeting `P` give a principal
    /// subset of the base and the functional vanishes on the lattice.
    CosetInside,
    /// Every coset meets `P` and the lattice functional has image `Zη`.
    LatticeFold,
    /// Every coset meets `P` and the lattice functional has dense image; the
    /// real part is the negated window minimum along each coset.
    DenseImage,
}

/// Intermediate sets of the first level.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToroidalData {
    /// Base roots whose coset meets `P`, when some coset lies inside `P`.
    pub cosets_meeting: Option<Vec<usize>>,
    /// Lattice roots in `P`.
    pub lattice_part: Vec<usize>,
    /// Functional on the lattice coordinates, when every coset meets `P`.
    pub lattice_functional: Option<Covector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToroidalReport {
    pub window: u32,
    pub stable_window: u32,
    /// One entry per level derived from the coset analysis; later levels come
    /// from the generic minimal-kernel recursion.
    pub cases: Vec<ToroidalCase>,
    pub chain: WitnessChain,
    pub data: ToroidalData,
}

impl ToroidalReport {
    pub fn case(&self) -> ToroidalCase {
        self.cases[0]
    }
}

fn toroidal_base(sys: &RootSystem) -> Result<&RootSystem> {
    match sys.kind() {
        Kind::Toroidal { .. } => Ok(sys.base_system().expect("toroidal systems carry their base")),
        _ => Err(Error::InvalidParams(format!("{} is not a toroidal system", sys.name()))),
    }
}

/// A witness chain for a parabolic subset of a truncated toroidal system.
///
/// `hint` is a functional on the lattice coordinates, possibly with entries in
/// one quadratic field; when it is given and separates `P ∩ Γ` it replaces the
/// rational separating functional, which is the only way the dense branch is
/// reached at a finite window.
pub fn toroidal_witness(sys: &RootSystem, p: &RootSubset, hint: Option<&Covector>) -> Result<ToroidalReport> {
    let base = toroidal_base(sys)?;
    let window = require_window(sys)?;
    if let Some(h) = hint {
        check_hint(sys, h)?;
    }
    let (cases, data, chain) = derive(sys, p, hint)?;

    let wider = window + 2;
    let unstable = Error::UnstableAtWindow { window, wider };
    let wide = build_toroidal(base, sys.lattice_rank(), wider)?;
    let p_wide = chain.subset(&wide);
    if is_parabolic(&wide, &p_wide).is_err() {
        return Err(unstable);
    }
    let (cases_wide, _, chain_wide) = derive(&wide, &p_wide, hint)?;
    if cases_wide != cases {
        return Err(unstable);
    }
    if cases[0] == ToroidalCase::DenseImage && chain_wide.chain[0] != chain.chain[0] {
        return Err(unstable);
    }
    Ok(ToroidalReport {
        window,
        stable_window: wider,
        cases,
        chain,
        data,
    })
}

fn check_hint(sys: &RootSystem, h: &Covector) -> Result<()> {
    let n = sys.lattice_rank();
    if h.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: h.dim(),
        });
    }
    let mut fields: Vec<u32> = h.coords().iter().filter_map(Scalar::field).collect();
    fields.dedup();
    if fields.len() > 1 {
        return Err(Error::UnsupportedScalarField(format!(
            "lattice functional mixes Q(sqrt {}) and Q(sqrt {})",
            fields[0], fields[1]
        )));
    }
    if h.is_zero() {
        return Err(Error::InvalidParams("lattice functional must be nonzero".into()));
    }
    Ok(())
}

struct Layout {
    bd: usize,
    /// Root ids of `α + Γ`, per base root `α`.
    cosets: Vec<Vec<usize>>,
    lattice: Vec<usize>,
}

impl Layout {
    fn new(sys: &RootSystem, base: &RootSystem) -> Layout {
        let mut cosets = vec![Vec::new(); base.len()];
        let mut lattice = Vec::new();
        for (id, real) in real_parts(sys).into_iter().enumerate() {
            match real {
                Some(a) => cosets[a].push(id),
                None => lattice.push(id),
            }
        }
        Layout {
            bd: base.dim(),
            cosets,
            lattice,
        }
    }

    fn level(&self, real: &[usize]) -> Vec<usize> {
        let mut ids: Vec<usize> = real.iter().flat_map(|&a| self.cosets[a].iter().copied()).collect();
        ids.extend(&self.lattice);
        ids.sort_unstable();
        ids
    }

    fn lattice_coords(&self, sys: &RootSystem, id: usize) -> Vec<Scalar> {
        sys.vector(id).coords()[self.bd..].to_vec()
    }
}

fn pair(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + &(x * y))
}

/// Positive rescaling to the first nonzero entry's absolute value, then to a
/// primitive integer vector when the result is rational.
fn lattice_normalize(l: &Covector) -> Covector {
    let first = l.coords().iter().find(|x| !x.is_zero()).expect("nonzero functional").abs();
    let scaled = l.scale(&first.recip());
    if scaled.is_rational() {
        scaled.normalized()
    } else {
        l.clone()
    }
}

fn derive(
    sys: &RootSystem,
    p: &RootSubset,
    hint: Option<&Covector>,
) -> Result<(Vec<ToroidalCase>, ToroidalData, WitnessChain)> {
    sys.check_subset(p)?;
    if is_parabolic(sys, p).is_err() {
        return Err(Error::NotParabolicInput);
    }
    let base = toroidal_base(sys)?;
    let lay = Layout::new(sys, base);
    let mut data = ToroidalData {
        lattice_part: lay.lattice.iter().copied().filter(|&i| p.contains(i)).collect(),
        ..ToroidalData::default()
    };
    if p.len() == sys.len() {
        return Ok((vec![ToroidalCase::Full], data, WitnessChain::default()));
    }

    let mut real: Vec<usize> = base.ids().collect();
    let mut chain = Vec::new();
    let mut cases = Vec::new();
    loop {
        let level = lay.level(&real);
        if level.iter().all(|&i| p.contains(i)) {
            break;
        }
        if real.iter().any(|&a| lay.cosets[a].iter().all(|&i| p.contains(i))) {
            let s: Vec<usize> = real
                .iter()
                .copied()
                .filter(|&a| lay.cosets[a].iter().any(|&i| p.contains(i)))
                .collect();
            if cases.is_empty() {
                data.cosets_meeting = Some(s.clone());
            }
            let s = RootSubset::new(base, s)?;
            check_parabolic_within(base, &s, &real)?;
            let ls = principal_on(base, &s, &real)
                .ok_or_else(|| Error::NoWitness("cosets meeting P are not principal in the base".into()))?;
            if ls.is_zero() {
                return Err(Error::SelfCheck("every coset meets P although one lies inside it".into()));
            }
            let mut coords = ls.0.clone();
            coords.extend((0..sys.lattice_rank()).map(|_| Scalar::zero()));
            chain.push(Covector(coords).normalized());
            cases.push(ToroidalCase::CosetInside);
            real.retain(|&a| ls.pair(base.vector(a)).is_zero());
            continue;
        }

        let (lambda, case) = lattice_step(sys, p, &lay, &real, &level, hint)?;
        if cases.is_empty() {
            data.lattice_functional = Some(Covector(lambda.coords()[lay.bd..].to_vec()));
        }
        if level.iter().any(|&i| p.contains(i) && lambda.pair(sys.vector(i)).is_negative()) {
            return Err(Error::SelfCheck("lattice-step functional is negative on P".into()));
        }
        let rest: Vec<usize> = level.into_iter().filter(|&i| lambda.pair(sys.vector(i)).is_zero()).collect();
        chain.push(lambda);
        cases.push(case);
        let more = greedy_on(sys, p, rest)
            .map_err(|_| Error::SelfCheck("zero set of the lattice step is not strongly parabolic".into()))?;
        chain.extend(more);
        break;
    }
    let chain = WitnessChain { chain };
    if !chain.describes(sys, p) {
        return Err(Error::SelfCheck("toroidal chain does not cut out P".into()));
    }
    Ok((cases, data, chain))
}

fn check_parabolic_within(base: &RootSystem, s: &RootSubset, real: &[usize]) -> Result<()> {
    let bad = || Error::SelfCheck("cosets meeting P do not form a parabolic set".into());
    for &a in real {
        if !s.contains(a) && !s.contains(base.neg(a)) {
            return Err(bad());
        }
        for &b in real {
            if s.contains(a) && s.contains(b) {
                if let Some(c) = base.sum(a, b) {
                    if !s.contains(c) {
                        return Err(bad());
                    }
                }
            }
        }
    }
    Ok(())
}

/// The level functional when every coset of `real` meets `P`.
fn lattice_step(
    sys: &RootSystem,
    p: &RootSubset,
    lay: &Layout,
    real: &[usize],
    level: &[usize],
    hint: Option<&Covector>,
) -> Result<(Covector, ToroidalCase)> {
    let base = sys.base_system().expect("toroidal systems carry their base");
    let lam_u = match hint {
        Some(h) => {
            let separates = lay
                .lattice
                .iter()
                .filter(|&&i| p.contains(i))
                .all(|&i| !pair(h.coords(), &lay.lattice_coords(sys, i)).is_negative());
            if !separates {
                return Err(Error::NoWitness("lattice functional is negative on P ∩ Γ".into()));
            }
            h.clone()
        }
        None => {
            let mut prob = SignProblem::new(sys.dim());
            prob.nonneg = level.iter().filter(|&&i| p.contains(i)).map(|&i| sys.vector(i).clone()).collect();
            let pt = relative_interior(&prob);
            Covector(pt.lambda.coords()[lay.bd..].to_vec())
        }
    };
    if lam_u.is_zero() {
        return Err(Error::SelfCheck("every coset meets P but no functional is nonzero on the lattice".into()));
    }
    let lam_u = lattice_normalize(&lam_u);
    let dense = !lam_u.is_rational();

    let mut rows = Vec::with_capacity(real.len());
    let mut bounds = Vec::with_capacity(real.len());
    for &a in real {
        let low = lay.cosets[a]
            .iter()
            .filter(|&&i| p.contains(i))
            .map(|&i| pair(lam_u.coords(), &lay.lattice_coords(sys, i)))
            .min()
            .ok_or_else(|| Error::SelfCheck("a coset misses P".into()))?;
        rows.push(base.vector(a).0.clone());
        bounds.push(-low);
    }
    let mu = if dense {
        let window = sys.window().expect("toroidal systems have a window");
        solve(&rows, &bounds, lay.bd).ok_or(Error::UnstableAtWindow {
            window,
            wider: window + 2,
        })?
    } else {
        match solve_inequalities(&rows, &bounds, lay.bd) {
            Solve::Point(x) => x,
            Solve::Farkas(_) => return Err(Error::NoWitness("the folded set has no affine witness".into())),
        }
    };
    let mut coords = mu;
    coords.extend(lam_u.0);
    let case = if dense {
        ToroidalCase::DenseImage
    } else {
        ToroidalCase::LatticeFold
    };
    Ok((Covector(coords), case))
}

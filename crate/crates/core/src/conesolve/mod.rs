//! Exact linear feasibility for homogeneous sign systems: strict separation and
//! relative-interior points of polyhedral cones, with Farkas certificates for
//! every negative answer.

mod fourier_motzkin;
mod simplex;

use serde::{Deserialize, Serialize};

pub use fourier_motzkin::fm_feasible;
pub use simplex::{solve_inequalities, Solve};

use crate::exactlin::{in_span, nullspace, Covector, Scalar, Vector};

/// Constraints on a covector `l`: `<l,v> = 0` on `zero`, `>= 0` on `nonneg`,
/// `> 0` on `strict_pos`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SignProblem {
    pub dim: usize,
    pub zero: Vec<Vector>,
    pub nonneg: Vec<Vector>,
    pub strict_pos: Vec<Vector>,
}

/// Coefficients `y >= 0` on the nonneg and strict constraints with
/// `sum y_j v_j` in the span of the zero constraints and a positive total
/// weight on the strict ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FarkasCertificate {
    pub nonneg: Vec<Scalar>,
    pub strict: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum StrictOutcome {
    Feasible(Covector),
    Infeasible(FarkasCertificate),
}

impl StrictOutcome {
    pub fn feasible(&self) -> Option<&Covector> {
        match self {
            StrictOutcome::Feasible(l) => Some(l),
            StrictOutcome::Infeasible(_) => None,
        }
    }
}

/// A relative-interior point of `{l : zero, nonneg}` together with the nonneg
/// constraints that vanish on the whole cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConePoint {
    pub lambda: Covector,
    /// Indices into `nonneg` of the constraints that are zero on the entire cone.
    pub forced_zero: Vec<usize>,
    /// Nonnegative weights on `nonneg`, positive exactly on `forced_zero`, whose
    /// combination lies in the span of the zero constraints.
    pub zero_combination: Vec<Scalar>,
}

impl SignProblem {
    pub fn new(dim: usize) -> Self {
        SignProblem {
            dim,
            ..Default::default()
        }
    }

    fn check_dims(&self) {
        for v in self.zero.iter().chain(&self.nonneg).chain(&self.strict_pos) {
            assert_eq!(v.dim(), self.dim, "sign problem vectors must share dimension");
        }
    }

    /// Exact check of a candidate functional.
    pub fn satisfied_by(&self, l: &Covector) -> bool {
        self.zero.iter().all(|v| l.pair(v).is_zero())
            && self.nonneg.iter().all(|v| !l.pair(v).is_negative())
            && self.strict_pos.iter().all(|v| l.pair(v).is_positive())
    }

    /// Checks a Farkas certificate against this problem.
    pub fn refuted_by(&self, cert: &FarkasCertificate) -> bool {
        if cert.nonneg.len() != self.nonneg.len() || cert.strict.len() != self.strict_pos.len() {
            return false;
        }
        if cert.nonneg.iter().chain(&cert.strict).any(Scalar::is_negative) {
            return false;
        }
        let weight = cert.strict.iter().fold(Scalar::zero(), |a, y| a + y);
        if !weight.is_positive() {
            return false;
        }
        let mut combo = Vector::zero(self.dim);
        for (v, y) in self
            .nonneg
            .iter()
            .zip(&cert.nonneg)
            .chain(self.strict_pos.iter().zip(&cert.strict))
        {
            if !y.is_zero() {
                combo = combo.add(&v.scale(y));
            }
        }
        let gens: Vec<Vec<Scalar>> = self.zero.iter().map(|v| v.0.clone()).collect();
        in_span(&gens, combo.coords())
    }
}

/// Decides whether some covector satisfies all constraints with strictness
/// on `strict_pos`; strictness is homogenized to `>= 1`.
pub fn strict_feasible(p: &SignProblem) -> StrictOutcome {
    p.check_dims();
    let zero_rows: Vec<Vec<Scalar>> = p.zero.iter().map(|v| v.0.clone()).collect();
    let basis = nullspace(&zero_rows, p.dim);
    if basis.is_empty() {
        if p.strict_pos.is_empty() {
            return StrictOutcome::Feasible(Covector::zero(p.dim));
        }
        let mut strict = vec![Scalar::zero(); p.strict_pos.len()];
        strict[0] = Scalar::one();
        return StrictOutcome::Infeasible(FarkasCertificate {
            nonneg: vec![Scalar::zero(); p.nonneg.len()],
            strict,
        });
    }
    let reduce = |v: &Vector| -> Vec<Scalar> {
        basis
            .iter()
            .map(|b| Covector(b.clone()).pair(v))
            .collect()
    };
    let mut rows = Vec::with_capacity(p.nonneg.len() + p.strict_pos.len());
    let mut rhs = Vec::with_capacity(rows.capacity());
    for v in &p.nonneg {
        rows.push(reduce(v));
        rhs.push(Scalar::zero());
    }
    for v in &p.strict_pos {
        rows.push(reduce(v));
        rhs.push(Scalar::one());
    }
    match solve_inequalities(&rows, &rhs, basis.len()) {
        Solve::Point(mu) => {
            let mut l = vec![Scalar::zero(); p.dim];
            for (m, b) in mu.iter().zip(&basis) {
                if m.is_zero() {
                    continue;
                }
                for (x, bi) in l.iter_mut().zip(b) {
                    *x = &*x + &(m * bi);
                }
            }
            let l = Covector(l).normalized();
            assert!(p.satisfied_by(&l), "simplex returned an infeasible point");
            StrictOutcome::Feasible(l)
        }
        Solve::Farkas(y) => {
            let n = p.nonneg.len();
            let cert = FarkasCertificate {
                nonneg: y[..n].to_vec(),
                strict: y[n..].to_vec(),
            };
            debug_assert!(p.refuted_by(&cert));
            StrictOutcome::Infeasible(cert)
        }
    }
}

/// Relative-interior point of the cone cut out by `zero` and `nonneg`
/// (`strict_pos` is ignored). Achievability of each nonneg constraint is tested
/// in order; the returned point is the normalized sum of the achieving points.
pub fn relative_interior(p: &SignProblem) -> ConePoint {
    p.check_dims();
    let n = p.nonneg.len();
    let mut achieved = vec![false; n];
    let mut combination = vec![Scalar::zero(); n];
    let mut sum = Covector::zero(p.dim);
    for i in 0..n {
        if achieved[i] || combination[i].is_positive() {
            continue;
        }
        let mut sub = SignProblem::new(p.dim);
        sub.zero = p.zero.clone();
        let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        sub.nonneg = others.iter().map(|&j| p.nonneg[j].clone()).collect();
        sub.strict_pos = vec![p.nonneg[i].clone()];
        match strict_feasible(&sub) {
            StrictOutcome::Feasible(l) => {
                for (j, v) in p.nonneg.iter().enumerate() {
                    if l.pair(v).is_positive() {
                        achieved[j] = true;
                    }
                }
                sum = sum.add(&l);
            }
            StrictOutcome::Infeasible(cert) => {
                combination[i] = &combination[i] + &cert.strict[0];
                for (k, &j) in others.iter().enumerate() {
                    combination[j] = &combination[j] + &cert.nonneg[k];
                }
            }
        }
    }
    let forced_zero: Vec<usize> = (0..n).filter(|&i| !achieved[i]).collect();
    debug_assert!(forced_zero.iter().all(|&i| combination[i].is_positive()));
    debug_assert!((0..n).all(|i| !achieved[i] || combination[i].is_zero()));
    ConePoint {
        lambda: sum.normalized(),
        forced_zero,
        zero_combination: combination,
    }
}

/// Re-checks a relative-interior claim: `lambda` is in the cone, positive off
/// `forced_zero`, and the combination proves the forced constraints vanish.
pub fn verify_cone_point(p: &SignProblem, point: &ConePoint) -> bool {
    let n = p.nonneg.len();
    if point.zero_combination.len() != n {
        return false;
    }
    if !p.zero.iter().all(|v| point.lambda.pair(v).is_zero()) {
        return false;
    }
    for i in 0..n {
        let val = point.lambda.pair(&p.nonneg[i]);
        let forced = point.forced_zero.contains(&i);
        let c = &point.zero_combination[i];
        if c.is_negative() || forced != c.is_positive() {
            return false;
        }
        if forced && !val.is_zero() || !forced && !val.is_positive() {
            return false;
        }
    }
    let mut combo = Vector::zero(p.dim);
    for (v, c) in p.nonneg.iter().zip(&point.zero_combination) {
        if !c.is_zero() {
            combo = combo.add(&v.scale(c));
        }
    }
    let gens: Vec<Vec<Scalar>> = p.zero.iter().map(|v| v.0.clone()).collect();
    in_span(&gens, combo.coords())
}

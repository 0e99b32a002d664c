//! Parabolic, strongly parabolic and principal subsets, with certificates.

pub(crate) mod greedy;
mod oracle;
mod principal;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

pub use greedy::{verify_obstruction, Obstruction, ObstructionLevel};
pub use oracle::{oracle_strongly_parabolic, ORACLE_LIMIT};
pub use principal::principal_problem;

use crate::conesolve::{strict_feasible, FarkasCertificate, StrictOutcome};
use crate::error::{Error, Result};
use crate::exactlin::Covector;
use crate::rootsys::{RootSubset, RootSystem};

/// Why a subset is not parabolic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Violation {
    /// Neither `root` nor its negative is in `P`.
    MissingLine { root: usize, negative: usize },
    /// `a, b ∈ P` but the root `a + b` is not.
    NotClosed { a: usize, b: usize, sum: usize },
}

/// Sign partition of the roots by a functional.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangular {
    pub lambda: Covector,
    pub minus: Vec<usize>,
    pub zero: Vec<usize>,
    pub plus: Vec<usize>,
}

/// Functionals whose lexicographic sign vector cuts out `P`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WitnessChain {
    pub chain: Vec<Covector>,
}

impl WitnessChain {
    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign of the first nonzero pairing with `v`.
    pub fn lex_sign(&self, v: &crate::exactlin::Vector) -> Ordering {
        for l in &self.chain {
            let s = l.pair(v).signum();
            if s != Ordering::Equal {
                return s;
            }
        }
        Ordering::Equal
    }

    /// The set `{α : lex sign of α >= 0}`.
    pub fn subset(&self, sys: &RootSystem) -> RootSubset {
        RootSubset::filter(sys, |r| self.lex_sign(&r.vec) != Ordering::Less)
    }

    pub fn describes(&self, sys: &RootSystem, p: &RootSubset) -> bool {
        self.chain.iter().all(|l| l.dim() == sys.dim())
            && sys
                .roots()
                .iter()
                .all(|r| p.contains(r.id) == (self.lex_sign(&r.vec) != Ordering::Less))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "certificate")]
pub enum Verdict {
    NotParabolic {
        violation: Violation,
    },
    Principal {
        lambda: Covector,
    },
    StronglyParabolicNotPrincipal {
        chain: WitnessChain,
        principal_refutation: FarkasCertificate,
    },
    ParabolicNotStronglyParabolic {
        obstruction: Obstruction,
    },
}

impl Verdict {
    pub fn class(&self) -> &'static str {
        match self {
            Verdict::NotParabolic { .. } => "NotParabolic",
            Verdict::Principal { .. } => "Principal",
            Verdict::StronglyParabolicNotPrincipal { .. } => "StronglyParabolicNotPrincipal",
            Verdict::ParabolicNotStronglyParabolic { .. } => "ParabolicNotStronglyParabolic",
        }
    }

    pub fn is_parabolic(&self) -> bool {
        !matches!(self, Verdict::NotParabolic { .. })
    }

    pub fn is_strongly_parabolic(&self) -> bool {
        matches!(
            self,
            Verdict::Principal { .. } | Verdict::StronglyParabolicNotPrincipal { .. }
        )
    }

    pub fn is_principal(&self) -> bool {
        matches!(self, Verdict::Principal { .. })
    }
}

/// Checks `Δ = P ∪ -P` and closure; reports the first failure in id order.
pub fn is_parabolic(sys: &RootSystem, p: &RootSubset) -> std::result::Result<(), Violation> {
    for i in sys.ids() {
        let j = sys.neg(i);
        if !p.contains(i) && !p.contains(j) {
            return Err(Violation::MissingLine { root: i, negative: j });
        }
    }
    let members: Vec<usize> = p.ids().filter(|&i| i < sys.len()).collect();
    for (x, &a) in members.iter().enumerate() {
        for &b in &members[x..] {
            if let Some(s) = sys.sum(a, b) {
                if !p.contains(s) {
                    return Err(Violation::NotClosed { a, b, sum: s });
                }
            }
        }
    }
    Ok(())
}

pub fn check_violation(sys: &RootSystem, p: &RootSubset, v: &Violation) -> bool {
    let n = sys.len();
    match *v {
        Violation::MissingLine { root, negative } => {
            root < n && sys.neg(root) == negative && !p.contains(root) && !p.contains(negative)
        }
        Violation::NotClosed { a, b, sum } => {
            a < n && b < n && p.contains(a) && p.contains(b) && sys.sum(a, b) == Some(sum) && !p.contains(sum)
        }
    }
}

pub fn triangular(sys: &RootSystem, lambda: &Covector) -> Result<Triangular> {
    if lambda.dim() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            found: lambda.dim(),
        });
    }
    let (mut minus, mut zero, mut plus) = (Vec::new(), Vec::new(), Vec::new());
    for r in sys.roots() {
        match lambda.pair(&r.vec).signum() {
            Ordering::Less => minus.push(r.id),
            Ordering::Equal => zero.push(r.id),
            Ordering::Greater => plus.push(r.id),
        }
    }
    Ok(Triangular {
        lambda: lambda.clone(),
        minus,
        zero,
        plus,
    })
}

/// A functional with `P = Δ⁰ ⊔ Δ⁺`, or the Farkas certificate that none exists.
pub fn principal_witness(
    sys: &RootSystem,
    p: &RootSubset,
) -> Result<std::result::Result<Covector, FarkasCertificate>> {
    sys.check_subset(p)?;
    Ok(match strict_feasible(&principal_problem(sys, p)) {
        StrictOutcome::Feasible(l) => Ok(l),
        StrictOutcome::Infeasible(c) => Err(c),
    })
}

pub fn verify_principal(sys: &RootSystem, p: &RootSubset, lambda: &Covector) -> bool {
    lambda.dim() == sys.dim() && principal_problem(sys, p).satisfied_by(lambda)
}

pub fn verify_not_principal(sys: &RootSystem, p: &RootSubset, cert: &FarkasCertificate) -> bool {
    principal_problem(sys, p).refuted_by(cert)
}

/// Lexicographic witness for a parabolic `P`, or the level at which every
/// admissible functional is forced to vanish.
pub fn strongly_parabolic_witness(
    sys: &RootSystem,
    p: &RootSubset,
) -> Result<std::result::Result<WitnessChain, Obstruction>> {
    sys.check_subset(p)?;
    if is_parabolic(sys, p).is_err() {
        return Err(Error::NotParabolicInput);
    }
    let out = greedy::greedy(sys, p);
    match &out {
        Ok(chain) if !chain.describes(sys, p) => {
            return Err(Error::SelfCheck("greedy chain does not reproduce P".into()))
        }
        Err(obs) => {
            verify_obstruction(sys, p, obs).map_err(Error::SelfCheck)?;
        }
        _ => {}
    }
    Ok(out)
}

/// Strongest verdict for `P`, verified before it is returned.
pub fn classify(sys: &RootSystem, p: &RootSubset) -> Result<Verdict> {
    sys.check_subset(p)?;
    let verdict = if let Err(violation) = is_parabolic(sys, p) {
        Verdict::NotParabolic { violation }
    } else {
        match principal_witness(sys, p)? {
            Ok(lambda) => Verdict::Principal { lambda },
            Err(principal_refutation) => match strongly_parabolic_witness(sys, p)? {
                Ok(chain) => Verdict::StronglyParabolicNotPrincipal {
                    chain,
                    principal_refutation,
                },
                Err(obstruction) => Verdict::ParabolicNotStronglyParabolic { obstruction },
            },
        }
    };
    verify_verdict(sys, p, &verdict).map_err(|e| Error::SelfCheck(e.to_string()))?;
    Ok(verdict)
}

/// Replays a verdict's certificate against the system and subset.
pub fn verify_verdict(sys: &RootSystem, p: &RootSubset, v: &Verdict) -> Result<()> {
    sys.check_subset(p)?;
    let fail = |m: &str| Err(Error::Certificate(format!("{}: {m}", v.class())));
    let parabolic = is_parabolic(sys, p).is_ok();
    match v {
        Verdict::NotParabolic { violation } => {
            if !check_violation(sys, p, violation) {
                return fail("violation does not hold");
            }
        }
        Verdict::Principal { lambda } => {
            if !parabolic {
                return fail("P is not parabolic");
            }
            if !verify_principal(sys, p, lambda) {
                return fail("lambda does not cut out P");
            }
        }
        Verdict::StronglyParabolicNotPrincipal {
            chain,
            principal_refutation,
        } => {
            if !parabolic {
                return fail("P is not parabolic");
            }
            if !chain.describes(sys, p) {
                return fail("chain does not cut out P");
            }
            if !verify_not_principal(sys, p, principal_refutation) {
                return fail("principal refutation rejected");
            }
        }
        Verdict::ParabolicNotStronglyParabolic { obstruction } => {
            if !parabolic {
                return fail("P is not parabolic");
            }
            if let Err(e) = verify_obstruction(sys, p, obstruction) {
                return fail(&e);
            }
        }
    }
    Ok(())
}

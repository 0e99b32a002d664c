use serde::{Deserialize, Serialize};

use super::{principal_on, require_window};
use crate::error::{Error, Result};
use crate::exactlin::{Covector, Scalar};
use crate::parabolic::{is_parabolic, principal_witness, Violation, WitnessChain};
use crate::rootsys::{build_affine, Kind, RootSubset, RootSystem};

/// A parabolic subset of an affine system given by one or two functionals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum AffineDescriptor {
    /// `λ(δ) != 0`.
    Standard { lambda: Covector },
    /// `λ(δ) = 0`, `λ != 0`.
    Imaginary { lambda: Covector },
    /// `λ₁(δ) = 0`, and `λ₂(δ) != 0` orders the zero set of `λ₁`.
    Mixed { lambda1: Covector, lambda2: Covector },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AffineType {
    Standard,
    Imaginary,
    Mixed,
}

impl AffineDescriptor {
    pub fn kind(&self) -> AffineType {
        match self {
            AffineDescriptor::Standard { .. } => AffineType::Standard,
            AffineDescriptor::Imaginary { .. } => AffineType::Imaginary,
            AffineDescriptor::Mixed { .. } => AffineType::Mixed,
        }
    }

    pub fn chain(&self) -> WitnessChain {
        let chain = match self {
            AffineDescriptor::Standard { lambda } | AffineDescriptor::Imaginary { lambda } => vec![lambda.clone()],
            AffineDescriptor::Mixed { lambda1, lambda2 } => vec![lambda1.clone(), lambda2.clone()],
        };
        WitnessChain { chain }
    }

    fn check(&self, sys: &RootSystem) -> Result<()> {
        let delta = &sys.imaginary_gens()[0];
        let bad = |m: &str| Err(Error::DescriptorInvariant(m.into()));
        for l in &self.chain().chain {
            if l.dim() != sys.dim() {
                return Err(Error::DimensionMismatch {
                    expected: sys.dim(),
                    found: l.dim(),
                });
            }
        }
        match self {
            AffineDescriptor::Standard { lambda } if lambda.pair(delta).is_zero() => bad("standard type needs λ(δ) != 0"),
            AffineDescriptor::Imaginary { lambda } if !lambda.pair(delta).is_zero() => {
                bad("imaginary type needs λ(δ) = 0")
            }
            AffineDescriptor::Imaginary { lambda } if lambda.is_zero() => bad("imaginary type needs λ != 0"),
            AffineDescriptor::Mixed { lambda1, .. } if !lambda1.pair(delta).is_zero() || lambda1.is_zero() => {
                bad("mixed type needs λ₁(δ) = 0 and λ₁ != 0")
            }
            AffineDescriptor::Mixed { lambda2, .. } if lambda2.pair(delta).is_zero() => {
                bad("mixed type needs λ₂(δ) != 0")
            }
            _ => Ok(()),
        }
    }
}

/// Outcome of the window-scale trichotomy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", content = "certificate")]
pub enum AffineVerdict {
    NotParabolic { violation: Violation },
    Standard { lambda: Covector },
    Imaginary { lambda: Covector },
    Mixed { lambda1: Covector, lambda2: Covector },
}

impl AffineVerdict {
    pub fn descriptor(&self) -> Option<AffineDescriptor> {
        match self.clone() {
            AffineVerdict::NotParabolic { .. } => None,
            AffineVerdict::Standard { lambda } => Some(AffineDescriptor::Standard { lambda }),
            AffineVerdict::Imaginary { lambda } => Some(AffineDescriptor::Imaginary { lambda }),
            AffineVerdict::Mixed { lambda1, lambda2 } => Some(AffineDescriptor::Mixed { lambda1, lambda2 }),
        }
    }

    pub fn kind(&self) -> Option<AffineType> {
        self.descriptor().map(|d| d.kind())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineReport {
    pub window: u32,
    /// Window at which the witness was re-derived; absent for non-parabolic input.
    pub stable_window: Option<u32>,
    pub verdict: AffineVerdict,
}

fn affine_base(sys: &RootSystem) -> Result<&RootSystem> {
    match sys.kind() {
        Kind::Affine { .. } => Ok(sys.base_system().expect("affine systems carry their base")),
        _ => Err(Error::InvalidParams(format!("{} is not an affine system", sys.name()))),
    }
}

/// The lexicographic set of the descriptor, checked to be parabolic.
pub fn make_affine_parabolic(sys: &RootSystem, d: &AffineDescriptor) -> Result<RootSubset> {
    affine_base(sys)?;
    d.check(sys)?;
    let p = d.chain().subset(sys);
    if let Err(v) = is_parabolic(sys, &p) {
        return Err(Error::DescriptorInvariant(format!("generated set is not parabolic: {v:?}")));
    }
    Ok(p)
}

/// Sorts a parabolic subset into standard, imaginary or mixed type, with
/// witness functionals, and confirms the type two window steps wider.
pub fn classify_affine(sys: &RootSystem, p: &RootSubset) -> Result<AffineReport> {
    let base = affine_base(sys)?;
    let window = require_window(sys)?;
    let verdict = classify_at(sys, p)?;
    let Some(d) = verdict.descriptor() else {
        return Ok(AffineReport {
            window,
            stable_window: None,
            verdict,
        });
    };
    let wider = window + 2;
    let wide = build_affine(base, wider)?;
    let p_wide = d.chain().subset(&wide);
    let again = classify_at(&wide, &p_wide)?;
    if again.kind() != verdict.kind() {
        return Err(Error::UnstableAtWindow { window, wider });
    }
    Ok(AffineReport {
        window,
        stable_window: Some(wider),
        verdict,
    })
}

fn classify_at(sys: &RootSystem, p: &RootSubset) -> Result<AffineVerdict> {
    sys.check_subset(p)?;
    if let Err(violation) = is_parabolic(sys, p) {
        return Ok(AffineVerdict::NotParabolic { violation });
    }
    if p.len() == sys.len() {
        return Ok(AffineVerdict::Imaginary {
            lambda: Covector::zero(sys.dim()),
        });
    }
    let base = affine_base(sys)?;
    let n = sys.window().expect("affine systems have a window") as i64;
    let delta = &sys.imaginary_gens()[0];
    let coset = |a: usize| (-n..=n).map(move |k| sys.find_lattice(Some(a), &[k]).expect("coset lies in the window"));
    let full_coset = base.ids().any(|a| coset(a).all(|i| p.contains(i)));

    if !full_coset {
        let lambda = principal_witness(sys, p)?
            .map_err(|_| Error::NoWitness("every coset meets P but no principal functional exists".into()))?
            .normalized();
        if lambda.pair(delta).is_zero() {
            return Err(Error::SelfCheck("principal functional vanishes on δ".into()));
        }
        return Ok(AffineVerdict::Standard { lambda });
    }

    let s = RootSubset::filter(base, |r| coset(r.id).any(|i| p.contains(i)));
    if is_parabolic(base, &s).is_err() {
        return Err(Error::SelfCheck("cosets meeting P do not form a parabolic set".into()));
    }
    let lambda_s = principal_witness(base, &s)?
        .map_err(|_| Error::NoWitness("cosets meeting P are not principal in the base".into()))?;
    let mut coords = lambda_s.0;
    coords.push(Scalar::zero());
    let lambda1 = Covector(coords).normalized();
    let zero: Vec<usize> = sys.ids().filter(|&i| lambda1.pair(sys.vector(i)).is_zero()).collect();
    if zero.iter().all(|&i| p.contains(i)) {
        if !(WitnessChain { chain: vec![lambda1.clone()] }).describes(sys, p) {
            return Err(Error::SelfCheck("imaginary-type functional does not cut out P".into()));
        }
        return Ok(AffineVerdict::Imaginary { lambda: lambda1 });
    }
    let lambda2 = principal_on(sys, p, &zero)
        .ok_or_else(|| Error::NoWitness("P is not principal inside the zero set".into()))?
        .normalized();
    if lambda2.pair(delta).is_zero() {
        return Err(Error::SelfCheck("second functional vanishes on δ".into()));
    }
    let chain = WitnessChain {
        chain: vec![lambda1.clone(), lambda2.clone()],
    };
    if !chain.describes(sys, p) {
        return Err(Error::SelfCheck("two-step chain does not cut out P".into()));
    }
    if principal_witness(sys, p)?.is_ok() {
        return Err(Error::SelfCheck("mixed-type set admits a principal functional".into()));
    }
    Ok(AffineVerdict::Mixed { lambda1, lambda2 })
}

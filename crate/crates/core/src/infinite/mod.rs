//! Parabolic subsets of truncated affine and toroidal systems. Every verdict
//! is computed at the system's window and rechecked two steps wider.

mod affine;
mod generate;
mod toroidal;

pub use affine::{classify_affine, make_affine_parabolic, AffineDescriptor, AffineReport, AffineType, AffineVerdict};
pub use generate::{random_affine_descriptor, random_dense_functional, random_rational_chain, seeded_rng};
pub use toroidal::{toroidal_witness, ToroidalCase, ToroidalData, ToroidalReport};

use crate::conesolve::{strict_feasible, SignProblem};
use crate::error::{Error, Result};
use crate::exactlin::Covector;
use crate::rootsys::{RootSubset, RootSystem};

/// Smallest window the classifiers accept.
pub const MIN_WINDOW: u32 = 4;

fn require_window(sys: &RootSystem) -> Result<u32> {
    let n = sys.window().ok_or_else(|| Error::InvalidParams(format!("{} is not a truncated system", sys.name())))?;
    if n < MIN_WINDOW {
        return Err(Error::InvalidParams(format!("window must be >= {MIN_WINDOW}, got {n}")));
    }
    Ok(n)
}

/// A functional that is zero on `P ∩ -P`, positive on `P \ -P` and negative
/// off `P`, all within `level`.
fn principal_on(sys: &RootSystem, p: &RootSubset, level: &[usize]) -> Option<Covector> {
    let mut prob = SignProblem::new(sys.dim());
    for &i in level {
        let v = sys.vector(i);
        match (p.contains(i), p.contains(sys.neg(i))) {
            (true, true) => prob.zero.push(v.clone()),
            (true, false) => prob.strict_pos.push(v.clone()),
            _ => prob.strict_pos.push(v.neg()),
        }
    }
    strict_feasible(&prob).feasible().cloned()
}

/// Base root part of every root, `None` for lattice roots.
fn real_parts(sys: &RootSystem) -> Vec<Option<usize>> {
    sys.ids().map(|i| sys.lattice(i).and_then(|c| c.real)).collect()
}

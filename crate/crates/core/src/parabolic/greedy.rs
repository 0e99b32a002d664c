//! Minimal-kernel recursion for strong parabolicity.
//!
//! At each level the roots of the current set `D` give one constraint each:
//! `λ(α) >= 0` for `α ∈ P` and `λ(α) <= 0` otherwise. A relative-interior
//! point of that cone has the smallest possible kernel on `D`; the next level
//! is that kernel. The weights certifying the forced zeros are kept so a
//! failure can be re-checked without rerunning the search.

use serde::{Deserialize, Serialize};

use super::WitnessChain;
use crate::conesolve::{relative_interior, SignProblem};
use crate::exactlin::{Covector, Scalar, Vector};
use crate::rootsys::{RootSubset, RootSystem};

/// One recursion level: the roots present there and nonnegative weights with
/// `sum w_α s_α α = 0`, where `s_α = +1` on `P` and `-1` off `P`. Every valid
/// functional vanishes on the support, which is the next level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionLevel {
    pub roots: Vec<usize>,
    pub weights: Vec<Scalar>,
}

/// Levels of a failed recursion; at the last one every root is forced to zero
/// while `P` is still a proper subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub levels: Vec<ObstructionLevel>,
}

impl Obstruction {
    pub fn last(&self) -> &ObstructionLevel {
        self.levels.last().expect("obstructions have at least one level")
    }

    /// Roots forced to vanish at the given level (the support of its weights).
    pub fn forced(&self, level: usize) -> Vec<usize> {
        let l = &self.levels[level];
        l.roots
            .iter()
            .zip(&l.weights)
            .filter(|(_, w)| w.is_positive())
            .map(|(&r, _)| r)
            .collect()
    }
}

fn signed(sys: &RootSystem, p: &RootSubset, id: usize) -> Vector {
    if p.contains(id) {
        sys.vector(id).clone()
    } else {
        sys.vector(id).neg()
    }
}

/// Runs the recursion on a parabolic `P`.
pub(crate) fn greedy(sys: &RootSystem, p: &RootSubset) -> Result<WitnessChain, Obstruction> {
    greedy_on(sys, p, sys.ids().collect()).map(|chain| WitnessChain { chain })
}

/// The recursion started at `level`, a negation-closed set of root ids.
pub(crate) fn greedy_on(sys: &RootSystem, p: &RootSubset, mut level: Vec<usize>) -> Result<Vec<Covector>, Obstruction> {
    let mut chain = Vec::new();
    let mut levels = Vec::new();
    loop {
        if level.iter().all(|&i| p.contains(i)) {
            return Ok(chain);
        }
        let mut prob = SignProblem::new(sys.dim());
        prob.nonneg = level.iter().map(|&i| signed(sys, p, i)).collect();
        let pt = relative_interior(&prob);
        levels.push(ObstructionLevel {
            roots: level.clone(),
            weights: pt.zero_combination,
        });
        if pt.forced_zero.len() == level.len() {
            return Err(Obstruction { levels });
        }
        chain.push(pt.lambda);
        level = pt.forced_zero.iter().map(|&k| level[k]).collect();
    }
}

/// Re-checks an obstruction against `P` using only exact arithmetic.
pub fn verify_obstruction(sys: &RootSystem, p: &RootSubset, obs: &Obstruction) -> Result<(), String> {
    if obs.levels.is_empty() {
        return Err("obstruction has no levels".into());
    }
    let mut expected: Vec<usize> = sys.ids().collect();
    for (k, l) in obs.levels.iter().enumerate() {
        if l.roots != expected {
            return Err(format!("level {k} does not list the support of the previous level"));
        }
        if l.weights.len() != l.roots.len() {
            return Err(format!("level {k}: weight count differs from root count"));
        }
        if l.weights.iter().any(Scalar::is_negative) {
            return Err(format!("level {k}: negative weight"));
        }
        let mut total = Vector::zero(sys.dim());
        for (&r, w) in l.roots.iter().zip(&l.weights) {
            if !w.is_zero() {
                total = total.add(&signed(sys, p, r).scale(w));
            }
        }
        if !total.is_zero() {
            return Err(format!("level {k}: weighted sum is not zero"));
        }
        expected = obs.forced(k);
    }
    let last = obs.last();
    if expected != last.roots {
        return Err("the last level is not entirely forced to zero".into());
    }
    if last.roots.iter().all(|&r| p.contains(r)) {
        return Err("P contains every root of the last level".into());
    }
    Ok(())
}

//! Positive systems, their bases, reflections at simple roots, and the
//! reflection walk that turns a parabolic subset into a principal one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{rank, solve, Covector, Scalar, Vector};
use crate::parabolic::{is_parabolic, triangular};
use crate::rootsys::{RootSubset, RootSystem};

/// Exactly one root of every line, closed under addition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PositiveSystem {
    positives: RootSubset,
}

impl PositiveSystem {
    pub fn new(sys: &RootSystem, positives: RootSubset) -> Result<PositiveSystem> {
        sys.check_subset(&positives)?;
        sys.check_positive_system(&positives.mask(sys))
            .map_err(Error::InvalidPositiveSystem)?;
        Ok(PositiveSystem { positives })
    }

    /// The positive system shipped with the catalog entry.
    pub fn standard(sys: &RootSystem) -> Result<PositiveSystem> {
        let ids = sys
            .standard_positive()
            .ok_or_else(|| Error::NoStandardPositiveSystem(sys.name().to_string()))?;
        PositiveSystem::new(sys, RootSubset::new(sys, ids.iter().copied())?)
    }

    pub fn positives(&self) -> &RootSubset {
        &self.positives
    }

    pub fn contains(&self, id: usize) -> bool {
        self.positives.contains(id)
    }

    /// Number of positive roots outside `p`.
    pub fn outside(&self, p: &RootSubset) -> usize {
        self.positives.ids().filter(|&i| !p.contains(i)).count()
    }
}

/// Simple roots of a positive system, as root ids in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Base {
    pub simples: Vec<usize>,
}

/// Positive roots reachable from `simples` by adding one simple at a time.
fn generate(sys: &RootSystem, simples: &[usize]) -> Vec<bool> {
    let mut reached = vec![false; sys.len()];
    let mut stack = simples.to_vec();
    for &s in simples {
        reached[s] = true;
    }
    while let Some(b) = stack.pop() {
        for &s in simples {
            if let Some(c) = sys.sum(b, s) {
                if !reached[c] {
                    reached[c] = true;
                    stack.push(c);
                }
            }
        }
    }
    reached
}

/// Indecomposable positives, checked to regenerate the whole positive system.
pub fn base_of(sys: &RootSystem, pos: &PositiveSystem) -> Result<Base> {
    sys.check_subset(&pos.positives)?;
    let members: Vec<usize> = pos.positives.ids().collect();
    let mut decomposable = vec![false; sys.len()];
    for (k, &a) in members.iter().enumerate() {
        for &b in &members[k..] {
            if let Some(c) = sys.sum(a, b) {
                decomposable[c] = true;
            }
        }
    }
    let simples: Vec<usize> = members.into_iter().filter(|&i| !decomposable[i]).collect();
    if generate(sys, &simples) != pos.positives.mask(sys) {
        return Err(Error::GenerationFailure);
    }
    Ok(Base { simples })
}

/// Swaps `α`, and `2α` when it is a root, for their negatives.
pub fn reflect(sys: &RootSystem, pos: &PositiveSystem, alpha: usize) -> Result<PositiveSystem> {
    if alpha >= sys.len() {
        return Err(Error::UnknownRoot(alpha));
    }
    if !base_of(sys, pos)?.simples.contains(&alpha) {
        return Err(Error::NotSimple(alpha));
    }
    let mut mask = pos.positives.mask(sys);
    let mut flip = |i: usize| {
        mask[i] = false;
        mask[sys.neg(i)] = true;
    };
    flip(alpha);
    if let Some(double) = sys.sum(alpha, alpha) {
        flip(double);
    }
    sys.check_positive_system(&mask)
        .map_err(|e| Error::SelfCheck(format!("reflection at {alpha}: {e}")))?;
    Ok(PositiveSystem {
        positives: RootSubset::from_mask(sys, mask),
    })
}

/// Reflects at simples outside `p` until the positives lie inside `p`, then
/// reads off a functional from the final base: 1 on simples whose negative is
/// outside `p`, 0 on the rest.
pub fn principalize(sys: &RootSystem, p: &RootSubset, start: &PositiveSystem) -> Result<(Base, Covector)> {
    sys.check_subset(p)?;
    if is_parabolic(sys, p).is_err() {
        return Err(Error::NotParabolicInput);
    }
    let mut cur = start.clone();
    let base = loop {
        let base = base_of(sys, &cur)?;
        let Some(&alpha) = base.simples.iter().find(|&&a| !p.contains(a)) else {
            break base;
        };
        let before = cur.outside(p);
        cur = reflect(sys, &cur, alpha)?;
        if cur.outside(p) >= before {
            return Err(Error::SelfCheck(format!("reflection at {alpha} did not shrink the positives outside P")));
        }
    };

    let rows: Vec<Vec<Scalar>> = base.simples.iter().map(|&a| sys.vector(a).0.clone()).collect();
    let all: Vec<Vec<Scalar>> = sys.roots().iter().map(|r| r.vec.0.clone()).collect();
    let r = rank(&rows, sys.dim());
    if r != rows.len() || r != rank(&all, sys.dim()) {
        return Err(Error::BaseNotSpanning);
    }
    let rhs: Vec<Scalar> = base
        .simples
        .iter()
        .map(|&a| Scalar::from_int(i64::from(!p.contains(sys.neg(a)))))
        .collect();
    let x = solve(&rows, &rhs, sys.dim()).ok_or_else(|| Error::SelfCheck("simple values are inconsistent".into()))?;
    let lambda = Covector(x);
    let t = triangular(sys, &lambda)?;
    let mut cut: Vec<usize> = t.zero.iter().chain(&t.plus).copied().collect();
    cut.sort_unstable();
    if cut != p.ids().collect::<Vec<_>>() {
        return Err(Error::SelfCheck("the functional from the final base does not cut out P".into()));
    }
    Ok((base, lambda))
}

/// The simple root vectors of a base.
pub fn simple_vectors(sys: &RootSystem, base: &Base) -> Vec<Vector> {
    base.simples.iter().map(|&a| sys.vector(a).clone()).collect()
}

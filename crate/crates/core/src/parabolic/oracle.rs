//! Exhaustive search over realizable triangular decompositions.

use crate::conesolve::{strict_feasible, SignProblem};
use crate::error::{Error, Result};
use crate::rootsys::{RootSubset, RootSystem};

/// Largest level the oracle will enumerate.
pub const ORACLE_LIMIT: usize = 20;

/// Strong parabolicity decided by trying every sign pattern compatible with
/// `P` at every level.
pub fn oracle_strongly_parabolic(sys: &RootSystem, p: &RootSubset) -> Result<bool> {
    sys.check_subset(p)?;
    let all: Vec<usize> = sys.ids().collect();
    search(sys, p, &all)
}

fn search(sys: &RootSystem, p: &RootSubset, level: &[usize]) -> Result<bool> {
    if level.len() > ORACLE_LIMIT {
        return Err(Error::SizeGuardExceeded {
            size: level.len(),
            limit: ORACLE_LIMIT,
        });
    }
    if level.iter().all(|&i| p.contains(i)) {
        return Ok(true);
    }
    // one representative per line; `free` lines may take sign + or 0 on the member of P
    let mut both = Vec::new();
    let mut free = Vec::new();
    for &i in level {
        let j = sys.neg(i);
        if i > j {
            continue;
        }
        match (p.contains(i), p.contains(j)) {
            (true, true) => both.push(i),
            (true, false) => free.push(i),
            (false, true) => free.push(j),
            (false, false) => return Ok(false),
        }
    }
    for pattern in 1u64..(1u64 << free.len()) {
        let mut prob = SignProblem::new(sys.dim());
        let mut next = Vec::new();
        for &i in &both {
            prob.zero.push(sys.vector(i).clone());
            next.push(i);
            next.push(sys.neg(i));
        }
        for (bit, &i) in free.iter().enumerate() {
            if pattern >> bit & 1 == 1 {
                prob.strict_pos.push(sys.vector(i).clone());
            } else {
                prob.zero.push(sys.vector(i).clone());
                next.push(i);
                next.push(sys.neg(i));
            }
        }
        if strict_feasible(&prob).feasible().is_none() {
            continue;
        }
        next.sort_unstable();
        if search(sys, p, &next)? {
            return Ok(true);
        }
    }
    Ok(false)
}

//! Backtracking enumeration of parabolic subsets, one root line at a time.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactlin::Vector;
use crate::parabolic::{classify, Verdict};
use crate::rootsys::{RootSubset, RootSystem};

/// Largest system `enumerate_parabolic` accepts.
pub const ENUMERATION_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    All,
    Classify,
}

/// Every parabolic subset in member-id order, with verdicts in classify mode.
pub fn enumerate_parabolic(sys: &RootSystem, mode: Mode) -> Result<Vec<(RootSubset, Option<Verdict>)>> {
    if sys.len() > ENUMERATION_LIMIT {
        return Err(Error::SizeGuardExceeded {
            size: sys.len(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut out = Vec::new();
    for p in parabolic_subsets(sys) {
        let v = match mode {
            Mode::All => None,
            Mode::Classify => Some(classify(sys, &p)?),
        };
        out.push((p, v));
    }
    Ok(out)
}

/// All parabolic subsets of `sys`, without a size guard.
pub fn parabolic_subsets(sys: &RootSystem) -> Vec<RootSubset> {
    let mut found = Vec::new();
    search_parabolic(sys, |mask| {
        found.push(RootSubset::from_mask(sys, mask.to_vec()));
        true
    });
    found.sort_by(|a, b| a.ids().cmp(b.ids()));
    found
}

struct Search<'a> {
    sys: &'a RootSystem,
    lines: Vec<(usize, usize)>,
    line_of: Vec<usize>,
    assigned: Vec<bool>,
    mask: Vec<bool>,
    diff: HashMap<(usize, usize), Option<usize>>,
}

impl Search<'_> {
    fn difference(&mut self, n: usize, a: usize) -> Option<usize> {
        let sys = self.sys;
        *self
            .diff
            .entry((n, a))
            .or_insert_with(|| sys.find(&Vector::sub(sys.vector(n), sys.vector(a))))
    }

    /// Closure constraints that became decidable after assigning line `l`.
    fn consistent(&mut self, l: usize) -> bool {
        let (x, y) = self.lines[l];
        let members: Vec<usize> = self.sys.ids().filter(|&i| self.mask[i]).collect();
        let (present, absent): (Vec<usize>, Vec<usize>) = [x, y].into_iter().partition(|&r| self.mask[r]);
        for &m in &present {
            for &a in &members {
                if let Some(s) = self.sys.sum(m, a) {
                    if self.assigned[self.line_of[s]] && !self.mask[s] {
                        return false;
                    }
                }
            }
        }
        for &n in &absent {
            for &a in &members {
                if let Some(b) = self.difference(n, a) {
                    if self.mask[b] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, l: usize, visit: &mut dyn FnMut(&[bool]) -> bool) -> bool {
        if l == self.lines.len() {
            return visit(&self.mask);
        }
        let (x, y) = self.lines[l];
        for choice in [(true, false), (false, true), (true, true)] {
            self.mask[x] = choice.0;
            self.mask[y] = choice.1;
            self.assigned[l] = true;
            if self.consistent(l) && !self.run(l + 1, visit) {
                return false;
            }
            self.assigned[l] = false;
        }
        self.mask[x] = false;
        self.mask[y] = false;
        true
    }
}

/// Calls `visit` on the mask of every parabolic subset; stops early when it
/// returns false.
pub fn search_parabolic(sys: &RootSystem, mut visit: impl FnMut(&[bool]) -> bool) {
    let mut lines = Vec::new();
    let mut line_of = vec![0; sys.len()];
    for i in sys.ids() {
        let j = sys.neg(i);
        if i < j {
            line_of[i] = lines.len();
            line_of[j] = lines.len();
            lines.push((i, j));
        }
    }
    let n = lines.len();
    let mut s = Search {
        sys,
        lines,
        line_of,
        assigned: vec![false; n],
        mask: vec![false; sys.len()],
        diff: HashMap::new(),
    };
    s.run(0, &mut visit);
}

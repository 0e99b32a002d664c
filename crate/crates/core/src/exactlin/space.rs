use serde::{Deserialize, Serialize};

use super::matrix::rref;
use super::scalar::Scalar;
use super::vector::Vector;
use crate::error::Error;

/// The quotient `raw / span(relations)` with canonical coordinates.
///
/// Canonical coordinates are the raw coordinates that are not pivots of the
/// reduced relation matrix; projecting a raw vector eliminates the pivot
/// coordinates using the reduced relations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmbientSpace {
    raw_dim: usize,
    generators: Vec<String>,
    relations: Vec<Vec<Scalar>>,
    #[serde(skip)]
    reduced: Vec<Vec<Scalar>>,
    #[serde(skip)]
    pivots: Vec<usize>,
    #[serde(skip)]
    free: Vec<usize>,
}

impl AmbientSpace {
    pub fn new(raw_dim: usize, relations: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let generators = (1..=raw_dim).map(|i| format!("x{i}")).collect();
        Self::with_generators(generators, relations)
    }

    pub fn with_generators(
        generators: Vec<String>,
        relations: Vec<Vec<Scalar>>,
    ) -> Result<Self, Error> {
        let raw_dim = generators.len();
        if let Some(r) = relations.iter().find(|r| r.len() != raw_dim) {
            return Err(Error::DimensionMismatch {
                expected: raw_dim,
                found: r.len(),
            });
        }
        let (reduced, pivots) = rref(&relations, raw_dim);
        let free = (0..raw_dim).filter(|c| !pivots.contains(c)).collect();
        Ok(AmbientSpace {
            raw_dim,
            generators,
            relations,
            reduced,
            pivots,
            free,
        })
    }

    pub fn free(dim: usize) -> Self {
        Self::new(dim, Vec::new()).expect("no relations")
    }

    pub fn raw_dim(&self) -> usize {
        self.raw_dim
    }

    pub fn canon_dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &[Vec<Scalar>] {
        &self.relations
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// Names of the canonical coordinates (the surviving raw generators).
    pub fn canonical_names(&self) -> Vec<String> {
        self.free.iter().map(|&i| self.generators[i].clone()).collect()
    }

    pub fn project(&self, raw: &[Scalar]) -> Result<Vector, Error> {
        if raw.len() != self.raw_dim {
            return Err(Error::DimensionMismatch {
                expected: self.raw_dim,
                found: raw.len(),
            });
        }
        let mut r = raw.to_vec();
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, c) in r.iter_mut().zip(row) {
                if !c.is_zero() {
                    *x = &*x - &(&f * c);
                }
            }
        }
        Ok(Vector(self.free.iter().map(|&i| r[i].clone()).collect()))
    }

    pub fn project_ints(&self, raw: &[i64]) -> Result<Vector, Error> {
        let v: Vec<Scalar> = raw.iter().map(|&x| Scalar::from_int(x)).collect();
        self.project(&v)
    }

    /// Rebuilds the derived elimination data after deserialization.
    pub fn rebuild(self) -> Result<Self, Error> {
        Self::with_generators(self.generators, self.relations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn no_relations() {
        let s = AmbientSpace::new(5, vec![]).unwrap();
        assert_eq!(s.canon_dim(), 5);
    }

    #[test]
    fn psl33_relations() {
        let s = AmbientSpace::new(6, vec![ints(&[1, 1, 1, 0, 0, 0]), ints(&[0, 0, 0, 1, 1, 1])])
            .unwrap();
        assert_eq!(s.canon_dim(), 4);
        for r in s.relations() {
            assert!(s.project(r).unwrap().is_zero());
        }
        // e1 + e2 = -e3
        let lhs = s.project_ints(&[1, 1, 0, 0, 0, 0]).unwrap();
        let rhs = s.project_ints(&[0, 0, -1, 0, 0, 0]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn chain_relations() {
        let s = AmbientSpace::new(4, vec![ints(&[1, -1, 0, 0]), ints(&[0, 1, -1, 0])]).unwrap();
        assert_eq!(s.canon_dim(), 2);
        assert_eq!(
            s.project_ints(&[1, 0, 0, 0]).unwrap(),
            s.project_ints(&[0, 0, 1, 0]).unwrap()
        );
        assert!(s.project_ints(&[0, 0, 0, 0]).unwrap().is_zero());
    }

    #[test]
    fn dimension_errors() {
        assert!(AmbientSpace::new(3, vec![ints(&[1, 1])]).is_err());
        let s = AmbientSpace::free(2);
        assert!(s.project_ints(&[1, 2, 3]).is_err());
    }
}

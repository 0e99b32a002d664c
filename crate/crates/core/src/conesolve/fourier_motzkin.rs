//! Fourier–Motzkin elimination for homogeneous sign systems. Used only as an
//! independent cross-check of the simplex path on small instances.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::SignProblem;
use crate::exactlin::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Row {
    coeffs: Vec<BigInt>,
    strict: bool,
}

fn to_row(v: &[Scalar], strict: bool) -> Row {
    let rats: Vec<BigRational> = v
        .iter()
        .map(|s| {
            s.as_rational()
                .expect("Fourier-Motzkin oracle works over the rationals")
                .clone()
        })
        .collect();
    let lcm = crate::exactlin::denominator_lcm(rats.iter());
    let coeffs = rats
        .iter()
        .map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    normalize(Row { coeffs, strict })
}

fn normalize(mut row: Row) -> Row {
    let g = row
        .coeffs
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for c in row.coeffs.iter_mut() {
            *c = &*c / &g;
        }
    }
    row
}

/// Decides whether `p` (zero, nonneg, strictly positive constraints) is feasible.
pub fn fm_feasible(p: &SignProblem) -> bool {
    let mut rows: Vec<Row> = Vec::new();
    for v in &p.zero {
        rows.push(to_row(v.coords(), false));
        rows.push(to_row(v.neg().coords(), false));
    }
    for v in &p.nonneg {
        rows.push(to_row(v.coords(), false));
    }
    for v in &p.strict_pos {
        rows.push(to_row(v.coords(), true));
    }
    for k in 0..p.dim {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            if r.coeffs[k].is_positive() {
                pos.push(r);
            } else if r.coeffs[k].is_negative() {
                neg.push(r);
            } else {
                rest.push(r);
            }
        }
        for a in &pos {
            for b in &neg {
                let fa = -&b.coeffs[k];
                let fb = a.coeffs[k].clone();
                let coeffs = a
                    .coeffs
                    .iter()
                    .zip(&b.coeffs)
                    .map(|(x, y)| x * &fa + y * &fb)
                    .collect();
                rest.push(normalize(Row {
                    coeffs,
                    strict: a.strict || b.strict,
                }));
            }
        }
        rest.sort();
        rest.dedup();
        rows = rest;
    }
    // every remaining row reads 0 >= 0 or 0 > 0
    !rows.iter().any(|r| r.strict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Vector;

    #[test]
    fn small_systems() {
        let p = SignProblem {
            dim: 1,
            zero: vec![],
            nonneg: vec![],
            strict_pos: vec![Vector::from_ints(&[1]), Vector::from_ints(&[-1])],
        };
        assert!(!fm_feasible(&p));
        let p = SignProblem {
            dim: 2,
            zero: vec![Vector::from_ints(&[1, 0])],
            nonneg: vec![],
            strict_pos: vec![Vector::from_ints(&[0, 1])],
        };
        assert!(fm_feasible(&p));
        let p = SignProblem {
            dim: 2,
            zero: vec![Vector::from_ints(&[1, -1])],
            nonneg: vec![],
            strict_pos: vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, -1])],
        };
        assert!(!fm_feasible(&p));
    }
}

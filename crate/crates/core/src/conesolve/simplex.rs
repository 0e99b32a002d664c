//! Exact feasibility for `rows . x >= rhs` via phase I of the Farkas dual.
//!
//! The dual system is `sum_j y_j rows[j] = 0`, `sum_j y_j rhs[j] = 1`, `y >= 0`.
//! It has a solution exactly when the primal is infeasible. Phase I is run with
//! one artificial per dual row and Bland's rule; if the optimum is zero the basic
//! `y` is a Farkas certificate, otherwise the optimal simplex multipliers give a
//! primal point.

use crate::exactlin::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Solve {
    Point(Vec<Scalar>),
    /// `y >= 0` with `sum y_j rows[j] = 0` and `sum y_j rhs[j] = 1`.
    Farkas(Vec<Scalar>),
}

pub fn solve_inequalities(rows: &[Vec<Scalar>], rhs: &[Scalar], dim: usize) -> Solve {
    assert_eq!(rows.len(), rhs.len());
    if rhs.iter().all(|b| !b.is_positive()) {
        return Solve::Point(vec![Scalar::zero(); dim]);
    }
    let m = rows.len();
    let nrows = dim + 1;
    let ncols = m + nrows;

    // tableau[i] = coefficients of dual row i, then artificial columns
    let mut tab: Vec<Vec<Scalar>> = (0..nrows)
        .map(|i| {
            let mut row = Vec::with_capacity(ncols);
            for j in 0..m {
                row.push(if i < dim { rows[j][i].clone() } else { rhs[j].clone() });
            }
            for k in 0..nrows {
                row.push(if k == i { Scalar::one() } else { Scalar::zero() });
            }
            row
        })
        .collect();
    let mut b: Vec<Scalar> = (0..nrows)
        .map(|i| if i == dim { Scalar::one() } else { Scalar::zero() })
        .collect();
    let mut basis: Vec<usize> = (m..ncols).collect();

    // reduced costs: c_j - sum_i c_B(i) tab[i][j], with c = 1 on artificials
    let cost = |j: usize| if j >= m { Scalar::one() } else { Scalar::zero() };
    let mut reduced: Vec<Scalar> = (0..ncols)
        .map(|j| {
            let s = tab.iter().fold(Scalar::zero(), |acc, row| acc + &row[j]);
            cost(j) - s
        })
        .collect();
    let mut objective = b.iter().fold(Scalar::zero(), |acc, x| acc + x);

    loop {
        let Some(enter) = (0..ncols).find(|&j| reduced[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Scalar)> = None;
        for i in 0..nrows {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &b[i] / &tab[i][enter];
            leave = match leave {
                None => Some((i, ratio)),
                Some((li, lr)) => {
                    if ratio < lr || (ratio == lr && basis[i] < basis[li]) {
                        Some((i, ratio))
                    } else {
                        Some((li, lr))
                    }
                }
            };
        }
        // phase I is bounded below by zero
        let (r, _) = leave.expect("phase I cannot be unbounded");
        pivot(&mut tab, &mut b, &mut reduced, &mut objective, r, enter);
        basis[r] = enter;
    }

    if objective.is_zero() {
        let mut y = vec![Scalar::zero(); m];
        for (i, &j) in basis.iter().enumerate() {
            if j < m {
                y[j] = b[i].clone();
            }
        }
        return Solve::Farkas(y);
    }
    // multipliers u_k = c_k - reduced_k on the artificial columns
    let u: Vec<Scalar> = (0..nrows).map(|k| Scalar::one() - &reduced[m + k]).collect();
    let scale = &u[dim];
    debug_assert!(scale.is_positive());
    let x: Vec<Scalar> = u[..dim].iter().map(|ui| -(ui / scale)).collect();
    Solve::Point(x)
}

fn pivot(
    tab: &mut [Vec<Scalar>],
    b: &mut [Scalar],
    reduced: &mut [Scalar],
    objective: &mut Scalar,
    r: usize,
    c: usize,
) {
    let inv = tab[r][c].recip();
    for x in tab[r].iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
    b[r] = &b[r] * &inv;
    let prow = tab[r].clone();
    let pb = b[r].clone();
    for i in 0..tab.len() {
        if i == r || tab[i][c].is_zero() {
            continue;
        }
        let f = tab[i][c].clone();
        for (x, p) in tab[i].iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x = &*x - &(&f * p);
            }
        }
        b[i] = &b[i] - &(&f * &pb);
    }
    let f = reduced[c].clone();
    for (x, p) in reduced.iter_mut().zip(&prow) {
        if !p.is_zero() {
            *x = &*x - &(&f * p);
        }
    }
    *objective = &*objective + &(&f * &pb);
}

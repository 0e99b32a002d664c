use parabolic_core::conesolve::{
    fm_feasible, relative_interior, strict_feasible, verify_cone_point, SignProblem, StrictOutcome,
};
use parabolic_core::exactlin::{Scalar, Vector};
use proptest::prelude::*;

fn vecs(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 0..=max)
        .prop_map(|vs| vs.iter().map(|v| Vector::from_ints(v)).collect())
}

fn problems() -> impl Strategy<Value = SignProblem> {
    (1usize..=4).prop_flat_map(|dim| {
        (vecs(dim, 2), vecs(dim, 4), vecs(dim, 4)).prop_map(move |(zero, nonneg, strict_pos)| {
            SignProblem { dim, zero, nonneg, strict_pos }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn simplex_agrees_with_elimination(p in problems()) {
        let out = strict_feasible(&p);
        match &out {
            StrictOutcome::Feasible(l) => prop_assert!(p.satisfied_by(l)),
            StrictOutcome::Infeasible(c) => prop_assert!(p.refuted_by(c)),
        }
        prop_assert_eq!(out.feasible().is_some(), fm_feasible(&p));
    }

    #[test]
    fn doubling_keeps_sign_pattern(p in problems()) {
        let mut q = p.clone();
        for v in q.zero.iter_mut().chain(q.nonneg.iter_mut()).chain(q.strict_pos.iter_mut()) {
            *v = v.scale(&Scalar::from_int(2));
        }
        prop_assert_eq!(strict_feasible(&p).feasible().is_some(), strict_feasible(&q).feasible().is_some());
        let (a, b) = (relative_interior(&p), relative_interior(&q));
        prop_assert_eq!(a.forced_zero, b.forced_zero);
    }

    #[test]
    fn relative_interior_is_certified(p in problems()) {
        let pt = relative_interior(&p);
        prop_assert!(verify_cone_point(&p, &pt));
    }
}

#[test]
fn five_vectors_force_equal_weights() {
    let five: [[i64; 5]; 5] = [
        [-1, 1, 1, -1, 0],
        [-1, 1, 1, 0, -1],
        [-1, 1, 0, 1, -1],
        [-1, 0, 1, 1, -1],
        [0, -1, 1, 1, -1],
    ];
    let mut p = SignProblem::new(5);
    for v in &five {
        let v = Vector::from_ints(v);
        p.nonneg.push(v.neg());
        p.nonneg.push(v);
    }
    p.nonneg.push(Vector::from_ints(&[1, 0, 0, 0, 0]));
    let pt = relative_interior(&p);
    assert!(verify_cone_point(&p, &pt));
    assert_eq!(pt.forced_zero, (0..10).collect::<Vec<_>>());
    let c = pt.lambda.coords();
    assert!(c[0].is_positive());
    assert!(c.iter().all(|x| x == &c[0]));
}

//! The sign system whose solutions are principal witnesses.

use crate::conesolve::SignProblem;
use crate::exactlin::Scalar;
use crate::rootsys::{Kind, RootSubset, RootSystem};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Membership {
    Both,
    Only,
    Out,
}

fn membership(sys: &RootSystem, p: &RootSubset, id: usize) -> Membership {
    match (p.contains(id), p.contains(sys.neg(id))) {
        (true, true) => Membership::Both,
        (true, false) => Membership::Only,
        _ => Membership::Out,
    }
}

/// `λ = 0` on `P ∩ -P`, `λ > 0` on `P \ -P`, `λ < 0` off `P`.
///
/// For affine systems the pattern at the window boundary is assumed to persist
/// along each real coset, which adds the constraints needed for `λ` to describe
/// the same set beyond the window.
pub fn principal_problem(sys: &RootSystem, p: &RootSubset) -> SignProblem {
    let mut prob = SignProblem::new(sys.dim());
    for r in sys.roots() {
        match membership(sys, p, r.id) {
            Membership::Both => prob.zero.push(r.vec.clone()),
            Membership::Only => prob.strict_pos.push(r.vec.clone()),
            Membership::Out => prob.strict_pos.push(r.vec.neg()),
        }
    }
    if let Kind::Affine { window, .. } = sys.kind() {
        add_affine_tails(sys, p, *window as i64, &mut prob);
    }
    prob
}

fn add_affine_tails(sys: &RootSystem, p: &RootSubset, n: i64, prob: &mut SignProblem) {
    let base = sys.base_system().expect("affine systems carry their base");
    let delta = &sys.imaginary_gens()[0];
    for a in base.ids() {
        for side in [1i64, -1] {
            let id = sys
                .find_lattice(Some(a), &[side * n])
                .expect("boundary roots lie in the window");
            let step = delta.scale(&Scalar::from_int(side));
            let beyond = sys.vector(id).add(&step);
            match membership(sys, p, id) {
                Membership::Both => {
                    prob.zero.push(delta.clone());
                    prob.zero.push(beyond);
                }
                Membership::Only => {
                    prob.nonneg.push(step);
                    prob.strict_pos.push(beyond);
                }
                Membership::Out => {
                    prob.nonneg.push(step.neg());
                    prob.strict_pos.push(beyond.neg());
                }
            }
        }
    }
}

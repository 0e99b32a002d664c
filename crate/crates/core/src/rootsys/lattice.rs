//! Untwisted affine and toroidal systems truncated to an L∞ window on the
//! imaginary lattice.

use std::sync::Arc;

use super::{Kind, Parity, RootSystem};
use crate::error::{Error, Result};
use crate::exactlin::{AmbientSpace, Scalar, Vector};

/// `{α + kδ : α ∈ R, |k| ≤ N} ∪ {kδ : 0 < |k| ≤ N}`.
pub fn build_affine(base: &RootSystem, window: u32) -> Result<RootSystem> {
    let kind = Kind::Affine {
        base: base.name().to_string(),
        window,
    };
    build_lattice(base, 1, window, kind, format!("{}^(1)", base.name()))
}

/// `{α + γ : α ∈ R, γ ∈ Γ} ∪ (Γ \ {0})` with `|γ_i| ≤ N`.
pub fn build_toroidal(base: &RootSystem, lattice_rank: usize, window: u32) -> Result<RootSystem> {
    if lattice_rank < 2 {
        return Err(Error::InvalidParams(format!(
            "toroidal lattice rank must be >= 2, got {lattice_rank}"
        )));
    }
    let kind = Kind::Toroidal {
        base: base.name().to_string(),
        lattice_rank,
        window,
    };
    build_lattice(base, lattice_rank, window, kind, format!("T{lattice_rank}({})", base.name()))
}

fn build_lattice(base: &RootSystem, n: usize, window: u32, kind: Kind, name: String) -> Result<RootSystem> {
    if !base.is_finite() {
        return Err(Error::NonFiniteBase);
    }
    if window < 1 {
        return Err(Error::InvalidParams("window must be >= 1".into()));
    }
    let mut generators = base.space().generators().to_vec();
    if n == 1 {
        generators.push("d".into());
    } else {
        generators.extend((1..=n).map(|i| format!("d{i}")));
    }
    let relations = base
        .space()
        .relations()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.extend((0..n).map(|_| Scalar::zero()));
            r
        })
        .collect();
    let space = AmbientSpace::with_generators(generators, relations)?;
    let bd = base.dim();
    debug_assert_eq!(space.canon_dim(), bd + n);

    let gammas = lattice_box(n, window as i64);
    let mut vectors = Vec::with_capacity((base.len() + 1) * gammas.len());
    for g in &gammas {
        let tail: Vec<Scalar> = g.iter().map(|&x| Scalar::from_int(x)).collect();
        for r in base.roots() {
            vectors.push((r.vec.concat(&tail), r.parity));
        }
        if g.iter().any(|&x| x != 0) {
            vectors.push((Vector::zero(bd).concat(&tail), Parity::Even));
        }
    }
    let imaginary_gens = (0..n).map(|i| Vector::unit(bd + n, bd + i)).collect();
    RootSystem::assemble(
        name,
        kind,
        space,
        vectors,
        imaginary_gens,
        Some(Arc::new(base.clone())),
    )
}

/// All integer points of `[-w, w]^n`.
pub(crate) fn lattice_box(n: usize, w: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-w..=w).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_counts() {
        let a1 = RootSystem::by_name("A1").unwrap();
        assert_eq!(build_affine(&a1, 1).unwrap().len(), 8);
        assert_eq!(build_affine(&a1, 2).unwrap().len(), 14);
        let a2 = RootSystem::by_name("A2").unwrap();
        assert_eq!(build_affine(&a2, 1).unwrap().len(), 20);
    }

    #[test]
    fn toroidal_counts() {
        let a1 = RootSystem::by_name("A1").unwrap();
        assert_eq!(build_toroidal(&a1, 2, 1).unwrap().len(), 26);
        assert_eq!(build_toroidal(&a1, 2, 2).unwrap().len(), 74);
        let a2 = RootSystem::by_name("A2").unwrap();
        assert_eq!(build_toroidal(&a2, 2, 1).unwrap().len(), 62);
        assert!(matches!(build_toroidal(&a1, 1, 1), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn nested_bases_are_rejected() {
        let a1 = RootSystem::by_name("A1").unwrap();
        let aff = build_affine(&a1, 1).unwrap();
        assert!(matches!(build_affine(&aff, 1), Err(Error::NonFiniteBase)));
    }

    #[test]
    fn lattice_coordinates() {
        let a1 = RootSystem::by_name("A1").unwrap();
        let aff = build_affine(&a1, 2).unwrap();
        for id in aff.ids() {
            let c = aff.lattice(id).unwrap();
            assert_eq!(aff.find_lattice(c.real, &c.gamma), Some(id));
        }
        let back = RootSystem::from_json(aff.to_json()).unwrap();
        assert_eq!(back, aff);
    }
}

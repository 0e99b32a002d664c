//! Seeded generators of descriptors and functional chains for the
//! round-trip tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::affine::{AffineDescriptor, AffineType};
use crate::error::{Error, Result};
use crate::exactlin::{Covector, Scalar};
use crate::parabolic::WitnessChain;
use crate::rootsys::RootSystem;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn lattice_base(sys: &RootSystem) -> Result<(&RootSystem, u32)> {
    match (sys.base_system(), sys.window()) {
        (Some(b), Some(n)) => Ok((b, n)),
        _ => Err(Error::InvalidParams(format!("{} is not a truncated system", sys.name()))),
    }
}

fn ints(rng: &mut ChaCha8Rng, len: usize, r: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-r..=r)).collect()
}

/// Largest `|λ(α)|` over the base roots for a functional on the base coordinates.
fn spread(base: &RootSystem, w: &[i64]) -> i64 {
    let l = Covector::from_ints(w);
    base.roots()
        .iter()
        .map(|r| l.pair(&r.vec).abs().to_i64().expect("integer pairing"))
        .max()
        .unwrap_or(0)
}

fn with_tail(w: &[i64], tail: &[i64]) -> Covector {
    let mut v = w.to_vec();
    v.extend_from_slice(tail);
    Covector::from_ints(&v)
}

/// A descriptor of the requested type whose set meets every coset it should,
/// two window steps inside the boundary.
pub fn random_affine_descriptor(rng: &mut ChaCha8Rng, sys: &RootSystem, ty: AffineType) -> Result<AffineDescriptor> {
    let (base, n) = lattice_base(sys)?;
    let bd = base.dim();
    let margin = i64::from(n).saturating_sub(2).max(1);
    let steps = [1i64, 2, -1, -2];
    loop {
        let d = match ty {
            AffineType::Standard => {
                let w = ints(rng, bd, 2);
                let k = *steps.choose(rng).unwrap();
                if spread(base, &w) > margin * k.abs() {
                    continue;
                }
                AffineDescriptor::Standard { lambda: with_tail(&w, &[k]) }
            }
            AffineType::Imaginary => {
                let w = ints(rng, bd, 2);
                if w.iter().all(|&x| x == 0) {
                    continue;
                }
                AffineDescriptor::Imaginary { lambda: with_tail(&w, &[0]) }
            }
            AffineType::Mixed => {
                let w1 = ints(rng, bd, 2);
                let w2 = ints(rng, bd, 2);
                let k = *steps.choose(rng).unwrap();
                if w1.iter().all(|&x| x == 0) {
                    continue;
                }
                let l1 = Covector::from_ints(&w1);
                let l2 = Covector::from_ints(&w2);
                let ok = base
                    .roots()
                    .iter()
                    .filter(|r| l1.pair(&r.vec).is_zero())
                    .all(|r| l2.pair(&r.vec).abs().to_i64().unwrap() <= margin * k.abs());
                if !ok {
                    continue;
                }
                AffineDescriptor::Mixed {
                    lambda1: with_tail(&w1, &[0]),
                    lambda2: with_tail(&w2, &[k]),
                }
            }
        };
        return Ok(d);
    }
}

/// One to three nonzero functionals with small integer entries; base entries
/// are kept small against the lattice entries so no real coset is swallowed
/// by the window.
pub fn random_rational_chain(rng: &mut ChaCha8Rng, sys: &RootSystem) -> Result<WitnessChain> {
    let (base, _) = lattice_base(sys)?;
    let bd = base.dim();
    let n = sys.lattice_rank();
    let len = rng.gen_range(1..=3);
    let mut chain = Vec::with_capacity(len);
    while chain.len() < len {
        let w = ints(rng, bd, 1);
        let u = ints(rng, n, 2);
        if w.iter().chain(&u).all(|&x| x == 0) {
            continue;
        }
        chain.push(with_tail(&w, &u));
    }
    Ok(WitnessChain { chain })
}

/// `Λ = (Λ_W, 1, √2, …)` with `Λ_W` valued in `Z + Z√2`, so that the window
/// contains, for every base root `α`, the lattice point where `Λ(α + γ) = 0`.
/// Returns the functional and its lattice part.
pub fn random_dense_functional(rng: &mut ChaCha8Rng, sys: &RootSystem) -> Result<(Covector, Covector)> {
    let (base, window) = lattice_base(sys)?;
    let bd = base.dim();
    let n = sys.lattice_rank();
    let sqrt2 = Scalar::sqrt(2)?;
    let margin = i64::from(window).saturating_sub(2).max(1);
    let mut lattice = vec![Scalar::one(), sqrt2.clone()];
    lattice.extend((2..n).map(|_| Scalar::from_int(rng.gen_range(-1..=1))));
    let lattice = Covector(lattice);
    loop {
        let a = ints(rng, bd, 1);
        let b = ints(rng, bd, 1);
        let (la, lb) = (spread(base, &a), spread(base, &b));
        if la > margin || lb > margin {
            continue;
        }
        let mut coords: Vec<Scalar> = a
            .iter()
            .zip(&b)
            .map(|(&x, &y)| Scalar::from_int(x) + &(&Scalar::from_int(y) * &sqrt2))
            .collect();
        coords.extend(lattice.0.iter().cloned());
        debug_assert!(coords.iter().all(|c| c.field().is_none_or(|d| d == 2)));
        return Ok((Covector(coords), lattice));
    }
}

use parabolic_core::infinite::{
    classify_affine, make_affine_parabolic, random_affine_descriptor, random_dense_functional, random_rational_chain,
    seeded_rng, toroidal_witness, AffineType, ToroidalCase,
};
use parabolic_core::parabolic::{is_parabolic, principal_witness, strongly_parabolic_witness, WitnessChain};
use parabolic_core::rootsys::{build_affine, build_toroidal, RootSubset, RootSystem};
use parabolic_core::Error;

fn affine(base: &str, n: u32) -> RootSystem {
    build_affine(&RootSystem::by_name(base).unwrap(), n).unwrap()
}

fn toroidal(base: &str, n: u32) -> RootSystem {
    build_toroidal(&RootSystem::by_name(base).unwrap(), 2, n).unwrap()
}

#[test]
fn affine_trichotomy_round_trip() {
    for base in ["A1", "A2", "B2"] {
        let sys = affine(base, 4);
        let mut rng = seeded_rng(7);
        for ty in [AffineType::Standard, AffineType::Imaginary, AffineType::Mixed] {
            for _ in 0..8 {
                let d = random_affine_descriptor(&mut rng, &sys, ty).unwrap();
                let p = make_affine_parabolic(&sys, &d).unwrap();
                let report = classify_affine(&sys, &p).unwrap();
                assert_eq!(report.verdict.kind(), Some(ty), "{base}: {d:?}");
                let principal = principal_witness(&sys, &p).unwrap().is_ok();
                assert_eq!(principal, ty != AffineType::Mixed);
                assert!(strongly_parabolic_witness(&sys, &p).unwrap().is_ok());
            }
        }
    }
}

#[test]
fn imaginary_type_contains_every_imaginary_root() {
    let sys = affine("A2", 4);
    let mut rng = seeded_rng(11);
    for _ in 0..10 {
        let d = random_affine_descriptor(&mut rng, &sys, AffineType::Imaginary).unwrap();
        let p = make_affine_parabolic(&sys, &d).unwrap();
        assert!(sys.ids().filter(|&i| sys.lattice(i).unwrap().real.is_none()).all(|i| p.contains(i)));
    }
}

#[test]
fn affine_rejects_small_windows_and_wrong_kinds() {
    let small = affine("A1", 2);
    assert!(matches!(classify_affine(&small, &RootSubset::full(&small)), Err(Error::InvalidParams(_))));
    let fin = RootSystem::by_name("A2").unwrap();
    assert!(classify_affine(&fin, &RootSubset::full(&fin)).is_err());
}

#[test]
fn affine_non_parabolic_is_reported() {
    let sys = affine("A1", 4);
    let p = RootSubset::empty(&sys);
    let r = classify_affine(&sys, &p).unwrap();
    assert_eq!(r.verdict.kind(), None);
    assert_eq!(r.stable_window, None);
}

#[test]
fn toroidal_rational_chains_round_trip() {
    for base in ["A1", "A2"] {
        let sys = toroidal(base, 4);
        let mut rng = seeded_rng(3);
        for _ in 0..6 {
            let gen = random_rational_chain(&mut rng, &sys).unwrap();
            let p = gen.subset(&sys);
            assert!(is_parabolic(&sys, &p).is_ok());
            let r = toroidal_witness(&sys, &p, None).unwrap();
            assert!(r.chain.describes(&sys, &p), "{base}: {gen:?}");
            assert_ne!(r.case(), ToroidalCase::DenseImage);
        }
    }
}

#[test]
fn toroidal_dense_branch() {
    let sys = toroidal("A1", 4);
    let mut rng = seeded_rng(5);
    for _ in 0..3 {
        let (lambda, lattice) = random_dense_functional(&mut rng, &sys).unwrap();
        let gen = WitnessChain { chain: vec![lambda.clone()] };
        let p = gen.subset(&sys);
        let r = toroidal_witness(&sys, &p, Some(&lattice)).unwrap();
        assert_eq!(r.case(), ToroidalCase::DenseImage);
        assert!(r.chain.describes(&sys, &p));
        assert_eq!(r.chain.chain[0], lambda);
    }
}

#[test]
fn toroidal_full_set_has_empty_chain() {
    let sys = toroidal("A1", 4);
    let r = toroidal_witness(&sys, &RootSubset::full(&sys), None).unwrap();
    assert_eq!(r.case(), ToroidalCase::Full);
    assert!(r.chain.is_empty());
}

#[test]
fn mixed_quadratic_fields_are_rejected() {
    let sys = toroidal("A1", 4);
    let h = parabolic_core::exactlin::Covector(vec![
        parabolic_core::exactlin::Scalar::sqrt(2).unwrap(),
        parabolic_core::exactlin::Scalar::sqrt(3).unwrap(),
    ]);
    assert!(matches!(
        toroidal_witness(&sys, &RootSubset::full(&sys), Some(&h)),
        Err(Error::UnsupportedScalarField(_))
    ));
}

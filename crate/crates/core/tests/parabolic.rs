//! Classification against a brute-force face enumeration of the root
//! hyperplane arrangement, for systems whose roots span a space of dimension
//! at most three.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use parabolic_core::exactlin::Scalar;
use parabolic_core::gallery::parabolic_subsets;
use parabolic_core::parabolic::{
    classify, is_parabolic, principal_witness, strongly_parabolic_witness, triangular, verify_verdict, Verdict,
};
use parabolic_core::rootsys::{RootSubset, RootSystem};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Sign = Vec<i8>;

/// Integer root vectors, each scaled by a positive factor.
fn int_roots(sys: &RootSystem) -> Vec<Vec<i64>> {
    sys.ids()
        .map(|i| {
            let coords: Vec<_> = sys
                .vector(i)
                .coords()
                .iter()
                .map(|x| x.as_rational().expect("rational root").clone())
                .collect();
            let l = coords
                .iter()
                .fold(num_bigint::BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
            coords
                .iter()
                .map(|c| (c.numer() * (&l / c.denom())).to_i64().unwrap())
                .collect()
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rays of the arrangement: one-dimensional intersections of hyperplanes.
fn rays(roots: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
    let mut out = BTreeSet::new();
    let mut push = |v: Vec<i64>| {
        if v.iter().any(|&x| x != 0) {
            let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
            let v: Vec<i64> = v.iter().map(|x| x / g).collect();
            out.insert(v.iter().map(|x| -x).collect());
            out.insert(v);
        }
    };
    match d {
        1 => push(vec![1]),
        2 => roots.iter().for_each(|r| push(vec![-r[1], r[0]])),
        3 => {
            for a in roots {
                for b in roots {
                    push(vec![
                        a[1] * b[2] - a[2] * b[1],
                        a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0],
                    ]);
                }
            }
        }
        _ => panic!("oracle handles dimension <= 3"),
    }
    out.into_iter().collect()
}

/// Sign vectors of every face, from sums of at most `d` rays.
fn faces(sys: &RootSystem) -> BTreeSet<Sign> {
    let d = sys.dim();
    let roots = int_roots(sys);
    let rays = rays(&roots, d);
    let mut points: Vec<Vec<i64>> = vec![vec![0; d]];
    let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    for (i, a) in rays.iter().enumerate() {
        points.push(a.clone());
        for (j, b) in rays.iter().enumerate().skip(i + 1) {
            points.push(add(a, b));
            if d == 3 {
                for c in &rays[j + 1..] {
                    points.push(add(&add(a, b), c));
                }
            }
        }
    }
    points
        .iter()
        .map(|l| roots.iter().map(|r| dot(l, r).signum() as i8).collect())
        .collect()
}

/// Lexicographic refinements of faces by faces.
fn lex_closure(faces: &BTreeSet<Sign>) -> BTreeSet<Sign> {
    let mut all = faces.clone();
    loop {
        let mut next = all.clone();
        for s in &all {
            if !s.contains(&0) {
                continue;
            }
            for t in faces {
                next.insert(s.iter().zip(t).map(|(&a, &b)| if a == 0 { b } else { a }).collect());
            }
        }
        if next.len() == all.len() {
            return all;
        }
        all = next;
    }
}

fn nonneg(s: &Sign) -> Vec<bool> {
    s.iter().map(|&x| x >= 0).collect()
}

fn direct_parabolic(sys: &RootSystem, mask: &[bool]) -> bool {
    sys.ids().all(|i| mask[i] || mask[sys.neg(i)])
        && sys.ids().all(|a| {
            sys.ids()
                .all(|b| !(mask[a] && mask[b]) || sys.sum(a, b).map_or(true, |s| mask[s]))
        })
}

struct Oracle {
    principal: BTreeSet<Vec<bool>>,
    strong: BTreeSet<Vec<bool>>,
}

impl Oracle {
    fn new(sys: &RootSystem) -> Oracle {
        let f = faces(sys);
        Oracle {
            principal: f.iter().map(nonneg).collect(),
            strong: lex_closure(&f).iter().map(nonneg).collect(),
        }
    }

    fn expect(&self, sys: &RootSystem, mask: &[bool]) -> &'static str {
        if !direct_parabolic(sys, mask) {
            "NotParabolic"
        } else if self.principal.contains(mask) {
            "Principal"
        } else if self.strong.contains(mask) {
            "StronglyParabolicNotPrincipal"
        } else {
            "ParabolicNotStronglyParabolic"
        }
    }
}

fn check_mask(sys: &RootSystem, oracle: &Oracle, mask: Vec<bool>) {
    let p = RootSubset::from_mask(sys, mask.clone());
    let v = classify(sys, &p).unwrap();
    assert_eq!(v.class(), oracle.expect(sys, &mask), "{} {:?}", sys.name(), p.ids().collect::<Vec<_>>());
    let json = serde_json::to_string(&v).unwrap();
    let back: Verdict = serde_json::from_str(&json).unwrap();
    verify_verdict(sys, &p, &back).unwrap();
}

fn exhaustive(name: &str) {
    let sys = RootSystem::by_name(name).unwrap();
    let oracle = Oracle::new(&sys);
    for code in 0u64..1 << sys.len() {
        check_mask(&sys, &oracle, (0..sys.len()).map(|i| code >> i & 1 == 1).collect());
    }
}

#[test]
fn all_subsets_of_rank_two_systems() {
    for name in ["A1", "A2", "B2", "osp(1|2)", "sl(2|1)"] {
        exhaustive(name);
    }
}

#[test]
fn seeded_subsets_of_g2_and_a3() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for name in ["G2", "A3", "osp(1|4)", "B3"] {
        let sys = RootSystem::by_name(name).unwrap();
        let oracle = Oracle::new(&sys);
        for _ in 0..1000 {
            // bias toward near-parabolic sets: one side of every line, then a few flips
            let mut mask = vec![false; sys.len()];
            for i in sys.ids() {
                if i < sys.neg(i) {
                    let side = if rng.gen_bool(0.5) { i } else { sys.neg(i) };
                    mask[side] = true;
                    if rng.gen_bool(0.3) {
                        mask[sys.neg(side)] = true;
                    }
                }
            }
            check_mask(&sys, &oracle, mask);
        }
        for p in parabolic_subsets(&sys) {
            check_mask(&sys, &oracle, p.mask(&sys));
        }
    }
}

#[test]
fn parabolic_counts_match_face_counts() {
    for (name, n) in [("A1", 3), ("A2", 13), ("B2", 17), ("G2", 25), ("A3", 75), ("B3", 147), ("C3", 147)] {
        let sys = RootSystem::by_name(name).unwrap();
        assert_eq!(faces(&sys).len(), n, "{name} faces");
        assert_eq!(parabolic_subsets(&sys).len(), n, "{name} parabolic sets");
    }
}

fn system_names() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A2", "B2", "G2", "A3", "sl(2|1)", "osp(1|4)", "gl(2|2)", "osp(3|2)"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn implications_and_negation(name in system_names(), seed in any::<u64>()) {
        let sys = RootSystem::by_name(name).unwrap();
        let all = parabolic_subsets(&sys);
        let p = &all[(seed % all.len() as u64) as usize];
        let v = classify(&sys, p).unwrap();
        let principal = principal_witness(&sys, p).unwrap();
        let strong = strongly_parabolic_witness(&sys, p).unwrap();
        prop_assert!(v.is_parabolic());
        prop_assert_eq!(principal.is_ok(), v.is_principal());
        prop_assert_eq!(strong.is_ok(), v.is_strongly_parabolic());
        if principal.is_ok() {
            prop_assert!(strong.is_ok());
        }
        let neg = p.negated(&sys);
        prop_assert!(is_parabolic(&sys, &neg).is_ok());
        prop_assert_eq!(classify(&sys, &neg).unwrap().class(), v.class());
    }

    #[test]
    fn witnesses_reproduce_the_subset(name in system_names(), seed in any::<u64>()) {
        let sys = RootSystem::by_name(name).unwrap();
        let all = parabolic_subsets(&sys);
        let p = &all[(seed % all.len() as u64) as usize];
        match classify(&sys, p).unwrap() {
            Verdict::Principal { lambda } => {
                let t = triangular(&sys, &lambda).unwrap();
                let got: BTreeSet<usize> = t.zero.iter().chain(&t.plus).copied().collect();
                prop_assert_eq!(got, p.ids().collect::<BTreeSet<_>>());
                let neg_lambda = lambda.scale(&Scalar::from_int(-1));
                let t = triangular(&sys, &neg_lambda).unwrap();
                let got: BTreeSet<usize> = t.zero.iter().chain(&t.plus).copied().collect();
                prop_assert_eq!(got, p.negated(&sys).ids().collect::<BTreeSet<_>>());
            }
            Verdict::StronglyParabolicNotPrincipal { chain, .. } => {
                prop_assert!(chain.describes(&sys, p));
            }
            Verdict::ParabolicNotStronglyParabolic { obstruction } => {
                for level in &obstruction.levels {
                    prop_assert!(level.weights.iter().all(|w| !w.is_negative()));
                    prop_assert!(level.weights.iter().any(|w| *w != Scalar::zero()));
                }
            }
            Verdict::NotParabolic { .. } => prop_assert!(false),
        }
    }
}

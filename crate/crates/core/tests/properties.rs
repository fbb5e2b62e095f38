use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gga_core::contraction::{catalog_sets, contract, verify_contraction, ContractionMap};
use gga_core::fano::collineations;
use gga_core::linalg::{frac, Scalar};
use gga_core::reps::{reflection, u1, u2};
use gga_core::{catalog_algebra, AlgebraElement, AlgebraKind, GGAlgebra, MaskKind, NiceSet};

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn element(a: &GGAlgebra) -> impl Strategy<Value = AlgebraElement> {
    let a = a.clone();
    proptest::collection::vec(rational(), a.dim()).prop_map(move |v| a.unflatten(&v).unwrap())
}

fn b3() -> GGAlgebra {
    catalog_algebra(AlgebraKind::B3, MaskKind::Full)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear(x in element(&b3()), y in element(&b3()), z in element(&b3()), al in rational(), be in rational()) {
        let a = b3();
        let lhs = a.bracket(&x.scale(&al).add(&y.scale(&be)), &z).unwrap();
        let rhs = a.bracket(&x, &z).unwrap().scale(&al).add(&a.bracket(&y, &z).unwrap().scale(&be));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_is_skew(x in element(&b3()), y in element(&b3())) {
        let a = b3();
        let xy = a.bracket(&x, &y).unwrap();
        let yx = a.bracket(&y, &x).unwrap();
        prop_assert!(xy.add(&yx).is_zero());
    }

    #[test]
    fn jacobi_on_random_elements(x in element(&b3()), y in element(&b3()), z in element(&b3())) {
        let a = b3();
        let br = |p: &AlgebraElement, q: &AlgebraElement| a.bracket(p, q).unwrap();
        let sum = br(&x, &br(&y, &z)).add(&br(&y, &br(&z, &x))).add(&br(&z, &br(&x, &y)));
        prop_assert!(sum.is_zero());
    }

    /// For 0/1 maps, passing the contraction conditions is the same as having a nice support.
    #[test]
    fn indicator_verifies_iff_nice(bits in 0u32..(1 << 21)) {
        let t = NiceSet::from_bits(bits).unwrap();
        prop_assert_eq!(verify_contraction(&ContractionMap::indicator(t)).is_ok(), t.is_nice());
    }

    #[test]
    fn support_of_verified_map_is_nice(values in proptest::collection::vec(prop_oneof![Just(0i64), Just(0), Just(1), Just(-1), Just(2)], 21)) {
        let pairs: Vec<_> = gga_core::fano::PAIRS.iter().zip(&values).map(|(&p, &v)| (p, frac(v, 1))).collect();
        let eps = ContractionMap::from_pair_values(&pairs).unwrap();
        if verify_contraction(&eps).is_ok() {
            prop_assert!(eps.support().is_nice());
        }
    }

    #[test]
    fn niceness_is_collineation_invariant(bits in 0u32..(1 << 21), which in 0usize..168) {
        let t = NiceSet::from_bits(bits).unwrap();
        prop_assert_eq!(t.image(&collineations()[which]).is_nice(), t.is_nice());
    }
}

/// `σ_{ij}(s_u v, s_u v') = s_u σ_{ij}(v, v')` for the d4 twist and both reflections.
#[test]
fn reflections_are_twist_equivariant() {
    let d4 = catalog_algebra(AlgebraKind::D4, MaskKind::Full);
    let basis: Vec<Vec<Scalar>> = (0..4).map(|k| gga_core::linalg::unit(4, k)).collect();
    for u in [u1(), u2()] {
        let s = |v: &[Scalar]| reflection(&u, v).unwrap();
        for (i, j) in d4.twist().nonzero_pairs() {
            for v in &basis {
                for w in &basis {
                    let lhs = d4.twist().apply(i, j, &s(v), &s(w));
                    let rhs = s(&d4.twist().apply(i, j, v, w));
                    assert_eq!(lhs, rhs, "({i},{j})");
                }
            }
        }
    }
}

/// Collinear nice sets give contracted algebras with equal fingerprints.
#[test]
fn collinear_sets_share_fingerprints() {
    let mut rng = ChaCha8Rng::seed_from_u64(20260101);
    let algebras: Vec<GGAlgebra> = AlgebraKind::ALL.iter().map(|&k| catalog_algebra(k, MaskKind::NonNeutral)).collect();
    for t in catalog_sets() {
        let base = ContractionMap::indicator(t);
        for mu in collineations().choose_multiple(&mut rng, 3) {
            let moved = base.permuted(mu);
            assert_eq!(moved.support(), t.image(mu));
            for a in &algebras {
                let f0 = contract(a, &base).unwrap().fingerprint();
                let f1 = contract(a, &moved).unwrap().fingerprint();
                assert_eq!(f0, f1, "{} {t} under {mu}", a.name());
            }
        }
    }
}

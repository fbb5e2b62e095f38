use gga_core::catalog::{s_basis, sigma_d4};
use gga_core::linalg::{frac, int, ints, scalar_product};
use gga_core::{
    catalog_algebra, AlgebraElement, AlgebraKind, BasisLabel, ComponentMask, ContractionSpec, GGAlgebra, MaskKind,
    Subspace, TwistTable,
};

fn el(i: usize, v: &[i64]) -> AlgebraElement {
    AlgebraElement::homogeneous(i, ints(v)).unwrap()
}

fn zero_algebra() -> GGAlgebra {
    GGAlgebra::new("zero", TwistTable::zero(4), ComponentMask::FULL).unwrap()
}

#[test]
fn d4_bracket_examples() {
    let d4 = catalog_algebra(AlgebraKind::D4, MaskKind::Full);
    assert_eq!(d4.bracket(&el(1, &[1, 0, 0, 0]), &el(2, &[0, 1, 0, 0])).unwrap(), el(4, &[0, 0, 1, 0]));
    for i in 0..8 {
        let x = el(i, &[3, -1, 2, 5]);
        assert!(d4.bracket(&x, &x).unwrap().is_zero());
    }
    let central = el(0, &[1, 2, 3, 4]);
    let y = el(5, &[1, 1, 0, -2]).add(&el(3, &[0, 1, 1, 1]));
    assert!(d4.bracket(&central, &y).unwrap().is_zero());
    assert!(d4.bracket(&el(1, &[1, 0, 0]), &y).is_err());
}

#[test]
fn bracket_respects_mask() {
    let g2 = catalog_algebra(AlgebraKind::G2, MaskKind::NonNeutral);
    assert!(g2.bracket(&el(0, &[1, 0]), &el(1, &[1, 0])).is_err());
    assert!(GGAlgebra::new("bad", sigma_d4(), ComponentMask::from_indices(&[1, 2]).unwrap()).is_err());
}

#[test]
fn lie_checker_examples() {
    assert!(catalog_algebra(AlgebraKind::D4, MaskKind::Full).verify_lie().is_lie());
    assert!(zero_algebra().verify_lie().is_lie());
    let mut twist = sigma_d4();
    let flipped = twist.get(1, 2).unwrap().scale(&int(-1));
    twist.set(1, 2, flipped);
    let broken = GGAlgebra::new("broken", twist, ComponentMask::FULL).unwrap();
    let r = broken.verify_lie();
    assert!(!r.is_lie());
    assert!(!r.skew.is_empty());
}

#[test]
fn scalar_product_examples() {
    assert_eq!(scalar_product(&ints(&[1, 0, 0, 0]), &ints(&[1, 0, 0, 0])).unwrap(), int(1));
    let [s1, s2] = s_basis();
    assert_eq!(scalar_product(&s1, &s2).unwrap(), int(0));
    assert_eq!(scalar_product(&s2, &s2).unwrap(), int(6));
    assert!(scalar_product(&s1, &ints(&[1, 0])).is_err());
}

#[test]
fn centers() {
    let d4 = catalog_algebra(AlgebraKind::D4, MaskKind::Full);
    assert_eq!(d4.center(), d4.component_subspace(0));
    assert_eq!(catalog_algebra(AlgebraKind::B3, MaskKind::Full).center().dim(), 3);
    assert_eq!(catalog_algebra(AlgebraKind::G2, MaskKind::Full).center().dim(), 2);
    assert!(zero_algebra().center().is_full());
}

#[test]
fn series_examples() {
    let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
    let d4 = catalog_algebra(AlgebraKind::D4, MaskKind::Full);
    assert_eq!(dims(d4.derived_series()), vec![32, 28, 28]);
    assert_eq!(dims(d4.lower_central_series()), vec![32, 28, 28]);
    assert_eq!(dims(zero_algebra().derived_series()), vec![32, 0]);
    assert_eq!(dims(catalog_algebra(AlgebraKind::G2, MaskKind::NonNeutral).derived_series()), vec![14, 14]);
}

#[test]
fn killing_entries() {
    let at = |a: &GGAlgebra, i: usize, p: usize| a.basis_index(BasisLabel { component: i, coord: p }).unwrap();
    for (kind, c) in [(AlgebraKind::D4, -12), (AlgebraKind::B3, -10)] {
        let a = catalog_algebra(kind, MaskKind::Full);
        let k = a.killing();
        assert_eq!(k[(at(&a, 1, 0), at(&a, 1, 0))], int(c));
    }
    let g2 = catalog_algebra(AlgebraKind::G2, MaskKind::NonNeutral);
    let k = g2.killing();
    for i in 1..=7 {
        assert_eq!(k[(at(&g2, i, 0), at(&g2, i, 0))], int(-16));
        assert_eq!(k[(at(&g2, i, 0), at(&g2, i, 1))], int(0));
    }
}

#[test]
fn killing_radical_examples() {
    let d4 = catalog_algebra(AlgebraKind::D4, MaskKind::Full);
    assert_eq!(d4.killing_radical(), d4.component_subspace(0));
    assert!(catalog_algebra(AlgebraKind::D4, MaskKind::NonNeutral).killing_radical().is_zero());
    assert!(zero_algebra().killing_radical().is_full());
}

#[test]
fn grading_orthogonality() {
    for kind in AlgebraKind::ALL {
        let a = catalog_algebra(kind, MaskKind::Full);
        let gram = a.killing();
        for i in 0..8 {
            for j in 0..8 {
                if i != j {
                    assert!(a.killing_block(&gram, i, j).unwrap().is_zero(), "{kind} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn restriction_to_s() {
    let b3 = catalog_algebra(AlgebraKind::B3, MaskKind::Full);
    let g2 = b3.restrict(&s_basis()).unwrap();
    assert_eq!(g2.twist().apply(1, 2, &ints(&[1, 0]), &ints(&[1, 0])), vec![frac(1, 2), frac(-1, 2)]);
    assert!(b3.restrict(&[ints(&[1, 0, 0])]).is_err());
}

#[test]
fn fingerprint_examples() {
    let fp = catalog_algebra(AlgebraKind::D4, MaskKind::Full).fingerprint();
    assert_eq!((fp.dim, fp.center_dim, fp.killing_rank), (32, 4, 28));
    assert!(!fp.solvable && !fp.nilpotent);
    let z = zero_algebra().fingerprint();
    assert_eq!((z.dim, z.center_dim, z.nilpotency_class), (32, 32, Some(1)));
    assert!(z.abelian && z.solvable);
    let g2 = catalog_algebra(AlgebraKind::G2, MaskKind::NonNeutral);
    let c = gga_core::contraction::contract(&g2, &ContractionSpec::Nice(2).build()).unwrap();
    let fp = c.fingerprint();
    assert_eq!(fp.dim, 14);
    assert_eq!(fp.lower_central_series.last(), Some(&0));
    assert_eq!(fp.nilpotency_class, Some(2));
}

#[test]
fn fingerprint_series_are_non_increasing() {
    for kind in AlgebraKind::ALL {
        for n in [1, 4, 9, 14, 19, 23] {
            let a = catalog_algebra(kind, MaskKind::Full);
            let fp = gga_core::contraction::contract(&a, &ContractionSpec::Nice(n).build()).unwrap().fingerprint();
            assert!(fp.derived_series.windows(2).all(|w| w[0] >= w[1]));
            assert!(fp.lower_central_series.windows(2).all(|w| w[0] >= w[1]));
        }
    }
}

use modext::cohomology::{cohomology_group, Cochain};
use modext::extensions::*;
use modext::groups::FiniteGroup;
use modext::metric::{condense_metric, metric_to_modular, QuadraticForm};
use modext::modular::{
    central_charge, deligne_product, equivalent, extension_equivalent, verify_modular, ModularExtension, Symmetry,
};
use modext::scalars::Phase;

fn doubles(g: &FiniteGroup) -> Vec<ModularExtension> {
    let h = cohomology_group(g, 3).unwrap();
    (0..h.order()).map(|i| twisted_double_abelian(g, &h.element(i).unwrap()).unwrap()).collect()
}

#[test]
fn diagonal_image_in_two_toric_codes_is_not_minimal() {
    let tc = drinfeld_double(&FiniteGroup::cyclic(2)).unwrap();
    let e = tc.embedding[1];
    let md = deligne_product(&tc.md, &tc.md);
    let n = tc.md.rank();
    let ext = ModularExtension {
        md,
        symmetry: Symmetry::Bosonic { group: FiniteGroup::cyclic(2) },
        embedding: vec![0, e * n + e],
    };
    ext.validate().unwrap();
    assert!(!minimality_check(&ext));
}

#[test]
fn ising_pair_condenses_to_toric_code() {
    let p = deligne_product(&sixteenfold(1).md, &sixteenfold(15).md);
    let f = p.label_index("(f,f)").unwrap();
    let cands = condense_invertible(&p, &[0, f]).unwrap();
    let tc = metric_to_modular(&QuadraticForm::toric_code()).unwrap();
    assert!(cands.iter().any(|c| equivalent(&c.md, &tc).unwrap().is_some()));
    for c in &cands {
        assert!(verify_modular(&c.md).all_passed());
    }
}

#[test]
fn condensation_rejects_fermions() {
    let tc = metric_to_modular(&QuadraticForm::toric_code()).unwrap();
    let f = tc.label_index("f").unwrap();
    assert!(matches!(condense_invertible(&tc, &[f]), Err(modext::Error::Invalid(_))));
    let e = tc.label_index("e").unwrap();
    let out = condense_invertible(&tc, &[e]).unwrap();
    let via_metric = condense_metric(&QuadraticForm::toric_code(), &[0, e]).unwrap();
    assert_eq!(out[0].md.rank(), via_metric.order());
}

#[test]
fn double_semion_twists() {
    let ds = &doubles(&FiniteGroup::cyclic(2))[1];
    let mut t: Vec<Phase> = ds.md.theta.clone();
    t.sort();
    let mut want = vec![Phase::ZERO, Phase::ZERO, Phase::new(1, 4), Phase::new(3, 4)];
    want.sort();
    assert_eq!(t, want);
}

#[test]
fn twisted_doubles_are_pairwise_inequivalent() {
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::abelian(&[2, 2])] {
        let ds = doubles(&g);
        for i in 0..ds.len() {
            assert!(verify_extension(&ds[i]).all_passed());
            for j in i + 1..ds.len() {
                assert!(extension_equivalent(&ds[i], &ds[j]).unwrap().is_none(), "{} {i} {j}", g.name());
            }
        }
    }
}

#[test]
fn untwisted_abelian_doubles_agree() {
    for g in [FiniteGroup::cyclic(3), FiniteGroup::abelian(&[2, 2])] {
        let a = drinfeld_double(&g).unwrap();
        let b = twisted_double_abelian(&g, &Cochain::zero(g.order(), 3)).unwrap();
        assert!(extension_equivalent(&a, &b).unwrap().is_some());
    }
}

#[test]
fn nonabelian_doubles_verify() {
    for g in [FiniteGroup::dihedral(4), FiniteGroup::quaternion()] {
        let d = drinfeld_double(&g).unwrap();
        assert_eq!(d.md.rank(), 22);
        assert!(verify_extension(&d).all_passed());
    }
    // D(D4) and the type-III twisted double of Z2^3 share modular data
    let d4 = drinfeld_double(&FiniteGroup::dihedral(4)).unwrap();
    let g = FiniteGroup::abelian(&[2, 2, 2]);
    let w = Cochain::from_fn(8, 3, |a| {
        let c = |x: usize, i: usize| g.coords_of(x).unwrap()[i] as i64;
        Phase::new(c(a[0], 0) * c(a[1], 1) * c(a[2], 2), 2)
    });
    let t3 = twisted_double_abelian(&g, &w).unwrap();
    assert!(equivalent(&d4.md, &t3.md).unwrap().is_some());
}

#[test]
fn stacking_over_klein_four_is_commutative_with_unit() {
    let ds = doubles(&FiniteGroup::abelian(&[2, 2]));
    for (i, j) in [(1, 2), (3, 5), (6, 7)] {
        let ab = stack(&ds[i], &ds[j]).unwrap();
        let ba = stack(&ds[j], &ds[i]).unwrap();
        assert!(extension_equivalent(&ab, &ba).unwrap().is_some());
        assert!(extension_equivalent(&ab, &ds[i ^ j]).unwrap().is_some(), "{i} * {j}");
    }
    let unit = stack(&ds[0], &ds[5]).unwrap();
    assert!(extension_equivalent(&unit, &ds[5]).unwrap().is_some());
}

#[test]
fn central_charge_is_additive() {
    for (a, b) in [(1, 2), (3, 13), (7, 7)] {
        let s = stack(&sixteenfold(a), &sixteenfold(b)).unwrap();
        let c = central_charge(&s.md).unwrap();
        assert_eq!(c, modext::modular::CentralCharge::from_value(a + b, 2));
    }
}

#[test]
fn mismatched_symmetries_do_not_stack() {
    let tc = drinfeld_double(&FiniteGroup::cyclic(2)).unwrap();
    assert!(stack(&tc, &sixteenfold(1)).is_err());
}

use std::ops::Add;

use num_rational::BigRational;
use proptest::prelude::*;

use modext::cohomology::{coboundary, Cochain};
use modext::extensions::{identify_sixteenfold, sixteenfold, stack};
use modext::groups::FiniteGroup;
use modext::json::{cyc_from_json, cyc_to_json};
use modext::modular::{central_charge, CentralCharge};
use modext::scalars::{Cyc, Phase};

fn phase() -> impl Strategy<Value = Phase> {
    (-50i64..50, 1u64..40).prop_map(|(n, d)| Phase::new(n, d))
}

fn cyc() -> impl Strategy<Value = Cyc> {
    (1u32..25, prop::collection::vec((-9i64..10, 1i64..5), 1..12)).prop_map(|(level, cs)| {
        let coeffs = cs.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect();
        Cyc::from_coeffs(level, coeffs)
    })
}

fn groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::cyclic(3),
        FiniteGroup::abelian(&[2, 2]),
        FiniteGroup::symmetric(3),
        FiniteGroup::cyclic(5),
    ]
}

proptest! {
    #[test]
    fn phase_to_cyc_is_a_homomorphism(a in phase(), b in phase()) {
        prop_assert_eq!(Cyc::from_phase(a + b), Cyc::from_phase(a) * Cyc::from_phase(b));
    }

    #[test]
    fn abs_square_is_real(z in cyc()) {
        let n = z.abs_sq();
        prop_assert!(n.is_real());
        prop_assert!(n.to_complex().re >= -1e-9);
    }

    #[test]
    fn lifting_is_idempotent(z in cyc(), k in 1u32..4) {
        let m = z.level() * k;
        let once = z.lift(m);
        prop_assert_eq!(&once.lift(m), &once);
        prop_assert_eq!(&once, &z);
        prop_assert_eq!(once.minimize().level(), z.minimize().level());
    }

    #[test]
    fn arithmetic_matches_floats(a in cyc(), b in cyc()) {
        let exact = (&a * &b).add(&a).to_complex();
        let float = a.to_complex() * b.to_complex() + a.to_complex();
        prop_assert!((exact - float).norm() < 1e-6 * (1.0 + float.norm()));
    }

    #[test]
    fn cyc_json_round_trip(z in cyc()) {
        prop_assert_eq!(cyc_from_json(&cyc_to_json(&z)).unwrap(), z);
    }

    #[test]
    fn coboundary_squares_to_zero(gi in 0usize..4, n in 1usize..3, seed in prop::collection::vec(-20i64..20, 64)) {
        let g = &groups()[gi];
        let mut k = 0;
        let c = Cochain::from_fn(g.order(), n, |args| {
            if args.contains(&0) {
                return Phase::ZERO;
            }
            k += 1;
            Phase::new(seed[k % seed.len()], 12)
        });
        prop_assert!(coboundary(g, &coboundary(g, &c)).is_zero());
    }

    #[test]
    fn coboundary_is_additive(gi in 0usize..4, s1 in prop::collection::vec(0i64..6, 36), s2 in prop::collection::vec(0i64..6, 36)) {
        let g = &groups()[gi];
        let mk = |s: &Vec<i64>| {
            let mut k = 0;
            Cochain::from_fn(g.order(), 2, |args| {
                if args.contains(&0) {
                    return Phase::ZERO;
                }
                k += 1;
                Phase::new(s[k % s.len()], 6)
            })
        };
        let (a, b) = (mk(&s1), mk(&s2));
        prop_assert_eq!(coboundary(g, &(&a + &b)), &coboundary(g, &a) + &coboundary(g, &b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sixteenfold_stacking_law(a in 0i64..16, b in 0i64..16) {
        let ab = stack(&sixteenfold(a), &sixteenfold(b)).unwrap();
        let ba = stack(&sixteenfold(b), &sixteenfold(a)).unwrap();
        prop_assert_eq!(identify_sixteenfold(&ab).unwrap(), Some((a + b) % 16));
        prop_assert_eq!(identify_sixteenfold(&ba).unwrap(), Some((a + b) % 16));
        prop_assert_eq!(central_charge(&ab.md).unwrap(), CentralCharge::from_value(a + b, 2));
    }
}

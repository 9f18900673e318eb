use jonq_core::jonq::{base_point_count, plane_degree};
use jonq_core::samples::{random_j0, random_map};
use jonq_core::{QMap, Rational};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config(cases: u32, seed: u64) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn map_from(seed: u64, max_deg: usize) -> QMap {
    random_map(&mut ChaCha8Rng::seed_from_u64(seed), max_deg)
}

fn j0_from(seed: u64, max_deg: usize) -> QMap {
    random_j0(&mut ChaCha8Rng::seed_from_u64(seed), max_deg)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

proptest! {
    #![proptest_config(config(100, 1))]

    #[test]
    fn composition_is_associative(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (f, g, h) = (map_from(a, 2), map_from(b, 2), map_from(c, 2));
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
    }

    #[test]
    fn inverse_cancels(a in any::<u64>()) {
        let f = map_from(a, 3);
        let inv = f.inverse();
        prop_assert!(f.compose(&inv).is_identity());
        prop_assert!(inv.compose(&f).is_identity());
        prop_assert_eq!(inv.inverse(), f);
    }

    #[test]
    fn iterates_add(a in any::<u64>(), j in 0u64..5, k in 0u64..5) {
        let f = map_from(a, 2);
        prop_assert_eq!(f.iterate(j).compose(&f.iterate(k)), f.iterate(j + k));
    }

    #[test]
    fn degree_and_base_points_of_inverse(a in any::<u64>()) {
        let f = map_from(a, 3);
        prop_assert_eq!(plane_degree(&f), plane_degree(&f.inverse()));
        prop_assert_eq!(base_point_count(&f), base_point_count(&f.inverse()));
    }

    #[test]
    fn base_points_are_subadditive(a in any::<u64>(), b in any::<u64>()) {
        let (f, g) = (map_from(a, 2), map_from(b, 2));
        prop_assert!(base_point_count(&f.compose(&g)) <= base_point_count(&f) + base_point_count(&g));
    }

    #[test]
    fn degree_is_submultiplicative(a in any::<u64>(), b in any::<u64>()) {
        let (f, g) = (map_from(a, 2), map_from(b, 2));
        prop_assert!(plane_degree(&f.compose(&g)) <= plane_degree(&f) * plane_degree(&g));
    }

    #[test]
    fn composition_agrees_pointwise(a in any::<u64>(), b in any::<u64>(), x in -20i64..20, y in -20i64..20) {
        let (f, g) = (map_from(a, 2), map_from(b, 2));
        let (x, y) = (int(x), int(y));
        if let Some((gx, gy)) = g.apply(&x, &y) {
            if let Some(expected) = f.apply(&gx, &gy) {
                if let Some(got) = f.compose(&g).apply(&x, &y) {
                    prop_assert_eq!(got, expected);
                }
            }
        }
    }

    #[test]
    fn baum_bott_is_a_conjugacy_invariant(a in any::<u64>(), b in any::<u64>()) {
        let f = j0_from(a, 2);
        let psi = map_from(b, 1);
        let g = f.conjugate_by(&psi);
        prop_assert!(g.is_j0());
        let (bf, bg) = (f.baum_bott().unwrap(), g.baum_bott().unwrap());
        let back = psi.base().inverse();
        for y in -6..=6 {
            let y = int(y);
            let Some(z) = back.apply(&y) else { continue };
            let (nf, df) = (bf.num().eval(&z), bf.den().eval(&z));
            let (ng, dg) = (bg.num().eval(&y), bg.den().eval(&y));
            prop_assert_eq!(nf * dg, ng * df);
        }
    }
}

proptest! {
    #![proptest_config(config(40, 2))]

    #[test]
    fn degree_increments_are_bounded(a in any::<u64>()) {
        let f = j0_from(a, 2);
        let d = plane_degree(&f);
        let mut prev = d;
        let mut cur = f.clone();
        for _ in 1..12 {
            cur = cur.compose(&f);
            let next = plane_degree(&cur);
            prop_assert!(next <= prev + d);
            prev = next;
        }
    }
}

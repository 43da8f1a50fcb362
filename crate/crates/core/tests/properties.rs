mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewtilt::compat::compatible;
use skewtilt::flip::flip;
use skewtilt::graph::canonical_form;
use skewtilt::triang::{fv_arrow, fv_under};
use skewtilt::{CurveClass, LElement, SheafName, SkewCurve};

fn elem(n: i64) -> impl Strategy<Value = LElement> {
    (-3i64..=3, -3i64..=3, -20i64..=20, -3i64..=3).prop_map(move |(a1, a2, a3, a)| LElement::normalize(n, a1, a2, a3, a).unwrap())
}

fn curve(n: i64) -> impl Strategy<Value = SkewCurve> {
    any::<u64>().prop_map(move |seed| common::random_curve(&mut ChaCha8Rng::seed_from_u64(seed), n, 4 * n))
}

fn weight() -> impl Strategy<Value = i64> {
    2i64..=6
}

proptest! {
    #[test]
    fn group_laws(n in weight(), s in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (x, y, z) = (common::random_elem(&mut rng, n, 3), common::random_elem(&mut rng, n, 3), common::random_elem(&mut rng, n, 3));
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!(x + y, y + x);
        prop_assert!((x + (-x)).is_zero());
        prop_assert_eq!(LElement::normalize(n, x.l1, x.l2, x.l3, x.l).unwrap(), x);
        prop_assert_eq!(x.degree() + y.degree(), (x + y).degree());
    }

    #[test]
    fn element_text_round_trip(x in weight().prop_flat_map(elem)) {
        prop_assert_eq!(LElement::parse(x.n, &x.to_string()).unwrap(), x);
    }

    #[test]
    fn effectivity_matches_search(x in weight().prop_flat_map(elem)) {
        prop_assert_eq!(x.is_effective(), common::elem_effective(x));
    }

    #[test]
    fn phi_round_trip(g in weight().prop_flat_map(|n| (Just(n), curve(n)))) {
        let (n, g) = g;
        let s = g.phi();
        prop_assert_eq!(SkewCurve::phi_inv(n, &s).unwrap(), g);
        prop_assert_eq!(SheafName::parse(n, &s.to_string()).unwrap(), s);
    }

    #[test]
    fn shift_composition(case in weight().prop_flat_map(|n| (Just(n), curve(n), elem(n), elem(n)))) {
        let (n, g, x, y) = case;
        prop_assert_eq!(g.shift(n, x).unwrap().shift(n, y).unwrap(), g.shift(n, x + y).unwrap());
        prop_assert_eq!(g.tau(n).unwrap().shift(n, -LElement::omega(n)).unwrap(), g);
    }

    #[test]
    fn x1_minus_x2_flips_half_signs(case in weight().prop_flat_map(|n| (Just(n), curve(n)))) {
        let (n, g) = case;
        let h = g.shift(n, LElement::x1(n) - LElement::x2(n)).unwrap();
        match g {
            SkewCurve::Half { cross, idx, sign } => prop_assert_eq!(h, SkewCurve::Half { cross, idx, sign: sign.flip() }),
            SkewCurve::Pair { .. } => prop_assert_eq!(h, g),
            _ => {}
        }
    }

    #[test]
    fn compatibility_is_symmetric_and_shift_invariant(case in weight().prop_flat_map(|n| (Just(n), curve(n), curve(n), elem(n)))) {
        let (n, g, h, x) = case;
        let c = compatible(n, &g, &h).unwrap();
        prop_assert_eq!(c, compatible(n, &h, &g).unwrap());
        prop_assert_eq!(c, compatible(n, &g.shift(n, x).unwrap(), &h.shift(n, x).unwrap()).unwrap());
    }

    #[test]
    fn sigma_is_an_involution(n in weight(), a in -12i64..12, b in -12i64..12) {
        for c in [CurveClass::Bridge { bot: a, top: b }, CurveClass::LowerArc { a, b: a + 2 + b.abs() }, CurveClass::UpperArc { a, b: a + 2 + b.abs() }] {
            let c = c.canonicalize(n).unwrap();
            prop_assert_eq!(c.sigma_image().sigma_image().canonicalize(n).unwrap(), c);
        }
    }

    #[test]
    fn flips_commute_with_shifts(case in (2i64..=5).prop_flat_map(|n| (Just(n), -2i64..=2, any::<bool>(), elem(n), any::<prop::sample::Index>()))) {
        let (n, a, arrow, x, pick) = case;
        let t = if arrow { fv_arrow(n, a, -a) } else { fv_under(n, a, -a) }.unwrap();
        let g = *pick.get(&t.arcs().iter().collect::<Vec<_>>());
        let r = flip(&t, g).unwrap();
        let shifted = flip(&t.shift(x).unwrap(), &g.shift(n, x).unwrap()).unwrap();
        prop_assert_eq!(shifted.new_tri, r.new_tri.shift(x).unwrap());
        prop_assert_eq!(shifted.added, r.added.shift(n, x).unwrap());
        prop_assert!(t.shift(x).unwrap().validate().ok);
    }

    #[test]
    fn canonical_form_is_an_orbit_invariant(case in (2i64..=5).prop_flat_map(|n| (Just(n), -3i64..=3, -3i64..=3))) {
        let (n, a, s) = case;
        let t = fv_under(n, a, -a).unwrap();
        let u = t.shift(LElement::x3(n).scale(s)).unwrap();
        prop_assert_eq!(canonical_form(&t).unwrap().0, canonical_form(&u).unwrap().0);
    }
}

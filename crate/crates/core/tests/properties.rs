mod common;

use alglens::{
    alexander_of_closure, bennequin_fiber, burau_reduced, fiber_multiplicity, garside, puiseux_pairs,
    quotient_genus, torus_braid, torus_knot_in_lens_criterion, torus_lift_criterion, torus_poly,
    torus_quotient_genus, Alexander, BandDiagram, BigInt, BraidWord, BurauMatrix,
    LensSpace, Orientation, RationalPoly,
};
use common::*;
use num_integer::gcd;
use proptest::prelude::*;

fn word_strategy(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(g, inv)| if inv { -g } else { g });
        prop::collection::vec(letter, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

fn word_pair(max_strands: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(g, inv)| if inv { -g } else { g });
        let words = prop::collection::vec(letter, 0..=max_len);
        (words.clone(), words).prop_map(move |(a, b)| {
            (BraidWord::new(n, a).unwrap(), BraidWord::new(n, b).unwrap())
        })
    })
}

fn alex(w: &BraidWord) -> Alexander {
    alexander_of_closure(w).unwrap()
}

fn burau(w: &BraidWord) -> BurauMatrix {
    burau_reduced(w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn permutation_is_a_homomorphism((a, b) in word_pair(6, 12)) {
        let joined = a.concat(&b).unwrap().permutation();
        prop_assert_eq!(joined, a.permutation().then(&b.permutation()));
    }

    #[test]
    fn components_survive_reduction_and_rotation(w in word_strategy(6, 14), k in 0usize..20) {
        let r = w.closure_components().len();
        prop_assert_eq!(w.free_reduce().closure_components().len(), r);
        prop_assert_eq!(w.rotate(k).closure_components().len(), r);
    }

    #[test]
    fn burau_is_multiplicative((a, b) in word_pair(4, 8)) {
        let joined = burau(&a.concat(&b).unwrap());
        prop_assert_eq!(joined, burau(&a).mul(&burau(&b)).unwrap());
    }

    #[test]
    fn burau_of_inverse_word(w in word_strategy(5, 10)) {
        prop_assert!(burau(&w).mul(&burau(&w.inverse())).unwrap().is_identity());
    }

    #[test]
    fn alexander_is_a_closure_invariant((w, g) in word_pair(4, 10), k in 0usize..10) {
        let a = alex(&w);
        prop_assert_eq!(&alex(&w.free_reduce()), &a);
        prop_assert_eq!(&alex(&w.rotate(k)), &a);
        let conj = g.concat(&w).unwrap().concat(&g.inverse()).unwrap();
        prop_assert_eq!(&alex(&conj), &a);
    }

    #[test]
    fn laurent_ring_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_laurent(&mut r, 5, 4), random_laurent(&mut r, 5, 4), random_laurent(&mut r, 5, 4));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.terms().all(|(_, c)| *c != BigInt::from(0)));
    }

    #[test]
    fn exact_division_recovers_factor(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_laurent(&mut r, 5, 4);
        let b = random_laurent(&mut r, 4, 3);
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn determinant_is_multiplicative(seed in any::<u64>(), d in 1usize..=4) {
        let mut r = rng(seed);
        let (a, b) = (random_matrix(&mut r, d), random_matrix(&mut r, d));
        prop_assert_eq!(a.mul(&b).unwrap().det(), &a.det() * &b.det());
        prop_assert_eq!(a.det(), leibniz_det(&a));
    }

    #[test]
    fn substituted_powers_are_invariant(seed in any::<u64>(), p in 1u32..=7) {
        let f = random_poly_at_origin(&mut rng(seed), 8, 6);
        let g = f.substitute_powers(p).unwrap();
        for space in LensSpace::all_with_order(u64::from(p)) {
            prop_assert_eq!(g.invariance_class(space.p(), space.q()).unwrap(), Some(0));
        }
    }

    #[test]
    fn invariance_class_is_additive_under_products(seed in any::<u64>(), p in 1u64..=7) {
        let mut r = rng(seed);
        let f = random_poly_at_origin(&mut r, 4, 8);
        let g = random_poly_at_origin(&mut r, 4, 8);
        for space in LensSpace::all_with_order(p) {
            let (cf, cg) = (
                f.invariance_class(p, space.q()).unwrap(),
                g.invariance_class(p, space.q()).unwrap(),
            );
            if let (Some(kf), Some(kg)) = (cf, cg) {
                let fg: RationalPoly = &f * &g;
                prop_assert_eq!(fg.invariance_class(p, space.q()).unwrap(), Some((kf + kg) % p));
            }
        }
    }

    #[test]
    fn puiseux_rewriting_conditions(seed in any::<u64>()) {
        let data = random_puiseux(&mut rng(seed), 60, 5);
        let seq = puiseux_pairs(&data).unwrap();
        prop_assert_eq!(check_cable_conditions(&data, seq.pairs()), Ok(()));
    }

    #[test]
    fn lift_shape(seed in any::<u64>()) {
        let d = random_band(&mut rng(seed), 6, 12, 7);
        let lift = d.lift();
        let n = d.strands();
        prop_assert_eq!(lift.strands(), n);
        let (p, q) = (d.space().p() as usize, d.space().q() as usize);
        prop_assert_eq!(lift.len(), p * d.word().len() + q * n * (n - 1));
    }

    #[test]
    fn lifted_counts_agree(seed in any::<u64>()) {
        let d = random_band(&mut rng(seed), 6, 12, 7);
        let p = d.space().p();
        let expected: u64 = d.homology_classes().iter().map(|c| gcd(c.value(), p)).sum();
        prop_assert_eq!(d.lifted_component_count().unwrap() as u64, expected);
        if p == 1 {
            prop_assert_eq!(d.lift().closure_components().len(), d.components().len());
        }
    }

    #[test]
    fn orientation_does_not_change_lift_count(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = random_band(&mut r, 5, 10, 7);
        let plain = d.lifted_component_count().unwrap();
        let signs = d
            .components()
            .iter()
            .map(|_| if rand::Rng::gen_bool(&mut r, 0.5) { Orientation::Negative } else { Orientation::Positive })
            .collect();
        let oriented = d.with_orientations(signs).unwrap();
        prop_assert_eq!(oriented.lifted_component_count().unwrap(), plain);
    }
}

#[test]
fn garside_permutation_reverses_strands() {
    for n in 2..=8 {
        let d = garside(n).unwrap();
        let reversed: Vec<usize> = (0..n).rev().collect();
        assert_eq!(d.permutation().image(), &reversed[..]);
        assert_eq!(d.exponent_sum(), (n * (n - 1) / 2) as i64);
        assert!(d.power(2).permutation().is_identity());
    }
}

#[test]
fn knots_with_trivial_class_lift_to_p_components() {
    let mut r = rng(7);
    let mut seen = 0;
    for _ in 0..4000 {
        let d = random_band(&mut r, 6, 12, 7);
        let comps = d.components();
        if comps.len() == 1 && (comps[0].len() as u64).is_multiple_of(d.space().p()) {
            assert_eq!(d.lift().closure_components().len() as u64, d.space().p());
            seen += 1;
        }
    }
    assert!(seen > 20, "too few knots sampled: {seen}");
}

#[test]
fn two_component_links_with_opposite_classes() {
    let mut r = rng(11);
    let mut seen = 0;
    for _ in 0..4000 {
        let d = random_band(&mut r, 6, 12, 7);
        if d.components().len() != 2 {
            continue;
        }
        let Some(signs) = d.nullhomologous_orientation() else { continue };
        let d = d.with_orientations(signs).unwrap();
        let p = d.space().p();
        let classes = d.homology_classes();
        assert_eq!((classes[0].value() + classes[1].value()) % p, 0);
        let lifted = d.lift().closure_components().len() as u64;
        assert_eq!(lifted, 2 * gcd(classes[0].value(), p));
        seen += 1;
    }
    assert!(seen > 20, "too few links sampled: {seen}");
}

#[test]
fn torus_links_are_symmetric() {
    for a in 2..=6 {
        for b in 2..=6 {
            let ab = torus_braid(a, b).unwrap();
            let ba = torus_braid(b, a).unwrap();
            assert_eq!(alex(&ab), alex(&ba), "T({a},{b})");
        }
    }
}

#[test]
fn torus_knots_match_closed_formula() {
    for a in 2..=7u32 {
        for b in 2..=7u32 {
            if gcd(a, b) != 1 {
                continue;
            }
            let want = Alexander::normalize(&torus_knot_formula(a, b));
            assert_eq!(alex(&torus_braid(a as usize, b as usize).unwrap()), want, "T({a},{b})");
        }
    }
}

#[test]
fn bennequin_matches_milnor_number() {
    for a in 2..=10 {
        for b in 2..=10 {
            let fiber = bennequin_fiber(&torus_braid(a, b).unwrap()).unwrap();
            let milnor = ((a - 1) * (b - 1)) as i64;
            assert_eq!(fiber.euler(), 1 - milnor, "T({a},{b})");
            assert_eq!(fiber.boundary_components(), gcd(a, b) as u64);
        }
    }
}

#[test]
fn general_and_torus_genus_formulas_agree_at_k0() {
    for p in 1..=12u64 {
        for g in 0..=60u64 {
            let integral = (g + p - 1) % p == 0;
            match quotient_genus(p, 0, g) {
                Ok(v) => {
                    assert!(integral);
                    assert_eq!(v, g.div_ceil(p));
                }
                Err(_) => assert!(!integral, "p={p} g={g}"),
            }
        }
    }
}

#[test]
fn genus_proof_identity() {
    let mut checked = 0;
    for p in 1..=12u64 {
        for k in 0..p {
            for lift in 0..=60u64 {
                let Ok(g) = quotient_genus(p, k, lift) else { continue };
                let pbar = fiber_multiplicity(p, k).unwrap() as i64;
                let (p, lift, g) = (p as i64, lift as i64, g as i64);
                assert_eq!(pbar * (2 - 2 * lift - p), p * (1 - 2 * g));
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn torus_quotient_genus_is_symmetric() {
    for a in 1..=12u64 {
        for b in 1..=12u64 {
            let ab = torus_quotient_genus(a, b).ok().map(|t| (t.lift.genus(), t.quotient_genus));
            let ba = torus_quotient_genus(b, a).ok().map(|t| (t.lift.genus(), t.quotient_genus));
            assert_eq!(ab, ba, "T({a},{b})");
        }
    }
}

#[test]
fn torus_criteria_exhaustive() {
    for a in 1..=12u64 {
        for b in 1..=12u64 {
            let f: RationalPoly = torus_poly(a as u32, b as u32).unwrap();
            for p in 1..=7u64 {
                for space in LensSpace::all_with_order(p) {
                    let q = space.q();
                    let crit = torus_lift_criterion(a, b, p, q).unwrap();
                    let class = f.invariance_class(p, q).unwrap();
                    assert_eq!(crit, class, "a={a} b={b} p={p} q={q}");
                    if torus_knot_in_lens_criterion(a, b, p) {
                        assert!(crit.is_some());
                    }
                }
            }
        }
    }
}

#[test]
fn band_diagram_round_trips_through_text() {
    let mut r = rng(3);
    for _ in 0..200 {
        let d = random_band(&mut r, 5, 8, 7);
        assert_eq!(BandDiagram::parse(&d.to_string()).unwrap(), d);
    }
}

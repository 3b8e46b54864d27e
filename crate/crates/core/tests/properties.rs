//! Algebraic and structural invariants as property tests. Random objects
//! come from the crate's seeded samplers, driven by proptest seeds.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use eqcube::alexander::AlexanderPair;
use eqcube::algebra::rational::{int, Rational};
use eqcube::algebra::{HLPoly, OneVarFrac, TriVarElem, PERMUTATIONS};
use eqcube::casson::{dedekind_sum, reciprocity_defect};
use eqcube::diagram::canonicalize;
use eqcube::io::{decode_frac, decode_graph, decode_poly, decode_tri, encode_frac, encode_graph, encode_poly, encode_tri};
use eqcube::sample;
use eqcube::surgery::{knot_change_delta, reduce_mod_qk, run_pipeline, CoefficientWindow, Manifest, Move};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn trefoil() -> AlexanderPair {
    AlexanderPair::equal(HLPoly::from_int_terms(&[(1, 1), (0, -1), (-1, 1)])).unwrap()
}

fn antisymmetric(r: &mut ChaCha8Rng) -> HLPoly {
    let p = sample::laurent(r, 2, 3);
    &p - &p.invert_var()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laurent_ring_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (sample::laurent(&mut r, 3, 4), sample::laurent(&mut r, 3, 4), sample::laurent(&mut r, 2, 4));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &HLPoly::one(), a.clone());
    }

    #[test]
    fn fraction_field_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g, h) = (sample::fraction(&mut r, 2), sample::fraction(&mut r, 2), sample::fraction(&mut r, 2));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g).checked_div(&g).unwrap(), &f);
        }
    }

    #[test]
    fn trivar_field_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (sample::trivar(&mut r), sample::trivar(&mut r), sample::trivar(&mut r));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b).checked_div(&b).unwrap(), &a);
        }
    }

    #[test]
    fn canonical_fractions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = sample::laurent(&mut r, 2, 3);
        let q = sample::nonzero_laurent(&mut r, 2, 3);
        let s = sample::nonzero_laurent(&mut r, 2, 3);
        let k = sample::small_rational(&mut r, 3);
        let direct = OneVarFrac::new(p.clone(), q.clone()).unwrap();
        prop_assert_eq!(&OneVarFrac::new(&p * &s, &q * &s).unwrap(), &direct);
        if k != int(0) {
            prop_assert_eq!(&OneVarFrac::new(p.scale(&k), q.scale(&k)).unwrap(), &direct);
        }
        prop_assert_eq!(&OneVarFrac::new(p.shift_doubled(4), q.shift_doubled(4)).unwrap(), &direct);
    }

    #[test]
    fn inversion_is_an_involutive_automorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (sample::trivar(&mut r), sample::trivar(&mut r));
        prop_assert_eq!(&a.invert().invert(), &a);
        prop_assert_eq!((&a + &b).invert(), &a.invert() + &b.invert());
        prop_assert_eq!((&a * &b).invert(), &a.invert() * &b.invert());
        let f = sample::fraction(&mut r, 2);
        prop_assert_eq!(&f.invert_var().invert_var(), &f);
    }

    #[test]
    fn symmetrization(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = sample::trivar(&mut r);
        let s = f.symmetrize();
        for p in PERMUTATIONS {
            prop_assert_eq!(&s.permute(p), &s);
            prop_assert_eq!(&f.permute(p).symmetrize(), &s);
        }
        prop_assert_eq!(f.invert().symmetrize(), s.invert());
        prop_assert_eq!(s.symmetrize(), s.scale(&int(6)));
    }

    #[test]
    fn codecs_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = sample::laurent(&mut r, 3, 5).shift_doubled(1);
        prop_assert_eq!(decode_poly(&encode_poly(&p)).unwrap(), p);
        let f = sample::fraction(&mut r, 2);
        prop_assert_eq!(decode_frac(&encode_frac(&f)).unwrap(), f);
        let t = sample::trivar(&mut r);
        prop_assert_eq!(decode_tri(&encode_tri(&t)).unwrap(), t);
        let g = sample::graph(&mut r, 2);
        prop_assert_eq!(decode_graph(&encode_graph(&g)).unwrap(), g);
    }

    #[test]
    fn dedekind_reciprocity(p in 1i64..400, q in 1i64..400) {
        prop_assume!(num_integer::gcd(p, q) == 1);
        prop_assert_eq!(reciprocity_defect(q, p).unwrap(), Rational::from_integer(0.into()));
        prop_assert_eq!(dedekind_sum(q + p, p).unwrap(), dedekind_sum(q, p).unwrap());
        prop_assert_eq!(dedekind_sum(-q, p).unwrap(), -dedekind_sum(q, p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn knot_change_is_additive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pair = AlexanderPair::equal(sample::alexander(&mut r, 2)).unwrap();
        let (v, w) = (antisymmetric(&mut r), antisymmetric(&mut r));
        let k = |v: &HLPoly| knot_change_delta(&pair, v).unwrap();
        prop_assert_eq!(k(&(&v + &w)), &k(&v) + &k(&w));
        let c = sample::small_rational(&mut r, 3);
        prop_assert_eq!(k(&v.scale(&c)), k(&v).scale(&c));
    }

    #[test]
    fn canonical_form_is_invariant(seed in any::<u64>(), n in 1usize..=2) {
        let mut r = rng(seed);
        let mut g = sample::graph(&mut r, n);
        let start = canonicalize(&g);
        for _ in 0..40 {
            sample::neutral_move(&mut r, &mut g);
        }
        prop_assert_eq!(canonicalize(&g), start);
    }

    #[test]
    fn connected_sums_commute(seed in any::<u64>(), rot in 0usize..5) {
        let mut r = rng(seed);
        let mut moves: Vec<Move> = (0..5).map(|_| Move::ConnectedSum { lambda: sample::small_rational(&mut r, 2) }).collect();
        let run = |moves: Vec<Move>| run_pipeline(&Manifest { initial: None, moves, reduction: None }).unwrap();
        let a = run(moves.clone());
        moves.rotate_left(rot);
        moves.swap(0, 4);
        let b = run(moves);
        prop_assert_eq!(a.q, b.q);
        prop_assert_eq!(a.q_at_one, b.q_at_one);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn reduction_is_idempotent_and_linear(a in -4i64..=4, b in -4i64..=4, c in -6i64..=6) {
        let pair = trefoil();
        let w = CoefficientWindow::default();
        let f = &TriVarElem::constant(int(c)) + &eqcube::surgery::q_k(&pair, 2).unwrap().scale(&int(a));
        let g = eqcube::surgery::q_k(&pair, 1).unwrap().scale(&int(b));
        let red = |x: &TriVarElem| reduce_mod_qk(x, &pair, 3, w).unwrap();
        let rf = red(&f);
        prop_assert_eq!(&red(&rf.representative).representative, &rf.representative);
        prop_assert_eq!(red(&(&f + &g)).representative, &rf.representative + &red(&g).representative);
        prop_assert_eq!(red(&f.scale(&int(3))).representative, rf.representative.scale(&int(3)));
        prop_assert_eq!(rf.representative, red(&TriVarElem::constant(int(c))).representative);
    }
}

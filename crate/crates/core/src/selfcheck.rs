//! The bundled invariant suite run by `eqcube check`.

use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alexander::AlexanderPair;
use crate::algebra::rational::{int, rat};
use crate::algebra::trivar::{embed, Var, PERMUTATIONS};
use crate::algebra::{HLPoly, OneVarFrac, TriVarElem};
use crate::casson::{dedekind_sum, lambda_lens_pq, reciprocity_defect};
use crate::diagram::{canonicalize, cs_count, normalization_constant, psi, theta};
use crate::io::{decode_tri, encode_tri};
use crate::sample;
use crate::surgery::{
    check_symmetry, framing_v, knot_change_delta, lambda_e_prime, q_k, reduce_mod_qk, run_pipeline, surgery_delta,
    CoefficientWindow, Manifest, Move,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn(&mut ChaCha8Rng) -> Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ring_axioms(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for _ in 0..20 {
        let (a, b, c) = (sample::laurent(rng, 2, 3), sample::laurent(rng, 2, 3), sample::laurent(rng, 2, 3));
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || "HLPoly associativity".into())?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "HLPoly distributivity".into())?;
        let (f, g, h) = (sample::fraction(rng, 2), sample::fraction(rng, 2), sample::fraction(rng, 1));
        ensure(&(&f * &g) * &h == &f * &(&g * &h), || "OneVarFrac associativity".into())?;
        ensure(&f * &(&g + &h) == &(&f * &g) + &(&f * &h), || "OneVarFrac distributivity".into())?;
    }
    for _ in 0..10 {
        let (a, b, c) = (sample::trivar(rng), sample::trivar(rng), sample::trivar(rng));
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || "TriVarElem associativity".into())?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "TriVarElem distributivity".into())?;
    }
    Ok("20 polynomial, 20 fraction, 10 three-variable triples".into())
}

fn inversion_automorphism(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for _ in 0..30 {
        let (f, g) = (sample::fraction(rng, 2), sample::fraction(rng, 2));
        ensure(f.invert_var().invert_var() == f, || format!("not involutive on {f}"))?;
        ensure((&f + &g).invert_var() == &f.invert_var() + &g.invert_var(), || "does not commute with +".into())?;
        ensure((&f * &g).invert_var() == &f.invert_var() * &g.invert_var(), || "does not commute with *".into())?;
    }
    Ok("30 pairs".into())
}

fn symmetrization(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for _ in 0..15 {
        let f = sample::trivar(rng);
        let s = f.symmetrize();
        for p in PERMUTATIONS {
            ensure(s.permute(p) == s, || format!("symmetrization of {f} not fixed by {p:?}"))?;
        }
        ensure(f.invert().symmetrize() == s.invert(), || "inversion does not commute with symmetrization".into())?;
    }
    Ok("15 random elements".into())
}

fn canonical_fractions(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for _ in 0..20 {
        let (p, q, r) = (sample::laurent(rng, 2, 3), sample::nonzero_laurent(rng, 2, 3), sample::nonzero_laurent(rng, 1, 3));
        let direct = OneVarFrac::new(p.clone(), q.clone()).map_err(|e| e.to_string())?;
        let padded = OneVarFrac::new(&p * &r, &q * &r).map_err(|e| e.to_string())?;
        ensure(direct == padded, || format!("({p})/({q}) has two stored forms"))?;
        let x = embed(&direct, Var::X).map_err(|e| e.to_string())?;
        let y = embed(&OneVarFrac::from_poly(r.clone()), Var::Y).map_err(|e| e.to_string())?;
        ensure((&x * &y).checked_div(&y).map_err(|e| e.to_string())? == x, || "three-variable normal form".into())?;
    }
    Ok("20 fractions built two ways".into())
}

fn dedekind(_: &mut ChaCha8Rng) -> Result<String, String> {
    ensure(dedekind_sum(1, 3) == Ok(rat(1, 18)), || "s(1,3) != 1/18".into())?;
    for p in 2..=50i64 {
        for q in 1..p {
            if num_integer::gcd(p, q) == 1 {
                ensure(reciprocity_defect(q, p).map(|d| d.is_zero()) == Ok(true), || format!("reciprocity at ({q},{p})"))?;
            }
        }
    }
    for q in -20..=20 {
        ensure(dedekind_sum(q, 1) == Ok(int(0)), || format!("s({q},1) != 0"))?;
        if q != 0 {
            for p in [1, -1] {
                ensure(lambda_lens_pq(p, q) == Ok(int(0)), || format!("lambda_lens({p},{q}) != 0"))?;
            }
        }
    }
    ensure(lambda_lens_pq(2, 1) == Ok(int(0)), || "lambda(L(2,1)) != 0".into())?;
    Ok("reciprocity for coprime 1 <= q < p <= 50, unit lens spaces".into())
}

fn canonical_form(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for seed in 0..6 {
        let n = 1 + seed % 3;
        let mut g = sample::graph(rng, n);
        let start = canonicalize(&g);
        let steps = if n == 3 { 60 } else { 200 };
        for step in 0..steps {
            sample::neutral_move(rng, &mut g);
            if step % 10 == 9 || n < 3 {
                ensure(canonicalize(&g) == start, || format!("canonical form moved at step {step} from {}", start.0))?;
            }
        }
        let v = rng.gen_range(0..g.vertex_count());
        g.transpose(v);
        let flipped = canonicalize(&g);
        ensure(flipped.0 == start.0 && flipped.1 == -start.1, || "transposition did not flip the sign".into())?;
    }
    Ok("6 seeds with random neutral moves, one transposition each".into())
}

fn psi_checks(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let one = OneVarFrac::one();
    let d = HLPoly::one();
    let base = psi(&theta(&one, &one, &one, &d).map_err(|e| e.to_string())?, &d).map_err(|e| e.to_string())?;
    ensure(base == TriVarElem::constant(int(12)), || format!("psi(theta(1,1,1)) = {base}"))?;
    let t = OneVarFrac::from_poly(HLPoly::t_pow(1));
    let ttt = psi(&theta(&t, &t, &t, &d).map_err(|e| e.to_string())?, &d).map_err(|e| e.to_string())?;
    ensure(ttt == base, || "psi(theta(t,t,t)) differs".into())?;
    for _ in 0..20 {
        let beads: Vec<OneVarFrac> = (0..3).map(|_| OneVarFrac::from_poly(sample::laurent(rng, 3, 2))).collect();
        let v = theta(&beads[0], &beads[1], &beads[2], &d).map_err(|e| e.to_string())?;
        let value = psi(&v, &d).map_err(|e| e.to_string())?;
        ensure(check_symmetry(&value), || "psi output not symmetric".into())?;
    }
    Ok("theta(1,1,1) = 12, gauge invariance, 20 symmetric outputs".into())
}

fn enumeration(_: &mut ChaCha8Rng) -> Result<String, String> {
    ensure(cs_count(1).map_err(|e| e.to_string())? == 8.into(), || "|CS_1| != 8".into())?;
    ensure(normalization_constant(1) == rat(1, 96), || "normalization_constant(1) != 1/96".into())?;
    let c2 = cs_count(2).map_err(|e| e.to_string())?;
    Ok(format!("|CS_1| = 8, |CS_2| = {c2}"))
}

fn surgery_symmetry(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for _ in 0..10 {
        let d = sample::polynomial_datum(rng, 2, 2);
        let l = lambda_e_prime(&d).map_err(|e| e.to_string())?;
        ensure(check_symmetry(&l), || "lambda_e_prime not symmetric".into())?;
        ensure(check_symmetry(&surgery_delta(&d).map_err(|e| e.to_string())?), || "surgery_delta not symmetric".into())?;
    }
    Ok("10 polynomial data of genus <= 2".into())
}

fn evaluation_consistency(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for _ in 0..20 {
        let d = sample::constant_datum(rng, 2, 3, 7);
        let lhs = surgery_delta(&d).map_err(|e| e.to_string())?.eval_111().map_err(|e| e.to_string())?;
        let l = lambda_e_prime(&d).map_err(|e| e.to_string())?.eval_111().map_err(|e| e.to_string())?;
        let c = &d.coefficient;
        let rhs = c.inverse_slope() * int(6) * l + crate::casson::lambda_lens(c) * int(6);
        ensure(lhs == rhs, || format!("evaluation paths disagree for p/q = {}/{}", c.p(), c.q()))?;
    }
    Ok("20 constant data".into())
}

fn knot_changes(rng: &mut ChaCha8Rng) -> Result<String, String> {
    for _ in 0..8 {
        let pair = AlexanderPair::equal(sample::alexander(rng, 2)).map_err(|e| e.to_string())?;
        let anti = |p: HLPoly| &p - &p.invert_var();
        let (v1, v2) = (anti(sample::laurent(rng, 2, 2)), anti(sample::laurent(rng, 2, 2)));
        let k = |v: &HLPoly| knot_change_delta(&pair, v).map_err(|e| e.to_string());
        ensure(k(&(&v1 + &v2))? == &k(&v1)? + &k(&v2)?, || "knot_change_delta not additive".into())?;
        ensure(check_symmetry(&k(&v1)?), || "knot_change_delta not symmetric".into())?;
        let f = framing_v(&pair, 1).map_err(|e| e.to_string())?;
        ensure(f.v.invert_var() == -f.v.clone(), || "framing V not antisymmetric".into())?;
        let m = Manifest {
            initial: Some((pair.clone(), TriVarElem::zero())),
            moves: vec![Move::Framing { n: 1 }, Move::Framing { n: -1 }],
            reduction: None,
        };
        ensure(run_pipeline(&m).map_err(|e| e.to_string())?.q.is_zero(), || "framing +1, -1 is not neutral".into())?;
        let kq = rng.gen_range(1..4u32);
        ensure(check_symmetry(&q_k(&pair, kq).map_err(|e| e.to_string())?), || "q_k not symmetric".into())?;
    }
    Ok("8 random pairs".into())
}

fn quotient(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let pair = AlexanderPair::equal(HLPoly::from_int_terms(&[(1, 1), (0, -1), (-1, 1)])).expect("trefoil");
    let w = CoefficientWindow::default();
    let k_max = 4;
    for k in 1..=k_max {
        let r = reduce_mod_qk(&q_k(&pair, k).map_err(|e| e.to_string())?, &pair, k_max, w).map_err(|e| e.to_string())?;
        ensure(r.is_zero(), || format!("Q_{k} does not reduce to 0"))?;
    }
    let six = reduce_mod_qk(&TriVarElem::constant(int(6)), &pair, k_max, w).map_err(|e| e.to_string())?;
    ensure(!six.is_zero(), || "6 reduces to 0".into())?;
    let again = reduce_mod_qk(&six.representative, &pair, k_max, w).map_err(|e| e.to_string())?;
    ensure(again.representative == six.representative, || "reduction not idempotent".into())?;
    let c = sample::small_rational(rng, 3);
    let scaled = reduce_mod_qk(&TriVarElem::constant(int(6) * &c), &pair, k_max, w).map_err(|e| e.to_string())?;
    ensure(scaled.representative == six.representative.scale(&c), || "reduction not linear".into())?;
    Ok(format!("k <= {k_max}, window [{}, {}]", w.min, w.max))
}

fn pipeline(rng: &mut ChaCha8Rng) -> Result<String, String> {
    let mut sums: Vec<Move> = (0..4).map(|_| Move::ConnectedSum { lambda: sample::small_rational(rng, 2) }).collect();
    let run = |moves: Vec<Move>| run_pipeline(&Manifest { initial: None, moves, reduction: None });
    let a = run(sums.clone()).map_err(|e| e.to_string())?;
    sums.reverse();
    let b = run(sums).map_err(|e| e.to_string())?;
    ensure(a.q == b.q, || "connected sums do not commute".into())?;
    let empty = run(vec![]).map_err(|e| e.to_string())?;
    ensure(empty.q.is_zero() && empty.q_at_one == Some(int(0)), || "empty pipeline is not 0".into())?;
    let back = decode_tri(&encode_tri(&a.q)).map_err(|e| e.to_string())?;
    ensure(back == a.q, || "report round trip".into())?;
    Ok("determinism, base case, round trip".into())
}

const CHECKS: [(&str, Check); 13] = [
    ("ring axioms", ring_axioms),
    ("t -> 1/t automorphism", inversion_automorphism),
    ("symmetrization", symmetrization),
    ("canonical fractions", canonical_fractions),
    ("dedekind sums and lens values", dedekind),
    ("diagram canonical form", canonical_form),
    ("psi on theta graphs", psi_checks),
    ("CS_n enumeration", enumeration),
    ("surgery symmetry", surgery_symmetry),
    ("evaluation consistency", evaluation_consistency),
    ("knot and framing changes", knot_changes),
    ("quotient by Q_k", quotient),
    ("pipeline", pipeline),
];

/// Runs every check with its own generator derived from `seed`.
pub fn run_selfcheck(seed: u64) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, (name, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let start = Instant::now();
            let (passed, detail) = match check(&mut rng) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { name, passed, detail, millis: start.elapsed().as_millis() }
        })
        .collect()
}

/// Plain-text table with one row per check.
pub fn format_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {:width$}  {:>6} ms  {}\n", r.name, r.millis, r.detail));
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    out.push_str(&format!("{} passed, {failed} failed\n", results.len() - failed));
    out
}

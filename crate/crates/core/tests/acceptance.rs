//! Acceptance suite: one test per acceptance criterion, each printing a
//! pass/fail line (visible with `--nocapture`) and asserting its stated
//! runtime budget.
//!
//! Criterion 7 includes one deliberately failing assertion, kept red on
//! purpose: the published single-column limit display at n = 3 is not the
//! value of the limit formula it is attributed to. The failing test prints
//! self-contained evidence; the README section on known deviations has the
//! summary.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use sigchar_core::algebra::zexpr::symbol_bit;
use sigchar_core::algebra::{parse_rational, IntPoly, RatFun, Rational, ZExpr};
use sigchar_core::cherednik::{
    bridge_check, character_closed, character_series, norm_oracle, validate_param,
};
use sigchar_core::hecke::{
    seminormal_oracle, signature_at, signature_z_normalized, HeckeParam, SignatureVariant,
};
use sigchar_core::limit::{
    euler_sign_check, hilbert_check, limit_character, limit_sign_rep_closed, stable_poly,
    stable_series, strict_sequence_form, SymbolicPoly,
};
use sigchar_core::tableaux::{partitions_up_to, Partition};
use std::time::Instant;

fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn rat(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn zexpr(terms: &[(&[u32], i64)]) -> ZExpr {
    let mut e = ZExpr::zero();
    for (indices, coeff) in terms {
        let mut mask = 0u64;
        for &i in *indices {
            mask ^= symbol_bit(i);
        }
        e.add_term(mask, &BigInt::from(*coeff));
    }
    e
}

fn over_pow(num: &[i64], n: usize) -> RatFun {
    RatFun::over_one_minus_t_pow(IntPoly::from_i64(num), n)
}

/// Deterministic pseudo-random stream for reproducible sampling.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

/// Criterion 1: the displayed normalized signatures for n = 3, 4, 5.
#[test]
fn criterion_1_hecke_golden_fixtures() {
    let start = Instant::now();
    let fixtures: [(&[usize], &[(&[u32], i64)]); 9] = [
        (&[2, 1], &[(&[], 1), (&[3], 1)]),
        (&[3, 1], &[(&[], 1), (&[2, 4], 1), (&[2, 3, 4], 1)]),
        (&[2, 1, 1], &[(&[], 1), (&[3], 1), (&[2, 3, 4], 1)]),
        (&[2, 2], &[(&[], 1), (&[3], 1)]),
        (
            &[4, 1],
            &[(&[], 1), (&[3, 5], 1), (&[2, 4, 5], 1), (&[2, 3, 4, 5], 1)],
        ),
        (
            &[3, 1, 1],
            &[
                (&[], 1),
                (&[5], 1),
                (&[2, 4], 1),
                (&[2, 4, 5], 1),
                (&[2, 3, 4], 1),
                (&[2, 3, 4, 5], 1),
            ],
        ),
        (
            &[2, 1, 1, 1],
            &[(&[], 1), (&[3], 1), (&[2, 4, 5], 1), (&[2, 3, 4], 1)],
        ),
        (&[3, 2], &[(&[], 1), (&[2, 4], 2), (&[2, 3, 4], 2)]),
        (&[2, 2, 1], &[(&[], 2), (&[3], 2), (&[2, 4], 1)]),
    ];
    for (parts, expected) in fixtures {
        let lambda = shape(parts);
        assert_eq!(
            signature_z_normalized(&lambda),
            zexpr(expected),
            "shape {lambda}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "budget 1 s, took {elapsed:?}");
    println!("criterion 1: PASS (9 displayed signatures, {elapsed:?})");
}

/// Criterion 2: the ten displayed signature characters on every listed
/// interval, one interior rational parameter per interval.
#[test]
fn criterion_2_cherednik_golden_fixtures() {
    let start = Instant::now();
    // (shape, c, numerator over (1-t)^n)
    let fixtures: [(&[usize], &str, &[i64]); 30] = [
        // trivial representations: unitary for all c < 0
        (&[2], "-1/3", &[1]),
        (&[2], "-5/4", &[1]),
        (&[2], "-7/3", &[1]),
        (&[3], "-1/4", &[1]),
        (&[3], "-5/4", &[1]),
        (&[4], "-1/5", &[1]),
        (&[4], "-9/8", &[1]),
        // two-box column, intervals (-1/2-m, 1/2-m)
        (&[1, 1], "-1/3", &[1]),
        (&[1, 1], "-3/4", &[1, -2]),
        (&[1, 1], "-7/4", &[1, -2, 0, 2]),
        (&[1, 1], "-11/4", &[1, -2, 0, 2, 0, -2]),
        (&[1, 1], "-21/4", &[1, -2, 0, 2, 0, -2, 0, 2, 0, -2]),
        // (2,1), both interval families
        (&[2, 1], "-2/5", &[2, -2]),
        (&[2, 1], "-10/7", &[2, -2, -2, 0, 2]),
        (&[2, 1], "-7/9", &[2, -2, -2]),
        (&[2, 1], "-9/5", &[2, -2, -2, 0, 2, 2]),
        (&[2, 1], "-17/7", &[2, -2, -2, 0, 2, 2, 0, -2]),
        // single column n = 3
        (&[1, 1, 1], "-1/4", &[1]),
        (&[1, 1, 1], "-2/5", &[1, -4, 2]),
        (&[1, 1, 1], "-4/7", &[1, -4, 2, 2]),
        (&[1, 1, 1], "-4/5", &[1, -4, 6, -2, -2]),
        // (3,1)
        (&[3, 1], "-1/5", &[3]),
        (&[3, 1], "-2/5", &[3, -2]),
        (&[3, 1], "-3/5", &[3, -2, -2]),
        (&[3, 1], "-7/8", &[3, -2, -2, -2]),
        // (2,2)
        (&[2, 2], "-2/5", &[2, 0, -2]),
        (&[2, 2], "-3/5", &[2, -6, 2, 2]),
        (&[2, 2], "-5/6", &[2, -6, 2, 2, 2]),
        // (2,1,1) and (1^4) deeper intervals
        (&[2, 1, 1], "-3/5", &[3, -10, 8]),
        (&[1, 1, 1, 1], "-2/5", &[1, -6, 10, -2, -2]),
    ];
    for (parts, c, num) in fixtures {
        let lambda = shape(parts);
        let param = validate_param(rat(c), lambda.n()).unwrap();
        assert_eq!(
            character_closed(&lambda, &param).unwrap(),
            over_pow(num, lambda.n()),
            "shape {lambda}, c = {c}"
        );
    }
    // remaining displayed values already covered by unit fixtures; assert the
    // long ones here as well
    let deep: [(&[usize], &str, &[i64]); 5] = [
        (&[2, 1, 1], "-1/5", &[3]),
        (&[2, 1, 1], "-2/5", &[3, -6, 2]),
        (&[2, 1, 1], "-7/8", &[3, -10, 8, 6, -4, -4, -2]),
        (&[1, 1, 1, 1], "-2/7", &[1, -6, 6, -2]),
        (&[1, 1, 1, 1], "-3/5", &[1, -6, 16, -18, 2, 4, 2]),
    ];
    for (parts, c, num) in deep {
        let lambda = shape(parts);
        let param = validate_param(rat(c), lambda.n()).unwrap();
        assert_eq!(
            character_closed(&lambda, &param).unwrap(),
            over_pow(num, lambda.n()),
            "shape {lambda}, c = {c}"
        );
    }
    let last: [(&[usize], &str, &[i64]); 2] = [
        (
            &[1, 1, 1, 1],
            "-7/10",
            &[1, -6, 16, -18, -2, 16, -2, -4, -2],
        ),
        (&[1, 1, 1, 1], "-7/8", &[1, -6, 16, -24, 18, 0, -8, 0, 2, 2]),
    ];
    for (parts, c, num) in last {
        let lambda = shape(parts);
        let param = validate_param(rat(c), lambda.n()).unwrap();
        assert_eq!(
            character_closed(&lambda, &param).unwrap(),
            over_pow(num, lambda.n()),
            "shape {lambda}, c = {c}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "budget 30 s, took {elapsed:?}"
    );
    println!("criterion 2: PASS (37 interval fixtures, {elapsed:?})");
}

/// Ten reproducible rationals in (-4, 0) valid for every shape of weight
/// up to `max_n`.
fn random_valid_c(count: usize, max_n: usize, seed: u64) -> Vec<Rational> {
    let dens = [7i64, 9, 11, 13, 16, 17, 19, 23];
    let mut lcg = Lcg(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let den = dens[(lcg.next() % dens.len() as u64) as usize];
        let num = 1 + (lcg.next() % (4 * den as u64 - 1)) as i64;
        let c = Rational::new(BigInt::from(-num), BigInt::from(den));
        if validate_param(c.clone(), max_n).is_ok() && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Criterion 3: closed form and direct series agree to degree 12 for every
/// shape of weight <= 5 at 10 random valid parameters.
#[test]
fn criterion_3_series_closed_agreement() {
    let start = Instant::now();
    let cs = random_valid_c(10, 5, 20260808);
    let mut checked = 0;
    for lambda in partitions_up_to(5) {
        for c in &cs {
            let param = validate_param(c.clone(), lambda.n()).unwrap();
            let closed = character_closed(&lambda, &param).unwrap();
            let series = character_series(&lambda, &param, 13).unwrap();
            assert_eq!(
                closed.series_expand(13).unwrap(),
                series,
                "shape {lambda}, c = {c}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 300.0,
        "budget 5 min, took {elapsed:?}"
    );
    println!("criterion 3: PASS ({checked} shape/parameter pairs to degree 12, {elapsed:?})");
}

/// Criterion 4: the exact norm oracle confirms every floor-statistic sign up
/// to weight 6 in the grading, for every shape of weight <= 4 at 10 random
/// valid parameters.
#[test]
fn criterion_4_norm_oracle_equivalence() {
    let start = Instant::now();
    let cs = random_valid_c(10, 4, 4);
    let mut checked = 0;
    for lambda in partitions_up_to(4) {
        for c in &cs {
            let param = validate_param(c.clone(), lambda.n()).unwrap();
            assert!(
                norm_oracle(&lambda, &param, 6).unwrap(),
                "shape {lambda}, c = {c}"
            );
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 300.0,
        "budget 5 min, took {elapsed:?}"
    );
    println!("criterion 4: PASS ({checked} oracle sweeps to weight 6, {elapsed:?})");
}

/// Criterion 5: the numeric seminormal oracle equals the exact raw
/// signature for every shape of weight <= 6 at 20 random parameters in
/// (-3, 3).
#[test]
fn criterion_5_hecke_oracle_equivalence() {
    let start = Instant::now();
    let dens = [7i64, 9, 11, 13, 17, 19];
    let mut lcg = Lcg(55);
    let mut cs: Vec<Rational> = Vec::new();
    while cs.len() < 20 {
        let den = dens[(lcg.next() % dens.len() as u64) as usize];
        let num = 1 + (lcg.next() % (3 * den as u64 - 1)) as i64;
        let sign = if lcg.next() % 2 == 0 { 1 } else { -1 };
        let c = Rational::new(BigInt::from(sign * num), BigInt::from(den));
        if HeckeParam::new(c.clone(), 6).is_ok() && !cs.contains(&c) {
            cs.push(c);
        }
    }
    let mut checked = 0;
    for lambda in partitions_up_to(6) {
        for c in &cs {
            let param = HeckeParam::new(c.clone(), lambda.n()).unwrap();
            let exact = signature_at(&lambda, &param, SignatureVariant::Raw).unwrap();
            let numeric = seminormal_oracle(&lambda, &param, 512).unwrap();
            assert_eq!(exact, BigInt::from(numeric), "shape {lambda}, c = {c}");
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "budget 2 min, took {elapsed:?}"
    );
    println!("criterion 5: PASS ({checked} oracle comparisons, {elapsed:?})");
}

/// Criterion 6: bridge between the asymptotic Cherednik signature and the
/// Hecke signature. Absolute values agree on the full sweep; signed equality
/// holds exactly where the tableau-independent global sign is +1 (including
/// both hand-verified anchors); remaining sign flags are logged, not failed.
#[test]
fn criterion_6_bridge_theorem() {
    let start = Instant::now();
    let cs = [
        // inside (-1, 0)
        "-1/7", "-2/7", "-3/7", "-4/7", "-5/7", "-6/7", "-7/9", "-8/9", "-7/8",
        // inside (-3, -1)
        "-8/7", "-9/7", "-10/7", "-13/7", "-15/7", "-16/7", "-19/7", "-20/7", "-11/9", "-25/9",
    ];
    let mut flags = Vec::new();
    let mut checked = 0;
    for lambda in partitions_up_to(5) {
        for c in cs {
            let Ok(param) = validate_param(rat(c), lambda.n()) else {
                continue;
            };
            let r = bridge_check(&lambda, &param).unwrap();
            assert!(
                r.abs_match_raw,
                "absolute bridge failed: shape {lambda}, c = {c}"
            );
            let predicted = BigInt::from(r.predicted_global_sign) * &r.hecke_raw;
            assert_eq!(r.asymptotic, predicted, "shape {lambda}, c = {c}");
            if !r.signed_match_raw {
                flags.push(format!(
                    "  sign flag: shape {lambda}, c = {c}: a_s = {}, raw = {}",
                    r.asymptotic, r.hecke_raw
                ));
            }
            checked += 1;
        }
    }
    // hand-verified anchors, signed
    let r = bridge_check(&shape(&[3, 1]), &validate_param(rat("-7/8"), 4).unwrap()).unwrap();
    assert_eq!(r.asymptotic, BigInt::from(-3));
    assert_eq!(r.hecke_raw, BigInt::from(-3));
    assert!(r.signed_match_raw);
    let r = bridge_check(&shape(&[1, 1]), &validate_param(rat("-3/4"), 2).unwrap()).unwrap();
    assert_eq!(r.asymptotic, BigInt::from(-1));
    assert_eq!(r.hecke_raw, BigInt::from(-1));
    assert!(r.signed_match_raw);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "budget 2 min, took {elapsed:?}"
    );
    println!(
        "criterion 6: PASS ({checked} comparisons, absolute equality everywhere, anchors \
         signed, {} sign flags each equal to the predicted global sign, {elapsed:?})",
        flags.len()
    );
    for f in flags {
        println!("{f}");
    }
}

/// Criterion 7, attainable clauses: the n = 2 single-column limit and the
/// displayed n = 3, 4 closed forms of the sign-representation family.
#[test]
fn criterion_7_limit_fixtures() {
    let start = Instant::now();
    // limit_character((1,1)) = 1/(1 + t^2)
    assert_eq!(
        limit_character(&shape(&[1, 1])).unwrap(),
        RatFun::new(IntPoly::one(), IntPoly::one_plus_t_pow(2)).unwrap()
    );
    // displayed n = 2, 3 sign-representation closed forms
    assert_eq!(
        limit_sign_rep_closed(2).unwrap(),
        RatFun::new(IntPoly::one(), IntPoly::one_plus_t_pow(2)).unwrap()
    );
    let n3_den = &(&IntPoly::one_plus_t_pow(3) * &IntPoly::one_minus_t_pow(1))
        * &IntPoly::one_minus_t_pow(2);
    assert_eq!(
        limit_sign_rep_closed(3).unwrap(),
        RatFun::new(IntPoly::from_i64(&[1, -2, -2, 1]), n3_den).unwrap()
    );
    // displayed n = 4 value: prefactor times the eight-term bracket
    let pref = {
        let mut num = IntPoly::one();
        let mut den = IntPoly::one_plus_t_pow(4);
        for j in 1..4 {
            num = &num * &IntPoly::one_plus_t_pow(j);
            den = &den * &IntPoly::one_minus_t_pow(j);
        }
        RatFun::new(num, den).unwrap()
    };
    let term = |coeff: i64, exp: usize, den_pows: &[usize]| -> RatFun {
        let den = den_pows
            .iter()
            .fold(IntPoly::one(), |p, &k| &p * &IntPoly::one_plus_t_pow(k));
        RatFun::new(IntPoly::monomial(BigInt::from(coeff), exp), den).unwrap()
    };
    let bracket = [
        term(1, 0, &[]),
        term(-6, 2, &[2]),
        term(-4, 1, &[1]),
        term(-4, 3, &[3]),
        term(12, 3, &[1, 2]),
        term(12, 4, &[1, 3]),
        term(12, 5, &[2, 3]),
        term(-24, 6, &[1, 2, 3]),
    ]
    .iter()
    .fold(RatFun::zero(), |acc, t| &acc + t);
    assert_eq!(limit_sign_rep_closed(4).unwrap(), &pref * &bracket);
    // both displayed routes agree
    for n in 1..=6 {
        assert_eq!(
            strict_sequence_form(n, 8).unwrap(),
            limit_sign_rep_closed(n).unwrap()
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "budget 1 s, took {elapsed:?}");
    println!("criterion 7: PASS on the n = 2 limit, the displayed n = 3 and n = 4 closed forms, and route agreement ({elapsed:?})");
}

/// Criterion 7, final clause, implemented exactly as stated: the limit
/// character of the three-box column is asserted against the published
/// display. This test FAILS, and is expected to: the displayed value is not
/// the value of the limit formula it is attributed to. The finite-parameter
/// character itself, evaluated far below every threshold, converges to the
/// descent-form value computed here, not to the display (the published
/// single-column derivation carries an off-by-one in its negative-content
/// count and a stray `-t -> t` substitution). The assertion is kept literal
/// so the defect stays visible; the printed evidence is self-contained.
#[test]
fn criterion_7_limit_character_single_column_n3_as_stated() {
    let lambda = shape(&[1, 1, 1]);
    let computed = limit_character(&lambda).unwrap();

    // Independent evidence: the finite-c character at c = -149/14, deep in
    // the stable regime for the first 8 coefficients.
    let param = validate_param(rat("-149/14"), 3).unwrap();
    let finite_c = character_series(&lambda, &param, 8).unwrap();
    assert_eq!(
        computed.series_expand(8).unwrap(),
        finite_c,
        "descent-form limit must match the deep finite-c character"
    );

    // The displayed value from the worked example.
    let den = &(&IntPoly::one_plus_t_pow(3) * &IntPoly::one_minus_t_pow(1))
        * &IntPoly::one_minus_t_pow(2);
    let displayed = RatFun::new(IntPoly::from_i64(&[1, -2, -2, 1]), den).unwrap();

    println!("criterion 7 (single-column n = 3, as stated): FAIL (documented upstream defect)");
    println!("  displayed value:    {displayed}");
    println!(
        "  displayed series:   {:?}",
        displayed.series_expand(6).unwrap()
    );
    println!("  limit formula:      {computed}");
    println!(
        "  limit series:       {:?}",
        computed.series_expand(6).unwrap()
    );
    println!("  finite-c series:    {finite_c:?}  (c = -149/14)");
    assert_eq!(
        computed, displayed,
        "the displayed single-column n = 3 limit is not the value of the limit formula; \
         the finite-c evidence above pins the formula's value (see README: known deviations)"
    );
}

/// Criterion 8: stable-limit tower.
#[test]
fn criterion_8_stable_limit() {
    let start = Instant::now();
    // P_0..P_4 exactly as displayed
    let expected: [&[&str]; 5] = [
        &["1"],
        &["2", "-1"],
        &["4", "-1/2", "-1/2"],
        &["8", "-10/3", "1/2", "-1/6"],
        &["14", "-47/12", "-35/24", "5/12", "-1/24"],
    ];
    for (r, coeffs) in expected.iter().enumerate() {
        let p = SymbolicPoly::from_coeffs(coeffs.iter().map(|s| rat(s)).collect());
        assert_eq!(stable_poly(r), p, "P_{r}");
    }
    // series/polynomial agreement for n >= r + 1, r <= 8
    for n in 1..=8u32 {
        let series = stable_series(n, 9);
        for r in 0..=8usize {
            if n as usize >= r + 1 {
                assert_eq!(
                    series[r],
                    stable_poly(r).eval(&Rational::from(BigInt::from(n))),
                    "n = {n}, r = {r}"
                );
            }
        }
    }
    // Hilbert telescope
    for a in 1..=6u32 {
        assert!(hilbert_check(a, 16).unwrap(), "a = {a}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "budget 10 s, took {elapsed:?}"
    );
    println!("criterion 8: PASS (P_0..P_4, series agreement, Hilbert telescope, {elapsed:?})");
}

/// Criterion 9: property bundle.
#[test]
fn criterion_9_property_suites() {
    let start = Instant::now();
    // dimension specialization at z = 1, weight <= 8
    for lambda in partitions_up_to(8) {
        assert_eq!(
            signature_z_normalized(&lambda).sum_of_coeffs(),
            lambda.syt_count_hook(),
            "shape {lambda}"
        );
    }
    // unitary windows on both sides
    for lambda in partitions_up_to(5) {
        let n = lambda.n();
        let c = Rational::new(BigInt::from(1), BigInt::from(2 * n as i64 + 1));
        let hp = HeckeParam::new(c.clone(), n).unwrap();
        assert_eq!(
            signature_at(&lambda, &hp, SignatureVariant::Normalized).unwrap(),
            lambda.syt_count_hook()
        );
        let rp = validate_param(-c, n).unwrap();
        let series = character_series(&lambda, &rp, 8).unwrap();
        let hilbert = RatFun::over_one_minus_t_pow(IntPoly::one(), n)
            .series_expand(8)
            .unwrap();
        let dim = lambda.syt_count_hook();
        for k in 0..8 {
            assert_eq!(series[k], &dim * &hilbert[k], "shape {lambda}, k = {k}");
        }
        // constant term is the dimension at deeper parameters too
        for c in ["-6/7", "-23/13"] {
            let rp = validate_param(rat(c), n).unwrap();
            assert_eq!(character_series(&lambda, &rp, 1).unwrap()[0], dim);
        }
    }
    // magnitude bound
    for lambda in partitions_up_to(5) {
        let n = lambda.n();
        let dim = lambda.syt_count_hook();
        let rp = validate_param(rat("-23/13"), n).unwrap();
        let series = character_series(&lambda, &rp, 10).unwrap();
        let mut graded = BigInt::one();
        for (k, coeff) in series.iter().enumerate() {
            if k > 0 {
                graded = graded * BigInt::from(k + n - 1) / BigInt::from(k);
            }
            assert!(coeff.abs() <= &dim * &graded, "shape {lambda}, k = {k}");
        }
    }
    // piecewise constancy across the displayed intervals
    let intervals: [(&[usize], &str, &str); 6] = [
        (&[1, 1], "-3/4", "-5/4"),
        (&[2, 1], "-2/5", "-3/7"),
        (&[2, 1], "-7/9", "-6/7"),
        (&[3, 1], "-7/8", "-19/24"),
        (&[2, 2], "-5/6", "-7/9"),
        (&[1, 1, 1, 1], "-7/10", "-31/44"),
    ];
    for (parts, c1, c2) in intervals {
        let lambda = shape(parts);
        let p1 = validate_param(rat(c1), lambda.n()).unwrap();
        let p2 = validate_param(rat(c2), lambda.n()).unwrap();
        assert_eq!(
            character_closed(&lambda, &p1).unwrap(),
            character_closed(&lambda, &p2).unwrap(),
            "shape {lambda}"
        );
    }
    // Euler sign identity on 50 reproducible rationals
    let mut lcg = Lcg(99);
    let mut checked = 0;
    while checked < 50 {
        let den = 2 + (lcg.next() % 23) as i64;
        let num = (lcg.next() % (16 * den as u64)) as i64 - 8 * den;
        let z = Rational::new(BigInt::from(num), BigInt::from(den));
        if z.is_integer() {
            continue;
        }
        let bound = z.abs().ceil().to_integer();
        let n_factors = u32::try_from(&bound + BigInt::from(5)).unwrap();
        assert!(euler_sign_check(&z, n_factors).unwrap(), "z = {z}");
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "budget 2 min, took {elapsed:?}"
    );
    println!("criterion 9: PASS (dimension, unitary windows, bounds, constancy, Euler signs, {elapsed:?})");
}

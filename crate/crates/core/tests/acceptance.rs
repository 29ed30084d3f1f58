//! Acceptance suite: every release-gating property at its stated size and
//! time budget, one test per criterion, all exact (identities hold or the
//! test fails — there are no tolerances).

use std::str::FromStr;
use std::time::{Duration, Instant};

use ywkit::drinfeld_fit::{fit_rank_two_or_higher, fit_sl2};
use ywkit::nls;
use ywkit::poisson::{
    classical_det, verify_center, verify_jacobi, verify_truncation_ideal, BracketTable,
    TruncatedYangian,
};
use ywkit::reps::{
    commutant_dimension, drinfeld_from_weights, evaluation_module, extract_highest_weight,
    tensor_modules,
};
use ywkit::rmatrix::{check_classical_ybe, check_unitarity, check_ybe, ThetaClass, ThetaVector};
use ywkit::scalar::Scalar;
use ywkit::signature::Signature;
use ywkit::twist::{
    build_s, check_s_symmetry_on_module, fold_quotient, level_one_closure, verify_rsrs_on_module,
    verify_twisted_bracket, ModeSign, SProduct, TwistDatum,
};

fn sig(s: &str) -> Signature {
    Signature::from_str(s).unwrap()
}

fn finish(criterion: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("{criterion}: PASS in {elapsed:?} (budget {budget:?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its runtime budget: {elapsed:?} >= {budget:?}"
    );
}

#[test]
fn criterion_1_ybe_suite() {
    let started = Instant::now();
    for s in ["2", "3", "4", "1|1", "2|1", "1|2"] {
        let sg = sig(s);
        check_ybe(&sg).unwrap_or_else(|e| panic!("YBE fails for {s}: {e:?}"));
        check_classical_ybe(&sg).unwrap_or_else(|e| panic!("classical YBE fails for {s}: {e:?}"));
    }
    for s in ["2", "3", "4"] {
        check_unitarity(&sig(s)).unwrap_or_else(|e| panic!("unitarity fails for {s}: {e:?}"));
    }
    finish("criterion 1 (ybe)", started, Duration::from_secs(10));
}

#[test]
fn criterion_2_poisson_suite() {
    let started = Instant::now();
    for (s, p) in [("2", 1u32), ("2", 2), ("3", 1), ("1|1", 1)] {
        let sg = sig(s);
        let table = BracketTable::derive(sg, 3 * p).unwrap();
        table
            .check_antisymmetry()
            .unwrap_or_else(|e| panic!("antisymmetry at ({s},{p}): {e}"));
        verify_jacobi(&table, p, None)
            .unwrap_or_else(|e| panic!("untruncated Jacobi at ({s},{p}): {e}"));
        verify_jacobi(&table, p, Some(p))
            .unwrap_or_else(|e| panic!("quotient Jacobi at ({s},{p}): {e}"));
        verify_truncation_ideal(&table, p)
            .unwrap_or_else(|e| panic!("truncation ideal at ({s},{p}): {e}"));
    }
    finish("criterion 2 (poisson)", started, Duration::from_secs(300));
}

#[test]
fn criterion_3_center_suite() {
    let started = Instant::now();
    for (n, p) in [(1usize, 2u32), (2, 1), (2, 2)] {
        let sg = Signature::plain(n);
        let coeffs = classical_det(&sg, p);
        assert_eq!(
            coeffs.len(),
            n * p as usize,
            "determinant coefficient count at ({n},{p})"
        );
        let alg = TruncatedYangian::new(sg, p, None).unwrap();
        verify_center(&alg, &coeffs).unwrap_or_else(|e| panic!("center at ({n},{p}): {e}"));
    }
    finish("criterion 3 (center)", started, Duration::from_secs(120));
}

#[test]
fn criterion_4_drinfeld_fit_suite() {
    let started = Instant::now();
    let table3 = BracketTable::derive(Signature::plain(3), 2).unwrap();
    let fit3 = fit_rank_two_or_higher(&table3)
        .unwrap_or_else(|e| panic!("rank >= 2 cubic fit failed: {e}"));
    assert!(
        !fit3.pure_level_two_feasible,
        "the quadratic correction must be certified nonzero at rank 2"
    );
    let table2 = BracketTable::derive(Signature::plain(2), 3).unwrap();
    fit_sl2(&table2).unwrap_or_else(|e| panic!("sl(2) quartic fit failed: {e}"));
    finish(
        "criterion 4 (drinfeld-fit)",
        started,
        Duration::from_secs(600),
    );
}

#[test]
fn criterion_5_twisted_suite() {
    let started = Instant::now();
    // tau is an involutive Poisson automorphism; twisted bracket at
    // N = 2, 3 and p = 1 for every valid theta class
    for (n, class) in [
        (2usize, ThetaClass::Plus),
        (2, ThetaClass::Minus),
        (3, ThetaClass::Plus),
    ] {
        let sg = Signature::plain(n);
        let theta = ThetaVector::for_class(sg, class).unwrap();
        let tw = TwistDatum::new(theta.clone(), ModeSign::GeneratingFunction);
        tw.verify_involution(2)
            .unwrap_or_else(|e| panic!("tau^2 at ({n},{class}): {e}"));
        let alg = TruncatedYangian::new(sg, 1, Some(2)).unwrap();
        tw.verify_poisson_automorphism(&alg, 1)
            .unwrap_or_else(|e| panic!("tau automorphism at ({n},{class}): {e}"));
        let s = build_s(&tw, 1, SProduct::Plain);
        verify_twisted_bracket(&alg, &tw, &s)
            .unwrap_or_else(|e| panic!("twisted bracket at ({n},{class}): {e:?}"));
    }
    // level-one closure dimensions and structure constants up to N = 4
    for n in 2usize..=4 {
        let sg = Signature::plain(n);
        let alg = TruncatedYangian::new(sg, 1, Some(2)).unwrap();
        let plus = level_one_closure(&alg, &ThetaVector::plus(sg).unwrap())
            .unwrap_or_else(|e| panic!("orthogonal closure at {n}: {e}"));
        assert_eq!(plus.dimension, n * (n - 1) / 2);
        if n % 2 == 0 {
            let minus = level_one_closure(&alg, &ThetaVector::minus(sg).unwrap())
                .unwrap_or_else(|e| panic!("symplectic closure at {n}: {e}"));
            assert_eq!(minus.dimension, n * (n + 1) / 2);
        }
    }
    // folded quotients agree with the closure types
    assert_eq!(
        fold_quotient(Signature::plain(2), 1, ThetaClass::Minus)
            .unwrap()
            .level_one
            .algebra,
        "sp(2)"
    );
    assert_eq!(
        fold_quotient(Signature::plain(2), 1, ThetaClass::Plus)
            .unwrap()
            .level_one
            .algebra,
        "so(2)"
    );
    // quaternary exchange identity on evaluation tensor modules, p <= 2
    let sg = Signature::plain(2);
    for class in [ThetaClass::Plus, ThetaClass::Minus] {
        let theta = ThetaVector::for_class(sg, class).unwrap();
        for params in [vec![0i64], vec![0, 3]] {
            let vals: Vec<Scalar> = params.iter().map(|&v| Scalar::from_int(v)).collect();
            let module = tensor_modules(sg, vals).unwrap();
            verify_rsrs_on_module(&module, &theta, true)
                .unwrap_or_else(|e| panic!("quaternary identity at ({class}, {params:?}): {e:?}"));
        }
    }
    finish("criterion 5 (twisted)", started, Duration::from_secs(300));
}

#[test]
fn criterion_6_super_twisted_suite() {
    let started = Instant::now();
    let sg = sig("1|2");
    let theta = ThetaVector::plus(sg).unwrap();
    assert_eq!(theta.theta0, 1);
    // p = 1: the displayed symmetry relation, exact on the module
    let module = evaluation_module(sg, Scalar::from_int(0)).unwrap();
    check_s_symmetry_on_module(&module, &theta, 1)
        .unwrap_or_else(|e| panic!("super symmetry relation: {e:?}"));
    let module_b = evaluation_module(sg, Scalar::ratio(3, 2)).unwrap();
    check_s_symmetry_on_module(&module_b, &theta, 1)
        .unwrap_or_else(|e| panic!("super symmetry relation at 3/2: {e:?}"));
    finish(
        "criterion 6 (super-twisted)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_7_representation_suite() {
    let started = Instant::now();
    // exchange identity, truncation, and exact round-trip recovery
    for (n, params) in [
        (2usize, vec![0i64]),
        (2, vec![0, 5]),
        (2, vec![0, 2, 5]),
        (3, vec![2]),
        (3, vec![0, 5]),
        (3, vec![0, 2, 5]),
    ] {
        let sg = Signature::plain(n);
        let p = params.len() as u32;
        let vals: Vec<Scalar> = params.iter().map(|&v| Scalar::from_int(v)).collect();
        let module = tensor_modules(sg, vals.clone()).unwrap();
        module
            .rtt_check()
            .unwrap_or_else(|e| panic!("exchange identity at ({n},{params:?}): {e:?}"));
        module
            .truncation_check(p)
            .unwrap_or_else(|e| panic!("truncation at ({n},{params:?}): {e:?}"));
        let hw = extract_highest_weight(&module)
            .unwrap()
            .unwrap_or_else(|nh| {
                panic!(
                    "not highest-weight-cyclic at ({n},{params:?}): kernel {}",
                    nh.kernel_dimension
                )
            });
        let dd = drinfeld_from_weights(&hw, p).unwrap();
        assert!(dd.total_degree() <= p as usize);
        let mut roots: Vec<Scalar> = dd.roots.into_iter().flatten().collect();
        roots.sort();
        let mut expected = vals;
        expected.sort();
        assert_eq!(roots, expected, "round trip at ({n},{params:?})");
    }
    // commutant dimension 1 across a generic sweep of at least 5 choices
    for n in [2usize, 3] {
        let sg = Signature::plain(n);
        for a in 2..=6 {
            let m = tensor_modules(sg, vec![Scalar::from_int(0), Scalar::from_int(a)]).unwrap();
            assert_eq!(commutant_dimension(&m), 1, "commutant at ({n}, (0,{a}))");
        }
    }
    finish(
        "criterion 7 (representations)",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_8_nls_suite() {
    let started = Instant::now();
    let sectors = [
        vec![Scalar::from_int(7)],
        vec![Scalar::from_int(0), Scalar::from_int(3)],
        vec![
            Scalar::from_int(0),
            Scalar::from_int(1),
            Scalar::from_int(5),
        ],
    ];
    for momenta in &sectors {
        let sector = nls::build_sector(2, momenta).unwrap();
        nls::verify_path_independence(&sector)
            .unwrap_or_else(|e| panic!("path independence at {momenta:?}: {e}"));
        nls::verify_symmetry(&sector, 3, true)
            .unwrap_or_else(|e| panic!("symmetry at {momenta:?}: {e}"));
        let module = nls::verify_truncation_on_sector(&sector)
            .unwrap_or_else(|e| panic!("truncated module at {momenta:?}: {e}"));
        assert_eq!(module.level as usize, sector.particles());
    }
    finish("criterion 8 (nls)", started, Duration::from_secs(120));
}

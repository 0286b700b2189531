//! Acceptance criteria. Every comparison is exact rational equality.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! PASS/FAIL line per criterion.

use std::time::Instant;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use locsig::catalog::{self, BiellipticRep, WeierstrassKind};
use locsig::fibration::{self, Fibration, CHECK_CHI, CHECK_SIGNATURE};
use locsig::germ::{self, FiberGerm};
use locsig::picard::{boundary_count, classes_equal};
use locsig::scenarios::{self, sigma_key, lambda_key};
use locsig::{DivisorClass, DivisorRep, Error, Rational};

type Outcome = Result<(), String>;

fn q(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

fn class(g: u32, l: i64, d: &[i64]) -> DivisorClass {
    DivisorClass::from_integers(g, l, d).unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(label: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

fn rand_q(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    q(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

fn rand_nonzero_q(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    loop {
        let r = rand_q(rng, num, den);
        if !r.is_zero() {
            return r;
        }
    }
}

fn ac1_catalog_constants() -> Outcome {
    let minus = catalog::exceptional_weierstrass_class(3, WeierstrassKind::Minus).unwrap();
    let plus = catalog::exceptional_weierstrass_class(3, WeierstrassKind::Plus).unwrap();
    ensure_eq("E_{3,-1}", minus.clone(), class(3, 72, &[-8, -24]))?;
    ensure_eq("E_{3,1}", plus, class(3, 380, &[-40, -100]))?;
    ensure_eq("H_3", catalog::hyperelliptic_g3(), class(3, 9, &[-1, -3]))?;
    ensure_eq("HF", catalog::hyperflex_class(), class(3, 308, &[-32, -76]))?;
    ensure_eq("8 H_3", catalog::hyperelliptic_g3().scale(&q(8, 1)), minus)
}

fn ac2_genus_two_relation() -> Outcome {
    let forms = [
        catalog::bielliptic_g2_class(),
        catalog::bielliptic_g2_rep(BiellipticRep::Rep0).to_class(),
        catalog::bielliptic_g2_rep(BiellipticRep::Rep1).to_class(),
    ];
    ensure_eq("rep0 class", forms[1].clone(), DivisorClass::new(2, q(30, 1), vec![q(-3, 2), q(0, 1)]).unwrap())?;
    ensure_eq("rep1 class", forms[2].clone(), class(2, 15, &[0, 3]))?;
    for x in &forms {
        for y in &forms {
            ensure!(classes_equal(x, y).unwrap(), "{x} and {y} not equivalent");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let x = DivisorClass::new(
            2,
            rand_q(&mut rng, 1000, 100),
            vec![rand_q(&mut rng, 1000, 100), rand_q(&mut rng, 1000, 100)],
        )
        .unwrap();
        let n = x.normal_form();
        ensure!(n.normal_form() == n, "normal_form not idempotent on {x}");
        ensure!(n.lambda_coeff().is_zero(), "normal form of {x} keeps lambda");
        ensure!(classes_equal(&x, &n).unwrap(), "{x} not equivalent to its normal form");
    }
    ensure!(
        DivisorClass::genus_two_relation().normal_form().is_zero(),
        "10λ - δ0 - 2δ1 does not normalize to 0"
    );
    Ok(())
}

fn ac3_lefschetz_quartic() -> Outcome {
    let s = scenarios::lefschetz_quartic_pencil();
    let fib = &s.fibration;
    ensure_eq("chi_f", fibration::chi_f(fib), q(3, 1))?;
    ensure_eq("e_f", fibration::e_f(fib), q(27, 1))?;
    let inv = fibration::relative_invariants(fib).map_err(|e| e.to_string())?;
    ensure_eq("K_f^2", inv.k_f_sq, q(9, 1))?;
    ensure_eq("Sign", inv.signature, q(-15, 1))?;
    let hf = s.rep(scenarios::REP_HYPERFLEX).unwrap();
    let h3 = s.rep(scenarios::REP_HYPERELLIPTIC).unwrap();
    ensure_eq(
        "HF(f)",
        fibration::divisor_degree(hf, &q(3, 1), &[q(27, 1), q(0, 1)]).unwrap(),
        q(60, 1),
    )?;
    let f0 = s.germ_type("F_0").unwrap();
    let fhf = s.germ_type("F_hf").unwrap();
    let checks = [
        ("lambda_H3(F_0)", germ::lambda_local(h3, f0), q(1, 9)),
        ("sigma_H3(F_hf)", germ::sigma_local(h3, fhf), q(0, 1)),
        ("sigma_H3(F_0)", germ::sigma_local(h3, f0), q(-5, 9)),
        ("lambda_HF(F_hf)", germ::lambda_local(hf, fhf), q(1, 308)),
        ("lambda_HF(F_0)", germ::lambda_local(hf, f0), q(8, 77)),
        ("sigma_HF(F_hf)", germ::sigma_local(hf, fhf), q(1, 77)),
        ("sigma_HF(F_0)", germ::sigma_local(hf, f0), q(-45, 77)),
    ];
    for (label, got, want) in checks {
        ensure_eq(label, got.map_err(|e| e.to_string())?, want)?;
    }
    for rep in [h3, hf] {
        let report = fibration::verify_localization(fib, rep).map_err(|e| e.to_string())?;
        ensure!(report.passed(), "localization fails for {rep:?}: {:?}", report.checks);
    }
    ensure_eq(
        "27(-45/77) + 60(1/77)",
        q(27, 1) * q(-45, 77) + q(60, 1) * q(1, 77),
        q(-15, 1),
    )
}

fn ac4_genus_two_double_cover() -> Outcome {
    for n in [2i64, 4, 6, 8] {
        let cover = scenarios::double_cover_invariants(n, 6).map_err(|e| e.to_string())?;
        ensure_eq("fiber genus", cover.fiber_genus, 2)?;
        let fib = Fibration::new(2, 0, cover.chi_o, cover.euler_top, cover.k_sq).unwrap();
        ensure_eq("chi_f", fibration::chi_f(&fib), q(n, 1))?;
        ensure_eq("e_f", fibration::e_f(&fib), q(10 * n, 1))?;
        let inv = fibration::relative_invariants(&fib).map_err(|e| e.to_string())?;
        ensure_eq("K_f^2", inv.k_f_sq, q(2 * n, 1))?;
        ensure_eq("Sign", inv.signature, q(-6 * n, 1))?;

        let s = scenarios::genus2_bielliptic_scenario(n).map_err(|e| e.to_string())?;
        use scenarios::{REP_BIELLIPTIC_0 as B0, REP_BIELLIPTIC_1 as B1, REP_STANDARD as STD};
        let table = [
            (STD, "F_0", q(-3, 5)),
            (STD, "F_1", q(-1, 5)),
            (STD, "F_b", q(0, 1)),
            (B0, "F_0", q(-4, 5)),
            (B0, "F_1", q(-1, 1)),
            (B1, "F_0", q(-1, 1)),
            (B1, "F_1", q(-9, 5)),
            (B1, "F_b", q(4, 15)),
            (B0, "F_b", q(2, 15)),
        ];
        for (rep_name, germ_name, want) in table {
            let rep = s.rep(rep_name).unwrap();
            let g = s.germ_type(germ_name).unwrap();
            let got = germ::sigma_local(rep, g).map_err(|e| e.to_string())?;
            ensure_eq(&sigma_key(rep_name, germ_name), got, want)?;
        }
        // standard rep agrees with the genus-2 Hodge localization
        for (germ_name, g) in &s.germ_types {
            ensure_eq(
                &lambda_key(STD, germ_name),
                germ::lambda_local(s.rep(STD).unwrap(), g).unwrap(),
                germ::lambda_g2(g).unwrap(),
            )?;
        }
        for (rep_name, rep) in &s.reps {
            let report = fibration::verify_localization(&s.fibration, rep).map_err(|e| e.to_string())?;
            ensure!(report.passed(), "N={n} {rep_name}: {:?}", report.checks);
            ensure_eq("Sign", report.globals.signature.clone(), q(-6 * n, 1))?;
        }
        let global = |x: Rational| q(10 * n, 1) * q(-4, 5) + q(15 * n, 1) * x;
        ensure_eq("global check with 2/15", global(q(2, 15)), q(-6 * n, 1))?;
        ensure!(global(q(2, 5)) != q(-6 * n, 1), "2/5 unexpectedly satisfies the global check");
    }
    Ok(())
}

fn ac5_lsd_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let genus = rng.gen_range(2..=6u32);
        let ss_delta: Vec<u64> = (0..boundary_count(genus)).map(|_| rng.gen_range(0..4)).collect();
        let base = FiberGerm::builder(genus)
            .pseudo_period(rng.gen_range(1..=12))
            .chi(rand_q(&mut rng, 50, 12))
            .euler_top(rng.gen_range(-20..=20))
            .ss_delta(ss_delta)
            .build()
            .unwrap();
        let e = base.euler_defect();
        let chi = base.chi().clone();
        let c1 = q(12, 1) * &chi - &e;
        let consistent = base.to_builder().c1_sq(c1.clone()).build().unwrap();
        let lsd = germ::local_signature_defect(&consistent).map_err(|err| err.to_string())?;
        ensure_eq("4chi - e", lsd.clone(), q(4, 1) * &chi - &e)?;
        ensure_eq("(c1^2 - 2e)/3", lsd, (&c1 - q(2, 1) * &e) / q(3, 1))?;

        let shift = rand_nonzero_q(&mut rng, 20, 6);
        let inconsistent = base.to_builder().c1_sq(&c1 + &shift).build().unwrap();
        match germ::local_signature_defect(&inconsistent) {
            Err(Error::LocalNoether { residual }) => ensure_eq("residual", residual, shift)?,
            other => return Err(format!("inconsistent triple accepted: {other:?}")),
        }
    }
    Ok(())
}

fn rand_rep(rng: &mut ChaCha8Rng, genus: u32, key: Option<&str>) -> DivisorRep {
    let b = (0..boundary_count(genus)).map(|_| rand_q(rng, 40, 6)).collect();
    DivisorRep::new(genus, rand_nonzero_q(rng, 40, 6), b, key.map(str::to_string)).unwrap()
}

fn ac6_rep_scaling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let genus = rng.gen_range(2..=7u32);
        let rep = rand_rep(&mut rng, genus, Some("D"));
        let degree = q(rng.gen_range(0..50), rng.gen_range(1..=8));
        let germ = FiberGerm::builder(genus)
            .pseudo_period(rng.gen_range(1..=6))
            .ss_delta((0..boundary_count(genus)).map(|_| rng.gen_range(0..5)).collect())
            .degree("D", degree.clone())
            .build()
            .unwrap();
        let c = rand_nonzero_q(&mut rng, 30, 7);
        let base = germ::lambda_hat(&rep, &germ).unwrap();
        let scaled_rep = rep.scaled(&c).unwrap();
        ensure_eq(
            "explicit degree",
            germ::lambda_hat_with_degree(&scaled_rep, &germ, &(&c * &degree)).unwrap(),
            base.clone(),
        )?;
        if c.is_positive() {
            let scaled_germ = germ.to_builder().degree("D", &c * &degree).build().unwrap();
            ensure_eq("germ degree", germ::lambda_hat(&scaled_rep, &scaled_germ).unwrap(), base)?;
        }
    }
    Ok(())
}

fn ac7_localization_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..200 {
        let genus = rng.gen_range(2..=5u32);
        let mut rep = rand_rep(&mut rng, genus, Some("D"));
        // delta_0 perturbations are only visible when b_0 != 0
        while rep.b()[0].is_zero() {
            rep = rand_rep(&mut rng, genus, Some("D"));
        }
        let count = rng.gen_range(1..=5);
        let mut germs = Vec::new();
        for i in 0..count {
            let g = FiberGerm::builder(genus)
                .pseudo_period(rng.gen_range(1..=4))
                .chi(q(rng.gen_range(0..4), rng.gen_range(1..=3)))
                .euler_top(2 - 2 * i64::from(genus) + rng.gen_range(0..4))
                .ss_delta((0..boundary_count(genus)).map(|_| rng.gen_range(0..3)).collect())
                .degree("D", q(rng.gen_range(0..4), rng.gen_range(1..=2)))
                .build()
                .unwrap();
            germs.push((format!("G{i}"), g, rng.gen_range(1..=4u64)));
        }
        // Scale multiplicities so that sum lambda_D is an integer.
        let sum_lambda: Rational = germs
            .iter()
            .map(|(_, g, m)| Rational::from(*m) * germ::lambda_local(&rep, g).unwrap())
            .sum();
        let scale = sum_lambda.denom().to_u64().ok_or("denominator overflow")?;
        for (_, _, m) in germs.iter_mut() {
            *m *= scale;
        }
        let chi_f: Rational = germs
            .iter()
            .map(|(_, g, m)| Rational::from(*m) * germ::lambda_local(&rep, g).unwrap())
            .sum();
        let e_f: Rational = germs
            .iter()
            .map(|(_, g, m)| Rational::from(*m) * germ::delta_local(g))
            .sum();
        ensure!(chi_f.is_integer() && e_f.is_integer(), "non-integral sums");
        let mut fib = Fibration::from_relative(
            genus,
            rng.gen_range(0..=3),
            chi_f.numer().to_i64().unwrap(),
            e_f.numer().to_i64().unwrap(),
        )
        .unwrap();
        for (name, g, m) in &germs {
            fib.push_germ(name.clone(), g.clone(), *m).unwrap();
        }
        let report = fibration::verify_localization(&fib, &rep).map_err(|e| e.to_string())?;
        ensure!(report.passed(), "trial {trial}: {:?}", report.checks);

        let victim = rng.gen_range(0..count);
        let entry = &mut fib.germs_mut()[victim];
        let mut ss = entry.germ.ss_delta().to_vec();
        ss[0] += 1;
        entry.germ = entry.germ.to_builder().ss_delta(ss).build().unwrap();
        let report = fibration::verify_localization(&fib, &rep).map_err(|e| e.to_string())?;
        ensure!(!report.passed(), "trial {trial}: perturbation not detected");
        for name in [CHECK_CHI, CHECK_SIGNATURE] {
            let residual = &report.check(name).unwrap().residual;
            ensure!(!residual.is_zero(), "trial {trial}: {name} residual is zero");
        }
    }
    Ok(())
}

fn ac8_general_formula() -> Outcome {
    ensure_eq(
        "E_{4,-1}",
        catalog::exceptional_weierstrass_class(4, WeierstrassKind::Minus).unwrap(),
        class(4, 264, &[-30, -96, -128]),
    )?;
    ensure_eq(
        "E_{4,1}",
        catalog::exceptional_weierstrass_class(4, WeierstrassKind::Plus).unwrap(),
        class(4, 930, &[-100, -270, -360]),
    )?;
    ensure_eq(
        "E_{3,-1}",
        catalog::exceptional_weierstrass_class(3, WeierstrassKind::Minus).unwrap(),
        class(3, 72, &[-8, -24]),
    )?;
    ensure_eq(
        "E_{3,1}",
        catalog::exceptional_weierstrass_class(3, WeierstrassKind::Plus).unwrap(),
        class(3, 380, &[-40, -100]),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance_suite() {
    let criteria: [Criterion; 8] = [
        ("AC1 catalog constants at g=3", ac1_catalog_constants),
        ("AC2 genus-2 relation and normal form", ac2_genus_two_relation),
        ("AC3 Lefschetz quartic pencil", ac3_lefschetz_quartic),
        ("AC4 genus-2 double cover, N in {2,4,6,8}", ac4_genus_two_double_cover),
        ("AC5 local signature defect forms agree", ac5_lsd_forms),
        ("AC6 representative scaling invariance", ac6_rep_scaling),
        ("AC7 localization soundness", ac7_localization_soundness),
        ("AC8 general-formula spot checks", ac8_general_formula),
    ];
    let start = Instant::now();
    let mut failures = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failures.push(name);
            }
        }
    }
    println!("acceptance suite finished in {:?}", start.elapsed());
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}

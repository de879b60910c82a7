//! Acceptance criteria, run in sequence so each timing is measured alone.
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use icf_core::cf_engine::{convergents, equivalence_transform, eval_gcf_numeric};
use icf_core::exact_algebra::{Polynomial, QuadraticSurd, Rational};
use icf_core::interlace::{
    ab_polynomials, ab_values, certificate_sweep, convergent_error, fibonacci_analogy_check,
    gf_check, make_interlaced, make_tilde, run_suite, GfKind, InterlaceParams, Side, Suite,
};
use icf_core::lab::{conjecture_scan, euler_check, quadratic_pattern, scan_pair, Verdict};
use icf_core::par::Execution;
use icf_core::qseries::{stabilization_report, Selector};
use num_bigint::BigInt;
use num_traits::Pow;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&n| big(n)).collect()
}

fn within(elapsed: Duration, limit: Duration) -> String {
    format!("{:.2?} (limit {:?})", elapsed, limit)
}

fn table_reproduction() -> Outcome {
    // A_j, B_j at s = 1, constant term first.
    const ROWS: [(&[i64], &[i64]); 11] = [
        (&[0, 1], &[1]),
        (&[0, 2], &[1]),
        (&[0, 1, 2], &[1, 1]),
        (&[0, 1, 4], &[1, 2]),
        (&[0, 1, 3, 4], &[1, 2, 2]),
        (&[0, 1, 4, 8], &[1, 3, 4]),
        (&[0, 1, 4, 8, 8], &[1, 3, 5, 4]),
        (&[0, 1, 5, 12, 16], &[1, 4, 8, 8]),
        (&[0, 1, 5, 13, 20, 16], &[1, 4, 9, 12, 8]),
        (&[0, 1, 6, 18, 32, 32], &[1, 5, 13, 20, 16]),
        (&[0, 1, 6, 19, 38, 48, 32], &[1, 5, 14, 25, 28, 16]),
    ];
    let t = Instant::now();
    let ab = ab_polynomials(&big(1), 10);
    let matched = ROWS
        .iter()
        .enumerate()
        .map(|(j, (a, b))| {
            usize::from(ab.a(j) == &Polynomial::from_i64s(a))
                + usize::from(ab.b(j) == &Polynomial::from_i64s(b))
        })
        .sum::<usize>();
    let el = t.elapsed();
    let limit = Duration::from_secs(1);
    outcome(
        matched == 22 && el < limit,
        format!("{matched}/22 polynomials equal, {}", within(el, limit)),
    )
}

fn cross_oracle_convergents() -> Outcome {
    let jmax = 40;
    let mut bad = Vec::new();
    for x in [2i64, 3, 5, 7] {
        let params = InterlaceParams::new(x, 1).unwrap();
        let (av, bv) = ab_values(&big(x), &big(1), jmax);
        let tilde = convergents(&make_tilde(&params).unwrap(), jmax + 1);
        let f = make_interlaced(&params).unwrap();
        let xr = Rational::from_integer(big(x));
        let r = move |j: usize| {
            if j % 2 == 1 {
                Pow::pow(&xr, j.div_ceil(2))
            } else {
                Pow::pow(&xr, j / 2).recip()
            }
        };
        let scaled = convergents(&equivalence_transform(&f, r, jmax).unwrap(), jmax + 1);
        let direct = convergents(&f, jmax + 1);
        for j in 0..=jmax {
            let (a, b) = (
                Rational::from_integer(av[j].clone()),
                Rational::from_integer(bv[j].clone()),
            );
            let exact = |n: &Rational, d: &Rational| n == &a && d == &b;
            if !exact(&tilde[j].numerator, &tilde[j].denominator)
                || !exact(&scaled[j].numerator, &scaled[j].denominator)
                || direct[j].value() != Some(&a / &b)
            {
                bad.push(format!("x={x} j={j}"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("4 x values, j <= {jmax}, mismatches: {bad:?}"),
    )
}

fn identity_suite() -> Outcome {
    let t = Instant::now();
    let rep = run_suite(Suite::S1, &big(1), 200, Execution::default());
    let el = t.elapsed();
    let failing: Vec<_> = rep
        .reports
        .iter()
        .filter(|r| !r.holds())
        .map(|r| r.identity.name())
        .collect();
    let checked: usize = rep.reports.iter().map(|r| r.checked).sum();
    let limit = Duration::from_secs(30);
    outcome(
        failing.is_empty() && rep.violations.is_empty() && rep.reports.len() == 13 && el < limit,
        format!(
            "{} identities, {checked} residuals, failing {failing:?}, {}",
            rep.reports.len(),
            within(el, limit)
        ),
    )
}

fn general_suite() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for s in [1i64, 2, 3, 5] {
        let rep = run_suite(Suite::General, &big(s), 100, Execution::default());
        let plain_ok = rep
            .reports
            .iter()
            .filter(|r| !r.identity.is_candidate())
            .all(|r| r.holds());
        let pairs_ok = rep.pairs.iter().all(|p| {
            if s == 1 {
                // the two forms coincide at s = 1
                p.literal_holds && p.corrected_holds
            } else {
                let literal = rep
                    .reports
                    .iter()
                    .find(|r| r.identity == p.literal)
                    .unwrap();
                p.identified() == Some(p.corrected) && !literal.nonzero.is_empty()
            }
        });
        ok &= plain_ok && pairs_ok && rep.violations.is_empty() && rep.pairs.len() == 3;
        notes.push(format!(
            "s={s}: relations {}, pairs {}",
            if plain_ok { "ok" } else { "FAIL" },
            rep.pairs
                .iter()
                .map(|p| p
                    .identified()
                    .map_or("both".to_string(), |i| i.name().to_string()))
                .collect::<Vec<_>>()
                .join(",")
        ));
    }
    outcome(ok, notes.join("; "))
}

fn certificates() -> Outcome {
    let xs: Vec<BigInt> = (2..=10).map(big).collect();
    let ss = ints(&[1, 2, 3]);
    match certificate_sweep(&xs, &ss, 50, Execution::default()) {
        Ok(c) => {
            let held = c.iter().filter(|c| c.holds()).count();
            let bracketed = c.iter().filter(|c| c.brackets()).count();
            outcome(
                held == c.len() && bracketed == c.len() && c.len() == 9 * 3 * 50 * 2,
                format!(
                    "{} certificates, {held} exact, {bracketed} bracketed",
                    c.len()
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn quantitative_rate() -> Outcome {
    let mut ok = true;
    let mut seen = Vec::new();
    for k in 5..=12usize {
        let err = convergent_error(&big(2), &big(1), k, Side::Odd, 4096).unwrap();
        let bound = -((k * k) as i64) + 3 * k as i64;
        let below = err.abs_below_pow2(bound);
        ok &= below;
        seen.push(format!(
            "k={k}: 2^{} vs 2^{bound}",
            err.magnitude_exponent().unwrap_or(i64::MIN)
        ));
    }
    outcome(ok, seen.join(", "))
}

fn golden_ratio() -> Outcome {
    let cf = make_tilde(&InterlaceParams::new(1, 1).unwrap()).unwrap();
    let v = eval_gcf_numeric(&cf, 40, 128).unwrap();
    let phi = QuadraticSurd::new(1, 2, 5).unwrap().to_bigfloat(128);
    let d = (&v.value - &phi).abs().to_f64();
    outcome(d < 1e-7, format!("|value - phi| = {d:.3e}"))
}

fn quadratic_pattern_instance() -> Outcome {
    let t = Instant::now();
    let r = quadratic_pattern(&big(1_000_000), 18).unwrap();
    let el = t.elapsed();
    let first = ints(&[
        1, 1000000, 3, 333333, 9, 111111, 27, 37037, 81, 12345, 1, 2, 26, 1, 2, 4114, 1, 8,
    ]);
    let second = ints(&[1, 1, 999999, 3, 333333, 9, 111111, 27, 37037, 81, 12345]);
    let a = r.neg_x0_cf.expand(18) == first;
    let b = r.r_cf.expand(11) == second;
    let limit = Duration::from_secs(5);
    outcome(
        a && b && el < limit,
        format!("-x0 prefix {a}, r prefix {b}, {}", within(el, limit)),
    )
}

fn euler_instance() -> Outcome {
    match euler_check(2, 12, 1024) {
        Ok(r) => outcome(
            r.matches() && r.observed.len() >= 12,
            format!(
                "observed {:?}",
                r.observed
                    .iter()
                    .take(12)
                    .map(|q| q.to_string())
                    .collect::<Vec<_>>()
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn generating_functions() -> Outcome {
    let mut worst = usize::MAX;
    for s in 1..=3 {
        for kind in GfKind::ALL {
            let r = gf_check(kind, &big(s), 31);
            worst = worst.min(r.vanishes_through().unwrap_or(0));
        }
    }
    outcome(
        worst >= 30,
        format!("all residuals vanish through t^{worst}"),
    )
}

fn qseries_stabilization() -> Outcome {
    let d = stabilization_report(Selector::DAll, 24, 30, Execution::default());
    // N_{2k+1} for k = 0..=24 are the rows k = 1..=25 of the odd selector
    let n = stabilization_report(Selector::NOdd, 25, 30, Execution::default());
    let d_ok = d.nondecreasing() && d.final_agreement() >= 10;
    let n_ok = n.nondecreasing() && n.final_agreement() >= 10;
    let seq = |r: &icf_core::qseries::StabilizationReport| {
        r.rows
            .iter()
            .map(|row| row.agreement.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let even_d = stabilization_report(Selector::DEven, 12, 30, Execution::default());
    let even_n = stabilization_report(Selector::NEven, 12, 30, Execution::default());
    outcome(
        d_ok && n_ok,
        format!(
            "D_k vs auluck [{}] monotone {}; N_(2k+1) vs ramanujan [{}] monotone {}; \
             for reference D_2k final {} monotone {}, N_2k vs 1+ramanujan final {} monotone {}",
            seq(&d),
            d.nondecreasing(),
            seq(&n),
            n.nondecreasing(),
            even_d.final_agreement(),
            even_d.nondecreasing(),
            even_n.final_agreement(),
            even_n.nondecreasing()
        ),
    )
}

fn fibonacci_analogy() -> Outcome {
    let mut failures = Vec::new();
    for x in 1..=3 {
        for n in 1..=30 {
            if !fibonacci_analogy_check(&big(x), n).is_ok_and(|c| c.holds()) {
                failures.push((x, n));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("90 cases, failures {failures:?}"),
    )
}

fn conjecture_smoke() -> Outcome {
    let (precision, max_terms) = (10_000, 500);
    let t = Instant::now();
    let mut rows: Vec<_> = (1..=5)
        .map(|x| scan_pair(x, x, precision, max_terms))
        .collect();
    match conjecture_scan(
        &[1, 2, 3, 4],
        &[1, 2, 3, 4],
        precision,
        max_terms,
        Execution::default(),
    ) {
        Ok(grid) => rows.extend(grid.into_iter().filter(|r| !r.is_control())),
        Err(e) => return outcome(false, e.to_string()),
    }
    let el = t.elapsed();
    let mut ok = true;
    let mut notes = Vec::new();
    for r in &rows {
        if r.is_control() {
            let good = matches!(r.verdict, Verdict::PeriodFound { .. })
                && r.control.as_ref().is_some_and(|c| c.prefix_agrees)
                && r.replay();
            ok &= good;
            notes.push(format!("({},{}):{}", r.x, r.y, r.verdict));
        } else {
            let good = r.flag.is_none() && r.validated() >= 100;
            ok &= good;
            notes.push(format!("({},{}):{}", r.x, r.y, r.validated()));
        }
    }
    let limit = Duration::from_secs(600);
    ok &= el < limit;
    outcome(ok, format!("{}; {}", notes.join(" "), within(el, limit)))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("reference rows of A_j, B_j", table_reproduction),
        ("cross-oracle convergents", cross_oracle_convergents),
        ("s = 1 identity suite", identity_suite),
        ("s-dependent suite", general_suite),
        ("convergence certificates", certificates),
        ("quantitative convergence rate", quantitative_rate),
        ("golden ratio", golden_ratio),
        ("quadratic pattern a = 10^6", quadratic_pattern_instance),
        ("exp(1/2) digits", euler_instance),
        ("generating functions", generating_functions),
        ("q-series stabilization", qseries_stabilization),
        ("Fibonacci analogy", fibonacci_analogy),
        ("conjecture scan smoke test", conjecture_smoke),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} {} {name}: {} [{:.2?}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed()
        );
    }
    println!("acceptance: {} of 13 criteria pass", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

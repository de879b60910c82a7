use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};
use icf_core::cf_engine::{check_determinant, convergents as cf_convergents};
use icf_core::exact_algebra::{Polynomial, Rational};
use icf_core::interlace::{
    ab_polynomials, ab_values, convergence_certificate, fibonacci_analogy_check, gf_check,
    make_interlaced, make_tilde, run_suite, GfKind, Identity, InterlaceParams, Side, Suite,
    REFERENCE_ROWS,
};
use icf_core::lab::{self, Verdict};
use icf_core::par::Execution;
use icf_core::qseries::{stabilization_report, Selector};
use icf_core::{Error, Result};
use num_bigint::BigInt;
use serde_json::json;

use crate::report::{Cell, Report};

/// Grid values given as `a..b` (inclusive) or `a,b,c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueList(pub Vec<u64>);

fn parse_range(v: &str) -> std::result::Result<ValueList, String> {
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|e| format!("`{s}`: {e}"));
    let out: Vec<u64> = if let Some((a, b)) = v.split_once("..") {
        let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
        RangeInclusive::new(a, b).collect()
    } else {
        v.split(',')
            .map(parse)
            .collect::<std::result::Result<_, _>>()?
    };
    if out.is_empty() {
        return Err(format!("`{v}` is empty"));
    }
    Ok(ValueList(out))
}

#[derive(Args, Debug)]
#[command(
    about = "Print A_j(x), B_j(x) at s = 1 for j <= 10 and diff them against the recurrence",
    after_help = "Reference rows are the eleven published pairs A_j(x), B_j(x) with A_0 = x, B_0 = 1.\n\
CSV columns: j,A_j,B_j,generated_A_j,generated_B_j,match"
)]
pub struct Table1Args {}

pub fn table1(_: &Table1Args) -> Result<Report> {
    let ab = ab_polynomials(&BigInt::from(1), 10);
    let mut r = Report::new(
        "table1",
        json!({"s": "1", "jmax": 10}),
        &["j", "A_j", "B_j", "generated_A_j", "generated_B_j", "match"],
    );
    for (j, (a, b)) in REFERENCE_ROWS.iter().enumerate() {
        let (a, b) = (Polynomial::from_i64s(a), Polynomial::from_i64s(b));
        let ok = &a == ab.a(j) && &b == ab.b(j);
        if !ok {
            r.violations
                .push(format!("row {j} differs from the recurrence"));
        }
        r.row(vec![
            Cell::Index(j),
            Cell::Poly(a),
            Cell::Poly(b),
            Cell::Poly(ab.a(j).clone()),
            Cell::Poly(ab.b(j).clone()),
            Cell::Bool(ok),
        ]);
    }
    r.notes.push(format!("{} diffs", r.violations.len()));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// [x; s/x, x^2, s/x^2, ...]
    Interlaced,
    /// the equivalent integer fraction x + x/(s + 1/(x + x/(s + ...)))
    Tilde,
}

#[derive(Args, Debug)]
#[command(
    about = "Convergents by forward recurrence, cross-checked against A_j(x,s)/B_j(x,s)",
    after_help = "Forward recurrence A_j = b_j A_{j-1} + a_j A_{j-2} from A_{-1} = 1, A_0 = b_0, \
and the determinant A_j B_{j-1} - A_{j-1} B_j = (-1)^(j-1) a_1...a_j.\n\
For --form tilde the numerators and denominators must equal A_j(x,s), B_j(x,s) exactly; \
for --form interlaced the values must agree.\n\
CSV columns: j,numerator,denominator,value,matches_ab"
)]
pub struct ConvergentsArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub x: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub s: u64,
    #[arg(long, default_value_t = 10)]
    pub jmax: usize,
    #[arg(long, value_enum, default_value_t = Form::Tilde)]
    pub form: Form,
}

pub fn convergents(a: &ConvergentsArgs) -> Result<Report> {
    let params = InterlaceParams::new(a.x, a.s)?;
    let cf = match a.form {
        Form::Interlaced => make_interlaced(&params)?,
        Form::Tilde => make_tilde(&params)?,
    };
    let convs = cf_convergents(&cf, a.jmax + 1);
    let (av, bv) = ab_values(&params.x, &params.s, a.jmax);
    let mut r = Report::new(
        "convergents",
        json!({"x": a.x.to_string(), "s": a.s.to_string(), "jmax": a.jmax,
               "form": format!("{:?}", a.form).to_lowercase()}),
        &["j", "numerator", "denominator", "value", "matches_ab"],
    );
    if let Err(e) = check_determinant(&cf, &convs) {
        r.violations.push(e.to_string());
    }
    for c in &convs {
        let (aj, bj) = (
            Rational::from_integer(av[c.index].clone()),
            Rational::from_integer(bv[c.index].clone()),
        );
        let value = c.value();
        let ok = match a.form {
            Form::Tilde => c.numerator == aj && c.denominator == bj,
            Form::Interlaced => value.as_ref() == Some(&(&aj / &bj)),
        };
        if !ok {
            r.violations
                .push(format!("convergent {} disagrees with A_j/B_j", c.index));
        }
        r.row(vec![
            Cell::Index(c.index),
            Cell::Rat(c.numerator.clone()),
            Cell::Rat(c.denominator.clone()),
            Cell::opt(value.map(Cell::Rat)),
            Cell::Bool(ok),
        ]);
    }
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Check the polynomial identities between A_j(x,s) and B_j(x,s) symbolically in x",
    after_help = "Suites: s1 (relations stated at s = 1, such as A_{2j+1} = A_{2j} + x A_{2j-1}, \
Hankel-type determinants in A_{2j}, A_{2j+1}, and the certificate \
relations for P(z) = z^2 - (2x-1) z - x at A_j/B_j), general (the four-term recurrence \
u_j = ((s+1)x+1) u_{j-2} - x u_{j-4} and the s-dependent relations such as \
x B_{2j+1} = s A_{2j}), all.\n\
For the literal/corrected candidate pairs the report identifies which form is an identity.\n\
CSV columns: identity,formula,role,j_min,j_max,checked,holds,first_failing_j,first_residual"
)]
pub struct IdentitiesArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub s: u64,
    #[arg(long, default_value_t = 50)]
    pub jmax: usize,
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    /// Check a single identity by name instead of a suite.
    #[arg(long)]
    pub identity: Option<Identity>,
}

pub fn identities(a: &IdentitiesArgs) -> Result<Report> {
    let s = BigInt::from(a.s);
    let mut r = Report::new(
        "identities",
        json!({"s": a.s.to_string(), "jmax": a.jmax, "suite": format!("{:?}", a.suite).to_lowercase(),
               "identity": a.identity.map(|i| i.name())}),
        &[
            "identity",
            "formula",
            "role",
            "j_min",
            "j_max",
            "checked",
            "holds",
            "first_failing_j",
            "first_residual",
        ],
    );
    let rep = run_suite(a.suite, &s, a.jmax, Execution::default());
    let role = |id: Identity| {
        rep.pairs
            .iter()
            .find_map(|p| {
                if p.literal == id {
                    Some("literal candidate")
                } else if p.corrected == id {
                    Some("corrected candidate")
                } else {
                    None
                }
            })
            .unwrap_or("identity")
    };
    for ir in rep
        .reports
        .iter()
        .filter(|ir| a.identity.is_none_or(|id| id == ir.identity))
    {
        let first = ir.nonzero.first();
        r.row(vec![
            Cell::text(ir.identity.name()),
            Cell::text(ir.identity.formula()),
            Cell::text(role(ir.identity)),
            Cell::Index(ir.j_min),
            Cell::Index(ir.j_max),
            Cell::Index(ir.checked),
            Cell::Bool(ir.holds()),
            Cell::opt(first.map(|(j, _)| Cell::Index(*j))),
            Cell::opt(first.map(|(_, p)| Cell::Poly(p.clone()))),
        ]);
    }
    if let Some(id) = a.identity {
        if rep.skipped.contains(&id) {
            return Err(Error::Domain(format!("{id} is stated only for s = 1")));
        }
        let candidate_ok =
            id.is_candidate() || rep.reports.iter().all(|ir| ir.identity != id || ir.holds());
        if !candidate_ok {
            r.violations.push(format!("{id} has a nonzero residual"));
        }
    } else {
        r.violations.extend(rep.violations.iter().cloned());
        for p in &rep.pairs {
            r.notes.push(match p.identified() {
                Some(id) => format!("{} / {}: identity is {}", p.literal, p.corrected, id),
                None if p.literal_holds && p.corrected_holds => {
                    format!("{} / {}: both forms hold", p.literal, p.corrected)
                }
                None => format!("{} / {}: neither form holds", p.literal, p.corrected),
            });
        }
        if !rep.skipped.is_empty() {
            r.notes.push(format!(
                "{} identities stated only for s = 1 skipped",
                rep.skipped.len()
            ));
        }
    }
    r.notes.push(format!("{} violations", r.violations.len()));
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Check the generating functions of A_{2j}, A_{2j+1}, B_{2j}, B_{2j+1}",
    after_help = "Each series sum_j C_j t^j times 1 - ((s+1)x+1) t + x t^2 must equal its numerator: \
x for A-even, x((s+1) - t) for A-odd, 1 - x t for B-even, s for B-odd.\n\
CSV columns: kind,s,order,vanishes_through,holds"
)]
pub struct GfcheckArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub s: u64,
    #[arg(long, default_value_t = 31)]
    pub order: usize,
    /// A-even, A-odd, B-even or B-odd; all four when omitted.
    #[arg(long)]
    pub kind: Option<GfKind>,
}

pub fn gfcheck(a: &GfcheckArgs) -> Result<Report> {
    let s = BigInt::from(a.s);
    let mut r = Report::new(
        "gfcheck",
        json!({"s": a.s.to_string(), "order": a.order, "kind": a.kind.map(|k| k.name())}),
        &["kind", "s", "order", "vanishes_through", "holds"],
    );
    for kind in GfKind::ALL
        .into_iter()
        .filter(|k| a.kind.is_none_or(|w| w == *k))
    {
        let g = gf_check(kind, &s, a.order);
        if !g.holds() {
            r.violations.push(format!("{kind} residual is nonzero"));
        }
        r.row(vec![
            Cell::text(kind.name()),
            Cell::int(a.s),
            Cell::Index(a.order),
            Cell::opt(g.vanishes_through().map(Cell::Index)),
            Cell::Bool(g.holds()),
        ]);
    }
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Exact convergence certificate P(x, A/B, s) B^2 for one convergent",
    after_help = "P(x,z,s) = s z^2 - ((s+1)x - 1) z - x. The odd side uses A_{2k-1}/B_{2k-1} and \
predicts s x^k; the even side uses A_{2k-2}/B_{2k-2} and predicts -x^(k+1). \
Odd convergents lie above the limit root, even ones below.\n\
CSV columns: x,s,k,side,numerator,denominator,residual,predicted,holds,brackets"
)]
pub struct CertifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub x: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub s: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub k: u64,
    #[arg(long, default_value = "odd")]
    pub side: Side,
}

pub fn certify(a: &CertifyArgs) -> Result<Report> {
    let c = convergence_certificate(&BigInt::from(a.x), &BigInt::from(a.s), a.k as usize, a.side)?;
    let mut r = Report::new(
        "certify",
        json!({"x": a.x.to_string(), "s": a.s.to_string(), "k": a.k, "side": a.side.name()}),
        &[
            "x",
            "s",
            "k",
            "side",
            "numerator",
            "denominator",
            "residual",
            "predicted",
            "holds",
            "brackets",
        ],
    );
    if !c.brackets() {
        r.violations.push(format!(
            "convergent is on the wrong side of the limit root ({} side)",
            a.side
        ));
    }
    r.notes.push(format!(
        "residual {} = predicted {}",
        c.residual, c.predicted
    ));
    r.row(vec![
        Cell::int(a.x),
        Cell::int(a.s),
        Cell::Index(c.k),
        Cell::text(c.side.name()),
        Cell::Int(c.numerator.clone()),
        Cell::Int(c.denominator.clone()),
        Cell::Rat(c.residual.clone()),
        Cell::Rat(c.predicted.clone()),
        Cell::Bool(c.holds()),
        Cell::Bool(c.brackets()),
    ]);
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "The analogue for [x, x, ..., x]: u^2 - x u - 1 = (-1)^n / F_n(x)^2",
    after_help = "F_n(x) are the Fibonacci polynomials F_1 = 1, F_2 = x, F_{n+1} = x F_n + F_{n-1}; \
u is the value of n copies of x.\n\
CSV columns: n,value,lhs,rhs,holds"
)]
pub struct FibArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub x: u64,
    #[arg(long, default_value_t = 30)]
    pub n: usize,
}

pub fn fib_analogy(a: &FibArgs) -> Result<Report> {
    let x = BigInt::from(a.x);
    let mut r = Report::new(
        "fib-analogy",
        json!({"x": a.x.to_string(), "n": a.n}),
        &["n", "value", "lhs", "rhs", "holds"],
    );
    for n in 1..=a.n {
        let c = fibonacci_analogy_check(&x, n)?;
        if !c.holds() {
            r.violations
                .push(format!("n = {n}: {} != {}", c.lhs, c.rhs));
        }
        r.row(vec![
            Cell::Index(n),
            Cell::Rat(c.value.clone()),
            Cell::Rat(c.lhs.clone()),
            Cell::Rat(c.rhs.clone()),
            Cell::Bool(c.holds()),
        ]);
    }
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Coefficient agreement of the reduced truncations N_k/D_k of [1, x, 1, x^2, ...] with q-series",
    after_help = "Targets: the Auluck series sum_{k>=1} x^{k(k+1)/2} / ((1-x)...(1-x^{k-1}))^2 (1-x^k) \
for D-all and D-even, the Ramanujan series sum_{k>=1} x^{k(k+1)/2} / ((1-x)...(1-x^k))^2 for N-odd, \
and the same series with its k = 0 term for N-even. D-odd-reversed compares each reversed D_{2k-1} \
with the next one.\n\
The agreement is observational evidence; it never causes a violation exit.\n\
CSV columns: k,index,polynomial,agreement"
)]
pub struct QseriesArgs {
    /// D-all, D-even, D-odd-reversed, N-odd or N-even.
    #[arg(long, default_value = "D-all")]
    pub selector: Selector,
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
    pub kmax: u64,
    #[arg(long, default_value_t = 30)]
    pub order: usize,
}

pub fn qseries(a: &QseriesArgs) -> Result<Report> {
    let rep = stabilization_report(a.selector, a.kmax as usize, a.order, Execution::default());
    let mut r = Report::new(
        "qseries",
        json!({"selector": a.selector.name(), "kmax": a.kmax, "order": a.order,
               "target": a.selector.target(), "oeis": a.selector.oeis()}),
        &["k", "index", "polynomial", "agreement"],
    );
    for row in &rep.rows {
        r.row(vec![
            Cell::Index(row.k),
            Cell::Index(row.index),
            Cell::Poly(row.poly.clone()),
            Cell::Index(row.agreement),
        ]);
    }
    r.notes.push(format!(
        "target {} ({}): final agreement {}, nondecreasing {}",
        a.selector.target(),
        a.selector.oeis(),
        rep.final_agreement(),
        rep.nondecreasing()
    ));
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Validated simple continued fraction digits of F(x,y) = [x, 1/y, x^2, 1/y^2, ...] over a grid",
    after_help = "Digits are kept where expansions at precision and twice the precision agree. \
The period verdict is heuristic (two full repetitions covering half the prefix). \
Rows with x = y are controls: F(x,x) is the largest root of z^2 - (2x-1) z - x, and their \
digits are compared with its exact expansion.\n\
Ranges are `a..b` (inclusive) or comma lists.\n\
CSV columns: x,y,validated,verdict,max_quotient,geometric_mean,control_agrees,flag,quotients"
)]
pub struct ScanArgs {
    #[arg(long, default_value = "1..4", value_parser = parse_range)]
    pub x_range: ValueList,
    #[arg(long, default_value = "1..4", value_parser = parse_range)]
    pub y_range: ValueList,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision: u32,
    #[arg(long, default_value_t = 500)]
    pub max_terms: usize,
}

pub fn scan(a: &ScanArgs) -> Result<Report> {
    let rows = lab::conjecture_scan(
        &a.x_range.0,
        &a.y_range.0,
        a.precision,
        a.max_terms,
        Execution::default(),
    )?;
    let mut r = Report::new(
        "scan",
        json!({"x_range": a.x_range.0.iter().map(u64::to_string).collect::<Vec<_>>(),
               "y_range": a.y_range.0.iter().map(u64::to_string).collect::<Vec<_>>(),
               "precision": a.precision, "max_terms": a.max_terms}),
        &[
            "x",
            "y",
            "validated",
            "verdict",
            "max_quotient",
            "geometric_mean",
            "control_agrees",
            "flag",
            "quotients",
        ],
    );
    for s in &rows {
        if s.is_control() {
            let periodic = matches!(s.verdict, Verdict::PeriodFound { .. });
            let agrees = s.control.as_ref().is_some_and(|c| c.prefix_agrees);
            if s.flag.is_none() && !(periodic && agrees) {
                r.violations.push(format!(
                    "control ({}, {}) is not the expected periodic expansion",
                    s.x, s.y
                ));
            }
        }
        if !s.replay() {
            r.violations
                .push(format!("period of ({}, {}) does not replay", s.x, s.y));
        }
        r.row(vec![
            Cell::int(s.x),
            Cell::int(s.y),
            Cell::Index(s.validated()),
            Cell::text(s.verdict.to_string()),
            Cell::opt(s.max_quotient.clone().map(Cell::Int)),
            Cell::opt(s.geometric_mean.map(|g| Cell::text(format!("{g:.4}")))),
            Cell::opt(s.control.as_ref().map(|c| Cell::Bool(c.prefix_agrees))),
            Cell::opt(s.flag.clone().map(Cell::Text)),
            Cell::Ints(s.quotients.clone()),
        ]);
    }
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Validated digits of exp(1/x) against [1, x-1, 1, 1, 3x-1, 1, 1, 5x-1, ...]",
    after_help = "exp(1/x) is summed exactly from sum_k x^-k / k!. A mismatch means the precision \
is too low, so it exits with status 3.\n\
CSV columns: i,expected,observed,matches"
)]
pub struct EulerArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub x: u64,
    #[arg(long, default_value_t = 12)]
    pub terms: usize,
    #[arg(long, default_value_t = 1024, value_parser = clap::value_parser!(u32).range(16..))]
    pub precision: u32,
}

pub fn euler(a: &EulerArgs) -> Result<Report> {
    let e = lab::euler_check(a.x, a.terms, a.precision)?;
    if let Some(i) = e.first_mismatch {
        return Err(Error::PrecisionInsufficient(format!(
            "quotient {i} is {} where the pattern has {}",
            e.observed[i], e.expected[i]
        )));
    }
    let mut r = Report::new(
        "euler",
        json!({"x": a.x.to_string(), "terms": a.terms, "precision": a.precision}),
        &["i", "expected", "observed", "matches"],
    );
    for (i, (x, o)) in e.expected.iter().zip(&e.observed).enumerate() {
        r.row(vec![
            Cell::Index(i),
            Cell::Int(x.clone()),
            Cell::Int(o.clone()),
            Cell::Bool(x == o),
        ]);
    }
    r.notes
        .push(format!("{} of {} quotients match", a.terms, a.terms));
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Exact expansions of the roots of P(a,x) = 3a(x+1) + x^2 + 3x + 5",
    after_help = "Rows: -x0 for the root x0 near -1, and r defined by x1 = -3a - r for the root near -3a. \
With --inadmissible-precision the fraction [1, a, 3, (a-1)/3, 9, (a-1)/9, ...] is evaluated and \
compared with -x0.\n\
CSV columns: name,surd,quotients,period,agreement"
)]
pub struct PatternArgs {
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(2..))]
    pub a: u64,
    #[arg(long, default_value_t = 18)]
    pub terms: usize,
    #[arg(long, value_parser = clap::value_parser!(u32).range(64..))]
    pub inadmissible_precision: Option<u32>,
}

pub fn quadratic_pattern(a: &PatternArgs) -> Result<Report> {
    let av = BigInt::from(a.a);
    let p = lab::quadratic_pattern(&av, a.terms)?;
    let mut r = Report::new(
        "quadratic-pattern",
        json!({"a": a.a.to_string(), "terms": a.terms, "discriminant": p.discriminant.to_string(),
               "r_convention": "x1 = -3a - r", "inadmissible_precision": a.inadmissible_precision}),
        &["name", "surd", "quotients", "period", "agreement"],
    );
    for (name, surd, cf) in [("-x0", &p.neg_x0, &p.neg_x0_cf), ("r", &p.r, &p.r_cf)] {
        r.row(vec![
            Cell::text(name),
            Cell::Surd(surd.clone()),
            Cell::Ints(cf.expand(a.terms)),
            Cell::opt(
                cf.period
                    .map(|(pre, len)| Cell::text(format!("({pre}, {len})"))),
            ),
            Cell::Null,
        ]);
    }
    if let Some(prec) = a.inadmissible_precision {
        let ina = lab::inadmissible_agreement(&av, prec)?;
        let bits = ina
            .difference
            .magnitude_exponent()
            .map_or(format!("exact at {prec} bits"), |e| format!("< 2^{e}"));
        if !ina.exact {
            r.violations
                .push("inadmissible form is not a root of P(a, -w)".into());
        }
        r.notes.push(format!(
            "inadmissible form: difference {bits}, exact root check {}",
            ina.exact
        ));
        r.row(vec![
            Cell::text("inadmissible"),
            Cell::Null,
            Cell::Null,
            Cell::Null,
            Cell::text(bits),
        ]);
    }
    Ok(r)
}

#[derive(Args, Debug)]
#[command(
    about = "Value of F(x,y) = [x, 1/y, x^2, 1/y^2, ...] to a given precision",
    after_help = "Evaluated tail first, stopping on a 1/y^K quotient, doubling K until two successive \
odd depths agree to 2^-precision. For x = y the value is the largest root of z^2 - (2x-1) z - x.\n\
CSV columns: x,y,precision,depth,value,error_bound"
)]
pub struct FvalueArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub x: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub y: u64,
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u32).range(64..))]
    pub precision: u32,
    /// Decimal digits to print.
    #[arg(long, default_value_t = 50)]
    pub digits: usize,
}

pub fn fvalue(a: &FvalueArgs) -> Result<Report> {
    let v = lab::f_value(a.x, a.y, a.precision)?;
    let mut r = Report::new(
        "fvalue",
        json!({"x": a.x.to_string(), "y": a.y.to_string(), "precision": a.precision, "digits": a.digits}),
        &["x", "y", "precision", "depth", "value", "error_bound"],
    );
    let bound = v
        .error_bound
        .magnitude_exponent()
        .map_or("0".to_string(), |e| format!("2^{e}"));
    r.row(vec![
        Cell::int(a.x),
        Cell::int(a.y),
        Cell::Index(a.precision as usize),
        Cell::Index(v.depth),
        Cell::text(v.value.to_decimal_string(a.digits)),
        Cell::text(bound),
    ]);
    Ok(r)
}

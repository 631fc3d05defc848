//! The `verify` sub-modes.

use std::time::Instant;

use ehrhart_core::lie::{det_cartan, weyl_order};
use ehrhart_core::mckay::{determinant_prediction, group_of, rep_counts_upto, DetGroup, Irrep};
use ehrhart_core::omega::{omega_eq, omega_geq, OmegaExpr};
use ehrhart_core::polytope::{count_all_states, root_state_counts};
use ehrhart_core::series::{phi_su_series, Monomial, Window};
use ehrhart_core::{AlgebraId, Family, PowerSeries};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::args::{Method, VerifyArgs, VerifyMode};
use crate::compute::{compute, default_terms, has_genfun, omega_accepts, RunSpec, DEFAULT_TERMS};
use crate::golden;
use crate::report::VerificationReport;
use crate::CliError;

/// Runs the requested check.
pub fn run(args: &VerifyArgs) -> Result<VerificationReport, CliError> {
    if args.bless && args.mode != VerifyMode::Golden {
        return Err(CliError::Usage("--bless only applies to `verify golden`".into()));
    }
    let started = Instant::now();
    let mut report = match args.mode {
        VerifyMode::Duality => duality(args.algebra.require()?, args.terms, args.allow_large_rank)?,
        VerifyMode::Levelrank => level_rank(args.max.unwrap_or(8))?,
        VerifyMode::Asymptotic => {
            let tol = parse_rational(args.tolerance.as_deref().unwrap_or("0.1"))?;
            asymptotic(args.algebra.require()?, args.level.unwrap_or(200), &tol)
        }
        VerifyMode::OmegaIdentities => omega_identities(args.terms.unwrap_or(12) as u32)?,
        VerifyMode::Determinants => determinants(args.algebra.require()?, args.terms.unwrap_or(10))?,
        VerifyMode::Golden => {
            let dir = args.golden_dir.clone().unwrap_or_else(golden::default_dir);
            golden::check(&dir, args.bless)?
        }
    };
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Parses `0.1`, `1/10` or `3`.
pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Usage(format!("cannot parse {s:?} as an exact number"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) || (int.is_empty() && frac.is_empty()) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    Ok(BigRational::new(n, BigInt::from(10).pow(frac.len() as u32)))
}

/// `p/q` as a decimal with `places` digits, truncated toward zero.
pub fn decimal(r: &BigRational, places: u32) -> String {
    let scaled = (r * BigRational::from_integer(BigInt::from(10).pow(places))).trunc().to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let digits = scaled.abs().to_string();
    let digits = format!("{digits:0>width$}", width = places as usize + 1);
    let (i, f) = digits.split_at(digits.len() - places as usize);
    format!("{sign}{i}.{f}")
}

fn duality(a: AlgebraId, terms: Option<usize>, allow_large_rank: bool) -> Result<VerificationReport, CliError> {
    let t = terms.unwrap_or(DEFAULT_TERMS);
    let mut specs = vec![
        RunSpec::new(a, Method::Brute, Some(t), allow_large_rank),
        RunSpec::new(a, Method::Reps, Some(t), allow_large_rank),
    ];
    if has_genfun(a) {
        specs.push(RunSpec::new(a, Method::Genfun, Some(t), allow_large_rank));
    }
    let mut notes = Vec::new();
    if omega_accepts(a, allow_large_rank) {
        let t_omega = if terms.is_some() && a.rank() < 4 { t } else { t.min(default_terms(a, Method::Omega)) };
        specs.push(RunSpec::new(a, Method::Omega, Some(t_omega), allow_large_rank));
        if t_omega < t {
            notes.push(format!("omega compared up to z^{t_omega}"));
        }
    } else {
        notes.push(format!("omega skipped: rank {} above the default limit", a.rank()));
    }
    let series: Vec<PowerSeries> = specs.par_iter().map(compute).collect::<Result<_, _>>()?;
    let names: Vec<&str> = specs.iter().map(|s| s.method.name()).collect();
    let mut report = VerificationReport::new("duality", Some(a.to_string()), &names);
    report.notes = notes;
    for q in 0..=t {
        let values: Vec<Option<&BigInt>> = series.iter().map(|s| s.coeff(q)).collect();
        let present: Vec<&BigInt> = values.iter().flatten().copied().collect();
        let agree = present.windows(2).all(|w| w[0] == w[1]);
        let cells = values.iter().map(|v| v.map_or("-".to_string(), ToString::to_string)).collect();
        report.row(format!("{q}"), cells, agree, || {
            let parts: Vec<String> = names
                .iter()
                .zip(&values)
                .filter_map(|(n, v)| v.map(|v| format!("{n} {v}")))
                .collect();
            format!("z^{q}: {}", parts.join(", "))
        });
    }
    Ok(report)
}

#[allow(clippy::needless_range_loop)]
fn level_rank(max: usize) -> Result<VerificationReport, CliError> {
    if max == 0 {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let mut rows: Vec<Vec<BigInt>> = (1..=max)
        .into_par_iter()
        .map(|k| {
            if k == 1 {
                phi_su_series(1, max).map(PowerSeries::into_coeffs)
            } else {
                let a = AlgebraId::su(k as u32)?;
                ehrhart_core::polytope::ehrhart_series_bruteforce(a, max).map(PowerSeries::into_coeffs)
            }
        })
        .collect::<Result<_, _>>()?;
    rows.insert(0, Vec::new());
    let mut report = VerificationReport::new("levelrank", None, &["su(k) at z^q", "su(q) at z^k"]);
    for k in 1..=max {
        for q in k..=max {
            let (x, y) = (&rows[k][q], &rows[q][k]);
            report.row(format!("k={k} q={q}"), vec![x.to_string(), y.to_string()], x == y, || {
                format!("su({k}) has {x} at z^{q} but su({q}) has {y} at z^{k}")
            });
        }
    }
    Ok(report)
}

fn asymptotic(a: AlgebraId, q: u64, tol: &BigRational) -> VerificationReport {
    let count = count_all_states(a, q);
    let w = weyl_order(a);
    let det = det_cartan(a);
    let ratio = BigRational::new(
        BigInt::from(count.clone()) * BigInt::from(w.clone()),
        BigInt::from(q.max(1)).pow(a.rank()) * &det,
    );
    let deviation = (&ratio - BigRational::one()).abs();
    let mut report = VerificationReport::new(
        "asymptotic",
        Some(a.to_string()),
        &["states", "|W|", "det C", "ratio", "tolerance"],
    );
    report.note(format!("ratio = states·|W| / (q^{} · det C) = {ratio}", a.rank()));
    let ok = q > 0 && &deviation <= tol;
    report.row(
        format!("q={q}"),
        vec![count.to_string(), w.to_string(), det.to_string(), decimal(&ratio, 6), decimal(tol, 6)],
        ok,
        || format!("ratio {} deviates from 1 by more than {}", decimal(&ratio, 6), decimal(tol, 6)),
    );
    report
}

fn two_var_counts(t: u32, gens: &[(u32, u32)]) -> Vec<Vec<i64>> {
    let n = t as usize;
    let mut table = vec![vec![0i64; n + 1]; n + 1];
    table[0][0] = 1;
    for &(a, b) in gens {
        let (a, b) = (a as usize, b as usize);
        for i in a..=n {
            for j in b..=n - i {
                table[i][j] += table[i - a][j - b];
            }
        }
    }
    table
}

fn omega_identities(t: u32) -> Result<VerificationReport, CliError> {
    if t == 0 {
        return Err(CliError::Usage("--terms must be at least 1".into()));
    }
    let mut report = VerificationReport::new("omega-identities", None, &["coefficients checked", "wrong"]);
    let to_q = |n: i64| BigRational::from_integer(n.into());

    // Ω_= 1/((1 - λ²x)(1 - y/λ)) = 1/(1 - x y²)
    let eq = OmegaExpr::new(Window::new(t, 1), 2)
        .factor(Monomial::new(vec![1, 0], vec![2]))?
        .factor(Monomial::new(vec![0, 1], vec![-1]))?;
    let s = omega_eq(&eq.expand()?, 0)?;
    let expect = two_var_counts(t, &[(1, 2)]);
    let (mut checked, mut wrong) = (0, 0);
    for i in 0..=t {
        for j in 0..=t - i {
            checked += 1;
            if s.coeff(&[0], &[i, j]) != to_q(expect[i as usize][j as usize]) {
                wrong += 1;
            }
        }
    }
    report.row("Ω= 1/((1-λ²x)(1-y/λ)) = 1/(1-xy²)", vec![checked.to_string(), wrong.to_string()], wrong == 0, || {
        format!("{wrong} coefficients differ from 1/(1-xy²)")
    });

    // Ω_≥ 1/((1 - λx)(1 - x/λ)) = 1/((1 - x)(1 - x²))
    let geq = OmegaExpr::new(Window::new(t, 1), 1)
        .factor(Monomial::new(vec![1], vec![1]))?
        .factor(Monomial::new(vec![1], vec![-1]))?;
    let s = omega_geq(&geq.expand()?, 0)?.to_power_series()?;
    let wrong = (0..=t as i64).filter(|&q| s.coeffs()[q as usize] != to_q(q / 2 + 1)).count();
    report.row(
        "Ω≥ 1/((1-λx)(1-x/λ)) = 1/((1-x)(1-x²))",
        vec![(t + 1).to_string(), wrong.to_string()],
        wrong == 0,
        || format!("{wrong} coefficients differ from 1/((1-x)(1-x²))"),
    );

    // Ω_≥ over the ordering chain counts partitions into at most three parts.
    let n = 3;
    let mut chain = OmegaExpr::new(Window::new(t, n), 1);
    for i in 0..n {
        let mut lambda = vec![0; n];
        lambda[i] = 1;
        if i > 0 {
            lambda[i - 1] = -1;
        }
        chain = chain.factor(Monomial::new(vec![1], lambda))?;
    }
    let mut s = chain.expand()?;
    for var in 0..n {
        s = omega_geq(&s, var)?;
    }
    let s = s.to_power_series()?;
    let mut parts = vec![0i64; t as usize + 1];
    parts[0] = 1;
    for k in 1..=n {
        for m in k..=t as usize {
            parts[m] += parts[m - k];
        }
    }
    let wrong = (0..=t as usize).filter(|&m| s.coeffs()[m] != to_q(parts[m])).count();
    report.row(
        "Ω≥ chain, n=3 = 1/((1-x)(1-x²)(1-x³))",
        vec![(t + 1).to_string(), wrong.to_string()],
        wrong == 0,
        || format!("{wrong} coefficients differ from the partition counts"),
    );
    Ok(report)
}

fn determinants(a: AlgebraId, t: usize) -> Result<VerificationReport, CliError> {
    let assigned = group_of(a);
    if assigned.det_group.moduli().len() > 1 {
        return Err(CliError::Usage(format!(
            "{a} has a non-cyclic determinant group; a single predicted root of unity per node does not apply"
        )));
    }
    let predicted = determinant_prediction(a)?;
    let m = predicted.iter().map(|d| d.order()).fold(1u32, lcm);
    let group = DetGroup::cyclic(m);
    let mut from_prediction = assigned.clone();
    from_prediction.det_group = group.clone();
    from_prediction.irreps = core::iter::once(Irrep {
        dim: 1,
        det: group.zero(),
    })
    .chain(assigned.irreps[1..].iter().zip(&predicted).map(|(irrep, d)| {
        let k = (d.exponent() * BigRational::from_integer(m.into())).to_integer();
        Irrep {
            dim: irrep.dim,
            det: group.element(&vec![k.to_i64().expect("small"); group.moduli().len()]),
        }
    }))
    .collect();

    let mut report = VerificationReport::new("determinants", Some(a.to_string()), &["predicted dets", "polytope"]);
    let shown: Vec<String> = predicted.iter().map(ToString::to_string).collect();
    report.note(format!("D = ({})", shown.join(", ")));
    for (j, (irrep, d)) in assigned.irreps[1..].iter().zip(&predicted).enumerate() {
        report.note(format!("node {}: dim {}, D = {d}", j + 1, irrep.dim));
    }
    if a.family() == Family::E {
        let minus_ones = predicted.iter().filter(|d| d.order() == 2).count();
        let cube_roots = predicted.iter().filter(|d| d.order() == 3).count();
        let expected = match a.rank() {
            6 => (0, 4),
            7 => (3, 0),
            _ => (0, 0),
        };
        if (minus_ones, cube_roots) != expected {
            report.fail(format!(
                "expected {} entries -1 and {} primitive cube roots, found {minus_ones} and {cube_roots}",
                expected.0, expected.1
            ));
        }
    }
    let reps = rep_counts_upto(&from_prediction, t);
    let brute: Vec<BigUint> = root_state_counts(a, t as u64)?.into_iter().map(BigUint::from).collect();
    for q in 0..=t {
        report.row(format!("{q}"), vec![reps[q].to_string(), brute[q].to_string()], reps[q] == brute[q], || {
            format!("z^{q}: predicted determinants give {}, polytope gives {}", reps[q], brute[q])
        });
    }
    Ok(report)
}

fn lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

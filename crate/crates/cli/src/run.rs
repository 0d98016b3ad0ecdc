//! Subcommand execution and rendering.

use std::fmt::Write as _;

use serde_json::{json, Value};
use tangle_asymptotics::{growth_fit, link_count_estimate, GrowthEstimate};
use tangle_census::{solve_census, CensusTable, DPrimeModel};
use tangle_critical::{solve_critical, CriticalPoint, MIN_TOLERANCE};
use tangle_oracle::{bare_four_point, bare_two_point, bare_vacuum, oracle_bundle, LegPairing, Normalization, HARD_CAP};
use tangle_oriented::{solve_oriented, OrientedCensus};
use tangle_ring::{NPoly, Rational, Real};
use tangle_series::BiSeries;
use tangle_sixvertex::{bare_bundle_n2, bare_bundle_n2_cached};

use crate::acceptance::{run_acceptance, Criterion};
use crate::cache::ResultCache;
use crate::cli::{Cli, Command, Format, NMode, Observable, Source};
use crate::CliError;

/// Order caps per pipeline.
pub const GENERAL_MAX_PAPER: usize = 8;
pub const GENERAL_MAX_ORACLE: usize = 5;
pub const ORIENTED_MAX: usize = 20;
/// Printed digits of the critical point; the solve is accurate to about 1e-17.
pub const CRITICAL_MAX_DIGITS: usize = 16;

/// Rendered output and process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

struct Ctx<'a> {
    cache: Option<ResultCache>,
    cli: &'a Cli,
}

impl Ctx<'_> {
    /// Cached JSON for `key`, or computes, stores and returns it.
    fn cached(&self, key: &str, compute: impl FnOnce() -> Result<Value, CliError>) -> Result<Value, CliError> {
        if let Some(c) = &self.cache {
            if let Some(v) = c.get(key) {
                return Ok(v);
            }
        }
        let v = compute()?;
        if let Some(c) = &self.cache {
            c.put(key, &v)?;
        }
        Ok(v)
    }

    fn bundle_dir(&self) -> Option<std::path::PathBuf> {
        self.cache.as_ref().map(|c| c.dir().join("bundles"))
    }
}

/// Validates the configuration and runs one subcommand.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(invalid("--threads must be at least 1"));
        }
        // a pool that already exists is kept
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    let ctx = Ctx {
        cache: if cli.no_cache {
            None
        } else {
            cli.cache_dir.as_ref().map(ResultCache::new)
        },
        cli,
    };
    match &cli.command {
        Command::General { max_order, source, n } => general(&ctx, *max_order, *source, *n),
        Command::Oriented { max_order } => oriented(&ctx, *max_order),
        Command::Critical { digits } => critical(&ctx, *digits),
        Command::Asymptotics {
            max_order,
            exponent,
            no_log,
        } => asymptotics(&ctx, *max_order, *exponent, !*no_log),
        Command::Oracle { max_order, observable } => oracle(&ctx, *max_order, *observable),
        Command::Verify => Ok(verify(cli.format)),
    }
}

fn general(ctx: &Ctx, p: usize, source: Source, n: NMode) -> Result<Output, CliError> {
    let cap = match source {
        Source::Paper => GENERAL_MAX_PAPER,
        Source::Oracle => GENERAL_MAX_ORACLE,
    };
    if p == 0 || p > cap {
        return Err(invalid(format!(
            "general --max-order must be in 1..={cap} with the {} source, got {p}",
            if source == Source::Paper { "paper" } else { "oracle" }
        )));
    }
    let key = format!("general|order={p}|source={source:?}");
    let v = ctx.cached(&key, || {
        let model = match source {
            Source::Paper => DPrimeModel::perturbative(),
            Source::Oracle => DPrimeModel::from_oracle(&oracle_bundle(p)?)?,
        };
        Ok(solve_census(&model, p)?.to_json())
    })?;
    let table = CensusTable::from_json(&v)?;
    let text = match n {
        NMode::Symbolic => match ctx.cli.format {
            Format::Json => pretty(&table.to_json()),
            Format::Csv => table.to_csv(),
            Format::Text => table.to_text(),
        },
        NMode::Integer(k) => {
            let (t1, t2) = table.evaluate(&Rational::from(k));
            let strs = |r: &[Rational]| r.iter().map(|c| c.to_string()).collect::<Vec<_>>();
            match ctx.cli.format {
                Format::Json => pretty(&json!({
                    "n": k, "max_crossings": p, "type1": strs(&t1), "type2": strs(&t2),
                })),
                Format::Csv | Format::Text => {
                    let sep = if ctx.cli.format == Format::Csv { "," } else { "  " };
                    let mut out = format!("p{sep}type1{sep}type2\n");
                    for (i, (a, b)) in t1.iter().zip(&t2).enumerate() {
                        let _ = writeln!(out, "{}{sep}{a}{sep}{b}", i + 1);
                    }
                    out
                }
            }
        }
    };
    Ok(Output::ok(text))
}

fn oriented_census(ctx: &Ctx, p: usize) -> Result<OrientedCensus, CliError> {
    if !(2..=ORIENTED_MAX).contains(&p) {
        return Err(invalid(format!("--max-order must be in 2..={ORIENTED_MAX}, got {p}")));
    }
    let v = ctx.cached(&format!("oriented|order={p}"), || {
        let bundle = match ctx.bundle_dir() {
            Some(dir) => {
                std::fs::create_dir_all(&dir)?;
                bare_bundle_n2_cached(p, &dir)?
            }
            None => bare_bundle_n2(p)?,
        };
        Ok(solve_oriented(p, &bundle)?.to_json())
    })?;
    let census = OrientedCensus::from_json(&v)?;
    census.check_counts()?;
    Ok(census)
}

fn oriented(ctx: &Ctx, p: usize) -> Result<Output, CliError> {
    let c = oriented_census(ctx, p)?;
    Ok(Output::ok(match ctx.cli.format {
        Format::Json => pretty(&c.to_json()),
        Format::Csv => c.to_csv(),
        Format::Text => c.to_text(),
    }))
}

/// `x` to `digits` significant digits in positional notation.
fn decimal(x: &Real, digits: usize) -> String {
    let s = x.to_string_radix(10, Some(digits));
    let Some((mantissa, exp)) = s.split_once('e') else {
        return s;
    };
    let Ok(exp) = exp.parse::<i64>() else {
        return s;
    };
    let (sign, m) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let (int, frac) = m.split_once('.').unwrap_or((m, ""));
    let all = format!("{int}{frac}");
    // position of the decimal point within `all`
    let point = int.len() as i64 + exp;
    let body = if point <= 0 {
        format!("0.{}{all}", "0".repeat((-point) as usize))
    } else if point as usize >= all.len() {
        format!("{all}{}", "0".repeat(point as usize - all.len()))
    } else {
        let (a, b) = all.split_at(point as usize);
        format!("{a}.{b}")
    };
    format!("{sign}{body}")
}

fn critical(ctx: &Ctx, digits: usize) -> Result<Output, CliError> {
    if !(1..=CRITICAL_MAX_DIGITS).contains(&digits) {
        return Err(invalid(format!(
            "--digits must be in 1..={CRITICAL_MAX_DIGITS}, got {digits}"
        )));
    }
    let cp: CriticalPoint = solve_critical(MIN_TOLERANCE)?;
    let d = |x: &Real| decimal(x, digits);
    let rows = [
        ("theta_c", d(&cp.theta_c)),
        ("g_c", d(&cp.g_c)),
        ("inv_g_c", d(&cp.inv_g_c())),
        ("residual_b", cp.residuals.0.to_string_radix(10, Some(3))),
        ("residual_c", cp.residuals.1.to_string_radix(10, Some(3))),
        ("error", cp.error.to_string_radix(10, Some(3))),
    ];
    Ok(Output::ok(match ctx.cli.format {
        Format::Json => pretty(&json!({
            "theta_c": rows[0].1, "g_c": rows[1].1, "inv_g_c": rows[2].1,
            "residuals": [rows[3].1, rows[4].1], "error": rows[5].1,
        })),
        Format::Csv => {
            let mut out = String::from("quantity,value\n");
            for (k, v) in &rows {
                let _ = writeln!(out, "{k},{v}");
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (k, v) in &rows {
                let _ = writeln!(out, "{k:<10} = {v}");
            }
            out
        }
    }))
}

fn asymptotics(ctx: &Ctx, p: usize, exponent: f64, log: bool) -> Result<Output, CliError> {
    if p < 7 {
        return Err(invalid(format!("asymptotics needs --max-order of at least 7, got {p}")));
    }
    if !exponent.is_finite() {
        return Err(invalid("--exponent must be finite"));
    }
    let census = oriented_census(ctx, p)?;
    let fit: GrowthEstimate = growth_fit(census.gamma_b.coeffs(), exponent, log)?;
    let links = link_count_estimate(&census);
    let mut f = vec![Rational::new(), Rational::new()];
    f.extend(links.iter().map(|e| e.f_p.clone()));
    let link_fit = growth_fit(&f, exponent - 1.0, log)?;
    Ok(Output::ok(match ctx.cli.format {
        Format::Json => pretty(&json!({
            "tangles": fit.to_json(),
            "links": {
                "heuristic": true,
                "estimates": links.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
                "fit": link_fit.to_json(),
            },
        })),
        Format::Csv => {
            let mut out = String::from("p,gamma_p,extrapolant,f_p_heuristic\n");
            let ex = |q: usize| {
                fit.extrapolants
                    .iter()
                    .find(|e| e.0 == q)
                    .map(|e| format!("{:.6}", e.1))
                    .unwrap_or_default()
            };
            let fp = |q: usize| {
                links
                    .iter()
                    .find(|e| e.p == q)
                    .map(|e| e.f_p.to_string())
                    .unwrap_or_default()
            };
            for (q, g) in census.gamma_b.coeffs().iter().enumerate().skip(1) {
                let _ = writeln!(out, "{q},{g},{},{}", ex(q), fp(q));
            }
            out
        }
        Format::Text => {
            let mut out = String::from("tangles\n");
            out.push_str(&fit.to_text());
            out.push_str("\nlinks (heuristic: f_p ~ gamma_{p-1}/p)\n");
            for e in &links {
                let _ = writeln!(out, "  p = {:>2}  {:.1}", e.p, e.f_p.to_f64());
            }
            let _ = writeln!(out, "rate = {:.6} +- {:.6}", link_fit.rate, link_fit.error_bar);
            out
        }
    }))
}

fn observable_series(obs: Observable, k: usize) -> Result<BiSeries<NPoly>, CliError> {
    let mode = Normalization::Reduced;
    Ok(match obs {
        Observable::G => bare_two_point(k, mode)?,
        Observable::F => bare_vacuum(k, mode)?,
        Observable::Gamma1 => bare_four_point(k, mode)?.gamma[&LegPairing::Diagonal].clone(),
        Observable::Gamma2 => bare_four_point(k, mode)?.gamma[&LegPairing::UpperLower].clone(),
    })
}

fn oracle(ctx: &Ctx, k: usize, obs: Observable) -> Result<Output, CliError> {
    if k == 0 || k > HARD_CAP {
        return Err(invalid(format!(
            "oracle --max-order must be in 1..={HARD_CAP}, got {k}"
        )));
    }
    let key = format!("oracle|order={k}|observable={obs:?}");
    let v = ctx.cached(&key, || {
        let s = observable_series(obs, k)?;
        let coeffs: Vec<Value> = s
            .terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|((j, k), c)| json!({"j": j, "k": k, "npoly": c.to_json_map()}))
            .collect();
        Ok(json!({ "observable": format!("{obs:?}"), "order": k, "coefficients": coeffs }))
    })?;
    let list = v["coefficients"].as_array().cloned().unwrap_or_default();
    let parse = |c: &Value| -> Result<(u64, u64, NPoly), CliError> {
        let bad = || CliError::Compute("malformed oracle entry".into());
        let poly = NPoly::from_json_value(&c["npoly"]).map_err(|e| CliError::Compute(e.to_string()))?;
        Ok((c["j"].as_u64().ok_or_else(bad)?, c["k"].as_u64().ok_or_else(bad)?, poly))
    };
    Ok(Output::ok(match ctx.cli.format {
        Format::Json => pretty(&v),
        Format::Csv => {
            let mut out = String::from("j,k,n_power,coefficient\n");
            for c in &list {
                let (j, k, p) = parse(c)?;
                for (e, r) in p.terms() {
                    let _ = writeln!(out, "{j},{k},{e},{r}");
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &list {
                let (j, k, p) = parse(c)?;
                let _ = writeln!(out, "g1^{j} g2^{k}: {p}");
            }
            out
        }
    }))
}

fn verify(format: Format) -> Output {
    let results: Vec<Criterion> = run_acceptance();
    let all = results.iter().all(|c| c.passed);
    let text = match format {
        Format::Json => pretty(&Value::Array(results.iter().map(Criterion::to_json).collect())),
        Format::Csv => {
            let mut out = String::from("criterion,passed,seconds,detail\n");
            for c in &results {
                let _ = writeln!(
                    out,
                    "{},{},{:.2},\"{}\"",
                    c.id,
                    c.passed,
                    c.seconds,
                    c.detail.replace('"', "'")
                );
            }
            out
        }
        Format::Text => results.iter().map(|c| c.line() + "\n").collect(),
    };
    Output {
        text,
        status: if all { 0 } else { 3 },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_ring::real;

    #[test]
    fn positional_decimals() {
        assert_eq!(decimal(&real(64, 0.15915), 4), "0.1592");
        assert_eq!(decimal(&real(64, 6.2833), 3), "6.28");
        assert_eq!(decimal(&real(64, -0.00125), 2), "-0.0013");
        assert_eq!(decimal(&real(64, 1234.5), 6), "1234.50");
        assert_eq!(decimal(&real(64, 12345.0), 2), "12000");
    }
}

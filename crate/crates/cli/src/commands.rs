use engel_core::asymptotics::{self, decimal_string};
use engel_core::expansion::{self, SeriesSource};
use engel_core::sequence::{self, unlift_spec};
use engel_core::{BitBudget, CfExpansion, Error, Float, Integer, RecurrenceSpec, Result};
use serde_json::{json, Value};

use crate::input::Input;

pub struct Context {
    pub json: bool,
    pub budget: BitBudget,
    pub digits: u32,
}

/// Rendered command output. `failed` marks a report whose checks did not all
/// pass; it is still printed.
pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, failed: false }
    }

    pub fn json(v: &Value) -> Self {
        Output::ok(format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")))
    }
}

pub fn strings(v: &[Integer]) -> Vec<String> {
    v.iter().map(Integer::to_string).collect()
}

pub fn cf_text(coeffs: &[Integer]) -> String {
    CfExpansion::new(coeffs.to_vec())
        .map(|c| c.to_string())
        .unwrap_or_default()
}

pub fn gen(ctx: &Context, input: &Input, n: usize) -> Result<Output> {
    let (terms, z) = match input {
        Input::Spec(spec) => (sequence::generate_recurrence(spec, n, &ctx.budget)?, None),
        Input::Terms(x) => {
            if x.len() < n {
                return Err(Error::InvalidSequence(format!(
                    "file has {} terms, {n} requested",
                    x.len()
                )));
            }
            (x[..n].to_vec(), None)
        }
        other => {
            let source = other.source()?;
            if source.max_terms().is_some_and(|m| m < n) {
                let available = source.max_terms().unwrap_or(0);
                return Err(Error::InsufficientFactors {
                    needed: n.saturating_sub(1),
                    available: available.saturating_sub(1),
                });
            }
            let x = source.engel_terms(n, &ctx.budget)?;
            let z = sequence::factors_from_sequence(&x)?;
            (x, Some(z.factors().to_vec()))
        }
    };
    if ctx.json {
        return Ok(Output::json(&json!({
            "terms": strings(&terms),
            "z": z.as_deref().map(strings),
        })));
    }
    Ok(Output::ok(sequence::write_sequence_file(&terms, z.as_deref())))
}

pub fn cf(ctx: &Context, input: &Input, n: usize, check: bool) -> Result<Output> {
    if n == 0 {
        return Err(Error::InvalidFactors("n must be at least 1".into()));
    }
    let zs = input.source()?.factors(n, &ctx.budget)?;
    if zs.max_index() < n {
        return Err(Error::InsufficientFactors {
            needed: n - 1,
            available: zs.len(),
        });
    }
    let zs = zs.prefix(n - 1);
    let p = expansion::partial_cf(&zs, n, &ctx.budget)?;
    if check && expansion::oracle_partial_cf(&zs, n, &ctx.budget)? != p {
        return Err(Error::IdentityViolation {
            identity: "recursive expansion equals Euclidean expansion",
            n,
        });
    }
    if ctx.json {
        return Ok(Output::json(&json!({
            "n": n,
            "class": zs.class().to_string(),
            "length": p.len(),
            "cf": p.coefficients.to_string(),
            "checked": check,
        })));
    }
    Ok(Output::ok(format!("{}\n", p.coefficients)))
}

pub fn stream(ctx: &Context, input: &Input, k: usize) -> Result<Output> {
    let s = expansion::stream(input.source()?, k, ctx.budget)?;
    let certified = &s.certified()[..=k];
    if ctx.json {
        return Ok(Output::json(&json!({
            "class": s.class().to_string(),
            "n_used": s.n_used(),
            "certified": strings(certified),
            "lengths": s.lengths(),
        })));
    }
    Ok(Output::ok(format!("{}\n", cf_text(certified))))
}

fn dec(f: &Float, digits: u32) -> String {
    decimal_string(f, digits as usize)
}

fn opt_dec(f: Option<&Float>, digits: u32) -> Value {
    f.map_or(Value::Null, |f| Value::String(dec(f, digits)))
}

struct Row {
    n: usize,
    log_x: Float,
    exact: Option<Float>,
    growth: Option<Float>,
    roth: Option<(Float, Float)>,
}

pub fn asymp(ctx: &Context, input: &Input, n: usize, epsilon: f64) -> Result<Output> {
    let Input::Spec(spec) = input else {
        return Err(Error::InvalidSpec(
            "asymp needs a recurrence (--d1/--G or --spec)".into(),
        ));
    };
    let digits = ctx.digits;
    let (lambda, c, c_err, c_kind, rows) = match spec {
        RecurrenceSpec::Second { .. } => {
            let r = asymptotics::asymptotics_report(spec, n, epsilon, digits, &ctx.budget)?;
            let rows: Vec<Row> = r
                .rows
                .into_iter()
                .map(|row| Row {
                    n: row.n,
                    log_x: row.log_x,
                    exact: Some(row.exact),
                    growth: row.growth_exponent,
                    roth: row.roth,
                })
                .collect();
            (r.lambda, r.c_estimate.value, r.c_estimate.error_bound, "series", rows)
        }
        RecurrenceSpec::Third { .. } => {
            let base = unlift_spec(spec)
                .ok_or_else(|| Error::InvalidSpec("asymp supports third order specs only as lifts".into()))?;
            let RecurrenceSpec::Second { d1, .. } = &base else {
                unreachable!()
            };
            let (d2, _) = base.leading().expect("second order");
            let lambda = asymptotics::dominant_root(*d1, d2, digits)?;
            let term_cap = (ctx.budget.max_term_bits).min(1 << 20);
            let c = asymptotics::empirical_constant(spec, &lambda, term_cap, digits, &ctx.budget)?;
            let source = SeriesSource::Recurrence(spec.clone());
            let x = source.engel_terms(n.max(4) + 1, &ctx.budget)?;
            let growth = asymptotics::growth_report(&x, &lambda, epsilon, digits)?;
            let roth = asymptotics::roth_exponents(&source, n, digits, &ctx.budget)?;
            let prec = asymptotics::precision_bits(digits);
            let rows: Vec<Row> = (1..=n.max(4))
                .map(|k| Row {
                    n: k,
                    log_x: asymptotics::log_integer(&x[k - 1], prec),
                    exact: None,
                    growth: growth.rows.iter().find(|r| r.n == k).map(|r| r.exponent.clone()),
                    roth: roth
                        .records
                        .iter()
                        .find(|r| r.n == k)
                        .map(|r| (r.lower.clone(), r.upper.clone())),
                })
                .collect();
            (lambda, c.value, c.error_bound, "empirical", rows)
        }
    };
    if ctx.json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "log_x": dec(&r.log_x, digits),
                    "exact": opt_dec(r.exact.as_ref(), digits),
                    "growth_exp": opt_dec(r.growth.as_ref(), digits),
                    "roth_lo": opt_dec(r.roth.as_ref().map(|p| &p.0), digits),
                    "roth_hi": opt_dec(r.roth.as_ref().map(|p| &p.1), digits),
                })
            })
            .collect();
        return Ok(Output::json(&json!({
            "lambda": dec(&lambda, digits),
            "C": dec(&c, digits),
            "C_err": dec(&c_err, 6),
            "C_kind": c_kind,
            "epsilon": epsilon,
            "rows": rows,
        })));
    }
    let short = 20;
    let cell = |f: Option<&Float>| f.map_or_else(|| "-".to_string(), |f| dec(f, short));
    let mut text = format!(
        "lambda  {}\nC       {} ({c_kind}, error <= {})\n",
        dec(&lambda, digits),
        dec(&c, digits),
        dec(&c_err, 6)
    );
    text.push_str("n\tlog_x\texact\tgrowth_exp\troth_lo\troth_hi\n");
    for r in &rows {
        text.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.n,
            dec(&r.log_x, short),
            cell(r.exact.as_ref()),
            cell(r.growth.as_ref()),
            cell(r.roth.as_ref().map(|p| &p.0)),
            cell(r.roth.as_ref().map(|p| &p.1)),
        ));
    }
    Ok(Output::ok(text))
}

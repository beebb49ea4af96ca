//! Worked examples with their printed values.

use engel_core::asymptotics;
use engel_core::expansion::{self, SeriesSource};
use engel_core::sequence::{self, lift_spec};
use engel_core::{Error, Integer, Rational, RecurrenceSpec, Result};
use serde_json::json;

use crate::commands::{cf_text, Context, Output};

const GROUPS: &[&str] = &[
    "example1",
    "nex",
    "nexlift",
    "mrec",
    "kempner-u3",
    "kempner-u4",
    "kempner-u5",
    "kempner-u6",
    "kempner-u7",
    "kempner-u8",
    "kempner-u9",
    "kempner-u10",
    "kempner-u2",
    "shallit",
];

struct Check {
    group: String,
    name: &'static str,
    pass: bool,
    detail: String,
}

struct Checks {
    group: String,
    items: Vec<Check>,
}

impl Checks {
    fn add(&mut self, name: &'static str, pass: bool, detail: String) {
        self.items.push(Check {
            group: self.group.clone(),
            name,
            pass,
            detail,
        });
    }

    fn exact<T: PartialEq + std::fmt::Debug>(&mut self, name: &'static str, got: &T, want: &T) {
        self.add(name, got == want, format!("{got:?}"));
    }

    fn close(&mut self, name: &'static str, got: f64, want: f64, tol: f64) {
        self.add(
            name,
            (got - want).abs() <= tol,
            format!("{got:.12} vs {want} (tol {tol:e})"),
        );
    }
}

fn ints(v: &[&str]) -> Vec<Integer> {
    v.iter().map(|s| s.parse().expect("literal")).collect()
}

fn second(d1: u32, g: &[u64]) -> RecurrenceSpec {
    RecurrenceSpec::second_u64(d1, g).expect("valid literal spec")
}

fn prefix(ctx: &Context, source: SeriesSource, k: usize) -> Result<Vec<Integer>> {
    Ok(expansion::stream(source, k, ctx.budget)?.certified()[..=k].to_vec())
}

fn decimal(ctx: &Context, source: &SeriesSource, digits: usize) -> Result<f64> {
    let s = expansion::certified_decimal(source, digits, &ctx.budget)?;
    Ok(s.parse().expect("decimal"))
}

/// Recurrence example: terms, expansion prefix, constant, value.
struct RecurrenceExample<'a> {
    spec: RecurrenceSpec,
    terms: &'a [&'a str],
    cf: &'a [&'a str],
    c: (f64, f64),
    value: (f64, f64),
}

fn recurrence_example(ctx: &Context, c: &mut Checks, ex: RecurrenceExample) -> Result<()> {
    let x = sequence::generate_recurrence(&ex.spec, ex.terms.len(), &ctx.budget)?;
    c.exact("sequence", &x, &ints(ex.terms));
    let source = SeriesSource::Recurrence(ex.spec.clone());
    let got = prefix(ctx, source.clone(), ex.cf.len() - 1)?;
    let want = ints(ex.cf);
    c.add("expansion prefix", got == want, cf_text(&got));
    let constant = match &ex.spec {
        RecurrenceSpec::Second { .. } => asymptotics::estimate_c(&ex.spec, ctx.digits, &ctx.budget)?.value,
        RecurrenceSpec::Third { .. } => {
            let base = sequence::unlift_spec(&ex.spec).expect("lifted example");
            let RecurrenceSpec::Second { d1, .. } = &base else {
                unreachable!()
            };
            let lambda = asymptotics::dominant_root(*d1, base.leading().expect("order 2").0, ctx.digits)?;
            asymptotics::empirical_constant(&ex.spec, &lambda, 1 << 20, ctx.digits, &ctx.budget)?.value
        }
    };
    c.close("growth constant", constant.to_f64(), ex.c.0, ex.c.1);
    c.close("value of S", decimal(ctx, &source, 12)?, ex.value.0, ex.value.1);
    Ok(())
}

fn example1(ctx: &Context, c: &mut Checks) -> Result<()> {
    let spec = second(3, &[3]);
    let x = sequence::generate_recurrence(&spec, 6, &ctx.budget)?;
    c.exact(
        "sequence",
        &x,
        &ints(&["1", "1", "3", "81", "531441", "5559060566555523"]),
    );
    let got = prefix(ctx, SeriesSource::Recurrence(spec.clone()), 11)?;
    let want = ints(&["1", "2", "1", "8", "3", "80", "1", "2", "8", "1", "2", "19682"]);
    c.add("expansion prefix", got == want, cf_text(&got));
    // s_n = t_n - 1 with t_0 = t_1 = 1, t_{n+2} = 3 t_{n+1} - t_n
    let (mut a, mut b) = (1u32, 1u32);
    let mut ok = true;
    for xn in &x {
        ok &= *xn == Integer::from(Integer::u_pow_u(3, a - 1));
        (a, b) = (b, 3 * b - a);
    }
    c.add("x_n = 3^(s_n)", ok, "s = 0,0,1,4,12,33".into());
    Ok(())
}

fn kempner(ctx: &Context, c: &mut Checks, u: u32) -> Result<()> {
    let uu = Integer::from(u);
    let source = SeriesSource::OnesTail(uu.clone());
    let lengths: Vec<usize> = (1..=6)
        .map(|n| expansion::ones_tail_pattern_cf(&uu, n, &ctx.budget).map(|p| p.len()))
        .collect::<Result<_>>()?;
    if u == 2 {
        let got = prefix(ctx, source, 18)?;
        let want: Vec<Integer> = [1u32, 1, 4, 2, 4, 4, 6, 4, 2, 4, 6, 2, 4, 6, 4, 4, 2, 4, 6]
            .iter()
            .map(|&v| Integer::from(v))
            .collect();
        c.add("expansion prefix", got == want, cf_text(&got));
        let allowed = [1u32, 2, 4, 6];
        let more = prefix(ctx, SeriesSource::OnesTail(uu.clone()), 200)?;
        c.add(
            "coefficients in {1,2,4,6}",
            more.iter().all(|a| allowed.iter().any(|v| a == v)),
            format!("{} coefficients", more.len()),
        );
        c.exact("partial-sum lengths", &lengths, &vec![1, 2, 3, 5, 7, 11]);
        let x = SeriesSource::OnesTail(uu).engel_terms(10, &ctx.budget)?;
        let lambda = asymptotics::dominant_root(3, 1, ctx.digits)?;
        let g = asymptotics::growth_report(&x, &lambda, 0.1, ctx.digits)?;
        let twos = g.rows.iter().all(|r| (r.exponent.to_f64() - 2.0).abs() < 1e-30);
        c.add(
            "growth exponent 2",
            twos && !g.holds_eventually(),
            format!("{} rows", g.rows.len()),
        );
        return Ok(());
    }
    let got = prefix(ctx, source, 16)?;
    let pattern: [i64; 17] = [0, -1, 2, 0, 0, -2, 0, 2, 0, -2, 2, 0, -2, 0, 0, 2, 0];
    let want: Vec<Integer> = pattern
        .iter()
        .enumerate()
        .map(|(j, d)| if j == 0 { Integer::from(1) } else { Integer::from(u) + d })
        .collect();
    c.add("expansion prefix", got == want, cf_text(&got));
    let more = prefix(ctx, SeriesSource::OnesTail(uu.clone()), 200)?;
    c.add(
        "coefficients in {1,u-2,u-1,u,u+2}",
        expansion::ones_tail_alphabet_ok(&more, &uu),
        format!("{} coefficients", more.len()),
    );
    c.exact("partial-sum lengths", &lengths, &vec![1, 2, 3, 5, 9, 17]);
    Ok(())
}

fn shallit(ctx: &Context, c: &mut Checks) -> Result<()> {
    let u = Integer::from(3);
    let exps = ints(&["1", "4", "12", "33"]);
    let zs = sequence::shallit_factors(&u, &exps)?;
    c.exact("factors", &zs.factors().to_vec(), &ints(&["3", "9", "81", "19683"]));
    let x = sequence::from_factors(&zs, 5, &ctx.budget)?;
    let mut sum = Rational::new();
    let mut ok = true;
    for n in 1..=5 {
        ok &= sequence::partial_sum(&x, n)? - 1u32 == sum;
        if let Some(e) = exps.get(n - 1) {
            sum += Rational::from((1, Integer::from(Integer::u_pow_u(3, e.to_u32().expect("small")))));
        }
    }
    c.add("S_n - 1 = sum 3^(-c_k)", ok, "n <= 5".into());
    let bad = sequence::shallit_factors(&u, &ints(&["1", "3", "5"]));
    c.add(
        "negative gap rejected",
        matches!(bad, Err(Error::NegativeGap { .. })),
        format!("{bad:?}"),
    );
    Ok(())
}

fn run_group(ctx: &Context, group: &str, c: &mut Checks) -> Result<()> {
    match group {
        "example1" => example1(ctx, c),
        "nex" => recurrence_example(
            ctx,
            c,
            RecurrenceExample {
                spec: second(3, &[1, 2]),
                terms: &["1", "1", "3", "189", "852910317", "5599917937724687764238078261637795"],
                cf: &[
                    "1",
                    "2",
                    "1",
                    "20",
                    "3",
                    "23876",
                    "1",
                    "2",
                    "20",
                    "1",
                    "2",
                    "7697947188058154",
                ],
                c: (0.107812043, 1e-8),
                value: (1.3386243, 5e-8),
            },
        ),
        "nexlift" => recurrence_example(
            ctx,
            c,
            RecurrenceExample {
                spec: lift_spec(&second(3, &[1, 2]))?,
                terms: &["1", "1", "1", "3", "63", "13538259", "413636490314204194515563505"],
                cf: &[
                    "1",
                    "2",
                    "1",
                    "6",
                    "3",
                    "3410",
                    "1",
                    "2",
                    "6",
                    "1",
                    "2",
                    "2256800700104",
                ],
                c: (0.0227833, 1e-5),
                value: (1.3492064, 5e-8),
            },
        ),
        "mrec" => recurrence_example(
            ctx,
            c,
            RecurrenceExample {
                spec: second(3, &[1, 1]),
                terms: &["1", "1", "2", "24", "172800", "37150633525248000000"],
                cf: &[
                    "1",
                    "1",
                    "1",
                    "5",
                    "2",
                    "299",
                    "1",
                    "1",
                    "5",
                    "1",
                    "1",
                    "1244167199",
                    "2",
                    "5",
                    "1",
                    "1",
                    "299",
                ],
                c: (0.06224548, 1e-7),
                value: (1.54167245, 5e-9),
            },
        ),
        "shallit" => shallit(ctx, c),
        g => match g.strip_prefix("kempner-u").and_then(|u| u.parse::<u32>().ok()) {
            Some(u) if (2..=10).contains(&u) => kempner(ctx, c, u),
            _ => Err(Error::InvalidSpec(format!("unknown example group `{g}`"))),
        },
    }
}

pub fn run(ctx: &Context, only: Option<&str>) -> Result<Output> {
    let groups: Vec<&str> = match only {
        None => GROUPS.to_vec(),
        Some("kempner") => GROUPS
            .iter()
            .copied()
            .filter(|g| g.starts_with("kempner-u") && *g != "kempner-u2")
            .collect(),
        Some(g) if GROUPS.contains(&g) => vec![g],
        Some(g) => return Err(Error::InvalidSpec(format!("unknown example group `{g}`"))),
    };
    let mut all = Vec::new();
    for g in groups {
        let mut c = Checks {
            group: g.to_string(),
            items: Vec::new(),
        };
        run_group(ctx, g, &mut c)?;
        all.extend(c.items);
    }
    let failed = all.iter().any(|c| !c.pass);
    let text = if ctx.json {
        let checks: Vec<_> = all
            .iter()
            .map(|c| json!({"group": c.group, "check": c.name, "pass": c.pass, "detail": c.detail}))
            .collect();
        format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({"checks": checks, "passed": !failed})).expect("serializable")
        )
    } else {
        let mut s = String::new();
        for c in &all {
            let status = if c.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!("{status} {:<11} {:<34} {}\n", c.group, c.name, c.detail));
        }
        let passed = all.iter().filter(|c| c.pass).count();
        s.push_str(&format!("{passed}/{} checks passed\n", all.len()));
        s
    };
    Ok(Output { text, failed })
}

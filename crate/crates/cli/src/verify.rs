//! Invariant suites behind `engel verify`.

use clap::ValueEnum;
use engel_core::cf;
use engel_core::expansion::{self, SeriesSource};
use engel_core::sequence::{self, lift_spec};
use engel_core::{Error, FactorClass, FactorSequence, Integer, RecurrenceSpec, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::{Context, Output};
use crate::input::Input;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Recursion = Euclid on random generic factors
    Generic,
    /// Recursion = Euclid on random factors with z_2 = 2
    Z2,
    /// Step identities on the given factors
    Identities,
    /// X_n X_{n+1} = x_n for the lift of the given recurrence
    Lift,
    /// Expansion lengths of every class against the closed forms
    Lengths,
    /// Coefficient alphabets
    Alphabet,
}

pub struct Options {
    pub suite: Suite,
    pub input: Option<Input>,
    pub trials: usize,
    pub maxn: usize,
    pub seed: u64,
    pub n: Option<usize>,
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn random_factors(rng: &mut ChaCha8Rng, z2: u64, len: usize) -> Result<FactorSequence> {
    let mut z = vec![z2];
    z.extend((1..len).map(|_| rng.gen_range(2..=20u64)));
    FactorSequence::from_u64s(&z)
}

fn names(z: &FactorSequence) -> String {
    let v: Vec<String> = z.factors().iter().map(Integer::to_string).collect();
    v.join(",")
}

/// Recursion against Euclid, length, final denominator, determinants and
/// (generic only) alphabet, for `n = 1..=maxn`.
fn recursion_suite(ctx: &Context, opts: &Options, z2_case: bool, t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let maxn = opts.maxn.max(2);
    for _ in 0..opts.trials {
        let z2 = if z2_case { 2 } else { rng.gen_range(3..=20u64) };
        let zs = random_factors(&mut rng, z2, maxn - 1)?;
        let x = sequence::from_factors(&zs, maxn, &ctx.budget)?;
        for n in 1..=maxn {
            let rec = if z2_case {
                expansion::z2eq2_partial_cf(&zs, n)?
            } else {
                expansion::generic_partial_cf(&zs, n)?
            };
            let euclid = expansion::oracle_partial_cf(&zs, n, &ctx.budget)?;
            let tag = || format!("z={} n={n}", names(&zs));
            t.check(rec == euclid, || format!("{}: recursion differs from Euclid", tag()));
            let expected = expansion::expected_length(zs.class(), n);
            t.check(expected == Some(rec.len()), || {
                format!("{}: length {}", tag(), rec.len())
            });
            let table = cf::convergents(&rec.coefficients)?;
            t.check(table.last().1 == *x.term(n), || format!("{}: final denominator", tag()));
            let dets_ok = (0..table.len()).all(|j| table.determinant(j) == if j % 2 == 0 { -1 } else { 1 });
            t.check(dets_ok, || format!("{}: determinant", tag()));
            if z2_case && n >= 4 {
                t.check(*rec.coefficients.coeffs().last().unwrap() == 2, || {
                    format!("{}: final coefficient", tag())
                });
            }
            if !z2_case {
                let ok = expansion::generic_alphabet_ok(rec.coefficients.coeffs(), &zs.prefix(n - 1));
                t.check(ok, || format!("{}: alphabet", tag()));
            }
        }
    }
    Ok(())
}

fn identities_suite(opts: &Options, t: &mut Tally) -> Result<()> {
    let Some(Input::Factors(zs)) = &opts.input else {
        return Err(Error::InvalidSpec("the identities suite needs --z".into()));
    };
    let n_max = opts.n.unwrap_or(zs.max_index());
    if n_max > zs.max_index() {
        return Err(Error::InsufficientFactors {
            needed: n_max - 1,
            available: zs.len(),
        });
    }
    for n in 3..n_max {
        let ok = match expansion::verify_step_identities(zs, n) {
            Ok(r) => r.len_next == 2 * r.len_n + 1,
            Err(e @ Error::IdentityViolation { .. }) => {
                t.check(false, || e.to_string());
                continue;
            }
            Err(e) => return Err(e),
        };
        t.check(ok, || format!("n={n}: length doubling"));
    }
    Ok(())
}

fn lift_suite(ctx: &Context, opts: &Options, t: &mut Tally) -> Result<()> {
    let Some(Input::Spec(spec @ RecurrenceSpec::Second { .. })) = &opts.input else {
        return Err(Error::InvalidSpec(
            "the lift suite needs a second order recurrence".into(),
        ));
    };
    let n = opts.n.unwrap_or(7);
    let lifted = lift_spec(spec)?;
    let x = sequence::generate_recurrence(spec, n, &ctx.budget)?;
    let big_x = sequence::generate_recurrence(&lifted, n + 1, &ctx.budget)?;
    for k in 0..n {
        t.check(Integer::from(&big_x[k] * &big_x[k + 1]) == x[k], || {
            format!("X_{k} X_{} != x_{k}", k + 1)
        });
    }
    Ok(())
}

fn lengths_suite(ctx: &Context, opts: &Options, t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let maxn = opts.maxn.max(2);
    for _ in 0..opts.trials {
        for z2 in [rng.gen_range(3..=20u64), 2] {
            let zs = random_factors(&mut rng, z2, maxn - 1)?;
            for n in 1..=maxn {
                let p = expansion::oracle_partial_cf(&zs, n, &ctx.budget)?;
                t.check(expansion::expected_length(zs.class(), n) == Some(p.len()), || {
                    format!("z={} n={n}: length {}", names(&zs), p.len())
                });
            }
        }
    }
    for u in 2..=10u32 {
        let u = Integer::from(u);
        let class = FactorClass::OnesTail(u.clone());
        for n in 1..=maxn {
            let p = expansion::ones_tail_pattern_cf(&u, n, &ctx.budget)?;
            t.check(expansion::expected_length(&class, n) == Some(p.len()), || {
                format!("u={u} n={n}: length {}", p.len())
            });
        }
    }
    Ok(())
}

fn alphabet_suite(ctx: &Context, opts: &Options, t: &mut Tally) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let maxn = opts.maxn.max(2);
    for _ in 0..opts.trials {
        let z2 = rng.gen_range(3..=20u64);
        let zs = random_factors(&mut rng, z2, maxn - 1)?;
        let p = expansion::generic_partial_cf(&zs, maxn)?;
        t.check(expansion::generic_alphabet_ok(p.coefficients.coeffs(), &zs), || {
            format!("z={}: alphabet", names(&zs))
        });
    }
    for u in 3..=10u32 {
        let u = Integer::from(u);
        let zs = SeriesSource::OnesTail(u.clone()).factors(maxn, &ctx.budget)?;
        let p = expansion::oracle_partial_cf(&zs, maxn, &ctx.budget)?;
        t.check(expansion::ones_tail_alphabet_ok(p.coefficients.coeffs(), &u), || {
            format!("u={u}: alphabet")
        });
    }
    Ok(())
}

pub fn run(ctx: &Context, opts: &Options) -> Result<Output> {
    let mut t = Tally::new();
    match opts.suite {
        Suite::Generic => recursion_suite(ctx, opts, false, &mut t)?,
        Suite::Z2 => recursion_suite(ctx, opts, true, &mut t)?,
        Suite::Identities => identities_suite(opts, &mut t)?,
        Suite::Lift => lift_suite(ctx, opts, &mut t)?,
        Suite::Lengths => lengths_suite(ctx, opts, &mut t)?,
        Suite::Alphabet => alphabet_suite(ctx, opts, &mut t)?,
    }
    let name = opts.suite.to_possible_value().expect("named").get_name().to_string();
    let failed = !t.failures.is_empty();
    let text = if ctx.json {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "suite": name,
                "checks": t.checks,
                "failures": t.failures,
                "passed": !failed,
            }))
            .expect("serializable")
        )
    } else {
        let mut s = String::new();
        for f in &t.failures {
            s.push_str(&format!("FAIL {f}\n"));
        }
        let status = if failed { "FAIL" } else { "ok" };
        s.push_str(&format!(
            "suite {name}: {} checks, {} failures: {status}\n",
            t.checks,
            t.failures.len()
        ));
        s
    };
    Ok(Output { text, failed })
}

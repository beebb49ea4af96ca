//! Input selection: exactly one of factors, a recurrence, a u-power source or
//! a sequence file.

use std::path::PathBuf;

use clap::Args;
use engel_core::expansion::SeriesSource;
use engel_core::sequence::{self, lift_spec};
use engel_core::{Error, FactorSequence, Integer, RecurrenceSpec, Result};

#[derive(Args, Debug, Default, Clone)]
pub struct InputArgs {
    /// Factors z_2,z_3,... (comma separated)
    #[arg(long, value_name = "LIST")]
    pub z: Option<String>,
    /// Exponent d1 of a second order recurrence (use with --G)
    #[arg(long)]
    pub d1: Option<u32>,
    /// Coefficients of G, constant term first (use with --d1)
    #[arg(long = "G", value_name = "LIST")]
    pub g: Option<String>,
    /// Recurrence in spec-file syntax, e.g. "order=2 d1=3 G=1,2"
    #[arg(long, value_name = "SPEC")]
    pub spec: Option<String>,
    /// Base u of a u-power series (use with --pow2 or --c)
    #[arg(long, value_name = "INT")]
    pub u: Option<String>,
    /// Exponents c_k = 2^k, i.e. factors (u, 1, 1, ...)
    #[arg(long, requires = "u", conflicts_with = "c")]
    pub pow2: bool,
    /// Exponents c_0,c_1,... of sum u^(-c_k)
    #[arg(long, value_name = "LIST", requires = "u")]
    pub c: Option<String>,
    /// Replace a second order recurrence by its third order lift
    #[arg(long)]
    pub lift: bool,
    /// Sequence file in the engel-seq v1 format
    #[arg(long, value_name = "PATH")]
    pub seq: Option<PathBuf>,
}

/// A resolved input.
#[derive(Debug, Clone)]
pub enum Input {
    Factors(FactorSequence),
    Spec(RecurrenceSpec),
    OnesTail(Integer),
    Terms(Vec<Integer>),
}

fn invalid(msg: &str) -> Error {
    Error::InvalidSpec(msg.to_string())
}

impl InputArgs {
    pub fn resolve(&self) -> Result<Option<Input>> {
        let given = [
            self.z.is_some(),
            self.d1.is_some() || self.g.is_some(),
            self.spec.is_some(),
            self.u.is_some(),
            self.seq.is_some(),
        ];
        match given.iter().filter(|g| **g).count() {
            0 if self.lift => return Err(invalid("--lift needs --d1/--G or --spec")),
            0 => return Ok(None),
            1 => {}
            _ => return Err(invalid("give exactly one of --z, --d1/--G, --spec, --u, --seq")),
        }
        let input = if let Some(z) = &self.z {
            Input::Factors(FactorSequence::new(sequence::parse_integer_list(z)?)?)
        } else if self.d1.is_some() || self.g.is_some() {
            let (Some(d1), Some(g)) = (self.d1, &self.g) else {
                return Err(invalid("--d1 and --G go together"));
            };
            Input::Spec(RecurrenceSpec::second(d1, sequence::parse_g(g)?)?)
        } else if let Some(spec) = &self.spec {
            Input::Spec(spec.parse()?)
        } else if let Some(u) = &self.u {
            let u: Integer = u
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer `{u}`")))?;
            if u < 2 {
                return Err(invalid("u must be at least 2"));
            }
            match (&self.c, self.pow2) {
                (Some(c), _) => Input::Factors(sequence::shallit_factors(&u, &sequence::parse_integer_list(c)?)?),
                (None, true) => Input::OnesTail(u),
                (None, false) => return Err(invalid("--u needs --pow2 or --c")),
            }
        } else {
            let path = self.seq.as_ref().expect("one input given");
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let (terms, _) = sequence::parse_sequence_file(&text)?;
            sequence::factors_from_sequence(&terms)?;
            Input::Terms(terms)
        };
        if self.lift {
            return match input {
                Input::Spec(spec) => Ok(Some(Input::Spec(lift_spec(&spec)?))),
                _ => Err(invalid("--lift needs --d1/--G or --spec")),
            };
        }
        Ok(Some(input))
    }

    pub fn require(&self) -> Result<Input> {
        self.resolve()?
            .ok_or_else(|| invalid("no input; give one of --z, --d1/--G, --spec, --u, --seq"))
    }
}

impl Input {
    pub fn source(&self) -> Result<SeriesSource> {
        Ok(match self {
            Input::Factors(zs) => SeriesSource::Factors(zs.clone()),
            Input::Spec(spec) => SeriesSource::Recurrence(spec.clone()),
            Input::OnesTail(u) => SeriesSource::OnesTail(u.clone()),
            Input::Terms(x) => SeriesSource::Factors(sequence::factors_from_sequence(x)?),
        })
    }
}

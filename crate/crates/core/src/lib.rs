//! Exact continued fractions of Engel series whose terms satisfy
//! `x_n^2 | x_{n+1}`.
//!
//! - [`cf`]: finite continued fractions, convergents, Euclidean expansion and
//!   zero removal.
//! - [`sequence`]: factor sequences, recurrence generators and partial sums.
//! - [`expansion`]: the doubling recursions for partial-sum expansions and the
//!   certified coefficient stream.
//! - [`asymptotics`]: growth constants, log reconstruction and irrationality
//!   exponent brackets.

pub mod asymptotics;
pub mod budget;
pub mod cf;
pub mod error;
pub mod expansion;
pub mod sequence;

pub use budget::BitBudget;
pub use cf::{CfExpansion, ConvergentTable};
pub use error::{Error, ErrorKind, Result};
pub use rug::{Float, Integer, Rational};
pub use sequence::{EngelSequence, FactorClass, FactorSequence, RecurrenceSpec};

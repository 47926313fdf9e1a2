//! Optimization under value uncertainty and functorial uncertainty.
//!
//! * [`orders`]: single-objective `minimum`/`argmin` and relation classifiers.
//! * [`pareto`]: dominance, Pareto fronts, multi-objective `argmin`.
//! * [`uncertainty`]: uncertain values (sequences, simple probability
//!   distributions, intervals, histograms) and their structural orders.
//! * [`measures`]: measure functions and the monotonicity checks M1/M2.
//! * [`minu`]: minimization of functions returning uncertain values.
//! * [`check`]: seedable property checking used by all suites.
//! * [`benchmark`]: the two-objective sampling and evolutionary benchmark.
//! * [`suites`]: named property suites with their expected verdicts.

pub mod benchmark;
pub mod check;
pub mod error;
pub mod exec;
pub mod finset;
pub mod measures;
pub mod minu;
pub mod orders;
pub mod pareto;
pub mod suites;
pub mod uncertainty;

pub use error::{Error, Result};
pub use exec::Exec;
pub use finset::FinSet;
pub use pareto::Point;

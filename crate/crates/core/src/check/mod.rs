//! Deterministic property checking.
//!
//! [`check`] runs a property on `n` generated cases and stops at the first
//! counterexample; [`falsify`] runs the same search but succeeds only when a
//! counterexample turns up. Case `i` is always generated from
//! `Rng::for_case(seed, i)`, so a witness can be re-derived from the seed and
//! case index, and the parallel driver reports exactly what the sequential
//! one would. There is no shrinking; witnesses are reported as generated.

pub mod gen;
mod rng;

use std::fmt;

pub use gen::Gen;
pub use rng::Rng;

use crate::exec::Exec;

/// Share of cases whose antecedent must hold for a pass to count.
pub const MIN_NON_VACUOUS_RATIO: f64 = 0.01;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The antecedent of an implication did not hold.
    Discard,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// `antecedent ⇒ consequent`, tracking vacuous cases.
pub fn implies(antecedent: bool, consequent: impl FnOnce() -> bool) -> Verdict {
    if antecedent {
        consequent().into()
    } else {
        Verdict::Discard
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Passed(usize),
    Falsified {
        after: usize,
        witness: String,
    },
    /// No counterexample, but too few cases satisfied the antecedent.
    Discarded {
        tested: usize,
        ratio: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub outcome: Outcome,
    pub discards: usize,
    pub seed: u64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, Outcome::Passed(_))
    }

    pub fn falsified(&self) -> bool {
        matches!(self.outcome, Outcome::Falsified { .. })
    }

    pub fn witness(&self) -> Option<&str> {
        match &self.outcome {
            Outcome::Falsified { witness, .. } => Some(witness),
            _ => None,
        }
    }

    /// Zero-based index of the failing case, for `Rng::for_case`.
    pub fn failing_case(&self) -> Option<u64> {
        match self.outcome {
            Outcome::Falsified { after, .. } => Some(after as u64 - 1),
            _ => None,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Passed(n) => write!(f, "+++ OK, passed {n} tests"),
            Outcome::Falsified { after, .. } => {
                let s = if *after == 1 { "test" } else { "tests" };
                write!(f, "*** Failed, Falsified (after {after} {s})")
            }
            Outcome::Discarded { tested, .. } => {
                write!(
                    f,
                    "*** Gave up! Passed only {tested} tests; {} discarded",
                    self.discards
                )
            }
        }
    }
}

/// Result of a falsification run: success means a counterexample was found.
#[derive(Clone, Debug, PartialEq)]
pub struct Falsification(pub CheckResult);

impl Falsification {
    pub fn found(&self) -> bool {
        self.0.falsified()
    }

    pub fn witness(&self) -> Option<&str> {
        self.0.witness()
    }
}

impl fmt::Display for Falsification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.outcome {
            Outcome::Falsified { after, .. } => {
                let s = if *after == 1 { "test" } else { "tests" };
                write!(f, "+++ OK, falsified as expected (after {after} {s})")
            }
            Outcome::Passed(n) => write!(f, "*** Failed, no counterexample in {n} tests"),
            Outcome::Discarded { tested, .. } => {
                write!(f, "*** Failed, no counterexample; only {tested} non-vacuous tests")
            }
        }
    }
}

/// Case count, seed and execution strategy for a run.
#[derive(Clone, Copy, Debug)]
pub struct Checker {
    pub cases: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Checker {
    pub fn new(cases: usize, seed: u64) -> Self {
        Checker {
            cases,
            seed,
            exec: Exec::default(),
        }
    }

    pub fn with_exec(self, exec: Exec) -> Self {
        Checker { exec, ..self }
    }

    pub fn check<T, V, P>(&self, gen: &Gen<T>, prop: P) -> CheckResult
    where
        T: fmt::Debug,
        V: Into<Verdict>,
        P: Fn(&T) -> V + Sync + Send,
    {
        let seed = self.seed;
        let run_case = |i: usize| {
            let mut rng = Rng::for_case(seed, i as u64);
            prop(&gen.sample(&mut rng)).into()
        };
        let (failure, discards) = match self.exec {
            Exec::Sequential => {
                let mut discards = 0;
                let mut failure = None;
                for i in 0..self.cases {
                    match run_case(i) {
                        Verdict::Pass => {}
                        Verdict::Discard => discards += 1,
                        Verdict::Fail => {
                            failure = Some(i);
                            break;
                        }
                    }
                }
                (failure, discards)
            }
            Exec::Parallel => {
                let verdicts = self.exec.map_indices(self.cases, run_case);
                let failure = verdicts.iter().position(|v| *v == Verdict::Fail);
                let upto = failure.unwrap_or(verdicts.len());
                let discards = verdicts[..upto].iter().filter(|v| **v == Verdict::Discard).count();
                (failure, discards)
            }
        };
        let outcome = match failure {
            Some(i) => {
                let input = gen.sample(&mut Rng::for_case(seed, i as u64));
                Outcome::Falsified {
                    after: i + 1,
                    witness: format!("{input:?}"),
                }
            }
            None => {
                let tested = self.cases - discards;
                let ratio = if self.cases == 0 {
                    0.0
                } else {
                    tested as f64 / self.cases as f64
                };
                if self.cases > 0 && ratio < MIN_NON_VACUOUS_RATIO {
                    Outcome::Discarded { tested, ratio }
                } else {
                    Outcome::Passed(self.cases)
                }
            }
        };
        CheckResult {
            outcome,
            discards,
            seed,
        }
    }

    pub fn falsify<T, V, P>(&self, gen: &Gen<T>, prop: P) -> Falsification
    where
        T: fmt::Debug,
        V: Into<Verdict>,
        P: Fn(&T) -> V + Sync + Send,
    {
        Falsification(self.check(gen, prop))
    }
}

pub fn check<T, V, P>(n: usize, gen: &Gen<T>, prop: P, seed: u64) -> CheckResult
where
    T: fmt::Debug,
    V: Into<Verdict>,
    P: Fn(&T) -> V + Sync + Send,
{
    Checker::new(n, seed).check(gen, prop)
}

pub fn falsify<T, V, P>(n: usize, gen: &Gen<T>, prop: P, seed: u64) -> Falsification
where
    T: fmt::Debug,
    V: Into<Verdict>,
    P: Fn(&T) -> V + Sync + Send,
{
    Checker::new(n, seed).falsify(gen, prop)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_true_passes() {
        let r = check(5, &gen::int(0..=9), |_| true, 1);
        assert_eq!(r.outcome, Outcome::Passed(5));
        assert_eq!(r.to_string(), "+++ OK, passed 5 tests");
    }

    #[test]
    fn falsify_without_counterexample_is_a_meta_failure() {
        let f = falsify(10, &gen::int(0..=9), |_| true, 1);
        assert!(!f.found());
        assert!(f.to_string().starts_with("*** Failed"));
    }

    #[test]
    fn first_failure_and_witness_are_reproducible() {
        let g = gen::int(0..=99);
        let prop = |x: &i64| *x < 90;
        let seq = Checker::new(10_000, 42).with_exec(Exec::Sequential).check(&g, prop);
        let par = Checker::new(10_000, 42).with_exec(Exec::Parallel).check(&g, prop);
        assert_eq!(seq, par);
        let idx = seq.failing_case().unwrap();
        let again = g.sample(&mut Rng::for_case(42, idx));
        assert_eq!(seq.witness().unwrap(), format!("{again:?}"));
        assert!(again >= 90);
        assert!(seq.to_string().starts_with("*** Failed, Falsified (after "));
    }

    #[test]
    fn vacuous_implications_give_up() {
        let r = check(1000, &gen::int(0..=1000), |x: &i64| implies(*x == 1234, || false), 3);
        assert!(matches!(r.outcome, Outcome::Discarded { .. }));
        assert_eq!(r.discards, 1000);
        let r = check(1000, &gen::int(0..=1), |x: &i64| implies(*x == 0, || true), 3);
        assert!(r.passed());
        assert!(r.discards > 0);
    }

    #[test]
    fn deterministic_per_seed() {
        let g = gen::int(-1000..=1000);
        let a = check(500, &g, |x: &i64| x % 97 != 0, 9);
        let b = check(500, &g, |x: &i64| x % 97 != 0, 9);
        assert_eq!(a, b);
    }
}

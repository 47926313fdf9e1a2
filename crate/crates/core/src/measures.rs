//! Measure functions on uncertain values and the monotonicity checks.
//!
//! * M1: `u1 ≤· u2 ⇒ μ u1 ≤ μ u2`
//! * M2: `u1 ≺u u2 ⇒ μ u1 < μ u2`
//!
//! [`check_m1`] raises values position by position; [`check_m2`] shifts all
//! values by `1 + (max − min)`, which always yields a universally dominated
//! partner.

use std::fmt;
use std::sync::Arc;

use rand::Rng as _;

use crate::check::{implies, CheckResult, Checker, Gen};
use crate::error::{Error, Result};
use crate::uncertainty::{
    pointwise_le, strictly_dominates, HistPdf, IdU, Interval, Scalar, SeqU, SimpleProb, Uncertain,
};

type MeasureFn<U> = dyn Fn(&U) -> Result<f64> + Send + Sync;

/// Named map from uncertain values to a totally ordered scalar.
pub struct Measure<U> {
    name: String,
    f: Arc<MeasureFn<U>>,
}

impl<U> Clone for Measure<U> {
    fn clone(&self) -> Self {
        Measure {
            name: self.name.clone(),
            f: self.f.clone(),
        }
    }
}

impl<U> fmt::Debug for Measure<U> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Measure({})", self.name)
    }
}

impl<U> Measure<U> {
    pub fn new(name: impl Into<String>, f: impl Fn(&U) -> Result<f64> + Send + Sync + 'static) -> Self {
        Measure {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, u: &U) -> Result<f64> {
        (self.f)(u)
    }

    /// Constant measure; ignores its argument entirely.
    pub fn constant(c: f64) -> Self {
        Measure::new(format!("const {c}"), move |_| Ok(c))
    }
}

// ---------------------------------------------------------------------------
// Sequences

fn nonempty<B>(xs: &[B]) -> Result<&[B]> {
    if xs.is_empty() {
        Err(Error::EmptySet)
    } else {
        Ok(xs)
    }
}

pub fn sum_seq<B: Scalar>(u: &SeqU<B>) -> Result<f64> {
    Ok(nonempty(u.as_slice())?.iter().map(|x| x.to_f64()).sum())
}

/// Arithmetic mean as a real, never truncated.
pub fn average_seq<B: Scalar>(u: &SeqU<B>) -> Result<f64> {
    Ok(sum_seq(u)? / u.len() as f64)
}

pub fn head_seq<B: Scalar>(u: &SeqU<B>) -> Result<f64> {
    Ok(nonempty(u.as_slice())?[0].to_f64())
}

pub fn best_seq<B: Scalar>(u: &SeqU<B>) -> Result<f64> {
    Ok(min_f64(nonempty(u.as_slice())?.iter().map(|x| x.to_f64())))
}

pub fn worst_seq<B: Scalar>(u: &SeqU<B>) -> Result<f64> {
    Ok(max_f64(nonempty(u.as_slice())?.iter().map(|x| x.to_f64())))
}

pub fn length_seq<B>(u: &SeqU<B>) -> Result<f64> {
    Ok(u.len() as f64)
}

fn min_f64(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(f64::INFINITY, f64::min)
}

fn max_f64(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(f64::NEG_INFINITY, f64::max)
}

pub fn seq_catalog<B: Scalar>() -> Vec<Measure<SeqU<B>>> {
    vec![
        Measure::new("sum", sum_seq),
        Measure::new("average", average_seq),
        Measure::new("head", head_seq),
        Measure::new("best", best_seq),
        Measure::new("worst", worst_seq),
        Measure::new("length", length_seq),
        Measure::constant(3.0),
    ]
}

// ---------------------------------------------------------------------------
// Simple probability distributions

pub fn exp_val_sp<B: Scalar>(u: &SimpleProb<B>) -> Result<f64> {
    u.validate()?;
    Ok(u.pairs().iter().map(|&(v, p)| v.to_f64() * p).sum())
}

pub fn best_sp<B: Scalar>(u: &SimpleProb<B>) -> Result<f64> {
    u.validate()?;
    Ok(min_f64(u.pairs().iter().map(|&(v, _)| v.to_f64())))
}

pub fn worst_sp<B: Scalar>(u: &SimpleProb<B>) -> Result<f64> {
    u.validate()?;
    Ok(max_f64(u.pairs().iter().map(|&(v, _)| v.to_f64())))
}

/// Mode of the distribution. Pairs with equal values pool their
/// probabilities; ties go to the value listed first.
pub fn most_likely_sp<B: Scalar>(u: &SimpleProb<B>) -> Result<f64> {
    u.validate()?;
    let mut pooled: Vec<(B, f64)> = Vec::new();
    for &(v, p) in u.pairs() {
        match pooled.iter_mut().find(|(w, _)| *w == v) {
            Some(entry) => entry.1 += p,
            None => pooled.push((v, p)),
        }
    }
    let mut best = pooled[0];
    for &(v, p) in &pooled[1..] {
        if p > best.1 {
            best = (v, p);
        }
    }
    Ok(best.0.to_f64())
}

pub fn sp_catalog<B: Scalar>() -> Vec<Measure<SimpleProb<B>>> {
    vec![
        Measure::new("expVal", exp_val_sp),
        Measure::new("best", best_sp),
        Measure::new("worst", worst_sp),
        Measure::new("mostLikely", most_likely_sp),
        Measure::constant(3.0),
    ]
}

// ---------------------------------------------------------------------------
// Intervals

pub fn sum_i<S: Scalar>(i: &Interval<S>) -> Result<f64> {
    i.validate()?;
    Ok(i.start.to_f64() + i.end.to_f64())
}

pub fn average_i<S: Scalar>(i: &Interval<S>) -> Result<f64> {
    Ok(sum_i(i)? / 2.0)
}

pub fn best_i<S: Scalar>(i: &Interval<S>) -> Result<f64> {
    i.validate()?;
    Ok(i.start.to_f64())
}

pub fn worst_i<S: Scalar>(i: &Interval<S>) -> Result<f64> {
    i.validate()?;
    Ok(i.end.to_f64())
}

pub fn width_i<S: Scalar>(i: &Interval<S>) -> Result<f64> {
    i.validate()?;
    Ok(i.width().to_f64())
}

pub fn interval_catalog<S: Scalar>() -> Vec<Measure<Interval<S>>> {
    vec![
        Measure::new("sum", sum_i),
        Measure::new("average", average_i),
        Measure::new("best", best_i),
        Measure::new("worst", worst_i),
        Measure::new("width", width_i),
        Measure::constant(3.0),
    ]
}

// ---------------------------------------------------------------------------
// Histogram densities

pub fn exp_val_pdf<S: Scalar>(u: &HistPdf<S>) -> Result<f64> {
    u.validate()?;
    Ok(u.bin_midpoints().iter().zip(&u.weights).map(|(m, w)| m * w).sum())
}

/// Midpoint of the heaviest bin; ties go to the lowest index.
pub fn most_likely_pdf<S: Scalar>(u: &HistPdf<S>) -> Result<f64> {
    u.validate()?;
    let mut best = 0;
    for (i, w) in u.weights.iter().enumerate() {
        if *w > u.weights[best] {
            best = i;
        }
    }
    Ok(u.bin_midpoints()[best])
}

pub fn pdf_catalog<S: Scalar>() -> Vec<Measure<HistPdf<S>>> {
    vec![
        Measure::new("expVal", exp_val_pdf),
        Measure::new("mostLikely", most_likely_pdf),
        Measure::constant(3.0),
    ]
}

// ---------------------------------------------------------------------------
// Identity

pub fn unwrap_id<B: Scalar>(u: &IdU<B>) -> Result<f64> {
    Ok(u.0.to_f64())
}

pub fn id_catalog<B: Scalar>() -> Vec<Measure<IdU<B>>> {
    vec![Measure::new("unwrap", unwrap_id), Measure::constant(7.0)]
}

pub fn find<U>(catalog: &[Measure<U>], name: &str) -> Option<Measure<U>> {
    catalog.iter().find(|m| m.name() == name).cloned()
}

// ---------------------------------------------------------------------------
// Monotonicity checks

/// Largest per-position raise used by [`check_m1`].
pub const M1_MAX_RAISE: i64 = 2;

/// Raises every value of `u` by one when `uniform`, otherwise by the
/// per-position amounts in `raises`.
pub fn m1_partner<U: Uncertain>(u: &U, raises: &[i64], uniform: bool) -> U {
    u.map_indexed(|i, v| {
        let d = if uniform { 1 } else { raises[i] };
        v + U::Value::from_i64(d)
    })
}

/// Shifts every value of `u` by `1 + (max − min)`.
pub fn m2_partner<U: Uncertain>(u: &U) -> U {
    let vals = u.values();
    let Some(&first) = vals.first() else {
        return u.clone();
    };
    let (lo, hi) = vals.iter().fold((first, first), |(lo, hi), &v| {
        (if v < lo { v } else { lo }, if v > hi { v } else { hi })
    });
    let shift = U::Value::from_i64(1) + (hi - lo);
    u.map_values(|v| v + shift)
}

/// Case for the M1 check: base value, per-position raises, uniform flag.
#[derive(Clone, Debug)]
pub struct M1Case<U> {
    pub base: U,
    pub raises: Vec<i64>,
    pub uniform: bool,
}

pub fn m1_cases<U>(gen: &Gen<U>) -> Gen<M1Case<U>>
where
    U: Uncertain + 'static,
{
    let gen = gen.clone();
    Gen::new(move |rng| {
        let base = gen.sample(rng);
        let raises = (0..base.values().len())
            .map(|_| rng.random_range(0..=M1_MAX_RAISE))
            .collect();
        M1Case {
            base,
            raises,
            uniform: rng.random(),
        }
    })
}

pub fn m1_holds<U: Uncertain>(mu: &Measure<U>, case: &M1Case<U>) -> crate::check::Verdict {
    let ub1 = &case.base;
    let ub2 = m1_partner(ub1, &case.raises, case.uniform);
    implies(ub1.is_valid() && ub2.is_valid() && pointwise_le(ub1, &ub2), || {
        match (mu.apply(ub1), mu.apply(&ub2)) {
            (Ok(a), Ok(b)) => a <= b,
            _ => false,
        }
    })
}

pub fn m2_holds<U: Uncertain>(mu: &Measure<U>, ub1: &U) -> crate::check::Verdict {
    let ub2 = m2_partner(ub1);
    implies(ub1.is_valid() && strictly_dominates(ub1, &ub2), || {
        match (mu.apply(ub1), mu.apply(&ub2)) {
            (Ok(a), Ok(b)) => a < b,
            _ => false,
        }
    })
}

pub fn check_m1<U>(checker: &Checker, gen: &Gen<U>, mu: &Measure<U>) -> CheckResult
where
    U: Uncertain + Send + Sync + 'static,
{
    checker.check(&m1_cases(gen), |case| m1_holds(mu, case))
}

pub fn check_m2<U>(checker: &Checker, gen: &Gen<U>, mu: &Measure<U>) -> CheckResult
where
    U: Uncertain + Send + Sync + 'static,
{
    checker.check(gen, |u| m2_holds(mu, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;

    fn sp_false() -> SimpleProb<i64> {
        SimpleProb::new(vec![(2, 0.4), (0, 0.3), (1, 0.3)])
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn sequence_measure_examples() {
        assert_eq!(worst_seq(&SeqU(vec![3i64, 2, 2])), Ok(3.0));
        assert_eq!(Measure::<SeqU<i64>>::constant(3.0).apply(&SeqU(vec![])), Ok(3.0));
        assert_eq!(length_seq(&SeqU(vec![1i64, 1, 0])), Ok(3.0));
        assert_eq!(average_seq(&SeqU(vec![1i64, 2])), Ok(1.5));
        assert_eq!(sum_seq(&SeqU::<i64>(vec![])), Err(Error::EmptySet));
        assert_eq!(head_seq(&SeqU(vec![5i64, 1])), Ok(5.0));
        assert_eq!(best_seq(&SeqU(vec![5i64, 1, 3])), Ok(1.0));
    }

    #[test]
    fn simple_prob_measure_examples() {
        assert!(close(exp_val_sp(&sp_false()).unwrap(), 1.1));
        assert_eq!(worst_sp(&sp_false()), Ok(2.0));
        assert_eq!(best_sp(&sp_false()), Ok(0.0));
        assert_eq!(most_likely_sp(&sp_false()), Ok(2.0));
        let bad = SimpleProb::new(vec![(1i64, 0.7)]);
        assert!(matches!(exp_val_sp(&bad), Err(Error::Validity { .. })));
    }

    #[test]
    fn most_likely_sp_pools_equal_values_and_breaks_ties_first() {
        let sp = SimpleProb::new(vec![(1i64, 0.3), (1, 0.3), (5, 0.4)]);
        assert_eq!(most_likely_sp(&sp), Ok(1.0));
        let tie = SimpleProb::new(vec![(4i64, 0.5), (2, 0.5)]);
        assert_eq!(most_likely_sp(&tie), Ok(4.0));
    }

    #[test]
    fn most_likely_sp_m1_counterexample() {
        // raising 0 to 1 merges it with the other 1 and moves the mode down
        let ub1 = SimpleProb::new(vec![(0i64, 0.3), (1, 0.3), (5, 0.4)]);
        let case = M1Case {
            base: ub1,
            raises: vec![1, 0, 0],
            uniform: false,
        };
        let mu = Measure::new("mostLikely", most_likely_sp);
        assert_eq!(m1_holds(&mu, &case), Verdict::Fail);
    }

    #[test]
    fn interval_measure_examples() {
        assert!(close(width_i(&Interval::new(1.1, 1.2)).unwrap(), 0.1));
        assert_eq!(average_i(&Interval::new(0.0, 1.0)), Ok(0.5));
        assert_eq!(worst_i(&Interval::new(0.0, 1.0)), Ok(1.0));
        assert_eq!(sum_i(&Interval::new(0.5, 1.0)), Ok(1.5));
        assert_eq!(best_i(&Interval::new(0.5, 1.0)), Ok(0.5));
        assert!(width_i(&Interval::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn pdf_measure_examples() {
        let pdf = HistPdf::new(Interval::new(1.0, 2.0), vec![0.6, 0.4]);
        assert!(close(exp_val_pdf(&pdf).unwrap(), 1.45));
        assert_eq!(most_likely_pdf(&pdf), Ok(1.25));
        assert_eq!(exp_val_pdf(&HistPdf::new(Interval::new(0.0, 1.0), vec![1.0])), Ok(0.5));
        let tie = HistPdf::new(Interval::new(0.0, 4.0), vec![0.5, 0.5]);
        assert_eq!(most_likely_pdf(&tie), Ok(1.0));
    }

    #[test]
    fn m2_partner_is_strictly_dominated() {
        let u = SeqU(vec![3i64, -1, 4]);
        let v = m2_partner(&u);
        assert_eq!(v, SeqU(vec![9, 5, 10]));
        assert!(strictly_dominates(&u, &v));
        let i = Interval::new(0.25, 1.0);
        assert_eq!(m2_partner(&i), Interval::new(2.0, 2.75));
        assert_eq!(m2_partner(&IdU(4i64)), IdU(5));
    }

    #[test]
    fn length_fails_m2_on_first_case() {
        let mu = Measure::new("length", length_seq);
        assert_eq!(m2_holds(&mu, &SeqU(vec![0i64])), Verdict::Fail);
    }

    #[test]
    fn exp_val_is_invariant_under_reordering() {
        let a = SimpleProb::new(vec![(2i64, 0.25), (0, 0.5), (1, 0.25)]);
        let b = SimpleProb::new(vec![(1i64, 0.25), (2, 0.25), (0, 0.5)]);
        assert_eq!(exp_val_sp(&a), exp_val_sp(&b));
    }
}

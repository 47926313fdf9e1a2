//! Uncertain values and their structural comparisons.
//!
//! Every instance exposes a *shape* (what remains after erasing values), a
//! list of *values* in structural positions, and a validity predicate. The
//! three comparisons are defined once on top of that:
//!
//! * [`same_shape`] (≈): equal shapes.
//! * [`pointwise_le`] (≤·): equal shapes and position-wise `≤`.
//! * [`strictly_dominates`] (≺u): every value of the left structure is
//!   strictly below every value of the right one.
//!
//! The `generic_*` functions re-derive shape, membership, quantifiers, ≤· and
//! ≺u purely from `fmap`, equality and `zip`. They are an independent route
//! used by tests to cross-check the direct definitions.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};

/// Probabilities and bin weights must sum to one within this tolerance.
pub const PROB_TOLERANCE: f64 = 1e-9;

/// Ordered scalar with the arithmetic the monotonicity checks need.
pub trait Scalar:
    Copy + PartialOrd + Add<Output = Self> + Sub<Output = Self> + fmt::Debug + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;
    fn to_f64(self) -> f64;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn to_f64(self) -> f64 {
        self
    }
}

pub trait Uncertain: Clone + PartialEq + fmt::Debug {
    type Value: Scalar;
    type Shape: PartialEq + fmt::Debug;

    const KIND: &'static str;

    fn shape(&self) -> Self::Shape;

    /// Values in structural positions; these are also the possible outcomes.
    fn values(&self) -> Vec<Self::Value>;

    /// Rebuilds the structure with every value replaced by `f(position, value)`.
    fn map_indexed(&self, f: impl FnMut(usize, Self::Value) -> Self::Value) -> Self;

    fn validate(&self) -> Result<()>;

    fn map_values(&self, mut f: impl FnMut(Self::Value) -> Self::Value) -> Self {
        self.map_indexed(|_, v| f(v))
    }

    fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

/// ≈
pub fn same_shape<U: Uncertain>(u1: &U, u2: &U) -> bool {
    u1.shape() == u2.shape()
}

/// ≤·; false on shape mismatch.
pub fn pointwise_le<U: Uncertain>(u1: &U, u2: &U) -> bool {
    same_shape(u1, u2) && u1.values().iter().zip(u2.values().iter()).all(|(a, b)| a <= b)
}

/// ≺u on structures assumed valid. Vacuously true if either side is empty.
pub fn strictly_dominates<U: Uncertain>(u1: &U, u2: &U) -> bool {
    let right = u2.values();
    u1.values().iter().all(|x| right.iter().all(|y| x < y))
}

/// ≺u with validity checking of both arguments.
pub fn strict_dom_u<U: Uncertain>(u1: &U, u2: &U) -> Result<bool> {
    u1.validate()?;
    u2.validate()?;
    Ok(strictly_dominates(u1, u2))
}

/// ≾u: `u1` is not strictly dominated by `u2`.
pub fn not_strictly_dominated<U: Uncertain>(u1: &U, u2: &U) -> bool {
    !strictly_dominates(u2, u1)
}

// ---------------------------------------------------------------------------
// Instances

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdU<B>(pub B);

impl<B> IdU<B> {
    pub fn unwrap(self) -> B {
        self.0
    }
}

impl<B: Scalar> Uncertain for IdU<B> {
    type Value = B;
    type Shape = ();
    const KIND: &'static str = "Id";

    fn shape(&self) {}

    fn values(&self) -> Vec<B> {
        vec![self.0]
    }

    fn map_indexed(&self, mut f: impl FnMut(usize, B) -> B) -> Self {
        IdU(f(0, self.0))
    }

    fn validate(&self) -> Result<()> {
        Ok(())
    }
}

/// Sequence of possible outcomes. Outcome sets are expected to be non-empty;
/// the empty sequence is representable so that quantifiers stay total.
#[derive(Clone, Debug, PartialEq)]
pub struct SeqU<B>(pub Vec<B>);

impl<B> SeqU<B> {
    pub fn as_slice(&self) -> &[B] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<B: Scalar> Uncertain for SeqU<B> {
    type Value = B;
    type Shape = usize;
    const KIND: &'static str = "Seq";

    fn shape(&self) -> usize {
        self.0.len()
    }

    fn values(&self) -> Vec<B> {
        self.0.clone()
    }

    fn map_indexed(&self, mut f: impl FnMut(usize, B) -> B) -> Self {
        SeqU(self.0.iter().enumerate().map(|(i, &v)| f(i, v)).collect())
    }

    fn validate(&self) -> Result<()> {
        Ok(())
    }
}

/// Finite probability distribution as value/probability pairs.
///
/// All listed values count as possible outcomes, including those with zero
/// probability. The shape is the sequence of probabilities.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleProb<B> {
    pairs: Vec<(B, f64)>,
}

impl<B> SimpleProb<B> {
    pub fn new(pairs: Vec<(B, f64)>) -> Self {
        SimpleProb { pairs }
    }

    pub fn pairs(&self) -> &[(B, f64)] {
        &self.pairs
    }

    pub fn probs(&self) -> Vec<f64> {
        self.pairs.iter().map(|&(_, p)| p).collect()
    }
}

impl<B: Scalar> SimpleProb<B> {
    pub fn try_new(pairs: Vec<(B, f64)>) -> Result<Self> {
        let sp = SimpleProb { pairs };
        sp.validate()?;
        Ok(sp)
    }
}

pub(crate) fn check_weights(kind: &'static str, ws: impl Iterator<Item = f64>) -> Result<()> {
    let mut sum = 0.0;
    let mut count = 0usize;
    for w in ws {
        if w.is_nan() || w < 0.0 {
            return Err(Error::validity(kind, format!("negative or NaN weight {w}")));
        }
        sum += w;
        count += 1;
    }
    if count == 0 {
        return Err(Error::validity(kind, "no entries"));
    }
    if (sum - 1.0).abs() > PROB_TOLERANCE {
        return Err(Error::validity(kind, format!("weights sum to {sum}")));
    }
    Ok(())
}

impl<B: Scalar> Uncertain for SimpleProb<B> {
    type Value = B;
    type Shape = Vec<f64>;
    const KIND: &'static str = "SimpleProb";

    fn shape(&self) -> Vec<f64> {
        self.probs()
    }

    fn values(&self) -> Vec<B> {
        self.pairs.iter().map(|&(v, _)| v).collect()
    }

    fn map_indexed(&self, mut f: impl FnMut(usize, B) -> B) -> Self {
        SimpleProb {
            pairs: self.pairs.iter().enumerate().map(|(i, &(v, p))| (f(i, v), p)).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        check_weights(Self::KIND, self.pairs.iter().map(|&(_, p)| p))
    }
}

/// Closed interval; every value between the endpoints is possible.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval<S> {
    pub start: S,
    pub end: S,
}

impl<S> Interval<S> {
    pub fn new(start: S, end: S) -> Self {
        Interval { start, end }
    }
}

impl<S: Scalar> Interval<S> {
    pub fn try_new(start: S, end: S) -> Result<Self> {
        let i = Interval { start, end };
        i.validate()?;
        Ok(i)
    }

    pub fn width(&self) -> S {
        self.end - self.start
    }
}

impl<S: Scalar> Uncertain for Interval<S> {
    type Value = S;
    type Shape = ();
    const KIND: &'static str = "Interval";

    fn shape(&self) {}

    fn values(&self) -> Vec<S> {
        vec![self.start, self.end]
    }

    fn map_indexed(&self, mut f: impl FnMut(usize, S) -> S) -> Self {
        Interval {
            start: f(0, self.start),
            end: f(1, self.end),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.start <= self.end {
            Ok(())
        } else {
            Err(Error::validity(
                Self::KIND,
                format!("start {:?} exceeds end {:?}", self.start, self.end),
            ))
        }
    }
}

/// Histogram approximation of a density: equal-width bins over a support.
///
/// Bin `i` of `k` spans `[start + i*w, start + (i+1)*w]` with `w = width/k`.
/// Dominance only looks at the support endpoints; the weights form the shape.
#[derive(Clone, Debug, PartialEq)]
pub struct HistPdf<S> {
    pub support: Interval<S>,
    pub weights: Vec<f64>,
}

impl<S> HistPdf<S> {
    pub fn new(support: Interval<S>, weights: Vec<f64>) -> Self {
        HistPdf { support, weights }
    }
}

impl<S: Scalar> HistPdf<S> {
    pub fn try_new(support: Interval<S>, weights: Vec<f64>) -> Result<Self> {
        let pdf = HistPdf { support, weights };
        pdf.validate()?;
        Ok(pdf)
    }

    /// Midpoints of the bins, in order.
    pub fn bin_midpoints(&self) -> Vec<f64> {
        let start = self.support.start.to_f64();
        let end = self.support.end.to_f64();
        let k = self.weights.len() as f64;
        let w = (end - start) / k;
        (0..self.weights.len()).map(|i| start + (i as f64 + 0.5) * w).collect()
    }
}

impl<S: Scalar> Uncertain for HistPdf<S> {
    type Value = S;
    type Shape = Vec<f64>;
    const KIND: &'static str = "HistPdf";

    fn shape(&self) -> Vec<f64> {
        self.weights.clone()
    }

    fn values(&self) -> Vec<S> {
        self.support.values()
    }

    fn map_indexed(&self, f: impl FnMut(usize, S) -> S) -> Self {
        HistPdf {
            support: self.support.map_indexed(f),
            weights: self.weights.clone(),
        }
    }

    fn validate(&self) -> Result<()> {
        self.support.validate()?;
        check_weights(Self::KIND, self.weights.iter().copied())
    }
}

// ---------------------------------------------------------------------------
// Generic derivations from fmap, equality and zip

/// Type-changing map over the values of a structure.
pub trait Fmap {
    type Elem;
    type Wrapped<T>;

    fn fmap<T>(&self, f: impl FnMut(&Self::Elem) -> T) -> Self::Wrapped<T>;
}

pub trait Zip: Fmap {
    /// Pairs up values position by position. Fails unless shapes agree.
    fn zip<T: Clone>(&self, other: &Self::Wrapped<T>) -> Result<Self::Wrapped<(Self::Elem, T)>>;
}

impl<A> Fmap for IdU<A> {
    type Elem = A;
    type Wrapped<T> = IdU<T>;

    fn fmap<T>(&self, mut f: impl FnMut(&A) -> T) -> IdU<T> {
        IdU(f(&self.0))
    }
}

impl<A: Clone> Zip for IdU<A> {
    fn zip<T: Clone>(&self, other: &IdU<T>) -> Result<IdU<(A, T)>> {
        Ok(IdU((self.0.clone(), other.0.clone())))
    }
}

impl<A> Fmap for SeqU<A> {
    type Elem = A;
    type Wrapped<T> = SeqU<T>;

    fn fmap<T>(&self, f: impl FnMut(&A) -> T) -> SeqU<T> {
        SeqU(self.0.iter().map(f).collect())
    }
}

impl<A: Clone> Zip for SeqU<A> {
    fn zip<T: Clone>(&self, other: &SeqU<T>) -> Result<SeqU<(A, T)>> {
        if self.0.len() != other.0.len() {
            return Err(Error::Shape);
        }
        Ok(SeqU(self.0.iter().cloned().zip(other.0.iter().cloned()).collect()))
    }
}

impl<A> Fmap for SimpleProb<A> {
    type Elem = A;
    type Wrapped<T> = SimpleProb<T>;

    fn fmap<T>(&self, mut f: impl FnMut(&A) -> T) -> SimpleProb<T> {
        SimpleProb {
            pairs: self.pairs.iter().map(|(v, p)| (f(v), *p)).collect(),
        }
    }
}

impl<A: Clone> Zip for SimpleProb<A> {
    fn zip<T: Clone>(&self, other: &SimpleProb<T>) -> Result<SimpleProb<(A, T)>> {
        if self.probs() != other.probs() {
            return Err(Error::Shape);
        }
        Ok(SimpleProb {
            pairs: self
                .pairs
                .iter()
                .zip(other.pairs.iter())
                .map(|((a, p), (b, _))| ((a.clone(), b.clone()), *p))
                .collect(),
        })
    }
}

impl<A> Fmap for Interval<A> {
    type Elem = A;
    type Wrapped<T> = Interval<T>;

    fn fmap<T>(&self, mut f: impl FnMut(&A) -> T) -> Interval<T> {
        Interval {
            start: f(&self.start),
            end: f(&self.end),
        }
    }
}

impl<A: Clone> Zip for Interval<A> {
    fn zip<T: Clone>(&self, other: &Interval<T>) -> Result<Interval<(A, T)>> {
        Ok(Interval {
            start: (self.start.clone(), other.start.clone()),
            end: (self.end.clone(), other.end.clone()),
        })
    }
}

impl<A> Fmap for HistPdf<A> {
    type Elem = A;
    type Wrapped<T> = HistPdf<T>;

    fn fmap<T>(&self, f: impl FnMut(&A) -> T) -> HistPdf<T> {
        HistPdf {
            support: self.support.fmap(f),
            weights: self.weights.clone(),
        }
    }
}

impl<A: Clone> Zip for HistPdf<A> {
    fn zip<T: Clone>(&self, other: &HistPdf<T>) -> Result<HistPdf<(A, T)>> {
        if self.weights != other.weights {
            return Err(Error::Shape);
        }
        Ok(HistPdf {
            support: self.support.zip(&other.support)?,
            weights: self.weights.clone(),
        })
    }
}

/// `fmap (const ())`
pub fn generic_shape<F: Fmap>(u: &F) -> F::Wrapped<()> {
    u.fmap(|_| ())
}

pub fn generic_same_shape<F: Fmap>(u1: &F, u2: &F) -> bool
where
    F::Wrapped<()>: PartialEq,
{
    generic_shape(u1) == generic_shape(u2)
}

/// Membership: `fmap (a ==) u` differs from `fmap (const false) u`.
pub fn generic_elem<F>(a: &F::Elem, u: &F) -> bool
where
    F: Fmap,
    F::Elem: PartialEq,
    F::Wrapped<bool>: PartialEq,
{
    u.fmap(|x| x == a) != u.fmap(|_| false)
}

/// Universal quantifier over a structure of booleans.
pub fn generic_all<F>(u: &F) -> bool
where
    F: Fmap<Elem = bool>,
    F::Wrapped<bool>: PartialEq,
{
    u.fmap(|&b| b) == u.fmap(|_| true)
}

/// Existential quantifier over a structure of booleans.
pub fn generic_any<F>(u: &F) -> bool
where
    F: Fmap<Elem = bool>,
    F::Wrapped<bool>: PartialEq,
{
    u.fmap(|&b| b) != u.fmap(|_| false)
}

/// ≤· through `zip`; shape mismatch yields false.
pub fn generic_pointwise_le<F>(u1: &F, u2: &F) -> bool
where
    F: Zip + Fmap<Wrapped<<F as Fmap>::Elem> = F>,
    F::Elem: PartialOrd + Clone,
    F::Wrapped<(F::Elem, F::Elem)>: Fmap<Elem = (F::Elem, F::Elem), Wrapped<bool> = F::Wrapped<bool>>,
    F::Wrapped<bool>: Fmap<Elem = bool, Wrapped<bool> = F::Wrapped<bool>> + PartialEq,
{
    match u1.zip(u2) {
        Ok(pairs) => generic_all(&pairs.fmap(|(a, b)| a <= b)),
        Err(_) => false,
    }
}

/// ≺u through nested quantifiers: `all (λx → all (x <) u2) u1`.
pub fn generic_strictly_dominates<F>(u1: &F, u2: &F) -> bool
where
    F: Fmap,
    F::Elem: PartialOrd,
    F::Wrapped<bool>: Fmap<Elem = bool, Wrapped<bool> = F::Wrapped<bool>> + PartialEq,
{
    generic_all(&u1.fmap(|x| generic_all(&u2.fmap(|y| x < y))))
}

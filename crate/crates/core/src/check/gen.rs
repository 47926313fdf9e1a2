//! Generators for the property suites.
//!
//! Structured generators only produce values that pass their validity
//! predicates: intervals have ordered endpoints, probabilities and bin
//! weights are drawn as positive raw weights and divided by their sum.

use std::fmt;
use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::Rng as _;

use super::Rng;
use crate::finset::FinSet;
use crate::pareto::Point;
use crate::uncertainty::{HistPdf, Interval, SeqU, SimpleProb};

pub struct Gen<T> {
    f: Arc<dyn Fn(&mut Rng) -> T + Send + Sync>,
}

impl<T> Clone for Gen<T> {
    fn clone(&self) -> Self {
        Gen { f: self.f.clone() }
    }
}

impl<T> Gen<T> {
    pub fn sample(&self, rng: &mut Rng) -> T {
        (self.f)(rng)
    }
}

impl<T: 'static> Gen<T> {
    pub fn new(f: impl Fn(&mut Rng) -> T + Send + Sync + 'static) -> Self {
        Gen { f: Arc::new(f) }
    }

    pub fn map<U: 'static>(self, f: impl Fn(T) -> U + Send + Sync + 'static) -> Gen<U> {
        Gen::new(move |rng| f(self.sample(rng)))
    }

    pub fn zip<U: 'static>(self, other: Gen<U>) -> Gen<(T, U)> {
        Gen::new(move |rng| (self.sample(rng), other.sample(rng)))
    }

    pub fn vec(self, len: RangeInclusive<usize>) -> Gen<Vec<T>> {
        Gen::new(move |rng| {
            let n = rng.random_range(len.clone());
            (0..n).map(|_| self.sample(rng)).collect()
        })
    }
}

pub fn constant<T: Clone + Send + Sync + 'static>(x: T) -> Gen<T> {
    Gen::new(move |_| x.clone())
}

pub fn int(range: RangeInclusive<i64>) -> Gen<i64> {
    Gen::new(move |rng| rng.random_range(range.clone()))
}

pub fn boolean() -> Gen<bool> {
    Gen::new(|rng| rng.random())
}

/// Uniform real in `[lo, hi)`.
pub fn real(lo: f64, hi: f64) -> Gen<f64> {
    Gen::new(move |rng| lo + (hi - lo) * rng.random::<f64>())
}

/// Multiples of `2^-bits` in `[lo, hi]`; sums and midpoints of such values
/// stay exact, so measure ties compare exactly.
pub fn dyadic(lo: i64, hi: i64, bits: u32) -> Gen<f64> {
    let scale = (1i64 << bits) as f64;
    let range = (lo << bits)..=(hi << bits);
    Gen::new(move |rng| rng.random_range(range.clone()) as f64 / scale)
}

pub fn pair<A: 'static, B: 'static>(a: Gen<A>, b: Gen<B>) -> Gen<(A, B)> {
    a.zip(b)
}

pub fn triple<A: 'static, B: 'static, C: 'static>(a: Gen<A>, b: Gen<B>, c: Gen<C>) -> Gen<(A, B, C)> {
    Gen::new(move |rng| (a.sample(rng), b.sample(rng), c.sample(rng)))
}

pub fn vec_n<const N: usize, S: Copy + 'static>(coord: Gen<S>) -> Gen<Point<N, S>> {
    Gen::new(move |rng| Point(std::array::from_fn(|_| coord.sample(rng))))
}

pub fn fin_set<T: 'static>(elem: Gen<T>, size: RangeInclusive<usize>) -> Gen<FinSet<T>> {
    elem.vec(size).map(FinSet::from_vec)
}

pub fn nonempty_fin_set<T: 'static>(elem: Gen<T>, max: usize) -> Gen<FinSet<T>> {
    fin_set(elem, 1..=max.max(1))
}

pub fn seq_u<T: 'static>(elem: Gen<T>, len: RangeInclusive<usize>) -> Gen<SeqU<T>> {
    elem.vec(len).map(SeqU)
}

fn normalized_weights(rng: &mut Rng, k: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..k).map(|_| 0.01 + rng.random::<f64>()).collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|w| w / total).collect()
}

pub fn simple_prob<T: 'static>(value: Gen<T>, size: RangeInclusive<usize>) -> Gen<SimpleProb<T>> {
    Gen::new(move |rng| {
        let k = rng.random_range(size.clone()).max(1);
        let ws = normalized_weights(rng, k);
        SimpleProb::new(ws.into_iter().map(|w| (value.sample(rng), w)).collect())
    })
}

/// Two draws from `endpoint`, sorted.
pub fn interval(endpoint: Gen<f64>) -> Gen<Interval<f64>> {
    Gen::new(move |rng| {
        let a = endpoint.sample(rng);
        let b = endpoint.sample(rng);
        Interval::new(a.min(b), a.max(b))
    })
}

pub fn hist_pdf(endpoint: Gen<f64>, bins: RangeInclusive<usize>) -> Gen<HistPdf<f64>> {
    let support = interval(endpoint);
    Gen::new(move |rng| {
        let s = support.sample(rng);
        let k = rng.random_range(bins.clone()).max(1);
        HistPdf::new(s, normalized_weights(rng, k))
    })
}

/// Total integer function backed by a value table, indexed cyclically.
#[derive(Clone, PartialEq, Eq)]
pub struct TableFn {
    pub lo: i64,
    pub table: Vec<i64>,
}

impl TableFn {
    pub fn apply(&self, x: i64) -> i64 {
        let n = self.table.len() as i64;
        self.table[(x - self.lo).rem_euclid(n) as usize]
    }
}

impl fmt::Debug for TableFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "table@{}{:?}", self.lo, self.table)
    }
}

pub fn table_fun(domain: RangeInclusive<i64>, codomain: Gen<i64>) -> Gen<TableFn> {
    let lo = *domain.start();
    let n = (domain.end() - domain.start() + 1).max(1) as usize;
    Gen::new(move |rng| TableFn {
        lo,
        table: (0..n).map(|_| codomain.sample(rng)).collect(),
    })
}

/// Named integer functions used to instantiate the single-objective suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntFn {
    Identity,
    Negate,
    Square,
    Mod3,
    Const(i64),
    Table(TableFn),
}

impl IntFn {
    pub fn apply(&self, x: i64) -> i64 {
        match self {
            IntFn::Identity => x,
            IntFn::Negate => -x,
            IntFn::Square => x * x,
            IntFn::Mod3 => x.rem_euclid(3),
            IntFn::Const(c) => *c,
            IntFn::Table(t) => t.apply(x),
        }
    }

    pub fn name(&self) -> String {
        match self {
            IntFn::Identity => "identity".into(),
            IntFn::Negate => "negate".into(),
            IntFn::Square => "square".into(),
            IntFn::Mod3 => "mod3".into(),
            IntFn::Const(c) => format!("const {c}"),
            IntFn::Table(_) => "table".into(),
        }
    }

    /// The fixed pool of named functions.
    pub fn pool() -> Vec<IntFn> {
        vec![
            IntFn::Identity,
            IntFn::Negate,
            IntFn::Square,
            IntFn::Mod3,
            IntFn::Const(0),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uncertainty::Uncertain;

    #[test]
    fn structured_generators_are_valid() {
        let mut rng = Rng::seed_from(5);
        let sp = simple_prob(int(-5..=5), 1..=8);
        let iv = interval(dyadic(-10, 10, 2));
        let pdf = hist_pdf(dyadic(-10, 10, 2), 1..=6);
        for _ in 0..10_000 {
            assert!(sp.sample(&mut rng).is_valid());
            let i = iv.sample(&mut rng);
            assert!(i.start <= i.end);
            assert!(pdf.sample(&mut rng).is_valid());
        }
    }

    #[test]
    fn same_seed_same_values() {
        let g = fin_set(int(-100..=100), 0..=10);
        let a: Vec<_> = {
            let mut r = Rng::seed_from(11);
            (0..100).map(|_| g.sample(&mut r)).collect()
        };
        let b: Vec<_> = {
            let mut r = Rng::seed_from(11);
            (0..100).map(|_| g.sample(&mut r)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn dyadic_values_are_on_the_grid() {
        let mut r = Rng::seed_from(2);
        let g = dyadic(-3, 3, 2);
        for _ in 0..1000 {
            let x = g.sample(&mut r);
            assert!((-3.0..=3.0).contains(&x));
            assert_eq!((x * 4.0).fract(), 0.0);
        }
    }

    #[test]
    fn table_functions_are_total() {
        let mut r = Rng::seed_from(3);
        let t = table_fun(-3..=3, int(0..=9)).sample(&mut r);
        assert_eq!(t.table.len(), 7);
        assert_eq!(t.apply(-3), t.table[0]);
        assert_eq!(t.apply(4), t.table[0]);
        assert_eq!(t.apply(-4), t.table[6]);
    }

    #[test]
    fn nonempty_sets_are_nonempty() {
        let mut r = Rng::seed_from(4);
        let g = nonempty_fin_set(int(0..=3), 5);
        assert!((0..1000).all(|_| !g.sample(&mut r).is_empty()));
    }
}

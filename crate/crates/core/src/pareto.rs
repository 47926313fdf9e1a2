//! Strict dominance on fixed-dimension vectors and Pareto fronts.
//!
//! `x ≺ y` holds when `x` is componentwise `≤ y` and strictly smaller in at
//! least one component. A Pareto front of a finite set is its subset of
//! mutually indifferent elements that dominates everything else; it is built
//! here by folding [`bump`] over the input, and two fronts combine with
//! [`merge_fronts`] so that chunks can be reduced in parallel.

use std::fmt;

use crate::check::{implies, Verdict};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::finset::FinSet;
use crate::orders::{argmin, is_indiff, minimum};

/// Point in `S^N`. Equality is exact and componentwise.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point<const N: usize, S>(pub [S; N]);

impl<const N: usize, S> Point<N, S> {
    pub fn coords(&self) -> &[S; N] {
        &self.0
    }
}

impl<const N: usize, S: PartialOrd> Point<N, S> {
    /// `self ≺ other`
    pub fn dominates(&self, other: &Self) -> bool {
        dominates_slice(&self.0, &other.0).expect("equal static dimension")
    }
}

impl<S> Point<1, S> {
    pub fn c1(a: S) -> Self {
        Point([a])
    }
}

impl<S> Point<2, S> {
    pub fn c2(a: S, b: S) -> Self {
        Point([a, b])
    }
}

impl<S> Point<3, S> {
    pub fn c3(a: S, b: S, c: S) -> Self {
        Point([a, b, c])
    }
}

impl<const N: usize, S: fmt::Debug> fmt::Debug for Point<N, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut t = f.debug_tuple("");
        for c in &self.0 {
            t.field(c);
        }
        t.finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifier {
    All,
    Any,
}

/// Applies `quantifier` to the componentwise results of `op`.
pub fn comps<S>(quantifier: Quantifier, op: impl Fn(&S, &S) -> bool, xs: &[S], ys: &[S]) -> Result<bool> {
    if xs.len() != ys.len() {
        return Err(Error::Dimension {
            left: xs.len(),
            right: ys.len(),
        });
    }
    let mut zipped = xs.iter().zip(ys).map(|(x, y)| op(x, y));
    Ok(match quantifier {
        Quantifier::All => zipped.all(|b| b),
        Quantifier::Any => zipped.any(|b| b),
    })
}

/// `x ≺ y` on runtime-length vectors.
pub fn dominates_slice<S: PartialOrd>(x: &[S], y: &[S]) -> Result<bool> {
    Ok(comps(Quantifier::All, |a, b| a <= b, x, y)? && comps(Quantifier::Any, |a, b| a < b, x, y)?)
}

pub fn dominates<const N: usize, S: PartialOrd>(x: &Point<N, S>, y: &Point<N, S>) -> bool {
    x.dominates(y)
}

/// `xs ⋅≺ y`: some member of `xs` dominates `y`.
pub fn set_dom_elem<const N: usize, S: PartialOrd>(xs: &FinSet<Point<N, S>>, y: &Point<N, S>) -> bool {
    xs.iter().any(|x| x.dominates(y))
}

/// `xs ⋅⋅≺ ys`: every member of `ys` is dominated by some member of `xs`.
pub fn set_dom_set<const N: usize, S: PartialOrd>(xs: &FinSet<Point<N, S>>, ys: &FinSet<Point<N, S>>) -> bool {
    ys.iter().all(|y| set_dom_elem(xs, y))
}

pub fn is_indiff_front<const N: usize, S: PartialOrd>(xs: &FinSet<Point<N, S>>) -> bool {
    is_indiff(|a: &Point<N, S>, b| a.dominates(b), xs.as_slice())
}

pub fn is_pareto_opt_of<const N: usize, S>(pxs: &FinSet<Point<N, S>>, xs: &FinSet<Point<N, S>>) -> bool
where
    S: PartialOrd + Copy,
{
    pxs.is_subset(xs) && is_indiff_front(pxs) && set_dom_set(pxs, &xs.difference(pxs))
}

/// Inserts `x` into the mutually indifferent `front`, in place.
///
/// Scanning in order: if a member equals or dominates `x` nothing changes;
/// if `x` dominates a member, `x` takes its place and every later member it
/// dominates is dropped; if `x` is indifferent to every member it is appended.
pub fn bump_into<const N: usize, S: PartialOrd + Copy>(front: &mut Vec<Point<N, S>>, x: Point<N, S>) {
    for i in 0..front.len() {
        let p = front[i];
        if p == x || p.dominates(&x) {
            return;
        }
        if x.dominates(&p) {
            front[i] = x;
            let mut j = i + 1;
            while j < front.len() {
                if x.dominates(&front[j]) {
                    front.remove(j);
                } else {
                    j += 1;
                }
            }
            return;
        }
    }
    front.push(x);
}

pub fn bump<const N: usize, S: PartialOrd + Copy>(x: Point<N, S>, ps: &FinSet<Point<N, S>>) -> FinSet<Point<N, S>> {
    let mut front = ps.as_slice().to_vec();
    bump_into(&mut front, x);
    FinSet::from_vec(front)
}

/// Pareto front of `xs` by folding [`bump`] from the right.
pub fn pareto_opt<const N: usize, S: PartialOrd + Copy>(xs: &FinSet<Point<N, S>>) -> FinSet<Point<N, S>> {
    FinSet::from_vec(front_of_slice(xs.as_slice()))
}

fn front_of_slice<const N: usize, S: PartialOrd + Copy>(xs: &[Point<N, S>]) -> Vec<Point<N, S>> {
    let mut front = Vec::new();
    for &x in xs.iter().rev() {
        bump_into(&mut front, x);
    }
    front
}

/// Front of the union of two fronts: bumps the smaller into the larger.
pub fn merge_fronts<const N: usize, S: PartialOrd + Copy>(
    a: &FinSet<Point<N, S>>,
    b: &FinSet<Point<N, S>>,
) -> FinSet<Point<N, S>> {
    FinSet::from_vec(merge_vecs(a.as_slice().to_vec(), b.as_slice().to_vec()))
}

fn merge_vecs<const N: usize, S: PartialOrd + Copy>(a: Vec<Point<N, S>>, b: Vec<Point<N, S>>) -> Vec<Point<N, S>> {
    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    for x in small {
        bump_into(&mut big, x);
    }
    big
}

/// Chunk size for [`pareto_opt_with`].
pub const FRONT_CHUNK: usize = 4096;

/// Divide-and-conquer front: chunk fronts reduced with [`merge_fronts`].
/// Set-equal to [`pareto_opt`] for either strategy.
pub fn pareto_opt_with<const N: usize, S>(exec: Exec, xs: &[Point<N, S>]) -> FinSet<Point<N, S>>
where
    S: PartialOrd + Copy + Send + Sync,
{
    let front = exec
        .map_reduce_chunks(xs, FRONT_CHUNK, front_of_slice, merge_vecs)
        .unwrap_or_default();
    FinSet::from_vec(front)
}

pub fn pareto_min<A, const N: usize, S, F>(fs: F, xs: &FinSet<A>) -> FinSet<Point<N, S>>
where
    S: PartialOrd + Copy,
    F: Fn(&A) -> Point<N, S>,
{
    pareto_opt(&xs.map(fs))
}

pub fn argpareto_min<A, const N: usize, S, F>(fs: F, xs: &FinSet<A>) -> FinSet<A>
where
    A: Clone,
    S: PartialOrd + Copy,
    F: Fn(&A) -> Point<N, S>,
{
    let ps = pareto_min(&fs, xs);
    xs.filter(|a| ps.contains(&fs(a)))
}

/// Marks which images lie on the front of all images.
pub fn pareto_mask<const N: usize, S>(exec: Exec, images: &[Point<N, S>]) -> Vec<bool>
where
    S: PartialOrd + Copy + Send + Sync,
{
    let front = pareto_opt_with(exec, images);
    exec.map_slice(images, |y| front.contains(y))
}

// ---------------------------------------------------------------------------
// Properties

/// `bump x xs ⊆ x : xs`
pub fn prop_bump_subset<const N: usize, S: PartialOrd + Copy>(xs: &FinSet<Point<N, S>>, x: Point<N, S>) -> bool {
    let mut with_x = xs.clone();
    with_x.push(x);
    bump(x, xs).is_subset(&with_x)
}

/// `isIndiff xs ⇒ isIndiff (bump x xs)`
pub fn prop_bump_indiff<const N: usize, S: PartialOrd + Copy>(xs: &FinSet<Point<N, S>>, x: Point<N, S>) -> Verdict {
    implies(is_indiff_front(xs), || is_indiff_front(&bump(x, xs)))
}

/// `xs ⋅⋅≺ ys ⇒ bump x xs ⋅⋅≺ ys`
pub fn prop_bump_dominance<const N: usize, S: PartialOrd + Copy>(
    xs: &FinSet<Point<N, S>>,
    x: Point<N, S>,
    ys: &FinSet<Point<N, S>>,
) -> Verdict {
    implies(set_dom_set(xs, ys), || set_dom_set(&bump(x, xs), ys))
}

/// `paretoMin fs as` is a Pareto optimal subset of `map fs as`.
pub fn prop_pareto_min_opt<A, const N: usize, S, F>(fs: F, xs: &FinSet<A>) -> bool
where
    S: PartialOrd + Copy,
    F: Fn(&A) -> Point<N, S>,
{
    is_pareto_opt_of(&pareto_min(&fs, xs), &xs.map(&fs))
}

/// `a ∈ argparetoMin fs as ⇒ fs a ∈ paretoMin fs as`
pub fn prop_argpareto_sound<A, const N: usize, S, F>(fs: F, xs: &FinSet<A>) -> bool
where
    A: Clone + PartialEq,
    S: PartialOrd + Copy,
    F: Fn(&A) -> Point<N, S>,
{
    let ps = pareto_min(&fs, xs);
    let args = argpareto_min(&fs, xs);
    xs.iter().all(|a| !args.contains(a) || ps.contains(&fs(a)))
}

/// `fs a ∈ paretoMin fs as ⇒ a ∈ argparetoMin fs as`
pub fn prop_argpareto_complete<A, const N: usize, S, F>(fs: F, xs: &FinSet<A>) -> bool
where
    A: Clone + PartialEq,
    S: PartialOrd + Copy,
    F: Fn(&A) -> Point<N, S>,
{
    let ps = pareto_min(&fs, xs);
    let args = argpareto_min(&fs, xs);
    xs.iter().all(|a| !ps.contains(&fs(a)) || args.contains(a))
}

/// `paretoMin (C1 ∘ f) as == {C1 (min f as)}` for non-empty `as`.
pub fn prop_single_objective_front<A, S, F>(f: F, xs: &FinSet<A>) -> Verdict
where
    S: PartialOrd + Copy,
    F: Fn(&A) -> S,
{
    implies(!xs.is_empty(), || {
        let m = minimum(&f, xs).expect("non-empty");
        pareto_min(|a| Point::c1(f(a)), xs).set_eq(&FinSet::singleton(Point::c1(m)))
    })
}

/// `argparetoMin (C1 ∘ f) as == argmin f as` for non-empty `as`.
pub fn prop_single_objective_args<A, S, F>(f: F, xs: &FinSet<A>) -> Verdict
where
    A: Clone + PartialEq,
    S: PartialOrd + Copy,
    F: Fn(&A) -> S,
{
    implies(!xs.is_empty(), || {
        let am = argmin(&f, xs).expect("non-empty");
        argpareto_min(|a| Point::c1(f(a)), xs).set_eq(&am)
    })
}

/// For every component `f` of `fs`: `min f as ∈ map f (argparetoMin fs as)`.
pub fn prop_component_min_attained<A, const N: usize, S>(components: &[fn(&A) -> S; N], xs: &FinSet<A>) -> Verdict
where
    A: Clone,
    S: PartialOrd + Copy,
{
    implies(!xs.is_empty(), || {
        let fs = |a: &A| Point(components.map(|f| f(a)));
        let front_args = argpareto_min(fs, xs);
        components.iter().all(|f| {
            let m = minimum(f, xs).expect("non-empty");
            front_args.map(f).contains(&m)
        })
    })
}

/// For every component `f` of `fs`:
/// `argparetoMin (C1 ∘ f) as ⊆ argparetoMin fs as`. Does not hold in general.
pub fn prop_component_args_contained<A, const N: usize, S>(components: &[fn(&A) -> S; N], xs: &FinSet<A>) -> Verdict
where
    A: Clone + PartialEq,
    S: PartialOrd + Copy,
{
    implies(!xs.is_empty(), || {
        let fs = |a: &A| Point(components.map(|f| f(a)));
        let front_args = argpareto_min(fs, xs);
        components
            .iter()
            .all(|f| argpareto_min(|a| Point::c1(f(a)), xs).is_subset(&front_args))
    })
}

/// Objective on integer pairs.
pub type PairFn = fn(&(i64, i64)) -> i64;

/// `(const 0, fst, snd)` on integer pairs.
pub fn testfun3() -> [PairFn; 3] {
    [|_| 0, |p| p.0, |p| p.1]
}

/// `x + y * x`
pub fn testfun(p: &(i64, i64)) -> i64 {
    p.0 + p.1 * p.0
}

/// The seven labelled points of the standard dominance illustration; the
/// `p` points form the front.
pub fn example_points() -> Vec<(&'static str, Point<2, f64>)> {
    vec![
        ("p1", Point::c2(-1.0, 2.5)),
        ("p2", Point::c2(1.0, 0.75)),
        ("p3", Point::c2(1.5, -0.5)),
        ("p4", Point::c2(3.5, -1.0)),
        ("q1", Point::c2(1.0, 1.5)),
        ("q2", Point::c2(2.0, 0.5)),
        ("q3", Point::c2(2.5, 2.0)),
    ]
}

/// A statement about two named points: `left ≺ right`, or indifference.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub left: &'static str,
    pub right: &'static str,
    pub dominance: bool,
}

impl Claim {
    pub fn holds<const N: usize, S: PartialOrd>(&self, points: &[(&str, Point<N, S>)]) -> Option<bool> {
        let get = |n: &str| points.iter().find(|(m, _)| *m == n).map(|(_, p)| p);
        let (a, b) = (get(self.left)?, get(self.right)?);
        Some(if self.dominance {
            a.dominates(b)
        } else {
            !a.dominates(b) && !b.dominates(a)
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.dominance { "≺" } else { "~" };
        write!(f, "{} {op} {}", self.left, self.right)
    }
}

/// Dominance and indifference statements made about [`example_points`].
pub fn example_claims() -> Vec<Claim> {
    let dom = |left, right| Claim {
        left,
        right,
        dominance: true,
    };
    let ind = |left, right| Claim {
        left,
        right,
        dominance: false,
    };
    vec![
        dom("p2", "q1"),
        dom("p2", "q3"),
        dom("p3", "q2"),
        dom("p3", "q3"),
        ind("q1", "p1"),
        ind("p1", "q3"),
        dom("q1", "q3"),
    ]
}

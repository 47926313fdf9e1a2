//! Minimization of functions that return uncertain values.
//!
//! `min_u μ f as` is the set of images `f a` whose measure is minimal;
//! `argmin_u` collects the inputs whose image lands in that set. Whether the
//! result is sound (never strictly dominated by another available image)
//! depends on the measure, which is what the `spec_*` predicates probe.

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::measures::Measure;
use crate::orders::{argmin, for_all, minimum};
use crate::uncertainty::{not_strictly_dominated, HistPdf, IdU, Interval, Scalar, SeqU, SimpleProb, Uncertain};

pub fn min_u<A, U, F>(mu: &Measure<U>, f: F, xs: &FinSet<A>) -> Result<FinSet<U>>
where
    U: Uncertain,
    F: Fn(&A) -> U,
{
    if xs.is_empty() {
        return Err(Error::EmptySet);
    }
    let measured = xs
        .iter()
        .map(|a| {
            let u = f(a);
            mu.apply(&u).map(|m| (u, m))
        })
        .collect::<Result<FinSet<(U, f64)>>>()?;
    Ok(argmin(|(_, m)| *m, &measured)?.map(|(u, _)| u.clone()))
}

pub fn argmin_u<A, U, F>(mu: &Measure<U>, f: F, xs: &FinSet<A>) -> Result<FinSet<A>>
where
    A: Clone,
    U: Uncertain,
    F: Fn(&A) -> U,
{
    let ms = min_u(mu, &f, xs)?;
    Ok(xs.filter(|a| ms.contains(&f(a))))
}

/// `as ≠ {} ⇒ {} ≠ min_u μ f as ⊆ map f as`
pub fn min_u_within_images<A, U: Uncertain>(mu: &Measure<U>, f: impl Fn(&A) -> U, xs: &FinSet<A>) -> bool {
    if xs.is_empty() {
        return true;
    }
    match min_u(mu, &f, xs) {
        Ok(r) => !r.is_empty() && r.is_subset(&xs.map(&f)),
        Err(_) => false,
    }
}

/// `∀ a ∈ as. ∀ ub ∈ min_u μ f as. ub ≾u f a`
pub fn min_u_undominated<A, U: Uncertain>(mu: &Measure<U>, f: impl Fn(&A) -> U, xs: &FinSet<A>) -> bool {
    if xs.is_empty() {
        return true;
    }
    let Ok(ubs) = min_u(mu, &f, xs) else {
        return false;
    };
    for_all(xs, |a| {
        let fa = f(a);
        for_all(&ubs, |ub| not_strictly_dominated(ub, &fa))
    })
}

/// `∀ a ∈ as. a ∈ argmin_u μ f as ⇒ f a ∈ min_u μ f as`
pub fn argmin_u_sound<A: Clone + PartialEq, U: Uncertain>(
    mu: &Measure<U>,
    f: impl Fn(&A) -> U,
    xs: &FinSet<A>,
) -> bool {
    if xs.is_empty() {
        return true;
    }
    let (Ok(ms), Ok(args)) = (min_u(mu, &f, xs), argmin_u(mu, &f, xs)) else {
        return false;
    };
    for_all(xs, |a| !args.contains(a) || ms.contains(&f(a)))
}

/// `∀ a ∈ as. f a ∈ min_u μ f as ⇒ a ∈ argmin_u μ f as`
pub fn argmin_u_complete<A: Clone + PartialEq, U: Uncertain>(
    mu: &Measure<U>,
    f: impl Fn(&A) -> U,
    xs: &FinSet<A>,
) -> bool {
    if xs.is_empty() {
        return true;
    }
    let (Ok(ms), Ok(args)) = (min_u(mu, &f, xs), argmin_u(mu, &f, xs)) else {
        return false;
    };
    for_all(xs, |a| !ms.contains(&f(a)) || args.contains(a))
}

/// `as ≠ {} ⇒ isSingletonSet (min_u μ f as)`
pub fn min_u_singleton<A, U: Uncertain>(mu: &Measure<U>, f: impl Fn(&A) -> U, xs: &FinSet<A>) -> bool {
    xs.is_empty() || min_u(mu, f, xs).is_ok_and(|r| r.is_singleton())
}

/// `min_u μ f as == {Id (min (unwrap ∘ f) as)}` as sets.
pub fn min_u_is_min<A, B: Scalar>(mu: &Measure<IdU<B>>, f: impl Fn(&A) -> IdU<B>, xs: &FinSet<A>) -> bool {
    if xs.is_empty() {
        return true;
    }
    let (Ok(r), Ok(m)) = (min_u(mu, &f, xs), minimum(|a| f(a).0, xs)) else {
        return false;
    };
    r.set_eq(&FinSet::singleton(IdU(m)))
}

/// `argmin_u μ f as == argmin (unwrap ∘ f) as` as sets.
pub fn argmin_u_is_argmin<A: Clone + PartialEq, B: Scalar>(
    mu: &Measure<IdU<B>>,
    f: impl Fn(&A) -> IdU<B>,
    xs: &FinSet<A>,
) -> bool {
    if xs.is_empty() {
        return true;
    }
    let (Ok(r), Ok(am)) = (argmin_u(mu, &f, xs), argmin(|a| f(a).0, xs)) else {
        return false;
    };
    r.set_eq(&am)
}

// ---------------------------------------------------------------------------
// Counterexample objectives

pub fn f_seq(n: &i64) -> SeqU<i64> {
    match n {
        0 => SeqU(vec![3, 2, 2]),
        1 => SeqU(vec![1, 1, 0]),
        _ => SeqU(vec![3, 1, 0]),
    }
}

pub fn f_sp(b: &bool) -> SimpleProb<i64> {
    if *b {
        SimpleProb::new(vec![(3, 0.4), (4, 0.3), (4, 0.3)])
    } else {
        SimpleProb::new(vec![(2, 0.4), (0, 0.3), (1, 0.3)])
    }
}

pub fn f_i(b: &bool) -> Interval<f64> {
    if *b {
        Interval::new(0.0, 1.0)
    } else {
        Interval::new(1.1, 1.2)
    }
}

pub fn f_pdf(b: &bool) -> HistPdf<f64> {
    if *b {
        HistPdf::new(Interval::new(0.0, 0.1), vec![0.6, 0.4])
    } else {
        HistPdf::new(Interval::new(1.0, 2.0), vec![0.6, 0.4])
    }
}

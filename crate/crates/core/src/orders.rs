//! Single-objective `minimum`/`argmin` over finite sets, their specification
//! clauses, and classifiers for properties of binary relations.

use std::fmt;

use crate::error::{Error, Result};
use crate::finset::FinSet;

/// Smallest value of `f` on `xs`.
pub fn minimum<A, B, F>(f: F, xs: &FinSet<A>) -> Result<B>
where
    B: PartialOrd,
    F: Fn(&A) -> B,
{
    let mut it = xs.iter().map(&f);
    let first = it.next().ok_or(Error::EmptySet)?;
    Ok(it.fold(first, |m, y| if y < m { y } else { m }))
}

/// All elements of `xs` at which `f` attains [`minimum`].
pub fn argmin<A, B, F>(f: F, xs: &FinSet<A>) -> Result<FinSet<A>>
where
    A: Clone,
    B: PartialOrd,
    F: Fn(&A) -> B,
{
    let m = minimum(&f, xs)?;
    Ok(xs.filter(|a| f(a) == m))
}

pub fn for_all<A>(xs: &FinSet<A>, p: impl FnMut(&A) -> bool) -> bool {
    xs.iter().all(p)
}

/// `∀ a ∈ xs. minimum f xs ≤ f a`; vacuously true on the empty set.
pub fn spec_min<A, B: PartialOrd>(f: impl Fn(&A) -> B, xs: &FinSet<A>) -> bool {
    match minimum(&f, xs) {
        Ok(m) => for_all(xs, |a| m <= f(a)),
        Err(_) => true,
    }
}

/// `∀ a ∈ xs. a ∈ argmin f xs ⇒ f a == minimum f xs`
pub fn spec_argmin_sound<A, B>(f: impl Fn(&A) -> B, xs: &FinSet<A>) -> bool
where
    A: Clone + PartialEq,
    B: PartialOrd,
{
    let (Ok(m), Ok(am)) = (minimum(&f, xs), argmin(&f, xs)) else {
        return true;
    };
    for_all(xs, |a| !am.contains(a) || f(a) == m)
}

/// `∀ a ∈ xs. f a == minimum f xs ⇒ a ∈ argmin f xs`
pub fn spec_argmin_complete<A, B>(f: impl Fn(&A) -> B, xs: &FinSet<A>) -> bool
where
    A: Clone + PartialEq,
    B: PartialOrd,
{
    let (Ok(m), Ok(am)) = (minimum(&f, xs), argmin(&f, xs)) else {
        return true;
    };
    for_all(xs, |a| f(a) != m || am.contains(a))
}

pub fn is_anti_reflexive<T>(rel: impl Fn(&T, &T) -> bool, x: &T) -> bool {
    !rel(x, x)
}

pub fn is_transitive<T>(rel: impl Fn(&T, &T) -> bool, a: &T, b: &T, c: &T) -> bool {
    !(rel(a, b) && rel(b, c)) || rel(a, c)
}

/// Trichotomy: equal, or related one way or the other.
pub fn is_total<T: PartialEq>(rel: impl Fn(&T, &T) -> bool, a: &T, b: &T) -> bool {
    a == b || rel(a, b) || rel(b, a)
}

/// Neither argument is related to the other.
pub fn indifferent<T>(rel: impl Fn(&T, &T) -> bool, a: &T, b: &T) -> bool {
    !rel(a, b) && !rel(b, a)
}

/// True iff no two distinct elements of `xs` are related either way.
pub fn is_indiff<T: PartialEq>(rel: impl Fn(&T, &T) -> bool, xs: &[T]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, a)| xs[i + 1..].iter().all(|b| a == b || indifferent(&rel, a, b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationProperty {
    AntiReflexive,
    Transitive,
    Total,
    Indifferent,
}

impl fmt::Display for RelationProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationProperty::AntiReflexive => "anti-reflexive",
            RelationProperty::Transitive => "transitive",
            RelationProperty::Total => "total",
            RelationProperty::Indifferent => "indifferent",
        };
        f.write_str(s)
    }
}

/// Outcome of exhaustively evaluating a relation property over a sample.
/// `witness` is set exactly when `holds` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationVerdict {
    pub property: RelationProperty,
    pub holds: bool,
    pub witness: Option<String>,
}

impl RelationVerdict {
    fn holds(property: RelationProperty) -> Self {
        RelationVerdict {
            property,
            holds: true,
            witness: None,
        }
    }

    fn fails(property: RelationProperty, witness: String) -> Self {
        RelationVerdict {
            property,
            holds: false,
            witness: Some(witness),
        }
    }

    /// Evaluates `property` of `rel` on every element, pair or triple drawn
    /// from `sample`, reporting the first counterexample in enumeration order.
    pub fn evaluate<T, R>(property: RelationProperty, rel: R, sample: &[T]) -> Self
    where
        T: PartialEq + fmt::Debug,
        R: Fn(&T, &T) -> bool,
    {
        match property {
            RelationProperty::AntiReflexive => sample
                .iter()
                .find(|x| !is_anti_reflexive(&rel, *x))
                .map_or(Self::holds(property), |x| Self::fails(property, format!("{x:?}"))),
            RelationProperty::Transitive => {
                for a in sample {
                    for b in sample {
                        for c in sample {
                            if !is_transitive(&rel, a, b, c) {
                                return Self::fails(property, format!("({a:?}, {b:?}, {c:?})"));
                            }
                        }
                    }
                }
                Self::holds(property)
            }
            RelationProperty::Total => {
                for a in sample {
                    for b in sample {
                        if !is_total(&rel, a, b) {
                            return Self::fails(property, format!("({a:?}, {b:?})"));
                        }
                    }
                }
                Self::holds(property)
            }
            RelationProperty::Indifferent => {
                for (i, a) in sample.iter().enumerate() {
                    for b in &sample[i + 1..] {
                        if a != b && !indifferent(&rel, a, b) {
                            return Self::fails(property, format!("({a:?}, {b:?})"));
                        }
                    }
                }
                Self::holds(property)
            }
        }
    }
}

//! Chains: finite linear combinations of graded basis labels.
//!
//! A chain is stored as an ordered map from labels to nonzero scalars, so
//! iteration order, equality, and rendering are all deterministic.  All
//! operations return new chains; nothing mutates in place through the
//! public interface.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A basis label of a graded module: ordered, printable, and graded.
///
/// The `Ord` instance fixes the deterministic term order of every chain
/// (lexicographic in the label's structural encoding).
pub trait ChainLabel: Clone + Ord + fmt::Debug + fmt::Display {
    fn degree(&self) -> i64;
}

/// A finite linear combination of labels with exact coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chain<L: ChainLabel> {
    terms: BTreeMap<L, Scalar>,
}

impl<L: ChainLabel> Default for Chain<L> {
    fn default() -> Self {
        Chain::zero()
    }
}

impl<L: ChainLabel> Chain<L> {
    /// The zero chain.
    pub fn zero() -> Self {
        Chain {
            terms: BTreeMap::new(),
        }
    }

    /// A single term `c·label` (zero if `c = 0`).
    pub fn term(label: L, coefficient: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(label, coefficient);
        }
        Chain { terms }
    }

    /// Sums an iterator of `(label, coefficient)` pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(iter: impl IntoIterator<Item = (L, Scalar)>) -> Self {
        let mut out = Chain::zero();
        for (l, c) in iter {
            out.add_term_in_place(l, c);
        }
        out
    }

    fn add_term_in_place(&mut self, label: L, coefficient: Scalar) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.remove(&label) {
            None => {
                self.terms.insert(label, coefficient);
            }
            Some(existing) => {
                let sum = existing.add(&coefficient);
                if !sum.is_zero() {
                    self.terms.insert(label, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a label (`None` when absent, i.e. zero).
    pub fn coefficient(&self, label: &L) -> Option<&Scalar> {
        self.terms.get(label)
    }

    /// Terms in the deterministic label order.
    pub fn iter(&self) -> impl Iterator<Item = (&L, &Scalar)> {
        self.terms.iter()
    }

    /// Consumes the chain into its ordered terms.
    pub fn into_terms(self) -> impl Iterator<Item = (L, Scalar)> {
        self.terms.into_iter()
    }

    pub fn add(&self, other: &Chain<L>) -> Chain<L> {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term_in_place(l.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Chain<L> {
        Chain {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Chain<L>) -> Chain<L> {
        self.add(&other.neg())
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, s: &Scalar) -> Chain<L> {
        if s.is_zero() {
            return Chain::zero();
        }
        Chain {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.mul(s)))
                .collect(),
        }
    }

    /// Multiplies every coefficient by an integer (in each coefficient's
    /// own scalar mode); `scale_int(-1)` negates, `scale_int(0)` clears.
    pub fn scale_int(&self, n: i64) -> Chain<L> {
        if n == 0 {
            return Chain::zero();
        }
        Chain::from_terms(
            self.terms
                .iter()
                .map(|(l, c)| (l.clone(), c.mul_int(n))),
        )
    }

    /// The common degree of all terms; `None` if the chain is zero or
    /// inhomogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let first = it.next()?.degree();
        if it.all(|l| l.degree() == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Pushes the chain through a label-wise linear rule
    /// `label ↦ chain` (any signs must already be inside the rule).
    pub fn apply_linear<M: ChainLabel>(&self, f: impl Fn(&L) -> Chain<M>) -> Chain<M> {
        let mut out = Chain::zero();
        for (l, c) in &self.terms {
            for (m, d) in f(l).terms {
                out.add_term_in_place(m, d.mul(c));
            }
        }
        out
    }

    /// Relabels term-by-term through an injective label map.
    pub fn map_labels<M: ChainLabel>(&self, f: impl Fn(&L) -> M) -> Chain<M> {
        Chain::from_terms(self.terms.iter().map(|(l, c)| (f(l), c.clone())))
    }
}

impl<L: ChainLabel> fmt::Display for Chain<L> {
    /// Renders `c1*label1 + c2*label2` in deterministic label order, with
    /// unit coefficients omitted and rational signs folded into ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "{l}")?;
            } else {
                write!(f, "{abs}*{l}")?;
            }
        }
        Ok(())
    }
}

impl<L: ChainLabel> fmt::Debug for Chain<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    /// A toy label: a name with a degree.
    #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
    struct G(&'static str, i64);

    impl fmt::Display for G {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", self.0)
        }
    }

    impl ChainLabel for G {
        fn degree(&self) -> i64 {
            self.1
        }
    }

    #[test]
    fn terms_merge_and_cancel() {
        let f = Field::Rational;
        let a = Chain::term(G("a", 0), f.one());
        let b = a.add(&a.neg());
        assert!(b.is_zero());
        let two_a = a.add(&a);
        assert_eq!(two_a.coefficient(&G("a", 0)), Some(&f.integer(2)));
    }

    #[test]
    fn rendering_is_deterministic() {
        let f = Field::Rational;
        let c = Chain::from_terms([
            (G("b", 0), f.integer(-2)),
            (G("a", 0), f.one()),
            (G("c", 0), f.integer(1).mul(&f.integer(2).inverse())),
        ]);
        assert_eq!(c.to_string(), "a - 2*b + 1/2*c");
        assert_eq!(Chain::<G>::zero().to_string(), "0");
    }

    #[test]
    fn degree_detects_inhomogeneity() {
        let f = Field::Rational;
        let c = Chain::from_terms([(G("a", 0), f.one()), (G("b", 1), f.one())]);
        assert_eq!(c.degree(), None);
        let d = Chain::from_terms([(G("a", 2), f.one()), (G("b", 2), f.one())]);
        assert_eq!(d.degree(), Some(2));
    }

    #[test]
    fn mod_two_collapses_signs() {
        let f = Field::prime(2).unwrap();
        let a = Chain::term(G("a", 0), f.one());
        assert_eq!(a.neg(), a);
        assert!(a.add(&a).is_zero());
    }
}

//! Finite linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use super::poly::Coefficient;

/// A basis that is closed under an associative product with a unit and
/// carries a grading (forests, planar words, and tensors of those).
pub trait MonoidBasis: Clone + Ord {
    fn unit() -> Self;
    fn product(&self, other: &Self) -> Self;
    fn degree(&self) -> usize;
}

impl<A: MonoidBasis, B: MonoidBasis> MonoidBasis for (A, B) {
    fn unit() -> Self {
        (A::unit(), B::unit())
    }

    fn product(&self, other: &Self) -> Self {
        (self.0.product(&other.0), self.1.product(&other.1))
    }

    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

/// `Σ c_b · b` with zero coefficients pruned.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Combination<B: Ord> {
    terms: BTreeMap<B, Coefficient>,
}

impl<B: Ord> Default for Combination<B> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> Combination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(Coefficient::one(), b)
    }

    pub fn term(c: Coefficient, b: B) -> Self {
        let mut out = Self::zero();
        out.add_term(c, b);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Coefficient> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Coefficient of `b` (zero when absent).
    pub fn coefficient(&self, b: &B) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, c: Coefficient, b: B) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Coefficient, other: &Combination<B>) {
        if c.is_zero() {
            return;
        }
        for (b, d) in &other.terms {
            self.add_term(c * d, b.clone());
        }
    }

    pub fn add(&self, other: &Combination<B>) -> Combination<B> {
        let mut out = self.clone();
        out.add_scaled(&Coefficient::one(), other);
        out
    }

    pub fn sub(&self, other: &Combination<B>) -> Combination<B> {
        let mut out = self.clone();
        out.add_scaled(&Coefficient::from_integer(-1), other);
        out
    }

    pub fn scale(&self, c: &Coefficient) -> Combination<B> {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn neg(&self) -> Combination<B> {
        self.scale(&Coefficient::from_integer(-1))
    }

    /// Linear extension of a basis map.
    pub fn map_linear<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> Combination<C>) -> Combination<C> {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Linear extension of a map between bases.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> Combination<C> {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_term(c.clone(), f(b));
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&Coefficient) -> Coefficient) -> Combination<B> {
        let mut out = Combination::zero();
        for (b, c) in &self.terms {
            out.add_term(f(c), b.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Combination<B> {
        Combination {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<B: MonoidBasis> Combination<B> {
    pub fn one() -> Self {
        Self::basis(B::unit())
    }

    /// Bilinear extension of the basis product.
    pub fn product(&self, other: &Combination<B>) -> Combination<B> {
        let mut out = Combination::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(ca * cb, a.product(b));
            }
        }
        out
    }

    /// Coefficient of the unit.
    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&B::unit())
    }

    /// Homogeneous component of degree `d`.
    pub fn grade(&self, d: usize) -> Combination<B> {
        self.filter(|b| b.degree() == d)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(MonoidBasis::degree).max()
    }
}

impl<B: Ord + Clone> FromIterator<(Coefficient, B)> for Combination<B> {
    fn from_iter<I: IntoIterator<Item = (Coefficient, B)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (c, b) in iter {
            out.add_term(c, b);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a Combination<B> {
    type Item = (&'a B, &'a Coefficient);
    type IntoIter = btree_map::Iter<'a, B, Coefficient>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Text form of a basis element inside an element expression.
pub trait BasisText {
    fn write_basis(&self, out: &mut String);
}

impl<B: Ord + BasisText> fmt::Display for Combination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let (neg, c) = if c.is_negative_monomial() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&c.fmt_factor());
            out.push(' ');
            b.write_basis(&mut out);
        }
        f.write_str(&out)
    }
}

impl<B: Ord + BasisText> fmt::Debug for Combination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! Sparse rational linear combinations over an ordered basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// A finite formal sum `Σ c_b · b` with nonzero rational coefficients.
///
/// The empty sum is the zero element. Zero coefficients are never stored, so
/// structural equality is equality of vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for Element<B> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> Element<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `b` with coefficient 1.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coeff);
        out
    }

    /// Sums coefficient/basis pairs, merging repeats and dropping zeros.
    pub fn linear_combination<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Rational, B)>,
    {
        let mut out = Self::zero();
        for (c, b) in pairs {
            out.add_term(b, c);
        }
        out
    }

    pub fn add_term(&mut self, b: B, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(b.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
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

    pub fn coefficient(&self, b: &B) -> Rational {
        self.terms.get(b).copied().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn scale(&self, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), *x * c)).collect(),
        }
    }

    /// Relabels the basis through `f`, stopping at the first error.
    pub fn try_map_basis<C, E, F>(&self, mut f: F) -> Result<Element<C>, E>
    where
        C: Ord + Clone,
        F: FnMut(&B) -> Result<C, E>,
    {
        let mut out = Element::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b)?, *c);
        }
        Ok(out)
    }

    /// The single basis vector this element equals, if it is one.
    pub fn as_basis(&self) -> Option<&B> {
        match self.terms.iter().next() {
            Some((b, c)) if self.terms.len() == 1 && c.is_one() => Some(b),
            _ => None,
        }
    }
}

impl<B: Ord + Clone> Add for Element<B> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
        self
    }
}

impl<B: Ord + Clone> Add for &Element<B> {
    type Output = Element<B>;

    fn add(self, rhs: Self) -> Element<B> {
        self.clone() + rhs.clone()
    }
}

impl<B: Ord + Clone> Neg for Element<B> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-Rational::one())
    }
}

impl<B: Ord + Clone> Sub for Element<B> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<B: Ord + Clone> Mul<Rational> for Element<B> {
    type Output = Self;

    fn mul(self, rhs: Rational) -> Self {
        self.scale(rhs)
    }
}

impl<B: Ord + fmt::Display> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{b}")?;
            } else if *c == -Rational::one() {
                write!(f, "-{b}")?;
            } else {
                write!(f, "{c}*{b}")?;
            }
        }
        Ok(())
    }
}

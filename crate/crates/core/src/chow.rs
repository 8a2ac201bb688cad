//! The orbifold Chow ring of `P(w)` in its η-basis.
//!
//! A basis class `η_g^d` is an opaque symbol indexed by a sector `g` (a root
//! of unity fixing at least one coordinate) and a power `d < #I(g)`. All
//! structure constants of the product are 0 or 1 and the pairing takes the
//! values 0 and `1/<w>`, so the ring is modelled over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::ring::GradedRing;
use crate::unity::{RootOfUnity, Weights};
use crate::Rational;

/// The class `η_g^d`. Orders by the argument of `g`, then by `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChowBasisIndex {
    pub sector: RootOfUnity,
    pub power: usize,
}

impl ChowBasisIndex {
    pub fn new(sector: RootOfUnity, power: usize) -> Self {
        Self { sector, power }
    }
}

impl fmt::Display for ChowBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "eta(gamma={}, {})", self.sector, self.power)
    }
}

pub type ChowElement = Element<ChowBasisIndex>;

#[derive(Clone, Debug)]
pub struct ChowRing {
    weights: Weights,
    basis: Vec<ChowBasisIndex>,
}

impl ChowRing {
    pub fn new(weights: Weights) -> Self {
        let basis = chow_basis(&weights);
        Self { weights, basis }
    }

    pub fn contains(&self, b: &ChowBasisIndex) -> bool {
        b.power < self.weights.fixed_set(b.sector).len()
    }

    /// Orbifold degree `d + a(g)`, rejecting indices outside the basis.
    pub fn degree(&self, b: &ChowBasisIndex) -> Result<Rational> {
        if !self.contains(b) {
            return Err(Error::InvalidBasis(b.to_string()));
        }
        Ok(self.basis_degree(b))
    }

    /// The unique basis class pairing nontrivially with `b`:
    /// `η_{g⁻¹}^{#I(g)−1−d}`.
    pub fn dual(&self, b: &ChowBasisIndex) -> Result<ChowBasisIndex> {
        let dim = self.weights.fixed_set(b.sector).len();
        if b.power >= dim {
            return Err(Error::InvalidBasis(b.to_string()));
        }
        Ok(ChowBasisIndex::new(b.sector.inverse(), dim - 1 - b.power))
    }

    /// `deg(η_{g0}^{d0}) + deg(η_{g1}^{d1}) − a(g0·g1)`, the power carried
    /// by a product before truncation.
    pub fn product_power(&self, x: &ChowBasisIndex, y: &ChowBasisIndex) -> Rational {
        let target = x.sector * y.sector;
        self.basis_degree(x) + self.basis_degree(y) - self.weights.age(target)
    }
}

/// All `(g, d)` with `g ∈ ⋃ U_{w_i}` and `0 ≤ d < #I(g)`, ordered by `g` then `d`.
pub fn chow_basis(weights: &Weights) -> Vec<ChowBasisIndex> {
    weights
        .sectors()
        .into_iter()
        .flat_map(|g| {
            let dim = weights.fixed_set(g).len();
            (0..dim).map(move |d| ChowBasisIndex::new(g, d))
        })
        .collect()
}

impl GradedRing for ChowRing {
    type Basis = ChowBasisIndex;

    fn name(&self) -> &'static str {
        "chow"
    }

    fn weights(&self) -> &Weights {
        &self.weights
    }

    fn basis(&self) -> &[ChowBasisIndex] {
        &self.basis
    }

    fn unit(&self) -> ChowBasisIndex {
        ChowBasisIndex::new(RootOfUnity::one(), 0)
    }

    fn basis_degree(&self, b: &ChowBasisIndex) -> Rational {
        Rational::from_integer(b.power as i64) + self.weights.age(b.sector)
    }

    fn basis_cup(&self, x: &ChowBasisIndex, y: &ChowBasisIndex) -> ChowElement {
        let target = x.sector * y.sector;
        let fixed = self.weights.fixed_set(target);
        if fixed.is_empty() {
            return Element::zero();
        }
        let power = self.product_power(x, y);
        assert!(
            power.is_integer() && power >= Rational::zero(),
            "product power {power} of {x} and {y} must be a non-negative integer"
        );
        let power = power.to_integer() as usize;
        if power >= fixed.len() {
            return Element::zero();
        }
        Element::basis(ChowBasisIndex::new(target, power))
    }

    fn basis_pairing(&self, x: &ChowBasisIndex, y: &ChowBasisIndex) -> Rational {
        if !(x.sector * y.sector).is_one() {
            return Rational::zero();
        }
        let n = Rational::from_integer(self.weights.n() as i64);
        if self.basis_degree(x) + self.basis_degree(y) == n {
            Rational::one() / Rational::from_integer(self.weights.product())
        } else {
            Rational::zero()
        }
    }
}

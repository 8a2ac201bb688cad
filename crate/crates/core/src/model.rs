//! The graded group algebra of the `|w|`-th roots of unity.
//!
//! The basis is `ξ^0, …, ξ^{|w|−1}` with `ξ = exp(2iπ/|w|)` and
//! `deg(ξ^j) = j − |w|·γs(j)`. The product is the one induced on the
//! associated graded of the degree filtration: `ξ^j ∪ ξ^k` is `ξ^{j+k}` when
//! degrees add exactly and zero when the degree drops. The filtration itself
//! is never materialized.

use std::collections::BTreeMap;
use std::fmt;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::ring::GradedRing;
use crate::unity::{SectorEnumeration, Weights};
use crate::Rational;

/// The basis vector `ξ^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XiPower(pub usize);

impl fmt::Display for XiPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi^{}", self.0)
    }
}

pub type ModelElement = Element<XiPower>;

#[derive(Clone, Debug)]
pub struct ModelRing {
    weights: Weights,
    enumeration: SectorEnumeration,
    degrees: Vec<Rational>,
    basis: Vec<XiPower>,
}

impl ModelRing {
    pub fn new(weights: Weights) -> Self {
        let enumeration = SectorEnumeration::new(&weights);
        let total = Rational::from_integer(weights.total());
        let degrees = (0..enumeration.len())
            .map(|j| Rational::from_integer(j as i64) - total * enumeration.arg(j))
            .collect();
        let basis = (0..enumeration.len()).map(XiPower).collect();
        Self {
            weights,
            enumeration,
            degrees,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn enumeration(&self) -> &SectorEnumeration {
        &self.enumeration
    }

    fn check(&self, j: usize) -> Result<()> {
        if j < self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: j,
                len: self.dim(),
            })
        }
    }

    /// `deg(ξ^j) = j − |w|·γs(j)`.
    pub fn degree(&self, j: usize) -> Result<Rational> {
        self.check(j)?;
        Ok(self.degrees[j])
    }

    pub fn degrees(&self) -> &[Rational] {
        &self.degrees
    }

    /// `∫ z = z_n / <w>`: only the untwisted top class `ξ^n` integrates.
    pub fn integral(&self, z: &ModelElement) -> Rational {
        z.coefficient(&XiPower(self.weights.n())) / Rational::from_integer(self.weights.product())
    }

    /// The unique `k` with `⟨ξ^j, ξ^k⟩ = 1/<w>`.
    pub fn dual_index(&self, j: usize) -> Result<usize> {
        self.check(j)?;
        let sector = self.enumeration.get(j).expect("checked index").root;
        let offset = j as i64 - self.weights.k_min(sector);
        let dim = self.weights.fixed_set(sector).len() as i64;
        let k = self.weights.k_min(sector.inverse()) + dim - 1 - offset;
        Ok(k as usize)
    }

    /// Multiplicity of each degree among the basis vectors.
    pub fn poincare_polynomial(&self) -> BTreeMap<Rational, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }
}

impl GradedRing for ModelRing {
    type Basis = XiPower;

    fn name(&self) -> &'static str {
        "model"
    }

    fn weights(&self) -> &Weights {
        &self.weights
    }

    fn basis(&self) -> &[XiPower] {
        &self.basis
    }

    fn unit(&self) -> XiPower {
        XiPower(0)
    }

    fn basis_degree(&self, b: &XiPower) -> Rational {
        self.degrees[b.0]
    }

    fn basis_cup(&self, x: &XiPower, y: &XiPower) -> ModelElement {
        let target = (x.0 + y.0) % self.dim();
        if self.degrees[x.0] + self.degrees[y.0] == self.degrees[target] {
            Element::basis(XiPower(target))
        } else {
            Element::zero()
        }
    }

    fn basis_pairing(&self, x: &XiPower, y: &XiPower) -> Rational {
        self.integral(&self.basis_cup(x, y))
    }
}

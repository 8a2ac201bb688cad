//! The basis bijection `Ξ(η_g^d) = ξ^{k_min(g⁻¹)+d}` between the Chow ring
//! and the model ring, and the harness that checks it is an isomorphism of
//! graded Frobenius algebras.

mod checks;
mod report;

pub use checks::{
    verify_all, verify_all_between, verify_combinatorics, verify_frobenius, verify_isomorphism,
    verify_isomorphism_between,
};
pub use report::{CheckRecord, Counterexample, VerificationReport};

use crate::chow::{ChowBasisIndex, ChowElement};
use crate::error::{Error, Result};
use crate::model::{ModelElement, XiPower};
use crate::unity::{SectorEnumeration, Weights};

#[derive(Clone, Debug)]
pub struct XiMap {
    weights: Weights,
    enumeration: SectorEnumeration,
}

impl XiMap {
    pub fn new(weights: &Weights) -> Self {
        Self {
            weights: weights.clone(),
            enumeration: SectorEnumeration::new(weights),
        }
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    /// `Ξ(η_g^d)`.
    pub fn image(&self, b: &ChowBasisIndex) -> Result<XiPower> {
        if b.power >= self.weights.fixed_set(b.sector).len() {
            return Err(Error::InvalidBasis(b.to_string()));
        }
        let k = self.weights.k_min(b.sector.inverse()) + b.power as i64;
        Ok(XiPower(k as usize))
    }

    /// `Ξ⁻¹(ξ^j) = η_{s(j)⁻¹}^{j − k_min(s(j))}`.
    pub fn preimage(&self, x: XiPower) -> Result<ChowBasisIndex> {
        let sector = self
            .enumeration
            .get(x.0)
            .ok_or(Error::IndexOutOfRange {
                index: x.0,
                len: self.enumeration.len(),
            })?
            .root;
        let power = x.0 as i64 - self.weights.k_min(sector);
        Ok(ChowBasisIndex::new(sector.inverse(), power as usize))
    }

    pub fn apply(&self, x: &ChowElement) -> Result<ModelElement> {
        x.try_map_basis(|b| self.image(b))
    }

    pub fn invert(&self, z: &ModelElement) -> Result<ChowElement> {
        z.try_map_basis(|x| self.preimage(*x))
    }
}

pub fn xi_map(weights: &Weights, x: &ChowElement) -> Result<ModelElement> {
    XiMap::new(weights).apply(x)
}

pub fn xi_inverse(weights: &Weights, z: &ModelElement) -> Result<ChowElement> {
    XiMap::new(weights).invert(z)
}

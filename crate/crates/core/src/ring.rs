//! The common surface of the two rings: a finite basis with rational degrees,
//! a product given on basis pairs, and a pairing given on basis pairs.

use std::fmt;

use num_traits::Zero;

use crate::element::Element;
use crate::unity::Weights;
use crate::Rational;

/// A finite-dimensional graded algebra with a bilinear pairing, presented by
/// structure constants on a basis.
///
/// The basis-level methods are only meaningful for members of `basis()`.
pub trait GradedRing {
    type Basis: Clone + Ord + fmt::Debug + fmt::Display;

    /// Short tag used in reports, e.g. `"chow"`.
    fn name(&self) -> &'static str;

    fn weights(&self) -> &Weights;

    fn basis(&self) -> &[Self::Basis];

    fn unit(&self) -> Self::Basis;

    fn basis_degree(&self, b: &Self::Basis) -> Rational;

    fn basis_cup(&self, x: &Self::Basis, y: &Self::Basis) -> Element<Self::Basis>;

    fn basis_pairing(&self, x: &Self::Basis, y: &Self::Basis) -> Rational;

    /// Bilinear extension of `basis_cup`.
    fn cup(&self, x: &Element<Self::Basis>, y: &Element<Self::Basis>) -> Element<Self::Basis> {
        let mut out = Element::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                for (b, c) in self.basis_cup(bx, by).terms() {
                    out.add_term(b.clone(), *c * *cx * *cy);
                }
            }
        }
        out
    }

    /// Bilinear extension of `basis_pairing`.
    fn pairing(&self, x: &Element<Self::Basis>, y: &Element<Self::Basis>) -> Rational {
        let mut total = Rational::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                total += self.basis_pairing(bx, by) * *cx * *cy;
            }
        }
        total
    }
}

//! Weight vectors, roots of unity stored by their argument, and the
//! combinatorics relating the two: fixed sets, ages, the ordered sector
//! enumeration and its `k_min`/`k_max` landmarks.
//!
//! A root of unity `g` is never represented as a complex number. It is the
//! reduced fraction `γ(g) ∈ [0, 1)` with `g = exp(2iπ·γ(g))`, so every
//! equality between roots, ages and degrees is an exact rational equality.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// A validated weight vector `w = (w_0, …, w_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights {
    entries: Vec<i64>,
    total: i64,
    product: i64,
}

impl Weights {
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyWeights);
        }
        if let Some((index, &value)) = raw.iter().enumerate().find(|(_, &v)| v <= 0) {
            return Err(Error::NonPositiveWeight { index, value });
        }
        let total = raw
            .iter()
            .try_fold(0i64, |acc, &w| acc.checked_add(w))
            .ok_or(Error::Overflow("|w|"))?;
        let product = raw
            .iter()
            .try_fold(1i64, |acc, &w| acc.checked_mul(w))
            .ok_or(Error::Overflow("<w>"))?;
        Ok(Self {
            entries: raw.to_vec(),
            total,
            product,
        })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of weights, `n + 1`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The dimension `n` of `P(w)`.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    /// `|w| = Σ w_i`.
    pub fn total(&self) -> i64 {
        self.total
    }

    /// `<w> = Π w_i`.
    pub fn product(&self) -> i64 {
        self.product
    }

    /// True when every weight divides `|w|`.
    pub fn is_gorenstein(&self) -> bool {
        self.entries.iter().all(|&w| self.total % w == 0)
    }

    /// `I(g) = { i : g^{w_i} = 1 }`.
    pub fn fixed_set(&self, g: RootOfUnity) -> IndexSet {
        let order = g.order();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &w)| w % order == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// The age `a(g) = Σ {γ(g) w_i}`.
    pub fn age(&self, g: RootOfUnity) -> Rational {
        let numer: i64 = self.entries.iter().map(|&w| g.scaled_residue(w)).sum();
        Rational::new(numer, g.order())
    }

    /// `Σ [γ(g) w_i]`, the integer parts that complement the age.
    pub fn floor_sum(&self, g: RootOfUnity) -> i64 {
        let (p, q) = g.parts();
        self.entries
            .iter()
            .map(|&w| (i128::from(p) * i128::from(w)).div_euclid(i128::from(q)) as i64)
            .sum()
    }

    /// `k_min(g) = a(g⁻¹) + |w|·γ(g)`, defined for every root of unity.
    ///
    /// On a sector this is the first enumeration index with argument `γ(g)`;
    /// off the sectors it is the number of indices with argument below `γ(g)`.
    pub fn k_min(&self, g: RootOfUnity) -> i64 {
        let (p, q) = g.parts();
        let inverse = g.inverse();
        let residues: i128 = self
            .entries
            .iter()
            .map(|&w| i128::from(inverse.scaled_residue(w)))
            .sum();
        let numer = residues + i128::from(self.total) * i128::from(p);
        assert_eq!(numer % i128::from(q), 0, "k_min is integral");
        (numer / i128::from(q)) as i64
    }

    /// `k_max(g) = n + |w|·γ(g) − a(g)`; only defined when `I(g)` is non-empty.
    pub fn k_max(&self, g: RootOfUnity) -> Result<i64> {
        if self.fixed_set(g).is_empty() {
            return Err(Error::EmptyFixedSet(g));
        }
        let (p, q) = g.parts();
        let residues: i128 = self
            .entries
            .iter()
            .map(|&w| i128::from(g.scaled_residue(w)))
            .sum();
        let numer = i128::from(self.n() as i64) * i128::from(q)
            + i128::from(self.total) * i128::from(p)
            - residues;
        assert_eq!(numer % i128::from(q), 0, "k_max is integral");
        Ok((numer / i128::from(q)) as i64)
    }

    /// `J(g, h)`: indices where `{γ(g)w_i} + {γ(h)w_i} + {γ((gh)⁻¹)w_i} = 2`.
    pub fn j_set(&self, g: RootOfUnity, h: RootOfUnity) -> IndexSet {
        let inverse_product = (g * h).inverse();
        let two = Rational::from_integer(2);
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &w)| {
                g.scaled_fraction(w) + h.scaled_fraction(w) + inverse_product.scaled_fraction(w)
                    == two
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Splits `[0, n]` into the four blocks on which
    /// `{γ(g)w_i} + {γ(h)w_i} − {γ(gh)w_i}` is constant.
    pub fn sector_partition(&self, g: RootOfUnity, h: RootOfUnity) -> SectorPartition {
        let fixed_g = self.fixed_set(g);
        let fixed_h = self.fixed_set(h);
        let fixed_gh = self.fixed_set(g * h);
        SectorPartition {
            fixed_by_either: fixed_g.union(&fixed_h),
            fixed_by_product_only: fixed_gh.difference(&fixed_g.intersection(&fixed_h)),
            carries: self.j_set(g, h),
            inverse_carries: self.j_set(g.inverse(), h.inverse()),
        }
    }

    /// The distinct roots of `⋃ U_{w_i}`, sorted by argument.
    pub fn sectors(&self) -> Vec<RootOfUnity> {
        let set: BTreeSet<RootOfUnity> = self
            .entries
            .iter()
            .flat_map(|&w| (0..w).map(move |k| RootOfUnity::new(k, w)))
            .collect();
        set.into_iter().collect()
    }

    /// Whether `g` lies in some `U_{w_i}`.
    pub fn is_sector(&self, g: RootOfUnity) -> bool {
        let order = g.order();
        self.entries.iter().any(|&w| w % order == 0)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// A root of unity, stored as its argument `γ(g) ∈ [0, 1)`.
///
/// Ordering is by argument, which is the order used throughout for sectors
/// and basis layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity(Rational);

impl RootOfUnity {
    /// The root with argument `num/den`, reduced modulo 1.
    ///
    /// Panics if `den` is not positive.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den > 0, "denominator must be positive");
        Self(Rational::new(num.rem_euclid(den), den))
    }

    pub fn from_arg(arg: Rational) -> Self {
        Self::new(*arg.numer(), *arg.denom())
    }

    pub fn one() -> Self {
        Self(Rational::zero())
    }

    pub fn arg(&self) -> Rational {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    /// Multiplicative order, i.e. the reduced denominator of the argument.
    pub fn order(&self) -> i64 {
        *self.0.denom()
    }

    pub fn inverse(self) -> Self {
        Self::new(-*self.0.numer(), *self.0.denom())
    }

    /// `{γ(g)·w}` as an exact fraction.
    pub fn scaled_fraction(&self, w: i64) -> Rational {
        Rational::new(self.scaled_residue(w), self.order())
    }

    fn parts(&self) -> (i64, i64) {
        (*self.0.numer(), *self.0.denom())
    }

    /// Numerator of `{γ(g)·w}` over the denominator `order()`.
    fn scaled_residue(&self, w: i64) -> i64 {
        let (p, q) = self.parts();
        (i128::from(p) * i128::from(w)).rem_euclid(i128::from(q)) as i64
    }
}

impl Mul for RootOfUnity {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let sum = self.0 + rhs.0;
        if sum >= Rational::one() {
            Self(sum - Rational::one())
        } else {
            Self(sum)
        }
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `[0, n]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet(BTreeSet<usize>);

impl IndexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for IndexSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The four disjoint blocks of `[0, n]` attached to a pair of sectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorPartition {
    /// `I(g) ∪ I(h)`
    pub fixed_by_either: IndexSet,
    /// `I(gh) \ (I(g) ∩ I(h))`
    pub fixed_by_product_only: IndexSet,
    /// `J(g, h)`
    pub carries: IndexSet,
    /// `J(g⁻¹, h⁻¹)`
    pub inverse_carries: IndexSet,
}

impl SectorPartition {
    pub fn blocks(&self) -> [&IndexSet; 4] {
        [
            &self.fixed_by_either,
            &self.fixed_by_product_only,
            &self.carries,
            &self.inverse_carries,
        ]
    }
}

/// One element of `⊔ U_{w_i}`: a root together with the weight it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sector {
    pub root: RootOfUnity,
    pub origin: usize,
}

/// The increasing bijection `s: [0, |w|−1] → ⊔ U_{w_i}`, ordered
/// lexicographically by (argument, origin).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorEnumeration {
    entries: Vec<Sector>,
}

impl SectorEnumeration {
    pub fn new(weights: &Weights) -> Self {
        let mut entries: Vec<Sector> = weights
            .entries()
            .iter()
            .enumerate()
            .flat_map(|(origin, &w)| {
                (0..w).map(move |k| Sector {
                    root: RootOfUnity::new(k, w),
                    origin,
                })
            })
            .collect();
        entries.sort();
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `s(k)`.
    pub fn get(&self, k: usize) -> Option<Sector> {
        self.entries.get(k).copied()
    }

    /// `γs(k)`. Panics when `k ≥ |w|`.
    pub fn arg(&self, k: usize) -> Rational {
        self.entries[k].root.arg()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Sector> + '_ {
        self.entries.iter()
    }

    pub fn args(&self) -> Vec<Rational> {
        self.entries.iter().map(|s| s.root.arg()).collect()
    }

    /// First index whose argument equals `γ(g)`, found by scanning.
    pub fn first_index_of(&self, g: RootOfUnity) -> Option<usize> {
        self.entries.iter().position(|s| s.root == g)
    }

    /// Last index whose argument equals `γ(g)`, found by scanning.
    pub fn last_index_of(&self, g: RootOfUnity) -> Option<usize> {
        self.entries.iter().rposition(|s| s.root == g)
    }

    /// `#{k : γs(k) < γ(g)}`.
    pub fn count_below(&self, g: RootOfUnity) -> usize {
        self.entries.iter().filter(|s| s.root < g).count()
    }

    /// `#{k : γs(k) ≤ γ(g)}`.
    pub fn count_at_most(&self, g: RootOfUnity) -> usize {
        self.entries.iter().filter(|s| s.root <= g).count()
    }
}

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::report::{CheckRecord, Counterexample, Tally, VerificationReport};
use super::XiMap;
use crate::chow::{ChowBasisIndex, ChowRing};
use crate::element::Element;
use crate::model::{ModelRing, XiPower};
use crate::ring::GradedRing;
use crate::unity::{RootOfUnity, SectorEnumeration, Weights};
use crate::Rational;

/// Sparse row of structure constants, sorted by basis position.
type Row = Vec<(usize, Rational)>;

/// Basis-position view of a ring: products, pairings and degrees tabulated
/// once so that triple checks are table lookups.
struct Tables {
    dim: usize,
    products: Vec<Row>,
    gram: Vec<Rational>,
    degrees: Vec<Rational>,
}

impl Tables {
    fn product(&self, i: usize, j: usize) -> &Row {
        &self.products[i * self.dim + j]
    }

    fn pairing(&self, i: usize, j: usize) -> Rational {
        self.gram[i * self.dim + j]
    }

    /// `(Σ c_m e_m) ∪ e_k` from a row and a right factor.
    fn right_multiply(&self, row: &Row, k: usize) -> Row {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for &(m, c) in row {
            for &(t, x) in self.product(m, k) {
                *acc.entry(t).or_insert_with(Rational::zero) += c * x;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn left_multiply(&self, i: usize, row: &Row) -> Row {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for &(m, c) in row {
            for &(t, x) in self.product(i, m) {
                *acc.entry(t).or_insert_with(Rational::zero) += c * x;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

fn render<B: Clone + Ord + std::fmt::Display>(basis: &[B], row: &Row) -> String {
    Element::linear_combination(row.iter().map(|&(i, c)| (c, basis[i].clone()))).to_string()
}

/// Rank of a square rational matrix by fraction-exact Gaussian elimination.
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &lead;
            let pivot_row = rows[rank].clone();
            for (cell, p) in rows[r][col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *cell -= &factor * p;
            }
        }
        rank += 1;
    }
    rank
}

fn big(q: Rational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Checks the graded Frobenius algebra axioms of `ring` exhaustively:
/// closure of the basis products, two-sided unit, commutativity,
/// associativity, degree additivity of nonzero products, the Frobenius
/// identity `⟨a∪b, c⟩ = ⟨a, b∪c⟩` and perfectness of the pairing.
pub fn verify_frobenius<R: GradedRing + ?Sized>(ring: &R) -> VerificationReport {
    let weights = ring.weights();
    let name = ring.name();
    let basis = ring.basis();
    let dim = basis.len();
    let position: BTreeMap<&R::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();

    let mut closure = Tally::new(format!("{name}/closure"), weights);
    let mut products = Vec::with_capacity(dim * dim);
    for x in basis {
        for y in basis {
            let product = ring.basis_cup(x, y);
            let mut row = Row::new();
            let mut stray = None;
            for (b, c) in product.terms() {
                match position.get(b) {
                    Some(&i) => row.push((i, *c)),
                    None => stray = Some(b.clone()),
                }
            }
            closure.record(stray.is_none(), || {
                Counterexample::new([x, y], &product, format!("term {} outside the basis", stray.unwrap()))
            });
            row.sort_by_key(|&(i, _)| i);
            products.push(row);
        }
    }
    let gram = basis
        .iter()
        .flat_map(|x| basis.iter().map(move |y| ring.basis_pairing(x, y)))
        .collect();
    let degrees = basis.iter().map(|b| ring.basis_degree(b)).collect();
    let t = Tables {
        dim,
        products,
        gram,
        degrees,
    };

    let mut unit = Tally::new(format!("{name}/unit"), weights);
    let unit_basis = ring.unit();
    match position.get(&unit_basis) {
        Some(&u) => {
            for i in 0..dim {
                let expected: Row = vec![(i, Rational::one())];
                let left = t.product(u, i);
                let right = t.product(i, u);
                unit.record(*left == expected && *right == expected, || {
                    Counterexample::new(
                        [&unit_basis, &basis[i]],
                        format!("{} | {}", render(basis, left), render(basis, right)),
                        &basis[i],
                    )
                });
            }
        }
        None => unit.record(false, || {
            Counterexample::new([&unit_basis], "unit", "not a basis element")
        }),
    }

    let mut commutative = Tally::new(format!("{name}/commutativity"), weights);
    let mut graded = Tally::new(format!("{name}/graded"), weights);
    for i in 0..dim {
        for j in 0..dim {
            let (ij, ji) = (t.product(i, j), t.product(j, i));
            commutative.record(ij == ji, || {
                Counterexample::new([&basis[i], &basis[j]], render(basis, ij), render(basis, ji))
            });
            let expected = t.degrees[i] + t.degrees[j];
            let bad = ij.iter().find(|&&(k, _)| t.degrees[k] != expected);
            graded.record(bad.is_none(), || {
                let k = bad.unwrap().0;
                Counterexample::new(
                    [&basis[i], &basis[j]],
                    format!("deg({}) = {}", basis[k], t.degrees[k]),
                    format!("{} + {} = {expected}", t.degrees[i], t.degrees[j]),
                )
            });
        }
    }

    let mut associative = Tally::new(format!("{name}/associativity"), weights);
    let mut frobenius = Tally::new(format!("{name}/frobenius"), weights);
    for i in 0..dim {
        for j in 0..dim {
            let ij = t.product(i, j);
            for k in 0..dim {
                let jk = t.product(j, k);
                let lhs = t.right_multiply(ij, k);
                let rhs = t.left_multiply(i, jk);
                associative.record(lhs == rhs, || {
                    Counterexample::new(
                        [&basis[i], &basis[j], &basis[k]],
                        render(basis, &lhs),
                        render(basis, &rhs),
                    )
                });

                let lhs: Rational = ij.iter().map(|&(m, c)| c * t.pairing(m, k)).sum();
                let rhs: Rational = jk.iter().map(|&(m, c)| c * t.pairing(i, m)).sum();
                frobenius.record(lhs == rhs, || {
                    Counterexample::new([&basis[i], &basis[j], &basis[k]], lhs, rhs)
                });
            }
        }
    }

    let mut perfect = Tally::new(format!("{name}/perfectness"), weights);
    let matrix: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| (0..dim).map(|j| big(t.pairing(i, j))).collect())
        .collect();
    let r = rank(matrix);
    perfect.record(r == dim, || {
        Counterexample::new(["gram matrix"], format!("rank {r}"), format!("rank {dim}"))
    });

    VerificationReport::new(vec![
        closure.finish(),
        unit.finish(),
        commutative.finish(),
        graded.finish(),
        associative.finish(),
        frobenius.finish(),
        perfect.finish(),
    ])
}

/// Checks that `Ξ` is a bijection of bases that preserves degrees, products
/// and pairings between `chow` and `model`.
pub fn verify_isomorphism_between<C, M>(chow: &C, model: &M, xi: &XiMap) -> VerificationReport
where
    C: GradedRing<Basis = ChowBasisIndex> + ?Sized,
    M: GradedRing<Basis = XiPower> + ?Sized,
{
    let weights = chow.weights();
    let basis = chow.basis();
    let model_basis: BTreeSet<XiPower> = model.basis().iter().copied().collect();

    let mut bijection = Tally::new("xi/basis-bijection", weights);
    let mut seen = BTreeSet::new();
    let mut images: Vec<Option<XiPower>> = Vec::with_capacity(basis.len());
    for b in basis {
        let image = xi.image(b).ok().filter(|x| model_basis.contains(x));
        let back = image.and_then(|x| xi.preimage(x).ok());
        let fresh = image.is_some_and(|x| seen.insert(x));
        bijection.record(fresh && back == Some(*b), || {
            Counterexample::new(
                [b],
                image.map_or("no image".to_string(), |x| x.to_string()),
                back.map_or("no preimage".to_string(), |p| p.to_string()),
            )
        });
        images.push(image);
    }
    let missing = model_basis.difference(&seen).next().copied();
    bijection.record(missing.is_none() && basis.len() == model_basis.len(), || {
        Counterexample::new(
            ["coverage"],
            format!("{} images", seen.len()),
            missing.map_or(format!("{} basis vectors", model_basis.len()), |x| format!("{x} not hit")),
        )
    });

    let mut unit = Tally::new("xi/unit", weights);
    let unit_image = xi.image(&chow.unit()).ok();
    unit.record(unit_image == Some(model.unit()), || {
        Counterexample::new([chow.unit()], format!("{unit_image:?}"), model.unit())
    });

    let mut graded = Tally::new("xi/graded", weights);
    for (b, image) in basis.iter().zip(&images) {
        let Some(x) = image else { continue };
        let lhs = model.basis_degree(x);
        let rhs = chow.basis_degree(b);
        graded.record(lhs == rhs, || Counterexample::new([b], lhs, rhs));
    }

    let mut morphism = Tally::new("xi/ring-morphism", weights);
    let mut zeros = Tally::new("xi/zero-products", weights);
    let mut pairing = Tally::new("xi/pairing", weights);
    for (b0, x0) in basis.iter().zip(&images) {
        let Some(x0) = x0 else { continue };
        for (b1, x1) in basis.iter().zip(&images) {
            let Some(x1) = x1 else { continue };
            let chow_product = chow.basis_cup(b0, b1);
            let model_product = model.basis_cup(x0, x1);
            match xi.apply(&chow_product) {
                Ok(lhs) => morphism.record(lhs == model_product, || {
                    Counterexample::new([b0, b1], &lhs, &model_product)
                }),
                Err(e) => morphism.record(false, || Counterexample::new([b0, b1], e, &model_product)),
            }
            if chow_product.is_zero() {
                zeros.record(model_product.is_zero(), || {
                    Counterexample::new([b0, b1], "0", &model_product)
                });
            }
            let lhs = model.basis_pairing(x0, x1);
            let rhs = chow.basis_pairing(b0, b1);
            pairing.record(lhs == rhs, || Counterexample::new([b0, b1], lhs, rhs));
        }
    }

    VerificationReport::new(vec![
        bijection.finish(),
        unit.finish(),
        graded.finish(),
        morphism.finish(),
        zeros.finish(),
        pairing.finish(),
    ])
}

pub fn verify_isomorphism(weights: &Weights) -> VerificationReport {
    let chow = ChowRing::new(weights.clone());
    let model = ModelRing::new(weights.clone());
    verify_isomorphism_between(&chow, &model, &XiMap::new(weights))
}

/// Every reduced argument `p/q` with `q ≤ |w| + 1`; this includes roots
/// outside `⋃ U_{w_i}`.
fn sample_roots(weights: &Weights) -> Vec<RootOfUnity> {
    let bound = weights.total() + 1;
    let set: BTreeSet<RootOfUnity> = (1..=bound)
        .flat_map(|q| (0..q).map(move |p| RootOfUnity::new(p, q)))
        .collect();
    set.into_iter().collect()
}

/// Checks the root-of-unity combinatorics, the model degree function and the
/// Chow degree conventions against brute-force enumeration.
pub fn verify_combinatorics(weights: &Weights) -> VerificationReport {
    let w = weights;
    let n = w.n() as i64;
    let n_rat = Rational::from_integer(n);
    let int = |k: i64| Rational::from_integer(k);
    let total = w.total() as usize;
    let samples = sample_roots(w);
    let sectors = w.sectors();
    let en = SectorEnumeration::new(w);
    let mut records: Vec<CheckRecord> = Vec::new();

    let mut inverse_fixed = Tally::new("unity/fixed-set-inverse", w);
    let mut reflection = Tally::new("unity/fractional-part-reflection", w);
    let mut age_sum = Tally::new("unity/age-reflection", w);
    let mut extended = Tally::new("unity/k-min-extended", w);
    for &g in &samples {
        let fixed = w.fixed_set(g);
        inverse_fixed.record(fixed == w.fixed_set(g.inverse()), || {
            Counterexample::new([g], fixed.clone(), w.fixed_set(g.inverse()))
        });
        for (i, &wi) in w.entries().iter().enumerate() {
            let lhs = g.scaled_fraction(wi);
            let rhs = if fixed.contains(i) {
                Rational::zero()
            } else {
                Rational::one() - g.inverse().scaled_fraction(wi)
            };
            reflection.record(lhs == rhs, || Counterexample::new([g.to_string(), format!("i={i}")], lhs, rhs));
        }
        let lhs = w.age(g) + w.age(g.inverse());
        let rhs = int(n + 1 - fixed.len() as i64);
        age_sum.record(lhs == rhs, || Counterexample::new([g], lhs, rhs));

        let k_min = w.k_min(g);
        let on_sector = w.is_sector(g);
        for k in 0..total {
            let lhs = k as i64 >= k_min;
            let rhs = if on_sector {
                en.arg(k) >= g.arg()
            } else {
                en.arg(k) > g.arg()
            };
            extended.record(lhs == rhs, || {
                Counterexample::new(
                    [g.to_string(), format!("k={k}")],
                    format!("k >= k_min={k_min}: {lhs}"),
                    format!("comparison with γs(k)={}: {rhs}", en.arg(k)),
                )
            });
        }
        if !on_sector {
            let below = en.count_below(g) as i64;
            extended.record(k_min == below, || Counterexample::new([g], k_min, below));
        }
    }
    records.extend([inverse_fixed.finish(), reflection.finish(), age_sum.finish(), extended.finish()]);

    let mut bijection = Tally::new("unity/enumeration-bijection", w);
    {
        let mut expected: Vec<(RootOfUnity, usize)> = w
            .entries()
            .iter()
            .enumerate()
            .flat_map(|(i, &wi)| (0..wi).map(move |k| (RootOfUnity::new(k, wi), i)))
            .collect();
        let mut actual: Vec<(RootOfUnity, usize)> = en.iter().map(|s| (s.root, s.origin)).collect();
        let sorted = actual.windows(2).all(|p| p[0] <= p[1]);
        bijection.record(sorted && actual.len() == total, || {
            Counterexample::new(["ordering"], format!("{} entries, sorted={sorted}", actual.len()), total)
        });
        expected.sort();
        actual.sort();
        bijection.record(expected == actual, || {
            Counterexample::new(["multiset"], format!("{actual:?}"), format!("{expected:?}"))
        });
        for &g in &sectors {
            let count = en.iter().filter(|s| s.root == g).count();
            let fixed = w.fixed_set(g).len();
            bijection.record(count == fixed, || Counterexample::new([g], count, fixed));
        }
    }
    records.push(bijection.finish());

    let mut at_most = Tally::new("unity/count-at-most", w);
    let mut plateau = Tally::new("unity/plateau", w);
    let mut k_min_check = Tally::new("unity/k-min-closed-form", w);
    let mut k_max_check = Tally::new("unity/k-max-closed-form", w);
    for &g in &sectors {
        let lhs = en.count_at_most(g) as i64;
        let rhs = n + 1 + w.floor_sum(g);
        at_most.record(lhs == rhs, || Counterexample::new([g], lhs, rhs));

        let k_min = w.k_min(g);
        let fixed = w.fixed_set(g).len() as i64;
        for d in 0..fixed {
            let k = k_min + d;
            let ok = (0..total as i64).contains(&k) && en.arg(k as usize) == g.arg();
            plateau.record(ok, || {
                Counterexample::new([g.to_string(), format!("d={d}")], format!("k={k}"), g)
            });
        }

        let first = en.first_index_of(g).map(|k| k as i64);
        k_min_check.record(first == Some(k_min), || Counterexample::new([g], k_min, format!("{first:?}")));

        let last = en.last_index_of(g).map(|k| k as i64);
        let k_max = w.k_max(g).ok();
        k_max_check.record(k_max == last && k_max == Some(k_min + fixed - 1), || {
            Counterexample::new([g], format!("{k_max:?}"), format!("{last:?}"))
        });
    }
    records.extend([at_most.finish(), plateau.finish(), k_min_check.finish(), k_max_check.finish()]);

    let mut partition = Tally::new("unity/partition", w);
    let mut defect = Tally::new("unity/age-defect", w);
    let everything: BTreeSet<usize> = (0..w.len()).collect();
    for &g in &sectors {
        for &h in &sectors {
            let p = w.sector_partition(g, h);
            let blocks = p.blocks();
            let disjoint = (0..4).all(|a| (a + 1..4).all(|b| blocks[a].is_disjoint(blocks[b])));
            let covered: BTreeSet<usize> = blocks.iter().flat_map(|b| b.iter()).collect();
            partition.record(disjoint && covered == everything, || {
                Counterexample::new([g, h], format!("{blocks:?}"), "disjoint cover of [0, n]")
            });
            for (i, &wi) in w.entries().iter().enumerate() {
                let value = g.scaled_fraction(wi) + h.scaled_fraction(wi) - (g * h).scaled_fraction(wi);
                let expected = if p.fixed_by_product_only.contains(i) || p.carries.contains(i) {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                partition.record(value == expected, || {
                    Counterexample::new([g.to_string(), h.to_string(), format!("i={i}")], value, expected)
                });
            }
            let lhs = w.age(g) + w.age(h) - w.age(g * h);
            let rhs = int((p.fixed_by_product_only.len() + p.carries.len()) as i64);
            defect.record(lhs == rhs, || Counterexample::new([g, h], lhs, rhs));
        }
    }
    records.extend([partition.finish(), defect.finish()]);

    let model = ModelRing::new(w.clone());
    let degrees = model.degrees();
    let mut bounds = Tally::new("model/degree-bounds", w);
    let mut decomposition = Tally::new("model/degree-decomposition", w);
    let mut duals = Tally::new("model/dual-index", w);
    let unit_top: Vec<usize> = (0..total)
        .filter(|&j| en.get(j).unwrap().root.is_one() && degrees[j] == n_rat)
        .collect();
    let mut untwisted = Tally::new("model/untwisted-top", w);
    untwisted.record(unit_top == vec![w.n()], || Counterexample::new(["j"], format!("{unit_top:?}"), w.n()));
    let top = Rational::one() / int(w.product());
    for j in 0..total {
        let g = en.get(j).unwrap().root;
        let chain = [
            Rational::zero(),
            w.age(g.inverse()),
            degrees[j],
            n_rat - w.age(g),
            n_rat,
        ];
        bounds.record(chain.windows(2).all(|p| p[0] <= p[1]), || {
            Counterexample::new([format!("j={j}")], format!("{chain:?}"), "non-decreasing")
        });

        let offset = j as i64 - w.k_min(g);
        let fixed = w.fixed_set(g).len() as i64;
        let rhs = w.age(g.inverse()) + int(offset);
        decomposition.record((0..fixed).contains(&offset) && degrees[j] == rhs, || {
            Counterexample::new([format!("j={j}")], degrees[j], format!("{rhs} (offset {offset})"))
        });

        match model.dual_index(j) {
            Ok(k) => {
                let involutive = model.dual_index(k) == Ok(j);
                let congruent = (j + k) % total == w.n() % total;
                let complementary = k < total && degrees[j] + degrees[k] == n_rat;
                let pairs = k < total && model.basis_pairing(&XiPower(j), &XiPower(k)) == top;
                duals.record(involutive && congruent && complementary && pairs, || {
                    Counterexample::new(
                        [format!("j={j}")],
                        format!("k={k}"),
                        format!(
                            "involutive={involutive} congruent={congruent} \
                             complementary={complementary} pairs={pairs}"
                        ),
                    )
                });
            }
            Err(e) => duals.record(false, || Counterexample::new([format!("j={j}")], e, "dual")),
        }
    }
    let mut subadditive = Tally::new("model/subadditivity", w);
    for j in 0..total {
        for k in 0..total {
            let lhs = degrees[(j + k) % total];
            let rhs = degrees[j] + degrees[k];
            subadditive.record(lhs <= rhs, || {
                Counterexample::new([format!("j={j}"), format!("k={k}")], lhs, rhs)
            });
        }
    }
    let mut gorenstein = Tally::new("model/gorenstein-integral", w);
    if w.is_gorenstein() {
        for (j, d) in degrees.iter().enumerate() {
            gorenstein.record(d.is_integer(), || Counterexample::new([format!("j={j}")], d, "integer"));
        }
    }
    let mut symmetry = Tally::new("model/poincare-symmetry", w);
    let poincare = model.poincare_polynomial();
    for (&u, &m) in &poincare {
        let mirror = poincare.get(&(n_rat - u)).copied().unwrap_or(0);
        symmetry.record(m == mirror, || Counterexample::new([u], m, mirror));
    }
    records.extend([
        bounds.finish(),
        decomposition.finish(),
        duals.finish(),
        untwisted.finish(),
        subadditive.finish(),
        gorenstein.finish(),
        symmetry.finish(),
    ]);

    let chow = ChowRing::new(w.clone());
    let xi = XiMap::new(w);
    let mut count = Tally::new("chow/basis-count", w);
    count.record(chow.basis().len() == total, || Counterexample::new(["|basis|"], chow.basis().len(), total));
    let mut chow_bounds = Tally::new("chow/degree-bounds", w);
    let mut power = Tally::new("chow/product-power", w);
    let mut intertwine = Tally::new("xi/dual-intertwining", w);
    for b in chow.basis() {
        let d = chow.basis_degree(b);
        chow_bounds.record(d >= Rational::zero() && d <= n_rat, || Counterexample::new([b], d, "[0, n]"));
        for c in chow.basis() {
            let p = chow.product_power(b, c);
            power.record(p.is_integer() && p >= Rational::zero(), || {
                Counterexample::new([b, c], p, "non-negative integer")
            });
        }
        let lhs = chow.dual(b).ok().and_then(|dual| xi.image(&dual).ok());
        let rhs = xi.image(b).ok().and_then(|x| model.dual_index(x.0).ok()).map(XiPower);
        intertwine.record(lhs.is_some() && lhs == rhs, || {
            Counterexample::new([b], format!("{lhs:?}"), format!("{rhs:?}"))
        });
    }
    records.extend([count.finish(), chow_bounds.finish(), power.finish(), intertwine.finish()]);

    VerificationReport::new(records)
}

/// Every check for one weight vector, using the given ring realizations for
/// the structure checks.
pub fn verify_all_between<C, M>(chow: &C, model: &M) -> VerificationReport
where
    C: GradedRing<Basis = ChowBasisIndex> + ?Sized,
    M: GradedRing<Basis = XiPower> + ?Sized,
{
    let weights = chow.weights();
    let xi = XiMap::new(weights);
    [
        verify_combinatorics(weights),
        verify_frobenius(chow),
        verify_frobenius(model),
        verify_isomorphism_between(chow, model, &xi),
    ]
    .into_iter()
    .collect()
}

pub fn verify_all(weights: &Weights) -> VerificationReport {
    let chow = ChowRing::new(weights.clone());
    let model = ModelRing::new(weights.clone());
    verify_all_between(&chow, &model)
}

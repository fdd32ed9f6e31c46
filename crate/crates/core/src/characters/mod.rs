//! Exact character arithmetic.
//!
//! Characters are stored on the dominant chamber only; full weight sets are
//! recovered by Weyl-orbit expansion. This module is the brute-force oracle
//! every closed-form rule in the crate is checked against.

mod group;
pub mod lr;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

pub use group::{coords, format_coords, from_ints, Coords, Group, Labels, LatticeMap};

use crate::error::{Error, Result};

/// Full weight multiset: every weight with its multiplicity.
pub type WeightMultiset = HashMap<Coords, BigInt>;

/// A (virtual) character given by its dominant weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantCharacter {
    group: Arc<Group>,
    table: BTreeMap<Coords, BigInt>,
}

/// A character written as a combination of irreducibles, keyed by highest
/// weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    group: Arc<Group>,
    parts: BTreeMap<Coords, BigInt>,
}

fn same_group(a: &Arc<Group>, b: &Arc<Group>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch(a.name().into(), b.name().into()))
    }
}

/// Dominant weights `μ ≤ λ`, found by subtracting positive roots.
///
/// If `λ > μ` are dominant there is a positive root `α` with `λ - α`
/// dominant and `≥ μ`, so the walk reaches all of them.
fn dominant_weights_below(group: &Group, hw: &Coords) -> Vec<Coords> {
    let mut seen: HashSet<Coords> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(hw.clone());
    queue.push_back(hw.clone());
    let mut out = Vec::new();
    while let Some(mu) = queue.pop_front() {
        for a in group.positive_roots() {
            let nu: Coords = mu.iter().zip(a).map(|(x, y)| x - y).collect();
            if group.is_dominant(&nu) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
        out.push(mu);
    }
    out
}

/// Freudenthal's recursion on the dominant chamber.
pub fn irreducible_character(group: &Arc<Group>, hw: &Coords) -> Result<DominantCharacter> {
    group.require_dominant(hw)?;
    let mut weights = dominant_weights_below(group, hw);
    weights.sort_by_key(|w| std::cmp::Reverse(group.height(w)));

    let rho4 = group.rho4();
    let shifted_norm = |w: &[i32]| -> i64 {
        w.iter()
            .zip(rho4)
            .map(|(&x, &r)| {
                let v = 2 * x as i64 + r;
                v * v
            })
            .sum()
    };
    let top = shifted_norm(hw);

    let mut table: HashMap<Coords, BigInt> = HashMap::with_capacity(weights.len());
    table.insert(hw.clone(), BigInt::one());
    let positive = group.positive_roots();
    let positive_labels = group.positive_labels();
    for mu in weights.iter().skip(1) {
        let mu_labels = group.labels(mu);
        let mut sum = BigInt::zero();
        for (alpha, alpha_labels) in positive.iter().zip(positive_labels) {
            let mut k = 1;
            loop {
                let mut nu: Coords = mu.iter().zip(alpha).map(|(&x, &a)| x + k * a).collect();
                let mut nu_labels: Labels = mu_labels
                    .iter()
                    .zip(alpha_labels)
                    .map(|(&x, &a)| x + k * a)
                    .collect();
                let ip: i64 = nu.iter().zip(alpha).map(|(&x, &a)| x as i64 * a as i64).sum();
                group.dominant_conjugate_with_labels(&mut nu, &mut nu_labels);
                match table.get(&nu) {
                    Some(m) => sum += m * BigInt::from(ip),
                    None => break,
                }
                k += 1;
            }
        }
        let denom = top - shifted_norm(mu);
        debug_assert!(denom > 0);
        let (q, r) = (sum * BigInt::from(8)).div_rem(&BigInt::from(denom));
        debug_assert!(r.is_zero(), "Freudenthal division not exact at {mu:?}");
        if !q.is_zero() {
            table.insert(mu.clone(), q);
        }
    }
    Ok(DominantCharacter {
        group: group.clone(),
        table: table.into_iter().collect(),
    })
}

impl DominantCharacter {
    pub fn trivial(group: &Arc<Group>) -> Self {
        let mut table = BTreeMap::new();
        table.insert(group.zero(), BigInt::one());
        DominantCharacter {
            group: group.clone(),
            table,
        }
    }

    pub fn zero(group: &Arc<Group>) -> Self {
        DominantCharacter {
            group: group.clone(),
            table: BTreeMap::new(),
        }
    }

    /// Builds a character from dominant weights; non-dominant keys are an
    /// error.
    pub fn from_table(group: &Arc<Group>, table: BTreeMap<Coords, BigInt>) -> Result<Self> {
        for w in table.keys() {
            group.require_dominant(w)?;
        }
        let table = table.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        Ok(DominantCharacter {
            group: group.clone(),
            table,
        })
    }

    /// Keeps the dominant part of a Weyl-invariant weight multiset.
    pub fn from_multiset(group: &Arc<Group>, weights: &WeightMultiset) -> Self {
        let table = weights
            .iter()
            .filter(|(w, m)| !m.is_zero() && group.is_dominant(w))
            .map(|(w, m)| (w.clone(), m.clone()))
            .collect();
        DominantCharacter {
            group: group.clone(),
            table,
        }
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn table(&self) -> &BTreeMap<Coords, BigInt> {
        &self.table
    }

    pub fn multiplicity(&self, w: &[i32]) -> BigInt {
        let dom = self.group.dominant_conjugate(w);
        self.table.get(&dom).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// `Σ |W·μ| m(μ)`.
    pub fn dimension(&self) -> BigInt {
        self.table
            .iter()
            .map(|(w, m)| m * BigInt::from(self.group.orbit_size(w)))
            .sum()
    }

    /// Every weight with its multiplicity, by orbit expansion.
    pub fn full_weight_multiset(&self) -> Vec<(Coords, BigInt)> {
        let mut out = Vec::new();
        for (mu, m) in &self.table {
            self.group
                .for_each_in_orbit(mu, |w| out.push((w.clone(), m.clone())));
        }
        out
    }

    pub fn weight_multiset(&self) -> WeightMultiset {
        self.full_weight_multiset().into_iter().collect()
    }

    pub fn add(&self, other: &DominantCharacter) -> Result<DominantCharacter> {
        self.combine(other, BigInt::one())
    }

    pub fn sub(&self, other: &DominantCharacter) -> Result<DominantCharacter> {
        self.combine(other, -BigInt::one())
    }

    fn combine(&self, other: &DominantCharacter, sign: BigInt) -> Result<DominantCharacter> {
        same_group(&self.group, &other.group)?;
        let mut table = self.table.clone();
        for (w, m) in &other.table {
            *table.entry(w.clone()).or_default() += m * &sign;
        }
        table.retain(|_, m| !m.is_zero());
        Ok(DominantCharacter {
            group: self.group.clone(),
            table,
        })
    }

    pub fn scale(&self, k: &BigInt) -> DominantCharacter {
        let table = if k.is_zero() {
            BTreeMap::new()
        } else {
            self.table.iter().map(|(w, m)| (w.clone(), m * k)).collect()
        };
        DominantCharacter {
            group: self.group.clone(),
            table,
        }
    }

    /// Character of the contragredient.
    pub fn dual(&self) -> DominantCharacter {
        let table = self
            .table
            .iter()
            .map(|(w, m)| {
                let neg: Coords = w.iter().map(|x| -x).collect();
                (self.group.dominant_conjugate(&neg), m.clone())
            })
            .collect();
        DominantCharacter {
            group: self.group.clone(),
            table,
        }
    }

    /// Writes the character as a combination of irreducibles by peeling off
    /// highest weights in order of decreasing height.
    ///
    /// A negative coefficient is an error: the input was not an honest
    /// character (typically a bad lattice map upstream).
    pub fn decompose(&self) -> Result<Decomposition> {
        let group = &self.group;
        let mut remaining: HashMap<Coords, BigInt> =
            self.table.iter().map(|(w, m)| (w.clone(), m.clone())).collect();
        let mut order: Vec<Coords> = self.table.keys().cloned().collect();
        order.sort_by(|a, b| group.height(b).cmp(&group.height(a)).then(b.cmp(a)));
        let mut parts = BTreeMap::new();
        for hw in order {
            let c = match remaining.get(&hw) {
                Some(c) if !c.is_zero() => c.clone(),
                _ => continue,
            };
            if c.is_negative() {
                return Err(Error::NegativeMultiplicity {
                    weight: format_coords(&hw),
                    mult: c.to_string(),
                });
            }
            let irr = irreducible_character(group, &hw)?;
            for (w, m) in irr.table {
                *remaining.entry(w).or_default() -= &c * m;
            }
            parts.insert(hw, c);
        }
        if let Some((w, m)) = remaining.iter().find(|(_, m)| !m.is_zero()) {
            return Err(Error::NegativeMultiplicity {
                weight: format_coords(w),
                mult: m.to_string(),
            });
        }
        Ok(Decomposition {
            group: group.clone(),
            parts,
        })
    }
}

/// Multiplicity of the trivial constituent.
pub fn invariant_dim(c: &DominantCharacter) -> Result<BigInt> {
    Ok(c.decompose()?.multiplicity(&c.group.zero()))
}

impl Decomposition {
    pub fn from_parts(group: &Arc<Group>, parts: BTreeMap<Coords, BigInt>) -> Result<Self> {
        for w in parts.keys() {
            group.require_dominant(w)?;
        }
        Ok(Decomposition {
            group: group.clone(),
            parts: parts.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
        })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn parts(&self) -> &BTreeMap<Coords, BigInt> {
        &self.parts
    }

    pub fn multiplicity(&self, hw: &[i32]) -> BigInt {
        self.parts.get(hw).cloned().unwrap_or_default()
    }

    pub fn invariant_dim(&self) -> BigInt {
        self.multiplicity(&self.group.zero())
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.parts.values().all(|m| m.is_one())
    }

    /// `Σ m(λ) dim V(λ)` by the Weyl dimension formula.
    pub fn dimension(&self) -> Result<BigInt> {
        self.parts
            .iter()
            .map(|(w, m)| Ok(m * self.group.weyl_dim(w)?))
            .sum()
    }

    pub fn to_character(&self) -> Result<DominantCharacter> {
        let mut acc = DominantCharacter::zero(&self.group);
        for (w, m) in &self.parts {
            acc = acc.add(&irreducible_character(&self.group, w)?.scale(m))?;
        }
        Ok(acc)
    }

    pub fn highest_weights(&self) -> impl Iterator<Item = &Coords> {
        self.parts.keys()
    }
}

/// Tensor product decomposition by the Brauer–Klimyk orbit method.
pub fn tensor_decompose(a: &DominantCharacter, b: &DominantCharacter) -> Result<Decomposition> {
    same_group(&a.group, &b.group)?;
    let group = &a.group;
    let rho4 = group.rho4();
    let a_parts = a.decompose()?;
    let b_weights = b.full_weight_multiset();
    let mut out: BTreeMap<Coords, BigInt> = BTreeMap::new();
    for (lambda, ca) in a_parts.parts() {
        for (nu, mb) in &b_weights {
            // x = 4(λ + ν + ρ), reflected into the dominant chamber.
            let mut x: Coords = lambda
                .iter()
                .zip(nu)
                .zip(rho4)
                .map(|((&l, &n), &r)| 2 * (l + n) + r as i32)
                .collect();
            let mut labels: Labels = group.labels(&x);
            let steps = group.dominant_conjugate_with_labels(&mut x, &mut labels);
            if labels.contains(&0) {
                continue;
            }
            let hw: Coords = x
                .iter()
                .zip(rho4)
                .map(|(&v, &r)| (v - r as i32) / 2)
                .collect();
            let term = ca * mb;
            let entry = out.entry(hw).or_default();
            if steps.is_multiple_of(2) {
                *entry += term;
            } else {
                *entry -= term;
            }
        }
    }
    out.retain(|_, m| !m.is_zero());
    if let Some((w, m)) = out.iter().find(|(_, m)| m.is_negative()) {
        return Err(Error::NegativeMultiplicity {
            weight: format_coords(w),
            mult: m.to_string(),
        });
    }
    Ok(Decomposition {
        group: group.clone(),
        parts: out,
    })
}

/// Pointwise product of two weight multisets (the character of a tensor
/// product).
pub fn multiply_multisets(a: &WeightMultiset, b: &WeightMultiset) -> WeightMultiset {
    let mut out: WeightMultiset = HashMap::with_capacity(a.len() * 2);
    for (wa, ma) in a {
        for (wb, mb) in b {
            let w: Coords = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            *out.entry(w).or_default() += ma * mb;
        }
    }
    out.retain(|_, m| !m.is_zero());
    out
}

/// Symmetric powers `h_0, …, h_n` of a weight multiset by Newton's identity
/// `j h_j = Σ_{k=1..j} ψ^k · h_{j-k}` with Adams operations `ψ^k`.
pub fn sym_power_multisets(weights: &WeightMultiset, n: usize, dim: usize) -> Vec<WeightMultiset> {
    let adams = |k: i32| -> WeightMultiset {
        weights
            .iter()
            .map(|(w, m)| (w.iter().map(|x| k * x).collect(), m.clone()))
            .collect()
    };
    let psi: Vec<WeightMultiset> = (1..=n as i32).map(adams).collect();
    let mut h: Vec<WeightMultiset> = Vec::with_capacity(n + 1);
    let mut h0 = HashMap::new();
    h0.insert(smallvec::SmallVec::from_elem(0, dim), BigInt::one());
    h.push(h0);
    for j in 1..=n {
        let mut acc: WeightMultiset = HashMap::new();
        for k in 1..=j {
            for (w, m) in multiply_multisets(&psi[k - 1], &h[j - k]) {
                *acc.entry(w).or_default() += m;
            }
        }
        let jj = BigInt::from(j);
        let hj: WeightMultiset = acc
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(w, m)| {
                let (q, r) = m.div_rem(&jj);
                debug_assert!(r.is_zero(), "Newton identity division not exact");
                (w, q)
            })
            .collect();
        h.push(hj);
    }
    h
}

/// Character of the `n`-th symmetric power.
pub fn sym_power_character(c: &DominantCharacter, n: usize) -> DominantCharacter {
    if n == 0 {
        return DominantCharacter::trivial(&c.group);
    }
    let weights = c.weight_multiset();
    let h = sym_power_multisets(&weights, n, c.group.dim());
    DominantCharacter::from_multiset(&c.group, &h[n])
}

/// Pushes the full weight multiset of `c` through `map` and keeps the
/// dominant part for `target`.
pub fn restrict_character(
    c: &DominantCharacter,
    map: &LatticeMap,
    target: &Arc<Group>,
) -> Result<DominantCharacter> {
    if map.source_dim() != c.group.dim() {
        return Err(Error::DimensionMismatch {
            expected: c.group.dim(),
            found: map.source_dim(),
        });
    }
    if map.target_dim() != target.dim() {
        return Err(Error::DimensionMismatch {
            expected: target.dim(),
            found: map.target_dim(),
        });
    }
    let group = &c.group;
    let partials: Vec<Result<BTreeMap<Coords, BigInt>>> = c
        .table
        .par_iter()
        .map(|(mu, m)| {
            let mut counts: HashMap<Coords, u64> = HashMap::new();
            let mut image = Coords::new();
            let mut off_lattice = None;
            group.for_each_in_orbit(mu, |w| {
                if off_lattice.is_some() {
                    return;
                }
                if !map.apply_into(w, &mut image) {
                    off_lattice = Some(format_coords(w));
                    return;
                }
                match target.checked_labels(&image) {
                    Some(l) if l.iter().all(|&x| x >= 0) => {
                        *counts.entry(image.clone()).or_default() += 1;
                    }
                    Some(_) => {}
                    None => off_lattice = Some(format_coords(w)),
                }
            });
            if let Some(w) = off_lattice {
                return Err(Error::OffLattice(w));
            }
            Ok(counts
                .into_iter()
                .map(|(w, n)| (w, m * BigInt::from(n)))
                .collect())
        })
        .collect();
    let mut table: BTreeMap<Coords, BigInt> = BTreeMap::new();
    for p in partials {
        for (w, m) in p? {
            *table.entry(w).or_default() += m;
        }
    }
    Ok(DominantCharacter {
        group: target.clone(),
        table,
    })
}

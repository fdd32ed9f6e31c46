//! Closed-form branching rules for the `K`-types `V(nω)` and the
//! Gelfand–Tsetlin bookkeeping used to count invariants.
//!
//! Every rule here has a companion `*_oracle` function that recomputes the
//! same decomposition by restricting an honest character along a lattice
//! map, so the closed forms never have to be taken on trust.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::characters::{
    format_coords, irreducible_character, restrict_character, Coords, Decomposition, Group,
    LatticeMap,
};
use crate::error::{Error, Result};
use crate::root::{CartanType, Series};

/// A weakly decreasing tuple of integers or half-integers, stored doubled.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlTuple {
    doubled: Vec<i32>,
}

impl GlTuple {
    /// From doubled entries; all entries must share a parity.
    pub fn from_doubled(doubled: Vec<i32>) -> Result<Self> {
        if doubled.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format_coords(&doubled)));
        }
        if doubled.windows(2).any(|w| (w[0] - w[1]) % 2 != 0) {
            return Err(Error::InvalidInput(format!(
                "{} mixes integral and half-integral entries",
                format_coords(&doubled)
            )));
        }
        Ok(GlTuple { doubled })
    }

    pub fn from_ints(entries: &[i32]) -> Result<Self> {
        Self::from_doubled(entries.iter().map(|x| 2 * x).collect())
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.doubled
    }

    pub fn to_coords(&self) -> Coords {
        Coords::from_slice(&self.doubled)
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|x| x % 2 == 0)
    }

    /// Integer entries, if the tuple is integral.
    pub fn ints(&self) -> Option<Vec<i32>> {
        self.is_integral()
            .then(|| self.doubled.iter().map(|x| x / 2).collect())
    }

    /// Dimension of the `GL_m` representation with this highest weight.
    pub fn gl_dim(&self) -> BigInt {
        Group::gl(self.len())
            .weyl_dim(&self.doubled)
            .expect("weakly decreasing tuples are GL-dominant")
    }

    fn add(&self, other: &GlTuple) -> GlTuple {
        GlTuple {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for GlTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coords(&self.doubled))
    }
}

/// A pair `upper ⊃ lower` of tuples satisfying the interlacing inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingPattern {
    upper: GlTuple,
    lower: GlTuple,
}

impl InterlacingPattern {
    pub fn new(upper: GlTuple, lower: GlTuple) -> Result<Self> {
        if interlacing_count(&upper, &lower)? == 1 {
            Ok(InterlacingPattern { upper, lower })
        } else {
            Err(Error::InvalidInput(format!("{lower} does not interlace {upper}")))
        }
    }

    pub fn upper(&self) -> &GlTuple {
        &self.upper
    }

    pub fn lower(&self) -> &GlTuple {
        &self.lower
    }
}

/// Weakly decreasing tuples of length `len` drawn from `values`
/// (given in decreasing order).
fn decreasing_tuples(len: usize, values: &[i32]) -> Vec<Vec<i32>> {
    fn go(len: usize, values: &[i32], start: usize, prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for i in start..values.len() {
            prefix.push(values[i]);
            go(len, values, i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, values, 0, &mut Vec::with_capacity(len), &mut out);
    out
}

/// Doubled values `hi, hi-2, …, lo`.
fn doubled_range(hi: i32, lo: i32) -> Vec<i32> {
    (0..)
        .map(|k| hi - 2 * k)
        .take_while(|&v| v >= lo)
        .collect()
}

/// `Sp_{2m} ⊃ GL_m`: constituents of `V(nω_m)`, namely all
/// `n ≥ λ_1 ≥ … ≥ λ_m ≥ -n` with every `λ_i ≡ n (mod 2)`.
pub fn branch_sp_to_gl(m: usize, n: u32) -> Vec<GlTuple> {
    let n = n as i32;
    // Doubled entries step by 4 so that parity is preserved.
    let values: Vec<i32> = (0..=n).map(|k| 2 * n - 4 * k).collect();
    decreasing_tuples(m, &values)
        .into_iter()
        .map(|d| GlTuple { doubled: d })
        .collect()
}

/// `GL_{2m} ⊃ GL_m × GL_m`: constituents of `V(nω_m)`. The first tuple
/// ranges over `n ≥ λ_1 ≥ … ≥ λ_m ≥ 0` and fixes the second by
/// `λ_{m+i} = n - λ_{m-i+1}`.
pub fn branch_gl_to_gl_gl(m: usize, n: u32) -> Vec<(GlTuple, GlTuple)> {
    let n2 = 2 * n as i32;
    decreasing_tuples(m, &doubled_range(n2, 0))
        .into_iter()
        .map(|first| {
            let second: Vec<i32> = first.iter().rev().map(|x| n2 - x).collect();
            (GlTuple { doubled: first }, GlTuple { doubled: second })
        })
        .collect()
}

/// `Spin_{4m} ⊃ GL~_{2m}`: constituents of `V(nω_{2m})`, tuples
/// `(λ_1, λ_1, …, λ_m, λ_m)` with `n/2 ≥ λ_1 ≥ … ≥ λ_m ≥ -n/2` and every
/// `λ_j ≡ n/2 (mod ℤ)`.
pub fn branch_spin_to_gl(m: usize, n: u32) -> Vec<GlTuple> {
    let n = n as i32;
    decreasing_tuples(m, &doubled_range(n, -n))
        .into_iter()
        .map(|half| GlTuple {
            doubled: half.iter().flat_map(|&x| [x, x]).collect(),
        })
        .collect()
}

/// 1 if `upper_i ≥ lower_i ≥ upper_{i+1}` for all `i`, else 0.
///
/// Tuples of different integrality classes never interlace.
pub fn interlacing_count(upper: &GlTuple, lower: &GlTuple) -> Result<u32> {
    if upper.len() != lower.len() + 1 {
        return Err(Error::IncompatibleLengths {
            upper: upper.len(),
            lower: lower.len(),
        });
    }
    if let (Some(u), Some(l)) = (upper.doubled.first(), lower.doubled.first()) {
        if (u - l) % 2 != 0 {
            return Ok(0);
        }
    }
    let u = &upper.doubled;
    let ok = lower
        .doubled
        .iter()
        .enumerate()
        .all(|(i, &l)| u[i] >= l && l >= u[i + 1]);
    Ok(u32::from(ok))
}

/// All tuples one shorter that interlace `upper`, in decreasing
/// lexicographic order.
pub fn interlacings_below(upper: &GlTuple) -> Vec<GlTuple> {
    let u = &upper.doubled;
    let mut out = vec![Vec::new()];
    for i in 0..u.len().saturating_sub(1) {
        let choices = doubled_range(u[i], u[i + 1]);
        out = out
            .into_iter()
            .flat_map(|p: Vec<i32>| {
                choices.iter().map(move |&c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|d| GlTuple { doubled: d }).collect()
}

/// Number of Gelfand–Tsetlin chains `upper = λ^(m) ⊃ λ^(m-1) ⊃ … ⊃
/// λ^(k) = lower`. This is the multiplicity of `V(lower)` of `GL_k` in
/// `V(upper)` of `GL_m`, summed over the weights of the complementary torus.
pub fn gz_multiplicity(upper: &GlTuple, lower: &GlTuple) -> Result<BigInt> {
    if lower.len() >= upper.len() {
        if lower == upper {
            return Ok(BigInt::one());
        }
        return Err(Error::IncompatibleLengths {
            upper: upper.len(),
            lower: lower.len(),
        });
    }
    let mut layer: BTreeMap<GlTuple, BigInt> = BTreeMap::new();
    layer.insert(upper.clone(), BigInt::one());
    for _ in lower.len()..upper.len() - 1 {
        let mut next: BTreeMap<GlTuple, BigInt> = BTreeMap::new();
        for (t, c) in &layer {
            for s in interlacings_below(t) {
                *next.entry(s).or_default() += c;
            }
        }
        layer = next;
    }
    let mut total = BigInt::zero();
    for (t, c) in &layer {
        total += c * interlacing_count(t, lower)?;
    }
    Ok(total)
}

/// SO3-invariants and the `O3` sign on them, for the `GL3` representation
/// with highest weight `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct O3Profile {
    pub so3_invariant: bool,
    /// Parity of `a + b + c`: `O3` acts on the invariant line by
    /// `det^{a+b+c}`. Meaningful only when `so3_invariant` holds.
    pub det_power_parity: u8,
}

pub fn o3_invariant_profile(a: i32, b: i32, c: i32) -> Result<O3Profile> {
    if a < b || b < c {
        return Err(Error::NotDominant(format!("({a},{b},{c})")));
    }
    Ok(O3Profile {
        so3_invariant: (a - b) % 2 == 0 && (b - c) % 2 == 0,
        det_power_parity: (a + b + c).rem_euclid(2) as u8,
    })
}

/// The `SU(2)_l`-invariants of `V(nω_4)` of `Sp8` form the `Sp6`-module with
/// highest weight `(n, n, 0)`.
pub fn branch_sp8_mintype_su2l(n: u32) -> GlTuple {
    let n = n as i32;
    GlTuple {
        doubled: vec![2 * n, 2 * n, 0],
    }
}

/// The `SU(2)_l`-invariants of `V(nω_4)` of `SU8`: the `SU6`-modules
/// `V_{a,b}` (highest weight `aω_2 + bω_4`) with `a + b = n`.
pub fn branch_su8_mintype_su2l(n: u32) -> Vec<(u32, u32)> {
    (0..=n).rev().map(|a| (a, n - a)).collect()
}

/// `GL6` tuple of `V_{a,b} = V(aω_2 + bω_4)` of `SU6`.
pub fn su6_tuple(a: u32, b: u32) -> GlTuple {
    let (a, b) = (a as i32, b as i32);
    GlTuple {
        doubled: vec![2 * (a + b), 2 * (a + b), 2 * b, 2 * b, 0, 0],
    }
}

/// `SU6 ⊃ Sp6`: `V_{n,0}` restricts to `⊕_{c ≤ n} V(c, c, 0)`.
pub fn branch_vn0_to_sp6(n: u32) -> Vec<GlTuple> {
    (0..=n as i32)
        .rev()
        .map(|c| GlTuple {
            doubled: vec![2 * c, 2 * c, 0],
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

fn simple_group(series: Series, rank: usize) -> Result<Arc<Group>> {
    Ok(Arc::new(Group::simple(CartanType::new(series, rank)?)?))
}

fn restrict_irreducible(
    source: &Arc<Group>,
    hw: &Coords,
    map: &LatticeMap,
    target: &Arc<Group>,
) -> Result<Decomposition> {
    let c = irreducible_character(source, hw)?;
    restrict_character(&c, map, target)?.decompose()
}

/// `V(nω_m)` of `Sp_{2m}` restricted to `GL_m` along `ε_i ↦ ε_i`.
pub fn sp_to_gl_oracle(m: usize, n: u32) -> Result<Decomposition> {
    let sp = simple_group(Series::C, m)?;
    let target = Arc::new(Group::gl(m));
    let hw: Coords = (0..m).map(|_| 2 * n as i32).collect();
    restrict_irreducible(&sp, &hw, &LatticeMap::identity(m), &target)
}

/// `V(n^m 0^m)` of `GL_{2m}` restricted to `GL_m × GL_m` by splitting the
/// coordinates.
pub fn gl_to_gl_gl_oracle(m: usize, n: u32) -> Result<Decomposition> {
    let gl = Arc::new(Group::gl(2 * m));
    let small = Group::gl(m);
    let target = Arc::new(Group::product(&[&small, &small]));
    let hw: Coords = (0..2 * m)
        .map(|i| if i < m { 2 * n as i32 } else { 0 })
        .collect();
    restrict_irreducible(&gl, &hw, &LatticeMap::identity(2 * m), &target)
}

/// `V(nω_{2m})` of `Spin_{4m}` restricted to `GL~_{2m}` along `ε_i ↦ ε_i`.
pub fn spin_to_gl_oracle(m: usize, n: u32) -> Result<Decomposition> {
    let spin = simple_group(Series::D, 2 * m)?;
    let target = Arc::new(Group::gl(2 * m));
    let hw: Coords = (0..2 * m).map(|_| n as i32).collect();
    restrict_irreducible(&spin, &hw, &LatticeMap::identity(2 * m), &target)
}

/// Highest weights of the constituents on which the first (`SU2`) factor
/// of a product acts trivially, with that factor's coordinate removed.
fn su2_trivial_part(d: &Decomposition) -> BTreeMap<Coords, BigInt> {
    d.parts()
        .iter()
        .filter(|(w, _)| w[0] == 0)
        .map(|(w, m)| (Coords::from_slice(&w[1..]), m.clone()))
        .collect()
}

/// `SU(2)_l`-invariants of `V(nω_4)` of `Sp8` as `Sp6` highest weights,
/// with `SU(2)_l` sitting on `ε_1`.
pub fn sp8_mintype_oracle(n: u32) -> Result<BTreeMap<Coords, BigInt>> {
    let sp8 = simple_group(Series::C, 4)?;
    let sp6 = Group::simple(CartanType::new(Series::C, 3)?)?;
    let target = Arc::new(Group::product(&[&Group::su2(), &sp6]));
    let map = LatticeMap::identity(4);
    let hw: Coords = (0..4).map(|_| 2 * n as i32).collect();
    Ok(su2_trivial_part(&restrict_irreducible(&sp8, &hw, &map, &target)?))
}

/// `SU(2)_l`-invariants of `V(nω_4)` of `SU8` as `GL6` tuples normalized to
/// last entry zero, with `SU(2)_l` acting on `ε_1, ε_2`.
pub fn su8_mintype_oracle(n: u32) -> Result<BTreeMap<Coords, BigInt>> {
    let gl8 = Arc::new(Group::gl(8));
    let target = Arc::new(Group::product(&[&Group::su2(), &Group::gl(6)]));
    let mut images = vec![vec![1, 0, 0, 0, 0, 0, 0], vec![-1, 0, 0, 0, 0, 0, 0]];
    for j in 0..6 {
        let mut row = vec![0; 7];
        row[1 + j] = 1;
        images.push(row);
    }
    let map = LatticeMap::from_images(7, &images)?;
    let hw: Coords = (0..8).map(|i| if i < 4 { 2 * n as i32 } else { 0 }).collect();
    let d = restrict_irreducible(&gl8, &hw, &map, &target)?;
    let mut out: BTreeMap<Coords, BigInt> = BTreeMap::new();
    for (w, m) in su2_trivial_part(&d) {
        let last = w[w.len() - 1];
        let normalized: Coords = w.iter().map(|x| x - last).collect();
        *out.entry(normalized).or_default() += m;
    }
    Ok(out)
}

/// `ε_{2i-1} ↦ e_i`, `ε_{2i} ↦ -e_i`: the torus of `Sp_{2k}` inside
/// `GL_{2k}`.
pub fn gl_to_sp_map(k: usize) -> Result<LatticeMap> {
    let images: Vec<Vec<i64>> = (0..2 * k)
        .map(|j| {
            let mut row = vec![0; k];
            row[j / 2] = if j % 2 == 0 { 1 } else { -1 };
            row
        })
        .collect();
    LatticeMap::from_images(k, &images)
}

/// `V_{n,0}` of `SU6` restricted to `Sp6`.
pub fn vn0_to_sp6_oracle(n: u32) -> Result<Decomposition> {
    let gl6 = Arc::new(Group::gl(6));
    let sp6 = simple_group(Series::C, 3)?;
    restrict_irreducible(&gl6, &su6_tuple(n, 0).to_coords(), &gl_to_sp_map(3)?, &sp6)
}

/// Closed-form list as a multiset keyed by highest weight.
pub fn as_multiset<'a>(tuples: impl IntoIterator<Item = &'a GlTuple>) -> BTreeMap<Coords, BigInt> {
    let mut out: BTreeMap<Coords, BigInt> = BTreeMap::new();
    for t in tuples {
        *out.entry(t.to_coords()).or_default() += 1;
    }
    out
}

/// Concatenated tuples of a `GL_m × GL_m` list, as a multiset.
pub fn pair_multiset(pairs: &[(GlTuple, GlTuple)]) -> BTreeMap<Coords, BigInt> {
    let mut out: BTreeMap<Coords, BigInt> = BTreeMap::new();
    for (a, b) in pairs {
        let mut c = a.to_coords();
        c.extend_from_slice(b.doubled());
        *out.entry(c).or_default() += 1;
    }
    out
}

/// `{λ + λ' : λ ∈ prev, λ' ∈ step}`, the highest weights reachable by
/// multiplying highest weight vectors.
pub fn sumset(prev: &[GlTuple], step: &[GlTuple]) -> Vec<GlTuple> {
    let mut out: Vec<GlTuple> = prev
        .iter()
        .flat_map(|a| step.iter().map(move |b| a.add(b)))
        .collect();
    out.sort();
    out.dedup();
    out
}

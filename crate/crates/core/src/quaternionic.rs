//! K-types of the quaternionic modules `R¹(W)` and the see-saw count that
//! yields the `SU(2)_s`-invariant dimensions of `V_{a,b}`.
//!
//! `R¹(W)` has `SU2 ×₂ M`-types `S^{k+n-2}(ℂ²) ⊗ (Symⁿ(𝔫_M) ⊗ W_M)` for
//! `n ≥ 0`. Everything below is character arithmetic on `M`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::binomial;
use crate::characters::{
    format_coords, from_ints, irreducible_character, sym_power_multisets, tensor_decompose, Coords,
    Decomposition, DominantCharacter, Group, WeightMultiset,
};
use crate::error::{Error, Result};
use crate::root::{CartanType, Series};

#[derive(Clone, Debug)]
pub struct QuatInductionDatum {
    k: u32,
    m_rep: DominantCharacter,
    n_m_rep: DominantCharacter,
}

impl QuatInductionDatum {
    pub fn new(k: u32, m_rep: DominantCharacter, n_m_rep: DominantCharacter) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidInput(format!("R¹(W[k]) needs k ≥ 2, got {k}")));
        }
        if m_rep.group() != n_m_rep.group() {
            return Err(Error::ContextMismatch(
                m_rep.group().name().into(),
                n_m_rep.group().name().into(),
            ));
        }
        Ok(QuatInductionDatum { k, m_rep, n_m_rep })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m_group(&self) -> &Arc<Group> {
        self.m_rep.group()
    }

    pub fn m_rep(&self) -> &DominantCharacter {
        &self.m_rep
    }

    pub fn n_m_rep(&self) -> &DominantCharacter {
        &self.n_m_rep
    }
}

/// `𝔫_M` for `F_{4,4}`: the 14-dimensional `Sp6`-module with highest weight
/// `(1,1,1)`.
pub fn f44_n_m() -> Result<DominantCharacter> {
    let sp6 = Arc::new(Group::simple(CartanType::new(Series::C, 3)?)?);
    irreducible_character(&sp6, &from_ints(&[1, 1, 1]))
}

/// `ℂ[k]` for `F_{4,4}`: trivial on `M = Sp6`.
pub fn f44_datum(k: u32) -> Result<QuatInductionDatum> {
    let n_m = f44_n_m()?;
    let trivial = DominantCharacter::trivial(n_m.group());
    QuatInductionDatum::new(k, trivial, n_m)
}

/// `χ^{j}[k]` for `SU(2,1)`: `M = U1`, `𝔫_M` has `U1`-weights `±1`.
pub fn su21_datum(j: i32, k: u32) -> Result<QuatInductionDatum> {
    let u1 = Arc::new(Group::torus(1));
    let mut chi = BTreeMap::new();
    chi.insert(from_ints(&[j]), BigInt::from(1));
    let mut n_m = BTreeMap::new();
    n_m.insert(from_ints(&[1]), BigInt::from(1));
    n_m.insert(from_ints(&[-1]), BigInt::from(1));
    QuatInductionDatum::new(
        k,
        DominantCharacter::from_table(&u1, chi)?,
        DominantCharacter::from_table(&u1, n_m)?,
    )
}

/// One `SU2 ×₂ M`-type family of `R¹(W)`.
#[derive(Clone, Debug)]
pub struct KTypeTerm {
    pub n: u32,
    /// `k + n - 2`: the `SU2` factor is `S^{su2_top_weight}(ℂ²)`.
    pub su2_top_weight: u32,
    /// `Symⁿ(𝔫_M) ⊗ W_M` as `M`-constituents.
    pub m_constituents: Decomposition,
}

impl KTypeTerm {
    /// `(k+n-1) · dim(Symⁿ(𝔫_M) ⊗ W_M)`.
    pub fn dimension(&self) -> Result<BigInt> {
        Ok(BigInt::from(self.su2_top_weight + 1) * self.m_constituents.dimension()?)
    }
}

fn symmetric_powers(c: &DominantCharacter, depth: usize) -> Vec<WeightMultiset> {
    sym_power_multisets(&c.weight_multiset(), depth, c.group().dim())
}

/// The terms `n = 0..=depth` of `R¹(W)`.
pub fn r1_ktypes(d: &QuatInductionDatum, depth: u32) -> Result<Vec<KTypeTerm>> {
    let group = d.m_group();
    symmetric_powers(&d.n_m_rep, depth as usize)
        .into_iter()
        .enumerate()
        .map(|(n, weights)| {
            let sym = DominantCharacter::from_multiset(group, &weights);
            Ok(KTypeTerm {
                n: n as u32,
                su2_top_weight: d.k + n as u32 - 2,
                m_constituents: tensor_decompose(&sym, &d.m_rep)?,
            })
        })
        .collect()
}

/// `M`-constituents of `σ_X` at one `SU2` level.
#[derive(Clone, Debug)]
pub struct LevelDiff {
    pub su2_level: u32,
    pub parts: BTreeMap<Coords, BigInt>,
}

impl LevelDiff {
    pub fn is_non_negative(&self) -> bool {
        self.parts.values().all(|m| !m.is_negative())
    }
}

/// `R¹(W[k_lo]) − R¹(W[k_hi])` level by level, for the `depth + 1` lowest
/// levels of `R¹(W[k_lo])`. A negative multiplicity means the two modules
/// cannot sit in an exact sequence with this `𝔫_M`, and is an error.
pub fn exact_sequence_ktype_diff(
    lo: &QuatInductionDatum,
    hi: &QuatInductionDatum,
    depth: u32,
) -> Result<Vec<LevelDiff>> {
    if lo.m_group() != hi.m_group() || lo.n_m_rep != hi.n_m_rep {
        return Err(Error::ContextMismatch(
            lo.m_group().name().into(),
            hi.m_group().name().into(),
        ));
    }
    if hi.k < lo.k {
        return Err(Error::InvalidInput("the quotient must have the larger k".into()));
    }
    let lo_terms = r1_ktypes(lo, depth)?;
    let shift = hi.k - lo.k;
    let hi_terms = if depth >= shift {
        r1_ktypes(hi, depth - shift)?
    } else {
        Vec::new()
    };
    let mut out = Vec::with_capacity(lo_terms.len());
    for term in lo_terms {
        let mut parts = term.m_constituents.parts().clone();
        if let Some(sub) = term.n.checked_sub(shift).map(|m| &hi_terms[m as usize]) {
            for (w, m) in sub.m_constituents.parts() {
                *parts.entry(w.clone()).or_default() -= m;
            }
        }
        parts.retain(|_, m| !m.is_zero());
        if let Some((w, m)) = parts.iter().find(|(_, m)| m.is_negative()) {
            return Err(Error::NegativeMultiplicity {
                weight: format_coords(w),
                mult: m.to_string(),
            });
        }
        out.push(LevelDiff {
            su2_level: term.su2_top_weight,
            parts,
        });
    }
    Ok(out)
}

/// `V_6 = S²ℂ³` and its dual, as `GL3` characters.
pub fn v6() -> Result<DominantCharacter> {
    irreducible_character(&Arc::new(Group::gl(3)), &from_ints(&[2, 0, 0]))
}

/// `R¹(χ^{j}[k])`-label of the term `(a, b)` in the restriction of
/// `R¹(ℂ[r])` to `SU(2,1) × SU3`: `j = a - b`, `k = r + a + b`.
fn su21_label(r: u32, a: u32, b: u32) -> (i64, u32) {
    (a as i64 - b as i64, r + a + b)
}

/// The `(a, b)` whose label under `R¹(ℂ[r])` is `(j, k)`, if any.
fn su21_term(r: u32, j: i64, k: u32) -> Option<(u32, u32)> {
    let s = k.checked_sub(r)? as i64;
    if (s + j) % 2 != 0 || s < j.abs() {
        return None;
    }
    let (a, b) = (((s + j) / 2) as u32, ((s - j) / 2) as u32);
    debug_assert_eq!(su21_label(r, a, b), (j, k));
    Some((a, b))
}

/// `dim Hom_{SU(2,1)}(σ_X, R¹(χ^{a-b}[6+a+b]))`, with `σ_X = R¹(ℂ[6]) −
/// R¹(ℂ[10])`, each restricted to `SU(2,1) × SU3`. The `SU3` side is
/// `Sym^a V_6 ⊗ Sym^b V_6^∨`, whose dimension is taken from characters.
pub fn seesaw_multiplicity(a: u32, b: u32) -> Result<BigInt> {
    let v = v6()?;
    let vd = v.dual();
    let depth = (a.max(b)) as usize;
    let pos = symmetric_powers(&v, depth);
    let neg = symmetric_powers(&vd, depth);
    let dim = |ms: &WeightMultiset| -> BigInt { ms.values().sum() };
    let term_dim = |pair: Option<(u32, u32)>| -> BigInt {
        match pair {
            Some((x, y)) => dim(&pos[x as usize]) * dim(&neg[y as usize]),
            None => BigInt::zero(),
        }
    };
    let (j, k) = su21_label(6, a, b);
    let value = term_dim(su21_term(6, j, k)) - term_dim(su21_term(10, j, k));
    let shortcut = binomial(a as i64 + 5, 5) * binomial(b as i64 + 5, 5)
        - binomial(a as i64 + 3, 5) * binomial(b as i64 + 3, 5);
    assert_eq!(value, shortcut, "see-saw count disagrees with binomials at ({a},{b})");
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn datum_validation() {
        let n_m = f44_n_m().unwrap();
        assert_eq!(n_m.dimension(), BigInt::from(14));
        let t = DominantCharacter::trivial(n_m.group());
        assert!(QuatInductionDatum::new(1, t.clone(), n_m.clone()).is_err());
        let u1 = su21_datum(0, 6).unwrap();
        assert!(QuatInductionDatum::new(6, t, u1.n_m_rep().clone()).is_err());
    }

    #[test]
    fn lowest_and_first_terms() {
        let d = f44_datum(6).unwrap();
        let terms = r1_ktypes(&d, 2).unwrap();
        assert_eq!(terms[0].su2_top_weight, 4);
        assert_eq!(terms[0].m_constituents.invariant_dim(), BigInt::from(1));
        assert_eq!(terms[0].m_constituents.parts().len(), 1);
        assert_eq!(terms[1].su2_top_weight, 5);
        assert_eq!(terms[1].m_constituents.parts().len(), 1);
        assert_eq!(terms[1].m_constituents.multiplicity(&from_ints(&[1, 1, 1])), BigInt::from(1));
        for t in &terms {
            let sym_dim = binomial(13 + t.n as i64, t.n as i64);
            assert_eq!(t.dimension().unwrap(), BigInt::from(t.su2_top_weight + 1) * sym_dim);
        }
    }

    #[test]
    fn su21_terms_are_lines() {
        let (a, b) = (2, 1);
        let d = su21_datum(a - b, 6 + a as u32 + b as u32).unwrap();
        for t in r1_ktypes(&d, 4).unwrap() {
            let weights: Vec<i32> = t.m_constituents.highest_weights().map(|w| w[0] / 2).collect();
            let expected: Vec<i32> = (0..=t.n as i32).map(|i| (a - b) - t.n as i32 + 2 * i).collect();
            assert_eq!(weights, expected);
            assert!(t.m_constituents.is_multiplicity_free());
            assert_eq!(t.su2_top_weight, 4 + (a + b) as u32 + t.n);
        }
    }

    #[test]
    fn exact_sequence_levels() {
        let lo = f44_datum(6).unwrap();
        let hi = f44_datum(10).unwrap();
        let diff = exact_sequence_ktype_diff(&lo, &hi, 5).unwrap();
        let lo_terms = r1_ktypes(&lo, 5).unwrap();
        for level in &diff[..4] {
            let n = (level.su2_level - 4) as usize;
            assert_eq!(&level.parts, lo_terms[n].m_constituents.parts());
        }
        assert_eq!(diff[0].su2_level, 4);
        assert_eq!(diff[0].parts.len(), 1);
        assert!(diff.iter().all(LevelDiff::is_non_negative));
        // At S^8 the trivial Sp6-type of Sym⁰ is removed from Sym⁴(𝔫_M); the
        // quartic invariant keeps the difference honest.
        let sym4_trivial = lo_terms[4].m_constituents.invariant_dim();
        assert_eq!(diff[4].parts.get(&from_ints(&[0, 0, 0])).cloned().unwrap_or_default(), sym4_trivial - 1);
    }

    #[test]
    fn wrong_order_is_rejected() {
        let lo = f44_datum(6).unwrap();
        let hi = f44_datum(10).unwrap();
        assert!(exact_sequence_ktype_diff(&hi, &lo, 2).is_err());
        // The smaller module cannot be subtracted from the larger one.
        let big = f44_datum(2).unwrap();
        assert!(matches!(
            exact_sequence_ktype_diff(&lo, &big, 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn seesaw_values() {
        assert_eq!(seesaw_multiplicity(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(seesaw_multiplicity(1, 1).unwrap(), BigInt::from(36));
        assert_eq!(seesaw_multiplicity(2, 2).unwrap(), BigInt::from(440));
        assert_eq!(seesaw_multiplicity(3, 0).unwrap(), BigInt::from(56));
    }

    #[test]
    fn v6_symmetric_power_dimensions() {
        let v = v6().unwrap();
        assert_eq!(v.dimension(), BigInt::from(6));
        for (a, ms) in symmetric_powers(&v, 4).iter().enumerate() {
            let total: BigInt = ms.values().sum();
            assert_eq!(total, binomial(a as i64 + 5, 5));
        }
    }
}

//! Invariant dimensions in the `K_H`-types `V(nω)` of the minimal
//! representation: under `K̃` (compared with `S^n(𝔭')`, `dim 𝔭' = 8`) and
//! under `K' = SU(2)_l × SU(2)_s` (closed forms for `E6` and `E7`).
//!
//! Each quantity is available in up to three independent ways: a closed
//! binomial formula, the case algorithm built from the branching rules, and
//! a brute-force character restriction.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::binomial;
use crate::branching::{
    branch_gl_to_gl_gl, branch_sp8_mintype_su2l, branch_sp_to_gl, branch_spin_to_gl,
    branch_su8_mintype_su2l, branch_vn0_to_sp6, gl_to_sp_map, interlacing_count,
    interlacings_below, o3_invariant_profile, su6_tuple, GlTuple,
};
use crate::characters::{
    irreducible_character, restrict_character, Coords, Decomposition, Group, LatticeMap,
};
use crate::error::{Error, Result};
use crate::root::{CartanType, RootSystem, Series, Weight};

/// `n ≥ a_1 ≥ … ≥ a_7 ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NString {
    n: u32,
    entries: [u32; 7],
}

impl NString {
    pub fn new(n: u32, entries: [u32; 7]) -> Result<Self> {
        let ok = entries[0] <= n && entries.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(NString { n, entries })
        } else {
            Err(Error::InvalidInput(format!("{entries:?} is not a {n}-string")))
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[u32; 7] {
        &self.entries
    }

    /// Exponents of the monomial `x_1^{n-a_1} x_2^{a_1-a_2} ⋯ x_8^{a_7}`.
    pub fn monomial(&self) -> [u32; 8] {
        let mut out = [0; 8];
        let mut prev = self.n;
        for (i, &a) in self.entries.iter().enumerate() {
            out[i] = prev - a;
            prev = a;
        }
        out[7] = prev;
        out
    }
}

/// Calls `f` on every `n`-string in decreasing lexicographic order.
pub fn for_each_n_string(n: u32, mut f: impl FnMut(&NString)) {
    fn go(depth: usize, cap: u32, cur: &mut NString, f: &mut impl FnMut(&NString)) {
        if depth == 7 {
            f(cur);
            return;
        }
        for a in (0..=cap).rev() {
            cur.entries[depth] = a;
            go(depth + 1, a, cur, f);
        }
    }
    let mut cur = NString { n, entries: [0; 7] };
    go(0, n, &mut cur, &mut f);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NStringCount {
    pub enumerated: u64,
    pub closed: BigInt,
}

/// The number of `n`-strings, by enumeration and as `C(n+7, 7)`.
pub fn n_string_count(n: u32) -> NStringCount {
    let mut enumerated = 0u64;
    for_each_n_string(n, |_| enumerated += 1);
    let closed = binomial(n as i64 + 7, 7);
    assert_eq!(BigInt::from(enumerated), closed, "n-string count for n = {n}");
    NStringCount { enumerated, closed }
}

/// `dim S^n(ℂ^d) = C(n+d-1, d-1)`, zero for negative `n`.
pub fn sym_power_dim(d: u32, n: i64) -> BigInt {
    if n < 0 || d == 0 {
        return BigInt::from(u8::from(n == 0));
    }
    binomial(n + d as i64 - 1, d as i64 - 1)
}

/// One of the three ambient groups `E6`, `E7`, `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DualPairCase {
    E6,
    E7,
    E8,
}

impl DualPairCase {
    pub const ALL: [DualPairCase; 3] = [DualPairCase::E6, DualPairCase::E7, DualPairCase::E8];

    pub fn label(self) -> &'static str {
        match self {
            DualPairCase::E6 => "E6",
            DualPairCase::E7 => "E7",
            DualPairCase::E8 => "E8",
        }
    }

    /// Type of (the double cover of) `K_H`: `C4`, `A7`, `D8`.
    pub fn kh_type(self) -> CartanType {
        let (s, r) = match self {
            DualPairCase::E6 => (Series::C, 4),
            DualPairCase::E7 => (Series::A, 7),
            DualPairCase::E8 => (Series::D, 8),
        };
        CartanType::new(s, r).expect("valid type")
    }

    /// `ω` in ε-coordinates: `ω_4`, `ω_4` (as a `GL8` tuple), `ω_8`.
    pub fn omega(self) -> Weight {
        match self {
            DualPairCase::E6 => Weight::from_ints(&[1, 1, 1, 1]),
            DualPairCase::E7 => Weight::from_ints(&[1, 1, 1, 1, 0, 0, 0, 0]),
            DualPairCase::E8 => Weight::from_fraction(&[1; 8], 2),
        }
    }

    /// The node of `K_H` whose fundamental weight is `ω`.
    pub fn omega_node(self) -> usize {
        match self {
            DualPairCase::E8 => 8,
            _ => 4,
        }
    }

    pub fn kh_group(self) -> Arc<Group> {
        Arc::new(Group::simple(self.kh_type()).expect("valid group"))
    }

    /// Doubled coordinates of `nω`.
    pub fn min_type(self, n: u32) -> Coords {
        let w = self.omega().doubled().expect("half-integral");
        w.iter().map(|&x| x as i32 * n as i32).collect()
    }

    /// `K_H`-weights to `SU(2)_l × SU(2)_s` weights.
    pub fn kprime_map(self) -> LatticeMap {
        let images: Vec<Vec<i64>> = match self {
            DualPairCase::E6 => vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![0, 1]],
            DualPairCase::E7 | DualPairCase::E8 => vec![
                vec![1, 0],
                vec![-1, 0],
                vec![0, 1],
                vec![0, -1],
                vec![0, 1],
                vec![0, -1],
                vec![0, 1],
                vec![0, -1],
            ],
        };
        LatticeMap::from_images(2, &images).expect("valid images")
    }

    pub fn kprime_group() -> Arc<Group> {
        let su2 = Group::su2();
        Arc::new(Group::product(&[&su2, &su2]))
    }

    /// The subgroup of `K̃` that the restriction oracle sees, and the map
    /// onto its weights: `SO3 × {±1} ⊂ O3` as `SU2 × T1`, `ΔGL3`, and
    /// `SL2 × Sp6`.
    fn ktilde_target(self) -> Result<(Arc<Group>, LatticeMap)> {
        match self {
            DualPairCase::E6 => {
                let g = Arc::new(Group::product(&[&Group::su2(), &Group::torus(1)]));
                let map = LatticeMap::from_integer_rows(4, &[vec![2, 0, -2, 0], vec![1, 1, 1, 0]])?;
                Ok((g, map))
            }
            DualPairCase::E7 => {
                let rows: Vec<Vec<i64>> = (0..3)
                    .map(|j| {
                        let mut row = vec![0; 8];
                        row[j] += 1;
                        row[3] -= 1;
                        row[4 + j] += 1;
                        row[7] -= 1;
                        row
                    })
                    .collect();
                Ok((Arc::new(Group::gl(3)), LatticeMap::from_integer_rows(8, &rows)?))
            }
            DualPairCase::E8 => {
                let sp6 = Group::simple(CartanType::new(Series::C, 3)?)?;
                let g = Arc::new(Group::product(&[&Group::su2(), &sp6]));
                let mut images = vec![vec![1, 0, 0, 0], vec![-1, 0, 0, 0]];
                for j in 0..6 {
                    let mut row = vec![0; 4];
                    row[1 + j / 2] = if j % 2 == 0 { 1 } else { -1 };
                    images.push(row);
                }
                Ok((g, LatticeMap::from_images(4, &images)?))
            }
        }
    }
}

impl fmt::Display for DualPairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for DualPairCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "E6" => Ok(DualPairCase::E6),
            "E7" => Ok(DualPairCase::E7),
            "E8" => Ok(DualPairCase::E8),
            _ => Err(Error::InvalidInput(format!("unknown case `{s}`"))),
        }
    }
}

/// Number of `GL3` constituents `W ⊂ V(nω)|_{GL3}` whose `SO3`-invariant
/// line carries `det^parity`, via `Sp8 ⊃ GL4 ⊃ GL3`.
pub fn e6_o3_eigenspace_count(n: u32, parity: u8) -> BigInt {
    let mut count = 0u64;
    for lambda in branch_sp_to_gl(4, n) {
        for w in interlacings_below(&lambda) {
            let abc = w.ints().expect("integral tuple");
            let p = o3_invariant_profile(abc[0], abc[1], abc[2]).expect("dominant");
            if p.so3_invariant && p.det_power_parity == parity {
                count += 1;
            }
        }
    }
    BigInt::from(count)
}

fn total(t: &GlTuple) -> i32 {
    t.doubled().iter().sum::<i32>() / 2
}

/// `ΔGL3 ⊂ GL3² ⊂ SL4² ⊂ SL8`, counted constituent by constituent.
fn e7_ktilde_case(n: u32) -> BigInt {
    let mut count = 0u64;
    for (lambda, mu) in branch_gl_to_gl_gl(4, n) {
        for nu in interlacings_below(&lambda) {
            // GL3 sits in SL4 as diag(g, det g^{-1}), so the GL3 weight of
            // the constituent ν of V(λ) is ν - (|λ| - |ν|).
            let shift = total(&lambda) - total(&nu);
            let twisted: Vec<i32> = nu.ints().unwrap().iter().map(|x| x - shift).collect();
            // ΔGL3-invariants in W ⊗ W' need W' = W*, i.e. the twisted weight
            // of the partner is -reverse(twisted). Undo the twist for μ.
            let dual: Vec<i32> = twisted.iter().rev().map(|x| -x).collect();
            let gap = total(&mu) - dual.iter().sum::<i32>();
            if gap % 4 != 0 {
                continue;
            }
            let s = gap / 4;
            let Ok(partner) = GlTuple::from_ints(&dual.iter().map(|x| x + s).collect::<Vec<_>>())
            else {
                continue;
            };
            count += interlacing_count(&mu, &partner).expect("lengths 4 and 3") as u64;
        }
    }
    BigInt::from(count)
}

/// `SL2 × Sp6 ⊂ GL~2 × GL~6 ⊂ GL~8 ⊂ Spin16`.
fn e8_ktilde_case(n: u32) -> BigInt {
    let mut count = 0u64;
    for lambda in branch_spin_to_gl(4, n) {
        let distinct: Vec<i32> = lambda.doubled().iter().step_by(2).copied().collect();
        let upper = GlTuple::from_doubled(distinct).expect("decreasing");
        for abc in interlacings_below(&upper) {
            // W = V(d, d) ⊗ V(a, a, b, b, c, c) with d fixed by the total;
            // both factors have the Cartan–Helgason shape, so each
            // interlacing contributes one invariant.
            let paired: Vec<i32> = abc.doubled().iter().flat_map(|&x| [x, x]).collect();
            let d2 = lambda.doubled().iter().sum::<i32>() - paired.iter().sum::<i32>();
            debug_assert!(d2 % 2 == 0);
            count += 1;
        }
    }
    BigInt::from(count)
}

/// `dim V(nω)^{K̃}` by the case algorithm.
pub fn dim_invariants_ktilde(case: DualPairCase, n: u32) -> BigInt {
    match case {
        DualPairCase::E6 => e6_o3_eigenspace_count(n, (n % 2) as u8),
        DualPairCase::E7 => e7_ktilde_case(n),
        DualPairCase::E8 => e8_ktilde_case(n),
    }
}

fn restrict_min_type(case: DualPairCase, n: u32, map: &LatticeMap, target: &Arc<Group>) -> Result<Decomposition> {
    let c = irreducible_character(&case.kh_group(), &case.min_type(n))?;
    restrict_character(&c, map, target)?.decompose()
}

/// `dim V(nω)^{K̃}` by restricting the character of `V(nω)`.
pub fn dim_invariants_ktilde_oracle(case: DualPairCase, n: u32) -> Result<BigInt> {
    ktilde_oracle_with_parity(case, n, (n % 2) as u8)
}

/// For `E6`, the dimension of the subspace of `V(nω)` on which `O3` acts by
/// `det^parity`; for the other cases `parity` is ignored.
pub fn ktilde_oracle_with_parity(case: DualPairCase, n: u32, parity: u8) -> Result<BigInt> {
    let (target, map) = case.ktilde_target()?;
    let d = restrict_min_type(case, n, &map, &target)?;
    Ok(match case {
        DualPairCase::E6 => d
            .parts()
            .iter()
            .filter(|(w, _)| w[0] == 0 && (w[1] / 2).rem_euclid(2) == parity as i32)
            .map(|(_, m)| m.clone())
            .sum(),
        DualPairCase::E7 | DualPairCase::E8 => d.invariant_dim(),
    })
}

/// `C(a+5,5) C(b+5,5) - C(a+3,5) C(b+3,5)`.
pub fn su2s_invariants_closed(a: u32, b: u32) -> BigInt {
    let (a, b) = (a as i64, b as i64);
    binomial(a + 5, 5) * binomial(b + 5, 5) - binomial(a + 3, 5) * binomial(b + 3, 5)
}

/// `ℂ⁶ = ℂ² ⊗ ℂ³`: odd coordinates to `+1`, even to `-1` on the diagonal
/// `SU2`.
pub fn su2s_map() -> LatticeMap {
    let images: Vec<Vec<i64>> = (0..6).map(|j| vec![if j % 2 == 0 { 1 } else { -1 }]).collect();
    LatticeMap::from_images(1, &images).expect("valid images")
}

/// `dim V_{a,b}^{SU(2)_s}` by restriction of the `SU6` character.
pub fn su2s_invariants_oracle(a: u32, b: u32) -> Result<BigInt> {
    let gl6 = Arc::new(Group::gl(6));
    let c = irreducible_character(&gl6, &su6_tuple(a, b).to_coords())?;
    let target = Arc::new(Group::su2());
    Ok(restrict_character(&c, &su2s_map(), &target)?.decompose()?.invariant_dim())
}

/// `SU(2)_s`-invariants of the `Sp6`-module `V(c, c, 0)`, by restriction
/// along `Sp6 ⊃ SU2³ ⊃ SU(2)_s`.
pub fn sp6_su2s_invariants_oracle(c: u32) -> Result<BigInt> {
    let sp6 = Arc::new(Group::simple(CartanType::new(Series::C, 3)?)?);
    let hw = branch_sp8_mintype_su2l(c).to_coords();
    let ch = irreducible_character(&sp6, &hw)?;
    let map = LatticeMap::from_images(1, &[vec![1], vec![1], vec![1]])?;
    Ok(restrict_character(&ch, &map, &Arc::new(Group::su2()))?.decompose()?.invariant_dim())
}

/// Consistency of the two `SU6 ⊃ Sp6 ⊃ SU2` restrictions: `gl_to_sp_map`
/// followed by the diagonal map equals `su2s_map`.
pub fn su2s_factors_through_sp6() -> Result<bool> {
    let composite = gl_to_sp_map(3)?.then(&LatticeMap::from_images(1, &[vec![1], vec![1], vec![1]])?)?;
    Ok(composite == su2s_map())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    Closed,
    Chain,
    Oracle,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Chain => "chain",
            Method::Oracle => "oracle",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "chain" => Ok(Method::Chain),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::InvalidInput(format!("unknown method `{s}`"))),
        }
    }
}

/// `SU(2)_s`-invariants of the `Sp6`-modules `V(c, c, 0)` for `c ≤ n`,
/// solved from `V_{c,0}|_{Sp6} = ⊕_{c' ≤ c} V(c', c', 0)`.
pub fn sp6_chain_invariants(n: u32) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(n as usize + 1);
    for c in 0..=n {
        let whole = su2s_invariants_closed(c, 0);
        let lower: BigInt = branch_vn0_to_sp6(c)
            .iter()
            .filter(|t| *t != &branch_sp8_mintype_su2l(c))
            .map(|t| out[(t.doubled()[0] / 2) as usize].clone())
            .sum();
        out.push(whole - lower);
    }
    out
}

/// `dim V(nω)^{K'}`.
pub fn dim_invariants_kprime(case: DualPairCase, n: u32, method: Method) -> Result<BigInt> {
    let n64 = n as i64;
    match (case, method) {
        (DualPairCase::E8, Method::Closed | Method::Chain) => Err(Error::Unsupported(
            "no closed form or chain rule is known for E8; use the oracle".into(),
        )),
        (DualPairCase::E6, Method::Closed) => Ok(sym_power_dim(5, n64)),
        (DualPairCase::E7, Method::Closed) => Ok(sym_power_dim(12, n64) - sym_power_dim(12, n64 - 4)),
        (DualPairCase::E6, Method::Chain) => {
            Ok(sp6_chain_invariants(n).pop().expect("non-empty"))
        }
        (DualPairCase::E7, Method::Chain) => Ok(branch_su8_mintype_su2l(n)
            .into_iter()
            .map(|(a, b)| su2s_invariants_closed(a, b))
            .sum()),
        (_, Method::Oracle) => {
            let d = restrict_min_type(case, n, &case.kprime_map(), &DualPairCase::kprime_group())?;
            Ok(d.invariant_dim())
        }
    }
}

/// `ω` agrees with the fundamental weight of `K_H` (up to the trace for
/// `A7`).
pub fn omega_matches_table(case: DualPairCase) -> Result<bool> {
    let rs = RootSystem::new(case.kh_type());
    let fundamental = rs.fundamental_weight(case.omega_node())?;
    Ok(rs.dynkin_labels(&case.omega())? == rs.dynkin_labels(fundamental)?)
}

/// `Σ_{c ≤ n}` of the `Sp6` chain values equals the `V_{n,0}` value.
pub fn telescopes(n: u32) -> bool {
    let parts: BigInt = sp6_chain_invariants(n).into_iter().sum();
    parts == su2s_invariants_closed(n, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn n_strings() {
        assert_eq!(n_string_count(0).enumerated, 1);
        assert_eq!(n_string_count(1).enumerated, 8);
        assert_eq!(n_string_count(3).enumerated, 120);
        let s = NString::new(3, [3, 2, 2, 1, 0, 0, 0]).unwrap();
        assert_eq!(s.monomial(), [0, 1, 0, 1, 1, 0, 0, 0]);
        assert_eq!(s.monomial().iter().sum::<u32>(), 3);
        assert!(NString::new(2, [3, 0, 0, 0, 0, 0, 0]).is_err());
        assert!(NString::new(2, [1, 2, 0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn sym_power_dims() {
        assert_eq!(sym_power_dim(8, 2), BigInt::from(36));
        assert_eq!(sym_power_dim(5, 1), BigInt::from(5));
        assert_eq!(sym_power_dim(12, 4), BigInt::from(1365));
        assert_eq!(sym_power_dim(12, -1), BigInt::zero());
        assert_eq!(sym_power_dim(3, 0), BigInt::from(1));
    }

    #[test]
    fn table_omegas() {
        for case in DualPairCase::ALL {
            assert!(omega_matches_table(case).unwrap(), "{case}");
        }
        let dims: Vec<BigInt> = DualPairCase::ALL
            .iter()
            .map(|c| c.kh_group().weyl_dim(&c.min_type(1)).unwrap())
            .collect();
        assert_eq!(dims, vec![BigInt::from(42), BigInt::from(70), BigInt::from(128)]);
    }

    #[test]
    fn ktilde_case_algorithms_small() {
        for case in DualPairCase::ALL {
            assert_eq!(dim_invariants_ktilde(case, 0), BigInt::from(1), "{case}");
            for n in 0..=4 {
                assert_eq!(dim_invariants_ktilde(case, n), binomial(n as i64 + 7, 7), "{case} n={n}");
            }
        }
        assert_eq!(dim_invariants_ktilde(DualPairCase::E6, 1), BigInt::from(8));
        assert_eq!(dim_invariants_ktilde(DualPairCase::E8, 2), BigInt::from(36));
    }

    #[test]
    fn ktilde_oracle_agrees_for_small_n() {
        for case in DualPairCase::ALL {
            for n in 0..=2 {
                assert_eq!(
                    dim_invariants_ktilde_oracle(case, n).unwrap(),
                    dim_invariants_ktilde(case, n),
                    "{case} n={n}"
                );
            }
        }
    }

    #[test]
    fn e6_wrong_parity_is_a_different_count() {
        for n in 0..=3u32 {
            let wrong = (1 - n % 2) as u8;
            let case_count = e6_o3_eigenspace_count(n, wrong);
            assert_eq!(case_count, ktilde_oracle_with_parity(DualPairCase::E6, n, wrong).unwrap());
            if n > 0 {
                assert_ne!(case_count, binomial(n as i64 + 7, 7));
            }
        }
    }

    #[test]
    fn lemma_values() {
        assert_eq!(su2s_invariants_closed(0, 0), BigInt::from(1));
        assert_eq!(su2s_invariants_closed(1, 0), BigInt::from(6));
        assert_eq!(su2s_invariants_closed(1, 1), BigInt::from(36));
        assert_eq!(su2s_invariants_closed(2, 2), BigInt::from(440));
        assert_eq!(su2s_invariants_oracle(0, 0).unwrap(), BigInt::from(1));
        assert_eq!(su2s_invariants_oracle(1, 0).unwrap(), BigInt::from(6));
        assert_eq!(su2s_invariants_oracle(0, 1).unwrap(), BigInt::from(6));
        assert_eq!(su2s_invariants_oracle(1, 1).unwrap(), BigInt::from(36));
        assert!(su2s_factors_through_sp6().unwrap());
    }

    #[test]
    fn kprime_methods_agree_small() {
        assert_eq!(
            dim_invariants_kprime(DualPairCase::E6, 2, Method::Closed).unwrap(),
            BigInt::from(15)
        );
        assert_eq!(
            dim_invariants_kprime(DualPairCase::E7, 4, Method::Closed).unwrap(),
            BigInt::from(1364)
        );
        for case in [DualPairCase::E6, DualPairCase::E7] {
            for n in 0..=3 {
                let closed = dim_invariants_kprime(case, n, Method::Closed).unwrap();
                assert_eq!(dim_invariants_kprime(case, n, Method::Chain).unwrap(), closed);
                assert_eq!(dim_invariants_kprime(case, n, Method::Oracle).unwrap(), closed);
            }
        }
        assert!(matches!(
            dim_invariants_kprime(DualPairCase::E8, 1, Method::Closed),
            Err(Error::Unsupported(_))
        ));
        assert!(dim_invariants_kprime(DualPairCase::E8, 1, Method::Oracle).is_ok());
    }

    #[test]
    fn telescoping_and_sp6_oracle() {
        for n in 0..=4 {
            assert!(telescopes(n));
        }
        let chain = sp6_chain_invariants(3);
        for (c, v) in chain.iter().enumerate() {
            assert_eq!(&sp6_su2s_invariants_oracle(c as u32).unwrap(), v, "c={c}");
        }
    }
}

//! Root systems of the simple types, realized in their standard orthogonal
//! (ε) coordinates with Bourbaki node numbering.
//!
//! Everything here is exact: coordinates are `Rational64`, dimensions are
//! `BigInt`. The realizations are
//!
//! | type | ambient | simple roots |
//! |------|---------|--------------|
//! | A_n  | n+1     | e_i - e_{i+1} |
//! | B_n  | n       | e_i - e_{i+1}, e_n |
//! | C_n  | n       | e_i - e_{i+1}, 2e_n |
//! | D_n  | n       | e_i - e_{i+1}, e_{n-1} + e_n |
//! | E_n  | 8       | ½(1,-1,…,-1,1), e_1+e_2, e_2-e_1, …, e_{n-1}-e_{n-2} |
//! | F_4  | 4       | e_2-e_3, e_3-e_4, e_4, ½(e_1-e_2-e_3-e_4) |
//! | G_2  | 3       | e_1-e_2, -2e_1+e_2+e_3 |
//!
//! Type A weights may be given as GL-style tuples; pairings with coroots
//! ignore the trace.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// A Cartan type such as `E8` or `C4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A | Series::B | Series::C => rank >= 1,
            Series::D => rank >= 2,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::InvalidRank {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ε-space the roots live in.
    pub fn ambient_dim(&self) -> usize {
        match self.series {
            Series::A => self.rank + 1,
            Series::B | Series::C | Series::D => self.rank,
            Series::E => 8,
            Series::F => 4,
            Series::G => 3,
        }
    }

    /// Number of positive roots, from the classical formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.series, n) {
            (Series::A, _) => n * (n + 1) / 2,
            (Series::B, _) | (Series::C, _) => n * n,
            (Series::D, _) => n * (n - 1),
            (Series::E, 6) => 36,
            (Series::E, 7) => 63,
            (Series::E, _) => 120,
            (Series::F, _) => 24,
            (Series::G, _) => 6,
        }
    }

    /// Dimension of the simple Lie algebra.
    pub fn lie_algebra_dim(&self) -> usize {
        2 * self.positive_root_count() + self.rank
    }

    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.series, self.rank) {
            (Series::A, _) => fact(n + 1),
            (Series::B, _) | (Series::C, _) => (1u128 << n) * fact(n),
            (Series::D, _) => (1u128 << (n - 1)) * fact(n),
            (Series::E, 6) => 51_840,
            (Series::E, 7) => 2_903_040,
            (Series::E, _) => 696_729_600,
            (Series::F, _) => 1_152,
            (Series::G, _) => 12,
        }
    }

    /// All valid types of a given rank, in a fixed order.
    pub fn all_of_rank(rank: usize) -> Vec<CartanType> {
        [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ]
        .into_iter()
        .filter_map(|s| CartanType::new(s, rank).ok())
        .collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('E') => Series::E,
            Some('F') => Series::F,
            Some('G') => Series::G,
            _ => return Err(Error::UnknownCartanType(s.to_string())),
        };
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::UnknownCartanType(s.to_string()))?;
        CartanType::new(series, rank)
    }
}

/// A vector in the ambient ε-space with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational64>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational64::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    /// Coordinates given as numerators over a common denominator.
    pub fn from_fraction(numerators: &[i64], denominator: i64) -> Self {
        Weight(
            numerators
                .iter()
                .map(|&c| Rational64::new(c, denominator))
                .collect(),
        )
    }

    pub fn from_rationals(coords: Vec<Rational64>) -> Self {
        Weight(coords)
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Weight::zero(dim);
        w.0[i] = Rational64::one();
        w
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Standard Euclidean inner product of the ε-basis.
    pub fn dot(&self, other: &Weight) -> Result<Rational64> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(Rational64::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn scale(&self, k: Rational64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Coordinates multiplied by two, if they are all integers afterwards.
    pub fn doubled(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|c| {
                let d = c * Rational64::from_integer(2);
                if d.is_integer() {
                    Ok(d.to_integer())
                } else {
                    Err(Error::NotHalfIntegral(self.to_string()))
                }
            })
            .collect()
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimensions differ");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.dim(), rhs.dim(), "weight dimensions differ");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Positive roots as coefficient vectors in the simple-root basis.
///
/// `cartan[i][j]` is `<α_i, α_j^∨>`. Roots are generated level by level with
/// the string rule `p - q = -<β, α_i^∨>`. Block-diagonal matrices (products)
/// are fine.
pub(crate) fn positive_root_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let unit = |i: usize| {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        v
    };
    let mut all: Vec<Vec<i64>> = (0..rank).map(unit).collect();
    let mut seen: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut level: Vec<Vec<i64>> = all.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..rank {
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                let mut q = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if seen.contains(&probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// Gauss-Jordan inverse of a square rational matrix.
pub(crate) fn invert(matrix: &[Vec<Rational64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational64>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= factor * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn simple_roots(t: CartanType) -> Vec<Weight> {
    let n = t.rank();
    let dim = t.ambient_dim();
    let e = |i: usize| Weight::unit(dim, i);
    let diff = |i: usize, j: usize| &e(i) - &e(j);
    match t.series() {
        Series::A => (0..n).map(|i| diff(i, i + 1)).collect(),
        Series::B | Series::C | Series::D => {
            let mut roots: Vec<Weight> = (0..n.saturating_sub(1)).map(|i| diff(i, i + 1)).collect();
            roots.push(match t.series() {
                Series::B => e(n - 1),
                Series::C => e(n - 1).scale(Rational64::from_integer(2)),
                _ => &e(n - 2) + &e(n - 1),
            });
            roots
        }
        Series::E => {
            let mut roots = vec![
                Weight::from_fraction(&[1, -1, -1, -1, -1, -1, -1, 1], 2),
                &e(0) + &e(1),
            ];
            roots.extend((0..n - 2).map(|i| diff(i + 1, i)));
            roots
        }
        Series::F => vec![
            diff(1, 2),
            diff(2, 3),
            e(3),
            Weight::from_fraction(&[1, -1, -1, -1], 2),
        ],
        Series::G => vec![Weight::from_ints(&[1, -1, 0]), Weight::from_ints(&[-2, 1, 1])],
    }
}

/// A root system with its fundamental weights, coweights and ρ.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_coefficients: Vec<Vec<i64>>,
    cartan_matrix: Vec<Vec<i64>>,
    fundamental_weights: Vec<Weight>,
    fundamental_coweights: Vec<Weight>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let simple = simple_roots(cartan_type);
        let rank = simple.len();
        let two = Rational64::from_integer(2);
        let norms: Vec<Rational64> = simple.iter().map(|a| a.dot(a).unwrap()).collect();
        let cartan_matrix: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = two * simple[i].dot(&simple[j]).unwrap() / norms[j];
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let positive_coefficients = positive_root_coefficients(&cartan_matrix);
        let combine = |coeffs: &[Rational64]| {
            coeffs
                .iter()
                .zip(&simple)
                .fold(Weight::zero(cartan_type.ambient_dim()), |acc, (c, a)| {
                    &acc + &a.scale(*c)
                })
        };
        let positive_roots: Vec<Weight> = positive_coefficients
            .iter()
            .map(|c| {
                let c: Vec<Rational64> = c.iter().map(|&x| Rational64::from_integer(x)).collect();
                combine(&c)
            })
            .collect();

        // ω_i = Σ_k (C^{-1})_{ik} α_k where α_i = Σ_k C_{ik} ω_k.
        let c_rat: Vec<Vec<Rational64>> = cartan_matrix
            .iter()
            .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        let c_inv = invert(&c_rat).expect("Cartan matrix is invertible");
        let fundamental_weights: Vec<Weight> = c_inv.iter().map(|row| combine(row)).collect();
        let fundamental_coweights: Vec<Weight> = fundamental_weights
            .iter()
            .zip(&norms)
            .map(|(w, n)| w.scale(two / n))
            .collect();
        let half = Rational64::new(1, 2);
        let rho = positive_roots
            .iter()
            .fold(Weight::zero(cartan_type.ambient_dim()), |acc, a| &acc + a)
            .scale(half);

        RootSystem {
            cartan_type,
            simple_roots: simple,
            positive_roots,
            positive_coefficients,
            cartan_matrix,
            fundamental_weights,
            fundamental_coweights,
            rho,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.cartan_type.ambient_dim()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots expanded in the simple-root basis, aligned with
    /// [`RootSystem::positive_roots`].
    pub fn positive_root_coefficients(&self) -> &[Vec<i64>] {
        &self.positive_coefficients
    }

    /// `cartan_matrix()[i][j] = <α_i, α_j^∨>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// Fundamental weights `ω_i` (node `i + 1` in Bourbaki numbering).
    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn fundamental_weight(&self, node: usize) -> Result<&Weight> {
        self.node_index(node).map(|i| &self.fundamental_weights[i])
    }

    /// Fundamental coweights `ω_i^∨`, dual to the simple roots.
    pub fn fundamental_coweights(&self) -> &[Weight] {
        &self.fundamental_coweights
    }

    pub fn fundamental_coweight(&self, node: usize) -> Result<&Weight> {
        self.node_index(node).map(|i| &self.fundamental_coweights[i])
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    fn node_index(&self, node: usize) -> Result<usize> {
        if node >= 1 && node <= self.rank() {
            Ok(node - 1)
        } else {
            Err(Error::InvalidInput(format!(
                "node {node} out of range for {}",
                self.cartan_type
            )))
        }
    }

    /// The invariant form; in ε-coordinates this is the dot product.
    pub fn form(&self, a: &Weight, b: &Weight) -> Result<Rational64> {
        check_dim(self.ambient_dim(), a.dim())?;
        a.dot(b)
    }

    /// Pairing of a weight with a coweight.
    pub fn pair(&self, weight: &Weight, coweight: &Weight) -> Result<Rational64> {
        check_dim(self.ambient_dim(), weight.dim())?;
        check_dim(self.ambient_dim(), coweight.dim())?;
        weight.dot(coweight)
    }

    pub fn coroot(&self, root: &Weight) -> Weight {
        let norm = root.dot(root).unwrap();
        root.scale(Rational64::from_integer(2) / norm)
    }

    /// `<w, α_i^∨>` for every simple root.
    pub fn dynkin_labels(&self, w: &Weight) -> Result<Vec<Rational64>> {
        check_dim(self.ambient_dim(), w.dim())?;
        Ok(self
            .simple_roots
            .iter()
            .map(|a| w.dot(&self.coroot(a)).unwrap())
            .collect())
    }

    /// Dominant and integral: every Dynkin label is a non-negative integer.
    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        Ok(self
            .dynkin_labels(w)?
            .iter()
            .all(|l| l.is_integer() && !l.is_negative()))
    }

    /// Coefficients of `w` along the simple roots, `<w, ω_i^∨>`.
    pub fn simple_root_coordinates(&self, w: &Weight) -> Result<Vec<Rational64>> {
        self.fundamental_coweights
            .iter()
            .map(|c| self.pair(w, c))
            .collect()
    }

    /// Weyl dimension formula `Π <λ+ρ, α^∨> / <ρ, α^∨>`.
    pub fn weyl_dim(&self, hw: &Weight) -> Result<BigInt> {
        if !self.is_dominant(hw)? {
            return Err(Error::NotDominant(hw.to_string()));
        }
        let shifted = hw + &self.rho;
        let mut acc = BigRational::one();
        for alpha in &self.positive_roots {
            let num = shifted.dot(alpha)?;
            let den = self.rho.dot(alpha)?;
            let factor = num / den;
            acc *= BigRational::new(BigInt::from(*factor.numer()), BigInt::from(*factor.denom()));
        }
        debug_assert!(acc.is_integer());
        Ok(acc.to_integer())
    }

    /// Height of a root-lattice element, i.e. the sum of its simple-root
    /// coefficients.
    pub fn height(&self, w: &Weight) -> Result<Rational64> {
        Ok(self
            .simple_root_coordinates(w)?
            .into_iter()
            .fold(Rational64::zero(), |a, b| a + b))
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(CartanType::new(Series::E, 5).is_err());
        assert!(CartanType::new(Series::F, 3).is_err());
        assert!(CartanType::new(Series::D, 1).is_err());
        assert!("X3".parse::<CartanType>().is_err());
    }

    #[test]
    fn positive_root_counts() {
        for t in ["A1", "A7", "B3", "C4", "D2", "D8", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            assert_eq!(
                r.positive_roots().len(),
                r.cartan_type().positive_root_count(),
                "{t}"
            );
        }
        assert_eq!(rs("E8").positive_roots().len(), 120);
        assert_eq!(rs("G2").positive_roots().len(), 6);
    }

    #[test]
    fn coweights_are_dual_to_simple_roots() {
        for t in ["A3", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            for (i, c) in r.fundamental_coweights().iter().enumerate() {
                for (j, a) in r.simple_roots().iter().enumerate() {
                    let expected = if i == j { 1 } else { 0 };
                    assert_eq!(r.pair(a, c).unwrap(), Rational64::from_integer(expected));
                }
            }
        }
    }

    #[test]
    fn rho_is_sum_of_fundamental_weights() {
        for t in ["A4", "B3", "C4", "D8", "E6", "E8", "F4", "G2"] {
            let r = rs(t);
            let sum = r
                .fundamental_weights()
                .iter()
                .fold(Weight::zero(r.ambient_dim()), |a, w| &a + w);
            assert_eq!(&sum, r.rho(), "{t}");
            for l in r.dynkin_labels(r.rho()).unwrap() {
                assert_eq!(l, Rational64::one());
            }
        }
    }

    #[test]
    fn c4_omega4_coordinates() {
        let r = rs("C4");
        assert_eq!(r.fundamental_weight(4).unwrap(), &Weight::from_ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn d8_omega8_is_half_spin() {
        let r = rs("D8");
        assert_eq!(
            r.fundamental_weight(8).unwrap(),
            &Weight::from_fraction(&[1; 8], 2)
        );
    }

    #[test]
    fn rho_pairings_in_a1() {
        let r = rs("A1");
        let c = r.fundamental_coweight(1).unwrap();
        assert_eq!(r.pair(r.rho(), c).unwrap(), Rational64::new(1, 2));
        let a = r.coroot(&r.simple_roots()[0]);
        assert_eq!(r.pair(r.rho(), &a).unwrap(), Rational64::one());
    }

    #[test]
    fn e6_branch_weight_pairing_matches_inverse_cartan() {
        // Oracle: solve C^T x = e_b for the simple-root expansion of ω_b by
        // plain elimination, independent of the stored weights.
        let r = rs("E6");
        let c: Vec<Vec<Rational64>> = r
            .cartan_matrix()
            .iter()
            .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        // E6 is simply laced so C is symmetric and ω_b = Σ (C^{-1})_{bk} α_k.
        let inv = invert(&c).unwrap();
        for b in [2usize, 4] {
            let wb = r.fundamental_weight(b).unwrap();
            let coords = r.simple_root_coordinates(wb).unwrap();
            assert_eq!(coords, inv[b - 1]);
        }
        let w4 = r.fundamental_weight(4).unwrap();
        let w2 = r.fundamental_weight(2).unwrap();
        let c1 = r.fundamental_coweight(1).unwrap();
        assert_eq!(r.pair(w4, c1).unwrap(), Rational64::from_integer(2));
        assert_eq!(r.pair(w2, c1).unwrap(), Rational64::from_integer(1));
    }

    #[test]
    fn weyl_dimensions() {
        let c4 = rs("C4");
        let w4 = c4.fundamental_weight(4).unwrap().clone();
        assert_eq!(c4.weyl_dim(&w4).unwrap(), BigInt::from(42));
        let a7 = rs("A7");
        let gl = Weight::from_ints(&[1, 1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(a7.weyl_dim(&gl).unwrap(), BigInt::from(70));
        let d8 = rs("D8");
        let w8 = d8.fundamental_weight(8).unwrap().clone();
        assert_eq!(d8.weyl_dim(&w8).unwrap(), BigInt::from(128));
        let e8 = rs("E8");
        let w8 = e8.fundamental_weight(8).unwrap().clone();
        assert_eq!(e8.weyl_dim(&w8).unwrap(), BigInt::from(248));
        let g2 = rs("G2");
        let w1 = g2.fundamental_weight(1).unwrap().clone();
        assert_eq!(g2.weyl_dim(&w1).unwrap(), BigInt::from(7));
    }

    #[test]
    fn non_dominant_weight_is_rejected() {
        let c4 = rs("C4");
        let w = Weight::from_ints(&[0, 1, 0, 0]);
        assert!(matches!(c4.weyl_dim(&w), Err(Error::NotDominant(_))));
        assert!(matches!(
            c4.weyl_dim(&Weight::from_ints(&[1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn branch_weight_reconstruction() {
        // Expressing ω_b in simple roots and pairing with ω_i^∨ gives back
        // the coefficients.
        for t in ["E6", "E7", "E8"] {
            let r = rs(t);
            let wb = r.fundamental_weight(4).unwrap();
            let coords = r.simple_root_coordinates(wb).unwrap();
            let rebuilt = coords
                .iter()
                .zip(r.simple_roots())
                .fold(Weight::zero(8), |acc, (c, a)| &acc + &a.scale(*c));
            assert_eq!(&rebuilt, wb);
        }
    }
}

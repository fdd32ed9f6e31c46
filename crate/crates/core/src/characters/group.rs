//! Reductive groups as character contexts.
//!
//! A [`Group`] is an ambient ε-space together with a set of simple roots.
//! Weights are stored with doubled coordinates (`Coords`), so half-integral
//! spin weights are plain integers. Simple roots may be empty (tori), and
//! products of groups are block sums, which makes `GL_m`, `SU2 × SU2`,
//! `SU2 × GL6` and friends first-class.

use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::root::{positive_root_coefficients, CartanType, RootSystem, Weight};

/// Doubled ε-coordinates of a weight.
pub type Coords = SmallVec<[i32; 16]>;

/// Dynkin labels `<w, α_i^∨>`.
pub type Labels = SmallVec<[i32; 16]>;

pub fn coords(values: &[i32]) -> Coords {
    Coords::from_slice(values)
}

/// Doubles integer coordinates: `(1,1,0)` becomes `[2,2,0]`.
pub fn from_ints(values: &[i32]) -> Coords {
    values.iter().map(|v| 2 * v).collect()
}

pub fn format_coords(c: &[i32]) -> String {
    let mut s = String::from("(");
    for (i, v) in c.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        if v % 2 == 0 {
            s.push_str(&(v / 2).to_string());
        } else {
            s.push_str(&format!("{v}/2"));
        }
    }
    s.push(')');
    s
}

fn dot(a: &[i32], b: &[i32]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| x as i64 * y as i64).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    name: String,
    dim: usize,
    simple: Vec<Coords>,
    simple_norm: Vec<i64>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Coords>,
    positive_labels: Vec<Labels>,
    rho4: Vec<i64>,
    weyl_order: u128,
}

impl Group {
    /// Builds a group from doubled simple roots in a `dim`-dimensional space.
    pub fn new(name: impl Into<String>, dim: usize, simple: Vec<Coords>) -> Result<Self> {
        let name = name.into();
        for a in &simple {
            if a.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: a.len(),
                });
            }
        }
        let simple_norm: Vec<i64> = simple.iter().map(|a| dot(a, a)).collect();
        let rank = simple.len();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let num = 2 * dot(&simple[i], &simple[j]);
                if num % simple_norm[j] != 0 {
                    return Err(Error::InvalidInput(format!(
                        "{name}: simple roots do not form a root basis"
                    )));
                }
                cartan[i][j] = num / simple_norm[j];
            }
        }
        let coefficients = positive_root_coefficients(&cartan);
        let positive: Vec<Coords> = coefficients
            .iter()
            .map(|c| {
                let mut v: Coords = SmallVec::from_elem(0, dim);
                for (k, &ck) in c.iter().enumerate() {
                    for (x, &a) in v.iter_mut().zip(&simple[k]) {
                        *x += ck as i32 * a;
                    }
                }
                v
            })
            .collect();
        let mut rho4 = vec![0i64; dim];
        for a in &positive {
            for (r, &x) in rho4.iter_mut().zip(a) {
                *r += x as i64;
            }
        }
        let mut group = Group {
            name,
            dim,
            simple,
            simple_norm,
            cartan,
            positive: Vec::new(),
            positive_labels: Vec::new(),
            rho4,
            weyl_order: 1,
        };
        group.positive_labels = positive.iter().map(|a| group.labels(a)).collect();
        group.positive = positive;
        group.weyl_order = group.parabolic_order(&(0..rank).collect::<Vec<_>>());
        Ok(group)
    }

    /// The simple group of the given Cartan type in its standard realization.
    pub fn simple(t: CartanType) -> Result<Self> {
        let rs = RootSystem::new(t);
        Self::from_root_system(&rs)
    }

    pub fn from_root_system(rs: &RootSystem) -> Result<Self> {
        let simple = rs
            .simple_roots()
            .iter()
            .map(|a| {
                a.doubled()
                    .map(|v| v.into_iter().map(|x| x as i32).collect::<Coords>())
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rs.cartan_type().to_string(), rs.ambient_dim(), simple)
    }

    /// `GL_m` acting on integer (or, for covers, half-integer) `m`-tuples.
    pub fn gl(m: usize) -> Self {
        let simple = (0..m.saturating_sub(1))
            .map(|i| {
                let mut v: Coords = SmallVec::from_elem(0, m);
                v[i] = 2;
                v[i + 1] = -2;
                v
            })
            .collect();
        Self::new(format!("GL{m}"), m, simple).expect("GL root basis")
    }

    /// `SU2` in its one-dimensional realization: the standard representation
    /// has weights `±1`, the root is `2`.
    pub fn su2() -> Self {
        Self::new("SU2", 1, vec![coords(&[4])]).expect("SU2 root basis")
    }

    pub fn torus(k: usize) -> Self {
        Self::new(format!("T{k}"), k, Vec::new()).expect("torus")
    }

    /// Block product; coordinates are concatenated in the given order.
    pub fn product(factors: &[&Group]) -> Self {
        let dim: usize = factors.iter().map(|g| g.dim).sum();
        let mut offset = 0;
        let mut simple = Vec::new();
        for g in factors {
            for a in &g.simple {
                let mut v: Coords = SmallVec::from_elem(0, dim);
                v[offset..offset + g.dim].copy_from_slice(a);
                simple.push(v);
            }
            offset += g.dim;
        }
        let name = factors
            .iter()
            .map(|g| g.name.as_str())
            .collect::<Vec<_>>()
            .join("×");
        Self::new(name, dim, simple).expect("product of root bases")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn simple_roots(&self) -> &[Coords] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Coords] {
        &self.positive
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// `4ρ` in ε-coordinates.
    pub fn rho4(&self) -> &[i64] {
        &self.rho4
    }

    pub fn zero(&self) -> Coords {
        SmallVec::from_elem(0, self.dim)
    }

    /// Converts a rational ε-weight into doubled coordinates.
    pub fn coords_of(&self, w: &Weight) -> Result<Coords> {
        if w.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.dim(),
            });
        }
        Ok(w.doubled()?.into_iter().map(|x| x as i32).collect())
    }

    pub fn weight_of(&self, c: &[i32]) -> Weight {
        Weight::from_rationals(c.iter().map(|&x| Rational64::new(x as i64, 2)).collect())
    }

    pub fn check_dim(&self, w: &[i32]) -> Result<()> {
        if w.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: w.len(),
            })
        }
    }

    /// Dynkin labels, assuming `w` is integral.
    pub fn labels(&self, w: &[i32]) -> Labels {
        self.simple
            .iter()
            .zip(&self.simple_norm)
            .map(|(a, &n)| {
                let num = 2 * dot(w, a);
                debug_assert!(num % n == 0, "non-integral weight {w:?} for {}", self.name);
                (num / n) as i32
            })
            .collect()
    }

    /// Dynkin labels, or `None` if `w` is not in the weight lattice.
    pub fn checked_labels(&self, w: &[i32]) -> Option<Labels> {
        self.simple
            .iter()
            .zip(&self.simple_norm)
            .map(|(a, &n)| {
                let num = 2 * dot(w, a);
                (num % n == 0).then_some((num / n) as i32)
            })
            .collect()
    }

    pub fn is_dominant(&self, w: &[i32]) -> bool {
        match self.checked_labels(w) {
            Some(l) => l.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// Ensures `w` is a dominant integral weight of this group.
    pub fn require_dominant(&self, w: &[i32]) -> Result<()> {
        self.check_dim(w)?;
        if self.is_dominant(w) {
            Ok(())
        } else {
            Err(Error::NotDominant(format_coords(w)))
        }
    }

    /// Height used to order weights: `8(w, ρ)`.
    pub fn height(&self, w: &[i32]) -> i64 {
        w.iter().zip(&self.rho4).map(|(&x, &r)| x as i64 * r).sum()
    }

    fn reflect(&self, w: &mut Coords, labels: &mut Labels, i: usize) {
        let c = labels[i];
        for (x, &a) in w.iter_mut().zip(&self.simple[i]) {
            *x -= c * a;
        }
        for (j, l) in labels.iter_mut().enumerate() {
            *l -= c * self.cartan[i][j] as i32;
        }
    }

    /// Walks `w` into the dominant chamber; returns the number of simple
    /// reflections used, whose parity is the sign of the Weyl element.
    pub fn dominant_conjugate_with_labels(&self, w: &mut Coords, labels: &mut Labels) -> u32 {
        let mut steps = 0;
        while let Some(i) = labels.iter().position(|&l| l < 0) {
            self.reflect(w, labels, i);
            steps += 1;
        }
        steps
    }

    pub fn dominant_conjugate(&self, w: &[i32]) -> Coords {
        let mut w = Coords::from_slice(w);
        let mut labels = self.labels(&w);
        self.dominant_conjugate_with_labels(&mut w, &mut labels);
        w
    }

    /// Visits every element of the Weyl orbit of the dominant weight `dom`
    /// exactly once.
    ///
    /// Each non-dominant `ν` has a unique parent `s_i ν` where `i` is the
    /// first index with `<ν, α_i^∨> < 0`; the orbit is walked as that tree.
    pub fn for_each_in_orbit(&self, dom: &[i32], mut f: impl FnMut(&Coords)) {
        let start = Coords::from_slice(dom);
        let labels = self.labels(&start);
        debug_assert!(labels.iter().all(|&l| l >= 0));
        let mut stack = vec![(start, labels)];
        while let Some((w, l)) = stack.pop() {
            f(&w);
            for i in 0..l.len() {
                let c = l[i];
                if c <= 0 {
                    continue;
                }
                let accept = (0..i).all(|j| l[j] - c * self.cartan[i][j] as i32 >= 0);
                if accept {
                    let mut w2 = w.clone();
                    let mut l2 = l.clone();
                    self.reflect(&mut w2, &mut l2, i);
                    stack.push((w2, l2));
                }
            }
        }
    }

    /// Order of the parabolic subgroup generated by the given simple
    /// reflections, by recursion on orbit sizes: `|W_J| = |W_J·ω_j| |W_{J∖j}|`.
    pub fn parabolic_order(&self, nodes: &[usize]) -> u128 {
        let Some((_, rest)) = nodes.split_first() else {
            return 1;
        };
        // Orbit of the weight with label 1 at j and 0 elsewhere on J, walked
        // in label coordinates restricted to J.
        let k = nodes.len();
        let sub: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&a| nodes.iter().map(|&b| self.cartan[a][b]).collect())
            .collect();
        let mut start = vec![0i64; k];
        start[0] = 1;
        let mut count: u128 = 0;
        let mut stack = vec![start];
        while let Some(l) = stack.pop() {
            count += 1;
            for i in 0..k {
                let c = l[i];
                if c <= 0 {
                    continue;
                }
                if (0..i).all(|t| l[t] - c * sub[i][t] >= 0) {
                    let l2: Vec<i64> = (0..k).map(|t| l[t] - c * sub[i][t]).collect();
                    stack.push(l2);
                }
            }
        }
        count * self.parabolic_order(rest)
    }

    /// Size of the Weyl orbit of a dominant weight, `|W| / |Stab(w)|`.
    pub fn orbit_size(&self, dom: &[i32]) -> u128 {
        let labels = self.labels(dom);
        let zero: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == 0).collect();
        self.weyl_order / self.parabolic_order(&zero)
    }

    pub(crate) fn positive_labels(&self) -> &[Labels] {
        &self.positive_labels
    }

    /// Weyl dimension formula in doubled coordinates.
    pub fn weyl_dim(&self, hw: &[i32]) -> Result<num_bigint::BigInt> {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        self.require_dominant(hw)?;
        let mut acc = BigRational::from_integer(BigInt::from(1));
        for a in &self.positive {
            let num: i64 = hw
                .iter()
                .zip(a)
                .zip(&self.rho4)
                .map(|((&h, &x), &r)| (2 * h as i64 + r) * x as i64)
                .sum();
            let den: i64 = a.iter().zip(&self.rho4).map(|(&x, &r)| x as i64 * r).sum();
            acc *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
        debug_assert!(acc.is_integer());
        Ok(acc.to_integer())
    }

    /// Whether the group has no roots outside a torus, i.e. every weight is
    /// dominant.
    pub fn is_torus(&self) -> bool {
        self.simple.is_empty()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Rational-linear map between doubled ε-spaces.
///
/// Stored as an integer matrix over a common denominator; applying it to a
/// weight must land in the target lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    source_dim: usize,
    target_dim: usize,
    rows: Vec<Vec<i64>>,
    denom: i64,
}

impl LatticeMap {
    /// `rows[t][s]` is the coefficient of source coordinate `s` in target
    /// coordinate `t`.
    pub fn new(source_dim: usize, rows: Vec<Vec<Rational64>>) -> Result<Self> {
        for r in &rows {
            if r.len() != source_dim {
                return Err(Error::DimensionMismatch {
                    expected: source_dim,
                    found: r.len(),
                });
            }
        }
        let denom = rows
            .iter()
            .flatten()
            .fold(1i64, |acc, r| num_integer::lcm(acc, *r.denom()));
        let int_rows = rows
            .iter()
            .map(|r| r.iter().map(|x| (x * denom).to_integer()).collect())
            .collect();
        Ok(LatticeMap {
            source_dim,
            target_dim: rows.len(),
            rows: int_rows,
            denom,
        })
    }

    pub fn from_integer_rows(source_dim: usize, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            source_dim,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
                .collect(),
        )
    }

    /// Map given by the images of the source basis vectors: `images[s]` is
    /// the target vector `ε_s` goes to.
    pub fn from_images(target_dim: usize, images: &[Vec<i64>]) -> Result<Self> {
        for v in images {
            if v.len() != target_dim {
                return Err(Error::DimensionMismatch {
                    expected: target_dim,
                    found: v.len(),
                });
            }
        }
        let rows: Vec<Vec<i64>> = (0..target_dim)
            .map(|t| images.iter().map(|v| v[t]).collect())
            .collect();
        Self::from_integer_rows(images.len(), &rows)
    }

    pub fn identity(dim: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        Self::from_integer_rows(dim, &rows).expect("identity")
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &LatticeMap) -> Result<LatticeMap> {
        if then.source_dim != self.target_dim {
            return Err(Error::DimensionMismatch {
                expected: self.target_dim,
                found: then.source_dim,
            });
        }
        let rows = (0..then.target_dim)
            .map(|t| {
                (0..self.source_dim)
                    .map(|s| {
                        let n: i64 = (0..self.target_dim)
                            .map(|k| then.rows[t][k] * self.rows[k][s])
                            .sum();
                        Rational64::new(n, then.denom * self.denom)
                    })
                    .collect()
            })
            .collect();
        LatticeMap::new(self.source_dim, rows)
    }

    /// Writes the image of `w` into `out`; `false` if it leaves the lattice.
    pub fn apply_into(&self, w: &[i32], out: &mut Coords) -> bool {
        out.clear();
        for row in &self.rows {
            let v: i64 = row.iter().zip(w).map(|(&a, &x)| a * x as i64).sum();
            if v % self.denom != 0 {
                return false;
            }
            out.push((v / self.denom) as i32);
        }
        true
    }

    pub fn apply(&self, w: &[i32]) -> Result<Coords> {
        if w.len() != self.source_dim {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim,
                found: w.len(),
            });
        }
        let mut out = Coords::new();
        if self.apply_into(w, &mut out) {
            Ok(out)
        } else {
            Err(Error::OffLattice(format_coords(w)))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_orders() {
        for (t, order) in [
            ("A3", 24u128),
            ("B3", 48),
            ("C4", 384),
            ("D8", 5_160_960),
            ("E6", 51_840),
            ("E8", 696_729_600),
            ("F4", 1_152),
            ("G2", 12),
        ] {
            let g = Group::simple(t.parse().unwrap()).unwrap();
            assert_eq!(g.weyl_order(), order, "{t}");
        }
        assert_eq!(Group::product(&[&Group::su2(), &Group::gl(3)]).weyl_order(), 12);
        assert_eq!(Group::torus(3).weyl_order(), 1);
    }

    #[test]
    fn orbit_enumeration_matches_stabilizer_index() {
        let g = Group::simple("D8".parse().unwrap()).unwrap();
        let half_spin = coords(&[1; 8]);
        let mut n = 0u128;
        g.for_each_in_orbit(&half_spin, |w| {
            assert_eq!(w.iter().filter(|&&x| x < 0).count() % 2, 0);
            n += 1;
        });
        assert_eq!(n, 128);
        assert_eq!(g.orbit_size(&half_spin), 128);

        let g2 = Group::simple("G2".parse().unwrap()).unwrap();
        let rho: Coords = g2.rho4().iter().map(|&x| (x / 2) as i32).collect();
        let mut m = 0;
        g2.for_each_in_orbit(&rho, |_| m += 1);
        assert_eq!(m, 12);
    }

    #[test]
    fn lattice_map_composition_and_lattice_check() {
        let split = LatticeMap::from_images(1, &[vec![1], vec![-1]]).unwrap();
        assert_eq!(split.apply(&coords(&[2, 0])).unwrap(), coords(&[2]));
        let halve = LatticeMap::new(1, vec![vec![Rational64::new(1, 2)]]).unwrap();
        assert!(halve.apply(&coords(&[1])).is_err());
        let both = split.then(&halve).unwrap();
        assert_eq!(both.apply(&coords(&[4, 2])).unwrap(), coords(&[1]));
    }
}

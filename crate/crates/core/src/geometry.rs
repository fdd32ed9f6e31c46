//! Restricted root systems of marked Dynkin diagrams and integrability
//! exponents of the minimal representation.
//!
//! A marking `S` selects the fundamental coweights `ω_i^∨, i ∈ S`, which span
//! a split torus `𝔞`. Restricting a root `α = Σ c_j α_j` to `𝔞` keeps the
//! coefficients `c_i, i ∈ S`, because `<α_j, ω_i^∨> = δ_ij`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root::{invert, CartanType, RootSystem, Series};

/// Which of the two families of dual pairs a marking belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    /// The centralizer of `G` has type `G2`; `G` is `A2`, `C3` or `F4`.
    First,
    /// `G` itself has type `G2`.
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkedDiagram {
    ambient: CartanType,
    marked: Vec<usize>,
}

impl MarkedDiagram {
    pub fn new(ambient: CartanType, marked: &[usize]) -> Result<Self> {
        let mut marked = marked.to_vec();
        marked.sort_unstable();
        marked.dedup();
        if marked.is_empty() {
            return Err(Error::InvalidInput("a marking needs at least one node".into()));
        }
        if let Some(&bad) = marked.iter().find(|&&i| i == 0 || i > ambient.rank()) {
            return Err(Error::InvalidInput(format!("node {bad} out of range for {ambient}")));
        }
        Ok(MarkedDiagram { ambient, marked })
    }

    /// The preset marking of `E_rank` in the given family.
    pub fn preset(family: Family, rank: usize) -> Result<Self> {
        let nodes: &[usize] = match (family, rank) {
            (Family::First, 6) => &[1, 6],
            (Family::First, 7) => &[1, 6, 7],
            (Family::First, 8) => &[1, 6, 7, 8],
            (Family::Second, 6) => &[2, 4],
            (Family::Second, 7) => &[1, 3],
            (Family::Second, 8) => &[7, 8],
            _ => {
                return Err(Error::Unsupported(format!(
                    "no preset marking for E{rank}"
                )))
            }
        };
        Self::new(CartanType::new(Series::E, rank)?, nodes)
    }

    /// All six presets, first family then second, each by increasing rank.
    pub fn presets() -> Vec<(Family, MarkedDiagram)> {
        [Family::First, Family::Second]
            .into_iter()
            .flat_map(|f| (6..=8).map(move |r| (f, Self::preset(f, r).expect("preset"))))
            .collect()
    }

    pub fn ambient(&self) -> CartanType {
        self.ambient
    }

    pub fn marked(&self) -> &[usize] {
        &self.marked
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.marked.iter().map(|i| i.to_string()).collect();
        write!(f, "{}{{{}}}", self.ambient, nodes.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedRoot {
    /// Values on the marked coweights, in marked-node order.
    pub vector: Vec<i64>,
    /// Dimension of the root space.
    pub multiplicity: usize,
    pub long: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictedRootDatum {
    pub diagram: MarkedDiagram,
    /// Positive restricted roots, sorted by vector.
    pub positive: Vec<RestrictedRoot>,
    pub simple: Vec<Vec<i64>>,
    pub identified_type: CartanType,
    /// Dimension of the centralizer of `𝔞` modulo `𝔞`.
    pub centralizer_dim: usize,
    /// `None` when all restricted roots have one length.
    pub long_multiplicity: Option<usize>,
    pub short_multiplicity: usize,
}

impl RestrictedRootDatum {
    /// `Σ_{±} mult + centralizer + dim 𝔞`, which must be the dimension of
    /// the ambient Lie algebra.
    pub fn accounted_dimension(&self) -> usize {
        2 * self.positive.iter().map(|r| r.multiplicity).sum::<usize>()
            + self.centralizer_dim
            + self.diagram.marked.len()
    }

    pub fn dimension_identity_holds(&self) -> bool {
        self.accounted_dimension() == self.diagram.ambient.lie_algebra_dim()
    }
}

/// Gram matrix `(ω_i^∨, ω_j^∨)` of the marked coweights, inverted: the
/// induced form on restricted roots written in coweight coordinates.
fn restricted_form(rs: &RootSystem, marked: &[usize]) -> Result<Vec<Vec<Rational64>>> {
    let mut gram = Vec::with_capacity(marked.len());
    for &i in marked {
        let mut row = Vec::with_capacity(marked.len());
        for &j in marked {
            row.push(rs.form(rs.fundamental_coweight(i)?, rs.fundamental_coweight(j)?)?);
        }
        gram.push(row);
    }
    invert(&gram).ok_or_else(|| Error::InvalidInput("singular coweight Gram matrix".into()))
}

fn bilinear(form: &[Vec<Rational64>], a: &[i64], b: &[i64]) -> Rational64 {
    let mut acc = Rational64::zero();
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            acc += form[i][j] * Rational64::from_integer(x * y);
        }
    }
    acc
}

/// Distinct nonzero restriction vectors of positive roots with their
/// multiplicities, and the number of roots restricting to zero.
fn project(rs: &RootSystem, marked: &[usize]) -> (BTreeMap<Vec<i64>, usize>, usize) {
    let mut groups: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut zero = 0;
    for c in rs.positive_root_coefficients() {
        let v: Vec<i64> = marked.iter().map(|&i| c[i - 1]).collect();
        if v.iter().all(|&x| x == 0) {
            zero += 1;
        } else {
            *groups.entry(v).or_default() += 1;
        }
    }
    (groups, zero)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Matches a Cartan matrix against the simple types of its rank, up to a
/// relabelling of nodes.
fn identify(cartan: &[Vec<i64>], positive_count: usize) -> Option<CartanType> {
    let r = cartan.len();
    CartanType::all_of_rank(r).into_iter().find(|t| {
        if t.positive_root_count() != positive_count {
            return false;
        }
        let reference = RootSystem::new(*t);
        let c = reference.cartan_matrix();
        permutations(r)
            .iter()
            .any(|p| (0..r).all(|i| (0..r).all(|j| cartan[i][j] == c[p[i]][p[j]])))
    })
}

/// Restricted root system, multiplicities and type of a marked diagram.
pub fn restricted_root_data(d: &MarkedDiagram) -> Result<RestrictedRootDatum> {
    let rs = RootSystem::new(d.ambient);
    let unsupported = || Error::UnsupportedMarking(d.to_string());
    let (groups, zero) = project(&rs, &d.marked);
    let form = restricted_form(&rs, &d.marked)?;

    let vectors: Vec<&Vec<i64>> = groups.keys().collect();
    let is_sum = |v: &Vec<i64>| {
        vectors.iter().any(|a| {
            let rest: Vec<i64> = v.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
            groups.contains_key(&rest)
        })
    };
    let simple: Vec<Vec<i64>> = vectors.iter().filter(|v| !is_sum(v)).map(|v| (*v).clone()).collect();
    if simple.len() != d.marked.len() {
        return Err(unsupported());
    }

    let norms: Vec<Rational64> = simple.iter().map(|s| bilinear(&form, s, s)).collect();
    let mut cartan = vec![vec![0i64; simple.len()]; simple.len()];
    for i in 0..simple.len() {
        for j in 0..simple.len() {
            let a = Rational64::from_integer(2) * bilinear(&form, &simple[i], &simple[j]) / norms[j];
            if !a.is_integer() {
                return Err(unsupported());
            }
            cartan[i][j] = a.to_integer();
        }
    }
    let identified_type = identify(&cartan, groups.len()).ok_or_else(unsupported)?;

    let root_norm = |v: &[i64]| bilinear(&form, v, v);
    let max_norm = groups.keys().map(|v| root_norm(v)).max().ok_or_else(unsupported)?;
    let positive: Vec<RestrictedRoot> = groups
        .iter()
        .map(|(v, &m)| RestrictedRoot {
            vector: v.clone(),
            multiplicity: m,
            long: root_norm(v) == max_norm,
        })
        .collect();

    let two_lengths = positive.iter().any(|r| !r.long);
    let class_mult = |long: bool| -> Result<Option<usize>> {
        let mut ms = positive.iter().filter(|r| r.long == long).map(|r| r.multiplicity);
        let Some(first) = ms.next() else { return Ok(None) };
        if ms.any(|m| m != first) {
            return Err(unsupported());
        }
        Ok(Some(first))
    };
    let (long_multiplicity, short_multiplicity) = if two_lengths {
        (class_mult(true)?, class_mult(false)?.ok_or_else(unsupported)?)
    } else {
        (None, class_mult(true)?.ok_or_else(unsupported)?)
    };

    Ok(RestrictedRootDatum {
        diagram: d.clone(),
        positive,
        simple,
        identified_type,
        centralizer_dim: 2 * zero + rs.rank() - d.marked.len(),
        long_multiplicity,
        short_multiplicity,
    })
}

/// The trivalent node of a simply laced diagram.
pub fn branch_node(t: CartanType) -> Result<usize> {
    let rs = RootSystem::new(t);
    let c = rs.cartan_matrix();
    (0..c.len())
        .find(|&i| (0..c.len()).filter(|&j| j != i && c[i][j] != 0).count() == 3)
        .map(|i| i + 1)
        .ok_or_else(|| Error::Unsupported(format!("{t} has no branch node")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentReport {
    pub ambient: CartanType,
    pub selected: Vec<usize>,
    pub branch_node: usize,
    #[serde(serialize_with = "ser_rational")]
    pub p: Rational64,
    /// `(i, 2<ρ, ω_i^∨> / <ω_b, ω_i^∨>)` for each selected node.
    #[serde(serialize_with = "ser_ratios")]
    pub per_node: Vec<(usize, Rational64)>,
}

fn ser_rational<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_ratios<S: serde::Serializer>(
    v: &[(usize, Rational64)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (i, r) in v {
        seq.serialize_element(&(i, r.to_string()))?;
    }
    seq.end()
}

/// Smallest `p` with `p<ω_b, ω_i^∨> ≥ 2<ρ, ω_i^∨>` for every selected `i`.
///
/// `ρ` is the half-sum of the distinct positive roots restricted to the
/// selected coweights, each counted once. With every node selected this is
/// `ρ_H`; with a marking it is `ρ` of the restricted system.
pub fn integrability_exponent(
    ambient: CartanType,
    selected: &[usize],
    branch: usize,
) -> Result<ExponentReport> {
    let d = MarkedDiagram::new(ambient, selected)?;
    let rs = RootSystem::new(ambient);
    let omega_b = rs.simple_root_coordinates(rs.fundamental_weight(branch)?)?;
    let (groups, _) = project(&rs, &d.marked);
    let mut per_node = Vec::with_capacity(d.marked.len());
    for (k, &i) in d.marked.iter().enumerate() {
        // 2<ρ, ω_i^∨> is the sum of i-th coordinates of the distinct roots.
        let two_rho: i64 = groups.keys().map(|v| v[k]).sum();
        let denom = omega_b[i - 1];
        if !denom.is_positive() {
            return Err(Error::InvalidInput(format!(
                "<ω_{branch}, ω_{i}^∨> = {denom} is not positive"
            )));
        }
        per_node.push((i, Rational64::from_integer(two_rho) / denom));
    }
    let p = per_node.iter().map(|(_, r)| *r).max().expect("non-empty marking");
    Ok(ExponentReport {
        ambient,
        selected: d.marked.clone(),
        branch_node: branch,
        p,
        per_node,
    })
}

/// `p_H`: every node selected, branch node of the diagram.
pub fn ambient_exponent(ambient: CartanType) -> Result<ExponentReport> {
    let all: Vec<usize> = (1..=ambient.rank()).collect();
    integrability_exponent(ambient, &all, branch_node(ambient)?)
}

/// `p` for the group `G` of a marked diagram.
pub fn marked_exponent(d: &MarkedDiagram) -> Result<ExponentReport> {
    integrability_exponent(d.ambient, &d.marked, branch_node(d.ambient)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(rank: usize) -> CartanType {
        CartanType::new(Series::E, rank).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn branch_node_is_four() {
        for r in 6..=8 {
            assert_eq!(branch_node(e(r)).unwrap(), 4);
        }
        assert!(branch_node("A3".parse().unwrap()).is_err());
    }

    #[test]
    fn marking_validation() {
        assert!(MarkedDiagram::new(e(6), &[]).is_err());
        assert!(MarkedDiagram::new(e(6), &[7]).is_err());
        assert!(MarkedDiagram::new(e(6), &[0]).is_err());
        assert_eq!(MarkedDiagram::new(e(6), &[6, 1, 6]).unwrap().marked(), &[1, 6]);
    }

    #[test]
    fn e6_first_family_is_a2_with_multiplicity_eight() {
        let d = restricted_root_data(&MarkedDiagram::preset(Family::First, 6).unwrap()).unwrap();
        assert_eq!(d.identified_type.to_string(), "A2");
        assert_eq!(d.positive.len(), 3);
        assert!(d.positive.iter().all(|r| r.multiplicity == 8));
        assert_eq!(d.long_multiplicity, None);
        assert_eq!(d.short_multiplicity, 8);
        assert_eq!(d.centralizer_dim, 28);
        assert_eq!(d.accounted_dimension(), 78);
    }

    #[test]
    fn presets_reproduce_types_and_multiplicities() {
        let expected = [
            ("A2", None, 8),
            ("C3", Some(1), 8),
            ("F4", Some(1), 8),
            ("G2", Some(1), 9),
            ("G2", Some(1), 15),
            ("G2", Some(1), 27),
        ];
        for ((family, d), (t, long, short)) in MarkedDiagram::presets().iter().zip(expected) {
            let data = restricted_root_data(d).unwrap();
            assert_eq!(data.identified_type.to_string(), t, "{d}");
            assert_eq!(data.long_multiplicity, long, "{d}");
            assert_eq!(data.short_multiplicity, short, "{d}");
            assert!(data.dimension_identity_holds(), "{d}");
            if *family == Family::First {
                assert_eq!(data.centralizer_dim, 28, "{d}");
            }
        }
    }

    #[test]
    fn unsupported_marking_is_reported() {
        // Node 2 of E6 has coefficient 2 in the highest root, so the
        // restricted roots are {α, 2α}: not reduced.
        let d = MarkedDiagram::new(e(6), &[2]).unwrap();
        assert!(matches!(restricted_root_data(&d), Err(Error::UnsupportedMarking(_))));
        let d = MarkedDiagram::new(e(6), &[1]).unwrap();
        assert_eq!(restricted_root_data(&d).unwrap().identified_type.to_string(), "A1");
    }

    #[test]
    fn ambient_exponents() {
        let ps: Vec<Rational64> = (6..=8).map(|r| ambient_exponent(e(r)).unwrap().p).collect();
        assert_eq!(ps, vec![q(8, 1), q(9, 1), q(29, 3)]);
    }

    #[test]
    fn marked_exponents() {
        let first: Vec<Rational64> = (6..=8)
            .map(|r| marked_exponent(&MarkedDiagram::preset(Family::First, r).unwrap()).unwrap().p)
            .collect();
        assert_eq!(first, vec![q(1, 1), q(2, 1), q(8, 3)]);
        let second: Vec<Rational64> = (6..=8)
            .map(|r| marked_exponent(&MarkedDiagram::preset(Family::Second, r).unwrap()).unwrap().p)
            .collect();
        assert_eq!(second, vec![q(2, 1), q(3, 2), q(1, 1)]);
    }

    #[test]
    fn exponent_is_max_of_ratios_and_shrinks_on_subsets() {
        let r = ambient_exponent(e(7)).unwrap();
        assert_eq!(r.p, r.per_node.iter().map(|x| x.1).max().unwrap());
        for (_, d) in MarkedDiagram::presets() {
            let full = ambient_exponent(d.ambient()).unwrap();
            let sub = marked_exponent(&d).unwrap();
            assert!(sub.p < full.p);
        }
    }

    #[test]
    fn smaller_member_of_each_pair_has_p_below_two() {
        // E6: A2 (dim 8) is smaller than G2; E7 and E8: G2 is smaller than
        // C3 and F4.
        let cases = [(Family::First, 6), (Family::Second, 7), (Family::Second, 8)];
        for (f, r) in cases {
            let p = marked_exponent(&MarkedDiagram::preset(f, r).unwrap()).unwrap().p;
            assert!(p < q(2, 1), "E{r}");
        }
        let f4 = marked_exponent(&MarkedDiagram::preset(Family::First, 8).unwrap()).unwrap();
        assert!(f4.p >= q(2, 1));
    }
}

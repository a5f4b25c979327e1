//! Finite stratified spaces, constructible functions and cycles on them,
//! the Euler-obstruction transform between the two, and weighted Euler
//! characteristics.
//!
//! Cycles are indexed by strata: the prime cycle labelled `Z` is the
//! closure of stratum `Z`. Values are generic over [`Weight`] (integers by
//! default, rationals when needed).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::Neg;

use num_rational::BigRational;
use num_traits::Num;

use crate::error::{Error, Result};

/// Coefficient type of functions and cycles.
pub trait Weight: Num + Clone + Neg<Output = Self> + Debug {
    fn from_int(v: i64) -> Self;
}

impl Weight for i64 {
    fn from_int(v: i64) -> Self {
        v
    }
}

impl Weight for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(v.into())
    }
}

/// A stratum as declared: `covers` names the strata immediately below it,
/// i.e. lying in its closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumSpec {
    pub name: String,
    pub dim: u32,
    pub chi: i64,
    pub fixed: bool,
    pub covers: Vec<String>,
}

impl StratumSpec {
    pub fn new(name: &str, dim: u32, chi: i64, fixed: bool, covers: &[&str]) -> Self {
        StratumSpec { name: name.into(), dim, chi, fixed, covers: covers.iter().map(|c| String::from(*c)).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub name: String,
    pub dim: u32,
    pub chi: i64,
    pub fixed: bool,
}

/// Strata with their closure order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratifiedSpace {
    strata: Vec<Stratum>,
    covers: Vec<Vec<usize>>,
    /// `leq[a][b]` iff stratum `a` lies in the closure of stratum `b`.
    leq: Vec<Vec<bool>>,
}

impl StratifiedSpace {
    /// Validates names, cover relations and dimensions and builds the order.
    pub fn new(specs: Vec<StratumSpec>) -> Result<StratifiedSpace> {
        if specs.is_empty() {
            return Err(Error::Validation("a stratified space needs at least one stratum".into()));
        }
        let n = specs.len();
        let index = |name: &str| specs.iter().position(|s| s.name == name);
        for (i, s) in specs.iter().enumerate() {
            if s.name.is_empty() {
                return Err(Error::Validation("empty stratum name".into()));
            }
            if index(&s.name) != Some(i) {
                return Err(Error::Validation(format!("duplicate stratum `{}`", s.name)));
            }
        }
        let mut covers = vec![Vec::new(); n];
        for (i, s) in specs.iter().enumerate() {
            for c in &s.covers {
                let j = index(c).ok_or_else(|| Error::Validation(format!("`{}` covers unknown stratum `{c}`", s.name)))?;
                if specs[j].dim >= s.dim {
                    return Err(Error::Validation(format!(
                        "`{c}` (dim {}) cannot lie in the closure of `{}` (dim {})",
                        specs[j].dim, s.name, s.dim
                    )));
                }
                if !covers[i].contains(&j) {
                    covers[i].push(j);
                }
            }
        }
        // dimensions strictly decrease along covers, so the relation is
        // acyclic; its reflexive-transitive closure is the order
        let mut by_dim: Vec<usize> = (0..n).collect();
        by_dim.sort_by_key(|&i| specs[i].dim);
        let mut leq = vec![vec![false; n]; n];
        for &b in &by_dim {
            leq[b][b] = true;
            for &c in &covers[b] {
                for a in 0..n {
                    if leq[a][c] {
                        leq[a][b] = true;
                    }
                }
            }
        }
        let strata =
            specs.into_iter().map(|s| Stratum { name: s.name, dim: s.dim, chi: s.chi, fixed: s.fixed }).collect();
        Ok(StratifiedSpace { strata, covers, leq })
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    pub fn stratum(&self, i: usize) -> &Stratum {
        &self.strata[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.strata
            .iter()
            .position(|s| s.name == name)
            .ok_or_else(|| Error::Validation(format!("unknown stratum `{name}`")))
    }

    /// Strata immediately below stratum `i`.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    /// `a ≤ b`: stratum `a` lies in the closure of stratum `b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Strata making up the closure of stratum `z`.
    pub fn closure(&self, z: usize) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.leq[s][z]).collect()
    }

    /// Strata in order of decreasing dimension.
    pub fn top_down(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by(|&a, &b| self.strata[b].dim.cmp(&self.strata[a].dim).then(a.cmp(&b)));
        v
    }

    /// `χ(X)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.strata.iter().map(|s| s.chi).sum()
    }

    /// Membership mask of the strata flagged fixed.
    pub fn fixed_mask(&self) -> Vec<bool> {
        self.strata.iter().map(|s| s.fixed).collect()
    }

    /// True if `mask` contains the closure of each of its strata.
    pub fn is_closed(&self, mask: &[bool]) -> bool {
        (0..self.len()).all(|b| !mask[b] || (0..self.len()).all(|a| !self.leq[a][b] || mask[a]))
    }
}

/// A function constant on strata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructibleFunction<W = i64> {
    pub values: Vec<W>,
}

/// Formal combination of stratum closures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle<W = i64> {
    pub coefficients: Vec<W>,
}

impl<W: Weight> ConstructibleFunction<W> {
    pub fn zero(space: &StratifiedSpace) -> Self {
        ConstructibleFunction { values: vec![W::zero(); space.len()] }
    }

    pub fn constant(space: &StratifiedSpace, v: W) -> Self {
        ConstructibleFunction { values: vec![v; space.len()] }
    }

    /// Indicator function of stratum `s`.
    pub fn indicator(space: &StratifiedSpace, s: usize) -> Self {
        let mut f = Self::zero(space);
        f.values[s] = W::one();
        f
    }

    pub fn add(&self, other: &Self) -> Self {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect();
        ConstructibleFunction { values }
    }
}

impl<W: Weight> Cycle<W> {
    pub fn zero(space: &StratifiedSpace) -> Self {
        Cycle { coefficients: vec![W::zero(); space.len()] }
    }

    /// The prime cycle `[closure of z]`.
    pub fn prime(space: &StratifiedSpace, z: usize) -> Self {
        let mut c = Self::zero(space);
        c.coefficients[z] = W::one();
        c
    }

    pub fn add(&self, other: &Self) -> Self {
        let coefficients =
            self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a.clone() + b.clone()).collect();
        Cycle { coefficients }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coefficients =
            self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a.clone() - b.clone()).collect();
        Cycle { coefficients }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }
}

/// Where an Euler-obstruction entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    /// Supplied by the user.
    Declared,
    /// Computed from a hypersurface germ.
    Computed,
    /// Filled in: 1 on the diagonal and below it when nothing was given,
    /// 0 off the closure.
    Default,
}

/// `e[S][Z]`: the Euler obstruction of the closure of `Z` on stratum `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuMatrix {
    entries: Vec<Vec<i64>>,
    provenance: Vec<Vec<Provenance>>,
}

/// One declared matrix entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuEntry {
    pub on: usize,
    pub of: usize,
    pub value: i64,
    pub provenance: Provenance,
}

impl EuMatrix {
    /// Builds the matrix from declared entries. Entries off the closure must
    /// be 0, diagonal entries must be 1, and missing entries below the
    /// diagonal default to 1.
    pub fn new(space: &StratifiedSpace, declared: &[EuEntry]) -> Result<EuMatrix> {
        let n = space.len();
        let mut entries = vec![vec![0i64; n]; n];
        let mut provenance = vec![vec![Provenance::Default; n]; n];
        let mut seen = BTreeSet::new();
        for e in declared {
            if e.on >= n || e.of >= n {
                return Err(Error::Validation("Euler obstruction entry refers to a missing stratum".into()));
            }
            if !seen.insert((e.on, e.of)) {
                return Err(Error::Validation(format!(
                    "Euler obstruction of `{}` on `{}` declared twice",
                    space.stratum(e.of).name,
                    space.stratum(e.on).name
                )));
            }
            entries[e.on][e.of] = e.value;
            provenance[e.on][e.of] = e.provenance;
        }
        for s in 0..n {
            for z in 0..n {
                let declared = seen.contains(&(s, z));
                if s == z {
                    if declared && entries[s][z] != 1 {
                        return Err(Error::Validation(format!(
                            "Euler obstruction of `{0}` on its own open stratum must be 1",
                            space.stratum(z).name
                        )));
                    }
                    entries[s][z] = 1;
                } else if !space.leq(s, z) {
                    if entries[s][z] != 0 {
                        return Err(Error::Validation(format!(
                            "`{}` is not in the closure of `{}`, so the entry must be 0",
                            space.stratum(s).name,
                            space.stratum(z).name
                        )));
                    }
                } else if !declared {
                    entries[s][z] = 1;
                }
            }
        }
        Ok(EuMatrix { entries, provenance })
    }

    /// All defaults: 1 on every stratum of each closure.
    pub fn defaults(space: &StratifiedSpace) -> EuMatrix {
        EuMatrix::new(space, &[]).expect("defaults are valid")
    }

    pub fn get(&self, on: usize, of: usize) -> i64 {
        self.entries[on][of]
    }

    pub fn provenance(&self, on: usize, of: usize) -> Provenance {
        self.provenance[on][of]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks unitriangularity with respect to the closure order of `space`.
    pub fn validate(&self, space: &StratifiedSpace) -> Result<()> {
        let n = space.len();
        if self.entries.len() != n {
            return Err(Error::Validation("Euler obstruction matrix size does not match the space".into()));
        }
        for s in 0..n {
            for z in 0..n {
                let v = self.entries[s][z];
                if (s == z && v != 1) || (!space.leq(s, z) && v != 0) {
                    return Err(Error::Validation(format!(
                        "Euler obstruction matrix is not unitriangular at ({}, {})",
                        space.stratum(s).name,
                        space.stratum(z).name
                    )));
                }
            }
        }
        Ok(())
    }
}

fn check_len(space: &StratifiedSpace, len: usize, what: &str) -> Result<()> {
    if len != space.len() {
        return Err(Error::Validation(format!("{what} has {len} values for {} strata", space.len())));
    }
    Ok(())
}

/// `Σ a_Z [Z] ↦ Σ a_Z eu(Z)`.
pub fn eu_transform<W: Weight>(
    space: &StratifiedSpace,
    c: &Cycle<W>,
    m: &EuMatrix,
) -> Result<ConstructibleFunction<W>> {
    check_len(space, c.coefficients.len(), "cycle")?;
    m.validate(space)?;
    let n = space.len();
    let mut values = vec![W::zero(); n];
    for (s, v) in values.iter_mut().enumerate() {
        for z in 0..n {
            let e = m.get(s, z);
            if e != 0 && !c.coefficients[z].is_zero() {
                *v = v.clone() + c.coefficients[z].clone() * W::from_int(e);
            }
        }
    }
    Ok(ConstructibleFunction { values })
}

/// The unique cycle whose transform is `f`, by back-substitution from the
/// top-dimensional strata down.
pub fn inverse_transform<W: Weight>(
    space: &StratifiedSpace,
    f: &ConstructibleFunction<W>,
    m: &EuMatrix,
) -> Result<Cycle<W>> {
    check_len(space, f.values.len(), "function")?;
    m.validate(space)?;
    let n = space.len();
    let mut coefficients = vec![W::zero(); n];
    for s in space.top_down() {
        let mut v = f.values[s].clone();
        for z in (0..n).filter(|&z| z != s && space.leq(s, z)) {
            v = v - coefficients[z].clone() * W::from_int(m.get(s, z));
        }
        coefficients[s] = v;
    }
    Ok(Cycle { coefficients })
}

/// `χ(X, f) = Σ_S χ(S)·f(S)`.
pub fn weighted_chi<W: Weight>(space: &StratifiedSpace, f: &ConstructibleFunction<W>) -> Result<W> {
    check_len(space, f.values.len(), "function")?;
    let v = stratum_sum(space, f, None);
    debug_assert!(v == level_set_sum(space, f, None), "weighted χ formulas disagree");
    Ok(v)
}

/// `χ(F, f|_F)` for the union `F` of the strata selected by `mask`.
pub fn weighted_chi_on<W: Weight>(space: &StratifiedSpace, f: &ConstructibleFunction<W>, mask: &[bool]) -> Result<W> {
    check_len(space, f.values.len(), "function")?;
    check_len(space, mask.len(), "stratum mask")?;
    Ok(stratum_sum(space, f, Some(mask)))
}

/// The same characteristic through level sets: `Σ_n n·χ(f⁻¹(n))`.
pub fn weighted_chi_level_sets<W: Weight>(space: &StratifiedSpace, f: &ConstructibleFunction<W>) -> Result<W> {
    check_len(space, f.values.len(), "function")?;
    Ok(level_set_sum(space, f, None))
}

fn selected(mask: Option<&[bool]>, s: usize) -> bool {
    mask.is_none_or(|m| m[s])
}

fn stratum_sum<W: Weight>(space: &StratifiedSpace, f: &ConstructibleFunction<W>, mask: Option<&[bool]>) -> W {
    let mut acc = W::zero();
    for (s, v) in f.values.iter().enumerate() {
        if selected(mask, s) {
            acc = acc + W::from_int(space.stratum(s).chi) * v.clone();
        }
    }
    acc
}

fn level_set_sum<W: Weight>(space: &StratifiedSpace, f: &ConstructibleFunction<W>, mask: Option<&[bool]>) -> W {
    let mut levels: Vec<(W, i64)> = Vec::new();
    for (s, v) in f.values.iter().enumerate() {
        if !selected(mask, s) {
            continue;
        }
        let chi = space.stratum(s).chi;
        match levels.iter_mut().find(|(l, _)| l == v) {
            Some((_, c)) => *c += chi,
            None => levels.push((v.clone(), chi)),
        }
    }
    let mut acc = W::zero();
    for (l, c) in levels {
        acc = acc + l * W::from_int(c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p1() -> StratifiedSpace {
        StratifiedSpace::new(vec![StratumSpec::new("pt", 0, 1, false, &[]), StratumSpec::new("A1", 1, 1, false, &["pt"])])
            .unwrap()
    }

    fn nodal() -> StratifiedSpace {
        StratifiedSpace::new(vec![
            StratumSpec::new("node", 0, 1, false, &[]),
            StratumSpec::new("curve", 1, -1, false, &["node"]),
        ])
        .unwrap()
    }

    #[test]
    fn order_and_validation() {
        let s = StratifiedSpace::new(vec![
            StratumSpec::new("p", 0, 1, true, &[]),
            StratumSpec::new("c", 1, 0, false, &["p"]),
            StratumSpec::new("s", 2, 0, false, &["c"]),
        ])
        .unwrap();
        assert!(s.leq(0, 2) && s.leq(1, 2) && !s.leq(2, 1));
        assert_eq!(s.closure(1), vec![0, 1]);
        assert_eq!(s.top_down(), vec![2, 1, 0]);
        assert!(s.is_closed(&[true, false, false]));
        assert!(!s.is_closed(&[false, true, false]));
        assert!(StratifiedSpace::new(vec![StratumSpec::new("a", 1, 0, false, &["a"])]).is_err());
        assert!(StratifiedSpace::new(vec![StratumSpec::new("a", 1, 0, false, &["b"])]).is_err());
        assert!(StratifiedSpace::new(vec![
            StratumSpec::new("a", 1, 0, false, &[]),
            StratumSpec::new("a", 2, 0, false, &[])
        ])
        .is_err());
    }

    #[test]
    fn transform_examples() {
        // single smooth stratum: [X] -> 1
        let x = StratifiedSpace::new(vec![StratumSpec::new("X", 2, 3, false, &[])]).unwrap();
        let m = EuMatrix::defaults(&x);
        let f = eu_transform(&x, &Cycle::<i64>::prime(&x, 0), &m).unwrap();
        assert_eq!(f.values, vec![1]);
        // curve with multiplicity 2 at the special point
        let s = nodal();
        let m = EuMatrix::new(&s, &[EuEntry { on: 0, of: 1, value: 2, provenance: Provenance::Declared }]).unwrap();
        let f = eu_transform(&s, &Cycle::<i64>::prime(&s, 1), &m).unwrap();
        assert_eq!(f.values, vec![2, 1]);
        assert_eq!(eu_transform(&s, &Cycle::<i64>::zero(&s), &m).unwrap().values, vec![0, 0]);
        // constant 1 on the nodal curve is [Z] - [pt]
        let c = inverse_transform(&s, &ConstructibleFunction::constant(&s, 1i64), &m).unwrap();
        assert_eq!(c.coefficients, vec![-1, 1]);
        // a point's indicator is the point
        let c = inverse_transform(&s, &ConstructibleFunction::<i64>::indicator(&s, 0), &m).unwrap();
        assert_eq!(c.coefficients, vec![1, 0]);
    }

    #[test]
    fn chi_examples() {
        let s = p1();
        assert_eq!(weighted_chi(&s, &ConstructibleFunction::constant(&s, 1i64)).unwrap(), 2);
        assert_eq!(weighted_chi(&s, &ConstructibleFunction::constant(&s, 5i64)).unwrap(), 10);
        let a1 = StratifiedSpace::new(vec![
            StratumSpec::new("0", 0, 1, true, &[]),
            StratumSpec::new("C*", 1, 0, false, &["0"]),
        ])
        .unwrap();
        let f = ConstructibleFunction { values: vec![7i64, -4] };
        assert_eq!(weighted_chi(&a1, &f).unwrap(), 7);
        assert_eq!(weighted_chi_level_sets(&a1, &f).unwrap(), 7);
        assert_eq!(weighted_chi_on(&a1, &f, &[true, false]).unwrap(), 7);
    }

    #[test]
    fn matrix_rules() {
        let s = nodal();
        let bad_diag = [EuEntry { on: 1, of: 1, value: 2, provenance: Provenance::Declared }];
        assert!(EuMatrix::new(&s, &bad_diag).is_err());
        let off_closure = [EuEntry { on: 1, of: 0, value: 1, provenance: Provenance::Declared }];
        assert!(EuMatrix::new(&s, &off_closure).is_err());
        let m = EuMatrix::defaults(&s);
        assert_eq!(m.get(0, 1), 1);
        assert_eq!(m.provenance(0, 1), Provenance::Default);
        assert_eq!(m.get(1, 0), 0);
    }

    #[test]
    fn rational_values() {
        let s = nodal();
        let m = EuMatrix::new(&s, &[EuEntry { on: 0, of: 1, value: 2, provenance: Provenance::Computed }]).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let c = Cycle { coefficients: vec![half.clone(), half.clone()] };
        let f = eu_transform(&s, &c, &m).unwrap();
        assert_eq!(f.values[0], BigRational::from_integer(3.into()) / BigRational::from_integer(2.into()));
        assert_eq!(inverse_transform(&s, &f, &m).unwrap(), c);
    }
}

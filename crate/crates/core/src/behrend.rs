//! Behrend's canonical cycle and function from declared normal-cone
//! components, conormal (Lagrangian) cycle bookkeeping, and the splitting
//! of the cone along a `C*`-fixed locus.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::constructible::{
    eu_transform, weighted_chi, weighted_chi_on, ConstructibleFunction, Cycle, EuMatrix, StratifiedSpace, StratumSpec,
};
use crate::error::{Error, Result};

fn sign(dim: u32) -> i64 {
    if dim % 2 == 0 {
        1
    } else {
        -1
    }
}

/// One irreducible component of the normal cone: its support (a stratum
/// closure), the support's dimension and the component's multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeComponent {
    pub support: String,
    pub dim_support: u32,
    pub mult: u64,
}

impl ConeComponent {
    pub fn new(support: &str, dim_support: u32, mult: u64) -> Self {
        ConeComponent { support: support.into(), dim_support, mult }
    }
}

fn component_index(space: &StratifiedSpace, c: &ConeComponent) -> Result<usize> {
    let i = space.index_of(&c.support)?;
    if space.stratum(i).dim != c.dim_support {
        return Err(Error::Validation(format!(
            "component on `{}` declares dimension {} but the stratum has dimension {}",
            c.support,
            c.dim_support,
            space.stratum(i).dim
        )));
    }
    if c.mult == 0 {
        return Err(Error::Validation(format!("component on `{}` has multiplicity 0", c.support)));
    }
    Ok(i)
}

fn signed_mult(c: &ConeComponent) -> Result<i64> {
    let m = i64::try_from(c.mult).map_err(|_| Error::Validation("multiplicity too large".into()))?;
    Ok(sign(c.dim_support) * m)
}

/// `Σ (-1)^{dim π(C_i)} · mult(C_i) · [π(C_i)]`.
pub fn canonical_cycle(space: &StratifiedSpace, components: &[ConeComponent]) -> Result<Cycle> {
    let mut c = Cycle::zero(space);
    for comp in components {
        let i = component_index(space, comp)?;
        c.coefficients[i] += signed_mult(comp)?;
    }
    Ok(c)
}

/// Space, Euler obstructions and cone data, with the derived canonical
/// cycle and Behrend function.
#[derive(Debug, Clone)]
pub struct BehrendData {
    pub space: StratifiedSpace,
    pub eu: EuMatrix,
    pub components: Vec<ConeComponent>,
    pub canonical: Cycle,
    pub nu: ConstructibleFunction,
}

impl BehrendData {
    pub fn new(space: StratifiedSpace, eu: EuMatrix, components: Vec<ConeComponent>) -> Result<BehrendData> {
        let canonical = canonical_cycle(&space, &components)?;
        let nu = eu_transform(&space, &canonical, &eu)?;
        Ok(BehrendData { space, eu, components, canonical, nu })
    }
}

/// `χ(X, ν_X)`.
pub fn dt_invariant(bd: &BehrendData) -> Result<i64> {
    weighted_chi(&bd.space, &bd.nu)
}

/// Integer combination of conormal varieties `N*_Z`, indexed by strata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianCycle {
    pub terms: Vec<i64>,
}

/// `Σ a_Z [Z] ↦ Σ a_Z (-1)^{dim Z} N*_Z`.
pub fn lagrangify(space: &StratifiedSpace, c: &Cycle) -> LagrangianCycle {
    let terms = c.coefficients.iter().enumerate().map(|(z, a)| sign(space.stratum(z).dim) * a).collect();
    LagrangianCycle { terms }
}

/// `Σ b_Z N*_Z ↦ Σ b_Z (-1)^{dim Z} [Z]`.
pub fn project(space: &StratifiedSpace, v: &LagrangianCycle) -> Cycle {
    let coefficients = v.terms.iter().enumerate().map(|(z, b)| sign(space.stratum(z).dim) * b).collect();
    Cycle { coefficients }
}

/// Intersection number of `V` with the zero section, evaluated as
/// `Σ b_Z (-1)^{dim Z} χ(X, eu(Z))`.
pub fn intersection_with_zero_section(space: &StratifiedSpace, eu: &EuMatrix, v: &LagrangianCycle) -> Result<i64> {
    if v.terms.len() != space.len() {
        return Err(Error::Validation("Lagrangian cycle does not match the space".into()));
    }
    let mut acc = 0;
    for (z, b) in v.terms.iter().enumerate() {
        if *b == 0 {
            continue;
        }
        let f = eu_transform(space, &Cycle::<i64>::prime(space, z), eu)?;
        acc += b * sign(space.stratum(z).dim) * weighted_chi(space, &f)?;
    }
    Ok(acc)
}

/// Checks that `fixed` is exactly the set of fixed-flag strata, that it is
/// closed, and that every free stratum has Euler characteristic 0.
fn validate_fixed(space: &StratifiedSpace, fixed: &[bool]) -> Result<()> {
    if fixed.len() != space.len() {
        return Err(Error::Validation("fixed-locus mask does not match the space".into()));
    }
    for (i, s) in space.strata().iter().enumerate() {
        if fixed[i] != s.fixed {
            return Err(Error::Validation(format!(
                "stratum `{}` is {} but the fixed locus {} it",
                s.name,
                if s.fixed { "flagged fixed" } else { "free" },
                if fixed[i] { "contains" } else { "omits" }
            )));
        }
        if !s.fixed && s.chi != 0 {
            return Err(Error::Validation(format!(
                "free stratum `{}` has Euler characteristic {}; a fixed-point-free C*-action forces 0",
                s.name, s.chi
            )));
        }
    }
    if !space.is_closed(fixed) {
        return Err(Error::Validation("the fixed locus is not closed".into()));
    }
    Ok(())
}

/// Mask of the named strata.
pub fn mask_of(space: &StratifiedSpace, names: &[String]) -> Result<Vec<bool>> {
    let mut mask = vec![false; space.len()];
    for n in names {
        mask[space.index_of(n)?] = true;
    }
    Ok(mask)
}

/// `(c₁, c₂)` with `c₂` the part of the canonical cycle from components
/// whose support is not contained in the fixed locus and `c₁ = c_X - c₂`.
pub fn split_cone(bd: &BehrendData, fixed: &[bool]) -> Result<(Cycle, Cycle)> {
    validate_fixed(&bd.space, fixed)?;
    let mut c2 = Cycle::zero(&bd.space);
    for comp in &bd.components {
        let i = component_index(&bd.space, comp)?;
        if bd.space.closure(i).iter().any(|&s| !fixed[s]) {
            c2.coefficients[i] += signed_mult(comp)?;
        }
    }
    let c1 = bd.canonical.sub(&c2);
    Ok((c1, c2))
}

/// Values entering the localized-invariant identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KiemLiReport {
    pub c1: Cycle,
    pub c2: Cycle,
    /// `χ(F, ν₁|_F)`
    pub chi_f_nu1: i64,
    /// `χ(F, ν₂|_F)`
    pub chi_f_nu2: i64,
    /// `χ(F, ν₁|_F) + χ(F, ν₂|_F)`
    pub localized: i64,
    /// `χ(X, ν_X)`
    pub chi_x_nu: i64,
    /// `χ(F, ν_X|_F)`
    pub chi_f_nu: i64,
}

impl KiemLiReport {
    /// The localized sum, `χ(X, ν_X)` and `χ(F, ν_X|_F)` all agree.
    pub fn holds(&self) -> bool {
        self.localized == self.chi_x_nu && self.chi_x_nu == self.chi_f_nu
    }
}

/// Splits the cone along the fixed locus and evaluates both pieces on it.
pub fn kiem_li_localized(bd: &BehrendData, fixed: &[bool]) -> Result<KiemLiReport> {
    let (c1, c2) = split_cone(bd, fixed)?;
    let nu1 = eu_transform(&bd.space, &c1, &bd.eu)?;
    let nu2 = eu_transform(&bd.space, &c2, &bd.eu)?;
    let chi_f_nu1 = weighted_chi_on(&bd.space, &nu1, fixed)?;
    let chi_f_nu2 = weighted_chi_on(&bd.space, &nu2, fixed)?;
    Ok(KiemLiReport {
        c1,
        c2,
        chi_f_nu1,
        chi_f_nu2,
        localized: chi_f_nu1 + chi_f_nu2,
        chi_x_nu: dt_invariant(bd)?,
        chi_f_nu: weighted_chi_on(&bd.space, &bd.nu, fixed)?,
    })
}

/// Smooth germ of dimension `t` with an isolated fixed point: strata
/// `P` (fixed, χ = 1) below the free open part (χ = 0), with the single
/// cone component of a smooth space.
pub fn isolated_fixed_point(t: u32) -> Result<BehrendData> {
    if t == 0 {
        let space = StratifiedSpace::new(vec![StratumSpec::new("P", 0, 1, true, &[])])?;
        let eu = EuMatrix::defaults(&space);
        return BehrendData::new(space, eu, vec![ConeComponent::new("P", 0, 1)]);
    }
    let space = StratifiedSpace::new(vec![
        StratumSpec::new("P", 0, 1, true, &[]),
        StratumSpec::new("X", t, 0, false, &["P"]),
    ])?;
    // a smooth germ has Euler obstruction 1 everywhere
    let eu = EuMatrix::defaults(&space);
    BehrendData::new(space, eu, vec![ConeComponent::new("X", t, 1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> BehrendData {
        let space = StratifiedSpace::new(vec![
            StratumSpec::new("0", 0, 1, true, &[]),
            StratumSpec::new("C*", 1, 0, false, &["0"]),
        ])
        .unwrap();
        let eu = EuMatrix::defaults(&space);
        BehrendData::new(space, eu, vec![ConeComponent::new("C*", 1, 1)]).unwrap()
    }

    #[test]
    fn canonical_cycle_examples() {
        let x = StratifiedSpace::new(vec![StratumSpec::new("X", 3, 2, false, &[])]).unwrap();
        let c = canonical_cycle(&x, &[ConeComponent::new("X", 3, 1)]).unwrap();
        assert_eq!(c.coefficients, vec![-1]);
        let bd = BehrendData::new(x.clone(), EuMatrix::defaults(&x), vec![ConeComponent::new("X", 3, 1)]).unwrap();
        assert_eq!(bd.nu.values, vec![-1]);
        assert_eq!(dt_invariant(&bd).unwrap(), -2);
        let c = canonical_cycle(&x, &[ConeComponent::new("X", 3, 1), ConeComponent::new("X", 3, 2)]).unwrap();
        assert_eq!(c.coefficients, vec![-3]);
        assert!(canonical_cycle(&x, &[ConeComponent::new("X", 2, 1)]).is_err());
        assert!(canonical_cycle(&x, &[ConeComponent::new("Y", 3, 1)]).is_err());
        let pt = StratifiedSpace::new(vec![StratumSpec::new("pt", 0, 1, false, &[])]).unwrap();
        let bd = BehrendData::new(pt.clone(), EuMatrix::defaults(&pt), vec![ConeComponent::new("pt", 0, 1)]).unwrap();
        assert_eq!(bd.nu.values, vec![1]);
        assert_eq!(dt_invariant(&bd).unwrap(), 1);
    }

    #[test]
    fn lagrangian_signs() {
        let bd = a1();
        let v = lagrangify(&bd.space, &Cycle::prime(&bd.space, 1));
        assert_eq!(v.terms, vec![0, -1]);
        assert_eq!(project(&bd.space, &v), Cycle::prime(&bd.space, 1));
        let ch = lagrangify(&bd.space, &bd.canonical);
        assert_eq!(ch.terms, vec![0, 1]);
        assert_eq!(intersection_with_zero_section(&bd.space, &bd.eu, &ch).unwrap(), dt_invariant(&bd).unwrap());
        let point = LagrangianCycle { terms: vec![1, 0] };
        assert_eq!(intersection_with_zero_section(&bd.space, &bd.eu, &point).unwrap(), 1);
        let zero = LagrangianCycle { terms: vec![0, 0] };
        assert_eq!(intersection_with_zero_section(&bd.space, &bd.eu, &zero).unwrap(), 0);
    }

    #[test]
    fn a1_example() {
        let bd = a1();
        assert_eq!(dt_invariant(&bd).unwrap(), -1);
        let r = kiem_li_localized(&bd, &[true, false]).unwrap();
        assert_eq!(r.c2.coefficients, vec![0, -1]);
        assert!(r.c1.is_zero());
        assert_eq!(r.chi_f_nu2, -1);
        assert_eq!(r.localized, -1);
        assert!(r.holds());
    }

    #[test]
    fn fixed_locus_validation() {
        let bd = a1();
        assert!(split_cone(&bd, &[true, true]).is_err());
        assert!(split_cone(&bd, &[false, false]).is_err());
        let space = StratifiedSpace::new(vec![StratumSpec::new("E", 1, 2, false, &[])]).unwrap();
        let bd = BehrendData::new(space.clone(), EuMatrix::defaults(&space), vec![ConeComponent::new("E", 1, 1)])
            .unwrap();
        assert!(matches!(split_cone(&bd, &[false]), Err(Error::Validation(_))));
    }

    #[test]
    fn all_fixed_means_no_c2() {
        let space = StratifiedSpace::new(vec![
            StratumSpec::new("p", 0, 1, true, &[]),
            StratumSpec::new("c", 1, 1, true, &["p"]),
        ])
        .unwrap();
        let bd = BehrendData::new(
            space.clone(),
            EuMatrix::defaults(&space),
            vec![ConeComponent::new("c", 1, 2), ConeComponent::new("p", 0, 1)],
        )
        .unwrap();
        let r = kiem_li_localized(&bd, &[true, true]).unwrap();
        assert!(r.c2.is_zero());
        assert_eq!(r.localized, dt_invariant(&bd).unwrap());
        assert!(r.holds());
    }

    #[test]
    fn isolated_fixed_points() {
        for t in 0..6 {
            let bd = isolated_fixed_point(t).unwrap();
            let p = bd.space.index_of("P").unwrap();
            assert_eq!(bd.nu.values[p], if t % 2 == 0 { 1 } else { -1 });
            let r = kiem_li_localized(&bd, &bd.space.fixed_mask()).unwrap();
            assert_eq!(r.localized, bd.nu.values[p]);
        }
    }
}

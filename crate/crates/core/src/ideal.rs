//! Ideals with cached reduced Gröbner bases, elimination, saturation and
//! Hilbert-function invariants.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, normal_form, Budget};
use crate::hilbert;
use crate::poly::polynomial::same_context;
use crate::poly::{BlockKind, Context, Monomial, MonomialOrder, Polynomial, Q};

/// A reduced Gröbner basis together with the order it was computed under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| *p.leading_term(&self.order).expect("basis elements are nonzero").0)
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, &self.order)
    }
}

/// Ideal of a polynomial ring, given by generators.
#[derive(Debug, Clone)]
pub struct Ideal {
    ctx: Arc<Context>,
    generators: Vec<Polynomial>,
    cached: Option<Arc<GroebnerBasis>>,
}

impl Ideal {
    pub fn new(ctx: &Arc<Context>, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| !same_context(g.context(), ctx)) {
            return Err(Error::Context("generator from a different context".into()));
        }
        Ok(Ideal { ctx: ctx.clone(), generators, cached: None })
    }

    /// Ideal generated by `gens`, all of which must share a context.
    pub fn from_polys(gens: Vec<Polynomial>) -> Result<Ideal> {
        let ctx = gens
            .first()
            .ok_or_else(|| Error::InvalidInput("an ideal needs at least one generator to fix its ring".into()))?
            .context()
            .clone();
        Ideal::new(&ctx, gens)
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis> {
        self.cached.as_deref()
    }

    /// Copy of this ideal carrying its reduced basis for `ord`.
    pub fn reduced_groebner(&self, ord: &MonomialOrder, budget: &Budget) -> Result<Ideal> {
        if let Some(gb) = &self.cached {
            if gb.order == *ord {
                return Ok(self.clone());
            }
        }
        let (elements, _) = groebner_basis(&self.ctx, &self.generators, ord, budget)?;
        Ok(Ideal {
            ctx: self.ctx.clone(),
            generators: self.generators.clone(),
            cached: Some(Arc::new(GroebnerBasis { order: ord.clone(), elements })),
        })
    }

    /// Reduced basis for `ord`, computing it if necessary.
    pub fn basis(&self, ord: &MonomialOrder, budget: &Budget) -> Result<Arc<GroebnerBasis>> {
        match &self.cached {
            Some(gb) if gb.order == *ord => Ok(gb.clone()),
            _ => Ok(self.reduced_groebner(ord, budget)?.cached.expect("just computed")),
        }
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        Ok(self.basis(&MonomialOrder::GrevLex, budget)?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        let gb = self.basis(&MonomialOrder::GrevLex, budget)?;
        Ok(gb.normal_form(f).is_zero())
    }

    /// Equality as ideals (compares reduced grevlex bases).
    pub fn same_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        if !same_context(&self.ctx, &other.ctx) {
            return Ok(false);
        }
        let a = self.basis(&MonomialOrder::GrevLex, budget)?;
        let b = other.basis(&MonomialOrder::GrevLex, budget)?;
        Ok(a.elements == b.elements)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ctx, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(&self.ctx, gens)
    }

    /// Image of the ideal under a variable embedding into `target`.
    pub fn embed(&self, target: &Arc<Context>, map: &[usize]) -> Ideal {
        let gens = self.generators.iter().map(|g| g.embed(target, map)).collect();
        Ideal { ctx: target.clone(), generators: gens, cached: None }
    }

    /// Canonical text form of the generators.
    pub fn to_strings(&self) -> Vec<String> {
        self.generators.iter().map(Polynomial::to_text).collect()
    }
}

/// Free-function form of [`Ideal::reduced_groebner`].
pub fn reduced_groebner(ideal: &Ideal, ord: &MonomialOrder, budget: &Budget) -> Result<Ideal> {
    ideal.reduced_groebner(ord, budget)
}

/// Context with one extra affine variable appended; returns it with the
/// new variable's index.
fn with_aux_var(ctx: &Arc<Context>, stem: &str) -> Result<(Arc<Context>, usize)> {
    let name = ctx.fresh_name(stem);
    let block = ctx.fresh_name(&format!("_{stem}"));
    let ext = ctx.with_block(&block, BlockKind::Affine, vec![name])?;
    Ok((ext, ctx.nvars()))
}

/// Drops the trailing variables of `p`'s context (which must not occur).
fn restrict_to(p: &Polynomial, ctx: &Arc<Context>) -> Polynomial {
    debug_assert!((ctx.nvars()..p.context().nvars()).all(|i| !p.involves(i)));
    Polynomial::from_terms(ctx, p.terms().to_vec())
}

/// Elimination ideal `I ∩ k[remaining variables]`; the result is expressed
/// in the same context.
pub fn eliminate(ideal: &Ideal, vars: core::ops::Range<usize>, budget: &Budget) -> Result<Ideal> {
    let n = ideal.ctx.nvars();
    let idx: Vec<usize> = vars.clone().collect();
    let ord = MonomialOrder::eliminating_vars(n, &idx);
    let gb = ideal.basis(&ord, budget)?;
    let kept = gb
        .elements
        .iter()
        .filter(|p| !vars.clone().any(|v| p.involves(v)))
        .cloned()
        .collect();
    Ideal::new(&ideal.ctx, kept)
}

/// `I : g^∞` through the extra variable `1 - t·g`.
pub fn saturate_by(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::InvalidInput("cannot saturate by the zero polynomial".into()));
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    let (ext, t) = with_aux_var(&ideal.ctx, "t")?;
    let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|p| p.embed_prefix(&ext)).collect();
    let tg = Polynomial::var(&ext, t).checked_mul(&g.embed_prefix(&ext))?;
    gens.push(&Polynomial::one(&ext) - &tg);
    let big = Ideal::new(&ext, gens)?;
    let elim = eliminate(&big, t..t + 1, budget)?;
    let kept = elim.generators.iter().map(|p| restrict_to(p, &ideal.ctx)).collect();
    let out = Ideal::new(&ideal.ctx, kept)?;
    out.reduced_groebner(&MonomialOrder::GrevLex, budget)
}

/// `I ∩ K` via `s·I + (1 - s)·K` and elimination of `s`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !same_context(&a.ctx, &b.ctx) {
        return Err(Error::Context("intersecting ideals of different rings".into()));
    }
    let (ext, s) = with_aux_var(&a.ctx, "s")?;
    let sv = Polynomial::var(&ext, s);
    let one_minus = &Polynomial::one(&ext) - &sv;
    let mut gens = Vec::new();
    for p in &a.generators {
        gens.push(sv.checked_mul(&p.embed_prefix(&ext))?);
    }
    for p in &b.generators {
        gens.push(one_minus.checked_mul(&p.embed_prefix(&ext))?);
    }
    let big = Ideal::new(&ext, gens)?;
    let elim = eliminate(&big, s..s + 1, budget)?;
    let kept = elim.generators.iter().map(|p| restrict_to(p, &a.ctx)).collect();
    Ideal::new(&a.ctx, kept)?.reduced_groebner(&MonomialOrder::GrevLex, budget)
}

/// Saturation `I : J^∞`, computed as `⋂ᵢ (I : gᵢ^∞)` over the generators of
/// `J`. The result carries its reduced grevlex basis.
pub fn saturate(ideal: &Ideal, by: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !same_context(&ideal.ctx, &by.ctx) {
        return Err(Error::Context("saturating by an ideal of a different ring".into()));
    }
    let gens: Vec<&Polynomial> = by.generators.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(Error::InvalidInput("cannot saturate by the zero ideal".into()));
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let part = saturate_by(ideal, g, budget)?;
        if part.is_unit(budget)? {
            continue;
        }
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part, budget)?,
        });
    }
    match acc {
        Some(i) => Ok(i),
        None => Ideal::new(&ideal.ctx, vec![Polynomial::one(&ideal.ctx)])?
            .reduced_groebner(&MonomialOrder::GrevLex, budget),
    }
}

/// Krull dimension (from independent sets of the leading-term ideal) and
/// degree (from the affine Hilbert polynomial) of `k[x]/I`. For a
/// zero-dimensional ideal the degree is the vector-space dimension of the
/// quotient.
pub fn dimension_and_degree(ideal: &Ideal, budget: &Budget) -> Result<(usize, u64)> {
    let gb = ideal.basis(&MonomialOrder::GrevLex, budget)?;
    if gb.is_unit() {
        return Err(Error::EmptyScheme);
    }
    let n = ideal.ctx.nvars();
    let lms = gb.leading_monomials();
    let dim = hilbert::max_independent_set(&lms, n);
    let (hdim, deg) = hilbert::dimension_degree_from_series(&lms, n).ok_or(Error::EmptyScheme)?;
    debug_assert_eq!(dim, hdim, "independent-set and Hilbert dimensions disagree");
    let _ = hdim;
    Ok((dim, u64::try_from(deg).map_err(|_| Error::InvalidInput("negative degree".into()))?))
}

/// Rational point helper: `(x₁ - p₁, …, xₙ - pₙ)` over the variables of
/// `range`.
pub fn point_ideal_generators(ctx: &Arc<Context>, range: core::ops::Range<usize>, point: &[Q]) -> Vec<Polynomial> {
    range
        .zip(point.iter())
        .map(|(i, p)| &Polynomial::var(ctx, i) - &Polynomial::constant(ctx, p.clone()))
        .collect()
}

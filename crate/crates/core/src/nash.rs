//! Nash blow-up of a hypersurface as the closure of its Gauss graph, and the
//! pushforward of the Segre class of a fiber.
//!
//! The graph lives in `A^n × P^{n-1}` (blocks `x | y`). The Segre class of
//! the fiber over `P` is read off a second graph closure, the blow-up of the
//! Gauss graph along the fiber, realized in `A^n × P^{n-1} × P^{n-1}`
//! (blocks `x | y | z`) with `z` proportional to `x - P`. On that blow-up the
//! exceptional divisor has class `H_x - H_z`, so every intersection number
//! needed is a multidegree.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gcd::is_squarefree;
use crate::groebner::{groebner_basis, leading_ideal, normal_form, Arithmetic, Budget};
use crate::hilbert;
use crate::ideal::{dimension_and_degree, point_ideal_generators, saturate, Ideal};
use crate::linear::{generic_affine_form, generic_combination, generic_linear_form};
use crate::poly::{BlockKind, Context, Monomial, MonomialOrder, Polynomial, Q};

/// Number of seeds every multidegree table is computed under.
pub const SEED_TRIALS: u64 = 3;

/// Draw index reserved for the affine chart `ℓ = 1` of a projective block.
const CHART_DRAW: u64 = 1 << 20;

/// First draw index for hyperplanes through the blow-up centre.
const THROUGH_POINT_DRAW: u64 = 1 << 10;

/// Seed and work limits shared by the generic-choice computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    pub budget: Budget,
    /// Arithmetic used for the zero-dimensional length counts.
    pub arithmetic: Arithmetic,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 1, budget: Budget::default(), arithmetic: Arithmetic::default() }
    }
}

/// Closure of the graph of the Gauss map `P ↦ [∂₁f(P) : … : ∂ₙf(P)]`.
#[derive(Debug, Clone)]
pub struct GaussGraph {
    n: usize,
    f: Polynomial,
    ctx: Arc<Context>,
    graph_ideal: Ideal,
}

impl GaussGraph {
    /// Ambient affine dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension of the hypersurface.
    pub fn d(&self) -> usize {
        self.n - 1
    }

    /// The defining equation, in its own context.
    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    /// Context with blocks `x` (affine) and `y` (projective).
    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// Saturated ideal of the graph closure, carrying its grevlex basis.
    pub fn graph_ideal(&self) -> &Ideal {
        &self.graph_ideal
    }
}

fn fresh_block_names(taken: &[&Context], stem: &str, n: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(n);
    for i in 1..=n {
        let mut name = format!("{stem}{i}");
        while taken.iter().any(|c| c.var_index(&name).is_some()) || out.contains(&name) {
            name.push('_');
        }
        out.push(name);
    }
    out
}

/// 2×2 minors `aᵢ·bⱼ - aⱼ·bᵢ` of the matrix with rows `a` and `b`.
fn minors(a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let m = &a[i].checked_mul(&b[j])? - &a[j].checked_mul(&b[i])?;
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Gauss graph of `V(f) ⊂ A^n`.
///
/// `f` must be nonconstant and squarefree with `n ≥ 2` variables, all in
/// affine blocks.
pub fn gauss_graph(f: &Polynomial, budget: &Budget) -> Result<GaussGraph> {
    let base = f.context();
    let n = base.nvars();
    if n < 2 {
        return Err(Error::InvalidInput("the Gauss graph needs at least two variables".into()));
    }
    if base.blocks().iter().any(|b| b.kind != BlockKind::Affine) {
        return Err(Error::Context("hypersurface equation must live in affine variables".into()));
    }
    if f.is_constant() {
        return Err(Error::InvalidInput("f is constant".into()));
    }
    if !is_squarefree(f, budget)? {
        return Err(Error::InvalidInput(format!("`{f}` is not squarefree")));
    }
    let ynames = fresh_block_names(&[base], "Y", n);
    let ctx = Context::builder()
        .block("x", BlockKind::Affine, base.var_names().iter().cloned())
        .block("y", BlockKind::Projective, ynames)
        .build()?;
    let fx = f.embed_prefix(&ctx);
    let grad: Vec<Polynomial> = fx.gradient().into_iter().take(n).collect();
    let ys: Vec<Polynomial> = (n..2 * n).map(|i| Polynomial::var(&ctx, i)).collect();
    let mut gens = vec![fx.clone()];
    gens.extend(minors(&ys, &grad)?);
    let jac: Vec<Polynomial> = grad.iter().filter(|g| !g.is_zero()).cloned().collect();
    let graph = saturate(&Ideal::new(&ctx, gens)?, &Ideal::new(&ctx, jac)?, budget)?;
    let (dim, _) = dimension_and_degree(&graph, budget)?;
    // affine cone over the y-block adds one to the dimension
    if dim != n {
        return Err(Error::DimensionMismatch(format!(
            "Gauss graph has dimension {} instead of {}",
            dim as i64 - 1,
            n - 1
        )));
    }
    Ok(GaussGraph { n, f: f.clone(), ctx, graph_ideal: graph })
}

fn check_point(g: &GaussGraph, point: &[Q]) -> Result<()> {
    if point.len() != g.n {
        return Err(Error::InvalidInput(format!("point has {} coordinates, expected {}", point.len(), g.n)));
    }
    if g.f.evaluate(point) != Q::from_integer(0.into()) {
        return Err(Error::InvalidInput("point does not lie on the hypersurface".into()));
    }
    Ok(())
}

/// Scheme-theoretic fiber of the graph over `point`: the graph ideal plus
/// `(x₁ - P₁, …, xₙ - Pₙ)`.
pub fn fiber_ideal(g: &GaussGraph, point: &[Q]) -> Result<Ideal> {
    check_point(g, point)?;
    g.graph_ideal.with_generators(point_ideal_generators(&g.ctx, 0..g.n, point))
}

/// Multidegrees `(e_1, …, e_k) ↦ degree` of a multi-homogeneous scheme, one
/// exponent per block of its context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultidegreeTable {
    pub blocks: Vec<String>,
    pub dimension: usize,
    pub entries: BTreeMap<Vec<usize>, u64>,
}

impl MultidegreeTable {
    /// Entry for an exponent tuple; tuples outside the table are 0.
    pub fn get(&self, exps: &[usize]) -> u64 {
        self.entries.get(exps).copied().unwrap_or(0)
    }
}

/// Settings for [`multidegrees`].
#[derive(Debug, Clone)]
pub struct MultidegreeOptions {
    /// Components inside `V(excise)` are discarded (the table describes the
    /// closure of the complement).
    pub excise: Option<Ideal>,
    /// Dimension of the scheme, if known; computed otherwise.
    pub dimension: Option<usize>,
    pub options: Options,
}

/// Every tuple with `e_b` in the admissible range of block `b` and
/// `Σ e_b = total`.
fn exponent_tuples(limits: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn rec(limits: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == limits.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = limits[cur.len() + 1..].iter().sum();
        let lo = left.saturating_sub(rest);
        for e in lo..=limits[cur.len()].min(left) {
            cur.push(e);
            rec(limits, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(limits, total, &mut Vec::new(), &mut out);
    out
}

fn scheme_dimension(ideal: &Ideal, budget: &Budget) -> Result<usize> {
    let projective = ideal.context().blocks().iter().filter(|b| b.kind == BlockKind::Projective).count();
    let (dim, _) = dimension_and_degree(ideal, budget)?;
    dim.checked_sub(projective)
        .ok_or_else(|| Error::DimensionMismatch("scheme is empty in some projective block".into()))
}

/// Multidegree table of `ideal`, checked across [`SEED_TRIALS`] seeds.
pub fn multidegrees(ideal: &Ideal, opts: &MultidegreeOptions) -> Result<MultidegreeTable> {
    let budget = &opts.options.budget;
    let ctx = ideal.context().clone();
    for b in ctx.blocks().iter().filter(|b| b.kind == BlockKind::Projective) {
        if ideal.generators().iter().any(|g| !g.is_homogeneous_in(b.range())) {
            return Err(Error::InvalidInput(format!("ideal is not homogeneous in block `{}`", b.name)));
        }
    }
    let dimension = match opts.dimension {
        Some(d) => d,
        None => {
            if opts.excise.is_some() {
                return Err(Error::InvalidInput("an excised multidegree needs its dimension".into()));
            }
            scheme_dimension(ideal, budget)?
        }
    };
    let limits: Vec<usize> = ctx
        .blocks()
        .iter()
        .map(|b| match b.kind {
            BlockKind::Affine => b.len,
            BlockKind::Projective => b.len - 1,
        })
        .collect();
    if limits.iter().sum::<usize>() < dimension {
        return Err(Error::DimensionMismatch(format!(
            "dimension {dimension} exceeds the ambient dimension {}",
            limits.iter().sum::<usize>()
        )));
    }
    let tuples = exponent_tuples(&limits, dimension);
    let blocks: Vec<String> = ctx.blocks().iter().map(|b| b.name.clone()).collect();
    seeded_table(blocks, dimension, &tuples, opts.options.seed, |exps, seed| {
        let mut forms = Vec::new();
        for (b, &e) in ctx.blocks().iter().zip(exps) {
            for r in 0..e as u64 {
                forms.push(match b.kind {
                    BlockKind::Affine => generic_affine_form(&ctx, &b.name, seed, r)?,
                    BlockKind::Projective => generic_linear_form(&ctx, &b.name, seed, r)?,
                });
            }
            if b.kind == BlockKind::Projective {
                forms.push(chart(&ctx, &b.name, seed)?);
            }
        }
        cut_length(ideal, forms, opts.excise.as_ref(), seed, budget, opts.options.arithmetic).and_then(|c| {
            c.ok_or_else(|| positive_dimensional(exps, dimension))
        })
    })
}

fn positive_dimensional(exps: &[usize], dimension: usize) -> Error {
    Error::DimensionMismatch(format!(
        "cutting by {exps:?} leaves a positive-dimensional scheme; dimension {dimension} is too small"
    ))
}

/// Generic affine chart `ℓ = 1` of a projective block.
fn chart(ctx: &Arc<Context>, block: &str, seed: u64) -> Result<Polynomial> {
    Ok(&generic_linear_form(ctx, block, seed, CHART_DRAW)? - &Polynomial::one(ctx))
}

/// Evaluates every tuple under [`SEED_TRIALS`] consecutive seeds and
/// insists that they agree.
fn seeded_table(
    blocks: Vec<String>,
    dimension: usize,
    tuples: &[Vec<usize>],
    seed: u64,
    mut entry: impl FnMut(&[usize], u64) -> Result<u64>,
) -> Result<MultidegreeTable> {
    let mut reference: Option<MultidegreeTable> = None;
    for trial in 0..SEED_TRIALS {
        let s = seed.wrapping_add(trial);
        let mut entries = BTreeMap::new();
        for t in tuples {
            entries.insert(t.clone(), entry(t, s)?);
        }
        let table = MultidegreeTable { blocks: blocks.clone(), dimension, entries };
        match &reference {
            None => reference = Some(table),
            Some(r) => {
                if let Some((k, v)) = r.entries.iter().find(|(k, v)| table.entries[*k] != **v) {
                    return Err(Error::SeedInstability(format!(
                        "multidegree {k:?} is {v} with seed {seed} but {} with seed {s}; rerun with another seed",
                        table.entries[k]
                    )));
                }
            }
        }
    }
    Ok(reference.expect("at least one trial"))
}

/// Length of the scheme `ideal + (forms)` away from `V(excise)`, or `None`
/// if it is not zero-dimensional.
///
/// The excision uses `1 - t·g` for a seeded generic element `g` of the
/// excised ideal, so it is exact for every point outside `V(g)`; the other
/// generic choices are drawn independently of `g`.
fn cut_length(
    ideal: &Ideal,
    forms: Vec<Polynomial>,
    excise: Option<&Ideal>,
    seed: u64,
    budget: &Budget,
    arithmetic: Arithmetic,
) -> Result<Option<u64>> {
    let base = ideal.context();
    let (ctx, t) = match excise {
        None => (base.clone(), None),
        Some(_) => {
            let name = base.fresh_name("t");
            let block = base.fresh_name("_t");
            (base.with_block(&block, BlockKind::Affine, vec![name])?, Some(base.nvars()))
        }
    };
    let mut linear: Vec<Polynomial> = Vec::new();
    let mut other: Vec<Polynomial> = Vec::new();
    for g in ideal.generators().iter().chain(forms.iter()) {
        let g = g.embed_prefix(&ctx);
        if g.total_degree().unwrap_or(0) <= 1 {
            linear.push(g);
        } else {
            other.push(g);
        }
    }
    if let (Some(j), Some(t)) = (excise, t) {
        let gens: Vec<Polynomial> = j.generators().iter().map(|g| g.embed_prefix(&ctx)).collect();
        let g = generic_combination(&gens, "excise", seed, 0)
            .ok_or_else(|| Error::InvalidInput("empty excision ideal".into()))?;
        let tg = Polynomial::var(&ctx, t).checked_mul(&g)?;
        other.push(&Polynomial::one(&ctx) - &tg);
    }
    let ord = MonomialOrder::GrevLex;
    // solve the linear part first, then eliminate its pivots from the rest;
    // the union of both bases is a Gröbner basis since the leading terms
    // of the second never involve a pivot
    let (lin_basis, _) = groebner_basis(&ctx, &linear, &ord, budget)?;
    if lin_basis.first().is_some_and(|p| p.is_constant()) {
        return Ok(Some(0));
    }
    let reduced: Vec<Polynomial> = other
        .iter()
        .map(|p| normal_form(p, &lin_basis, &ord))
        .filter(|p| !p.is_zero())
        .collect();
    let rest = leading_ideal(&ctx, &reduced, &ord, budget, arithmetic)?;
    if rest.first().is_some_and(Monomial::is_one) {
        return Ok(Some(0));
    }
    let lts: Vec<Monomial> =
        lin_basis.iter().map(|p| *p.leading_term(&ord).expect("nonzero").0).chain(rest).collect();
    Ok(hilbert::standard_monomial_count(&lts, ctx.nvars()))
}

/// Pushforward to the `y`-factor projective space of the Segre class of
/// the Nash fiber: entry `j` is the coefficient of a `j`-plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegreVector(pub Vec<i64>);

impl SegreVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Degree of `c(TZ) ∩ s` with `c(TZ) = (1 + h)⁻¹`: the alternating sum
    /// of the entries.
    pub fn alternating_sum(&self) -> i64 {
        self.0.iter().enumerate().map(|(m, s)| if m % 2 == 0 { *s } else { -*s }).sum()
    }
}

impl core::fmt::Display for SegreVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Segre vector together with the data it was assembled from.
#[derive(Debug, Clone)]
pub struct SegreComputation {
    pub vector: SegreVector,
    /// Multidegrees of the blow-up, blocks `x | y | z`.
    pub table: MultidegreeTable,
    pub fiber: Ideal,
    pub blowup: Ideal,
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) as i64 / (i + 1) as i64;
    }
    r
}

/// Ideal of the blow-up of the graph along the fiber over `point` before
/// removing the exceptional locus, and the ideal to excise.
pub fn blowup_presentation(g: &GaussGraph, point: &[Q]) -> Result<(Ideal, Ideal)> {
    check_point(g, point)?;
    let n = g.n;
    let znames = fresh_block_names(&[&g.ctx], "Z", n);
    let ctx = g.ctx.with_block("z", BlockKind::Projective, znames)?;
    let basis = g.graph_ideal.basis(&MonomialOrder::GrevLex, &Budget::default())?;
    let mut gens: Vec<Polynomial> = basis.elements.iter().map(|p| p.embed_prefix(&ctx)).collect();
    let centre = point_ideal_generators(&ctx, 0..n, point);
    let zs: Vec<Polynomial> = (2 * n..3 * n).map(|i| Polynomial::var(&ctx, i)).collect();
    gens.extend(minors(&zs, &centre)?);
    Ok((Ideal::new(&ctx, gens)?, Ideal::new(&ctx, centre)?))
}

/// Multidegrees `(a, b, c)` of the blow-up of the graph along the fiber
/// over `point`, in blocks `x | y | z`.
///
/// Off the exceptional divisor the blow-up maps isomorphically to the graph
/// and a `z`-hyperplane `Σ cᵢ·zᵢ` becomes the hyperplane `Σ cᵢ·(xᵢ - Pᵢ)`
/// through `P`. Generic cuts of total codimension `d` miss the exceptional
/// divisor, so each entry is a length on the graph with `x = P` excised.
/// Agrees with [`multidegrees`] of [`blowup_presentation`], which is much
/// slower.
pub fn blowup_multidegrees(g: &GaussGraph, point: &[Q], opts: &Options) -> Result<MultidegreeTable> {
    check_point(g, point)?;
    let n = g.n;
    let ctx = &g.ctx;
    let centre = Ideal::new(ctx, point_ideal_generators(ctx, 0..n, point))?;
    let tuples = exponent_tuples(&[n, n - 1, n - 1], g.d());
    let blocks = vec!["x".to_string(), "y".to_string(), "z".to_string()];
    seeded_table(blocks, g.d(), &tuples, opts.seed, |e, seed| {
        let mut forms = Vec::new();
        for r in 0..e[0] as u64 {
            forms.push(generic_affine_form(ctx, "x", seed, r)?);
        }
        for r in 0..e[1] as u64 {
            forms.push(generic_linear_form(ctx, "y", seed, r)?);
        }
        forms.push(chart(ctx, "y", seed)?);
        for r in 0..e[2] as u64 {
            let l = generic_linear_form(ctx, "x", seed, THROUGH_POINT_DRAW + r)?;
            let at_p = Polynomial::constant(ctx, l.evaluate(&pad(point, ctx.nvars())));
            forms.push(&l - &at_p);
        }
        cut_length(&g.graph_ideal, forms, Some(&centre), seed, &opts.budget, opts.arithmetic)?
            .ok_or_else(|| positive_dimensional(e, g.d()))
    })
}

fn pad(point: &[Q], len: usize) -> Vec<Q> {
    let mut v = point.to_vec();
    v.resize(len, Q::from_integer(0.into()));
    v
}

/// Segre vector of the fiber over `point`, with the intermediate data.
pub fn segre_fiber_detailed(g: &GaussGraph, point: &[Q], opts: &Options) -> Result<SegreComputation> {
    let fiber = fiber_ideal(g, point)?;
    if fiber.is_unit(&opts.budget)? {
        return Err(Error::EmptyScheme);
    }
    let d = g.d();
    let (blowup, _) = blowup_presentation(g, point)?;
    let table = blowup_multidegrees(g, point, opts)?;
    let mut s = vec![0i64; g.n];
    for (j, slot) in s.iter_mut().enumerate().take(d) {
        let k = d - j;
        let mut acc: i64 = 0;
        for a in 0..=k {
            let sign = if (k - a) % 2 == 0 { 1 } else { -1 };
            acc += sign * binomial(k, a) * table.get(&[a, j, k - a]) as i64;
        }
        *slot = if (k - 1) % 2 == 0 { acc } else { -acc };
    }
    Ok(SegreComputation { vector: SegreVector(s), table, fiber, blowup })
}

/// Segre vector of the Nash fiber over `point`.
pub fn segre_fiber(g: &GaussGraph, point: &[Q], opts: &Options) -> Result<SegreVector> {
    Ok(segre_fiber_detailed(g, point, opts)?.vector)
}

/// Readable one-line summary of a table, e.g. `(1,0,1):2 (0,1,1):2`.
pub fn format_table(t: &MultidegreeTable) -> String {
    let mut out = String::new();
    for (k, v) in &t.entries {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push('(');
        out.push_str(&k.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","));
        out.push_str("):");
        out.push_str(&v.to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_affine, q};

    fn graph(text: &str) -> GaussGraph {
        gauss_graph(&parse_affine(text, None).unwrap(), &Budget::default()).unwrap()
    }

    fn origin(n: usize) -> Vec<Q> {
        vec![q(0); n]
    }

    #[test]
    fn tuples_cover_the_simplex() {
        let t = exponent_tuples(&[2, 1], 2);
        assert_eq!(t, vec![vec![1, 1], vec![2, 0]]);
        assert_eq!(exponent_tuples(&[4, 3, 3], 3).len(), 10);
    }

    #[test]
    fn smooth_hyperplane_graph() {
        let g = graph("x + 0*y");
        let fib = fiber_ideal(&g, &[q(0), q(5)]).unwrap();
        assert_eq!(dimension_and_degree(&fib, &Budget::default()).unwrap(), (1, 1));
        let t = multidegrees(
            g.graph_ideal(),
            &MultidegreeOptions { excise: None, dimension: None, options: Options::default() },
        )
        .unwrap();
        assert_eq!(t.dimension, 1);
        assert_eq!(t.get(&[1, 0]), 1);
        assert_eq!(t.get(&[0, 1]), 0);
    }

    #[test]
    fn node_fiber_is_two_points() {
        let g = graph("x*y");
        let fib = fiber_ideal(&g, &origin(2)).unwrap();
        // affine cone over two reduced points of P^1
        assert_eq!(dimension_and_degree(&fib, &Budget::default()).unwrap(), (1, 2));
    }

    #[test]
    fn cusp_fiber_is_a_double_point() {
        let g = graph("y^2 - x^3");
        let fib = fiber_ideal(&g, &origin(2)).unwrap();
        assert_eq!(dimension_and_degree(&fib, &Budget::default()).unwrap(), (1, 2));
        // variables are (y, x), so the limit direction is [1:0]; in the chart
        // Y1 = 1 the second coordinate is nilpotent of order two
        let chart = fib.with_generators([&Polynomial::var(g.context(), 2) - &Polynomial::one(g.context())]).unwrap();
        assert_eq!(dimension_and_degree(&chart, &Budget::default()).unwrap(), (0, 2));
        let second = Polynomial::var(g.context(), 3);
        assert!(!chart.contains(&second, &Budget::default()).unwrap());
        assert!(chart.contains(&second.pow(2).unwrap(), &Budget::default()).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        let b = Budget::default();
        assert!(gauss_graph(&parse_affine("x^2*y", None).unwrap(), &b).is_err());
        assert!(gauss_graph(&parse_affine("x", None).unwrap(), &b).is_err());
        let g = graph("x*y");
        assert!(fiber_ideal(&g, &[q(1), q(1)]).is_err());
        assert!(fiber_ideal(&g, &[q(0)]).is_err());
    }

    #[test]
    fn smooth_point_segre() {
        let g = graph("y - x^2");
        let s = segre_fiber(&g, &[q(1), q(1)], &Options::default()).unwrap();
        assert_eq!(s.0, vec![1, 0]);
    }

    #[test]
    fn plane_curve_segre() {
        // curve: s(fiber, curve) is the fiber length in degree 0
        let g = graph("y^2 - x^3");
        assert_eq!(segre_fiber(&g, &origin(2), &Options::default()).unwrap().0, vec![2, 0]);
        let g = graph("x*y");
        assert_eq!(segre_fiber(&g, &origin(2), &Options::default()).unwrap().0, vec![2, 0]);
    }

    #[test]
    fn explicit_blowup_agrees() {
        for (f, n) in [("y*u - x*v", 4), ("x^2 + y^2 + z^2", 3), ("y^2 - x^3", 2)] {
            let g = graph(f);
            let p = origin(n);
            let (b, e) = blowup_presentation(&g, &p).unwrap();
            let slow = multidegrees(
                &b,
                &MultidegreeOptions { excise: Some(e), dimension: Some(n - 1), options: Options::default() },
            )
            .unwrap();
            let fast = blowup_multidegrees(&g, &p, &Options::default()).unwrap();
            assert_eq!(slow, fast, "{f}");
        }
    }

    #[test]
    fn rational_and_modular_counts_agree() {
        for (f, n) in [("y*u - x*v", 4), ("x^3 + y^3 + z^3", 3)] {
            let g = graph(f);
            let exact = Options { arithmetic: Arithmetic::Rational, ..Options::default() };
            let a = blowup_multidegrees(&g, &origin(n), &exact).unwrap();
            let b = blowup_multidegrees(&g, &origin(n), &Options::default()).unwrap();
            assert_eq!(a, b, "{f}");
        }
    }

    #[test]
    fn quadric_cone_segre() {
        let g = graph("x^2 + y^2 + z^2");
        let s = segre_fiber(&g, &origin(3), &Options::default()).unwrap();
        assert_eq!(s.0, vec![2, 2, 0]);
        assert_eq!(s.alternating_sum(), 0);
    }
}

//! Local Euler obstruction of a hypersurface at a rational point, and a
//! harness cross-checking it against its closed-form properties.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gcd::exact_divide;
use crate::ideal::{dimension_and_degree, Ideal};
use crate::nash::{gauss_graph, segre_fiber_detailed, MultidegreeTable, Options, SegreVector};
use crate::poly::{q, Context, Monomial, Polynomial, Q};

fn check_arity(f: &Polynomial, point: &[Q]) -> Result<()> {
    let n = f.context().nvars();
    if point.len() != n {
        return Err(Error::InvalidInput(format!("point has {} coordinates, expected {n}", point.len())));
    }
    Ok(())
}

/// `f(x + P)`, the expansion of `f` around `point`.
pub fn translate(f: &Polynomial, point: &[Q]) -> Result<Polynomial> {
    check_arity(f, point)?;
    let ctx = f.context();
    let images: Vec<Polynomial> = (0..ctx.nvars())
        .map(|i| &Polynomial::var(ctx, i) + &Polynomial::constant(ctx, point[i].clone()))
        .collect();
    f.substitute(&images)
}

/// Multiplicity of `V(f)` at `point`: the lowest total degree of `f`
/// expanded around it.
pub fn multiplicity_at(f: &Polynomial, point: &[Q]) -> Result<u32> {
    let g = translate(f, point)?;
    match g.lowest_degree() {
        None => Err(Error::InvalidInput("the zero polynomial has no multiplicity".into())),
        Some(0) => Err(Error::InvalidInput("point does not lie on the hypersurface".into())),
        Some(m) => Ok(m),
    }
}

/// True if some partial derivative is nonzero at `point`.
pub fn is_smooth_at(f: &Polynomial, point: &[Q]) -> bool {
    f.gradient().iter().any(|d| d.evaluate(point) != q(0))
}

/// Euler obstruction with the Segre data it came from.
#[derive(Debug, Clone)]
pub struct EuComputation {
    pub eu: i64,
    pub segre: SegreVector,
    pub table: MultidegreeTable,
}

/// `eu(V(f))(P)` together with the Segre vector and multidegree table.
pub fn eu_detailed(f: &Polynomial, point: &[Q], opts: &Options) -> Result<EuComputation> {
    check_arity(f, point)?;
    let g = gauss_graph(f, &opts.budget)?;
    let s = segre_fiber_detailed(&g, point, opts)?;
    Ok(EuComputation { eu: s.vector.alternating_sum(), segre: s.vector, table: s.table })
}

/// Local Euler obstruction of the hypersurface `V(f)` at `point`.
pub fn eu_at_point(f: &Polynomial, point: &[Q], opts: &Options) -> Result<i64> {
    Ok(eu_detailed(f, point, opts)?.eu)
}

/// One cross-check recorded in an [`EuReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: i64,
    pub got: i64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.got
    }
}

/// Result of [`property_harness`].
#[derive(Debug, Clone)]
pub struct EuReport {
    pub f: Polynomial,
    pub point: Vec<Q>,
    pub segre: SegreVector,
    pub table: MultidegreeTable,
    pub eu: i64,
    pub checks: Vec<Check>,
}

impl EuReport {
    /// True when every recorded check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Drops variable `v` (which `f` must not involve) from the context.
fn drop_variable(f: &Polynomial, v: usize) -> Result<Polynomial> {
    let ctx = f.context();
    let n = ctx.nvars();
    let names: Vec<String> = (0..n).filter(|&i| i != v).map(|i| String::from(ctx.var_name(i))).collect();
    let small = Context::affine(&names)?;
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let e: Vec<u32> = (0..n).filter(|&i| i != v).map(|i| m.exp(i)).collect();
            (Monomial::from_exponents(&e).expect("fits"), c.clone())
        })
        .collect();
    Ok(Polynomial::from_terms(&small, terms))
}

/// Homogeneous `f` in three variables whose projective curve is smooth,
/// i.e. the partials only vanish together at the origin.
fn smooth_plane_curve_cone(f: &Polynomial, opts: &Options) -> Result<Option<u32>> {
    let ctx = f.context();
    if ctx.nvars() != 3 || !f.is_homogeneous_in(0..3) {
        return Ok(None);
    }
    let grad: Vec<Polynomial> = f.gradient().into_iter().filter(|p| !p.is_zero()).collect();
    if grad.is_empty() {
        return Ok(None);
    }
    let jac = Ideal::new(ctx, grad)?;
    match dimension_and_degree(&jac, &opts.budget) {
        Ok((0, _)) => Ok(f.total_degree()),
        Ok(_) => Ok(None),
        Err(Error::EmptyScheme) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Runs [`eu_at_point`] and cross-checks it against the closed forms that
/// apply to the input:
///
/// - `smooth`: 1 at a nonsingular point;
/// - `curve-multiplicity`: for plane curves, the multiplicity at the point;
/// - `cone-2d-d^2`: for the cone over a smooth plane curve of degree `d`
///   at its vertex, `2d - d²`;
/// - `additivity`: for declared factors, the sum of their values over the
///   factors vanishing at the point;
/// - `cylinder`: for `f` independent of a variable, the value of `f` with
///   that variable removed at the projected point.
///
/// A failed cross-check is recorded, not raised; see [`EuReport::passed`].
pub fn property_harness(
    f: &Polynomial,
    point: &[Q],
    components: Option<&[Polynomial]>,
    opts: &Options,
) -> Result<EuReport> {
    let main = eu_detailed(f, point, opts)?;
    let eu = main.eu;
    let mut checks = Vec::new();
    let mut push = |name: &str, expected: i64| checks.push(Check { name: name.into(), expected, got: eu });
    let n = f.context().nvars();

    if is_smooth_at(f, point) {
        push("smooth", 1);
    }
    if n == 2 {
        push("curve-multiplicity", i64::from(multiplicity_at(f, point)?));
    }
    if point.iter().all(|c| *c == q(0)) {
        if let Some(d) = smooth_plane_curve_cone(f, opts)? {
            let d = i64::from(d);
            push("cone-2d-d^2", 2 * d - d * d);
        }
    }
    if let Some(parts) = components {
        let mut product = Polynomial::one(f.context());
        for p in parts {
            if p.context() != f.context() {
                return Err(Error::Context("factor lives in a different ring".into()));
            }
            product = product.checked_mul(p)?;
        }
        let ratio = exact_divide(f, &product).filter(|r| r.is_constant() && !r.is_zero());
        if ratio.is_none() {
            return Err(Error::InvalidInput("declared factors do not multiply to f".into()));
        }
        let mut sum = 0;
        for p in parts.iter().filter(|p| !p.is_constant() && p.evaluate(point) == q(0)) {
            sum += eu_at_point(p, point, opts)?;
        }
        push("additivity", sum);
    }
    if n >= 3 {
        if let Some(v) = (0..n).find(|&v| !f.involves(v)) {
            let reduced = drop_variable(f, v)?;
            let p: Vec<Q> = (0..n).filter(|&i| i != v).map(|i| point[i].clone()).collect();
            push("cylinder", eu_at_point(&reduced, &p, opts)?);
        }
    }
    Ok(EuReport { f: f.clone(), point: point.to_vec(), segre: main.segre, table: main.table, eu, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_affine, parse_polynomial};
    use alloc::vec;
    use alloc::vec::Vec;

    fn pt(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn multiplicities() {
        let f = parse_affine("y^2 - x^3", None).unwrap();
        assert_eq!(multiplicity_at(&f, &pt(&[0, 0])).unwrap(), 2);
        assert_eq!(multiplicity_at(&f, &pt(&[1, 1])).unwrap(), 1);
        let f = parse_affine("x*y", None).unwrap();
        assert_eq!(multiplicity_at(&f, &pt(&[0, 0])).unwrap(), 2);
        assert!(multiplicity_at(&f, &pt(&[1, 1])).is_err());
        // translated: (x-1)^3 - (y+2)^2 at (1, -2)
        let f = parse_affine("(x - 1)^3 - (y + 2)^2", None).unwrap();
        assert_eq!(multiplicity_at(&f, &pt(&[1, -2])).unwrap(), 2);
    }

    #[test]
    fn conifold_is_two() {
        let f = parse_affine("y*u - x*v", None).unwrap();
        let r = eu_detailed(&f, &pt(&[0, 0, 0, 0]), &Options::default()).unwrap();
        assert_eq!(r.segre.0, vec![2, 2, 2, 0]);
        assert_eq!(r.eu, 2);
    }

    #[test]
    fn harness_node_and_cusp_cylinder() {
        let o = Options::default();
        let f = parse_affine("x*y", None).unwrap();
        let ctx = f.context().clone();
        let parts = [parse_polynomial(&ctx, "x").unwrap(), parse_polynomial(&ctx, "y").unwrap()];
        let r = property_harness(&f, &pt(&[0, 0]), Some(&parts), &o).unwrap();
        assert_eq!(r.eu, 2);
        assert!(r.passed());
        assert_eq!(r.checks.len(), 2);

        let f = parse_affine("y^2 - x^3", Some(&["x".into(), "y".into(), "z".into()])).unwrap();
        let r = property_harness(&f, &pt(&[0, 0, 7]), None, &o).unwrap();
        assert_eq!(r.eu, 2);
        assert!(r.checks.iter().any(|c| c.name == "cylinder"));
        assert!(r.passed());
    }

    #[test]
    fn harness_rejects_wrong_factors() {
        let f = parse_affine("x*y", None).unwrap();
        let ctx = f.context().clone();
        let parts = [parse_polynomial(&ctx, "x").unwrap(), parse_polynomial(&ctx, "x + y").unwrap()];
        assert!(property_harness(&f, &pt(&[0, 0]), Some(&parts), &Options::default()).is_err());
    }

    #[test]
    fn smooth_cone_detection() {
        let o = Options::default();
        let f = parse_affine("x^2 + y^2 + z^2", None).unwrap();
        assert_eq!(smooth_plane_curve_cone(&f, &o).unwrap(), Some(2));
        // cone over a nodal cubic is not covered
        let f = parse_affine("y^2*z - x^3 - x^2*z", None).unwrap();
        assert_eq!(smooth_plane_curve_cone(&f, &o).unwrap(), None);
    }
}

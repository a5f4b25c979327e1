use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::context::Context;
use crate::poly::monomial::Monomial;
use crate::poly::order::MonomialOrder;

/// Exact rational coefficient.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted in decreasing graded reverse lexicographic order
/// with no zero coefficients, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ctx: Arc<Context>,
    terms: Vec<(Monomial, Q)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_context(a: &Arc<Context>, b: &Arc<Context>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::GrevLex.cmp(b, a)
}

impl Polynomial {
    pub fn zero(ctx: &Arc<Context>) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn constant(ctx: &Arc<Context>, c: Q) -> Self {
        Self::from_terms(ctx, vec![(Monomial::one(), c)])
    }

    pub fn one(ctx: &Arc<Context>) -> Self {
        Self::constant(ctx, Q::one())
    }

    pub fn var(ctx: &Arc<Context>, i: usize) -> Self {
        assert!(i < ctx.nvars(), "variable index out of range");
        Self::from_terms(ctx, vec![(Monomial::var(i), Q::one())])
    }

    /// Variable by name.
    pub fn var_named(ctx: &Arc<Context>, name: &str) -> Result<Self> {
        let i = ctx
            .var_index(name)
            .ok_or_else(|| Error::Context(alloc::format!("unknown variable `{name}`")))?;
        Ok(Self::var(ctx, i))
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ctx: &Arc<Context>, mut terms: Vec<(Monomial, Q)>) -> Self {
        terms.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, Q)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ctx: ctx.clone(), terms: out }
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> Q {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map_or_else(Q::zero, |(_, c)| c.clone())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Lowest total degree among the terms.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// Degree in the variables of `range`.
    pub fn partial_degree(&self, range: core::ops::Range<usize>) -> u32 {
        self.terms.iter().map(|(m, _)| m.partial_degree(range.clone())).max().unwrap_or(0)
    }

    pub fn is_homogeneous_in(&self, range: core::ops::Range<usize>) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.partial_degree(range.clone()));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading term with respect to `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Q)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// True if variable `i` occurs.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by a monomial times a coefficient.
    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(Polynomial::zero(&self.ctx));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (tm, tc) in &self.terms {
            let prod = tm.checked_mul(m).ok_or_else(exponent_overflow)?;
            terms.push((prod, tc * c));
        }
        // multiplication by a monomial preserves every monomial order
        Ok(Polynomial { ctx: self.ctx.clone(), terms })
    }

    /// Product with overflow check on exponents.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.assert_same(other);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.checked_mul(m2).ok_or_else(exponent_overflow)?, c1 * c2));
            }
        }
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ctx);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exp(i);
                m.div_var(i).map(|d| (d, c * q(i64::from(e))))
            })
            .collect();
        Polynomial::from_terms(&self.ctx, terms)
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ctx.nvars()).map(|i| self.derivative(i)).collect()
    }

    /// Value at a rational point (one coordinate per context variable).
    pub fn evaluate(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.ctx.nvars(), "point arity must match the context");
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, e) in m.exponents(point.len()).enumerate() {
                if e > 0 {
                    v *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Ring map sending variable `i` to `images[i]`. The result lives in the
    /// context of the images.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ctx.nvars() {
            return Err(Error::Context(alloc::format!(
                "substitution needs {} images, got {}",
                self.ctx.nvars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ctx.clone(),
            None => self.ctx.clone(),
        };
        if images.iter().any(|p| !same_context(&p.ctx, &target)) {
            return Err(Error::Context("substitution images live in different contexts".into()));
        }
        // cache powers per variable
        let n = self.ctx.nvars();
        let mut powers: Vec<Vec<Polynomial>> = (0..n).map(|_| vec![Polynomial::one(&target)]).collect();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, e) in m.exponents(n).enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().expect("nonempty").checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.checked_mul(&powers[i][e])?;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Reinterprets the polynomial in a larger context, variable `i` going to
    /// index `map[i]` of `target`.
    pub fn embed(&self, target: &Arc<Context>, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ctx.nvars());
        let n = self.ctx.nvars();
        let terms = self.terms.iter().map(|(m, c)| (m.remap(n, map), c.clone())).collect();
        Polynomial::from_terms(target, terms)
    }

    /// Embeds into a context whose first variables coincide with ours.
    pub fn embed_prefix(&self, target: &Arc<Context>) -> Polynomial {
        let map: Vec<usize> = (0..self.ctx.nvars()).collect();
        self.embed(target, &map)
    }

    /// Rescaled so that the leading coefficient (canonical order) is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Multiplies by the lcm of denominators and divides by the content so
    /// that coefficients are coprime integers with positive leading
    /// coefficient.
    pub fn integer_primitive(&self) -> Vec<(Monomial, BigInt)> {
        use num_integer::Integer;
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&lcm / c.denom())))
            .collect();
        let mut g = BigInt::zero();
        for (_, c) in &ints {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            let neg = ints.first().is_some_and(|(_, c)| c.is_negative());
            if neg {
                g = -g;
            }
            for (_, c) in ints.iter_mut() {
                *c = &*c / &g;
            }
        }
        ints
    }

    fn assert_same(&self, other: &Polynomial) {
        assert!(
            same_context(&self.ctx, &other.ctx),
            "polynomials from different contexts cannot be combined"
        );
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        self.assert_same(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                canonical_cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ctx: self.ctx.clone(), terms: out }
    }

    /// Canonical text form, e.g. `x^2*y - 3/2*z + 1`.
    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

pub(crate) fn exponent_overflow() -> Error {
    Error::ResourceLimit("exponent exceeds 255".into())
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    /// Panics on exponent overflow; use [`Polynomial::checked_mul`] when
    /// degrees are not under control.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("exponent overflow in polynomial product")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ctx: &Context, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, e) in m.exponents(ctx.nvars()).enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(ctx.var_name(i))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &self.ctx, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

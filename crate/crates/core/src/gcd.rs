//! Multivariate gcd over the rationals through ideal intersection, and the
//! squarefree test built on it.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::ideal::{intersect, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Q};

/// Division with remainder by a single polynomial (grevlex leading terms).
pub fn divide(a: &Polynomial, b: &Polynomial) -> (Polynomial, Polynomial) {
    assert!(!b.is_zero(), "division by zero polynomial");
    let ord = MonomialOrder::GrevLex;
    let ctx = a.context().clone();
    let (bm, bc) = {
        let (m, c) = b.leading_term(&ord).expect("nonzero");
        (*m, c.clone())
    };
    let mut quot: Vec<(Monomial, Q)> = Vec::new();
    let mut rem = Polynomial::zero(&ctx);
    let mut cur = a.clone();
    while let Some((m, c)) = cur.leading_term(&ord).map(|(m, c)| (*m, c.clone())) {
        if bm.divides(&m) {
            let qm = bm.quotient_of(&m);
            let qc = &c / &bc;
            cur = &cur - &b.mul_term(&qm, &qc).expect("exponent overflow in division");
            quot.push((qm, qc));
        } else {
            let lead = Polynomial::from_terms(&ctx, vec![(m, c)]);
            rem = &rem + &lead;
            cur = &cur - &lead;
        }
    }
    (Polynomial::from_terms(&ctx, quot), rem)
}

/// Exact quotient `a / b`, or `None` if `b` does not divide `a`.
pub fn exact_divide(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let (q, r) = divide(a, b);
    r.is_zero().then_some(q)
}

/// Monic gcd (leading coefficient one in grevlex), computed as
/// `a·b / lcm(a, b)` with the lcm generating `(a) ∩ (b)`.
pub fn gcd(a: &Polynomial, b: &Polynomial, budget: &Budget) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.monic_grevlex());
    }
    if b.is_zero() {
        return Ok(a.monic_grevlex());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(a.context()));
    }
    let ia = Ideal::new(a.context(), vec![a.clone()])?;
    let ib = Ideal::new(b.context(), vec![b.clone()])?;
    let meet = intersect(&ia, &ib, budget)?;
    let basis = meet.basis(&MonomialOrder::GrevLex, budget)?;
    let [lcm] = basis.elements.as_slice() else {
        return Err(Error::InvalidInput("intersection of principal ideals is not principal".into()));
    };
    let prod = a.checked_mul(b)?;
    let g = exact_divide(&prod, lcm)
        .ok_or_else(|| Error::InvalidInput("lcm does not divide the product".into()))?;
    Ok(g.monic_grevlex())
}

/// A nonconstant polynomial is squarefree iff it is coprime to all of its
/// partial derivatives (characteristic zero).
pub fn is_squarefree(f: &Polynomial, budget: &Budget) -> Result<bool> {
    if f.is_zero() {
        return Ok(false);
    }
    let mut g = f.clone();
    for i in 0..f.context().nvars() {
        let d = f.derivative(i);
        if d.is_zero() {
            continue;
        }
        g = gcd(&g, &d, budget)?;
        if g.is_constant() {
            return Ok(true);
        }
    }
    Ok(g.is_constant())
}

impl Polynomial {
    /// Scaled to make the grevlex leading coefficient one.
    pub fn monic_grevlex(&self) -> Polynomial {
        match self.leading_term(&MonomialOrder::GrevLex) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Context};
    use alloc::string::ToString;

    #[test]
    fn gcd_and_squarefree() {
        let b = Budget::default();
        let ctx = Context::affine(&["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_polynomial(&ctx, s).unwrap();
        let g = gcd(&p("(x - y)*(x + z)^2"), &p("(x + z)*(y^2 + 1)"), &b).unwrap();
        assert_eq!(g.to_string(), "x + z");
        assert!(is_squarefree(&p("x*y"), &b).unwrap());
        assert!(is_squarefree(&p("y^2 - x^3"), &b).unwrap());
        assert!(!is_squarefree(&p("x^2*y"), &b).unwrap());
        assert!(!is_squarefree(&p("(x + y - z)^2*(x - 1)"), &b).unwrap());
        assert!(!is_squarefree(&p("0"), &b).unwrap());
    }

    #[test]
    fn division() {
        let ctx = Context::affine(&["x", "y"]).unwrap();
        let p = |s: &str| parse_polynomial(&ctx, s).unwrap();
        assert_eq!(exact_divide(&p("x^2 - y^2"), &p("x - y")).unwrap(), p("x + y"));
        assert!(exact_divide(&p("x^2 + y^2"), &p("x - y")).is_none());
    }
}

//! Seeded pseudo-random choices of "generic" linear forms.
//!
//! Coefficients are drawn from the fixed set `{±1, …, ±1000}` with a ChaCha
//! stream keyed by the seed, the block (name and variable names) and a draw
//! index, so every choice is reproducible.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::poly::{q, Context, Monomial, Polynomial, Q};

/// Largest absolute value of a drawn coefficient.
pub const COEFF_RANGE: i64 = 1000;

fn fnv1a(bytes: &[u8], mut h: u64) -> u64 {
    for b in bytes {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Deterministic coefficient source.
pub struct CoefficientStream {
    rng: ChaCha8Rng,
}

impl CoefficientStream {
    /// Stream for (`tag`, `seed`, `draw`).
    pub fn new(tag: &[&str], seed: u64, draw: u64) -> Self {
        let mut h = 0xcbf2_9ce4_8422_2325u64;
        for t in tag {
            h = fnv1a(t.as_bytes(), h);
            h = fnv1a(&[0xff], h);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
        rng.set_stream(draw);
        CoefficientStream { rng }
    }

    /// Next coefficient from the fixed nonzero set.
    pub fn next_coeff(&mut self) -> Q {
        let r = (self.rng.next_u32() % (2 * COEFF_RANGE as u32)) as i64;
        let v = if r < COEFF_RANGE { r + 1 } else { COEFF_RANGE - 1 - r };
        q(v)
    }

    /// Next value in `0..n`.
    pub fn next_below(&mut self, n: u32) -> u32 {
        self.rng.next_u32() % n
    }
}

fn block_tag<'a>(ctx: &'a Context, block: &'a str) -> Result<Vec<&'a str>> {
    let b = ctx
        .block(block)
        .ok_or_else(|| Error::Context(alloc::format!("unknown block `{block}`")))?;
    let mut tag = Vec::with_capacity(b.len + 1);
    tag.push(b.name.as_str());
    tag.extend(b.range().map(|i| ctx.var_name(i)));
    Ok(tag)
}

/// Homogeneous degree-one form `Σ cᵢ·vᵢ` over the variables of `block`.
///
/// Identical arguments give identical forms; different draw indices give
/// independent coefficient streams.
pub fn generic_linear_form(ctx: &Arc<Context>, block: &str, seed: u64, draw: u64) -> Result<Polynomial> {
    let tag = block_tag(ctx, block)?;
    let range = ctx.block(block).expect("checked").range();
    let mut s = CoefficientStream::new(&tag, seed, draw);
    let terms = range.map(|i| (Monomial::var(i), s.next_coeff())).collect();
    Ok(Polynomial::from_terms(ctx, terms))
}

/// Affine hyperplane `c₀ + Σ cᵢ·vᵢ` in the variables of `block`.
pub fn generic_affine_form(ctx: &Arc<Context>, block: &str, seed: u64, draw: u64) -> Result<Polynomial> {
    let tag = block_tag(ctx, block)?;
    let range = ctx.block(block).expect("checked").range();
    let mut s = CoefficientStream::new(&tag, seed, draw);
    let mut terms: Vec<(Monomial, Q)> = range.map(|i| (Monomial::var(i), s.next_coeff())).collect();
    terms.push((Monomial::one(), s.next_coeff()));
    Ok(Polynomial::from_terms(ctx, terms))
}

/// Seeded combination `Σ cᵢ·gᵢ` of the given polynomials.
pub fn generic_combination(gens: &[Polynomial], tag: &str, seed: u64, draw: u64) -> Option<Polynomial> {
    let first = gens.first()?;
    let mut s = CoefficientStream::new(&[tag], seed, draw);
    let mut acc = Polynomial::zero(first.context());
    for g in gens {
        acc = &acc + &g.scale(&s.next_coeff());
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_distinct() {
        let ctx = Context::affine(&["x1", "x2"]).unwrap();
        let a = generic_linear_form(&ctx, "x", 1, 0).unwrap();
        let b = generic_linear_form(&ctx, "x", 1, 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total_degree(), Some(1));
        assert_eq!(a.nterms(), 2);
        let c = generic_linear_form(&ctx, "x", 1, 1).unwrap();
        let d = generic_linear_form(&ctx, "x", 2, 0).unwrap();
        assert_ne!(a, c);
        assert_ne!(a, d);
        assert!(generic_linear_form(&ctx, "nope", 1, 0).is_err());
    }

    #[test]
    fn coefficients_stay_in_range() {
        let mut s = CoefficientStream::new(&["t"], 7, 3);
        let mut seen_neg = false;
        let mut seen_pos = false;
        for _ in 0..2000 {
            let c = s.next_coeff();
            assert!(c != q(0) && c >= q(-COEFF_RANGE) && c <= q(COEFF_RANGE));
            seen_neg |= c < q(0);
            seen_pos |= c > q(0);
        }
        assert!(seen_neg && seen_pos);
    }
}

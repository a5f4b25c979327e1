//! Combinatorics of monomial ideals: Hilbert series numerators, Krull
//! dimension from independent variable sets, standard monomial counts.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::Monomial;

/// Drops generators divisible by other generators (and duplicates).
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of
/// `k[x_1..x_n] / (gens)`, in the standard grading.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    numerator_rec(gens, nvars)
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable shared by the most generators
    let mut best = 0;
    let mut best_count = 0;
    for v in 0..nvars {
        let c = gens.iter().filter(|g| g.exp(v) > 0).count();
        if c > best_count {
            best = v;
            best_count = c;
        }
    }
    let pivot = Monomial::var(best);
    // M + (x)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(best) == 0).copied().collect();
    plus.push(pivot);
    // M : x
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div_var(best).unwrap_or(*g)).collect();
    let mut out = numerator_rec(minimalize(&plus), nvars);
    let rest = numerator_rec(minimalize(&colon), nvars);
    poly_add(&mut out, &rest, 1);
    while out.len() > 1 && *out.last().expect("nonempty") == 0 {
        out.pop();
    }
    out
}

/// Krull dimension and degree read off the Hilbert series. `None` when the
/// ideal contains 1.
pub fn dimension_degree_from_series(gens: &[Monomial], nvars: usize) -> Option<(usize, i64)> {
    if gens.iter().any(|g| g.is_one()) {
        return None;
    }
    let mut num = hilbert_numerator(gens, nvars);
    let mut poles = nvars;
    // divide by (1 - t) while N(1) = 0
    while poles > 0 && num.iter().sum::<i64>() == 0 {
        let mut q = vec![0i64; num.len() - 1];
        // synthetic division by (1 - t): N = (1 - t) Q, so Q_k = sum_{i<=k} N_i
        let mut run = 0;
        for (k, slot) in q.iter_mut().enumerate() {
            run += num[k];
            *slot = run;
        }
        num = q;
        poles -= 1;
    }
    Some((poles, num.iter().sum()))
}

/// Size of the largest set of variables containing the support of no
/// generator; equals the Krull dimension of the quotient.
pub fn max_independent_set(gens: &[Monomial], nvars: usize) -> usize {
    let gens = minimalize(gens);
    let supports: Vec<u32> = gens.iter().map(|g| g.support_mask()).collect();
    let all = if nvars == 32 { u32::MAX } else { (1u32 << nvars) - 1 };
    nvars - min_hitting_set(&supports, 0, all, nvars)
}

/// Smallest set of variables meeting every support in `supports`.
fn min_hitting_set(supports: &[u32], chosen: u32, all: u32, bound: usize) -> usize {
    let Some(miss) = supports.iter().find(|s| *s & chosen == 0) else {
        return chosen.count_ones() as usize;
    };
    if chosen.count_ones() as usize + 1 >= bound {
        return bound;
    }
    let mut best = bound;
    let mut candidates = *miss & all;
    while candidates != 0 {
        let bit = candidates & candidates.wrapping_neg();
        candidates &= candidates - 1;
        let r = min_hitting_set(supports, chosen | bit, all, best);
        if r < best {
            best = r;
        }
    }
    best
}

/// Number of monomials outside a zero-dimensional monomial ideal. `None`
/// when the quotient is infinite dimensional.
pub fn standard_monomial_count(gens: &[Monomial], nvars: usize) -> Option<u64> {
    match dimension_degree_from_series(gens, nvars) {
        None => Some(0),
        Some((0, d)) => Some(d as u64),
        Some(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn staircase_count() {
        // (x^2, y^3): 6 standard monomials
        let g = [m(&[2, 0]), m(&[0, 3])];
        assert_eq!(standard_monomial_count(&g, 2), Some(6));
        assert_eq!(max_independent_set(&g, 2), 0);
        // enumerate directly as an oracle
        let mut count = 0;
        for a in 0..10 {
            for b in 0..10 {
                let mono = m(&[a, b]);
                if !g.iter().any(|x| x.divides(&mono)) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn union_of_lines() {
        let g = [m(&[1, 1])];
        assert_eq!(dimension_degree_from_series(&g, 2), Some((1, 2)));
        assert_eq!(max_independent_set(&g, 2), 1);
    }

    #[test]
    fn non_coprime_pivot() {
        // (x*y, y*z, x*z) in 3 vars: three coordinate axes, dim 1 degree 3
        let g = [m(&[1, 1, 0]), m(&[0, 1, 1]), m(&[1, 0, 1])];
        assert_eq!(dimension_degree_from_series(&g, 3), Some((1, 3)));
        assert_eq!(max_independent_set(&g, 3), 1);
        // (x^2*y, x*y^2) in 2 vars: dim 1 (two lines), degree 2
        let g = [m(&[2, 1]), m(&[1, 2])];
        assert_eq!(dimension_degree_from_series(&g, 2), Some((1, 2)));
    }

    #[test]
    fn unit_and_zero() {
        assert_eq!(dimension_degree_from_series(&[Monomial::one()], 3), None);
        assert_eq!(dimension_degree_from_series(&[], 3), Some((3, 1)));
        assert_eq!(max_independent_set(&[], 3), 3);
    }
}

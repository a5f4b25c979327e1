//! Seeded random and exhaustive stratified data for property checks.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::behrend::ConeComponent;
use crate::constructible::{Cycle, EuEntry, EuMatrix, Provenance, StratifiedSpace, StratumSpec};
use crate::error::Result;
use crate::poly::{q, Polynomial, Q};

/// Small deterministic generator for test data.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let width = (hi - lo + 1) as u64;
        lo + (self.rng.next_u64() % width) as i64
    }

    pub fn coin(&mut self) -> bool {
        self.rng.next_u32() & 1 == 1
    }

    /// A space with `1..=max_strata` strata of dimension at most 3 and a
    /// random closure order. With `equivariant`, the fixed strata form a
    /// closed set and every free stratum has Euler characteristic 0.
    pub fn space(&mut self, max_strata: usize, equivariant: bool) -> StratifiedSpace {
        let n = self.range(1, max_strata as i64) as usize;
        let mut dims: Vec<u32> = (0..n).map(|_| self.range(0, 3) as u32).collect();
        dims.sort_unstable();
        let mut fixed = vec![false; n];
        let mut covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..i {
                if dims[j] < dims[i] && self.coin() {
                    covers[i].push(j);
                }
            }
        }
        let mut below: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for i in 0..n {
            for &j in &covers[i].clone() {
                below[i].insert(j);
                let b = below[j].clone();
                below[i].extend(b);
            }
        }
        let specs = (0..n)
            .map(|i| {
                if equivariant {
                    fixed[i] = below[i].iter().all(|&j| fixed[j]) && self.coin();
                } else {
                    fixed[i] = self.coin();
                }
                let chi = if equivariant && !fixed[i] { 0 } else { self.range(-3, 3) };
                let names: Vec<_> = covers[i].iter().map(|j| format!("S{j}")).collect();
                let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                StratumSpec::new(&format!("S{i}"), dims[i], chi, fixed[i], &refs)
            })
            .collect();
        StratifiedSpace::new(specs).expect("generated space is valid")
    }

    /// Random entries in `-3..=3` on every off-diagonal closure pair.
    pub fn eu_matrix(&mut self, space: &StratifiedSpace) -> EuMatrix {
        let n = space.len();
        let mut entries = Vec::new();
        for on in 0..n {
            for of in 0..n {
                if on != of && space.leq(on, of) {
                    entries.push(EuEntry { on, of, value: self.range(-3, 3), provenance: Provenance::Declared });
                }
            }
        }
        EuMatrix::new(space, &entries).expect("generated matrix is valid")
    }

    pub fn cycle(&mut self, space: &StratifiedSpace, bound: i64) -> Cycle {
        Cycle { coefficients: (0..space.len()).map(|_| self.range(-bound, bound)).collect() }
    }

    /// A random integer matrix with integer inverse, returned with it.
    pub fn unimodular(&mut self, n: usize) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let mut a: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut inv = a.clone();
        if n < 2 {
            return (a, inv);
        }
        for _ in 0..3 * n {
            let i = self.range(0, n as i64 - 1) as usize;
            let j = self.range(0, n as i64 - 1) as usize;
            let k = self.range(-2, 2);
            if i == j || k == 0 {
                continue;
            }
            // a <- E a with E adding k * row j to row i; inv <- inv E^-1
            for col in 0..n {
                a[i][col] += k * a[j][col];
            }
            for row in inv.iter_mut() {
                row[j] -= k * row[i];
            }
        }
        (a, inv)
    }

    /// Up to four components on random strata with multiplicity `1..=3`.
    pub fn cone(&mut self, space: &StratifiedSpace) -> Vec<ConeComponent> {
        let k = self.range(1, 4);
        (0..k)
            .map(|_| {
                let i = self.range(0, space.len() as i64 - 1) as usize;
                let s = space.stratum(i);
                ConeComponent::new(&s.name, s.dim, self.range(1, 3) as u64)
            })
            .collect()
    }
}

/// `f(A·x)`.
pub fn change_coordinates(f: &Polynomial, a: &[Vec<i64>]) -> Result<Polynomial> {
    let ctx = f.context();
    let images: Vec<Polynomial> = a
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .fold(Polynomial::zero(ctx), |acc, (j, c)| &acc + &Polynomial::var(ctx, j).scale(&q(*c)))
        })
        .collect();
    f.substitute(&images)
}

/// `A·p`.
pub fn apply_matrix(a: &[Vec<i64>], p: &[Q]) -> Vec<Q> {
    a.iter().map(|row| row.iter().zip(p).fold(q(0), |acc, (c, x)| acc + q(*c) * x)).collect()
}

/// Strict orders on `0..n` given as relation matrices.
fn strict_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
    let mut out = Vec::new();
    for bits in 0u32..(1 << pairs.len()) {
        let mut lt = vec![vec![false; n]; n];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            lt[a][b] = bits >> k & 1 == 1;
        }
        let antisymmetric = (0..n).all(|a| (0..n).all(|b| !(lt[a][b] && lt[b][a])));
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(lt[a][b] && lt[b][c]) || lt[a][c])));
        if antisymmetric && transitive {
            out.push(lt);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical_form(lt: &[Vec<bool>], perms: &[Vec<usize>]) -> Vec<bool> {
    let n = lt.len();
    perms
        .iter()
        .map(|p| (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| lt[p[a]][p[b]]).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// One space per isomorphism class of posets on at most `max` elements
/// (1 + 2 + 5 + 16 shapes for `max = 4`). Covers are the Hasse diagram,
/// dimensions the height of each element, Euler characteristics 1.
pub fn all_poset_shapes(max: usize) -> Vec<StratifiedSpace> {
    let mut out = Vec::new();
    for n in 1..=max {
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for lt in strict_orders(n) {
            if !seen.insert(canonical_form(&lt, &perms)) {
                continue;
            }
            let mut height = vec![0u32; n];
            // a chain has at most n elements, so n relaxation rounds suffice
            for _ in 0..n {
                for a in 0..n {
                    for b in 0..n {
                        if lt[a][b] {
                            height[b] = height[b].max(height[a] + 1);
                        }
                    }
                }
            }
            let specs = (0..n)
                .map(|b| {
                    let names: Vec<_> = (0..n)
                        .filter(|&a| lt[a][b] && !(0..n).any(|c| lt[a][c] && lt[c][b]))
                        .map(|a| format!("S{a}"))
                        .collect();
                    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
                    StratumSpec::new(&format!("S{b}"), height[b], 1, false, &refs)
                })
                .collect();
            out.push(StratifiedSpace::new(specs).expect("poset shape is valid"));
        }
    }
    out
}

/// Every integer vector of length `len` with entries in `-bound..=bound`.
pub fn all_cycles(len: usize, bound: i64) -> impl Iterator<Item = Cycle> {
    let width = (2 * bound + 1) as usize;
    let total = width.pow(len as u32);
    (0..total).map(move |mut k| {
        let mut coefficients = Vec::with_capacity(len);
        for _ in 0..len {
            coefficients.push((k % width) as i64 - bound);
            k /= width;
        }
        Cycle { coefficients }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| strict_orders(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 19, 219]);
        assert_eq!(all_poset_shapes(4).len(), 24);
        assert_eq!(all_cycles(3, 3).count(), 343);
    }

    #[test]
    fn equivariant_spaces_are_consistent() {
        let mut s = Sampler::new(5);
        for _ in 0..200 {
            let space = s.space(6, true);
            let fixed = space.fixed_mask();
            assert!(space.is_closed(&fixed));
            assert!(space.strata().iter().all(|st| st.fixed || st.chi == 0));
            s.eu_matrix(&space).validate(&space).unwrap();
        }
    }
}

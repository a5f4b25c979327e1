//! Buchberger's algorithm with the Gebauer–Möller pair criteria and the
//! sugar selection strategy.
//!
//! The engine is generic over the coefficient domain. Over the rationals,
//! polynomials carry primitive integer coefficients and reduction is fraction
//! free; the reduced basis is converted back to monic rational polynomials at
//! the end. Over a prime field only the leading-term ideal is reported.

use core::cmp::Ordering;

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Context, Monomial, MonomialOrder, Polynomial, Q};

/// Work limits for Gröbner computations.
///
/// The defaults are sized for a handful of variables per block and input
/// degree up to four.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Elementary reduction steps over the whole computation.
    pub max_steps: u64,
    /// Largest polynomial (in terms) allowed to appear.
    pub max_terms: usize,
    /// Largest intermediate basis.
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_steps: 50_000_000, max_terms: 100_000, max_basis: 20_000 }
    }
}

impl Budget {
    pub fn with_steps(max_steps: u64) -> Self {
        Budget { max_steps, ..Budget::default() }
    }
}

/// Counters reported by a Gröbner run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs: u64,
    pub zero_reductions: u64,
    pub steps: u64,
}

/// Coefficient domains the engine can run over.
trait Coeff: Clone {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    /// `a·x - b·y`
    fn axmby(a: &Self, x: &Self, b: &Self, y: &Self) -> Self;
    fn neg_mul(b: &Self, y: &Self) -> Self;
    /// Multipliers `(a, b)` with `a·h = b·g`, used to cancel a term with
    /// coefficient `h` against a reducer with leading coefficient `g`.
    fn cancel(g: &Self, h: &Self) -> (Self, Self);
    /// Canonical scaling (primitive with positive lead, or monic).
    fn normalize(terms: &mut [(Monomial, Self)]);
    /// Optional content removal during long reductions.
    fn shrink(_a: &mut [(Monomial, Self)], _b: &mut [(Monomial, Self)]) {}
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn axmby(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        if One::is_one(a) {
            x - b * y
        } else {
            a * x - b * y
        }
    }
    fn neg_mul(b: &Self, y: &Self) -> Self {
        -(b * y)
    }
    fn cancel(g: &Self, h: &Self) -> (Self, Self) {
        let d = g.gcd(h);
        let (mut a, mut b) = (g / &d, h / &d);
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        (a, b)
    }
    fn normalize(terms: &mut [(Monomial, Self)]) {
        make_primitive(terms)
    }
    fn shrink(a: &mut [(Monomial, Self)], b: &mut [(Monomial, Self)]) {
        shrink(a, b)
    }
}

/// Element of `Z/pZ` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Zp<const P: u64>(u64);

impl<const P: u64> Zp<P> {
    fn inv(self) -> Self {
        // Fermat
        let mut base = self.0;
        let mut e = P - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Zp(acc)
    }

    fn from_q(c: &Q) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |v: &BigInt| -> u64 {
            let r = v.mod_floor(&p);
            u64::try_from(r).expect("reduced below the modulus")
        };
        let den = reduce(c.denom());
        if den == 0 {
            return None;
        }
        Some(Zp(reduce(c.numer()) * Zp::<P>(den).inv().0 % P))
    }
}

impl<const P: u64> Coeff for Zp<P> {
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn mul(&self, o: &Self) -> Self {
        Zp(self.0 * o.0 % P)
    }
    fn axmby(a: &Self, x: &Self, b: &Self, y: &Self) -> Self {
        Zp((a.0 * x.0 % P + P - b.0 * y.0 % P) % P)
    }
    fn neg_mul(b: &Self, y: &Self) -> Self {
        Zp((P - b.0 * y.0 % P) % P)
    }
    fn cancel(g: &Self, h: &Self) -> (Self, Self) {
        (Zp(1), Zp(h.0 * g.inv().0 % P))
    }
    fn normalize(terms: &mut [(Monomial, Self)]) {
        let Some(first) = terms.first() else { return };
        if first.1 .0 == 1 {
            return;
        }
        let inv = first.1.inv();
        for (_, c) in terms.iter_mut() {
            *c = c.mul(&inv);
        }
    }
}

#[derive(Clone, Debug)]
struct IPoly<C> {
    terms: Vec<(Monomial, C)>,
    sugar: u32,
    mask: u32,
}

impl<C: Coeff> IPoly<C> {
    fn new(mut terms: Vec<(Monomial, C)>, sugar: u32) -> IPoly<C> {
        C::normalize(&mut terms);
        let mask = terms.first().map_or(0, |t| t.0.support_mask());
        IPoly { terms, sugar, mask }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

fn make_primitive(terms: &mut [(Monomial, BigInt)]) {
    let Some(first) = terms.first() else { return };
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if One::is_one(&g) {
            break;
        }
    }
    if first.1.is_negative() {
        g = -g;
    }
    if !One::is_one(&g) {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a, C> {
    ord: &'a MonomialOrder,
    budget: Budget,
    basis: Vec<IPoly<C>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    stats: Stats,
}

fn next_shifted<'q, C>(
    it: &mut impl Iterator<Item = Option<(Monomial, &'q C)>>,
) -> Result<Option<(Monomial, &'q C)>> {
    match it.next() {
        None => Ok(None),
        Some(v) => Ok(Some(v.ok_or_else(crate::poly::polynomial::exponent_overflow)?)),
    }
}

/// `a*p - b*m*q`, both inputs sorted decreasingly; the leading terms of the
/// two summands are assumed to have been dropped already by the caller.
fn combine<C: Coeff>(
    ord: &MonomialOrder,
    a: &C,
    p: &[(Monomial, C)],
    b: &C,
    m: &Monomial,
    q: &[(Monomial, C)],
) -> Result<Vec<(Monomial, C)>> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut i = 0;
    let a_one = a.is_one();
    let mut qm = q.iter().map(|(mm, c)| mm.checked_mul(m).map(|x| (x, c)));
    let mut next_q = next_shifted(&mut qm)?;
    loop {
        let ord_here = match (p.get(i), &next_q) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some((pm, _)), Some((qmn, _))) => ord.cmp(pm, qmn),
        };
        match ord_here {
            Ordering::Greater => {
                let c = if a_one { p[i].1.clone() } else { a.mul(&p[i].1) };
                out.push((p[i].0, c));
                i += 1;
            }
            Ordering::Less => {
                let (mm, c) = next_q.take().expect("present");
                out.push((mm, C::neg_mul(b, c)));
                next_q = next_shifted(&mut qm)?;
            }
            Ordering::Equal => {
                let (mm, c) = next_q.take().expect("present");
                let v = C::axmby(a, &p[i].1, b, c);
                if !v.is_zero() {
                    out.push((mm, v));
                }
                i += 1;
                next_q = next_shifted(&mut qm)?;
            }
        }
    }
    Ok(out)
}

impl<'a, C: Coeff> Engine<'a, C> {
    fn new(ord: &'a MonomialOrder, budget: Budget) -> Self {
        Engine { ord, budget, basis: Vec::new(), active: Vec::new(), pairs: Vec::new(), stats: Stats::default() }
    }

    fn tick(&mut self) -> Result<()> {
        self.stats.steps += 1;
        if self.stats.steps > self.budget.max_steps {
            return Err(Error::ResourceLimit(format!(
                "Gröbner step budget of {} exhausted",
                self.budget.max_steps
            )));
        }
        Ok(())
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = m.support_mask();
        self.basis.iter().enumerate().position(|(k, g)| {
            Some(k) != skip && self.active[k] && g.mask & !mask == 0 && g.lm().divides(m)
        })
    }

    /// Full reduction of `terms` by the active basis (excluding `skip`).
    fn reduce(&mut self, mut cur: Vec<(Monomial, C)>, mut sugar: u32, skip: Option<usize>) -> Result<IPoly<C>> {
        let mut rem: Vec<(Monomial, C)> = Vec::new();
        let mut start = 0;
        while start < cur.len() {
            let head = cur[start].0;
            match self.find_reducer(&head, skip) {
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
                Some(k) => {
                    self.tick()?;
                    let g = &self.basis[k];
                    let q = g.lm().quotient_of(&head);
                    let (a, b) = C::cancel(&g.terms[0].1, &cur[start].1);
                    sugar = sugar.max(g.sugar + q.degree());
                    let next = combine(self.ord, &a, &cur[start + 1..], &b, &q, &g.terms[1..])?;
                    if !a.is_one() {
                        for (_, c) in rem.iter_mut() {
                            *c = c.mul(&a);
                        }
                    }
                    cur = next;
                    start = 0;
                    if cur.len() + rem.len() > self.budget.max_terms {
                        return Err(Error::ResourceLimit(format!(
                            "intermediate polynomial exceeds {} terms",
                            self.budget.max_terms
                        )));
                    }
                    // keep coefficients from growing without bound
                    if self.stats.steps % 16 == 0 {
                        C::shrink(&mut rem, &mut cur[..]);
                    }
                }
            }
        }
        Ok(IPoly::new(rem, sugar))
    }

    fn spoly(&self, p: &Pair) -> Result<(Vec<(Monomial, C)>, u32)> {
        let f = &self.basis[p.i];
        let g = &self.basis[p.j];
        let mf = f.lm().quotient_of(&p.lcm);
        let mg = g.lm().quotient_of(&p.lcm);
        // a*mf*f - b*mg*g with a*lc(f) = b*lc(g)
        let (a, b) = C::cancel(&g.terms[0].1, &f.terms[0].1);
        let fm: Vec<(Monomial, C)> = f.terms[1..]
            .iter()
            .map(|(m, c)| m.checked_mul(&mf).map(|mm| (mm, c.clone())))
            .collect::<Option<_>>()
            .ok_or_else(crate::poly::polynomial::exponent_overflow)?;
        let s = combine(self.ord, &a, &fm, &b, &mg, &g.terms[1..])?;
        let sugar = (f.sugar + mf.degree()).max(g.sugar + mg.degree());
        Ok((s, sugar))
    }

    fn update(&mut self, h: IPoly<C>) -> Result<()> {
        let hl = *h.lm();
        let hidx = self.basis.len();
        if hidx >= self.budget.max_basis {
            return Err(Error::ResourceLimit(format!("basis exceeds {} elements", self.budget.max_basis)));
        }
        // candidate pairs (g, h)
        let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, g) in self.basis.iter().enumerate() {
            if self.active[k] {
                cand.push((k, g.lm().lcm(&hl), g.lm().is_coprime(&hl)));
            }
        }
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(c) = cand.pop() {
            let dominated = !c.2
                && (cand.iter().any(|o| o.1.divides(&c.1)) || kept.iter().any(|o| o.1.divides(&c.1)));
            if !dominated {
                kept.push(c);
            }
        }
        // old pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if !hl.divides(&p.lcm) {
                return true;
            }
            let l1 = basis[p.i].lm().lcm(&hl);
            let l2 = basis[p.j].lm().lcm(&hl);
            l1 == p.lcm || l2 == p.lcm
        });
        for (k, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let g = &self.basis[k];
            let sugar = (g.sugar + g.lm().quotient_of(&lcm).degree()).max(h.sugar + hl.quotient_of(&lcm).degree());
            self.pairs.push(Pair { i: k, j: hidx, lcm, sugar });
        }
        for (k, g) in self.basis.iter().enumerate() {
            if self.active[k] && hl.divides(g.lm()) {
                self.active[k] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
        Ok(())
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let better = match a.sugar.cmp(&b.sugar) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => ord.cmp(&a.lcm, &b.lcm) == Ordering::Less,
            };
            if better {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    /// Runs to completion. Returns `false` if the unit ideal was detected.
    fn run(&mut self, gens: Vec<IPoly<C>>) -> Result<bool> {
        for g in gens {
            let sugar = g.sugar;
            let h = self.reduce(g.terms, sugar, None)?;
            if h.terms.is_empty() {
                continue;
            }
            if h.lm().is_one() {
                return Ok(false);
            }
            self.update(h)?;
        }
        while let Some(p) = self.select() {
            self.stats.pairs += 1;
            let (s, sugar) = self.spoly(&p)?;
            if s.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let h = self.reduce(s, sugar, None)?;
            if h.terms.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if h.lm().is_one() {
                return Ok(false);
            }
            self.update(h)?;
        }
        Ok(true)
    }

    /// Leading monomials of the minimal basis.
    fn leading_monomials(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = (0..self.basis.len()).filter(|&k| self.active[k]).map(|k| *self.basis[k].lm()).collect();
        out.sort_by(|a, b| self.ord.cmp(a, b));
        out
    }

    /// Interreduces the active elements into the reduced basis.
    fn finish(&mut self) -> Result<Vec<IPoly<C>>> {
        let idx: Vec<usize> = (0..self.basis.len()).filter(|&k| self.active[k]).collect();
        let mut result = Vec::with_capacity(idx.len());
        for &k in &idx {
            let g = self.basis[k].clone();
            let r = self.reduce_tail(g, k)?;
            result.push(r);
        }
        result.sort_by(|a, b| self.ord.cmp(a.lm(), b.lm()));
        Ok(result)
    }

    /// Reduces every non-leading term of `g`.
    fn reduce_tail(&mut self, g: IPoly<C>, own: usize) -> Result<IPoly<C>> {
        let mut cur = g.terms;
        let mut pos = 1;
        while pos < cur.len() {
            let t = cur[pos].0;
            match self.find_reducer(&t, Some(own)) {
                None => pos += 1,
                Some(k) => {
                    self.tick()?;
                    let r = &self.basis[k];
                    let q = r.lm().quotient_of(&t);
                    let (a, b) = C::cancel(&r.terms[0].1, &cur[pos].1);
                    let tail = combine(self.ord, &a, &cur[pos + 1..], &b, &q, &r.terms[1..])?;
                    let mut next = Vec::with_capacity(pos + tail.len());
                    for (m, c) in &cur[..pos] {
                        next.push((*m, if a.is_one() { c.clone() } else { c.mul(&a) }));
                    }
                    next.extend(tail);
                    cur = next;
                }
            }
        }
        Ok(IPoly::new(cur, g.sugar))
    }
}

/// Divides both parts by their common content.
fn shrink(a: &mut [(Monomial, BigInt)], b: &mut [(Monomial, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in a.iter().chain(b.iter()) {
        g = g.gcd(c);
        if One::is_one(&g) {
            return;
        }
    }
    if Zero::is_zero(&g) || One::is_one(&g) {
        return;
    }
    for (_, c) in a.iter_mut().chain(b.iter_mut()) {
        *c = &*c / &g;
    }
}

fn to_ipoly(p: &Polynomial, ord: &MonomialOrder) -> IPoly<BigInt> {
    let mut terms = p.integer_primitive();
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    let sugar = p.total_degree().unwrap_or(0);
    IPoly::new(terms, sugar)
}

fn to_zp<const P: u64>(p: &Polynomial, ord: &MonomialOrder) -> Option<IPoly<Zp<P>>> {
    let mut terms = Vec::with_capacity(p.nterms());
    for (m, c) in p.terms() {
        let v = Zp::<P>::from_q(c)?;
        if v.0 != 0 {
            terms.push((*m, v));
        }
    }
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    Some(IPoly::new(terms, p.total_degree().unwrap_or(0)))
}

fn to_monic(ctx: &Arc<Context>, p: &IPoly<BigInt>) -> Polynomial {
    let lc = Q::from_integer(p.terms[0].1.clone());
    let terms = p.terms.iter().map(|(m, c)| (*m, Q::from_integer(c.clone()) / &lc)).collect();
    Polynomial::from_terms(ctx, terms)
}

/// Largest primes below `2^32`, used for modular leading-ideal runs.
const PRIMES: [u64; 3] = [4_294_967_291, 4_294_967_279, 4_294_967_231];

/// Minimal generators of the leading-term ideal over `Z/pZ` for the
/// `which`-th prime, or `None` if some coefficient has a denominator
/// divisible by it. The unit ideal gives `[1]`.
fn leading_ideal_mod<const P: u64>(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    budget: &Budget,
) -> Result<Option<Vec<Monomial>>> {
    let mut input = Vec::new();
    for g in gens {
        match to_zp::<P>(g, ord) {
            None => return Ok(None),
            Some(p) if p.terms.is_empty() => {}
            Some(p) => input.push(p),
        }
    }
    if input.iter().any(|p| p.lm().is_one()) {
        return Ok(Some(alloc::vec![Monomial::one()]));
    }
    input.sort_by(|a, b| ord.cmp(a.lm(), b.lm()).then(a.terms.len().cmp(&b.terms.len())));
    let mut eng: Engine<'_, Zp<P>> = Engine::new(ord, *budget);
    if !eng.run(input)? {
        return Ok(Some(alloc::vec![Monomial::one()]));
    }
    Ok(Some(eng.leading_monomials()))
}

/// How leading-term ideals are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Arithmetic {
    /// Exact Buchberger over the rationals.
    Rational,
    /// Buchberger over two large prime fields, accepted when both agree;
    /// falls back to [`Arithmetic::Rational`] otherwise.
    #[default]
    Modular,
}

/// Minimal generators of the leading-term ideal of `(gens)` for `ord`,
/// sorted increasingly. The unit ideal gives `[1]`.
///
/// A prime is unlucky only if it divides one of finitely many integers
/// determined by the input; two primes agreeing is taken as the answer.
pub fn leading_ideal(
    ctx: &Arc<Context>,
    gens: &[Polynomial],
    ord: &MonomialOrder,
    budget: &Budget,
    arithmetic: Arithmetic,
) -> Result<Vec<Monomial>> {
    if arithmetic == Arithmetic::Modular {
        let runs = [
            leading_ideal_mod::<{ PRIMES[0] }>(gens, ord, budget)?,
            leading_ideal_mod::<{ PRIMES[1] }>(gens, ord, budget)?,
            leading_ideal_mod::<{ PRIMES[2] }>(gens, ord, budget)?,
        ];
        let good: Vec<&Vec<Monomial>> = runs.iter().flatten().collect();
        for i in 0..good.len() {
            for j in i + 1..good.len() {
                if good[i] == good[j] {
                    return Ok(good[i].clone());
                }
            }
        }
    }
    let (gb, _) = groebner_basis(ctx, gens, ord, budget)?;
    Ok(gb.iter().map(|p| *p.leading_term(ord).expect("nonzero").0).collect())
}

/// Reduced Gröbner basis of the ideal generated by `gens`, as monic
/// polynomials sorted by increasing leading monomial. The unit ideal yields
/// `[1]`, the zero ideal `[]`.
pub fn groebner_basis(
    ctx: &Arc<Context>,
    gens: &[Polynomial],
    ord: &MonomialOrder,
    budget: &Budget,
) -> Result<(Vec<Polynomial>, Stats)> {
    let mut input: Vec<IPoly<BigInt>> = gens.iter().filter(|p| !p.is_zero()).map(|p| to_ipoly(p, ord)).collect();
    if input.iter().any(|p| p.lm().is_one()) {
        return Ok((alloc::vec![Polynomial::one(ctx)], Stats::default()));
    }
    // small leading monomials first
    input.sort_by(|a, b| ord.cmp(a.lm(), b.lm()).then(a.terms.len().cmp(&b.terms.len())));
    let mut eng: Engine<'_, BigInt> = Engine::new(ord, *budget);
    if !eng.run(input)? {
        return Ok((alloc::vec![Polynomial::one(ctx)], eng.stats));
    }
    let reduced = eng.finish()?;
    let out = reduced.iter().map(|p| to_monic(ctx, p)).collect();
    Ok((out, eng.stats))
}

/// Normal form of `f` modulo `basis` (assumed to be a Gröbner basis for
/// `ord`), computed in exact rational arithmetic.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let ctx = f.context().clone();
    let sorted = |p: &Polynomial| {
        let mut t: Vec<(Monomial, Q)> = p.terms().to_vec();
        t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        t
    };
    let divisors: Vec<Vec<(Monomial, Q)>> = basis.iter().filter(|b| !b.is_zero()).map(sorted).collect();
    let mut cur = sorted(f);
    let mut rem: Vec<(Monomial, Q)> = Vec::new();
    while let Some((head, hc)) = cur.first().cloned() {
        match divisors.iter().find(|g| g[0].0.divides(&head)) {
            None => {
                rem.push((head, hc));
                cur.remove(0);
            }
            Some(g) => {
                let q = g[0].0.quotient_of(&head);
                let factor = &hc / &g[0].1;
                let mut next: Vec<(Monomial, Q)> = Vec::with_capacity(cur.len() + g.len());
                let a = &cur[1..];
                let b: Vec<(Monomial, Q)> = g[1..]
                    .iter()
                    .map(|(m, c)| (m.checked_mul(&q).expect("exponent overflow in normal form"), c * &factor))
                    .collect();
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let o = if i == a.len() {
                        Ordering::Less
                    } else if j == b.len() {
                        Ordering::Greater
                    } else {
                        ord.cmp(&a[i].0, &b[j].0)
                    };
                    match o {
                        Ordering::Greater => {
                            next.push(a[i].clone());
                            i += 1;
                        }
                        Ordering::Less => {
                            next.push((b[j].0, -&b[j].1));
                            j += 1;
                        }
                        Ordering::Equal => {
                            let v = &a[i].1 - &b[j].1;
                            if !v.is_zero() {
                                next.push((a[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                }
                cur = next;
            }
        }
    }
    Polynomial::from_terms(&ctx, rem)
}

/// Fraction-free S-polynomial of two rational polynomials (exposed for
/// certificate checks).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).expect("nonzero");
    let (gm, gc) = g.leading_term(ord).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l), &gc.clone()).expect("overflow");
    let b = g.mul_term(&gm.quotient_of(&l), &fc.clone()).expect("overflow");
    &a - &b
}

/// Checks Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], ord);
            if !normal_form(&s, basis, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// True if no leading monomial divides another and no term of any element is
/// divisible by another element's leading monomial.
pub fn is_reduced(basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    let lms: Vec<Monomial> = basis.iter().map(|p| *p.leading_term(ord).expect("nonzero").0).collect();
    for (i, p) in basis.iter().enumerate() {
        if !p.leading_term(ord).expect("nonzero").1.is_one() {
            return false;
        }
        for (m, _) in p.terms() {
            for (j, l) in lms.iter().enumerate() {
                if i != j && l.divides(m) {
                    return false;
                }
            }
        }
    }
    true
}

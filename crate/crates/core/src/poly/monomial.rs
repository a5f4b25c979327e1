use core::fmt;

/// Hard cap on the number of variables in a context.
pub const MAX_VARS: usize = 32;

/// Exponent vector with cached total degree.
///
/// Entries past the context arity are always zero, so two monomials from the
/// same context compare correctly regardless of arity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u8; MAX_VARS],
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { deg: 0, exps: [0; MAX_VARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    /// Builds a monomial from explicit exponents; `None` when an exponent
    /// does not fit the packed representation.
    pub fn from_exponents(exps: &[u32]) -> Option<Self> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut m = Self::one();
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).ok()?;
            m.deg += e;
        }
        Some(m)
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        u32::from(self.exps[i])
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn exponents(&self, n: usize) -> impl Iterator<Item = u32> + '_ {
        self.exps[..n].iter().map(|&e| u32::from(e))
    }

    /// Degree in the variables of `range`.
    pub fn partial_degree(&self, range: core::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| u32::from(e)).sum()
    }

    /// Bitmask of variables with positive exponent (used as a quick
    /// divisibility filter).
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// `None` on exponent overflow.
    #[inline]
    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i])?;
        }
        out.deg = self.deg + other.deg;
        Some(out)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = other.exps[i] - self.exps[i];
        }
        out.deg = other.deg - self.deg;
        out
    }

    #[inline]
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        let mut deg = 0;
        for i in 0..MAX_VARS {
            let e = self.exps[i].max(other.exps[i]);
            out.exps[i] = e;
            deg += u32::from(e);
        }
        out.deg = deg;
        out
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Removes variable `i` entirely (exponent set to zero).
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut out = *self;
        out.deg -= u32::from(out.exps[i]);
        out.exps[i] = 0;
        out
    }

    /// Divides by `x_i` once if possible.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut out = *self;
        out.exps[i] -= 1;
        out.deg -= 1;
        Some(out)
    }

    /// Moves exponents to new positions: variable `i` goes to `map[i]`.
    pub fn remap(&self, n: usize, map: &[usize]) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..n {
            out.exps[map[i]] = self.exps[i];
        }
        out.deg = self.deg;
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

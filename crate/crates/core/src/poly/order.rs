use core::cmp::Ordering;
use core::ops::Range;

use alloc::vec::Vec;

use crate::poly::context::Context;
use crate::poly::monomial::{Monomial, MAX_VARS};

/// Monomial orders used by the Gröbner engine.
///
/// `BlockElimination` compares by graded reverse lexicographic order on the
/// first block, breaking ties with the next block, and so on. Every variable
/// must appear in exactly one block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
    BlockElimination(Vec<Range<usize>>),
}

#[inline]
fn grevlex_range(a: &Monomial, b: &Monomial, r: Range<usize>) -> Ordering {
    let da = a.partial_degree(r.clone());
    let db = b.partial_degree(r.clone());
    if da != db {
        return da.cmp(&db);
    }
    for i in r.rev() {
        let (ea, eb) = (a.exp(i), b.exp(i));
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Elimination order for the named blocks of `ctx`: the listed blocks
    /// come first (and are eliminated), the remaining variables form the
    /// last block.
    pub fn eliminating(ctx: &Context, blocks: &[&str]) -> MonomialOrder {
        let mut first = Vec::new();
        for name in blocks {
            if let Some(b) = ctx.block(name) {
                first.extend(b.range());
            }
        }
        first.sort_unstable();
        MonomialOrder::eliminating_vars(ctx.nvars(), &first)
    }

    /// Elimination order placing the contiguous variable range `vars` first.
    pub fn eliminating_vars(nvars: usize, vars: &[usize]) -> MonomialOrder {
        if vars.is_empty() {
            return MonomialOrder::GrevLex;
        }
        let lo = *vars.iter().min().expect("nonempty");
        let hi = *vars.iter().max().expect("nonempty") + 1;
        assert_eq!(hi - lo, vars.len(), "elimination variables must be contiguous");
        let mut ranges = Vec::new();
        ranges.push(lo..hi);
        if lo > 0 {
            ranges.push(0..lo);
        }
        if hi < nvars {
            ranges.push(hi..nvars);
        }
        MonomialOrder::BlockElimination(ranges)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => {
                if a.degree() != b.degree() {
                    return a.degree().cmp(&b.degree());
                }
                for i in (0..MAX_VARS).rev() {
                    let (ea, eb) = (a.exp(i), b.exp(i));
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..MAX_VARS {
                    let (ea, eb) = (a.exp(i), b.exp(i));
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::BlockElimination(blocks) => {
                for r in blocks {
                    let o = grevlex_range(a, b, r.clone());
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// True if the order is degree compatible (needed for Hilbert-function
    /// based dimension and degree).
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }

    /// Variables of the first (eliminated) block, if this is an elimination
    /// order.
    pub fn eliminated(&self) -> Option<Range<usize>> {
        match self {
            MonomialOrder::BlockElimination(blocks) => blocks.first().cloned(),
            _ => None,
        }
    }
}

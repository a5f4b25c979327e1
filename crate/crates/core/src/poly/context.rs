use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::monomial::MAX_VARS;

/// Whether a block of variables lives in affine space or is the set of
/// homogeneous coordinates of a projective space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    Affine,
    Projective,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    pub name: String,
    pub kind: BlockKind,
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn range(&self) -> core::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// Ordered variable list partitioned into named blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context {
    vars: Vec<String>,
    blocks: Vec<Block>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Context {
    /// A context with a single affine block called `x`.
    pub fn affine<S: AsRef<str>>(names: &[S]) -> Result<Arc<Context>> {
        ContextBuilder::new()
            .block("x", BlockKind::Affine, names.iter().map(|s| s.as_ref().to_string()))
            .build()
    }

    pub fn builder() -> ContextBuilder {
        ContextBuilder::new()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn block_of(&self, var: usize) -> &Block {
        self.blocks
            .iter()
            .find(|b| b.range().contains(&var))
            .expect("every variable belongs to a block")
    }

    /// Picks a variable name derived from `stem` that is not used yet.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        name
    }

    /// Copy of this context with one more block appended.
    pub fn with_block(&self, name: &str, kind: BlockKind, vars: Vec<String>) -> Result<Arc<Context>> {
        let mut b = ContextBuilder::new();
        for blk in &self.blocks {
            b = b.block(&blk.name, blk.kind, self.vars[blk.range()].iter().cloned());
        }
        b.block(name, kind, vars).build()
    }
}

#[derive(Debug, Default)]
pub struct ContextBuilder {
    vars: Vec<String>,
    blocks: Vec<Block>,
}

impl ContextBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn block<I: IntoIterator<Item = String>>(mut self, name: &str, kind: BlockKind, vars: I) -> Self {
        let start = self.vars.len();
        self.vars.extend(vars);
        self.blocks.push(Block { name: name.to_string(), kind, start, len: self.vars.len() - start });
        self
    }

    pub fn build(self) -> Result<Arc<Context>> {
        if self.vars.len() > MAX_VARS {
            return Err(Error::Context(format!(
                "{} variables requested, at most {MAX_VARS} supported",
                self.vars.len()
            )));
        }
        for (i, v) in self.vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::Context(format!("invalid variable name `{v}`")));
            }
            if self.vars[..i].contains(v) {
                return Err(Error::Context(format!("duplicate variable `{v}`")));
            }
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if b.len == 0 {
                return Err(Error::Context(format!("block `{}` is empty", b.name)));
            }
            if self.blocks[..i].iter().any(|o| o.name == b.name) {
                return Err(Error::Context(format!("duplicate block `{}`", b.name)));
            }
        }
        Ok(Arc::new(Context { vars: self.vars, blocks: self.blocks }))
    }
}

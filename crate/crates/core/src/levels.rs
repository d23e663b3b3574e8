//! Per-level arity and edge-length descriptions of code trees.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Arity and edge length of one level: every internal node on level `i - 1`
/// has at most `arity` children, each reached by an edge of length `edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level {
    pub arity: usize,
    pub edge: u64,
}

impl Level {
    pub const fn new(arity: usize, edge: u64) -> Self {
        Level { arity, edge }
    }

    fn check(&self) -> Result<()> {
        if self.arity < 2 {
            return Err(Error::invalid("arity must be at least 2"));
        }
        if self.edge == 0 {
            return Err(Error::invalid("edge length must be at least 1"));
        }
        Ok(())
    }
}

/// Levels `1..=len()` of a generalized mixed-radix tree, with cumulative
/// depths `L(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSpec {
    levels: Vec<Level>,
    depth: Vec<u64>,
}

impl LevelSpec {
    pub fn new(levels: Vec<Level>) -> Result<Self> {
        let mut depth = Vec::with_capacity(levels.len() + 1);
        depth.push(0u64);
        for level in &levels {
            level.check()?;
            let next = depth[depth.len() - 1].checked_add(level.edge).ok_or(Error::Overflow)?;
            depth.push(next);
        }
        Ok(LevelSpec { levels, depth })
    }

    /// `count` copies of `(arity, edge)`.
    pub fn uniform(arity: usize, edge: u64, count: usize) -> Result<Self> {
        Self::new(alloc::vec![Level::new(arity, edge); count])
    }

    /// Number of levels described.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Level `i` for `1 ≤ i ≤ len()`.
    pub fn level(&self, i: usize) -> Level {
        self.levels[i - 1]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Cumulative depth `L(i)`, with `L(0) = 0`.
    pub fn depth(&self, i: usize) -> u64 {
        self.depth[i]
    }
}

/// Per-level option sets `{(r_{i,j}, c_{i,j})}`; a permissible tree picks one
/// option per level and applies it to every node on that level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoiceLevelSpec {
    levels: Vec<Vec<Level>>,
}

impl ChoiceLevelSpec {
    pub fn new(levels: Vec<Vec<Level>>) -> Result<Self> {
        for options in &levels {
            if options.is_empty() {
                return Err(Error::invalid("empty option set"));
            }
            for (j, option) in options.iter().enumerate() {
                option.check()?;
                if options[..j].contains(option) {
                    return Err(Error::invalid("duplicate option within a level"));
                }
            }
        }
        Ok(ChoiceLevelSpec { levels })
    }

    /// One option per level.
    pub fn from_spec(spec: &LevelSpec) -> Self {
        ChoiceLevelSpec { levels: spec.levels().iter().map(|&l| alloc::vec![l]).collect() }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Options of level `i` for `1 ≤ i ≤ len()`.
    pub fn options(&self, i: usize) -> &[Level] {
        &self.levels[i - 1]
    }

    /// The plain spec obtained by picking `choice[i - 1]` at level `i`.
    pub fn select(&self, choice: &[usize]) -> Result<LevelSpec> {
        LevelSpec::new(
            choice.iter().enumerate().map(|(k, &j)| self.levels[k][j]).collect(),
        )
    }
}

//! Resource caps for exponential-time enumerations.

use crate::error::{Error, Result};

pub const ENV_MAX_FACETS: &str = "MINKSIMPLEX_MAX_FACETS";
pub const ENV_MAX_DIM: &str = "MINKSIMPLEX_MAX_DIM";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Facets of a polytopal unit ball.
    pub max_facets: usize,
    /// Ambient dimension.
    pub max_dim: usize,
    /// Search-tree nodes visited by circumcenter enumeration.
    pub max_assignment_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_facets: 64, max_dim: 4, max_assignment_nodes: 2_000_000 }
    }
}

impl Limits {
    /// Defaults overridden by `MINKSIMPLEX_MAX_FACETS` / `MINKSIMPLEX_MAX_DIM`.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Some(v) = read_env(ENV_MAX_FACETS)? {
            limits.max_facets = v;
        }
        if let Some(v) = read_env(ENV_MAX_DIM)? {
            limits.max_dim = v;
        }
        Ok(limits)
    }

    pub fn check_dim(&self, d: usize) -> Result<()> {
        if d > self.max_dim {
            return Err(Error::ResourceLimit { what: "dimension", found: d, limit: self.max_dim });
        }
        Ok(())
    }

    pub fn check_facets(&self, n: usize) -> Result<()> {
        if n > self.max_facets {
            return Err(Error::ResourceLimit { what: "ball facets", found: n, limit: self.max_facets });
        }
        Ok(())
    }
}

fn read_env(name: &str) -> Result<Option<usize>> {
    match std::env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{name} must be a non-negative integer, got {raw:?}"))),
        Err(_) => Ok(None),
    }
}

//! Size bounds for every operation whose cost grows factorially or
//! exponentially. Exceeding a bound is an error, never a silent truncation.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable naming a TOML file with [`Bounds`] overrides.
pub const CONFIG_ENV: &str = "INJCAT_CONFIG";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Bounds {
    /// Largest `n` for which partitions of `n` are enumerated.
    pub partition_size: usize,
    /// Largest diagram size for quiver slices and sign tables.
    pub lattice_size: usize,
    /// Largest diagram size for standard tableaux enumeration.
    pub tableau_size: usize,
    /// Largest degree `n` of `C[S_n]` in which group algebra elements are expanded.
    pub group_degree: usize,
    /// Largest `n` for the direct idempotent hom dimension.
    pub direct_hom_degree: usize,
    /// Largest `n + m` for character-based induction multiplicities.
    pub induction_degree: usize,
    /// Largest resolution depth.
    pub depth: usize,
    /// Largest diagram size for quadratic dual presentations.
    pub dual_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            partition_size: 30,
            lattice_size: 30,
            tableau_size: 9,
            group_degree: 6,
            direct_hom_degree: 4,
            induction_degree: 12,
            depth: 12,
            dual_size: 12,
        }
    }
}

impl Bounds {
    pub fn check(&self, what: &'static str, value: usize, bound: usize) -> Result<()> {
        if value > bound {
            Err(Error::BoundExceeded { what, value, bound })
        } else {
            Ok(())
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    /// Defaults, overridden by the file named in `INJCAT_CONFIG` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => Self::from_file(Path::new(&path)),
            None => Ok(Self::default()),
        }
    }
}

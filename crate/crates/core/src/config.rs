//! Resource bounds and run configuration.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Explicit desk-scale budgets. Every search in the crate takes one of these
/// and fails with [`Error::ResourceLimit`] rather than running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    pub max_group_order: usize,
    pub max_hom_candidates: u64,
    pub gauge_nodes: u64,
    pub coset_steps: usize,
    pub max_path_length: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_group_order: 48,
            max_hom_candidates: 1_000_000,
            gauge_nodes: 1_000_000,
            coset_steps: 100_000,
            max_path_length: 32,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum OutputMode {
    #[default]
    Human,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub budgets: Budgets,
    pub seed: u64,
    pub output: OutputMode,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let b = &self.budgets;
        if b.max_group_order == 0
            || b.max_hom_candidates == 0
            || b.gauge_nodes == 0
            || b.coset_steps == 0
            || b.max_path_length == 0
        {
            return Err(Error::invalid("all budgets must be positive"));
        }
        if b.max_group_order > crate::groups::HARD_ORDER_LIMIT {
            return Err(Error::invalid(format!(
                "max_group_order may not exceed {}",
                crate::groups::HARD_ORDER_LIMIT
            )));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: RunConfig =
            serde_json::from_str(text).map_err(|e| Error::invalid(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }
}

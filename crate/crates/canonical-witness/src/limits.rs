//! Resource ceilings for the exhaustive searches.
//!
//! Ceilings are configuration, not constants: exceeding one raises
//! [`Error::ResourceLimit`](crate::error::Error::ResourceLimit), which is a
//! distinct outcome from "absent" so callers never confuse the two.

/// Environment variable that overrides the default step budget.
pub const CEILING_ENV_VAR: &str = "CANONICAL_WITNESS_CEILING";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest pattern (in vertices) accepted by the embedding searches.
    pub max_pattern_vertices: usize,
    /// Largest host accepted by the exact longest-path search.
    pub max_longest_path_n: usize,
    /// Largest host accepted by the exact longest-induced-path search.
    pub max_longest_induced_path_n: usize,
    /// Largest host accepted by the exact treewidth computation.
    pub max_treewidth_n: usize,
    /// Largest pattern accepted by the minor-model search (a 4x4 grid fits).
    pub max_minor_pattern_vertices: usize,
    /// Backtracking step budget shared by the searches. Deterministic: the
    /// budget counts search steps, never wall-clock time.
    pub step_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_pattern_vertices: 12,
            max_longest_path_n: 20,
            max_longest_induced_path_n: 24,
            max_treewidth_n: 16,
            max_minor_pattern_vertices: 16,
            step_budget: 2_000_000,
        }
    }
}

impl SearchLimits {
    /// Default limits, with the step budget taken from
    /// `CANONICAL_WITNESS_CEILING` when that variable holds an integer.
    pub fn from_env() -> Self {
        let mut limits = SearchLimits::default();
        if let Ok(raw) = std::env::var(CEILING_ENV_VAR) {
            if let Ok(budget) = raw.trim().parse::<u64>() {
                limits.step_budget = budget;
            }
        }
        limits
    }

    /// Same limits with the pattern ceiling raised to at least `n`. The
    /// antichain verifier uses this so that a caller-supplied descriptor list
    /// is never cut off by the embedding ceiling.
    pub fn with_pattern_ceiling(mut self, n: usize) -> Self {
        self.max_pattern_vertices = self.max_pattern_vertices.max(n);
        self
    }
}

/// Deterministic step counter handed through the searches.
#[derive(Debug)]
pub struct Budget {
    remaining: u64,
    label: &'static str,
}

impl Budget {
    pub fn new(steps: u64, label: &'static str) -> Self {
        Budget { remaining: steps, label }
    }

    /// Spends one step; `Err` once the budget is gone.
    #[inline]
    pub fn step(&mut self) -> crate::error::Result<()> {
        if self.remaining == 0 {
            return Err(crate::error::Error::resource(format!(
                "step budget exhausted during {}",
                self.label
            )));
        }
        self.remaining -= 1;
        Ok(())
    }
}

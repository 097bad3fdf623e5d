//! Exact and guaranteed solvers for the colored cut problems.

mod brute;
mod colorful;
mod greedy;

use thiserror::Error;

use crate::graph::{ColoredGraph, Cut, GraphError};
use crate::kernel::{kernelize_value, KernelError, KernelOutcome, Verdict};

pub use brute::{brute_force_max, brute_force_max_with_cap};
pub use colorful::{colorful_cut_decide, encode_colorful_to_cnf, ColorfulEncoding};
pub use greedy::greedy_half_colors;

/// Vertex cap for exhaustive bipartition search: `2^23` evaluations.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("refusing exhaustive search over {n} vertices (cap is {cap})")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph has no colors; there is nothing to encode")]
    NoColors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BruteForce,
    Greedy,
    Kernel,
    Sat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Number of colors on the witness cut.
    pub value: usize,
    pub witness: Cut,
    pub method: Method,
    /// Bipartitions evaluated (or search nodes, depending on the method).
    pub explored: u64,
}

/// Answer to "is there a cut with at least `k` colors?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub yes: bool,
    /// A cut of the input graph with at least `k` colors when `yes`.
    pub witness: Option<Cut>,
    pub kernel: KernelOutcome,
}

/// Decides MAXIMUM COLORED CUT through the cost-parameterized kernel, using
/// [`DEFAULT_BRUTE_FORCE_CAP`] for the search on the kernel.
pub fn decide_max(g: &ColoredGraph, k: usize) -> Result<Decision, SolveError> {
    decide_max_with_cap(g, k, DEFAULT_BRUTE_FORCE_CAP)
}

pub fn decide_max_with_cap(g: &ColoredGraph, k: usize, cap: usize) -> Result<Decision, SolveError> {
    if g.n() < 2 {
        return Err(GraphError::TooFewVertices { n: g.n() }.into());
    }
    let kernel = kernelize_value(g, k)?;
    let last = &kernel.last;
    let witness = match kernel.verdict {
        Verdict::EarlyYes => {
            let start = if last.n() >= 2 {
                Some(greedy_half_colors(last)?)
            } else {
                None
            };
            Some(kernel.lift(start.as_ref())?)
        }
        Verdict::Reduced => {
            let need = kernel.remaining_k.expect("value kernel tracks k");
            if last.n() < 2 {
                None
            } else {
                let best = brute_force_max_with_cap(last, cap)?;
                if best.value >= need {
                    Some(kernel.lift(Some(&best.witness))?)
                } else {
                    None
                }
            }
        }
    };
    if let Some(cut) = &witness {
        debug_assert!(g.cut_colors(cut)?.len() >= k);
    }
    Ok(Decision {
        yes: witness.is_some(),
        witness,
        kernel,
    })
}

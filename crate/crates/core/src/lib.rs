//! Flower graphs `f_{n×m}` and their paired domination numbers.
//!
//! The crate builds the graph family, evaluates the closed-form values of
//! the paired domination number `γ_p` and the 2-distance paired domination
//! number `γ_p²`, constructs explicit sets achieving them, verifies
//! arbitrary candidate sets, and proves optima exactly on small instances
//! with a branch-and-bound solver. The `flowerdom` binary exposes all of
//! it on the command line.
//!
//! The three routes agree with each other:
//!
//! ```
//! use flowerdom::{build_flower, FlowerParams, SolveBudget};
//!
//! let params = FlowerParams::new(4, 5)?;
//! let g = build_flower(params);
//!
//! let value = flowerdom::gamma_p_formula(4, 5)?;
//! let construction = flowerdom::build_paired_set(4, 5)?;
//! let proof = flowerdom::min_paired_domination(&g, 1, &SolveBudget::default())?;
//!
//! assert_eq!(construction.set.len() as u64, value);
//! assert!(flowerdom::is_k_paired_dominating(&g, &construction.set, 1));
//! assert_eq!(proof.optimum, Some(value));
//! # Ok::<(), flowerdom::Error>(())
//! ```

pub mod bits;
pub mod constructions;
pub mod domination;
pub mod flower;
pub mod matching;
pub mod oracle;
pub mod solver;

pub use constructions::{
    build_2distance_set, build_construction, build_paired_set, formula, formula_case,
    gamma_p2_formula, gamma_p_formula, petal_lower_bound, ConstructionResult, FormulaCase,
};
pub use domination::{
    classify_pairs, has_perfect_matching, is_k_dominating, is_k_paired_dominating, max_matching,
    verify_k_paired, PairClassification, PairedFailure, PairedSet,
};
pub use flower::{build_flower, FlowerParams, Graph, Vertex};
pub use solver::{lower_bound_report, min_paired_domination, SolveBudget, SolveResult};

/// Errors across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid flower parameters n={n}, m={m}: both must be at least 3")]
    InvalidParams { n: u32, m: u32 },
    #[error("vertex {vertex} is not in f_{{{n}x{m}}}")]
    UnknownVertex { vertex: String, n: u32, m: u32 },
    #[error("cannot parse vertex name {0:?} (expected u<i> or v<i>.<j>)")]
    VertexParse(String),
    #[error("unsupported distance k={0}: closed forms exist for k=1 and k=2")]
    UnsupportedK(u32),
    #[error("construction failed for n={n}, m={m}, k={k}: {reason}")]
    ConstructionFailed {
        n: u32,
        m: u32,
        k: u32,
        reason: String,
    },
    #[error("no proven witness available")]
    WitnessUnavailable,
}

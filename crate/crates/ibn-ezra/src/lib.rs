//! Combinatorial and arithmetic procedures from Abraham Ibn Ezra's
//! writings, reconstructed with full derivation traces: binomial
//! coefficients via the triangular formula and the hockey-stick
//! expansion, the 120-conjunction census of the seven classical
//! planets, the generalized Josephus elimination circle, and squaring
//! and multiplication recursions grounded in a single-digit table.
//! Every procedure is checked against an independent brute-force
//! oracle.

pub mod combinatorics;
pub mod josephus;
pub mod limits;
pub mod medieval;
pub mod oracles;
pub mod trace;

pub use combinatorics::{
    binomial_derive, conjunction_census, sum_one_to, triangular_count, BinomialQuery,
    ConjunctionReport, DerivationNode, DerivationRule, Strategy, CLASSICAL_PLANETS,
};
pub use josephus::{
    arrangement_for_partition, elimination_order, find_step_for_partition, ArrangementLabels,
    CircleConfig, EliminationTrace, Label,
};
pub use limits::{Error, Limits, DEFAULT_N_MAX, ENUMERATION_MAX_N, N_MAX_ENV_VAR};
pub use medieval::{
    multiply_plan, square_plan, MultiplicationPlan, SquarePlan, SquareRule, SquareStep,
};
pub use oracles::{binomial_enumerate, binomial_pascal, multiply_direct, PascalTable};
pub use trace::{
    render_derivation, render_multiply_plan, render_square_plan, render_sum, DerivationRecord,
    MultiplicationRecord, RenderFormat, SquareStepRecord,
};

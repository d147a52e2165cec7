//! MALT — mesoscopic almost-linearity targeting for adversarial attacks.
//!
//! A deterministic fp64 toolkit for studying targeted adversarial attacks
//! on small dense classifiers:
//!
//! - [`linalg`] — dense vectors/matrices, norms, subspace projections, and
//!   seeded randomness.
//! - [`models`] — linear predictors, a two-layer net with frozen output
//!   signs, small MLPs; logits, per-class gradient rows, pass counters,
//!   and JSON persistence.
//! - [`data`] — synthetic low-dimensional-subspace datasets plus CSV/IDX
//!   ingestion.
//! - [`train`] — loss functions and a full-batch gradient-descent trainer.
//! - [`targeting`] — the exact minimal-perturbation solver for linear
//!   predictors, the MALT attack score, and naive confidence ordering.
//! - [`attacks`] — targeted FGSM/PGD under an L∞ budget with box
//!   constraints, the MALT and naive attack drivers, and the worst-case
//!   pass-budget model.
//! - [`probe`] — local-linearity traces (α, α_part, linear-approximation
//!   logits) and the subspace-training theory harness.
//! - [`cli`] — the `malt` command-line tool wiring the above into
//!   reproducible experiments.
//!
//! Everything is deterministic given a seed: reruns produce byte-identical
//! output files at any parallelism level.

pub mod attacks;
pub mod cli;
pub mod data;
pub mod linalg;
pub mod models;
pub mod numfmt;
pub mod probe;
pub mod targeting;
pub mod train;

//! Deterministic simulator of coordination compression in a hierarchical
//! economy.
//!
//! The model: each of `n_managers` managers runs one team of workers drawn
//! from a pool of `n_workers`. Agent capital `K_A` lowers per-worker
//! coordination friction, which widens spans of control, raises effective
//! labor, and shifts employment, wages, and inequality. Two parameters fork
//! the outcome: `beta` (how strongly managerial skill amplifies agent
//! capital) and `delta` (how fast the feasible-task frontier expands).
//!
//! Modules:
//! - [`model`]: closed-form equations (coordination cost, span, effective
//!   labor, output, the wage-sharing rule, the task frontier).
//! - [`population`]: deterministic skill populations (evenly spaced manager
//!   skills, Beta-quantile worker skills) and the incomplete-beta machinery.
//! - [`economy`]: one economy snapshot at a given `K_A` (employment,
//!   largest-remainder allocation, assortative or random assignment, wages).
//! - [`metrics`]: Gini, Lorenz, top-share, and per-snapshot metric rows.
//! - [`experiments`]: the regime sweep, the `(beta, delta)` heatmap, the
//!   labor-share robustness grid, and the five-part property suite.
//!
//! Everything is pure and deterministic: identical inputs produce bitwise
//! identical outputs, including the seeded random-assignment mode.

pub mod economy;
pub mod error;
pub mod experiments;
pub mod metrics;
pub mod model;
pub mod population;
pub mod rng;

pub use error::{Error, Result};
pub use model::ModelParams;

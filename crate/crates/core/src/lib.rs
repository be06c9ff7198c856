//! Numerical laboratory for the weighted Erdős–Mordell inequality family.
//!
//! * [`geom`]: triangle, interior point, and every per-point length/angle.
//! * [`catalog`]: each inequality as a slack function, plus equality cases.
//! * [`verify`]: seeded randomized runs over the catalog.
//! * [`tighten`]: multistart simplex search for minimal slack.
//! * [`report`]: deterministic JSON/CSV output.

pub mod catalog;
pub mod cli;
pub mod geom;
pub mod report;
pub mod rng;
pub mod tighten;
pub mod verify;

pub use catalog::{evaluate, EvaluationResult, InequalityId, WeightVector};
pub use geom::{BarycentricPoint, Point2, PointQuantities, Triangle};

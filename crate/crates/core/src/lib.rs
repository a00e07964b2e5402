//! Curve complex distance for filling pairs of simple closed curves.
//!
//! A pair `(alpha, beta)` is given as a [`Ladder`]: the arcs of `beta` in the
//! surface cut along `alpha`, recorded by the order in which they meet the two
//! sides of `alpha`. From it the crate computes the regions of the
//! complement, the genus filled by the pair, and whether the pair is at
//! distance 2, 3, or at least 4 in the curve complex. It also enumerates the
//! weight systems and gluings that produce candidate pairs with few
//! intersections.

pub mod catalog;
pub mod circuits;
pub mod distance;
pub mod error;
pub mod faces;
pub mod fixtures;
pub mod gluing;
pub mod ilp;
pub mod ladder;
pub mod matrix;
pub mod report;
pub mod template;

pub use catalog::{Catalog, CatalogRecord};
pub use circuits::{dual_graph, elementary_circuits, Circuit, DualGraph};
pub use distance::{distance, CandidatePair, DistanceOptions, DistanceResult, FillStatus, Verdict};
pub use error::{Error, Result};
pub use faces::{face_vector, faces, genus, reduce_bigons, BigonReduction, Face, FaceVector};
pub use gluing::{enumerate_gluings, GluingResult};
pub use ilp::{ArcClass, ArcKind, ConstraintSystem};
pub use ladder::{Ladder, Side, Slot};
pub use matrix::CharacteristicMatrix;
pub use report::{Command, Report};
pub use template::ArcTemplate;

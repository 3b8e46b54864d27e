//! Beaded trivalent diagrams: canonical forms modulo edge reversal,
//! linearity in beads, the vertex gauge move and AS, IHX
//! relations within a bead window, the evaluation `ψ` on theta graphs, and
//! the labeled graph sets `CS_n`.

pub mod canon;
pub mod graph;
pub mod ihx;
pub mod labeled;
pub mod psi;
pub mod vector;

pub use canon::{canonicalize, Sign};
pub use graph::{dumbbell_shape, theta_shape, Edge, MonGraph};
pub use ihx::{ihx_relations, relation_span, BeadWindow, IhxRelation};
pub use labeled::{cs_count, enumerate_cs, normalization_constant, visit_cs, LabeledGraph};
pub use psi::psi;
pub use vector::{build_diagram, dumbbell, theta, DiagramVector};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("bead on edge {0} is not of the form P(t)/δ(t)^b with P a Laurent polynomial")]
    BadBead(usize),
    #[error("ψ is only defined on theta graphs; found {0}")]
    NonThetaSupport(String),
    #[error("window has {size} bead assignments, above the cap {cap}")]
    WindowTooLarge { size: usize, cap: usize },
    #[error("{0} graphs are too many to list")]
    EnumerationTooLarge(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

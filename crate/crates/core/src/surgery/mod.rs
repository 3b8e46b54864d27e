//! The surgery calculus: `λ'_e` from equivariant Seifert data, the deltas of
//! surgery, connected sum, framing and knot changes, the quotient by the
//! `Q_k`, and the move pipeline.

pub mod knot;
pub mod lambda;
pub mod pipeline;
pub mod quotient;

pub use knot::{framing_v, knot_change_delta, q_k, seifert_v, FramedKnotChange};
pub use lambda::{connected_sum_delta, lambda_e_prime, surgery_delta, SurgeryDatum};
pub use pipeline::{run_pipeline, Manifest, Move, MoveRecord, PipelineError, PipelineState, ReductionRequest, Report};
pub use quotient::{check_symmetry, reduce_mod_qk, CoefficientWindow, Reduction};

use crate::alexander::AlexanderError;
use crate::algebra::AlgebraError;
use crate::casson::CassonError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurgeryError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Casson(#[from] CassonError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("V is not a Laurent polynomial: δ is incompatible with Δ")]
    NonPolynomialV,
    #[error("V is not antisymmetric")]
    NotAntisymmetric,
    #[error("k must be at least 1")]
    InvalidK,
    #[error("cleared numerator has exponents outside the window [{min}, {max}]")]
    WindowOverflow { min: i64, max: i64 },
    #[error("multiplying by the common denominator does not give a Laurent polynomial")]
    DenominatorNotCleared,
    #[error("result is not invariant under the six permutations and inversion")]
    SymmetryViolation,
}

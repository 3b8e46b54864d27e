//! Exact arithmetic: half-integer Laurent polynomials and fractions in `t`,
//! and the fraction field of the three-variable ring with `xyz = 1`.

pub mod bilaurent;
pub mod heugcd;
pub mod hlpoly;
pub mod linalg;
pub mod onevar;
pub mod rational;
pub mod ring;
pub mod trivar;

pub use bilaurent::BiLaurent;
pub use hlpoly::HLPoly;
pub use onevar::OneVarFrac;
pub use rational::Rational;
pub use trivar::{embed, TriVarElem, Var, PERMUTATIONS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("half-integer exponents do not cancel; cannot embed in the three-variable ring")]
    HalfPowerResidue,
    #[error("no limit at (1,1,1): probe values disagree or hit a pole")]
    NoLimit,
    #[error("parse error: {0}")]
    Parse(String),
}

//! Sequences of moves applied to a starting pair `(M, K)` and its invariant.

use crate::alexander::AlexanderPair;
use crate::algebra::rational::Rational;
use crate::algebra::trivar::TriVarElem;
use crate::algebra::HLPoly;

use super::knot::{framing_v, knot_change_delta};
use super::lambda::{connected_sum_delta, surgery_delta, SurgeryDatum};
use super::quotient::{check_symmetry, reduce_mod_qk, CoefficientWindow, Reduction};
use super::SurgeryError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Surgery on a null-homologous knot `J`; `after` is the pair of the
    /// result.
    Surgery { datum: SurgeryDatum, after: AlexanderPair },
    /// Connected sum with a rational homology sphere with Casson invariant
    /// `lambda`.
    ConnectedSum { lambda: Rational },
    /// Framing change by `n`.
    Framing { n: i64 },
    /// Knot change with polynomial `V`.
    KnotChange { v: HLPoly },
}

impl Move {
    pub fn kind(&self) -> &'static str {
        match self {
            Move::Surgery { .. } => "surgery",
            Move::ConnectedSum { .. } => "connected_sum",
            Move::Framing { .. } => "framing",
            Move::KnotChange { .. } => "knot_change",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionRequest {
    pub k_max: u32,
    pub window: CoefficientWindow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    /// Starting pair and invariant; `S¹ × S²` with its core and `Q = 0` when
    /// absent.
    pub initial: Option<(AlexanderPair, TriVarElem)>,
    pub moves: Vec<Move>,
    pub reduction: Option<ReductionRequest>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineState {
    pub pair: AlexanderPair,
    pub q: TriVarElem,
}

impl PipelineState {
    pub fn start() -> Self {
        PipelineState { pair: AlexanderPair::trivial(), q: TriVarElem::zero() }
    }

    /// Applies one move and returns its contribution.
    pub fn apply(&mut self, m: &Move) -> Result<TriVarElem, SurgeryError> {
        let delta = match m {
            Move::Surgery { datum, .. } => surgery_delta(datum)?,
            Move::ConnectedSum { lambda } => connected_sum_delta(lambda),
            Move::Framing { n } => knot_change_delta(&self.pair, &framing_v(&self.pair, *n)?.v)?,
            Move::KnotChange { v } => knot_change_delta(&self.pair, v)?,
        };
        if !check_symmetry(&delta) {
            return Err(SurgeryError::SymmetryViolation);
        }
        let q = &self.q + &delta;
        if !check_symmetry(&q) {
            return Err(SurgeryError::SymmetryViolation);
        }
        self.q = q;
        if let Move::Surgery { after, .. } = m {
            self.pair = after.clone();
        }
        Ok(delta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub index: usize,
    pub kind: &'static str,
    pub delta: TriVarElem,
    pub delta_at_one: Option<Rational>,
    pub pair_after: AlexanderPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub pair: AlexanderPair,
    pub q: TriVarElem,
    /// `Q(1, 1, 1)`, when the limit exists.
    pub q_at_one: Option<Rational>,
    pub moves: Vec<MoveRecord>,
    pub reduction: Option<Reduction>,
    pub notes: Vec<String>,
}

/// Failure of the move at `move_index`, or of the initial data or final
/// reduction when it is `None`.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}: {source}", match .move_index { Some(i) => format!("move {i}"), None => "pipeline".to_string() })]
pub struct PipelineError {
    pub move_index: Option<usize>,
    pub source: SurgeryError,
}

pub fn run_pipeline(manifest: &Manifest) -> Result<Report, PipelineError> {
    let outside = |source| PipelineError { move_index: None, source };
    let mut state = match &manifest.initial {
        Some((pair, q)) => {
            if !check_symmetry(q) {
                return Err(outside(SurgeryError::SymmetryViolation));
            }
            PipelineState { pair: pair.clone(), q: q.clone() }
        }
        None => PipelineState::start(),
    };
    let start_delta = state.pair.delta().clone();
    let mut moves = Vec::with_capacity(manifest.moves.len());
    for (index, m) in manifest.moves.iter().enumerate() {
        let delta = state.apply(m).map_err(|source| PipelineError { move_index: Some(index), source })?;
        moves.push(MoveRecord {
            index,
            kind: m.kind(),
            delta_at_one: delta.eval_111().ok(),
            delta,
            pair_after: state.pair.clone(),
        });
    }
    let mut notes = Vec::new();
    if *state.pair.delta() != start_delta {
        notes.push("δ changed along the pipeline; values are compared in the fraction field Q(x, y)".to_string());
    }
    let reduction = match &manifest.reduction {
        Some(r) => Some(reduce_mod_qk(&state.q, &state.pair, r.k_max, r.window).map_err(outside)?),
        None => None,
    };
    Ok(Report {
        q_at_one: state.q.eval_111().ok(),
        pair: state.pair,
        q: state.q,
        moves,
        reduction,
        notes,
    })
}

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::link::{FramedLink, Sign};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KirbyMove {
    BlowDown { component: String },
    Slide { moving: String, over: String, sign: Sign },
    BlowUp { sign: Sign, linking: Vec<i64>, label: String },
}

impl KirbyMove {
    pub fn blow_down(component: impl Into<String>) -> Self {
        KirbyMove::BlowDown { component: component.into() }
    }

    pub fn slide(moving: impl Into<String>, over: impl Into<String>, sign: Sign) -> Self {
        KirbyMove::Slide { moving: moving.into(), over: over.into(), sign }
    }

    pub fn blow_up(sign: Sign, linking: Vec<i64>, label: impl Into<String>) -> Self {
        KirbyMove::BlowUp { sign, linking, label: label.into() }
    }

    /// The tag used in script files.
    pub fn op_name(&self) -> &'static str {
        match self {
            KirbyMove::BlowDown { .. } => "blowdown",
            KirbyMove::Slide { .. } => "slide",
            KirbyMove::BlowUp { .. } => "blowup",
        }
    }

    pub fn apply(&self, l: &FramedLink) -> crate::Result<FramedLink> {
        match self {
            KirbyMove::BlowDown { component } => l.blow_down(component),
            KirbyMove::Slide { moving, over, sign } => l.slide(moving, over, *sign),
            KirbyMove::BlowUp { sign, linking, label } => l.blow_up(*sign, linking, label),
        }
    }
}

impl fmt::Display for KirbyMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KirbyMove::BlowDown { component } => write!(f, "blowdown {component}"),
            KirbyMove::Slide { moving, over, sign } => write!(f, "slide {moving} {sign} {over}"),
            KirbyMove::BlowUp { sign, linking, label } => {
                write!(f, "blowup {sign}1 {label} linking {linking:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KirbyScript {
    pub name: String,
    pub initial: FramedLink,
    pub moves: Vec<KirbyMove>,
    pub expect: FramedLink,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// Zero-based move index.
    pub step: usize,
    pub op: String,
    /// Determinant of the state after the move, or of the unchanged state
    /// when the move was illegal.
    pub det: BigInt,
    pub legal: bool,
    pub state: FramedLink,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReplayError {
    StepIllegal { index: usize, reason: Error },
    FinalMismatch(String),
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::StepIllegal { index, reason } => write!(f, "step {index} is illegal: {reason}"),
            ReplayError::FinalMismatch(diff) => write!(f, "final state differs from expected: {diff}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayTrace {
    pub steps: Vec<TraceStep>,
    pub final_state: FramedLink,
    pub outcome: Result<(), ReplayError>,
}

impl ReplayTrace {
    pub fn succeeded(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// Applies every move, stopping at the first illegal one, and compares the
/// final state with `expect`.
pub fn replay_trace(s: &KirbyScript) -> ReplayTrace {
    let mut state = s.initial.clone();
    let mut steps = Vec::with_capacity(s.moves.len());
    for (index, mv) in s.moves.iter().enumerate() {
        match mv.apply(&state) {
            Ok(next) => {
                state = next;
                steps.push(TraceStep {
                    step: index,
                    op: format!("{mv}"),
                    det: state.determinant(),
                    legal: true,
                    state: state.clone(),
                });
            }
            Err(reason) => {
                steps.push(TraceStep {
                    step: index,
                    op: format!("{mv}"),
                    det: state.determinant(),
                    legal: false,
                    state: state.clone(),
                });
                return ReplayTrace {
                    steps,
                    final_state: state,
                    outcome: Err(ReplayError::StepIllegal { index, reason }),
                };
            }
        }
    }
    let outcome = match state.diff(&s.expect) {
        None => Ok(()),
        Some(d) => Err(ReplayError::FinalMismatch(d)),
    };
    ReplayTrace { steps, final_state: state, outcome }
}

pub fn replay(s: &KirbyScript) -> Result<ReplayTrace, ReplayError> {
    let t = replay_trace(s);
    match &t.outcome {
        Ok(()) => Ok(t),
        Err(e) => Err(e.clone()),
    }
}

//! Tutte's 2-factor criterion on `(S, T)` pairs and an independent 2-factor
//! decision through the f-factor gadget.

pub mod barrier;
pub mod gadget;
pub mod paper;

pub use barrier::{delta, is_barrier, odd_component_census, Barrier, OddComponentCensus};
pub use gadget::{
    has_two_factor, is_two_factor, tutte_gadget, Infeasibility, TutteGadget, TwoFactorResult,
};
pub use paper::{paper_sets, verify_paper_barrier, BarrierReport, Check};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("vertex {0} lies in both S and T")]
    OverlappingSets(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} has degree {degree} < 2")]
    DegreeTooSmall { vertex: usize, degree: usize },
}

//! The cross-backend solution schema and error containment tiers.
//!
//! Every solve, in every mode and failure state, funnels through
//! [`Solution`]'s constructors so the status/satisfiable/success coupling
//! holds at a single chokepoint.

use crate::diagnostics::Diagnostic;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Sat,
    Unsat,
    Timeout,
    Error,
}

impl SolveStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveStatus::Sat => "sat",
            SolveStatus::Unsat => "unsat",
            SolveStatus::Timeout => "timeout",
            SolveStatus::Error => "error",
        }
    }
}

/// Normalized solve result. Field order is the wire order.
///
/// Invariants, enforced by the constructors:
/// - `status == Sat` ⇔ `satisfiable == true`
/// - `success == false` ⇔ `status == Error`
/// - `objective` only for optimization models
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub status: SolveStatus,
    pub satisfiable: bool,
    pub values: Map<String, Value>,
    pub objective: Option<Value>,
    pub solve_time: f64,
    pub success: bool,
    pub message: String,
}

impl Solution {
    fn build(
        status: SolveStatus,
        values: Map<String, Value>,
        objective: Option<Value>,
        solve_time: f64,
        message: String,
    ) -> Self {
        Solution {
            status,
            satisfiable: status == SolveStatus::Sat,
            values,
            objective,
            solve_time: if solve_time.is_finite() && solve_time >= 0.0 {
                solve_time
            } else {
                0.0
            },
            success: status != SolveStatus::Error,
            message,
        }
    }

    pub fn sat(
        values: Map<String, Value>,
        objective: Option<Value>,
        solve_time: f64,
        message: impl Into<String>,
    ) -> Self {
        Self::build(SolveStatus::Sat, values, objective, solve_time, message.into())
    }

    pub fn unsat(solve_time: f64, message: impl Into<String>) -> Self {
        Self::build(SolveStatus::Unsat, Map::new(), None, solve_time, message.into())
    }

    pub fn timeout(solve_time: f64, message: impl Into<String>) -> Self {
        Self::build(SolveStatus::Timeout, Map::new(), None, solve_time, message.into())
    }

    pub fn error(solve_time: f64, message: impl Into<String>) -> Self {
        Self::build(SolveStatus::Error, Map::new(), None, solve_time, message.into())
    }

    /// Checks the schema coupling rows; used by tests and debug assertions.
    pub fn invariants_hold(&self) -> bool {
        let coupling = (self.status == SolveStatus::Sat) == self.satisfiable;
        let success = (self.status == SolveStatus::Error) == !self.success;
        coupling && success && self.solve_time >= 0.0
    }
}

/// Containment tier for a failure, deciding its reporting channel.
#[derive(Debug, Clone, PartialEq)]
pub enum ErrorTier {
    /// Blocks the edit; reported as a rejected tool outcome.
    Validation(Vec<Diagnostic>),
    /// Solver-run fault; becomes `Solution{status: "error"}`.
    Execution(String),
    /// Transport or dispatch fault; becomes a JSON-RPC error.
    Protocol(String),
}

/// Where a failure originated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorOrigin {
    EditValidation,
    SolverRun,
    Transport,
}

/// Payload for [`classify_error`].
#[derive(Debug, Clone)]
pub enum ErrorPayload {
    Diagnostics(Vec<Diagnostic>),
    Message(String),
}

/// Maps failure origins onto containment tiers, 1:1.
pub fn classify_error(origin: ErrorOrigin, payload: ErrorPayload) -> ErrorTier {
    match (origin, payload) {
        (ErrorOrigin::EditValidation, ErrorPayload::Diagnostics(d)) => ErrorTier::Validation(d),
        (ErrorOrigin::EditValidation, ErrorPayload::Message(m)) => {
            ErrorTier::Validation(vec![Diagnostic::error(1, 0, m)])
        }
        (ErrorOrigin::SolverRun, ErrorPayload::Message(m)) => ErrorTier::Execution(m),
        (ErrorOrigin::SolverRun, ErrorPayload::Diagnostics(d)) => ErrorTier::Execution(
            d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
        ),
        (ErrorOrigin::Transport, ErrorPayload::Message(m)) => ErrorTier::Protocol(m),
        (ErrorOrigin::Transport, ErrorPayload::Diagnostics(d)) => ErrorTier::Protocol(
            d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_enforce_coupling() {
        let s = Solution::sat(Map::new(), None, 0.01, "found");
        assert!(s.satisfiable && s.success && s.invariants_hold());

        let u = Solution::unsat(0.0, "no assignment");
        assert!(!u.satisfiable && u.success && u.invariants_hold());

        let t = Solution::timeout(1.0, "limit reached");
        assert_eq!(t.status, SolveStatus::Timeout);
        assert!(!t.satisfiable && t.success && t.invariants_hold());

        let e = Solution::error(0.0, "spawn failed");
        assert!(!e.satisfiable && !e.success && e.invariants_hold());
    }

    #[test]
    fn serialization_carries_all_seven_fields() {
        let s = Solution::timeout(1.0, "limit");
        let v = serde_json::to_value(&s).unwrap();
        let obj = v.as_object().unwrap();
        for key in [
            "status",
            "satisfiable",
            "values",
            "objective",
            "solve_time",
            "success",
            "message",
        ] {
            assert!(obj.contains_key(key), "missing field {key}");
        }
        assert_eq!(obj["status"], "timeout");
        assert_eq!(obj["objective"], Value::Null);
    }

    #[test]
    fn classify_maps_origins_one_to_one() {
        let d = vec![Diagnostic::error(1, 0, "bad item")];
        match classify_error(ErrorOrigin::EditValidation, ErrorPayload::Diagnostics(d.clone())) {
            ErrorTier::Validation(got) => assert_eq!(got, d),
            other => panic!("wrong tier {other:?}"),
        }
        match classify_error(
            ErrorOrigin::SolverRun,
            ErrorPayload::Message("spawn failure".into()),
        ) {
            ErrorTier::Execution(m) => assert!(m.contains("spawn")),
            other => panic!("wrong tier {other:?}"),
        }
        match classify_error(
            ErrorOrigin::Transport,
            ErrorPayload::Message("parse failure".into()),
        ) {
            ErrorTier::Protocol(_) => {}
            other => panic!("wrong tier {other:?}"),
        }
    }

    #[test]
    fn negative_solve_time_is_clamped() {
        let s = Solution::error(-3.0, "x");
        assert_eq!(s.solve_time, 0.0);
    }
}

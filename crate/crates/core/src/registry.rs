//! Lookup of every registered problem by id.

use crate::benchmarks::{classical_problem, ClassicalId};
use crate::engineering::EngineeringId;
use crate::error::{Error, Result};
use crate::problem::Problem;

/// Canonical ids: `F1`..`F23`, then the engineering problems.
pub fn problem_ids() -> Vec<String> {
    ClassicalId::all()
        .map(|id| id.to_string())
        .chain(EngineeringId::ALL.iter().map(|id| id.id().to_string()))
        .collect()
}

/// Canonical form of a user-supplied id (`f1` -> `F1`, `Welded-Beam` -> `welded_beam`).
pub fn canonical_id(id: &str) -> Result<String> {
    if let Ok(c) = id.parse::<ClassicalId>() {
        return Ok(c.to_string());
    }
    id.parse::<EngineeringId>()
        .map(|e| e.id().to_string())
        .map_err(|_| Error::UnknownProblem(id.to_string()))
}

pub fn lookup(id: &str) -> Result<Problem> {
    if let Ok(c) = id.parse::<ClassicalId>() {
        return Ok(classical_problem(c));
    }
    id.parse::<EngineeringId>()
        .map(EngineeringId::problem)
        .map_err(|_| Error::UnknownProblem(id.to_string()))
}

pub fn all_problems() -> Vec<Problem> {
    problem_ids().iter().map(|id| lookup(id).expect("registered id")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_29_problems() {
        let ids = problem_ids();
        assert_eq!(ids.len(), 29);
        assert_eq!(ids[0], "F1");
        assert_eq!(ids[28], "welded_beam");
        for id in &ids {
            assert_eq!(lookup(id).unwrap().name(), id);
        }
    }

    #[test]
    fn lookup_is_case_insensitive() {
        assert_eq!(canonical_id("f13").unwrap(), "F13");
        assert_eq!(lookup("GEAR_TRAIN").unwrap().name(), "gear_train");
        assert!(matches!(lookup("nosuch"), Err(Error::UnknownProblem(_))));
    }
}

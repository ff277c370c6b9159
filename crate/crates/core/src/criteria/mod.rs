//! Subgroup counts by predicate, and the solvability criteria read off
//! them.

mod formulas;
mod verdict;

pub use formulas::{
    dickson_case, dickson_nonnilpotent_reference, psl2_order, suzuki_order, DicksonCase,
};
pub use verdict::{
    Boundary, CriterionRegistry, NonNilpotentCriterion, NonSupersolvableCriterion,
    SolvabilityCriterion, SupersolvableCriterion, Verdict,
};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify;
use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::lattice::{subgroup_classes, LatticeReport};

/// Predicates evaluated on one class representative. Conjugate subgroups
/// share them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPredicates {
    pub nilpotent: bool,
    pub supersolvable: bool,
}

pub fn class_predicates(lattice: &LatticeReport) -> Result<Vec<ClassPredicates>> {
    lattice
        .classes
        .par_iter()
        .map(|c| {
            Ok(ClassPredicates {
                nilpotent: classify::is_nilpotent(&c.representative)?,
                supersolvable: classify::is_supersolvable(&c.representative)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identification {
    A5,
    #[serde(rename = "SL2_5")]
    Sl2_5,
    #[serde(rename = "unknown")]
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    pub total_subgroups: u64,
    pub supersolvable_count: u64,
    pub non_supersolvable_count: u64,
    pub nilpotent_count: u64,
    pub non_nilpotent_count: u64,
    pub is_solvable_direct: bool,
    pub identification: Identification,
    pub verdicts: Vec<Verdict>,
}

impl CountsReport {
    /// Checks the count identities; a failure means an engine bug.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: &str| Err(GroupError::InvariantViolation(msg.to_string()));
        if self.supersolvable_count + self.non_supersolvable_count != self.total_subgroups {
            return fail("supersolvable + non-supersolvable != total");
        }
        if self.nilpotent_count + self.non_nilpotent_count != self.total_subgroups {
            return fail("nilpotent + non-nilpotent != total");
        }
        if self.non_supersolvable_count > self.non_nilpotent_count {
            return fail("more non-supersolvable than non-nilpotent subgroups");
        }
        if self
            .verdicts
            .iter()
            .any(|v| v.implies_solvable && !self.is_solvable_direct)
        {
            return fail("a criterion implied solvability of a non-solvable group");
        }
        Ok(())
    }
}

/// Counts over a lattice whose class predicates are already known.
/// Verdicts are left empty.
pub fn counts_from(
    lattice: &LatticeReport,
    predicates: &[ClassPredicates],
) -> Result<CountsReport> {
    let total = lattice.total_subgroups;
    let weighted = |f: fn(&ClassPredicates) -> bool| -> u64 {
        lattice
            .classes
            .iter()
            .zip(predicates)
            .filter(|(_, p)| f(p))
            .map(|(c, _)| c.class_size)
            .sum()
    };
    let supersolvable = weighted(|p| p.supersolvable);
    let nilpotent = weighted(|p| p.nilpotent);
    Ok(CountsReport {
        total_subgroups: total,
        supersolvable_count: supersolvable,
        non_supersolvable_count: total - supersolvable,
        nilpotent_count: nilpotent,
        non_nilpotent_count: total - nilpotent,
        is_solvable_direct: classify::is_solvable(lattice.group()),
        identification: identify_from(lattice)?,
        verdicts: Vec::new(),
    })
}

/// Lattice, per-class predicates, counts and every standard verdict.
pub fn counts(g: &PermGroup) -> Result<CountsReport> {
    let lattice = subgroup_classes(g)?;
    let predicates = class_predicates(&lattice)?;
    let mut report = counts_from(&lattice, &predicates)?;
    report.verdicts = CriterionRegistry::standard().evaluate_all(&report);
    Ok(report)
}

pub fn zarrin_verdict(report: &CountsReport) -> Verdict {
    NonNilpotentCriterion.evaluate(report)
}

pub fn brl_verdict(report: &CountsReport) -> Verdict {
    NonSupersolvableCriterion.evaluate(report)
}

pub fn luwang_verdict(report: &CountsReport) -> Verdict {
    SupersolvableCriterion.evaluate(report)
}

/// Recognizes `A₅` (order 60, exactly two normal subgroups) and `SL₂(5)`
/// (order 120, center of order 2 holding the only involution, central
/// quotient `A₅`).
pub fn identify(g: &PermGroup) -> Result<Identification> {
    match g.order() {
        60 | 120 => identify_from(&subgroup_classes(g)?),
        _ => Ok(Identification::Unknown),
    }
}

pub fn identify_from(lattice: &LatticeReport) -> Result<Identification> {
    let g = lattice.group();
    match g.order() {
        60 => {
            let normal = lattice.classes.iter().filter(|c| c.is_normal()).count();
            Ok(if normal == 2 {
                Identification::A5
            } else {
                Identification::Unknown
            })
        }
        120 => {
            let center = g.center()?;
            if center.order() != 2 {
                return Ok(Identification::Unknown);
            }
            let involutions = g.elements()?.iter().filter(|x| x.order() == 2).count();
            if involutions != 1 {
                return Ok(Identification::Unknown);
            }
            let quotient = g.coset_action(&center)?;
            Ok(match identify(&quotient)? {
                Identification::A5 => Identification::Sl2_5,
                _ => Identification::Unknown,
            })
        }
        _ => Ok(Identification::Unknown),
    }
}

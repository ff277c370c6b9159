use serde::{Deserialize, Serialize};

use super::{CountsReport, Identification};
use crate::error::{GroupError, Result};

/// Non-solvable groups that sit exactly on a criterion's threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Boundary {
    A5,
    #[serde(rename = "SL2_5")]
    Sl2_5,
}

impl std::fmt::Display for Boundary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Boundary::A5 => "A5",
            Boundary::Sl2_5 => "SL2_5",
        })
    }
}

impl Boundary {
    pub fn from_identification(id: Identification) -> Option<Self> {
        match id {
            Identification::A5 => Some(Boundary::A5),
            Identification::Sl2_5 => Some(Boundary::Sl2_5),
            Identification::Unknown => None,
        }
    }
}

/// Outcome of one criterion on one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub criterion: String,
    pub threshold: u64,
    pub observed: u64,
    /// Only ever a positive claim: `false` means the criterion is silent.
    pub implies_solvable: bool,
    #[serde(rename = "boundary")]
    pub boundary_identification: Option<Boundary>,
}

/// A solvability criterion of the form "fewer than `threshold` subgroups of
/// some kind forces solvability, and equality with a non-solvable group
/// pins the group down".
pub trait SolvabilityCriterion: Send + Sync {
    fn name(&self) -> &'static str;
    fn threshold(&self) -> u64;
    /// The subgroup count this criterion looks at.
    fn observed(&self, report: &CountsReport) -> u64;
    /// Groups allowed on the threshold when the group is not solvable.
    fn boundary_groups(&self) -> &'static [Boundary];
    fn describe(&self) -> &'static str;

    fn evaluate(&self, report: &CountsReport) -> Verdict {
        let observed = self.observed(report);
        let threshold = self.threshold();
        let on_threshold = observed == threshold;
        let implies_solvable = observed < threshold || (on_threshold && report.is_solvable_direct);
        let boundary_identification = if on_threshold && !report.is_solvable_direct {
            Boundary::from_identification(report.identification)
                .filter(|b| self.boundary_groups().contains(b))
        } else {
            None
        };
        Verdict {
            criterion: self.name().to_string(),
            threshold,
            observed,
            implies_solvable,
            boundary_identification,
        }
    }
}

/// Fewer than 22 non-nilpotent subgroups.
#[derive(Debug, Default, Clone, Copy)]
pub struct NonNilpotentCriterion;

impl SolvabilityCriterion for NonNilpotentCriterion {
    fn name(&self) -> &'static str {
        "zarrin_nonnilpotent"
    }
    fn threshold(&self) -> u64 {
        22
    }
    fn observed(&self, report: &CountsReport) -> u64 {
        report.non_nilpotent_count
    }
    fn boundary_groups(&self) -> &'static [Boundary] {
        &[Boundary::A5, Boundary::Sl2_5]
    }
    fn describe(&self) -> &'static str {
        "fewer than 22 non-nilpotent subgroups implies solvable; exactly 22 and non-solvable means A5 or SL(2,5)"
    }
}

/// Fewer than 6 non-supersolvable subgroups.
#[derive(Debug, Default, Clone, Copy)]
pub struct NonSupersolvableCriterion;

impl SolvabilityCriterion for NonSupersolvableCriterion {
    fn name(&self) -> &'static str {
        "brl_nonsupersolvable"
    }
    fn threshold(&self) -> u64 {
        6
    }
    fn observed(&self, report: &CountsReport) -> u64 {
        report.non_supersolvable_count
    }
    fn boundary_groups(&self) -> &'static [Boundary] {
        &[Boundary::A5, Boundary::Sl2_5]
    }
    fn describe(&self) -> &'static str {
        "fewer than 6 non-supersolvable subgroups implies solvable; exactly 6 and non-solvable means A5 or SL(2,5)"
    }
}

/// Fewer than 53 supersolvable subgroups.
#[derive(Debug, Default, Clone, Copy)]
pub struct SupersolvableCriterion;

impl SolvabilityCriterion for SupersolvableCriterion {
    fn name(&self) -> &'static str {
        "luwang_supersolvable"
    }
    fn threshold(&self) -> u64 {
        53
    }
    fn observed(&self, report: &CountsReport) -> u64 {
        report.supersolvable_count
    }
    fn boundary_groups(&self) -> &'static [Boundary] {
        &[Boundary::A5]
    }
    fn describe(&self) -> &'static str {
        "fewer than 53 supersolvable subgroups implies solvable; exactly 53 and non-solvable means A5"
    }
}

/// Criteria addressable by name.
pub struct CriterionRegistry {
    criteria: Vec<Box<dyn SolvabilityCriterion>>,
}

impl CriterionRegistry {
    pub fn empty() -> Self {
        CriterionRegistry {
            criteria: Vec::new(),
        }
    }

    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(NonNilpotentCriterion));
        reg.register(Box::new(NonSupersolvableCriterion));
        reg.register(Box::new(SupersolvableCriterion));
        reg
    }

    /// Adds a criterion, replacing any previous one with the same name.
    pub fn register(&mut self, criterion: Box<dyn SolvabilityCriterion>) {
        self.criteria.retain(|c| c.name() != criterion.name());
        self.criteria.push(criterion);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SolvabilityCriterion> {
        self.criteria
            .iter()
            .find(|c| c.name() == name)
            .map(|c| c.as_ref())
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.criteria.iter().map(|c| c.name())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn SolvabilityCriterion> {
        self.criteria.iter().map(|c| c.as_ref())
    }

    /// Looks up each name, in the order given.
    pub fn select(&self, names: &[String]) -> Result<Vec<&dyn SolvabilityCriterion>> {
        names
            .iter()
            .map(|n| {
                self.get(n).ok_or_else(|| {
                    GroupError::InvalidParameter(format!(
                        "unknown criterion {n}; known: {}",
                        self.names().collect::<Vec<_>>().join(", ")
                    ))
                })
            })
            .collect()
    }

    pub fn evaluate_all(&self, report: &CountsReport) -> Vec<Verdict> {
        self.iter().map(|c| c.evaluate(report)).collect()
    }
}

impl Default for CriterionRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

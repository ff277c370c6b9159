//! One end-to-end analysis of a group spec: lattice, counts, verdicts and
//! series, rendered as JSON or as a GAP-session-shaped transcript.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{derived_series, upper_central_series, SeriesReport};
use crate::constructors::{parse_spec, GroupSpec, SpecError};
use crate::criteria::{
    class_predicates, counts_from, dickson_nonnilpotent_reference, ClassPredicates, CountsReport,
    CriterionRegistry, Identification, Verdict,
};
use crate::error::GroupError;
use crate::lattice::{subgroup_classes, LatticeReport};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Section {
    Lattice,
    Counts,
    Verdicts,
    Series,
}

impl Section {
    pub const ALL: [Section; 4] = [
        Section::Lattice,
        Section::Counts,
        Section::Verdicts,
        Section::Series,
    ];
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "lattice" => Ok(Section::Lattice),
            "counts" => Ok(Section::Counts),
            "verdicts" => Ok(Section::Verdicts),
            "series" => Ok(Section::Series),
            other => Err(format!(
                "unknown section {other:?}; expected lattice, counts, verdicts or series"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format {other:?}; expected text or json")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnalysisRequest {
    pub spec: GroupSpec,
    pub format: ReportFormat,
    pub sections: BTreeSet<Section>,
    pub limits: Limits,
    /// Criteria to evaluate, by registry name; `None` means all.
    pub criteria: Option<Vec<String>>,
}

impl AnalysisRequest {
    pub fn new(spec: GroupSpec) -> Self {
        AnalysisRequest {
            spec,
            format: ReportFormat::default(),
            sections: Section::ALL.into_iter().collect(),
            limits: Limits::default(),
            criteria: None,
        }
    }

    pub fn parse(spec: &str) -> Result<Self, AnalysisError> {
        Ok(Self::new(parse_spec(spec)?))
    }

    pub fn with_sections(mut self, sections: impl IntoIterator<Item = Section>) -> Self {
        self.sections = sections.into_iter().collect();
        self
    }

    pub fn with_format(mut self, format: ReportFormat) -> Self {
        self.format = format;
        self
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    fn validate(&self) -> Result<(), AnalysisError> {
        if self.sections.is_empty() {
            return Err(AnalysisError::Request(
                "at least one section is required".into(),
            ));
        }
        let l = &self.limits;
        if l.max_elements == 0 || l.max_coset_index == 0 || l.max_lattice_order == 0 {
            return Err(AnalysisError::Request("bounds must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Parse(#[from] SpecError),
    #[error("invalid request: {0}")]
    Request(String),
    #[error(transparent)]
    Engine(#[from] GroupError),
}

impl AnalysisError {
    /// 2 for malformed input, 3 for exceeded bounds, 4 for internal
    /// invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            AnalysisError::Parse(_) | AnalysisError::Request(_) => 2,
            AnalysisError::Engine(GroupError::BoundExceeded { .. }) => 3,
            AnalysisError::Engine(GroupError::InvalidParameter(_) | GroupError::NotPrime(_)) => 2,
            AnalysisError::Engine(_) => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub index: usize,
    pub member_order: u64,
    pub class_size: u64,
    pub normalizer_order: u64,
    /// Generators of the representative as image lists.
    pub generators: Vec<Vec<u32>>,
    pub nilpotent: bool,
    pub supersolvable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSection {
    pub class_count: usize,
    pub total_subgroups: u64,
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsSection {
    pub total: u64,
    pub supersolvable: u64,
    pub non_supersolvable: u64,
    pub nilpotent: u64,
    pub non_nilpotent: u64,
    pub is_solvable: bool,
    pub identification: Identification,
    /// Closed-form reference count of non-nilpotent subgroups, for
    /// `SL(2,p)` / `PSL(2,p)` with `p >= 5`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_non_nilpotent: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSection {
    pub derived: SeriesReport,
    pub upper_central: SeriesReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub spec: String,
    pub order: u64,
    pub degree: usize,
    /// Points in `generators` are numbered from this value.
    pub point_base: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<CountsSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<Verdict>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesSection>,
}

fn reference_for(spec: &GroupSpec) -> Option<u64> {
    match (spec.kind(), spec.params()) {
        ("SL" | "PSL", [2, p]) if *p >= 5 => dickson_nonnilpotent_reference(*p).ok(),
        _ => None,
    }
}

fn lattice_section(lattice: &LatticeReport, preds: &[ClassPredicates]) -> LatticeSection {
    LatticeSection {
        class_count: lattice.class_count,
        total_subgroups: lattice.total_subgroups,
        classes: lattice
            .classes
            .iter()
            .zip(preds)
            .enumerate()
            .map(|(index, (c, p))| ClassEntry {
                index,
                member_order: c.member_order,
                class_size: c.class_size,
                normalizer_order: c.normalizer_order,
                generators: c
                    .representative
                    .generators()
                    .iter()
                    .map(|g| g.images().to_vec())
                    .collect(),
                nilpotent: p.nilpotent,
                supersolvable: p.supersolvable,
            })
            .collect(),
    }
}

/// Runs the request and returns the structured report.
pub fn run(request: &AnalysisRequest) -> Result<Report, AnalysisError> {
    run_with(request, &CriterionRegistry::standard())
}

pub fn run_with(
    request: &AnalysisRequest,
    registry: &CriterionRegistry,
) -> Result<Report, AnalysisError> {
    request.validate()?;
    let criteria = match &request.criteria {
        Some(names) => registry.select(names)?,
        None => registry.iter().collect(),
    };
    let group = request.spec.build()?.limited(request.limits);
    let wants = |s: Section| request.sections.contains(&s);

    let mut report = Report {
        spec: request.spec.to_string(),
        order: group.order(),
        degree: group.degree(),
        point_base: 0,
        lattice: None,
        counts: None,
        verdicts: None,
        series: None,
    };

    if wants(Section::Lattice) || wants(Section::Counts) || wants(Section::Verdicts) {
        let lattice = subgroup_classes(&group)?;
        let preds = class_predicates(&lattice)?;
        let mut counts: CountsReport = counts_from(&lattice, &preds)?;
        counts.verdicts = criteria.iter().map(|c| c.evaluate(&counts)).collect();
        counts.check_invariants()?;
        if wants(Section::Lattice) {
            report.lattice = Some(lattice_section(&lattice, &preds));
        }
        if wants(Section::Counts) {
            report.counts = Some(CountsSection {
                total: counts.total_subgroups,
                supersolvable: counts.supersolvable_count,
                non_supersolvable: counts.non_supersolvable_count,
                nilpotent: counts.nilpotent_count,
                non_nilpotent: counts.non_nilpotent_count,
                is_solvable: counts.is_solvable_direct,
                identification: counts.identification,
                reference_non_nilpotent: reference_for(&request.spec),
            });
        }
        if wants(Section::Verdicts) {
            report.verdicts = Some(counts.verdicts);
        }
    }
    if wants(Section::Series) {
        report.series = Some(SeriesSection {
            derived: derived_series(&group),
            upper_central: upper_central_series(&group)?,
        });
    }
    Ok(report)
}

/// Runs the request and renders it in the requested format.
pub fn run_to_string(request: &AnalysisRequest) -> Result<String, AnalysisError> {
    let report = run(request)?;
    Ok(match request.format {
        ReportFormat::Json => render_json(&report),
        ReportFormat::Text => render_text(&report),
    })
}

pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

fn cycles_one_based(images: &[u32]) -> String {
    crate::perm::Permutation::try_from(images.to_vec())
        .map(|p| p.to_cycle_string(1))
        .unwrap_or_else(|_| format!("{images:?}"))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// A transcript laid out like the equivalent GAP session. Points are
/// printed 1-based.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "gap> G := {};", report.spec);
    let _ = writeln!(
        w,
        "<group of size {} on {} points>",
        report.order, report.degree
    );
    if let Some(lat) = &report.lattice {
        let _ = writeln!(w, "gap> L := LatticeSubgroups(G);");
        let _ = writeln!(
            w,
            "<subgroup lattice of G, {} classes, {} subgroups>",
            lat.class_count, lat.total_subgroups
        );
        let _ = writeln!(w, "gap> C := ConjugacyClassesSubgroups(L);");
        let _ = writeln!(
            w,
            "{:>5} {:>7} {:>6} {:>10} {:>5} {:>6}  generators",
            "class", "order", "size", "normalizer", "nilp", "ssolv"
        );
        for c in &lat.classes {
            let gens: Vec<String> = c.generators.iter().map(|g| cycles_one_based(g)).collect();
            let gens = if gens.is_empty() {
                "()".to_string()
            } else {
                gens.join(", ")
            };
            let _ = writeln!(
                w,
                "{:>5} {:>7} {:>6} {:>10} {:>5} {:>6}  {}",
                c.index + 1,
                c.member_order,
                c.class_size,
                c.normalizer_order,
                yes_no(c.nilpotent),
                yes_no(c.supersolvable),
                gens
            );
        }
    }
    if let Some(c) = &report.counts {
        let _ = writeln!(
            w,
            "gap> Sum(List(Filtered(C, t -> not IsSupersolvable(Representative(t))), Size));"
        );
        let _ = writeln!(w, "{}", c.non_supersolvable);
        let _ = writeln!(
            w,
            "gap> Sum(List(Filtered(C, t -> IsSupersolvable(Representative(t))), Size));"
        );
        let _ = writeln!(w, "{}", c.supersolvable);
        let _ = writeln!(
            w,
            "gap> Sum(List(Filtered(C, t -> not IsNilpotent(Representative(t))), Size));"
        );
        let _ = writeln!(w, "{}", c.non_nilpotent);
        let _ = writeln!(w, "gap> IsSolvable(G);");
        let _ = writeln!(w, "{}", c.is_solvable);
        let id = match c.identification {
            Identification::A5 => "A5",
            Identification::Sl2_5 => "SL(2,5)",
            Identification::Unknown => "unknown",
        };
        let _ = writeln!(
            w,
            "# total {}, nilpotent {}, identified as {id}",
            c.total, c.nilpotent
        );
        if let Some(r) = c.reference_non_nilpotent {
            let _ = writeln!(
                w,
                "# closed-form reference non-nilpotent count {r} (enumerated {})",
                c.non_nilpotent
            );
        }
    }
    if let Some(vs) = &report.verdicts {
        let _ = writeln!(w, "# verdicts");
        for v in vs {
            let boundary = match v.boundary_identification {
                Some(b) => b.to_string(),
                None => "-".to_string(),
            };
            let _ = writeln!(
                w,
                "{:<22} observed {:>4} threshold {:>3} implies_solvable {:<5} boundary {}",
                v.criterion, v.observed, v.threshold, v.implies_solvable, boundary
            );
        }
    }
    if let Some(s) = &report.series {
        let fmt = |r: &SeriesReport| {
            r.terms
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" > ")
        };
        let _ = writeln!(w, "# derived series orders: {}", fmt(&s.derived));
        let up: Vec<String> = s.upper_central.terms.iter().map(u64::to_string).collect();
        let _ = writeln!(w, "# upper central series orders: {}", up.join(" < "));
    }
    out
}

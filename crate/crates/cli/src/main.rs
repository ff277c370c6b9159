use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use supersolv::analysis::{run_to_string, AnalysisError, AnalysisRequest, ReportFormat, Section};
use supersolv::criteria::CriterionRegistry;
use supersolv::Limits;

/// Subgroup lattices and subgroup-counting solvability criteria for
/// finite permutation groups.
#[derive(Debug, Parser)]
#[command(name = "supersolv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one group, e.g. `A(5)`, `SL(2,5)`, `NM(4,5,2)`, `DP(S(3),C(2))`.
    ///
    /// `D(n)` is the dihedral group of order 2n.
    Analyze {
        spec: String,
        /// Comma-separated subset of lattice,counts,verdicts,series.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "lattice,counts,verdicts,series"
        )]
        sections: Vec<Section>,
        #[arg(long, default_value = "text")]
        format: ReportFormat,
        /// Largest group order accepted by lattice enumeration.
        #[arg(long, env = "SUPERSOLV_MAX_ORDER", default_value_t = Limits::DEFAULT_MAX_LATTICE_ORDER)]
        max_order: u64,
        /// Largest group order that may be enumerated element by element.
        #[arg(long, env = "SUPERSOLV_MAX_ELEMENTS", default_value_t = Limits::DEFAULT_MAX_ELEMENTS)]
        max_elements: u64,
        /// Largest index accepted by the coset action.
        #[arg(long, env = "SUPERSOLV_MAX_COSET_INDEX", default_value_t = Limits::DEFAULT_MAX_COSET_INDEX)]
        max_coset_index: u64,
        /// Comma-separated criterion names; all registered criteria by default.
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<String>>,
        /// Worker threads; output does not depend on this.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// List the registered solvability criteria.
    Criteria,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = execute(
        cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}

fn execute(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> u8 {
    match cli.command {
        Command::Criteria => {
            let reg = CriterionRegistry::standard();
            for c in reg.iter() {
                let line = format!(
                    "{:<22} threshold {:>3}  {}",
                    c.name(),
                    c.threshold(),
                    c.describe()
                );
                if writeln!(out, "{line}").is_err() {
                    return 4;
                }
            }
            0
        }
        Command::Analyze {
            spec,
            sections,
            format,
            max_order,
            max_elements,
            max_coset_index,
            criteria,
            threads,
        } => {
            if let Some(n) = threads {
                if let Err(e) = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                {
                    let _ = writeln!(err, "error: {e}");
                    return 4;
                }
            }
            let result = AnalysisRequest::parse(&spec).and_then(|req| {
                let mut req = req
                    .with_sections(sections)
                    .with_format(format)
                    .with_limits(Limits {
                        max_elements,
                        max_coset_index,
                        max_lattice_order: max_order,
                    });
                req.criteria = criteria;
                run_to_string(&req)
            });
            match result {
                Ok(text) => match out.write_all(text.as_bytes()) {
                    Ok(()) => 0,
                    Err(_) => 4,
                },
                Err(e) => report_error(&e, err),
            }
        }
    }
}

fn report_error(e: &AnalysisError, err: &mut impl Write) -> u8 {
    let _ = writeln!(err, "error: {e}");
    e.exit_code() as u8
}

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::{conjugates, corpus_up_to, primes_of, Oracle};
use serde_json::Value;
use supersolv::classify::{
    is_nilpotent, is_solvable, is_supersolvable, sylow, sylow_count, Profile,
};
use supersolv::constructors::{alternating, dihedral, nm_group, psl2, sl2, symmetric};
use supersolv::corpus::corpus_specs;
use supersolv::criteria::{
    counts, dickson_nonnilpotent_reference, identify, psl2_order, suzuki_order, Boundary,
    Identification,
};
use supersolv::lattice::frattini;
use supersolv::subgroup_classes;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_supersolv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cli_json(spec: &str, threads: &str) -> Result<(Vec<u8>, Value), String> {
    let out = cli(&["analyze", spec, "--format", "json", "--threads", threads]);
    if !out.status.success() {
        return Err(format!(
            "{spec}: exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    Ok((out.stdout, value))
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{what} took {took:?}, limit {limit:?}"));
    }
    Ok(took)
}

fn p_part(n: u64, p: u64) -> u64 {
    let mut q = 1;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        q *= p;
    }
    q
}

fn a5_headline() -> Outcome {
    let start = Instant::now();
    let (_, v) = cli_json("A(5)", "4")?;
    let took = within(start, Duration::from_secs(10), "A(5)")?;
    let got = (
        v["lattice"]["class_count"].as_u64(),
        v["counts"]["total"].as_u64(),
        v["counts"]["supersolvable"].as_u64(),
        v["counts"]["non_supersolvable"].as_u64(),
        v["counts"]["non_nilpotent"].as_u64(),
    );
    ensure!(
        got == (Some(9), Some(59), Some(53), Some(6), Some(22)),
        "(classes, total, ss, non-ss, non-nil) = {got:?}"
    );
    Ok(format!("9 classes, 59 subgroups, 53/6/22 in {took:?}"))
}

fn a5_class_sizes() -> Outcome {
    let a5 = alternating(5).unwrap();
    let report = subgroup_classes(&a5).unwrap();
    let class = |order: u64| {
        let found: Vec<_> = report
            .classes
            .iter()
            .filter(|c| c.member_order == order)
            .collect();
        assert_eq!(found.len(), 1, "one class of order {order}");
        found[0]
    };
    let d10 = class(10);
    let d6 = class(6);
    let a4 = class(12);
    ensure!(
        !d10.representative.is_abelian() && !d6.representative.is_abelian(),
        "order 10 and 6 classes should be dihedral"
    );
    ensure!(
        !is_supersolvable(&a4.representative).unwrap(),
        "order 12 class should be A4-type"
    );
    let sizes = (d10.class_size, d6.class_size, a4.class_size);
    ensure!(sizes == (6, 10, 5), "class sizes (D10, D6, A4) = {sizes:?}");
    Ok("D10 x6, D6 x10, A4 x5".into())
}

fn sl2_5_counts() -> Outcome {
    let start = Instant::now();
    let g = sl2(5).unwrap();
    let r = counts(&g).unwrap();
    let id = identify(&g).unwrap();
    let took = within(start, Duration::from_secs(60), "SL(2,5)")?;
    ensure!(
        r.non_nilpotent_count == 22 && r.non_supersolvable_count == 6,
        "non-nilpotent {}, non-supersolvable {}",
        r.non_nilpotent_count,
        r.non_supersolvable_count
    );
    ensure!(id == Identification::Sl2_5, "identified as {id:?}");
    Ok(format!(
        "22 non-nilpotent, 6 non-supersolvable, SL2_5 in {took:?}"
    ))
}

fn sl2_7_stretch() -> Outcome {
    let start = Instant::now();
    let r = counts(&sl2(7).unwrap()).unwrap();
    let took = within(start, Duration::from_secs(600), "SL(2,7)")?;
    let psl = counts(&psl2(7).unwrap()).unwrap();
    ensure!(
        r.non_nilpotent_count == 65,
        "expected 65 non-nilpotent subgroups, enumerated {} (total {}, {took:?}); \
         PSL(2,7) has {} of {}",
        r.non_nilpotent_count,
        r.total_subgroups,
        psl.non_nilpotent_count,
        psl.total_subgroups
    );
    Ok(format!("65 non-nilpotent in {took:?}"))
}

fn oracle_equivalence() -> Outcome {
    let small = corpus_up_to(24);
    for (spec, g) in &small {
        let expected = Oracle::new(g).subgroup_sets();
        let found = subgroup_classes(g).unwrap().all_subgroups();
        let distinct: BTreeSet<_> = found.iter().cloned().collect();
        ensure!(
            distinct.len() == found.len() && distinct == expected,
            "{spec}: engine {} subgroups, oracle {}",
            found.len(),
            expected.len()
        );
    }
    Ok(format!("{} groups of order <= 24", small.len()))
}

fn predicate_ladder() -> Outcome {
    let groups = corpus_up_to(200);
    let mut checked = 0;
    for (spec, g) in &groups {
        ensure!(Profile::of(g).unwrap().respects_ladder(), "{spec}");
        for c in &subgroup_classes(g).unwrap().classes {
            ensure!(
                Profile::of(&c.representative).unwrap().respects_ladder(),
                "{spec}: subgroup {:?}",
                c.representative
            );
            checked += 1;
        }
    }
    Ok(format!(
        "{} groups and {checked} subgroup classes, no violations",
        groups.len()
    ))
}

fn classification_spot_checks() -> Outcome {
    let ss = |g| is_supersolvable(&g).unwrap();
    ensure!(ss(symmetric(3).unwrap()), "S3 should be supersolvable");
    ensure!(
        !ss(alternating(4).unwrap()),
        "A4 should not be supersolvable"
    );
    let s4 = symmetric(4).unwrap();
    ensure!(is_solvable(&s4), "S4 should be solvable");
    ensure!(!ss(s4), "S4 should not be supersolvable");
    for n in 3..=12 {
        ensure!(ss(dihedral(n).unwrap()), "D({n}) should be supersolvable");
    }
    ensure!(
        ss(nm_group(4, 5, 2).unwrap()),
        "NM(4,5,2) should be supersolvable"
    );
    Ok("S3, A4, S4, D(3..12), NM(4,5,2)".into())
}

fn sylow_laws() -> Outcome {
    let groups = corpus_up_to(200);
    let mut pairs = 0;
    for (spec, g) in &groups {
        let brute = (g.order() <= 24).then(|| Oracle::new(g));
        let brute_subgroups = brute.as_ref().map(|o| o.subgroups());
        for p in primes_of(g.order()) {
            let s = sylow(g, p).unwrap();
            let full = p_part(g.order(), p);
            ensure!(s.order() == full, "{spec} p={p}: |P| = {}", s.order());
            let n = sylow_count(g, p).unwrap();
            ensure!(n % p == 1, "{spec} p={p}: n_p = {n}");
            let orbit = conjugates(g, &s);
            ensure!(orbit.len() as u64 == n, "{spec} p={p}: orbit size");
            // Every subgroup of full p-power order lies in the orbit of P.
            let found: BTreeSet<_> = match (&brute, &brute_subgroups) {
                (Some(o), Some(all)) => all
                    .iter()
                    .filter(|m| m.count_ones() as u64 == full)
                    .map(|&m| o.to_set(m))
                    .collect(),
                _ => {
                    let lattice = subgroup_classes(g).unwrap();
                    lattice
                        .all_subgroups()
                        .into_iter()
                        .filter(|h| h.len() as u64 == full)
                        .collect()
                }
            };
            ensure!(
                found == orbit,
                "{spec} p={p}: Sylow subgroups not all conjugate"
            );
            pairs += 1;
        }
    }
    Ok(format!(
        "{pairs} (group, prime) pairs over {} groups",
        groups.len()
    ))
}

fn formula_evaluations() -> Outcome {
    let got = (
        psl2_order(5, 1).unwrap(),
        psl2_order(7, 1).unwrap(),
        suzuki_order(8).unwrap(),
        dickson_nonnilpotent_reference(4).unwrap(),
        dickson_nonnilpotent_reference(5).unwrap(),
        dickson_nonnilpotent_reference(7).unwrap(),
    );
    ensure!(got == (60, 168, 29120, 17, 11, 29), "{got:?}");
    ensure!(psl2(5).unwrap().order() == 60, "|PSL(2,5)|");
    ensure!(psl2(7).unwrap().order() == 168, "|PSL(2,7)|");
    Ok("60, 168, 29120, 17/11/29".into())
}

fn verdict_soundness() -> Outcome {
    let groups = corpus_up_to(u64::MAX);
    let mut flagged = BTreeSet::new();
    for (spec, g) in &groups {
        let r = counts(g).unwrap();
        for v in &r.verdicts {
            ensure!(
                !v.implies_solvable || r.is_solvable_direct,
                "{spec}: {} implied solvability",
                v.criterion
            );
            if let Some(b) = v.boundary_identification {
                flagged.insert((spec.clone(), v.threshold, b.to_string()));
            }
        }
    }
    let expected: BTreeSet<_> = [
        ("A(5)", 22, Boundary::A5),
        ("A(5)", 6, Boundary::A5),
        ("A(5)", 53, Boundary::A5),
        ("PSL(2,5)", 22, Boundary::A5),
        ("PSL(2,5)", 6, Boundary::A5),
        ("PSL(2,5)", 53, Boundary::A5),
        ("SL(2,5)", 22, Boundary::Sl2_5),
        ("SL(2,5)", 6, Boundary::Sl2_5),
    ]
    .into_iter()
    .map(|(s, t, b)| (s.to_string(), t, b.to_string()))
    .collect();
    ensure!(flagged == expected, "boundary flags {flagged:?}");
    Ok(format!(
        "{} groups; only A5 (and its PSL(2,5) copy) and SL2_5 flagged",
        groups.len()
    ))
}

fn frattini_properties() -> Outcome {
    let groups = corpus_up_to(u64::MAX);
    for (spec, g) in &groups {
        let phi = frattini(g).unwrap();
        ensure!(
            is_nilpotent(&phi).unwrap(),
            "{spec}: Frattini subgroup not nilpotent"
        );
        let quotient = g.coset_action(&phi).unwrap();
        let before = counts(g).unwrap().non_supersolvable_count;
        let after = counts(&quotient).unwrap().non_supersolvable_count;
        ensure!(after <= before, "{spec}: G/Phi has {after} > {before}");
    }
    Ok(format!("{} groups", groups.len()))
}

fn determinism() -> Outcome {
    let specs = corpus_specs();
    for spec in &specs {
        let (one, _) = cli_json(spec, "1")?;
        let (many, _) = cli_json(spec, "4")?;
        ensure!(one == many, "{spec}: JSON differs between 1 and 4 threads");
    }
    Ok(format!(
        "{} specs byte-identical at 1 and 4 threads",
        specs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("A5 headline counts", a5_headline),
        ("A5 class sizes", a5_class_sizes),
        ("SL(2,5) counts and identification", sl2_5_counts),
        ("SL(2,7) non-nilpotent count [slow]", sl2_7_stretch),
        ("lattice equals subset-closure oracle", oracle_equivalence),
        ("predicate ladder", predicate_ladder),
        ("classification spot checks", classification_spot_checks),
        ("Sylow laws", sylow_laws),
        ("closed-form evaluations", formula_evaluations),
        ("verdict soundness and boundary flags", verdict_soundness),
        ("Frattini properties", frattini_properties),
        ("JSON determinism across thread counts", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The reference set of groups used by the sweeps in the test suites.

use crate::constructors::{parse_spec, GroupSpec};

/// Spec strings of the standard corpus, smallest families first.
pub fn corpus_specs() -> Vec<String> {
    let mut specs: Vec<String> = (1..=24).map(|n| format!("C({n})")).collect();
    specs.extend((3..=12).map(|n| format!("D({n})")));
    specs.extend(
        [
            "S(3)",
            "S(4)",
            "A(4)",
            "K4",
            "NM(2,5,4)",
            "NM(4,5,2)",
            "DP(C(2),C(2))",
            "DP(S(3),C(2))",
            "DP(C(4),S(3))",
            "DP(C(3),S(3))",
            "DP(C(2),D(4))",
            "DP(K4,C(3))",
            "NM(3,7,2)",
            "NM(6,7,3)",
            "NM(2,9,8)",
            "NM(4,13,5)",
            "D(20)",
            "S(5)",
            "A(5)",
            "DP(A(4),C(2))",
            "DP(S(3),S(3))",
            "SL(2,3)",
            "PSL(2,5)",
            "SL(2,5)",
            "PSL(2,7)",
            "SL(2,7)",
        ]
        .map(String::from),
    );
    specs
}

/// The corpus, parsed.
pub fn corpus() -> Vec<GroupSpec> {
    corpus_specs()
        .iter()
        .map(|s| parse_spec(s).expect("corpus specs are valid"))
        .collect()
}

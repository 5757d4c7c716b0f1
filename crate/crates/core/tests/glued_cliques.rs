use choosability::decide::{decide_with_mode, DecideConfig, DecideMode};
use choosability::graph::{generate_family, Family};

fn standard_at(a: usize, b: usize, limit: usize) -> choosability::decide::Decision {
    let p = generate_family(Family::GluedCliques { a, b }).unwrap();
    let cfg = DecideConfig {
        branch_limit: limit,
        ..DecideConfig::default()
    };
    decide_with_mode(&p, &cfg, DecideMode::Standard).unwrap()
}

fn same_verdict_more_branches(a: usize, b: usize) {
    let wide = standard_at(a, b, 100_000);
    let narrow = standard_at(a, b, 1_000);
    assert_eq!(wide.verdict, narrow.verdict);
    assert_eq!(wide.stats.monomials, narrow.stats.monomials);
    assert!(narrow.stats.branches > wide.stats.branches);
    assert!(narrow.stats.peak_terms < wide.stats.peak_terms);
}

#[test]
fn three_glued_k5_branch_limit_invariant() {
    same_verdict_more_branches(3, 5);
}

// about three minutes in release
#[test]
#[ignore]
fn six_glued_k5_branch_limit_invariant() {
    same_verdict_more_branches(6, 5);
}

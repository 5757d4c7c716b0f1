//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use choosability::bench::full_run_stats;
use choosability::decide::{
    collect_constraints, enumerate_assignment_patterns, enumerate_feasible_vectors, pipeline_decide,
    standard_alon_tarsi, AssignmentPattern, Certificate, CharVector, Constraints, DecideConfig, PatternSearch,
    Verdict,
};
use choosability::graph::{generate_family, order_vertices, Edge, Family, Heuristic, Problem};
use choosability::oracle::{
    bad_assignments, brute_force_choosable, color_from_pattern, count_f_orientations, direct_coefficient,
    BruteLimits,
};
use choosability::poly::{final_terms, Monomial, RunConfig};

use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const LIMITS: [usize; 3] = [1, 8, 1_000_000];

fn coefficient_corpus() -> Vec<Problem> {
    random_corpus(0x5eed_0001, 200, 8, 14, (2, 4))
}

fn run(p: &Problem, h: Heuristic, cfg: RunConfig) -> Vec<Monomial> {
    final_terms(p, &order_vertices(p, h), &cfg).map(|r| r.0).unwrap()
}

fn within(t: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let e = t.elapsed();
    ensure!(e < limit, "{what} took {e:?}, limit {limit:?}");
    Ok(())
}

fn basis_vectors(p: &Problem) -> Result<BTreeSet<CharVector>, String> {
    let Constraints::Rows { basis, .. } = collect_constraints(p, &DecideConfig::default()).unwrap().0 else {
        return Err("constraint collection short-circuited".into());
    };
    let all = enumerate_feasible_vectors(&basis, 25).map_err(|r| r.to_string())?;
    ensure!(all.first().is_some_and(CharVector::is_zero), "zero vector missing");
    Ok(all.into_iter().filter(|v| !v.is_zero()).collect())
}

fn cv(bits: &[u8]) -> CharVector {
    CharVector::from_bits(bits)
}

fn c1_standard_coefficients() -> Outcome {
    let t = Instant::now();
    let corpus = coefficient_corpus();
    let mut checked = 0usize;
    for (i, p) in corpus.iter().enumerate() {
        ensure!(p.vertex_count() <= 8 && p.edge_count() <= 14, "corpus bounds");
        let truth: BTreeMap<Vec<u32>, i64> = below_sizes(p).into_iter().map(|f| {
            let c = direct_coefficient(p, &f);
            (f, c)
        }).collect();
        for h in THREE_HEURISTICS {
            for n in LIMITS {
                let got: BTreeMap<Vec<u32>, i64> = run(p, h, RunConfig::standard().with_branch_limit(n))
                    .into_iter()
                    .map(|m| (m.base, m.coefficient))
                    .collect();
                for (f, &c) in &truth {
                    ensure!(got.get(f).copied().unwrap_or(0) == c, "problem {i}, {h}, N={n}, f={f:?}");
                    checked += 1;
                }
                ensure!(got.keys().all(|f| truth.contains_key(f)), "problem {i}: term outside f < s");
            }
        }
    }
    within(t, Duration::from_secs(60), "criterion 1")?;
    Ok(format!("{} problems, {checked} coefficient checks, {:.1?}", corpus.len(), t.elapsed()))
}

fn c2_extended_coefficients() -> Outcome {
    let t = Instant::now();
    let corpus = coefficient_corpus();
    let mut checked = 0usize;
    for (i, p) in corpus.iter().enumerate() {
        let truth: BTreeMap<Vec<u32>, i64> = tight_exponents(p)
            .into_iter()
            .map(|(g, _)| {
                let c = direct_coefficient(p, &g);
                (g, c)
            })
            .collect();
        for h in THREE_HEURISTICS {
            for n in LIMITS {
                let got: BTreeMap<Vec<u32>, i64> = run(p, h, RunConfig::extended().with_branch_limit(n))
                    .into_iter()
                    .filter(|m| m.marker.is_some())
                    .map(|m| (m.exponents(), m.coefficient))
                    .collect();
                for (g, &c) in &truth {
                    ensure!(got.get(g).copied().unwrap_or(0) == c, "problem {i}, {h}, N={n}, g={g:?}");
                    checked += 1;
                }
                ensure!(got.keys().all(|g| truth.contains_key(g)), "problem {i}: stray tight term");
            }
        }
    }
    within(t, Duration::from_secs(60), "criterion 2")?;
    Ok(format!("{checked} tight coefficient checks, {:.1?}", t.elapsed()))
}

fn c3_five_cycle() -> Outcome {
    let p = cycle(5, 2);
    let ones = CharVector::new(0b11111, 5);
    let engine = basis_vectors(&p)?;
    ensure!(engine == BTreeSet::from([ones]), "feasible vectors {engine:?}");
    ensure!(solutions(5, &oracle_rows(&p)) == engine, "oracle-derived vectors differ");
    let d = pipeline_decide(&p, &DecideConfig::default()).unwrap();
    let want = AssignmentPattern::from_vectors([ones, ones]);
    ensure!(d.verdict == Verdict::NotChoosable { witness: want }, "verdict {}", d.verdict);
    Ok("feasible {0, 1}; witness (1,1,1,1,1)x2".into())
}

fn c4_fan() -> Outcome {
    let p = fan();
    let printed: Vec<Vec<i64>> = vec![
        vec![0, 1, -1, 1, -1],
        vec![-1, 0, 1, 0, 1],
        vec![1, -1, 0, 0, -1],
        vec![-1, 1, 0, 0, 1],
        vec![1, -1, 0, -1, 0],
    ];
    let engine = basis_vectors(&p)?;
    ensure!(engine == solutions(5, &printed), "engine {engine:?} vs printed system");
    ensure!(engine == solutions(5, &oracle_rows(&p)), "oracle-derived vectors differ");
    let (a, b) = (cv(&[1, 1, 1, 0, 0]), cv(&[1, 0, 0, 1, 1]));
    ensure!(engine == BTreeSet::from([a, b]), "vectors {engine:?}");
    let d = pipeline_decide(&p, &DecideConfig::default()).unwrap();
    ensure!(d.findings.deletable_edges == vec![Edge::new(2, 3)], "deletable {:?}", d.findings.deletable_edges);
    let PatternSearch::Complete(patterns) = enumerate_assignment_patterns(&[a, b], p.sizes(), 100) else {
        return Err("pattern cap hit".into());
    };
    let want = AssignmentPattern::from_vectors([a, a, b, b]);
    ensure!(patterns == vec![want.clone()], "patterns {patterns:?}");
    ensure!(d.verdict == Verdict::NotChoosable { witness: want }, "verdict {}", d.verdict);
    Ok("vectors (1,1,1,0,0),(1,0,0,1,1); edge 2-3 deletable; unique pattern not colorable".into())
}

fn c5_wheel() -> Outcome {
    let p = wheel();
    let cfg = DecideConfig::default();
    ensure!(standard_alon_tarsi(&p, &cfg).unwrap().0.is_none(), "standard test found a witness");
    let derived = solutions(6, &oracle_rows(&p));
    let engine = basis_vectors(&p)?;
    ensure!(engine == derived, "engine {engine:?} vs oracle-derived {derived:?}");
    let d = pipeline_decide(&p, &cfg).unwrap();
    ensure!(
        d.verdict == Verdict::Choosable { certificate: Certificate::AllPatternsColorable { count: 1 } },
        "verdict {}",
        d.verdict
    );
    let limits = BruteLimits { max_vertices: 6, max_total_size: 17 };
    ensure!(bad_assignments(&p, &limits).unwrap().is_empty(), "brute force finds a bad assignment");
    let listed: Vec<String> = derived.iter().map(|v| v.to_string()).collect();
    let edges: Vec<String> = d.findings.deletable_edges.iter().map(|e| e.to_string()).collect();
    Ok(format!("derived vectors {}; deletable {}; one pattern, colorable", listed.join(" "), edges.join(" ")))
}

fn c6_wheel_with_ears() -> Outcome {
    let p = wheel_with_ears();
    let derived = solutions(8, &oracle_rows(&p));
    let engine = basis_vectors(&p)?;
    ensure!(engine == derived, "engine {engine:?} vs oracle-derived {derived:?}");
    let d = pipeline_decide(&p, &DecideConfig::default()).unwrap();
    let ok = matches!(
        &d.verdict,
        Verdict::Choosable { certificate: Certificate::NoComposition | Certificate::AllPatternsColorable { .. } }
    );
    ensure!(ok, "verdict {}", d.verdict);
    let listed: Vec<String> = derived.iter().map(|v| v.to_string()).collect();
    Ok(format!("derived vectors {}; {}", listed.join(" "), d.verdict))
}

fn c7_even_cycles() -> Outcome {
    for n in (4..=12).step_by(2) {
        let p = cycle(n, 2);
        let (cert, _) = standard_alon_tarsi(&p, &DecideConfig::default()).unwrap();
        let Some(Certificate::WitnessMonomial { degrees, coefficient }) = cert else {
            return Err(format!("C{n}: no witness"));
        };
        ensure!(degrees == vec![1; n], "C{n}: witness {degrees:?}");
        ensure!(coefficient.abs() == 2, "C{n}: coefficient {coefficient}");
        ensure!(coefficient == direct_coefficient(&p, &degrees), "C{n}: oracle disagrees");
    }
    Ok("C4..C12 witness f = 1, |coefficient| = 2".into())
}

fn small_corpus() -> Vec<Problem> {
    let mut corpus = vec![cycle(3, 2), cycle(4, 2), cycle(5, 2), cycle(6, 2), complete(4, 3), complete(4, 2)];
    corpus.push(Problem::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)], vec![2, 2, 3, 2, 2]).unwrap());
    corpus.extend(random_corpus(0x5eed_0008, 114, 6, 12, (1, 3)));
    corpus
}

fn c8_pipeline_vs_oracle() -> Outcome {
    let corpus = small_corpus();
    let mut decisive = 0;
    let mut rows_checked = 0;
    for (i, p) in corpus.iter().enumerate() {
        ensure!(p.vertex_count() <= 6 && p.sizes().iter().all(|&s| s <= 3), "corpus bounds");
        let d = pipeline_decide(p, &DecideConfig::default()).unwrap();
        let truth = brute_force_choosable(p, &BruteLimits::default()).unwrap();
        if d.verdict.is_decisive() {
            decisive += 1;
            ensure!(
                std::mem::discriminant(&d.verdict) == std::mem::discriminant(&truth),
                "problem {i}: pipeline {} vs brute force {truth}",
                d.verdict
            );
        }
        let rows = engine_rows(p, Heuristic::MdProc, 1_000_000);
        for bad in bad_assignments(p, &BruteLimits::default()).unwrap() {
            for part in &bad.parts {
                for row in &rows {
                    ensure!(satisfies(row, part.vector.mask()), "problem {i}: row {row:?} vs {}", part.vector);
                    rows_checked += 1;
                }
            }
        }
    }
    Ok(format!("{} problems, {decisive} decisive, {rows_checked} row checks, 0 violations", corpus.len()))
}

fn c9_glued_cliques() -> Outcome {
    let mut notes = Vec::new();
    for (a, b) in [(2, 3), (3, 3), (2, 4)] {
        let t = Instant::now();
        let p = generate_family(Family::GluedCliques { a, b }).unwrap();
        let d = pipeline_decide(&p, &DecideConfig::default()).unwrap();
        let Verdict::NotChoosable { witness } = &d.verdict else {
            return Err(format!("glued({a},{b}): {}", d.verdict));
        };
        ensure!(witness.sums(p.vertex_count()) == p.sizes(), "glued({a},{b}): witness sizes");
        ensure!(color_from_pattern(&p, witness).is_none(), "glued({a},{b}): witness is colorable");
        within(t, Duration::from_secs(10), &format!("glued({a},{b})"))?;
        notes.push(format!("({a},{b}) {:.0?}", t.elapsed()));
    }
    Ok(format!("not choosable, witnesses verified: {}", notes.join(", ")))
}

fn c10_complete_graph_orientations() -> Outcome {
    for n in 3..=5usize {
        let p = complete(n, n as u32 - 1);
        let m = p.edge_count() as u32;
        let bound = vec![n as u32 - 2; n];
        let by_f: u64 = vectors_with_sum(&bound, m).iter().map(|f| count_f_orientations(&p, f).total).sum();
        // independent route: every orientation as a bitmask
        let by_mask = (0..1u64 << m)
            .filter(|mask| {
                let mut out = vec![0u32; n];
                for (i, e) in p.edges().iter().enumerate() {
                    out[if mask >> i & 1 == 1 { e.tail } else { e.head }] += 1;
                }
                out.iter().all(|&d| d <= n as u32 - 2)
            })
            .count() as u64;
        // 2^m (1 - n / 2^(n-1))
        let formula = (1u64 << m) - (n as u64) * (1u64 << (m as usize + 1 - n));
        ensure!(by_f == formula && by_mask == formula, "K{n}: {by_f} / {by_mask} vs {formula}");
    }
    Ok("K3: 2, K4: 32, K5: 704".into())
}

fn c11_grid() -> Outcome {
    let t = Instant::now();
    let p = generate_family(Family::GridDiag { a: 4 }).unwrap();
    let d = pipeline_decide(&p, &DecideConfig::default()).unwrap();
    let Verdict::Choosable { certificate: Certificate::WitnessMonomial { degrees, coefficient } } = &d.verdict else {
        return Err(format!("verdict {}", d.verdict));
    };
    within(t, Duration::from_secs(30), "criterion 11")?;
    ensure!(degrees.iter().zip(p.sizes()).all(|(d, s)| d < s), "witness not below sizes");
    ensure!(degrees.iter().sum::<u32>() as usize == p.edge_count(), "witness degree sum");
    Ok(format!("witness coefficient {coefficient}, {:.1?}", t.elapsed()))
}

fn c12_split_invariance() -> Outcome {
    let corpus = coefficient_corpus();
    for (i, p) in corpus.iter().enumerate() {
        for h in THREE_HEURISTICS {
            for cfg in [RunConfig::standard(), RunConfig::extended()] {
                let reference = run(p, h, cfg.with_branch_limit(LIMITS[0]));
                for n in &LIMITS[1..] {
                    ensure!(run(p, h, cfg.with_branch_limit(*n)) == reference, "problem {i}, {h}, N={n}");
                }
            }
            let verdicts: Vec<Verdict> = LIMITS
                .iter()
                .map(|&n| {
                    let cfg = DecideConfig { heuristic: h, branch_limit: n, ..DecideConfig::default() };
                    pipeline_decide(p, &cfg).unwrap().verdict
                })
                .collect();
            ensure!(verdicts.windows(2).all(|w| w[0] == w[1]), "problem {i}, {h}: verdicts differ");
        }
    }
    Ok(format!("{} problems identical for N in {{1, 8, 10^6}}", corpus.len()))
}

fn c13_bench() -> Outcome {
    let p = generate_family(Family::CycleTriangles { n: 8 }).unwrap();
    let mut counts = Vec::new();
    for h in [Heuristic::Vsep, Heuristic::MdProc] {
        let t = Instant::now();
        let stats = full_run_stats(&p, h).map_err(|e| e.to_string())?;
        within(t, Duration::from_secs(60), &format!("{h}"))?;
        counts.push(stats.monomials);
    }
    ensure!(counts[0] <= counts[1], "VSEP {} > MD+PROC {}", counts[0], counts[1]);
    Ok(format!("VSEP {} <= MD+PROC {}", counts[0], counts[1]))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("standard coefficients equal orientation counts", c1_standard_coefficients),
        ("extended tight coefficients equal orientation counts", c2_extended_coefficients),
        ("five-cycle", c3_five_cycle),
        ("fan", c4_fan),
        ("wheel", c5_wheel),
        ("wheel with two ears", c6_wheel_with_ears),
        ("even cycles", c7_even_cycles),
        ("pipeline agrees with brute force", c8_pipeline_vs_oracle),
        ("glued cliques", c9_glued_cliques),
        ("complete-graph orientation count", c10_complete_graph_orientations),
        ("grid with diagonals", c11_grid),
        ("splitting invariance", c12_split_invariance),
        ("ordering benchmark", c13_bench),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

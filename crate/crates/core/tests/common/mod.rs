#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use choosability::decide::CharVector;
use choosability::graph::{Heuristic, Problem};
use choosability::oracle::direct_coefficient;
use choosability::poly::{run_truncated_product, DegreeLayout, Flow, RunConfig, TermList};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn cycle(n: usize, s: u32) -> Problem {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Problem::new(n, &edges, vec![s; n]).unwrap()
}

pub fn complete(n: usize, s: u32) -> Problem {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Problem::new(n, &edges, vec![s; n]).unwrap()
}

/// Path 1-2-3-4 plus vertex 0 adjacent to all of it.
pub fn fan() -> Problem {
    Problem::new(
        5,
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)],
        vec![4, 2, 2, 2, 2],
    )
    .unwrap()
}

const WHEEL5: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 1),
];

/// Wheel with center 0 and rim 1..5.
pub fn wheel() -> Problem {
    Problem::new(6, &WHEEL5, vec![5, 2, 2, 2, 3, 3]).unwrap()
}

/// The wheel plus vertex 6 on rim edge 12 and vertex 7 on rim edge 23.
pub fn wheel_with_ears() -> Problem {
    let mut edges = WHEEL5.to_vec();
    edges.extend([(6, 1), (6, 2), (7, 2), (7, 3)]);
    Problem::new(8, &edges, vec![5, 3, 3, 3, 2, 2, 2, 2]).unwrap()
}

/// A random simple graph with the given bounds.
pub fn random_problem(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize, s_range: (u32, u32)) -> Problem {
    let n = rng.gen_range(2..=max_n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(1..=max_m.min(pairs.len()));
    pairs.truncate(m);
    for e in &mut pairs {
        if rng.gen_bool(0.5) {
            *e = (e.1, e.0);
        }
    }
    let sizes = (0..n).map(|_| rng.gen_range(s_range.0..=s_range.1)).collect();
    Problem::new(n, &pairs, sizes).unwrap()
}

/// Fixed-seed corpus used by several suites.
pub fn random_corpus(seed: u64, count: usize, max_n: usize, max_m: usize, s_range: (u32, u32)) -> Vec<Problem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_problem(&mut rng, max_n, max_m, s_range)).collect()
}

pub const THREE_HEURISTICS: [Heuristic; 3] = [Heuristic::Input, Heuristic::Vsep, Heuristic::MdProc];

/// Every vector `f` with `f <= bound` componentwise and `sum f = total`.
pub fn vectors_with_sum(bound: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn go(bound: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == bound.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: u32 = bound[i + 1..].iter().sum();
        for d in 0..=bound[i].min(left) {
            if left - d <= rest {
                cur.push(d);
                go(bound, i + 1, left - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(bound, 0, total, &mut Vec::new(), &mut out);
    out
}

/// Exponents `f` with `f < s` everywhere and `sum f = |E|`.
pub fn below_sizes(p: &Problem) -> Vec<Vec<u32>> {
    let bound: Vec<u32> = p.sizes().iter().map(|&s| s - 1).collect();
    vectors_with_sum(&bound, p.edge_count() as u32)
}

/// Exponents `g` with `g(w) = s(w)` at exactly one `w`, `g < s` elsewhere and
/// `sum g = |E|`, paired with `w`.
pub fn tight_exponents(p: &Problem) -> Vec<(Vec<u32>, usize)> {
    let m = p.edge_count() as u32;
    let mut out = Vec::new();
    for w in 0..p.vertex_count() {
        let s_w = p.size(w);
        if s_w > m {
            continue;
        }
        let bound: Vec<u32> = (0..p.vertex_count())
            .map(|v| if v == w { 0 } else { p.size(v) - 1 })
            .collect();
        for mut g in vectors_with_sum(&bound, m - s_w) {
            g[w] = s_w;
            out.push((g, w));
        }
    }
    out
}

/// Constraint rows derived from oracle coefficients alone: for every base
/// `f` that is below `s` except `f(w) = s(w) - 1` at one or more vertices,
/// row `z` holds the coefficient of `x^(f + 1_z)` where `f(z) = s(z) - 1`.
pub fn oracle_rows(p: &Problem) -> Vec<Vec<i64>> {
    let n = p.vertex_count();
    let mut rows: BTreeMap<Vec<u32>, Vec<i64>> = BTreeMap::new();
    for (g, w) in tight_exponents(p) {
        let c = direct_coefficient(p, &g);
        if c == 0 {
            continue;
        }
        let mut base = g;
        base[w] -= 1;
        rows.entry(base).or_insert_with(|| vec![0; n])[w] = c;
    }
    rows.into_values().collect()
}

/// Every row the extended engine emits, one per base-degree group.
pub fn engine_rows(p: &Problem, h: Heuristic, branch_limit: usize) -> Vec<Vec<i64>> {
    let n = p.vertex_count();
    let ordering = choosability::graph::order_vertices(p, h);
    let cfg = RunConfig::extended()
        .with_early_stop(false)
        .with_branch_limit(branch_limit);
    let mut rows = Vec::new();
    let mut sink = |layout: &DegreeLayout, terms: &TermList| {
        for g in terms.key_groups() {
            let mut row = vec![0i64; n];
            for i in g {
                let m = terms.raw_marker(i);
                if m != 0 {
                    row[layout.vertex(m as usize - 1)] = terms.coefficient(i);
                }
            }
            if row.iter().any(|&c| c != 0) {
                rows.push(row);
            }
        }
        Ok(Flow::Continue)
    };
    run_truncated_product(p, &ordering, &cfg, &mut sink).unwrap();
    rows
}

pub fn satisfies(row: &[i64], mask: u64) -> bool {
    row.iter()
        .enumerate()
        .filter(|&(z, _)| mask >> z & 1 == 1)
        .map(|(_, &c)| i128::from(c))
        .sum::<i128>()
        == 0
}

/// Non-zero 0/1 solutions of the rows, by plain scan.
pub fn solutions(n: usize, rows: &[Vec<i64>]) -> BTreeSet<CharVector> {
    (1..1u64 << n)
        .filter(|&m| rows.iter().all(|r| satisfies(r, m)))
        .map(|m| CharVector::new(m, n))
        .collect()
}

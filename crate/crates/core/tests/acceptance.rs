//! One line per acceptance criterion, then a single assertion over all of
//! them. Run with `--nocapture` to see the report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ste_core::doubling::{chain, chain_levels, weighing_valency, ChainSeed};
use ste_core::exec::Execution;
use ste_core::fixtures;
use ste_core::generators::{random_gnp, random_permutation, random_regular, random_subset};
use ste_core::linegraph::{neg_line_complete, verify_line_spectrum};
use ste_core::params::{admissible_triples, table1};
use ste_core::spectra::{cluster, ramanujan_check_with, verify_ste_exact, JacobiSolver};
use ste_core::starcomp::{find_partition, verify_partition};
use ste_core::weighing::{check_block_family, kronecker, search_m4_pairs, WeighPair};
use ste_core::{QExt, SignedGraph, SignedMatrix};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn signs(text: &str) -> SignedMatrix {
    let rows: Vec<Vec<i64>> = text
        .split_whitespace()
        .map(|l| {
            l.chars()
                .map(|c| match c {
                    '1' => 1,
                    '0' => 0,
                    '-' => -1,
                    other => panic!("bad char {other}"),
                })
                .collect()
        })
        .collect();
    SignedMatrix::from_rows(&rows).unwrap()
}

fn criterion_1() -> Outcome {
    let table = table1();
    let mut count = 0;
    let mut mismatched = vec![];
    for k in 5..=10 {
        count += table[&k].len();
        if admissible_triples(k) != table[&k] {
            mismatched.push(k);
        }
    }
    outcome(
        mismatched.is_empty() && count == 24,
        format!("{count} published triples for k = 5..10, rows differing: {mismatched:?}"),
    )
}

fn criterion_2() -> Outcome {
    let expected = [(5, "[3^4, -2^6]"), (6, "[4^5, -2^10]"), (7, "[5^6, -2^15]")];
    let mut got = vec![];
    let mut pass = true;
    for (n, spec) in expected {
        let g = neg_line_complete(n).unwrap();
        let s = verify_ste_exact(&g).map(|s| s.to_string()).unwrap_or_else(|| "none".into());
        pass &= s == spec;
        got.push(s);
    }
    outcome(pass, got.join(" "))
}

fn criterion_3() -> Outcome {
    let orders: Vec<usize> = (8..=40).step_by(2).collect();
    let checks = check_block_family(&orders, Execution::default());
    let mut failed = vec![];
    for (m, check) in orders.iter().zip(&checks) {
        let ok = match check {
            Ok(c) => c.weighing && c.semi_orthogonal && c.identity && c.multiplicities == Some((*m, 2 * m)),
            Err(_) => false,
        };
        if !ok {
            failed.push(*m);
        }
    }
    outcome(failed.is_empty(), format!("{} orders m = 8..40, failures: {failed:?}", orders.len()))
}

fn criterion_4() -> Outcome {
    let w1 = signs(
        "11000000000011 1-110000000000 001-1100000000 00001-11000000 0000001-110000 000000001-1100
         00000000001-1- 110000000000-- 1---0000000000 001---00000000 00001---000000 0000001---0000
         000000001---00 00000000001--1",
    );
    let w2 = signs(
        "00110000001100 00001100000011 11000011000000 001-0000110000 00001-00001-00 0000001-00001-
         1-0000001-0000 0011000000--00 000011000000-- 110000--000000 001-0000--0000 00001-0000-100
         0000001-0000-1 1-000000-10000",
    );
    let pair = WeighPair::generated(14).unwrap();
    let (a, b) = (pair.w1 == w1, pair.w2 == w2);
    outcome(a && b, format!("W1 matches: {a}, W2 matches: {b} (X residues 0, -1 mod 7)"))
}

fn criterion_5() -> Outcome {
    let found = search_m4_pairs(None);
    let spectra: Vec<String> = found
        .iter()
        .filter_map(|p| p.assemble().ok())
        .filter_map(|g| verify_ste_exact(&g))
        .map(|s| s.to_string())
        .collect();
    let search_ok = !found.is_empty() && spectra.len() == found.len() && spectra.iter().all(|s| s == "[4^4, -2^8]");
    let fig2 = verify_ste_exact(&fixtures::figure2()).map(|s| s.to_string());
    let fig_ok = fig2.as_deref() == Some("[4^4, -2^8]");
    outcome(
        search_ok && fig_ok,
        format!("{} pairs found, all [4^4, -2^8]: {search_ok}; figure 2 fixture: {fig2:?}", found.len()),
    )
}

fn chain_ok(levels: &[SignedGraph], k0: usize, n0: usize, bipartite: bool) -> Result<(), String> {
    for (i, g) in levels.iter().enumerate() {
        let k = k0 + i;
        if weighing_valency(g) != Ok(k) {
            return Err(format!("A^2 != {k}I"));
        }
        if g.order() != n0 << i {
            return Err(format!("order {} at k = {k}", g.order()));
        }
        if !g.is_connected() || g.is_bipartite_ground() != bipartite {
            return Err(format!("structure at k = {k}"));
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let k2 = chain_levels(&ChainSeed::K2, 10).unwrap();
    let pent = chain_levels(&ChainSeed::Pentagon, 10).unwrap();
    let a = chain_ok(&k2[1..], 2, 4, true);
    let b = chain_ok(&pent, 5, 6, false);
    let orders: Vec<usize> = k2[1..].iter().chain(&pent).map(SignedGraph::order).collect();
    outcome(
        a.is_ok() && b.is_ok(),
        format!("k2: {a:?}, pentagon: {b:?}; orders 2^k and 3*2^(k-4): {orders:?}"),
    )
}

fn criterion_7() -> Outcome {
    let solver = JacobiSolver::default();
    let mut graphs: Vec<(String, SignedGraph)> = vec![];
    for n in 5..=7 {
        graphs.push((format!("-L(K{n})"), neg_line_complete(n).unwrap()));
    }
    for m in (8..=40).step_by(2) {
        graphs.push((format!("block8 m={m}"), WeighPair::generated(m).unwrap().assemble().unwrap()));
    }
    graphs.push(("figure 1".into(), fixtures::figure1()));
    graphs.push(("figure 2".into(), fixtures::figure2()));
    for p in search_m4_pairs(None) {
        graphs.push(("m=4 search".into(), p.assemble().unwrap()));
    }
    for k in 2..=9 {
        graphs.push((format!("k2 chain k={k}"), chain(&ChainSeed::K2, k).unwrap()));
    }
    for k in 5..=10 {
        graphs.push((format!("pentagon chain k={k}"), chain(&ChainSeed::Pentagon, k).unwrap()));
    }
    let mut failed = vec![];
    let mut eight = vec![];
    for (name, g) in &graphs {
        match ramanujan_check_with(g, &solver) {
            Ok(r) if r.pass => {
                if name.starts_with("block8") || name.starts_with("m=4") {
                    eight.push(r.lambda_max);
                }
            }
            _ => failed.push(name.clone()),
        }
    }
    let eight_ok = !eight.is_empty() && eight.iter().all(|l| (l - 4.0).abs() < 1e-8 && *l < 2.0 * 7f64.sqrt());
    // the 1024-vertex level: A² = 10I with zero trace forces λ_max = √10 exactly
    let top = chain(&ChainSeed::K2, 10).unwrap();
    let top_ok = weighing_valency(&top) == Ok(10) && 10f64.sqrt() <= 2.0 * 9f64.sqrt() + 1e-9;
    outcome(
        failed.is_empty() && eight_ok && top_ok,
        format!(
            "{} graphs by eigensolver, failures: {failed:?}; weighing family lambda_max = 4 < 2*sqrt(7) = {:.4}: {eight_ok}; \
             k2 chain k=10 (1024 vertices) by exact identity: {top_ok}",
            graphs.len(),
            2.0 * 7f64.sqrt()
        ),
    )
}

fn criterion_8() -> Outcome {
    let solver = JacobiSolver::default();
    let mut graphs = vec![
        ("K5+".to_string(), SignedGraph::complete_positive(5)),
        ("K6+".to_string(), SignedGraph::complete_positive(6)),
        ("K7+".to_string(), SignedGraph::complete_positive(7)),
        ("figure 3".to_string(), fixtures::pentagon()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    while graphs.len() < 24 {
        let n = rng.gen_range(4..=12);
        let k = rng.gen_range(2..n);
        if let Some(g) = random_regular(n, k, &mut rng) {
            graphs.push((format!("random n={n} k={k}"), g));
        }
    }
    let mut failed = vec![];
    let mut worst = 0.0f64;
    for (name, g) in &graphs {
        match verify_line_spectrum(g, &solver) {
            Ok(r) if r.pass => worst = worst.max(r.max_error),
            _ => failed.push(name.clone()),
        }
    }
    outcome(
        failed.is_empty(),
        format!("{} graphs (20 random), max error {worst:.2e}, failures: {failed:?}", graphs.len()),
    )
}

fn criterion_9() -> Outcome {
    let (four, minus_two) = (QExt::from_int(4), QExt::from_int(-2));
    let mut parts = vec![];
    let mut pass = true;
    for m in [8, 14] {
        let g = WeighPair::generated(m).unwrap().assemble().unwrap();
        let x: Vec<usize> = (0..m).collect();
        let y: Vec<usize> = (m..3 * m).collect();
        let ok = verify_partition(&g, &x, &y, &four, &minus_two) == Ok(true);
        pass &= ok;
        parts.push(format!("m={m}: {ok}"));
    }
    let (r5, m5) = (QExt::sqrt(5), -QExt::sqrt(5));
    let found = find_partition(&fixtures::pentagon(), &r5, &m5, 3, 20, Execution::default());
    let sqrt5 = found.as_ref().map(|p| p.verify(&r5, &m5) == Ok(true)).unwrap_or(false);
    pass &= sqrt5;
    parts.push(format!("figure 3 over Q(sqrt 5): X = {:?}", found.map(|p| p.x)));
    outcome(pass, parts.join(", "))
}

fn random_ste_sample(rng: &mut ChaCha8Rng) -> SignedGraph {
    let seeds = [
        SignedGraph::complete_positive(2),
        neg_line_complete(4).unwrap(),
        fixtures::pentagon(),
        fixtures::figure1(),
        chain(&ChainSeed::K2, 2).unwrap(),
        chain(&ChainSeed::K2, 3).unwrap(),
        SignedGraph::complete_positive(6),
    ];
    let g = &seeds[rng.gen_range(0..seeds.len())];
    let g = if rng.gen_bool(0.5) { g.negate() } else { g.clone() };
    let g = g.switch(&random_subset(g.order(), rng)).unwrap();
    g.permute(&random_permutation(g.order(), rng)).unwrap()
}

fn criterion_10() -> Outcome {
    let solver = JacobiSolver::default();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut disagreements = 0;
    let mut stes = 0;
    for i in 0..200 {
        let g = match i % 3 {
            0 => random_gnp(rng.gen_range(1..=10), rng.gen_range(0.1..0.9), &mut rng),
            1 => loop {
                let n = rng.gen_range(2..=10);
                if let Some(g) = random_regular(n, rng.gen_range(0..n), &mut rng) {
                    break g;
                }
            },
            _ => random_ste_sample(&mut rng),
        };
        let exact = verify_ste_exact(&g).is_some();
        let values = solver.eigenvalues(g.adjacency()).unwrap();
        let float = cluster(&values, 1e-6).len() == 2;
        stes += exact as usize;
        disagreements += (exact != float) as usize;
    }
    outcome(
        disagreements == 0,
        format!("200 graphs, {stes} STEs, {disagreements} disagreements"),
    )
}

fn criterion_11() -> Outcome {
    let pair = WeighPair::generated(8).unwrap();
    let (k, weight) = kronecker(&pair.w1, &pair.w2).unwrap();
    let exact = ste_core::spectra::is_weighing(&k, 16);
    outcome(
        weight == 16 && exact && k.rows() == 64,
        format!("W1 (x) W2 for m = 8: order {}, weight {weight}, KK^t = 16I: {exact}", k.rows()),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("admissible parameter table", criterion_1),
        ("line-graph family", criterion_2),
        ("weighing construction", criterion_3),
        ("displayed m = 14 matrices", criterion_4),
        ("m = 4 search and figure 2", criterion_5),
        ("doubling chains", criterion_6),
        ("Ramanujan bound", criterion_7),
        ("line-graph spectrum theorem", criterion_8),
        ("star complements", criterion_9),
        ("exact vs float oracle", criterion_10),
        ("Kronecker weight", criterion_11),
    ];
    let mut failed = vec![];
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!(
            "criterion {:>2} {}: {} ({})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
        if !o.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

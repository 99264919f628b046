use std::fs;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use ste_core::doubling::{chain, ChainSeed, ChainSpec};
use ste_core::io::{emit, parse_graph, parse_signed_matrix, Format};
use ste_core::linegraph::{line_graph, neg_line_complete, verify_line_spectrum};
use ste_core::params::admissible_triples;
use ste_core::params::feasible_orders;
use ste_core::spectra::report::SteReport;
use ste_core::spectra::{
    cluster, fsrsg_parameters, ramanujan_check_with, verify_graph, verify_ste_exact, weighing_weight, JacobiSolver,
};
use ste_core::starcomp::{StarPartition, StarReport};
use ste_core::weighing::{search_m4_pairs, WeighPair, XConvention};
use ste_core::{fixtures, Error, QExt, SignedGraph};

use crate::{Cli, Command, Construct, OutFormat, Search, Verify, XConv};

/// Largest order `construct chain` will build.
const CHAIN_SIZE_GUARD: usize = 1 << 12;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Serialize)]
struct RunReport {
    command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_digest: Option<String>,
    pass: bool,
    outcome: Value,
    elapsed_ms: f64,
}

struct Run {
    started: Instant,
    digest: Option<String>,
}

/// What a command produced: an optional graph for stdout and the checks.
struct Output {
    graph: Option<String>,
    pass: bool,
    outcome: Value,
}

pub fn run(cli: &Cli) -> u8 {
    let mut ctx = Run {
        started: Instant::now(),
        digest: None,
    };
    let result = match &cli.command {
        Command::Params { k, n_max, json } => return params(k, *n_max, *json),
        Command::Construct(c) => construct(cli, c),
        Command::Verify(v) => verify(cli, v, &mut ctx),
        Command::Search(Search::Block8M4 { limit }) => search(cli, *limit),
        Command::Export { graph } => read_graph(graph, &mut ctx).map(|g| Output {
            graph: Some(emit(&g, format(cli), cli.global.one_indexed)),
            pass: true,
            outcome: json!({ "n": g.order(), "edges": g.edge_count() }),
        }),
        Command::Fixture { name } => fixtures::by_name(name)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown fixture '{name}'")))
            .map(|g| Output {
                outcome: json!(verify_graph(&g, &JacobiSolver::default())),
                graph: Some(emit(&g, format(cli), cli.global.one_indexed)),
                pass: true,
            }),
    };
    match result {
        Ok(out) => {
            let report = RunReport {
                command: std::env::args().skip(1).collect(),
                input_digest: ctx.digest,
                pass: out.pass,
                outcome: out.outcome,
                elapsed_ms: ctx.started.elapsed().as_secs_f64() * 1e3,
            };
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            match out.graph {
                Some(graph) => {
                    print!("{graph}");
                    eprintln!("{text}");
                }
                None => println!("{text}"),
            }
            if out.pass {
                0
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn format(cli: &Cli) -> Format {
    match cli.global.format {
        OutFormat::Json => Format::Json,
        OutFormat::Matrix => Format::Matrix,
        OutFormat::Dot => Format::Dot,
    }
}

fn read_text(path: &Path, ctx: &mut Run) -> Result<String, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    ctx.digest = Some(format!("sha256:{:x}", Sha256::digest(text.as_bytes())));
    Ok(text)
}

fn read_graph(path: &Path, ctx: &mut Run) -> Result<SignedGraph, Error> {
    parse_graph(&read_text(path, ctx)?)
}

fn params(ks: &[i64], n_max: usize, as_json: bool) -> u8 {
    if let Some(bad) = ks.iter().find(|&&k| k < 1) {
        eprintln!("error: valency must be at least 1, got {bad}");
        return EXIT_USAGE;
    }
    let mut rows = vec![];
    let mut text = String::new();
    for &k in ks {
        for t in admissible_triples(k) {
            let orders = if n_max > 0 { feasible_orders(&t, n_max) } else { vec![] };
            text.push_str(&format!("k={k:<3} {:<28} {:?}", t.to_string(), t.kind));
            if n_max > 0 {
                text.push_str(&format!("  n in {orders:?}"));
            }
            text.push('\n');
            rows.push(json!({
                "k": k,
                "t": t.t,
                "lambda1": t.lambda1.to_string(),
                "lambda2": t.lambda2.to_string(),
                "type": format!("{:?}", t.kind),
                "feasible_orders": orders,
            }));
        }
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
    } else {
        print!("{text}");
    }
    0
}

/// Exact spectrum plus, when regular with `k ≥ 2`, the Ramanujan bound.
fn check_constructed(g: &SignedGraph, cli: &Cli) -> (bool, Value) {
    let solver = JacobiSolver::default();
    let exact = verify_ste_exact(g);
    let ramanujan = match g.regularity() {
        Some(k) if k >= 2 => ramanujan_check_with(g, &solver).ok(),
        _ => None,
    };
    let float_clusters = solver
        .eigenvalues(g.adjacency())
        .map(|v| cluster(&v, cli.global.tolerance).len())
        .ok();
    let pass = exact.is_some() && float_clusters == Some(2);
    let outcome = json!({
        "n": g.order(),
        "k": g.regularity(),
        "ste": exact.as_ref().map(SteReport::from),
        "spectrum": exact.map(|s| s.to_string()),
        "float_distinct_eigenvalues": float_clusters,
        "ramanujan": ramanujan,
    });
    (pass, outcome)
}

fn construct(cli: &Cli, c: &Construct) -> Result<Output, Error> {
    let (g, mut extra) = match c {
        Construct::LineComplete { n, negate } => {
            let g = if *negate {
                neg_line_complete(*n)?
            } else if *n >= 3 {
                line_graph(&SignedGraph::complete_positive(*n))?
            } else {
                return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
            };
            (g, json!({ "family": "line-complete", "negate": negate }))
        }
        Construct::Block8 { m, x_convention } => {
            let pair = if *m == 4 {
                search_m4_pairs(None)
                    .into_iter()
                    .next()
                    .ok_or_else(|| Error::InvalidArgument("no order-4 pair found".into()))?
            } else {
                let conv = match x_convention {
                    XConv::Displayed => XConvention::Displayed,
                    XConv::Stated => XConvention::Stated,
                };
                WeighPair::generated_with(*m, conv)?
            };
            let g = match pair.assemble() {
                Ok(g) => g,
                // a pair that is not semi-orthogonal is a verification failure
                Err(e @ Error::BlockEntry { .. }) => {
                    return Ok(Output {
                        graph: None,
                        pass: false,
                        outcome: json!({ "family": "block8", "m": m, "error": e.to_string() }),
                    })
                }
                Err(e) => return Err(e),
            };
            (g, json!({ "family": "block8", "m": m }))
        }
        Construct::Chain { seed, k } => {
            let seed = parse_seed(seed, cli)?;
            let spec = ChainSpec::new(seed.clone(), *k)?;
            if spec.order() > CHAIN_SIZE_GUARD {
                return Err(Error::SizeGuard {
                    order: spec.order(),
                    limit: CHAIN_SIZE_GUARD,
                });
            }
            let g = chain(&seed, *k)?;
            let a = g.adjacency();
            let weighing = a.mul(a)?.is_scalar(*k as i64);
            (
                g,
                json!({ "family": "chain", "seed": seed.to_string(), "a_squared_is_kI": weighing }),
            )
        }
    };
    let (mut pass, checks) = check_constructed(&g, cli);
    if let Some(w) = extra.get("a_squared_is_kI").and_then(Value::as_bool) {
        pass &= w;
    }
    extra["checks"] = checks;
    Ok(Output {
        graph: Some(emit(&g, format(cli), cli.global.one_indexed)),
        pass,
        outcome: extra,
    })
}

fn parse_seed(seed: &str, cli: &Cli) -> Result<ChainSeed, Error> {
    let path = match seed.strip_prefix("file:") {
        Some(p) => p.into(),
        None if seed == "file" => cli
            .global
            .seed_file
            .clone()
            .ok_or_else(|| Error::InvalidArgument("--seed file needs --seed-file".into()))?,
        None => return seed.parse(),
    };
    let mut ctx = Run {
        started: Instant::now(),
        digest: None,
    };
    Ok(ChainSeed::Custom(read_graph(&path, &mut ctx)?))
}

/// `3`, `-2`, or `t,b` for `(t ± √|b|)/2` with the sign of `b`.
pub fn parse_mu(text: &str) -> Result<QExt, Error> {
    let bad = || Error::InvalidArgument(format!("cannot parse eigenvalue '{text}'; use an integer or t,b"));
    match text.split_once(',') {
        None => text.trim().parse::<i64>().map(QExt::from_int).map_err(|_| bad()),
        Some((t, b)) => {
            let t: i64 = t.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            Ok(QExt::half_surd(t, b.signum(), b.unsigned_abs()))
        }
    }
}

fn parse_set(text: &str, one_indexed: bool) -> Result<Vec<usize>, Error> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let v: usize = s
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad vertex '{s}'")))?;
            if one_indexed {
                v.checked_sub(1)
                    .ok_or_else(|| Error::InvalidArgument("vertex 0 with --one-indexed".into()))
            } else {
                Ok(v)
            }
        })
        .collect()
}

fn verify(cli: &Cli, v: &Verify, ctx: &mut Run) -> Result<Output, Error> {
    let solver = JacobiSolver::default();
    let report = |pass: bool, outcome: Value| Ok(Output { graph: None, pass, outcome });
    match v {
        Verify::Ste { graph } => {
            let g = read_graph(graph, ctx)?;
            let exact = verify_ste_exact(&g);
            let fsrsg = fsrsg_parameters(&g);
            report(
                exact.is_some(),
                json!({
                    "n": g.order(),
                    "k": g.regularity(),
                    "ste": exact.as_ref().map(SteReport::from),
                    "spectrum": exact.map(|s| s.to_string()),
                    "fsrsg": fsrsg,
                }),
            )
        }
        Verify::Weighing { matrix, weight } => {
            let m = parse_signed_matrix(&read_text(matrix, ctx)?)?;
            let found = weighing_weight(&m);
            let pass = match weight {
                Some(w) => found == Some(*w),
                None => found.is_some(),
            };
            report(pass, json!({ "order": m.rows(), "weight": found, "expected_weight": weight }))
        }
        Verify::Ramanujan { graph } => {
            let g = read_graph(graph, ctx)?;
            match ramanujan_check_with(&g, &solver) {
                Ok(r) => report(r.pass, json!(r)),
                Err(e) => report(false, json!({ "error": e.to_string() })),
            }
        }
        Verify::Star { graph, mu, set } => {
            let g = read_graph(graph, ctx)?;
            let mu_q = parse_mu(mu)?;
            let x = parse_set(set, cli.global.one_indexed)?;
            let p = StarPartition::new(&g, &x)?;
            let (pass, error) = match p.x_is_star_set(&mu_q) {
                Ok(ok) => (ok, None),
                Err(e @ Error::SingularBlock(_)) => (false, Some(e.to_string())),
                Err(e) => return Err(e),
            };
            report(
                pass,
                json!(StarReport {
                    x: p.x,
                    y: p.y,
                    lambda1: mu_q.to_string(),
                    lambda2: None,
                    pass,
                    error,
                }),
            )
        }
        Verify::Partition { graph, x } => {
            let g = read_graph(graph, ctx)?;
            let x = parse_set(x, cli.global.one_indexed)?;
            let p = StarPartition::new(&g, &x)?;
            let Some(s) = verify_ste_exact(&g) else {
                return report(false, json!({ "error": "not a two-eigenvalue graph" }));
            };
            let (l1, l2) = (s.lambda1().to_qext(), s.lambda2().to_qext());
            let (pass, error) = match p.verify(&l1, &l2) {
                Ok(ok) => (ok, None),
                Err(e @ Error::SingularBlock(_)) => (false, Some(e.to_string())),
                Err(e) => return Err(e),
            };
            report(
                pass,
                json!(StarReport {
                    x: p.x,
                    y: p.y,
                    lambda1: l1.to_string(),
                    lambda2: Some(l2.to_string()),
                    pass,
                    error,
                }),
            )
        }
        Verify::LineSpectrum { graph } => {
            let g = read_graph(graph, ctx)?;
            match verify_line_spectrum(&g, &solver) {
                Ok(r) => report(r.pass, json!(r)),
                Err(e) => report(false, json!({ "error": e.to_string() })),
            }
        }
    }
}

fn search(cli: &Cli, limit: Option<usize>) -> Result<Output, Error> {
    let found = ste_core::weighing::search_m4_pairs_with(limit, Default::default());
    let pairs: Vec<Value> = found
        .iter()
        .map(|p| json!({ "w1": p.w1.to_string(), "w2": p.w2.to_string() }))
        .collect();
    let Some(first) = found.first() else {
        return Ok(Output {
            graph: None,
            pass: false,
            outcome: json!({ "pairs": pairs, "limit": limit }),
        });
    };
    let g = first.assemble()?;
    let (pass, checks) = check_constructed(&g, cli);
    Ok(Output {
        graph: Some(emit(&g, format(cli), cli.global.one_indexed)),
        pass,
        outcome: json!({ "pairs": pairs, "limit": limit, "checks": checks }),
    })
}

//! Command-line front end: ingest edge-list graphs, run a chosen or
//! auto-selected decomposition theorem, emit JSON certificates and DOT
//! drawings, verify certificates, and generate test graphs.

mod dot;

use clap::{Parser, Subcommand, ValueEnum};
use dstar_core::certificate::{parse_edge_list, write_edge_list, Certificate};
use dstar_core::decompose;
use dstar_core::error::Error;
use dstar_core::factorize::{one_factorization_general, Matching};
use dstar_core::generate;
use dstar_core::graph::Graph;
use dstar_core::matching::{
    find_perfect_matching, find_two_disjoint_perfect_matchings, PairSearchConfig,
};
use dstar_core::star::{verify_decomposition, Decomposition};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dstar", version, about = "Double-star decompositions of regular graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Bipartite,
    BipartiteDivisible,
    BipartiteTwoSizes,
    DegreeDivisible,
    Even,
    EvenDivisible,
    FourShape,
    TwoMatchings,
    CommonNeighbor,
    TriangleFree,
    OneFactorable,
    Auto,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decompose a graph and write a certificate.
    Decompose {
        /// Edge-list input file.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Theorem::Auto)]
        theorem: Theorem,
        /// First shape, pendant count at the first center.
        #[arg(long)]
        k1: usize,
        /// First shape, pendant count at the second center.
        #[arg(long)]
        k2: usize,
        /// Second shape (bipartite-two-sizes only).
        #[arg(long)]
        k1b: Option<usize>,
        #[arg(long)]
        k2b: Option<usize>,
        /// Reserved for randomized strategies; accepted for reproducible
        /// invocations. The implemented pipelines are deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Certificate output path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// DOT drawing output path.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Explicit matchings as edge-index lists, one matching per line
        /// (M for common-neighbor; M1, M2 for two-matchings; all factors
        /// for one-factorable).
        #[arg(long)]
        matching_file: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Write a generated graph as an edge-list file.
    Generate {
        /// complete | complete-bipartite | cycle | circulant | petersen |
        /// random-regular | random-regular-bipartite
        family: String,
        /// Family parameters (e.g. `complete 7`, `random-regular 12 4`,
        /// `circulant 10 1 2 5`).
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print structural facts about a graph.
    Info { graph: PathBuf },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Decompose {
            input,
            theorem,
            k1,
            k2,
            k1b,
            k2b,
            seed: _,
            out,
            dot,
            matching_file,
        } => cmd_decompose(&input, theorem, k1, k2, k1b, k2b, out.as_deref(), dot.as_deref(), matching_file.as_deref()),
        Cmd::Verify { graph, certificate } => cmd_verify(&graph, &certificate),
        Cmd::Generate { family, params, seed, out } => {
            cmd_generate(&family, &params, seed, out.as_deref())
        }
        Cmd::Info { graph } => cmd_info(&graph),
    }
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn no_theorem(msg: &str) -> ExitCode {
    eprintln!("no applicable theorem: {msg}");
    ExitCode::from(2)
}

/// Hypothesis failures earn exit 2 ("this theorem does not apply here");
/// anything else is a hard error (exit 1).
fn is_hypothesis_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::NotRegular
            | Error::NotBipartite
            | Error::NotEvenRegular
            | Error::NotOddRegular
            | Error::BadShape
            | Error::DivisibilityViolated
            | Error::NoValidSplit
            | Error::DegreeNotDivisible(_)
            | Error::MatchingsNotDisjointPerfect
            | Error::NotPerfectMatching
            | Error::NoPerfectMatching
            | Error::No2FactorFound
            | Error::NotTriangleFree
            | Error::CommonNeighborBoundViolated(_, _)
            | Error::InvalidSuppliedFactorization
    )
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_edge_list(&text).map_err(|e| e.to_string())
}

fn read_matchings(g: &Graph, path: &Path) -> Result<Vec<Matching>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut out = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let ids: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let ids = ids.map_err(|e| format!("matching file: {e}"))?;
        out.push(Matching::new(g, ids).map_err(|e| format!("matching file: {e}"))?);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_decompose(
    input: &Path,
    theorem: Theorem,
    k1: usize,
    k2: usize,
    k1b: Option<usize>,
    k2b: Option<usize>,
    out: Option<&Path>,
    dot_path: Option<&Path>,
    matching_file: Option<&Path>,
) -> ExitCode {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let matchings = match matching_file.map(|p| read_matchings(&g, p)).transpose() {
        Ok(m) => m,
        Err(e) => return fail(&e),
    };

    let result = match theorem {
        Theorem::Auto => return auto_decompose(&g, k1, k2, out, dot_path),
        Theorem::Bipartite => decompose::decompose_regular_bipartite(&g, k1, k2),
        Theorem::BipartiteDivisible => decompose::decompose_bipartite_divisible(&g, k1, k2),
        Theorem::BipartiteTwoSizes => match (k1b, k2b) {
            (Some(l1), Some(l2)) => {
                decompose::decompose_bipartite_two_sizes(&g, (k1, k2), (l1, l2))
            }
            _ => return fail("--k1b and --k2b are required for bipartite-two-sizes"),
        },
        Theorem::DegreeDivisible => decompose::decompose_bipartite_degree_divisible(&g, k1, k2),
        Theorem::Even => decompose::decompose_even_regular(&g, k1, k2),
        Theorem::EvenDivisible => decompose::decompose_even_divisible(&g, k1, k2),
        Theorem::FourShape => decompose::decompose_odd_four_shapes(&g, k1, k2),
        Theorem::TwoMatchings => {
            let pair = match &matchings {
                Some(ms) if ms.len() >= 2 => Some((ms[0].clone(), ms[1].clone())),
                Some(_) => return fail("two-matchings needs two lines in --matching-file"),
                None => find_two_disjoint_perfect_matchings(&g, PairSearchConfig::default()).pair,
            };
            match pair {
                Some((m1, m2)) => decompose::decompose_odd_two_matchings(&g, &m1, &m2, k1, k2),
                None => return no_theorem("no two disjoint perfect matchings found"),
            }
        }
        Theorem::CommonNeighbor => {
            let m = match &matchings {
                Some(ms) if !ms.is_empty() => Some(ms[0].clone()),
                _ => find_perfect_matching(&g),
            };
            match m {
                Some(m) => decompose::decompose_odd_common_neighbor(&g, &m, k1, k2),
                None => return no_theorem("no perfect matching found"),
            }
        }
        Theorem::TriangleFree => decompose::decompose_odd_triangle_free(&g, k1, k2),
        Theorem::OneFactorable => {
            let factors = match &matchings {
                Some(ms) => Some(ms.clone()),
                None => match one_factorization_general(&g, None, 1 << 22) {
                    Ok(f) => f,
                    Err(e) => return fail(&e.to_string()),
                },
            };
            match factors {
                Some(f) => decompose::decompose_odd_one_factorable(&g, &f, k1, k2),
                None => return no_theorem("no 1-factorization found"),
            }
        }
    };

    match result {
        Ok(d) => emit(&g, &d, out, dot_path),
        Err(e) if is_hypothesis_failure(&e) => no_theorem(&e.to_string()),
        Err(e) => fail(&e.to_string()),
    }
}

/// Probe order: cheapest hypotheses first. Each probe passes the user's
/// shape through; a probe that fails its hypothesis moves on.
fn auto_decompose(
    g: &Graph,
    k1: usize,
    k2: usize,
    out: Option<&Path>,
    dot_path: Option<&Path>,
) -> ExitCode {
    type Probe<'a> = (&'a str, Box<dyn Fn() -> Result<Decomposition, Error> + 'a>);
    let probes: Vec<Probe> = vec![
        ("bipartite", Box::new(|| decompose::decompose_regular_bipartite(g, k1, k2))),
        ("even", Box::new(|| decompose::decompose_even_regular(g, k1, k2))),
        (
            "two-matchings",
            Box::new(|| {
                // Gate the matching search on the cheap hypotheses.
                let r = g.is_regular().ok_or(Error::NotOddRegular)?;
                if r % 2 == 0 || r < 3 {
                    return Err(Error::NotOddRegular);
                }
                if k1 + k2 != (r - 1) / 2 {
                    return Err(Error::BadShape);
                }
                match find_two_disjoint_perfect_matchings(g, PairSearchConfig::default()).pair {
                    Some((m1, m2)) => decompose::decompose_odd_two_matchings(g, &m1, &m2, k1, k2),
                    None => Err(Error::MatchingsNotDisjointPerfect),
                }
            }),
        ),
        (
            "common-neighbor",
            Box::new(|| match find_perfect_matching(g) {
                Some(m) => decompose::decompose_odd_common_neighbor(g, &m, k1, k2),
                None => Err(Error::NoPerfectMatching),
            }),
        ),
        ("four-shape", Box::new(|| decompose::decompose_odd_four_shapes(g, k1, k2))),
    ];
    for (name, probe) in probes {
        match probe() {
            Ok(d) => {
                println!("auto: {name} applied");
                return emit(g, &d, out, dot_path);
            }
            Err(e) if is_hypothesis_failure(&e) => continue,
            Err(e) => return fail(&e.to_string()),
        }
    }
    no_theorem("no probe's hypotheses hold for this graph and shape")
}

fn emit(g: &Graph, d: &Decomposition, out: Option<&Path>, dot_path: Option<&Path>) -> ExitCode {
    let report = verify_decomposition(g, d);
    if !report.valid {
        return fail("internal: constructed decomposition failed verification");
    }
    let cert = Certificate::from_decomposition(g, d);
    let json = cert.to_json();
    if let Some(p) = out {
        if let Err(e) = std::fs::write(p, json + "\n") {
            return fail(&format!("{}: {e}", p.display()));
        }
    } else {
        println!("{json}");
    }
    if let Some(p) = dot_path {
        if let Err(e) = std::fs::write(p, dot::render(g, d)) {
            return fail(&format!("{}: {e}", p.display()));
        }
    }
    let mut counts: Vec<((usize, usize), usize)> = d
        .allowed_shapes
        .iter()
        .map(|&s| (s, d.count_of_shape(s)))
        .filter(|&(_, c)| c > 0)
        .collect();
    counts.sort();
    let summary: Vec<String> = counts
        .iter()
        .map(|((a, b), c)| format!("{c}x S_{{{a},{b}}}"))
        .collect();
    println!("{}: {} stars ({})", d.source, d.stars.len(), summary.join(", "));
    ExitCode::SUCCESS
}

fn cmd_verify(graph: &Path, certificate: &Path) -> ExitCode {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let text = match std::fs::read_to_string(certificate) {
        Ok(t) => t,
        Err(e) => return fail(&format!("{}: {e}", certificate.display())),
    };
    let cert = match Certificate::from_json(&text) {
        Ok(c) => c,
        Err(e) => return fail(&e.to_string()),
    };
    if !cert.matches_graph(&g) {
        eprintln!("invalid: certificate was issued for a different graph (n/m/hash mismatch)");
        return ExitCode::from(3);
    }
    let d = cert.to_decomposition();
    let report = verify_decomposition(&g, &d);
    if report.valid {
        println!("valid: {} stars partition all {} edges", d.stars.len(), g.edge_count());
        ExitCode::SUCCESS
    } else {
        for v in &report.violations {
            match v.star {
                Some(i) => eprintln!("invalid: star {i}: {}", v.reason),
                None => eprintln!("invalid: {}", v.reason),
            }
        }
        ExitCode::from(3)
    }
}

fn cmd_generate(family: &str, params: &[usize], seed: u64, out: Option<&Path>) -> ExitCode {
    let need = |k: usize| -> Result<(), String> {
        if params.len() == k {
            Ok(())
        } else {
            Err(format!("family {family} takes {k} parameter(s), got {}", params.len()))
        }
    };
    let built: Result<Graph, String> = (|| {
        match family {
            "complete" => {
                need(1)?;
                Ok(generate::complete_graph(params[0]))
            }
            "complete-bipartite" => {
                need(2)?;
                Ok(generate::complete_bipartite(params[0], params[1]))
            }
            "cycle" => {
                need(1)?;
                Ok(generate::cycle(params[0]))
            }
            "circulant" => {
                if params.len() < 2 {
                    return Err("circulant takes n followed by offsets".into());
                }
                generate::circulant(params[0], &params[1..]).map_err(|e| e.to_string())
            }
            "petersen" => {
                need(0)?;
                Ok(generate::petersen())
            }
            "random-regular" => {
                need(2)?;
                generate::random_regular(params[0], params[1], seed).map_err(|e| e.to_string())
            }
            "random-regular-bipartite" => {
                need(2)?;
                generate::random_regular_bipartite(params[0], params[1], seed)
                    .map(|(g, _)| g)
                    .map_err(|e| e.to_string())
            }
            _ => Err(format!("unknown family: {family}")),
        }
    })();
    let g = match built {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let text = write_edge_list(&g);
    match out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                return fail(&format!("{}: {e}", p.display()));
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}

fn cmd_info(graph: &Path) -> ExitCode {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let reg = match g.is_regular() {
        Some(r) => format!("{r}-regular"),
        None => "irregular".to_string(),
    };
    let bip = if g.bipartition().is_some() { "bipartite" } else { "not bipartite" };
    let tri = if g.is_triangle_free() { "triangle-free" } else { "not triangle-free" };
    let pm = if find_perfect_matching(&g).is_some() {
        "has perfect matching"
    } else {
        "no perfect matching"
    };
    println!("n={} m={}", g.vertex_count(), g.edge_count());
    println!("{reg}, {bip}, {tri}, {pm}");
    ExitCode::SUCCESS
}

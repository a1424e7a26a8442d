//! Command-line definitions and dispatch.
//!
//! Every command produces a [`Report`] that can be rendered in the formats
//! it supports. Payloads are deterministic; timings and search statistics go
//! to [`Outcome::stats`], which the binary prints on stderr.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddeven_core::goldbach::{
    self, check_kmn_structure, consecutive_independent_set, count_kronecker_pairs, degree_inequality_on,
    degree_profile, extract_prime_witness, goldbach_partitions, hamiltonian_cycle_with, hamiltonian_path_with,
    mod6_lemma_scan, prime_count_in, verify_goldbach_connectivity, verify_maillet, verify_positive_in_degree,
    GoldbachGraph, HamiltonianResult, PathKind, SearchConfig, SearchStatus, Variant,
};
use oddeven_core::oddeven::{
    check_con1, check_con2, default_unidirectionality_bound, export_adjacency, unidirectionality_scan,
    MatrixLayout,
};
use oddeven_core::{
    arithmetic_odd_set_from, build_oriented_odd_even, embed_oriented_bipartite, odd_primes_upto, verify_embedding,
    IndexStart, Indexing, OddSet, PrimeSieve, Sdbg,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::appendix::{self, APPENDIX};
use crate::export;
use crate::interchange::{self, EmbeddingDocument};
use crate::scan::{parallel_map, worker_count};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "oddeven", version, about = "Odd-even graphs, bitournaments and the Goldbach graph")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Upper bound on worker threads for range scans.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count (and optionally list) the primes up to a bound.
    Sieve {
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        list: bool,
    },
    /// Bitournament predicates and monotone labelings.
    #[command(subcommand)]
    Bitournament(BitournamentCommand),
    /// Oriented odd-even graphs.
    #[command(subcommand)]
    Oddeven(OddevenCommand),
    /// Represent an oriented bipartite graph as an oriented odd-even graph.
    Embed {
        file: PathBuf,
        /// X vertices in b-index order (default: input order).
        #[arg(long, value_delimiter = ',')]
        x_order: Option<Vec<String>>,
        /// Y vertices in b-index order (default: input order).
        #[arg(long, value_delimiter = ',')]
        y_order: Option<Vec<String>>,
    },
    /// The Goldbach graph and its scans.
    #[command(subcommand)]
    Goldbach(GoldbachCommand),
    /// Hamiltonian cycle (or path) of the starred Goldbach graph on 2..2n.
    Hamiltonian(HamiltonianArgs),
    /// The bundled table of Hamiltonian cycles.
    #[command(subcommand)]
    Appendix(AppendixCommand),
}

#[derive(Debug, Subcommand)]
pub enum BitournamentCommand {
    /// Evaluate the five equivalent characterizations.
    Check { file: PathBuf },
    /// Compute a monotone labeling, if one exists.
    Label { file: PathBuf },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct OddSetArgs {
    /// Explicit odd set.
    #[arg(long, value_delimiter = ',')]
    odd: Option<Vec<u64>>,
    /// Odd primes up to this bound.
    #[arg(long)]
    primes: Option<u64>,
    /// Progression `a*k + b`, given as `a,b`.
    #[arg(long, value_delimiter = ',', num_args = 1)]
    progression: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct OddSetOptions {
    #[command(flatten)]
    set: OddSetArgs,
    /// Add 1 to a prime odd set.
    #[arg(long, requires = "primes")]
    with_one: bool,
    /// Bound for a progression (default: large enough for the vertices).
    #[arg(long, requires = "progression")]
    odd_bound: Option<u64>,
    /// First index of a progression.
    #[arg(long, value_enum, default_value_t = Start::One)]
    start: Start,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Start {
    Zero,
    One,
}

impl From<Start> for IndexStart {
    fn from(s: Start) -> Self {
        match s {
            Start::Zero => IndexStart::Zero,
            Start::One => IndexStart::One,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    Blocked,
    Flat,
}

#[derive(Debug, Subcommand)]
pub enum OddevenCommand {
    /// Build the oriented odd-even graph on a vertex set.
    Build {
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<u64>,
        #[command(flatten)]
        odd: OddSetOptions,
        /// Matrix layout for CSV output.
        #[arg(long, value_enum, default_value_t = Layout::Blocked)]
        layout: Layout,
    },
    /// Necessary condition for connectivity: |O_rel| > sqrt(2|A|).
    Con1 {
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<u64>,
        #[command(flatten)]
        odd: OddSetOptions,
    },
    /// Sufficient condition on {0, 2, ..., 2(m-1)}: |O_rel| > 3m/4.
    Con2 {
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        odd: OddSetOptions,
    },
    /// Unidirectionality of the graph over the progression a*k + b.
    Uni {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        /// Largest vertex (default 10a + 4b).
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, value_enum, default_value_t = Start::One)]
        start: Start,
    },
}

#[derive(Debug, Subcommand)]
pub enum GoldbachCommand {
    /// Connectivity of G_n for 7 <= n <= max.
    Connect {
        #[arg(long)]
        max: u64,
    },
    /// In-, out- and total degrees of every vertex of G_n.
    Degrees {
        #[arg(long)]
        n: u64,
    },
    /// Goldbach partitions of an even number.
    Partitions {
        #[arg(long)]
        v: u64,
    },
    /// Every even 6 <= v <= max has a Goldbach partition.
    Indegree {
        #[arg(long)]
        max: u64,
    },
    /// Every even v <= max is a difference of two odd primes below a bound.
    Maillet {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Prime pairs (p, p + gap): the out-neighbours of vertex `gap`.
    Kronecker {
        #[arg(long)]
        gap: u64,
        #[arg(long)]
        n: u64,
    },
    /// pi(n) = d_n(0) + 1, for one n or for every 2..=n.
    Pi {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        all: bool,
    },
    /// Degree-sum inequality, for one (r, n, m) or swept over 2 <= 2r <= SWEEP.
    Inequality {
        #[arg(long, required_unless_present = "sweep")]
        r: Option<u64>,
        #[arg(long, required_unless_present = "sweep")]
        n: Option<u64>,
        #[arg(long, default_value_t = 0)]
        m: u64,
        #[arg(long, conflicts_with_all = ["r", "n"])]
        sweep: Option<u64>,
    },
    /// Complete bipartite subgraphs K_{s,t} of G_n and their mod-6 shape.
    Kmn {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Also check both mod-6 lemmas on every edge of G_n.
        #[arg(long)]
        lemmas: bool,
    },
    /// k consecutive even numbers forming an independent set.
    Indep {
        #[arg(long)]
        k: usize,
    },
    /// Export G_n.
    Graph {
        #[arg(long)]
        n: u64,
        /// Vertices 2..2n with 1 added to the odd set.
        #[arg(long)]
        starred: bool,
    },
}

#[derive(Debug, Args)]
pub struct HamiltonianArgs {
    #[arg(long, required_unless_present = "sweep")]
    n: Option<u64>,
    /// Search for a Hamiltonian path instead of a cycle.
    #[arg(long)]
    path: bool,
    /// Run every n from 4 up to this value (even n only without --path).
    #[arg(long, conflicts_with = "n")]
    sweep: Option<u64>,
    /// Give up after this many search nodes.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum AppendixCommand {
    /// Check every row of the table.
    Validate {
        /// Validate this file instead of the bundled table.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

/// A finished command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub document: String,
    pub stats: Vec<String>,
    pub violation: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.violation {
            crate::exit::VIOLATION
        } else {
            crate::exit::OK
        }
    }
}

#[derive(Default)]
struct Report {
    text: String,
    json: Value,
    csv: Option<String>,
    dot: Option<String>,
    violation: bool,
    stats: Vec<String>,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ..Report::default()
        }
    }

    fn render(self, format: Format) -> Result<Outcome, Error> {
        let unsupported = || Error::Usage(format!("this command has no {format:?} output").to_lowercase());
        let document = match format {
            Format::Text => self.text,
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.ok_or_else(unsupported)?,
            Format::Dot => self.dot.ok_or_else(unsupported)?,
        };
        Ok(Outcome {
            document,
            stats: self.stats,
            violation: self.violation,
        })
    }
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, Error> {
    let started = Instant::now();
    let threads = worker_count(cli.threads);
    let mut report = match &cli.command {
        Command::Sieve { bound, list } => sieve(*bound, *list)?,
        Command::Bitournament(BitournamentCommand::Check { file }) => bitournament_check(file)?,
        Command::Bitournament(BitournamentCommand::Label { file }) => bitournament_label(file)?,
        Command::Oddeven(cmd) => oddeven(cmd)?,
        Command::Embed { file, x_order, y_order } => embed(file, x_order.as_deref(), y_order.as_deref())?,
        Command::Goldbach(cmd) => goldbach_command(cmd, threads)?,
        Command::Hamiltonian(args) => hamiltonian(args, threads)?,
        Command::Appendix(AppendixCommand::Validate { file }) => appendix_validate(file.as_deref())?,
    };
    report.stats.push(format!("elapsed: {:.3?}", started.elapsed()));
    report.render(cli.format)
}

fn sieve(bound: u64, list: bool) -> Result<Report, Error> {
    let sieve = PrimeSieve::new(bound)?;
    let count = sieve.count_upto(bound)?;
    let mut text = format!("pi({bound}) = {count}\n");
    let mut value = json!({ "bound": bound, "count": count });
    if list {
        let primes: Vec<u64> = sieve.primes().collect();
        text.push_str(&join(&primes));
        text.push('\n');
        value["primes"] = to_json(&primes);
    }
    Ok(Report::new(text, value))
}

fn load_graph(path: &Path) -> Result<Sdbg, Error> {
    interchange::parse_graph(&read_file(path)?)
}

fn cycle_names(g: &Sdbg, c: [usize; 4]) -> String {
    c.iter().map(|&v| g.name(v)).collect::<Vec<_>>().join(" -> ")
}

fn bitournament_check(path: &Path) -> Result<Report, Error> {
    let g = load_graph(path)?;
    let mut text = format!(
        "vertices: {} + {}, arcs: {}\noriented: {}\nbitournament: {}\n",
        g.x_len(),
        g.y_len(),
        g.arc_count(),
        yes(g.is_oriented()),
        yes(g.is_bitournament())
    );
    let mut value = json!({
        "x": g.x_len(),
        "y": g.y_len(),
        "arcs": g.arc_count(),
        "oriented": g.is_oriented(),
        "bitournament": g.is_bitournament(),
    });
    let mut violation = false;
    if g.is_bitournament() {
        let bitransitive = g.is_bitransitive()?;
        let cycle = g.find_directed_4cycle();
        let acyclic = g.is_acyclic();
        let ferrers = g.bitournament_matrix_form()?;
        let labeling = g.monotone_labeling()?;
        let flags = [bitransitive, cycle.is_none(), acyclic, ferrers, labeling.is_some()];
        let consistent = flags.iter().all(|&f| f == flags[0]);
        violation = !consistent;
        let cycle_text = cycle.map_or("none".to_string(), |c| cycle_names(&g, c));
        writeln!(
            text,
            "bitransitive: {}\ndirected 4-cycle: {cycle_text}\nacyclic: {}\nferrers matrix form: {}\n\
             monotone labeling: {}\nequivalence: {}",
            yes(bitransitive),
            yes(acyclic),
            yes(ferrers),
            yes(labeling.is_some()),
            if consistent { "consistent" } else { "VIOLATED" }
        )
        .unwrap();
        value["bitransitive"] = json!(bitransitive);
        value["directed_4cycle"] = to_json(&cycle.map(|c| c.map(|v| g.name(v).to_string())));
        value["acyclic"] = json!(acyclic);
        value["ferrers_matrix_form"] = json!(ferrers);
        value["monotone_labeling"] = json!(labeling.is_some());
        value["consistent"] = json!(consistent);
    } else {
        text.push_str("equivalence: not applicable\n");
    }
    let mut report = Report::new(text, value);
    report.violation = violation;
    report.dot = Some(export::sdbg_dot(&g));
    Ok(report)
}

fn bitournament_label(path: &Path) -> Result<Report, Error> {
    let g = load_graph(path)?;
    let labeling = g.monotone_labeling()?;
    let mut report = match labeling {
        Some(l) => {
            let reproduces = l.reproduces(&g);
            let mut text = String::new();
            for v in 0..g.vertex_count() {
                writeln!(text, "{}: {}", g.name(v), l.label(v)).unwrap();
            }
            writeln!(text, "S = {{{}}}\nreproduces D_S: {}", join(&l.image()), yes(reproduces)).unwrap();
            let labels: serde_json::Map<String, Value> =
                (0..g.vertex_count()).map(|v| (g.name(v).to_string(), json!(l.label(v)))).collect();
            let mut r = Report::new(
                text,
                json!({ "labels": labels, "image": l.image(), "reproduces": reproduces }),
            );
            r.violation = !reproduces;
            r
        }
        None => {
            let cycle = g.find_directed_4cycle();
            let shown = cycle.map_or("a directed cycle".to_string(), |c| cycle_names(&g, c));
            let names = cycle.map(|c| c.map(|v| g.name(v).to_string()));
            Report::new(
                format!("no monotone labeling: {shown}\n"),
                json!({ "labels": null, "directed_4cycle": names }),
            )
        }
    };
    report.dot = Some(export::sdbg_dot(&g));
    Ok(report)
}

fn odd_set(opts: &OddSetOptions, vertices: &[u64]) -> Result<OddSet, Error> {
    let set = &opts.set;
    if let Some(values) = &set.odd {
        return Ok(OddSet::explicit(values.iter().copied())?);
    }
    if let Some(bound) = set.primes {
        return Ok(odd_primes_upto(bound, opts.with_one)?);
    }
    match set.progression.as_deref() {
        Some(&[a, b]) => {
            // half-sums of the given vertices never exceed the largest one
            let bound = opts.odd_bound.unwrap_or_else(|| vertices.iter().copied().max().unwrap_or(0).max(b));
            Ok(arithmetic_odd_set_from(a, b, bound, opts.start.into())?)
        }
        _ => Err(Error::Usage("--progression takes exactly two values: a,b".into())),
    }
}

fn oddeven(cmd: &OddevenCommand) -> Result<Report, Error> {
    match cmd {
        OddevenCommand::Build { vertices, odd, layout } => {
            let o = odd_set(odd, vertices)?;
            let g = build_oriented_odd_even(vertices, &o)?;
            let (forward, backward) = g.directional_arc_counts();
            let mut text = format!(
                "vertices: {}\nodd set: {}\narcs: {}\n",
                join(g.vertices()),
                join(o.as_slice()),
                g.arcs().len()
            );
            for &(a, b) in g.arcs() {
                writeln!(text, "  {a} -> {b} ({}, {})", (a + b) / 2, (b - a) / 2).unwrap();
            }
            let connected = g.is_connected_underlying()?;
            writeln!(text, "V1 -> V2: {forward}, V2 -> V1: {backward}\nconnected: {}", yes(connected)).unwrap();
            let layout = match layout {
                Layout::Blocked => MatrixLayout::Blocked,
                Layout::Flat => MatrixLayout::Flat,
            };
            let mut report = Report::new(
                text,
                json!({
                    "vertices": g.vertices(),
                    "odd_set": o.as_slice(),
                    "arcs": g.arcs(),
                    "v1_to_v2": forward,
                    "v2_to_v1": backward,
                    "connected": connected,
                }),
            );
            report.csv = Some(export::adjacency_csv(&export_adjacency(&g, layout)));
            report.dot = Some(export::odd_even_dot(&g));
            Ok(report)
        }
        OddevenCommand::Con1 { vertices, odd } => {
            let o = odd_set(odd, vertices)?;
            let r = check_con1(vertices, &o)?;
            let text = format!(
                "|A| = {}, |O_rel| = {}\nconnected: {}\n|O_rel| > sqrt(2|A|): {}\n0 in A: {}\nviolated: {}\n",
                r.vertex_count,
                r.relevant_odd_count,
                yes(r.connected),
                yes(r.bound_holds),
                yes(r.zero_in_a),
                yes(r.theorem_violated)
            );
            let mut report = Report::new(text, to_json(&r));
            report.violation = r.theorem_violated;
            Ok(report)
        }
        OddevenCommand::Con2 { m, odd } => {
            let vertices: Vec<u64> = (0..*m).map(|i| 2 * i).collect();
            let o = odd_set(odd, &vertices)?;
            let r = check_con2(*m, &o)?;
            let text = format!(
                "m = {}, |O_rel| = {}\n|O_rel| > 3m/4: {}\nconnected: {}\nviolated: {}\n",
                r.m,
                r.relevant_odd_count,
                yes(r.hypothesis_holds),
                yes(r.connected),
                yes(r.theorem_violated)
            );
            let mut report = Report::new(text, to_json(&r));
            report.violation = r.theorem_violated;
            Ok(report)
        }
        OddevenCommand::Uni { a, b, bound, start } => {
            let bound = bound.unwrap_or_else(|| default_unidirectionality_bound(*a, *b));
            let r = unidirectionality_scan(*a, *b, bound, (*start).into())?;
            let witness = |w: Option<(u64, u64)>| w.map_or("none".to_string(), |(u, v)| format!("{u} -> {v}"));
            let text = format!(
                "a = {}, b = {}, vertices 0..={}\nV1 -> V2: {} (first {})\nV2 -> V1: {} (first {})\n\
                 unidirectional: {}\npredicted (4 | a): {}\nagree: {}\n",
                r.a,
                r.b,
                r.vertex_bound,
                r.v1_to_v2_arcs,
                witness(r.forward_witness),
                r.v2_to_v1_arcs,
                witness(r.backward_witness),
                yes(r.observed_unidirectional),
                yes(r.predicted),
                yes(r.agree)
            );
            let mut report = Report::new(text, to_json(&r));
            report.violation = !r.agree;
            Ok(report)
        }
    }
}

fn indexing(g: &Sdbg, x_order: Option<&[String]>, y_order: Option<&[String]>) -> Result<Indexing, Error> {
    let mut ix = Indexing::natural(g);
    let resolve = |names: &[String], offset: usize| {
        names
            .iter()
            .map(|name| {
                g.index_of(name)
                    .and_then(|i| i.checked_sub(offset))
                    .ok_or_else(|| Error::Usage(format!("unknown vertex {name:?} in ordering")))
            })
            .collect::<Result<Vec<_>, _>>()
    };
    if let Some(names) = x_order {
        ix.x_order = resolve(names, 0)?;
    }
    if let Some(names) = y_order {
        ix.y_order = resolve(names, g.x_len())?;
    }
    Ok(ix)
}

fn embed(path: &Path, x_order: Option<&[String]>, y_order: Option<&[String]>) -> Result<Report, Error> {
    let g = load_graph(path)?;
    let ix = indexing(&g, x_order, y_order)?;
    let result = embed_oriented_bipartite(&g, &ix)?;
    let check = verify_embedding(&g, &result);
    let doc = EmbeddingDocument::new(&g, &result, check.clone());
    let mut text = String::new();
    for entry in &doc.map {
        writeln!(text, "{} -> {} (b_{})", entry.vertex, entry.value, entry.b).unwrap();
    }
    writeln!(
        text,
        "odd set: {}\nunderlying isomorphic: {}\noriented isomorphic: {}\norientation preserved: {}",
        doc.odd_set.join(","),
        yes(check.underlying_isomorphic),
        yes(check.oriented_isomorphic),
        yes(result.orientation_preserved)
    )
    .unwrap();
    let mut report = Report::new(text, to_json(&doc));
    report.violation = !check.underlying_isomorphic;
    report.dot = Some(export::sdbg_dot(&g));
    Ok(report)
}

fn goldbach_command(cmd: &GoldbachCommand, threads: usize) -> Result<Report, Error> {
    match *cmd {
        GoldbachCommand::Connect { max } => {
            let r = verify_goldbach_connectivity(max)?;
            let text = match r.first_disconnected {
                None => format!("connected: 7..{max}\n"),
                Some(k) => format!("disconnected: G_{k} (scan 7..{max})\n"),
            };
            let mut report = Report::new(text, to_json(&r));
            report.violation = !r.all_connected;
            Ok(report)
        }
        GoldbachCommand::Degrees { n } => {
            let profile = degree_profile(n)?;
            let sieve = PrimeSieve::new((2 * n).max(2))?;
            let mismatch = profile.partition_mismatch(&sieve)?;
            let mut text = String::from("vertex in out degree\n");
            for d in &profile.degrees {
                writeln!(text, "{} {} {} {}", d.vertex, d.in_degree, d.out_degree, d.total()).unwrap();
            }
            if let Some(v) = mismatch {
                writeln!(text, "in-degree of {v} differs from its partition count").unwrap();
            }
            let mut report = Report::new(text, to_json(&profile));
            report.csv = Some(export::degree_csv(&profile));
            report.violation = mismatch.is_some();
            Ok(report)
        }
        GoldbachCommand::Partitions { v } => {
            let sieve = PrimeSieve::new(v.max(2))?;
            let parts = goldbach_partitions(v, &sieve)?;
            let mut text = format!("{v}");
            for (p, q) in &parts {
                write!(text, " = {p} + {q}").unwrap();
            }
            writeln!(text, "\ncount: {}", parts.len()).unwrap();
            Ok(Report::new(text, json!({ "v": v, "partitions": parts })))
        }
        GoldbachCommand::Indegree { max } => {
            let r = verify_positive_in_degree(max)?;
            let text = if r.violations.is_empty() {
                format!("every even 6..={max} has a Goldbach partition ({} checked)\n", r.checked)
            } else {
                format!("no Goldbach partition: {}\n", join(&r.violations))
            };
            let mut report = Report::new(text, to_json(&r));
            report.violation = !r.violations.is_empty();
            Ok(report)
        }
        GoldbachCommand::Maillet { max, bound } => {
            let r = verify_maillet(max, bound)?;
            let mut text = format!("witnessed: {} of {} (prime bound {bound})\n", r.witnesses.len(), max / 2);
            if !r.unwitnessed.is_empty() {
                writeln!(text, "no witness below the bound: {}", join(&r.unwitnessed)).unwrap();
            }
            Ok(Report::new(text, to_json(&r)))
        }
        GoldbachCommand::Kronecker { gap, n } => {
            let r = count_kronecker_pairs(gap, n)?;
            let mut text = format!("gap {gap}, n {n}: {} pairs\n", r.count());
            for ((p, q), b) in r.pairs.iter().zip(&r.out_neighbors) {
                writeln!(text, "({p}, {q}) -> {b}").unwrap();
            }
            Ok(Report::new(text, to_json(&r)))
        }
        GoldbachCommand::Pi { n, all } => pi(n, all, threads),
        GoldbachCommand::Inequality { r, n, m, sweep } => inequality(r, n, m, sweep, threads),
        GoldbachCommand::Kmn { n, s, t, limit, lemmas } => kmn(n, s, t, limit, lemmas),
        GoldbachCommand::Indep { k } => {
            let r = consecutive_independent_set(k)?;
            let members: Vec<String> = r.members.iter().map(ToString::to_string).collect();
            let text = format!(
                "{}! + 2, ..., {}! + {}\nmembers: {}\nmethod: {:?}, pairs checked: {}\nindependent: {}\n",
                r.factorial_of,
                r.factorial_of,
                2 * k,
                members.join(","),
                r.method,
                r.pairs_checked,
                yes(r.independent())
            );
            let mut report = Report::new(
                text,
                json!({
                    "k": r.k,
                    "factorial_of": r.factorial_of,
                    "members": members,
                    "method": to_json(&r.method),
                    "pairs_checked": r.pairs_checked,
                    "independent": r.independent(),
                }),
            );
            report.violation = !r.independent();
            Ok(report)
        }
        GoldbachCommand::Graph { n, starred } => {
            let variant = if starred { Variant::Starred } else { Variant::WithZero };
            let g = GoldbachGraph::new(n, variant)?;
            let edges: Vec<(u64, u64)> = g.edges().collect();
            let mut text = format!("vertices: {}, edges: {}\n", g.vertex_count(), edges.len());
            for (a, b) in &edges {
                writeln!(text, "{a} {b}").unwrap();
            }
            let mut report = Report::new(
                text,
                json!({ "n": n, "starred": starred, "vertices": g.vertices().collect::<Vec<_>>(), "edges": edges }),
            );
            report.csv = Some(export::goldbach_csv(&g));
            report.dot = Some(export::goldbach_dot(&g));
            Ok(report)
        }
    }
}

fn pi(n: u64, all: bool, threads: usize) -> Result<Report, Error> {
    if n < 2 {
        return Err(Error::Usage("--n must be at least 2".into()));
    }
    let g = GoldbachGraph::new(n, Variant::WithZero)?;
    if !all {
        let id = prime_count_in(&g, n);
        let direct = g.sieve().count_upto(n)?;
        let mut report = Report::new(
            format!("pi({n}) = {} = d_{n}(0) + 1 (sieve count {direct})\n", id.pi),
            json!({ "n": n, "degree_of_zero": id.degree_of_zero, "pi": id.pi, "sieve_count": direct }),
        );
        report.violation = id.pi != direct;
        return Ok(report);
    }
    let ns: Vec<u64> = (2..=n).collect();
    let mismatches: Vec<u64> = parallel_map(&ns, threads, |&k| {
        let direct = g.sieve().count_upto(k).expect("k <= 2n");
        (prime_count_in(&g, k).pi != direct).then_some(k)
    })
    .into_iter()
    .flatten()
    .collect();
    let text = if mismatches.is_empty() {
        format!("pi(k) = d_k(0) + 1 for all 2 <= k <= {n}\n")
    } else {
        format!("identity fails at: {}\n", join(&mismatches))
    };
    let mut report = Report::new(text, json!({ "n_max": n, "mismatches": mismatches }));
    report.violation = !mismatches.is_empty();
    Ok(report)
}

fn inequality(r: Option<u64>, n: Option<u64>, m: u64, sweep: Option<u64>, threads: usize) -> Result<Report, Error> {
    if let (Some(r), Some(n)) = (r, n) {
        let rep = goldbach::verify_degree_inequality(r, n, m)?;
        let mut text = format!(
            "sum d+(2i) = {} >= sum d-(2r-2i) = {}: {}\n",
            rep.lhs,
            rep.rhs,
            yes(rep.holds)
        );
        if !rep.within_theorem {
            text.push_str("m > 4 is outside the proven range\n");
        }
        let mut report = Report::new(text, to_json(&rep));
        report.violation = !rep.holds && rep.within_theorem;
        return Ok(report);
    }
    let top = sweep.expect("clap requires --sweep without --r/--n");
    if top < 2 {
        return Err(Error::Usage("--sweep must be at least 2".into()));
    }
    let rs: Vec<u64> = (1..=top / 2).collect();
    let failures: Vec<Value> = parallel_map(&rs, threads, |&r| {
        let mut bad = Vec::new();
        for n in [2 * r, 2 * r + 10, 2 * r + 50] {
            let g = GoldbachGraph::new(n, Variant::WithZero).expect("n >= 2");
            for m in 0..=4 {
                let rep = degree_inequality_on(&g, r, m);
                if !rep.holds {
                    bad.push(to_json(&rep));
                }
            }
        }
        bad
    })
    .into_iter()
    .flatten()
    .collect();
    let checked = rs.len() * 15;
    let text = if failures.is_empty() {
        format!("holds for all 2 <= 2r <= {top}, m <= 4, n in {{2r, 2r+10, 2r+50}} ({checked} cases)\n")
    } else {
        format!("{} of {checked} cases fail\n", failures.len())
    };
    let mut report = Report::new(text, json!({ "two_r_max": top, "checked": checked, "failures": failures }));
    report.violation = !report.json["failures"].as_array().is_some_and(Vec::is_empty);
    Ok(report)
}

fn kmn(n: u64, s: usize, t: usize, limit: usize, lemmas: bool) -> Result<Report, Error> {
    let g = GoldbachGraph::new(n, Variant::WithZero)?;
    let found = goldbach::complete_bipartite_in(&g, s, t, limit)?;
    let mut text = format!("K_{{{s},{t}}} in G_{n}: {} found (limit {limit})\n", found.len());
    let mut entries = Vec::new();
    let mut violation = false;
    for w in &found {
        let structure = check_kmn_structure(w)?;
        let primes = extract_prime_witness(w)?;
        let ok = structure.mod6_pattern_ok
            && structure.n6_violations.is_empty()
            && structure.d6_violations.is_empty()
            && primes.all_prime();
        violation |= !ok;
        writeln!(
            text,
            "X = {{{}}} Y = {{{}}} {:?} {}",
            join(&w.x_side),
            join(&w.y_side),
            structure.pattern,
            if ok { "ok" } else { "VIOLATED" }
        )
        .unwrap();
        entries.push(json!({ "witness": w, "structure": structure, "prime_witness": primes }));
    }
    let mut value = json!({ "n": n, "s": s, "t": t, "limit": limit, "witnesses": entries });
    if lemmas {
        let scan = mod6_lemma_scan(&g);
        let d6_ok = scan.d6_edges.iter().all(|&e| e == (0, 6));
        violation |= !scan.n6_violations.is_empty() || !d6_ok;
        writeln!(
            text,
            "lemma n6: {} edges, {} violations\nlemma d6: edges {:?}",
            scan.n6_edges,
            scan.n6_violations.len(),
            scan.d6_edges
        )
        .unwrap();
        value["lemmas"] = to_json(&scan);
    }
    let mut report = Report::new(text, value);
    report.violation = violation;
    Ok(report)
}

fn hamiltonian_text(r: &HamiltonianResult) -> String {
    let kind = match r.kind {
        PathKind::Cycle => "cycle",
        PathKind::Path => "path",
    };
    match r.status {
        SearchStatus::Found => format!("{kind}: {}", join(&r.sequence)),
        SearchStatus::Exhausted => format!("{kind}: none (search exhausted)"),
        SearchStatus::BudgetExceeded => format!("{kind}: not found within the node budget"),
    }
}

fn hamiltonian(args: &HamiltonianArgs, threads: usize) -> Result<Report, Error> {
    let config = SearchConfig {
        node_budget: args.budget,
    };
    let search = |n: u64| {
        if args.path {
            hamiltonian_path_with(n, &config)
        } else {
            hamiltonian_cycle_with(n, &config)
        }
    };
    if let Some(n) = args.n {
        let started = Instant::now();
        let r = search(n)?;
        let mut report = Report::new(format!("{}\n", hamiltonian_text(&r)), to_json(&r));
        report.violation = !r.valid;
        report.stats.push(format!(
            "nodes expanded: {}, search time: {:.3?}",
            r.stats.nodes_expanded,
            started.elapsed()
        ));
        return Ok(report);
    }
    let top = args.sweep.expect("clap requires --n or --sweep");
    if top < 4 {
        return Err(Error::Usage("--sweep must be at least 4".into()));
    }
    let ns: Vec<u64> = if args.path {
        (4..=top).collect()
    } else {
        (4..=top).step_by(2).collect()
    };
    let results = parallel_map(&ns, threads, |&n| search(n));
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut violation = false;
    let mut nodes = 0;
    for r in results {
        let r = r?;
        writeln!(text, "n={} {}", r.n, hamiltonian_text(&r)).unwrap();
        violation |= !r.valid;
        nodes += r.stats.nodes_expanded;
        rows.push(to_json(&r));
    }
    let mut report = Report::new(text, Value::Array(rows));
    report.violation = violation;
    report.stats.push(format!("nodes expanded: {nodes}"));
    Ok(report)
}

fn appendix_validate(file: Option<&Path>) -> Result<Report, Error> {
    let source = match file {
        Some(path) => read_file(path)?,
        None => APPENDIX.to_string(),
    };
    let reports = appendix::validate_appendix(&source)?;
    let mut text = String::new();
    let mut flagged = Vec::new();
    for r in &reports {
        match &r.first_bad_step {
            None => writeln!(text, "n={}: valid", r.n).unwrap(),
            Some(p) => {
                flagged.push(r.n);
                writeln!(text, "n={}: INVALID, {} (line {})", r.n, appendix::describe(p), r.line).unwrap();
            }
        }
    }
    let valid = reports.len() - flagged.len();
    write!(text, "{valid} valid, {} flagged", flagged.len()).unwrap();
    if !flagged.is_empty() {
        write!(text, " (n={})", join(&flagged)).unwrap();
    }
    text.push('\n');
    let mut report = Report::new(text, json!({ "rows": reports, "valid": valid, "flagged": flagged }));
    report.violation = !flagged.is_empty();
    Ok(report)
}

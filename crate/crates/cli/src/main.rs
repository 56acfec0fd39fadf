use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reconf::constructions::{
    clique_tree, construction_one, construction_two, frozen_twin, join_padding, mycielskian_power, verify_same_reconfig,
    FamilySpec,
};
use reconf::format::{emit_graph, parse_graph, to_dot, to_graph6, GraphFormat};
use reconf::harness::{catalog, reconstruction_report, roundtrip, sweep, Algorithm, KRule, RunOptions};
use reconf::reconfig::{build, ReconfigGraph};
use reconf::{chromatic_number, Config, Error, Graph, ReconfigKind};
use serde_json::json;

#[derive(Parser)]
#[command(name = "reconf", version, about = "Build reconfiguration graphs and recover graphs from them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args)]
struct Limits {
    /// Largest number of colourings or independent sets an enumeration may produce.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Backtracking node budget for chromatic, layering and root searches.
    #[arg(long, global = true)]
    search_cap: Option<u64>,
    /// Run everything on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
}

impl Limits {
    fn config(&self) -> Config {
        let mut cfg = Config::default();
        if let Some(cap) = self.cap {
            cfg.max_colourings = cap;
            cfg.max_sets = cap;
        }
        if let Some(cap) = self.search_cap {
            cfg.max_search_nodes = cap;
        }
        cfg.parallel = !self.sequential && reconf::parallel_available();
        cfg
    }
}

#[derive(Args)]
struct Input {
    /// Graph file; standard input when absent or `-`.
    input: Option<PathBuf>,
    /// Input format: graph6 or edgelist.
    #[arg(long, default_value = "graph6")]
    format: GraphFormat,
}

#[derive(Args)]
struct Output {
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Graph6,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Build a reconfiguration graph of the input graph.
    Build {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// single, kempe, tj, ts or tar.
        #[arg(long)]
        kind: ReconfigKind,
        /// Colours, or tokens for the token kinds.
        #[arg(long)]
        k: usize,
        /// Strip labels and relabel vertices with this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Recover a graph from an unlabelled reconfiguration graph.
    Reconstruct {
        /// Reconfiguration graph file (graph6, edgelist, or the JSON written by `build`).
        input: Option<PathBuf>,
        /// graph6, edgelist or json.
        #[arg(long, default_value = "graph6")]
        format: String,
        #[command(flatten)]
        output: Output,
        /// Taken from the JSON input when omitted.
        #[arg(long)]
        kind: Option<ReconfigKind>,
        /// Token count; selects the token reconstructor.
        #[arg(long)]
        k: Option<usize>,
        /// Use the radius-2 reconstructors for colouring kinds.
        #[arg(long)]
        fast: bool,
        /// graph6 of the graph the result should be isomorphic to.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Build, strip, reconstruct and compare one graph.
    Roundtrip {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        kind: ReconfigKind,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        timings: bool,
    },
    /// Round trips over the small-graph catalog or a graph6 file.
    Sweep {
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        kind: ReconfigKind,
        /// chi+1, chi+2, fast, fast-kempe or a fixed number.
        #[arg(long)]
        k_rule: KRule,
        /// Largest catalog order (at most 6).
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// graph6 file, one graph per line, used instead of the catalog.
        #[arg(long)]
        graphs: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        seeds: Vec<u64>,
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        timings: bool,
    },
    /// Write one of the named graph constructions as graph6.
    Construct {
        #[command(subcommand)]
        what: Construct,
        #[command(flatten)]
        output: Output,
    },
    /// Check that a family's members share a recolouring graph.
    VerifyFamily {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Iterated Mycielskian of a graph.
    Mycielski {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        times: usize,
    },
    /// K_chi extended to n vertices, each new vertex joined to the previous chi - 1.
    CliqueTree {
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        n: usize,
    },
    /// The input plus a non-adjacent twin of its first frozen vertex.
    FrozenTwin {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Member of the first family with chi = 6, p = 3, H_0 = K_2, H_3 = K_1.
    FamilyOne {
        /// Extra H_0-H_3 edges as `a-b` pairs of block-local indices.
        #[arg(long, value_delimiter = ',')]
        extra: Vec<String>,
    },
    /// G_i of the second family.
    FamilyTwo {
        #[arg(long)]
        chi: usize,
        #[arg(long)]
        i: usize,
    },
    /// The input joined with a padding graph of independence number below k.
    JoinPadding {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        /// graph6 of the padding graph.
        #[arg(long)]
        pad: String,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The three smallest members of the first family.
    One,
    /// G_0 and G_i of the second family.
    Two {
        #[arg(long, default_value_t = 4)]
        chi: usize,
        #[arg(long, default_value_t = 1)]
        i: usize,
    },
    /// Any two graphs, given as graph6.
    Pair {
        first: String,
        second: String,
        #[arg(long, default_value = "single")]
        kind: ReconfigKind,
        #[arg(long)]
        k: usize,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceCap { .. } => 3,
            Error::Parse { .. }
            | Error::InvalidGraph(_)
            | Error::ImproperInput(_)
            | Error::PreconditionViolated(_)
            | Error::UnsupportedCase { .. }
            | Error::NoFrozenVertex { .. }
            | Error::NoColourings { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

type Run = Result<ExitCode, Failure>;

fn read_text(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| input_error(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| input_error(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    Ok(parse_graph(read_text(input.input.as_deref())?.trim_end(), input.format)?)
}

fn graph6_arg(text: &str) -> Result<Graph, Failure> {
    Ok(parse_graph(text, GraphFormat::Graph6)?)
}

fn write(output: &Output, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &output.out {
        Some(p) => fs::write(p, text).map_err(|e| input_error(format!("cannot write {}: {e}", p.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| input_error(format!("cannot write standard output: {e}"))),
    }
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports always serialise")
}

fn run(cli: Cli) -> Run {
    let cfg = cli.limits.config();
    match cli.command {
        Command::Build {
            input,
            output,
            kind,
            k,
            seed,
            emit,
        } => {
            let g = read_graph(&input)?;
            let mut r = build(&g, kind, k, &cfg)?;
            if let Some(seed) = seed {
                r = r.stripped(seed);
            }
            let text = match emit {
                Emit::Json => r.to_json(),
                Emit::Graph6 => to_graph6(&r.graph),
                Emit::Dot => {
                    let labels = r.labels.as_ref().map(|l| l.display());
                    to_dot(&r.graph, kind.name(), labels.as_deref())
                }
            };
            write(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reconstruct {
            input,
            format,
            output,
            kind,
            k,
            fast,
            expect,
        } => {
            let text = read_text(input.as_deref())?;
            let (graph, kind, k) = if format == "json" {
                let r = ReconfigGraph::from_json(&text)?;
                (r.graph, kind.unwrap_or(r.kind), k.unwrap_or(r.k))
            } else {
                let format: GraphFormat = format.parse()?;
                let kind = kind.ok_or_else(|| input_error("--kind is required for graph6 and edgelist input".into()))?;
                let k = match (kind.is_colouring(), k) {
                    (_, Some(k)) => k,
                    (true, None) => 0,
                    (false, None) => return Err(input_error("--k is required for token kinds".into())),
                };
                (parse_graph(text.trim_end(), format)?, kind, k)
            };
            let algorithm = Algorithm::for_kind(kind, k, fast)?;
            let expected = expect.as_deref().map(graph6_arg).transpose()?;
            let report = reconstruction_report(&graph, algorithm, expected.as_ref(), &cfg)?;
            write(&output, &pretty(&report))?;
            Ok(status(report.isomorphic_to_expected != Some(false)))
        }
        Command::Roundtrip {
            input,
            output,
            kind,
            k,
            seed,
            fast,
            timings,
        } => {
            let g = read_graph(&input)?;
            let record = roundtrip(&g, kind, k, seed, RunOptions { fast, timings }, &cfg);
            write(&output, &pretty(&record))?;
            Ok(status(!record.unexpected_failure()))
        }
        Command::Sweep {
            output,
            kind,
            k_rule,
            n_max,
            graphs,
            seeds,
            fast,
            timings,
        } => {
            let graphs = match graphs {
                Some(path) => read_text(Some(&path))?
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(|l| parse_graph(l.trim(), GraphFormat::Graph6))
                    .collect::<reconf::Result<Vec<_>>>()?,
                None => catalog(n_max)?,
            };
            let report = sweep(&graphs, kind, k_rule, &seeds, RunOptions { fast, timings }, &cfg);
            write(&output, &report.to_json())?;
            Ok(status(report.all_expected_ok()))
        }
        Command::Construct { what, output } => {
            let g = match what {
                Construct::Mycielski { input, times } => mycielskian_power(&read_graph(&input)?, times),
                Construct::CliqueTree { chi, n } => {
                    if chi == 0 || n < chi {
                        return Err(input_error(format!("need 1 <= chi <= n, got chi = {chi}, n = {n}")));
                    }
                    clique_tree(chi, n)
                }
                Construct::FrozenTwin { input, k } => frozen_twin(&read_graph(&input)?, k, &cfg)?,
                Construct::FamilyOne { extra } => {
                    construction_one(&FamilySpec::smallest(parse_pairs(&extra)?), &cfg)?
                }
                Construct::FamilyTwo { chi, i } => construction_two(chi, i)?,
                Construct::JoinPadding { input, k, pad } => join_padding(&read_graph(&input)?, k, &graph6_arg(&pad)?)?,
            };
            write(&output, &emit_graph(&g, GraphFormat::Graph6))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyFamily { family, output } => {
            let (members, kind, k) = match family {
                Family::One => {
                    let extras = [vec![], vec![(0, 0)], vec![(0, 0), (1, 0)]];
                    let members = extras
                        .into_iter()
                        .map(|e| construction_one(&FamilySpec::smallest(e), &cfg))
                        .collect::<reconf::Result<Vec<_>>>()?;
                    (members, ReconfigKind::SingleVertex, 6)
                }
                Family::Two { chi, i } => (
                    vec![construction_two(chi, 0)?, construction_two(chi, i)?],
                    ReconfigKind::SingleVertex,
                    chi,
                ),
                Family::Pair { first, second, kind, k } => (vec![graph6_arg(&first)?, graph6_arg(&second)?], kind, k),
            };
            let mut comparisons = Vec::new();
            let mut all_same = true;
            for other in &members[1..] {
                let report = verify_same_reconfig(&members[0], other, kind, k, &cfg)?;
                all_same &= report.verdict.same();
                comparisons.push(report);
            }
            let chis = members
                .iter()
                .map(|g| chromatic_number(g, &cfg))
                .collect::<reconf::Result<Vec<_>>>()?;
            let non_isomorphic = (0..members.len())
                .all(|i| (i + 1..members.len()).all(|j| reconf::is_isomorphic(&members[i], &members[j]).is_none()));
            let report = json!({
                "members": members.iter().map(to_graph6).collect::<Vec<_>>(),
                "chromatic_numbers": chis,
                "pairwise_non_isomorphic": non_isomorphic,
                "comparisons": comparisons,
                "same_reconfiguration_graph": all_same,
            });
            write(&output, &pretty(&report))?;
            Ok(status(all_same))
        }
    }
}

fn parse_pairs(items: &[String]) -> Result<Vec<(usize, usize)>, Failure> {
    items
        .iter()
        .map(|s| {
            let (a, b) = s
                .split_once('-')
                .ok_or_else(|| input_error(format!("expected `a-b`, got `{s}`")))?;
            let num = |t: &str| t.trim().parse().map_err(|_| input_error(format!("bad index in `{s}`")));
            Ok((num(a)?, num(b)?))
        })
        .collect()
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

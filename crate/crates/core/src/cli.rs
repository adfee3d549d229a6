//! The `doubled` command line. The binary only calls [`main_with_args`].

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::miner::{self, Source};
use crate::patterns::{PatternCatalog, PatternId};
use crate::recognition::{ClassId, RecognitionOutcome};
use crate::selfcheck::{self, SelfcheckConfig};

/// Exit status when every input graph is a member.
pub const EXIT_OK: i32 = 0;
/// Input, usage or internal error.
pub const EXIT_ERROR: i32 = 1;
/// At least one input graph is not a member.
pub const EXIT_NON_MEMBER: i32 = 2;

/// Lines recognized per parallel batch.
const BATCH: usize = 4096;

#[derive(Parser, Debug)]
#[command(
    name = "doubled",
    version,
    about = "Certifying recognition of split, almost-split and doubled graphs"
)]
pub struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Recognize graph6 graphs given inline or one per line in a file.
    Recognize {
        #[arg(long, default_value = "doubled", value_parser = parse_class)]
        class: ClassId,
        /// graph6 file, or "-" for standard input.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Inline graph6 strings.
        graphs: Vec<String>,
    },
    /// Mine minimal forbidden induced subgraphs of a class.
    Mine {
        #[arg(long, value_parser = parse_class)]
        class: ClassId,
        #[arg(long)]
        max_order: usize,
        /// graph6 corpus to mine instead of the built-in generator.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Also write the JSON summary to this file.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Run the built-in consistency suites.
    Selfcheck {
        /// Sweep up to 8 vertices and mine up to 9.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
        /// Toggle vertex pair 0-1 of this catalog pattern before checking.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Print the named pattern catalog.
    Catalog {
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Print all graphs on a given number of vertices, one graph6 per line.
    Enumerate {
        #[arg(long)]
        order: usize,
    },
}

fn parse_class(s: &str) -> std::result::Result<ClassId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parse arguments, run, and return the exit status. Usage errors are
/// printed by clap.
pub fn main_with_args<I, T>(
    args: I,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    match pool.install(|| run(cli.command, out, err)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn run(
    command: Command,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    match command {
        Command::Recognize {
            class,
            input,
            format,
            graphs,
        } => recognize(class, input, format, graphs, out, err),
        Command::Mine {
            class,
            max_order,
            input,
            format,
            summary,
        } => mine(class, max_order, input, format, summary, out),
        Command::Selfcheck {
            full,
            seed,
            format,
            inject_fault,
        } => {
            let mut catalog = PatternCatalog::standard().clone();
            if let Some(name) = inject_fault {
                let id: PatternId = name.parse()?;
                catalog = catalog.with_toggled_pair(id, 0, 1);
            }
            let report = selfcheck::run(&SelfcheckConfig { full, seed }, &catalog);
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                _ => write!(out, "{report}")?,
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_ERROR })
        }
        Command::Catalog { format } => {
            let catalog = PatternCatalog::standard();
            match format {
                Format::Json => {
                    let rows: Vec<_> = catalog
                        .entries()
                        .iter()
                        .map(|e| serde_json::json!({"name": e.id, "graph6": graph6::encode(&e.graph)}))
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
                }
                Format::Tsv => write!(out, "{}", catalog.to_tsv())?,
                Format::Human => {
                    for e in catalog.entries() {
                        writeln!(
                            out,
                            "{}: {} vertices, edges {}",
                            e.id,
                            e.graph.order(),
                            edge_list(&e.graph)
                        )?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { order } => {
            for g in miner::enumerate_graphs(order)? {
                writeln!(out, "{}", graph6::encode(&g))?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn edge_list(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    if edges.is_empty() {
        "none".into()
    } else {
        edges.join(" ")
    }
}

fn joined(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn pairs(ps: &[[usize; 2]]) -> String {
    ps.iter()
        .map(|p| format!("{}-{}", p[0], p[1]))
        .collect::<Vec<_>>()
        .join(",")
}

/// Render one outcome in the requested format (without trailing newline).
pub fn render(
    class: ClassId,
    g: &Graph,
    outcome: &RecognitionOutcome,
    format: Format,
) -> Result<String> {
    let code = graph6::encode(g);
    Ok(match (format, outcome) {
        (Format::Json, o) => serde_json::to_string(&o.to_record(class))?,
        (Format::Tsv, RecognitionOutcome::Member(c)) => format!(
            "{code}\t{class}\tmember\tA={}\tB={}\tmatched={}\tantimatched={}",
            joined(&c.a),
            joined(&c.b),
            pairs(&c.matched_pairs),
            pairs(&c.antimatched_pairs)
        ),
        (Format::Tsv, RecognitionOutcome::NonMember(w)) => format!(
            "{code}\t{class}\tnon-member\twitness={}\tkind={}",
            joined(&w.vertices),
            w.kind.map(|k| k.to_string()).unwrap_or_default()
        ),
        (Format::Human, RecognitionOutcome::Member(c)) => {
            let side = |name: &str, vs: &[usize], ps: &[[usize; 2]], what: &str| {
                format!(
                    "  {name} = {{{}}}; {what} pairs: {}",
                    joined(vs),
                    if ps.is_empty() {
                        "none".into()
                    } else {
                        pairs(ps)
                    }
                )
            };
            format!(
                "{code}: {class} member\n{}\n{}",
                side("A", &c.a, &c.matched_pairs, "matched"),
                side("B", &c.b, &c.antimatched_pairs, "antimatched")
            )
        }
        (Format::Human, RecognitionOutcome::NonMember(w)) => {
            let h = g.induced(&w.vertices)?;
            let edges: Vec<String> = h
                .edges()
                .iter()
                .map(|&(u, v)| format!("{}-{}", w.vertices[u], w.vertices[v]))
                .collect();
            format!(
                "{code}: not {class}\n  witness {} on {{{}}}; edges: {}",
                w.kind
                    .map(|k| k.to_string())
                    .unwrap_or_else(|| "(unnamed)".into()),
                joined(&w.vertices),
                if edges.is_empty() {
                    "none".into()
                } else {
                    edges.join(" ")
                }
            )
        }
    })
}

fn recognize(
    class: ClassId,
    input: Option<PathBuf>,
    format: Format,
    inline: Vec<String>,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    let reader: Box<dyn BufRead> = match (&input, inline.is_empty()) {
        (Some(_), false) => {
            return Err(Error::Misuse(
                "give either --input or inline graphs, not both".into(),
            ))
        }
        (None, true) => return Err(Error::Misuse("no input graphs".into())),
        (None, false) => Box::new(io::Cursor::new(inline.join("\n").into_bytes())),
        (Some(p), true) if p.as_os_str() == "-" => Box::new(BufReader::new(io::stdin())),
        (Some(p), true) => Box::new(BufReader::new(File::open(p)?)),
    };
    let mut any_non_member = false;
    let mut lines = reader.lines().enumerate();
    loop {
        let mut batch: Vec<(usize, String)> = Vec::with_capacity(BATCH);
        for (i, line) in lines.by_ref() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            batch.push((i + 1, line));
            if batch.len() == BATCH {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let results: Vec<Result<(bool, String)>> = batch
            .par_iter()
            .map(|(lineno, line)| {
                let g = graph6::decode(line.trim_end()).map_err(|e| graph6::at_line(*lineno, e))?;
                let o = class.recognize(&g)?;
                let text = render(class, &g, &o, format)?;
                Ok((o.is_member(), text))
            })
            .collect();
        for r in results {
            match r {
                Ok((member, text)) => {
                    any_non_member |= !member;
                    writeln!(out, "{text}")?;
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_ERROR);
                }
            }
        }
    }
    Ok(if any_non_member {
        EXIT_NON_MEMBER
    } else {
        EXIT_OK
    })
}

fn mine(
    class: ClassId,
    max_order: usize,
    input: Option<PathBuf>,
    format: Format,
    summary_path: Option<PathBuf>,
    out: &mut (dyn Write + Send),
) -> Result<i32> {
    let set = match input {
        None => miner::mine_class(class, max_order, Source::Generator)?,
        Some(p) => {
            let graphs = if p.as_os_str() == "-" {
                miner::read_graph6(BufReader::new(io::stdin()))?
            } else {
                miner::read_graph6(BufReader::new(File::open(&p)?))?
            };
            miner::mine_class(class, max_order, Source::Graphs(&graphs))?
        }
    };
    let summary = set.summary();
    if let Some(p) = summary_path {
        std::fs::write(p, serde_json::to_string_pretty(&summary)? + "\n")?;
    }
    match format {
        Format::Tsv => write!(out, "{}", set.to_tsv())?,
        Format::Json => {
            let members: Vec<_> = set
                .members
                .iter()
                .map(|m| serde_json::json!({"name": m.name, "graph6": m.canon.as_graph6()}))
                .collect();
            let doc = serde_json::json!({"summary": summary, "members": members});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Human => {
            writeln!(
                out,
                "{} obstructions for {} on <= {} vertices ({} up to complement, complement-closed: {})",
                summary.count, summary.class, summary.max_order, summary.count_up_to_complement, summary.complement_closure
            )?;
            for (order, count) in &summary.order_histogram {
                writeln!(out, "  order {order}: {count}")?;
            }
            for m in &set.members {
                writeln!(
                    out,
                    "{}\t{}\tedges {}",
                    m.name,
                    m.canon,
                    edge_list(&m.graph)
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(
            std::iter::once("doubled").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn recognize_exit_codes() {
        let (code, out, _) = call(&["recognize", "--class", "doubled", "Cl"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"result\":\"member\""));
        let (code, out, _) = call(&["recognize", "Dhc"]);
        assert_eq!(code, EXIT_NON_MEMBER);
        assert!(out.contains("\"kind\":\"C5\""), "{out}");
        let (code, _, err) = call(&["recognize", "Cl", "C~~~"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn mine_capacity_error() {
        let (code, _, err) = call(&["mine", "--class", "doubled", "--max-order", "10"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("at most 9"), "{err}");
    }

    #[test]
    fn unknown_class_is_a_usage_error() {
        let (code, _, err) = call(&["recognize", "--class", "perfect", "Cl"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("unknown class"));
    }
}

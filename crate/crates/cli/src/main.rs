//! `dib`: exact acyclic coloring parameters of digraphs from the command line.

mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dib_core::codec::{to_digraph6, to_edge_list};
use dib_core::constructions::{construct, FamilySpec};
use dib_core::enumeration::{
    conjecture_scan, enumerate_regular, property_sweep, PropertyId, Sample,
};
use dib_core::solvers::BoundKind;
use dib_core::{audit, bounds_report, dac_exact, dc_exact, dib_exact, Digraph, Error, Parameter};
use serde::Serialize;
use serde_json::{json, Value};

use input::{read_coloring, read_digraphs, read_one, Format};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "dib",
    version,
    about = "Exact acyclic coloring parameters of digraphs"
)]
struct Cli {
    /// Worker threads for parallel enumeration and sweeps (output is identical for any value).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Digraph source: file path, `-` for stdin, or a family spec such as `circulant:n=7,J=1+2+3`.
    #[arg(value_name = "INPUT", conflicts_with = "input")]
    positional: Option<String>,

    #[arg(long, value_name = "path|familyspec|-")]
    input: Option<String>,

    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl Source {
    fn name(&self) -> Result<&str, Failure> {
        self.input
            .as_deref()
            .or(self.positional.as_deref())
            .ok_or_else(|| Failure::Usage("missing digraph input".into()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute dc, dac or dib exactly, with a witness coloring.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "dib")]
        param: Parameter,
        #[arg(long)]
        json: bool,
    },
    /// Audit a coloring given as a JSON array.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "FILE")]
        coloring: String,
        #[arg(long)]
        json: bool,
    },
    /// Report the auxiliary invariants and every bound on dc, dib and dac.
    Bounds {
        #[command(flatten)]
        source: Source,
        /// Also solve dib of the digraph and its complement.
        #[arg(long)]
        ng: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write a family member as digraph6 or an edge list.
    Gen {
        family: FamilySpec,
        #[arg(long, value_enum, default_value = "d6")]
        format: Format,
    },
    /// Build a family member with its closed-form coloring.
    Construct {
        #[arg(long)]
        family: FamilySpec,
        /// Write the coloring as a JSON array instead of the digraph.
        #[arg(long)]
        emit_coloring: bool,
        #[arg(long)]
        json: bool,
    },
    /// List all r-regular digraphs of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        regularity: usize,
        /// Keep every labeling instead of one digraph per isomorphism class.
        #[arg(long)]
        labeled: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the bound properties on every small digraph, or on a random sample.
    Sweep {
        #[arg(long)]
        order_max: usize,
        /// Property ids (repeatable or comma separated); all when omitted.
        #[arg(long = "property", value_delimiter = ',')]
        properties: Vec<PropertyId>,
        /// Number of random instances; switches to sampled mode.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Split the 1- and 2-regular digraphs of each order by dib.
    Conjecture {
        #[arg(long)]
        order_max: usize,
        #[arg(long)]
        json: bool,
    },
}

pub enum Failure {
    Core(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

#[derive(Serialize)]
struct JsonReport<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    digraph: Option<Summary>,
    payload: T,
}

#[derive(Serialize)]
struct Summary {
    n: usize,
    m: usize,
}

fn summary(d: &Digraph) -> Summary {
    Summary {
        n: d.order(),
        m: d.size(),
    }
}

fn report<T: Serialize>(command: &str, d: Option<&Digraph>, payload: T) {
    let r = JsonReport {
        schema_version: SCHEMA_VERSION,
        command,
        digraph: d.map(summary),
        payload,
    };
    println!(
        "{}",
        serde_json::to_string(&r).expect("serializable report")
    );
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli, echo: &str) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--threads: {e}")))?;
    }
    match cli.command {
        Command::Solve {
            source,
            param,
            json,
        } => {
            for d in read_digraphs(source.name()?, source.format)? {
                let outcome = match param {
                    Parameter::Dc => dc_exact(&d),
                    Parameter::Dac => dac_exact(&d),
                    Parameter::Dib => dib_exact(&d),
                }?;
                if json {
                    report(echo, Some(&d), &outcome);
                } else {
                    println!("{} = {}", outcome.parameter, outcome.value);
                    println!("witness: {}", join(outcome.witness.as_slice()));
                }
            }
        }
        Command::Check {
            source,
            coloring,
            json,
        } => {
            if source.name()? == "-" && coloring == "-" {
                return Err(Failure::Usage(
                    "digraph and coloring cannot both come from stdin".into(),
                ));
            }
            let d = read_one(source.name()?, source.format)?;
            let c = read_coloring(&coloring)?;
            let a = audit(&d, &c)?;
            if json {
                report(echo, Some(&d), &a);
            } else {
                let mark = |ok: bool| if ok { "yes" } else { "no" };
                println!("colors: {}", a.num_colors);
                println!("acyclic: {}", mark(a.acyclic));
                println!("complete: {}", mark(a.complete));
                println!("b-coloring: {}", mark(a.is_b_coloring));
                if !a.cyclic_classes.is_empty() {
                    println!("cyclic classes: {}", join(&a.cyclic_classes));
                }
                if !a.missing_pairs.is_empty() {
                    let pairs: Vec<String> = a
                        .missing_pairs
                        .iter()
                        .map(|(i, j)| format!("{i}->{j}"))
                        .collect();
                    println!("missing pairs: {}", pairs.join(" "));
                }
            }
        }
        Command::Bounds { source, ng, json } => {
            let d = read_one(source.name()?, source.format)?;
            let mut r = bounds_report(&d)?;
            if ng {
                let (a, b) = (dib_exact(&d)?.value, dib_exact(&d.complement())?.value);
                r = r.with_complement_dib(a, b);
            }
            if json {
                report(echo, Some(&d), &r);
            } else {
                println!(
                    "n = {}, m = {}, Delta = {}, omega = {}, beta = {}, A = {}, t = {}",
                    r.n,
                    r.m,
                    r.delta,
                    r.clique_number,
                    r.independence_number,
                    r.acyclic_number,
                    r.t
                );
                for p in [Parameter::Dc, Parameter::Dib, Parameter::Dac] {
                    println!("{p}: {} <= {p} <= {}", r.lower(p), r.upper(p));
                }
                for b in &r.bounds {
                    let rel = if b.kind == BoundKind::Lower {
                        ">="
                    } else {
                        "<="
                    };
                    println!("  {} {rel} {}  ({})", b.parameter, b.value, b.source);
                }
                if let Some(s) = r.ng_slack {
                    println!("n + 1 - dib - dib(complement) = {s}");
                }
            }
        }
        Command::Gen { family, format } => {
            let d = family.generate()?;
            match format {
                Format::D6 => println!("{}", to_digraph6(&d)),
                Format::Edges => print!("{}", to_edge_list(&d)),
            }
        }
        Command::Construct {
            family,
            emit_coloring,
            json,
        } => {
            let c = construct(&family)?;
            let a = audit(&c.digraph, &c.coloring)?;
            if json {
                let payload = json!({
                    "family": family.to_string(),
                    "digraph6": to_digraph6(&c.digraph),
                    "method": c.method,
                    "coloring": c.coloring,
                    "audit": a,
                });
                report(echo, Some(&c.digraph), payload);
            } else if emit_coloring {
                println!(
                    "{}",
                    serde_json::to_string(&c.coloring).expect("serializable")
                );
            } else {
                println!("{}", to_digraph6(&c.digraph));
            }
        }
        Command::Enumerate {
            order,
            regularity,
            labeled,
            json,
        } => {
            let all = enumerate_regular(order, regularity, !labeled)?;
            let lines: Vec<String> = all.iter().map(to_digraph6).collect();
            if json {
                let payload = json!({
                    "order": order,
                    "regularity": regularity,
                    "up_to_iso": !labeled,
                    "count": lines.len(),
                    "digraphs": lines,
                });
                report(echo, None, payload);
            } else {
                for l in lines {
                    println!("{l}");
                }
            }
        }
        Command::Sweep {
            order_max,
            properties,
            sample,
            seed,
            min_order,
            json,
        } => {
            let props = if properties.is_empty() {
                PropertyId::ALL.to_vec()
            } else {
                properties
            };
            let sample = sample.map(|count| Sample {
                count,
                seed,
                min_order,
            });
            let reports = property_sweep(order_max, &props, sample)?;
            if json {
                report(echo, None, &reports);
            } else {
                for r in &reports {
                    println!(
                        "{}: {} on {}: {} instances, {} counterexamples, {} tight",
                        r.property,
                        r.statement,
                        r.corpus,
                        r.instances,
                        r.counterexamples.len(),
                        r.tightness.len()
                    );
                    for c in &r.counterexamples {
                        println!("  counterexample {} ({})", c.digraph6, c.detail);
                    }
                }
            }
        }
        Command::Conjecture { order_max, json } => {
            let catalogs = conjecture_scan(order_max)?;
            if json {
                report(echo, None, &catalogs);
            } else {
                for c in &catalogs {
                    let counts: Vec<String> = c
                        .classes
                        .iter()
                        .map(|k| format!("dib {}: {}", k.dib, k.count))
                        .collect();
                    println!(
                        "# n = {}, r = {}, {} digraphs; {}",
                        c.order,
                        c.regularity,
                        c.total,
                        counts.join(", ")
                    );
                    if let Some(two) = c.class(2).filter(|_| c.regularity == 2) {
                        for d6 in &two.digraphs {
                            println!("{d6}");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let echo = args[1..].join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli, &echo) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            let mut err = json!({ "kind": e.kind(), "message": e.to_string(), "command": echo });
            if let Error::Parse { line, offset, .. } = e {
                err["line"] = Value::from(line);
                err["offset"] = Value::from(offset);
            }
            eprintln!("{}", json!({ "error": err }));
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!(
                "{}",
                json!({ "error": { "kind": "io", "message": msg, "command": echo } })
            );
            ExitCode::from(1)
        }
    }
}

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use spechtkit::abacus::{ordered_quotient, AbacusDisplay};
use spechtkit::classify::classify;
use spechtkit::hom::{
    carter_payne_hom, compose, composed_nonvanishing, magic_tableau, re_tableau, restrictisation_hom,
    semistandardize, HomExpr, Tableau,
};
use spechtkit::restriction::{later_addable_criterion, lightning, mullineux, nor, normal_nodes, rem};
use spechtkit::rouquier::{rouquier_row, TableOracle};
use spechtkit::{Node, Partition};
use spechtkit_verify::{run_suite, Filter, SweepSpec};

#[derive(Parser)]
#[command(name = "spechtkit", version, about = "Specht module combinatorics in odd characteristic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// JM, R-type, two-factor and alternating-group verdicts.
    Classify {
        partition: Partition,
        #[arg(long, short)]
        p: usize,
    },
    /// Abacus display commands.
    Abacus {
        #[command(subcommand)]
        command: AbacusCommand,
    },
    /// Restrictisation, per-residue counts and the lightning predicate.
    Restrict {
        partition: Partition,
        #[arg(long, short)]
        p: usize,
        /// Residue word such as 1,2,1.
        #[arg(long, value_delimiter = ',')]
        word: Vec<usize>,
    },
    /// Image under the Mullineux map (p-restricted input).
    Mullineux {
        partition: Partition,
        #[arg(long, short)]
        p: usize,
    },
    /// Rouquier block data.
    Rouquier {
        #[command(subcommand)]
        command: RouquierCommand,
    },
    /// Homomorphisms between Specht modules.
    Hom {
        #[command(subcommand)]
        command: HomCommand,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, short)]
        p: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "all")]
        filter: Filter,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
        /// Also write the report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AbacusCommand {
    Show {
        partition: Partition,
        #[arg(long, short)]
        p: usize,
    },
}

#[derive(Subcommand)]
enum RouquierCommand {
    /// Decomposition row; entries are null where the Weyl oracle has no data.
    Row {
        partition: Partition,
        #[arg(long, short)]
        p: usize,
    },
}

#[derive(Subcommand)]
enum HomCommand {
    /// The restrictisation homomorphism.
    Magic {
        partition: Partition,
        #[arg(long, short)]
        p: usize,
    },
    /// One-node Carter-Payne map, and its composite with the restrictisation map.
    Cp {
        partition: Partition,
        #[arg(long, short)]
        p: usize,
        /// Removed node as row,col.
        #[arg(long, value_delimiter = ',')]
        remove: Vec<usize>,
        /// Added node as row,col.
        #[arg(long, value_delimiter = ',')]
        add: Vec<usize>,
    },
    /// Theta_T after Theta_S, in the semistandard basis.
    Compose {
        t: Tableau,
        s: Tableau,
        #[arg(long, short)]
        p: u64,
    },
}

fn node(v: &[usize]) -> Result<Node> {
    match v {
        [r, c] if *r > 0 && *c > 0 => Ok(Node::new(*r, *c)),
        _ => Err(anyhow!("a node is given as row,col with both positive")),
    }
}

fn hom_json(e: &HomExpr) -> Value {
    json!(e)
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let out = match cli.command {
        Command::Classify { partition, p } => json!({ "partition": partition, "p": p, "classification": classify(&partition, p) }),
        Command::Abacus { command: AbacusCommand::Show { partition, p } } => {
            let ab = AbacusDisplay::new(&partition, p);
            let rows: Vec<String> = ab.render().lines().map(String::from).collect();
            json!({
                "partition": partition,
                "p": p,
                "rows": rows,
                "data": ordered_quotient(&partition, p),
                "quotient_separated": ab.is_quotient_separated(),
                "rouquier": ab.is_rouquier(),
                "gaps": ab.gaps(),
            })
        }
        Command::Restrict { partition, p, word } => {
            let rest = partition.restrictise(p);
            let residues: Vec<Value> = (0..p)
                .map(|i| {
                    json!({
                        "residue": i,
                        "removable": rem(&partition, p, i),
                        "normal_in_restrictisation": nor(&rest, p, i),
                        "normal_nodes": normal_nodes(&rest, p, i),
                        "later_addable": later_addable_criterion(&partition, p, i),
                    })
                })
                .collect();
            let mut v = json!({ "partition": partition, "p": p, "restrictisation": rest, "residues": residues });
            if !word.is_empty() {
                v["word"] = json!(word);
                v["lightning"] = json!(lightning(&partition, p, &word)?);
            }
            v
        }
        Command::Mullineux { partition, p } => json!({ "partition": partition, "p": p, "image": mullineux(&partition, p)? }),
        Command::Rouquier { command: RouquierCommand::Row { partition, p } } => {
            let oracle = TableOracle::from_env()?;
            let row: Vec<Value> = rouquier_row(&partition, p, &oracle)?
                .into_iter()
                .map(|(nu, d)| json!({ "nu": nu, "multiplicity": d }))
                .collect();
            let known = row.iter().all(|e| !e["multiplicity"].is_null());
            json!({ "partition": partition, "p": p, "row": row, "fully_known": known })
        }
        Command::Hom { command } => match command {
            HomCommand::Magic { partition, p } => json!({
                "partition": partition,
                "p": p,
                "restrictisation": partition.restrictise(p),
                "magic_tableau": magic_tableau(&partition, p),
                "re_tableau": re_tableau(&partition, p),
                "expansion": hom_json(&restrictisation_hom(&partition, p)),
            }),
            HomCommand::Cp { partition, p, remove, add } => {
                let (a, c) = (node(&remove)?, node(&add)?);
                let hom = carter_payne_hom(&partition, p, a, c)?;
                let mut v = json!({ "partition": partition, "p": p, "carter_payne": hom_json(&semistandardize(&hom)) });
                match composed_nonvanishing(&partition, p, a, c) {
                    Ok(comp) => v["composite"] = json!(comp),
                    Err(e) => v["composite_error"] = json!(e.to_string()),
                }
                v
            }
            HomCommand::Compose { t, s, p } => {
                let e = semistandardize(&compose(&t, &s, p)?);
                json!({ "t": t, "s": s, "p": p, "expansion": hom_json(&e) })
            }
        },
        Command::Verify { suite, p, max_n, filter, jobs, json: path } => {
            let spec = SweepSpec { p, max_n, filter, suite };
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build()?;
            let report = pool.install(|| run_suite(&spec))?;
            if let Some(path) = path {
                std::fs::write(&path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            return Ok((report.to_json(), report.passed()));
        }
    };
    Ok((serde_json::to_string_pretty(&out)?, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": format!("{e:#}") }));
            ExitCode::from(2)
        }
    }
}

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use fankit::*;

#[derive(Parser)]
#[command(name = "fankit", version, about = "Extremal and anti-Ramsey toolkit for fan subgraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-form edge counts.
    #[command(subcommand)]
    Formula(FormulaCmd),
    /// Build a graph and write it to a file.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Search a graph or coloring for a pattern.
    #[command(subcommand)]
    Detect(DetectCmd),
    /// Edge colorings of K_n.
    #[command(subcommand)]
    Color(ColorCmd),
    /// Exhaustive small-case searches.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Consistency checks tying formulas, constructions, and detectors together.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Edge count of the Turán graph T_{n,p}.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        json: bool,
    },
    /// Maximum edges with matching number <= nu and maximum degree <= delta.
    F {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        json: bool,
    },
    /// Maximum edges of an n-vertex graph with no F_{k,r}.
    ExFan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Fewest colors forcing a rainbow F_{k,r} in K_n (k >= 2).
    ArFan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Complete graph K_n.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Turán graph T_{n,p}.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// The fan F_{k,r} itself.
    Fan {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Extremal F_{k,r}-free graph on n vertices.
    ExtremalFanFree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Edge-maximum graph with matching number <= nu and max degree <= delta.
    BoundedMax {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum DetectCmd {
    /// Find a clique K_r.
    Clique {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Find a fan F_{k,r}.
    Fan {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Find a rainbow fan F_{k,r} in an edge coloring of K_n, optionally
    /// restricted to a host graph.
    RainbowFan {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Rainbow-host-plus-shared-extra-color coloring of K_n certifying the
    /// anti-Ramsey lower bound for F_{k+1,r}.
    LowerBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct BudgetArg {
    /// Node cap for the exhaustive search.
    #[arg(long)]
    budget: Option<u64>,
}

impl BudgetArg {
    fn to_budget(&self) -> SearchBudget {
        match self.budget {
            Some(n) => SearchBudget::with_nodes(n),
            None => SearchBudget::default(),
        }
    }
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exhaustive ex(n, K_r) or, with --k, ex(n, F_{k,r}).
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Write the attaining graph here.
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Exhaustive f(nu, delta).
    F {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Exhaustive anti-Ramsey value for F_{k,r} in K_n.
    Ar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Write a maximum rainbow-free coloring here.
        #[arg(long)]
        witness_out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Certify ar(n, F_{k,r}) >= ex(n, F_{k-1,r}) + 2 at this n.
    LowerBound {
        #[arg(long)]
        n: usize,
        /// Blade count of the target fan (k >= 2).
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        json: bool,
    },
    /// Formula/construction identity plus deficit checks over a grid.
    Grid {
        #[arg(long, default_value_t = 1)]
        k_min: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long, default_value_t = 3)]
        r_min: usize,
        #[arg(long)]
        r_max: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Class sizes, inner matching/degree, and local bounds of a partition.
    Partition {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Inner-minus-missing-cross deficit of a partition against f(k,k).
    Lemma28 {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(io::read_graph(&text)?)
}

fn load_partition(n: usize, path: &PathBuf) -> Result<PartitionClasses> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(io::read_partition(n, &text)?)
}

fn write_out(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn print_value(json: bool, plain: String, value: serde_json::Value) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        println!("{plain}");
    }
}

fn main() -> Result<()> {
    match Cli::parse().cmd {
        Cmd::Formula(cmd) => formula(cmd),
        Cmd::Construct(cmd) => construct(cmd),
        Cmd::Detect(cmd) => detect(cmd),
        Cmd::Color(cmd) => color(cmd),
        Cmd::Oracle(cmd) => oracle(cmd),
        Cmd::Verify(cmd) => verify(cmd),
    }
}

fn formula(cmd: FormulaCmd) -> Result<()> {
    match cmd {
        FormulaCmd::Turan { n, p, json } => {
            let value = turan_count(n, p);
            print_value(json, value.to_string(), json!({"n": n, "p": p, "value": value}));
        }
        FormulaCmd::F { nu, delta, json } => {
            let value = f_bounded(BoundedPair::new(nu, delta)?);
            print_value(
                json,
                value.to_string(),
                json!({"nu": nu, "delta": delta, "value": value}),
            );
        }
        FormulaCmd::ExFan { n, k, r, json } => {
            let out = ex_fan(n, FanSpec::new(k, r)?)?;
            print_value(
                json,
                format!(
                    "{}{}",
                    out.value,
                    if out.below_threshold { " (below proven threshold)" } else { "" }
                ),
                json!({
                    "n": n, "k": k, "r": r,
                    "value": out.value,
                    "parity_branch": out.parity_branch,
                    "below_threshold": out.below_threshold,
                }),
            );
        }
        FormulaCmd::ArFan { n, k, r, json } => {
            let out = ar_fan(n, k, r)?;
            print_value(
                json,
                format!(
                    "{}{}",
                    out.value,
                    if out.below_threshold { " (below proven threshold)" } else { "" }
                ),
                json!({
                    "n": n, "k": k, "r": r,
                    "value": out.value,
                    "parity_branch": out.parity_branch,
                    "below_threshold": out.below_threshold,
                }),
            );
        }
    }
    Ok(())
}

fn construct(cmd: ConstructCmd) -> Result<()> {
    let (g, out) = match cmd {
        ConstructCmd::Complete { n, out } => (Graph::complete(n)?, out),
        ConstructCmd::Turan { n, p, out } => (Graph::turan(n, p)?, out),
        ConstructCmd::Fan { k, r, out } => (Graph::fan(FanSpec::new(k, r)?)?, out),
        ConstructCmd::ExtremalFanFree { n, k, r, out } => {
            (construct_extremal_fan_free(n, FanSpec::new(k, r)?)?, out)
        }
        ConstructCmd::BoundedMax { nu, delta, out } => {
            (construct_bounded_max(BoundedPair::new(nu, delta)?)?, out)
        }
    };
    write_out(&out, &io::write_graph(&g))?;
    println!("wrote {} vertices, {} edges to {}", g.n(), g.edge_count(), out.display());
    Ok(())
}

fn witness_json(w: &FanWitness) -> serde_json::Value {
    serde_json::to_value(w).expect("serializable")
}

fn detect(cmd: DetectCmd) -> Result<()> {
    match cmd {
        DetectCmd::Clique { graph, r, json } => {
            let g = load_graph(&graph)?;
            match contains_clique(&g, r) {
                Some(c) => print_value(
                    json,
                    format!("found: {:?}", c.as_slice()),
                    json!({"found": true, "vertices": c.as_slice()}),
                ),
                None => print_value(json, "not found".into(), json!({"found": false})),
            }
        }
        DetectCmd::Fan { graph, k, r, json } => {
            let g = load_graph(&graph)?;
            match find_fan(&g, FanSpec::new(k, r)?) {
                Some(w) => print_value(
                    json,
                    format!("found: center {}, cliques {:?}", w.center, w.cliques),
                    json!({"found": true, "witness": witness_json(&w)}),
                ),
                None => print_value(json, "not found".into(), json!({"found": false})),
            }
        }
        DetectCmd::RainbowFan { coloring, graph, k, r, json } => {
            let text = fs::read_to_string(&coloring)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let col = io::read_coloring(&text)?;
            let host = graph.as_ref().map(load_graph).transpose()?;
            match find_rainbow_fan(&col, host.as_ref(), FanSpec::new(k, r)?)? {
                Some(w) => print_value(
                    json,
                    format!(
                        "found: center {}, cliques {:?}, colors {:?}",
                        w.center, w.cliques, w.colors
                    ),
                    json!({"found": true, "witness": witness_json(&w)}),
                ),
                None => print_value(json, "not found".into(), json!({"found": false})),
            }
        }
    }
    Ok(())
}

fn color(cmd: ColorCmd) -> Result<()> {
    match cmd {
        ColorCmd::LowerBound { n, k, r, out } => {
            let col = lower_bound_coloring(n, FanSpec::new(k, r)?)?;
            write_out(&out, &io::write_coloring(&col))?;
            println!("wrote {}-coloring of K_{} to {}", col.num_colors(), n, out.display());
        }
    }
    Ok(())
}

fn oracle_record(
    parameters: serde_json::Value,
    value: usize,
    witness_file: Option<&PathBuf>,
    nodes: u64,
    elapsed: std::time::Duration,
) -> serde_json::Value {
    json!({
        "parameters": parameters,
        "value": value,
        "witness_file": witness_file.map(|p| p.display().to_string()),
        "nodes": nodes,
        "elapsed_secs": elapsed.as_secs_f64(),
    })
}

fn oracle(cmd: OracleCmd) -> Result<()> {
    let record = match cmd {
        OracleCmd::Ex { n, r, k, witness_out, budget } => {
            let forbidden = match k {
                Some(k) => Forbidden::Fan(FanSpec::new(k, r)?),
                None => Forbidden::Clique(r),
            };
            let out = brute_force_ex(n, forbidden, &budget.to_budget())?;
            if let Some(path) = &witness_out {
                write_out(path, &io::write_graph(&out.witness))?;
            }
            oracle_record(
                json!({"n": n, "r": r, "k": k}),
                out.value,
                witness_out.as_ref(),
                out.nodes,
                out.elapsed,
            )
        }
        OracleCmd::F { nu, delta, witness_out, budget } => {
            let out = brute_force_f(nu, delta, &budget.to_budget())?;
            if let Some(path) = &witness_out {
                write_out(path, &io::write_graph(&out.witness))?;
            }
            oracle_record(
                json!({"nu": nu, "delta": delta}),
                out.value,
                witness_out.as_ref(),
                out.nodes,
                out.elapsed,
            )
        }
        OracleCmd::Ar { n, k, r, witness_out, budget } => {
            let out = brute_force_ar(n, FanSpec::new(k, r)?, &budget.to_budget())?;
            if let Some(path) = &witness_out {
                match &out.witness {
                    Some(col) => write_out(path, &io::write_coloring(col))?,
                    None => bail!("no rainbow-free coloring exists to write"),
                }
            }
            oracle_record(
                json!({"n": n, "k": k, "r": r}),
                out.value,
                witness_out.as_ref(),
                out.nodes,
                out.elapsed,
            )
        }
    };
    println!("{}", serde_json::to_string_pretty(&record).expect("serializable"));
    Ok(())
}

fn verify(cmd: VerifyCmd) -> Result<()> {
    match cmd {
        VerifyCmd::LowerBound { n, k, r, json } => {
            let rep = verify_lower_bound(n, k, r)?;
            let passed = rep.passed();
            print_value(
                json,
                format!(
                    "{}: {} colors, fan_free={}, rainbow_free={}",
                    if passed { "pass" } else { "FAIL" },
                    rep.colors_used,
                    rep.fan_free,
                    rep.rainbow_free
                ),
                serde_json::to_value(&rep).expect("serializable"),
            );
        }
        VerifyCmd::Grid { k_min, k_max, r_min, r_max, n_min, n_max, json } => {
            let cells = verify_formula_grid(k_min..=k_max, r_min..=r_max, n_min..=n_max)?;
            let failures = cells.iter().filter(|c| !c.passed()).count();
            print_value(
                json,
                format!("{} cells, {} failures", cells.len(), failures),
                json!({
                    "cells": cells.len(),
                    "failures": failures,
                    "reports": cells,
                }),
            );
        }
        VerifyCmd::Partition { graph, partition, k, json } => {
            let g = load_graph(&graph)?;
            let parts = load_partition(g.n(), &partition)?;
            let props = verify_partition_properties(&g, &parts, k);
            print_value(
                json,
                format!(
                    "class_sizes={}, inner_bounds={}, local_bounds={}",
                    props.class_sizes, props.inner_bounds, props.local_bounds
                ),
                serde_json::to_value(props).expect("serializable"),
            );
        }
        VerifyCmd::Lemma28 { graph, partition, k, json } => {
            let g = load_graph(&graph)?;
            let parts = load_partition(g.n(), &partition)?;
            let rep = edgelow_deficit(&g, &parts, k);
            let holds = rep.deficit <= rep.bound as i64;
            print_value(
                json,
                format!(
                    "deficit {} vs bound {}: {}",
                    rep.deficit,
                    rep.bound,
                    if holds { "holds" } else { "VIOLATED" }
                ),
                json!({
                    "inner_edges": rep.inner_edges,
                    "cross_missing": rep.cross_missing,
                    "deficit": rep.deficit,
                    "bound": rep.bound,
                    "holds": holds,
                }),
            );
        }
    }
    Ok(())
}

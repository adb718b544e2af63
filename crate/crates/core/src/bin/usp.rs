//! `usp`: command-line front end. Exit status 0 on success, 1 when an
//! analysis fails, 2 on usage or input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use usp_graph::factor::{describe_factors, prime_factorize_small, DEFAULT_CLASS_BOUND};
use usp_graph::harness::{run_all, square_property_summary, HarnessInput, HarnessOptions};
use usp_graph::io::{export_quotient_dot, export_weighted_dot, parse_instance};
use usp_graph::partition::{class_partition, common_refinement, complement_partition, is_equitable, Equitability};
use usp_graph::product::{verify_loopless_decomposition, verify_quotient_decomposition, verify_weighted_decomposition};
use usp_graph::quotient::{quotient_graph, weighted_quotient};
use usp_graph::square_property::{compute_delta, delta_pairs};
use usp_graph::usp::{certify_usp, CertifiedUsp, UspBudget, UspStatus};
use usp_graph::{EdgeRelation, Error, Instance, LabeledRelation, VertexPartition};

#[derive(Parser)]
#[command(name = "usp", version, about = "Edge relations, vertex partitions and quotient products of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count δ pairs and list the δ*-classes.
    Delta { file: PathBuf },
    /// Decide whether the relation is a USP-relation and whether it has the
    /// square property.
    Check {
        file: PathBuf,
        /// Instance file whose edge labels give a finer candidate relation.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Search nodes for the refinement search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print the class, complement and common-refinement partitions.
    Partitions { file: PathBuf },
    /// Print the quotient by the common refinement.
    Quotient {
        file: PathBuf,
        /// Print the directed quotient with arc weights.
        #[arg(long)]
        weighted: bool,
        /// Also write the quotient as DOT to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Verify the product decompositions of the quotient.
    Decompose { file: PathBuf },
    /// Factor the graph into Cartesian primes.
    Factor {
        file: PathBuf,
        /// Give up above this many δ*-classes.
        #[arg(long, default_value_t = DEFAULT_CLASS_BOUND)]
        bound: usize,
    },
    /// Run every statement check and print a report.
    Verify {
        file: PathBuf,
        /// Recorded in the report.
        #[arg(long)]
        seed: Option<u64>,
        /// JSON Lines instead of text.
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    /// Bad input: exit status 2.
    Input(String),
    /// The analysis ran and came out negative: exit status 1. The message
    /// is printed after the regular output.
    Analysis(String),
}

type Outcome = Result<String, (String, Failure)>;

fn input(e: impl std::fmt::Display) -> (String, Failure) {
    (String::new(), Failure::Input(e.to_string()))
}

fn load(path: &Path) -> Result<Instance, (String, Failure)> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

/// The labeled relation of the file, or δ* when the edges carry no labels.
fn relation_of(inst: &Instance, out: &mut String) -> LabeledRelation {
    match &inst.relation {
        Some(r) => r.clone(),
        None => {
            out.push_str("relation: delta* (the file has no edge labels)\n");
            let d = compute_delta(&inst.graph);
            let labels = (0..d.class_count()).map(|c| format!("d{c}")).collect();
            LabeledRelation { relation: d, labels }
        }
    }
}

fn block_list(inst: &Instance, p: &VertexPartition) -> String {
    p.blocks()
        .iter()
        .map(|b| {
            let names: Vec<&str> = b.iter().map(|&v| inst.name_of(v)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn delta(file: &Path) -> Outcome {
    let inst = load(file)?;
    let g = &inst.graph;
    let d = compute_delta(g);
    let mut out = String::new();
    let _ = writeln!(out, "delta pairs: {}", delta_pairs(g).len());
    let _ = writeln!(out, "delta* classes: {}", d.class_count());
    for (c, class) in d.classes().iter().enumerate() {
        let edges: Vec<String> = class
            .iter()
            .map(|&e| {
                let (a, b) = inst.edge_names(e);
                format!("[{a},{b}]")
            })
            .collect();
        let _ = writeln!(out, "  d{c}: {}", edges.join(" "));
    }
    Ok(out)
}

/// Edges of `w` mapped onto `inst` by vertex names.
fn witness_from_file(inst: &Instance, path: &Path) -> Result<EdgeRelation, (String, Failure)> {
    let w = load(path)?;
    let Some(wr) = w.relation() else {
        return Err(input(format!("{}: witness file has no edge labels", path.display())));
    };
    if w.graph.edge_count() != inst.graph.edge_count() {
        return Err(input("witness file has a different edge set"));
    }
    let mut ids = vec![0; inst.graph.edge_count()];
    for e in 0..w.graph.edge_count() {
        let (a, b) = w.edge_names(e);
        let (Some(u), Some(v)) = (inst.vertex(a), inst.vertex(b)) else {
            return Err(input(format!("witness file names an unknown vertex in [{a},{b}]")));
        };
        let Some(f) = inst.graph.edge_between(u, v) else {
            return Err(input(format!("[{a},{b}] is not an edge of the instance")));
        };
        ids[f] = wr.class_of(e);
    }
    EdgeRelation::from_class_ids(&inst.graph, ids).map_err(input)
}

fn check(file: &Path, witness: Option<&Path>, budget: Option<u64>) -> Outcome {
    let inst = load(file)?;
    let mut out = String::new();
    let r = relation_of(&inst, &mut out);
    let w = match witness {
        Some(p) => Some(witness_from_file(&inst, p)?),
        None => inst.witness().cloned(),
    };
    let mut b = UspBudget::default();
    if let Some(n) = budget {
        b.max_nodes = n;
    }
    let status = certify_usp(&inst.graph, &r.relation, w.as_ref(), &b).map_err(input)?;
    let usp = match &status {
        UspStatus::HasUsp | UspStatus::UspByWitness(_) => "yes".to_string(),
        UspStatus::NotUsp => "no".to_string(),
        UspStatus::Unknown { explored } => format!("unknown (budget exhausted after {explored} search nodes)"),
    };
    let sq = square_property_summary(&inst.graph, &r.relation, &inst.vertex_names);
    let square = match &sq.witness {
        None => "yes".to_string(),
        Some(w) => format!("no (witness {w})"),
    };
    let _ = writeln!(out, "USP: {usp}; square property: {square}");
    match status {
        UspStatus::HasUsp => out.push_str("certificate: the relation has the unique square property\n"),
        UspStatus::UspByWitness(w) => {
            let _ = writeln!(
                out,
                "certificate: a finer relation with {} classes has the unique square property",
                w.class_count()
            );
        }
        UspStatus::NotUsp => return Err((out, Failure::Analysis("not a USP-relation".into()))),
        UspStatus::Unknown { .. } => return Err((out, Failure::Analysis("undecided".into()))),
    }
    Ok(out)
}

fn matrix_lines(out: &mut String, rows: &[Vec<usize>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
}

fn partitions(file: &Path) -> Outcome {
    let inst = load(file)?;
    let mut out = String::new();
    let r = relation_of(&inst, &mut out);
    let g = &inst.graph;
    for (c, label) in r.labels.iter().enumerate() {
        let inside = class_partition(g, &r.relation, c).map_err(input)?;
        let outside = complement_partition(g, &r.relation, c).map_err(input)?;
        let _ = writeln!(out, "class {label}");
        let _ = writeln!(out, "  components of G_{label}: {}", block_list(&inst, &inside));
        let _ = writeln!(out, "  components of the complement: {}", block_list(&inst, &outside));
    }
    let p = common_refinement(g, &r.relation).map_err(input)?;
    let _ = writeln!(out, "P^R: {}", block_list(&inst, &p));
    match is_equitable(g, &p).map_err(input)? {
        Equitability::Equitable(m) => {
            out.push_str("equitable: yes\ndegree matrix:\n");
            matrix_lines(&mut out, m.rows());
        }
        Equitability::Violated(v) => {
            let _ = writeln!(
                out,
                "equitable: no ({} has {} and {} has {} neighbors in block {})",
                inst.name_of(v.x),
                v.x_count,
                inst.name_of(v.other),
                v.other_count,
                v.b
            );
            return Err((out, Failure::Analysis("P^R is not equitable".into())));
        }
    }
    Ok(out)
}

fn quotient(file: &Path, weighted: bool, dot: Option<&Path>) -> Outcome {
    let inst = load(file)?;
    let mut out = String::new();
    let r = relation_of(&inst, &mut out);
    let g = &inst.graph;
    let p = common_refinement(g, &r.relation).map_err(input)?;
    for (b, block) in p.blocks().iter().enumerate() {
        let names: Vec<&str> = block.iter().map(|&v| inst.name_of(v)).collect();
        let _ = writeln!(out, "B{b} = {{{}}}", names.join(","));
    }
    let text = if weighted {
        let w = match weighted_quotient(g, &p) {
            Ok(w) => w,
            Err(Error::NotEquitable) => {
                return Err((out, Failure::Analysis("P^R is not equitable; no weighted quotient".into())))
            }
            Err(e) => return Err(input(e)),
        };
        for (a, b, x) in w.arcs() {
            let _ = writeln!(out, "B{a} -> B{b} weight {x}");
        }
        export_weighted_dot(&inst.name, &w)
    } else {
        let q = quotient_graph(g, &p).map_err(input)?;
        for (a, b) in q.graph.edges() {
            if a == b {
                let _ = writeln!(out, "B{a} loop");
            } else {
                let _ = writeln!(out, "B{a} -- B{b}");
            }
        }
        export_quotient_dot(&inst.name, &q.graph)
    };
    if let Some(path) = dot {
        std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))?;
    }
    Ok(out)
}

fn decompose(file: &Path) -> Outcome {
    let inst = load(file)?;
    let mut out = String::new();
    let r = relation_of(&inst, &mut out);
    let c = match CertifiedUsp::certify(&inst.graph, &r.relation, inst.witness(), &UspBudget::default()) {
        Ok(c) => c,
        Err(Error::NotCertifiedUsp) => {
            return Err((out, Failure::Analysis("the relation is not a certified USP-relation".into())))
        }
        Err(e) => return Err(input(e)),
    };
    let d = match verify_quotient_decomposition(&c) {
        Ok(d) => d,
        Err(e) => return Err((out, Failure::Analysis(format!("quotient decomposition failed: {e}")))),
    };
    let _ = writeln!(out, "P^R: {}", block_list(&inst, &d.partition));
    let _ = writeln!(
        out,
        "quotient: {} vertices, {} edges, {} loops",
        d.quotient.vertex_count(),
        d.quotient.edge_count() - d.quotient.loop_count(),
        d.quotient.loop_count()
    );
    for (label, f) in r.labels.iter().zip(&d.factors) {
        let _ = writeln!(
            out,
            "factor {label}: {} vertices, {} edges, {} loops",
            f.vertex_count(),
            f.edge_count() - f.loop_count(),
            f.loop_count()
        );
    }
    for (b, t) in d.tuples.iter().enumerate() {
        let coords: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  B{b} -> ({})", coords.join(","));
    }
    out.push_str("quotient decomposition: verified\n");
    match verify_weighted_decomposition(&c) {
        Ok(_) => out.push_str("weighted decomposition: verified\n"),
        Err(e) => return Err((out, Failure::Analysis(format!("weighted decomposition failed: {e}")))),
    }
    match verify_loopless_decomposition(&c) {
        Ok(_) => out.push_str("loopless decomposition: verified\n"),
        Err(Error::PreconditionNotMet(why)) => {
            let _ = writeln!(out, "loopless decomposition: not applicable ({why})");
        }
        Err(e) => return Err((out, Failure::Analysis(format!("loopless decomposition failed: {e}")))),
    }
    Ok(out)
}

fn factor(file: &Path, bound: usize) -> Outcome {
    let inst = load(file)?;
    match prime_factorize_small(&inst.graph, bound) {
        Ok(f) => Ok(format!("{}\n", describe_factors(&f.factors))),
        Err(e @ Error::BudgetExceeded(_)) => Err((String::new(), Failure::Analysis(e.to_string()))),
        Err(e) => Err(input(e)),
    }
}

fn verify(file: &Path, seed: Option<u64>, json: bool) -> Outcome {
    let inst = load(file)?;
    let mut prefix = String::new();
    let r = relation_of(&inst, &mut prefix);
    let mut harness_input = HarnessInput::new(&inst.name, &inst.graph, &r.relation);
    harness_input.witness = inst.witness();
    harness_input.vertex_names = Some(inst.vertex_names.clone());
    harness_input.class_labels = Some(r.labels.clone());
    let opts = HarnessOptions {
        seed,
        ..Default::default()
    };
    let report = run_all(&harness_input, &opts).map_err(input)?;
    let out = if json {
        report.to_json_lines()
    } else {
        prefix + &report.to_human()
    };
    if report.has_failures() {
        Err((out, Failure::Analysis("some checks failed".into())))
    } else {
        Ok(out)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let outcome = match &cli.command {
        Command::Delta { file } => delta(file),
        Command::Check { file, witness, budget } => check(file, witness.as_deref(), *budget),
        Command::Partitions { file } => partitions(file),
        Command::Quotient { file, weighted, dot } => quotient(file, *weighted, dot.as_deref()),
        Command::Decompose { file } => decompose(file),
        Command::Factor { file, bound } => factor(file, *bound),
        Command::Verify { file, seed, json } => verify(file, *seed, *json),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, Failure::Analysis(msg))) => {
            print!("{out}");
            eprintln!("usp: {msg}");
            ExitCode::from(1)
        }
        Err((out, Failure::Input(msg))) => {
            print!("{out}");
            eprintln!("usp: {msg}");
            ExitCode::from(2)
        }
    }
}

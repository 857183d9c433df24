//! Command-line front end.
//!
//! Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure,
//! 3 sieve discrepancies.

use gq_cli::formats;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use formats::{GeometryDocument, GroupDocument, SieveReportDocument};
use gq_core::constructions::{classical_gq, regular_hyperoval, t2_star, ClassicalFamily};
use gq_core::geometry::IncidenceGraph;
use gq_core::permgroup::DEFAULT_SEED;
use gq_core::sieve::{
    parameter_feasible, pbounds_check, replicate_table, solve_order_equation, TableId,
};
use gq_core::symmetry::{
    antiflags, flags, induced_collineations, is_antiflag_transitive, is_flag_transitive,
    is_locally_s_arc_transitive, t2star_collineations, CollineationGroup,
};

#[derive(Parser)]
#[command(name = "gq", version, about = "Generalized quadrangle toolkit")]
struct Cli {
    /// Seed for the randomized phase of the group engine.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a quadrangle and write it as a geometry document.
    Construct(ConstructArgs),
    /// Verify a geometry document and print its order.
    Verify { path: PathBuf },
    /// Test a group document against a geometry document.
    Symmetry(SymmetryArgs),
    /// Recompute a catalogued table or run ad-hoc feasibility checks.
    Sieve(SieveArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Classical family tag (W3, Q4, Qminus5, H3, H4, H4dual).
    #[arg(long, conflicts_with = "t2star")]
    family: Option<String>,
    /// Build the hyperoval quadrangle instead of a classical family.
    #[arg(long)]
    t2star: bool,
    #[arg(long)]
    q: u64,
    /// Output path for the geometry document.
    #[arg(long)]
    out: PathBuf,
    /// Also emit the collineation group found for this construction.
    #[arg(long)]
    group_out: Option<PathBuf>,
    /// Override the per-family parameter cap.
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct SymmetryArgs {
    geometry: PathBuf,
    group: PathBuf,
    /// One of: flag, antiflag, local-arc=<s>.
    #[arg(long)]
    test: String,
}

#[derive(Args)]
struct SieveArgs {
    /// Table id: Pi, C5, PSU12, NotNovelty, Delta, O1, O2, Leftover.
    #[arg(long)]
    table: Option<String>,
    /// Point count N for the order equation.
    #[arg(long)]
    order: Option<u64>,
    /// Parameter t for the order equation.
    #[arg(long)]
    t: Option<u64>,
    /// Candidate order "s,t" for the parameter tests.
    #[arg(long)]
    pair: Option<String>,
    /// Also write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            classify_error(&e)
        }
    };
    ExitCode::from(code)
}

/// Map an error chain onto the exit-code contract.
fn classify_error(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.is::<std::io::Error>() || cause.is::<serde_json::Error>() {
            return 2;
        }
    }
    1
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Verify { path } => cmd_verify(path),
        Command::Symmetry(args) => cmd_symmetry(args, cli.seed),
        Command::Sieve(args) => cmd_sieve(args),
    }
}

fn cmd_construct(args: ConstructArgs) -> anyhow::Result<u8> {
    let (gq, tag, group) = if args.t2star {
        let h = regular_hyperoval(args.q)?;
        let (gq, data) = t2_star(&h)?;
        let group = match args.group_out {
            Some(_) => Some(t2star_collineations(&gq, &data)?),
            None => None,
        };
        (gq, "T2*".to_string(), group)
    } else {
        let name = args.family.ok_or_else(|| anyhow!("need --family or --t2star"))?;
        let family =
            ClassicalFamily::parse(&name).ok_or_else(|| anyhow!("unknown family `{name}`"))?;
        let (gq, data) = classical_gq(family, args.q, args.cap)?;
        let group = match args.group_out {
            Some(_) => Some(induced_collineations(&gq, &data)?),
            None => None,
        };
        (gq, family.name().to_string(), group)
    };
    let doc = GeometryDocument::from_quadrangle(&gq, Some(tag.clone()), Some(args.q));
    formats::write_json(&args.out, &doc)?;
    println!(
        "{tag} q={}: order ({},{}), {} points, {} lines -> {}",
        args.q,
        gq.s(),
        gq.t(),
        gq.num_points(),
        gq.num_lines(),
        args.out.display()
    );
    if let (Some(path), Some(cg)) = (args.group_out, group) {
        let gdoc = GroupDocument::from_group(cg.group());
        formats::write_json(&path, &gdoc)?;
        println!("collineation group of order {} -> {}", cg.order(), path.display());
    }
    Ok(0)
}

fn cmd_verify(path: PathBuf) -> anyhow::Result<u8> {
    let doc: GeometryDocument = formats::read_json(&path)?;
    let gq = doc.verify()?;
    let (s, t) = gq.order();
    let st1 = s as u64 * t as u64 + 1;
    println!("({s},{t}), OK");
    println!(
        "points {} = (s+1)(st+1) = {}, lines {} = (t+1)(st+1) = {}",
        gq.num_points(),
        (s as u64 + 1) * st1,
        gq.num_lines(),
        (t as u64 + 1) * st1
    );
    let v = parameter_feasible(s as u64, t as u64);
    println!(
        "divisibility: {}, square bounds: {}, gap bounds: {}",
        v.divisibility, v.square_bounds, v.gap_bounds
    );
    Ok(0)
}

fn cmd_symmetry(args: SymmetryArgs, seed: u64) -> anyhow::Result<u8> {
    let gdoc: GeometryDocument = formats::read_json(&args.geometry)?;
    let gq = gdoc.verify()?;
    let pdoc: GroupDocument = formats::read_json(&args.group)?;
    let group = pdoc.to_group(seed)?;
    let cg = CollineationGroup::new(&gq, group)?;

    if args.test == "flag" {
        let ok = is_flag_transitive(&cg, &gq)?;
        println!("flag-transitive: {ok} (flags: {})", flags(&gq).len());
        Ok(0)
    } else if args.test == "antiflag" {
        let ok = is_antiflag_transitive(&cg, &gq)?;
        println!("antiflag-transitive: {ok} (antiflags: {})", antiflags(&gq).len());
        Ok(0)
    } else if let Some(s) = args.test.strip_prefix("local-arc=") {
        let s: u32 = s.parse()?;
        if s > 4 {
            bail!("local arc tests are scoped to s <= 4");
        }
        let graph = IncidenceGraph::from_quadrangle(&gq);
        let ok = is_locally_s_arc_transitive(&cg, &graph, s)?;
        println!("locally {s}-arc-transitive: {ok}");
        Ok(0)
    } else {
        bail!("unknown test `{}`; use flag, antiflag, or local-arc=<s>", args.test)
    }
}

fn cmd_sieve(args: SieveArgs) -> anyhow::Result<u8> {
    if let Some(table) = args.table {
        let id = TableId::parse(&table)?;
        let report = replicate_table(id)?;
        print!("{}", report.render_text());
        if let Some(path) = args.json {
            formats::write_json(&path, &SieveReportDocument::from_report(&report))?;
        }
        return Ok(if report.discrepancy_count > 0 { 3 } else { 0 });
    }
    if let (Some(n), Some(t)) = (args.order, args.t) {
        let sol = solve_order_equation(&BigUint::from(n), &BigUint::from(t));
        let bounds = pbounds_check(&BigUint::from(n), t);
        print!("N = {n}, t = {t}: Delta = {}", sol.delta);
        if sol.delta_is_square {
            print!(" = {}^2", gq_core::sieve::isqrt(&sol.delta));
        }
        match &sol.s {
            Some(s) => println!(", s = {s}"),
            None if sol.delta_is_square => println!(", s non-integral, no quadrangle"),
            None => println!(", not a square, no quadrangle"),
        }
        println!("window bound (t+1)^2 < N < (t+1)^3: {}", bounds.holds);
        return Ok(0);
    }
    if let Some(pair) = args.pair {
        let (s, t) = pair.split_once(',').ok_or_else(|| anyhow!("--pair wants s,t"))?;
        let v = parameter_feasible(s.trim().parse()?, t.trim().parse()?);
        if v.feasible {
            println!("({},{}) feasible", v.s, v.t);
        } else {
            println!("({},{}) infeasible: {}", v.s, v.t, v.witness.unwrap_or_default());
        }
        return Ok(0);
    }
    bail!("need --table, --order with --t, or --pair")
}

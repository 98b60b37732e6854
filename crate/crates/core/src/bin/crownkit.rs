use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crownkit::blocks::{all_block_systems, maximal_block_systems};
use crownkit::crowns::all_crowns;
use crownkit::lattice::{chief_series, generated, maximal_overgroups};
use crownkit::par;
use crownkit::permcore::{indices_of, is_soluble, Permutation};
use crownkit::verify::{load_catalog, resolve_group, run_suite, sigma_rho_report, Suite, SuiteOptions};
use crownkit::{Error, Result};

/// Permutation group toolkit: block systems, maximal overgroups, crowns and
/// catalog verification.
#[derive(Parser)]
#[command(name = "crownkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Block systems of a transitive group.
    Blocks(BlocksArgs),
    /// Maximal subgroups of a group containing a subgroup.
    Maxsub(MaxsubArgs),
    /// Chief series and crowns.
    Crowns(GroupArg),
    /// Run a verification suite over a catalog.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GroupArg {
    /// Builtin expression such as `Sym(4)`, a desk catalog name, or a
    /// catalog file (first entry).
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct BlocksArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Base point, 1-based.
    #[arg(long, default_value_t = 1)]
    point: usize,
    /// List every block system instead of the maximal ones.
    #[arg(long, conflicts_with = "maximal")]
    all: bool,
    #[arg(long)]
    maximal: bool,
    /// Drop the singleton system of a primitive group.
    #[arg(long)]
    exclude_trivial: bool,
}

#[derive(Args)]
struct MaxsubArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Generators in cycle notation separated by `;`, e.g. `(1 2);(3 4)`.
    #[arg(long, allow_hyphen_values = true)]
    subgroup: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON-lines catalog, a builtin expression, or `desk`.
    #[arg(long)]
    catalog: PathBuf,
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long)]
    max_order: Option<usize>,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
    /// Report path; `.json` selects JSON, anything else TSV.
    #[arg(long)]
    out: PathBuf,
}

fn blocks(a: &BlocksArgs) -> Result<i32> {
    let g = resolve_group(&a.group.group)?;
    if a.point == 0 || a.point > g.degree() {
        return Err(Error::PointOutOfRange { point: a.point, degree: g.degree() });
    }
    let omega = a.point - 1;
    let mut systems = if a.all { all_block_systems(&g, omega)? } else { maximal_block_systems(&g, omega, a.exclude_trivial)? };
    if a.all && a.exclude_trivial {
        systems.retain(|s| !s.is_trivial());
    }
    println!("# {} degree {} order {}", g.name(), g.degree(), g.order());
    for s in &systems {
        println!("{s}");
    }
    println!("# {} {} systems", systems.len(), if a.all { "block" } else { "maximal" });
    Ok(0)
}

fn maxsub(a: &MaxsubArgs) -> Result<i32> {
    let g = resolve_group(&a.group.group)?;
    let gens = a
        .subgroup
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Permutation::parse_cycles(s, g.degree()))
        .collect::<Result<Vec<_>>>()?;
    let h = generated(&g, &indices_of(&g, &gens)?);
    let overs = maximal_overgroups(&g, &h)?;
    println!("group\t{}", g.name());
    println!("H\t{}", h.descriptor(&g));
    println!("index\t{}", g.order() / h.order());
    println!("max_count\t{}", overs.len());
    println!("soluble\t{}", if is_soluble(&g)? { "yes" } else { "no" });
    for m in &overs {
        println!("maximal\t{}\t{}", m.order(), m.descriptor(&g));
    }
    if h.order() < g.order() {
        match sigma_rho_report(&g, &h) {
            Ok(r) => println!("sigma\t{}\nrho\t{}", r.sigma.unwrap_or(0), r.rho.unwrap_or(0)),
            Err(e) => println!("sigma\t-\t{e}"),
        }
    }
    Ok(0)
}

fn crowns(a: &GroupArg) -> Result<i32> {
    let g = resolve_group(&a.group)?;
    let series = chief_series(&g, 0)?;
    println!("# {} order {}", g.name(), g.order());
    for f in &series.factors {
        let kind = if !f.is_abelian {
            "nonabelian"
        } else if f.is_frattini {
            "frattini"
        } else {
            "abelian"
        };
        println!("factor\t{}/{}\t{}\t{kind}", f.upper.order(), f.lower.order(), f.order());
    }
    for c in all_crowns(&g)? {
        println!(
            "crown\tA={}/{}\tdelta={}\t|R|={}\t|I|={}\t|L_A|={}\tR={}",
            c.factor.upper.order(),
            c.factor.lower.order(),
            c.delta,
            c.r.order(),
            c.i.order(),
            c.l_a.order(),
            c.r.descriptor(&g)
        );
    }
    Ok(0)
}

fn verify(a: &VerifyArgs) -> Result<i32> {
    let suite: Suite = a.suite.parse()?;
    let entries = load_catalog(&a.catalog)?;
    let opts = SuiteOptions { max_order: a.max_order };
    let report = match a.jobs {
        Some(j) => par::with_jobs(j, || run_suite(&entries, suite, &opts)),
        None => run_suite(&entries, suite, &opts),
    };
    let json = a.out.extension().is_some_and(|e| e == "json");
    let text = if json { report.to_json() } else { report.to_tsv() };
    std::fs::write(&a.out, text).map_err(|e| Error::Io(format!("{}: {e}", a.out.display())))?;
    let s = &report.summary;
    eprintln!(
        "{} pairs, {} checks: {} pass, {} fail, {} skipped, {} cap, {} error",
        s.pairs, s.checks, s.pass, s.fail, s.skipped, s.capped, s.errors
    );
    for r in report.rows.iter().filter(|r| matches!(r.verdict, crownkit::verify::Verdict::Fail | crownkit::verify::Verdict::Error)) {
        eprintln!("{}: {} {}: {}", r.verdict, r.group, r.h, r.note);
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Blocks(a) => blocks(a),
        Command::Maxsub(a) => maxsub(a),
        Command::Crowns(a) => crowns(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("crownkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

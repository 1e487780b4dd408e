//! `rrcomb` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rrcomb::bijections::{phi, psi, psi_inverse};
use rrcomb::durfee::{rank_2m, Comparison, DecompositionRecord, RankHistogram};
use rrcomb::fault::Fault;
use rrcomb::partition::{count_p, count_q};
use rrcomb::qseries::{self, TruncatedSeries};
use rrcomb::verify::{run_suite, verify_golden_examples, SuiteConfig};
use rrcomb::{Error, Partition};

#[derive(Parser)]
#[command(
    name = "rrcomb",
    version,
    about = "Durfee rectangles, rank bijections and q-series checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show the m-Durfee decomposition and rank of a partition.
    Decompose(MapArgs),
    /// Print the (2,m)-rank of a partition.
    Rank(MapArgs),
    /// Apply the rank-negating involution (m = 0).
    Phi(PhiArgs),
    /// Apply psi_{m,r}.
    Psi(PsiArgs),
    /// Apply the inverse of psi_{m,r}.
    PsiInv(PsiArgs),
    /// Print a truncated generating function.
    Series(SeriesArgs),
    /// Count partitions of n, optionally by (2,m)-rank.
    Count(CountArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Replay the five worked examples.
    Figures(JsonFlag),
}

#[derive(Args)]
struct PartitionInput {
    /// Parts, largest first, comma separated (e.g. 5,5,4,1).
    #[arg(allow_hyphen_values = true)]
    partition: Option<String>,
    /// Read the partition from a JSON array file instead.
    #[arg(long, value_name = "PATH", conflicts_with = "partition")]
    partition_file: Option<PathBuf>,
}

#[derive(Args)]
struct JsonFlag {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    input: PartitionInput,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[command(flatten)]
    out: JsonFlag,
}

#[derive(Args)]
struct PhiArgs {
    #[command(flatten)]
    input: PartitionInput,
    #[command(flatten)]
    out: JsonFlag,
}

#[derive(Args)]
struct PsiArgs {
    #[command(flatten)]
    input: PartitionInput,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    #[command(flatten)]
    out: JsonFlag,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// P(t) = 1/prod(1 - t^i)
    Euler,
    /// prod(1 - t^i)
    EulerProduct,
    RrSum,
    RrProduct,
    /// P(t) times the quintuple theta sum
    Schur,
    /// The theta sum alone
    Theta,
    /// Rank generating function H_{m,<=-r}; needs --m and --r
    Maltese,
    /// P(t) - Q(t)
    PMinusQ,
}

#[derive(Args)]
struct SeriesArgs {
    which: Which,
    /// Truncation order.
    #[arg(long = "N", value_name = "N")]
    order: usize,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    r: i64,
    #[command(flatten)]
    out: JsonFlag,
}

#[derive(Clone, Copy, ValueEnum)]
enum Cmp {
    Le,
    Ge,
    Eq,
}

impl From<Cmp> for Comparison {
    fn from(c: Cmp) -> Self {
        match c {
            Cmp::Le => Comparison::Le,
            Cmp::Ge => Comparison::Ge,
            Cmp::Eq => Comparison::Eq,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n: usize,
    /// Also tabulate (2,m)-ranks.
    #[arg(long)]
    m: Option<usize>,
    /// With --m: print h(n, m, <cmp> r) only.
    #[arg(long, requires = "m", allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long, value_enum, default_value = "le", requires = "r")]
    cmp: Cmp,
    #[command(flatten)]
    out: JsonFlag,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON file with suite ranges; omitted fields take their defaults.
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Override n_max from the config.
    #[arg(long)]
    n: Option<usize>,
    /// Override the series order from the config.
    #[arg(long = "N", value_name = "N")]
    order: Option<usize>,
    /// Emit one JSON report per line.
    #[arg(long)]
    json: bool,
    /// Include timing in JSON output.
    #[arg(long)]
    timing: bool,
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Consistency(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn dispatch(cmd: Command) -> CliResult {
    match cmd {
        Command::Decompose(a) => cmd_decompose(&read_partition(&a.input)?, a.m, a.out.json),
        Command::Rank(a) => cmd_rank(&read_partition(&a.input)?, a.m, a.out.json),
        Command::Phi(a) => cmd_phi(&read_partition(&a.input)?, a.out.json),
        Command::Psi(a) => cmd_psi(&read_partition(&a.input)?, a.m, a.r, false, a.out.json),
        Command::PsiInv(a) => cmd_psi(&read_partition(&a.input)?, a.m, a.r, true, a.out.json),
        Command::Series(a) => cmd_series(&a),
        Command::Count(a) => cmd_count(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Figures(a) => cmd_figures(a.json),
    }
}

fn read_partition(input: &PartitionInput) -> Result<Partition, Failure> {
    match (&input.partition, &input.partition_file) {
        (Some(text), None) => Ok(text.parse()?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        _ => Err(Failure::Usage(
            "expected a partition argument or --partition-file".into(),
        )),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("values serialize"));
}

fn rank_text(rank: Option<i64>, m: usize) -> String {
    match rank {
        Some(r) => r.to_string(),
        None if m == 0 => "undefined (Rogers-Ramanujan partition)".into(),
        None => "undefined".into(),
    }
}

fn cmd_decompose(lambda: &Partition, m: usize, as_json: bool) -> CliResult {
    let rec = DecompositionRecord::of(lambda, m)?;
    let rank = rank_2m(lambda, m);
    if as_json {
        print_json(&json!({
            "partition": lambda, "n": lambda.size(), "decomposition": rec, "rank": rank,
        }));
        return Ok(());
    }
    println!("lambda = {lambda}  n = {}  m = {m}", lambda.size());
    match rec.t {
        Some(t) => println!("s = {}, t = {t}", rec.s),
        None => println!("s = {}, t undefined", rec.s),
    }
    println!("alpha = {}", rec.alpha);
    println!("beta = {}", rec.beta);
    println!("gamma = {}", rec.gamma);
    println!(
        "rank {}",
        match rank {
            Some(r) => format!("= {r}"),
            None => rank_text(None, m),
        }
    );
    print!("{}", render::young_diagram(lambda, &rec));
    println!("{}", render::LEGEND);
    Ok(())
}

fn cmd_rank(lambda: &Partition, m: usize, as_json: bool) -> CliResult {
    let rank = rank_2m(lambda, m);
    if as_json {
        print_json(&json!({ "partition": lambda, "m": m, "rank": rank }));
    } else {
        println!("{}", rank_text(rank, m));
    }
    Ok(())
}

fn cmd_phi(lambda: &Partition, as_json: bool) -> CliResult {
    let image = phi(lambda)?;
    let (before, after) = (rank_2m(lambda, 0), rank_2m(&image, 0));
    if as_json {
        print_json(&json!({
            "input": lambda, "output": image, "rank_before": before, "rank_after": after,
        }));
    } else {
        println!(
            "lambda      = {lambda}  (n = {}, rank {})",
            lambda.size(),
            rank_text(before, 0)
        );
        println!(
            "phi(lambda) = {image}  (n = {}, rank {})",
            image.size(),
            rank_text(after, 0)
        );
    }
    Ok(())
}

fn cmd_psi(lambda: &Partition, m: usize, r: i64, inverse: bool, as_json: bool) -> CliResult {
    let (image, m_in, m_out, name) = if inverse {
        (psi_inverse(lambda, m, r)?, m + 2, m, "psi_inv")
    } else {
        (psi(lambda, m, r)?, m, m + 2, "psi")
    };
    let (before, after) = (rank_2m(lambda, m_in), rank_2m(&image, m_out));
    if as_json {
        print_json(&json!({
            "map": name, "m": m, "r": r, "input": lambda, "output": image,
            "rank_before": before, "rank_after": after,
        }));
    } else {
        println!(
            "input  = {lambda}  (n = {}, (2,{m_in})-rank {})",
            lambda.size(),
            rank_text(before, m_in)
        );
        println!(
            "output = {image}  (n = {}, (2,{m_out})-rank {})",
            image.size(),
            rank_text(after, m_out)
        );
    }
    Ok(())
}

fn build_series(a: &SeriesArgs) -> Result<TruncatedSeries, Failure> {
    let n = a.order;
    Ok(match a.which {
        Which::Euler => qseries::euler_inverse_product(n),
        Which::EulerProduct => qseries::euler_product(n),
        Which::RrSum => qseries::rr_sum_side(n),
        Which::RrProduct => qseries::rr_product_side(n),
        Which::Schur => qseries::schur_rhs(n),
        Which::Theta => qseries::schur_theta(n),
        Which::Maltese => qseries::maltese_series(a.m, a.r, n)?,
        Which::PMinusQ => &qseries::euler_inverse_product(n) - &qseries::rr_sum_side(n),
    })
}

fn cmd_series(a: &SeriesArgs) -> CliResult {
    let s = build_series(a)?;
    if a.out.json {
        println!("{}", serde_json::to_string(&s).expect("series serialize"));
    } else {
        println!("{s}");
    }
    Ok(())
}

fn cmd_count(a: &CountArgs) -> CliResult {
    let p = count_p(a.n);
    let q = count_q(a.n)?;
    let Some(m) = a.m else {
        if a.out.json {
            print_json(&json!({ "n": a.n, "p": p.to_string(), "q": q.to_string() }));
        } else {
            println!("p({}) = {p}", a.n);
            println!("q({}) = {q}", a.n);
        }
        return Ok(());
    };
    let hist = RankHistogram::tabulate(a.n, m)?;
    if let Some(r) = a.r {
        let cmp: Comparison = a.cmp.into();
        let h = hist.count(cmp, r);
        if a.out.json {
            print_json(&json!({ "n": a.n, "m": m, "cmp": cmp, "r": r, "h": h.to_string() }));
        } else {
            let sym = match a.cmp {
                Cmp::Le => "<=",
                Cmp::Ge => ">=",
                Cmp::Eq => "=",
            };
            println!("h({}, {m}, {sym} {r}) = {h}", a.n);
        }
        return Ok(());
    }
    if a.out.json {
        print_json(&json!({
            "n": a.n, "p": p.to_string(), "q": q.to_string(), "histogram": hist,
        }));
    } else {
        println!("p({}) = {p}", a.n);
        println!("q({}) = {q}", a.n);
        println!("(2,{m})-rank histogram:");
        for (rank, count) in &hist.counts {
            println!("{rank:>6} {count:>10}");
        }
        if hist.unranked > 0 {
            println!("unranked {:>8}", hist.unranked);
        }
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> CliResult {
    let mut config = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            SuiteConfig::from_json(&text)?
        }
        None => SuiteConfig::default(),
    };
    if let Some(n) = a.n {
        config.n_max = n;
    }
    if let Some(order) = a.order {
        config.series_order = Some(order);
    }
    if let Some(name) = &a.inject_fault {
        config.inject_fault = Some(name.parse::<Fault>().map_err(Failure::Usage)?);
    }
    let report = run_suite(&config)?;
    if a.json {
        print!("{}", report.to_json_lines(a.timing));
    } else {
        print!("{}", report.summary_table());
        for f in report.failures() {
            println!("FAIL {}", f.to_json_line(false));
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cmd_figures(as_json: bool) -> CliResult {
    let report = verify_golden_examples();
    if as_json {
        println!("{}", report.to_json_line(false));
    } else {
        let ex2: Partition = "10,10,9,9,7,6,5,4,4,2,2,1,1,1".parse()?;
        let ex3: Partition = "7,6,4,4,3,3,1".parse()?;
        for (lambda, m) in [(&ex2, 0), (&ex3, 2)] {
            let rec = DecompositionRecord::of(lambda, m)?;
            println!(
                "{lambda}, m = {m}, rank {}",
                rank_text(rank_2m(lambda, m), m)
            );
            print!("{}", render::young_diagram(lambda, &rec));
            println!();
        }
        println!(
            "examples: {} ({} checked)",
            if report.passed() { "PASS" } else { "FAIL" },
            report.examined
        );
        if let Some(cx) = &report.counterexample {
            println!("counterexample: {cx}");
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

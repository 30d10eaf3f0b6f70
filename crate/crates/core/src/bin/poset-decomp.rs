use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use poset_decomp::analyze::{analyze, chain_graph_dot, Analyses};
use poset_decomp::poset::{generate, parse_poset, write_poset, Family};
use poset_decomp::report::{PosetOutcome, RunReport, SuiteSummary};
use poset_decomp::verify::{run_suite, Mutation, Suite, VerifyOptions};
use poset_decomp::{Error, Scope};

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SCOPE: u8 = 3;

#[derive(Parser)]
#[command(name = "poset-decomp", version, about = "Chain decompositions of finite posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one poset file (`-` reads stdin).
    Analyze(AnalyzeArgs),
    /// Write a poset of a named family in the text format.
    #[command(alias = "gen")]
    Generate(GenerateArgs),
    /// Run a batch verification suite.
    Verify {
        #[command(subcommand)]
        suite: SuiteArgs,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    #[arg(long)]
    dilworth: bool,
    #[arg(long)]
    mhcd: bool,
    #[arg(long)]
    cut_check: bool,
    #[arg(long)]
    embedding: bool,
    #[arg(long)]
    inequalities: bool,
    /// Every analysis (the default when none is selected).
    #[arg(long)]
    all: bool,
    #[arg(long)]
    json: bool,
    /// Print the chain graph and its acyclic orientation in Graphviz format.
    #[arg(long)]
    dot: bool,
    #[command(flatten)]
    scope: ScopeArgs,
}

#[derive(Args)]
struct ScopeArgs {
    /// Lift every size cap on exhaustive searches.
    #[arg(long)]
    unsafe_scope: bool,
}

impl ScopeArgs {
    fn scope(&self) -> Scope {
        if self.unsafe_scope {
            eprintln!("warning: --unsafe-scope lifts all size caps; searches may not finish");
            Scope::unlimited()
        } else {
            Scope::default()
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Chain,
    Antichain,
    Boolean,
    Fig2,
    Random,
    Nested,
}

#[derive(Args)]
struct GenerateArgs {
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyCommon {
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    scope: ScopeArgs,
    /// Break one operator of one check (self-test of the verifier).
    #[arg(long, hide = true)]
    mutate: Option<String>,
}

#[derive(Subcommand)]
enum SuiteArgs {
    /// Every labeled poset with at most `nmax` elements.
    Exhaustive {
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        common: VerifyCommon,
    },
    /// Random posets, alternating DAG closures and nested-chain posets.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[command(flatten)]
        common: VerifyCommon,
    },
}

fn exit_for(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(match e {
        Error::Parse { .. }
        | Error::DuplicateLabel(_)
        | Error::UnknownElement(_)
        | Error::InvalidLabel(_)
        | Error::Cycle(_)
        | Error::NotAnOrder(_)
        | Error::InvalidParams(_) => EXIT_PARSE,
        Error::ScopeExceeded { .. } => EXIT_SCOPE,
        _ => EXIT_FAILURE,
    })
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report serializes")
}

fn print_report(r: &RunReport) {
    println!("poset: n = {}, {} covers", r.poset.n, r.poset.covers);
    if let Some(d) = &r.dilworth {
        println!("Min = {}", d.min);
        println!("  chains: {}", fmt_chains(&d.chains));
        println!("  antichain: {{{}}}", d.antichain.join(" "));
    }
    if let Some(m) = &r.mhcd {
        println!("Min_h = {}", m.min_h);
        println!("  MHCD: {}", fmt_chains(&m.chains));
        println!("  length classes (size, chains): {:?}", m.length_classes);
        println!("  G_P edges: {:?}", m.graph_edges);
        println!("  Asyc(G_P) arcs: {:?}", m.orientation_arcs);
    }
    if let Some(c) = &r.cut_check {
        println!(
            "cut identity: {}/{} admissible cuts, J invertible: {}",
            c.identity_holds, c.admissible_cuts, c.j_invertible
        );
    }
    if let Some(e) = &r.embedding {
        println!(
            "embedding: |Aut(P)| = {}, |Aut(Asyc(G_P)) ∩ O_P| = {}, |Aut(G_P) ∩ O_P| = {}",
            e.aut_poset, e.aut_oriented_in_op, e.aut_graph_in_op
        );
    }
    if let Some(q) = &r.inequalities {
        println!(
            "Min {} <= Min_nc {} <= Min_d {} <= Min_d^e {} <= Min_h {}",
            q.min, q.min_nc, q.min_d, q.min_d_e, q.min_h
        );
        println!("  e = {}", q.e.join(" "));
        println!("  pi = {} ({} p-descents)", q.pi.join(" "), q.pi_descents);
    }
    for f in &r.findings {
        println!("finding {}: {}", f.kind, f.detail);
    }
    for c in &r.checks {
        match &c.witness {
            None => println!("check {}: pass", c.name),
            Some(w) => println!("check {}: FAIL ({w})", c.name),
        }
    }
}

fn fmt_chains(chains: &[Vec<String>]) -> String {
    chains
        .iter()
        .map(|c| format!("{{{}}}", c.join(" < ")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

fn cmd_analyze(a: AnalyzeArgs) -> ExitCode {
    let scope = a.scope.scope();
    let text = match read_input(&a.file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", a.file.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let p = match parse_poset(&text) {
        Ok(p) => p,
        Err(e) => return exit_for(&e),
    };
    let mut which = Analyses {
        dilworth: a.dilworth,
        mhcd: a.mhcd,
        cut_check: a.cut_check,
        embedding: a.embedding,
        inequalities: a.inequalities,
    };
    if a.all || (which.is_empty() && !a.dot) {
        which = Analyses::all();
    }
    if a.dot {
        match chain_graph_dot(&p) {
            Ok(s) => print!("{s}"),
            Err(e) => return exit_for(&e),
        }
        if which.is_empty() {
            return ExitCode::SUCCESS;
        }
    }
    let r = match analyze(&p, which, &scope) {
        Ok(r) => r,
        Err(e) => return exit_for(&e),
    };
    if a.json {
        println!("{}", to_json(&r));
    } else {
        print_report(&r);
    }
    if r.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}

fn cmd_generate(g: GenerateArgs) -> ExitCode {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Error::InvalidParams(format!("this family needs --{flag}")))
    };
    let family = match g.family {
        FamilyName::Chain => need(g.n, "n").map(|n| Family::Chain { n }),
        FamilyName::Antichain => need(g.n, "n").map(|n| Family::Antichain { n }),
        FamilyName::Boolean => need(g.k, "k").map(|k| Family::Boolean { k }),
        FamilyName::Fig2 => need(g.k, "k").map(|k| Family::Fig2 { k }),
        FamilyName::Random => need(g.n, "n").map(|n| Family::Random { n, density: g.density }),
        FamilyName::Nested => need(g.n, "n").map(|n| Family::Nested { n }),
    };
    let p = match family.and_then(|f| generate(&f, g.seed)) {
        Ok(p) => p,
        Err(e) => return exit_for(&e),
    };
    let text = write_poset(&p);
    let written = match &g.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}

fn print_outcome(o: &PosetOutcome) {
    let status = if o.passed { "pass" } else { "FAIL" };
    println!("[{}] {} n={} {}: {}", o.index, o.family, o.poset.n, status, o.poset.text);
    for f in &o.failures {
        println!("  {} failed: {}", f.name, f.witness.as_deref().unwrap_or(""));
    }
}

fn print_summary(s: &SuiteSummary) {
    for (name, t) in &s.checks {
        println!("  {name}: {} passed, {} failed, {} skipped", t.passed, t.failed, t.skipped);
    }
    for (kind, count) in &s.findings {
        println!("  finding {kind}: {count}");
    }
    println!(
        "summary: {} posets, {}",
        s.posets,
        if s.passed { "all checks passed" } else { "FAILURES" }
    );
}

fn cmd_verify(suite: SuiteArgs) -> ExitCode {
    let (suite, common) = match suite {
        SuiteArgs::Exhaustive { nmax, common } => (Suite::Exhaustive { nmax }, common),
        SuiteArgs::Random { n, count, seed, density, common } => {
            (Suite::Random { n, count, seed, density }, common)
        }
    };
    let mutation = match common.mutate.as_deref().map(str::parse::<Mutation>).transpose() {
        Ok(m) => m,
        Err(e) => return exit_for(&e),
    };
    let opts = VerifyOptions {
        scope: common.scope.scope(),
        mutation,
        ..VerifyOptions::default()
    };
    let json = common.json;
    let result = run_suite(&suite, &opts, |o| {
        if json {
            println!("{}", to_json(o));
        } else {
            print_outcome(o);
        }
    });
    match result {
        Ok(s) => {
            if json {
                println!("{}", to_json(&s));
            } else {
                print_summary(&s);
            }
            if s.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(e) => exit_for(&e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Generate(g) => cmd_generate(g),
        Command::Verify { suite } => cmd_verify(suite),
    }
}

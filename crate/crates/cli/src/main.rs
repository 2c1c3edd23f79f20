use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use nilk::laurent::{self, linearize, NilRep};
use nilk::nil::{self, ChainVerdict, EsseWitness, SeWitness, SseChain};
use nilk::verify::{self, Options};
use nilk::{groupring, Error, Matrix, Report, Symbol};

#[derive(Parser)]
#[command(name = "nilk", version, about = "Reproduce and verify explicit NK1 / Nil0 representatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Latex,
}

impl Emit {
    fn ext(self) -> &'static str {
        match self {
            Emit::Json => "json",
            Emit::Latex => "tex",
        }
    }

    fn render(self, m: &Matrix) -> String {
        match self {
            Emit::Json => pretty(&m.to_json()),
            Emit::Latex => format!("{}\n", m.to_latex()),
        }
    }
}

#[derive(clap::Args)]
struct PipelineArgs {
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct MapArgs {
    /// Matrix JSON file.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
    /// Output file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the clutching construction over Q[t,s] and Higman's trick.
    Theorem3(PipelineArgs),
    /// Run the group-ring construction over Z[Z/4][x].
    Theorem4(PipelineArgs),
    /// Linearize an invertible matrix into a nilpotent block companion.
    Higman {
        #[command(flatten)]
        args: MapArgs,
        /// Polynomial variable to linearize in; defaults to s, then x, then t.
        #[arg(long)]
        var: Option<String>,
    },
    /// Verschiebung V_k of a nilpotent matrix.
    Versch {
        #[command(flatten)]
        args: MapArgs,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
    },
    /// Frobenius F_k of a nilpotent matrix.
    Frob {
        #[command(flatten)]
        args: MapArgs,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
    },
    /// Check an SSE chain, an ESSE pair or a shift-equivalence witness.
    SseVerify {
        file: PathBuf,
    },
    /// Run every verification check.
    VerifyAll {
        /// Exit 0 even when printed displays disagree with the computation.
        #[arg(long)]
        allow_known_typos: bool,
        #[arg(long)]
        json: bool,
        /// Cases per randomized suite.
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Exit 1 for verification failures, 2 for input and I/O problems.
enum Failure {
    Verify(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) | Error::UnknownVariable(_) => Failure::Input(e.to_string()),
            _ => Failure::Verify(e.to_string()),
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Matrix, Failure> {
    Matrix::from_json(&read_json(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_report(rep: &Report, json: bool) {
    if json {
        print!("{}", pretty(&rep.to_json()));
    } else {
        println!("{rep}");
    }
}

fn finish_pipeline(args: &PipelineArgs, rep: &Report, files: &[(&str, &Matrix)], stem: &str) -> Result<bool, Failure> {
    if !args.out.is_dir() {
        return Err(Failure::Input(format!("{}: not a directory", args.out.display())));
    }
    for (name, m) in files {
        write(&args.out.join(format!("{name}.{}", args.emit.ext())), &args.emit.render(m))?;
    }
    write(&args.out.join(format!("{stem}_report.json")), &pretty(&rep.to_json()))?;
    print_report(rep, args.json);
    Ok(rep.passed(true))
}

fn emit_map(args: &MapArgs, m: &Matrix, note: &str) -> Result<(), Failure> {
    let text = args.emit.render(m);
    match &args.out {
        Some(p) => write(p, &text)?,
        None => print!("{text}"),
    }
    eprintln!("{note}");
    Ok(())
}

fn nil_input(path: &Path) -> Result<NilRep, Failure> {
    let m = read_matrix(path)?;
    NilRep::new(m).map_err(|e| Failure::Verify(format!("input is not nilpotent: {e}")))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Theorem3(args) => {
            let t = laurent::run()?;
            let files = [("theorem31_matrix", t.rep.matrix()), ("N10", t.n.matrix())];
            finish_pipeline(&args, &t.report, &files, "theorem3")
        }
        Command::Theorem4(args) => {
            let t = groupring::run()?;
            let files = [("theorem42_matrix", &t.lifted), ("yz_matrix", t.yz.matrix())];
            finish_pipeline(&args, &t.report, &files, "theorem4")
        }
        Command::Higman { args, var } => {
            let m = read_matrix(&args.input)?;
            let sym = match var {
                Some(name) => Symbol::from_name(&name).ok_or_else(|| Failure::Input(format!("unknown variable {name}")))?,
                None => [Symbol::S, Symbol::X, Symbol::T]
                    .into_iter()
                    .find(|s| m.ring().has_var(*s))
                    .ok_or_else(|| Failure::Input(format!("{} has no polynomial variable", m.ring().descriptor())))?,
            };
            let n = linearize(&m, sym)?;
            let size = n.matrix().rows();
            emit_map(&args, n.matrix(), &format!("nilpotent {size}x{size}, index {}", n.index()))?;
            Ok(true)
        }
        Command::Versch { args, k } => {
            let v = nil::verschiebung(&nil_input(&args.input)?, k)?;
            let size = v.matrix().rows();
            emit_map(&args, v.matrix(), &format!("nilpotent {size}x{size}, index {}", v.index()))?;
            Ok(true)
        }
        Command::Frob { args, k } => {
            let f = nil::frobenius(&nil_input(&args.input)?, k)?;
            emit_map(&args, f.matrix(), &format!("nilpotent, index {}", f.index()))?;
            Ok(true)
        }
        Command::SseVerify { file } => sse_verify(&read_json(&file)?),
        Command::VerifyAll { allow_known_typos, json, cases, seed } => {
            let defaults = Options::default();
            let opts = Options { cases, seed: seed.unwrap_or(defaults.seed), ..defaults };
            let rep = verify::verify_all(opts)?;
            print_report(&rep, json);
            Ok(rep.passed(allow_known_typos))
        }
    }
}

fn sse_verify(v: &Value) -> Result<bool, Failure> {
    let input = |e: Error| Failure::Input(e.to_string());
    if v.get("steps").is_some() {
        let chain = SseChain::from_json(v).map_err(input)?;
        return match nil::verify_sse_chain(&chain)? {
            ChainVerdict::Valid => {
                println!("chain of {} links verifies", chain.steps.len());
                Ok(true)
            }
            ChainVerdict::BrokenLink(i) => {
                println!("link {i} fails: A_{i} = UV or A_{} = VU does not hold", i + 1);
                Ok(false)
            }
        };
    }
    if v.get("lag").is_some() {
        let (a, b, w) = SeWitness::from_json(v).map_err(input)?;
        let ids = nil::se_identities(&a, &b, &w)?;
        for (name, ok) in &ids {
            println!("{}  {name}", if *ok { "PASS" } else { "FAIL" });
        }
        return Ok(ids.iter().all(|(_, ok)| *ok));
    }
    let field = |k: &str| {
        v.get(k).ok_or_else(|| Failure::Input(format!("missing {k:?}"))).and_then(|x| Matrix::from_json(x).map_err(input))
    };
    let (a, b) = (field("A")?, field("B")?);
    let w = EsseWitness { u: field("U")?, v: field("V")? };
    let ok = nil::verify_esse(&a, &b, &w)?;
    println!("{}  A = UV and B = VU", if ok { "PASS" } else { "FAIL" });
    Ok(ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Verify(msg)) => {
            eprintln!("nilk: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("nilk: {msg}");
            ExitCode::from(2)
        }
    }
}

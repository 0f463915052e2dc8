use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fouradic::adic::{analyze, autocorr_spectrum};
use fouradic::error::{Error, Result};
use fouradic::interleave::interleave;
use fouradic::qseq::{self, SequenceFile};
use fouradic::seqgen::{apply_transform, autocorr_binary, from_tag};
use fouradic::verify::{
    family_params, run_request, run_table, Family, OutputFormat, PairRule, Request, TableSpec,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "fouradic", version, about = "4-adic complexity of interleaved quaternary sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a binary sequence as a QSEQ file.
    Gen(GenArgs),
    /// Interleave two binary QSEQ files into a quaternary one.
    Interleave {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Periodic autocorrelation spectrum of a QSEQ file.
    Autocorr {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// JSON analysis record of a quaternary QSEQ file.
    Complexity {
        input: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check one theorem; exit code 0 iff the closed form matches.
    Verify(VerifyArgs),
    /// Batch table over a family and parameter range.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    /// Full provenance tag, e.g. `legendre:p=7,variant=ell+L2`.
    #[arg(long, conflicts_with_all = ["family", "k", "p", "variant"])]
    tag: Option<String>,
    /// m, legendre, twin or hall.
    #[arg(long, required_unless_present = "tag")]
    family: Option<String>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    p: Option<u64>,
    /// ell or ell_prime.
    #[arg(long)]
    variant: Option<String>,
    /// Primitive root for Hall sequences.
    #[arg(long)]
    generator: Option<u64>,
    /// GF(2^k) modulus in hex, e.g. 0x19.
    #[arg(long)]
    poly: Option<String>,
    /// Transform steps applied in order: C, L<e>, M<r>.
    #[arg(long = "transform", short = 't', value_delimiter = ',')]
    transforms: Vec<String>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// lemma1, lemma4, lemma9, cyclotomic, thm3, cor5, cor6, cor7, thm8, thm10, thm11, thm12, thm12_run.
    #[arg(required_unless_present = "request")]
    theorem: Option<String>,
    /// JSON request file instead of flags.
    #[arg(long, conflicts_with = "theorem")]
    request: Option<PathBuf>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    shift: Option<i64>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    l: Option<i64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    generator: Option<u64>,
    #[arg(long)]
    poly: Option<String>,
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    #[arg(long, value_delimiter = ',')]
    periods: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    pairs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// JSON spec file; flags are ignored when given.
    #[arg(long, conflicts_with_all = ["family", "params", "range"])]
    spec: Option<PathBuf>,
    #[arg(long, required_unless_present = "spec")]
    family: Option<String>,
    /// Explicit parameter list, e.g. 3,7,11.
    #[arg(long, value_delimiter = ',', conflicts_with = "range")]
    params: Vec<u64>,
    /// Every valid parameter in LO..HI (inclusive).
    #[arg(long)]
    range: Option<String>,
    /// shifts, theorem, samples or diagonal.
    #[arg(long, default_value = "theorem")]
    pairs: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::Internal(format!("JSON encoding failed: {e}")))
}

fn gen(args: GenArgs) -> Result<()> {
    let tag = match args.tag {
        Some(tag) => tag,
        None => {
            let family = args.family.unwrap_or_default();
            let mut fields = Vec::new();
            let need_p = || {
                args.p
                    .ok_or_else(|| Error::param(format!("family {family} needs --p")))
            };
            let base = match family.as_str() {
                "m" => {
                    let k = args.k.ok_or_else(|| Error::param("family m needs --k"))?;
                    fields.push(format!("k={k}"));
                    if let Some(poly) = &args.poly {
                        fields.push(format!("poly={poly}"));
                    }
                    "m"
                }
                "legendre" => {
                    fields.push(format!("p={}", need_p()?));
                    fields.push(format!("variant={}", args.variant.as_deref().unwrap_or("ell")));
                    "legendre"
                }
                "twin" => {
                    fields.push(format!("p={}", need_p()?));
                    "twin"
                }
                "hall" => {
                    fields.push(format!("p={}", need_p()?));
                    if let Some(g) = args.generator {
                        fields.push(format!("g={g}"));
                    }
                    "hall"
                }
                other => return Err(Error::param(format!("unknown family {other:?}"))),
            };
            format!("{base}:{}", fields.join(","))
        }
    };
    let mut s = from_tag(&tag)?;
    for step in &args.transforms {
        s = apply_transform(&s, step)?;
    }
    eprintln!("{}", s.provenance());
    emit(args.output.as_deref(), &qseq::format_binary(&s))
}

fn autocorr(input: &Path, format: Format, output: Option<&Path>) -> Result<()> {
    let rows: Vec<(usize, i64, i64)> = match qseq::read_file(input)? {
        SequenceFile::Binary(s) => (0..s.period())
            .map(|t| (t, autocorr_binary(&s, t), 0))
            .collect(),
        SequenceFile::Quaternary(q) => autocorr_spectrum(&q)
            .into_iter()
            .enumerate()
            .map(|(t, z)| (t, z.re, z.im))
            .collect(),
    };
    let text = match format {
        Format::Json => {
            let pairs: Vec<[i64; 2]> = rows.iter().map(|&(_, re, im)| [re, im]).collect();
            to_json(&pairs)?
        }
        Format::Csv => {
            let mut out = String::from("tau,re,im\n");
            for (t, re, im) in rows {
                out.push_str(&format!("{t},{re},{im}\n"));
            }
            out
        }
    };
    emit(output, &text)
}

fn request_from_flags(args: &VerifyArgs, theorem: &str) -> Result<Request> {
    fn need<T: Clone>(v: &Option<T>, flag: &str, theorem: &str) -> Result<T> {
        v.clone()
            .ok_or_else(|| Error::param(format!("{theorem} needs --{flag}")))
    }
    let t = theorem;
    Ok(match t {
        "lemma1" => Request::Lemma1 {
            periods: if args.periods.is_empty() {
                (3..=19).step_by(2).collect()
            } else {
                args.periods.clone()
            },
            pairs: args.pairs,
            seed: args.seed,
        },
        "lemma4" => Request::Lemma4 {
            n: need(&args.n, "n", t)?,
        },
        "lemma9" => Request::Lemma9 {
            k: need(&args.k, "k", t)?,
            poly: args.poly.clone(),
        },
        "cyclotomic" | "lemma11" => Request::Cyclotomic {
            p: need(&args.p, "p", t)?,
        },
        "thm3" => Request::Thm3 {
            a: need(&args.a, "a", t)?,
            b: need(&args.b, "b", t)?,
        },
        "cor5" => Request::Cor5 {
            a: need(&args.a, "a", t)?,
            b: need(&args.b, "b", t)?,
        },
        "cor6" => Request::Cor6 {
            a: need(&args.a, "a", t)?,
            b: need(&args.b, "b", t)?,
            shift: need(&args.shift, "shift", t)?,
        },
        "cor7" => Request::Cor7 {
            a: need(&args.a, "a", t)?,
        },
        "thm8" => Request::Thm8 {
            k: need(&args.k, "k", t)?,
            l: need(&args.l, "l", t)?,
            poly: args.poly.clone(),
        },
        "thm10" => Request::Thm10 {
            p: need(&args.p, "p", t)?,
        },
        "thm11" => Request::Thm11 {
            p: need(&args.p, "p", t)?,
            case: need(&args.case, "case", t)?,
        },
        "thm12" => Request::Thm12 {
            p: need(&args.p, "p", t)?,
            generator: args.generator,
        },
        "thm12_run" => Request::Thm12Run {
            primes: if args.primes.is_empty() {
                vec![31, 43, 223, 1051, 6427]
            } else {
                args.primes.clone()
            },
        },
        other => return Err(Error::param(format!("unknown theorem {other:?}"))),
    })
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let req = match (&args.request, &args.theorem) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            Request::from_json(&text)?
        }
        (None, Some(t)) => request_from_flags(&args, t)?,
        (None, None) => return Err(Error::param("no theorem given")),
    };
    let outcome = run_request(&req)?;
    emit(args.output.as_deref(), &to_json(&outcome.report)?)?;
    Ok(outcome.matched)
}

fn parse_range(range: &str) -> Result<(u64, u64)> {
    let bad = || Error::Parse(format!("range must look like LO..HI, got {range:?}"));
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn table(args: TableArgs) -> Result<()> {
    let mut spec = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            TableSpec::from_json(&text)?
        }
        None => {
            let family: Family = args.family.as_deref().unwrap_or_default().parse()?;
            let params = match &args.range {
                Some(r) => {
                    let (lo, hi) = parse_range(r)?;
                    family_params(family, lo, hi)
                }
                None => args.params.clone(),
            };
            TableSpec {
                family,
                params,
                pairs: args.pairs.parse::<PairRule>()?,
                format: OutputFormat::Csv,
            }
        }
    };
    if let Some(f) = args.format {
        spec.format = f.into();
    }
    run_table(&spec, args.output.as_deref()).map(drop)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen(args) => gen(args).map(|_| true),
        Command::Interleave { a, b, output } => {
            let a = qseq::read_file(&a)?.into_binary()?;
            let b = qseq::read_file(&b)?.into_binary()?;
            let w = interleave(&a, &b)?;
            emit(output.as_deref(), &qseq::format_quaternary(&w)).map(|_| true)
        }
        Command::Autocorr {
            input,
            format,
            output,
        } => autocorr(&input, format, output.as_deref()).map(|_| true),
        Command::Complexity { input, output } => {
            let q = qseq::read_file(&input)?.into_quaternary()?;
            emit(output.as_deref(), &to_json(&analyze(&q))?).map(|_| true)
        }
        Command::Verify(args) => verify(args),
        Command::Table(args) => table(args).map(|_| true),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Io { .. } => EXIT_IO,
                _ => EXIT_USAGE,
            })
        }
    }
}

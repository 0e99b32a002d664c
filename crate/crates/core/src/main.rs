use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use parabolic_core::basechange::{principalize, PositiveSystem};
use parabolic_core::exactlin::Covector;
use parabolic_core::gallery::{enumerate_parabolic, h_counterexample, psl_counterexample, Mode};
use parabolic_core::infinite::{
    classify_affine, make_affine_parabolic, random_affine_descriptor, random_dense_functional, random_rational_chain,
    seeded_rng, toroidal_witness, AffineDescriptor, AffineType,
};
use parabolic_core::parabolic::{
    classify, is_parabolic, principal_witness, strongly_parabolic_witness, verify_verdict, Verdict,
};
use parabolic_core::rootsys::{build_affine, build_toroidal, RootSubset, RootSystem};
use parabolic_core::Error;

#[derive(Parser)]
#[command(name = "parabolic", version, about = "Parabolic subsets of root systems, with certificates")]
struct Cli {
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Window for affine and toroidal systems given by name.
    #[arg(long, global = true, default_value_t = 4)]
    window: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a finite catalog system.
    RootsysBuild {
        #[arg(long)]
        system: String,
    },
    /// Build a truncated untwisted affine system over a finite base.
    AffineBuild {
        #[arg(long)]
        base: String,
    },
    /// Build a truncated toroidal system over a finite base.
    ToroidalBuild {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
    },
    /// Test one property of a subset.
    Check {
        #[arg(long, value_enum)]
        mode: CheckMode,
        #[arg(long)]
        system: String,
        #[arg(long)]
        subset: PathBuf,
    },
    /// Strongest verdict with certificate, or replay a saved verdict.
    Classify {
        #[arg(long)]
        system: String,
        #[arg(long)]
        subset: PathBuf,
        /// Verdict file to re-verify instead of classifying.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Reflect the standard base into the subset and read off a functional.
    Principalize {
        #[arg(long)]
        system: String,
        #[arg(long)]
        subset: PathBuf,
    },
    /// Subset of an affine system from a descriptor file.
    AffineMake {
        #[arg(long)]
        system: String,
        #[arg(long)]
        descriptor: PathBuf,
    },
    /// Standard, imaginary or mixed type of an affine subset.
    AffineClassify {
        #[arg(long)]
        system: String,
        #[arg(long)]
        subset: PathBuf,
    },
    /// Witness chain for a toroidal subset.
    ToroidalWitness {
        #[arg(long)]
        system: String,
        #[arg(long)]
        subset: PathBuf,
        /// JSON list of scalars: a functional on the lattice coordinates.
        #[arg(long)]
        hint: Option<String>,
    },
    /// Named counterexamples.
    Gallery {
        #[command(subcommand)]
        which: GalleryCmd,
    },
    /// All parabolic subsets of a small finite system.
    Enumerate {
        #[arg(long)]
        system: String,
        #[arg(long)]
        classify: bool,
    },
    /// Seeded sample subsets for affine and toroidal systems.
    Sample {
        #[arg(long)]
        system: String,
        #[arg(long, value_enum)]
        kind: SampleKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GalleryCmd {
    H10,
    H {
        #[arg(long)]
        n: usize,
    },
    Psl {
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckMode {
    Parabolic,
    Principal,
    Strong,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleKind {
    Standard,
    Imaginary,
    Mixed,
    Chain,
    Dense,
}

enum Failure {
    Usage(String),
    /// Library error; bad parameter values still count as usage errors.
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(e) => Failure::Usage(e.to_string()),
            e => Failure::Library(e),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// A system file if `spec` names an existing path, otherwise a catalog name.
fn load_system(spec: &str, window: u32) -> Result<RootSystem, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        return Ok(RootSystem::from_json_str(&read(path)?)?);
    }
    Ok(RootSystem::by_spec(spec, window)?)
}

fn load_subset(sys: &RootSystem, path: &Path) -> Result<RootSubset, Failure> {
    let p: RootSubset = serde_json::from_str(&read(path)?).map_err(Error::from)?;
    sys.check_subset(&p)?;
    Ok(p)
}

fn run(cli: &Cli) -> Outcome {
    let w = cli.window;
    match &cli.command {
        Command::RootsysBuild { system } => Ok(RootSystem::by_spec(system, w)?.to_json()),
        Command::AffineBuild { base } => Ok(build_affine(&RootSystem::by_name(base)?, w)?.to_json()),
        Command::ToroidalBuild { base, rank } => Ok(build_toroidal(&RootSystem::by_name(base)?, *rank, w)?.to_json()),
        Command::Check { mode, system, subset } => {
            let sys = load_system(system, w)?;
            let p = load_subset(&sys, subset)?;
            check(&sys, &p, *mode)
        }
        Command::Classify { system, subset, verify } => {
            let sys = load_system(system, w)?;
            let p = load_subset(&sys, subset)?;
            match verify {
                Some(file) => {
                    let v: Verdict = serde_json::from_str(&read(file)?).map_err(Error::from)?;
                    verify_verdict(&sys, &p, &v)?;
                    Ok(json!({"verified": true, "class": v.class()}))
                }
                None => Ok(to_value(&classify(&sys, &p)?)),
            }
        }
        Command::Principalize { system, subset } => {
            let sys = load_system(system, w)?;
            let p = load_subset(&sys, subset)?;
            let start = PositiveSystem::standard(&sys)?;
            let (base, lambda) = principalize(&sys, &p, &start)?;
            Ok(json!({"base": base, "lambda": lambda}))
        }
        Command::AffineMake { system, descriptor } => {
            let sys = load_system(system, w)?;
            let d: AffineDescriptor = serde_json::from_str(&read(descriptor)?).map_err(Error::from)?;
            Ok(to_value(&make_affine_parabolic(&sys, &d)?))
        }
        Command::AffineClassify { system, subset } => {
            let sys = load_system(system, w)?;
            let p = load_subset(&sys, subset)?;
            Ok(to_value(&classify_affine(&sys, &p)?))
        }
        Command::ToroidalWitness { system, subset, hint } => {
            let sys = load_system(system, w)?;
            let p = load_subset(&sys, subset)?;
            let hint = match hint {
                Some(text) => Some(Covector(
                    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("--hint: {e}")))?,
                )),
                None => None,
            };
            Ok(to_value(&toroidal_witness(&sys, &p, hint.as_ref())?))
        }
        Command::Gallery { which } => {
            let report = match which {
                GalleryCmd::H10 => h_counterexample(10)?,
                GalleryCmd::H { n } => h_counterexample(*n)?,
                GalleryCmd::Psl { m } => psl_counterexample(*m)?,
            };
            let mut v = to_value(&report);
            v["class"] = json!(report.verdict.class());
            Ok(v)
        }
        Command::Enumerate { system, classify } => {
            let sys = load_system(system, w)?;
            let mode = if *classify { Mode::Classify } else { Mode::All };
            let found = enumerate_parabolic(&sys, mode)?;
            let subsets: Vec<Value> = found
                .iter()
                .map(|(p, v)| match v {
                    Some(v) => json!({"members": p.ids().collect::<Vec<_>>(), "verdict": v}),
                    None => json!({"members": p.ids().collect::<Vec<_>>()}),
                })
                .collect();
            Ok(json!({"system": sys.name(), "count": found.len(), "subsets": subsets}))
        }
        Command::Sample { system, kind, seed } => {
            let sys = load_system(system, w)?;
            sample(&sys, *kind, *seed)
        }
    }
}

fn check(sys: &RootSystem, p: &RootSubset, mode: CheckMode) -> Outcome {
    let parabolic = is_parabolic(sys, p);
    Ok(match mode {
        CheckMode::Parabolic => match parabolic {
            Ok(()) => json!({"mode": "parabolic", "ok": true}),
            Err(v) => json!({"mode": "parabolic", "ok": false, "violation": v}),
        },
        CheckMode::Principal => match principal_witness(sys, p)? {
            Ok(l) if parabolic.is_ok() => json!({"mode": "principal", "ok": true, "lambda": l}),
            Ok(_) => json!({"mode": "principal", "ok": false, "violation": parabolic.unwrap_err()}),
            Err(c) => json!({"mode": "principal", "ok": false, "refutation": c}),
        },
        CheckMode::Strong => match parabolic {
            Err(v) => json!({"mode": "strong", "ok": false, "violation": v}),
            Ok(()) => match strongly_parabolic_witness(sys, p)? {
                Ok(chain) => json!({"mode": "strong", "ok": true, "chain": chain}),
                Err(obs) => json!({"mode": "strong", "ok": false, "obstruction": obs}),
            },
        },
    })
}

fn sample(sys: &RootSystem, kind: SampleKind, seed: u64) -> Outcome {
    let mut rng = seeded_rng(seed);
    let affine_type = match kind {
        SampleKind::Standard => Some(AffineType::Standard),
        SampleKind::Imaginary => Some(AffineType::Imaginary),
        SampleKind::Mixed => Some(AffineType::Mixed),
        _ => None,
    };
    if let Some(ty) = affine_type {
        let d = random_affine_descriptor(&mut rng, sys, ty)?;
        let p = make_affine_parabolic(sys, &d)?;
        return Ok(json!({"descriptor": d, "subset": p}));
    }
    if let SampleKind::Chain = kind {
        let chain = random_rational_chain(&mut rng, sys)?;
        let p = chain.subset(sys);
        return Ok(json!({"chain": chain, "subset": p}));
    }
    let (lambda, hint) = random_dense_functional(&mut rng, sys)?;
    let p = parabolic_core::parabolic::WitnessChain { chain: vec![lambda.clone()] }.subset(sys);
    Ok(json!({"chain": [lambda], "hint": hint, "subset": p}))
}

fn emit(cli: &Cli, v: &Value) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(v).expect("json values serialize");
    text.push('\n');
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(v) => match emit(&cli, &v) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"error": {"kind": e.kind(), "code": e.code(), "message": e.to_string()}}))
                    .expect("json values serialize")
            );
            let usage = matches!(e, Error::InvalidParams(_) | Error::UnsupportedFamily(_));
            ExitCode::from(if usage { 1 } else { 2 })
        }
    }
}

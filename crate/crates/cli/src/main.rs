mod input;
mod run;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hopfres::complexes::{Cz2Character, Mode};
use hopfres::QiMatrix;

use input::{read_character, read_matrix, sweep_files, CharacterFile};
use run::{Algebra, CohomologyAlgebra, Outcome, RunResult, Suite, FAILED, INPUT, OK, UNDECIDED};

#[derive(Parser)]
#[command(name = "hopfres", version, about = "Cohomology and certified identities for free orthogonal-type quantum groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Which route computes cohomology dimensions.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Both)]
    mode: ModeArg,
    /// Maximal word length in membership checks (defaults: complex 3, hopf/glued 4, yd 6).
    #[arg(long, global = true, value_name = "N")]
    degree_bound: Option<usize>,
    /// Run over every *.json parameter file in DIR instead of a single file.
    #[arg(long, global = true, value_name = "DIR")]
    sweep: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Formula,
    Rank,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tau {
    Counit,
    Sign,
}

#[derive(Subcommand)]
enum Command {
    /// Normalizability, genericity and asymmetry of a parameter matrix.
    Classify { param: Option<PathBuf> },
    /// Validate a character against a parameter matrix.
    Character { algebra: Algebra, param: PathBuf, character: PathBuf },
    /// Cohomology with coefficients in a character: `<algebra> PARAM [CHARACTER]`.
    Cohomology {
        algebra: CohomologyAlgebra,
        /// Parameter file then character file; the character defaults to the counit.
        files: Vec<PathBuf>,
        /// Character of CZ2.
        #[arg(long, value_enum, default_value_t = Tau::Counit)]
        tau: Tau,
    },
    /// Bialgebra cohomology.
    Bialgebra { algebra: Algebra, param: Option<PathBuf> },
    /// Certified symbolic checks in the presented algebras.
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
        /// Include full membership certificates in JSON output.
        #[arg(long, global = true)]
        certificates: bool,
    },
}

#[derive(Subcommand)]
enum VerifyKind {
    /// The free resolution squares to zero.
    Complex { algebra: Algebra, param: Option<PathBuf> },
    /// Hopf algebra axioms on the generators.
    Hopf { algebra: Algebra, param: Option<PathBuf> },
    /// The embedding of H(EᵗE⁻¹) into A(E).
    Glued { param: Option<PathBuf> },
    /// Colinearity of the resolution maps of H(F).
    Yd { param: Option<PathBuf> },
}

/// Worst outcome wins: input error, then failure, then undecided.
fn combine(codes: impl IntoIterator<Item = u8>) -> u8 {
    let rank = |c: u8| match c {
        INPUT => 3,
        FAILED => 2,
        UNDECIDED => 1,
        _ => 0,
    };
    codes.into_iter().max_by_key(|&c| rank(c)).unwrap_or(OK)
}

struct Runner<'a> {
    cli: &'a Cli,
    job: Box<dyn Fn(&QiMatrix) -> RunResult + Sync + 'a>,
}

impl<'a> Runner<'a> {
    fn new(cli: &'a Cli, job: impl Fn(&QiMatrix) -> RunResult + Sync + 'a) -> Self {
        Runner { cli, job: Box::new(job) }
    }

    fn single(&self, param: Option<&Path>) -> ExitCode {
        let Some(path) = param else {
            eprintln!("error: a parameter file or --sweep DIR is required");
            return ExitCode::from(INPUT);
        };
        match read_matrix(path).and_then(|m| (self.job)(&m)) {
            Ok(o) => emit(self.cli, o),
            Err(e) => input_error(&e),
        }
    }

    fn sweep(&self, dir: &Path) -> ExitCode {
        let files = match sweep_files(dir) {
            Ok(f) => f,
            Err(e) => return input_error(&e),
        };
        let results: Vec<(String, RunResult)> = files
            .par_iter()
            .map(|p| {
                let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
                (name, read_matrix(p).and_then(|m| (self.job)(&m)))
            })
            .collect();
        let code = combine(results.iter().map(|(_, r)| r.as_ref().map_or(INPUT, |o| o.code)));
        if self.cli.json {
            let entries: Vec<String> = results
                .iter()
                .map(|(name, r)| {
                    let name = serde_json::to_string(name).expect("string");
                    match r {
                        Ok(o) => format!("{{\"file\":{name},\"exit\":{},\"result\":{}}}", o.code, o.json),
                        Err(e) => format!("{{\"file\":{name},\"exit\":{INPUT},\"error\":{}}}", serde_json::to_string(e).expect("string")),
                    }
                })
                .collect();
            println!("[{}]", entries.join(","));
        } else {
            for (name, r) in &results {
                println!("== {name} ==");
                match r {
                    Ok(o) => print!("{}", o.text),
                    Err(e) => println!("error: {e}"),
                }
            }
        }
        ExitCode::from(code)
    }

    fn go(&self, param: Option<&Path>) -> ExitCode {
        match &self.cli.sweep {
            Some(dir) => self.sweep(dir),
            None => self.single(param),
        }
    }
}

fn emit(cli: &Cli, o: Outcome) -> ExitCode {
    if cli.json {
        println!("{}", o.json);
    } else {
        print!("{}", o.text);
    }
    ExitCode::from(o.code)
}

fn input_error(e: &str) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(INPUT)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = match cli.mode {
        ModeArg::Formula => Mode::Formula,
        ModeArg::Rank => Mode::Rank,
        ModeArg::Both => Mode::Both,
    };
    match &cli.command {
        Command::Classify { param } => Runner::new(&cli, run::run_classify).go(param.as_deref()),
        Command::Character { algebra, param, character } => {
            let key = if *algebra == Algebra::H { "S" } else { "T" };
            match read_matrix(param).and_then(|m| run::run_character(*algebra, &m, &read_character(character, key)?)) {
                Ok(o) => emit(&cli, o),
                Err(e) => input_error(&e),
            }
        }
        Command::Cohomology { algebra, files, tau } => {
            let algebra = match algebra {
                CohomologyAlgebra::Cz2 => {
                    let tau = match tau {
                        Tau::Counit => Cz2Character::Counit,
                        Tau::Sign => Cz2Character::Sign,
                    };
                    return match run::run_cz2(tau, mode) {
                        Ok(o) => emit(&cli, o),
                        Err(e) => input_error(&e),
                    };
                }
                CohomologyAlgebra::B => Algebra::B,
                CohomologyAlgebra::A => Algebra::A,
                CohomologyAlgebra::H => Algebra::H,
            };
            if files.len() > 2 {
                return input_error("expected PARAM [CHARACTER]");
            }
            let (param, character) = match (cli.sweep.is_some(), files.as_slice()) {
                (true, [c]) => (None, Some(c)),
                (true, []) => (None, None),
                (false, [p]) => (Some(p), None),
                (false, [p, c]) => (Some(p), Some(c)),
                (false, []) => (None, None),
                _ => return input_error("with --sweep, pass only the character file"),
            };
            let key = if algebra == Algebra::H { "S" } else { "T" };
            let ch: Option<CharacterFile> = match character.map(|c| read_character(c, key)).transpose() {
                Ok(c) => c,
                Err(e) => return input_error(&e),
            };
            Runner::new(&cli, move |m| run::run_cohomology(algebra, m, ch.as_ref(), mode)).go(param.map(PathBuf::as_path))
        }
        Command::Bialgebra { algebra, param } => {
            let algebra = *algebra;
            Runner::new(&cli, move |m| run::run_bialgebra(algebra, m, mode)).go(param.as_deref())
        }
        Command::Verify { kind, certificates } => {
            let (suite, param) = match kind {
                VerifyKind::Complex { algebra, param } => (Suite::Complex(*algebra), param),
                VerifyKind::Hopf { algebra, param } => (Suite::Hopf(*algebra), param),
                VerifyKind::Glued { param } => (Suite::Glued, param),
                VerifyKind::Yd { param } => (Suite::Yd, param),
            };
            let bound = cli.degree_bound.unwrap_or(suite.default_bound());
            let certificates = *certificates;
            Runner::new(&cli, move |m| run::run_verify(suite, m, bound, certificates)).go(param.as_deref())
        }
    }
}

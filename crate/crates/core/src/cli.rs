//! The `ait` command line.

use std::collections::HashMap;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::abstraction::to_combinators;
use crate::ait::{
    catalan, complexity_upper_bound, count_trees, omega_lower_bound_with, omega_resumable,
    ChaitinMachine, OmegaBound, OutputTarget,
};
use crate::bits::BitString;
use crate::curried::{parse_curried, parse_curried_with, print_lenient};
use crate::eliminator::{as_bem, eliminate, BemMachine, ElimLimits};
use crate::languages::LanguageId;
use crate::pipe::Pipe;
use crate::reduce::{reduce_stepwise, Outcome, Strategy};
use crate::runtime::{classify_divergence, Divergence, Halted, RunOutcome};

/// Exit code for bad flags or unreadable input.
pub const USAGE_EXIT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ait",
    version,
    about = "Minimal prefix-free universal machines and concrete AIT tools"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Canonical serialization of the output term.
    Term,
    /// Output decoded as a boolean list.
    Bits,
    /// One line per reduction step, then the output term.
    Trace,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input text; read from --file or standard input when absent.
    pub input: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a program.
    Run {
        #[arg(long, default_value = "simple")]
        lang: String,
        /// Universal combinator for `--lang ext`, in curried syntax.
        #[arg(long)]
        universal: Option<String>,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long, value_enum, default_value_t = Mode::Term)]
        mode: Mode,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Parse curried lambda syntax (or, with --lang, show a program's unreduced term).
    Parse {
        #[arg(long)]
        lang: Option<String>,
        #[arg(long)]
        universal: Option<String>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Eliminate lambdas from a curried term, leaving S, K and I.
    Abstract {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run an endmarker machine through the endmarker eliminator.
    Eliminate {
        /// keraia, zot, blc, fixed3, parity or echo.
        #[arg(long)]
        lang: String,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long, value_enum, default_value_t = Mode::Term)]
        mode: Mode,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Bits, when --input is not given.
        bits: Option<String>,
    },
    /// Lower bound on the halting probability by exhaustive enumeration.
    Omega {
        #[arg(long, default_value = "simple")]
        lang: String,
        #[arg(long)]
        universal: Option<String>,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Record file to append to and resume from.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Also print every halting record.
        #[arg(long)]
        records: bool,
    },
    /// Shortest enumerated codeword producing a target output.
    Complexity {
        #[arg(long, default_value = "simple")]
        lang: String,
        #[arg(long)]
        universal: Option<String>,
        /// Target output bits.
        #[arg(long, conflicts_with = "target_term")]
        target: Option<String>,
        /// Target output term in curried syntax, matched up to alpha-equivalence.
        #[arg(long)]
        target_term: Option<String>,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
    },
    /// Count full binary trees of a given traversal length.
    CountTrees { len: usize },
}

/// Input text from the argument, the file or standard input.
fn read_input(input: &InputArgs) -> Result<String> {
    if let Some(s) = &input.input {
        return Ok(s.clone());
    }
    if let Some(path) = &input.file {
        return fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .context("reading standard input")?;
    Ok(s)
}

/// Parses bits; a single trailing `.` marks the endmarker and is only
/// accepted for endmarker languages.
fn parse_bits(text: &str, endmarker_ok: bool) -> Result<BitString> {
    let trimmed = text.trim();
    let body = match trimmed.strip_suffix('.') {
        Some(b) if endmarker_ok => b,
        Some(_) => bail!("`.` endmarker is only meaningful for zot, blc and keraia"),
        None => trimmed,
    };
    body.parse().map_err(|e| anyhow!("{e}"))
}

fn universal_term(universal: &Option<String>) -> Result<Option<crate::term::Term>> {
    universal
        .as_ref()
        .map(|src| parse_curried(src).map_err(|e| anyhow!("--universal: {e}")))
        .transpose()
}

fn language(name: &str, universal: &Option<String>) -> Result<LanguageId> {
    let lang: LanguageId = name.parse().map_err(|e| anyhow!("{e}"))?;
    match (lang, universal_term(universal)?) {
        (LanguageId::Extended(_), Some(u)) => LanguageId::extended(u).map_err(|e| anyhow!("{e}")),
        (_, Some(_)) => bail!("--universal only applies to --lang ext"),
        (lang, None) => Ok(lang),
    }
}

fn machine(name: &str, universal: &Option<String>) -> Result<ChaitinMachine> {
    let m: ChaitinMachine = name.parse().map_err(|e: String| anyhow!(e))?;
    match (m, universal_term(universal)?) {
        (ChaitinMachine::Extended(_), Some(u)) => Ok(ChaitinMachine::from_language(
            &LanguageId::extended(u).map_err(|e| anyhow!("{e}"))?,
        )
        .unwrap()),
        (_, Some(_)) => bail!("--universal only applies to --lang ext"),
        (m, None) => Ok(m),
    }
}

fn is_bem(lang: &LanguageId) -> bool {
    as_bem(lang).is_ok()
}

fn print_halted(out: &mut dyn Write, h: &Halted, mode: Mode) -> io::Result<()> {
    match mode {
        Mode::Bits => writeln!(out, "{}", h.bits),
        Mode::Term | Mode::Trace => writeln!(out, "{}", h.serialized),
    }
}

fn report(
    out: &mut dyn Write,
    err: &mut dyn Write,
    outcome: &RunOutcome,
    mode: Mode,
) -> Result<i32> {
    match outcome {
        RunOutcome::Halted(h) => print_halted(out, h, mode)?,
        RunOutcome::Diverged(d) => writeln!(err, "{d}")?,
    }
    Ok(outcome.exit_code())
}

fn trace(
    out: &mut dyn Write,
    lang: &LanguageId,
    bits: &BitString,
    steps: u64,
) -> Result<RunOutcome> {
    let (program, input) = match lang.program(bits) {
        Ok(p) => p,
        Err(d) => return Ok(RunOutcome::Diverged(d)),
    };
    writeln!(out, "0\t{}", print_lenient(&program))?;
    let mut pipe = Pipe::new(input);
    let mut write_err = None;
    let r = reduce_stepwise(
        &program,
        Strategy::LeftmostOutermost,
        steps,
        &mut pipe,
        |n, t| {
            if write_err.is_none() {
                if let Err(e) = writeln!(out, "{n}\t{}", print_lenient(t)) {
                    write_err = Some(e);
                }
            }
        },
    );
    if let Some(e) = write_err {
        return Err(e.into());
    }
    let outcome = match r.outcome {
        Outcome::NormalForm(t) if pipe.is_empty() => {
            RunOutcome::Halted(Halted::new(t, r.steps_used))
        }
        Outcome::NormalForm(_) => RunOutcome::Diverged(Divergence::Overflow),
        Outcome::InputUnderflow(_) => RunOutcome::Diverged(Divergence::Underflow),
        Outcome::StepLimit(_) => RunOutcome::Diverged(Divergence::StepLimit),
    };
    Ok(if *lang == LanguageId::Keraia {
        outcome.map_term(to_combinators)
    } else {
        outcome
    })
}

fn print_bound(out: &mut dyn Write, bound: &OmegaBound, with_records: bool) -> io::Result<()> {
    writeln!(out, "lower\t{}", bound.lower)?;
    writeln!(out, "binary\t{}", bound.lower.binary_expansion())?;
    writeln!(out, "halting\t{}", bound.records.len())?;
    writeln!(out, "step-limited\t{}", bound.step_limited)?;
    if with_records {
        for r in &bound.records {
            writeln!(out, "{}", crate::ait::records::format_record(r))?;
        }
    }
    Ok(())
}

/// Executes a parsed command line; returns the process exit code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            USAGE_EXIT
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Run {
            lang,
            universal,
            steps,
            mode,
            input,
        } => {
            let lang = language(&lang, &universal)?;
            let bits = parse_bits(&read_input(&input)?, is_bem(&lang))?;
            let outcome = if mode == Mode::Trace {
                trace(out, &lang, &bits, steps)?
            } else {
                lang.run(&bits, steps)
            };
            report(out, err, &outcome, mode)
        }
        Command::Parse {
            lang,
            universal,
            input,
        } => {
            let text = read_input(&input)?;
            match lang {
                None => {
                    let t = parse_curried(text.trim()).map_err(|e| anyhow!("{e}"))?;
                    writeln!(out, "{}", print_lenient(&t))?;
                    Ok(0)
                }
                Some(name) => {
                    let lang = language(&name, &universal)?;
                    let bits = parse_bits(&text, is_bem(&lang))?;
                    match lang.program(&bits) {
                        Ok((t, rest)) => {
                            writeln!(out, "{}", print_lenient(&t))?;
                            if !rest.is_empty() {
                                writeln!(out, "input\t{rest}")?;
                            }
                            Ok(0)
                        }
                        Err(d) => {
                            writeln!(err, "{d}")?;
                            Ok(classify_divergence(Some(d)))
                        }
                    }
                }
            }
        }
        Command::Abstract { input } => {
            let t = parse_curried_with(read_input(&input)?.trim(), &HashMap::new())
                .map_err(|e| anyhow!("{e}"))?;
            writeln!(out, "{}", print_lenient(&to_combinators(&t)))?;
            Ok(0)
        }
        Command::Eliminate {
            lang,
            input,
            steps,
            mode,
            file,
            bits,
        } => {
            let m: BemMachine = lang.parse().map_err(|e| anyhow!("{e}"))?;
            let text = read_input(&InputArgs {
                input: input.or(bits),
                file,
            })?;
            let bits = parse_bits(&text, false)?;
            if mode == Mode::Trace {
                bail!("--mode trace is not available for eliminate");
            }
            let outcome = eliminate(m, ElimLimits::uniform(steps)).run(&bits);
            report(out, err, &outcome, mode)
        }
        Command::Omega {
            lang,
            universal,
            max_len,
            steps,
            workers,
            resume,
            records,
        } => {
            let m = machine(&lang, &universal)?;
            let workers = workers.max(1);
            let bound = match resume {
                Some(path) => omega_resumable(&m, max_len, steps, workers, &path)?,
                None => omega_lower_bound_with(&m, max_len, steps, workers),
            };
            print_bound(out, &bound, records)?;
            Ok(0)
        }
        Command::Complexity {
            lang,
            universal,
            target,
            target_term,
            max_len,
            steps,
        } => {
            let m = machine(&lang, &universal)?;
            let target = match (target, target_term) {
                (Some(b), None) => OutputTarget::Bits(parse_bits(&b, false)?),
                (None, Some(t)) => {
                    OutputTarget::Term(parse_curried(&t).map_err(|e| anyhow!("{e}"))?)
                }
                _ => bail!("give exactly one of --target or --target-term"),
            };
            match complexity_upper_bound(&m, &target, max_len, steps) {
                Some(n) => writeln!(out, "{n}")?,
                None => writeln!(out, "none")?,
            }
            Ok(0)
        }
        Command::CountTrees { len } => {
            if len > 40 {
                bail!("length {len} is too large to enumerate");
            }
            let count = count_trees(len);
            writeln!(out, "{count}")?;
            if len % 2 == 1 {
                writeln!(err, "catalan({}) = {}", len / 2, catalan((len / 2) as u32))?;
            }
            Ok(0)
        }
    }
}

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use voiceshift::suite::{self, Which};
use voiceshift::{
    convert_from_active_with, convert_from_passive_with, enumerate_pairs, parse_lexicon_source,
    tokenize, Bounds, ConversionResult, Lexicon, Polarity, SolutionMode, Tense,
};

#[derive(Parser)]
#[command(
    name = "voiceshift",
    version,
    about = "Convert English sentences between active and passive voice"
)]
struct Cli {
    /// Lexicon file to use instead of the builtin one.
    #[arg(long, global = true, value_name = "PATH")]
    lexicon: Option<PathBuf>,

    /// Print every solution (default).
    #[arg(long, global = true, conflicts_with = "first")]
    all: bool,

    /// Print only the first solution.
    #[arg(long, global = true)]
    first: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an active sentence to the passive voice.
    Active {
        /// The sentence; read from stdin when omitted.
        sentence: Vec<String>,
    },
    /// Convert a passive sentence to the active voice.
    Passive { sentence: Vec<String> },
    /// Generate active/passive pairs.
    Enumerate(EnumerateArgs),
    /// Run the built-in reference conversions and round-trip checks.
    TestSuite {
        #[arg(value_enum, default_value_t = SuiteChoice::All)]
        which: SuiteChoice,
    },
    /// Read `active: ...` / `passive: ...` lines from stdin.
    Repl,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 100)]
    limit: usize,
    #[arg(long, default_value_t = 1)]
    max_adjectives: usize,
    #[arg(long, default_value_t = 0)]
    max_pp_depth: usize,
    /// Restrict to these tenses (e.g. `simple_past`); repeatable.
    #[arg(long = "tense", value_name = "TENSE")]
    tenses: Vec<String>,
    #[arg(long)]
    positive_only: bool,
    #[arg(long)]
    no_modals: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteChoice {
    Active,
    Passive,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Voice {
    Active,
    Passive,
}

#[derive(Serialize)]
struct JsonSolution<'a> {
    #[serde(rename = "activeS")]
    active_s: &'a [String],
    #[serde(rename = "activeRe")]
    active_re: &'a str,
    #[serde(rename = "passiveS")]
    passive_s: &'a [String],
    #[serde(rename = "passiveRe")]
    passive_re: &'a str,
    tense: &'static str,
}

impl<'a> From<&'a ConversionResult> for JsonSolution<'a> {
    fn from(r: &'a ConversionResult) -> Self {
        JsonSolution {
            active_s: &r.active_tokens,
            active_re: &r.active_term,
            passive_s: &r.passive_tokens,
            passive_re: &r.passive_term,
            tense: r.tense.name(),
        }
    }
}

fn bracketed(tokens: &[String]) -> String {
    format!("[{}]", tokens.join(","))
}

fn write_solution(out: &mut impl Write, r: &ConversionResult, voice: Voice) -> io::Result<()> {
    match voice {
        Voice::Active => {
            writeln!(out, "ActiveS: {}", bracketed(&r.active_tokens))?;
            writeln!(out, "Tense: {}", r.tense)?;
            writeln!(out, "ActiveRe: {}", r.active_term)?;
            writeln!(out, "PassiveS: {}", bracketed(&r.passive_tokens))?;
            writeln!(out, "PassiveRe: {}", r.passive_term)
        }
        Voice::Passive => {
            writeln!(out, "PassiveS: {}", bracketed(&r.passive_tokens))?;
            writeln!(out, "Tense: {}", r.tense)?;
            writeln!(out, "ActiveS: {}", bracketed(&r.active_tokens))?;
            writeln!(out, "ActiveRe: {}", r.active_term)?;
            writeln!(out, "PassiveRe: {}", r.passive_term)
        }
    }
}

struct Session {
    lexicon: Lexicon,
    mode: SolutionMode,
    format: Format,
}

impl Session {
    /// Converts one sentence and prints the solutions. Returns whether any
    /// solution was found.
    fn convert(&self, sentence: &str, voice: Voice, out: &mut impl Write) -> Result<bool> {
        let tokens = tokenize(sentence);
        if let Some(unknown) = tokens.iter().find(|t| !self.lexicon.knows(t)) {
            anyhow::bail!("unknown word `{unknown}`: add it to the lexicon (see --lexicon)");
        }
        let results = match voice {
            Voice::Active => convert_from_active_with(&tokens, &self.lexicon, self.mode),
            Voice::Passive => convert_from_passive_with(&tokens, &self.lexicon, self.mode),
        };
        match self.format {
            Format::Json => {
                for r in &results {
                    serde_json::to_writer(&mut *out, &JsonSolution::from(r))?;
                    writeln!(out)?;
                }
            }
            Format::Text => {
                if results.is_empty() {
                    writeln!(out, "false.")?;
                }
                for (i, r) in results.iter().enumerate() {
                    write_solution(out, r, voice)?;
                    let last = i + 1 == results.len();
                    writeln!(out, "{}", if last { "true." } else { "true ;" })?;
                }
            }
        }
        Ok(!results.is_empty())
    }
}

fn read_sentence(words: Vec<String>) -> Result<String> {
    if !words.is_empty() {
        return Ok(words.join(" "));
    }
    let mut line = String::new();
    io::stdin().lock().read_line(&mut line)?;
    Ok(line)
}

fn load_lexicon(path: Option<&PathBuf>) -> Result<Lexicon> {
    match path {
        None => Ok(Lexicon::builtin()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading lexicon {}", path.display()))?;
            parse_lexicon_source(&text)
                .with_context(|| format!("loading lexicon {}", path.display()))
        }
    }
}

fn enumerate(session: &Session, args: EnumerateArgs, out: &mut impl Write) -> Result<()> {
    let tenses = if args.tenses.is_empty() {
        Tense::ALL.to_vec()
    } else {
        args.tenses
            .iter()
            .map(|t| t.parse::<Tense>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let bounds = Bounds {
        max_adjectives: args.max_adjectives,
        max_pp_depth: args.max_pp_depth,
        tenses,
        polarities: if args.positive_only {
            vec![Polarity::Positive]
        } else {
            Polarity::ALL.to_vec()
        },
        include_modals: !args.no_modals,
    };
    for (i, r) in enumerate_pairs(&session.lexicon, &bounds, args.limit).enumerate() {
        match session.format {
            Format::Json => {
                serde_json::to_writer(&mut *out, &JsonSolution::from(&r))?;
                writeln!(out)?;
            }
            Format::Text => {
                writeln!(out, "{}. ActiveS: {}", i + 1, bracketed(&r.active_tokens))?;
                writeln!(out, "   PassiveS: {}", bracketed(&r.passive_tokens))?;
                writeln!(out, "   Tense: {}", r.tense)?;
            }
        }
    }
    Ok(())
}

fn test_suite(session: &Session, which: SuiteChoice, out: &mut impl Write) -> Result<bool> {
    let which = match which {
        SuiteChoice::Active => Which::Active,
        SuiteChoice::Passive => Which::Passive,
        SuiteChoice::All => Which::All,
    };
    let report = suite::run(&session.lexicon, which);
    for o in &report.outcomes {
        if o.passed {
            writeln!(out, "PASS {}", o.name)?;
        } else {
            writeln!(out, "FAIL {}: {}", o.name, o.detail)?;
        }
    }
    writeln!(
        out,
        "{} passed, {} failed",
        report.passed(),
        report.failed()
    )?;
    Ok(report.is_success())
}

fn repl(session: &Session, out: &mut impl Write) -> Result<()> {
    let stdin = io::stdin();
    for line in stdin.lock().lines() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if matches!(line, "quit" | "halt." | "halt") {
            break;
        }
        let parsed = line
            .split_once(':')
            .and_then(|(voice, rest)| match voice.trim() {
                "active" => Some((Voice::Active, rest)),
                "passive" => Some((Voice::Passive, rest)),
                _ => None,
            });
        match parsed {
            Some((voice, sentence)) => {
                if let Err(e) = session.convert(sentence, voice, out) {
                    writeln!(out, "error: {e}")?;
                }
            }
            None => writeln!(
                out,
                "error: expected `active: <sentence>` or `passive: <sentence>`"
            )?,
        }
        out.flush()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let session = Session {
        lexicon: load_lexicon(cli.lexicon.as_ref())?,
        mode: if cli.first {
            SolutionMode::First
        } else {
            SolutionMode::All
        },
        format: cli.format,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Active { sentence } => {
            session.convert(&read_sentence(sentence)?, Voice::Active, &mut out)
        }
        Command::Passive { sentence } => {
            session.convert(&read_sentence(sentence)?, Voice::Passive, &mut out)
        }
        Command::Enumerate(args) => enumerate(&session, args, &mut out).map(|()| true),
        Command::TestSuite { which } => test_suite(&session, which, &mut out),
        Command::Repl => repl(&session, &mut out).map(|()| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

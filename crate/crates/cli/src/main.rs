use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hilbound::commands::{self, BoundsArgs, CertifyMode, Failure, Outcome, RegseqMode, Theorem};
use hilbound::config::parse_order;
use hilbound::fixtures::{load_input, FIXTURES};
use hilbound::{json, OutputFormat, RunConfig};
use hilbound_core::nullstellensatz::{CharMode, SearchMode};
use hilbound_core::parse::parse_field;
use hilbound_core::{Field, MonomialOrder};

#[derive(Parser, Debug)]
#[command(name = "hilbound", version, about = "Hilbert functions, bound checks and Nullstellensatz certificates")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug)]
struct Global {
    /// List the built-in fixture generators and exit.
    #[arg(long)]
    fixtures: bool,
    /// Use a built-in fixture instead of an input file.
    #[arg(long, global = true, value_name = "SPEC")]
    fixture: Option<String>,
    /// q or fp:<modulus>. Fixtures default to fp:32003; files keep their own field unless this is given.
    #[arg(long, global = true, value_parser = field_arg)]
    field: Option<Field>,
    #[arg(long, global = true, default_value = "grevlex", value_parser = parse_order)]
    order: MonomialOrder,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 4)]
    trials: usize,
    /// Random draws per degree in searches.
    #[arg(long, global = true, default_value_t = hilbound_core::regseq::DEFAULT_ATTEMPTS)]
    attempts: usize,
    /// Largest m for Hilbert values and bound checks.
    #[arg(long = "upto", global = true, default_value_t = 10)]
    max_degree: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn field_arg(s: &str) -> Result<Field, String> {
    parse_field(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Groebner basis.
    Gb { input: Option<PathBuf> },
    /// Dimension, degree, Hilbert polynomial and values.
    Hilbert {
        input: Option<PathBuf>,
        /// Replace an inhomogeneous ideal by its projective closure.
        #[arg(long)]
        closure: bool,
    },
    /// Compare the Hilbert function with the global bounds.
    Bounds {
        input: Option<PathBuf>,
        /// 2.1, 2.2, 2.3, 2.4, chardin or all.
        #[arg(long, default_value = "all")]
        thm: String,
        /// Number of irreducible components, needed for 2.1.
        #[arg(long)]
        irr: Option<u64>,
        #[arg(long)]
        from: Option<i64>,
        #[arg(long)]
        to: Option<i64>,
        /// Section for 2.4, as polynomial text.
        #[arg(long)]
        section: Option<String>,
        /// Draw a certified nonzerodivisor section of this degree for 2.4.
        #[arg(long)]
        section_degree: Option<u32>,
    },
    /// Straighten a sequence into a regular one, or find a regular sequence avoiding a form.
    Regseq {
        input: Option<PathBuf>,
        /// The form F, as polynomial text. Without it the input is treated as affine.
        #[arg(long)]
        form: Option<String>,
        /// Find forms of the ideal that extend F to a regular sequence.
        #[arg(long)]
        avoid: bool,
    },
    /// Nullstellensatz certificate for g in the ideal of the system.
    Certify {
        input: Option<PathBuf>,
        /// "1", a polynomial, or a file holding one.
        #[arg(long, default_value = "1")]
        g: String,
        #[arg(long, value_enum, default_value_t = Mode::Thm44)]
        mode: Mode,
        #[arg(long, conflicts_with = "charp")]
        char0: bool,
        #[arg(long)]
        charp: bool,
        #[arg(long, value_enum, default_value_t = Search::Incremental)]
        search: Search,
    },
    /// Geometric degree estimate and the product-of-degrees bound.
    Delta {
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "charp")]
        char0: bool,
        #[arg(long)]
        charp: bool,
    },
    /// Ideal membership and the homogenized power membership.
    Membership {
        input: Option<PathBuf>,
        #[arg(long)]
        g: String,
        /// Power of x0; defaults to the sequence bookkeeping value.
        #[arg(long)]
        power: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Thm44,
    Thm43,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Search {
    Incremental,
    Bisection,
}

fn char_mode(charp: bool) -> CharMode {
    if charp {
        CharMode::CharP
    } else {
        CharMode::Char0
    }
}

fn run(command: &Command, cfg: &RunConfig, fixture: Option<&str>) -> Result<Outcome, Failure> {
    let load = |input: &Option<PathBuf>| load_input(input.as_deref(), fixture, cfg);
    match command {
        Command::Gb { input } => commands::gb(&load(input)?, cfg),
        Command::Hilbert { input, closure } => commands::hilbert(&load(input)?, cfg, *closure),
        Command::Bounds {
            input,
            thm,
            irr,
            from,
            to,
            section,
            section_degree,
        } => {
            let args = BoundsArgs {
                theorems: Theorem::parse(thm)?,
                irr: *irr,
                m_range: Some((from.unwrap_or(1), to.unwrap_or(cfg.max_degree as i64))),
                section: section.clone(),
                section_degree: *section_degree,
            };
            commands::bounds(&load(input)?, cfg, &args)
        }
        Command::Regseq { input, form, avoid } => {
            let mode = if *avoid { RegseqMode::AvoidForm } else { RegseqMode::Straighten };
            commands::regseq(&load(input)?, cfg, form.as_deref(), mode)
        }
        Command::Certify {
            input,
            g,
            mode,
            charp,
            search,
            ..
        } => {
            let mode = match mode {
                Mode::Thm44 => CertifyMode::Thm44,
                Mode::Thm43 => CertifyMode::Thm43,
            };
            let search = match search {
                Search::Incremental => SearchMode::Incremental,
                Search::Bisection => SearchMode::Bisection,
            };
            commands::certify(&load(input)?, cfg, g, mode, char_mode(*charp), search)
        }
        Command::Delta { input, charp, .. } => commands::delta(&load(input)?, cfg, char_mode(*charp)),
        Command::Membership { input, g, power } => commands::membership(&load(input)?, g, *power),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let mut out = std::io::stdout().lock();
    if g.fixtures {
        for (pattern, description) in FIXTURES {
            let _ = writeln!(out, "{pattern:<28} {description}");
        }
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: a subcommand is required (see --help)");
        return ExitCode::from(2);
    };
    let cfg = RunConfig {
        field: g.field,
        order: g.order,
        seed: g.seed,
        max_degree: g.max_degree,
        trials: g.trials,
        attempts: g.attempts,
        format: match g.format {
            Format::Json => OutputFormat::Json,
            Format::Text => OutputFormat::Text,
        },
    };
    match run(&command, &cfg, g.fixture.as_deref()) {
        Ok(outcome) => {
            for report in &outcome.reports {
                let rendered = match cfg.format {
                    OutputFormat::Json => serde_json::to_string(report).expect("serializable"),
                    OutputFormat::Text => json::to_text(report),
                };
                let _ = writeln!(out, "{rendered}");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}

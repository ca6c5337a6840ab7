use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use trig_nderiv::eval::nearest_pole;
use trig_nderiv::{table, tan_tables_recurrence, CoeffTable, DerivSpec, Error, Function, DEFAULT_GUARD};

use crate::latex::latex;
use crate::report::{bench, verify};
use crate::wire::{write_csv, write_json, WireError};
use crate::xarg::parse_x;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_POLE: i32 = 4;

/// Environment variable capping any requested order.
pub const MAX_ORDER_ENV: &str = "TRIG_NDERIV_MAX_ORDER";
pub const DEFAULT_MAX_ORDER: u32 = 200;

#[derive(Debug, Parser)]
#[command(name = "trig-nderiv", version, about = "Exact n-th derivatives of tan and cot")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionArg {
    Tan,
    Cot,
}

impl From<FunctionArg> for Function {
    fn from(f: FunctionArg) -> Self {
        match f {
            FunctionArg::Tan => Function::Tan,
            FunctionArg::Cot => Function::Cot,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient rows for orders 1..=MAX_ORDER
    Table {
        function: FunctionArg,
        max_order: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Value of the ORDER-th derivative at X (decimal, or a multiple of pi such as 3pi/4)
    Eval {
        function: FunctionArg,
        order: u32,
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Minimum accepted distance |cos x| (tan) or |sin x| (cot)
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: f64,
    },
    /// Compare the closed-form, recurrence, unified and oracle engines
    Verify { max_order: u32 },
    /// Time each engine per order
    Bench {
        max_order: u32,
        #[arg(conflicts_with = "repeats_flag")]
        repeats: Option<u32>,
        #[arg(long = "repeats", id = "repeats_flag")]
        repeats_flag: Option<u32>,
    },
    /// LaTeX rendering of the closed-form derivative
    Latex { function: FunctionArg, order: u32 },
}

#[derive(Debug, Clone, Copy)]
pub struct Config {
    pub max_order_cap: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_order_cap: DEFAULT_MAX_ORDER }
    }
}

impl Config {
    /// Reads the order cap from the environment.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(MAX_ORDER_ENV) {
            Err(_) => Ok(Config::default()),
            Ok(v) => v
                .trim()
                .parse::<u32>()
                .ok()
                .filter(|&cap| cap >= 1)
                .map(|max_order_cap| Config { max_order_cap })
                .ok_or_else(|| format!("{MAX_ORDER_ENV} must be a positive integer, got {v:?}")),
        }
    }
}

enum Failure {
    Usage(String),
    Io(String),
    Pole(String),
}

impl From<WireError> for Failure {
    fn from(e: WireError) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn check_order(order: u32, config: &Config) -> Result<u32, Failure> {
    if order < 1 {
        return Err(usage("order must be at least 1"));
    }
    if order > config.max_order_cap {
        return Err(usage(format!(
            "order {order} exceeds the cap of {} (raise it with {MAX_ORDER_ENV})",
            config.max_order_cap
        )));
    }
    Ok(order)
}

/// `π/2`, `-3π/2`, `0`, `2π` style label for a pole location.
fn pole_label(function: Function, x: f64) -> String {
    let pole = nearest_pole(function, x);
    let label = match function {
        Function::Tan => {
            let half_turns = (2.0 * pole / std::f64::consts::PI).round() as i64;
            match half_turns {
                1 => "pi/2".to_owned(),
                -1 => "-pi/2".to_owned(),
                k => format!("{k}pi/2"),
            }
        }
        Function::Cot => match (pole / std::f64::consts::PI).round() as i64 {
            0 => "0".to_owned(),
            1 => "pi".to_owned(),
            -1 => "-pi".to_owned(),
            k => format!("{k}pi"),
        },
    };
    format!("{label} ({pole})")
}

fn emit_tables(tables: &[CoeffTable], format: Format, out: Box<dyn Write + '_>) -> Result<(), Failure> {
    match format {
        Format::Json => write_json(tables, out)?,
        Format::Csv => write_csv(tables, out)?,
    }
    Ok(())
}

fn dispatch(command: Command, config: &Config, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Table { function, max_order, format, out } => {
            let max_order = check_order(max_order, config)?;
            let function = Function::from(function);
            let tables = match function {
                Function::Tan => tan_tables_recurrence(max_order).map_err(usage)?,
                Function::Cot => (1..=max_order)
                    .map(|n| table(DerivSpec::cot(n)?))
                    .collect::<trig_nderiv::Result<Vec<_>>>()
                    .map_err(usage)?,
            };
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    emit_tables(&tables, format, Box::new(BufWriter::new(file)))?;
                }
                None => emit_tables(&tables, format, Box::new(&mut *stdout))?,
            }
            Ok(EXIT_OK)
        }
        Command::Eval { function, order, x, guard } => {
            let order = check_order(order, config)?;
            let x = parse_x(&x).map_err(usage)?;
            if guard.is_nan() || guard <= 0.0 {
                return Err(usage(format!("--guard must be positive, got {guard}")));
            }
            let function = Function::from(function);
            let spec = DerivSpec::new(function, order).map_err(usage)?;
            match trig_nderiv::eval_derivative(spec, x, guard) {
                Ok(r) => {
                    writeln!(stdout, "{}", r.value)?;
                    Ok(EXIT_OK)
                }
                Err(Error::Pole { distance, guard, .. }) => Err(Failure::Pole(format!(
                    "x = {x} is too close to the pole of {function} at x = {}: distance {distance:e} <= guard {guard:e}",
                    pole_label(function, x)
                ))),
                Err(e) => Err(usage(e)),
            }
        }
        Command::Verify { max_order } => {
            let max_order = check_order(max_order, config)?;
            let report = verify(max_order).map_err(usage)?;
            serde_json::to_writer(&mut *stdout, &report).map_err(|e| Failure::Io(e.to_string()))?;
            writeln!(stdout)?;
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Bench { max_order, repeats, repeats_flag } => {
            let max_order = check_order(max_order, config)?;
            let repeats = repeats.or(repeats_flag).unwrap_or(5);
            if repeats < 1 {
                return Err(usage("repeats must be at least 1"));
            }
            let report = bench(max_order, repeats).map_err(usage)?;
            serde_json::to_writer(&mut *stdout, &report).map_err(|e| Failure::Io(e.to_string()))?;
            writeln!(stdout)?;
            Ok(EXIT_OK)
        }
        Command::Latex { function, order } => {
            let order = check_order(order, config)?;
            let row = table(DerivSpec::new(function.into(), order).map_err(usage)?).map_err(usage)?;
            writeln!(stdout, "{}", latex(&row))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs one command and returns the process exit code. Diagnostics go to `stderr`.
pub fn run(cli: Cli, config: &Config, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let (code, msg) = match dispatch(cli.command, config, stdout) {
        Ok(code) => (code, None),
        Err(Failure::Usage(m)) => (EXIT_USAGE, Some(m)),
        Err(Failure::Io(m)) => (EXIT_IO, Some(m)),
        Err(Failure::Pole(m)) => (EXIT_POLE, Some(m)),
    };
    if let Some(m) = msg {
        let _ = writeln!(stderr, "error: {m}");
    }
    if stdout.flush().is_err() && code == EXIT_OK {
        return EXIT_IO;
    }
    code
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, config: &Config, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, config, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            code
        }
    }
}

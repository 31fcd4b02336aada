//! The `accelkey` command line: benchmarks, scripted sessions, layout
//! listing and the websocket demo server.

pub mod script;

use std::fmt;
use std::io::Write;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use accelkey_core::dataset::{bundled_dataset, load_dataset, DatasetSpec, BUNDLED};
use accelkey_core::eval::compare;
use accelkey_core::layout::BUILTIN_LAYOUTS;
use accelkey_core::report::{render_csv, render_json, render_table};
use accelkey_core::{
    builtin_layout, CursorPolicy, Dataset, KeypadLayout, Layout, MatchOptions, Method, Outcome, Session, SessionConfig,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "accelkey", version, about = "Four-way list selection: benchmarks and simulation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Average event counts per dataset, method and layout.
    Bench(BenchArgs),
    /// Replay an event script against a list and print a transcript.
    Simulate(SimulateArgs),
    /// Print layouts in the layout-file format.
    Layouts(LayoutsArgs),
    /// Run the websocket demo server.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Lines,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CursorArg {
    First,
    Middle,
}

impl From<CursorArg> for CursorPolicy {
    fn from(c: CursorArg) -> Self {
        match c {
            CursorArg::First => CursorPolicy::First,
            CursorArg::Middle => CursorPolicy::Middle,
        }
    }
}

/// Dataset selection shared by every command that reads entries.
#[derive(Debug, Clone, Args)]
pub struct DatasetArgs {
    /// Dataset file, or the name of a bundled dataset (writers,
    /// representatives, graduates). Repeatable.
    #[arg(long = "dataset", value_name = "PATH|NAME")]
    pub datasets: Vec<String>,
    #[arg(long, value_enum, default_value = "lines")]
    pub format: InputFormat,
    /// Column to read when `--format csv`.
    #[arg(long, value_name = "NAME")]
    pub csv_column: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct MatchArgs {
    /// Let a prefix continue into following words.
    #[arg(long, value_name = "BOOL", default_value_t = true, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
    pub span_words: bool,
    /// Let a spanning prefix continue from the last word back to the first.
    #[arg(long, value_name = "BOOL", default_value_t = false, num_args = 0..=1, default_missing_value = "true", action = clap::ArgAction::Set)]
    pub wrap: bool,
    /// Match only from the start of the whole entry.
    #[arg(long)]
    pub whole_entry: bool,
}

impl MatchArgs {
    pub fn options(&self) -> Result<MatchOptions, CliError> {
        let options = MatchOptions {
            span_words: self.span_words,
            wrap: self.wrap,
            word_mode: !self.whole_entry,
            ..MatchOptions::default()
        };
        options.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(options)
    }
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub data: DatasetArgs,
    /// Layouts to evaluate: a built-in name or a layout file.
    #[arg(long = "layout", value_delimiter = ',', default_value = "qwerty")]
    pub layouts: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "accelkey,scroll,multitap_first,multitap_match")]
    pub methods: Vec<String>,
    #[arg(long, value_enum, default_value = "first")]
    pub cursor: CursorArg,
    #[arg(long, value_enum, default_value = "table")]
    pub output: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub data: DatasetArgs,
    /// Entries given inline, one per flag; used instead of `--dataset`.
    #[arg(long = "entry", value_name = "TEXT")]
    pub entries: Vec<String>,
    #[arg(long, default_value = "qwerty")]
    pub layout: String,
    #[arg(long, value_enum, default_value = "first")]
    pub cursor: CursorArg,
    #[command(flatten)]
    pub matching: MatchArgs,
    /// Comma-separated events: U D L R (directions), S (select),
    /// B (backspace), X (reset), 2-9 (keypad keys), a-z (literal letters).
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    pub script: String,
}

#[derive(Debug, Clone, Args)]
pub struct LayoutsArgs {
    /// Show this layout (name or file) instead of the built-ins.
    #[arg(long)]
    pub layout: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: std::net::IpAddr,
    /// Directory of static files for the browser client.
    #[arg(long, value_name = "DIR")]
    pub static_dir: Option<PathBuf>,
    /// Extra layout files offered to clients by file stem.
    #[arg(long = "layout", value_name = "FILE")]
    pub layouts: Vec<PathBuf>,
    #[command(flatten)]
    pub data: DatasetArgs,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or unresolvable names; exit code 2.
    Usage(String),
    /// Failures while loading or running; exit code 1.
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

fn runtime(e: impl fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

/// Resolves a built-in layout name or a layout file path.
pub fn resolve_layout(arg: &str) -> Result<Layout, CliError> {
    if let Ok(layout) = builtin_layout(arg) {
        return Ok(layout);
    }
    let path = Path::new(arg);
    if !path.is_file() {
        return Err(CliError::Usage(format!(
            "unknown layout `{arg}`: not a built-in ({}) and no such file",
            BUILTIN_LAYOUTS.join(", ")
        )));
    }
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
    let name = path.file_stem().map_or(arg.into(), |s| s.to_string_lossy().into_owned());
    Layout::parse(name, &text).map_err(|e| CliError::Usage(format!("{arg}: {e}")))
}

/// Loads the requested datasets in file order (unsorted). With no
/// `--dataset` flags, `default` names the bundled sets to use.
pub fn load_datasets(args: &DatasetArgs, default: &[&str]) -> Result<Vec<(String, Vec<String>)>, CliError> {
    if args.format == InputFormat::Csv && args.csv_column.is_none() {
        return Err(CliError::Usage("--format csv needs --csv-column".into()));
    }
    if args.format == InputFormat::Lines && args.csv_column.is_some() {
        return Err(CliError::Usage("--csv-column only applies to --format csv".into()));
    }
    let requested: Vec<String> = if args.datasets.is_empty() {
        default.iter().map(|s| s.to_string()).collect()
    } else {
        args.datasets.clone()
    };
    requested
        .iter()
        .map(|arg| {
            let path = Path::new(arg);
            if !path.exists() {
                if let Some(entries) = bundled_dataset(arg) {
                    return Ok((arg.clone(), entries));
                }
            }
            let spec = match &args.csv_column {
                Some(column) => DatasetSpec::csv(path, column),
                None => DatasetSpec::lines(path),
            };
            let entries = load_dataset(&spec).map_err(runtime)?;
            Ok((spec.name, entries))
        })
        .collect()
}

pub fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let methods = args
        .methods
        .iter()
        .map(|m| m.parse::<Method>().map_err(CliError::Usage))
        .collect::<Result<Vec<_>, _>>()?;
    let layouts = args
        .layouts
        .iter()
        .map(|l| resolve_layout(l))
        .collect::<Result<Vec<_>, _>>()?;
    let datasets: Vec<Dataset> = load_datasets(&args.data, &BUNDLED)?
        .into_iter()
        .map(|(name, entries)| Dataset::new(name, entries))
        .collect();
    let report = compare(&datasets, &methods, &layouts, &KeypadLayout::standard(), args.cursor.into()).map_err(runtime)?;
    let text = match args.output {
        OutputFormat::Table => render_table(&report),
        OutputFormat::Csv => render_csv(&report),
        OutputFormat::Json => render_json(&report) + "\n",
    };
    out.write_all(text.as_bytes()).map_err(runtime)
}

fn describe(session: &Session) -> String {
    let mut s = format!("mode={} filtered={}", session.mode(), session.filtered().len());
    if !session.prefix().is_empty() {
        s += &format!(" prefix={}", session.prefix().tokens().join(" "));
    }
    if let Some(c) = session.cursor() {
        s += &format!(" cursor={c}");
    }
    s
}

/// Replays the script; the entry list keeps the order it was given in.
pub fn run_simulate(args: &SimulateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let steps = script::parse_script(&args.script).map_err(|e| CliError::Usage(e.to_string()))?;
    let layout = resolve_layout(&args.layout)?;
    let options = args.matching.options()?;
    let entries = if !args.entries.is_empty() {
        if !args.data.datasets.is_empty() {
            return Err(CliError::Usage("use either --entry or --dataset, not both".into()));
        }
        args.entries.clone()
    } else {
        let mut sets = load_datasets(&args.data, &["writers"])?;
        if sets.len() != 1 {
            return Err(CliError::Usage("simulate takes a single --dataset".into()));
        }
        sets.pop().expect("one dataset").1
    };
    let config = SessionConfig {
        cursor_policy: args.cursor.into(),
    };
    let mut session = Session::new(&entries, layout, KeypadLayout::standard(), options, config).map_err(runtime)?;

    let mut lines = vec![format!("start {}", describe(&session))];
    let mut last = "none".to_string();
    for (i, step) in steps.iter().enumerate() {
        let result = match session.apply(step.event) {
            Outcome::Continue => "ok".to_string(),
            Outcome::Selected { index, entry } => format!("selected #{index} {:?}", entry.display_text),
            Outcome::Rejected(r) => format!("rejected ({r})"),
        };
        lines.push(format!("{:>3} {:<2} {result}; {}", i + 1, step.token, describe(&session)));
        last = result;
    }
    lines.push(format!("outcome: {last}"));
    writeln!(out, "{}", lines.join("\n")).map_err(runtime)
}

pub fn run_layouts(args: &LayoutsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let layouts = match &args.layout {
        Some(l) => vec![resolve_layout(l)?],
        None => BUILTIN_LAYOUTS
            .iter()
            .map(|n| builtin_layout(n).expect("built-in layout"))
            .collect(),
    };
    let text: Vec<String> = layouts
        .iter()
        .map(|l| format!("# {}\n{}", l.name(), l.to_file_format()))
        .collect();
    write!(out, "{}", text.join("\n")).map_err(runtime)
}

pub fn run_serve(args: &ServeArgs) -> Result<(), CliError> {
    let mut catalog = accelkey_server::Catalog::with_bundled();
    if !args.data.datasets.is_empty() {
        for (name, entries) in load_datasets(&args.data, &[])? {
            catalog.add_dataset(name, entries);
        }
    }
    for path in &args.layouts {
        let layout = resolve_layout(&path.to_string_lossy())?;
        catalog.layouts.insert(layout.name().to_string(), layout);
    }
    if let Some(dir) = &args.static_dir {
        if !dir.is_dir() {
            return Err(CliError::Usage(format!("--static-dir {}: not a directory", dir.display())));
        }
    }
    let config = accelkey_server::ServerConfig {
        addr: SocketAddr::new(args.host, args.port),
        static_dir: args.static_dir.clone(),
    };
    let rt = tokio::runtime::Runtime::new().map_err(runtime)?;
    rt.block_on(accelkey_server::serve(config, catalog)).map_err(runtime)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Bench(a) => run_bench(a, out),
        Command::Simulate(a) => run_simulate(a, out),
        Command::Layouts(a) => run_layouts(a, out),
        Command::Serve(a) => run_serve(a),
    }
}

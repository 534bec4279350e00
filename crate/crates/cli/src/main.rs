use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use sog::api::{self, Limits};
use sog::commands::{cmd_dj, cmd_render, cmd_trace, EXIT_ENVIRONMENT, EXIT_USER};
use stateogram::{Oracle, RenderStyle};

#[derive(Parser)]
#[command(name = "sog", version, about = "State-o-gram renderer for quantum circuits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render one SVG per trace step plus strip.svg
    Render {
        /// Circuit document (.sogc.json)
        file: PathBuf,
        /// Output directory
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long, default_value_t = RenderStyle::default().width_px)]
        width: u32,
        #[arg(long, default_value_t = RenderStyle::default().height_px)]
        height: u32,
        #[arg(long = "bar-width", default_value_t = RenderStyle::default().bar_width_px)]
        bar_width: u32,
        /// Omit the gray box listing vanishing basis states
        #[arg(long = "no-vanishing-box")]
        no_vanishing_box: bool,
        #[arg(long)]
        title: Option<String>,
    },
    /// Print the trace document (state and layout per step) as JSON
    Trace { file: PathBuf },
    /// Print a Deutsch-Jozsa circuit document
    #[command(group(ArgGroup::new("oracle").required(true).args(["constant", "balanced"])))]
    Dj {
        /// Constant function value
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        constant: Option<u8>,
        /// Parity mask over the argument bits (decimal or 0b-prefixed)
        #[arg(long, value_parser = parse_mask)]
        balanced: Option<u64>,
        /// Negate the balanced function
        #[arg(long, requires = "balanced")]
        negate: bool,
        /// Total qubits (argument register plus the output qubit)
        #[arg(long = "n", default_value_t = 3)]
        n: usize,
    },
    /// Serve the JSON API and static web assets
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
        /// Directory of static assets served at /
        #[arg(long = "static")]
        static_dir: Option<PathBuf>,
    },
}

fn parse_mask(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0b") {
        Some(bits) => u64::from_str_radix(bits, 2),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid mask {s:?}: {e}"))
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Render {
            file,
            out,
            width,
            height,
            bar_width,
            no_vanishing_box,
            title,
        } => {
            let style = RenderStyle {
                width_px: width,
                height_px: height,
                bar_width_px: bar_width,
                show_vanishing_box: !no_vanishing_box,
                title,
                ..RenderStyle::default()
            };
            match cmd_render(&file, &out, &style) {
                Ok(_) => ExitCode::SUCCESS,
                Err(e) => fail(e.exit_code(), e),
            }
        }
        Command::Trace { file } => match cmd_trace(&file) {
            Ok(json) => {
                println!("{json}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(e.exit_code(), e),
        },
        Command::Dj {
            constant,
            balanced,
            negate,
            n,
        } => {
            let oracle = match (constant, balanced) {
                (Some(0), _) => Oracle::Constant0,
                (Some(_), _) => Oracle::Constant1,
                (None, Some(mask)) => Oracle::Balanced { mask, negate },
                (None, None) => unreachable!("clap requires one oracle flag"),
            };
            match cmd_dj(oracle, n) {
                Ok(doc) => {
                    println!("{doc}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e.exit_code(), e),
            }
        }
        Command::Serve {
            port,
            host,
            static_dir,
        } => {
            let limits = match Limits::from_env() {
                Ok(l) => l,
                Err(e) => return fail(EXIT_USER, e),
            };
            let runtime = match tokio::runtime::Runtime::new() {
                Ok(rt) => rt,
                Err(e) => return fail(EXIT_ENVIRONMENT, e),
            };
            match runtime.block_on(api::serve(SocketAddr::new(host, port), limits, static_dir)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail(EXIT_ENVIRONMENT, e),
            }
        }
    }
}

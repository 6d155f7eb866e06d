use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use neutra_cli::{parse_workspace, run, Cmd, Format, EXIT_ERROR};

/// Exact structure checking for neutrosophic algebra over finite carriers.
#[derive(Parser)]
#[command(name = "neutra", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Workspace file to load.
    #[arg(global = true, default_value = "-", value_name = "FILE")]
    file: PathBuf,

    /// Output format.
    #[arg(global = true, long, default_value = "text")]
    format: String,

    /// Enumeration/closure budget (defaults to $NEUTRA_CAP or 1000000).
    #[arg(global = true, long)]
    cap: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };
    let cap = cli
        .cap
        .or_else(|| {
            std::env::var("NEUTRA_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1_000_000);

    let source = if cli.file.as_os_str() == "-" {
        use std::io::Read;
        let mut buffer = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buffer) {
            eprintln!("error: reading stdin: {e}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
        buffer
    } else {
        match std::fs::read_to_string(&cli.file) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: {}: {e}", cli.file.display());
                return ExitCode::from(EXIT_ERROR as u8);
            }
        }
    };

    let workspace = match parse_workspace(&source) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    };

    // coefficient arithmetic aborts on 64-bit overflow; surface that as
    // an input error rather than a crash
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| run(&cli.command, &workspace, cap));
    let _ = std::panic::take_hook();
    match outcome {
        Ok((report, exit)) => {
            print!("{}", report.render(format));
            ExitCode::from(exit as u8)
        }
        Err(cause) => {
            let message = cause
                .downcast_ref::<String>()
                .map(String::as_str)
                .or_else(|| cause.downcast_ref::<&str>().copied())
                .unwrap_or("computation aborted");
            eprintln!("error: {message}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}

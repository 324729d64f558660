use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use grundy_cli::args::Format;
use grundy_cli::{run, Args};

fn main() -> ExitCode {
    let args = Args::parse();
    let exec = run(&args);

    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    let printed = match (&exec.raw, args.format) {
        (Some(raw), _) => write!(stdout, "{raw}").and_then(|_| write!(stderr, "{}", exec.text)),
        (None, Format::Json) => {
            let json = serde_json::to_string_pretty(&exec.report).expect("report serializes");
            writeln!(stdout, "{json}").and_then(|_| write!(stderr, "{}", exec.text))
        }
        (None, Format::Text) => write!(stdout, "{}", exec.text),
    };
    if printed.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(exec.report.exit_status as u8)
}

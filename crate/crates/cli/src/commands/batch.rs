use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser};

use crate::commands::eval::{self, EvalArgs};
use crate::{exit, CliError};

#[derive(Args, Debug)]
pub struct BatchArgs {
    /// File with one eval request per line; blank lines and `#` comments are skipped
    pub file: PathBuf,
}

#[derive(Parser, Debug)]
#[command(no_binary_name = true)]
struct Line {
    #[command(flatten)]
    eval: EvalArgs,
}

fn eval_line(line: &str) -> Result<String, CliError> {
    let mut words = shlex::split(line).ok_or_else(|| CliError::Usage("unbalanced quotes".into()))?;
    if words.first().map(String::as_str) == Some("eval") {
        words.remove(0);
    }
    let parsed = Line::try_parse_from(crate::shield_negative_literals(words)).map_err(|e| {
        let text = e.render().to_string();
        let first = text.lines().next().unwrap_or_default();
        CliError::Usage(first.trim_start_matches("error: ").to_string())
    })?;
    eval::run(&parsed.eval)
}

pub fn run(args: &BatchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let text =
        std::fs::read_to_string(&args.file).map_err(|_| CliError::FileNotFound(args.file.display().to_string()))?;
    let mut code = exit::OK;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match eval_line(line) {
            Ok(result) => {
                let _ = writeln!(out, "{result}");
            }
            Err(e) => {
                let _ = writeln!(out, "line {}: {e}", i + 1);
                if code == exit::OK {
                    code = e.code();
                }
            }
        }
    }
    Ok(code)
}

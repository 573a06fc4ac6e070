use std::process::ExitCode;

use clap::Parser;
use corequot::cli::{execute, CommandRequest, RunReport, Status};

fn main() -> ExitCode {
    let req = match CommandRequest::try_parse() {
        Ok(req) => req,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            if std::env::args().any(|a| a == "--json") {
                let message = e.to_string();
                let report = RunReport {
                    status: Status::Error,
                    payload: None,
                    message: Some(message.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string()),
                    elapsed_ms: 0.0,
                };
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            }
            return ExitCode::from(2);
        }
    };
    let run = execute(&req);
    if run.report.status == Status::Error {
        if let Some(msg) = &run.report.message {
            eprintln!("error: {msg}");
        }
        if req.json {
            println!("{}", run.output(true));
        }
    } else {
        println!("{}", run.output(req.json));
    }
    ExitCode::from(run.report.status.exit_code() as u8)
}

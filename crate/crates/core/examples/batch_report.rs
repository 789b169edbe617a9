//! Builds JSON reports in-process, the same way the `solve` binary does.
//!
//! cargo run --example batch_report

use quartica::cli::{render, run, run_batch, Method, OutputFormat, SolveRequest};
use quartica::complex::real;

fn main() -> quartica::Result<()> {
    let request = SolveRequest {
        coeffs: [1.0, 0.0, -7.0, -6.0].map(real).to_vec(),
        method: Method::All,
        ..SolveRequest::default()
    };
    let report = run(&request)?;
    println!("{}", render(&report, OutputFormat::Text));

    let path = std::env::temp_dir().join("quartica-example.jsonl");
    std::fs::write(
        &path,
        "{\"coeffs\": [1, 2, 0, -1, -1], \"method\": \"ferrari\"}\n\
         {\"coeffs\": [1, 0, 6, -20], \"method\": \"trig\"}\n\
         {\"coeffs\": [\"1\", \"0\", \"0\", \"-2-11i\"], \"method\": \"cardano\"}\n",
    )
    .map_err(|e| quartica::Error::FileNotFound(e.to_string()))?;
    let out = run_batch(&path, &SolveRequest::default())?;
    for line in &out.lines {
        println!("{}", &line[..line.len().min(120)]);
    }
    println!("exit code {}", out.exit_code);
    Ok(())
}

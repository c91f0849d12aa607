//! Runs a verification suite from the library and renders the report.
//!
//! cargo run --example verify_report -- json

use centroskew::report::{CommandReport, OutputFormat};
use centroskew::verify::{run_suite, Suite};
use centroskew::Tolerance;

fn main() -> centroskew::Result<()> {
    let format = match std::env::args().nth(1).as_deref() {
        Some("json") => OutputFormat::Json,
        Some("csv") => OutputFormat::Csv,
        _ => OutputFormat::Pretty,
    };
    let seed = 7;
    let metrics = run_suite(Suite::Relation, 2..=8, seed, Tolerance::default())?;
    let report = CommandReport::new("verify relation", 8, metrics, None).with_seed(seed);
    print!("{}", report.render(format));
    std::process::exit(if report.passed() { 0 } else { 1 });
}

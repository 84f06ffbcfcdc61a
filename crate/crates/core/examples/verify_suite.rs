//! Runs a verification suite in-process and prints its Markdown table.

use leibniz::verify::{run_suite, SuiteConfig, SuiteId};

fn main() -> leibniz::Result<()> {
    let suite: SuiteId = std::env::args().nth(1).unwrap_or_else(|| "degree0".into()).parse()?;
    let config = SuiteConfig::new(suite);
    let report = run_suite(&config, None)?;
    print!("{}", report.to_markdown());
    println!(
        "\n{}: {} pass, {} fail, {} skipped, {} reported",
        suite, report.summary.pass, report.summary.fail, report.summary.skipped, report.summary.reported
    );
    for f in report.failures() {
        println!("FAIL {}/{}: {}", f.subject, f.check, f.detail);
    }
    Ok(())
}

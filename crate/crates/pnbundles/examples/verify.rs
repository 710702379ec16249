//! Recomputes every bundle of the classification for n = 4, 5, 6 and prints the checks.

use pnbundles::classifier::verify_classification;

fn main() -> pnbundles::Result<()> {
    let report = verify_classification()?;
    print!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}

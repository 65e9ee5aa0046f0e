//! Run every verification over the built-in corpus in one deterministic
//! pass and print the machine-readable report. Rerunning with the same
//! seed reproduces the output byte for byte.

use preston::suite;

fn main() -> preston::Result<()> {
    let report = suite::run(7)?;
    eprintln!(
        "{} members, {} lambda-products, ok: {}",
        report.members.len(),
        report.lambda_members.len(),
        report.ok
    );
    println!("{}", report.to_json());
    Ok(())
}

//! Driving the verification suites from code: the same machinery behind
//! the `verify` and `certify` subcommands, returning a structured report.
//!
//! Run with `cargo run --example verification_report`.

use invariant_chain::{run_certify, run_verify, Char, Config};

fn main() {
    let cfg = Config {
        characteristic: Char::Prime(5),
        samples: 10,
        depth_max: 3,
        seed: 42,
        ..Config::default()
    };

    let report = run_verify(&cfg);
    println!("{}", report.to_text());
    assert!(report.passed());

    let certs = run_certify(&cfg);
    println!(
        "certify: {} certificates, overall {}",
        certs.checks().len(),
        if certs.passed() { "pass" } else { "fail" }
    );

    // The negative control perturbs the generator table; the suite must
    // notice. This is what `--negative-control` does on the command line.
    let tampered = Config { negative_control: true, ..cfg };
    let control = run_verify(&tampered);
    assert!(!control.passed());
    let failed: Vec<&str> = control
        .checks()
        .iter()
        .filter(|c| c.status != invariant_chain::report::CheckStatus::Pass)
        .map(|c| c.id.as_str())
        .collect();
    println!("negative control failed as required at: {}", failed.join(", "));
}

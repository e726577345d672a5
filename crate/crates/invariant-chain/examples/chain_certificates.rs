//! Finite non-membership certificates: at every depth n, the first n
//! derived constraints pin a unique coefficient candidate c*, and the
//! next constraint already fails on it — so no single coefficient vector
//! can serve an invariant-coefficient membership equation. The ideals
//! (f_1, ..., f_n) therefore keep growing strictly.
//!
//! Run with `cargo run --example chain_certificates`.

use invariant_chain::{chain_certificate, Char, VarRegistry};

fn main() {
    for p in [0u64, 2, 5] {
        let ch = Char::new(p).unwrap();
        println!("characteristic {p}:");
        for n in 1..=4 {
            let reg = VarRegistry::new();
            let cert = chain_certificate(n, ch, &reg).unwrap();
            println!(
                "  depth {n}: Hankel det = {} ({} terms), cleared residual has {} terms",
                if cert.hankel_det.num().num_terms() <= 4 {
                    cert.hankel_det.to_string()
                } else {
                    format!("[{} digest]", &cert.digests["hankel_det"][..12])
                },
                cert.hankel_det.num().num_terms(),
                cert.cleared_residual().num_terms(),
            );
            assert!(!cert.hankel_det.is_zero());
            assert!(!cert.residual.is_zero());
        }
    }

    // The depth-1 case is small enough to read in full: the candidate is
    // c* = a2/a1 and the cleared residual is the 2x2 Hankel determinant.
    let reg = VarRegistry::new();
    let cert = chain_certificate(1, Char::Zero, &reg).unwrap();
    println!("\ndepth 1 in full:");
    println!("  c* = {}", cert.cstar[0]);
    println!("  residual = {}", cert.residual);
    println!("  cleared residual = {}", cert.cleared_residual());

    // Certificates serialize to one JSON line for fixtures and reports.
    println!("\ncertificate line:\n{}", cert.to_json_line(64 * 1024));
}

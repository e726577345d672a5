//! The derivation engine, one move at a time: write f_3 in the ideal
//! (f_1, f_2)R, read off the constant-term relation, apply sigma to both
//! sides, and watch the pollution terms appear — the exact failure of the
//! coefficients to be invariant.
//!
//! Run with `cargo run --example derivation_step`.

use invariant_chain::{
    express_f_in_ideal, extract_constant_relation, sigma_step, Char, VarRegistry,
};

fn main() {
    let ch = Char::Zero;
    let d = 6;
    let reg = VarRegistry::new();

    // f3 = r1 f1 + r2 f2 holds in R, but the Cramer coefficients are not
    // invariant: sigma moves both.
    let membership = express_f_in_ideal(3, ch, d, &reg).unwrap();
    println!("f3 = r1 f1 + r2 f2 with");
    println!("  r1 = {}", membership.r1);
    println!("  r2 = {}", membership.r2);
    for w in &membership.noninvariance {
        println!(
            "  sigma(r{}) - r{} is nonzero of order {:?} (digest {}...)",
            w.position,
            w.position,
            w.difference_order,
            &w.difference_digest[..12]
        );
    }

    // Comparing x-coefficients turns membership into a relation in K.
    let relation = extract_constant_relation(3, vec![membership.r1, membership.r2]).unwrap();
    println!("\nconstant-term relation: {relation}");
    println!("holds exactly: {}", relation.holds_exactly());

    // Applying sigma and reducing mod (x^2, y^2) shifts the relation and
    // charges each coefficient its xy-pollution lambda_k.
    let step = sigma_step(&relation, d, &reg).unwrap();
    println!("\nafter one sigma step:");
    println!("  shifted relation: {}", step.next);
    println!("  shifted relation holds by itself: {}", step.next.holds_exactly());
    for (k, lambda) in step.pollution.0.iter().enumerate() {
        println!("  lambda_{} = {lambda}", k + 1);
    }
    println!(
        "  full xy-identity (shift + pollution) holds exactly: {}",
        step.full_identity_holds
    );
    assert!(step.full_identity_holds);
    assert!(!step.pollution.is_zero());

    // With coefficients in F the pollution vanishes and the step is the
    // pure shift; this is the move an invariant-coefficient membership
    // equation would be forced to repeat forever.
    let scalar_rel = extract_constant_relation(
        3,
        vec![
            invariant_chain::RatFunc::from_i64(2, ch),
            invariant_chain::RatFunc::from_i64(-1, ch),
        ],
    )
    .unwrap();
    let scalar_step = sigma_step(&scalar_rel, d, &reg).unwrap();
    println!(
        "\nground-field coefficients: pollution zero: {}, next = {}",
        scalar_step.pollution.is_zero(),
        scalar_step.next
    );
}

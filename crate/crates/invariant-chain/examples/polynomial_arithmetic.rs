//! Sparse polynomials over F in the indexed indeterminates a1, b1, a2, ...
//!
//! Run with `cargo run --example polynomial_arithmetic`.

use invariant_chain::{parse_poly, Char, Poly, Scalar, VarRef};

fn main() {
    // Characteristic zero: arbitrary-precision rational coefficients.
    let ch = Char::Zero;
    let a1 = Poly::var(VarRef::a(1), ch);
    let b1 = Poly::var(VarRef::b(1), ch);

    let product = &(&a1 + &b1) * &(&a1 - &b1);
    println!("(a1 + b1)(a1 - b1) = {product}");

    // The canonical text grammar round-trips.
    let p = parse_poly("3*a1^2*b2 - 1/2*a3", ch).unwrap();
    println!("parsed back: {p}");
    assert_eq!(p.to_string(), "3*a1^2*b2 - 1/2*a3");

    // Characteristic two: the Frobenius kills cross terms.
    let ch2 = Char::Prime(2);
    let sum = &Poly::var(VarRef::a(1), ch2) + &Poly::var(VarRef::b(1), ch2);
    println!("char 2: (a1 + b1)^2 = {}", sum.pow(2));

    // Exact division is decided by leading terms; no remainder survives.
    let q = product.div_exact(&(&a1 + &b1)).unwrap();
    println!("(a1^2 - b1^2) / (a1 + b1) = {q}");
    assert!(product.div_exact(&Poly::var(VarRef::a(2), ch)).is_none());

    // Coefficients stay exact no matter how they are built.
    let third = Scalar::from_ratio(1, 3, ch).unwrap();
    let scaled = a1.scale(&third);
    println!("a1/3 + a1/3 + a1/3 = {}", &(&scaled + &scaled) + &scaled);
}

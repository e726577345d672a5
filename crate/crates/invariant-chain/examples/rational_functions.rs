//! The fraction field K = F(a1, b1, a2, b2, ...): normalization and
//! cross-multiplication equality, with no multivariate gcd anywhere.
//!
//! Run with `cargo run --example rational_functions`.

use invariant_chain::{parse_ratfunc, Char, RatFunc};

fn main() {
    let ch = Char::Zero;
    let parse = |s: &str| parse_ratfunc(s, ch).unwrap();

    // Equality is decided by cross-multiplication, so two distinct
    // representatives of the same value compare equal.
    let plain = parse("a1/b1");
    let padded = parse("(a1*a2)/(b1*a2)");
    println!("{plain}  ==  {padded}  ->  {}", plain == padded);
    assert_eq!(plain, padded);

    // Denominators are normalized deterministically: scalar content out,
    // leading coefficient sign fixed (monic in characteristic p).
    let r = parse("(2*a1)/(-4*b1 + 2*a2)");
    println!("(2*a1)/(-4*b1 + 2*a2) normalizes to {r}");

    // Inverse and field laws hold exactly.
    let inv = r.inv().unwrap();
    assert!((&r * &inv).is_one());
    println!("r * r^-1 = 1 with r^-1 = {inv}");

    // Quotients that divide out exactly collapse; mixed fractions stay.
    let collapsed = parse("(a1^2 - b1^2)/(a1 + b1)");
    println!("(a1^2 - b1^2)/(a1 + b1) = {collapsed}");
    let mixed = parse("(a1^2 + b1)/(a1 + b1)");
    println!("(a1^2 + b1)/(a1 + b1) stays {mixed}");

    // Characteristic five: scalars reduce mod 5 and denominators go monic.
    let ch5 = Char::Prime(5);
    let s = parse_ratfunc("(6*a1 + 1)/(3*b2)", ch5).unwrap();
    println!("char 5: (6*a1 + 1)/(3*b2) = {s}");

    // Division by the zero value is rejected.
    let zero = RatFunc::zero(ch);
    assert!(plain.checked_div(&zero).is_err());
    println!("division by zero -> {:?}", plain.checked_div(&zero).unwrap_err());
}

//! The ring R = K[[x,y]] truncated at a total degree: arithmetic, unit
//! inversion, reduction modulo m^k and (x^2, y^2), and substitution.
//!
//! Run with `cargo run --example truncated_series`.

use invariant_chain::{
    parse_poly, parse_ratfunc, substitute, Char, PowerSeries, RatFunc,
};
use std::collections::BTreeMap;

fn main() {
    let ch = Char::Zero;
    let d = 4;
    let x = PowerSeries::var_x(ch, d);
    let y = PowerSeries::var_y(ch, d);

    // Arithmetic truncates at total degree d.
    let s = &(&x + &y) * &(&x - &y);
    println!("(x + y)(x - y) = {s}");
    let x4 = x.pow(4);
    println!("x^4 = {x4}, x^4 * x = {}", &x4 * &x);

    // Units invert by the geometric series; the identity is exact at d.
    let u = &PowerSeries::one(ch, d) - &x;
    let v = u.invert_unit().unwrap();
    println!("(1 - x)^-1 = {v}");
    assert_eq!(&u * &v, PowerSeries::one(ch, d));

    // Normal forms: degree filter for m^k, divisibility filter for (x^2, y^2).
    let mix = PowerSeries::from_coeffs(
        ch,
        d,
        [
            ((0, 0), RatFunc::from_i64(5, ch)),
            ((1, 0), RatFunc::one(ch)),
            ((1, 1), RatFunc::one(ch)),
            ((2, 1), RatFunc::from_i64(7, ch)),
            ((0, 3), RatFunc::from_i64(-2, ch)),
        ],
    );
    println!("s = {mix}");
    println!("s mod m^2 = {}", mix.reduce_mod_m_pow(2));
    println!("s mod (x^2, y^2) = {}", mix.reduce_mod_x2y2());
    println!("s retruncated to 1 = {}", mix.retrunc(1).unwrap());

    // Inspection: constant term, a single coefficient, the order.
    println!(
        "constant term {}, coeff(1,1) = {}, order = {:?}",
        mix.constant_term(),
        mix.coeff(1, 1),
        mix.order()
    );

    // Substitution is the F-algebra homomorphism on polynomial inputs:
    // send a1 to a1 + a2*x*y + b2*y^2 and expand a1^2.
    let image = PowerSeries::from_coeffs(
        ch,
        d,
        [
            ((0, 0), parse_ratfunc("a1", ch).unwrap()),
            ((1, 1), parse_ratfunc("a2", ch).unwrap()),
            ((0, 2), parse_ratfunc("b2", ch).unwrap()),
        ],
    );
    let mut images = BTreeMap::new();
    images.insert(invariant_chain::VarRef::a(1), image);
    let expanded = substitute(&parse_poly("a1^2", ch).unwrap(), &images, d).unwrap();
    println!("a1^2 after substitution = {expanded}");
}

//! The automorphism sigma: x and y stay fixed, a_n and b_n move by
//! multiples of f_{n+1} = a_{n+1} x + b_{n+1} y, and every element of K
//! moves only inside m^2.
//!
//! Run with `cargo run --example sigma_automorphism`.

use invariant_chain::{
    check_eq1, make_f, parse_poly, parse_ratfunc, Char, PowerSeries, Sigma, VarRegistry,
};

fn main() {
    let ch = Char::Zero;
    let d = 4;
    let reg = VarRegistry::new();
    let sigma = Sigma::new(d);

    // Generator images. Applying sigma to a_1 references a_2, b_2; the
    // registry widens automatically and reports the window at the end.
    let a1 = parse_poly("a1", ch).unwrap();
    let b1 = parse_poly("b1", ch).unwrap();
    println!("sigma(a1) = {}", sigma.apply_poly(&a1, &reg).unwrap());
    println!("sigma(b1) = {}", sigma.apply_poly(&b1, &reg).unwrap());

    // x, y, and every f_n are fixed points.
    let x = PowerSeries::var_x(ch, d);
    assert_eq!(sigma.apply_series(&x, &reg).unwrap(), x);
    for n in 1..=4 {
        let f = make_f(n, ch, d, &reg).unwrap();
        assert_eq!(sigma.apply_series(&f, &reg).unwrap(), f);
    }
    println!("sigma fixes x, y, f1..f4 exactly");

    // On a fraction, sigma(g/h) = sigma(g) * sigma(h)^-1 via the geometric
    // series; the constant term stays put and everything else lands in m^2.
    let alpha = parse_ratfunc("a1/b1", ch).unwrap();
    let moved = sigma.apply_ratfunc(&alpha, &reg).unwrap();
    println!("sigma(a1/b1) = {moved}");
    let out = check_eq1(&alpha, d, &reg).unwrap();
    println!(
        "sigma(a1/b1) - a1/b1 has order {:?} (>= 2): {}",
        out.difference.order(),
        out.pass
    );

    // sigma is a ring homomorphism of the truncated ring.
    let u = sigma.apply_ratfunc(&alpha, &reg).unwrap();
    let beta = parse_ratfunc("b2/(a1 + b1)", ch).unwrap();
    let v = sigma.apply_ratfunc(&beta, &reg).unwrap();
    let product_image = sigma
        .apply_series(
            &(&PowerSeries::constant(alpha, d) * &PowerSeries::constant(beta, d)),
            &reg,
        )
        .unwrap();
    assert_eq!(product_image, &u * &v);
    println!("sigma(uv) = sigma(u) sigma(v) verified");

    println!("variable window used: 1..={}", reg.max_index());
}

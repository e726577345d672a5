//! Exact determinants and linear solves over K: fraction-free Bareiss
//! elimination as the primary route, naive fraction elimination as the
//! independent oracle, Cramer solutions verified by substitution.
//!
//! Run with `cargo run --example exact_linear_algebra`.

use invariant_chain::{parse_ratfunc, Char, DetMode, KMatrix, RatFunc, VarRef};

fn main() {
    let ch = Char::Zero;
    let rf = |s: &str| parse_ratfunc(s, ch).unwrap();

    // The 2x2 Hankel matrix in the a-indeterminates.
    let hankel = KMatrix::from_rows(vec![
        vec![rf("a1"), rf("a2")],
        vec![rf("a2"), rf("a3")],
    ])
    .unwrap();
    let det_b = hankel.det(DetMode::Bareiss).unwrap();
    let det_n = hankel.det(DetMode::Naive).unwrap();
    println!("det [[a1,a2],[a2,a3]] = {det_b} (both routes agree: {})", det_b == det_n);

    // Cramer solve: every component shares the determinant as denominator,
    // and the solution is re-verified by substitution before returning.
    let solution = hankel.solve(&[rf("a3"), rf("a4")]).unwrap();
    println!("solve([[a1,a2],[a2,a3]], [a3,a4]):");
    for (i, c) in solution.iter().enumerate() {
        println!("  c{} = {c}", i + 1);
    }
    assert_eq!(solution, hankel.solve_naive(&[rf("a3"), rf("a4")]).unwrap());

    // Singular systems are rejected after an exact zero test of the det.
    let singular = KMatrix::from_rows(vec![
        vec![rf("a1"), rf("a2")],
        vec![rf("a1"), rf("a2")],
    ])
    .unwrap();
    println!(
        "repeated rows: det = {}, solve -> {:?}",
        singular.det(DetMode::Bareiss).unwrap(),
        singular.solve(&[rf("a3"), rf("a4")]).unwrap_err()
    );

    // A fraction-entry matrix: Bareiss clears denominators row by row and
    // keeps every interior division exact.
    let mixed = KMatrix::from_fn(3, 3, |i, j| {
        if i == j {
            rf("a1/b1")
        } else {
            RatFunc::var(VarRef::a((i + j) as u32 + 1), ch)
        }
    })
    .unwrap();
    let det = mixed.det(DetMode::Bareiss).unwrap();
    println!("fraction-entry 3x3 det = {det}");
    assert_eq!(det, mixed.det(DetMode::Naive).unwrap());
}

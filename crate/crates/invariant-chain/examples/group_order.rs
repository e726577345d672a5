//! Powers of sigma: the closed form sigma^k(a_n) = a_n + k*y*f_{n+1},
//! agreement with honest iteration, and the group order — exactly p in
//! characteristic p, infinite in characteristic zero.
//!
//! Run with `cargo run --example group_order`.

use invariant_chain::{
    check_group_order, parse_poly, sigma_power, Char, PowerMode, PowerSeries, Sigma,
    VarRegistry,
};

fn main() {
    let d = 4;

    for p in [0u64, 2, 3, 5] {
        let ch = Char::new(p).unwrap();
        let reg = VarRegistry::new();
        let a1 = PowerSeries::from_poly(parse_poly("a1", ch).unwrap(), d);

        // Closed form and iteration agree for every k; in characteristic p
        // the coefficient k acts mod p, so sigma^p collapses to the identity.
        for k in [1i64, 2, -1, 7] {
            let closed = sigma_power(&a1, k, PowerMode::ClosedForm, 16, &reg).unwrap();
            let iterated = sigma_power(&a1, k, PowerMode::Iterate, 16, &reg).unwrap();
            assert_eq!(closed, iterated);
            if k == 2 {
                println!("char {p}: sigma^2(a1) = {closed}");
            }
        }

        // sigma^-1 undoes sigma.
        let sigma = Sigma::new(d);
        let forward = sigma.apply_series(&a1, &reg).unwrap();
        let back = Sigma::with_power(d, -1).apply_series(&forward, &reg).unwrap();
        assert_eq!(back, a1);

        // The order check iterates honestly and reports its witness.
        let k_max = if p == 0 { 7 } else { p as u32 };
        let order = check_group_order(&sigma, ch, k_max, &reg).unwrap();
        println!(
            "char {p}: order = {}; {}",
            order
                .order
                .map(|o| o.to_string())
                .unwrap_or_else(|| "infinite (up to the bound)".into()),
            order.witness
        );
        assert!(order.pass);
    }
}

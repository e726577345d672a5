//! Invariants of a discrete valuation ring never misbehave: the image of
//! the valuation on the invariant subring is either zero (a field) or
//! generated by one positive integer (again a DVR). This classifies
//! sampled valuation images.
//!
//! Run with `cargo run --example dvr_classification`.

use invariant_chain::{dvr_classify, DvrClass};
use std::collections::BTreeSet;

fn main() {
    let cases: [&[u64]; 4] = [&[0], &[4, 6], &[3], &[0, 10, 15, 35]];
    for values in cases {
        let set: BTreeSet<u64> = values.iter().copied().collect();
        match dvr_classify(&set).unwrap() {
            DvrClass::Field => println!("{values:?} -> field (every invariant is a unit)"),
            DvrClass::Dvr { generator, normalized } => println!(
                "{values:?} -> DVR with value group {generator}Z, normalized image {normalized:?}"
            ),
        }
    }

    // The empty sample is rejected rather than guessed at.
    assert!(dvr_classify(&BTreeSet::new()).is_err());
    println!("empty sample -> {:?}", dvr_classify(&BTreeSet::new()).unwrap_err());
}

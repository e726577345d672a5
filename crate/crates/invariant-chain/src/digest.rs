//! Stable content digests for large symbolic values.

use sha2::{Digest, Sha256};

/// Hex-encoded SHA-256 of the canonical text of a value.
pub fn content_digest(text: &str) -> String {
    let hash = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(64);
    for byte in hash {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_and_distinct() {
        assert_eq!(content_digest("a1"), content_digest("a1"));
        assert_ne!(content_digest("a1"), content_digest("a2"));
        assert_eq!(content_digest("").len(), 64);
    }
}

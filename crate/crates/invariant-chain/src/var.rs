//! Indexed indeterminates `a1, b1, a2, b2, ...` and the interning registry
//! that tracks the active variable window.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

/// The two indeterminate families.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
}

/// One indeterminate `a<n>` or `b<n>`, n >= 1.
///
/// Total order: compare index first, then A before B, so
/// `a1 < b1 < a2 < b2 < ...`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarRef {
    family: Family,
    index: u32,
}

impl VarRef {
    /// Direct constructor; panics on index 0. Validated creation goes
    /// through [`VarRegistry::intern`].
    pub fn new(family: Family, index: u32) -> VarRef {
        assert!(index >= 1, "indeterminate indices start at 1");
        VarRef { family, index }
    }

    pub fn a(index: u32) -> VarRef {
        VarRef::new(Family::A, index)
    }

    pub fn b(index: u32) -> VarRef {
        VarRef::new(Family::B, index)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index(self) -> u32 {
        self.index
    }

    fn rank(self) -> (u32, u8) {
        (self.index, matches!(self.family, Family::B) as u8)
    }
}

impl Ord for VarRef {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for VarRef {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "a{}", self.index),
            Family::B => write!(f, "b{}", self.index),
        }
    }
}

/// Append-only registry of the indeterminates a run has touched.
///
/// Interning is the identity on labels; the registry's job is to validate
/// indices and record the largest index seen, the "variable window" echoed
/// in reports. Concurrent interning is serialized through an atomic
/// maximum, so the final window does not depend on scheduling.
#[derive(Debug, Default)]
pub struct VarRegistry {
    max_index: AtomicU32,
}

impl VarRegistry {
    pub fn new() -> VarRegistry {
        VarRegistry { max_index: AtomicU32::new(0) }
    }

    /// Returns the unique `VarRef` for `(family, index)` and widens the
    /// window; `index < 1` is rejected.
    pub fn intern(&self, family: Family, index: u32) -> Result<VarRef> {
        if index < 1 {
            return Err(Error::InvalidIndex(index));
        }
        self.max_index.fetch_max(index, Ordering::SeqCst);
        Ok(VarRef { family, index })
    }

    /// Largest index interned so far; 0 when nothing was interned.
    pub fn max_index(&self) -> u32 {
        self.max_index.load(Ordering::SeqCst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intern_is_identity_on_labels() {
        let reg = VarRegistry::new();
        let v = reg.intern(Family::A, 1).unwrap();
        assert_eq!(v, VarRef::a(1));
        assert_eq!(v.to_string(), "a1");
        assert_eq!(reg.intern(Family::B, 3).unwrap().to_string(), "b3");
        assert_eq!(reg.intern(Family::A, 1).unwrap(), v);
        assert_eq!(reg.max_index(), 3);
    }

    #[test]
    fn zero_index_rejected() {
        let reg = VarRegistry::new();
        assert_eq!(reg.intern(Family::A, 0), Err(Error::InvalidIndex(0)));
    }

    #[test]
    fn order_interleaves_families() {
        let mut vars = [VarRef::a(2), VarRef::b(1), VarRef::b(2), VarRef::a(1)];
        vars.sort();
        let shown: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        assert_eq!(shown, ["a1", "b1", "a2", "b2"]);
    }

    #[test]
    fn concurrent_interning_is_deterministic() {
        let reg = std::sync::Arc::new(VarRegistry::new());
        let mut handles = Vec::new();
        for t in 0..8u32 {
            let reg = reg.clone();
            handles.push(std::thread::spawn(move || {
                for i in 1..=50 {
                    reg.intern(if i % 2 == 0 { Family::A } else { Family::B }, i * (t + 1))
                        .unwrap();
                }
            }));
        }
        for h in handles {
            h.join().unwrap();
        }
        assert_eq!(reg.max_index(), 400);
    }
}

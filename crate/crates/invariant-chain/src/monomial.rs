//! Sparse monomials in the indeterminates `a<n>`, `b<n>`.

use crate::var::VarRef;
use std::collections::BTreeMap;
use std::fmt;

/// A power product of indeterminates; the empty product is 1.
///
/// No zero exponents are stored. Iteration runs in increasing `VarRef`
/// order. The monomial order is graded: total degree first, ties broken
/// lexicographically with lower-indexed variables more significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<VarRef, u32>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarRef) -> Monomial {
        let mut exps = BTreeMap::new();
        exps.insert(v, 1);
        Monomial { exps }
    }

    pub fn from_exps(pairs: impl IntoIterator<Item = (VarRef, u32)>) -> Monomial {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, v: VarRef) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarRef, u32)> + '_ {
        self.exps.iter().map(|(v, e)| (*v, *e))
    }

    pub fn vars(&self) -> impl Iterator<Item = VarRef> + '_ {
        self.exps.keys().copied()
    }

    pub fn max_index(&self) -> u32 {
        self.exps.keys().map(|v| v.index()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            *exps.entry(*v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Exact division; `None` when some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (v, e) in &other.exps {
            let slot = exps.get_mut(v)?;
            if *slot < *e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                exps.remove(v);
            }
        }
        Some(Monomial { exps })
    }

    pub fn pow(&self, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(v, k)| (*v, k * e)).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match self.total_degree().cmp(&other.total_degree()) {
            Equal => {}
            ord => return ord,
        }
        // Same degree: first variable (in VarRef order) where the exponents
        // differ decides; the larger exponent on the earlier variable wins.
        let mut lhs = self.exps.iter();
        let mut rhs = other.exps.iter();
        loop {
            match (lhs.next(), rhs.next()) {
                (None, None) => return Equal,
                // Exhausted side has exponent 0 on the other's variable.
                (None, Some(_)) => return Less,
                (Some(_), None) => return Greater,
                (Some((lv, le)), Some((rv, re))) => match lv.cmp(rv) {
                    Less => return Greater,  // self has the earlier variable
                    Greater => return Less,
                    Equal => match le.cmp(re) {
                        Equal => {}
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(VarRef, u32)]) -> Monomial {
        Monomial::from_exps(pairs.iter().copied())
    }

    #[test]
    fn graded_order() {
        let a1 = VarRef::a(1);
        let b1 = VarRef::b(1);
        let a2 = VarRef::a(2);
        // degree dominates
        assert!(m(&[(a1, 2), (VarRef::b(2), 1)]) > m(&[(VarRef::a(3), 1)]));
        // same degree: a1^2 > a1*b1 > b1^2 > a2^2
        assert!(m(&[(a1, 2)]) > m(&[(a1, 1), (b1, 1)]));
        assert!(m(&[(a1, 1), (b1, 1)]) > m(&[(b1, 2)]));
        assert!(m(&[(b1, 2)]) > m(&[(a2, 2)]));
        // a1*b2 > a2*b1 (ties broken at a1)
        assert!(m(&[(a1, 1), (VarRef::b(2), 1)]) > m(&[(a2, 1), (b1, 1)]));
    }

    #[test]
    fn division_and_display() {
        let a1 = VarRef::a(1);
        let b2 = VarRef::b(2);
        let prod = m(&[(a1, 2), (b2, 1)]);
        assert_eq!(prod.to_string(), "a1^2*b2");
        assert_eq!(prod.div(&m(&[(a1, 1)])).unwrap().to_string(), "a1*b2");
        assert_eq!(prod.div(&m(&[(b2, 2)])), None);
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(prod.div(&prod).unwrap(), Monomial::one());
    }
}

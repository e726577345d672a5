//! Exact linear algebra over K: determinants and linear solving.
//!
//! The primary route is fraction-free Bareiss elimination on a
//! denominator-cleared polynomial matrix; every interior division is exact,
//! which keeps entries as small as minors. A naive fraction-based Gaussian
//! elimination is kept alongside as an independent oracle. Pivoting always
//! takes the first exactly-nonzero candidate, so results are deterministic.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::scalar::Char;

/// Elimination strategy for determinants.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DetMode {
    Bareiss,
    Naive,
}

/// A dense matrix over the rational function field K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl KMatrix {
    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<KMatrix> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::Shape("matrix needs at least one row".into()));
        }
        let ncols = rows[0].len();
        if ncols == 0 {
            return Err(Error::Shape("matrix needs at least one column".into()));
        }
        let mut entries = Vec::with_capacity(nrows * ncols);
        let ch = rows[0][0].characteristic();
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Shape("ragged rows".into()));
            }
            for e in row {
                if e.characteristic() != ch {
                    return Err(Error::DomainMismatch(
                        "matrix entries mix characteristics".into(),
                    ));
                }
                entries.push(e);
            }
        }
        Ok(KMatrix { rows: nrows, cols: ncols, entries })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> RatFunc,
    ) -> Result<KMatrix> {
        KMatrix::from_rows(
            (0..rows)
                .map(|i| (0..cols).map(|j| f(i, j)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize, ch: Char) -> KMatrix {
        KMatrix::from_fn(n, n, |i, j| {
            if i == j {
                RatFunc::one(ch)
            } else {
                RatFunc::zero(ch)
            }
        })
        .expect("n >= 1")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn characteristic(&self) -> Char {
        self.entries[0].characteristic()
    }

    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn max_index(&self) -> u32 {
        self.entries.iter().map(RatFunc::max_index).max().unwrap_or(0)
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Exact determinant by the requested elimination route.
    pub fn det(&self, mode: DetMode) -> Result<RatFunc> {
        self.require_square()?;
        match mode {
            DetMode::Bareiss => self.det_bareiss(),
            DetMode::Naive => self.det_naive(),
        }
    }

    fn det_bareiss(&self) -> Result<RatFunc> {
        let n = self.rows;
        let ch = self.characteristic();
        // Clear denominators row by row; det scales by the row factors.
        let mut work: Vec<Vec<Poly>> = Vec::with_capacity(n);
        let mut factor = Poly::one(ch);
        for i in 0..n {
            let mut row_factor = Poly::one(ch);
            for j in 0..n {
                row_factor = &row_factor * self.at(i, j).den();
            }
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let rest = row_factor
                    .div_exact(self.at(i, j).den())
                    .expect("row factor is a multiple of each denominator");
                row.push(self.at(i, j).num() * &rest);
            }
            work.push(row);
            factor = &factor * &row_factor;
        }

        let mut sign_flip = false;
        let mut prev = Poly::one(ch);
        for k in 0..n {
            let pivot_row = match (k..n).find(|&r| !work[r][k].is_zero()) {
                Some(r) => r,
                None => return Ok(RatFunc::zero(ch)),
            };
            if pivot_row != k {
                work.swap(pivot_row, k);
                sign_flip = !sign_flip;
            }
            if k + 1 == n {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&work[k][k] * &work[i][j]) - &(&work[i][k] * &work[k][j]);
                    work[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
                }
                work[i][k] = Poly::zero(ch);
            }
            prev = work[k][k].clone();
        }
        let mut det = work[n - 1][n - 1].clone();
        if sign_flip {
            det = det.neg_ref();
        }
        RatFunc::new(det, factor)
    }

    fn det_naive(&self) -> Result<RatFunc> {
        let n = self.rows;
        let ch = self.characteristic();
        let mut work: Vec<Vec<RatFunc>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut det = RatFunc::one(ch);
        for k in 0..n {
            let pivot_row = match (k..n).find(|&r| !work[r][k].is_zero()) {
                Some(r) => r,
                None => return Ok(RatFunc::zero(ch)),
            };
            if pivot_row != k {
                work.swap(pivot_row, k);
                det = det.neg_ref();
            }
            let pivot = work[k][k].clone();
            det = &det * &pivot;
            for i in k + 1..n {
                if work[i][k].is_zero() {
                    continue;
                }
                let ratio = work[i][k].checked_div(&pivot)?;
                for j in k..n {
                    let delta = &ratio * &work[k][j];
                    work[i][j] = &work[i][j] - &delta;
                }
            }
        }
        Ok(det)
    }

    /// Solves `self * c = rhs` for square nonsingular `self` by Cramer's
    /// rule over Bareiss determinants, so every component shares the
    /// determinant as denominator. The solution is re-verified by
    /// substitution before it is returned.
    pub fn solve(&self, rhs: &[RatFunc]) -> Result<Vec<RatFunc>> {
        self.solve_with(rhs, DetMode::Bareiss)
    }

    /// Naive-elimination solver, the independent oracle for `solve`.
    pub fn solve_naive(&self, rhs: &[RatFunc]) -> Result<Vec<RatFunc>> {
        self.require_square()?;
        self.check_rhs(rhs)?;
        let n = self.rows;
        let ch = self.characteristic();
        let mut work: Vec<Vec<RatFunc>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.at(i, j).clone())
                    .chain([rhs[i].clone()])
                    .collect()
            })
            .collect();
        for k in 0..n {
            let pivot_row = match (k..n).find(|&r| !work[r][k].is_zero()) {
                Some(r) => r,
                None => return Err(Error::Singular),
            };
            work.swap(pivot_row, k);
            let pivot = work[k][k].clone();
            for i in k + 1..n {
                if work[i][k].is_zero() {
                    continue;
                }
                let ratio = work[i][k].checked_div(&pivot)?;
                for j in k..=n {
                    let delta = &ratio * &work[k][j];
                    work[i][j] = &work[i][j] - &delta;
                }
            }
        }
        let mut solution = vec![RatFunc::zero(ch); n];
        for k in (0..n).rev() {
            let mut acc = work[k][n].clone();
            for j in k + 1..n {
                acc = &acc - &(&work[k][j] * &solution[j]);
            }
            solution[k] = acc.checked_div(&work[k][k])?;
        }
        self.verify_solution(rhs, &solution)?;
        Ok(solution)
    }

    fn solve_with(&self, rhs: &[RatFunc], mode: DetMode) -> Result<Vec<RatFunc>> {
        self.require_square()?;
        self.check_rhs(rhs)?;
        let det = self.det(mode)?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let n = self.rows;
        let mut solution = Vec::with_capacity(n);
        for col in 0..n {
            let replaced = KMatrix::from_fn(n, n, |i, j| {
                if j == col {
                    rhs[i].clone()
                } else {
                    self.at(i, j).clone()
                }
            })?;
            solution.push(replaced.det(mode)?.checked_div(&det)?);
        }
        self.verify_solution(rhs, &solution)?;
        Ok(solution)
    }

    fn check_rhs(&self, rhs: &[RatFunc]) -> Result<()> {
        if rhs.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side has {} entries, matrix has {} rows",
                rhs.len(),
                self.rows
            )));
        }
        Ok(())
    }

    fn verify_solution(&self, rhs: &[RatFunc], solution: &[RatFunc]) -> Result<()> {
        for i in 0..self.rows {
            let mut acc = RatFunc::zero(self.characteristic());
            for j in 0..self.cols {
                acc = &acc + &(self.at(i, j) * &solution[j]);
            }
            if acc != rhs[i] {
                return Err(Error::Internal("solver produced a non-solution"));
            }
        }
        Ok(())
    }
}

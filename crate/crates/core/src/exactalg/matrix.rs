use std::collections::HashMap;
use std::fmt;

use crate::error::{invalid, Result};
use crate::exactalg::LaurentPoly;
use crate::scalar::Ring;

/// A square `d x d` matrix over `R[t, t^-1]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix<R> {
    size: usize,
    entries: Vec<LaurentPoly<R>>,
}

impl<R: Ring> LaurentMatrix<R> {
    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![LaurentPoly::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly<R>>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(invalid("matrix rows must form a square array"));
        }
        Ok(Self {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly<R> {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly<R>) {
        self.entries[row * self.size + col] = value;
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.size != rhs.size {
            return Err(invalid(format!(
                "matrix size mismatch: {} vs {}",
                self.size, rhs.size
            )));
        }
        let d = self.size;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = LaurentPoly::zero();
                for k in 0..d {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.size != rhs.size {
            return Err(invalid(format!(
                "matrix size mismatch: {} vs {}",
                self.size, rhs.size
            )));
        }
        Ok(Self {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Exact determinant by Laplace expansion along rows, memoized over the
    /// set of columns already used. `O(2^d * d)` ring operations.
    pub fn det(&self) -> LaurentPoly<R> {
        let d = self.size;
        assert!(d < usize::BITS as usize, "matrix too large for subset expansion");
        // minors[mask] = det of the top |mask| rows restricted to columns in mask.
        let mut minors: HashMap<usize, LaurentPoly<R>> = HashMap::new();
        minors.insert(0, LaurentPoly::one());
        let mut layer = vec![0usize];
        for row in 0..d {
            let mut next = Vec::new();
            for &mask in &layer {
                let base = minors[&mask].clone();
                if base.is_zero() {
                    continue;
                }
                for col in (0..d).filter(|c| mask & (1 << c) == 0) {
                    let entry = self.get(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    // Sign of placing `col` last among the chosen columns.
                    let above = (mask >> (col + 1)).count_ones();
                    let term = entry * &base;
                    let term = if above % 2 == 1 { -term } else { term };
                    let key = mask | (1 << col);
                    match minors.get_mut(&key) {
                        Some(acc) => *acc = &*acc + &term,
                        None => {
                            minors.insert(key, term);
                            next.push(key);
                        }
                    }
                }
            }
            for mask in &layer {
                minors.remove(mask);
            }
            layer = next;
        }
        minors.remove(&((1usize << d) - 1)).unwrap_or_else(LaurentPoly::zero)
    }
}

impl<R: Ring + num_traits::Signed + fmt::Display> fmt::Display for LaurentMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

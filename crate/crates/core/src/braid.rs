//! Braid words in the Artin generators, their permutations and closures.
//!
//! Generators are 1-based: letter `i > 0` is `sigma_i`, letter `-i` is its
//! inverse. Words compose left to right, so the first letter acts first.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// A word in `sigma_1 .. sigma_{n-1}` and their inverses on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(invalid("a braid needs at least one strand"));
        }
        if let Some(bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(invalid(format!(
                "generator {bad} is out of range for {strands} strands"
            )));
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace-separated signed generator indices, e.g. `"2 1 -2"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let position = text[offset..].find(token).map_or(offset, |i| offset + i);
            offset = position + token.len();
            let value: i32 = token.parse().map_err(|_| Error::Parse {
                position,
                message: format!("expected a signed integer, found {token:?}"),
            })?;
            letters.push(value);
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(invalid(format!(
                "cannot concatenate braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn power(&self, exponent: usize) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.repeat(exponent),
        }
    }

    /// The group inverse: reversed word with every letter inverted.
    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self { strands: self.strands, letters }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    /// Cancels adjacent `sigma_i sigma_i^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Self { strands: self.strands, letters: stack }
    }

    /// Image of the braid in the symmetric group.
    pub fn permutation(&self) -> StrandPermutation {
        // position[s] = where the strand that started at s currently is.
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // `at[pos]` holds the starting index of the strand now at `pos`.
        let mut image = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            image[start] = pos;
        }
        StrandPermutation { image }
    }

    /// Cycles of the permutation; one per component of the closed braid.
    pub fn closure_components(&self) -> Vec<Vec<usize>> {
        self.permutation().cycles()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The Garside half twist `(s_{n-1} .. s_1)(s_{n-1} .. s_2) .. s_{n-1}`.
///
/// Its permutation reverses the strands and its square is the central full
/// twist. The shorter-looking `(s_{n-1} .. s_1)(s_{n-2} .. s_1) .. s_1` is
/// not a half twist once `n >= 3` (it fixes strand 1).
pub fn garside(strands: usize) -> Result<BraidWord> {
    if strands == 0 {
        return Err(invalid("the Garside element needs at least one strand"));
    }
    let top = strands as i32 - 1;
    let letters = (1..=top).flat_map(|low| (low..=top).rev()).collect();
    BraidWord::new(strands, letters)
}

/// A permutation of strand positions `0..n`; `image[i]` is where the strand
/// entering at position `i` leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    image: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return Err(invalid(format!("{image:?} is not a permutation")));
            }
        }
        Ok(Self { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Self {
        Self {
            image: self.image.iter().map(|&i| next.image[i]).collect(),
        }
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by
    /// that element. Fixed points are cycles of length one.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }
}

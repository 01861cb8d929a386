//! Links in `L(p,q)` given by braid-form band diagrams: lifting to the
//! 3-sphere, homology classes of components and lifted component counts.

use std::fmt;

use num_integer::gcd;

use crate::braid::{garside, BraidWord};
use crate::error::{invalid, Error, Result};

/// The lens space `L(p,q)`; `L(1,0)` is the 3-sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let ok = match p {
            0 => false,
            1 => q == 0,
            _ => q >= 1 && q < p && gcd(p, q) == 1,
        };
        if !ok {
            return Err(invalid(format!(
                "L({p},{q}) is not a lens space: need 1 <= q < p with gcd(p,q) = 1, or p = 1, q = 0"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn sphere() -> Self {
        Self { p: 1, q: 0 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Every valid `q` for this `p`.
    pub fn all_with_order(p: u64) -> Vec<Self> {
        if p == 1 {
            return vec![Self::sphere()];
        }
        (1..p).filter(|&q| gcd(p, q) == 1).map(|q| Self { p, q }).collect()
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Orientation of a component relative to the band passage direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+",
            Orientation::Negative => "-",
        })
    }
}

/// An element of `H_1(L(p,q)) = Z/p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    value: u64,
    order: u64,
}

impl HomologyClass {
    pub fn new(value: i64, order: u64) -> Self {
        let value = value.rem_euclid(order as i64) as u64;
        Self { value, order }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `gcd(delta, p)`, with `gcd(0, p) = p`.
    pub fn gcd_with_order(&self) -> u64 {
        gcd(self.value, self.order)
    }
}

/// A link in `L(p,q)`: the band word read top to bottom between the `n`
/// band endpoints, closed by joining endpoint `i` on top to endpoint `i`
/// on the bottom through the surgery torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandDiagram {
    space: LensSpace,
    word: BraidWord,
    orientations: Option<Vec<Orientation>>,
}

impl BandDiagram {
    pub fn new(space: LensSpace, word: BraidWord) -> Self {
        Self { space, word, orientations: None }
    }

    pub fn with_orientations(mut self, orientations: Vec<Orientation>) -> Result<Self> {
        let r = self.components().len();
        if orientations.len() != r {
            return Err(invalid(format!(
                "{} orientations given for a diagram with {r} components",
                orientations.len()
            )));
        }
        self.orientations = Some(orientations);
        Ok(self)
    }

    /// Parses `p q n : <word>` with an optional `| + - ...` suffix.
    pub fn parse(text: &str) -> Result<Self> {
        let (head, rest) = text.split_once(':').ok_or_else(|| Error::Parse {
            position: text.len(),
            message: "expected ':' after 'p q n'".into(),
        })?;
        let mut nums = Vec::new();
        let mut offset = 0;
        for token in head.split_whitespace() {
            let position = head[offset..].find(token).map_or(offset, |i| offset + i);
            offset = position + token.len();
            let v: u64 = token.parse().map_err(|_| Error::Parse {
                position,
                message: format!("expected a nonnegative integer, found {token:?}"),
            })?;
            nums.push(v);
        }
        let [p, q, n] = nums[..] else {
            return Err(Error::Parse {
                position: 0,
                message: format!("expected exactly three integers 'p q n', found {}", nums.len()),
            });
        };
        let word_start = head.len() + 1;
        let (word_text, orient_text) = match rest.split_once('|') {
            Some((w, o)) => (w, Some(o)),
            None => (rest, None),
        };
        let strands = usize::try_from(n).map_err(|_| invalid("strand count too large"))?;
        let word = BraidWord::parse(strands, word_text).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse { position: position + word_start, message },
            other => other,
        })?;
        let diagram = Self::new(LensSpace::new(p, q)?, word);
        match orient_text {
            None => Ok(diagram),
            Some(o) => {
                let base = word_start + word_text.len() + 1;
                let mut signs = Vec::new();
                let mut offset = 0;
                for token in o.split_whitespace() {
                    let position = o[offset..].find(token).map_or(offset, |i| offset + i);
                    offset = position + token.len();
                    signs.push(match token {
                        "+" => Orientation::Positive,
                        "-" => Orientation::Negative,
                        _ => {
                            return Err(Error::Parse {
                                position: base + position,
                                message: format!("expected '+' or '-', found {token:?}"),
                            })
                        }
                    });
                }
                diagram.with_orientations(signs)
            }
        }
    }

    pub fn space(&self) -> LensSpace {
        self.space
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn orientations(&self) -> Vec<Orientation> {
        self.orientations
            .clone()
            .unwrap_or_else(|| vec![Orientation::Positive; self.components().len()])
    }

    /// Length of [`Self::lift`] without building it:
    /// `p |word| + q n (n - 1)`.
    pub fn lift_len(&self) -> u128 {
        let n = self.strands() as u128;
        u128::from(self.space.p) * self.word.len() as u128 + u128::from(self.space.q) * n * (n - 1)
    }

    /// `p` copies of the band word followed by `Delta_n^{2q}`.
    pub fn lift(&self) -> BraidWord {
        let n = self.strands();
        let copies = self.word.power(self.space.p as usize);
        let twist = garside(n)
            .expect("band diagrams have at least one strand")
            .power(2 * self.space.q as usize);
        copies.concat(&twist).expect("both factors live on n strands")
    }

    /// Components of the link in the lens space: cycles of the band word's
    /// permutation, as lists of 0-based endpoints.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.word.closure_components()
    }

    /// `delta_i = eps_i * l_i mod p`, where `l_i` counts the band passages of
    /// component `i`.
    pub fn homology_classes(&self) -> Vec<HomologyClass> {
        let p = self.space.p;
        self.components()
            .iter()
            .zip(self.orientations())
            .map(|(cycle, o)| HomologyClass::new(o.sign() * cycle.len() as i64, p))
            .collect()
    }

    /// Number of components of the lift, from `sum gcd(delta_i, p)`. The
    /// cycle count of the lifted closure is computed independently and a
    /// disagreement is reported as a [`Error::ConsistencyFault`].
    pub fn lifted_component_count(&self) -> Result<usize> {
        let from_homology: u64 = self.homology_classes().iter().map(HomologyClass::gcd_with_order).sum();
        let from_lift = self.lift().closure_components().len();
        if from_homology as usize != from_lift {
            return Err(Error::ConsistencyFault(format!(
                "sum of gcd(delta_i, p) is {from_homology} but the lifted closure has {from_lift} components"
            )));
        }
        Ok(from_lift)
    }

    /// A sign per component making `sum eps_i l_i = 0 mod p`, if one exists.
    /// The first component is always oriented positively.
    pub fn nullhomologous_orientation(&self) -> Option<Vec<Orientation>> {
        let p = self.space.p as i64;
        let lengths: Vec<i64> = self.components().iter().map(|c| c.len() as i64).collect();
        let r = lengths.len();
        let free = r.saturating_sub(1);
        assert!(free < 63, "too many components for exhaustive orientation search");
        (0u64..1 << free).find_map(|mask| {
            let signs: Vec<Orientation> = (0..r)
                .map(|i| {
                    if i > 0 && mask & (1 << (i - 1)) != 0 {
                        Orientation::Negative
                    } else {
                        Orientation::Positive
                    }
                })
                .collect();
            let total: i64 = signs.iter().zip(&lengths).map(|(s, l)| s.sign() * l).sum();
            (total.rem_euclid(p) == 0).then_some(signs)
        })
    }
}

impl fmt::Display for BandDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} : {}", self.space.p, self.space.q, self.strands(), self.word)?;
        if let Some(o) = &self.orientations {
            let signs: Vec<String> = o.iter().map(|s| s.to_string()).collect();
            write!(f, " | {}", signs.join(" "))?;
        }
        Ok(())
    }
}

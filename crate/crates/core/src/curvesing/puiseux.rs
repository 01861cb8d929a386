use std::fmt;

use num_integer::gcd;

use crate::error::{invalid, Error, Result};

/// Exponent data of a branch `y = a_1 x^(N_1/m) + a_2 x^(N_2/m) + ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxData {
    m: u64,
    exponents: Vec<u64>,
}

impl PuiseuxData {
    /// Requires `m >= 1`, strictly increasing exponents and `m <= N_1`.
    pub fn new(m: u64, exponents: Vec<u64>) -> Result<Self> {
        if m == 0 {
            return Err(invalid("the common denominator m must be positive"));
        }
        if exponents.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("Puiseux exponents must be strictly increasing"));
        }
        if let Some(&first) = exponents.first() {
            if first < m {
                return Err(invalid(format!("first exponent {first} is smaller than m = {m}")));
            }
        }
        Ok(Self { m, exponents })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }
}

/// Coprime pairs `(m_i, n_i)` describing an iterated torus knot
/// `{(m_1,n_1); ...; (m_k,n_k)}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CableSequence {
    pairs: Vec<(u64, u64)>,
}

impl CableSequence {
    /// Validates coprimality, `m_1 <= n_1` and `n_i m_{i+1} < n_{i+1}`.
    pub fn new(pairs: Vec<(u64, u64)>) -> Result<Self> {
        let seq = Self { pairs };
        seq.check()?;
        Ok(seq)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Product of the `m_i`.
    pub fn multiplicity(&self) -> u64 {
        self.pairs.iter().map(|(m, _)| m).product()
    }

    /// Drops the pairs with `m_i = 1`, keeping only characteristic pairs.
    pub fn characteristic(&self) -> Self {
        Self {
            pairs: self.pairs.iter().copied().filter(|&(m, _)| m > 1).collect(),
        }
    }

    fn check(&self) -> Result<()> {
        for &(m, n) in &self.pairs {
            if m == 0 || n == 0 || gcd(m, n) != 1 {
                return Err(invalid(format!("({m},{n}) is not a coprime pair of positive integers")));
            }
        }
        if let Some(&(m1, n1)) = self.pairs.first() {
            if m1 > n1 {
                return Err(invalid(format!("first pair ({m1},{n1}) has m > n")));
            }
        }
        for w in self.pairs.windows(2) {
            let ((_, n_prev), (m_next, n_next)) = (w[0], w[1]);
            if u128::from(n_prev) * u128::from(m_next) >= u128::from(n_next) {
                return Err(invalid(format!(
                    "pairs ({:?}, {:?}) violate n_i m_(i+1) < n_(i+1)",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CableSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(m, n)| format!("({m},{n})")).collect();
        write!(f, "{{{}}}", parts.join("; "))
    }
}

/// Rewrites the exponents over successive denominators `m_1 m_2 ... m_i`.
///
/// With `e_0 = m` and `e_i = gcd(e_(i-1), N_i)`, pair `i` is
/// `(e_(i-1)/e_i, N_i/e_i)`. Stops at the first `i` with `e_i = 1`; pairs with
/// `m_i = 1` are kept. Running out of exponents first is an
/// [`Error::IncompleteData`].
pub fn puiseux_pairs(data: &PuiseuxData) -> Result<CableSequence> {
    let mut e = data.m;
    let mut pairs = Vec::new();
    for &n in &data.exponents {
        if e == 1 {
            break;
        }
        let next = gcd(e, n);
        pairs.push((e / next, n / next));
        e = next;
    }
    if e != 1 {
        return Err(Error::IncompleteData(format!(
            "the exponents reduce the denominator only to {e}, not 1"
        )));
    }
    CableSequence::new(pairs).map_err(|err| Error::ConsistencyFault(err.to_string()))
}

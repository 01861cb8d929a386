//! Test-only oracles and random generators. Nothing here calls the code path
//! it is used to check.

#![allow(dead_code)]

use alglens::{
    BandDiagram, BigInt, BigRational, BraidWord, LaurentMatrix, LaurentPoly, LensSpace,
    PuiseuxData, RationalPoly, SupportPoly,
};
use num_integer::gcd;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn big_poly(lowest: i64, coeffs: &[i64]) -> LaurentPoly<BigInt> {
    LaurentPoly::from_coeffs(lowest, coeffs.iter().map(|&c| BigInt::from(c)))
}

/// `(t^{ab} - 1)(t - 1) / ((t^a - 1)(t^b - 1))` for coprime `a, b`, by
/// schoolbook long division on plain integer vectors.
pub fn torus_knot_formula(a: u32, b: u32) -> LaurentPoly<BigInt> {
    assert_eq!(gcd(a, b), 1);
    let mul = |x: &[i128], y: &[i128]| {
        let mut out = vec![0i128; x.len() + y.len() - 1];
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        out
    };
    let t_pow_minus_one = |e: usize| {
        let mut v = vec![0i128; e + 1];
        v[0] = -1;
        v[e] = 1;
        v
    };
    let num = mul(&t_pow_minus_one((a * b) as usize), &t_pow_minus_one(1));
    let den = mul(&t_pow_minus_one(a as usize), &t_pow_minus_one(b as usize));
    let mut rem = num.clone();
    let qlen = num.len() - den.len() + 1;
    let mut quo = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + den.len() - 1] / den[den.len() - 1];
        quo[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "formula division must be exact");
    LaurentPoly::from_coeffs(0, quo.into_iter().map(BigInt::from))
}

/// Leibniz expansion over all permutations.
pub fn leibniz_det(m: &LaurentMatrix<BigInt>) -> LaurentPoly<BigInt> {
    let d = m.size();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut total = LaurentPoly::zero();
    loop {
        let mut inversions = 0;
        for i in 0..d {
            for j in i + 1..d {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = LaurentPoly::one();
        for (i, &j) in perm.iter().enumerate() {
            term = term * m.get(i, j);
        }
        total = if inversions % 2 == 0 { total + term } else { total - term };
        if !next_permutation(&mut perm) {
            return total;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn random_laurent(rng: &mut impl Rng, max_terms: usize, max_deg: i64) -> LaurentPoly<BigInt> {
    let terms = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms(
        (0..terms).map(|_| (rng.gen_range(-max_deg..=max_deg), BigInt::from(rng.gen_range(-5i64..=5)))),
    )
}

pub fn random_matrix(rng: &mut impl Rng, d: usize) -> LaurentMatrix<BigInt> {
    let rows = (0..d)
        .map(|_| (0..d).map(|_| random_laurent_nonneg(rng, 3, 2)).collect())
        .collect();
    LaurentMatrix::from_rows(rows).unwrap()
}

fn random_laurent_nonneg(rng: &mut impl Rng, max_terms: usize, max_deg: i64) -> LaurentPoly<BigInt> {
    let terms = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms(
        (0..terms).map(|_| (rng.gen_range(0..=max_deg), BigInt::from(rng.gen_range(-3i64..=3)))),
    )
}

pub fn random_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = if strands < 2 { 0 } else { rng.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_band(rng: &mut impl Rng, max_strands: usize, max_len: usize, max_p: u64) -> BandDiagram {
    let p = rng.gen_range(1..=max_p);
    let spaces = LensSpace::all_with_order(p);
    let space = spaces[rng.gen_range(0..spaces.len())];
    let n = rng.gen_range(1..=max_strands);
    BandDiagram::new(space, random_word(rng, n, max_len))
}

/// Random exponent data whose denominator is exhausted by its exponents.
pub fn random_puiseux(rng: &mut impl Rng, max_m: u64, max_exponents: usize) -> PuiseuxData {
    loop {
        let m = rng.gen_range(1..=max_m);
        let count = rng.gen_range(1..=max_exponents);
        let mut n = m + rng.gen_range(0..=m.max(4));
        let mut exps = Vec::with_capacity(count);
        for _ in 0..count {
            exps.push(n);
            n += rng.gen_range(1..=40);
        }
        let mut e = m;
        for &x in &exps {
            e = gcd(e, x);
        }
        if e == 1 {
            return PuiseuxData::new(m, exps).unwrap();
        }
    }
}

pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        if num != 0 {
            return BigRational::new(num.into(), rng.gen_range(1i64..=6).into());
        }
    }
}

/// A nonzero polynomial with at most `max_terms` terms and no constant term.
pub fn random_poly_at_origin(rng: &mut impl Rng, max_terms: usize, max_deg: u32) -> RationalPoly {
    loop {
        let terms = rng.gen_range(1..=max_terms);
        let f = SupportPoly::from_terms((0..terms).map(|_| {
            let mut e = (rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg));
            if e == (0, 0) {
                e.0 = 1;
            }
            (e, random_rational(rng))
        }));
        if !f.is_zero() {
            return f;
        }
    }
}

/// All side conditions of a cable rewriting, checked from scratch against
/// the input exponents.
pub fn check_cable_conditions(data: &PuiseuxData, pairs: &[(u64, u64)]) -> Result<(), String> {
    for &(mi, ni) in pairs {
        if gcd(mi, ni) != 1 {
            return Err(format!("({mi},{ni}) not coprime"));
        }
    }
    if let Some(&(m1, n1)) = pairs.first() {
        if m1 > n1 {
            return Err(format!("m1 = {m1} > n1 = {n1}"));
        }
    }
    for w in pairs.windows(2) {
        if w[0].1 * w[1].0 >= w[1].1 {
            return Err(format!("{:?} then {:?} violates n_i m_(i+1) < n_(i+1)", w[0], w[1]));
        }
    }
    let product: u64 = pairs.iter().map(|p| p.0).product();
    if product != data.m() {
        return Err(format!("product of m_i is {product}, expected {}", data.m()));
    }
    let mut running = 1u64;
    for (i, &(mi, ni)) in pairs.iter().enumerate() {
        running *= mi;
        // n_i / (m_1 .. m_i) == N_i / m
        if u128::from(ni) * u128::from(data.m()) != u128::from(data.exponents()[i]) * u128::from(running) {
            return Err(format!("exponent identity fails at pair {}", i + 1));
        }
    }
    Ok(())
}

//! Dense univariate polynomial arithmetic over the prime field `F_l`.
//!
//! Coefficients are little-endian `Vec<u64>` (index = exponent), always
//! reduced mod `l`, with the zero polynomial represented by the empty vector.
//! These are the shared primitives for irreducibility testing, minimal
//! polynomials, and generator-polynomial work; they are exact and entirely
//! deterministic.

use num_bigint::BigUint;

/// Remove trailing zero coefficients.
pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

#[inline]
fn modl(x: u128, l: u64) -> u64 {
    (x % l as u128) as u64
}

/// `a + b` over `F_l`.
pub fn add(l: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % l;
    }
    trim(out)
}

/// `a − b` over `F_l`.
pub fn sub(l: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let len = a.len().max(b.len());
    let mut out = vec![0u64; len];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + l - y) % l;
    }
    trim(out)
}

/// Schoolbook product `a·b` over `F_l`.
pub fn mul(l: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            out[i + j] = modl(out[i + j] as u128 + x as u128 * y as u128, l);
        }
    }
    trim(out)
}

/// Multiply by the scalar `c`.
pub fn scale(l: u64, a: &[u64], c: u64) -> Vec<u64> {
    let c = c % l;
    trim(a.iter().map(|&x| modl(x as u128 * c as u128, l)).collect())
}

fn inv_mod_l(a: u64, l: u64) -> u64 {
    // l is prime throughout the crate, so Fermat inversion is exact.
    crate::numtheory::pow_mod(a, l - 2, l)
}

/// Quotient and remainder of `a / b` (`b ≠ 0`).
///
/// # Panics
///
/// Panics if `b` is the zero polynomial.
pub fn divrem(l: u64, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by the zero polynomial");
    let lead_inv = inv_mod_l(b[db], l);
    let mut rem = trim(a.to_vec());
    if degree(&rem).map_or(true, |da| da < db) {
        return (Vec::new(), rem);
    }
    let da = degree(&rem).unwrap();
    let mut quot = vec![0u64; da - db + 1];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let coeff = modl(rem[dr] as u128 * lead_inv as u128, l);
        quot[dr - db] = coeff;
        for (k, &bc) in b.iter().enumerate() {
            if bc == 0 {
                continue;
            }
            let idx = dr - db + k;
            let subtrahend = modl(coeff as u128 * bc as u128, l);
            rem[idx] = (rem[idx] + l - subtrahend) % l;
        }
    }
    (trim(quot), trim(rem))
}

/// Exact division; `None` when `b` does not divide `a`.
pub fn div_exact(l: u64, a: &[u64], b: &[u64]) -> Option<Vec<u64>> {
    let (q, r) = divrem(l, a, b);
    r.is_empty().then_some(q)
}

/// Monic greatest common divisor.
pub fn gcd(l: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(l, &a, &b);
        a = b;
        b = r;
    }
    make_monic(l, a)
}

/// Scale a nonzero polynomial so its leading coefficient is 1.
pub fn make_monic(l: u64, a: Vec<u64>) -> Vec<u64> {
    match degree(&a) {
        None => a,
        Some(d) => {
            let inv = inv_mod_l(a[d], l);
            scale(l, &a, inv)
        }
    }
}

/// `base^exp mod modulus` with an arbitrary-precision exponent.
pub fn pow_mod_big(l: u64, base: &[u64], exp: &BigUint, modulus: &[u64]) -> Vec<u64> {
    let (_, mut b) = divrem(l, base, modulus);
    let mut acc = vec![1u64];
    let bits = exp.bits();
    for i in 0..bits {
        if exp.bit(i) {
            let (_, r) = divrem(l, &mul(l, &acc, &b), modulus);
            acc = r;
        }
        let (_, r) = divrem(l, &mul(l, &b, &b), modulus);
        b = r;
    }
    acc
}

/// Evaluate `a` at the scalar `x` over `F_l` (Horner).
pub fn eval(l: u64, a: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = modl(acc as u128 * x as u128 + c as u128, l);
    }
    acc
}

/// `x^k − 1` as a coefficient vector.
pub fn x_pow_minus_one(l: u64, k: usize) -> Vec<u64> {
    let mut v = vec![0u64; k + 1];
    v[0] = l - 1;
    v[k] = 1;
    v
}

//! Residue-class and primitive-root machinery for lengths `n = p^s·q^t`.
//!
//! Everything in this module is exact 64-bit integer arithmetic (products go
//! through `u128`, so any modulus that fits in a `u64` is safe). The standing
//! hypotheses the rest of the crate relies on — `p ≡ 3 (mod 4)`, the order of
//! `l` being half the totient of `p^s` and the full totient of `q^t`, and the
//! two totients sharing only a factor of 2 — are enforced in one place,
//! [`validate_parameters`], which either returns a fully populated
//! [`Parameters`] bundle or a structured [`HypothesisError`] naming the first
//! hypothesis that failed.

use serde::Serialize;
use thiserror::Error;

// ==================== basic modular arithmetic ====================

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `base^exp mod modulus` by binary exponentiation.
///
/// # Panics
///
/// Panics if `modulus == 0`.
pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus > 0, "zero modulus");
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, modulus);
        }
        base = mulmod(base, base, modulus);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin primality test, exact for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This base set is known to be exhaustive for 64-bit integers.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Euler's totient of the prime power `p^k` (requires `k ≥ 1`).
pub fn phi_prime_power(p: u64, k: u32) -> u64 {
    p.pow(k - 1) * (p - 1)
}

/// Failures of the elementary modular operations.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ArithmeticError {
    /// The element is not a unit, so it has no multiplicative order.
    #[error("{a} is not invertible modulo {modulus} (gcd = {gcd})")]
    NotAUnit { a: u64, modulus: u64, gcd: u64 },
    /// Chinese remaindering needs pairwise coprime moduli.
    #[error("moduli {m1} and {m2} are not coprime (gcd = {gcd})")]
    ModuliNotCoprime { m1: u64, m2: u64, gcd: u64 },
}

/// Multiplicative order of `a` modulo `modulus`.
///
/// Computed by direct power iteration — the moduli this crate works with are
/// bounded by the supported code length, so the loop is at most `φ(modulus)`
/// steps.
///
/// # Errors
///
/// Returns [`ArithmeticError::NotAUnit`] when `gcd(a, modulus) ≠ 1`.
pub fn mult_order(a: u64, modulus: u64) -> Result<u64, ArithmeticError> {
    assert!(modulus >= 2, "modulus must be at least 2");
    let a = a % modulus;
    let g = gcd(a, modulus);
    if g != 1 {
        return Err(ArithmeticError::NotAUnit { a, modulus, gcd: g });
    }
    let mut x = a;
    let mut order = 1u64;
    while x != 1 {
        x = mulmod(x, a, modulus);
        order += 1;
    }
    Ok(order)
}

/// Modular inverse by the extended Euclidean algorithm.
fn inv_mod(a: u64, modulus: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, modulus as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(modulus as i128) as u64)
}

/// Solve `x ≡ a1 (mod m1)`, `x ≡ a2 (mod m2)` for coprime moduli, returning
/// the unique solution in `[0, m1·m2)`.
///
/// # Errors
///
/// Returns [`ArithmeticError::ModuliNotCoprime`] when `gcd(m1, m2) ≠ 1`.
///
/// # Example
///
/// ```
/// use pqcyclic::numtheory::crt_solve;
/// assert_eq!(crt_solve(1, 7, 3, 5).unwrap(), 8);
/// ```
pub fn crt_solve(a1: u64, m1: u64, a2: u64, m2: u64) -> Result<u64, ArithmeticError> {
    let g = gcd(m1, m2);
    if g != 1 {
        return Err(ArithmeticError::ModuliNotCoprime { m1, m2, gcd: g });
    }
    let a1 = a1 % m1;
    let a2 = a2 % m2;
    // x = a1 + m1·k with k ≡ (a2 − a1)·m1⁻¹ (mod m2).
    let inv = inv_mod(m1 % m2, m2).expect("coprime moduli have inverses");
    let diff = (a2 + m2 - a1 % m2) % m2;
    let k = mulmod(diff, inv, m2);
    Ok(a1 + m1 * k)
}

/// Smallest primitive root `g ≥ 2` modulo `p^k` (`p` an odd prime).
pub fn find_primitive_root(p: u64, k: u32) -> u64 {
    let modulus = p.pow(k);
    let target = phi_prime_power(p, k);
    for g in 2..modulus {
        if gcd(g, modulus) == 1 && mult_order(g, modulus) == Ok(target) {
            return g;
        }
    }
    unreachable!("odd prime powers always have primitive roots");
}

// ==================== quadratic residue sets ====================

/// The quadratic residues and non-residues among the units modulo `p^k`.
///
/// Membership is decided at the base level: a unit is a square modulo `p^k`
/// exactly when its reduction modulo `p` is a square, so the sets for `k > 1`
/// are built by lifting every base residue through the `p^{k−1}` classes
/// above it rather than by exponentiating each unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QRSets {
    /// The prime `p`.
    pub prime: u64,
    /// The exponent `k` of the modulus `p^k`.
    pub modulus_exponent: u32,
    /// Quadratic residues among the units mod `p^k`, sorted ascending.
    pub residues: Vec<u64>,
    /// Quadratic non-residues among the units mod `p^k`, sorted ascending.
    pub nonresidues: Vec<u64>,
}

/// Euler's criterion at the base prime: is `x` a nonzero square mod `p`?
pub fn is_residue_mod_p(x: u64, p: u64) -> bool {
    let x = x % p;
    x != 0 && pow_mod(x, (p - 1) / 2, p) == 1
}

/// Build [`QRSets`] for the modulus `p^k`.
pub fn quadratic_residue_sets(p: u64, k: u32) -> QRSets {
    assert!(k >= 1, "modulus exponent must be at least 1");
    let base: Vec<u64> = (1..p).filter(|&x| is_residue_mod_p(x, p)).collect();
    let lift = |xs: &[u64]| -> Vec<u64> {
        let mut out = Vec::with_capacity(xs.len() * p.pow(k - 1) as usize);
        for &x in xs {
            for lambda in 0..p.pow(k - 1) {
                out.push(x + p * lambda);
            }
        }
        out.sort_unstable();
        out
    };
    let base_non: Vec<u64> = (1..p).filter(|&x| !base.contains(&x)).collect();
    QRSets {
        prime: p,
        modulus_exponent: k,
        residues: lift(&base),
        nonresidues: lift(&base_non),
    }
}

impl QRSets {
    /// Membership test via the mod-`p` criterion (no per-element search).
    pub fn is_residue(&self, x: u64) -> bool {
        let m = self.prime.pow(self.modulus_exponent);
        let x = x % m;
        x % self.prime != 0 && is_residue_mod_p(x, self.prime)
    }
}

// ==================== parameter validation ====================

/// A violated standing hypothesis, with enough context to say which one.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum HypothesisError {
    #[error("{name} = {value} is not prime")]
    NotPrime { name: &'static str, value: u64 },
    #[error("{name} = {value} must be an odd prime")]
    EvenPrime { name: &'static str, value: u64 },
    #[error("p, q, l must be pairwise distinct (got p = {p}, q = {q}, l = {l})")]
    NotDistinct { p: u64, q: u64, l: u64 },
    #[error("p = {p} must satisfy p ≡ 3 (mod 4)")]
    PNotThreeMod4 { p: u64 },
    #[error("exponents must be at least 1 (s = {s}, t = {t})")]
    ZeroExponent { s: u32, t: u32 },
    #[error("p^s·q^t does not fit in 64 bits")]
    Overflow,
    #[error("gcd(φ(p^s), φ(q^t)) must be 2, got {got}")]
    GcdNotTwo { got: u64 },
    #[error(
        "ord_{{p^s}}(l) ≠ φ(p^s)/2: l = {l} has order {got} modulo {modulus}, need {expected}"
    )]
    OrderNotHalfTotient {
        l: u64,
        modulus: u64,
        expected: u64,
        got: u64,
    },
    #[error(
        "l = {l} is not a primitive root modulo q^t = {modulus} (order {got}, need {expected})"
    )]
    NotPrimitiveRoot {
        l: u64,
        modulus: u64,
        expected: u64,
        got: u64,
    },
    #[error("generator override g = {g} is not a common primitive root modulo p^s and q^t")]
    BadGenerator { g: u64 },
}

/// The validated parameter bundle every other module consumes.
///
/// `g` is a common primitive root modulo `p^s` and `q^t` (by default the CRT
/// lift of the smallest primitive roots `g1`, `g2`; an override is accepted if
/// it passes the same order checks), `v` is the unit that is `1` mod `p^s`
/// and `g` mod `q^t`, and `qr_case` records whether `q` is a quadratic
/// residue modulo `p`. `m` is the multiplicative order of `l` modulo `n`,
/// which under the hypotheses always equals `φ(n)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub p: u64,
    pub q: u64,
    pub s: u32,
    pub t: u32,
    pub l: u64,
    pub n: u64,
    pub g1: u64,
    pub g2: u64,
    pub g: u64,
    pub v: u64,
    pub qr_case: bool,
    pub m: u64,
}

impl Parameters {
    /// `p^i` (0 ≤ i ≤ s).
    pub fn p_pow(&self, i: u32) -> u64 {
        self.p.pow(i)
    }

    /// `q^j` (0 ≤ j ≤ t).
    pub fn q_pow(&self, j: u32) -> u64 {
        self.q.pow(j)
    }

    /// `φ(n) = φ(p^s)·φ(q^t)`.
    pub fn phi_n(&self) -> u64 {
        phi_prime_power(self.p, self.s) * phi_prime_power(self.q, self.t)
    }
}

/// Check every standing hypothesis and assemble [`Parameters`].
///
/// The checks run in a fixed order and the first violation is reported:
/// primality of `p`, `q`, `l`; oddness of `p`, `q`; pairwise distinctness;
/// `p ≡ 3 (mod 4)`; positivity of `s`, `t`; `gcd(φ(p^s), φ(q^t)) = 2`;
/// `ord_{p^s}(l) = φ(p^s)/2`; `l` primitive modulo `q^t`; and, when a
/// generator override is supplied, that it is a common primitive root.
pub fn validate_parameters(
    p: u64,
    q: u64,
    s: u32,
    t: u32,
    l: u64,
    g_override: Option<u64>,
) -> Result<Parameters, HypothesisError> {
    for (name, value) in [("p", p), ("q", q), ("l", l)] {
        if !is_prime(value) {
            return Err(HypothesisError::NotPrime { name, value });
        }
    }
    for (name, value) in [("p", p), ("q", q)] {
        if value == 2 {
            return Err(HypothesisError::EvenPrime { name, value });
        }
    }
    if p == q || p == l || q == l {
        return Err(HypothesisError::NotDistinct { p, q, l });
    }
    if p % 4 != 3 {
        return Err(HypothesisError::PNotThreeMod4 { p });
    }
    if s == 0 || t == 0 {
        return Err(HypothesisError::ZeroExponent { s, t });
    }

    let ps = p
        .checked_pow(s)
        .ok_or(HypothesisError::Overflow)?;
    let qt = q
        .checked_pow(t)
        .ok_or(HypothesisError::Overflow)?;
    let n = ps.checked_mul(qt).ok_or(HypothesisError::Overflow)?;

    let phi_ps = phi_prime_power(p, s);
    let phi_qt = phi_prime_power(q, t);
    let g_tot = gcd(phi_ps, phi_qt);
    if g_tot != 2 {
        return Err(HypothesisError::GcdNotTwo { got: g_tot });
    }

    // l is coprime to both prime powers (the primes are pairwise distinct),
    // so the order computations cannot fail.
    let ord_ps = mult_order(l, ps).expect("l is a unit mod p^s");
    if ord_ps != phi_ps / 2 {
        return Err(HypothesisError::OrderNotHalfTotient {
            l,
            modulus: ps,
            expected: phi_ps / 2,
            got: ord_ps,
        });
    }
    let ord_qt = mult_order(l, qt).expect("l is a unit mod q^t");
    if ord_qt != phi_qt {
        return Err(HypothesisError::NotPrimitiveRoot {
            l,
            modulus: qt,
            expected: phi_qt,
            got: ord_qt,
        });
    }

    let g1 = find_primitive_root(p, s);
    let g2 = find_primitive_root(q, t);
    let g = match g_override {
        Some(g) => g,
        None => crt_solve(g1, ps, g2, qt).expect("p^s and q^t are coprime"),
    };
    let g_ok = gcd(g % ps, ps) == 1
        && gcd(g % qt, qt) == 1
        && mult_order(g % ps, ps) == Ok(phi_ps)
        && mult_order(g % qt, qt) == Ok(phi_qt);
    if !g_ok {
        return Err(HypothesisError::BadGenerator { g });
    }
    let v = crt_solve(1, ps, g % qt, qt).expect("p^s and q^t are coprime");

    let qr_case = is_residue_mod_p(q, p);

    let m = mult_order(l, n).expect("l is a unit mod n");
    // Consequence of the order hypotheses, but cheap to confirm rather than
    // assume: the order of l mod n is exactly half the totient.
    assert_eq!(
        m,
        phi_ps * phi_qt / 2,
        "order of l mod n must be φ(n)/2 under the validated hypotheses"
    );

    Ok(Parameters {
        p,
        q,
        s,
        t,
        l,
        n,
        g1,
        g2,
        g,
        v,
        qr_case,
        m,
    })
}

// ==================== tests ====================

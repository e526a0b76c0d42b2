//! The prime field `F_l`, its extension `F_{l^m}`, primitive `n`-th roots of
//! unity, and the two quadratic character sums `𝓡` and `𝓝`.
//!
//! The extension is realized as `F_l[x]/(f)` for a deterministic irreducible
//! `f`: candidates are scanned in increasing order of their integer encoding
//! (non-leading coefficients written base `l`, constant term least
//! significant), so every run of every binary picks the same field. A
//! primitive `n`-th root `α` is likewise drawn from a deterministic candidate
//! sequence; callers can ask for the `k`-th accepted candidate to select a
//! different Galois orbit, which is what swaps the values of `𝓡` and `𝓝`.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::numtheory::{quadratic_residue_sets, Parameters};
use crate::poly;

/// A scalar in the prime field `F_l`, tagged with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldElement {
    pub value: u64,
    pub modulus: u64,
}

impl FieldElement {
    pub fn new(value: u64, modulus: u64) -> Self {
        Self {
            value: value % modulus,
            modulus,
        }
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Errors from field construction and root selection.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum GfError {
    #[error("n = {n} does not divide l^m − 1 (l = {l}, m = {m})")]
    OrderMismatch { l: u64, m: usize, n: u64 },
    #[error("no candidate of index {index} produced an element of order {n}")]
    RootNotFound { index: usize, n: u64 },
    #[error("character sum over the {which} class is not a prime-field scalar")]
    CharacterSumNotScalar { which: &'static str },
}

/// An element of `F_{l^m}`: exactly `m` coefficients, reduced mod `l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtElement {
    pub coeffs: Vec<u64>,
}

/// `F_{l^m} = F_l[x]/(f)` for the deterministic irreducible `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    pub l: u64,
    pub m: usize,
    /// Monic irreducible modulus, length `m + 1`, little-endian.
    pub modulus: Vec<u64>,
}

// ==================== irreducible modulus selection ====================

/// Monic-irreducibility test: `x^(l^m) ≡ x (mod f)` and, for every maximal
/// proper divisor `m/r`, `gcd(x^(l^(m/r)) − x, f) = 1`.
fn is_irreducible(l: u64, f: &[u64]) -> bool {
    let m = match poly::degree(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    let x = vec![0u64, 1];
    let (_, x_red) = poly::divrem(l, &x, f); // x itself when m ≥ 2
    let lm = BigUint::from(l).pow(m as u32);
    if poly::pow_mod_big(l, &x, &lm, f) != x_red {
        return false;
    }
    let mut r = 2usize;
    let mut rest = m;
    let mut prime_divisors = Vec::new();
    while r * r <= rest {
        if rest % r == 0 {
            prime_divisors.push(r);
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
    }
    if rest > 1 {
        prime_divisors.push(rest);
    }
    for r in prime_divisors {
        let e = BigUint::from(l).pow((m / r) as u32);
        let xe = poly::pow_mod_big(l, &x, &e, f);
        let diff = poly::sub(l, &xe, &x_red);
        // coprime ⟺ the gcd is a nonzero constant
        if poly::degree(&poly::gcd(l, &diff, f)) != Some(0) {
            return false;
        }
    }
    true
}

/// The first monic irreducible of degree `m` over `F_l` in candidate order.
///
/// Candidate `c ∈ [0, l^m)` encodes the non-leading coefficients base `l`
/// (constant term = least significant digit), so the scan is total and the
/// winner is the lexicographically smallest in that encoding.
///
/// # Example
///
/// ```
/// use pqcyclic::gf::find_irreducible;
/// assert_eq!(find_irreducible(2, 1), vec![0, 1]);      // x
/// assert_eq!(find_irreducible(3, 2), vec![1, 0, 1]);   // x² + 1
/// ```
pub fn find_irreducible(l: u64, m: usize) -> Vec<u64> {
    assert!(m >= 1);
    let mut c = 0u128;
    loop {
        let mut coeffs = vec![0u64; m + 1];
        let mut rest = c;
        for slot in coeffs.iter_mut().take(m) {
            *slot = (rest % l as u128) as u64;
            rest /= l as u128;
        }
        assert!(rest == 0, "no irreducible of degree {m} over F_{l}?");
        coeffs[m] = 1;
        if is_irreducible(l, &coeffs) {
            return coeffs;
        }
        c += 1;
    }
}

// ==================== extension field arithmetic ====================

impl ExtField {
    /// Construct `F_{l^m}` with the deterministic modulus.
    pub fn new(l: u64, m: usize) -> Self {
        Self {
            l,
            m,
            modulus: find_irreducible(l, m),
        }
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement {
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(&self) -> ExtElement {
        self.embed(1)
    }

    /// Embed a prime-field scalar.
    pub fn embed(&self, c: u64) -> ExtElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = c % self.l;
        ExtElement { coeffs }
    }

    /// The element whose coefficient vector is the base-`l` digits of `c`.
    pub fn from_counter(&self, c: u128) -> ExtElement {
        let mut coeffs = vec![0u64; self.m];
        let mut rest = c;
        for slot in coeffs.iter_mut() {
            *slot = (rest % self.l as u128) as u64;
            rest /= self.l as u128;
        }
        assert_eq!(rest, 0, "counter exceeds field size");
        ExtElement { coeffs }
    }

    /// If the element lies in the prime subfield, its scalar value.
    pub fn as_scalar(&self, a: &ExtElement) -> Option<u64> {
        a.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then(|| a.coeffs[0])
    }

    pub fn add(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        ExtElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % self.l)
                .collect(),
        }
    }

    pub fn sub(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        ExtElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + self.l - y) % self.l)
                .collect(),
        }
    }

    pub fn scale(&self, a: &ExtElement, c: u64) -> ExtElement {
        let c = c % self.l;
        ExtElement {
            coeffs: a
                .coeffs
                .iter()
                .map(|&x| ((x as u128 * c as u128) % self.l as u128) as u64)
                .collect(),
        }
    }

    /// Schoolbook product followed by reduction by the monic modulus.
    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let l = self.l as u128;
        let mut wide = vec![0u64; 2 * self.m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                wide[i + j] = ((wide[i + j] as u128 + x as u128 * y as u128) % l) as u64;
            }
        }
        // reduce: x^m ≡ −(modulus − x^m)
        for d in (self.m..wide.len()).rev() {
            let c = wide[d];
            if c == 0 {
                continue;
            }
            wide[d] = 0;
            for (k, &fc) in self.modulus.iter().enumerate().take(self.m) {
                if fc == 0 {
                    continue;
                }
                let idx = d - self.m + k;
                let sub = (c as u128 * fc as u128) % l;
                wide[idx] = ((wide[idx] as u128 + l - sub) % l) as u64;
            }
        }
        wide.truncate(self.m);
        ExtElement { coeffs: wide }
    }

    /// `a^e` for a 64-bit exponent.
    pub fn pow(&self, a: &ExtElement, mut e: u64) -> ExtElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for an arbitrary-precision exponent.
    pub fn pow_big(&self, a: &ExtElement, e: &BigUint) -> ExtElement {
        let mut base = a.clone();
        let mut acc = self.one();
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
        }
        acc
    }

    /// `l^m − 1`, the order of the multiplicative group.
    pub fn group_order(&self) -> BigUint {
        BigUint::from(self.l).pow(self.m as u32) - 1u32
    }
}

// ==================== primitive n-th roots ====================

/// The `index`-th accepted primitive `n`-th root of unity.
///
/// Candidates are `β₀^((l^m−1)/n)` for `β₀` running through the deterministic
/// element sequence (counter encoding, starting at 1); a candidate is accepted
/// exactly when both `α^(n/p) ≠ 1` and `α^(n/q) ≠ 1`, which pins the order to
/// `n` on the nose. Successive accepted candidates fall in different Galois
/// orbits often enough that scanning a handful of indices reaches both
/// assignments of the character sums.
///
/// # Errors
///
/// [`GfError::OrderMismatch`] when `n ∤ l^m − 1`;
/// [`GfError::RootNotFound`] if the candidate space is exhausted.
pub fn primitive_nth_root(
    field: &ExtField,
    n: u64,
    p: u64,
    q: u64,
    index: usize,
) -> Result<ExtElement, GfError> {
    let order = field.group_order();
    if (&order % n) != BigUint::from(0u32) {
        return Err(GfError::OrderMismatch {
            l: field.l,
            m: field.m,
            n,
        });
    }
    let e = &order / n;
    let one = field.one();
    let mut accepted = 0usize;
    // Order-n elements make up a φ(n)/n fraction of the image, so the scan
    // terminates after a handful of candidates; the cap is pure paranoia
    // (and keeps the counter inside small fields).
    let mut cap: u128 = 1;
    for _ in 0..field.m {
        cap = cap.saturating_mul(field.l as u128);
        if cap > 1_000_000 {
            cap = 1_000_000;
            break;
        }
    }
    for c in 1u128..cap {
        let beta0 = field.from_counter(c);
        let alpha = field.pow_big(&beta0, &e);
        if field.pow(&alpha, n / p) != one && field.pow(&alpha, n / q) != one {
            if accepted == index {
                return Ok(alpha);
            }
            accepted += 1;
        }
    }
    Err(GfError::RootNotFound { index, n })
}

// ==================== character sums ====================

/// `β`, `𝓡`, `𝓝`, and `δ` for a chosen `α`.
///
/// `β = α^(p^(s−1)·q^t)` is a primitive `p`-th root of unity; `𝓡` and `𝓝`
/// are the sums of its powers over the base-level residue and non-residue
/// classes. Both collapse into the prime subfield (they are fixed by the
/// Frobenius because multiplication by `l` permutes each class), and they
/// satisfy `𝓡 + 𝓝 = −1` and `𝓡·𝓝 = (p+1)/4` in `F_l`. `δ = 2𝓡 + 1` squares
/// to `−p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussData {
    /// The chosen primitive `n`-th root.
    pub alpha: ExtElement,
    /// `β = α^(p^(s−1)·q^t)`, a primitive `p`-th root of unity.
    pub beta: ExtElement,
    /// `𝓡 = Σ_{x residue} β^x`, as a prime-field scalar.
    pub residue_sum: FieldElement,
    /// `𝓝 = Σ_{x non-residue} β^x`, as a prime-field scalar.
    pub nonresidue_sum: FieldElement,
    /// `δ = 2𝓡 + 1`, a square root of `−p` in `F_l`.
    pub delta: FieldElement,
}

/// Compute the character sums for a given primitive root `α`.
///
/// # Errors
///
/// [`GfError::CharacterSumNotScalar`] if either sum fails to collapse into
/// the prime subfield (which would mean `α` does not have order `n` or the
/// parameters were not validated).
pub fn gauss_data(
    field: &ExtField,
    params: &Parameters,
    alpha: &ExtElement,
) -> Result<GaussData, GfError> {
    let l = field.l;
    let beta = field.pow(alpha, params.p_pow(params.s - 1) * params.q_pow(params.t));
    let base = quadratic_residue_sets(params.p, 1);

    let mut beta_pows = Vec::with_capacity(params.p as usize);
    let mut acc = field.one();
    for _ in 0..params.p {
        beta_pows.push(acc.clone());
        acc = field.mul(&acc, &beta);
    }

    let sum_over = |xs: &[u64]| {
        let mut s = field.zero();
        for &x in xs {
            s = field.add(&s, &beta_pows[x as usize]);
        }
        s
    };
    let r_ext = sum_over(&base.residues);
    let n_ext = sum_over(&base.nonresidues);

    let r = field
        .as_scalar(&r_ext)
        .ok_or(GfError::CharacterSumNotScalar { which: "residue" })?;
    let n = field
        .as_scalar(&n_ext)
        .ok_or(GfError::CharacterSumNotScalar {
            which: "non-residue",
        })?;

    // Exact identities in F_l; failure would mean a broken field or root.
    assert_eq!((r + n) % l, l - 1, "𝓡 + 𝓝 must be −1");
    assert_eq!(
        (r as u128 * n as u128 % l as u128) as u64,
        ((params.p + 1) / 4) % l,
        "𝓡·𝓝 must be (p+1)/4"
    );
    if l == 2 {
        // binary case: p ≡ 7 (mod 8) is forced, and the sums are 1 and 0
        assert_eq!(params.p % 8, 7);
        assert_ne!(r, n);
    }
    let delta = (2 * r + 1) % l;
    assert_eq!(
        (delta as u128 * delta as u128 % l as u128) as u64,
        (l - params.p % l) % l,
        "δ² must be −p"
    );

    Ok(GaussData {
        alpha: alpha.clone(),
        beta,
        residue_sum: FieldElement::new(r, l),
        nonresidue_sum: FieldElement::new(n, l),
        delta: FieldElement::new(delta, l),
    })
}

/// Scan root indices until the character sums take the requested value of
/// `𝓡`; used to pin a specific Galois orbit for reproduction tests.
pub fn gauss_data_with_residue_sum(
    field: &ExtField,
    params: &Parameters,
    want_r: u64,
    max_index: usize,
) -> Result<(usize, GaussData), GfError> {
    for index in 0..max_index {
        let alpha = primitive_nth_root(field, params.n, params.p, params.q, index)?;
        let data = gauss_data(field, params, &alpha)?;
        if data.residue_sum.value == want_r {
            return Ok((index, data));
        }
    }
    Err(GfError::RootNotFound {
        index: max_index,
        n: params.n,
    })
}

// ==================== tests ====================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::validate_parameters;

    #[test]
    fn deterministic_irreducibles() {
        assert_eq!(find_irreducible(2, 1), vec![0, 1]);
        assert_eq!(find_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn degree_twelve_modulus_is_irreducible_by_trial_division() {
        let f = find_irreducible(2, 12);
        assert_eq!(f.len(), 13);
        assert_eq!(f[12], 1);
        // independent check: no monic factor of degree 1..=6
        for d in 1..=6usize {
            for c in 0..(1u64 << d) {
                let mut g = vec![0u64; d + 1];
                for (k, slot) in g.iter_mut().enumerate().take(d) {
                    *slot = (c >> k) & 1;
                }
                g[d] = 1;
                let (_, r) = poly::divrem(2, &f, &g);
                assert!(!r.is_empty(), "found factor of degree {d}");
            }
        }
    }

    #[test]
    fn extension_arithmetic_in_f9() {
        // F_9 = F_3[x]/(x²+1); x·x = −1 = 2, so x has order 4
        let field = ExtField::new(3, 2);
        let x = ExtElement { coeffs: vec![0, 1] };
        assert_eq!(field.mul(&x, &x), field.embed(2));
        assert_eq!(field.pow(&x, 3), field.scale(&x, 2));
        assert_eq!(field.pow(&x, 4), field.one());
    }

    #[test]
    fn primitive_root_has_exact_order() {
        let params = validate_parameters(11, 5, 1, 1, 3, None).unwrap();
        let field = ExtField::new(params.l, params.m as usize);
        let alpha = primitive_nth_root(&field, params.n, params.p, params.q, 0).unwrap();
        assert_eq!(field.pow(&alpha, 55), field.one());
        assert_ne!(field.pow(&alpha, 11), field.one());
        assert_ne!(field.pow(&alpha, 5), field.one());
    }

    #[test]
    fn character_sums_residue_case() {
        let params = validate_parameters(11, 5, 1, 1, 3, None).unwrap();
        let field = ExtField::new(params.l, params.m as usize);
        let (_, data) = gauss_data_with_residue_sum(&field, &params, 2, 16).unwrap();
        assert_eq!(data.residue_sum.value, 2);
        assert_eq!(data.nonresidue_sum.value, 0);
        assert_eq!(data.delta.value, 2);
        // the other orbit swaps the two sums
        let (_, other) = gauss_data_with_residue_sum(&field, &params, 0, 16).unwrap();
        assert_eq!(other.nonresidue_sum.value, 2);
    }

    #[test]
    fn character_sums_binary_case() {
        let params = validate_parameters(7, 5, 1, 1, 2, None).unwrap();
        let field = ExtField::new(params.l, params.m as usize);
        let (_, data) = gauss_data_with_residue_sum(&field, &params, 1, 16).unwrap();
        assert_eq!(data.residue_sum.value, 1);
        assert_eq!(data.nonresidue_sum.value, 0);
    }

    #[test]
    fn frobenius_fixes_the_sums_and_g_swaps_them() {
        let params = validate_parameters(11, 5, 1, 1, 3, None).unwrap();
        let field = ExtField::new(params.l, params.m as usize);
        let alpha = primitive_nth_root(&field, params.n, params.p, params.q, 0).unwrap();
        let data = gauss_data(&field, &params, &alpha).unwrap();

        let frob = field.pow(&alpha, params.l);
        let data_frob = gauss_data(&field, &params, &frob).unwrap();
        assert_eq!(data.residue_sum, data_frob.residue_sum);
        assert_eq!(data.nonresidue_sum, data_frob.nonresidue_sum);

        let twisted = field.pow(&alpha, params.g);
        let data_tw = gauss_data(&field, &params, &twisted).unwrap();
        assert_eq!(data.residue_sum, data_tw.nonresidue_sum);
        assert_eq!(data.nonresidue_sum, data_tw.residue_sum);
    }
}

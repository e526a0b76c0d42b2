//! Dense arithmetic in `F_l[x]/(xⁿ − 1)` and the coset characteristic
//! polynomials `χ_γ = Σ_{e∈γ} x^e`.
//!
//! Products are plain `O(n²)` cyclic convolutions — at the lengths this crate
//! targets that is both fast enough for full identity sweeps and free of
//! rounding or transform subtleties. The product of two `χ`'s always
//! decomposes back into a `F_l`-combination of `χ`'s; the decomposition's
//! coefficients come straight from the closed-form intersection counts of
//! [`crate::cosets`], and [`verify_identity`] checks that predicted
//! right-hand side against the convolution, coefficient by coefficient.

use thiserror::Error;

use crate::cosets::{all_labels, closed_form_count, CosetLabel, CosetSystem};
use crate::numtheory::Parameters;

/// An element of `F_l[x]/(xⁿ − 1)`: exactly `n` coefficients, reduced mod `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    pub l: u64,
    pub coeffs: Vec<u64>,
}

/// Mismatched operands.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("ring length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("coefficient modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
}

impl RingElement {
    pub fn zero(n: usize, l: u64) -> Self {
        Self {
            l,
            coeffs: vec![0; n],
        }
    }

    pub fn one(n: usize, l: u64) -> Self {
        let mut e = Self::zero(n, l);
        e.coeffs[0] = 1;
        e
    }

    /// The all-ones element `1 + x + … + x^(n−1)`.
    pub fn all_ones(n: usize, l: u64) -> Self {
        Self {
            l,
            coeffs: vec![1 % l; n],
        }
    }

    pub fn monomial(n: usize, l: u64, e: usize, c: u64) -> Self {
        let mut out = Self::zero(n, l);
        out.coeffs[e % n] = c % l;
        out
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check_compatible(&self, other: &Self) -> Result<(), RingError> {
        if self.n() != other.n() {
            return Err(RingError::LengthMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        if self.l != other.l {
            return Err(RingError::ModulusMismatch {
                left: self.l,
                right: other.l,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other).expect("incompatible operands");
        Self {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| (a + b) % self.l)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compatible(other).expect("incompatible operands");
        Self {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| (a + self.l - b) % self.l)
                .collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.l;
        Self {
            l: self.l,
            coeffs: self
                .coeffs
                .iter()
                .map(|&a| ((a as u128 * c as u128) % self.l as u128) as u64)
                .collect(),
        }
    }

    /// Render as a sparse sum `c*x^e + …` in ascending exponent order.
    pub fn to_sparse_string(&self) -> String {
        let mut terms = Vec::new();
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (e, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}*x"),
                (e, 1) => format!("x^{e}"),
                (e, c) => format!("{c}*x^{e}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl std::fmt::Display for RingElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_sparse_string())
    }
}

/// Cyclic convolution `a·b` in `F_l[x]/(xⁿ − 1)`.
///
/// # Errors
///
/// [`RingError`] when the two operands disagree on `n` or `l`.
pub fn ring_mul(a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
    a.check_compatible(b)?;
    let n = a.n();
    let l = a.l as u128;
    let mut out = vec![0u64; n];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let k = if i + j >= n { i + j - n } else { i + j };
            out[k] = ((out[k] as u128 + x as u128 * y as u128) % l) as u64;
        }
    }
    Ok(RingElement {
        l: a.l,
        coeffs: out,
    })
}

/// `a^e` in the ring, by repeated squaring.
pub fn ring_pow(a: &RingElement, mut e: u64) -> RingElement {
    let mut base = a.clone();
    let mut acc = RingElement::one(a.n(), a.l);
    while e > 0 {
        if e & 1 == 1 {
            acc = ring_mul(&acc, &base).expect("same ring");
        }
        base = ring_mul(&base, &base).expect("same ring");
        e >>= 1;
    }
    acc
}

/// The characteristic polynomial `χ_γ` of one coset.
pub fn chi(system: &CosetSystem, label: &CosetLabel) -> RingElement {
    let mut out = RingElement::zero(system.params.n as usize, system.params.l);
    for &e in &system.coset(label).elements {
        out.coeffs[e as usize] = 1;
    }
    out
}

/// All `χ_γ`, indexed like `system.cosets`.
#[derive(Debug, Clone)]
pub struct ChiTable {
    pub labels: Vec<CosetLabel>,
    pub elements: Vec<RingElement>,
}

impl ChiTable {
    pub fn build(system: &CosetSystem) -> Self {
        let labels: Vec<CosetLabel> = system.cosets.iter().map(|c| c.label).collect();
        let elements = labels.iter().map(|lbl| chi(system, lbl)).collect();
        Self { labels, elements }
    }

    pub fn get(&self, label: &CosetLabel) -> &RingElement {
        let idx = self
            .labels
            .iter()
            .position(|l| l == label)
            .expect("label out of range");
        &self.elements[idx]
    }
}

/// Outcome of checking one product identity `χ_A·χ_B = Σ c_T·χ_T`.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub a: CosetLabel,
    pub b: CosetLabel,
    /// Predicted right-hand-side coefficient for every coset, in the order
    /// of `ChiTable.labels`, as exact integers before reduction mod `l`.
    pub coefficients: Vec<u64>,
    /// `LHS − RHS`; the identity holds iff this is zero.
    pub residual: RingElement,
    pub pass: bool,
}

/// Verify the product decomposition of `χ_A·χ_B`.
///
/// The right-hand side is assembled from the closed-form intersection
/// counts: the coefficient of `χ_T` is `#((a+B) ∩ T)·|A|/|T|`, an exact
/// integer (the product's coefficient function is constant on cosets). The
/// left-hand side is the raw cyclic convolution. Both sides are compared
/// coefficientwise over `F_l`.
pub fn verify_identity(
    params: &Parameters,
    table: &ChiTable,
    a: &CosetLabel,
    b: &CosetLabel,
) -> IdentityReport {
    let lhs = ring_mul(table.get(a), table.get(b)).expect("one coset system");
    let size_a = a.size(params);

    let labels = all_labels(params);
    let mut coefficients = Vec::with_capacity(labels.len());
    let mut rhs = RingElement::zero(params.n as usize, params.l);
    for target in &labels {
        let count = closed_form_count(params, a, b, target);
        let size_t = target.size(params);
        let mass = count * size_a;
        assert_eq!(
            mass % size_t,
            0,
            "coefficient of χ_{target} in χ_{a}·χ_{b} is not integral"
        );
        let coeff = mass / size_t;
        coefficients.push(coeff);
        rhs = rhs.add(&table.get(target).scale(coeff % params.l));
    }
    let residual = lhs.sub(&rhs);
    let pass = residual.is_zero();
    IdentityReport {
        a: *a,
        b: *b,
        coefficients,
        residual,
        pass,
    }
}

// ==================== tests ====================

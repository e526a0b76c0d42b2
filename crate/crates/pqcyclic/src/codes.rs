//! Cyclic code constructions over `F_l` of length `n = p^s·q^t`: the
//! minimal codes attached to cosets, their repetition structure at the
//! `(s, j)` levels, and the index-2 selection-product codes with their
//! square-root distance bounds.
//!
//! Minimum distances are only ever reported as `exact` when an exhaustive
//! message-space enumeration proved them; anything else is a `bound` with
//! its provenance. Enumeration is budgeted and refuses (with the exact
//! count it would have needed) rather than sampling silently.

use serde::Serialize;

use crate::cosets::{CosetLabel, CosetSystem};
use crate::gf::{ExtField, GaussData};
use crate::idempotents::{alpha_power_table, minimal_polynomial};
use crate::numtheory::{validate_parameters, Parameters};
use crate::poly;
use crate::ring::RingElement;
use thiserror::Error;

/// Default codeword-enumeration budget (number of messages), overridable
/// through the `PQCYCLIC_BUDGET` environment variable.
pub fn default_budget() -> u128 {
    std::env::var("PQCYCLIC_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1 << 24)
}

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("enumeration needs {needed} messages but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("selection matrix must be {expected_rows}×{expected_cols}, got {rows}×{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("anchor ({i},{j}) out of range: need i < s and j < t")]
    InvalidAnchor { i: u32, j: u32 },
}

/// How a reported minimum distance was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceKind {
    /// Proved by exhaustive enumeration (or an Exact structural argument).
    Exact,
    /// A lower bound; the true distance is ≥ this.
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Distance {
    pub value: u64,
    pub kind: DistanceKind,
}

/// A cyclic code of length `n` over `F_l`, presented by its generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeSpec {
    pub n: u64,
    pub l: u64,
    /// Little-endian generator polynomial; divides `xⁿ − 1`.
    pub generator: Vec<u64>,
    #[serde(rename = "k")]
    pub dimension: u64,
    #[serde(rename = "d")]
    pub distance: Distance,
    /// Which construction produced this code.
    pub provenance: String,
}

impl CodeSpec {
    /// Message rows `x^i·g(x)` as dense length-`n` vectors (no wraparound:
    /// `deg g + k − 1 < n`).
    fn rows(&self) -> Vec<Vec<u64>> {
        let n = self.n as usize;
        let k = self.dimension as usize;
        (0..k)
            .map(|i| {
                let mut row = vec![0u64; n];
                for (e, &c) in self.generator.iter().enumerate() {
                    row[e + i] = c;
                }
                row
            })
            .collect()
    }
}

// ==================== exhaustive weight enumeration ====================

/// Walk every message in `F_l^k` (odometer order), maintaining the encoded
/// codeword incrementally: each step adds one generator row per moved digit
/// (a carry from `l−1` to `0` is also a single `+row`, since `−(l−1) ≡ 1`).
///
/// The visitor sees the Hamming weight and whether some stride-`qt` column
/// sum is nonzero (the odd-like test when `qt = q^t`).
fn enumerate_weights(
    l: u64,
    n: usize,
    qt: usize,
    rows: &[Vec<u64>],
    mut visit: impl FnMut(u64, bool),
) {
    let supports: Vec<Vec<(usize, u64)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e, c))
                .collect()
        })
        .collect();
    let k = rows.len();
    let mut digits = vec![0u64; k];
    let mut acc = vec![0u64; n];
    let mut colsums = vec![0u64; qt];
    let mut weight = 0u64;
    let mut odd_columns = 0u64;

    loop {
        // advance the odometer by one, adding each moved digit's row once
        let mut i = 0;
        loop {
            if i == k {
                return; // wrapped past the last message
            }
            let moved = &supports[i];
            for &(e, c) in moved {
                let old = acc[e];
                let new = (old + c) % l;
                acc[e] = new;
                weight = weight + u64::from(new != 0) - u64::from(old != 0);
                let col = e % qt;
                let old_col = colsums[col];
                let new_col = (old_col + c) % l;
                colsums[col] = new_col;
                odd_columns = odd_columns + u64::from(new_col != 0) - u64::from(old_col != 0);
            }
            if digits[i] == l - 1 {
                digits[i] = 0;
                i += 1; // carry
            } else {
                digits[i] += 1;
                break;
            }
        }
        visit(weight, odd_columns != 0);
    }
}

fn message_count(l: u64, k: u64) -> u128 {
    let mut needed: u128 = 1;
    for _ in 0..k {
        needed = needed.saturating_mul(l as u128);
    }
    needed
}

/// Exact minimum Hamming weight over all nonzero codewords, by enumerating
/// the `l^k` message space.
pub fn min_distance_exhaustive(code: &CodeSpec, budget: u128) -> Result<u64, CodeError> {
    let needed = message_count(code.l, code.dimension);
    if needed > budget {
        return Err(CodeError::BudgetExceeded { needed, budget });
    }
    let mut best = u64::MAX;
    enumerate_weights(code.l, code.n as usize, 1, &code.rows(), |w, _| {
        best = best.min(w);
    });
    Ok(best)
}

// ==================== minimal codes ====================

/// The minimal code attached to a coset: generator `(xⁿ − 1)/M_γ`,
/// dimension `|C_γ|`.
///
/// The distance is exhaustive-exact when `l^k` fits the budget; otherwise
/// it is reported as the bound `2` (the generator has nonzero constant
/// term, so no codeword has weight 1).
pub fn minimal_code(
    field: &ExtField,
    powers: &[crate::gf::ExtElement],
    system: &CosetSystem,
    label: &CosetLabel,
    budget: u128,
) -> CodeSpec {
    let params = &system.params;
    let n = params.n;
    let m = minimal_polynomial(field, powers, system, label);
    let generator = poly::div_exact(params.l, &poly::x_pow_minus_one(params.l, n as usize), &m.coeffs)
        .expect("minimal polynomial divides xⁿ − 1");
    let dimension = system.coset(label).elements.len() as u64;
    let mut code = CodeSpec {
        n,
        l: params.l,
        generator,
        dimension,
        distance: Distance {
            value: 2,
            kind: DistanceKind::Bound,
        },
        provenance: "minimal".into(),
    };
    if let Ok(d) = min_distance_exhaustive(&code, budget) {
        code.distance = Distance {
            value: d,
            kind: DistanceKind::Exact,
        };
    }
    code
}

// ==================== repetition structure ====================

/// Decompose the minimal code at level `(s, j)` as an inner code of length
/// `q^(t−j)` repeated `p^s·q^j` times.
///
/// The inner code is generated by `x^(q^(t−j−1)) − 1` (weight 2, distance
/// exactly 2: no cyclic code with `g(0) ≠ 0` has a weight-1 word). The
/// identity `inner_generator · (1 + x^(q^(t−j)) + ⋯)` = minimal-code
/// generator is asserted.
pub fn repetition_decomposition(
    field: &ExtField,
    powers: &[crate::gf::ExtElement],
    system: &CosetSystem,
    j: u32,
) -> (CodeSpec, u64) {
    let params = &system.params;
    assert!(j < params.t, "level j must satisfy 0 ≤ j ≤ t−1");
    let inner_len = params.q_pow(params.t - j);
    let factor = params.p_pow(params.s) * params.q_pow(j);

    let mut inner_gen = vec![0u64; params.q_pow(params.t - j - 1) as usize + 1];
    inner_gen[0] = params.l - 1; // −1
    *inner_gen.last_mut().unwrap() = 1;

    // 1 + x^(q^(t−j)) + x^(2q^(t−j)) + ⋯, `factor` terms
    let mut repeater = vec![0u64; ((factor - 1) * inner_len) as usize + 1];
    for c in 0..factor {
        repeater[(c * inner_len) as usize] = 1;
    }

    let label = CosetLabel::new(params, params.s, j, false).expect("level label");
    let full = minimal_code(field, powers, system, &label, 0); // distance not needed here
    assert_eq!(
        poly::mul(params.l, &inner_gen, &repeater),
        full.generator,
        "repetition product must reproduce the minimal-code generator"
    );

    let inner = CodeSpec {
        n: inner_len,
        l: params.l,
        generator: inner_gen,
        dimension: inner_len - params.q_pow(params.t - j - 1),
        distance: Distance {
            value: 2,
            kind: DistanceKind::Exact,
        },
        provenance: "repetition-of-minimal".into(),
    };
    assert_eq!(inner.dimension, full.dimension, "repetition preserves dimension");
    assert_eq!(inner.n * factor, params.n, "sections must tile the length");
    (inner, factor)
}

// ==================== selection-product codes ====================

/// A 0/1 matrix choosing, for each paired coset level, which of the two
/// conjugate minimal polynomials enters the generator product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionMatrix {
    pub entries: Vec<Vec<bool>>,
}

impl SelectionMatrix {
    pub fn new(entries: Vec<Vec<bool>>) -> Self {
        let cols = entries.first().map_or(0, Vec::len);
        assert!(
            entries.iter().all(|r| r.len() == cols),
            "rows must have equal length"
        );
        Self { entries }
    }

    /// Parse rows of `0`/`1` separated by commas, e.g. `"10,01"`.
    pub fn parse(text: &str) -> Option<Self> {
        let entries: Option<Vec<Vec<bool>>> = text
            .split(',')
            .map(|row| {
                row.chars()
                    .map(|c| match c {
                        '0' => Some(false),
                        '1' => Some(true),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        let entries = entries?;
        if entries.is_empty() || entries[0].is_empty() {
            return None;
        }
        let cols = entries[0].len();
        entries.iter().all(|r| r.len() == cols).then(|| Self::new(entries))
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// Every matrix of the given shape (for small exhaustive sweeps).
    pub fn enumerate_all(rows: usize, cols: usize) -> Vec<Self> {
        let bits = rows * cols;
        assert!(bits <= 20, "selection sweep limited to 2^20 matrices");
        (0u32..1 << bits)
            .map(|mask| {
                Self::new(
                    (0..rows)
                        .map(|r| (0..cols).map(|c| mask >> (r * cols + c) & 1 == 1).collect())
                        .collect(),
                )
            })
            .collect()
    }
}

fn ceil_sqrt(m: u64) -> u64 {
    let mut d = (m as f64).sqrt() as u64;
    while d * d < m {
        d += 1;
    }
    while d > 0 && (d - 1) * (d - 1) >= m {
        d -= 1;
    }
    d
}

/// Build the selection-product code: one conjugate minimal polynomial from
/// each paired coset level multiplies into the generator.
///
/// With no anchor the matrix has shape `s × (t+1)` and the code has
/// dimension `(p^s + 1)q^t/2` with odd-like distance bound `⌈√(p^s)⌉`.
/// With anchor `(i, j)` (requiring `i < s`, `j < t`, so the inner length
/// keeps both prime factors), the same construction runs at length
/// `n̄ = p^(s−i)·q^(t−j)` — over the subsystem generated by `α^(p^i q^j)` —
/// and is repeated `p^i·q^j` times by the factor `(xⁿ−1)/(x^n̄−1)`;
/// dimension `(p^(s−i)+1)q^(t−j)/2`, bound `p^i·q^j·⌈√(p^(s−i))⌉`.
pub fn duadic_code(
    field: &ExtField,
    gauss: &GaussData,
    system: &CosetSystem,
    a: &SelectionMatrix,
    anchor: Option<(u32, u32)>,
) -> Result<CodeSpec, CodeError> {
    let params = &system.params;
    let (ai, aj) = anchor.unwrap_or((0, 0));
    if ai >= params.s || aj >= params.t {
        return Err(CodeError::InvalidAnchor { i: ai, j: aj });
    }
    let (sub_s, sub_t) = (params.s - ai, params.t - aj);
    if a.rows() != sub_s as usize || a.cols() != (sub_t + 1) as usize {
        return Err(CodeError::ShapeMismatch {
            expected_rows: sub_s as usize,
            expected_cols: (sub_t + 1) as usize,
            rows: a.rows(),
            cols: a.cols(),
        });
    }

    let sub_len = params.p_pow(sub_s) * params.q_pow(sub_t);
    let stride = params.n / sub_len; // p^i·q^j
    let (sub_system, sub_powers);
    let owned_sub;
    if stride == 1 {
        sub_system = system;
        sub_powers = alpha_power_table(field, &gauss.alpha, params.n);
    } else {
        let sub_params = validate_parameters(
            params.p,
            params.q,
            sub_s,
            sub_t,
            params.l,
            Some(params.g % sub_len),
        )
        .expect("anchored subsystem inherits every hypothesis");
        owned_sub = crate::cosets::enumerate_cosets(&sub_params);
        sub_system = &owned_sub;
        let sub_alpha = field.pow(&gauss.alpha, stride);
        sub_powers = alpha_power_table(field, &sub_alpha, sub_len);
    }

    let mut generator = vec![1u64];
    for (r, row) in a.entries.iter().enumerate() {
        for (c, &starred) in row.iter().enumerate() {
            let label = CosetLabel::new(&sub_system.params, r as u32, c as u32, starred)
                .expect("paired label");
            let m = minimal_polynomial(field, &sub_powers, sub_system, &label);
            generator = poly::mul(params.l, &generator, &m.coeffs);
        }
    }
    if stride > 1 {
        let mut repeater = vec![0u64; ((stride - 1) * sub_len) as usize + 1];
        for c in 0..stride {
            repeater[(c * sub_len) as usize] = 1;
        }
        generator = poly::mul(params.l, &generator, &repeater);
    }

    assert!(
        poly::div_exact(
            params.l,
            &poly::x_pow_minus_one(params.l, params.n as usize),
            &generator
        )
        .is_some(),
        "selection-product generator must divide xⁿ − 1"
    );
    let dimension = params.n - (generator.len() as u64 - 1);
    assert_eq!(
        dimension,
        (params.p_pow(sub_s) + 1) * params.q_pow(sub_t) / 2,
        "selection-product dimension"
    );

    Ok(CodeSpec {
        n: params.n,
        l: params.l,
        generator,
        dimension,
        distance: Distance {
            value: stride * ceil_sqrt(params.p_pow(sub_s)),
            kind: DistanceKind::Bound,
        },
        provenance: if anchor.is_some() {
            "selection-product-anchored".into()
        } else {
            "selection-product".into()
        },
    })
}

// ==================== odd-like weights ====================

/// Exact minimum weight over the odd-like codewords, by full enumeration.
///
/// A codeword is *even-like* when all of its stride-`q^t` column sums
/// vanish — equivalently when `b(x) = a(x)·a(x^g)` is zero in the ring —
/// and *odd-like* otherwise, in which case `b` is a nonzero multiple of
/// `1 + x^(q^t) + ⋯ + x^((p^s−1)q^t)`, which is what forces the
/// square-root bound.
pub fn odd_like_min_weight(
    code: &CodeSpec,
    params: &Parameters,
    budget: u128,
) -> Result<u64, CodeError> {
    let needed = message_count(code.l, code.dimension);
    if needed > budget {
        return Err(CodeError::BudgetExceeded { needed, budget });
    }
    let qt = params.q_pow(params.t) as usize;
    let mut best = u64::MAX;
    enumerate_weights(code.l, code.n as usize, qt, &code.rows(), |w, odd| {
        if odd {
            best = best.min(w);
        }
    });
    Ok(best)
}

/// True when some stride-`q^t` column sum of the codeword is nonzero.
pub fn is_odd_like(codeword: &RingElement, params: &Parameters) -> bool {
    let qt = params.q_pow(params.t) as usize;
    let mut colsums = vec![0u64; qt];
    for (e, &c) in codeword.coeffs.iter().enumerate() {
        colsums[e % qt] = (colsums[e % qt] + c) % codeword.l;
    }
    colsums.iter().any(|&c| c != 0)
}

/// Spot-check the square-root-bound mechanism on the first `samples`
/// messages: `b(x) = a(x)·a(x^g)` must be zero exactly for the even-like
/// `a`, and for odd-like `a` must be a (plain-polynomial) multiple of the
/// section polynomial `1 + x^(q^t) + ⋯ + x^((p^s−1)q^t)`.
pub fn odd_like_product_check(code: &CodeSpec, params: &Parameters, samples: u64) -> bool {
    let n = params.n as usize;
    let l = params.l;
    let qt = params.q_pow(params.t);
    let mut section = vec![0u64; (params.n - qt) as usize + 1];
    for c in 0..params.p_pow(params.s) {
        section[(c * qt) as usize] = 1;
    }

    let rows = code.rows();
    let k = code.dimension as usize;
    let mut digits = vec![0u64; k];
    let mut acc = RingElement::zero(n, l);
    let steps = (samples as u128).min(message_count(l, code.dimension).saturating_sub(1)) as u64;
    for _ in 0..steps {
        // next message
        let mut i = 0;
        while digits[i] == l - 1 {
            digits[i] = 0;
            for (e, &c) in rows[i].iter().enumerate() {
                acc.coeffs[e] = (acc.coeffs[e] + c) % l;
            }
            i += 1;
        }
        digits[i] += 1;
        for (e, &c) in rows[i].iter().enumerate() {
            acc.coeffs[e] = (acc.coeffs[e] + c) % l;
        }

        // a(x^g): coordinate permutation e ↦ g·e
        let mut twisted = RingElement::zero(n, l);
        for (e, &c) in acc.coeffs.iter().enumerate() {
            let te = (params.g as u128 * e as u128 % params.n as u128) as usize;
            twisted.coeffs[te] = c;
        }
        let b = crate::ring::ring_mul(&acc, &twisted).expect("same ring");

        let odd = is_odd_like(&acc, params);
        if odd != !b.is_zero() {
            return false;
        }
        if odd {
            let b_poly = poly::trim(b.coeffs.clone());
            if poly::div_exact(l, &b_poly, &section).is_none() {
                return false;
            }
        }
    }
    true
}

// ==================== tests ====================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::enumerate_cosets;
    use crate::gf::gauss_data_with_residue_sum;
    use crate::idempotents::alpha_power_table;

    struct Fixture {
        system: CosetSystem,
        field: ExtField,
        powers: Vec<crate::gf::ExtElement>,
        gauss: GaussData,
    }

    fn fixture(p: u64, q: u64, s: u32, t: u32, l: u64, g: Option<u64>, want_r: u64) -> Fixture {
        let params = validate_parameters(p, q, s, t, l, g).unwrap();
        let system = enumerate_cosets(&params);
        let field = ExtField::new(params.l, params.m as usize);
        let (_, gauss) = gauss_data_with_residue_sum(&field, &params, want_r, 32).unwrap();
        let powers = alpha_power_table(&field, &gauss.alpha, params.n);
        Fixture {
            system,
            field,
            powers,
            gauss,
        }
    }

    #[test]
    fn zero_coset_gives_the_repetition_code() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let zero = CosetLabel::zero(&fx.system.params);
        let code = minimal_code(&fx.field, &fx.powers, &fx.system, &zero, default_budget());
        assert_eq!(code.dimension, 1);
        assert_eq!(code.generator, vec![1u64; 55]);
        assert_eq!(
            code.distance,
            Distance {
                value: 55,
                kind: DistanceKind::Exact
            }
        );
    }

    #[test]
    fn level_code_distance_is_twice_the_section_count() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let label = CosetLabel::new(&fx.system.params, 1, 0, false).unwrap();
        let code = minimal_code(&fx.field, &fx.powers, &fx.system, &label, default_budget());
        assert_eq!(code.dimension, 4);
        assert_eq!(
            code.distance,
            Distance {
                value: 22,
                kind: DistanceKind::Exact
            }
        );
    }

    #[test]
    fn binary_level_code_parameters() {
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        let label = CosetLabel::new(&fx.system.params, 1, 0, false).unwrap();
        let code = minimal_code(&fx.field, &fx.powers, &fx.system, &label, default_budget());
        assert_eq!(code.dimension, 4);
        assert_eq!(code.generator.len() - 1, 31);
        assert_eq!(
            code.distance,
            Distance {
                value: 14,
                kind: DistanceKind::Exact
            }
        );
    }

    #[test]
    fn budget_refusal_reports_needed_count() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let label = CosetLabel::new(&fx.system.params, 1, 0, false).unwrap();
        let code = minimal_code(&fx.field, &fx.powers, &fx.system, &label, 10);
        // distance stays a bound when the budget is too small
        assert_eq!(code.distance.kind, DistanceKind::Bound);
        match min_distance_exhaustive(&code, 10) {
            Err(CodeError::BudgetExceeded { needed, budget }) => {
                assert_eq!(needed, 81);
                assert_eq!(budget, 10);
            }
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn repetition_decomposition_at_base_level() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let (inner, factor) = repetition_decomposition(&fx.field, &fx.powers, &fx.system, 0);
        assert_eq!(inner.n, 5);
        assert_eq!(inner.generator, vec![2, 1]); // x − 1 over F_3
        assert_eq!(inner.dimension, 4);
        assert_eq!(factor, 11);
    }

    #[test]
    fn selection_product_dimension_and_bound() {
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        for a in SelectionMatrix::enumerate_all(1, 2) {
            let code = duadic_code(&fx.field, &fx.gauss, &fx.system, &a, None).unwrap();
            assert_eq!(code.dimension, 20);
            assert_eq!(code.generator.len() - 1, 15);
            assert_eq!(
                code.distance,
                Distance {
                    value: 3,
                    kind: DistanceKind::Bound
                }
            );
        }
    }

    #[test]
    fn selection_shape_is_enforced() {
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        let bad = SelectionMatrix::new(vec![vec![true]]);
        match duadic_code(&fx.field, &fx.gauss, &fx.system, &bad, None) {
            Err(CodeError::ShapeMismatch {
                expected_rows: 1,
                expected_cols: 2,
                rows: 1,
                cols: 1,
            }) => {}
            other => panic!("expected shape mismatch, got {other:?}"),
        }
    }

    #[test]
    fn odd_like_minimum_respects_the_bound() {
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        let a = SelectionMatrix::new(vec![vec![true, true]]);
        let code = duadic_code(&fx.field, &fx.gauss, &fx.system, &a, None).unwrap();
        let d = odd_like_min_weight(&code, &fx.system.params, default_budget()).unwrap();
        assert!(d >= 3, "odd-like minimum {d} violates the bound");
        assert!(d <= 35);
    }

    #[test]
    fn column_sums_separate_odd_from_even() {
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        let params = &fx.system.params;
        // the all-ones word has every column sum ≡ p^s ≢ 0
        assert!(is_odd_like(&RingElement::all_ones(35, 2), params));
        // multiples of x^(q^t) − 1 cancel inside every column
        let a = SelectionMatrix::new(vec![vec![false, true]]);
        let code = duadic_code(&fx.field, &fx.gauss, &fx.system, &a, None).unwrap();
        let mut gen = RingElement::zero(35, 2);
        for (e, &c) in code.generator.iter().enumerate() {
            gen.coeffs[e] = c;
        }
        let section_shift = RingElement::monomial(35, 2, 5, 1).sub(&RingElement::one(35, 2));
        let even = crate::ring::ring_mul(&gen, &section_shift).unwrap();
        assert!(!even.is_zero());
        assert!(!is_odd_like(&even, params));
    }

    #[test]
    fn squared_products_are_section_multiples() {
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        let a = SelectionMatrix::new(vec![vec![true, false]]);
        let code = duadic_code(&fx.field, &fx.gauss, &fx.system, &a, None).unwrap();
        assert!(odd_like_product_check(&code, &fx.system.params, 300));
    }

    #[test]
    fn anchored_selection_product_scales_parameters() {
        let fx = fixture(7, 5, 2, 1, 2, None, 1);
        let a = SelectionMatrix::new(vec![vec![true, false]]);
        let code = duadic_code(&fx.field, &fx.gauss, &fx.system, &a, Some((1, 0))).unwrap();
        // inner length 35, repeated 7 times
        assert_eq!(code.dimension, (7 + 1) * 5 / 2);
        assert_eq!(code.distance.value, 7 * 3);
        assert_eq!(code.distance.kind, DistanceKind::Bound);
        assert_eq!(code.provenance, "selection-product-anchored");
    }
}

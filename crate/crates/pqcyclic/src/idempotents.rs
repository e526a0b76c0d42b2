//! Minimal polynomials and the primitive idempotents of the minimal ideals
//! of `F_l[x]/(xⁿ − 1)`.
//!
//! The idempotent `θ_γ` attached to a coset `γ` is characterized spectrally:
//! `θ_γ(α^u) = 1` when `u ∈ γ` and `0` otherwise. Two independent routes
//! produce it here:
//!
//! * the **oracle** ([`idempotent_oracle`]) inverts the spectrum directly,
//!   `ε_u = (1/n)·Σ_{j∈γ} α^(−uj)`, all arithmetic in the extension field;
//! * the **closed form** ([`idempotent_closed_form`]) assembles `θ_γ` as an
//!   `F_l`-combination of the `χ` polynomials, with scalar prefactors
//!   `1/(p^(i+1)·q^(j+1))` and weights that depend only on how far each
//!   target coset sits above `γ` on the `p` and `q` sides — the boundary
//!   `p`-level carries the character sums `𝓡`/`𝓝`, selected by the square
//!   class bookkeeping of [`crate::cosets::residue_class`].
//!
//! The two must agree coefficient by coefficient; the sweep driver insists
//! on it. Evaluation of a single `χ_γ` at `α^u` likewise has a closed form
//! ([`chi_eval_closed`]) pinned against the literal sum of roots of unity
//! ([`chi_eval_direct`]).

use crate::cosets::{residue_class, CosetLabel, CosetSystem, ResidueClass};
use crate::gf::{ExtElement, ExtField, GaussData};
use crate::numtheory::{is_residue_mod_p, phi_prime_power, pow_mod, Parameters};
use crate::poly;
use crate::ring::{ring_mul, RingElement};

// ==================== shared scaffolding ====================

/// `α^0 … α^(n−1)`, so later sums are table lookups.
pub fn alpha_power_table(field: &ExtField, alpha: &ExtElement, n: u64) -> Vec<ExtElement> {
    let mut table = Vec::with_capacity(n as usize);
    let mut acc = field.one();
    for _ in 0..n {
        table.push(acc.clone());
        acc = field.mul(&acc, alpha);
    }
    table
}

fn inv_mod_l(a: u64, l: u64) -> u64 {
    pow_mod(a % l, l - 2, l)
}

/// Exponent of `prime` in `u`; `None` stands for `+∞` (i.e. `u = 0`).
fn valuation(mut u: u64, prime: u64) -> Option<u32> {
    if u == 0 {
        return None;
    }
    let mut v = 0;
    while u % prime == 0 {
        u /= prime;
        v += 1;
    }
    Some(v)
}

// ==================== minimal polynomials ====================

/// The minimal polynomial `M_γ = Π_{e∈γ}(x − α^e)`, projected to `F_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPolynomial {
    pub label: CosetLabel,
    /// Monic, little-endian coefficients over `F_l`.
    pub coeffs: Vec<u64>,
}

/// Compute `M_γ` by multiplying out the linear factors in the extension
/// field and projecting.
///
/// # Panics
///
/// Panics if a coefficient fails to land in the prime subfield or the result
/// does not divide `xⁿ − 1` — both impossible for a genuine coset of a
/// primitive `n`-th root.
pub fn minimal_polynomial(
    field: &ExtField,
    powers: &[ExtElement],
    system: &CosetSystem,
    label: &CosetLabel,
) -> MinimalPolynomial {
    let elements = &system.coset(label).elements;
    // product of (x − α^e), coefficients in the extension field
    let mut coeffs: Vec<ExtElement> = vec![field.one()];
    for &e in elements {
        let root = &powers[e as usize];
        let mut next = vec![field.zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = field.add(&next[k + 1], c);
            let shifted = field.mul(c, root);
            next[k] = field.sub(&next[k], &shifted);
        }
        coeffs = next;
    }
    let projected: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            field
                .as_scalar(c)
                .expect("minimal polynomial coefficients live in the prime field")
        })
        .collect();
    assert_eq!(*projected.last().unwrap(), 1, "must be monic");
    let n = system.params.n as usize;
    let l = system.params.l;
    assert!(
        poly::div_exact(l, &poly::x_pow_minus_one(l, n), &projected).is_some(),
        "minimal polynomial must divide xⁿ − 1"
    );
    MinimalPolynomial {
        label: *label,
        coeffs: projected,
    }
}

// ==================== idempotents: spectral oracle ====================

/// A primitive idempotent, as a dense ring element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Idempotent {
    pub label: CosetLabel,
    pub element: RingElement,
}

impl Idempotent {
    /// Per-coset coefficients (the element is constant on every coset),
    /// indexed like `system.cosets`.
    ///
    /// # Panics
    ///
    /// Panics if some coset carries two different coefficients.
    pub fn coset_coefficients(&self, system: &CosetSystem) -> Vec<u64> {
        let mut out = Vec::with_capacity(system.cosets.len());
        for coset in &system.cosets {
            let c = self.element.coeffs[coset.elements[0] as usize];
            for &e in &coset.elements {
                assert_eq!(
                    self.element.coeffs[e as usize], c,
                    "idempotent is not constant on coset {}",
                    coset.label
                );
            }
            out.push(c);
        }
        out
    }
}

/// Spectral-inversion oracle: `ε_u = (1/n)·Σ_{j∈γ} α^(−uj)` for every `u`.
///
/// Each `ε_u` must collapse into the prime subfield, and the resulting
/// coefficient vector must be constant on every coset; both are asserted.
pub fn idempotent_oracle(
    field: &ExtField,
    powers: &[ExtElement],
    system: &CosetSystem,
    label: &CosetLabel,
) -> Idempotent {
    let params = &system.params;
    let n = params.n;
    let inv_n = inv_mod_l(n % params.l, params.l);
    let elements = &system.coset(label).elements;
    let mut coeffs = Vec::with_capacity(n as usize);
    for u in 0..n {
        let mut sum = field.zero();
        for &j in elements {
            let e = (u as u128 * j as u128 % n as u128) as u64;
            let idx = if e == 0 { 0 } else { n - e };
            sum = field.add(&sum, &powers[idx as usize]);
        }
        let scalar = field
            .as_scalar(&sum)
            .expect("spectral coefficients live in the prime field");
        coeffs.push(scalar * inv_n % params.l);
    }
    let element = RingElement {
        l: params.l,
        coeffs,
    };
    let idem = Idempotent {
        label: *label,
        element,
    };
    idem.coset_coefficients(system); // asserts constancy
    idem
}

// ==================== χ evaluation: closed form vs direct ====================

/// Literal evaluation `χ_γ(α^u) = Σ_{e∈γ} α^(ue)` in the extension field.
pub fn chi_eval_direct(
    field: &ExtField,
    powers: &[ExtElement],
    system: &CosetSystem,
    label: &CosetLabel,
    u: u64,
) -> ExtElement {
    let n = system.params.n;
    let mut sum = field.zero();
    for &e in &system.coset(label).elements {
        let idx = (u as u128 * e as u128 % n as u128) as u64;
        sum = field.add(&sum, &powers[idx as usize]);
    }
    sum
}

/// Closed-form `χ_γ(α^u)`, always a prime-field scalar.
///
/// The value factors over the two prime sides. Writing `f = s−i`, `e = t−j`
/// for the depths of `γ` and `v_p`, `v_q` for the valuations of `u`:
///
/// * `q` side: `φ(q^e)` when `v_q ≥ e`; `−q^(e−1)` when `v_q = e−1`;
///   otherwise `0` (a Ramanujan-type collapse).
/// * `p` side: `φ(p^f)/2` when `v_p ≥ f`; `0` when `v_p < f−1`; and at the
///   boundary `v_p = f−1` the surviving sum is `p^(f−1)` times `𝓡` or `𝓝` —
///   `𝓡` exactly when the square class of `u/p^(f−1)` matches the class
///   `γ`'s additive form draws from.
pub fn chi_eval_closed(
    params: &Parameters,
    gauss: &GaussData,
    label: &CosetLabel,
    u: u64,
) -> u64 {
    let l = params.l;
    let u = u % params.n;
    let (s, t) = (params.s, params.t);

    // q side
    let e = t - label.j;
    let q_factor = if e == 0 {
        1
    } else {
        match valuation(u, params.q) {
            Some(v) if v < e - 1 => 0,
            Some(v) if v == e - 1 => {
                // −q^(e−1)
                (l - params.q_pow(e - 1) % l) % l
            }
            _ => phi_prime_power(params.q, e) % l,
        }
    };

    // p side
    let f = s - label.i;
    let p_factor = if f == 0 {
        1
    } else {
        match valuation(u, params.p) {
            Some(v) if v + 1 < f => 0,
            Some(v) if v + 1 == f => {
                let w = (u / params.p_pow(f - 1)) % params.p;
                let class = residue_class(params, label).expect("i < s here");
                let w_is_residue = is_residue_mod_p(w, params.p);
                let gauss_value = if w_is_residue == (class == ResidueClass::Residue) {
                    gauss.residue_sum.value
                } else {
                    gauss.nonresidue_sum.value
                };
                params.p_pow(f - 1) % l * gauss_value % l
            }
            _ => phi_prime_power(params.p, f) / 2 % l,
        }
    };

    p_factor * q_factor % l
}

/// All `χ_γ(α^u)` as prime-field scalars, `values[coset index][u]`.
///
/// Construction cross-checks the closed form against the literal
/// extension-field sums for every pair and panics on any mismatch, so a
/// table in hand is a verified table.
#[derive(Debug, Clone)]
pub struct ChiEvalTable {
    pub values: Vec<Vec<u64>>,
}

impl ChiEvalTable {
    pub fn build_checked(
        field: &ExtField,
        powers: &[ExtElement],
        system: &CosetSystem,
        gauss: &GaussData,
    ) -> Self {
        let params = &system.params;
        let mut values = Vec::with_capacity(system.cosets.len());
        for coset in &system.cosets {
            let mut row = Vec::with_capacity(params.n as usize);
            for u in 0..params.n {
                let closed = chi_eval_closed(params, gauss, &coset.label, u);
                let direct = chi_eval_direct(field, powers, system, &coset.label, u);
                assert_eq!(
                    field.embed(closed),
                    direct,
                    "closed-form χ evaluation diverges at γ={}, u={u}",
                    coset.label
                );
                row.push(closed);
            }
            values.push(row);
        }
        Self { values }
    }
}

// ==================== idempotents: closed form ====================

/// The `𝓡`/`𝓝` weight carried by a boundary-level target inside `θ_γ`.
///
/// In the residue case unstarred targets always take `𝓝`; in the
/// non-residue case the choice flips with the parity of `t − j + m` (where
/// `m` is the target's `q`-level). A starred target flips, and a starred
/// `θ` flips again.
fn boundary_weight(
    params: &Parameters,
    gauss: &GaussData,
    theta: &CosetLabel,
    target: &CosetLabel,
) -> u64 {
    let base_picks_residue_sum = if params.qr_case {
        false
    } else {
        (params.t - theta.j + target.j) % 2 == 1
    };
    let picks_residue_sum = base_picks_residue_sum ^ target.starred ^ theta.starred;
    if picks_residue_sum {
        gauss.residue_sum.value
    } else {
        gauss.nonresidue_sum.value
    }
}

/// Assemble `θ_γ` as the closed-form `F_l`-combination of `χ` polynomials.
///
/// With `γ = (i, j)` the coefficient of `χ_(k,m)` is
/// `w_p(k)·w_q(m) / (p^min(i+1,s)·q^min(j+1,t))`, where
///
/// * `w_q(m)` is `q−1` for `m ≥ t−j`, `−1` for `m = t−j−1`, `0` below
///   (degenerating to `1` everywhere when `j = t`);
/// * `w_p(k)` is `(p−1)/2` for `k ≥ s−i`, the boundary character sum from
///   [`boundary_weight`] at `k = s−i−1`, `0` below (degenerating to `1`
///   everywhere when `i = s`).
pub fn idempotent_closed_form(
    system: &CosetSystem,
    gauss: &GaussData,
    label: &CosetLabel,
) -> Idempotent {
    let params = &system.params;
    let l = params.l;
    let (s, t) = (params.s, params.t);
    let (i, j) = (label.i, label.j);

    let denom = params.p_pow((i + 1).min(s)) % l * (params.q_pow((j + 1).min(t)) % l) % l;
    let prefactor = inv_mod_l(denom, l);

    let q_weight = |m: u32| -> u64 {
        if j == t {
            1
        } else if m >= t - j {
            (params.q - 1) % l
        } else if m + 1 == t - j {
            l - 1 // −1
        } else {
            0
        }
    };
    let p_weight = |target: &CosetLabel| -> u64 {
        if i == s {
            1
        } else if target.i >= s - i {
            (params.p - 1) / 2 % l
        } else if target.i + 1 == s - i {
            boundary_weight(params, gauss, label, target)
        } else {
            0
        }
    };

    let mut coeffs = vec![0u64; params.n as usize];
    for coset in &system.cosets {
        let target = &coset.label;
        let c = prefactor * p_weight(target) % l * q_weight(target.j) % l;
        if c == 0 {
            continue;
        }
        for &e in &coset.elements {
            coeffs[e as usize] = c;
        }
    }
    Idempotent {
        label: *label,
        element: RingElement { l, coeffs },
    }
}

// ==================== verification ====================

/// Per-idempotent algebraic checks.
#[derive(Debug, Clone)]
pub struct IdempotentCheck {
    pub label: CosetLabel,
    /// `e² = e` in the ring.
    pub squares_to_itself: bool,
    /// `e(α^u) = [u ∈ γ]` for every `u < n`.
    pub spectrum_ok: bool,
}

impl IdempotentCheck {
    pub fn pass(&self) -> bool {
        self.squares_to_itself && self.spectrum_ok
    }
}

/// Check one idempotent against its defining properties, using a verified
/// [`ChiEvalTable`] for the spectrum.
pub fn verify_idempotent(
    system: &CosetSystem,
    chi_values: &ChiEvalTable,
    idem: &Idempotent,
) -> IdempotentCheck {
    let params = &system.params;
    let l = params.l;
    let square = ring_mul(&idem.element, &idem.element).expect("same ring");
    let squares_to_itself = square == idem.element;

    // e(α^u) = Σ_γ c_γ·χ_γ(α^u) since e is constant on cosets
    let coeffs = idem.coset_coefficients(system);
    let target_idx = system
        .cosets
        .iter()
        .position(|c| c.label == idem.label)
        .expect("label in system");
    let mut spectrum_ok = true;
    for u in 0..params.n {
        let mut value = 0u64;
        for (gi, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                value = (value + c * chi_values.values[gi][u as usize]) % l;
            }
        }
        let expected = u64::from(system.coset_index_of(u) == target_idx);
        if value != expected {
            spectrum_ok = false;
            break;
        }
    }
    IdempotentCheck {
        label: idem.label,
        squares_to_itself,
        spectrum_ok,
    }
}

// ==================== tests ====================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::enumerate_cosets;
    use crate::gf::{gauss_data_with_residue_sum, primitive_nth_root, gauss_data};
    use crate::numtheory::validate_parameters;

    struct Fixture {
        system: CosetSystem,
        field: ExtField,
        powers: Vec<ExtElement>,
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
    fn minimal_polynomial_of_zero_coset_is_x_minus_one() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let zero = CosetLabel::zero(&fx.system.params);
        let m = minimal_polynomial(&fx.field, &fx.powers, &fx.system, &zero);
        assert_eq!(m.coeffs, vec![2, 1]); // x − 1 over F_3
    }

    #[test]
    fn minimal_polynomials_multiply_to_x_n_minus_one() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let l = fx.system.params.l;
        let mut product = vec![1u64];
        for coset in &fx.system.cosets {
            let m = minimal_polynomial(&fx.field, &fx.powers, &fx.system, &coset.label);
            assert_eq!(m.coeffs.len(), coset.elements.len() + 1);
            product = poly::mul(l, &product, &m.coeffs);
        }
        assert_eq!(product, poly::x_pow_minus_one(l, 55));
    }

    #[test]
    fn oracle_idempotent_of_zero_coset_is_scaled_all_ones() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let zero = CosetLabel::zero(&fx.system.params);
        let idem = idempotent_oracle(&fx.field, &fx.powers, &fx.system, &zero);
        // 1/55 ≡ 1 (mod 3), so every coefficient is 1
        assert_eq!(idem.element, RingElement::all_ones(55, 3));
    }

    #[test]
    fn oracle_matches_printed_combination_for_level_q_coset() {
        // with 𝓡 = 2: θ over C_(0,1) is 2 + 2χ* at both q-levels + 2χ at (s,0)
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let params = &fx.system.params;
        let label = CosetLabel::new(params, 0, 1, false).unwrap();
        let idem = idempotent_oracle(&fx.field, &fx.powers, &fx.system, &label);
        let coeffs = idem.coset_coefficients(&fx.system);
        let expect: Vec<(CosetLabel, u64)> = vec![
            (CosetLabel::new(params, 0, 0, true).unwrap(), 2),
            (CosetLabel::new(params, 0, 1, true).unwrap(), 2),
            (CosetLabel::new(params, 1, 0, false).unwrap(), 2),
            (CosetLabel::zero(params), 2),
        ];
        for (idx, coset) in fx.system.cosets.iter().enumerate() {
            let want = expect
                .iter()
                .find(|(lbl, _)| *lbl == coset.label)
                .map(|&(_, c)| c)
                .unwrap_or(0);
            assert_eq!(coeffs[idx], want, "coefficient of χ_{}", coset.label);
        }
    }

    #[test]
    fn chi_eval_closed_matches_direct_small() {
        for (p, q, s, t, l, g) in [(11, 5, 1, 1, 3, None), (7, 5, 1, 1, 2, Some(3))] {
            let params = validate_parameters(p, q, s, t, l, g).unwrap();
            let system = enumerate_cosets(&params);
            let field = ExtField::new(params.l, params.m as usize);
            let alpha = primitive_nth_root(&field, params.n, params.p, params.q, 0).unwrap();
            let gauss = gauss_data(&field, &params, &alpha).unwrap();
            let powers = alpha_power_table(&field, &alpha, params.n);
            // construction itself asserts closed == direct everywhere
            let _ = ChiEvalTable::build_checked(&field, &powers, &system, &gauss);
        }
    }

    #[test]
    fn chi_eval_at_one_gives_coset_size() {
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        for coset in &fx.system.cosets {
            assert_eq!(
                chi_eval_closed(&fx.system.params, &fx.gauss, &coset.label, 0),
                coset.elements.len() as u64 % 3
            );
        }
    }

    #[test]
    fn chi_eval_unit_orbit_value() {
        // χ over C_(0,0) evaluated at a unit exponent: both valuations sit at
        // the boundary, giving (−1)·𝓡 = −2 ≡ 1 (mod 3)
        let fx = fixture(11, 5, 1, 1, 3, None, 2);
        let label = CosetLabel::new(&fx.system.params, 0, 0, false).unwrap();
        assert_eq!(chi_eval_closed(&fx.system.params, &fx.gauss, &label, 1), 1);
    }

    #[test]
    fn closed_form_matches_oracle_small() {
        for (p, q, s, t, l, g, want_r) in
            [(11, 5, 1, 1, 3, None, 2), (7, 5, 1, 1, 2, Some(3), 1)]
        {
            let fx = fixture(p, q, s, t, l, g, want_r);
            for coset in &fx.system.cosets {
                let oracle = idempotent_oracle(&fx.field, &fx.powers, &fx.system, &coset.label);
                let closed = idempotent_closed_form(&fx.system, &fx.gauss, &coset.label);
                assert_eq!(
                    oracle.element, closed.element,
                    "θ_{} closed form diverges from the oracle (n={})",
                    coset.label, fx.system.params.n
                );
            }
        }
    }

    #[test]
    fn corrected_binary_idempotent_labels() {
        // at 𝓡 = 1, 𝓝 = 0: θ over C_1 is χ_1 + χ_7 and θ over C_3 is χ_3 + χ_7
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        let params = &fx.system.params;
        let c1 = CosetLabel::new(params, 0, 0, false).unwrap();
        let c3 = CosetLabel::new(params, 0, 0, true).unwrap();
        let c7 = CosetLabel::new(params, 1, 0, false).unwrap();

        let theta_1 = idempotent_oracle(&fx.field, &fx.powers, &fx.system, &c1);
        let coeffs = theta_1.coset_coefficients(&fx.system);
        for (idx, coset) in fx.system.cosets.iter().enumerate() {
            let want = u64::from(coset.label == c1 || coset.label == c7);
            assert_eq!(coeffs[idx], want, "θ_1 coefficient of χ_{}", coset.label);
        }

        let theta_3 = idempotent_oracle(&fx.field, &fx.powers, &fx.system, &c3);
        let coeffs = theta_3.coset_coefficients(&fx.system);
        for (idx, coset) in fx.system.cosets.iter().enumerate() {
            let want = u64::from(coset.label == c3 || coset.label == c7);
            assert_eq!(coeffs[idx], want, "θ_3 coefficient of χ_{}", coset.label);
        }
    }

    #[test]
    fn idempotents_verify_spectrally() {
        let fx = fixture(7, 5, 1, 1, 2, Some(3), 1);
        let chi_values =
            ChiEvalTable::build_checked(&fx.field, &fx.powers, &fx.system, &fx.gauss);
        let mut sum = RingElement::zero(fx.system.params.n as usize, fx.system.params.l);
        let mut idems = Vec::new();
        for coset in &fx.system.cosets {
            let idem = idempotent_oracle(&fx.field, &fx.powers, &fx.system, &coset.label);
            let check = verify_idempotent(&fx.system, &chi_values, &idem);
            assert!(check.pass(), "θ_{} fails its checks", coset.label);
            sum = sum.add(&idem.element);
            idems.push(idem);
        }
        assert_eq!(sum, RingElement::one(35, 2), "idempotents must sum to 1");
        for a in 0..idems.len() {
            for b in (a + 1)..idems.len() {
                let prod = ring_mul(&idems[a].element, &idems[b].element).unwrap();
                assert!(prod.is_zero(), "θθ' ≠ 0");
            }
        }
    }
}

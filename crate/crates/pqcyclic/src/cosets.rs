//! `l`-cyclotomic cosets modulo `n = p^s·q^t`, their two-parameter labeling,
//! closed additive descriptions, the order-2 class partition, and shifted
//! intersection counts.
//!
//! Under the standing hypotheses the cosets are exactly:
//!
//! * `C_(i,j)` and `C*_(i,j)` for `0 ≤ i ≤ s−1`, `0 ≤ j ≤ t`, with
//!   representatives `p^i·q^j` and `p^i·q^j·g`, each of size
//!   `φ(p^(s−i)·q^(t−j))/2`;
//! * `C_(s,j)` for `0 ≤ j ≤ t−1`, representative `p^s·q^j`, of size
//!   `φ(q^(t−j))`;
//! * the zero coset `C_(s,t) = {0}`,
//!
//! which is `(2s+1)(t+1)` cosets in total. Each coset also has a purely
//! additive description: a `p`-part drawn from the residue or non-residue
//! units at level `s−i` and a `q`-part drawn from all units at level `t−j`.
//! Which of the two square classes shows up depends only on whether `q` is a
//! square mod `p` and, when it is not, on the parity of `t−j`; that selection
//! rule is centralized in [`residue_class`] and drives both the additive
//! forms and the closed-form intersection counts.
//!
//! The count `#((a + X) ∩ Y)` of shifted-coset intersections — the quantity
//! behind every product identity in [`crate::ring`] — is provided twice:
//! brute force ([`CosetSystem::intersection_count`]) and closed form
//! ([`closed_form_count`]), the latter as one dispatch on the level
//! relations and square classes of the three cosets involved.

use serde::Serialize;

use crate::numtheory::{gcd, phi_prime_power, quadratic_residue_sets, Parameters};

// ==================== labels ====================

/// Which square class a coset's `p`-part is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueClass {
    Residue,
    NonResidue,
}

impl ResidueClass {
    pub fn opposite(self) -> Self {
        match self {
            ResidueClass::Residue => ResidueClass::NonResidue,
            ResidueClass::NonResidue => ResidueClass::Residue,
        }
    }
}

/// Label `(i, j)` or starred `(i, j)*` of a cyclotomic coset.
///
/// `i ≤ s` and `j ≤ t`; the starred flavor exists only for `i < s` (at
/// `i = s` the two would coincide). `(s, t)` is the zero coset `{0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CosetLabel {
    pub i: u32,
    pub j: u32,
    pub starred: bool,
}

impl CosetLabel {
    /// Construct a label, checking it exists for these parameters.
    pub fn new(params: &Parameters, i: u32, j: u32, starred: bool) -> Option<Self> {
        if i > params.s || j > params.t || (starred && i == params.s) {
            return None;
        }
        Some(Self { i, j, starred })
    }

    /// The label of the zero coset.
    pub fn zero(params: &Parameters) -> Self {
        Self {
            i: params.s,
            j: params.t,
            starred: false,
        }
    }

    pub fn is_zero(&self, params: &Parameters) -> bool {
        self.i == params.s && self.j == params.t
    }

    /// Canonical representative: `p^i·q^j` (times `g` when starred), mod `n`.
    pub fn representative(&self, params: &Parameters) -> u64 {
        let base = (params.p_pow(self.i) as u128 * params.q_pow(self.j) as u128
            % params.n as u128) as u64;
        if self.starred {
            (base as u128 * params.g as u128 % params.n as u128) as u64
        } else {
            base
        }
    }

    /// Number of elements in the coset with this label.
    pub fn size(&self, params: &Parameters) -> u64 {
        let (s, t) = (params.s, params.t);
        match (self.i == s, self.j == t) {
            (true, true) => 1,
            (true, false) => phi_prime_power(params.q, t - self.j),
            (false, true) => phi_prime_power(params.p, s - self.i) / 2,
            (false, false) => {
                phi_prime_power(params.p, s - self.i) * phi_prime_power(params.q, t - self.j)
                    / 2
            }
        }
    }
}

impl std::fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{}){}",
            self.i,
            self.j,
            if self.starred { "*" } else { "" }
        )
    }
}

/// Every label in canonical order: `i` ascending, then `j`, unstarred first.
pub fn all_labels(params: &Parameters) -> Vec<CosetLabel> {
    let mut labels = Vec::with_capacity(((2 * params.s + 1) * (params.t + 1)) as usize);
    for i in 0..=params.s {
        for j in 0..=params.t {
            labels.push(CosetLabel { i, j, starred: false });
            if i < params.s {
                labels.push(CosetLabel { i, j, starred: true });
            }
        }
    }
    labels
}

/// Which square class the `p`-part of a coset uses; `None` when `i = s`
/// (no `p`-part).
///
/// In the residue case (`q` a square mod `p`) unstarred cosets always draw
/// from the residues; in the non-residue case the assignment flips with the
/// parity of `t − j`.
pub fn residue_class(params: &Parameters, label: &CosetLabel) -> Option<ResidueClass> {
    if label.i == params.s {
        return None;
    }
    let unstarred_uses_residues = if params.qr_case {
        true
    } else {
        (params.t - label.j) % 2 == 0
    };
    Some(if unstarred_uses_residues != label.starred {
        ResidueClass::Residue
    } else {
        ResidueClass::NonResidue
    })
}

// ==================== multiplicative construction ====================

/// The orbit of `a` under multiplication by `l` modulo `n`, sorted.
pub fn multiplicative_coset(params: &Parameters, a: u64) -> Vec<u64> {
    let n = params.n;
    let a = a % n;
    let mut orbit = vec![a];
    let mut x = (a as u128 * params.l as u128 % n as u128) as u64;
    while x != a {
        orbit.push(x);
        x = (x as u128 * params.l as u128 % n as u128) as u64;
    }
    orbit.sort_unstable();
    orbit
}

/// One labeled coset: its representative and sorted elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coset {
    pub label: CosetLabel,
    pub representative: u64,
    pub elements: Vec<u64>,
}

/// The complete labeled coset partition of `Z_n`.
#[derive(Debug, Clone)]
pub struct CosetSystem {
    pub params: Parameters,
    /// All cosets in the canonical label order of [`all_labels`].
    pub cosets: Vec<Coset>,
    /// `element_to_coset[e]` = index into `cosets` of the coset containing `e`.
    element_to_coset: Vec<u32>,
}

/// Build the full coset system and check it is the partition the label
/// combinatorics promise: `(2s+1)(t+1)` pairwise-disjoint orbits whose sizes
/// match the label formulas and tile `Z_n`.
///
/// # Panics
///
/// Panics if the orbits fail any of those structural facts, which cannot
/// happen for parameters accepted by
/// [`validate_parameters`](crate::numtheory::validate_parameters).
pub fn enumerate_cosets(params: &Parameters) -> CosetSystem {
    let n = params.n as usize;
    let labels = all_labels(params);
    let mut cosets = Vec::with_capacity(labels.len());
    let mut element_to_coset = vec![u32::MAX; n];
    let mut covered = 0u64;
    for label in labels {
        let representative = label.representative(params);
        let elements = multiplicative_coset(params, representative);
        assert_eq!(
            elements.len() as u64,
            label.size(params),
            "coset {label} has unexpected size"
        );
        let idx = cosets.len() as u32;
        for &e in &elements {
            assert_eq!(
                element_to_coset[e as usize],
                u32::MAX,
                "element {e} appears in two cosets"
            );
            element_to_coset[e as usize] = idx;
        }
        covered += elements.len() as u64;
        cosets.push(Coset {
            label,
            representative,
            elements,
        });
    }
    assert_eq!(covered, params.n, "cosets must tile Z_n");
    assert_eq!(
        cosets.len() as u64,
        (2 * params.s as u64 + 1) * (params.t as u64 + 1)
    );
    CosetSystem {
        params: params.clone(),
        cosets,
        element_to_coset,
    }
}

impl CosetSystem {
    /// The coset with a given label.
    pub fn coset(&self, label: &CosetLabel) -> &Coset {
        self.cosets
            .iter()
            .find(|c| c.label == *label)
            .expect("label out of range for these parameters")
    }

    /// The coset containing the element `e`.
    pub fn coset_of(&self, e: u64) -> &Coset {
        &self.cosets[self.element_to_coset[(e % self.params.n) as usize] as usize]
    }

    /// Index (into `cosets`) of the coset containing `e`.
    pub fn coset_index_of(&self, e: u64) -> usize {
        self.element_to_coset[(e % self.params.n) as usize] as usize
    }

    /// Brute-force shifted intersection count `#((a + X) ∩ Y)`.
    pub fn intersection_count(&self, a: u64, x: &CosetLabel, y: &CosetLabel) -> u64 {
        let n = self.params.n;
        let y_idx = self
            .cosets
            .iter()
            .position(|c| c.label == *y)
            .expect("label out of range") as u32;
        self.coset(x)
            .elements
            .iter()
            .filter(|&&e| self.element_to_coset[((a + e) % n) as usize] == y_idx)
            .count() as u64
    }

    /// All counts `#((a + X) ∩ C)` at once, indexed like `cosets`.
    pub fn intersection_counts_all_targets(&self, a: u64, x: &CosetLabel) -> Vec<u64> {
        let n = self.params.n;
        let mut counts = vec![0u64; self.cosets.len()];
        for &e in &self.coset(x).elements {
            counts[self.element_to_coset[((a + e) % n) as usize] as usize] += 1;
        }
        counts
    }
}

/// Brute-force `#((a + X) ∩ Y)` over plain sorted slices modulo `modulus`;
/// the base-level form of the count used by the unit tests against the
/// residue/non-residue sets themselves.
pub fn shifted_intersection(modulus: u64, a: u64, xs: &[u64], ys: &[u64]) -> u64 {
    xs.iter()
        .filter(|&&x| ys.binary_search(&((a + x) % modulus)).is_ok())
        .count() as u64
}

// ==================== additive construction ====================

/// The closed additive description of a coset, as a sorted element list.
///
/// For `i < s` the `p`-part runs over one square class of the units at level
/// `s−i` (selected by [`residue_class`]); for `j < t` the `q`-part runs over
/// all units at level `t−j`; the two are glued as `p^i·q^t·x + p^s·q^j·y`.
/// Degenerate levels drop the corresponding part.
pub fn additive_coset_form(params: &Parameters, label: &CosetLabel) -> Vec<u64> {
    let n = params.n as u128;
    let (s, t) = (params.s, params.t);
    let class = residue_class(params, label);

    let p_parts: Vec<u64> = if label.i == s {
        vec![0]
    } else {
        let sets = quadratic_residue_sets(params.p, s - label.i);
        let xs = match class.unwrap() {
            ResidueClass::Residue => &sets.residues,
            ResidueClass::NonResidue => &sets.nonresidues,
        };
        let scale = params.p_pow(label.i) as u128 * params.q_pow(t) as u128 % n;
        xs.iter().map(|&x| (scale * x as u128 % n) as u64).collect()
    };

    let q_parts: Vec<u64> = if label.j == t {
        vec![0]
    } else {
        let qt_level = params.q_pow(t - label.j);
        let scale = params.p_pow(s) as u128 * params.q_pow(label.j) as u128 % n;
        (1..qt_level)
            .filter(|&y| y % params.q != 0)
            .map(|y| (scale * y as u128 % n) as u64)
            .collect()
    };

    let mut out = Vec::with_capacity(p_parts.len() * q_parts.len());
    for &pp in &p_parts {
        for &qq in &q_parts {
            out.push(((pp as u128 + qq as u128) % n) as u64);
        }
    }
    out.sort_unstable();
    out
}

// ==================== order-2 classes ====================

/// The two cyclotomic classes of order 2: `D₀ = ⟨g²⟩ ∪ v·⟨g²⟩` and
/// `D₁ = g·D₀`; together they partition the units of `Z_n`.
pub fn cyclotomic_classes(params: &Parameters) -> (Vec<u64>, Vec<u64>) {
    let n = params.n as u128;
    let phi = params.phi_n();
    let half = phi / 2;
    let quarter = phi / 4;

    let mut d0 = Vec::with_capacity(half as usize);
    let mut x: u128 = 1;
    let g2 = params.g as u128 * params.g as u128 % n;
    for _ in 0..quarter {
        d0.push(x as u64);
        d0.push((x * params.v as u128 % n) as u64);
        x = x * g2 % n;
    }
    d0.sort_unstable();
    d0.dedup();
    assert_eq!(d0.len() as u64, half, "D₀ must have φ(n)/2 elements");

    let mut d1: Vec<u64> = d0
        .iter()
        .map(|&e| (e as u128 * params.g as u128 % n) as u64)
        .collect();
    d1.sort_unstable();

    // the two classes tile the units
    debug_assert!(d0.binary_search(&1).is_ok());
    debug_assert!(d0.iter().chain(d1.iter()).all(|&e| gcd(e, params.n) == 1));
    let mut all: Vec<u64> = d0.iter().chain(d1.iter()).copied().collect();
    all.sort_unstable();
    all.dedup();
    assert_eq!(all.len() as u64, phi, "D₀ and D₁ must partition the units");

    (d0, d1)
}

// ==================== closed-form intersection counts ====================

/// `φ(q^k)` extended by `φ(q⁰) = 1`.
fn phi_or_one(prime: u64, k: u32) -> u64 {
    if k == 0 {
        1
    } else {
        phi_prime_power(prime, k)
    }
}

/// The `q`-side factor of the closed-form count: how many choices of the
/// added coset's `q`-part land the sum in the target's `q`-level `m`.
///
/// `j` is the shift's level, `j2` the added coset's level.
fn q_side_count(params: &Parameters, j: u32, j2: u32, m: u32) -> u64 {
    let (q, t) = (params.q, params.t);
    if j2 == t {
        // nothing is added on the q side; the shift's level survives
        return u64::from(m == j);
    }
    if j != j2 {
        // distinct levels: the smaller one wins, every unit choice works
        let winner = j.min(j2);
        return if m == winner {
            phi_or_one(q, t - j2)
        } else {
            0
        };
    }
    // equal levels below t: the sum can climb
    match m.cmp(&j) {
        std::cmp::Ordering::Less => 0,
        std::cmp::Ordering::Equal => (q - 2) * q.pow(t - j - 1),
        std::cmp::Ordering::Greater => phi_or_one(q, t - m),
    }
}

/// The `p`-side factor of the closed-form count.
///
/// `a`/`b` are the shift's and the added coset's labels, `k` the target's
/// `p`-level, and `xt` the target's square class (`None` at level `s`).
fn p_side_count(
    params: &Parameters,
    a: &CosetLabel,
    b: &CosetLabel,
    k: u32,
    xt: Option<ResidueClass>,
) -> u64 {
    let (p, s) = (params.p, params.s);
    let xa = residue_class(params, a);
    let xb = residue_class(params, b);
    let half_units = |level: u32| phi_prime_power(p, level) / 2;

    if b.i == s {
        // nothing added on the p side
        if k != a.i {
            return 0;
        }
        return if k == s || xa == xt { 1 } else { 0 };
    }
    if a.i == s {
        // the added part alone decides level and class
        if k != b.i {
            return 0;
        }
        return if xb == xt { half_units(s - b.i) } else { 0 };
    }
    if a.i < b.i {
        // shift dominates: level and class are the shift's
        if k != a.i {
            return 0;
        }
        return if xa == xt { half_units(s - b.i) } else { 0 };
    }
    if a.i > b.i {
        // added part dominates
        if k != b.i {
            return 0;
        }
        return if xb == xt { half_units(s - b.i) } else { 0 };
    }

    // equal levels below s: the sum can climb or cancel
    let i = a.i;
    let xa = xa.unwrap();
    let xb = xb.unwrap();
    if k < i {
        0
    } else if k == i {
        // base-level two-class count: the larger value occurs exactly when
        // the added class matches the shift's and the target opposes it
        let big = xb == xa && xt == Some(xa.opposite());
        p.pow(s - i - 1) * if big { (p + 1) / 4 } else { (p - 3) / 4 }
    } else if k < s {
        if xb == xa.opposite() {
            half_units(s - k)
        } else {
            0
        }
    } else {
        u64::from(xb == xa.opposite())
    }
}

/// Closed-form shifted intersection count `#((a + B) ∩ T)` for a shift
/// `a ∈ A`, as a product of independent `p`-side and `q`-side factors.
///
/// The count depends on `a` only through its coset `A` — constancy that the
/// brute-force sweep checks separately — so the arguments are three labels.
pub fn closed_form_count(
    params: &Parameters,
    a: &CosetLabel,
    b: &CosetLabel,
    target: &CosetLabel,
) -> u64 {
    for lbl in [a, b, target] {
        assert!(
            lbl.i <= params.s && lbl.j <= params.t && !(lbl.starred && lbl.i == params.s),
            "label {lbl} out of range"
        );
    }
    let xt = residue_class(params, target);
    p_side_count(params, a, b, target.i, xt) * q_side_count(params, a.j, b.j, target.j)
}

// ==================== tests ====================

//! End-to-end verification sweeps.
//!
//! Every closed form in the crate has an independent brute-force
//! counterpart; the drivers here run the full cross-checks for one
//! parameter tuple and report structured results instead of panicking, so
//! a CLI run can print per-check lines and exit nonzero on any mismatch.
//!
//! * structure: coset census, partition, additive forms, order-2 classes;
//! * intersections: closed-form shifted-intersection counts vs literal
//!   set intersections, for every label triple and every shift;
//! * products: every ordered `χ_A·χ_B` against its predicted coset
//!   expansion, plus the collapse equalities for nested `p`-levels;
//! * χ evaluations: closed form vs direct root-of-unity sums;
//! * idempotents: closed form vs spectral oracle, and the defining
//!   algebra (e² = e, spectrum, completeness, orthogonality).

use crate::cosets::{
    additive_coset_form, closed_form_count, cyclotomic_classes, enumerate_cosets, CosetLabel,
    CosetSystem,
};
use crate::gf::{gauss_data, primitive_nth_root, ExtElement, ExtField, GaussData};
use crate::idempotents::{
    alpha_power_table, chi_eval_closed, chi_eval_direct, idempotent_closed_form,
    idempotent_oracle, verify_idempotent, ChiEvalTable,
};
use crate::numtheory::Parameters;
use crate::ring::{ring_mul, verify_identity, ChiTable, RingElement};

/// How many mismatch descriptions a sweep keeps verbatim.
const SAMPLE_CAP: usize = 8;

/// One named pass/fail line, the unit of CLI and acceptance reporting.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of an exhaustive cross-check sweep.
#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub checked: u64,
    pub mismatch_count: u64,
    /// First few mismatch descriptions (capped).
    pub samples: Vec<String>,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.mismatch_count == 0
    }

    fn record(&mut self, description: String) {
        self.mismatch_count += 1;
        if self.samples.len() < SAMPLE_CAP {
            self.samples.push(description);
        }
    }
}

// ==================== structure ====================

#[derive(Debug, Clone)]
pub struct StructureReport {
    pub expected_cosets: usize,
    pub found_cosets: usize,
    pub partition_ok: bool,
    pub sizes_ok: bool,
    pub additive_ok: bool,
    pub classes_ok: bool,
}

impl StructureReport {
    pub fn pass(&self) -> bool {
        self.expected_cosets == self.found_cosets
            && self.partition_ok
            && self.sizes_ok
            && self.additive_ok
            && self.classes_ok
    }
}

/// Census, partition, size formulas, additive = multiplicative forms, and
/// the identification of the order-2 classes with the two unit cosets.
pub fn verify_structure(system: &CosetSystem) -> StructureReport {
    let params = &system.params;
    let expected_cosets = ((2 * params.s + 1) * (params.t + 1)) as usize;

    let mut seen = vec![false; params.n as usize];
    let mut partition_ok = true;
    for coset in &system.cosets {
        for &e in &coset.elements {
            if seen[e as usize] {
                partition_ok = false;
            }
            seen[e as usize] = true;
        }
    }
    partition_ok &= seen.iter().all(|&s| s);

    let sizes_ok = system
        .cosets
        .iter()
        .all(|c| c.elements.len() as u64 == c.label.size(params));

    let additive_ok = system
        .cosets
        .iter()
        .all(|c| additive_coset_form(params, &c.label) == c.elements);

    let (d0, d1) = cyclotomic_classes(params);
    let unstarred = CosetLabel::new(params, 0, 0, false).unwrap();
    let starred = CosetLabel::new(params, 0, 0, true).unwrap();
    let classes_ok =
        d0 == system.coset(&unstarred).elements && d1 == system.coset(&starred).elements;

    StructureReport {
        expected_cosets,
        found_cosets: system.cosets.len(),
        partition_ok,
        sizes_ok,
        additive_ok,
        classes_ok,
    }
}

// ==================== intersection counts ====================

/// Brute-force every shifted intersection `#((a + B) ∩ T)` — all label
/// triples, all shifts `a` in the first coset — against the closed form.
pub fn verify_intersections(system: &CosetSystem) -> SweepReport {
    let params = &system.params;
    let mut report = SweepReport::default();
    for a_coset in &system.cosets {
        for b_coset in &system.cosets {
            for target in &system.cosets {
                let closed = closed_form_count(params, &a_coset.label, &b_coset.label, &target.label);
                for &a in &a_coset.elements {
                    let brute = system.intersection_count(a, &b_coset.label, &target.label);
                    report.checked += 1;
                    if brute != closed {
                        report.record(format!(
                            "#(({a} + {}) ∩ {}) = {brute}, closed form {closed} (a ∈ {})",
                            b_coset.label, target.label, a_coset.label
                        ));
                    }
                }
            }
        }
    }
    report
}

// ==================== product identities ====================

/// Every ordered product `χ_A·χ_B` against its closed-form expansion.
pub fn verify_products(system: &CosetSystem) -> SweepReport {
    let params = &system.params;
    let table = ChiTable::build(system);
    let mut report = SweepReport::default();
    for a in &system.cosets {
        for b in &system.cosets {
            let identity = verify_identity(params, &table, &a.label, &b.label);
            report.checked += 1;
            if !identity.pass {
                report.record(format!(
                    "χ_{}·χ_{} deviates from its coset expansion",
                    a.label, b.label
                ));
            }
        }
    }
    report
}

/// The collapse equalities: when `A` sits at a strictly shallower `p`-level
/// than `B` (and `B` is a paired label), the product cannot see `B`'s
/// flavor, so `χ_A·χ_B = χ_A·χ_B*`.
pub fn verify_star_collapse(system: &CosetSystem) -> SweepReport {
    let params = &system.params;
    let table = ChiTable::build(system);
    let mut report = SweepReport::default();
    for a in &system.cosets {
        for b in &system.cosets {
            if b.label.starred || b.label.i >= params.s || a.label.i >= b.label.i {
                continue;
            }
            let b_star = CosetLabel::new(params, b.label.i, b.label.j, true).unwrap();
            let lhs = ring_mul(table.get(&a.label), table.get(&b.label)).expect("one ring");
            let rhs = ring_mul(table.get(&a.label), table.get(&b_star)).expect("one ring");
            report.checked += 1;
            if lhs != rhs {
                report.record(format!(
                    "χ_{}·χ_{} ≠ χ_{}·χ_{}",
                    a.label, b.label, a.label, b_star
                ));
            }
        }
    }
    report
}

// ==================== χ evaluations ====================

/// Closed-form `χ_γ(α^u)` against the literal sum, for every `(γ, u)`.
pub fn verify_chi_evaluations(
    field: &ExtField,
    powers: &[ExtElement],
    system: &CosetSystem,
    gauss: &GaussData,
) -> SweepReport {
    let params = &system.params;
    let mut report = SweepReport::default();
    for coset in &system.cosets {
        for u in 0..params.n {
            let closed = chi_eval_closed(params, gauss, &coset.label, u);
            let direct = chi_eval_direct(field, powers, system, &coset.label, u);
            report.checked += 1;
            if field.embed(closed) != direct {
                report.record(format!("χ_{}(α^{u}) closed form diverges", coset.label));
            }
        }
    }
    report
}

// ==================== idempotents ====================

#[derive(Debug, Clone)]
pub struct IdempotentFamilyReport {
    pub labels: usize,
    pub closed_oracle_mismatches: u64,
    pub square_failures: u64,
    pub spectrum_failures: u64,
    pub sum_is_one: bool,
    pub orthogonal: bool,
}

impl IdempotentFamilyReport {
    pub fn pass(&self) -> bool {
        self.closed_oracle_mismatches == 0
            && self.square_failures == 0
            && self.spectrum_failures == 0
            && self.sum_is_one
            && self.orthogonal
    }
}

/// Closed-form vs oracle idempotents for every label, plus the defining
/// algebra of the full family.
pub fn verify_idempotent_family(
    field: &ExtField,
    powers: &[ExtElement],
    system: &CosetSystem,
    gauss: &GaussData,
) -> IdempotentFamilyReport {
    let params = &system.params;
    let chi_values = ChiEvalTable::build_checked(field, powers, system, gauss);

    let mut closed_oracle_mismatches = 0;
    let mut square_failures = 0;
    let mut spectrum_failures = 0;
    let mut sum = RingElement::zero(params.n as usize, params.l);
    let mut family = Vec::with_capacity(system.cosets.len());
    for coset in &system.cosets {
        let oracle = idempotent_oracle(field, powers, system, &coset.label);
        let closed = idempotent_closed_form(system, gauss, &coset.label);
        if oracle.element != closed.element {
            closed_oracle_mismatches += 1;
        }
        let check = verify_idempotent(system, &chi_values, &oracle);
        square_failures += u64::from(!check.squares_to_itself);
        spectrum_failures += u64::from(!check.spectrum_ok);
        sum = sum.add(&oracle.element);
        family.push(oracle);
    }

    let sum_is_one = sum == RingElement::one(params.n as usize, params.l);
    let mut orthogonal = true;
    for a in 0..family.len() {
        for b in (a + 1)..family.len() {
            let prod = ring_mul(&family[a].element, &family[b].element).expect("one ring");
            orthogonal &= prod.is_zero();
        }
    }

    IdempotentFamilyReport {
        labels: family.len(),
        closed_oracle_mismatches,
        square_failures,
        spectrum_failures,
        sum_is_one,
        orthogonal,
    }
}

// ==================== full run ====================

#[derive(Debug, Clone)]
pub struct FullReport {
    pub structure: StructureReport,
    pub intersections: SweepReport,
    pub products: SweepReport,
    pub star_collapse: SweepReport,
    pub chi_evaluations: SweepReport,
    pub idempotents: IdempotentFamilyReport,
}

impl FullReport {
    pub fn pass(&self) -> bool {
        self.structure.pass()
            && self.intersections.pass()
            && self.products.pass()
            && self.star_collapse.pass()
            && self.chi_evaluations.pass()
            && self.idempotents.pass()
    }

    /// Human-readable per-check lines for CLI output.
    pub fn lines(&self) -> Vec<CheckLine> {
        let sweep = |name: &str, r: &SweepReport| CheckLine {
            name: name.into(),
            pass: r.pass(),
            detail: if r.pass() {
                format!("{} checks", r.checked)
            } else {
                format!(
                    "{} of {} checks failed; first: {}",
                    r.mismatch_count,
                    r.checked,
                    r.samples.first().map_or("", String::as_str)
                )
            },
        };
        let s = &self.structure;
        let i = &self.idempotents;
        vec![
            CheckLine {
                name: "coset structure".into(),
                pass: s.pass(),
                detail: format!(
                    "{} cosets (expected {}), partition {}, sizes {}, additive forms {}, classes {}",
                    s.found_cosets,
                    s.expected_cosets,
                    ok(s.partition_ok),
                    ok(s.sizes_ok),
                    ok(s.additive_ok),
                    ok(s.classes_ok),
                ),
            },
            sweep("intersection counts", &self.intersections),
            sweep("product identities", &self.products),
            sweep("star collapse", &self.star_collapse),
            sweep("χ evaluations", &self.chi_evaluations),
            CheckLine {
                name: "idempotents".into(),
                pass: i.pass(),
                detail: format!(
                    "{} labels, closed≠oracle {}, e²≠e {}, spectrum failures {}, Σθ=1 {}, orthogonal {}",
                    i.labels,
                    i.closed_oracle_mismatches,
                    i.square_failures,
                    i.spectrum_failures,
                    ok(i.sum_is_one),
                    ok(i.orthogonal),
                ),
            },
        ]
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

/// Run every sweep for one parameter tuple. `alpha_index` selects the
/// root-of-unity orbit (hence which of the two character-sum assignments
/// is in force); all cross-checks are orbit-consistent by construction.
pub fn verify_all(params: &Parameters, alpha_index: usize) -> FullReport {
    let system = enumerate_cosets(params);
    let field = ExtField::new(params.l, params.m as usize);
    let alpha = primitive_nth_root(&field, params.n, params.p, params.q, alpha_index)
        .expect("splitting field contains primitive n-th roots");
    let gauss = gauss_data(&field, params, &alpha).expect("character sums are scalars");
    let powers = alpha_power_table(&field, &alpha, params.n);

    FullReport {
        structure: verify_structure(&system),
        intersections: verify_intersections(&system),
        products: verify_products(&system),
        star_collapse: verify_star_collapse(&system),
        chi_evaluations: verify_chi_evaluations(&field, &powers, &system, &gauss),
        idempotents: verify_idempotent_family(&field, &powers, &system, &gauss),
    }
}

// ==================== tests ====================

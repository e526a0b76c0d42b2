//! Acceptance checklist.
//!
//! One test per release criterion, each asserting exact expected values (no
//! tolerances — everything here is integer arithmetic) plus the stated time
//! budget, and printing a single `criterion N: PASS — …` line on success
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criteria 1–2 reproduce two fully worked reference parameter sets, pinning
//! the coset tables and all six primitive idempotents for each. The remaining
//! criteria sweep the four standard tuples: closed forms against oracles,
//! intersection counts, product identities, idempotent algebra, code
//! distances, and structural counts.

use std::time::{Duration, Instant};

use pqcyclic::codes::{duadic_code, minimal_code, odd_like_min_weight, DistanceKind, SelectionMatrix};
use pqcyclic::cosets::{all_labels, enumerate_cosets, CosetLabel, CosetSystem};
use pqcyclic::gf::{gauss_data, gauss_data_with_residue_sum, primitive_nth_root, ExtElement, ExtField, GaussData};
use pqcyclic::idempotents::{alpha_power_table, idempotent_closed_form, idempotent_oracle};
use pqcyclic::numtheory::{validate_parameters, Parameters};
use pqcyclic::ring::{chi, RingElement};
use pqcyclic::verify::{
    verify_idempotent_family, verify_intersections, verify_products, verify_star_collapse,
    verify_structure,
};

/// The four parameter tuples every sweep criterion runs on:
/// both residue cases, an `s = 2` instance, and a `t = 2` instance.
const TUPLES: [(u64, u64, u32, u32, u64, Option<u64>); 4] = [
    (11, 5, 1, 1, 3, None),
    (7, 5, 1, 1, 2, Some(3)),
    (7, 5, 2, 1, 2, None),
    (3, 5, 1, 2, 13, None),
];

struct Fixture {
    params: Parameters,
    system: CosetSystem,
    field: ExtField,
    gauss: GaussData,
    powers: Vec<ExtElement>,
}

/// Build the standard fixture on the first root-of-unity orbit.
fn fixture(p: u64, q: u64, s: u32, t: u32, l: u64, g: Option<u64>) -> Fixture {
    let params = validate_parameters(p, q, s, t, l, g).unwrap();
    let system = enumerate_cosets(&params);
    let field = ExtField::new(params.l, params.m as usize);
    let alpha = primitive_nth_root(&field, params.n, params.p, params.q, 0).unwrap();
    let gauss = gauss_data(&field, &params, &alpha).unwrap();
    let powers = alpha_power_table(&field, &gauss.alpha, params.n);
    Fixture {
        params,
        system,
        field,
        gauss,
        powers,
    }
}

/// Like [`fixture`] but selecting the orbit on which the quadratic character
/// sum takes the requested value, as the reference tables do.
fn fixture_with_residue_sum(
    p: u64,
    q: u64,
    s: u32,
    t: u32,
    l: u64,
    g: Option<u64>,
    want: u64,
) -> Fixture {
    let params = validate_parameters(p, q, s, t, l, g).unwrap();
    let system = enumerate_cosets(&params);
    let field = ExtField::new(params.l, params.m as usize);
    let (_, gauss) = gauss_data_with_residue_sum(&field, &params, want, 32).unwrap();
    let powers = alpha_power_table(&field, &gauss.alpha, params.n);
    Fixture {
        params,
        system,
        field,
        gauss,
        powers,
    }
}

fn label(fx: &Fixture, i: u32, j: u32, starred: bool) -> CosetLabel {
    CosetLabel::new(&fx.params, i, j, starred).unwrap()
}

/// `Σ c·χ_label` for a sparse list of (label, coefficient) pairs.
fn chi_combination(fx: &Fixture, terms: &[(CosetLabel, u64)]) -> RingElement {
    let mut acc = RingElement::zero(fx.params.n as usize, fx.params.l);
    for (lab, c) in terms {
        acc = acc.add(&chi(&fx.system, lab).scale(*c));
    }
    acc
}

// ==================== criterion 1 ====================

#[test]
fn criterion_1_ternary_reference_reproduction() {
    let start = Instant::now();
    let fx = fixture_with_residue_sum(11, 5, 1, 1, 3, Some(2), 2);
    assert_eq!(fx.params.n, 55);
    assert_eq!(fx.gauss.residue_sum.value, 2);
    assert_eq!(fx.gauss.nonresidue_sum.value, 0);

    // The six cosets, exactly as tabulated in the reference worked example.
    let expected_cosets: [(CosetLabel, Vec<u64>); 6] = [
        (
            label(&fx, 0, 0, false), // C_1
            vec![
                1, 3, 4, 9, 12, 14, 16, 23, 26, 27, 31, 34, 36, 37, 38, 42, 47, 48, 49, 53,
            ],
        ),
        (
            label(&fx, 0, 0, true), // C_2
            vec![
                2, 6, 7, 8, 13, 17, 18, 19, 21, 24, 28, 29, 32, 39, 41, 43, 46, 51, 52, 54,
            ],
        ),
        (label(&fx, 0, 1, false), vec![5, 15, 20, 25, 45]), // C_5
        (label(&fx, 0, 1, true), vec![10, 30, 35, 40, 50]), // C_10
        (label(&fx, 1, 0, false), vec![11, 22, 33, 44]),    // C_11
        (CosetLabel::zero(&fx.params), vec![0]),            // C_0
    ];
    for (lab, want) in &expected_cosets {
        assert_eq!(&fx.system.coset(lab).elements, want, "coset {lab}");
    }

    // The six primitive idempotents as χ-combinations (constant term =
    // multiple of χ over the zero coset, which is x^0).
    let c1 = label(&fx, 0, 0, false);
    let c2 = label(&fx, 0, 0, true);
    let c5 = label(&fx, 0, 1, false);
    let c10 = label(&fx, 0, 1, true);
    let c11 = label(&fx, 1, 0, false);
    let c0 = CosetLabel::zero(&fx.params);
    let expected_thetas: [(CosetLabel, RingElement); 6] = [
        (c0, RingElement::all_ones(55, 3)),
        (c1, chi_combination(&fx, &[(c0, 2), (c10, 2), (c2, 1), (c11, 1)])),
        (c2, chi_combination(&fx, &[(c0, 2), (c5, 2), (c1, 1), (c11, 1)])),
        (c5, chi_combination(&fx, &[(c0, 2), (c2, 2), (c10, 2), (c11, 2)])),
        (c10, chi_combination(&fx, &[(c0, 2), (c1, 2), (c5, 2), (c11, 2)])),
        (
            c11,
            chi_combination(&fx, &[(c0, 1), (c1, 2), (c2, 2), (c5, 1), (c10, 1), (c11, 2)]),
        ),
    ];
    for (lab, want) in &expected_thetas {
        let closed = idempotent_closed_form(&fx.system, &fx.gauss, lab);
        assert_eq!(&closed.element, want, "θ_{lab} closed form");
        let oracle = idempotent_oracle(&fx.field, &fx.powers, &fx.system, lab);
        assert_eq!(&oracle.element, want, "θ_{lab} oracle");
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "budget exceeded: {elapsed:?}");
    println!(
        "criterion 1: PASS — (11,5,1,1,3), g=2: all 6 cosets and all 6 idempotents match the \
         reference tables exactly at 𝓡=2 ({elapsed:?})"
    );
}

// ==================== criterion 2 ====================

#[test]
fn criterion_2_binary_reference_reproduction() {
    let start = Instant::now();
    let fx = fixture_with_residue_sum(7, 5, 1, 1, 2, Some(3), 1);
    assert_eq!(fx.params.n, 35);
    assert_eq!(fx.gauss.residue_sum.value, 1);
    assert_eq!(fx.gauss.nonresidue_sum.value, 0);

    let c1 = label(&fx, 0, 0, false);
    let c3 = label(&fx, 0, 0, true);
    let c5 = label(&fx, 0, 1, false);
    let c15 = label(&fx, 0, 1, true);
    let c7 = label(&fx, 1, 0, false);
    let c0 = CosetLabel::zero(&fx.params);

    // Coset tables. The reference prints C_3 with 11 elements; the orbit of 3
    // genuinely has 12 (the printed list drops 34 — size φ(35)/2 = 12, and 12
    // elements are required for the partition to tile Z_35).
    assert_eq!(
        fx.system.coset(&c1).elements,
        vec![1, 2, 4, 8, 9, 11, 16, 18, 22, 23, 29, 32]
    );
    let printed_c3 = [3u64, 6, 12, 13, 17, 19, 24, 26, 27, 31, 33];
    let full_c3 = fx.system.coset(&c3).elements.clone();
    assert_eq!(full_c3.len(), 12);
    assert!(printed_c3.iter().all(|e| full_c3.contains(e)));
    assert_eq!(full_c3, vec![3, 6, 12, 13, 17, 19, 24, 26, 27, 31, 33, 34]);
    assert_eq!(fx.system.coset(&c5).elements, vec![5, 10, 20]);
    assert_eq!(fx.system.coset(&c15).elements, vec![15, 25, 30]);
    assert_eq!(fx.system.coset(&c7).elements, vec![7, 14, 21, 28]);
    assert_eq!(fx.system.coset(&c0).elements, vec![0]);

    // The six idempotents. The reference table transposes the labels of the
    // two degree-12 idempotents (its θ_1 line is the idempotent whose spectrum
    // is supported on C_3 and vice versa); the verified assignment is pinned
    // per label here, and set equality with the reference list is asserted
    // separately below, so every printed polynomial is accounted for.
    let theta = |lab: &CosetLabel| {
        let closed = idempotent_closed_form(&fx.system, &fx.gauss, lab);
        let oracle = idempotent_oracle(&fx.field, &fx.powers, &fx.system, lab);
        assert_eq!(closed.element, oracle.element, "θ_{lab} closed vs oracle");
        closed.element
    };
    let expected: [(CosetLabel, RingElement); 6] = [
        (c0, RingElement::all_ones(35, 2)),
        (c1, chi_combination(&fx, &[(c1, 1), (c7, 1)])),
        (c3, chi_combination(&fx, &[(c3, 1), (c7, 1)])),
        (c5, chi_combination(&fx, &[(c0, 1), (c3, 1), (c5, 1), (c7, 1)])),
        (c15, chi_combination(&fx, &[(c0, 1), (c1, 1), (c7, 1), (c15, 1)])),
        (c7, chi_combination(&fx, &[(c1, 1), (c3, 1), (c7, 1)])),
    ];
    for (lab, want) in &expected {
        assert_eq!(&theta(lab), want, "θ_{lab}");
    }

    // Set equality with the printed reference list (which differs only by the
    // transposed pair): all six printed polynomials occur, each exactly once.
    let printed: Vec<RingElement> = vec![
        RingElement::all_ones(35, 2),
        chi_combination(&fx, &[(c3, 1), (c7, 1)]),
        chi_combination(&fx, &[(c1, 1), (c7, 1)]),
        chi_combination(&fx, &[(c0, 1), (c3, 1), (c5, 1), (c7, 1)]),
        chi_combination(&fx, &[(c0, 1), (c1, 1), (c7, 1), (c15, 1)]),
        chi_combination(&fx, &[(c1, 1), (c3, 1), (c7, 1)]),
    ];
    let mut computed: Vec<Vec<u64>> = expected.iter().map(|(_, e)| e.coeffs.clone()).collect();
    let mut printed: Vec<Vec<u64>> = printed.into_iter().map(|e| e.coeffs).collect();
    computed.sort();
    printed.sort();
    assert_eq!(computed, printed);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "budget exceeded: {elapsed:?}");
    println!(
        "criterion 2: PASS — (7,5,1,1,2), g=3: cosets (C_3 = full 12-element orbit) and all 6 \
         idempotents match the reference at 𝓡=1, up to the documented transposed pair ({elapsed:?})"
    );
}

// ==================== criterion 3 ====================

#[test]
fn criterion_3_closed_form_matches_oracle_on_all_tuples() {
    let start = Instant::now();
    let mut mismatches = 0u64;
    let mut labels_checked = 0usize;
    for &(p, q, s, t, l, g) in &TUPLES {
        let fx = fixture(p, q, s, t, l, g);
        for lab in all_labels(&fx.params) {
            let closed = idempotent_closed_form(&fx.system, &fx.gauss, &lab);
            let oracle = idempotent_oracle(&fx.field, &fx.powers, &fx.system, &lab);
            labels_checked += 1;
            if closed.element != oracle.element {
                mismatches += 1;
                eprintln!("mismatch at n={} label {lab}", fx.params.n);
            }
        }
    }
    assert_eq!(mismatches, 0);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "budget exceeded: {elapsed:?}");
    println!(
        "criterion 3: PASS — closed-form idempotents equal the spectral oracle coefficientwise \
         for all {labels_checked} labels across the 4 tuples, 0 mismatches ({elapsed:?})"
    );
}

// ==================== criterion 4 ====================

#[test]
fn criterion_4_intersection_counts_sweep() {
    let start = Instant::now();
    let mut checked = 0u64;
    for &(p, q, s, t, l, g) in &TUPLES {
        let params = validate_parameters(p, q, s, t, l, g).unwrap();
        let system = enumerate_cosets(&params);
        let report = verify_intersections(&system);
        assert_eq!(
            report.mismatch_count, 0,
            "n={}: {:?}",
            params.n, report.samples
        );
        checked += report.checked;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "budget exceeded: {elapsed:?}");
    println!(
        "criterion 4: PASS — closed-form intersection counts equal brute-force counts for all \
         {checked} (shift, label, label) cases across the 4 tuples, 0 mismatches ({elapsed:?})"
    );
}

// ==================== criterion 5 ====================

#[test]
fn criterion_5_product_identities_sweep() {
    let start = Instant::now();
    let mut checked = 0u64;
    for &(p, q, s, t, l, g) in &TUPLES {
        let params = validate_parameters(p, q, s, t, l, g).unwrap();
        let system = enumerate_cosets(&params);
        let products = verify_products(&system);
        assert_eq!(
            products.mismatch_count, 0,
            "n={}: {:?}",
            params.n, products.samples
        );
        let collapse = verify_star_collapse(&system);
        assert_eq!(
            collapse.mismatch_count, 0,
            "n={}: {:?}",
            params.n, collapse.samples
        );
        checked += products.checked + collapse.checked;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "budget exceeded: {elapsed:?}");
    println!(
        "criterion 5: PASS — every χ-product expands over F_l with the predicted coefficients \
         ({checked} ordered pairs incl. star-collapse equalities, 4 tuples) ({elapsed:?})"
    );
}

// ==================== criterion 6 ====================

#[test]
fn criterion_6_idempotent_algebra() {
    let start = Instant::now();
    for &(p, q, s, t, l, g) in &TUPLES {
        let fx = fixture(p, q, s, t, l, g);
        let report = verify_idempotent_family(&fx.field, &fx.powers, &fx.system, &fx.gauss);
        assert_eq!(report.square_failures, 0, "n={}", fx.params.n);
        assert_eq!(report.spectrum_failures, 0, "n={}", fx.params.n);
        assert!(report.sum_is_one, "n={}", fx.params.n);
        assert!(report.orthogonal, "n={}", fx.params.n);
        assert_eq!(report.closed_oracle_mismatches, 0, "n={}", fx.params.n);
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 6: PASS — e²=e, Σθ=1, pairwise products vanish, and θ_γ(α^u)=[u∈C_γ] for all \
         u<n on all 4 tuples ({elapsed:?})"
    );
}

// ==================== criterion 7 ====================

#[test]
fn criterion_7_code_distances() {
    let start = Instant::now();
    let budget = 1u128 << 24;

    // Exhaustive minimum distances of the two smallest minimal codes with a
    // level-(s, 0) label: expected distance 2·p^s·q^0.
    let fx55 = fixture(11, 5, 1, 1, 3, None);
    let lab = label(&fx55, 1, 0, false);
    let code = minimal_code(&fx55.field, &fx55.powers, &fx55.system, &lab, budget);
    assert_eq!(code.dimension, 4);
    assert_eq!((3u128.pow(4)) - 1, 80);
    assert_eq!(code.distance.kind, DistanceKind::Exact);
    assert_eq!(code.distance.value, 22);

    let fx35 = fixture(7, 5, 1, 1, 2, Some(3));
    let lab = label(&fx35, 1, 0, false);
    let code = minimal_code(&fx35.field, &fx35.powers, &fx35.system, &lab, budget);
    assert_eq!(code.dimension, 4);
    assert_eq!((2u128.pow(4)) - 1, 15);
    assert_eq!(code.distance.kind, DistanceKind::Exact);
    assert_eq!(code.distance.value, 14);

    // Odd-like minimum weight of every flavor-selection code on (7,5,1,1,2):
    // dimension 20, full 2^20 message enumeration, square-root bound ⌈√7⌉ = 3.
    for matrix in SelectionMatrix::enumerate_all(1, 2) {
        let code = duadic_code(&fx35.field, &fx35.gauss, &fx35.system, &matrix, None).unwrap();
        assert_eq!(code.dimension, 20);
        let min_odd = odd_like_min_weight(&code, &fx35.params, budget).unwrap();
        assert!(
            min_odd >= 3,
            "selection {:?}: odd-like minimum {min_odd} < 3",
            matrix
        );
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "budget exceeded: {elapsed:?}");
    println!(
        "criterion 7: PASS — exhaustive distances 22 (80 codewords) and 14 (15 codewords); \
         odd-like minimum ≥ 3 for all four selection codes via full 2^20 enumeration ({elapsed:?})"
    );
}

// ==================== criterion 8 ====================

#[test]
fn criterion_8_structural_counts() {
    let start = Instant::now();
    for &(p, q, s, t, l, g) in &TUPLES {
        let params = validate_parameters(p, q, s, t, l, g).unwrap();
        let system = enumerate_cosets(&params);
        let report = verify_structure(&system);
        assert_eq!(
            report.found_cosets,
            ((2 * s + 1) * (t + 1)) as usize,
            "n={}",
            params.n
        );
        assert!(report.partition_ok, "n={}", params.n);
        assert!(report.sizes_ok, "n={}", params.n);
        assert!(report.additive_ok, "n={}", params.n);
        assert!(report.classes_ok, "n={}", params.n);
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 8: PASS — (2s+1)(t+1) cosets partitioning Z_n, additive = multiplicative \
         forms, and C_1 = D_0, C_g = D_1 on all 4 tuples ({elapsed:?})"
    );
}

//! Acceptance suite: one test per criterion, every comparison exact.
//!
//! Each test prints a single pass/fail line (visible with `--nocapture`);
//! the long whole-configuration scan is behind `--ignored` (see
//! `criterion_03_extended_global_design_strength`).

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use spherecode::bounds::{
    binary_code_lp_bound, check_spherical_certificate, constant_weight_bound,
    find_spherical_certificate, parse_polynomial,
};
use spherecode::codes::{design_strength_from_histogram, solve_distribution, DerivedCode};
use spherecode::exact::{rat, rat_i, Rational};
use spherecode::leech::LeechSet;
use spherecode::uniqueness::{
    run_uniqueness_with_leech, CertificateReport, PipelineKind, PipelineOptions,
};

fn leech() -> &'static LeechSet {
    static SET: OnceLock<LeechSet> = OnceLock::new();
    SET.get_or_init(LeechSet::build)
}

struct Chain {
    c4600: DerivedCode,
    c891: DerivedCode,
    c336: DerivedCode,
    c170: DerivedCode,
}

fn chain() -> &'static Chain {
    static CHAIN: OnceLock<Chain> = OnceLock::new();
    CHAIN.get_or_init(|| {
        let root = DerivedCode::root(leech().vectors().to_vec());
        let base0 = root.members()[0];
        let c4600 = root.derive_kissing(&base0).unwrap();
        let base1 = c4600.members()[0];
        let c891 = c4600.derive_kissing(&base1).unwrap();
        let base2 = c891.members()[0];
        let c336 = c891.derive_kissing(&base2).unwrap();
        let base3 = c336.members()[0];
        let c170 = c336.derive_kissing(&base3).unwrap();
        Chain {
            c4600,
            c891,
            c336,
            c170,
        }
    })
}

fn report_891() -> &'static CertificateReport {
    static REPORT: OnceLock<CertificateReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        run_uniqueness_with_leech(leech(), PipelineKind::Code891, PipelineOptions::default())
    })
}

fn report_4600() -> &'static CertificateReport {
    static REPORT: OnceLock<CertificateReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        run_uniqueness_with_leech(leech(), PipelineKind::Code4600, PipelineOptions::default())
    })
}

fn check_passed(report: &CertificateReport, name: &str) -> bool {
    report
        .checks
        .iter()
        .find(|c| c.name == name)
        .is_some_and(|c| c.pass)
}

#[test]
fn criterion_01_leech_construction() {
    // built fresh (not the shared instance) so the construction cost is
    // inside the measured window
    let start = Instant::now();
    let set = &LeechSet::build();
    assert_eq!(set.len(), 196_560, "minimal vector count");
    assert_eq!(set.shape_counts(), (1104, 97_152, 98_304), "shape classes");
    assert!(
        set.vectors().iter().all(|v| v.norm_int() == 32),
        "all norms 4"
    );
    // pairwise inner-product closure in {0, ±1, ±2, ±4}: per-vector coset
    // membership plus the exhaustive norm-16 shape enumeration rule out
    // products ±3 for every pair; Cauchy-Schwarz with distinct sorted
    // vectors rules out |product| ≥ 4 off the diagonal.
    assert!(
        set.congruence_certified(),
        "coset membership of every vector"
    );
    assert!(set.no_norm2_vectors_certified(), "no norm-2 vector exists");
    let z = &set.vectors()[0];
    let hist = set.histogram_with(z);
    let support: Vec<i32> = hist.keys().copied().collect();
    assert_eq!(support, vec![-32, -16, -8, 0, 8, 16, 32]);
    // the minimal vectors generate a lattice of determinant 8^12 in the
    // integer coordinates, i.e. they generate the full Leech lattice
    let hnf = spherecode::uniqueness::leech_lattice_hnf(set);
    assert_eq!(hnf.det_abs().unwrap().to_string(), "68719476736"); // 8^12
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 01 leech-construction: PASS ({elapsed:.2}s)");
    assert!(
        elapsed < 10.0,
        "runtime budget 10 s exceeded: {elapsed:.2}s"
    );
}

#[test]
fn criterion_02_kissing_chain() {
    let start = Instant::now();
    let ch = chain();
    assert_eq!(ch.c4600.len(), 4600);
    assert_eq!(ch.c891.len(), 891);
    assert_eq!(ch.c336.len(), 336);
    assert_eq!(ch.c170.len(), 170);
    assert_eq!(ch.c4600.max_inner(), Some(rat(1, 3)));
    assert_eq!(ch.c891.max_inner(), Some(rat(1, 4)));
    assert_eq!(ch.c336.max_inner(), Some(rat(1, 5)));
    assert_eq!(ch.c170.max_inner(), Some(rat(1, 6)));
    let spectrum: Vec<Rational> = ch.c891.spectrum().keys().cloned().collect();
    assert_eq!(spectrum, vec![rat(-1, 2), rat(-1, 8), rat(1, 4)]);
    // 336-point support via two routes: the projection map applied to the
    // 891 support, and direct computation
    let mapped: Vec<Rational> = spectrum
        .iter()
        .map(|s| (s - rat(1, 16)) / rat(15, 16))
        .collect();
    assert_eq!(mapped, vec![rat(-3, 5), rat(-1, 5), rat(1, 5)]);
    let spectrum336: Vec<Rational> = ch.c336.spectrum().keys().cloned().collect();
    assert_eq!(spectrum336, mapped);
    let orbits = ch.c170.orbit_split_by_histogram();
    let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![160, 10], "170-point histogram split");
    // the 891-point code is histogram-homogeneous: a single class
    assert_eq!(ch.c891.orbit_split_by_histogram().len(), 1);
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 02 kissing-chain: PASS ({elapsed:.2}s)");
    assert!(
        elapsed < 60.0,
        "runtime budget 1 min exceeded: {elapsed:.2}s"
    );
}

#[test]
fn criterion_03_design_strengths() {
    let ch = chain();
    let start = Instant::now();
    assert_eq!(
        ch.c891.design_strength(6),
        5,
        "891: strength 5, k=6 nonzero"
    );
    let t891 = start.elapsed().as_secs_f64();
    assert!(t891 < 5.0, "891 strength budget 5 s exceeded: {t891:.2}s");
    let start = Instant::now();
    assert_eq!(
        ch.c4600.design_strength(8),
        7,
        "4600: strength 7, k=8 nonzero"
    );
    let t4600 = start.elapsed().as_secs_f64();
    println!("criterion 03 design-strengths: PASS ({t891:.2}s + {t4600:.2}s)");
    assert!(
        t4600 < 180.0,
        "4600 strength budget 3 min exceeded: {t4600:.2}s"
    );
}

/// Extended part of criterion 3: the full 196560-point configuration is an
/// 11-design, via one global pairwise histogram pass. Run with
/// `cargo test -p spherecode --test acceptance -- --ignored`.
#[test]
#[ignore = "whole-configuration pairwise scan; minutes of runtime"]
fn criterion_03_extended_global_design_strength() {
    let start = Instant::now();
    let set = leech();
    let hist = set.global_pair_histogram();
    // the histogram doubles as the full pairwise closure check
    assert!(
        hist.keys().all(|d| matches!(d.abs(), 0 | 8 | 16 | 32)),
        "pairwise products outside {{0, ±1, ±2, ±4}}"
    );
    let strength =
        design_strength_from_histogram(24, set.len() as u64, &hist, 12, |d| rat(d as i64, 32));
    assert_eq!(
        strength, 11,
        "whole configuration is an 11-design, k=12 nonzero"
    );
    // the same checks wired through a pipeline's extended flag
    let report = run_uniqueness_with_leech(
        set,
        PipelineKind::Code4600,
        PipelineOptions {
            frame_seed: 0,
            extended: true,
        },
    );
    assert!(check_passed(&report, "global-closure"));
    assert!(check_passed(&report, "global-design-strength"));
    assert!(report.pass);
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 03 extended global-design-strength: PASS ({elapsed:.2}s)");
    assert!(elapsed < 1800.0, "runtime budget 30 min exceeded");
}

#[test]
fn criterion_04_intersection_table() {
    let start = Instant::now();
    let table = chain()
        .c891
        .intersection_numbers()
        .expect("scheme property");
    let r = |n: i64, d: i64| rat(n, d);
    let expected: [((Rational, Rational, Rational), u64); 21] = [
        ((r(1, 1), r(1, 4), r(1, 4)), 336),
        ((r(1, 1), r(-1, 8), r(-1, 8)), 512),
        ((r(1, 1), r(-1, 2), r(-1, 2)), 42),
        ((r(1, 4), r(1, 4), r(1, 4)), 170),
        ((r(1, 4), r(-1, 8), r(-1, 8)), 320),
        ((r(1, 4), r(-1, 2), r(-1, 2)), 5),
        ((r(1, 4), r(1, 4), r(-1, 8)), 160),
        ((r(1, 4), r(1, 4), r(-1, 2)), 5),
        ((r(1, 4), r(-1, 8), r(-1, 2)), 32),
        ((r(-1, 8), r(1, 4), r(1, 4)), 105),
        ((r(-1, 8), r(-1, 8), r(-1, 8)), 280),
        ((r(-1, 8), r(-1, 2), r(-1, 2)), 0),
        ((r(-1, 8), r(1, 4), r(-1, 8)), 210),
        ((r(-1, 8), r(1, 4), r(-1, 2)), 21),
        ((r(-1, 8), r(-1, 8), r(-1, 2)), 21),
        ((r(-1, 2), r(1, 4), r(1, 4)), 40),
        ((r(-1, 2), r(-1, 8), r(-1, 8)), 256),
        ((r(-1, 2), r(-1, 2), r(-1, 2)), 1),
        ((r(-1, 2), r(1, 4), r(-1, 8)), 256),
        ((r(-1, 2), r(1, 4), r(-1, 2)), 40),
        ((r(-1, 2), r(-1, 8), r(-1, 2)), 0),
    ];
    for ((g, a, b), value) in expected {
        assert_eq!(
            table.get(&g, &a, &b),
            Some(value),
            "P_{g}({a},{b}) must be {value}"
        );
        assert_eq!(table.get(&g, &b, &a), Some(value), "symmetry");
    }
    assert!(table.verify_invariants(), "table invariants");
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 04 intersection-table: PASS ({elapsed:.2}s)");
    assert!(
        elapsed < 600.0,
        "runtime budget 10 min exceeded: {elapsed:.2}s"
    );
}

#[test]
fn criterion_05_lemma_distribution() {
    let alphas = vec![rat_i(0), rat(3, 8), rat(-3, 8), rat(3, 4), rat(-3, 4)];
    let d = solve_distribution(891, 22, &rat(3, 4), &alphas, 5).unwrap();
    assert_eq!(
        d.counts,
        vec![rat_i(657), rat_i(120), rat_i(120), rat_i(-3), rat_i(-3)],
        "exact distribution solve"
    );
    println!("criterion 05 lemma-distribution: PASS");
}

#[test]
fn criterion_06_lp_certificates() {
    let start = Instant::now();
    let aux = parse_polynomial("(x+1/2)^2*(x+1/8)^2*(x-1/4)").unwrap();
    let cert = check_spherical_certificate(&aux, 22, &rat(1, 4)).unwrap();
    assert_eq!(cert.bound, rat_i(891), "sharp bound in dimension 22");
    let nodes = vec![rat_i(-1), rat(-1, 3), rat_i(0), rat(1, 3)];
    let found = find_spherical_certificate(23, &rat(1, 3), 7, &nodes).unwrap();
    assert_eq!(found.bound, rat_i(4600), "sharp bound in dimension 23");
    assert!(found.valid);
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 06 lp-certificates: PASS ({elapsed:.2}s)");
    assert!(
        elapsed < 10.0,
        "runtime budget 10 s exceeded: {elapsed:.2}s"
    );
}

#[test]
fn criterion_07_binary_bounds() {
    let start = Instant::now();
    assert_eq!(constant_weight_bound(21, 8, 5).unwrap(), 21.into());
    assert_eq!(constant_weight_bound(22, 8, 6).unwrap(), 77.into());
    let b512 = binary_code_lp_bound(21, &(8..=16).collect::<Vec<_>>()).unwrap();
    assert_eq!(b512.bound, 512.into());
    let b1024 = binary_code_lp_bound(22, &(8..=22).collect::<Vec<_>>()).unwrap();
    assert_eq!(b1024.bound, 1024.into());
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 07 binary-bounds: PASS ({elapsed:.2}s)");
    assert!(
        elapsed < 30.0,
        "runtime budget 30 s exceeded: {elapsed:.2}s"
    );
}

#[test]
fn criterion_08_uniqueness_891() {
    let start = Instant::now();
    let report = report_891();
    for name in [
        "member-count",
        "spectrum-support",
        "design-strength",
        "norm2-distribution",
        "intersection-numbers",
        "lp-bound",
        "lattice-even-integral",
        "inner-product-closure",
        "frame-pool-margin",
        "frame-gram",
        "frame-normalization",
        "case-counts",
        "steiner-system",
        "support-code-rank",
        "sign-parity",
        "span-count",
        "counting-identity",
    ] {
        assert!(
            check_passed(report, name),
            "check `{name}` failed:\n{}",
            report.render_text()
        );
    }
    assert!(report.pass, "overall report:\n{}", report.render_text());
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 08 uniqueness-891: PASS ({elapsed:.2}s)");
    assert!(
        elapsed < 300.0,
        "runtime budget 5 min exceeded: {elapsed:.2}s"
    );
}

#[test]
fn criterion_09_uniqueness_4600() {
    let start = Instant::now();
    let report = report_4600();
    for name in [
        "member-count",
        "spectrum-support",
        "design-strength",
        "lp-bound",
        "lattice-even-integral",
        "inner-product-closure",
        "frame-pool-margin",
        "case-counts",
        "case-total",
        "steiner-system",
        "support-code-rank",
        "sign-parity",
        "span-count",
        "case-v-subtraction",
        "lattice-index",
        "odd-product-witness",
    ] {
        assert!(
            check_passed(report, name),
            "check `{name}` failed:\n{}",
            report.render_text()
        );
    }
    assert!(report.pass, "overall report:\n{}", report.render_text());
    assert!(
        report.annotations.iter().any(|a| a.contains("44")),
        "case I/II count annotation present"
    );
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 09 uniqueness-4600: PASS ({elapsed:.2}s)");
    assert!(
        elapsed < 300.0,
        "runtime budget 5 min exceeded: {elapsed:.2}s"
    );
}

#[test]
fn criterion_10_determinism() {
    let start = Instant::now();
    let base_891 = report_891().to_json_deterministic();
    let base_4600 = report_4600().to_json_deterministic();
    // a different frame seed must yield the identical report
    for (kind, base) in [
        (PipelineKind::Code891, &base_891),
        (PipelineKind::Code4600, &base_4600),
    ] {
        let seeded = run_uniqueness_with_leech(
            leech(),
            kind,
            PipelineOptions {
                frame_seed: 17,
                extended: false,
            },
        );
        let mut json = seeded.to_json_deterministic();
        // the seed itself is part of the metadata; normalize it before
        // comparing the mathematical content
        json = json.replace("\"frame_seed\": 17", "\"frame_seed\": 0");
        assert_eq!(&json, base, "frame seed changed the report content");
    }
    // a different thread count must yield the identical report
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let single = pool.install(|| {
        run_uniqueness_with_leech(leech(), PipelineKind::Code891, PipelineOptions::default())
    });
    assert_eq!(
        single.to_json_deterministic(),
        base_891,
        "thread count changed the report content"
    );
    let elapsed = start.elapsed().as_secs_f64();
    println!("criterion 10 determinism: PASS ({elapsed:.2}s)");
}

#[test]
fn criterion_10_histograms_are_shared_state_consistent() {
    // the chain derives from the same sorted minimal-vector order used by
    // the pipelines; both views must agree on the 891 member set
    let ch = chain();
    let (_, members) =
        spherecode::uniqueness::chain_anchors_members(leech(), PipelineKind::Code891);
    let mut from_chain = ch.c891.members().to_vec();
    from_chain.sort_unstable();
    let mut from_pipeline = members;
    from_pipeline.sort_unstable();
    assert_eq!(from_chain, from_pipeline);
    // global one-vector histogram agrees with the documented counts
    let hist = leech().histogram_with(&leech().vectors()[0]);
    let expected: BTreeMap<i32, u64> = [
        (-32, 1),
        (-16, 4600),
        (-8, 47_104),
        (0, 93_150),
        (8, 47_104),
        (16, 4600),
        (32, 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(hist, expected);
}

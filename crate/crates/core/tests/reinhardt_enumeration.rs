//! The meet-in-the-middle signature enumeration, pinned against an
//! independent exhaustive route and against itself across validity modes.
//!
//! The oracle below walks every composition outright (feasible through
//! n = 16), so it shares no indexing or pruning logic with the library; for
//! larger n the two validity modes — floating-point closure defect and
//! exact cyclotomic divisibility — are required to agree signature by
//! signature and as whole enumerations.

use std::collections::BTreeSet;

use ngon_core::optimizer::Rng;
use ngon_core::reinhardt::{
    census, closure_defect, enumerate, is_valid, reinhardt_polygon, Composition, SymmetryKind,
    ValidityMode,
};

/// Every valid signature of `n` up to rotation/reflection, by brute force:
/// compositions are cut-point subsets of {1,…,n−1}, no index structure.
fn oracle_classes(n: usize, mode: ValidityMode) -> BTreeSet<Vec<u32>> {
    assert!(n <= 20, "oracle is exponential in n");
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << (n - 1) {
        if mask.count_ones() % 2 != 0 || mask.count_ones() < 2 {
            continue; // need an odd part count of at least 3
        }
        let mut parts = Vec::new();
        let mut prev = 0u32;
        for cut in 1..n as u32 {
            if mask & (1 << (cut - 1)) != 0 {
                parts.push(cut - prev);
                prev = cut;
            }
        }
        parts.push(n as u32 - prev);
        let c = Composition::new(n, parts).unwrap();
        if is_valid(&c, mode) {
            out.insert(c.canonical().parts().to_vec());
        }
    }
    out
}

fn enumerated_classes(n: usize, mode: ValidityMode) -> BTreeSet<Vec<u32>> {
    enumerate(n, mode)
        .unwrap()
        .into_iter()
        .map(|(c, _)| c.parts().to_vec())
        .collect()
}

#[test]
fn enumeration_matches_the_exhaustive_oracle_through_n16() {
    for n in 3..=16 {
        let numeric = ValidityMode::default();
        assert_eq!(
            enumerated_classes(n, numeric),
            oracle_classes(n, numeric),
            "numeric enumeration diverges from brute force at n={n}"
        );
        assert_eq!(
            enumerated_classes(n, ValidityMode::Exact),
            oracle_classes(n, ValidityMode::Exact),
            "exact enumeration diverges from brute force at n={n}"
        );
    }
}

#[test]
fn numeric_and_exact_enumerations_agree_for_larger_n() {
    for n in [20usize, 24, 27, 30, 32, 36] {
        let numeric = enumerated_classes(n, ValidityMode::default());
        let exact = enumerated_classes(n, ValidityMode::Exact);
        assert_eq!(numeric, exact, "mode disagreement at n={n}");
    }
}

#[test]
fn numeric_and_exact_validity_agree_on_random_compositions() {
    let root = Rng::seed_from(0xC0FFEE);
    for (i, n) in (19usize..=40).enumerate() {
        let mut rng = root.substream(i as u64);
        for _ in 0..400 {
            // A random composition: an odd-sized subset of cut points.
            let mut cuts: Vec<u32> = (1..n as u32).collect();
            for k in (1..cuts.len()).rev() {
                let j = (rng.next_u64() % (k as u64 + 1)) as usize;
                cuts.swap(k, j);
            }
            let m = 3 + 2 * ((rng.next_u64() % 7) as usize); // odd, 3..=15
            if m > n {
                continue;
            }
            let mut chosen: Vec<u32> = cuts[..m - 1].to_vec();
            chosen.sort_unstable();
            let mut parts = Vec::with_capacity(m);
            let mut prev = 0u32;
            for c in chosen {
                parts.push(c - prev);
                prev = c;
            }
            parts.push(n as u32 - prev);
            let c = Composition::new(n, parts).unwrap();
            let numeric = is_valid(&c, ValidityMode::default());
            let exact = is_valid(&c, ValidityMode::Exact);
            assert_eq!(
                numeric,
                exact,
                "modes disagree on {:?} (defect {:.3e})",
                c.parts(),
                closure_defect(&c)
            );
        }
    }
}

#[test]
fn thirty_gon_census_has_sporadic_classes() {
    let classes = enumerate(30, ValidityMode::Exact).unwrap();
    let report = census(30, &classes);
    assert!(report.sporadic >= 1, "n=30 should have sporadic signatures");
    assert!(report.periodic >= 1);
    assert!(classes
        .iter()
        .any(|(_, class)| class.kind == SymmetryKind::Periodic(15)));
}

#[test]
fn every_enumerated_signature_constructs_to_the_extremal_metrics() {
    use std::f64::consts::PI;
    for n in [9usize, 12, 15] {
        let nf = n as f64;
        let p_want = 2.0 * nf * (PI / (2.0 * nf)).sin();
        let w_want = (PI / (2.0 * nf)).cos();
        for (c, _) in enumerate(n, ValidityMode::Exact).unwrap() {
            let built = reinhardt_polygon(&c, 1.0).unwrap();
            let m = built.polygon.metrics();
            assert!(
                (m.perimeter - p_want).abs() <= 1e-9,
                "perimeter off for {:?}",
                c.parts()
            );
            assert!((m.width - w_want).abs() <= 1e-9, "width off for {:?}", c.parts());
            assert!((m.diameter - 1.0).abs() <= 1e-9, "diameter off for {:?}", c.parts());
        }
    }
}

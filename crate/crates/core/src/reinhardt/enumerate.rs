//! Exhaustive enumeration of valid signatures for a given `n`.
//!
//! A composition `(c₁,…,c_m)` of `n` corresponds, through its partial sums
//! `s_k`, to a subset `S ⊆ {1,…,n}` with `n ∈ S` and odd size, and validity
//! says the alternating-by-rank sum `Σ (−1)^k ζ^{s_k}` of `2n`-th roots of
//! unity vanishes. That form splits over `S = A ∪ B` with `A ⊆ {1..⌊n/2⌋}`
//! and `B` the rest, so the search meets in the middle: all left subsets are
//! indexed by their partial sum (and size parity), and each right subset
//! does a single lookup for the value that would cancel it. This brings the
//! cost from `2^{n-2}` compositions down to roughly `2^{n/2}` — still
//! exponential, but comfortable through `n ≈ 40`.
//!
//! Numeric mode keys the lookup on a coarse grid over the complex sum
//! (probing neighbor cells, so tolerance-close matches cannot fall through a
//! cell boundary); exact mode keys it on the residue of the sum modulo the
//! `2n`-th cyclotomic polynomial. Either way every surviving candidate is
//! re-checked with [`is_valid`] before it is reported, so the index is only
//! ever a filter, never the authority.

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;
use std::hash::{Hash, Hasher};

use super::cyclotomic::{cyclotomic, monomial_residues};
use super::{
    canonical_word, classify, is_valid, Composition, ReinhardtError, SymmetryClass, SymmetryKind,
    ValidityMode,
};

/// Largest `n` accepted without an explicit override.
pub const DEFAULT_CAP: usize = 100;

/// All valid signatures of `n` up to rotation and reflection, each with its
/// symmetry class, in lexicographic order of the canonical parts word.
pub fn enumerate(
    n: usize,
    mode: ValidityMode,
) -> Result<Vec<(Composition, SymmetryClass)>, ReinhardtError> {
    enumerate_with_cap(n, mode, DEFAULT_CAP)
}

/// [`enumerate`] with an explicit cap instead of [`DEFAULT_CAP`].
pub fn enumerate_with_cap(
    n: usize,
    mode: ValidityMode,
    cap: usize,
) -> Result<Vec<(Composition, SymmetryClass)>, ReinhardtError> {
    if n > cap {
        return Err(ReinhardtError::CapExceeded { n, cap });
    }
    assert!(n >= 3, "enumeration needs n >= 3");
    assert!(n <= 127, "subset masks are 128 bits");

    let candidates = match mode {
        ValidityMode::Numeric { tol } => candidates_numeric(n, tol),
        ValidityMode::Exact => candidates_exact(n),
    };

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out: Vec<(Composition, SymmetryClass)> = Vec::new();
    for mask in candidates {
        let parts = parts_from_mask(n, mask);
        if parts.len() < 3 {
            continue;
        }
        let c = Composition::new(n, parts).expect("subset reconstruction is a composition");
        if !is_valid(&c, mode) {
            continue;
        }
        let canon = canonical_word(c.parts());
        if seen.insert(canon.clone()) {
            let canonical = Composition::new(n, canon).expect("canonical word is a composition");
            let class = classify(&canonical)?;
            out.push((canonical, class));
        }
    }
    out.sort_by(|a, b| a.0.parts().cmp(b.0.parts()));
    Ok(out)
}

/// Aggregate counts of an enumeration result.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct Census {
    pub n: usize,
    pub periodic: usize,
    pub sporadic: usize,
}

pub fn census(n: usize, classes: &[(Composition, SymmetryClass)]) -> Census {
    let sporadic = classes
        .iter()
        .filter(|(_, class)| class.kind == SymmetryKind::Sporadic)
        .count();
    Census {
        n,
        periodic: classes.len() - sporadic,
        sporadic,
    }
}

/// Subset bitmask (bit `e-1` = element `e`) back to first differences.
fn parts_from_mask(n: usize, mask: u128) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut prev = 0u32;
    for e in 1..=n as u32 {
        if mask & (1u128 << (e - 1)) != 0 {
            parts.push(e - prev);
            prev = e;
        }
    }
    parts
}

/// Quantization cell for the numeric meet-in-the-middle index. Much coarser
/// than any closure tolerance in use, much finer than the typical gap
/// between distinct root-of-unity sums.
const CELL: f64 = 1e-6;

fn candidates_numeric(n: usize, tol: f64) -> Vec<u128> {
    assert!(
        tol < CELL,
        "closure tolerance {tol} must stay below the index cell {CELL}"
    );
    let h = n / 2;
    let unit: Vec<(f64, f64)> = (0..=n)
        .map(|e| {
            let a = PI * e as f64 / n as f64;
            (a.cos(), a.sin())
        })
        .collect();
    let quant = |x: f64| (x / CELL).round() as i64;

    // Left: every subset of {1..h}, keyed by size parity and quantized sum.
    let mut left: HashMap<(u8, i64, i64), Vec<u128>> = HashMap::new();
    let mut stack = vec![(1usize, 0u32, 0.0f64, 0.0f64, 0u128)];
    while let Some((e, count, sx, sy, mask)) = stack.pop() {
        if e > h {
            left.entry((count as u8 & 1, quant(sx), quant(sy)))
                .or_default()
                .push(mask);
            continue;
        }
        stack.push((e + 1, count, sx, sy, mask));
        let sign = if count % 2 == 0 { 1.0 } else { -1.0 };
        stack.push((
            e + 1,
            count + 1,
            sx + sign * unit[e].0,
            sy + sign * unit[e].1,
            mask | (1u128 << (e - 1)),
        ));
    }

    // Right: every subset of {h+1..n} containing n; probe for left sums
    // that cancel it. The element n is forced when the walk reaches it.
    let mut found = Vec::new();
    let mut stack = vec![(h + 1, 0u32, 0.0f64, 0.0f64, 0u128)];
    while let Some((e, count, sx, sy, mask)) = stack.pop() {
        if e <= n {
            if e < n {
                stack.push((e + 1, count, sx, sy, mask));
            }
            let sign = if count % 2 == 0 { 1.0 } else { -1.0 };
            stack.push((
                e + 1,
                count + 1,
                sx + sign * unit[e].0,
                sy + sign * unit[e].1,
                mask | (1u128 << (e - 1)),
            ));
            continue;
        }
        // Validity: f(A) + (−1)^{|A|} f(B) = 0 with |A| + |B| odd.
        let parity_a = ((count + 1) % 2) as u8;
        let (tx, ty) = if parity_a == 1 { (sx, sy) } else { (-sx, -sy) };
        let (qx, qy) = (quant(tx), quant(ty));
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(masks) = left.get(&(parity_a, qx + dx, qy + dy)) {
                    for &a in masks {
                        found.push(a | mask);
                    }
                }
            }
        }
    }
    found
}

fn hash_slice(v: &[i64]) -> u64 {
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    v.hash(&mut hasher);
    hasher.finish()
}

fn candidates_exact(n: usize) -> Vec<u128> {
    let two_n = 2 * n;
    let modulus = cyclotomic(two_n);
    let deg = modulus.degree().expect("cyclotomic polynomials are nonzero");
    let residues = monomial_residues(&modulus, two_n);
    let h = n / 2;

    let add = |sum: &mut Vec<i64>, e: usize, sign: i64| {
        for (s, r) in sum.iter_mut().zip(&residues[e]) {
            *s += sign * r;
        }
    };

    let mut left: HashMap<(u8, u64), Vec<u128>> = HashMap::new();
    let mut stack = vec![(1usize, 0u32, vec![0i64; deg], 0u128)];
    while let Some((e, count, sum, mask)) = stack.pop() {
        if e > h {
            left.entry((count as u8 & 1, hash_slice(&sum)))
                .or_default()
                .push(mask);
            continue;
        }
        stack.push((e + 1, count, sum.clone(), mask));
        let mut with = sum;
        add(&mut with, e, if count % 2 == 0 { 1 } else { -1 });
        stack.push((e + 1, count + 1, with, mask | (1u128 << (e - 1))));
    }

    let mut found = Vec::new();
    let mut negated = vec![0i64; deg];
    let mut stack = vec![(h + 1, 0u32, vec![0i64; deg], 0u128)];
    while let Some((e, count, sum, mask)) = stack.pop() {
        if e <= n {
            if e < n {
                stack.push((e + 1, count, sum.clone(), mask));
            }
            let mut with = sum;
            add(&mut with, e, if count % 2 == 0 { 1 } else { -1 });
            stack.push((e + 1, count + 1, with, mask | (1u128 << (e - 1))));
            continue;
        }
        let parity_a = ((count + 1) % 2) as u8;
        let key = if parity_a == 1 {
            hash_slice(&sum)
        } else {
            for (t, s) in negated.iter_mut().zip(&sum) {
                *t = -s;
            }
            hash_slice(&negated)
        };
        if let Some(masks) = left.get(&(parity_a, key)) {
            for &a in masks {
                found.push(a | mask);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_signature_is_the_only_one_for_n3() {
        for mode in [ValidityMode::default(), ValidityMode::Exact] {
            let list = enumerate(3, mode).unwrap();
            assert_eq!(list.len(), 1);
            assert_eq!(list[0].0.parts(), &[1, 1, 1]);
            assert_eq!(list[0].1.kind, SymmetryKind::Periodic(3));
        }
    }

    #[test]
    fn powers_of_two_are_empty() {
        for n in [4usize, 8, 16] {
            for mode in [ValidityMode::default(), ValidityMode::Exact] {
                assert!(enumerate(n, mode).unwrap().is_empty(), "n={n}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate(101, ValidityMode::default()),
            Err(ReinhardtError::CapExceeded { n: 101, cap: 100 })
        ));
        assert!(enumerate_with_cap(6, ValidityMode::default(), 5).is_err());
    }

    #[test]
    fn regular_signatures_appear_for_every_odd_divisor() {
        for n in [6usize, 9, 12, 15, 30] {
            let list = enumerate(n, ValidityMode::default()).unwrap();
            let canon: HashSet<Vec<u32>> =
                list.iter().map(|(c, _)| c.parts().to_vec()).collect();
            for m in (3..=n).step_by(2).filter(|m| n % m == 0) {
                let want = vec![(n / m) as u32; m];
                assert!(canon.contains(&want), "n={n}: missing {want:?}");
            }
        }
    }

    #[test]
    fn census_counts_split_by_kind() {
        let list = enumerate(30, ValidityMode::default()).unwrap();
        let c = census(30, &list);
        assert_eq!(c.periodic + c.sporadic, list.len());
        assert!(c.sporadic >= 1, "n=30 has sporadic signatures");
        assert!(c.periodic >= 3, "n=30 has the three all-equal signatures");
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let list = enumerate(15, ValidityMode::default()).unwrap();
        for pair in list.windows(2) {
            assert!(pair[0].0.parts() < pair[1].0.parts());
        }
        for (c, _) in &list {
            assert_eq!(c.parts(), canonical_word(c.parts()).as_slice());
        }
    }
}

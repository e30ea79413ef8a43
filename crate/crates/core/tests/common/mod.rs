//! Brute-force oracles, independent of the library's representations.
//!
//! Everything here works on raw boolean windows or explicit integer sets
//! so that the main implementation can be checked against a second,
//! structurally different computation.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Additive closure of a generator set as a membership window `[0, bound]`.
pub fn closure_window(gens: &[i64], bound: usize) -> Vec<bool> {
    let mut members = vec![false; bound + 1];
    members[0] = true;
    for n in 1..=bound {
        members[n] = gens
            .iter()
            .any(|&g| n as i64 >= g && members[n - g as usize]);
    }
    members
}

/// Number of numerical semigroups of the given genus, by checking every
/// gap-set candidate inside `[1, 2*genus]` for additive closure.
pub fn semigroup_count_by_gap_sets(genus: usize) -> usize {
    if genus == 0 {
        return 1;
    }
    let window = 2 * genus;
    let positions: Vec<usize> = (1..=window).collect();
    let mut count = 0usize;
    let total = 1u64 << positions.len();
    for mask in 0..total {
        if (mask.count_ones() as usize) != genus {
            continue;
        }
        let mut gap = vec![false; window + 1];
        for (bit, &p) in positions.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                gap[p] = true;
            }
        }
        let member =
            |n: i64| -> bool { n >= 0 && (n as usize > window || !gap[n as usize]) };
        let closed = (1..=window as i64).all(|s| {
            if !gap[s as usize] {
                return true;
            }
            // a gap must not be the sum of two nonzero members
            (1..s).all(|x| !(member(x) && member(s - x)))
        });
        if closed {
            count += 1;
        }
    }
    count
}

/// Elements of the semigroup generated by `gens` inside `[0, hi]`.
pub fn semigroup_elements(gens: &[i64], hi: i64) -> Vec<i64> {
    closure_window(gens, hi as usize)
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(n, _)| n as i64)
        .collect()
}

/// Value window of the `k`-th power of the maximal ideal inside `[0, hi]`:
/// all sums of `k` generators plus a semigroup element.
pub fn power_window(gens: &[i64], semigroup: &[i64], k: usize, hi: i64) -> BTreeSet<i64> {
    let mut sums: BTreeSet<i64> = semigroup.iter().copied().collect();
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for &s in &sums {
            for &g in gens {
                if s + g <= hi {
                    next.insert(s + g);
                }
            }
        }
        sums = next;
    }
    sums
}

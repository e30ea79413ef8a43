//! Core combinatorics of a numerical semigroup: membership, gaps, Apéry
//! sets, divisor profiles, symmetry, and enumeration by genus.
//!
//! A numerical semigroup `H` is a co-finite subset of the naturals that
//! contains `0` and is closed under addition. Everything here reduces to
//! finite windows of the naturals, so the internal representation is a
//! boolean membership array over `[0, 2c + e + 3)` together with the
//! conductor convention "every integer at least `c` belongs to `H`".
//!
//! Conventions:
//! * the Frobenius number of the full semigroup of naturals is `-1`;
//! * pseudo-Frobenius numbers are the integers `x` outside `H` with
//!   `x + h` in `H` for every nonzero `h` of `H` (for the naturals this
//!   gives `{-1}`, which keeps `frobenius = max(pseudo_frobenius)` true
//!   across the board);
//! * `gap_pairs` of a divisor profile counts positions `x` with both `x`
//!   and `s_i - x` gaps, so a pair of distinct gaps contributes twice and
//!   a doubled gap once. This is the count that satisfies
//!   `nu_i = i - delta(i) + G(i) + 1` (see `DivisorProfile`).

use std::fmt;

use crate::error::{Error, Result};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A numerical semigroup with all derived invariants precomputed.
///
/// Values are immutable after construction; every operation is a pure
/// function, so sharing across threads is safe.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<i64>,
    multiplicity: i64,
    frobenius: i64,
    genus: usize,
    conductor: i64,
    small_elements: Vec<i64>,
    pseudo_frobenius: Vec<i64>,
    /// Membership over `[0, members.len())`; length is at least `2c + e + 3`.
    members: Vec<bool>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.minimal_generators == other.minimal_generators
    }
}
impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.minimal_generators.hash(state);
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.minimal_generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl std::str::FromStr for NumericalSemigroup {
    type Err = Error;

    /// Parses the text form, comma-separated generators such as `4,5,7`.
    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::EmptyInput);
            }
            let v: i64 = tok.parse().map_err(|_| Error::InvalidGenerator(0))?;
            gens.push(v);
        }
        NumericalSemigroup::from_generators(&gens)
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Redundant generators are
    /// dropped, so `minimal_generators` is the unique minimal system.
    ///
    /// ```
    /// use sgring::NumericalSemigroup;
    /// let h = NumericalSemigroup::from_generators(&[4, 5, 7, 9])?;
    /// assert_eq!(h.minimal_generators(), &[4, 5, 7]); // 9 = 4 + 5
    /// assert_eq!(h.genus(), 4);
    /// # Ok::<(), sgring::Error>(())
    /// ```
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &g in gens {
            if g < 1 {
                return Err(Error::InvalidGenerator(g));
            }
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let d = sorted.iter().fold(0i64, |a, &b| gcd(a, b));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        let e = sorted[0];
        let max = *sorted.last().unwrap();
        // The conductor is at most (e - 1)(max - 1), so this window always
        // reaches past 2c + e + 3.
        let bound = ((e - 1) * (max - 1)).max(1);
        let window = (2 * bound + 2 * e + 8) as usize;
        let mut members = vec![false; window];
        members[0] = true;
        for n in 1..window {
            members[n] = sorted.iter().any(|&g| n as i64 >= g && members[n - g as usize]);
        }
        Ok(Self::from_membership(members))
    }

    /// The semigroup of all naturals.
    pub fn naturals() -> Self {
        Self::from_generators(&[1]).unwrap()
    }

    /// Rebuilds every invariant from a membership window. The window must
    /// be complete (true from the conductor on) and reach `2c + e + 3`.
    fn from_membership(mut members: Vec<bool>) -> Self {
        debug_assert!(members[0], "0 must belong to every numerical semigroup");
        let frobenius = members
            .iter()
            .rposition(|&b| !b)
            .map(|i| i as i64)
            .unwrap_or(-1);
        let conductor = frobenius + 1;
        let multiplicity = (1..members.len())
            .find(|&i| members[i])
            .map(|i| i as i64)
            .expect("window too small for the multiplicity");
        let needed = (2 * conductor + multiplicity + 3) as usize;
        assert!(members.len() >= needed, "membership window too small");
        members.truncate(needed.max(multiplicity as usize + 4));

        let genus = (0..conductor as usize).filter(|&n| !members[n]).count();
        let small_elements: Vec<i64> = (0..conductor as usize)
            .filter(|&n| members[n])
            .map(|n| n as i64)
            .collect();

        // A minimal generator is a nonzero element that is not the sum of
        // two nonzero elements; all of them lie below c + e, except that
        // the multiplicity itself is always one.
        let mut minimal_generators = Vec::new();
        for n in 1..((conductor + multiplicity).max(multiplicity + 1)) as usize {
            if !members[n] {
                continue;
            }
            let composite = (multiplicity as usize..=n / 2)
                .any(|h| members[h] && members[n - h]);
            if !composite {
                minimal_generators.push(n as i64);
            }
        }

        let contains = |x: i64| -> bool {
            if x < 0 {
                false
            } else if x >= conductor {
                true
            } else {
                members[x as usize]
            }
        };
        let mut pseudo_frobenius = Vec::new();
        for x in -1..=frobenius {
            if contains(x) {
                continue;
            }
            if minimal_generators.iter().all(|&a| contains(x + a)) {
                pseudo_frobenius.push(x);
            }
        }

        debug_assert_eq!(small_elements.len() + genus, conductor as usize);
        debug_assert_eq!(pseudo_frobenius.last().copied(), Some(frobenius));

        NumericalSemigroup {
            minimal_generators,
            multiplicity,
            frobenius,
            genus,
            conductor,
            small_elements,
            pseudo_frobenius,
            members,
        }
    }

    /// Membership test; negative integers are never elements and every
    /// integer at least the conductor is one.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n >= self.conductor {
            true
        } else {
            self.members[n as usize]
        }
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal_generators
    }

    /// Number of minimal generators, the embedding dimension of the ring.
    pub fn edim(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Largest gap; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `frobenius + 1`; every integer from here on is an element.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Elements below the conductor, in increasing order.
    pub fn small_elements(&self) -> &[i64] {
        &self.small_elements
    }

    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// Cohen-Macaulay type: the number of pseudo-Frobenius numbers.
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..self.conductor)
            .filter(|&n| !self.members[n as usize])
            .collect()
    }

    pub fn is_naturals(&self) -> bool {
        self.frobenius == -1
    }

    /// The `i`-th element `s_i` of the increasing enumeration, `s_0 = 0`.
    pub fn element(&self, i: usize) -> i64 {
        if i < self.small_elements.len() {
            self.small_elements[i]
        } else {
            self.conductor + (i - self.small_elements.len()) as i64
        }
    }

    /// Position of `v` in the increasing enumeration, if `v` is an element.
    pub fn index_of(&self, v: i64) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        if v >= self.conductor {
            Some(self.small_elements.len() + (v - self.conductor) as usize)
        } else {
            self.small_elements.binary_search(&v).ok()
        }
    }

    /// Least elements in each residue class mod `m`; `m` must be an element.
    pub fn apery_set(&self, m: i64) -> Result<Vec<i64>> {
        if m < 1 || !self.contains(m) {
            return Err(Error::NotAnElement(m));
        }
        let m_us = m as usize;
        let mut slots: Vec<Option<i64>> = vec![None; m_us];
        let mut found = 0usize;
        let mut n = 0i64;
        while found < m_us {
            if self.contains(n) {
                let r = (n % m) as usize;
                if slots[r].is_none() {
                    slots[r] = Some(n);
                    found += 1;
                }
            }
            n += 1;
        }
        let mut out: Vec<i64> = slots.into_iter().map(|s| s.unwrap()).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Count of positions `x` in `[1, v - 1]` with both `x` and `v - x`
    /// gaps. A pair of distinct gaps contributes twice, a doubled gap once.
    pub fn gap_pair_count(&self, v: i64) -> usize {
        if v > 2 * self.frobenius {
            return 0;
        }
        (1..v)
            .filter(|&x| !self.contains(x) && !self.contains(v - x))
            .count()
    }

    /// Divisor data of the `i`-th element.
    pub fn divisor_profile(&self, i: usize) -> DivisorProfile {
        let value = self.element(i);
        let mut divisors = Vec::new();
        for j in 0..=i {
            let s_j = self.element(j);
            if self.contains(value - s_j) {
                divisors.push(s_j);
            }
        }
        let gaps_below = (1..value).filter(|&x| !self.contains(x)).count();
        let gap_pairs = self.gap_pair_count(value);
        let nu = divisors.len();
        DivisorProfile {
            index: i,
            value,
            divisors,
            nu,
            gaps_below,
            gap_pairs,
        }
    }

    /// A semigroup is symmetric exactly when, for every integer `x`, one of
    /// `x` and `frobenius - x` is an element; equivalently the type is one,
    /// equivalently `2 * genus = frobenius + 1`.
    pub fn is_symmetric(&self) -> bool {
        2 * self.genus as i64 == self.frobenius + 1
    }

    /// Children in the genus tree: removing a minimal generator larger than
    /// the Frobenius number yields a semigroup of genus one more.
    pub(crate) fn children(&self) -> Vec<NumericalSemigroup> {
        let mut out = Vec::new();
        for &a in &self.minimal_generators {
            if a <= self.frobenius {
                continue;
            }
            let window = (2 * (a + 1) + 2 * self.multiplicity + 8) as usize;
            let mut bits = vec![false; window];
            for (n, bit) in bits.iter_mut().enumerate() {
                *bit = self.contains(n as i64) && n as i64 != a;
            }
            out.push(NumericalSemigroup::from_membership(bits));
        }
        out
    }

    /// JSON form used by the command-line tools:
    /// `{"generators":[...],"frobenius":n,"genus":n,"conductor":n,"pf":[...],"apery_mult":[...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generators": self.minimal_generators,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "conductor": self.conductor,
            "pf": self.pseudo_frobenius,
            "apery_mult": self.apery_set(self.multiplicity).unwrap(),
        })
    }
}

/// Divisor data of one element `s_i`: the divisors `D(i)`, their count
/// `nu`, the gap count below `s_i`, and the gap-pair count `G(i)`.
///
/// These satisfy `nu = index - gaps_below + gap_pairs + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    pub index: usize,
    pub value: i64,
    pub divisors: Vec<i64>,
    pub nu: usize,
    pub gaps_below: usize,
    pub gap_pairs: usize,
}

/// Enumerates every numerical semigroup of genus at most `max_genus`,
/// exactly once, genus ascending and minimal generator lists in
/// lexicographic order within a genus.
pub fn enumerate_by_genus(max_genus: usize) -> GenusEnumerator {
    GenusEnumerator {
        level: vec![NumericalSemigroup::naturals()],
        idx: 0,
        genus: 0,
        max_genus,
    }
}

/// Iterator over the tree of numerical semigroups, level by level.
pub struct GenusEnumerator {
    level: Vec<NumericalSemigroup>,
    idx: usize,
    genus: usize,
    max_genus: usize,
}

impl Iterator for GenusEnumerator {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        loop {
            if self.genus > self.max_genus {
                return None;
            }
            if self.idx < self.level.len() {
                self.idx += 1;
                return Some(self.level[self.idx - 1].clone());
            }
            self.genus += 1;
            if self.genus > self.max_genus {
                return None;
            }
            let mut next: Vec<NumericalSemigroup> =
                self.level.iter().flat_map(|h| h.children()).collect();
            next.sort_by(|a, b| a.minimal_generators.cmp(&b.minimal_generators));
            self.level = next;
            self.idx = 0;
        }
    }
}

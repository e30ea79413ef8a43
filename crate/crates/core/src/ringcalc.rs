//! Length and Hilbert-function calculus for monomial ideals of the
//! semigroup ring, carried out on value sets: the length of `I/J` for
//! nested monomial fractional ideals is the cardinality of
//! `Val(I) \ Val(J)`.
//!
//! Powers of the maximal ideal have value sets built by repeatedly adding
//! generator values, so the Hilbert function of an Artinian quotient
//! `S/I`, its top socle degree, and its order all reduce to finite window
//! counts. Computation of the Hilbert function stops at the first level
//! where adding another power changes nothing; from there on both sides
//! equal `I`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

/// Value sets of the powers of the maximal ideal, grown on demand.
pub(crate) struct MaximalPowerCache {
    parent: Arc<NumericalSemigroup>,
    powers: Vec<RelativeIdeal>,
}

impl MaximalPowerCache {
    pub(crate) fn new(parent: Arc<NumericalSemigroup>) -> Self {
        let powers = vec![RelativeIdeal::whole(parent.clone())];
        MaximalPowerCache { parent, powers }
    }

    pub(crate) fn power(&mut self, i: usize) -> &RelativeIdeal {
        while self.powers.len() <= i {
            let prev = self.powers.last().unwrap();
            let mut next: Option<RelativeIdeal> = None;
            for &a in self.parent.minimal_generators() {
                let shifted = prev.shift(a);
                next = Some(match next {
                    None => shifted,
                    Some(acc) => acc.sum(&shifted).unwrap(),
                });
            }
            self.powers.push(next.unwrap());
        }
        &self.powers[i]
    }
}

/// Value set of the `i`-th power of the maximal ideal; the zeroth power is
/// the whole semigroup.
pub fn power_value_set(parent: &Arc<NumericalSemigroup>, i: usize) -> RelativeIdeal {
    let mut cache = MaximalPowerCache::new(parent.clone());
    cache.power(i).clone()
}

/// Exact length of `a/b` for nested ideals, the cardinality of the finite
/// difference set.
pub fn length_between(a: &RelativeIdeal, b: &RelativeIdeal) -> Result<usize> {
    if a.parent() != b.parent() {
        return Err(Error::ParentMismatch);
    }
    if !b.is_subset_of(a) {
        return Err(Error::NotNested);
    }
    let hi = a.threshold().max(b.threshold());
    Ok((a.min_value()..hi)
        .filter(|&x| a.contains(x) && !b.contains(x))
        .count())
}

/// The finite Hilbert function of an Artinian quotient together with its
/// derived invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertProfile {
    /// `h(0), ..., h(s)` with `h(s)` nonzero.
    pub values: Vec<usize>,
    /// Sum of the values, the colength of the ideal.
    pub length: usize,
    /// Largest `i` with `n^i + I` different from `n^{i+1} + I`.
    pub top_socle_degree: usize,
    /// Largest `n` with the ideal contained in the `n`-th power.
    pub order: usize,
    /// `h(1)`, the embedding dimension of the quotient.
    pub edim_quotient: usize,
}

pub fn hilbert_profile(ideal: &RelativeIdeal) -> Result<HilbertProfile> {
    let mut cache = MaximalPowerCache::new(ideal.parent().clone());
    hilbert_profile_cached(ideal, &mut cache, false)
        .map(|opt| opt.expect("unbounded computation always completes"))
}

/// Shared-cache Hilbert computation. With `only_if_stretched` set, bail
/// out with `None` as soon as a value at level two or higher exceeds one.
pub(crate) fn hilbert_profile_cached(
    ideal: &RelativeIdeal,
    cache: &mut MaximalPowerCache,
    only_if_stretched: bool,
) -> Result<Option<HilbertProfile>> {
    let metrics = ideal.metrics()?;
    if metrics.d == 0 {
        return Err(Error::NotProper);
    }
    let mut values = Vec::new();
    let mut prev = cache.power(0).sum(ideal)?;
    let mut level = 1usize;
    loop {
        let next = cache.power(level).sum(ideal)?;
        let h = length_between(&prev, &next)?;
        if h == 0 {
            break;
        }
        if only_if_stretched && level >= 3 && h != 1 {
            return Ok(None);
        }
        values.push(h);
        prev = next;
        level += 1;
    }
    let length: usize = values.iter().sum();
    debug_assert_eq!(length, metrics.d);
    let top_socle_degree = values.len() - 1;

    let mut order = 0usize;
    loop {
        let next = order + 1;
        if ideal.is_subset_of(cache.power(next)) {
            order = next;
        } else {
            break;
        }
    }
    let edim_quotient = values.get(1).copied().unwrap_or(0);
    Ok(Some(HilbertProfile {
        values,
        length,
        top_socle_degree,
        order,
        edim_quotient,
    }))
}

/// Whether the quotient is stretched: every Hilbert value from level two
/// up to the top socle degree equals one.
pub fn is_stretched_profile(profile: &HilbertProfile) -> bool {
    profile.values.iter().skip(2).all(|&h| h == 1)
}

/// Hilbert function of the associated graded ring of the semigroup ring,
/// with a non-decreasing flag computed out to a stabilization horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHilbert {
    /// `h_S(0), ..., h_S(i_max)`.
    pub values: Vec<usize>,
    /// Whether the function never decreases on `[0, horizon]`.
    pub non_decreasing: bool,
    /// Index out to which the function was computed. The function equals
    /// the multiplicity for the last `e` indices of the horizon.
    pub horizon: usize,
}

pub fn assoc_graded_hilbert(parent: &Arc<NumericalSemigroup>, i_max: usize) -> GradedHilbert {
    let mut cache = MaximalPowerCache::new(parent.clone());
    let e = parent.multiplicity() as usize;
    let min_stable = (2 * parent.conductor()) as usize;
    let mut all = Vec::new();
    let mut i = 0usize;
    loop {
        let h = {
            let a = cache.power(i).clone();
            let b = cache.power(i + 1);
            length_between(&a, b).unwrap()
        };
        all.push(h);
        let stable = all.len() >= e.max(1)
            && i >= min_stable
            && all[all.len() - e.max(1)..].iter().all(|&v| v == e);
        if stable && i >= i_max {
            break;
        }
        i += 1;
    }
    let horizon = all.len() - 1;
    let non_decreasing = all.windows(2).all(|w| w[0] <= w[1]);
    let values = all[..=i_max.min(horizon)].to_vec();
    GradedHilbert {
        values,
        non_decreasing,
        horizon,
    }
}

/// Largest `n` with `t^v` in the `n`-th power of the maximal ideal; the
/// unit (value zero) has degree zero.
pub fn degree_of_value(parent: &NumericalSemigroup, v: i64) -> Result<usize> {
    if v < 0 || !parent.contains(v) {
        return Err(Error::NotAnElement(v));
    }
    if v == 0 {
        return Ok(0);
    }
    let gens = parent.minimal_generators();
    let mut deg = vec![0usize; v as usize + 1];
    for x in 1..=v {
        if !parent.contains(x) {
            continue;
        }
        deg[x as usize] = gens
            .iter()
            .filter(|&&a| a <= x && parent.contains(x - a))
            .map(|&a| deg[(x - a) as usize] + 1)
            .max()
            .expect("every nonzero element exceeds some generator");
    }
    Ok(deg[v as usize])
}

/// Socle values of the quotient by a proper integral ideal: elements of
/// `H \ I` that every minimal generator pushes into `I`. The maximal
/// degree among them is the top socle degree, and the maximizers are
/// exactly the socle values of that degree.
pub fn socle_values(ideal: &RelativeIdeal) -> Result<Vec<i64>> {
    if !ideal.is_integral() {
        return Err(Error::NotIntegral);
    }
    let vals = ideal.socle_value_scan();
    if ideal.contains(0) {
        return Err(Error::NotProper);
    }
    Ok(vals)
}

/// Report on the top-socle-degree bound and its equality cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdegReport {
    pub profile: HilbertProfile,
    /// `length - sum of graded values below the order + order - 1`.
    pub bound: usize,
    /// Whether the top socle degree attains the bound.
    pub bound_equality: bool,
    /// Minimal generator count of the order-th power of the quotient
    /// maximal ideal, which is the Hilbert value at the order.
    pub mu_at_order: usize,
    /// Whether the Hilbert function is `1, h(1), ..., h(v-1), 1, ..., 1`.
    pub tail_of_ones: bool,
    /// Whether the ideal is a power of the maximal ideal.
    pub is_power_of_max: bool,
    /// Present when the order is at least two: the embedding-dimension
    /// bound and its equality flag (equality means a stretched quotient).
    pub edim_bound: Option<(usize, bool)>,
}

pub fn sdeg_report(ideal: &RelativeIdeal) -> Result<SdegReport> {
    let mut cache = MaximalPowerCache::new(ideal.parent().clone());
    let profile = hilbert_profile_cached(ideal, &mut cache, false)?
        .expect("unbounded computation always completes");
    let v = profile.order;
    let graded = assoc_graded_hilbert(ideal.parent(), v.max(1));
    let below: usize = graded.values[..v].iter().sum();
    let bound = profile.length - below + v - 1;
    let s = profile.top_socle_degree;
    let bound_equality = s == bound;
    let mu_at_order = profile.values.get(v).copied().unwrap_or(0);
    let tail_of_ones = (v..=s).all(|j| profile.values.get(j) == Some(&1));
    let is_power_of_max = *ideal == cache.power(v).clone();
    let edim_bound = if v >= 2 {
        let b = profile.length - profile.edim_quotient;
        Some((b, s == b))
    } else {
        None
    };
    Ok(SdegReport {
        profile,
        bound,
        bound_equality,
        mu_at_order,
        tail_of_ones,
        is_power_of_max,
        edim_bound,
    })
}

/// The multiplicity chain `s <= s * e <= g(I)`, which is strict somewhere
/// unless the semigroup is all of the naturals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityBound {
    pub top_socle_degree: usize,
    pub multiplicity: i64,
    pub frobenius_g: i64,
    pub chain_equality: bool,
}

pub fn multiplicity_bound_check(ideal: &RelativeIdeal) -> Result<MultiplicityBound> {
    let profile = hilbert_profile(ideal)?;
    let s = profile.top_socle_degree as i64;
    let e = ideal.parent().multiplicity();
    let g = ideal.frobenius_number();
    assert!(s <= s * e && s * e <= g, "multiplicity chain violated");
    Ok(MultiplicityBound {
        top_socle_degree: profile.top_socle_degree,
        multiplicity: e,
        frobenius_g: g,
        chain_equality: s == g && s * e == g,
    })
}

//! Relative ideals of a numerical semigroup: the value sets of monomial
//! fractional ideals of the semigroup ring.
//!
//! A relative ideal of `H` is a set `F` of integers with `F + H` contained
//! in `F` that is bounded below and eventually full. The normal form stored
//! here is a finite `exceptional` list together with a `threshold` `T` such
//! that the set is `exceptional ∪ [T, ∞)` and `T - 1` is not in the set.
//!
//! The colon `I - J = { z : z + J ⊆ I }` is decidable because `J` is
//! determined by finitely many generator values; all other algebra is plain
//! windowed set arithmetic.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Value set of a monomial fractional ideal, in normal form.
#[derive(Debug, Clone)]
pub struct RelativeIdeal {
    parent: Arc<NumericalSemigroup>,
    exceptional: Vec<i64>,
    threshold: i64,
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.threshold == other.threshold
            && self.exceptional == other.exceptional
            && self.parent == other.parent
    }
}
impl Eq for RelativeIdeal {}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .minimal_generator_values()
            .iter()
            .map(|v| v.to_string())
            .collect();
        write!(f, "gens={} over {}", gens.join(";"), self.parent)
    }
}

/// Frobenius data and generator values of an integral ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealMetrics {
    /// Largest integer outside the ideal.
    pub frobenius_g: i64,
    /// `frobenius_g + 1`; every integer from here on lies in the ideal.
    pub c_of_i: i64,
    /// Cardinality of `H \ I`, the colength of the ideal.
    pub d: usize,
    /// Position of `c_of_i` in the element enumeration when it is an element.
    pub n_i: Option<usize>,
    /// Values `v` in the ideal with `v - h` outside it for every nonzero
    /// `h` of `H`; their number is the minimal number of generators.
    pub minimal_generator_values: Vec<i64>,
}

impl IdealMetrics {
    pub fn mu(&self) -> usize {
        self.minimal_generator_values.len()
    }
}

impl RelativeIdeal {
    /// Builds a relative ideal from a membership predicate valid on
    /// `[lo, t_start)` with everything from `t_start` on included.
    fn from_member_fn(
        parent: Arc<NumericalSemigroup>,
        lo: i64,
        t_start: i64,
        member: impl Fn(i64) -> bool,
    ) -> Self {
        let mut exceptional: Vec<i64> = (lo..t_start).filter(|&x| member(x)).collect();
        let mut threshold = t_start;
        while exceptional.last() == Some(&(threshold - 1)) {
            exceptional.pop();
            threshold -= 1;
        }
        let out = RelativeIdeal {
            parent,
            exceptional,
            threshold,
        };
        debug_assert!(out.closed_under_parent());
        out
    }

    fn closed_under_parent(&self) -> bool {
        let gens = self.parent.minimal_generators();
        self.exceptional
            .iter()
            .chain(std::iter::once(&self.threshold))
            .all(|&x| gens.iter().all(|&a| self.contains(x + a)))
    }

    /// The union of `g + H` over the given generator values, in normal form.
    pub fn from_generators(parent: Arc<NumericalSemigroup>, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        let lo = *gens.iter().min().unwrap();
        let t_start = lo + parent.conductor();
        let p = parent.clone();
        Ok(Self::from_member_fn(parent, lo, t_start, |x| {
            gens.iter().any(|&g| p.contains(x - g))
        }))
    }

    /// `H` as an ideal of itself.
    pub fn whole(parent: Arc<NumericalSemigroup>) -> Self {
        let exceptional = parent.small_elements().to_vec();
        let threshold = parent.conductor();
        RelativeIdeal {
            parent,
            exceptional,
            threshold,
        }
    }

    /// The principal ideal `x + H`.
    pub fn principal(parent: Arc<NumericalSemigroup>, x: i64) -> Self {
        Self::whole(parent).shift(x)
    }

    /// The standard canonical ideal `{ frobenius - a : a outside H }`.
    /// It contains `H`, with equality exactly when `H` is symmetric.
    pub fn standard_canonical(parent: Arc<NumericalSemigroup>) -> Self {
        let g = parent.frobenius();
        let mut exceptional: Vec<i64> = parent.gaps().iter().map(|a| g - a).collect();
        exceptional.sort_unstable();
        let out = RelativeIdeal {
            parent,
            exceptional,
            threshold: g + 1,
        };
        debug_assert!(out.closed_under_parent());
        out
    }

    /// `H` minus the divisors of its `i`-th element; these are exactly the
    /// irreducible integral ideals.
    pub fn complement_of_divisors(parent: Arc<NumericalSemigroup>, i: usize) -> Self {
        let v = parent.element(i);
        let t_start = parent.conductor().max(v + 1);
        let p = parent.clone();
        Self::from_member_fn(parent, 0, t_start, |x| {
            p.contains(x) && !(x <= v && p.contains(v - x))
        })
    }

    pub fn parent(&self) -> &Arc<NumericalSemigroup> {
        &self.parent
    }

    pub fn exceptional(&self) -> &[i64] {
        &self.exceptional
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// Largest integer not in the set.
    pub fn frobenius_number(&self) -> i64 {
        self.threshold - 1
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.threshold || self.exceptional.binary_search(&z).is_ok()
    }

    /// Smallest value in the set.
    pub fn min_value(&self) -> i64 {
        self.exceptional.first().copied().unwrap_or(self.threshold)
    }

    fn same_parent(&self, other: &RelativeIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.parent, &other.parent) || self.parent == other.parent {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Translation by `k`.
    pub fn shift(&self, k: i64) -> Self {
        RelativeIdeal {
            parent: self.parent.clone(),
            exceptional: self.exceptional.iter().map(|x| x + k).collect(),
            threshold: self.threshold + k,
        }
    }

    /// Set union; this is the value set of the ideal sum.
    pub fn sum(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_parent(other)?;
        let lo = self.min_value().min(other.min_value());
        let t_start = self.threshold.min(other.threshold);
        Ok(Self::from_member_fn(
            self.parent.clone(),
            lo,
            t_start,
            |x| self.contains(x) || other.contains(x),
        ))
    }

    /// Set intersection.
    pub fn intersect(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_parent(other)?;
        let lo = self.min_value().max(other.min_value());
        let t_start = self.threshold.max(other.threshold);
        Ok(Self::from_member_fn(
            self.parent.clone(),
            lo,
            t_start,
            |x| self.contains(x) && other.contains(x),
        ))
    }

    /// The colon `self - other = { z : z + other ⊆ self }`.
    pub fn colon(&self, other: &RelativeIdeal) -> Result<Self> {
        self.same_parent(other)?;
        let gens = other.minimal_generator_values();
        let gmin = *gens.iter().min().unwrap();
        let gmax = *gens.iter().max().unwrap();
        let lo = self.min_value() - gmax;
        let t_start = self.threshold - gmin;
        Ok(Self::from_member_fn(
            self.parent.clone(),
            lo,
            t_start,
            |z| gens.iter().all(|&g| self.contains(z + g)),
        ))
    }

    pub fn is_subset_of(&self, other: &RelativeIdeal) -> bool {
        self.exceptional.iter().all(|&x| other.contains(x))
            && (self.threshold..other.threshold.max(self.threshold)).all(|x| other.contains(x))
    }

    /// Whether the set is contained in its parent semigroup.
    pub fn is_integral(&self) -> bool {
        self.exceptional.iter().all(|&x| self.parent.contains(x))
            && (self.threshold..self.parent.conductor().max(self.threshold))
                .all(|x| self.parent.contains(x))
    }

    /// Colength `|H \ I|`; zero exactly for the whole semigroup.
    fn colength(&self) -> usize {
        let hi = self.parent.conductor().max(self.threshold);
        (0..hi)
            .filter(|&x| self.parent.contains(x) && !self.contains(x))
            .count()
    }

    fn require_proper(&self) -> Result<usize> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let d = self.colength();
        if d == 0 {
            return Err(Error::NotProper);
        }
        Ok(d)
    }

    /// Values `v` in the set with `v - h` outside it for every nonzero `h`
    /// of the parent; they generate the ideal.
    pub fn minimal_generator_values(&self) -> Vec<i64> {
        let gens = self.parent.minimal_generators();
        let hi = self.threshold + self.parent.multiplicity();
        (self.min_value()..hi)
            .filter(|&v| self.contains(v) && gens.iter().all(|&a| !self.contains(v - a)))
            .collect()
    }

    /// Frobenius data; the colength requires an integral ideal.
    pub fn metrics(&self) -> Result<IdealMetrics> {
        if !self.is_integral() {
            return Err(Error::NotIntegral);
        }
        let c_of_i = self.threshold;
        Ok(IdealMetrics {
            frobenius_g: c_of_i - 1,
            c_of_i,
            d: self.colength(),
            n_i: self.parent.index_of(c_of_i),
            minimal_generator_values: self.minimal_generator_values(),
        })
    }

    /// Values of the socle of the quotient: elements of `H \ I` that land
    /// in `I` under every minimal generator of `H`.
    pub(crate) fn socle_value_scan(&self) -> Vec<i64> {
        let gens = self.parent.minimal_generators();
        let hi = self.parent.conductor().max(self.threshold);
        (0..hi)
            .filter(|&v| {
                self.parent.contains(v)
                    && !self.contains(v)
                    && gens.iter().all(|&a| self.contains(v + a))
            })
            .collect()
    }

    /// True exactly when the set is a translate of the standard canonical
    /// ideal. The translation, when it exists, is forced by the Frobenius
    /// numbers, so a single comparison decides.
    pub fn is_canonical(&self) -> bool {
        let omega = RelativeIdeal::standard_canonical(self.parent.clone());
        let x = self.threshold - omega.threshold;
        *self == omega.shift(x)
    }

    /// Irreducibility of a proper integral ideal, with the witness index
    /// `i` such that the ideal is `H` minus the divisors of `s_i`. The
    /// socle criterion (exactly one socle value) decides.
    pub fn irreducible_witness(&self) -> Result<Option<usize>> {
        self.require_proper()?;
        let socle = self.socle_value_scan();
        if socle.len() != 1 {
            return Ok(None);
        }
        let i = self
            .parent
            .index_of(socle[0])
            .expect("socle values are elements");
        debug_assert_eq!(
            *self,
            RelativeIdeal::complement_of_divisors(self.parent.clone(), i)
        );
        Ok(Some(i))
    }

    /// Irredundant decomposition into irreducible ideals `H \ D(i)`, one
    /// per socle value, sorted by `s_i`. The Frobenius number of the
    /// intersection is the largest among the components.
    pub fn irreducible_decomposition(&self) -> Result<Vec<RelativeIdeal>> {
        self.require_proper()?;
        let socle = self.socle_value_scan();
        let mut components: Vec<RelativeIdeal> = socle
            .iter()
            .map(|&v| {
                let i = self.parent.index_of(v).expect("socle values are elements");
                RelativeIdeal::complement_of_divisors(self.parent.clone(), i)
            })
            .collect();
        // Components from socle values are already irredundant; the greedy
        // pass keeps the output minimal even if that ever changed.
        let mut idx = components.len();
        while idx > 0 {
            idx -= 1;
            if components.len() == 1 {
                break;
            }
            let trial: Vec<&RelativeIdeal> = components
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, c)| c)
                .collect();
            let mut inter = trial[0].clone();
            for c in &trial[1..] {
                inter = inter.intersect(c)?;
            }
            if inter == *self {
                components.remove(idx);
            }
        }
        debug_assert_eq!(
            components
                .iter()
                .map(|c| c.frobenius_number())
                .max()
                .unwrap(),
            self.frobenius_number()
        );
        Ok(components)
    }

    /// Equality in the genus bound: `g(I) + 1 = d(I) + 2 * genus`. Such
    /// ideals are always irreducible and canonical, which is asserted.
    pub fn is_maximum_sparse(&self) -> Result<bool> {
        let d = self.require_proper()?;
        let ok = self.frobenius_number() + 1
            == d as i64 + 2 * self.parent.genus() as i64;
        if ok {
            assert!(
                self.irreducible_witness()?.is_some(),
                "maximum sparse ideal must be irreducible: {self}"
            );
            assert!(
                self.is_canonical(),
                "maximum sparse ideal must be canonical: {self}"
            );
        }
        Ok(ok)
    }

    /// JSON form used by the command-line tools.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "parent": self.parent.minimal_generators(),
            "exceptional": self.exceptional,
            "threshold": self.threshold,
        })
    }
}

/// All maximum sparse ideals `H \ D(i)` with gap-pair count zero and
/// `s_i` at most `value_bound`. Non-empty as soon as the bound reaches
/// `2 * frobenius + 1`, because past that point no two gaps can sum to
/// `s_i`.
pub fn enumerate_maximum_sparse(
    parent: &Arc<NumericalSemigroup>,
    value_bound: i64,
) -> Vec<RelativeIdeal> {
    let mut out = Vec::new();
    let mut i = 0usize;
    loop {
        let v = parent.element(i);
        if v > value_bound {
            break;
        }
        if parent.gap_pair_count(v) == 0 {
            let ideal = RelativeIdeal::complement_of_divisors(parent.clone(), i);
            if ideal.is_maximum_sparse().unwrap_or(false) {
                out.push(ideal);
            }
        }
        i += 1;
    }
    out
}

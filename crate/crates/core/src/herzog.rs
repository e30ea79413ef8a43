//! Two-row presentation of a three-generated non-symmetric numerical
//! semigroup ring.
//!
//! For minimal generators `a1 < a2 < a3` with a non-symmetric semigroup,
//! the defining ideal of the ring is generated by the maximal minors of
//!
//! ```text
//! ( X^alpha   Y^beta    Z^gamma  )
//! ( Y^beta'   Z^gamma'  X^alpha' )
//! ```
//!
//! with all six exponents positive. The column sums are the minimal
//! multiples: `alpha + alpha'` is the least `c >= 2` with `c*a1` in the
//! subsemigroup generated by `a2, a3`, and the two decompositions of each
//! minimal multiple are unique in the non-symmetric case. The three minor
//! degrees are the weighted degrees of the relations.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Exponent data of the two-row presentation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HerzogMatrix {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_prime: i64,
    pub beta_prime: i64,
    pub gamma_prime: i64,
    /// Weighted degrees of the three relations, in generator order:
    /// `(alpha+alpha')*a1`, `(beta+beta')*a2`, `(gamma+gamma')*a3`.
    pub relation_degrees: [i64; 3],
}

impl HerzogMatrix {
    pub fn column_sums(&self) -> [i64; 3] {
        [
            self.alpha + self.alpha_prime,
            self.beta + self.beta_prime,
            self.gamma + self.gamma_prime,
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "alpha_p": self.alpha_prime,
            "beta_p": self.beta_prime,
            "gamma_p": self.gamma_prime,
        })
    }
}

/// Membership in the subsemigroup generated by two values (not assumed
/// coprime), tested on a growing window.
fn in_two_generated(target: i64, a: i64, b: i64) -> bool {
    if target < 0 {
        return false;
    }
    let mut k = 0;
    while k * a <= target {
        if (target - k * a) % b == 0 {
            return true;
        }
        k += 1;
    }
    false
}

/// Least `c >= 2` with `c*multiple` in the subsemigroup of `a` and `b`.
fn minimal_multiple(multiple: i64, a: i64, b: i64) -> i64 {
    let mut c = 2;
    loop {
        if in_two_generated(c * multiple, a, b) {
            return c;
        }
        c += 1;
        assert!(
            c <= a * b + 2,
            "minimal multiple search exceeded the coprimality bound"
        );
    }
}

/// The unique decomposition `value = p*a + q*b` with `p, q >= 1`, or an
/// ambiguity error if the count differs from one.
fn positive_decomposition(value: i64, a: i64, b: i64) -> Result<(i64, i64)> {
    let mut found = Vec::new();
    let mut p = 1;
    while p * a + b <= value {
        let rest = value - p * a;
        if rest % b == 0 {
            found.push((p, rest / b));
        }
        p += 1;
    }
    if found.len() == 1 {
        Ok(found[0])
    } else {
        Err(Error::AmbiguousPresentation {
            multiple: value,
            count: found.len(),
        })
    }
}

/// Computes the presentation matrix of a three-generated non-symmetric
/// semigroup. Symmetric inputs are complete intersections and rejected.
pub fn herzog_matrix(h: &NumericalSemigroup) -> Result<HerzogMatrix> {
    if h.edim() != 3 {
        return Err(Error::NotEdim3(h.edim()));
    }
    if h.is_symmetric() {
        return Err(Error::Symmetric);
    }
    let a1 = h.minimal_generators()[0];
    let a2 = h.minimal_generators()[1];
    let a3 = h.minimal_generators()[2];
    let c1 = minimal_multiple(a1, a2, a3);
    let c2 = minimal_multiple(a2, a1, a3);
    let c3 = minimal_multiple(a3, a1, a2);
    let (beta_prime, gamma) = positive_decomposition(c1 * a1, a2, a3)?;
    let (alpha, gamma_prime) = positive_decomposition(c2 * a2, a1, a3)?;
    let (alpha_prime, beta) = positive_decomposition(c3 * a3, a1, a2)?;
    let m = HerzogMatrix {
        alpha,
        beta,
        gamma,
        alpha_prime,
        beta_prime,
        gamma_prime,
        relation_degrees: [c1 * a1, c2 * a2, c3 * a3],
    };
    assert_eq!(m.column_sums(), [c1, c2, c3], "column sums must be the minimal multiples");
    assert_eq!((m.alpha + m.alpha_prime) * a1, m.beta_prime * a2 + m.gamma * a3);
    assert_eq!((m.beta + m.beta_prime) * a2, m.alpha * a1 + m.gamma_prime * a3);
    assert_eq!((m.gamma + m.gamma_prime) * a3, m.alpha_prime * a1 + m.beta * a2);
    Ok(m)
}

/// Which variable axis carries the largest column sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::X => write!(f, "X"),
            Axis::Y => write!(f, "Y"),
            Axis::Z => write!(f, "Z"),
        }
    }
}

/// Axis and socle-degree range of the certified stretched-quotient family
/// for a three-generated non-symmetric ring: the axis with maximal column
/// sum (ties in X, Y, Z order), whose sum is always at least three, and
/// the admissible degrees `[2, sum - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessParameters {
    pub axis: Axis,
    pub s_min: i64,
    pub s_max: i64,
}

impl WitnessParameters {
    pub fn to_json(&self, matrix: &HerzogMatrix) -> serde_json::Value {
        let mut v = matrix.to_json();
        v["axis"] = serde_json::json!(self.axis.to_string());
        v["s_min"] = serde_json::json!(self.s_min);
        v["s_max"] = serde_json::json!(self.s_max);
        v
    }
}

pub fn witness_parameters(h: &NumericalSemigroup) -> Result<WitnessParameters> {
    let m = herzog_matrix(h)?;
    let sums = m.column_sums();
    let (axis, max) = [(Axis::X, sums[0]), (Axis::Y, sums[1]), (Axis::Z, sums[2])]
        .into_iter()
        .max_by_key(|&(_, s)| s)
        .unwrap();
    // max_by_key returns the last maximum; re-resolve ties in X, Y, Z order
    let axis = if sums[0] == max {
        Axis::X
    } else if sums[1] == max {
        Axis::Y
    } else {
        axis
    };
    assert!(max >= 3, "some column sum always reaches three");
    Ok(WitnessParameters {
        axis,
        s_min: 2,
        s_max: max - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semi(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn matrix_378() {
        let m = herzog_matrix(&semi(&[3, 7, 8])).unwrap();
        assert_eq!(
            (m.alpha, m.beta, m.gamma, m.alpha_prime, m.beta_prime, m.gamma_prime),
            (2, 1, 1, 3, 1, 1)
        );
        assert_eq!(m.column_sums(), [5, 2, 2]);
        assert_eq!(m.relation_degrees, [15, 14, 16]);
    }

    #[test]
    fn matrix_345() {
        let m = herzog_matrix(&semi(&[3, 4, 5])).unwrap();
        assert_eq!(
            (m.alpha, m.beta, m.gamma, m.alpha_prime, m.beta_prime, m.gamma_prime),
            (1, 1, 1, 2, 1, 1)
        );
        assert_eq!(m.column_sums(), [3, 2, 2]);
    }

    #[test]
    fn symmetric_and_wrong_edim_rejected() {
        assert_eq!(herzog_matrix(&semi(&[4, 5, 6])), Err(Error::Symmetric));
        assert_eq!(herzog_matrix(&semi(&[2, 3])), Err(Error::NotEdim3(2)));
        assert_eq!(
            herzog_matrix(&semi(&[6, 7, 8, 9, 10, 11])),
            Err(Error::NotEdim3(6))
        );
    }

    #[test]
    fn witness_parameter_examples() {
        let w = witness_parameters(&semi(&[3, 7, 8])).unwrap();
        assert_eq!(w.axis, Axis::X);
        assert_eq!((w.s_min, w.s_max), (2, 4));

        let w2 = witness_parameters(&semi(&[4, 5, 7])).unwrap();
        assert!(w2.s_max >= w2.s_min);
        assert_eq!(w2.axis, Axis::X);

        let w3 = witness_parameters(&semi(&[3, 4, 5])).unwrap();
        assert_eq!(w3.axis, Axis::X);
        assert_eq!((w3.s_min, w3.s_max), (2, 2));
    }

    #[test]
    fn minimality_against_brute_force() {
        let h = semi(&[3, 5, 7]);
        let m = herzog_matrix(&h).unwrap();
        let gens = h.minimal_generators();
        for (idx, (a, b)) in [(gens[1], gens[2]), (gens[0], gens[2]), (gens[0], gens[1])]
            .into_iter()
            .enumerate()
        {
            let g = gens[idx];
            let c = m.column_sums()[idx];
            for k in 2..c {
                assert!(!in_two_generated(k * g, a, b), "{k}*{g} decomposes early");
            }
            assert!(in_two_generated(c * g, a, b));
        }
    }
}

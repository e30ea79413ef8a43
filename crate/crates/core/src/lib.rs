//! Exact integer invariants of numerical semigroups and the monomial-ideal
//! calculus of their semigroup rings.
//!
//! The crate computes, with no floating point anywhere:
//!
//! * the combinatorics of a numerical semigroup `H` (gaps, Frobenius
//!   number, Apéry sets, pseudo-Frobenius numbers, divisor profiles, the
//!   genus tree);
//! * relative ideals of `H`, the value sets of monomial fractional ideals
//!   of the ring `k[[H]]`, with sums, intersections, colons, duals, and
//!   the maximum sparse equality `g(I) + 1 = d(I) + 2*genus`;
//! * Hilbert functions of Artinian quotients via windowed value-set
//!   arithmetic, with top socle degrees, orders, and the accompanying
//!   degree bounds;
//! * ring classifiers: stretched, canonical stretched (irreducible
//!   monomial witness inside the square of the maximal ideal with
//!   stretched quotient), sparse stretched, and the symmetry companions;
//! * the two-row presentation matrix of three-generated non-symmetric
//!   semigroup rings;
//! * a census over the genus tree with deterministic CSV/JSON output.
//!
//! The census and other per-semigroup sweeps are data-parallel; the
//! default `parallel` feature runs them on a rayon pool, and disabling it
//! leaves a pure sequential build with identical output.
//!
//! ```
//! use std::sync::Arc;
//! use sgring::{NumericalSemigroup, RelativeIdeal, hilbert_profile};
//!
//! let h = Arc::new(NumericalSemigroup::from_generators(&[3, 7, 8])?);
//! assert_eq!(h.gaps(), vec![1, 2, 4, 5]);
//! assert_eq!(h.frobenius(), 5);
//!
//! let ideal = RelativeIdeal::from_generators(h.clone(), &[6, 7])?;
//! let profile = hilbert_profile(&ideal)?;
//! assert_eq!(profile.values, vec![1, 2, 1]);
//! assert!(ideal.is_maximum_sparse()?);
//! # Ok::<(), sgring::Error>(())
//! ```

pub mod census;
pub mod classify;
pub mod error;
pub mod herzog;
pub mod ideal;
pub mod ringcalc;
pub mod semigroup;

pub use error::{Error, Result};
pub use ideal::{enumerate_maximum_sparse, IdealMetrics, RelativeIdeal};
pub use ringcalc::{
    assoc_graded_hilbert, degree_of_value, hilbert_profile, is_stretched_profile,
    length_between, multiplicity_bound_check, power_value_set, sdeg_report, socle_values,
    GradedHilbert, HilbertProfile, MultiplicityBound, SdegReport,
};
pub use semigroup::{enumerate_by_genus, DivisorProfile, NumericalSemigroup};

//! Property suites: structural invariants checked against brute force on
//! randomly generated semigroups and ideals.

mod common;

use std::sync::Arc;

use proptest::prelude::*;

use sgring::herzog::herzog_matrix;
use sgring::ideal::{enumerate_maximum_sparse, RelativeIdeal};
use sgring::ringcalc::{
    assoc_graded_hilbert, degree_of_value, hilbert_profile, socle_values,
};
use sgring::semigroup::{enumerate_by_genus, NumericalSemigroup};

fn arb_semigroup() -> impl Strategy<Value = Arc<NumericalSemigroup>> {
    prop_oneof![
        1 => Just(Arc::new(NumericalSemigroup::naturals())),
        9 => proptest::collection::vec(2i64..32, 1..4)
            .prop_filter_map("generators with gcd one", |gens| {
                NumericalSemigroup::from_generators(&gens).ok().map(Arc::new)
            }),
    ]
}

/// Integral proper ideals: generator values drawn from the nonzero
/// elements of the parent.
fn arb_integral_ideal() -> impl Strategy<Value = RelativeIdeal> {
    (arb_semigroup(), proptest::collection::vec((1usize..40, 0i64..1), 1..4)).prop_map(
        |(h, picks)| {
            let gens: Vec<i64> = picks.iter().map(|(i, _)| h.element(*i)).collect();
            RelativeIdeal::from_generators(h, &gens).unwrap()
        },
    )
}

/// Arbitrary relative ideals: integral ones shifted by a signed offset.
fn arb_relative_ideal() -> impl Strategy<Value = RelativeIdeal> {
    (arb_integral_ideal(), -15i64..15).prop_map(|(i, k)| i.shift(k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn apery_set_consistency(h in arb_semigroup()) {
        let e = h.multiplicity();
        let ap = h.apery_set(e).unwrap();
        prop_assert_eq!(ap.len() as i64, e);
        let genus: i64 = ap.iter().map(|w| w / e).sum();
        prop_assert_eq!(genus as usize, h.genus());
        prop_assert_eq!(ap.iter().max().unwrap() - e, h.frobenius());
    }

    #[test]
    fn membership_matches_closure(h in arb_semigroup()) {
        let bound = (3 * h.conductor()).max(8) as usize;
        let closure = common::closure_window(h.minimal_generators(), bound);
        for (n, &expected) in closure.iter().enumerate() {
            prop_assert_eq!(h.contains(n as i64), expected);
        }
    }

    #[test]
    fn divisor_count_identity(h in arb_semigroup(), i in 0usize..40) {
        let p = h.divisor_profile(i);
        prop_assert_eq!(
            p.nu as i64,
            p.index as i64 - p.gaps_below as i64 + p.gap_pairs as i64 + 1
        );
        prop_assert!(p.divisors.contains(&0));
        prop_assert!(p.divisors.contains(&p.value));
    }

    #[test]
    fn symmetry_equivalences(h in arb_semigroup()) {
        let by_type = h.cm_type() == 1;
        let by_count = 2 * h.genus() as i64 == h.frobenius() + 1;
        let by_reflection = (-2 * h.conductor()..=2 * h.conductor())
            .all(|x| h.contains(x) != h.contains(h.frobenius() - x));
        prop_assert_eq!(h.is_symmetric(), by_type);
        prop_assert_eq!(h.is_symmetric(), by_count);
        prop_assert_eq!(h.is_symmetric(), by_reflection);
    }

    #[test]
    fn canonical_duality(f in arb_relative_ideal()) {
        let omega = RelativeIdeal::standard_canonical(f.parent().clone());
        let dual = omega.colon(&f).unwrap();
        let double = omega.colon(&dual).unwrap();
        prop_assert_eq!(double, f);
    }

    #[test]
    fn colon_by_maximal_tops_out_at_frobenius(i in arb_integral_ideal()) {
        // the largest value outside the ideal already multiplies the
        // maximal ideal into it
        let h = i.parent().clone();
        let maximal =
            RelativeIdeal::from_generators(h.clone(), h.minimal_generators()).unwrap();
        let dual = i.colon(&maximal).unwrap();
        let g = i.frobenius_number();
        let lo = (i.min_value() - h.conductor()).min(g - 4);
        let top = (lo..=g)
            .filter(|&z| dual.contains(z) && !i.contains(z))
            .max();
        prop_assert_eq!(top, Some(g));
    }

    #[test]
    fn intersection_frobenius_is_max(a in arb_integral_ideal(), picks in proptest::collection::vec(1usize..40, 1..4)) {
        let h = a.parent().clone();
        let gens: Vec<i64> = picks.iter().map(|&i| h.element(i)).collect();
        let b = RelativeIdeal::from_generators(h, &gens).unwrap();
        let inter = a.intersect(&b).unwrap();
        prop_assert_eq!(
            inter.frobenius_number(),
            a.frobenius_number().max(b.frobenius_number())
        );
    }

    #[test]
    fn divisor_count_bounds_colength(i in arb_integral_ideal()) {
        let h = i.parent().clone();
        let m = i.metrics().unwrap();
        // The divisor count at the ideal's conductor dominates it:
        // nu - 1 + 2*genus >= c(I). (The sharper claim nu <= d + 1 fails,
        // e.g. for 3 + H over <3,8>, where nu = 8 and d = 3.)
        if let Some(n_i) = m.n_i {
            let p = h.divisor_profile(n_i);
            prop_assert!(p.nu as i64 - 1 + 2 * h.genus() as i64 >= m.c_of_i);
            // for an irreducible ideal the complement is one divisor set
            if let Some(w) = i.irreducible_witness().ok().flatten() {
                prop_assert_eq!(h.divisor_profile(w).nu, m.d);
            }
        }
        // elements of the ideal below its own conductor are at most genus many
        let below = (0..m.c_of_i).filter(|&x| i.contains(x)).count();
        prop_assert!(below <= h.genus());
    }

    #[test]
    fn double_dual_expands(i in arb_integral_ideal(), probe in 0usize..25) {
        let h = i.parent().clone();
        let j = RelativeIdeal::complement_of_divisors(h, probe);
        let double = i.colon(&i.colon(&j).unwrap()).unwrap();
        prop_assert!(j.is_subset_of(&double));
    }

    #[test]
    fn canonical_iff_probes_close(i in arb_relative_ideal()) {
        let h = i.parent().clone();
        let mut all_closed = true;
        let mut p = 0usize;
        loop {
            let v = h.element(p);
            if v > 2 * h.conductor() {
                break;
            }
            let j = RelativeIdeal::complement_of_divisors(h.clone(), p);
            let double = i.colon(&i.colon(&j).unwrap()).unwrap();
            if double != j {
                all_closed = false;
                break;
            }
            p += 1;
        }
        prop_assert_eq!(i.is_canonical(), all_closed);
    }

    #[test]
    fn maximum_sparse_ideals_are_irreducible_canonical(h in arb_semigroup()) {
        let bound = 2 * h.frobenius() + 3;
        for i in enumerate_maximum_sparse(&h, bound) {
            prop_assert!(i.irreducible_witness().unwrap().is_some());
            prop_assert!(i.is_canonical());
        }
        // past twice the Frobenius number a witness always exists
        prop_assert!(!enumerate_maximum_sparse(&h, bound).is_empty());
    }

    #[test]
    fn power_value_sets_match_window_oracle(h in arb_semigroup(), k in 0usize..5) {
        let window = (4 * h.conductor() + 5 * h.multiplicity() * k as i64).max(20);
        let elements = common::semigroup_elements(h.minimal_generators(), window);
        let oracle = common::power_window(h.minimal_generators(), &elements, k, window);
        let power = sgring::power_value_set(&h, k);
        for v in 0..=window {
            prop_assert_eq!(power.contains(v), oracle.contains(&v), "power {} at {}", k, v);
        }
    }

    #[test]
    fn degree_matches_window_oracle(h in arb_semigroup(), idx in 0usize..25) {
        let v = h.element(idx);
        let window = v + 2 * h.conductor() + 2;
        let elements = common::semigroup_elements(h.minimal_generators(), window);
        let mut oracle = 0usize;
        for k in 1.. {
            if v > 0 && common::power_window(h.minimal_generators(), &elements, k, window).contains(&v) {
                oracle = k;
            } else {
                break;
            }
        }
        prop_assert_eq!(degree_of_value(&h, v).unwrap(), oracle);
    }

    #[test]
    fn stretched_check_matches_window_oracle(h in arb_semigroup()) {
        if h.is_naturals() {
            return Ok(());
        }
        let e = h.multiplicity();
        let window = 5 * h.conductor().max(e) + 1;
        let elements = common::semigroup_elements(h.minimal_generators(), window);
        let reduction: std::collections::BTreeSet<i64> =
            elements.iter().map(|x| x + e).filter(|&x| x <= window).collect();
        let with = |k: usize| -> std::collections::BTreeSet<i64> {
            common::power_window(h.minimal_generators(), &elements, k, window)
                .union(&reduction)
                .copied()
                .collect()
        };
        let oracle = with(2).difference(&with(3)).count();
        let check = sgring::classify::stretched_check(&h).unwrap();
        prop_assert_eq!(check.length, oracle);
        prop_assert_eq!(check.stretched, oracle <= 1);
    }

    #[test]
    fn hilbert_sums_and_socle_degrees(i in arb_integral_ideal()) {
        let p = hilbert_profile(&i).unwrap();
        let m = i.metrics().unwrap();
        prop_assert_eq!(p.length, m.d);
        prop_assert_eq!(p.values[0], 1);
        prop_assert!(p.values.iter().all(|&v| v >= 1));

        let h = i.parent().clone();
        let socle = socle_values(&i).unwrap();
        let max_degree = socle
            .iter()
            .map(|&v| degree_of_value(&h, v).unwrap())
            .max()
            .unwrap();
        prop_assert_eq!(max_degree, p.top_socle_degree);
        // the maximizers are exactly the socle values of top degree
        let top: Vec<i64> = socle
            .iter()
            .copied()
            .filter(|&v| degree_of_value(&h, v).unwrap() == p.top_socle_degree)
            .collect();
        prop_assert!(!top.is_empty());

        // order is the first level where the quotient drops below the ring
        let graded = assoc_graded_hilbert(&h, p.top_socle_degree + 1);
        let first_drop = (0..=p.top_socle_degree + 1)
            .find(|&j| p.values.get(j).copied().unwrap_or(0) < graded.values[j])
            .unwrap();
        prop_assert_eq!(first_drop, p.order);
    }

    #[test]
    fn decomposition_reassembles(i in arb_integral_ideal()) {
        let parts = i.irreducible_decomposition().unwrap();
        let mut inter = parts[0].clone();
        for p in &parts[1..] {
            inter = inter.intersect(p).unwrap();
        }
        prop_assert_eq!(&inter, &i);
        for p in &parts {
            prop_assert!(p.irreducible_witness().unwrap().is_some());
        }
        prop_assert_eq!(
            parts.iter().map(|p| p.frobenius_number()).max().unwrap(),
            i.frobenius_number()
        );
        // irredundant: dropping any component grows the intersection
        if parts.len() > 1 {
            for skip in 0..parts.len() {
                let rest: Vec<&RelativeIdeal> = parts
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip)
                    .map(|(_, p)| p)
                    .collect();
                let mut partial = rest[0].clone();
                for p in &rest[1..] {
                    partial = partial.intersect(p).unwrap();
                }
                prop_assert!(partial != i);
            }
        }
    }
}

#[test]
fn classifier_witnesses_cohere_over_the_tree() {
    use sgring::classify::{
        canonical_stretched, sparse_stretched, CanonicalStretched, SparseStretched,
    };
    use sgring::power_value_set;

    for h in enumerate_by_genus(8) {
        if h.is_naturals() {
            continue;
        }
        let h = Arc::new(h);
        let square = power_value_set(&h, 2);
        let target = 2 * h.genus() as i64 + h.edim() as i64 - 1;

        let canonical = canonical_stretched(&h, None).unwrap();
        if let CanonicalStretched::MonomialWitness(w) = &canonical {
            assert!(w.ideal.irreducible_witness().unwrap().is_some(), "{h}");
            assert!(w.ideal.is_subset_of(&square), "{h}");
            assert!(sgring::is_stretched_profile(&w.profile), "{h}");
            assert_eq!(w.profile.edim_quotient, h.edim(), "{h}");
            assert_eq!(
                w.profile.top_socle_degree,
                w.profile.length - w.profile.edim_quotient,
                "{h}"
            );
        }

        let sparse = sparse_stretched(&h).unwrap();
        if let SparseStretched::Witness {
            data,
            top_socle_degree,
            ..
        } = &sparse
        {
            assert!(data.ideal.is_maximum_sparse().unwrap(), "{h}");
            assert!(data.ideal.is_subset_of(&square), "{h}");
            // the witness Frobenius number is the target plus the socle degree
            assert_eq!(
                data.ideal.frobenius_number(),
                target + *top_socle_degree as i64,
                "{h}"
            );
            // a sparse witness is in particular an irreducible-search witness
            assert!(canonical.is_positive(), "{h}");
        }

        // independent recomputation of the sparse verdict: scan every
        // maximum sparse candidate inside the square up to the bound
        let bound = 2 * target + 1;
        let mut found = false;
        let mut i = 1usize;
        loop {
            let v = h.element(i);
            if v > bound {
                break;
            }
            if v > h.frobenius() && h.gap_pair_count(v) == 0 {
                let cand = RelativeIdeal::complement_of_divisors(h.clone(), i);
                if cand.is_subset_of(&square)
                    && sgring::is_stretched_profile(&hilbert_profile(&cand).unwrap())
                {
                    found = true;
                    break;
                }
            }
            i += 1;
        }
        assert_eq!(found, sparse.is_witness(), "{h}");
    }
}

#[test]
fn three_generated_presentations_over_the_tree() {
    let mut checked = 0usize;
    for h in enumerate_by_genus(10) {
        if h.edim() != 3 {
            continue;
        }
        if h.is_symmetric() {
            assert!(herzog_matrix(&h).is_err(), "symmetric {h} must be rejected");
            continue;
        }
        let m = herzog_matrix(&h).unwrap();
        let gens = h.minimal_generators();
        let sums = m.column_sums();
        assert!(sums.iter().max().unwrap() >= &3, "{h}");
        assert_eq!(m.relation_degrees[0], sums[0] * gens[0]);
        assert_eq!(m.relation_degrees[1], sums[1] * gens[1]);
        assert_eq!(m.relation_degrees[2], sums[2] * gens[2]);
        checked += 1;
    }
    assert!(checked > 30, "expected many three-generated cases, saw {checked}");
}

#[test]
fn genus_tree_matches_gap_set_oracle() {
    for genus in 0..=6usize {
        let tree = enumerate_by_genus(genus)
            .filter(|h| h.genus() == genus)
            .count();
        assert_eq!(tree, common::semigroup_count_by_gap_sets(genus));
    }
}

#[test]
fn dual_of_maximal_ideal_is_type_count() {
    for h in enumerate_by_genus(7) {
        if h.is_naturals() {
            continue;
        }
        let h = Arc::new(h);
        let whole = RelativeIdeal::whole(h.clone());
        let maximal =
            RelativeIdeal::from_generators(h.clone(), h.minimal_generators()).unwrap();
        let dual = whole.colon(&maximal).unwrap();
        for x in -2 * h.conductor()..=2 * h.conductor() {
            let expected = h.contains(x) || h.pseudo_frobenius().contains(&x);
            assert_eq!(dual.contains(x), expected, "{h} at {x}");
        }
    }
}

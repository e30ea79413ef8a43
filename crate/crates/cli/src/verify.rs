//! Built-in verification catalog: every worked example the library
//! reproduces, with its expected values frozen as strings and recomputed
//! on each run.

use std::sync::Arc;

use sgring::classify::{canonical_stretched, sparse_stretched, stretched_check, SparseStretched};
use sgring::ideal::RelativeIdeal;
use sgring::ringcalc::hilbert_profile;
use sgring::semigroup::NumericalSemigroup;

use crate::Failure;

struct Check {
    id: &'static str,
    description: &'static str,
    expected: String,
    computed: String,
}

fn semi(gens: &[i64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
}

fn ideal(h: &Arc<NumericalSemigroup>, gens: &[i64]) -> RelativeIdeal {
    RelativeIdeal::from_generators(h.clone(), gens).unwrap()
}

fn checks() -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |id, description, expected: String, computed: String| {
        out.push(Check {
            id,
            description,
            expected,
            computed,
        })
    };

    {
        let h = semi(&[3, 7, 8]);
        let i = ideal(&h, &[6, 7]);
        let p = hilbert_profile(&i).unwrap();
        push(
            "example3.5.length",
            "<3,7,8>, ideal (6,7): quotient length",
            "4".into(),
            p.length.to_string(),
        );
        push(
            "example3.5.edim",
            "<3,7,8>, ideal (6,7): quotient embedding dimension",
            "2".into(),
            p.edim_quotient.to_string(),
        );
        push(
            "example3.5.sdeg",
            "<3,7,8>, ideal (6,7): top socle degree = length - edim",
            "2 (= 4 - 2)".into(),
            format!(
                "{} (= {} - {})",
                p.top_socle_degree, p.length, p.edim_quotient
            ),
        );
    }

    for e in 3i64..=6 {
        let gens: Vec<i64> = (e..2 * e).collect();
        let h = semi(&gens);
        let igens: Vec<i64> = (2 * e..=3 * e - 2).collect();
        let i = ideal(&h, &igens);
        let p = hilbert_profile(&i).unwrap();
        let id_h: &'static str = match e {
            3 => "example3.10.e3.hilbert",
            4 => "example3.10.e4.hilbert",
            5 => "example3.10.e5.hilbert",
            _ => "example3.10.e6.hilbert",
        };
        let id_c: &'static str = match e {
            3 => "example3.10.e3.canonical",
            4 => "example3.10.e4.canonical",
            5 => "example3.10.e5.canonical",
            _ => "example3.10.e6.canonical",
        };
        push(
            id_h,
            "doubled-multiplicity family: Hilbert function (1, e, 1)",
            format!("[1, {e}, 1]"),
            format!("{:?}", p.values),
        );
        let irreducible = i.irreducible_witness().unwrap().is_some();
        push(
            id_c,
            "doubled-multiplicity family: canonical and irreducible witness",
            "true".into(),
            (i.is_canonical() && irreducible).to_string(),
        );
    }

    {
        let h = semi(&[6, 7, 8, 9, 10, 11]);
        let i = ideal(&h, &[12, 13, 14, 15, 16]);
        let m = i.metrics().unwrap();
        push(
            "example4.16.g",
            "<6..11>, ideal (12..16): Frobenius number",
            "17".into(),
            m.frobenius_g.to_string(),
        );
        push(
            "example4.16.length",
            "<6..11>, ideal (12..16): colength",
            "8".into(),
            m.d.to_string(),
        );
        push(
            "example4.18.max_sparse",
            "<6..11>, ideal (12..16): maximum sparse (17 + 1 = 8 + 2*5)",
            "true".into(),
            i.is_maximum_sparse().unwrap().to_string(),
        );
        let p = hilbert_profile(&i).unwrap();
        push(
            "example4.18.hilbert",
            "<6..11>, ideal (12..16): quotient Hilbert function",
            "[1, 6, 1]".into(),
            format!("{:?}", p.values),
        );
        let verdict = sparse_stretched(&h).unwrap();
        push(
            "example4.18.verdict",
            "<6..11>: sparse stretched verdict",
            "Witness".into(),
            match verdict {
                SparseStretched::Witness { .. } => "Witness".into(),
                SparseStretched::ExhaustedNo { .. } => "ExhaustedNo".into(),
            },
        );
    }

    {
        let h = semi(&[4, 5, 7]);
        push(
            "example5.2.genus",
            "<4,5,7>: genus",
            "4".into(),
            h.genus().to_string(),
        );
        push(
            "example5.2.edim",
            "<4,5,7>: embedding dimension",
            "3".into(),
            h.edim().to_string(),
        );
        let verdict = sparse_stretched(&h).unwrap();
        let (vtext, obtext) = match &verdict {
            SparseStretched::Witness { .. } => ("Witness".to_string(), "none".to_string()),
            SparseStretched::ExhaustedNo { obstruction } => (
                "ExhaustedNo".to_string(),
                match obstruction {
                    Some(ob) => format!(
                        "target {}, candidates {:?}, members {:?}",
                        ob.target,
                        ob.candidates.iter().map(|c| c.0).collect::<Vec<_>>(),
                        ob.members
                    ),
                    None => "none".to_string(),
                },
            ),
        };
        push(
            "example5.2.sparse_verdict",
            "<4,5,7>: sparse stretched verdict",
            "ExhaustedNo".into(),
            vtext,
        );
        push(
            "example5.2.obstruction",
            "<4,5,7>: factorization obstruction (only 11 of {2,3,6,11} is an element)",
            "target 10, candidates [2, 3, 6, 11], members [11]".into(),
            obtext,
        );
        push(
            "example5.2.canonical_verdict",
            "<4,5,7>: irreducible-witness verdict is positive",
            "positive".into(),
            if canonical_stretched(&h, None).unwrap().is_positive() {
                "positive".into()
            } else {
                "negative".into()
            },
        );
    }

    {
        let h = semi(&[5, 6, 13]);
        let s = stretched_check(&h).unwrap();
        push(
            "example5.3.reduction_length",
            "<5,6,13>: length of the reduction quotient square",
            "2".into(),
            s.length.to_string(),
        );
        push(
            "example5.3.stretched",
            "<5,6,13>: stretched",
            "false".into(),
            s.stretched.to_string(),
        );
        push(
            "example5.3.canonical_verdict",
            "<5,6,13>: irreducible-witness verdict is positive",
            "positive".into(),
            if canonical_stretched(&h, None).unwrap().is_positive() {
                "positive".into()
            } else {
                "negative".into()
            },
        );
    }

    {
        let h = semi(&[4, 6, 13, 15]);
        push(
            "example4.11.genus",
            "<4,6,13,15>: genus",
            "7".into(),
            h.genus().to_string(),
        );
        let outside: Vec<i64> = [2, 3, 5, 9]
            .into_iter()
            .filter(|&v| !h.contains(v))
            .collect();
        push(
            "example4.19.membership",
            "<4,6,13,15>: 2, 3, 5, 9 are not values",
            "[2, 3, 5, 9]".into(),
            format!("{outside:?}"),
        );
    }

    out
}

pub(crate) fn run_checks(filter: Option<&str>, corrupt: Option<&str>) -> Result<(), Failure> {
    let mut all = checks();
    if let Some(c) = corrupt {
        for check in all.iter_mut().filter(|ch| ch.id.contains(c)) {
            check.expected.push_str(" [corrupted]");
        }
    }
    let selected: Vec<&Check> = match filter {
        Some(f) => all.iter().filter(|c| c.id.contains(f)).collect(),
        None => all.iter().collect(),
    };
    let id_width = selected.iter().map(|c| c.id.len()).max().unwrap_or(8);
    let mut failures = 0usize;
    for c in &selected {
        let ok = c.expected == c.computed;
        if !ok {
            failures += 1;
        }
        println!(
            "{:<width$}  expected {:<40}  computed {:<40}  {}",
            c.id,
            c.expected,
            c.computed,
            if ok { "ok" } else { "FAIL" },
            width = id_width
        );
        if !ok {
            println!("{:<width$}  ({})", "", c.description, width = id_width);
        }
    }
    println!("ran {} checks, {} failed", selected.len(), failures);
    if failures > 0 {
        Err(Failure::new(1, format!("{failures} checks failed")))
    } else {
        Ok(())
    }
}

//! Census of classification verdicts over the tree of numerical
//! semigroups, with deterministic CSV and JSON renderings.
//!
//! Rows come out sorted by genus and then lexicographically by minimal
//! generators, so repeated runs are byte-identical. Classification of the
//! individual semigroups is embarrassingly parallel; with the `parallel`
//! feature the rows are computed on a rayon pool and reassembled in
//! enumeration order.

use std::io::Write;
use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::classify::{classify_all, ClassificationReport, SparseStretched};
use crate::semigroup::{enumerate_by_genus, NumericalSemigroup};

/// One classification row of the census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub generators: Vec<i64>,
    pub genus: usize,
    pub frobenius: i64,
    pub edim: usize,
    pub cm_type: usize,
    pub symmetric: bool,
    /// Absent for the naturals, where the ring is regular.
    pub stretched: Option<bool>,
    pub canonical_letter: Option<char>,
    pub sparse_letter: Option<char>,
    /// Socle value of the sparse witness, `-1` when there is none.
    pub witness_value: i64,
}

impl CensusRow {
    pub fn from_report(report: &ClassificationReport) -> CensusRow {
        let witness_value = match &report.sparse_stretched {
            Some(SparseStretched::Witness { data, .. }) => data.socle_value,
            _ => -1,
        };
        CensusRow {
            generators: report.semigroup.minimal_generators().to_vec(),
            genus: report.semigroup.genus(),
            frobenius: report.semigroup.frobenius(),
            edim: report.semigroup.edim(),
            cm_type: report.semigroup.cm_type(),
            symmetric: report.gorenstein.symmetric,
            stretched: report.stretched.as_ref().map(|s| s.stretched),
            canonical_letter: report.canonical_stretched.as_ref().map(|c| c.letter()),
            sparse_letter: report.sparse_stretched.as_ref().map(|s| s.letter()),
            witness_value,
        }
    }

    fn gens_text(&self) -> String {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        parts.join(",")
    }

    pub fn csv_line(&self) -> String {
        let opt_bool = |b: &Option<bool>| match b {
            Some(v) => v.to_string(),
            None => "Regular".to_string(),
        };
        let opt_char = |c: &Option<char>| match c {
            Some(v) => v.to_string(),
            None => "Regular".to_string(),
        };
        format!(
            "{}|{}|{}|{}|{}|{}|{}|{}|{}|{}",
            self.gens_text(),
            self.genus,
            self.frobenius,
            self.edim,
            self.cm_type,
            self.symmetric,
            opt_bool(&self.stretched),
            opt_char(&self.canonical_letter),
            opt_char(&self.sparse_letter),
            self.witness_value
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generators": self.generators,
            "genus": self.genus,
            "frobenius": self.frobenius,
            "edim": self.edim,
            "type": self.cm_type,
            "symmetric": self.symmetric,
            "stretched": self.stretched,
            "canonical_stretched": self.canonical_letter.map(String::from),
            "sparse_stretched": self.sparse_letter.map(String::from),
            "witness_s_i": self.witness_value,
        })
    }
}

pub const CSV_HEADER: &str =
    "generators|genus|frobenius|edim|type|symmetric|stretched|canonical_stretched|sparse_stretched|witness_s_i";

// Workers clone the semigroup so every allocation they make is also
// freed on the same thread; moving the enumeration's values across the
// pool instead serializes on the allocator.
fn classify_one(h: &NumericalSemigroup) -> CensusRow {
    CensusRow::from_report(&classify_all(&Arc::new(h.clone())))
}

/// Census rows in deterministic order, classified sequentially.
pub fn census_rows_sequential(max_genus: usize) -> Vec<CensusRow> {
    enumerate_by_genus(max_genus)
        .map(|h| classify_one(&h))
        .collect()
}

/// Census rows in deterministic order, classified on the rayon pool.
#[cfg(feature = "parallel")]
pub fn census_rows_parallel(max_genus: usize) -> Vec<CensusRow> {
    let semigroups: Vec<NumericalSemigroup> = enumerate_by_genus(max_genus).collect();
    semigroups.par_iter().map(classify_one).collect()
}

/// Census rows with the default execution strategy for the build.
pub fn census_rows(max_genus: usize) -> Vec<CensusRow> {
    #[cfg(feature = "parallel")]
    {
        census_rows_parallel(max_genus)
    }
    #[cfg(not(feature = "parallel"))]
    {
        census_rows_sequential(max_genus)
    }
}

pub fn write_csv<W: Write>(rows: &[CensusRow], mut w: W) -> std::io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(w, "{}", row.csv_line())?;
    }
    Ok(())
}

pub fn write_json<W: Write>(rows: &[CensusRow], mut w: W) -> std::io::Result<()> {
    let arr: Vec<serde_json::Value> = rows.iter().map(|r| r.to_json()).collect();
    let text = serde_json::to_string_pretty(&serde_json::Value::Array(arr))
        .expect("census rows serialize");
    writeln!(w, "{text}")
}

/// Row counts per genus, in genus order.
pub fn summary_counts(rows: &[CensusRow]) -> Vec<(usize, usize)> {
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for row in rows {
        match counts.last_mut() {
            Some((g, n)) if *g == row.genus => *n += 1,
            _ => counts.push((row.genus, 1)),
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census() {
        let rows = census_rows(2);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].generators, vec![1]);
        assert_eq!(rows[0].stretched, None);
        assert_eq!(summary_counts(&rows), vec![(0, 1), (1, 1), (2, 2)]);
    }

    #[test]
    fn csv_is_deterministic() {
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&census_rows(3), &mut a).unwrap();
        write_csv(&census_rows(3), &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with(CSV_HEADER));
        assert_eq!(text.lines().count(), 9);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        assert_eq!(census_rows_parallel(4), census_rows_sequential(4));
    }
}

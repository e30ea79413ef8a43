//! Command-line calculator for numerical semigroup rings.
//!
//! Subcommands: `semigroup` (invariants of one semigroup), `ideal`
//! (metrics and Hilbert data of a monomial ideal), `classify`
//! (stretched-family verdicts), `census` (classification sweep over the
//! genus tree, written to CSV or JSON), and `verify-paper` (the built-in
//! catalog of worked examples, expected against computed).
//!
//! Exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 domain
//! precondition, 4 I/O failure.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use sgring::classify::{classify_with_bound, CanonicalStretched, SparseStretched};
use sgring::ideal::RelativeIdeal;
use sgring::ringcalc::{assoc_graded_hilbert, sdeg_report};
use sgring::semigroup::NumericalSemigroup;
use sgring::Error;

#[derive(Parser)]
#[command(name = "sgring", version, about = "Numerical semigroup ring calculator")]
struct Cli {
    /// Emit machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Override the classifier search bounds.
    #[arg(long, global = true)]
    bound: Option<i64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants of one semigroup, e.g. `sgring semigroup 4,5,7`.
    Semigroup {
        /// Comma-separated generators.
        generators: String,
    },
    /// Metrics, Hilbert data and verdict flags of a monomial ideal,
    /// e.g. `sgring ideal 3,7,8 "6;7"`.
    Ideal {
        /// Comma-separated semigroup generators.
        generators: String,
        /// Semicolon-separated ideal generator values.
        #[arg(allow_hyphen_values = true)]
        ideal_generators: String,
        /// Allow negative generator values (relative ideals).
        #[arg(long)]
        relative: bool,
        /// Also print the irreducible decomposition.
        #[arg(long)]
        decompose: bool,
    },
    /// Stretched-family classification of one semigroup ring.
    Classify {
        /// Comma-separated generators.
        generators: String,
    },
    /// Classify every semigroup of genus up to the given value and write
    /// the rows to a file.
    Census {
        #[arg(long)]
        max_genus: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = CensusFormat::Csv)]
        format: CensusFormat,
        /// Safety cap on the census size.
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Run the built-in catalog of worked examples and report expected
    /// against computed values.
    VerifyPaper {
        /// Only run checks whose identifier contains this substring.
        #[arg(long)]
        filter: Option<String>,
        /// Corrupt the expected value of the matching checks (harness
        /// self-test).
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CensusFormat {
    Csv,
    Json,
}

pub(crate) struct Failure {
    pub(crate) code: u8,
    pub(crate) message: String,
}

impl Failure {
    pub(crate) fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn parse_failure(e: Error) -> Failure {
    Failure::new(2, e.to_string())
}

fn domain_failure(e: Error) -> Failure {
    Failure::new(3, e.to_string())
}

fn parse_semigroup(text: &str) -> Result<Arc<NumericalSemigroup>, Failure> {
    text.parse::<NumericalSemigroup>()
        .map(Arc::new)
        .map_err(parse_failure)
}

fn parse_ideal_generators(text: &str, relative: bool) -> Result<Vec<i64>, Failure> {
    let mut out = Vec::new();
    for tok in text.split(';') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(Failure::new(2, "empty ideal generator"));
        }
        let v: i64 = tok
            .parse()
            .map_err(|_| Failure::new(2, format!("bad ideal generator `{tok}`")))?;
        if v < 0 && !relative {
            return Err(Failure::new(
                2,
                format!("negative generator {v} requires --relative"),
            ));
        }
        out.push(v);
    }
    Ok(out)
}

fn cmd_semigroup(text: &str, json: bool) -> Result<(), Failure> {
    let h = parse_semigroup(text)?;
    let graded = assoc_graded_hilbert(&h, 7);
    if json {
        let mut v = h.to_json();
        v["hilbert_prefix"] = serde_json::json!(graded.values);
        println!("{}", serde_json::to_string(&v).unwrap());
    } else {
        println!("semigroup       <{h}>");
        println!("multiplicity    {}", h.multiplicity());
        println!("embedding dim   {}", h.edim());
        println!("frobenius       {}", h.frobenius());
        println!("genus           {}", h.genus());
        println!("conductor       {}", h.conductor());
        println!("type            {}", h.cm_type());
        println!("symmetric       {}", h.is_symmetric());
        println!("pseudo-frobenius {:?}", h.pseudo_frobenius());
        println!("apery({})        {:?}", h.multiplicity(), h.apery_set(h.multiplicity()).unwrap());
        println!("graded hilbert  {:?} (non-decreasing: {})", graded.values, graded.non_decreasing);
    }
    Ok(())
}

fn cmd_ideal(
    sg_text: &str,
    ideal_text: &str,
    relative: bool,
    decompose: bool,
    json: bool,
) -> Result<(), Failure> {
    let h = parse_semigroup(sg_text)?;
    let gens = parse_ideal_generators(ideal_text, relative)?;
    let ideal = RelativeIdeal::from_generators(h.clone(), &gens).map_err(parse_failure)?;

    if !ideal.is_integral() {
        // Relative ideals only carry the set-level data.
        let mut v = ideal.to_json();
        v["g"] = serde_json::json!(ideal.frobenius_number());
        v["canonical"] = serde_json::json!(ideal.is_canonical());
        if json {
            println!("{}", serde_json::to_string(&v).unwrap());
        } else {
            println!("relative ideal  {ideal}");
            println!("exceptional     {:?}", ideal.exceptional());
            println!("threshold       {}", ideal.threshold());
            println!("frobenius g     {}", ideal.frobenius_number());
            println!("canonical       {}", ideal.is_canonical());
        }
        return Ok(());
    }

    let metrics = ideal.metrics().map_err(domain_failure)?;
    let report = sdeg_report(&ideal).map_err(domain_failure)?;
    let irreducible = ideal
        .irreducible_witness()
        .map_err(domain_failure)?
        .is_some();
    let canonical = ideal.is_canonical();
    let max_sparse = ideal.is_maximum_sparse().map_err(domain_failure)?;
    let p = &report.profile;

    if json {
        let mut v = ideal.to_json();
        v["g"] = serde_json::json!(metrics.frobenius_g);
        v["d"] = serde_json::json!(metrics.d);
        v["max_sparse"] = serde_json::json!(max_sparse);
        v["irreducible"] = serde_json::json!(irreducible);
        v["canonical"] = serde_json::json!(canonical);
        v["hilbert"] = serde_json::json!(p.values);
        v["length"] = serde_json::json!(p.length);
        v["s"] = serde_json::json!(p.top_socle_degree);
        v["v"] = serde_json::json!(p.order);
        v["edim_q"] = serde_json::json!(p.edim_quotient);
        v["thm33_equality"] = serde_json::json!(report.bound_equality);
        v["cor34_equality"] = match report.edim_bound {
            Some((_, eq)) => serde_json::json!(eq),
            None => serde_json::Value::Null,
        };
        if decompose {
            let parts = ideal.irreducible_decomposition().map_err(domain_failure)?;
            v["decomposition"] = serde_json::json!(parts
                .iter()
                .map(|c| c.to_json())
                .collect::<Vec<_>>());
        }
        println!("{}", serde_json::to_string(&v).unwrap());
    } else {
        println!("ideal           {ideal}");
        println!("exceptional     {:?}", ideal.exceptional());
        println!("threshold       {}", ideal.threshold());
        println!("frobenius g     {}", metrics.frobenius_g);
        println!("colength d      {}", metrics.d);
        println!("hilbert         {:?}", p.values);
        println!("top socle deg   {}", p.top_socle_degree);
        println!("order v         {}", p.order);
        println!("irreducible     {irreducible}");
        println!("canonical       {canonical}");
        println!("maximum sparse  {max_sparse}");
        if decompose {
            let parts = ideal.irreducible_decomposition().map_err(domain_failure)?;
            for c in parts {
                println!("component       {c}");
            }
        }
    }
    Ok(())
}

fn canonical_json(v: &CanonicalStretched) -> serde_json::Value {
    match v {
        CanonicalStretched::MonomialWitness(w) => serde_json::json!({
            "verdict": "MonomialWitness",
            "witness": w.ideal.to_json(),
            "s_i": w.socle_value,
            "hilbert": w.profile.values,
        }),
        CanonicalStretched::ByHerzogTheorem => serde_json::json!({"verdict": "ByHerzogTheorem"}),
        CanonicalStretched::NoMonomialWitness => serde_json::json!({"verdict": "NoMonomialWitness"}),
    }
}

fn sparse_json(v: &SparseStretched) -> serde_json::Value {
    match v {
        SparseStretched::Witness {
            data,
            top_socle_degree,
            square_generator_value,
        } => serde_json::json!({
            "verdict": "Witness",
            "witness": data.ideal.to_json(),
            "s_i": data.socle_value,
            "s": top_socle_degree,
            "square_generator_value": square_generator_value,
            "hilbert": data.profile.values,
        }),
        SparseStretched::ExhaustedNo { obstruction } => serde_json::json!({
            "verdict": "ExhaustedNo",
            "obstruction": obstruction.as_ref().map(|ob| serde_json::json!({
                "target": ob.target,
                "candidates": ob.candidates,
                "members": ob.members,
            })),
        }),
    }
}

fn cmd_classify(text: &str, bound: Option<i64>, json: bool) -> Result<(), Failure> {
    let h = parse_semigroup(text)?;
    let r = classify_with_bound(&h, bound);
    // three-generated non-symmetric rings carry their presentation matrix
    let presentation = sgring::herzog::herzog_matrix(&h).ok().map(|m| {
        let params = sgring::herzog::witness_parameters(&h).unwrap();
        params.to_json(&m)
    });
    if json {
        let mut v = serde_json::json!({
            "generators": h.minimal_generators(),
            "genus": h.genus(),
            "frobenius": h.frobenius(),
            "edim": h.edim(),
            "type": h.cm_type(),
            "symmetric": r.gorenstein.symmetric,
            "stretched": r.stretched.as_ref().map(|s| serde_json::json!({
                "length": s.length,
                "stretched": s.stretched,
            })),
            "canonical_stretched": r.canonical_stretched.as_ref().map(canonical_json),
            "sparse_stretched": r.sparse_stretched.as_ref().map(sparse_json),
            "gorenstein": {
                "symmetric": r.gorenstein.symmetric,
                "principal_max_sparse": r.gorenstein.principal_witness,
                "all_canonical_max_sparse": r.gorenstein.all_canonical_max_sparse,
                "consistent": r.gorenstein.consistent(),
            },
            "search_bound": r.search_bound,
        });
        if let Some(p) = presentation {
            v["herzog"] = p;
        }
        println!("{}", serde_json::to_string(&v).unwrap());
    } else {
        println!("semigroup          <{h}>  genus {}  edim {}  type {}", h.genus(), h.edim(), h.cm_type());
        println!("symmetric          {}", r.gorenstein.symmetric);
        match &r.stretched {
            None => println!("stretched          regular (the ring is a discrete valuation ring)"),
            Some(s) => println!("stretched          {} (reduction quotient length {})", s.stretched, s.length),
        }
        match &r.canonical_stretched {
            None => println!("canonical stretched regular"),
            Some(CanonicalStretched::MonomialWitness(w)) => println!(
                "canonical stretched MonomialWitness (socle value {}, hilbert {:?})",
                w.socle_value, w.profile.values
            ),
            Some(v) => println!("canonical stretched {v:?}"),
        }
        match &r.sparse_stretched {
            None => println!("sparse stretched   regular"),
            Some(SparseStretched::Witness {
                data,
                top_socle_degree,
                square_generator_value,
            }) => println!(
                "sparse stretched   Witness (socle value {}, s {}, generator value {})",
                data.socle_value, top_socle_degree, square_generator_value
            ),
            Some(SparseStretched::ExhaustedNo { obstruction }) => match obstruction {
                Some(ob) => println!(
                    "sparse stretched   ExhaustedNo (target {}, members {:?})",
                    ob.target, ob.members
                ),
                None => println!("sparse stretched   ExhaustedNo"),
            },
        }
        if let Some(p) = presentation {
            println!("presentation       {p}");
        }
        println!("search bound       {}", r.search_bound);
    }
    Ok(())
}

fn cmd_census(
    max_genus: usize,
    out: &PathBuf,
    format: CensusFormat,
    cap: usize,
) -> Result<(), Failure> {
    if max_genus > cap {
        return Err(Failure::new(
            2,
            format!("max genus {max_genus} exceeds the cap {cap}"),
        ));
    }
    let rows = sgring::census::census_rows(max_genus);
    let file = std::fs::File::create(out)
        .map_err(|e| Failure::new(4, format!("cannot create {}: {e}", out.display())))?;
    let writer = std::io::BufWriter::new(file);
    let io_result = match format {
        CensusFormat::Csv => sgring::census::write_csv(&rows, writer),
        CensusFormat::Json => sgring::census::write_json(&rows, writer),
    };
    io_result.map_err(|e| Failure::new(4, format!("write failed: {e}")))?;
    for (genus, count) in sgring::census::summary_counts(&rows) {
        println!("genus {genus}: {count}");
    }
    println!("total: {}", rows.len());
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Semigroup { generators } => cmd_semigroup(generators, cli.json),
        Cmd::Ideal {
            generators,
            ideal_generators,
            relative,
            decompose,
        } => cmd_ideal(generators, ideal_generators, *relative, *decompose, cli.json),
        Cmd::Classify { generators } => cmd_classify(generators, cli.bound, cli.json),
        Cmd::Census {
            max_genus,
            out,
            format,
            cap,
        } => cmd_census(*max_genus, out, *format, *cap),
        Cmd::VerifyPaper { filter, corrupt } => {
            verify::run_checks(filter.as_deref(), corrupt.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

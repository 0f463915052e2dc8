//! Batch tables over a family and a parameter range.
//!
//! Rows are computed in parallel and emitted in the order the pairs were
//! enumerated: parameters ascending, then the pair index within a parameter.

use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_range, Thm11Case, MAX_HALL_P, MAX_K, MAX_LEGENDRE_P, MAX_TWIN_P};
use crate::adic::{
    d_split, has_optimal_autocorrelation, round6, security_margin_of, four_adic_complexity,
    ExactComplexity, Verdict,
};
use crate::error::{Error, Result};
use crate::interleave::interleave;
use crate::numtheory::{pow4_plus1, Natural};
use crate::seqgen::{
    hall_parameter, hall_sequence, legendre_sequence, m_sequence, twin_prime_sequence,
    BinarySequence, LegendreVariant,
};

const NO_CLOSED_FORM: &str = "no closed form";
const THM12_LABEL: &str = "thm12: evidence only, see verify thm12";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    MSequence,
    Legendre,
    TwinPrime,
    Hall,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" | "m_sequence" | "m-sequence" => Ok(Family::MSequence),
            "legendre" => Ok(Family::Legendre),
            "twin" | "twin_prime" | "twin-prime" => Ok(Family::TwinPrime),
            "hall" => Ok(Family::Hall),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// How pairs `(a, b)` are drawn for each parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairRule {
    /// `(a, L^l a)` for `l = 1..n-1`.
    Shifts,
    /// The pairs named by the family's closed-form result.
    Theorem,
    /// `(a, M_r a)` for every unit `r`, one row per distinct sequence.
    Samples,
    /// `(a, a)`.
    Diagonal,
}

impl FromStr for PairRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shifts" => Ok(PairRule::Shifts),
            "theorem" => Ok(PairRule::Theorem),
            "samples" => Ok(PairRule::Samples),
            "diagonal" => Ok(PairRule::Diagonal),
            other => Err(Error::Parse(format!("unknown pair rule {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// Table request; also the schema of a JSON spec file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub family: Family,
    pub params: Vec<u64>,
    pub pairs: PairRule,
    #[serde(default)]
    pub format: OutputFormat,
}

impl TableSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad table spec: {e}")))
    }
}

/// Every valid family parameter in `lo..=hi`.
pub fn family_params(family: Family, lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&p| validate(family, p).is_ok()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub a: String,
    pub b: String,
    /// Family parameter (`k` or `p`).
    pub n: u64,
    pub period: usize,
    pub d_plus: String,
    pub d_minus: String,
    pub d: String,
    pub fc_log4: f64,
    pub optimal_autocorrelation: bool,
    pub q4: Verdict,
    pub q6: Verdict,
    pub closed_form: String,
    pub expected_d: Option<String>,
    pub closed_form_match: Option<bool>,
}

struct PairJob {
    param: u64,
    a: BinarySequence,
    b: BinarySequence,
    closed_form: String,
    expected: Option<Natural>,
}

impl PairJob {
    fn new(param: u64, a: &BinarySequence, b: BinarySequence, closed_form: &str, expected: Option<Natural>) -> Self {
        Self {
            param,
            a: a.clone(),
            b,
            closed_form: closed_form.to_string(),
            expected,
        }
    }
}

fn validate(family: Family, p: u64) -> Result<()> {
    match family {
        Family::MSequence => {
            if p < 2 {
                return Err(Error::param(format!("k = {p} is below 2")));
            }
            check_range("k", p, MAX_K as u64)
        }
        Family::Legendre => {
            check_range("p", p, MAX_LEGENDRE_P)?;
            legendre_sequence(p, LegendreVariant::Ell).map(drop)
        }
        Family::TwinPrime => {
            check_range("p", p, MAX_TWIN_P)?;
            twin_prime_sequence(p).map(drop)
        }
        Family::Hall => {
            check_range("p", p, MAX_HALL_P)?;
            hall_parameter(p)
                .map(drop)
                .ok_or_else(|| Error::param(format!("{p} is not a Hall prime")))
        }
    }
}

fn base(family: Family, p: u64) -> Result<BinarySequence> {
    match family {
        Family::MSequence => m_sequence(p as u32),
        Family::Legendre => legendre_sequence(p, LegendreVariant::Ell),
        Family::TwinPrime => twin_prime_sequence(p),
        Family::Hall => hall_sequence(p, None),
    }
}

fn one() -> Option<Natural> {
    Some(Natural::from(1u32))
}

fn diagonal_divisor(n: usize) -> Option<Natural> {
    Some(pow4_plus1(n as u64) / 5u32)
}

/// `thm8` when `b` is a nontrivial shift of `a`.
fn shift_label(a: &BinarySequence, b: &BinarySequence) -> (&'static str, Option<Natural>) {
    let n = a.period() as i64;
    if (1..n).any(|l| a.shift(l).bits() == b.bits()) {
        ("thm8", one())
    } else {
        (NO_CLOSED_FORM, None)
    }
}

fn jobs_for(family: Family, rule: PairRule, p: u64) -> Result<Vec<PairJob>> {
    let a = base(family, p)?;
    let n = a.period();
    let mut jobs = Vec::new();
    match rule {
        PairRule::Diagonal => jobs.push(PairJob::new(p, &a, a.clone(), "cor7", diagonal_divisor(n))),
        PairRule::Shifts => {
            for l in 1..n as i64 {
                let (label, expected) = match family {
                    Family::MSequence => ("thm8", one()),
                    _ => (NO_CLOSED_FORM, None),
                };
                jobs.push(PairJob::new(p, &a, a.shift(l), label, expected));
            }
        }
        PairRule::Theorem => match family {
            Family::MSequence => return jobs_for(family, PairRule::Shifts, p),
            Family::Legendre => {
                for case in Thm11Case::ALL {
                    let (x, y) = case.pair(p)?;
                    let label = format!("thm11:{}", case.as_str());
                    jobs.push(PairJob::new(p, &x, y, &label, Some(case.expected_divisor(p))));
                }
            }
            Family::TwinPrime => jobs.push(PairJob::new(p, &a, a.reversed(), "thm10", one())),
            Family::Hall => jobs.push(PairJob::new(
                p,
                &a,
                a.reversed(),
                THM12_LABEL,
                None,
            )),
        },
        PairRule::Samples => {
            let mut seen: Vec<Vec<u8>> = Vec::new();
            for r in 1..n as i64 {
                let Ok(b) = a.sample(r) else { continue };
                if seen.iter().any(|s| s == b.bits()) {
                    continue;
                }
                seen.push(b.bits().to_vec());
                let (label, expected) = if b.bits() == a.bits() {
                    ("cor7", diagonal_divisor(n))
                } else if b.bits() == a.reversed().bits() {
                    match family {
                        Family::Legendre => (
                            "thm11:ell_tau_ell",
                            Some(Thm11Case::EllTauEll.expected_divisor(p)),
                        ),
                        Family::TwinPrime => ("thm10", one()),
                        Family::Hall => (THM12_LABEL, None),
                        Family::MSequence => shift_label(&a, &b),
                    }
                } else if family == Family::MSequence {
                    shift_label(&a, &b)
                } else {
                    (NO_CLOSED_FORM, None)
                };
                jobs.push(PairJob::new(p, &a, b, label, expected));
            }
        }
    }
    Ok(jobs)
}

fn compute_row(job: &PairJob) -> Result<TableRow> {
    let w = interleave(&job.a, &job.b)?;
    let fc: ExactComplexity = four_adic_complexity(&w);
    let (d_plus, d_minus) = d_split(&w)?;
    let security = security_margin_of(&fc);
    Ok(TableRow {
        a: job.a.provenance().to_string(),
        b: job.b.provenance().to_string(),
        n: job.param,
        period: fc.period(),
        d_plus: d_plus.to_string(),
        d_minus: d_minus.to_string(),
        d: fc.divisor().to_string(),
        fc_log4: round6(fc.value()),
        optimal_autocorrelation: has_optimal_autocorrelation(&w),
        q4: security.q4,
        q6: security.q6,
        closed_form: job.closed_form.clone(),
        expected_d: job.expected.as_ref().map(|d| d.to_string()),
        closed_form_match: job.expected.as_ref().map(|d| d == fc.divisor()),
    })
}

/// Computes every row of the table.
pub fn table_rows(spec: &TableSpec) -> Result<Vec<TableRow>> {
    if spec.params.is_empty() {
        return Err(Error::param("parameter range is empty"));
    }
    let mut params = spec.params.clone();
    params.sort_unstable();
    params.dedup();
    for &p in &params {
        validate(spec.family, p)?;
    }
    let jobs = params
        .iter()
        .map(|&p| jobs_for(spec.family, spec.pairs, p))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    jobs.par_iter().map(compute_row).collect()
}

pub fn write_rows(rows: &[TableRow], format: OutputFormat, out: impl Write) -> Result<()> {
    match format {
        OutputFormat::Json => serde_json::to_writer_pretty(out, rows)
            .map_err(|e| Error::Internal(format!("JSON encoding failed: {e}"))),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row)
                    .map_err(|e| Error::Internal(format!("CSV encoding failed: {e}")))?;
            }
            w.flush().map_err(|e| Error::Internal(format!("CSV flush failed: {e}")))
        }
    }
}

pub fn read_csv_rows(input: impl Read) -> Result<Vec<TableRow>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(|e| Error::Parse(format!("bad CSV row: {e}"))))
        .collect()
}

pub fn read_json_rows(input: impl Read) -> Result<Vec<TableRow>> {
    serde_json::from_reader(input).map_err(|e| Error::Parse(format!("bad JSON table: {e}")))
}

/// Computes the table and writes it to `path`, or to stdout when `path` is `None`.
pub fn run_table(spec: &TableSpec, path: Option<&Path>) -> Result<Vec<TableRow>> {
    let rows = table_rows(spec)?;
    let format = spec.format;
    match path {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
            let mut out = std::io::BufWriter::new(file);
            write_rows(&rows, format, &mut out)?;
            out.flush().map_err(|e| Error::io(path, e))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_rows(&rows, format, &mut lock)?;
            if format == OutputFormat::Json {
                let _ = writeln!(lock);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, params: &[u64], pairs: PairRule) -> TableSpec {
        TableSpec {
            family,
            params: params.to_vec(),
            pairs,
            format: OutputFormat::Csv,
        }
    }

    #[test]
    fn m_sequence_shift_table() {
        let rows = table_rows(&spec(Family::MSequence, &[4, 2, 3], PairRule::Shifts)).unwrap();
        assert_eq!(rows.len(), 2 + 6 + 14);
        assert_eq!(rows[0].n, 2);
        assert_eq!(rows[21].n, 4);
        assert!(rows.iter().all(|r| r.d == "1" && r.closed_form_match == Some(true)));
    }

    #[test]
    fn legendre_theorem_table() {
        let rows = table_rows(&spec(Family::Legendre, &[3, 7, 11], PairRule::Theorem)).unwrap();
        assert_eq!(rows.len(), 12);
        assert!(rows.iter().all(|r| r.closed_form_match == Some(true)));
        assert_eq!(rows[4].d, "5");
    }

    #[test]
    fn samples_and_diagonal() {
        let rows = table_rows(&spec(Family::Legendre, &[7], PairRule::Samples)).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].closed_form, "cor7");
        assert_eq!(rows[1].closed_form, "thm11:ell_tau_ell");
        assert!(rows.iter().all(|r| r.closed_form_match == Some(true)));
        let rows = table_rows(&spec(Family::TwinPrime, &[3], PairRule::Diagonal)).unwrap();
        assert_eq!(rows[0].closed_form_match, Some(true));
        let rows = table_rows(&spec(Family::Hall, &[31], PairRule::Samples)).unwrap();
        assert_eq!(rows.len(), 6);
    }

    #[test]
    fn spec_files_and_ranges() {
        let s = TableSpec::from_json(r#"{"family":"hall","params":[31,43],"pairs":"theorem"}"#).unwrap();
        assert_eq!(s.format, OutputFormat::Csv);
        assert!(TableSpec::from_json(r#"{"family":"hall","params":[31]}"#).is_err());
        assert_eq!(family_params(Family::Legendre, 3, 20), [3, 7, 11, 19]);
        assert_eq!(family_params(Family::TwinPrime, 1, 20), [3, 5, 11, 17]);
        assert_eq!(family_params(Family::Hall, 1, 300), [31, 43, 127, 223, 283]);
        let rows = table_rows(&spec(Family::MSequence, &[4], PairRule::Samples)).unwrap();
        assert_eq!(rows[0].closed_form, "cor7");
        assert!(rows.iter().all(|r| r.closed_form_match != Some(false)));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(table_rows(&spec(Family::Legendre, &[], PairRule::Theorem)).is_err());
        assert!(table_rows(&spec(Family::Legendre, &[13], PairRule::Theorem)).is_err());
        assert!(table_rows(&spec(Family::MSequence, &[9], PairRule::Shifts)).is_err());
        assert!(table_rows(&spec(Family::Hall, &[37], PairRule::Theorem)).is_err());
        assert!(table_rows(&spec(Family::TwinPrime, &[151], PairRule::Theorem)).is_err());
    }

    #[test]
    fn csv_and_json_round_trip() {
        let rows = table_rows(&spec(Family::TwinPrime, &[3, 5], PairRule::Theorem)).unwrap();
        let mut csv = Vec::new();
        write_rows(&rows, OutputFormat::Csv, &mut csv).unwrap();
        assert_eq!(read_csv_rows(&csv[..]).unwrap(), rows);
        let mut json = Vec::new();
        write_rows(&rows, OutputFormat::Json, &mut json).unwrap();
        assert_eq!(read_json_rows(&json[..]).unwrap(), rows);
        let header = String::from_utf8(csv).unwrap();
        assert!(header.starts_with("a,b,n,period,d_plus,d_minus,d,fc_log4,"));
    }
}

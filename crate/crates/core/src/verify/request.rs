//! JSON verification requests, shared by the CLI and the C interface.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{
    residue_suite, thm12_evidence_run, verify_cor5, verify_cor6, verify_cor7, verify_cyclotomic,
    verify_lemma9, verify_thm10, verify_thm11, verify_thm12, verify_thm3, verify_thm8,
    Thm11Case,
};
use crate::error::{Error, Result};
use crate::numtheory::lemma4_holds;
use crate::seqgen::from_tag;

/// One verification job, tagged by `"theorem"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "theorem", rename_all = "snake_case", deny_unknown_fields)]
pub enum Request {
    Lemma1 {
        periods: Vec<usize>,
        pairs: usize,
        seed: u64,
    },
    Lemma4 {
        n: u64,
    },
    Lemma9 {
        k: u32,
        #[serde(default)]
        poly: Option<String>,
    },
    Cyclotomic {
        p: u64,
    },
    Thm3 {
        a: String,
        b: String,
    },
    Cor5 {
        a: String,
        b: String,
    },
    Cor6 {
        a: String,
        b: String,
        shift: i64,
    },
    Cor7 {
        a: String,
    },
    Thm8 {
        k: u32,
        l: i64,
        #[serde(default)]
        poly: Option<String>,
    },
    Thm10 {
        p: u64,
    },
    Thm11 {
        p: u64,
        case: String,
    },
    Thm12 {
        p: u64,
        #[serde(default)]
        generator: Option<u64>,
    },
    Thm12Run {
        primes: Vec<u64>,
    },
}

/// Result of a request: whether the check matched, and its JSON report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Outcome {
    pub matched: bool,
    pub report: Value,
}

fn parse_poly(v: &Option<String>) -> Result<Option<u64>> {
    v.as_deref()
        .map(|s| {
            let hex = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
            u64::from_str_radix(hex, 16)
                .map_err(|_| Error::Parse(format!("bad polynomial {s:?}")))
        })
        .transpose()
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Internal(format!("JSON encoding failed: {e}")))
}

fn verdict(v: super::TheoremVerdict) -> Result<Outcome> {
    Ok(Outcome {
        matched: v.matched,
        report: to_value(&v)?,
    })
}

impl Request {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad request: {e}")))
    }
}

pub fn run_request(req: &Request) -> Result<Outcome> {
    match req {
        Request::Lemma1 {
            periods,
            pairs,
            seed,
        } => {
            let r = residue_suite(periods, *pairs, *seed)?;
            Ok(Outcome {
                matched: r.passed(),
                report: to_value(&r)?,
            })
        }
        Request::Lemma4 { n } => {
            let holds = lemma4_holds(*n);
            Ok(Outcome {
                matched: holds,
                report: serde_json::json!({ "n": n, "holds": holds }),
            })
        }
        Request::Lemma9 { k, poly } => {
            let r = verify_lemma9(*k, parse_poly(poly)?)?;
            Ok(Outcome {
                matched: r.holds,
                report: to_value(&r)?,
            })
        }
        Request::Cyclotomic { p } => {
            let r = verify_cyclotomic(*p)?;
            Ok(Outcome {
                matched: r.formula_matches && r.product_relation_holds,
                report: to_value(&r)?,
            })
        }
        Request::Thm3 { a, b } => verdict(verify_thm3(&from_tag(a)?, &from_tag(b)?)?),
        Request::Cor5 { a, b } => verdict(verify_cor5(&from_tag(a)?, &from_tag(b)?)?),
        Request::Cor6 { a, b, shift } => {
            verdict(verify_cor6(&from_tag(a)?, &from_tag(b)?, *shift)?)
        }
        Request::Cor7 { a } => verdict(verify_cor7(&from_tag(a)?)?),
        Request::Thm8 { k, l, poly } => verdict(verify_thm8(*k, *l, parse_poly(poly)?)?),
        Request::Thm10 { p } => verdict(verify_thm10(*p)?),
        Request::Thm11 { p, case } => verdict(verify_thm11(*p, case.parse::<Thm11Case>()?)?),
        Request::Thm12 { p, generator } => {
            let e = verify_thm12(*p, *generator)?;
            Ok(Outcome {
                matched: e.matched(),
                report: to_value(&e)?,
            })
        }
        Request::Thm12Run { primes } => {
            let s = thm12_evidence_run(primes)?;
            Ok(Outcome {
                matched: s.consistent,
                report: to_value(&s)?,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_runs() {
        let req = Request::from_json(r#"{"theorem":"thm8","k":3,"l":2}"#).unwrap();
        let out = run_request(&req).unwrap();
        assert!(out.matched);
        assert_eq!(out.report["theorem_id"], "thm8");
        assert_eq!(out.report["computed"]["d_decimal"], "1");

        let req = Request::from_json(r#"{"theorem":"thm11","p":7,"case":"ell_ellprime"}"#).unwrap();
        assert!(run_request(&req).unwrap().matched);

        let req = Request::from_json(r#"{"theorem":"lemma9","k":4,"poly":"0x19"}"#).unwrap();
        assert!(run_request(&req).unwrap().matched);
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(Request::from_json(r#"{"theorem":"thm99"}"#).is_err());
        assert!(Request::from_json(r#"{"theorem":"thm8","k":3}"#).is_err());
        assert!(Request::from_json(r#"{"theorem":"thm10","p":5,"x":1}"#).is_err());
        let req = Request::from_json(r#"{"theorem":"thm11","p":7,"case":"nope"}"#).unwrap();
        assert!(matches!(run_request(&req), Err(Error::Parse(_))));
    }
}

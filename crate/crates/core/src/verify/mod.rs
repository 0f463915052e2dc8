//! Theorem checks that bind the sequence generators to the 4-adic analytics.
//!
//! Each check builds its inputs from family parameters, computes the
//! complexity from the definition (`gcd(S(4), 4^N - 1)`), and compares it with
//! the closed form as exact `(N, d)` pairs.

mod request;
mod table;

pub use request::{run_request, Outcome, Request};
pub use table::{
    family_params, read_csv_rows, read_json_rows, run_table, table_rows, write_rows, Family, OutputFormat,
    PairRule, TableRow, TableSpec,
};

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::adic::{
    cor2_residues, d_split, four_adic_complexity, lemma1_residues, round6,
    signed_correlation_sum, ExactComplexity,
};
use crate::error::{Error, Result};
use crate::interleave::interleave;
use crate::numtheory::{gcd, is_prime, pow4_minus1, pow4_plus1, signed_residue, GF2kField, Natural};
use crate::seqgen::{
    hall_default_generator, hall_parameter, hall_sequence, is_ideal, legendre_sequence,
    m_sequence, m_sequence_in, twin_prime_sequence, BinarySequence, LegendreVariant,
};

/// Largest extension degree for m-sequence checks.
pub const MAX_K: u32 = 8;
pub const MAX_LEGENDRE_P: u64 = 499;
pub const MAX_TWIN_P: u64 = 149;
pub const MAX_HALL_P: u64 = 6427;

impl Serialize for ExactComplexity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ExactComplexity", 4)?;
        st.serialize_field("period", &self.period())?;
        st.serialize_field("d_decimal", &self.divisor().to_string())?;
        st.serialize_field("ratio_decimal", &self.ratio().to_string())?;
        st.serialize_field("fc_log4", &round6(self.value()))?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    pub parameters: BTreeMap<String, String>,
    /// Value predicted by the closed form.
    pub expected: ExactComplexity,
    /// Value from `gcd(S(4), 4^N - 1)`.
    pub computed: ExactComplexity,
    #[serde(rename = "match")]
    pub matched: bool,
    pub notes: String,
}

impl TheoremVerdict {
    fn new(
        theorem_id: &str,
        parameters: &[(&str, String)],
        expected: ExactComplexity,
        computed: ExactComplexity,
        notes: impl Into<String>,
    ) -> Self {
        let matched = expected == computed;
        Self {
            theorem_id: theorem_id.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            expected,
            computed,
            matched,
            notes: notes.into(),
        }
    }
}

fn require_ideal(s: &BinarySequence) -> Result<()> {
    if !is_ideal(s) {
        return Err(Error::Precondition(format!(
            "{} does not have ideal autocorrelation",
            s.provenance()
        )));
    }
    Ok(())
}

fn require_same_period(a: &BinarySequence, b: &BinarySequence) -> Result<usize> {
    if a.period() != b.period() {
        return Err(Error::Precondition(format!(
            "period mismatch: {} vs {}",
            a.period(),
            b.period()
        )));
    }
    Ok(a.period())
}

fn require_pair(a: &BinarySequence, b: &BinarySequence) -> Result<usize> {
    let n = require_same_period(a, b)?;
    require_ideal(a)?;
    require_ideal(b)?;
    Ok(n)
}

fn check_range(name: &str, value: u64, max: u64) -> Result<()> {
    if value > max {
        return Err(Error::param(format!(
            "{name} = {value} exceeds the desk-scale ceiling {max}"
        )));
    }
    Ok(())
}

/// Complexity of `w(a, b)` from the definition.
pub fn complexity_of_pair(a: &BinarySequence, b: &BinarySequence) -> Result<ExactComplexity> {
    Ok(four_adic_complexity(&interleave(a, b)?))
}

/// Closed form `(4^n - 1)(4^n + 1)/d_+` with `d_+ = gcd(sum s t 4^(2l), 4^n + 1)`.
pub fn theorem3_closed_form(a: &BinarySequence, b: &BinarySequence) -> Result<ExactComplexity> {
    let n = require_same_period(a, b)?;
    let plus = pow4_plus1(n as u64);
    let residue = signed_correlation_sum(a, b, &plus)?;
    ExactComplexity::from_divisor(2 * n, gcd(&residue, &plus))
}

fn pair_params(a: &BinarySequence, b: &BinarySequence) -> Vec<(&'static str, String)> {
    vec![
        ("a", a.provenance().to_string()),
        ("b", b.provenance().to_string()),
        ("n", a.period().to_string()),
    ]
}

/// `w(a, b)` and `w(b, a)` have equal complexity.
pub fn verify_cor5(a: &BinarySequence, b: &BinarySequence) -> Result<TheoremVerdict> {
    require_pair(a, b)?;
    Ok(TheoremVerdict::new(
        "cor5",
        &pair_params(a, b),
        complexity_of_pair(a, b)?,
        complexity_of_pair(b, a)?,
        "expected = FC(w(a,b)), computed = FC(w(b,a))",
    ))
}

/// Shift invariance `w(L^e a, L^e b)` and complement invariance `w(C a, b)`.
pub fn verify_cor6(a: &BinarySequence, b: &BinarySequence, e: i64) -> Result<TheoremVerdict> {
    require_pair(a, b)?;
    let base = complexity_of_pair(a, b)?;
    let shifted = complexity_of_pair(&a.shift(e), &b.shift(e))?;
    let complemented = complexity_of_pair(&a.complement(), b)?;
    let shift_ok = shifted == base;
    let complement_ok = complemented == base;
    let mut params = pair_params(a, b);
    params.push(("shift", e.to_string()));
    let mut verdict = TheoremVerdict::new(
        "cor6",
        &params,
        base,
        shifted,
        format!(
            "computed = FC(w(L^e a, L^e b)); shift: {}; complement FC(w(C a, b)) = {}: {}",
            if shift_ok { "match" } else { "mismatch" },
            complemented.divisor(),
            if complement_ok { "match" } else { "mismatch" },
        ),
    );
    verdict.matched = shift_ok && complement_ok;
    Ok(verdict)
}

/// `w(a, a)` has `d = (4^n + 1)/5`.
pub fn verify_cor7(a: &BinarySequence) -> Result<TheoremVerdict> {
    require_ideal(a)?;
    let n = a.period();
    let expected = ExactComplexity::from_divisor(2 * n, pow4_plus1(n as u64) / 5u32)?;
    Ok(TheoremVerdict::new(
        "cor7",
        &[("a", a.provenance().to_string()), ("n", n.to_string())],
        expected,
        complexity_of_pair(a, a)?,
        "expected d = (4^n + 1)/5",
    ))
}

/// Definition-level complexity equals the closed form, and `d_- = 1`.
pub fn verify_thm3(a: &BinarySequence, b: &BinarySequence) -> Result<TheoremVerdict> {
    require_pair(a, b)?;
    let w = interleave(a, b)?;
    let (_, d_minus) = d_split(&w)?;
    let mut verdict = TheoremVerdict::new(
        "thm3",
        &pair_params(a, b),
        theorem3_closed_form(a, b)?,
        four_adic_complexity(&w),
        format!("d_minus = {d_minus}"),
    );
    verdict.matched &= d_minus == Natural::from(1u32);
    Ok(verdict)
}

fn field_for(k: u32, poly: Option<u64>) -> Result<GF2kField> {
    check_range("k", k as u64, MAX_K as u64)?;
    match poly {
        Some(m) => GF2kField::with_modulus(k, m),
        None => GF2kField::new(k),
    }
}

fn full_complexity(period: usize) -> Result<ExactComplexity> {
    ExactComplexity::from_divisor(period, Natural::from(1u32))
}

/// `w(m, L^l(m))` reaches the maximum `log4(4^(2n) - 1)`.
pub fn verify_thm8(k: u32, l: i64, poly: Option<u64>) -> Result<TheoremVerdict> {
    let field = field_for(k, poly)?;
    let m = m_sequence_in(&field);
    let n = m.period();
    if l.rem_euclid(n as i64) == 0 {
        return Err(Error::param(format!("shift {l} is a multiple of the period {n}")));
    }
    let b = m.shift(l);
    Ok(TheoremVerdict::new(
        "thm8",
        &[
            ("k", k.to_string()),
            ("l", l.rem_euclid(n as i64).to_string()),
            ("poly", format!("{:#x}", field.modulus())),
        ],
        full_complexity(2 * n)?,
        complexity_of_pair(&m, &b)?,
        "expected d = 1",
    ))
}

/// The product of `R = sum (-1)^T(theta^l) 4^(2l)` and its conjugate modulo `4^n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma9Report {
    pub k: u32,
    pub n: usize,
    pub poly: String,
    pub r_decimal: String,
    pub r_bar_decimal: String,
    pub product_decimal: String,
    /// `n + 1 - (4^n + 1)/5` reduced.
    pub expected_decimal: String,
    pub holds: bool,
}

pub fn verify_lemma9(k: u32, poly: Option<u64>) -> Result<Lemma9Report> {
    let field = field_for(k, poly)?;
    let m = m_sequence_in(&field);
    let n = m.period();
    let modulus = pow4_plus1(n as u64);
    let bits = m.bits();

    let mut pos = Natural::zero();
    let mut neg = Natural::zero();
    let mut pos_bar = Natural::zero();
    let mut neg_bar = Natural::zero();
    for (l, &bit) in bits.iter().enumerate() {
        // 4^(-2l) ≡ 4^(2(n - l)) since 4^(2n) ≡ 1 mod 4^n + 1
        let inv = 4 * ((n - l) % n) as u64;
        let (fwd, bwd) = if bit == 0 {
            (&mut pos, &mut pos_bar)
        } else {
            (&mut neg, &mut neg_bar)
        };
        fwd.set_bit(4 * l as u64, true);
        bwd.set_bit(inv, true);
    }
    let r = signed_residue(&pos, &neg, &modulus);
    let r_bar = signed_residue(&pos_bar, &neg_bar, &modulus);
    let product = (&r * &r_bar) % &modulus;
    let expected = signed_residue(
        &Natural::from(n as u64 + 1),
        &(&modulus / 5u32),
        &modulus,
    );
    Ok(Lemma9Report {
        k,
        n,
        poly: format!("{:#x}", field.modulus()),
        r_decimal: r.to_string(),
        r_bar_decimal: r_bar.to_string(),
        product_decimal: product.to_string(),
        holds: product == expected,
        expected_decimal: expected.to_string(),
    })
}

/// `w(t, M_{-1}(t))` reaches the maximum for the twin-prime sequence.
pub fn verify_thm10(p: u64) -> Result<TheoremVerdict> {
    check_range("p", p, MAX_TWIN_P)?;
    let t = twin_prime_sequence(p)?;
    let n = t.period();
    Ok(TheoremVerdict::new(
        "thm10",
        &[("p", p.to_string()), ("n", n.to_string())],
        full_complexity(2 * n)?,
        complexity_of_pair(&t, &t.reversed())?,
        "expected d = 1",
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Thm11Case {
    /// `w(l, l')`
    EllEllPrime,
    /// `w(l, τ(l))`
    EllTauEll,
    /// `w(l', τ(l'))`
    EllPrimeTauEllPrime,
    /// `w(l, τ(l'))`
    EllTauEllPrime,
}

impl Thm11Case {
    pub const ALL: [Thm11Case; 4] = [
        Thm11Case::EllEllPrime,
        Thm11Case::EllTauEll,
        Thm11Case::EllPrimeTauEllPrime,
        Thm11Case::EllTauEllPrime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Thm11Case::EllEllPrime => "ell_ellprime",
            Thm11Case::EllTauEll => "ell_tau_ell",
            Thm11Case::EllPrimeTauEllPrime => "ellprime_tau_ellprime",
            Thm11Case::EllTauEllPrime => "ell_tau_ellprime",
        }
    }

    /// The interleaved pair for this case.
    pub fn pair(self, p: u64) -> Result<(BinarySequence, BinarySequence)> {
        let ell = legendre_sequence(p, LegendreVariant::Ell)?;
        let ell_prime = legendre_sequence(p, LegendreVariant::EllPrime)?;
        Ok(match self {
            Thm11Case::EllEllPrime => (ell, ell_prime),
            Thm11Case::EllTauEll => {
                let tau = ell.reversed();
                (ell, tau)
            }
            Thm11Case::EllPrimeTauEllPrime => {
                let tau = ell_prime.reversed();
                (ell_prime, tau)
            }
            Thm11Case::EllTauEllPrime => (ell, ell_prime.reversed()),
        })
    }

    /// Divisor predicted for prime `p`.
    pub fn expected_divisor(self, p: u64) -> Natural {
        match self {
            Thm11Case::EllTauEllPrime => pow4_plus1(p) / 5u32,
            _ if (p + 3).is_multiple_of(5) => Natural::from(5u32),
            _ => Natural::from(1u32),
        }
    }
}

impl std::str::FromStr for Thm11Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Thm11Case::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem 11 case {s:?}")))
    }
}

pub fn verify_thm11(p: u64, case: Thm11Case) -> Result<TheoremVerdict> {
    check_range("p", p, MAX_LEGENDRE_P)?;
    let (a, b) = case.pair(p)?;
    let expected = ExactComplexity::from_divisor(2 * p as usize, case.expected_divisor(p))?;
    let branch = match case {
        Thm11Case::EllTauEllPrime => "d = (4^p + 1)/5",
        _ if (p + 3).is_multiple_of(5) => "5 | p - 2, d = 5",
        _ => "5 does not divide p - 2, d = 1",
    };
    Ok(TheoremVerdict::new(
        "thm11",
        &[("p", p.to_string()), ("case", case.as_str().to_string())],
        expected,
        complexity_of_pair(&a, &b)?,
        branch,
    ))
}

/// Which reading of the Hall-sequence result the computations back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchSupport {
    /// `d = 5` iff `p ≡ 3 (mod 5)`.
    Statement,
    /// `d = 5` iff `p ≡ 2 (mod 5)`.
    Proof,
    Both,
    Neither,
}

impl BranchSupport {
    fn from_flags(statement: bool, proof: bool) -> Self {
        match (statement, proof) {
            (true, true) => BranchSupport::Both,
            (true, false) => BranchSupport::Statement,
            (false, true) => BranchSupport::Proof,
            (false, false) => BranchSupport::Neither,
        }
    }
}

/// Evidence for `w(h, M_{-1}(h))` at one Hall prime. Both candidate
/// predictions are recorded; neither is assumed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thm12Evidence {
    pub p: u64,
    pub x: i64,
    pub generator: u64,
    pub p_mod5: u64,
    pub computed: ExactComplexity,
    pub statement_d: u32,
    pub proof_d: u32,
    pub statement_holds: bool,
    pub proof_holds: bool,
    pub supports: BranchSupport,
    /// `d` is 1 or 5.
    pub d_in_1_5: bool,
}

impl Thm12Evidence {
    pub fn matched(&self) -> bool {
        self.d_in_1_5 && (self.statement_holds || self.proof_holds)
    }
}

pub fn verify_thm12(p: u64, generator: Option<u64>) -> Result<Thm12Evidence> {
    check_range("p", p, MAX_HALL_P)?;
    let x = hall_parameter(p).ok_or_else(|| {
        Error::param(format!("{p} is not a prime of the form 4x^2 + 27"))
    })?;
    let h = hall_sequence(p, generator)?;
    let generator = match generator {
        Some(g) => g,
        None => hall_default_generator(p)?,
    };
    let computed = complexity_of_pair(&h, &h.reversed())?;
    let d = computed.divisor().clone();
    let statement_d = if p % 5 == 3 { 5 } else { 1 };
    let proof_d = if p % 5 == 2 { 5 } else { 1 };
    let statement_holds = d == Natural::from(statement_d);
    let proof_holds = d == Natural::from(proof_d);
    Ok(Thm12Evidence {
        p,
        x,
        generator,
        p_mod5: p % 5,
        d_in_1_5: d == Natural::from(1u32) || d == Natural::from(5u32),
        computed,
        statement_d,
        proof_d,
        statement_holds,
        proof_holds,
        supports: BranchSupport::from_flags(statement_holds, proof_holds),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thm12Summary {
    pub rows: Vec<Thm12Evidence>,
    /// Residues of `p mod 5` at which `d = 5` was observed.
    pub d5_residues: Vec<u64>,
    /// Every `d` is 1 or 5, and `d = 5` occurs on exactly one residue class, for every sample prime in it.
    pub consistent: bool,
    pub supports: BranchSupport,
}

pub fn thm12_evidence_run(primes: &[u64]) -> Result<Thm12Summary> {
    use rayon::prelude::*;

    let rows = primes
        .par_iter()
        .map(|&p| verify_thm12(p, None))
        .collect::<Result<Vec<_>>>()?;
    let five = Natural::from(5u32);
    let mut d5_residues: Vec<u64> = rows
        .iter()
        .filter(|r| *r.computed.divisor() == five)
        .map(|r| r.p_mod5)
        .collect();
    d5_residues.sort_unstable();
    d5_residues.dedup();
    let class_exact = d5_residues.len() == 1
        && rows
            .iter()
            .filter(|r| r.p_mod5 == d5_residues[0])
            .all(|r| *r.computed.divisor() == five);
    let consistent = rows.iter().all(|r| r.d_in_1_5) && class_exact;
    let supports = BranchSupport::from_flags(
        rows.iter().all(|r| r.statement_holds),
        rows.iter().all(|r| r.proof_holds),
    );
    Ok(Thm12Summary {
        rows,
        d5_residues,
        consistent,
        supports,
    })
}

/// Random-pair check of the two residue formulas for `W(4)`; they hold for any binary pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueSuiteReport {
    pub seed: u64,
    pub periods: Vec<usize>,
    pub pairs_per_period: usize,
    pub checked: usize,
    pub lemma1_failures: Vec<(String, String)>,
    pub cor2_failures: Vec<(String, String)>,
}

impl ResidueSuiteReport {
    pub fn passed(&self) -> bool {
        self.lemma1_failures.is_empty() && self.cor2_failures.is_empty()
    }
}

pub fn random_sequence(rng: &mut impl Rng, n: usize) -> Result<BinarySequence> {
    BinarySequence::from_bits((0..n).map(|_| rng.gen_range(0..2u8)).collect())
}

pub fn residue_suite(periods: &[usize], pairs: usize, seed: u64) -> Result<ResidueSuiteReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report = ResidueSuiteReport {
        seed,
        periods: periods.to_vec(),
        pairs_per_period: pairs,
        checked: 0,
        lemma1_failures: Vec::new(),
        cor2_failures: Vec::new(),
    };
    for &n in periods {
        for _ in 0..pairs {
            let a = random_sequence(&mut rng, n)?;
            let b = random_sequence(&mut rng, n)?;
            let names = || (a.provenance().to_string(), b.provenance().to_string());
            if !lemma1_residues(&a, &b)?.equal {
                report.lemma1_failures.push(names());
            }
            let (plus, minus) = cor2_residues(&a, &b)?;
            if !(plus.equal && minus.equal) {
                report.cor2_failures.push(names());
            }
            report.checked += 1;
        }
    }
    Ok(report)
}

/// Cyclotomic-number table against its closed form, and the period product relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicReport {
    pub p: u64,
    pub g: u64,
    pub c: i64,
    pub d: i64,
    pub counts: [[u64; 3]; 3],
    pub formula_matches: bool,
    pub product_relation_holds: bool,
}

pub fn verify_cyclotomic(p: u64) -> Result<CyclotomicReport> {
    if !is_prime(p) || p % 3 != 1 {
        return Err(Error::param(format!("{p} is not a prime congruent to 1 mod 3")));
    }
    let g = crate::numtheory::primitive_root(p)?;
    let table = crate::numtheory::cyclotomic_numbers_order3(p, g)?;
    Ok(CyclotomicReport {
        p,
        g,
        c: table.c,
        d: table.d,
        counts: table.counts,
        formula_matches: table.matches_formula(),
        product_relation_holds: crate::numtheory::period_product_relation_holds(p, g)?,
    })
}

/// Standard family representatives of period `n`, for batch checks.
pub fn family_members(n: usize) -> Result<Vec<BinarySequence>> {
    let mut out = Vec::new();
    let n64 = n as u64;
    if (n + 1).is_power_of_two() && n >= 3 {
        out.push(m_sequence((n + 1).trailing_zeros())?);
    }
    if is_prime(n64) && n % 4 == 3 {
        out.push(legendre_sequence(n64, LegendreVariant::Ell)?);
        out.push(legendre_sequence(n64, LegendreVariant::EllPrime)?);
    }
    if hall_parameter(n64).is_some() {
        out.push(hall_sequence(n64, None)?);
    }
    // n = p(p + 2)
    let root = (n as f64 + 1.0).sqrt().round() as u64;
    if root >= 2 && (root - 1) * (root + 1) == n64 && is_prime(root - 1) && is_prime(root + 1) {
        out.push(twin_prime_sequence(root - 1)?);
    }
    Ok(out)
}

/// Lower bound: `(4^(2n) - 1)/d >= 4^n - 1`.
pub fn meets_lower_bound(fc: &ExactComplexity) -> bool {
    let n = fc.period() as u64 / 2;
    *fc.ratio() >= pow4_minus1(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqgen::from_tag;

    fn tag(t: &str) -> BinarySequence {
        from_tag(t).unwrap()
    }

    #[test]
    fn cor5_examples() {
        let l = tag("legendre:p=7,variant=ell");
        let lp = tag("legendre:p=7,variant=ell_prime");
        assert!(verify_cor5(&l, &lp).unwrap().matched);
        assert!(verify_cor5(&l, &l).unwrap().matched);
        let m = tag("m:k=3");
        assert!(verify_cor5(&m, &m.shift(2)).unwrap().matched);
    }

    #[test]
    fn cor5_requires_ideal_inputs() {
        let bad = tag("bits:0000000");
        let l = tag("legendre:p=7,variant=ell");
        assert!(matches!(verify_cor5(&bad, &l), Err(Error::Precondition(_))));
        assert!(matches!(
            verify_cor5(&l, &tag("m:k=2")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cor6_examples() {
        let l3 = tag("legendre:p=3,variant=ell");
        assert!(verify_cor6(&l3, &l3, 1).unwrap().matched);
        assert!(verify_cor6(&l3, &l3, 0).unwrap().matched);
        let l = tag("legendre:p=7,variant=ell");
        let lp = tag("legendre:p=7,variant=ell_prime");
        assert!(verify_cor6(&l, &lp, 3).unwrap().matched);
    }

    #[test]
    fn cor7_examples() {
        for t in ["legendre:p=3,variant=ell", "m:k=2"] {
            let v = verify_cor7(&tag(t)).unwrap();
            assert!(v.matched);
            assert_eq!(v.computed.divisor(), &Natural::from(13u32));
        }
        let v = verify_cor7(&tag("twin:p=3")).unwrap();
        assert!(v.matched);
        assert_eq!(v.computed.divisor(), &(pow4_plus1(15) / 5u32));
    }

    #[test]
    fn thm8_examples() {
        assert!(verify_thm8(2, 1, None).unwrap().matched);
        for l in 1..=6 {
            assert!(verify_thm8(3, l, None).unwrap().matched);
        }
        assert!(verify_thm8(4, 5, None).unwrap().matched);
        assert!(verify_thm8(3, 7, None).is_err());
        assert!(verify_thm8(3, 0, None).is_err());
        assert!(verify_thm8(9, 1, None).is_err());
    }

    #[test]
    fn thm8_under_both_quartic_moduli() {
        for poly in [0x13, 0x19] {
            for l in 1..15 {
                assert!(verify_thm8(4, l, Some(poly)).unwrap().matched);
            }
        }
        assert!(verify_thm8(4, 1, Some(0x1f)).is_err());
    }

    #[test]
    fn lemma9_examples() {
        let r = verify_lemma9(2, None).unwrap();
        assert_eq!(r.r_decimal, "54");
        assert_eq!(r.r_bar_decimal, "54");
        assert_eq!(r.product_decimal, "56");
        assert!(r.holds);
        assert!(verify_lemma9(3, None).unwrap().holds);
        assert!(verify_lemma9(5, None).unwrap().holds);
    }

    #[test]
    fn thm10_examples() {
        for p in [3, 5, 11] {
            assert!(verify_thm10(p).unwrap().matched, "p = {p}");
        }
        assert!(verify_thm10(7).is_err());
        assert!(verify_thm10(151).is_err());
    }

    #[test]
    fn thm11_examples() {
        let v = verify_thm11(3, Thm11Case::EllEllPrime).unwrap();
        assert!(v.matched);
        assert_eq!(v.computed.divisor(), &Natural::from(1u32));
        let v = verify_thm11(7, Thm11Case::EllEllPrime).unwrap();
        assert!(v.matched);
        assert_eq!(v.computed.divisor(), &Natural::from(5u32));
        let v = verify_thm11(7, Thm11Case::EllTauEllPrime).unwrap();
        assert!(v.matched);
        assert_eq!(v.computed.divisor(), &Natural::from(3277u32));
        assert!(verify_thm11(13, Thm11Case::EllTauEll).is_err());
    }

    #[test]
    fn thm12_small_primes() {
        let e = verify_thm12(31, None).unwrap();
        assert_eq!((e.statement_d, e.proof_d), (1, 1));
        assert!(e.statement_holds && e.proof_holds);
        let e = verify_thm12(43, None).unwrap();
        assert_eq!((e.statement_d, e.proof_d), (5, 1));
        assert_eq!(e.computed.divisor(), &Natural::from(5u32));
        assert_eq!(e.supports, BranchSupport::Statement);
        assert!(verify_thm12(37, None).is_err());
    }

    #[test]
    fn thm12_generator_invariance() {
        let base = verify_thm12(31, None).unwrap();
        for g in [3, 12, 17, 24] {
            let e = verify_thm12(31, Some(g)).unwrap();
            assert_eq!(e.computed, base.computed);
            assert_eq!(e.supports, base.supports);
        }
    }

    #[test]
    fn thm3_examples() {
        for n in [7usize, 15, 31] {
            let members = family_members(n).unwrap();
            for a in &members {
                for b in &members {
                    let v = verify_thm3(a, b).unwrap();
                    assert!(v.matched, "{} {}", a.provenance(), b.provenance());
                }
            }
        }
        let v = verify_thm3(&tag("m:k=4"), &tag("twin:p=3")).unwrap();
        assert!(v.matched);
    }

    #[test]
    fn family_member_lists() {
        let names = |n| {
            family_members(n)
                .unwrap()
                .into_iter()
                .map(|s| s.provenance().to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(7), ["m:k=3", "legendre:p=7,variant=ell", "legendre:p=7,variant=ell_prime"]);
        assert_eq!(names(15), ["m:k=4", "twin:p=3"]);
        assert_eq!(names(35), ["twin:p=5"]);
        assert_eq!(names(31).len(), 4);
    }

    #[test]
    fn residue_suite_small() {
        let r = residue_suite(&[3, 5, 7], 20, 7).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 60);
        assert_eq!(residue_suite(&[3, 5], 5, 11).unwrap(), residue_suite(&[3, 5], 5, 11).unwrap());
    }
}

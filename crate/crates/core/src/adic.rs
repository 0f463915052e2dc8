//! Exact 4-adic analytics.
//!
//! A quaternary sequence of period `N` is read as the integer
//! `S(4) = sum w_i 4^i`; its 4-adic complexity is `log4((4^N - 1) / d)` with
//! `d = gcd(S(4), 4^N - 1)`. All comparisons go through the exact pair
//! `(N, d)`; the logarithm is for display only.

use std::fmt;
use std::ops::{Add, AddAssign};

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interleave::{interleave, QuaternarySequence};
use crate::numtheory::{gcd, pow4_minus1, pow4_plus1, signed_residue, Natural};
use crate::seqgen::BinarySequence;

/// Element of `Z[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GaussianInteger {
    pub re: i64,
    pub im: i64,
}

impl GaussianInteger {
    pub const ZERO: Self = Self { re: 0, im: 0 };

    pub fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    /// `i^e` for any integer exponent.
    pub fn omega_pow(e: i64) -> Self {
        const POWERS: [GaussianInteger; 4] = [
            GaussianInteger { re: 1, im: 0 },
            GaussianInteger { re: 0, im: 1 },
            GaussianInteger { re: -1, im: 0 },
            GaussianInteger { re: 0, im: -1 },
        ];
        POWERS[e.rem_euclid(4) as usize]
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }
}

impl Add for GaussianInteger {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for GaussianInteger {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.im {
            0 => write!(f, "{}", self.re),
            im if im < 0 => write!(f, "{}-{}i", self.re, -im),
            im => write!(f, "{}+{}i", self.re, im),
        }
    }
}

/// 4-adic complexity as the exact pair `(N, d)`.
#[derive(Debug, Clone, Eq)]
pub struct ExactComplexity {
    period: usize,
    divisor: Natural,
    ratio: Natural,
}

impl PartialEq for ExactComplexity {
    fn eq(&self, other: &Self) -> bool {
        self.period == other.period && self.divisor == other.divisor
    }
}

impl ExactComplexity {
    /// Builds the complexity from a divisor of `4^N - 1`.
    pub fn from_divisor(period: usize, divisor: Natural) -> Result<Self> {
        let full = pow4_minus1(period as u64);
        if divisor.is_zero() || !(&full % &divisor).is_zero() {
            return Err(Error::param(format!(
                "{divisor} does not divide 4^{period} - 1"
            )));
        }
        let ratio = full / &divisor;
        Ok(Self {
            period,
            divisor,
            ratio,
        })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn divisor(&self) -> &Natural {
        &self.divisor
    }

    /// `(4^N - 1) / d`.
    pub fn ratio(&self) -> &Natural {
        &self.ratio
    }

    /// `log4(ratio)`, approximate.
    pub fn value(&self) -> f64 {
        log2_natural(&self.ratio) / 2.0
    }
}

impl fmt::Display for ExactComplexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "log4((4^{} - 1)/{}) ≈ {:.6}", self.period, self.divisor, self.value())
    }
}

fn log2_natural(x: &Natural) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("64-bit value fits in f64");
    top.log2() + shift as f64
}

/// Verdict of a congruence check; both sides are reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueReport {
    pub modulus: Natural,
    pub lhs: Natural,
    pub rhs: Natural,
    pub equal: bool,
}

impl ResidueReport {
    fn new(modulus: Natural, lhs: &Natural, rhs: &Natural) -> Self {
        let lhs = lhs % &modulus;
        let rhs = rhs % &modulus;
        let equal = lhs == rhs;
        Self {
            modulus,
            lhs,
            rhs,
            equal,
        }
    }
}

/// `S(4) = sum_i w_i 4^i`.
pub fn s4_value(q: &QuaternarySequence) -> Natural {
    Natural::from_radix_le(q.digits(), 4).expect("digits are below 4")
}

pub fn four_adic_complexity(q: &QuaternarySequence) -> ExactComplexity {
    let n = q.period();
    let full = pow4_minus1(n as u64);
    let d = gcd(&s4_value(q), &full);
    let ratio = &full / &d;
    ExactComplexity {
        period: n,
        divisor: d,
        ratio,
    }
}

fn half_period(q: &QuaternarySequence) -> Result<u64> {
    let big_n = q.period();
    if !big_n.is_multiple_of(2) || (big_n / 2).is_multiple_of(2) {
        return Err(Error::param(format!(
            "period {big_n} is not twice an odd number"
        )));
    }
    Ok((big_n / 2) as u64)
}

/// `(gcd(S(4), 4^n + 1), gcd(S(4), 4^n - 1))` for a sequence of period `2n`, `n` odd.
pub fn d_split(q: &QuaternarySequence) -> Result<(Natural, Natural)> {
    let n = half_period(q)?;
    let s = s4_value(q);
    Ok((gcd(&s, &pow4_plus1(n)), gcd(&s, &pow4_minus1(n))))
}

fn check_pair(a: &BinarySequence, b: &BinarySequence) -> Result<usize> {
    if a.period() != b.period() {
        return Err(Error::param(format!(
            "period mismatch: {} vs {}",
            a.period(),
            b.period()
        )));
    }
    Ok(a.period())
}

/// `sum_{lambda : pred} 4^(2 lambda)`, exactly.
fn even_power_sum(n: usize, pred: impl Fn(usize) -> bool) -> Natural {
    let mut acc = Natural::zero();
    for l in (0..n).filter(|&l| pred(l)) {
        acc.set_bit(4 * l as u64, true);
    }
    acc
}

/// `sum s_lambda t_lambda 4^(2 lambda)` reduced mod `modulus`, with `s = (-1)^a`, `t = (-1)^b`.
pub fn signed_correlation_sum(
    a: &BinarySequence,
    b: &BinarySequence,
    modulus: &Natural,
) -> Result<Natural> {
    let n = check_pair(a, b)?;
    let (x, y) = (a.bits(), b.bits());
    let pos = even_power_sum(n, |l| x[l] == y[l]);
    let neg = even_power_sum(n, |l| x[l] != y[l]);
    Ok(signed_residue(&pos, &neg, modulus))
}

/// Residues of `W(4)` modulo `4^n + 1` and `4^n - 1` against their ±1 closed forms.
pub fn cor2_residues(
    a: &BinarySequence,
    b: &BinarySequence,
) -> Result<(ResidueReport, ResidueReport)> {
    let n = check_pair(a, b)?;
    let w = s4_value(&interleave(a, b)?);
    let plus = pow4_plus1(n as u64);
    let minus = pow4_minus1(n as u64);

    // -sum s t 4^(2l) mod 4^n + 1
    let st = signed_correlation_sum(a, b, &plus)?;
    let rhs_plus = signed_residue(&Natural::zero(), &st, &plus);

    // -2 sum s 4^(2l) mod 4^n - 1
    let bits = a.bits();
    let pos = even_power_sum(n, |l| bits[l] == 0);
    let neg = even_power_sum(n, |l| bits[l] == 1);
    let s = signed_residue(&pos, &neg, &minus);
    let rhs_minus = signed_residue(&Natural::zero(), &(s * 2u32), &minus);

    Ok((
        ResidueReport::new(plus, &w, &rhs_plus),
        ResidueReport::new(minus, &w, &rhs_minus),
    ))
}

/// `W(4)` against
/// `2(4^n-1) sum ab 4^(2l) + (4^n+3) sum a 4^(2l) + (1-4^n) sum b 4^(2l) + 4 (4^(2n)-1)/15`
/// modulo `4^(2n) - 1`.
pub fn lemma1_residues(a: &BinarySequence, b: &BinarySequence) -> Result<ResidueReport> {
    let n = check_pair(a, b)?;
    let w = s4_value(&interleave(a, b)?);
    let modulus = pow4_minus1(2 * n as u64);
    let (x, y) = (a.bits(), b.bits());
    let sum_ab = even_power_sum(n, |l| x[l] == 1 && y[l] == 1);
    let sum_a = even_power_sum(n, |l| x[l] == 1);
    let sum_b = even_power_sum(n, |l| y[l] == 1);
    let p4 = crate::numtheory::pow4(n as u64);

    let pos = (&p4 - 1u32) * sum_ab * 2u32 + (&p4 + 3u32) * sum_a + &modulus / 15u32 * 4u32;
    let neg = (&p4 - 1u32) * sum_b;
    let rhs = signed_residue(&pos, &neg, &modulus);
    Ok(ResidueReport::new(modulus, &w, &rhs))
}

/// `sum_l i^(w_(l+tau) - w_l)`.
pub fn autocorr_quaternary(q: &QuaternarySequence, tau: usize) -> GaussianInteger {
    let w = q.digits();
    let n = w.len();
    let mut acc = GaussianInteger::ZERO;
    for l in 0..n {
        acc += GaussianInteger::omega_pow(w[(l + tau) % n] as i64 - w[l] as i64);
    }
    acc
}

/// `A(tau)` for every `0 <= tau < N`.
pub fn autocorr_spectrum(q: &QuaternarySequence) -> Vec<GaussianInteger> {
    (0..q.period()).map(|t| autocorr_quaternary(q, t)).collect()
}

/// Every out-of-phase autocorrelation lies in `{0, -2}`.
pub fn has_optimal_autocorrelation(q: &QuaternarySequence) -> bool {
    let allowed = [GaussianInteger::new(0, 0), GaussianInteger::new(-2, 0)];
    (1..q.period()).all(|t| allowed.contains(&autocorr_quaternary(q, t)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl From<bool> for Verdict {
    fn from(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Complexity against the two resistance thresholds `(N-16)/4` and `(N-16)/6`.
#[derive(Debug, Clone, PartialEq)]
pub struct SecurityReport {
    pub fc_log4: f64,
    pub threshold_q4: f64,
    pub threshold_q6: f64,
    pub q4: Verdict,
    pub q6: Verdict,
}

/// `log4(ratio) > (N - 16) / denom`, decided as `ratio^denom > 4^(N-16)`.
fn exceeds(ratio: &Natural, period: usize, denom: u32) -> bool {
    if period < 16 {
        return true;
    }
    let bound = Natural::one() << (2 * (period - 16));
    ratio.pow(denom) > bound
}

pub fn security_margin(q: &QuaternarySequence) -> SecurityReport {
    security_margin_of(&four_adic_complexity(q))
}

pub fn security_margin_of(fc: &ExactComplexity) -> SecurityReport {
    let n = fc.period() as f64;
    SecurityReport {
        fc_log4: fc.value(),
        threshold_q4: (n - 16.0) / 4.0,
        threshold_q6: (n - 16.0) / 6.0,
        q4: exceeds(fc.ratio(), fc.period(), 4).into(),
        q6: exceeds(fc.ratio(), fc.period(), 6).into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    pub q4: Verdict,
    pub q6: Verdict,
}

/// JSON analysis record. Big integers are decimal strings; `d_plus` and
/// `d_minus` are null unless the period is twice an odd number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub period: usize,
    pub s4_decimal: String,
    pub d_decimal: String,
    pub d_plus_decimal: Option<String>,
    pub d_minus_decimal: Option<String>,
    pub ratio_decimal: String,
    pub fc_log4: f64,
    pub thresholds: Thresholds,
    pub autocorr_spectrum: Vec<[i64; 2]>,
}

/// Rounds to the 6 decimal places used in reports.
pub fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

pub fn analyze(q: &QuaternarySequence) -> AnalysisRecord {
    let fc = four_adic_complexity(q);
    let security = security_margin_of(&fc);
    let split = d_split(q).ok();
    AnalysisRecord {
        period: q.period(),
        s4_decimal: s4_value(q).to_string(),
        d_decimal: fc.divisor().to_string(),
        d_plus_decimal: split.as_ref().map(|(p, _)| p.to_string()),
        d_minus_decimal: split.as_ref().map(|(_, m)| m.to_string()),
        ratio_decimal: fc.ratio().to_string(),
        fc_log4: round6(fc.value()),
        thresholds: Thresholds {
            q4: security.q4,
            q6: security.q6,
        },
        autocorr_spectrum: autocorr_spectrum(q)
            .into_iter()
            .map(|g| [g.re, g.im])
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(digits: &[u8]) -> QuaternarySequence {
        QuaternarySequence::new(digits.to_vec()).unwrap()
    }

    fn seq(bits: &[u8]) -> BinarySequence {
        BinarySequence::from_bits(bits.to_vec()).unwrap()
    }

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn s4_examples() {
        assert_eq!(s4_value(&q(&[0, 3, 0, 1, 2, 1])), nat(1612));
        assert_eq!(s4_value(&q(&[0; 9])), nat(0));
        assert_eq!(s4_value(&q(&[3; 9])), pow4_minus1(9));
    }

    #[test]
    fn complexity_examples() {
        let fc = four_adic_complexity(&q(&[0, 3, 0, 1, 2, 1]));
        assert_eq!(fc.divisor(), &nat(13));
        assert_eq!(fc.ratio(), &nat(315));
        assert!((fc.value() - 315f64.ln() / 4f64.ln()).abs() < 1e-12);
        assert_eq!(round6(fc.value()), 4.149_604);

        let zero = four_adic_complexity(&q(&[0; 6]));
        assert_eq!(zero.divisor(), &pow4_minus1(6));
        assert_eq!(zero.value(), 0.0);
    }

    #[test]
    fn complexity_equality_ignores_nothing_but_pairs() {
        let a = ExactComplexity::from_divisor(6, nat(13)).unwrap();
        let b = four_adic_complexity(&q(&[0, 3, 0, 1, 2, 1]));
        assert_eq!(a, b);
        assert_ne!(a, ExactComplexity::from_divisor(6, nat(1)).unwrap());
        assert!(ExactComplexity::from_divisor(6, nat(2)).is_err());
        assert!(ExactComplexity::from_divisor(6, nat(0)).is_err());
    }

    #[test]
    fn log_of_huge_ratio() {
        let fc = ExactComplexity::from_divisor(12854, nat(1)).unwrap();
        assert!((fc.value() - 12854.0).abs() < 1e-9);
    }

    #[test]
    fn d_split_examples() {
        let (p, m) = d_split(&q(&[0, 3, 0, 1, 2, 1])).unwrap();
        assert_eq!((p, m), (nat(13), nat(1)));
        let (p, m) = d_split(&q(&[0; 6])).unwrap();
        assert_eq!((p, m), (pow4_plus1(3), pow4_minus1(3)));
        assert!(d_split(&q(&[0; 4])).is_err());
        assert!(d_split(&q(&[0; 5])).is_err());
    }

    #[test]
    fn corollary2_micro_example() {
        let a = seq(&[0, 0, 1]);
        let (plus, minus) = cor2_residues(&a, &a).unwrap();
        assert_eq!((plus.lhs.clone(), plus.rhs.clone()), (nat(52), nat(52)));
        assert!(plus.equal && minus.equal);
    }

    #[test]
    fn lemma1_micro_examples() {
        let a = seq(&[0, 0, 1]);
        let r = lemma1_residues(&a, &a).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (nat(1612), nat(1612)));
        let z = seq(&[0, 0, 0]);
        let r = lemma1_residues(&z, &z).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (nat(1092), nat(1092)));
        assert!(lemma1_residues(&a, &seq(&[0, 0, 1, 1, 1])).is_err());
    }

    #[test]
    fn autocorrelation_examples() {
        let w = q(&[0, 3, 0, 1, 2, 1]);
        assert_eq!(autocorr_quaternary(&w, 0), GaussianInteger::new(6, 0));
        assert_eq!(autocorr_quaternary(&w, 3), GaussianInteger::new(0, 0));
        let a1 = autocorr_quaternary(&w, 1);
        assert!(a1 == GaussianInteger::new(0, 0) || a1 == GaussianInteger::new(-2, 0));
        assert!(has_optimal_autocorrelation(&w));
    }

    #[test]
    fn omega_powers() {
        assert_eq!(GaussianInteger::omega_pow(-1), GaussianInteger::new(0, -1));
        assert_eq!(GaussianInteger::omega_pow(6), GaussianInteger::new(-1, 0));
        assert_eq!(GaussianInteger::new(1, -2).to_string(), "1-2i");
    }

    #[test]
    fn security_examples() {
        let s = security_margin(&q(&[0, 3, 0, 1, 2, 1]));
        assert_eq!((s.q4, s.q6), (Verdict::Pass, Verdict::Pass));
        assert!(s.threshold_q4 < 0.0);

        // all-zero sequence of period 40 has complexity 0 against thresholds 6 and 4
        let s = security_margin(&q(&[0; 40]));
        assert_eq!((s.q4, s.q6), (Verdict::Fail, Verdict::Fail));

        // ratio 4^6 - 1 at N = 48: FC just under 6, below (48-16)/4 = 8, above (48-16)/6
        let fc = ExactComplexity::from_divisor(48, pow4_minus1(48) / pow4_minus1(6)).unwrap();
        let s = security_margin_of(&fc);
        assert_eq!(s.q4, Verdict::Fail);
        assert_eq!(s.q6, Verdict::Pass);
    }

    #[test]
    fn analysis_record_shape() {
        let rec = analyze(&q(&[0, 3, 0, 1, 2, 1]));
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["s4_decimal"], "1612");
        assert_eq!(json["d_decimal"], "13");
        assert_eq!(json["d_plus_decimal"], "13");
        assert_eq!(json["d_minus_decimal"], "1");
        assert_eq!(json["ratio_decimal"], "315");
        assert_eq!(json["thresholds"]["q4"], "pass");
        assert_eq!(json["autocorr_spectrum"][0], serde_json::json!([6, 0]));
        let back: AnalysisRecord = serde_json::from_value(json).unwrap();
        assert_eq!(back, rec);
    }
}

//! Binary sequences with ideal autocorrelation and the transformation group
//! generated by complement, shift and sampling.
//!
//! Every generated sequence carries a provenance tag of the form
//! `family:key=value,...[+transform...]`, e.g. `legendre:p=7,variant=ell+M6`.
//! [`from_tag`] rebuilds a sequence from such a tag, so reports can name
//! sequences reproducibly.

use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{
    class_index, index_table, is_prime, is_primitive_root, legendre_symbol, GF2kField,
};

#[derive(Clone, PartialEq, Eq)]
pub struct BinarySequence {
    bits: Vec<u8>,
    provenance: String,
}

impl fmt::Debug for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.provenance)?;
        for b in &self.bits {
            write!(f, "{b}")?;
        }
        write!(f, "]")
    }
}

impl BinarySequence {
    /// Wraps one period of bits. The period must be odd and at least 3.
    pub fn new(bits: Vec<u8>, provenance: impl Into<String>) -> Result<Self> {
        let n = bits.len();
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::param(format!("period must be odd and >= 3, got {n}")));
        }
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::param(format!("binary digit out of range: {b}")));
        }
        Ok(Self {
            bits,
            provenance: provenance.into(),
        })
    }

    /// Sequence tagged by its own bit string, `bits:0110...`.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        let tag = format!("bits:{}", bits_string(&bits));
        Self::new(bits, tag)
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Bit at a periodic index.
    pub fn at(&self, i: i64) -> u8 {
        self.bits[i.rem_euclid(self.period() as i64) as usize]
    }

    /// The ±1 view `(-1)^bit`.
    pub fn signs(&self) -> impl Iterator<Item = i64> + '_ {
        self.bits.iter().map(|&b| 1 - 2 * b as i64)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    fn derived(&self, bits: Vec<u8>, step: String) -> Self {
        Self {
            bits,
            provenance: format!("{}+{}", self.provenance, step),
        }
    }

    /// `C(a)_i = 1 - a_i`.
    pub fn complement(&self) -> Self {
        self.derived(self.bits.iter().map(|b| 1 - b).collect(), "C".into())
    }

    /// `L^e(a)_i = a_(i+e)`.
    pub fn shift(&self, e: i64) -> Self {
        let n = self.period() as i64;
        let e = e.rem_euclid(n);
        let bits = (0..n).map(|i| self.at(i + e)).collect();
        self.derived(bits, format!("L{e}"))
    }

    /// `M_r(a)_i = a_(r i)`; `r` must be a unit mod the period.
    pub fn sample(&self, r: i64) -> Result<Self> {
        let n = self.period() as i64;
        let r = r.rem_euclid(n);
        if num_integer::gcd(r, n) != 1 {
            return Err(Error::param(format!("sample factor {r} is not coprime to {n}")));
        }
        let bits = (0..n).map(|i| self.at(r * i)).collect();
        Ok(self.derived(bits, format!("M{r}")))
    }

    /// `M_{-1}`, the reversal map written τ for the Legendre and twin-prime families.
    pub fn reversed(&self) -> Self {
        self.sample(-1).expect("-1 is always a unit")
    }
}

fn bits_string(bits: &[u8]) -> String {
    bits.iter().map(|b| char::from(b'0' + b)).collect()
}

/// `m_i = T(theta^i)` over the field with the smallest primitive modulus of degree `k`.
pub fn m_sequence(k: u32) -> Result<BinarySequence> {
    let field = GF2kField::new(k)?;
    Ok(m_sequence_in(&field).with_provenance(format!("m:k={k}")))
}

/// m-sequence over a given field; the tag records the modulus.
pub fn m_sequence_in(field: &GF2kField) -> BinarySequence {
    let bits = field.powers().map(|e| field.trace(e)).collect();
    let tag = format!("m:k={},poly={:#x}", field.degree(), field.modulus());
    BinarySequence::new(bits, tag).expect("2^k - 1 is odd and >= 3")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LegendreVariant {
    /// `l_0 = 0`.
    Ell,
    /// `l'_0 = 1`.
    EllPrime,
}

impl LegendreVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            LegendreVariant::Ell => "ell",
            LegendreVariant::EllPrime => "ell_prime",
        }
    }
}

impl std::str::FromStr for LegendreVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ell" => Ok(LegendreVariant::Ell),
            "ell_prime" | "ell-prime" | "ellprime" => Ok(LegendreVariant::EllPrime),
            other => Err(Error::Parse(format!("unknown Legendre variant {other:?}"))),
        }
    }
}

pub fn legendre_sequence(p: u64, variant: LegendreVariant) -> Result<BinarySequence> {
    if !is_prime(p) || p % 4 != 3 {
        return Err(Error::param(format!("{p} is not a prime congruent to 3 mod 4")));
    }
    let mut bits = Vec::with_capacity(p as usize);
    bits.push(match variant {
        LegendreVariant::Ell => 0,
        LegendreVariant::EllPrime => 1,
    });
    for l in 1..p {
        bits.push(((1 - legendre_symbol(l as i64, p)?) / 2) as u8);
    }
    BinarySequence::new(bits, format!("legendre:p={p},variant={}", variant.as_str()))
}

pub fn twin_prime_sequence(p: u64) -> Result<BinarySequence> {
    let q = p + 2;
    if !is_prime(p) || !is_prime(q) || p == 2 {
        return Err(Error::param(format!("({p}, {q}) is not a pair of odd twin primes")));
    }
    let n = p * q;
    let mut bits = Vec::with_capacity(n as usize);
    for l in 0..n {
        let bit = if l == 0 || l % q == 0 {
            0
        } else if l % p == 0 {
            1
        } else {
            let chi = legendre_symbol(l as i64, p)? * legendre_symbol(l as i64, q)?;
            ((1 - chi) / 2) as u8
        };
        bits.push(bit);
    }
    BinarySequence::new(bits, format!("twin:p={p}"))
}

/// `x` with `p = 4x^2 + 27` and `x ≡ 1 (mod 3)`, if `p` is a Hall prime.
pub fn hall_parameter(p: u64) -> Option<i64> {
    if !is_prime(p) || p < 31 || !(p - 27).is_multiple_of(4) {
        return None;
    }
    let sq = (p - 27) / 4;
    let x = (sq as f64).sqrt().round() as i64;
    let x = (x - 1..=x + 1).find(|&x| x >= 0 && (x * x) as u64 == sq)?;
    [x, -x].into_iter().find(|x| x.rem_euclid(3) == 1)
}

/// Primitive roots that index 3 into the class `D_1`; only these make
/// `D_0 ∪ D_1 ∪ D_3` a difference set.
pub fn hall_generator_ok(p: u64, g: u64) -> bool {
    is_primitive_root(g, p)
        && index_table(p, g)
            .map(|t| t[3] % 6 == 1)
            .unwrap_or(false)
}

/// Smallest admissible primitive root for the Hall construction.
pub fn hall_default_generator(p: u64) -> Result<u64> {
    (2..p)
        .find(|&g| hall_generator_ok(p, g))
        .ok_or_else(|| Error::Internal(format!("no admissible primitive root mod {p}")))
}

/// Characteristic sequence of the sextic-residue set `D_0 ∪ D_1 ∪ D_3`.
pub fn hall_sequence(p: u64, g: Option<u64>) -> Result<BinarySequence> {
    if hall_parameter(p).is_none() {
        return Err(Error::param(format!(
            "{p} is not a prime of the form 4x^2 + 27 with x ≡ 1 mod 3"
        )));
    }
    let (g, tag) = match g {
        Some(g) => {
            if !hall_generator_ok(p, g) {
                return Err(Error::param(format!(
                    "{g} is not a primitive root mod {p} with 3 in D_1"
                )));
            }
            (g, format!("hall:p={p},g={g}"))
        }
        None => (hall_default_generator(p)?, format!("hall:p={p}")),
    };
    let idx = class_index(p, 6, g)?;
    let mut bits = vec![0u8; p as usize];
    for l in 1..p as usize {
        bits[l] = matches!(idx[l], 0 | 1 | 3) as u8;
    }
    BinarySequence::new(bits, tag)
}

pub fn autocorr_binary(s: &BinarySequence, tau: usize) -> i64 {
    let n = s.period();
    (0..n)
        .map(|i| if s.bits[i] == s.bits[(i + tau) % n] { 1 } else { -1 })
        .sum()
}

/// Membership in Σ(n): `n ≡ 3 (mod 4)` and every out-of-phase autocorrelation is −1.
pub fn is_ideal(s: &BinarySequence) -> bool {
    s.period() % 4 == 3 && (1..s.period()).all(|t| autocorr_binary(s, t) == -1)
}

fn parse_params(body: &str) -> Result<Vec<(&str, &str)>> {
    body.split(',')
        .map(|kv| {
            kv.split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))
        })
        .collect()
}

fn parse_u64(key: &str, v: &str) -> Result<u64> {
    v.parse()
        .map_err(|_| Error::Parse(format!("{key}: expected an integer, got {v:?}")))
}

fn parse_poly(v: &str) -> Result<u64> {
    let hex = v.strip_prefix("0x").unwrap_or(v);
    u64::from_str_radix(hex, 16).map_err(|_| Error::Parse(format!("bad polynomial {v:?}")))
}

fn base_from_tag(base: &str) -> Result<BinarySequence> {
    let (family, body) = base
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing family in tag {base:?}")))?;
    if family == "bits" {
        let bits = body
            .bytes()
            .map(|c| match c {
                b'0' | b'1' => Ok(c - b'0'),
                _ => Err(Error::Parse(format!("bad bit {:?}", c as char))),
            })
            .collect::<Result<Vec<_>>>()?;
        return BinarySequence::from_bits(bits);
    }
    let mut k = None;
    let mut p = None;
    let mut g = None;
    let mut poly = None;
    let mut variant = None;
    for (key, v) in parse_params(body)? {
        match key {
            "k" => k = Some(parse_u64(key, v)? as u32),
            "p" => p = Some(parse_u64(key, v)?),
            "g" => g = Some(parse_u64(key, v)?),
            "poly" => poly = Some(parse_poly(v)?),
            "variant" => variant = Some(v.parse::<LegendreVariant>()?),
            other => return Err(Error::Parse(format!("unknown parameter {other:?}"))),
        }
    }
    let need = |v: Option<u64>, name: &str| {
        v.ok_or_else(|| Error::Parse(format!("{family} tag needs {name}=")))
    };
    match family {
        "m" => {
            let k = k.ok_or_else(|| Error::Parse("m tag needs k=".into()))?;
            match poly {
                Some(poly) => Ok(m_sequence_in(&GF2kField::with_modulus(k, poly)?)),
                None => m_sequence(k),
            }
        }
        "legendre" => legendre_sequence(need(p, "p")?, variant.unwrap_or(LegendreVariant::Ell)),
        "twin" => twin_prime_sequence(need(p, "p")?),
        "hall" => hall_sequence(need(p, "p")?, g),
        other => Err(Error::Parse(format!("unknown family {other:?}"))),
    }
}

/// Applies one transform step: `C`, `L<e>` or `M<r>`.
pub fn apply_transform(s: &BinarySequence, step: &str) -> Result<BinarySequence> {
    let arg = |rest: &str| {
        rest.parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad transform argument in {step:?}")))
    };
    match step.split_at(step.len().min(1)) {
        ("C", "") => Ok(s.complement()),
        ("L", rest) => Ok(s.shift(arg(rest)?)),
        ("M", rest) => s.sample(arg(rest)?),
        _ => Err(Error::Parse(format!("unknown transform {step:?}"))),
    }
}

/// Rebuilds a sequence from its provenance tag.
pub fn from_tag(tag: &str) -> Result<BinarySequence> {
    let mut parts = tag.trim().split('+');
    let base = parts.next().unwrap_or_default();
    let mut s = base_from_tag(base)?;
    for step in parts {
        s = apply_transform(&s, step)?;
    }
    Ok(s)
}

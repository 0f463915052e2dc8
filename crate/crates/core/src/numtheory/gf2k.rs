use std::fmt;

use super::prime_factors;
use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 32;

/// GF(2^k) in polynomial basis. Elements are bitmasks below `2^k`;
/// bit `i` is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq)]
pub struct GF2kField {
    k: u32,
    modulus: u64,
    generator: u64,
}

impl fmt::Debug for GF2kField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {:#x}", self.k, self.modulus)
    }
}

fn poly_degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

fn poly_mod(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m).expect("nonzero modulus");
    while let Some(da) = poly_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_mod(a, b);
        a = b;
        b = r;
    }
    a
}

/// Multiplication in GF(2)[x]/(m), operands already reduced.
fn mulmod(a: u64, b: u64, m: u64, k: u32) -> u64 {
    let top = 1u64 << k;
    let mut acc = 0u64;
    let mut a = a;
    let mut b = b;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= m;
        }
    }
    acc
}

fn powmod(mut base: u64, mut exp: u64, m: u64, k: u32) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m, k);
        }
        base = mulmod(base, base, m, k);
        exp >>= 1;
    }
    acc
}

/// Ben-Or irreducibility test for a degree-`k` polynomial over GF(2).
fn is_irreducible(m: u64, k: u32) -> bool {
    let x = 0b10u64;
    let mut power = x;
    for _ in 1..=k / 2 {
        power = mulmod(power, power, m, k);
        if poly_gcd(m, power ^ x) != 1 {
            return false;
        }
    }
    true
}

fn x_has_full_order(m: u64, k: u32) -> bool {
    let order = (1u64 << k) - 1;
    let x = poly_mod(0b10, m);
    powmod(x, order, m, k) == 1
        && prime_factors(order)
            .into_iter()
            .all(|q| powmod(x, order / q, m, k) != 1)
}

fn is_primitive(m: u64, k: u32) -> bool {
    poly_degree(m) == Some(k) && m & 1 == 1 && is_irreducible(m, k) && x_has_full_order(m, k)
}

fn check_degree(k: u32) -> Result<()> {
    if !(2..=MAX_DEGREE).contains(&k) {
        return Err(Error::param(format!(
            "extension degree must lie in 2..={MAX_DEGREE}, got {k}"
        )));
    }
    Ok(())
}

/// All primitive polynomials of degree `k`, ascending by bitmask.
pub fn primitive_polynomials(k: u32) -> Result<Vec<u64>> {
    check_degree(k)?;
    let lo = 1u64 << k;
    Ok((lo..lo << 1)
        .filter(|m| m & 1 == 1)
        .filter(|&m| is_primitive(m, k))
        .collect())
}

impl GF2kField {
    /// Field defined by the lexicographically smallest primitive polynomial of degree `k`.
    pub fn new(k: u32) -> Result<Self> {
        check_degree(k)?;
        let lo = 1u64 << k;
        let modulus = (lo..lo << 1)
            .filter(|m| m & 1 == 1)
            .find(|&m| is_primitive(m, k))
            .ok_or_else(|| Error::Internal(format!("no primitive polynomial of degree {k}")))?;
        Ok(Self::from_parts(k, modulus))
    }

    /// Field defined by an explicit modulus, which must be primitive of degree `k`.
    pub fn with_modulus(k: u32, modulus: u64) -> Result<Self> {
        check_degree(k)?;
        if !is_primitive(modulus, k) {
            return Err(Error::param(format!(
                "{modulus:#x} is not a primitive polynomial of degree {k}"
            )));
        }
        Ok(Self::from_parts(k, modulus))
    }

    fn from_parts(k: u32, modulus: u64) -> Self {
        Self {
            k,
            modulus,
            generator: poly_mod(0b10, modulus),
        }
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The residue class of `x`, a root of the modulus.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn order(&self) -> u64 {
        (1u64 << self.k) - 1
    }

    pub fn contains(&self, e: u64) -> bool {
        e >> self.k == 0
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mulmod(a, b, self.modulus, self.k)
    }

    pub fn pow(&self, a: u64, exp: u64) -> u64 {
        powmod(a, exp, self.modulus, self.k)
    }

    /// Absolute trace `e + e^2 + ... + e^(2^(k-1))`.
    pub fn trace(&self, e: u64) -> u8 {
        debug_assert!(self.contains(e));
        let mut acc = 0u64;
        let mut t = e;
        for _ in 0..self.k {
            acc ^= t;
            t = self.mul(t, t);
        }
        debug_assert!(acc <= 1, "trace must land in GF(2)");
        acc as u8
    }

    /// `theta^0, theta^1, ..., theta^(2^k - 2)` for the generator `theta`.
    pub fn powers(&self) -> impl Iterator<Item = u64> + '_ {
        let theta = self.generator;
        std::iter::successors(Some(1u64), move |&e| Some(self.mul(e, theta)))
            .take(self.order() as usize)
    }
}

pub fn gf2k_field(k: u32) -> Result<GF2kField> {
    GF2kField::new(k)
}

pub fn gf2k_trace(field: &GF2kField, e: u64) -> u8 {
    field.trace(e)
}

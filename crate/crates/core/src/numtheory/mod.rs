//! Integer arithmetic substrate: big naturals, primality, Legendre symbols,
//! primitive roots, binary extension fields and cyclotomy.

mod cyclotomic;
mod gf2k;

pub use cyclotomic::{
    class_index, cyclotomic_classes, cyclotomic_numbers_order3, gauss_period, index_table,
    period_product_relation_holds, CyclotomicTable3,
};
pub use gf2k::{gf2k_field, gf2k_trace, primitive_polynomials, GF2kField};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    a.gcd(b)
}

/// 4^n as a big natural.
pub fn pow4(n: u64) -> Natural {
    Natural::one() << (2 * n)
}

pub fn pow4_minus1(n: u64) -> Natural {
    pow4(n) - 1u32
}

pub fn pow4_plus1(n: u64) -> Natural {
    pow4(n) + 1u32
}

/// Reduces a signed sum `pos - neg` into `[0, modulus)`.
pub fn signed_residue(pos: &Natural, neg: &Natural, modulus: &Natural) -> Natural {
    let p = pos % modulus;
    let n = neg % modulus;
    if p >= n {
        p - n
    } else {
        modulus - n + p
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

// Deterministic for every n < 2^64 (Jaeschke / Sorenson–Webster bound for the first 12 primes).
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors in increasing order, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2u64;
    while f.saturating_mul(f) <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via quadratic reciprocity.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p) {
        return Err(Error::param(format!("{p} is not an odd prime")));
    }
    let mut a = a.rem_euclid(p as i64) as u64;
    let mut m = p;
    let mut sign = 1i8;
    if a == 0 {
        return Ok(0);
    }
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if m % 8 == 3 || m % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            sign = -sign;
        }
        a %= m;
    }
    Ok(if m == 1 { sign } else { 0 })
}

pub fn is_primitive_root(g: u64, p: u64) -> bool {
    if g.is_multiple_of(p) {
        return false;
    }
    let order = p - 1;
    prime_factors(order)
        .into_iter()
        .all(|q| pow_mod(g, order / q, p) != 1)
}

/// Smallest positive generator of `(Z/p)^*`.
pub fn primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::param(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(1);
    }
    (2..p)
        .find(|&g| is_primitive_root(g, p))
        .ok_or_else(|| Error::Internal(format!("no primitive root found for {p}")))
}

/// Checks that every prime divisor of `gcd(n + 1, 4^n - 1)` is at most 3.
pub fn lemma4_holds(n: u64) -> bool {
    let m = n + 1;
    let r = (pow_mod(4, n, m) + m - 1) % m;
    let g = num_integer::gcd(m, r);
    prime_factors(g).into_iter().all(|q| q <= 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn trial_division_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&nat(65), &nat(63)), nat(1));
        assert_eq!(gcd(&nat(1612), &nat(4095)), nat(13));
        assert_eq!(gcd(&nat(0), &nat(7)), nat(7));
        assert_eq!(gcd(&nat(0), &nat(0)), nat(0));
    }

    #[test]
    fn powers_of_four() {
        assert_eq!(pow4_minus1(1), nat(3));
        assert_eq!(pow4_minus1(3), nat(63));
        assert_eq!(pow4_plus1(3), nat(65));
        assert_eq!(pow4_plus1(7), nat(16385));
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(31));
        assert!(!is_prime(91));
        assert!(is_prime(6427));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        // largest prime below 2^64, and a strong pseudoprime to several small bases
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime(n), trial_division_prime(n), "n = {n}");
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(1, 3).unwrap(), 1);
        assert_eq!(legendre_symbol(3, 7).unwrap(), -1);
        assert_eq!(legendre_symbol(7, 7).unwrap(), 0);
        assert_eq!(legendre_symbol(-1, 7).unwrap(), -1);
        assert!(legendre_symbol(1, 9).is_err());
        assert!(legendre_symbol(1, 2).is_err());
    }

    #[test]
    fn legendre_matches_euler_criterion() {
        for p in (3..100).filter(|&p| is_prime(p)) {
            for a in 1..p {
                let e = pow_mod(a, (p - 1) / 2, p);
                let expected = if e == 1 { 1 } else { -1 };
                assert_eq!(legendre_symbol(a as i64, p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn primitive_root_examples() {
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert_eq!(primitive_root(31).unwrap(), 3);
        assert_eq!(primitive_root(3).unwrap(), 2);
        assert_eq!(primitive_root(1051).unwrap(), 7);
        assert!(primitive_root(91).is_err());
    }

    #[test]
    fn prime_factor_lists() {
        assert_eq!(prime_factors(4095), vec![3, 5, 7, 13]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(97), vec![97]);
    }

    #[test]
    fn lemma4_over_known_periods() {
        let mut periods: Vec<u64> = (2..=8).map(|m| (1u64 << m) - 1).collect();
        periods.extend((5..=200).filter(|&p| p % 4 == 3 && is_prime(p)));
        periods.extend([15, 35, 143, 323]);
        for n in periods {
            assert!(lemma4_holds(n), "n = {n}");
        }
        // gcd(7, 4^6 - 1) = 7
        assert!(!lemma4_holds(6));
    }

    #[test]
    fn signed_residue_wraps() {
        let m = nat(65);
        assert_eq!(signed_residue(&nat(0), &nat(273), &m), nat(52));
        assert_eq!(signed_residue(&nat(70), &nat(3), &m), nat(2));
    }
}

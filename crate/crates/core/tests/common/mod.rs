//! Brute-force oracles that evaluate the definitions directly. They share no
//! code paths with the library beyond reading sequence bits.

#![allow(dead_code)]

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

pub fn four_pow(e: usize) -> BigUint {
    BigUint::from(4u32).pow(e as u32)
}

/// Matrix construction read row by row, then the Gray map via a lookup table.
pub fn interleave(a: &[u8], b: &[u8]) -> Vec<u8> {
    assert_eq!(a.len(), b.len());
    let n = a.len();
    let h = n.div_ceil(2);
    let gray = [[0u8, 1], [3, 2]];
    let mut out = Vec::with_capacity(2 * n);
    for j in 0..n {
        let c0 = a[j];
        let c1 = a[(h + j) % n];
        let d0 = b[j];
        let d1 = 1 - b[(h + j) % n];
        out.push(gray[c0 as usize][d0 as usize]);
        out.push(gray[c1 as usize][d1 as usize]);
    }
    out
}

/// `S(4) = sum w_i 4^i`, by Horner from the top digit.
pub fn s4(digits: &[u8]) -> BigUint {
    let mut acc = BigUint::zero();
    for &d in digits.iter().rev() {
        acc = acc * 4u32 + d as u32;
    }
    acc
}

/// `d = gcd(S(4), 4^N - 1)` by Euclid.
pub fn divisor(digits: &[u8]) -> BigUint {
    let full = four_pow(digits.len()) - BigUint::one();
    s4(digits).gcd(&full)
}

/// `(d_+, d_-)` for `N = 2n`.
pub fn divisor_split(digits: &[u8]) -> (BigUint, BigUint) {
    let n = digits.len() / 2;
    let s = s4(digits);
    (
        s.gcd(&(four_pow(n) + 1u32)),
        s.gcd(&(four_pow(n) - 1u32)),
    )
}

/// `A(tau) = sum omega^(w_(t+tau) - w_t)` with `omega = i`, as `(re, im)`.
pub fn autocorr(digits: &[u8], tau: usize) -> (i64, i64) {
    let n = digits.len();
    let units = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let (mut re, mut im) = (0, 0);
    for t in 0..n {
        let e = (4 + digits[(t + tau) % n] as usize - digits[t] as usize) % 4;
        re += units[e].0;
        im += units[e].1;
    }
    (re, im)
}

/// Periodic binary autocorrelation.
pub fn autocorr_binary(bits: &[u8], tau: usize) -> i64 {
    let n = bits.len();
    (0..n)
        .map(|t| if bits[t] == bits[(t + tau) % n] { 1 } else { -1 })
        .sum()
}

pub fn is_ideal(bits: &[u8]) -> bool {
    (1..bits.len()).all(|t| autocorr_binary(bits, t) == -1)
}

/// Discrete logarithms mod `p` to base `g` by walking the powers.
pub fn discrete_logs(p: u64, g: u64) -> Vec<u64> {
    let mut ind = vec![u64::MAX; p as usize];
    let mut x = 1u64;
    for e in 0..p - 1 {
        ind[x as usize] = e;
        x = x * g % p;
    }
    ind
}

pub fn smallest_primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&g| {
            let mut x = 1u64;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Cyclotomic numbers of order 3 by counting `a` with `a` in `C_i` and `a + 1` in `C_j`.
pub fn census3(p: u64, g: u64) -> [[u64; 3]; 3] {
    let ind = discrete_logs(p, g);
    let mut counts = [[0u64; 3]; 3];
    for a in 1..p - 1 {
        counts[(ind[a as usize] % 3) as usize][(ind[a as usize + 1] % 3) as usize] += 1;
    }
    counts
}

/// The closed-form table for `4p = c^2 + 27 d^2`, `c ≡ 1 (mod 3)`, trying both signs of `d`.
pub fn formula_tables3(p: u64) -> Vec<[[u64; 3]; 3]> {
    let p = p as i64;
    let mut out = Vec::new();
    for d in -20_000i64..=20_000 {
        let rest = 4 * p - 27 * d * d;
        if rest < 0 {
            continue;
        }
        let c_abs = (rest as f64).sqrt().round() as i64;
        for c in [c_abs, -c_abs] {
            if c * c != rest || c.rem_euclid(3) != 1 {
                continue;
            }
            let nine_a = p - 8 + c;
            let b18 = 2 * p - 4 - c - 9 * d;
            let c18 = 2 * p - 4 - c + 9 * d;
            let nine_d = p + 1 + c;
            if nine_a % 9 != 0 || b18 % 18 != 0 || c18 % 18 != 0 || nine_d % 9 != 0 {
                continue;
            }
            let (a_, b_, c_, d_) = (
                (nine_a / 9) as u64,
                (b18 / 18) as u64,
                (c18 / 18) as u64,
                (nine_d / 9) as u64,
            );
            out.push([[a_, b_, c_], [b_, c_, d_], [c_, d_, b_]]);
        }
    }
    out
}

/// Gauss periods `eta_l = sum_{i in D_l} 4^(2i)` of order 3, reduced mod `modulus`.
pub fn gauss_periods3(p: u64, g: u64, modulus: &BigUint) -> Vec<BigUint> {
    let ind = discrete_logs(p, g);
    let mut eta = vec![BigUint::zero(); 3];
    for i in 1..p {
        eta[(ind[i as usize] % 3) as usize] += four_pow(2 * i as usize);
    }
    eta.into_iter().map(|e| e % modulus).collect()
}

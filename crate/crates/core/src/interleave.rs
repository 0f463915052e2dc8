//! Interleaving two binary sequences of odd period `n` into a quaternary
//! sequence of period `2n`.
//!
//! The first column of the `n x 2` matrix holds `a_j` and the second holds
//! `a_((n+1)/2 + j)`; reading it row by row gives `c`. The matrix for `d` is
//! built the same way from `b` with the second column complemented. The two
//! bit streams are merged digitwise by the Gray map.

use std::fmt;

use crate::error::{Error, Result};
use crate::seqgen::BinarySequence;

#[derive(Clone, PartialEq, Eq)]
pub struct QuaternarySequence {
    digits: Vec<u8>,
    provenance: Option<String>,
}

impl fmt::Debug for QuaternarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = &self.provenance {
            write!(f, "{p} ")?;
        }
        write!(f, "[")?;
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

impl QuaternarySequence {
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::param("quaternary sequence must have positive period"));
        }
        if let Some(d) = digits.iter().find(|&&d| d > 3) {
            return Err(Error::param(format!("quaternary digit out of range: {d}")));
        }
        Ok(Self {
            digits,
            provenance: None,
        })
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn period(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }
}

/// Gray map: (0,0)→0, (0,1)→1, (1,1)→2, (1,0)→3.
pub fn gray(c: u8, d: u8) -> u8 {
    match (c, d) {
        (0, 0) => 0,
        (0, 1) => 1,
        (1, 1) => 2,
        (1, 0) => 3,
        _ => panic!("gray map takes bits, got ({c}, {d})"),
    }
}

/// Index `i` in `Z_2n` with `i ≡ mu (mod 2)` and `i ≡ lambda (mod n)`, as `n mu + (1-n) lambda`.
pub fn crt_index(n: usize, mu: usize, lambda: usize) -> usize {
    let n = n as i64;
    let i = n * mu as i64 + (1 - n) * lambda as i64;
    i.rem_euclid(2 * n) as usize
}

fn half_up(n: usize) -> usize {
    n.div_ceil(2)
}

/// Row-major read of the matrix built from `a`.
pub fn build_c(a: &BinarySequence) -> Vec<u8> {
    let n = a.period();
    let bits = a.bits();
    (0..n)
        .flat_map(|j| [bits[j], bits[(half_up(n) + j) % n]])
        .collect()
}

/// Row-major read of the matrix built from `b`, second column complemented.
pub fn build_d(b: &BinarySequence) -> Vec<u8> {
    let n = b.period();
    let bits = b.bits();
    (0..n)
        .flat_map(|j| [bits[j], 1 - bits[(half_up(n) + j) % n]])
        .collect()
}

/// Position `i` reads `a` at `lambda (1-n)/2 mod n` with `lambda = i mod n`.
fn closed_form_source(n: usize, i: usize) -> usize {
    let n_i = n as i64;
    let lambda = (i % n) as i64;
    (lambda * (1 - n_i) / 2).rem_euclid(n_i) as usize
}

/// `c` computed index by index through the CRT decomposition of `Z_2n`.
pub fn build_c_closed_form(a: &BinarySequence) -> Vec<u8> {
    let n = a.period();
    (0..2 * n).map(|i| a.bits()[closed_form_source(n, i)]).collect()
}

/// `d` computed index by index through the CRT decomposition of `Z_2n`.
pub fn build_d_closed_form(b: &BinarySequence) -> Vec<u8> {
    let n = b.period();
    (0..2 * n)
        .map(|i| {
            let bit = b.bits()[closed_form_source(n, i)];
            if i % 2 == 0 {
                bit
            } else {
                1 - bit
            }
        })
        .collect()
}

fn check_pair(a: &BinarySequence, b: &BinarySequence) -> Result<usize> {
    if a.period() != b.period() {
        return Err(Error::param(format!(
            "period mismatch: {} vs {}",
            a.period(),
            b.period()
        )));
    }
    // BinarySequence already guarantees an odd period >= 3.
    Ok(a.period())
}

/// `w(a, b)_i = gray(c_i, d_i)`.
pub fn interleave(a: &BinarySequence, b: &BinarySequence) -> Result<QuaternarySequence> {
    check_pair(a, b)?;
    let digits = build_c(a)
        .into_iter()
        .zip(build_d(b))
        .map(|(c, d)| gray(c, d))
        .collect();
    Ok(QuaternarySequence {
        digits,
        provenance: Some(format!("w({}, {})", a.provenance(), b.provenance())),
    })
}

/// Same sequence as [`interleave`], assembled through the closed forms.
pub fn interleave_closed_form(
    a: &BinarySequence,
    b: &BinarySequence,
) -> Result<QuaternarySequence> {
    check_pair(a, b)?;
    let digits = build_c_closed_form(a)
        .into_iter()
        .zip(build_d_closed_form(b))
        .map(|(c, d)| gray(c, d))
        .collect();
    QuaternarySequence::new(digits)
}

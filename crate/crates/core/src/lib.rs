//! Interleaved quaternary sequences built from binary sequences with ideal
//! autocorrelation, and their exact 4-adic complexity.
//!
//! Module map:
//! - [`numtheory`]: big naturals, primality, Legendre symbols, GF(2^k), cyclotomy.
//! - [`seqgen`]: m-sequences, Legendre, twin-prime and Hall sequences; complement, shift, sample.
//! - [`interleave`]: the period-`2n` interleaving with the Gray map.
//! - [`adic`]: `S(4)`, 4-adic complexity, residue formulas, quaternary autocorrelation.
//! - [`verify`]: theorem checks, batch tables.
//! - [`qseq`]: the `QSEQ` text format.

pub mod adic;
pub mod error;
pub mod interleave;
pub mod numtheory;
pub mod qseq;
pub mod seqgen;
pub mod verify;

pub use adic::{
    analyze, autocorr_quaternary, d_split, four_adic_complexity, s4_value, AnalysisRecord,
    ExactComplexity, GaussianInteger,
};
pub use error::{Error, Result};
pub use interleave::{interleave, QuaternarySequence};
pub use numtheory::Natural;
pub use seqgen::{from_tag, is_ideal, BinarySequence, LegendreVariant};

//! `QSEQ` text format:
//!
//! ```text
//! QSEQ 1 <alphabet> <period>
//! <digits>
//! ```
//!
//! `alphabet` is 2 or 4, the second line holds exactly `period` ASCII digits
//! with no separators, and both lines end in `\n`.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::interleave::QuaternarySequence;
use crate::seqgen::BinarySequence;

const MAGIC: &str = "QSEQ";
const VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceFile {
    Binary(BinarySequence),
    Quaternary(QuaternarySequence),
}

impl SequenceFile {
    pub fn alphabet(&self) -> u8 {
        match self {
            SequenceFile::Binary(_) => 2,
            SequenceFile::Quaternary(_) => 4,
        }
    }

    pub fn digits(&self) -> &[u8] {
        match self {
            SequenceFile::Binary(s) => s.bits(),
            SequenceFile::Quaternary(q) => q.digits(),
        }
    }

    pub fn into_binary(self) -> Result<BinarySequence> {
        match self {
            SequenceFile::Binary(s) => Ok(s),
            SequenceFile::Quaternary(_) => Err(Error::Parse("expected alphabet 2".into())),
        }
    }

    pub fn into_quaternary(self) -> Result<QuaternarySequence> {
        match self {
            SequenceFile::Quaternary(q) => Ok(q),
            SequenceFile::Binary(_) => Err(Error::Parse("expected alphabet 4".into())),
        }
    }
}

pub fn format(file: &SequenceFile) -> String {
    let digits = file.digits();
    let mut out = format!("{MAGIC} {VERSION} {} {}\n", file.alphabet(), digits.len());
    for d in digits {
        out.push(char::from(b'0' + d));
    }
    let _ = writeln!(out);
    out
}

pub fn format_binary(s: &BinarySequence) -> String {
    format(&SequenceFile::Binary(s.clone()))
}

pub fn format_quaternary(q: &QuaternarySequence) -> String {
    format(&SequenceFile::Quaternary(q.clone()))
}

pub fn parse(text: &str) -> Result<SequenceFile> {
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| Error::Parse("QSEQ data must end with a newline".into()))?;
    let (header, digits) = body
        .split_once('\n')
        .ok_or_else(|| Error::Parse("QSEQ data needs a header line and a digit line".into()))?;
    if digits.contains('\n') {
        return Err(Error::Parse("unexpected extra lines after the digit line".into()));
    }
    let fields: Vec<&str> = header.split(' ').collect();
    let [magic, version, alphabet, period] = fields[..] else {
        return Err(Error::Parse(format!("bad header {header:?}")));
    };
    if magic != MAGIC || version != VERSION {
        return Err(Error::Parse(format!("unsupported header {header:?}")));
    }
    let alphabet: u8 = match alphabet {
        "2" => 2,
        "4" => 4,
        other => return Err(Error::Parse(format!("alphabet must be 2 or 4, got {other:?}"))),
    };
    let period: usize = period
        .parse()
        .map_err(|_| Error::Parse(format!("bad period {period:?}")))?;
    if digits.len() != period {
        return Err(Error::Parse(format!(
            "header declares period {period} but {} digits follow",
            digits.len()
        )));
    }
    let values = digits
        .bytes()
        .map(|c| match c.checked_sub(b'0') {
            Some(v) if v < alphabet => Ok(v),
            _ => Err(Error::Parse(format!(
                "digit {:?} outside alphabet {alphabet}",
                c as char
            ))),
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(match alphabet {
        2 => SequenceFile::Binary(BinarySequence::from_bits(values)?),
        _ => SequenceFile::Quaternary(QuaternarySequence::new(values)?),
    })
}

pub fn read_file(path: &Path) -> Result<SequenceFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse(&text)
}

pub fn write_file(path: &Path, file: &SequenceFile) -> Result<()> {
    std::fs::write(path, format(file)).map_err(|e| Error::io(path, e))
}

//! The truth-table file format:
//!
//! ```text
//! n=<decimal>
//! bits=<hex>
//! ```
//!
//! For `n >= 2` the payload has exactly `2^n / 4` lowercase hex digits and the
//! bit at table index `i` is bit `3 - i % 4` of digit `i / 4`. For `n = 1` the
//! payload is the two table bits as literal `0`/`1` characters.

use std::fs;
use std::path::Path;

use bentkit::{BooleanFunction, MAX_VARS};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed header: {0}")]
    Header(String),
    #[error("variable count {0} outside 1..={MAX_VARS}")]
    VariableCount(u32),
    #[error("payload has {found} digits, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("invalid payload character {0:?}")]
    Digit(char),
}

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
}

pub fn parse_truth_table(text: &str) -> Result<BooleanFunction, FormatError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| FormatError::Header("empty input".into()))?;
    let n: u32 = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| FormatError::Header(format!("expected `n=<decimal>`, got {header:?}")))?;
    if !(1..=MAX_VARS).contains(&n) {
        return Err(FormatError::VariableCount(n));
    }
    let body = lines.next().ok_or_else(|| FormatError::Header("missing `bits=` line".into()))?;
    let payload = body
        .strip_prefix("bits=")
        .ok_or_else(|| FormatError::Header(format!("expected `bits=<hex>`, got {body:?}")))?;
    if let Some(extra) = lines.next() {
        return Err(FormatError::Header(format!("unexpected trailing line {extra:?}")));
    }
    if n == 1 {
        let bits = payload
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(FormatError::Digit(c)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if bits.len() != 2 {
            return Err(FormatError::Length {
                expected: 2,
                found: bits.len(),
            });
        }
        return Ok(BooleanFunction::from_bits(1, &bits).expect("n = 1"));
    }
    let expected = 1usize << (n - 2);
    let found = payload.chars().count();
    if found != expected {
        return Err(FormatError::Length { expected, found });
    }
    let mut words = vec![0u64; expected.div_ceil(16)];
    for (d, c) in payload.chars().enumerate() {
        let v = c.to_digit(16).ok_or(FormatError::Digit(c))? as u64;
        // digit d holds table indices 4d..4d+3, index 4d in its top bit
        let nibble = (v >> 3 & 1) | (v >> 1 & 2) | (v << 1 & 4) | (v << 3 & 8);
        words[d / 16] |= nibble << (4 * (d % 16));
    }
    Ok(BooleanFunction::from_words(n, words).expect("n checked"))
}

pub fn serialize_truth_table(f: &BooleanFunction) -> String {
    let n = f.n();
    let mut out = format!("n={n}\nbits=");
    if n == 1 {
        out.extend(f.bits().map(|b| if b { '1' } else { '0' }));
    } else {
        for d in 0..1usize << (n - 2) {
            let nibble = f.words()[d / 16] >> (4 * (d % 16)) & 0xf;
            let v = (nibble & 1) << 3 | (nibble & 2) << 1 | (nibble & 4) >> 1 | (nibble & 8) >> 3;
            out.push(char::from_digit(v as u32, 16).expect("nibble"));
        }
    }
    out.push('\n');
    out
}

pub fn read_truth_table(path: &Path) -> Result<BooleanFunction, FileError> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_truth_table(&text).map_err(|source| FileError::Format {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_truth_table(path: &Path, f: &BooleanFunction) -> std::io::Result<()> {
    fs::write(path, serialize_truth_table(f))
}

//! Tables of zeta-zero ordinates.
//!
//! The on-disk format is the one used by the public zero databases: plain
//! ASCII, one decimal ordinate per line, LF or CRLF endings, no header.
//! Blank lines are skipped. Ordinates are the positive imaginary parts
//! `gamma_j` of the non-trivial zeros `1/2 + i gamma_j`; the real part is not
//! stored, so everything downstream works on the critical line.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::special::theta_rs;

/// No ordinate may sit at or below this value (the first zero is at 14.1347...).
pub const MIN_ORDINATE: f64 = 14.0;

/// Sorted ordinates of zeta zeros on the critical line.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source_precision: u32,
    digest: String,
}

impl ZeroTable {
    /// Builds a table from ordinates already in memory, checking the same
    /// invariants as [`parse_zeros`].
    pub fn from_ordinates(ordinates: Vec<f64>, source_precision: u32) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (i, &g) in ordinates.iter().enumerate() {
            if !g.is_finite() {
                return Err(Error::NonNumericLine { line: i + 1 });
            }
            if g <= MIN_ORDINATE {
                return Err(Error::OrdinateTooSmall {
                    line: i + 1,
                    value: g,
                });
            }
            if i > 0 && g <= ordinates[i - 1] {
                return Err(Error::NonMonotonic { line: i + 1 });
            }
        }
        let mut hasher = Sha256::new();
        for g in &ordinates {
            hasher.update(g.to_bits().to_le_bytes());
        }
        let digest = format!("{:x}", hasher.finalize());
        Ok(Self {
            ordinates,
            source_precision,
            digest,
        })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    /// Decimal digits after the point carried by every line of the source.
    pub fn source_precision(&self) -> u32 {
        self.source_precision
    }

    /// Hex SHA-256 of the source text (or of the ordinate bits for tables
    /// built in memory). Truncation keeps the digest of the full source, so
    /// per-zero caches keyed by index stay valid across `--max-zeros`.
    pub fn digest(&self) -> &str {
        &self.digest
    }

    pub fn first(&self) -> f64 {
        self.ordinates[0]
    }

    pub fn last(&self) -> f64 {
        *self.ordinates.last().expect("table is never empty")
    }

    /// Keeps only the first `k` ordinates.
    pub fn truncated(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParams("max_zeros must be at least 1".into()));
        }
        let mut t = self.clone();
        t.ordinates.truncate(k);
        Ok(t)
    }

    /// The first `k` ordinates (or all of them if the table is shorter).
    pub fn head(&self, k: usize) -> &[f64] {
        &self.ordinates[..k.min(self.ordinates.len())]
    }

    /// Number of ordinates `<= t`.
    pub fn count_below(&self, t: f64) -> Result<usize> {
        if !(t <= self.last()) {
            return Err(Error::OutOfRange {
                what: "T",
                value: t,
                limit: self.last(),
            });
        }
        Ok(self.ordinates.partition_point(|&g| g <= t))
    }

    /// Serializes back to the one-ordinate-per-line format at the source
    /// precision.
    pub fn to_text(&self) -> String {
        let digits = self.source_precision as usize;
        let mut out = String::with_capacity(self.ordinates.len() * (digits + 8));
        for g in &self.ordinates {
            let _ = writeln!(out, "{g:.digits$}");
        }
        out
    }
}

/// Parses a zeros file from any reader.
pub fn parse_zeros<R: Read>(mut reader: R) -> Result<ZeroTable> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| Error::io("<stream>", e))?;
    parse_zeros_str(&text)
}

pub fn parse_zeros_str(text: &str) -> Result<ZeroTable> {
    let mut ordinates = Vec::new();
    let mut precision: Option<u32> = None;
    let mut prev = f64::NEG_INFINITY;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = match line.parse() {
            Ok(v) if f64::is_finite(v) => v,
            _ => return Err(Error::NonNumericLine { line: line_no }),
        };
        if !line
            .bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'+' | b'-' | b'e' | b'E'))
        {
            return Err(Error::NonNumericLine { line: line_no });
        }
        if value <= prev {
            return Err(Error::NonMonotonic { line: line_no });
        }
        if value <= MIN_ORDINATE {
            return Err(Error::OrdinateTooSmall {
                line: line_no,
                value,
            });
        }
        let frac = line
            .split_once('.')
            .map(|(_, f)| f.bytes().take_while(u8::is_ascii_digit).count() as u32)
            .unwrap_or(0);
        precision = Some(precision.map_or(frac, |p| p.min(frac)));
        prev = value;
        ordinates.push(value);
    }
    if ordinates.is_empty() {
        return Err(Error::EmptyInput);
    }
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    Ok(ZeroTable {
        ordinates,
        source_precision: precision.unwrap_or(0),
        digest,
    })
}

/// Reads and parses a zeros file from disk.
pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_zeros_str(&text)
}

/// Smooth part of Backlund's zero count, `theta(T)/pi + 1`.
///
/// The `arg zeta(1/2 + iT)/pi` term is left out; it is `O(log T)` but stays
/// within a couple of units in the range where the tables are used.
pub fn backlund_estimate(t: f64) -> Result<f64> {
    Ok(theta_rs(t)? / std::f64::consts::PI + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_lines() {
        let t = parse_zeros_str("14.134725142\n21.022039639\n").unwrap();
        assert_eq!(t.count(), 2);
        assert_eq!(t.ordinates(), &[14.134725142, 21.022039639]);
        assert_eq!(t.source_precision(), 9);
    }

    #[test]
    fn crlf_and_blank_lines() {
        let t = parse_zeros_str("  14.134725142\r\n\r\n21.022039639  \r\n\n").unwrap();
        assert_eq!(t.count(), 2);
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse_zeros_str(""), Err(Error::EmptyInput)));
        assert!(matches!(parse_zeros_str("\n \n"), Err(Error::EmptyInput)));
    }

    #[test]
    fn ordering_violation() {
        // 13.9 would also fail the lower bound; monotonicity is checked first.
        assert!(matches!(
            parse_zeros_str("14.1\n13.9\n"),
            Err(Error::NonMonotonic { line: 2 })
        ));
        assert!(matches!(
            parse_zeros_str("14.5\n14.5\n"),
            Err(Error::NonMonotonic { line: 2 })
        ));
    }

    #[test]
    fn garbage_lines() {
        assert!(matches!(
            parse_zeros_str("14.2\nabc\n"),
            Err(Error::NonNumericLine { line: 2 })
        ));
        assert!(matches!(
            parse_zeros_str("14.2 21.0\n"),
            Err(Error::NonNumericLine { line: 1 })
        ));
        assert!(matches!(
            parse_zeros_str("inf\n"),
            Err(Error::NonNumericLine { line: 1 })
        ));
    }

    #[test]
    fn below_first_zero() {
        assert!(matches!(
            parse_zeros_str("13.5\n"),
            Err(Error::OrdinateTooSmall { line: 1, .. })
        ));
    }

    #[test]
    fn count_below_edges() {
        let t = parse_zeros_str("14.134725142\n21.022039639\n25.010857580\n").unwrap();
        assert_eq!(t.count_below(14.0).unwrap(), 0);
        assert_eq!(t.count_below(14.134725142).unwrap(), 1);
        assert_eq!(t.count_below(25.010857580).unwrap(), 3);
        assert!(matches!(t.count_below(30.0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn truncation_keeps_digest() {
        let t = parse_zeros_str("14.134725142\n21.022039639\n").unwrap();
        let h = t.truncated(1).unwrap();
        assert_eq!(h.count(), 1);
        assert_eq!(h.digest(), t.digest());
        assert!(t.truncated(0).is_err());
    }

    #[test]
    fn backlund_domain() {
        assert!(matches!(backlund_estimate(5.0), Err(Error::Domain(_))));
        assert!(backlund_estimate(14.0).unwrap() < 1.0);
    }
}

//! Output formatting: the `--format` switch, human-readable digit grouping,
//! and exact JSON numbers of arbitrary size.

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable report (digits grouped by thousands).
    Text,
    /// One structured JSON document.
    Json,
    /// Comma-separated rows (tables only).
    Csv,
}

/// Groups a decimal string by thousands: `3759525` becomes `3,759,525`.
/// A leading sign is preserved.
pub fn group_digits(s: &str) -> String {
    let (sign, digits) = match s.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", s),
    };
    let mut out = String::with_capacity(digits.len() + digits.len() / 3 + 1);
    let lead = digits.len() % 3;
    if lead > 0 {
        out.push_str(&digits[..lead]);
    }
    for (i, chunk) in digits.as_bytes()[lead..].chunks(3).enumerate() {
        if i > 0 || lead > 0 {
            out.push(',');
        }
        out.push_str(std::str::from_utf8(chunk).expect("ascii digits"));
    }
    format!("{sign}{out}")
}

pub fn human_uint(x: &BigUint) -> String {
    group_digits(&x.to_string())
}

/// An exact JSON number from a big integer (the `arbitrary_precision`
/// representation keeps every digit).
pub fn json_uint(x: &BigUint) -> Value {
    serde_json::from_str(&x.to_string()).expect("decimal digits form a JSON number")
}

pub fn json_int(x: &BigInt) -> Value {
    serde_json::from_str(&x.to_string()).expect("decimal digits form a JSON number")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_grouping() {
        assert_eq!(group_digits("0"), "0");
        assert_eq!(group_digits("999"), "999");
        assert_eq!(group_digits("1000"), "1,000");
        assert_eq!(group_digits("3759525"), "3,759,525");
        assert_eq!(group_digits("-1234567"), "-1,234,567");
    }

    #[test]
    fn json_numbers_keep_all_digits() {
        let x = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        assert_eq!(json_uint(&x).to_string(), "123456789012345678901234567890");
    }
}

//! Matrix files, partitions given as text, and the JSON report.
//!
//! Two matrix formats are read:
//!
//! * dense text: one row per line, entries separated by whitespace or
//!   commas, each entry `a`, `bi` or `a+bi` (no spaces inside an entry).
//!   Blank lines and lines starting with `#` are skipped.
//! * Matrix Market `array` and `coordinate` files with `complex`, `real` or
//!   `integer` fields and `general` symmetry.
//!
//! All indices in files and partition strings are 1-based.

mod literal;
mod market;
mod report;

pub use literal::{format_complex, parse_complex};
pub use market::{parse_matrix_market, write_matrix_market};
pub(crate) use report::number as report_number;
pub use report::{
    canonical_json, certificate_json, membership_json, parse_report, spectrum_json, write_json, Areas, Report,
    SCHEMA_VERSION,
};

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, IndexPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatHint {
    /// Matrix Market when the input starts with `%%`, dense text otherwise.
    Auto,
    DenseText,
    MatrixMarket,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceFormat {
    DenseText,
    MatrixMarket,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixDocument {
    pub matrix: ComplexMatrix,
    pub format: SourceFormat,
    pub name: Option<String>,
}

pub fn parse_matrix(bytes: &[u8], hint: FormatHint) -> Result<MatrixDocument> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        Error::parse(line, 1, "input is not valid UTF-8")
    })?;
    if text.trim().is_empty() {
        return Err(Error::parse(1, 1, "empty input"));
    }
    let format = match hint {
        FormatHint::Auto if bytes.starts_with(b"%%") => SourceFormat::MatrixMarket,
        FormatHint::Auto | FormatHint::DenseText => SourceFormat::DenseText,
        FormatHint::MatrixMarket => SourceFormat::MatrixMarket,
    };
    let matrix = match format {
        SourceFormat::DenseText => parse_dense_text(text)?,
        SourceFormat::MatrixMarket => parse_matrix_market(text)?,
    };
    Ok(MatrixDocument {
        matrix,
        format,
        name: None,
    })
}

fn parse_dense_text(text: &str) -> Result<ComplexMatrix> {
    let mut rows: Vec<Vec<num_complex::Complex64>> = Vec::new();
    let mut width = None;
    for (k, line) in text.lines().enumerate() {
        let line_no = k + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 0;
        for token in line.split(|c: char| c.is_whitespace() || c == ',') {
            let column = col + 1;
            col += token.len() + 1;
            if token.is_empty() {
                continue;
            }
            let z = parse_complex(token).map_err(|m| Error::parse(line_no, column, m))?;
            row.push(z);
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("expected {w} entries, found {}", row.len()),
                ))
            }
            _ => {}
        }
        rows.push(row);
    }
    let cols = width.unwrap_or(0);
    if rows.len() != cols {
        return Err(Error::NotSquare { rows: rows.len(), cols });
    }
    ComplexMatrix::from_rows(&rows)
}

/// Dense text, one row per line, entries separated by single spaces.
/// Parsing the output gives back the identical matrix, bit for bit.
pub fn write_dense_text(a: &ComplexMatrix) -> String {
    let mut out = String::new();
    for r in 0..a.dim() {
        let row: Vec<String> = a.row(r).iter().map(|&z| format_complex(z)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads `"1,3"` as alpha = {1, 3} (1-based); beta is the complement.
pub fn parse_partition(text: &str, n: usize) -> Result<IndexPartition> {
    let mut alpha = Vec::new();
    for (k, item) in text.split(',').enumerate() {
        let item = item.trim();
        if item.is_empty() {
            if text.trim().is_empty() {
                break;
            }
            return Err(Error::InvalidPartition(format!("empty item at position {}", k + 1)));
        }
        let index: usize = item
            .parse()
            .map_err(|_| Error::InvalidPartition(format!("'{item}' is not an index")))?;
        alpha.push(index);
    }
    IndexPartition::from_one_based(n, &alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    const SAMPLE4: &str = "1 -0.01 0 7\n0.1 0.9 -1.1 0.3\n-0.11 0.2 0.9 0.2\n2 0.4 -0.1 1.1";

    #[test]
    fn sample4_matrix_text() {
        let doc = parse_matrix(SAMPLE4.as_bytes(), FormatHint::Auto).unwrap();
        assert_eq!(doc.format, SourceFormat::DenseText);
        let a = doc.matrix;
        assert_eq!(a.dim(), 4);
        assert_eq!(a.get(0, 3), Complex64::new(7.0, 0.0));
        assert_eq!(a.get(2, 0), Complex64::new(-0.11, 0.0));
    }

    #[test]
    fn identity_with_complex_literal() {
        let a = parse_matrix(b"1+0i 0\n0 1", FormatHint::Auto).unwrap().matrix;
        assert_eq!(a, ComplexMatrix::identity(2).unwrap());
        let b = parse_matrix(b"# comment\n1, 2i\n\n-i, 3-4.5e-1i\n", FormatHint::DenseText)
            .unwrap()
            .matrix;
        assert_eq!(b.get(1, 0), Complex64::new(0.0, -1.0));
        assert_eq!(b.get(1, 1), Complex64::new(3.0, -0.45));
    }

    #[test]
    fn ragged_and_bad_input() {
        match parse_matrix(b"1 2\n3", FormatHint::Auto) {
            Err(Error::Parse { line: 2, message, .. }) => assert!(message.contains("expected 2 entries")),
            other => panic!("{other:?}"),
        }
        match parse_matrix(b"1 2\n3 x", FormatHint::Auto) {
            Err(Error::Parse { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_matrix(b"1 2 3\n4 5 6", FormatHint::Auto),
            Err(Error::NotSquare { .. })
        ));
        assert!(parse_matrix(b"1 nan\n0 1", FormatHint::Auto).is_err());
        assert!(parse_matrix(b"1 1e999\n0 1", FormatHint::Auto).is_err());
        assert!(parse_matrix(b"5", FormatHint::Auto).is_err());
        assert!(parse_matrix(b"  \n", FormatHint::Auto).is_err());
    }

    #[test]
    fn partitions_from_text() {
        let p = parse_partition("1,3", 4).unwrap();
        assert_eq!(p.alpha_one_based(), vec![1, 3]);
        assert_eq!(p.beta_one_based(), vec![2, 4]);
        assert!(matches!(parse_partition("1,2,3,4", 4), Err(Error::InvalidPartition(_))));
        assert!(matches!(
            parse_partition("0,1", 4),
            Err(Error::IndexOutOfRange { index: 0, .. })
        ));
        assert!(matches!(parse_partition("1,1", 4), Err(Error::RepeatedIndex(1))));
        assert!(parse_partition("", 4).is_err());
        assert!(parse_partition("1,,2", 4).is_err());
        assert!(parse_partition("5", 4).is_err());
    }

    #[test]
    fn dense_text_round_trip_special_values() {
        let a = ComplexMatrix::from_rows(&[
            [Complex64::new(-0.0, -0.0), Complex64::new(1e-300, 2.5e20)],
            [Complex64::new(0.1, 0.0), Complex64::new(f64::MAX, -f64::MIN_POSITIVE)],
        ])
        .unwrap();
        let back = parse_matrix(write_dense_text(&a).as_bytes(), FormatHint::Auto)
            .unwrap()
            .matrix;
        for (x, y) in a.as_row_major().iter().zip(back.as_row_major()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
    }
}

//! Matrix Market reader and writer for dense complex matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::numfmt::g17;

#[derive(Clone, Copy, PartialEq)]
enum Layout {
    Array,
    Coordinate,
}

#[derive(Clone, Copy, PartialEq)]
enum Field {
    Real,
    Complex,
}

/// Parses `array` or `coordinate` Matrix Market text. Coordinate entries not
/// listed are zero; repeated coordinates are summed.
pub fn parse_matrix_market(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let words: Vec<String> = header.split_whitespace().map(|w| w.to_ascii_lowercase()).collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err(Error::parse(
            1,
            1,
            "expected '%%MatrixMarket matrix <layout> <field> <symmetry>'",
        ));
    }
    let layout = match words[2].as_str() {
        "array" => Layout::Array,
        "coordinate" => Layout::Coordinate,
        other => return Err(Error::parse(1, 1, format!("unsupported layout '{other}'"))),
    };
    let field = match words[3].as_str() {
        "complex" => Field::Complex,
        "real" | "integer" | "double" => Field::Real,
        other => return Err(Error::parse(1, 1, format!("unsupported field '{other}'"))),
    };
    if words[4] != "general" {
        return Err(Error::parse(
            1,
            1,
            format!("unsupported symmetry '{}', only general", words[4]),
        ));
    }

    let mut data = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });

    let (size_line, size) = data.next().ok_or_else(|| Error::parse(2, 1, "missing size line"))?;
    let dims: Vec<usize> = size
        .split_whitespace()
        .map(|w| w.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(size_line, 1, "malformed size line"))?;
    let expected_dims = if layout == Layout::Array { 2 } else { 3 };
    if dims.len() != expected_dims {
        return Err(Error::parse(
            size_line,
            1,
            format!("size line needs {expected_dims} integers"),
        ));
    }
    let (rows, cols) = (dims[0], dims[1]);
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    let n = rows;
    let values_per_entry = if field == Field::Complex { 2 } else { 1 };

    let number = |line: usize, column: usize, w: &str| -> Result<f64> {
        let v: f64 = w
            .parse()
            .map_err(|_| Error::parse(line, column, format!("'{w}' is not a number")))?;
        if !v.is_finite() {
            return Err(Error::parse(line, column, format!("'{w}' is not finite")));
        }
        Ok(v)
    };
    let value = |line: usize, words: &[&str]| -> Result<Complex64> {
        let re = number(line, 1, words[0])?;
        let im = if values_per_entry == 2 {
            number(line, 2, words[1])?
        } else {
            0.0
        };
        Ok(Complex64::new(re, im))
    };

    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    match layout {
        Layout::Array => {
            // Column-major.
            let mut k = 0;
            for (line, l) in data {
                let words: Vec<&str> = l.split_whitespace().collect();
                if words.len() != values_per_entry {
                    return Err(Error::parse(
                        line,
                        1,
                        format!("expected {values_per_entry} values per line"),
                    ));
                }
                if k >= n * n {
                    return Err(Error::parse(line, 1, "more entries than the size line declares"));
                }
                entries[(k % n) * n + k / n] = value(line, &words)?;
                k += 1;
            }
            if k != n * n {
                return Err(Error::parse(
                    size_line,
                    1,
                    format!("expected {} entries, found {k}", n * n),
                ));
            }
        }
        Layout::Coordinate => {
            let nnz = dims[2];
            let mut seen = 0;
            for (line, l) in data {
                let words: Vec<&str> = l.split_whitespace().collect();
                if words.len() != 2 + values_per_entry {
                    return Err(Error::parse(
                        line,
                        1,
                        format!("expected {} fields", 2 + values_per_entry),
                    ));
                }
                let index = |w: &str, column: usize| -> Result<usize> {
                    match w.parse::<usize>() {
                        Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                        _ => Err(Error::parse(line, column, format!("index '{w}' outside 1..={n}"))),
                    }
                };
                let (r, c) = (index(words[0], 1)?, index(words[1], 2)?);
                entries[r * n + c] += value(line, &words[2..])?;
                seen += 1;
            }
            if seen != nnz {
                return Err(Error::parse(
                    size_line,
                    1,
                    format!("expected {nnz} entries, found {seen}"),
                ));
            }
        }
    }
    ComplexMatrix::from_row_major(n, entries)
}

/// Dense `array complex general` form.
pub fn write_matrix_market(a: &ComplexMatrix) -> String {
    let n = a.dim();
    let mut out = format!("%%MatrixMarket matrix array complex general\n{n} {n}\n");
    for c in 0..n {
        for r in 0..n {
            let z = a.get(r, c);
            out.push_str(&format!("{} {}\n", g17(z.re), g17(z.im)));
        }
    }
    out
}

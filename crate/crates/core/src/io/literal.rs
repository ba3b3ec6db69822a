//! Complex literals: optional sign, decimal or scientific real part, optional
//! signed imaginary term ending in `i`. A bare `i` means `1i`.

use num_complex::Complex64;

/// Parses one literal such as `2`, `-3.5i`, `1e-3+2i`, `-i`.
pub fn parse_complex(token: &str) -> Result<Complex64, String> {
    let bad = || format!("'{token}' is not a complex number");
    if token.is_empty() {
        return Err(bad());
    }
    let z = match token.strip_suffix('i') {
        None => Complex64::new(real(token).ok_or_else(bad)?, 0.0),
        Some(body) => {
            // Split before the last sign that does not open the literal or an exponent.
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
            match split {
                Some(k) => Complex64::new(
                    real(&body[..k]).ok_or_else(bad)?,
                    imaginary(&body[k..]).ok_or_else(bad)?,
                ),
                None => Complex64::new(0.0, imaginary(body).ok_or_else(bad)?),
            }
        }
    };
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(format!("'{token}' is not finite"));
    }
    Ok(z)
}

fn real(s: &str) -> Option<f64> {
    // Only digits, signs, dots and exponents; this keeps out "inf" and "nan".
    let ok = !s.is_empty()
        && s.bytes().any(|b| b.is_ascii_digit())
        && s.bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'));
    if ok {
        s.parse().ok()
    } else {
        None
    }
}

fn imaginary(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => real(s),
    }
}

/// Shortest text that parses back to the same bits.
pub fn format_complex(z: Complex64) -> String {
    let im_zero = z.im == 0.0 && z.im.is_sign_positive();
    if im_zero {
        return real_text(z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{}i", real_text(z.re), real_text(z.im.abs()))
}

fn real_text(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn grammar() {
        assert_eq!(parse_complex("2").unwrap(), c(2.0, 0.0));
        assert_eq!(parse_complex("-2.5").unwrap(), c(-2.5, 0.0));
        assert_eq!(parse_complex("+3").unwrap(), c(3.0, 0.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("4i").unwrap(), c(0.0, 4.0));
        assert_eq!(parse_complex("1+i").unwrap(), c(1.0, 1.0));
        assert_eq!(parse_complex("1-2i").unwrap(), c(1.0, -2.0));
        assert_eq!(parse_complex("1e-3+2E+2i").unwrap(), c(1e-3, 200.0));
        assert_eq!(parse_complex("-1.5e3-0.5i").unwrap(), c(-1500.0, -0.5));
        assert_eq!(parse_complex("0.8917+0.4921i").unwrap(), c(0.8917, 0.4921));
        for bad in [
            "", "x", "1+2", "1i+2", "inf", "nan", "1+nani", "--1", "1..2", "e5", "1ii", "1e999",
        ] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_complex(c(1.0, 0.0)), "1");
        assert_eq!(format_complex(c(1.0, -0.0)), "1-0i");
        assert_eq!(format_complex(c(0.5, 2.0)), "0.5+2i");
        assert_eq!(format_complex(c(-1e-300, 1e20)), "-1e-300+1e20i");
        assert_eq!(
            parse_complex(&format_complex(c(-0.0, 0.0))).unwrap().re.to_bits(),
            (-0.0f64).to_bits()
        );
    }
}

//! The JSON report shared by every command.
//!
//! Keys always appear in the same order and absent sections are written as
//! `null`. Floating-point numbers use 17 significant digits, so writing a
//! parsed report again gives identical bytes.

use std::io;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::ser::{Formatter, Serializer};
use serde_json::{json, Map, Value};

use crate::certificate::Certificate;
use crate::eigen::Spectrum;
use crate::error::Result;
use crate::matrix::IndexPartition;
use crate::numfmt::g17;
use crate::regions::MembershipReport;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Areas {
    pub g: f64,
    pub e: f64,
    pub gershgorin: f64,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub matrix_name: Option<String>,
    pub n: Option<usize>,
    pub partition: Option<IndexPartition>,
    pub spectrum: Option<Spectrum>,
    pub membership: Option<Vec<Value>>,
    pub areas: Option<Areas>,
    pub certificate: Option<Value>,
    pub timings_ms: Option<Vec<(String, f64)>>,
    /// Command-specific payload, written last under `"extra"`.
    pub extra: Option<Value>,
}

/// Finite numbers as JSON numbers (negative zero folded to zero), others as null.
pub(crate) fn number(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x + 0.0)
    } else {
        Value::Null
    }
}

fn partition_json(p: &IndexPartition) -> Value {
    json!({ "alpha": p.alpha_one_based(), "beta": p.beta_one_based() })
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": number(z.re), "im": number(z.im) })
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    Value::Array(
        s.eigenvalues
            .iter()
            .zip(&s.residuals)
            .map(|(l, r)| json!({ "re": number(l.re), "im": number(l.im), "residual": number(*r) }))
            .collect(),
    )
}

pub fn membership_json(m: &MembershipReport, partition: &IndexPartition) -> Value {
    let disks = |v: &[(usize, bool)]| -> Value {
        v.iter()
            .map(|&(k, inside)| json!({ "index": k + 1, "inside": inside }))
            .collect()
    };
    let pairs: Value = m
        .pairs
        .iter()
        .map(|p| {
            json!({
                "i": p.i + 1,
                "j": p.j + 1,
                "oval_inequality": p.oval_inequality,
                "in_G_ij": p.in_g_ij,
                "in_E_tilde": p.in_e_tilde,
                "in_E_hat": p.in_e_hat,
            })
        })
        .collect();
    json!({
        "partition": partition_json(partition),
        "point": complex_json(m.point),
        "in_G": m.in_g,
        "in_E": m.in_e,
        "in_gershgorin": m.in_gershgorin,
        "in_farid": m.in_farid,
        "in_farid_union": m.in_farid_union,
        "alpha_disks": disks(&m.alpha_disks),
        "beta_disks": disks(&m.beta_disks),
        "pairs": pairs,
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    let flags = |v: &[(usize, bool)]| -> Value {
        v.iter()
            .map(|&(k, ok)| json!({ "index": k + 1, "holds": ok }))
            .collect()
    };
    let by = |d: Option<crate::certificate::Disjunct>| d.map_or(Value::Null, |d| Value::from(d.name()));
    let pairs: Value = c
        .pairs
        .iter()
        .map(|p| {
            json!({
                "i": p.i + 1,
                "j": p.j + 1,
                "III": p.condition_iii(),
                "IV": p.condition_iv(),
                "III_by": by(p.iii_by()),
                "IV_by": by(p.iv_by()),
                "oval_strict": p.oval_strict,
                "tilde_at_zero": p.tilde_at_zero,
                "hat_at_zero": p.hat_at_zero,
            })
        })
        .collect();
    json!({
        "nonsingular": c.nonsingular,
        "partition": partition_json(&c.partition),
        "I": flags(&c.alpha_conditions),
        "II": flags(&c.beta_conditions),
        "pairs": pairs,
        "first_failure": c.first_failure(),
    })
}

impl Report {
    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), Value::from(SCHEMA_VERSION));
        m.insert(
            "matrix_name".into(),
            self.matrix_name.clone().map_or(Value::Null, Value::from),
        );
        m.insert("n".into(), self.n.map_or(Value::Null, Value::from));
        m.insert(
            "partition".into(),
            self.partition.as_ref().map_or(Value::Null, partition_json),
        );
        m.insert(
            "eigenvalues".into(),
            self.spectrum.as_ref().map_or(Value::Null, spectrum_json),
        );
        m.insert(
            "membership".into(),
            self.membership.clone().map_or(Value::Null, Value::Array),
        );
        m.insert(
            "areas".into(),
            self.areas.map_or(
                Value::Null,
                |a| json!({ "G": number(a.g), "E": number(a.e), "gershgorin": number(a.gershgorin) }),
            ),
        );
        m.insert("certificate".into(), self.certificate.clone().unwrap_or(Value::Null));
        m.insert(
            "timings_ms".into(),
            self.timings_ms.as_ref().map_or(Value::Null, |t| {
                Value::Object(t.iter().map(|(k, v)| (k.clone(), number(*v))).collect())
            }),
        );
        m.insert("extra".into(), self.extra.clone().unwrap_or(Value::Null));
        Value::Object(m)
    }

    pub fn to_json(&self) -> Vec<u8> {
        canonical_json(&self.to_value())
    }
}

struct G17Formatter;

impl Formatter for G17Formatter {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(g17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Compact JSON with 17-significant-digit floats.
pub fn canonical_json(value: &Value) -> Vec<u8> {
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, G17Formatter);
    value.serialize(&mut ser).expect("writing JSON to memory");
    out
}

pub fn write_json<W: io::Write>(value: &Value, sink: &mut W) -> Result<()> {
    sink.write_all(&canonical_json(value))?;
    sink.write_all(b"\n")?;
    Ok(())
}

/// Parses a report (or any JSON), keeping key order.
pub fn parse_report(bytes: &[u8]) -> Result<Value> {
    serde_json::from_slice(bytes).map_err(|e| crate::error::Error::parse(e.line(), e.column(), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sections_are_null() {
        let text = String::from_utf8(Report::default().to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"schema":1,"matrix_name":null,"n":null,"partition":null,"eigenvalues":null,"membership":null,"areas":null,"certificate":null,"timings_ms":null,"extra":null}"#
        );
    }

    #[test]
    fn reserialization_is_identical() {
        let report = Report {
            matrix_name: Some("sample4".into()),
            n: Some(4),
            partition: Some(IndexPartition::from_alpha(4, [0, 2]).unwrap()),
            spectrum: Some(Spectrum {
                eigenvalues: vec![Complex64::new(4.8161392, 0.0), Complex64::new(0.1, -1e-7)],
                residuals: vec![1.25e-16, 0.0],
                iterations: 3,
                converged: true,
            }),
            areas: Some(Areas {
                g: 12.5,
                e: 1.0 / 3.0,
                gershgorin: -0.0,
            }),
            timings_ms: Some(vec![("solve".into(), 0.0123)]),
            ..Default::default()
        };
        let bytes = report.to_json();
        let text = String::from_utf8(bytes.clone()).unwrap();
        assert!(text.contains(r#""E":0.33333333333333331"#));
        assert!(text.contains(r#""im":-9.9999999999999995e-08"#));
        assert!(text.contains(r#""gershgorin":0"#));
        let parsed = parse_report(&bytes).unwrap();
        assert_eq!(canonical_json(&parsed), bytes);
        assert_eq!(parsed["eigenvalues"].as_array().unwrap().len(), 2);
    }
}

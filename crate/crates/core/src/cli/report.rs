//! Report types and their JSON / text rendering.

use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;
use serde_json::Value;

use crate::complex::Complex;
use crate::cubic::CubicKind;
use crate::roots::RootSet;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexOut {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for ComplexOut {
    fn from(z: Complex) -> Self {
        ComplexOut { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootOut {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    pub residual: f64,
}

pub fn roots_out(rs: &RootSet) -> Vec<RootOut> {
    rs.iter()
        .map(|(z, m, r)| RootOut {
            re: z.re,
            im: z.im,
            multiplicity: m,
            residual: r,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NickallsOut {
    pub delta: ComplexOut,
    pub h: ComplexOut,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationOut {
    pub kind: CubicKind,
    pub distinct_real_roots: Option<usize>,
    pub nickalls: NickallsOut,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Intermediates {
    Cubic {
        u3: ComplexOut,
        v3: ComplexOut,
        u: ComplexOut,
        v: ComplexOut,
    },
    Quartic {
        resolvent: Vec<ComplexOut>,
        uvw: Vec<ComplexOut>,
        gammas: Vec<ComplexOut>,
        chosen_u: ComplexOut,
    },
    Lagrange {
        resolvent: Vec<ComplexOut>,
        s: Vec<ComplexOut>,
    },
    Descartes {
        k: ComplexOut,
        l: ComplexOut,
        m: ComplexOut,
        n: ComplexOut,
        expansion_residual: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodReport {
    pub name: String,
    pub roots: Vec<RootOut>,
    pub intermediates: Option<Intermediates>,
    pub skipped_reason: Option<String>,
    pub vieta_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub methods: Vec<String>,
    /// `max_pairwise_distance[i][j]`: optimal-matching distance between the
    /// root multisets of `methods[i]` and `methods[j]`.
    pub max_pairwise_distance: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub input: Vec<ComplexOut>,
    pub degree: usize,
    pub discriminant: Option<ComplexOut>,
    pub classification: Option<ClassificationOut>,
    pub methods: Vec<MethodReport>,
    pub cross_check: Option<CrossCheck>,
}

/// Writes every float as `d.dddddddddddddddde±x` (17 significant digits).
struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(w, "{value:.16e}")
        } else {
            w.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(value))
    }
}

/// Serializes with sorted keys and fixed float formatting, on one line.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("report is serializable");
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, FixedFloats);
    v.serialize(&mut ser).expect("write to Vec");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

fn fmt_real(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-4..1e15).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

fn fmt_complex(re: f64, im: f64) -> String {
    let r = fmt_real(re);
    if im == 0.0 {
        r
    } else if im < 0.0 {
        format!("{r} - {}i", fmt_real(-im))
    } else {
        format!("{r} + {}i", fmt_real(im))
    }
}

/// Human-readable rendering.
pub fn to_text(report: &SolveReport) -> String {
    let mut out = String::new();
    let coeffs: Vec<String> = report
        .input
        .iter()
        .map(|z| fmt_complex(z.re, z.im))
        .collect();
    let _ = writeln!(out, "degree {}: [{}]", report.degree, coeffs.join(", "));
    if let Some(d) = &report.discriminant {
        let _ = writeln!(out, "discriminant: {}", fmt_complex(d.re, d.im));
    }
    if let Some(cl) = &report.classification {
        let _ = writeln!(out, "classification: {:?}", cl.kind);
    }
    for m in &report.methods {
        if let Some(why) = &m.skipped_reason {
            let _ = writeln!(out, "{}: skipped ({why})", m.name);
            continue;
        }
        let _ = writeln!(out, "{}:", m.name);
        for r in &m.roots {
            let mult = if r.multiplicity > 1 {
                format!(" (x{})", r.multiplicity)
            } else {
                String::new()
            };
            let _ = writeln!(
                out,
                "  {}{mult}  |f|={:.3e}",
                fmt_complex(r.re, r.im),
                r.residual
            );
        }
    }
    if let Some(cc) = &report.cross_check {
        let worst = cc
            .max_pairwise_distance
            .iter()
            .flatten()
            .fold(0.0f64, |a, &b| a.max(b));
        let _ = writeln!(
            out,
            "cross-check: {} methods, max pairwise distance {worst:.3e}",
            cc.methods.len()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_float_format_round_trips() {
        let v = serde_json::json!({"b": 0.1, "a": [1.0, -0.0, 1e-300, 12345.678], "n": 3});
        let s = to_json(&v);
        assert_eq!(
            s,
            r#"{"a":[1.0000000000000000e0,-0.0000000000000000e0,1.0000000000000000e-300,1.2345678000000000e4],"b":1.0000000000000001e-1,"n":3}"#
        );
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(to_json(&back), s);
    }

    #[test]
    fn text_formatting() {
        assert_eq!(fmt_complex(1.0, 0.0), "1");
        assert_eq!(fmt_complex(-1.0, -3.0), "-1 - 3i");
        assert_eq!(fmt_complex(0.5, 2.0), "0.5 + 2i");
        assert_eq!(fmt_complex(-1.0, 4.9e-32), "-1 + 4.9e-32i");
    }
}

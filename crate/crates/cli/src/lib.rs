//! Shared pieces of the command-line tool: gate-spec parsing, numeric
//! formatting, and the Euler-vs-quaternion fractionation demo.

use num_complex::Complex64;

use fracgate::{gate_power, hadamard, rx, ry, Unitary2};

/// Parses a complex scalar written as `a`, `bi`, or `a+bi` / `a-bi`.
pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".to_string());
    }
    if let Some(body) = s.strip_suffix(['i', 'j']) {
        // Split mantissa into real and imaginary parts at the last +/-
        // that is not an exponent sign or leading sign.
        let chars: Vec<char> = body.chars().collect();
        let mut split = None;
        for idx in (1..chars.len()).rev() {
            let c = chars[idx];
            if (c == '+' || c == '-') && !matches!(chars[idx - 1], 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("bad imaginary part in {text:?}"))?,
        };
        let re = re_str
            .parse::<f64>()
            .map_err(|_| format!("bad real part in {text:?}"))?;
        Ok(Complex64::new(re, im))
    } else {
        s.parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("bad complex literal {text:?}"))
    }
}

/// A gate spec is either a named gate (X, Y, Z, H, I) or four
/// comma-separated complex entries in row-major order.
pub fn parse_gate_spec(spec: &str) -> Result<Unitary2, String> {
    if !spec.contains(',') {
        return fracgate::named_gate(spec).map_err(|e| e.to_string());
    }
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 4 {
        return Err(format!(
            "expected 4 comma-separated entries, got {}",
            parts.len()
        ));
    }
    let mut entries = [Complex64::new(0.0, 0.0); 4];
    for (slot, part) in entries.iter_mut().zip(&parts) {
        *slot = parse_complex(part)?;
    }
    Unitary2::new([[entries[0], entries[1]], [entries[2], entries[3]]])
        .map_err(|e| e.to_string())
}

/// `re+imi` with fixed precision, e.g. `0.707106781187+0.000000000000i`.
/// Values that round to zero print as positive zero, so sub-precision
/// dust cannot flip signs between runs.
pub fn format_complex(c: Complex64, precision: usize) -> String {
    let clean = |x: f64| {
        if x.abs() < 0.5 * 10f64.powi(-(precision as i32)) {
            0.0
        } else {
            x
        }
    };
    format!("{:.p$}{:+.p$}i", clean(c.re), clean(c.im), p = precision)
}

/// Row-major, tab-separated entries, one row per line.
pub fn format_matrix(u: &Unitary2, precision: usize) -> String {
    let m = u.entries();
    let mut out = String::new();
    for row in &m {
        let cells: Vec<String> = row.iter().map(|&c| format_complex(c, precision)).collect();
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}

/// Overlap modulus |<a|b>| of two single-qubit states.
pub fn overlap(a: [Complex64; 2], b: [Complex64; 2]) -> f64 {
    (a[0].conj() * b[0] + a[1].conj() * b[1]).norm()
}

/// One fractionation path of the demo: the per-step operator applied ten
/// times to |0>.
#[derive(Debug, Clone)]
pub struct DemoPath {
    pub label: &'static str,
    pub state: [Complex64; 2],
    /// Overlap modulus with H|0>.
    pub overlap_with_target: f64,
}

/// Comparison of Euler-style fractionation of the Hadamard gate against
/// the quaternion tenth root.
#[derive(Debug, Clone)]
pub struct EulerDemo {
    /// H|0> = (1, 1)/sqrt(2).
    pub target: [Complex64; 2],
    /// Tenth-size Euler steps, in several step conventions; none of them
    /// reaches the target.
    pub euler_paths: Vec<DemoPath>,
    /// B = H^(1/10) via the quaternion root; B^10 |0>.
    pub quaternion_state: [Complex64; 2],
    pub quaternion_overlap: f64,
    /// Largest |entry| difference between B^10 and H.
    pub quaternion_deviation: f64,
}

fn power_state(u: &Unitary2, times: usize) -> [Complex64; 2] {
    let mut acc = Unitary2::identity();
    for _ in 0..times {
        acc = u.mul(&acc);
    }
    acc.apply([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)])
}

/// Runs the fractionation comparison.
///
/// The Hadamard gate decomposes into a 90 degree Y rotation followed by
/// a 180 degree X rotation. Splitting those Euler angles into ten equal
/// steps and repeating the pair ten times does not recover H, in any of
/// the step conventions below; the quaternion tenth root does, to
/// machine precision.
pub fn euler_demo() -> EulerDemo {
    let deg = std::f64::consts::PI / 180.0;
    let h = hadamard();
    let target = h.apply([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);

    let mut euler_paths = Vec::new();
    for (label, step) in [
        ("ry(9 deg) then rx(18 deg)", rx(18.0 * deg).mul(&ry(9.0 * deg))),
        ("rx(18 deg) then ry(9 deg)", ry(9.0 * deg).mul(&rx(18.0 * deg))),
        ("ry(9 deg) then rx(9 deg), equal steps", rx(9.0 * deg).mul(&ry(9.0 * deg))),
    ] {
        let state = power_state(&step, 10);
        euler_paths.push(DemoPath {
            label,
            state,
            overlap_with_target: overlap(target, state),
        });
    }

    let root = gate_power(&h, 10.0, true).expect("H is unitary and 10 is a valid root index");
    let mut tenth = Unitary2::identity();
    for _ in 0..10 {
        tenth = root.mul(&tenth);
    }
    let quaternion_state = tenth.apply([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]);
    EulerDemo {
        target,
        quaternion_overlap: overlap(target, quaternion_state),
        quaternion_deviation: tenth.max_abs_diff(&h),
        quaternion_state,
        euler_paths,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_complex("-2.5").unwrap(), Complex64::new(-2.5, 0.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("0.5+0.5i").unwrap(), Complex64::new(0.5, 0.5));
        assert_eq!(parse_complex("1e-3-2e-3i").unwrap(), Complex64::new(1e-3, -2e-3));
        assert_eq!(parse_complex("0.3i").unwrap(), Complex64::new(0.0, 0.3));
        assert!(parse_complex("duck").is_err());
    }

    #[test]
    fn gate_spec_parsing() {
        assert!(parse_gate_spec("X").is_ok());
        assert!(parse_gate_spec("h").is_ok());
        let custom = parse_gate_spec("0+0i,1,1,0").unwrap();
        assert!(custom.approx_eq(&fracgate::pauli_x(), 1e-12));
        assert!(parse_gate_spec("1,0,0,2").is_err());
        assert!(parse_gate_spec("1,0,0").is_err());
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(Complex64::new(0.5, -0.25), 3), "0.500-0.250i");
        assert_eq!(format_complex(Complex64::new(-1.0, 2.0), 2), "-1.00+2.00i");
    }

    #[test]
    fn demo_shapes() {
        let demo = euler_demo();
        assert_eq!(demo.euler_paths.len(), 3);
        assert!(demo.quaternion_deviation < 1e-9);
        assert!((demo.quaternion_overlap - 1.0).abs() < 1e-9);
        for path in &demo.euler_paths {
            assert!(path.overlap_with_target < 1.0 - 1e-3, "{}", path.label);
        }
    }
}

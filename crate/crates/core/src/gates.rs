//! Named gate constructors: Pauli gates, Hadamard, axis rotations, and
//! the fractional generators X^alpha and H^alpha.
//!
//! The fractional generators are the special unitary images of quaternion
//! powers: `fractional_x(alpha)` is `k^alpha` and `fractional_h(alpha)`
//! is `((i + k)/sqrt(2))^alpha`, both with polar angle `pi alpha / 2`.
//! Named gates return the textbook U(2) forms, which differ from the
//! fractional generators at alpha = 1 by a global phase of i.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::su2::{SpecialUnitary2, Unitary2};

/// Which one-parameter family a fractional gate is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorTag {
    /// Powers of the quaternion k (X rotations).
    #[serde(rename = "x")]
    XRotation,
    /// Powers of the quaternion (i + k)/sqrt(2) (Hadamard rotations).
    #[serde(rename = "h")]
    Hadamard,
}

impl GeneratorTag {
    /// Canonical CLI spelling: "x" or "h".
    pub fn name(&self) -> &'static str {
        match self {
            Self::XRotation => "x",
            Self::Hadamard => "h",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(Self::XRotation),
            "h" => Ok(Self::Hadamard),
            _ => Err(Error::UnknownGenerator {
                name: name.to_string(),
            }),
        }
    }
}

impl std::fmt::Display for GeneratorTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A fractional generator: a family tag plus the exponent alpha, with
/// alpha = 1 the full gate. The quaternion polar angle is pi*alpha/2,
/// and the adder parameterization uses theta = pi*alpha.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorKind {
    pub tag: GeneratorTag,
    pub exponent: f64,
}

impl GeneratorKind {
    pub fn new(tag: GeneratorTag, exponent: f64) -> Self {
        Self { tag, exponent }
    }

    /// Generator at angle parameter theta = pi * alpha.
    pub fn from_angle(tag: GeneratorTag, theta: f64) -> Self {
        Self {
            tag,
            exponent: theta / std::f64::consts::PI,
        }
    }

    /// The angle parameter theta = pi * alpha.
    pub fn angle(&self) -> f64 {
        std::f64::consts::PI * self.exponent
    }

    /// The concrete gate matrix.
    pub fn gate(&self) -> SpecialUnitary2 {
        match self.tag {
            GeneratorTag::XRotation => fractional_x(self.exponent),
            GeneratorTag::Hadamard => fractional_h(self.exponent),
        }
    }
}

/// Fractional X gate:
///
/// ```text
/// [ cos(pi a/2)    i sin(pi a/2) ]
/// [ i sin(pi a/2)  cos(pi a/2)   ]
/// ```
pub fn fractional_x(alpha: f64) -> SpecialUnitary2 {
    let (s, c) = (std::f64::consts::FRAC_PI_2 * alpha).sin_cos();
    SpecialUnitary2::new_unchecked([
        [Complex64::new(c, 0.0), Complex64::new(0.0, s)],
        [Complex64::new(0.0, s), Complex64::new(c, 0.0)],
    ])
}

/// Fractional Hadamard gate:
///
/// ```text
/// [ cos(pi a/2) + i sin(pi a/2)/sqrt(2)   i sin(pi a/2)/sqrt(2)         ]
/// [ i sin(pi a/2)/sqrt(2)                 cos(pi a/2) - i sin(pi a/2)/sqrt(2) ]
/// ```
pub fn fractional_h(alpha: f64) -> SpecialUnitary2 {
    let (s, c) = (std::f64::consts::FRAC_PI_2 * alpha).sin_cos();
    let sv = s * std::f64::consts::FRAC_1_SQRT_2;
    SpecialUnitary2::new_unchecked([
        [Complex64::new(c, sv), Complex64::new(0.0, sv)],
        [Complex64::new(0.0, sv), Complex64::new(c, -sv)],
    ])
}

/// Rotation about the X axis: `[[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]`.
pub fn rx(theta: f64) -> Unitary2 {
    let (s, c) = (theta / 2.0).sin_cos();
    Unitary2::new_unchecked([
        [Complex64::new(c, 0.0), Complex64::new(0.0, -s)],
        [Complex64::new(0.0, -s), Complex64::new(c, 0.0)],
    ])
}

/// Rotation about the Y axis: `[[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]`.
pub fn ry(theta: f64) -> Unitary2 {
    let (s, c) = (theta / 2.0).sin_cos();
    Unitary2::new_unchecked([
        [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
    ])
}

/// Rotation about the Z axis: `diag(e^{-i t/2}, e^{i t/2})`.
pub fn rz(theta: f64) -> Unitary2 {
    let half = theta / 2.0;
    Unitary2::new_unchecked([
        [Complex64::from_polar(1.0, -half), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::from_polar(1.0, half)],
    ])
}

pub fn identity() -> Unitary2 {
    Unitary2::identity()
}

pub fn pauli_x() -> Unitary2 {
    Unitary2::new_unchecked([
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
    ])
}

pub fn pauli_y() -> Unitary2 {
    Unitary2::new_unchecked([
        [Complex64::new(0.0, 0.0), Complex64::new(0.0, -1.0)],
        [Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)],
    ])
}

pub fn pauli_z() -> Unitary2 {
    Unitary2::new_unchecked([
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
    ])
}

pub fn hadamard() -> Unitary2 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Unitary2::new_unchecked([
        [Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
        [Complex64::new(s, 0.0), Complex64::new(-s, 0.0)],
    ])
}

/// Textbook gate by name: X, Y, Z, H, or I (case-insensitive).
pub fn named_gate(name: &str) -> Result<Unitary2> {
    match name.trim().to_ascii_uppercase().as_str() {
        "X" => Ok(pauli_x()),
        "Y" => Ok(pauli_y()),
        "Z" => Ok(pauli_z()),
        "H" => Ok(hadamard()),
        "I" => Ok(identity()),
        _ => Err(Error::UnknownGateName {
            name: name.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{Quaternion, UnitQuaternion};
    use crate::su2::quat_to_su2;

    const TOL: f64 = 1e-12;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fractional_x_endpoints() {
        let full = fractional_x(1.0);
        let ix = SpecialUnitary2::new([[c(0.0, 0.0), c(0.0, 1.0)], [c(0.0, 1.0), c(0.0, 0.0)]])
            .unwrap();
        assert!(full.approx_eq(&ix, TOL));
        assert!(fractional_x(0.0).approx_eq(&SpecialUnitary2::identity(), TOL));

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let half = SpecialUnitary2::new([[c(s, 0.0), c(0.0, s)], [c(0.0, s), c(s, 0.0)]]).unwrap();
        assert!(fractional_x(0.5).approx_eq(&half, TOL));
    }

    #[test]
    fn fractional_h_endpoints() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let ih = SpecialUnitary2::new([[c(0.0, s), c(0.0, s)], [c(0.0, s), c(0.0, -s)]]).unwrap();
        assert!(fractional_h(1.0).approx_eq(&ih, TOL));
        assert!(fractional_h(0.0).approx_eq(&SpecialUnitary2::identity(), TOL));

        let minus_i =
            SpecialUnitary2::new([[c(-1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
                .unwrap();
        assert!(fractional_h(2.0).approx_eq(&minus_i, TOL));
    }

    #[test]
    fn fractional_gates_match_quaternion_powers() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let q_h = UnitQuaternion::new(Quaternion::new(0.0, s, 0.0, s)).unwrap();
        let mut alpha = -2.0;
        while alpha <= 2.0 {
            let via_quat_x = quat_to_su2(UnitQuaternion::K.pow(alpha));
            assert!(fractional_x(alpha).approx_eq(&via_quat_x, TOL), "alpha = {alpha}");
            let via_quat_h = quat_to_su2(q_h.pow(alpha));
            assert!(fractional_h(alpha).approx_eq(&via_quat_h, TOL), "alpha = {alpha}");
            alpha += 0.125;
        }
    }

    #[test]
    fn fractional_gates_form_one_parameter_groups() {
        for (a, b) in [(0.3, 0.4), (-0.7, 1.2), (1.5, 0.25)] {
            let x_sum = fractional_x(a).mul(&fractional_x(b));
            assert!(x_sum.approx_eq(&fractional_x(a + b), TOL));
            let h_sum = fractional_h(a).mul(&fractional_h(b));
            assert!(h_sum.approx_eq(&fractional_h(a + b), TOL));
        }
    }

    #[test]
    fn fractional_gates_are_special() {
        let mut alpha = -2.0;
        while alpha <= 2.0 {
            for g in [fractional_x(alpha), fractional_h(alpha)] {
                let det = g.as_unitary().det();
                assert!((det - c(1.0, 0.0)).norm() <= TOL);
            }
            alpha += 0.25;
        }
    }

    #[test]
    fn rx_examples() {
        let pi = std::f64::consts::PI;
        let expected = Unitary2::new([[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, -1.0), c(0.0, 0.0)]])
            .unwrap();
        assert!(rx(pi).approx_eq(&expected, TOL));
        assert!(rx(0.0).approx_eq(&Unitary2::identity(), TOL));

        let state = rx(pi / 2.0).apply([c(1.0, 0.0), c(0.0, 0.0)]);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((state[0] - c(s, 0.0)).norm() <= TOL);
        assert!((state[1] - c(0.0, -s)).norm() <= TOL);
    }

    #[test]
    fn hadamard_from_y_then_x_rotation() {
        // ry(pi/2) then rx(pi) composes to H up to a global phase.
        let pi = std::f64::consts::PI;
        let u = rx(pi).mul(&ry(pi / 2.0));
        let h = hadamard();
        let phase = u.entry(0, 0) / h.entry(0, 0);
        assert!((phase.norm() - 1.0).abs() <= 1e-10);
        assert!(u.approx_eq(&h.phase_scaled(phase), 1e-10));
    }

    #[test]
    fn named_gates() {
        assert!(named_gate("X")
            .unwrap()
            .approx_eq(&Unitary2::new([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]).unwrap(), TOL));
        assert!(named_gate("I").unwrap().approx_eq(&Unitary2::identity(), TOL));
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!(named_gate("h")
            .unwrap()
            .approx_eq(&Unitary2::new([[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]).unwrap(), TOL));
        assert!(matches!(named_gate("Q"), Err(Error::UnknownGateName { .. })));
    }

    #[test]
    fn generator_kind_round_trips_angle() {
        let g = GeneratorKind::from_angle(GeneratorTag::XRotation, 1.25);
        assert!((g.angle() - 1.25).abs() <= TOL);
        assert_eq!(GeneratorTag::parse("H").unwrap(), GeneratorTag::Hadamard);
        assert!(GeneratorTag::parse("q").is_err());
    }
}

//! CNOT adder circuits: fractionally rotated summand qubits each
//! entangled with one shared sum qubit, evaluated by simulation and by
//! closed form, plus probability surfaces over the input angles.
//!
//! For two X rotations through theta and phi the outcome probability of
//! reading 1 on the sum qubit is
//! `cos^2(theta/2) sin^2(phi/2) + sin^2(theta/2) cos^2(phi/2)`, and for
//! general special unitary inputs written as complex pairs it is
//! `|alpha conj(delta)|^2 + |conj(beta) gamma|^2`.

use crate::error::{Error, Result};
use crate::gates::{GeneratorKind, GeneratorTag};
use crate::sim::{CircuitOp, StateVector};
use crate::su2::{ComplexPairForm, SpecialUnitary2, Unitary2};

/// Capacity cap on summand qubits (the register adds one sum qubit).
pub const MAX_ADDER_INPUTS: usize = 12;

/// A stack of summand inputs feeding one sum qubit.
#[derive(Debug, Clone)]
pub struct AdderSpec {
    inputs: Vec<GeneratorKind>,
}

impl AdderSpec {
    /// Between 1 and 12 inputs, all with finite angles.
    pub fn new(inputs: Vec<GeneratorKind>) -> Result<Self> {
        if inputs.is_empty() || inputs.len() > MAX_ADDER_INPUTS {
            return Err(Error::AdderInputCount {
                n: inputs.len(),
                max: MAX_ADDER_INPUTS,
            });
        }
        for (index, g) in inputs.iter().enumerate() {
            if !g.exponent.is_finite() {
                return Err(Error::NonFiniteAngle { index });
            }
        }
        Ok(Self { inputs })
    }

    /// Convenience constructor from (tag, angle-in-radians) pairs.
    pub fn from_angles(pairs: &[(GeneratorTag, f64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(tag, theta)| GeneratorKind::from_angle(tag, theta))
                .collect(),
        )
    }

    pub fn inputs(&self) -> &[GeneratorKind] {
        &self.inputs
    }
}

/// Simulates the two-input adder `[A on q0; CNOT(0,2); B on q1;
/// CNOT(1,2)]` from |000> and returns P(q2 = 1).
pub fn adder_two_simulated(a: &Unitary2, b: &Unitary2) -> f64 {
    let mut s = StateVector::new(3).expect("3 qubits within cap");
    s.apply_1q(a, 0).expect("q0 in range");
    s.apply_cnot(0, 2).expect("valid cnot");
    s.apply_1q(b, 1).expect("q1 in range");
    s.apply_cnot(1, 2).expect("valid cnot");
    s.prob_one(2).expect("q2 in range")
}

/// Closed form for two X rotations:
/// `cos^2(theta/2) sin^2(phi/2) + sin^2(theta/2) cos^2(phi/2)`.
pub fn xrot_probability(theta: f64, phi: f64) -> f64 {
    let (st, ct) = (theta / 2.0).sin_cos();
    let (sp, cp) = (phi / 2.0).sin_cos();
    (ct * sp).powi(2) + (st * cp).powi(2)
}

/// Closed form for general special unitary inputs
/// `A = [[alpha, beta], [-conj(beta), conj(alpha)]]`,
/// `B = [[gamma, delta], [-conj(delta), conj(gamma)]]`:
/// `|alpha conj(delta)|^2 + |conj(beta) gamma|^2`.
pub fn general_two_probability(a: &SpecialUnitary2, b: &SpecialUnitary2) -> Result<f64> {
    let pa = ComplexPairForm::from_su2(a)?;
    let pb = ComplexPairForm::from_su2(b)?;
    let first = pa.alpha * pb.beta.conj();
    let second = pa.beta.conj() * pb.alpha;
    Ok(first.norm_sqr() + second.norm_sqr())
}

/// Simulates `n` summand qubits each CNOT-connected to one sum qubit and
/// returns P(sum = 1).
pub fn adder_n_simulated(spec: &AdderSpec) -> Result<f64> {
    let n = spec.inputs.len();
    let sum_qubit = n;
    let mut ops = Vec::with_capacity(2 * n);
    for (i, g) in spec.inputs.iter().enumerate() {
        ops.push(CircuitOp::Gate {
            matrix: g.gate().as_unitary(),
            target: i,
        });
        ops.push(CircuitOp::Cnot {
            control: i,
            target: sum_qubit,
        });
    }
    let mut s = StateVector::new(n + 1)?;
    s.apply_all(&ops)?;
    s.prob_one(sum_qubit)
}

/// Probability surface over a uniform inclusive grid on [0, 2pi]^2.
#[derive(Debug, Clone)]
pub struct SurfaceGrid {
    theta_axis: Vec<f64>,
    phi_axis: Vec<f64>,
    values: Vec<Vec<f64>>,
}

impl SurfaceGrid {
    pub fn theta_axis(&self) -> &[f64] {
        &self.theta_axis
    }

    pub fn phi_axis(&self) -> &[f64] {
        &self.phi_axis
    }

    /// `values()[i][j]` is the probability at `(theta_axis[i], phi_axis[j])`.
    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// CSV serialization: header `theta,phi,p_one`, rows theta-major then
    /// phi, values printed with `precision` digits after the mantissa
    /// point in scientific notation (at least 12 significant digits at
    /// the default precision of 12).
    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::from("theta,phi,p_one\n");
        for (i, theta) in self.theta_axis.iter().enumerate() {
            for (j, phi) in self.phi_axis.iter().enumerate() {
                out.push_str(&format!(
                    "{:.p$e},{:.p$e},{:.p$e}\n",
                    theta,
                    phi,
                    self.values[i][j],
                    p = precision
                ));
            }
        }
        out
    }
}

/// Evaluates the two-input adder over a `resolution x resolution` grid on
/// [0, 2pi]^2 with inclusive endpoints.
pub fn surface(gen_a: GeneratorTag, gen_b: GeneratorTag, resolution: usize) -> Result<SurfaceGrid> {
    if resolution < 2 {
        return Err(Error::SurfaceResolution { resolution });
    }
    let axis: Vec<f64> = (0..resolution)
        .map(|i| 2.0 * std::f64::consts::PI * i as f64 / (resolution - 1) as f64)
        .collect();
    let mut values = vec![vec![0.0; resolution]; resolution];
    for (i, &theta) in axis.iter().enumerate() {
        let a = GeneratorKind::from_angle(gen_a, theta).gate().as_unitary();
        for (j, &phi) in axis.iter().enumerate() {
            let b = GeneratorKind::from_angle(gen_b, phi).gate().as_unitary();
            values[i][j] = adder_two_simulated(&a, &b);
        }
    }
    Ok(SurfaceGrid {
        theta_axis: axis.clone(),
        phi_axis: axis,
        values,
    })
}

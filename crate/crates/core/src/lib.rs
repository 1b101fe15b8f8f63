//! Fractional powers of single-qubit gates through unit quaternions,
//! CNOT adder circuits that combine fractional rotations nonlinearly,
//! and a bag-of-words topic classifier built from those adders.
//!
//! The pipeline: a unitary gate is projected to its special unitary
//! representative, identified with a unit quaternion, taken to a real
//! power with the de Moivre rule, and mapped back — giving a gate `B`
//! with `B^k = A` for any nonzero real `k`. Fractional rotations produced
//! this way are combined by entangling each rotated qubit with a shared
//! sum qubit; the resulting outcome probability is a nonlinear function
//! of the input angles, which the classifier uses to accumulate
//! word-topic evidence.

pub mod adder;
pub mod classifier;
pub mod error;
pub mod gates;
pub mod quaternion;
pub mod sim;
pub mod su2;

pub use adder::{
    adder_n_simulated, adder_two_simulated, general_two_probability, surface, xrot_probability,
    AdderSpec, SurfaceGrid,
};
pub use classifier::{
    build_vocabulary, tokenize, train, ClassificationResult, ClassifierModel, Corpus,
    CorpusRecord, Evaluation, ScoreMode,
};
pub use error::{Error, Result};
pub use gates::{
    fractional_h, fractional_x, hadamard, identity, named_gate, pauli_x, pauli_y, pauli_z, rx,
    ry, rz, GeneratorKind, GeneratorTag,
};
pub use quaternion::{PolarForm, Quaternion, UnitQuaternion};
pub use sim::{circuit_unitary, CircuitOp, ShotResult, StateVector};
pub use su2::{
    gate_power, project_to_su2, quat_to_su2, su2_to_quat, ComplexPairForm, PhaseFactor,
    SpecialUnitary2, Unitary2,
};

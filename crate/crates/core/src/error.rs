//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by construction-time validation and domain checks.
#[derive(Debug, Error)]
pub enum Error {
    /// The zero quaternion has no inverse.
    #[error("the zero quaternion has no inverse")]
    ZeroQuaternion,

    /// A value that must be a unit quaternion is not.
    #[error("quaternion is not unit: |q|^2 = {norm_sq} (tolerance {tol})")]
    NotUnitQuaternion { norm_sq: f64, tol: f64 },

    /// A polar axis must be a unit imaginary quaternion.
    #[error("polar axis must be a unit imaginary quaternion (w = 0)")]
    InvalidPolarAxis,

    /// A polar angle must lie in [0, pi].
    #[error("polar angle {angle} outside [0, pi]")]
    InvalidPolarAngle { angle: f64 },

    /// Root enumeration of a real quaternion (q = +/-1) is rejected.
    #[error("roots of a real quaternion (q = +/-1) are degenerate and not enumerated")]
    DegenerateRoots,

    /// Root count must be a positive integer.
    #[error("root count must be >= 1")]
    ZeroRootCount,

    /// A matrix that must be unitary is not.
    #[error("matrix is not unitary: max |A A^dag - I| entry = {defect:e} (tolerance {tol:e})")]
    NotUnitary { defect: f64, tol: f64 },

    /// A matrix that must have determinant 1 does not; project it first.
    #[error("matrix determinant {det_re}+{det_im}i != 1; apply project_to_su2 before converting to a quaternion")]
    NotSpecialUnitary { det_re: f64, det_im: f64 },

    /// A phase factor must have unit modulus.
    #[error("phase factor modulus {modulus} != 1")]
    NotUnitPhase { modulus: f64 },

    /// A complex pair (alpha, beta) must satisfy |alpha|^2 + |beta|^2 = 1.
    #[error("complex pair not normalized: |alpha|^2 + |beta|^2 = {norm_sq}")]
    NotPairForm { norm_sq: f64 },

    /// The root index k of a gate power must be finite and nonzero.
    #[error("gate power root index must be finite and nonzero, got {k}")]
    InvalidRootIndex { k: f64 },

    /// Qubit count outside the supported range.
    #[error("qubit count {n} outside supported range 1..={max}")]
    QubitCountOutOfRange { n: usize, max: usize },

    /// Qubit index out of range for the register size.
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitIndexOutOfRange { index: usize, n: usize },

    /// CNOT control and target must differ.
    #[error("CNOT control and target are both qubit {index}")]
    ControlEqualsTarget { index: usize },

    /// Dense circuit matrices are capped at a small qubit count.
    #[error("dense circuit matrix for {n} qubits exceeds the cap of {max}")]
    DenseMatrixTooLarge { n: usize, max: usize },

    /// Shot count must be positive.
    #[error("shot count must be >= 1")]
    ZeroShots,

    /// An adder needs at least one summand and at most the capacity cap.
    #[error("adder input count {n} outside supported range 1..={max}")]
    AdderInputCount { n: usize, max: usize },

    /// Adder angles must be finite.
    #[error("adder angle at position {index} is not finite")]
    NonFiniteAngle { index: usize },

    /// Surface grids need at least two points per axis.
    #[error("surface resolution must be >= 2, got {resolution}")]
    SurfaceResolution { resolution: usize },

    /// Unknown gate name passed to the named-gate constructor.
    #[error("unknown gate name {name:?} (expected one of X, Y, Z, H, I)")]
    UnknownGateName { name: String },

    /// Unknown generator spelling.
    #[error("unknown generator {name:?} (expected \"x\" or \"h\")")]
    UnknownGenerator { name: String },

    /// A corpus must contain at least one record.
    #[error("corpus is empty")]
    EmptyCorpus,

    /// Training requires at least two distinct topics.
    #[error("corpus has a single topic {topic:?}; training needs at least two")]
    SingleTopicCorpus { topic: String },

    /// Malformed corpus line.
    #[error("corpus line {line}: {reason}")]
    CorpusLine { line: usize, reason: String },

    /// Vocabulary size must be positive.
    #[error("vocabulary size must be >= 1")]
    ZeroVocabularySize,

    /// Training increment must be a positive angle.
    #[error("training increment must be > 0, got {increment}")]
    InvalidIncrement { increment: f64 },

    /// Topic not present in the model.
    #[error("topic {topic:?} not in model")]
    UnknownTopic { topic: String },

    /// Model file could not be interpreted.
    #[error("model file: {reason}")]
    ModelFormat { reason: String },

    /// Unsupported model file format version.
    #[error("unsupported model format version {found} (expected {expected})")]
    ModelVersion { found: u32, expected: u32 },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

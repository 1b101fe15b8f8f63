//! The quaternion <-> SU(2) correspondence, the U(2) -> SU(2) phase
//! fibration, and fractional gate powers built from quaternion roots.
//!
//! The unit quaternion `q = a + b i + c j + d k` corresponds to the
//! special unitary matrix
//!
//! ```text
//! [ a + bi   c + di ]
//! [ -c + di  a - bi ]
//! ```
//!
//! A general unitary `A` is `phi * A'` for a special unitary `A'` and a
//! unit phase `phi`; since `A'` and `-A'` are both special, the
//! representative is fixed by picking the one whose quaternion is
//! sign-canonical. Gate powers then reduce to de Moivre powers of the
//! quaternion, with an optional phase root to recover `A` exactly.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, UnitQuaternion};

/// Tolerance for unitarity and determinant checks at construction.
pub const UNITARY_TOL: f64 = 1e-10;

/// Tolerance for unit-modulus phase factors.
pub const PHASE_TOL: f64 = 1e-12;

/// Tolerance for the complex-pair normalization |alpha|^2 + |beta|^2 = 1.
pub const PAIR_TOL: f64 = 1e-12;

/// 2x2 unitary matrix, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    m: [[Complex64; 2]; 2],
}

impl Unitary2 {
    /// Wraps a row-major matrix, requiring `A A^dag = I` entrywise within
    /// 1e-10 and `|det A| = 1` within 1e-10.
    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self> {
        let defect = unitarity_defect(&m);
        if !defect.is_finite() || defect > UNITARY_TOL {
            return Err(Error::NotUnitary {
                defect,
                tol: UNITARY_TOL,
            });
        }
        let det = det2(&m);
        if (det.norm() - 1.0).abs() > UNITARY_TOL {
            return Err(Error::NotUnitary {
                defect: (det.norm() - 1.0).abs(),
                tol: UNITARY_TOL,
            });
        }
        Ok(Self { m })
    }

    /// For matrices that are unitary by construction.
    pub(crate) fn new_unchecked(m: [[Complex64; 2]; 2]) -> Self {
        debug_assert!(unitarity_defect(&m) < 1e-9);
        Self { m }
    }

    pub fn identity() -> Self {
        Self::new_unchecked([
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        ])
    }

    /// Row-major entries.
    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        self.m
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn det(&self) -> Complex64 {
        det2(&self.m)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new_unchecked([
            [self.m[0][0].conj(), self.m[1][0].conj()],
            [self.m[0][1].conj(), self.m[1][1].conj()],
        ])
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new_unchecked(mat_mul(&self.m, &rhs.m))
    }

    /// Multiplies every entry by a unit-modulus phase.
    pub fn phase_scaled(&self, phase: Complex64) -> Self {
        debug_assert!((phase.norm() - 1.0).abs() < 1e-9);
        Self::new_unchecked([
            [self.m[0][0] * phase, self.m[0][1] * phase],
            [self.m[1][0] * phase, self.m[1][1] * phase],
        ])
    }

    /// Applies the gate to a single-qubit state `(a0, a1)`.
    pub fn apply(&self, state: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.m[0][0] * state[0] + self.m[0][1] * state[1],
            self.m[1][0] * state[0] + self.m[1][1] * state[1],
        ]
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.m[r][c] - other.m[r][c]).norm());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

/// 2x2 unitary with determinant 1, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecialUnitary2(Unitary2);

impl SpecialUnitary2 {
    /// Requires unitarity and `det = 1` within 1e-10 in both the real and
    /// imaginary part.
    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self> {
        Self::from_unitary(Unitary2::new(m)?)
    }

    pub fn from_unitary(u: Unitary2) -> Result<Self> {
        let det = u.det();
        if (det.re - 1.0).abs() > UNITARY_TOL || det.im.abs() > UNITARY_TOL {
            return Err(Error::NotSpecialUnitary {
                det_re: det.re,
                det_im: det.im,
            });
        }
        Ok(Self(u))
    }

    pub(crate) fn new_unchecked(m: [[Complex64; 2]; 2]) -> Self {
        debug_assert!((det2(&m) - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        Self(Unitary2::new_unchecked(m))
    }

    pub fn identity() -> Self {
        Self(Unitary2::identity())
    }

    pub fn as_unitary(&self) -> Unitary2 {
        self.0
    }

    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        self.0.entries()
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.0.entry(row, col)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(self.0.mul(&rhs.0))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }
}

/// Unit-modulus complex scalar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseFactor(Complex64);

impl PhaseFactor {
    pub fn new(value: Complex64) -> Result<Self> {
        let modulus = value.norm();
        if !(modulus.is_finite()) || (modulus - 1.0).abs() > PHASE_TOL {
            return Err(Error::NotUnitPhase { modulus });
        }
        Ok(Self(value))
    }

    pub(crate) fn new_unchecked(value: Complex64) -> Self {
        debug_assert!((value.norm() - 1.0).abs() < 1e-9);
        Self(value)
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn arg(&self) -> f64 {
        self.0.arg()
    }
}

/// The complex pair `(alpha, beta)` with `q = alpha + beta j`, i.e. the
/// first row of the corresponding special unitary matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPairForm {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl ComplexPairForm {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm_sq = alpha.norm_sqr() + beta.norm_sqr();
        if (norm_sq - 1.0).abs() > PAIR_TOL {
            return Err(Error::NotPairForm { norm_sq });
        }
        Ok(Self { alpha, beta })
    }

    /// Reads the pair off a special unitary matrix, checking that the
    /// second row is `(-conj(beta), conj(alpha))`.
    pub fn from_su2(u: &SpecialUnitary2) -> Result<Self> {
        let m = u.entries();
        let alpha = m[0][0];
        let beta = m[0][1];
        let shape_defect = (m[1][0] + beta.conj()).norm().max((m[1][1] - alpha.conj()).norm());
        if shape_defect > UNITARY_TOL {
            return Err(Error::NotPairForm {
                norm_sq: alpha.norm_sqr() + beta.norm_sqr(),
            });
        }
        Self::new(alpha, beta)
    }
}

/// Maps a unit quaternion to its special unitary matrix.
pub fn quat_to_su2(q: UnitQuaternion) -> SpecialUnitary2 {
    let (a, b, c, d) = (q.w(), q.x(), q.y(), q.z());
    SpecialUnitary2::new_unchecked([
        [Complex64::new(a, b), Complex64::new(c, d)],
        [Complex64::new(-c, d), Complex64::new(a, -b)],
    ])
}

/// Inverse of [`quat_to_su2`].
///
/// Requires `det(U) = 1` within 1e-10; other unitaries must go through
/// [`project_to_su2`] first.
pub fn su2_to_quat(u: &Unitary2) -> Result<UnitQuaternion> {
    let det = u.det();
    if (det.re - 1.0).abs() > UNITARY_TOL || det.im.abs() > UNITARY_TOL {
        return Err(Error::NotSpecialUnitary {
            det_re: det.re,
            det_im: det.im,
        });
    }
    let m = u.entries();
    let q = Quaternion::new(m[0][0].re, m[0][0].im, m[0][1].re, m[0][1].im);
    // det = 1 within 1e-10 puts |q|^2 within the same slack of 1, which
    // can exceed the strict unit tolerance; the components are kept
    // as-read rather than renormalized.
    let norm_sq = q.norm_sqr();
    if (norm_sq - 1.0).abs() > 1e-9 {
        return Err(Error::NotUnitQuaternion { norm_sq, tol: 1e-9 });
    }
    Ok(UnitQuaternion::new_unchecked(q))
}

/// Fibration U(2) -> SU(2): returns `(A', phi)` with `A = phi * A'` and
/// `det(A') = 1`.
///
/// Of the two candidates `+/-A'` the one whose quaternion image is
/// sign-canonical is chosen, and `phi` is the square root of `det(A)` on
/// the branch consistent with that choice.
pub fn project_to_su2(a: &Unitary2) -> (SpecialUnitary2, PhaseFactor) {
    let det = a.det();
    let half_arg = det.arg() / 2.0;
    let root = Complex64::from_polar(1.0, half_arg);
    let candidate = a.phase_scaled(root.conj());
    let m = candidate.entries();
    let q = UnitQuaternion::new_unchecked(Quaternion::new(
        m[0][0].re,
        m[0][0].im,
        m[0][1].re,
        m[0][1].im,
    ));
    if q.is_canonical() {
        (
            SpecialUnitary2::new_unchecked(m),
            PhaseFactor::new_unchecked(root),
        )
    } else {
        (
            SpecialUnitary2::new_unchecked(candidate.phase_scaled(Complex64::new(-1.0, 0.0)).entries()),
            PhaseFactor::new_unchecked(-root),
        )
    }
}

/// Finds `B` with `B^k = A` through the quaternion root.
///
/// Without `recover_phase` the result is the special unitary `B'` whose
/// k-th power matches `A` up to a global phase. With `recover_phase` the
/// result is `B = phi^(1/k) B'` where `phi` is the fibration phase of
/// `A`, so that `B^k = A` entrywise.
pub fn gate_power(a: &Unitary2, k: f64, recover_phase: bool) -> Result<Unitary2> {
    if k == 0.0 || !k.is_finite() {
        return Err(Error::InvalidRootIndex { k });
    }
    let (special, phi) = project_to_su2(a);
    let q = su2_to_quat(&special.as_unitary())?;
    let root = q.pow(1.0 / k);
    let b_special = quat_to_su2(root);
    if recover_phase {
        // phi^(1/k) on the principal branch of phi's argument, so that
        // raising it back to the k-th power reproduces phi itself.
        let phase_root = Complex64::from_polar(1.0, phi.arg() / k);
        Ok(b_special.as_unitary().phase_scaled(phase_root))
    } else {
        Ok(b_special.as_unitary())
    }
}

fn det2(m: &[[Complex64; 2]; 2]) -> Complex64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn mat_mul(a: &[[Complex64; 2]; 2], b: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

fn unitarity_defect(m: &[[Complex64; 2]; 2]) -> f64 {
    let adj = [
        [m[0][0].conj(), m[1][0].conj()],
        [m[0][1].conj(), m[1][1].conj()],
    ];
    let prod = mat_mul(m, &adj);
    let mut worst: f64 = 0.0;
    for (r, row) in prod.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            let expected = if r == c {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((entry - expected).norm());
        }
    }
    worst
}

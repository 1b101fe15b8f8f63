//! Quaternion arithmetic, polar decomposition, and de Moivre powers and
//! roots of unit quaternions.
//!
//! A quaternion `q = w + x i + y j + z k` multiplies by the relations
//! `ij = -ji = k`, `jk = -kj = i`, `ki = -ik = j`, `i^2 = j^2 = k^2 = -1`
//! and the distributive law. The unit quaternions form a group, and every
//! unit quaternion has the polar form `q = cos(theta) + gamma sin(theta)`
//! where `gamma` is a unit imaginary quaternion with `gamma^2 = -1`. In
//! those coordinates powers follow the de Moivre rule
//! `q^t = cos(t theta) + gamma sin(t theta)`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Tolerance for the unit-norm check at construction.
pub const UNIT_TOL: f64 = 1e-12;

/// Vector parts smaller than this are treated as degenerate (q = +/-1).
pub const DEGENERATE_AXIS_TOL: f64 = 1e-12;

/// Components below this count as zero when picking the sign-canonical
/// representative of {q, -q}, so trig dust cannot flip the choice.
pub const CANONICAL_TOL: f64 = 1e-12;

/// Element of the real quaternion algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    /// Scalar (real) part.
    pub w: f64,
    /// Coefficient of i.
    pub x: f64,
    /// Coefficient of j.
    pub y: f64,
    /// Coefficient of k.
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    /// Squared norm `w^2 + x^2 + y^2 + z^2`.
    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    /// Norm `|q| = sqrt(q qbar)`.
    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Conjugate `qbar = w - x i - y j - z k`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    /// Inverse `qbar / |q|^2`, so that `q * q.inverse() = 1`.
    ///
    /// Fails on the zero quaternion; the algebra has no other
    /// non-invertible elements.
    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroQuaternion);
        }
        Ok(self.conjugate().scaled(1.0 / n2))
    }

    /// Component-wise scaling by a real factor.
    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    /// Norm of the vector (imaginary) part.
    pub fn vector_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Component-wise comparison within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.w - other.w).abs() <= tol
            && (self.x - other.x).abs() <= tol
            && (self.y - other.y).abs() <= tol
            && (self.z - other.z).abs() <= tol
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.w * rhs.w - self.x * rhs.x - self.y * rhs.y - self.z * rhs.z,
            self.w * rhs.x + self.x * rhs.w + self.y * rhs.z - self.z * rhs.y,
            self.w * rhs.y - self.x * rhs.z + self.y * rhs.w + self.z * rhs.x,
            self.w * rhs.z + self.x * rhs.y - self.y * rhs.x + self.z * rhs.w,
        )
    }
}

impl Add for Quaternion {
    type Output = Quaternion;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.w + rhs.w, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.w - rhs.w, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;

    fn neg(self) -> Self {
        self.scaled(-1.0)
    }
}

/// Quaternion with unit norm, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion(Quaternion);

impl UnitQuaternion {
    pub const ONE: Self = Self(Quaternion::ONE);
    pub const I: Self = Self(Quaternion::I);
    pub const J: Self = Self(Quaternion::J);
    pub const K: Self = Self(Quaternion::K);

    /// Wraps `q`, requiring `| |q|^2 - 1 | <= 1e-12`.
    pub fn new(q: Quaternion) -> Result<Self> {
        let norm_sq = q.norm_sqr();
        if !q.is_finite() || (norm_sq - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnitQuaternion {
                norm_sq,
                tol: UNIT_TOL,
            });
        }
        Ok(Self(q))
    }

    /// Scales `q` to unit norm. Fails on the zero quaternion.
    pub fn normalized(q: Quaternion) -> Result<Self> {
        let n = q.norm();
        if n == 0.0 || !q.is_finite() {
            return Err(Error::ZeroQuaternion);
        }
        Ok(Self(q.scaled(1.0 / n)))
    }

    /// Internal constructor for values that are unit by construction
    /// (trig identities, products of units).
    pub(crate) fn new_unchecked(q: Quaternion) -> Self {
        debug_assert!((q.norm_sqr() - 1.0).abs() < 1e-9, "norm^2 = {}", q.norm_sqr());
        Self(q)
    }

    pub fn as_quaternion(&self) -> Quaternion {
        self.0
    }

    pub fn w(&self) -> f64 {
        self.0.w
    }
    pub fn x(&self) -> f64 {
        self.0.x
    }
    pub fn y(&self) -> f64 {
        self.0.y
    }
    pub fn z(&self) -> f64 {
        self.0.z
    }

    /// Conjugate, which for a unit quaternion is also the inverse.
    pub fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    pub fn inverse(&self) -> Self {
        self.conjugate()
    }

    /// True when the vector part is below `DEGENERATE_AXIS_TOL`, i.e. the
    /// quaternion is +/-1 and its polar axis is a convention rather than
    /// data.
    pub fn is_real(&self) -> bool {
        self.0.vector_norm() < DEGENERATE_AXIS_TOL
    }

    /// Sign-canonical representative of the {q, -q} pair: `w > 0`, or
    /// `w = 0` and the first nonzero of (x, y, z) positive, with
    /// [`CANONICAL_TOL`] deciding what counts as zero.
    pub fn is_canonical(&self) -> bool {
        let q = &self.0;
        for c in [q.w, q.x, q.y, q.z] {
            if c.abs() > CANONICAL_TOL {
                return c > 0.0;
            }
        }
        // The zero quaternion is not unit, so this is unreachable for
        // valid values; treat it as canonical for totality.
        true
    }

    /// Returns whichever of `q`, `-q` is canonical.
    pub fn canonicalized(&self) -> Self {
        if self.is_canonical() {
            *self
        } else {
            Self(-self.0)
        }
    }

    /// Polar decomposition `q = cos(angle) + axis sin(angle)` with
    /// `angle` in [0, pi] and a unit imaginary axis.
    ///
    /// For q = +/-1 any axis is valid; the convention axis is `i`, with
    /// angle 0 for +1 and pi for -1. Use [`UnitQuaternion::is_real`] to
    /// detect that case.
    pub fn polar(&self) -> PolarForm {
        let v = self.0.vector_norm();
        if v < DEGENERATE_AXIS_TOL {
            let angle = if self.0.w >= 0.0 { 0.0 } else { std::f64::consts::PI };
            return PolarForm {
                angle,
                axis: Self::I,
            };
        }
        // atan2(v, w) with v > 0 lands in (0, pi), so sin(angle) >= 0
        // fixes the axis sign.
        let angle = v.atan2(self.0.w);
        let axis = Self::new_unchecked(Quaternion::new(
            0.0,
            self.0.x / v,
            self.0.y / v,
            self.0.z / v,
        ));
        PolarForm { angle, axis }
    }

    /// De Moivre power on the principal branch: with `(theta, gamma)` the
    /// polar decomposition, returns `cos(t theta) + gamma sin(t theta)`.
    pub fn pow(&self, t: f64) -> Self {
        let p = self.polar();
        from_angle_axis(t * p.angle, p.axis)
    }

    /// All `n` distinct n-th roots: `cos((theta + 2 pi m)/n) +
    /// gamma sin((theta + 2 pi m)/n)` for `m = 0..n-1`. The first entry is
    /// the principal root.
    ///
    /// Rejects q = +/-1, whose root variety is a continuum rather than a
    /// finite list.
    pub fn roots(&self, n: u32) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::ZeroRootCount);
        }
        if self.is_real() {
            return Err(Error::DegenerateRoots);
        }
        let p = self.polar();
        let mut out = Vec::with_capacity(n as usize);
        for m in 0..n {
            let psi = (p.angle + 2.0 * std::f64::consts::PI * f64::from(m)) / f64::from(n);
            out.push(from_angle_axis(psi, p.axis));
        }
        Ok(out)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }
}

impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;

    fn mul(self, rhs: Self) -> Self {
        // Norm is multiplicative, so the product of units is unit.
        Self::new_unchecked(self.0 * rhs.0)
    }
}

impl Neg for UnitQuaternion {
    type Output = UnitQuaternion;

    fn neg(self) -> Self {
        Self(-self.0)
    }
}

fn from_angle_axis(angle: f64, axis: UnitQuaternion) -> UnitQuaternion {
    let (s, c) = angle.sin_cos();
    UnitQuaternion::new_unchecked(Quaternion::new(
        c,
        s * axis.x(),
        s * axis.y(),
        s * axis.z(),
    ))
}

/// De Moivre coordinates of a unit quaternion: an angle in [0, pi] and a
/// unit imaginary axis gamma with gamma^2 = -1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarForm {
    angle: f64,
    axis: UnitQuaternion,
}

impl PolarForm {
    /// Validating constructor: `angle` in [0, pi], `axis` unit with
    /// exactly zero scalar part.
    pub fn new(angle: f64, axis: UnitQuaternion) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&angle) {
            return Err(Error::InvalidPolarAngle { angle });
        }
        if axis.w() != 0.0 {
            return Err(Error::InvalidPolarAxis);
        }
        Ok(Self { angle, axis })
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn axis(&self) -> UnitQuaternion {
        self.axis
    }

    /// Evaluates `cos(angle) + axis sin(angle)`.
    pub fn to_unit_quaternion(&self) -> UnitQuaternion {
        from_angle_axis(self.angle, self.axis)
    }
}

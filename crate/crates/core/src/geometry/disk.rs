//! Points and isometries of the Poincaré disk.

use num_complex::Complex;
use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Embed;

pub type C64 = Complex<f64>;

pub const TOL: f64 = 1e-10;
const ESCALATE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiskPoint {
    #[serde(serialize_with = "ser_complex")]
    pub z: C64,
    /// Estimated absolute error in z.
    pub error: f64,
}

fn ser_complex<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

impl DiskPoint {
    pub fn new(z: C64) -> Result<Self> {
        if z.norm() >= 1.0 + 1e-12 {
            return Err(Error::NotDiskPreserving(z.norm()));
        }
        Ok(DiskPoint { z, error: f64::EPSILON * 4.0 })
    }

    pub fn origin() -> Self {
        DiskPoint { z: C64::new(0.0, 0.0), error: 0.0 }
    }
}

/// z ↦ (z − p)/(1 − p̄z), which sends p to the origin.
pub fn to_origin(p: C64, z: C64) -> C64 {
    (z - p) / (C64::new(1.0, 0.0) - p.conj() * z)
}

/// Inverse of [`to_origin`].
pub fn from_origin(p: C64, w: C64) -> C64 {
    (w + p) / (C64::new(1.0, 0.0) + p.conj() * w)
}

/// Hyperbolic distance 2·atanh(|z − w| / |1 − z̄w|).
pub fn hyp_distance(z: C64, w: C64) -> f64 {
    let r = to_origin(w, z).norm().min(1.0);
    2.0 * r.atanh()
}

/// Reflection in the geodesic through u and v.
pub fn reflect(u: C64, v: C64, z: C64) -> C64 {
    let dir = to_origin(u, v);
    let w = to_origin(u, z);
    let unit = dir / dir.norm();
    from_origin(u, unit * unit * w.conj())
}

/// Sign of z relative to the oriented geodesic u → v: +1 to the left.
pub fn side_of(u: C64, v: C64, z: C64) -> f64 {
    let dir = to_origin(u, v);
    let w = to_origin(u, z);
    (w * dir.conj()).im
}

/// Angle at u between the geodesics towards v and w, in [0, π].
pub fn vertex_angle(u: C64, v: C64, w: C64) -> f64 {
    let a = to_origin(u, v);
    let b = to_origin(u, w);
    (b / a).arg().abs()
}

/// Barycenter through the hyperboloid model; for an equilateral triangle it
/// is the center of the order-3 symmetry.
pub fn barycenter(pts: &[C64]) -> C64 {
    let mut acc = [0.0; 3];
    for z in pts {
        let r2 = z.norm_sqr();
        let s = 1.0 / (1.0 - r2);
        acc[0] += (1.0 + r2) * s;
        acc[1] += 2.0 * z.re * s;
        acc[2] += 2.0 * z.im * s;
    }
    let norm = (acc[0] * acc[0] - acc[1] * acc[1] - acc[2] * acc[2]).sqrt();
    let x = [acc[0] / norm, acc[1] / norm, acc[2] / norm];
    C64::new(x[1], x[2]) / (1.0 + x[0])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsometryClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RotationData {
    pub center: DiskPoint,
    /// Magnitude of the rotation angle, in [0, π].
    pub angle: f64,
    /// +1 counterclockwise, −1 clockwise, 0 for the identity or a half turn.
    pub orientation: i8,
    /// Signed angle in (−π, π].
    pub signed_angle: f64,
}

/// A Möbius map preserving the unit disk, given by a matrix in U(1,1) up to
/// a scalar. The optional exact matrix is any conjugate (for instance the
/// Burau frame) used to settle classification ties.
#[derive(Clone, Debug)]
pub struct Isometry {
    matrix: Matrix<C64>,
    exact: Option<Matrix<Cyclotomic>>,
}

impl Isometry {
    /// Checks M†JM = cJ with c > 0 for J = diag(1, −1), relative to the
    /// size of the entries.
    pub fn new(matrix: Matrix<C64>) -> Result<Self> {
        if matrix.rows() != 2 || matrix.cols() != 2 {
            return Err(Error::InvalidArgument("isometries are 2×2".into()));
        }
        let [a, b, c, d] = [*matrix.get(0, 0), *matrix.get(0, 1), *matrix.get(1, 0), *matrix.get(1, 1)];
        let h00 = a.norm_sqr() - c.norm_sqr();
        let h11 = b.norm_sqr() - d.norm_sqr();
        let h01 = a.conj() * b - c.conj() * d;
        let scale = a.norm_sqr() + b.norm_sqr() + c.norm_sqr() + d.norm_sqr();
        if matrix.det().norm() <= scale * f64::EPSILON {
            return Err(Error::DivisionByZero);
        }
        let defect = ((h00 + h11).abs() + h01.norm()) / scale;
        if defect > TOL || h00 <= 0.0 {
            return Err(Error::NotDiskPreserving(defect));
        }
        Ok(Isometry { matrix, exact: None })
    }

    pub fn with_exact(mut self, m: Matrix<Cyclotomic>) -> Self {
        self.exact = Some(m);
        self
    }

    pub fn identity() -> Self {
        Isometry { matrix: Matrix::identity(2), exact: None }
    }

    pub fn matrix(&self) -> &Matrix<C64> {
        &self.matrix
    }

    pub fn exact(&self) -> Option<&Matrix<Cyclotomic>> {
        self.exact.as_ref()
    }

    pub fn compose(&self, other: &Self) -> Self {
        let exact = match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => Some(a.matmul(b)),
            _ => None,
        };
        Isometry { matrix: self.matrix.matmul(&other.matrix), exact }
    }

    pub fn inverse(&self) -> Self {
        Isometry {
            matrix: self.matrix.inverse().expect("invertible"),
            exact: self.exact.as_ref().and_then(Matrix::inverse),
        }
    }

    pub fn apply_raw(&self, z: C64) -> C64 {
        let m = &self.matrix;
        (m.get(0, 0) * z + m.get(0, 1)) / (m.get(1, 0) * z + m.get(1, 1))
    }

    pub fn apply(&self, p: DiskPoint) -> Result<DiskPoint> {
        let w = self.apply_raw(p.z);
        if w.norm() > 1.0 + 1e-12 {
            return Err(Error::NotDiskPreserving(w.norm()));
        }
        // the derivative bounds how far the input error spreads
        let m = &self.matrix;
        let den = m.get(1, 0) * p.z + m.get(1, 1);
        let grow = (m.det() / (den * den)).norm();
        Ok(DiskPoint { z: w, error: p.error * grow + f64::EPSILON * 8.0 })
    }

    /// tr²/det, a conjugation invariant which is real for these maps.
    fn trace_invariant(&self) -> f64 {
        let t = self.matrix.trace();
        (t * t / self.matrix.det()).re
    }

    /// |trace| against 2 after normalizing det to 1; near-ties use the exact
    /// matrix when present.
    pub fn classify(&self) -> IsometryClass {
        let x = self.trace_invariant() - 4.0;
        if x.abs() > ESCALATE {
            return if x < 0.0 { IsometryClass::Elliptic } else { IsometryClass::Hyperbolic };
        }
        if let Some(e) = &self.exact {
            let t = e.trace();
            let inv = (&t * &t).checked_div(&e.det()).expect("invertible");
            let diff = inv - Cyclotomic::from_int(4);
            if diff.is_zero() {
                return IsometryClass::Parabolic;
            }
            return if diff.to_complex().re < 0.0 { IsometryClass::Elliptic } else { IsometryClass::Hyperbolic };
        }
        if x.abs() <= TOL {
            IsometryClass::Parabolic
        } else if x < 0.0 {
            IsometryClass::Elliptic
        } else {
            IsometryClass::Hyperbolic
        }
    }

    /// The fixed point inside the disk of an elliptic map.
    pub fn fixed_point(&self) -> Result<DiskPoint> {
        match self.classify() {
            IsometryClass::Elliptic => {}
            IsometryClass::Parabolic => return Err(Error::NotElliptic("parabolic")),
            IsometryClass::Hyperbolic => return Err(Error::NotElliptic("hyperbolic")),
        }
        let m = &self.matrix;
        let [a, b, c, d] = [*m.get(0, 0), *m.get(0, 1), *m.get(1, 0), *m.get(1, 1)];
        // c z² + (d − a) z − b = 0
        let z = if c.norm() < 1e-14 * (a.norm() + d.norm()) {
            b / (a - d)
        } else {
            let disc = ((d - a) * (d - a) + 4.0 * b * c).sqrt();
            let r1 = (a - d + disc) / (2.0 * c);
            let r2 = (a - d - disc) / (2.0 * c);
            if r1.norm() < r2.norm() {
                r1
            } else {
                r2
            }
        };
        DiskPoint::new(z)
    }

    pub fn rotation(&self) -> Result<RotationData> {
        let center = self.fixed_point()?;
        let m = &self.matrix;
        let den = m.get(1, 0) * center.z + m.get(1, 1);
        let theta = (m.det() / (den * den)).arg();
        let orientation = if theta.abs() < TOL || (std::f64::consts::PI - theta.abs()) < TOL {
            0
        } else if theta > 0.0 {
            1
        } else {
            -1
        };
        Ok(RotationData { center, angle: theta.abs(), orientation, signed_angle: theta })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn distance_basics() {
        assert_eq!(hyp_distance(c(0.0, 0.0), c(0.0, 0.0)), 0.0);
        let d = hyp_distance(c(0.0, 0.0), c(0.5, 0.0));
        assert!((d - 2.0 * 0.5f64.atanh()).abs() < 1e-15);
        let a = c(0.3, -0.2);
        let b = c(-0.1, 0.6);
        assert!((hyp_distance(a, b) - hyp_distance(b, a)).abs() < 1e-14);
    }

    #[test]
    fn rotation_about_origin() {
        let q = C64::from_polar(1.0, 0.7);
        let m = Isometry::new(Matrix::m2(q, c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0))).unwrap();
        let r = m.rotation().unwrap();
        assert!(r.center.z.norm() < 1e-15);
        assert!((r.angle - 0.7).abs() < 1e-14);
        assert_eq!(r.orientation, 1);
        let id = Isometry::identity();
        let p = DiskPoint::new(c(0.2, 0.1)).unwrap();
        assert_eq!(id.apply(p).unwrap().z, p.z);
    }

    #[test]
    fn rejects_non_disk_maps() {
        let m = Matrix::m2(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0));
        assert!(matches!(Isometry::new(m), Err(Error::NotDiskPreserving(_))));
    }

    #[test]
    fn reflection_is_involutive() {
        let (u, v, z) = (c(0.1, 0.2), c(-0.4, 0.3), c(0.5, -0.1));
        let r = reflect(u, v, z);
        assert!((reflect(u, v, r) - z).norm() < 1e-14);
        assert!(side_of(u, v, z) * side_of(u, v, r) < 0.0);
        assert!((hyp_distance(r, u) - hyp_distance(z, u)).abs() < 1e-13);
    }

    #[test]
    fn parabolic_and_hyperbolic() {
        // z ↦ z + 1 on the upper half plane, moved to the disk
        let k = Matrix::m2(c(1.0, 0.0), c(0.0, -1.0), c(1.0, 0.0), c(0.0, 1.0));
        let ki = k.inverse().unwrap();
        let t = Matrix::m2(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0));
        let p = Isometry::new(k.matmul(&t).matmul(&ki)).unwrap();
        assert_eq!(p.classify(), IsometryClass::Parabolic);
        let h = Matrix::m2(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.5, 0.0));
        let h = Isometry::new(k.matmul(&h).matmul(&ki)).unwrap();
        assert_eq!(h.classify(), IsometryClass::Hyperbolic);
        assert!(h.rotation().is_err());
    }
}

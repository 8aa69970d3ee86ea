//! The reduced Burau representation, the Jones representation of B₃ and
//! the SO(3) picture of the unitary case.

use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, One, Zero};
use serde::Serialize;

use crate::braid::BraidWord;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;
use crate::quadratic::Quadratic;
use crate::scalar::{Embed, Field, Ring};

/// β(g_i^{±1}) on `strands` strands with the variable and its inverse
/// supplied by the caller.
pub fn generator_in<T: Ring>(letter: i32, strands: usize, q: &T, qinv: &T) -> Result<Matrix<T>> {
    let i = letter.unsigned_abs() as usize;
    if letter == 0 || i >= strands {
        return Err(Error::GeneratorOutOfRange { index: letter, strands });
    }
    let n = strands - 1;
    let mut m = Matrix::identity(n);
    let r = i - 1;
    let (left, mid, right) = if letter > 0 {
        (q.clone(), -q.clone(), T::one())
    } else {
        (T::one(), -qinv.clone(), qinv.clone())
    };
    if r >= 1 {
        m.set(r, r - 1, left);
    }
    m.set(r, r, mid);
    if r + 1 < n {
        m.set(r, r + 1, right);
    }
    Ok(m)
}

/// Generic Burau matrix over ℤ[q, q⁻¹].
pub fn burau_generic(letter: i32, strands: usize) -> Result<Matrix<LaurentPoly>> {
    generator_in(letter, strands, &LaurentPoly::q(), &LaurentPoly::monomial(1, -1))
}

/// Burau matrix with q specialized to the cyclotomic number `t`.
pub fn burau_at(letter: i32, strands: usize, t: &Cyclotomic) -> Result<Matrix<Cyclotomic>> {
    let tinv = t.inv()?;
    generator_in(letter, strands, t, &tinv)
}

/// Evaluate a braid word given its parameter and inverse parameter.
pub fn eval_word_in<T: Ring>(w: &BraidWord, q: &T, qinv: &T) -> Matrix<T> {
    let n = w.strands();
    let mut gens: Vec<Option<Matrix<T>>> = vec![None; 2 * n];
    let mut acc = Matrix::identity(n - 1);
    for &l in w.letters() {
        let slot = (l + n as i32) as usize;
        if gens[slot].is_none() {
            gens[slot] = Some(generator_in(l, n, q, qinv).expect("validated word"));
        }
        acc = acc.matmul(gens[slot].as_ref().unwrap());
    }
    acc
}

pub fn eval_generic(w: &BraidWord) -> Matrix<LaurentPoly> {
    eval_word_in(w, &LaurentPoly::q(), &LaurentPoly::monomial(1, -1))
}

/// β_t(w) for a nonzero cyclotomic t.
pub fn eval_word(w: &BraidWord, t: &Cyclotomic) -> Result<Matrix<Cyclotomic>> {
    let tinv = t.inv()?;
    Ok(eval_word_in(w, t, &tinv))
}

/// β_{−q}(w).
pub fn eval_minus_q(w: &BraidWord, q: &Cyclotomic) -> Result<Matrix<Cyclotomic>> {
    eval_word(w, &-q)
}

/// β_t(w) in floating point.
pub fn eval_word_float<F: Float + std::fmt::Debug>(w: &BraidWord, t: Complex<F>) -> Matrix<Complex<F>> {
    eval_word_in(w, &t, &t.inv())
}

/// ρ(g₁), ρ(g₂) and the sign ε.
#[derive(Clone, Debug, Serialize)]
pub struct JonesPair<T> {
    pub g1: Matrix<T>,
    pub g2: Matrix<T>,
    pub epsilon: i8,
}

pub type ExactScalar = Quadratic<Cyclotomic>;

impl<T: Ring> JonesPair<T> {
    /// ρ(w) as a product.
    pub fn eval(&self, w: &BraidWord) -> Result<Matrix<T>>
    where
        T: Field,
    {
        if w.strands() != 3 {
            return Err(Error::StrandMismatch { expected: 3, found: w.strands() });
        }
        let inv1 = self.g1.inverse().ok_or(Error::DivisionByZero)?;
        let inv2 = self.g2.inverse().ok_or(Error::DivisionByZero)?;
        let mut acc = Matrix::identity(2);
        for &l in w.letters() {
            let m = match l {
                1 => &self.g1,
                -1 => &inv1,
                2 => &self.g2,
                _ => &inv2,
            };
            acc = acc.matmul(m);
        }
        Ok(acc)
    }

    /// (g − q)(g + 1) for both generators and the rank-one relation
    /// 1 + g₁ + g₂ + g₁g₂ + g₂g₁ + g₁g₂g₁, all of which vanish.
    pub fn tl_defects(&self, q: &T) -> [Matrix<T>; 3] {
        let id = Matrix::identity(2);
        let quad = |g: &Matrix<T>| g.sub(&id.scale(q)).matmul(&g.add(&id));
        let g12 = self.g1.matmul(&self.g2);
        let g21 = self.g2.matmul(&self.g1);
        let g121 = g12.matmul(&self.g1);
        let rank1 = id.add(&self.g1).add(&self.g2).add(&g12).add(&g21).add(&g121);
        [quad(&self.g1), quad(&self.g2), rank1]
    }
}

fn sign_of_real(x: &Cyclotomic) -> i8 {
    if x.is_zero() || x.to_complex().re >= 0.0 {
        1
    } else {
        -1
    }
}

/// The Jones pair at an exact root with c real and positive, r = 1 and
/// |c|²|q+1|⁴ = |q + q̄ + 1|.
pub fn jones_pair(q: &Cyclotomic) -> Result<JonesPair<ExactScalar>> {
    let one = Cyclotomic::one();
    let qp1 = q + &one;
    if qp1.is_zero() {
        return Err(Error::AbelianParameter);
    }
    let qb = q.conj();
    let s = q + &qb + one.clone();
    let eps = sign_of_real(&s);
    let d = if eps > 0 { s } else { -s };
    let nrm = &qp1 * &(&qb + &one);
    let c = Quadratic::new(Cyclotomic::zero(), nrm.inv()?, d.clone());
    let lift = |x: Cyclotomic| Quadratic::from_base(x).with_radicand(d.clone());
    let inv_qp1 = qp1.inv()?;
    let g1 = Matrix::m2(lift(q.clone()), lift(Cyclotomic::zero()), lift(Cyclotomic::zero()), lift(-one.clone()));
    let qp1q = lift(qp1.clone());
    let off12 = -(qp1q.clone() * c.clone());
    let off21 = lift(Cyclotomic::from_int(-i64::from(eps))) * qp1q * c;
    let g2 = Matrix::m2(lift(-inv_qp1.clone()), off12, off21, lift(q * q * inv_qp1));
    Ok(JonesPair { g1, g2, epsilon: eps })
}

/// Floating-point Jones pair at q = exp(iα).
pub fn jones_pair_float<F: Float + std::fmt::Debug>(alpha: F) -> Result<JonesPair<Complex<F>>> {
    let q = Complex::from_polar(F::one(), alpha);
    let one = Complex::new(F::one(), F::zero());
    let qp1 = q + one;
    if qp1.norm() < F::from(1e-12).unwrap() {
        return Err(Error::AbelianParameter);
    }
    let s = (q + q.conj() + one).re;
    let eps = if s >= F::zero() { 1 } else { -1 };
    let c = s.abs().sqrt() / qp1.norm_sqr();
    let cz = Complex::new(c, F::zero());
    let e = Complex::new(F::from(eps).unwrap(), F::zero());
    let zero = Complex::new(F::zero(), F::zero());
    let g1 = Matrix::m2(q, zero, zero, -one);
    let g2 = Matrix::m2(-one / qp1, -(qp1 * cz), -(e * qp1 * cz), q * q / qp1);
    Ok(JonesPair { g1, g2, epsilon: eps })
}

/// The matrix V = U·S with U = [[1, 1/(q+1)], [0, 1]] and
/// S = diag(a, 1/a), stored through a² so that everything stays in the
/// field K(√d); V ρ(g) V⁻¹ = −β_q(g).
#[derive(Clone, Debug)]
pub struct Conjugator<T> {
    pub shear: T,
    pub a_squared: T,
}

impl<T: Field> Conjugator<T> {
    pub fn conjugate(&self, m: &Matrix<T>) -> Matrix<T> {
        let a2 = self.a_squared.clone();
        let a2i = a2.try_inv().expect("a² is nonzero");
        let [m11, m12, m21, m22] = [m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)].map(Clone::clone);
        let s = Matrix::m2(m11, m12 * a2, m21 * a2i, m22);
        let u = Matrix::m2(T::one(), self.shear.clone(), T::zero(), T::one());
        let ui = Matrix::m2(T::one(), -self.shear.clone(), T::zero(), T::one());
        u.matmul(&s).matmul(&ui)
    }

    /// det V = a · a⁻¹.
    pub fn det(&self) -> T {
        T::one()
    }
}

/// The conjugator for the exact Jones pair, with a² = ε(q+1)c̄/q.
pub fn conjugator(q: &Cyclotomic) -> Result<(JonesPair<ExactScalar>, Conjugator<ExactScalar>)> {
    let pair = jones_pair(q)?;
    let one = Cyclotomic::one();
    let qp1 = q + &one;
    // c = −ρ(g₂)₁₂ / (q+1)
    let c = -(pair.g2.get(0, 1).clone()) * Quadratic::from_base(qp1.inv()?);
    let d = c.radicand().cloned().expect("radicand present");
    let lift = |x: Cyclotomic| Quadratic::from_base(x).with_radicand(d.clone());
    let a_squared = lift(Cyclotomic::from_int(i64::from(pair.epsilon))) * lift(qp1.clone()) * c * lift(q.inv()?);
    let shear = lift(qp1.inv()?);
    Ok((pair, Conjugator { shear, a_squared }))
}

/// V ρ(g_j) V⁻¹ = σ ⊗ β_q(g_j) for j = 1, 2, checked exactly.
pub fn check_conjugacy(q: &Cyclotomic) -> Result<bool> {
    let (pair, v) = conjugator(q)?;
    let d = pair.g2.get(0, 1).radicand().cloned();
    for (k, g) in [(1, &pair.g1), (2, &pair.g2)] {
        let target = burau_at(k, 3, q)?.map(|x| {
            let b = Quadratic::from_base(-x.clone());
            match &d {
                Some(d) => b.with_radicand(d.clone()),
                None => b,
            }
        });
        if v.conjugate(g) != target {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormClass {
    #[serde(rename = "positive_definite_U2")]
    PositiveDefiniteU2,
    #[serde(rename = "indefinite_U11")]
    IndefiniteU11,
    #[serde(rename = "degenerate")]
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitarityClass {
    pub tag: FormClass,
    /// Sign of 1 − q − q̄ (taken as +1 on the degenerate boundary).
    pub epsilon: i8,
    /// Whether the decision was made in exact arithmetic.
    pub exact: bool,
}

/// Invariant-form class of β_{−q} at an exact root q.
pub fn classify_root(q: &Cyclotomic) -> UnitarityClass {
    let one = Cyclotomic::one();
    let x = &one - q - q.conj();
    if (q * q).is_one() && (q - &one).is_zero() {
        return UnitarityClass { tag: FormClass::Degenerate, epsilon: 1, exact: true };
    }
    if x.is_zero() {
        return UnitarityClass { tag: FormClass::Degenerate, epsilon: 1, exact: true };
    }
    let eps = sign_of_real(&x);
    let tag = if eps > 0 { FormClass::PositiveDefiniteU2 } else { FormClass::IndefiniteU11 };
    UnitarityClass { tag, epsilon: eps, exact: true }
}

const BOUNDARY_TOL: f64 = 1e-8;

/// Best rational approximation p/r of x with r ≤ max_den.
fn rational_approx(x: f64, max_den: i64) -> (i64, i64) {
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = a as i64;
        let (p2, q2) = (ai * p1 + p0, ai * q1 + q0);
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    (p1, q1)
}

/// Class of β_{−q} for q = exp(iα): U(2) for α ∈ (π/3, 5π/3), U(1,1) for
/// α ∈ (−π/3, π/3) \ {0}, degenerate at ±π/3 and 0. Angles within 1e−8 of
/// a boundary are decided exactly when α/2π is a rational with small
/// denominator, and by the floating sign otherwise.
pub fn classify_form(alpha: f64) -> UnitarityClass {
    let tau = std::f64::consts::TAU;
    let turns = (alpha / tau).rem_euclid(1.0);
    let x = 1.0 - 2.0 * alpha.cos();
    let near_zero_angle = turns.min(1.0 - turns) * tau < BOUNDARY_TOL;
    if x.abs() > BOUNDARY_TOL && !near_zero_angle {
        let eps = if x > 0.0 { 1 } else { -1 };
        let tag = if eps > 0 { FormClass::PositiveDefiniteU2 } else { FormClass::IndefiniteU11 };
        return UnitarityClass { tag, epsilon: eps, exact: false };
    }
    let (p, r) = rational_approx(turns, 10_000);
    if r > 0 && ((p as f64 / r as f64) - turns).abs() < 1e-12 {
        let g = p.gcd(&r).max(1);
        let q = Cyclotomic::root((r / g) as u32, p / g).expect("positive order");
        return classify_root(&q);
    }
    if x.abs() < 1e-14 || near_zero_angle {
        return UnitarityClass { tag: FormClass::Degenerate, epsilon: 1, exact: false };
    }
    let eps = if x > 0.0 { 1 } else { -1 };
    let tag = if eps > 0 { FormClass::PositiveDefiniteU2 } else { FormClass::IndefiniteU11 };
    UnitarityClass { tag, epsilon: eps, exact: false }
}

/// 3×3 rotation matrix.
pub type Rotation<F> = [[F; 3]; 3];

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AxisAngle<F> {
    pub axis: [F; 3],
    pub angle: F,
}

fn unitary_defect<F: Float + std::fmt::Debug>(m: &Matrix<Complex<F>>) -> F {
    let mut worst = F::zero();
    for i in 0..2 {
        for j in 0..2 {
            let mut s = Complex::new(F::zero(), F::zero());
            for k in 0..2 {
                s = s + m.get(k, i).conj() * *m.get(k, j);
            }
            let target = if i == j { F::one() } else { F::zero() };
            worst = worst.max((s - Complex::new(target, F::zero())).norm());
        }
    }
    worst
}

/// Unit quaternion (w, x, y, z) of λM with λ² det M = 1 and arg λ ∈ [0, π).
fn su2_quaternion<F: Float + std::fmt::Debug>(m: &Matrix<Complex<F>>) -> Result<[F; 4]> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::InvalidArgument("expected a 2×2 matrix".into()));
    }
    let defect = unitary_defect(m);
    if defect > F::from(1e-10).unwrap() {
        return Err(Error::NotUnitary(defect.to_f64().unwrap_or(f64::NAN)));
    }
    let det = m.det();
    let mut lam = det.inv().sqrt();
    let pi = F::from(std::f64::consts::PI).unwrap();
    let arg = lam.arg();
    if arg < F::zero() || arg >= pi {
        lam = -lam;
    }
    let s00 = lam * *m.get(0, 0);
    let s01 = lam * *m.get(0, 1);
    Ok([s00.re, s00.im, s01.re, s01.im])
}

/// The rotation Q(λM) ∈ SO(3).
pub fn so3_image<F: Float + std::fmt::Debug>(m: &Matrix<Complex<F>>) -> Result<Rotation<F>> {
    let [w, x, y, z] = su2_quaternion(m)?;
    let one = F::one();
    let two = one + one;
    Ok([
        [one - two * (y * y + z * z), two * (x * y - w * z), two * (x * z + w * y)],
        [two * (x * y + w * z), one - two * (x * x + z * z), two * (y * z - w * x)],
        [two * (x * z - w * y), two * (y * z + w * x), one - two * (x * x + y * y)],
    ])
}

/// Axis and angle (in [0, 2π]) of the rotation, read from the quaternion;
/// the identity gets axis (1, 0, 0).
pub fn axis_angle<F: Float + std::fmt::Debug>(m: &Matrix<Complex<F>>) -> Result<AxisAngle<F>> {
    let [w, x, y, z] = su2_quaternion(m)?;
    let w = w.max(-F::one()).min(F::one());
    let angle = (F::one() + F::one()) * w.acos();
    let n = (x * x + y * y + z * z).sqrt();
    let axis = if n < F::from(1e-14).unwrap() {
        [F::one(), F::zero(), F::zero()]
    } else {
        [x / n, y / n, z / n]
    };
    Ok(AxisAngle { axis, angle })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn z(n: u32, e: i64) -> Cyclotomic {
        Cyclotomic::root(n, e).unwrap()
    }

    #[test]
    fn generic_generators() {
        let m = burau_generic(1, 3).unwrap();
        let q = LaurentPoly::q();
        assert_eq!(m, Matrix::m2(-q.clone(), LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::one()));
        let m2 = burau_generic(2, 3).unwrap();
        assert_eq!(m2, Matrix::m2(LaurentPoly::one(), LaurentPoly::zero(), q.clone(), -q));
        assert!(burau_generic(3, 3).is_err());
        assert!(burau_generic(0, 3).is_err());
    }

    #[test]
    fn braid_relation_generic() {
        for n in 3..6 {
            for i in 1..(n as i32 - 1) {
                let a = burau_generic(i, n).unwrap();
                let b = burau_generic(i + 1, n).unwrap();
                assert_eq!(a.matmul(&b).matmul(&a), b.matmul(&a).matmul(&b));
            }
            for i in 1..n as i32 {
                let a = burau_generic(i, n).unwrap();
                let ai = burau_generic(-i, n).unwrap();
                assert!(a.matmul(&ai).is_identity());
            }
        }
    }

    #[test]
    fn sl2z_at_minus_one() {
        let t = Cyclotomic::from_int(-1);
        let i = |v: i64| Cyclotomic::from_int(v);
        assert_eq!(burau_at(1, 3, &t).unwrap(), Matrix::m2(i(1), i(1), i(0), i(1)));
        assert_eq!(burau_at(2, 3, &t).unwrap(), Matrix::m2(i(1), i(0), i(-1), i(1)));
    }

    #[test]
    fn a_and_center() {
        let q = z(8, 1);
        let a = eval_minus_q(&BraidWord::b3(&[1, 1]), &q).unwrap();
        let one = Cyclotomic::one();
        assert_eq!(a, Matrix::m2(&q * &q, &one + &q, Cyclotomic::zero(), one.clone()));
        let c = eval_minus_q(&BraidWord::b3(&[1, 2, 1, 1, 2, 1]), &q).unwrap();
        assert_eq!(c, Matrix::scalar(2, -q.pow(3).unwrap()));
        assert!(eval_minus_q(&BraidWord::b3(&[1, -1]), &q).unwrap().is_identity());
    }

    #[test]
    fn jones_relations_at_seventh_root() {
        let q = z(7, 1);
        let pair = jones_pair(&q).unwrap();
        let qq = Quadratic::from_base(q.clone());
        for d in pair.tl_defects(&qq) {
            assert!(d.entries().iter().all(Zero::is_zero), "{d:?}");
        }
    }

    #[test]
    fn epsilon_signs() {
        assert_eq!(jones_pair_float(PI / 2.0).unwrap().epsilon, 1);
        assert_eq!(jones_pair_float(5.0 * PI / 6.0).unwrap().epsilon, -1);
        assert_eq!(jones_pair(&z(4, 1)).unwrap().epsilon, 1);
        assert_eq!(jones_pair(&z(12, 5)).unwrap().epsilon, -1);
        assert_eq!(jones_pair(&z(2, 1)).unwrap_err(), Error::AbelianParameter);
    }

    #[test]
    fn conjugacy() {
        assert!(check_conjugacy(&z(5, 1)).unwrap());
        assert!(check_conjugacy(&z(8, 1)).unwrap());
        assert!(check_conjugacy(&z(12, 5)).unwrap());
        assert!(check_conjugacy(&z(2, 1)).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(classify_form(PI).tag, FormClass::PositiveDefiniteU2);
        assert_eq!(classify_form(2.0 * PI / 12.0).tag, FormClass::IndefiniteU11);
        let b = classify_form(PI / 3.0);
        assert_eq!(b.tag, FormClass::Degenerate);
        assert!(b.exact);
        assert_eq!(classify_form(0.0).tag, FormClass::Degenerate);
        assert_eq!(classify_form(-PI / 3.0).tag, FormClass::Degenerate);
        assert_eq!(classify_form(5.0 * PI / 3.0).tag, FormClass::Degenerate);
        assert_eq!(classify_form(PI / 3.0 + 1e-9).tag, FormClass::PositiveDefiniteU2);
        assert_eq!(classify_root(&z(12, 1)).tag, FormClass::IndefiniteU11);
    }

    #[test]
    fn so3_identity_and_generator() {
        let one = Complex::new(1.0, 0.0);
        let zero = Complex::new(0.0, 0.0);
        let id = Matrix::m2(one, zero, zero, one);
        let aa = axis_angle(&id).unwrap();
        assert!(aa.angle.abs() < 1e-12);
        let r = so3_image(&id).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((r[i][j] - if i == j { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
        let alpha = 2.0 * PI / 5.0;
        let pair = jones_pair_float(alpha).unwrap();
        let aa = axis_angle(&pair.g1).unwrap();
        assert!((aa.angle - (PI + alpha)).abs() < 1e-12);
        assert!((aa.axis[0].abs() - 1.0).abs() < 1e-12);
        let bad = Matrix::m2(one + one, zero, zero, one);
        assert!(matches!(so3_image(&bad), Err(Error::NotUnitary(_))));
    }
}

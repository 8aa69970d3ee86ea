//! The U(1,1) model of Γ_{−q} for q = exp(2πi/n), n ≥ 7.

use std::f64::consts::{PI, TAU};

use num_integer::Integer;
use serde::Serialize;

use super::disk::{barycenter, hyp_distance, vertex_angle, DiskPoint, Isometry, C64};
use crate::braid::BraidWord;
use crate::burau::eval_minus_q;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Criterion of Knapp, Mostow and Deraux for rotations by 2α = 4π/n about
/// the vertices of an equilateral triangle of angle α.
pub fn discreteness_predicate(m: i64, n: u32) -> bool {
    if n == 0 || m.gcd(&i64::from(n)) != 1 {
        return false;
    }
    if n % 2 == 0 {
        n >= 4
    } else {
        n >= 7
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HypTriangle {
    pub vertices: [DiskPoint; 3],
    pub angles: [f64; 3],
    /// Side lengths opposite to each vertex.
    pub sides: [f64; 3],
}

impl HypTriangle {
    pub fn new(vertices: [DiskPoint; 3]) -> Self {
        let [a, b, c] = vertices.map(|p| p.z);
        HypTriangle {
            vertices,
            angles: [vertex_angle(a, b, c), vertex_angle(b, c, a), vertex_angle(c, a, b)],
            sides: [hyp_distance(b, c), hyp_distance(c, a), hyp_distance(a, b)],
        }
    }

    pub fn angle_sum(&self) -> f64 {
        self.angles.iter().sum()
    }

    pub fn barycenter(&self) -> C64 {
        barycenter(&self.vertices.map(|p| p.z))
    }
}

/// Ā, B̄, D̄ = conjugate of β_{−q}(g₂), and ĀB̄.
#[derive(Clone, Debug)]
pub struct U11Generators {
    pub a: Isometry,
    pub b: Isometry,
    pub d: Isometry,
    pub ab: Isometry,
}

#[derive(Clone, Debug)]
pub struct DiskModel {
    n: u32,
    alpha: f64,
    q: C64,
    a_squared: f64,
    v: Matrix<C64>,
    v_inv: Matrix<C64>,
    root: Cyclotomic,
}

impl DiskModel {
    /// The model at the transported root q = exp(2πi/n).
    pub fn new(n: u32) -> Result<Self> {
        match n {
            0 => return Err(Error::ZeroOrder),
            1 | 2 => return Err(Error::Degenerate(format!("q² = 1 for n = {n}"))),
            6 => return Err(Error::Degenerate("α = π/3: the invariant form is degenerate".into())),
            3..=5 => return Err(Error::NotHyperbolic(n)),
            _ => {}
        }
        let alpha = TAU / f64::from(n);
        let q = C64::from_polar(1.0, alpha);
        let one = C64::new(1.0, 0.0);
        let a_squared = (one - q + q * q).norm().sqrt() / (one - q).norm();
        let a = a_squared.sqrt();
        let c = |x: f64| C64::new(x, 0.0);
        let v = Matrix::m2(c(a), one / ((one - q) * a), c(0.0), c(1.0 / a));
        let v_inv = v.inverse().expect("triangular with nonzero diagonal");
        Ok(DiskModel { n, alpha, q, a_squared, v, v_inv, root: Cyclotomic::root(n, 1)? })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn q(&self) -> C64 {
        self.q
    }

    /// The exact root ζ_n the model is built on.
    pub fn root(&self) -> &Cyclotomic {
        &self.root
    }

    pub fn a_squared(&self) -> f64 {
        self.a_squared
    }

    pub fn conjugator(&self) -> &Matrix<C64> {
        &self.v
    }

    /// V⁻¹ M V.
    pub fn conjugate_float(&self, m: &Matrix<C64>) -> Matrix<C64> {
        self.v_inv.matmul(m).matmul(&self.v)
    }

    /// The disk isometry of an exact matrix in the Burau frame at ζ_n.
    pub fn isometry(&self, m: &Matrix<Cyclotomic>) -> Result<Isometry> {
        let f = m.map(|x| x.embed(1).expect("order divides n"));
        Ok(Isometry::new(self.conjugate_float(&f))?.with_exact(m.clone()))
    }

    /// The Hermitian form preserved in the Burau frame, a²·V^{−†}JV^{−1} =
    /// [[1, −s], [−s̄, 1]] with s = 1/(1 − q), valid since 2cos α > 1.
    pub fn burau_form(&self) -> Result<Matrix<Cyclotomic>> {
        let one = Cyclotomic::from_int(1);
        let s = (&one - &self.root).inv()?;
        Ok(Matrix::m2(one.clone(), -&s, -&s.conj(), one))
    }

    /// Whether M†HM = cH with c > 0 for the Burau form H, exactly. Unlike
    /// the float check this holds up for arbitrarily long words.
    pub fn preserves_form_exact(&self, m: &Matrix<Cyclotomic>) -> Result<bool> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::InvalidArgument("isometries are 2×2".into()));
        }
        let h = self.burau_form()?;
        let adj = m.transpose().map(Cyclotomic::conj);
        let g = adj.matmul(&h).matmul(m);
        let c = g.get(0, 0).clone();
        let positive = c == c.conj() && c.embed(1)?.re > 0.0;
        Ok(positive && g == h.scale(&c))
    }

    pub fn burau(&self, w: &BraidWord) -> Result<Matrix<Cyclotomic>> {
        eval_minus_q(w, &self.root)
    }

    pub fn braid_isometry(&self, w: &BraidWord) -> Result<Isometry> {
        self.isometry(&self.burau(w)?)
    }

    pub fn generators(&self) -> Result<U11Generators> {
        let g = |l: &[i32]| self.braid_isometry(&BraidWord::b3(l));
        Ok(U11Generators { a: g(&[1, 1])?, b: g(&[2, 2])?, d: g(&[2])?, ab: g(&[1, 1, 2, 2])? })
    }

    /// P = −(q² − q + 1)/(q(1 − q)a²).
    pub fn p_closed(&self) -> C64 {
        let one = C64::new(1.0, 0.0);
        let q = self.q;
        -(q * q - q + one) / (q * (one - q) * self.a_squared)
    }

    /// Q = −(q² − q + 1)/((1 − q)a²) = qP.
    pub fn q_closed(&self) -> C64 {
        let one = C64::new(1.0, 0.0);
        let q = self.q;
        -(q * q - q + one) / ((one - q) * self.a_squared)
    }

    /// √|1 + 2cos(α + π)|.
    pub fn p_modulus_closed(&self) -> f64 {
        (1.0 + 2.0 * (self.alpha + PI).cos()).abs().sqrt()
    }

    /// The triangle OPQ with P and Q the fixed points of B̄ and ĀB̄.
    pub fn triangle(&self) -> Result<HypTriangle> {
        let g = self.generators()?;
        let p = g.b.fixed_point()?;
        let q = g.ab.fixed_point()?;
        Ok(HypTriangle::new([DiskPoint::origin(), p, q]))
    }
}

/// Carry an exact matrix at ζ_n^m back to ζ_n.
pub fn transport(m: &Matrix<Cyclotomic>, n: u32, galois: i64) -> Result<Matrix<Cyclotomic>> {
    let nn = i64::from(n);
    let g = galois.rem_euclid(nn);
    let ext = g.extended_gcd(&nn);
    if ext.gcd != 1 {
        return Err(Error::NotCoprime { exponent: galois, order: n });
    }
    let s = ext.x.rem_euclid(nn);
    let entries: Result<Vec<Cyclotomic>> = m.entries().iter().map(|x| x.galois(s)).collect();
    Ok(Matrix::new(m.rows(), m.cols(), entries?))
}

/// Ā, B̄, D̄ at the root transported from ζ_n^m.
pub fn u11_generators(n: u32, galois: i64) -> Result<U11Generators> {
    if i64::from(n).gcd(&galois) != 1 {
        return Err(Error::NotCoprime { exponent: galois, order: n });
    }
    DiskModel::new(n)?.generators()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn burau_form_is_preserved() {
        let m = DiskModel::new(9).unwrap();
        for w in [&[1][..], &[2], &[1, -2, -2, 1, 1, 1]] {
            assert!(m.preserves_form_exact(&m.burau(&BraidWord::b3(w)).unwrap()).unwrap());
        }
        let shear = Matrix::m2(Cyclotomic::from_int(1), Cyclotomic::from_int(1), Cyclotomic::from_int(0), Cyclotomic::from_int(1));
        assert!(!m.preserves_form_exact(&shear).unwrap());
    }

    #[test]
    fn predicate() {
        assert!(discreteness_predicate(1, 4));
        assert!(!discreteness_predicate(1, 5));
        assert!(discreteness_predicate(1, 7));
        assert!(!discreteness_predicate(2, 8));
    }

    #[test]
    fn model_rejects_small_orders() {
        assert!(matches!(DiskModel::new(6), Err(Error::Degenerate(_))));
        assert_eq!(DiskModel::new(5).unwrap_err(), Error::NotHyperbolic(5));
        assert!(DiskModel::new(7).is_ok());
    }

    #[test]
    fn a_bar_is_diagonal() {
        let m = DiskModel::new(8).unwrap();
        let g = m.generators().unwrap();
        let a = g.a.matrix();
        assert!(a.get(0, 1).norm() < 1e-12 && a.get(1, 0).norm() < 1e-12);
        assert!((a.get(0, 0) / a.get(1, 1) - m.q() * m.q()).norm() < 1e-12);
        assert!(g.a.fixed_point().unwrap().z.norm() < 1e-12);
    }

    #[test]
    fn d_squared_is_b_exactly() {
        let m = DiskModel::new(10).unwrap();
        let g = m.generators().unwrap();
        let dd = g.d.compose(&g.d);
        assert_eq!(dd.exact(), g.b.exact());
    }

    #[test]
    fn transport_inverts_galois() {
        let w = BraidWord::b3(&[1, 2, -1]);
        let q3 = Cyclotomic::root(8, 3).unwrap();
        let at3 = eval_minus_q(&w, &q3).unwrap();
        let back = transport(&at3, 8, 3).unwrap();
        assert_eq!(back, eval_minus_q(&w, &Cyclotomic::root(8, 1).unwrap()).unwrap());
        assert!(transport(&at3, 8, 2).is_err());
    }
}

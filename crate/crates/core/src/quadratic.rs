//! Real quadratic extensions K(√d) of a field with a distinguished real
//! embedding; √d denotes the positive root under that embedding.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::{Embed, Field};

#[derive(Clone, Debug)]
pub struct Quadratic<K> {
    pub x: K,
    pub y: K,
    d: Option<K>,
}

impl<K: Field + Embed> Quadratic<K> {
    pub fn new(x: K, y: K, d: K) -> Self {
        Quadratic { x, y, d: Some(d) }
    }

    pub fn from_base(x: K) -> Self {
        Quadratic { x, y: K::zero(), d: None }
    }

    /// √d itself.
    pub fn sqrt(d: K) -> Self {
        Quadratic { x: K::zero(), y: K::one(), d: Some(d) }
    }

    /// Attach the radicand to an element of K.
    pub fn with_radicand(mut self, d: K) -> Self {
        self.d = Some(d);
        self
    }

    pub fn radicand(&self) -> Option<&K> {
        self.d.as_ref()
    }

    fn pick(&self, other: &Self) -> Option<K> {
        self.d.clone().or_else(|| other.d.clone())
    }

    /// x − y√d.
    pub fn conj_root(&self) -> Self {
        Quadratic { x: self.x.clone(), y: -self.y.clone(), d: self.d.clone() }
    }

    /// x² − d y², which lies in K.
    pub fn norm(&self) -> K {
        match &self.d {
            Some(d) => self.x.clone() * self.x.clone() - d.clone() * self.y.clone() * self.y.clone(),
            None => self.x.clone() * self.x.clone(),
        }
    }

    fn is_zero_exact(&self) -> bool {
        if self.y.is_zero() {
            return self.x.is_zero();
        }
        let Some(d) = &self.d else { return false };
        if d.is_zero() {
            return self.x.is_zero();
        }
        // x + y√d = 0 iff −x/y is the positive square root of d
        let r = match self.y.try_inv() {
            Some(inv) => -(self.x.clone() * inv),
            None => return false,
        };
        r.clone() * r.clone() == *d && r.to_complex().re > 0.0
    }
}

impl<K: Field + Embed> PartialEq for Quadratic<K> {
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero_exact()
    }
}

impl<K: Field + Embed> Add for Quadratic<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.pick(&rhs);
        Quadratic { x: self.x + rhs.x, y: self.y + rhs.y, d }
    }
}

impl<K: Field + Embed> Sub for Quadratic<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.pick(&rhs);
        Quadratic { x: self.x - rhs.x, y: self.y - rhs.y, d }
    }
}

impl<K: Field + Embed> Neg for Quadratic<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Quadratic { x: -self.x, y: -self.y, d: self.d }
    }
}

impl<K: Field + Embed> Mul for Quadratic<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.pick(&rhs);
        let yy = self.y.clone() * rhs.y.clone();
        let x = if yy.is_zero() {
            self.x.clone() * rhs.x.clone()
        } else {
            let dd = d.clone().expect("irrational part without a radicand");
            self.x.clone() * rhs.x.clone() + yy * dd
        };
        let y = self.x * rhs.y + self.y * rhs.x;
        Quadratic { x, y, d }
    }
}

impl<K: Field + Embed> Div for Quadratic<K> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.try_inv().expect("quadratic division by zero")
    }
}

impl<K: Field + Embed> Zero for Quadratic<K> {
    fn zero() -> Self {
        Quadratic::from_base(K::zero())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_exact()
    }
}

impl<K: Field + Embed> One for Quadratic<K> {
    fn one() -> Self {
        Quadratic::from_base(K::one())
    }
}

impl<K: Field + Embed> Field for Quadratic<K> {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero_exact() {
            return None;
        }
        let n = self.norm().try_inv()?;
        let c = self.conj_root();
        Some(Quadratic { x: c.x * n.clone(), y: c.y * n, d: c.d })
    }
}

impl<K: Field + Embed> Embed for Quadratic<K> {
    fn to_complex(&self) -> Complex<f64> {
        let r = match &self.d {
            Some(d) => d.to_complex().sqrt(),
            None => Complex::new(0.0, 0.0),
        };
        self.x.to_complex() + self.y.to_complex() * r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic;

    type Q5 = Quadratic<Cyclotomic>;

    #[test]
    fn sqrt_squares_to_radicand() {
        let d = Cyclotomic::from_int(3);
        let s = Q5::sqrt(d.clone());
        assert_eq!(s.clone() * s.clone(), Q5::from_base(d));
        assert!(!(s.clone() + s.clone()).is_zero());
        assert!((s.clone() - s).is_zero());
    }

    #[test]
    fn sign_is_decided() {
        // √4 = 2, not −2
        let s = Q5::sqrt(Cyclotomic::from_int(4));
        assert_eq!(s.clone(), Q5::from_base(Cyclotomic::from_int(2)));
        assert_ne!(s, Q5::from_base(Cyclotomic::from_int(-2)));
    }

    #[test]
    fn zero_radicand() {
        let s = Q5::new(Cyclotomic::zero(), Cyclotomic::from_int(7), Cyclotomic::zero());
        assert!(s.is_zero());
    }

    #[test]
    fn inverse() {
        let z = Cyclotomic::root(5, 1).unwrap();
        let d = &z + &z.conj() + Cyclotomic::one();
        let a = Q5::new(Cyclotomic::from_int(1), z.clone(), d);
        let b = a.try_inv().unwrap();
        assert!((a * b - Q5::one()).is_zero());
    }
}

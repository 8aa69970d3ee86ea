//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! An element is stored in the smallest ℚ(ζ_n) containing it, with n not
//! 2 mod 4, on the power basis `1, ζ, …, ζ^{φ(n)-1}` reduced modulo Φ_n, as
//! integer numerators over one positive common denominator with trivial
//! content. That form is unique. Operands of different orders are lifted to
//! the lcm before combining.

mod serde_impl;
pub(crate) mod table;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Embed, Field};

use table::{descent, lcm, reduce, table};

pub use table::euler_phi;

#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    fn from_parts(order: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        let (order, num, den) = descend(order, num, den);
        Self::normalized(order, num, den)
    }

    fn normalized(order: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        } else if !g.is_one() {
            for c in num.iter_mut() {
                *c /= &g;
            }
            den /= &g;
        }
        Cyclotomic { order, num, den }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Cyclotomic { order: 1, num: vec![v.into()], den: BigInt::one() }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// ζ_n^e.
    pub fn root(n: u32, e: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let t = table(n);
        let idx = e.rem_euclid(i64::from(n)) as usize;
        Ok(Self::from_parts(n, t.powers[idx].clone(), BigInt::one()))
    }

    /// Build from rational coefficients on the power basis `ζ_n^0..`; the
    /// list may be longer than φ(n) and is reduced.
    pub fn from_coeffs(n: u32, coeffs: &[BigRational]) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let t = table(n);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut acc = vec![BigInt::zero(); t.degree()];
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            for (a, p) in acc.iter_mut().zip(&t.powers[e % n as usize]) {
                if !p.is_zero() {
                    *a += &scaled * p;
                }
            }
        }
        Ok(Self::from_parts(n, acc, den))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Rational coefficients on the reduced power basis (length φ(order)).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num[0].is_one()
            && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-express in ℚ(ζ_m); requires `order | m`. The result is not in
    /// canonical form and is meant for arithmetic at a common order.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m % self.order == 0, "cannot lift order {} to {}", self.order, m);
        let t = table(m);
        let step = (m / self.order) as usize;
        let mut acc = vec![BigInt::zero(); t.degree()];
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(&t.powers[(e * step) % m as usize]) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
        Cyclotomic { order: m, num: acc, den: self.den.clone() }
    }

    fn aligned(a: &Self, b: &Self) -> (u32, Option<Self>, Option<Self>) {
        if a.order == b.order {
            return (a.order, None, None);
        }
        let m = lcm(a.order, b.order);
        let la = (a.order != m).then(|| a.lift(m));
        let lb = (b.order != m).then(|| b.lift(m));
        (m, la, lb)
    }

    /// The Galois automorphism ζ_n ↦ ζ_n^s.
    pub fn galois(&self, s: i64) -> Result<Self> {
        let n = self.order;
        if i64::from(n).gcd(&s) != 1 {
            return Err(Error::NotCoprime { exponent: s, order: n });
        }
        let t = table(n);
        let s = s.rem_euclid(i64::from(n)) as usize;
        let mut acc = vec![BigInt::zero(); t.degree()];
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(&t.powers[(e * s) % n as usize]) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
        Ok(Self::from_parts(n, acc, self.den.clone()))
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit mod every n")
    }

    /// Numerical value under the embedding ζ_n ↦ exp(2πi s/n).
    pub fn embed(&self, s: i64) -> Result<Complex<f64>> {
        let n = self.order;
        if i64::from(n).gcd(&s) != 1 {
            return Err(Error::NotCoprime { exponent: s, order: n });
        }
        Ok(self.embed_unchecked(s))
    }

    fn embed_unchecked(&self, s: i64) -> Complex<f64> {
        use num_traits::ToPrimitive;
        let t = table(self.order);
        let n = i64::from(self.order);
        let s = s.rem_euclid(n);
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c.to_f64().unwrap_or(f64::NAN) / den;
            let (co, si) = t.unit[((e as i64 * s) % n) as usize];
            re += cf * co;
            im += cf * si;
        }
        Complex::new(re, im)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_parts(self.order, lift_const(self.order, r.denom()), r.numer().clone()));
        }
        let t = table(self.order);
        let a: Vec<BigRational> = self.coeffs();
        let m: Vec<BigRational> = t.phi.iter().map(|c| BigRational::from(c.clone())).collect();
        let u = poly_inv_mod(&a, &m).ok_or(Error::DivisionByZero)?;
        let mut den = BigInt::one();
        for c in &u {
            den = den.lcm(c.denom());
        }
        let mut num: Vec<BigInt> = u.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        num.resize(t.degree(), BigInt::zero());
        Ok(Self::from_parts(self.order, num, den))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Cyclotomic::one();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Multiplicative order if the element is a root of unity.
    ///
    /// Roots of unity in ℚ(ζ_n) all have order dividing lcm(2, n).
    pub fn root_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let z = self.embed_unchecked(1);
        if (z.norm() - 1.0).abs() > 1e-6 {
            return None;
        }
        let big = u64::from(lcm(2, self.order));
        let mut divs: Vec<u64> = (1..=big).filter(|d| big % d == 0).collect();
        divs.sort_unstable();
        divs.into_iter().find(|&d| self.pow(d as i64).map(|p| p.is_one()).unwrap_or(false))
    }

    /// The stored form; equal elements have equal keys.
    pub fn key(&self) -> (u32, Vec<BigInt>, BigInt) {
        (self.order, self.num.clone(), self.den.clone())
    }
}

/// Move (order, num/den) down to the smallest cyclotomic field containing
/// it.
fn descend(mut order: u32, mut num: Vec<BigInt>, mut den: BigInt) -> (u32, Vec<BigInt>, BigInt) {
    'outer: while order > 1 {
        if num[1..].iter().all(Zero::is_zero) {
            num.truncate(1);
            return (1, num, den);
        }
        let t = table(order);
        for &(p, m) in &t.subfields {
            // the subfield basis is ζ^{pj}, so the support must be on multiples of p
            if order % (p * p) == 0 && num.iter().enumerate().any(|(i, c)| i % p as usize != 0 && !c.is_zero()) {
                continue;
            }
            let d = descent(order, m);
            if let Some(y) = d.apply(&num) {
                order = m;
                num = y;
                den *= &d.den;
                continue 'outer;
            }
        }
        break;
    }
    (order, num, den)
}

fn lift_const(order: u32, c: &BigInt) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); table(order).degree()];
    v[0] = c.clone();
    v
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let c = &r[i] / lead;
        for j in 0..=db {
            let t = &c * &b[j];
            r[i - db + j] -= t;
        }
        q[i - db] = c;
    }
    trim(&mut r);
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
fn poly_inv_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let (_, s) = poly_divmod(&s0, m);
    Some(s.into_iter().map(|x| x / &c).collect())
}

fn add_impl(a: &Cyclotomic, b: &Cyclotomic, sign: bool) -> Cyclotomic {
    let (m, la, lb) = Cyclotomic::aligned(a, b);
    let a = la.as_ref().unwrap_or(a);
    let b = lb.as_ref().unwrap_or(b);
    let (num, den) = if a.den == b.den {
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| if sign { x - y } else { x + y })
            .collect();
        (num, a.den.clone())
    } else {
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| {
                let (p, q) = (x * &b.den, y * &a.den);
                if sign {
                    p - q
                } else {
                    p + q
                }
            })
            .collect();
        (num, &a.den * &b.den)
    };
    Cyclotomic::from_parts(m, num, den)
}

fn mul_impl(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    if a.order == 1 || b.order == 1 {
        let (c, o) = if a.order == 1 { (a, b) } else { (b, a) };
        let k = &c.num[0];
        let num = o.num.iter().map(|x| x * k).collect();
        return Cyclotomic::from_parts(o.order, num, &o.den * &c.den);
    }
    let (m, la, lb) = Cyclotomic::aligned(a, b);
    let a = la.as_ref().unwrap_or(a);
    let b = lb.as_ref().unwrap_or(b);
    let t = table(m);
    let d = t.degree();
    let mut prod = vec![BigInt::zero(); 2 * d - 1];
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    reduce(&mut prod, &t.phi);
    Cyclotomic::from_parts(m, prod, &a.den * &b.den)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        add_impl(self, other, true).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_int(0)
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_int(1)
    }
}

impl<'a> Neg for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| add_impl(a, b, false));
binop!(Sub, sub, |a, b| add_impl(a, b, true));
binop!(Mul, mul, mul_impl);
binop!(Div, div, |a: &Cyclotomic, b: &Cyclotomic| a
    .checked_div(b)
    .expect("cyclotomic division by zero"));

impl Field for Cyclotomic {
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Embed for Cyclotomic {
    fn to_complex(&self) -> Complex<f64> {
        self.embed_unchecked(1)
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Cyclotomic::from_int(v)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({}; {})", self.order, self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = vec![];
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mon = match e {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, e),
            };
            let coef = if mon.is_empty() {
                c.to_string()
            } else if c.is_one() {
                String::new()
            } else if *c == -BigInt::one() {
                "-".into()
            } else {
                format!("{c}*")
            };
            terms.push(format!("{coef}{mon}"));
        }
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ").replace("+ -", "- ") };
        if self.den.is_one() {
            write!(f, "{body}")
        } else if terms.len() > 1 {
            write!(f, "({body})/{}", self.den)
        } else {
            write!(f, "{body}/{}", self.den)
        }
    }
}

//! Laurent polynomials in one variable `q` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigjson::JsonInt;
use crate::cyclotomic::Cyclotomic;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Specialize q to a cyclotomic number; `t` must be nonzero if any
    /// negative exponent occurs.
    pub fn eval(&self, t: &Cyclotomic) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (&e, c) in &self.terms {
            let p = t.pow(i64::from(e)).expect("evaluation at zero with negative exponent");
            acc = acc + p * Cyclotomic::from_int(c.clone());
        }
        acc
    }

    /// Substitute q ↦ q^k.
    pub fn substitute_power(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(1)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<'a> Neg for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| match *e {
                0 => c.to_string(),
                1 if c.is_one() => "q".into(),
                _ if c.is_one() => format!("q^{e}"),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&e.to_string(), &JsonInt(c.clone()))?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, JsonInt> = BTreeMap::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for (k, v) in raw {
            let e: i32 = k.parse().map_err(D::Error::custom)?;
            out.add_term(e, v.0);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q = LaurentPoly::q();
        let qi = LaurentPoly::monomial(1, -1);
        assert!((&q * &qi).is_one());
        let p = &q + &LaurentPoly::one();
        let sq = &p * &p;
        assert_eq!(sq.coeff(1), BigInt::from(2));
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.to_string(), "1 + 2*q + q^2");
    }

    #[test]
    fn specialization() {
        let q = LaurentPoly::q();
        let qi = LaurentPoly::monomial(1, -1);
        let tau = &(&LaurentPoly::constant(2) + &q) + &qi;
        let z = Cyclotomic::root(6, 1).unwrap();
        // 2 + ζ6 + ζ6^{-1} = 3
        assert_eq!(tau.eval(&z), Cyclotomic::from_int(3));
    }

    #[test]
    fn json_is_sparse_map() {
        let p = &LaurentPoly::monomial(-3, -2) + &LaurentPoly::constant(5);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v, serde_json::json!({"-2": -3, "0": 5}));
        let back: LaurentPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
    }
}

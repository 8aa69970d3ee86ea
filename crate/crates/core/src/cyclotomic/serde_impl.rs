use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::table::table;
use super::Cyclotomic;
use crate::bigjson::JsonInt;

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<[JsonInt; 2]> = self
            .coeffs()
            .into_iter()
            .map(|c| [JsonInt(c.numer().clone()), JsonInt(c.denom().clone())])
            .collect();
        let mut st = s.serialize_struct("Cyclotomic", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct Wire {
    order: u32,
    coeffs: Vec<[JsonInt; 2]>,
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        if w.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let deg = table(w.order).degree();
        if w.coeffs.len() != deg {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                w.order,
                deg,
                w.coeffs.len()
            )));
        }
        let mut cs = Vec::with_capacity(deg);
        for [n, q] in w.coeffs {
            if q.0.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            cs.push(BigRational::new(n.0, q.0));
        }
        Cyclotomic::from_coeffs(w.order, &cs).map_err(D::Error::custom)
    }
}

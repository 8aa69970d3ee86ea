//! Breadth-first closure of the projective image of β_t(B₃).

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::burau::burau_at;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum ClosureStatus {
    Finite { order: usize },
    Exceeded { bound: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureResult {
    /// Order s of the parameter t = −q.
    pub order_minus_q: u32,
    pub galois: i64,
    #[serde(flatten)]
    pub status: ClosureStatus,
    /// Normalized elements in discovery order, kept only for finite images.
    #[serde(skip)]
    pub elements: Vec<Matrix<Cyclotomic>>,
}

impl ClosureResult {
    pub fn order(&self) -> Option<usize> {
        match self.status {
            ClosureStatus::Finite { order } => Some(order),
            ClosureStatus::Exceeded { .. } => None,
        }
    }
}

type Key = Vec<(u32, Vec<BigInt>, BigInt)>;

fn key(m: &Matrix<Cyclotomic>) -> Key {
    m.entries().iter().map(Cyclotomic::key).collect()
}

/// Closure of ⟨β_t(g₁), β_t(g₂)⟩ in PGL₂ for t = ζ_s^m, up to `bound`
/// elements. The generators have finite order, so the closure under right
/// multiplication by them is the whole group.
pub fn finite_image_closure(s: u32, galois: i64, bound: usize) -> Result<ClosureResult> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    if i64::from(s).gcd(&galois) != 1 {
        return Err(Error::NotCoprime { exponent: galois, order: s });
    }
    let t = Cyclotomic::root(s, galois)?;
    let gens = [burau_at(1, 3, &t)?, burau_at(2, 3, &t)?];
    let id = Matrix::identity(2);
    let mut seen: HashSet<Key> = HashSet::new();
    seen.insert(key(&id));
    let mut elements = vec![id.clone()];
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = vec![];
        for m in &frontier {
            for g in &gens {
                let p = m.matmul(g).projective_normalize().ok_or(Error::DivisionByZero)?;
                if seen.insert(key(&p)) {
                    if seen.len() > bound {
                        return Ok(ClosureResult {
                            order_minus_q: s,
                            galois,
                            status: ClosureStatus::Exceeded { bound },
                            elements: vec![],
                        });
                    }
                    elements.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    Ok(ClosureResult { order_minus_q: s, galois, status: ClosureStatus::Finite { order: elements.len() }, elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(finite_image_closure(1, 1, 1000).unwrap().order(), Some(6));
        assert_eq!(finite_image_closure(4, 1, 1000).unwrap().order(), Some(24));
        assert_eq!(finite_image_closure(4, 3, 1000).unwrap().order(), Some(24));
        assert_eq!(finite_image_closure(6, 1, 1000).unwrap().order(), Some(12));
        assert_eq!(finite_image_closure(7, 1, 500).unwrap().order(), None);
        assert!(finite_image_closure(6, 2, 10).is_err());
    }
}

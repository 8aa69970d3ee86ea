//! Truncated Magnus expansion x ↦ 1 + X in noncommuting variables.
//!
//! Monomials are packed into a `u64`, four bits per letter, so the rank
//! is at most 15 and the truncation degree at most 16. The number of
//! monomials grows like rank^d; rank 6 at d = 8 is the practical ceiling.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::word::FreeWord;
use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Mono(u64);

impl Mono {
    const ONE: Mono = Mono(0);

    fn letter(g: usize) -> Self {
        Mono(g as u64 + 1)
    }

    fn degree(self) -> usize {
        (64 - self.0.leading_zeros() as usize).div_ceil(4)
    }

    fn concat(self, other: Mono) -> Mono {
        Mono(self.0 | (other.0 << (4 * self.degree())))
    }

    fn letters(self) -> Vec<usize> {
        let mut v = vec![];
        let mut x = self.0;
        while x != 0 {
            v.push((x & 0xF) as usize - 1);
            x >>= 4;
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    rank: usize,
    dmax: usize,
    coeffs: HashMap<Mono, i128>,
}

impl MagnusSeries {
    pub fn one(rank: usize, dmax: usize) -> Result<Self> {
        if rank > 15 || dmax > MAX_DEGREE || dmax == 0 {
            return Err(Error::InvalidArgument(format!(
                "Magnus series needs rank ≤ 15 and 1 ≤ degree ≤ {MAX_DEGREE}, got rank {rank}, degree {dmax}"
            )));
        }
        Ok(MagnusSeries { rank, dmax, coeffs: HashMap::from([(Mono::ONE, 1)]) })
    }

    pub fn of_word(w: &FreeWord, dmax: usize) -> Result<Self> {
        let mut s = Self::one(w.rank(), dmax)?;
        for &l in w.letters() {
            s.mul_letter(l);
        }
        Ok(s)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn truncation(&self) -> usize {
        self.dmax
    }

    fn add(&mut self, m: Mono, c: i128) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&m);
        }
    }

    /// Right multiplication by 1 + X_g or by (1 + X_g)⁻¹ = Σ (−X_g)^k.
    fn mul_letter(&mut self, l: i32) {
        let g = l.unsigned_abs() as usize - 1;
        let x = Mono::letter(g);
        let old: Vec<(Mono, i128)> = self.coeffs.iter().map(|(m, c)| (*m, *c)).collect();
        for (m, c) in old {
            let mut cur = m;
            let mut sign = c;
            for _ in m.degree()..self.dmax {
                cur = cur.concat(x);
                if l < 0 {
                    sign = -sign;
                    self.add(cur, sign);
                } else {
                    self.add(cur, c);
                    break;
                }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MagnusSeries { rank: self.rank.max(other.rank), dmax: self.dmax.min(other.dmax), coeffs: HashMap::new() };
        for (m1, c1) in &self.coeffs {
            let d1 = m1.degree();
            for (m2, c2) in &other.coeffs {
                if d1 + m2.degree() <= out.dmax {
                    out.add(m1.concat(*m2), c1 * c2);
                }
            }
        }
        out
    }

    pub fn coeff(&self, letters: &[usize]) -> i128 {
        let m = letters.iter().fold(Mono::ONE, |acc, &g| acc.concat(Mono::letter(g)));
        self.coeffs.get(&m).copied().unwrap_or(0)
    }

    /// Least degree k ≥ 1 with a nonzero term; `None` if all terms of
    /// degree ≤ dmax vanish.
    pub fn depth(&self) -> Option<usize> {
        self.coeffs.iter().filter(|(m, c)| m.degree() > 0 && **c != 0).map(|(m, _)| m.degree()).min()
    }

    /// Terms of the given degree, sorted, as (letters, coefficient).
    pub fn terms_of_degree(&self, d: usize) -> Vec<(Vec<usize>, i128)> {
        let mut v: Vec<(Vec<usize>, i128)> = self
            .coeffs
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.letters(), *c))
            .collect();
        v.sort();
        v
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl Serialize for MagnusSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let names = FreeWord::default_names(self.rank);
        let mut m: BTreeMap<(usize, String), String> = BTreeMap::new();
        for (mono, c) in &self.coeffs {
            let name: Vec<&str> = mono.letters().iter().map(|&g| names[g].as_str()).collect();
            let key = if name.is_empty() { "1".to_string() } else { name.join("*") };
            m.insert((mono.degree(), key), c.to_string());
        }
        let flat: Vec<(String, String)> = m.into_iter().map(|((_, k), v)| (k, v)).collect();
        flat.serialize(s)
    }
}

/// Lower-central depth as read from the Magnus expansion truncated at
/// `dmax`; `None` means the depth exceeds `dmax`.
pub fn magnus_depth(w: &FreeWord, dmax: usize) -> Result<Option<usize>> {
    Ok(MagnusSeries::of_word(w, dmax)?.depth())
}

/// x_i ↦ [y_i, z_i] from F₃ (or any rank r) into F_{2r}.
pub fn zeta_embed(w: &FreeWord) -> FreeWord {
    let r = w.rank();
    let images: Vec<FreeWord> = (0..r as i32)
        .map(|i| {
            let y = FreeWord::generator(2 * r, 2 * i + 1);
            let z = FreeWord::generator(2 * r, 2 * i + 2);
            FreeWord::commutator(&y, &z)
        })
        .collect();
    w.substitute(&images).with_rank(2 * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: i32) -> FreeWord {
        FreeWord::generator(3, i)
    }

    #[test]
    fn inverse_cancels() {
        let w = FreeWord::new(3, vec![1, 2, -1]);
        let s = MagnusSeries::of_word(&w, 6).unwrap();
        let t = MagnusSeries::of_word(&w.inverse(), 6).unwrap();
        let p = s.mul(&t);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&[]), 1);
    }

    #[test]
    fn depths() {
        assert_eq!(magnus_depth(&x(1), 8).unwrap(), Some(1));
        let c = FreeWord::commutator(&x(1), &x(2));
        assert_eq!(magnus_depth(&c, 8).unwrap(), Some(2));
        let cc = FreeWord::commutator(&c, &x(3));
        assert_eq!(magnus_depth(&cc, 8).unwrap(), Some(3));
        assert_eq!(magnus_depth(&cc, 2).unwrap(), None);
        assert_eq!(magnus_depth(&FreeWord::identity(3), 4).unwrap(), None);
    }

    #[test]
    fn commutator_leading_term() {
        // [x1,x2] = 1 + X1X2 − X2X1 + …
        let c = FreeWord::commutator(&x(1), &x(2));
        let s = MagnusSeries::of_word(&c, 4).unwrap();
        assert_eq!(s.terms_of_degree(2), vec![(vec![0, 1], 1), (vec![1, 0], -1)]);
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_embed(&x(1));
        assert_eq!(z.rank(), 6);
        assert_eq!(z.letters(), &[1, 2, -1, -2]);
        assert_eq!(magnus_depth(&z, 8).unwrap(), Some(2));
        assert!(zeta_embed(&FreeWord::identity(3)).is_empty());
        let c = zeta_embed(&FreeWord::commutator(&x(1), &x(2)));
        assert!(magnus_depth(&c, 8).unwrap().map_or(true, |d| d >= 4));
    }
}

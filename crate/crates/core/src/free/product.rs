use std::fmt;

use serde::Serialize;

use super::word::FreeWord;
use crate::error::{Error, Result};

/// Normal form in ℤ/k ∗ ℤ/k: alternating syllables (generator, exponent)
/// with generator 0 = a, 1 = b and exponent in 1..k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FreeProductWord {
    modulus: u32,
    syllables: Vec<(u8, u32)>,
}

impl FreeProductWord {
    pub fn identity(modulus: u32) -> Self {
        FreeProductWord { modulus, syllables: vec![] }
    }

    /// Image of a word in a, b under F(a,b) → ℤ/k ∗ ℤ/k.
    pub fn from_free_word(w: &FreeWord, modulus: u32) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {modulus}")));
        }
        if w.rank() > 2 {
            return Err(Error::InvalidArgument("free product words use generators a, b only".into()));
        }
        let mut out = Self::identity(modulus);
        for &l in w.letters() {
            let g = (l.unsigned_abs() - 1) as u8;
            let e = if l > 0 { 1 } else { modulus - 1 };
            out.push(g, e);
        }
        Ok(out)
    }

    fn push(&mut self, g: u8, e: u32) {
        let e = e % self.modulus;
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, f)) if *h == g => {
                let s = (*f + e) % self.modulus;
                if s == 0 {
                    self.syllables.pop();
                } else {
                    *f = s;
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn syllables(&self) -> &[(u8, u32)] {
        &self.syllables
    }

    pub fn is_trivial(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus);
        let mut out = self.clone();
        for &(g, e) in &other.syllables {
            out.push(g, e);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let syllables = self.syllables.iter().rev().map(|&(g, e)| (g, self.modulus - e)).collect();
        FreeProductWord { modulus: self.modulus, syllables }
    }

    /// Normal-form invariant: alternating generators, exponents in range.
    pub fn is_normal(&self) -> bool {
        self.syllables.windows(2).all(|w| w[0].0 != w[1].0)
            && self.syllables.iter().all(|&(g, e)| g < 2 && e > 0 && e < self.modulus)
    }
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&(g, e)| {
                let n = if g == 0 { "a" } else { "b" };
                if e == 1 {
                    n.to_string()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Image of (ab)^k in F(a,b)/⟨⟨a^k, b^k⟩⟩ = ℤ/k ∗ ℤ/k. A nonempty normal
/// form shows (ab)^k is not in the normal closure of a^k and b^k.
pub fn squier_witness(k: u32) -> Result<FreeProductWord> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let ab = FreeWord::new(2, vec![1, 2]);
    FreeProductWord::from_free_word(&ab.pow(i64::from(k)), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_examples() {
        let w = squier_witness(3).unwrap();
        assert_eq!(w.syllables(), &[(0, 1), (1, 1), (0, 1), (1, 1), (0, 1), (1, 1)]);
        assert!(!w.is_trivial());
        assert_eq!(squier_witness(4).unwrap().syllables().len(), 8);
        let ak = FreeWord::new(2, vec![1; 4]);
        assert!(FreeProductWord::from_free_word(&ak, 4).unwrap().is_trivial());
        assert!(squier_witness(1).is_err());
    }

    #[test]
    fn cancellation_cascades() {
        // a b^2 b a^-1 in ℤ/3 ∗ ℤ/3 collapses to the identity
        let w = FreeWord::new(2, vec![1, 2, 2, 2, -1]);
        assert!(FreeProductWord::from_free_word(&w, 3).unwrap().is_trivial());
        let v = FreeWord::new(2, vec![1, 2, -1, 1, 1]);
        assert_eq!(FreeProductWord::from_free_word(&v, 5).unwrap().to_string(), "a b a");
    }
}

//! The Artin action of B_n on the free group F_n and longitudes of pure
//! braids.

use serde::Serialize;

use super::word::FreeWord;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// An endomorphism of F_n, given by the images of x_1..x_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeEndo {
    pub images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(rank: usize) -> Self {
        FreeEndo { images: (1..=rank as i32).map(|i| FreeWord::generator(rank, i)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Self) -> Self {
        FreeEndo { images: other.images.iter().map(|w| self.apply(w)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }
}

/// g_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i; g_i⁻¹: x_i ↦ x_{i+1},
/// x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}.
fn generator_action(n: usize, l: i32) -> FreeEndo {
    let mut e = FreeEndo::identity(n);
    let i = l.unsigned_abs() as usize - 1;
    let (a, b) = (i as i32 + 1, i as i32 + 2);
    if l > 0 {
        e.images[i] = FreeWord::new(n, vec![a, b, -a]);
        e.images[i + 1] = FreeWord::new(n, vec![a]);
    } else {
        e.images[i] = FreeWord::new(n, vec![b]);
        e.images[i + 1] = FreeWord::new(n, vec![-b, a, b]);
    }
    e
}

/// The automorphism of F_n attached to a braid, with φ(uv) = φ(u)∘φ(v).
pub fn artin_action(b: &BraidWord) -> FreeEndo {
    let n = b.strands();
    let mut acc = FreeEndo::identity(n);
    for &l in b.letters() {
        acc = acc.compose(&generator_action(n, l));
    }
    acc
}

/// l_i with φ(x_i) = l_i⁻¹ x_i l_i and zero total x_i-exponent in l_i.
pub fn longitudes(b: &BraidWord) -> Result<Vec<FreeWord>> {
    if !b.is_pure() {
        return Err(Error::NotPure);
    }
    let act = artin_action(b);
    act.images
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let x = k as i32 + 1;
            let p = conjugator(w, x).ok_or(Error::NotConjugate(k + 1))?;
            // φ(x) = p x p⁻¹, so l = p⁻¹
            let l = p.inverse();
            let e = l.abelianize()[k];
            Ok(FreeWord::generator(w.rank(), x).pow(-e).mul(&l))
        })
        .collect()
}

/// p with w = p x p⁻¹ when the reduced word w is such a conjugate.
fn conjugator(w: &FreeWord, x: i32) -> Option<FreeWord> {
    let w = w.reduce();
    let n = w.len();
    if n % 2 == 0 {
        return None;
    }
    let h = n / 2;
    let ls = w.letters();
    if ls[h] != x {
        return None;
    }
    let p = FreeWord::new(w.rank(), ls[..h].to_vec());
    let tail = FreeWord::new(w.rank(), ls[h + 1..].to_vec());
    (tail == p.inverse()).then_some(p)
}

/// Rebuild the action of a pure braid from its longitudes.
pub fn action_from_longitudes(ls: &[FreeWord]) -> FreeEndo {
    let n = ls.len();
    FreeEndo {
        images: ls
            .iter()
            .enumerate()
            .map(|(k, l)| l.inverse().concat(&FreeWord::generator(n, k as i32 + 1)).concat(l).reduce())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_relation_holds() {
        let a = artin_action(&BraidWord::b3(&[1, 2, 1]));
        let b = artin_action(&BraidWord::b3(&[2, 1, 2]));
        assert_eq!(a, b);
        assert!(artin_action(&BraidWord::b3(&[1, -1, 2, -2])).is_identity());
        assert!(artin_action(&BraidWord::b3(&[])).is_identity());
    }

    #[test]
    fn product_of_generators_is_fixed() {
        // x1 x2 x3 is invariant under every braid
        let w = FreeWord::new(3, vec![1, 2, 3]);
        for b in [vec![1], vec![-2], vec![1, 2, -1, 2, 2]] {
            assert_eq!(artin_action(&BraidWord::b3(&b)).apply(&w), w);
        }
    }

    #[test]
    fn longitudes_of_a_full_twist_pair() {
        let ls = longitudes(&BraidWord::b3(&[1, 1])).unwrap();
        assert!(ls[2].is_empty());
        for (k, l) in ls.iter().enumerate() {
            assert_eq!(l.abelianize()[k], 0);
        }
        assert_eq!(action_from_longitudes(&ls), artin_action(&BraidWord::b3(&[1, 1])));
        assert!(longitudes(&BraidWord::b3(&[])).unwrap().iter().all(FreeWord::is_empty));
        assert_eq!(longitudes(&BraidWord::b3(&[1])).unwrap_err(), Error::NotPure);
    }
}

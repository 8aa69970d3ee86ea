//! Membership in Δ(k,k,k) = ⟨A, B⟩ for matrices of the n = 2k model.

use serde::Serialize;

use super::presentation::eval_ab;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::geometry::{transport, Step, Tiling};
use crate::matrix::Matrix;

const SAME_POINT: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Member,
    NonMember,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonMemberReason {
    /// White triangles stay white but the base rhombus goes to a rhombus
    /// that overlaps two tiles.
    Overlap,
    /// White triangles go to black ones.
    ColorFlip,
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipCertificate {
    pub k: u32,
    pub verdict: Verdict,
    pub reason: Option<NonMemberReason>,
    /// The word in A, B for members.
    pub word: Option<FreeWord>,
    pub word_string: Option<String>,
    /// Generators applied on the left, ±1 = A^±1, ±2 = B^±1, ±3 = (AB)^±1.
    pub trace: Vec<Step>,
    /// Whether the product of the word was compared with the input exactly.
    pub exact_check: bool,
}

/// Cached tiling for repeated queries at one k.
#[derive(Clone, Debug)]
pub struct MembershipOracle {
    k: u32,
    tiling: Tiling,
}

impl MembershipOracle {
    pub fn new(k: u32) -> Result<Self> {
        if k < 4 {
            return Err(Error::NotHyperbolic(k));
        }
        Ok(MembershipOracle { k, tiling: Tiling::new(2 * k)? })
    }

    pub fn tiling(&self) -> &Tiling {
        &self.tiling
    }

    /// Decide membership of an exact Burau-frame matrix at ζ_{2k}^m.
    pub fn certify(&self, m: &Matrix<Cyclotomic>, galois: i64) -> Result<MembershipCertificate> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::InvalidArgument("membership needs a 2×2 matrix".into()));
        }
        let n = 2 * self.k;
        let m0 = transport(m, n, galois)?;
        if !self.tiling.model().preserves_form_exact(&m0)? {
            return Err(Error::InvalidArgument("matrix does not preserve the invariant Hermitian form".into()));
        }
        let red = self.tiling.reduce(&m0)?;
        let at_base = (red.end_point - self.tiling.base()).norm() < SAME_POINT;
        let non_member = |reason| MembershipCertificate {
            k: self.k,
            verdict: Verdict::NonMember,
            reason: Some(reason),
            word: None,
            word_string: None,
            trace: red.steps.clone(),
            exact_check: true,
        };
        if !at_base {
            return Err(Error::Degenerate("the image of the base triangle is not a tile".into()));
        }
        if red.odd_wall.is_some() {
            return Ok(non_member(NonMemberReason::ColorFlip));
        }
        if !red.residual.is_projective_identity() {
            return Ok(non_member(NonMemberReason::Overlap));
        }
        // residual = g_r ⋯ g_1 M, so M = g_1⁻¹ ⋯ g_r⁻¹
        let mut letters = vec![];
        for s in &red.steps {
            match -s.letter {
                3 => letters.extend([1, 2]),
                -3 => letters.extend([-2, -1]),
                l => letters.push(l),
            }
        }
        let word = FreeWord::new(2, letters).reduce();
        let recomposed = eval_ab(&word, self.tiling.model().root())?;
        if !recomposed.projective_eq(&m0) {
            return Err(Error::RelationFailed("recomposed word differs from the input".into()));
        }
        Ok(MembershipCertificate {
            k: self.k,
            verdict: Verdict::Member,
            reason: None,
            word_string: Some(word.display_with(&["A", "B"])),
            word: Some(word),
            trace: red.steps,
            exact_check: true,
        })
    }
}

/// Certificate for M at q = ζ_{2k}^m.
pub fn member_delta_kkk(m: &Matrix<Cyclotomic>, k: u32, galois: i64) -> Result<MembershipCertificate> {
    MembershipOracle::new(k)?.certify(m, galois)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::burau::eval_minus_q;

    fn at(w: &[i32], n: u32, m: i64) -> Matrix<Cyclotomic> {
        eval_minus_q(&BraidWord::b3(w), &Cyclotomic::root(n, m).unwrap()).unwrap()
    }

    #[test]
    fn a_is_a_member() {
        let c = member_delta_kkk(&at(&[1, 1], 8, 1), 4, 1).unwrap();
        assert_eq!(c.verdict, Verdict::Member);
        assert_eq!(c.word_string.as_deref(), Some("A"));
    }

    #[test]
    fn coset_representatives_are_not() {
        let oracle = MembershipOracle::new(4).unwrap();
        let g1 = oracle.certify(&at(&[1], 8, 1), 1).unwrap();
        assert_eq!(g1.verdict, Verdict::NonMember);
        assert_eq!(g1.reason, Some(NonMemberReason::ColorFlip));
        let g121 = oracle.certify(&at(&[1, 2, 1], 8, 1), 1).unwrap();
        assert_eq!(g121.reason, Some(NonMemberReason::ColorFlip));
        let g2 = oracle.certify(&at(&[2], 8, 1), 1).unwrap();
        assert_eq!(g2.reason, Some(NonMemberReason::ColorFlip));
        for w in [[1, 2], [2, 1]] {
            let c = oracle.certify(&at(&w, 8, 1), 1).unwrap();
            assert_eq!(c.reason, Some(NonMemberReason::Overlap));
        }
    }

    #[test]
    fn galois_conjugate_input() {
        let c = member_delta_kkk(&at(&[2, 2, 1, 1, -2, -2], 10, 3), 5, 3).unwrap();
        assert_eq!(c.verdict, Verdict::Member);
        assert_eq!(c.word_string.as_deref(), Some("B A B^-1"));
    }
}

use serde::Serialize;

use super::word::FreeWord;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CommutatorConvention {
    /// [u,v] = u v u⁻¹ v⁻¹
    UVUinvVinv,
    /// [u,v] = u⁻¹ v⁻¹ u v
    UinvVinvUV,
}

impl CommutatorConvention {
    pub fn apply(self, u: &FreeWord, v: &FreeWord) -> FreeWord {
        match self {
            CommutatorConvention::UVUinvVinv => FreeWord::commutator(u, v),
            CommutatorConvention::UinvVinvUV => FreeWord::commutator(&u.inverse(), &v.inverse()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub d: u32,
    pub holds: bool,
    pub convention: Option<CommutatorConvention>,
    /// (ab)^D a^{−D} b^{−D}, reduced.
    pub lhs: FreeWord,
    /// Exponent pairs (i, j) for the factors [a^i, b^j] (positive i first)
    /// or [b^j, a^i] (written with negative i).
    pub factors: Vec<(i64, i64)>,
}

/// The factor list [a,b][b,a²][a²,b²]⋯[b^{D−1},a^D][a^D,b^D].
fn factor_list(d: u32) -> Vec<(i64, i64)> {
    let d = i64::from(d);
    let mut v = vec![];
    for i in 1..=d {
        v.push((i, i));
        if i < d {
            v.push((-(i + 1), i));
        }
    }
    v
}

fn product(d: u32, conv: CommutatorConvention) -> FreeWord {
    let a = FreeWord::generator(2, 1);
    let b = FreeWord::generator(2, 2);
    let mut acc = FreeWord::identity(2);
    for (i, j) in factor_list(d) {
        let f = if i > 0 {
            conv.apply(&a.pow(i), &b.pow(j))
        } else {
            conv.apply(&b.pow(j), &a.pow(-i))
        };
        acc = acc.mul(&f);
    }
    acc
}

/// Checks (ab)^D a^{−D} b^{−D} = [a,b][b,a²][a²,b²]⋯ in F(a,b), trying
/// u v u⁻¹ v⁻¹ first and the inverse convention second.
pub fn commutator_identity_check(d: u32) -> Result<IdentityReport> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("D must be at least 2, got {d}")));
    }
    let a = FreeWord::generator(2, 1);
    let b = FreeWord::generator(2, 2);
    let di = i64::from(d);
    let lhs = FreeWord::new(2, vec![1, 2]).pow(di).mul(&a.pow(-di)).mul(&b.pow(-di));
    let convention = [CommutatorConvention::UVUinvVinv, CommutatorConvention::UinvVinvUV]
        .into_iter()
        .find(|&c| product(d, c) == lhs);
    Ok(IdentityReport { d, holds: convention.is_some(), convention, lhs, factors: factor_list(d) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        for d in [2, 3, 16] {
            let r = commutator_identity_check(d).unwrap();
            assert!(r.holds, "D={d}");
            assert_eq!(r.convention, Some(CommutatorConvention::UVUinvVinv));
            assert_eq!(r.factors.len() as u32, 2 * d - 1);
        }
        assert!(commutator_identity_check(1).is_err());
    }
}

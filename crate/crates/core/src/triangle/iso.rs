//! Δ((2k+1)/2, (2k+1)/2, (2k+1)/2) ≅ Δ(2,3,2k+1) in the matrix model.

use serde::Serialize;

use super::presentation::eval_ab;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::free::FreeWord;

#[derive(Clone, Debug, Serialize)]
pub struct IsoCheck {
    pub name: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub k: u32,
    /// α, u, v as words in a, b.
    pub forward: Vec<(String, String)>,
    /// a, b as words in α, u, v.
    pub backward: Vec<(String, String)>,
    pub checks: Vec<IsoCheck>,
    pub all_pass: bool,
}

/// α = a^{k+1}, u = a⁻¹bᵏaᵏ, v = aᵏbᵏaᵏ checked against the relations of
/// Δ(2,3,2k+1), and a = α², b = vα²v = u²α²u, all projectively and exactly
/// at q = ζ_{2k+1}.
pub fn iso_2_3_odd(k: u32) -> Result<IsoReport> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k must be at least 3, got {k}")));
    }
    let n = 2 * k + 1;
    let q = Cyclotomic::root(n, 1)?;
    let kk = i64::from(k);
    let a = FreeWord::generator(2, 1);
    let b = FreeWord::generator(2, 2);
    let alpha = a.pow(kk + 1);
    let u = a.inverse().mul(&b.pow(kk)).mul(&a.pow(kk));
    let v = a.pow(kk).mul(&b.pow(kk)).mul(&a.pow(kk));
    let m = |w: &FreeWord| eval_ab(w, &q);
    let alpha2 = alpha.pow(2);
    let mut checks = vec![];
    let mut push = |name: String, pass: bool| checks.push(IsoCheck { name, pass });
    push(format!("alpha^{n} = 1"), m(&alpha.pow(i64::from(n)))?.is_projective_identity());
    push("u^3 = 1".into(), m(&u.pow(3))?.is_projective_identity());
    push("v^2 = 1".into(), m(&v.pow(2))?.is_projective_identity());
    push("alpha u v = 1".into(), m(&alpha.mul(&u).mul(&v))?.is_projective_identity());
    push("a = alpha^2".into(), m(&alpha2)?.projective_eq(&m(&a)?));
    let vav = v.mul(&alpha2).mul(&v);
    let uau = u.pow(2).mul(&alpha2).mul(&u);
    push("b = v alpha^2 v".into(), m(&vav)?.projective_eq(&m(&b)?));
    push("b = u^2 alpha^2 u".into(), m(&uau)?.projective_eq(&m(&b)?));
    let all_pass = checks.iter().all(|c| c.pass);
    let names = ["a", "b"];
    Ok(IsoReport {
        k,
        forward: vec![
            ("alpha".into(), alpha.display_with(&names)),
            ("u".into(), u.display_with(&names)),
            ("v".into(), v.display_with(&names)),
        ],
        backward: vec![("a".into(), "alpha^2".into()), ("b".into(), "v alpha^2 v".into())],
        checks,
        all_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_three() {
        let r = iso_2_3_odd(3).unwrap();
        assert!(r.all_pass, "{:?}", r.checks);
        assert_eq!(r.forward[0].1, "a^4");
        assert!(iso_2_3_odd(2).is_err());
    }
}

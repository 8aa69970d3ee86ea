//! Presentations of β_{−q}(B₃) and of Γ_{−q}, with exact relation checks.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::burau::eval_minus_q;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "parity", content = "k")]
pub enum Parity {
    Even(u32),
    Odd(u32),
}

impl Parity {
    pub fn of(n: u32) -> Self {
        if n % 2 == 0 {
            Parity::Even(n / 2)
        } else {
            Parity::Odd(n / 2)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorKind {
    Braid,
    Power,
    Extra,
    Center,
}

/// A relator written as base^exponent.
#[derive(Clone, Debug, Serialize)]
pub struct Relator {
    pub kind: RelatorKind,
    pub name: String,
    pub base: BraidWord,
    pub exponent: u64,
}

impl Relator {
    fn new(kind: RelatorKind, name: impl Into<String>, base: &[i32], exponent: u64) -> Self {
        Relator { kind, name: name.into(), base: BraidWord::b3(base), exponent }
    }

    pub fn word(&self) -> BraidWord {
        self.base.pow(self.exponent as i64)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ImagePresentation {
    pub n: u32,
    #[serde(flatten)]
    pub parity: Parity,
    pub relators: Vec<Relator>,
    pub center_exponent: u64,
}

fn rep(l: i32, e: u32) -> Vec<i32> {
    vec![l; e as usize]
}

fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// The relators of β_{−q}(B₃) for q a primitive n-th root of unity.
pub fn image_presentation(n: u32) -> Result<ImagePresentation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let parity = Parity::of(n);
    let mut relators = vec![Relator::new(RelatorKind::Braid, "g1 g2 g1 = g2 g1 g2", &[1, 2, 1, -2, -1, -2], 1)];
    let sq: Vec<i32> = [rep(1, 2), rep(2, 2)].concat();
    let center_exponent = match parity {
        Parity::Even(k) => {
            let kk = u64::from(k);
            relators.push(Relator::new(RelatorKind::Power, format!("g1^{}", 2 * k), &[1], 2 * kk));
            relators.push(Relator::new(RelatorKind::Power, format!("g2^{}", 2 * k), &[2], 2 * kk));
            relators.push(Relator::new(RelatorKind::Power, format!("(g1^2 g2^2)^{k}"), &sq, kk));
            3 * lcm(3, kk) * kk.gcd(&2)
        }
        Parity::Odd(k) => {
            let m = u64::from(n);
            relators.push(Relator::new(RelatorKind::Power, format!("g1^{n}"), &[1], m));
            relators.push(Relator::new(RelatorKind::Power, format!("g2^{n}"), &[2], m));
            relators.push(Relator::new(RelatorKind::Power, format!("(g1^2 g2^2)^{n}"), &sq, m));
            let e1 = [rep(-1, 2), rep(2, 2 * k)].concat();
            relators.push(Relator::new(RelatorKind::Extra, format!("(g1^-2 g2^{})^2", 2 * k), &e1, 2));
            let e2 = [rep(1, 2 * k), rep(2, 2 * k - 2)].concat();
            relators.push(Relator::new(RelatorKind::Extra, format!("(g1^{} g2^{})^3", 2 * k, 2 * k - 2), &e2, 3));
            6 * lcm(3, m)
        }
    };
    relators.push(Relator::new(RelatorKind::Center, format!("(g1 g2)^{center_exponent}"), &[1, 2], center_exponent));
    Ok(ImagePresentation { n, parity, relators, center_exponent })
}

#[derive(Clone, Debug, Serialize)]
pub struct RelatorCheck {
    pub name: String,
    pub kind: RelatorKind,
    pub projective_identity: bool,
    pub exact_identity: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub n: u32,
    pub galois: i64,
    pub checks: Vec<RelatorCheck>,
    pub all_pass: bool,
}

impl RelationReport {
    /// The report, or the first failing relator as an error.
    pub fn into_result(self) -> Result<Self> {
        match self.checks.iter().find(|c| !c.pass) {
            Some(c) => Err(Error::RelationFailed(format!("{} at n = {}, m = {}", c.name, self.n, self.galois))),
            None => Ok(self),
        }
    }
}

/// Evaluate every relator at q = ζ_n^m; the center relator must be the
/// identity, the others scalar.
pub fn verify_relations(n: u32, galois: i64) -> Result<RelationReport> {
    if i64::from(n).gcd(&galois) != 1 {
        return Err(Error::NotCoprime { exponent: galois, order: n });
    }
    let pres = image_presentation(n)?;
    let q = Cyclotomic::root(n, galois)?;
    let checks = pres
        .relators
        .iter()
        .map(|r| {
            let m = eval_minus_q(&r.base, &q)?.pow(r.exponent);
            let projective_identity = m.is_projective_identity();
            let exact_identity = m.is_identity();
            let pass = match r.kind {
                RelatorKind::Center | RelatorKind::Braid => exact_identity,
                _ => projective_identity,
            };
            Ok(RelatorCheck { name: r.name.clone(), kind: r.kind, projective_identity, exact_identity, pass })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(RelationReport { n, galois, checks, all_pass })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Curvature {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// ⟨a, b, c ; a^m = b^n = c^p = abc = 1⟩, or an equivalent presentation on
/// two generators.
#[derive(Clone, Debug, Serialize)]
pub struct TrianglePresentation {
    pub exponents: (u32, u32, u32),
    pub generators: Vec<String>,
    pub relators: Vec<FreeWord>,
    pub curvature: Curvature,
}

impl TrianglePresentation {
    /// The standard presentation of Δ(m,n,p).
    pub fn triangle(m: u32, n: u32, p: u32) -> Self {
        let g = |i: i32| FreeWord::generator(3, i);
        TrianglePresentation {
            exponents: (m, n, p),
            generators: vec!["a".into(), "b".into(), "c".into()],
            relators: vec![
                g(1).pow(i64::from(m)),
                g(2).pow(i64::from(n)),
                g(3).pow(i64::from(p)),
                FreeWord::new(3, vec![1, 2, 3]),
            ],
            curvature: curvature(m, n, p),
        }
    }

    pub fn relator_strings(&self) -> Vec<String> {
        let names: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        self.relators.iter().map(|r| r.display_with(&names)).collect()
    }
}

fn curvature(m: u32, n: u32, p: u32) -> Curvature {
    // compare 1/m + 1/n + 1/p with 1
    let lhs = u64::from(n * p + m * p + m * n);
    let rhs = u64::from(m) * u64::from(n) * u64::from(p);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Curvature::Spherical,
        std::cmp::Ordering::Equal => Curvature::Euclidean,
        std::cmp::Ordering::Less => Curvature::Hyperbolic,
    }
}

impl fmt::Display for TrianglePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} ; {}>", self.generators.join(", "), self.relator_strings().join(", "))
    }
}

/// Γ_{−q} on A = β(g₁²), B = β(g₂²): Δ(k,k,k) for n = 2k, and for n = 2k+1
/// the presentation of Δ(2,3,2k+1) with the extra relators
/// (A⁻¹Bᵏ)² and (BᵏA^{k−1})³.
pub fn gamma_presentation(n: u32) -> Result<TrianglePresentation> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let a = FreeWord::generator(2, 1);
    let b = FreeWord::generator(2, 2);
    let ab = FreeWord::new(2, vec![1, 2]);
    let names = vec!["A".to_string(), "B".to_string()];
    Ok(match Parity::of(n) {
        Parity::Even(k) => {
            let e = i64::from(k);
            TrianglePresentation {
                exponents: (k, k, k),
                generators: names,
                relators: vec![a.pow(e), b.pow(e), ab.pow(e)],
                curvature: curvature(k, k, k),
            }
        }
        Parity::Odd(k) => {
            let e = i64::from(n);
            let k = i64::from(k);
            TrianglePresentation {
                exponents: (2, 3, n),
                generators: names,
                relators: vec![
                    a.pow(e),
                    b.pow(e),
                    ab.pow(e),
                    a.inverse().mul(&b.pow(k)).pow(2),
                    b.pow(k).mul(&a.pow(k - 1)).pow(3),
                ],
                curvature: curvature(2, 3, n),
            }
        }
    })
}

/// A word in A, B evaluated with A = β_{−q}(g₁²), B = β_{−q}(g₂²).
pub fn eval_ab(w: &FreeWord, q: &Cyclotomic) -> Result<Matrix<Cyclotomic>> {
    let letters: Vec<i32> = w
        .letters()
        .iter()
        .flat_map(|&l| [l, l])
        .collect();
    eval_minus_q(&BraidWord::new(3, letters)?, q)
}

/// Each relator of [`gamma_presentation`] with its exact projective check at
/// q = ζ_n^m.
pub fn verify_gamma(n: u32, galois: i64) -> Result<Vec<(String, bool)>> {
    let pres = gamma_presentation(n)?;
    let q = Cyclotomic::root(n, galois)?;
    let names = ["A", "B"];
    pres.relators
        .iter()
        .map(|r| Ok((r.display_with(&names), eval_ab(r, &q)?.is_projective_identity())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_exponents() {
        assert_eq!(image_presentation(8).unwrap().center_exponent, 72);
        assert_eq!(image_presentation(7).unwrap().center_exponent, 126);
        let p2 = image_presentation(2).unwrap();
        assert_eq!(p2.relators.len(), 5);
        assert_eq!(p2.relators[3].word().letters(), &[1, 1, 2, 2]);
        assert_eq!(image_presentation(7).unwrap().relators.len(), 7);
    }

    #[test]
    fn relations_hold() {
        assert!(verify_relations(8, 1).unwrap().all_pass);
        assert!(verify_relations(7, 3).unwrap().all_pass);
        let r4 = verify_relations(4, 1).unwrap();
        assert!(r4.checks.iter().all(|c| c.pass));
        assert!(verify_relations(8, 2).is_err());
    }

    #[test]
    fn gamma_shapes() {
        let g8 = gamma_presentation(8).unwrap();
        assert_eq!(g8.exponents, (4, 4, 4));
        assert_eq!(g8.curvature, Curvature::Hyperbolic);
        assert_eq!(gamma_presentation(6).unwrap().curvature, Curvature::Euclidean);
        let g7 = gamma_presentation(7).unwrap();
        assert_eq!(g7.exponents, (2, 3, 7));
        assert_eq!(g7.relators.len(), 5);
        assert_eq!(TrianglePresentation::triangle(2, 3, 7).to_string(), "<a, b, c ; a^2, b^3, c^7, a b c>");
        for n in [7, 8, 9, 10] {
            assert!(verify_gamma(n, 1).unwrap().iter().all(|(_, ok)| *ok), "n={n}");
        }
    }
}

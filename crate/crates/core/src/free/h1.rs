//! First homology of the commutator subgroup of Δ(D,D,D).
//!
//! The commutator subgroup of ℤ/D ∗ ℤ/D is free on c_ij = [a^i, b^j],
//! 1 ≤ i,j ≤ D−1. Words are rewritten through the Schreier transversal
//! {a^i b^j} and the relator (ab)^D contributes one relation per coset.

use num_bigint::BigInt;
use serde::Serialize;

use super::intlin::{class_order, echelon_basis, smith_invariants};
use super::word::FreeWord;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "order")]
pub enum ClassOrder {
    Finite(u64),
    Infinite,
}

impl ClassOrder {
    fn from_lattice(o: Option<BigInt>) -> Self {
        use num_traits::ToPrimitive;
        match o {
            Some(n) => ClassOrder::Finite(n.to_u64().unwrap_or(u64::MAX)),
            None => ClassOrder::Infinite,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == ClassOrder::Finite(1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AbelianCert {
    pub d: u32,
    /// Basis labels (i, j) of c_ij, in the order used by the vectors.
    pub generators: Vec<(u32, u32)>,
    /// Σ c_ii − c_{i+1,i}: the relation read from the base coset.
    pub relation: Vec<i64>,
    pub class: Vec<i64>,
    /// Order modulo the single relation.
    pub verdict: ClassOrder,
    /// Rank of the module spanned by all coset translates of the relator.
    pub full_relation_rank: usize,
    /// Order modulo all coset translates.
    pub verdict_full: ClassOrder,
    /// Smith invariants of the full relation module (torsion of H₁ is
    /// the product of ℤ/d over those d > 1).
    pub smith_invariants: Vec<u64>,
    pub free_rank: usize,
}

/// Indexing helper for the (D−1)² generators.
struct Basis {
    d: u32,
}

impl Basis {
    fn len(&self) -> usize {
        ((self.d - 1) * (self.d - 1)) as usize
    }

    fn idx(&self, i: u32, j: u32) -> usize {
        ((i - 1) * (self.d - 1) + (j - 1)) as usize
    }

    fn labels(&self) -> Vec<(u32, u32)> {
        let mut v = vec![];
        for i in 1..self.d {
            for j in 1..self.d {
                v.push((i, j));
            }
        }
        v
    }
}

/// Schreier coordinates s(i,j), j ≠ 0, of a word read from coset
/// (i0, j0); returns the coordinates and the final coset.
fn schreier_coords(d: u32, w: &FreeWord, start: (u32, u32)) -> (Vec<Vec<i64>>, (u32, u32)) {
    let mut s = vec![vec![0i64; d as usize]; d as usize];
    let (mut i, mut j) = start;
    for &l in w.letters() {
        match l {
            1 => {
                if j != 0 {
                    s[i as usize][j as usize] += 1;
                }
                i = (i + 1) % d;
            }
            -1 => {
                i = (i + d - 1) % d;
                if j != 0 {
                    s[i as usize][j as usize] -= 1;
                }
            }
            2 => j = (j + 1) % d,
            -2 => j = (j + d - 1) % d,
            _ => unreachable!("rank-2 word"),
        }
    }
    (s, (i, j))
}

/// Coordinates over c_ij of a loop, using that Σ_i s(i,j) vanishes
/// (a^D = 1).
fn c_coords(d: u32, s: &[Vec<i64>]) -> Vec<i64> {
    let b = Basis { d };
    let mut v = vec![0; b.len()];
    for i in 1..d {
        for j in 1..d {
            v[b.idx(i, j)] = s[i as usize][j as usize] - s[i as usize - 1][j as usize];
        }
    }
    v
}

/// The c-coordinates of a word in a, b lying in the commutator subgroup.
pub fn rewrite_commutator(d: u32, w: &FreeWord) -> Result<Vec<i64>> {
    if w.rank() > 2 {
        return Err(Error::InvalidArgument("element must be a word in a, b".into()));
    }
    let ab = w.abelianize();
    let ab: Vec<i64> = (0..2).map(|k| ab.get(k).copied().unwrap_or(0)).collect();
    let dd = i64::from(d);
    if ab.iter().any(|e| e.rem_euclid(dd) != 0) {
        return Err(Error::NotInCommutator(ab));
    }
    let (s, end) = schreier_coords(d, w, (0, 0));
    debug_assert_eq!(end, (0, 0));
    Ok(c_coords(d, &s))
}

/// Σ_{i=1}^{D−1} c_ii − c_{i+1,i}, with c_{D,i} = 1.
pub fn single_relation(d: u32) -> Vec<i64> {
    let b = Basis { d };
    let mut v = vec![0; b.len()];
    for i in 1..d {
        v[b.idx(i, i)] += 1;
        if i + 1 < d {
            v[b.idx(i + 1, i)] -= 1;
        }
    }
    v
}

/// Relation vectors from (ab)^D read at every coset a^i b^j.
pub fn full_relations(d: u32) -> Vec<Vec<i64>> {
    let r = FreeWord::new(2, vec![1, 2]).pow(i64::from(d));
    let mut out = vec![];
    for i in 0..d {
        for j in 0..d {
            let (s, end) = schreier_coords(d, &r, (i, j));
            debug_assert_eq!(end, (i, j));
            out.push(c_coords(d, &s));
        }
    }
    out
}

fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Class of `element` in H₁ of the commutator subgroup of Δ(D,D,D).
pub fn h1_cert(d: u32, element: &FreeWord) -> Result<AbelianCert> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("D must be at least 2, got {d}")));
    }
    let class = rewrite_commutator(d, element)?;
    let relation = single_relation(d);
    let vb: Vec<BigInt> = class.iter().map(|&x| BigInt::from(x)).collect();

    let single_basis = echelon_basis(&big(&[relation.clone()]));
    let verdict = ClassOrder::from_lattice(class_order(&single_basis, &vb));

    let full = big(&full_relations(d));
    let full_basis = echelon_basis(&full);
    let verdict_full = ClassOrder::from_lattice(class_order(&full_basis, &vb));
    let smith: Vec<u64> = smith_invariants(&full)
        .into_iter()
        .map(|x| {
            use num_traits::ToPrimitive;
            x.to_u64().unwrap_or(u64::MAX)
        })
        .collect();
    let b = Basis { d };
    Ok(AbelianCert {
        d,
        generators: b.labels(),
        relation,
        class,
        verdict,
        full_relation_rank: full_basis.len(),
        verdict_full,
        free_rank: b.len() - full_basis.len(),
        smith_invariants: smith,
    })
}

/// [a^F, b^F].
pub fn power_commutator(f: u32) -> FreeWord {
    let a = FreeWord::generator(2, 1).pow(i64::from(f));
    let b = FreeWord::generator(2, 2).pow(i64::from(f));
    FreeWord::commutator(&a, &b)
}

/// Unit vector of c_ij, for tests and reporting.
pub fn c_vector(d: u32, i: u32, j: u32) -> Vec<i64> {
    let b = Basis { d };
    let mut v = vec![0; b.len()];
    v[b.idx(i, j)] = 1;
    v
}

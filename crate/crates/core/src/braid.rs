//! Braid words, permutations and the pure braid group of three strands.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::burau::eval_generic;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::matrix::Matrix;

/// A word in the Artin generators; letter `i` is g_i and `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::InvalidArgument(format!("a braid needs at least 2 strands, got {strands}")));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Three-strand word; panics on letters outside ±1, ±2.
    pub fn b3(letters: &[i32]) -> Self {
        Self::new(3, letters.to_vec()).expect("letters must be ±1 or ±2")
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord { strands, letters: vec![] }
    }

    pub fn generator(strands: usize, i: i32) -> Result<Self> {
        Self::new(strands, vec![i])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cancel adjacent g g⁻¹ pairs.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Image in ℤ under g_i ↦ 1.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            p = p.compose(&Permutation::transposition(self.strands, l.unsigned_abs() as usize - 1));
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// A_{ij} = g_i ⋯ g_{j−1} g_j² g_{j−1}⁻¹ ⋯ g_i⁻¹ for 1 ≤ i ≤ j ≤ n−1.
    pub fn pure_generator(strands: usize, i: i32, j: i32) -> Result<Self> {
        if i < 1 || j < i || j as usize >= strands {
            return Err(Error::InvalidArgument(format!("A_{{{i},{j}}} undefined on {strands} strands")));
        }
        let mut letters: Vec<i32> = (i..j).collect();
        letters.extend([j, j]);
        letters.extend((i..j).rev().map(|x| -x));
        Self::new(strands, letters)
    }

    /// Parse "g1 g2^-1", "1 2 -1" or, on three strands, "A B^-1 Z".
    pub fn parse(s: &str, strands: usize) -> Result<Self> {
        let mut letters = vec![];
        for tok in s.split(|c: char| c.is_whitespace() || c == ',' || c == '*').filter(|t| !t.is_empty()) {
            letters.extend(parse_token(tok, strands)?);
        }
        Self::new(strands, letters)
    }
}

fn parse_token(tok: &str, strands: usize) -> Result<Vec<i32>> {
    let bad = || Error::Parse(format!("unrecognized braid token '{tok}'"));
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, e.trim_start_matches('(').trim_end_matches(')').parse::<i64>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    if exp.unsigned_abs() > 1_000_000 {
        return Err(Error::Parse(format!("exponent too large in '{tok}'")));
    }
    let unit: Vec<i32> = if let Ok(v) = base.parse::<i32>() {
        if v == 0 {
            return Err(bad());
        }
        vec![v]
    } else if let Some(rest) = base.strip_prefix('g').or_else(|| base.strip_prefix('s')) {
        vec![rest.parse::<i32>().map_err(|_| bad())?]
    } else {
        if strands != 3 {
            return Err(bad());
        }
        match base {
            "A" => vec![1, 1],
            "B" => vec![2, 2],
            "Z" => vec![1, 2, 1, 1, 2, 1],
            "e" => vec![],
            _ => return Err(bad()),
        }
    };
    let (unit, n) = if exp < 0 {
        (unit.iter().rev().map(|l| -l).collect::<Vec<_>>(), exp.unsigned_abs())
    } else {
        (unit, exp as u64)
    };
    Ok(unit.iter().copied().cycle().take(unit.len() * n as usize).collect())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("g{l}") } else { format!("g{}^-1", -l) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, 3)
    }
}

/// A permutation of {0,…,n−1}, stored as the list of images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Swap of i and i+1 (0-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, i + 1);
        p
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle notation, 1-based, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = vec![];
        for s in 0..self.images.len() {
            if seen[s] || self.images[s] == s {
                continue;
            }
            let mut c = vec![];
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i + 1);
                i = self.images[i];
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// Equality in B₃, decided by the generic Burau matrices (faithful for
/// three strands).
pub fn word_equal_b3(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    for w in [u, v] {
        if w.strands() != 3 {
            return Err(Error::StrandMismatch { expected: 3, found: w.strands() });
        }
    }
    Ok(eval_generic(u) == eval_generic(v))
}

/// w = f·Z^m with f in the free group on A = g₁², B = g₂² and Z = (g₁g₂g₁)².
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureDecomposition {
    /// Word over generator 1 = A, 2 = B.
    pub free: FreeWord,
    pub center: i64,
}

impl PureDecomposition {
    pub fn to_braid(&self) -> BraidWord {
        let mut letters = vec![];
        for &l in self.free.letters() {
            letters.extend([l, l]);
        }
        let z = BraidWord::b3(&[1, 2, 1, 1, 2, 1]).pow(self.center);
        BraidWord::b3(&letters).concat(&z)
    }
}

impl fmt::Display for PureDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .free
            .letters()
            .iter()
            .map(|&l| {
                let n = if l.abs() == 1 { "A" } else { "B" };
                if l > 0 {
                    n.to_string()
                } else {
                    format!("{n}^-1")
                }
            })
            .collect();
        if self.center != 0 {
            parts.push(format!("Z^{}", self.center));
        }
        if parts.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

type IntMat = Matrix<BigInt>;

fn int_gen(l: i32) -> IntMat {
    let i = |v: i64| BigInt::from(v);
    match l {
        1 => Matrix::m2(i(1), i(1), i(0), i(1)),
        -1 => Matrix::m2(i(1), i(-1), i(0), i(1)),
        2 => Matrix::m2(i(1), i(0), i(-1), i(1)),
        -2 => Matrix::m2(i(1), i(0), i(1), i(1)),
        _ => unreachable!(),
    }
}

fn l1_norm(m: &IntMat) -> BigInt {
    m.entries().iter().map(Signed::abs).sum()
}

/// Split a pure 3-braid as f·Z^m.
///
/// At t = −1 the Burau matrices lie in SL(2,ℤ), A and B map to the free
/// generators [[1,2],[0,1]] and [[1,0],[−2,1]] of the level-2 congruence
/// group modulo ±1, and Z maps to −I. The free part is read off by
/// ping-pong peeling, the central exponent from the exponent sum, and the
/// result is checked against the faithful generic evaluation.
pub fn pb3_rewrite(w: &BraidWord) -> Result<PureDecomposition> {
    if w.strands() != 3 {
        return Err(Error::StrandMismatch { expected: 3, found: w.strands() });
    }
    if !w.is_pure() {
        return Err(Error::NotPure);
    }
    let mut m = w.letters().iter().fold(IntMat::identity(2), |acc, &l| acc.matmul(&int_gen(l)));
    let gens: [(i32, IntMat); 4] = [
        (1, int_gen(1).pow(2)),
        (-1, int_gen(-1).pow(2)),
        (2, int_gen(2).pow(2)),
        (-2, int_gen(-2).pow(2)),
    ];
    let mut free = vec![];
    let one = BigInt::one();
    loop {
        if m.entries()[1].is_zero() && m.entries()[2].is_zero() && m.entries()[0].abs() == one {
            break;
        }
        let cur = l1_norm(&m);
        let mut best: Option<(BigInt, i32, IntMat)> = None;
        for (l, _) in &gens {
            // peel from the left: m = g·m'
            let inv = &gens.iter().find(|(k, _)| *k == -l).unwrap().1;
            let next = inv.matmul(&m);
            let nn = l1_norm(&next);
            if best.as_ref().map_or(true, |(b, _, _)| nn < *b) {
                best = Some((nn, *l, next));
            }
        }
        let (nn, l, next) = best.unwrap();
        if nn >= cur {
            return Err(Error::Rewrite(format!("no reducing letter at norm {cur}")));
        }
        free.push(l);
        m = next;
    }
    let free = FreeWord::new(2, free).reduce();
    let rest = w.exponent_sum() - 2 * free.exponent_sum();
    if rest % 6 != 0 {
        return Err(Error::Rewrite(format!("exponent sum residue {rest} not divisible by 6")));
    }
    let dec = PureDecomposition { free, center: rest / 6 };
    if !word_equal_b3(w, &dec.to_braid())? {
        return Err(Error::Rewrite("recomposition check failed".into()));
    }
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations() {
        let g1 = BraidWord::b3(&[1]);
        assert_eq!(g1.permutation().cycles(), vec![vec![1, 2]]);
        assert!(BraidWord::b3(&[1, 1]).is_pure());
        let p = BraidWord::b3(&[1, 2]);
        assert!(!p.is_pure());
        assert_eq!(p.permutation().cycles().len(), 1);
        assert_eq!(p.permutation().cycles()[0].len(), 3);
    }

    #[test]
    fn parsing() {
        let a = BraidWord::parse("g1 g2^-1 g1^3", 3).unwrap();
        assert_eq!(a.letters(), &[1, -2, 1, 1, 1]);
        let b = BraidWord::parse("1 -2 1,1 1", 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(BraidWord::parse("A^-1 B", 3).unwrap().letters(), &[-1, -1, 2, 2]);
        assert!(matches!(BraidWord::parse("g3", 3), Err(Error::GeneratorOutOfRange { .. })));
        assert!(matches!(BraidWord::parse("h1", 3), Err(Error::Parse(_))));
        assert!(matches!(BraidWord::parse("0", 3), Err(Error::Parse(_))));
        assert_eq!(BraidWord::parse("", 3).unwrap().len(), 0);
        assert_eq!(a.to_string(), "g1 g2^-1 g1 g1 g1");
    }

    #[test]
    fn equality_examples() {
        let b = BraidWord::b3;
        assert!(word_equal_b3(&b(&[1, 2, 1]), &b(&[2, 1, 2])).unwrap());
        assert!(!word_equal_b3(&b(&[1]), &b(&[2])).unwrap());
        for m in 1..=3 {
            let lhs = b(&[1, 2]).pow(3 * m);
            let rhs = b(&[1])
                .pow(2 * m)
                .concat(&b(&[2]))
                .concat(&b(&[1, 1, 2, 2]).pow(m))
                .concat(&b(&[-2]));
            assert!(word_equal_b3(&lhs, &rhs).unwrap(), "m={m}");
        }
    }

    #[test]
    fn rewrite_examples() {
        let b = BraidWord::b3;
        let d = pb3_rewrite(&b(&[1, 1])).unwrap();
        assert_eq!((d.free.letters().to_vec(), d.center), (vec![1], 0));
        let d = pb3_rewrite(&b(&[1, 2, 1, 1, 2, 1])).unwrap();
        assert_eq!((d.free.letters().to_vec(), d.center), (vec![], 1));
        let d = pb3_rewrite(&b(&[1, 2, 1, 2, 1, 2, 2, 2])).unwrap();
        assert_eq!((d.free.letters().to_vec(), d.center), (vec![2], 1));
        assert_eq!(d.to_string(), "B Z^1");
        assert_eq!(pb3_rewrite(&b(&[1, 2])).unwrap_err(), Error::NotPure);
    }

    #[test]
    fn pure_generators() {
        let a12 = BraidWord::pure_generator(3, 1, 2).unwrap();
        assert_eq!(a12.letters(), &[1, 2, 2, -1]);
        assert!(a12.is_pure());
        let d = pb3_rewrite(&a12).unwrap();
        assert!(word_equal_b3(&a12, &d.to_braid()).unwrap());
    }
}

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A word in a free group of the given rank; letter `i` is the i-th
/// generator (1-based) and `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    /// Builds the word without reducing it.
    pub fn new(rank: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= rank));
        FreeWord { rank, letters }
    }

    pub fn checked(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::GeneratorOutOfRange { index: l, strands: rank });
            }
        }
        Ok(FreeWord { rank, letters })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: vec![] }
    }

    pub fn generator(rank: usize, i: i32) -> Self {
        Self::new(rank, vec![i])
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { rank: self.rank, letters: out }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }

    /// Trivial as a group element.
    pub fn is_trivial(&self) -> bool {
        self.reduce().is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Reduced product.
    pub fn mul(&self, other: &Self) -> Self {
        self.concat(other).reduce()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { rank: self.rank.max(other.rank), letters }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        FreeWord { rank: self.rank, letters }.reduce()
    }

    /// [u, v] = u v u⁻¹ v⁻¹, reduced.
    pub fn commutator(u: &Self, v: &Self) -> Self {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse()).reduce()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| i64::from(l.signum())).sum()
    }

    /// Abelianization: the exponent of each generator.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
        }
        v
    }

    /// Apply the homomorphism sending generator i to `images[i-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut letters = vec![];
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                letters.extend_from_slice(&img.letters);
            } else {
                letters.extend(img.letters.iter().rev().map(|x| -x));
            }
        }
        FreeWord { rank, letters }.reduce()
    }

    pub fn with_rank(mut self, rank: usize) -> Self {
        assert!(self.letters.iter().all(|l| l.unsigned_abs() as usize <= rank));
        self.rank = rank;
        self
    }

    /// Render with the given generator names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.letters.is_empty() {
            return "e".into();
        }
        let mut parts: Vec<String> = vec![];
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let name = names
                .get(l.unsigned_abs() as usize - 1)
                .map_or_else(|| format!("x{}", l.abs()), |s| s.to_string());
            let e = run as i64 * i64::from(l.signum());
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
            i += run;
        }
        parts.join(" ")
    }

    pub fn default_names(rank: usize) -> Vec<String> {
        match rank {
            2 => vec!["a".into(), "b".into()],
            6 => ["y1", "z1", "y2", "z2", "y3", "z3"].iter().map(|s| s.to_string()).collect(),
            _ => (1..=rank).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Parse words such as `a b^-2`, `x1 x2^-1`, `[[x1,x2],x3]` or
    /// `1 -2`. Names `a`,`b`,`c` are generators 1,2,3; `y_i`,`z_i` are
    /// 2i−1, 2i.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let toks = tokenize(s)?;
        let mut p = Parser { toks, pos: 0, rank };
        let w = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("unexpected '{}' in word", p.toks[p.pos])));
        }
        Ok(w.with_rank(rank))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Self::default_names(self.rank);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.display_with(&refs))
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Caret,
    Open(char),
    Close(char),
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(s) => write!(f, "{s}"),
            Tok::Int(i) => write!(f, "{i}"),
            Tok::Caret => write!(f, "^"),
            Tok::Open(c) | Tok::Close(c) => write!(f, "{c}"),
            Tok::Comma => write!(f, ","),
        }
    }
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = vec![];
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() || c == '*' || c == '.' {
            i += 1;
        } else if c == '^' {
            out.push(Tok::Caret);
            i += 1;
        } else if c == '[' || c == '(' {
            out.push(Tok::Open(c));
            i += 1;
        } else if c == ']' || c == ')' {
            out.push(Tok::Close(c));
            i += 1;
        } else if c == ',' {
            out.push(Tok::Comma);
            i += 1;
        } else if c == '-' || c.is_ascii_digit() {
            let st = i;
            i += 1;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Int(t.parse().map_err(|_| Error::Parse(format!("bad integer '{t}'")))?));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            i += 1;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(cs[st..i].iter().filter(|&&c| c != '_').collect()));
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    rank: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<FreeWord> {
        let mut w = FreeWord::identity(self.rank);
        while let Some(t) = self.peek() {
            if matches!(t, Tok::Close(_) | Tok::Comma) {
                break;
            }
            let f = self.factor()?;
            w = w.concat(&f);
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<FreeWord> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Int(e)) => {
                    let e = *e;
                    self.pos += 1;
                    if e.unsigned_abs() > 1_000_000 {
                        return Err(Error::Parse("exponent too large".into()));
                    }
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("expected integer after '^'".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FreeWord> {
        let t = self.toks.get(self.pos).cloned().ok_or_else(|| Error::Parse("unexpected end of word".into()))?;
        self.pos += 1;
        match t {
            Tok::Int(i) => {
                if i == 0 || i.unsigned_abs() as usize > self.rank {
                    return Err(Error::GeneratorOutOfRange { index: i as i32, strands: self.rank });
                }
                Ok(FreeWord::generator(self.rank, i as i32))
            }
            Tok::Name(n) => {
                let g = name_index(&n).ok_or_else(|| Error::Parse(format!("unknown generator '{n}'")))?;
                if g as usize > self.rank {
                    return Err(Error::GeneratorOutOfRange { index: g, strands: self.rank });
                }
                Ok(FreeWord::generator(self.rank, g))
            }
            Tok::Open('[') => {
                let u = self.expr()?;
                if self.peek() != Some(&Tok::Comma) {
                    return Err(Error::Parse("expected ',' in commutator".into()));
                }
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Close(']')) {
                    return Err(Error::Parse("expected ']'".into()));
                }
                self.pos += 1;
                Ok(FreeWord::commutator(&u, &v))
            }
            Tok::Open(_) => {
                let u = self.expr()?;
                if self.peek() != Some(&Tok::Close(')')) {
                    return Err(Error::Parse("expected ')'".into()));
                }
                self.pos += 1;
                Ok(u)
            }
            other => Err(Error::Parse(format!("unexpected '{other}'"))),
        }
    }
}

fn name_index(n: &str) -> Option<i32> {
    let simple: HashMap<&str, i32> = [("a", 1), ("b", 2), ("c", 3)].into_iter().collect();
    if let Some(&i) = simple.get(n) {
        return Some(i);
    }
    let (head, num) = n.split_at(1);
    let k: i32 = num.parse().ok()?;
    if k < 1 {
        return None;
    }
    match head {
        "x" => Some(k),
        "y" => Some(2 * k - 1),
        "z" => Some(2 * k),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_commutators() {
        let a = FreeWord::generator(2, 1);
        let b = FreeWord::generator(2, 2);
        assert!(a.mul(&a.inverse()).is_empty());
        let c = FreeWord::commutator(&a, &b);
        assert_eq!(c.letters(), &[1, 2, -1, -2]);
        assert!(FreeWord::commutator(&a, &a).is_empty());
        assert_eq!(c.to_string(), "a b a^-1 b^-1");
    }

    #[test]
    fn parser() {
        let w = FreeWord::parse("[[x1,x2],x3]", 3).unwrap();
        let x = |i| FreeWord::generator(3, i);
        let expect = FreeWord::commutator(&FreeWord::commutator(&x(1), &x(2)), &x(3));
        assert_eq!(w, expect);
        assert_eq!(FreeWord::parse("a^2 b^-1", 2).unwrap().letters(), &[1, 1, -2]);
        assert_eq!(FreeWord::parse("1 -2", 2).unwrap().letters(), &[1, -2]);
        assert_eq!(FreeWord::parse("y2 z1", 6).unwrap().letters(), &[3, 2]);
        assert!(FreeWord::parse("x4", 3).is_err());
        assert!(FreeWord::parse("[x1 x2]", 3).is_err());
        assert!(FreeWord::parse("q", 3).is_err());
    }

    #[test]
    fn substitution_is_homomorphic() {
        let u = FreeWord::parse("a b a^-1", 2).unwrap();
        let v = FreeWord::parse("b^2 a", 2).unwrap();
        let imgs = vec![FreeWord::parse("x1 x2", 3).unwrap(), FreeWord::parse("x3^-1", 3).unwrap()];
        assert_eq!(u.mul(&v).substitute(&imgs), u.substitute(&imgs).mul(&v.substitute(&imgs)));
    }
}

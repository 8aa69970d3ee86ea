//! Integer lattices: echelon bases, Smith invariants and orders of classes
//! in ℤ^N / L.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-echelon ℤ-basis of the lattice spanned by `rows`.
pub fn echelon_basis(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(n) = rows.first().map(Vec::len) else { return vec![] };
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out = vec![];
    for c in 0..n {
        if m.is_empty() {
            break;
        }
        loop {
            let mut idx: Vec<usize> = (0..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if idx.len() <= 1 {
                break;
            }
            idx.sort_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()));
            let p = idx[0];
            let piv = m[p][c].clone();
            for &i in &idx[1..] {
                let q = m[i][c].div_floor(&piv);
                let prow = m[p].clone();
                for (x, y) in m[i].iter_mut().zip(&prow) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(p) = (0..m.len()).find(|&i| !m[i][c].is_zero()) {
            let mut r = m.swap_remove(p);
            if r[c].is_negative() {
                for x in r.iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            out.push(r);
        }
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    out
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    echelon_basis(rows).len()
}

/// Order of `v` modulo the lattice with echelon basis `basis`; `None` when
/// the class has infinite order. Order 1 means `v` lies in the lattice.
pub fn class_order(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<BigInt> {
    let mut rest: Vec<BigRational> = v.iter().cloned().map(BigRational::from).collect();
    let mut den = BigInt::one();
    for row in basis {
        let p = row.iter().position(|x| !x.is_zero()).expect("zero row in basis");
        if rest[..p].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let lam = &rest[p] / BigRational::from(row[p].clone());
        if lam.is_zero() {
            continue;
        }
        den = den.lcm(lam.denom());
        for (x, y) in rest.iter_mut().zip(row) {
            *x -= &lam * BigRational::from(y.clone());
        }
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(den)
}

/// Nonzero Smith invariants d₁ | d₂ | … of the matrix.
pub fn smith_invariants(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = echelon_basis(rows);
    let r = m.len();
    let n = m.first().map_or(0, Vec::len);
    let mut diag = vec![];
    for t in 0..r {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..n {
                    if !m[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let piv = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = m[i][t].div_floor(&piv);
                if !q.is_zero() {
                    let prow = m[t].clone();
                    for (x, y) in m[i].iter_mut().zip(&prow) {
                        *x -= &q * y;
                    }
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = m[t][j].div_floor(&piv);
                if !q.is_zero() {
                    for row in m.iter_mut() {
                        let y = row[t].clone();
                        row[j] -= &q * y;
                    }
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the remaining block
            let bad = (t + 1..r).find(|&i| (t + 1..n).any(|j| !(&m[i][j] % &piv).is_zero()));
            match bad {
                Some(i) => {
                    let row = m[i].clone();
                    for (x, y) in m[t].iter_mut().zip(&row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if t < n && !m[t][t].is_zero() {
            diag.push(m[t][t].abs());
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn smith_of_small_matrices() {
        let m = b(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let d = smith_invariants(&m);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(smith_invariants(&b(&[&[2, 0], &[0, 3]])), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn orders() {
        let basis = echelon_basis(&b(&[&[2, 0, 0], &[0, 3, 0]]));
        let v = |x: &[i64]| x.iter().map(|&t| BigInt::from(t)).collect::<Vec<_>>();
        assert_eq!(class_order(&basis, &v(&[1, 0, 0])), Some(BigInt::from(2)));
        assert_eq!(class_order(&basis, &v(&[1, 1, 0])), Some(BigInt::from(6)));
        assert_eq!(class_order(&basis, &v(&[4, -3, 0])), Some(BigInt::from(1)));
        assert_eq!(class_order(&basis, &v(&[0, 0, 1])), None);
        assert_eq!(rank(&b(&[&[1, 2], &[2, 4]])), 1);
    }
}

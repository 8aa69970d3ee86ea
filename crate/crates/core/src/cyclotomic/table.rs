//! Per-order data: the cyclotomic polynomial and the reduced powers of ζ.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) struct Table {
    /// Monic Φ_n, low degree first.
    pub phi: Vec<BigInt>,
    /// ζ^e reduced to the power basis, for e in 0..n.
    pub powers: Vec<Vec<BigInt>>,
    /// (cos, sin) of 2πe/n.
    pub unit: Vec<(f64, f64)>,
    /// Maximal proper cyclotomic subfields as (p, m): ℚ(ζ_m) with m = n/p,
    /// halved when that is 2 mod 4. For n ≡ 2 mod 4 the only entry is the
    /// same field at n/2.
    pub subfields: Vec<(u32, u32)>,
}

impl Table {
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<Table>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Table>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn table(n: u32) -> Arc<Table> {
    debug_assert!(n > 0);
    if let Some(t) = cache().lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build(n));
    cache().lock().unwrap().entry(n).or_insert(t).clone()
}

fn build(n: u32) -> Table {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![BigInt::zero(); deg];
    cur[0] = BigInt::one();
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce
        let mut next = vec![BigInt::zero(); deg + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        reduce(&mut next, &phi);
        cur = next;
    }
    let unit = (0..n)
        .map(|e| {
            let th = 2.0 * std::f64::consts::PI * f64::from(e) / f64::from(n);
            (th.cos(), th.sin())
        })
        .collect();
    Table { phi, powers, unit, subfields: subfields(n) }
}

fn subfields(n: u32) -> Vec<(u32, u32)> {
    if n == 1 {
        return vec![];
    }
    if n % 4 == 2 {
        return vec![(2, n / 2)];
    }
    let mut out = vec![];
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        if p * p > rest {
            p = rest;
        }
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            let m = n / p;
            out.push((p, if m % 4 == 2 { m / 2 } else { m }));
        }
        p += 1;
    }
    out
}

/// Coordinates change from ℚ(ζ_n) down to a subfield ℚ(ζ_m).
pub(crate) struct Descent {
    /// ζ_m^j for j < φ(m), on the power basis of ℚ(ζ_n).
    lift: Vec<Vec<BigInt>>,
    /// Coordinates of ℚ(ζ_n) that determine the preimage.
    pivots: Vec<usize>,
    /// den times the inverse of `lift` restricted to `pivots`.
    solve: Vec<Vec<BigInt>>,
    pub den: BigInt,
}

impl Descent {
    /// Numerators y with x = Σ y_j ζ_m^j / den, if x lies in ℚ(ζ_m).
    pub fn apply(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let y: Vec<BigInt> = self
            .solve
            .iter()
            .map(|row| {
                let mut acc = BigInt::zero();
                for (s, &i) in row.iter().zip(&self.pivots) {
                    if !s.is_zero() && !x[i].is_zero() {
                        acc += s * &x[i];
                    }
                }
                acc
            })
            .collect();
        for (i, xi) in x.iter().enumerate() {
            let mut v = BigInt::zero();
            for (col, yj) in self.lift.iter().zip(&y) {
                if !col[i].is_zero() && !yj.is_zero() {
                    v += &col[i] * yj;
                }
            }
            if v != &self.den * xi {
                return None;
            }
        }
        Some(y)
    }
}

fn descent_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<Descent>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn descent(n: u32, m: u32) -> Arc<Descent> {
    if let Some(d) = descent_cache().lock().unwrap().get(&(n, m)) {
        return d.clone();
    }
    let d = Arc::new(build_descent(n, m));
    descent_cache().lock().unwrap().entry((n, m)).or_insert(d).clone()
}

fn build_descent(n: u32, m: u32) -> Descent {
    debug_assert!(n % m == 0);
    let t = table(n);
    let k = table(m).degree();
    let step = (n / m) as usize;
    let lift: Vec<Vec<BigInt>> = (0..k).map(|j| t.powers[(j * step) % n as usize].clone()).collect();
    let rat = |x: &BigInt| BigRational::from(x.clone());

    // greedy choice of independent rows of the φ(n)×φ(m) lift matrix
    let mut pivots = vec![];
    let mut echelon: Vec<(usize, Vec<BigRational>)> = vec![];
    for i in 0..t.degree() {
        let mut row: Vec<BigRational> = lift.iter().map(|col| rat(&col[i])).collect();
        for (lead, e) in &echelon {
            if !row[*lead].is_zero() {
                let f = row[*lead].clone() / &e[*lead];
                for (r, v) in row.iter_mut().zip(e) {
                    *r -= &f * v;
                }
            }
        }
        if let Some(lead) = row.iter().position(|v| !v.is_zero()) {
            echelon.push((lead, row));
            pivots.push(i);
            if pivots.len() == k {
                break;
            }
        }
    }
    debug_assert_eq!(pivots.len(), k);

    // Gauss-Jordan on [S | I]
    let mut a: Vec<Vec<BigRational>> = pivots
        .iter()
        .enumerate()
        .map(|(r, &i)| {
            let mut row: Vec<BigRational> = lift.iter().map(|col| rat(&col[i])).collect();
            row.extend((0..k).map(|c| if c == r { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..k {
        let p = (c..k).find(|&r| !a[r][c].is_zero()).expect("pivot rows are independent");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for v in a[c].iter_mut() {
            *v *= &inv;
        }
        for r in 0..k {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot_row = a[c].clone();
                for (v, w) in a[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * w;
                }
            }
        }
    }
    let mut den = BigInt::one();
    for row in &a {
        for v in &row[k..] {
            den = den.lcm(v.denom());
        }
    }
    let solve = a.iter().map(|row| row[k..].iter().map(|v| v.numer() * (&den / v.denom())).collect()).collect();
    Descent { lift, pivots, solve, den }
}

/// Reduce `p` in place modulo the monic polynomial `m`, truncating it to
/// `deg m` coefficients.
pub(crate) fn reduce(p: &mut Vec<BigInt>, m: &[BigInt]) {
    let d = m.len() - 1;
    if p.len() > d {
        for i in (d..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut p[i]);
            for (j, mj) in m[..d].iter().enumerate() {
                if !mj.is_zero() {
                    p[i - d + j] -= &c * mj;
                }
            }
        }
    }
    p.resize(d, BigInt::zero());
}

/// Φ_n as integer coefficients, computed by dividing x^n − 1 by Φ_d for
/// every proper divisor d.
pub(crate) fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let mut memo: HashMap<u32, Vec<BigInt>> = HashMap::new();
    phi_rec(n, &mut memo)
}

fn phi_rec(n: u32, memo: &mut HashMap<u32, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let f = phi_rec(d, memo);
            num = exact_div(&num, &f);
        }
    }
    memo.insert(n, num.clone());
    num
}

fn exact_div(a: &[BigInt], m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dm];
    for i in (dm..a.len()).rev() {
        let c = std::mem::take(&mut r[i]);
        if c.is_zero() {
            continue;
        }
        for (j, mj) in m[..dm].iter().enumerate() {
            r[i - dm + j] -= &c * mj;
        }
        q[i - dm] = c;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of absolute value 2
        let p = cyclotomic_poly(105);
        assert_eq!(p.len() - 1, 48);
        assert!(p.contains(&BigInt::from(-2)));
    }

    #[test]
    fn maximal_subfields() {
        assert_eq!(subfields(12), vec![(2, 3), (3, 4)]);
        assert_eq!(subfields(10), vec![(2, 5)]);
        assert_eq!(subfields(8), vec![(2, 4)]);
        assert_eq!(subfields(45), vec![(3, 15), (5, 9)]);
    }

    #[test]
    fn descent_inverts_lift() {
        let d = descent(12, 4);
        // ζ_12³ = ζ_4
        let x = table(12).powers[3].clone();
        let y = d.apply(&x).unwrap();
        let mut want = vec![BigInt::zero(), d.den.clone()];
        want.truncate(2);
        assert_eq!(y, want);
        assert!(d.apply(&table(12).powers[1]).is_none());
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..60 {
            assert_eq!(table(n).degree() as u32, euler_phi(n), "n={n}");
        }
    }
}

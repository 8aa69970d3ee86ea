//! SVG rendering of the orbit of the base rhombus.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::disk::{from_origin, to_origin, C64};
use super::tiling::{moebius, Tiling, DIAGONAL, LETTERS};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

const SIZE: f64 = 1000.0;
const PIECES: usize = 4;

#[derive(Clone, Debug)]
pub struct OrbitElement {
    /// Word in the letters ±1 = A^±1, ±2 = B^±1, ±3 = (AB)^±1.
    pub word: Vec<i32>,
    pub matrix: Matrix<C64>,
    /// Image of the base point.
    pub center: C64,
}

fn key(z: C64) -> (i64, i64) {
    ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64)
}

/// Distinct images of the base rhombus under words of length ≤ depth,
/// sorted by the position of the image of the base point.
pub fn orbit(tiling: &Tiling, depth: usize) -> Vec<OrbitElement> {
    let base = tiling.base();
    let id = OrbitElement { word: vec![], matrix: Matrix::identity(2), center: base };
    let mut seen: BTreeMap<(i64, i64), OrbitElement> = BTreeMap::new();
    seen.insert(key(base), id.clone());
    let mut frontier = vec![id];
    for _ in 0..depth {
        let mut next = vec![];
        for e in &frontier {
            for l in LETTERS {
                let m = e.matrix.matmul(tiling.letter_float(l));
                let c = moebius(&m, base);
                let k = key(c);
                if seen.contains_key(&k) {
                    continue;
                }
                let mut word = e.word.clone();
                word.push(l);
                let el = OrbitElement { word, matrix: m, center: c };
                seen.insert(k, el.clone());
                next.push(el);
            }
        }
        frontier = next;
    }
    seen.into_values().collect()
}

fn to_svg(z: C64) -> (f64, f64) {
    (SIZE / 2.0 * (1.0 + z.re), SIZE / 2.0 * (1.0 - z.im))
}

fn geodesic(path: &mut String, z1: C64, z2: C64) {
    let w2 = to_origin(z1, z2);
    let one = C64::new(1.0, 0.0);
    let gamma = |s: f64| from_origin(z1, w2 * s);
    let deriv = |s: f64| w2 * (1.0 - z1.norm_sqr()) / ((one + z1.conj() * w2 * s) * (one + z1.conj() * w2 * s));
    let h = 1.0 / PIECES as f64;
    for i in 0..PIECES {
        let (s0, s1) = (i as f64 * h, (i + 1) as f64 * h);
        let c1 = gamma(s0) + deriv(s0) * (h / 3.0);
        let c2 = gamma(s1) - deriv(s1) * (h / 3.0);
        let [a, b, c] = [c1, c2, gamma(s1)].map(to_svg);
        let _ = write!(path, " C {:.3} {:.3} {:.3} {:.3} {:.3} {:.3}", a.0, a.1, b.0, b.1, c.0, c.1);
    }
}

fn triangle_path(v: [C64; 3]) -> String {
    let (x, y) = to_svg(v[0]);
    let mut p = format!("M {x:.3} {y:.3}");
    for i in 0..3 {
        geodesic(&mut p, v[i], v[(i + 1) % 3]);
    }
    p.push_str(" Z");
    p
}

/// The orbit of Δ* = Δ ∪ R(Δ) (R the reflection in the diagonal PQ) for
/// Δ(k,k,k), as an SVG document with the unit disk filling a 1000×1000
/// view box.
pub fn tessellation_svg(k: u32, depth: usize, coloring: bool) -> Result<String> {
    if k < 4 {
        return Err(Error::NotHyperbolic(k));
    }
    let tiling = Tiling::new(2 * k)?;
    let [o, p, q] = tiling.vertices();
    let o_reflected = tiling.reflect_side(DIAGONAL, o);
    let elements = orbit(&tiling, depth);
    let (white, black, stroke) = if coloring { ("#ffffff", "#202020", "#808080") } else { ("none", "none", "#000000") };
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<title>Delta({k},{k},{k}) depth {depth}</title>");
    let _ = writeln!(
        out,
        "<circle cx=\"{c}\" cy=\"{c}\" r=\"{c}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>",
        c = SIZE / 2.0
    );
    let _ = writeln!(out, "<g stroke=\"{stroke}\" stroke-width=\"0.5\" stroke-linejoin=\"round\">");
    for e in &elements {
        let img = |z: C64| moebius(&e.matrix, z);
        let _ = writeln!(out, "<path class=\"white\" fill=\"{white}\" d=\"{}\"/>", triangle_path([img(o), img(p), img(q)]));
        let _ = writeln!(
            out,
            "<path class=\"black\" fill=\"{black}\" d=\"{}\"/>",
            triangle_path([img(o_reflected), img(q), img(p)])
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_rhombus_only() {
        let s = tessellation_svg(4, 0, true).unwrap();
        assert_eq!(s.matches("class=\"white\"").count(), 1);
        assert_eq!(s.matches("class=\"black\"").count(), 1);
        assert!(s.starts_with("<?xml"));
    }

    #[test]
    fn depth_one_adds_six_images() {
        let t = Tiling::new(8).unwrap();
        let o = orbit(&t, 1);
        assert_eq!(o.len(), 7);
        for e in &o {
            assert!(t.preserves_color(&e.matrix).unwrap());
        }
    }

    #[test]
    fn deterministic_and_rejects_small_k() {
        assert_eq!(tessellation_svg(5, 2, false).unwrap(), tessellation_svg(5, 2, false).unwrap());
        assert!(tessellation_svg(3, 1, true).is_err());
    }
}

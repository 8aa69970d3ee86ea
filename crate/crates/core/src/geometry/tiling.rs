//! The tessellation by copies of the triangle OPQ.
//!
//! OPQ has all angles π/k when n = 2k, so it is a fundamental triangle for
//! the reflection group in its sides; the rotations Ā, B̄, ĀB̄ by 2α
//! generate the orientation-preserving half. Points are moved back to the
//! base triangle by crossing walls, two at a time, and every pair of
//! crossings is one of the six generators A^±1, B^±1, (AB)^±1.

use serde::Serialize;

use super::disk::{hyp_distance, reflect, side_of, C64};
use super::model::DiskModel;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Generator letters: ±1 = A^±1, ±2 = B^±1, ±3 = (AB)^±1.
pub const LETTERS: [i32; 6] = [1, -1, 2, -2, 3, -3];

const SIDES: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];
/// Index of the side PQ, the diagonal of the base rhombus.
pub const DIAGONAL: usize = 1;
const MAX_STEPS: usize = 100_000;

#[derive(Clone, Debug)]
pub struct Tiling {
    model: DiskModel,
    vertices: [C64; 3],
    base: C64,
    base_side: [f64; 3],
    exact: [Matrix<Cyclotomic>; 6],
    float: [Matrix<C64>; 6],
    pairs: [[i32; 3]; 3],
}

/// One wall crossing pair applied on the left.
#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub letter: i32,
    /// Distance from the current image of the base point to the base point,
    /// before the step.
    pub distance: f64,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    /// Letters g₁, g₂, … with residual = ⋯ g₂ g₁ M.
    pub steps: Vec<Step>,
    /// Last unpaired wall, when an odd number of walls separated the image.
    pub odd_wall: Option<usize>,
    pub residual: Matrix<Cyclotomic>,
    /// Image of the base point under the residual (and the odd wall).
    pub end_point: C64,
    /// Image of O under the same map.
    pub end_origin: C64,
}

impl Tiling {
    /// The tiling for even n = 2k with k ≥ 4.
    pub fn new(n: u32) -> Result<Self> {
        if n % 2 != 0 || n < 8 {
            return Err(Error::InvalidArgument(format!(
                "the tessellation needs n = 2k with k ≥ 4, got n = {n}"
            )));
        }
        let model = DiskModel::new(n)?;
        let tri = model.triangle()?;
        let vertices = tri.vertices.map(|p| p.z);
        let base = tri.barycenter();
        let base_side = SIDES.map(|(u, v)| side_of(vertices[u], vertices[v], base).signum());
        let q = model.root().clone();
        let w = |l: &[i32]| crate::burau::eval_minus_q(&crate::braid::BraidWord::b3(l), &q);
        let a = w(&[1, 1])?;
        let b = w(&[2, 2])?;
        let ab = a.matmul(&b);
        let inv = |m: &Matrix<Cyclotomic>| m.inverse().ok_or(Error::DivisionByZero);
        let exact = [a.clone(), inv(&a)?, b.clone(), inv(&b)?, ab.clone(), inv(&ab)?];
        let float = exact.clone().map(|m| model.conjugate_float(&m.map(|x| x.embed(1).expect("order n"))));
        let mut t = Tiling { model, vertices, base, base_side, exact, float, pairs: [[0; 3]; 3] };
        t.pairs = t.pair_table()?;
        Ok(t)
    }

    pub fn model(&self) -> &DiskModel {
        &self.model
    }

    pub fn vertices(&self) -> [C64; 3] {
        self.vertices
    }

    pub fn base(&self) -> C64 {
        self.base
    }

    pub fn reflect_side(&self, s: usize, z: C64) -> C64 {
        let (u, v) = SIDES[s];
        reflect(self.vertices[u], self.vertices[v], z)
    }

    fn slot(letter: i32) -> usize {
        LETTERS.iter().position(|&l| l == letter).expect("generator letter")
    }

    pub fn letter_exact(&self, letter: i32) -> &Matrix<Cyclotomic> {
        &self.exact[Self::slot(letter)]
    }

    pub fn letter_float(&self, letter: i32) -> &Matrix<C64> {
        &self.float[Self::slot(letter)]
    }

    /// Reflection in s₁ followed by reflection in s₂, as a generator.
    fn pair_table(&self) -> Result<[[i32; 3]; 3]> {
        let probes = [self.base, C64::new(0.05, -0.02)];
        let mut table = [[0; 3]; 3];
        for s1 in 0..3 {
            for s2 in 0..3 {
                if s1 == s2 {
                    continue;
                }
                let images: Vec<C64> =
                    probes.iter().map(|&z| self.reflect_side(s2, self.reflect_side(s1, z))).collect();
                let found = LETTERS.iter().copied().find(|&l| {
                    probes.iter().zip(&images).all(|(&z, &w)| (moebius(self.letter_float(l), z) - w).norm() < 1e-8)
                });
                table[s1][s2] = found.ok_or_else(|| Error::Degenerate("wall pair is not a generator".into()))?;
            }
        }
        Ok(table)
    }

    /// A wall of the base triangle separating z from the base point.
    pub fn separating_wall(&self, z: C64) -> Option<usize> {
        (0..3).find(|&s| {
            let (u, v) = SIDES[s];
            side_of(self.vertices[u], self.vertices[v], z) * self.base_side[s] < 0.0
        })
    }

    /// Walls crossed while walking z back into the base triangle.
    pub fn walk(&self, mut z: C64) -> Result<(Vec<usize>, C64)> {
        let mut walls = vec![];
        while let Some(s) = self.separating_wall(z) {
            if walls.len() >= MAX_STEPS {
                return Err(Error::Degenerate("wall walk did not terminate".into()));
            }
            z = self.reflect_side(s, z);
            walls.push(s);
        }
        Ok((walls, z))
    }

    /// Image of z under an exact Burau-frame matrix, without the U(1,1)
    /// check so that long words stay usable.
    pub fn apply_exact(&self, m: &Matrix<Cyclotomic>, z: C64) -> C64 {
        let f = self.model.conjugate_float(&m.map(|x| x.embed(1).expect("order n")));
        moebius(&f, z)
    }

    /// Multiply M on the left by generators until the base point comes back
    /// to the base triangle. Floating point picks the walls; the matrices are
    /// exact throughout.
    pub fn reduce(&self, m: &Matrix<Cyclotomic>) -> Result<Reduction> {
        let mut residual = m.clone();
        let mut steps = vec![];
        loop {
            if steps.len() >= MAX_STEPS {
                return Err(Error::Degenerate("reduction did not terminate".into()));
            }
            let x = self.apply_exact(&residual, self.base);
            let origin = self.apply_exact(&residual, C64::new(0.0, 0.0));
            let Some(s1) = self.separating_wall(x) else {
                return Ok(Reduction { steps, odd_wall: None, residual, end_point: x, end_origin: origin });
            };
            let x1 = self.reflect_side(s1, x);
            let Some(s2) = self.separating_wall(x1) else {
                let o1 = self.reflect_side(s1, origin);
                return Ok(Reduction { steps, odd_wall: Some(s1), residual, end_point: x1, end_origin: o1 });
            };
            let letter = self.pairs[s1][s2];
            steps.push(Step { letter, distance: hyp_distance(x, self.base) });
            residual = self.letter_exact(letter).matmul(&residual);
        }
    }

    /// Whether a float isometry maps the base triangle to a white triangle,
    /// judged by the parity of the wall walk of the base point.
    pub fn preserves_color(&self, m: &Matrix<C64>) -> Result<bool> {
        let (walls, end) = self.walk(moebius(m, self.base))?;
        Ok(walls.len() % 2 == 0 && (end - self.base).norm() < 1e-6)
    }
}

pub fn moebius(m: &Matrix<C64>, z: C64) -> C64 {
    (m.get(0, 0) * z + m.get(0, 1)) / (m.get(1, 0) * z + m.get(1, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_table_is_complete() {
        let t = Tiling::new(8).unwrap();
        let mut seen: Vec<i32> = t.pairs.iter().flatten().copied().filter(|&l| l != 0).collect();
        seen.sort();
        assert_eq!(seen, vec![-3, -2, -1, 1, 2, 3]);
    }

    #[test]
    fn generators_return_in_one_step() {
        let t = Tiling::new(10).unwrap();
        for l in LETTERS {
            let r = t.reduce(t.letter_exact(l)).unwrap();
            assert_eq!(r.steps.len(), 1, "letter {l}");
            assert_eq!(r.steps[0].letter, -l);
            assert!(r.residual.is_projective_identity());
        }
    }

    #[test]
    fn rejects_odd_and_small() {
        assert!(Tiling::new(7).is_err());
        assert!(Tiling::new(6).is_err());
    }
}

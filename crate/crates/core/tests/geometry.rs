use std::f64::consts::PI;

use braid_image::geometry::{hyp_distance, DiskModel, DiskPoint, IsometryClass, Tiling};
use braid_image::matrix::Matrix;
use num_complex::Complex;
use proptest::prelude::*;

const NS: [u32; 7] = [8, 10, 12, 14, 16, 20, 24];

#[test]
fn fixed_points_match_closed_forms() {
    for n in NS {
        let m = DiskModel::new(n).unwrap();
        let g = m.generators().unwrap();
        let p = g.b.fixed_point().unwrap().z;
        let q = g.ab.fixed_point().unwrap().z;
        assert!((p - m.p_closed()).norm() < 1e-10, "n={n}");
        assert!((q - m.q_closed()).norm() < 1e-10, "n={n}");
        assert!((q - m.q() * p).norm() < 1e-10);
        assert!((p.norm() - m.p_modulus_closed()).abs() < 1e-10);
    }
}

#[test]
fn rotation_angles() {
    for n in NS {
        let m = DiskModel::new(n).unwrap();
        let al = m.alpha();
        let g = m.generators().unwrap();
        let ra = g.a.rotation().unwrap();
        assert!((ra.angle - 2.0 * al).abs() < 1e-10);
        assert_eq!(ra.orientation, 1);
        assert!((g.b.rotation().unwrap().angle - 2.0 * al).abs() < 1e-10);
        assert_eq!(g.b.rotation().unwrap().orientation, 1);
        let rab = g.ab.rotation().unwrap();
        assert!((rab.angle - 2.0 * al).abs() < 1e-10);
        // the orientation of ĀB̄ comes out clockwise
        assert_eq!(rab.orientation, -1);
        let rd = g.d.rotation().unwrap();
        assert!((rd.angle - al).abs() < 1e-10);
        assert_eq!(rd.orientation, 1);
        assert!((rd.center.z - g.b.fixed_point().unwrap().z).norm() < 1e-10);
    }
}

#[test]
fn d_bar_sends_q_to_origin() {
    for n in NS {
        let m = DiskModel::new(n).unwrap();
        let g = m.generators().unwrap();
        let q = g.ab.fixed_point().unwrap();
        assert!(g.d.apply(q).unwrap().z.norm() < 1e-10);
    }
}

#[test]
fn triangle_is_equilateral() {
    for n in NS {
        let m = DiskModel::new(n).unwrap();
        let t = m.triangle().unwrap();
        assert_eq!(t.vertices[0].z, Complex::new(0.0, 0.0));
        for i in 0..3 {
            assert!((t.sides[i] - t.sides[0]).abs() < 1e-10, "n={n}");
            assert!((t.angles[i] - m.alpha()).abs() < 1e-10, "n={n}");
        }
        assert!(t.angle_sum() < PI);
        // vertices are equidistant from the barycenter
        let c = t.barycenter();
        let dists: Vec<f64> = t.vertices.iter().map(|v| hyp_distance(v.z, c)).collect();
        assert!((dists[0] - dists[1]).abs() < 1e-9 && (dists[1] - dists[2]).abs() < 1e-9);
    }
}

#[test]
fn generators_are_elliptic() {
    let m = DiskModel::new(12).unwrap();
    let g = m.generators().unwrap();
    for i in [&g.a, &g.b, &g.d, &g.ab] {
        assert_eq!(i.classify(), IsometryClass::Elliptic);
    }
}

#[test]
fn coloring_preserved_to_depth_four() {
    for k in [4, 5] {
        let t = Tiling::new(2 * k).unwrap();
        for e in braid_image::geometry::orbit(&t, 4) {
            assert!(t.preserves_color(&e.matrix).unwrap(), "k={k} word {:?}", e.word);
        }
    }
}

#[test]
fn svg_depth_one_orbit() {
    // orbit oracle: the six generators move the base rhombus to six
    // distinct places, all different from the base
    let t = Tiling::new(8).unwrap();
    let base = t.base();
    let mut pts = vec![base];
    for l in braid_image::geometry::LETTERS {
        pts.push(braid_image::geometry::moebius(t.letter_float(l), base));
    }
    for i in 0..pts.len() {
        for j in 0..i {
            assert!((pts[i] - pts[j]).norm() > 1e-6);
        }
    }
    let svg = braid_image::geometry::tessellation_svg(4, 1, true).unwrap();
    assert_eq!(svg.matches("class=\"white\"").count(), 7);
    assert_eq!(svg.matches("class=\"black\"").count(), 7);
}

fn disk_point() -> impl Strategy<Value = DiskPoint> {
    (0.0f64..0.95, 0.0f64..(2.0 * PI)).prop_map(|(r, t)| DiskPoint::new(Complex::from_polar(r, t)).unwrap())
}

proptest! {
    #[test]
    fn a_bar_preserves_distance(z in disk_point(), w in disk_point()) {
        let m = DiskModel::new(8).unwrap();
        let g = m.generators().unwrap();
        let d0 = hyp_distance(z.z, w.z);
        let d1 = hyp_distance(g.a.apply(z).unwrap().z, g.a.apply(w).unwrap().z);
        let d2 = hyp_distance(g.b.apply(z).unwrap().z, g.b.apply(w).unwrap().z);
        prop_assert!((d0 - d1).abs() < 1e-10 * (1.0 + d0));
        prop_assert!((d0 - d2).abs() < 1e-9 * (1.0 + d0));
    }

    #[test]
    fn identity_fixes_points(z in disk_point()) {
        let id = braid_image::geometry::Isometry::new(Matrix::identity(2)).unwrap();
        prop_assert_eq!(id.apply(z).unwrap().z, z.z);
    }
}

use braid_image::braid::{pb3_rewrite, word_equal_b3, BraidWord};
use braid_image::burau::{
    axis_angle, classify_form, eval_generic, eval_minus_q, eval_word_float, jones_pair, so3_image, FormClass,
};
use braid_image::laurent::LaurentPoly;
use braid_image::quadratic::Quadratic;
use braid_image::{Cyclotomic, FloatMatrix, Matrix};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

type C64 = Complex<f64>;

const ORDERS: [u32; 12] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 24];

fn cyclotomic(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-5i64..=5, 1i64..=3), n as usize).prop_map(move |cs| {
        let coeffs: Vec<BigRational> = cs.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect();
        Cyclotomic::from_coeffs(n, &coeffs).unwrap()
    })
}

fn pair() -> impl Strategy<Value = (Cyclotomic, Cyclotomic)> {
    prop::sample::select(&ORDERS[..])
        .prop_flat_map(|n| (cyclotomic(n), cyclotomic(n), 0..3u8))
        .prop_map(|(a, b, mode)| match mode {
            // same value reached by a different route
            0 => {
                let b2 = if b.is_zero() { Cyclotomic::from_int(7) } else { b };
                let via = &(&a * &b2) * &b2.inv().unwrap();
                (a, via)
            }
            // through ℚ(ζ_2n): ζ_2n² ζ_n⁻¹ = 1
            1 => {
                let n = a.order().max(1);
                let detour = &Cyclotomic::root(2 * n, 2).unwrap() * &Cyclotomic::root(n, -1).unwrap();
                (a.clone(), &a * &detour)
            }
            _ => (a, b),
        })
}

fn coprime_exponent(n: u32) -> impl Strategy<Value = i64> {
    let n = i64::from(n);
    (1..=n).prop_filter("coprime", move |s| s.gcd(&n) == 1)
}

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn canonical_forms_are_unique((a, b) in pair()) {
        prop_assert_eq!((&a - &b).is_zero(), a.key() == b.key());
    }
}

proptest! {
    #[test]
    fn embedding_is_a_ring_homomorphism(
        (n, a, b, s) in (2u32..=48).prop_flat_map(|n| (Just(n), cyclotomic(n), cyclotomic(n), coprime_exponent(n)))
    ) {
        let (ea, eb) = (a.embed(s).unwrap(), b.embed(s).unwrap());
        prop_assert!(close((&a * &b).embed(s).unwrap(), ea * eb, 1e-12), "n={}", n);
        prop_assert!(close((&a + &b).embed(s).unwrap(), ea + eb, 1e-12));
        let g = (&a * &b).galois(s).unwrap();
        prop_assert_eq!(g, &a.galois(s).unwrap() * &b.galois(s).unwrap());
    }

    #[test]
    fn laurent_evaluation_commutes_with_arithmetic(
        p in prop::collection::vec((-4i64..=4, -6i32..=6), 0..6),
        r in prop::collection::vec((-4i64..=4, -6i32..=6), 0..6),
        n in 1u32..=30,
        m in 1i64..30,
    ) {
        prop_assume!(m.gcd(&i64::from(n)) == 1);
        let poly = |ts: &[(i64, i32)]| ts.iter().fold(LaurentPoly::zero(), |acc, &(c, e)| acc + LaurentPoly::monomial(c, e));
        let (p, r) = (poly(&p), poly(&r));
        let t = Cyclotomic::root(n, m).unwrap();
        prop_assert_eq!((p.clone() * r.clone()).eval(&t), &p.eval(&t) * &r.eval(&t));
        prop_assert_eq!((p.clone() + r.clone()).eval(&t), &p.eval(&t) + &r.eval(&t));
    }
}

fn b3_word(max: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2]), 0..=max).prop_map(|l| BraidWord::b3(&l))
}

/// Splice a random relator of B₃ into w.
fn disguise(w: &BraidWord, at: usize, which: u8) -> BraidWord {
    let rel: &[i32] = match which % 3 {
        0 => &[1, 2, 1, -2, -1, -2],
        1 => &[2, -2],
        _ => &[-1, -2, -1, 2, 1, 2],
    };
    let l = w.letters();
    let at = at.min(l.len());
    let mut out = l[..at].to_vec();
    out.extend_from_slice(rel);
    out.extend_from_slice(&l[at..]);
    BraidWord::b3(&out)
}

/// A word for the inverse of each permutation, to make words pure.
fn purify(w: &BraidWord) -> BraidWord {
    for tail in [&[][..], &[1], &[2], &[1, 2], &[2, 1], &[1, 2, 1]] {
        let c = w.concat(&BraidWord::b3(tail));
        if c.is_pure() {
            return c;
        }
    }
    unreachable!("S3 has six elements")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn braid_equality_is_a_congruence(
        u in b3_word(8), w in b3_word(6), at in 0usize..10, which in 0u8..3, other in b3_word(8),
    ) {
        let v = disguise(&u, at, which);
        prop_assert!(word_equal_b3(&u, &u).unwrap());
        prop_assert!(word_equal_b3(&u, &v).unwrap());
        prop_assert!(word_equal_b3(&v, &u).unwrap());
        prop_assert_eq!(word_equal_b3(&u, &other).unwrap(), word_equal_b3(&other, &u).unwrap());
        prop_assert!(word_equal_b3(&u.concat(&w), &v.concat(&w)).unwrap());
        prop_assert!(word_equal_b3(&w.concat(&u), &w.concat(&v)).unwrap());
        if word_equal_b3(&u, &other).unwrap() {
            prop_assert!(word_equal_b3(&v, &other).unwrap());
        }
    }

    #[test]
    fn burau_is_a_homomorphism(
        u in b3_word(12), v in b3_word(12),
        (n, m) in prop::sample::select(vec![5u32, 7, 8, 9, 10, 12, 14, 18, 24]).prop_flat_map(|n| (Just(n), coprime_exponent(n))),
    ) {
        let q = Cyclotomic::root(n, m).unwrap();
        let uv = eval_minus_q(&u.concat(&v), &q).unwrap();
        prop_assert_eq!(uv, eval_minus_q(&u, &q).unwrap().matmul(&eval_minus_q(&v, &q).unwrap()));
    }
}

proptest! {
    #[test]
    fn pure_rewrite_recomposes(u in b3_word(17)) {
        let w = purify(&u);
        prop_assert!(w.len() <= 20);
        let d = pb3_rewrite(&w).unwrap();
        prop_assert!(word_equal_b3(&d.to_braid(), &w).unwrap());
    }
}

#[test]
fn generic_braid_relation() {
    assert_eq!(eval_generic(&BraidWord::b3(&[1, 2, 1])), eval_generic(&BraidWord::b3(&[2, 1, 2])));
    let four = BraidWord::new(4, vec![2, 3, 2]).unwrap();
    assert_eq!(eval_generic(&four), eval_generic(&BraidWord::new(4, vec![3, 2, 3]).unwrap()));
}

#[test]
fn temperley_lieb_relations_at_every_root() {
    for n in 4..=48u32 {
        for m in (1..i64::from(n)).filter(|m| m.gcd(&i64::from(n)) == 1) {
            let q = Cyclotomic::root(n, m).unwrap();
            let pair = jones_pair(&q).unwrap();
            let qq = Quadratic::from_base(q);
            for d in pair.tl_defects(&qq) {
                assert!(d.entries().iter().all(Zero::is_zero), "n={n} m={m}");
            }
        }
    }
}

fn unitary() -> impl Strategy<Value = FloatMatrix> {
    (prop::array::uniform4(-1.0f64..1.0), 0.0f64..std::f64::consts::TAU)
        .prop_filter("nonzero", |(v, _)| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)
        .prop_map(|(v, phase)| {
            let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            let [w, x, y, z] = v.map(|c| c / n);
            let e = C64::from_polar(1.0, phase);
            Matrix::m2(C64::new(w, x) * e, C64::new(y, z) * e, C64::new(-y, z) * e, C64::new(w, -x) * e)
        })
}

fn rot_mul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let mut c = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn rot_apply(r: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    [0, 1, 2].map(|i| (0..3).map(|k| r[i][k] * v[k]).sum())
}

proptest! {
    #[test]
    fn so3_image_is_a_homomorphism(u in unitary(), v in unitary()) {
        let ru = so3_image(&u).unwrap();
        let rv = so3_image(&v).unwrap();
        let ruv = so3_image(&u.matmul(&v)).unwrap();
        let prod = rot_mul(&ru, &rv);
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((ruv[i][j] - prod[i][j]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn conjugation_moves_the_axis(g in unitary(), m in unitary()) {
        let aa = axis_angle(&m).unwrap();
        prop_assume!(aa.angle > 1e-3 && aa.angle < std::f64::consts::TAU - 1e-3);
        let gi = g.inverse().unwrap();
        let conj = axis_angle(&g.matmul(&m).matmul(&gi)).unwrap();
        prop_assert!((conj.angle - aa.angle).abs() < 1e-9);
        let want = rot_apply(&so3_image(&g).unwrap(), aa.axis);
        for i in 0..3 {
            prop_assert!((conj.axis[i] - want[i]).abs() < 1e-8, "{:?} vs {:?}", conj.axis, want);
        }
    }
}

/// Determinant sign of the Hermitian form H with ρ(g)†Hρ(g) = H for both
/// generators, found as the null vector of the linear system in the four
/// real parameters of H.
fn invariant_form_det(alpha: f64) -> f64 {
    let t = -C64::from_polar(1.0, alpha);
    let gens = [eval_word_float(&BraidWord::b3(&[1]), t), eval_word_float(&BraidWord::b3(&[2]), t)];
    let basis = [
        [[1.0, 0.0], [0.0, 0.0]].map(|r| r.map(|x| C64::new(x, 0.0))),
        [[0.0, 1.0], [1.0, 0.0]].map(|r| r.map(|x| C64::new(x, 0.0))),
        [[C64::new(0.0, 0.0), C64::new(0.0, 1.0)], [C64::new(0.0, -1.0), C64::new(0.0, 0.0)]],
        [[0.0, 0.0], [0.0, 1.0]].map(|r| r.map(|x| C64::new(x, 0.0))),
    ];
    let mut rows = DMatrix::<f64>::zeros(16, 4);
    for (gi, g) in gens.iter().enumerate() {
        for (col, h) in basis.iter().enumerate() {
            for i in 0..2 {
                for j in 0..2 {
                    let mut s = C64::new(0.0, 0.0);
                    for k in 0..2 {
                        for l in 0..2 {
                            s += g.get(k, i).conj() * h[k][l] * g.get(l, j);
                        }
                    }
                    let d = s - h[i][j];
                    let r = gi * 8 + (i * 2 + j) * 2;
                    rows[(r, col)] = d.re;
                    rows[(r + 1, col)] = d.im;
                }
            }
        }
    }
    let svd = rows.svd(false, true);
    let vt = svd.v_t.unwrap();
    let (idx, _) = svd.singular_values.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).unwrap();
    let h = vt.row(idx);
    h[0] * h[3] - h[1] * h[1] - h[2] * h[2]
}

proptest! {
    #[test]
    fn classify_form_matches_the_form_signature(alpha in 0.0f64..std::f64::consts::TAU) {
        let third = std::f64::consts::PI / 3.0;
        let turns = [0.0, third, 5.0 * third, 6.0 * third];
        prop_assume!(turns.iter().all(|b| (alpha - b).abs() > 1e-3));
        let det = invariant_form_det(alpha);
        let want = if det > 0.0 { FormClass::PositiveDefiniteU2 } else { FormClass::IndefiniteU11 };
        prop_assert_eq!(classify_form(alpha).tag, want, "alpha={} det={}", alpha, det);
    }
}

#[test]
fn big_integer_coefficients_survive() {
    let big = BigRational::from_integer(BigInt::from(10).pow(40));
    let a = Cyclotomic::from_coeffs(5, &[big.clone(), big]).unwrap();
    let b = &a * &a.inv().unwrap();
    assert!(b.is_one());
}

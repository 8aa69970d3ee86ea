use braid_image::braid::{pb3_rewrite, word_equal_b3, BraidWord};
use braid_image::burau::{axis_angle, classify_root, eval_minus_q, jones_pair_float, so3_image};
use braid_image::free::{
    commutator_identity_check, h1_cert, magnus_depth, power_commutator, squier_witness, zeta_embed, ClassOrder,
    FreeWord,
};
use braid_image::geometry::{discreteness_predicate, tessellation_svg, transport, DiskModel, IsometryClass};
use braid_image::suite::{run_suite, SuiteName};
use braid_image::triangle::{
    finite_image_closure, gamma_presentation, image_presentation, iso_2_3_odd, member_delta_kkk, verify_gamma,
    verify_relations, Verdict,
};
use braid_image::{Cyclotomic, FloatMatrix};
use num_complex::Complex;
use num_integer::Integer;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{
    BraidCmd, BurauCmd, CliError, Format, FreeCmd, FreeWordArgs, GeomCmd, Output, RootArgs, SuiteArgs,
    Toggle, TriangleCmd,
};

type Res = Result<Output, CliError>;

fn ok<T: Serialize>(result: &T, exact_verified: bool, negative: bool) -> Res {
    Ok(Output::Json { result: serde_json::to_value(result)?, exact_verified, negative })
}

fn check_root(r: &RootArgs) -> Result<Cyclotomic, CliError> {
    if r.n < 2 {
        return Err(CliError::Input(format!("--n must be at least 2, got {}", r.n)));
    }
    if r.galois.gcd(&i64::from(r.n)) != 1 {
        return Err(CliError::Input(format!("--galois {} is not coprime to --n {}", r.galois, r.n)));
    }
    Ok(Cyclotomic::root(r.n, r.galois)?)
}

fn braid_word(s: &str, strands: usize) -> Result<BraidWord, CliError> {
    if strands < 2 {
        return Err(CliError::Input(format!("--strands must be at least 2, got {strands}")));
    }
    Ok(BraidWord::parse(s, strands)?)
}

fn float_json(m: &FloatMatrix) -> Value {
    let c = |z: &Complex<f64>| json!([z.re, z.im]);
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| c(m.get(i, j))).collect())).collect())
}

pub fn burau(cmd: &BurauCmd) -> Res {
    match cmd {
        BurauCmd::Eval(a) => {
            let q = check_root(&a.root)?;
            let w = braid_word(&a.word, a.strands)?;
            let m = eval_minus_q(&w, &q)?;
            let result = json!({
                "n": a.root.n,
                "galois": a.root.galois,
                "word": w.to_string(),
                "parameter": "t = -q",
                "matrix": m,
                "numeric": float_json(&m.to_complex()),
            });
            ok(&result, true, false)
        }
        BurauCmd::Classify(a) => {
            let q = check_root(a)?;
            let c = classify_root(&q);
            let result = json!({
                "n": a.n,
                "galois": a.galois,
                "class": c,
                "discrete_triangle_image": discreteness_predicate(a.galois, a.n),
            });
            ok(&result, c.exact, false)
        }
        BurauCmd::So3(a) => {
            check_root(&a.root)?;
            let w = braid_word(&a.word, 3)?;
            let alpha = std::f64::consts::TAU * a.root.galois as f64 / f64::from(a.root.n);
            let j = jones_pair_float(alpha)?;
            let m = j.eval(&w)?;
            let axes = [axis_angle(&j.g1)?.axis, axis_angle(&j.g2)?.axis];
            let dot: f64 = (0..3).map(|i| axes[0][i] * axes[1][i]).sum();
            let result = json!({
                "alpha": alpha,
                "word": w.to_string(),
                "jones": float_json(&m),
                "rotation": so3_image(&m)?,
                "axis_angle": axis_angle(&m)?,
                "generator_axes_line_angle": dot.abs().min(1.0).acos(),
                "formula_angle": (alpha.cos() / (1.0 + alpha.cos())).acos(),
            });
            ok(&result, false, false)
        }
    }
}

pub fn geom(cmd: &GeomCmd, format: Option<Format>) -> Res {
    match cmd {
        GeomCmd::Triangle(a) => {
            check_root(a)?;
            let model = DiskModel::new(a.n)?;
            let t = model.triangle()?;
            let result = json!({
                "n": a.n,
                "alpha": model.alpha(),
                "triangle": t,
                "angle_sum": t.angle_sum(),
                "p_modulus_closed_form": model.p_modulus_closed(),
            });
            ok(&result, false, false)
        }
        GeomCmd::Tessellate(a) => {
            let svg = tessellation_svg(a.k, a.depth, a.coloring == Toggle::On)?;
            match format {
                Some(Format::Json) => ok(&json!({ "k": a.k, "depth": a.depth, "svg": svg }), false, false),
                _ => Ok(Output::Svg(svg)),
            }
        }
        GeomCmd::Classify(a) => {
            let q = check_root(&a.root)?;
            let w = braid_word(&a.word, 3)?;
            let model = DiskModel::new(a.root.n)?;
            let m = transport(&eval_minus_q(&w, &q)?, a.root.n, a.root.galois)?;
            let iso = model.isometry(&m)?;
            let class = iso.classify();
            let rotation = if class == IsometryClass::Elliptic { Some(iso.rotation()?) } else { None };
            let result = json!({
                "n": a.root.n,
                "galois": a.root.galois,
                "word": w.to_string(),
                "class": class,
                "rotation": rotation,
                "disk_matrix": float_json(iso.matrix()),
            });
            ok(&result, false, false)
        }
    }
}

pub fn triangle(cmd: &TriangleCmd) -> Res {
    match cmd {
        TriangleCmd::Presentation(a) => {
            check_root(a)?;
            let image = image_presentation(a.n)?;
            let gamma = gamma_presentation(a.n).ok();
            let result = json!({
                "image": image,
                "gamma": gamma.as_ref().map(|g| json!({ "presentation": g, "relators": g.relator_strings(), "text": g.to_string() })),
            });
            ok(&result, true, false)
        }
        TriangleCmd::Verify(a) => {
            check_root(a)?;
            let report = verify_relations(a.n, a.galois)?;
            let gamma: Vec<Value> = verify_gamma(a.n, a.galois)
                .map(|v| v.into_iter().map(|(name, pass)| json!({ "name": name, "pass": pass })).collect())
                .unwrap_or_default();
            let all = report.all_pass && gamma.iter().all(|g| g["pass"] == json!(true));
            let result = json!({ "image": report, "gamma": gamma, "all_pass": all });
            ok(&result, true, !all)
        }
        TriangleCmd::Member(a) => {
            if a.k < 4 {
                return Err(CliError::Input(format!("--k must be at least 4, got {}", a.k)));
            }
            let q = Cyclotomic::root(2 * a.k, a.galois)?;
            let w = braid_word(&a.word, 3)?;
            let cert = member_delta_kkk(&eval_minus_q(&w, &q)?, a.k, a.galois)?;
            let negative = cert.verdict == Verdict::NonMember;
            ok(&cert, cert.exact_check, negative)
        }
        TriangleCmd::Closure(a) => {
            if a.n == 0 {
                return Err(CliError::Input("--n must be positive".into()));
            }
            let r = finite_image_closure(a.n, a.galois, a.bound)?;
            ok(&r, true, false)
        }
        TriangleCmd::Iso(a) => {
            let r = iso_2_3_odd(a.k)?;
            let negative = !r.all_pass;
            ok(&r, true, negative)
        }
    }
}

fn free_word(a: &FreeWordArgs) -> Result<FreeWord, CliError> {
    let rank = match a.rank {
        Some(r) if r >= 1 => r,
        Some(_) => return Err(CliError::Input("--rank must be positive".into())),
        None => {
            let w = FreeWord::parse(&a.word, 64)?;
            w.letters().iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(1).max(2)
        }
    };
    Ok(FreeWord::parse(&a.word, rank)?)
}

fn depth_json(d: Option<usize>) -> Value {
    d.map_or(Value::Null, |d| json!(d))
}

pub fn free(cmd: &FreeCmd) -> Res {
    match cmd {
        FreeCmd::Identity(a) => {
            let r = commutator_identity_check(a.d)?;
            let negative = !r.holds;
            ok(&r, true, negative)
        }
        FreeCmd::Witness(a) => {
            let w = squier_witness(a.k)?;
            let result = json!({
                "k": a.k,
                "normal_form": w,
                "text": w.to_string(),
                "syllables": w.syllables().len(),
                "nontrivial": !w.is_trivial(),
            });
            ok(&result, true, w.is_trivial())
        }
        FreeCmd::H1(a) => {
            if a.f == 0 {
                return Err(CliError::Input("--F must be positive".into()));
            }
            let c = h1_cert(a.d, &power_commutator(a.f))?;
            let negative = c.verdict_full != ClassOrder::Infinite;
            ok(&c, true, negative)
        }
        FreeCmd::Depth(a) => {
            let w = free_word(a)?;
            let d = magnus_depth(&w, a.depth)?;
            let result = json!({ "word": w.to_string(), "rank": w.rank(), "dmax": a.depth, "depth": depth_json(d) });
            ok(&result, true, false)
        }
        FreeCmd::Zeta(a) => {
            let w = free_word(a)?;
            let z = zeta_embed(&w);
            let (d0, d1) = (magnus_depth(&w, a.depth)?, magnus_depth(&z, a.depth)?);
            let result = json!({
                "word": w.to_string(),
                "image": z.to_string(),
                "image_letters": z,
                "dmax": a.depth,
                "depth": depth_json(d0),
                "image_depth": depth_json(d1),
            });
            ok(&result, true, false)
        }
    }
}

pub fn braid(cmd: &BraidCmd) -> Res {
    match cmd {
        BraidCmd::Equal(a) => {
            let [u, v] = a.word.as_slice() else {
                return Err(CliError::Input(format!("'braid equal' needs exactly two --word flags, got {}", a.word.len())));
            };
            let (u, v) = (braid_word(u, 3)?, braid_word(v, 3)?);
            let equal = word_equal_b3(&u, &v)?;
            ok(&json!({ "left": u.to_string(), "right": v.to_string(), "equal": equal }), true, !equal)
        }
        BraidCmd::Rewrite(a) => {
            let w = braid_word(&a.word, 3)?;
            let d = pb3_rewrite(&w)?;
            let result = json!({
                "word": w.to_string(),
                "free": d.free.display_with(&["A", "B"]),
                "free_letters": d.free,
                "center_power": d.center,
            });
            ok(&result, true, false)
        }
    }
}

pub fn suite(a: &SuiteArgs) -> Res {
    let name: SuiteName = a.name.parse()?;
    let report = run_suite(name);
    let exact = name != SuiteName::Geometry;
    ok(&report, exact && report.all_pass, !report.all_pass)
}

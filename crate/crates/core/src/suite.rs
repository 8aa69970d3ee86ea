//! Batch drivers that run a named battery of checks and report each item.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free::{
    commutator_identity_check, h1_cert, longitudes, magnus_depth, power_commutator, squier_witness, zeta_embed,
    ClassOrder, FreeWord,
};
use crate::geometry::DiskModel;
use crate::triangle::verify_relations;

const GEOMETRY_NS: [u32; 7] = [8, 10, 12, 14, 16, 20, 24];
const GEOMETRY_TOL: f64 = 1e-10;
const MAGNUS_DMAX: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    TheoremB3,
    Geometry,
    Squier,
    Johnson,
    H1,
}

impl SuiteName {
    pub const ALL: [SuiteName; 5] =
        [SuiteName::TheoremB3, SuiteName::Geometry, SuiteName::Squier, SuiteName::Johnson, SuiteName::H1];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::TheoremB3 => "theorem-b3",
            SuiteName::Geometry => "geometry",
            SuiteName::Squier => "squier",
            SuiteName::Johnson => "johnson",
            SuiteName::H1 => "h1",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteItem {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteItem {
    fn new(name: impl Into<String>, pass: bool) -> Self {
        SuiteItem { name: name.into(), pass, detail: None }
    }

    fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    fn error(name: impl Into<String>, e: Error) -> Self {
        SuiteItem::new(name, false).detail(e.to_string())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub items: Vec<SuiteItem>,
    pub passed: usize,
    pub failed: usize,
    pub all_pass: bool,
}

impl SuiteReport {
    fn new(suite: SuiteName, items: Vec<SuiteItem>) -> Self {
        let passed = items.iter().filter(|i| i.pass).count();
        let failed = items.len() - passed;
        SuiteReport { suite, items, passed, failed, all_pass: failed == 0 }
    }
}

pub fn run_suite(name: SuiteName) -> SuiteReport {
    let items = match name {
        SuiteName::TheoremB3 => theorem_b3(),
        SuiteName::Geometry => geometry(),
        SuiteName::Squier => squier(),
        SuiteName::Johnson => johnson(),
        SuiteName::H1 => h1(),
    };
    SuiteReport::new(name, items)
}

fn theorem_b3() -> Vec<SuiteItem> {
    let mut items = vec![];
    for n in 4..=24u32 {
        for m in (1..i64::from(n)).filter(|m| m.gcd(&i64::from(n)) == 1) {
            let name = format!("n={n} m={m}");
            items.push(match verify_relations(n, m) {
                Ok(r) => {
                    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
                    let item = SuiteItem::new(name, r.all_pass);
                    if failed.is_empty() {
                        item
                    } else {
                        item.detail(failed.join(", "))
                    }
                }
                Err(e) => SuiteItem::error(name, e),
            });
        }
    }
    items
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() < GEOMETRY_TOL
}

fn geometry_at(n: u32) -> Result<Vec<SuiteItem>> {
    let m = DiskModel::new(n)?;
    let al = m.alpha();
    let g = m.generators()?;
    let p = g.b.fixed_point()?.z;
    let q = g.ab.fixed_point()?.z;
    let tri = m.triangle()?;
    // the radicand is ≤ 0 for these α; its absolute value is |1 − q + q²|
    let modulus = (1.0 + 2.0 * (al + std::f64::consts::PI).cos()).abs().sqrt();
    let mut items = vec![
        SuiteItem::new(format!("n={n} |P|"), close(p.norm(), modulus)),
        SuiteItem::new(format!("n={n} P closed form"), (p - m.p_closed()).norm() < GEOMETRY_TOL),
        SuiteItem::new(format!("n={n} Q closed form"), (q - m.q_closed()).norm() < GEOMETRY_TOL),
        SuiteItem::new(
            format!("n={n} equilateral"),
            tri.sides.iter().all(|&s| close(s, tri.sides[0])) && tri.angles.iter().all(|&a| close(a, al)),
        ),
    ];
    for (label, iso, want) in [("A", &g.a, 2.0 * al), ("B", &g.b, 2.0 * al), ("AB", &g.ab, 2.0 * al), ("D", &g.d, al)] {
        let r = iso.rotation()?;
        items.push(
            SuiteItem::new(format!("n={n} rotation {label}"), close(r.angle, want))
                .detail(format!("angle {:.12} orientation {}", r.angle, r.orientation)),
        );
    }
    let dq = g.d.apply(g.ab.fixed_point()?)?.z.norm();
    items.push(SuiteItem::new(format!("n={n} D(Q)=0"), dq < GEOMETRY_TOL));
    Ok(items)
}

fn geometry() -> Vec<SuiteItem> {
    GEOMETRY_NS
        .into_iter()
        .flat_map(|n| geometry_at(n).unwrap_or_else(|e| vec![SuiteItem::error(format!("n={n}"), e)]))
        .collect()
}

fn squier() -> Vec<SuiteItem> {
    let mut items = vec![];
    for k in 2..=64u32 {
        items.push(match squier_witness(k) {
            Ok(w) => SuiteItem::new(format!("witness k={k}"), !w.is_trivial() && w.is_normal())
                .detail(format!("{} syllables", w.syllables().len())),
            Err(e) => SuiteItem::error(format!("witness k={k}"), e),
        });
    }
    for d in 2..=64u32 {
        items.push(match commutator_identity_check(d) {
            Ok(r) => SuiteItem::new(format!("identity D={d}"), r.holds),
            Err(e) => SuiteItem::error(format!("identity D={d}"), e),
        });
    }
    items
}

fn depth_str(d: Option<usize>) -> String {
    d.map_or_else(|| format!(">{MAGNUS_DMAX}"), |d| d.to_string())
}

fn johnson() -> Vec<SuiteItem> {
    let mut items = vec![];
    let d11 = BraidWord::b3(&[1, 1, 2, 2, -1, -1, -2, -2]);
    match longitudes(&d11) {
        Ok(ls) => {
            for (i, l) in ls.iter().enumerate() {
                let name = format!("longitude l{} of [g1^2,g2^2]", i + 1);
                items.push(match magnus_depth(l, MAGNUS_DMAX) {
                    Ok(d) => SuiteItem::new(name, d.map_or(true, |d| d >= 2)).detail(format!("depth {}", depth_str(d))),
                    Err(e) => SuiteItem::error(name, e),
                });
            }
        }
        Err(e) => items.push(SuiteItem::error("longitudes of [g1^2,g2^2]", e)),
    }
    let x1 = FreeWord::generator(2, 1);
    let x2 = FreeWord::generator(2, 2);
    let c = FreeWord::commutator(&x1, &x2);
    let cc = FreeWord::commutator(&c, &x1);
    for (name, w, depth) in [("x1", x1, 1), ("[x1,x2]", c, 2), ("[[x1,x2],x1]", cc, 3)] {
        let label = format!("zeta doubles {name}");
        let res = magnus_depth(&w, MAGNUS_DMAX).and_then(|d0| Ok((d0, magnus_depth(&zeta_embed(&w), MAGNUS_DMAX)?)));
        items.push(match res {
            Ok((d0, d1)) => SuiteItem::new(label, d0 == Some(depth) && d1.map_or(true, |d| d >= 2 * depth))
                .detail(format!("depth {} -> {}", depth_str(d0), depth_str(d1))),
            Err(e) => SuiteItem::error(label, e),
        });
    }
    items
}

fn h1() -> Vec<SuiteItem> {
    let mut items = vec![];
    for d in [4u32, 6, 8, 10, 12] {
        for f in (1..d).filter(|f| d % f == 0) {
            let name = format!("D={d} F={f}");
            items.push(match h1_cert(d, &power_commutator(f)) {
                Ok(c) => SuiteItem::new(name, c.verdict == ClassOrder::Infinite && c.verdict_full == ClassOrder::Infinite)
                    .detail(format!("free rank {}", c.free_rank)),
                Err(e) => SuiteItem::error(name, e),
            });
        }
    }
    items
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for n in SuiteName::ALL {
            assert_eq!(n.as_str().parse::<SuiteName>().unwrap(), n);
        }
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for n in [SuiteName::Squier, SuiteName::H1, SuiteName::Johnson, SuiteName::Geometry] {
            let r = run_suite(n);
            assert!(r.all_pass, "{n}: {:?}", r.items.iter().filter(|i| !i.pass).collect::<Vec<_>>());
        }
    }
}

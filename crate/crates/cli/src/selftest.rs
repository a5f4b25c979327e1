//! Quick property suite over fixed germs and seeded random stratified data.

use std::fmt::Write as _;

use serde::Serialize;

use eulerob_core::behrend::{
    dt_invariant, intersection_with_zero_section, isolated_fixed_point, kiem_li_localized, lagrangify, project,
    BehrendData, ConeComponent,
};
use eulerob_core::constructible::{
    eu_transform, inverse_transform, weighted_chi, weighted_chi_level_sets, ConstructibleFunction, EuMatrix,
    StratifiedSpace, StratumSpec,
};
use eulerob_core::euler::{eu_detailed, multiplicity_at};
use eulerob_core::nash::Options;
use eulerob_core::poly::{parse_affine, q};
use eulerob_core::sample::{all_cycles, all_poset_shapes, apply_matrix, change_coordinates, Sampler};
use eulerob_core::{Polynomial, Q};

use crate::commands::Output;

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct Report {
    kind: &'static str,
    seed: u64,
    checks: Vec<Check>,
    passed: bool,
}

type Outcome = Result<String, String>;

fn poly(s: &str, vars: &[&str]) -> Result<Polynomial, String> {
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    parse_affine(s, Some(&vars)).map_err(|e| e.to_string())
}

fn pt(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn eu_of(f: &Polynomial, p: &[Q], o: &Options) -> Result<i64, String> {
    eu_detailed(f, p, o).map(|r| r.eu).map_err(|e| format!("{f}: {e}"))
}

fn expect(got: i64, want: i64, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn germs(o: &Options) -> Outcome {
    let r = eu_detailed(&poly("y*u - x*v", &["x", "y", "u", "v"])?, &pt(&[0, 0, 0, 0]), o).map_err(|e| e.to_string())?;
    if r.segre.0 != [2, 2, 2, 0] {
        return Err(format!("conifold Segre vector {}", r.segre));
    }
    expect(r.eu, 2, "conifold")?;
    for (d, want) in [(2, 0), (3, -3)] {
        let f = poly(&format!("x^{d} + y^{d} + z^{d}"), &["x", "y", "z"])?;
        expect(eu_of(&f, &pt(&[0, 0, 0]), o)?, want, &format!("cone of degree {d}"))?;
    }
    expect(eu_of(&poly("y^2 - x^3", &["x", "y", "z"])?, &pt(&[0, 0, 5]), o)?, 2, "cusp times a line")?;
    Ok("conifold 2, cones 0 and -3, cusp times a line 2".into())
}

fn curves(o: &Options) -> Outcome {
    let list = ["y^2 - x^3", "x*y", "y^3 - x^4", "x^2*y - y^3", "y^2 - x^2 - x^3"];
    for s in list {
        let f = poly(s, &["x", "y"])?;
        let m = multiplicity_at(&f, &pt(&[0, 0])).map_err(|e| e.to_string())?;
        expect(eu_of(&f, &pt(&[0, 0]), o)?, i64::from(m), s)?;
    }
    Ok(format!("{} plane curves", list.len()))
}

fn smooth_and_additive(o: &Options) -> Outcome {
    for t in [1, -2, 3] {
        let f = poly("y^2 - x^3", &["x", "y"])?;
        expect(eu_of(&f, &pt(&[t * t, t * t * t]), o)?, 1, "smooth cusp point")?;
    }
    for (whole, parts) in [("x*y", ["x", "y"]), ("x*(y^2 - x^3)", ["x", "y^2 - x^3"])] {
        let mut sum = 0;
        for p in parts {
            sum += eu_of(&poly(p, &["x", "y"])?, &pt(&[0, 0]), o)?;
        }
        expect(eu_of(&poly(whole, &["x", "y"])?, &pt(&[0, 0]), o)?, sum, whole)?;
    }
    Ok("3 smooth points, 2 factor pairs".into())
}

fn invariance(o: &Options, seed: u64) -> Outcome {
    let f = poly("y^2 - x^3", &["x", "y"])?;
    let p = pt(&[0, 0]);
    let base = eu_detailed(&f, &p, o).map_err(|e| e.to_string())?;
    let mut s = Sampler::new(seed);
    for _ in 0..3 {
        let (a, inv) = s.unimodular(2);
        let g = change_coordinates(&f, &a).map_err(|e| e.to_string())?;
        let r = eu_detailed(&g, &apply_matrix(&inv, &p), o).map_err(|e| e.to_string())?;
        if r.segre != base.segre {
            return Err(format!("Segre vector {} after {a:?}", r.segre));
        }
    }
    let r = eu_detailed(&f.scale(&q(-3)), &p, o).map_err(|e| e.to_string())?;
    if r.segre != base.segre {
        return Err("scaling changed the Segre vector".into());
    }
    Ok("3 coordinate changes and a scaling".into())
}

fn constructible(seed: u64) -> Outcome {
    let mut s = Sampler::new(seed);
    let mut n = 0;
    for space in all_poset_shapes(3) {
        let m = s.eu_matrix(&space);
        for c in all_cycles(space.len(), 2) {
            let f = eu_transform(&space, &c, &m).map_err(|e| e.to_string())?;
            if inverse_transform(&space, &f, &m).map_err(|e| e.to_string())? != c {
                return Err(format!("round trip moved {c:?}"));
            }
            n += 1;
        }
    }
    for _ in 0..50 {
        let space = s.space(5, false);
        let f = ConstructibleFunction { values: (0..space.len()).map(|_| s.range(-3, 3)).collect() };
        let a = weighted_chi(&space, &f).map_err(|e| e.to_string())?;
        let b = weighted_chi_level_sets(&space, &f).map_err(|e| e.to_string())?;
        expect(a, b, "weighted chi formulas")?;
    }
    Ok(format!("{n} round trips, 50 chi comparisons"))
}

fn lagrangian(seed: u64) -> Outcome {
    let mut s = Sampler::new(seed);
    for _ in 0..50 {
        let space = s.space(5, false);
        let m = s.eu_matrix(&space);
        let c = s.cycle(&space, 4);
        let v = lagrangify(&space, &c);
        if project(&space, &v) != c {
            return Err(format!("project after lagrangify moved {c:?}"));
        }
        let lhs = intersection_with_zero_section(&space, &m, &v).map_err(|e| e.to_string())?;
        let f = eu_transform(&space, &c, &m).map_err(|e| e.to_string())?;
        expect(lhs, weighted_chi(&space, &f).map_err(|e| e.to_string())?, "key diagram")?;
    }
    Ok("50 random cycles".into())
}

fn behrend(seed: u64) -> Outcome {
    let mut s = Sampler::new(seed);
    for _ in 0..50 {
        let space = s.space(5, true);
        let m = s.eu_matrix(&space);
        let cone = s.cone(&space);
        let bd = BehrendData::new(space, m, cone).map_err(|e| e.to_string())?;
        let r = kiem_li_localized(&bd, &bd.space.fixed_mask()).map_err(|e| e.to_string())?;
        if !r.holds() {
            return Err(format!("{r:?}"));
        }
    }
    let space = StratifiedSpace::new(vec![
        StratumSpec::new("0", 0, 1, true, &[]),
        StratumSpec::new("C*", 1, 0, false, &["0"]),
    ])
    .map_err(|e| e.to_string())?;
    let m = EuMatrix::defaults(&space);
    let a1 = BehrendData::new(space, m, vec![ConeComponent::new("C*", 1, 1)]).map_err(|e| e.to_string())?;
    expect(dt_invariant(&a1).map_err(|e| e.to_string())?, -1, "affine line")?;
    for t in 0..4u32 {
        let bd = isolated_fixed_point(t).map_err(|e| e.to_string())?;
        let p = bd.space.index_of("P").map_err(|e| e.to_string())?;
        expect(bd.nu.values[p], if t % 2 == 0 { 1 } else { -1 }, "isolated fixed point")?;
    }
    Ok("50 equivariant spaces, affine line, isolated fixed points".into())
}

pub fn run(o: &Options) -> Output {
    let seed = o.seed;
    let suite: Vec<(&'static str, Outcome)> = vec![
        ("germs", germs(o)),
        ("curve-multiplicity", curves(o)),
        ("smooth-and-additive", smooth_and_additive(o)),
        ("invariance", invariance(o, seed)),
        ("constructible", constructible(seed)),
        ("lagrangian", lagrangian(seed)),
        ("behrend", behrend(seed)),
    ];
    let checks: Vec<Check> = suite
        .into_iter()
        .map(|(name, r)| match r {
            Ok(detail) => Check { name, passed: true, detail },
            Err(detail) => Check { name, passed: false, detail },
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &checks {
        let _ = writeln!(text, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    let failed: Vec<&str> = checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    let failure = (!passed).then(|| failed.join(", "));
    let report = Report { kind: "selftest", seed, checks, passed };
    Output { json: serde_json::to_value(&report).expect("reports serialize"), text, failure }
}

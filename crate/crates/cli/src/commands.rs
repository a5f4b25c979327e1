//! One function per job kind. Each returns the machine-readable report, a
//! text rendering, and whether a cross-check failed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use eulerob_core::behrend::{
    dt_invariant, intersection_with_zero_section, kiem_li_localized, lagrangify, mask_of, BehrendData,
};
use eulerob_core::constructible::{
    eu_transform, inverse_transform, weighted_chi, weighted_chi_level_sets, ConstructibleFunction, Cycle, EuMatrix,
    Provenance, StratifiedSpace,
};
use eulerob_core::euler::property_harness;
use eulerob_core::nash::{gauss_graph, segre_fiber_detailed, MultidegreeTable, Options};
use eulerob_core::poly::{parse_affine, parse_polynomial};
use eulerob_core::{Budget, Polynomial, Q};

use crate::doc::{by_name, ConePayload, PolyPayload, SpaceDoc};
use crate::error::CliError;

/// Seed and budget in effect for a job.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub seed: u64,
    pub budget: Option<u64>,
}

impl Settings {
    pub fn options(&self) -> Options {
        let budget = self.budget.map(Budget::with_steps).unwrap_or_default();
        Options { seed: self.seed, budget, ..Options::default() }
    }
}

pub struct Output {
    pub json: Value,
    pub text: String,
    pub failure: Option<String>,
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

#[derive(Serialize)]
struct TableEntry {
    exponents: Vec<usize>,
    degree: u64,
}

#[derive(Serialize)]
struct TableReport {
    blocks: Vec<String>,
    dimension: usize,
    entries: Vec<TableEntry>,
}

impl From<&MultidegreeTable> for TableReport {
    fn from(t: &MultidegreeTable) -> Self {
        TableReport {
            blocks: t.blocks.clone(),
            dimension: t.dimension,
            entries: t.entries.iter().map(|(k, v)| TableEntry { exponents: k.clone(), degree: *v }).collect(),
        }
    }
}

fn table_text(t: &MultidegreeTable) -> String {
    let mut s = String::new();
    for (k, v) in &t.entries {
        let k: Vec<String> = k.iter().map(|e| e.to_string()).collect();
        let _ = write!(s, " ({}):{v}", k.join(","));
    }
    s
}

struct Germ {
    f: Polynomial,
    point: Vec<Q>,
    factors: Option<Vec<Polynomial>>,
}

fn germ(p: &PolyPayload) -> Result<Germ, CliError> {
    let f = parse_affine(&p.poly, p.vars.as_deref())?;
    let mut point = Vec::with_capacity(p.point.len());
    for c in &p.point {
        let t = c.as_text();
        point.push(t.trim().parse::<Q>().map_err(|_| CliError::Schema(format!("`{t}` is not a rational number")))?);
    }
    let factors = match &p.factors {
        None => None,
        Some(list) => {
            Some(list.iter().map(|s| parse_polynomial(f.context(), s)).collect::<Result<Vec<_>, _>>()?)
        }
    };
    Ok(Germ { f, point, factors })
}

fn vars_of(f: &Polynomial) -> Vec<String> {
    f.context().var_names().to_vec()
}

fn point_text(p: &[Q]) -> Vec<String> {
    p.iter().map(|c| c.to_string()).collect()
}

#[derive(Serialize)]
struct CheckReport {
    name: String,
    expected: i64,
    got: i64,
    passed: bool,
}

#[derive(Serialize)]
struct EuReport {
    kind: &'static str,
    poly: String,
    vars: Vec<String>,
    point: Vec<String>,
    seed: u64,
    segre: Vec<i64>,
    multidegrees: TableReport,
    eu: i64,
    checks: Vec<CheckReport>,
}

pub fn eu(p: &PolyPayload, s: Settings) -> Result<Output, CliError> {
    let g = germ(p)?;
    let r = property_harness(&g.f, &g.point, g.factors.as_deref(), &s.options())?;
    let report = EuReport {
        kind: "eu",
        poly: g.f.to_string(),
        vars: vars_of(&g.f),
        point: point_text(&g.point),
        seed: s.seed,
        segre: r.segre.0.clone(),
        multidegrees: (&r.table).into(),
        eu: r.eu,
        checks: r
            .checks
            .iter()
            .map(|c| CheckReport { name: c.name.clone(), expected: c.expected, got: c.got, passed: c.passed() })
            .collect(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "f = {}  in ({})", report.poly, report.vars.join(", "));
    let _ = writeln!(text, "P = ({})", report.point.join(", "));
    let _ = writeln!(text, "Segre vector {}", r.segre);
    let _ = writeln!(text, "multidegrees {}:{}", r.table.blocks.join("|"), table_text(&r.table));
    let _ = writeln!(text, "eu = {}", r.eu);
    let mut failed = Vec::new();
    for c in &r.checks {
        let mark = if c.passed() { "ok  " } else { "FAIL" };
        let _ = writeln!(text, "{mark} {}: expected {}, got {}", c.name, c.expected, c.got);
        if !c.passed() {
            failed.push(c.name.clone());
        }
    }
    let failure = (!failed.is_empty()).then(|| failed.join(", "));
    Ok(Output { json: to_json(&report), text, failure })
}

#[derive(Serialize)]
struct SegreReport {
    kind: &'static str,
    poly: String,
    vars: Vec<String>,
    point: Vec<String>,
    seed: u64,
    segre: Vec<i64>,
    alternating_sum: i64,
    multidegrees: TableReport,
    fiber_ideal: Vec<String>,
}

pub fn segre(p: &PolyPayload, s: Settings) -> Result<Output, CliError> {
    if p.factors.is_some() {
        return Err(CliError::Schema("`factors` only applies to eu".into()));
    }
    let g = germ(p)?;
    let o = s.options();
    let graph = gauss_graph(&g.f, &o.budget)?;
    let r = segre_fiber_detailed(&graph, &g.point, &o)?;
    let report = SegreReport {
        kind: "segre",
        poly: g.f.to_string(),
        vars: vars_of(&g.f),
        point: point_text(&g.point),
        seed: s.seed,
        segre: r.vector.0.clone(),
        alternating_sum: r.vector.alternating_sum(),
        multidegrees: (&r.table).into(),
        fiber_ideal: r.fiber.to_strings(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "f = {}  in ({})", report.poly, report.vars.join(", "));
    let _ = writeln!(text, "P = ({})", report.point.join(", "));
    let _ = writeln!(text, "Segre vector {}", r.vector);
    let _ = writeln!(text, "alternating sum {}", report.alternating_sum);
    let _ = writeln!(text, "multidegrees {}:{}", r.table.blocks.join("|"), table_text(&r.table));
    Ok(Output { json: to_json(&report), text, failure: None })
}

#[derive(Serialize)]
struct Valued {
    stratum: String,
    value: i64,
}

fn valued(space: &StratifiedSpace, v: &[i64]) -> Vec<Valued> {
    v.iter().enumerate().map(|(i, x)| Valued { stratum: space.stratum(i).name.clone(), value: *x }).collect()
}

fn valued_text(space: &StratifiedSpace, v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().enumerate().map(|(i, x)| format!("{}={x}", space.stratum(i).name)).collect();
    parts.join(", ")
}

#[derive(Serialize)]
struct StratChiReport {
    kind: &'static str,
    function: Vec<Valued>,
    chi: i64,
    chi_level_sets: i64,
}

/// The function to integrate: `override_values`, else the document's, else 1.
pub fn strat_chi(space_doc: &SpaceDoc, override_values: Option<&BTreeMap<String, i64>>) -> Result<Output, CliError> {
    let (space, _) = space_doc.build()?;
    let values = match override_values.or(space_doc.function.as_ref()) {
        Some(m) => by_name(&space, m)?,
        None => vec![1; space.len()],
    };
    let f = ConstructibleFunction { values };
    let chi = weighted_chi(&space, &f)?;
    let chi_level_sets = weighted_chi_level_sets(&space, &f)?;
    let report = StratChiReport { kind: "strat-chi", function: valued(&space, &f.values), chi, chi_level_sets };
    let text = format!("function {}\nchi = {chi}\n", valued_text(&space, &f.values));
    let failure = (chi != chi_level_sets).then(|| format!("level-set formula gives {chi_level_sets}"));
    Ok(Output { json: to_json(&report), text, failure })
}

#[derive(Serialize)]
struct MatrixEntry {
    on: String,
    of: String,
    value: i64,
    provenance: &'static str,
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Declared => "declared",
        Provenance::Computed => "computed",
        Provenance::Default => "default",
    }
}

fn matrix_entries(space: &StratifiedSpace, m: &EuMatrix) -> Vec<MatrixEntry> {
    let mut out = Vec::new();
    for on in 0..space.len() {
        for of in 0..space.len() {
            if space.leq(on, of) {
                out.push(MatrixEntry {
                    on: space.stratum(on).name.clone(),
                    of: space.stratum(of).name.clone(),
                    value: m.get(on, of),
                    provenance: provenance_name(m.provenance(on, of)),
                });
            }
        }
    }
    out
}

#[derive(Serialize)]
struct TransformReport {
    kind: &'static str,
    direction: &'static str,
    cycle: Vec<Valued>,
    function: Vec<Valued>,
    chi: i64,
    eu_matrix: Vec<MatrixEntry>,
}

pub fn transform(
    space_doc: &SpaceDoc,
    cycle: Option<&BTreeMap<String, i64>>,
    function: Option<&BTreeMap<String, i64>>,
) -> Result<Output, CliError> {
    let (space, m) = space_doc.build()?;
    let (direction, c, f) = match (cycle, function) {
        (Some(c), None) => {
            let c = Cycle { coefficients: by_name(&space, c)? };
            let f = eu_transform(&space, &c, &m)?;
            ("cycle-to-function", c, f)
        }
        (None, Some(f)) => {
            let f = ConstructibleFunction { values: by_name(&space, f)? };
            let c = inverse_transform(&space, &f, &m)?;
            ("function-to-cycle", c, f)
        }
        _ => return Err(CliError::Schema("give exactly one of a cycle or a function".into())),
    };
    let chi = weighted_chi(&space, &f)?;
    let report = TransformReport {
        kind: "transform",
        direction,
        cycle: valued(&space, &c.coefficients),
        function: valued(&space, &f.values),
        chi,
        eu_matrix: matrix_entries(&space, &m),
    };
    let mut text = String::new();
    let _ = writeln!(text, "cycle    {}", valued_text(&space, &c.coefficients));
    let _ = writeln!(text, "function {}", valued_text(&space, &f.values));
    let _ = writeln!(text, "chi = {chi}");
    Ok(Output { json: to_json(&report), text, failure: None })
}

fn behrend_data(p: &ConePayload) -> Result<BehrendData, CliError> {
    let (space, m) = p.space.build()?;
    Ok(BehrendData::new(space, m, p.cone.components())?)
}

#[derive(Serialize)]
struct BehrendReport {
    kind: &'static str,
    canonical_cycle: Vec<Valued>,
    behrend_function: Vec<Valued>,
    dt: i64,
    characteristic_cycle: Vec<Valued>,
    zero_section_intersection: i64,
}

pub fn behrend(p: &ConePayload) -> Result<Output, CliError> {
    if p.fixed.is_some() {
        return Err(CliError::Schema("`fixed` only applies to kiemli".into()));
    }
    let bd = behrend_data(p)?;
    let dt = dt_invariant(&bd)?;
    let ch = lagrangify(&bd.space, &bd.canonical);
    let meet = intersection_with_zero_section(&bd.space, &bd.eu, &ch)?;
    let report = BehrendReport {
        kind: "behrend",
        canonical_cycle: valued(&bd.space, &bd.canonical.coefficients),
        behrend_function: valued(&bd.space, &bd.nu.values),
        dt,
        characteristic_cycle: valued(&bd.space, &ch.terms),
        zero_section_intersection: meet,
    };
    let mut text = String::new();
    let _ = writeln!(text, "canonical cycle      {}", valued_text(&bd.space, &bd.canonical.coefficients));
    let _ = writeln!(text, "Behrend function     {}", valued_text(&bd.space, &bd.nu.values));
    let _ = writeln!(text, "characteristic cycle {}", valued_text(&bd.space, &ch.terms));
    let _ = writeln!(text, "chi(X, nu) = {dt}");
    let _ = writeln!(text, "Ch . zero section = {meet}");
    let failure = (meet != dt).then(|| format!("zero-section intersection {meet} differs from {dt}"));
    Ok(Output { json: to_json(&report), text, failure })
}

#[derive(Serialize)]
struct KiemLiJson {
    kind: &'static str,
    fixed: Vec<String>,
    c1: Vec<Valued>,
    c2: Vec<Valued>,
    chi_f_nu1: i64,
    chi_f_nu2: i64,
    localized: i64,
    chi_x_nu: i64,
    chi_f_nu: i64,
    holds: bool,
}

pub fn kiemli(p: &ConePayload) -> Result<Output, CliError> {
    let bd = behrend_data(p)?;
    let mask = match &p.fixed {
        Some(names) => mask_of(&bd.space, names)?,
        None => bd.space.fixed_mask(),
    };
    let r = kiem_li_localized(&bd, &mask)?;
    let fixed: Vec<String> =
        (0..bd.space.len()).filter(|&i| mask[i]).map(|i| bd.space.stratum(i).name.clone()).collect();
    let report = KiemLiJson {
        kind: "kiemli",
        fixed: fixed.clone(),
        c1: valued(&bd.space, &r.c1.coefficients),
        c2: valued(&bd.space, &r.c2.coefficients),
        chi_f_nu1: r.chi_f_nu1,
        chi_f_nu2: r.chi_f_nu2,
        localized: r.localized,
        chi_x_nu: r.chi_x_nu,
        chi_f_nu: r.chi_f_nu,
        holds: r.holds(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "F = {{{}}}", fixed.join(", "));
    let _ = writeln!(text, "c1 {}", valued_text(&bd.space, &r.c1.coefficients));
    let _ = writeln!(text, "c2 {}", valued_text(&bd.space, &r.c2.coefficients));
    let _ = writeln!(text, "chi(F, nu1|F) = {}", r.chi_f_nu1);
    let _ = writeln!(text, "chi(F, nu2|F) = {}", r.chi_f_nu2);
    let _ = writeln!(text, "localized     = {}", r.localized);
    let _ = writeln!(text, "chi(X, nu)    = {}", r.chi_x_nu);
    let _ = writeln!(text, "chi(F, nu|F)  = {}", r.chi_f_nu);
    let failure = (!r.holds()).then(|| "localized invariant does not match chi(X, nu)".to_string());
    Ok(Output { json: to_json(&report), text, failure })
}

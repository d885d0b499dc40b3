//! Verification suites behind `skcodes verify`.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use skcodes::codes::{CodeContext, CodeError, ONE_POINT_DIVISOR};
use skcodes::derived::quantum_table;
use skcodes::{CurveSpec, Family, NumericalSemigroup};

use crate::fixtures;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyTarget {
    /// t-fibers: 456 fibers of 64 points.
    Castle,
    /// Power sums over all affine points.
    Duality,
    Planemodel,
    Divisors,
    /// Point count, t = 0 count, maximality.
    Points,
    /// Generator-matrix ranks.
    Rank,
    /// d_ORD and quantum tables against the published rows.
    Tables,
    Semigroup,
    Hurwitz,
    All,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub report: Value,
}

fn check(name: impl Into<String>, passed: bool, report: impl Serialize) -> Check {
    Check {
        name: name.into(),
        passed,
        report: serde_json::to_value(report).expect("serializable"),
    }
}

/// Ranks checked against r + 1 - g.
pub const RANK_RADII: [u64; 5] = [392, 500, 1000, 5000, 14000];
/// Radii small enough for a direct elimination cross-check.
pub const DIRECT_RADII: [u64; 2] = [392, 500];

pub fn run_target(target: VerifyTarget, seed: u64, pairs: usize) -> Result<Vec<Check>, CodeError> {
    use VerifyTarget::*;
    let needs_points = matches!(target, Castle | Duality | Planemodel | Divisors | Points | Rank | All);
    let ctx = if needs_points { Some(CodeContext::q8()?) } else { None };
    let ctx = ctx.as_ref();
    let mut out = Vec::new();
    let want = |t: VerifyTarget| target == t || target == All;
    if want(Semigroup) {
        out.extend(semigroup_checks());
    }
    if want(Hurwitz) {
        out.push(hurwitz_check());
    }
    if want(Tables) {
        out.extend(table_checks());
    }
    if let Some(ctx) = ctx {
        if want(Points) {
            out.push(points_check(ctx));
        }
        if want(Castle) {
            out.push(castle_check(ctx)?);
        }
        if want(Planemodel) {
            out.push(plane_model_check(ctx));
        }
        if want(Divisors) {
            out.push(divisor_check(ctx));
        }
        if want(Rank) {
            out.extend(rank_checks(ctx)?);
        }
        if want(Duality) {
            out.push(duality_check(ctx, seed, pairs)?);
        }
    }
    Ok(out)
}

pub fn semigroup_checks() -> Vec<Check> {
    [1u32, 2]
        .into_iter()
        .map(|s| {
            let spec = CurveSpec::new(Family::SuzukiCover, s);
            let gens = spec.pole_orders_u64().expect("small q");
            let g_curve = spec.genus_u64().expect("small q");
            let sg = NumericalSemigroup::new(&gens, 0).expect("numerical");
            let symmetric = sg.is_symmetric().unwrap_or(false);
            let passed = sg.genus() == g_curve && symmetric && sg.conductor() == 2 * g_curve;
            check(
                format!("semigroup q={}", spec.q_u64()),
                passed,
                json!({
                    "generators": gens,
                    "genus": sg.genus(),
                    "curve_genus": g_curve,
                    "frobenius": sg.frobenius_number(),
                    "conductor": sg.conductor(),
                    "symmetric": symmetric,
                }),
            )
        })
        .collect()
}

pub fn hurwitz_check() -> Check {
    let cases = [(Family::SuzukiCover, 1), (Family::SuzukiCover, 2), (Family::ReeCover, 1)];
    let reports: Vec<_> = cases
        .iter()
        .map(|&(f, s)| CurveSpec::new(f, s).hurwitz_quotient_check())
        .collect();
    check("hurwitz", reports.iter().all(|r| r.holds), reports)
}

pub fn table_checks() -> Vec<Check> {
    let s = NumericalSemigroup::new(&[40, 50, 60, 64, 65], 0).expect("numerical");
    let n = 29184;
    let dord = skcodes::codes::dord_table(&s, n, 2..=3 * s.genus() + 1).expect("in range");
    let d = fixtures::compare_dord(&dord, &fixtures::published_dord());
    let quantum = quantum_table(&s, n).expect("in range");
    let q = fixtures::compare_quantum(&quantum, &fixtures::published_quantum());
    vec![check("dord table", d.passed(), &d), check("quantum table", q.passed(), &q)]
}

pub fn points_check(ctx: &CodeContext) -> Check {
    let p = ctx.points().params();
    let count = ctx.points().len() as u64;
    let t_zero = count - ctx.points().off_t_zero().len() as u64;
    let spec = ctx.spec();
    let maximal = spec.maximal_point_count().to_string();
    let expected_total = (count + 1).to_string();
    let passed = count == p.affine_point_count() && t_zero == p.q * p.q && maximal == expected_total;
    check(
        "points",
        passed,
        json!({
            "affine_points": count,
            "t_zero_points": t_zero,
            "points_with_infinity": count + 1,
            "maximal_bound": maximal,
        }),
    )
}

pub fn castle_check(ctx: &CodeContext) -> Result<Check, CodeError> {
    let r = ctx.points().t_fibers()?;
    let p = ctx.points().params();
    let passed = r.fibers as u64 == p.fiber_count() && r.fiber_size as u64 == p.q * p.q && r.histogram.len() == 1;
    Ok(check("castle fibers", passed, r))
}

pub fn plane_model_check(ctx: &CodeContext) -> Check {
    let r = ctx.points().verify_plane_model(1);
    check("plane model", r.passed() && r.evaluated == ctx.points().len(), r)
}

pub fn divisor_check(ctx: &CodeContext) -> Check {
    let r = ctx.points().verify_coordinate_divisors();
    check("coordinate divisors", r.passed(), r)
}

pub fn rank_checks(ctx: &CodeContext) -> Result<Vec<Check>, CodeError> {
    let g = ctx.genus();
    let mut out = Vec::new();
    for r in RANK_RADII {
        let cert = ctx.code_rank(r, ONE_POINT_DIVISOR)?;
        let passed = cert.full_rank() && cert.rank == r + 1 - g;
        out.push(check(format!("rank r={r}"), passed, cert));
    }
    for r in DIRECT_RADII {
        let cert = ctx.direct_rank(r, ONE_POINT_DIVISOR)?;
        let passed = cert.rank == r + 1 - g;
        out.push(check(format!("direct rank r={r}"), passed, cert));
    }
    Ok(out)
}

/// Passes only if every plain power sum vanishes; the 1/phi' twisted result is reported too.
pub fn duality_check(ctx: &CodeContext, seed: u64, pairs: usize) -> Result<Check, CodeError> {
    let r = ctx.castle_duality_check(seed, pairs)?;
    let summary = json!({
        "passed": r.passed(),
        "twisted_passed": r.twisted_passed(),
        "plain_failures": r.failures.len(),
        "first_plain_failures": r.failures.iter().take(10).collect::<Vec<_>>(),
        "twisted_failures": r.twisted_failures.len(),
        "report": r,
    });
    Ok(check("duality power sums", r.passed(), summary))
}

//! One line per acceptance criterion. Run with `cargo test --test acceptance`.
//!
//! Criterion 6 cannot pass as stated (see the README, "Duality finding"). It is
//! printed as FAIL; the run still succeeds when it fails in exactly the
//! documented way, and fails if anything else fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skcodes::codes::{CodeContext, ONE_POINT_DIVISOR};
use skcodes::report::agrees_with_printed;
use skcodes::{CurveSpec, Family, NumericalSemigroup};
use skcodes_cli::{fixtures, main_with_args};

const N: u64 = 29184;
const G: u64 = 196;
const S8: [u64; 5] = [40, 50, 60, 64, 65];
const S32: [u64; 5] = [800, 900, 1000, 1024, 1025];
/// Delta agreement: |printed - exact| < one unit in the last printed place.
const DELTA_TOLERANCE: &str = "1 ulp of printed precision";
const DUALITY_SEED: u64 = 0;
const DUALITY_PAIRS: usize = 2000;
/// Documented failure mode of criterion 6.
const DUALITY_PLAIN_FAILURES: usize = 150;
const DUALITY_FIRST_FAILURE: u64 = 2695;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn cli(args: &[&str]) -> String {
    let mut full = vec!["skcodes"];
    full.extend_from_slice(args);
    let o = main_with_args(full);
    assert_eq!(o.exit_code, 0, "{args:?}: {}", o.stderr);
    o.stdout
}

/// Data lines of a CSV with `#` header lines, split on commas.
fn csv_rows(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header = lines.next().unwrap_or("").split(',').map(str::to_string).collect();
    let rows = lines.map(|l| l.split(',').map(str::to_string).collect()).collect();
    (header, rows)
}

fn int(s: &str) -> u64 {
    s.parse().unwrap_or(u64::MAX)
}

fn c1_dord_table() -> Outcome {
    let text = cli(&["dord-table", "--q", "8"]);
    let (header, rows) = csv_rows(&text);
    if header != ["n", "k", "rho", "dord", "delta", "Delta"] {
        return outcome(false, format!("header {header:?}"));
    }
    let published = fixtures::published_dord();
    if rows.len() != published.len() {
        return outcome(false, format!("{} rows, {} published", rows.len(), published.len()));
    }
    let mut bad = Vec::new();
    for (r, p) in rows.iter().zip(&published) {
        let got = (int(&r[0]), int(&r[1]), int(&r[2]), int(&r[3]), int(&r[4]));
        let want = (p.n, p.k, p.rho, p.dord, p.delta);
        if got != want || !agrees_with_printed(got.4, got.0, &p.delta_printed) || !agrees_with_printed(got.4, got.0, &r[5])
        {
            bad.push(p.k);
        }
    }
    let anchors = [(29182, 40, 2), (29103, 256, 8), (29102, 257, 10), (28997, 381, 30), (28793, 586, 200), (28595, 784, 394)];
    let anchors_ok = anchors
        .iter()
        .all(|&(k, rho, d)| rows.iter().any(|r| (int(&r[1]), int(&r[2]), int(&r[3])) == (k, rho, d)));
    outcome(
        bad.is_empty() && anchors_ok,
        format!(
            "{} rows, k {}..{}, mismatches {:?}, anchors {}, Delta tolerance {DELTA_TOLERANCE}",
            rows.len(),
            rows[0][1],
            rows[rows.len() - 1][1],
            bad,
            if anchors_ok { "ok" } else { "MISSING" }
        ),
    )
}

fn c2_semigroup() -> Outcome {
    let s8 = NumericalSemigroup::new(&S8, 0).unwrap();
    let formula = (8u64.pow(3) - 2 * 64 + 8) / 2;
    let ok8 = s8.genus() == 196
        && formula == 196
        && s8.frobenius_number() == Some(391)
        && s8.conductor() == 392
        && s8.is_symmetric() == Ok(true);
    let s32 = NumericalSemigroup::new(&S32, 0).unwrap();
    let ok32 = s32.genus() == 15376;
    outcome(
        ok8 && ok32,
        format!(
            "q=8: genus {} (formula {formula}), frobenius {:?}, conductor {}, symmetric {:?}; q=32: genus {} vs 15376{}",
            s8.genus(),
            s8.frobenius_number(),
            s8.conductor(),
            s8.is_symmetric(),
            s32.genus(),
            if ok32 { "" } else { " (FINDING: generated semigroup differs from curve genus)" }
        ),
    )
}

fn c3_points(ctx: &CodeContext) -> Outcome {
    let n = ctx.points().len() as u64;
    let t0 = n - ctx.points().off_t_zero().len() as u64;
    let maximal = 4096 + 1 + 2 * G * 64;
    let spec_bound = ctx.spec().maximal_point_count().to_string();
    outcome(
        n == N && t0 == 64 && n + 1 == maximal && spec_bound == maximal.to_string(),
        format!("{n} affine points, {t0} with t=0, {} = 4096+1+2*196*64 = {maximal}", n + 1),
    )
}

fn c4_plane_model(ctx: &CodeContext) -> Outcome {
    let r = ctx.points().verify_plane_model(1);
    outcome(
        r.evaluated == N as usize && r.failures == 0 && r.control_nonzero > 0,
        format!(
            "F(y,t) = 0 at {}/{} points; control F(y+g,t) nonzero at {}/{}",
            r.evaluated - r.failures,
            r.evaluated,
            r.control_nonzero,
            r.control_sampled
        ),
    )
}

fn c5_fibers(ctx: &CodeContext) -> Outcome {
    let r = ctx.points().t_fibers().unwrap();
    let sizes: BTreeSet<usize> = ctx.points().fibers().iter().map(|(_, m)| m.len()).collect();
    let covered: usize = ctx.points().fibers().iter().map(|(_, m)| m.len()).sum();
    outcome(
        r.fibers == 456 && sizes == BTreeSet::from([64]) && covered == N as usize,
        format!("{} fibers, sizes {:?}, covering {covered} points", r.fibers, sizes),
    )
}

/// Returns the outcome and whether the failure matches the documented one.
fn c6_duality(ctx: &CodeContext) -> (Outcome, bool) {
    let r = ctx.castle_duality_check(DUALITY_SEED, DUALITY_PAIRS).unwrap();
    let documented = !r.passed()
        && r.failures.len() == DUALITY_PLAIN_FAILURES
        && r.failures.first() == Some(&DUALITY_FIRST_FAILURE)
        && r.twisted_passed()
        && !r.phi_derivative_constant;
    let detail = format!(
        "plain sums: {} of {} nongaps s <= {} nonzero (first s = {:?}); phi' constant: {}; \
         1/phi'-twisted sums: {} of {} nongaps s <= {} nonzero; pairs {}/{} plain, {}/{} twisted nonzero",
        r.failures.len(),
        r.nongaps_checked,
        r.max_s,
        r.failures.first(),
        r.phi_derivative_constant,
        r.twisted_failures.len(),
        r.twisted_checked,
        r.twisted_max_s,
        r.pair_failures,
        r.pairs_checked,
        r.twisted_pair_failures,
        r.pairs_checked
    );
    (outcome(r.passed(), detail), documented)
}

fn c7_ranks(ctx: &CodeContext) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for r in [392u64, 500, 1000, 5000, 14000] {
        let c = ctx.code_rank(r, ONE_POINT_DIVISOR).unwrap();
        ok &= c.rank == r - G + 1;
        parts.push(format!("r={r}: {} ({:?})", c.rank, c.method));
    }
    for r in [392u64, 1000] {
        let c = ctx.direct_rank(r, ONE_POINT_DIVISOR).unwrap();
        ok &= c.rank == r - G + 1;
        parts.push(format!("direct r={r}: {}", c.rank));
    }
    outcome(ok, parts.join(", "))
}

fn c8_quantum() -> Outcome {
    let text = cli(&["quantum-table", "--q", "8"]);
    let (header, rows) = csv_rows(&text);
    let published = fixtures::published_quantum();
    let shape = header == ["n", "s", "d_bound", "DeltaQ_bound"] && rows.len() == 198;
    let steps = rows.iter().enumerate().all(|(i, r)| {
        int(&r[0]) == N && int(&r[1]) == 28400 - 2 * i as u64 && int(&r[2]) == 197 + i as u64 && r[3] == "0.013432"
    });
    let matches = rows.len() == published.len()
        && rows.iter().zip(&published).all(|(r, p)| {
            (int(&r[0]), int(&r[1]), int(&r[2])) == (p.n, p.s, p.d_bound) && r[3] == p.delta_q_printed
        });
    let exact = rows.iter().all(|r| N - int(&r[1]) - 2 * int(&r[2]) + 2 == 2 * G);
    outcome(
        shape && steps && matches && exact,
        format!(
            "{} rows, s {}..{}, d_bound {}..{}, DeltaQ 0.013432 throughout: {steps}, fixture match: {matches}",
            rows.len(),
            rows.first().map_or("", |r| r[1].as_str()),
            rows.last().map_or("", |r| r[1].as_str()),
            rows.first().map_or("", |r| r[2].as_str()),
            rows.last().map_or("", |r| r[2].as_str()),
        ),
    )
}

fn c9_hurwitz() -> Outcome {
    // (family, s, 2g - 2, m (2 g_base - 2), (m - 1) * #F_q-points)
    let cases = [
        (Family::SuzukiCover, 1, 2 * 196 - 2, 5 * 26, 4 * 65),
        (Family::SuzukiCover, 2, 2 * 15376 - 2, 25 * (2 * 124 - 2), 24 * 1025),
        (Family::ReeCover, 1, 2 * 246051 - 2, 19 * 7252, 18 * 19684),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (f, s, lhs, base, diff) in cases {
        let r = CurveSpec::new(f, s).hurwitz_quotient_check();
        let want = (lhs.to_string(), base.to_string(), diff.to_string());
        ok &= r.holds && lhs == base + diff && (r.lhs.clone(), r.base_term.clone(), r.different.clone()) == want;
        parts.push(format!("{} q={}: {} = {} + {}", f.name(), r.q, r.lhs, r.base_term, r.different));
    }
    outcome(ok, parts.join("; "))
}

fn naive_members(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut m = vec![false; bound as usize + 1];
    m[0] = true;
    for s in 1..=bound as usize {
        m[s] = gens.iter().any(|&g| g as usize <= s && m[s - g as usize]);
    }
    m
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn c10_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut instances = 0;
    let mut oracle_bad = 0;
    while instances < 100 {
        let k = rng.gen_range(1..=4);
        let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=60)).collect();
        if gens.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
            continue;
        }
        instances += 1;
        let s = NumericalSemigroup::new(&gens, 0).unwrap();
        let naive = naive_members(&gens, s.bound());
        let gaps: Vec<u64> = (0..=s.bound()).filter(|&v| !naive[v as usize]).collect();
        let members_ok = (0..=s.bound()).all(|v| s.contains(v) == naive[v as usize]);
        if !members_ok || s.genus() != gaps.len() as u64 || s.frobenius_number() != gaps.last().copied() {
            oracle_bad += 1;
        }
    }
    let s8 = NumericalSemigroup::new(&S8, 0).unwrap();
    let shortcut_bad: Vec<u64> = (587..=589)
        .filter(|&l| {
            let r = s8.dord_shortcuts(l).unwrap();
            r.linear != Some(r.direct) || r.direct != l + 1 - G
        })
        .collect();
    // Tail: count pairs by membership, independently of nu's closed form.
    let s8 = s8.with_bound(4000);
    let c = s8.conductor();
    let last = s8.nongaps().len() as u64 - 1;
    let mut tail_checked = 0;
    let mut tail_bad = 0;
    for l in 1..=last {
        let r = s8.rho(l + 1).unwrap();
        if r + 1 < 2 * c {
            continue;
        }
        let pairs = (0..=r).filter(|&a| s8.contains(a) && s8.contains(r - a)).count() as u64;
        tail_checked += 1;
        if pairs != r + 1 - 2 * G || s8.nu(l).unwrap() != pairs {
            tail_bad += 1;
        }
    }
    outcome(
        oracle_bad == 0 && shortcut_bad.is_empty() && tail_bad == 0 && tail_checked > 0,
        format!(
            "oracle: {oracle_bad}/100 disagree; shortcuts l=587..589 disagree at {shortcut_bad:?}; \
             nu tail: {tail_bad}/{tail_checked} disagree (rho <= {})",
            s8.rho(last + 1).unwrap()
        ),
    )
}

fn main() {
    let mut failures = Vec::new();
    let mut known = Vec::new();
    let report = |id: u32, name: &str, budget: Duration, start: Instant, o: Outcome| {
        let dt = start.elapsed();
        let passed = o.passed && dt <= budget;
        println!(
            "[{}] C{id} {name}: {} ({:.2}s, budget {}s)",
            if passed { "PASS" } else { "FAIL" },
            o.detail,
            dt.as_secs_f64(),
            budget.as_secs()
        );
        passed
    };
    let secs = Duration::from_secs;

    let t = Instant::now();
    let o = c1_dord_table();
    if !report(1, "d_ORD table", secs(60), t, o) {
        failures.push(1);
    }
    let t = Instant::now();
    let o = c2_semigroup();
    if !report(2, "semigroup certificate", secs(5), t, o) {
        failures.push(2);
    }
    let t = Instant::now();
    let ctx = CodeContext::q8().expect("q = 8 context");
    let o = c3_points(&ctx);
    if !report(3, "point enumeration", secs(10), t, o) {
        failures.push(3);
    }
    let t = Instant::now();
    let o = c4_plane_model(&ctx);
    if !report(4, "plane model", secs(30), t, o) {
        failures.push(4);
    }
    let t = Instant::now();
    let o = c5_fibers(&ctx);
    if !report(5, "t-fibers", secs(5), t, o) {
        failures.push(5);
    }
    let t = Instant::now();
    let (o, documented) = c6_duality(&ctx);
    if !report(6, "duality power sums", secs(600), t, o) {
        if documented {
            known.push(6);
        } else {
            failures.push(6);
        }
    }
    let t = Instant::now();
    let o = c7_ranks(&ctx);
    if !report(7, "Riemann-Roch ranks", secs(300), t, o) {
        failures.push(7);
    }
    let t = Instant::now();
    let o = c8_quantum();
    if !report(8, "quantum table", secs(1), t, o) {
        failures.push(8);
    }
    let t = Instant::now();
    let o = c9_hurwitz();
    if !report(9, "Hurwitz consistency", secs(1), t, o) {
        failures.push(9);
    }
    let t = Instant::now();
    let o = c10_properties();
    if !report(10, "property suites", secs(30), t, o) {
        failures.push(10);
    }

    let passed = 10 - failures.len() - known.len();
    println!(
        "acceptance: {passed}/10 passed; known unattainable {known:?} (fails as documented); unexpected failures {failures:?}"
    );
    if !failures.is_empty() {
        std::process::exit(1);
    }
}

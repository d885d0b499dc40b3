//! Affine F_{q^4}-rational points of the Suzuki cover
//! `y^q + y = x^q0 (x^q + x)`, `t^m = x^q + x`.
//!
//! Points are kept in ascending `(code(x), code(y), code(t))` order, which
//! fixes the column order of every generator matrix built from them.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::curve::{CurveSpec, Family};
use crate::field::{Fe, FieldContext, Sign};
use crate::report::RunMeta;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointError {
    #[error("point enumeration is implemented for the Suzuki cover only, got {0:?}")]
    WrongFamily(Family),
    #[error("expected GF(2^{expected}) as evaluation field, got GF({p}^{got})")]
    WrongField { expected: u32, p: u32, got: u32 },
    #[error("point over x = {x} violates {equation}")]
    Equation { x: u32, equation: &'static str },
    #[error("expected {expected} affine points, found {found}{}", offending_x.map(|x| format!(" (first anomalous x = {x})")).unwrap_or_default())]
    CountMismatch {
        expected: u64,
        found: u64,
        offending_x: Option<u32>,
    },
    #[error("weak Castle violation: fiber over t = {t} has {size} points, expected {expected}")]
    CastleViolation { t: u32, size: usize, expected: usize },
    #[error("weak Castle violation: {found} distinct t-values, expected {expected}")]
    FiberCount { found: usize, expected: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CurvePoint {
    pub x: Fe,
    pub y: Fe,
    pub t: Fe,
    pub z: Fe,
    pub w: Fe,
}

impl CurvePoint {
    /// Coordinates in the order (x, y, z, t, w) used by monomial exponents.
    #[inline]
    pub fn coords(&self) -> [Fe; 5] {
        [self.x, self.y, self.z, self.t, self.w]
    }
}

/// The curve constants the point machinery needs, as machine integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverParams {
    pub q: u64,
    pub q0: u64,
    pub m: u64,
}

impl CoverParams {
    pub fn from_spec(spec: &CurveSpec) -> Self {
        CoverParams {
            q: spec.q_u64(),
            q0: spec.q0_u64(),
            m: spec.m_u64(),
        }
    }

    /// q^5 - q^4 + q^3.
    pub fn affine_point_count(&self) -> u64 {
        let q = self.q;
        q.pow(5) - q.pow(4) + q.pow(3)
    }

    /// q^3 - q^2 + q.
    pub fn fiber_count(&self) -> u64 {
        let q = self.q;
        q.pow(3) - q.pow(2) + q
    }
}

/// All affine points in canonical order.
#[derive(Debug, Clone)]
pub struct PointSet {
    field: Arc<FieldContext>,
    params: CoverParams,
    points: Vec<CurvePoint>,
}

fn z_of(f: &FieldContext, q0: u64, x: Fe, y: Fe) -> Fe {
    f.add(f.pow(y, 2 * q0), f.pow(x, 2 * q0 + 1))
}

fn w_of(f: &FieldContext, q0: u64, x: Fe, y: Fe, z: Fe) -> Fe {
    f.add(f.mul(x, f.pow(y, 2 * q0)), f.pow(z, 2 * q0))
}

/// Enumerates every affine F_{q^4}-point of the Suzuki cover.
pub fn enumerate_points(spec: &CurveSpec, field: Arc<FieldContext>) -> Result<PointSet, PointError> {
    if spec.family != Family::SuzukiCover {
        return Err(PointError::WrongFamily(spec.family));
    }
    let expected_degree = 4 * (2 * spec.s + 1);
    if field.characteristic() != 2 || field.degree() != expected_degree {
        return Err(PointError::WrongField {
            expected: expected_degree,
            p: field.characteristic(),
            got: field.degree(),
        });
    }
    let params = CoverParams::from_spec(spec);
    let CoverParams { q, q0, m } = params;
    let solver = field
        .additive_solver(q, Sign::Plus)
        .expect("q divides the field degree");
    let f = field.as_ref();

    let per_x: Vec<Result<Vec<CurvePoint>, PointError>> = (0..f.size())
        .into_par_iter()
        .map(|code| {
            let x = Fe(code);
            let trace = f.add(f.pow(x, q), x);
            let ts = f.nth_roots(m, trace);
            let rhs = f.mul(f.pow(x, q0), trace);
            let ys = solver.solve(f, rhs);
            let mut out = Vec::with_capacity(ys.len() * ts.len());
            for &y in &ys {
                let z = z_of(f, q0, x, y);
                let w = w_of(f, q0, x, y, z);
                for &t in &ts {
                    out.push(CurvePoint { x, y, t, z, w });
                }
            }
            for pt in &out {
                check_point(f, q, q0, m, pt)?;
            }
            Ok(out)
        })
        .collect();

    let mut points = Vec::with_capacity(params.affine_point_count() as usize);
    let mut anomalous = None;
    for (code, chunk) in per_x.into_iter().enumerate() {
        let chunk = chunk?;
        let n = chunk.len() as u64;
        if anomalous.is_none() && n != 0 && n != q && n != q * m {
            anomalous = Some(code as u32);
        }
        points.extend(chunk);
    }
    points.sort_unstable_by_key(|p| (p.x, p.y, p.t));
    let expected = params.affine_point_count();
    if points.len() as u64 != expected || anomalous.is_some() {
        return Err(PointError::CountMismatch {
            expected,
            found: points.len() as u64,
            offending_x: anomalous,
        });
    }
    Ok(PointSet {
        field,
        params,
        points,
    })
}

fn check_point(f: &FieldContext, q: u64, q0: u64, m: u64, p: &CurvePoint) -> Result<(), PointError> {
    let trace = f.add(f.pow(p.x, q), p.x);
    let fail = |equation| PointError::Equation { x: p.x.0, equation };
    if f.add(f.pow(p.y, q), p.y) != f.mul(f.pow(p.x, q0), trace) {
        return Err(fail("y^q + y = x^q0 (x^q + x)"));
    }
    if f.pow(p.t, m) != trace {
        return Err(fail("t^m = x^q + x"));
    }
    if f.add(f.pow(p.z, q), p.z) != f.mul(f.pow(p.x, 2 * q0), trace) {
        return Err(fail("z^q + z = x^(2q0) (x^q + x)"));
    }
    if f.add(f.pow(p.w, q), p.w) != f.mul(f.pow(p.y, 2 * q0), trace) {
        return Err(fail("w^q + w = y^(2q0) (x^q + x)"));
    }
    Ok(())
}

impl PointSet {
    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<FieldContext> {
        self.field.clone()
    }

    pub fn params(&self) -> CoverParams {
        self.params
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Indices of the points with t != 0, in canonical order.
    pub fn off_t_zero(&self) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&i| !self.points[i].t.is_zero())
            .collect()
    }

    /// Points grouped by their t-value, ascending by t.
    pub fn fibers(&self) -> Vec<(Fe, Vec<usize>)> {
        let mut map: BTreeMap<Fe, Vec<usize>> = BTreeMap::new();
        for (i, p) in self.points.iter().enumerate() {
            map.entry(p.t).or_default().push(i);
        }
        map.into_iter().collect()
    }

    /// Checks that t partitions the points into q^3 - q^2 + q fibers of q^2 points.
    pub fn t_fibers(&self) -> Result<FiberReport, PointError> {
        let fibers = self.fibers();
        let size = (self.params.q * self.params.q) as usize;
        let expected = self.params.fiber_count() as usize;
        let mut histogram = BTreeMap::new();
        for (_, members) in &fibers {
            *histogram.entry(members.len()).or_insert(0usize) += 1;
        }
        if let Some((t, members)) = fibers.iter().find(|(_, m)| m.len() != size) {
            return Err(PointError::CastleViolation {
                t: t.0,
                size: members.len(),
                expected: size,
            });
        }
        if fibers.len() != expected {
            return Err(PointError::FiberCount {
                found: fibers.len(),
                expected,
            });
        }
        let zero_fiber_rational = fibers
            .iter()
            .find(|(t, _)| t.is_zero())
            .map(|(_, members)| {
                members.iter().all(|&i| {
                    let p = &self.points[i];
                    self.field.in_subfield(p.x, self.params.q) && self.field.in_subfield(p.y, self.params.q)
                })
            })
            .unwrap_or(false);
        Ok(FiberReport {
            fibers: fibers.len(),
            fiber_size: size,
            histogram,
            zero_fiber_rational,
        })
    }

    /// F(y, t) = y^(q^2) + y^q t^(m(q-1)) + y^q + y t^(m(q-1)) + t^((q+q0)m).
    pub fn plane_model_value(&self, y: Fe, t: Fe) -> Fe {
        let f = self.field.as_ref();
        let CoverParams { q, q0, m } = self.params;
        let tm = f.pow(t, m * (q - 1));
        let yq = f.pow(y, q);
        let terms = [
            f.pow(y, q * q),
            f.mul(yq, tm),
            yq,
            f.mul(y, tm),
            f.pow(t, (q + q0) * m),
        ];
        terms.into_iter().fold(Fe::ZERO, |acc, v| f.add(acc, v))
    }

    /// Evaluates the plane model at every point, plus two perturbation controls
    /// on every `stride`-th point: y + g (g the field generator) and y + 1.
    pub fn verify_plane_model(&self, stride: usize) -> PlaneModelReport {
        let failures = self
            .points
            .par_iter()
            .filter(|p| !self.plane_model_value(p.y, p.t).is_zero())
            .count();
        let f = self.field.as_ref();
        let g = f.generator();
        let sample: Vec<&CurvePoint> = self.points.iter().step_by(stride.max(1)).collect();
        let shifted_nonzero = sample
            .iter()
            .filter(|p| !self.plane_model_value(f.add(p.y, g), p.t).is_zero())
            .count();
        let unit_shift_nonzero = sample
            .iter()
            .filter(|p| !self.plane_model_value(f.add(p.y, Fe::ONE), p.t).is_zero())
            .count();
        PlaneModelReport {
            evaluated: self.points.len(),
            failures,
            control_sampled: sample.len(),
            control_nonzero: shifted_nonzero,
            unit_shift_nonzero,
        }
    }

    /// Zero sets of x, y, t and w over the affine points.
    pub fn verify_coordinate_divisors(&self) -> DivisorReport {
        let f = self.field.as_ref();
        let q = self.params.q;
        let rational = |a: Fe| f.in_subfield(a, q);
        let zeros = |sel: fn(&CurvePoint) -> Fe| -> Vec<&CurvePoint> {
            self.points.iter().filter(|p| sel(p).is_zero()).collect()
        };
        let x_zeros = zeros(|p| p.x);
        let y_zeros = zeros(|p| p.y);
        let t_zeros = zeros(|p| p.t);
        let w_zeros = zeros(|p| p.w);
        let qn = q as usize;
        let x_ok = x_zeros.len() == qn && x_zeros.iter().all(|p| p.t.is_zero() && rational(p.y));
        let y_ok = y_zeros.len() == qn && y_zeros.iter().all(|p| p.t.is_zero() && rational(p.x));
        let t_ok = t_zeros.len() == qn * qn && t_zeros.iter().all(|p| rational(p.x) && rational(p.y));
        let w_ok = w_zeros.len() == 1 && w_zeros[0].x.is_zero() && w_zeros[0].y.is_zero() && w_zeros[0].t.is_zero();
        DivisorReport {
            x_zeros: x_zeros.len(),
            x_ok,
            y_zeros: y_zeros.len(),
            y_ok,
            t_zeros: t_zeros.len(),
            t_ok,
            w_zeros: w_zeros.len(),
            w_ok,
        }
    }

    /// CSV with columns x,y,t,z,w as integer codes, preceded by a metadata header.
    pub fn to_csv(&self, meta: &RunMeta) -> String {
        let mut out = meta.csv_header();
        out.push_str("# order: ascending (x, y, t) integer codes\n");
        out.push_str("x,y,t,z,w\n");
        for p in &self.points {
            let _ = writeln!(out, "{},{},{},{},{}", p.x, p.y, p.t, p.z, p.w);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub fibers: usize,
    pub fiber_size: usize,
    pub histogram: BTreeMap<usize, usize>,
    /// Every point over t = 0 has x, y in F_q.
    pub zero_fiber_rational: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneModelReport {
    pub evaluated: usize,
    pub failures: usize,
    pub control_sampled: usize,
    /// Nonzero values of F(y + g, t) on the sample; must be positive.
    pub control_nonzero: usize,
    /// Nonzero values of F(y + 1, t). F(y + 1, t) = F(y, t) in characteristic 2,
    /// so this is expected to be zero.
    pub unit_shift_nonzero: usize,
}

impl PlaneModelReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.control_nonzero > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorReport {
    pub x_zeros: usize,
    pub x_ok: bool,
    pub y_zeros: usize,
    pub y_ok: bool,
    pub t_zeros: usize,
    pub t_ok: bool,
    pub w_zeros: usize,
    pub w_ok: bool,
}

impl DivisorReport {
    pub fn passed(&self) -> bool {
        self.x_ok && self.y_ok && self.t_ok && self.w_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_family_and_field() {
        let f = Arc::new(FieldContext::gf4096());
        let ree = CurveSpec::new(Family::ReeCover, 1);
        assert_eq!(
            enumerate_points(&ree, f).unwrap_err(),
            PointError::WrongFamily(Family::ReeCover)
        );
        let spec = CurveSpec::new(Family::SuzukiCover, 1);
        assert!(matches!(
            enumerate_points(&spec, Arc::new(FieldContext::gf8())),
            Err(PointError::WrongField { expected: 12, .. })
        ));
    }

    #[test]
    fn origin_is_on_the_curve() {
        let f = Arc::new(FieldContext::gf4096());
        let spec = CurveSpec::new(Family::SuzukiCover, 1);
        let pts = enumerate_points(&spec, f).unwrap();
        let first = pts.points()[0];
        assert_eq!(first, CurvePoint { x: Fe(0), y: Fe(0), t: Fe(0), z: Fe(0), w: Fe(0) });
        assert_eq!(pts.plane_model_value(Fe(0), Fe(0)), Fe::ZERO);
    }
}

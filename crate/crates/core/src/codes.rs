//! One-point AG codes C(D, r P_inf) on the Suzuki cover and their duals C_l.

use std::ops::RangeInclusive;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::basis::{basis_with_table, BasisError, BasisSpec, Evaluator, Monomial, MonomialTable};
use crate::curve::{CurveSpec, Family};
use crate::field::{Fe, FieldContext};
use crate::points::{enumerate_points, PointError, PointSet};
use crate::report::format_ratio_sig;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

/// Significant digits of the relative defect column.
pub const DEFECT_DIGITS: u32 = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("r = {r} >= n = {n}: the evaluation map is not injective, unsupported")]
    Unsupported { r: u64, n: u64 },
    #[error("l = {l} out of range 1..={n}")]
    IndexOutOfRange { l: u64, n: u64 },
    #[error(transparent)]
    Points(#[from] PointError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// Which affine points form the evaluation divisor D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvaluationDivisor {
    /// Every affine F_{q^4}-point, including the q^2 points over t = 0.
    AllAffine,
    /// Affine points with t != 0.
    OffTZero,
}

/// D of the dual one-point codes C_l and of the duality check.
pub const ONE_POINT_DIVISOR: EvaluationDivisor = EvaluationDivisor::AllAffine;
/// D of the multi-point codes supported away from the F_q-rational points.
pub const MULTIPOINT_DIVISOR: EvaluationDivisor = EvaluationDivisor::OffTZero;

impl EvaluationDivisor {
    pub fn columns(&self, points: &PointSet) -> Vec<usize> {
        match self {
            EvaluationDivisor::AllAffine => (0..points.len()).collect(),
            EvaluationDivisor::OffTZero => points.off_t_zero(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EvaluationDivisor::AllAffine => "all-affine",
            EvaluationDivisor::OffTZero => "off-t-zero",
        }
    }
}

/// Parameters of one code. Bounds on d are lower bounds; the true minimum
/// distance is never computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: u64,
    pub k: u64,
    pub rho: Option<u64>,
    /// Goppa designed distance n - deg G of a primal code.
    pub dstar: Option<u64>,
    /// Order bound of a dual code.
    pub dord: Option<u64>,
    /// n + 1 - k - d_bound.
    pub defect_bound: u64,
    /// defect_bound / n to 7 significant digits.
    pub relative_defect: String,
    /// deg G - 2g + 2 for a dual code, for information only.
    pub dual_goppa_bound: Option<i64>,
}

impl CodeParams {
    pub const DORD_CSV_HEADER: &'static str = "n,k,rho,dord,delta,Delta";

    pub fn dord_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.k,
            self.rho.map(|v| v.to_string()).unwrap_or_default(),
            self.dord.map(|v| v.to_string()).unwrap_or_default(),
            self.defect_bound,
            self.relative_defect
        )
    }
}

/// Parameters of C_l = C(D, rho_l P_inf)^perp of length n: k = n - l.
pub fn dual_code_params(semigroup: &NumericalSemigroup, n: u64, l: u64) -> Result<CodeParams, CodeError> {
    if l == 0 || l > n {
        return Err(CodeError::IndexOutOfRange { l, n });
    }
    let rho = semigroup.rho(l)?;
    let dord = semigroup.d_ord(l)?;
    let defect = l + 1 - dord;
    Ok(CodeParams {
        n,
        k: n - l,
        rho: Some(rho),
        dstar: None,
        dord: Some(dord),
        defect_bound: defect,
        relative_defect: format_ratio_sig(defect, n, DEFECT_DIGITS),
        dual_goppa_bound: Some(rho as i64 - 2 * semigroup.genus() as i64 + 2),
    })
}

/// One row per l in `range`, in the order n, k, rho, d_ORD, delta, Delta.
pub fn dord_table(
    semigroup: &NumericalSemigroup,
    n: u64,
    range: RangeInclusive<u64>,
) -> Result<Vec<CodeParams>, CodeError> {
    range.map(|l| dual_code_params(semigroup, n, l)).collect()
}

/// Rows are basis monomials by pole order, columns are points in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub rows: usize,
    pub cols: usize,
    pub row_pole_orders: Vec<u64>,
    data: Vec<Fe>,
}

impl GeneratorMatrix {
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rank(&self, field: &FieldContext) -> usize {
        incremental_rank(field, self.rows, self.cols, |j, v| {
            for (i, slot) in v.iter_mut().enumerate() {
                *slot = self.entry(i, j);
            }
        })
    }

    /// Rows of `self` stacked on top of rows of `other`.
    pub fn stack(&self, other: &GeneratorMatrix) -> GeneratorMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        let mut row_pole_orders = self.row_pole_orders.clone();
        row_pole_orders.extend_from_slice(&other.row_pole_orders);
        GeneratorMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            row_pole_orders,
            data,
        }
    }
}

/// Rank by column-at-a-time elimination, stopping once every row has a pivot.
/// `fill(j, v)` writes column `j` into `v`.
pub fn incremental_rank(
    field: &FieldContext,
    nrows: usize,
    ncols: usize,
    mut fill: impl FnMut(usize, &mut [Fe]),
) -> usize {
    let mut pivots: Vec<(usize, Vec<Fe>)> = Vec::new();
    let mut v = vec![Fe::ZERO; nrows];
    for j in 0..ncols {
        if pivots.len() == nrows {
            break;
        }
        fill(j, &mut v);
        for (p, c) in &pivots {
            let coef = v[*p];
            if !coef.is_zero() {
                field.axpy(&mut v, field.neg(coef), c);
            }
        }
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = field.inv(v[p]).expect("nonzero pivot");
            pivots.push((p, v.iter().map(|&x| field.mul(x, inv)).collect()));
        }
    }
    pivots.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankMethod {
    /// Per-fiber invertibility plus polynomial interpolation counts.
    FiberBlocks,
    /// Elimination on the generator matrix.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub r: u64,
    pub divisor: EvaluationDivisor,
    pub rank: u64,
    /// Number of nongaps <= r, the dimension of L(r P_inf).
    pub dimension: u64,
    pub method: RankMethod,
    pub fibers: usize,
    pub singular_fibers: usize,
}

impl RankCertificate {
    pub fn full_rank(&self) -> bool {
        self.rank == self.dimension
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub r: u64,
    pub divisor: EvaluationDivisor,
    pub columns: usize,
    /// Points of D where t^r vanishes.
    pub zero_diagonal_entries: usize,
    /// Zero entries counted with multiplicity r.
    pub vanishing_multiplicity: u64,
    pub diagonal_invertible: bool,
    pub diagonal_is_identity: bool,
    pub functions_checked: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub n: u64,
    pub genus: u64,
    /// phi = prod over fibers (T - alpha), as the exponents with coefficient 1.
    /// All coefficients lie in F_2 because the set of t-values is Frobenius-stable.
    pub phi_exponents: Vec<u64>,
    /// phi' is a nonzero constant, the condition for div(d phi) = (2g - 2) P_inf.
    pub phi_derivative_constant: bool,
    /// Plain power sums are taken for every nongap s <= max_s.
    pub max_s: u64,
    pub nongaps_checked: usize,
    pub failures: Vec<u64>,
    /// Sums of h_s(P) / phi'(t(P)) for every nongap s <= n + 2g - 2.
    pub twisted_max_s: u64,
    pub twisted_checked: usize,
    pub twisted_failures: Vec<u64>,
    pub r: u64,
    pub r_perp: u64,
    pub k_r: u64,
    pub k_r_perp: u64,
    pub dimension_identity: bool,
    pub seed: u64,
    pub pairs_checked: usize,
    /// Sampled pairs (pole orders) with nonzero plain inner product.
    pub pair_failures: usize,
    pub pair_failure_examples: Vec<(u64, u64)>,
    /// Sampled pairs with nonzero inner product weighted by 1 / phi'.
    pub twisted_pair_failures: usize,
}

impl DualityReport {
    /// C(D, r P)^perp = C(D, r_perp P) as stated: all plain sums vanish.
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.pair_failures == 0 && self.dimension_identity
    }

    /// C(D, r P)^perp = v C(D, r_perp P) with v_P = 1 / phi'(t(P)).
    pub fn twisted_passed(&self) -> bool {
        self.twisted_failures.is_empty() && self.twisted_pair_failures == 0 && self.dimension_identity
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedReport {
    pub rho_small: u64,
    pub rho_large: u64,
    pub rank_small: usize,
    pub rank_large: usize,
    pub rank_stacked: usize,
}

impl NestedReport {
    pub fn contained(&self) -> bool {
        self.rank_stacked == self.rank_large
    }
}

/// Curve, points, Weierstrass semigroup and monomial table of a Suzuki cover.
#[derive(Debug, Clone)]
pub struct CodeContext {
    spec: CurveSpec,
    points: PointSet,
    semigroup: NumericalSemigroup,
    table: MonomialTable,
    pole_orders: [u64; 5],
    genus: u64,
}

impl CodeContext {
    /// S~_8 over GF(2^12).
    pub fn q8() -> Result<Self, CodeError> {
        Self::new(CurveSpec::new(Family::SuzukiCover, 1), Arc::new(FieldContext::gf4096()))
    }

    pub fn new(spec: CurveSpec, field: Arc<FieldContext>) -> Result<Self, CodeError> {
        let points = enumerate_points(&spec, field)?;
        let pole_orders: [u64; 5] = spec
            .pole_orders_u64()
            .and_then(|v| v.try_into().ok())
            .expect("Suzuki cover has five pole orders");
        let genus = spec.genus_u64().expect("genus fits in u64");
        let semigroup = NumericalSemigroup::new(&pole_orders, 0)?;
        let n = points.len() as u64;
        let table = MonomialTable::new(&pole_orders, n + 2 * genus)?;
        Ok(CodeContext {
            spec,
            points,
            semigroup,
            table,
            pole_orders,
            genus,
        })
    }

    pub fn spec(&self) -> &CurveSpec {
        &self.spec
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn field(&self) -> &FieldContext {
        self.points.field()
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn table(&self) -> &MonomialTable {
        &self.table
    }

    pub fn pole_orders(&self) -> &[u64; 5] {
        &self.pole_orders
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Length of the codes on all affine points.
    pub fn n(&self) -> u64 {
        self.points.len() as u64
    }

    pub fn evaluator(&self) -> Evaluator<'_> {
        Evaluator::new(self.field(), self.points.points())
    }

    pub fn basis(&self, rho: u64) -> Result<BasisSpec, CodeError> {
        Ok(basis_with_table(&self.semigroup, &self.table, rho, self.genus)?)
    }

    pub fn monomial(&self, s: u64) -> Result<Monomial, CodeError> {
        Ok(self.table.monomial_for(&self.semigroup, s)?)
    }

    fn check_r(&self, r: u64, divisor: EvaluationDivisor) -> Result<Vec<usize>, CodeError> {
        let cols = divisor.columns(&self.points);
        if r >= cols.len() as u64 {
            return Err(CodeError::Unsupported {
                r,
                n: cols.len() as u64,
            });
        }
        Ok(cols)
    }

    /// Parameters of C(D, r P_inf).
    pub fn one_point_params(&self, r: u64, divisor: EvaluationDivisor) -> Result<CodeParams, CodeError> {
        let n = self.check_r(r, divisor)?.len() as u64;
        let k = self.semigroup.count_up_to(r);
        let dstar = n - r;
        let defect = r + 1 - k;
        Ok(CodeParams {
            n,
            k,
            rho: Some(r),
            dstar: Some(dstar),
            dord: None,
            defect_bound: defect,
            relative_defect: format_ratio_sig(defect, n, DEFECT_DIGITS),
            dual_goppa_bound: None,
        })
    }

    /// Parameters and explicit generator matrix of C(D, r P_inf).
    pub fn one_point_code(
        &self,
        r: u64,
        divisor: EvaluationDivisor,
    ) -> Result<(CodeParams, GeneratorMatrix), CodeError> {
        let params = self.one_point_params(r, divisor)?;
        let basis = self.basis(r)?;
        Ok((params, self.matrix(&basis.monomials, divisor)))
    }

    /// Evaluation matrix of arbitrary monomials on D.
    pub fn matrix(&self, monomials: &[Monomial], divisor: EvaluationDivisor) -> GeneratorMatrix {
        let cols = divisor.columns(&self.points);
        let ev = self.evaluator();
        let data: Vec<Fe> = monomials
            .par_iter()
            .flat_map_iter(|m| ev.row(m, &cols))
            .collect();
        GeneratorMatrix {
            rows: monomials.len(),
            cols: cols.len(),
            row_pole_orders: monomials.iter().map(|m| m.pole_order).collect(),
            data,
        }
    }

    /// Rank of the generator matrix by elimination, columns generated on the fly.
    pub fn direct_rank(&self, r: u64, divisor: EvaluationDivisor) -> Result<RankCertificate, CodeError> {
        let cols = self.check_r(r, divisor)?;
        let basis = self.basis(r)?;
        let ev = self.evaluator();
        let rank = incremental_rank(self.field(), basis.dimension(), cols.len(), |j, v| {
            for (slot, m) in v.iter_mut().zip(&basis.monomials) {
                *slot = ev.eval(m, cols[j]);
            }
        });
        Ok(RankCertificate {
            r,
            divisor,
            rank: rank as u64,
            dimension: basis.dimension() as u64,
            method: RankMethod::Direct,
            fibers: 0,
            singular_fibers: 0,
        })
    }

    /// Rank through the fibers of t.
    ///
    /// With w_i the Apéry set of H with respect to the pole order of t and h_i
    /// the monomial of pole order w_i (free of t), the functions h_i t^j with
    /// w_i + j v(t) <= r are another basis of L(r P_inf), so they generate the
    /// same code. On the fiber t = alpha a codeword reads sum_i p_i(alpha)
    /// h_i(P) with deg p_i <= D_i = (r - w_i) / v(t). When every fiber matrix
    /// [h_i(P)] is invertible, the rank is sum_i min(D_i + 1, #fibers).
    /// Returns `None` if some fiber matrix is singular or has the wrong shape.
    pub fn fiber_rank(&self, r: u64, divisor: EvaluationDivisor) -> Result<Option<RankCertificate>, CodeError> {
        self.check_r(r, divisor)?;
        let vt = self.pole_orders[3];
        let apery = self.semigroup.apery(vt)?;
        let heads: Vec<Monomial> = apery
            .iter()
            .map(|&w| self.monomial(w))
            .collect::<Result<_, _>>()?;
        if heads.iter().any(|m| m.exps[3] != 0) {
            return Err(CodeError::Semigroup(SemigroupError::Inconsistent(
                "Apéry representative involves t".into(),
            )));
        }
        let fibers: Vec<Vec<usize>> = self
            .points
            .fibers()
            .into_iter()
            .filter(|(t, _)| divisor == EvaluationDivisor::AllAffine || !t.is_zero())
            .map(|(_, members)| members)
            .collect();
        let ev = self.evaluator();
        let size = heads.len();
        let singular = fibers
            .par_iter()
            .filter(|members| {
                members.len() != size
                    || incremental_rank(self.field(), size, size, |j, v| {
                        for (slot, h) in v.iter_mut().zip(&heads) {
                            *slot = ev.eval(h, members[j]);
                        }
                    }) != size
            })
            .count();
        if singular > 0 {
            return Ok(None);
        }
        let h = fibers.len() as u64;
        let rank = apery
            .iter()
            .filter(|&&w| w <= r)
            .map(|&w| ((r - w) / vt + 1).min(h))
            .sum();
        Ok(Some(RankCertificate {
            r,
            divisor,
            rank,
            dimension: self.semigroup.count_up_to(r),
            method: RankMethod::FiberBlocks,
            fibers: fibers.len(),
            singular_fibers: 0,
        }))
    }

    /// Fiber certificate when available, direct elimination otherwise.
    pub fn code_rank(&self, r: u64, divisor: EvaluationDivisor) -> Result<RankCertificate, CodeError> {
        match self.fiber_rank(r, divisor)? {
            Some(c) => Ok(c),
            None => self.direct_rank(r, divisor),
        }
    }

    pub fn dual_code_params(&self, l: u64) -> Result<CodeParams, CodeError> {
        dual_code_params(&self.semigroup, self.n(), l)
    }

    pub fn dord_table(&self, range: RangeInclusive<u64>) -> Result<Vec<CodeParams>, CodeError> {
        dord_table(&self.semigroup, self.n(), range)
    }

    /// Scales column j of the generator matrix of C(D, r (q^2+1) P_inf) by t(P_j)^r
    /// and compares with the evaluation of f t^r, on a sample of basis functions f.
    pub fn monomial_equivalence_check(
        &self,
        r: u64,
        divisor: EvaluationDivisor,
        sample: usize,
    ) -> Result<EquivalenceReport, CodeError> {
        let cols = divisor.columns(&self.points);
        let f = self.field();
        let pts = self.points.points();
        let diag: Vec<Fe> = cols.iter().map(|&j| f.pow(pts[j].t, r)).collect();
        let zeros = diag.iter().filter(|d| d.is_zero()).count();
        let q = self.points.params().q;
        let rho = r * (q * q + 1);
        let basis = if rho < cols.len() as u64 {
            self.basis(rho)?.monomials
        } else {
            Vec::new()
        };
        let step = (basis.len() / sample.max(1)).max(1);
        let chosen: Vec<&Monomial> = basis.iter().step_by(step).take(sample).collect();
        let mut t_r = Monomial::ONE;
        t_r.exps[3] = r as u32;
        t_r.pole_order = r * self.pole_orders[3];
        let ev = self.evaluator();
        let mismatches = chosen
            .par_iter()
            .map(|m| {
                let shifted = m.mul(&t_r);
                cols.iter()
                    .zip(&diag)
                    .filter(|(&j, &d)| f.mul(ev.eval(m, j), d) != ev.eval(&shifted, j))
                    .count()
            })
            .sum();
        Ok(EquivalenceReport {
            r,
            divisor,
            columns: cols.len(),
            zero_diagonal_entries: zeros,
            vanishing_multiplicity: zeros as u64 * r,
            diagonal_invertible: zeros == 0,
            diagonal_is_identity: diag.iter().all(|&d| d == Fe::ONE),
            functions_checked: chosen.len(),
            mismatches,
        })
    }

    /// phi(T) = prod (T - alpha) over the t-values, coefficients low to high.
    pub fn fiber_polynomial(&self) -> Vec<Fe> {
        let f = self.field();
        let mut poly = vec![Fe::ONE];
        for (alpha, _) in self.points.fibers() {
            let mut next = vec![Fe::ZERO; poly.len() + 1];
            for (i, &c) in poly.iter().enumerate() {
                next[i + 1] = f.add(next[i + 1], c);
                next[i] = f.sub(next[i], f.mul(c, alpha));
            }
            poly = next;
        }
        poly
    }

    /// Power sums of every basis monomial with pole order <= n + 2g - 2 - v(x),
    /// the same sums weighted by 1 / phi'(t(P)), the dimension identity
    /// k(r) + k(r_perp) = n for r = 2g, and `pairs` random inner products
    /// between L(r P_inf) and L(r_perp P_inf).
    pub fn castle_duality_check(&self, seed: u64, pairs: usize) -> Result<DualityReport, CodeError> {
        let f = self.field();
        let n = self.n();
        let g = self.genus;
        let top = n + 2 * g - 2;
        let max_s = top - self.pole_orders[0];

        let phi = self.fiber_polynomial();
        let dphi: Vec<Fe> = (1..phi.len())
            .map(|i| mul_int(f, phi[i], i as u64))
            .collect();
        let phi_derivative_constant = !dphi[0].is_zero() && dphi[1..].iter().all(|c| c.is_zero());
        let pts = self.points.points();
        let weights: Vec<Fe> = pts
            .iter()
            .map(|p| {
                let v = horner(f, &dphi, p.t);
                f.inv(v).expect("phi has simple roots")
            })
            .collect();

        let ev = self.evaluator();
        let nongaps: Vec<u64> = (0..=top).filter(|&s| self.semigroup.contains(s)).collect();
        let sums: Vec<(u64, bool, bool)> = nongaps
            .par_iter()
            .map(|&s| {
                let m = self.table.lex_smallest(s).expect("nongap is representable");
                let (mut plain, mut twisted) = (Fe::ZERO, Fe::ZERO);
                for (j, &wt) in weights.iter().enumerate() {
                    let v = ev.eval(&m, j);
                    plain = f.add(plain, v);
                    twisted = f.add(twisted, f.mul(v, wt));
                }
                (s, plain.is_zero(), twisted.is_zero())
            })
            .collect();
        let failures: Vec<u64> = sums.iter().filter(|r| r.0 <= max_s && !r.1).map(|r| r.0).collect();
        let twisted_failures: Vec<u64> = sums.iter().filter(|r| !r.2).map(|r| r.0).collect();

        let r = 2 * g;
        let r_perp = top - r;
        let k_r = self.semigroup.count_up_to(r);
        let k_r_perp = self.semigroup.count_up_to(r_perp);
        let small = self.basis(r)?.monomials;
        let large = self.basis(r_perp)?.monomials;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draws: Vec<(usize, usize)> = (0..pairs)
            .map(|_| (rng.gen_range(0..small.len()), rng.gen_range(0..large.len())))
            .collect();
        let dots: Vec<(u64, u64, bool, bool)> = draws
            .par_iter()
            .map(|&(i, j)| {
                let (a, b) = (&small[i], &large[j]);
                let (mut plain, mut twisted) = (Fe::ZERO, Fe::ZERO);
                for (p, &wt) in weights.iter().enumerate() {
                    let v = f.mul(ev.eval(a, p), ev.eval(b, p));
                    plain = f.add(plain, v);
                    twisted = f.add(twisted, f.mul(v, wt));
                }
                (a.pole_order, b.pole_order, plain.is_zero(), twisted.is_zero())
            })
            .collect();
        let pair_failures = dots.iter().filter(|d| !d.2).count();
        let mut pair_failure_examples: Vec<(u64, u64)> =
            dots.iter().filter(|d| !d.2).map(|d| (d.0, d.1)).collect();
        pair_failure_examples.sort_unstable();
        pair_failure_examples.dedup();
        pair_failure_examples.truncate(10);
        Ok(DualityReport {
            n,
            genus: g,
            phi_exponents: (0..phi.len() as u64).filter(|&i| !phi[i as usize].is_zero()).collect(),
            phi_derivative_constant,
            max_s,
            nongaps_checked: sums.iter().filter(|r| r.0 <= max_s).count(),
            failures,
            twisted_max_s: top,
            twisted_checked: sums.len(),
            twisted_failures,
            r,
            r_perp,
            k_r,
            k_r_perp,
            dimension_identity: k_r + k_r_perp == n,
            seed,
            pairs_checked: pairs,
            pair_failures,
            pair_failure_examples,
            twisted_pair_failures: dots.iter().filter(|d| !d.3).count(),
        })
    }

    /// Row-space containment C(D, rho_small P) in C(D, rho_large P) by elimination.
    pub fn nested_check(&self, rho_small: u64, rho_large: u64) -> Result<NestedReport, CodeError> {
        let (_, small) = self.one_point_code(rho_small, ONE_POINT_DIVISOR)?;
        let (_, large) = self.one_point_code(rho_large, ONE_POINT_DIVISOR)?;
        let f = self.field();
        Ok(NestedReport {
            rho_small,
            rho_large,
            rank_small: small.rank(f),
            rank_large: large.rank(f),
            rank_stacked: large.stack(&small).rank(f),
        })
    }
}

/// c * k for an integer k, i.e. c added to itself k times.
fn mul_int(f: &FieldContext, c: Fe, k: u64) -> Fe {
    let k = (k % f.characteristic() as u64) as u32;
    (0..k).fold(Fe::ZERO, |acc, _| f.add(acc, c))
}

fn horner(f: &FieldContext, coeffs: &[Fe], x: Fe) -> Fe {
    coeffs.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
}

//! Quantum (CSS) and unit-memory convolutional code parameters derived from
//! the one-point codes.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::report::format_ratio_sig;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

/// Significant digits of the relative quantum defect column.
pub const QUANTUM_DEFECT_DIGITS: u32 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DerivedError {
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

fn invalid(msg: impl Into<String>) -> DerivedError {
    DerivedError::Invalid(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuantumRegime {
    /// 2g <= l <= 3g - 2 with s = n - 2l.
    Table,
    /// 3g - 1 <= l <= n - g and 1 <= s <= n - 2l.
    General,
}

/// Parameters of an [[n, s, d]] quantum code; `d_bound` is only a lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuantumParams {
    pub n: u64,
    pub s: u64,
    pub d_bound: u64,
    /// n - s - 2 d_bound + 2.
    pub defect_bound: u64,
    pub delta_q_bound: String,
    pub l: Option<u64>,
    pub regime: Option<QuantumRegime>,
    /// d_ORD(C_l), the first branch of the CSS bound.
    pub dord_branch: Option<u64>,
    /// n - rho_{l+s}, the designed distance of C(D, rho_{l+s} P_inf).
    pub goppa_branch: Option<u64>,
}

impl QuantumParams {
    pub const CSV_HEADER: &'static str = "n,s,d_bound,DeltaQ_bound";

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{}", self.n, self.s, self.d_bound, self.delta_q_bound)
    }

    fn new(n: u64, s: u64, d_bound: u64) -> Result<Self, DerivedError> {
        let defect = (n + 2)
            .checked_sub(s + 2 * d_bound)
            .ok_or_else(|| invalid(format!("quantum Singleton bound violated: s + 2d = {} > n + 2", s + 2 * d_bound)))?;
        Ok(QuantumParams {
            n,
            s,
            d_bound,
            defect_bound: defect,
            delta_q_bound: format_ratio_sig(defect, n, QUANTUM_DEFECT_DIGITS),
            l: None,
            regime: None,
            dord_branch: None,
            goppa_branch: None,
        })
    }
}

/// CSS code from C(D, A) in C(D, B) with A = sum a_i P_i <= B = sum b_i P_i.
pub fn css_general_t_point(genus: u64, n: u64, a: &[u64], b: &[u64]) -> Result<QuantumParams, DerivedError> {
    if a.is_empty() || a.len() != b.len() {
        return Err(invalid("a and b must be nonempty and of equal length"));
    }
    if let Some(i) = (0..a.len()).find(|&i| a[i] > b[i]) {
        return Err(invalid(format!("a_{} = {} > b_{} = {}", i + 1, a[i], i + 1, b[i])));
    }
    let (sa, sb): (u64, u64) = (a.iter().sum(), b.iter().sum());
    let canon = (2 * genus).saturating_sub(2);
    if sa <= canon {
        return Err(invalid(format!("2g - 2 < sum a fails: {sa} <= {canon}")));
    }
    if sa >= sb {
        return Err(invalid(format!("sum a < sum b fails: {sa} >= {sb}")));
    }
    if sb >= n {
        return Err(invalid(format!("sum b < n fails: {sb} >= {n}")));
    }
    let d = (n - sb).min(sa - canon);
    let mut out = QuantumParams::new(n, sb - sa, d)?;
    out.goppa_branch = Some(sa - canon);
    Ok(out)
}

/// CSS code from the nested duals C_{l+s} in C_l of length n; d_bound = l + 1 - g.
pub fn css_nested_dual(semigroup: &NumericalSemigroup, n: u64, l: u64, s: u64) -> Result<QuantumParams, DerivedError> {
    let g = semigroup.genus();
    let regime = if l + 1 >= 3 * g && l + g <= n {
        if s < 1 || s + 2 * l > n {
            return Err(invalid(format!("s in [1, n - 2l] fails: s = {s}, n - 2l = {}", n as i64 - 2 * l as i64)));
        }
        QuantumRegime::General
    } else if l >= 2 * g && l + 2 <= 3 * g {
        if s + 2 * l != n {
            return Err(invalid(format!("table regime requires s = n - 2l = {}, got {s}", n as i64 - 2 * l as i64)));
        }
        QuantumRegime::Table
    } else {
        return Err(invalid(format!("l = {l} outside [2g, n - g] = [{}, {}]", 2 * g, n.saturating_sub(g))));
    };
    let d_bound = l + 1 - g;
    let dord = semigroup.d_ord(l)?;
    let goppa = n
        .checked_sub(semigroup.rho_unbounded(l + s))
        .ok_or_else(|| invalid("rho_{l+s} exceeds n"))?;
    let mut out = QuantumParams::new(n, s, d_bound)?;
    out.l = Some(l);
    out.regime = Some(regime);
    out.dord_branch = Some(dord);
    out.goppa_branch = Some(goppa);
    Ok(out)
}

/// Rows s = n - 2l for l = 2g, ..., 3g + 1, the printed extent. The last three
/// rows (l >= 3g - 1) fall in the general regime.
pub fn quantum_table(semigroup: &NumericalSemigroup, n: u64) -> Result<Vec<QuantumParams>, DerivedError> {
    let g = semigroup.genus();
    (2 * g..=3 * g + 1)
        .map(|l| css_nested_dual(semigroup, n, l, n - 2 * l))
        .collect()
}

pub fn quantum_csv(rows: &[QuantumParams], header: &str) -> String {
    let mut out = header.to_string();
    out.push_str(QuantumParams::CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{}", r.csv_row());
    }
    out
}

/// (n, k - s, s; 1, d_f) unit-memory convolutional code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvParams {
    pub n: u64,
    pub dimension: u64,
    pub degree: u64,
    pub memory: u64,
    pub rho: u64,
    pub l: u64,
    /// k = rho + 1 - g.
    pub k: u64,
    /// d_ORD(C_l).
    pub df_bound: u64,
    /// l + 1 - g, stated for l >= 3g - 1.
    pub corollary_bound: Option<u64>,
}

pub fn conv_params(semigroup: &NumericalSemigroup, n: u64, rho: u64, s: u64) -> Result<ConvParams, DerivedError> {
    let g = semigroup.genus();
    let canon = (2 * g).saturating_sub(2);
    if rho <= canon || rho >= n {
        return Err(invalid(format!("2g - 2 < rho < n fails: rho = {rho}, interval ({canon}, {n})")));
    }
    let l = semigroup.index_of(rho)?;
    let k = rho + 1 - g;
    if s < 1 || 2 * s > k {
        return Err(invalid(format!("1 <= s <= k/2 fails: s = {s}, k = {k}")));
    }
    let df = semigroup.d_ord(l)?;
    Ok(ConvParams {
        n,
        dimension: k - s,
        degree: s,
        memory: 1,
        rho,
        l,
        k,
        df_bound: df,
        corollary_bound: (l + 1 >= 3 * g).then(|| l + 1 - g),
    })
}

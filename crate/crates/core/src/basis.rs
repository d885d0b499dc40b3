//! Monomial bases of L(rho P_inf) in the coordinate functions x, y, z, t, w.
//!
//! Each nongap `s` is represented by the lexicographically smallest exponent
//! vector `(a, b, c, d, e)` with `a px + b py + c pz + d pt + e pw = s`.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Fe, FieldContext};
use crate::points::CurvePoint;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

pub const COORDINATE_NAMES: [&str; 5] = ["x", "y", "z", "t", "w"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error("{0} is not a member of the semigroup")]
    NotMember(u64),
    #[error("expected 5 positive pole orders, got {0:?}")]
    BadPoleOrders(Vec<u64>),
    #[error("{s} is a member of the semigroup but not a combination of the pole orders {pole_orders:?}")]
    NotRepresentable { s: u64, pole_orders: Vec<u64> },
    #[error("semigroup genus {semigroup_genus} differs from curve genus {curve_genus}; refusing to certify a basis for rho = {rho} >= 2g - 1")]
    Uncertified {
        rho: u64,
        semigroup_genus: u64,
        curve_genus: u64,
    },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

/// x^a y^b z^c t^d w^e.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub exps: [u32; 5],
    pub pole_order: u64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; 5],
        pole_order: 0,
    };

    pub fn new(exps: [u32; 5], pole_orders: &[u64; 5]) -> Self {
        let pole_order = exps.iter().zip(pole_orders).map(|(&e, &p)| e as u64 * p).sum();
        Monomial { exps, pole_order }
    }

    /// Product; pole orders add.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Monomial {
            exps,
            pole_order: self.pole_order + other.pole_order,
        }
    }

    /// Direct evaluation by repeated exponentiation.
    pub fn evaluate(&self, field: &FieldContext, p: &CurvePoint) -> Fe {
        p.coords()
            .iter()
            .zip(self.exps)
            .fold(Fe::ONE, |acc, (&c, e)| field.mul(acc, field.pow(c, e as u64)))
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = COORDINATE_NAMES
            .iter()
            .zip(self.exps)
            .filter(|(_, e)| *e > 0)
            .map(|(n, e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Suffix-reachability table: `reach[i][v]` says `v` is a combination of
/// `pole_orders[i..]`.
#[derive(Debug, Clone)]
pub struct MonomialTable {
    pole_orders: [u64; 5],
    bound: u64,
    reach: Vec<Vec<bool>>,
}

impl MonomialTable {
    pub fn new(pole_orders: &[u64], bound: u64) -> Result<Self, BasisError> {
        let po: [u64; 5] = pole_orders
            .try_into()
            .map_err(|_| BasisError::BadPoleOrders(pole_orders.to_vec()))?;
        if po.contains(&0) {
            return Err(BasisError::BadPoleOrders(pole_orders.to_vec()));
        }
        let len = bound as usize + 1;
        let mut reach = vec![vec![false; len]; 6];
        reach[5][0] = true;
        for i in (0..5).rev() {
            let step = po[i] as usize;
            let (head, tail) = reach.split_at_mut(i + 1);
            let (row, next) = (&mut head[i], &tail[0]);
            for v in 0..len {
                row[v] = next[v] || (v >= step && row[v - step]);
            }
        }
        Ok(MonomialTable {
            pole_orders: po,
            bound,
            reach,
        })
    }

    pub fn pole_orders(&self) -> &[u64; 5] {
        &self.pole_orders
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn representable(&self, s: u64) -> bool {
        s <= self.bound && self.reach[0][s as usize]
    }

    /// Lexicographically smallest exponent vector for `s`, if any.
    pub fn lex_smallest(&self, s: u64) -> Option<Monomial> {
        if !self.representable(s) {
            return None;
        }
        let mut rem = s;
        let mut exps = [0u32; 5];
        for i in 0..5 {
            let p = self.pole_orders[i];
            let mut a = 0u64;
            while !self.reach[i + 1][(rem - a * p) as usize] {
                a += 1;
            }
            exps[i] = a as u32;
            rem -= a * p;
        }
        debug_assert_eq!(rem, 0);
        Some(Monomial {
            exps,
            pole_order: s,
        })
    }

    /// As [`lex_smallest`](Self::lex_smallest), checked against semigroup membership.
    pub fn monomial_for(&self, semigroup: &NumericalSemigroup, s: u64) -> Result<Monomial, BasisError> {
        if !semigroup.contains(s) {
            return Err(BasisError::NotMember(s));
        }
        if s > self.bound {
            return Err(SemigroupError::Horizon {
                what: "pole order",
                requested: s,
                bound: self.bound,
            }
            .into());
        }
        self.lex_smallest(s).ok_or_else(|| BasisError::NotRepresentable {
            s,
            pole_orders: self.pole_orders.to_vec(),
        })
    }
}

/// One-shot version of [`MonomialTable::monomial_for`].
pub fn monomial_for(semigroup: &NumericalSemigroup, pole_orders: &[u64], s: u64) -> Result<Monomial, BasisError> {
    MonomialTable::new(pole_orders, s)?.monomial_for(semigroup, s)
}

/// One monomial per nongap `<= rho`, ascending by pole order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisSpec {
    pub rho: u64,
    pub monomials: Vec<Monomial>,
}

impl BasisSpec {
    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    /// `a,b,c,d,e,pole_order` rows.
    pub fn to_csv(&self, header: &str) -> String {
        let mut out = header.to_string();
        out.push_str("a,b,c,d,e,pole_order\n");
        for m in &self.monomials {
            let [a, b, c, d, e] = m.exps;
            let _ = writeln!(out, "{a},{b},{c},{d},{e},{}", m.pole_order);
        }
        out
    }
}

/// Monomial basis of L(rho P_inf). For `rho >= 2g - 1` the semigroup genus must
/// match the curve genus, otherwise the count is not known to be the dimension.
pub fn basis(
    semigroup: &NumericalSemigroup,
    pole_orders: &[u64],
    rho: u64,
    curve_genus: u64,
) -> Result<BasisSpec, BasisError> {
    let table = MonomialTable::new(pole_orders, rho)?;
    basis_with_table(semigroup, &table, rho, curve_genus)
}

pub fn basis_with_table(
    semigroup: &NumericalSemigroup,
    table: &MonomialTable,
    rho: u64,
    curve_genus: u64,
) -> Result<BasisSpec, BasisError> {
    if curve_genus > 0 && rho + 1 >= 2 * curve_genus && semigroup.genus() != curve_genus {
        return Err(BasisError::Uncertified {
            rho,
            semigroup_genus: semigroup.genus(),
            curve_genus,
        });
    }
    let monomials = (0..=rho)
        .filter(|&s| semigroup.contains(s))
        .map(|s| table.monomial_for(semigroup, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BasisSpec { rho, monomials })
}

/// Per-point discrete logs of the five coordinates, for fast monomial evaluation.
#[derive(Debug, Clone)]
pub struct Evaluator<'a> {
    field: &'a FieldContext,
    order: u64,
    // logs[j][i] = log of coordinate i at point j; zero_mask bit i set when it is 0.
    logs: Vec<[u32; 5]>,
    zero_mask: Vec<u8>,
}

impl<'a> Evaluator<'a> {
    pub fn new(field: &'a FieldContext, points: &[CurvePoint]) -> Self {
        let mut logs = Vec::with_capacity(points.len());
        let mut zero_mask = Vec::with_capacity(points.len());
        for p in points {
            let mut l = [0u32; 5];
            let mut mask = 0u8;
            for (i, c) in p.coords().iter().enumerate() {
                match field.log(*c) {
                    Some(v) => l[i] = v,
                    None => mask |= 1 << i,
                }
            }
            logs.push(l);
            zero_mask.push(mask);
        }
        Evaluator {
            field,
            order: field.multiplicative_order() as u64,
            logs,
            zero_mask,
        }
    }

    pub fn len(&self) -> usize {
        self.logs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.logs.is_empty()
    }

    pub fn field(&self) -> &FieldContext {
        self.field
    }

    /// Bit i set when exponent i is positive.
    #[inline]
    fn support(mon: &Monomial) -> u8 {
        mon.exps
            .iter()
            .enumerate()
            .fold(0u8, |m, (i, &e)| if e > 0 { m | (1 << i) } else { m })
    }

    /// Discrete log of the monomial at point `j`, or `None` when it vanishes there.
    #[inline]
    pub fn log_at(&self, mon: &Monomial, j: usize) -> Option<u64> {
        if self.zero_mask[j] & Self::support(mon) != 0 {
            return None;
        }
        let l = &self.logs[j];
        let sum: u64 = (0..5).map(|i| mon.exps[i] as u64 * l[i] as u64).sum();
        Some(sum % self.order)
    }

    #[inline]
    pub fn eval(&self, mon: &Monomial, j: usize) -> Fe {
        match self.log_at(mon, j) {
            Some(l) => self.field.exp(l),
            None => Fe::ZERO,
        }
    }

    /// Evaluations at the given point indices.
    pub fn row(&self, mon: &Monomial, columns: &[usize]) -> Vec<Fe> {
        columns.iter().map(|&j| self.eval(mon, j)).collect()
    }

    /// Sum of the monomial over the given points.
    pub fn power_sum(&self, mon: &Monomial, columns: &[usize]) -> Fe {
        let f = self.field;
        columns.iter().fold(Fe::ZERO, |acc, &j| f.add(acc, self.eval(mon, j)))
    }
}

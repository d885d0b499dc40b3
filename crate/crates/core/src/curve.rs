//! Closed-form data for the Suzuki and Ree curves and their cyclic covers
//! `t^m = x^q ± x`.
//!
//! Every quantity is an arbitrary-precision integer; the Ree-family numbers
//! leave the 64-bit range already at s = 2.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Suzuki,
    Ree,
    SuzukiCover,
    ReeCover,
}

impl Family {
    pub fn characteristic(self) -> u32 {
        match self {
            Family::Suzuki | Family::SuzukiCover => 2,
            Family::Ree | Family::ReeCover => 3,
        }
    }

    pub fn is_cover(self) -> bool {
        matches!(self, Family::SuzukiCover | Family::ReeCover)
    }

    pub fn base(self) -> Family {
        match self {
            Family::Suzuki | Family::SuzukiCover => Family::Suzuki,
            Family::Ree | Family::ReeCover => Family::Ree,
        }
    }

    pub fn cover(self) -> Family {
        match self {
            Family::Suzuki | Family::SuzukiCover => Family::SuzukiCover,
            Family::Ree | Family::ReeCover => Family::ReeCover,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Suzuki => "suzuki",
            Family::Ree => "ree",
            Family::SuzukiCover => "suzuki-cover",
            Family::ReeCover => "ree-cover",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "suzuki" => Ok(Family::Suzuki),
            "ree" => Ok(Family::Ree),
            "suzuki-cover" | "suzukicover" => Ok(Family::SuzukiCover),
            "ree-cover" | "reecover" => Ok(Family::ReeCover),
            other => Err(format!("unknown curve family {other:?}")),
        }
    }
}

fn ser_big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// A named pole order at the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoleOrder {
    pub function: &'static str,
    #[serde(serialize_with = "ser_big")]
    pub order: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveSpec {
    pub family: Family,
    pub s: u32,
    pub p: u32,
    #[serde(serialize_with = "ser_big")]
    pub q0: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub q: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub m: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub genus: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub rational_points: BigUint,
    /// The curve is maximal over F_{q^e} for this e.
    pub maximality_exponent: u32,
    pub infinity_pole_orders: Vec<PoleOrder>,
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// Exact halving; panics if the argument is odd.
fn half(v: BigUint) -> BigUint {
    let (h, r) = v.div_rem(&big(2));
    assert!(r.is_zero(), "genus numerator must be even");
    h
}

impl CurveSpec {
    pub fn new(family: Family, s: u32) -> Self {
        assert!(s >= 1, "s must be at least 1");
        let p = family.characteristic();
        let q0 = BigUint::from(p).pow(s);
        let q = BigUint::from(p) * &q0 * &q0;
        let cover_m = match family.base() {
            Family::Suzuki => &q - big(2) * &q0 + big(1),
            _ => &q - big(3) * &q0 + big(1),
        };
        let q2 = &q * &q;
        let q3 = &q2 * &q;
        let q4 = &q3 * &q;
        let (genus, rational_points, maximality_exponent, poles) = match family {
            Family::Suzuki => (
                &q0 * (&q - big(1)),
                &q2 + big(1),
                4,
                vec![
                    ("x", q.clone()),
                    ("y", &q + &q0),
                    ("z", &q + big(2) * &q0),
                    ("w", &q + big(2) * &q0 + big(1)),
                ],
            ),
            Family::Ree => (
                half(big(3) * &q0 * (&q - big(1)) * (&q + &q0 + big(1))),
                &q3 + big(1),
                6,
                vec![
                    ("x", q2.clone()),
                    ("y", &q * (&q + &q0)),
                    ("z", &q * (&q + big(2) * &q0)),
                ],
            ),
            Family::SuzukiCover => (
                half(&q3 + &q - big(2) * &q2),
                &q2 + big(1),
                4,
                vec![
                    ("x", &q2 - big(2) * &q * &q0 + &q),
                    ("y", &q2 - &q * &q0 + &q0),
                    ("z", &q2 - &q + big(2) * &q0),
                    ("t", q2.clone()),
                    ("w", &q2 + big(1)),
                ],
            ),
            Family::ReeCover => (
                half(&q4 + &q - big(2) * &q3),
                &q3 + big(1),
                6,
                vec![
                    ("x", &cover_m * &q2),
                    ("y", &cover_m * &q * (&q + &q0)),
                    ("z", &cover_m * &q * (&q + big(2) * &q0)),
                    ("t", q3.clone()),
                ],
            ),
        };
        let m = if family.is_cover() { cover_m } else { big(1) };
        CurveSpec {
            family,
            s,
            p,
            q0,
            q,
            m,
            genus,
            rational_points,
            maximality_exponent,
            infinity_pole_orders: poles
                .into_iter()
                .map(|(function, order)| PoleOrder { function, order })
                .collect(),
        }
    }

    pub fn q_u64(&self) -> u64 {
        self.q.to_u64().expect("q fits in u64")
    }

    pub fn q0_u64(&self) -> u64 {
        self.q0.to_u64().expect("q0 fits in u64")
    }

    pub fn m_u64(&self) -> u64 {
        self.m.to_u64().expect("m fits in u64")
    }

    pub fn genus_u64(&self) -> Option<u64> {
        self.genus.to_u64()
    }

    /// Pole orders at infinity as u64, if they all fit.
    pub fn pole_orders_u64(&self) -> Option<Vec<u64>> {
        self.infinity_pole_orders
            .iter()
            .map(|p| p.order.to_u64())
            .collect()
    }

    /// Number of F_{q^e}-rational points predicted by maximality, e the maximality exponent.
    pub fn maximal_point_count(&self) -> BigUint {
        let e = self.maximality_exponent;
        let field = self.q.pow(e);
        let root = self.q.pow(e / 2);
        field + big(1) + big(2) * &self.genus * root
    }

    /// Riemann-Hurwitz for the cyclic cover over the base curve, with the
    /// different contributed only by the powers of the cover generator, each
    /// of which fixes exactly the F_q-rational points.
    pub fn hurwitz_quotient_check(&self) -> HurwitzReport {
        let base = CurveSpec::new(self.family.base(), self.s);
        let two = BigInt::from(2);
        let lhs = two.clone() * BigInt::from(self.genus.clone()) - &two;
        let m = BigInt::from(self.m.clone());
        let base_term = m.clone() * (two.clone() * BigInt::from(base.genus.clone()) - &two);
        let different = if self.family.is_cover() {
            (m.clone() - BigInt::one()) * BigInt::from(self.rational_points.clone())
        } else {
            BigInt::zero()
        };
        let rhs = base_term.clone() + &different;
        HurwitzReport {
            family: self.family,
            q: self.q.to_string(),
            lhs: lhs.to_string(),
            base_term: base_term.to_string(),
            different: different.to_string(),
            rhs: rhs.to_string(),
            holds: lhs == rhs,
        }
    }

    /// Order of the full automorphism group of a cover, and of the subgroup of
    /// code automorphisms it induces over the evaluation field F_{q^e}.
    pub fn aut_orders(&self) -> Option<AutOrders> {
        if !self.family.is_cover() {
            return None;
        }
        let (simple, e) = match self.family {
            Family::SuzukiCover => (
                (&self.q * &self.q + big(1)) * &self.q * &self.q * (&self.q - big(1)),
                4u32,
            ),
            _ => (
                (self.q.pow(3) + big(1)) * self.q.pow(3) * (&self.q - big(1)),
                6u32,
            ),
        };
        let curve_aut_order = &simple * &self.m;
        // Aut(F_{p^d}) has order d, where q^e = p^(e(2s+1)).
        let field_automorphisms = big(e as u64 * (2 * self.s as u64 + 1));
        let field_units = self.q.pow(e) - big(1);
        let code_aut_subgroup_order = &curve_aut_order * &field_automorphisms * &field_units;
        Some(AutOrders {
            simple_group_order: simple,
            curve_aut_order,
            field_automorphisms,
            field_units,
            code_aut_subgroup_order,
        })
    }

    /// Open interval of r where the multi-point dimension is deg(G) + 1 - g.
    pub fn multipoint_interval(&self) -> (BigUint, BigUint) {
        let q = &self.q;
        let upper = match self.family.base() {
            Family::Suzuki => q.pow(3) - q.pow(2),
            _ => q.pow(4) - q.pow(3),
        };
        (q - big(2), upper)
    }

    /// Parameters of C(D, r * sum of F_q-rational points), D the remaining
    /// F_{q^e}-rational points.
    pub fn multipoint_params(&self, r: u64) -> MultipointParams {
        assert!(self.family.is_cover(), "multi-point codes are defined on the covers");
        let q = &self.q;
        let (n, per_point) = match self.family {
            Family::SuzukiCover => (q.pow(5) - q.pow(4) + q.pow(3) - q.pow(2), q.pow(2) + big(1)),
            _ => (q.pow(7) - q.pow(6) + q.pow(4) - q.pow(3), q.pow(3) + big(1)),
        };
        let deg_g = big(r) * per_point;
        let (lo, hi) = self.multipoint_interval();
        let rb = big(r);
        let valid = rb > lo && rb < hi;
        let k = if valid {
            Some(BigInt::from(deg_g.clone()) + BigInt::one() - BigInt::from(self.genus.clone()))
        } else {
            None
        };
        let dstar = BigInt::from(n.clone()) - BigInt::from(deg_g.clone());
        MultipointParams {
            family: self.family,
            q: q.to_string(),
            r,
            n: n.to_string(),
            deg_g: deg_g.to_string(),
            k: k.map(|v| v.to_string()),
            dstar: dstar.to_string(),
            valid,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HurwitzReport {
    pub family: Family,
    pub q: String,
    /// 2g - 2 of the cover.
    pub lhs: String,
    /// m (2 g_base - 2).
    pub base_term: String,
    /// (m - 1) times the number of F_q-rational points.
    pub different: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutOrders {
    pub simple_group_order: BigUint,
    pub curve_aut_order: BigUint,
    pub field_automorphisms: BigUint,
    pub field_units: BigUint,
    pub code_aut_subgroup_order: BigUint,
}

/// Multi-point code parameters; `k` is `None` when r lies outside the
/// interval where Riemann-Roch gives the dimension directly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultipointParams {
    pub family: Family,
    pub q: String,
    pub r: u64,
    pub n: String,
    pub deg_g: String,
    pub k: Option<String>,
    pub dstar: String,
    pub valid: bool,
}

impl MultipointParams {
    pub const CSV_HEADER: &'static str = "family,q,r,n,k,dstar,valid";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.family.name(),
            self.q,
            self.r,
            self.n,
            self.k.as_deref().unwrap_or(""),
            self.dstar,
            self.valid
        )
    }
}

/// Tables of fixed-point contributions i(sigma) for the cover automorphism
/// groups, kept as documentation; only the rows for powers of the cover
/// generator enter [`CurveSpec::hurwitz_quotient_check`].
pub mod contributions {
    /// (element class, i(sigma), i(sigma tau^k)) for the Suzuki cover.
    pub const SUZUKI_COVER: &[(&str, &str, &str)] = &[
        ("tau^k, k = 1..m-1", "q^2 + 1", "-"),
        ("o(sigma) = 2", "m(2q0 + 1) + 1", "1"),
        ("o(sigma) = 4", "m + 1", "1"),
        ("o(sigma) | q - 1", "2", "2"),
        ("o(sigma) | q + 2q0 + 1", "0", "0"),
        ("o(sigma) | q - 2q0 + 1", "0", "4m for one k, else 0"),
    ];

    /// Same for the Ree cover.
    pub const REE_COVER: &[(&str, &str, &str)] = &[
        ("tau^k, k = 1..m-1", "q^3 + 1", "-"),
        ("o(sigma) = 3, central", "m(q + 3q0 + 1) + 1", "1"),
        ("o(sigma) = 3, not central", "m(3q0 + 1) + 1", "1"),
        ("o(sigma) = 9", "m + 1", "1"),
        ("o(sigma) = 2", "q + 1", "q + 1"),
        ("o(sigma) = 6", "1", "1"),
        ("o(sigma) | q - 1, != 2", "2", "2"),
        ("o(sigma) | q + 1, != 2", "0", "0"),
        ("o(sigma) | q + 3q0 + 1", "0", "0"),
        ("o(sigma) | q - 3q0 + 1", "0", "6m for one k, else 0"),
    ];
}

//! Exact arithmetic in GF(p^k) for p in {2, 3}.
//!
//! Elements are stored as their integer code `sum(coeff_i * p^i)` over the
//! polynomial basis `1, x, ..., x^(k-1)` modulo a fixed irreducible modulus.
//! Multiplication, inversion and powering go through discrete-log tables that
//! are built eagerly when the context is constructed.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Modulus of GF(2^3): x^3 + x + 1 (coefficients little-endian).
pub const MODULUS_GF8: [u32; 4] = [1, 1, 0, 1];
/// Modulus of GF(2^12): x^12 + x^6 + x^4 + x + 1.
pub const MODULUS_GF4096: [u32; 13] = [1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1];
/// Modulus of GF(3^3): x^3 + 2x + 1.
pub const MODULUS_GF27: [u32; 4] = [1, 2, 0, 1];
/// Modulus of GF(2^20): x^20 + x^3 + 1. Only used by the slow q = 32 mode.
pub const MODULUS_GF2_20: [u32; 21] = [
    1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
];

const MAX_DEGREE: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported characteristic {0}: only 2 and 3 are supported")]
    UnsupportedCharacteristic(u32),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus {modulus} is reducible: divisible by {factor}")]
    Reducible { modulus: String, factor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
}

/// A field element, identified by its integer code.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sign in the additive map `y -> y^q ± y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// The field GF(p^k) together with its log/antilog tables.
#[derive(Clone)]
pub struct FieldContext {
    p: u32,
    k: u32,
    size: u32,
    modulus: Vec<u32>,
    generator: Fe,
    // exp has length 2 * (size - 1) so that log[a] + log[b] never needs a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus_string())
            .field("generator", &self.generator)
            .finish()
    }
}

impl FieldContext {
    /// Builds GF(p^k) for a monic modulus given as little-endian coefficients.
    pub fn new(p: u32, k: u32, modulus: &[u32]) -> Result<Self, FieldError> {
        if p != 2 && p != 3 {
            return Err(FieldError::UnsupportedCharacteristic(p));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(FieldError::BadModulus(format!(
                "degree {k} outside 1..={MAX_DEGREE}"
            )));
        }
        if modulus.len() != k as usize + 1 {
            return Err(FieldError::BadModulus(format!(
                "expected {} coefficients for degree {k}, got {}",
                k + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(FieldError::BadModulus(format!(
                "coefficients must lie in [0, {p})"
            )));
        }
        if modulus[k as usize] != 1 {
            return Err(FieldError::BadModulus("modulus is not monic".into()));
        }
        let poly = Poly::new(p, modulus.iter().map(|&c| c as u8).collect());
        if let Some(factor) = poly.smallest_factor() {
            return Err(FieldError::Reducible {
                modulus: poly.to_string(),
                factor: factor.to_string(),
            });
        }

        let size = p.pow(k);
        let mut ctx = FieldContext {
            p,
            k,
            size,
            modulus: modulus.to_vec(),
            generator: Fe::ZERO,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let generator = ctx.find_primitive();
        ctx.build_tables(generator);
        Ok(ctx)
    }

    pub fn gf8() -> Self {
        Self::new(2, 3, &MODULUS_GF8).expect("documented modulus is irreducible")
    }

    pub fn gf4096() -> Self {
        Self::new(2, 12, &MODULUS_GF4096).expect("documented modulus is irreducible")
    }

    pub fn gf27() -> Self {
        Self::new(3, 3, &MODULUS_GF27).expect("documented modulus is irreducible")
    }

    pub fn gf2_20() -> Self {
        Self::new(2, 20, &MODULUS_GF2_20).expect("documented modulus is irreducible")
    }

    /// The documented field GF(2^k) for k in {3, 12, 20}, if there is one.
    pub fn binary(k: u32) -> Option<Self> {
        match k {
            3 => Some(Self::gf8()),
            12 => Some(Self::gf4096()),
            20 => Some(Self::gf2_20()),
            _ => None,
        }
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements, p^k.
    #[inline]
    pub fn size(&self) -> u32 {
        self.size
    }

    #[inline]
    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        Poly::new(self.p, self.modulus.iter().map(|&c| c as u8).collect()).to_string()
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.size).map(Fe)
    }

    /// Element from its integer code.
    pub fn element(&self, code: u32) -> Result<Fe, FieldError> {
        if code < self.size {
            Ok(Fe(code))
        } else {
            Err(FieldError::Domain(format!(
                "code {code} out of range for a field of size {}",
                self.size
            )))
        }
    }

    /// Coefficient vector (little-endian) of an element.
    pub fn coefficients(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut c = a.0;
        for _ in 0..self.k {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Fe {
        let mut code = 0u32;
        for &c in coeffs.iter().rev() {
            code = code * self.p + (c % self.p);
        }
        Fe(code)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 || y != 0 {
            out += ((x % 3 + y % 3) % 3) * place;
            x /= 3;
            y /= 3;
            place *= 3;
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 {
            out += ((3 - x % 3) % 3) * place;
            x /= 3;
            place *= 3;
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Result<Fe, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let order = self.size - 1;
        Ok(Fe(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e, with 0^0 = 1.
    #[inline]
    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let order = (self.size - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        Fe(self.exp[l as usize])
    }

    /// The Frobenius map a -> a^p.
    #[inline]
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as u64)
    }

    /// Discrete log with respect to the generator; `None` for zero.
    #[inline]
    pub fn log(&self, a: Fe) -> Option<u32> {
        if a.0 == 0 {
            None
        } else {
            Some(self.log[a.0 as usize])
        }
    }

    /// generator^i for any i.
    #[inline]
    pub fn exp(&self, i: u64) -> Fe {
        Fe(self.exp[(i % (self.size as u64 - 1)) as usize])
    }

    /// Order of the multiplicative group, p^k - 1.
    #[inline]
    pub fn multiplicative_order(&self) -> u32 {
        self.size - 1
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Fe) -> Option<u32> {
        let l = self.log(a)?;
        Some((self.size - 1) / gcd(l, self.size - 1))
    }

    /// Subfield membership test a^q = a.
    pub fn in_subfield(&self, a: Fe, q: u64) -> bool {
        self.pow(a, q) == a
    }

    /// dst[i] += c * src[i].
    pub fn axpy(&self, dst: &mut [Fe], c: Fe, src: &[Fe]) {
        if c.0 == 0 {
            return;
        }
        let lc = self.log[c.0 as usize] as usize;
        if self.p == 2 {
            for (d, s) in dst.iter_mut().zip(src) {
                if s.0 != 0 {
                    d.0 ^= self.exp[lc + self.log[s.0 as usize] as usize];
                }
            }
        } else {
            for (d, s) in dst.iter_mut().zip(src) {
                if s.0 != 0 {
                    *d = self.add(*d, Fe(self.exp[lc + self.log[s.0 as usize] as usize]));
                }
            }
        }
    }

    /// Builds the F_p-linear solver for y^q ± y = c.
    pub fn additive_solver(&self, q: u64, sign: Sign) -> Result<AdditiveSolver, FieldError> {
        AdditiveSolver::new(self, q, sign)
    }

    /// All y with y^q ± y = c, sorted by code.
    pub fn solve_additive(&self, q: u64, sign: Sign, c: Fe) -> Result<Vec<Fe>, FieldError> {
        Ok(self.additive_solver(q, sign)?.solve(self, c))
    }

    /// All t with t^m = c, sorted by code.
    pub fn nth_roots(&self, m: u64, c: Fe) -> Vec<Fe> {
        assert!(m > 0, "root index must be positive");
        if c.0 == 0 {
            return vec![Fe::ZERO];
        }
        let order = (self.size - 1) as u64;
        let g = gcd_u64(m % order, order);
        // m ≡ 0 mod order: t^m = 1 for every nonzero t.
        if g == order {
            return if c == Fe::ONE {
                (1..self.size).map(Fe).collect()
            } else {
                Vec::new()
            };
        }
        let l = self.log[c.0 as usize] as u64;
        if l % g != 0 {
            return Vec::new();
        }
        let reduced = order / g;
        let inv_m = mod_inverse((m / g) % reduced, reduced).expect("coprime by construction");
        let base = ((l / g) % reduced) * inv_m % reduced;
        let mut roots: Vec<Fe> = (0..g)
            .map(|j| Fe(self.exp[((base + j * reduced) % order) as usize]))
            .collect();
        roots.sort_unstable();
        roots
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let pa = self.coefficients(Fe(a));
        let pb = self.coefficients(Fe(b));
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u32; 2 * k];
        for (i, &x) in pa.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in pb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            // subtract lead * x^(deg-k) * modulus
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + p * p - (lead * m) % p) % p;
            }
        }
        self.from_coefficients(&prod[..k]).0
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_primitive(&self) -> Fe {
        let order = (self.size - 1) as u64;
        let primes = prime_factors(order);
        // Try x first, then every other nonzero element in code order.
        let first = if self.k > 1 { self.p } else { 2 % self.size };
        let candidates = std::iter::once(first).chain(1..self.size);
        for c in candidates {
            if c == 0 {
                continue;
            }
            if primes.iter().all(|&r| self.slow_pow(c, order / r) != 1) {
                return Fe(c);
            }
        }
        unreachable!("a finite field always has a primitive element")
    }

    fn build_tables(&mut self, generator: Fe) {
        let order = (self.size - 1) as usize;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![u32::MAX; self.size as usize];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = self.slow_mul(acc, generator.0);
        }
        debug_assert_eq!(acc, 1);
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        self.generator = generator;
        self.exp = exp;
        self.log = log;
    }
}

/// Solver for the F_p-linear map L(y) = y^q ± y on GF(p^k).
///
/// The k x k prime-field matrix of L is row-reduced once; each query is then a
/// matrix-vector product plus a walk over the (precomputed) kernel.
#[derive(Debug, Clone)]
pub struct AdditiveSolver {
    q: u64,
    sign: Sign,
    p: u32,
    k: usize,
    /// Row operations taking the matrix of L to its reduced echelon form.
    transform: Vec<Vec<u32>>,
    /// Pivot column for each of the first `rank` rows.
    pivots: Vec<usize>,
    kernel: Vec<Fe>,
}

impl AdditiveSolver {
    fn new(ctx: &FieldContext, q: u64, sign: Sign) -> Result<Self, FieldError> {
        let p = ctx.p as u64;
        let mut j = 0u32;
        let mut t = 1u64;
        while t < q {
            t *= p;
            j += 1;
        }
        if q < p || t != q || ctx.k % j != 0 {
            return Err(FieldError::Domain(format!(
                "q = {q} is not a power of {p} with exponent dividing {}",
                ctx.k
            )));
        }
        let k = ctx.k as usize;
        let pm = ctx.p;
        let apply = |y: Fe| -> Fe {
            let yq = ctx.pow(y, q);
            match sign {
                Sign::Plus => ctx.add(yq, y),
                Sign::Minus => ctx.sub(yq, y),
            }
        };
        // a[row][col]: coefficient `row` of L(x^col).
        let mut a = vec![vec![0u32; k]; k];
        for col in 0..k {
            let image = ctx.coefficients(apply(Fe(pm.pow(col as u32))));
            for row in 0..k {
                a[row][col] = image[row];
            }
        }
        let mut transform: Vec<Vec<u32>> = (0..k)
            .map(|i| (0..k).map(|j| u32::from(i == j)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..k {
            let Some(sel) = (row..k).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, sel);
            transform.swap(row, sel);
            let inv = prime_inv(a[row][col], pm);
            scale_row(&mut a[row], inv, pm);
            scale_row(&mut transform[row], inv, pm);
            for r in 0..k {
                if r != row && a[r][col] != 0 {
                    let f = a[r][col];
                    let (src_a, src_t) = (a[row].clone(), transform[row].clone());
                    sub_scaled(&mut a[r], &src_a, f, pm);
                    sub_scaled(&mut transform[r], &src_t, f, pm);
                }
            }
            pivots.push(col);
            row += 1;
        }
        // Kernel basis: one vector per free column.
        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Fe> = free
            .iter()
            .map(|&f| {
                let mut v = vec![0u32; k];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (pm - a[i][f]) % pm;
                }
                ctx.from_coefficients(&v)
            })
            .collect();
        let mut kernel = vec![Fe::ZERO];
        for b in basis {
            let mut next = Vec::with_capacity(kernel.len() * pm as usize);
            let mut mult = Fe::ZERO;
            for _ in 0..pm {
                next.extend(kernel.iter().map(|&v| ctx.add(v, mult)));
                mult = ctx.add(mult, b);
            }
            kernel = next;
        }
        kernel.sort_unstable();
        Ok(AdditiveSolver {
            q,
            sign,
            p: pm,
            k,
            transform,
            pivots,
            kernel,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The kernel of L, sorted.
    pub fn kernel(&self) -> &[Fe] {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// All y with L(y) = c, sorted by code. Either empty or a coset of the kernel.
    pub fn solve(&self, ctx: &FieldContext, c: Fe) -> Vec<Fe> {
        let rhs = ctx.coefficients(c);
        let reduced: Vec<u32> = self
            .transform
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&rhs)
                    .fold(0u32, |acc, (&t, &b)| (acc + t * b) % self.p)
            })
            .collect();
        if reduced[self.pivots.len()..].iter().any(|&v| v != 0) {
            return Vec::new();
        }
        let mut y = vec![0u32; self.k];
        for (i, &pc) in self.pivots.iter().enumerate() {
            y[pc] = reduced[i];
        }
        let base = ctx.from_coefficients(&y);
        let mut out: Vec<Fe> = self.kernel.iter().map(|&v| ctx.add(base, v)).collect();
        out.sort_unstable();
        out
    }
}

fn prime_inv(a: u32, p: u32) -> u32 {
    // p is 2 or 3; every nonzero element is its own inverse.
    debug_assert!(a % p != 0);
    a % p
}

fn scale_row(row: &mut [u32], f: u32, p: u32) {
    for v in row.iter_mut() {
        *v = (*v * f) % p;
    }
}

fn sub_scaled(dst: &mut [u32], src: &[u32], f: u32, p: u32) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = (*d + p * p - (f * s) % p) % p;
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    gcd_u64(a as u64, b as u64) as u32
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Polynomial over F_p, little-endian coefficients, no trailing zeros except for zero itself.
#[derive(Clone, PartialEq, Eq)]
struct Poly {
    p: u8,
    c: Vec<u8>,
}

impl Poly {
    fn new(p: u32, mut c: Vec<u8>) -> Self {
        while c.len() > 1 && *c.last().unwrap() == 0 {
            c.pop();
        }
        Poly { p: p as u8, c }
    }

    fn degree(&self) -> usize {
        self.c.len() - 1
    }

    fn is_zero(&self) -> bool {
        self.c.len() == 1 && self.c[0] == 0
    }

    /// Remainder modulo a monic divisor.
    fn rem_monic(&self, d: &Poly) -> Poly {
        let p = self.p;
        let mut r = self.c.clone();
        let dd = d.degree();
        while r.len() > dd && r.len() > 1 {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dd;
            if lead != 0 {
                for (i, &dc) in d.c.iter().enumerate() {
                    let v = (r[shift + i] as u16 + p as u16 * p as u16
                        - (lead as u16 * dc as u16) % p as u16)
                        % p as u16;
                    r[shift + i] = v as u8;
                }
            }
            r.pop();
        }
        Poly::new(p as u32, if r.is_empty() { vec![0] } else { r })
    }

    /// Smallest-degree monic factor of degree in 1..=deg/2, if any.
    fn smallest_factor(&self) -> Option<Poly> {
        let n = self.degree();
        let p = self.p as u32;
        for d in 1..=n / 2 {
            for code in 0..p.pow(d as u32) {
                let mut c = Vec::with_capacity(d + 1);
                let mut x = code;
                for _ in 0..d {
                    c.push((x % p) as u8);
                    x /= p;
                }
                c.push(1);
                let cand = Poly::new(p, c);
                if self.rem_monic(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
        None
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            let term = match i {
                0 => c.to_string(),
                1 => format!("{coeff}x"),
                _ => format!("{coeff}x^{i}"),
            };
            terms.push(term);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

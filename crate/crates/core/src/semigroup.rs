//! Numerical semigroups, the Feng-Rao function and the order bound.
//!
//! Nongaps are indexed from one: `rho(1) = 0`, `rho(2)` is the smallest
//! positive nongap, and so on. Dual one-point codes `C_l` are keyed to this
//! indexing through `k = n - l`.

use serde::Serialize;
use thiserror::Error;

use crate::field::gcd_u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generators {0:?} have gcd {1}, not a numerical semigroup")]
    NotNumerical(Vec<u64>, u64),
    #[error("empty generator list")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("{what} = {requested} is beyond the enumeration horizon {bound}; rebuild with a larger bound")]
    Horizon {
        what: &'static str,
        requested: u64,
        bound: u64,
    },
    #[error("{0} is not a member of the semigroup")]
    NotMember(u64),
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("semigroup is not symmetric")]
    NotSymmetric,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// A numerical semigroup enumerated up to a horizon at least twice its conductor.
#[derive(Debug, Clone, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    bound: u64,
    #[serde(skip)]
    membership: Vec<bool>,
    #[serde(skip)]
    nongaps: Vec<u64>,
    conductor: u64,
    genus: u64,
}

impl NumericalSemigroup {
    /// Enumerates `<generators>` on `[0, bound]`, growing the bound until it
    /// covers twice the conductor.
    pub fn new(generators: &[u64], bound: u64) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0, |acc, &x| gcd_u64(acc, x));
        if g != 1 {
            return Err(SemigroupError::NotNumerical(gens, g));
        }
        let smallest = gens[0];
        let mut bound = bound.max(2 * smallest + 2);
        loop {
            let membership = closure(&gens, bound);
            if let Some(conductor) = find_conductor(&membership, smallest) {
                if bound >= 2 * conductor {
                    let nongaps: Vec<u64> = (0..=bound).filter(|&s| membership[s as usize]).collect();
                    let genus = conductor - nongaps.iter().filter(|&&s| s < conductor).count() as u64;
                    return Ok(NumericalSemigroup {
                        generators: gens,
                        bound,
                        membership,
                        nongaps,
                        conductor,
                        genus,
                    });
                }
                bound = 2 * conductor + 2;
            } else {
                bound *= 2;
            }
        }
    }

    /// The same semigroup enumerated up to at least `bound`.
    pub fn with_bound(&self, bound: u64) -> Self {
        if bound <= self.bound {
            return self.clone();
        }
        Self::new(&self.generators, bound).expect("generators already validated")
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Largest gap, or `None` for the full semigroup N_0.
    pub fn frobenius_number(&self) -> Option<u64> {
        self.conductor.checked_sub(1)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor).filter(|&s| !self.contains(s)).collect()
    }

    /// Nongaps up to the horizon, ascending.
    pub fn nongaps(&self) -> &[u64] {
        &self.nongaps
    }

    /// Exact for every s: past the horizon everything is a member.
    #[inline]
    pub fn contains(&self, s: u64) -> bool {
        s > self.bound || self.membership[s as usize]
    }

    /// Number of nongaps <= s.
    pub fn count_up_to(&self, s: u64) -> u64 {
        if s >= self.conductor {
            s + 1 - self.genus
        } else {
            self.nongaps.partition_point(|&x| x <= s) as u64
        }
    }

    /// The l-th nongap, one-based.
    pub fn rho(&self, l: u64) -> Result<u64, SemigroupError> {
        if l == 0 {
            return Err(SemigroupError::ZeroIndex);
        }
        self.nongaps
            .get(l as usize - 1)
            .copied()
            .ok_or(SemigroupError::Horizon {
                what: "index",
                requested: l,
                bound: self.nongaps.len() as u64,
            })
    }

    /// rho(l) through the closed form past the conductor; never fails for l >= 1.
    pub fn rho_unbounded(&self, l: u64) -> u64 {
        debug_assert!(l >= 1);
        match self.nongaps.get(l as usize - 1) {
            Some(&s) => s,
            None => l - 1 + self.genus,
        }
    }

    /// Inverse of `rho`.
    pub fn index_of(&self, s: u64) -> Result<u64, SemigroupError> {
        if !self.contains(s) {
            return Err(SemigroupError::NotMember(s));
        }
        Ok(self.count_up_to(s))
    }

    /// 2g - 1 is a gap. Also checks the pairing `s in H <=> 2g-1-s not in H`
    /// agrees with that verdict.
    pub fn is_symmetric(&self) -> Result<bool, SemigroupError> {
        if self.genus == 0 {
            return Ok(true);
        }
        let top = 2 * self.genus - 1;
        let verdict = !self.contains(top);
        let pairing = (0..=top).all(|s| self.contains(s) != self.contains(top - s));
        if verdict != pairing {
            return Err(SemigroupError::Inconsistent(format!(
                "2g-1 gap test says {verdict}, pairing test says {pairing}"
            )));
        }
        Ok(verdict)
    }

    /// Feng-Rao function: ordered nongap pairs summing to rho(l+1).
    pub fn nu(&self, l: u64) -> Result<u64, SemigroupError> {
        if l == 0 {
            return Err(SemigroupError::ZeroIndex);
        }
        let r = self.rho(l + 1)?;
        Ok(self.pairs_summing_to(r))
    }

    fn pairs_summing_to(&self, r: u64) -> u64 {
        if r + 1 >= 2 * self.conductor {
            return r + 1 - 2 * self.genus;
        }
        self.nongaps
            .iter()
            .take_while(|&&s| s <= r)
            .filter(|&&s| self.contains(r - s))
            .count() as u64
    }

    /// Order bound d_ORD(C_l) = min { nu_m : m >= l }.
    pub fn d_ord(&self, l: u64) -> Result<u64, SemigroupError> {
        if l == 0 {
            return Err(SemigroupError::ZeroIndex);
        }
        // nu_m = rho(m+1) + 1 - 2g is strictly increasing once rho(m+1) >= 2c - 1.
        let tail = 2 * self.conductor;
        let mut best = u64::MAX;
        let mut m = l;
        loop {
            let r = self.rho_unbounded(m + 1);
            let v = self.pairs_summing_to(r);
            best = best.min(v);
            if r + 1 >= tail {
                return Ok(best);
            }
            m += 1;
        }
    }

    /// Apéry set with respect to a positive member `m`: entry `i` is the
    /// smallest member congruent to `i` mod `m`.
    pub fn apery(&self, m: u64) -> Result<Vec<u64>, SemigroupError> {
        if m == 0 || !self.contains(m) {
            return Err(SemigroupError::NotMember(m));
        }
        let mut out = vec![u64::MAX; m as usize];
        let mut missing = m;
        let mut s = 0u64;
        while missing > 0 {
            let slot = &mut out[(s % m) as usize];
            if *slot == u64::MAX && self.contains(s) {
                *slot = s;
                missing -= 1;
            }
            s += 1;
        }
        Ok(out)
    }

    /// Shortcut evaluations of d_ORD(C_l) cross-checked against `d_ord`.
    pub fn dord_shortcuts(&self, l: u64) -> Result<DordShortcuts, SemigroupError> {
        if !self.is_symmetric()? {
            return Err(SemigroupError::NotSymmetric);
        }
        let direct = self.d_ord(l)?;
        let g = self.genus;
        let linear = if l + 1 >= 3 * g {
            Some(l + 1 - g)
        } else {
            None
        };
        let r = self.rho_unbounded(l + 1);
        let campillo = if g > 0 && r >= 2 * g && self.contains(r - (2 * g - 1)) {
            Some(self.pairs_summing_to(r))
        } else {
            None
        };
        for (name, value) in [("l >= 3g-1", linear), ("symmetric pairing", campillo)] {
            if let Some(v) = value {
                if v != direct {
                    return Err(SemigroupError::Inconsistent(format!(
                        "shortcut {name} gives {v} but direct d_ORD({l}) = {direct}"
                    )));
                }
            }
        }
        Ok(DordShortcuts {
            l,
            direct,
            linear,
            campillo,
        })
    }
}

/// Result of [`NumericalSemigroup::dord_shortcuts`]; `None` means the shortcut does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DordShortcuts {
    pub l: u64,
    pub direct: u64,
    /// l >= 3g - 1 implies d_ORD = l + 1 - g.
    pub linear: Option<u64>,
    /// rho(l+1) = 2g - 1 + e with e a positive nongap implies d_ORD = nu_l.
    pub campillo: Option<u64>,
}

/// Telescopic test for an ordered generating sequence.
pub fn is_telescopic(sequence: &[u64]) -> Result<bool, SemigroupError> {
    if sequence.is_empty() {
        return Err(SemigroupError::Empty);
    }
    if sequence.contains(&0) {
        return Err(SemigroupError::ZeroGenerator);
    }
    let mut prefix_gcd = vec![sequence[0]];
    for &a in &sequence[1..] {
        prefix_gcd.push(gcd_u64(*prefix_gcd.last().unwrap(), a));
    }
    if *prefix_gcd.last().unwrap() != 1 {
        return Ok(false);
    }
    for i in 1..sequence.len() {
        let prev = prefix_gcd[i - 1];
        let scaled: Vec<u64> = sequence[..i].iter().map(|&a| a / prev).collect();
        let target = sequence[i] / prefix_gcd[i];
        let s = NumericalSemigroup::new(&scaled, target)?;
        if !s.contains(target) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn closure(gens: &[u64], bound: u64) -> Vec<bool> {
    let mut member = vec![false; bound as usize + 1];
    member[0] = true;
    for s in 1..=bound as usize {
        member[s] = gens
            .iter()
            .any(|&g| g as usize <= s && member[s - g as usize]);
    }
    member
}

/// Start of the first run of `run` consecutive members, which is the conductor.
fn find_conductor(member: &[bool], run: u64) -> Option<u64> {
    let mut start = 0usize;
    for (s, &m) in member.iter().enumerate() {
        if !m {
            start = s + 1;
        } else if (s + 1 - start) as u64 >= run {
            return Some(start as u64);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s8() -> NumericalSemigroup {
        NumericalSemigroup::new(&[40, 50, 60, 64, 65], 1200).unwrap()
    }

    #[test]
    fn full_semigroup() {
        let s = NumericalSemigroup::new(&[1], 10).unwrap();
        assert_eq!((s.genus(), s.conductor()), (0, 0));
        assert_eq!(s.frobenius_number(), None);
        assert!(s.is_symmetric().unwrap());
    }

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::new(&[2, 3], 100).unwrap();
        assert_eq!(s.gaps(), vec![1]);
        assert_eq!(s.genus(), 1);
        assert!(s.is_symmetric().unwrap());
    }

    #[test]
    fn three_five_seven_not_symmetric() {
        let s = NumericalSemigroup::new(&[3, 5, 7], 100).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 4]);
        assert!(!s.is_symmetric().unwrap());
    }

    #[test]
    fn suzuki_cover_q8() {
        let s = s8();
        assert_eq!(s.genus(), 196);
        assert_eq!(s.conductor(), 392);
        assert_eq!(s.frobenius_number(), Some(391));
        assert!(s.is_symmetric().unwrap());
        assert!(s.bound() >= 2 * s.conductor());
    }

    #[test]
    fn bound_grows_automatically() {
        let s = NumericalSemigroup::new(&[40, 50, 60, 64, 65], 10).unwrap();
        assert_eq!(s.genus(), 196);
        assert!(s.bound() >= 784);
    }

    #[test]
    fn rejects_non_numerical() {
        assert!(matches!(
            NumericalSemigroup::new(&[4, 6], 10),
            Err(SemigroupError::NotNumerical(_, 2))
        ));
        assert_eq!(
            NumericalSemigroup::new(&[], 10).unwrap_err(),
            SemigroupError::Empty
        );
    }

    #[test]
    fn rho_and_index() {
        let s = s8();
        assert_eq!(s.rho(1).unwrap(), 0);
        assert_eq!(s.rho(2).unwrap(), 40);
        assert_eq!(s.rho(81).unwrap(), 256);
        assert_eq!(s.index_of(256).unwrap(), 81);
        assert_eq!(s.index_of(39), Err(SemigroupError::NotMember(39)));
        assert!(matches!(s.rho(100_000), Err(SemigroupError::Horizon { .. })));
        assert_eq!(s.rho(0), Err(SemigroupError::ZeroIndex));
    }

    #[test]
    fn nu_examples() {
        let s = s8();
        assert_eq!(s.nu(2).unwrap(), 2);
        let l = s.index_of(80).unwrap() - 1;
        assert_eq!(s.nu(l).unwrap(), 3);
    }

    #[test]
    fn d_ord_examples() {
        let s = s8();
        assert_eq!(s.d_ord(2).unwrap(), 2);
        assert_eq!(s.d_ord(81).unwrap(), 8);
        assert_eq!(s.d_ord(82).unwrap(), 10);
        // far past the horizon: closed form
        assert_eq!(s.d_ord(100_000).unwrap(), 100_000 + 1 - 196);
    }

    #[test]
    fn shortcuts() {
        let s = s8();
        let r = s.dord_shortcuts(587).unwrap();
        assert_eq!(r.linear, Some(392));
        assert_eq!(r.direct, 392);
        // rho(l+1) = 392 = 2g - 1 + 1, and 1 is a gap.
        let l = s.index_of(392).unwrap() - 1;
        assert_eq!(s.dord_shortcuts(l).unwrap().campillo, None);
        // rho(l+1) = 431 = 391 + 40
        let l = s.index_of(431).unwrap() - 1;
        let r = s.dord_shortcuts(l).unwrap();
        assert_eq!(r.campillo, Some(r.direct));

        let small = NumericalSemigroup::new(&[2, 3], 50).unwrap();
        let r = small.dord_shortcuts(4).unwrap();
        assert_eq!(r.linear, Some(r.direct));

        let ns = NumericalSemigroup::new(&[3, 5, 7], 50).unwrap();
        assert_eq!(ns.dord_shortcuts(4), Err(SemigroupError::NotSymmetric));
    }

    #[test]
    fn telescopic_examples() {
        assert!(is_telescopic(&[2, 3]).unwrap());
        assert!(is_telescopic(&[4, 6, 5]).unwrap());
        assert!(!is_telescopic(&[3, 5, 7]).unwrap());
        assert!(!is_telescopic(&[4, 6]).unwrap());
        assert_eq!(is_telescopic(&[]), Err(SemigroupError::Empty));
    }
}

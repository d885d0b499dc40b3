use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use skcodes::basis::{basis, monomial_for, Evaluator, Monomial, MonomialTable};
use skcodes::curve::{CurveSpec, Family};
use skcodes::field::FieldContext;
use skcodes::points::{enumerate_points, PointSet};
use skcodes::semigroup::NumericalSemigroup;

const PO: [u64; 5] = [40, 50, 60, 64, 65];

fn s8() -> &'static NumericalSemigroup {
    static S: OnceLock<NumericalSemigroup> = OnceLock::new();
    S.get_or_init(|| NumericalSemigroup::new(&PO, 0).unwrap())
}

fn points() -> &'static PointSet {
    static P: OnceLock<PointSet> = OnceLock::new();
    P.get_or_init(|| {
        enumerate_points(&CurveSpec::new(Family::SuzukiCover, 1), Arc::new(FieldContext::gf4096())).unwrap()
    })
}

/// All exponent vectors in lexicographic order; the first hit is the smallest.
fn brute_lex(s: u64) -> Option<[u32; 5]> {
    for a in 0..=s / PO[0] {
        for b in 0..=s / PO[1] {
            for c in 0..=s / PO[2] {
                for d in 0..=s / PO[3] {
                    let used = a * PO[0] + b * PO[1] + c * PO[2] + d * PO[3];
                    if used <= s && (s - used) % PO[4] == 0 {
                        return Some([a as u32, b as u32, c as u32, d as u32, ((s - used) / PO[4]) as u32]);
                    }
                }
            }
        }
    }
    None
}

#[test]
fn lex_smallest_matches_exhaustive_search() {
    let table = MonomialTable::new(&PO, 1200).unwrap();
    for s in 0..=1200 {
        let fast = table.lex_smallest(s).map(|m| m.exps);
        assert_eq!(fast, brute_lex(s), "s = {s}");
        assert_eq!(fast.is_some(), s8().contains(s), "s = {s}");
    }
    assert_eq!(monomial_for(s8(), &PO, 392).unwrap().exps, brute_lex(392).unwrap());
}

#[test]
fn evaluator_matches_naive_evaluation() {
    let pts = points();
    let f = pts.field();
    let ev = Evaluator::new(f, pts.points());
    let b = basis(s8(), &PO, 392, 196).unwrap();
    let top = *b.monomials.last().unwrap();
    assert_eq!(top.pole_order, 392);
    for j in (0..pts.len()).step_by(97).chain([0]) {
        for m in b.monomials.iter().step_by(13).chain([&top]) {
            assert_eq!(ev.eval(m, j), m.evaluate(f, &pts.points()[j]));
        }
    }
    let x = Monomial::new([1, 0, 0, 0, 0], &PO);
    assert!(ev.eval(&x, 0).is_zero());
    assert!(ev.eval(&Monomial::ONE, 5) == skcodes::field::Fe::ONE);
}

#[test]
fn riemann_roch_count_above_2g_minus_1() {
    for rho in [391u64, 392, 500, 1000, 5000] {
        assert_eq!(basis(s8(), &PO, rho, 196).unwrap().dimension() as u64, rho + 1 - 196);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nested_bases(r1 in 0u64..800, extra in 0u64..800) {
        let small = basis(s8(), &PO, r1, 196).unwrap();
        let large = basis(s8(), &PO, r1 + extra, 196).unwrap();
        prop_assert!(small.monomials.iter().all(|m| large.monomials.contains(m)));
        let orders: Vec<u64> = large.monomials.iter().map(|m| m.pole_order).collect();
        prop_assert!(orders.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn pole_order_additivity(a in prop::array::uniform5(0u32..20), b in prop::array::uniform5(0u32..20)) {
        let (ma, mb) = (Monomial::new(a, &PO), Monomial::new(b, &PO));
        let prod = ma.mul(&mb);
        prop_assert_eq!(prod.pole_order, ma.pole_order + mb.pole_order);
        prop_assert_eq!(prod, Monomial::new(prod.exps, &PO));
    }

    #[test]
    fn products_evaluate_multiplicatively(a in prop::array::uniform5(0u32..40), b in prop::array::uniform5(0u32..40), j in 0usize..29184) {
        let pts = points();
        let f = pts.field();
        let ev = Evaluator::new(f, &pts.points()[j..=j]);
        let (ma, mb) = (Monomial::new(a, &PO), Monomial::new(b, &PO));
        prop_assert_eq!(ev.eval(&ma.mul(&mb), 0), f.mul(ev.eval(&ma, 0), ev.eval(&mb, 0)));
    }
}

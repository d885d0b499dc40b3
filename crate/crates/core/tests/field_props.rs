use proptest::prelude::*;
use skcodes::field::{Fe, FieldContext, Sign};

fn gf4096() -> &'static FieldContext {
    use std::sync::OnceLock;
    static F: OnceLock<FieldContext> = OnceLock::new();
    F.get_or_init(FieldContext::gf4096)
}

proptest! {
    #[test]
    fn code_round_trip(code in 0u32..4096) {
        let f = gf4096();
        let a = f.element(code).unwrap();
        prop_assert_eq!(f.from_coefficients(&f.coefficients(a)), a);
        prop_assert_eq!(a.code(), code);
    }

    #[test]
    fn field_axioms(a in 0u32..4096, b in 0u32..4096, c in 0u32..4096) {
        let f = gf4096();
        let (a, b, c) = (Fe(a), Fe(b), Fe(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, a), Fe::ZERO);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
        let mut x = a;
        for _ in 0..12 {
            x = f.frobenius(x);
        }
        prop_assert_eq!(x, a);
    }

    #[test]
    fn ternary_axioms(a in 0u32..27, b in 0u32..27) {
        let f = FieldContext::gf27();
        let (a, b) = (Fe(a), Fe(b));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        let mut x = a;
        for _ in 0..3 {
            x = f.frobenius(x);
        }
        prop_assert_eq!(x, a);
    }
}

#[test]
fn additive_solver_is_exhaustively_coset_valued() {
    let f = gf4096();
    let solver = f.additive_solver(8, Sign::Plus).unwrap();
    let mut solvable = 0;
    for c in f.elements() {
        let ys = solver.solve(f, c);
        assert!(ys.len() == 0 || ys.len() == 8, "c = {c}");
        for &y in &ys {
            assert_eq!(f.add(f.pow(y, 8), y), c);
        }
        solvable += (!ys.is_empty()) as u32;
    }
    assert_eq!(solvable, 512);
    let kernel = f.solve_additive(8, Sign::Plus, Fe::ZERO).unwrap();
    assert_eq!(kernel.len(), 8);
    assert!(kernel.iter().all(|&a| f.in_subfield(a, 8)));
}

#[test]
fn nth_roots_cover_the_field() {
    let f = gf4096();
    for m in [1u64, 2, 3, 5, 9, 13, 4095, 4096] {
        let mut total = 0;
        for c in f.elements() {
            let roots = f.nth_roots(m, c);
            let g = skcodes_gcd(m, 4095);
            assert!(c.is_zero() || roots.is_empty() || roots.len() as u64 == g);
            for &t in &roots {
                assert_eq!(f.pow(t, m), c);
            }
            total += roots.len();
        }
        assert_eq!(total, 4096, "m = {m}");
    }
}

#[test]
fn fifth_roots_examples() {
    let f = gf4096();
    assert_eq!(f.nth_roots(5, Fe::ZERO), vec![Fe::ZERO]);
    let ones = f.nth_roots(5, Fe::ONE);
    assert_eq!(ones.len(), 5);
    assert!(ones.iter().all(|&t| f.pow(t, 5) == Fe::ONE));
    assert!(f.nth_roots(5, f.generator()).is_empty());
}

fn skcodes_gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { skcodes_gcd(b, a % b) }
}

use skcodes::codes::dord_table;
use skcodes::derived::{conv_params, css_general_t_point, css_nested_dual, quantum_table, QuantumRegime};
use skcodes::semigroup::NumericalSemigroup;

const N: u64 = 29184;

fn s8() -> NumericalSemigroup {
    NumericalSemigroup::new(&[40, 50, 60, 64, 65], 0).unwrap()
}

#[test]
fn quantum_table_shape() {
    let s = s8();
    let rows = quantum_table(&s, N).unwrap();
    assert_eq!(rows.len(), 198);
    assert_eq!((rows[0].s, rows[0].d_bound), (28400, 197));
    assert_eq!((rows[197].s, rows[197].d_bound), (28006, 394));
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r.s, 28400 - 2 * i as u64);
        assert_eq!(r.d_bound, 197 + i as u64);
        assert_eq!(r.defect_bound, 2 * 196);
        assert_eq!(r.delta_q_bound, "0.013432");
        let l = r.l.unwrap();
        let expected = if l >= 587 { QuantumRegime::General } else { QuantumRegime::Table };
        assert_eq!(r.regime, Some(expected));
        assert!(r.dord_branch.unwrap() >= r.d_bound);
        assert!(r.goppa_branch.unwrap() >= r.d_bound);
    }
    assert_eq!(rows.iter().filter(|r| r.regime == Some(QuantumRegime::General)).count(), 3);
}

#[test]
fn general_regime_any_s() {
    let s = s8();
    for l in [587u64, 700, 5000] {
        for sv in [1u64, 100, N - 2 * l] {
            let q = css_nested_dual(&s, N, l, sv).unwrap();
            assert_eq!(q.d_bound, l + 1 - 196);
            assert!(q.dord_branch.unwrap().min(q.goppa_branch.unwrap()) >= q.d_bound);
        }
    }
}

#[test]
fn one_point_specialization_interval() {
    // 2g - 2 = q^3 - 2q^2 + q - 2 = 390 and n = q^5 - q^4 + q^3 = 29184 at q = 8.
    assert!(css_general_t_point(196, N, &[390], &[400]).is_err());
    assert!(css_general_t_point(196, N, &[391], &[392]).is_ok());
    assert!(css_general_t_point(196, N, &[391], &[N - 1]).is_ok());
    assert!(css_general_t_point(196, N, &[391], &[N]).is_err());
}

#[test]
fn conv_dimension_plus_degree_at_most_k() {
    let s = s8();
    for rho in (391..2000u64).filter(|&r| s.contains(r)) {
        let k = rho + 1 - 196;
        for sv in [1, k / 2] {
            let c = conv_params(&s, N, rho, sv).unwrap();
            assert!(c.dimension + c.degree <= c.k);
            assert_eq!(c.memory, 1);
            if let Some(b) = c.corollary_bound {
                assert_eq!(b, c.df_bound);
            }
        }
    }
}

#[test]
fn dord_table_anchor_rows() {
    let s = s8();
    let rows = dord_table(&s, N, 2..=589).unwrap();
    assert_eq!(rows.len(), 588);
    let find = |k: u64| rows.iter().find(|r| r.k == k).unwrap();
    for (k, rho, d) in [(29182, 40, 2), (29103, 256, 8), (29102, 257, 10), (28997, 381, 30), (28793, 586, 200), (28595, 784, 394)] {
        let r = find(k);
        assert_eq!((r.rho, r.dord), (Some(rho), Some(d)), "k = {k}");
    }
    for r in rows.iter().filter(|r| r.n - r.k >= 587) {
        assert_eq!(r.dord.unwrap(), r.n - r.k + 1 - 196);
    }
}

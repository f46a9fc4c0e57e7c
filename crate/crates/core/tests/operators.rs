use hypdual::algebra::{int, rat, Poly, RatFunc, Rational, Series};
use hypdual::hypergeometric::{self as hg, HGParams, Which};
use hypdual::q_hypergeometric::{self as qhg, QHGParams};
use hypdual::sampling::{hg_samples, qhg_samples, Sampler};
use hypdual::skew::{omega_pairing, omega_q_pairing, psi_matrix, SkewOperator, TaggedSeries};
use hypdual::Error;
use num_traits::Zero;
use proptest::prelude::*;

fn operator() -> impl Strategy<Value = SkewOperator> {
    (2usize..=5, any::<u64>()).prop_map(|(r, seed)| Sampler::new(seed).theta_operator(r, 2, 9))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theta_dual_is_involutive(l in operator()) {
        prop_assert_eq!(l.theta_dual().unwrap().theta_dual().unwrap(), l);
    }

    #[test]
    fn psi_is_anti_triangular(l in operator()) {
        let r = l.order();
        let psi = psi_matrix(&l).unwrap();
        let top = l.coeff(r);
        for i in 0..r {
            for j in 0..r {
                if i + j >= r {
                    prop_assert!(psi.get(i, j).is_zero());
                } else if i + j == r - 1 {
                    let want = if i % 2 == 0 { top.clone() } else { -&top };
                    prop_assert_eq!(psi.get(i, j), &want);
                }
            }
        }
        prop_assert_eq!(psi.det(), top.pow(r as u32));
    }
}

fn annihilated(l: &SkewOperator, s: &TaggedSeries) -> bool {
    let guard = s.order() - l.order();
    l.apply(s).unwrap().folded_body().truncate(guard).is_zero()
}

#[test]
fn hypergeometric_bases_solve_their_equations() {
    for r in 2..=5 {
        for p in hg_samples(r, 2, 11) {
            let l = hg::hg_operator(&p);
            let dual = l.theta_dual().unwrap();
            for f in hg::solution_basis(&p, 30, Which::Primal).unwrap().entries {
                assert!(annihilated(&l, &f));
            }
            for g in hg::solution_basis(&p, 30, Which::Dual).unwrap().entries {
                assert!(annihilated(&dual, &g));
            }
        }
    }
}

#[test]
fn q_bases_solve_their_equations() {
    for q in [rat(1, 2), rat(2, 3), rat(3, 5)] {
        for r in 2..=4 {
            for p in qhg_samples(r, &q, 2, 11) {
                let l = qhg::qhg_operator(&p);
                let dual = l.q_dual().unwrap();
                for f in qhg::q_solution_basis(&p, 24, Which::Primal).unwrap().entries {
                    assert!(annihilated(&l, &f));
                }
                for g in qhg::q_solution_basis(&p, 24, Which::Dual).unwrap().entries {
                    assert!(annihilated(&dual, &g));
                }
            }
        }
    }
}

#[test]
fn hypergeometric_dual_parameters() {
    for r in 2..=5 {
        for p in hg_samples(r, 3, 5) {
            let sign = if r % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(hg::dual_operator_unit(&p).unwrap(), sign);
            assert_eq!(hg::hg_dual_params(&hg::hg_dual_params(&p)), p);
        }
    }
}

#[test]
fn q_dual_parameters() {
    let q = rat(2, 3);
    for r in 2..=5 {
        for p in qhg_samples(r, &q, 3, 5) {
            let unit: Rational = p.b().iter().map(|b| -(b / &q)).product();
            assert_eq!(qhg::dual_operator_unit(&p).unwrap(), unit);
        }
    }
}

#[test]
fn pairing_of_dual_solutions_is_constant() {
    for r in 2..=4 {
        for p in hg_samples(r, 2, 17) {
            let l = hg::hg_operator(&p);
            let f = hg::solution_basis(&p, 20, Which::Primal).unwrap().entries;
            let g = hg::solution_basis(&p, 20, Which::Dual).unwrap().entries;
            for (i, c) in hg::c_constants(&p).into_iter().enumerate() {
                let omega = omega_pairing(&l, &g[i], &f[i], true).unwrap();
                assert_eq!(omega, Series::constant(c, 20));
            }
            // distinct exponents do not pair to a constant series
            assert!(matches!(omega_pairing(&l, &g[0], &f[1], false), Err(Error::OffsetMismatch)));
        }
    }
}

#[test]
fn q_pairing_of_dual_solutions_is_constant() {
    let q = rat(1, 2);
    for r in 2..=4 {
        for p in qhg_samples(r, &q, 2, 17) {
            let l = qhg::qhg_operator(&p);
            let f = qhg::q_solution_basis(&p, 16, Which::Primal).unwrap().entries;
            let g = qhg::q_solution_basis(&p, 16, Which::Dual).unwrap().entries;
            for (i, c) in qhg::q_c_constants(&p).into_iter().enumerate() {
                let omega = omega_q_pairing(&l, &g[i], &f[i], true).unwrap();
                assert_eq!(omega, Series::constant(c, 16));
            }
        }
    }
}

#[test]
fn perturbed_solution_breaks_constancy() {
    let p = HGParams::new(vec![rat(1, 2), rat(1, 3)], vec![rat(1, 5)]).unwrap();
    let l = hg::hg_operator(&p);
    let f = hg::solution_basis(&p, 12, Which::Primal).unwrap().entries;
    let g = hg::solution_basis(&p, 12, Which::Dual).unwrap().entries;
    let mut coeffs = f[0].body.coeffs().to_vec();
    coeffs[1] += int(1);
    let bent = TaggedSeries::new(f[0].offset.clone(), f[0].scalar.clone(), Series::new(coeffs).unwrap());
    assert!(omega_pairing(&l, &g[0], &bent, true).is_err());
    let omega = omega_pairing(&l, &g[0], &bent, false).unwrap();
    assert!(!omega.coeff(1).is_zero());
}

#[test]
fn q_operator_expansion_order_two() {
    let p = QHGParams::new(rat(1, 2), vec![rat(1, 3), rat(1, 7)], vec![rat(1, 5)]).unwrap();
    let l = qhg::qhg_operator(&p);
    assert_eq!(l.coeff(0), RatFunc::from(Poly::linear(int(1), int(-1))));
    // A_r = (-1)^r (b_1...b_r / q^r - z a_1...a_r)
    assert_eq!(l.coeff(2), RatFunc::from(Poly::linear(rat(1, 10) * int(4), -rat(1, 21))));
}

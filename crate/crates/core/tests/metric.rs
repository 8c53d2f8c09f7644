use qforms_core::exterior::{antisymmetrizer, antisymmetrizer_word};
use qforms_core::linalg::{embed_two_slot, rank_exact};
use qforms_core::metric::{
    contract, contract_matrix, gtilde_form, laplace_on_generators, verify_metric, FormCalculus, MetricData, Side,
};
use qforms_core::{BraidWord, Calculus, OpMatrix, QParams, RatFunc, Sign, SpaceSignature};

fn setup(n: usize) -> (Calculus<RatFunc>, MetricData<RatFunc>) {
    let p = QParams::symbolic(n);
    (Calculus::new(p.clone()), MetricData::new(&p))
}

#[test]
fn metric_suite_passes_for_n2_and_n3() {
    for n in [2, 3] {
        let (calc, metric) = setup(n);
        let report = verify_metric(&calc, &metric);
        for c in &report.checks {
            assert!(c.passed, "N={n}: {} failed", c.name);
        }
        assert_eq!(report.checks.len(), 2 + 2 + 4 + 8 + 2);
    }
}

#[test]
fn swapping_f2_entries_breaks_sigma_symmetry() {
    let (calc, metric) = setup(2);
    let mut f2 = metric.f2.clone();
    f2.swap(0, 1);
    let bad = MetricData::from_diagonals(metric.f1.clone(), f2, metric.g1.clone(), metric.g2.clone());
    let report = verify_metric(&calc, &bad);
    assert!(!report.all_passed());
    assert!(report.checks.iter().filter(|c| c.name.starts_with("sigma-symmetry")).any(|c| !c.passed));
    assert!(!report.check("morphism-constants").unwrap().passed);
}

#[test]
fn gtilde_moves_braidings_across() {
    let (calc, metric) = setup(2);
    for tau in Sign::BOTH {
        for sign in Sign::BOTH {
            for k in [2, 3] {
                let form = gtilde_form(&metric, tau, k);
                for i in 1..k {
                    let left = embed_two_slot(calc.braiding(tau, tau, sign), 4, k, k - i - 1);
                    let right = embed_two_slot(calc.braiding(tau.flip(), tau.flip(), sign), 4, k, i - 1);
                    assert_eq!(left.transpose().mul(&form).unwrap(), form.mul(&right).unwrap(), "tau={tau} sign={sign} k={k} i={i}");
                }
            }
        }
    }
}

#[test]
fn gtilde_moves_antisymmetrizers_across() {
    let (calc, metric) = setup(2);
    for tau in Sign::BOTH {
        for sign in Sign::BOTH {
            for k in [2, 3] {
                let form = gtilde_form(&metric, tau, k);
                let a = antisymmetrizer(&calc, k, tau, sign).unwrap().matrix;
                let b = antisymmetrizer(&calc, k, tau.flip(), sign).unwrap().matrix;
                assert_eq!(a.transpose().mul(&form).unwrap(), form.mul(&b).unwrap());
            }
            // A_2 on the inner slots against A_2 on the outer slots of 3-fold tensors.
            let form = gtilde_form(&metric, tau, 3);
            let sig = |t| SpaceSignature::homogeneous(2, t, 3);
            let a2 = antisymmetrizer_word(2);
            let left = a2.shifted(1).matrix(&calc, &sig(tau), sign).unwrap();
            let right = a2.matrix(&calc, &sig(tau.flip()), sign).unwrap();
            assert_eq!(left.transpose().mul(&form).unwrap(), form.mul(&right).unwrap());
        }
    }
}

#[test]
fn contraction_of_one_forms_is_the_pairing() {
    let (calc, metric) = setup(2);
    for tau in Sign::BOTH {
        let plus = contract_matrix(&calc, &metric, tau, Sign::Plus, 1, 1).unwrap();
        let minus = contract_matrix(&calc, &metric, tau, Sign::Minus, 1, 1).unwrap();
        assert_eq!(plus, minus);
        assert_eq!(plus, metric.pairing_row(tau));
        assert!(contract_matrix(&calc, &metric, tau, Sign::Plus, 1, 0).unwrap().is_identity());
    }
}

#[test]
fn two_form_pairing_is_nondegenerate() {
    let (calc, metric) = setup(2);
    let mut forms = FormCalculus::new(&calc, &metric, 11, 1024).unwrap();
    for tau in Sign::BOTH {
        for sign in Sign::BOTH {
            let left = forms.basis(2, tau).unwrap().clone();
            let right = forms.basis(2, tau.flip()).unwrap().clone();
            assert_eq!(left.dim(), 6);
            let rows: Vec<Vec<RatFunc>> = (0..6)
                .map(|i| {
                    (0..6)
                        .map(|j| {
                            let x = left.representative(&unit(6, i));
                            let y = right.representative(&unit(6, j));
                            contract(&calc, &metric, tau, sign, &x, 2, &y, 2).unwrap().remove(0)
                        })
                        .collect()
                })
                .collect();
            assert_eq!(rank_exact(&OpMatrix::from_dense_rows(&rows)), 6);
        }
    }
}

fn unit(n: usize, i: usize) -> Vec<RatFunc> {
    let mut v = vec![RatFunc::zero(); n];
    v[i] = RatFunc::one();
    v
}

#[test]
fn hodge_operators_invert_each_other() {
    let (calc, metric) = setup(2);
    let mut forms = FormCalculus::new(&calc, &metric, 5, 1024).unwrap();
    let n0 = forms.n0();
    assert_eq!(n0, 4);
    for side in [Side::Left, Side::Right] {
        for tau in Sign::BOTH {
            for k in 0..=n0 {
                let there = forms.hodge(k, tau, side, Sign::Minus).unwrap();
                let back = forms.hodge(n0 - k, tau.flip(), side, Sign::Plus).unwrap();
                assert!(back.mul(&there).unwrap().is_identity(), "side={side:?} tau={tau} k={k}");
                let there = forms.hodge(k, tau, side, Sign::Plus).unwrap();
                let back = forms.hodge(n0 - k, tau.flip(), side, Sign::Minus).unwrap();
                assert!(back.mul(&there).unwrap().is_identity(), "side={side:?} tau={tau} k={k}");
            }
        }
    }
}

#[test]
fn hodge_signs_agree_in_outer_degrees() {
    let (calc, metric) = setup(2);
    let mut forms = FormCalculus::new(&calc, &metric, 5, 1024).unwrap();
    for side in [Side::Left, Side::Right] {
        for tau in Sign::BOTH {
            for k in [0, 1, 3, 4] {
                let p = forms.hodge(k, tau, side, Sign::Plus).unwrap();
                let m = forms.hodge(k, tau, side, Sign::Minus).unwrap();
                assert_eq!(p, m, "side={side:?} tau={tau} k={k}");
            }
            let top = forms.hodge(4, tau, side, Sign::Plus).unwrap();
            assert_eq!(top.rows(), 1);
        }
    }
}

#[test]
fn codifferential_squares_to_zero() {
    let (calc, metric) = setup(2);
    let mut forms = FormCalculus::new(&calc, &metric, 5, 1024).unwrap();
    for tau in Sign::BOTH {
        for sign in Sign::BOTH {
            assert!(forms.codifferential(0, tau, sign).unwrap().is_zero());
            assert!(forms.codifferential(1, tau, sign).unwrap().is_zero());
            for k in 2..=4 {
                let a = forms.codifferential(k, tau, sign).unwrap();
                let b = forms.codifferential(k - 1, tau, sign).unwrap();
                assert!(b.mul(&a).unwrap().is_zero(), "tau={tau} sign={sign} k={k}");
            }
        }
    }
}

#[test]
fn laplacian_on_generators_is_scalar() {
    let (calc, metric) = setup(2);
    let l = laplace_on_generators(&calc, &metric);
    // 2 (z - z^{-1})^2 [1]_z [3]_z
    let d = RatFunc::z().sub(&RatFunc::monomial(1, -1));
    let q3 = RatFunc::monomial(1, 2).add(&RatFunc::one()).add(&RatFunc::monomial(1, -2));
    let e1 = RatFunc::from_int(2).mul(&d).mul(&d).mul(&q3);
    assert_eq!(l, OpMatrix::identity(4).scale(&e1));
}

fn tensor(x: &[RatFunc], y: &[RatFunc]) -> Vec<RatFunc> {
    x.iter().flat_map(|a| y.iter().map(move |b| a.mul(b))).collect()
}

fn basis_reps(forms: &mut FormCalculus, k: usize, tau: Sign) -> Vec<Vec<RatFunc>> {
    let b = forms.basis(k, tau).unwrap();
    (0..b.dim()).map(|i| b.representative(&unit(b.dim(), i))).collect()
}

fn class(forms: &mut FormCalculus, k: usize, tau: Sign, t: &[RatFunc]) -> Vec<RatFunc> {
    let calc = forms.calc;
    forms.basis(k, tau).unwrap().coords(calc, t).unwrap()
}

#[test]
fn contraction_with_a_wedge_recursion() {
    let (calc, metric) = setup(2);
    let mut forms = FormCalculus::new(&calc, &metric, 5, 1024).unwrap();
    for tau in Sign::BOTH {
        for sign in Sign::BOTH {
            for k in [1, 2] {
                for xi in basis_reps(&mut forms, k, tau) {
                    for a in 0..4 {
                        for b in 0..4 {
                            let (r1, r2) = (unit(4, a), unit(4, b));
                            let lhs = contract(&calc, &metric, tau, sign, &tensor(&xi, &r1), k + 1, &r2, 1).unwrap();
                            let g = contract(&calc, &metric, tau, sign, &r1, 1, &r2, 1).unwrap().remove(0);
                            let swapped = calc.braiding(tau, tau.flip(), sign.flip()).apply(&tensor(&r1, &r2)).unwrap();
                            let mut rhs: Vec<RatFunc> = xi.iter().map(|v| v.mul(&g)).collect();
                            // σ^∓(ρ1 ⊗ ρ2) = Σ v[a', c] e_a' ⊗ e_c
                            for c in 0..4 {
                                let first: Vec<RatFunc> = (0..4).map(|a2| swapped[a2 * 4 + c].clone()).collect();
                                let part = contract(&calc, &metric, tau, sign, &xi, k, &first, 1).unwrap();
                                for (o, v) in rhs.iter_mut().zip(tensor(&part, &unit(4, c))) {
                                    *o = o.sub(&v);
                                }
                            }
                            assert_eq!(class(&mut forms, k, tau, &lhs), class(&mut forms, k, tau, &rhs), "tau={tau} sign={sign} k={k}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn block_braiding_twists_the_pairing() {
    let (calc, metric) = setup(2);
    let mut forms = FormCalculus::new(&calc, &metric, 5, 1024).unwrap();
    let k = 2;
    for tau in Sign::BOTH {
        for sign in Sign::BOTH {
            let swapped_pairing = contract_matrix(&calc, &metric, tau.flip(), sign, k, k).unwrap();
            let reps = basis_reps(&mut forms, k, tau);
            let reps_dual = basis_reps(&mut forms, k, tau.flip());
            for rho in &reps {
                for rho2 in &reps_dual {
                    let mut types = [vec![tau; k], vec![tau.flip(); k]].concat();
                    let moved = calc.apply_word(&BraidWord::block(k, k), sign, &mut types, &tensor(rho, rho2)).unwrap();
                    let lhs = swapped_pairing.apply(&moved).unwrap();
                    let twist = BraidWord::full(k).then(&BraidWord::full(k));
                    let mut t = vec![tau.flip(); k];
                    let rho2_twisted = calc.apply_word(&twist, sign.flip(), &mut t, rho2).unwrap();
                    let rhs = contract(&calc, &metric, tau, sign, rho, k, &rho2_twisted, k).unwrap();
                    let mut t = vec![tau; k];
                    let rho_twisted = calc.apply_word(&twist, sign.flip(), &mut t, rho).unwrap();
                    let rhs2 = contract(&calc, &metric, tau, sign, &rho_twisted, k, rho2, k).unwrap();
                    assert_eq!(lhs, rhs, "tau={tau} sign={sign}");
                    assert_eq!(lhs, rhs2, "tau={tau} sign={sign}");
                }
            }
        }
    }
}

#[test]
fn top_form_contraction_commutes_with_wedge() {
    let (calc, metric) = setup(2);
    let mut forms = FormCalculus::new(&calc, &metric, 5, 1024).unwrap();
    let n0 = forms.n0();
    for tau0 in Sign::BOTH {
        let top = forms.tops.get(tau0).to_vec();
        for sign in Sign::BOTH {
            for k in 1..=n0 {
                for l in 1..=k {
                    let xs = basis_reps(&mut forms, k, tau0.flip());
                    let ys = basis_reps(&mut forms, l, tau0);
                    for x in &xs {
                        let left_part = contract(&calc, &metric, tau0, sign, &top, n0, x, k).unwrap();
                        for y in &ys {
                            let lhs = tensor(&left_part, y);
                            let inner = contract(&calc, &metric, tau0.flip(), sign.flip(), x, k, y, l).unwrap();
                            let rhs = contract(&calc, &metric, tau0, sign, &top, n0, &inner, k - l).unwrap();
                            let deg = n0 - k + l;
                            assert_eq!(class(&mut forms, deg, tau0, &lhs), class(&mut forms, deg, tau0, &rhs), "tau0={tau0} sign={sign} k={k} l={l}");
                        }
                    }
                }
            }
        }
    }
}

//! End-to-end acceptance checks. Each test prints one `PASS`/`FAIL` line for
//! its criterion; tolerances are pinned in the assertions.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::f64::consts::PI;
use uncond::classifier::{check_jk, SupportFamily};
use uncond::extremal::{
    cycle_support, fano_incidence, hankel_support, is_n_independent, moore_check,
};
use uncond::multiplier::{
    cycle_norm_endpoint, forest_factorize, fourier_multiplier_norm, positive_multiplier_norm,
    CyclicSpectrum,
};
use uncond::numeric::{
    complex_unconditional_constant, eigencurve_check, phi_direct, real_unconditional_constant,
    schatten_norm, singular_values, support_matrix, ComplexMatrix, SignAssignment, SignMode,
};
use uncond::support::{random_forest, random_support, BipartiteSupport};
use uncond::walks::{phi_expand, relation_table, EdgeMultiset, Relation};
use uncond::DEFAULT_WALK_BUDGET;

type CheckResult = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn report(id: u32, name: &str, check: impl FnOnce() -> CheckResult) {
    match check() {
        Ok(()) => println!("criterion {id:2} ({name}): PASS"),
        Err(msg) => {
            println!("criterion {id:2} ({name}): FAIL — {msg}");
            panic!("criterion {id} ({name}) failed: {msg}");
        }
    }
}

fn sec(x: f64) -> f64 {
    1.0 / x.cos()
}

/// Standard normal via Box–Muller.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u: f64 = rng.random::<f64>().max(f64::MIN_POSITIVE);
    let v: f64 = rng.random();
    (-2.0 * u.ln()).sqrt() * (2.0 * PI * v).cos()
}

fn gaussian_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(gaussian(rng), gaussian(rng))
}

fn gaussian_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len).map(|_| gaussian_complex(rng)).collect()
}

fn unimodular_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::from_polar(1.0, 2.0 * PI * rng.random::<f64>()))
        .collect()
}

fn k22() -> BipartiteSupport {
    BipartiteSupport::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
}

/// `‖ε ∘ a‖_p / ‖a‖_p` for coefficients `a` aligned with the support's edges.
fn sign_ratio(s: &BipartiteSupport, eps: &[Complex64], a: &[Complex64], p: f64) -> f64 {
    let flipped: Vec<Complex64> = eps.iter().zip(a).map(|(e, x)| e * x).collect();
    let num = schatten_norm(&support_matrix(s, &flipped), p).unwrap();
    let den = schatten_norm(&support_matrix(s, a), p).unwrap();
    num / den
}

#[test]
fn criterion_01_cycle_sign_constants() {
    report(1, "cycle sign constants", || {
        for s in 2..=10usize {
            let theta = Complex64::from_polar(1.0, PI / s as f64);
            let got = cycle_norm_endpoint(s, theta).map_err(|e| e.to_string())?;
            let want = sec(PI / (2.0 * s as f64));
            ensure!(
                (got - want).abs() <= 1e-12,
                "s={s}: endpoint norm {got}, expected sec(π/2s) = {want}"
            );
        }
        for s in 2..=4usize {
            let support = cycle_support(s).unwrap();
            let want = sec(PI / (2.0 * s as f64));
            // seed 11, 400 coefficient draws
            let est = real_unconditional_constant(&support, f64::INFINITY, 400, 11)
                .map_err(|e| e.to_string())?;
            ensure!(
                est.value >= want - 1e-3,
                "s={s}: search reached {} < {want} − 1e−3 (seed {}, trials {})",
                est.value,
                est.seed,
                est.trials
            );
            ensure!(
                est.value <= want + 1e-6,
                "s={s}: search {} exceeds the exact constant {want}",
                est.value
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_02_cycle_isometry_window() {
    report(2, "cycle isometry window", || {
        for s in [2usize, 3] {
            let support = cycle_support(s).unwrap();
            let ne = support.n_edges();
            let mut rng = ChaCha8Rng::seed_from_u64(23);
            let draws: Vec<Vec<Complex64>> = (0..50).map(|_| gaussian_vec(&mut rng, ne)).collect();
            for p in [2.0f64, 4.0, 6.0, 8.0] {
                let mut max_ratio = 0.0f64;
                for bits in 0..1u64 << (ne - 1) {
                    let eps = SignAssignment::from_bits(&support, bits << 1);
                    for a in &draws {
                        max_ratio = max_ratio.max(sign_ratio(&support, eps.values(), a, p));
                    }
                }
                if p as usize <= 2 * s - 2 {
                    ensure!(
                        (max_ratio - 1.0).abs() <= 1e-9,
                        "s={s}, p={p}: expected isometry, max ratio {max_ratio}"
                    );
                } else {
                    ensure!(
                        max_ratio >= 1.0 + 1e-4,
                        "s={s}, p={p}: expected a sign defect, max ratio {max_ratio}"
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_03_oracle_equivalence() {
    report(3, "walk expansion vs singular values", || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..200 {
            let nr = rng.random_range(1..=5usize);
            let nc = rng.random_range(1..=5usize);
            let ne = rng.random_range(1..=8usize);
            let s = random_support(&mut rng, nr, nc, ne);
            let a = gaussian_vec(&mut rng, s.n_edges());
            let eps = unimodular_vec(&mut rng, s.n_edges());
            for k in 1..=3usize {
                let direct = phi_direct(&s, &eps, &a, k).map_err(|e| e.to_string())?;
                let expand =
                    phi_expand(&s, &eps, &a, k, DEFAULT_WALK_BUDGET).map_err(|e| e.to_string())?;
                ensure!(
                    (expand - direct).abs() <= 1e-9 * direct.max(1.0),
                    "trial {trial}, k={k}: expansion {expand} vs direct {direct}"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_walk_multiplicities() {
    report(4, "closed-walk multiplicities on the 2×2 square", || {
        let s = k22();
        let table2 = relation_table(&s, 2, DEFAULT_WALK_BUDGET).map_err(|e| e.to_string())?;
        let off = Relation {
            alpha: EdgeMultiset::from_edges([(0, 0), (1, 1)]),
            beta: EdgeMultiset::from_edges([(0, 1), (1, 0)]),
        };
        let got = table2.get(&off).copied().unwrap_or(0);
        ensure!(
            got == 2,
            "(e00+e11, e01+e10) has multiplicity {got}, expected 2"
        );
        let table4 = relation_table(&s, 4, DEFAULT_WALK_BUDGET).map_err(|e| e.to_string())?;
        let degenerate = Relation {
            alpha: EdgeMultiset::from_edges([(0, 0), (0, 0), (0, 1), (0, 1)]),
            beta: EdgeMultiset::from_edges([(0, 0), (0, 0), (0, 1), (0, 1)]),
        };
        let got = table4.get(&degenerate).copied().unwrap_or(0);
        ensure!(
            got == 6,
            "(2e00+2e01, 2e00+2e01) has multiplicity {got}, expected 6"
        );
        Ok(())
    });
}

#[test]
fn criterion_05_three_by_three_constants() {
    report(5, "3×3 sign constants 5/3 and √3", || {
        let five_thirds = 5.0 / 3.0;
        // Fourier route
        let phi = vec![
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        let spectrum = CyclicSpectrum::full(phi).map_err(|e| e.to_string())?;
        let norm = fourier_multiplier_norm(&spectrum, f64::INFINITY).map_err(|e| e.to_string())?;
        ensure!(
            (norm - five_thirds).abs() <= 1e-12,
            "Fourier route gives {norm}, expected 5/3"
        );
        // positive-decomposition route: (−1,1,1) pattern = (1/3)·J − (4/3)·G
        let third = Complex64::new(1.0 / 3.0, 0.0);
        let j_part = ComplexMatrix::from_rows(vec![vec![third; 3]; 3]).unwrap();
        let mut g_part = ComplexMatrix::zeros(3, 3);
        for r in 0..3 {
            for c in 0..3 {
                g_part[(r, c)] = if r == c {
                    Complex64::new(4.0 / 3.0, 0.0)
                } else {
                    Complex64::new(-2.0 / 3.0, 0.0)
                };
            }
        }
        let nj = positive_multiplier_norm(&j_part, None).map_err(|e| e.to_string())?;
        let ng = positive_multiplier_norm(&g_part, None).map_err(|e| e.to_string())?;
        ensure!(
            (nj - 1.0 / 3.0).abs() <= 1e-9 && (ng - 4.0 / 3.0).abs() <= 1e-9,
            "positive parts give {nj} + {ng}, expected 1/3 + 4/3"
        );
        ensure!(
            (nj + ng - five_thirds).abs() <= 1e-9,
            "decomposition total {} ≠ 5/3",
            nj + ng
        );
        // searches on the full 3×3 support
        let full = BipartiteSupport::new(
            3,
            3,
            &(0..3)
                .flat_map(|r| (0..3).map(move |c| (r, c)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let complex = complex_unconditional_constant(&full, f64::INFINITY, 200, 5)
            .map_err(|e| e.to_string())?;
        ensure!(
            complex.value >= 3f64.sqrt() - 1e-2,
            "complex search reached {} < √3 − 1e−2 (seed {}, trials {})",
            complex.value,
            complex.seed,
            complex.trials
        );
        let real = real_unconditional_constant(&full, f64::INFINITY, 1000, 5)
            .map_err(|e| e.to_string())?;
        ensure!(
            real.value >= five_thirds - 1e-3,
            "real search reached {} < 5/3 − 1e−3 (seed {}, trials {})",
            real.value,
            real.seed,
            real.trials
        );
        ensure!(
            real.value <= five_thirds + 1e-6,
            "real search {} exceeds 5/3",
            real.value
        );
        // ceiling sweep: exhaustive signs (global flip quotiented) × 10³ draws
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let draws: Vec<Vec<Complex64>> = (0..1000).map(|_| gaussian_vec(&mut rng, 9)).collect();
        let mut max_ratio = 0.0f64;
        for bits in 0..1u64 << 8 {
            let eps = SignAssignment::from_bits(&full, bits << 1);
            for a in &draws {
                max_ratio = max_ratio.max(sign_ratio(&full, eps.values(), a, f64::INFINITY));
            }
        }
        ensure!(
            max_ratio <= five_thirds + 1e-6,
            "sampled ratio {max_ratio} exceeds 5/3 + 1e−6"
        );
        Ok(())
    });
}

#[test]
fn criterion_06_eigencurve_derivatives() {
    report(6, "eigencurve derivatives at t = 0", || {
        let h = 1e-5;
        for p in [1.0f64, 2.0, 4.0, 6.0] {
            let plus = eigencurve_check(h, p).map_err(|e| e.to_string())?;
            let minus = eigencurve_check(-h, p).map_err(|e| e.to_string())?;
            let op_slope = (plus.operator_norm - minus.operator_norm) / (2.0 * h);
            ensure!(
                (op_slope - 1.0 / 3.0).abs() <= 1e-3,
                "p={p}: operator-norm slope {op_slope}, expected 1/3"
            );
            let p_slope = (plus.p_norm_pow_p - minus.p_norm_pow_p) / (2.0 * h);
            let want = p / 6.0 * (2f64.powf(p) - 4.0);
            ensure!(
                (p_slope - want).abs() <= 1e-3,
                "p={p}: p-norm^p slope {p_slope}, expected {want}"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_07_projection_norms() {
    report(7, "corner projection norms √3 and 2", || {
        let r2 = 2f64.sqrt();
        let sym = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(r2, 0.0)],
            vec![Complex64::new(r2, 0.0), Complex64::new(-1.0, 0.0)],
        ])
        .unwrap();
        let sigma = singular_values(&sym).map_err(|e| e.to_string())?;
        ensure!(
            (sigma[0] - 3f64.sqrt()).abs() <= 1e-12,
            "‖[[1,√2],[√2,−1]]‖ = {}, expected √3",
            sigma[0]
        );
        let hook = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(r2, 0.0)],
            vec![Complex64::new(r2, 0.0), Complex64::new(0.0, 0.0)],
        ])
        .unwrap();
        let sigma = singular_values(&hook).map_err(|e| e.to_string())?;
        ensure!(
            (sigma[0] - 2.0).abs() <= 1e-12,
            "‖[[1,√2],[√2,0]]‖ = {}, expected 2",
            sigma[0]
        );
        // rank-2 identity: e00 + e01 + e10 = (u⊗u + ū⊗ū)/√3
        let u = [
            Complex64::from_polar(1.0, -PI / 12.0),
            Complex64::from_polar(1.0, PI / 4.0),
        ];
        let target = [[1.0, 1.0], [1.0, 0.0]];
        for r in 0..2 {
            for c in 0..2 {
                let got = (u[r] * u[c] + u[r].conj() * u[c].conj()) / 3f64.sqrt();
                let want = Complex64::new(target[r][c], 0.0);
                ensure!(
                    (got - want).norm() <= 1e-12,
                    "decomposition entry ({r},{c}) = {got}, expected {want}"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_08_forest_factorization() {
    report(8, "forest sign factorization", || {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for trial in 0..100 {
            let nr = rng.random_range(2..=16usize);
            let nc = rng.random_range(2..=16usize);
            let forest = random_forest(&mut rng, nr, nc, 30);
            let ne = forest.n_edges();
            let eps_values = unimodular_vec(&mut rng, ne);
            let eps = SignAssignment::from_aligned(&forest, eps_values.clone(), SignMode::Complex)
                .map_err(|e| e.to_string())?;
            let f = forest_factorize(&forest, &eps).map_err(|e| e.to_string())?;
            for (i, &(r, c)) in forest.edges().iter().enumerate() {
                let prod = f.eta[r] * f.zeta[c];
                ensure!(
                    (prod - eps_values[i]).norm() <= 1e-12,
                    "trial {trial}: η_{r}·ζ_{c} = {prod} ≠ ε = {}",
                    eps_values[i]
                );
            }
            let a = gaussian_vec(&mut rng, ne);
            let base = support_matrix(&forest, &a);
            let mut twisted = support_matrix(&forest, &a);
            for &(r, c) in forest.edges() {
                twisted[(r, c)] = f.eta[r] * base[(r, c)] * f.zeta[c];
            }
            for p in [0.5f64, 1.0, 3.0, f64::INFINITY] {
                let np = schatten_norm(&base, p).map_err(|e| e.to_string())?;
                let nq = schatten_norm(&twisted, p).map_err(|e| e.to_string())?;
                ensure!(
                    (np - nq).abs() <= 1e-10 * np.max(1.0),
                    "trial {trial}, p={p}: ‖A‖ = {np} but ‖DAD′‖ = {nq}"
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_09_counting_bound() {
    report(9, "even-girth counting bound", || {
        for k in 2..=6u32 {
            let s = cycle_support(k as usize + 1).unwrap();
            let rep = moore_check(&s, k);
            ensure!(
                rep.girth_ok && rep.meaningful,
                "2(k+1)-gon with k={k} should qualify"
            );
            ensure!(
                rep.slack_cols.abs() <= 1e-9 && rep.slack_rows.abs() <= 1e-9,
                "2(k+1)-gon with k={k}: slack ({}, {}) ≠ 0",
                rep.slack_cols,
                rep.slack_rows
            );
        }
        let rep = moore_check(&fano_incidence(), 2);
        ensure!(
            rep.girth_ok && rep.slack_cols.abs() <= 1e-9 && rep.slack_rows.abs() <= 1e-9,
            "point-line incidence of the 7-point plane: slack ({}, {}) ≠ 0",
            rep.slack_cols,
            rep.slack_rows
        );
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let mut informative = 0u32;
        for trial in 0..500 {
            let nr = rng.random_range(2..=6usize);
            let nc = rng.random_range(2..=6usize);
            let ne = rng.random_range(nr.max(nc)..=nr * nc);
            let s = random_support(&mut rng, nr, nc, ne);
            for k in 2..=4u32 {
                let rep = moore_check(&s, k);
                if rep.girth_ok {
                    informative += 1;
                    ensure!(
                        rep.slack() >= -1e-9,
                        "trial {trial}, k={k}: slack {} < 0 on {:?} ({nr}×{nc})",
                        rep.slack(),
                        s.edges()
                    );
                }
            }
        }
        ensure!(informative > 100, "only {informative} informative trials");
        Ok(())
    });
}

#[test]
fn criterion_10_completion_property_on_theta_families() {
    report(10, "completion property J_k on theta families", || {
        for j in 1..=3usize {
            let fam = SupportFamily::theta(j).map_err(|e| e.to_string())?;
            let holds = check_jk(&fam, 2 * j, 20).map_err(|e| e.to_string())?;
            ensure!(
                holds.holds(),
                "theta({j}) should satisfy J_{} at level 20",
                2 * j
            );
            let fails = check_jk(&fam, 2 * j + 1, 20).map_err(|e| e.to_string())?;
            let Some(counter) = &fails.counterexample else {
                return Err(format!(
                    "theta({j}) should fail J_{} at level 20",
                    2 * j + 1
                ));
            };
            ensure!(
                counter.cycle.len() == 4 * j + 2,
                "theta({j}): counterexample cycle has length {}, expected {}",
                counter.cycle.len(),
                4 * j + 2
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_11_hankel_girth_criterion() {
    report(11, "sum-set independence vs girth of Hankel supports", || {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for trial in 0..100 {
            let size = rng.random_range(2..=8usize);
            let mut set = BTreeSet::new();
            while set.len() < size {
                set.insert(rng.random_range(0..=30usize));
            }
            let lambda: Vec<usize> = set.into_iter().collect();
            let independent = is_n_independent(&lambda, 2)
                .map_err(|e| e.to_string())?
                .is_independent();
            let h = hankel_support(&lambda, 40, 40).map_err(|e| e.to_string())?;
            let girth_not_four = h.even_girth().map_or(true, |g| g.length != 4);
            ensure!(
                independent == girth_not_four,
                "trial {trial}, Λ = {lambda:?}: independence {independent} but girth-4-free {girth_not_four}"
            );
        }
        Ok(())
    });
}

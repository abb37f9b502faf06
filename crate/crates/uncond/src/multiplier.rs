//! Closed-form multiplier norms: cycle sign multipliers, convolution
//! (Fourier) multipliers on Z/sZ, positive Schur multipliers, and the sign
//! factorization that makes every forest multiplier an isometry.

use crate::numeric::{hermitian_eigenvalues, ComplexMatrix, SignAssignment};
use crate::support::BipartiteSupport;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

// ── cycle multipliers ────────────────────────────────────────────────────

/// A sign multiplier on the standard 2s-cycle support, reduced to its norm
/// invariant: the alternating product around the cycle and a canonical s-th
/// root of it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleMultiplier {
    pub s: usize,
    /// Alternating product: diagonal-edge signs conjugated, off-diagonal
    /// signs plain. Two sign patterns with equal product have equal
    /// multiplier norm on every Schatten class.
    pub product: Complex64,
    /// Principal s-th root of `product`.
    pub theta: Complex64,
}

/// Reduce a sign assignment on the standard cycle support
/// `{(i,i), (i, i+1 mod s)}` (signs aligned with the lexicographically
/// sorted edge list) to its invariant.
pub fn cycle_reduce(s: usize, eps: &SignAssignment) -> Result<CycleMultiplier> {
    if s < 2 {
        return Err(Error::InvalidParameter("cycle needs s ≥ 2".into()));
    }
    if eps.values().len() != 2 * s {
        return Err(Error::InvalidParameter(format!(
            "the 2s-cycle has {} edges, got {} signs",
            2 * s,
            eps.values().len()
        )));
    }
    let mut product = Complex64::new(1.0, 0.0);
    let mut idx = 0;
    for i in 0..s {
        // lexicographic edge order within row i: row s−1 lists (s−1, 0) first
        let row_edges = if i + 1 < s {
            [(i, i, true), (i, i + 1, false)]
        } else {
            [(i, 0, false), (i, i, true)]
        };
        for &(_, _, diagonal) in &row_edges {
            let v = eps.values()[idx];
            product *= if diagonal { v.conj() } else { v };
            idx += 1;
        }
    }
    // +0.0 flushes a negative-zero imaginary part so that a product of
    // exactly −1 has argument +π, keeping the principal root at e^{iπ/s}
    let arg = Complex64::new(product.re, product.im + 0.0).arg();
    let theta = Complex64::from_polar(1.0, arg / s as f64);
    Ok(CycleMultiplier { s, product, theta })
}

/// Endpoint (trace-class and operator-norm) multiplier norm of the reduced
/// cycle multiplier: `max_{z^s = −1} |θ + z| / |1 + e^{iπ/s}|`.
pub fn cycle_norm_endpoint(s: usize, theta: Complex64) -> Result<f64> {
    if s < 2 {
        return Err(Error::InvalidParameter("cycle needs s ≥ 2".into()));
    }
    if (theta.norm() - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "theta must be unimodular, |theta| = {}",
            theta.norm()
        )));
    }
    let max_num = (0..s)
        .map(|j| (theta + root_of_minus_one(s, j)).norm())
        .fold(0.0f64, f64::max);
    let den = (Complex64::new(1.0, 0.0) + root_of_minus_one(s, 0)).norm();
    Ok(max_num / den)
}

fn root_of_minus_one(s: usize, j: usize) -> Complex64 {
    Complex64::from_polar(1.0, PI * (2 * j + 1) as f64 / s as f64)
}

/// Whether the cycle sign multiplier is an isometry on S^p: true exactly
/// when the alternating product is 1, or p is an even integer with
/// p/2 ∈ {1, …, s−1} (closed walks of length < 2s cannot traverse the whole
/// cycle, so short Schatten exponents never see the phase).
pub fn cycle_isometry(s: usize, eps: &SignAssignment, p: f64) -> Result<bool> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "exponent must be positive, got {p}"
        )));
    }
    let reduced = cycle_reduce(s, eps)?;
    if (reduced.product - Complex64::new(1.0, 0.0)).norm() <= 1e-12 {
        return Ok(true);
    }
    if p.is_finite() {
        let half = p / 2.0;
        let rounded = half.round();
        if (half - rounded).abs() <= 1e-9 && rounded >= 1.0 && rounded <= (s - 1) as f64 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Real-sign worst case on the 2s-cycle: product −1, norm
/// `cycle_norm_endpoint(s, e^{iπ/s}) = sec(π/2s)`.
pub fn cycle_real_constant(s: usize) -> Result<f64> {
    cycle_norm_endpoint(s, Complex64::from_polar(1.0, PI / s as f64))
}

/// Largest endpoint norm over unimodular sign products, resolved numerically
/// by maximizing over arg θ ∈ [0, π/s] (golden section plus the interval
/// ends). Coincides with the real worst case: the extremal product is −1.
pub fn cycle_complex_constant(s: usize) -> Result<f64> {
    if s < 2 {
        return Err(Error::InvalidParameter("cycle needs s ≥ 2".into()));
    }
    let f = |phi: f64| cycle_norm_endpoint(s, Complex64::from_polar(1.0, phi)).unwrap();
    let (mut lo, mut hi) = (0.0, PI / s as f64);
    let mut best = f(lo).max(f(hi));
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INVPHI * (hi - lo);
    let mut x2 = lo + INVPHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..60 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INVPHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INVPHI * (hi - lo);
            f1 = f(x1);
        }
        best = best.max(f1.max(f2));
    }
    Ok(best)
}

// ── convolution multipliers on Z/sZ ──────────────────────────────────────

/// A function φ on a subset Λ of Z/sZ, seen as the symbol of a (relative)
/// convolution multiplier.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicSpectrum {
    modulus: usize,
    lambda: Vec<usize>,
    phi: Vec<Complex64>,
}

impl CyclicSpectrum {
    /// `lambda` must be strictly increasing residues mod `modulus`, and `phi`
    /// assigns one value per element of `lambda`.
    pub fn new(modulus: usize, lambda: Vec<usize>, phi: Vec<Complex64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidParameter("modulus must be ≥ 1".into()));
        }
        if !lambda.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(
                "spectrum must be strictly increasing".into(),
            ));
        }
        if lambda.iter().any(|&x| x >= modulus) {
            return Err(Error::InvalidParameter(format!(
                "spectrum element out of range mod {modulus}"
            )));
        }
        if phi.len() != lambda.len() {
            return Err(Error::InvalidParameter(format!(
                "{} symbol values for {} spectrum elements",
                phi.len(),
                lambda.len()
            )));
        }
        Ok(CyclicSpectrum {
            modulus,
            lambda,
            phi,
        })
    }

    /// Symbol defined on all of Z/sZ.
    pub fn full(phi: Vec<Complex64>) -> Result<Self> {
        let modulus = phi.len();
        Self::new(modulus, (0..modulus).collect(), phi)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn is_full(&self) -> bool {
        self.lambda.len() == self.modulus
    }
}

/// Norm of the convolution operator with symbol φ on ℓ¹ and ℓ^∞ of Z/sZ:
/// the ℓ¹ norm of the inverse discrete Fourier transform of φ.
///
/// Only the full spectrum is supported: restricting φ to a proper subset
/// changes the norm in ways with no closed form, so that case is rejected
/// rather than answered with an unlabeled bound.
pub fn fourier_multiplier_norm(spectrum: &CyclicSpectrum, p: f64) -> Result<f64> {
    if !spectrum.is_full() {
        return Err(Error::RelativeSpectrum);
    }
    if !(p == 1.0 || p == f64::INFINITY) {
        return Err(Error::UnsupportedExponent(p));
    }
    let s = spectrum.modulus;
    let mut total = 0.0;
    for j in 0..s {
        let mut f = Complex64::new(0.0, 0.0);
        for (m, &v) in spectrum.phi.iter().enumerate() {
            f += v * Complex64::from_polar(1.0, -2.0 * PI * (j * m % s) as f64 / s as f64);
        }
        total += (f / s as f64).norm();
    }
    Ok(total)
}

// ── positive Schur multipliers ───────────────────────────────────────────

/// Schur-multiplier norm of a positive semidefinite matrix on every Schatten
/// class: the largest diagonal entry in absolute value. The PSD hypothesis
/// is verified (min eigenvalue ≥ −tol, default tol = 10⁻⁹ · max diagonal).
pub fn positive_multiplier_norm(phi: &ComplexMatrix, tol: Option<f64>) -> Result<f64> {
    let eig = hermitian_eigenvalues(phi)?;
    let n = phi.n_rows();
    let max_diag = (0..n).map(|i| phi[(i, i)].re).fold(f64::NEG_INFINITY, f64::max);
    let tolerance = tol.unwrap_or(1e-9 * max_diag);
    let min_eig = eig.last().copied().unwrap_or(0.0);
    if min_eig < -tolerance {
        return Err(Error::NotPositiveSemidefinite {
            eigenvalue: min_eig,
            tolerance,
        });
    }
    Ok((0..n).map(|i| phi[(i, i)].norm()).fold(0.0, f64::max))
}

// ── forest sign factorization ────────────────────────────────────────────

/// Diagonal factorization ε_rc = η(r)·ζ(c) of a sign assignment on a forest.
/// Conjugating by the diagonal unitaries D_η, D_ζ turns the sign multiplier
/// into the identity, so it is isometric on every Schatten class.
#[derive(Debug, Clone, PartialEq)]
pub struct ForestFactorization {
    pub eta: Vec<Complex64>,
    pub zeta: Vec<Complex64>,
}

/// Rooted-tree traversal: each component is rooted at its smallest row
/// vertex with η(root) = 1, and each tree edge determines the value at the
/// far end. Vertices in edge-free components keep the value 1.
pub fn forest_factorize(
    s: &BipartiteSupport,
    eps: &SignAssignment,
) -> Result<ForestFactorization> {
    if let Some(cycle) = s.forest_witness() {
        return Err(Error::NotAForest(cycle));
    }
    if eps.values().len() != s.n_edges() {
        return Err(Error::InvalidParameter(format!(
            "{} signs for {} edges",
            eps.values().len(),
            s.n_edges()
        )));
    }
    let index: std::collections::BTreeMap<(usize, usize), usize> = s
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &q)| (q, i))
        .collect();
    let one = Complex64::new(1.0, 0.0);
    let mut eta = vec![one; s.n_rows()];
    let mut zeta = vec![one; s.n_cols()];
    let mut row_seen = vec![false; s.n_rows()];
    let mut col_seen = vec![false; s.n_cols()];
    for root in 0..s.n_rows() {
        if row_seen[root] {
            continue;
        }
        row_seen[root] = true;
        // (is_row, index) BFS queue over the component
        let mut queue = std::collections::VecDeque::from([(true, root)]);
        while let Some((is_row, v)) = queue.pop_front() {
            if is_row {
                for &c in s.row_adj(v) {
                    if !col_seen[c] {
                        col_seen[c] = true;
                        zeta[c] = eps.values()[index[&(v, c)]] / eta[v];
                        queue.push_back((false, c));
                    }
                }
            } else {
                for &r in s.col_adj(v) {
                    if !row_seen[r] {
                        row_seen[r] = true;
                        eta[r] = eps.values()[index[&(r, v)]] / zeta[v];
                        queue.push_back((true, r));
                    }
                }
            }
        }
    }
    Ok(ForestFactorization { eta, zeta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{schatten_norm, support_matrix, SignMode};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cycle(s: usize) -> BipartiteSupport {
        let edges: Vec<(usize, usize)> = (0..s)
            .flat_map(|i| [(i, i), (i, (i + 1) % s)])
            .collect();
        BipartiteSupport::new(s, s, &edges).unwrap()
    }

    fn ones(n: usize) -> Vec<Complex64> {
        vec![Complex64::new(1.0, 0.0); n]
    }

    #[test]
    fn cycle_reduce_products() {
        for s in [2usize, 3, 5] {
            let sup = cycle(s);
            let all = SignAssignment::from_aligned(&sup, ones(2 * s), SignMode::Real).unwrap();
            let red = cycle_reduce(s, &all).unwrap();
            assert!((red.product - Complex64::new(1.0, 0.0)).norm() < 1e-15);
            assert!((red.theta - Complex64::new(1.0, 0.0)).norm() < 1e-15);
            for flipped in 0..2 * s {
                let mut v = ones(2 * s);
                v[flipped] = Complex64::new(-1.0, 0.0);
                let eps = SignAssignment::from_aligned(&sup, v, SignMode::Real).unwrap();
                let red = cycle_reduce(s, &eps).unwrap();
                assert!((red.product - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
                let principal = Complex64::from_polar(1.0, PI / s as f64);
                assert!((red.theta - principal).norm() < 1e-15);
            }
            // two flips cancel
            let mut v = ones(2 * s);
            v[0] = Complex64::new(-1.0, 0.0);
            v[1] = Complex64::new(-1.0, 0.0);
            let eps = SignAssignment::from_aligned(&sup, v, SignMode::Real).unwrap();
            assert!(
                (cycle_reduce(s, &eps).unwrap().product - Complex64::new(1.0, 0.0)).norm() < 1e-15
            );
        }
    }

    #[test]
    fn product_invariant_under_diagonal_gauge() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for s in [2usize, 3, 4, 6] {
            let sup = cycle(s);
            let base: Vec<Complex64> = (0..2 * s)
                .map(|_| Complex64::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU))
                .collect();
            let eps = SignAssignment::from_aligned(&sup, base.clone(), SignMode::Complex).unwrap();
            let p0 = cycle_reduce(s, &eps).unwrap().product;
            let eta: Vec<Complex64> = (0..s)
                .map(|_| Complex64::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU))
                .collect();
            let zeta: Vec<Complex64> = (0..s)
                .map(|_| Complex64::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU))
                .collect();
            let gauged: Vec<Complex64> = sup
                .edges()
                .iter()
                .zip(&base)
                .map(|(&(r, c), v)| eta[r] * zeta[c] * v)
                .collect();
            let eps2 = SignAssignment::from_aligned(&sup, gauged, SignMode::Complex).unwrap();
            let p1 = cycle_reduce(s, &eps2).unwrap().product;
            assert!((p0 - p1).norm() < 1e-12, "gauge changed the invariant");
        }
    }

    #[test]
    fn endpoint_norm_values() {
        for s in 2..=10 {
            let at_one = cycle_norm_endpoint(s, Complex64::new(1.0, 0.0)).unwrap();
            assert!((at_one - 1.0).abs() < 1e-14);
            let worst = cycle_norm_endpoint(s, Complex64::from_polar(1.0, PI / s as f64)).unwrap();
            let sec = 1.0 / (PI / (2.0 * s as f64)).cos();
            assert!((worst - sec).abs() < 1e-14, "s={s}");
            assert!((cycle_real_constant(s).unwrap() - sec).abs() < 1e-14);
        }
        let v = cycle_norm_endpoint(2, Complex64::new(0.0, 1.0)).unwrap();
        assert!((v - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn endpoint_norm_invariances() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for s in [2usize, 3, 5, 8] {
            for _ in 0..20 {
                let theta = Complex64::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU);
                let v = cycle_norm_endpoint(s, theta).unwrap();
                assert!(v >= 1.0 - 1e-12);
                // multiply by an s-th root of unity
                let omega = Complex64::from_polar(
                    1.0,
                    std::f64::consts::TAU * rng.random_range(0..s) as f64 / s as f64,
                );
                assert!((cycle_norm_endpoint(s, theta * omega).unwrap() - v).abs() < 1e-12);
                assert!((cycle_norm_endpoint(s, theta.conj()).unwrap() - v).abs() < 1e-12);
                let is_one = (theta.powu(s as u32) - Complex64::new(1.0, 0.0)).norm() < 1e-9;
                assert_eq!(v < 1.0 + 1e-9, is_one, "norm 1 iff theta^s = 1");
            }
        }
    }

    #[test]
    fn complex_constant_equals_real_worst_case() {
        for s in 2..=6 {
            let sec = 1.0 / (PI / (2.0 * s as f64)).cos();
            assert!((cycle_complex_constant(s).unwrap() - sec).abs() < 1e-9);
        }
    }

    #[test]
    fn isometry_window() {
        let sup = cycle(3);
        let mut v = ones(6);
        v[0] = Complex64::new(-1.0, 0.0);
        let minus = SignAssignment::from_aligned(&sup, v, SignMode::Real).unwrap();
        assert!(cycle_isometry(3, &minus, 4.0).unwrap());
        assert!(!cycle_isometry(3, &minus, 6.0).unwrap());
        assert!(!cycle_isometry(3, &minus, 3.0).unwrap());
        assert!(!cycle_isometry(3, &minus, f64::INFINITY).unwrap());
        let plus = SignAssignment::from_aligned(&sup, ones(6), SignMode::Real).unwrap();
        assert!(cycle_isometry(3, &plus, std::f64::consts::PI).unwrap());
    }

    #[test]
    fn fourier_norm_values() {
        let spectrum = CyclicSpectrum::full(vec![
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        let v = fourier_multiplier_norm(&spectrum, f64::INFINITY).unwrap();
        assert!((v - 5.0 / 3.0).abs() < 1e-14);
        assert!((fourier_multiplier_norm(&spectrum, 1.0).unwrap() - 5.0 / 3.0).abs() < 1e-14);
        let const_one = CyclicSpectrum::full(ones(4)).unwrap();
        assert!((fourier_multiplier_norm(&const_one, f64::INFINITY).unwrap() - 1.0).abs() < 1e-14);
        let z2 = CyclicSpectrum::full(vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)])
            .unwrap();
        assert!((fourier_multiplier_norm(&z2, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(matches!(
            fourier_multiplier_norm(&spectrum, 2.0),
            Err(Error::UnsupportedExponent(_))
        ));
        let partial = CyclicSpectrum::new(3, vec![0, 2], ones(2)).unwrap();
        assert!(matches!(
            fourier_multiplier_norm(&partial, 1.0),
            Err(Error::RelativeSpectrum)
        ));
    }

    #[test]
    fn positive_norm_values() {
        let n = 3;
        let mut j = ComplexMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                j[(r, c)] = Complex64::new(1.0, 0.0);
            }
        }
        assert!((positive_multiplier_norm(&j, None).unwrap() - 1.0).abs() < 1e-12);
        let mut d = ComplexMatrix::zeros(3, 3);
        d[(0, 0)] = Complex64::new(1.0, 0.0);
        d[(1, 1)] = Complex64::new(3.0, 0.0);
        d[(2, 2)] = Complex64::new(2.0, 0.0);
        assert!((positive_multiplier_norm(&d, None).unwrap() - 3.0).abs() < 1e-12);
        // circulant with symbol (1, −1/2, −1/2): eigenvalues 0, 3/2, 3/2
        let mut g = ComplexMatrix::zeros(3, 3);
        for r in 0..3 {
            for c in 0..3 {
                g[(r, c)] = Complex64::new(if r == c { 1.0 } else { -0.5 }, 0.0);
            }
        }
        assert!((positive_multiplier_norm(&g, None).unwrap() - 1.0).abs() < 1e-12);
        // the ±1 circulant sign matrix itself is not PSD
        let mut e = ComplexMatrix::zeros(3, 3);
        for r in 0..3 {
            for c in 0..3 {
                e[(r, c)] = Complex64::new(if r == c { -1.0 } else { 1.0 }, 0.0);
            }
        }
        assert!(matches!(
            positive_multiplier_norm(&e, None),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn factorize_path_example() {
        // path c0 — r0 — c1 — r1 with edges (r0,c0), (r0,c1), (r1,c1)
        let s = BipartiteSupport::new(2, 2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let eps = SignAssignment::from_aligned(
            &s,
            vec![
                Complex64::new(-1.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(1.0, 0.0),
            ],
            SignMode::Real,
        )
        .unwrap();
        let f = forest_factorize(&s, &eps).unwrap();
        assert_eq!(f.eta[0], Complex64::new(1.0, 0.0));
        assert_eq!(f.zeta[0], Complex64::new(-1.0, 0.0));
        assert_eq!(f.zeta[1], Complex64::new(1.0, 0.0));
        assert_eq!(f.eta[1], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn factorize_single_edge_convention() {
        let s = BipartiteSupport::new(1, 1, &[(0, 0)]).unwrap();
        let eps =
            SignAssignment::from_aligned(&s, vec![Complex64::new(0.0, 1.0)], SignMode::Complex)
                .unwrap();
        let f = forest_factorize(&s, &eps).unwrap();
        assert_eq!(f.eta[0], Complex64::new(1.0, 0.0));
        assert!((f.zeta[0] - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn factorize_random_forests_and_isometry() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let s = crate::support::random_forest(&mut rng, 8, 8, 10);
            let eps_vals: Vec<Complex64> = (0..s.n_edges())
                .map(|_| Complex64::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU))
                .collect();
            let eps =
                SignAssignment::from_aligned(&s, eps_vals.clone(), SignMode::Complex).unwrap();
            let f = forest_factorize(&s, &eps).unwrap();
            for (&(r, c), v) in s.edges().iter().zip(&eps_vals) {
                assert!((f.eta[r] * f.zeta[c] - v).norm() < 1e-12);
            }
            // the conjugated coefficients have identical Schatten norms
            let coeffs: Vec<Complex64> = (0..s.n_edges())
                .map(|_| {
                    Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
                })
                .collect();
            let signed: Vec<Complex64> = coeffs
                .iter()
                .zip(&eps_vals)
                .map(|(a, e)| a * e)
                .collect();
            if s.n_edges() == 0 {
                continue;
            }
            let plain = support_matrix(&s, &coeffs);
            let turned = support_matrix(&s, &signed);
            for p in [0.5, 2.0, f64::INFINITY] {
                let a = schatten_norm(&plain, p).unwrap();
                let b = schatten_norm(&turned, p).unwrap();
                assert!((a - b).abs() <= 1e-10 * a.max(1.0), "p={p}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn factorize_rejects_cycles() {
        let s = BipartiteSupport::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let eps = SignAssignment::all_ones(&s, SignMode::Real);
        assert!(matches!(
            forest_factorize(&s, &eps),
            Err(Error::NotAForest(_))
        ));
    }
}

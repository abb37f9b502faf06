//! Dense complex matrices, singular values, Schatten norms, and the
//! numeric search for unconditionality constants.
//!
//! Everything here is the *independent* second route: singular values come
//! from a one-sided Jacobi iteration on the matrix itself and never consult
//! the closed-walk expansion.

use crate::support::BipartiteSupport;
use crate::{Error, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Hard cap on matrix dimensions for the dense Jacobi routines.
pub const MAX_DIM: usize = 512;

// ── complex matrices ─────────────────────────────────────────────────────

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<Complex64>,
}

/// Serialized form: `{"rows": n, "cols": m, "re": [[…]], "im": [[…]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl ComplexMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        ComplexMatrix {
            n_rows,
            n_cols,
            data: vec![Complex64::new(0.0, 0.0); n_rows * n_cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(ComplexMatrix {
            n_rows,
            n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_doc(doc: &MatrixDoc) -> Result<Self> {
        if doc.re.len() != doc.rows || doc.im.len() != doc.rows {
            return Err(Error::Parse(format!(
                "matrix document declares {} rows but re/im have {}/{}",
                doc.rows,
                doc.re.len(),
                doc.im.len()
            )));
        }
        let mut m = ComplexMatrix::zeros(doc.rows, doc.cols);
        for r in 0..doc.rows {
            if doc.re[r].len() != doc.cols || doc.im[r].len() != doc.cols {
                return Err(Error::Parse(format!("row {r} has the wrong length")));
            }
            for c in 0..doc.cols {
                let v = Complex64::new(doc.re[r][c], doc.im[r][c]);
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFinite(format!("matrix entry ({r}, {c})")));
                }
                m[(r, c)] = v;
            }
        }
        Ok(m)
    }

    pub fn to_doc(&self) -> MatrixDoc {
        MatrixDoc {
            rows: self.n_rows,
            cols: self.n_cols,
            re: (0..self.n_rows)
                .map(|r| (0..self.n_cols).map(|c| self[(r, c)].re).collect())
                .collect(),
            im: (0..self.n_rows)
                .map(|r| (0..self.n_cols).map(|c| self[(r, c)].im).collect())
                .collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn conj_transpose(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn frobenius_sqr(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.n_cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.n_cols + c]
    }
}

pub fn parse_matrix(doc: &str) -> Result<ComplexMatrix> {
    let doc: MatrixDoc = serde_json::from_str(doc)?;
    ComplexMatrix::from_doc(&doc)
}

/// Entrywise (Schur) product; dimensions must agree.
pub fn schur_product(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix> {
    if x.n_rows != y.n_rows || x.n_cols != y.n_cols {
        return Err(Error::InvalidParameter(format!(
            "Schur product needs equal shapes, got {}×{} and {}×{}",
            x.n_rows, x.n_cols, y.n_rows, y.n_cols
        )));
    }
    let mut out = ComplexMatrix::zeros(x.n_rows, x.n_cols);
    for i in 0..x.data.len() {
        out.data[i] = x.data[i] * y.data[i];
    }
    Ok(out)
}

/// The matrix `Σ_q v_q e_q` over the support edges (zero elsewhere); `values`
/// aligned with `s.edges()`.
pub fn support_matrix(s: &BipartiteSupport, values: &[Complex64]) -> ComplexMatrix {
    assert_eq!(values.len(), s.n_edges());
    let mut m = ComplexMatrix::zeros(s.n_rows(), s.n_cols());
    for (&(r, c), &v) in s.edges().iter().zip(values) {
        m[(r, c)] = v;
    }
    m
}

// ── singular values: one-sided Jacobi ────────────────────────────────────

/// Singular values, descending, `min(rows, cols)` of them.
///
/// One-sided Jacobi: unitary plane rotations orthogonalize the columns; the
/// singular values are the limiting column norms. Cyclic pair order, at most
/// 60 sweeps, rotations skipped once the normalized inner product falls
/// below 1e−14.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if m.n_rows.max(m.n_cols) > MAX_DIM {
        return Err(Error::InvalidParameter(format!(
            "matrix dimension exceeds the dense cap of {MAX_DIM}"
        )));
    }
    if m.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite("matrix entry".into()));
    }
    let work = if m.n_rows >= m.n_cols {
        m.clone()
    } else {
        m.conj_transpose()
    };
    let (nr, nc) = (work.n_rows, work.n_cols);
    // column-major working copy
    let mut col: Vec<Vec<Complex64>> = (0..nc)
        .map(|c| (0..nr).map(|r| work[(r, c)]).collect())
        .collect();
    const TOL: f64 = 1e-14;
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..nc {
            for q in p + 1..nc {
                let hpp: f64 = col[p].iter().map(|z| z.norm_sqr()).sum();
                let hqq: f64 = col[q].iter().map(|z| z.norm_sqr()).sum();
                let hpq: Complex64 = col[p]
                    .iter()
                    .zip(&col[q])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                if hpq.norm_sqr() <= TOL * TOL * hpp * hqq || hpp == 0.0 || hqq == 0.0 {
                    continue;
                }
                rotated = true;
                let habs = hpq.norm();
                let beta = hpq / habs;
                let tau = (hqq - hpp) / (2.0 * habs);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let bconj = beta.conj();
                for i in 0..nr {
                    let xp = col[p][i];
                    // absorb the phase so the pair rotation is real
                    let u = col[q][i] * bconj;
                    col[p][i] = c * xp - s * u;
                    col[q][i] = s * xp + c * u;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sigma: Vec<f64> = col
        .iter()
        .map(|v| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    sigma.sort_by(|a, b| b.partial_cmp(a).unwrap());
    // flush rotation noise on rank-deficient inputs to exact zeros; without
    // this, p < 1 quasi-norms amplify ~1e−13 phantom values to 1e−7 noise
    let cutoff = sigma.first().copied().unwrap_or(0.0) * 1e-12;
    for s in &mut sigma {
        if *s <= cutoff {
            *s = 0.0;
        }
    }
    Ok(sigma)
}

// ── Hermitian eigenvalues: two-sided Jacobi ──────────────────────────────

/// Eigenvalues of a Hermitian matrix, descending. Errors when the input is
/// not Hermitian to one part in 10¹² of its scale.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if m.n_rows != m.n_cols {
        return Err(Error::InvalidParameter(
            "eigenvalues need a square matrix".into(),
        ));
    }
    let n = m.n_rows;
    if n > MAX_DIM {
        return Err(Error::InvalidParameter(format!(
            "matrix dimension exceeds the dense cap of {MAX_DIM}"
        )));
    }
    if m.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite("matrix entry".into()));
    }
    let scale = m
        .data
        .iter()
        .map(|z| z.norm())
        .fold(0.0f64, f64::max)
        .max(1e-300);
    for r in 0..n {
        for c in 0..n {
            if (m[(r, c)] - m[(c, r)].conj()).norm() > 1e-12 * scale {
                return Err(Error::InvalidParameter(format!(
                    "matrix is not Hermitian at ({r}, {c})"
                )));
            }
        }
    }
    let mut a = m.clone();
    const TOL: f64 = 1e-13;
    for _sweep in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(a[(p, q)].norm());
            }
        }
        if off <= TOL * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.norm() <= 0.1 * TOL * scale {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let habs = apq.norm();
                let beta = apq / habs;
                let tau = (aqq - app) / (2.0 * habs);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A ← Jᴴ A J with J the identity outside the (p,q) plane,
                // J[p][p]=c, J[p][q]=s·β, J[q][p]=−s·β̄, J[q][q]=c
                let bconj = beta.conj();
                for i in 0..n {
                    let xp = a[(i, p)];
                    let xq = a[(i, q)];
                    a[(i, p)] = c * xp - s * bconj * xq;
                    a[(i, q)] = s * beta * xp + c * xq;
                }
                for j in 0..n {
                    let xp = a[(p, j)];
                    let xq = a[(q, j)];
                    a[(p, j)] = c * xp - s * beta * xq;
                    a[(q, j)] = s * bconj * xp + c * xq;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    eig.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(eig)
}

// ── Schatten norms ───────────────────────────────────────────────────────

/// `(Σ σ_i^p)^{1/p}` for finite `p > 0` (a quasi-norm below 1), largest
/// singular value for `p = ∞`.
pub fn schatten_norm(m: &ComplexMatrix, p: f64) -> Result<f64> {
    validate_exponent(p)?;
    let sigma = singular_values(m)?;
    Ok(schatten_from_sigma(&sigma, p))
}

pub(crate) fn validate_exponent(p: f64) -> Result<()> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Schatten exponent must be positive or ∞, got {p}"
        )));
    }
    Ok(())
}

pub(crate) fn schatten_from_sigma(sigma: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        sigma.first().copied().unwrap_or(0.0)
    } else {
        sigma.iter().map(|s| s.powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

// ── sign assignments ─────────────────────────────────────────────────────

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignMode {
    /// Entries restricted to ±1 exactly.
    Real,
    /// Any unimodular complex entries.
    Complex,
}

/// One unimodular sign per support edge, aligned with `s.edges()`.
#[derive(Debug, Clone, PartialEq)]
pub struct SignAssignment {
    mode: SignMode,
    values: Vec<Complex64>,
}

impl SignAssignment {
    /// Validates one entry per support edge: unimodular to 1e−12, and exactly
    /// ±1 in real mode.
    pub fn new(
        s: &BipartiteSupport,
        entries: &[((usize, usize), Complex64)],
        mode: SignMode,
    ) -> Result<Self> {
        let mut values: Vec<Option<Complex64>> = vec![None; s.n_edges()];
        let position: std::collections::BTreeMap<(usize, usize), usize> = s
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &q)| (q, i))
            .collect();
        for &((row, col), v) in entries {
            let Some(&i) = position.get(&(row, col)) else {
                return Err(Error::SignOffSupport { row, col });
            };
            if values[i].is_some() {
                return Err(Error::Parse(format!("sign for ({row}, {col}) given twice")));
            }
            values[i] = Some(v);
        }
        let values: Vec<Complex64> = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let (row, col) = s.edges()[i];
                v.ok_or(Error::MissingSign { row, col })
            })
            .collect::<Result<_>>()?;
        Self::from_aligned(s, values, mode)
    }

    pub fn from_aligned(
        s: &BipartiteSupport,
        values: Vec<Complex64>,
        mode: SignMode,
    ) -> Result<Self> {
        if values.len() != s.n_edges() {
            return Err(Error::InvalidParameter(format!(
                "{} signs for {} edges",
                values.len(),
                s.n_edges()
            )));
        }
        for (&(row, col), &v) in s.edges().iter().zip(&values) {
            let modulus = v.norm();
            if (modulus - 1.0).abs() > 1e-12 {
                return Err(Error::NotUnimodular { row, col, modulus });
            }
            if mode == SignMode::Real && (v.im != 0.0 || (v.re != 1.0 && v.re != -1.0)) {
                return Err(Error::NotRealSign { row, col });
            }
        }
        Ok(SignAssignment { mode, values })
    }

    pub fn all_ones(s: &BipartiteSupport, mode: SignMode) -> Self {
        SignAssignment {
            mode,
            values: vec![Complex64::new(1.0, 0.0); s.n_edges()],
        }
    }

    /// Real pattern from a bitmask: bit `i` set puts −1 on edge `i`.
    /// Only supports with at most 64 edges can be addressed this way.
    pub fn from_bits(s: &BipartiteSupport, bits: u64) -> Self {
        assert!(s.n_edges() <= 64, "bitmask patterns need ≤ 64 edges");
        let values = (0..s.n_edges())
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Complex64::new(-1.0, 0.0)
                } else {
                    Complex64::new(1.0, 0.0)
                }
            })
            .collect();
        SignAssignment {
            mode: SignMode::Real,
            values,
        }
    }

    pub fn mode(&self) -> SignMode {
        self.mode
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

// ── Φ via singular values ────────────────────────────────────────────────

/// `‖Σ_q ε_q a_q e_q‖_{2k}^{2k}` computed from singular values alone —
/// independent of the closed-walk route.
pub fn phi_direct(s: &BipartiteSupport, eps: &[Complex64], a: &[Complex64], k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be ≥ 1".into()));
    }
    if eps.len() != s.n_edges() || a.len() != s.n_edges() {
        return Err(Error::InvalidParameter(format!(
            "need one sign and one coefficient per edge: {} edges, {} signs, {} coefficients",
            s.n_edges(),
            eps.len(),
            a.len()
        )));
    }
    let values: Vec<Complex64> = eps.iter().zip(a).map(|(e, x)| e * x).collect();
    let sigma = singular_values(&support_matrix(s, &values))?;
    Ok(sigma.iter().map(|s| s.powi(2 * k as i32)).sum())
}

// ── the 2×2 eigenvalue curve ─────────────────────────────────────────────

/// Closed-form spectral data of `[[1, √2], [√2, t]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigencurvePoint {
    pub eigenvalues: (f64, f64),
    pub operator_norm: f64,
    pub p_norm_pow_p: f64,
}

/// Eigenvalues `(1 + t ± √(9 − 2t + t²))/2`; the matrix is symmetric so its
/// singular values are their absolute values. Defined for |t| ≤ 1, the
/// perturbative regime around the base point t = 0.
pub fn eigencurve_check(t: f64, p: f64) -> Result<EigencurvePoint> {
    validate_exponent(p)?;
    if !t.is_finite() {
        return Err(Error::NonFinite("eigencurve parameter".into()));
    }
    if t.abs() > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "eigencurve parameter must satisfy |t| ≤ 1, got {t}"
        )));
    }
    let root = (9.0 - 2.0 * t + t * t).sqrt();
    let plus = (1.0 + t + root) / 2.0;
    let minus = (1.0 + t - root) / 2.0;
    let (s1, s2) = (plus.abs(), minus.abs());
    let operator_norm = s1.max(s2);
    let p_norm_pow_p = if p.is_infinite() {
        operator_norm
    } else {
        s1.powf(p) + s2.powf(p)
    };
    Ok(EigencurvePoint {
        eigenvalues: (plus, minus),
        operator_norm,
        p_norm_pow_p,
    })
}

// ── unconditionality constant search ─────────────────────────────────────

/// Result of a sign-search: a certified lower bound on the unconditionality
/// constant (exact for forests), with the data needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantEstimate {
    pub value: f64,
    /// True when the value is the exact constant (forests); otherwise the
    /// value is only a lower bound witnessed by `best_signs`/`best_coeffs`.
    pub exact: bool,
    pub exhaustive_signs: bool,
    pub seed: u64,
    pub trials: u32,
    #[serde(serialize_with = "serialize_complex_vec")]
    pub best_signs: Vec<Complex64>,
    #[serde(serialize_with = "serialize_complex_vec")]
    pub best_coeffs: Vec<Complex64>,
}

fn serialize_complex_vec<S: serde::Serializer>(
    v: &[Complex64],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

/// Largest ratio `‖Σ ε_q a_q e_q‖_p / ‖Σ a_q e_q‖_p` over real signs
/// `ε ∈ {−1,1}^I` (modulo a global flip) found by exhaustive or sampled sign
/// enumeration, deterministic coefficient probes plus `trials` seeded
/// Gaussian draws, and coordinate-ascent refinement of the leaders.
pub fn real_unconditional_constant(
    s: &BipartiteSupport,
    p: f64,
    trials: u32,
    seed: u64,
) -> Result<ConstantEstimate> {
    search_constant(s, p, trials, seed, SignMode::Real)
}

/// Same search over unimodular complex signs: ±1 corners, structured phase
/// patterns, seeded unimodular draws, and phase-coordinate ascent. Returns at
/// least the real-mode value on the same budget.
pub fn complex_unconditional_constant(
    s: &BipartiteSupport,
    p: f64,
    trials: u32,
    seed: u64,
) -> Result<ConstantEstimate> {
    let real = search_constant(s, p, trials, seed, SignMode::Real)?;
    let complex = search_constant(s, p, trials, seed, SignMode::Complex)?;
    Ok(if complex.value >= real.value {
        complex
    } else {
        ConstantEstimate {
            exhaustive_signs: complex.exhaustive_signs,
            ..real
        }
    })
}

const ASCENT_MAX_SWEEPS: usize = 200;
const ASCENT_MIN_GAIN: f64 = 1e-9;
const EXHAUSTIVE_SIGN_LIMIT: usize = 20;
const TOP_CANDIDATES: usize = 3;

struct Candidate {
    ratio: f64,
    eps: Vec<Complex64>,
    coeffs: Vec<Complex64>,
}

fn search_constant(
    s: &BipartiteSupport,
    p: f64,
    trials: u32,
    seed: u64,
    mode: SignMode,
) -> Result<ConstantEstimate> {
    validate_exponent(p)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be ≥ 1".into()));
    }
    let ne = s.n_edges();
    let ones = vec![Complex64::new(1.0, 0.0); ne.max(1)];
    if s.is_forest() {
        // diagonal sign multipliers factor through unitaries on forests:
        // the constant is exactly 1
        return Ok(ConstantEstimate {
            value: 1.0,
            exact: true,
            exhaustive_signs: true,
            seed,
            trials,
            best_signs: ones[..ne].to_vec(),
            best_coeffs: ones[..ne].to_vec(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probes = coefficient_probes(s, &mut rng, trials);
    let (sign_patterns, exhaustive_signs) = sign_patterns(s, &mut rng, trials, mode);

    let mut top: Vec<Candidate> = Vec::new();
    let mut consider = |ratio: f64, eps: &[Complex64], coeffs: &[Complex64]| {
        if !ratio.is_finite() {
            return;
        }
        // strict comparison keeps the earliest (lexicographically first) ties
        if top.len() < TOP_CANDIDATES || ratio > top.last().unwrap().ratio {
            top.push(Candidate {
                ratio,
                eps: eps.to_vec(),
                coeffs: coeffs.to_vec(),
            });
            top.sort_by(|a, b| b.ratio.partial_cmp(&a.ratio).unwrap());
            top.truncate(TOP_CANDIDATES);
        }
    };

    for eps in &sign_patterns {
        for a in &probes {
            consider(eval_ratio(s, eps, a, p)?, eps, a);
        }
    }
    if mode == SignMode::Complex {
        // paired structured probe: phase pattern and its conjugate coefficients
        if let Some((eps, a)) = dft_pair(s) {
            consider(eval_ratio(s, &eps, &a, p)?, &eps, &a);
        }
    }

    let mut best = Candidate {
        ratio: 1.0,
        eps: ones[..ne].to_vec(),
        coeffs: ones[..ne].to_vec(),
    };
    for cand in top {
        let refined = ascend(s, p, cand, mode)?;
        if refined.ratio > best.ratio {
            best = refined;
        }
    }
    Ok(ConstantEstimate {
        value: best.ratio,
        exact: false,
        exhaustive_signs,
        seed,
        trials,
        best_signs: best.eps,
        best_coeffs: best.coeffs,
    })
}

fn eval_ratio(s: &BipartiteSupport, eps: &[Complex64], a: &[Complex64], p: f64) -> Result<f64> {
    let den = schatten_from_sigma(&singular_values(&support_matrix(s, a))?, p);
    if den <= 0.0 {
        return Ok(0.0);
    }
    let signed: Vec<Complex64> = eps.iter().zip(a).map(|(e, x)| e * x).collect();
    let num = schatten_from_sigma(&singular_values(&support_matrix(s, &signed))?, p);
    Ok(num / den)
}

/// Deterministic coefficient probes (all-ones; every ±1 pattern on small
/// supports; circulant symbols and diagonal phase ramps on square supports)
/// followed by `trials` seeded complex Gaussian draws.
fn coefficient_probes(
    s: &BipartiteSupport,
    rng: &mut ChaCha8Rng,
    trials: u32,
) -> Vec<Vec<Complex64>> {
    let ne = s.n_edges();
    let mut probes = Vec::new();
    probes.push(vec![Complex64::new(1.0, 0.0); ne]);
    if ne <= 10 {
        for bits in 1u64..1 << ne {
            probes.push(
                (0..ne)
                    .map(|i| Complex64::new(if bits >> i & 1 == 1 { -1.0 } else { 1.0 }, 0.0))
                    .collect(),
            );
        }
    }
    if s.n_rows() == s.n_cols() && s.n_rows() >= 2 && s.n_rows() <= 8 {
        let n = s.n_rows();
        // circulant symbols g: entry (r,c) = g[(r − c) mod n]
        let from_symbol = |g: &dyn Fn(usize) -> Complex64| -> Vec<Complex64> {
            s.edges().iter().map(|&(r, c)| g((r + n - c) % n)).collect()
        };
        for bits in 0u64..1 << n {
            let g: Vec<Complex64> = (0..n)
                .map(|j| Complex64::new(if bits >> j & 1 == 1 { -1.0 } else { 1.0 }, 0.0))
                .collect();
            probes.push(from_symbol(&|j| g[j]));
        }
        // circulants with ±1 spectrum (entries = inverse transform of the
        // sign vector); these extremize multiplier ratios at p ∈ {1, ∞}
        for bits in 0u64..1 << n {
            let g: Vec<Complex64> = (0..n)
                .map(|j| {
                    (0..n)
                        .map(|m| {
                            let sign = if bits >> m & 1 == 1 { -1.0 } else { 1.0 };
                            sign * Complex64::from_polar(
                                1.0,
                                2.0 * std::f64::consts::PI * (j * m) as f64 / n as f64,
                            )
                        })
                        .sum::<Complex64>()
                        / n as f64
                })
                .collect();
            probes.push(from_symbol(&|j| g[j]));
        }
        // diagonal phase ramp: e^{iu} on the diagonal, 1 off it
        for m in 0..16 {
            let u = std::f64::consts::PI * m as f64 / 8.0;
            probes.push(from_symbol(&|j| {
                if j == 0 {
                    Complex64::from_polar(1.0, u)
                } else {
                    Complex64::new(1.0, 0.0)
                }
            }));
        }
    }
    for _ in 0..trials {
        probes.push(
            (0..ne)
                .map(|_| {
                    Complex64::new(
                        standard_normal(rng),
                        standard_normal(rng),
                    )
                })
                .collect(),
        );
    }
    probes
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box–Muller; two uniforms per call keeps the stream layout simple
    let u1: f64 = rng.random::<f64>().max(1e-300);
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Sign patterns to enumerate: every ±1 assignment modulo the global flip
/// for small supports, otherwise a seeded sample (flagged non-exhaustive).
/// Complex mode adds seeded unimodular draws on top of the corners.
fn sign_patterns(
    s: &BipartiteSupport,
    rng: &mut ChaCha8Rng,
    trials: u32,
    mode: SignMode,
) -> (Vec<Vec<Complex64>>, bool) {
    let ne = s.n_edges();
    let mut out = Vec::new();
    let exhaustive = ne <= EXHAUSTIVE_SIGN_LIMIT;
    if exhaustive {
        // fix the sign of edge 0 to +1: ε and −ε give the same multiplier norm
        for bits in 0u64..1 << (ne - 1) {
            out.push(SignAssignment::from_bits(s, bits << 1).values.clone());
        }
    } else {
        out.push(vec![Complex64::new(1.0, 0.0); ne]);
        for _ in 0..trials {
            out.push(
                (0..ne)
                    .map(|_| Complex64::new(if rng.random::<bool>() { 1.0 } else { -1.0 }, 0.0))
                    .collect(),
            );
        }
    }
    if mode == SignMode::Complex {
        for _ in 0..trials.min(64) {
            out.push(
                (0..ne)
                    .map(|_| Complex64::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU))
                    .collect(),
            );
        }
    }
    (out, exhaustive)
}

/// On a square support: the discrete-Fourier phase pattern and its conjugate
/// as coefficients, the standard extremal pair for full supports.
fn dft_pair(s: &BipartiteSupport) -> Option<(Vec<Complex64>, Vec<Complex64>)> {
    if s.n_rows() != s.n_cols() || s.n_rows() < 2 {
        return None;
    }
    let n = s.n_rows();
    let eps: Vec<Complex64> = s
        .edges()
        .iter()
        .map(|&(r, c)| Complex64::from_polar(1.0, std::f64::consts::TAU * (r * c % n) as f64 / n as f64))
        .collect();
    let coeffs: Vec<Complex64> = eps.iter().map(|z| z.conj()).collect();
    Some((eps, coeffs))
}

/// Coordinate ascent on the ratio: per coordinate, a coarse grid then golden
/// section on the bracketing interval; real and imaginary coefficient parts
/// always, sign phases in complex mode. Stops when a full sweep gains less
/// than 1e−9 or after 200 sweeps.
fn ascend(s: &BipartiteSupport, p: f64, cand: Candidate, mode: SignMode) -> Result<Candidate> {
    let Candidate {
        mut ratio,
        mut eps,
        mut coeffs,
    } = cand;
    let ne = s.n_edges();
    for _sweep in 0..ASCENT_MAX_SWEEPS {
        let before = ratio;
        for i in 0..ne {
            let (v, r) = line_max(
                |x| {
                    let mut a = coeffs.clone();
                    a[i].re = x;
                    eval_ratio(s, &eps, &a, p)
                },
                coeffs[i].re,
                ratio,
            )?;
            coeffs[i].re = v;
            ratio = r;
            let (v, r) = line_max(
                |x| {
                    let mut a = coeffs.clone();
                    a[i].im = x;
                    eval_ratio(s, &eps, &a, p)
                },
                coeffs[i].im,
                ratio,
            )?;
            coeffs[i].im = v;
            ratio = r;
            if mode == SignMode::Complex {
                let theta0 = eps[i].arg();
                let (v, r) = line_max(
                    |x| {
                        let mut e = eps.clone();
                        e[i] = Complex64::from_polar(1.0, x);
                        eval_ratio(s, &e, &coeffs, p)
                    },
                    theta0,
                    ratio,
                )?;
                eps[i] = Complex64::from_polar(1.0, v);
                ratio = r;
            }
        }
        if ratio - before < ASCENT_MIN_GAIN {
            break;
        }
    }
    Ok(Candidate { ratio, eps, coeffs })
}

/// Maximize a 1-D slice: 9-point grid on a radius around the current value,
/// then golden-section refinement of the best bracket.
fn line_max(
    f: impl Fn(f64) -> Result<f64>,
    x0: f64,
    fx0: f64,
) -> Result<(f64, f64)> {
    let radius = x0.abs().max(1.0) * 2.0;
    let mut best = (x0, fx0);
    let grid = 9;
    let mut xs = Vec::with_capacity(grid + 1);
    for g in 0..=grid {
        let x = x0 - radius + 2.0 * radius * g as f64 / grid as f64;
        xs.push(x);
        let v = f(x)?;
        if v > best.1 {
            best = (x, v);
        }
    }
    // golden section around the best grid point
    let step = 2.0 * radius / grid as f64;
    let (mut lo, mut hi) = (best.0 - step, best.0 + step);
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INVPHI * (hi - lo);
    let mut x2 = lo + INVPHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..30 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INVPHI * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INVPHI * (hi - lo);
            f1 = f(x1)?;
        }
        let (x, v) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        if v > best.1 {
            best = (x, v);
        }
    }
    Ok(best)
}

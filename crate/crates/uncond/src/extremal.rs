//! Support constructions with extremal combinatorial structure: cycles,
//! Hankel patterns cut out by integer sets, sum-independence checking, the
//! grid-to-Hankel transfer, the Fano plane incidence fixture, and the
//! girth-based counting bound on edge density.

use crate::support::BipartiteSupport;
use crate::{Error, Result};

/// The standard 2s-cycle support `{(i, i), (i, i+1 mod s)}` on s×s.
pub fn cycle_support(s: usize) -> Result<BipartiteSupport> {
    if s < 2 {
        return Err(Error::InvalidParameter("cycle needs s ≥ 2".into()));
    }
    let edges: Vec<(usize, usize)> = (0..s).flat_map(|i| [(i, i), (i, (i + 1) % s)]).collect();
    BipartiteSupport::new(s, s, &edges)
}

fn validate_integer_set(lambda: &[usize]) -> Result<()> {
    if !lambda.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(
            "integer set must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Edges exactly where `r + c ∈ Λ`, truncated to the `n_rows × n_cols`
/// rectangle; elements of Λ beyond the largest reachable sum contribute
/// nothing.
pub fn hankel_support(
    lambda: &[usize],
    n_rows: usize,
    n_cols: usize,
) -> Result<BipartiteSupport> {
    validate_integer_set(lambda)?;
    if n_rows == 0 || n_cols == 0 {
        return Err(Error::InvalidParameter("dimensions must be ≥ 1".into()));
    }
    let member: std::collections::BTreeSet<usize> = lambda.iter().copied().collect();
    let mut edges = Vec::new();
    for r in 0..n_rows {
        for c in 0..n_cols {
            if member.contains(&(r + c)) {
                edges.push((r, c));
            }
        }
    }
    BipartiteSupport::new(n_rows, n_cols, &edges)
}

/// Outcome of a sum-independence check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum IndependenceCheck {
    Independent,
    /// Two distinct n-element multisets with the same sum.
    Witness {
        left: Vec<usize>,
        right: Vec<usize>,
    },
}

impl IndependenceCheck {
    pub fn is_independent(&self) -> bool {
        matches!(self, IndependenceCheck::Independent)
    }
}

/// Whether every integer has at most one representation as a sum of `n`
/// elements of Λ, up to reordering. Brute force over all n-multisets
/// (feasible up to 10⁷ of them); the first collision in lexicographic
/// enumeration order is returned as the witness.
pub fn is_n_independent(lambda: &[usize], n: usize) -> Result<IndependenceCheck> {
    validate_integer_set(lambda)?;
    if n == 0 {
        return Err(Error::InvalidParameter("independence order must be ≥ 1".into()));
    }
    let multisets = count_multisets(lambda.len(), n);
    if multisets > 10_000_000 {
        return Err(Error::InvalidParameter(format!(
            "enumeration of {multisets} multisets exceeds the 10⁷ cap"
        )));
    }
    let mut seen: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        lambda: &[usize],
        n: usize,
        start: usize,
        sum: usize,
        stack: &mut Vec<usize>,
        seen: &mut std::collections::HashMap<usize, Vec<usize>>,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if stack.len() == n {
            let values: Vec<usize> = stack.iter().map(|&i| lambda[i]).collect();
            if let Some(prev) = seen.get(&sum) {
                return Some((prev.clone(), values));
            }
            seen.insert(sum, values);
            return None;
        }
        for i in start..lambda.len() {
            stack.push(i);
            let hit = rec(lambda, n, i, sum + lambda[i], stack, seen);
            stack.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
    Ok(match rec(lambda, n, 0, 0, &mut stack, &mut seen) {
        Some((left, right)) => IndependenceCheck::Witness { left, right },
        None => IndependenceCheck::Independent,
    })
}

fn count_multisets(set_size: usize, n: usize) -> u64 {
    // C(set_size + n − 1, n), saturating
    let mut acc: u64 = 1;
    for i in 0..n as u64 {
        acc = acc.saturating_mul(set_size as u64 + i) / (i + 1);
    }
    acc
}

/// A full grid carried into a Hankel pattern by vertex labels.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferCheck {
    /// Support on `r_set.len() × c_set.len()` index space with an edge at
    /// `(i, j)` whenever `r_set[i] + c_set[j] ∈ Λ`.
    pub support: BipartiteSupport,
    /// True when every value has at most one representation `r + c`.
    pub valid: bool,
    /// Index pairs `((i, j), (i', j'))` with equal sums, when not valid.
    pub collision: Option<((usize, usize), (usize, usize))>,
}

/// Transfer a pattern on sums to a support on the index grid; the result is
/// faithful (sums are "independent coordinates") exactly when all pairwise
/// sums `r + c` are distinct, which is checked by brute force.
pub fn transfer_support(
    r_set: &[usize],
    c_set: &[usize],
    lambda: &[usize],
) -> Result<TransferCheck> {
    validate_integer_set(r_set)?;
    validate_integer_set(c_set)?;
    validate_integer_set(lambda)?;
    if r_set.is_empty() || c_set.is_empty() {
        return Err(Error::InvalidParameter(
            "transfer needs nonempty row and column sets".into(),
        ));
    }
    let member: std::collections::BTreeSet<usize> = lambda.iter().copied().collect();
    let mut edges = Vec::new();
    let mut first_for_sum: std::collections::HashMap<usize, (usize, usize)> =
        std::collections::HashMap::new();
    let mut collision = None;
    for (i, &r) in r_set.iter().enumerate() {
        for (j, &c) in c_set.iter().enumerate() {
            if member.contains(&(r + c)) {
                edges.push((i, j));
            }
            if collision.is_none() {
                if let Some(&prev) = first_for_sum.get(&(r + c)) {
                    collision = Some((prev, (i, j)));
                } else {
                    first_for_sum.insert(r + c, (i, j));
                }
            }
        }
    }
    Ok(TransferCheck {
        support: BipartiteSupport::new(r_set.len(), c_set.len(), &edges)?,
        valid: collision.is_none(),
        collision,
    })
}

/// Point–line incidence of the Fano plane: 7 lines `{i, i+1, i+3} mod 7`
/// over 7 points. 21 edges, girth 6, every pair of points on exactly one
/// line.
pub fn fano_incidence() -> BipartiteSupport {
    let edges: Vec<(usize, usize)> = (0..7)
        .flat_map(|line| [0, 1, 3].map(|d| (line, (line + d) % 7)))
        .collect();
    BipartiteSupport::new(7, 7, &edges).expect("fixed incidence list is valid")
}

/// Slack of the averaged counting bound for a bipartite graph with girth
/// > 2k: the side with `n` vertices satisfies
/// `n ≥ Σ_{i=0}^k (e/m − 1)^{⌈i/2⌉} (e/n − 1)^{⌊i/2⌋}`
/// where `m` counts the opposite side and `e` the edges. Returns the
/// difference (left minus right); meaningful when e/m ≥ 1 and e/n ≥ 1.
pub fn moore_slack(n: f64, m: f64, e: f64, k: u32) -> f64 {
    let a = e / m - 1.0;
    let b = e / n - 1.0;
    let mut sum = 0.0;
    for i in 0..=k {
        sum += a.powi((i as i32 + 1) / 2) * b.powi(i as i32 / 2);
    }
    n - sum
}

/// Girth condition and counting-bound slack for a concrete support, in both
/// orientations.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MooreReport {
    /// Even girth strictly above 2k (forests count as infinite girth).
    pub girth_ok: bool,
    /// Average degrees at least 1 on both sides; below that the bound
    /// degenerates and the slack carries no information.
    pub meaningful: bool,
    /// Slack bounding the column count.
    pub slack_cols: f64,
    /// Slack bounding the row count.
    pub slack_rows: f64,
}

impl MooreReport {
    /// The binding side.
    pub fn slack(&self) -> f64 {
        self.slack_cols.min(self.slack_rows)
    }
}

pub fn moore_check(s: &BipartiteSupport, k: u32) -> MooreReport {
    let girth_ok = match s.even_girth() {
        None => true,
        Some(g) => g.length > 2 * k as usize,
    };
    let (n, m, e) = (s.n_cols() as f64, s.n_rows() as f64, s.n_edges() as f64);
    MooreReport {
        girth_ok,
        meaningful: e >= m && e >= n,
        slack_cols: moore_slack(n, m, e, k),
        slack_rows: moore_slack(m, n, e, k),
    }
}

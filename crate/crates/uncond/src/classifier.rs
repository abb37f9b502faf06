//! Top-level verdicts: for which Schatten exponents a support is
//! 1-unconditional, whether sign multipliers factorize, and bounded evidence
//! for the asymptotic criteria (the J_k completion property and the odd
//! distance d_∞) on growing families of supports.

use crate::extremal::hankel_support;
use crate::support::{BipartiteSupport, Cycle, Path, Vertex};
use crate::{Error, Result};
use serde::Serialize;

// ── exponent profiles ────────────────────────────────────────────────────

/// The set of exponents for which the elementary matrices on a support form
/// a 1-unconditional basic sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExponentSet {
    /// Every p ∈ (0, ∞]: forests only.
    AllExponents,
    /// The even integers {2, 4, …, max_even} and nothing else.
    EvenUpTo { max_even: usize },
}

impl ExponentSet {
    /// Membership test. `p = ∞` is allowed and lies only in
    /// [`ExponentSet::AllExponents`].
    pub fn contains(&self, p: f64) -> bool {
        if p.is_nan() || p <= 0.0 {
            return false;
        }
        match self {
            ExponentSet::AllExponents => true,
            ExponentSet::EvenUpTo { max_even } => {
                if !p.is_finite() {
                    return false;
                }
                let half = p / 2.0;
                half.fract() == 0.0 && p >= 2.0 && p <= *max_even as f64
            }
        }
    }
}

/// Certificate backing a profile: either a factorization guarantee or the
/// shortest cycle that caps the exponent range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProfileCertificate {
    /// The support has no cycle, so every sign pattern factors through
    /// diagonal unitaries.
    ForestFactorization,
    /// A shortest cycle; its length g limits 1-unconditionality to even
    /// p ≤ g − 2.
    ShortestCycle { cycle: Cycle },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnconditionalityProfile {
    pub forest: bool,
    pub even_girth: Option<usize>,
    pub one_unconditional_p: ExponentSet,
    /// Constant-1 interpolation status: holds exactly for forests.
    pub v_interpolation_constant_1: bool,
    pub certificate: ProfileCertificate,
}

/// Classify a support by its cycle structure: forests are 1-unconditional
/// in every S^p; otherwise the even girth g caps the range at the even
/// integers up to g − 2 (p = 2 is always included — length-2 closed walks
/// cannot wrap a cycle).
pub fn classify(s: &BipartiteSupport) -> UnconditionalityProfile {
    match s.even_girth() {
        None => UnconditionalityProfile {
            forest: true,
            even_girth: None,
            one_unconditional_p: ExponentSet::AllExponents,
            v_interpolation_constant_1: true,
            certificate: ProfileCertificate::ForestFactorization,
        },
        Some(girth) => UnconditionalityProfile {
            forest: false,
            even_girth: Some(girth.length),
            one_unconditional_p: ExponentSet::EvenUpTo {
                max_even: girth.length - 2,
            },
            v_interpolation_constant_1: false,
            certificate: ProfileCertificate::ShortestCycle {
                cycle: girth.witness,
            },
        },
    }
}

/// True when every path in the support has length at most 2, i.e. the
/// support is a disjoint union of stars; coefficientwise sup norms then
/// agree between the injective and projective tensor readings.
pub fn star_union_tensor_verdict(s: &BipartiteSupport) -> bool {
    s.is_star_union()
}

// ── support families ─────────────────────────────────────────────────────

#[derive(Debug, Clone, PartialEq)]
enum FamilyKind {
    /// Level n: n+1 internally disjoint paths of odd length 2j+1 between
    /// col 0 and row 0 (a generalized theta graph).
    Theta { j: usize },
    /// Level n: the Hankel support of Λ on (n+1)×(n+1).
    Hankel { lambda: Vec<usize> },
    /// The same support at every level.
    Constant { support: BipartiteSupport },
    /// Explicit nested levels.
    Explicit { levels: Vec<BipartiteSupport> },
}

/// A monotone family of supports indexed by level: level n's edges are
/// contained in level n+1's. Asymptotic properties are probed on finite
/// levels, so every verdict derived from a family carries its level bound.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportFamily {
    kind: FamilyKind,
    description: String,
}

impl SupportFamily {
    /// Generalized theta graph family: level n has n+1 internally disjoint
    /// col-0-to-row-0 paths of length 2j+1, so its girth is 4j+2.
    pub fn theta(j: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidParameter(
                "theta family needs arc half-length j ≥ 1".into(),
            ));
        }
        Ok(SupportFamily {
            kind: FamilyKind::Theta { j },
            description: format!("theta:{j}"),
        })
    }

    /// Growing square truncations of the Hankel support of Λ.
    pub fn hankel(lambda: Vec<usize>) -> Result<Self> {
        hankel_support(&lambda, 1, 1)?;
        let description = format!(
            "hankel:{}",
            lambda
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        Ok(SupportFamily {
            kind: FamilyKind::Hankel { lambda },
            description,
        })
    }

    pub fn constant(support: BipartiteSupport) -> Self {
        SupportFamily {
            kind: FamilyKind::Constant { support },
            description: "constant".into(),
        }
    }

    /// Explicit levels; each level must contain all edges of the previous
    /// one.
    pub fn explicit(levels: Vec<BipartiteSupport>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidParameter(
                "explicit family needs at least one level".into(),
            ));
        }
        for i in 1..levels.len() {
            for &(row, col) in levels[i - 1].edges() {
                if !levels[i].has_edge(row, col) {
                    return Err(Error::NonMonotoneFamily {
                        level: i,
                        prev: i - 1,
                        row,
                        col,
                    });
                }
            }
        }
        Ok(SupportFamily {
            kind: FamilyKind::Explicit { levels },
            description: "explicit".into(),
        })
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Deepest level an explicit family can serve; generated families have
    /// no intrinsic bound.
    pub fn max_explicit_level(&self) -> Option<usize> {
        match &self.kind {
            FamilyKind::Explicit { levels } => Some(levels.len() - 1),
            _ => None,
        }
    }

    pub fn level(&self, n: usize) -> Result<BipartiteSupport> {
        match &self.kind {
            FamilyKind::Theta { j } => Ok(theta_level(*j, n)),
            FamilyKind::Hankel { lambda } => hankel_support(lambda, n + 1, n + 1),
            FamilyKind::Constant { support } => Ok(support.clone()),
            FamilyKind::Explicit { levels } => levels.get(n).cloned().ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "explicit family has {} levels, level {n} requested",
                    levels.len()
                ))
            }),
        }
    }
}

fn theta_level(j: usize, n: usize) -> BipartiteSupport {
    let arcs = n + 1;
    let dim = 1 + arcs * j;
    let mut edges = Vec::with_capacity(arcs * (2 * j + 1));
    for t in 0..arcs {
        // interior vertices of arc t: rows and cols 1 + t·j … t·j + j
        let base = 1 + t * j;
        let rho = |i: usize| base + i - 1;
        let gamma = |i: usize| base + i - 1;
        edges.push((rho(1), 0));
        for i in 1..=j {
            edges.push((rho(i), gamma(i)));
            if i < j {
                edges.push((rho(i + 1), gamma(i)));
            }
        }
        edges.push((0, gamma(j)));
    }
    BipartiteSupport::new(dim, dim, &edges).expect("theta construction is valid")
}

// ── the J_k completion property ──────────────────────────────────────────

/// Step budget shared by the path enumeration and completion searches of a
/// single [`check_jk`] call.
const JK_STEP_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JkCounterexample {
    /// The odd-length path that stays completable.
    pub path: Path,
    /// A cycle completing it with edges outside the deepest tested
    /// deletion rectangle.
    pub cycle: Cycle,
}

/// Bounded evidence for the completion property J_k.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JkReport {
    pub k: usize,
    /// Completions were drawn from the support at this level.
    pub max_level: usize,
    pub top_level_edges: usize,
    /// Odd-length paths examined.
    pub paths_checked: u64,
    /// When the property holds on this evidence: the deepest deletion level
    /// that was needed to kill all completions of some path. Deletion
    /// rectangles are the row/column hulls of levels 0 … max_level − 1.
    pub holds_up_to_level: Option<usize>,
    pub counterexample: Option<JkCounterexample>,
}

impl JkReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct JkSearch {
    top: BipartiteSupport,
    /// Row/column membership masks of the rectangle hull of each level
    /// 0 … max_level − 1.
    hull_rows: Vec<Vec<bool>>,
    hull_cols: Vec<Vec<bool>>,
    k: usize,
    budget: u64,
}

/// Evidence check for J_k: every simple path of odd length ≤ k in the top
/// level, once the rectangle hull of some tested lower level is removed,
/// must admit no completion to a cycle of length in {4j+2, …, 2k} (path
/// length 2j+1; completion edges are drawn from the top level outside the
/// hull, the path's own edges are unrestricted).
///
/// A path completable past every tested hull is reported as a
/// counterexample with its surviving cycle. This is bounded evidence in
/// both directions, not a proof: deletion sets range only over level hulls
/// and completions only over the top level.
pub fn check_jk(family: &SupportFamily, k: usize, max_level: usize) -> Result<JkReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("J_k needs k ≥ 1".into()));
    }
    if max_level == 0 {
        return Err(Error::InvalidParameter(
            "need max_level ≥ 1 so that at least level 0 can be deleted".into(),
        ));
    }
    let top = family.level(max_level)?;
    let mut hull_rows = Vec::with_capacity(max_level);
    let mut hull_cols = Vec::with_capacity(max_level);
    for l in 0..max_level {
        let level = family.level(l)?;
        let (rows, cols) = level.touched();
        let mut rmask = vec![false; top.n_rows()];
        let mut cmask = vec![false; top.n_cols()];
        for r in rows {
            if r >= top.n_rows() {
                return Err(Error::NonMonotoneFamily {
                    level: max_level,
                    prev: l,
                    row: r,
                    col: 0,
                });
            }
            rmask[r] = true;
        }
        for c in cols {
            if c >= top.n_cols() {
                return Err(Error::NonMonotoneFamily {
                    level: max_level,
                    prev: l,
                    row: 0,
                    col: c,
                });
            }
            cmask[c] = true;
        }
        hull_rows.push(rmask);
        hull_cols.push(cmask);
    }
    let mut search = JkSearch {
        top,
        hull_rows,
        hull_cols,
        k,
        budget: JK_STEP_BUDGET,
    };
    let mut paths_checked = 0u64;
    let mut worst_level = 0usize;
    let deepest = max_level - 1;

    // enumerate simple paths starting at a column (odd length ⇒ the
    // reverse orientation starts at a row, so each path appears once)
    let n_cols = search.top.n_cols();
    for start in 0..n_cols {
        let mut vertices = vec![Vertex::Col(start)];
        let mut on_path_rows = vec![false; search.top.n_rows()];
        let mut on_path_cols = vec![false; search.top.n_cols()];
        on_path_cols[start] = true;
        if let Some(counter) = extend_path(
            &mut search,
            &mut vertices,
            &mut on_path_rows,
            &mut on_path_cols,
            deepest,
            &mut paths_checked,
            &mut worst_level,
        )? {
            return Ok(JkReport {
                k,
                max_level,
                top_level_edges: search.top.n_edges(),
                paths_checked,
                holds_up_to_level: None,
                counterexample: Some(counter),
            });
        }
    }
    Ok(JkReport {
        k,
        max_level,
        top_level_edges: search.top.n_edges(),
        paths_checked,
        holds_up_to_level: Some(worst_level),
        counterexample: None,
    })
}

/// Depth-first extension of the current path; odd-length prefixes are
/// tested as they appear.
fn extend_path(
    search: &mut JkSearch,
    vertices: &mut Vec<Vertex>,
    on_path_rows: &mut Vec<bool>,
    on_path_cols: &mut Vec<bool>,
    deepest: usize,
    paths_checked: &mut u64,
    worst_level: &mut usize,
) -> Result<Option<JkCounterexample>> {
    let len = vertices.len() - 1;
    if len % 2 == 1 {
        *paths_checked += 1;
        // a completion past the deepest hull is a counterexample; otherwise
        // completions are anti-monotone in the level, so binary-search the
        // smallest level whose hull kills them all
        if let Some(cycle) = find_completion(search, vertices, deepest)? {
            let path = Path::new(vertices.clone());
            return Ok(Some(JkCounterexample { path, cycle }));
        }
        // level 0 kills most paths outright; only otherwise is the
        // monotone threshold worth bisecting
        if deepest > 0 && find_completion(search, vertices, 0)?.is_some() {
            let (mut lo, mut hi) = (1usize, deepest);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if find_completion(search, vertices, mid)?.is_none() {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            *worst_level = (*worst_level).max(lo);
        }
    }
    if len == search.k {
        return Ok(None);
    }
    let current = *vertices.last().unwrap();
    let neighbors: Vec<Vertex> = search.top.neighbors(current).collect();
    for next in neighbors {
        search.budget = search
            .budget
            .checked_sub(1)
            .ok_or(Error::BudgetExceeded {
                budget: JK_STEP_BUDGET,
            })?;
        let seen = match next {
            Vertex::Row(r) => &mut on_path_rows[r],
            Vertex::Col(c) => &mut on_path_cols[c],
        };
        if *seen {
            continue;
        }
        *seen = true;
        vertices.push(next);
        let hit = extend_path(
            search,
            vertices,
            on_path_rows,
            on_path_cols,
            deepest,
            paths_checked,
            worst_level,
        )?;
        vertices.pop();
        match next {
            Vertex::Row(r) => on_path_rows[r] = false,
            Vertex::Col(c) => on_path_cols[c] = false,
        }
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Search for a simple cycle of admissible length containing the path,
/// whose non-path edges avoid the hull rectangle of `level`. Returns the
/// first cycle found in lexicographic DFS order.
fn find_completion(
    search: &mut JkSearch,
    path_vertices: &[Vertex],
    level: usize,
) -> Result<Option<Cycle>> {
    let path_len = path_vertices.len() - 1;
    let j = (path_len - 1) / 2;
    // cycle lengths {4j+2, …, 2k}, and at least 4 (no 2-cycles)
    let min_cycle = (4 * j + 2).max(4);
    if min_cycle > 2 * search.k {
        return Ok(None);
    }
    let (min_len, max_len) = (min_cycle - path_len, 2 * search.k - path_len);
    let target = match path_vertices[0] {
        Vertex::Col(c) => c,
        Vertex::Row(_) => unreachable!("paths start at a column"),
    };
    let mut blocked_rows = vec![false; search.top.n_rows()];
    let mut blocked_cols = vec![false; search.top.n_cols()];
    for v in path_vertices {
        match v {
            Vertex::Row(r) => blocked_rows[*r] = true,
            Vertex::Col(c) => blocked_cols[*c] = true,
        }
    }
    let start = *path_vertices.last().unwrap();
    let mut completion = vec![start];
    let found = complete_dfs(
        search,
        level,
        target,
        min_len,
        max_len,
        &mut completion,
        &mut blocked_rows,
        &mut blocked_cols,
    )?;
    Ok(found.then(|| {
        // cycle vertex sequence: the path, then the completion's interior
        let mut cycle_vertices = path_vertices.to_vec();
        cycle_vertices.extend_from_slice(&completion[1..completion.len() - 1]);
        Cycle::from_vertex_path(&cycle_vertices)
    }))
}

/// Extends `completion` (which starts at the path's terminal row) towards
/// `target`, using only edges outside the hull of `level`; on success the
/// full completion path (terminal row … target column) is left in place.
#[allow(clippy::too_many_arguments)]
fn complete_dfs(
    search: &mut JkSearch,
    level: usize,
    target: usize,
    min_len: usize,
    max_len: usize,
    completion: &mut Vec<Vertex>,
    blocked_rows: &mut Vec<bool>,
    blocked_cols: &mut Vec<bool>,
) -> Result<bool> {
    let depth = completion.len() - 1;
    if depth == max_len {
        return Ok(false);
    }
    let current = *completion.last().unwrap();
    let neighbors: Vec<Vertex> = search.top.neighbors(current).collect();
    for next in neighbors {
        search.budget = search
            .budget
            .checked_sub(1)
            .ok_or(Error::BudgetExceeded {
                budget: JK_STEP_BUDGET,
            })?;
        // the traversed edge must avoid the deleted rectangle
        let (er, ec) = match (current, next) {
            (Vertex::Row(r), Vertex::Col(c)) | (Vertex::Col(c), Vertex::Row(r)) => (r, c),
            _ => unreachable!("bipartite adjacency"),
        };
        if search.hull_rows[level][er] && search.hull_cols[level][ec] {
            continue;
        }
        if next == Vertex::Col(target) {
            if depth + 1 >= min_len {
                completion.push(next);
                return Ok(true);
            }
            continue;
        }
        let seen = match next {
            Vertex::Row(r) => &mut blocked_rows[r],
            Vertex::Col(c) => &mut blocked_cols[c],
        };
        if *seen {
            continue;
        }
        *seen = true;
        completion.push(next);
        let hit = complete_dfs(
            search,
            level,
            target,
            min_len,
            max_len,
            completion,
            blocked_rows,
            blocked_cols,
        )?;
        if hit {
            return Ok(true);
        }
        completion.pop();
        match next {
            Vertex::Row(r) => blocked_rows[r] = false,
            Vertex::Col(c) => blocked_cols[c] = false,
        }
    }
    Ok(false)
}

// ── asymptotic odd distance ──────────────────────────────────────────────

/// Lower-bound evidence for the asymptotic distance between a row and a
/// column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DistanceBound {
    /// Largest distance observed over the tested deletions (an odd
    /// integer).
    Finite { distance: usize },
    /// Some tested deletion disconnects the pair entirely.
    Infinite,
}

/// Max over deletion levels ℓ ∈ {0, …, max_level − 1} of the distance from
/// row `r` to column `c` in the top level with the rectangle hull of level
/// ℓ removed. Any disconnection yields the infinite marker (this includes
/// constant families, where deleting level 0 removes everything).
pub fn asymptotic_distance_lower_bound(
    family: &SupportFamily,
    r: usize,
    c: usize,
    max_level: usize,
) -> Result<DistanceBound> {
    if max_level == 0 {
        return Err(Error::InvalidParameter(
            "need max_level ≥ 1 so that at least level 0 can be deleted".into(),
        ));
    }
    let base = family.level(0)?;
    if r >= base.n_rows() || c >= base.n_cols() {
        return Err(Error::InvalidParameter(format!(
            "vertex pair (row {r}, col {c}) does not exist at the base level ({}×{})",
            base.n_rows(),
            base.n_cols()
        )));
    }
    let top = family.level(max_level)?;
    let mut best = 0usize;
    for l in 0..max_level {
        let level = family.level(l)?;
        let (rows, cols) = level.touched();
        let remaining = top.minus_rectangle(&rows, &cols);
        match remaining.distance(Vertex::Row(r), Vertex::Col(c)) {
            None => return Ok(DistanceBound::Infinite),
            Some(d) => best = best.max(d),
        }
    }
    Ok(DistanceBound::Finite { distance: best })
}

// ── umap verdict for even p ──────────────────────────────────────────────

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UmapReport {
    /// The even Schatten exponent under consideration.
    pub p: usize,
    /// The delegated completion-property evidence at k = p/2.
    pub jk: JkReport,
}

impl UmapReport {
    /// Evidence verdict: the metric unconditional approximation property
    /// for S^p at this evidence depth.
    pub fn holds(&self) -> bool {
        self.jk.holds()
    }
}

/// The S^p verdict for even p reduces to the completion property at
/// k = p/2.
pub fn umap_verdict_even_p(
    family: &SupportFamily,
    p: usize,
    max_level: usize,
) -> Result<UmapReport> {
    if p < 2 || p % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "exponent must be an even integer ≥ 2, got {p}"
        )));
    }
    let jk = check_jk(family, p / 2, max_level)?;
    Ok(UmapReport { p, jk })
}

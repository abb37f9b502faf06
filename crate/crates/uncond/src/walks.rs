//! Closed walks on a support and their combinatorial relations.
//!
//! A closed walk of length `2k` is a sequence `(c_1, r_1, c_2, r_2, …, c_k,
//! r_k)` with `(r_i, c_i)` and `(r_i, c_{i+1})` support edges, indices mod
//! `k`. Its relation is the pair of edge multisets `α_q = #{i : (r_i,c_i) =
//! q}` and `β_q = #{i : (r_i,c_{i+1}) = q}`. Grouping walks by relation turns
//! the `2k`-th power of the Schatten `2k`-norm into an exact finite sum — the
//! symbolic route that the singular-value route must reproduce.

use crate::support::BipartiteSupport;
use crate::{Error, Result};
use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::Serialize;
use std::collections::BTreeMap;

/// A closed walk `(c_1, r_1, …, c_k, r_k)`. Unlike [`crate::support::Cycle`],
/// walks are *not* canonicalized: rotations and reflections are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ClosedWalk {
    cols: Vec<usize>,
    rows: Vec<usize>,
}

impl PartialOrd for ClosedWalk {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ClosedWalk {
    /// Lexicographic on the interleaved vertex sequence.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = self.cols.iter().zip(&self.rows).flat_map(|(&c, &r)| [c, r]);
        let b = other.cols.iter().zip(&other.rows).flat_map(|(&c, &r)| [c, r]);
        a.cmp(b)
    }
}

impl ClosedWalk {
    pub fn new(cols: Vec<usize>, rows: Vec<usize>) -> Self {
        assert_eq!(cols.len(), rows.len());
        assert!(!cols.is_empty());
        ClosedWalk { cols, rows }
    }

    pub fn k(&self) -> usize {
        self.cols.len()
    }

    /// Number of edges traversed, `2k`.
    pub fn len(&self) -> usize {
        2 * self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// True when all `2k` incidences are support edges.
    pub fn is_valid_on(&self, s: &BipartiteSupport) -> bool {
        let k = self.k();
        (0..k).all(|i| {
            s.has_edge(self.rows[i], self.cols[i]) && s.has_edge(self.rows[i], self.cols[(i + 1) % k])
        })
    }

    /// Pairwise distinct rows and pairwise distinct columns (for `k ≥ 2` this
    /// makes the walk a cycle).
    pub fn is_cycle(&self) -> bool {
        let mut rows = self.rows.clone();
        rows.sort_unstable();
        rows.dedup();
        let mut cols = self.cols.clone();
        cols.sort_unstable();
        cols.dedup();
        self.k() >= 2 && rows.len() == self.k() && cols.len() == self.k()
    }
}

impl std::fmt::Display for ClosedWalk {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .cols
            .iter()
            .zip(&self.rows)
            .map(|(c, r)| format!("c{c}, r{r}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A multiset of support edges with positive multiplicities, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EdgeMultiset {
    entries: Vec<((usize, usize), u32)>,
}

impl EdgeMultiset {
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut map: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for q in iter {
            *map.entry(q).or_insert(0) += 1;
        }
        EdgeMultiset {
            entries: map.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[((usize, usize), u32)] {
        &self.entries
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity(&self, q: (usize, usize)) -> u32 {
        self.entries
            .binary_search_by_key(&q, |&(e, _)| e)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn add(&mut self, q: (usize, usize), m: u32) {
        match self.entries.binary_search_by_key(&q, |&(e, _)| e) {
            Ok(i) => self.entries[i].1 += m,
            Err(i) => self.entries.insert(i, (q, m)),
        }
    }

    pub fn merge(&mut self, other: &EdgeMultiset) {
        for &(q, m) in &other.entries {
            self.add(q, m);
        }
    }

    /// Row index → total multiplicity.
    pub fn row_sums(&self) -> BTreeMap<usize, u32> {
        let mut out = BTreeMap::new();
        for &((r, _), m) in &self.entries {
            *out.entry(r).or_insert(0) += m;
        }
        out
    }

    pub fn col_sums(&self) -> BTreeMap<usize, u32> {
        let mut out = BTreeMap::new();
        for &((_, c), m) in &self.entries {
            *out.entry(c).or_insert(0) += m;
        }
        out
    }
}

impl Serialize for EdgeMultiset {
    /// `[[r, c, m], …]`
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.entries.len()))?;
        for &((r, c), m) in &self.entries {
            seq.serialize_element(&[r as u64, c as u64, m as u64])?;
        }
        seq.end()
    }
}

/// The `(α, β)` pair attached to a closed walk, or more generally any couple
/// of edge multisets with equal row and column marginals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Relation {
    pub alpha: EdgeMultiset,
    pub beta: EdgeMultiset,
}

impl Relation {
    pub fn k(&self) -> u32 {
        self.alpha.total()
    }

    pub fn is_diagonal(&self) -> bool {
        self.alpha == self.beta
    }

    /// Equal row and column marginals of `α` and `β` (membership in the class
    /// every walk relation belongs to).
    pub fn is_balanced(&self) -> bool {
        self.alpha.total() == self.beta.total()
            && self.alpha.row_sums() == self.beta.row_sums()
            && self.alpha.col_sums() == self.beta.col_sums()
    }

    /// True when the relation splits into two row- and column-disjoint
    /// balanced parts; walk relations never do.
    ///
    /// Criterion: the graph whose nodes are the edges of `supp α ∪ supp β`,
    /// adjacent when sharing a row or a column, is disconnected.
    pub fn is_decomposable(&self) -> bool {
        let mut edges: Vec<(usize, usize)> = self
            .alpha
            .entries()
            .iter()
            .chain(self.beta.entries())
            .map(|&(q, _)| q)
            .collect();
        edges.sort_unstable();
        edges.dedup();
        if edges.len() <= 1 {
            return false;
        }
        let n = edges.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (edges[i].0 == edges[j].0 || edges[i].1 == edges[j].1) {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count < n
    }
}

/// Whether two relations touch disjoint row sets and disjoint column sets
/// (the disjointness is tested on the `α`-supports).
pub fn is_row_column_disjoint(a: &Relation, b: &Relation) -> bool {
    let ar = a.alpha.row_sums();
    let br = b.alpha.row_sums();
    let ac = a.alpha.col_sums();
    let bc = b.alpha.col_sums();
    ar.keys().all(|r| !br.contains_key(r)) && ac.keys().all(|c| !bc.contains_key(c))
}

pub fn relation_of_walk(w: &ClosedWalk) -> Relation {
    let k = w.k();
    let alpha = EdgeMultiset::from_edges((0..k).map(|i| (w.rows()[i], w.cols()[i])));
    let beta = EdgeMultiset::from_edges((0..k).map(|i| (w.rows()[i], w.cols()[(i + 1) % k])));
    Relation { alpha, beta }
}

/// Streams every closed walk of length `2k` in lexicographic order of the
/// vertex sequence `(c_1, r_1, …, c_k, r_k)`. Rotations of a walk are
/// distinct walks. Aborts with [`Error::BudgetExceeded`] as soon as more than
/// `budget` walks have been produced — never truncates silently.
fn for_each_walk<F: FnMut(&ClosedWalk)>(
    s: &BipartiteSupport,
    k: usize,
    budget: u64,
    mut f: F,
) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "walk length must be a positive even integer".into(),
        ));
    }
    let mut cols = Vec::with_capacity(k);
    let mut rows = Vec::with_capacity(k);
    let mut count: u64 = 0;
    // depth-first product of adjacency choices; ascending neighbor lists give
    // lexicographic emission order for free
    fn extend<F: FnMut(&ClosedWalk)>(
        s: &BipartiteSupport,
        k: usize,
        cols: &mut Vec<usize>,
        rows: &mut Vec<usize>,
        count: &mut u64,
        budget: u64,
        f: &mut F,
    ) -> Result<()> {
        if rows.len() == k {
            // closing edge (r_k, c_1)
            if s.has_edge(rows[k - 1], cols[0]) {
                *count += 1;
                if *count > budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                f(&ClosedWalk {
                    cols: cols.clone(),
                    rows: rows.clone(),
                });
            }
            return Ok(());
        }
        if cols.len() == rows.len() {
            // choose next column c_{i+1} adjacent to r_i
            for &c in s.row_adj(rows[rows.len() - 1]) {
                cols.push(c);
                extend(s, k, cols, rows, count, budget, f)?;
                cols.pop();
            }
        } else {
            // choose r_i adjacent to c_i
            for &r in s.col_adj(cols[cols.len() - 1]) {
                rows.push(r);
                extend(s, k, cols, rows, count, budget, f)?;
                rows.pop();
            }
        }
        Ok(())
    }
    for c1 in 0..s.n_cols() {
        cols.push(c1);
        extend(s, k, &mut cols, &mut rows, &mut count, budget, &mut f)?;
        cols.pop();
    }
    Ok(count)
}

/// All closed walks of length `p = 2k`, lexicographic order.
pub fn enumerate_closed_walks(
    s: &BipartiteSupport,
    p: usize,
    budget: u64,
) -> Result<Vec<ClosedWalk>> {
    if p == 0 || p % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "walk enumeration needs a positive even length, got {p}"
        )));
    }
    let mut out = Vec::new();
    for_each_walk(s, p / 2, budget, |w| out.push(w.clone()))?;
    Ok(out)
}

/// Multiplicity table: each relation arising from a length-`2k` closed walk,
/// with the number of walks producing it. The keys are exactly the
/// indecomposable balanced relations of the support.
pub fn relation_table(
    s: &BipartiteSupport,
    k: usize,
    budget: u64,
) -> Result<BTreeMap<Relation, u64>> {
    let mut table = BTreeMap::new();
    for_each_walk(s, k, budget, |w| {
        *table.entry(relation_of_walk(w)).or_insert(0) += 1;
    })?;
    Ok(table)
}

/// True when every length-`2k` walk relation is diagonal (`α = β`).
pub fn all_relations_diagonal(s: &BipartiteSupport, k: usize, budget: u64) -> Result<bool> {
    let mut all = true;
    for_each_walk(s, k, budget, |w| {
        if all {
            all = relation_of_walk(w).is_diagonal();
        }
    })?;
    Ok(all)
}

/// A walk split into a diagonal edge multiset `γ` and cycle pieces:
/// `α = γ + Σ_j α^j`, `β = γ + Σ_j β^j` with `(α^j, β^j)` the relations of
/// the cycle walks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkDecomposition {
    pub diagonal: EdgeMultiset,
    pub cycles: Vec<ClosedWalk>,
}

/// Splits a closed walk at repeated vertices until only single edges (which
/// feed `γ`) and cycles remain. The cut happens at the first repeated vertex
/// in scan order of the sequence `(c_1, r_1, c_2, r_2, …)`; the piece between
/// the two occurrences is processed before the rest.
pub fn decompose_into_cycles(w: &ClosedWalk) -> WalkDecomposition {
    let mut diagonal = EdgeMultiset::default();
    let mut cycles = Vec::new();
    split(w.cols(), w.rows(), &mut diagonal, &mut cycles);
    WalkDecomposition { diagonal, cycles }
}

fn split(cols: &[usize], rows: &[usize], diagonal: &mut EdgeMultiset, cycles: &mut Vec<ClosedWalk>) {
    let k = cols.len();
    if k == 1 {
        diagonal.add((rows[0], cols[0]), 1);
        return;
    }
    // first repeated vertex in scan order c_1, r_1, c_2, r_2, …
    let mut col_seen: BTreeMap<usize, usize> = BTreeMap::new();
    let mut row_seen: BTreeMap<usize, usize> = BTreeMap::new();
    let mut repeat: Option<(bool, usize, usize)> = None; // (is_row, a, b)
    'scan: for t in 0..2 * k {
        if t % 2 == 0 {
            let c = cols[t / 2];
            if let Some(&a) = col_seen.get(&c) {
                repeat = Some((false, a, t / 2));
                break 'scan;
            }
            col_seen.insert(c, t / 2);
        } else {
            let r = rows[t / 2];
            if let Some(&a) = row_seen.get(&r) {
                repeat = Some((true, a, t / 2));
                break 'scan;
            }
            row_seen.insert(r, t / 2);
        }
    }
    match repeat {
        None => {
            // pairwise distinct rows and columns: a genuine cycle
            cycles.push(ClosedWalk {
                cols: cols.to_vec(),
                rows: rows.to_vec(),
            });
        }
        Some((is_row, a, b)) => {
            // inner piece is a closed walk because the repeated vertex makes
            // its closing incidence an original edge; same for the bypass in
            // the outer piece
            let inner: std::ops::Range<usize> = if is_row { a + 1..b + 1 } else { a..b };
            let inner_cols: Vec<usize> = cols[inner.clone()].to_vec();
            let inner_rows: Vec<usize> = rows[inner.clone()].to_vec();
            let outer_cols: Vec<usize> = cols[..inner.start]
                .iter()
                .chain(&cols[inner.end..])
                .copied()
                .collect();
            let outer_rows: Vec<usize> = rows[..inner.start]
                .iter()
                .chain(&rows[inner.end..])
                .copied()
                .collect();
            split(&inner_cols, &inner_rows, diagonal, cycles);
            split(&outer_cols, &outer_rows, diagonal, cycles);
        }
    }
}

/// The symbolic value of `‖Σ_q ε_q a_q e_q‖_{2k}^{2k}`: the relation table
/// evaluated as `Σ n_{αβ} ε^{β−α} ā^α a^β`, summed with Neumaier
/// compensation. `eps` and `a` are aligned with `s.edges()`; `eps` entries
/// must be unimodular. Errors if the imaginary parts fail to cancel to one
/// part in 10⁹.
pub fn phi_expand(
    s: &BipartiteSupport,
    eps: &[Complex64],
    a: &[Complex64],
    k: usize,
    budget: u64,
) -> Result<f64> {
    if eps.len() != s.n_edges() || a.len() != s.n_edges() {
        return Err(Error::InvalidParameter(format!(
            "need one sign and one coefficient per edge: {} edges, {} signs, {} coefficients",
            s.n_edges(),
            eps.len(),
            a.len()
        )));
    }
    debug_assert!(eps.iter().all(|e| (e.norm() - 1.0).abs() < 1e-9));
    let table = relation_table(s, k, budget)?;
    let index: BTreeMap<(usize, usize), usize> = s
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &q)| (q, i))
        .collect();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for (rel, &n) in &table {
        let mut term = Complex64::new(n as f64, 0.0);
        for &(q, m) in rel.alpha.entries() {
            let z = eps[index[&q]] * a[index[&q]];
            term *= z.conj().powu(m);
        }
        for &(q, m) in rel.beta.entries() {
            let z = eps[index[&q]] * a[index[&q]];
            term *= z.powu(m);
        }
        // Neumaier compensated accumulation
        let t = sum + term;
        let delta = if sum.norm_sqr() >= term.norm_sqr() {
            (sum - t) + term
        } else {
            (term - t) + sum
        };
        comp += delta;
        sum = t;
    }
    let total = sum + comp;
    if !total.re.is_finite() {
        return Err(Error::NonFinite("closed-walk expansion".into()));
    }
    if total.im.abs() > 1e-9 * total.re.abs().max(1.0) {
        return Err(Error::NonFinite(format!(
            "imaginary residue {} did not cancel in the closed-walk expansion",
            total.im
        )));
    }
    Ok(total.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn k22() -> BipartiteSupport {
        BipartiteSupport::new(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap()
    }

    /// Independent quadruple-loop oracle for `k = 2` walk counts.
    fn count_length4_walks_oracle(s: &BipartiteSupport) -> u64 {
        let mut n = 0;
        for c1 in 0..s.n_cols() {
            for r1 in 0..s.n_rows() {
                for c2 in 0..s.n_cols() {
                    for r2 in 0..s.n_rows() {
                        if s.has_edge(r1, c1)
                            && s.has_edge(r1, c2)
                            && s.has_edge(r2, c2)
                            && s.has_edge(r2, c1)
                        {
                            n += 1;
                        }
                    }
                }
            }
        }
        n
    }

    #[test]
    fn k22_sixteen_walks_of_length_four() {
        let walks = enumerate_closed_walks(&k22(), 4, 1 << 20).unwrap();
        assert_eq!(walks.len(), 16);
        assert_eq!(count_length4_walks_oracle(&k22()), 16);
        // lexicographic order and validity
        let mut sorted = walks.clone();
        sorted.sort();
        assert_eq!(walks, sorted);
        for w in &walks {
            assert!(w.is_valid_on(&k22()));
        }
        // exactly 4 walks are cycles (2 per orientation-relation)
        assert_eq!(walks.iter().filter(|w| w.is_cycle()).count(), 4);
    }

    #[test]
    fn walk_count_matches_oracle_on_random_supports() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n_rows = rng.random_range(1..=4usize);
            let n_cols = rng.random_range(1..=4usize);
            let mut edges = Vec::new();
            for r in 0..n_rows {
                for c in 0..n_cols {
                    if rng.random_bool(0.5) {
                        edges.push((r, c));
                    }
                }
            }
            let s = BipartiteSupport::new(n_rows, n_cols, &edges).unwrap();
            let walks = enumerate_closed_walks(&s, 4, 1 << 20).unwrap();
            assert_eq!(walks.len() as u64, count_length4_walks_oracle(&s));
        }
    }

    #[test]
    fn k22_relation_table_k2() {
        let table = relation_table(&k22(), 2, 1 << 20).unwrap();
        assert_eq!(table.len(), 10);
        assert_eq!(table.values().sum::<u64>(), 16);
        let cycle_rel = Relation {
            alpha: EdgeMultiset::from_edges([(0, 0), (1, 1)]),
            beta: EdgeMultiset::from_edges([(0, 1), (1, 0)]),
        };
        assert_eq!(table[&cycle_rel], 2);
        // its transpose also has 2 preimages
        let rev = Relation {
            alpha: cycle_rel.beta.clone(),
            beta: cycle_rel.alpha.clone(),
        };
        assert_eq!(table[&rev], 2);
        for rel in table.keys() {
            assert!(rel.is_balanced());
            assert!(!rel.is_decomposable());
            assert_eq!(rel.k(), 2);
        }
    }

    #[test]
    fn k22_relation_table_k4_degenerate_multiplicity() {
        let table = relation_table(&k22(), 4, 1 << 22).unwrap();
        // ‖all-ones 2×2‖_8^8 = 2^8
        assert_eq!(table.values().sum::<u64>(), 256);
        let rel = Relation {
            alpha: EdgeMultiset::from_edges([(0, 0), (0, 0), (0, 1), (0, 1)]),
            beta: EdgeMultiset::from_edges([(0, 0), (0, 0), (0, 1), (0, 1)]),
        };
        assert_eq!(table[&rel], 6);
    }

    #[test]
    fn budget_aborts_enumeration() {
        let s = BipartiteSupport::new(3, 3, &(0..3).flat_map(|r| (0..3).map(move |c| (r, c))).collect::<Vec<_>>()).unwrap();
        let err = enumerate_closed_walks(&s, 6, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 10 }));
    }

    #[test]
    fn odd_length_rejected() {
        assert!(enumerate_closed_walks(&k22(), 3, 100).is_err());
        assert!(enumerate_closed_walks(&k22(), 0, 100).is_err());
    }

    #[test]
    fn decompose_degenerate_walk_from_table_example() {
        // (c1, r0, c1, r0, c0, r0, c0, r0): α = β = 2e_00 + 2e_01
        let w = ClosedWalk::new(vec![1, 1, 0, 0], vec![0, 0, 0, 0]);
        let rel = relation_of_walk(&w);
        assert!(rel.is_diagonal());
        let d = decompose_into_cycles(&w);
        assert!(d.cycles.is_empty());
        assert_eq!(d.diagonal, EdgeMultiset::from_edges([(0, 0), (0, 0), (0, 1), (0, 1)]));
    }

    #[test]
    fn decompose_cycle_walk_is_identity() {
        let w = ClosedWalk::new(vec![0, 1], vec![0, 1]);
        let d = decompose_into_cycles(&w);
        assert_eq!(d.diagonal, EdgeMultiset::default());
        assert_eq!(d.cycles, vec![w]);
    }

    #[test]
    fn decomposition_recombines_on_random_supports() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n_rows = rng.random_range(1..=4usize);
            let n_cols = rng.random_range(1..=4usize);
            let mut edges = Vec::new();
            for r in 0..n_rows {
                for c in 0..n_cols {
                    if rng.random_bool(0.5) {
                        edges.push((r, c));
                    }
                }
            }
            let s = BipartiteSupport::new(n_rows, n_cols, &edges).unwrap();
            for k in 1..=3 {
                for w in enumerate_closed_walks(&s, 2 * k, 1 << 20).unwrap() {
                    let rel = relation_of_walk(&w);
                    let d = decompose_into_cycles(&w);
                    let mut alpha = d.diagonal.clone();
                    let mut beta = d.diagonal.clone();
                    for cyc in &d.cycles {
                        assert!(cyc.is_cycle());
                        assert!(cyc.is_valid_on(&s), "cycle piece uses support edges");
                        let crel = relation_of_walk(cyc);
                        alpha.merge(&crel.alpha);
                        beta.merge(&crel.beta);
                    }
                    assert_eq!(alpha, rel.alpha, "α recombines for {w}");
                    assert_eq!(beta, rel.beta, "β recombines for {w}");
                }
            }
        }
    }

    #[test]
    fn diagonal_relations_iff_girth_exceeds_2k() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..60 {
            let n_rows = rng.random_range(1..=4usize);
            let n_cols = rng.random_range(1..=4usize);
            let mut edges = Vec::new();
            for r in 0..n_rows {
                for c in 0..n_cols {
                    if rng.random_bool(0.4) {
                        edges.push((r, c));
                    }
                }
            }
            let s = BipartiteSupport::new(n_rows, n_cols, &edges).unwrap();
            let girth = s.even_girth().map(|g| g.length);
            for k in 1..=3 {
                let diag = all_relations_diagonal(&s, k, 1 << 20).unwrap();
                let expected = girth.map_or(true, |g| g > 2 * k);
                assert_eq!(diag, expected, "k={k} girth={girth:?} edges={:?}", s.edges());
            }
        }
    }

    #[test]
    fn row_column_disjointness() {
        let r1 = Relation {
            alpha: EdgeMultiset::from_edges([(0, 0)]),
            beta: EdgeMultiset::from_edges([(0, 0)]),
        };
        let r2 = Relation {
            alpha: EdgeMultiset::from_edges([(1, 1)]),
            beta: EdgeMultiset::from_edges([(1, 1)]),
        };
        let r3 = Relation {
            alpha: EdgeMultiset::from_edges([(0, 1)]),
            beta: EdgeMultiset::from_edges([(0, 1)]),
        };
        assert!(is_row_column_disjoint(&r1, &r2));
        assert!(!is_row_column_disjoint(&r1, &r3));
    }

    #[test]
    fn phi_expand_all_ones_counts_walks() {
        let s = k22();
        let ones = vec![Complex64::new(1.0, 0.0); 4];
        let v = phi_expand(&s, &ones, &ones, 2, 1 << 20).unwrap();
        assert!((v - 16.0).abs() < 1e-12);
    }

    #[test]
    fn phi_expand_with_one_sign_flip() {
        let s = k22();
        let mut eps = vec![Complex64::new(1.0, 0.0); 4];
        // edge order is lexicographic: (0,0) first
        eps[0] = Complex64::new(-1.0, 0.0);
        let ones = vec![Complex64::new(1.0, 0.0); 4];
        let v = phi_expand(&s, &eps, &ones, 2, 1 << 20).unwrap();
        // [[−1,1],[1,1]] has singular values (√2, √2): ‖·‖_4^4 = 8
        assert!((v - 8.0).abs() < 1e-12);
    }
}

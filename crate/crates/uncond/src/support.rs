//! Bipartite supports `I ⊆ R×C` and their purely combinatorial invariants:
//! forests, shortest even cycles, rectangle/star unions, density certificates,
//! bisections into a row section and a column section, path uniqueness, and
//! graph distance.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// A vertex of the bipartite graph attached to a support: either a row index
/// or a column index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Vertex {
    Row(usize),
    Col(usize),
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Vertex::Row(r) => write!(f, "r{r}"),
            Vertex::Col(c) => write!(f, "c{c}"),
        }
    }
}

/// A support set on dense index ranges `0..n_rows` × `0..n_cols`.
///
/// Edges are kept sorted lexicographically; an incidence bitmap gives O(1)
/// membership tests and the per-vertex adjacency lists are sorted ascending,
/// which makes every traversal in this crate deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteSupport {
    n_rows: usize,
    n_cols: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<bool>,
    row_adj: Vec<Vec<usize>>,
    col_adj: Vec<Vec<usize>>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

/// Serialized form of a support: `{"rows": R, "cols": C, "edges": [[r,c],…]}`
/// plus optional label vectors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportDoc {
    pub rows: usize,
    pub cols: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row_labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub col_labels: Option<Vec<String>>,
}

/// Parses and validates the edge-list JSON document format.
pub fn parse_support(doc: &str) -> Result<BipartiteSupport> {
    let doc: SupportDoc = serde_json::from_str(doc)?;
    BipartiteSupport::from_doc(doc)
}

impl BipartiteSupport {
    pub fn new(n_rows: usize, n_cols: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_doc(SupportDoc {
            rows: n_rows,
            cols: n_cols,
            edges: edges.to_vec(),
            row_labels: None,
            col_labels: None,
        })
    }

    pub fn from_doc(doc: SupportDoc) -> Result<Self> {
        let (n_rows, n_cols) = (doc.rows, doc.cols);
        let mut incidence = vec![false; n_rows * n_cols];
        for (index, &(row, col)) in doc.edges.iter().enumerate() {
            if row >= n_rows || col >= n_cols {
                return Err(Error::EdgeOutOfRange {
                    index,
                    row,
                    col,
                    n_rows,
                    n_cols,
                });
            }
            if incidence[row * n_cols + col] {
                return Err(Error::DuplicateEdge { index, row, col });
            }
            incidence[row * n_cols + col] = true;
        }
        if let Some(labels) = &doc.row_labels {
            if labels.len() != n_rows {
                return Err(Error::LabelCardinality {
                    which: "row_labels".into(),
                    expected: n_rows,
                    got: labels.len(),
                });
            }
        }
        if let Some(labels) = &doc.col_labels {
            if labels.len() != n_cols {
                return Err(Error::LabelCardinality {
                    which: "col_labels".into(),
                    expected: n_cols,
                    got: labels.len(),
                });
            }
        }
        let mut edges = doc.edges;
        edges.sort_unstable();
        let mut row_adj = vec![Vec::new(); n_rows];
        let mut col_adj = vec![Vec::new(); n_cols];
        for &(r, c) in &edges {
            row_adj[r].push(c);
            col_adj[c].push(r);
        }
        // sorted edge order already yields sorted row_adj; col_adj needs it
        for adj in &mut col_adj {
            adj.sort_unstable();
        }
        Ok(Self {
            n_rows,
            n_cols,
            edges,
            incidence,
            row_adj,
            col_adj,
            row_labels: doc.row_labels,
            col_labels: doc.col_labels,
        })
    }

    pub fn to_doc(&self) -> SupportDoc {
        SupportDoc {
            rows: self.n_rows,
            cols: self.n_cols,
            edges: self.edges.clone(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Edges in lexicographic `(row, col)` order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, row: usize, col: usize) -> bool {
        row < self.n_rows && col < self.n_cols && self.incidence[row * self.n_cols + col]
    }

    /// Columns adjacent to `row`, ascending.
    pub fn row_adj(&self, row: usize) -> &[usize] {
        &self.row_adj[row]
    }

    /// Rows adjacent to `col`, ascending.
    pub fn col_adj(&self, col: usize) -> &[usize] {
        &self.col_adj[col]
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub(crate) fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        const EMPTY: &[usize] = &[];
        let (cols_of_row, rows_of_col): (&[usize], &[usize]) = match v {
            Vertex::Row(r) => (&self.row_adj[r], EMPTY),
            Vertex::Col(c) => (EMPTY, &self.col_adj[c]),
        };
        cols_of_row
            .iter()
            .map(|&c| Vertex::Col(c))
            .chain(rows_of_col.iter().map(|&r| Vertex::Row(r)))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        match v {
            Vertex::Row(r) => r < self.n_rows,
            Vertex::Col(c) => c < self.n_cols,
        }
    }

    /// True when the support has no cycle.
    pub fn is_forest(&self) -> bool {
        self.even_girth().is_none()
    }

    /// Shortest cycle witnessing non-forestness, if any.
    pub fn forest_witness(&self) -> Option<Cycle> {
        self.even_girth().map(|g| g.witness)
    }

    /// Length of a shortest cycle together with a deterministic witness.
    /// `None` means the support is a forest. All cycle lengths are even.
    ///
    /// Search rule: for each edge `(r,c)` in lexicographic order, delete the
    /// edge and run a breadth-first search (ascending neighbor order) from
    /// `c` to `r`; the resulting cycle candidates are canonicalized and the
    /// `(length, vertex sequence)`-least one is kept.
    pub fn even_girth(&self) -> Option<EvenGirth> {
        let mut best: Option<(usize, Cycle)> = None;
        for &(r, c) in &self.edges {
            let cap = match &best {
                // only cycles of length ≤ current best can still win a tie
                Some((len, _)) => len - 1,
                None => usize::MAX,
            };
            if let Some(path) = self.shortest_path_avoiding(Vertex::Col(c), Vertex::Row(r), (r, c), cap)
            {
                // path c → … → r of odd length d gives a cycle of length d+1
                let cycle = Cycle::from_vertex_path(&path);
                let len = cycle.len();
                match &best {
                    Some((best_len, best_cycle))
                        if (*best_len, best_cycle) <= (len, &cycle) => {}
                    _ => best = Some((len, cycle)),
                }
            }
        }
        best.map(|(length, witness)| EvenGirth { length, witness })
    }

    /// BFS shortest path from `from` to `to` not using edge `skip`, with
    /// distance capped at `cap`. Returns the vertex sequence, `from` first.
    fn shortest_path_avoiding(
        &self,
        from: Vertex,
        to: Vertex,
        skip: (usize, usize),
        cap: usize,
    ) -> Option<Vec<Vertex>> {
        let id = |v: Vertex| match v {
            Vertex::Col(c) => c,
            Vertex::Row(r) => self.n_cols + r,
        };
        let mut parent: Vec<Option<Vertex>> = vec![None; self.n_cols + self.n_rows];
        let mut dist: Vec<usize> = vec![usize::MAX; self.n_cols + self.n_rows];
        let mut queue = VecDeque::new();
        dist[id(from)] = 0;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            let d = dist[id(v)];
            if d >= cap {
                return None;
            }
            for w in self.neighbors(v) {
                let is_skip = match (v, w) {
                    (Vertex::Row(r), Vertex::Col(c)) | (Vertex::Col(c), Vertex::Row(r)) => {
                        (r, c) == skip
                    }
                    _ => false,
                };
                if is_skip || dist[id(w)] != usize::MAX {
                    continue;
                }
                dist[id(w)] = d + 1;
                parent[id(w)] = Some(v);
                if w == to {
                    let mut path = vec![w];
                    let mut cur = w;
                    while let Some(p) = parent[id(cur)] {
                        path.push(p);
                        cur = p;
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// True when every connected component is a complete bipartite block,
    /// i.e. the support is a union of pairwise row- and column-disjoint
    /// rectangles. The failure witness is the lexicographically first
    /// configuration `(r0,c0),(r0,c1),(r1,c0) ∈ I` with `(r1,c1) ∉ I`.
    pub fn rectangle_union(&self) -> RectangleCheck {
        for &(r0, c0) in &self.edges {
            for &c1 in self.row_adj(r0) {
                if c1 == c0 {
                    continue;
                }
                for &r1 in self.col_adj(c0) {
                    if r1 != r0 && !self.has_edge(r1, c1) {
                        return RectangleCheck::Witness {
                            present: [(r0, c0), (r0, c1), (r1, c0)],
                            absent: (r1, c1),
                        };
                    }
                }
            }
        }
        RectangleCheck::Union
    }

    pub fn is_rectangle_union(&self) -> bool {
        matches!(self.rectangle_union(), RectangleCheck::Union)
    }

    /// True when the support contains no path of length 3, i.e. it is a union
    /// of stars (every edge has an endpoint of degree 1... precisely: no edge
    /// joins a row of degree ≥ 2 to a column of degree ≥ 2).
    pub fn is_star_union(&self) -> bool {
        self.star_union_witness().is_none()
    }

    /// A length-3 path witnessing failure of the star-union property.
    pub fn star_union_witness(&self) -> Option<Path> {
        for &(r0, c1) in &self.edges {
            if self.row_adj(r0).len() < 2 || self.col_adj(c1).len() < 2 {
                continue;
            }
            let c0 = *self.row_adj(r0).iter().find(|&&c| c != c1).unwrap();
            let r1 = *self.col_adj(c1).iter().find(|&&r| r != r0).unwrap();
            return Some(Path::new(vec![
                Vertex::Col(c0),
                Vertex::Row(r0),
                Vertex::Col(c1),
                Vertex::Row(r1),
            ]));
        }
        None
    }

    /// For a non-forest, a rectangle `R′×C′` holding more than `#R′+#C′−1`
    /// support edges (forests can never exceed that count). Derived from the
    /// shortest-cycle witness. `None` for forests.
    pub fn density_certificate(&self) -> Option<DensityCertificate> {
        let girth = self.even_girth()?;
        let mut rows = girth.witness.rows().to_vec();
        let mut cols = girth.witness.cols().to_vec();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        let edge_count = self
            .edges
            .iter()
            .filter(|&&(r, c)| rows.binary_search(&r).is_ok() && cols.binary_search(&c).is_ok())
            .count();
        Some(DensityCertificate {
            forest_max: rows.len() + cols.len() - 1,
            rows,
            cols,
            edge_count,
        })
    }

    /// Splits a forest into a row section and a column section.
    ///
    /// Every component is rooted at its least column vertex and traversed
    /// breadth-first; each non-root vertex's parent edge lands in the section
    /// named after that vertex's own class (the parent edge of a row vertex
    /// in the row section, of a column vertex in the column section). Within
    /// the row section no two edges share a row; within the column section no
    /// two edges share a column; the two sections partition the edges.
    pub fn bisection_decompose(&self) -> Result<Bisection> {
        if let Some(girth) = self.even_girth() {
            return Err(Error::NotAForest(girth.witness));
        }
        let mut row_section = Vec::new();
        let mut col_section = Vec::new();
        let mut seen_row = vec![false; self.n_rows];
        let mut seen_col = vec![false; self.n_cols];
        for root in 0..self.n_cols {
            if seen_col[root] {
                continue;
            }
            seen_col[root] = true;
            let mut queue = VecDeque::new();
            queue.push_back(Vertex::Col(root));
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    match w {
                        Vertex::Row(r) if !seen_row[r] => {
                            seen_row[r] = true;
                            let Vertex::Col(c) = v else { unreachable!() };
                            row_section.push((r, c));
                            queue.push_back(w);
                        }
                        Vertex::Col(c) if !seen_col[c] => {
                            seen_col[c] = true;
                            let Vertex::Row(r) = v else { unreachable!() };
                            col_section.push((r, c));
                            queue.push_back(w);
                        }
                        _ => {}
                    }
                }
            }
        }
        row_section.sort_unstable();
        col_section.sort_unstable();
        Ok(Bisection {
            row_section,
            col_section,
        })
    }

    /// Whether every pair of vertices is joined by at most one path of length
    /// ≤ `k`. Equivalent to the shortest cycle being longer than `2k`; the
    /// implementation searches paths directly so that a failure yields two
    /// explicit distinct paths with common endpoints.
    pub fn unique_paths_up_to(&self, k: usize) -> UniquePathsCheck {
        // For each start vertex (ascending id), enumerate simple paths by
        // depth-first search with ascending neighbors; record the first pair
        // of distinct paths meeting at an endpoint.
        let starts = (0..self.n_cols)
            .map(Vertex::Col)
            .chain((0..self.n_rows).map(Vertex::Row));
        for start in starts {
            let mut stack = vec![start];
            let mut reached = vec![Vec::new(); self.n_cols + self.n_rows];
            if let Some(w) = self.path_dfs(start, &mut stack, k, &mut reached) {
                return UniquePathsCheck::Witness(w);
            }
        }
        UniquePathsCheck::Unique
    }

    fn path_dfs(
        &self,
        start: Vertex,
        stack: &mut Vec<Vertex>,
        budget: usize,
        reached: &mut Vec<Vec<Vertex>>,
    ) -> Option<(Path, Path)> {
        let id = |v: Vertex| match v {
            Vertex::Col(c) => c,
            Vertex::Row(r) => self.n_cols + r,
        };
        let v = *stack.last().unwrap();
        if stack.len() > 1 {
            // paths are undirected; count each once by orienting start < end
            if start < v {
                let endpoint = id(v);
                if !reached[endpoint].is_empty() {
                    let first = reached[endpoint].clone();
                    return Some((Path::new(first), Path::new(stack.clone())));
                }
                reached[endpoint] = stack.clone();
            }
        }
        if stack.len() == budget + 1 {
            return None;
        }
        for w in self.neighbors(v) {
            if stack.contains(&w) {
                continue;
            }
            stack.push(w);
            if let Some(found) = self.path_dfs(start, stack, budget, reached) {
                return Some(found);
            }
            stack.pop();
        }
        None
    }

    /// Graph distance between two vertices; `None` when disconnected.
    pub fn distance(&self, from: Vertex, to: Vertex) -> Option<usize> {
        if !self.contains_vertex(from) || !self.contains_vertex(to) {
            return None;
        }
        if from == to {
            return Some(0);
        }
        let id = |v: Vertex| match v {
            Vertex::Col(c) => c,
            Vertex::Row(r) => self.n_cols + r,
        };
        let mut dist = vec![usize::MAX; self.n_cols + self.n_rows];
        let mut queue = VecDeque::new();
        dist[id(from)] = 0;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[id(w)] == usize::MAX {
                    dist[id(w)] = dist[id(v)] + 1;
                    if w == to {
                        return Some(dist[id(w)]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// The sub-support obtained by deleting every edge inside the rectangle
    /// `rows × cols` (vertex ranges are unchanged).
    pub fn minus_rectangle(&self, rows: &[usize], cols: &[usize]) -> BipartiteSupport {
        let in_rows: Vec<bool> = {
            let mut v = vec![false; self.n_rows];
            for &r in rows {
                if r < self.n_rows {
                    v[r] = true;
                }
            }
            v
        };
        let in_cols: Vec<bool> = {
            let mut v = vec![false; self.n_cols];
            for &c in cols {
                if c < self.n_cols {
                    v[c] = true;
                }
            }
            v
        };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(r, c)| !(in_rows[r] && in_cols[c]))
            .collect();
        BipartiteSupport::new(self.n_rows, self.n_cols, &edges).expect("filtered edges stay valid")
    }

    /// Rows and columns touched by at least one edge, ascending.
    pub fn touched(&self) -> (Vec<usize>, Vec<usize>) {
        let mut rows: Vec<usize> = (0..self.n_rows).filter(|&r| !self.row_adj[r].is_empty()).collect();
        let mut cols: Vec<usize> = (0..self.n_cols).filter(|&c| !self.col_adj[c].is_empty()).collect();
        rows.shrink_to_fit();
        cols.shrink_to_fit();
        (rows, cols)
    }
}

/// Result of the shortest-even-cycle search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenGirth {
    pub length: usize,
    pub witness: Cycle,
}

/// Outcome of the rectangle-union test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RectangleCheck {
    /// Every component is a full rectangle.
    Union,
    /// Three corners present, fourth absent: the support cannot be a union of
    /// disjoint rectangles.
    Witness {
        present: [(usize, usize); 3],
        absent: (usize, usize),
    },
}

/// A rectangle `rows × cols` carrying `edge_count` support edges; any forest
/// holds at most `forest_max = #rows + #cols − 1` of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityCertificate {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub edge_count: usize,
    pub forest_max: usize,
}

/// A forest split into a row section (no two edges share a row) and a column
/// section (no two edges share a column).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bisection {
    pub row_section: Vec<(usize, usize)>,
    pub col_section: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum UniquePathsCheck {
    Unique,
    /// Two distinct paths with the same endpoints.
    Witness((Path, Path)),
}

impl UniquePathsCheck {
    pub fn is_unique(&self) -> bool {
        matches!(self, UniquePathsCheck::Unique)
    }
}

/// A simple path: alternating vertex sequence, consecutive vertices adjacent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| matches!(
            (w[0], w[1]),
            (Vertex::Row(_), Vertex::Col(_)) | (Vertex::Col(_), Vertex::Row(_))
        )));
        Path { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// The consecutive `(row, col)` pairs traversed.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices
            .windows(2)
            .map(|w| match (w[0], w[1]) {
                (Vertex::Row(r), Vertex::Col(c)) | (Vertex::Col(c), Vertex::Row(r)) => (r, c),
                _ => unreachable!("alternation invariant"),
            })
            .collect()
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A cycle `(c_1, r_1, c_2, r_2, …, c_s, r_s)` of length `2s ≥ 4`: vertices
/// pairwise distinct, edges `(r_i, c_i)` and `(r_i, c_{i+1 mod s})`.
///
/// Stored in canonical form: among all rotations starting at a column and
/// both directions, the lexicographically least vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cycle {
    cols: Vec<usize>,
    rows: Vec<usize>,
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cycle {
    /// Lexicographic on the interleaved vertex index sequence.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        Cycle::interleaved(&self.cols, &self.rows).cmp(&Cycle::interleaved(&other.cols, &other.rows))
    }
}

impl Cycle {
    /// Builds the canonical form from interleaved `(c_1, r_1, …, c_s, r_s)`.
    pub fn new(cols: Vec<usize>, rows: Vec<usize>) -> Self {
        assert_eq!(cols.len(), rows.len());
        assert!(cols.len() >= 2, "a cycle has length at least 4");
        let s = cols.len();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for start in 0..s {
            // forward: (c_start, r_start, c_{start+1}, …)
            let fc: Vec<usize> = (0..s).map(|i| cols[(start + i) % s]).collect();
            let fr: Vec<usize> = (0..s).map(|i| rows[(start + i) % s]).collect();
            // backward from c_start: (c_start, r_{start−1}, c_{start−1}, …);
            // edges (r_{start−1}, c_start) … keep the same edge set.
            let bc: Vec<usize> = (0..s).map(|i| cols[(start + s - i) % s]).collect();
            let br: Vec<usize> = (0..s).map(|i| rows[(start + s - 1 - i) % s]).collect();
            for cand in [(fc, fr), (bc, br)] {
                let better = match &best {
                    None => true,
                    Some(b) => Self::interleaved(&cand.0, &cand.1) < Self::interleaved(&b.0, &b.1),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        let (cols, rows) = best.unwrap();
        Cycle { cols, rows }
    }

    /// From an odd-length vertex path `c → … → r` whose endpoints are joined
    /// by the closing edge `(r, c)`.
    pub(crate) fn from_vertex_path(path: &[Vertex]) -> Self {
        let mut cols = Vec::new();
        let mut rows = Vec::new();
        for v in path {
            match v {
                Vertex::Col(c) => cols.push(*c),
                Vertex::Row(r) => rows.push(*r),
            }
        }
        Cycle::new(cols, rows)
    }

    fn interleaved(cols: &[usize], rows: &[usize]) -> Vec<usize> {
        cols.iter()
            .zip(rows)
            .flat_map(|(&c, &r)| [c, r])
            .collect()
    }

    /// Number of edges `2s`.
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

    /// Vertex sequence `(c_1, r_1, …, c_s, r_s)`.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.cols
            .iter()
            .zip(&self.rows)
            .flat_map(|(&c, &r)| [Vertex::Col(c), Vertex::Row(r)])
            .collect()
    }

    /// The `2s` edges `(r_i, c_i)` and `(r_i, c_{i+1 mod s})`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let s = self.cols.len();
        let mut out = Vec::with_capacity(2 * s);
        for i in 0..s {
            out.push((self.rows[i], self.cols[i]));
            out.push((self.rows[i], self.cols[(i + 1) % s]));
        }
        out
    }
}

impl std::fmt::Display for Cycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .vertices()
            .iter()
            .map(|v| v.to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Random support with `n_edges` distinct edges, uniform over edge sets
/// (Fisher–Yates over the full rectangle). For property tests and demos.
pub fn random_support(
    rng: &mut impl rand::Rng,
    n_rows: usize,
    n_cols: usize,
    n_edges: usize,
) -> BipartiteSupport {
    let mut candidates: Vec<(usize, usize)> = (0..n_rows)
        .flat_map(|r| (0..n_cols).map(move |c| (r, c)))
        .collect();
    for i in (1..candidates.len()).rev() {
        let j = rng.random_range(0..=i);
        candidates.swap(i, j);
    }
    candidates.truncate(n_edges.min(n_rows * n_cols));
    BipartiteSupport::new(n_rows, n_cols, &candidates).unwrap()
}

/// Random forest grown by union-find over a shuffled edge stream, stopping
/// at `max_edges`. For property tests and demos.
pub fn random_forest(
    rng: &mut impl rand::Rng,
    n_rows: usize,
    n_cols: usize,
    max_edges: usize,
) -> BipartiteSupport {
    let mut parent: Vec<usize> = (0..n_rows + n_cols).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut candidates: Vec<(usize, usize)> = (0..n_rows)
        .flat_map(|r| (0..n_cols).map(move |c| (r, c)))
        .collect();
    for i in (1..candidates.len()).rev() {
        let j = rng.random_range(0..=i);
        candidates.swap(i, j);
    }
    let mut edges = Vec::new();
    for (r, c) in candidates {
        if edges.len() >= max_edges {
            break;
        }
        let (a, b) = (find(&mut parent, r), find(&mut parent, n_rows + c));
        if a != b {
            parent[a] = b;
            edges.push((r, c));
        }
    }
    BipartiteSupport::new(n_rows, n_cols, &edges).unwrap()
}

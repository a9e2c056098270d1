//! Weighted undirected graphs and the elementary set operations everything
//! else is built on.
//!
//! Vertices are dense ids `0..n`. All set-valued results are [`VertexSet`]s,
//! i.e. canonical sorted lists, so outputs are directly comparable in tests.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex weights are nonnegative 64-bit integers; sums use checked addition.
pub type Weight = u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph text parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("invalid weight function: {0}")]
    InvalidWeightFn(String),
}

/// A sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    /// Builds a set from arbitrary ids, sorting and deduplicating.
    pub fn from_unsorted(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    /// Wraps a list that is already sorted and duplicate-free.
    pub fn from_sorted(ids: Vec<usize>) -> Result<Self, GraphError> {
        if ids.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::InvalidSeparation(
                "vertex list not sorted or contains duplicates".into(),
            ));
        }
        Ok(VertexSet(ids))
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, usize>> {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.0.binary_search(&v) {
            self.0.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: usize) {
        if let Ok(pos) = self.0.binary_search(&v) {
            self.0.remove(pos);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().all(|v| !large.contains(v))
    }

    /// Applies a relabeling `map[old] = Some(new)` and re-sorts; ids mapped
    /// to `None` are dropped.
    pub fn relabel(&self, map: &[Option<usize>]) -> VertexSet {
        VertexSet::from_unsorted(self.iter().filter_map(|v| map[v]).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph with per-vertex nonnegative integer weights.
///
/// Immutable after construction: adjacency lists are sorted and symmetric,
/// there are no loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    weights: Vec<Weight>,
}

impl Graph {
    /// An edgeless graph on `n` unit-weight vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            weights: vec![1; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges_weighted(n, edges, vec![1; n])
    }

    pub fn from_edges_weighted(
        n: usize,
        edges: &[(usize, usize)],
        weights: Vec<Weight>,
    ) -> Result<Self, GraphError> {
        assert_eq!(weights.len(), n, "one weight per vertex");
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u, w[0]));
            }
        }
        Ok(Graph { adj, weights })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn weight(&self, v: usize) -> Weight {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Same graph with different vertex weights.
    pub fn reweighted(&self, weights: Vec<Weight>) -> Graph {
        assert_eq!(weights.len(), self.n());
        Graph {
            adj: self.adj.clone(),
            weights,
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Total weight of a vertex set; panics on u64 overflow.
    pub fn set_weight(&self, set: &VertexSet) -> Weight {
        set.iter().fold(0u64, |acc, v| {
            acc.checked_add(self.weights[v]).expect("weight overflow")
        })
    }

    /// The subgraph induced by `x`, with vertices relabeled to `0..x.len()`.
    /// The returned mapping sends new ids back to the originals; it is the
    /// order-preserving bijection, i.e. `mapping[i] = x.as_slice()[i]`.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if let Some(v) = x.iter().find(|&v| v >= self.n()) {
            return Err(GraphError::VertexOutOfRange { v, n: self.n() });
        }
        let mapping: Vec<usize> = x.iter().collect();
        let mut back = vec![usize::MAX; self.n()];
        for (new, &old) in mapping.iter().enumerate() {
            back[old] = new;
        }
        let mut adj = vec![Vec::new(); mapping.len()];
        for (new, &old) in mapping.iter().enumerate() {
            adj[new] = self.adj[old]
                .iter()
                .filter(|&&w| back[w] != usize::MAX)
                .map(|&w| back[w])
                .collect();
        }
        let weights = mapping.iter().map(|&old| self.weights[old]).collect();
        Ok((Graph { adj, weights }, mapping))
    }

    /// Connected components as vertex sets, ordered by smallest member;
    /// each component is maximal. The empty graph has no components.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `N^d[S]`: all vertices at distance at most `d` from `S`.
    /// `d = 0` returns `S` itself.
    pub fn closed_neighborhood(&self, s: &VertexSet, d: usize) -> VertexSet {
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for v in s.iter() {
            dist[v] = 0;
            queue.push_back(v);
        }
        let mut out: Vec<usize> = s.iter().collect();
        while let Some(v) = queue.pop_front() {
            if dist[v] == d {
                continue;
            }
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        VertexSet::from_unsorted(out)
    }

    /// Open neighborhood `N(S) = N[S] \ S`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.closed_neighborhood(s, 1).difference(s)
    }

    /// True iff `x` spans no edge of the graph.
    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter()
            .all(|v| self.adj[v].iter().all(|&w| !x.contains(w)))
    }

    /// Length of a shortest path with exactly one end in `x` and one in `y`;
    /// 0 if the sets intersect, `None` if no path exists.
    pub fn distance(&self, x: &VertexSet, y: &VertexSet) -> Option<usize> {
        assert!(
            !x.is_empty() && !y.is_empty(),
            "distance needs non-empty sets"
        );
        if !x.intersection(y).is_empty() {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for v in x.iter() {
            dist[v] = 0;
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if y.contains(w) {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// A separation `(A, C, B)`: disjoint cover of the vertex set with no edge
/// between `A` and `B` and non-empty `C`. `|C|` is the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub a: VertexSet,
    pub c: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    pub fn new(g: &Graph, a: VertexSet, c: VertexSet, b: VertexSet) -> Result<Self, GraphError> {
        if c.is_empty() {
            return Err(GraphError::InvalidSeparation("C is empty".into()));
        }
        if !a.is_disjoint_from(&c) || !a.is_disjoint_from(&b) || !c.is_disjoint_from(&b) {
            return Err(GraphError::InvalidSeparation("parts not disjoint".into()));
        }
        if a.union(&c).union(&b) != VertexSet::full(g.n()) {
            return Err(GraphError::InvalidSeparation(
                "parts do not cover the vertex set".into(),
            ));
        }
        for (u, v) in g.edges() {
            if (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u)) {
                return Err(GraphError::InvalidSeparation(format!(
                    "edge {u}-{v} joins A and B"
                )));
            }
        }
        Ok(Separation { a, c, b })
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }
}

/// An exact rational in `[0, 1]`-ish range used for balance thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "ratio denominator must be positive");
        Ratio { num, den }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A rational weight function `w: V -> [0, 1]` with a shared denominator, so
/// balance comparisons stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFn {
    num: Vec<u64>,
    den: u64,
}

impl WeightFn {
    /// The uniform weight `w(v) = 1/n`. For `n = 0` the denominator is 1 and
    /// the function is empty.
    pub fn uniform(n: usize) -> Self {
        WeightFn {
            num: vec![1; n],
            den: (n as u64).max(1),
        }
    }

    pub fn from_numerators(num: Vec<u64>, den: u64) -> Result<Self, GraphError> {
        if den == 0 {
            return Err(GraphError::InvalidWeightFn("zero denominator".into()));
        }
        Ok(WeightFn { num, den })
    }

    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn numerator(&self, v: usize) -> u64 {
        self.num[v]
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Total over all vertices, as an exact ratio.
    pub fn total(&self) -> Ratio {
        Ratio::new(self.num.iter().sum(), self.den)
    }

    fn set_numerator(&self, set: &VertexSet) -> u128 {
        set.iter().map(|v| self.num[v] as u128).sum()
    }

    /// Exact comparison `w(set) < threshold`.
    pub fn set_weight_below(&self, set: &VertexSet, threshold: Ratio) -> bool {
        let lhs = self.set_numerator(set) * threshold.den as u128;
        let rhs = threshold.num as u128 * self.den as u128;
        lhs < rhs
    }
}

// ---------------------------------------------------------------------------
// Text format: `p <n> <m>`, then `v <id> <weight>` lines (weight defaults to
// 1 when a vertex has no line), then `e <u> <v>` lines, 0-indexed, each
// undirected edge once. Lines starting with `c` are comments.
// ---------------------------------------------------------------------------

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut m: Option<usize> = None;
    let mut weights: Vec<Weight> = Vec::new();
    let mut weight_seen: Vec<bool> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    let err = |line: usize, msg: &str| GraphError::Parse {
        line,
        msg: msg.to_string(),
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap();
        let fields: Vec<&str> = parts.collect();
        match tag {
            "p" => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate p line"));
                }
                if fields.len() != 2 {
                    return Err(err(line_no, "expected `p <n> <m>`"));
                }
                let pn: usize = fields[0]
                    .parse()
                    .map_err(|_| err(line_no, "bad vertex count"))?;
                let pm: usize = fields[1]
                    .parse()
                    .map_err(|_| err(line_no, "bad edge count"))?;
                n = Some(pn);
                m = Some(pm);
                weights = vec![1; pn];
                weight_seen = vec![false; pn];
            }
            "v" => {
                let pn = n.ok_or_else(|| err(line_no, "v line before p line"))?;
                if fields.len() != 2 {
                    return Err(err(line_no, "expected `v <id> <weight>`"));
                }
                let id: usize = fields[0]
                    .parse()
                    .map_err(|_| err(line_no, "bad vertex id"))?;
                let w: Weight = fields[1].parse().map_err(|_| err(line_no, "bad weight"))?;
                if id >= pn {
                    return Err(err(line_no, "vertex id out of range"));
                }
                if weight_seen[id] {
                    return Err(err(line_no, "duplicate weight for vertex"));
                }
                weight_seen[id] = true;
                weights[id] = w;
            }
            "e" => {
                let pn = n.ok_or_else(|| err(line_no, "e line before p line"))?;
                if fields.len() != 2 {
                    return Err(err(line_no, "expected `e <u> <v>`"));
                }
                let u: usize = fields[0]
                    .parse()
                    .map_err(|_| err(line_no, "bad endpoint"))?;
                let v: usize = fields[1]
                    .parse()
                    .map_err(|_| err(line_no, "bad endpoint"))?;
                if u >= pn || v >= pn {
                    return Err(err(line_no, "endpoint out of range"));
                }
                edges.push((u, v));
            }
            _ => return Err(err(line_no, "unknown line tag")),
        }
    }

    let n = n.ok_or_else(|| err(0, "missing p line"))?;
    if edges.len() != m.unwrap() {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!(
                "p line declares {} edges, found {}",
                m.unwrap(),
                edges.len()
            ),
        });
    }
    Graph::from_edges_weighted(n, &edges, weights)
}

/// Serializes a graph in the text format. Unit weights are omitted; edges
/// are written once, sorted, as `e <u> <v>` with `u < v`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p {} {}\n", g.n(), g.m()));
    for v in 0..g.n() {
        if g.weight(v) != 1 {
            out.push_str(&format!("v {} {}\n", v, g.weight(v)));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(
            n,
            &(0..n.saturating_sub(1))
                .map(|i| (i, i + 1))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn induced_subgraph_prefix_of_path() {
        let g = path(4);
        let (h, map) = g
            .induced_subgraph(&VertexSet::from_unsorted(vec![0, 1, 2]))
            .unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn induced_subgraph_identity() {
        let g = cycle(5);
        let (h, map) = g.induced_subgraph(&VertexSet::full(5)).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn induced_subgraph_consecutive_cycle_vertices() {
        // Definitional edge scan: C_5 restricted to {1,2,3} keeps exactly the
        // two consecutive edges, i.e. a P_3.
        let g = cycle(5);
        let x = VertexSet::from_unsorted(vec![1, 2, 3]);
        let (h, _) = g.induced_subgraph(&x).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_subgraph_out_of_range() {
        let g = path(3);
        assert!(g.induced_subgraph(&VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn components_empty_graph() {
        let g = Graph::edgeless(0);
        assert!(g.connected_components().is_empty());
    }

    #[test]
    fn components_two_cliques() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(
            comps,
            vec![
                VertexSet::from_unsorted(vec![0, 1, 2]),
                VertexSet::from_unsorted(vec![3, 4])
            ]
        );
    }

    #[test]
    fn components_split_path() {
        // P_6 minus the endpoints of its middle edge leaves two components.
        let g = path(6);
        let keep = VertexSet::full(6).difference(&VertexSet::from_unsorted(vec![2, 3]));
        let (h, _) = g.induced_subgraph(&keep).unwrap();
        assert_eq!(h.connected_components().len(), 2);
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p5 = path(5);
        let s = VertexSet::singleton(2);
        assert_eq!(p5.closed_neighborhood(&s, 0), s);
        assert_eq!(
            p5.closed_neighborhood(&s, 1),
            VertexSet::from_unsorted(vec![1, 2, 3])
        );
        let c6 = cycle(6);
        assert_eq!(
            c6.closed_neighborhood(&VertexSet::singleton(0), 2),
            VertexSet::from_unsorted(vec![0, 1, 2, 4, 5])
        );
    }

    #[test]
    fn neighborhood_monotone_and_stabilizes() {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        let s = VertexSet::singleton(1);
        let mut prev = g.closed_neighborhood(&s, 0);
        for d in 1..8 {
            let next = g.closed_neighborhood(&s, d);
            assert!(prev.is_subset_of(&next));
            prev = next;
        }
        // Stabilizes at the component of the seed.
        assert_eq!(prev, VertexSet::from_unsorted(vec![0, 1, 2, 3]));
    }

    #[test]
    fn independence_checks() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(!k3.is_independent(&VertexSet::from_unsorted(vec![0, 1])));
        assert!(k3.is_independent(&VertexSet::new()));
        let c5 = cycle(5);
        assert!(c5.is_independent(&VertexSet::from_unsorted(vec![0, 2])));
    }

    #[test]
    fn distances() {
        let p5 = path(5);
        assert_eq!(
            p5.distance(&VertexSet::singleton(0), &VertexSet::singleton(4)),
            Some(4)
        );
        let s = VertexSet::from_unsorted(vec![1, 3]);
        assert_eq!(p5.distance(&s, &s), Some(0));
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(
            g.distance(&VertexSet::singleton(0), &VertexSet::singleton(2)),
            None
        );
    }

    #[test]
    fn separation_rejects_ab_edge() {
        let g = path(4);
        let res = Separation::new(
            &g,
            VertexSet::from_unsorted(vec![0, 1]),
            VertexSet::singleton(3),
            VertexSet::singleton(2),
        );
        assert!(matches!(res, Err(GraphError::InvalidSeparation(_))));
        // Legal separation around the middle vertex.
        let ok = Separation::new(
            &g,
            VertexSet::from_unsorted(vec![0, 1]),
            VertexSet::singleton(2),
            VertexSet::singleton(3),
        );
        assert!(ok.is_ok());
        assert_eq!(ok.unwrap().order(), 1);
    }

    #[test]
    fn weight_fn_balance_comparison() {
        let w = WeightFn::uniform(9);
        // Components of P_9 minus the center have 4 vertices each: 4/9 < 1/2.
        let comp = VertexSet::from_unsorted(vec![0, 1, 2, 3]);
        assert!(w.set_weight_below(&comp, Ratio::new(1, 2)));
        assert!(!w.set_weight_below(&VertexSet::full(9), Ratio::new(1, 2)));
        assert_eq!(w.total(), Ratio::new(9, 9));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges_weighted(4, &[(0, 1), (1, 2), (2, 3)], vec![1, 9, 1, 7]).unwrap();
        let text = write_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(parsed, g);
    }

    #[test]
    fn text_parse_errors() {
        assert!(matches!(
            parse_graph("e 0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("p 2 1\ne 0 2\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_graph("p 2 2\ne 0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        // Comments and default weights are fine.
        let g = parse_graph("c hello\np 3 1\nv 1 5\ne 0 1\n").unwrap();
        assert_eq!(g.weight(0), 1);
        assert_eq!(g.weight(1), 5);
    }

    #[test]
    fn single_vertex_graph_is_connected() {
        let g = Graph::edgeless(1);
        assert!(g.is_connected());
        assert_eq!(g.connected_components().len(), 1);
    }
}

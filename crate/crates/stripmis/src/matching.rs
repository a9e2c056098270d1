//! Exact maximum-weight matching in general graphs.
//!
//! The core is the primal-dual blossom method in its classic O(n^3) array
//! form (Galil's survey; the widely ported van Rantwijk implementation).
//! Vertex dual variables are stored pre-multiplied by two, so with integer
//! weights every slack and delta stays integral.
//!
//! Non-positive edges never help a maximum-weight matching (dropping such an
//! edge from any matching cannot lower its weight), so both solvers filter
//! them out first and optimize over the rest. Among the optima, both return
//! the one with the lexicographically smallest sorted edge-id set, which
//! makes the two routes comparable edge for edge.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("vertex {v} out of range ({n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("brute-force matching is capped at {cap} edges, graph has {m}")]
    CapExceeded { m: usize, cap: usize },
}

/// A simple undirected graph with signed integer edge weights. Weights may
/// be negative; such edges are never part of a returned matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWeightedGraph {
    n: usize,
    edges: Vec<(usize, usize, i64)>,
}

impl EdgeWeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, i64)>) -> Result<Self, MatchingError> {
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v, _) in &edges {
            if u >= n {
                return Err(MatchingError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(MatchingError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(MatchingError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(MatchingError::DuplicateEdge(u, v));
            }
        }
        Ok(EdgeWeightedGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize, i64)] {
        &self.edges
    }
}

/// A matching: vertex-disjoint edge ids of the source graph, sorted, plus
/// their total weight. The empty matching has weight 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<usize>,
    pub weight: i64,
}

impl Matching {
    /// Re-checks vertex-disjointness and the weight sum against the graph.
    pub fn is_valid_for(&self, g: &EdgeWeightedGraph) -> bool {
        let mut used = vec![false; g.n()];
        let mut weight = 0i64;
        for &k in &self.edges {
            let Some(&(u, v, w)) = g.edges().get(k) else {
                return false;
            };
            if used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
            weight += w;
        }
        weight == self.weight && self.edges.windows(2).all(|w| w[0] < w[1])
    }
}

/// Maximum-weight matching (not necessarily maximum cardinality or perfect).
/// Returns the lexicographically smallest optimal edge-id set.
pub fn max_weight_matching(g: &EdgeWeightedGraph) -> Matching {
    let kept: Vec<usize> = (0..g.edges.len()).filter(|&k| g.edges[k].2 > 0).collect();
    let sub = |banned: &[bool], used: &[bool]| -> Vec<(usize, usize, i64)> {
        kept.iter()
            .filter(|&&k| !banned[k])
            .map(|&k| g.edges[k])
            .filter(|&(u, v, _)| !used[u] && !used[v])
            .collect()
    };
    let mut banned = vec![false; g.edges.len()];
    let mut used = vec![false; g.n()];
    let opt = blossom_max_weight(g.n(), &sub(&banned, &used)).0;

    // Greedy lexicographic forcing: an edge id joins the matching exactly
    // when some optimum extends the forced set through it.
    let mut forced: Vec<usize> = Vec::new();
    let mut forced_weight = 0i64;
    for &k in &kept {
        let (u, v, w) = g.edges[k];
        if used[u] || used[v] {
            continue;
        }
        let mut used_try = used.clone();
        used_try[u] = true;
        used_try[v] = true;
        let rest = blossom_max_weight(g.n(), &sub(&banned, &used_try)).0;
        if forced_weight + w + rest == opt {
            forced.push(k);
            forced_weight += w;
            used = used_try;
        } else {
            banned[k] = true;
        }
    }
    debug_assert_eq!(forced_weight, opt);
    let m = Matching {
        edges: forced,
        weight: opt,
    };
    debug_assert!(m.is_valid_for(g));
    m
}

/// Exhaustive maximum-weight matching over all edge subsets; the test oracle.
/// Identical contract to [`max_weight_matching`]. Capped at 25 edges.
pub fn brute_force_matching(g: &EdgeWeightedGraph) -> Result<Matching, MatchingError> {
    const CAP: usize = 25;
    if g.edges.len() > CAP {
        return Err(MatchingError::CapExceeded {
            m: g.edges.len(),
            cap: CAP,
        });
    }
    let kept: Vec<(usize, usize, i64, usize)> = g
        .edges
        .iter()
        .enumerate()
        .filter(|(_, &(_, _, w))| w > 0)
        .map(|(k, &(u, v, w))| (u, v, w, k))
        .collect();
    // Suffix sums bound the achievable remainder, pruning hopeless branches
    // (strictly below the incumbent weight, so equal-weight candidates for
    // the lexicographic tie-break are never cut).
    let mut suffix = vec![0i64; kept.len() + 1];
    for i in (0..kept.len()).rev() {
        suffix[i] = suffix[i + 1] + kept[i].2;
    }
    struct Search<'a> {
        kept: &'a [(usize, usize, i64, usize)],
        suffix: &'a [i64],
        best: Option<(i64, Vec<usize>)>,
    }
    impl Search<'_> {
        fn rec(&mut self, i: usize, ids: &mut Vec<usize>, weight: i64, used: &mut Vec<bool>) {
            if let Some((bw, _)) = &self.best {
                if weight + self.suffix[i] < *bw {
                    return;
                }
            }
            if i == self.kept.len() {
                let candidate = (weight, ids.clone());
                let better = match &self.best {
                    None => true,
                    Some((bw, bids)) => {
                        weight > *bw || (weight == *bw && ids.as_slice() < bids.as_slice())
                    }
                };
                if better {
                    self.best = Some(candidate);
                }
                return;
            }
            let (u, v, _, id) = self.kept[i];
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                ids.push(id);
                self.rec(i + 1, ids, weight + self.kept[i].2, used);
                ids.pop();
                used[u] = false;
                used[v] = false;
            }
            self.rec(i + 1, ids, weight, used);
        }
    }
    let mut search = Search {
        kept: &kept,
        suffix: &suffix,
        best: None,
    };
    search.rec(0, &mut Vec::new(), 0, &mut vec![false; g.n()]);
    let (weight, edges) = search.best.unwrap_or((0, Vec::new()));
    let m = Matching { edges, weight };
    debug_assert!(m.is_valid_for(g));
    Ok(m)
}

/// Runs the blossom algorithm on an edge list with strictly positive weights.
/// Returns the optimal weight and the matched indices into `edges`.
fn blossom_max_weight(n: usize, edges: &[(usize, usize, i64)]) -> (i64, Vec<usize>) {
    if edges.is_empty() {
        return (0, Vec::new());
    }
    debug_assert!(edges.iter().all(|&(_, _, w)| w > 0));
    let mut solver = Blossom::new(n, edges);
    solver.solve();
    let mut weight = 0i64;
    let mut matched = Vec::new();
    for (k, &(u, _, w)) in edges.iter().enumerate() {
        if solver.mate[u] == 2 * k + 1 {
            weight += w;
            matched.push(k);
        }
    }
    (weight, matched)
}

const NONE: usize = usize::MAX;

/// Primal-dual blossom state. Vertices are `0..n`; non-trivial blossoms use
/// ids `n..2n`. Edge endpoint `2k` is `edges[k].0`, endpoint `2k+1` is
/// `edges[k].1`; `p ^ 1` is the opposite endpoint.
struct Blossom<'a> {
    n: usize,
    edges: &'a [(usize, usize, i64)],
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<usize>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    /// `dualvar[v] = 2 u(v)` for vertices, `z(b)` for blossoms.
    dualvar: Vec<i64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(n: usize, edges: &'a [(usize, usize, i64)]) -> Self {
        let maxweight = edges.iter().map(|&(_, _, w)| w).max().unwrap_or(0);
        let mut neighbend = vec![Vec::new(); n];
        for (k, &(u, v, _)) in edges.iter().enumerate() {
            neighbend[u].push(2 * k + 1);
            neighbend[v].push(2 * k);
        }
        let endpoint = (0..2 * edges.len())
            .map(|p| {
                if p % 2 == 0 {
                    edges[p / 2].0
                } else {
                    edges[p / 2].1
                }
            })
            .collect();
        let mut dualvar = vec![maxweight; n];
        dualvar.extend(vec![0; n]);
        Blossom {
            n,
            edges,
            endpoint,
            neighbend,
            mate: vec![NONE; n],
            label: vec![0; 2 * n],
            labelend: vec![NONE; 2 * n],
            inblossom: (0..n).collect(),
            blossomparent: vec![NONE; 2 * n],
            blossomchilds: vec![Vec::new(); 2 * n],
            blossombase: (0..n).chain(vec![NONE; n]).collect(),
            blossomendps: vec![Vec::new(); 2 * n],
            bestedge: vec![NONE; 2 * n],
            blossombestedges: vec![Vec::new(); 2 * n],
            unusedblossoms: (n..2 * n).collect(),
            dualvar,
            allowedge: vec![false; edges.len()],
            queue: Vec::new(),
        }
    }

    /// 2 * slack of edge `k`; only meaningful across top-level blossoms.
    fn slack(&self, k: usize) -> i64 {
        let (u, v, w) = self.edges[k];
        self.dualvar[u] + self.dualvar[v] - 2 * w
    }

    fn blossom_leaves(&self, b: usize) -> Vec<usize> {
        if b < self.n {
            return vec![b];
        }
        let mut out = Vec::new();
        let mut stack = vec![b];
        while let Some(t) = stack.pop() {
            if t < self.n {
                out.push(t);
            } else {
                stack.extend(self.blossomchilds[t].iter().copied());
            }
        }
        out
    }

    fn assign_label(&mut self, w: usize, t: usize, p: usize) {
        let b = self.inblossom[w];
        assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            let leaves = self.blossom_leaves(b);
            self.queue.extend(leaves);
        } else if t == 2 {
            let base = self.blossombase[b];
            assert!(self.mate[base] != NONE);
            let mbase = self.mate[base];
            self.assign_label(self.endpoint[mbase], 1, mbase ^ 1);
        }
    }

    /// Traces back from both ends of an S-S edge; returns the base of the
    /// new blossom, or NONE when the paths end in distinct roots (an
    /// augmenting path).
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let mut v = v;
        let mut w = w;
        while v != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
            if self.labelend[b] == NONE {
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                assert_eq!(self.label[b], 2);
                assert!(self.labelend[b] != NONE);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("free blossom slot");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;
        let mut childs = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            childs.push(bv);
            endps.push(self.labelend[bv]);
            assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            childs.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        self.blossomchilds[b] = childs;
        self.blossomendps[b] = endps;
        assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;
        for v in self.blossom_leaves(b) {
            if self.label[self.inblossom[v]] == 2 {
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }
        // Compute the blossom's least-slack edges to neighboring S-blossoms.
        let mut bestedgeto = vec![NONE; 2 * self.n];
        for bv in self.blossomchilds[b].clone() {
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                self.blossom_leaves(bv)
                    .into_iter()
                    .map(|v| self.neighbend[v].iter().map(|p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k in nblist {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.blossombestedges[bv] = Vec::new();
            self.bestedge[bv] = NONE;
        }
        let best: Vec<usize> = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        self.bestedge[b] = NONE;
        for &k in &best {
            if self.bestedge[b] == NONE || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
        self.blossombestedges[b] = best;
    }

    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for s in self.blossomchilds[b].clone() {
            self.blossomparent[s] = NONE;
            if s < self.n {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.blossom_leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            // Relabel sub-blossoms from the entry child round to the base.
            assert!(self.labelend[b] != NONE);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let childs_len = self.blossomchilds[b].len() as i64;
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&r| r == entrychild)
                .unwrap() as i64;
            let (jstep, endptrick): (i64, usize) = if j & 1 != 0 {
                j -= childs_len;
                (1, 0)
            } else {
                (-1, 1)
            };
            let mut p = self.labelend[b];
            while j != 0 {
                // Relabel the T-sub-blossom.
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = self.endps_at(b, j - endptrick as i64) ^ endptrick;
                self.label[self.endpoint[q ^ 1]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                // Step to the next S-sub-blossom and note its forward endpoint.
                let allowed = self.endps_at(b, j - endptrick as i64) / 2;
                self.allowedge[allowed] = true;
                j += jstep;
                p = self.endps_at(b, j - endptrick as i64) ^ endptrick;
                // Step to the next T-sub-blossom.
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            // Relabel the base T-sub-blossom without stepping to its mate.
            let bv = self.childs_at(b, j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            // Continue along the blossom until we get back to entrychild,
            // relabeling reachable sub-blossoms as T.
            j += jstep;
            while self.childs_at(b, j) != entrychild {
                let bv = self.childs_at(b, j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut v = NONE;
                for leaf in self.blossom_leaves(bv) {
                    v = leaf;
                    if self.label[v] != 0 {
                        break;
                    }
                }
                if v != NONE && self.label[v] != 0 {
                    assert_eq!(self.label[v], 2);
                    assert_eq!(self.inblossom[v], bv);
                    self.label[v] = 0;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = 0;
                    let lblend = self.labelend[v];
                    self.assign_label(v, 2, lblend);
                }
                j += jstep;
            }
        }
        self.label[b] = NONE;
        self.labelend[b] = NONE;
        self.blossombase[b] = NONE;
        self.bestedge[b] = NONE;
        self.blossomchilds[b] = Vec::new();
        self.blossomendps[b] = Vec::new();
        self.blossombestedges[b] = Vec::new();
        self.unusedblossoms.push(b);
    }

    /// Python-style wrapping index into `blossomchilds[b]`.
    fn childs_at(&self, b: usize, j: i64) -> usize {
        let list = &self.blossomchilds[b];
        let idx = if j >= 0 {
            j as usize
        } else {
            (list.len() as i64 + j) as usize
        };
        list[idx]
    }

    /// Python-style wrapping index into `blossomendps[b]`.
    fn endps_at(&self, b: usize, j: i64) -> usize {
        let list = &self.blossomendps[b];
        let idx = if j >= 0 {
            j as usize
        } else {
            (list.len() as i64 + j) as usize
        };
        list[idx]
    }

    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.n {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b].iter().position(|&r| r == t).unwrap();
        let mut j = i as i64;
        let (jstep, endptrick): (i64, usize) = if i & 1 != 0 {
            j -= self.blossomchilds[b].len() as i64;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t1 = self.childs_at(b, j);
            let p = self.endps_at(b, j - endptrick as i64) ^ endptrick;
            if t1 >= self.n {
                self.augment_blossom(t1, self.endpoint[p]);
            }
            j += jstep;
            let t2 = self.childs_at(b, j);
            if t2 >= self.n {
                self.augment_blossom(t2, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        assert_eq!(self.blossombase[b], v);
    }

    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                assert_eq!(self.label[bs], 1);
                assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs >= self.n {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break; // reached a single vertex
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                assert_eq!(self.label[bt], 2);
                assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                assert_eq!(self.blossombase[bt], t);
                if bt >= self.n {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    fn solve(&mut self) {
        for _stage in 0..self.n {
            self.label = vec![0; 2 * self.n];
            self.bestedge = vec![NONE; 2 * self.n];
            for b in self.n..2 * self.n {
                self.blossombestedges[b] = Vec::new();
            }
            self.allowedge = vec![false; self.edges.len()];
            self.queue.clear();
            for v in 0..self.n {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }
            let mut augmented = false;
            loop {
                while let Some(v) = self.queue.pop() {
                    assert_eq!(self.label[self.inblossom[v]], 1);
                    for p in self.neighbend[v].clone() {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.inblossom[w]] == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                assert_eq!(self.label[self.inblossom[w]], 2);
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE || kslack < self.slack(self.bestedge[b]) {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == NONE || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                    if augmented {
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // No augmenting path; adjust duals. Deltas are in the same
                // doubled scale as the vertex duals.
                let mut deltatype = 1;
                let mut delta = *self.dualvar[..self.n].iter().min().unwrap();
                let mut deltaedge = NONE;
                let mut deltablossom = NONE;
                for v in 0..self.n {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * self.n {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == 1
                        && self.bestedge[b] != NONE
                    {
                        let kslack = self.slack(self.bestedge[b]);
                        debug_assert_eq!(kslack % 2, 0, "S-S slack must be even");
                        let d = kslack / 2;
                        if d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                for b in self.n..2 * self.n {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == 2
                        && self.dualvar[b] < delta
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                for v in 0..self.n {
                    match self.label[self.inblossom[v]] {
                        0 => {}
                        1 => self.dualvar[v] -= delta,
                        2 => self.dualvar[v] += delta,
                        other => panic!("unexpected label {other}"),
                    }
                }
                for b in self.n..2 * self.n {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            0 => {}
                            1 => self.dualvar[b] += delta,
                            2 => self.dualvar[b] -= delta,
                            other => panic!("unexpected label {other}"),
                        }
                    }
                }
                match deltatype {
                    1 => break, // optimum reached
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == 0 {
                            i = j;
                        }
                        assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    other => panic!("unexpected delta type {other}"),
                }
            }
            if !augmented {
                break;
            }
            for b in self.n..2 * self.n {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == 1
                    && self.dualvar[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        #[cfg(debug_assertions)]
        self.verify_optimum();
        // mate[] keeps endpoint ids: edge k is matched iff
        // mate[edges[k].0] == 2k + 1 (and then mate[edges[k].1] == 2k).
        for v in 0..self.n {
            if self.mate[v] != NONE {
                let partner = self.endpoint[self.mate[v]];
                assert_eq!(self.endpoint[self.mate[partner]], v);
            }
        }
    }

    /// Certifies optimality from the dual solution: nonnegative duals and
    /// slacks, zero slack on matched edges, zero duals on single vertices.
    #[cfg(debug_assertions)]
    fn verify_optimum(&self) {
        assert!(*self.dualvar[..self.n].iter().min().unwrap() >= 0);
        assert!(*self.dualvar[self.n..].iter().min().unwrap() >= 0);
        for (k, &(i, j, w)) in self.edges.iter().enumerate() {
            let mut s = self.dualvar[i] + self.dualvar[j] - 2 * w;
            let mut iblossoms = vec![i];
            let mut jblossoms = vec![j];
            while self.blossomparent[*iblossoms.last().unwrap()] != NONE {
                iblossoms.push(self.blossomparent[*iblossoms.last().unwrap()]);
            }
            while self.blossomparent[*jblossoms.last().unwrap()] != NONE {
                jblossoms.push(self.blossomparent[*jblossoms.last().unwrap()]);
            }
            iblossoms.reverse();
            jblossoms.reverse();
            for (bi, bj) in iblossoms.into_iter().zip(jblossoms) {
                if bi != bj {
                    break;
                }
                s += 2 * self.dualvar[bi];
            }
            assert!(s >= 0, "negative slack on edge {k}");
            if self.mate[i] / 2 == k || self.mate[j] / 2 == k {
                assert_eq!(self.mate[i] / 2, k);
                assert_eq!(self.mate[j] / 2, k);
                assert_eq!(s, 0, "matched edge {k} has nonzero slack");
            }
        }
        for v in 0..self.n {
            if self.mate[v] == NONE {
                assert_eq!(self.dualvar[v], 0, "single vertex {v} has nonzero dual");
            }
        }
    }
}

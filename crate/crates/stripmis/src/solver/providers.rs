//! Decomposition providers: sources of `(X, esd)` pairs the solver can
//! consume in its decomposition case. Each provider either returns a set
//! `X` and an extended strip decomposition of `G - X`, or an explicit
//! failure; the solver re-validates every output before trusting it.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::esd::{Esd, EtaMap, PatternGraph, StripMode};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum ProviderError {
    #[error("recognition failed: {0}")]
    RecognitionFailed(String),
    #[error("graph has {n} vertices, provider capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("no decomposition found")]
    NotFound,
    #[error("decomposition file rejected: {0}")]
    FileRejected(String),
    #[error("provided decomposition is invalid: {0}")]
    ValidationFailed(String),
}

/// Configuration-level provider selection, instantiated by the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProviderSpec {
    /// Load a decomposition of the whole graph (with `X` empty) from a file.
    File(std::path::PathBuf),
    /// Recognize the graph as a line graph and decompose along its root.
    LineGraph,
    /// Exhaustive search over strip partitions, for tiny graphs.
    Exhaustive { n_cap: usize },
}

pub trait DecompositionProvider: Send + Sync {
    fn name(&self) -> String;
    fn provide(&self, g: &Graph) -> Result<(VertexSet, Esd), ProviderError>;
}

// ---------------------------------------------------------------------------
// File provider
// ---------------------------------------------------------------------------

/// Serves a decomposition file, parsed against whatever graph the solver is
/// currently working on. The file fixes one host size, so the provider only
/// succeeds at the matching recursion level (typically the root call).
pub struct FileProvider {
    label: String,
    text: String,
}

impl FileProvider {
    pub fn new(label: String, text: String) -> Self {
        FileProvider { label, text }
    }

    pub fn from_path(path: &std::path::Path) -> std::io::Result<Self> {
        Ok(FileProvider {
            label: path.display().to_string(),
            text: std::fs::read_to_string(path)?,
        })
    }
}

impl DecompositionProvider for FileProvider {
    fn name(&self) -> String {
        format!("file:{}", self.label)
    }

    fn provide(&self, g: &Graph) -> Result<(VertexSet, Esd), ProviderError> {
        let esd = crate::esd::io::read_esd(&self.text, g)
            .map_err(|e| ProviderError::FileRejected(e.to_string()))?;
        let report = esd.validate(StripMode::Relaxed);
        if !report.is_ok() {
            return Err(ProviderError::ValidationFailed(report.to_string()));
        }
        Ok((VertexSet::new(), esd))
    }
}

// ---------------------------------------------------------------------------
// Line-graph provider
// ---------------------------------------------------------------------------

/// Recognizes `G` as a line graph via backtracking over Krausz partitions
/// (edge partitions into cliques with every vertex in at most two cliques)
/// and returns the canonical decomposition along the root graph: the pattern
/// is the root, every strip is a single host vertex sitting in both of its
/// end sets, and all vertex/triangle sets are empty.
pub struct LineGraphProvider {
    budget: u64,
}

impl Default for LineGraphProvider {
    fn default() -> Self {
        LineGraphProvider { budget: 500_000 }
    }
}

struct KrauszSearch<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    covered: Vec<bool>,
    cliques: Vec<Vec<usize>>,
    vertex_cliques: Vec<Vec<usize>>,
    budget: u64,
    exhausted: bool,
}

impl<'a> KrauszSearch<'a> {
    fn edge_id(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).expect("edge exists")
    }

    /// Tries to add `v` to clique `k`, covering all edges from `v` into it.
    /// Returns false without side effects when impossible.
    fn join(&mut self, v: usize, k: usize) -> bool {
        if self.vertex_cliques[v].len() >= 2 || self.cliques[k].contains(&v) {
            return false;
        }
        let members = self.cliques[k].clone();
        if !members
            .iter()
            .all(|&w| self.g.has_edge(v, w) && !self.covered[self.edge_id(v, w)])
        {
            return false;
        }
        for &w in &members {
            let id = self.edge_id(v, w);
            self.covered[id] = true;
        }
        self.cliques[k].push(v);
        self.vertex_cliques[v].push(k);
        true
    }

    fn unjoin(&mut self, v: usize, k: usize) {
        self.cliques[k].pop();
        self.vertex_cliques[v].pop();
        for &w in &self.cliques[k].clone() {
            let id = self.edge_id(v, w);
            self.covered[id] = false;
        }
    }

    fn rec(&mut self) -> bool {
        if self.budget == 0 {
            self.exhausted = true;
            return false;
        }
        self.budget -= 1;
        let next = match self.covered.iter().position(|&c| !c) {
            None => return true,
            Some(id) => id,
        };
        let (u, v) = self.edges[next];
        // Grow an existing clique at either endpoint...
        for (a, b) in [(u, v), (v, u)] {
            for k in self.vertex_cliques[a].clone() {
                if self.join(b, k) {
                    if self.rec() {
                        return true;
                    }
                    self.unjoin(b, k);
                    if self.exhausted {
                        return false;
                    }
                }
            }
        }
        // ...or start a fresh one from this edge.
        if self.vertex_cliques[u].len() < 2 && self.vertex_cliques[v].len() < 2 {
            let k = self.cliques.len();
            self.cliques.push(vec![u, v]);
            self.vertex_cliques[u].push(k);
            self.vertex_cliques[v].push(k);
            self.covered[next] = true;
            if self.rec() {
                return true;
            }
            self.covered[next] = false;
            self.vertex_cliques[u].pop();
            self.vertex_cliques[v].pop();
            self.cliques.pop();
        }
        false
    }
}

/// Finds a Krausz partition of the edges of `g`, or `None`. The search is
/// exhaustive backtracking over lexicographically ordered edges; `budget`
/// bounds the number of search nodes.
pub fn krausz_partition(g: &Graph, budget: u64) -> Result<Option<Vec<Vec<usize>>>, ProviderError> {
    let edges = g.edges();
    let m = edges.len();
    let mut search = KrauszSearch {
        g,
        edges,
        covered: vec![false; m],
        cliques: Vec::new(),
        vertex_cliques: vec![Vec::new(); g.n()],
        budget,
        exhausted: false,
    };
    if search.rec() {
        Ok(Some(search.cliques))
    } else if search.exhausted {
        Err(ProviderError::BudgetExhausted)
    } else {
        Ok(None)
    }
}

/// Builds the canonical line-graph decomposition from a Krausz partition:
/// root vertices are the cliques (padded so every host vertex lies in
/// exactly two), root edge `x` joins the two cliques of host vertex `x`.
pub fn esd_from_krausz(g: &Graph, cliques: &[Vec<usize>]) -> Result<Esd, ProviderError> {
    let mut slots: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (k, members) in cliques.iter().enumerate() {
        for &v in members {
            slots[v].push(k);
        }
    }
    let mut root_n = cliques.len();
    for s in slots.iter_mut() {
        while s.len() < 2 {
            s.push(root_n);
            root_n += 1;
        }
    }
    let root_edges: Vec<(usize, usize)> = slots.iter().map(|s| (s[0], s[1])).collect();
    let pattern = PatternGraph::new(root_n, root_edges)
        .map_err(|e| ProviderError::ValidationFailed(e.to_string()))?;
    let mut eta = EtaMap::empty(&pattern);
    for x in 0..g.n() {
        eta.set_edge(x, VertexSet::singleton(x));
        for end in pattern.ends(x) {
            eta.set_edge_end(x, end, VertexSet::singleton(x))
                .map_err(|e| ProviderError::ValidationFailed(e.to_string()))?;
        }
    }
    Esd::new(g.clone(), pattern, eta, None)
        .map_err(|e| ProviderError::ValidationFailed(e.to_string()))
}

impl DecompositionProvider for LineGraphProvider {
    fn name(&self) -> String {
        "line-graph".into()
    }

    fn provide(&self, g: &Graph) -> Result<(VertexSet, Esd), ProviderError> {
        let cliques = krausz_partition(g, self.budget)?
            .ok_or_else(|| ProviderError::RecognitionFailed("not a line graph".into()))?;
        let esd = esd_from_krausz(g, &cliques)?;
        let report = esd.validate(StripMode::Relaxed);
        if !report.is_ok() {
            return Err(ProviderError::ValidationFailed(report.to_string()));
        }
        Ok((VertexSet::new(), esd))
    }
}

// ---------------------------------------------------------------------------
// Exhaustive provider
// ---------------------------------------------------------------------------

/// Brute-force search for a decomposition with empty vertex and triangle
/// sets: host vertices are partitioned into strips, every cross-strip
/// adjacency is routed through a shared pattern vertex, and the resulting
/// candidate is checked by the full validator. Partitions with more strips
/// are tried first (smaller particles). Only realistic for tiny graphs.
pub struct ExhaustiveProvider {
    pub n_cap: usize,
    budget: u64,
}

/// Partition enumeration materializes Bell(n) candidates, so the search is
/// never attempted past this size no matter how the cap is configured.
const EXHAUSTIVE_HARD_CAP: usize = 10;

impl ExhaustiveProvider {
    pub fn new(n_cap: usize) -> Self {
        ExhaustiveProvider {
            n_cap: n_cap.min(EXHAUSTIVE_HARD_CAP),
            budget: 200_000,
        }
    }
}

/// All set partitions of `0..n` as restricted-growth strings, decoded into
/// block lists (blocks ordered by first occurrence).
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let blocks = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut decoded = vec![Vec::new(); blocks];
        for (v, &b) in rgs.iter().enumerate() {
            decoded[b].push(v);
        }
        out.push(decoded);
        // Next restricted-growth string.
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if i == 0 {
                return out;
            }
            let cap = rgs[..i].iter().copied().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
        }
    }
}

struct SlotUnion {
    parent: Vec<usize>,
}

impl SlotUnion {
    fn new(n: usize) -> Self {
        SlotUnion {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl ExhaustiveProvider {
    fn try_partition(
        &self,
        g: &Graph,
        blocks: &[Vec<usize>],
        atom_cap: usize,
        budget: &mut u64,
    ) -> Option<Esd> {
        let block_of: Vec<usize> = {
            let mut m = vec![0; g.n()];
            for (i, blk) in blocks.iter().enumerate() {
                for &v in blk {
                    m[v] = i;
                }
            }
            m
        };
        // Attachment sets per touching ordered pair.
        let mut touch: BTreeMap<(usize, usize), VertexSet> = BTreeMap::new();
        for (u, v) in g.edges() {
            let (bu, bv) = (block_of[u], block_of[v]);
            if bu == bv {
                continue;
            }
            touch.entry((bu, bv)).or_default().insert(u);
            touch.entry((bv, bu)).or_default().insert(v);
        }
        let pairs: Vec<(usize, usize)> = touch.keys().filter(|&&(i, j)| i < j).copied().collect();
        // Walk all slot assignments (4 options per touching pair) as a
        // base-4 counter.
        let mut choice = vec![0u8; pairs.len()];
        loop {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            if let Some(esd) = self.build_candidate(g, blocks, &touch, &pairs, &choice, atom_cap) {
                return Some(esd);
            }
            let mut idx = 0;
            loop {
                if idx == choice.len() {
                    return None; // counter wrapped: all assignments tried
                }
                if choice[idx] < 3 {
                    choice[idx] += 1;
                    break;
                }
                choice[idx] = 0;
                idx += 1;
            }
        }
    }

    fn build_candidate(
        &self,
        g: &Graph,
        blocks: &[Vec<usize>],
        touch: &BTreeMap<(usize, usize), VertexSet>,
        pairs: &[(usize, usize)],
        choice: &[u8],
        atom_cap: usize,
    ) -> Option<Esd> {
        let b = blocks.len();
        let mut uf = SlotUnion::new(2 * b);
        let mut ends: Vec<[VertexSet; 2]> = vec![[VertexSet::new(), VertexSet::new()]; b];
        for (p, &(i, j)) in pairs.iter().enumerate() {
            let si = (choice[p] & 1) as usize;
            let sj = (choice[p] >> 1) as usize;
            uf.union(2 * i + si, 2 * j + sj);
            ends[i][si] = ends[i][si].union(&touch[&(i, j)]);
            ends[j][sj] = ends[j][sj].union(&touch[&(j, i)]);
        }
        // Reject loops (both slots of a strip identified) and parallel
        // strips (two strips sharing both pattern vertices).
        let mut endpoints: Vec<(usize, usize)> = Vec::with_capacity(b);
        for i in 0..b {
            let (a, z) = (uf.find(2 * i), uf.find(2 * i + 1));
            if a == z {
                return None;
            }
            let key = (a.min(z), a.max(z));
            if endpoints.contains(&key) {
                return None;
            }
            endpoints.push(key);
        }
        // Atom bound before paying for full validation.
        for (i, blk) in blocks.iter().enumerate() {
            let block: VertexSet = blk.iter().copied().collect();
            let interior = block.difference(&ends[i][0].union(&ends[i][1]));
            if interior.len() > atom_cap {
                return None;
            }
        }
        // Compact pattern vertex ids.
        let mut class_ids: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..b {
            for s in 0..2 {
                let root = uf.find(2 * i + s);
                let next = class_ids.len();
                class_ids.entry(root).or_insert(next);
            }
        }
        let pattern_edges: Vec<(usize, usize)> = (0..b)
            .map(|i| (class_ids[&uf.find(2 * i)], class_ids[&uf.find(2 * i + 1)]))
            .collect();
        let pattern = PatternGraph::new(class_ids.len(), pattern_edges).ok()?;
        let mut eta = EtaMap::empty(&pattern);
        for (i, blk) in blocks.iter().enumerate() {
            eta.set_edge(i, blk.iter().copied().collect());
            let (u, v) = pattern.endpoints(i);
            eta.set_edge_end(i, u, ends[i][0].clone()).ok()?;
            eta.set_edge_end(i, v, ends[i][1].clone()).ok()?;
        }
        let esd = Esd::new(g.clone(), pattern, eta, None).ok()?;
        if esd.validate(StripMode::Relaxed).is_ok() {
            Some(esd)
        } else {
            None
        }
    }
}

impl DecompositionProvider for ExhaustiveProvider {
    fn name(&self) -> String {
        format!("exhaustive(n<={})", self.n_cap)
    }

    fn provide(&self, g: &Graph) -> Result<(VertexSet, Esd), ProviderError> {
        if g.n() > self.n_cap {
            return Err(ProviderError::CapExceeded {
                n: g.n(),
                cap: self.n_cap,
            });
        }
        let delta = g.max_degree().max(1);
        let atom_cap = g.n().div_ceil(10 * delta);
        let mut partitions = set_partitions(g.n());
        partitions.sort_by_key(|p| std::cmp::Reverse(p.len()));
        let mut budget = self.budget;
        for blocks in &partitions {
            if budget == 0 {
                return Err(ProviderError::BudgetExhausted);
            }
            if let Some(esd) = self.try_partition(g, blocks, atom_cap, &mut budget) {
                return Ok((VertexSet::new(), esd));
            }
        }
        Err(ProviderError::NotFound)
    }
}

/// Instantiates providers from their config specs. File providers read their
/// file eagerly, so a missing file fails here rather than mid-solve.
pub fn build_providers(
    specs: &[ProviderSpec],
) -> Result<Vec<Box<dyn DecompositionProvider>>, std::io::Error> {
    let mut out: Vec<Box<dyn DecompositionProvider>> = Vec::new();
    for spec in specs {
        match spec {
            ProviderSpec::File(path) => out.push(Box::new(FileProvider::from_path(path)?)),
            ProviderSpec::LineGraph => out.push(Box::new(LineGraphProvider::default())),
            ProviderSpec::Exhaustive { n_cap } => {
                out.push(Box::new(ExhaustiveProvider::new(*n_cap)))
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{complete_graph, cycle_graph, line_graph, path_graph, petersen};

    #[test]
    fn krausz_on_line_graphs() {
        // P_4 = L(P_5); C_6 = L(C_6); L(Petersen).
        for g in [path_graph(4), cycle_graph(6), line_graph(&petersen()).0] {
            let cliques = krausz_partition(&g, 500_000).unwrap();
            assert!(cliques.is_some(), "line graph not recognized");
            let cliques = cliques.unwrap();
            // Every edge in exactly one clique, every vertex in at most two.
            let covered: usize = cliques.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
            assert_eq!(covered, g.m());
            for v in 0..g.n() {
                assert!(cliques.iter().filter(|c| c.contains(&v)).count() <= 2);
            }
        }
    }

    #[test]
    fn claw_is_not_a_line_graph() {
        let claw = crate::testkit::gen_subdivided_claw(1, 1, 1);
        assert_eq!(krausz_partition(&claw, 500_000).unwrap(), None);
        assert!(matches!(
            LineGraphProvider::default().provide(&claw),
            Err(ProviderError::RecognitionFailed(_))
        ));
    }

    #[test]
    fn line_graph_provider_on_petersen() {
        let (lg, _) = line_graph(&petersen());
        let (x, esd) = LineGraphProvider::default().provide(&lg).unwrap();
        assert!(x.is_empty());
        assert_eq!(esd.pattern.n(), 10); // the root graph is Petersen itself
        assert_eq!(esd.pattern.edge_count(), 15);
        assert!(esd.validate(StripMode::Relaxed).is_ok());
        // Every strip is a singleton in both end sets; atoms are all empty.
        assert!(esd.atoms().iter().all(|a| a.set.is_empty()));
    }

    #[test]
    fn line_graph_provider_handles_isolated_vertices() {
        let g = Graph::edgeless(3);
        let (_, esd) = LineGraphProvider::default().provide(&g).unwrap();
        assert!(esd.validate(StripMode::Relaxed).is_ok());
        assert_eq!(esd.pattern.edge_count(), 3);
    }

    #[test]
    fn exhaustive_provider_on_p4() {
        let g = path_graph(4);
        let (x, esd) = ExhaustiveProvider::new(6).provide(&g).unwrap();
        assert!(x.is_empty());
        assert!(esd.validate(StripMode::Relaxed).is_ok());
        // Atom bound held by construction.
        let delta = g.max_degree();
        let cap = g.n().div_ceil(10 * delta);
        assert!(esd.atoms().iter().all(|a| a.set.len() <= cap));
        // Usable for recursion: every particle is a proper subgraph.
        assert!(esd.particles().iter().all(|p| p.set.len() < g.n()));
    }

    #[test]
    fn exhaustive_provider_cap() {
        let g = path_graph(12);
        assert!(matches!(
            ExhaustiveProvider::new(6).provide(&g),
            Err(ProviderError::CapExceeded { n: 12, cap: 6 })
        ));
    }

    #[test]
    fn exhaustive_outputs_always_validate() {
        // Whatever the search returns must pass the validator and the atom
        // bound; this includes non-line graphs such as the claw, which
        // decomposes with the claw center in an end set of a longer strip.
        let claw = crate::testkit::gen_subdivided_claw(1, 1, 1);
        let k4 = complete_graph(4);
        let c5 = cycle_graph(5);
        for g in [claw, k4, c5] {
            let (x, esd) = ExhaustiveProvider::new(6).provide(&g).unwrap();
            assert!(x.is_empty());
            assert!(esd.validate(StripMode::Relaxed).is_ok());
            let cap = g.n().div_ceil(10 * g.max_degree().max(1));
            assert!(esd.atoms().iter().all(|a| a.set.len() <= cap));
        }
    }

    #[test]
    fn file_provider_round_trip() {
        let esd = crate::esd::fixtures::p4_canonical();
        let text = crate::esd::io::write_esd(&esd);
        let provider = FileProvider::new("test".into(), text);
        let (x, parsed) = provider.provide(&esd.host).unwrap();
        assert!(x.is_empty());
        assert_eq!(parsed, esd);
        // Same file against a mismatched host fails.
        let other = path_graph(3);
        assert!(provider.provide(&other).is_err());
    }

    #[test]
    fn file_provider_rejects_corrupt_eta() {
        let esd = crate::esd::fixtures::p4_canonical();
        let mut value: serde_json::Value =
            serde_json::from_str(&crate::esd::io::write_esd(&esd)).unwrap();
        // Move a vertex across strips: still parses, fails validation.
        value["eta"]["edge"]["1"] = serde_json::json!([1, 2, 3]);
        let provider = FileProvider::new("bad".into(), serde_json::to_string(&value).unwrap());
        assert!(matches!(
            provider.provide(&esd.host),
            Err(ProviderError::ValidationFailed(_))
        ));
    }
}

//! Detection of induced subdivided claws `S_{a,b,c}` and of induced trees
//! through a terminal set.
//!
//! Both searches are exhaustive backtracking, intended for bounded degree and
//! desk-scale inputs: leg search costs `O(n * Delta^{a+b+c})`, and the
//! induced-tree search enumerates vertex subsets and is capped.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("graph has {n} vertices, exhaustive induced-tree search is capped at {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Default size cap for the exhaustive induced-tree (constricted-set) search.
pub const DEFAULT_TREE_SEARCH_CAP: usize = 20;

/// An embedding of an induced `S_{a,b,c}`: a root plus three vertex-disjoint
/// induced paths starting at distinct neighbors of the root. `legs[i]` lists
/// the leg's vertices in path order; a leg of length 0 is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClawEmbedding {
    pub root: usize,
    pub legs: [Vec<usize>; 3],
}

impl ClawEmbedding {
    pub fn lengths(&self) -> (usize, usize, usize) {
        (self.legs[0].len(), self.legs[1].len(), self.legs[2].len())
    }

    pub fn vertices(&self) -> VertexSet {
        let mut all = vec![self.root];
        for leg in &self.legs {
            all.extend_from_slice(leg);
        }
        VertexSet::from_unsorted(all)
    }

    /// Re-checks that the embedding induces exactly `S_{a,b,c}` in `g`: legs
    /// are induced paths hanging off the root, pairwise anticomplete away
    /// from it, and the root sees only the first vertex of each leg.
    pub fn validate(&self, g: &Graph) -> bool {
        let total: usize = self.legs.iter().map(|l| l.len()).sum();
        if self.vertices().len() != total + 1 {
            return false; // repeated vertex
        }
        for (i, leg) in self.legs.iter().enumerate() {
            for (p, &x) in leg.iter().enumerate() {
                let root_adj = g.has_edge(self.root, x);
                if (p == 0) != root_adj {
                    return false;
                }
                for (q, &y) in leg.iter().enumerate().skip(p + 1) {
                    let adjacent = g.has_edge(x, y);
                    if (q == p + 1) != adjacent {
                        return false;
                    }
                }
                for other in self.legs.iter().skip(i + 1) {
                    if other.iter().any(|&y| g.has_edge(x, y)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

struct ClawSearch<'a> {
    g: &'a Graph,
    root: usize,
    lengths: [usize; 3],
    /// Dedup: consecutive legs of equal length must have increasing first
    /// vertices (legs of an induced claw are interchangeable only when their
    /// lengths agree).
    order_equal_lengths: bool,
    first_only: bool,
    out: Vec<ClawEmbedding>,
}

impl<'a> ClawSearch<'a> {
    fn ok_to_add(&self, legs: &[Vec<usize>; 3], leg_idx: usize, cand: usize, first: bool) -> bool {
        if cand == self.root {
            return false;
        }
        if self.g.has_edge(self.root, cand) != first {
            return false;
        }
        let leg = &legs[leg_idx];
        if leg.contains(&cand) {
            return false;
        }
        // Induced path: non-adjacent to everything in this leg except the
        // predecessor (the predecessor edge is implied by candidate choice).
        let upto = leg.len().saturating_sub(1);
        if leg[..upto].iter().any(|&y| self.g.has_edge(cand, y)) {
            return false;
        }
        // Anticomplete to all previously completed legs.
        for other in legs.iter().take(leg_idx) {
            if other.iter().any(|&y| y == cand || self.g.has_edge(cand, y)) {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, legs: &mut [Vec<usize>; 3], leg_idx: usize) -> bool {
        if leg_idx == 3 {
            let emb = ClawEmbedding {
                root: self.root,
                legs: legs.clone(),
            };
            debug_assert!(emb.validate(self.g));
            self.out.push(emb);
            return self.first_only;
        }
        if self.lengths[leg_idx] == 0 {
            return self.extend(legs, leg_idx + 1);
        }
        let candidates: Vec<usize> = self.g.neighbors(self.root).to_vec();
        for &start in &candidates {
            if self.order_equal_lengths
                && leg_idx > 0
                && self.lengths[leg_idx - 1] == self.lengths[leg_idx]
                && !legs[leg_idx - 1].is_empty()
                && start <= legs[leg_idx - 1][0]
            {
                continue;
            }
            if !self.ok_to_add(legs, leg_idx, start, true) {
                continue;
            }
            legs[leg_idx].push(start);
            if self.grow(legs, leg_idx) {
                return true;
            }
            legs[leg_idx].pop();
        }
        false
    }

    fn grow(&mut self, legs: &mut [Vec<usize>; 3], leg_idx: usize) -> bool {
        if legs[leg_idx].len() == self.lengths[leg_idx] {
            return self.extend(legs, leg_idx + 1);
        }
        let tail = *legs[leg_idx].last().unwrap();
        let next: Vec<usize> = self.g.neighbors(tail).to_vec();
        for &cand in &next {
            if !self.ok_to_add(legs, leg_idx, cand, false) {
                continue;
            }
            legs[leg_idx].push(cand);
            if self.grow(legs, leg_idx) {
                return true;
            }
            legs[leg_idx].pop();
        }
        false
    }
}

/// Finds an induced `S_{a,b,c}` in `g`, or `None`. Requires `b, c >= 1`;
/// `a = 0` means the claw degenerates to the path `P_{b+c+1}` (two legs).
///
/// Deterministic: roots are tried in increasing order and legs grow through
/// sorted neighbor lists, so the first embedding found is canonical.
pub fn find_induced_subdivided_claw(
    g: &Graph,
    a: usize,
    b: usize,
    c: usize,
) -> Option<ClawEmbedding> {
    assert!(b >= 1 && c >= 1, "leg lengths b, c must be at least 1");
    for root in 0..g.n() {
        let mut search = ClawSearch {
            g,
            root,
            lengths: [a, b, c],
            order_equal_lengths: true,
            first_only: true,
            out: Vec::new(),
        };
        let mut legs: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        if search.extend(&mut legs, 0) {
            return search.out.pop();
        }
    }
    None
}

/// True iff `g` contains no induced `S_{t,t,t}`.
pub fn is_sttt_free(g: &Graph, t: usize) -> bool {
    assert!(t >= 1);
    find_induced_subdivided_claw(g, t, t, t).is_none()
}

/// All induced `S_{a,b,c}` with `1 <= a,b,c <= t` rooted at `v`, each claw
/// listed once (legs are canonically ordered by length, then first vertex).
pub fn enumerate_rooted_claws(g: &Graph, v: usize, t: usize) -> Vec<ClawEmbedding> {
    assert!(t >= 1);
    let mut out = Vec::new();
    for a in 1..=t {
        for b in a..=t {
            for c in b..=t {
                let mut search = ClawSearch {
                    g,
                    root: v,
                    lengths: [a, b, c],
                    order_equal_lengths: true,
                    first_only: false,
                    out: Vec::new(),
                };
                let mut legs: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
                search.extend(&mut legs, 0);
                out.extend(search.out);
            }
        }
    }
    out
}

/// An induced tree of the host graph: the induced subgraph on `vertices` is
/// connected and acyclic. `parents` pairs each vertex with its BFS parent
/// (the smallest vertex is the root and has none).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedTree {
    pub vertices: VertexSet,
    pub parents: Vec<(usize, Option<usize>)>,
}

fn induced_tree_from_set(g: &Graph, set: &VertexSet) -> Option<InducedTree> {
    if set.is_empty() {
        return None;
    }
    let mut edge_count = 0usize;
    for x in set.iter() {
        edge_count += g
            .neighbors(x)
            .iter()
            .filter(|&&y| y > x && set.contains(y))
            .count();
    }
    if edge_count != set.len() - 1 {
        return None;
    }
    // Connected + |E| = |V| - 1  =>  tree. BFS establishes connectivity and
    // the parent structure in one pass.
    let root = set.iter().next().unwrap();
    let mut parent: Vec<(usize, Option<usize>)> = vec![(root, None)];
    let mut seen = VertexSet::singleton(root);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if set.contains(y) && !seen.contains(y) {
                seen.insert(y);
                parent.push((y, Some(x)));
                queue.push_back(y);
            }
        }
    }
    if seen.len() != set.len() {
        return None;
    }
    parent.sort_unstable_by_key(|&(v, _)| v);
    Some(InducedTree {
        vertices: set.clone(),
        parents: parent,
    })
}

/// Searches for a minimal induced tree containing all of `z`, by exhaustive
/// enumeration of vertex subsets. Returns `None` when no induced tree covers
/// `z`, i.e. when `z` is constricted. Minimality is by size, ties broken by
/// the lexicographically smallest vertex set.
pub fn find_induced_tree_containing(
    g: &Graph,
    z: &VertexSet,
) -> Result<Option<InducedTree>, PatternError> {
    find_induced_tree_containing_with_cap(g, z, DEFAULT_TREE_SEARCH_CAP)
}

pub fn find_induced_tree_containing_with_cap(
    g: &Graph,
    z: &VertexSet,
    cap: usize,
) -> Result<Option<InducedTree>, PatternError> {
    assert!(z.len() >= 2, "terminal set must have at least two vertices");
    if g.n() > cap {
        return Err(PatternError::CapExceeded { n: g.n(), cap });
    }
    let others: Vec<usize> = (0..g.n()).filter(|&v| !z.contains(v)).collect();
    let mut best: Option<VertexSet> = None;
    for mask in 0u64..(1u64 << others.len()) {
        let mut set: Vec<usize> = z.iter().collect();
        for (i, &v) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set.push(v);
            }
        }
        let set = VertexSet::from_unsorted(set);
        if let Some(b) = &best {
            if (set.len(), &set) >= (b.len(), b) {
                continue;
            }
        }
        if induced_tree_from_set(g, &set).is_some() {
            best = Some(set);
        }
    }
    Ok(best.map(|set| induced_tree_from_set(g, &set).unwrap()))
}

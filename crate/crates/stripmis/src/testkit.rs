//! Ground-truth oracles and instance generators: brute-force MWIS, the
//! Poljak subdivision with its exact independence-number shift, seeded
//! random bounded-degree graphs, subdivided claws, and line graphs.
//!
//! Everything here is deterministic: oracles break ties by maximum weight,
//! then lexicographically smallest vertex set (zero-weight vertices never
//! join a witness), and generators are pure functions of their seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TestkitError {
    #[error("graph has {n} vertices, {what} is capped at {cap}")]
    CapExceeded {
        n: usize,
        cap: usize,
        what: &'static str,
    },
}

/// An exact MWIS witness: the set and its total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwisResult {
    pub set: VertexSet,
    pub weight: Weight,
}

fn better(candidate: (&VertexSet, Weight), incumbent: &MwisResult) -> bool {
    candidate.1 > incumbent.weight
        || (candidate.1 == incumbent.weight && *candidate.0 < incumbent.set)
}

/// Exact MWIS by branching on a maximum-degree vertex (include/exclude) with
/// connected-component splitting. Capped at 30 vertices.
pub fn brute_force_mwis(g: &Graph) -> Result<MwisResult, TestkitError> {
    const CAP: usize = 30;
    if g.n() > CAP {
        return Err(TestkitError::CapExceeded {
            n: g.n(),
            cap: CAP,
            what: "brute-force MWIS",
        });
    }
    Ok(branching_mwis(g))
}

/// The branching oracle without the public size cap; used internally by the
/// solver for base cases and the always-total fallback.
pub(crate) fn branching_mwis(g: &Graph) -> MwisResult {
    if g.n() == 0 {
        return MwisResult {
            set: VertexSet::new(),
            weight: 0,
        };
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        let mut set = VertexSet::new();
        let mut weight: Weight = 0;
        for comp in comps {
            let (sub, map) = g.induced_subgraph(&comp).expect("component in range");
            let part = branching_mwis(&sub);
            set = set.union(&part.set.iter().map(|v| map[v]).collect());
            weight = weight.checked_add(part.weight).expect("weight overflow");
        }
        return MwisResult { set, weight };
    }
    // Connected. A single vertex joins iff its weight is positive (the
    // empty set wins the tie at weight zero).
    if g.n() == 1 {
        return if g.weight(0) > 0 {
            MwisResult {
                set: VertexSet::singleton(0),
                weight: g.weight(0),
            }
        } else {
            MwisResult {
                set: VertexSet::new(),
                weight: 0,
            }
        };
    }
    // Connected graphs of maximum degree two are paths or cycles; a linear
    // scan beats branching and keeps subdivided instances cheap.
    if g.max_degree() <= 2 {
        return path_or_cycle_mwis(g);
    }
    let v = (0..g.n())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    // Exclude v.
    let without: VertexSet = (0..g.n()).filter(|&u| u != v).collect();
    let (sub, map) = g.induced_subgraph(&without).unwrap();
    let part = branching_mwis(&sub);
    let mut best = MwisResult {
        set: part.set.iter().map(|u| map[u]).collect(),
        weight: part.weight,
    };
    // Include v: drop N[v].
    let closed = g.closed_neighborhood(&VertexSet::singleton(v), 1);
    let rest = VertexSet::full(g.n()).difference(&closed);
    let (sub, map) = g.induced_subgraph(&rest).unwrap();
    let part = branching_mwis(&sub);
    let set: VertexSet = part
        .set
        .iter()
        .map(|u| map[u])
        .chain(std::iter::once(v))
        .collect();
    let weight = part
        .weight
        .checked_add(g.weight(v))
        .expect("weight overflow");
    if better((&set, weight), &best) {
        best = MwisResult { set, weight };
    }
    best
}

/// Maximum independent-set weight on a path (`order` lists the vertices in
/// path order, consecutive entries adjacent), where `banned` positions are
/// excluded. Rolling DP.
fn path_dp_weight(g: &Graph, order: &[usize], banned: &[bool]) -> Weight {
    let mut incl: Option<Weight> = None; // best with current position taken
    let mut excl: Weight = 0;
    for &v in order {
        let best_prev = incl.map_or(excl, |i| i.max(excl));
        let new_incl = if banned[v] {
            None
        } else {
            Some(excl + g.weight(v))
        };
        incl = new_incl;
        excl = best_prev;
    }
    incl.map_or(excl, |i| i.max(excl))
}

/// Exact MWIS of a connected graph with maximum degree two (a path or a
/// cycle). The witness is the id-lexicographically smallest optimum over
/// positive-weight vertices, matching the other oracles: the optimum weight
/// comes from a DP, then vertices are committed greedily in id order with a
/// constrained DP probe each.
fn path_or_cycle_mwis(g: &Graph) -> MwisResult {
    let n = g.n();
    let is_cycle = g.m() == n;
    // Vertices in path order; for a cycle, an arbitrary rotation.
    let start = if is_cycle {
        0
    } else {
        (0..n).find(|&v| g.degree(v) <= 1).expect("path endpoint")
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().unwrap();
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("degree-2 chain continues");
        prev = cur;
        order.push(next);
    }
    let best_weight = |banned: &[bool]| -> Weight {
        if !is_cycle {
            return path_dp_weight(g, &order, banned);
        }
        // Cycle: either the rotation start is banned anyway, or split on it.
        if banned[order[0]] {
            return path_dp_weight(g, &order, banned);
        }
        let without = {
            let mut b = banned.to_vec();
            b[order[0]] = true;
            path_dp_weight(g, &order, &b)
        };
        let with = {
            let mut b = banned.to_vec();
            b[order[0]] = true;
            b[order[1]] = true;
            b[*order.last().unwrap()] = true;
            g.weight(order[0]) + path_dp_weight(g, &order, &b)
        };
        without.max(with)
    };
    let mut banned = vec![false; n];
    let target = best_weight(&banned);
    let mut set = VertexSet::new();
    let mut base: Weight = 0;
    for v in 0..n {
        if banned[v] || g.weight(v) == 0 {
            continue;
        }
        // Probe: does an optimum extend the committed set through v?
        let mut probe = banned.clone();
        probe[v] = true;
        for &w in g.neighbors(v) {
            probe[w] = true;
        }
        if base + g.weight(v) + best_weight(&probe) == target {
            set.insert(v);
            base += g.weight(v);
            banned = probe;
        } else {
            banned[v] = true;
        }
    }
    debug_assert_eq!(base, target);
    MwisResult {
        set,
        weight: target,
    }
}

/// Exact MWIS by full subset enumeration; cross-validates the branching
/// oracle. Capped at 25 vertices.
pub fn exhaustive_mwis(g: &Graph) -> Result<MwisResult, TestkitError> {
    const CAP: usize = 25;
    if g.n() > CAP {
        return Err(TestkitError::CapExceeded {
            n: g.n(),
            cap: CAP,
            what: "subset-enumeration MWIS",
        });
    }
    let adj_mask: Vec<u32> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best = MwisResult {
        set: VertexSet::new(),
        weight: 0,
    };
    for mask in 0u32..(1u32 << g.n()) {
        let mut ok = true;
        let mut weight: Weight = 0;
        for (v, &nbrs) in adj_mask.iter().enumerate() {
            if mask >> v & 1 == 1 {
                // Zero-weight vertices never join the canonical witness.
                if nbrs & mask != 0 || g.weight(v) == 0 {
                    ok = false;
                    break;
                }
                weight += g.weight(v);
            }
        }
        if !ok {
            continue;
        }
        let set: VertexSet = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        if better((&set, weight), &best) {
            best = MwisResult { set, weight };
        }
    }
    Ok(best)
}

/// A graph, its `2p`-fold edge subdivision, and the exact shift
/// `alpha(G^p) = alpha(G) + p * |E(G)|` the construction guarantees.
#[derive(Debug, Clone)]
pub struct PoljakInstance {
    pub base: Graph,
    pub p: usize,
    pub subdivided: Graph,
    pub alpha_shift: u64,
}

/// Subdivides every edge of `g` exactly `2p` times. Original vertices keep
/// their ids and weights; the `2p` fresh vertices of edge `i` (in the sorted
/// edge order of [`Graph::edges`]) are `n + 2p*i ..`, with unit weight.
pub fn poljak_subdivide(g: &Graph, p: usize) -> PoljakInstance {
    let base_edges = g.edges();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut next = g.n();
    for &(u, v) in &base_edges {
        if p == 0 {
            edges.push((u, v));
            continue;
        }
        let chain: Vec<usize> = (0..2 * p).map(|j| next + j).collect();
        next += 2 * p;
        edges.push((u, chain[0]));
        for w in chain.windows(2) {
            edges.push((w[0], w[1]));
        }
        edges.push((chain[2 * p - 1], v));
    }
    let mut weights = g.weights().to_vec();
    weights.resize(next, 1);
    let subdivided = Graph::from_edges_weighted(next, &edges, weights)
        .expect("subdivision of a simple graph is simple");
    PoljakInstance {
        base: g.clone(),
        p,
        subdivided,
        alpha_shift: (p * base_edges.len()) as u64,
    }
}

/// Seeded random graph with maximum degree at most `max_degree`: candidate
/// pairs are visited in lexicographic order and kept with probability
/// `edge_prob` unless an endpoint is saturated.
pub fn gen_random_bounded_degree(n: usize, max_degree: usize, edge_prob: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if degree[u] < max_degree && degree[v] < max_degree && rng.gen_bool(edge_prob) {
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

/// Random integer weights in `lo..=hi`, seeded.
pub fn gen_random_weights(n: usize, lo: Weight, hi: Weight, seed: u64) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// The subdivided claw `S_{a,b,c}`: root 0 and three paths of `a`, `b`, `c`
/// vertices hanging off it (`a = 0` degenerates to the path `P_{b+c+1}`).
pub fn gen_subdivided_claw(a: usize, b: usize, c: usize) -> Graph {
    let n = a + b + c + 1;
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [a, b, c] {
        if len == 0 {
            continue;
        }
        edges.push((0, next));
        for j in 1..len {
            edges.push((next + j - 1, next + j));
        }
        next += len;
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn petersen() -> Graph {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// The line graph of `g`: one vertex per edge (in sorted edge order), two
/// adjacent iff the edges share an endpoint. Also returns the edge list, so
/// line-graph vertex `i` corresponds to root edge `edges[i]`.
pub fn line_graph(g: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let root_edges = g.edges();
    let mut edges = Vec::new();
    for i in 0..root_edges.len() {
        for j in i + 1..root_edges.len() {
            let (a, b) = root_edges[i];
            let (c, d) = root_edges[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    (
        Graph::from_edges(root_edges.len(), &edges).unwrap(),
        root_edges,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(brute_force_mwis(&cycle_graph(5)).unwrap().weight, 2);
        let kn = complete_graph(6).reweighted((1..=6).collect());
        let best = brute_force_mwis(&kn).unwrap();
        assert_eq!(best.weight, 6);
        assert_eq!(best.set, VertexSet::singleton(5));
        let p6 = path_graph(6).reweighted(vec![1, 9, 1, 1, 9, 1]);
        assert_eq!(brute_force_mwis(&p6).unwrap().weight, 18);
    }

    #[test]
    fn oracle_cap() {
        let g = path_graph(31);
        assert!(matches!(
            brute_force_mwis(&g),
            Err(TestkitError::CapExceeded { n: 31, cap: 30, .. })
        ));
    }

    #[test]
    fn oracles_agree() {
        for seed in 0..40 {
            let n = 4 + (seed as usize) % 11;
            let g = gen_random_bounded_degree(n, 5, 0.35, seed);
            let weights = gen_random_weights(n, 1, 50, seed.wrapping_add(77));
            let g = g.reweighted(weights);
            let a = brute_force_mwis(&g).unwrap();
            let b = exhaustive_mwis(&g).unwrap();
            assert_eq!(a, b, "oracle mismatch at seed {seed}");
            assert!(g.is_independent(&a.set));
        }
    }

    #[test]
    fn poljak_k3_once_is_c9() {
        let inst = poljak_subdivide(&complete_graph(3), 1);
        assert_eq!(inst.subdivided.n(), 9);
        assert_eq!(inst.subdivided.m(), 9);
        assert!(inst.subdivided.max_degree() == 2 && inst.subdivided.is_connected());
        assert_eq!(inst.alpha_shift, 3);
        assert_eq!(brute_force_mwis(&inst.subdivided).unwrap().weight, 4);
    }

    #[test]
    fn poljak_k4_twice() {
        let inst = poljak_subdivide(&complete_graph(4), 2);
        assert_eq!(inst.subdivided.n(), 4 + 2 * 2 * 6);
        assert_eq!(inst.alpha_shift, 12);
        assert_eq!(brute_force_mwis(&inst.subdivided).unwrap().weight, 1 + 12);
    }

    #[test]
    fn poljak_zero_is_identity() {
        let g = gen_random_bounded_degree(7, 4, 0.5, 3);
        let inst = poljak_subdivide(&g, 0);
        assert_eq!(inst.subdivided, g);
        assert_eq!(inst.alpha_shift, 0);
    }

    #[test]
    fn poljak_identity_smoke() {
        for seed in 0..8 {
            let g = gen_random_bounded_degree(6, 3, 0.5, seed);
            let alpha = brute_force_mwis(&g).unwrap().weight;
            for p in 1..=2 {
                let inst = poljak_subdivide(&g, p);
                // p = 2 can push past the public oracle cap; the instances
                // stay easy for the branching core.
                let shifted = branching_mwis(&inst.subdivided).weight;
                assert_eq!(shifted, alpha + inst.alpha_shift, "seed {seed}, p {p}");
            }
        }
    }

    #[test]
    fn claw_generator() {
        let star = gen_subdivided_claw(1, 1, 1);
        assert_eq!(star.n(), 4);
        assert_eq!(star.degree(0), 3);
        let path = gen_subdivided_claw(0, 2, 3);
        assert_eq!(path.n(), 6);
        assert!(path.is_connected());
        let mut degs: Vec<usize> = (0..6).map(|v| path.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 2]); // a path
    }

    #[test]
    fn generator_is_deterministic_and_bounded() {
        let a = gen_random_bounded_degree(20, 3, 0.6, 42);
        let b = gen_random_bounded_degree(20, 3, 0.6, 42);
        assert_eq!(a, b);
        assert!(a.max_degree() <= 3);
        let c = gen_random_bounded_degree(20, 3, 0.6, 43);
        assert_ne!(a, c);
    }

    #[test]
    fn path_cycle_solver_agrees_with_enumeration() {
        // Degree-two components take the DP shortcut; force ties with small
        // repeated weights so the lexicographic rule is exercised.
        for seed in 0..30u64 {
            let n = 3 + (seed as usize) % 12;
            let path = path_graph(n).reweighted(gen_random_weights(n, 1, 3, seed));
            assert_eq!(
                branching_mwis(&path),
                exhaustive_mwis(&path).unwrap(),
                "path n={n} seed={seed}"
            );
            let cycle = cycle_graph(n).reweighted(gen_random_weights(n, 1, 3, seed + 1000));
            assert_eq!(
                branching_mwis(&cycle),
                exhaustive_mwis(&cycle).unwrap(),
                "cycle n={n} seed={seed}"
            );
        }
        // Long instance sanity: alpha(P_1001) = 501, alpha(C_1000) = 500.
        assert_eq!(branching_mwis(&path_graph(1001)).weight, 501);
        assert_eq!(branching_mwis(&cycle_graph(1000)).weight, 500);
    }

    #[test]
    fn line_graph_of_petersen() {
        let (lg, roots) = line_graph(&petersen());
        assert_eq!(lg.n(), 15);
        assert_eq!(roots.len(), 15);
        // Petersen is cubic, so its line graph is 4-regular.
        assert!((0..15).all(|v| lg.degree(v) == 4));
        // alpha(L(R)) = maximum matching size of R = 5 for Petersen.
        assert_eq!(brute_force_mwis(&lg).unwrap().weight, 5);
    }
}

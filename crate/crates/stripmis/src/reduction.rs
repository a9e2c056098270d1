//! Reduction from MWIS-with-a-decomposition to maximum-weight matching.
//!
//! Given an extended strip decomposition of the host and an independent set
//! for every particle, an auxiliary graph is built on the pattern: every
//! pattern edge `uv` gains a fresh vertex `x_uv` adjacent to `u` and `v`,
//! and the three edges around it are weighted by differences of particle
//! solution weights so that a maximum-weight matching selects a family of
//! pairwise anticomplete particles covering the host. The union of the
//! particle solutions over that family is then independent, and with exact
//! particle optima it is an exact optimum of the host.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::esd::{Esd, Particle, ParticleKey};
use crate::graph::{Graph, VertexSet, Weight};
use crate::matching::{max_weight_matching, EdgeWeightedGraph, Matching};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("no solution supplied for particle {0:?}")]
    MissingParticleSolution(ParticleKey),
    #[error("solution for particle {key:?} is not an independent subset of the particle")]
    InvalidParticleSolution { key: ParticleKey },
    #[error("combined solution is not independent: host edge {x}-{y} ({x} from {from:?}, {y} from {to:?})")]
    IndependenceViolation {
        x: usize,
        y: usize,
        from: ParticleKey,
        to: ParticleKey,
    },
    #[error("matching does not belong to this auxiliary graph")]
    ForeignMatching,
}

/// A callback producing an independent set inside `particle.set` of the
/// given host graph. Must be referentially transparent: the same particle
/// always yields the same set.
pub type ParticleSolver<'a> = dyn FnMut(&Graph, &Particle) -> VertexSet + 'a;

/// Independent sets, one per particle of a decomposition, keyed by template.
#[derive(Debug, Clone, Default)]
pub struct ParticleSolutions {
    map: BTreeMap<ParticleKey, (VertexSet, Weight)>,
}

impl ParticleSolutions {
    /// Collects and re-validates a solution for every particle of `esd`.
    pub fn collect(esd: &Esd, solver: &mut ParticleSolver) -> Result<Self, ReductionError> {
        let mut map = BTreeMap::new();
        for particle in esd.particles() {
            let set = solver(&esd.host, &particle);
            if !set.is_subset_of(&particle.set) || !esd.host.is_independent(&set) {
                return Err(ReductionError::InvalidParticleSolution { key: particle.key });
            }
            let weight = esd.host.set_weight(&set);
            map.insert(particle.key, (set, weight));
        }
        Ok(ParticleSolutions { map })
    }

    pub fn get(&self, key: ParticleKey) -> Option<&(VertexSet, Weight)> {
        self.map.get(&key)
    }

    fn weight(&self, key: ParticleKey) -> Result<i64, ReductionError> {
        let (_, w) = self
            .map
            .get(&key)
            .ok_or(ReductionError::MissingParticleSolution(key))?;
        Ok(i64::try_from(*w).expect("particle weight fits in i64"))
    }

    fn set(&self, key: ParticleKey) -> Result<&VertexSet, ReductionError> {
        self.map
            .get(&key)
            .map(|(s, _)| s)
            .ok_or(ReductionError::MissingParticleSolution(key))
    }
}

/// What an auxiliary edge stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxEdgeRole {
    /// The pattern edge itself. With parallel pattern edges only the
    /// best-weight copy is materialized (a matching could never use two),
    /// and `edge` records which copy won.
    Pattern { edge: usize },
    /// The link `x_e -- u` (`second = false`) or `x_e -- v` (`second =
    /// true`). For a loop the two links coincide and only one is built.
    EndLink { edge: usize, second: bool },
}

/// The matching instance: pattern vertices are `0..N`, the vertex `x_e` of
/// pattern edge `e` is `N + e`.
#[derive(Debug, Clone)]
pub struct AuxiliaryGraph {
    pub graph: EdgeWeightedGraph,
    pub roles: Vec<AuxEdgeRole>,
}

/// Builds the auxiliary graph `H'` and its edge weights from particle
/// solutions:
///
/// - link `x_e u` weighs the gain of opening strip `e` towards `u` over
///   keeping `eta(u)` and the strip interior separate,
/// - the pattern edge `uv` weighs the gain of taking the whole strip with
///   both potatoes and all incident triangle sets over keeping the parts.
pub fn build_auxiliary(
    esd: &Esd,
    sols: &ParticleSolutions,
) -> Result<AuxiliaryGraph, ReductionError> {
    let n_pattern = esd.pattern.n();
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut roles: Vec<AuxEdgeRole> = Vec::new();
    // Best parallel copy per endpoint pair (ties prefer the smaller id).
    let mut pattern_winner: BTreeMap<(usize, usize), (i64, usize)> = BTreeMap::new();

    for e in 0..esd.pattern.edge_count() {
        let (u, v) = esd.pattern.endpoints(e);
        let w_interior = sols.weight(ParticleKey::EdgeInterior(e))?;
        let w_u = sols.weight(ParticleKey::Vertex(u))?;
        let link_u = sols.weight(ParticleKey::EdgeEndFirst(e))? - w_u - w_interior;
        if esd.pattern.is_loop(e) {
            // Both links collapse; the loop itself can never be matched.
            edges.push((n_pattern + e, u, link_u));
            roles.push(AuxEdgeRole::EndLink {
                edge: e,
                second: false,
            });
            continue;
        }
        let w_v = sols.weight(ParticleKey::Vertex(v))?;
        let link_v = sols.weight(ParticleKey::EdgeEndSecond(e))? - w_v - w_interior;
        edges.push((n_pattern + e, u, link_u));
        roles.push(AuxEdgeRole::EndLink {
            edge: e,
            second: false,
        });
        edges.push((n_pattern + e, v, link_v));
        roles.push(AuxEdgeRole::EndLink {
            edge: e,
            second: true,
        });

        let mut full = sols.weight(ParticleKey::EdgeFull(e))? - w_u - w_v - w_interior;
        for t in esd.pattern.triangles_on_edge(e) {
            full -= sols.weight(ParticleKey::Triangle(t))?;
        }
        let key = (u.min(v), u.max(v));
        match pattern_winner.get(&key) {
            Some(&(best, _)) if best >= full => {}
            _ => {
                pattern_winner.insert(key, (full, e));
            }
        }
    }
    for (&(u, v), &(w, e)) in &pattern_winner {
        edges.push((u, v, w));
        roles.push(AuxEdgeRole::Pattern { edge: e });
    }
    let graph = EdgeWeightedGraph::new(n_pattern + esd.pattern.edge_count(), edges)
        .expect("auxiliary construction yields a simple graph");
    Ok(AuxiliaryGraph { graph, roles })
}

/// The particles a matching of the auxiliary graph selects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticleFamily {
    pub keys: Vec<ParticleKey>,
}

/// Reads a matching of the auxiliary graph back into a particle family:
///
/// - a matched pattern edge contributes its full particle,
/// - a matched end link contributes the half-open particle at that end,
/// - a pattern edge none of whose three auxiliary edges is matched
///   contributes its interior,
/// - a pattern vertex covered by no matched auxiliary edge contributes its
///   vertex particle,
/// - a triangle none of whose sides is a matched pattern edge contributes
///   its triangle particle.
pub fn assemble_family(
    matching: &Matching,
    aux: &AuxiliaryGraph,
    esd: &Esd,
) -> Result<ParticleFamily, ReductionError> {
    if !matching.is_valid_for(&aux.graph) {
        return Err(ReductionError::ForeignMatching);
    }
    let n_pattern = esd.pattern.n();
    let mut vertex_covered = vec![false; n_pattern];
    let mut full_taken = vec![false; esd.pattern.edge_count()];
    let mut end_taken = vec![false; esd.pattern.edge_count()];
    let mut matched_pairs: Vec<(usize, usize)> = Vec::new();
    let mut keys = Vec::new();

    for &k in &matching.edges {
        let (a, b, _) = aux.graph.edges()[k];
        for x in [a, b] {
            if x < n_pattern {
                vertex_covered[x] = true;
            }
        }
        match aux.roles[k] {
            AuxEdgeRole::Pattern { edge } => {
                full_taken[edge] = true;
                let (u, v) = esd.pattern.endpoints(edge);
                matched_pairs.push((u.min(v), u.max(v)));
            }
            AuxEdgeRole::EndLink { edge, .. } => end_taken[edge] = true,
        }
    }

    for (v, covered) in vertex_covered.iter().enumerate() {
        if !covered {
            keys.push(ParticleKey::Vertex(v));
        }
    }
    for &k in &matching.edges {
        match aux.roles[k] {
            AuxEdgeRole::Pattern { edge } => keys.push(ParticleKey::EdgeFull(edge)),
            AuxEdgeRole::EndLink {
                edge,
                second: false,
            } => keys.push(ParticleKey::EdgeEndFirst(edge)),
            AuxEdgeRole::EndLink { edge, second: true } => {
                keys.push(ParticleKey::EdgeEndSecond(edge))
            }
        }
    }
    for e in 0..esd.pattern.edge_count() {
        if !full_taken[e] && !end_taken[e] {
            keys.push(ParticleKey::EdgeInterior(e));
        }
    }
    for t in esd.pattern.triangles() {
        let sides = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
        if sides.iter().all(|side| !matched_pairs.contains(side)) {
            keys.push(ParticleKey::Triangle(t));
        }
    }
    keys.sort_unstable();
    Ok(ParticleFamily { keys })
}

/// Unions the family's particle solutions and re-verifies independence in
/// the host. A violation means the decomposition or family was invalid, so
/// it is a hard error, not a best-effort answer.
pub fn combine(
    family: &ParticleFamily,
    esd: &Esd,
    sols: &ParticleSolutions,
) -> Result<(VertexSet, Weight), ReductionError> {
    let mut owner: BTreeMap<usize, ParticleKey> = BTreeMap::new();
    let mut union = VertexSet::new();
    for &key in &family.keys {
        let set = sols.set(key)?;
        for v in set.iter() {
            owner.entry(v).or_insert(key);
        }
        union = union.union(set);
    }
    for x in union.iter() {
        for &y in esd.host.neighbors(x) {
            if y > x && union.contains(y) {
                return Err(ReductionError::IndependenceViolation {
                    x,
                    y,
                    from: owner[&x],
                    to: owner[&y],
                });
            }
        }
    }
    let weight = esd.host.set_weight(&union);
    Ok((union, weight))
}

/// End-to-end reduction: collect particle solutions through the callback,
/// build the auxiliary graph, find a maximum-weight matching, assemble the
/// family, and combine. With exact particle optima the result is an exact
/// maximum-weight independent set of the host.
pub fn reduce_mwis(
    esd: &Esd,
    solver: &mut ParticleSolver,
) -> Result<(VertexSet, Weight), ReductionError> {
    let sols = ParticleSolutions::collect(esd, solver)?;
    let aux = build_auxiliary(esd, &sols)?;
    let matching = max_weight_matching(&aux.graph);
    let family = assemble_family(&matching, &aux, esd)?;
    combine(&family, esd, &sols)
}

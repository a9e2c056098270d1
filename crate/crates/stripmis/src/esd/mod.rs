//! Extended strip decompositions: the pattern multigraph `H`, the `eta` map,
//! full definitional validation, atoms, and particles.
//!
//! An extended strip decomposition `(H, eta)` of a host graph `G` assigns a
//! set `eta(e)` of host vertices to every pattern edge (with end sets
//! `eta(e, v)` for each endpoint), plus `eta(v)` per pattern vertex and
//! `eta(D)` per pattern triangle, such that all sets partition `V(G)` and
//! adjacency between different sets is local in `H`. See [`Esd::validate`]
//! and its siblings for the exact conditions.

mod validate;

pub mod io;

pub use validate::{
    check_frame, check_semi_tame, check_tame, e_rungs, tilde_eta, RungBudget, StripMode,
    ValidationReport, Violation,
};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EsdError {
    #[error("bad pattern graph: {0}")]
    BadPattern(String),
    #[error("vertex {vertex} is not an endpoint of pattern edge {edge}")]
    UnknownEnd { edge: usize, vertex: usize },
    #[error("{0:?} is not a triangle of the pattern graph")]
    NotATriangle([usize; 3]),
    #[error("host vertex {v} out of range ({n} vertices)")]
    HostVertexOutOfRange { v: usize, n: usize },
    #[error("rung enumeration budget exceeded on pattern edge {edge}")]
    RungBudgetExceeded { edge: usize },
    #[error("restriction produced an invalid decomposition (internal invariant breach): {0}")]
    RestrictInvalidated(String),
}

/// The pattern multigraph `H`: dense vertex ids, an edge list that may
/// contain loops and parallel edges, and a derived triangle list. A triangle
/// is any three vertices pairwise joined by at least one edge, regardless of
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl PatternGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, EsdError> {
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(EsdError::BadPattern(format!(
                    "edge endpoint out of range: ({u}, {v}) with {n} vertices"
                )));
            }
        }
        Ok(PatternGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Stored endpoints of edge `e`; equal for a loop.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// Distinct endpoints of edge `e`: two entries, or one for a loop.
    pub fn ends(&self, e: usize) -> Vec<usize> {
        let (u, v) = self.edges[e];
        if u == v {
            vec![u]
        } else {
            vec![u, v]
        }
    }

    /// Degree in the multigraph sense; a loop contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                a == v || b == v
            })
            .collect()
    }

    /// True iff distinct vertices `u`, `v` are joined by at least one edge.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v
            && self
                .edges
                .iter()
                .any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    /// Edge ids with endpoint set `{u, v}`.
    pub fn edges_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                (a == u && b == v) || (a == v && b == u)
            })
            .collect()
    }

    /// All triangles as sorted vertex triples, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    continue;
                }
                for w in v + 1..self.n {
                    if self.adjacent(u, w) && self.adjacent(v, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    pub fn is_triangle(&self, t: [usize; 3]) -> bool {
        let [u, v, w] = t;
        u < v && v < w && self.adjacent(u, v) && self.adjacent(u, w) && self.adjacent(v, w)
    }

    /// Triangles containing both endpoints of edge `e` (empty for loops).
    pub fn triangles_on_edge(&self, e: usize) -> Vec<[usize; 3]> {
        let (u, v) = self.edges[e];
        if u == v {
            return Vec::new();
        }
        let (u, v) = (u.min(v), u.max(v));
        (0..self.n)
            .filter(|&w| w != u && w != v && self.adjacent(u, w) && self.adjacent(v, w))
            .map(|w| {
                let mut t = [u, v, w];
                t.sort_unstable();
                t
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected components of `H` minus a vertex cut, as sorted vertex sets.
    pub fn components_without(&self, cut: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: Vec<bool> = (0..self.n).map(|v| cut.contains(&v)).collect();
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &(a, b) in &self.edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && !seen[y] {
                            seen[y] = true;
                            comp.push(y);
                            stack.push(y);
                        }
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// The `eta` map of a decomposition: per-edge sets, per-(edge, end) sets,
/// per-pattern-vertex sets, and per-triangle sets, all over host vertices.
///
/// For a loop the two (edge, end) entries collapse into one set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaMap {
    edge: Vec<VertexSet>,
    /// Per edge: `(endpoint, set)` pairs, one per distinct endpoint, in the
    /// stored endpoint order.
    edge_end: Vec<Vec<(usize, VertexSet)>>,
    vertex: Vec<VertexSet>,
    triangle: BTreeMap<[usize; 3], VertexSet>,
}

impl EtaMap {
    /// An all-empty map shaped for `pattern`.
    pub fn empty(pattern: &PatternGraph) -> Self {
        let edge_end = (0..pattern.edge_count())
            .map(|e| {
                pattern
                    .ends(e)
                    .into_iter()
                    .map(|v| (v, VertexSet::new()))
                    .collect()
            })
            .collect();
        EtaMap {
            edge: vec![VertexSet::new(); pattern.edge_count()],
            edge_end,
            vertex: vec![VertexSet::new(); pattern.n()],
            triangle: BTreeMap::new(),
        }
    }

    pub fn set_edge(&mut self, e: usize, set: VertexSet) {
        self.edge[e] = set;
    }

    pub fn set_edge_end(&mut self, e: usize, end: usize, set: VertexSet) -> Result<(), EsdError> {
        match self.edge_end[e].iter_mut().find(|(v, _)| *v == end) {
            Some((_, slot)) => {
                *slot = set;
                Ok(())
            }
            None => Err(EsdError::UnknownEnd {
                edge: e,
                vertex: end,
            }),
        }
    }

    pub fn set_vertex(&mut self, v: usize, set: VertexSet) {
        self.vertex[v] = set;
    }

    pub fn set_triangle(
        &mut self,
        pattern: &PatternGraph,
        t: [usize; 3],
        set: VertexSet,
    ) -> Result<(), EsdError> {
        if !pattern.is_triangle(t) {
            return Err(EsdError::NotATriangle(t));
        }
        self.triangle.insert(t, set);
        Ok(())
    }

    pub fn edge(&self, e: usize) -> &VertexSet {
        &self.edge[e]
    }

    pub fn edge_end(&self, e: usize, end: usize) -> &VertexSet {
        self.edge_end[e]
            .iter()
            .find(|(v, _)| *v == end)
            .map(|(_, s)| s)
            .unwrap_or_else(|| panic!("vertex {end} is not an endpoint of edge {e}"))
    }

    pub fn ends_of(&self, e: usize) -> &[(usize, VertexSet)] {
        &self.edge_end[e]
    }

    /// Union of the end sets of edge `e`.
    pub fn end_union(&self, e: usize) -> VertexSet {
        self.edge_end[e]
            .iter()
            .fold(VertexSet::new(), |acc, (_, s)| acc.union(s))
    }

    pub fn vertex(&self, v: usize) -> &VertexSet {
        &self.vertex[v]
    }

    pub fn triangle(&self, t: &[usize; 3]) -> VertexSet {
        self.triangle.get(t).cloned().unwrap_or_default()
    }

    pub fn triangle_entries(&self) -> &BTreeMap<[usize; 3], VertexSet> {
        &self.triangle
    }

    fn relabel(&self, map: &[Option<usize>]) -> EtaMap {
        EtaMap {
            edge: self.edge.iter().map(|s| s.relabel(map)).collect(),
            edge_end: self
                .edge_end
                .iter()
                .map(|ends| ends.iter().map(|(v, s)| (*v, s.relabel(map))).collect())
                .collect(),
            vertex: self.vertex.iter().map(|s| s.relabel(map)).collect(),
            triangle: self
                .triangle
                .iter()
                .map(|(t, s)| (*t, s.relabel(map)))
                .collect(),
        }
    }
}

/// A feature of the pattern graph an atom or eta set is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Feature {
    Vertex(usize),
    Edge(usize),
    Triangle([usize; 3]),
}

impl std::fmt::Display for Feature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Feature::Vertex(v) => write!(f, "vertex {v}"),
            Feature::Edge(e) => write!(f, "edge {e}"),
            Feature::Triangle([u, v, w]) => write!(f, "triangle {u},{v},{w}"),
        }
    }
}

/// An atom: `eta(v)` for a vertex, `eta(e)` minus its end sets for an edge,
/// or `eta(D)` for a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub feature: Feature,
    pub set: VertexSet,
}

/// Which of the six particle templates a particle instantiates. `EndFirst`
/// and `EndSecond` refer to the stored endpoint order of the edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParticleKey {
    Vertex(usize),
    /// The edge interior `eta(uv) \ (eta(uv,u) u eta(uv,v))`.
    EdgeInterior(usize),
    /// `eta(u) u (eta(uv) \ eta(uv,v))` -- the strip opened towards `u`.
    EdgeEndFirst(usize),
    /// `eta(v) u (eta(uv) \ eta(uv,u))`.
    EdgeEndSecond(usize),
    /// `eta(u) u eta(v) u eta(uv)` plus all incident triangle sets.
    EdgeFull(usize),
    Triangle([usize; 3]),
}

/// One of the six vertex-set templates the matching reduction optimizes over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Particle {
    pub key: ParticleKey,
    pub set: VertexSet,
}

/// An extended strip decomposition of `host`, optionally with a terminal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Esd {
    pub host: Graph,
    pub pattern: PatternGraph,
    pub eta: EtaMap,
    pub terminals: Option<VertexSet>,
}

impl Esd {
    pub fn new(
        host: Graph,
        pattern: PatternGraph,
        eta: EtaMap,
        terminals: Option<VertexSet>,
    ) -> Result<Self, EsdError> {
        let n = host.n();
        let check = |set: &VertexSet| -> Result<(), EsdError> {
            match set.iter().find(|&v| v >= n) {
                Some(v) => Err(EsdError::HostVertexOutOfRange { v, n }),
                None => Ok(()),
            }
        };
        for e in 0..pattern.edge_count() {
            check(eta.edge(e))?;
            for (_, s) in eta.ends_of(e) {
                check(s)?;
            }
        }
        for v in 0..pattern.n() {
            check(eta.vertex(v))?;
        }
        for (t, s) in eta.triangle_entries() {
            if !pattern.is_triangle(*t) {
                return Err(EsdError::NotATriangle(*t));
            }
            check(s)?;
        }
        if let Some(z) = &terminals {
            check(z)?;
        }
        Ok(Esd {
            host,
            pattern,
            eta,
            terminals,
        })
    }

    /// Validates the strip-structure conditions only (the edge part).
    pub fn validate_strip_structure(&self, mode: StripMode) -> ValidationReport {
        validate::validate_strip_structure(&self.host, &self.pattern, &self.eta, mode)
    }

    /// Validates the elementary strip structure conditions: strip structure
    /// plus non-empty strips partitioning the host and clique potatoes.
    pub fn validate_elementary(&self, mode: StripMode) -> ValidationReport {
        validate::validate_elementary(&self.host, &self.pattern, &self.eta, mode)
    }

    /// Validates the full extended-strip-decomposition conditions, including
    /// the terminal correspondence when a terminal set is present.
    pub fn validate(&self, mode: StripMode) -> ValidationReport {
        validate::validate_esd(
            &self.host,
            &self.pattern,
            &self.eta,
            self.terminals.as_ref(),
            mode,
        )
    }

    /// `potato(v)`: the union of the end sets `eta(uv, v)` over edges at `v`.
    pub fn potato(&self, v: usize) -> VertexSet {
        self.pattern
            .incident_edges(v)
            .into_iter()
            .fold(VertexSet::new(), |acc, e| {
                acc.union(self.eta.edge_end(e, v))
            })
    }

    /// All atoms in deterministic order: vertex atoms, edge atoms, triangle
    /// atoms, each by feature id.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        for v in 0..self.pattern.n() {
            out.push(Atom {
                feature: Feature::Vertex(v),
                set: self.eta.vertex(v).clone(),
            });
        }
        for e in 0..self.pattern.edge_count() {
            out.push(Atom {
                feature: Feature::Edge(e),
                set: self.eta.edge(e).difference(&self.eta.end_union(e)),
            });
        }
        for t in self.pattern.triangles() {
            out.push(Atom {
                feature: Feature::Triangle(t),
                set: self.eta.triangle(&t),
            });
        }
        out
    }

    /// Boundary of an atom: the union of the potatoes of the pattern
    /// vertices the atom's feature touches.
    pub fn boundary(&self, atom: &Atom) -> VertexSet {
        match atom.feature {
            Feature::Vertex(v) => self.potato(v),
            Feature::Edge(e) => self
                .pattern
                .ends(e)
                .into_iter()
                .fold(VertexSet::new(), |acc, v| acc.union(&self.potato(v))),
            Feature::Triangle([u, v, w]) => {
                self.potato(u).union(&self.potato(v)).union(&self.potato(w))
            }
        }
    }

    fn particle_set(&self, key: ParticleKey) -> VertexSet {
        match key {
            ParticleKey::Vertex(v) => self.eta.vertex(v).clone(),
            ParticleKey::EdgeInterior(e) => self.eta.edge(e).difference(&self.eta.end_union(e)),
            // For a loop the two end sets coincide, so subtracting the "other"
            // end would orphan the potato vertices from every particle; the
            // degenerate reading opens the whole strip instead.
            ParticleKey::EdgeEndFirst(e) if self.pattern.is_loop(e) => {
                let u = self.pattern.endpoints(e).0;
                self.eta.vertex(u).union(self.eta.edge(e))
            }
            ParticleKey::EdgeEndSecond(e) if self.pattern.is_loop(e) => {
                let u = self.pattern.endpoints(e).0;
                self.eta.vertex(u).union(self.eta.edge(e))
            }
            ParticleKey::EdgeEndFirst(e) => {
                let (u, v) = self.pattern.endpoints(e);
                self.eta
                    .vertex(u)
                    .union(&self.eta.edge(e).difference(self.eta.edge_end(e, v)))
            }
            ParticleKey::EdgeEndSecond(e) => {
                let (u, v) = self.pattern.endpoints(e);
                self.eta
                    .vertex(v)
                    .union(&self.eta.edge(e).difference(self.eta.edge_end(e, u)))
            }
            ParticleKey::EdgeFull(e) => {
                let (u, v) = self.pattern.endpoints(e);
                let mut set = self
                    .eta
                    .vertex(u)
                    .union(self.eta.vertex(v))
                    .union(self.eta.edge(e));
                for t in self.pattern.triangles_on_edge(e) {
                    set = set.union(&self.eta.triangle(&t));
                }
                set
            }
            ParticleKey::Triangle(t) => self.eta.triangle(&t),
        }
    }

    /// Materializes a single particle.
    pub fn particle(&self, key: ParticleKey) -> Particle {
        Particle {
            key,
            set: self.particle_set(key),
        }
    }

    /// All particles in deterministic order: one per pattern vertex, four per
    /// edge (interior, both half-open templates, full), one per triangle.
    pub fn particles(&self) -> Vec<Particle> {
        let mut out = Vec::new();
        for v in 0..self.pattern.n() {
            out.push(self.particle(ParticleKey::Vertex(v)));
        }
        for e in 0..self.pattern.edge_count() {
            out.push(self.particle(ParticleKey::EdgeInterior(e)));
            out.push(self.particle(ParticleKey::EdgeEndFirst(e)));
            out.push(self.particle(ParticleKey::EdgeEndSecond(e)));
            out.push(self.particle(ParticleKey::EdgeFull(e)));
        }
        for t in self.pattern.triangles() {
            out.push(self.particle(ParticleKey::Triangle(t)));
        }
        out
    }

    /// Removes `removed` from the host and from every eta set, relabeling the
    /// remaining vertices order-preservingly to `0..n'`. The result is
    /// re-validated (in relaxed mode); a failure indicates a broken input
    /// decomposition and is reported as an internal invariant breach.
    ///
    /// Terminals are kept only when all of them survive the removal.
    pub fn restrict(&self, removed: &VertexSet) -> Result<Esd, EsdError> {
        let kept = VertexSet::full(self.host.n()).difference(removed);
        let (new_host, mapping) = self
            .host
            .induced_subgraph(&kept)
            .map_err(|e| EsdError::RestrictInvalidated(e.to_string()))?;
        let mut map = vec![None; self.host.n()];
        for (new, &old) in mapping.iter().enumerate() {
            map[old] = Some(new);
        }
        let eta = self.eta.relabel(&map);
        let terminals = match &self.terminals {
            Some(z) if z.is_disjoint_from(removed) => Some(z.relabel(&map)),
            _ => None,
        };
        let out = Esd {
            host: new_host,
            pattern: self.pattern.clone(),
            eta,
            terminals,
        };
        let report = out.validate(StripMode::Relaxed);
        if !report.is_ok() {
            return Err(EsdError::RestrictInvalidated(report.to_string()));
        }
        Ok(out)
    }
}

/// Builds an ESD of `host` out of an ESD of the induced subgraph on `core`
/// (whose host must be `host` restricted to `core`, in order-preserving ids)
/// by adding one isolated pattern vertex per extra component, carrying that
/// component as its vertex set. Mirrors how a decomposition of one component
/// extends to a disconnected graph.
pub fn extend_to_host(
    host: &Graph,
    core: &VertexSet,
    core_esd: &Esd,
    extra: &[VertexSet],
) -> Result<Esd, EsdError> {
    let core_ids: Vec<usize> = core.iter().collect();
    let p = core_esd.pattern.n();
    let pattern = PatternGraph::new(p + extra.len(), core_esd.pattern.edges.clone())?;
    let mut eta = EtaMap::empty(&pattern);
    let lift = |s: &VertexSet| -> VertexSet { s.iter().map(|v| core_ids[v]).collect() };
    for e in 0..core_esd.pattern.edge_count() {
        eta.set_edge(e, lift(core_esd.eta.edge(e)));
        for (end, s) in core_esd.eta.ends_of(e).to_vec() {
            eta.set_edge_end(e, end, lift(&s))?;
        }
    }
    for v in 0..p {
        eta.set_vertex(v, lift(core_esd.eta.vertex(v)));
    }
    for (t, s) in core_esd.eta.triangle_entries().clone() {
        eta.set_triangle(&pattern, t, lift(&s))?;
    }
    for (i, comp) in extra.iter().enumerate() {
        eta.set_vertex(p + i, comp.clone());
    }
    let terminals = core_esd.terminals.as_ref().map(&lift);
    Esd::new(host.clone(), pattern, eta, terminals)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The canonical two-strip decomposition of P_4: pattern x-y-z with
    /// eta(e1) = {0,1}, eta(e2) = {2,3} and singleton end sets.
    pub fn p4_canonical() -> Esd {
        let host = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let pattern = PatternGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let mut eta = EtaMap::empty(&pattern);
        eta.set_edge(0, VertexSet::from_unsorted(vec![0, 1]));
        eta.set_edge_end(0, 0, VertexSet::singleton(0)).unwrap();
        eta.set_edge_end(0, 1, VertexSet::singleton(1)).unwrap();
        eta.set_edge(1, VertexSet::from_unsorted(vec![2, 3]));
        eta.set_edge_end(1, 1, VertexSet::singleton(2)).unwrap();
        eta.set_edge_end(1, 2, VertexSet::singleton(3)).unwrap();
        Esd::new(host, pattern, eta, None).unwrap()
    }

    /// Same instance marked as a decomposition of (P_4, {0, 3}).
    pub fn p4_with_terminals() -> Esd {
        let mut esd = p4_canonical();
        esd.terminals = Some(VertexSet::from_unsorted(vec![0, 3]));
        esd
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::{p4_canonical, p4_with_terminals};
    use super::*;

    #[test]
    fn p4_atoms_and_potatoes() {
        let esd = p4_canonical();
        let atoms = esd.atoms();
        // Vertex atoms empty, edge atoms empty (ends swallow the strips).
        assert!(atoms.iter().all(|a| a.set.is_empty()));
        assert_eq!(esd.potato(1), VertexSet::from_unsorted(vec![1, 2]));
        assert_eq!(esd.potato(0), VertexSet::singleton(0));
    }

    #[test]
    fn p4_particles() {
        let esd = p4_canonical();
        assert_eq!(
            esd.particle(ParticleKey::EdgeEndFirst(0)).set,
            VertexSet::singleton(0)
        );
        assert_eq!(
            esd.particle(ParticleKey::EdgeEndSecond(0)).set,
            VertexSet::singleton(1)
        );
        assert_eq!(
            esd.particle(ParticleKey::EdgeFull(0)).set,
            VertexSet::from_unsorted(vec![0, 1])
        );
        assert_eq!(
            esd.particle(ParticleKey::EdgeInterior(0)).set,
            VertexSet::new()
        );
        // 3 vertex + 2 * 4 edge particles, no triangles.
        assert_eq!(esd.particles().len(), 11);
    }

    #[test]
    fn edge_full_with_no_triangles_is_plain_union() {
        let esd = p4_canonical();
        let (u, v) = esd.pattern.endpoints(1);
        let expected = esd
            .eta
            .vertex(u)
            .union(esd.eta.vertex(v))
            .union(esd.eta.edge(1));
        assert_eq!(esd.particle(ParticleKey::EdgeFull(1)).set, expected);
    }

    #[test]
    fn every_atom_is_a_particle() {
        let esd = p4_canonical();
        let particles = esd.particles();
        for atom in esd.atoms() {
            assert!(
                particles.iter().any(|p| p.set == atom.set),
                "atom {:?} not among particles",
                atom
            );
        }
    }

    #[test]
    fn atom_boundaries() {
        let esd = p4_canonical();
        let atoms = esd.atoms();
        let edge_atom = atoms
            .iter()
            .find(|a| a.feature == Feature::Edge(0))
            .unwrap();
        assert_eq!(
            esd.boundary(edge_atom),
            VertexSet::from_unsorted(vec![0, 1, 2])
        );
        let vertex_atom = atoms
            .iter()
            .find(|a| a.feature == Feature::Vertex(1))
            .unwrap();
        assert_eq!(
            esd.boundary(vertex_atom),
            VertexSet::from_unsorted(vec![1, 2])
        );
    }

    #[test]
    fn restrict_nothing_is_identity() {
        let esd = p4_with_terminals();
        let same = esd.restrict(&VertexSet::new()).unwrap();
        assert_eq!(same, esd);
    }

    #[test]
    fn restrict_drops_vertex_and_revalidates() {
        let esd = p4_canonical();
        let smaller = esd.restrict(&VertexSet::singleton(0)).unwrap();
        assert_eq!(smaller.host.n(), 3);
        assert!(smaller.validate(StripMode::Relaxed).is_ok());
        assert_eq!(smaller.eta.edge(0), &VertexSet::singleton(0)); // old v1
    }

    #[test]
    fn restrict_whole_strip() {
        let esd = p4_canonical();
        let smaller = esd.restrict(&VertexSet::from_unsorted(vec![0, 1])).unwrap();
        assert!(smaller.eta.edge(0).is_empty());
        assert!(smaller.validate(StripMode::Relaxed).is_ok());
    }

    #[test]
    fn restrict_commutes_with_atoms() {
        let esd = p4_canonical();
        let removed = VertexSet::from_unsorted(vec![1, 3]);
        let restricted = esd.restrict(&removed).unwrap();
        // Map restricted ids back to original ids.
        let kept: Vec<usize> = VertexSet::full(4).difference(&removed).iter().collect();
        let lifted: Vec<VertexSet> = restricted
            .atoms()
            .into_iter()
            .map(|a| a.set.iter().map(|v| kept[v]).collect())
            .collect();
        let expected: Vec<VertexSet> = esd
            .atoms()
            .into_iter()
            .map(|a| a.set.difference(&removed))
            .collect();
        assert_eq!(lifted, expected);
    }

    #[test]
    fn extend_to_host_adds_isolated_pattern_vertices() {
        // P_4 plus a disjoint triangle; the triangle goes to an isolated
        // pattern vertex.
        let host = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (4, 5), (4, 6), (5, 6)]).unwrap();
        let core = VertexSet::from_unsorted(vec![0, 1, 2, 3]);
        let tri = VertexSet::from_unsorted(vec![4, 5, 6]);
        let esd =
            extend_to_host(&host, &core, &p4_canonical(), std::slice::from_ref(&tri)).unwrap();
        assert_eq!(esd.pattern.n(), 4);
        assert_eq!(esd.eta.vertex(3), &tri);
        assert!(esd.validate(StripMode::Relaxed).is_ok());
        assert!(esd.validate(StripMode::Strict).is_ok()); // still two edges
    }

    #[test]
    fn pattern_triangles() {
        let p = PatternGraph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3), (0, 1)]).unwrap();
        assert_eq!(p.triangles(), vec![[0, 1, 2]]);
        assert!(p.is_triangle([0, 1, 2]));
        assert!(!p.is_triangle([0, 2, 3]));
        assert_eq!(p.edges_between(0, 1), vec![0, 4]);
        assert_eq!(p.degree(0), 3);
        assert_eq!(p.triangles_on_edge(3), Vec::<[usize; 3]>::new());
        assert_eq!(p.triangles_on_edge(0), vec![[0, 1, 2]]);
    }

    #[test]
    fn loop_degree_counts_twice() {
        let p = PatternGraph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(p.degree(0), 3);
        assert_eq!(p.degree(1), 1);
        assert_eq!(p.ends(0), vec![0]);
        assert!(p.is_loop(0));
    }
}

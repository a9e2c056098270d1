//! The recursive MWIS solver: balanced-separator divide and conquer where a
//! small separator exists, the decomposition-to-matching reduction where a
//! provider yields an extended strip decomposition with small atoms, and an
//! honest brute-force fallback so the solver is total on every input.
//!
//! Correctness never depends on the input being claw-free or sparse; those
//! hypotheses only ever bought running time in the underlying analysis, and
//! here they decide which case fires.

pub mod providers;

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use thiserror::Error;

use crate::esd::{Esd, StripMode};
use crate::graph::{Graph, Ratio, VertexSet, Weight, WeightFn};
use crate::reduction;
use crate::testkit::branching_mwis;

pub use providers::{DecompositionProvider, ProviderError, ProviderSpec};

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("decomposition file unusable: {0}")]
    EsdFile(String),
    #[error("separator precondition violated: {0}")]
    NotBalanced(String),
    #[error("provider contract violated: {0}")]
    ProviderContract(String),
}

/// Solver parameters. `t` documents the claw-freeness class the run targets
/// (correctness does not depend on it); `delta`, when set, must dominate the
/// input's maximum degree and otherwise is computed from the input. The
/// balance threshold defaults to `1 - 1/(10 * delta)`.
///
/// The theoretical separator-size and deletion-set constants are
/// astronomically large, so `d_max` and `z_max` are small desk-scale knobs
/// and the solver stays total through the brute-force fallback.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub t: usize,
    pub delta: Option<usize>,
    pub c: Option<Ratio>,
    /// Largest balanced-separator size the exhaustive search tries.
    pub d_max: usize,
    /// Largest deletion set accepted from a provider.
    pub z_max: usize,
    /// At or below this size the solver calls the branching oracle directly.
    pub base_case_n: usize,
    pub providers: Vec<ProviderSpec>,
    pub seed: u64,
    /// Memoization cache entries, keyed by induced-subgraph vertex set.
    /// Zero disables memoization (the default, keeping traces literal).
    pub memo_capacity: usize,
    pub collect_trace: bool,
    /// Worker threads for case branches; 1 means fully sequential.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            t: 2,
            delta: None,
            c: None,
            d_max: 3,
            z_max: 4,
            base_case_n: 10,
            providers: vec![
                ProviderSpec::LineGraph,
                ProviderSpec::Exhaustive { n_cap: 6 },
            ],
            seed: 0,
            memo_capacity: 0,
            collect_trace: false,
            threads: 1,
        }
    }
}

/// Counters over one solve run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub base_cases: u64,
    pub case1: u64,
    pub case2: u64,
    pub fallbacks: u64,
    pub memo_hits: u64,
}

/// How a (sub)instance was solved; children appear in branch order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trace {
    Empty,
    BaseCase {
        n: usize,
    },
    Memoized,
    Components {
        parts: Vec<Trace>,
    },
    Case1 {
        separator: VertexSet,
        branches: u32,
        children: Vec<Trace>,
    },
    Case2 {
        provider: String,
        x: VertexSet,
        branches: u32,
        children: Vec<Trace>,
        skipped: Vec<(String, String)>,
    },
    /// No case fired: exhaustive search decided this subinstance. At desk
    /// scale this is legitimate, but it means neither the separator bound
    /// nor any provider covered the instance.
    Fallback {
        n: usize,
        skipped: Vec<(String, String)>,
    },
}

impl Trace {
    fn write_indented(&self, f: &mut std::fmt::Formatter<'_>, depth: usize) -> std::fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            Trace::Empty => writeln!(f, "{pad}empty"),
            Trace::BaseCase { n } => writeln!(f, "{pad}base case (n = {n})"),
            Trace::Memoized => writeln!(f, "{pad}memoized"),
            Trace::Components { parts } => {
                writeln!(f, "{pad}split into {} components", parts.len())?;
                for p in parts {
                    p.write_indented(f, depth + 1)?;
                }
                Ok(())
            }
            Trace::Case1 {
                separator,
                branches,
                children,
            } => {
                writeln!(f, "{pad}case 1: separator {separator}, {branches} branches")?;
                for c in children {
                    c.write_indented(f, depth + 1)?;
                }
                Ok(())
            }
            Trace::Case2 {
                provider,
                x,
                branches,
                children,
                skipped,
            } => {
                writeln!(
                    f,
                    "{pad}case 2: provider {provider}, X = {x}, {branches} branches"
                )?;
                for (name, reason) in skipped {
                    writeln!(f, "{pad}  (skipped {name}: {reason})")?;
                }
                for c in children {
                    c.write_indented(f, depth + 1)?;
                }
                Ok(())
            }
            Trace::Fallback { n, skipped } => {
                writeln!(
                    f,
                    "{pad}WARNING: fallback to exhaustive search (n = {n}); no separator within d_max, no provider succeeded"
                )?;
                for (name, reason) in skipped {
                    writeln!(f, "{pad}  ({name}: {reason})")?;
                }
                Ok(())
            }
        }
    }
}

impl std::fmt::Display for Trace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.write_indented(f, 0)
    }
}

/// The result of a solve: a maximum-weight independent set, its weight, run
/// counters, and (on request) the case-decision trace.
#[derive(Debug, Clone)]
pub struct Solution {
    pub set: VertexSet,
    pub weight: Weight,
    pub stats: SolveStats,
    pub trace: Option<Trace>,
}

// ---------------------------------------------------------------------------
// Balanced separators
// ---------------------------------------------------------------------------

/// Finds the smallest (then lexicographically first) set `X` of size at most
/// `d_max` such that every component of `G - X` has weight strictly below
/// `c`, by exhaustive enumeration of vertex subsets.
pub fn find_balanced_separator(
    g: &Graph,
    w: &WeightFn,
    c: Ratio,
    d_max: usize,
) -> Option<VertexSet> {
    assert_eq!(w.len(), g.n(), "weight function must match the graph");
    let balanced = |x: &VertexSet| {
        let keep = VertexSet::full(g.n()).difference(x);
        let (sub, map) = g.induced_subgraph(&keep).expect("subset in range");
        sub.connected_components().into_iter().all(|comp| {
            let lifted: VertexSet = comp.iter().map(|v| map[v]).collect();
            w.set_weight_below(&lifted, c)
        })
    };
    if balanced(&VertexSet::new()) {
        return Some(VertexSet::new());
    }
    for size in 1..=d_max.min(g.n()) {
        let mut indices: Vec<usize> = (0..size).collect();
        'combos: loop {
            let candidate: VertexSet = indices.iter().copied().collect();
            if balanced(&candidate) {
                return Some(candidate);
            }
            // Advance to the next lexicographic combination.
            let mut i = size;
            loop {
                if i == 0 {
                    break 'combos;
                }
                i -= 1;
                if indices[i] < g.n() - (size - i) {
                    indices[i] += 1;
                    for j in i + 1..size {
                        indices[j] = indices[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    None
}

/// Splits `V(G) - S` into two anticomplete halves `L`, `R`, each of size at
/// most `ceil((c+1)/2 * n)`: either the largest component alone already
/// reaches `(1-c)/2 * n` and becomes `L`, or components accumulate greedily
/// in decreasing size until they pass that mark. Requires `S` to be a
/// `c`-balanced separator under uniform weights.
pub fn partition_lr(
    g: &Graph,
    s: &VertexSet,
    c: Ratio,
) -> Result<(VertexSet, VertexSet), SolverError> {
    let w = WeightFn::uniform(g.n());
    let keep = VertexSet::full(g.n()).difference(s);
    let (sub, map) = g.induced_subgraph(&keep).expect("subset in range");
    let mut comps: Vec<VertexSet> = sub
        .connected_components()
        .into_iter()
        .map(|comp| comp.iter().map(|v| map[v]).collect())
        .collect();
    for comp in &comps {
        if !w.set_weight_below(comp, c) {
            return Err(SolverError::NotBalanced(format!(
                "component {comp} has weight >= {c}"
            )));
        }
    }
    comps.sort_by_key(|comp| (std::cmp::Reverse(comp.len()), comp.clone()));

    let n = g.n() as u128;
    // |D| >= (1-c)/2 * n  <=>  2 |D| den >= (den - num) n.
    let big = |size: usize| 2 * size as u128 * c.den as u128 >= (c.den - c.num) as u128 * n;
    let (l, r): (VertexSet, VertexSet) = if comps.is_empty() {
        (VertexSet::new(), VertexSet::new())
    } else if big(comps[0].len()) {
        let l = comps[0].clone();
        let r = comps[1..]
            .iter()
            .fold(VertexSet::new(), |acc, comp| acc.union(comp));
        (l, r)
    } else {
        let mut l = VertexSet::new();
        let mut taken = 0;
        for comp in &comps {
            l = l.union(comp);
            taken += 1;
            if big(l.len()) {
                break;
            }
        }
        let r = comps[taken..]
            .iter()
            .fold(VertexSet::new(), |acc, comp| acc.union(comp));
        (l, r)
    };
    // ceil((c+1)/2 * n) in exact integer arithmetic.
    let bound = ((c.num as u128 + c.den as u128) * n).div_ceil(2 * c.den as u128) as usize;
    debug_assert!(
        l.len() <= bound && r.len() <= bound,
        "partition claim violated"
    );
    Ok((l, r))
}

/// A recursion callback: solves MWIS on the induced subgraph `G[set]` and
/// returns the witness (in the ids of the graph the set refers to) with its
/// weight.
pub type Recurse<'a> = dyn FnMut(&VertexSet) -> (VertexSet, Weight) + 'a;

fn better(weight: Weight, set: &VertexSet, best: &Option<(VertexSet, Weight)>) -> bool {
    match best {
        None => true,
        Some((bset, bweight)) => weight > *bweight || (weight == *bweight && set < bset),
    }
}

/// Separator branching: enumerates independent subsets `I_S` of the
/// separator, removes their neighborhoods, and recurses on both sides of the
/// partition. Returns the best candidate with the branch count.
pub fn solve_case1(
    g: &Graph,
    s: &VertexSet,
    c: Ratio,
    recurse: &mut Recurse,
) -> Result<(VertexSet, Weight, u32), SolverError> {
    let (l, r) = partition_lr(g, s, c)?;
    let s_vertices: Vec<usize> = s.iter().collect();
    let mut best: Option<(VertexSet, Weight)> = None;
    let mut branches = 0u32;
    for mask in 0u32..(1 << s_vertices.len()) {
        let i_s: VertexSet = s_vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if !g.is_independent(&i_s) {
            continue;
        }
        branches += 1;
        let banned = g.open_neighborhood(&i_s);
        let (sl, wl) = recurse(&l.difference(&banned));
        let (sr, wr) = recurse(&r.difference(&banned));
        let set = i_s.union(&sl).union(&sr);
        let weight = g
            .set_weight(&i_s)
            .checked_add(wl)
            .and_then(|w| w.checked_add(wr))
            .expect("weight overflow");
        if better(weight, &set, &best) {
            best = Some((set, weight));
        }
    }
    let (set, weight) = best.expect("the empty subset always branches");
    Ok((set, weight, branches))
}

/// Checks a provider's output against its contract: `X` small and in range,
/// the decomposition host equal to `G - X`, definitional validity, the atom
/// bound, and particle sizes small enough for the recursion to shrink.
pub fn check_provider_contract(
    g: &Graph,
    x: &VertexSet,
    esd: &Esd,
    z_max: usize,
    delta: usize,
) -> Result<(), String> {
    if x.iter().any(|v| v >= g.n()) {
        return Err("X not within the graph".into());
    }
    if x.len() > z_max {
        return Err(format!("|X| = {} exceeds z_max = {}", x.len(), z_max));
    }
    let keep = VertexSet::full(g.n()).difference(x);
    let (expected_host, _) = g.induced_subgraph(&keep).expect("subset in range");
    if esd.host != expected_host {
        return Err("decomposition host is not G - X".into());
    }
    let report = esd.validate(StripMode::Relaxed);
    if !report.is_ok() {
        return Err(format!("invalid decomposition: {report}"));
    }
    let n = g.n();
    let atom_cap = n.div_ceil(10 * delta);
    for atom in esd.atoms() {
        if atom.set.len() > atom_cap {
            return Err(format!(
                "atom {} has {} vertices, bound is {atom_cap}",
                atom.feature,
                atom.set.len()
            ));
        }
    }
    // Runtime audit of the particle bound, plus strict progress so the
    // recursion always shrinks.
    for particle in esd.particles() {
        let size = particle.set.len();
        if 10 * delta * size > (2 + delta) * n + 30 * delta * delta {
            return Err(format!(
                "particle {:?} has {size} vertices, beyond the (2+D)/(10D) n + 3D bound",
                particle.key
            ));
        }
        if size >= n && n > 0 {
            return Err(format!(
                "particle {:?} spans the whole graph; no progress",
                particle.key
            ));
        }
    }
    Ok(())
}

/// Decomposition branching: guesses the intersection `I_X` of an optimum
/// with the deletion set, restricts the decomposition by the neighborhood of
/// the guess, and runs the matching reduction with the recursion as the
/// particle solver.
pub fn solve_case2(
    g: &Graph,
    x: &VertexSet,
    esd: &Esd,
    recurse: &mut Recurse,
) -> Result<(VertexSet, Weight, u32), SolverError> {
    let kept: Vec<usize> = VertexSet::full(g.n()).difference(x).iter().collect();
    if esd.host.n() != kept.len() {
        return Err(SolverError::ProviderContract(
            "decomposition host size is not |V(G)| - |X|".into(),
        ));
    }
    let x_vertices: Vec<usize> = x.iter().collect();
    let mut best: Option<(VertexSet, Weight)> = None;
    let mut branches = 0u32;
    for mask in 0u32..(1 << x_vertices.len()) {
        let i_x: VertexSet = x_vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if !g.is_independent(&i_x) {
            continue;
        }
        branches += 1;
        let banned = g.open_neighborhood(&i_x);
        // Host ids of the banned vertices that survive X removal.
        let removed_host: VertexSet = banned
            .iter()
            .filter_map(|v| kept.binary_search(&v).ok())
            .collect();
        let restricted = esd
            .restrict(&removed_host)
            .expect("restriction of a valid decomposition stays valid");
        // Restricted-host id i corresponds to g id kept2[i].
        let kept2: Vec<usize> = kept
            .iter()
            .copied()
            .filter(|v| !banned.contains(*v))
            .collect();
        let mut to_restricted = vec![usize::MAX; g.n()];
        for (i, &v) in kept2.iter().enumerate() {
            to_restricted[v] = i;
        }
        let mut particle_solver = |_h: &Graph, particle: &crate::esd::Particle| {
            let lifted: VertexSet = particle.set.iter().map(|i| kept2[i]).collect();
            let (sol, _) = recurse(&lifted);
            sol.iter().map(|v| to_restricted[v]).collect()
        };
        let (set_restricted, w) = reduction::reduce_mwis(&restricted, &mut particle_solver)
            .expect("reduction on a validated decomposition");
        let lifted: VertexSet = set_restricted.iter().map(|i| kept2[i]).collect();
        let set = i_x.union(&lifted);
        let weight = g.set_weight(&i_x).checked_add(w).expect("weight overflow");
        if better(weight, &set, &best) {
            best = Some((set, weight));
        }
    }
    let (set, weight) = best.expect("the empty subset always branches");
    Ok((set, weight, branches))
}

// ---------------------------------------------------------------------------
// The full recursive solver
// ---------------------------------------------------------------------------

struct Ctx<'a> {
    g: &'a Graph,
    c: Ratio,
    delta: usize,
    d_max: usize,
    z_max: usize,
    base_case_n: usize,
    threads: usize,
    providers: Vec<Box<dyn DecompositionProvider>>,
    memo_capacity: usize,
    memo: Mutex<HashMap<VertexSet, (VertexSet, Weight)>>,
    nodes: AtomicU64,
    base_cases: AtomicU64,
    case1: AtomicU64,
    case2: AtomicU64,
    fallbacks: AtomicU64,
    memo_hits: AtomicU64,
}

impl Ctx<'_> {
    fn bump(counter: &AtomicU64) {
        counter.fetch_add(1, Ordering::Relaxed);
    }

    /// Evaluates `items` through `f`, in parallel when configured; output
    /// order always matches input order, keeping every reduction
    /// deterministic regardless of scheduling.
    fn run_branches<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Send + Sync,
    {
        if self.threads > 1 {
            items.into_par_iter().map(f).collect()
        } else {
            items.into_iter().map(f).collect()
        }
    }

    fn subsets_of(vertices: &[usize], g: &Graph) -> Vec<VertexSet> {
        (0u32..(1 << vertices.len()))
            .map(|mask| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .filter(|set| g.is_independent(set))
            .collect()
    }

    fn solve_rec(&self, set: &VertexSet) -> (VertexSet, Weight, Trace) {
        Self::bump(&self.nodes);
        if set.is_empty() {
            return (VertexSet::new(), 0, Trace::Empty);
        }
        if self.memo_capacity > 0 {
            if let Some((s, w)) = self.memo.lock().unwrap().get(set) {
                Self::bump(&self.memo_hits);
                return (s.clone(), *w, Trace::Memoized);
            }
        }
        let (sub, map) = self.g.induced_subgraph(set).expect("subset of the input");
        let comps = sub.connected_components();
        let (result_set, weight, trace) = if comps.len() > 1 {
            let parts = self.run_branches(comps, |comp| {
                let lifted: VertexSet = comp.iter().map(|v| map[v]).collect();
                self.solve_rec(&lifted)
            });
            let mut set_acc = VertexSet::new();
            let mut weight: Weight = 0;
            let mut traces = Vec::new();
            for (s, w, t) in parts {
                set_acc = set_acc.union(&s);
                weight = weight.checked_add(w).expect("weight overflow");
                traces.push(t);
            }
            (set_acc, weight, Trace::Components { parts: traces })
        } else if sub.n() <= self.base_case_n {
            Self::bump(&self.base_cases);
            let res = branching_mwis(&sub);
            let lifted: VertexSet = res.set.iter().map(|v| map[v]).collect();
            (lifted, res.weight, Trace::BaseCase { n: sub.n() })
        } else if let Some(sep) =
            find_balanced_separator(&sub, &WeightFn::uniform(sub.n()), self.c, self.d_max)
        {
            Self::bump(&self.case1);
            self.case1_rec(&sub, &map, &sep)
        } else {
            let mut skipped: Vec<(String, String)> = Vec::new();
            let mut accepted = None;
            for provider in &self.providers {
                match provider.provide(&sub) {
                    Err(e) => skipped.push((provider.name(), e.to_string())),
                    Ok((x, esd)) => {
                        match check_provider_contract(&sub, &x, &esd, self.z_max, self.delta) {
                            Ok(()) => {
                                accepted = Some((provider.name(), x, esd));
                                break;
                            }
                            Err(reason) => skipped.push((provider.name(), reason)),
                        }
                    }
                }
            }
            match accepted {
                Some((name, x, esd)) => {
                    Self::bump(&self.case2);
                    self.case2_rec(&sub, &map, name, &x, &esd, skipped)
                }
                None => {
                    Self::bump(&self.fallbacks);
                    let res = branching_mwis(&sub);
                    let lifted: VertexSet = res.set.iter().map(|v| map[v]).collect();
                    (
                        lifted,
                        res.weight,
                        Trace::Fallback {
                            n: sub.n(),
                            skipped,
                        },
                    )
                }
            }
        };
        if self.memo_capacity > 0 {
            let mut memo = self.memo.lock().unwrap();
            if memo.len() < self.memo_capacity {
                memo.insert(set.clone(), (result_set.clone(), weight));
            }
        }
        (result_set, weight, trace)
    }

    /// Case 1 over the induced subgraph `sub` (with `map` back to input
    /// ids): branch on independent subsets of the separator.
    fn case1_rec(&self, sub: &Graph, map: &[usize], sep: &VertexSet) -> (VertexSet, Weight, Trace) {
        let (l, r) = partition_lr(sub, sep, self.c).expect("separator was just verified");
        let s_vertices: Vec<usize> = sep.iter().collect();
        let guesses = Self::subsets_of(&s_vertices, sub);
        let branches = guesses.len() as u32;
        let lift = |s: &VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
        let results = self.run_branches(guesses, |i_s| {
            let banned = sub.open_neighborhood(&i_s);
            let (sl, wl, tl) = self.solve_rec(&lift(&l.difference(&banned)));
            let (sr, wr, tr) = self.solve_rec(&lift(&r.difference(&banned)));
            let set = lift(&i_s).union(&sl).union(&sr);
            let weight = sub
                .set_weight(&i_s)
                .checked_add(wl)
                .and_then(|w| w.checked_add(wr))
                .expect("weight overflow");
            (set, weight, vec![tl, tr])
        });
        let mut best: Option<(VertexSet, Weight)> = None;
        let mut children = Vec::new();
        for (set, weight, traces) in results {
            children.extend(traces);
            if better(weight, &set, &best) {
                best = Some((set, weight));
            }
        }
        let (set, weight) = best.expect("empty guess always present");
        (
            set,
            weight,
            Trace::Case1 {
                separator: lift(sep),
                branches,
                children,
            },
        )
    }

    /// Case 2 over the induced subgraph `sub`: guess `I_X`, restrict the
    /// decomposition, reduce through matching with recursive particle
    /// solutions.
    fn case2_rec(
        &self,
        sub: &Graph,
        map: &[usize],
        provider: String,
        x: &VertexSet,
        esd: &Esd,
        skipped: Vec<(String, String)>,
    ) -> (VertexSet, Weight, Trace) {
        let kept: Vec<usize> = VertexSet::full(sub.n()).difference(x).iter().collect();
        let x_vertices: Vec<usize> = x.iter().collect();
        let guesses = Self::subsets_of(&x_vertices, sub);
        let branches = guesses.len() as u32;
        let results = self.run_branches(guesses, |i_x| {
            let banned = sub.open_neighborhood(&i_x);
            let removed_host: VertexSet = banned
                .iter()
                .filter_map(|v| kept.binary_search(&v).ok())
                .collect();
            let restricted = esd
                .restrict(&removed_host)
                .expect("restriction of a valid decomposition stays valid");
            let kept2: Vec<usize> = kept
                .iter()
                .copied()
                .filter(|v| !banned.contains(*v))
                .collect();
            let mut to_restricted = vec![usize::MAX; sub.n()];
            for (i, &v) in kept2.iter().enumerate() {
                to_restricted[v] = i;
            }
            let child_traces = Mutex::new(Vec::new());
            let mut particle_solver = |_h: &Graph, particle: &crate::esd::Particle| {
                let in_input: VertexSet = particle.set.iter().map(|i| map[kept2[i]]).collect();
                let (sol, _, t) = self.solve_rec(&in_input);
                child_traces.lock().unwrap().push(t);
                // Map the input-id solution back to restricted-host ids.
                let mut back = VertexSet::new();
                for v in sol.iter() {
                    let sub_id = map.binary_search(&v).expect("solution within subgraph");
                    back.insert(to_restricted[sub_id]);
                }
                back
            };
            let (set_restricted, w) = reduction::reduce_mwis(&restricted, &mut particle_solver)
                .expect("reduction on a validated decomposition");
            let lifted_sub: VertexSet = set_restricted.iter().map(|i| kept2[i]).collect();
            let set: VertexSet = i_x.union(&lifted_sub).iter().map(|v| map[v]).collect();
            let weight = sub
                .set_weight(&i_x)
                .checked_add(w)
                .expect("weight overflow");
            (set, weight, child_traces.into_inner().unwrap())
        });
        let mut best: Option<(VertexSet, Weight)> = None;
        let mut children = Vec::new();
        for (set, weight, traces) in results {
            children.extend(traces);
            if better(weight, &set, &best) {
                best = Some((set, weight));
            }
        }
        let (set, weight) = best.expect("empty guess always present");
        (
            set,
            weight,
            Trace::Case2 {
                provider,
                x: x.iter().map(|v| map[v]).collect(),
                branches,
                children,
                skipped,
            },
        )
    }
}

/// Solves MWIS exactly on any finite graph with nonnegative integer weights.
///
/// Control flow per connected component: brute force at or below the base
/// case size, separator branching when a small balanced separator exists,
/// the matching reduction when a provider supplies a decomposition with
/// small atoms, and otherwise an exhaustive fallback flagged in the trace.
pub fn solve_mwis(g: &Graph, cfg: &SolverConfig) -> Result<Solution, SolverError> {
    let max_degree = g.max_degree();
    let delta = match cfg.delta {
        Some(d) if d < max_degree => {
            return Err(SolverError::Config(format!(
                "configured delta = {d} below the input maximum degree {max_degree}"
            )));
        }
        Some(d) => d.max(1),
        None => max_degree.max(1),
    };
    let c = cfg
        .c
        .unwrap_or_else(|| Ratio::new(10 * delta as u64 - 1, 10 * delta as u64));
    if c < Ratio::new(1, 2) || c >= Ratio::new(1, 1) {
        return Err(SolverError::Config(format!(
            "balance parameter c = {c} outside [1/2, 1)"
        )));
    }
    if cfg.threads == 0 {
        return Err(SolverError::Config("threads must be at least 1".into()));
    }
    let providers = providers::build_providers(&cfg.providers)
        .map_err(|e| SolverError::EsdFile(e.to_string()))?;
    let ctx = Ctx {
        g,
        c,
        delta,
        d_max: cfg.d_max,
        z_max: cfg.z_max,
        base_case_n: cfg.base_case_n,
        threads: cfg.threads,
        providers,
        memo_capacity: cfg.memo_capacity,
        memo: Mutex::new(HashMap::new()),
        nodes: AtomicU64::new(0),
        base_cases: AtomicU64::new(0),
        case1: AtomicU64::new(0),
        case2: AtomicU64::new(0),
        fallbacks: AtomicU64::new(0),
        memo_hits: AtomicU64::new(0),
    };
    let full = VertexSet::full(g.n());
    let (set, weight, trace) = if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| SolverError::Config(e.to_string()))?;
        pool.install(|| ctx.solve_rec(&full))
    } else {
        ctx.solve_rec(&full)
    };
    debug_assert!(g.is_independent(&set));
    debug_assert_eq!(g.set_weight(&set), weight);
    Ok(Solution {
        set,
        weight,
        stats: SolveStats {
            nodes: ctx.nodes.load(Ordering::Relaxed),
            base_cases: ctx.base_cases.load(Ordering::Relaxed),
            case1: ctx.case1.load(Ordering::Relaxed),
            case2: ctx.case2.load(Ordering::Relaxed),
            fallbacks: ctx.fallbacks.load(Ordering::Relaxed),
            memo_hits: ctx.memo_hits.load(Ordering::Relaxed),
        },
        trace: cfg.collect_trace.then_some(trace),
    })
}

//! Exhaustive, pruned enumeration of sets satisfying a domination predicate,
//! with optional imposed translation symmetry and isomorph rejection.
//!
//! The solver runs a depth-first search over in/out vertex decisions with
//! interval propagation on dominator counts and, for clique-component
//! predicates, an incremental union-find over the chosen vertices with a
//! rollback trail.

use crate::domination::{classify, components, Shape, VertexSet};
use crate::error::{Error, Result};
use crate::lattice::{CanonGroup, Coord, TorusGraph, TorusSpec, VertexId};
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

/// Domination predicate the search enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Predicate {
    Pds,
    PerfectCode,
    Spds,
    Qpds,
    KQpds(u8),
}

impl Predicate {
    /// Allowed dominator-count interval for vertices outside S.
    fn interval(self) -> (u8, u8) {
        match self {
            Predicate::Pds | Predicate::PerfectCode => (1, 1),
            Predicate::Spds => (2, 2),
            Predicate::Qpds | Predicate::KQpds(_) => (1, 2),
        }
    }

    pub fn name(self) -> String {
        match self {
            Predicate::Pds => "pds".into(),
            Predicate::PerfectCode => "perfect-code".into(),
            Predicate::Spds => "spds".into(),
            Predicate::Qpds => "qpds".into(),
            Predicate::KQpds(nu) => format!("k-qpds({nu})"),
        }
    }

    /// True when the finished set satisfies this predicate.
    pub fn holds(self, g: &TorusGraph, s: &VertexSet) -> bool {
        let report = classify(g, s);
        match self {
            Predicate::Pds => report.is_pds,
            Predicate::PerfectCode => report.is_perfect_code,
            Predicate::Spds => report.is_spds,
            Predicate::Qpds => report.is_qpds,
            Predicate::KQpds(nu) => report.h_qpds_nu == Some(nu),
        }
    }
}

/// Restriction on the component shapes of accepted solutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum ShapeFilter {
    #[default]
    None,
    /// Every component is an isolated vertex.
    AllK1,
    /// Every component is a cycle.
    AllCycles,
}

impl ShapeFilter {
    fn accepts(self, g: &TorusGraph, s: &VertexSet) -> bool {
        match self {
            ShapeFilter::None => true,
            ShapeFilter::AllK1 => components(g, s).iter().all(|c| c.shape == Shape::K1),
            // K3 counts as a cycle: a triangle is the 3-cycle.
            ShapeFilter::AllCycles => components(g, s)
                .iter()
                .all(|c| matches!(c.shape, Shape::Cycle(_) | Shape::K3)),
        }
    }
}

/// Node and wall-clock limits for one search run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_seconds: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_seconds: 300,
        }
    }
}

/// Translation sublattice imposed on solutions: every solution is a union of
/// orbits of the subgroup the two vectors generate on the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImposedSymmetry {
    pub u: Coord,
    pub v: Coord,
}

/// One enumeration task.
#[derive(Debug, Clone)]
pub struct SearchProblem {
    pub spec: TorusSpec,
    pub predicate: Predicate,
    pub imposed_symmetry: Option<ImposedSymmetry>,
    pub limit: Option<usize>,
    pub canonicalize: bool,
    pub shape_filter: ShapeFilter,
    pub budget: Budget,
}

impl SearchProblem {
    pub fn new(spec: TorusSpec, predicate: Predicate) -> Self {
        SearchProblem {
            spec,
            predicate,
            imposed_symmetry: None,
            limit: None,
            canonicalize: false,
            shape_filter: ShapeFilter::None,
            budget: Budget::default(),
        }
    }
}

/// Outcome of one enumeration run.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub solutions: Vec<VertexSet>,
    pub total_count: u64,
    /// True when the whole space was covered: total_count is then exact
    /// (counting translation orbits when canonicalize was set).
    pub exhausted: bool,
    /// True when the node or time budget stopped the run.
    pub budget_hit: bool,
    pub nodes_expanded: u64,
    pub budget: Budget,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Tri-state existence verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Undecided,
    In,
    Out,
}

enum Change {
    Decided(VertexId),
    /// child root attached under a new root; detaching restores it
    UfAttach { child: VertexId },
    /// root statistics snapshot
    UfStats {
        root: VertexId,
        size: u32,
        edges: u32,
        boundary: u32,
    },
}

struct Solver<'g> {
    g: &'g TorusGraph,
    predicate: Predicate,
    lo: u8,
    hi: u8,
    state: Vec<State>,
    /// decided-In neighbor count per vertex
    cnt_in: Vec<u8>,
    /// undecided neighbor count per vertex
    und: Vec<u8>,
    // orbit partition induced by the imposed symmetry; singletons when absent
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<VertexId>>,
    // union-find over In vertices, used by KQpds only (nu = 0 otherwise)
    nu: u32,
    parent: Vec<VertexId>,
    uf_size: Vec<u32>,
    uf_edges: Vec<u32>,
    uf_boundary: Vec<u32>,
    trail: Vec<Change>,
    nodes: u64,
    deadline: Instant,
    max_nodes: u64,
    budget_hit: bool,
}

impl<'g> Solver<'g> {
    fn new(g: &'g TorusGraph, p: &SearchProblem) -> Result<Self> {
        let count = g.vertex_count();
        let (lo, hi) = p.predicate.interval();
        let nu = match p.predicate {
            Predicate::KQpds(nu) => {
                if !(1..=3).contains(&nu) {
                    return Err(Error::InvalidParameter(format!(
                        "clique order {nu} outside 1..=3"
                    )));
                }
                nu as u32
            }
            _ => 0,
        };
        let (orbit_of, orbits) = orbit_partition(g.spec(), p.imposed_symmetry);
        let deadline = Instant::now()
            .checked_add(Duration::from_secs(p.budget.max_seconds))
            .unwrap_or_else(|| Instant::now() + Duration::from_secs(86_400 * 365));
        Ok(Solver {
            g,
            predicate: p.predicate,
            lo,
            hi,
            state: vec![State::Undecided; count],
            cnt_in: vec![0; count],
            und: (0..count).map(|v| g.neighbors(v).len() as u8).collect(),
            orbit_of,
            orbits,
            nu,
            parent: (0..count).collect(),
            uf_size: vec![1; count],
            uf_edges: vec![0; count],
            uf_boundary: vec![0; count],
            trail: Vec::new(),
            nodes: 0,
            deadline,
            max_nodes: p.budget.max_nodes,
            budget_hit: false,
        })
    }

    fn find(&self, mut v: VertexId) -> VertexId {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn required_edges(&self) -> u32 {
        self.nu * (self.nu - 1) / 2
    }

    /// Decide every vertex of v's orbit the same way; false on conflict.
    fn decide_orbit(&mut self, v: VertexId, put_in: bool) -> bool {
        let idx = self.orbit_of[v];
        for k in 0..self.orbits[idx].len() {
            let w = self.orbits[idx][k];
            if !self.decide(w, put_in) {
                return false;
            }
        }
        true
    }

    fn decide(&mut self, v: VertexId, put_in: bool) -> bool {
        match self.state[v] {
            State::In => return put_in,
            State::Out => return !put_in,
            State::Undecided => {}
        }
        self.state[v] = if put_in { State::In } else { State::Out };
        self.trail.push(Change::Decided(v));
        let nbrs = self.g.neighbors(v);
        for &w in nbrs {
            self.und[w] -= 1;
            if put_in {
                self.cnt_in[w] += 1;
            }
        }
        let ok = if put_in { self.on_in(v) } else { self.on_out(v) };
        if !ok {
            return false;
        }
        for &w in nbrs {
            if !self.check_vertex(w) {
                return false;
            }
        }
        self.check_vertex(v)
    }

    fn on_in(&mut self, v: VertexId) -> bool {
        if self.predicate == Predicate::PerfectCode {
            // code vertices are pairwise nonadjacent
            let nbrs = self.g.neighbors(v);
            for &w in nbrs {
                match self.state[w] {
                    State::In => return false,
                    State::Undecided => {
                        if !self.decide_orbit(w, false) {
                            return false;
                        }
                    }
                    State::Out => {}
                }
            }
        }
        if self.nu > 0 {
            return self.uf_join(v);
        }
        true
    }

    /// Merge v with the components of its In neighbors, keeping exact size,
    /// induced-edge, and open-boundary-slot counts per component.
    fn uf_join(&mut self, v: VertexId) -> bool {
        let nbrs = self.g.neighbors(v);
        let mut in_edges = 0u32;
        let mut roots: Vec<VertexId> = Vec::new();
        for &w in nbrs {
            if self.state[w] == State::In {
                in_edges += 1;
                let r = self.find(w);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        let mut size = 1u32;
        let mut edges = in_edges;
        // slots (u, w) with u in the merged component and w undecided: v's own
        // undecided neighbors plus the old slots, minus the edges into v that
        // just closed
        let mut boundary = self.und[v] as u32;
        for &r in &roots {
            size += self.uf_size[r];
            edges += self.uf_edges[r];
            boundary += self.uf_boundary[r];
        }
        boundary -= in_edges;
        self.trail.push(Change::UfStats {
            root: v,
            size: self.uf_size[v],
            edges: self.uf_edges[v],
            boundary: self.uf_boundary[v],
        });
        for &r in &roots {
            self.trail.push(Change::UfAttach { child: r });
            self.parent[r] = v;
        }
        self.uf_size[v] = size;
        self.uf_edges[v] = edges;
        self.uf_boundary[v] = boundary;
        if size > self.nu {
            return false;
        }
        // a component that reached full size has its induced edges fixed
        if size == self.nu && edges != self.required_edges() {
            return false;
        }
        // a component no neighbor of which is undecided can never grow
        if boundary == 0 && (size != self.nu || edges != self.required_edges()) {
            return false;
        }
        true
    }

    fn on_out(&mut self, v: VertexId) -> bool {
        if self.nu == 0 {
            return true;
        }
        let nbrs = self.g.neighbors(v);
        for &w in nbrs {
            if self.state[w] != State::In {
                continue;
            }
            let r = self.find(w);
            self.trail.push(Change::UfStats {
                root: r,
                size: self.uf_size[r],
                edges: self.uf_edges[r],
                boundary: self.uf_boundary[r],
            });
            self.uf_boundary[r] -= 1;
            if self.uf_boundary[r] == 0
                && (self.uf_size[r] != self.nu || self.uf_edges[r] != self.required_edges())
            {
                return false;
            }
        }
        true
    }

    /// Interval checks and forced moves around one vertex.
    fn check_vertex(&mut self, v: VertexId) -> bool {
        match self.state[v] {
            State::In => true,
            State::Out => {
                if self.cnt_in[v] > self.hi
                    || (self.cnt_in[v] as u32 + self.und[v] as u32) < self.lo as u32
                {
                    return false;
                }
                if self.cnt_in[v] == self.hi && self.und[v] > 0 {
                    // saturated: every remaining neighbor must stay out
                    let nbrs = self.g.neighbors(v);
                    for &w in nbrs {
                        if self.state[w] == State::Undecided && !self.decide_orbit(w, false) {
                            return false;
                        }
                    }
                }
                if self.cnt_in[v] < self.lo
                    && self.cnt_in[v] as u32 + self.und[v] as u32 == self.lo as u32
                {
                    // every remaining neighbor is needed as a dominator
                    let nbrs = self.g.neighbors(v);
                    for &w in nbrs {
                        if self.state[w] == State::Undecided && !self.decide_orbit(w, true) {
                            return false;
                        }
                    }
                }
                true
            }
            State::Undecided => {
                // v can no longer end up outside S
                if self.cnt_in[v] > self.hi
                    || (self.cnt_in[v] as u32 + self.und[v] as u32) < self.lo as u32
                {
                    return self.decide_orbit(v, true);
                }
                true
            }
        }
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Change::Decided(v) => {
                    let was_in = self.state[v] == State::In;
                    self.state[v] = State::Undecided;
                    let nbrs = self.g.neighbors(v);
                    for &w in nbrs {
                        self.und[w] += 1;
                        if was_in {
                            self.cnt_in[w] -= 1;
                        }
                    }
                }
                Change::UfAttach { child } => {
                    self.parent[child] = child;
                }
                Change::UfStats {
                    root,
                    size,
                    edges,
                    boundary,
                } => {
                    self.uf_size[root] = size;
                    self.uf_edges[root] = edges;
                    self.uf_boundary[root] = boundary;
                }
            }
        }
    }

    /// Smallest-id undecided vertex adjacent to a decided one, else the
    /// smallest undecided vertex.
    fn pick_variable(&self) -> Option<VertexId> {
        let mut first_undecided = None;
        for v in 0..self.g.vertex_count() {
            if self.state[v] != State::Undecided {
                continue;
            }
            if first_undecided.is_none() {
                first_undecided = Some(v);
            }
            if self
                .g
                .neighbors(v)
                .iter()
                .any(|&w| self.state[w] != State::Undecided)
            {
                return Some(v);
            }
        }
        first_undecided
    }

    /// Returns false when the search was cut short (budget or emit stop).
    fn run(&mut self, emit: &mut dyn FnMut(&VertexSet) -> bool) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes % 4096 == 0 && Instant::now() >= self.deadline)
        {
            self.budget_hit = true;
            return false;
        }
        let Some(v) = self.pick_variable() else {
            let s = VertexSet::from_ids(
                self.g.spec(),
                (0..self.g.vertex_count()).filter(|&v| self.state[v] == State::In),
            );
            assert!(
                self.predicate.holds(self.g, &s),
                "solver emitted a set failing its own predicate"
            );
            return emit(&s);
        };
        for put_in in [true, false] {
            let mark = self.trail.len();
            if self.decide_orbit(v, put_in) && !self.run(emit) {
                self.rollback(mark);
                return false;
            }
            self.rollback(mark);
        }
        true
    }
}

/// Orbit partition of the vertex set under the imposed translation subgroup;
/// singleton orbits when no symmetry is imposed.
fn orbit_partition(
    spec: TorusSpec,
    sym: Option<ImposedSymmetry>,
) -> (Vec<usize>, Vec<Vec<VertexId>>) {
    let count = spec.vertex_count();
    let Some(sym) = sym else {
        return ((0..count).collect(), (0..count).map(|v| vec![v]).collect());
    };
    let mut subgroup: BTreeSet<VertexId> = BTreeSet::new();
    let mut stack = vec![spec.project(Coord::new(0, 0))];
    while let Some(p) = stack.pop() {
        if !subgroup.insert(p) {
            continue;
        }
        let c = spec.coord_of(p);
        for d in [sym.u, sym.v] {
            stack.push(spec.project(c.add(d)));
        }
    }
    let shifts: Vec<Coord> = subgroup.iter().map(|&p| spec.coord_of(p)).collect();
    let mut orbit_of = vec![usize::MAX; count];
    let mut orbits = Vec::new();
    for v in 0..count {
        if orbit_of[v] != usize::MAX {
            continue;
        }
        let idx = orbits.len();
        let base = spec.coord_of(v);
        let mut members: Vec<VertexId> =
            shifts.iter().map(|&s| spec.project(base.add(s))).collect();
        members.sort_unstable();
        members.dedup();
        for &w in &members {
            orbit_of[w] = idx;
        }
        orbits.push(members);
    }
    (orbit_of, orbits)
}

/// Enumerate all solutions of the problem, subject to limit and budget.
pub fn enumerate(g: &TorusGraph, p: &SearchProblem) -> Result<SearchResult> {
    if g.spec() != p.spec {
        return Err(Error::InvalidParameter(
            "problem spec does not match graph".into(),
        ));
    }
    let start = Instant::now();
    let mut solver = Solver::new(g, p)?;
    let mut raw: Vec<VertexSet> = Vec::new();
    let mut canon: BTreeSet<VertexSet> = BTreeSet::new();
    let limit = p.limit.unwrap_or(usize::MAX);
    let mut limit_hit = false;
    let canonicalize = p.canonicalize;
    let shape_filter = p.shape_filter;
    let mut emit = |s: &VertexSet| -> bool {
        if !shape_filter.accepts(g, s) {
            return true;
        }
        let full = if canonicalize {
            let form = crate::lattice::canonical_form(s, g, CanonGroup::Translations)
                .expect("translation canonical form is total");
            canon.insert(form);
            canon.len() >= limit
        } else {
            raw.push(s.clone());
            raw.len() >= limit
        };
        if full {
            limit_hit = true;
            return false;
        }
        true
    };
    let completed = solver.run(&mut emit);
    let budget_hit = solver.budget_hit;
    let solutions: Vec<VertexSet> = if canonicalize {
        canon.into_iter().collect()
    } else {
        raw
    };
    Ok(SearchResult {
        total_count: solutions.len() as u64,
        exhausted: completed && !limit_hit && !budget_hit,
        budget_hit,
        nodes_expanded: solver.nodes,
        budget: p.budget,
        elapsed: start.elapsed(),
        solutions,
    })
}

/// Short-circuit existence test; the witness satisfies the predicate.
pub fn exists(g: &TorusGraph, p: &SearchProblem) -> Result<(Verdict, Option<VertexSet>)> {
    let mut q = p.clone();
    q.limit = Some(1);
    q.canonicalize = false;
    let r = enumerate(g, &q)?;
    if let Some(w) = r.solutions.into_iter().next() {
        return Ok((Verdict::Yes, Some(w)));
    }
    if r.exhausted {
        Ok((Verdict::No, None))
    } else {
        Ok((Verdict::Unknown, None))
    }
}

/// Existence verdicts over a rectangle of torus dimensions.
#[derive(Debug, Clone, Serialize)]
pub struct ExistenceTable {
    pub predicate: String,
    pub m_values: Vec<i64>,
    pub n_values: Vec<i64>,
    /// cells[i][j] is the verdict for (m_values[i], n_values[j])
    pub cells: Vec<Vec<Verdict>>,
}

impl ExistenceTable {
    pub fn verdict(&self, m: i64, n: i64) -> Option<Verdict> {
        let i = self.m_values.iter().position(|&x| x == m)?;
        let j = self.n_values.iter().position(|&x| x == n)?;
        Some(self.cells[i][j])
    }

    /// Aligned text grid; rows are m, columns n, cells Y/n/?.
    pub fn render(&self) -> String {
        let width = self
            .n_values
            .iter()
            .chain(self.m_values.iter())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        out.push_str(&" ".repeat(width + 1));
        for n in &self.n_values {
            out.push_str(&format!("{n:>width$} "));
        }
        out.push('\n');
        for (i, m) in self.m_values.iter().enumerate() {
            out.push_str(&format!("{m:>width$} "));
            for cell in &self.cells[i] {
                let ch = match cell {
                    Verdict::Yes => "Y",
                    Verdict::No => "n",
                    Verdict::Unknown => "?",
                };
                out.push_str(&format!("{ch:>width$} "));
            }
            out.push('\n');
        }
        out
    }
}

/// Existence verdict at every (m, n) in the given ranges.
pub fn existence_table(
    predicate: Predicate,
    m_values: &[i64],
    n_values: &[i64],
    budget: Budget,
    shape_filter: ShapeFilter,
) -> Result<ExistenceTable> {
    if m_values.is_empty() || n_values.is_empty() {
        return Err(Error::InvalidParameter("empty dimension range".into()));
    }
    let mut cells = Vec::with_capacity(m_values.len());
    for &m in m_values {
        let mut row = Vec::with_capacity(n_values.len());
        for &n in n_values {
            let spec = TorusSpec::new(m, n)?;
            let g = crate::lattice::build_torus(spec)?;
            let mut p = SearchProblem::new(spec, predicate);
            p.budget = budget;
            p.shape_filter = shape_filter;
            let (verdict, _) = exists(&g, &p)?;
            row.push(verdict);
        }
        cells.push(row);
    }
    Ok(ExistenceTable {
        predicate: predicate.name(),
        m_values: m_values.to_vec(),
        n_values: n_values.to_vec(),
        cells,
    })
}

/// Reference enumeration by filtering all 2^(mn) subsets; the independent
/// oracle for the pruned solver on tiny tori.
pub fn naive_enumerate(g: &TorusGraph, predicate: Predicate) -> Result<Vec<VertexSet>> {
    let count = g.vertex_count();
    if count > 25 {
        return Err(Error::InvalidParameter(format!(
            "naive enumeration capped at 25 vertices, got {count}"
        )));
    }
    let adj: Vec<u32> = (0..count)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &w| a | 1 << w))
        .collect();
    let (lo, hi) = predicate.interval();
    let mut out = Vec::new();
    for mask in 0u32..1u32 << count {
        let mut ok = true;
        for v in 0..count {
            if mask >> v & 1 == 1 {
                continue;
            }
            let d = (adj[v] & mask).count_ones() as u8;
            if d < lo || d > hi {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let s = VertexSet::from_ids(g.spec(), (0..count).filter(|&v| mask >> v & 1 == 1));
        let keep = match predicate {
            Predicate::Pds | Predicate::Spds | Predicate::Qpds => true,
            Predicate::PerfectCode => {
                !s.is_empty() && components(g, &s).iter().all(|c| c.shape == Shape::K1)
            }
            Predicate::KQpds(nu) => {
                let want = match nu {
                    1 => Shape::K1,
                    2 => Shape::K2,
                    3 => Shape::K3,
                    _ => return Err(Error::InvalidParameter("clique order".into())),
                };
                let comps = components(g, &s);
                !comps.is_empty() && comps.iter().all(|c| c.shape == want)
            }
        };
        if keep {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_torus;

    fn torus(m: i64, n: i64) -> TorusGraph {
        build_torus(TorusSpec::new(m, n).unwrap()).unwrap()
    }

    #[test]
    fn perfect_code_count_on_7_7() {
        let g = torus(7, 7);
        let r = enumerate(&g, &SearchProblem::new(g.spec(), Predicate::PerfectCode)).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.total_count, 14);
    }

    #[test]
    fn perfect_code_absent_on_7_8() {
        let g = torus(7, 8);
        let r = enumerate(&g, &SearchProblem::new(g.spec(), Predicate::PerfectCode)).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.total_count, 0);
    }

    #[test]
    fn perfect_code_orbits_on_7_7() {
        let g = torus(7, 7);
        let mut p = SearchProblem::new(g.spec(), Predicate::PerfectCode);
        p.canonicalize = true;
        let r = enumerate(&g, &p).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.total_count, 2);
    }

    #[test]
    fn k3_exists_iff_six_divides() {
        let g = torus(6, 6);
        let (v, w) = exists(&g, &SearchProblem::new(g.spec(), Predicate::KQpds(3))).unwrap();
        assert_eq!(v, Verdict::Yes);
        assert!(Predicate::KQpds(3).holds(&g, &w.unwrap()));

        let g = torus(6, 5);
        let (v, _) = exists(&g, &SearchProblem::new(g.spec(), Predicate::KQpds(3))).unwrap();
        assert_eq!(v, Verdict::No);
    }

    #[test]
    fn spds_shape_filters() {
        let g = torus(4, 4);
        let mut p = SearchProblem::new(g.spec(), Predicate::Spds);
        p.shape_filter = ShapeFilter::AllK1;
        let (v, _) = exists(&g, &p).unwrap();
        assert_eq!(v, Verdict::Yes);

        let g = torus(3, 4);
        let mut p = SearchProblem::new(g.spec(), Predicate::Spds);
        p.shape_filter = ShapeFilter::AllCycles;
        let (v, w) = exists(&g, &p).unwrap();
        assert_eq!(v, Verdict::Yes);
        let w = w.unwrap();
        assert!(components(&g, &w)
            .iter()
            .all(|c| matches!(c.shape, Shape::Cycle(_))));

        // on a 3-wide torus the full row wraps into a triangle, which is
        // still a cycle
        let g = torus(3, 3);
        let mut p = SearchProblem::new(g.spec(), Predicate::Spds);
        p.shape_filter = ShapeFilter::AllCycles;
        let (v, _) = exists(&g, &p).unwrap();
        assert_eq!(v, Verdict::Yes);
    }

    #[test]
    fn budget_flags_not_errors() {
        let g = torus(8, 8);
        let mut p = SearchProblem::new(g.spec(), Predicate::Qpds);
        p.budget = Budget {
            max_nodes: 50,
            max_seconds: 300,
        };
        let r = enumerate(&g, &p).unwrap();
        assert!(r.budget_hit);
        assert!(!r.exhausted);
    }

    #[test]
    fn limit_stops_without_budget_flag() {
        let g = torus(7, 7);
        let mut p = SearchProblem::new(g.spec(), Predicate::PerfectCode);
        p.limit = Some(3);
        let r = enumerate(&g, &p).unwrap();
        assert_eq!(r.total_count, 3);
        assert!(!r.exhausted);
        assert!(!r.budget_hit);
    }

    #[test]
    fn determinism() {
        let g = torus(6, 4);
        let p = SearchProblem::new(g.spec(), Predicate::Spds);
        let a = enumerate(&g, &p).unwrap();
        let b = enumerate(&g, &p).unwrap();
        assert_eq!(a.solutions, b.solutions);
        assert_eq!(a.nodes_expanded, b.nodes_expanded);
    }

    #[test]
    fn matches_naive_on_small_tori() {
        for (m, n) in [(3, 3), (3, 4), (4, 4), (3, 5)] {
            let g = torus(m, n);
            for pred in [
                Predicate::Pds,
                Predicate::PerfectCode,
                Predicate::Spds,
                Predicate::Qpds,
                Predicate::KQpds(2),
            ] {
                let fast = enumerate(&g, &SearchProblem::new(g.spec(), pred)).unwrap();
                assert!(fast.exhausted);
                let mut fast_ids: Vec<Vec<usize>> =
                    fast.solutions.iter().map(|s| s.ids()).collect();
                fast_ids.sort();
                let mut naive_ids: Vec<Vec<usize>> = naive_enumerate(&g, pred)
                    .unwrap()
                    .iter()
                    .map(|s| s.ids())
                    .collect();
                naive_ids.sort();
                assert_eq!(fast_ids, naive_ids, "mismatch for {pred:?} on ({m},{n})");
            }
        }
    }

    #[test]
    fn imposed_symmetry_solutions_are_invariant() {
        let g = torus(6, 6);
        let mut p = SearchProblem::new(g.spec(), Predicate::KQpds(3));
        p.imposed_symmetry = Some(ImposedSymmetry {
            u: Coord::new(4, -2),
            v: Coord::new(2, 2),
        });
        let r = enumerate(&g, &p).unwrap();
        assert!(r.exhausted);
        assert!(r.total_count > 0);
        for s in &r.solutions {
            assert_eq!(&s.translate(Coord::new(4, -2)), s);
            assert_eq!(&s.translate(Coord::new(2, 2)), s);
        }
    }
}

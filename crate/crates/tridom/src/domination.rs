//! Domination predicates and the structural statistics they quantify:
//! dominator counts, induced components, inter-component distance,
//! boundary holes, triangle census, partitions, and the minimum-distance
//! graph of a perfect code.

use crate::error::{Error, Result};
use crate::lattice::{Coord, TorusGraph, TorusSpec, VertexId};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, VecDeque};

/// Dense vertex subset of a torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    spec: TorusSpec,
    bits: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn empty(spec: TorusSpec) -> Self {
        let words = (spec.vertex_count() + 63) / 64;
        VertexSet {
            spec,
            bits: vec![0; words],
            len: 0,
        }
    }

    pub fn from_ids(spec: TorusSpec, ids: impl IntoIterator<Item = VertexId>) -> Self {
        let mut s = VertexSet::empty(spec);
        for v in ids {
            s.insert(v);
        }
        s
    }

    pub fn from_coords(spec: TorusSpec, coords: impl IntoIterator<Item = Coord>) -> Self {
        let mut s = VertexSet::empty(spec);
        for c in coords {
            s.insert(spec.project(c));
        }
        s
    }

    pub fn spec(&self) -> TorusSpec {
        self.spec
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        debug_assert!(v < self.spec.vertex_count());
        let fresh = !self.contains(v);
        if fresh {
            self.bits[v / 64] |= 1 << (v % 64);
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        let had = self.contains(v);
        if had {
            self.bits[v / 64] &= !(1 << (v % 64));
            self.len -= 1;
        }
        had
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Members in increasing id order.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    pub fn ids(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    pub fn coords(&self) -> Vec<Coord> {
        self.iter().map(|v| self.spec.coord_of(v)).collect()
    }

    /// Translate the whole set by a lattice vector.
    pub fn translate(&self, by: Coord) -> VertexSet {
        let mut out = VertexSet::empty(self.spec);
        for v in self.iter() {
            out.insert(self.spec.project(self.spec.coord_of(v).add(by)));
        }
        out
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("VertexSet", 3)?;
        st.serialize_field("m", &self.spec.m)?;
        st.serialize_field("n", &self.spec.n)?;
        let coords: Vec<[i64; 2]> = self.coords().iter().map(|c| [c.x1, c.x2]).collect();
        st.serialize_field("vertices", &coords)?;
        st.end()
    }
}

/// Isomorphism class of an induced component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    K1,
    K2,
    K3,
    Path(usize),
    Cycle(usize),
    Other,
}

/// One connected component of the induced subgraph on S.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub vertices: Vec<VertexId>,
    pub shape: Shape,
}

/// Verification summary for one set on one torus.
#[derive(Debug, Clone, Serialize)]
pub struct DominationReport {
    /// Dominator count per vertex id; None marks members of S.
    pub counts: Vec<Option<u8>>,
    pub components: Vec<ComponentInfo>,
    /// Minimum inter-component distance; None when fewer than two components.
    pub delta: Option<u32>,
    pub is_pds: bool,
    pub is_proper: bool,
    pub is_perfect_code: bool,
    pub is_qpds: bool,
    pub is_spds: bool,
    /// Set when the set is a QPDS whose components all share one clique shape.
    pub h_qpds_nu: Option<u8>,
}

/// Number of S-neighbors for every vertex outside S.
pub fn dominator_counts(g: &TorusGraph, s: &VertexSet) -> BTreeMap<VertexId, u8> {
    let mut out = BTreeMap::new();
    for v in 0..g.vertex_count() {
        if s.contains(v) {
            continue;
        }
        let d = g.neighbors(v).iter().filter(|&&w| s.contains(w)).count() as u8;
        out.insert(v, d);
    }
    out
}

fn component_shape(g: &TorusGraph, vertices: &[VertexId]) -> Shape {
    let k = vertices.len();
    let edges = {
        let mut e = 0;
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if g.are_adjacent(u, v) {
                    e += 1;
                }
            }
        }
        e
    };
    let degrees: Vec<usize> = vertices
        .iter()
        .map(|&u| vertices.iter().filter(|&&v| v != u && g.are_adjacent(u, v)).count())
        .collect();
    match (k, edges) {
        (1, 0) => Shape::K1,
        (2, 1) => Shape::K2,
        (3, 3) => Shape::K3,
        _ if edges == k - 1 && degrees.iter().all(|&d| d <= 2) => Shape::Path(k),
        _ if edges == k && degrees.iter().all(|&d| d == 2) => Shape::Cycle(k),
        _ => Shape::Other,
    }
}

/// Connected components of the induced subgraph on S, each with its shape.
pub fn components(g: &TorusGraph, s: &VertexSet) -> Vec<ComponentInfo> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for v in s.iter() {
        if seen[v] {
            continue;
        }
        let mut comp = vec![v];
        seen[v] = true;
        let mut q = VecDeque::from([v]);
        while let Some(u) = q.pop_front() {
            for &w in g.neighbors(u) {
                if s.contains(w) && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    q.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        let shape = component_shape(g, &comp);
        out.push(ComponentInfo {
            vertices: comp,
            shape,
        });
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

fn min_distance_between_components(g: &TorusGraph, comps: &[ComponentInfo]) -> Option<u32> {
    if comps.len() < 2 {
        return None;
    }
    // Voronoi-style multi-source BFS: min inter-component distance equals the
    // minimum of d(u) + d(v) + 1 over edges whose endpoints grew from
    // different components.
    let count = g.vertex_count();
    let mut owner = vec![usize::MAX; count];
    let mut dist = vec![u32::MAX; count];
    let mut q = VecDeque::new();
    for (i, comp) in comps.iter().enumerate() {
        for &v in &comp.vertices {
            owner[v] = i;
            dist[v] = 0;
            q.push_back(v);
        }
    }
    let mut best = u32::MAX;
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if owner[w] == usize::MAX {
                owner[w] = owner[u];
                dist[w] = dist[u] + 1;
                q.push_back(w);
            } else if owner[w] != owner[u] {
                best = best.min(dist[u] + dist[w] + 1);
            }
        }
    }
    Some(best)
}

/// Full classification of a set: flags, components, delta.
pub fn classify(g: &TorusGraph, s: &VertexSet) -> DominationReport {
    let count = g.vertex_count();
    let mut counts = vec![None; count];
    let mut all_one = true;
    let mut all_two = true;
    let mut all_one_or_two = true;
    for v in 0..count {
        if s.contains(v) {
            continue;
        }
        let d = g.neighbors(v).iter().filter(|&&w| s.contains(w)).count() as u8;
        counts[v] = Some(d);
        all_one &= d == 1;
        all_two &= d == 2;
        all_one_or_two &= d == 1 || d == 2;
    }
    let comps = components(g, s);
    let is_pds = all_one;
    let is_qpds = all_one_or_two;
    let is_spds = all_two;
    let all_k1 = comps.iter().all(|c| c.shape == Shape::K1);
    let is_perfect_code = is_pds && !comps.is_empty() && all_k1;
    let h_qpds_nu = if is_qpds && !comps.is_empty() {
        let nu = match comps[0].shape {
            Shape::K1 => Some(1),
            Shape::K2 => Some(2),
            Shape::K3 => Some(3),
            _ => None,
        };
        nu.filter(|_| comps.iter().all(|c| c.shape == comps[0].shape))
    } else {
        None
    };
    let delta = min_distance_between_components(g, &comps);
    DominationReport {
        counts,
        delta,
        is_pds,
        is_proper: s.len() < count,
        is_perfect_code,
        is_qpds,
        is_spds,
        h_qpds_nu,
        components: comps,
    }
}

/// Minimum graph distance between vertices of distinct components;
/// None means a single component (infinite).
pub fn min_component_distance(g: &TorusGraph, s: &VertexSet) -> Result<Option<u32>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let comps = components(g, s);
    Ok(min_distance_between_components(g, &comps))
}

/// Length of the induced cycle of non-members surrounding one component:
/// 6, 8, 9 for the canonical K1/K2/K3 patterns.
pub fn boundary_hole_length(g: &TorusGraph, s: &VertexSet, comp: &ComponentInfo) -> Result<usize> {
    let mut boundary: Vec<VertexId> = Vec::new();
    for &v in &comp.vertices {
        for &w in g.neighbors(v) {
            if !s.contains(w) && !boundary.contains(&w) {
                boundary.push(w);
            }
        }
    }
    boundary.sort_unstable();
    if boundary.len() < 3 {
        return Err(Error::NotAHole);
    }
    // every boundary vertex must see exactly two others; one BFS checks connectivity
    for &v in &boundary {
        let deg = g
            .neighbors(v)
            .iter()
            .filter(|w| boundary.binary_search(w).is_ok())
            .count();
        if deg != 2 {
            return Err(Error::NotAHole);
        }
    }
    let mut seen = vec![boundary[0]];
    let mut q = VecDeque::from([boundary[0]]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if boundary.binary_search(&w).is_ok() && !seen.contains(&w) {
                seen.push(w);
                q.push_back(w);
            }
        }
    }
    if seen.len() != boundary.len() {
        return Err(Error::NotAHole);
    }
    Ok(boundary.len())
}

/// Triangular faces all of whose corners lie outside S and have pairwise
/// distinct dominators; such faces share no edge with the hexagonal holes
/// around code vertices. Requires a 1-perfect code.
pub fn z3_triangles(g: &TorusGraph, s: &VertexSet) -> Result<Vec<[VertexId; 3]>> {
    let report = classify(g, s);
    if !report.is_perfect_code {
        return Err(Error::NotAPerfectCode);
    }
    // unique dominator per outside vertex
    let mut dominator = vec![usize::MAX; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if s.contains(v) {
            continue;
        }
        for &w in g.neighbors(v) {
            if s.contains(w) {
                dominator[v] = w;
            }
        }
    }
    let mut out = Vec::new();
    for face in g.faces() {
        if face.iter().any(|&v| s.contains(v)) {
            continue;
        }
        let d: Vec<usize> = face.iter().map(|&v| dominator[v]).collect();
        if d[0] != d[1] && d[0] != d[2] && d[1] != d[2] {
            out.push(face);
        }
    }
    Ok(out)
}

/// True when the parts are pairwise disjoint, cover every vertex, and each
/// satisfies the predicate on its classification report.
pub fn check_partition(
    g: &TorusGraph,
    parts: &[VertexSet],
    predicate: impl Fn(&DominationReport) -> bool,
) -> bool {
    let mut covered = vec![false; g.vertex_count()];
    for part in parts {
        for v in part.iter() {
            if covered[v] {
                return false;
            }
            covered[v] = true;
        }
    }
    if !covered.iter().all(|&c| c) {
        return false;
    }
    parts.iter().all(|part| predicate(&classify(g, part)))
}

/// Graph on the code vertices joining pairs at the minimum pairwise distance.
#[derive(Debug, Clone, Serialize)]
pub struct MinDistanceGraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
    pub min_distance: u32,
}

impl MinDistanceGraph {
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.vertices.iter().all(|&v| self.degree(v) == k)
    }
}

/// Minimum-distance graph of a 1-perfect code.
pub fn min_distance_graph(g: &TorusGraph, s: &VertexSet) -> Result<MinDistanceGraph> {
    let report = classify(g, s);
    if !report.is_perfect_code {
        return Err(Error::NotAPerfectCode);
    }
    if s.len() < 2 {
        return Err(Error::SingletonSet);
    }
    let vertices = s.ids();
    // BFS from each code vertex
    let mut pair_dist: BTreeMap<(VertexId, VertexId), u32> = BTreeMap::new();
    for &src in &vertices {
        let mut dist = vec![u32::MAX; g.vertex_count()];
        dist[src] = 0;
        let mut q = VecDeque::from([src]);
        while let Some(u) = q.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        for &dst in &vertices {
            if src < dst {
                pair_dist.insert((src, dst), dist[dst]);
            }
        }
    }
    let min_distance = *pair_dist.values().min().expect("at least one pair");
    let edges: Vec<(VertexId, VertexId)> = pair_dist
        .iter()
        .filter(|&(_, &d)| d == min_distance)
        .map(|(&p, _)| p)
        .collect();
    Ok(MinDistanceGraph {
        vertices,
        edges,
        min_distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_torus;

    fn torus(m: i64, n: i64) -> TorusGraph {
        build_torus(TorusSpec::new(m, n).unwrap()).unwrap()
    }

    #[test]
    fn empty_set_counts_zero() {
        let g = torus(7, 7);
        let s = VertexSet::empty(g.spec());
        let counts = dominator_counts(&g, &s);
        assert_eq!(counts.len(), 49);
        assert!(counts.values().all(|&d| d == 0));
        let report = classify(&g, &s);
        assert!(!report.is_pds && !report.is_qpds && !report.is_spds);
    }

    #[test]
    fn full_row_counts_two() {
        let g = torus(5, 3);
        let s = VertexSet::from_coords(
            g.spec(),
            (0..5).map(|a| Coord::new(a, 0)),
        );
        let counts = dominator_counts(&g, &s);
        assert!(counts.values().all(|&d| d == 2));
    }

    #[test]
    fn whole_vertex_set_is_improper_pds() {
        let g = torus(7, 7);
        let s = VertexSet::from_ids(g.spec(), 0..49);
        let report = classify(&g, &s);
        assert!(report.is_pds);
        assert!(!report.is_proper);
    }

    #[test]
    fn vertex_set_iteration_order() {
        let g = torus(4, 4);
        let s = VertexSet::from_ids(g.spec(), [7, 2, 15, 2]);
        assert_eq!(s.ids(), vec![2, 7, 15]);
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn single_component_has_no_delta() {
        let g = torus(5, 5);
        let mut s = VertexSet::empty(g.spec());
        s.insert(0);
        assert_eq!(min_component_distance(&g, &s).unwrap(), None);
        let e = VertexSet::empty(g.spec());
        assert!(matches!(min_component_distance(&g, &e), Err(Error::EmptySet)));
    }

    #[test]
    fn shapes_are_recognized() {
        let g = torus(6, 6);
        // K2 and a 3-path
        let s = VertexSet::from_coords(
            g.spec(),
            [Coord::new(0, 0), Coord::new(1, 0)],
        );
        let comps = components(&g, &s);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].shape, Shape::K2);

        let s3 = VertexSet::from_coords(
            g.spec(),
            [Coord::new(0, 0), Coord::new(1, 0), Coord::new(0, 1)],
        );
        let comps = components(&g, &s3);
        assert_eq!(comps[0].shape, Shape::K3);

        let path = VertexSet::from_coords(
            g.spec(),
            [Coord::new(0, 0), Coord::new(1, 0), Coord::new(2, 0)],
        );
        let comps = components(&g, &path);
        assert_eq!(comps[0].shape, Shape::Path(3));

        let row: VertexSet = VertexSet::from_coords(g.spec(), (0..6).map(|a| Coord::new(a, 0)));
        let comps = components(&g, &row);
        assert_eq!(comps[0].shape, Shape::Cycle(6));
    }

    #[test]
    fn flag_consistency_random_sets() {
        let g = torus(5, 4);
        // deterministic pseudo-random masks
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let mask = state;
            let s = VertexSet::from_ids(
                g.spec(),
                (0..20).filter(|&v| mask >> v & 1 == 1),
            );
            let r = classify(&g, &s);
            if r.is_spds {
                assert!(r.is_qpds);
            }
            if r.is_perfect_code {
                assert!(r.is_pds && r.is_qpds);
            }
            if r.is_pds && r.is_spds {
                assert_eq!(s.len(), 20);
            }
            // recount naively
            for (v, c) in r.counts.iter().enumerate() {
                match c {
                    None => assert!(s.contains(v)),
                    Some(d) => {
                        let naive =
                            g.neighbors(v).iter().filter(|&&w| s.contains(w)).count() as u8;
                        assert_eq!(*d, naive);
                    }
                }
            }
        }
    }

    #[test]
    fn translation_invariance_of_classify() {
        let g = torus(6, 5);
        let s = VertexSet::from_coords(
            g.spec(),
            [Coord::new(0, 0), Coord::new(1, 0), Coord::new(3, 2), Coord::new(4, 2)],
        );
        let moved = s.translate(Coord::new(2, 3));
        let a = classify(&g, &s);
        let b = classify(&g, &moved);
        assert_eq!(a.is_pds, b.is_pds);
        assert_eq!(a.is_qpds, b.is_qpds);
        assert_eq!(a.is_spds, b.is_spds);
        assert_eq!(a.delta, b.delta);
        let mut sa: Vec<Shape> = a.components.iter().map(|c| c.shape).collect();
        let mut sb: Vec<Shape> = b.components.iter().map(|c| c.shape).collect();
        sa.sort_by_key(|s| format!("{s:?}"));
        sb.sort_by_key(|s| format!("{s:?}"));
        assert_eq!(sa, sb);
    }

    #[test]
    fn partition_rejects_overlap() {
        let g = torus(4, 4);
        let a = VertexSet::from_ids(g.spec(), 0..9);
        let b = VertexSet::from_ids(g.spec(), 8..16);
        assert!(!check_partition(&g, &[a, b], |_| true));
    }
}

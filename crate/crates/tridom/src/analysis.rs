//! Structure analysis for patterns built from small components: the
//! distance-3 adjacency graph between components, grid tables of hexagon
//! types, periodic type words along the three lattice directions, and
//! recovery of the generating family from a raw vertex set.

use crate::constructions::{k2_diagonal, k2_sandwiched};
use crate::domination::{classify, components, ComponentInfo, Shape, VertexSet};
use crate::error::{Error, Result};
use crate::lattice::{canonical_form, CanonGroup, Coord, TorusGraph, TorusSpec};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Hexagon type of a two-vertex component: the index of the coordinate its
/// endpoints share (x3 = -x1-x2 counts as the third).
pub fn k2_hex_type(spec: TorusSpec, a: Coord, b: Coord) -> Result<u8> {
    let d = spec.centered_diff(a, b);
    match (d.x1.abs(), d.x2.abs(), (d.x1 + d.x2).abs()) {
        (0, 1, 1) => Ok(1),
        (1, 0, 1) => Ok(2),
        (1, 1, 0) => Ok(3),
        _ => Err(Error::NotK2Qpds),
    }
}

/// Family label used by periodic words and classification parameters: the
/// cyclic predecessor of the hexagon type. Both alphabets are {1,2,3}; words
/// and family parameters use this labeling throughout.
pub fn family_label(hex_type: u8) -> u8 {
    match hex_type {
        1 => 3,
        2 => 1,
        3 => 2,
        _ => panic!("hexagon type out of range"),
    }
}

/// Inverse of `family_label`.
pub fn hex_type_of_family(label: u8) -> u8 {
    match label {
        1 => 2,
        2 => 3,
        3 => 1,
        _ => panic!("family label out of range"),
    }
}

/// Per-component type record for an all-K2 pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HexagonInfo {
    pub component: usize,
    pub hex_type: u8,
    pub anchor: Coord,
}

fn comp_anchor(g: &TorusGraph, comp: &ComponentInfo) -> Coord {
    comp.vertices
        .iter()
        .map(|&v| g.coord_of(v))
        .min()
        .expect("components are nonempty")
}

/// Hexagon types of every component of a pattern whose components are all
/// two-vertex edges, in component order.
pub fn hexagon_types(g: &TorusGraph, s: &VertexSet) -> Result<Vec<HexagonInfo>> {
    let report = classify(g, s);
    if report.h_qpds_nu != Some(2) {
        return Err(Error::NotK2Qpds);
    }
    report
        .components
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            let a = g.coord_of(comp.vertices[0]);
            let b = g.coord_of(comp.vertices[1]);
            Ok(HexagonInfo {
                component: i,
                hex_type: k2_hex_type(g.spec(), a, b)?,
                anchor: comp_anchor(g, comp),
            })
        })
        .collect()
}

/// Node of the component-adjacency graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuxNode {
    pub component: usize,
    pub hex_type: Option<u8>,
    pub anchor: Coord,
}

/// Graph on components, adjacent exactly when their graph distance is 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuxGraph {
    pub nodes: Vec<AuxNode>,
    pub edges: Vec<(usize, usize)>,
}

impl AuxGraph {
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == i || b == i).count()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.nodes.len()).all(|i| self.degree(i) == d)
    }
}

/// Component-adjacency graph of a pattern with at least two components.
/// Works for any component shape; two-vertex components carry their type.
pub fn gamma_graph(g: &TorusGraph, s: &VertexSet) -> Result<AuxGraph> {
    let comps = components(g, s);
    if comps.len() < 2 {
        return Err(Error::TooFewComponents);
    }
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in &comp.vertices {
            owner[v] = i;
        }
    }
    let mut edges = BTreeSet::new();
    for (i, comp) in comps.iter().enumerate() {
        // distances from this component, cut off past 3
        let mut dist = vec![u32::MAX; g.vertex_count()];
        let mut queue = VecDeque::new();
        for &v in &comp.vertices {
            dist[v] = 0;
            queue.push_back(v);
        }
        let mut best: HashMap<usize, u32> = HashMap::new();
        while let Some(v) = queue.pop_front() {
            if dist[v] >= 3 {
                continue;
            }
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    if owner[w] != usize::MAX && owner[w] != i {
                        let e = best.entry(owner[w]).or_insert(u32::MAX);
                        *e = (*e).min(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        for (j, d) in best {
            if d == 3 {
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    let nodes = comps
        .iter()
        .enumerate()
        .map(|(i, comp)| {
            let hex_type = if comp.shape == Shape::K2 {
                let a = g.coord_of(comp.vertices[0]);
                let b = g.coord_of(comp.vertices[1]);
                k2_hex_type(g.spec(), a, b).ok()
            } else {
                None
            };
            AuxNode {
                component: i,
                hex_type,
                anchor: comp_anchor(g, comp),
            }
        })
        .collect();
    Ok(AuxGraph {
        nodes,
        edges: edges.into_iter().collect(),
    })
}

/// Triangles of pairwise-adjacent components carrying all three types.
/// Reported, never assumed absent.
pub fn mixed_triples(aux: &AuxGraph) -> Vec<(usize, usize, usize)> {
    let edge_set: BTreeSet<(usize, usize)> = aux.edges.iter().copied().collect();
    let adj = |a: usize, b: usize| edge_set.contains(&(a.min(b), a.max(b)));
    let n = aux.nodes.len();
    let mut out = Vec::new();
    for i in 0..n {
        let Some(ti) = aux.nodes[i].hex_type else { continue };
        for j in i + 1..n {
            let Some(tj) = aux.nodes[j].hex_type else { continue };
            if tj == ti || !adj(i, j) {
                continue;
            }
            for k in j + 1..n {
                let Some(tk) = aux.nodes[k].hex_type else { continue };
                if tk != ti && tk != tj && adj(i, k) && adj(j, k) {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

/// One of the three lattice directions an adjacency can point along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Axis {
    Anti,
    Vert,
    Diag,
}

const AXES: [Axis; 3] = [Axis::Anti, Axis::Vert, Axis::Diag];

fn axis_index(a: Axis) -> usize {
    match a {
        Axis::Anti => 0,
        Axis::Vert => 1,
        Axis::Diag => 2,
    }
}

#[derive(Debug, Clone, Copy)]
struct K2Image {
    node: usize,
    axis: Axis,
    descending: bool,
}

/// Unfolded adjacency geometry of an all-K2 pattern: per-component images
/// at distance exactly 3, tagged with direction and orientation.
struct K2Geometry {
    fams: Vec<u8>,
    images: Vec<Vec<K2Image>>,
}

impl K2Geometry {
    /// Unique descending successor along each axis, when it exists.
    fn successors(&self, descending: bool) -> Vec<[Option<usize>; 3]> {
        let mut out = vec![[None, None, None]; self.images.len()];
        for (i, imgs) in self.images.iter().enumerate() {
            for axis in AXES {
                let mut hits = imgs
                    .iter()
                    .filter(|im| im.axis == axis && im.descending == descending);
                let first = hits.next();
                let second = hits.next();
                if let (Some(im), None) = (first, second) {
                    out[i][axis_index(axis)] = Some(im.node);
                }
            }
        }
        out
    }
}

fn unfold_k2(g: &TorusGraph, comp: &ComponentInfo) -> Result<(Coord, Coord)> {
    let spec = g.spec();
    let a = g.coord_of(comp.vertices[0]);
    let b_raw = g.coord_of(comp.vertices[1]);
    for ku in [0i64, -1, 1] {
        for kv in [0i64, -1, 1] {
            let b = b_raw.add(Coord::new(ku * spec.m, kv * spec.n));
            if b.sub(a).hex_norm() == 1 {
                return Ok((a, b));
            }
        }
    }
    Err(Error::NotK2Qpds)
}

fn classify_step(step: Coord) -> (Axis, bool) {
    let u = 2 * step.x1 + step.x2;
    let v = step.x2;
    let descending = v < 0 || (v == 0 && u < 0);
    let (au, av) = if descending { (-u, -v) } else { (u, v) };
    let axis = if au > 0 && av < au {
        Axis::Diag
    } else if au >= 0 || 3 * av * av > au * au {
        Axis::Vert
    } else {
        Axis::Anti
    };
    (axis, descending)
}

fn k2_geometry(g: &TorusGraph, comps: &[ComponentInfo]) -> Result<K2Geometry> {
    let spec = g.spec();
    let mut endpoints = Vec::with_capacity(comps.len());
    let mut centers = Vec::with_capacity(comps.len());
    let mut fams = Vec::with_capacity(comps.len());
    for comp in comps {
        if comp.shape != Shape::K2 {
            return Err(Error::NotK2Qpds);
        }
        let (a, b) = unfold_k2(g, comp)?;
        centers.push(a.add(b));
        fams.push(family_label(k2_hex_type(spec, a, b)?));
        endpoints.push([a, b]);
    }
    let mut images = vec![Vec::new(); comps.len()];
    for i in 0..comps.len() {
        for j in 0..comps.len() {
            for ku in -2i64..=2 {
                for kv in -2i64..=2 {
                    if i == j && ku == 0 && kv == 0 {
                        continue;
                    }
                    let shift = Coord::new(ku * spec.m, kv * spec.n);
                    let d = endpoints[i]
                        .iter()
                        .flat_map(|&p| {
                            endpoints[j]
                                .iter()
                                .map(move |&q| q.add(shift).sub(p).hex_norm())
                        })
                        .min()
                        .expect("endpoint pairs are nonempty");
                    if d != 3 {
                        continue;
                    }
                    let step = centers[j].add(shift.scale(2)).sub(centers[i]);
                    let (axis, descending) = classify_step(step);
                    images[i].push(K2Image {
                        node: j,
                        axis,
                        descending,
                    });
                }
            }
        }
    }
    Ok(K2Geometry { fams, images })
}

/// Grid rendering of an all-K2 pattern's component types: positions in an
/// abstract rhombic layout plus the tagged adjacency list it was built from.
#[derive(Debug, Clone, Serialize)]
pub struct TypeTable {
    pub cells: Vec<TypeTableCell>,
    pub contiguity: Vec<(usize, usize, Axis)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeTableCell {
    pub component: usize,
    pub family: u8,
    pub col: i64,
    pub row: i64,
}

impl TypeTable {
    /// Monospace grid: ascending rows upward, staggered columns. Collisions
    /// from torus wrap keep the first assignment.
    pub fn render(&self) -> String {
        if self.cells.is_empty() {
            return String::new();
        }
        let min_col = self.cells.iter().map(|c| c.col).min().unwrap();
        let max_col = self.cells.iter().map(|c| c.col).max().unwrap();
        let min_row = self.cells.iter().map(|c| c.row).min().unwrap();
        let max_row = self.cells.iter().map(|c| c.row).max().unwrap();
        let width = (max_col - min_col + 1) as usize;
        let height = (max_row - min_row + 1) as usize;
        let mut grid = vec![vec![' '; width]; height];
        for cell in &self.cells {
            let r = (cell.row - min_row) as usize;
            let c = (cell.col - min_col) as usize;
            if grid[r][c] == ' ' {
                grid[r][c] = char::from_digit(cell.family as u32, 10).unwrap();
            }
        }
        grid.into_iter()
            .map(|row| row.into_iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn axis_step(axis: Axis, descending: bool) -> (i64, i64) {
    let (c, r) = match axis {
        Axis::Diag => (1, -1),
        Axis::Anti => (-1, -1),
        Axis::Vert => (0, -2),
    };
    if descending {
        (-c, -r)
    } else {
        (c, r)
    }
}

/// Lay the components of an all-K2 pattern out on an abstract rhombic grid
/// by walking the distance-3 adjacencies. The resulting adjacency relation
/// is the component graph's by construction.
pub fn type_table(g: &TorusGraph, s: &VertexSet) -> Result<TypeTable> {
    let report = classify(g, s);
    if report.h_qpds_nu != Some(2) {
        return Err(Error::NotK2Qpds);
    }
    let comps = report.components;
    if comps.len() < 2 {
        return Err(Error::TooFewComponents);
    }
    let geo = k2_geometry(g, &comps)?;
    let n = comps.len();
    let mut pos: Vec<Option<(i64, i64)>> = vec![None; n];
    let mut next_origin_col = 0i64;
    for root in 0..n {
        if pos[root].is_some() {
            continue;
        }
        pos[root] = Some((next_origin_col, 0));
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let (uc, ur) = pos[u].expect("queued nodes are placed");
            for im in &geo.images[u] {
                if pos[im.node].is_some() {
                    continue;
                }
                let (dc, dr) = axis_step(im.axis, im.descending);
                pos[im.node] = Some((uc + dc, ur + dr));
                queue.push_back(im.node);
            }
        }
        let placed_max = pos
            .iter()
            .flatten()
            .map(|&(c, _)| c)
            .max()
            .expect("at least the root is placed");
        next_origin_col = placed_max + 3;
    }
    let cells = (0..n)
        .map(|i| {
            let (col, row) = pos[i].expect("all nodes are placed");
            TypeTableCell {
                component: i,
                family: geo.fams[i],
                col,
                row,
            }
        })
        .collect();
    let mut contiguity = Vec::new();
    for (i, imgs) in geo.images.iter().enumerate() {
        for im in imgs {
            if !im.descending {
                contiguity.push((i, im.node, im.axis));
            }
        }
    }
    Ok(TypeTable { cells, contiguity })
}

/// The three primitive periodic type words of a two-type all-K2 pattern,
/// one per lattice direction, each starting right after a run anchor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriplePeriod {
    pub diag: String,
    pub vert: String,
    pub anti: String,
}

fn primitive_period(word: &[u8]) -> Vec<u8> {
    let n = word.len();
    for p in 1..=n {
        if n % p == 0 && (0..n).all(|k| word[k] == word[k % p]) {
            return word[..p].to_vec();
        }
    }
    unreachable!("the full word is always a period")
}

fn word_string(word: &[u8]) -> String {
    word.iter()
        .map(|&d| char::from_digit(d as u32, 10).unwrap())
        .collect()
}

/// Walk the full descending cycle along `axis` starting after `anchor`;
/// the anchor's own letter lands last. Errors when the walk leaves the
/// cycle or exceeds the node count.
fn cycle_word(
    geo: &K2Geometry,
    succ: &[[Option<usize>; 3]],
    anchor: usize,
    axis: Axis,
) -> Result<Vec<u8>> {
    let ai = axis_index(axis);
    let mut word = Vec::new();
    let mut w = succ[anchor][ai].ok_or(Error::NoLowType)?;
    loop {
        word.push(geo.fams[w]);
        if w == anchor {
            return Ok(word);
        }
        if word.len() > geo.fams.len() {
            return Err(Error::NoLowType);
        }
        w = succ[w][ai].ok_or(Error::NoLowType)?;
    }
}

/// Extract the three periodic type words of a two-type pattern. The scarcer
/// type is taken as low unless `low_type_anchor` overrides it; anchors are
/// the low nodes ending a descending low run along the run-maximizing axis.
pub fn triple_period(
    g: &TorusGraph,
    s: &VertexSet,
    low_type_anchor: Option<u8>,
) -> Result<TriplePeriod> {
    let report = classify(g, s);
    if report.h_qpds_nu != Some(2) {
        return Err(Error::NotK2Qpds);
    }
    let comps = report.components;
    if comps.len() < 2 {
        return Err(Error::TooFewComponents);
    }
    let geo = k2_geometry(g, &comps)?;
    let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
    for &f in &geo.fams {
        *counts.entry(f).or_insert(0) += 1;
    }
    if counts.len() != 2 {
        return Err(Error::NotTwoTypes { found: counts.len() });
    }
    let low = match low_type_anchor {
        Some(t) => {
            if !counts.contains_key(&t) {
                return Err(Error::InvalidParameter(format!(
                    "low type {t} does not occur in the pattern"
                )));
            }
            t
        }
        None => *counts
            .iter()
            .min_by_key(|&(label, count)| (*count, *label))
            .expect("two types are present")
            .0,
    };
    let succ = geo.successors(true);
    let n = geo.fams.len();
    let is_low = |i: usize| geo.fams[i] == low;

    let run_axis = AXES
        .into_iter()
        .map(|axis| {
            let ai = axis_index(axis);
            let mut best = 0usize;
            for u in 0..n {
                if !is_low(u) {
                    continue;
                }
                let mut run = 1usize;
                let mut w = succ[u][ai];
                while let Some(x) = w {
                    if !is_low(x) || x == u || run > n {
                        break;
                    }
                    run += 1;
                    w = succ[x][ai];
                }
                best = best.max(run);
            }
            (axis, best)
        })
        .max_by_key(|&(_, best)| best)
        .map(|(axis, _)| axis)
        .expect("three axes");

    let rai = axis_index(run_axis);
    let anchors: Vec<usize> = (0..n)
        .filter(|&u| {
            is_low(u)
                && match succ[u][rai] {
                    Some(x) => !is_low(x),
                    None => false,
                }
        })
        .collect();
    if anchors.is_empty() {
        return Err(Error::NoLowType);
    }

    // table columns walk the metric axes in this order
    let slot_axes = [Axis::Anti, Axis::Vert, Axis::Diag];
    let mut words = Vec::with_capacity(3);
    for axis in slot_axes {
        let mut agreed: Option<Vec<u8>> = None;
        for &a in &anchors {
            let w = primitive_period(&cycle_word(&geo, &succ, a, axis)?);
            match &agreed {
                None => agreed = Some(w),
                Some(prev) if *prev == w => {}
                Some(_) => return Err(Error::NoLowType),
            }
        }
        words.push(word_string(&agreed.expect("anchors exist")));
    }
    let mut it = words.into_iter();
    Ok(TriplePeriod {
        diag: it.next().unwrap(),
        vert: it.next().unwrap(),
        anti: it.next().unwrap(),
    })
}

/// Family recovered from a raw all-K2 pattern, with parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum K2FamilyVerdict {
    Parallel { hex_type: u8 },
    TLinear { t: u32, types: (u8, u8) },
    Sandwiched { xi: Vec<u8> },
    Diagonal { axis: u8, eta: Vec<u8> },
    Mixed,
}

fn rotation_canonical(word: &[u8]) -> Vec<u8> {
    let n = word.len();
    (0..n)
        .map(|r| {
            let mut w = Vec::with_capacity(n);
            w.extend_from_slice(&word[r..]);
            w.extend_from_slice(&word[..r]);
            w
        })
        .min()
        .expect("word is nonempty")
}

fn repeat_word(pattern: &[u8], times: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(pattern.len() * times);
    for _ in 0..times {
        out.extend_from_slice(pattern);
    }
    out
}

/// True when the three extracted words are the t-linear triple for minority
/// i and majority j, compared as necklaces so that all six orientations and
/// their reflections match.
fn matches_t_linear(tp: &TriplePeriod, t: usize, i: u8, j: u8) -> bool {
    let words = [&tp.diag, &tp.vert, &tp.anti];
    let lens_ok = words.iter().all(|w| w.len() == 2 * t + 1);
    if !lens_ok {
        return false;
    }
    let digits = |s: &str| -> Vec<u8> {
        s.chars().map(|c| c.to_digit(10).unwrap() as u8).collect()
    };
    let mut got: Vec<Vec<u8>> = words
        .iter()
        .map(|w| rotation_canonical(&digits(w)))
        .collect();
    got.sort();
    let mut solid = vec![j; t + 1];
    solid.extend(std::iter::repeat(i).take(t));
    let mut comb = vec![j];
    comb.extend(repeat_word(&[j, i], t));
    let mut tail = repeat_word(&[j, i], t - 1);
    tail.extend_from_slice(&[j, j, i]);
    let mut want = vec![
        rotation_canonical(&solid),
        rotation_canonical(&comb),
        rotation_canonical(&tail),
    ];
    want.sort();
    got == want
}

/// Row level of a K2 component for row-structured patterns: the larger of
/// the endpoint x2 values, treating a wrap across 0 as level 0.
fn row_level(a: Coord, b: Coord) -> i64 {
    let (ya, yb) = (a.x2, b.x2);
    if ya == yb {
        return ya;
    }
    if (ya - yb).abs() == 1 {
        return ya.max(yb);
    }
    // endpoints straddle the wrap seam
    0
}

/// Read the letter word of a row-structured pattern: levels repeat with
/// gaps 1,2,2 per block, each level is single-type, and the two rows above
/// a letter row carry family 1. Returns the lexicographically least
/// rotation.
fn extract_rows(g: &TorusGraph, comps: &[ComponentInfo]) -> Result<Vec<u8>> {
    let spec = g.spec();
    let mut by_level: BTreeMap<i64, Vec<u8>> = BTreeMap::new();
    for comp in comps {
        if comp.shape != Shape::K2 {
            return Err(Error::NotSandwiched);
        }
        let a = g.coord_of(comp.vertices[0]);
        let b = g.coord_of(comp.vertices[1]);
        let fam = family_label(k2_hex_type(spec, a, b).map_err(|_| Error::NotSandwiched)?);
        by_level.entry(row_level(a, b)).or_default().push(fam);
    }
    let levels: Vec<i64> = by_level.keys().copied().collect();
    let fams: Vec<u8> = by_level
        .values()
        .map(|v| {
            if v.iter().all(|&f| f == v[0]) {
                Ok(v[0])
            } else {
                Err(Error::NotSandwiched)
            }
        })
        .collect::<Result<_>>()?;
    let k = levels.len();
    if k == 0 || k % 3 != 0 || spec.n != 5 * (k as i64 / 3) {
        return Err(Error::NotSandwiched);
    }
    let gap = |idx: usize| {
        let here = levels[idx];
        let next = levels[(idx + 1) % k];
        (next - here).rem_euclid(spec.n)
    };
    // a block starts at a letter row: gaps 1,2,2 and row families (x,1,1)
    let start = (0..k)
        .find(|&r| {
            (0..k).step_by(3).all(|b| {
                let p = (r + b) % k;
                gap(p) == 1
                    && gap((p + 1) % k) == 2
                    && gap((p + 2) % k) == 2
                    && matches!(fams[p], 2 | 3)
                    && fams[(p + 1) % k] == 1
                    && fams[(p + 2) % k] == 1
            })
        })
        .ok_or(Error::NotSandwiched)?;
    let xi: Vec<u8> = (0..k / 3).map(|b| fams[(start + 3 * b) % k]).collect();
    Ok(rotation_canonical(&primitive_period(&xi)))
}

fn same_up_to_translation(g: &TorusGraph, a: &VertexSet, b: &VertexSet) -> bool {
    match (
        canonical_form(a, g, CanonGroup::Translations),
        canonical_form(b, g, CanonGroup::Translations),
    ) {
        (Ok(ca), Ok(cb)) => ca == cb,
        _ => false,
    }
}

/// Decide which family generated an all-K2 pattern and recover its
/// parameters, normalized: words are reported as their least rotation,
/// constant words collapse to the simpler family they coincide with.
pub fn classify_k2(g: &TorusGraph, s: &VertexSet) -> Result<K2FamilyVerdict> {
    let report = classify(g, s);
    if report.h_qpds_nu != Some(2) {
        return Err(Error::NotK2Qpds);
    }
    let comps = report.components;
    let infos: Vec<(u8, u8)> = comps
        .iter()
        .map(|comp| {
            let a = g.coord_of(comp.vertices[0]);
            let b = g.coord_of(comp.vertices[1]);
            let lit = k2_hex_type(g.spec(), a, b)?;
            Ok((lit, family_label(lit)))
        })
        .collect::<Result<_>>()?;
    let lit_set: BTreeSet<u8> = infos.iter().map(|&(l, _)| l).collect();

    match lit_set.len() {
        1 => Ok(K2FamilyVerdict::Parallel {
            hex_type: *lit_set.first().unwrap(),
        }),
        2 => {
            if let Ok(tp) = triple_period(g, s, None) {
                let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
                for &(_, f) in &infos {
                    *counts.entry(f).or_insert(0) += 1;
                }
                let (&i, _) = counts
                    .iter()
                    .min_by_key(|&(label, count)| (*count, *label))
                    .unwrap();
                let (&j, _) = counts
                    .iter()
                    .max_by_key(|&(label, count)| (*count, *label))
                    .unwrap();
                let len = tp.diag.len();
                if len >= 3 && len % 2 == 1 {
                    let t = (len - 1) / 2;
                    if matches_t_linear(&tp, t, i, j) {
                        return Ok(K2FamilyVerdict::TLinear {
                            t: t as u32,
                            types: (i, j),
                        });
                    }
                }
            }
            classify_diagonal(g, s, &comps).map(|v| v.unwrap_or(K2FamilyVerdict::Mixed))
        }
        3 => {
            if let Ok(xi) = extract_rows(g, &comps) {
                if let Ok(recon) = k2_sandwiched(g.spec(), &xi, Coord::new(0, 0)) {
                    if same_up_to_translation(g, s, &recon) {
                        return Ok(K2FamilyVerdict::Sandwiched { xi });
                    }
                }
            }
            Ok(K2FamilyVerdict::Mixed)
        }
        _ => Ok(K2FamilyVerdict::Mixed),
    }
}

/// Diagonal-family test for a two-type pattern: some axis has every
/// descending successor keep its type; the word read along another axis,
/// rotated or reversed, must rebuild the pattern.
fn classify_diagonal(
    g: &TorusGraph,
    s: &VertexSet,
    comps: &[ComponentInfo],
) -> Result<Option<K2FamilyVerdict>> {
    let geo = k2_geometry(g, comps)?;
    let succ = geo.successors(true);
    let n = geo.fams.len();
    let line_axis = AXES.into_iter().find(|&axis| {
        let ai = axis_index(axis);
        (0..n).all(|u| matches!(succ[u][ai], Some(x) if geo.fams[x] == geo.fams[u]))
    });
    let Some(line_axis) = line_axis else {
        return Ok(None);
    };
    let transverse = AXES
        .into_iter()
        .find(|&a| a != line_axis)
        .expect("two axes remain");
    let word = match cycle_word(&geo, &succ, 0, transverse) {
        Ok(w) => primitive_period(&w),
        Err(_) => return Ok(None),
    };
    let present: BTreeSet<u8> = geo.fams.iter().copied().collect();
    let absent = (1..=3u8)
        .find(|t| !present.contains(t))
        .expect("two of three labels are present");
    let reversed: Vec<u8> = word.iter().rev().copied().collect();
    for candidate in [rotation_canonical(&word), rotation_canonical(&reversed)] {
        if let Ok(recon) = k2_diagonal(g.spec(), absent, &candidate, Coord::new(0, 0)) {
            if same_up_to_translation(g, s, &recon) {
                return Ok(Some(K2FamilyVerdict::Diagonal {
                    axis: absent,
                    eta: candidate,
                }));
            }
        }
    }
    Ok(None)
}

/// Letter word of a row-structured pattern, read upward with the two
/// family-1 rows of each block dropped.
pub fn sandwich_bisequence(g: &TorusGraph, s: &VertexSet) -> Result<Vec<u8>> {
    let report = classify(g, s);
    if report.h_qpds_nu != Some(2) {
        return Err(Error::NotK2Qpds);
    }
    extract_rows(g, &report.components)
}

/// Tiling periods of the diagonal family by word length: (20,5) for length
/// 2, (10I,5I) for even I > 2, (10I,10I) for odd I > 2, (10,10) for the
/// single-letter collapse.
pub fn period_dimensions(eta: &[u8]) -> Result<(i64, i64)> {
    if eta.is_empty() {
        return Err(Error::EmptyWord);
    }
    let i = eta.len() as i64;
    Ok(match i {
        1 => (10, 10),
        2 => (20, 5),
        _ if i % 2 == 0 => (10 * i, 5 * i),
        _ => (10 * i, 10 * i),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        k2_parallel, k2_t_linear, k3_qpds, perfect_code, Family, PatternSpec,
    };
    use crate::lattice::{apply_isometry, build_torus, Isometry};

    fn torus(m: i64, n: i64) -> TorusGraph {
        build_torus(TorusSpec::new(m, n).unwrap()).unwrap()
    }

    fn zero() -> Coord {
        Coord::new(0, 0)
    }

    #[test]
    fn hex_type_of_shared_coordinate() {
        let spec = TorusSpec::new(7, 7).unwrap();
        assert_eq!(k2_hex_type(spec, zero(), Coord::new(0, 1)).unwrap(), 1);
        assert_eq!(k2_hex_type(spec, zero(), Coord::new(1, 0)).unwrap(), 2);
        assert_eq!(k2_hex_type(spec, zero(), Coord::new(1, 6)).unwrap(), 3);
        assert!(k2_hex_type(spec, zero(), Coord::new(2, 0)).is_err());
        // wrap across the seam
        assert_eq!(
            k2_hex_type(spec, Coord::new(6, 3), Coord::new(0, 3)).unwrap(),
            2
        );
    }

    #[test]
    fn family_labels_invert() {
        for t in 1..=3u8 {
            assert_eq!(hex_type_of_family(family_label(t)), t);
        }
    }

    #[test]
    fn parallel_types_are_uniform() {
        let g = torus(10, 10);
        for hex_type in 1..=3u8 {
            let s = k2_parallel(g.spec(), hex_type, zero()).unwrap();
            let infos = hexagon_types(&g, &s).unwrap();
            assert_eq!(infos.len(), 10);
            assert!(infos.iter().all(|h| h.hex_type == hex_type));
        }
    }

    #[test]
    fn rotation_cycles_types() {
        let g = torus(10, 10);
        let s = k2_parallel(g.spec(), 2, zero()).unwrap();
        // (a,b) -> (-b,a+b) sends the type-2 offset (1,0) to the type-1
        // offset (0,1)
        let rot = apply_isometry(&Isometry::rotation60(1), &s, &g).unwrap();
        let infos = hexagon_types(&g, &rot).unwrap();
        assert!(infos.iter().all(|h| h.hex_type == 1));
        let shifted = s.translate(Coord::new(4, 7));
        let infos = hexagon_types(&g, &shifted).unwrap();
        assert!(infos.iter().all(|h| h.hex_type == 2));
    }

    #[test]
    fn gamma_parallel_is_6_regular() {
        let g = torus(10, 10);
        let s = k2_parallel(g.spec(), 2, zero()).unwrap();
        let aux = gamma_graph(&g, &s).unwrap();
        assert_eq!(aux.nodes.len(), 10);
        assert!(aux.is_regular(6));
    }

    #[test]
    fn gamma_matches_brute_force_distances() {
        let g = torus(6, 6);
        let s = k3_qpds(g.spec(), zero()).unwrap();
        let aux = gamma_graph(&g, &s).unwrap();
        let comps = components(&g, &s);
        for i in 0..comps.len() {
            for j in i + 1..comps.len() {
                let mut d = u32::MAX;
                for &u in &comps[i].vertices {
                    for &v in &comps[j].vertices {
                        d = d.min(bfs_dist(&g, u, v));
                    }
                }
                let got = aux.edges.contains(&(i, j));
                assert_eq!(d == 3, got, "edge ({i},{j})");
            }
        }
    }

    fn bfs_dist(g: &TorusGraph, from: usize, to: usize) -> u32 {
        let mut dist = vec![u32::MAX; g.vertex_count()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                return dist[v];
            }
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        u32::MAX
    }

    #[test]
    fn distant_components_are_not_adjacent() {
        let g = torus(12, 12);
        let s = VertexSet::from_coords(
            g.spec(),
            [zero(), Coord::new(1, 0), Coord::new(5, 0), Coord::new(6, 0)],
        );
        let aux = gamma_graph(&g, &s).unwrap();
        assert!(aux.edges.is_empty());
        let single = VertexSet::from_coords(g.spec(), [zero(), Coord::new(1, 0)]);
        assert!(matches!(
            gamma_graph(&g, &single),
            Err(Error::TooFewComponents)
        ));
    }

    #[test]
    fn minority_node_of_minimal_t_linear_has_two_majority_neighbors() {
        let g = torus(6, 5);
        let s = k2_t_linear(g.spec(), 1, (2, 1), zero()).unwrap();
        let aux = gamma_graph(&g, &s).unwrap();
        assert_eq!(aux.nodes.len(), 3);
        let minority: Vec<usize> = aux
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.hex_type == Some(3))
            .map(|(i, _)| i)
            .collect();
        assert_eq!(minority.len(), 1);
        let nbrs = aux.neighbors(minority[0]);
        assert_eq!(nbrs.len(), 2);
        assert!(nbrs
            .iter()
            .all(|&j| aux.nodes[j].hex_type == Some(2)));
    }

    #[test]
    fn triple_period_of_minimal_t_linear() {
        let g = torus(6, 5);
        let s = k2_t_linear(g.spec(), 1, (2, 1), zero()).unwrap();
        let tp = triple_period(&g, &s, None).unwrap();
        assert_eq!(tp.diag, "112");
        assert_eq!(tp.vert, "112");
        assert_eq!(tp.anti, "112");
    }

    #[test]
    fn triple_period_of_2_linear() {
        let g = torus(50, 5);
        let s = k2_t_linear(g.spec(), 2, (2, 1), zero()).unwrap();
        let tp = triple_period(&g, &s, None).unwrap();
        assert_eq!(tp.diag, "11122");
        assert_eq!(tp.vert, "11212");
        assert_eq!(tp.anti, "12112");
    }

    #[test]
    fn triple_period_rejects_one_and_three_types() {
        let g = torus(10, 10);
        let s = k2_parallel(g.spec(), 2, zero()).unwrap();
        assert!(matches!(
            triple_period(&g, &s, None),
            Err(Error::NotTwoTypes { found: 1 })
        ));
        let g = torus(6, 45);
        let s = k2_sandwiched(g.spec(), &[2, 3, 3], zero()).unwrap();
        assert!(matches!(
            triple_period(&g, &s, None),
            Err(Error::NotTwoTypes { found: 3 })
        ));
    }

    #[test]
    fn diagonal_has_no_low_anchor() {
        let g = torus(20, 5);
        let s = k2_diagonal(g.spec(), 3, &[1, 2], zero()).unwrap();
        assert!(matches!(
            triple_period(&g, &s, None),
            Err(Error::NoLowType)
        ));
    }

    #[test]
    fn classify_recovers_core_families() {
        let g = torus(10, 10);
        for hex_type in 1..=3u8 {
            let s = k2_parallel(g.spec(), hex_type, zero()).unwrap();
            assert_eq!(
                classify_k2(&g, &s).unwrap(),
                K2FamilyVerdict::Parallel { hex_type }
            );
        }
        let g = torus(6, 5);
        let s = k2_t_linear(g.spec(), 1, (2, 1), zero()).unwrap();
        assert_eq!(
            classify_k2(&g, &s).unwrap(),
            K2FamilyVerdict::TLinear { t: 1, types: (2, 1) }
        );
        let g = torus(20, 5);
        let s = k2_diagonal(g.spec(), 3, &[1, 2], zero()).unwrap();
        assert_eq!(
            classify_k2(&g, &s).unwrap(),
            K2FamilyVerdict::Diagonal {
                axis: 3,
                eta: vec![1, 2]
            }
        );
        let g = torus(6, 45);
        let s = k2_sandwiched(g.spec(), &[2, 3, 3], zero()).unwrap();
        assert_eq!(
            classify_k2(&g, &s).unwrap(),
            K2FamilyVerdict::Sandwiched { xi: vec![2, 3, 3] }
        );
    }

    #[test]
    fn constant_words_collapse() {
        // a one-letter row word coincides with the 1-linear pattern
        let g = torus(6, 5);
        let s = k2_sandwiched(g.spec(), &[2], zero()).unwrap();
        assert_eq!(
            classify_k2(&g, &s).unwrap(),
            K2FamilyVerdict::TLinear { t: 1, types: (2, 1) }
        );
        let g = torus(6, 30);
        let s = k2_sandwiched(g.spec(), &[3], zero()).unwrap();
        assert_eq!(
            classify_k2(&g, &s).unwrap(),
            K2FamilyVerdict::TLinear { t: 1, types: (3, 1) }
        );
        // a one-letter diagonal word coincides with the parallel pattern
        let g = torus(10, 10);
        let s = k2_diagonal(g.spec(), 3, &[1], zero()).unwrap();
        assert_eq!(
            classify_k2(&g, &s).unwrap(),
            K2FamilyVerdict::Parallel { hex_type: 2 }
        );
    }

    #[test]
    fn bisequence_reads_rows_upward() {
        let g = torus(6, 45);
        let s = k2_sandwiched(g.spec(), &[2, 3, 3], zero()).unwrap();
        assert_eq!(sandwich_bisequence(&g, &s).unwrap(), vec![2, 3, 3]);
        // extraction also works on the constant collapse
        let g = torus(6, 5);
        let s = k2_sandwiched(g.spec(), &[2], zero()).unwrap();
        assert_eq!(sandwich_bisequence(&g, &s).unwrap(), vec![2]);
        let g = torus(10, 10);
        let s = k2_parallel(g.spec(), 2, zero()).unwrap();
        assert!(matches!(
            sandwich_bisequence(&g, &s),
            Err(Error::NotSandwiched)
        ));
    }

    #[test]
    fn mixed_triples_empty_on_families() {
        let g = torus(10, 10);
        let s = k2_parallel(g.spec(), 2, zero()).unwrap();
        assert!(mixed_triples(&gamma_graph(&g, &s).unwrap()).is_empty());
        let g = torus(6, 45);
        let s = k2_sandwiched(g.spec(), &[2, 3, 3], zero()).unwrap();
        assert!(mixed_triples(&gamma_graph(&g, &s).unwrap()).is_empty());
    }

    #[test]
    fn type_table_matches_gamma() {
        let g = torus(10, 10);
        let s = k2_parallel(g.spec(), 2, zero()).unwrap();
        let table = type_table(&g, &s).unwrap();
        assert_eq!(table.cells.len(), 10);
        let aux = gamma_graph(&g, &s).unwrap();
        let table_pairs: BTreeSet<(usize, usize)> = table
            .contiguity
            .iter()
            .map(|&(a, b, _)| (a.min(b), a.max(b)))
            .collect();
        let aux_pairs: BTreeSet<(usize, usize)> = aux.edges.iter().copied().collect();
        assert_eq!(table_pairs, aux_pairs);
        let rendered = table.render();
        assert_eq!(rendered.matches('1').count(), 10);
    }

    #[test]
    fn period_dimension_table() {
        assert!(matches!(period_dimensions(&[]), Err(Error::EmptyWord)));
        assert_eq!(period_dimensions(&[1]).unwrap(), (10, 10));
        assert_eq!(period_dimensions(&[1, 2]).unwrap(), (20, 5));
        assert_eq!(period_dimensions(&[1, 2, 2]).unwrap(), (30, 30));
        assert_eq!(period_dimensions(&[1, 1, 1, 2]).unwrap(), (40, 20));
        assert_eq!(period_dimensions(&[1, 2, 1, 2, 2]).unwrap(), (50, 50));
        assert_eq!(period_dimensions(&[1; 6]).unwrap(), (60, 30));
    }

    #[test]
    fn perfect_code_is_rejected_by_k2_analyses() {
        let g = torus(7, 7);
        let s = perfect_code(g.spec(), false, zero()).unwrap();
        assert!(matches!(hexagon_types(&g, &s), Err(Error::NotK2Qpds)));
        assert!(matches!(classify_k2(&g, &s), Err(Error::NotK2Qpds)));
    }

    #[test]
    fn pattern_spec_round_trip_smoke() {
        let spec = TorusSpec::new(30, 30).unwrap();
        let g = torus(30, 30);
        let pattern = PatternSpec {
            family: Family::K2Diagonal {
                axis: 3,
                eta: vec![1, 2, 2],
            },
            offset: zero(),
        };
        let s = crate::constructions::construct(&pattern, spec).unwrap();
        assert_eq!(
            classify_k2(&g, &s).unwrap(),
            K2FamilyVerdict::Diagonal {
                axis: 3,
                eta: vec![1, 2, 2]
            }
        );
    }
}

//! Closed-form generators for the canonical pattern families: the perfect
//! code and its mirror image, the two semiperfect patterns, the triangle
//! pattern, and the four two-vertex-component families (parallel, t-linear,
//! sandwiched, diagonal), plus search-backed motif solving and finite-window
//! rendering for aperiodic words.

use crate::domination::VertexSet;
use crate::error::{Error, Result};
use crate::lattice::{Coord, TorusSpec};
use crate::search::{
    enumerate, ImposedSymmetry, Predicate, SearchProblem, ShapeFilter,
};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

/// Generators and base point of a rank-2 translation sublattice of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LatticeBasis {
    pub u: Coord,
    pub v: Coord,
    pub offset: Coord,
}

impl LatticeBasis {
    pub fn new(u: Coord, v: Coord, offset: Coord) -> Result<Self> {
        let b = LatticeBasis { u, v, offset };
        if b.det() == 0 {
            return Err(Error::InvalidParameter(format!(
                "degenerate lattice basis {u:?}, {v:?}"
            )));
        }
        Ok(b)
    }

    /// Signed index of the sublattice in the full lattice.
    pub fn det(&self) -> i64 {
        self.u.x1 * self.v.x2 - self.u.x2 * self.v.x1
    }

    /// True when p is an integer combination of the generators.
    pub fn contains(&self, p: Coord) -> bool {
        let det = self.det();
        let a_num = p.x1 * self.v.x2 - p.x2 * self.v.x1;
        let b_num = self.u.x1 * p.x2 - self.u.x2 * p.x1;
        a_num % det == 0 && b_num % det == 0
    }

    /// True when the torus wrap vectors are lattice periods, so the plane
    /// pattern projects to a well-defined pattern on the torus.
    pub fn tiles(&self, spec: TorusSpec) -> bool {
        self.contains(Coord::new(spec.m, 0)) && self.contains(Coord::new(0, spec.n))
    }

    fn map_linear(&self, f: impl Fn(Coord) -> Coord) -> LatticeBasis {
        LatticeBasis {
            u: f(self.u),
            v: f(self.v),
            offset: self.offset,
        }
    }
}

/// Distinct projections of the translated lattice onto the torus.
pub fn lattice_residues(basis: &LatticeBasis, spec: TorusSpec) -> Vec<Coord> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![spec.project(basis.offset)];
    while let Some(p) = stack.pop() {
        if !seen.insert(p) {
            continue;
        }
        let c = spec.coord_of(p);
        for d in [basis.u, basis.v, basis.u.neg(), basis.v.neg()] {
            stack.push(spec.project(c.add(d)));
        }
    }
    seen.into_iter().map(|p| spec.coord_of(p)).collect()
}

fn assemble(spec: TorusSpec, basis: &LatticeBasis, cells: &[Coord]) -> VertexSet {
    let mut s = VertexSet::empty(spec);
    for r in lattice_residues(basis, spec) {
        for &c in cells {
            s.insert(spec.project(r.add(c)));
        }
    }
    s
}

/// Endpoints of a two-vertex component whose vertices share coordinate
/// `hex_type`, anchored at `a`.
pub fn pair_cells(hex_type: u8, a: Coord) -> [Coord; 2] {
    match hex_type {
        1 => [a, Coord::new(a.x1, a.x2 + 1)],
        2 => [a, Coord::new(a.x1 + 1, a.x2)],
        3 => [a, Coord::new(a.x1 + 1, a.x2 - 1)],
        _ => panic!("hex type out of range"),
    }
}

/// Row or column orientation for the line-shaped semiperfect pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LineAxis {
    Rows,
    Cols,
}

/// Variant selector for the semiperfect constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpdsKind {
    Isolated,
    Lines(LineAxis),
}

/// Pattern family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Family {
    PerfectCode { mirror: bool },
    SpdsIsolated,
    SpdsLines { axis: LineAxis },
    K3Qpds,
    K2Parallel { hex_type: u8 },
    K2TLinear { t: u32, types: (u8, u8) },
    K2Sandwiched { xi: Vec<u8> },
    K2Diagonal { axis: u8, eta: Vec<u8> },
}

/// A fully specified pattern request: family plus base-point translation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternSpec {
    pub family: Family,
    pub offset: Coord,
}

fn require(cond: bool, spec: TorusSpec, requirement: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::DivisibilityViolation {
            m: spec.m,
            n: spec.n,
            requirement: requirement.to_string(),
        })
    }
}

/// The unique proper perfect dominating set (or its mirror image).
pub fn perfect_code(spec: TorusSpec, mirror: bool, offset: Coord) -> Result<VertexSet> {
    require(spec.m % 7 == 0 && spec.n % 7 == 0, spec, "7 | m and 7 | n")?;
    let basis = if mirror {
        LatticeBasis::new(Coord::new(3, -2), Coord::new(1, -3), offset)?
    } else {
        LatticeBasis::new(Coord::new(3, -1), Coord::new(1, 2), offset)?
    };
    Ok(assemble(spec, &basis, &[Coord::new(0, 0)]))
}

/// One of the two semiperfect patterns: the even-sublattice of isolated
/// vertices, or every third line.
pub fn spds(spec: TorusSpec, kind: SpdsKind, offset: Coord) -> Result<VertexSet> {
    let basis = match kind {
        SpdsKind::Isolated => {
            require(spec.m % 2 == 0 && spec.n % 2 == 0, spec, "2 | m and 2 | n")?;
            LatticeBasis::new(Coord::new(2, 0), Coord::new(0, 2), offset)?
        }
        SpdsKind::Lines(LineAxis::Rows) => {
            require(spec.n % 3 == 0, spec, "3 | n")?;
            LatticeBasis::new(Coord::new(1, 0), Coord::new(0, 3), offset)?
        }
        SpdsKind::Lines(LineAxis::Cols) => {
            require(spec.m % 3 == 0, spec, "3 | m")?;
            LatticeBasis::new(Coord::new(3, 0), Coord::new(0, 1), offset)?
        }
    };
    Ok(assemble(spec, &basis, &[Coord::new(0, 0)]))
}

/// The unique triangle pattern: up-triangles on an index-12 lattice.
pub fn k3_qpds(spec: TorusSpec, offset: Coord) -> Result<VertexSet> {
    require(spec.m % 6 == 0 && spec.n % 6 == 0, spec, "6 | m and 6 | n")?;
    let basis = LatticeBasis::new(Coord::new(4, -2), Coord::new(2, 2), offset)?;
    Ok(assemble(
        spec,
        &basis,
        &[Coord::new(0, 0), Coord::new(1, 0), Coord::new(0, 1)],
    ))
}

fn parallel_basis(hex_type: u8, offset: Coord) -> Result<LatticeBasis> {
    match hex_type {
        1 => LatticeBasis::new(Coord::new(2, 2), Coord::new(-1, 4), offset),
        2 => LatticeBasis::new(Coord::new(4, -2), Coord::new(3, 1), offset),
        3 => LatticeBasis::new(Coord::new(-2, 4), Coord::new(-4, 3), offset),
        _ => Err(Error::InvalidParameter(format!(
            "hex type {hex_type} outside 1..=3"
        ))),
    }
}

/// The single-orientation two-vertex pattern, one per edge direction.
pub fn k2_parallel(spec: TorusSpec, hex_type: u8, offset: Coord) -> Result<VertexSet> {
    let basis = parallel_basis(hex_type, offset)?;
    require(
        spec.m % 10 == 0 && spec.n % 10 == 0,
        spec,
        "10 | m and 10 | n",
    )?;
    Ok(assemble(spec, &basis, &pair_cells(hex_type, Coord::new(0, 0))))
}

/// Linear maps realigning the reference pattern (family labels (2,1)) onto
/// any ordered pair of family labels.
fn orientation_map(types: (u8, u8)) -> Result<fn(Coord) -> Coord> {
    match types {
        (2, 1) => Ok(|c: Coord| c),
        (3, 2) => Ok(|c: Coord| Coord::new(-c.x1 - c.x2, c.x1)),
        (1, 3) => Ok(|c: Coord| Coord::new(c.x2, -c.x1 - c.x2)),
        (2, 3) => Ok(|c: Coord| Coord::new(c.x2, c.x1)),
        (3, 1) => Ok(|c: Coord| Coord::new(-c.x1 - c.x2, c.x2)),
        (1, 2) => Ok(|c: Coord| Coord::new(c.x1, -c.x1 - c.x2)),
        _ => Err(Error::InvalidParameter(format!(
            "type pair {types:?} is not an ordered pair of distinct family labels"
        ))),
    }
}

/// Reference cell of the t-linear pattern in orientation (2,1): 2t+1
/// components per fundamental domain, minority type on even slots.
fn t_linear_cell(t: u32) -> (Vec<Coord>, LatticeBasis) {
    let t = t as i64;
    let mut cells = Vec::new();
    let mut y = 0i64;
    for j in 0..=2 * t {
        let anchor = Coord::new(2 * j, y.rem_euclid(5));
        let lit = if j % 2 == 0 && j < 2 * t { 3 } else { 2 };
        cells.extend_from_slice(&pair_cells(lit, anchor));
        y += if j % 2 == 0 { 1 } else { 2 };
    }
    let basis = LatticeBasis::new(
        Coord::new(4 * t + 2, (3 * t + 2).rem_euclid(5)),
        Coord::new(0, 5),
        Coord::new(0, 0),
    )
    .expect("reference basis is nondegenerate");
    (cells, basis)
}

/// The t-linear two-vertex pattern in any of its six orientations.
pub fn k2_t_linear(spec: TorusSpec, t: u32, types: (u8, u8), offset: Coord) -> Result<VertexSet> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    let map = orientation_map(types)?;
    let (cells, basis) = t_linear_cell(t);
    let cells: Vec<Coord> = cells.into_iter().map(map).collect();
    let mut basis = basis.map_linear(map);
    basis.offset = offset;
    require_tiling(&basis, spec)?;
    Ok(assemble(spec, &basis, &cells))
}

fn require_tiling(basis: &LatticeBasis, spec: TorusSpec) -> Result<()> {
    if basis.tiles(spec) {
        Ok(())
    } else {
        Err(Error::DivisibilityViolation {
            m: spec.m,
            n: spec.n,
            requirement: format!(
                "(m,0) and (0,n) must lie in the pattern lattice spanned by ({},{}) and ({},{})",
                basis.u.x1, basis.u.x2, basis.v.x1, basis.v.x2
            ),
        })
    }
}

/// Stacked-row two-vertex pattern: letter rows of family labels 2/3
/// separated by two rows of family 1 per letter.
pub fn k2_sandwiched(spec: TorusSpec, xi: &[u8], offset: Coord) -> Result<VertexSet> {
    if xi.is_empty() {
        return Err(Error::EmptyWord);
    }
    if xi.iter().any(|&c| c != 2 && c != 3) {
        return Err(Error::InvalidParameter(format!(
            "letters of {xi:?} must be family labels 2 or 3"
        )));
    }
    let ell = xi.len() as i64;
    let threes = xi.iter().filter(|&&c| c == 3).count() as i64;
    let basis = LatticeBasis::new(Coord::new(6, 0), Coord::new(threes, 5 * ell), offset)?;
    require_tiling(&basis, spec)?;
    let cells = sandwich_cells(xi, true);
    Ok(assemble(spec, &basis, &cells))
}

/// Cells of the stacked-row pattern for one horizontal period; `cyclic`
/// controls whether the phase rule wraps from the last letter to the first.
fn sandwich_cells(xi: &[u8], cyclic: bool) -> Vec<Coord> {
    let ell = xi.len();
    let mut cells = Vec::new();
    let mut p = 0i64;
    for q in 0..ell {
        let c = 5 * q as i64;
        match xi[q] {
            2 => cells.extend_from_slice(&pair_cells(3, Coord::new(p, c))),
            3 => cells.extend_from_slice(&pair_cells(1, Coord::new(p, c - 1))),
            _ => unreachable!(),
        }
        cells.extend_from_slice(&pair_cells(2, Coord::new(p + 2, c + 1)));
        cells.extend_from_slice(&pair_cells(2, Coord::new(p + 4, c + 3)));
        let next = q + 1;
        if next < ell || cyclic {
            if xi[next % ell] == 3 {
                p += 1;
            }
        }
    }
    cells
}

const S3_LIT: [u8; 2] = [2, 3];

fn s3_step(a: u8, b: u8) -> Coord {
    match (a, b) {
        (1, 1) => Coord::new(-1, 3),
        (1, 2) => Coord::new(-2, 4),
        (2, 2) => Coord::new(1, 2),
        (2, 1) => Coord::new(2, 1),
        _ => panic!("letters must be 1 or 2"),
    }
}

/// Anchors and cells of the reference diagonal pattern for a word over {1,2}.
fn s3_cells(eta: &[u8], cyclic: bool) -> (Vec<Coord>, Coord) {
    let len = eta.len();
    let mut anchors = vec![Coord::new(0, 0)];
    for k in 0..len - 1 {
        let prev = anchors[k];
        anchors.push(prev.add(s3_step(eta[k], eta[k + 1])));
    }
    let mut period = Coord::new(0, 0);
    for k in 0..len {
        if k + 1 < len || cyclic {
            period = period.add(s3_step(eta[k], eta[(k + 1) % len]));
        }
    }
    let mut cells = Vec::new();
    for (k, &a) in anchors.iter().enumerate() {
        cells.extend_from_slice(&pair_cells(S3_LIT[eta[k] as usize - 1], a));
    }
    (cells, period)
}

fn diagonal_alphabet(axis: u8) -> Result<[u8; 2]> {
    // canonical letters 1, 2 in order, relabeled per axis family pair
    match axis {
        3 => Ok([1, 2]),
        1 => Ok([2, 3]),
        2 => Ok([3, 1]),
        _ => Err(Error::InvalidParameter(format!(
            "axis {axis} outside 1..=3"
        ))),
    }
}

/// Diagonal-line two-vertex pattern whose word omits family label `axis`,
/// driven by a word over the remaining two family labels.
pub fn k2_diagonal(spec: TorusSpec, axis: u8, eta: &[u8], offset: Coord) -> Result<VertexSet> {
    if eta.is_empty() {
        return Err(Error::EmptyWord);
    }
    let alphabet = diagonal_alphabet(axis)?;
    let canonical: Vec<u8> = eta
        .iter()
        .map(|&c| {
            if c == alphabet[0] {
                Ok(1)
            } else if c == alphabet[1] {
                Ok(2)
            } else {
                Err(Error::InvalidParameter(format!(
                    "letter {c} of {eta:?} must be a family label in {alphabet:?}"
                )))
            }
        })
        .collect::<Result<_>>()?;
    let (cells, period) = s3_cells(&canonical, true);
    let map = match axis {
        3 => orientation_map((2, 1))?, // identity
        1 => |c: Coord| Coord::new(-c.x1 - c.x2, c.x1),
        2 => |c: Coord| Coord::new(c.x2, -c.x1 - c.x2),
        _ => unreachable!(),
    };
    let cells: Vec<Coord> = cells.into_iter().map(map).collect();
    let basis = LatticeBasis {
        u: map(Coord::new(4, -2)),
        v: map(period),
        offset,
    };
    require_tiling(&basis, spec)?;
    Ok(assemble(spec, &basis, &cells))
}

/// Dispatch for the four two-vertex-component families.
pub fn k2_family(pattern: &PatternSpec, spec: TorusSpec) -> Result<VertexSet> {
    match &pattern.family {
        Family::K2Parallel { hex_type } => k2_parallel(spec, *hex_type, pattern.offset),
        Family::K2TLinear { t, types } => k2_t_linear(spec, *t, *types, pattern.offset),
        Family::K2Sandwiched { xi } => k2_sandwiched(spec, xi, pattern.offset),
        Family::K2Diagonal { axis, eta } => k2_diagonal(spec, *axis, eta, pattern.offset),
        _ => Err(Error::InvalidParameter(
            "pattern family has no two-vertex components".into(),
        )),
    }
}

/// Dispatch over every family.
pub fn construct(pattern: &PatternSpec, spec: TorusSpec) -> Result<VertexSet> {
    match &pattern.family {
        Family::PerfectCode { mirror } => perfect_code(spec, *mirror, pattern.offset),
        Family::SpdsIsolated => spds(spec, SpdsKind::Isolated, pattern.offset),
        Family::SpdsLines { axis } => spds(spec, SpdsKind::Lines(*axis), pattern.offset),
        Family::K3Qpds => k3_qpds(spec, pattern.offset),
        _ => k2_family(pattern, spec),
    }
}

/// Translation lattice of a family's reference pattern (offset zero).
pub fn pattern_lattice(family: &Family) -> Result<LatticeBasis> {
    let zero = Coord::new(0, 0);
    match family {
        Family::PerfectCode { mirror: false } => {
            LatticeBasis::new(Coord::new(3, -1), Coord::new(1, 2), zero)
        }
        Family::PerfectCode { mirror: true } => {
            LatticeBasis::new(Coord::new(3, -2), Coord::new(1, -3), zero)
        }
        Family::SpdsIsolated => LatticeBasis::new(Coord::new(2, 0), Coord::new(0, 2), zero),
        Family::SpdsLines { axis: LineAxis::Rows } => {
            LatticeBasis::new(Coord::new(1, 0), Coord::new(0, 3), zero)
        }
        Family::SpdsLines { axis: LineAxis::Cols } => {
            LatticeBasis::new(Coord::new(3, 0), Coord::new(0, 1), zero)
        }
        Family::K3Qpds => LatticeBasis::new(Coord::new(4, -2), Coord::new(2, 2), zero),
        Family::K2Parallel { hex_type } => parallel_basis(*hex_type, zero),
        Family::K2TLinear { t, types } => {
            if *t == 0 {
                return Err(Error::InvalidParameter("t must be at least 1".into()));
            }
            let map = orientation_map(*types)?;
            Ok(t_linear_cell(*t).1.map_linear(map))
        }
        Family::K2Sandwiched { xi } => {
            if xi.is_empty() {
                return Err(Error::EmptyWord);
            }
            let threes = xi.iter().filter(|&&c| c == 3).count() as i64;
            LatticeBasis::new(
                Coord::new(6, 0),
                Coord::new(threes, 5 * xi.len() as i64),
                zero,
            )
        }
        Family::K2Diagonal { axis, eta } => {
            if eta.is_empty() {
                return Err(Error::EmptyWord);
            }
            let alphabet = diagonal_alphabet(*axis)?;
            let canonical: Vec<u8> = eta
                .iter()
                .map(|&c| if c == alphabet[0] { 1 } else { 2 })
                .collect();
            let (_, period) = s3_cells(&canonical, true);
            let map = match axis {
                3 => |c: Coord| c,
                1 => |c: Coord| Coord::new(-c.x1 - c.x2, c.x1),
                2 => |c: Coord| Coord::new(c.x2, -c.x1 - c.x2),
                _ => unreachable!(),
            };
            LatticeBasis::new(map(Coord::new(4, -2)), map(period), zero)
        }
    }
}

fn motif_cache() -> &'static RwLock<HashMap<String, VertexSet>> {
    static CACHE: OnceLock<RwLock<HashMap<String, VertexSet>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Find a family's pattern on its minimal torus by constrained search with
/// the family's translation lattice imposed. Among all solutions the one
/// with fewest vertices (ties broken by vertex ids) is the motif, so
/// duplicate solves produce identical sets. Results are cached per key.
pub fn motif_solve(family: &Family, spec: TorusSpec) -> Result<VertexSet> {
    let key = format!("{family:?}|{}x{}", spec.m, spec.n);
    if let Some(hit) = motif_cache().read().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let basis = pattern_lattice(family)?;
    let predicate = match family {
        Family::PerfectCode { .. } => Predicate::PerfectCode,
        Family::SpdsIsolated | Family::SpdsLines { .. } => Predicate::Spds,
        Family::K3Qpds => Predicate::KQpds(3),
        _ => Predicate::KQpds(2),
    };
    let shape_filter = match family {
        Family::SpdsIsolated => ShapeFilter::AllK1,
        Family::SpdsLines { .. } => ShapeFilter::AllCycles,
        _ => ShapeFilter::None,
    };
    let g = crate::lattice::build_torus(spec)?;
    let mut problem = SearchProblem::new(spec, predicate);
    problem.imposed_symmetry = Some(ImposedSymmetry {
        u: basis.u,
        v: basis.v,
    });
    problem.shape_filter = shape_filter;
    let result = enumerate(&g, &problem)?;
    if result.budget_hit {
        return Err(Error::BudgetExceeded);
    }
    let motif = result
        .solutions
        .into_iter()
        .min_by_key(|s| (s.len(), s.ids()))
        .ok_or(Error::NoMotifFound)?;
    motif_cache()
        .write()
        .expect("cache lock")
        .entry(key)
        .or_insert_with(|| motif.clone());
    Ok(motif)
}

/// A finite patch of a pattern: the generated members together with the
/// core region whose dominator counts are fully determined by them. The
/// members may extend well beyond the core.
#[derive(Debug, Clone, Serialize)]
pub struct Window {
    pub core: BTreeSet<Coord>,
    pub members: BTreeSet<Coord>,
}

/// Finite patch of the stacked-row pattern for a word read once, without
/// wrapping. The core spans the rows whose neighborhoods never reach past
/// the first or last generated letter block.
pub fn sandwich_window(xi: &[u8]) -> Result<Window> {
    if xi.is_empty() {
        return Err(Error::EmptyWord);
    }
    if xi.iter().any(|&c| c != 2 && c != 3) {
        return Err(Error::InvalidParameter(format!(
            "letters of {xi:?} must be family labels 2 or 3"
        )));
    }
    let ell = xi.len() as i64;
    let cells = sandwich_cells(xi, false);
    let mut members = BTreeSet::new();
    for a in -3..=7i64 {
        for &c in &cells {
            members.insert(c.add(Coord::new(6 * a, 0)));
        }
    }
    let mut core = BTreeSet::new();
    for a in 0..=23i64 {
        for b in 0..=5 * ell - 3 {
            core.insert(Coord::new(a, b));
        }
    }
    Ok(Window { core, members })
}

/// Finite patch of the diagonal pattern for a word read once, without
/// wrapping, replicated along the transverse period (4,-2). The functional
/// a + 2b vanishes on the transverse period and grows along the anchor
/// path, so the determined region is the skew band it carves out.
pub fn diagonal_window(eta: &[u8]) -> Result<Window> {
    if eta.is_empty() {
        return Err(Error::EmptyWord);
    }
    if eta.iter().any(|&c| c != 1 && c != 2) {
        return Err(Error::InvalidParameter(format!(
            "letters of {eta:?} must be family labels 1 or 2"
        )));
    }
    if eta.len() < 2 {
        return Err(Error::InvalidParameter(
            "window needs at least two letters".into(),
        ));
    }
    let (cells, _) = s3_cells(eta, false);
    let len = eta.len();
    let mut top = Coord::new(0, 0);
    for k in 0..len - 1 {
        top = top.add(s3_step(eta[k], eta[k + 1]));
    }
    let phi_top = top.x1 + 2 * top.x2;
    let breadth = 3 * len as i64 + 12;
    let mut members = BTreeSet::new();
    for b in -breadth..=breadth {
        for &c in &cells {
            members.insert(c.add(Coord::new(4 * b, -2 * b)));
        }
    }
    let mut core = BTreeSet::new();
    for a in -10..=10i64 {
        for b in -6..=(phi_top + 10) / 2 + 1 {
            let phi = a + 2 * b;
            if (0..=phi_top).contains(&phi) {
                core.insert(Coord::new(a, b));
            }
        }
    }
    Ok(Window { core, members })
}

/// Local validity check for a window: inside the core, every member has
/// exactly one member neighbor and every non-member has one or two.
pub fn window_interior_ok(w: &Window) -> bool {
    if w.core.is_empty() {
        return false;
    }
    for &p in &w.core {
        let member_neighbors = crate::lattice::neighbors_inf(p)
            .iter()
            .filter(|c| w.members.contains(c))
            .count();
        if w.members.contains(&p) {
            if member_neighbors != 1 {
                return false;
            }
        } else if !(1..=2).contains(&member_neighbors) {
            return false;
        }
    }
    true
}

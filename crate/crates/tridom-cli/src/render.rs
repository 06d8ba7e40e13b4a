//! Deterministic SVG figures.
//!
//! The torus is drawn in the plane with basis e1 = (1, 0), e2 = (1/2, sqrt3/2)
//! scaled to pixels. Members of S are filled disks, other vertices small dots,
//! and only edges joining two members or two non-members are drawn, so the
//! complement graph and the component shapes are both visible. Edges that
//! wrap a seam run to the unwrapped ghost position outside the fundamental
//! rectangle. Every number is printed with four decimals.

use tridom::analysis::{gamma_graph, hexagon_types};
use tridom::domination::{components, VertexSet};
use tridom::lattice::{Coord, TorusGraph};

const SCALE: f64 = 36.0;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;
/// Margin around the drawing, in plane units.
const PAD: f64 = 0.8;

#[derive(Debug, Clone, Copy, Default)]
pub struct RenderStyle {
    pub labels: bool,
    pub overlay: bool,
}

type Pt = (f64, f64);

#[derive(Default)]
struct Figure {
    complement_edges: Vec<(Pt, Pt)>,
    member_edges: Vec<(Pt, Pt)>,
    dots: Vec<Pt>,
    disks: Vec<Pt>,
    overlay_edges: Vec<(Pt, Pt)>,
    labels: Vec<(Pt, u8)>,
}

fn plane(c: Coord) -> Pt {
    (c.x1 as f64 + 0.5 * c.x2 as f64, c.x2 as f64 * SQRT3_2)
}

fn fmt(v: f64) -> String {
    let v = if v.abs() < 5e-5 { 0.0 } else { v };
    format!("{v:.4}")
}

fn build_figure(g: &TorusGraph, s: &VertexSet, style: RenderStyle) -> Figure {
    let spec = g.spec();
    let mut fig = Figure::default();
    let forward = [Coord::new(1, 0), Coord::new(0, 1), Coord::new(1, -1)];
    for v in 0..g.vertex_count() {
        let a = g.coord_of(v);
        let pa = plane(a);
        if s.contains(v) {
            fig.disks.push(pa);
        } else {
            fig.dots.push(pa);
        }
        for d in forward {
            let ghost = a.add(d);
            let w = g.project(ghost);
            match (s.contains(v), s.contains(w)) {
                (false, false) => fig.complement_edges.push((pa, plane(ghost))),
                (true, true) => fig.member_edges.push((pa, plane(ghost))),
                _ => {}
            }
        }
    }
    if style.labels {
        if let Ok(hexes) = hexagon_types(g, s) {
            let comps = components(g, s);
            for h in &hexes {
                let vs = &comps[h.component].vertices;
                let a = g.coord_of(vs[0]);
                let d = spec.centered_diff(a, g.coord_of(vs[1]));
                let (ax, ay) = plane(a);
                let (dx, dy) = plane(d);
                fig.labels.push(((ax + dx / 2.0, ay + dy / 2.0), h.hex_type));
            }
        }
    }
    if style.overlay {
        if let Ok(link) = gamma_graph(g, s) {
            for &(i, j) in &link.edges {
                let pa = plane(link.nodes[i].anchor);
                let pb = plane(link.nodes[j].anchor);
                fig.overlay_edges.push((pa, pb));
            }
        }
    }
    fig
}

fn bounds(fig: &Figure) -> (f64, f64, f64, f64) {
    let mut lo = (f64::MAX, f64::MAX);
    let mut hi = (f64::MIN, f64::MIN);
    let mut take = |p: Pt| {
        lo.0 = lo.0.min(p.0);
        lo.1 = lo.1.min(p.1);
        hi.0 = hi.0.max(p.0);
        hi.1 = hi.1.max(p.1);
    };
    for &(a, b) in fig
        .complement_edges
        .iter()
        .chain(&fig.member_edges)
        .chain(&fig.overlay_edges)
    {
        take(a);
        take(b);
    }
    for &p in fig.dots.iter().chain(&fig.disks) {
        take(p);
    }
    for &(p, _) in &fig.labels {
        take(p);
    }
    (lo.0, lo.1, hi.0, hi.1)
}

pub fn render_svg(g: &TorusGraph, s: &VertexSet, style: RenderStyle) -> String {
    let fig = build_figure(g, s, style);
    let (minx, miny, maxx, maxy) = bounds(&fig);
    let width = (maxx - minx + 2.0 * PAD) * SCALE;
    let height = (maxy - miny + 2.0 * PAD) * SCALE;
    // SVG y grows downward; the plane embedding grows upward.
    let tx = |p: Pt| -> Pt { ((p.0 - minx + PAD) * SCALE, (maxy - p.1 + PAD) * SCALE) };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" width=\"{w}\" height=\"{h}\">\n",
        w = fmt(width),
        h = fmt(height),
    ));
    out.push_str(&format!(
        "<rect width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
        fmt(width),
        fmt(height)
    ));
    let line = |out: &mut String, a: Pt, b: Pt, attrs: &str| {
        let (x1, y1) = tx(a);
        let (x2, y2) = tx(b);
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" {attrs}/>\n",
            fmt(x1),
            fmt(y1),
            fmt(x2),
            fmt(y2)
        ));
    };
    let complement_attrs = format!("stroke=\"#7a7a7a\" stroke-width=\"{}\"", fmt(1.2));
    for &(a, b) in &fig.complement_edges {
        line(&mut out, a, b, &complement_attrs);
    }
    let member_attrs = format!(
        "stroke=\"#b23b3b\" stroke-width=\"{}\" stroke-linecap=\"round\"",
        fmt(0.1 * SCALE)
    );
    for &(a, b) in &fig.member_edges {
        line(&mut out, a, b, &member_attrs);
    }
    for &p in &fig.dots {
        let (cx, cy) = tx(p);
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#3d3d3d\"/>\n",
            fmt(cx),
            fmt(cy),
            fmt(0.08 * SCALE)
        ));
    }
    for &p in &fig.disks {
        let (cx, cy) = tx(p);
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#2d6a4f\"/>\n",
            fmt(cx),
            fmt(cy),
            fmt(0.3 * SCALE)
        ));
    }
    let overlay_attrs = format!(
        "stroke=\"#2563eb\" stroke-width=\"{}\" stroke-dasharray=\"{} {}\"",
        fmt(2.4),
        fmt(7.2),
        fmt(4.8)
    );
    for &(a, b) in &fig.overlay_edges {
        line(&mut out, a, b, &overlay_attrs);
    }
    for &(p, digit) in &fig.labels {
        let (x, y) = tx(p);
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"{}\" \
             text-anchor=\"middle\" fill=\"#101010\" paint-order=\"stroke\" \
             stroke=\"#ffffff\" stroke-width=\"{}\">{digit}</text>\n",
            fmt(x),
            fmt(y + 0.16 * SCALE),
            fmt(0.45 * SCALE),
            fmt(3.0)
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use tridom::constructions::{construct, Family, PatternSpec};
    use tridom::lattice::{build_torus, TorusSpec};

    fn pattern(family: Family, m: i64, n: i64) -> (TorusGraph, VertexSet) {
        let spec = TorusSpec::new(m, n).unwrap();
        let g = build_torus(spec).unwrap();
        let s = construct(
            &PatternSpec { family, offset: Coord::new(0, 0) },
            spec,
        )
        .unwrap();
        (g, s)
    }

    #[test]
    fn identical_inputs_give_identical_bytes() {
        let (g, s) = pattern(Family::PerfectCode { mirror: false }, 7, 7);
        let style = RenderStyle { labels: true, overlay: true };
        assert_eq!(render_svg(&g, &s, style), render_svg(&g, &s, style));
    }

    #[test]
    fn empty_set_draws_a_plain_grid() {
        let spec = TorusSpec::new(5, 5).unwrap();
        let g = build_torus(spec).unwrap();
        let s = VertexSet::empty(spec);
        let svg = render_svg(&g, &s, RenderStyle::default());
        assert!(svg.starts_with("<svg "));
        assert!(!svg.contains("#2d6a4f"));
        assert_eq!(svg.matches("fill=\"#3d3d3d\"").count(), 25);
        assert_eq!(svg.matches("<line ").count(), 75);
    }

    #[test]
    fn members_become_disks_and_labels_mark_hexagon_types() {
        let (g, s) = pattern(Family::K2Parallel { hex_type: 2 }, 10, 10);
        let svg = render_svg(&g, &s, RenderStyle { labels: true, overlay: false });
        assert_eq!(svg.matches("fill=\"#2d6a4f\"").count(), s.len());
        assert_eq!(svg.matches("<text ").count(), 10);
        assert!(svg.contains(">2</text>"));
    }

    #[test]
    fn overlay_draws_the_link_graph() {
        let (g, s) = pattern(Family::PerfectCode { mirror: false }, 7, 7);
        let svg = render_svg(&g, &s, RenderStyle { labels: false, overlay: true });
        // 7 components, link graph is 6-regular: 21 dashed edges
        assert_eq!(svg.matches("stroke-dasharray").count(), 21);
    }

    #[test]
    fn every_number_has_exactly_four_decimals() {
        let (g, s) = pattern(Family::K3Qpds, 6, 6);
        let svg = render_svg(&g, &s, RenderStyle { labels: true, overlay: true });
        let bytes = svg.as_bytes();
        for i in 0..bytes.len() {
            if bytes[i] != b'.' {
                continue;
            }
            let digit_before = i > 0 && bytes[i - 1].is_ascii_digit();
            let digit_after = i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit();
            if !(digit_before && digit_after) {
                continue; // dots in URLs and attribute names
            }
            let run = bytes[i + 1..].iter().take_while(|b| b.is_ascii_digit()).count();
            assert_eq!(run, 4, "offset {i}: `{}`", &svg[i.saturating_sub(8)..(i + 6).min(svg.len())]);
        }
    }
}

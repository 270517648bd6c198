//! SVG rendering: one polyline per embedded segment, subtrees colored by
//! group, the top tree in black, connection points as rings.

use std::fmt::Write;

use twolevel_core::{bounding_box, Coord, EmbeddedTree, Instance, Point, TwoLevelTree};

const PALETTE: [&str; 8] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"];
const CANVAS: f64 = 800.0;
const MARGIN: f64 = 20.0;

struct Viewport {
    x0: f64,
    y1: f64,
    scale: f64,
}

impl Viewport {
    fn map(&self, p: &Point) -> (f64, f64) {
        (MARGIN + (p.x.to_f64() - self.x0) * self.scale, MARGIN + (self.y1 - p.y.to_f64()) * self.scale)
    }
}

pub fn render_svg(instance: &Instance, tree: &TwoLevelTree) -> String {
    let mut all = instance.all_points();
    all.extend(tree.connection_points().iter().cloned());
    all.extend(tree.top().vertices().iter().cloned());
    for t in tree.subtrees() {
        all.extend(t.vertices().iter().cloned());
    }
    let b = bounding_box(&all).expect("instances are non-empty");
    let span = Coord::max_of(&b.width(), &b.height()).to_f64();
    let scale = if span > 0.0 { (CANVAS - 2.0 * MARGIN) / span } else { 1.0 };
    let vp = Viewport { x0: b.xmin.to_f64(), y1: b.ymax.to_f64(), scale };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for (i, sub) in tree.subtrees().iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<g class="subtree" data-group="{}" stroke="{color}" stroke-width="2" fill="none">"#,
            i + 1
        );
        segments(&mut out, sub, &vp);
        out.push_str("</g>\n");
    }
    out.push_str("<g class=\"top\" stroke=\"black\" stroke-width=\"3\" stroke-dasharray=\"6 3\" fill=\"none\">\n");
    segments(&mut out, tree.top(), &vp);
    out.push_str("</g>\n");
    for (i, group) in instance.groups().iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        for p in group {
            let (x, y) = vp.map(p);
            let _ = writeln!(out, r#"<circle class="terminal" cx="{x:.2}" cy="{y:.2}" r="4" fill="{color}"/>"#);
        }
    }
    for q in tree.connection_points() {
        let (x, y) = vp.map(q);
        let _ = writeln!(
            out,
            r#"<circle class="connection" cx="{x:.2}" cy="{y:.2}" r="7" fill="none" stroke="black" stroke-width="2"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

fn segments(out: &mut String, t: &EmbeddedTree, vp: &Viewport) {
    for s in t.segments() {
        let (ax, ay) = vp.map(&s.a);
        let (bx, by) = vp.map(&s.b);
        let _ = writeln!(out, r#"<polyline points="{ax:.2},{ay:.2} {bx:.2},{by:.2}"/>"#);
    }
}

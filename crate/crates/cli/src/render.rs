use std::fmt::Write;

use springer_core::cupdiag::CupDiagram;

const STEP: f64 = 40.0;
const TOP: f64 = 30.0;
const DOT: f64 = 4.5;

/// SVG picture of a cup diagram: vertices on a horizontal baseline, cups as
/// lower half circles, rays running to the bottom edge, dots filled.
pub fn svg(a: &CupDiagram) -> String {
    let m = a.m();
    let x = |v: usize| STEP * v as f64;
    let max_r = a.cups().iter().map(|c| (x(c.right) - x(c.left)) / 2.0).fold(0.0, f64::max);
    let bottom = TOP + max_r + 30.0;
    let width = STEP * (m as f64 + 1.0);
    let height = bottom + 10.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"  <title>{a}</title>"#);
    let _ = writeln!(s, r##"  <g stroke="#000" stroke-width="2" fill="none">"##);
    for c in a.cups() {
        let (x1, x2) = (x(c.left), x(c.right));
        let r = (x2 - x1) / 2.0;
        let _ = writeln!(s, r#"    <path d="M {x1} {TOP} A {r} {r} 0 0 0 {x2} {TOP}"/>"#);
    }
    for r in a.rays() {
        let _ = writeln!(s, r#"    <line x1="{0}" y1="{TOP}" x2="{0}" y2="{bottom}"/>"#, x(r.at));
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, r##"  <g fill="#000">"##);
    for c in a.cups().iter().filter(|c| c.dotted) {
        let (x1, x2) = (x(c.left), x(c.right));
        let _ = writeln!(s, r#"    <circle cx="{}" cy="{}" r="{DOT}"/>"#, (x1 + x2) / 2.0, TOP + (x2 - x1) / 2.0);
    }
    for r in a.rays().iter().filter(|r| r.dotted) {
        let _ = writeln!(s, r#"    <circle cx="{}" cy="{}" r="{DOT}"/>"#, x(r.at), (TOP + bottom) / 2.0);
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, r#"  <g font-family="sans-serif" font-size="11" text-anchor="middle">"#);
    for v in 1..=m {
        let _ = writeln!(s, r#"    <text x="{}" y="{}">{v}</text>"#, x(v), TOP - 8.0);
    }
    let _ = writeln!(s, "  </g>\n</svg>");
    s
}

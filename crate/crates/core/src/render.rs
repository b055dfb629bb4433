//! SVG drawing of a diagram: dots on two horizontal rows, joins as cubic
//! curves. Output depends only on the diagram.

use std::fmt::Write;

use crate::diagram::{Diagram, Dot, Row};

const SPACING: f64 = 40.0;
const MARGIN: f64 = 30.0;
const DEPTH_PER_DOT: f64 = 12.0;
const DOT_RADIUS: f64 = 4.0;

pub fn diagram_svg(d: &Diagram) -> String {
    let k = d.strings();
    let arrows = d.arrows();
    let widest_cup = arrows
        .iter()
        .filter(|a| !a.is_through())
        .map(|a| a.head.index - a.tail.index)
        .max()
        .unwrap_or(0);
    let gap = (2.0 * DEPTH_PER_DOT * widest_cup as f64 + SPACING).max(2.0 * SPACING);
    let width = 2.0 * MARGIN + SPACING * (k.saturating_sub(1)) as f64;
    let height = 2.0 * MARGIN + gap;
    let top_y = MARGIN;
    let bottom_y = MARGIN + gap;
    let x_of = |dot: Dot| MARGIN + SPACING * (dot.index - 1) as f64;
    let y_of = |dot: Dot| match dot.row {
        Row::Top => top_y,
        Row::Bottom => bottom_y,
    };

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(svg, r#"  <g fill="none" stroke="black" stroke-width="2">"#).unwrap();
    for a in &arrows {
        let (x1, y1) = (x_of(a.tail), y_of(a.tail));
        let (x2, y2) = (x_of(a.head), y_of(a.head));
        let (c1y, c2y) = if a.is_through() {
            let mid = (top_y + bottom_y) / 2.0;
            (mid, mid)
        } else {
            let depth = DEPTH_PER_DOT * (a.head.index - a.tail.index) as f64;
            let bend = if a.is_top() { depth } else { -depth };
            (y1 + bend, y2 + bend)
        };
        writeln!(
            svg,
            r#"    <path d="M {x1} {y1} C {x1} {c1y}, {x2} {c2y}, {x2} {y2}"/>"#
        )
        .unwrap();
    }
    writeln!(svg, "  </g>").unwrap();
    writeln!(svg, r#"  <g fill="black">"#).unwrap();
    for row in [Row::Top, Row::Bottom] {
        for index in 1..=k {
            let dot = Dot { row, index };
            writeln!(
                svg,
                r#"    <circle cx="{}" cy="{}" r="{DOT_RADIUS}"/>"#,
                x_of(dot),
                y_of(dot)
            )
            .unwrap();
        }
    }
    writeln!(svg, "  </g>").unwrap();
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_svg_shape() {
        let svg = diagram_svg(&Diagram::generator(3, 1).unwrap());
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<path").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg, diagram_svg(&Diagram::generator(3, 1).unwrap()));
        assert!(svg.contains(r#"<path d="M 30 30 C 30 42, 70 42, 70 30"/>"#));
    }
}

//! SVG rendering of a tiling with optional row-crossing overlay.
//!
//! Output depends only on the tiling and the overlay flag. Geometry is
//! computed in integer pixels, so identical input yields identical bytes.

use std::fmt::Write;

use aztec_core::aztec::{row_crossings, Orientation, Tiling};
use aztec_core::Result;

/// Pixels per unit of the lattice.
pub const CELL_PX: i64 = 40;
pub const MARGIN_PX: i64 = 20;
pub const HORIZONTAL_FILL: &str = "#f2c14e";
pub const VERTICAL_FILL: &str = "#5b8fd6";
pub const DOMINO_STROKE: &str = "#1f1f1f";
pub const DOMINO_STROKE_WIDTH: i64 = 2;
pub const PATH_STROKE: &str = "#c0392b";
pub const PATH_STROKE_WIDTH: i64 = 4;
pub const PATH_VERTEX_RADIUS: i64 = 4;

struct Frame {
    half_extent: i64,
}

impl Frame {
    fn px_x(&self, x: i64) -> i64 {
        MARGIN_PX + (x + self.half_extent) * CELL_PX
    }

    /// Lattice y grows upward, SVG y downward.
    fn px_y(&self, y: i64) -> i64 {
        MARGIN_PX + (self.half_extent - y) * CELL_PX
    }

    fn size(&self) -> i64 {
        2 * MARGIN_PX + 2 * self.half_extent * CELL_PX
    }
}

pub fn render_tiling(t: &Tiling, overlay_paths: bool) -> Result<String> {
    let n = t.order() as i64;
    let frame = Frame { half_extent: n + 1 };
    let size = frame.size();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>"#
    );
    let _ = writeln!(
        out,
        r#"<g stroke="{DOMINO_STROKE}" stroke-width="{DOMINO_STROKE_WIDTH}">"#
    );
    for d in t.dominoes() {
        let (w, h, fill) = match d.orientation {
            Orientation::Horizontal => (2, 1, HORIZONTAL_FILL),
            Orientation::Vertical => (1, 2, VERTICAL_FILL),
        };
        let x = frame.px_x(d.anchor.x);
        let y = frame.px_y(d.anchor.y + h);
        let _ = writeln!(
            out,
            r#"<rect x="{x}" y="{y}" width="{}" height="{}" fill="{fill}"/>"#,
            w * CELL_PX,
            h * CELL_PX
        );
    }
    out.push_str("</g>\n");
    if overlay_paths {
        // crossing point (x, h) sits at height h - n + 1/2 in tiling coordinates
        let half = CELL_PX / 2;
        let _ = writeln!(
            out,
            r#"<g fill="none" stroke="{PATH_STROKE}" stroke-width="{PATH_STROKE_WIDTH}" stroke-linejoin="round">"#
        );
        let mut dots = String::new();
        for rc in row_crossings(t)? {
            let points: Vec<String> = rc
                .vertices()
                .iter()
                .map(|&(x, h)| {
                    let (px, py) = (frame.px_x(x), frame.px_y(h - n) - half);
                    let _ = writeln!(
                        dots,
                        r#"<circle cx="{px}" cy="{py}" r="{PATH_VERTEX_RADIUS}" fill="{PATH_STROKE}"/>"#
                    );
                    format!("{px},{py}")
                })
                .collect();
            let _ = writeln!(
                out,
                r#"<polyline data-row="{}" points="{}"/>"#,
                rc.row,
                points.join(" ")
            );
        }
        out.push_str("</g>\n");
        out.push_str(&dots);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

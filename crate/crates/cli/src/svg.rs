//! SVG point plots: one dot per entry, no axes, optional grid lines.

use std::fmt::Write as _;

use letgraph::{Gridding, Permutation};

const UNIT: f64 = 24.0;
const MARGIN: f64 = 12.0;

/// Plot of `pi` with the point for position `i` at `(i, pi(i))`. A gridding
/// adds its outer frame and every cut: `s + 1` vertical and `t + 1`
/// horizontal lines for `s` columns and `t` rows.
pub fn plot(pi: &Permutation, gridding: Option<&Gridding>) -> String {
    let n = pi.len();
    let side = (n as f64 + 1.0) * UNIT + 2.0 * MARGIN;
    let x = |v: f64| MARGIN + v * UNIT;
    let y = |v: f64| MARGIN + (n as f64 + 1.0 - v) * UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    if let Some(g) = gridding {
        let lo = 0.5;
        let hi = n as f64 + 0.5;
        let cuts = |c: &[usize]| {
            let mut v = vec![lo];
            v.extend(c.iter().map(|&c| c as f64 + 0.5));
            v.push(hi);
            v
        };
        for c in cuts(&g.col_cuts) {
            let _ = writeln!(
                s,
                r#"  <line class="vertical" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
                x(c),
                y(lo),
                x(c),
                y(hi)
            );
        }
        for r in cuts(&g.row_cuts) {
            let _ = writeln!(
                s,
                r#"  <line class="horizontal" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1"/>"#,
                x(lo),
                y(r),
                x(hi),
                y(r)
            );
        }
    }
    for (i, &v) in pi.values().iter().enumerate() {
        let _ = writeln!(
            s,
            r#"  <circle class="point" cx="{}" cy="{}" r="{}" fill="black"/>"#,
            x(i as f64 + 1.0),
            y(v as f64),
            UNIT / 6.0
        );
    }
    s.push_str("</svg>\n");
    s
}

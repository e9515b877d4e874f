//! Distant-squares point sets.
//!
//! Square `i` (for `i = 0..=m`) has edge `2^{i/2}`, so its diagonal equals
//! the edge of square `i + 1`. Sweeping ε upward, exactly one square is a
//! hollow 4-cycle at every scale in `[1, 2^{m/2})`, yet the one-dimensional
//! hole count never changes.

use std::fmt::Write as _;

use crate::error::{Error, Result};

pub fn square_edge(i: usize) -> f64 {
    (i as f64 / 2.0).exp2()
}

/// Corners of `m + 1` axis-aligned squares laid out along the x-axis,
/// `separation_factor · 2^{m/2}` apart. Square `i` owns points `4i..4i+4`
/// in the order (0,0), (e,0), (e,e), (0,e).
pub fn gen_squares(m: usize, separation_factor: f64) -> Result<Vec<[f64; 2]>> {
    if !(separation_factor >= 10.0) {
        return Err(Error::Argument(format!(
            "separation factor must be >= 10, got {separation_factor}"
        )));
    }
    let spacing = separation_factor * square_edge(m);
    let mut pts = Vec::with_capacity(4 * (m + 1));
    for i in 0..=m {
        let x0 = i as f64 * spacing;
        let e = square_edge(i);
        pts.extend([[x0, 0.0], [x0 + e, 0.0], [x0 + e, e], [x0, e]]);
    }
    Ok(pts)
}

/// Points in the plain-text point-cloud format.
pub fn points_to_text(points: &[[f64; 2]]) -> String {
    let mut s = String::new();
    for p in points {
        let _ = writeln!(s, "{} {}", p[0], p[1]);
    }
    s
}

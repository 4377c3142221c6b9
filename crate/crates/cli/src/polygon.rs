//! Newton polygon output: a TSV point list or a small SVG drawing.

use std::fmt::Write as _;

use newton_core::{lower_hull, BigInt, ValuationProfile};
use num_traits::ToPrimitive;

/// `i<TAB>v` for every finite-valuation coefficient, then the hull vertices
/// after a `#hull` line.
pub fn to_tsv(profile: &ValuationProfile) -> String {
    let mut out = String::new();
    for (i, v) in points(profile) {
        let _ = writeln!(out, "{i}\t{v}");
    }
    out.push_str("#hull\n");
    for v in lower_hull(profile) {
        let _ = writeln!(out, "{}\t{}", v.i, v.v);
    }
    out
}

fn points(profile: &ValuationProfile) -> Vec<(usize, BigInt)> {
    profile
        .vals()
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.as_finite().map(|v| (i, v.clone())))
        .collect()
}

const WIDTH: i64 = 480;
const HEIGHT: i64 = 360;
const MARGIN: i64 = 48;

/// SVG with the profile points, the lower hull and labelled axes. Output
/// depends only on the profile.
pub fn to_svg(profile: &ValuationProfile) -> String {
    let pts: Vec<(i64, i64)> = points(profile)
        .into_iter()
        .map(|(i, v)| (i as i64, v.to_i64().expect("valuation fits in i64")))
        .collect();
    let hull: Vec<(i64, i64)> = lower_hull(profile)
        .iter()
        .map(|v| (v.i as i64, v.v.to_i64().expect("valuation fits in i64")))
        .collect();
    let n = profile.n() as i64;
    let vmin = pts.iter().map(|p| p.1).min().unwrap_or(0).min(0);
    let vmax = pts.iter().map(|p| p.1).max().unwrap_or(0).max(vmin + 1);
    let plot_w = WIDTH - 2 * MARGIN;
    let plot_h = HEIGHT - 2 * MARGIN;
    // Integer pixel coordinates keep the bytes reproducible.
    let sx = |i: i64| MARGIN + i * plot_w / n.max(1);
    let sy = |v: i64| HEIGHT - MARGIN - (v - vmin) * plot_h / (vmax - vmin);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let (x0, y0) = (sx(0), sy(vmin));
    let _ = writeln!(
        s,
        r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#,
        sx(n)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{}" stroke="black"/>"#,
        sy(vmax)
    );
    for i in 0..=n {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="11" text-anchor="middle">{i}</text>"#,
            sx(i),
            y0 + 16
        );
    }
    for v in [vmin, vmax] {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="11" text-anchor="end">{v}</text>"#,
            x0 - 6,
            sy(v) + 4
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">i</text>"#,
        WIDTH / 2,
        HEIGHT - 10
    );
    let _ = writeln!(
        s,
        r#"<text x="14" y="{}" font-size="12" text-anchor="middle" transform="rotate(-90 14 {})">v(a_i)</text>"#,
        HEIGHT / 2,
        HEIGHT / 2
    );
    let path: Vec<String> = hull
        .iter()
        .map(|&(i, v)| format!("{},{}", sx(i), sy(v)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
        path.join(" ")
    );
    for &(i, v) in &pts {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{}" r="4" fill="black"><title>({i}, {v})</title></circle>"#,
            sx(i),
            sy(v)
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(v: &[Option<i64>]) -> ValuationProfile {
        ValuationProfile::from_i64s(v).unwrap()
    }

    #[test]
    fn tsv_examples() {
        let x = prof(&[Some(3), Some(2), Some(5), None, None, Some(0)]);
        assert_eq!(
            to_tsv(&x),
            "0\t3\n1\t2\n2\t5\n5\t0\n#hull\n0\t3\n1\t2\n5\t0\n"
        );
        let e = prof(&[Some(1), None, None, Some(0)]);
        assert_eq!(to_tsv(&e), "0\t1\n3\t0\n#hull\n0\t1\n3\t0\n");
        let m = prof(&[None, None, None, None, None, Some(0)]);
        assert_eq!(to_tsv(&m), "5\t0\n#hull\n5\t0\n");
    }

    #[test]
    fn svg_is_deterministic() {
        let x = prof(&[Some(3), Some(2), Some(5), None, None, Some(0)]);
        let a = to_svg(&x);
        assert_eq!(a, to_svg(&x));
        assert!(a.starts_with("<svg"));
        assert_eq!(a.matches("<circle").count(), 4);
        assert!(a.contains("<polyline"));
        let z = prof(&[Some(-2), Some(-2), None, None, None, Some(0)]);
        assert!(to_svg(&z).contains("<polyline"));
    }
}

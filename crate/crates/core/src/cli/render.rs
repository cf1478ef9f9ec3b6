use std::fmt::Write as _;

use crate::exactgeom::{Drawing, Rational};

const SIG_DIGITS: usize = 12;

fn num(r: &Rational) -> String {
    r.to_significant(SIG_DIGITS)
}

/// SVG with every edge as a `<line>` (in index order) followed by every
/// vertex as a `<circle>`. The drawing is scaled uniformly to `width`
/// pixels with a 5% margin; y points up.
pub fn to_svg(d: &Drawing, width: u32) -> String {
    let xs = d.points.iter().map(|p| &p.x);
    let ys = d.points.iter().map(|p| &p.y);
    let (xlo, xhi) = bounds(xs);
    let (ylo, yhi) = bounds(ys);
    let w = Rational::integer(width);
    let margin = &w / Rational::integer(20);
    let inner = &w - &margin * Rational::integer(2);
    let span = (&xhi - &xlo).max(&yhi - &ylo);
    let scale = if span.is_zero() { Rational::one() } else { &inner / &span };
    let height = &(&yhi - &ylo) * &scale + &margin * Rational::integer(2);
    let sx = |x: &Rational| &margin + (x - &xlo) * &scale;
    let sy = |y: &Rational| &margin + (&yhi - y) * &scale;
    let coords: Vec<(String, String)> = d.points.iter().map(|p| (num(&sx(&p.x)), num(&sy(&p.y)))).collect();
    let radius = num(&(&w / Rational::integer(200)));

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{h}" viewBox="0 0 {width} {h}">"#,
        h = num(&height)
    )
    .unwrap();
    writeln!(out, r#"<g stroke="black" stroke-width="0.5" stroke-opacity="0.6">"#).unwrap();
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            let ((x1, y1), (x2, y2)) = (&coords[i], &coords[j]);
            writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
        }
    }
    writeln!(out, "</g>\n<g fill=\"crimson\">").unwrap();
    for (x, y) in &coords {
        writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{radius}"/>"#).unwrap();
    }
    writeln!(out, "</g>\n</svg>").unwrap();
    out
}

fn bounds<'a>(mut values: impl Iterator<Item = &'a Rational>) -> (Rational, Rational) {
    let Some(first) = values.next() else {
        return (Rational::zero(), Rational::zero());
    };
    values.fold((first.clone(), first.clone()), |(lo, hi), v| (lo.min(v.clone()), hi.max(v.clone())))
}

//! SVG pictures of planar arrangements: lines clipped to a box around the
//! vertices, bounded regions shaded and labelled `F1..Fr`, vertices dotted.

use num_traits::{ToPrimitive, Zero};
use svg::node::element::{Circle, Line, Polygon, Rectangle, Text};
use svg::Document;

use arrangement_pairing::arrangement::{vertices, Arrangement, BoundedComplex};
use arrangement_pairing::rational::{int, Rational};

const CANVAS: f64 = 600.0;
const PAD: f64 = 20.0;

/// Axis-aligned box `[x0, x1] × [y0, y1]` with exact corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub x0: Rational,
    pub x1: Rational,
    pub y0: Rational,
    pub y1: Rational,
}

impl Frame {
    /// Smallest box around the arrangement's vertices, grown by a quarter of
    /// its larger side (at least 1) on every side.
    pub fn around(arr: &Arrangement) -> Frame {
        let pts: Vec<Vec<Rational>> = vertices(arr).into_iter().map(|v| v.point).collect();
        if pts.is_empty() {
            return Frame { x0: int(-1), x1: int(1), y0: int(-1), y1: int(1) };
        }
        let min = |k: usize| pts.iter().map(|p| p[k].clone()).min().expect("nonempty");
        let max = |k: usize| pts.iter().map(|p| p[k].clone()).max().expect("nonempty");
        let (x0, x1, y0, y1) = (min(0), max(0), min(1), max(1));
        let side = (&x1 - &x0).max(&y1 - &y0);
        let margin = (side / int(4)).max(int(1));
        Frame { x0: x0 - &margin, x1: x1 + &margin, y0: y0 - &margin, y1: y1 + margin }
    }

    fn contains(&self, x: &Rational, y: &Rational) -> bool {
        *x >= self.x0 && *x <= self.x1 && *y >= self.y0 && *y <= self.y1
    }

    /// The segment of `a·x + b·y + c = 0` inside the box, if any.
    pub fn clip(&self, a: &Rational, b: &Rational, c: &Rational) -> Option<[(Rational, Rational); 2]> {
        let mut hits: Vec<(Rational, Rational)> = Vec::new();
        if !b.is_zero() {
            for x in [&self.x0, &self.x1] {
                let y = -(a * x + c) / b;
                hits.push((x.clone(), y));
            }
        }
        if !a.is_zero() {
            for y in [&self.y0, &self.y1] {
                let x = -(b * y + c) / a;
                hits.push((x, y.clone()));
            }
        }
        hits.retain(|(x, y)| self.contains(x, y));
        hits.sort();
        hits.dedup();
        let first = hits.first()?.clone();
        let last = hits.last()?.clone();
        (first != last).then_some([first, last])
    }

    fn to_canvas(&self, x: &Rational, y: &Rational) -> (f64, f64) {
        let f = |v: Rational| v.to_f64().unwrap_or(0.0);
        let w = f(&self.x1 - &self.x0);
        let h = f(&self.y1 - &self.y0);
        let scale = (CANVAS - 2.0 * PAD) / w.max(h);
        let px = PAD + f(x - &self.x0) * scale;
        let py = CANVAS - PAD - f(y - &self.y0) * scale;
        (px, py)
    }
}

pub fn render(arr: &Arrangement, complex: &BoundedComplex) -> String {
    let frame = Frame::around(arr);
    let mut doc = Document::new()
        .set("viewBox", (0, 0, CANVAS as i64, CANVAS as i64))
        .set("width", CANVAS as i64)
        .set("height", CANVAS as i64)
        .add(Rectangle::new().set("width", "100%").set("height", "100%").set("fill", "white"));

    for (i, region) in complex.regions().iter().enumerate() {
        let pts: Vec<(f64, f64)> =
            region.vertices().iter().map(|v| frame.to_canvas(&v.point[0], &v.point[1])).collect();
        let n = pts.len() as f64;
        let cx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let cy = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let mut ordered = pts.clone();
        ordered.sort_by(|p, q| {
            let ap = (p.1 - cy).atan2(p.0 - cx);
            let aq = (q.1 - cy).atan2(q.0 - cx);
            ap.total_cmp(&aq)
        });
        let points: Vec<String> = ordered.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        doc = doc
            .add(
                Polygon::new()
                    .set("points", points.join(" "))
                    .set("fill", "#cfe0f5")
                    .set("stroke", "none"),
            )
            .add(
                Text::new(format!("F{}", i + 1))
                    .set("x", format!("{cx:.2}"))
                    .set("y", format!("{cy:.2}"))
                    .set("font-family", "sans-serif")
                    .set("font-size", 16)
                    .set("text-anchor", "middle")
                    .set("dominant-baseline", "middle"),
            );
    }

    for (i, h) in arr.hyperplanes().iter().enumerate() {
        let n = h.normal();
        if let Some([p, q]) = frame.clip(&n[0], &n[1], h.offset()) {
            let (x1, y1) = frame.to_canvas(&p.0, &p.1);
            let (x2, y2) = frame.to_canvas(&q.0, &q.1);
            doc = doc.add(
                Line::new()
                    .set("x1", format!("{x1:.2}"))
                    .set("y1", format!("{y1:.2}"))
                    .set("x2", format!("{x2:.2}"))
                    .set("y2", format!("{y2:.2}"))
                    .set("stroke", "black")
                    .set("stroke-width", 1.5)
                    .set("data-hyperplane", i + 1),
            );
        }
    }

    for v in vertices(arr) {
        let (x, y) = frame.to_canvas(&v.point[0], &v.point[1]);
        doc = doc.add(
            Circle::new()
                .set("cx", format!("{x:.2}"))
                .set("cy", format!("{y:.2}"))
                .set("r", 3.5)
                .set("fill", "black"),
        );
    }
    doc.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use arrangement_pairing::arrangement::bounded_complex;
    use arrangement_pairing::fixtures;
    use arrangement_pairing::rational::frac;

    #[test]
    fn frame_contains_vertices_with_margin() {
        let f = Frame::around(&fixtures::fig1());
        assert_eq!(f, Frame { x0: int(-2), x1: int(2), y0: int(-2), y1: int(2) });
    }

    #[test]
    fn clipping() {
        let f = Frame { x0: int(-2), x1: int(2), y0: int(-2), y1: int(2) };
        // y = x
        let seg = f.clip(&int(-1), &int(1), &int(0)).unwrap();
        assert_eq!(seg, [(int(-2), int(-2)), (int(2), int(2))]);
        // x = 1/2
        let seg = f.clip(&int(1), &int(0), &frac(-1, 2)).unwrap();
        assert_eq!(seg, [(frac(1, 2), int(-2)), (frac(1, 2), int(2))]);
        // x = 5 misses the box
        assert!(f.clip(&int(1), &int(0), &int(-5)).is_none());
    }

    #[test]
    fn picture_has_labels_and_dots() {
        let arr = fixtures::fig1();
        let svg = render(&arr, &bounded_complex(&arr));
        let labels: Vec<&str> = svg
            .split("<text")
            .skip(1)
            .map(|t| t.split('>').nth(1).unwrap().trim_start().split('<').next().unwrap().trim())
            .collect();
        assert_eq!(labels, ["F1", "F2", "F3", "F4"]);
        assert_eq!(svg.matches("<polygon").count(), 4);
        assert_eq!(svg.matches("<circle").count(), 7);
        assert_eq!(svg.matches("<line").count(), 5);
    }
}

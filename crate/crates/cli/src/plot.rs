//! SVG and text renderings of step functions and of the permutation `(·)`.

use std::fmt::Write as _;

use gsf_core::{Arrangement, ExtRational, PermutationTables, Rational, StepFunction};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 30.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Axis annotations of a step plot.
pub struct Axes<'a> {
    pub title: &'a str,
    pub x_label: &'a str,
    pub y_label: &'a str,
}

struct Frame {
    x_end: f64,
    y_max: f64,
}

impl Frame {
    fn new(f: &StepFunction) -> Self {
        let last = f.breakpoints().last().map_or(0.0, Rational::to_f64);
        let x_end = if last > 0.0 { last * 1.2 } else { 1.0 };
        let top = f.values().iter().map(Rational::to_f64).fold(0.0, f64::max);
        Frame { x_end, y_max: if top > 0.0 { top } else { 1.0 } }
    }

    fn x(&self, v: f64) -> f64 {
        LEFT + v / self.x_end * (WIDTH - LEFT - RIGHT)
    }

    fn y(&self, v: f64) -> f64 {
        HEIGHT - BOTTOM - v / self.y_max * (HEIGHT - TOP - BOTTOM)
    }
}

fn svg_open(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, r#"<title>{}</title>"#, escape(title));
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#, WIDTH / 2.0, escape(title));
}

/// A right-continuous staircase: filled dots at left ends, open dots at right ends, and
/// dashed drops at the breakpoints.
pub fn step_svg(f: &StepFunction, axes: &Axes) -> String {
    let fr = Frame::new(f);
    let mut out = String::new();
    svg_open(&mut out, axes.title);
    let (x0, y0) = (fr.x(0.0), fr.y(0.0));
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1">"#);
    let _ = writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}"/>"#, WIDTH - RIGHT);
    let _ = writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{TOP}"/>"#);
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g class="x-ticks" text-anchor="middle">"#);
    for b in f.breakpoints() {
        let x = fr.x(b.to_f64());
        let _ = writeln!(out, r#"<line x1="{x}" y1="{y0}" x2="{x}" y2="{}" stroke="black"/>"#, y0 + 5.0);
        let _ = writeln!(out, r#"<text x="{x}" y="{}">{}</text>"#, y0 + 18.0, escape(&b.to_string()));
    }
    let _ = writeln!(out, "</g>");
    let mut levels: Vec<&Rational> = f.values().iter().collect();
    levels.sort();
    levels.dedup();
    let _ = writeln!(out, r#"<g class="y-ticks" text-anchor="end">"#);
    for v in levels {
        let y = fr.y(v.to_f64());
        let _ = writeln!(out, r#"<line x1="{}" y1="{y}" x2="{x0}" y2="{y}" stroke="black"/>"#, x0 - 5.0);
        let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, x0 - 8.0, y + 4.0, escape(&v.to_string()));
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r#"<g class="steps" stroke="steelblue" stroke-width="2" fill="steelblue">"#);
    let pieces = f.pieces();
    for (k, p) in pieces.iter().enumerate() {
        let (xa, y) = (fr.x(p.lo.to_f64()), fr.y(p.value.to_f64()));
        let xb = match &p.hi {
            ExtRational::Finite(h) => fr.x(h.to_f64()),
            ExtRational::Infinity => WIDTH - RIGHT,
        };
        let _ = writeln!(out, r#"<line x1="{xa}" y1="{y}" x2="{xb}" y2="{y}"/>"#);
        let _ = writeln!(out, r#"<circle cx="{xa}" cy="{y}" r="3.5"/>"#);
        if let (ExtRational::Finite(_), Some(next)) = (&p.hi, pieces.get(k + 1)) {
            let _ = writeln!(out, r#"<circle cx="{xb}" cy="{y}" r="3.5" fill="white"/>"#);
            let _ = writeln!(
                out,
                r#"<line x1="{xb}" y1="{y}" x2="{xb}" y2="{}" stroke-dasharray="4 3" stroke-width="1"/>"#,
                fr.y(next.value.to_f64())
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#, (x0 + WIDTH - RIGHT) / 2.0, HEIGHT - 15.0, escape(axes.x_label));
    let _ = writeln!(
        out,
        r#"<text x="20" y="{}" text-anchor="middle" transform="rotate(-90 20 {})">{}</text>"#,
        (TOP + y0) / 2.0,
        (TOP + y0) / 2.0,
        escape(axes.y_label)
    );
    out.push_str("</svg>\n");
    out
}

/// Two rows of nodes, `E_i` on top and `F_j` below, with an edge from `i` to `(i)`.
pub fn permutation_svg(arr: &Arrangement, title: &str) -> String {
    let k = arr.kappa();
    let pt = PermutationTables::build(arr);
    let mut out = String::new();
    svg_open(&mut out, title);
    let step = (WIDTH - LEFT - RIGHT) / (k.max(2) - 1) as f64;
    let x = |i: usize| if k == 1 { WIDTH / 2.0 } else { LEFT + i as f64 * step };
    let (top, bottom) = (120.0, 300.0);
    let _ = writeln!(out, r#"<text x="20" y="{}">E</text><text x="20" y="{}">F</text>"#, top + 4.0, bottom + 4.0);
    let _ = writeln!(out, r#"<g class="edges" stroke="gray">"#);
    for (i, &j) in pt.pi.iter().enumerate() {
        let _ = writeln!(out, r#"<line x1="{}" y1="{top}" x2="{}" y2="{bottom}"/>"#, x(i), x(j));
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="nodes" text-anchor="middle">"#);
    for i in 0..k {
        let xi = x(i);
        let _ = writeln!(out, r#"<circle cx="{xi}" cy="{top}" r="5" fill="black"/>"#);
        let _ = writeln!(out, r#"<text x="{xi}" y="{}">{i}</text>"#, top - 30.0);
        let _ = writeln!(out, r#"<text x="{xi}" y="{}">{}</text>"#, top - 14.0, escape(&arr.e_sets()[i].to_string()));
        let _ = writeln!(out, r#"<circle cx="{xi}" cy="{bottom}" r="5" fill="black"/>"#);
        let _ = writeln!(out, r#"<text x="{xi}" y="{}">{i}</text>"#, bottom + 22.0);
        let _ = writeln!(out, r#"<text x="{xi}" y="{}">{}</text>"#, bottom + 38.0, escape(&arr.f_sets()[i].to_string()));
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

const COLUMNS: usize = 48;

/// A monospace staircase: one row per distinct value, highest first.
pub fn step_ascii(f: &StepFunction) -> String {
    let fr = Frame::new(f);
    let col_of = |v: f64| ((v / fr.x_end) * COLUMNS as f64).round() as usize;
    let mut levels: Vec<&Rational> = f.values().iter().collect();
    levels.sort();
    levels.dedup();
    levels.reverse();
    let names: Vec<String> = levels.iter().map(|v| v.to_string()).collect();
    let pad = names.iter().map(String::len).max().unwrap_or(1);
    let pieces = f.pieces();
    let mut out = String::new();
    for (v, name) in levels.iter().zip(&names) {
        let mut row = vec![' '; COLUMNS];
        for p in pieces.iter().filter(|p| &&p.value == v) {
            let a = col_of(p.lo.to_f64());
            let b = match &p.hi {
                ExtRational::Finite(h) => col_of(h.to_f64()),
                ExtRational::Infinity => COLUMNS,
            };
            row.iter_mut().take(b.max(a + 1).min(COLUMNS)).skip(a).for_each(|c| *c = '#');
        }
        let _ = writeln!(out, "{name:>pad$} |{}", row.into_iter().collect::<String>().trim_end());
    }
    let mut axis = vec!['-'; COLUMNS];
    let mut labels = vec![' '; COLUMNS + 8];
    let mut free = 0;
    for b in f.breakpoints() {
        let c = col_of(b.to_f64()).min(COLUMNS - 1);
        axis[c] = '+';
        let text = b.to_string();
        if c >= free && c + text.len() <= labels.len() {
            labels[c..c + text.len()].iter_mut().zip(text.chars()).for_each(|(l, ch)| *l = ch);
            free = c + text.len() + 1;
        }
    }
    let _ = writeln!(out, "{:pad$} +{}", "", axis.into_iter().collect::<String>());
    let _ = writeln!(out, "{:pad$}  {}", "", labels.into_iter().collect::<String>().trim_end());
    out
}

/// `(·)`, `⟨·⟩`, `i` and `j` as aligned rows.
pub fn permutation_ascii(arr: &Arrangement) -> String {
    let pt = PermutationTables::build(arr);
    let k = arr.kappa();
    let width = k.to_string().len().max(2);
    let row = |name: &str, v: &[usize]| {
        let cells: Vec<String> = v.iter().map(|x| format!("{x:>width$}")).collect();
        format!("{name:>6} {}\n", cells.join(" "))
    };
    let idx: Vec<usize> = (0..k).collect();
    let mut out = row("k", &idx);
    out.push_str(&row("(k)", &pt.pi));
    out.push_str(&row("<k>", &pt.pi_inv));
    out.push_str(&row("i(k)", &pt.i_map));
    out.push_str(&row("j(k)", &pt.j_map));
    out
}

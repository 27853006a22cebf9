//! Closed-braid diagrams as ASCII art or SVG.
//!
//! Strands run top to bottom, one crossing per row band in letter order.
//! Closure arcs leave the top of each strand, run down the right-hand side
//! and re-enter at the bottom of the same position; strand 1 gets the
//! outermost arc so the arcs never cross.
//!
//! ASCII glyphs:
//!
//! ```text
//! |      strand or closure arc, vertical
//! -      closure arc, horizontal
//! +      closure arc corner
//! \ /    the four arms of a crossing
//! /      crossing centre of a +1 letter (the right-hand strand passes over)
//! \      crossing centre of a -1 letter (the left-hand strand passes over)
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use crate::braid::{BraidWord, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            other => Err(format!("unknown format {other:?}, expected ascii or svg")),
        }
    }
}

pub fn render_diagram(word: &BraidWord, format: Format) -> String {
    match format {
        Format::Ascii => render_ascii(word),
        Format::Svg => render_svg(word),
    }
}

struct Canvas {
    rows: Vec<Vec<char>>,
    width: usize,
}

impl Canvas {
    fn new(width: usize) -> Self {
        Canvas {
            rows: Vec::new(),
            width,
        }
    }

    fn push_row(&mut self) -> &mut Vec<char> {
        self.rows.push(vec![' '; self.width]);
        self.rows.last_mut().unwrap()
    }

    fn finish(self) -> String {
        let mut out = String::new();
        for row in self.rows {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

pub fn render_ascii(word: &BraidWord) -> String {
    let m = word.strands();
    let col = |p: usize| 4 * (p - 1);
    let arc_col = |p: usize| 4 * (m - 1) + 2 + 2 * (m - p);
    let mut canvas = Canvas::new(arc_col(1) + 1);

    let draw_arc = |row: &mut Vec<char>, p: usize| {
        row[col(p)] = '+';
        for c in &mut row[col(p) + 1..arc_col(p)] {
            *c = '-';
        }
        row[arc_col(p)] = '+';
    };

    // top of the closure: strand p turns right on row p - 1
    for turning in 1..=m {
        let row = canvas.push_row();
        for p in 1..turning {
            row[col(p)] = '|';
            row[arc_col(p)] = '|';
        }
        draw_arc(row, turning);
    }

    let verticals = |row: &mut Vec<char>, skip: Option<usize>| {
        for p in 1..=m {
            if skip != Some(p) && skip.map(|i| i + 1) != Some(p) {
                row[col(p)] = '|';
            }
            row[arc_col(p)] = '|';
        }
    };

    if word.is_empty() {
        verticals(canvas.push_row(), None);
    }
    for g in word.letters() {
        let i = g.index();
        let c = col(i);
        let centre = match g.sign() {
            Sign::Pos => '/',
            Sign::Neg => '\\',
        };
        for (left, mid, right) in [('\\', ' ', '/'), (' ', centre, ' '), ('/', ' ', '\\')] {
            let row = canvas.push_row();
            verticals(row, Some(i));
            row[c + 1] = left;
            row[c + 2] = mid;
            row[c + 3] = right;
        }
    }

    // bottom of the closure, mirrored: strand m turns first
    for turning in (1..=m).rev() {
        let row = canvas.push_row();
        for p in 1..turning {
            row[col(p)] = '|';
            row[arc_col(p)] = '|';
        }
        draw_arc(row, turning);
    }

    canvas.finish()
}

const PITCH: usize = 40;
const LEVEL: usize = 40;
const ARC_GAP: usize = 12;
const MARGIN: usize = 20;

pub fn render_svg(word: &BraidWord) -> String {
    let m = word.strands();
    let x = |p: usize| MARGIN + PITCH * (p - 1);
    let arc_x = |p: usize| x(m) + PITCH / 2 + ARC_GAP * (m - p);
    let top = MARGIN + ARC_GAP * m;
    let levels = word.len().max(1);
    let bottom = top + LEVEL * levels;
    let width = arc_x(1) + MARGIN;
    let height = bottom + ARC_GAP * m + MARGIN;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, "<title>closed braid {word}</title>");
    let _ = writeln!(
        svg,
        r#"<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">"#
    );

    let _ = writeln!(svg, r#"<g class="closure">"#);
    for p in 1..=m {
        let lift = ARC_GAP * (m - p + 1);
        let _ = writeln!(
            svg,
            r#"<path d="M {x0} {top} V {up} H {ax} V {down} H {x0} V {bottom}"/>"#,
            x0 = x(p),
            up = top - lift,
            ax = arc_x(p),
            down = bottom + lift,
        );
    }
    let _ = writeln!(svg, "</g>");

    let line = |svg: &mut String, class: &str, x1: usize, y1: usize, x2: usize, y2: usize| {
        let _ = writeln!(
            svg,
            r#"<line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#
        );
    };

    if word.is_empty() {
        for p in 1..=m {
            line(&mut svg, "strand", x(p), top, x(p), bottom);
        }
    }
    for (level, g) in word.letters().iter().enumerate() {
        let i = g.index();
        let y0 = top + LEVEL * level;
        let y1 = y0 + LEVEL;
        for p in (1..=m).filter(|&p| p != i && p != i + 1) {
            line(&mut svg, "strand", x(p), y0, x(p), y1);
        }
        // (over start, under start): the over strand is drawn whole, the
        // under strand with a gap around the centre
        let (over_from, under_from) = match g.sign() {
            Sign::Pos => (i + 1, i),
            Sign::Neg => (i, i + 1),
        };
        let over_to = if over_from == i { i + 1 } else { i };
        let under_to = if under_from == i { i + 1 } else { i };
        let _ = writeln!(
            svg,
            r#"<g class="crossing" data-level="{level}" data-sign="{sign:+}">"#,
            sign = g.sign().value()
        );
        line(&mut svg, "over", x(over_from), y0, x(over_to), y1);
        let (ux0, ux1) = (x(under_from) as i64, x(under_to) as i64);
        let dx = ux1 - ux0;
        let dy = LEVEL as i64;
        let at = |t: i64| {
            (
                (ux0 + dx * t / 10) as usize,
                (y0 as i64 + dy * t / 10) as usize,
            )
        };
        let (a, b, c, d) = (at(0), at(4), at(6), at(10));
        line(&mut svg, "under", a.0, a.1, b.0, b.1);
        line(&mut svg, "under", c.0, c.1, d.0, d.1);
        let _ = writeln!(svg, "</g>");
    }

    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, letters: &[i64]) -> BraidWord {
        BraidWord::from_signed(m, letters).unwrap()
    }

    #[test]
    fn open_shade_is_one_loop() {
        assert_eq!(render_ascii(&w(1, &[])), "+-+\n| |\n+-+\n");
    }

    #[test]
    fn single_crossing() {
        let expected = "\
+-------+
|   +-+ |
 \\ /  | |
  /   | |
 / \\  | |
|   +-+ |
+-------+
";
        assert_eq!(render_ascii(&w(2, &[1])), expected);
        assert_eq!(
            render_ascii(&w(2, &[-1])),
            expected.replacen("  /", "  \\", 1)
        );
    }

    #[test]
    fn ascii_has_three_rows_per_crossing() {
        let word = w(4, &[1, -2, 3, -1]);
        let art = render_ascii(&word);
        assert_eq!(art.lines().count(), 2 * 4 + 3 * 4);
        let centres = art
            .lines()
            .filter(|l| l.contains("  /") || l.contains("  \\"))
            .count();
        assert!(centres >= 4);
    }

    #[test]
    fn svg_crossing_groups() {
        let svg = render_svg(&w(3, &[1, -2]));
        let doc = roxmltree::Document::parse(&svg).expect("well-formed svg");
        let groups: Vec<_> = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("crossing"))
            .collect();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].attribute("data-sign"), Some("+1"));
        assert_eq!(groups[1].attribute("data-sign"), Some("-1"));
        let closures = doc
            .descendants()
            .filter(|n| n.tag_name().name() == "path")
            .count();
        assert_eq!(closures, 3);
        assert_eq!(doc.root_element().attribute("version"), Some("1.1"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let word = w(4, &[3, -1, 2, 2, -3]);
        for format in [Format::Ascii, Format::Svg] {
            assert_eq!(render_diagram(&word, format), render_diagram(&word, format));
        }
    }

    #[test]
    fn format_names() {
        assert_eq!("svg".parse::<Format>(), Ok(Format::Svg));
        assert!("png".parse::<Format>().is_err());
    }
}

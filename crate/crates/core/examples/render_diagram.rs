//! Draws a closed braid as ASCII art, or writes an SVG file.
//!
//! cargo run --example render_diagram -- "m=3 1 -2" [out.svg]

use foldloop::cli::{parse_word, render_diagram, Format};

fn main() {
    let mut args = std::env::args().skip(1);
    let word = parse_word(&args.next().unwrap_or_else(|| "m=3 1 -2".into())).unwrap();
    print!("{}", render_diagram(&word, Format::Ascii));
    if let Some(path) = args.next() {
        std::fs::write(&path, render_diagram(&word, Format::Svg)).unwrap();
        println!("wrote {path}");
    }
}

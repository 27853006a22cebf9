//! Doubles a core braid into the two edges of a flat band and compares the
//! edges' linking number computed from the diagram with the closed form
//! `writhe + twists`. Also shows why two or four coils force a twist.

use foldloop::band::{required_twists, FlatBand};
use foldloop::cli::parse_word;
use foldloop::folds::enumerate_words;

fn main() {
    for (text, twists) in [
        ("m=1", 0),
        ("m=1", 1),
        ("m=2 1", 0),
        ("m=3 1 -2", 0),
        ("m=3 1 2", -1),
    ] {
        let band = FlatBand::new(parse_word(text).unwrap(), twists).unwrap();
        let doubled = band.double();
        println!(
            "core {text:<10} t={twists:+}  doubled {}\n    lk from diagram {:+}, writhe + t = {:+}",
            doubled.word,
            band.boundary_linking_number(),
            band.boundary_linking_number_fast()
        );
    }

    println!();
    for m in [2, 4] {
        let core = (0..=6)
            .flat_map(|n| enumerate_words(m, n))
            .find(|w| w.component_count() == 1)
            .unwrap();
        println!(
            "{m} coils, e.g. {core}: the band needs {:+} full twist(s) to close flat",
            required_twists(&core).unwrap()
        );
    }
}

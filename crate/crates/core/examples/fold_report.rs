//! Prints the JSON report for each word given on the command line.
//!
//! cargo run --example fold_report -- "m=3 1 -2" "1" "m=4 1 -2 3"

use foldloop::cli::{parse_word, report};

fn main() {
    let words: Vec<String> = std::env::args().skip(1).collect();
    let words = if words.is_empty() {
        vec![
            "m=3 1 -2".to_string(),
            "m=2 1".to_string(),
            "m=1".to_string(),
        ]
    } else {
        words
    };
    for text in words {
        match parse_word(&text) {
            Ok(word) => println!("{}", serde_json::to_string(&report(&word)).unwrap()),
            Err(e) => eprintln!("{text:?}: {e}"),
        }
    }
}

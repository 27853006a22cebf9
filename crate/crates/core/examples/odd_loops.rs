//! Searches all short core braids for untwisted folds. Only odd loop
//! counts turn up.
//!
//! cargo run --release --example odd_loops -- [m_max] [n_max]

use foldloop::folds::search_folds;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer bound"));
    let m_max = args.next().unwrap_or(6);
    let n_max = args.next().unwrap_or(6);

    let summary = search_folds(m_max, n_max);
    for (m, entry) in &summary.per_m {
        match (&entry.witness, entry.minimal_n) {
            (Some(witness), Some(n)) => println!("{m} loops: fold with {n} crossings, {witness}"),
            _ => println!("{m} loops: no untwisted fold with up to {n_max} crossings"),
        }
    }
}

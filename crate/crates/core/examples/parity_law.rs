//! Every braid whose closure is a single loop has strand count and crossing
//! count of opposite parity. Scans all words up to a size bound and tallies.
//!
//! cargo run --example parity_law -- [m_max] [n_max]

use foldloop::folds::enumerate_words;
use foldloop::Parity;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer bound"));
    let m_max = args.next().unwrap_or(4);
    let n_max = args.next().unwrap_or(6);

    println!("{:>3} {:>3} {:>9} {:>9}", "m", "n", "words", "one loop");
    let mut violations = 0;
    for m in 1..=m_max {
        for n in 0..=n_max {
            let (mut words, mut single) = (0u64, 0u64);
            for word in enumerate_words(m, n) {
                words += 1;
                let verdict = word.check_statement2();
                if verdict.single_component {
                    single += 1;
                    debug_assert_ne!(verdict.m_parity, verdict.n_parity);
                }
                if !verdict.consistent {
                    violations += 1;
                    println!("violation: {word}");
                }
            }
            if words > 0 {
                let parities = (Parity::of_count(m), Parity::of_count(n));
                println!("{m:>3} {n:>3} {words:>9} {single:>9}  {parities:?}");
            }
        }
    }
    println!("{violations} violations");
}

//! Folds into three loops, shrinks two of them, then folds the remaining big
//! loop into three again. Repeating gives every odd loop count.

use foldloop::band::check_theorem;
use foldloop::folds::{make_fold, nest};

fn main() {
    let three = make_fold(3).unwrap();
    let mut fold = three.clone();
    println!("{:>2} loops  {fold}", fold.strands());
    for _ in 0..4 {
        fold = nest(&fold, &three).unwrap();
        let verdict = check_theorem(&fold);
        assert!(verdict.valid_fold);
        println!(
            "{:>2} loops  {fold}  (writhe {})",
            verdict.m,
            fold.exponent_sum()
        );
    }

    match make_fold(4) {
        Ok(_) => unreachable!(),
        Err(e) => println!("make_fold(4): {e}"),
    }
}

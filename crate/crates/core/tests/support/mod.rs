//! Brute-force reference computations that share no code with the library
//! beyond constructing words. Words are handled as plain `Vec<i64>`.

#![allow(dead_code)]

use foldloop::BraidWord;

/// Every word of length `n` on `m` strands as signed integers, built by
/// recursion rather than an odometer. Order: index ascending, `+` first.
pub fn all_words(m: usize, n: usize) -> Vec<Vec<i64>> {
    let letters: Vec<i64> = (1..m as i64).flat_map(|i| [i, -i]).collect();
    let mut out = Vec::new();
    fn go(prefix: &mut Vec<i64>, left: usize, letters: &[i64], out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for &k in letters {
            prefix.push(k);
            go(prefix, left - 1, letters, out);
            prefix.pop();
        }
    }
    go(&mut Vec::new(), n, &letters, &mut out);
    out
}

pub fn word(m: usize, letters: &[i64]) -> BraidWord {
    BraidWord::from_signed(m, letters).unwrap()
}

/// Follows a strand from top position `start` down through every crossing
/// and returns its bottom position.
pub fn follow(letters: &[i64], start: usize) -> usize {
    let mut pos = start;
    for &k in letters {
        let i = k.unsigned_abs() as usize;
        if pos == i {
            pos = i + 1;
        } else if pos == i + 1 {
            pos = i;
        }
    }
    pos
}

/// Loop id for each top position, found by walking the strand and its
/// closure arc until the walk returns home. Ids count up from 0 in order
/// of first visit.
pub fn loop_ids(m: usize, letters: &[i64]) -> Vec<usize> {
    let mut id = vec![usize::MAX; m + 1];
    let mut next = 0;
    for start in 1..=m {
        if id[start] != usize::MAX {
            continue;
        }
        let mut top = start;
        loop {
            id[top] = next;
            top = follow(letters, top);
            if top == start {
                break;
            }
        }
        next += 1;
    }
    id[1..].to_vec()
}

pub fn loop_count(m: usize, letters: &[i64]) -> usize {
    loop_ids(m, letters).into_iter().max().map_or(0, |x| x + 1)
}

pub fn writhe(letters: &[i64]) -> i64 {
    letters.iter().map(|k| k.signum()).sum()
}

/// Parity of the strand permutation by counting inversions of the bottom
/// positions.
pub fn inversion_parity_is_odd(m: usize, letters: &[i64]) -> bool {
    let ends: Vec<usize> = (1..=m).map(|s| follow(letters, s)).collect();
    let mut inversions = 0;
    for a in 0..m {
        for b in a + 1..m {
            if ends[a] > ends[b] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Signed sum over crossings whose two strands lie in loops `a` and `b`
/// (0-based loop ids from [`loop_ids`]), before halving.
pub fn inter_loop_sum(m: usize, letters: &[i64], a: usize, b: usize) -> i64 {
    let ids = loop_ids(m, letters);
    let mut sum = 0;
    for (level, &k) in letters.iter().enumerate() {
        let i = k.unsigned_abs() as usize;
        // which start strands sit at i and i+1 just above this level
        let at = |p: usize| {
            (1..=m)
                .find(|&s| follow(&letters[..level], s) == p)
                .unwrap()
        };
        let (x, y) = (ids[at(i) - 1], ids[at(i + 1) - 1]);
        if (x, y) == (a, b) || (x, y) == (b, a) {
            sum += k.signum();
        }
    }
    sum
}

pub fn is_fold(m: usize, letters: &[i64]) -> bool {
    loop_count(m, letters) == 1 && writhe(letters) == 0
}

//! Linking numbers of small two-component closed braids, and what reversing
//! a component does to them.

use foldloop::linkdiag::{crossings, linking_number, strand_components};
use foldloop::{BraidWord, ComponentId, OrientationAssignment};

fn main() {
    let (a, b) = (ComponentId(1), ComponentId(2));
    for letters in [&[][..], &[1, 1], &[1, 1, 1, 1], &[1, 1, 1, -1], &[-1, -1]] {
        let word = BraidWord::from_signed(2, letters).unwrap();
        let down = OrientationAssignment::downward(2);
        let lk = linking_number(&word, a, b, &down).unwrap();
        let reversed = linking_number(&word, a, b, &down.flipped(b).unwrap()).unwrap();
        let labels = strand_components(&word);
        let signs: Vec<String> = crossings(&word)
            .iter()
            .filter(|c| labels.component_of(c.strand_a) != labels.component_of(c.strand_b))
            .map(|c| format!("{:+}", c.sign.value()))
            .collect();
        println!(
            "{word:<16} mutual crossings [{}]  lk = {lk:+}  (one component reversed: {reversed:+})",
            signs.join(" ")
        );
    }

    // three components: each pair has its own linking number
    let word = BraidWord::from_signed(3, &[1, 1, 2, 2, 2, 2]).unwrap();
    let down = OrientationAssignment::downward(3);
    for (x, y) in [(1, 2), (1, 3), (2, 3)] {
        let lk = linking_number(&word, ComponentId(x), ComponentId(y), &down).unwrap();
        println!("{word}: lk(C{x}, C{y}) = {lk:+}");
    }
}

mod support;

use foldloop::band::{check_theorem, is_valid_fold, required_twists, FlatBand};
use foldloop::folds::enumerate_words;
use foldloop::linkdiag::strand_components;
use foldloop::{BraidWord, ComponentId};
use support::{inter_loop_sum, is_fold};

fn single_component(m_max: usize, n_max: usize) -> impl Iterator<Item = BraidWord> {
    (1..=m_max)
        .flat_map(move |m| (0..=n_max).flat_map(move |n| enumerate_words(m, n)))
        .filter(|w| w.component_count() == 1)
}

#[test]
fn cabling_identity() {
    let mut checked = 0;
    for core in single_component(3, 5) {
        for t in -2..=2 {
            let band = FlatBand::new(core.clone(), t).unwrap();
            let generic = band.boundary_linking_number();
            assert_eq!(generic, core.exponent_sum() + t, "{core} t={t}");
            assert_eq!(band.boundary_linking_number_fast(), generic);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn cabling_identity_against_crossing_oracle() {
    for core in single_component(3, 4) {
        for t in -2..=2 {
            let doubled = FlatBand::new(core.clone(), t).unwrap().double();
            let letters = doubled.word.to_signed();
            let sum = inter_loop_sum(doubled.word.strands(), &letters, 0, 1);
            assert_eq!(sum, 2 * (core.exponent_sum() + t), "{core} t={t}");
        }
    }
}

#[test]
fn doubled_diagram_has_odd_and_even_boundaries() {
    for core in single_component(4, 5) {
        let doubled = FlatBand::new(core.clone(), 1).unwrap().double();
        assert_eq!(doubled.word.len(), 4 * core.len() + 2);
        let labels = strand_components(&doubled.word);
        assert_eq!(labels.count(), 2);
        for s in 1..=doubled.word.strands() {
            let expected = ComponentId(if s % 2 == 1 { 1 } else { 2 });
            assert_eq!(labels.component_of(s), expected);
        }
        let perm = doubled.word.permutation();
        assert!((1..=perm.degree()).all(|s| perm.image(s) % 2 == s % 2));
    }
}

#[test]
fn parity_chain_and_theorem() {
    let mut folds = 0;
    for m in 1..=6 {
        for n in 0..=6 {
            for core in enumerate_words(m, n) {
                let valid = is_valid_fold(&core);
                assert_eq!(valid, is_fold(m, &core.to_signed()));
                let verdict = check_theorem(&core);
                assert!(verdict.theorem_holds, "{core}");
                if valid {
                    folds += 1;
                    assert_eq!(n % 2, 0, "{core}");
                    assert_eq!(m % 2, 1, "{core}");
                }
            }
        }
    }
    assert!(folds > 0);
}

#[test]
fn even_coil_counts_need_odd_twists() {
    let mut seen = 0;
    for core in single_component(4, 6).filter(|w| w.strands() % 2 == 0) {
        let t = required_twists(&core).unwrap();
        assert_eq!(t.rem_euclid(2), 1, "{core}");
        assert_eq!(FlatBand::new(core, t).unwrap().boundary_linking_number(), 0);
        seen += 1;
    }
    assert!(seen > 0);
}

#[test]
fn conjugation_keeps_boundary_linking() {
    for core in single_component(4, 5) {
        for t in [-1, 0, 2] {
            let lk = FlatBand::new(core.clone(), t)
                .unwrap()
                .boundary_linking_number();
            for k in 1..core.len() as i64 {
                let shifted = FlatBand::new(core.cyclic_shift(k), t).unwrap();
                assert_eq!(shifted.boundary_linking_number(), lk, "{core} shift {k}");
            }
        }
    }
}

#[test]
fn twist_placement_is_irrelevant() {
    // the appended twist letters rotate to the top without changing lk
    for core in single_component(3, 4) {
        let doubled = FlatBand::new(core.clone(), 2).unwrap().double();
        let down = foldloop::OrientationAssignment::downward(2);
        let lk = |w: &BraidWord| {
            foldloop::linkdiag::linking_number(w, ComponentId(1), ComponentId(2), &down).unwrap()
        };
        let base = lk(&doubled.word);
        for k in [-4i64, -1] {
            assert_eq!(lk(&doubled.word.cyclic_shift(k)), base);
        }
    }
}

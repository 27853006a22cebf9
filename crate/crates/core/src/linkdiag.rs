//! Link diagrams of closed braids: which strands belong to which component,
//! the signed crossing inventory, and linking numbers as half the signed
//! count of crossings between two components.
//!
//! Closure arcs run off to the side of the braid and introduce no crossings,
//! so every crossing of the diagram is a letter of the word.

use std::fmt;

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};

/// Component of a closed braid, numbered from 1 in order of each
/// component's smallest start strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentId(pub usize);

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// 0-based letter position.
    pub level: usize,
    /// Positions `left_position` and `left_position + 1` cross.
    pub left_position: usize,
    pub sign: Sign,
    /// Start strand arriving at `left_position`.
    pub strand_a: usize,
    /// Start strand arriving at `left_position + 1`.
    pub strand_b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentLabeling {
    // component_of[s - 1] for start strand s
    component_of: Vec<ComponentId>,
    count: usize,
}

impl ComponentLabeling {
    pub fn component_of(&self, strand: usize) -> ComponentId {
        self.component_of[strand - 1]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn ids(&self) -> impl Iterator<Item = ComponentId> {
        (1..=self.count).map(ComponentId)
    }

    pub fn contains(&self, id: ComponentId) -> bool {
        (1..=self.count).contains(&id.0)
    }

    /// Start strands belonging to `id`, ascending.
    pub fn strands_of(&self, id: ComponentId) -> Vec<usize> {
        (1..=self.component_of.len())
            .filter(|&s| self.component_of(s) == id)
            .collect()
    }
}

/// Direction of travel along each component: `Pos` follows the strands
/// downward through the braid, `Neg` reverses the component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationAssignment {
    direction_of: Vec<Sign>,
}

impl OrientationAssignment {
    /// Every component oriented downward.
    pub fn downward(components: usize) -> Self {
        OrientationAssignment {
            direction_of: vec![Sign::Pos; components],
        }
    }

    pub fn from_directions(directions: Vec<Sign>) -> Self {
        OrientationAssignment {
            direction_of: directions,
        }
    }

    pub fn direction_of(&self, id: ComponentId) -> Result<Sign> {
        id.0.checked_sub(1)
            .and_then(|i| self.direction_of.get(i))
            .copied()
            .ok_or(Error::UnknownComponent(id.0))
    }

    /// Reverses one component.
    pub fn flipped(&self, id: ComponentId) -> Result<Self> {
        let current = self.direction_of(id)?;
        let mut direction_of = self.direction_of.clone();
        direction_of[id.0 - 1] = current.flip();
        Ok(OrientationAssignment { direction_of })
    }

    pub fn len(&self) -> usize {
        self.direction_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.direction_of.is_empty()
    }
}

pub fn strand_components(word: &BraidWord) -> ComponentLabeling {
    let cycles = word.permutation().cycles();
    let mut component_of = vec![ComponentId(0); word.strands()];
    for (i, cycle) in cycles.iter().enumerate() {
        for &strand in cycle {
            component_of[strand - 1] = ComponentId(i + 1);
        }
    }
    ComponentLabeling {
        component_of,
        count: cycles.len(),
    }
}

/// One crossing per letter, tagged with the start strands that meet there.
pub fn crossings(word: &BraidWord) -> Vec<Crossing> {
    let mut occupant: Vec<usize> = (1..=word.strands()).collect();
    word.letters()
        .iter()
        .enumerate()
        .map(|(level, g)| {
            let i = g.index();
            let crossing = Crossing {
                level,
                left_position: i,
                sign: g.sign(),
                strand_a: occupant[i - 1],
                strand_b: occupant[i],
            };
            occupant.swap(i - 1, i);
            crossing
        })
        .collect()
}

fn check_pair(labels: &ComponentLabeling, a: ComponentId, b: ComponentId) -> Result<()> {
    for id in [a, b] {
        if !labels.contains(id) {
            return Err(Error::UnknownComponent(id.0));
        }
    }
    if a == b {
        return Err(Error::SameComponent(a.0));
    }
    Ok(())
}

/// Signed count of crossings between components `a` and `b` before halving.
/// Always even for a closed diagram.
pub fn linking_sum(
    word: &BraidWord,
    a: ComponentId,
    b: ComponentId,
    orient: &OrientationAssignment,
) -> Result<i64> {
    let labels = strand_components(word);
    check_pair(&labels, a, b)?;
    let factor = orient.direction_of(a)? * orient.direction_of(b)?;
    Ok(crossings(word)
        .iter()
        .filter(|c| {
            let pair = (
                labels.component_of(c.strand_a),
                labels.component_of(c.strand_b),
            );
            pair == (a, b) || pair == (b, a)
        })
        .map(|c| (c.sign * factor).value())
        .sum())
}

pub fn linking_number(
    word: &BraidWord,
    a: ComponentId,
    b: ComponentId,
    orient: &OrientationAssignment,
) -> Result<i64> {
    let sum = linking_sum(word, a, b, orient)?;
    debug_assert_eq!(
        sum % 2,
        0,
        "odd inter-component crossing sum {sum} for {word}"
    );
    Ok(sum / 2)
}

/// Signed count of the crossings of a component with itself.
pub fn self_writhe(word: &BraidWord, comp: ComponentId) -> Result<i64> {
    let labels = strand_components(word);
    if !labels.contains(comp) {
        return Err(Error::UnknownComponent(comp.0));
    }
    Ok(crossings(word)
        .iter()
        .filter(|c| {
            labels.component_of(c.strand_a) == comp && labels.component_of(c.strand_b) == comp
        })
        .map(|c| c.sign.value())
        .sum())
}

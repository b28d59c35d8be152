//! Finite semigroups given by Cayley tables, their congruences and quotients,
//! crisp ideals, and instance generators.
//!
//! Elements are always the indices `0..n`. Any naming of elements is a
//! presentation concern and lives outside this module.

mod congruence;
mod generate;
mod ideals;
mod semigroup;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use congruence::{
    enumerate_congruences, enumerate_congruences_bounded, CongruencePartition, SetPartitions, Side,
    DEFAULT_MAX_CONGRUENCE_ORDER,
};
pub use generate::{enumerate_semigroups, random_semigroup, MAX_EXHAUSTIVE_ORDER};
pub use ideals::{find_crisp_ideals, is_crisp_structure, MAX_SUBSET_ORDER};
pub use semigroup::FiniteSemigroup;

/// An element of a finite semigroup, identified by its index.
pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("semigroup order must be at least 1")]
    EmptySemigroup,
    #[error("table shape mismatch: expected {expected} entries in {what}, found {found}")]
    ShapeMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("OutOfRangeEntry at ({row},{col}): {value} is not an element of a semigroup of order {order}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("NotAssociative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: Element,
        b: Element,
        c: Element,
        left: Element,
        right: Element,
    },
    #[error("NotAPartition: element {element} {problem}")]
    NotAPartition {
        element: i64,
        problem: PartitionProblem,
    },
    #[error("NotAPartition: class {class} is empty")]
    EmptyClass { class: usize },
    #[error(
        "NotCompatible: {z1} and {z2} are congruent but {side} multiplication by {x} separates them"
    )]
    NotCompatible {
        z1: Element,
        z2: Element,
        x: Element,
        side: Side,
    },
    #[error("UnknownClass: no congruence class with index {index}")]
    UnknownClass { index: usize },
    #[error("OrderTooLarge: order {order} exceeds the limit of {max} for {what}")]
    OrderTooLarge {
        order: usize,
        max: usize,
        what: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionProblem {
    OutOfRange,
    Duplicated,
    Missing,
}

impl fmt::Display for PartitionProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartitionProblem::OutOfRange => "is not an element of the semigroup",
            PartitionProblem::Duplicated => "appears in more than one place",
            PartitionProblem::Missing => "is not covered by any class",
        })
    }
}

/// The algebraic structures checked both crisply (on subsets) and fuzzily
/// (on cubic Pythagorean fuzzy sets).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Subsemigroup,
    LeftIdeal,
    RightIdeal,
    Ideal,
    BiIdeal,
    InteriorIdeal,
}

impl StructureKind {
    pub const ALL: [StructureKind; 6] = [
        StructureKind::Subsemigroup,
        StructureKind::LeftIdeal,
        StructureKind::RightIdeal,
        StructureKind::Ideal,
        StructureKind::BiIdeal,
        StructureKind::InteriorIdeal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Subsemigroup => "subsemigroup",
            StructureKind::LeftIdeal => "left_ideal",
            StructureKind::RightIdeal => "right_ideal",
            StructureKind::Ideal => "ideal",
            StructureKind::BiIdeal => "bi_ideal",
            StructureKind::InteriorIdeal => "interior_ideal",
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for StructureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "subsemigroup" | "sub_semigroup" => Ok(StructureKind::Subsemigroup),
            "left" | "left_ideal" => Ok(StructureKind::LeftIdeal),
            "right" | "right_ideal" => Ok(StructureKind::RightIdeal),
            "ideal" | "two_sided" | "two_sided_ideal" => Ok(StructureKind::Ideal),
            "bi" | "bi_ideal" => Ok(StructureKind::BiIdeal),
            "interior" | "interior_ideal" => Ok(StructureKind::InteriorIdeal),
            other => Err(format!("unknown structure kind `{other}`")),
        }
    }
}

/// A subset of the elements of a semigroup of a given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    order: usize,
    members: BTreeSet<Element>,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            order,
            members: BTreeSet::new(),
        }
    }

    pub fn full(order: usize) -> Self {
        ElementSet {
            order,
            members: (0..order).collect(),
        }
    }

    /// Builds a set from members, rejecting any member outside `0..order`.
    pub fn from_members<I>(order: usize, members: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = Element>,
    {
        let mut set = ElementSet::empty(order);
        for m in members {
            if m >= order {
                return Err(AlgebraError::NotAPartition {
                    element: m as i64,
                    problem: PartitionProblem::OutOfRange,
                });
            }
            set.members.insert(m);
        }
        Ok(set)
    }

    /// Members are the set bits of `mask`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        ElementSet {
            order,
            members: (0..order).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(&e)
    }

    pub fn insert(&mut self, e: Element) {
        assert!(e < self.order, "element {e} out of range");
        self.members.insert(e);
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.members.iter().copied().collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

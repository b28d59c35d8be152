use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Element, ElementSet, FiniteSemigroup, PartitionProblem};

/// Largest order for which [`enumerate_congruences`] walks every set partition
/// (Bell(6) = 203).
pub const DEFAULT_MAX_CONGRUENCE_ORDER: usize = 6;

/// Which side of a product broke compatibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A partition of the elements of a semigroup that is compatible with
/// multiplication on both sides.
///
/// Classes are stored canonically: each class is sorted and classes are
/// ordered by their smallest member, so class indices form a restricted
/// growth string over the elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruencePartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<Element>>,
    complete: bool,
}

impl CongruencePartition {
    /// Checks that `classes` partition the elements of `s` and that the
    /// partition is a congruence. Completeness is computed and cached.
    pub fn validate(s: &FiniteSemigroup, classes: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        let n = s.order();
        let mut label: Vec<Option<usize>> = vec![None; n];
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(AlgebraError::EmptyClass { class: ci });
            }
            for &e in class {
                if e < 0 || e as u64 >= n as u64 {
                    return Err(AlgebraError::NotAPartition {
                        element: e,
                        problem: PartitionProblem::OutOfRange,
                    });
                }
                let slot = &mut label[e as usize];
                if slot.is_some() {
                    return Err(AlgebraError::NotAPartition {
                        element: e,
                        problem: PartitionProblem::Duplicated,
                    });
                }
                *slot = Some(ci);
            }
        }
        let mut raw = Vec::with_capacity(n);
        for (e, l) in label.iter().enumerate() {
            match l {
                Some(c) => raw.push(*c),
                None => {
                    return Err(AlgebraError::NotAPartition {
                        element: e as i64,
                        problem: PartitionProblem::Missing,
                    })
                }
            }
        }
        Self::from_labels(s, &raw)
    }

    /// Builds a congruence from an arbitrary labelling `element -> class label`.
    pub fn from_labels(s: &FiniteSemigroup, labels: &[usize]) -> Result<Self, AlgebraError> {
        if labels.len() != s.order() {
            return Err(AlgebraError::ShapeMismatch {
                what: "class labels".into(),
                expected: s.order(),
                found: labels.len(),
            });
        }
        let class_of = canonical_labels(labels);
        if let Some((z1, z2, x, side)) = first_incompatibility(s, &class_of) {
            return Err(AlgebraError::NotCompatible { z1, z2, x, side });
        }
        Ok(Self::assemble(s, class_of))
    }

    fn assemble(s: &FiniteSemigroup, class_of: Vec<usize>) -> Self {
        let count = class_of.iter().max().map_or(0, |m| m + 1);
        let mut classes = vec![Vec::new(); count];
        for (e, &c) in class_of.iter().enumerate() {
            classes[c].push(e);
        }
        let mut w = CongruencePartition {
            class_of,
            classes,
            complete: false,
        };
        w.complete = w.compute_complete(s);
        w
    }

    /// Every element in its own class. Always a complete congruence.
    pub fn identity(s: &FiniteSemigroup) -> Self {
        Self::assemble(s, (0..s.order()).collect())
    }

    /// A single class containing every element. Always a congruence.
    pub fn universal(s: &FiniteSemigroup) -> Self {
        Self::assemble(s, vec![0; s.order()])
    }

    pub fn semigroup_order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, e: Element) -> usize {
        self.class_of[e]
    }

    pub fn class_labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    /// Members of the class containing `e`.
    pub fn class_of(&self, e: Element) -> &[Element] {
        &self.classes[self.class_of[e]]
    }

    pub fn class(&self, index: usize) -> Result<&[Element], AlgebraError> {
        self.classes
            .get(index)
            .map(Vec::as_slice)
            .ok_or(AlgebraError::UnknownClass { index })
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    /// Cached result of [`CongruencePartition::compute_complete`].
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// True iff `[z1][z2] = [z1 z2]` as sets for all `z1, z2`.
    pub fn compute_complete(&self, s: &FiniteSemigroup) -> bool {
        let k = self.classes.len();
        (0..k).all(|c1| {
            (0..k).all(|c2| {
                let product = self.product_unchecked(s, c1, c2);
                let target = self.class_of[s.mul(self.classes[c1][0], self.classes[c2][0])];
                product.len() == self.classes[target].len()
            })
        })
    }

    /// `{ a * b : a in class c1, b in class c2 }`.
    pub fn class_product(
        &self,
        s: &FiniteSemigroup,
        c1: usize,
        c2: usize,
    ) -> Result<ElementSet, AlgebraError> {
        self.class(c1)?;
        self.class(c2)?;
        Ok(self.product_unchecked(s, c1, c2))
    }

    fn product_unchecked(&self, s: &FiniteSemigroup, c1: usize, c2: usize) -> ElementSet {
        let mut out = ElementSet::empty(s.order());
        for &a in &self.classes[c1] {
            for &b in &self.classes[c2] {
                out.insert(s.mul(a, b));
            }
        }
        out
    }

    /// The quotient semigroup on class indices, `[a][b] = [a b]`.
    pub fn quotient(&self, s: &FiniteSemigroup) -> FiniteSemigroup {
        let k = self.classes.len();
        let mut table = Vec::with_capacity(k * k);
        for c1 in 0..k {
            for c2 in 0..k {
                table.push(self.class_of[s.mul(self.classes[c1][0], self.classes[c2][0])]);
            }
        }
        debug_assert!(FiniteSemigroup::flat_is_associative(k, &table));
        FiniteSemigroup::from_flat_unchecked(k, table)
    }
}

/// Relabels so that labels appear in first-occurrence order `0, 1, 2, ...`.
fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut seen: Vec<(usize, usize)> = Vec::new();
    labels
        .iter()
        .map(|&l| match seen.iter().find(|(old, _)| *old == l) {
            Some(&(_, new)) => new,
            None => {
                let new = seen.len();
                seen.push((l, new));
                new
            }
        })
        .collect()
}

fn first_incompatibility(
    s: &FiniteSemigroup,
    class_of: &[usize],
) -> Option<(Element, Element, Element, Side)> {
    let n = s.order();
    for z1 in 0..n {
        for z2 in (z1 + 1)..n {
            if class_of[z1] != class_of[z2] {
                continue;
            }
            for x in 0..n {
                if class_of[s.mul(z1, x)] != class_of[s.mul(z2, x)] {
                    return Some((z1, z2, x, Side::Right));
                }
                if class_of[s.mul(x, z1)] != class_of[s.mul(x, z2)] {
                    return Some((z1, z2, x, Side::Left));
                }
            }
        }
    }
    None
}

/// Set partitions of `{0..n-1}` as restricted growth strings, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct SetPartitions {
    current: Vec<usize>,
    // running maxima: prefix_max[i] = max(current[0..=i])
    prefix_max: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            current: vec![0; n],
            prefix_max: vec![0; n],
            done: n == 0,
        }
    }

    fn advance(&mut self) {
        let n = self.current.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.current[i] <= self.prefix_max[i - 1] {
                self.current[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.current[i]);
                for j in (i + 1)..n {
                    self.current[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

/// All congruences of `s` in restricted-growth-string order, for orders up to
/// [`DEFAULT_MAX_CONGRUENCE_ORDER`].
pub fn enumerate_congruences(
    s: &FiniteSemigroup,
) -> Result<Vec<CongruencePartition>, AlgebraError> {
    enumerate_congruences_bounded(s, DEFAULT_MAX_CONGRUENCE_ORDER)
}

pub fn enumerate_congruences_bounded(
    s: &FiniteSemigroup,
    max_order: usize,
) -> Result<Vec<CongruencePartition>, AlgebraError> {
    if s.order() > max_order {
        return Err(AlgebraError::OrderTooLarge {
            order: s.order(),
            max: max_order,
            what: "congruence enumeration",
        });
    }
    Ok(SetPartitions::new(s.order())
        .filter(|rgs| first_incompatibility(s, rgs).is_none())
        .map(|rgs| CongruencePartition::assemble(s, rgs))
        .collect())
}

use super::{AlgebraError, Element, ElementSet};

/// A finite semigroup on `{0..n-1}` with a validated associative Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    order: usize,
    // row-major: table[a * order + b] = a * b
    table: Vec<Element>,
}

impl FiniteSemigroup {
    /// Validates a Cayley table given as rows of signed integers.
    ///
    /// The table is stored exactly as given. Associativity violations report
    /// the first failing triple `(a, b, c)` in lexicographic order.
    pub fn validate(order: usize, rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::EmptySemigroup);
        }
        if rows.len() != order {
            return Err(AlgebraError::ShapeMismatch {
                what: "table rows".into(),
                expected: order,
                found: rows.len(),
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != order {
                return Err(AlgebraError::ShapeMismatch {
                    what: format!("table row {row}"),
                    expected: order,
                    found: entries.len(),
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value < 0 || value as u64 >= order as u64 {
                    return Err(AlgebraError::OutOfRangeEntry {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                table.push(value as Element);
            }
        }
        let s = FiniteSemigroup { order, table };
        s.check_associative()?;
        Ok(s)
    }

    /// Validates a table of element indices.
    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self, AlgebraError> {
        let signed: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        Self::validate(rows.len(), &signed)
    }

    /// Builds and validates the table `a * b = op(a, b)`.
    pub fn from_fn<F>(order: usize, op: F) -> Result<Self, AlgebraError>
    where
        F: Fn(Element, Element) -> Element,
    {
        let rows: Vec<Vec<Element>> = (0..order)
            .map(|a| (0..order).map(|b| op(a, b)).collect())
            .collect();
        if order == 0 {
            return Err(AlgebraError::EmptySemigroup);
        }
        Self::from_rows(&rows)
    }

    /// Wraps a flat row-major table that is already known to be valid.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<Element>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteSemigroup { order, table }
    }

    pub(crate) fn flat_is_associative(order: usize, table: &[Element]) -> bool {
        first_associativity_violation(order, table).is_none()
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        match first_associativity_violation(self.order, &self.table) {
            None => Ok(()),
            Some((a, b, c)) => Err(AlgebraError::NotAssociative {
                a,
                b,
                c,
                left: self.mul(self.mul(a, b), c),
                right: self.mul(a, self.mul(b, c)),
            }),
        }
    }

    /// `x * y = x`.
    pub fn left_zero(order: usize) -> Self {
        Self::from_fn(order, |a, _| a).expect("left-zero band is associative")
    }

    /// `x * y = y`.
    pub fn right_zero(order: usize) -> Self {
        Self::from_fn(order, |_, b| b).expect("right-zero band is associative")
    }

    /// Every product is `0`.
    pub fn null(order: usize) -> Self {
        Self::from_fn(order, |_, _| 0).expect("null semigroup is associative")
    }

    /// `x * y = min(x, y)` under the natural order of indices.
    pub fn min_semilattice(order: usize) -> Self {
        Self::from_fn(order, |a, b| a.min(b)).expect("min is associative")
    }

    /// Semilattice of minima under the total order given by `rank` (a permutation).
    pub fn chain_semilattice(rank: &[usize]) -> Self {
        let order = rank.len();
        Self::from_fn(order, |a, b| if rank[a] <= rank[b] { a } else { b })
            .expect("min over a total order is associative")
    }

    /// Integers modulo `order` under addition.
    pub fn cyclic_group(order: usize) -> Self {
        Self::from_fn(order, |a, b| (a + b) % order).expect("Z_n is associative")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    /// `a * b * c`, well defined by associativity.
    #[inline]
    pub fn mul3(&self, a: Element, b: Element, c: Element) -> Element {
        self.mul(self.mul(a, b), c)
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// `{ a * b : a in lhs, b in rhs }`.
    pub fn product_set(&self, lhs: &ElementSet, rhs: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.order);
        for a in lhs.iter() {
            for b in rhs.iter() {
                out.insert(self.mul(a, b));
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn first_associativity_violation(
    order: usize,
    table: &[Element],
) -> Option<(Element, Element, Element)> {
    let mul = |a: Element, b: Element| table[a * order + b];
    for a in 0..order {
        for b in 0..order {
            let ab = mul(a, b);
            for c in 0..order {
                if mul(ab, c) != mul(a, mul(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

//! Fuzzy structure predicates.
//!
//! Every condition has the shape "grade at a product versus grades at some of
//! its factors". The interval channels `im` and `inm` must not drop below the
//! meet of the factor grades; the scalar channels `m` and `nm` must not rise
//! above their join. For one-factor conditions (ideals) the meet and join are
//! just that factor's grade.

use crate::algebra::{Element, FiniteSemigroup, StructureKind};

use super::{Component, CpfsError, CubicFuzzySet, GradeValue, Lattice, Verdict, Witness};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PropertyOptions {
    /// Also require the sub-semigroup condition for bi-ideals.
    pub strict_bi_ideal: bool,
}

pub fn check_cpfs_property(
    s: &FiniteSemigroup,
    p: &CubicFuzzySet,
    kind: StructureKind,
) -> Result<Verdict, CpfsError> {
    check_cpfs_property_with(s, p, kind, PropertyOptions::default())
}

pub fn check_cpfs_property_with(
    s: &FiniteSemigroup,
    p: &CubicFuzzySet,
    kind: StructureKind,
    options: PropertyOptions,
) -> Result<Verdict, CpfsError> {
    p.expect_order(s.order())?;
    let n = s.order();
    let witness = match kind {
        StructureKind::Subsemigroup => subsemigroup(s, p),
        StructureKind::LeftIdeal => scan_pairs(n, |x, y| left(s, p, x, y)),
        StructureKind::RightIdeal => scan_pairs(n, |x, y| right(s, p, x, y)),
        StructureKind::Ideal => {
            scan_pairs(n, |x, y| left(s, p, x, y).or_else(|| right(s, p, x, y)))
        }
        StructureKind::BiIdeal => {
            let bi = scan_triples(n, |x, y, z| {
                let (x_name, z_name) = (("x", x), ("z", z));
                check_product(
                    p,
                    &[x_name, ("y", y), z_name],
                    ("xyz", s.mul3(x, y, z)),
                    &[x_name, z_name],
                )
            });
            if bi.is_none() && options.strict_bi_ideal {
                subsemigroup(s, p)
            } else {
                bi
            }
        }
        StructureKind::InteriorIdeal => scan_triples(n, |x, y, z| {
            check_product(
                p,
                &[("x", x), ("y", y), ("z", z)],
                ("xyz", s.mul3(x, y, z)),
                &[("y", y)],
            )
        }),
    };
    Ok(witness.into())
}

fn subsemigroup(s: &FiniteSemigroup, p: &CubicFuzzySet) -> Option<Witness> {
    scan_pairs(s.order(), |x, y| {
        check_product(
            p,
            &[("x", x), ("y", y)],
            ("xy", s.mul(x, y)),
            &[("x", x), ("y", y)],
        )
    })
}

fn left(s: &FiniteSemigroup, p: &CubicFuzzySet, x: Element, y: Element) -> Option<Witness> {
    check_product(p, &[("x", x), ("y", y)], ("xy", s.mul(x, y)), &[("y", y)])
}

fn right(s: &FiniteSemigroup, p: &CubicFuzzySet, x: Element, y: Element) -> Option<Witness> {
    check_product(p, &[("x", x), ("y", y)], ("xy", s.mul(x, y)), &[("x", x)])
}

fn scan_pairs<F>(n: usize, mut check: F) -> Option<Witness>
where
    F: FnMut(Element, Element) -> Option<Witness>,
{
    (0..n).find_map(|x| (0..n).find_map(|y| check(x, y)))
}

fn scan_triples<F>(n: usize, mut check: F) -> Option<Witness>
where
    F: FnMut(Element, Element, Element) -> Option<Witness>,
{
    (0..n).find_map(|x| (0..n).find_map(|y| (0..n).find_map(|z| check(x, y, z))))
}

/// Checks all four channels at `product` against the `factors`, in the
/// order `im`, `inm`, `m`, `nm`.
fn check_product(
    p: &CubicFuzzySet,
    tuple: &[(&str, Element)],
    product: (&str, Element),
    factors: &[(&str, Element)],
) -> Option<Witness> {
    let at = p.grade(product.1);
    let fold_interval = |get: fn(&super::CubicValue) -> super::UnitInterval| {
        factors
            .iter()
            .map(|&(_, e)| get(p.grade(e)))
            .reduce(Lattice::meet)
            .expect("at least one factor")
    };
    let fold_scalar = |get: fn(&super::CubicValue) -> super::UnitScalar| {
        factors
            .iter()
            .map(|&(_, e)| get(p.grade(e)))
            .reduce(Lattice::join)
            .expect("at least one factor")
    };
    let fail = |component: Component, lhs: GradeValue, rhs: GradeValue| {
        let (relation, combine) = match component {
            Component::Im | Component::Inm => (">=", "min"),
            Component::M | Component::Nm => ("<=", "max"),
        };
        let c = component.name();
        let rhs_text = if factors.len() == 1 {
            format!("{c}({})", factors[0].0)
        } else {
            let parts: Vec<String> = factors.iter().map(|(v, _)| format!("{c}({v})")).collect();
            format!("{combine}{{{}}}", parts.join(", "))
        };
        Some(Witness {
            tuple: tuple.iter().map(|&(v, e)| (v.to_string(), e)).collect(),
            component,
            condition: format!("{c}({}) {relation} {rhs_text}", product.0),
            lhs,
            rhs,
        })
    };

    let im_bound = fold_interval(|g| g.im());
    if !im_bound.leq(at.im()) {
        return fail(
            Component::Im,
            GradeValue::Interval(at.im().to_array()),
            GradeValue::Interval(im_bound.to_array()),
        );
    }
    let inm_bound = fold_interval(|g| g.inm());
    if !inm_bound.leq(at.inm()) {
        return fail(
            Component::Inm,
            GradeValue::Interval(at.inm().to_array()),
            GradeValue::Interval(inm_bound.to_array()),
        );
    }
    let m_bound = fold_scalar(|g| g.m());
    if !at.m().leq(m_bound) {
        return fail(
            Component::M,
            GradeValue::Scalar(at.m().get()),
            GradeValue::Scalar(m_bound.get()),
        );
    }
    let nm_bound = fold_scalar(|g| g.nm());
    if !at.nm().leq(nm_bound) {
        return fail(
            Component::Nm,
            GradeValue::Scalar(at.nm().get()),
            GradeValue::Scalar(nm_bound.get()),
        );
    }
    None
}

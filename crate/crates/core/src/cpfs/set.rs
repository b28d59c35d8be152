use crate::algebra::{Element, FiniteSemigroup};

use super::{
    Component, CpfsError, CubicValue, GradeValue, Lattice, RawGrade, UnitInterval, UnitScalar,
    Verdict, Witness,
};

/// A total assignment of cubic grades to the elements `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicFuzzySet {
    grades: Vec<CubicValue>,
}

impl CubicFuzzySet {
    /// Validates raw grades for a semigroup of order `n`.
    pub fn validate(n: usize, raw: &[RawGrade]) -> Result<Self, CpfsError> {
        if raw.len() < n {
            return Err(CpfsError::MissingElement { element: raw.len() });
        }
        if raw.len() > n {
            return Err(CpfsError::ExtraElement { element: n });
        }
        let grades = raw
            .iter()
            .enumerate()
            .map(|(e, g)| CubicValue::from_raw(g).map_err(|f| f.at(e)))
            .collect::<Result<_, _>>()?;
        Ok(CubicFuzzySet { grades })
    }

    pub fn from_values(grades: Vec<CubicValue>) -> Self {
        CubicFuzzySet { grades }
    }

    /// The same grade at every element.
    pub fn constant(order: usize, value: CubicValue) -> Self {
        CubicFuzzySet {
            grades: vec![value; order],
        }
    }

    pub fn order(&self) -> usize {
        self.grades.len()
    }

    pub fn grade(&self, e: Element) -> &CubicValue {
        &self.grades[e]
    }

    pub fn grades(&self) -> &[CubicValue] {
        &self.grades
    }

    pub fn to_raw(&self) -> Vec<RawGrade> {
        self.grades.iter().map(CubicValue::to_raw).collect()
    }

    pub(crate) fn expect_order(&self, expected: usize) -> Result<(), CpfsError> {
        if self.order() == expected {
            Ok(())
        } else {
            Err(CpfsError::OrderMismatch {
                expected,
                found: self.order(),
            })
        }
    }
}

/// `P ⊆ Q`: membership grades of `P` below those of `Q`, non-membership grades
/// above, at every element. Fails with the first offending element.
pub fn cpfs_contains(p: &CubicFuzzySet, q: &CubicFuzzySet) -> Result<Verdict, CpfsError> {
    q.expect_order(p.order())?;
    for z in 0..p.order() {
        let (a, b) = (p.grade(z), q.grade(z));
        let fail = |component: Component, condition: &str, lhs: &CubicValue, rhs: &CubicValue| {
            Verdict::Fails(Witness {
                tuple: vec![("z".into(), z)],
                component,
                condition: condition.into(),
                lhs: GradeValue::of(lhs, component),
                rhs: GradeValue::of(rhs, component),
            })
        };
        if !a.im().leq(b.im()) {
            return Ok(fail(Component::Im, "P.im(z) <= Q.im(z)", a, b));
        }
        if !b.inm().leq(a.inm()) {
            return Ok(fail(Component::Inm, "P.inm(z) >= Q.inm(z)", a, b));
        }
        if !a.m().leq(b.m()) {
            return Ok(fail(Component::M, "P.m(z) <= Q.m(z)", a, b));
        }
        if !b.nm().leq(a.nm()) {
            return Ok(fail(Component::Nm, "P.nm(z) >= Q.nm(z)", a, b));
        }
    }
    Ok(Verdict::Holds)
}

/// Sup-min composition over factorizations `z = z1 z2` for membership and
/// inf-max for non-membership. Elements without a factorization get
/// [`CubicValue::bottom`].
pub fn compose(
    s: &FiniteSemigroup,
    p1: &CubicFuzzySet,
    p2: &CubicFuzzySet,
) -> Result<CubicFuzzySet, CpfsError> {
    let n = s.order();
    p1.expect_order(n)?;
    p2.expect_order(n)?;
    let mut im = vec![UnitInterval::ZERO; n];
    let mut m = vec![UnitScalar::ZERO; n];
    let mut inm = vec![UnitInterval::ONE; n];
    let mut nm = vec![UnitScalar::ONE; n];
    for a in 0..n {
        let ga = p1.grade(a);
        for b in 0..n {
            let gb = p2.grade(b);
            let z = s.mul(a, b);
            im[z] = im[z].join(ga.im().meet(gb.im()));
            m[z] = m[z].join(ga.m().meet(gb.m()));
            inm[z] = inm[z].meet(ga.inm().join(gb.inm()));
            nm[z] = nm[z].meet(ga.nm().join(gb.nm()));
        }
    }
    let grades = (0..n)
        .map(|z| CubicValue::new(im[z], inm[z], m[z], nm[z]).map_err(|f| f.at(z)))
        .collect::<Result<_, _>>()?;
    Ok(CubicFuzzySet { grades })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(im: [f64; 2], inm: [f64; 2], m: f64, nm: f64) -> RawGrade {
        RawGrade { im, inm, m, nm }
    }

    fn scalar_set(ms: &[f64]) -> CubicFuzzySet {
        let raws: Vec<RawGrade> = ms
            .iter()
            .map(|&m| raw([0.0, m], [0.0, 0.0], m, 0.0))
            .collect();
        CubicFuzzySet::validate(ms.len(), &raws).unwrap()
    }

    #[test]
    fn validation_errors_name_the_element() {
        let good = raw([0.1, 0.2], [0.3, 0.4], 0.5, 0.5);
        let bad = raw([0.1, 0.2], [0.3, 0.4], 0.9, 0.6);
        assert!(matches!(
            CubicFuzzySet::validate(2, &[good, bad]),
            Err(CpfsError::PythagoreanViolation { element: 1, .. })
        ));
        assert_eq!(
            CubicFuzzySet::validate(2, &[good]),
            Err(CpfsError::MissingElement { element: 1 })
        );
        assert_eq!(
            CubicFuzzySet::validate(1, &[good, good]),
            Err(CpfsError::ExtraElement { element: 1 })
        );
        let wide = raw([0.7, 0.8], [0.5, 0.7], 0.0, 0.0);
        assert!(matches!(
            CubicFuzzySet::validate(1, &[wide]),
            Err(CpfsError::IntervalPythagoreanViolation { element: 0, .. })
        ));
    }

    #[test]
    fn containment_extremes() {
        let q = CubicFuzzySet::validate(2, &[raw([0.1, 0.4], [0.2, 0.3], 0.3, 0.2); 2]).unwrap();
        let bottom = CubicFuzzySet::constant(2, CubicValue::bottom());
        assert!(cpfs_contains(&q, &q).unwrap().holds());
        assert!(cpfs_contains(&bottom, &q).unwrap().holds());
        let fails = cpfs_contains(&q, &bottom).unwrap();
        let w = fails.witness().unwrap();
        assert_eq!(w.tuple, vec![("z".to_string(), 0)]);
        assert_eq!(w.component, Component::Im);
        assert!(matches!(
            cpfs_contains(&q, &CubicFuzzySet::constant(3, CubicValue::bottom())),
            Err(CpfsError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn left_zero_composition() {
        // a = 0, b = 1, x*y = x
        let s = FiniteSemigroup::left_zero(2);
        let p1 = scalar_set(&[0.6, 0.1]);
        let p2 = scalar_set(&[0.2, 0.9]);
        let c = compose(&s, &p1, &p2).unwrap();
        assert_eq!(c.grade(0).m().get(), 0.6);
        assert_eq!(c.grade(1).m().get(), 0.1);
    }

    #[test]
    fn one_element_composition() {
        let s = FiniteSemigroup::null(1);
        let p1 = CubicFuzzySet::validate(1, &[raw([0.2, 0.5], [0.1, 0.6], 0.4, 0.3)]).unwrap();
        let p2 = CubicFuzzySet::validate(1, &[raw([0.3, 0.4], [0.2, 0.5], 0.7, 0.1)]).unwrap();
        let c = compose(&s, &p1, &p2).unwrap();
        assert_eq!(c.grade(0).to_raw(), raw([0.2, 0.4], [0.2, 0.6], 0.4, 0.3));
    }

    #[test]
    fn unfactorizable_element_is_bottom() {
        let s = FiniteSemigroup::null(2);
        let p = scalar_set(&[0.5, 0.5]);
        let c = compose(&s, &p, &p).unwrap();
        assert_eq!(*c.grade(1), CubicValue::bottom());
        assert_eq!(c.grade(0).m().get(), 0.5);
    }
}

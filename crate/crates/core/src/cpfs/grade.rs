use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Component, EPSILON};

/// Meet/join structure shared by scalar and interval grades.
pub trait Lattice: Copy {
    fn meet(self, other: Self) -> Self;
    fn join(self, other: Self) -> Self;
    /// Order with the crate-wide tolerance [`EPSILON`].
    fn leq(self, other: Self) -> bool;
}

/// A real number in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct UnitScalar(f64);

impl UnitScalar {
    pub const ZERO: UnitScalar = UnitScalar(0.0);
    pub const ONE: UnitScalar = UnitScalar(1.0);

    pub fn new(value: f64) -> Option<Self> {
        (0.0..=1.0).contains(&value).then_some(UnitScalar(value))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for UnitScalar {
    type Error = String;

    fn try_from(value: f64) -> Result<Self, Self::Error> {
        UnitScalar::new(value).ok_or_else(|| format!("{value} is not in [0, 1]"))
    }
}

impl From<UnitScalar> for f64 {
    fn from(u: UnitScalar) -> f64 {
        u.0
    }
}

impl Lattice for UnitScalar {
    #[inline]
    fn meet(self, other: Self) -> Self {
        UnitScalar(self.0.min(other.0))
    }

    #[inline]
    fn join(self, other: Self) -> Self {
        UnitScalar(self.0.max(other.0))
    }

    #[inline]
    fn leq(self, other: Self) -> bool {
        self.0 <= other.0 + EPSILON
    }
}

impl fmt::Display for UnitScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.9}", self.0)
    }
}

/// A closed subinterval `[lo, hi]` of `[0, 1]`, ordered componentwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitInterval {
    lo: UnitScalar,
    hi: UnitScalar,
}

impl UnitInterval {
    pub const ZERO: UnitInterval = UnitInterval {
        lo: UnitScalar::ZERO,
        hi: UnitScalar::ZERO,
    };
    pub const ONE: UnitInterval = UnitInterval {
        lo: UnitScalar::ONE,
        hi: UnitScalar::ONE,
    };

    pub fn new(lo: UnitScalar, hi: UnitScalar) -> Option<Self> {
        (lo <= hi).then_some(UnitInterval { lo, hi })
    }

    pub fn lo(self) -> UnitScalar {
        self.lo
    }

    pub fn hi(self) -> UnitScalar {
        self.hi
    }

    pub fn to_array(self) -> [f64; 2] {
        [self.lo.0, self.hi.0]
    }
}

impl Lattice for UnitInterval {
    #[inline]
    fn meet(self, other: Self) -> Self {
        UnitInterval {
            lo: self.lo.meet(other.lo),
            hi: self.hi.meet(other.hi),
        }
    }

    #[inline]
    fn join(self, other: Self) -> Self {
        UnitInterval {
            lo: self.lo.join(other.lo),
            hi: self.hi.join(other.hi),
        }
    }

    #[inline]
    fn leq(self, other: Self) -> bool {
        self.lo.leq(other.lo) && self.hi.leq(other.hi)
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Why a single grade is not a valid cubic Pythagorean value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GradeFault {
    OutOfUnitRange {
        component: Component,
        value: f64,
    },
    BadInterval {
        component: Component,
        lo: f64,
        hi: f64,
    },
    Pythagorean {
        value: f64,
    },
    IntervalPythagorean {
        value: f64,
    },
}

/// Unvalidated grade as it appears in files: `im` and `inm` as `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RawGrade {
    pub im: [f64; 2],
    pub inm: [f64; 2],
    pub m: f64,
    pub nm: f64,
}

/// One element's grade: interval membership `im`, interval non-membership
/// `inm`, scalar membership `m` and scalar non-membership `nm`.
///
/// Invariants: `m² + nm² ≤ 1` and `im.hi² + inm.hi² ≤ 1`, both up to [`EPSILON`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicValue {
    im: UnitInterval,
    inm: UnitInterval,
    m: UnitScalar,
    nm: UnitScalar,
}

impl CubicValue {
    pub fn new(
        im: UnitInterval,
        inm: UnitInterval,
        m: UnitScalar,
        nm: UnitScalar,
    ) -> Result<Self, GradeFault> {
        let scalar = m.0 * m.0 + nm.0 * nm.0;
        if scalar > 1.0 + EPSILON {
            return Err(GradeFault::Pythagorean { value: scalar });
        }
        let interval = im.hi.0 * im.hi.0 + inm.hi.0 * inm.hi.0;
        if interval > 1.0 + EPSILON {
            return Err(GradeFault::IntervalPythagorean { value: interval });
        }
        Ok(CubicValue { im, inm, m, nm })
    }

    pub fn from_raw(raw: &RawGrade) -> Result<Self, GradeFault> {
        let unit = |component, value: f64| {
            UnitScalar::new(value).ok_or(GradeFault::OutOfUnitRange { component, value })
        };
        let interval = |component, [lo, hi]: [f64; 2]| {
            let l = unit(component, lo)?;
            let h = unit(component, hi)?;
            UnitInterval::new(l, h).ok_or(GradeFault::BadInterval { component, lo, hi })
        };
        CubicValue::new(
            interval(Component::Im, raw.im)?,
            interval(Component::Inm, raw.inm)?,
            unit(Component::M, raw.m)?,
            unit(Component::Nm, raw.nm)?,
        )
    }

    pub fn to_raw(&self) -> RawGrade {
        RawGrade {
            im: self.im.to_array(),
            inm: self.inm.to_array(),
            m: self.m.0,
            nm: self.nm.0,
        }
    }

    pub fn im(&self) -> UnitInterval {
        self.im
    }

    pub fn inm(&self) -> UnitInterval {
        self.inm
    }

    pub fn m(&self) -> UnitScalar {
        self.m
    }

    pub fn nm(&self) -> UnitScalar {
        self.nm
    }

    /// Membership `[0,0] / 0`, non-membership `[1,1] / 1`.
    pub fn bottom() -> Self {
        CubicValue {
            im: UnitInterval::ZERO,
            inm: UnitInterval::ONE,
            m: UnitScalar::ZERO,
            nm: UnitScalar::ONE,
        }
    }
}

impl fmt::Display for CubicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "im={} inm={} m={} nm={}",
            self.im, self.inm, self.m, self.nm
        )
    }
}

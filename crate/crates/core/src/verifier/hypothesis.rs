use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{find_crisp_ideals, ElementSet, FiniteSemigroup, StructureKind};
use crate::cpfs::{
    characteristic_cpfs, check_cpfs_property_with, random_cpfs_of_order, CubicFuzzySet, CubicValue,
    PropertyOptions, RawGrade, UnitInterval, UnitScalar,
};

use super::VerifyError;

/// How many sets the randomized stage should try to produce, and how many
/// draws it may spend doing so.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisBudget {
    pub seed: u64,
    pub random_samples: usize,
    pub attempts: usize,
    pub strict_bi_ideal: bool,
}

impl HypothesisBudget {
    pub fn new(seed: u64, random_samples: usize) -> Self {
        HypothesisBudget {
            seed,
            random_samples,
            attempts: random_samples.saturating_mul(8),
            strict_bi_ideal: false,
        }
    }
}

/// `(hi, lo)` pairs used to grade members and non-members of a crisp structure.
/// The last pair ties the `im` and `m` channels so that only the others separate.
const LADDER: [(RawGrade, RawGrade); 3] = [
    (
        RawGrade {
            im: [0.6, 0.8],
            inm: [0.3, 0.5],
            m: 0.2,
            nm: 0.1,
        },
        RawGrade {
            im: [0.1, 0.3],
            inm: [0.1, 0.2],
            m: 0.7,
            nm: 0.6,
        },
    ),
    (
        RawGrade {
            im: [0.9, 0.95],
            inm: [0.2, 0.3],
            m: 0.0,
            nm: 0.0,
        },
        RawGrade {
            im: [0.0, 0.1],
            inm: [0.0, 0.05],
            m: 0.5,
            nm: 0.8,
        },
    ),
    (
        RawGrade {
            im: [0.5, 0.5],
            inm: [0.4, 0.6],
            m: 0.3,
            nm: 0.3,
        },
        RawGrade {
            im: [0.5, 0.5],
            inm: [0.2, 0.2],
            m: 0.3,
            nm: 0.9,
        },
    ),
];

pub fn ladder() -> Vec<(CubicValue, CubicValue)> {
    LADDER
        .iter()
        .map(|(hi, lo)| {
            (
                CubicValue::from_raw(hi).expect("ladder grades are valid"),
                CubicValue::from_raw(lo).expect("ladder grades are valid"),
            )
        })
        .collect()
}

/// Sets on `s` that satisfy the fuzzy predicate of `kind`, in a fixed order:
/// characteristic sets of every crisp structure of that kind for each ladder
/// pair, then randomized candidates (alternating graded chains of crisp
/// structures and plain random draws) that pass the predicate.
///
/// Every yielded set has been checked against the predicate.
pub fn hypothesis_generator(
    s: &FiniteSemigroup,
    kind: StructureKind,
    budget: HypothesisBudget,
) -> Result<Vec<CubicFuzzySet>, VerifyError> {
    let options = PropertyOptions {
        strict_bi_ideal: budget.strict_bi_ideal,
    };
    let crisp = find_crisp_ideals(s, kind)?;
    let mut out = Vec::new();
    let passes = |p: &CubicFuzzySet| -> Result<bool, VerifyError> {
        Ok(check_cpfs_property_with(s, p, kind, options)?.holds())
    };

    for set in &crisp {
        for (hi, lo) in ladder() {
            let p = characteristic_cpfs(s, set, hi, lo)?;
            if passes(&p)? {
                out.push(p);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut accepted = 0;
    for attempt in 0..budget.attempts {
        if accepted == budget.random_samples {
            break;
        }
        let candidate = if attempt % 2 == 0 {
            graded_chain(s, &crisp, &mut rng)
        } else {
            random_cpfs_of_order(s.order(), &mut rng)
        };
        if passes(&candidate)? {
            out.push(candidate);
            accepted += 1;
        }
    }
    Ok(out)
}

/// Picks a random chain `I_1 ⊂ ... ⊂ I_k = S` from `crisp` and grades each
/// element by the first `I_j` containing it, with membership grades falling
/// and non-membership grades rising along the chain. Every level set is then
/// one of the `I_j`.
fn graded_chain<R: Rng>(s: &FiniteSemigroup, crisp: &[ElementSet], rng: &mut R) -> CubicFuzzySet {
    let n = s.order();
    let full = ElementSet::full(n);
    let mut chain = Vec::new();
    let mut current = crisp.choose(rng).cloned().unwrap_or_else(|| full.clone());
    loop {
        chain.push(current.clone());
        if current == full {
            break;
        }
        let above: Vec<&ElementSet> = crisp
            .iter()
            .filter(|j| current.is_subset(j) && **j != current)
            .chain(std::iter::once(&full))
            .collect();
        current = (*above.choose(rng).expect("full set is always above")).clone();
    }
    let levels = level_grades(chain.len(), rng);
    let grades = s
        .elements()
        .map(|e| {
            let depth = chain
                .iter()
                .position(|set| set.contains(e))
                .expect("chain ends at the full set");
            levels[depth]
        })
        .collect();
    CubicFuzzySet::from_values(grades)
}

fn sorted<R: Rng>(k: usize, bound: f64, descending: bool, rng: &mut R) -> Vec<f64> {
    let mut v: Vec<f64> = (0..k).map(|_| rng.gen::<f64>() * bound).collect();
    v.sort_by(f64::total_cmp);
    if descending {
        v.reverse();
    }
    v
}

fn level_grades<R: Rng>(k: usize, rng: &mut R) -> Vec<CubicValue> {
    let m = sorted(k, 1.0, false, rng);
    let nm = sorted(k, (1.0 - m[k - 1] * m[k - 1]).max(0.0).sqrt(), false, rng);
    let im_hi = sorted(k, 1.0, true, rng);
    let inm_hi = sorted(k, (1.0 - im_hi[0] * im_hi[0]).max(0.0).sqrt(), true, rng);
    let im_lo = sorted(k, 1.0, true, rng);
    let inm_lo = sorted(k, 1.0, true, rng);
    let unit = |v: f64| UnitScalar::new(v.clamp(0.0, 1.0)).expect("clamped");
    (0..k)
        .map(|j| {
            let im = UnitInterval::new(unit(im_lo[j].min(im_hi[j])), unit(im_hi[j]))
                .expect("lo capped by hi");
            let inm = UnitInterval::new(unit(inm_lo[j].min(inm_hi[j])), unit(inm_hi[j]))
                .expect("lo capped by hi");
            CubicValue::new(im, inm, unit(m[j]), unit(nm[j]))
                .expect("the largest m and im.hi bound the other channel")
        })
        .collect()
}

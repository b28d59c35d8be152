use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{
    enumerate_congruences, enumerate_semigroups, random_semigroup, CongruencePartition,
    FiniteSemigroup, StructureKind, DEFAULT_MAX_CONGRUENCE_ORDER, MAX_EXHAUSTIVE_ORDER,
};
use crate::cpfs::{random_cpfs_of_order, CubicFuzzySet, RawGrade, Witness};
use crate::rough::{approximate, Approximation};

use super::hypothesis::{hypothesis_generator, HypothesisBudget};
use super::theorem::{check_theorem, CheckOptions, Mode, TheoremId, TheoremOutcome};
use super::VerifyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub theorems: Vec<TheoremId>,
    /// Orders up to 3 are enumerated exhaustively, larger ones are sampled.
    pub max_order: usize,
    /// Random semigroups drawn per sampled order.
    pub semigroup_samples: usize,
    /// Random sets per (semigroup, congruence) for the quotient and
    /// composition checks; randomized hypothesis sets per semigroup for the
    /// structure checks.
    pub cpfs_samples_per_instance: usize,
    pub seed: u64,
    pub mode: Mode,
    pub strict_bi_ideal: bool,
    /// Counterexamples kept per theorem; the total count is always reported.
    pub max_counterexamples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            theorems: TheoremId::ALL.to_vec(),
            max_order: 3,
            semigroup_samples: 50,
            cpfs_samples_per_instance: 25,
            seed: 1,
            mode: Mode::Claim,
            strict_bi_ideal: false,
            max_counterexamples: 5,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        let invalid = |msg: String| Err(VerifyError::ConfigInvalid(msg));
        if self.theorems.is_empty() {
            return invalid("no theorems selected".into());
        }
        if self.max_order == 0 {
            return invalid("max_order must be at least 1".into());
        }
        if self.max_order > DEFAULT_MAX_CONGRUENCE_ORDER {
            return invalid(format!(
                "max_order {} exceeds the congruence enumeration limit of {}",
                self.max_order, DEFAULT_MAX_CONGRUENCE_ORDER
            ));
        }
        if self.cpfs_samples_per_instance == 0 {
            return invalid("cpfs_samples_per_instance must be positive".into());
        }
        if self.max_counterexamples == 0 {
            return invalid("max_counterexamples must be positive".into());
        }
        Ok(())
    }

    pub fn check_options(&self) -> CheckOptions {
        CheckOptions {
            mode: self.mode,
            strict_bi_ideal: self.strict_bi_ideal,
        }
    }

    /// Whether `id` is only checked on complete congruences under this config.
    pub fn require_complete_only(&self, id: TheoremId) -> bool {
        self.check_options().requires_complete(id)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedGrades {
    pub name: String,
    pub grades: Vec<RawGrade>,
}

/// A failing instance with everything needed to re-run the check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub theorem: TheoremId,
    pub mode: Mode,
    pub strict_bi_ideal: bool,
    pub semigroup: Vec<Vec<usize>>,
    pub congruence: Vec<Vec<usize>>,
    pub congruence_complete: bool,
    pub sets: Vec<NamedGrades>,
    pub approximation: Approximation,
    pub witness: Witness,
}

impl Counterexample {
    /// Rebuilds the instance from the dump and runs the check again.
    pub fn replay(&self) -> Result<TheoremOutcome, VerifyError> {
        let s = FiniteSemigroup::from_rows(&self.semigroup)?;
        let classes: Vec<Vec<i64>> = self
            .congruence
            .iter()
            .map(|c| c.iter().map(|&e| e as i64).collect())
            .collect();
        let w = CongruencePartition::validate(&s, &classes)?;
        let sets = self
            .sets
            .iter()
            .map(|g| CubicFuzzySet::validate(s.order(), &g.grades))
            .collect::<Result<Vec<_>, _>>()?;
        let options = CheckOptions {
            mode: self.mode,
            strict_bi_ideal: self.strict_bi_ideal,
        };
        check_theorem(self.theorem, &s, &w, &sets[0], sets.get(1), &options)
    }

    /// Whether replaying yields the recorded witness.
    pub fn reproduces(&self) -> bool {
        matches!(self.replay(), Ok(TheoremOutcome::Fail(f)) if f.witness == self.witness && f.approximation == self.approximation)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub mode: Mode,
    pub complete_only: bool,
    pub semigroups_checked: u64,
    /// (semigroup, congruence) pairs the theorem was run on.
    pub congruences_checked: u64,
    /// Pairs left out because the congruence is not complete.
    pub congruences_excluded: u64,
    pub instances_checked: u64,
    /// Pairs for which no set satisfying the hypothesis was produced.
    pub hypothesis_skipped: u64,
    /// Composition theorems only: passing instances with proper containment.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strict_instances: Option<u64>,
    pub failure_count: u64,
    pub failures_on_complete: u64,
    pub failures_on_incomplete: u64,
    pub failures: Vec<Counterexample>,
}

impl TheoremReport {
    fn empty(id: TheoremId, config: &SweepConfig) -> Self {
        TheoremReport {
            theorem: id,
            mode: config.mode,
            complete_only: config.require_complete_only(id),
            semigroups_checked: 0,
            congruences_checked: 0,
            congruences_excluded: 0,
            instances_checked: 0,
            hypothesis_skipped: 0,
            strict_instances: id.takes_two_sets().then_some(0),
            failure_count: 0,
            failures_on_complete: 0,
            failures_on_incomplete: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn absorb(&mut self, other: TheoremReport, cap: usize) {
        self.semigroups_checked += other.semigroups_checked;
        self.congruences_checked += other.congruences_checked;
        self.congruences_excluded += other.congruences_excluded;
        self.instances_checked += other.instances_checked;
        self.hypothesis_skipped += other.hypothesis_skipped;
        if let (Some(a), Some(b)) = (self.strict_instances.as_mut(), other.strict_instances) {
            *a += b;
        }
        self.failure_count += other.failure_count;
        self.failures_on_complete += other.failures_on_complete;
        self.failures_on_incomplete += other.failures_on_incomplete;
        let room = cap.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

/// Every approximation computed for any checked set: whether it validated and
/// was constant on each congruence class.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproximationAudit {
    pub approximations_checked: u64,
    pub invalid: u64,
    pub not_class_constant: u64,
}

impl ApproximationAudit {
    pub fn clean(&self) -> bool {
        self.invalid == 0 && self.not_class_constant == 0
    }

    fn absorb(&mut self, other: ApproximationAudit) {
        self.approximations_checked += other.approximations_checked;
        self.invalid += other.invalid;
        self.not_class_constant += other.not_class_constant;
    }

    fn record(&mut self, s: &FiniteSemigroup, w: &CongruencePartition, p: &CubicFuzzySet) {
        for which in [Approximation::Lower, Approximation::Upper] {
            self.approximations_checked += 1;
            match approximate(s, w, p, which) {
                Err(_) => self.invalid += 1,
                Ok(a) => {
                    if CubicFuzzySet::validate(s.order(), &a.to_raw()).is_err() {
                        self.invalid += 1;
                    }
                    let constant = w
                        .classes()
                        .iter()
                        .all(|c| c.iter().all(|&e| a.grade(e) == a.grade(c[0])));
                    if !constant {
                        self.not_class_constant += 1;
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepOutcome {
    pub reports: Vec<TheoremReport>,
    pub audit: ApproximationAudit,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(TheoremReport::passed)
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    parts
        .iter()
        .fold(splitmix(seed), |acc, &p| splitmix(acc ^ p))
}

const TAG_SEMIGROUP: u64 = 1;
const TAG_SETS: u64 = 2;
const TAG_HYPOTHESIS: u64 = 3;

/// The semigroups a config covers, in sweep order.
pub fn sweep_semigroups(config: &SweepConfig) -> Result<Vec<FiniteSemigroup>, VerifyError> {
    config.validate()?;
    let mut out = Vec::new();
    for n in 1..=config.max_order {
        if n <= MAX_EXHAUSTIVE_ORDER {
            out.extend(enumerate_semigroups(n)?);
        } else {
            out.extend((0..config.semigroup_samples).map(|i| {
                random_semigroup(
                    n,
                    derive_seed(config.seed, &[TAG_SEMIGROUP, n as u64, i as u64]),
                )
            }));
        }
    }
    Ok(out)
}

pub fn sweep(config: &SweepConfig) -> Result<SweepOutcome, VerifyError> {
    sweep_with_workers(config, None)
}

/// Runs the sweep on `workers` threads (all cores when `None`). The outcome
/// does not depend on the worker count.
pub fn sweep_with_workers(
    config: &SweepConfig,
    workers: Option<usize>,
) -> Result<SweepOutcome, VerifyError> {
    let semigroups = sweep_semigroups(config)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| VerifyError::ConfigInvalid(format!("cannot start worker pool: {e}")))?;
    let partials = pool.install(|| {
        semigroups
            .par_iter()
            .enumerate()
            .map(|(si, s)| sweep_semigroup(config, si as u64, s))
            .collect::<Result<Vec<_>, VerifyError>>()
    })?;

    let mut reports: Vec<TheoremReport> = config
        .theorems
        .iter()
        .map(|&id| TheoremReport::empty(id, config))
        .collect();
    let mut audit = ApproximationAudit::default();
    for (partial_reports, partial_audit) in partials {
        for (total, part) in reports.iter_mut().zip(partial_reports) {
            total.absorb(part, config.max_counterexamples);
        }
        audit.absorb(partial_audit);
    }
    Ok(SweepOutcome { reports, audit })
}

fn theorem_index(id: TheoremId) -> u64 {
    TheoremId::ALL
        .iter()
        .position(|&t| t == id)
        .expect("listed") as u64
}

fn kind_index(kind: StructureKind) -> u64 {
    StructureKind::ALL
        .iter()
        .position(|&k| k == kind)
        .expect("listed") as u64
}

fn sweep_semigroup(
    config: &SweepConfig,
    si: u64,
    s: &FiniteSemigroup,
) -> Result<(Vec<TheoremReport>, ApproximationAudit), VerifyError> {
    let options = config.check_options();
    let congruences = enumerate_congruences(s)?;
    let mut hypothesis_cache: BTreeMap<u64, Vec<CubicFuzzySet>> = BTreeMap::new();
    let mut audit = ApproximationAudit::default();
    let mut reports = Vec::with_capacity(config.theorems.len());

    for &id in &config.theorems {
        let mut report = TheoremReport::empty(id, config);
        report.semigroups_checked = 1;
        let hypothesis_sets = match id.hypothesis_kind() {
            Some(kind) => {
                let sets = match hypothesis_cache.entry(kind_index(kind)) {
                    std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                    std::collections::btree_map::Entry::Vacant(e) => {
                        let mut budget = HypothesisBudget::new(
                            derive_seed(config.seed, &[TAG_HYPOTHESIS, si, kind_index(kind)]),
                            config.cpfs_samples_per_instance,
                        );
                        budget.strict_bi_ideal = config.strict_bi_ideal;
                        e.insert(hypothesis_generator(s, kind, budget)?)
                    }
                };
                Some(sets.clone())
            }
            None => None,
        };

        for (ci, w) in congruences.iter().enumerate() {
            if options.requires_complete(id) && !w.is_complete() {
                report.congruences_excluded += 1;
                continue;
            }
            report.congruences_checked += 1;
            let instances: Vec<(CubicFuzzySet, Option<CubicFuzzySet>)> = match &hypothesis_sets {
                Some(sets) => sets.iter().map(|p| (p.clone(), None)).collect(),
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(
                        config.seed,
                        &[TAG_SETS, si, ci as u64, theorem_index(id)],
                    ));
                    (0..config.cpfs_samples_per_instance)
                        .map(|_| {
                            let p = random_cpfs_of_order(s.order(), &mut rng);
                            let q = id
                                .takes_two_sets()
                                .then(|| random_cpfs_of_order(s.order(), &mut rng));
                            (p, q)
                        })
                        .collect()
                }
            };
            if instances.is_empty() {
                report.hypothesis_skipped += 1;
                continue;
            }
            for (p, q) in &instances {
                audit.record(s, w, p);
                if let Some(q) = q {
                    audit.record(s, w, q);
                }
                let outcome = match check_theorem(id, s, w, p, q.as_ref(), &options) {
                    Ok(outcome) => outcome,
                    Err(VerifyError::HypothesisNotMet { .. }) => continue,
                    Err(e) => return Err(e),
                };
                report.instances_checked += 1;
                match outcome {
                    TheoremOutcome::Pass { strict } => {
                        if let (Some(count), Some(true)) =
                            (report.strict_instances.as_mut(), strict)
                        {
                            *count += 1;
                        }
                    }
                    TheoremOutcome::Fail(failure) => {
                        report.failure_count += 1;
                        if w.is_complete() {
                            report.failures_on_complete += 1;
                        } else {
                            report.failures_on_incomplete += 1;
                        }
                        if report.failures.len() < config.max_counterexamples {
                            let mut sets = vec![NamedGrades {
                                name: "P".into(),
                                grades: p.to_raw(),
                            }];
                            if let Some(q) = q {
                                sets.push(NamedGrades {
                                    name: "Q".into(),
                                    grades: q.to_raw(),
                                });
                            }
                            report.failures.push(Counterexample {
                                theorem: id,
                                mode: config.mode,
                                strict_bi_ideal: config.strict_bi_ideal,
                                semigroup: s.rows(),
                                congruence: w.classes().to_vec(),
                                congruence_complete: w.is_complete(),
                                sets,
                                approximation: failure.approximation,
                                witness: failure.witness,
                            });
                        }
                    }
                }
            }
        }
        reports.push(report);
    }
    Ok((reports, audit))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(SweepConfig::default().validate().is_ok());
        for bad in [
            SweepConfig {
                max_order: 0,
                ..SweepConfig::default()
            },
            SweepConfig {
                max_order: 7,
                ..SweepConfig::default()
            },
            SweepConfig {
                cpfs_samples_per_instance: 0,
                ..SweepConfig::default()
            },
            SweepConfig {
                theorems: vec![],
                ..SweepConfig::default()
            },
        ] {
            assert!(matches!(sweep(&bad), Err(VerifyError::ConfigInvalid(_))));
        }
    }

    #[test]
    fn one_element_semigroup_sweep() {
        let config = SweepConfig {
            max_order: 1,
            semigroup_samples: 0,
            ..SweepConfig::default()
        };
        let outcome = sweep(&config).unwrap();
        assert_eq!(outcome.reports.len(), 13);
        for r in &outcome.reports {
            assert!(r.instances_checked >= 1, "{}", r.theorem);
            assert!(r.passed(), "{}", r.theorem);
        }
        assert!(outcome.audit.clean());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let config = SweepConfig {
            max_order: 2,
            theorems: vec![TheoremId::T3_1, TheoremId::T4_1, TheoremId::P3_1],
            ..SweepConfig::default()
        };
        let one = sweep_with_workers(&config, Some(1)).unwrap();
        let four = sweep_with_workers(&config, Some(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn sampled_orders_are_seeded() {
        let config = SweepConfig {
            max_order: 4,
            semigroup_samples: 3,
            ..SweepConfig::default()
        };
        let a = sweep_semigroups(&config).unwrap();
        assert_eq!(a.len(), 1 + 8 + 113 + 3);
        assert_eq!(a, sweep_semigroups(&config).unwrap());
        let other = SweepConfig { seed: 2, ..config };
        assert_ne!(a[122..], sweep_semigroups(&other).unwrap()[122..]);
    }
}

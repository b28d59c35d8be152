//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rough_cpfs::algebra::{
    enumerate_congruences, enumerate_semigroups, random_semigroup, CongruencePartition,
    FiniteSemigroup,
};
use rough_cpfs::cpfs::{compose, cpfs_contains, random_cpfs, CpfsError, CubicFuzzySet, RawGrade};
use rough_cpfs::rough::{approximate, lower_approx, upper_approx, Approximation};
use serde_json::Value;

const SWEEP_TIME_LIMIT: Duration = Duration::from_secs(60);
const SANDWICH_INSTANCES: usize = 1000;
const COMPOSE_INSTANCES: usize = 500;
const IDENTITY_INSTANCES: usize = 200;
const CLOSURE_DRAWS: usize = 10_000;

struct Tally {
    failed: usize,
}

impl Tally {
    fn record(&mut self, name: &str, ok: bool, detail: String) {
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failed += 1;
        }
    }
}

/// Runs a command line through the same entry point as the `rcpfs` binary.
fn rcpfs(args: &[&str]) -> u8 {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rcpfs").chain(args.iter().copied());
    rough_cpfs_cli::run(argv, &mut out, &mut err)
}

fn read_json(path: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).expect("report written"))
        .expect("report parses")
}

fn random_instance(
    rng: &mut ChaCha8Rng,
    orders: std::ops::RangeInclusive<usize>,
) -> (FiniteSemigroup, CongruencePartition) {
    let s = random_semigroup(rng.gen_range(orders), rng.gen());
    let ws = enumerate_congruences(&s).expect("small order");
    let w = ws[rng.gen_range(0..ws.len())].clone();
    (s, w)
}

fn naive_compose(s: &FiniteSemigroup, p: &CubicFuzzySet, q: &CubicFuzzySet) -> Vec<RawGrade> {
    let n = s.order();
    (0..n)
        .map(|z| {
            let mut g = RawGrade {
                im: [0.0, 0.0],
                inm: [1.0, 1.0],
                m: 0.0,
                nm: 1.0,
            };
            for a in 0..n {
                for b in 0..n {
                    if s.mul(a, b) != z {
                        continue;
                    }
                    let (x, y) = (p.grade(a).to_raw(), q.grade(b).to_raw());
                    for k in 0..2 {
                        g.im[k] = g.im[k].max(x.im[k].min(y.im[k]));
                        g.inm[k] = g.inm[k].min(x.inm[k].max(y.inm[k]));
                    }
                    g.m = g.m.max(x.m.min(y.m));
                    g.nm = g.nm.min(x.nm.max(y.nm));
                }
            }
            g
        })
        .collect()
}

fn pythagorean(e: &CpfsError) -> bool {
    matches!(
        e,
        CpfsError::PythagoreanViolation { .. } | CpfsError::IntervalPythagoreanViolation { .. }
    )
}

fn main() {
    let dir = tempfile::TempDir::new().expect("temp dir");
    let mut tally = Tally { failed: 0 };

    // 1, 2 and 5 share the default claim-mode sweep
    let report_path = dir.path().join("claim.json");
    let started = Instant::now();
    let code = rcpfs(&[
        "verify",
        "--theorem",
        "all",
        "--max-order",
        "3",
        "--seed",
        "1",
        "--cpfs-samples",
        "25",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    let elapsed = started.elapsed();
    let doc = read_json(&report_path);
    let reports = doc["reports"].as_array().expect("reports").clone();
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| r["failure_count"].as_u64() != Some(0))
        .map(|r| {
            format!(
                "{} ({} of {}, {} on incomplete congruences)",
                r["theorem"].as_str().unwrap(),
                r["failure_count"],
                r["instances_checked"],
                r["failures_on_incomplete"]
            )
        })
        .collect();
    let on_complete: u64 = reports
        .iter()
        .map(|r| r["failures_on_complete"].as_u64().unwrap())
        .sum();
    let sweep_ok =
        failing.is_empty() && reports.len() == 13 && elapsed < SWEEP_TIME_LIMIT && code == 0;
    tally.record(
        "claim-mode sweep, 13 checks at order <= 3, seed 1",
        sweep_ok,
        format!(
            "{} reports in {:.1}s (limit {}s), exit {}; failing: {}; failures on complete congruences: {on_complete}",
            reports.len(),
            elapsed.as_secs_f64(),
            SWEEP_TIME_LIMIT.as_secs(),
            code,
            if failing.is_empty() { "none".to_string() } else { failing.join(", ") }
        ),
    );

    let audit = &doc["audit"];
    let p31 = reports
        .iter()
        .find(|r| r["theorem"] == "P3_1")
        .expect("P3_1 report");
    let audit_ok = audit["invalid"] == 0
        && audit["not_class_constant"] == 0
        && p31["failure_count"] == 0
        && audit["approximations_checked"].as_u64().unwrap_or(0) > 0;
    tally.record(
        "approximations valid and class-constant across the sweep",
        audit_ok,
        format!(
            "{} approximations audited, {} invalid, {} not class-constant; P3_1 failures {}",
            audit["approximations_checked"],
            audit["invalid"],
            audit["not_class_constant"],
            p31["failure_count"]
        ),
    );

    {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut bad = 0;
        for _ in 0..SANDWICH_INSTANCES {
            let (s, w) = random_instance(&mut rng, 1..=5);
            let p = random_cpfs(&s, rng.gen());
            let lower = lower_approx(&s, &w, &p).unwrap();
            let upper = upper_approx(&s, &w, &p).unwrap();
            let ok = cpfs_contains(&lower, &p).unwrap().holds()
                && cpfs_contains(&p, &upper).unwrap().holds()
                && lower_approx(&s, &w, &lower).unwrap() == lower
                && upper_approx(&s, &w, &upper).unwrap() == upper;
            if !ok {
                bad += 1;
            }
        }
        tally.record(
            "sandwich and idempotence",
            bad == 0,
            format!("{bad} of {SANDWICH_INSTANCES} instances violate lower <= P <= upper or idempotence"),
        );
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut bad = 0;
        for _ in 0..COMPOSE_INSTANCES {
            let s = random_semigroup(rng.gen_range(2..=5), rng.gen());
            let p = random_cpfs(&s, rng.gen());
            let q = random_cpfs(&s, rng.gen());
            if compose(&s, &p, &q).unwrap().to_raw() != naive_compose(&s, &p, &q) {
                bad += 1;
            }
        }
        tally.record(
            "composition equals the naive triple loop",
            bad == 0,
            format!("{bad} of {COMPOSE_INSTANCES} instances of orders 2-5 differ"),
        );
    }

    let t31 = reports
        .iter()
        .find(|r| r["theorem"] == "T3_1")
        .expect("T3_1 report");
    let strict = t31["strict_instances"].as_u64().unwrap_or(0);
    tally.record(
        "lower composition containment is sometimes strict",
        strict >= 1 && t31["failure_count"] == 0,
        format!("{strict} strict of {} instances", t31["instances_checked"]),
    );

    {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut bad = 0;
        for _ in 0..IDENTITY_INSTANCES {
            let s = random_semigroup(rng.gen_range(1..=6), rng.gen());
            let w = CongruencePartition::identity(&s);
            let p = random_cpfs(&s, rng.gen());
            if lower_approx(&s, &w, &p).unwrap() != p || upper_approx(&s, &w, &p).unwrap() != p {
                bad += 1;
            }
        }
        tally.record(
            "identity congruence leaves sets unchanged",
            bad == 0,
            format!("{bad} of {IDENTITY_INSTANCES} instances changed"),
        );
    }

    {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut violations = 0;
        let mut other_errors = 0;
        let mut checked = 0;
        let mut previous: Option<CubicFuzzySet> = None;
        for _ in 0..CLOSURE_DRAWS {
            let (s, w) = random_instance(&mut rng, 1..=5);
            let p = random_cpfs(&s, rng.gen());
            let mut results: Vec<Result<CubicFuzzySet, CpfsError>> = vec![
                CubicFuzzySet::validate(s.order(), &p.to_raw()),
                approximate(&s, &w, &p, Approximation::Lower),
                approximate(&s, &w, &p, Approximation::Upper),
                compose(&s, &p, &p),
            ];
            if let Some(q) = previous.as_ref().filter(|q| q.order() == s.order()) {
                results.push(compose(&s, q, &p));
            }
            for r in results {
                checked += 1;
                match r.and_then(|set| CubicFuzzySet::validate(s.order(), &set.to_raw())) {
                    Ok(_) => {}
                    Err(e) if pythagorean(&e) => violations += 1,
                    Err(_) => other_errors += 1,
                }
            }
            previous = Some(p);
        }
        tally.record(
            "Pythagorean closure at tolerance 1e-9",
            violations == 0 && other_errors == 0,
            format!("{checked} sets from {CLOSURE_DRAWS} draws: {violations} Pythagorean violations, {other_errors} other errors"),
        );
    }

    {
        let a = dir.path().join("det_a.json");
        let b = dir.path().join("det_b.json");
        let c = dir.path().join("det_c.json");
        let base = [
            "verify",
            "--theorem",
            "all",
            "--max-order",
            "3",
            "--seed",
            "1",
        ];
        let run = |path: &std::path::Path, workers: &str| {
            let mut args = base.to_vec();
            args.extend(["--out", path.to_str().unwrap(), "--workers", workers]);
            rcpfs(&args);
        };
        std::fs::copy(&report_path, &a).unwrap();
        run(&b, "1");
        run(&c, "4");
        let bytes = std::fs::read(&a).unwrap();
        let same_b = bytes == std::fs::read(&b).unwrap();
        let same_c = bytes == std::fs::read(&c).unwrap();
        tally.record(
            "byte-identical reports across runs and worker counts",
            same_b && same_c,
            format!("default vs 1 worker: {same_b}, default vs 4 workers: {same_c}"),
        );
    }

    {
        let tables: Vec<usize> = (1..=3)
            .map(|n| enumerate_semigroups(n).unwrap().count())
            .collect();
        let fixtures: [(&str, FiniteSemigroup, usize, usize); 9] = [
            ("min2", FiniteSemigroup::min_semilattice(2), 2, 2),
            ("leftzero2", FiniteSemigroup::left_zero(2), 2, 2),
            ("zero2", FiniteSemigroup::null(2), 2, 1),
            ("leftzero3", FiniteSemigroup::left_zero(3), 5, 5),
            ("min3", FiniteSemigroup::min_semilattice(3), 4, 4),
            ("null3", FiniteSemigroup::null(3), 5, 2),
            ("z3", FiniteSemigroup::cyclic_group(3), 2, 2),
            ("min4", FiniteSemigroup::min_semilattice(4), 8, 8),
            ("z4", FiniteSemigroup::cyclic_group(4), 3, 3),
        ];
        let mismatched: Vec<String> = fixtures
            .iter()
            .filter_map(|(name, s, total, complete)| {
                let ws = enumerate_congruences(s).unwrap();
                let got = (ws.len(), ws.iter().filter(|w| w.is_complete()).count());
                (got != (*total, *complete)).then(|| format!("{name} {got:?}"))
            })
            .collect();
        tally.record(
            "enumeration fixtures",
            tables == [1, 8, 113] && mismatched.is_empty(),
            format!(
                "associative tables {tables:?} (frozen [1, 8, 113]); congruence fixtures mismatched: {}",
                if mismatched.is_empty() { "none".to_string() } else { mismatched.join(", ") }
            ),
        );
    }

    println!("{} criteria failed", tally.failed);
    if tally.failed > 0 {
        std::process::exit(1);
    }
}

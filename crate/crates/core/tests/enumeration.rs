//! Counts checked against a second, deliberately naive brute force and
//! against frozen values.

use std::collections::BTreeSet;

use rough_cpfs::algebra::{
    enumerate_congruences, enumerate_semigroups, find_crisp_ideals, FiniteSemigroup, SetPartitions,
    StructureKind,
};

fn associative(n: usize, t: &[usize]) -> bool {
    (0..n)
        .all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])))
}

fn naive_table_count(n: usize) -> usize {
    let cells = n * n;
    let mut count = 0;
    let mut t = vec![0; cells];
    'outer: loop {
        if associative(n, &t) {
            count += 1;
        }
        for cell in t.iter_mut() {
            *cell += 1;
            if *cell < n {
                continue 'outer;
            }
            *cell = 0;
        }
        return count;
    }
}

/// (congruences, complete congruences), found by trying every labelling of
/// the elements and keeping the distinct compatible relations.
fn naive_congruences(s: &FiniteSemigroup) -> (usize, usize) {
    let n = s.order();
    let mut seen = BTreeSet::new();
    let mut complete = 0;
    for code in 0..n.pow(n as u32) {
        let label: Vec<usize> = (0..n).map(|i| code / n.pow(i as u32) % n).collect();
        let related = |a: usize, b: usize| label[a] == label[b];
        let relation: Vec<bool> = (0..n * n).map(|k| related(k / n, k % n)).collect();
        let compatible = (0..n).all(|a| {
            (0..n).all(|b| {
                !related(a, b)
                    || (0..n).all(|c| {
                        related(s.mul(c, a), s.mul(c, b)) && related(s.mul(a, c), s.mul(b, c))
                    })
            })
        });
        if !compatible || !seen.insert(relation) {
            continue;
        }
        let class = |x: usize| -> BTreeSet<usize> { (0..n).filter(|&y| related(x, y)).collect() };
        let is_complete = (0..n).all(|a| {
            (0..n).all(|b| {
                let product: BTreeSet<usize> = class(a)
                    .iter()
                    .flat_map(|&x| class(b).into_iter().map(move |y| (x, y)))
                    .map(|(x, y)| s.mul(x, y))
                    .collect();
                product == class(s.mul(a, b))
            })
        });
        if is_complete {
            complete += 1;
        }
    }
    (seen.len(), complete)
}

fn fixtures() -> Vec<(&'static str, FiniteSemigroup, usize, usize)> {
    vec![
        ("min2", FiniteSemigroup::min_semilattice(2), 2, 2),
        ("leftzero2", FiniteSemigroup::left_zero(2), 2, 2),
        ("zero2", FiniteSemigroup::null(2), 2, 1),
        ("leftzero3", FiniteSemigroup::left_zero(3), 5, 5),
        ("min3", FiniteSemigroup::min_semilattice(3), 4, 4),
        ("null3", FiniteSemigroup::null(3), 5, 2),
        ("z3", FiniteSemigroup::cyclic_group(3), 2, 2),
        ("min4", FiniteSemigroup::min_semilattice(4), 8, 8),
        ("z4", FiniteSemigroup::cyclic_group(4), 3, 3),
    ]
}

#[test]
fn associative_table_counts() {
    for (n, frozen) in [(1, 1), (2, 8), (3, 113)] {
        assert_eq!(naive_table_count(n), frozen);
        assert_eq!(
            enumerate_semigroups(n).unwrap().count(),
            frozen,
            "order {n}"
        );
    }
}

#[test]
fn congruence_counts_of_fixture_semigroups() {
    for (name, s, total, complete) in fixtures() {
        assert_eq!(naive_congruences(&s), (total, complete), "{name} oracle");
        let ws = enumerate_congruences(&s).unwrap();
        assert_eq!(ws.len(), total, "{name}");
        assert_eq!(
            ws.iter().filter(|w| w.is_complete()).count(),
            complete,
            "{name}"
        );
        for w in &ws {
            assert_eq!(w.is_complete(), w.compute_complete(&s));
        }
    }
}

#[test]
fn congruence_totals_over_all_small_semigroups() {
    for (n, frozen) in [(1, (1, 1)), (2, (16, 14)), (3, (409, 226))] {
        let mut fast = (0, 0);
        let mut slow = (0, 0);
        for s in enumerate_semigroups(n).unwrap() {
            let ws = enumerate_congruences(&s).unwrap();
            fast.0 += ws.len();
            fast.1 += ws.iter().filter(|w| w.is_complete()).count();
            let (t, c) = naive_congruences(&s);
            slow.0 += t;
            slow.1 += c;
        }
        assert_eq!(fast, slow, "order {n}");
        assert_eq!(fast, frozen, "order {n}");
    }
}

#[test]
fn set_partitions_are_bell_numbers() {
    for (n, bell) in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
        assert_eq!(SetPartitions::new(n).count(), bell);
    }
}

#[test]
fn crisp_left_ideals_of_min_semilattice() {
    let s = FiniteSemigroup::min_semilattice(3);
    let found: Vec<Vec<usize>> = find_crisp_ideals(&s, StructureKind::LeftIdeal)
        .unwrap()
        .iter()
        .map(|set| set.to_vec())
        .collect();
    // down-sets of the chain 0 < 1 < 2
    assert_eq!(found, vec![vec![0], vec![0, 1], vec![0, 1, 2]]);
}

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AlgebraError, Element, FiniteSemigroup};

/// Largest order for which [`enumerate_semigroups`] scans every table (3^9 tables at n = 3).
pub const MAX_EXHAUSTIVE_ORDER: usize = 3;

const RANDOM_TABLE_ATTEMPTS: usize = 64;

/// Every associative table on `{0..n-1}`, in lexicographic order of the
/// row-major table.
pub fn enumerate_semigroups(
    n: usize,
) -> Result<impl Iterator<Item = FiniteSemigroup>, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::EmptySemigroup);
    }
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(AlgebraError::OrderTooLarge {
            order: n,
            max: MAX_EXHAUSTIVE_ORDER,
            what: "exhaustive semigroup enumeration",
        });
    }
    let cells = n * n;
    let total = n.pow(cells as u32);
    Ok((0..total).filter_map(move |index| {
        let mut table = vec![0; cells];
        let mut rest = index;
        for cell in table.iter_mut().rev() {
            *cell = rest % n;
            rest /= n;
        }
        FiniteSemigroup::flat_is_associative(n, &table)
            .then(|| FiniteSemigroup::from_flat_unchecked(n, table))
    }))
}

/// A pseudo-random semigroup of order `n`, fully determined by `(n, seed)`.
///
/// Uniform random tables are tried first; once the rejection budget runs out
/// a construction that is associative by design is drawn instead, and its
/// elements are relabelled by a random permutation.
pub fn random_semigroup(n: usize, seed: u64) -> FiniteSemigroup {
    assert!(n >= 1, "semigroup order must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(32));
    random_semigroup_with(n, &mut rng)
}

fn random_semigroup_with(n: usize, rng: &mut ChaCha8Rng) -> FiniteSemigroup {
    if n == 1 {
        return FiniteSemigroup::null(1);
    }
    for _ in 0..RANDOM_TABLE_ATTEMPTS {
        let table: Vec<Element> = (0..n * n).map(|_| rng.gen_range(0..n)).collect();
        if FiniteSemigroup::flat_is_associative(n, &table) {
            return FiniteSemigroup::from_flat_unchecked(n, table);
        }
    }
    let base = construct(n, rng);
    relabel(&base, rng)
}

fn construct(n: usize, rng: &mut ChaCha8Rng) -> FiniteSemigroup {
    match rng.gen_range(0..9) {
        0 => FiniteSemigroup::left_zero(n),
        1 => FiniteSemigroup::right_zero(n),
        2 => FiniteSemigroup::null(n),
        3 => {
            let mut rank: Vec<usize> = (0..n).collect();
            rank.shuffle(rng);
            FiniteSemigroup::chain_semilattice(&rank)
        }
        4 => monogenic(n, rng.gen_range(1..=n)),
        5 | 6 => inflation(n, rng),
        _ => adjoin(n, rng),
    }
}

/// `{a, a^2, ..., a^n}` with `a^(n+1) = a^index`.
fn monogenic(n: usize, index: usize) -> FiniteSemigroup {
    // element k stands for a^(k+1)
    let period = n + 1 - index;
    let reduce = |power: usize| {
        if power <= n {
            power
        } else {
            index + (power - index) % period
        }
    };
    FiniteSemigroup::from_fn(n, |a, b| reduce(a + b + 2) - 1).expect("monogenic is associative")
}

/// A random semigroup `T` of smaller order extended by extra elements that
/// multiply through a retraction onto `T`.
fn inflation(n: usize, rng: &mut ChaCha8Rng) -> FiniteSemigroup {
    let core_order = rng.gen_range(1..n);
    let core = random_semigroup_with(core_order, rng);
    let retract: Vec<Element> = (0..n)
        .map(|e| {
            if e < core_order {
                e
            } else {
                rng.gen_range(0..core_order)
            }
        })
        .collect();
    FiniteSemigroup::from_fn(n, |a, b| core.mul(retract[a], retract[b]))
        .expect("inflation is associative")
}

/// A random semigroup of order `n - 1` with an adjoined zero or identity.
fn adjoin(n: usize, rng: &mut ChaCha8Rng) -> FiniteSemigroup {
    let core = random_semigroup_with(n - 1, rng);
    let extra = n - 1;
    let zero = rng.gen_bool(0.5);
    FiniteSemigroup::from_fn(n, |a, b| match (a == extra, b == extra) {
        (false, false) => core.mul(a, b),
        (true, true) => extra,
        (true, false) => {
            if zero {
                extra
            } else {
                b
            }
        }
        (false, true) => {
            if zero {
                extra
            } else {
                a
            }
        }
    })
    .expect("adjoining a zero or identity preserves associativity")
}

fn relabel(s: &FiniteSemigroup, rng: &mut ChaCha8Rng) -> FiniteSemigroup {
    let n = s.order();
    let mut perm: Vec<Element> = (0..n).collect();
    perm.shuffle(rng);
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    FiniteSemigroup::from_fn(n, |a, b| perm[s.mul(inverse[a], inverse[b])])
        .expect("isomorphic copy is associative")
}

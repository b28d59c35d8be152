use super::{AlgebraError, ElementSet, FiniteSemigroup, StructureKind};

/// Largest order for which [`find_crisp_ideals`] walks every subset.
pub const MAX_SUBSET_ORDER: usize = 12;

/// Whether the subset `set` satisfies the crisp condition for `kind`:
///
/// * subsemigroup: `I I ⊆ I`
/// * left ideal: `S I ⊆ I`; right ideal: `I S ⊆ I`; ideal: both
/// * bi-ideal: `I S I ⊆ I` and `I I ⊆ I`
/// * interior ideal: `S I S ⊆ I`
pub fn is_crisp_structure(s: &FiniteSemigroup, set: &ElementSet, kind: StructureKind) -> bool {
    let inside = |e| set.contains(e);
    let members: Vec<_> = set.iter().collect();
    match kind {
        StructureKind::Subsemigroup => members
            .iter()
            .all(|&a| members.iter().all(|&b| inside(s.mul(a, b)))),
        StructureKind::LeftIdeal => s
            .elements()
            .all(|x| members.iter().all(|&a| inside(s.mul(x, a)))),
        StructureKind::RightIdeal => s
            .elements()
            .all(|x| members.iter().all(|&a| inside(s.mul(a, x)))),
        StructureKind::Ideal => {
            is_crisp_structure(s, set, StructureKind::LeftIdeal)
                && is_crisp_structure(s, set, StructureKind::RightIdeal)
        }
        StructureKind::BiIdeal => {
            is_crisp_structure(s, set, StructureKind::Subsemigroup)
                && members.iter().all(|&a| {
                    s.elements()
                        .all(|y| members.iter().all(|&c| inside(s.mul3(a, y, c))))
                })
        }
        StructureKind::InteriorIdeal => s.elements().all(|x| {
            members
                .iter()
                .all(|&a| s.elements().all(|y| inside(s.mul3(x, a, y))))
        }),
    }
}

/// All nonempty subsets satisfying the crisp condition for `kind`, ordered by
/// subset bitmask.
pub fn find_crisp_ideals(
    s: &FiniteSemigroup,
    kind: StructureKind,
) -> Result<Vec<ElementSet>, AlgebraError> {
    let n = s.order();
    if n > MAX_SUBSET_ORDER {
        return Err(AlgebraError::OrderTooLarge {
            order: n,
            max: MAX_SUBSET_ORDER,
            what: "crisp ideal search",
        });
    }
    Ok((1u64..(1u64 << n))
        .map(|mask| ElementSet::from_mask(n, mask))
        .filter(|set| is_crisp_structure(s, set, kind))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_set_always_qualifies() {
        for s in [
            FiniteSemigroup::left_zero(3),
            FiniteSemigroup::null(3),
            FiniteSemigroup::cyclic_group(3),
        ] {
            for kind in StructureKind::ALL {
                let found = find_crisp_ideals(&s, kind).unwrap();
                assert_eq!(found.last(), Some(&ElementSet::full(3)), "{kind}");
            }
        }
    }

    #[test]
    fn left_zero_singletons_are_right_ideals() {
        let s = FiniteSemigroup::left_zero(3);
        let right = find_crisp_ideals(&s, StructureKind::RightIdeal).unwrap();
        for a in 0..3 {
            assert!(right.contains(&ElementSet::from_members(3, [a]).unwrap()));
        }
        // only the whole set is a left ideal: S * {a} = S
        let left = find_crisp_ideals(&s, StructureKind::LeftIdeal).unwrap();
        assert_eq!(left, vec![ElementSet::full(3)]);
    }

    #[test]
    fn absorbing_zero_is_an_ideal() {
        let s = FiniteSemigroup::min_semilattice(2);
        let ideals = find_crisp_ideals(&s, StructureKind::Ideal).unwrap();
        assert_eq!(ideals[0].to_vec(), vec![0]);
    }

    #[test]
    fn group_has_only_trivial_ideal() {
        let s = FiniteSemigroup::cyclic_group(3);
        assert_eq!(
            find_crisp_ideals(&s, StructureKind::Ideal).unwrap().len(),
            1
        );
        // {0} is a subsemigroup but not an ideal
        let subs = find_crisp_ideals(&s, StructureKind::Subsemigroup).unwrap();
        assert_eq!(subs.len(), 2);
    }

    #[test]
    fn too_large() {
        let s = FiniteSemigroup::null(13);
        assert!(find_crisp_ideals(&s, StructureKind::LeftIdeal).is_err());
    }
}

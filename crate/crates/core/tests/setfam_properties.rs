mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use wfp_core::bounds::{binomial, bound_milner, bound_singleton, bound_sperner_lu};
use wfp_core::oracles::{random_family, FamilyConstraint};
use wfp_core::setfam::{chain_through, shade, shadow, symmetric_chain_decomposition, Family, Subset};

use common::{families, naive_sperner, sets};

/// Seeded family parameters: `(n, sizes, seed)` with sizes a nonempty subset of `0..=n`.
fn family_params(max_n: usize) -> impl Strategy<Value = (usize, Vec<usize>, u64)> {
    (1..=max_n).prop_flat_map(|n| {
        (Just(n), prop::collection::btree_set(0..=n, 1..=n + 1), any::<u64>())
            .prop_map(|(n, s, seed)| (n, s.into_iter().collect(), seed))
    })
}

fn random_sperner(n: usize, sizes: &[usize], seed: u64) -> Family {
    random_family(n, sizes, FamilyConstraint::sperner(), usize::MAX, seed).unwrap()
}

proptest! {
    #[test]
    fn sperner_matches_definition(f in families(6, 8)) {
        prop_assert_eq!(f.is_sperner(), naive_sperner(&sets(&f)));
    }

    #[test]
    fn non_2_covering_is_intersecting_complement(f in families(6, 8)) {
        prop_assert_eq!(f.is_non_2_covering(), f.complement().is_k_intersecting(1).unwrap());
    }

    #[test]
    fn extremes_are_min_and_max(f in families(8, 8)) {
        let sizes: Vec<usize> = f.iter().map(|s| s.len()).collect();
        match f.size_extremes() {
            Ok((l, u)) => {
                prop_assert_eq!(Some(&l), sizes.iter().min());
                prop_assert_eq!(Some(&u), sizes.iter().max());
            }
            Err(_) => prop_assert!(f.is_empty()),
        }
    }

    #[test]
    fn shade_and_shadow_compose(f in families(7, 6).prop_filter("nonempty", |f| !f.is_empty())) {
        let n = f.ground_size();
        let (l, u) = f.size_extremes().unwrap();
        for r in u..n {
            let once = shade(&f, r + 1).unwrap().canonical();
            let twice = shade(&shade(&f, r).unwrap(), r + 1).unwrap().canonical();
            prop_assert_eq!(once, twice);
        }
        for s in 1..=l {
            let once = shadow(&f, s - 1).unwrap().canonical();
            let twice = shadow(&shadow(&f, s).unwrap(), s - 1).unwrap().canonical();
            prop_assert_eq!(once, twice);
        }
    }

    #[test]
    fn shade_is_monotone(f in families(7, 5).prop_filter("nonempty", |f| !f.is_empty()), extra in any::<u64>()) {
        let n = f.ground_size();
        let (_, u) = f.size_extremes().unwrap();
        let mut g = f.clone();
        let pick = f.sets()[extra as usize % f.len()];
        g.push(Subset::from_bits(n, pick.bits() & extra).unwrap()).unwrap();
        let small: BTreeSet<u64> = shade(&f, u).unwrap().iter().map(|s| s.bits()).collect();
        let large: BTreeSet<u64> = shade(&g, u).unwrap().iter().map(|s| s.bits()).collect();
        prop_assert!(small.is_subset(&large));
        for b in &small {
            prop_assert_eq!(b.count_ones() as usize, u);
            prop_assert!(f.iter().any(|s| s.bits() & !b == 0));
        }
    }

    #[test]
    fn intersecting_shadow_is_no_smaller(n in 2usize..=12, k in 1usize..=12, seed in any::<u64>(), len in 1usize..40) {
        prop_assume!(k <= n);
        let a = random_family(n, &[k], FamilyConstraint::intersecting(1), len, seed).unwrap();
        prop_assert!(shadow(&a, k - 1).unwrap().len() >= a.len());
    }

    #[test]
    fn uniform_shade_and_shadow_gains(n in 3usize..=11, k in 1usize..11, seed in any::<u64>(), len in 1usize..60) {
        prop_assume!(k < n);
        let f = random_family(n, &[k], FamilyConstraint::default(), len, seed).unwrap();
        if k >= (n + 3) / 2 {
            let gain = shadow(&f, k - 1).unwrap().len() as i64 - f.len() as i64;
            prop_assert!(gain >= k as i64 - 1);
        }
        if 2 * k + 2 <= n {
            let gain = shade(&f, k + 1).unwrap().len() as i64 - f.len() as i64;
            prop_assert!(gain >= (n - k - 1) as i64);
        }
    }

    #[test]
    fn sperner_bounds_hold((n, sizes, seed) in family_params(10)) {
        let f = random_sperner(n, &sizes, seed);
        let (l, u) = f.size_extremes().unwrap();
        let len = f.len() as u64;
        prop_assert!(len <= binomial(n as u64, n as u64 / 2).unwrap());
        if 2 * l <= n && n <= 2 * u {
            prop_assert!(len <= bound_sperner_lu(n as u64, l as u64, u as u64).unwrap());
        }
        if l == 1 && n >= 2 {
            prop_assert!(len <= bound_singleton(n as u64).unwrap());
        }
    }

    #[test]
    fn intersecting_sperner_respects_milner((n, sizes, seed) in family_params(10), k in 1usize..4) {
        let c = FamilyConstraint { sperner: true, intersecting: k, non_2_covering: false };
        if let Ok(f) = random_family(n, &sizes, c, usize::MAX, seed) {
            prop_assert!(f.len() as u64 <= bound_milner(n as u64, k as u64).unwrap());
        }
    }

    #[test]
    fn layered_shade_gain((n, sizes, seed) in family_params(10)) {
        let f = random_sperner(n, &sizes, seed);
        let (l, u) = f.size_extremes().unwrap();
        for i in l..=u.min(n / 2) {
            let low = f.filter_sizes(|k| k <= i);
            let gain = (i - l) * (n - i);
            prop_assert!(shade(&low, i).unwrap().len() >= low.len() + gain);
        }
        for i in l.max(n.div_ceil(2))..=u {
            let high = f.filter_sizes(|k| k >= i);
            let gain = i * (u - i);
            prop_assert!(shadow(&high, i).unwrap().len() >= high.len() + gain);
        }
    }

    #[test]
    fn chain_through_is_symmetric(n in 1usize..=64, bits in any::<u64>()) {
        let s = Subset::from_bits(n, bits & wfp_core::setfam::full_mask(n)).unwrap();
        let chain = chain_through(s);
        prop_assert!(chain.contains(&s));
        prop_assert_eq!(chain[0].len() + chain[chain.len() - 1].len(), n);
        for w in chain.windows(2) {
            prop_assert!(w[0].is_subset_of(w[1]));
            prop_assert_eq!(w[0].len() + 1, w[1].len());
        }
        for t in &chain {
            prop_assert_eq!(&chain_through(*t), &chain);
        }
    }
}

#[test]
fn decompositions_partition_the_power_set() {
    for n in 1..=12 {
        let d = symmetric_chain_decomposition(n).unwrap();
        assert_eq!(d.chains.len() as u64, binomial(n as u64, n as u64 / 2).unwrap());
        let mut seen = vec![false; 1 << n];
        for chain in &d.chains {
            assert_eq!(chain[0].len() + chain[chain.len() - 1].len(), n);
            for w in chain.windows(2) {
                assert!(w[0].is_subset_of(w[1]) && w[0].len() + 1 == w[1].len());
            }
            for s in chain {
                assert!(!std::mem::replace(&mut seen[s.bits() as usize], true));
            }
        }
        assert!(seen.iter().all(|&x| x));
    }
}

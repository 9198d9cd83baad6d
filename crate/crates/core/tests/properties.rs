use clustermod::families::{build_named, parse_signature};
use clustermod::mcg::{GroupElement, NamedElements};
use clustermod::quiver::{canonicalize, exchange_matrix, find_isomorphism, mutate_matrix, WeightedQuiver};
use proptest::prelude::*;
use proptest::sample::{select, subsequence};

// Mutation-finite seeds, so random paths keep arrow counts small.
const SEEDS: &[&str] = &[
    "A_5",
    "D_5",
    "E_6",
    "B_3",
    "F_4",
    "G_2",
    "T:2,2,2/1,1,1",
    "T:3,3,3/1,1,1",
    "T:2,2/1,3",
    "T:4,2/2,1",
];

fn seed(name: &str) -> WeightedQuiver {
    build_named(name).unwrap().quiver
}

fn walk(q: &WeightedQuiver, steps: &[usize]) -> WeightedQuiver {
    let n = q.node_count();
    steps.iter().fold(q.clone(), |acc, &s| acc.mutate(s % n).unwrap())
}

fn seed_and_path() -> impl Strategy<Value = (WeightedQuiver, Vec<usize>)> {
    (select(SEEDS), prop::collection::vec(0usize..64, 0..16)).prop_map(|(s, p)| (seed(s), p))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn mutation_is_an_involution((q, path) in seed_and_path(), k in 0usize..64) {
        let q = walk(&q, &path);
        let k = k % q.node_count();
        prop_assert_eq!(q.mutate(k).unwrap().mutate(k).unwrap(), q);
    }

    #[test]
    fn quiver_and_matrix_mutation_agree((q, path) in seed_and_path(), k in 0usize..64) {
        let q = walk(&q, &path);
        let k = k % q.node_count();
        let m = exchange_matrix(&q).unwrap();
        prop_assert!(m.is_skew_symmetrizable());
        prop_assert_eq!(mutate_matrix(&m, k).unwrap(), exchange_matrix(&q.mutate(k).unwrap()).unwrap());
    }

    #[test]
    fn canonical_form_ignores_labels((q, path) in seed_and_path(), shuffle in any::<prop::sample::Index>()) {
        let q = walk(&q, &path);
        let n = q.node_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left(shuffle.index(n.max(1)));
        let p = q.permute(&perm);
        prop_assert_eq!(canonicalize(&q).encoding, canonicalize(&p).encoding);
        let iso = find_isomorphism(&q, &p).expect("isomorphic");
        prop_assert_eq!(q.permute(&iso), p);
    }

    #[test]
    fn shuffled_labels_same_canonical_form(perm in permutation(8), path in prop::collection::vec(0usize..8, 0..12)) {
        let q = walk(&seed("E_8"), &path);
        prop_assert_eq!(canonicalize(&q).encoding, canonicalize(&q.permute(&perm)).encoding);
    }
}

/// Generators of the D̃4 cluster modular group used in the group-law checks.
fn d4_generators() -> Vec<GroupElement> {
    let named = NamedElements::new(&parse_signature("T:2,2,2/1,1,1").unwrap()).unwrap();
    let mut gens = vec![named.gamma().unwrap(), named.r().unwrap()];
    for i in 0..3 {
        gens.push(named.tau(i).unwrap());
    }
    gens.push(named.tails(&[1, 0, 2]).unwrap());
    gens
}

fn word() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..6, any::<bool>()), 0..5)
}

fn evaluate(gens: &[GroupElement], w: &[(usize, bool)]) -> GroupElement {
    let mut acc = GroupElement::identity(gens[0].base().clone());
    for &(i, inv) in w {
        let g = if inv { gens[i].inverse() } else { gens[i].clone() };
        acc = acc.compose(&g).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn group_laws(a in word(), b in word(), c in word()) {
        let gens = d4_generators();
        let (x, y, z) = (evaluate(&gens, &a), evaluate(&gens, &b), evaluate(&gens, &c));
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert!(left.equals(&right).unwrap());
        prop_assert!(x.compose(&x.inverse()).unwrap().is_trivial());
        prop_assert!(x.inverse().compose(&x).unwrap().is_trivial());
    }

    #[test]
    fn twists_are_central_in_the_twist_group(i in 0usize..3, j in 0usize..3, sub in subsequence(vec![0usize, 1, 2], 0..=3)) {
        let gens = d4_generators();
        let (ti, tj) = (&gens[2 + i], &gens[2 + j]);
        let mut lhs = ti.compose(tj).unwrap();
        let mut rhs = tj.compose(ti).unwrap();
        for s in sub {
            lhs = lhs.compose(&gens[2 + s]).unwrap();
            rhs = rhs.compose(&gens[2 + s]).unwrap();
        }
        prop_assert!(lhs.equals(&rhs).unwrap());
    }
}

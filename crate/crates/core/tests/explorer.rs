use clustermod::counting::{apq_recurrence, finite_cluster_count, int};
use clustermod::explorer::{
    classify_subalgebra, count_faces, enumerate_exchange, enumerate_mutation_class, Budget, Status,
};
use clustermod::families::{build_named, build_special_framing, Family, TnwSignature};
use clustermod::framing::frame_principal;

fn clusters(name: &str) -> usize {
    let q = build_named(name).unwrap().quiver;
    let ec = enumerate_exchange(&frame_principal(&q).unwrap(), &Budget::default()).unwrap();
    assert_eq!(ec.status, Status::Complete, "{name}");
    ec.vertex_count()
}

#[test]
fn finite_cluster_counts_by_enumeration() {
    for name in ["A_2", "A_3", "A_5", "B_3", "C_3", "D_4", "D_5", "E_6", "E_7", "F_4", "G_2"] {
        assert_eq!(int(clusters(name) as i64), finite_cluster_count(name).unwrap(), "{name}");
    }
}

#[test]
fn pentagon_faces() {
    let q = build_named("A_2").unwrap().quiver;
    let ec = enumerate_exchange(&frame_principal(&q).unwrap(), &Budget::default()).unwrap();
    assert_eq!(ec.vertex_count(), 5);
    assert_eq!(ec.variable_count(), 5);
    assert_eq!(count_faces(&ec, 1).unwrap(), 5);
    assert_eq!(count_faces(&ec, 2).unwrap(), 5);
}

#[test]
fn annulus_quotients_match_recurrence() {
    for p in 1..=6usize {
        for q in 1..=p.min(7 - p) {
            let sig = match (p, q) {
                (1, 1) => TnwSignature::new(vec![], vec![]),
                (p, 1) => TnwSignature::new(vec![p], vec![1]),
                (p, q) => TnwSignature::new(vec![p, q], vec![1, 1]),
            }
            .unwrap();
            let ec = enumerate_exchange(&build_special_framing(&sig).unwrap(), &Budget::default()).unwrap();
            assert!(ec.status.is_complete());
            assert_eq!(int(ec.vertex_count() as i64), apq_recurrence(p as u64, q as u64).unwrap(), "A_{{{p},{q}}}");
        }
    }
}

#[test]
fn budget_truncates() {
    let q = build_named("E_6").unwrap().quiver;
    let ec = enumerate_exchange(&frame_principal(&q).unwrap(), &Budget::vertices(100)).unwrap();
    assert_eq!(ec.status, Status::VertexLimit);
    let g = enumerate_mutation_class(&build_named("T:3,3/1,1").unwrap().quiver, &Budget { max_depth: 1, ..Budget::default() })
        .unwrap();
    assert_eq!(g.status, Status::DepthLimit);
}

#[test]
fn mutation_class_sizes() {
    let g = enumerate_mutation_class(&build_named("A_3").unwrap().quiver, &Budget::default()).unwrap();
    // path, the other orientation up to isomorphism, and the oriented 3-cycle
    assert_eq!(g.class_count(), 4);
    let g = enumerate_mutation_class(&build_named("T:2/1").unwrap().quiver, &Budget::default()).unwrap();
    assert_eq!(g.class_count(), 2);
}

#[test]
fn subalgebra_types() {
    let q = build_named("T:2,2,2/1,1,1").unwrap().quiver;
    let whole = classify_subalgebra(&q, &[]).unwrap();
    assert_eq!(whole.len(), 1);
    assert_eq!(whole[0].family, Family::Affine);
    // freezing both middle nodes leaves the three tail nodes as A1 pieces
    let split = classify_subalgebra(&q, &[0, 1]).unwrap();
    assert_eq!(split.len(), 3);
    assert!(split.iter().all(|l| l.family == Family::Finite));
}

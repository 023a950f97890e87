use proptest::prelude::*;

use pentagon::algebra::{
    exact_factorizations, idempotent_endomorphisms, normal_subgroups, representative_systems,
    subgroups, subgroups_by_generation, subgroups_by_subset_scan, Group, Magma,
};
use pentagon::corpus;

fn corpus_and_s4() -> Vec<(String, Group)> {
    let mut groups: Vec<(String, Group)> = corpus::all()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    groups.push(("S4".into(), Group::symmetric(4)));
    groups
}

#[test]
fn groups_pass_the_audit() {
    for (name, g) in corpus_and_s4() {
        assert!(g.audit(), "{name}");
    }
}

/// Closed, normal subsets found by testing every subset directly.
fn brute_force_normal_subsets(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let inside = |x: usize| mask >> x & 1 == 1;
        let closed = !set.is_empty()
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| inside(g.mul(a, b))));
        let normal = set
            .iter()
            .all(|&k| g.elements().all(|x| inside(g.mul(g.mul(g.inv(x), k), x))));
        if closed && normal {
            out.push(set);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

#[test]
fn normal_subgroups_are_complete_up_to_order_six() {
    for (name, g) in corpus::all() {
        if g.order() > 6 {
            continue;
        }
        let listed: Vec<Vec<usize>> = normal_subgroups(&g)
            .iter()
            .map(|k| k.elements().to_vec())
            .collect();
        assert_eq!(listed, brute_force_normal_subsets(&g), "{name}");
    }
}

#[test]
fn listed_normal_subgroups_are_normal() {
    for (name, g) in corpus_and_s4() {
        for k in normal_subgroups(&g) {
            assert!(k.audit_normal(&g), "{name}: {:?}", k.elements());
        }
    }
}

#[test]
fn both_subgroup_routes_agree() {
    for (name, g) in corpus::all() {
        assert_eq!(
            subgroups_by_subset_scan(&g),
            subgroups_by_generation(&g),
            "{name}"
        );
    }
}

#[test]
fn s4_subgroup_lattice() {
    // S4 has 30 subgroups; the normal ones are 1, V4, A4 and S4.
    let s4 = Group::symmetric(4);
    assert_eq!(subgroups(&s4).len(), 30);
    let orders: Vec<usize> = normal_subgroups(&s4).iter().map(|k| k.order()).collect();
    assert_eq!(orders, vec![1, 4, 12, 24]);
}

#[test]
fn corpus_subgroup_counts() {
    let expected = [
        ("Z2", 2, 2),
        ("Z6", 4, 4),
        ("Z8", 4, 4),
        ("V4", 5, 5),
        ("S3", 6, 3),
        ("D4", 10, 6),
        ("Q8", 6, 6),
        ("Z2xZ4", 8, 8),
        ("Z2^3", 16, 16),
    ];
    for (name, all, normal) in expected {
        let g = corpus::group(name).unwrap();
        assert_eq!(subgroups(&g).len(), all, "{name}");
        assert_eq!(normal_subgroups(&g).len(), normal, "{name}");
    }
}

#[test]
fn representative_systems_hit_every_coset_once() {
    for (name, g) in corpus::all() {
        for k in normal_subgroups(&g) {
            let cosets = k.right_cosets(&g);
            let systems: Vec<_> = representative_systems(&g, &k).unwrap().collect();
            let expected = (k.order() as u64).pow((k.index_in(&g) - 1) as u32);
            assert_eq!(systems.len() as u64, expected, "{name}");
            let mut sorted = systems.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), systems.len());
            for r in &systems {
                assert!(r.contains(&g.identity()));
                assert_eq!(r.len(), cosets.len());
                for c in &cosets {
                    assert_eq!(c.iter().filter(|x| r.contains(x)).count(), 1);
                }
            }
        }
    }
}

#[test]
fn factorizations_are_bijective() {
    for (name, g) in corpus::all() {
        let fs = exact_factorizations(&g);
        assert!(fs.len() >= 2, "{name}");
        for f in &fs {
            f.validate(&g).unwrap();
            let mut hits = vec![0; g.order()];
            for &a in f.a().elements() {
                for &b in f.b().elements() {
                    hits[g.mul(a, b)] += 1;
                }
            }
            assert!(hits.iter().all(|&h| h == 1), "{name}");
            for x in g.elements() {
                assert_eq!(g.mul(f.p1(x), f.p2(x)), x);
            }
        }
    }
}

#[test]
fn klein_four_has_eight_idempotent_endomorphisms() {
    // Idempotent 2x2 matrices over F2: zero, identity, and six projections.
    let v4 = Group::elementary_abelian_2(2);
    assert_eq!(idempotent_endomorphisms(v4.magma()).unwrap().len(), 8);
}

fn arb_magma() -> impl Strategy<Value = Magma> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |t| Magma::from_fn(n, |x, y| t[x * n + y]))
    })
}

proptest! {
    #[test]
    fn associativity_matches_triple_count(m in arb_magma()) {
        let n = m.size();
        let failures = (0..n * n * n)
            .filter(|t| {
                let (x, y, z) = (t / (n * n), t / n % n, t % n);
                m.op(m.op(x, y), z) != m.op(x, m.op(y, z))
            })
            .count();
        prop_assert_eq!(m.is_associative(), failures == 0);
    }

    #[test]
    fn certified_groups_audit(m in arb_magma()) {
        if let Ok(g) = Group::from_magma(m) {
            prop_assert!(g.audit());
            prop_assert!(g.normalized().audit());
        }
    }
}

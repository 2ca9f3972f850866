//! Facts about the named families.

mod common;

use common::facets;
use indcx::complex::ind_r;
use indcx::decomposability::{
    is_shedding_vertex, is_shellable, is_vertex_decomposable, verify_shedding_certificate,
    DEFAULT_SHELL_BUDGET, DEFAULT_VD_BUDGET,
};
use indcx::graph::{complete, enumerate_trees, g_graph, h_graph, path, CaterpillarSpec, caterpillar};
use indcx::homology::{cm_failures, is_scm, reduced_homology, CmWitness, Coefficients};
use indcx::hypergraph::{con_r, PairRule, DEFAULT_MINOR_BUDGET};
use indcx::{Exec, VertexSet};

#[test]
fn path_complex_shedding_vertices() {
    let k = ind_r(&path(7), 2).unwrap();
    for v in ["3", "5"] {
        assert!(is_shedding_vertex(&k, k.index_of(v).unwrap()).unwrap());
    }
}

#[test]
fn complete_graph_complexes_are_skeleta() {
    for n in 2..=7 {
        for r in 1..n {
            let k = ind_r(&complete(n), r).unwrap();
            let expect = (0..1u64 << n).filter(|s| s.count_ones() as usize == r).map(VertexSet);
            assert_eq!(facets(&k), common::family(expect, k.labels()));
        }
    }
}

#[test]
fn counterexample_families_are_chordal() {
    for r in 2..=4 {
        assert!(h_graph(r).unwrap().is_chordal());
        assert!(g_graph(r).unwrap().is_chordal());
    }
}

#[test]
fn h_family_fails_scm_at_r_plus_one() {
    for r in [2, 3] {
        let k = ind_r(&h_graph(r).unwrap(), r + 1).unwrap();
        let rep = is_scm(&k, Coefficients::Rational, Exec::Parallel).unwrap();
        let fail = rep.first_failure().unwrap();
        assert_eq!(fail.m, r + 1);
        let sk = k.pure_skeleton(r + 1).unwrap();
        assert_eq!(fail.witness.as_ref().unwrap().face(), Some(sk.face(&["x1", "x2"]).unwrap()));
        assert!(rep.skeletons.iter().filter(|s| s.m <= r).all(|s| s.cohen_macaulay));
        // {x1, x2} is the only bad face
        let all = cm_failures(&sk, Coefficients::Rational, Exec::Parallel).unwrap();
        assert_eq!(all.len(), 1);
    }
}

#[test]
fn g_family_is_acyclic_but_not_scm() {
    for r in [2, 3] {
        let g = g_graph(r).unwrap();
        let k = ind_r(&g, r).unwrap();
        assert_eq!(k.dim(), Some(2 * r as isize - 1));
        for field in [Coefficients::Rational, Coefficients::Prime(2)] {
            assert!(reduced_homology(&k, field).unwrap().is_acyclic());
        }
        let rep = is_scm(&k, Coefficients::Rational, Exec::Parallel).unwrap();
        assert!(!rep.is_scm());
        let top = rep.skeletons.last().unwrap();
        assert_eq!(top.m, 2 * r - 1);
        assert!(!top.cohen_macaulay);
        let f: Vec<String> = (1..r).chain(r + 2..=2 * r).map(|i| i.to_string()).collect();
        let sk = k.pure_skeleton(2 * r - 1).unwrap();
        let want = sk.face(&f).unwrap();
        let fails = cm_failures(&sk, Coefficients::Rational, Exec::Parallel).unwrap();
        let hit = fails.iter().find(|w| w.face() == Some(want)).unwrap();
        match hit {
            CmWitness::LinkHomology { degree, link_reduced_betti, .. } => {
                assert_eq!(*degree, 0);
                assert_eq!(link_reduced_betti[1], 1);
            }
            other => panic!("{other:?}"),
        }
        // the link at r + 1 is a cone with apex 1
        let lk = k.link(k.face(&[(r + 1).to_string()]).unwrap()).unwrap();
        let apex = lk.index_of("1").unwrap();
        assert!(lk.facets().iter().all(|f| f.contains(apex)));
    }
}

#[test]
fn chordal_graph_independence_complexes_are_vd() {
    let mut rng = common::rng(21);
    let mut seen = 0;
    while seen < 60 {
        let n = 1 + seen % 7;
        let g = common::random_graph(&mut rng, n, 0.5);
        if !g.is_chordal() {
            continue;
        }
        seen += 1;
        let k = ind_r(&g, 1).unwrap();
        let out = is_vertex_decomposable(&k, DEFAULT_VD_BUDGET).unwrap();
        assert!(verify_shedding_certificate(&k, out.certificate().unwrap()).unwrap());
    }
}

#[test]
fn small_caterpillars_and_trees() {
    for counts in [vec![1], vec![2, 0, 1], vec![1, 2, 1, 1], vec![0, 3, 0]] {
        let g = caterpillar(&CaterpillarSpec::new(counts).unwrap());
        for r in 1..=3 {
            assert!(is_vertex_decomposable(&ind_r(&g, r).unwrap(), DEFAULT_VD_BUDGET)
                .unwrap()
                .holds());
        }
    }
    for n in 1..=6 {
        for t in enumerate_trees(n).unwrap() {
            for r in 1..=2 {
                let k = ind_r(&t, r).unwrap();
                assert!(is_shellable(&k, DEFAULT_SHELL_BUDGET).unwrap().holds());
                assert!(con_r(&t, r).unwrap().is_chordal(DEFAULT_MINOR_BUDGET, PairRule::Distinct).holds());
            }
        }
    }
}

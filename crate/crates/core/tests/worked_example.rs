//! The dual ideals of a nine-vertex caterpillar at r = 3, checked against a
//! checked-in list of generators.

use std::collections::BTreeSet;

use indcx::algebra::{dual_of_ind, is_vertex_splittable, verify_split_certificate, DEFAULT_SPLIT_BUDGET};
use indcx::graph::{caterpillar, CaterpillarSpec};
use indcx::{MonomialIdeal, VertexSet};
use serde::Deserialize;

#[derive(Deserialize)]
struct Fixture {
    caterpillar: Vec<usize>,
    r: usize,
    ideals: Vec<Entry>,
}

#[derive(Deserialize)]
struct Entry {
    name: String,
    remove: Vec<String>,
    complete: bool,
    pieces: Vec<Piece>,
}

#[derive(Deserialize)]
struct Piece {
    factor: Vec<String>,
    generators: Vec<Vec<String>>,
}

fn fixture() -> Fixture {
    let text = include_str!("fixtures/caterpillar_1_2_1_1_r3.json");
    serde_json::from_str(text).unwrap()
}

fn set(i: &MonomialIdeal, labels: &[String]) -> VertexSet {
    i.monomial(labels).unwrap()
}

#[test]
fn printed_generators_are_reproduced() {
    let fx = fixture();
    let g = caterpillar(&CaterpillarSpec::new(fx.caterpillar.clone()).unwrap());
    for e in &fx.ideals {
        let keep: Vec<&str> = g
            .labels()
            .iter()
            .map(String::as_str)
            .filter(|l| !e.remove.iter().any(|r| r == l))
            .collect();
        let sub = g.induced_subgraph_by_labels(&keep).unwrap();
        let ideal = dual_of_ind(&sub, fx.r).unwrap();

        let mut printed = BTreeSet::new();
        for p in &e.pieces {
            for m in &p.generators {
                let mut full = m.clone();
                full.extend(p.factor.iter().cloned());
                let s = set(&ideal, &full);
                assert!(ideal.is_minimal_generator(s), "{}: {full:?} is not a minimal generator", e.name);
                assert!(printed.insert(s), "{}: {full:?} listed twice", e.name);
            }
        }
        if e.complete {
            let all: BTreeSet<VertexSet> = ideal.generators().iter().copied().collect();
            assert_eq!(printed, all, "{}: printed list is not all of G(I)", e.name);
        }

        // pivot structure: each one-variable factor's quotients of what is
        // left are exactly the printed list
        let mut rest: Vec<VertexSet> = ideal.generators().to_vec();
        for p in &e.pieces {
            let printed: BTreeSet<VertexSet> = p.generators.iter().map(|m| set(&ideal, m)).collect();
            match p.factor.as_slice() {
                [x] => {
                    let x = ideal.index_of(x).unwrap();
                    let quotients: BTreeSet<VertexSet> =
                        rest.iter().filter(|m| m.contains(x)).map(|m| m.without(x)).collect();
                    assert_eq!(quotients, printed, "{}: quotient by {:?}", e.name, p.factor);
                    rest.retain(|m| !m.contains(x));
                }
                [] => {
                    assert_eq!(rest.iter().copied().collect::<BTreeSet<_>>(), printed, "{}: remainder", e.name);
                    rest.clear();
                }
                _ => panic!("factors are single variables"),
            }
        }
        assert!(rest.is_empty(), "{}: generators outside the printed pieces", e.name);

        let out = is_vertex_splittable(&ideal, DEFAULT_SPLIT_BUDGET);
        assert!(verify_split_certificate(&ideal, out.certificate().unwrap()).unwrap());
    }
}

#[test]
fn smallest_piece_is_the_variable_ideal() {
    let fx = fixture();
    let e = fx.ideals.iter().find(|e| e.name == "I(3)").unwrap();
    assert_eq!(e.pieces.len(), 1);
    let g = caterpillar(&CaterpillarSpec::new(vec![1, 1]).unwrap());
    let i = dual_of_ind(&g, fx.r).unwrap();
    assert!(i.generators().iter().all(|m| m.len() == 1));
}

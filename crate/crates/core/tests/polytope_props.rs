mod common;

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use common::{box_lattice_points, corpus, random_unimodular, rng, subset_facets, v};
use reflexive::{Containment, IntVector, LatticePolytope};

fn facet_triples(p: &LatticePolytope) -> Vec<(IntVector, BigInt, Vec<usize>)> {
    let mut out: Vec<_> = p
        .facets()
        .iter()
        .map(|f| {
            let mut idx = f.vertex_indices().to_vec();
            idx.sort();
            (f.normal().clone(), f.offset().clone(), idx)
        })
        .collect();
    out.sort();
    out
}

/// Random points in a small box together with the unit vectors and their
/// negatives, so the hull is full-dimensional with the origin inside.
fn point_cloud(d: usize) -> impl Strategy<Value = Vec<IntVector>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, d), 0..8).prop_map(move |extra| {
        let mut pts = Vec::new();
        for i in 0..d {
            for s in [1, -1] {
                let mut e = vec![0i64; d];
                e[i] = s;
                pts.push(v(&e));
            }
        }
        pts.extend(extra.iter().map(|c| v(c)));
        pts
    })
}

proptest! {
    #![proptest_config(common::proptest_config(60))]

    #[test]
    fn hull_matches_subset_oracle(pts in (2usize..=4).prop_flat_map(point_cloud)) {
        let p = LatticePolytope::hull_of(&pts).unwrap();
        prop_assert_eq!(facet_triples(&p), subset_facets(p.vertices()));
        // Every input point is inside, and the vertices are among the inputs.
        for x in &pts {
            prop_assert_ne!(p.contains_lattice_point(x), Containment::Outside);
        }
        for x in p.vertices() {
            prop_assert!(pts.contains(x));
        }
    }

    #[test]
    fn facets_are_tight_and_valid(pts in (2usize..=4).prop_flat_map(point_cloud)) {
        let p = LatticePolytope::hull_of(&pts).unwrap();
        for f in p.facets() {
            let tight = p.facet_vertices(f);
            prop_assert!(tight.len() >= p.dim());
            for (i, x) in p.vertices().iter().enumerate() {
                let level = f.level(x);
                prop_assert!(level <= *f.offset());
                prop_assert_eq!(level == *f.offset(), f.contains_vertex(i));
            }
        }
    }

    #[test]
    fn polygons_reflexive_iff_single_interior_point(pts in point_cloud(2)) {
        let p = LatticePolytope::hull_of(&pts).unwrap();
        let (interior, _) = p.lattice_points();
        prop_assert_eq!(p.is_reflexive(), interior == vec![v(&[0, 0])]);
    }

    #[test]
    fn lattice_points_match_box_scan(pts in (2usize..=3).prop_flat_map(point_cloud), seed in 0u64..1000) {
        let p = LatticePolytope::hull_of(&pts).unwrap();
        let m = random_unimodular(&mut rng(seed), p.dim(), 4);
        let q = p.transform(&m).unwrap();
        prop_assert_eq!(q.lattice_points(), box_lattice_points(&q));
        prop_assert_eq!(p.lattice_points().0.len(), q.lattice_points().0.len());
    }
}

#[test]
fn corpus_hulls_match_subset_oracle() {
    for (name, p) in corpus(5) {
        assert_eq!(facet_triples(&p), subset_facets(p.vertices()), "{name}");
    }
}

#[test]
fn reflexive_corpus_has_only_origin_inside() {
    for (name, p) in corpus(6) {
        assert!(p.is_reflexive(), "{name}");
        let (interior, _) = p.lattice_points();
        assert_eq!(interior, vec![IntVector::zero(p.dim())], "{name}");
    }
}

#[test]
fn double_dual_is_identity() {
    for (name, p) in corpus(6) {
        let dual = p.dual().to_lattice().expect("reflexive dual is integral").unwrap();
        assert!(dual.is_reflexive(), "{name}");
        let back = dual.dual().to_lattice().unwrap().unwrap();
        let mut a = p.vertices().to_vec();
        let mut b = back.vertices().to_vec();
        a.sort();
        b.sort();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn simplicial_reflexive_facets_have_d_vertices_at_level_one() {
    for (name, p) in corpus(6) {
        if !p.is_simplicial() {
            continue;
        }
        for f in p.facets() {
            assert!(f.offset().is_one(), "{name}");
            let at_one = p.vertices().iter().filter(|x| f.level(x).is_one()).count();
            assert_eq!(at_one, p.dim(), "{name}");
        }
    }
}

#[test]
fn lattice_points_of_corpus_images_match_box_scan() {
    let mut r = rng(7);
    for (name, p) in corpus(4) {
        for _ in 0..3 {
            let q = p.transform(&random_unimodular(&mut r, p.dim(), 5)).unwrap();
            assert_eq!(q.lattice_points(), box_lattice_points(&q), "{name}");
        }
    }
}

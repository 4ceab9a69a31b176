use std::collections::BTreeMap;

use reflexive::constructions::{construct, NamedPolytope};
use reflexive::enumeration::{enumerate_in_box, enumerate_reflexive_polygons, five_vertex_taxonomy};
use reflexive::{is_isomorphic, IntVector};

#[test]
fn larger_box_finds_the_same_classes() {
    let small: Vec<_> = enumerate_reflexive_polygons().unwrap().into_iter().map(|c| c.normal_form).collect();
    let large: Vec<_> = enumerate_in_box(4).unwrap().into_iter().map(|c| c.normal_form).collect();
    assert_eq!(small, large);
}

#[test]
fn representatives_have_only_the_origin_inside() {
    for c in enumerate_reflexive_polygons().unwrap() {
        let p = &c.representative;
        assert!(p.is_reflexive());
        assert_eq!(p.lattice_points().0, vec![IntVector::zero(2)]);
        assert_eq!(c.vertex_count, p.num_vertices());
    }
}

#[test]
fn vertex_count_histogram() {
    let mut hist = BTreeMap::new();
    for c in enumerate_reflexive_polygons().unwrap() {
        *hist.entry(c.vertex_count).or_insert(0) += 1;
    }
    assert_eq!(hist.get(&6), Some(&1));
    assert_eq!(hist.get(&5), Some(&3));
    assert_eq!(hist.values().sum::<usize>(), 16);
}

#[test]
fn taxonomy_matches_constructions() {
    let classes = enumerate_reflexive_polygons().unwrap();
    let tax = five_vertex_taxonomy(&classes).unwrap();
    for name in [NamedPolytope::TV2, NamedPolytope::E1, NamedPolytope::E2] {
        let class = tax.get(name).unwrap();
        assert!(is_isomorphic(&class.representative, &construct(name).unwrap()), "{name}");
        assert_eq!(class.smooth, name.is_smooth());
        assert_eq!(class.nu_kind, name.nu_kind());
    }
}

//! Named small polytopes, free sums, and the lists of extremal candidates
//! built from them.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::analysis::{nu_kind, NuKind};
use crate::error::{Error, Result};
use crate::lattice::IntVector;
use crate::polytope::LatticePolytope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedPolytope {
    /// `[-1, 1]`.
    Seg,
    /// The hexagon `conv(±e1, ±e2, ±(e1 + e2))`.
    V2,
    /// The hexagon with `-e1 - e2` removed.
    TV2,
    /// Non-smooth pentagon whose vertex sum is a boundary non-vertex.
    E1,
    /// Non-smooth pentagon with vertex sum zero.
    E2,
    /// Bipyramid over the hexagon, centrally symmetric.
    Q3,
    /// Hexagon with two apexes adding up to a hexagon vertex.
    Q3P,
}

impl NamedPolytope {
    pub const ALL: [NamedPolytope; 7] = [
        NamedPolytope::Seg,
        NamedPolytope::V2,
        NamedPolytope::TV2,
        NamedPolytope::E1,
        NamedPolytope::E2,
        NamedPolytope::Q3,
        NamedPolytope::Q3P,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedPolytope::Seg => "seg",
            NamedPolytope::V2 => "v2",
            NamedPolytope::TV2 => "tv2",
            NamedPolytope::E1 => "e1",
            NamedPolytope::E2 => "e2",
            NamedPolytope::Q3 => "q3",
            NamedPolytope::Q3P => "q3p",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            NamedPolytope::Seg => 1,
            NamedPolytope::Q3 | NamedPolytope::Q3P => 3,
            _ => 2,
        }
    }

    pub fn num_vertices(self) -> usize {
        match self {
            NamedPolytope::Seg => 2,
            NamedPolytope::V2 => 6,
            NamedPolytope::TV2 | NamedPolytope::E1 | NamedPolytope::E2 => 5,
            NamedPolytope::Q3 | NamedPolytope::Q3P => 8,
        }
    }

    pub fn is_smooth(self) -> bool {
        !matches!(self, NamedPolytope::E1 | NamedPolytope::E2)
    }

    pub fn nu_kind(self) -> NuKind {
        match self {
            NamedPolytope::TV2 | NamedPolytope::Q3P => NuKind::Vertex,
            NamedPolytope::E1 => NuKind::BoundaryNonVertex,
            _ => NuKind::Zero,
        }
    }
}

impl fmt::Display for NamedPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedPolytope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedPolytope::ALL
            .into_iter()
            .find(|n| n.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown polytope name {s:?}")))
    }
}

fn from_rows(rows: &[&[i64]]) -> Result<LatticePolytope> {
    LatticePolytope::from_i64_rows(rows)
}

const HEXAGON: [[i64; 2]; 6] = [[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]];

fn hexagon_with_apexes(top: [i64; 3], bottom: [i64; 3]) -> Result<LatticePolytope> {
    let mut vs: Vec<IntVector> = HEXAGON.iter().map(|h| IntVector::from_i64s(&[h[0], h[1], 0])).collect();
    vs.push(IntVector::from_i64s(&top));
    vs.push(IntVector::from_i64s(&bottom));
    LatticePolytope::new(vs)
}

fn representative(name: NamedPolytope) -> Result<LatticePolytope> {
    match name {
        NamedPolytope::Seg => from_rows(&[&[-1], &[1]]),
        NamedPolytope::V2 => from_rows(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]]),
        NamedPolytope::TV2 => from_rows(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[0, -1]]),
        NamedPolytope::E1 => from_rows(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, -1], &[0, -1]]),
        NamedPolytope::E2 => from_rows(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, -1], &[1, -1]]),
        NamedPolytope::Q3 => hexagon_with_apexes([0, 0, 1], [0, 0, -1]),
        NamedPolytope::Q3P => {
            let first = hexagon_with_apexes([0, 0, 1], [1, 0, -1])?;
            if verify(NamedPolytope::Q3P, &first).is_ok() {
                return Ok(first);
            }
            for w in HEXAGON {
                if let Ok(p) = hexagon_with_apexes([0, 0, 1], [w[0], w[1], -1]) {
                    if verify(NamedPolytope::Q3P, &p).is_ok() {
                        return Ok(p);
                    }
                }
            }
            Ok(first)
        }
    }
}

fn verify(name: NamedPolytope, p: &LatticePolytope) -> Result<()> {
    let fail = |reason: String| Err(Error::Construction { name: name.to_string(), reason });
    if p.dim() != name.dim() {
        return fail(format!("dimension {} instead of {}", p.dim(), name.dim()));
    }
    if p.num_vertices() != name.num_vertices() {
        return fail(format!("{} vertices instead of {}", p.num_vertices(), name.num_vertices()));
    }
    if !p.is_reflexive() {
        return fail("not reflexive".into());
    }
    if !p.is_simplicial() {
        return fail("not simplicial".into());
    }
    if p.is_smooth_fano() != name.is_smooth() {
        return fail(format!("smoothness is {}", p.is_smooth_fano()));
    }
    let kind = nu_kind(p);
    if kind != name.nu_kind() {
        return fail(format!("vertex sum is {kind}, expected {}", name.nu_kind()));
    }
    match name {
        NamedPolytope::Q3 if !p.is_centrally_symmetric() => fail("not centrally symmetric".into()),
        NamedPolytope::Q3P => {
            let apexes: Vec<&IntVector> = p.vertices().iter().filter(|v| !v[2].is_zero()).collect();
            let sum = apexes.iter().fold(IntVector::zero(3), |acc, v| &acc + v);
            if apexes.len() != 2 || p.vertex_index(&sum).is_none() || !sum[2].is_zero() {
                return fail("apexes do not add up to a hexagon vertex".into());
            }
            Ok(())
        }
        _ => Ok(()),
    }
}

/// The fixed representative of a named polytope, checked against its
/// defining properties.
pub fn construct(name: NamedPolytope) -> Result<LatticePolytope> {
    let p = representative(name)?;
    verify(name, &p)?;
    Ok(p)
}

/// `conv(P × {0} ∪ {0} × Q)` in the direct sum of the two lattices.
pub fn free_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    let zp = IntVector::zero(p.dim());
    let zq = IntVector::zero(q.dim());
    let vertices = p
        .vertices()
        .iter()
        .map(|v| v.concat(&zq))
        .chain(q.vertices().iter().map(|w| zp.concat(w)))
        .collect();
    LatticePolytope::new(vertices)
}

/// `P × Q`, with vertices all pairs of vertices.
pub fn cartesian_product(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    let mut vertices = Vec::with_capacity(p.num_vertices() * q.num_vertices());
    for v in p.vertices() {
        for w in q.vertices() {
            vertices.push(v.concat(w));
        }
    }
    LatticePolytope::new(vertices)
}

/// Free sum of `base` with `copies` hexagons.
pub fn with_hexagons(base: &LatticePolytope, copies: usize) -> Result<LatticePolytope> {
    let v2 = construct(NamedPolytope::V2)?;
    let mut out = base.clone();
    for _ in 0..copies {
        out = free_sum(&out, &v2)?;
    }
    Ok(out)
}

/// A candidate of the classification list: the exceptional factor and how
/// many hexagons are summed onto it.
#[derive(Clone, Debug)]
pub struct ClassificationMember {
    pub factor: NamedPolytope,
    pub hexagons: usize,
    pub polytope: LatticePolytope,
}

impl ClassificationMember {
    pub fn label(&self) -> String {
        if self.hexagons == 0 {
            self.factor.to_string()
        } else {
            format!("{}+{}*v2", self.factor, self.hexagons)
        }
    }
}

/// Exceptional factors and hexagon counts for dimension `d`.
pub fn classification_members(d: usize) -> Result<Vec<ClassificationMember>> {
    if d < 2 {
        return Err(Error::Domain(format!("classification needs d >= 2, got {d}")));
    }
    let (factors, hexagons): (&[NamedPolytope], usize) = if d % 2 == 0 {
        (&[NamedPolytope::TV2, NamedPolytope::E1, NamedPolytope::E2], (d - 2) / 2)
    } else {
        (&[NamedPolytope::Q3, NamedPolytope::Q3P], (d - 3) / 2)
    };
    factors
        .iter()
        .map(|&factor| {
            let polytope = with_hexagons(&construct(factor)?, hexagons)?;
            Ok(ClassificationMember { factor, hexagons, polytope })
        })
        .collect()
}

/// Simplicial reflexive polytopes with `3d - 1` vertices, one per class.
pub fn classification_list(d: usize) -> Result<Vec<LatticePolytope>> {
    Ok(classification_members(d)?.into_iter().map(|m| m.polytope).collect())
}

/// The free sum of `d / 2` hexagons, with `3d` vertices.
pub fn casagrande_extremal(d: usize) -> Result<LatticePolytope> {
    if d < 2 || d % 2 != 0 {
        return Err(Error::Domain(format!("the hexagon sum needs even d >= 2, got {d}")));
    }
    let v2 = construct(NamedPolytope::V2)?;
    with_hexagons(&v2, d / 2 - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use num_bigint::BigInt;

    #[test]
    fn every_name_builds() {
        for name in NamedPolytope::ALL {
            let p = construct(name).unwrap();
            assert_eq!(p.num_vertices(), name.num_vertices(), "{name}");
            assert!(p.is_reflexive() && p.is_simplicial());
            assert_eq!(name.name().parse::<NamedPolytope>().unwrap(), name);
        }
        assert!("q4".parse::<NamedPolytope>().is_err());
    }

    #[test]
    fn pinned_coordinates() {
        let e1 = construct(NamedPolytope::E1).unwrap();
        assert_eq!(e1.vertex_sum(), IntVector::from_i64s(&[-1, 0]));
        let q3p = construct(NamedPolytope::Q3P).unwrap();
        assert!(q3p.vertex_index(&IntVector::from_i64s(&[1, 0, -1])).is_some());
        assert_eq!(q3p.vertex_sum(), IntVector::from_i64s(&[1, 0, 0]));
    }

    #[test]
    fn wrong_representative_is_rejected() {
        let hex = construct(NamedPolytope::V2).unwrap();
        assert!(matches!(verify(NamedPolytope::TV2, &hex), Err(Error::Construction { .. })));
        let e2 = construct(NamedPolytope::E2).unwrap();
        assert!(verify(NamedPolytope::E1, &e2).is_err());
    }

    #[test]
    fn free_sum_of_segment_and_hexagon_is_q3() {
        let s = free_sum(&construct(NamedPolytope::Seg).unwrap(), &construct(NamedPolytope::V2).unwrap()).unwrap();
        assert!(is_isomorphic(&s, &construct(NamedPolytope::Q3).unwrap()));
        let v2 = construct(NamedPolytope::V2).unwrap();
        let s = free_sum(&v2, &v2).unwrap();
        assert_eq!((s.dim(), s.num_vertices()), (4, 12));
    }

    #[test]
    fn dual_of_free_sum_is_product_of_duals() {
        let tv2 = construct(NamedPolytope::TV2).unwrap();
        let e1 = construct(NamedPolytope::E1).unwrap();
        let sum = free_sum(&tv2, &e1).unwrap();
        let dual = sum.dual().to_lattice().unwrap().unwrap();
        let product = cartesian_product(
            &tv2.dual().to_lattice().unwrap().unwrap(),
            &e1.dual().to_lattice().unwrap().unwrap(),
        )
        .unwrap();
        assert_eq!(dual.num_vertices(), 25);
        assert!(is_isomorphic(&dual, &product));
    }

    #[test]
    fn classification_lists() {
        assert_eq!(classification_list(3).unwrap().len(), 2);
        for d in 2..=5 {
            let list = classification_list(d).unwrap();
            assert_eq!(list.len(), if d % 2 == 0 { 3 } else { 2 });
            for p in &list {
                assert_eq!(p.num_vertices(), 3 * d - 1);
                assert_eq!(p.dim(), d);
            }
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    assert!(!is_isomorphic(&list[i], &list[j]));
                }
            }
        }
        assert!(classification_list(1).is_err());
        let labels: Vec<String> = classification_members(4).unwrap().iter().map(|m| m.label()).collect();
        assert_eq!(labels, ["tv2+1*v2", "e1+1*v2", "e2+1*v2"]);
    }

    #[test]
    fn hexagon_sums() {
        assert_eq!(casagrande_extremal(2).unwrap().num_vertices(), 6);
        let p = casagrande_extremal(4).unwrap();
        assert_eq!(p.num_vertices(), 12);
        assert_eq!(p.picard_number().unwrap(), 8);
        assert!(p.vertex_sum().coords().iter().all(|c| *c == BigInt::from(0)));
        assert!(casagrande_extremal(3).is_err());
    }
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{integer_kernel, rank_of_vectors, IntVector};
use crate::polytope::{Containment, LatticePolytope};

/// `v + w` when the two boundary points are not opposite and share no facet,
/// `None` otherwise. A returned sum is checked to lie on the boundary.
pub fn partial_add(p: &LatticePolytope, v: &IntVector, w: &IntVector) -> Result<Option<IntVector>> {
    if !p.is_reflexive() {
        return Err(Error::Domain("partial addition needs a reflexive polytope".into()));
    }
    for x in [v, w] {
        if !matches!(p.contains_lattice_point(x), Containment::Boundary(_)) {
            return Err(Error::Domain(format!("{x} is not a boundary lattice point")));
        }
    }
    let sum = v + w;
    if sum.is_zero() || p.share_facet(v, w) {
        return Ok(None);
    }
    match p.contains_lattice_point(&sum) {
        Containment::Boundary(_) => Ok(Some(sum)),
        _ => Err(Error::Internal(format!("{v} + {w} = {sum} is not on the boundary"))),
    }
}

/// Intersection of a polytope with a rational plane, written in a basis of
/// the plane's lattice points.
#[derive(Clone, Debug)]
pub struct PlaneSection {
    pub basis: [IntVector; 2],
    pub polygon: LatticePolytope,
}

impl PlaneSection {
    /// The ambient point with plane coordinates `(s, t)`.
    pub fn lift(&self, point: &IntVector) -> IntVector {
        &self.basis[0].scale(&point[0]) + &self.basis[1].scale(&point[1])
    }
}

/// Half-plane `a s + b t <= c` with `(a, b)` primitive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct HalfPlane {
    a: BigInt,
    b: BigInt,
    c: BigRational,
}

/// `P ∩ span(v, w, w2)` when the span is a plane, as a polygon in the
/// plane's own lattice.
pub fn section_2d(p: &LatticePolytope, v: &IntVector, w: &IntVector, w2: &IntVector) -> Result<PlaneSection> {
    let d = p.dim();
    if [v, w, w2].iter().any(|x| x.dim() != d) {
        return Err(Error::Dimension(format!("section points must have dimension {d}")));
    }
    let span = [v.clone(), w.clone(), w2.clone()];
    if rank_of_vectors(&span) != 2 {
        return Err(Error::Domain("section points do not span a plane".into()));
    }
    let annihilator = integer_kernel(&span, d);
    let basis = integer_kernel(&annihilator, d);
    if basis.len() != 2 {
        return Err(Error::Internal(format!("plane lattice has rank {}", basis.len())));
    }

    let mut planes: Vec<HalfPlane> = Vec::new();
    for f in p.facets() {
        let a = f.level(&basis[0]);
        let b = f.level(&basis[1]);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let g = a.gcd(&b);
        planes.push(HalfPlane {
            a: a / &g,
            b: b / &g,
            c: BigRational::new(f.offset().clone(), g),
        });
    }
    planes.sort();
    // Keep the tightest bound per direction.
    planes.dedup_by(|later, earlier| later.a == earlier.a && later.b == earlier.b);

    let mut corners: Vec<IntVector> = Vec::new();
    for i in 0..planes.len() {
        for j in i + 1..planes.len() {
            let (h1, h2) = (&planes[i], &planes[j]);
            let det = &h1.a * &h2.b - &h1.b * &h2.a;
            if det.is_zero() {
                continue;
            }
            let det = BigRational::from_integer(det);
            let s = (&h1.c * BigRational::from_integer(h2.b.clone())
                - &h2.c * BigRational::from_integer(h1.b.clone()))
                / &det;
            let t = (&h2.c * BigRational::from_integer(h1.a.clone())
                - &h1.c * BigRational::from_integer(h2.a.clone()))
                / &det;
            let feasible = planes.iter().all(|h| {
                BigRational::from_integer(h.a.clone()) * &s + BigRational::from_integer(h.b.clone()) * &t <= h.c
            });
            if !feasible {
                continue;
            }
            if !s.is_integer() || !t.is_integer() {
                return Err(Error::Internal(format!(
                    "section corner ({s}, {t}) is not a lattice point of the plane"
                )));
            }
            let x = IntVector::new(vec![s.to_integer(), t.to_integer()]);
            if !corners.contains(&x) {
                corners.push(x);
            }
        }
    }
    let polygon = LatticePolytope::hull_of(&corners)?;
    Ok(PlaneSection {
        basis: [basis[0].clone(), basis[1].clone()],
        polygon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;

    fn poly(rows: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64_rows(rows).unwrap()
    }

    fn v(c: &[i64]) -> IntVector {
        IntVector::from_i64s(c)
    }

    fn hexagon() -> LatticePolytope {
        poly(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]])
    }

    #[test]
    fn partial_add_hexagon() {
        let hex = hexagon();
        assert_eq!(partial_add(&hex, &v(&[1, 0]), &v(&[0, 1])).unwrap(), Some(v(&[1, 1])));
        assert_eq!(partial_add(&hex, &v(&[1, 0]), &v(&[1, 1])).unwrap(), None);
        assert_eq!(partial_add(&hex, &v(&[1, 0]), &v(&[-1, 0])).unwrap(), None);
        assert!(matches!(partial_add(&hex, &v(&[0, 0]), &v(&[1, 0])), Err(Error::Domain(_))));
    }

    #[test]
    fn partial_add_matches_boundary_membership() {
        let hex = hexagon();
        let (_, boundary) = hex.lattice_points();
        for x in &boundary {
            for y in &boundary {
                let sum = x + y;
                let expected = !sum.is_zero() && !hex.share_facet(x, y);
                let on_boundary = matches!(hex.contains_lattice_point(&sum), Containment::Boundary(_));
                assert_eq!(expected, on_boundary);
                assert_eq!(partial_add(&hex, x, y).unwrap().is_some(), expected);
            }
        }
    }

    #[test]
    fn sections_of_q3() {
        let q3 = poly(&[
            &[1, 0, 0],
            &[1, 1, 0],
            &[0, 1, 0],
            &[-1, 0, 0],
            &[-1, -1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        let s = section_2d(&q3, &v(&[1, 0, 0]), &v(&[0, 1, 0]), &v(&[1, 1, 0])).unwrap();
        assert!(is_isomorphic(&s.polygon, &hexagon()));
        for x in s.polygon.vertices() {
            assert_eq!(s.lift(x)[2], BigInt::zero());
        }
        let s = section_2d(&q3, &v(&[1, 0, 0]), &v(&[0, 0, 1]), &v(&[-1, 0, 0])).unwrap();
        let diamond = poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        assert!(is_isomorphic(&s.polygon, &diamond));
        assert!(matches!(
            section_2d(&q3, &v(&[1, 0, 0]), &v(&[0, 1, 0]), &v(&[0, 0, 1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn section_of_polygon_is_itself() {
        let hex = hexagon();
        let s = section_2d(&hex, &v(&[1, 0]), &v(&[0, 1]), &v(&[1, 1])).unwrap();
        assert!(is_isomorphic(&s.polygon, &hex));
    }
}

//! Full-dimensional lattice polytopes containing the origin in their
//! interior, with exact facet structure.

mod hull;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{is_lattice_basis, rank_of_vectors, IntMatrix, IntVector, RatVector};

pub use hull::brute_force_facets;

/// A facet `{x : <normal, x> = offset}` with `normal` primitive and
/// `<normal, v> <= offset` on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet {
    vertex_indices: Vec<usize>,
    normal: IntVector,
    offset: BigInt,
}

impl Facet {
    /// Sorted indices into the polytope's vertex list.
    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertex_indices
    }

    pub fn normal(&self) -> &IntVector {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn contains_vertex(&self, index: usize) -> bool {
        self.vertex_indices.binary_search(&index).is_ok()
    }

    pub fn len(&self) -> usize {
        self.vertex_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_indices.is_empty()
    }

    /// `<normal, x>`; for a reflexive polytope this is the lattice level of `x`
    /// relative to the facet.
    pub fn level(&self, x: &IntVector) -> BigInt {
        self.normal.dot(x)
    }

    /// The facet normal scaled to take the value 1 on the facet.
    pub fn dual_vertex(&self) -> RatVector {
        RatVector::new(
            self.normal
                .coords()
                .iter()
                .map(|a| BigRational::new(a.clone(), self.offset.clone()))
                .collect(),
        )
    }
}

/// Where a rational point sits relative to a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Containment {
    Interior,
    /// On the boundary; the indices of every facet tight at the point.
    Boundary(Vec<usize>),
    Outside,
}

#[derive(Clone, Debug)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<Facet>,
    index: HashMap<IntVector, usize>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Builds a polytope from its exact vertex list. Rejects duplicate or
    /// redundant points, lower-dimensional input and polytopes that do not
    /// contain the origin in their interior.
    pub fn new(vertices: Vec<IntVector>) -> Result<Self> {
        let raw = hull::compute_facets(&vertices)?;
        let dim = vertices[0].dim();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Domain(format!("duplicate vertex {v}")));
            }
        }
        let facets: Vec<Facet> = raw
            .into_iter()
            .map(|f| Facet {
                vertex_indices: f.tight,
                normal: f.normal,
                offset: f.offset,
            })
            .collect();
        for (i, v) in vertices.iter().enumerate() {
            let normals: Vec<IntVector> = facets
                .iter()
                .filter(|f| f.contains_vertex(i))
                .map(|f| f.normal.clone())
                .collect();
            if rank_of_vectors(&normals) != dim {
                return Err(Error::Domain(format!("point {v} is not a vertex of the hull")));
            }
        }
        Ok(LatticePolytope {
            dim,
            vertices,
            facets,
            index,
        })
    }

    /// The convex hull of arbitrary lattice points; non-vertices are dropped
    /// and the surviving vertices keep their relative input order.
    pub fn hull_of(points: &[IntVector]) -> Result<Self> {
        let mut unique: Vec<IntVector> = Vec::with_capacity(points.len());
        for p in points {
            if !unique.contains(p) {
                unique.push(p.clone());
            }
        }
        let raw = hull::compute_facets(&unique)?;
        let dim = unique[0].dim();
        let keep: Vec<IntVector> = unique
            .iter()
            .enumerate()
            .filter(|&(i, _)| {
                let normals: Vec<IntVector> = raw
                    .iter()
                    .filter(|f| f.tight.binary_search(&i).is_ok())
                    .map(|f| f.normal.clone())
                    .collect();
                rank_of_vectors(&normals) == dim
            })
            .map(|(_, v)| v.clone())
            .collect();
        Self::new(keep)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| IntVector::from_i64s(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &IntVector {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Facets sorted lexicographically by normal.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn vertex_index(&self, v: &IntVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn facet_vertices(&self, facet: &Facet) -> Vec<IntVector> {
        facet
            .vertex_indices
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect()
    }

    pub fn facet_index(&self, facet: &Facet) -> Option<usize> {
        self.facets
            .binary_search_by(|f| f.normal.cmp(&facet.normal))
            .ok()
    }

    /// Image under `x -> m x` for a square integer matrix. A unimodular `m`
    /// yields an isomorphic polytope.
    pub fn transform(&self, m: &IntMatrix) -> Result<LatticePolytope> {
        let vs = self
            .vertices
            .iter()
            .map(|v| m.mul_vector(v))
            .collect::<Result<Vec<_>>>()?;
        if m.det()?.abs().is_one() {
            // Facets map along: <a, x> = <m^-T a, m x>.
            let inv_t = unimodular_inverse(m)?.transpose();
            let mut facets = self
                .facets
                .iter()
                .map(|f| {
                    Ok(Facet {
                        vertex_indices: f.vertex_indices.clone(),
                        normal: inv_t.mul_vector(&f.normal)?,
                        offset: f.offset.clone(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            facets.sort_by(|a, b| a.normal.cmp(&b.normal));
            let index = vs.iter().cloned().zip(0..).collect();
            return Ok(LatticePolytope {
                dim: self.dim,
                vertices: vs,
                facets,
                index,
            });
        }
        LatticePolytope::new(vs)
    }

    /// Same polytope with vertices listed in the order `perm[0], perm[1], ...`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<LatticePolytope> {
        if perm.len() != self.vertices.len() {
            return Err(Error::Dimension("permutation length".into()));
        }
        LatticePolytope::new(perm.iter().map(|&i| self.vertices[i].clone()).collect())
    }

    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_one())
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.dim)
    }

    pub fn is_smooth_fano(&self) -> bool {
        self.is_simplicial()
            && self.is_reflexive()
            && self.facets.iter().all(|f| {
                is_lattice_basis(&self.facet_vertices(f)).expect("simplicial facet has d vertices")
            })
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.vertices.iter().all(|v| self.index.contains_key(&-v))
    }

    /// The sum of all vertices.
    pub fn vertex_sum(&self) -> IntVector {
        self.vertices
            .iter()
            .fold(IntVector::zero(self.dim), |acc, v| &acc + v)
    }

    /// `|V(P)| - d`; defined for simplicial reflexive polytopes only.
    pub fn picard_number(&self) -> Result<usize> {
        if !(self.is_simplicial() && self.is_reflexive()) {
            return Err(Error::Domain(
                "Picard number needs a simplicial reflexive polytope".into(),
            ));
        }
        Ok(self.vertices.len() - self.dim)
    }

    /// The polar dual, whose vertices are the facet normals scaled to level 1.
    pub fn dual(&self) -> RationalPolytope {
        RationalPolytope {
            dim: self.dim,
            vertices: self.facets.iter().map(Facet::dual_vertex).collect(),
        }
    }

    pub fn contains(&self, x: &RatVector) -> Containment {
        let mut tight = Vec::new();
        for (k, f) in self.facets.iter().enumerate() {
            let lhs = x.dot_int(&f.normal);
            let rhs = BigRational::from_integer(f.offset.clone());
            if lhs > rhs {
                return Containment::Outside;
            }
            if lhs == rhs {
                tight.push(k);
            }
        }
        if tight.is_empty() {
            Containment::Interior
        } else {
            Containment::Boundary(tight)
        }
    }

    pub fn contains_lattice_point(&self, x: &IntVector) -> Containment {
        let mut tight = Vec::new();
        for (k, f) in self.facets.iter().enumerate() {
            match f.level(x).cmp(&f.offset) {
                std::cmp::Ordering::Greater => return Containment::Outside,
                std::cmp::Ordering::Equal => tight.push(k),
                std::cmp::Ordering::Less => {}
            }
        }
        if tight.is_empty() {
            Containment::Interior
        } else {
            Containment::Boundary(tight)
        }
    }

    /// Lattice points of the polytope split into interior and boundary, each
    /// sorted lexicographically.
    ///
    /// The scan runs over the levels of `d` independent facet normals rather
    /// than the coordinate box, so its cost does not depend on how sheared
    /// the vertex coordinates are.
    pub fn lattice_points(&self) -> (Vec<IntVector>, Vec<IntVector>) {
        let d = self.dim;
        let mut ranked: Vec<(BigInt, usize)> = self
            .facets
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let low = self.vertices.iter().map(|v| f.level(v)).min().expect("vertices");
                (&f.offset - low, k)
            })
            .collect();
        ranked.sort();
        let mut chosen: Vec<usize> = Vec::with_capacity(d);
        let mut rows: Vec<IntVector> = Vec::with_capacity(d);
        for &(_, k) in &ranked {
            rows.push(self.facets[k].normal.clone());
            if rank_of_vectors(&rows) == rows.len() {
                chosen.push(k);
                if chosen.len() == d {
                    break;
                }
            } else {
                rows.pop();
            }
        }
        let a = IntMatrix::from_rows(&rows).expect("square normal matrix");
        // Integer matrix `b` and denominator with a^-1 = b / den.
        let columns: Vec<RatVector> = (0..d)
            .map(|j| a.solve_rational(&IntVector::unit(d, j)).expect("independent normals"))
            .collect();
        let den = columns
            .iter()
            .flat_map(|c| c.coords().iter())
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let b: Vec<Vec<BigInt>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (&columns[j].coords()[i] * BigRational::from_integer(den.clone())).to_integer())
                    .collect()
            })
            .collect();
        let lo: Vec<BigInt> = chosen
            .iter()
            .map(|&k| self.vertices.iter().map(|v| self.facets[k].level(v)).min().expect("vertices"))
            .collect();
        let hi: Vec<BigInt> = chosen.iter().map(|&k| self.facets[k].offset.clone()).collect();

        let (mut interior, mut boundary) = (Vec::new(), Vec::new());
        let mut cur = lo.clone();
        'scan: loop {
            let mut coords = Vec::with_capacity(d);
            let mut integral = true;
            for row in &b {
                let (q, r) = crate::lattice::dot(row, &cur).div_rem(&den);
                if !r.is_zero() {
                    integral = false;
                    break;
                }
                coords.push(q);
            }
            if integral {
                let x = IntVector::new(coords);
                match self.contains_lattice_point(&x) {
                    Containment::Interior => interior.push(x),
                    Containment::Boundary(_) => boundary.push(x),
                    Containment::Outside => {}
                }
            }
            let mut k = d;
            loop {
                if k == 0 {
                    break 'scan;
                }
                k -= 1;
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k].clone();
            }
        }
        interior.sort();
        boundary.sort();
        (interior, boundary)
    }

    /// Indices of facets containing vertex `i`.
    pub fn facets_of_vertex(&self, i: usize) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&k| self.facets[k].contains_vertex(i))
            .collect()
    }

    /// Whether two boundary points share a facet.
    pub fn share_facet(&self, x: &IntVector, y: &IntVector) -> bool {
        self.facets
            .iter()
            .any(|f| f.level(x) == f.offset && f.level(y) == f.offset)
    }
}

fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let n = m.nrows();
    let mut data = vec![BigInt::zero(); n * n];
    for j in 0..n {
        let col = m.solve_rational(&IntVector::unit(n, j))?;
        let col = col
            .to_integral()
            .ok_or_else(|| Error::Internal("inverse of a unimodular matrix is not integral".into()))?;
        for i in 0..n {
            data[i * n + j] = col[i].clone();
        }
    }
    IntMatrix::new(n, n, data)
}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A polytope with rational vertices; produced by [`LatticePolytope::dual`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    vertices: Vec<RatVector>,
}

impl RationalPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn is_lattice_polytope(&self) -> bool {
        self.vertices.iter().all(RatVector::is_integral)
    }

    /// The same polytope as a lattice polytope, when every vertex is integral.
    pub fn to_lattice(&self) -> Option<Result<LatticePolytope>> {
        let vs: Option<Vec<IntVector>> = self.vertices.iter().map(RatVector::to_integral).collect();
        vs.map(LatticePolytope::new)
    }

    /// Multiplies by the least common denominator, giving a lattice polytope
    /// with the same combinatorics.
    pub fn scaled_to_lattice(&self) -> Result<LatticePolytope> {
        let lcm = self
            .vertices
            .iter()
            .flat_map(|v| v.coords().iter())
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let vs = self
            .vertices
            .iter()
            .map(|v| {
                IntVector::new(
                    v.coords()
                        .iter()
                        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                        .collect(),
                )
            })
            .collect();
        LatticePolytope::new(vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(rows: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64_rows(rows).unwrap()
    }

    fn v(c: &[i64]) -> IntVector {
        IntVector::from_i64s(c)
    }

    fn hexagon() -> LatticePolytope {
        poly(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]])
    }

    fn cube3() -> LatticePolytope {
        let mut vs = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    vs.push(v(&[x, y, z]));
                }
            }
        }
        LatticePolytope::new(vs).unwrap()
    }

    #[test]
    fn square_facets() {
        let sq = poly(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        let normals: Vec<IntVector> = sq.facets().iter().map(|f| f.normal().clone()).collect();
        assert_eq!(normals, vec![v(&[-1, 0]), v(&[0, -1]), v(&[0, 1]), v(&[1, 0])]);
        assert!(sq.facets().iter().all(|f| f.offset().is_one()));
    }

    #[test]
    fn hexagon_duality() {
        let hex = hexagon();
        assert_eq!(hex.facets().len(), 6);
        let dual = hex.dual();
        let mut dv: Vec<IntVector> = dual.vertices().iter().map(|x| x.to_integral().unwrap()).collect();
        dv.sort();
        let mut expected = vec![v(&[1, 0]), v(&[0, 1]), v(&[-1, 1]), v(&[-1, 0]), v(&[0, -1]), v(&[1, -1])];
        expected.sort();
        assert_eq!(dv, expected);

        let back = dual.to_lattice().unwrap().unwrap().dual();
        let mut bv: Vec<IntVector> = back.vertices().iter().map(|x| x.to_integral().unwrap()).collect();
        bv.sort();
        let mut hv = hex.vertices().to_vec();
        hv.sort();
        assert_eq!(bv, hv);
    }

    #[test]
    fn reflexivity_examples() {
        assert!(poly(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]).is_reflexive());
        assert!(!poly(&[&[2, 0], &[-2, 0], &[0, 1], &[0, -1]]).is_reflexive());
        assert!(poly(&[&[2, -1], &[-1, 2], &[-1, -1]]).is_reflexive());
    }

    #[test]
    fn cube_is_not_simplicial() {
        let c = cube3();
        assert!(c.is_reflexive());
        assert!(!c.is_simplicial());
        assert!(!c.is_smooth_fano());
        assert!(c.picard_number().is_err());
    }

    #[test]
    fn cross_polytope_smooth() {
        let mut vs = Vec::new();
        for i in 0..4 {
            vs.push(IntVector::unit(4, i));
            vs.push(-&IntVector::unit(4, i));
        }
        let p = LatticePolytope::new(vs).unwrap();
        assert_eq!(p.facets().len(), 16);
        assert!(p.is_smooth_fano());
        assert_eq!(p.picard_number().unwrap(), 4);
    }

    #[test]
    fn lattice_points_examples() {
        let sq = poly(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        let (i, b) = sq.lattice_points();
        assert_eq!(i, vec![v(&[0, 0])]);
        assert_eq!(b.len(), 8);

        let hex = hexagon();
        let (i, mut b) = hex.lattice_points();
        assert_eq!(i, vec![v(&[0, 0])]);
        b.sort();
        let mut hv = hex.vertices().to_vec();
        hv.sort();
        assert_eq!(b, hv);

        let wide = poly(&[&[2, 0], &[-2, 0], &[0, 1], &[0, -1]]);
        assert!(wide.lattice_points().0.contains(&v(&[1, 0])));
    }

    fn box_scan(p: &LatticePolytope) -> Vec<IntVector> {
        let d = p.dim();
        let lo: Vec<i64> = (0..d)
            .map(|i| p.vertices().iter().map(|v| i64::try_from(&v[i]).unwrap()).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|i| p.vertices().iter().map(|v| i64::try_from(&v[i]).unwrap()).max().unwrap())
            .collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let x = IntVector::from_i64s(&cur);
            if p.contains_lattice_point(&x) != Containment::Outside {
                out.push(x);
            }
            let mut k = d;
            loop {
                if k == 0 {
                    out.sort();
                    return out;
                }
                k -= 1;
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k];
            }
        }
    }

    #[test]
    fn unimodular_transform_maps_facets() {
        let hex = hexagon();
        let m = IntMatrix::from_i64_rows(&[&[2, 1], &[5, 3]]).unwrap();
        let fast = hex.transform(&m).unwrap();
        let slow = LatticePolytope::new(fast.vertices().to_vec()).unwrap();
        assert_eq!(fast.facets(), slow.facets());
        let doubled = hex.transform(&IntMatrix::diagonal(&[2, 1])).unwrap();
        assert!(!doubled.is_reflexive());
    }

    #[test]
    fn lattice_points_agree_with_box_scan() {
        let shear = IntMatrix::from_i64_rows(&[&[1, 3, 0], &[0, 1, 0], &[2, 5, 1]]).unwrap();
        let samples = [
            poly(&[&[2, 1], &[-1, 1], &[-1, -2], &[1, -1]]),
            poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]])
                .transform(&shear)
                .unwrap(),
            poly(&[&[3, 0, 0], &[0, 2, 0], &[0, 0, 1], &[-1, -1, -1]]),
        ];
        for p in &samples {
            let (i, b) = p.lattice_points();
            let mut all: Vec<IntVector> = i.into_iter().chain(b).collect();
            all.sort();
            assert_eq!(all, box_scan(p));
        }
    }

    #[test]
    fn containment_examples() {
        let hex = hexagon();
        assert_eq!(hex.contains(&v(&[0, 0]).to_rational()), Containment::Interior);
        match hex.contains(&v(&[1, 0]).to_rational()) {
            Containment::Boundary(t) => assert_eq!(t.len(), 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(hex.contains(&v(&[2, 0]).to_rational()), Containment::Outside);
    }

    #[test]
    fn picard_examples() {
        assert_eq!(hexagon().picard_number().unwrap(), 4);
        let tv2 = poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1]]);
        assert_eq!(tv2.picard_number().unwrap(), 3);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(matches!(
            LatticePolytope::from_i64_rows(&[&[1, 0], &[-1, 0], &[2, 0]]),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            LatticePolytope::from_i64_rows(&[&[1, 0], &[0, 1], &[-1, -1], &[0, 0]]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            LatticePolytope::from_i64_rows(&[&[1, 0], &[0, 1], &[-1, -1], &[1, 0]]),
            Err(Error::Domain(_))
        ));
        // Midpoint of an edge is not a vertex.
        assert!(matches!(
            LatticePolytope::from_i64_rows(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, -1], &[1, -1], &[0, -1]]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            LatticePolytope::from_i64_rows(&[&[1, 1], &[2, 1], &[1, 2]]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn hull_of_drops_interior_points() {
        let p = LatticePolytope::hull_of(&[v(&[1, 0]), v(&[0, 0]), v(&[0, 1]), v(&[-1, -1]), v(&[0, 1])]).unwrap();
        assert_eq!(p.vertices(), &[v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])]);
    }
}

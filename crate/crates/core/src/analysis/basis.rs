use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::SimplicialView;
use crate::error::{Error, Result};
use crate::lattice::{is_lattice_basis, IntVector};
use crate::polytope::LatticePolytope;

/// Result of the determinant descent towards a unimodular facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisDescent {
    /// Index of the facet whose vertices form a lattice basis.
    pub facet: usize,
    /// Facets visited, starting with facet 0.
    pub path: Vec<usize>,
    /// `|det|` of each visited facet, strictly decreasing.
    pub determinants: Vec<BigInt>,
}

/// Facet vertices whose neighbouring vertex sits on level 0 with dual
/// coordinate -1.
pub(super) fn unit_neighbors(view: &SimplicialView<'_>, facet: usize) -> Result<Vec<usize>> {
    let p = view.polytope();
    let frame = view.frame(facet);
    let minus_one = -BigRational::one();
    let mut out = Vec::new();
    for (j, &v) in frame.vertices().iter().enumerate() {
        let nv = p.vertex(view.neighboring_vertex(facet, v)?);
        if view.level(facet, nv).is_zero() && frame.coordinate(j, nv) == minus_one {
            out.push(v);
        }
    }
    Ok(out)
}

/// Number of distinct neighbouring vertices of `facet` on level 0.
pub(super) fn level_zero_neighbors(view: &SimplicialView<'_>, facet: usize) -> Result<usize> {
    let p = view.polytope();
    let mut seen: Vec<usize> = Vec::new();
    for &v in view.facet(facet).vertex_indices() {
        let n = view.neighboring_vertex(facet, v)?;
        if view.level(facet, p.vertex(n)).is_zero() && !seen.contains(&n) {
            seen.push(n);
        }
    }
    Ok(seen.len())
}

/// Walks from facet 0 to a facet whose vertices form a lattice basis, each
/// step crossing into a neighbour with smaller `|det|`.
///
/// Every facet the walk has to leave must have at least `d - 1` distinct
/// neighbouring vertices on level 0.
pub fn find_basis_facet(p: &LatticePolytope) -> Result<BasisDescent> {
    let view = SimplicialView::new(p)?;
    let d = p.dim();
    let mut current = 0;
    let mut path = vec![0];
    let mut determinants = vec![view.frame(0).determinant(p)];
    loop {
        let basis: Vec<IntVector> = p.facet_vertices(view.facet(current));
        let is_basis = is_lattice_basis(&basis)?;
        if unit_neighbors(&view, current)?.len() + 1 >= d {
            if !is_basis {
                return Err(Error::Internal(format!(
                    "facet {current} meets the basis criterion but is not a lattice basis"
                )));
            }
            return Ok(BasisDescent { facet: current, path, determinants });
        }
        if is_basis {
            return Ok(BasisDescent { facet: current, path, determinants });
        }
        if level_zero_neighbors(&view, current)? + 1 < d {
            return Err(Error::Domain(format!(
                "facet {current} has fewer than {} neighbouring vertices on level 0",
                d - 1
            )));
        }
        let frame = view.frame(current);
        let mut step = None;
        for (j, &v) in frame.vertices().iter().enumerate() {
            let nv = p.vertex(view.neighboring_vertex(current, v)?);
            if view.level(current, nv).is_zero() && frame.coordinate(j, nv) != -BigRational::one() {
                step = Some(view.neighboring_facet(current, v)?);
                break;
            }
        }
        let next = step.ok_or_else(|| Error::Internal(format!("no descent step from facet {current}")))?;
        let det = view.frame(next).determinant(p);
        let last = determinants.last().expect("nonempty");
        if det >= *last {
            return Err(Error::Internal(format!(
                "determinant did not decrease from facet {current} ({last}) to facet {next} ({det})"
            )));
        }
        path.push(next);
        determinants.push(det);
        current = next;
    }
}

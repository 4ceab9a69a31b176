//! Analysis of simplicial reflexive polytopes: vertex sums, special facets,
//! slice distributions along facet normals, neighbouring facets, dual bases
//! of facets, plane sections, partial addition of boundary points, the
//! basis-facet descent, and executable checks of the structural lemmas.

mod basis;
mod lemmas;
mod section;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, IntVector};
use crate::polytope::{Containment, Facet, LatticePolytope};

pub use basis::{find_basis_facet, BasisDescent};
pub use lemmas::{check_lemmas, LemmaId, LemmaReport, Tally, Violation};
pub use section::{partial_add, section_2d, PlaneSection};

/// Where the vertex sum sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NuKind {
    Zero,
    Vertex,
    BoundaryNonVertex,
    InteriorNonzero,
}

impl fmt::Display for NuKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NuKind::Zero => "zero",
            NuKind::Vertex => "vertex",
            NuKind::BoundaryNonVertex => "boundary-nonvertex",
            NuKind::InteriorNonzero => "interior-nonzero",
        })
    }
}

pub fn vertex_sum(p: &LatticePolytope) -> IntVector {
    p.vertex_sum()
}

pub fn nu_kind(p: &LatticePolytope) -> NuKind {
    let nu = p.vertex_sum();
    if nu.is_zero() {
        NuKind::Zero
    } else if p.vertex_index(&nu).is_some() {
        NuKind::Vertex
    } else {
        match p.contains_lattice_point(&nu) {
            Containment::Interior => NuKind::InteriorNonzero,
            // Outside cannot occur for a reflexive polytope; reported with
            // the boundary kind since the sum is not interior.
            _ => NuKind::BoundaryNonVertex,
        }
    }
}

fn require_simplicial_reflexive(p: &LatticePolytope) -> Result<()> {
    if !p.is_reflexive() {
        return Err(Error::Domain("polytope is not reflexive".into()));
    }
    if !p.is_simplicial() {
        return Err(Error::Domain("polytope is not simplicial".into()));
    }
    Ok(())
}

/// The dual basis `{u_F^v}` of a simplicial facet, stored as integer
/// numerators over one positive common denominator.
#[derive(Clone, Debug)]
pub struct FacetFrame {
    facet: usize,
    vertices: Vec<usize>,
    numerators: Vec<IntVector>,
    denominator: BigInt,
    normal: IntVector,
}

impl FacetFrame {
    pub fn facet(&self) -> usize {
        self.facet
    }

    /// Vertex indices of the facet, in the order of the dual basis.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `u_F`, the integral normal taking value 1 on the facet.
    pub fn normal(&self) -> &IntVector {
        &self.normal
    }

    pub fn position(&self, vertex: usize) -> Option<usize> {
        self.vertices.iter().position(|&v| v == vertex)
    }

    /// `<u_F^v, x>` for the `j`-th facet vertex `v`.
    pub fn coordinate(&self, j: usize, x: &IntVector) -> BigRational {
        BigRational::new(self.numerators[j].dot(x), self.denominator.clone())
    }

    /// `<u_F^v, x>` for the facet vertex with polytope index `vertex`.
    pub fn coordinate_of(&self, vertex: usize, x: &IntVector) -> Option<BigRational> {
        self.position(vertex).map(|j| self.coordinate(j, x))
    }

    pub fn dual_vector(&self, j: usize) -> crate::lattice::RatVector {
        crate::lattice::RatVector::new(
            self.numerators[j]
                .coords()
                .iter()
                .map(|c| BigRational::new(c.clone(), self.denominator.clone()))
                .collect(),
        )
    }

    /// `|det|` of the facet's vertex matrix.
    pub fn determinant(&self, p: &LatticePolytope) -> BigInt {
        let rows: Vec<IntVector> = self.vertices.iter().map(|&i| p.vertex(i).clone()).collect();
        IntMatrix::from_rows(&rows)
            .and_then(|m| m.det())
            .expect("square facet matrix")
            .abs()
    }
}

pub fn facet_frame(p: &LatticePolytope, facet: usize) -> Result<FacetFrame> {
    require_simplicial_reflexive(p)?;
    build_frame(p, facet)
}

fn build_frame(p: &LatticePolytope, facet: usize) -> Result<FacetFrame> {
    let f = p
        .facets()
        .get(facet)
        .ok_or_else(|| Error::Domain(format!("no facet {facet}")))?;
    let d = p.dim();
    let vertices = f.vertex_indices().to_vec();
    let a = IntMatrix::from_rows(&p.facet_vertices(f))?;
    let mut duals = Vec::with_capacity(d);
    for j in 0..d {
        let sol = a
            .solve_rational(&IntVector::unit(d, j))
            .map_err(|_| Error::Internal(format!("facet {facet} has a singular vertex matrix")))?;
        duals.push(sol);
    }
    let denominator = duals
        .iter()
        .flat_map(|u| u.coords().iter())
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let numerators: Vec<IntVector> = duals
        .iter()
        .map(|u| {
            IntVector::new(
                u.coords()
                    .iter()
                    .map(|c| (c * BigRational::from_integer(denominator.clone())).to_integer())
                    .collect(),
            )
        })
        .collect();
    let frame = FacetFrame {
        facet,
        vertices,
        numerators,
        denominator,
        normal: f.normal().clone(),
    };
    for (j, &vj) in frame.vertices.iter().enumerate() {
        for (k, &vk) in frame.vertices.iter().enumerate() {
            let expected = if j == k { BigRational::one() } else { BigRational::zero() };
            if frame.coordinate(j, p.vertex(vk)) != expected {
                return Err(Error::Internal(format!("dual basis identity fails at {vj},{vk}")));
            }
        }
    }
    let sum = frame
        .numerators
        .iter()
        .fold(IntVector::zero(d), |acc, n| &acc + n);
    if sum != frame.normal.scale(&frame.denominator) {
        return Err(Error::Internal(format!("dual basis of facet {facet} does not sum to its normal")));
    }
    Ok(frame)
}

/// Adjacency data of a simplicial reflexive polytope: neighbouring facets and
/// dual-basis frames for every facet.
#[derive(Clone, Debug)]
pub struct SimplicialView<'a> {
    polytope: &'a LatticePolytope,
    ridges: HashMap<Vec<usize>, Vec<usize>>,
    frames: Vec<FacetFrame>,
}

impl<'a> SimplicialView<'a> {
    pub fn new(p: &'a LatticePolytope) -> Result<Self> {
        require_simplicial_reflexive(p)?;
        let mut ridges: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (k, f) in p.facets().iter().enumerate() {
            for skip in 0..f.len() {
                let ridge: Vec<usize> = f
                    .vertex_indices()
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &i)| i)
                    .collect();
                ridges.entry(ridge).or_default().push(k);
            }
        }
        if let Some((r, fs)) = ridges.iter().find(|(_, fs)| fs.len() != 2) {
            return Err(Error::Internal(format!("ridge {r:?} lies in {} facets", fs.len())));
        }
        let frames = (0..p.facets().len())
            .map(|k| build_frame(p, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialView { polytope: p, ridges, frames })
    }

    pub fn polytope(&self) -> &'a LatticePolytope {
        self.polytope
    }

    pub fn frame(&self, facet: usize) -> &FacetFrame {
        &self.frames[facet]
    }

    pub fn facet(&self, facet: usize) -> &'a Facet {
        &self.polytope.facets()[facet]
    }

    /// Index of the facet sharing all vertices of `facet` except `vertex`.
    pub fn neighboring_facet(&self, facet: usize, vertex: usize) -> Result<usize> {
        let f = self.facet(facet);
        if !f.contains_vertex(vertex) {
            return Err(Error::Domain(format!("vertex {vertex} is not on facet {facet}")));
        }
        let ridge: Vec<usize> = f.vertex_indices().iter().copied().filter(|&i| i != vertex).collect();
        let pair = &self.ridges[&ridge];
        Ok(if pair[0] == facet { pair[1] } else { pair[0] })
    }

    /// The unique vertex of the neighbouring facet outside `facet`.
    pub fn neighboring_vertex(&self, facet: usize, vertex: usize) -> Result<usize> {
        let g = self.neighboring_facet(facet, vertex)?;
        let f = self.facet(facet);
        self.facet(g)
            .vertex_indices()
            .iter()
            .copied()
            .find(|&i| !f.contains_vertex(i))
            .ok_or_else(|| Error::Internal("neighbouring facet adds no vertex".into()))
    }

    pub fn level(&self, facet: usize, x: &IntVector) -> BigInt {
        self.facet(facet).level(x)
    }
}

pub fn neighboring_facet(p: &LatticePolytope, facet: usize, vertex: usize) -> Result<usize> {
    if !p.is_simplicial() {
        return Err(Error::Domain("neighbouring facets need a simplicial polytope".into()));
    }
    SimplicialView::new(p)?.neighboring_facet(facet, vertex)
}

pub fn neighboring_vertex(p: &LatticePolytope, facet: usize, vertex: usize) -> Result<usize> {
    if !p.is_simplicial() {
        return Err(Error::Domain("neighbouring facets need a simplicial polytope".into()));
    }
    SimplicialView::new(p)?.neighboring_vertex(facet, vertex)
}

/// Whether `x` lies in the cone spanned by the facet's vertices, decided by
/// the signs of its dual-basis coordinates.
fn in_facet_cone(frame: &FacetFrame, x: &IntVector) -> bool {
    frame.numerators.iter().all(|n| !n.dot(x).is_negative())
}

/// Indices of the facets whose cone contains the vertex sum.
pub fn special_facets(p: &LatticePolytope) -> Result<Vec<usize>> {
    require_simplicial_reflexive(p)?;
    let nu = p.vertex_sum();
    let mut out = Vec::new();
    for k in 0..p.facets().len() {
        if in_facet_cone(&build_frame(p, k)?, &nu) {
            out.push(k);
        }
    }
    if out.is_empty() {
        return Err(Error::Internal("no special facet".into()));
    }
    Ok(out)
}

pub fn is_special(view: &SimplicialView<'_>, facet: usize) -> bool {
    in_facet_cone(view.frame(facet), &view.polytope().vertex_sum())
}

/// Vertex counts per lattice level of a facet normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceDistribution {
    counts: BTreeMap<BigInt, usize>,
    nu_level: BigInt,
}

impl SliceDistribution {
    pub fn counts(&self) -> &BTreeMap<BigInt, usize> {
        &self.counts
    }

    pub fn count(&self, level: i64) -> usize {
        self.counts.get(&BigInt::from(level)).copied().unwrap_or(0)
    }

    /// `<u_F, nu_P>`.
    pub fn nu_level(&self) -> &BigInt {
        &self.nu_level
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// `sum_i i * count(i)`, which equals the level of the vertex sum.
    pub fn weighted_sum(&self) -> BigInt {
        self.counts.iter().map(|(l, &c)| l * BigInt::from(c)).sum()
    }

    /// Levels from highest to lowest as `level:count`.
    pub fn to_text(&self) -> String {
        self.counts
            .iter()
            .rev()
            .map(|(l, c)| format!("{l}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn hyperplane_distribution(p: &LatticePolytope, facet: usize) -> Result<SliceDistribution> {
    if !p.is_reflexive() {
        return Err(Error::Domain("slice levels need a reflexive polytope".into()));
    }
    let f = p
        .facets()
        .get(facet)
        .ok_or_else(|| Error::Domain(format!("no facet {facet}")))?;
    let mut counts = BTreeMap::new();
    for v in p.vertices() {
        *counts.entry(f.level(v)).or_insert(0) += 1;
    }
    Ok(SliceDistribution {
        counts,
        nu_level: f.level(&p.vertex_sum()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    A,
    B,
    C,
}

impl CaseLabel {
    /// Expected level of the vertex sum on a special facet.
    pub fn nu_level(self) -> i64 {
        match self {
            CaseLabel::A | CaseLabel::B => 0,
            CaseLabel::C => 1,
        }
    }

    /// Vertex counts on levels 1, 0, -1, -2.
    pub fn pattern(self, d: usize) -> [usize; 4] {
        match self {
            CaseLabel::A => [d, d, d - 2, 1],
            CaseLabel::B => [d, d - 1, d, 0],
            CaseLabel::C => [d, d, d - 1, 0],
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Matches a special facet's slice distribution against the three possible
/// distributions of `3d - 1` vertices.
pub fn classify_case(p: &LatticePolytope, facet: usize) -> Result<CaseLabel> {
    require_simplicial_reflexive(p)?;
    let d = p.dim();
    if d < 2 || p.num_vertices() != 3 * d - 1 {
        return Err(Error::Domain(format!(
            "case table applies to {} vertices, polytope has {}",
            3 * d - 1,
            p.num_vertices()
        )));
    }
    let frame = build_frame(p, facet)?;
    if !in_facet_cone(&frame, &p.vertex_sum()) {
        return Err(Error::Domain(format!("facet {facet} is not special")));
    }
    let dist = hyperplane_distribution(p, facet)?;
    let observed = [dist.count(1), dist.count(0), dist.count(-1), dist.count(-2)];
    let covered: usize = observed.iter().sum();
    let label = [CaseLabel::A, CaseLabel::B, CaseLabel::C]
        .into_iter()
        .find(|c| c.pattern(d) == observed && covered == dist.total())
        .ok_or_else(|| {
            Error::Classification(format!(
                "facet {facet} has distribution {} matching no case",
                dist.to_text()
            ))
        })?;
    if *dist.nu_level() != BigInt::from(label.nu_level()) {
        return Err(Error::Classification(format!(
            "facet {facet} is case {label} but the vertex sum sits at level {}",
            dist.nu_level()
        )));
    }
    Ok(label)
}

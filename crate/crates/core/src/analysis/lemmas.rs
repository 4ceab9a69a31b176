use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::basis::unit_neighbors;
use super::SimplicialView;
use crate::error::Result;
use crate::lattice::{is_lattice_basis, IntVector};
use crate::polytope::{Containment, LatticePolytope};

/// The structural facts about neighbouring facets that the checker restates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// Exactly `d` vertices on level 1 and at most `d` on level 0.
    FacetLevels,
    /// `u_F' = u_F + (<u_F', v> - 1) u_F^v` with `<u_F', v> - 1 <= -1`.
    NeighborTransform,
    /// `<u_F, x> - 1 <= <u_F^v, x>`, with equality only on `N(F, v)`.
    DualLowerBound,
    /// On a basis facet a level-0 neighbouring vertex has coordinate -1.
    BasisCoordinate,
    /// Level-0 boundary points lie on neighbouring facets.
    LevelZeroNeighbors,
    /// `x = N(F, w)` exactly when `<u_F^w, x> < 0`.
    NeighborSign,
    /// A vertex on exactly one neighbouring facet `N(F, w)` adds to `w` inside `F`.
    NeighborSum,
    /// `d - 1` unit neighbours make the facet a lattice basis.
    BasisCriterion,
    /// Two unit neighbours exclude a level -1 vertex with both coordinates -1.
    OppositeExclusion,
    /// Level-0 vertices are differences of facet vertices and the facet is a basis.
    LevelZeroDifferences,
    /// Level -1 vertices are negatives of facet vertices.
    LevelMinusOne,
}

impl LemmaId {
    pub const ALL: [LemmaId; 11] = [
        LemmaId::FacetLevels,
        LemmaId::NeighborTransform,
        LemmaId::DualLowerBound,
        LemmaId::BasisCoordinate,
        LemmaId::LevelZeroNeighbors,
        LemmaId::NeighborSign,
        LemmaId::NeighborSum,
        LemmaId::BasisCriterion,
        LemmaId::OppositeExclusion,
        LemmaId::LevelZeroDifferences,
        LemmaId::LevelMinusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::FacetLevels => "facet-levels",
            LemmaId::NeighborTransform => "neighbor-transform",
            LemmaId::DualLowerBound => "dual-lower-bound",
            LemmaId::BasisCoordinate => "basis-coordinate",
            LemmaId::LevelZeroNeighbors => "level-zero-neighbors",
            LemmaId::NeighborSign => "neighbor-sign",
            LemmaId::NeighborSum => "neighbor-sum",
            LemmaId::BasisCriterion => "basis-criterion",
            LemmaId::OppositeExclusion => "opposite-exclusion",
            LemmaId::LevelZeroDifferences => "level-zero-differences",
            LemmaId::LevelMinusOne => "level-minus-one",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed conclusion: the lemma, the facet index and the vertex indices
/// that witness the failure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub lemma: LemmaId,
    pub facet: usize,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LEMMA {} FACET {} WITNESS", self.lemma, self.facet)?;
        for w in &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// How often a lemma's hypothesis held (`checked`) or failed (`vacuous`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub vacuous: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub violations: Vec<Violation>,
    pub tallies: BTreeMap<LemmaId, Tally>,
}

impl LemmaReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, lemma: LemmaId) -> Tally {
        self.tallies.get(&lemma).copied().unwrap_or_default()
    }

    /// One line per violation, in report order.
    pub fn to_text(&self) -> String {
        self.violations.iter().map(|v| format!("{v}\n")).collect()
    }

    fn checked(&mut self, lemma: LemmaId) {
        self.tallies.entry(lemma).or_default().checked += 1;
    }

    fn vacuous(&mut self, lemma: LemmaId) {
        self.tallies.entry(lemma).or_default().vacuous += 1;
    }

    fn fail(&mut self, lemma: LemmaId, facet: usize, witness: Vec<usize>) {
        self.violations.push(Violation { lemma, facet, witness });
    }
}

fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Runs every lemma over every facet of a simplicial reflexive polytope.
/// Hypotheses are tested, never assumed; failed conclusions are collected.
pub fn check_lemmas(p: &LatticePolytope) -> Result<LemmaReport> {
    let view = SimplicialView::new(p)?;
    let (_, boundary) = p.lattice_points();
    let mut report = LemmaReport::default();
    for k in 0..p.facets().len() {
        check_facet(&view, &boundary, k, &mut report)?;
    }
    report.violations.sort();
    Ok(report)
}

fn check_facet(
    view: &SimplicialView<'_>,
    boundary: &[IntVector],
    k: usize,
    report: &mut LemmaReport,
) -> Result<()> {
    let p = view.polytope();
    let d = p.dim();
    let n = p.num_vertices();
    let frame = view.frame(k);
    let facet = view.facet(k);
    let fv = frame.vertices();
    let one = BigRational::one();
    let levels: Vec<BigInt> = p.vertices().iter().map(|x| facet.level(x)).collect();
    let at_level = |l: i64| -> Vec<usize> { (0..n).filter(|&x| levels[x] == BigInt::from(l)).collect() };
    let level_zero = at_level(0);
    let level_minus_one = at_level(-1);

    let neighbor_facets: Vec<usize> = fv
        .iter()
        .map(|&v| view.neighboring_facet(k, v))
        .collect::<Result<_>>()?;
    let neighbor_vertices: Vec<usize> = fv
        .iter()
        .map(|&v| view.neighboring_vertex(k, v))
        .collect::<Result<_>>()?;
    let is_basis = is_lattice_basis(&p.facet_vertices(facet))?;

    report.checked(LemmaId::FacetLevels);
    if at_level(1).len() != d || level_zero.len() > d {
        report.fail(LemmaId::FacetLevels, k, level_zero.clone());
    }

    for (j, &v) in fv.iter().enumerate() {
        let g = neighbor_facets[j];
        let nv = neighbor_vertices[j];
        let gfacet = view.facet(g);
        let shift = gfacet.level(p.vertex(v)) - BigInt::one();

        report.checked(LemmaId::NeighborTransform);
        if shift > -BigInt::one() {
            report.fail(LemmaId::NeighborTransform, k, vec![v]);
        }
        for x in 0..n {
            let px = p.vertex(x);
            let lhs = rat(&gfacet.level(px));
            let rhs = rat(&levels[x]) + rat(&shift) * frame.coordinate(j, px);
            if lhs != rhs {
                report.fail(LemmaId::NeighborTransform, k, vec![v, x]);
            }
        }

        report.checked(LemmaId::DualLowerBound);
        for x in 0..n {
            let px = p.vertex(x);
            let c = frame.coordinate(j, px);
            let bound = rat(&levels[x]) - &one;
            if c < bound || (c == bound && gfacet.level(px) != *gfacet.offset()) {
                report.fail(LemmaId::DualLowerBound, k, vec![v, x]);
            }
        }

        if levels[nv].is_zero() && is_basis {
            report.checked(LemmaId::BasisCoordinate);
            if frame.coordinate(j, p.vertex(nv)) != -one.clone() {
                report.fail(LemmaId::BasisCoordinate, k, vec![v, nv]);
            }
        } else {
            report.vacuous(LemmaId::BasisCoordinate);
        }
    }

    // Boundary lattice points on level 0 lie on some neighbouring facet, and
    // level-0 vertices are neighbouring vertices.
    let zero_points: Vec<&IntVector> = boundary.iter().filter(|x| facet.level(x).is_zero()).collect();
    if zero_points.is_empty() {
        report.vacuous(LemmaId::LevelZeroNeighbors);
    } else {
        report.checked(LemmaId::LevelZeroNeighbors);
        for x in zero_points {
            let on_neighbor = neighbor_facets
                .iter()
                .any(|&g| view.facet(g).level(x) == *view.facet(g).offset());
            if !on_neighbor {
                report.fail(LemmaId::LevelZeroNeighbors, k, p.vertex_index(x).into_iter().collect());
            }
        }
        for &x in &level_zero {
            if !neighbor_vertices.contains(&x) {
                report.fail(LemmaId::LevelZeroNeighbors, k, vec![x]);
            }
        }
    }

    if level_zero.is_empty() {
        report.vacuous(LemmaId::NeighborSign);
        report.vacuous(LemmaId::NeighborSum);
    }
    for &x in &level_zero {
        let px = p.vertex(x);
        report.checked(LemmaId::NeighborSign);
        for (j, &w) in fv.iter().enumerate() {
            if (neighbor_vertices[j] == x) != frame.coordinate(j, px).is_negative() {
                report.fail(LemmaId::NeighborSign, k, vec![x, w]);
            }
        }
        let containing: Vec<usize> = (0..d)
            .filter(|&j| view.facet(neighbor_facets[j]).contains_vertex(x))
            .collect();
        if let [j] = containing[..] {
            report.checked(LemmaId::NeighborSum);
            let w = fv[j];
            let sum = px + p.vertex(w);
            let in_facet = facet.level(&sum) == *facet.offset()
                && p.contains_lattice_point(&sum) != Containment::Outside;
            if p.share_facet(px, p.vertex(w)) || !in_facet {
                report.fail(LemmaId::NeighborSum, k, vec![x, w]);
            }
        } else {
            report.vacuous(LemmaId::NeighborSum);
        }
    }

    let unit = unit_neighbors(view, k)?;
    if unit.len() + 1 >= d {
        report.checked(LemmaId::BasisCriterion);
        if !is_basis {
            report.fail(LemmaId::BasisCriterion, k, unit.clone());
        }
    } else {
        report.vacuous(LemmaId::BasisCriterion);
    }

    let mut opposite_pairs = 0;
    for a in 0..d {
        for b in a + 1..d {
            let (y1, y2) = (neighbor_vertices[a], neighbor_vertices[b]);
            if y1 == y2 || !unit.contains(&fv[a]) || !unit.contains(&fv[b]) {
                continue;
            }
            opposite_pairs += 1;
            report.checked(LemmaId::OppositeExclusion);
            for &x in &level_minus_one {
                let px = p.vertex(x);
                if frame.coordinate(a, px) == -one.clone() && frame.coordinate(b, px) == -one.clone() {
                    report.fail(LemmaId::OppositeExclusion, k, vec![fv[a], fv[b], x]);
                }
            }
        }
    }
    if opposite_pairs == 0 {
        report.vacuous(LemmaId::OppositeExclusion);
    }

    // Both conclusions need every lattice point of the facet to be a vertex
    // and exactly d vertices on level 0.
    let facet_points = boundary.iter().filter(|x| facet.level(x) == *facet.offset()).count();
    if facet_points == d && level_zero.len() == d {
        report.checked(LemmaId::LevelZeroDifferences);
        report.checked(LemmaId::LevelMinusOne);
        let mut covered: Vec<usize> = Vec::new();
        for &y in fv {
            let diffs: Vec<usize> = fv
                .iter()
                .filter_map(|&z| p.vertex_index(&(p.vertex(z) - p.vertex(y))))
                .filter(|i| levels[*i].is_zero())
                .collect();
            if diffs.is_empty() {
                report.fail(LemmaId::LevelZeroDifferences, k, vec![y]);
            }
            covered.extend(diffs);
        }
        for &x in &level_zero {
            if !covered.contains(&x) {
                report.fail(LemmaId::LevelZeroDifferences, k, vec![x]);
            }
        }
        if !is_basis {
            report.fail(LemmaId::LevelZeroDifferences, k, fv.to_vec());
        }
        for &x in &level_minus_one {
            let neg = -p.vertex(x);
            if !p.vertex_index(&neg).is_some_and(|i| facet.contains_vertex(i)) {
                report.fail(LemmaId::LevelMinusOne, k, vec![x]);
            }
        }
    } else {
        report.vacuous(LemmaId::LevelZeroDifferences);
        report.vacuous(LemmaId::LevelMinusOne);
    }
    Ok(())
}

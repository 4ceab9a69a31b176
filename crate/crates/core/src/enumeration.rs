//! Exhaustive search for reflexive polygons up to unimodular equivalence.
//!
//! A polygon containing the origin in its interior is reflexive exactly when
//! the origin is its only interior lattice point. The search grows vertex
//! sets one lattice point at a time inside a box, pruning as soon as a
//! nonzero interior lattice point appears, since hulls only grow.

use std::collections::BTreeMap;

use crate::analysis::{nu_kind, NuKind};
use crate::canonical::{normal_form, NormalForm};
use crate::constructions::NamedPolytope;
use crate::error::{Error, Result};
use crate::lattice::IntVector;
use crate::polytope::LatticePolytope;

/// Number of reflexive polygon classes.
pub const POLYGON_CLASSES: usize = 16;

/// Half-width of the default search box.
pub const DEFAULT_RADIUS: i64 = 3;

#[derive(Clone, Debug)]
pub struct PolygonClass {
    pub representative: LatticePolytope,
    pub normal_form: NormalForm,
    pub vertex_count: usize,
    pub smooth: bool,
    pub nu_kind: NuKind,
}

impl PolygonClass {
    fn new(p: &LatticePolytope) -> Result<Self> {
        let normal_form = normal_form(p);
        let representative = normal_form.to_polytope()?;
        Ok(PolygonClass {
            vertex_count: representative.num_vertices(),
            smooth: representative.is_smooth_fano(),
            nu_kind: nu_kind(&representative),
            representative,
            normal_form,
        })
    }
}

type Pt = (i64, i64);

fn cross(o: Pt, a: Pt, b: Pt) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Counter-clockwise strict hull (collinear points dropped).
fn hull(points: &[Pt]) -> Vec<Pt> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Pt> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Pt> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn strictly_inside(h: &[Pt], x: Pt) -> bool {
    (0..h.len()).all(|i| cross(h[i], h[(i + 1) % h.len()], x) > 0)
}

/// Interior lattice points of a 2-dimensional hull.
fn interior_points(h: &[Pt]) -> Vec<Pt> {
    let (x0, x1) = (h.iter().map(|p| p.0).min().unwrap(), h.iter().map(|p| p.0).max().unwrap());
    let (y0, y1) = (h.iter().map(|p| p.1).min().unwrap(), h.iter().map(|p| p.1).max().unwrap());
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            if strictly_inside(h, (x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

fn is_full(h: &[Pt]) -> bool {
    h.len() >= 3
}

struct Search {
    candidates: Vec<Pt>,
    found: Vec<Vec<Pt>>,
}

impl Search {
    fn grow(&mut self, chosen: &mut Vec<Pt>, start: usize) {
        for i in start..self.candidates.len() {
            let q = self.candidates[i];
            chosen.push(q);
            let h = hull(chosen);
            let keep = if h.len() != chosen.len() {
                // Some chosen point is no longer a vertex.
                false
            } else if is_full(&h) {
                let inner = interior_points(&h);
                if inner.iter().any(|&p| p != (0, 0)) {
                    false
                } else {
                    if inner.len() == 1 {
                        self.found.push(h.clone());
                    }
                    true
                }
            } else {
                // Two points, or collinear points that all stayed vertices.
                chosen.len() <= 2
            };
            if keep {
                self.grow(chosen, i + 1);
            }
            chosen.pop();
        }
    }
}

/// All reflexive polygons with vertices in `[-radius, radius]^2`, one per
/// unimodular class, sorted by vertex count and then normal form.
pub fn enumerate_in_box(radius: i64) -> Result<Vec<PolygonClass>> {
    if radius < 1 {
        return Err(Error::Domain(format!("search radius must be positive, got {radius}")));
    }
    let mut candidates = Vec::new();
    for x in -radius..=radius {
        for y in -radius..=radius {
            if (x, y) != (0, 0) {
                candidates.push((x, y));
            }
        }
    }
    let mut search = Search { candidates, found: Vec::new() };
    search.grow(&mut Vec::new(), 0);

    let mut classes: BTreeMap<(usize, NormalForm), PolygonClass> = BTreeMap::new();
    for h in &search.found {
        let vertices = h.iter().map(|&(x, y)| IntVector::from_i64s(&[x, y])).collect();
        let p = LatticePolytope::new(vertices)?;
        let nf = normal_form(&p);
        let key = (p.num_vertices(), nf);
        if !classes.contains_key(&key) {
            let class = PolygonClass::new(&p)?;
            if !class.representative.is_reflexive() {
                return Err(Error::Enumeration(format!("{p} passed the search but is not reflexive")));
            }
            classes.insert(key, class);
        }
    }
    Ok(classes.into_values().collect())
}

/// The reflexive polygon classes from the default box, checked to number 16.
pub fn enumerate_reflexive_polygons() -> Result<Vec<PolygonClass>> {
    let classes = enumerate_in_box(DEFAULT_RADIUS)?;
    if classes.len() != POLYGON_CLASSES {
        return Err(Error::Enumeration(format!(
            "found {} reflexive polygon classes, expected {POLYGON_CLASSES}",
            classes.len()
        )));
    }
    Ok(classes)
}

/// The three five-vertex classes, told apart by smoothness and by where the
/// vertex sum lies.
#[derive(Clone, Debug)]
pub struct FiveVertexTaxonomy {
    pub tv2: PolygonClass,
    pub e1: PolygonClass,
    pub e2: PolygonClass,
}

impl FiveVertexTaxonomy {
    pub fn get(&self, name: NamedPolytope) -> Option<&PolygonClass> {
        match name {
            NamedPolytope::TV2 => Some(&self.tv2),
            NamedPolytope::E1 => Some(&self.e1),
            NamedPolytope::E2 => Some(&self.e2),
            _ => None,
        }
    }
}

pub fn five_vertex_taxonomy(classes: &[PolygonClass]) -> Result<FiveVertexTaxonomy> {
    let five: Vec<&PolygonClass> = classes.iter().filter(|c| c.vertex_count == 5).collect();
    if five.len() != 3 {
        return Err(Error::Taxonomy(format!("{} five-vertex classes instead of 3", five.len())));
    }
    let pick = |pred: &dyn Fn(&PolygonClass) -> bool, name: &str| -> Result<PolygonClass> {
        let hits: Vec<&&PolygonClass> = five.iter().filter(|c| pred(c)).collect();
        match hits.as_slice() {
            [one] => Ok((**one).clone()),
            _ => Err(Error::Taxonomy(format!("{} classes qualify as {name}", hits.len()))),
        }
    };
    let tv2 = pick(&|c| c.smooth, "tv2")?;
    let e2 = pick(&|c| !c.smooth && c.nu_kind == NuKind::Zero, "e2")?;
    let e1 = pick(&|c| !c.smooth && c.nu_kind == NuKind::BoundaryNonVertex, "e1")?;
    Ok(FiveVertexTaxonomy { tv2, e1, e2 })
}

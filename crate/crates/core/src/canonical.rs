//! Unimodular-equivalence testing through a canonical normal form.
//!
//! The vertex-facet pairing matrix `<a_F, v>` is invariant under lattice
//! automorphisms. We search vertex orders that are canonical for this matrix
//! (colour refinement on the bipartite facet/vertex structure, individualising
//! one vertex at a time), bring the vertex matrix into Hermite normal form for
//! every leaf order and keep the lexicographically largest result. Two leaves
//! with the same Hermite form differ by a lattice automorphism; those are
//! collected and used to skip symmetric branches.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;

use crate::error::Result;
use crate::lattice::IntMatrix;
use crate::polytope::LatticePolytope;

#[derive(Clone, Debug)]
pub struct NormalForm {
    matrix: IntMatrix,
    /// The vertex order (indices into the input polytope) realising the form.
    vertex_order: Vec<usize>,
}

impl NormalForm {
    /// The canonical `d x n` matrix; columns are vertices.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn vertex_order(&self) -> &[usize] {
        &self.vertex_order
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn num_vertices(&self) -> usize {
        self.matrix.ncols()
    }

    /// The canonical representative: the polytope whose vertices are the
    /// columns of the matrix.
    pub fn to_polytope(&self) -> Result<LatticePolytope> {
        LatticePolytope::new((0..self.matrix.ncols()).map(|c| self.matrix.column(c)).collect())
    }

    /// `d n` header followed by `d` rows of `n` integers.
    pub fn to_text(&self) -> String {
        format!("{} {}\n{}", self.dim(), self.num_vertices(), self.matrix)
    }
}

impl PartialEq for NormalForm {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for NormalForm {}

impl Hash for NormalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dim(), self.num_vertices(), &self.matrix).cmp(&(
            other.dim(),
            other.num_vertices(),
            &other.matrix,
        ))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Pairing values replaced by their rank among the distinct values, which is
/// itself invariant.
struct Pairing {
    nf: usize,
    nv: usize,
    w: Vec<u32>,
}

impl Pairing {
    fn new(p: &LatticePolytope) -> Self {
        let nf = p.facets().len();
        let nv = p.num_vertices();
        let raw: Vec<BigInt> = p
            .facets()
            .iter()
            .flat_map(|f| p.vertices().iter().map(|v| f.level(v)))
            .collect();
        let mut distinct = raw.clone();
        distinct.sort();
        distinct.dedup();
        let w = raw
            .iter()
            .map(|x| distinct.binary_search(x).expect("value present") as u32)
            .collect();
        Pairing { nf, nv, w }
    }

    fn at(&self, f: usize, v: usize) -> u32 {
        self.w[f * self.nv + v]
    }
}

fn relabel<S: Ord + Clone>(sigs: Vec<S>) -> (Vec<u32>, usize) {
    let mut sorted = sigs.clone();
    sorted.sort();
    sorted.dedup();
    let labels = sigs
        .iter()
        .map(|s| sorted.binary_search(s).expect("signature present") as u32)
        .collect();
    (labels, sorted.len())
}

fn count_classes(c: &[u32]) -> usize {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Colour refinement to an equitable partition. New colours sort first by the
/// old colour, so refinement never reorders existing cells.
fn refine(pairing: &Pairing, vc: &mut Vec<u32>, fc: &mut Vec<u32>) {
    let mut counts = (count_classes(vc), count_classes(fc));
    loop {
        let fsigs: Vec<(u32, Vec<(u32, u32)>)> = (0..pairing.nf)
            .map(|f| {
                let mut s: Vec<(u32, u32)> = (0..pairing.nv).map(|v| (vc[v], pairing.at(f, v))).collect();
                s.sort_unstable();
                (fc[f], s)
            })
            .collect();
        let (new_fc, nfc) = relabel(fsigs);
        *fc = new_fc;
        let vsigs: Vec<(u32, Vec<(u32, u32)>)> = (0..pairing.nv)
            .map(|v| {
                let mut s: Vec<(u32, u32)> = (0..pairing.nf).map(|f| (fc[f], pairing.at(f, v))).collect();
                s.sort_unstable();
                (vc[v], s)
            })
            .collect();
        let (new_vc, nvc) = relabel(vsigs);
        *vc = new_vc;
        if (nvc, nfc) == counts {
            return;
        }
        counts = (nvc, nfc);
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

struct Search<'a> {
    polytope: &'a LatticePolytope,
    pairing: Pairing,
    best: Option<(IntMatrix, Vec<usize>)>,
    leaves: HashMap<IntMatrix, Vec<usize>>,
    /// Lattice automorphisms found so far, as vertex permutations.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, vc: &[u32]) {
        let mut order: Vec<usize> = (0..self.pairing.nv).collect();
        order.sort_by_key(|&v| vc[v]);
        let d = self.polytope.dim();
        let n = order.len();
        let mut data = Vec::with_capacity(d * n);
        for r in 0..d {
            for &v in &order {
                data.push(self.polytope.vertex(v)[r].clone());
            }
        }
        let h = IntMatrix::new(d, n, data).expect("nonempty vertex matrix").hnf();
        if let Some(prev) = self.leaves.get(&h) {
            let mut perm = vec![0; n];
            for (a, b) in prev.iter().zip(&order) {
                perm[*a] = *b;
            }
            self.automorphisms.push(perm);
            return;
        }
        if self.best.as_ref().is_none_or(|(b, _)| h > *b) {
            self.best = Some((h.clone(), order.clone()));
        }
        self.leaves.insert(h, order);
    }

    fn same_orbit(&self, path: &[usize], a: usize, b: usize) -> bool {
        let mut uf = UnionFind::new(self.pairing.nv);
        for g in &self.automorphisms {
            if path.iter().all(|&x| g[x] == x) {
                for (x, &gx) in g.iter().enumerate() {
                    uf.union(x, gx);
                }
            }
        }
        uf.find(a) == uf.find(b)
    }

    fn descend(&mut self, mut vc: Vec<u32>, mut fc: Vec<u32>, path: &mut Vec<usize>) {
        refine(&self.pairing, &mut vc, &mut fc);
        let mut cells: HashMap<u32, Vec<usize>> = HashMap::new();
        for (v, &c) in vc.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        let target = cells
            .iter()
            .filter(|(_, members)| members.len() > 1)
            .min_by_key(|(&c, _)| c)
            .map(|(_, members)| members.clone());
        let Some(target) = target else {
            self.leaf(&vc);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if explored.iter().any(|&u| self.same_orbit(path, u, v)) {
                continue;
            }
            explored.push(v);
            // Doubling keeps the order of existing cells; v goes in front of
            // the rest of its cell.
            let child: Vec<u32> = vc
                .iter()
                .enumerate()
                .map(|(u, &c)| 2 * c + u32::from(u != v))
                .collect();
            path.push(v);
            self.descend(child, fc.clone(), path);
            path.pop();
        }
    }
}

pub fn normal_form(p: &LatticePolytope) -> NormalForm {
    let pairing = Pairing::new(p);
    let (nv, nf) = (pairing.nv, pairing.nf);
    let mut search = Search {
        polytope: p,
        pairing,
        best: None,
        leaves: HashMap::new(),
        automorphisms: Vec::new(),
    };
    search.descend(vec![0; nv], vec![0; nf], &mut Vec::new());
    let (matrix, vertex_order) = search.best.expect("search reaches at least one leaf");
    NormalForm { matrix, vertex_order }
}

pub fn is_isomorphic(p: &LatticePolytope, q: &LatticePolytope) -> bool {
    p.dim() == q.dim()
        && p.num_vertices() == q.num_vertices()
        && p.facets().len() == q.facets().len()
        && normal_form(p) == normal_form(q)
}

/// One representative per isomorphism class, first occurrence kept, input
/// order otherwise preserved.
pub fn dedupe(polytopes: Vec<LatticePolytope>) -> Vec<LatticePolytope> {
    let mut seen = std::collections::HashSet::new();
    polytopes
        .into_iter()
        .filter(|p| seen.insert(normal_form(p)))
        .collect()
}

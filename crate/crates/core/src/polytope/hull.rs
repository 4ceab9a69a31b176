//! Exact facet enumeration by gift wrapping in homogeneous coordinates.
//!
//! Points `v` are lifted to `(v, 1)`; a facet is a primitive integral
//! functional `f` with `f(v, 1) <= 0` on every point and a tight set of
//! affine rank `d`. From each facet we rotate around every ridge to reach
//! the adjacent facet, so the work is proportional to the number of facets
//! rather than to the number of `d`-subsets.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{dot, integer_kernel, rank_of_rows, IntVector};

#[derive(Clone, Debug)]
pub(crate) struct RawFacet {
    pub normal: IntVector,
    pub offset: BigInt,
    pub tight: Vec<usize>,
}

fn primitive(mut f: Vec<BigInt>) -> Vec<BigInt> {
    let g = f.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in f.iter_mut() {
            *x /= &g;
        }
    }
    f
}

struct Lifted {
    points: Vec<Vec<BigInt>>,
}

impl Lifted {
    fn eval(&self, f: &[BigInt], i: usize) -> BigInt {
        dot(f, &self.points[i])
    }

    fn tight(&self, f: &[BigInt]) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| self.eval(f, i).is_zero()).collect()
    }

    fn rows(&self, idx: &[usize]) -> Vec<IntVector> {
        idx.iter().map(|&i| IntVector::new(self.points[i].clone())).collect()
    }

    /// Rotate the valid functional `f` towards `g` (which must be positive on
    /// some point) as far as validity allows.
    fn rotate(&self, f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
        // Minimise -f(x) / g(x) over points with g(x) > 0.
        let mut best: Option<(BigInt, BigInt)> = None;
        for i in 0..self.points.len() {
            let gx = self.eval(g, i);
            if !gx.is_positive() {
                continue;
            }
            let p = -self.eval(f, i);
            let better = match &best {
                None => true,
                Some((bp, bq)) => &p * bq < bp * &gx,
            };
            if better {
                best = Some((p, gx));
            }
        }
        let (p, q) = best?;
        let rotated = f.iter().zip(g).map(|(a, b)| &q * a + &p * b).collect();
        Some(primitive(rotated))
    }

    /// The facet adjacent to `f` across the ridge where `f` and `g` both
    /// vanish, given `g < 0` on the rest of the facet of `f`. The result is
    /// `a f + b g` with `b > 0` and `a` of either sign.
    fn wrap(&self, f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
        // Maximise g(x) / -f(x) over points off the facet.
        let mut best: Option<(BigInt, BigInt)> = None;
        for i in 0..self.points.len() {
            let minus_f = -self.eval(f, i);
            if !minus_f.is_positive() {
                continue;
            }
            let gx = self.eval(g, i);
            let better = match &best {
                None => true,
                Some((ba, bb)) => &gx * bb > ba * &minus_f,
            };
            if better {
                best = Some((gx, minus_f));
            }
        }
        let (a, b) = best?;
        let wrapped = f.iter().zip(g).map(|(x, y)| &a * x + &b * y).collect();
        Some(primitive(wrapped))
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Ridges of a non-simplicial facet, found as the facets of the facet itself:
/// centre the tight points at their barycentre, project injectively to
/// `dim - 1` coordinates and recurse.
fn facet_ridges(lifted: &Lifted, all_tight: &[usize], dim: usize) -> Result<Vec<Vec<usize>>> {
    // Repeated points would make the recursion degenerate.
    let mut tight: Vec<usize> = Vec::with_capacity(all_tight.len());
    for &i in all_tight {
        if !tight.iter().any(|&j| lifted.points[j] == lifted.points[i]) {
            tight.push(i);
        }
    }
    let m = BigInt::from(tight.len());
    let mut sum = vec![BigInt::zero(); dim];
    for &i in &tight {
        for (s, x) in sum.iter_mut().zip(&lifted.points[i][..dim]) {
            *s += x;
        }
    }
    let centred: Vec<Vec<BigInt>> = tight
        .iter()
        .map(|&i| lifted.points[i][..dim].iter().zip(&sum).map(|(x, s)| &m * x - s).collect())
        .collect();
    let mut cols: Vec<usize> = Vec::with_capacity(dim - 1);
    for c in 0..dim {
        cols.push(c);
        let sub: Vec<Vec<BigInt>> = centred.iter().map(|z| cols.iter().map(|&k| z[k].clone()).collect()).collect();
        if rank_of_rows(&sub) < cols.len() {
            cols.pop();
        }
        if cols.len() == dim - 1 {
            break;
        }
    }
    let projected: Vec<IntVector> = centred
        .iter()
        .map(|z| IntVector::new(cols.iter().map(|&k| z[k].clone()).collect()))
        .collect();
    Ok(compute_facets(&projected)?
        .into_iter()
        .map(|r| {
            all_tight
                .iter()
                .copied()
                .filter(|&i| r.tight.iter().any(|&t| lifted.points[tight[t]] == lifted.points[i]))
                .collect()
        })
        .collect())
}

fn initial_facet(lifted: &Lifted, dim: usize) -> Result<Vec<BigInt>> {
    let max0 = lifted
        .points
        .iter()
        .map(|p| p[0].clone())
        .max()
        .expect("nonempty point set");
    let mut f = vec![BigInt::zero(); dim + 1];
    f[0] = BigInt::one();
    f[dim] = -max0;
    loop {
        let tight = lifted.tight(&f);
        let rows = lifted.rows(&tight);
        let raw: Vec<Vec<BigInt>> = rows.iter().map(|r| r.coords().to_vec()).collect();
        if rank_of_rows(&raw) == dim {
            return Ok(f);
        }
        let kernel = integer_kernel(&rows, dim + 1);
        let g = kernel
            .into_iter()
            .map(IntVector::into_coords)
            .find(|g| rank_of_rows(&[f.clone(), g.clone()]) == 2)
            .ok_or_else(|| Error::Internal("no rotation direction for initial facet".into()))?;
        let g = orient_positive(lifted, g)
            .ok_or_else(|| Error::Degenerate("points lie in a hyperplane".into()))?;
        f = lifted
            .rotate(&f, &g)
            .ok_or_else(|| Error::Internal("rotation found no bounding point".into()))?;
    }
}

/// Flip `g` so that it is positive on at least one point; `None` if it
/// vanishes everywhere.
fn orient_positive(lifted: &Lifted, g: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let mut has_neg = false;
    for i in 0..lifted.points.len() {
        let v = lifted.eval(&g, i);
        if v.is_positive() {
            return Some(g);
        }
        has_neg |= v.is_negative();
    }
    has_neg.then(|| g.into_iter().map(|x| -x).collect())
}

/// All facets of `conv(points)`. Fails if the points are not full-dimensional
/// or the origin is not in the interior.
pub(crate) fn compute_facets(points: &[IntVector]) -> Result<Vec<RawFacet>> {
    let dim = points.first().map(IntVector::dim).unwrap_or(0);
    if dim == 0 {
        return Err(Error::Degenerate("empty point set or zero dimension".into()));
    }
    if points.iter().any(|p| p.dim() != dim) {
        return Err(Error::Dimension("points of mixed dimension".into()));
    }
    let lifted = Lifted {
        points: points
            .iter()
            .map(|p| {
                let mut v = p.coords().to_vec();
                v.push(BigInt::one());
                v
            })
            .collect(),
    };
    if rank_of_rows(&lifted.points) != dim + 1 {
        return Err(Error::Degenerate(format!(
            "points do not span a {dim}-dimensional polytope"
        )));
    }

    let start = initial_facet(&lifted, dim)?;
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut facets = Vec::new();
    seen.insert(start.clone());
    queue.push_back(start);

    while let Some(f) = queue.pop_front() {
        let tight = lifted.tight(&f);
        let ridges = if tight.len() == dim {
            (0..dim)
                .map(|skip| {
                    tight
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &i)| i)
                        .collect()
                })
                .collect()
        } else {
            facet_ridges(&lifted, &tight, dim)?
        };
        for ridge in ridges {
            let ridge_rows = lifted.rows(&ridge);
            if tight.len() != dim {
                let raw: Vec<Vec<BigInt>> = ridge_rows.iter().map(|r| r.coords().to_vec()).collect();
                if rank_of_rows(&raw) != dim - 1 {
                    continue;
                }
            }
            let kernel = integer_kernel(&ridge_rows, dim + 1);
            let Some(g) = kernel
                .into_iter()
                .map(IntVector::into_coords)
                .find(|g| tight.iter().any(|&i| !lifted.eval(g, i).is_zero()))
            else {
                return Err(Error::Internal("ridge kernel vanishes on its facet".into()));
            };
            let (mut pos, mut neg) = (false, false);
            for &i in &tight {
                let v = lifted.eval(&g, i);
                pos |= v.is_positive();
                neg |= v.is_negative();
            }
            if pos && neg {
                // The subset cuts through the facet; not a ridge.
                continue;
            }
            let g: Vec<BigInt> = if pos { g.into_iter().map(|x| -x).collect() } else { g };
            let next = lifted
                .wrap(&f, &g)
                .ok_or_else(|| Error::Internal("no facet beyond a ridge".into()))?;
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        facets.push(f);
    }

    let mut out = Vec::with_capacity(facets.len());
    for f in facets {
        for i in 0..lifted.points.len() {
            if lifted.eval(&f, i).is_positive() {
                return Err(Error::Internal(format!("facet {f:?} violated by point {i}")));
            }
        }
        let tight = lifted.tight(&f);
        let offset = -f[dim].clone();
        if !offset.is_positive() {
            return Err(Error::Domain("origin is not in the interior".into()));
        }
        out.push(RawFacet {
            normal: IntVector::new(f[..dim].to_vec()),
            offset,
            tight,
        });
    }
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    Ok(out)
}

/// Independent brute force: every affinely independent `d`-subset whose
/// hyperplane supports the point set. Exposed for tests and cross-checks.
pub fn brute_force_facets(points: &[IntVector]) -> Vec<(IntVector, BigInt, Vec<usize>)> {
    let dim = points.first().map(IntVector::dim).unwrap_or(0);
    let lifted: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut v = p.coords().to_vec();
            v.push(BigInt::one());
            v
        })
        .collect();
    let all: Vec<usize> = (0..points.len()).collect();
    let mut found: HashSet<Vec<BigInt>> = HashSet::new();
    let mut out = Vec::new();
    for subset in combinations(&all, dim) {
        let rows: Vec<IntVector> = subset.iter().map(|&i| IntVector::new(lifted[i].clone())).collect();
        let kernel = integer_kernel(&rows, dim + 1);
        if kernel.len() != 1 {
            continue;
        }
        let mut f = kernel[0].coords().to_vec();
        let vals: Vec<BigInt> = lifted.iter().map(|p| dot(&f, p)).collect();
        let pos = vals.iter().any(Signed::is_positive);
        let neg = vals.iter().any(Signed::is_negative);
        if pos && neg {
            continue;
        }
        if pos {
            f = f.into_iter().map(|x| -x).collect();
        }
        let f = primitive(f);
        if found.insert(f.clone()) {
            let tight = (0..lifted.len()).filter(|&i| dot(&f, &lifted[i]).is_zero()).collect();
            out.push((IntVector::new(f[..dim].to_vec()), -f[dim].clone(), tight));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

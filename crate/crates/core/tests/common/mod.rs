//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use reflexive::constructions::{classification_members, construct, NamedPolytope};
use reflexive::enumeration::enumerate_reflexive_polygons;
use reflexive::{Containment, IntMatrix, IntVector, LatticePolytope};

pub fn v(c: &[i64]) -> IntVector {
    IntVector::from_i64s(c)
}

/// The 16 polygon classes, Q3, Q3', and every classification member with
/// `4 <= d <= max_dim`.
pub fn corpus(max_dim: usize) -> Vec<(String, LatticePolytope)> {
    let mut out = Vec::new();
    for (k, c) in enumerate_reflexive_polygons().unwrap().into_iter().enumerate() {
        out.push((format!("polygon-{}", k + 1), c.representative));
    }
    out.push(("q3".into(), construct(NamedPolytope::Q3).unwrap()));
    out.push(("q3p".into(), construct(NamedPolytope::Q3P).unwrap()));
    for d in 4..=max_dim {
        for m in classification_members(d).unwrap() {
            out.push((m.label(), m.polytope));
        }
    }
    out
}

/// A random unimodular matrix: a product of elementary row operations with
/// small multipliers, a row permutation and sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, d: usize, steps: usize) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    if d > 1 {
        for _ in 0..steps {
            let i = rng.gen_range(0..d);
            let mut j = rng.gen_range(0..d - 1);
            if j >= i {
                j += 1;
            }
            let k: i64 = rng.gen_range(-2..=2);
            for c in 0..d {
                rows[i][c] += k * rows[j][c];
            }
        }
        for i in (1..d).rev() {
            rows.swap(i, rng.gen_range(0..=i));
        }
    }
    for row in rows.iter_mut() {
        if rng.gen_bool(0.5) {
            row.iter_mut().for_each(|x| *x = -*x);
        }
    }
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    IntMatrix::from_i64_rows(&refs).unwrap()
}

/// Determinant by cofactor expansion, for cross-checking on tiny matrices.
pub fn cofactor_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Rational inverse by Gauss-Jordan elimination.
pub fn rational_inverse(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        a[col].iter_mut().for_each(|x| *x = &*x / &p);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Decides unimodular equivalence by trying every ordered image of one
/// fixed basis of vertices.
pub fn brute_force_isomorphic(p: &LatticePolytope, q: &LatticePolytope) -> bool {
    if p.dim() != q.dim() || p.num_vertices() != q.num_vertices() {
        return false;
    }
    let d = p.dim();
    // Greedy choice of d linearly independent vertices of p.
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..p.num_vertices() {
        basis.push(i);
        let rows: Vec<IntVector> = basis.iter().map(|&k| p.vertex(k).clone()).collect();
        if IntMatrix::from_rows(&rows).unwrap().rank() < rows.len() {
            basis.pop();
        }
        if basis.len() == d {
            break;
        }
    }
    // Columns of B are the basis vertices; M B = T gives M = T B^-1.
    let b_cols: Vec<Vec<BigInt>> = (0..d)
        .map(|r| basis.iter().map(|&k| p.vertex(k)[r].clone()).collect())
        .collect();
    let b_inv = rational_inverse(&b_cols).expect("independent basis");
    let target: std::collections::HashSet<IntVector> = q.vertices().iter().cloned().collect();

    let n = q.num_vertices();
    let mut tuple = vec![0usize; d];
    loop {
        let distinct = (0..d).all(|i| (0..i).all(|j| tuple[i] != tuple[j]));
        if distinct {
            let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(d);
            let mut integral = true;
            for r in 0..d {
                let mut row = Vec::with_capacity(d);
                for c in 0..d {
                    let mut s = BigRational::zero();
                    for k in 0..d {
                        s += BigRational::from_integer(q.vertex(tuple[k])[r].clone()) * &b_inv[k][c];
                    }
                    if !s.is_integer() {
                        integral = false;
                    }
                    row.push(s.to_integer());
                }
                m.push(row);
            }
            if integral && cofactor_det(&m).abs().is_one() {
                let maps_onto = p.vertices().iter().all(|x| {
                    let image = IntVector::new(
                        (0..d)
                            .map(|r| (0..d).map(|c| &m[r][c] * &x[c]).sum())
                            .collect(),
                    );
                    target.contains(&image)
                });
                if maps_onto {
                    return true;
                }
            }
        }
        let mut k = d;
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < n {
                break;
            }
            tuple[k] = 0;
        }
    }
}

/// Lattice points by scanning the coordinate bounding box of the vertices.
pub fn box_lattice_points(p: &LatticePolytope) -> (Vec<IntVector>, Vec<IntVector>) {
    let d = p.dim();
    let lo: Vec<i64> = (0..d)
        .map(|i| p.vertices().iter().map(|x| i64::try_from(&x[i]).unwrap()).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|i| p.vertices().iter().map(|x| i64::try_from(&x[i]).unwrap()).max().unwrap())
        .collect();
    let (mut interior, mut boundary) = (Vec::new(), Vec::new());
    let mut cur = lo.clone();
    loop {
        let x = IntVector::from_i64s(&cur);
        match p.contains_lattice_point(&x) {
            Containment::Interior => interior.push(x),
            Containment::Boundary(_) => boundary.push(x),
            Containment::Outside => {}
        }
        let mut k = d;
        loop {
            if k == 0 {
                interior.sort();
                boundary.sort();
                return (interior, boundary);
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

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Fraction-free Gaussian elimination determinant.
pub fn bareiss_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Facets as `(primitive outer normal, offset, sorted tight indices)` from
/// all `d`-subsets of the points, via cofactors of the lifted matrix.
pub fn subset_facets(points: &[IntVector]) -> Vec<(IntVector, BigInt, Vec<usize>)> {
    use num_integer::Integer;
    let d = points[0].dim();
    let n = points.len();
    let lifted: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| p.coords().iter().cloned().chain(std::iter::once(BigInt::one())).collect())
        .collect();
    let mut seen = std::collections::BTreeMap::new();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        // Generalized cross product of the d lifted rows.
        let mut f: Vec<BigInt> = (0..=d)
            .map(|skip| {
                let minor: Vec<Vec<BigInt>> = subset
                    .iter()
                    .map(|&i| (0..=d).filter(|&c| c != skip).map(|c| lifted[i][c].clone()).collect())
                    .collect();
                let det = bareiss_det(&minor);
                if skip % 2 == 0 { det } else { -det }
            })
            .collect();
        if f.iter().any(|x| !x.is_zero()) {
            let vals: Vec<BigInt> = lifted
                .iter()
                .map(|p| p.iter().zip(&f).map(|(a, b)| a * b).sum())
                .collect();
            let pos = vals.iter().any(|x| x.is_positive());
            let neg = vals.iter().any(|x| x.is_negative());
            if !(pos && neg) {
                if pos {
                    f.iter_mut().for_each(|x| *x = -x.clone());
                }
                let g = f.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
                let f: Vec<BigInt> = f.iter().map(|x| x / &g).collect();
                let tight: Vec<usize> = (0..n).filter(|&i| vals[i].is_zero()).collect();
                let normal = IntVector::new(f[..d].to_vec());
                let offset = -f[d].clone();
                seen.entry(normal).or_insert((offset, tight));
            }
        }
        // Next d-subset in lexicographic order.
        let mut k = d;
        loop {
            if k == 0 {
                return seen.into_iter().map(|(a, (c, t))| (a, c, t)).collect();
            }
            k -= 1;
            if subset[k] < n - d + k {
                subset[k] += 1;
                for j in k + 1..d {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Proptest settings for integration tests, which have no `lib.rs` next to
/// them for the default regression files.
pub fn proptest_config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        ..Default::default()
    }
}

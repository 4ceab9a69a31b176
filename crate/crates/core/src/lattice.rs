//! Exact integer and rational linear algebra.
//!
//! Everything here works over [`BigInt`] and [`BigRational`]; nothing in the
//! crate touches floating point.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A point of the lattice `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        IntVector(vec![BigInt::zero(); dim])
    }

    /// The `i`-th standard basis vector of `Z^dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = BigInt::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    /// gcd of the entries; zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Concatenation `(self, other)` in `Z^(d1 + d2)`.
    pub fn concat(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn to_rational(&self) -> RatVector {
        RatVector(self.0.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector::from_i64s(&v)
    }
}

/// A vector of exact rationals. `BigRational` keeps every entry in lowest
/// terms with a positive denominator, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RatVector(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dot_int(&self, v: &IntVector) -> BigRational {
        debug_assert_eq!(self.dim(), v.dim());
        self.0
            .iter()
            .zip(v.coords())
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_integral(&self) -> Option<IntVector> {
        self.is_integral()
            .then(|| IntVector(self.0.iter().map(|c| c.to_integer()).collect()))
    }
}

impl Index<usize> for RatVector {
    type Output = BigRational;
    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(nrows: usize, ncols: usize, data: Vec<BigInt>) -> Result<Self> {
        if nrows == 0 || ncols == 0 {
            return Err(Error::Dimension(format!("empty {nrows}x{ncols} matrix")));
        }
        if data.len() != nrows * ncols {
            return Err(Error::Dimension(format!(
                "{} entries for a {nrows}x{ncols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { nrows, ncols, data })
    }

    pub fn from_rows(rows: &[IntVector]) -> Result<Self> {
        let ncols = rows.first().map_or(0, IntVector::dim);
        if rows.iter().any(|r| r.dim() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.coords().iter().cloned()).collect();
        Self::new(rows.len(), ncols, data)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<IntVector> = rows.iter().map(|r| IntVector::from_i64s(r)).collect();
        Self::from_rows(&rows)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix {
            nrows: n,
            ncols: n,
            data: vec![BigInt::zero(); n * n],
        };
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::identity(n);
        for (i, &e) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(e);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.ncols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn row_vector(&self, r: usize) -> IntVector {
        IntVector::new(self.row(r).to_vec())
    }

    pub fn column(&self, c: usize) -> IntVector {
        IntVector::new((0..self.nrows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn rows(&self) -> Vec<IntVector> {
        (0..self.nrows).map(|r| self.row_vector(r)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.ncols {
            for r in 0..self.nrows {
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            data,
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut data = Vec::with_capacity(self.nrows * other.ncols);
        for r in 0..self.nrows {
            for c in 0..other.ncols {
                let mut acc = BigInt::zero();
                for k in 0..self.ncols {
                    acc += self.get(r, k) * other.get(k, c);
                }
                data.push(acc);
            }
        }
        Ok(IntMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            data,
        })
    }

    pub fn mul_vector(&self, v: &IntVector) -> Result<IntVector> {
        if self.ncols != v.dim() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.nrows,
                self.ncols,
                v.dim()
            )));
        }
        Ok(IntVector::new(
            (0..self.nrows).map(|r| dot(self.row(r), v.coords())).collect(),
        ))
    }

    fn to_rows_vec(&self) -> Vec<Vec<BigInt>> {
        (0..self.nrows).map(|r| self.row(r).to_vec()).collect()
    }

    fn from_rows_vec(rows: Vec<Vec<BigInt>>, ncols: usize) -> IntMatrix {
        let nrows = rows.len();
        IntMatrix {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Exact determinant (Bareiss fraction-free elimination).
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.nrows, self.ncols
            )));
        }
        Ok(bareiss_det(self.to_rows_vec()))
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.to_rows_vec())
    }

    /// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
    /// `H = U * self` in row echelon form, pivots positive and entries above
    /// each pivot reduced into `[0, pivot)`.
    pub fn hermite_normal_form(&self) -> (IntMatrix, IntMatrix) {
        let (h, u) = hnf_rows(self.to_rows_vec(), self.ncols, true);
        (
            Self::from_rows_vec(h, self.ncols),
            Self::from_rows_vec(u.expect("transform requested"), self.nrows),
        )
    }

    /// Hermite normal form without tracking the transform.
    pub fn hnf(&self) -> IntMatrix {
        let (h, _) = hnf_rows(self.to_rows_vec(), self.ncols, false);
        Self::from_rows_vec(h, self.ncols)
    }

    /// Invariant factors `d1 | d2 | ...`, `min(rows, cols)` of them, all
    /// nonnegative (trailing zeros for rank-deficient input).
    pub fn smith_normal_form(&self) -> Vec<BigInt> {
        smith_diagonal(self.to_rows_vec(), self.ncols)
    }

    /// Exact solution of `self * x = rhs` for a square nonsingular matrix.
    pub fn solve_rational(&self, rhs: &IntVector) -> Result<RatVector> {
        if !self.is_square() {
            return Err(Error::Dimension("solve on a non-square matrix".into()));
        }
        if rhs.dim() != self.nrows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                rhs.dim(),
                self.nrows
            )));
        }
        let n = self.nrows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                self.row(r)
                    .iter()
                    .chain(std::iter::once(&rhs[r]))
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            let inv = a[col][col].recip();
            for x in a[col].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
        Ok(RatVector::new(a.into_iter().map(|row| row[n].clone()).collect()))
    }

    /// A Z-basis (as rows) of the integer kernel `{x in Z^ncols : self * x = 0}`.
    pub fn kernel_basis(&self) -> Vec<IntVector> {
        integer_kernel(&self.rows(), self.ncols)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.nrows {
            let line: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `|det| = 1` for `d` vectors of dimension `d`.
pub fn is_lattice_basis(vectors: &[IntVector]) -> Result<bool> {
    let d = vectors.len();
    if d == 0 || vectors.iter().any(|v| v.dim() != d) {
        return Err(Error::Dimension(format!(
            "a lattice basis needs d vectors of dimension d, got {d} vectors"
        )));
    }
    Ok(IntMatrix::from_rows(vectors)?.det()?.abs().is_one())
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Rank via fraction-free elimination.
pub(crate) fn rank_of_rows(rows: &[Vec<BigInt>]) -> usize {
    let mut a = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..nrows {
            if a[i][col].is_zero() {
                continue;
            }
            let (pv, iv) = (a[rank][col].clone(), a[i][col].clone());
            for j in col..ncols {
                let v = &a[i][j] * &pv - &a[rank][j] * &iv;
                a[i][j] = v;
            }
            let g = a[i].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in a[i].iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn rank_of_vectors(vs: &[IntVector]) -> usize {
    let rows: Vec<Vec<BigInt>> = vs.iter().map(|v| v.coords().to_vec()).collect();
    rank_of_rows(&rows)
}

fn row_sub_mul(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

fn hnf_rows(
    mut h: Vec<Vec<BigInt>>,
    ncols: usize,
    with_transform: bool,
) -> (Vec<Vec<BigInt>>, Option<Vec<Vec<BigInt>>>) {
    let nrows = h.len();
    let mut u = with_transform.then(|| {
        (0..nrows)
            .map(|i| (0..nrows).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect::<Vec<Vec<BigInt>>>()
    });
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        // Euclid on the column below the pivot row until one nonzero entry remains.
        loop {
            let best = (pivot_row..nrows)
                .filter(|&r| !h[r][col].is_zero())
                .min_by(|&a, &b| h[a][col].abs().cmp(&h[b][col].abs()));
            let Some(best) = best else { break };
            h.swap(pivot_row, best);
            if let Some(u) = u.as_mut() {
                u.swap(pivot_row, best);
            }
            let mut done = true;
            for r in pivot_row + 1..nrows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = h[r][col].div_floor(&h[pivot_row][col]);
                row_sub_mul(&mut h, r, pivot_row, &q);
                if let Some(u) = u.as_mut() {
                    row_sub_mul(u, r, pivot_row, &q);
                }
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pivot_row][col].is_zero() {
            continue;
        }
        if h[pivot_row][col].is_negative() {
            for x in h[pivot_row].iter_mut() {
                *x = -&*x;
            }
            if let Some(u) = u.as_mut() {
                for x in u[pivot_row].iter_mut() {
                    *x = -&*x;
                }
            }
        }
        for r in 0..pivot_row {
            let q = h[r][col].div_floor(&h[pivot_row][col]);
            row_sub_mul(&mut h, r, pivot_row, &q);
            if let Some(u) = u.as_mut() {
                row_sub_mul(u, r, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

fn smith_diagonal(mut a: Vec<Vec<BigInt>>, ncols: usize) -> Vec<BigInt> {
    let nrows = a.len();
    let k = nrows.min(ncols);
    for t in 0..k {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for r in t..nrows {
                for c in t..ncols {
                    if a[r][c].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(br, bc)| a[r][c].abs() < a[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((br, bc)) = best else {
                return finish_smith(a.iter().enumerate().take(k).map(|(i, row)| row[i].clone()).collect());
            };
            a.swap(t, br);
            for row in a.iter_mut() {
                row.swap(t, bc);
            }
            let mut clean = true;
            for r in t + 1..nrows {
                let q = a[r][t].div_floor(&a[t][t]);
                row_sub_mul(&mut a, r, t, &q);
                if !a[r][t].is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..ncols {
                let q = a[t][c].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let v = &row[t] * &q;
                        row[c] -= v;
                    }
                }
                if !a[t][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
    }
    finish_smith((0..k).map(|i| a[i][i].clone()).collect())
}

/// Turn any diagonal into the divisibility chain with the same products of
/// leading minors.
fn finish_smith(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    for x in diag.iter_mut() {
        *x = x.abs();
    }
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (diag[i].clone(), diag[j].clone());
            let g = a.gcd(&b);
            if g.is_zero() {
                continue;
            }
            diag[i] = g.clone();
            diag[j] = (&a * &b / &g).abs();
        }
    }
    // Zeros go last: gcd(0, x) = x moves nonzeros forward already, but a zero
    // may still sit before later entries.
    let mut nonzero: Vec<BigInt> = diag.iter().filter(|x| !x.is_zero()).cloned().collect();
    nonzero.resize(n, BigInt::zero());
    nonzero
}

/// Z-basis of `{x in Z^ncols : <r, x> = 0 for every row r}`. An empty row list
/// yields the standard basis.
pub(crate) fn integer_kernel(rows: &[IntVector], ncols: usize) -> Vec<IntVector> {
    if rows.is_empty() {
        return (0..ncols).map(|i| IntVector::unit(ncols, i)).collect();
    }
    // HNF of the transpose: rows of the transform that hit zero rows of H
    // form a basis of the left kernel of A^T, i.e. the kernel of A.
    let transposed: Vec<Vec<BigInt>> = (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect();
    let (h, u) = hnf_rows(transposed, rows.len(), true);
    let u = u.expect("transform requested");
    h.iter()
        .zip(u)
        .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
        .map(|(_, ur)| IntVector::new(ur))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn det_examples() {
        assert_eq!(IntMatrix::identity(3).det().unwrap(), BigInt::from(1));
        assert_eq!(m(&[&[1, 0], &[1, 1]]).det().unwrap(), BigInt::from(1));
        assert_eq!(m(&[&[-1, 1], &[-1, -1]]).det().unwrap(), BigInt::from(2));
        assert!(matches!(m(&[&[1, 2, 3], &[4, 5, 6]]).det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn det_needs_pivoting() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), BigInt::from(0));
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = IntMatrix::identity(3).hermite_normal_form();
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));

        let a = m(&[&[2, 0], &[0, 1]]);
        assert_eq!(a.hermite_normal_form().0, a);

        let a = m(&[&[1, 2], &[3, 4]]);
        let (h, u) = a.hermite_normal_form();
        assert_eq!(h.det().unwrap().abs(), BigInt::from(2));
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(h, m(&[&[1, 0], &[0, 2]]));
    }

    #[test]
    fn hnf_rectangular_and_rank_deficient() {
        let a = m(&[&[2, 4, 6], &[1, 2, 3], &[0, 1, 1]]);
        let (h, u) = a.hermite_normal_form();
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), BigInt::from(1));
        assert_eq!(h, m(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
    }

    #[test]
    fn snf_examples() {
        assert_eq!(IntMatrix::identity(3).smith_normal_form(), ints(&[1, 1, 1]));
        assert_eq!(IntMatrix::diagonal(&[2, 4]).smith_normal_form(), ints(&[2, 4]));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).smith_normal_form(), ints(&[1, 6]));
        assert_eq!(m(&[&[2, 4], &[4, 8]]).smith_normal_form(), ints(&[2, 0]));
        assert_eq!(m(&[&[0, 0], &[0, 0]]).smith_normal_form(), ints(&[0, 0]));
    }

    #[test]
    fn lattice_basis_examples() {
        let e = |d, i| IntVector::unit(d, i);
        assert!(is_lattice_basis(&[e(3, 0), e(3, 1), e(3, 2)]).unwrap());
        assert!(is_lattice_basis(&[e(2, 0), IntVector::from_i64s(&[1, 1])]).unwrap());
        assert!(!is_lattice_basis(&[IntVector::from_i64s(&[-1, 1]), IntVector::from_i64s(&[-1, -1])]).unwrap());
        assert!(is_lattice_basis(&[e(2, 0)]).is_err());
    }

    #[test]
    fn solve_examples() {
        let v = IntVector::from_i64s(&[3, -4, 5]);
        assert_eq!(IntMatrix::identity(3).solve_rational(&v).unwrap(), v.to_rational());

        let half = BigRational::new(1.into(), 2.into());
        let x = IntMatrix::diagonal(&[2, 2])
            .solve_rational(&IntVector::from_i64s(&[1, 1]))
            .unwrap();
        assert_eq!(x, RatVector::new(vec![half.clone(), half]));

        let x = m(&[&[1, 0], &[1, 1]]).solve_rational(&IntVector::from_i64s(&[1, 1])).unwrap();
        assert_eq!(x, IntVector::from_i64s(&[1, 0]).to_rational());

        assert_eq!(
            m(&[&[1, 2], &[2, 4]]).solve_rational(&IntVector::from_i64s(&[1, 1])),
            Err(Error::Singular)
        );
    }

    #[test]
    fn kernel_is_saturated() {
        // The kernel of (2, 4) is spanned by (2, -1), not (4, -2).
        let k = m(&[&[2, 4]]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].content(), BigInt::from(1));
        assert!(k[0].dot(&IntVector::from_i64s(&[2, 4])).is_zero());
        assert!(integer_kernel(&[], 3).len() == 3);
    }

    #[test]
    fn empty_matrix_rejected() {
        assert!(IntMatrix::new(0, 2, vec![]).is_err());
        assert!(IntMatrix::new(2, 2, ints(&[1, 2, 3])).is_err());
    }
}

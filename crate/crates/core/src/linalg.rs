//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Ranks are ranks
//! over the rationals, computed by fraction-free elimination; lattice
//! questions (equality, membership, saturation) go through the row-style
//! Hermite normal form.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, input, Error, Result};

/// A fixed-length vector of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        IntVector(vec![BigInt::zero(); len])
    }

    /// The standard basis vector with a one at position `i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigInt::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector::from_i64s(&v)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<'a> Add<&'a IntVector> for &'a IntVector {
    type Output = IntVector;
    fn add(self, rhs: &'a IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a IntVector> for &'a IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &'a IntVector) -> IntVector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }
}

// Entries serialize as JSON integers when they fit in an i64, otherwise as
// decimal strings.
fn serialize_bigint<S: SerializeSeq>(seq: &mut S, x: &BigInt) -> std::result::Result<(), S::Error> {
    match x.to_i64() {
        Some(v) => seq.serialize_element(&v),
        None => seq.serialize_element(&x.to_string()),
    }
}

impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            serialize_bigint(&mut seq, x)?;
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Int(i64),
    Str(String),
}

impl<'de> Deserialize<'de> for IntVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IntVector;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<IntVector, A::Error> {
                let mut out = Vec::new();
                while let Some(x) = seq.next_element::<IntRepr>()? {
                    out.push(match x {
                        IntRepr::Int(v) => BigInt::from(v),
                        IntRepr::Str(s) => s
                            .trim()
                            .parse::<BigInt>()
                            .map_err(|_| de::Error::custom(format!("not an integer: {s:?}")))?,
                    });
                }
                Ok(IntVector(out))
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// A dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors, all of length `cols`.
    pub fn from_rows(cols: usize, rows: &[IntVector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_dim(cols, r.len())?;
            data.extend(r.iter().cloned());
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    /// Convenience constructor; panics on ragged input. An empty slice gives
    /// the 0×0 matrix.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row_slice(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector(self.row_slice(i).to_vec())
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row_slice(i));
        }
        IntMatrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.rows, cols: idx.len(), data }
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        check_dim(self.cols, rhs.rows)?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Computes `M·vᵀ`.
    pub fn mul_vec(&self, v: &IntVector) -> Result<IntVector> {
        check_dim(self.cols, v.len())?;
        Ok(IntVector(
            (0..self.rows)
                .map(|i| self.row_slice(i).iter().zip(v.iter()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[target] -= q * row[src]
    fn sub_row_multiple(&mut self, target: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = self.get(src, j) * q;
            self.data[target * self.cols + j] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    fn to_i128_rows(&self) -> Option<Vec<Vec<i128>>> {
        (0..self.rows)
            .map(|i| self.row_slice(i).iter().map(|x| x.to_i64().map(i128::from)).collect())
            .collect()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.row_vectors().serialize(serializer)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>, cols: usize) -> Option<usize> {
    let rows = a.len();
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let pivot = a[r][c];
        for i in r + 1..rows {
            let f = a[i][c];
            for j in c + 1..cols {
                let num = pivot.checked_mul(a[i][j])?.checked_sub(f.checked_mul(a[r][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

/// Fraction-free forward elimination. Returns the rank, the pivot columns and
/// the sign of the row permutation. Entries below the pivots are left zero
/// and the last pivot of a square full-rank input is its determinant (up to
/// the returned sign).
fn bareiss_big(a: &mut IntMatrix) -> (usize, Vec<usize>, i32) {
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    let mut sign = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        if p != r {
            a.swap_rows(r, p);
            sign = -sign;
        }
        let pivot = a.get(r, c).clone();
        for i in r + 1..rows {
            let f = a.get(i, c).clone();
            for j in c + 1..cols {
                let num = &pivot * a.get(i, j) - &f * a.get(r, j);
                a.set(i, j, num / &prev);
            }
            a.set(i, c, BigInt::zero());
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (r, pivots, sign)
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    if let Some(small) = m.to_i128_rows() {
        if let Some(r) = bareiss_i128(small, m.cols) {
            return r;
        }
    }
    bareiss_big(&mut m.clone()).0
}

/// Rank of a matrix given as machine-integer rows of length `cols`.
pub fn rank_i64<R: AsRef<[i64]>>(rows: &[R], cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let wide = rows.iter().map(|r| r.as_ref().iter().map(|&x| i128::from(x)).collect()).collect();
    match bareiss_i128(wide, cols) {
        Some(r) => r,
        None => rank(&IntMatrix::from_i64_rows(rows)),
    }
}

/// Determinant of a square matrix.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    check_dim(m.rows, m.cols)?;
    if m.rows == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let (r, _, sign) = bareiss_big(&mut a);
    if r < m.rows {
        return Ok(BigInt::zero());
    }
    let d = a.get(m.rows - 1, m.cols - 1).clone();
    Ok(if sign < 0 { -d } else { d })
}

/// Row-style Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermite {
    /// `h = u · m`
    pub h: IntMatrix,
    /// Unimodular transform.
    pub u: IntMatrix,
    /// Pivot column of each nonzero row, in order.
    pub pivots: Vec<usize>,
}

impl Hermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `h`, a canonical basis of the row lattice.
    pub fn basis(&self) -> IntMatrix {
        let idx: Vec<usize> = (0..self.rank()).collect();
        self.h.select_rows(&idx)
    }

    /// Solves `y·h = b` for an integer row vector `y` of length `h.rows()`.
    fn solve_row(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let h = &self.h;
        let mut residual: Vec<BigInt> = b.to_vec();
        let mut y = vec![BigInt::zero(); h.rows];
        let mut k = 0;
        for j in 0..h.cols {
            if k < self.pivots.len() && self.pivots[k] == j {
                let p = h.get(k, j);
                let (q, rem) = residual[j].div_rem(p);
                if !rem.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for jj in j..h.cols {
                        let t = h.get(k, jj) * &q;
                        residual[jj] -= t;
                    }
                }
                y[k] = q;
                k += 1;
            } else if !residual[j].is_zero() {
                return None;
            }
        }
        Some(y)
    }

    /// Whether the row vector `b` lies in the row lattice.
    pub fn contains(&self, b: &IntVector) -> bool {
        b.len() == self.h.cols && self.solve_row(b.entries()).is_some()
    }
}

/// Computes the row-style Hermite normal form: pivots positive, entries above
/// each pivot reduced into `[0, pivot)`, zero rows at the bottom. Pivots are
/// chosen by first nonzero column.
pub fn hnf(m: &IntMatrix) -> Hermite {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pivots = Vec::new();
    let mut p = 0;
    for c in 0..m.cols {
        if p == m.rows {
            break;
        }
        loop {
            // Euclid on column c over rows p.. : bring the smallest nonzero
            // entry to row p and reduce the others modulo it.
            let best = (p..m.rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(best) = best else { break };
            h.swap_rows(p, best);
            u.swap_rows(p, best);
            let mut done = true;
            for i in p + 1..m.rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(p, c));
                h.sub_row_multiple(i, p, &q);
                u.sub_row_multiple(i, p, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(p, c).is_zero() {
            continue;
        }
        if h.get(p, c).is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        for i in 0..p {
            let q = h.get(i, c).div_floor(h.get(p, c));
            h.sub_row_multiple(i, p, &q);
            u.sub_row_multiple(i, p, &q);
        }
        pivots.push(c);
        p += 1;
    }
    Hermite { h, u, pivots }
}

/// A ℤ-basis (as rows, in Hermite normal form) of `{x ∈ ℤ^cols : M·xᵀ = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let t = hnf(&m.transpose());
    let r = t.rank();
    let idx: Vec<usize> = (r..t.u.rows).collect();
    let raw = t.u.select_rows(&idx);
    hnf(&raw).basis()
}

/// Returns an integer `x` with `A·xᵀ = bᵀ`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &IntVector) -> Result<Option<IntVector>> {
    ColumnLatticeSolver::new(a).solve(b)
}

/// Precomputed solver for repeated `A·x = b` queries against one matrix.
#[derive(Clone, Debug)]
pub struct ColumnLatticeSolver {
    rows: usize,
    herm: Hermite,
}

impl ColumnLatticeSolver {
    pub fn new(a: &IntMatrix) -> Self {
        ColumnLatticeSolver { rows: a.rows, herm: hnf(&a.transpose()) }
    }

    pub fn solve(&self, b: &IntVector) -> Result<Option<IntVector>> {
        check_dim(self.rows, b.len())?;
        let Some(y) = self.herm.solve_row(b.entries()) else { return Ok(None) };
        let u = &self.herm.u;
        let x = (0..u.cols)
            .map(|j| (0..u.rows).map(|i| &y[i] * u.get(i, j)).sum())
            .collect();
        Ok(Some(IntVector(x)))
    }

    /// Whether `b` is an integer combination of the columns of `A`.
    pub fn contains(&self, b: &IntVector) -> Result<bool> {
        check_dim(self.rows, b.len())?;
        Ok(self.herm.solve_row(b.entries()).is_some())
    }
}

/// Subset enumeration above this count switches to the Hermite route.
const MINOR_ENUMERATION_LIMIT: u128 = 200_000;

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// gcd of all maximal (rows × rows) minors. The row lattice is saturated in
/// ℤ^cols iff the result is 1.
pub fn maximal_minors_gcd(m: &IntMatrix) -> Result<BigInt> {
    let r = m.rows;
    if rank(m) != r {
        return input(format!("maximal minors need full row rank; matrix has {} rows but rank {}", r, rank(m)));
    }
    if r == 0 {
        return Ok(BigInt::one());
    }
    if binomial(m.cols, r) > MINOR_ENUMERATION_LIMIT {
        return Ok(saturation_index(m));
    }
    // Start from the pivot columns, which always give a nonzero minor, so a
    // saturated lattice typically exits after one determinant.
    let mut echelon = m.clone();
    let (_, pivots, _) = bareiss_big(&mut echelon);
    let mut g = determinant(&m.select_cols(&pivots))?.abs();
    if g.is_one() {
        return Ok(g);
    }
    let mut subset: Vec<usize> = (0..r).collect();
    loop {
        let d = determinant(&m.select_cols(&subset))?;
        g = g.gcd(&d);
        if g.is_one() {
            return Ok(g);
        }
        // next r-subset of 0..cols in lexicographic order
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(g);
            }
            i -= 1;
            if subset[i] < m.cols - r + i {
                break;
            }
        }
        subset[i] += 1;
        for k in i + 1..r {
            subset[k] = subset[k - 1] + 1;
        }
    }
}

/// Index of the row lattice in its saturation, read off the Hermite form of
/// the transpose: column operations preserve the ideal of maximal minors, so
/// for a full-row-rank matrix this is the product of the pivots.
pub fn saturation_index(m: &IntMatrix) -> BigInt {
    let t = hnf(&m.transpose());
    let basis = t.basis();
    if basis.rows != m.rows {
        return BigInt::zero();
    }
    (0..basis.rows).map(|i| basis.get(i, t.pivots[i]).clone()).product()
}

/// Whether two row lattices in the same ambient space coincide.
pub fn same_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.cols == b.cols && hnf(a).basis() == hnf(b).basis()
}

/// Rank after restricting to a subset of rows, with a fast path for the
/// empty selection.
pub fn rank_of_rows(m: &IntMatrix, idx: &[usize]) -> usize {
    if idx.is_empty() {
        0
    } else {
        rank(&m.select_rows(idx))
    }
}

pub fn rank_of_cols(m: &IntMatrix, idx: &[usize]) -> usize {
    if idx.is_empty() {
        0
    } else {
        rank(&m.select_cols(idx))
    }
}

impl TryFrom<&serde_json::Value> for IntMatrix {
    type Error = Error;
    fn try_from(v: &serde_json::Value) -> Result<Self> {
        let rows: Vec<IntVector> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Input(format!("matrix: {e}")))?;
        let cols = rows.first().map_or(0, IntVector::len);
        IntMatrix::from_rows(cols, &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    // Brute-force rank oracle: the largest k for which some k×k minor is
    // nonzero, by cofactor expansion.
    fn cofactor_det(a: &[Vec<i64>]) -> i128 {
        let n = a.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * a[0][j] as i128 * cofactor_det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn brute_rank(a: &[Vec<i64>]) -> usize {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        for k in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                    if cofactor_det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&IntMatrix::zeros(0, 0)), 0);
        assert_eq!(rank(&IntMatrix::identity(3)), 3);
        let rows = vec![vec![3, -1, -1], vec![-1, 2, -1], vec![-2, -1, 2]];
        assert_eq!(brute_rank(&rows), 2);
        assert_eq!(rank(&IntMatrix::from_i64_rows(&rows)), 2);
    }

    #[test]
    fn rank_overflow_falls_back_to_bigint() {
        let big = i64::MAX / 3;
        let a = m(&[&[big, big - 1, 7], &[big - 5, big, 3], &[1, 2, 3]]);
        let d = determinant(&a).unwrap();
        assert_eq!(rank(&a), if d.is_zero() { 2 } else { 3 });
        let dup = m(&[&[big, big - 1], &[big, big - 1]]);
        assert_eq!(rank(&dup), 1);
    }

    #[test]
    fn hnf_examples() {
        let id = IntMatrix::identity(3);
        let h = hnf(&id);
        assert_eq!(h.h, id);
        assert_eq!(h.u, id);

        let row = m(&[&[2, 4]]);
        assert_eq!(hnf(&row).h, row);

        // (2,0),(0,3),(1,1) span ℤ²: the 2×2 minors are 6, 2, -3 with gcd 1.
        let a = m(&[&[2, 0], &[0, 3], &[1, 1]]);
        let h = hnf(&a);
        assert_eq!(h.basis(), IntMatrix::identity(2));
        assert_eq!(h.u.mul(&a).unwrap(), h.h);
        assert_eq!(determinant(&h.u).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let a = m(&[&[3, 5, 7], &[0, 4, 9], &[6, 2, 1]]);
        let h = hnf(&a);
        for (k, &c) in h.pivots.iter().enumerate() {
            let p = h.h.get(k, c).clone();
            assert!(p.is_positive());
            for i in 0..k {
                let x = h.h.get(i, c);
                assert!(!x.is_negative() && x < &p);
            }
        }
        assert_eq!(h.u.mul(&a).unwrap(), h.h);
    }

    #[test]
    fn kernel_examples() {
        let a = m(&[&[3, 4, 5]]);
        let k = kernel_basis(&a);
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            assert!(a.mul_vec(&k.row(i)).unwrap().is_zero());
        }
        assert_eq!(maximal_minors_gcd(&k).unwrap(), BigInt::one());
        let herm = hnf(&k);
        assert!(herm.contains(&IntVector::from_i64s(&[3, -1, -1])));
        assert!(herm.contains(&IntVector::from_i64s(&[-1, 2, -1])));

        assert_eq!(kernel_basis(&IntMatrix::identity(3)).rows(), 0);
        assert_eq!(kernel_basis(&IntMatrix::zeros(1, 2)).rows(), 2);
    }

    #[test]
    fn solve_examples() {
        let id = IntMatrix::identity(3);
        let b = IntVector::from_i64s(&[4, -7, 2]);
        assert_eq!(solve_integer(&id, &b).unwrap(), Some(b.clone()));

        let a = m(&[&[2, 4]]);
        assert_eq!(solve_integer(&a, &IntVector::from_i64s(&[3])).unwrap(), None);

        let a = m(&[&[6, 10, 15]]);
        let x = solve_integer(&a, &IntVector::from_i64s(&[1])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), IntVector::from_i64s(&[1]));

        assert!(matches!(
            solve_integer(&a, &IntVector::from_i64s(&[1, 2])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn minors_gcd_examples() {
        // 2×2 minors 15, -10, 6
        assert_eq!(maximal_minors_gcd(&m(&[&[5, -3, 0], &[0, 3, -2]])).unwrap(), BigInt::one());
        assert_eq!(maximal_minors_gcd(&m(&[&[2, 0], &[0, 2]])).unwrap(), BigInt::from(4));
        let (c1, c2, c3) = (5, 3, 2);
        let w = m(&[&[c1 - 1, -c2, 0, 1], &[-c1, 0, c3, 0]]);
        assert_eq!(maximal_minors_gcd(&w).unwrap(), BigInt::one());
        assert!(matches!(maximal_minors_gcd(&m(&[&[1, 2], &[2, 4]])), Err(Error::Input(_))));
    }

    #[test]
    fn minors_gcd_matches_hermite_index() {
        let cases: Vec<IntMatrix> = vec![
            m(&[&[2, 0], &[0, 2]]),
            m(&[&[2, 4, 6], &[0, 3, 9]]),
            m(&[&[6, 10, 15, 3]]),
            m(&[&[4, 0, 2, 2], &[0, 6, 3, 9], &[2, 2, 2, 2]]),
        ];
        for a in cases {
            assert_eq!(maximal_minors_gcd(&a).unwrap(), saturation_index(&a), "{a}");
        }
    }

    #[test]
    fn determinant_matches_cofactor() {
        let rows = vec![vec![2, -1, 3, 0], vec![1, 4, -2, 5], vec![0, 3, 1, -1], vec![7, 0, 2, 2]];
        let d = determinant(&IntMatrix::from_i64_rows(&rows)).unwrap();
        assert_eq!(d, BigInt::from(cofactor_det(&rows)));
    }

    #[test]
    fn intvector_json_round_trip() {
        let v = IntVector::new(vec![BigInt::from(3), BigInt::from(-2), BigInt::from(10).pow(30)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[3,-2,"1000000000000000000000000000000"]"#);
        let back: IntVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}

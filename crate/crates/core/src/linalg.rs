//! Exact linear algebra over a [`Scalar`] field.
//!
//! [`Matrix`] is a small dense matrix used for structure maps and the
//! textbook operations (`rref`, `in_span`, `quotient_basis`).
//! [`SparseVec`] and [`Echelon`] are what the ideal computations run on:
//! windowed free-algebra spaces have hundreds of coordinates but relations
//! with a handful of terms.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn scalar(n: usize, c: S) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Like [`Matrix::from_rows`] but with an explicit column count, so that
    /// an empty row list still has a shape.
    pub fn from_rows_with_cols(rows: Vec<Vec<S>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|row| row.len() != cols) {
            return Err(Error::DimensionMismatch(format!("expected rows of length {cols}")));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| S::from_i64(v)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse of a square matrix, `None` if it is singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let (r, pivots) = rref(&aug);
        if pivots.len() < n || pivots.get(n.wrapping_sub(1)).is_some_and(|&p| p >= n) {
            return None;
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(out)
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;

    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|v| format!("{v:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form. Zero rows are dropped from the result, so the
/// returned matrix has exactly `rank` rows. Pivots are taken at the first
/// nonzero entry in column order.
pub fn rref<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = S::one() / a[(r, c)].clone();
        for j in c..a.cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..a.cols {
                if !a[(r, j)].is_zero() {
                    a[(i, j)] = a[(i, j)].clone() - factor.clone() * a[(r, j)].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.data.truncate(r * a.cols);
    a.rows = r;
    (a, pivots)
}

/// Coordinates `c` with `c · rows = v`, where `rows` is in reduced row
/// echelon form (as returned by [`rref`]); `None` if `v` is not in the span.
pub fn in_span<S: Scalar>(rows: &Matrix<S>, v: &[S]) -> Result<Option<Vec<S>>> {
    if rows.rows() > 0 && rows.cols() != v.len() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} against rows of length {}",
            v.len(),
            rows.cols()
        )));
    }
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(rows.rows());
    for i in 0..rows.rows() {
        let row = rows.row(i);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return Err(Error::InvalidArgument("rows are not in reduced echelon form".into()));
        };
        let c = rest[p].clone() / row[p].clone();
        if !c.is_zero() {
            for (x, r) in rest.iter_mut().zip(row) {
                *x = x.clone() - c.clone() * r.clone();
            }
        }
        coords.push(c);
    }
    Ok(rest.iter().all(|x| x.is_zero()).then_some(coords))
}

/// Non-pivot columns of a subspace given in reduced row echelon form; they
/// index a basis of coset representatives of the quotient.
pub fn quotient_basis<S: Scalar>(ambient_dim: usize, subspace: &Matrix<S>) -> Vec<usize> {
    let pivots: Vec<usize> = (0..subspace.rows())
        .filter_map(|i| subspace.row(i).iter().position(|x| !x.is_zero()))
        .collect();
    (0..ambient_dim).filter(|c| !pivots.contains(c)).collect()
}

/// A sparse vector: `(coordinate, value)` pairs sorted by coordinate, with
/// no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<S> {
    entries: Vec<(usize, S)>,
}

impl<S: Scalar> Default for SparseVec<S> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<S: Scalar> SparseVec<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, S)>) -> Self {
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, S)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(v: &[S]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<S> {
        let mut out = vec![S::zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, S)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, col: usize) -> Option<&S> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &S, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, c.clone() * b[j].1.clone()));
                j += 1;
            } else {
                let v = a[i].1.clone() + c.clone() * b[j].1.clone();
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v.clone() * c.clone())).collect(),
        }
    }

    /// Renumbers coordinates through `map`; entries mapped to `None` must be
    /// zero (checked by the caller) and are dropped.
    pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> Self {
        Self::from_entries(
            self.entries
                .iter()
                .filter_map(|(c, v)| map(*c).map(|m| (m, v.clone())))
                .collect(),
        )
    }
}

/// An echelon basis of a subspace of `S^n`, built incrementally.
///
/// Coordinates are ranked by `order` (lower rank = more leading). Rows are
/// kept with distinct leading coordinates; only leading terms are eliminated
/// on insertion. Vectors are stored in rank space, so a row's leading entry
/// is its first entry.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    rank_of: Vec<usize>,
    col_of: Vec<usize>,
    rows: Vec<SparseVec<S>>,
    pivot_row: HashMap<usize, usize>,
}

impl<S: Scalar> Echelon<S> {
    /// Natural coordinate order.
    pub fn new(dim: usize) -> Self {
        Self::with_order((0..dim).collect())
    }

    /// `order[k]` is the coordinate placed at position `k`.
    pub fn with_order(order: Vec<usize>) -> Self {
        let mut rank_of = vec![usize::MAX; order.len()];
        for (k, &c) in order.iter().enumerate() {
            rank_of[c] = k;
        }
        debug_assert!(rank_of.iter().all(|&r| r != usize::MAX), "order is not a permutation");
        Echelon {
            rank_of,
            col_of: order,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.col_of.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn to_rank_space(&self, v: &SparseVec<S>) -> SparseVec<S> {
        v.remap(|c| Some(self.rank_of[c]))
    }

    fn to_col_space(&self, v: &SparseVec<S>) -> SparseVec<S> {
        v.remap(|k| Some(self.col_of[k]))
    }

    fn reduce_ranked(&self, mut v: SparseVec<S>) -> SparseVec<S> {
        // Eliminate leading terms until the lead has no pivot row. Entries
        // behind an unpivoted lead are also reduced so that the remainder is
        // a canonical representative modulo the span.
        let mut done: Vec<(usize, S)> = Vec::new();
        loop {
            let Some((lead, coef)) = v.entries.first().cloned() else {
                break;
            };
            match self.pivot_row.get(&lead) {
                Some(&r) => {
                    let row = &self.rows[r];
                    let factor = -(coef / row.entries[0].1.clone());
                    v = v.axpy(&factor, row);
                }
                None => {
                    done.push((lead, coef));
                    v.entries.remove(0);
                }
            }
        }
        SparseVec { entries: done }
    }

    /// Reduces `v` modulo the span. Zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec<S>) -> SparseVec<S> {
        self.to_col_space(&self.reduce_ranked(self.to_rank_space(v)))
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns the new basis vector (in coordinate
    /// space) if the rank grew.
    pub fn insert(&mut self, v: &SparseVec<S>) -> Option<SparseVec<S>> {
        let r = self.reduce_ranked(self.to_rank_space(v));
        if r.is_zero() {
            return None;
        }
        let lead = r.entries[0].0;
        let inv = S::one() / r.entries[0].1.clone();
        let r = r.scale(&inv);
        self.pivot_row.insert(lead, self.rows.len());
        let out = self.to_col_space(&r);
        self.rows.push(r);
        Some(out)
    }

    /// Basis vectors in coordinate space.
    pub fn basis(&self) -> Vec<SparseVec<S>> {
        self.rows.iter().map(|r| self.to_col_space(r)).collect()
    }

    /// Basis of the intersection of the span with the coordinate subspace
    /// spanned by the coordinates where `allowed` is true.
    pub fn intersect_coordinates(&self, allowed: impl Fn(usize) -> bool) -> Vec<SparseVec<S>> {
        // Put forbidden coordinates first: the rows of an echelon basis whose
        // lead is allowed then have no forbidden entries at all, and they
        // span the intersection.
        let dim = self.dim();
        let mut order: Vec<usize> = (0..dim).filter(|&c| !allowed(c)).collect();
        let first_allowed = order.len();
        order.extend((0..dim).filter(|&c| allowed(c)));
        let mut other = Echelon::with_order(order);
        for row in self.basis() {
            other.insert(&row);
        }
        other
            .rows
            .iter()
            .filter(|r| r.entries[0].0 >= first_allowed)
            .map(|r| other.to_col_space(r))
            .collect()
    }

    /// Fully reduced basis in natural coordinate order: a sparse RREF.
    /// Returns the rows sorted by pivot together with the pivot columns.
    pub fn rref(&self) -> (Vec<SparseVec<S>>, Vec<usize>) {
        let mut natural = Echelon::new(self.dim());
        for row in self.basis() {
            natural.insert(&row);
        }
        let mut order: Vec<usize> = (0..natural.rows.len()).collect();
        order.sort_by_key(|&i| natural.rows[i].entries[0].0);
        let mut reduced: Vec<SparseVec<S>> = Vec::with_capacity(order.len());
        // Back-substitute from the last pivot up.
        let pivots: Vec<usize> = order.iter().map(|&i| natural.rows[i].entries[0].0).collect();
        let mut done: HashMap<usize, SparseVec<S>> = HashMap::new();
        for (idx, &i) in order.iter().enumerate().rev() {
            let mut row = natural.rows[i].clone();
            for &p in &pivots[idx + 1..] {
                if let Some(c) = row.get(p).cloned() {
                    row = row.axpy(&-c, &done[&p]);
                }
            }
            done.insert(pivots[idx], row);
        }
        for p in &pivots {
            reduced.push(done.remove(p).expect("row for pivot"));
        }
        (reduced, pivots)
    }
}

//! Dense linear algebra over a prime field GF(p).
//!
//! Everything above this module reduces to ranks, kernels and solves of
//! matrices stored here. Pivoting is deterministic (first nonzero entry in
//! column order, first candidate row), so bases computed from the same input
//! are identical across runs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// The prime field GF(p) with `2 <= p <= 2^31 - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    pub fn new(p: u64) -> Result<Field, Error> {
        if !(2..=0x7fff_ffff).contains(&p) {
            return Err(Error::InvalidField(p));
        }
        let mut q = 2u64;
        while q * q <= p {
            if p % q == 0 {
                return Err(Error::InvalidField(p));
            }
            q += 1;
        }
        Ok(Field { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 {
            s - self.p as u64
        } else {
            s
        }) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }
}

/// `dst[k] += f * src[k]` over GF(p), for `k >= from`.
#[inline]
fn axpy(field: Field, dst: &mut [u32], src: &[u32], f: u32, from: usize) {
    if f == 0 {
        return;
    }
    let p = field.p as u64;
    let f = f as u64;
    for (d, &s) in dst[from..].iter_mut().zip(&src[from..]) {
        if s != 0 {
            *d = ((*d as u64 + f * s as u64) % p) as u32;
        }
    }
}

/// A dense matrix over GF(p), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
    field: Field,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}x{} mod {}]", self.rows, self.cols, self.field.p)?;
        for r in 0..self.rows {
            write!(f, "\n  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
            field,
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Result<Mat, Error> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows"));
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Mat {
            rows: rows.len(),
            cols,
            data,
            field,
        })
    }

    /// Wraps reduced row-major entries.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<u32>) -> Mat {
        assert_eq!(
            data.len(),
            rows * cols,
            "entry count must equal rows * cols"
        );
        debug_assert!(data.iter().all(|&x| x < field.p));
        Mat {
            rows,
            cols,
            data,
            field,
        }
    }

    /// A single column vector.
    pub fn column_vector(field: Field, v: &[u32]) -> Mat {
        Mat::from_vec(field, v.len(), 1, v.to_vec())
    }

    /// Matrix whose columns are the given vectors (all of length `len`).
    pub fn from_columns(field: Field, len: usize, cols: &[Vec<u32>]) -> Mat {
        let mut m = Mat::zeros(field, len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), len);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.p);
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == (r == c) as u32))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "mat_mul: inner dimensions differ");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        let n = other.cols;
        if n == 0 {
            return out;
        }
        let mut acc = vec![0u64; n];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            let mut pending = 0u32;
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (x, &b) in acc.iter_mut().zip(orow) {
                    *x += a as u64 * b as u64;
                }
                pending += 1;
                // keep the accumulators below 2^64
                if pending == 3 {
                    acc.iter_mut().for_each(|x| *x %= f.p as u64);
                    pending = 0;
                }
            }
            let dst = &mut out.data[r * n..(r + 1) * n];
            for (d, &x) in dst.iter_mut().zip(&acc) {
                *d = (x % f.p as u64) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (&a, &b) in self.row(r).iter().zip(v) {
                    acc = (acc + a as u64 * b as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "mat_add: shapes differ"
        );
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Mat { data, ..*self }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "mat_sub: shapes differ"
        );
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Mat { data, ..*self }
    }

    pub fn scale(&self, s: u32) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Mat { data, ..*self }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &Mat, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        axpy(f, &mut self.data, &other.data, s, 0);
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack: row counts differ");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Mat {
            rows: self.rows,
            cols,
            data,
            field: self.field,
        }
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack: column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            field: self.field,
        }
    }

    /// Horizontal concatenation of any number of blocks with equal row counts.
    pub fn hconcat(field: Field, rows: usize, blocks: &[Mat]) -> Mat {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation of blocks with equal column counts.
    pub fn vconcat(field: Field, cols: usize, blocks: &[Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Mat {
            rows,
            cols,
            data,
            field,
        }
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: Field, blocks: &[Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a == 0 {
                    continue;
                }
                for rr in 0..other.rows {
                    for cc in 0..other.cols {
                        let v = f.mul(a, other.get(rr, cc));
                        out.set(r * other.rows + rr, c * other.cols + cc, v);
                    }
                }
            }
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(r));
        }
    }

    /// Adds `s * block` into the block at `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Mat, s: u32) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        let f = self.field;
        for r in 0..block.rows {
            let dst = (r0 + r) * self.cols + c0;
            axpy(f, &mut self.data[dst..dst + block.cols], block.row(r), s, 0);
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Mat::zeros(self.field, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            out.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Mat {
            rows: idx.len(),
            cols: self.cols,
            data,
            field: self.field,
        }
    }

    /// Flattens row-major into a single vector.
    pub fn to_vec(&self) -> Vec<u32> {
        self.data.clone()
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    fn rref_in_place(&mut self, reduced: bool) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == rows {
                break;
            }
            let Some(sel) = (prow..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if sel != prow {
                for k in c..cols {
                    self.data.swap(sel * cols + k, prow * cols + k);
                }
            }
            let inv = f.inv(self.data[prow * cols + c]);
            if inv != 1 {
                for k in c..cols {
                    let x = &mut self.data[prow * cols + k];
                    *x = f.mul(*x, inv);
                }
            }
            let (head, tail) = self.data.split_at_mut(prow * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            for r in 0..rest.len() / cols {
                let row = &mut rest[r * cols..(r + 1) * cols];
                let x = row[c];
                if x != 0 {
                    axpy(f, row, pivot_row, f.neg(x), c);
                }
            }
            if reduced {
                for r in 0..prow {
                    let row = &mut head[r * cols..(r + 1) * cols];
                    let x = row[c];
                    if x != 0 {
                        axpy(f, row, pivot_row, f.neg(x), c);
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    /// Reduced row echelon form together with the ordered pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(true);
        (m, piv)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        let mut m = if self.rows < self.cols {
            self.transpose()
        } else {
            self.clone()
        };
        m.rref_in_place(false).len()
    }

    /// Basis of the right null space, as columns. Each basis vector has a 1 at
    /// its own free column and 0 at every other free column.
    pub fn kernel_basis(&self) -> Mat {
        self.kernel_with_free().0
    }

    /// Kernel basis together with its free columns; the coordinates of a
    /// kernel vector in this basis are its entries at the free columns.
    pub fn kernel_with_free(&self) -> (Mat, Vec<usize>) {
        let (r, piv) = self.rref();
        let free: Vec<usize> = {
            let mut is_piv = vec![false; self.cols];
            piv.iter().for_each(|&c| is_piv[c] = true);
            (0..self.cols).filter(|&c| !is_piv[c]).collect()
        };
        let f = self.field;
        let mut k = Mat::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &pc) in piv.iter().enumerate() {
                k.set(pc, j, f.neg(r.get(i, fc)));
            }
        }
        (k, free)
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent. Free
    /// variables are set to zero.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>, Error> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch("solve: a.rows != b.rows"));
        }
        let n = self.cols;
        let aug = self.hstack(b);
        let (r, piv) = aug.rref();
        if piv.iter().any(|&c| c >= n) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, n, b.cols);
        for (i, &pc) in piv.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(i, n + j));
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` when singular or not square.
    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols || self.rank() != self.rows {
            return None;
        }
        self.solve(&Mat::identity(self.field, self.rows))
            .ok()
            .flatten()
    }

    /// Columns of `self` at its pivot columns: a basis of the column space.
    pub fn column_space(&self) -> Mat {
        let (_, piv) = self.rref();
        self.select_columns(&piv)
    }
}

/// A subspace of `k^n` held in reduced row echelon form (rows span it).
///
/// Supports membership, coordinates and quotient bookkeeping. The quotient
/// `k^n / U` is identified with the coordinates at the non-pivot positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    echelon: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the columns of `gens`.
    pub fn span_of_columns(gens: &Mat) -> Subspace {
        Self::span_of_rows(&gens.transpose())
    }

    /// Span of the rows of `gens`.
    pub fn span_of_rows(gens: &Mat) -> Subspace {
        let (r, piv) = gens.rref();
        let echelon = r.select_rows(&(0..piv.len()).collect::<Vec<_>>());
        Subspace {
            ambient: gens.cols(),
            echelon,
            pivots: piv,
        }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            echelon: Mat::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as columns of an `ambient x dim` matrix.
    pub fn basis(&self) -> Mat {
        self.echelon.transpose()
    }

    /// Reduces `v` modulo the subspace in place.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.echelon.field();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let x = v[pc];
            if x != 0 {
                axpy(f, v, self.echelon.row(i), f.neg(x), pc);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Positions not among the pivots: coordinates on the quotient.
    pub fn complement_positions(&self) -> Vec<usize> {
        let mut is_piv = vec![false; self.ambient];
        self.pivots.iter().for_each(|&c| is_piv[c] = true);
        (0..self.ambient).filter(|&c| !is_piv[c]).collect()
    }

    /// Projection `k^n -> k^n / U` as a `(n - dim) x n` matrix.
    pub fn quotient_projection(&self) -> Mat {
        let f = self.echelon.field();
        let comp = self.complement_positions();
        let mut pos = vec![usize::MAX; self.ambient];
        comp.iter().enumerate().for_each(|(i, &c)| pos[c] = i);
        let mut p = Mat::zeros(f, comp.len(), self.ambient);
        for (i, &c) in comp.iter().enumerate() {
            p.set(i, c, 1);
        }
        for (i, &pc) in self.pivots.iter().enumerate() {
            for (j, &c) in comp.iter().enumerate() {
                let x = self.echelon.get(i, c);
                if x != 0 {
                    p.set(j, pc, f.neg(x));
                }
            }
        }
        p
    }

    /// Section of the quotient projection: unit vectors at the complement positions.
    pub fn quotient_section(&self) -> Mat {
        let f = self.echelon.field();
        let comp = self.complement_positions();
        let mut s = Mat::zeros(f, self.ambient, comp.len());
        for (j, &c) in comp.iter().enumerate() {
            s.set(c, j, 1);
        }
        s
    }

    /// Greedily picks, in order, the columns of `candidates` that extend this
    /// subspace; returns their indices and the enlarged subspace.
    pub fn extend_by_columns(&self, candidates: &Mat) -> (Vec<usize>, Subspace) {
        let f = self.echelon.field();
        let mut rows: Vec<Vec<u32>> = (0..self.dim())
            .map(|i| self.echelon.row(i).to_vec())
            .collect();
        let mut pivots = self.pivots.clone();
        let mut chosen = Vec::new();
        for j in 0..candidates.cols() {
            let mut v = candidates.column(j);
            for (row, &pc) in rows.iter().zip(&pivots) {
                let x = v[pc];
                if x != 0 {
                    axpy(f, &mut v, row, f.neg(x), 0);
                }
            }
            if let Some(pc) = v.iter().position(|&x| x != 0) {
                let inv = f.inv(v[pc]);
                v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                // keep rows reduced at the new pivot
                for row in rows.iter_mut() {
                    let x = row[pc];
                    if x != 0 {
                        axpy(f, row, &v, f.neg(x), 0);
                    }
                }
                rows.push(v);
                pivots.push(pc);
                chosen.push(j);
            }
        }
        let mut order: Vec<usize> = (0..pivots.len()).collect();
        order.sort_by_key(|&i| pivots[i]);
        let echelon = Mat::from_vec(
            f,
            order.len(),
            self.ambient,
            order
                .iter()
                .flat_map(|&i| rows[i].iter().copied())
                .collect(),
        );
        let pivots = order.iter().map(|&i| pivots[i]).collect();
        (
            chosen,
            Subspace {
                ambient: self.ambient,
                echelon,
                pivots,
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn field_rejects_composites_and_bounds() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(1 << 31).is_err());
        assert!(Field::new(2_147_483_647).is_ok());
        let f = gf(7);
        assert_eq!(f.mul(f.inv(3), 3), 1);
        assert_eq!(f.reduce(-1), 6);
    }

    #[test]
    fn rref_examples() {
        let f = gf(2);
        let (r, piv) = Mat::from_rows(f, &[[1, 1], [1, 1]]).unwrap().rref();
        assert_eq!(r, Mat::from_rows(f, &[[1, 1], [0, 0]]).unwrap());
        assert_eq!(piv, [0]);

        let id = Mat::identity(gf(3), 4);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, [0, 1, 2, 3]);

        // Hand reduction over GF(5): scale row 0 by 2^{-1} = 3, then clear row 1.
        let f = gf(5);
        let (r, piv) = Mat::from_rows(f, &[[2, 4], [1, 2]]).unwrap().rref();
        assert_eq!(r, Mat::from_rows(f, &[[1, 2], [0, 0]]).unwrap());
        assert_eq!(piv, [0]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2);
        let k = Mat::zeros(f, 2, 3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 3));
        assert_eq!(k.rank(), 3);
        assert_eq!(Mat::identity(f, 3).kernel_basis().cols(), 0);
        // Enumerating GF(2)^2: only [1,1] is a nonzero solution of x + y = 0.
        let k = Mat::from_rows(f, &[[1, 1]]).unwrap().kernel_basis();
        assert_eq!(k, Mat::from_rows(f, &[[1], [1]]).unwrap());
    }

    #[test]
    fn solve_examples() {
        let f = gf(2);
        let b = Mat::from_rows(f, &[[1, 0], [1, 1]]).unwrap();
        assert_eq!(Mat::identity(f, 2).solve(&b).unwrap(), Some(b.clone()));
        let x = Mat::from_rows(f, &[[1, 1]])
            .unwrap()
            .solve(&Mat::from_rows(f, &[[1]]).unwrap());
        let x = x.unwrap().unwrap();
        let sols = [
            Mat::from_rows(f, &[[1], [0]]).unwrap(),
            Mat::from_rows(f, &[[0], [1]]).unwrap(),
        ];
        assert!(sols.contains(&x));
        let none = Mat::from_rows(f, &[[0]])
            .unwrap()
            .solve(&Mat::from_rows(f, &[[1]]).unwrap());
        assert_eq!(none.unwrap(), None);
        assert!(Mat::identity(f, 2).solve(&Mat::zeros(f, 3, 1)).is_err());
    }

    #[test]
    fn subspace_quotient_round_trip() {
        let f = gf(3);
        let u = Subspace::span_of_columns(&Mat::from_rows(f, &[[1], [2], [0]]).unwrap());
        let p = u.quotient_projection();
        let s = u.quotient_section();
        assert!(p.mul(&s).is_identity());
        assert!(p.mul(&u.basis()).is_zero());
        assert_eq!(p.rows(), 2);
    }

    #[test]
    fn extend_by_columns_skips_dependent_candidates() {
        let f = gf(2);
        let base = Subspace::span_of_columns(&Mat::from_rows(f, &[[1], [0], [0]]).unwrap());
        let cand = Mat::from_rows(f, &[[1, 0, 1], [0, 1, 1], [0, 0, 0]]).unwrap();
        let (chosen, ext) = base.extend_by_columns(&cand);
        assert_eq!(chosen, [1]);
        assert_eq!(ext.dim(), 2);
    }
}

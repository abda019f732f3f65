//! Linear algebra over the supported rings with the left-module
//! convention: scalars act on the left of row vectors, so row operations
//! multiply rows by scalars on the left.
//!
//! Row reduction, solving and rank are only defined over division rings.
//! For quaternion and matrix-ring inputs an independent rank oracle is
//! available through the left-regular representation into base-field
//! matrices; it is used by tests and certificate cross-checks, never on
//! the main computational path.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_rational::BigRational;

use thiserror::Error;

use crate::ring::{RingError, RingKind, RingValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("operation requires a division ring, got {0}")]
    NotADivisionRing(String),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Dense matrix with entries in a single ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    kind: RingKind,
    data: Vec<RingValue>,
}

impl Index<(usize, usize)> for Mat {
    type Output = RingValue;
    fn index(&self, (i, j): (usize, usize)) -> &RingValue {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RingValue {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[ ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Result of row reduction: the reduced matrix, its pivot columns and,
/// when tracking was requested, an invertible transform with
/// `reduced = transform · input`.
#[derive(Debug, Clone)]
pub struct Reduced {
    pub mat: Mat,
    pub pivots: Vec<usize>,
    pub transform: Option<Mat>,
}

impl Reduced {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Mat {
    pub fn new(rows: usize, cols: usize, kind: RingKind, data: Vec<RingValue>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        for v in &data {
            assert_eq!(v.kind(), kind, "entry from a different ring");
        }
        Mat {
            rows,
            cols,
            kind,
            data,
        }
    }

    pub fn zeros(rows: usize, cols: usize, kind: RingKind) -> Mat {
        Mat {
            rows,
            cols,
            kind,
            data: vec![kind.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, kind: RingKind) -> Mat {
        let mut m = Mat::zeros(n, n, kind);
        for i in 0..n {
            m[(i, i)] = kind.one();
        }
        m
    }

    pub fn from_rows(kind: RingKind, rows: &[Vec<RingValue>]) -> Mat {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Mat::new(rows.len(), cols, kind, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn row(&self, i: usize) -> &[RingValue] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingValue::is_zero)
    }

    fn require_division_ring(&self) -> Result<(), LinalgError> {
        if self.kind.is_division_ring() {
            Ok(())
        } else {
            Err(LinalgError::NotADivisionRing(self.kind.name()))
        }
    }

    /// Gaussian elimination to reduced row echelon form with left row
    /// scaling only. Deterministic pivot rule: columns are scanned left to
    /// right and the first nonzero entry from the top down is the pivot.
    pub fn row_reduce(&self) -> Result<Reduced, LinalgError> {
        self.reduce_inner(false)
    }

    /// Same as [`Mat::row_reduce`] but also records the invertible
    /// transform applied to the rows.
    pub fn row_reduce_tracked(&self) -> Result<Reduced, LinalgError> {
        self.reduce_inner(true)
    }

    fn reduce_inner(&self, tracked: bool) -> Result<Reduced, LinalgError> {
        self.require_division_ring()?;
        let mut m = self.clone();
        let mut t = tracked.then(|| Mat::identity(self.rows, self.kind));
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pivot_row) = (next_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if pivot_row != next_row {
                m.swap_rows(pivot_row, next_row);
                if let Some(t) = &mut t {
                    t.swap_rows(pivot_row, next_row);
                }
            }
            let scale = m[(next_row, col)].try_invert().expect("nonzero in division ring");
            m.scale_row_left(next_row, &scale);
            if let Some(t) = &mut t {
                t.scale_row_left(next_row, &scale);
            }
            for r in 0..m.rows {
                if r == next_row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                m.sub_scaled_row(r, next_row, &factor);
                if let Some(t) = &mut t {
                    t.sub_scaled_row(r, next_row, &factor);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        Ok(Reduced {
            mat: m,
            pivots,
            transform: t,
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row_left(&mut self, r: usize, c: &RingValue) {
        for j in 0..self.cols {
            self[(r, j)] = c.mul(&self[(r, j)]);
        }
    }

    /// row_r -= c · row_s
    fn sub_scaled_row(&mut self, r: usize, s: usize, c: &RingValue) {
        for j in 0..self.cols {
            let t = c.mul(&self[(s, j)]);
            self[(r, j)] = self[(r, j)].sub(&t);
        }
    }

    pub fn rank(&self) -> Result<usize, LinalgError> {
        Ok(self.row_reduce()?.rank())
    }

    pub fn is_invertible(&self) -> Result<bool, LinalgError> {
        Ok(self.rows == self.cols && self.rank()? == self.rows)
    }

    /// Left coefficients `c` with `Σ cᵢ · rowᵢ(self) = target`, or `None`.
    pub fn solve_left(&self, target: &[RingValue]) -> Result<Option<Vec<RingValue>>, LinalgError> {
        if target.len() != self.cols {
            return Err(LinalgError::Shape(format!(
                "target length {} vs {} columns",
                target.len(),
                self.cols
            )));
        }
        let red = self.row_reduce_tracked()?;
        let transform = red.transform.as_ref().unwrap();
        // express the target in terms of the reduced rows, then pull the
        // coefficients back through the transform
        let mut residual: Vec<RingValue> = target.to_vec();
        let mut coeffs = vec![self.kind.zero(); self.rows];
        for (i, &p) in red.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let t = c.mul(&red.mat[(i, j)]);
                residual[j] = residual[j].sub(&t);
            }
            coeffs[i] = c;
        }
        if residual.iter().any(|v| !v.is_zero()) {
            return Ok(None);
        }
        let mut out = vec![self.kind.zero(); self.rows];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.rows {
                let t = c.mul(&transform[(i, j)]);
                out[j] = out[j].add(&t);
            }
        }
        Ok(Some(out))
    }

    /// Right unknowns: a vector `x` with `self · x = rhs` where entries of
    /// `x` multiply matrix entries from the right. Free coordinates are set
    /// to zero.
    pub fn solve_right(&self, rhs: &[RingValue]) -> Result<Option<Vec<RingValue>>, LinalgError> {
        if rhs.len() != self.rows {
            return Err(LinalgError::Shape(format!(
                "rhs length {} vs {} rows",
                rhs.len(),
                self.rows
            )));
        }
        // left row operations preserve solutions of M·x = b when applied
        // to the augmented matrix [M | b]
        let mut aug = Mat::zeros(self.rows, self.cols + 1, self.kind);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let red = aug.row_reduce()?;
        if red.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.kind.zero(); self.cols];
        for (i, &p) in red.pivots.iter().enumerate() {
            // pivot columns are cleared above and below, and entries right
            // of the pivot sit on free columns, which stay zero
            let mut v = red.mat[(i, self.cols)].clone();
            for j in (p + 1)..self.cols {
                if !red.mat[(i, j)].is_zero() && !x[j].is_zero() {
                    let t = red.mat[(i, j)].mul(&x[j]);
                    v = v.sub(&t);
                }
            }
            x[p] = v;
        }
        Ok(Some(x))
    }

    /// Basis (as matrix rows) of `{ c : c · self = 0 }`.
    pub fn left_kernel(&self) -> Result<Mat, LinalgError> {
        let red = self.row_reduce_tracked()?;
        let t = red.transform.as_ref().unwrap();
        let mut rows = Vec::new();
        for i in red.rank()..self.rows {
            rows.push(t.row(i).to_vec());
        }
        if rows.is_empty() {
            Ok(Mat::zeros(0, self.rows, self.kind))
        } else {
            Ok(Mat::from_rows(self.kind, &rows))
        }
    }

    /// Stacks another matrix below this one.
    pub fn stacked(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.kind, other.kind);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat::new(self.rows + other.rows, self.cols, self.kind, data)
    }

    /// Rewrites the matrix over the base field through the left-regular
    /// representation: quaternion entries become 4×4 rational blocks,
    /// matrix-ring entries their own k×k blocks; field entries are kept.
    pub fn regular_rep(&self) -> Mat {
        match self.kind {
            RingKind::QuaternionOverRational => {
                let mut out = Mat::zeros(4 * self.rows, 4 * self.cols, RingKind::Rational);
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let RingValue::Quaternion(q) = &self[(i, j)] else {
                            unreachable!()
                        };
                        let block = quaternion_left_block(q);
                        for (s, row) in block.iter().enumerate() {
                            for (t, v) in row.iter().enumerate() {
                                out[(4 * i + s, 4 * j + t)] = RingValue::Rational(v.clone());
                            }
                        }
                    }
                }
                out
            }
            RingKind::MatrixRing { k, base } => {
                let mut out = Mat::zeros(k * self.rows, k * self.cols, base.kind());
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        for s in 0..k {
                            for t in 0..k {
                                out[(k * i + s, k * j + t)] =
                                    self[(i, j)].matrix_entry(s, t).clone();
                            }
                        }
                    }
                }
                out
            }
            RingKind::Rational | RingKind::PrimeField(_) => self.clone(),
            RingKind::DualOverRational => {
                // a + bε acts on the basis (1, ε) by [[a, b], [0, a]]
                let mut out = Mat::zeros(2 * self.rows, 2 * self.cols, RingKind::Rational);
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        let RingValue::Dual(d) = &self[(i, j)] else {
                            unreachable!()
                        };
                        out[(2 * i, 2 * j)] = RingValue::Rational(d[0].clone());
                        out[(2 * i, 2 * j + 1)] = RingValue::Rational(d[1].clone());
                        out[(2 * i + 1, 2 * j + 1)] = RingValue::Rational(d[0].clone());
                    }
                }
                out
            }
        }
    }

    fn rep_block_size(&self) -> usize {
        match self.kind {
            RingKind::QuaternionOverRational => 4,
            RingKind::MatrixRing { k, .. } => k,
            RingKind::DualOverRational => 2,
            _ => 1,
        }
    }

    /// Rank through the left-regular representation; the independent
    /// oracle for [`Mat::rank`] on division rings, and the invertibility
    /// route for matrix rings.
    pub fn rank_via_regular_rep(&self) -> Result<usize, LinalgError> {
        let block = self.rep_block_size();
        let rank = self.regular_rep().rank()?;
        assert_eq!(rank % block, 0, "regular representation rank not divisible");
        Ok(rank / block)
    }

    /// Invertibility over an arbitrary supported ring: a square matrix is
    /// invertible exactly when its base-field image is.
    pub fn is_invertible_via_base(&self) -> Result<bool, LinalgError> {
        if self.rows != self.cols {
            return Ok(false);
        }
        let rep = self.regular_rep();
        Ok(rep.rank()? == rep.rows())
    }
}

/// Coordinates of the left multiplication by `a + bi + cj + dk` on the
/// basis (1, i, j, k): row s holds the coordinates of basis(s) · q.
fn quaternion_left_block(q: &[BigRational; 4]) -> [[BigRational; 4]; 4] {
    let (a, b, c, d) = (&q[0], &q[1], &q[2], &q[3]);
    [
        [a.clone(), b.clone(), c.clone(), d.clone()],
        [-b.clone(), a.clone(), -d.clone(), c.clone()],
        [-c.clone(), d.clone(), a.clone(), -b.clone()],
        [-d.clone(), -c.clone(), b.clone(), a.clone()],
    ]
}

/// Row-space membership and subspace helpers shared by the geometric
/// coherence oracles. All of these reduce to ranks of stacked matrices.
pub fn subspace_dim(basis: &Mat) -> Result<usize, LinalgError> {
    basis.rank()
}

/// dim(row(a) ∩ row(b)) computed as dim a + dim b − dim(a + b).
pub fn intersection_dim(a: &Mat, b: &Mat) -> Result<usize, LinalgError> {
    let da = a.rank()?;
    let db = b.rank()?;
    let ds = a.stacked(b).rank()?;
    Ok(da + db - ds)
}

/// True when row(a) and row(b) span the same subspace.
pub fn same_rowspace(a: &Mat, b: &Mat) -> Result<bool, LinalgError> {
    let da = a.rank()?;
    let db = b.rank()?;
    Ok(da == db && a.stacked(b).rank()? == da)
}

/// Basis of row(a) ∩ row(b), via the left kernel of the stacked matrix.
pub fn intersection_basis(a: &Mat, b: &Mat) -> Result<Mat, LinalgError> {
    let stacked = a.stacked(b);
    let kernel = stacked.left_kernel()?;
    let mut rows = Vec::new();
    for i in 0..kernel.rows() {
        let mut v = vec![a.kind().zero(); a.cols()];
        let coeffs = &kernel.row(i)[..a.rows()];
        for (r, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..a.cols() {
                let t = c.mul(&a[(r, j)]);
                v[j] = v[j].add(&t);
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            rows.push(v);
        }
    }
    if rows.is_empty() {
        Ok(Mat::zeros(0, a.cols(), a.kind()))
    } else {
        Ok(Mat::from_rows(a.kind(), &rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BaseField;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn q(a: i64, b: i64, c: i64, d: i64) -> RingValue {
        RingValue::quaternion_i64(a, b, c, d)
    }

    #[test]
    fn identity_is_invertible() {
        for n in 1..=4 {
            let m = Mat::identity(n, RingKind::PrimeField(5));
            assert!(m.is_invertible().unwrap());
            assert_eq!(m.rank().unwrap(), n);
        }
    }

    #[test]
    fn row_reduce_rejects_non_division_rings() {
        let kind = RingKind::MatrixRing {
            k: 2,
            base: BaseField::Prime(3),
        };
        let m = Mat::identity(2, kind);
        assert!(matches!(
            m.row_reduce(),
            Err(LinalgError::NotADivisionRing(_))
        ));
        assert!(m.is_invertible_via_base().unwrap());
    }

    #[test]
    fn pairing_matrix_with_noncommuting_labels_is_invertible() {
        // [[a⁻¹, b, 1], [1, 1, 1], [a⁻¹, 1, 1]] with a = i, b = j
        let kind = RingKind::QuaternionOverRational;
        let a_inv = q(0, 1, 0, 0).try_invert().unwrap();
        let one = kind.one();
        let m = Mat::from_rows(
            kind,
            &[
                vec![a_inv.clone(), q(0, 0, 1, 0), one.clone()],
                vec![one.clone(), one.clone(), one.clone()],
                vec![a_inv, one.clone(), one.clone()],
            ],
        );
        assert!(m.is_invertible().unwrap());
        // independent route: rank of the 12×12 rational matrix
        assert_eq!(m.rank_via_regular_rep().unwrap(), 3);
    }

    #[test]
    fn k44_pairing_matrix_drops_rank_when_a_is_one() {
        // [[1,1,1,b],[1,b⁻¹,1,1],[a,a,1,b],[1,b⁻¹,a⁻¹,a⁻¹]] at a = 1, b = j
        let kind = RingKind::QuaternionOverRational;
        let one = kind.one();
        let b = q(0, 0, 1, 0);
        let bi = b.try_invert().unwrap();
        let m = Mat::from_rows(
            kind,
            &[
                vec![one.clone(), one.clone(), one.clone(), b.clone()],
                vec![one.clone(), bi.clone(), one.clone(), one.clone()],
                vec![one.clone(), one.clone(), one.clone(), b.clone()],
                vec![one.clone(), bi.clone(), one.clone(), one.clone()],
            ],
        );
        assert!(!m.is_invertible().unwrap());
        assert_eq!(m.rank().unwrap(), m.rank_via_regular_rep().unwrap());
    }

    #[test]
    fn solve_left_standard_basis() {
        let kind = RingKind::Rational;
        let rows = Mat::from_rows(
            kind,
            &[
                vec![kind.one(), kind.zero()],
                vec![kind.zero(), kind.one()],
            ],
        );
        let target = vec![kind.from_integer(2), kind.from_integer(3)];
        let c = rows.solve_left(&target).unwrap().unwrap();
        assert_eq!(c, vec![kind.from_integer(2), kind.from_integer(3)]);
    }

    #[test]
    fn solve_left_no_solution() {
        let kind = RingKind::Rational;
        let rows = Mat::from_rows(kind, &[vec![kind.one(), kind.zero()]]);
        let target = vec![kind.zero(), kind.one()];
        assert!(rows.solve_left(&target).unwrap().is_none());
    }

    #[test]
    fn solve_left_quaternion_rows() {
        // rows (1,1,1), (1,i,0); target (2, 1+i, 1) decomposes as 1·r0 + 1·r1
        let kind = RingKind::QuaternionOverRational;
        let one = kind.one();
        let rows = Mat::from_rows(
            kind,
            &[
                vec![one.clone(), one.clone(), one.clone()],
                vec![one.clone(), q(0, 1, 0, 0), kind.zero()],
            ],
        );
        let target = vec![kind.from_integer(2), q(1, 1, 0, 0), one.clone()];
        let c = rows.solve_left(&target).unwrap().unwrap();
        assert_eq!(c, vec![one.clone(), one.clone()]);
        // recombine to make sure the convention is left coefficients
        let mut acc = vec![kind.zero(); 3];
        for (i, ci) in c.iter().enumerate() {
            for j in 0..3 {
                acc[j] = acc[j].add(&ci.mul(&rows[(i, j)]));
            }
        }
        assert_eq!(acc, target);
    }

    #[test]
    fn solve_right_round_trips() {
        let kind = RingKind::QuaternionOverRational;
        let m = Mat::from_rows(
            kind,
            &[
                vec![q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 0, 0)],
                vec![q(0, 0, 1, 0), q(1, 1, 0, 0), q(0, 0, 0, 1)],
                vec![q(1, 1, 1, 1), q(0, 0, 0, 0), q(2, 0, 0, 0)],
            ],
        );
        let x_true = vec![q(1, 2, 0, 0), q(0, 0, 3, 0), q(0, 1, 1, 0)];
        let mut rhs = Vec::new();
        for i in 0..3 {
            let mut acc = kind.zero();
            for j in 0..3 {
                acc = acc.add(&m[(i, j)].mul(&x_true[j]));
            }
            rhs.push(acc);
        }
        let x = m.solve_right(&rhs).unwrap().unwrap();
        assert_eq!(x, x_true);
    }

    #[test]
    fn left_kernel_annihilates() {
        let kind = RingKind::PrimeField(5);
        let m = Mat::from_rows(
            kind,
            &[
                vec![kind.from_integer(1), kind.from_integer(2)],
                vec![kind.from_integer(2), kind.from_integer(4)],
                vec![kind.from_integer(0), kind.from_integer(1)],
            ],
        );
        let ker = m.left_kernel().unwrap();
        assert_eq!(ker.rows(), 1);
        for i in 0..ker.rows() {
            for j in 0..m.cols() {
                let mut acc = kind.zero();
                for r in 0..m.rows() {
                    acc = acc.add(&ker[(i, r)].mul(&m[(r, j)]));
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn regular_rep_is_a_homomorphism() {
        let x = q(1, 2, -1, 3);
        let y = q(0, 1, 1, -2);
        let mx = Mat::from_rows(RingKind::QuaternionOverRational, &[vec![x.clone()]]).regular_rep();
        let my = Mat::from_rows(RingKind::QuaternionOverRational, &[vec![y.clone()]]).regular_rep();
        let mxy =
            Mat::from_rows(RingKind::QuaternionOverRational, &[vec![x.mul(&y)]]).regular_rep();
        // multiply the 4×4 rational blocks directly
        let mut prod = Mat::zeros(4, 4, RingKind::Rational);
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = RingKind::Rational.zero();
                for t in 0..4 {
                    acc = acc.add(&mx[(i, t)].mul(&my[(t, j)]));
                }
                prod[(i, j)] = acc;
            }
        }
        assert_eq!(prod, mxy);
    }

    #[test]
    fn rank_matches_regular_rep_oracle_on_random_quaternion_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let kind = RingKind::QuaternionOverRational;
        let pool: Vec<RingValue> = {
            let mut p = kind.unit_pool();
            p.push(kind.zero());
            p
        };
        for _ in 0..40 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let data: Vec<RingValue> = (0..rows * cols)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            let m = Mat::new(rows, cols, kind, data);
            assert_eq!(m.rank().unwrap(), m.rank_via_regular_rep().unwrap());
        }
    }

    #[test]
    fn subspace_helpers_over_f3() {
        let kind = RingKind::PrimeField(3);
        let e = |v: &[i64]| -> Vec<RingValue> { v.iter().map(|&x| kind.from_integer(x)).collect() };
        let a = Mat::from_rows(kind, &[e(&[1, 0, 0]), e(&[0, 1, 0])]);
        let b = Mat::from_rows(kind, &[e(&[0, 1, 0]), e(&[0, 0, 1])]);
        assert_eq!(intersection_dim(&a, &b).unwrap(), 1);
        let basis = intersection_basis(&a, &b).unwrap();
        assert_eq!(basis.rank().unwrap(), 1);
        // contained in both
        assert_eq!(a.stacked(&basis).rank().unwrap(), 2);
        assert_eq!(b.stacked(&basis).rank().unwrap(), 2);
        assert!(!same_rowspace(&a, &b).unwrap());
        assert!(same_rowspace(&a, &a).unwrap());
    }
}

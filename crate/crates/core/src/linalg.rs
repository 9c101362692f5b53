//! Dense exact matrices and the tensor-flattening convention.
//!
//! A linear map `V -> W` is a `dim W x dim V` matrix acting on column
//! vectors. Tensor products are flattened row-major: the basis vector
//! `e_{i1} ⊗ ... ⊗ e_{im}` of `V1 ⊗ ... ⊗ Vm` has flat index
//! `((i1·d2 + i2)·d3 + ...)`, and [`kron`] follows the same order, so
//! `kron(f, g)` is the matrix of `f ⊗ g`.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldError, FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is not invertible")]
    NotInvertible,
}

impl From<FieldError> for LinalgError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::FieldMismatch(a, b) => LinalgError::FieldMismatch(a, b),
            // only reachable through a pivot of zero, which elimination never picks
            other => panic!("unexpected scalar error in linear algebra: {other}"),
        }
    }
}

/// Factor dimensions of a tensor-product space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: &[usize]) -> TensorIndex {
        assert!(dims.iter().all(|&d| d > 0), "tensor factor of dimension 0");
        TensorIndex { dims: dims.to_vec() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.dims.len());
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        out
    }
}

/// A dense matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                assert_eq!(v.field(), field, "entry ({r},{c}) in wrong field");
                data.push(v);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Small integer matrices, mostly for tests and fixtures.
    pub fn from_i64_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// A single column built from a coefficient vector.
    pub fn column_vector(field: FieldSpec, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    /// A single row built from a coefficient vector.
    pub fn row_vector(field: FieldSpec, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, 1, v.len(), |_, j| v[j].clone())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        assert_eq!(v.field(), self.field, "entry in wrong field");
        self.data[r * self.cols + c] = v;
    }

    /// `self[r][c] += v`.
    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.data[r * self.cols + c] += v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Nonzero entries of column `c` as `(row, value)`.
    pub fn column_nonzeros(&self, c: usize) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        (0..self.rows)
            .map(move |r| (r, self.get(r, c)))
            .filter(|(_, v)| !v.is_zero())
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, v)| {
                if k / self.cols == k % self.cols {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(LinalgError::FieldMismatch(self.field, other.field))
        }
    }

    /// Matrix product `self · other`, i.e. the composite "`other` first, then `self`".
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut sparse_rows: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.nonzeros() {
            sparse_rows[r].push((c, v));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in &sparse_rows[k] {
                    out.data[i * other.cols + j].add_product(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Composite of a chain of maps written left to right as in `f ∘ g ∘ h`.
    pub fn compose(chain: &[&Matrix]) -> Result<Matrix, LinalgError> {
        let (last, rest) = chain.split_last().expect("empty composition");
        rest.iter().rev().try_fold((*last).clone(), |acc, m| m.matmul(&acc))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { data, ..*self }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Applies the map to a coefficient vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Entrywise equality after checking shapes; used by the identity checkers.
    pub fn same_as(&self, other: &Matrix) -> bool {
        self.shape() == other.shape() && self.data == other.data
    }

    /// First entry where two equally shaped matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!(self.shape(), other.shape());
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn rank(&self) -> usize {
        rref(self.clone()).1.len()
    }

    /// A basis of the null space, as columns of the returned matrix.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = rref(self.clone());
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, self.field.one());
            for (row, &p) in pivots.iter().enumerate() {
                k.set(p, j, -r.get(row, f));
            }
        }
        k
    }
}

/// Reduced row echelon form and pivot columns.
fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        swap_rows(&mut m, row, p);
        let inv = m.get(row, col).inv().expect("pivot is nonzero");
        for c in col..m.cols {
            let v = &m.data[row * m.cols + c] * &inv;
            m.data[row * m.cols + c] = v;
        }
        let pivot_row: Vec<(usize, Scalar)> = (col..m.cols)
            .filter(|&c| !m.get(row, c).is_zero())
            .map(|c| (c, m.get(row, c).clone()))
            .collect();
        for r in 0..m.rows {
            if r == row || m.get(r, col).is_zero() {
                continue;
            }
            let factor = -m.get(r, col);
            for (c, v) in &pivot_row {
                m.data[r * m.cols + c].add_product(&factor, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..m.cols {
        m.data.swap(a * m.cols + c, b * m.cols + c);
    }
}

/// Some `X` with `a·X = b`; the free variables are set to zero. When `a` is
/// square and invertible this is the unique solution.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    a.check_field(b)?;
    if a.rows != b.rows {
        return Err(LinalgError::ShapeMismatch {
            op: "solve",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let n = a.cols;
    let aug = Matrix::from_fn(a.field, a.rows, n + b.cols, |r, c| {
        if c < n {
            a.get(r, c).clone()
        } else {
            b.get(r, c - n).clone()
        }
    });
    let (red, pivots) = rref(aug);
    if pivots.iter().any(|&p| p >= n) {
        return Err(LinalgError::NoSolution);
    }
    let mut x = Matrix::zeros(a.field, n, b.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for c in 0..b.cols {
            x.set(p, c, red.get(row, n + c).clone());
        }
    }
    debug_assert!(a.matmul(&x).unwrap().same_as(b), "solve back-multiplication");
    Ok(x)
}

pub fn invert(a: &Matrix) -> Result<Matrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::ShapeMismatch {
            op: "invert",
            left: a.shape(),
            right: a.shape(),
        });
    }
    if a.rank() < a.rows {
        return Err(LinalgError::NotInvertible);
    }
    let inv = solve(a, &Matrix::identity(a.field, a.rows))?;
    debug_assert!(inv.matmul(a).unwrap().is_identity(), "invert back-multiplication");
    Ok(inv)
}

/// The matrix of `f ⊗ g` under row-major flattening.
pub fn kron(f: &Matrix, g: &Matrix) -> Result<Matrix, LinalgError> {
    f.check_field(g)?;
    let (gr, gc) = g.shape();
    let mut out = Matrix::zeros(f.field, f.rows * gr, f.cols * gc);
    for (r1, c1, a) in f.nonzeros() {
        for (r2, c2, b) in g.nonzeros() {
            out.set(r1 * gr + r2, c1 * gc + c2, a * b);
        }
    }
    Ok(out)
}

/// `kron` over a list of factors, left to right.
pub fn kron_all(factors: &[&Matrix]) -> Result<Matrix, LinalgError> {
    let (first, rest) = factors.split_first().expect("empty tensor product");
    rest.iter().try_fold((*first).clone(), |acc, m| kron(&acc, m))
}

/// The flip `τ: V ⊗ W -> W ⊗ V` for `dim V = m`, `dim W = n`.
pub fn switch(m: usize, n: usize, field: FieldSpec) -> Matrix {
    permute_factors(&[m, n], &[1, 0], field)
}

/// The permutation matrix reordering tensor factors: output factor `k` is
/// input factor `perm[k]`.
pub fn permute_factors(dims: &[usize], perm: &[usize], field: FieldSpec) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        assert!(p < perm.len() && !seen[p], "not a permutation");
        seen[p] = true;
    }
    let dom = TensorIndex::new(dims);
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let cod = TensorIndex::new(&out_dims);
    let total = dom.total();
    let mut m = Matrix::zeros(field, total, total);
    for flat in 0..total {
        let idx = dom.unflatten(flat);
        let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        m.set(cod.flatten(&out), flat, field.one());
    }
    m
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rows with right-aligned columns, one row per line.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|v| v.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "  [{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> FieldSpec {
        FieldSpec::prime(5).unwrap()
    }

    fn basis(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
        (0..n)
            .map(|k| if k == i { field.one() } else { field.zero() })
            .collect()
    }

    #[test]
    fn kron_examples() {
        let q = FieldSpec::RATIONAL;
        assert!(kron(&Matrix::identity(q, 2), &Matrix::identity(q, 3))
            .unwrap()
            .is_identity());
        let k = kron(
            &Matrix::from_i64_rows(f5(), &[vec![2]]),
            &Matrix::from_i64_rows(f5(), &[vec![3]]),
        )
        .unwrap();
        assert!(k.get(0, 0).is_one());
        let t = TensorIndex::new(&[2, 2, 2]);
        let m = kron(&switch(2, 2, q), &Matrix::identity(q, 2)).unwrap();
        let out = m.apply(&basis(q, 8, t.flatten(&[0, 1, 0])));
        assert_eq!(out, basis(q, 8, t.flatten(&[1, 0, 0])));
    }

    #[test]
    fn switch_examples() {
        let q = FieldSpec::RATIONAL;
        assert!(switch(1, 4, q).is_identity());
        assert!(switch(2, 2, q).get(2, 1).is_one());
        assert!(switch(2, 3, q).matmul(&switch(3, 2, q)).unwrap().is_identity());
        assert!(switch(3, 2, q).transpose().same_as(&switch(2, 3, q)));
    }

    #[test]
    fn switch_moves_factors() {
        let q = FieldSpec::RATIONAL;
        let (m, n) = (2, 3);
        let s = switch(m, n, q);
        for i in 0..m {
            for j in 0..n {
                assert!(s.get(j * m + i, i * n + j).is_one());
            }
        }
    }

    #[test]
    fn permute_factors_cycle() {
        let q = FieldSpec::RATIONAL;
        let dims = [2, 3, 4];
        let p = permute_factors(&dims, &[2, 0, 1], q);
        let dom = TensorIndex::new(&dims);
        let cod = TensorIndex::new(&[4, 2, 3]);
        let v = dom.flatten(&[1, 2, 3]);
        assert_eq!(p.apply(&basis(q, 24, v)), basis(q, 24, cod.flatten(&[3, 1, 2])));
    }

    #[test]
    fn solve_examples() {
        let q = FieldSpec::RATIONAL;
        let b = Matrix::from_i64_rows(q, &[vec![1, 2], vec![3, 4]]);
        assert!(solve(&Matrix::identity(q, 2), &b).unwrap().same_as(&b));
        let x = solve(
            &Matrix::from_i64_rows(q, &[vec![2]]),
            &Matrix::from_i64_rows(q, &[vec![1]]),
        )
        .unwrap();
        assert_eq!(x.get(0, 0).to_string(), "1/2");
        let f3 = FieldSpec::prime(3).unwrap();
        let a = Matrix::from_i64_rows(f3, &[vec![1, 1], vec![0, 1]]);
        let x = solve(&a, &Matrix::identity(f3, 2)).unwrap();
        assert!(x.same_as(&Matrix::from_i64_rows(f3, &[vec![1, 2], vec![0, 1]])));
        assert!(a.matmul(&x).unwrap().is_identity());
    }

    #[test]
    fn singular_and_inconsistent() {
        let q = FieldSpec::RATIONAL;
        let ones = Matrix::from_i64_rows(q, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(invert(&ones), Err(LinalgError::NotInvertible));
        assert_eq!(
            solve(&ones, &Matrix::from_i64_rows(q, &[vec![1], vec![0]])),
            Err(LinalgError::NoSolution)
        );
        assert_eq!(ones.rank(), 1);
        let k = ones.kernel();
        assert_eq!(k.cols(), 1);
        assert!(ones.matmul(&k).unwrap().is_zero());
    }

    #[test]
    fn mismatches() {
        let a = Matrix::identity(FieldSpec::RATIONAL, 2);
        let b = Matrix::identity(f5(), 2);
        assert!(matches!(a.matmul(&b), Err(LinalgError::FieldMismatch(..))));
        assert!(matches!(kron(&a, &b), Err(LinalgError::FieldMismatch(..))));
        let c = Matrix::identity(FieldSpec::RATIONAL, 3);
        assert!(matches!(a.matmul(&c), Err(LinalgError::ShapeMismatch { .. })));
    }

    #[test]
    fn random_invertible_over_gf5() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut found = 0;
        while found < 20 {
            let a = Matrix::from_fn(f5(), 4, 4, |_, _| f5().from_i64(rng.gen_range(0..5)));
            match invert(&a) {
                Ok(inv) => {
                    assert!(a.matmul(&inv).unwrap().is_identity());
                    found += 1;
                }
                Err(e) => {
                    assert_eq!(e, LinalgError::NotInvertible);
                    assert!(a.rank() < 4);
                }
            }
        }
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..4, rows * cols).prop_map(move |v| {
            Matrix::from_fn(FieldSpec::RATIONAL, rows, cols, |r, c| {
                FieldSpec::RATIONAL.from_i64(v[r * cols + c])
            })
        })
    }

    proptest! {
        #[test]
        fn kron_acts_factorwise(f in arb_matrix(2, 3), g in arb_matrix(3, 2)) {
            let q = FieldSpec::RATIONAL;
            let fg = kron(&f, &g).unwrap();
            let dom = TensorIndex::new(&[3, 2]);
            for i in 0..3 {
                for j in 0..2 {
                    let lhs = fg.apply(&basis(q, 6, dom.flatten(&[i, j])));
                    // independent evaluation: outer product of the images
                    let fv = f.column(i);
                    let gv = g.column(j);
                    let rhs: Vec<Scalar> = (0..6).map(|k| &fv[k / 3] * &gv[k % 3]).collect();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }

        #[test]
        fn kron_associative_bilinear(
            a in arb_matrix(2, 2), b in arb_matrix(1, 2), c in arb_matrix(2, 1), d in arb_matrix(1, 2)
        ) {
            let l = kron(&kron(&a, &b).unwrap(), &c).unwrap();
            let r = kron(&a, &kron(&b, &c).unwrap()).unwrap();
            prop_assert!(l.same_as(&r));
            let s = kron(&a, &b.add(&d).unwrap()).unwrap();
            let t = kron(&a, &b).unwrap().add(&kron(&a, &d).unwrap()).unwrap();
            prop_assert!(s.same_as(&t));
        }

        #[test]
        fn switch_involution(m in 1usize..5, n in 1usize..5) {
            let q = FieldSpec::RATIONAL;
            prop_assert!(switch(m, n, q).matmul(&switch(n, m, q)).unwrap().is_identity());
        }

        #[test]
        fn switch_intertwines_kron(f in arb_matrix(2, 3), g in arb_matrix(3, 2)) {
            let q = FieldSpec::RATIONAL;
            let lhs = switch(2, 3, q).matmul(&kron(&f, &g).unwrap()).unwrap();
            let rhs = kron(&g, &f).unwrap().matmul(&switch(3, 2, q)).unwrap();
            prop_assert!(lhs.same_as(&rhs));
        }

        #[test]
        fn kernel_and_solve(a in arb_matrix(3, 4), x in arb_matrix(4, 2)) {
            let b = a.matmul(&x).unwrap();
            let y = solve(&a, &b).unwrap();
            prop_assert!(a.matmul(&y).unwrap().same_as(&b));
            let k = a.kernel();
            prop_assert_eq!(k.cols() + a.rank(), 4);
            prop_assert!(a.matmul(&k).unwrap().is_zero());
        }

        #[test]
        fn flatten_roundtrip(dims in proptest::collection::vec(1usize..4, 1..4), seed in 0usize..1000) {
            let t = TensorIndex::new(&dims);
            let flat = seed % t.total();
            prop_assert_eq!(t.flatten(&t.unflatten(flat)), flat);
        }
    }
}

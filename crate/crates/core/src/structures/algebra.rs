use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::report::{Check, Report, Witness};

use super::StructureError;

/// An associative unital algebra candidate given by structure constants.
/// Construction only checks shapes; the axioms are checked by [`check`](Self::check).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimAlgebra {
    field: FieldSpec,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    basis_names: Option<Vec<String>>,
}

impl FiniteDimAlgebra {
    /// `mult` holds `m[i][j][k]` at `(i·n + j)·n + k`.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<FiniteDimAlgebra, StructureError> {
        check_len("mult", dim * dim * dim, mult.len())?;
        check_len("unit", dim, unit.len())?;
        for s in mult.iter().chain(&unit) {
            if s.field() != field {
                return Err(StructureError::FieldMismatch(field, s.field()));
            }
        }
        Ok(FiniteDimAlgebra {
            field,
            dim,
            mult,
            unit,
            basis_names: None,
        })
    }

    /// Builds the constants from a product table: `product(i, j)` is the
    /// coefficient vector of `e_i · e_j`.
    pub fn from_table(
        field: FieldSpec,
        dim: usize,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<FiniteDimAlgebra, StructureError> {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                check_len("product", dim, v.len())?;
                mult.extend(v);
            }
        }
        FiniteDimAlgebra::new(field, dim, mult, unit)
    }

    /// From an `n x n²` multiplication matrix and an `n x 1` unit column.
    pub fn from_matrices(mult: &Matrix, unit: &Matrix) -> Result<FiniteDimAlgebra, StructureError> {
        let n = mult.rows();
        check_len("mult matrix columns", n * n, mult.cols())?;
        check_len("unit rows", n, unit.rows())?;
        check_len("unit columns", 1, unit.cols())?;
        let field = mult.field();
        let mut m = Vec::with_capacity(n * n * n);
        for ij in 0..n * n {
            for k in 0..n {
                m.push(mult.get(k, ij).clone());
            }
        }
        FiniteDimAlgebra::new(field, n, m, unit.column(0))
    }

    pub fn with_names(mut self, names: Vec<String>) -> FiniteDimAlgebra {
        assert_eq!(names.len(), self.dim);
        self.basis_names = Some(names);
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn m(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// The coefficient vector of `e_i · e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.mult[start..start + self.dim]
    }

    /// Product of two elements given as coefficient vectors.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k].add_product(&xy, c);
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        basis_vector(self.field, self.dim, i)
    }

    pub fn mult_matrix(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n * n, |k, ij| self.m(ij / n, ij % n, k).clone())
    }

    pub fn unit_matrix(&self) -> Matrix {
        Matrix::column_vector(self.field, &self.unit)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    /// Associativity and two-sided unit, checked on structure constants.
    pub fn check(&self) -> Report {
        let n = self.dim;
        let mut r = Report::new("algebra");
        let mut assoc = Check::new("associativity", true);
        'outer: for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let ij = self.product(i, j);
                    let jl = self.product(j, l);
                    let lhs = self.mul(ij, &self.basis_vector(l));
                    let rhs = self.mul(&self.basis_vector(i), jl);
                    if lhs != rhs {
                        assoc = Check::new("associativity", false).with_witness(Some(Witness {
                            indices: vec![i, j, l],
                            lhs,
                            rhs,
                        }));
                        break 'outer;
                    }
                }
            }
        }
        r.push(assoc);
        for (name, left) in [("left unit", true), ("right unit", false)] {
            let mut c = Check::new(name, true);
            for j in 0..n {
                let e = self.basis_vector(j);
                let got = if left {
                    self.mul(&self.unit, &e)
                } else {
                    self.mul(&e, &self.unit)
                };
                if got != e {
                    c = Check::new(name, false).with_witness(Some(Witness {
                        indices: vec![j],
                        lhs: got,
                        rhs: e,
                    }));
                    break;
                }
            }
            r.push(c);
        }
        r
    }
}

pub(crate) fn basis_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|k| if k == i { field.one() } else { field.zero() })
        .collect()
}

pub(crate) fn check_len(what: &'static str, expected: usize, found: usize) -> Result<(), StructureError> {
    if expected == found {
        Ok(())
    } else {
        Err(StructureError::BadLength { what, expected, found })
    }
}

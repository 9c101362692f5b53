use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::report::{Check, Report, Witness};

use super::algebra::{basis_vector, check_len};
use super::StructureError;

/// A coassociative counital coalgebra candidate given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimCoalgebra {
    field: FieldSpec,
    dim: usize,
    comult: Vec<Scalar>,
    counit: Vec<Scalar>,
    basis_names: Option<Vec<String>>,
}

impl FiniteDimCoalgebra {
    /// `comult` holds `c[i][j][k]` at `(i·n + j)·n + k`.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        comult: Vec<Scalar>,
        counit: Vec<Scalar>,
    ) -> Result<FiniteDimCoalgebra, StructureError> {
        check_len("comult", dim * dim * dim, comult.len())?;
        check_len("counit", dim, counit.len())?;
        for s in comult.iter().chain(&counit) {
            if s.field() != field {
                return Err(StructureError::FieldMismatch(field, s.field()));
            }
        }
        Ok(FiniteDimCoalgebra {
            field,
            dim,
            comult,
            counit,
            basis_names: None,
        })
    }

    /// `coproduct(i)` is the `n²` coefficient vector of `Δ(e_i)` in `V ⊗ V`.
    pub fn from_table(
        field: FieldSpec,
        dim: usize,
        counit: Vec<Scalar>,
        mut coproduct: impl FnMut(usize) -> Vec<Scalar>,
    ) -> Result<FiniteDimCoalgebra, StructureError> {
        let mut comult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            let v = coproduct(i);
            check_len("coproduct", dim * dim, v.len())?;
            comult.extend(v);
        }
        FiniteDimCoalgebra::new(field, dim, comult, counit)
    }

    /// From an `n² x n` comultiplication matrix and a `1 x n` counit row.
    pub fn from_matrices(comult: &Matrix, counit: &Matrix) -> Result<FiniteDimCoalgebra, StructureError> {
        let n = comult.cols();
        check_len("comult matrix rows", n * n, comult.rows())?;
        check_len("counit columns", n, counit.cols())?;
        check_len("counit rows", 1, counit.rows())?;
        FiniteDimCoalgebra::from_table(comult.field(), n, counit.row(0).to_vec(), |i| comult.column(i))
    }

    pub fn with_names(mut self, names: Vec<String>) -> FiniteDimCoalgebra {
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

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// Coefficients of `Δ(e_i)` in `V ⊗ V`, flat index `j·n + k`.
    pub fn coproduct(&self, i: usize) -> &[Scalar] {
        let n2 = self.dim * self.dim;
        &self.comult[i * n2..(i + 1) * n2]
    }

    /// Nonzero terms `(j, k, c)` of `Δ(e_i)`.
    pub fn terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let n = self.dim;
        self.coproduct(i)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(jk, c)| (jk / n, jk % n, c))
    }

    pub fn comult_matrix(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n * n, n, |jk, i| self.c(i, jk / n, jk % n).clone())
    }

    pub fn counit_matrix(&self) -> Matrix {
        Matrix::row_vector(self.field, &self.counit)
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.c(i, j, k) == self.c(i, k, j))))
    }

    /// Group-like basis elements: `Δ(e_i) = e_i ⊗ e_i` and `ε(e_i) = 1`.
    pub fn is_grouplike(&self, i: usize) -> bool {
        let n = self.dim;
        self.counit[i].is_one()
            && self
                .coproduct(i)
                .iter()
                .enumerate()
                .all(|(jk, c)| if jk == i * n + i { c.is_one() } else { c.is_zero() })
    }

    /// Coassociativity and counit, checked on structure constants.
    pub fn check(&self) -> Report {
        let n = self.dim;
        let f = self.field;
        let mut r = Report::new("coalgebra");
        let mut coassoc = Check::new("coassociativity", true);
        for i in 0..n {
            // (Δ⊗I)Δ and (I⊗Δ)Δ as n³ coefficient vectors
            let mut lhs = vec![f.zero(); n * n * n];
            let mut rhs = vec![f.zero(); n * n * n];
            for (s, k, c) in self.terms(i) {
                for (a, b, d) in self.terms(s) {
                    lhs[(a * n + b) * n + k].add_product(c, d);
                }
            }
            for (a, s, c) in self.terms(i) {
                for (b, k, d) in self.terms(s) {
                    rhs[(a * n + b) * n + k].add_product(c, d);
                }
            }
            if lhs != rhs {
                coassoc = Check::new("coassociativity", false).with_witness(Some(Witness {
                    indices: vec![i],
                    lhs,
                    rhs,
                }));
                break;
            }
        }
        r.push(coassoc);
        for (name, left) in [("left counit", true), ("right counit", false)] {
            let mut c = Check::new(name, true);
            for i in 0..n {
                let mut got = vec![f.zero(); n];
                for (j, k, v) in self.terms(i) {
                    if left {
                        got[k].add_product(&self.counit[j], v);
                    } else {
                        got[j].add_product(&self.counit[k], v);
                    }
                }
                let e = basis_vector(f, n, i);
                if got != e {
                    c = Check::new(name, false).with_witness(Some(Witness {
                        indices: vec![i],
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

use crate::linalg::{Matrix, TensorIndex};

use super::{BialgebraCandidate, FiniteDimAlgebra, FiniteDimCoalgebra, HopfAlgebra, StructureError};

/// The dual algebra `C*` on the dual basis: `m*[j][k][i] = c[i][j][k]`,
/// unit = counit.
pub fn dual_of_coalgebra(c: &FiniteDimCoalgebra) -> FiniteDimAlgebra {
    let n = c.dim();
    let a = FiniteDimAlgebra::from_table(c.field(), n, c.counit().to_vec(), |j, k| {
        (0..n).map(|i| c.c(i, j, k).clone()).collect()
    })
    .expect("shapes follow from the coalgebra");
    match c.basis_names() {
        Some(names) => a.with_names(names.iter().map(|s| format!("{s}*")).collect()),
        None => a,
    }
}

/// The dual coalgebra `A*`: `c[i][j][k] = m[j][k][i]`, counit = unit.
pub fn dual_of_algebra(a: &FiniteDimAlgebra) -> FiniteDimCoalgebra {
    let n = a.dim();
    let c = FiniteDimCoalgebra::from_table(a.field(), n, a.unit().to_vec(), |i| {
        (0..n * n).map(|jk| a.m(jk / n, jk % n, i).clone()).collect()
    })
    .expect("shapes follow from the algebra");
    match a.basis_names() {
        Some(names) => c.with_names(names.iter().map(|s| format!("{s}*")).collect()),
        None => c,
    }
}

/// The transpose of `f`, read as a map between dual tensor spaces under
/// `(V ⊗ W)* ≅ V* ⊗ W*` with dual bases in the same row-major order.
pub fn dual_map(f: &Matrix, domain: &TensorIndex, codomain: &TensorIndex) -> Matrix {
    assert_eq!(f.shape(), (codomain.total(), domain.total()), "dual_map shape");
    f.transpose()
}

/// `m^op[i][j][k] = m[j][i][k]`.
pub fn op_algebra(a: &FiniteDimAlgebra) -> FiniteDimAlgebra {
    FiniteDimAlgebra::from_table(a.field(), a.dim(), a.unit().to_vec(), |i, j| a.product(j, i).to_vec())
        .expect("same shape")
}

/// `c^cop[i][j][k] = c[i][k][j]`.
pub fn cop_coalgebra(c: &FiniteDimCoalgebra) -> FiniteDimCoalgebra {
    let n = c.dim();
    FiniteDimCoalgebra::from_table(c.field(), n, c.counit().to_vec(), |i| {
        (0..n * n).map(|jk| c.c(i, jk % n, jk / n).clone()).collect()
    })
    .expect("same shape")
}

/// The dual Hopf algebra `H*` with antipode `Sᵀ`.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let b = BialgebraCandidate::new(dual_of_coalgebra(h.coalgebra()), dual_of_algebra(h.algebra()))
        .expect("same field and dimension");
    HopfAlgebra::new(b, h.antipode.transpose()).expect("same shape")
}

/// The ordinary tensor-product algebra `A ⊗ B`.
pub fn tensor_algebra(a: &FiniteDimAlgebra, b: &FiniteDimAlgebra) -> Result<FiniteDimAlgebra, StructureError> {
    if a.field() != b.field() {
        return Err(StructureError::FieldMismatch(a.field(), b.field()));
    }
    let (na, nb) = (a.dim(), b.dim());
    let f = a.field();
    let unit = (0..na * nb).map(|ij| &a.unit()[ij / nb] * &b.unit()[ij % nb]).collect();
    FiniteDimAlgebra::from_table(f, na * nb, unit, |x, y| {
        let (i, j) = (x / nb, x % nb);
        let (k, l) = (y / nb, y % nb);
        let pa = a.product(i, k);
        let pb = b.product(j, l);
        (0..na * nb).map(|pq| &pa[pq / nb] * &pb[pq % nb]).collect()
    })
}

/// The ordinary tensor-product coalgebra `C ⊗ D`.
pub fn tensor_coalgebra(c: &FiniteDimCoalgebra, d: &FiniteDimCoalgebra) -> Result<FiniteDimCoalgebra, StructureError> {
    if c.field() != d.field() {
        return Err(StructureError::FieldMismatch(c.field(), d.field()));
    }
    let (nc, nd) = (c.dim(), d.dim());
    let n = nc * nd;
    let f = c.field();
    let counit = (0..n).map(|ij| &c.counit()[ij / nd] * &d.counit()[ij % nd]).collect();
    FiniteDimCoalgebra::from_table(f, n, counit, |x| {
        let (i, j) = (x / nd, x % nd);
        let mut v = vec![f.zero(); n * n];
        for (p, r, a) in c.terms(i) {
            for (q, s, b) in d.terms(j) {
                v[(p * nd + q) * n + r * nd + s] = a * b;
            }
        }
        v
    })
}

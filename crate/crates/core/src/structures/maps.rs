use crate::linalg::{kron, Matrix, TensorIndex};
use crate::report::{compare_maps, Check, Report};

use super::{FiniteDimAlgebra, FiniteDimCoalgebra};

/// Whether `f: A -> X` is a unital algebra map.
pub fn check_algebra_map(f: &Matrix, dom: &FiniteDimAlgebra, cod: &FiniteDimAlgebra) -> Report {
    let mut r = Report::new("algebra map");
    if f.shape() != (cod.dim(), dom.dim()) || f.field() != dom.field() || f.field() != cod.field() {
        r.push(Check::new("shape", false).with_detail(format!(
            "map is {:?}, expected ({}, {})",
            f.shape(),
            cod.dim(),
            dom.dim()
        )));
        return r;
    }
    let unit_img = f.matmul(&dom.unit_matrix()).expect("shape checked");
    r.push(compare_maps(
        "unital",
        &unit_img,
        &cod.unit_matrix(),
        &TensorIndex::new(&[1]),
    ));
    let lhs = f.matmul(&dom.mult_matrix()).expect("shape checked");
    let rhs = cod
        .mult_matrix()
        .matmul(&kron(f, f).expect("same field"))
        .expect("shape checked");
    r.push(compare_maps(
        "multiplicative",
        &lhs,
        &rhs,
        &TensorIndex::new(&[dom.dim(), dom.dim()]),
    ));
    r
}

/// Whether `f: C -> D` is a counital coalgebra map.
pub fn check_coalgebra_map(f: &Matrix, dom: &FiniteDimCoalgebra, cod: &FiniteDimCoalgebra) -> Report {
    let mut r = Report::new("coalgebra map");
    if f.shape() != (cod.dim(), dom.dim()) || f.field() != dom.field() || f.field() != cod.field() {
        r.push(Check::new("shape", false).with_detail(format!(
            "map is {:?}, expected ({}, {})",
            f.shape(),
            cod.dim(),
            dom.dim()
        )));
        return r;
    }
    let domain = TensorIndex::new(&[dom.dim()]);
    let eps = cod.counit_matrix().matmul(f).expect("shape checked");
    r.push(compare_maps("counital", &eps, &dom.counit_matrix(), &domain));
    let lhs = cod.comult_matrix().matmul(f).expect("shape checked");
    let rhs = kron(f, f)
        .expect("same field")
        .matmul(&dom.comult_matrix())
        .expect("shape checked");
    r.push(compare_maps("comultiplicative", &lhs, &rhs, &domain));
    r
}

//! Twisted `R`-Hopf modules: right `H`-modules and right `H`-comodules `M`
//! with `ρ(m·h) = Σ m₀ ^R h₁ ⊗ ^R m₁ h₂` for some `R: H ⊗ H -> H ⊗ H`.

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{invert, kron, switch, LinalgError, Matrix, TensorIndex};
use crate::report::{compare_maps, Check, Report, Witness};
use crate::structures::HopfAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfModError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{what} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch {
        what: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedHopfModule {
    pub h: HopfAlgebra,
    pub dim: usize,
    /// `M ⊗ H -> M`
    pub action: Matrix,
    /// `M -> M ⊗ H`
    pub coaction: Matrix,
    pub r: Matrix,
}

impl TwistedHopfModule {
    pub fn new(h: HopfAlgebra, dim: usize, action: Matrix, coaction: Matrix, r: Matrix) -> Result<Self, HopfModError> {
        let n = h.dim();
        let f = h.field();
        for (what, m, shape) in [
            ("action", &action, (dim, dim * n)),
            ("coaction", &coaction, (dim * n, dim)),
            ("R", &r, (n * n, n * n)),
        ] {
            if m.field() != f {
                return Err(HopfModError::FieldMismatch(f, m.field()));
            }
            if m.shape() != shape {
                return Err(HopfModError::ShapeMismatch {
                    what,
                    expected: shape,
                    found: m.shape(),
                });
            }
        }
        Ok(TwistedHopfModule {
            h,
            dim,
            action,
            coaction,
            r,
        })
    }

    /// `M = H` with multiplication and comultiplication.
    pub fn regular(h: &HopfAlgebra, r: Matrix) -> Result<Self, HopfModError> {
        let action = h.algebra().mult_matrix();
        let coaction = h.coalgebra().comult_matrix();
        TwistedHopfModule::new(h.clone(), h.dim(), action, coaction, r)
    }

    /// `M = H` acting on itself by multiplication, with `ρ(m) = m ⊗ 1`.
    pub fn regular_trivial_coaction(h: &HopfAlgebra, r: Matrix) -> Result<Self, HopfModError> {
        let n = h.dim();
        let action = h.algebra().mult_matrix();
        let coaction = kron(&Matrix::identity(h.field(), n), &h.algebra().unit_matrix())?;
        TwistedHopfModule::new(h.clone(), n, action, coaction, r)
    }

    /// `M = k` with `1·h = ε(h)` and `ρ(1) = 1 ⊗ 1`.
    pub fn trivial(h: &HopfAlgebra, r: Matrix) -> Result<Self, HopfModError> {
        let action = h.coalgebra().counit_matrix();
        let coaction = h.algebra().unit_matrix();
        TwistedHopfModule::new(h.clone(), 1, action, coaction, r)
    }

    pub fn field(&self) -> FieldSpec {
        self.h.field()
    }
}

/// Right-module axioms: `(m·h)·g = m·(hg)` and `m·1 = m`.
pub fn check_module(t: &TwistedHopfModule) -> Report {
    let f = t.field();
    let (d, n) = (t.dim, t.h.dim());
    let id_m = Matrix::identity(f, d);
    let id_h = Matrix::identity(f, n);
    let alg = t.h.algebra();
    let mut rep = Report::new("right module");
    let lhs = t.action.matmul(&kron(&t.action, &id_h).unwrap()).unwrap();
    let rhs = t.action.matmul(&kron(&id_m, &alg.mult_matrix()).unwrap()).unwrap();
    rep.push(compare_maps("associativity", &lhs, &rhs, &TensorIndex::new(&[d, n, n])));
    let unit = t.action.matmul(&kron(&id_m, &alg.unit_matrix()).unwrap()).unwrap();
    rep.push(compare_maps("unit", &unit, &id_m, &TensorIndex::new(&[d])));
    rep
}

/// Right-comodule axioms: `(ρ ⊗ I)ρ = (I ⊗ Δ)ρ` and `(I ⊗ ε)ρ = I`.
pub fn check_comodule(t: &TwistedHopfModule) -> Report {
    let f = t.field();
    let (d, n) = (t.dim, t.h.dim());
    let id_m = Matrix::identity(f, d);
    let id_h = Matrix::identity(f, n);
    let co = t.h.coalgebra();
    let mut rep = Report::new("right comodule");
    let lhs = kron(&t.coaction, &id_h).unwrap().matmul(&t.coaction).unwrap();
    let rhs = kron(&id_m, &co.comult_matrix()).unwrap().matmul(&t.coaction).unwrap();
    let dom = TensorIndex::new(&[d]);
    rep.push(compare_maps("coassociativity", &lhs, &rhs, &dom));
    let counit = kron(&id_m, &co.counit_matrix()).unwrap().matmul(&t.coaction).unwrap();
    rep.push(compare_maps("counit", &counit, &id_m, &dom));
    rep
}

/// The compatibility `ρ(m·h) = Σ m₀ ^R h₁ ⊗ ^R m₁ h₂` on all basis pairs.
///
/// With `R(v ⊗ w) = Σ ^R w ⊗ ^R v`, the pair fed to `R` is `m₁ ⊗ h₁`: its
/// left output multiplies `m₀` and its right output multiplies `h₂`. As a
/// composite this is `(act ⊗ m_H)(I_M ⊗ R ⊗ I_H)(ρ ⊗ Δ)`.
pub fn compatibility_check(t: &TwistedHopfModule) -> Check {
    let f = t.field();
    let (d, n) = (t.dim, t.h.dim());
    let alg = t.h.algebra();
    let co = t.h.coalgebra();
    let name = "twisted Hopf compatibility";
    for m in 0..d {
        let rho_m: Vec<(usize, usize, &Scalar)> = t
            .coaction
            .column_nonzeros(m)
            .map(|(row, c)| (row / n, row % n, c))
            .collect();
        for h in 0..n {
            let lhs = t.coaction.apply(&t.action.column(m * n + h));
            let mut rhs = vec![f.zero(); d * n];
            for &(m0, m1, c1) in &rho_m {
                for (h1, h2, c2) in co.terms(h) {
                    let c12 = c1 * c2;
                    for (row, c3) in t.r.column_nonzeros(m1 * n + h1) {
                        let (u, v) = (row / n, row % n);
                        let c = &c12 * c3;
                        let left = t.action.column(m0 * n + u);
                        let right = alg.product(v, h2);
                        for (i, x) in left.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                            let cx = &c * x;
                            for (j, y) in right.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                                rhs[i * n + j].add_product(&cx, y);
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                return Check::new(name, false).with_witness(Some(Witness {
                    indices: vec![m, h],
                    lhs,
                    rhs,
                }));
            }
        }
    }
    Check::new(name, true)
}

pub fn check_compatibility(t: &TwistedHopfModule) -> bool {
    compatibility_check(t).passed()
}

/// Module, comodule and compatibility in one report.
pub fn check_twisted_module(t: &TwistedHopfModule) -> Report {
    let mut rep = Report::new("twisted R-Hopf module");
    rep.absorb("module", check_module(t));
    rep.absorb("comodule", check_comodule(t));
    rep.push(compatibility_check(t));
    rep
}

pub fn r_switch(h: &HopfAlgebra) -> Matrix {
    switch(h.dim(), h.dim(), h.field())
}

/// `R(h ⊗ g) = Σ g₂ ⊗ S⁻¹(g₁) h`.
pub fn r_yetter_drinfeld(h: &HopfAlgebra) -> Result<Matrix, HopfModError> {
    let n = h.dim();
    let s_inv = invert(&h.antipode).map_err(|_| HopfModError::AntipodeNotInvertible)?;
    let alg = h.algebra();
    let mut r = Matrix::zeros(h.field(), n * n, n * n);
    for g in 0..n {
        for (p, q, c) in h.coalgebra().terms(g) {
            let s = s_inv.column(p);
            for x in 0..n {
                let prod = alg.mul(&s, &alg.basis_vector(x));
                for (k, v) in prod.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    r.add_at(q * n + k, x * n + g, &(c * v));
                }
            }
        }
    }
    Ok(r)
}

/// `R(h ⊗ g) = ε(g) 1 ⊗ h`.
pub fn r_long(h: &HopfAlgebra) -> Matrix {
    let n = h.dim();
    let unit = h.algebra().unit();
    let eps = h.coalgebra().counit();
    Matrix::from_fn(h.field(), n * n, n * n, |row, col| {
        let (u, x) = (row / n, row % n);
        let (hh, g) = (col / n, col % n);
        if x == hh {
            &eps[g] * &unit[u]
        } else {
            h.field().zero()
        }
    })
}

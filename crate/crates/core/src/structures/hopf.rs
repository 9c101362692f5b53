use crate::field::{FieldSpec, Scalar};
use crate::linalg::{solve, LinalgError, Matrix};
use crate::report::{Check, Report, Witness};

use super::{FiniteDimAlgebra, FiniteDimCoalgebra, StructureError};

/// An algebra and a coalgebra on the same space. Compatibility is not
/// assumed; see [`check_bialgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraCandidate {
    pub algebra: FiniteDimAlgebra,
    pub coalgebra: FiniteDimCoalgebra,
}

impl BialgebraCandidate {
    pub fn new(algebra: FiniteDimAlgebra, coalgebra: FiniteDimCoalgebra) -> Result<BialgebraCandidate, StructureError> {
        if algebra.field() != coalgebra.field() {
            return Err(StructureError::FieldMismatch(algebra.field(), coalgebra.field()));
        }
        if algebra.dim() != coalgebra.dim() {
            return Err(StructureError::DimensionMismatch(algebra.dim(), coalgebra.dim()));
        }
        Ok(BialgebraCandidate { algebra, coalgebra })
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `Δ(a)` for an arbitrary element `a`, as an `n²` vector.
    pub fn coproduct_of(&self, a: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, k, c) in self.coalgebra.terms(i) {
                out[j * n + k].add_product(x, c);
            }
        }
        out
    }

    /// Product in `K ⊗ K` of two `n²` vectors.
    pub fn tensor_square_mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let a = &self.algebra;
        let mut out = vec![self.field().zero(); n * n];
        for (pq, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (rt, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                let left = a.product(pq / n, rt / n);
                let right = a.product(pq % n, rt % n);
                for (s, l) in left.iter().enumerate().filter(|(_, l)| !l.is_zero()) {
                    let c = &xy * l;
                    for (t, r) in right.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
                        out[s * n + t].add_product(&c, r);
                    }
                }
            }
        }
        out
    }
}

/// Algebra and coalgebra axioms plus compatibility: `Δ` and `ε` are unital
/// algebra maps.
pub fn check_bialgebra(b: &BialgebraCandidate) -> Report {
    let n = b.dim();
    let f = b.field();
    let a = &b.algebra;
    let c = &b.coalgebra;
    let mut r = Report::new("bialgebra");
    r.absorb("algebra", a.check());
    r.absorb("coalgebra", c.check());

    let mut delta_mult = Check::new("Δ multiplicative", true);
    let deltas: Vec<Vec<Scalar>> = (0..n).map(|i| c.coproduct(i).to_vec()).collect();
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = b.coproduct_of(a.product(i, j));
            let rhs = b.tensor_square_mul(&deltas[i], &deltas[j]);
            if lhs != rhs {
                delta_mult = Check::new("Δ multiplicative", false).with_witness(Some(Witness {
                    indices: vec![i, j],
                    lhs,
                    rhs,
                }));
                break 'outer;
            }
        }
    }
    r.push(delta_mult);

    let one_one: Vec<Scalar> = (0..n * n).map(|pq| &a.unit()[pq / n] * &a.unit()[pq % n]).collect();
    let d1 = b.coproduct_of(a.unit());
    let unital = d1 == one_one;
    r.push(Check::new("Δ unital", unital).with_witness((!unital).then(|| Witness {
        indices: vec![],
        lhs: d1,
        rhs: one_one,
    })));

    let eps = |v: &[Scalar]| -> Scalar {
        let mut acc = f.zero();
        for (x, e) in v.iter().zip(c.counit()) {
            acc.add_product(x, e);
        }
        acc
    };
    let mut eps_mult = Check::new("ε multiplicative", true);
    'eps: for i in 0..n {
        for j in 0..n {
            let lhs = eps(a.product(i, j));
            let rhs = &c.counit()[i] * &c.counit()[j];
            if lhs != rhs {
                eps_mult = Check::new("ε multiplicative", false).with_witness(Some(Witness {
                    indices: vec![i, j],
                    lhs: vec![lhs],
                    rhs: vec![rhs],
                }));
                break 'eps;
            }
        }
    }
    r.push(eps_mult);
    r.check("ε unital", eps(a.unit()).is_one());
    r
}

/// A bialgebra together with an antipode matrix (`S[a][b]` is the
/// coefficient of `e_a` in `S(e_b)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub bialgebra: BialgebraCandidate,
    pub antipode: Matrix,
}

impl HopfAlgebra {
    /// Pairs a bialgebra with a given antipode; only shapes are checked.
    pub fn new(bialgebra: BialgebraCandidate, antipode: Matrix) -> Result<HopfAlgebra, StructureError> {
        let n = bialgebra.dim();
        if antipode.shape() != (n, n) {
            return Err(StructureError::DimensionMismatch(n, antipode.rows()));
        }
        if antipode.field() != bialgebra.field() {
            return Err(StructureError::FieldMismatch(bialgebra.field(), antipode.field()));
        }
        Ok(HopfAlgebra { bialgebra, antipode })
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra {
        &self.bialgebra.algebra
    }

    pub fn coalgebra(&self) -> &FiniteDimCoalgebra {
        &self.bialgebra.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.bialgebra.field()
    }

    /// Bialgebra axioms plus both convolution identities for the antipode.
    pub fn check(&self) -> Report {
        let mut r = check_bialgebra(&self.bialgebra);
        r.title = "hopf algebra".into();
        for c in check_antipode(&self.bialgebra, &self.antipode).checks {
            r.push(c);
        }
        r
    }
}

/// The linear system `Σ S(h₁)h₂ = ε(h)1` in the `n²` unknowns `S[a][j]`
/// (flat index `a·n + j`), with equations indexed by `(h, l)` as `h·n + l`.
pub fn antipode_system(b: &BialgebraCandidate) -> (Matrix, Matrix) {
    let n = b.dim();
    let f = b.field();
    let a = &b.algebra;
    let mut lhs = Matrix::zeros(f, n * n, n * n);
    let mut rhs = Matrix::zeros(f, n * n, 1);
    for i in 0..n {
        for (j, k, c) in b.coalgebra.terms(i) {
            for s in 0..n {
                for (l, m) in a.product(s, k).iter().enumerate().filter(|(_, m)| !m.is_zero()) {
                    lhs.add_at(i * n + l, s * n + j, &(c * m));
                }
            }
        }
        for l in 0..n {
            rhs.set(i * n + l, 0, &b.coalgebra.counit()[i] * &a.unit()[l]);
        }
    }
    (lhs, rhs)
}

/// Both convolution identities `S * id = ηε = id * S` on every basis vector.
pub fn check_antipode(b: &BialgebraCandidate, s: &Matrix) -> Report {
    let n = b.dim();
    let f = b.field();
    let a = &b.algebra;
    let mut r = Report::new("antipode");
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| s.column(j)).collect();
    for (name, left) in [("S * id = ηε", true), ("id * S = ηε", false)] {
        let mut check = Check::new(name, true);
        for i in 0..n {
            let mut got = vec![f.zero(); n];
            for (j, k, c) in b.coalgebra.terms(i) {
                let prod = if left {
                    a.mul(&images[j], &a.basis_vector(k))
                } else {
                    a.mul(&a.basis_vector(j), &images[k])
                };
                for (slot, p) in got.iter_mut().zip(&prod) {
                    slot.add_product(c, p);
                }
            }
            let want: Vec<Scalar> = a.unit().iter().map(|u| u * &b.coalgebra.counit()[i]).collect();
            if got != want {
                check = Check::new(name, false).with_witness(Some(Witness {
                    indices: vec![i],
                    lhs: got,
                    rhs: want,
                }));
                break;
            }
        }
        r.push(check);
    }
    r
}

/// Solves for the antipode as the left convolution inverse of the identity,
/// then verifies the right identity.
pub fn compute_antipode(b: &BialgebraCandidate) -> Result<HopfAlgebra, StructureError> {
    let report = check_bialgebra(b);
    if !report.passed() {
        return Err(StructureError::NotABialgebra(Box::new(report)));
    }
    let n = b.dim();
    let (lhs, rhs) = antipode_system(b);
    let x = match solve(&lhs, &rhs) {
        Ok(x) => x,
        Err(LinalgError::NoSolution) => {
            return Err(StructureError::NotHopf(
                "left convolution inverse does not exist".into(),
            ))
        }
        Err(e) => return Err(e.into()),
    };
    let s = Matrix::from_fn(b.field(), n, n, |a, j| x.get(a * n + j, 0).clone());
    let check = check_antipode(b, &s);
    if !check.passed() {
        return Err(StructureError::NotHopf(format!(
            "solution fails {}",
            check.first_failure().map_or("?", |c| c.name.as_str())
        )));
    }
    Ok(HopfAlgebra {
        bialgebra: b.clone(),
        antipode: s,
    })
}

//! Smash products `A #_R B` for a map `R: B ⊗ A -> A ⊗ B`.
//!
//! The multiplication is `(m_A ⊗ m_B)(I_A ⊗ R ⊗ I_B)` with unit `1_A ⊗ 1_B`.
//! [`is_smash_product`] evaluates three equivalent characterizations
//! (direct axioms, normal + octagon, normal + both pentagons) and flags any
//! disagreement between them as an internal error.

use thiserror::Error;

use crate::field::FieldSpec;
use crate::linalg::{invert, kron, kron_all, LinalgError, Matrix, TensorIndex};
use crate::report::{compare_maps, Check, Report};
use crate::structures::{check_algebra_map, FiniteDimAlgebra, StructureError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmashError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{what} has shape {found:?}, expected {expected:?}")]
    ShapeMismatch {
        what: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("{0} is not a unital algebra map")]
    NotAlgebraMap(&'static str),
    #[error("ζ = m_X(i_A ⊗ i_B) is not bijective")]
    ZetaNotBijective,
    #[error("compatibility m_X(v ⊗ u) = m_X(u ⊗ v)R fails")]
    CompatibilityFailed(Box<Report>),
    #[error("R does not define a smash product")]
    NotSmashProduct(Box<Report>),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Two algebras and a twisting map `R: B ⊗ A -> A ⊗ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashData {
    pub a: FiniteDimAlgebra,
    pub b: FiniteDimAlgebra,
    pub r: Matrix,
}

impl SmashData {
    pub fn new(a: FiniteDimAlgebra, b: FiniteDimAlgebra, r: Matrix) -> Result<SmashData, SmashError> {
        let d = SmashData { a, b, r };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), SmashError> {
        let f = self.a.field();
        for g in [self.b.field(), self.r.field()] {
            if g != f {
                return Err(SmashError::FieldMismatch(f, g));
            }
        }
        let n = self.a.dim() * self.b.dim();
        if self.r.shape() != (n, n) {
            return Err(SmashError::ShapeMismatch {
                what: "R",
                expected: (n, n),
                found: self.r.shape(),
            });
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.a.field()
    }

    /// `R(f_j ⊗ e_k)` coefficient on `e_p ⊗ f_q`.
    pub fn r_coeff(&self, p: usize, q: usize, j: usize, k: usize) -> &crate::field::Scalar {
        self.r.get(p * self.b.dim() + q, j * self.a.dim() + k)
    }
}

/// The (possibly non-associative) algebra `A #_R B`.
pub fn build_smash(d: &SmashData) -> Result<FiniteDimAlgebra, SmashError> {
    d.validate()?;
    let (na, nb) = (d.a.dim(), d.b.dim());
    let f = d.field();
    let unit = (0..na * nb)
        .map(|ij| &d.a.unit()[ij / nb] * &d.b.unit()[ij % nb])
        .collect();
    // (e_i⊗f_j)(e_k⊗f_l) = Σ R[(p,q),(j,k)] e_i e_p ⊗ f_q f_l
    let alg = FiniteDimAlgebra::from_table(f, na * nb, unit, |x, y| {
        let (i, j) = (x / nb, x % nb);
        let (k, l) = (y / nb, y % nb);
        let mut out = vec![f.zero(); na * nb];
        for p in 0..na {
            for q in 0..nb {
                let r = d.r_coeff(p, q, j, k);
                if r.is_zero() {
                    continue;
                }
                let left = d.a.product(i, p);
                let right = d.b.product(q, l);
                for (s, x) in left.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    let rx = r * x;
                    for (t, y) in right.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        out[s * nb + t].add_product(&rx, y);
                    }
                }
            }
        }
        out
    })?;
    Ok(alg)
}

/// Structure matrices for a fixed pair `(A, B)`, reused across many `R`.
pub struct SmashChecker {
    na: usize,
    nb: usize,
    ia: Matrix,
    ib: Matrix,
    eta_a: Matrix,
    eta_b: Matrix,
    m_a: Matrix,
    m_b: Matrix,
    ib_eta_a: Matrix,
    eta_a_ib: Matrix,
    eta_b_ia: Matrix,
    ia_eta_b: Matrix,
    mb_ia: Matrix,
    ia_mb: Matrix,
    ib_ma: Matrix,
    ma_ib: Matrix,
    ib_ma_ib: Matrix,
    ia_mb_ia: Matrix,
}

impl SmashChecker {
    pub fn new(a: &FiniteDimAlgebra, b: &FiniteDimAlgebra) -> SmashChecker {
        let f = a.field();
        let (na, nb) = (a.dim(), b.dim());
        let ia = Matrix::identity(f, na);
        let ib = Matrix::identity(f, nb);
        let eta_a = a.unit_matrix();
        let eta_b = b.unit_matrix();
        let m_a = a.mult_matrix();
        let m_b = b.mult_matrix();
        let k = |x: &Matrix, y: &Matrix| kron(x, y).expect("same field");
        SmashChecker {
            ib_eta_a: k(&ib, &eta_a),
            eta_a_ib: k(&eta_a, &ib),
            eta_b_ia: k(&eta_b, &ia),
            ia_eta_b: k(&ia, &eta_b),
            mb_ia: k(&m_b, &ia),
            ia_mb: k(&ia, &m_b),
            ib_ma: k(&ib, &m_a),
            ma_ib: k(&m_a, &ib),
            ib_ma_ib: kron_all(&[&ib, &m_a, &ib]).expect("same field"),
            ia_mb_ia: kron_all(&[&ia, &m_b, &ia]).expect("same field"),
            na,
            nb,
            ia,
            ib,
            eta_a,
            eta_b,
            m_a,
            m_b,
        }
    }

    fn k(x: &Matrix, y: &Matrix) -> Matrix {
        kron(x, y).expect("same field")
    }

    /// (LN): `R(b ⊗ 1_A) = 1_A ⊗ b`.
    pub fn left_normal(&self, r: &Matrix) -> Check {
        let lhs = r.matmul(&self.ib_eta_a).expect("shape");
        compare_maps("left normal", &lhs, &self.eta_a_ib, &TensorIndex::new(&[self.nb]))
    }

    /// (RN): `R(1_B ⊗ a) = a ⊗ 1_B`.
    pub fn right_normal(&self, r: &Matrix) -> Check {
        let lhs = r.matmul(&self.eta_b_ia).expect("shape");
        compare_maps("right normal", &lhs, &self.ia_eta_b, &TensorIndex::new(&[self.na]))
    }

    /// (P1): `R(m_B ⊗ I_A) = (I_A ⊗ m_B)(R ⊗ I_B)(I_B ⊗ R)` on `B ⊗ B ⊗ A`.
    pub fn left_multiplicative(&self, r: &Matrix) -> Check {
        let lhs = r.matmul(&self.mb_ia).expect("shape");
        let rhs = Matrix::compose(&[&self.ia_mb, &Self::k(r, &self.ib), &Self::k(&self.ib, r)]).expect("shape");
        compare_maps(
            "left multiplicative (P1)",
            &lhs,
            &rhs,
            &TensorIndex::new(&[self.nb, self.nb, self.na]),
        )
    }

    /// (P2): `R(I_B ⊗ m_A) = (m_A ⊗ I_B)(I_A ⊗ R)(R ⊗ I_A)` on `B ⊗ A ⊗ A`.
    pub fn right_multiplicative(&self, r: &Matrix) -> Check {
        let lhs = r.matmul(&self.ib_ma).expect("shape");
        let rhs = Matrix::compose(&[&self.ma_ib, &Self::k(&self.ia, r), &Self::k(r, &self.ia)]).expect("shape");
        compare_maps(
            "right multiplicative (P2)",
            &lhs,
            &rhs,
            &TensorIndex::new(&[self.nb, self.na, self.na]),
        )
    }

    /// (O) on `B ⊗ A ⊗ B ⊗ A`.
    pub fn octagonal(&self, r: &Matrix) -> Check {
        let top = Matrix::compose(&[
            &self.ia_mb,
            &Self::k(r, &self.ib),
            &self.ib_ma_ib,
            &kron_all(&[&self.ib, &self.ia, r]).expect("same field"),
        ])
        .expect("shape");
        let bottom = Matrix::compose(&[
            &self.ma_ib,
            &Self::k(&self.ia, r),
            &self.ia_mb_ia,
            &kron_all(&[r, &self.ib, &self.ia]).expect("same field"),
        ])
        .expect("shape");
        compare_maps(
            "octagon (O)",
            &top,
            &bottom,
            &TensorIndex::new(&[self.nb, self.na, self.nb, self.na]),
        )
    }

    /// All three characterizations with a cross-check.
    pub fn report(&self, d: &SmashData) -> Report {
        let r = &d.r;
        let mut rep = Report::new("smash product");
        let built = build_smash(d).expect("validated data");
        let direct = built.check();
        let assoc = direct.get("associativity").expect("present").clone();
        let unit_ok = direct.passed_named("left unit") && direct.passed_named("right unit");
        let ln = self.left_normal(r);
        let rn = self.right_normal(r);
        let oct = self.octagonal(r);
        let p1 = self.left_multiplicative(r);
        let p2 = self.right_multiplicative(r);
        let normal = ln.passed() && rn.passed();
        let c1 = assoc.passed() && unit_ok;
        let c2 = normal && oct.passed();
        let c3 = normal && p1.passed() && p2.passed();
        rep.push(Check {
            name: "direct: associativity".into(),
            ..assoc
        });
        let mut unit = Check::new("direct: unit 1⊗1", unit_ok);
        if let Some(c) = direct.first_failure().filter(|c| c.name.contains("unit")) {
            unit = unit.with_witness(c.witness.clone());
        }
        rep.push(unit);
        for c in [ln, rn, oct, p1, p2] {
            rep.push(c);
        }
        rep.push(Check::new("(1) direct axioms", c1).informational());
        rep.push(Check::new("(2) normal + octagon", c2).informational());
        rep.push(Check::new("(3) normal + pentagons", c3).informational());
        if !(c1 == c2 && c2 == c3) {
            rep.consistency_errors.push(format!(
                "characterizations disagree: direct={c1} octagon={c2} pentagons={c3}"
            ));
        }
        if unit_ok != normal {
            rep.consistency_errors
                .push(format!("unit axiom ({unit_ok}) differs from normality ({normal})"));
        }
        rep
    }

    pub fn eta_a(&self) -> &Matrix {
        &self.eta_a
    }

    pub fn eta_b(&self) -> &Matrix {
        &self.eta_b
    }

    pub fn m_a(&self) -> &Matrix {
        &self.m_a
    }

    pub fn m_b(&self) -> &Matrix {
        &self.m_b
    }
}

pub fn is_left_normal(d: &SmashData) -> bool {
    SmashChecker::new(&d.a, &d.b).left_normal(&d.r).passed()
}

pub fn is_right_normal(d: &SmashData) -> bool {
    SmashChecker::new(&d.a, &d.b).right_normal(&d.r).passed()
}

pub fn is_normal(d: &SmashData) -> bool {
    let c = SmashChecker::new(&d.a, &d.b);
    c.left_normal(&d.r).passed() && c.right_normal(&d.r).passed()
}

pub fn is_left_multiplicative(d: &SmashData) -> bool {
    SmashChecker::new(&d.a, &d.b).left_multiplicative(&d.r).passed()
}

pub fn is_right_multiplicative(d: &SmashData) -> bool {
    SmashChecker::new(&d.a, &d.b).right_multiplicative(&d.r).passed()
}

pub fn is_octagonal(d: &SmashData) -> bool {
    SmashChecker::new(&d.a, &d.b).octagonal(&d.r).passed()
}

pub fn is_smash_product(d: &SmashData) -> Report {
    SmashChecker::new(&d.a, &d.b).report(d)
}

/// An algebra `X` with candidate algebra maps `i_A: A -> X`, `i_B: B -> X`.
#[derive(Clone, Debug)]
pub struct FactorisationWitnessAlg {
    pub x: FiniteDimAlgebra,
    pub a: FiniteDimAlgebra,
    pub b: FiniteDimAlgebra,
    pub i_a: Matrix,
    pub i_b: Matrix,
}

/// The canonical inclusions `a ↦ a ⊗ 1` and `b ↦ 1 ⊗ b` into `A #_R B`.
pub fn smash_witness(d: &SmashData) -> Result<FactorisationWitnessAlg, SmashError> {
    let f = d.field();
    Ok(FactorisationWitnessAlg {
        x: build_smash(d)?,
        a: d.a.clone(),
        b: d.b.clone(),
        i_a: kron(&Matrix::identity(f, d.a.dim()), &d.b.unit_matrix())?,
        i_b: kron(&d.a.unit_matrix(), &Matrix::identity(f, d.b.dim()))?,
    })
}

/// `ζ = m_X (i_A ⊗ i_B)`.
pub fn zeta(w: &FactorisationWitnessAlg) -> Result<Matrix, SmashError> {
    Ok(w.x.mult_matrix().matmul(&kron(&w.i_a, &w.i_b)?)?)
}

/// Recovers `R = ζ⁻¹ m_X (i_B ⊗ i_A)` from a factorisation `X = AB`, and
/// re-verifies that `R` gives a smash product isomorphic to `X` via `ζ`.
pub fn recover_r(w: &FactorisationWitnessAlg) -> Result<SmashData, SmashError> {
    if !check_algebra_map(&w.i_a, &w.a, &w.x).passed() {
        return Err(SmashError::NotAlgebraMap("i_A"));
    }
    if !check_algebra_map(&w.i_b, &w.b, &w.x).passed() {
        return Err(SmashError::NotAlgebraMap("i_B"));
    }
    let z = zeta(w)?;
    if !z.is_square() {
        return Err(SmashError::ZetaNotBijective);
    }
    let z_inv = invert(&z).map_err(|_| SmashError::ZetaNotBijective)?;
    let r = Matrix::compose(&[&z_inv, &w.x.mult_matrix(), &kron(&w.i_b, &w.i_a)?])?;
    let d = SmashData::new(w.a.clone(), w.b.clone(), r)?;
    let rep = is_smash_product(&d);
    if !rep.passed() {
        return Err(SmashError::Internal(format!("recovered R fails: {rep}")));
    }
    let built = build_smash(&d)?;
    if !check_algebra_map(&z, &built, &w.x).passed() {
        return Err(SmashError::Internal("ζ is not an algebra map".into()));
    }
    Ok(d)
}

/// The unique algebra map `w: A #_R B -> X` with `w(a ⊗ b) = u(a)v(b)`.
pub fn universal_map(d: &SmashData, x: &FiniteDimAlgebra, u: &Matrix, v: &Matrix) -> Result<Matrix, SmashError> {
    let rep = is_smash_product(d);
    if !rep.passed() {
        return Err(SmashError::NotSmashProduct(Box::new(rep)));
    }
    if !check_algebra_map(u, &d.a, x).passed() {
        return Err(SmashError::NotAlgebraMap("u"));
    }
    if !check_algebra_map(v, &d.b, x).passed() {
        return Err(SmashError::NotAlgebraMap("v"));
    }
    let mx = x.mult_matrix();
    let lhs = mx.matmul(&kron(v, u)?)?;
    let w = mx.matmul(&kron(u, v)?)?;
    let rhs = w.matmul(&d.r)?;
    let compat = compare_maps(
        "m_X(v⊗u) = m_X(u⊗v)R",
        &lhs,
        &rhs,
        &TensorIndex::new(&[d.b.dim(), d.a.dim()]),
    );
    if !compat.passed() {
        let mut r = Report::new("universal map");
        r.push(compat);
        return Err(SmashError::CompatibilityFailed(Box::new(r)));
    }
    let built = build_smash(d)?;
    let wit = smash_witness(d)?;
    if !check_algebra_map(&w, &built, x).passed() || !w.matmul(&wit.i_a)?.same_as(u) || !w.matmul(&wit.i_b)?.same_as(v)
    {
        return Err(SmashError::Internal("universal map failed its own verification".into()));
    }
    Ok(w)
}

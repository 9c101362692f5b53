//! Exhaustive search for normal smash-product maps `R: B ⊗ A -> A ⊗ B` over
//! a prime field, and the `kC₂ ⊗ kC₂` case in closed form.
//!
//! A normal `R` is fixed on every pair involving a unit; the remaining basis
//! pairs `(b_j, a_k)` with `j, k ≥ 1` are free slots, each contributing
//! `dim A · dim B` scalar parameters.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::report::{Check, Report};
use crate::smash::{is_left_multiplicative, is_right_multiplicative, SmashChecker, SmashData};
use crate::structures::FiniteDimAlgebra;

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const DEFAULT_PARAM_CAP: usize = 8;
pub const BUDGET_ENV: &str = "SMASHKIT_BUDGET";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("{params} free parameters exceed the cap of {cap}")]
    CapExceeded { params: usize, cap: usize },
    #[error("the unit of {0} is not its first basis vector")]
    UnitNotFirstBasisVector(&'static str),
    #[error("classification needs a prime field, got {0}")]
    FieldNotPrime(FieldSpec),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
}

/// The budget from `SMASHKIT_BUDGET`, or the default.
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub a: FiniteDimAlgebra,
    pub b: FiniteDimAlgebra,
    /// `(j, k)` for the free pairs `b_j ⊗ a_k`, lexicographic.
    pub free_slots: Vec<(usize, usize)>,
    pub field: FieldSpec,
}

impl SearchSpace {
    pub fn new(
        a: &FiniteDimAlgebra,
        b: &FiniteDimAlgebra,
        field: FieldSpec,
        cap: usize,
    ) -> Result<SearchSpace, ClassifyError> {
        for g in [a.field(), b.field()] {
            if g != field {
                return Err(ClassifyError::FieldMismatch(field, g));
            }
        }
        if field.is_rational() {
            return Err(ClassifyError::FieldNotPrime(field));
        }
        for (name, alg) in [("A", a), ("B", b)] {
            if !alg
                .unit()
                .iter()
                .enumerate()
                .all(|(i, s)| if i == 0 { s.is_one() } else { s.is_zero() })
            {
                return Err(ClassifyError::UnitNotFirstBasisVector(name));
            }
        }
        let free_slots: Vec<(usize, usize)> = (1..b.dim()).flat_map(|j| (1..a.dim()).map(move |k| (j, k))).collect();
        let space = SearchSpace {
            a: a.clone(),
            b: b.clone(),
            free_slots,
            field,
        };
        if space.params() > cap {
            return Err(ClassifyError::CapExceeded {
                params: space.params(),
                cap,
            });
        }
        Ok(space)
    }

    pub fn params(&self) -> usize {
        self.free_slots.len() * self.a.dim() * self.b.dim()
    }

    /// `p^params`, or `None` if it overflows.
    pub fn candidates(&self) -> Option<u64> {
        let p = self.field.modulus().expect("prime field");
        p.checked_pow(self.params() as u32)
    }

    /// The normal map for the parameter vector with the given index (first
    /// parameter most significant).
    pub fn candidate(&self, mut index: u64) -> Matrix {
        let f = self.field;
        let p = f.modulus().expect("prime field");
        let (na, nb) = (self.a.dim(), self.b.dim());
        let n = na * nb;
        let mut digits = vec![0u64; self.params()];
        for d in digits.iter_mut().rev() {
            *d = index % p;
            index /= p;
        }
        let mut r = Matrix::zeros(f, n, n);
        for j in 0..nb {
            for k in 0..na {
                let col = j * na + k;
                if j == 0 {
                    r.set(k * nb, col, f.one());
                } else if k == 0 {
                    r.set(j, col, f.one());
                }
            }
        }
        for (s, &(j, k)) in self.free_slots.iter().enumerate() {
            for row in 0..n {
                r.set(row, j * na + k, f.from_i64(digits[s * n + row] as i64));
            }
        }
        r
    }
}

#[derive(Clone, Debug)]
pub struct Classified {
    pub r: Matrix,
    pub report: Report,
}

/// Every normal `R` whose smash product is associative, in lexicographic
/// order of the parameter vector.
pub fn enumerate_normal_r(
    a: &FiniteDimAlgebra,
    b: &FiniteDimAlgebra,
    field: FieldSpec,
    budget: u64,
) -> Result<Vec<Classified>, ClassifyError> {
    let space = SearchSpace::new(a, b, field, DEFAULT_PARAM_CAP)?;
    enumerate_space(&space, budget)
}

pub fn enumerate_space(space: &SearchSpace, budget: u64) -> Result<Vec<Classified>, ClassifyError> {
    let total = match space.candidates() {
        Some(t) if t <= budget => t,
        other => {
            return Err(ClassifyError::BudgetExceeded {
                needed: other.map_or_else(
                    || format!("{}^{}", space.field.modulus().unwrap(), space.params()),
                    |t| t.to_string(),
                ),
                budget,
            })
        }
    };
    let checker = SmashChecker::new(&space.a, &space.b);
    let found: Vec<Classified> = (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let r = space.candidate(i);
            let d = SmashData {
                a: space.a.clone(),
                b: space.b.clone(),
                r,
            };
            let report = checker.report(&d);
            report.passed().then_some(Classified { r: d.r, report })
        })
        .collect();
    Ok(found)
}

/// The normal map on `kC₂ ⊗ kC₂` (bases `1, a` and `1, b`) with
/// `R(b ⊗ a) = α a⊗b + β a⊗1 + γ 1⊗b + δ 1⊗1`.
pub fn c2c2_r(alpha: &Scalar, beta: &Scalar, gamma: &Scalar, delta: &Scalar) -> Matrix {
    let f = alpha.field();
    let mut r = Matrix::zeros(f, 4, 4);
    r.set(0, 0, f.one());
    // R(1⊗a) = a⊗1, R(b⊗1) = 1⊗b
    r.set(2, 1, f.one());
    r.set(1, 2, f.one());
    for (row, v) in [delta, gamma, beta, alpha].into_iter().enumerate() {
        r.set(row, 3, v.clone());
    }
    r
}

pub fn kc2_algebra(f: FieldSpec) -> FiniteDimAlgebra {
    crate::catalog::group_algebra(&crate::catalog::GroupTable::cyclic(2), f)
        .algebra()
        .clone()
}

/// The eight polynomial conditions on `(α, β, γ, δ)` for multiplicativity.
pub fn verify_c2c2_system(
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    delta: &Scalar,
) -> Result<bool, ClassifyError> {
    let f = alpha.field();
    for s in [beta, gamma, delta] {
        if s.field() != f {
            return Err(ClassifyError::FieldMismatch(f, s.field()));
        }
    }
    let (a, b, c, d) = (alpha, beta, gamma, delta);
    let two = f.from_i64(2);
    let one = f.one();
    let eqs = [
        &(&two * a) * b,
        &(&(a * a) + &(b * b)) - &one,
        &(&(a * d) + &(b * c)) + d,
        &(&(a * c) + &(b * d)) + c,
        &(&two * a) * c,
        &(&(a * d) + &(b * c)) + d,
        &(&(a * a) + &(c * c)) - &one,
        &(&(a * b) + &(c * d)) + b,
    ];
    Ok(eqs.iter().all(Scalar::is_zero))
}

/// Whether the generic checker finds the normal map of `(α, β, γ, δ)`
/// multiplicative on both sides.
pub fn c2c2_generic(alpha: &Scalar, beta: &Scalar, gamma: &Scalar, delta: &Scalar) -> bool {
    let f = alpha.field();
    let d = SmashData {
        a: kc2_algebra(f),
        b: kc2_algebra(f),
        r: c2c2_r(alpha, beta, gamma, delta),
    };
    is_left_multiplicative(&d) && is_right_multiplicative(&d)
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyInstance {
    pub family: &'static str,
    /// `(α, β, γ, δ)`
    pub params: [Scalar; 4],
}

/// Instances of the closed-form solution families: `(a)(i)–(ii)` in
/// characteristic 2, `(b)(i)–(vi)` otherwise. Free parameters run over all
/// of GF(p), or over `{0, ±1, 2, 1/2}` for the rationals.
pub fn family_instances(f: FieldSpec) -> Vec<FamilyInstance> {
    let samples: Vec<Scalar> = match f.elements() {
        Some(all) => all,
        None => ["0", "1", "-1", "2", "1/2"]
            .iter()
            .map(|s| f.parse(s).unwrap())
            .collect(),
    };
    let (z, o) = (f.zero(), f.one());
    let m = -f.one();
    let mut out = Vec::new();
    let mut push = |family, params: [Scalar; 4]| out.push(FamilyInstance { family, params });
    if f.characteristic() == 2 {
        for d in &samples {
            push("(a)(i)", [o.clone(), z.clone(), z.clone(), d.clone()]);
        }
        for b in &samples {
            push("(a)(ii)", [b + &o, b.clone(), b.clone(), b.clone()]);
        }
    } else {
        push("(b)(i)", [o.clone(), z.clone(), z.clone(), z.clone()]);
        for d in &samples {
            push("(b)(ii)", [m.clone(), z.clone(), z.clone(), d.clone()]);
        }
        push("(b)(iii)", [z.clone(), o.clone(), o.clone(), m.clone()]);
        push("(b)(iv)", [z.clone(), o.clone(), m.clone(), o.clone()]);
        push("(b)(v)", [z.clone(), m.clone(), o.clone(), o.clone()]);
        push("(b)(vi)", [z.clone(), m.clone(), m.clone(), m.clone()]);
    }
    out
}

/// Every family instance must give a smash product; over GF(p) the set of
/// instances must also equal the exhaustive enumeration.
pub fn verify_closed_families(f: FieldSpec) -> Report {
    let mut rep = Report::new(format!("kC2 # kC2 families over {f}"));
    let a = kc2_algebra(f);
    let checker = SmashChecker::new(&a, &a);
    let instances = family_instances(f);
    for inst in &instances {
        let [al, be, ga, de] = &inst.params;
        let d = SmashData {
            a: a.clone(),
            b: a.clone(),
            r: c2c2_r(al, be, ga, de),
        };
        let r = checker.report(&d);
        rep.push(
            Check::new(
                format!("{} at (α,β,γ,δ) = ({al}, {be}, {ga}, {de})", inst.family),
                r.passed(),
            )
            .with_detail(r.first_failure().map(|c| c.name.clone()).unwrap_or_default()),
        );
    }
    if !f.is_rational() {
        let mut fam: Vec<Vec<Scalar>> = instances
            .iter()
            .map(|i| c2c2_r(&i.params[0], &i.params[1], &i.params[2], &i.params[3]).column(3))
            .collect();
        fam.sort_by_key(|v| v.iter().map(|s| s.residue().unwrap()).collect::<Vec<_>>());
        fam.dedup();
        match enumerate_normal_r(&a, &a, f, DEFAULT_BUDGET) {
            Ok(found) => {
                let mut got: Vec<Vec<Scalar>> = found.iter().map(|c| c.r.column(3)).collect();
                got.sort_by_key(|v| v.iter().map(|s| s.residue().unwrap()).collect::<Vec<_>>());
                rep.push(Check::new("families = enumeration", fam == got).with_detail(format!(
                    "{} family maps, {} enumerated",
                    fam.len(),
                    got.len()
                )));
            }
            Err(e) => {
                rep.push(Check::new("families = enumeration", false).with_detail(e.to_string()));
            }
        }
    }
    rep
}

/// Agreement counts of the three smash-product characterizations over a
/// set of candidate maps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EquivalenceTally {
    pub total: u64,
    pub smash_products: u64,
    pub disagreements: u64,
    pub first_disagreement: Option<u64>,
}

/// Runs all three characterizations on every `4 x 4` matrix over GF(2) for
/// `kC₂ ⊗ kC₂` (2¹⁶ candidates).
pub fn exhaustive_c2c2_gf2() -> EquivalenceTally {
    let f = FieldSpec::prime(2).expect("2 is prime");
    let a = kc2_algebra(f);
    tally(&a, &a, 1 << 16, |bits| {
        Matrix::from_fn(f, 4, 4, |r, c| f.from_i64(((bits >> (r * 4 + c)) & 1) as i64))
    })
}

/// Evaluates `count` candidate maps `make(0), make(1), …` in parallel.
pub fn tally(
    a: &FiniteDimAlgebra,
    b: &FiniteDimAlgebra,
    count: u64,
    make: impl Fn(u64) -> Matrix + Sync,
) -> EquivalenceTally {
    let checker = SmashChecker::new(a, b);
    let results: Vec<(bool, bool)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let d = SmashData {
                a: a.clone(),
                b: b.clone(),
                r: make(i),
            };
            let rep = checker.report(&d);
            (rep.passed(), rep.consistency_errors.is_empty())
        })
        .collect();
    let mut t = EquivalenceTally {
        total: count,
        ..Default::default()
    };
    for (i, &(pass, agree)) in results.iter().enumerate() {
        if pass {
            t.smash_products += 1;
        }
        if !agree {
            t.disagreements += 1;
            t.first_disagreement.get_or_insert(i as u64);
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(f: FieldSpec) -> Vec<[Scalar; 4]> {
        let all = f.elements().unwrap();
        let mut out = Vec::new();
        for a in &all {
            for b in &all {
                for c in &all {
                    for d in &all {
                        out.push([a.clone(), b.clone(), c.clone(), d.clone()]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn gf3_has_eight() {
        let f = FieldSpec::prime(3).unwrap();
        let a = kc2_algebra(f);
        assert_eq!(enumerate_normal_r(&a, &a, f, DEFAULT_BUDGET).unwrap().len(), 8);
        assert!(verify_closed_families(f).passed());
    }

    #[test]
    fn gf2_has_three() {
        let f = FieldSpec::prime(2).unwrap();
        let a = kc2_algebra(f);
        assert_eq!(enumerate_normal_r(&a, &a, f, DEFAULT_BUDGET).unwrap().len(), 3);
        assert!(verify_closed_families(f).passed());
    }

    #[test]
    fn one_dimensional() {
        let f = FieldSpec::prime(5).unwrap();
        let k = FiniteDimAlgebra::from_table(f, 1, vec![f.one()], |_, _| vec![f.one()]).unwrap();
        let found = enumerate_normal_r(&k, &k, f, DEFAULT_BUDGET).unwrap();
        assert_eq!(found.len(), 1);
        assert!(found[0].r.is_identity());
    }

    #[test]
    fn guards() {
        let f = FieldSpec::prime(3).unwrap();
        let a = kc2_algebra(f);
        assert!(matches!(
            enumerate_normal_r(&a, &a, f, 10),
            Err(ClassifyError::BudgetExceeded { .. })
        ));
        let q = FieldSpec::RATIONAL;
        assert_eq!(
            enumerate_normal_r(&kc2_algebra(q), &kc2_algebra(q), q, DEFAULT_BUDGET).unwrap_err(),
            ClassifyError::FieldNotPrime(q)
        );
        // basis (a, 1): unit second
        let swapped = FiniteDimAlgebra::from_table(f, 2, vec![f.zero(), f.one()], |i, j| {
            let mut v = vec![f.zero(); 2];
            v[(i + j + 1) % 2] = f.one();
            v
        })
        .unwrap();
        assert!(swapped.check().passed());
        assert_eq!(
            enumerate_normal_r(&swapped, &a, f, DEFAULT_BUDGET).unwrap_err(),
            ClassifyError::UnitNotFirstBasisVector("A")
        );
        let big = crate::catalog::group_algebra(&crate::catalog::GroupTable::cyclic(3), f);
        assert!(matches!(
            enumerate_normal_r(big.algebra(), big.algebra(), f, DEFAULT_BUDGET),
            Err(ClassifyError::CapExceeded { params: 36, cap: 8 })
        ));
    }

    #[test]
    fn polynomial_system_matches_generic_checker() {
        for p in [2, 3, 5] {
            let f = FieldSpec::prime(p).unwrap();
            for [a, b, c, d] in params(f) {
                assert_eq!(
                    verify_c2c2_system(&a, &b, &c, &d).unwrap(),
                    c2c2_generic(&a, &b, &c, &d),
                    "GF({p}) at ({a}, {b}, {c}, {d})"
                );
            }
        }
    }

    #[test]
    fn system_examples() {
        let q = FieldSpec::RATIONAL;
        let s = |v: i64| q.from_i64(v);
        assert!(verify_c2c2_system(&s(1), &s(0), &s(0), &s(0)).unwrap());
        for d in [-3, 0, 7] {
            assert!(verify_c2c2_system(&s(-1), &s(0), &s(0), &s(d)).unwrap());
        }
        assert!(!verify_c2c2_system(&s(1), &s(1), &s(0), &s(0)).unwrap());
        assert!(!c2c2_generic(&s(1), &s(1), &s(0), &s(0)));
        let g = FieldSpec::prime(3).unwrap().one();
        assert!(verify_c2c2_system(&s(1), &g, &s(0), &s(0)).is_err());
    }

    #[test]
    fn rational_families_pass() {
        assert!(verify_closed_families(FieldSpec::RATIONAL).passed());
    }

    #[test]
    fn deterministic_order() {
        let f = FieldSpec::prime(3).unwrap();
        let a = kc2_algebra(f);
        let x: Vec<Matrix> = enumerate_normal_r(&a, &a, f, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .map(|c| c.r)
            .collect();
        let y: Vec<Matrix> = enumerate_normal_r(&a, &a, f, DEFAULT_BUDGET)
            .unwrap()
            .into_iter()
            .map(|c| c.r)
            .collect();
        assert_eq!(x, y);
        // lexicographic in the parameter vector: the column (δ, γ, β, α) increases
        let keys: Vec<Vec<u64>> = x
            .iter()
            .map(|r| r.column(3).iter().map(|s| s.residue().unwrap()).collect())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }
}

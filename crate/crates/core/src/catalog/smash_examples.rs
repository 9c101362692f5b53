use crate::field::{FieldSpec, Scalar};
use crate::linalg::{invert, kron, Matrix, TensorIndex};
use crate::report::{compare_maps, Report};
use crate::smash::{build_smash, is_smash_product, SmashData};
use crate::structures::{check_algebra_map, FiniteDimAlgebra, HopfAlgebra};

use super::groups::{group_algebra, GroupTable};
use super::{unit_vec, CatalogError};

/// `k[X]/(X^n)` on the basis `1, x, …, x^{n-1}`.
pub fn truncated_polynomial(f: FieldSpec, n: usize, var: &str) -> FiniteDimAlgebra {
    FiniteDimAlgebra::from_table(f, n, unit_vec(f, n, 0), |i, j| {
        if i + j < n {
            unit_vec(f, n, i + j)
        } else {
            vec![f.zero(); n]
        }
    })
    .expect("shape")
    .with_names(
        (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            })
            .collect(),
    )
}

/// `k[X]/(X² − a)` on the basis `1, x`.
pub fn quadratic_algebra(a: &Scalar, var: &str) -> FiniteDimAlgebra {
    let f = a.field();
    FiniteDimAlgebra::from_table(f, 2, unit_vec(f, 2, 0), |i, j| match (i, j) {
        (1, 1) => vec![a.clone(), f.zero()],
        _ => unit_vec(f, 2, i + j),
    })
    .expect("shape")
    .with_names(vec!["1".into(), var.into()])
}

/// The normal map `R: B ⊗ A -> A ⊗ B` with prescribed values on the
/// non-unit basis pairs. `images(b, a)` gives `R(e_b ⊗ e_a)` for `a, b ≥ 1`;
/// both algebras must have their unit as the first basis vector.
pub fn normal_r(
    a: &FiniteDimAlgebra,
    b: &FiniteDimAlgebra,
    images: impl Fn(usize, usize) -> Vec<Scalar>,
) -> Result<Matrix, CatalogError> {
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    if a.unit() != unit_vec(f, na, 0).as_slice() || b.unit() != unit_vec(f, nb, 0).as_slice() {
        return Err(CatalogError::ParamsInvalid(
            "unit must be the first basis vector".into(),
        ));
    }
    let mut r = Matrix::zeros(f, na * nb, nb * na);
    for j in 0..nb {
        for k in 0..na {
            let col = j * na + k;
            if j == 0 {
                r.set(k * nb, col, f.one());
            } else if k == 0 {
                r.set(j, col, f.one());
            } else {
                for (row, v) in images(j, k).into_iter().enumerate() {
                    r.set(row, col, v);
                }
            }
        }
    }
    Ok(r)
}

fn verified(d: SmashData) -> Result<SmashData, CatalogError> {
    let rep = is_smash_product(&d);
    if rep.passed() {
        Ok(d)
    } else {
        Err(CatalogError::NotSmash(Box::new(rep)))
    }
}

/// The skew group algebra `A *_σ G`: `R(g ⊗ a) = σ(g)(a) ⊗ g`.
pub fn skew_group_r(a: &FiniteDimAlgebra, g: &GroupTable, sigma: &[Matrix]) -> Result<SmashData, CatalogError> {
    let f = a.field();
    let n = a.dim();
    if sigma.len() != g.order {
        return Err(CatalogError::ParamsInvalid(format!(
            "{} automorphisms for a group of order {}",
            sigma.len(),
            g.order
        )));
    }
    for (x, s) in sigma.iter().enumerate() {
        if !check_algebra_map(s, a, a).passed() || invert(s).is_err() {
            return Err(CatalogError::NotAnAction(format!(
                "σ({x}) is not an algebra automorphism"
            )));
        }
    }
    for x in 0..g.order {
        for y in 0..g.order {
            if !sigma[g.mul(x, y)].same_as(&sigma[x].matmul(&sigma[y]).expect("square")) {
                return Err(CatalogError::NotAnAction(format!("σ({x}·{y}) ≠ σ({x})σ({y})")));
            }
        }
    }
    let kg = group_algebra(g, f);
    let m = g.order;
    let mut r = Matrix::zeros(f, n * m, m * n);
    for x in 0..m {
        for k in 0..n {
            for p in 0..n {
                r.set(p * m + x, x * n + k, sigma[x].get(p, k).clone());
            }
        }
    }
    verified(SmashData::new(a.clone(), kg.algebra().clone(), r)?)
}

/// The generalized quaternion algebra `A #_R B` with `A = k[X]/(X²−a)`,
/// `B = k[X]/(X²−b)` and `R(j ⊗ i) = −i ⊗ j`.
pub fn quaternion(a: &Scalar, b: &Scalar) -> Result<(FiniteDimAlgebra, SmashData), CatalogError> {
    if a.field() != b.field() {
        return Err(CatalogError::ParamsInvalid("a and b live in different fields".into()));
    }
    let f = a.field();
    let aa = quadratic_algebra(a, "i");
    let bb = quadratic_algebra(b, "j");
    let r = normal_r(&aa, &bb, |_, _| {
        let mut v = vec![f.zero(); 4];
        v[3] = -f.one();
        v
    })?;
    let d = verified(SmashData::new(aa, bb, r)?)?;
    let alg = build_smash(&d)?.with_names(vec!["1".into(), "j".into(), "i".into(), "ij".into()]);
    Ok((alg, d))
}

/// `R(g ⊗ h) = (g·h) ⊗ g^h` on `kG ⊗ kH -> kH ⊗ kG`. The matched-pair
/// axioms are not checked; use [`is_smash_product`] on the result.
pub fn matched_pair_r(
    g: &GroupTable,
    h: &GroupTable,
    act: &[Vec<usize>],
    coact: &[Vec<usize>],
    f: FieldSpec,
) -> Result<SmashData, CatalogError> {
    let (m, n) = (g.order, h.order);
    let well_formed =
        |t: &[Vec<usize>], bound: usize| t.len() == m && t.iter().all(|r| r.len() == n && r.iter().all(|&v| v < bound));
    if !well_formed(act, n) || !well_formed(coact, m) {
        return Err(CatalogError::ParamsInvalid(
            "action tables must be |G| x |H| with valid entries".into(),
        ));
    }
    let mut r = Matrix::zeros(f, n * m, m * n);
    for x in 0..m {
        for y in 0..n {
            r.set(act[x][y] * m + coact[x][y], x * n + y, f.one());
        }
    }
    Ok(SmashData::new(
        group_algebra(h, f).algebra().clone(),
        group_algebra(g, f).algebra().clone(),
        r,
    )?)
}

/// A left `H`-module algebra: `action: H ⊗ A -> A`.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra {
    pub algebra: FiniteDimAlgebra,
    pub action: Matrix,
}

/// A right `H`-comodule algebra: `coaction: A -> A ⊗ H`.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub algebra: FiniteDimAlgebra,
    pub coaction: Matrix,
}

pub fn check_module_algebra(h: &HopfAlgebra, m: &ModuleAlgebra) -> Report {
    let f = h.field();
    let (nh, na) = (h.dim(), m.algebra.dim());
    let mut rep = Report::new("module algebra");
    let id_a = Matrix::identity(f, na);
    let id_h = Matrix::identity(f, nh);
    let lhs = m.action.matmul(&kron(&id_h, &m.action).unwrap()).unwrap();
    let rhs = m
        .action
        .matmul(&kron(&h.algebra().mult_matrix(), &id_a).unwrap())
        .unwrap();
    rep.push(compare_maps(
        "associativity",
        &lhs,
        &rhs,
        &TensorIndex::new(&[nh, nh, na]),
    ));
    let unit = m
        .action
        .matmul(&kron(&h.algebra().unit_matrix(), &id_a).unwrap())
        .unwrap();
    rep.push(compare_maps("unit", &unit, &id_a, &TensorIndex::new(&[na])));
    // h·(ab) = Σ (h₁·a)(h₂·b)
    let lhs = m
        .action
        .matmul(&kron(&id_h, &m.algebra.mult_matrix()).unwrap())
        .unwrap();
    let shuffle = crate::linalg::permute_factors(&[nh, nh, na, na], &[0, 2, 1, 3], f);
    let rhs = Matrix::compose(&[
        &m.algebra.mult_matrix(),
        &kron(&m.action, &m.action).unwrap(),
        &shuffle,
        &kron(&h.coalgebra().comult_matrix(), &kron(&id_a, &id_a).unwrap()).unwrap(),
    ])
    .unwrap();
    rep.push(compare_maps("measuring", &lhs, &rhs, &TensorIndex::new(&[nh, na, na])));
    let lhs = m
        .action
        .matmul(&kron(&id_h, &m.algebra.unit_matrix()).unwrap())
        .unwrap();
    let rhs = m.algebra.unit_matrix().matmul(&h.coalgebra().counit_matrix()).unwrap();
    rep.push(compare_maps("h·1 = ε(h)1", &lhs, &rhs, &TensorIndex::new(&[nh])));
    rep
}

pub fn check_comodule_algebra(h: &HopfAlgebra, c: &ComoduleAlgebra) -> Report {
    let f = h.field();
    let (nh, na) = (h.dim(), c.algebra.dim());
    let mut rep = Report::new("comodule algebra");
    let id_a = Matrix::identity(f, na);
    let id_h = Matrix::identity(f, nh);
    let lhs = kron(&c.coaction, &id_h).unwrap().matmul(&c.coaction).unwrap();
    let rhs = kron(&id_a, &h.coalgebra().comult_matrix())
        .unwrap()
        .matmul(&c.coaction)
        .unwrap();
    rep.push(compare_maps("coassociativity", &lhs, &rhs, &TensorIndex::new(&[na])));
    let counit = kron(&id_a, &h.coalgebra().counit_matrix())
        .unwrap()
        .matmul(&c.coaction)
        .unwrap();
    rep.push(compare_maps("counit", &counit, &id_a, &TensorIndex::new(&[na])));
    let tensor = crate::structures::tensor_algebra(&c.algebra, h.algebra()).unwrap();
    for mut chk in check_algebra_map(&c.coaction, &c.algebra, &tensor).checks {
        chk.name = format!("ρ {}", chk.name);
        rep.push(chk);
    }
    rep
}

/// `R(b ⊗ a) = Σ x²·a ⊗ x¹·b` for `x = Σ x¹ ⊗ x² ∈ H ⊗ H`.
pub fn qt_smash_r(
    h: &HopfAlgebra,
    a: &ModuleAlgebra,
    b: &ModuleAlgebra,
    x: &[Scalar],
) -> Result<(SmashData, Report), CatalogError> {
    let nh = h.dim();
    if x.len() != nh * nh {
        return Err(CatalogError::ParamsInvalid(format!(
            "x has length {}, expected {}",
            x.len(),
            nh * nh
        )));
    }
    for (what, m) in [("A", a), ("B", b)] {
        if !check_module_algebra(h, m).passed() {
            return Err(CatalogError::NotAnAction(format!("{what} is not an H-module algebra")));
        }
    }
    let f = h.field();
    let (na, nb) = (a.algebra.dim(), b.algebra.dim());
    let mut r = Matrix::zeros(f, na * nb, nb * na);
    for (st, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (s, t) = (st / nh, st % nh);
        for j in 0..nb {
            for k in 0..na {
                for p in 0..na {
                    let ap = a.action.get(p, t * na + k);
                    if ap.is_zero() {
                        continue;
                    }
                    for q in 0..nb {
                        let bq = b.action.get(q, s * nb + j);
                        if !bq.is_zero() {
                            r.add_at(p * nb + q, j * na + k, &(&(c * ap) * bq));
                        }
                    }
                }
            }
        }
    }
    let d = SmashData::new(a.algebra.clone(), b.algebra.clone(), r)?;
    let rep = is_smash_product(&d);
    Ok((d, rep))
}

/// `R(b ⊗ a) = Σ σ(a₁ ⊗ b₁) a₀ ⊗ b₀` for right comodule algebras and a
/// bilinear form `σ` given as a `1 x n²` row.
pub fn cqt_smash_r(
    h: &HopfAlgebra,
    a: &ComoduleAlgebra,
    b: &ComoduleAlgebra,
    sigma: &Matrix,
) -> Result<(SmashData, Report), CatalogError> {
    let nh = h.dim();
    if sigma.shape() != (1, nh * nh) {
        return Err(CatalogError::ParamsInvalid(format!(
            "σ has shape {:?}, expected (1, {})",
            sigma.shape(),
            nh * nh
        )));
    }
    for (what, m) in [("A", a), ("B", b)] {
        if !check_comodule_algebra(h, m).passed() {
            return Err(CatalogError::NotAnAction(format!(
                "{what} is not an H-comodule algebra"
            )));
        }
    }
    let f = h.field();
    let (na, nb) = (a.algebra.dim(), b.algebra.dim());
    let mut r = Matrix::zeros(f, na * nb, nb * na);
    for j in 0..nb {
        for k in 0..na {
            for p in 0..na {
                for u in 0..nh {
                    let ca = a.coaction.get(p * nh + u, k);
                    if ca.is_zero() {
                        continue;
                    }
                    for q in 0..nb {
                        for v in 0..nh {
                            let cb = b.coaction.get(q * nh + v, j);
                            let s = sigma.get(0, u * nh + v);
                            if !cb.is_zero() && !s.is_zero() {
                                r.add_at(p * nb + q, j * na + k, &(&(s * ca) * cb));
                            }
                        }
                    }
                }
            }
        }
    }
    let d = SmashData::new(a.algebra.clone(), b.algebra.clone(), r)?;
    let rep = is_smash_product(&d);
    Ok((d, rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::switch;

    #[test]
    fn trivial_action_gives_switch() {
        let q = FieldSpec::RATIONAL;
        let a = truncated_polynomial(q, 3, "x");
        let g = GroupTable::cyclic(2);
        let d = skew_group_r(&a, &g, &[Matrix::identity(q, 3), Matrix::identity(q, 3)]).unwrap();
        assert!(d.r.same_as(&switch(2, 3, q)));
    }

    #[test]
    fn sign_action_on_dual_numbers_is_sweedler() {
        let q = FieldSpec::RATIONAL;
        let a = truncated_polynomial(q, 2, "x");
        let neg = Matrix::from_i64_rows(q, &[vec![1, 0], vec![0, -1]]);
        let d = skew_group_r(&a, &GroupTable::cyclic(2), &[Matrix::identity(q, 2), neg]).unwrap();
        // R(g ⊗ x) = −x ⊗ g: column g⊗x = 1·2+1, row x⊗g = 1·2+1
        assert_eq!(d.r.get(3, 3), &q.from_i64(-1));
        let h4 = build_smash(&d).unwrap();
        // (x⊗1)(1⊗g) + (1⊗g)(x⊗1) = 0
        let xg = h4.mul(&h4.basis_vector(2), &h4.basis_vector(1));
        let gx = h4.mul(&h4.basis_vector(1), &h4.basis_vector(2));
        assert!(xg.iter().zip(&gx).all(|(u, v)| (u + v).is_zero()));
    }

    #[test]
    fn swap_action_on_k_times_k() {
        let f = FieldSpec::prime(5).unwrap();
        // k × k with idempotents e₁, e₂ rewritten on the basis 1 = e₁+e₂, e = e₁
        let a = FiniteDimAlgebra::from_table(f, 2, unit_vec(f, 2, 0), |i, j| match (i, j) {
            (0, k) | (k, 0) => unit_vec(f, 2, k),
            _ => unit_vec(f, 2, 1),
        })
        .unwrap();
        // swap: e ↦ 1 − e
        let swap = Matrix::from_i64_rows(f, &[vec![1, 1], vec![0, -1]]);
        let d = skew_group_r(&a, &GroupTable::cyclic(2), &[Matrix::identity(f, 2), swap]).unwrap();
        assert!(is_smash_product(&d).passed());
    }

    #[test]
    fn non_action_rejected() {
        let q = FieldSpec::RATIONAL;
        let a = truncated_polynomial(q, 2, "x");
        let scale = Matrix::from_i64_rows(q, &[vec![1, 0], vec![0, 2]]);
        let err = skew_group_r(&a, &GroupTable::cyclic(2), &[Matrix::identity(q, 2), scale]).unwrap_err();
        assert!(matches!(err, CatalogError::NotAnAction(_)));
    }

    #[test]
    fn hamilton_quaternions() {
        let q = FieldSpec::RATIONAL;
        let m1 = q.from_i64(-1);
        let (alg, _) = quaternion(&m1, &m1).unwrap();
        let ij = alg.basis_vector(3);
        let sq = alg.mul(&ij, &ij);
        assert_eq!(sq, vec![m1.clone(), q.zero(), q.zero(), q.zero()]);
        assert!(!alg.is_commutative());
        let one = q.one();
        assert!(quaternion(&one, &one).is_ok());
        for (x, y) in [(2, 3), (-5, 7), (0, 1)] {
            assert!(quaternion(&q.from_i64(x), &q.from_i64(y)).is_ok());
        }
    }

    #[test]
    fn trivial_matched_pair_is_switch() {
        let q = FieldSpec::RATIONAL;
        let (g, h) = (GroupTable::cyclic(2), GroupTable::cyclic(3));
        let act: Vec<Vec<usize>> = (0..2).map(|_| (0..3).collect()).collect();
        let coact: Vec<Vec<usize>> = (0..2).map(|x| vec![x; 3]).collect();
        let d = matched_pair_r(&g, &h, &act, &coact, q).unwrap();
        assert!(d.r.same_as(&switch(2, 3, q)));
        assert!(is_smash_product(&d).passed());
    }

    #[test]
    fn qt_and_cqt_trivial_cases() {
        let f = FieldSpec::prime(3).unwrap();
        let h = group_algebra(&GroupTable::cyclic(2), f);
        let kc2 = h.algebra().clone();
        // trivial action h·a = ε(h)a
        let triv = ModuleAlgebra {
            algebra: kc2.clone(),
            action: kron(&h.coalgebra().counit_matrix(), &Matrix::identity(f, 2)).unwrap(),
        };
        let one_one = unit_vec(f, 4, 0);
        let (d, rep) = qt_smash_r(&h, &triv, &triv, &one_one).unwrap();
        assert!(d.r.same_as(&switch(2, 2, f)) && rep.passed());

        let co = ComoduleAlgebra {
            algebra: kc2.clone(),
            coaction: kron(&Matrix::identity(f, 2), &h.algebra().unit_matrix()).unwrap(),
        };
        let eps = kron(&h.coalgebra().counit_matrix(), &h.coalgebra().counit_matrix()).unwrap();
        let (d, rep) = cqt_smash_r(&h, &co, &co, &eps).unwrap();
        assert!(d.r.same_as(&switch(2, 2, f)) && rep.passed());
    }

    #[test]
    fn kc2_r_matrix_over_gf3() {
        // x = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g), g acting on kC₂ by a ↦ −a
        let f = FieldSpec::prime(3).unwrap();
        let h = group_algebra(&GroupTable::cyclic(2), f);
        let sign = Matrix::from_i64_rows(f, &[vec![1, 0, 1, 0], vec![0, 1, 0, -1]]);
        let m = ModuleAlgebra {
            algebra: h.algebra().clone(),
            action: sign,
        };
        assert!(check_module_algebra(&h, &m).passed());
        let half = f.from_i64(2);
        let x: Vec<Scalar> = [1, 1, 1, -1].iter().map(|&v| &f.from_i64(v) * &half).collect();
        let (d, rep) = qt_smash_r(&h, &m, &m, &x).unwrap();
        assert!(rep.passed(), "{rep}");
        // R(b⊗a) = −a⊗b
        assert_eq!(d.r.get(3, 3), &f.from_i64(-1));
    }
}

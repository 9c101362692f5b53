mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use smashkit::biproduct::{check_r_smash, check_w_smash, is_smash_biproduct, BiproductData};
use smashkit::catalog::{by_name, CatalogObject};
use smashkit::classify::{c2c2_generic, enumerate_normal_r, verify_c2c2_system};
use smashkit::cosmash::{is_smash_coproduct, CosmashData};
use smashkit::field::{find_root_of_unity, FieldSpec, Scalar};
use smashkit::format::Document;
use smashkit::hopfmod::{r_switch, r_yetter_drinfeld};
use smashkit::linalg::{kron, switch, Matrix};
use smashkit::smash::{build_smash, SmashChecker, SmashData};
use smashkit::structures::{
    antipode_system, compute_antipode, dual_of_algebra, dual_of_coalgebra, BialgebraCandidate, HopfAlgebra,
};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 13, 101];

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::RATIONAL),
        prop::sample::select(&PRIMES[..]).prop_map(|p| FieldSpec::prime(p).unwrap()),
    ]
}

fn scalar(f: FieldSpec) -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..12).prop_map(move |(n, d)| f.parse(&format!("{n}/{d}")).unwrap_or_else(|_| f.from_i64(n)))
}

fn scalars(n: usize) -> impl Strategy<Value = (FieldSpec, Vec<Scalar>)> {
    field().prop_flat_map(move |f| (Just(f), prop::collection::vec(scalar(f), n)))
}

fn matrix(f: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(scalar(f), rows * cols)
        .prop_map(move |v| Matrix::from_fn(f, rows, cols, |r, c| v[r * cols + c].clone()))
}

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn hopf(name: &str, f: FieldSpec) -> HopfAlgebra {
    by_name(name, f).unwrap().hopf().unwrap()
}

const HOPF_NAMES: [&str; 9] = [
    "group:cyclic:3",
    "group:product:2x2",
    "group:s3",
    "dualgroup:s3",
    "sweedler",
    "taft:3:7",
    "radford:2:2:4:1:prime:5",
    "en:2",
    "double:group:cyclic:2",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((f, v) in scalars(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a - a, f.zero());
        if !a.is_zero() {
            prop_assert_eq!(a * &a.inv().unwrap(), f.one());
            prop_assert_eq!(&(b / a) * a, b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn kron_bilinear_and_associative(
        x in field().prop_flat_map(|f| (matrix(f, 2, 3), matrix(f, 2, 3), matrix(f, 3, 2), matrix(f, 2, 2), scalar(f)))
    ) {
        let (a, a2, b, c, s) = x;
        prop_assert_eq!(
            kron(&kron(&a, &b).unwrap(), &c).unwrap(),
            kron(&a, &kron(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            kron(&a.add(&a2.scale(&s)).unwrap(), &b).unwrap(),
            kron(&a, &b).unwrap().add(&kron(&a2, &b).unwrap().scale(&s)).unwrap()
        );
        // (f⊗g)(v⊗w) = f(v)⊗g(w) on basis vectors
        let k = kron(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..2 {
                let lhs = k.column(i * 2 + j);
                let (fv, gw) = (a.column(i), b.column(j));
                let rhs: Vec<Scalar> = fv.iter().flat_map(|x| gw.iter().map(move |y| x * y)).collect();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn switch_is_an_involution(m in 1usize..5, n in 1usize..5) {
        let f = FieldSpec::RATIONAL;
        prop_assert!(switch(n, m, f).matmul(&switch(m, n, f)).unwrap().is_identity());
    }

    #[test]
    fn smash_product_of_random_map_matches_oracle(r in matrix(gf(5), 4, 4), seed_a in 0usize..2, seed_b in 0usize..2) {
        let f = gf(5);
        let algebras = [group_algebra(f, 2), truncated(f, 2)];
        let (a, b) = (&algebras[seed_a], &algebras[seed_b]);
        let rep = SmashChecker::new(a, b).report(&SmashData { a: a.clone(), b: b.clone(), r: r.clone() });
        prop_assert!(rep.consistency_errors.is_empty(), "{:?}", rep.consistency_errors);
        prop_assert_eq!(rep.passed(), naive_is_smash(a, b, &r));
    }

    #[test]
    fn w_switch_biproducts_are_r_smash(r in matrix(gf(3), 4, 4), li in 0usize..2, hi in 0usize..2) {
        let f = gf(3);
        let factors = bialgebra_factors(f);
        let (l, h) = (&factors[li], &factors[hi]);
        let d = BiproductData::new(l.clone(), h.clone(), r.clone(), switch(2, 2, f)).unwrap();
        prop_assert_eq!(check_r_smash(l, h, &r).unwrap().passed(), is_smash_biproduct(&d).passed());
    }

    #[test]
    fn r_switch_biproducts_are_w_smash(w in matrix(gf(3), 4, 4), li in 0usize..2, hi in 0usize..2) {
        let f = gf(3);
        let factors = bialgebra_factors(f);
        let (l, h) = (&factors[li], &factors[hi]);
        let d = BiproductData::new(l.clone(), h.clone(), switch(2, 2, f), w.clone()).unwrap();
        prop_assert_eq!(check_w_smash(l, h, &w).unwrap().passed(), is_smash_biproduct(&d).passed());
    }
}

/// kC₂ and its dual over `f`.
fn bialgebra_factors(f: FieldSpec) -> [BialgebraCandidate; 2] {
    let kc2 = BialgebraCandidate::new(group_algebra(f, 2), grouplike_coalgebra(f, 2)).unwrap();
    let dual = BialgebraCandidate::new(dual_of_coalgebra(&kc2.coalgebra), dual_of_algebra(&kc2.algebra)).unwrap();
    [kc2, dual]
}

#[test]
fn roots_of_unity_have_exact_order() {
    for p in [3u64, 5, 7, 11, 13, 101] {
        let f = gf(p);
        for n in 1..p {
            if (p - 1) % n != 0 {
                assert!(find_root_of_unity(f, n).is_err());
                continue;
            }
            let w = find_root_of_unity(f, n).unwrap();
            assert_eq!(w.pow(n as i64).unwrap(), f.one());
            for m in 1..n {
                assert_ne!(w.pow(m as i64).unwrap(), f.one(), "p={p} n={n} m={m}");
            }
        }
    }
}

#[test]
fn catalog_antipodes_are_unique() {
    for name in HOPF_NAMES {
        let h = hopf(name, FieldSpec::RATIONAL);
        assert!(h.check().passed(), "{name}");
        let (lhs, _) = antipode_system(&h.bialgebra);
        assert_eq!(lhs.rank(), h.dim() * h.dim(), "{name}: antipode not unique");
        assert_eq!(compute_antipode(&h.bialgebra).unwrap().antipode, h.antipode, "{name}");
    }
}

#[test]
fn duals_are_mutually_inverse() {
    for name in HOPF_NAMES {
        let h = hopf(name, FieldSpec::RATIONAL);
        let a = dual_of_coalgebra(&dual_of_algebra(h.algebra()));
        let c = dual_of_algebra(&dual_of_coalgebra(h.coalgebra()));
        let n = h.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(a.m(i, j, k), h.algebra().m(i, j, k), "{name}");
                    assert_eq!(c.c(i, j, k), h.coalgebra().c(i, j, k), "{name}");
                }
            }
        }
        assert_eq!(a.unit(), h.algebra().unit());
        assert_eq!(c.counit(), h.coalgebra().counit());
    }
}

#[test]
fn smash_factors_multiply_to_pure_tensors() {
    let mut cases: Vec<SmashData> = Vec::new();
    let f = gf(3);
    let a = group_algebra(f, 2);
    for x in enumerate_normal_r(&a, &a, f, 1_000_000).unwrap() {
        cases.push(SmashData::new(a.clone(), a.clone(), x.r).unwrap());
    }
    for name in ["quaternion:-1,-1", "quaternion:2,3"] {
        if let CatalogObject::Smash { data, .. } = by_name(name, FieldSpec::RATIONAL).unwrap() {
            cases.push(data);
        }
    }
    for d in cases {
        let k = build_smash(&d).unwrap();
        let (na, nb) = (d.a.dim(), d.b.dim());
        let f = d.a.field();
        for i in 0..na {
            for j in 0..nb {
                // (a_i ⊗ 1)(1 ⊗ b_j) = a_i ⊗ b_j
                let lhs = k.mul(&e(f, na * nb, i * nb), &e(f, na * nb, j));
                assert_eq!(lhs, e(f, na * nb, i * nb + j));
            }
        }
    }
}

#[test]
fn printed_system_matches_generic_check() {
    for p in [2u64, 3, 5] {
        let f = gf(p);
        let els = f.elements().unwrap();
        for a in &els {
            for b in &els {
                for c in &els {
                    for d in &els {
                        assert_eq!(verify_c2c2_system(a, b, c, d).unwrap(), c2c2_generic(a, b, c, d));
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let f = gf(3);
    let a = group_algebra(f, 2);
    let b = truncated(f, 2);
    let first: Vec<Matrix> = enumerate_normal_r(&a, &b, f, 1_000_000)
        .unwrap()
        .into_iter()
        .map(|x| x.r)
        .collect();
    let again: Vec<Matrix> = enumerate_normal_r(&a, &b, f, 1_000_000)
        .unwrap()
        .into_iter()
        .map(|x| x.r)
        .collect();
    assert_eq!(first, again);
}

#[test]
fn cosmash_verdict_matches_dual_smash_verdict() {
    let f = gf(3);
    let c = dual_of_algebra(&group_algebra(f, 2));
    let d = dual_of_algebra(&truncated(f, 2));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ws: Vec<Matrix> = (0..300).map(|_| random_matrix(&mut rng, f, 4, 4)).collect();
    ws.push(switch(2, 2, f));
    for w in ws {
        let cd = CosmashData::new(c.clone(), d.clone(), w).unwrap();
        let bridged = smashkit::cosmash::duality_bridge(&cd);
        let rep = SmashChecker::new(&bridged.a, &bridged.b).report(&bridged);
        assert_eq!(is_smash_coproduct(&cd).passed(), rep.passed());
    }
}

#[test]
fn yetter_drinfeld_map_on_group_algebras() {
    // R(h⊗g) = g ⊗ g⁻¹h on group-likes; this is not the switch even for
    // commutative cocommutative H
    let f = FieldSpec::RATIONAL;
    for n in [2usize, 3, 4] {
        let h = hopf(&format!("group:cyclic:{n}"), f);
        let r = r_yetter_drinfeld(&h).unwrap();
        for x in 0..n {
            for g in 0..n {
                assert_eq!(r.column(x * n + g), e(f, n * n, g * n + (x + n - g) % n));
            }
        }
        assert_ne!(r, r_switch(&h));
    }
    let h = hopf("group:cyclic:1", f);
    assert_eq!(r_yetter_drinfeld(&h).unwrap(), r_switch(&h));
}

#[test]
fn json_is_stable() {
    for name in HOPF_NAMES {
        let doc = Document::Hopf(hopf(name, FieldSpec::RATIONAL));
        let text = doc.to_json();
        assert_eq!(text, hopf_doc(name).to_json());
        assert_eq!(Document::from_json(&text).unwrap().to_json(), text, "{name}");
    }
}

fn hopf_doc(name: &str) -> Document {
    Document::Hopf(hopf(name, FieldSpec::RATIONAL))
}

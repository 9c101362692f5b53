//! Test-side oracles. Nothing here calls the library's checkers: products,
//! coproducts and duals are recomputed from structure constants with plain
//! loops, so a bug in the composite-matrix machinery cannot hide itself.

#![allow(dead_code)]

use rand::Rng;
use smashkit::field::{FieldSpec, Scalar};
use smashkit::linalg::Matrix;
use smashkit::structures::{FiniteDimAlgebra, FiniteDimCoalgebra};

pub fn e(f: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

/// Index of a named basis vector.
pub fn idx(names: Option<&[String]>, name: &str) -> usize {
    let names = names.expect("basis has names");
    names
        .iter()
        .position(|n| n == name)
        .unwrap_or_else(|| panic!("no basis vector {name:?} in {names:?}"))
}

/// `kC_n` on the basis `1, g, …, g^{n-1}`.
pub fn group_algebra(f: FieldSpec, n: usize) -> FiniteDimAlgebra {
    let mut mult = vec![f.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            mult[(i * n + j) * n + (i + j) % n] = f.one();
        }
    }
    FiniteDimAlgebra::new(f, n, mult, e(f, n, 0)).unwrap()
}

/// `k[x]/(x^n)` on `1, x, …, x^{n-1}`.
pub fn truncated(f: FieldSpec, n: usize) -> FiniteDimAlgebra {
    let mut mult = vec![f.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n - i {
            mult[(i * n + j) * n + i + j] = f.one();
        }
    }
    FiniteDimAlgebra::new(f, n, mult, e(f, n, 0)).unwrap()
}

/// Group-like coalgebra on `n` points.
pub fn grouplike_coalgebra(f: FieldSpec, n: usize) -> FiniteDimCoalgebra {
    let mut c = vec![f.zero(); n * n * n];
    for i in 0..n {
        c[(i * n + i) * n + i] = f.one();
    }
    FiniteDimCoalgebra::new(f, n, c, vec![f.one(); n]).unwrap()
}

/// Transposes structure constants: the algebra `C*` of a coalgebra `C`.
pub fn transpose_coalgebra(c: &FiniteDimCoalgebra) -> (Vec<Scalar>, Vec<Scalar>) {
    let n = c.dim();
    let mut mult = vec![c.field().zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mult[(j * n + k) * n + i] = c.c(i, j, k).clone();
            }
        }
    }
    (mult, c.counit().to_vec())
}

/// Multiplication table of `A ⊗ B` with `(a ⊗ b)(a' ⊗ b') = a R(b ⊗ a') b'`,
/// as `t[(x·N + y)·N + z]` over the flat basis `a_i ⊗ b_j ↦ i·n_B + j`.
pub fn naive_smash_table(a: &FiniteDimAlgebra, b: &FiniteDimAlgebra, r: &Matrix) -> Vec<Scalar> {
    let f = a.field();
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let mut t = vec![f.zero(); n * n * n];
    for i in 0..na {
        for j in 0..nb {
            for k in 0..na {
                for l in 0..nb {
                    let x = i * nb + j;
                    let y = k * nb + l;
                    for p in 0..na {
                        for q in 0..nb {
                            let c = r.get(p * nb + q, j * na + k);
                            if c.is_zero() {
                                continue;
                            }
                            for s in 0..na {
                                let ca = a.m(i, p, s);
                                if ca.is_zero() {
                                    continue;
                                }
                                for u in 0..nb {
                                    let cb = b.m(q, l, u);
                                    if cb.is_zero() {
                                        continue;
                                    }
                                    let z = s * nb + u;
                                    let v = &(c * ca) * cb;
                                    t[(x * n + y) * n + z] = &t[(x * n + y) * n + z] + &v;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    t
}

/// Associativity of a multiplication table together with `1 ⊗ 1` being a
/// two-sided unit.
pub fn table_is_unital_associative(f: FieldSpec, n: usize, t: &[Scalar], unit: usize) -> bool {
    let prod = |u: &[Scalar], v: &[Scalar]| {
        let mut out = vec![f.zero(); n];
        for (x, cu) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (y, cv) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let uv = cu * cv;
                for z in 0..n {
                    let c = &t[(x * n + y) * n + z];
                    if !c.is_zero() {
                        out[z] = &out[z] + &(&uv * c);
                    }
                }
            }
        }
        out
    };
    let one = e(f, n, unit);
    for x in 0..n {
        let ex = e(f, n, x);
        if prod(&one, &ex) != ex || prod(&ex, &one) != ex {
            return false;
        }
        for y in 0..n {
            let xy = prod(&ex, &e(f, n, y));
            for z in 0..n {
                let ez = e(f, n, z);
                if prod(&xy, &ez) != prod(&ex, &prod(&e(f, n, y), &ez)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `A #_R B` is an associative algebra with unit `1 ⊗ 1`, computed
/// without the library's checkers. Assumes the units are the first basis
/// vectors.
pub fn naive_is_smash(a: &FiniteDimAlgebra, b: &FiniteDimAlgebra, r: &Matrix) -> bool {
    let t = naive_smash_table(a, b, r);
    table_is_unital_associative(a.field(), a.dim() * b.dim(), &t, 0)
}

/// Gaussian binomial `[m choose i]_q` from the product formula; needs
/// `1 - q^j ≠ 0` for `1 ≤ j ≤ i`.
pub fn gaussian_binomial(m: usize, i: usize, q: &Scalar) -> Scalar {
    let f = q.field();
    let mut num = f.one();
    let mut den = f.one();
    for j in 0..i {
        num = &num * &(&f.one() - &q.pow((m - j) as i64).unwrap());
        den = &den * &(&f.one() - &q.pow((j + 1) as i64).unwrap());
    }
    &num / &den
}

/// The affine space `{X : X·M_i = N_i for all i}` of `rows × cols`
/// matrices, returned as a particular solution plus a kernel basis.
pub fn affine_solutions(particular: &Matrix, constraints: &[(Matrix, Matrix)]) -> (Matrix, Vec<Matrix>) {
    let f = particular.field();
    let (rows, cols) = particular.shape();
    for (m, n) in constraints {
        assert!(
            particular.matmul(m).unwrap() == *n,
            "particular solution violates a constraint"
        );
    }
    let eqs: usize = constraints.iter().map(|(m, _)| rows * m.cols()).sum();
    let mut sys = Matrix::zeros(f, eqs, rows * cols);
    let mut e0 = 0;
    for (m, _) in constraints {
        for r in 0..rows {
            for k in 0..m.cols() {
                for c in 0..cols {
                    sys.set(e0 + r * m.cols() + k, r * cols + c, m.get(c, k).clone());
                }
            }
        }
        e0 += rows * m.cols();
    }
    let ker = sys.kernel();
    let basis = (0..ker.cols())
        .map(|j| Matrix::from_fn(f, rows, cols, |r, c| ker.get(r * cols + c, j).clone()))
        .collect();
    (particular.clone(), basis)
}

/// `particular + Σ t_i K_i` for uniformly random `t_i` in GF(p).
pub fn random_point(rng: &mut impl Rng, space: &(Matrix, Vec<Matrix>)) -> Matrix {
    let f = space.0.field();
    let p = f.modulus().expect("prime field") as i64;
    space.1.iter().fold(space.0.clone(), |acc, k| {
        acc.add(&k.scale(&f.from_i64(rng.gen_range(0..p)))).unwrap()
    })
}

/// Every point of the affine space over GF(p).
pub fn all_points(space: &(Matrix, Vec<Matrix>)) -> Vec<Matrix> {
    let f = space.0.field();
    let p = f.modulus().expect("prime field");
    let dim = space.1.len() as u32;
    (0..p.pow(dim))
        .map(|mut idx| {
            space.1.iter().fold(space.0.clone(), |acc, k| {
                let t = f.from_i64((idx % p) as i64);
                idx /= p;
                acc.add(&k.scale(&t)).unwrap()
            })
        })
        .collect()
}

pub fn random_matrix(rng: &mut impl Rng, f: FieldSpec, rows: usize, cols: usize) -> Matrix {
    let p = f.modulus().expect("prime field") as i64;
    Matrix::from_fn(f, rows, cols, |_, _| f.from_i64(rng.gen_range(0..p)))
}

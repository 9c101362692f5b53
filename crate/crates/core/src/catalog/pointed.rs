//! The pointed Hopf algebras `K = H(C, n, g*, g⁻¹, 0)` over a finite abelian
//! group `C`, with generators `x_1 … x_t`:
//!
//! * `x_j c = ⟨g*_j, c⟩ c x_j`, `x_j x_k = ⟨g*_j, g_k⟩ x_k x_j` (`j ≠ k`), `x_j^{n_j} = 0`
//! * `Δ(c) = c ⊗ c`, `Δ(x_i) = x_i ⊗ g_i + 1 ⊗ x_i`, `ε(x_i) = 0`
//! * `S(c) = c⁻¹`, `S(x_i) = −x_i g_i⁻¹`
//!
//! These generators differ from another common presentation by
//! `x_i ↦ g_i⁻¹ x_i`; only this one is implemented.
//!
//! Basis: `c x^m` with `c` outer (lexicographic exponents) and `m` inner
//! (lexicographic, `0 ≤ m_j < n_j`).

use serde::{Deserialize, Serialize};

use crate::biproduct::BialgebraFactorisationWitness;
use crate::field::{find_root_of_unity, FieldSpec, Scalar};
use crate::linalg::{Matrix, TensorIndex};
use crate::report::compare_maps;
use crate::structures::{
    compute_antipode, tensor_algebra, BialgebraCandidate, FiniteDimAlgebra, FiniteDimCoalgebra, HopfAlgebra,
};

use super::groups::{exponent_index, exponents, group_algebra, GroupTable};
use super::{unit_vec, CatalogError};

/// Orders `(N₁, …, N_s)` of the cyclic factors of `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbelianGroupSpec(pub Vec<usize>);

impl AbelianGroupSpec {
    pub fn order(&self) -> usize {
        self.0.iter().product()
    }
}

/// `g_l` and `g*_l` are exponent vectors against the cyclic factors; the
/// character value is `⟨g*, c⟩ = Π_k ω_{N_k}^{g*_k c_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointedParams {
    pub group: AbelianGroupSpec,
    pub n: Vec<usize>,
    pub g: Vec<Vec<usize>>,
    pub gstar: Vec<Vec<usize>>,
    pub field: FieldSpec,
}

/// `K` together with its factorisation `K = L H` (`L = kC`, `H` the span of
/// the monomials `x^m`) and the closed-form antipode.
#[derive(Clone, Debug)]
pub struct PointedHopf {
    pub params: PointedParams,
    pub k: HopfAlgebra,
    pub witness: BialgebraFactorisationWitness,
    pub closed_antipode: Matrix,
}

struct Layout {
    orders: Vec<usize>,
    n: Vec<usize>,
    group_size: usize,
    mono_size: usize,
    // chi[j][c] = ⟨g*_j, c⟩
    chi: Vec<Vec<Scalar>>,
    // g_index[j] = index of g_j in C
    g_index: Vec<usize>,
}

impl Layout {
    fn index(&self, c: usize, m: usize) -> usize {
        c * self.mono_size + m
    }

    fn pair(&self, j: usize, k: usize) -> &Scalar {
        &self.chi[j][self.g_index[k]]
    }
}

impl PointedParams {
    pub fn t(&self) -> usize {
        self.n.len()
    }

    fn layout(&self) -> Result<Layout, CatalogError> {
        let orders = &self.group.0;
        let s = orders.len();
        let t = self.t();
        let invalid = |msg: String| Err(CatalogError::ParamsInvalid(msg));
        if s == 0 || orders.contains(&0) {
            return invalid("C needs at least one cyclic factor, all of order ≥ 1".into());
        }
        if t == 0 || self.n.contains(&0) {
            return invalid("need t ≥ 1 and every n_l ≥ 1".into());
        }
        if self.g.len() != t || self.gstar.len() != t {
            return invalid(format!("g and g* must have {t} entries"));
        }
        if self.g.iter().chain(&self.gstar).any(|v| v.len() != s) {
            return invalid(format!("every g_l and g*_l needs {s} exponents"));
        }
        let roots = orders
            .iter()
            .map(|&nk| find_root_of_unity(self.field, nk as u64))
            .collect::<Result<Vec<_>, _>>()
            .map_err(CatalogError::RootOfUnityUnavailable)?;
        let group_size: usize = orders.iter().product();
        let chi: Vec<Vec<Scalar>> = self
            .gstar
            .iter()
            .map(|gs| {
                (0..group_size)
                    .map(|c| {
                        let e = exponents(orders, c);
                        (0..s).fold(self.field.one(), |acc, k| {
                            let exp = (gs[k] * e[k]) % orders[k];
                            &acc * &roots[k].pow(exp as i64).expect("root is nonzero")
                        })
                    })
                    .collect()
            })
            .collect();
        let g_index: Vec<usize> = self.g.iter().map(|g| exponent_index(orders, g)).collect();
        let layout = Layout {
            orders: orders.clone(),
            n: self.n.clone(),
            group_size,
            mono_size: self.n.iter().product(),
            chi,
            g_index,
        };
        for l in 0..t {
            let v = layout.pair(l, l);
            if v.multiplicative_order() != Some(self.n[l] as u64) {
                return invalid(format!(
                    "⟨g*_{0}, g_{0}⟩ = {v} is not a primitive {1}-th root of unity",
                    l + 1,
                    self.n[l]
                ));
            }
            for r in 0..t {
                if r == l {
                    continue;
                }
                if layout.pair(r, l) != layout.pair(l, r) {
                    return invalid(format!("⟨g*_{}, g_{}⟩ ≠ ⟨g*_{}, g_{}⟩", r + 1, l + 1, l + 1, r + 1));
                }
                // x_j x_k = q x_k x_j and x_k x_j = q' x_j x_k need q q' = 1
                if !(layout.pair(r, l) * layout.pair(l, r)).is_one() {
                    return invalid(format!(
                        "⟨g*_{0}, g_{1}⟩⟨g*_{1}, g_{0}⟩ ≠ 1, the commutation relations collapse",
                        r + 1,
                        l + 1
                    ));
                }
            }
        }
        Ok(layout)
    }
}

fn mono_name(t: usize, m: &[usize]) -> String {
    let mut s = String::new();
    for (j, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        s.push('x');
        if t > 1 {
            s.push_str(&(j + 1).to_string());
        }
        if e > 1 {
            s.push_str(&format!("^{e}"));
        }
    }
    s
}

/// Builds `K` and the witness maps of its factorisation over `kC`.
pub fn pointed_hopf(p: &PointedParams) -> Result<PointedHopf, CatalogError> {
    let lay = p.layout()?;
    let f = p.field;
    let t = p.t();
    let (gs, ms) = (lay.group_size, lay.mono_size);
    let dim = gs * ms;
    let group = GroupTable::abelian(&lay.orders);

    let monos: Vec<Vec<usize>> = (0..ms).map(|m| exponents(&lay.n, m)).collect();
    let mult = |a: usize, b: usize| -> Vec<Scalar> {
        let (c, m) = (a / ms, &monos[a % ms]);
        let (d, m2) = (b / ms, &monos[b % ms]);
        let mut out = vec![f.zero(); dim];
        if (0..t).any(|j| m[j] + m2[j] >= lay.n[j]) {
            return out;
        }
        let mut coeff = f.one();
        // x^m d = Π ⟨g*_j, d⟩^{m_j} d x^m
        for j in 0..t {
            coeff = &coeff * &lay.chi[j][d].pow(m[j] as i64).expect("nonzero");
        }
        // move the x_k of x^{m2} left past the x_j (j > k) of x^m
        for j in 0..t {
            for k in 0..j {
                coeff = &coeff * &lay.pair(j, k).pow((m[j] * m2[k]) as i64).expect("nonzero");
            }
        }
        let sum: Vec<usize> = (0..t).map(|j| m[j] + m2[j]).collect();
        out[lay.index(group.mul(c, d), exponent_index(&lay.n, &sum))] = coeff;
        out
    };
    let group_names = group.names.clone().expect("abelian groups are named");
    let names: Vec<String> = (0..dim)
        .map(|i| {
            let c = &group_names[i / ms];
            let m = mono_name(t, &monos[i % ms]);
            match (c.as_str(), m.is_empty()) {
                ("1", true) => "1".to_string(),
                ("1", false) => m,
                (_, true) => c.clone(),
                _ => format!("{c}{m}"),
            }
        })
        .collect();
    let alg = FiniteDimAlgebra::from_table(f, dim, unit_vec(f, dim, lay.index(group.identity, 0)), mult)?
        .with_names(names.clone());

    // Δ(c x^m) = (c ⊗ c) Π_i (x_i ⊗ g_i + 1 ⊗ x_i)^{m_i}, multiplied out in K ⊗ K
    let kk = tensor_algebra(&alg, &alg)?;
    let x_gen: Vec<usize> = (0..t)
        .map(|i| {
            let mut e = vec![0; t];
            e[i] = 1;
            exponent_index(&lay.n, &e)
        })
        .collect();
    let one = lay.index(group.identity, 0);
    let delta_x: Vec<Vec<Scalar>> = (0..t)
        .map(|i| {
            let mut v = vec![f.zero(); dim * dim];
            if lay.n[i] > 1 {
                v[lay.index(group.identity, x_gen[i]) * dim + lay.index(lay.g_index[i], 0)] = f.one();
                v[one * dim + lay.index(group.identity, x_gen[i])] = f.one();
            }
            v
        })
        .collect();
    let coalg = FiniteDimCoalgebra::from_table(
        f,
        dim,
        (0..dim).map(|i| if i % ms == 0 { f.one() } else { f.zero() }).collect(),
        |i| {
            let c = lay.index(i / ms, 0);
            let mut v = unit_vec(f, dim * dim, c * dim + c);
            for (j, &e) in monos[i % ms].iter().enumerate() {
                for _ in 0..e {
                    v = kk.mul(&v, &delta_x[j]);
                }
            }
            v
        },
    )?
    .with_names(names);
    let bialg = BialgebraCandidate::new(alg, coalg)?;
    let k = compute_antipode(&bialg)?;

    // S(c x^m) = S(x_t)^{m_t} ⋯ S(x_1)^{m_1} c⁻¹
    let s_x: Vec<Vec<Scalar>> = (0..t)
        .map(|i| {
            let g_inv = group.inverse[lay.g_index[i]];
            let v = k.algebra().mul(
                &k.algebra().basis_vector(lay.index(group.identity, x_gen[i])),
                &k.algebra().basis_vector(lay.index(g_inv, 0)),
            );
            v.into_iter().map(|s| -s).collect()
        })
        .collect();
    let mut closed = Matrix::zeros(f, dim, dim);
    for i in 0..dim {
        let mut v = k.algebra().unit().to_vec();
        for j in (0..t).rev() {
            for _ in 0..monos[i % ms][j] {
                v = k.algebra().mul(&v, &s_x[j]);
            }
        }
        v = k
            .algebra()
            .mul(&v, &k.algebra().basis_vector(lay.index(group.inverse[i / ms], 0)));
        for (r, s) in v.into_iter().enumerate() {
            closed.set(r, i, s);
        }
    }
    let cmp = compare_maps("closed antipode", &closed, &k.antipode, &TensorIndex::new(&[dim]));
    if !cmp.passed() {
        return Err(CatalogError::Internal(format!(
            "closed-form antipode differs from solver: {cmp:?}"
        )));
    }

    let l = group_algebra(&group, f).bialgebra;
    let h_names: Vec<String> = monos
        .iter()
        .map(|m| {
            let s = mono_name(t, m);
            if s.is_empty() {
                "1".into()
            } else {
                s
            }
        })
        .collect();
    let h_alg = FiniteDimAlgebra::from_table(f, ms, unit_vec(f, ms, 0), |a, b| {
        let v = k
            .algebra()
            .product(lay.index(group.identity, a), lay.index(group.identity, b));
        (0..ms).map(|m| v[lay.index(group.identity, m)].clone()).collect()
    })?
    .with_names(h_names.clone());
    // Δ_H(x^m) = (p_H ⊗ p_H) Δ_K(x^m)
    let h_coalg = FiniteDimCoalgebra::from_table(f, ms, unit_vec(f, ms, 0), |m| {
        let mut v = vec![f.zero(); ms * ms];
        for (a, b, c) in k.coalgebra().terms(lay.index(group.identity, m)) {
            v[(a % ms) * ms + b % ms] += c;
        }
        v
    })?
    .with_names(h_names);
    let h = BialgebraCandidate::new(h_alg, h_coalg)?;
    let i_l = Matrix::from_fn(f, dim, gs, |r, c| if r == lay.index(c, 0) { f.one() } else { f.zero() });
    let i_h = Matrix::from_fn(f, dim, ms, |r, m| {
        if r == lay.index(group.identity, m) {
            f.one()
        } else {
            f.zero()
        }
    });
    let p_l = Matrix::from_fn(f, gs, dim, |c, i| if i == lay.index(c, 0) { f.one() } else { f.zero() });
    let p_h = Matrix::from_fn(f, ms, dim, |m, i| if i % ms == m { f.one() } else { f.zero() });
    Ok(PointedHopf {
        params: p.clone(),
        closed_antipode: closed,
        witness: BialgebraFactorisationWitness {
            k: k.bialgebra.clone(),
            l,
            h,
            i_l,
            i_h,
            p_l,
            p_h,
        },
        k,
    })
}

/// Radford's `H_{n,q,N,ν}` with `q = ω_n^k`: `H(C_N, r, g*, g^{−ν}, 0)` with
/// `⟨g*, g⟩ = q` and `r` the order of `q^ν`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadfordParams {
    pub n: usize,
    pub k: usize,
    pub big_n: usize,
    pub nu: usize,
    pub field: FieldSpec,
}

impl RadfordParams {
    pub fn taft(n: usize, field: FieldSpec) -> RadfordParams {
        RadfordParams {
            n,
            k: 1,
            big_n: n,
            nu: 1,
            field,
        }
    }

    pub fn sweedler() -> RadfordParams {
        RadfordParams::taft(2, FieldSpec::RATIONAL)
    }

    fn validate(&self) -> Result<(), CatalogError> {
        let invalid = |m: &str| Err(CatalogError::ParamsInvalid(m.into()));
        if self.n == 0 || self.big_n == 0 || !self.big_n.is_multiple_of(self.n) {
            return invalid("need n ≥ 1 dividing N");
        }
        if self.nu == 0 || self.nu >= self.big_n {
            return invalid("need 1 ≤ ν < N");
        }
        if num_integer::gcd(self.k, self.n) != 1 {
            return invalid("q = ω_n^k is primitive only when gcd(k, n) = 1");
        }
        Ok(())
    }

    /// `q = ⟨g*, g⟩` realized in the field.
    pub fn q(&self) -> Result<Scalar, CatalogError> {
        self.validate()?;
        let w = find_root_of_unity(self.field, self.big_n as u64).map_err(CatalogError::RootOfUnityUnavailable)?;
        Ok(w.pow(((self.big_n / self.n) * self.k) as i64).expect("nonzero"))
    }

    /// `r`, the order of `q^ν`.
    pub fn r(&self) -> Result<usize, CatalogError> {
        let qn = self.q()?.pow(self.nu as i64).expect("nonzero");
        Ok(qn.multiplicative_order().expect("root of unity") as usize)
    }

    pub fn pointed_params(&self) -> Result<PointedParams, CatalogError> {
        Ok(PointedParams {
            group: AbelianGroupSpec(vec![self.big_n]),
            n: vec![self.r()?],
            g: vec![vec![self.nu]],
            gstar: vec![vec![(self.big_n / self.n) * self.k % self.big_n]],
            field: self.field,
        })
    }
}

pub fn radford(p: &RadfordParams) -> Result<PointedHopf, CatalogError> {
    pointed_hopf(&p.pointed_params()?)
}

pub fn sweedler() -> PointedHopf {
    radford(&RadfordParams::sweedler()).expect("Sweedler's algebra")
}

pub fn taft(n: usize, field: FieldSpec) -> Result<PointedHopf, CatalogError> {
    radford(&RadfordParams::taft(n, field))
}

/// `E(t) = H(C₂, 2̲, g̲*, g̲, 0)`, dimension `2^{t+1}`.
pub fn en_params(t: usize, field: FieldSpec) -> PointedParams {
    PointedParams {
        group: AbelianGroupSpec(vec![2]),
        n: vec![2; t],
        g: vec![vec![1]; t],
        gstar: vec![vec![1]; t],
        field,
    }
}

pub fn en(t: usize, field: FieldSpec) -> Result<PointedHopf, CatalogError> {
    pointed_hopf(&en_params(t, field))
}

/// The Gaussian binomial `[m choose i]_q` by the recurrence
/// `[m, i] = [m−1, i−1] + q^i [m−1, i]`.
pub fn qbinom(m: usize, i: usize, q: &Scalar) -> Result<Scalar, CatalogError> {
    if i > m {
        return Err(CatalogError::IndexOutOfRange { m, i });
    }
    let f = q.field();
    let mut row = vec![f.one()];
    for mm in 1..=m {
        let mut next = vec![f.one(); mm + 1];
        for k in 1..mm {
            next[k] = &row[k - 1] + &(&q.pow(k as i64).expect("q^k") * &row[k]);
        }
        row = next;
    }
    Ok(row[i].clone())
}

/// The closed forms `R(x^m ⊗ g^l) = q^{lm} g^l ⊗ x^m` on `H ⊗ L -> L ⊗ H` and
/// `W(g^l ⊗ x^m) = x^m ⊗ g^{l+νm}` on `L ⊗ H -> H ⊗ L`.
pub fn radford_rw(p: &RadfordParams) -> Result<(Matrix, Matrix), CatalogError> {
    let q = p.q()?;
    let r = p.r()?;
    let nn = p.big_n;
    let f = p.field;
    let mut rm = Matrix::zeros(f, nn * r, r * nn);
    let mut wm = Matrix::zeros(f, r * nn, nn * r);
    for m in 0..r {
        for l in 0..nn {
            rm.set(l * r + m, m * nn + l, q.pow((l * m) as i64).expect("nonzero"));
            wm.set(m * nn + (l + p.nu * m) % nn, l * r + m, f.one());
        }
    }
    Ok((rm, wm))
}

/// The `(R, W)` table for `E(t)` as displayed for degrees ≤ 2:
///
/// | `R(h⊗1) = 1⊗h` | `R(1⊗g) = g⊗1` | `R(x_i⊗g) = −g⊗x_i` | `R(x_ix_j⊗g) = g⊗x_ix_j` |
/// | `W(1⊗h) = h⊗1` | `W(g⊗1) = 1⊗g` | `W(g⊗x_i) = x_i⊗1`  | `W(g⊗x_ix_j) = x_ix_j⊗g` |
///
/// Monomials of degree `d ≥ 3` continue the pattern by parity:
/// `R(x^m⊗g) = (−1)^d g⊗x^m`, `W(g⊗x^m) = x^m⊗g^{1+d}`.
pub fn en_rw(t: usize, field: FieldSpec) -> (Matrix, Matrix) {
    let f = field;
    let ms = 1usize << t;
    let deg = |m: usize| (0..t).filter(|j| (m >> (t - 1 - j)) & 1 == 1).count();
    let mut r = Matrix::zeros(f, 2 * ms, ms * 2);
    let mut w = Matrix::zeros(f, ms * 2, 2 * ms);
    for m in 0..ms {
        let d = deg(m);
        r.set(m, m * 2, f.one());
        let sign = if d % 2 == 0 { f.one() } else { -f.one() };
        r.set(ms + m, m * 2 + 1, sign);
        w.set(m * 2, m, f.one());
        let l = if m == 0 { 1 } else { (1 + d) % 2 };
        w.set(m * 2 + l, ms + m, f.one());
    }
    (r, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::check_bialgebra;

    #[test]
    fn sweedler_basics() {
        let s = sweedler();
        assert_eq!(s.k.dim(), 4);
        assert!(check_bialgebra(&s.k.bialgebra).passed());
        assert_eq!(s.k.algebra().basis_names().unwrap(), ["1", "x", "g", "gx"]);
    }

    #[test]
    fn qbinom_values() {
        let q = FieldSpec::RATIONAL;
        let x = q.from_i64(3);
        assert!(qbinom(4, 0, &x).unwrap().is_one());
        assert_eq!(qbinom(2, 1, &x).unwrap(), q.from_i64(4));
        assert!(qbinom(2, 1, &q.from_i64(-1)).unwrap().is_zero());
        assert_eq!(qbinom(1, 2, &x), Err(CatalogError::IndexOutOfRange { m: 1, i: 2 }));
        // ordinary binomials at q = 1
        assert_eq!(qbinom(5, 2, &q.one()).unwrap(), q.from_i64(10));
    }

    #[test]
    fn bad_params() {
        let mut p = en_params(2, FieldSpec::RATIONAL);
        p.gstar[0] = vec![0];
        assert!(matches!(pointed_hopf(&p), Err(CatalogError::ParamsInvalid(_))));
        let no_root = RadfordParams::taft(3, FieldSpec::RATIONAL);
        assert!(matches!(
            radford(&no_root),
            Err(CatalogError::RootOfUnityUnavailable(_))
        ));
        let mut p = en_params(1, FieldSpec::RATIONAL);
        p.g.push(vec![1]);
        assert!(pointed_hopf(&p).is_err());
    }

    #[test]
    fn radford_shapes() {
        let f = FieldSpec::prime(13).unwrap();
        // n = 2, N = 4, ν = 2: q = −1, q^ν = 1 so r = 1
        let p = RadfordParams {
            n: 2,
            k: 1,
            big_n: 4,
            nu: 2,
            field: f,
        };
        assert_eq!(p.r().unwrap(), 1);
        let p = RadfordParams {
            n: 4,
            k: 3,
            big_n: 4,
            nu: 1,
            field: f,
        };
        let h = radford(&p).unwrap();
        assert_eq!(h.k.dim(), 16);
        assert!(check_bialgebra(&h.k.bialgebra).passed());
    }
}

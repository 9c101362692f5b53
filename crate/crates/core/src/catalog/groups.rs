use serde::{Deserialize, Serialize};

use crate::field::FieldSpec;
use crate::report::{Check, Report};
use crate::structures::{
    compute_antipode, dual_hopf, BialgebraCandidate, FiniteDimAlgebra, FiniteDimCoalgebra, HopfAlgebra,
};

use super::{unit_vec, CatalogError};

/// A finite group as a Cayley table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub cayley: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl GroupTable {
    /// Builds the inverse table from a Cayley table; fails if there is no
    /// two-sided identity or some element has no inverse.
    pub fn from_cayley(cayley: Vec<Vec<usize>>) -> Result<GroupTable, CatalogError> {
        let n = cayley.len();
        if n == 0 || cayley.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(CatalogError::ParamsInvalid(
                "Cayley table must be n x n with entries < n".into(),
            ));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| CatalogError::ParamsInvalid("no identity element".into()))?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| cayley[x][y] == identity && cayley[y][x] == identity)
                    .ok_or_else(|| CatalogError::ParamsInvalid(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupTable {
            order: n,
            cayley,
            identity,
            inverse,
            names: None,
        })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let mut g = GroupTable::from_cayley((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
            .expect("cyclic group");
        g.names = Some((0..n).map(|i| monomial_name("g", i)).collect());
        g
    }

    /// Direct product; the element `(a, b)` has index `a·|H| + b`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let (m, n) = (g.order, h.order);
        let cayley = (0..m * n)
            .map(|x| {
                (0..m * n)
                    .map(|y| g.cayley[x / n][y / n] * n + h.cayley[x % n][y % n])
                    .collect()
            })
            .collect();
        GroupTable::from_cayley(cayley).expect("product of groups")
    }

    /// `C_{N₁} × … × C_{N_s}` in lexicographic exponent order.
    pub fn abelian(orders: &[usize]) -> GroupTable {
        let mut g = orders.iter().fold(GroupTable::cyclic(1), |acc, &n| {
            GroupTable::product(&acc, &GroupTable::cyclic(n))
        });
        g.names = Some(
            (0..g.order)
                .map(|i| {
                    let e = exponents(orders, i);
                    if orders.len() == 1 {
                        monomial_name("g", e[0])
                    } else {
                        let parts: Vec<String> = e
                            .iter()
                            .enumerate()
                            .filter(|(_, &k)| k > 0)
                            .map(|(j, &k)| monomial_name(&format!("g{}", j + 1), k))
                            .collect();
                        if parts.is_empty() {
                            "1".into()
                        } else {
                            parts.join("")
                        }
                    }
                })
                .collect(),
        );
        g
    }

    /// `S₃` as permutations of `{0,1,2}` in lexicographic order, composed
    /// right to left.
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let cayley = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let mut g = GroupTable::from_cayley(cayley).expect("S3");
        g.names = Some(perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect());
        g
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn check(&self) -> Report {
        let n = self.order;
        let mut rep = Report::new("group");
        let bad = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .find(|&(a, b, c)| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)));
        rep.push(
            Check::new("associativity", bad.is_none()).with_detail(
                bad.map(|(a, b, c)| format!("({a}·{b})·{c} ≠ {a}·({b}·{c})"))
                    .unwrap_or_default(),
            ),
        );
        rep.push(Check::new(
            "identity",
            (0..n).all(|x| self.mul(self.identity, x) == x && self.mul(x, self.identity) == x),
        ));
        rep.push(Check::new(
            "inverses",
            (0..n).all(|x| {
                self.mul(x, self.inverse[x]) == self.identity && self.mul(self.inverse[x], x) == self.identity
            }),
        ));
        rep
    }
}

fn monomial_name(base: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

/// Mixed-radix digits of `i`, first factor most significant.
pub fn exponents(orders: &[usize], mut i: usize) -> Vec<usize> {
    let mut e = vec![0; orders.len()];
    for (k, &n) in orders.iter().enumerate().rev() {
        e[k] = i % n;
        i /= n;
    }
    e
}

pub fn exponent_index(orders: &[usize], e: &[usize]) -> usize {
    orders.iter().zip(e).fold(0, |acc, (&n, &x)| acc * n + x % n)
}

/// `kG` with every group element group-like; `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable, f: FieldSpec) -> HopfAlgebra {
    let n = g.order;
    let names = g
        .names
        .clone()
        .unwrap_or_else(|| (0..n).map(|i| format!("e{i}")).collect());
    let alg = FiniteDimAlgebra::from_table(f, n, unit_vec(f, n, g.identity), |i, j| unit_vec(f, n, g.mul(i, j)))
        .expect("group table shape")
        .with_names(names.clone());
    let coalg = FiniteDimCoalgebra::from_table(f, n, vec![f.one(); n], |i| unit_vec(f, n * n, i * n + i))
        .expect("group-like coalgebra")
        .with_names(names);
    let h = compute_antipode(&BialgebraCandidate::new(alg, coalg).expect("same space")).expect("kG is Hopf");
    debug_assert!((0..n).all(|i| h.antipode.column(i) == unit_vec(f, n, g.inverse[i])));
    h
}

/// `k^G`, functions on `G`: pointwise product, `Δ` dual to the group law.
pub fn dual_group_algebra(g: &GroupTable, f: FieldSpec) -> HopfAlgebra {
    dual_hopf(&group_algebra(g, f))
}

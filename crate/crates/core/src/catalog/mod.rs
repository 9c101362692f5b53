//! Concrete algebras, Hopf algebras and `(R, W)` pairs: group algebras and
//! their duals, skew group algebras, quaternion algebras, matched pairs,
//! (co)quasitriangular smash products, and the pointed Hopf algebras
//! `H(C, n, g*, g⁻¹, 0)` (Sweedler, Taft, Radford, `E(n)`).

mod groups;
mod pointed;
mod smash_examples;

pub use groups::{dual_group_algebra, exponent_index, exponents, group_algebra, GroupTable};
pub use pointed::{
    en, en_params, en_rw, pointed_hopf, qbinom, radford, radford_rw, sweedler, taft, AbelianGroupSpec, PointedHopf,
    PointedParams, RadfordParams,
};
pub use smash_examples::{
    check_comodule_algebra, check_module_algebra, cqt_smash_r, matched_pair_r, normal_r, qt_smash_r, quadratic_algebra,
    quaternion, skew_group_r, truncated_polynomial, ComoduleAlgebra, ModuleAlgebra,
};

use thiserror::Error;

use crate::biproduct::{schrodinger_double, BiproductData, BiproductError};
use crate::field::{FieldError, FieldSpec, Scalar};
use crate::report::Report;
use crate::smash::{SmashData, SmashError};
use crate::structures::{FiniteDimAlgebra, HopfAlgebra, StructureError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("required root of unity unavailable: {0}")]
    RootOfUnityUnavailable(FieldError),
    #[error("invalid parameters: {0}")]
    ParamsInvalid(String),
    #[error("q-binomial index out of range: i = {i} > m = {m}")]
    IndexOutOfRange { m: usize, i: usize },
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("constructed map is not a smash product")]
    NotSmash(Box<Report>),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Smash(#[from] SmashError),
    #[error(transparent)]
    Biproduct(#[from] BiproductError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

pub(crate) fn unit_vec(f: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

/// What a catalog name resolves to.
#[derive(Clone, Debug)]
pub enum CatalogObject {
    Hopf(HopfAlgebra),
    Pointed(Box<PointedHopf>),
    Smash { algebra: FiniteDimAlgebra, data: SmashData },
    Double(Box<BiproductData>),
}

impl CatalogObject {
    /// The Hopf algebra, if the entry is one.
    pub fn hopf(&self) -> Option<HopfAlgebra> {
        match self {
            CatalogObject::Hopf(h) => Some(h.clone()),
            CatalogObject::Pointed(p) => Some(p.k.clone()),
            CatalogObject::Double(d) => {
                let k = crate::biproduct::build_biproduct(d).ok()?;
                crate::structures::compute_antipode(&k).ok()
            }
            CatalogObject::Smash { .. } => None,
        }
    }
}

pub const CATALOG_NAMES: &[&str] = &[
    "group:cyclic:N",
    "group:product:N1xN2[x...]",
    "group:s3",
    "dualgroup:<group spec>",
    "quaternion:a,b",
    "sweedler",
    "taft:n:p",
    "radford:n:q_order:N:nu:p",
    "en:n",
    "pointed:<json params>",
    "double:<file or catalog name>",
];

fn parse_usize(s: &str, what: &str) -> Result<usize, CatalogError> {
    s.trim()
        .parse()
        .map_err(|_| CatalogError::ParamsInvalid(format!("{what}: {s:?} is not a non-negative integer")))
}

fn parse_group(spec: &str) -> Result<GroupTable, CatalogError> {
    let parts: Vec<&str> = spec.splitn(2, ':').collect();
    match parts.as_slice() {
        ["cyclic", n] => {
            let n = parse_usize(n, "cyclic order")?;
            if n == 0 {
                return Err(CatalogError::ParamsInvalid("group order must be ≥ 1".into()));
            }
            Ok(GroupTable::cyclic(n))
        }
        ["product", ns] => {
            let orders = ns
                .split('x')
                .map(|n| parse_usize(n, "factor order"))
                .collect::<Result<Vec<_>, _>>()?;
            if orders.contains(&0) {
                return Err(CatalogError::ParamsInvalid("group order must be ≥ 1".into()));
            }
            Ok(GroupTable::abelian(&orders))
        }
        ["s3"] => Ok(GroupTable::symmetric3()),
        _ => Err(CatalogError::UnknownName(format!("group:{spec}"))),
    }
}

/// Resolves a catalog name. `field` applies to entries whose name does not
/// fix one (groups, quaternions, Sweedler, `E(n)`).
pub fn by_name(name: &str, field: FieldSpec) -> Result<CatalogObject, CatalogError> {
    let (head, rest) = name.split_once(':').unwrap_or((name, ""));
    match head {
        "group" => Ok(CatalogObject::Hopf(group_algebra(&parse_group(rest)?, field))),
        "dualgroup" => {
            let spec = rest.strip_prefix("group:").unwrap_or(rest);
            Ok(CatalogObject::Hopf(dual_group_algebra(&parse_group(spec)?, field)))
        }
        "quaternion" => {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| CatalogError::ParamsInvalid("expected quaternion:a,b".into()))?;
            let (algebra, data) = quaternion(&field.parse(a)?, &field.parse(b)?)?;
            Ok(CatalogObject::Smash { algebra, data })
        }
        "sweedler" => Ok(CatalogObject::Pointed(Box::new(radford(&RadfordParams::taft(
            2, field,
        ))?))),
        "taft" => {
            let p: Vec<&str> = rest.split(':').collect();
            if p.len() != 2 {
                return Err(CatalogError::ParamsInvalid("expected taft:n:p".into()));
            }
            let f = FieldSpec::prime(parse_usize(p[1], "p")? as u64)?;
            Ok(CatalogObject::Pointed(Box::new(taft(parse_usize(p[0], "n")?, f)?)))
        }
        "radford" => {
            let p: Vec<&str> = rest.splitn(5, ':').collect();
            if p.len() != 5 {
                return Err(CatalogError::ParamsInvalid("expected radford:n:q_order:N:nu:p".into()));
            }
            let n = parse_usize(p[0], "n")?;
            if parse_usize(p[1], "q_order")? != n {
                return Err(CatalogError::ParamsInvalid(
                    "q is a primitive n-th root of unity, so q_order must equal n".into(),
                ));
            }
            let params = RadfordParams {
                n,
                k: 1,
                big_n: parse_usize(p[2], "N")?,
                nu: parse_usize(p[3], "nu")?,
                field: p[4].parse()?,
            };
            Ok(CatalogObject::Pointed(Box::new(radford(&params)?)))
        }
        "en" => {
            let t = parse_usize(rest, "n")?;
            if t == 0 {
                return Err(CatalogError::ParamsInvalid("E(n) needs n ≥ 1".into()));
            }
            Ok(CatalogObject::Pointed(Box::new(en(t, field)?)))
        }
        "pointed" => {
            let params: PointedParams =
                serde_json::from_str(rest).map_err(|e| CatalogError::ParamsInvalid(format!("pointed params: {e}")))?;
            Ok(CatalogObject::Pointed(Box::new(pointed_hopf(&params)?)))
        }
        "double" => {
            let path = std::path::Path::new(rest);
            let h = if path.is_file() {
                let doc =
                    crate::format::Document::load(path).map_err(|e| CatalogError::ParamsInvalid(e.to_string()))?;
                match doc {
                    crate::format::Document::Hopf(h) => h,
                    other => match other.as_bialgebra() {
                        Some(b) => crate::structures::compute_antipode(&b)?,
                        None => return Err(CatalogError::ParamsInvalid(format!("{rest:?} holds no Hopf algebra"))),
                    },
                }
            } else {
                by_name(rest, field)?
                    .hopf()
                    .ok_or_else(|| CatalogError::ParamsInvalid(format!("{rest:?} is not a Hopf algebra")))?
            };
            let (d, _) = schrodinger_double(&h)?;
            Ok(CatalogObject::Double(Box::new(d)))
        }
        _ => Err(CatalogError::UnknownName(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        let q = FieldSpec::RATIONAL;
        for (name, dim) in [
            ("group:cyclic:3", 3),
            ("group:product:2x2", 4),
            ("group:s3", 6),
            ("dualgroup:cyclic:2", 2),
            ("sweedler", 4),
            ("en:2", 8),
            ("taft:3:7", 9),
            ("radford:2:2:4:1:prime:5", 8),
            ("double:group:cyclic:2", 4),
        ] {
            let obj = by_name(name, q).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(obj.hopf().unwrap().dim(), dim, "{name}");
        }
        assert!(matches!(
            by_name("quaternion:-1,-1", q).unwrap(),
            CatalogObject::Smash { .. }
        ));
        let json = r#"pointed:{"group":[2],"n":[2],"g":[[1]],"gstar":[[1]],"field":"Q"}"#;
        assert_eq!(by_name(json, q).unwrap().hopf().unwrap().dim(), 4);
        assert!(matches!(by_name("nope", q), Err(CatalogError::UnknownName(_))));
        assert!(by_name("taft:3", q).is_err());
        assert!(by_name("radford:2:4:4:1:prime:5", q).is_err());
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("h4.json");
        crate::format::Document::Hopf(sweedler().k).save(&file).unwrap();
        let d = by_name(&format!("double:{}", file.display()), q).unwrap();
        assert_eq!(d.hopf().unwrap().dim(), 16);
    }
}

// Smash products: a quaternion algebra as k[i] #_R k[j], the classification
// of normal maps on kC₂ ⊗ kC₂ over GF(3), and recovering R from a
// factorisation.

use smashkit::catalog::{by_name, CatalogObject};
use smashkit::classify::{enumerate_normal_r, kc2_algebra, DEFAULT_BUDGET};
use smashkit::field::FieldSpec;
use smashkit::smash::{build_smash, is_smash_product, recover_r, smash_witness};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::RATIONAL;
    let CatalogObject::Smash { data, .. } = by_name("quaternion:-1,-1", q)? else {
        unreachable!()
    };
    println!("{}", is_smash_product(&data));
    let h = build_smash(&data)?;
    // basis i⊗1 is index 2, 1⊗j is index 1, i⊗j is index 3
    let ij = h.product(2, 1).to_vec();
    let ijij = h.mul(&ij, &ij);
    println!("(ij)² = {:?}", ijij.iter().map(ToString::to_string).collect::<Vec<_>>());

    let back = recover_r(&smash_witness(&data)?)?;
    assert_eq!(back.r, data.r);

    let f3 = FieldSpec::prime(3)?;
    let a = kc2_algebra(f3);
    let found = enumerate_normal_r(&a, &a, f3, DEFAULT_BUDGET)?;
    println!("{} normal maps make kC2 #_R kC2 associative over GF(3)", found.len());
    for s in &found {
        let col: Vec<String> = s.r.column(3).iter().map(ToString::to_string).collect();
        println!("  R(b⊗a) coefficients on 1⊗1, 1⊗b, a⊗1, a⊗b: {col:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

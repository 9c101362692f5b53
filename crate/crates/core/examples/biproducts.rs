// Smash biproducts L ⋈ H: the Drinfeld double of Sweedler's algebra, its
// antipode from the factors, and the DP conditions against the direct
// check.

use smashkit::biproduct::{
    antipode_formula_check, build_biproduct, check_dp_conditions, is_smash_biproduct, schrodinger_double,
};
use smashkit::catalog::sweedler;
use smashkit::structures::compute_antipode;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h4 = sweedler().k;
    let (d, reading) = schrodinger_double(&h4)?;
    println!("D(H4) from the {reading:?} reading of the Schrödinger map");
    println!("{}", check_dp_conditions(&d)?);
    println!("direct check passes: {}", is_smash_biproduct(&d).passed());

    let k = build_biproduct(&d)?;
    let double = compute_antipode(&k)?;
    println!("dim D(H4) = {}", double.dim());

    let l = compute_antipode(&d.l)?;
    let h = compute_antipode(&d.h)?;
    println!("{}", antipode_formula_check(&l, &h, &d.r)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

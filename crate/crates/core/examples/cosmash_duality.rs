// Smash coproducts and their duals: the dual of C ⋊_W D is the smash
// product of the dual algebras under the transposed map.

use smashkit::cosmash::{build_cosmash, cosmash_witness, duality_bridge, is_smash_coproduct, recover_w, CosmashData};
use smashkit::field::FieldSpec;
use smashkit::linalg::switch;
use smashkit::smash::build_smash;
use smashkit::structures::{dual_of_algebra, dual_of_coalgebra, FiniteDimAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    let e = |i: usize| {
        (0..2)
            .map(|k| if k == i { f.one() } else { f.zero() })
            .collect::<Vec<_>>()
    };
    // k[x]/(x²) and its dual coalgebra
    let dual_numbers =
        FiniteDimAlgebra::from_table(f, 2, e(0), |i, j| if i + j < 2 { e(i + j) } else { vec![f.zero(); 2] })?;
    let c = dual_of_algebra(&dual_numbers);
    let d = CosmashData::new(c.clone(), c.clone(), switch(2, 2, f))?;
    println!("{}", is_smash_coproduct(&d));

    let co = build_cosmash(&d)?;
    let via_dual = dual_of_coalgebra(&co);
    let via_bridge = build_smash(&duality_bridge(&d))?;
    let same = (0..4).all(|i| (0..4).all(|j| (0..4).all(|k| via_dual.m(i, j, k) == via_bridge.m(i, j, k))));
    println!("dual of the smash coproduct equals the bridged smash product: {same}");

    let back = recover_w(&cosmash_witness(&d)?)?;
    assert_eq!(back.w, d.w);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

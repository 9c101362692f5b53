// Build a bialgebra from structure constants, solve for its antipode and
// dualise it.

use smashkit::field::FieldSpec;
use smashkit::structures::{
    check_bialgebra, compute_antipode, dual_hopf, BialgebraCandidate, FiniteDimAlgebra, FiniteDimCoalgebra,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    let n = 3;
    // kC₃ on the basis 1, g, g²
    let basis = |i: usize| {
        (0..n)
            .map(|k| if k == i { f.one() } else { f.zero() })
            .collect::<Vec<_>>()
    };
    let algebra = FiniteDimAlgebra::from_table(f, n, basis(0), |i, j| basis((i + j) % n))?;
    let coalgebra = FiniteDimCoalgebra::from_table(f, n, vec![f.one(); n], |i| {
        let mut v = vec![f.zero(); n * n];
        v[i * n + i] = f.one();
        v
    })?;
    let b = BialgebraCandidate::new(algebra, coalgebra)?;
    println!("{}", check_bialgebra(&b));

    let h = compute_antipode(&b)?;
    println!("antipode of kC3 over GF(5):\n{}", h.antipode);

    let dual = dual_hopf(&h);
    println!(
        "dual is commutative: {}, cocommutative: {}",
        dual.algebra().is_commutative(),
        dual.coalgebra().is_cocommutative()
    );
    assert!(dual.check().passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

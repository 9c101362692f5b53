// Exact scalars and matrices over ℚ and GF(p).

use smashkit::field::{find_root_of_unity, FieldSpec};
use smashkit::linalg::{invert, kron, switch, Matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::RATIONAL;
    let a = q.parse("3/4")?;
    let b = q.parse("-2/3")?;
    println!("over Q: {a} * {b} = {}", &a * &b);

    let f7 = FieldSpec::prime(7)?;
    let w = find_root_of_unity(f7, 3)?;
    println!(
        "primitive cube root of unity in GF(7): {w}, order {:?}",
        w.multiplicative_order()
    );

    let m = Matrix::from_i64_rows(q, &[vec![2, 1], vec![1, 1]]);
    let inv = invert(&m)?;
    println!("M =\n{m}M⁻¹ =\n{inv}");
    assert!(m.matmul(&inv)?.is_identity());

    // switch(2, 3) followed by switch(3, 2) is the identity on k² ⊗ k³
    let round = switch(3, 2, q).matmul(&switch(2, 3, q))?;
    assert!(round.is_identity());
    println!("M ⊗ M is {}x{}", kron(&m, &m)?.rows(), kron(&m, &m)?.cols());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

// Twisted Hopf modules: H is a Hopf module over itself under the switch
// map, and not with a trivial coaction.

use smashkit::catalog::sweedler;
use smashkit::hopfmod::{check_twisted_module, compatibility_check, r_switch, TwistedHopfModule};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = sweedler().k;
    let regular = TwistedHopfModule::regular(&h, r_switch(&h))?;
    println!("{}", check_twisted_module(&regular));

    let trivial = TwistedHopfModule::regular_trivial_coaction(&h, r_switch(&h))?;
    let c = compatibility_check(&trivial);
    println!("trivial coaction with switch: passed = {}", c.passed());
    if let Some(w) = &c.witness {
        println!("  fails at basis pair {:?}", w.indices);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

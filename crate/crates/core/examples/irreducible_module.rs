//! Explicit matrices of V^λ, exported as JSON and specialized.

use yokonuma::repr::{build_module, module_to_json};
use yokonuma::scalars::SpecPoint;
use yokonuma::tableaux::BPartition;

fn main() -> yokonuma::Result<()> {
    let lambda = BPartition::parse(
        &std::env::args()
            .nth(1)
            .unwrap_or_else(|| "[[1],[1,1]]".into()),
    )?;
    let v = build_module(&lambda);
    println!("V^{lambda}: dimension {}", v.dim());
    for (i, t) in v.basis().iter().enumerate() {
        println!("  v{i} = {t}   ξ = {}", t.xi());
    }
    for i in 1..v.n() {
        println!("R{i} = {:?}", v.r_matrix(i));
    }
    let at = v.specialize(&SpecPoint::parse("q=2,t=3")?)?;
    println!("R1 at q=2, t=3 = {:?}", at.r_matrix(1));
    println!(
        "{}",
        serde_json::to_string(&module_to_json(&v, &["T1".into()])?).unwrap()
    );
    Ok(())
}

//! The corner algebra ℋ_α and V^λ built by induction from it.

use yokonuma::group::PseudoComposition;
use yokonuma::hecke::HeckeAlgebra;
use yokonuma::repr::{build_halpha, build_module, induce, CornerAction};
use yokonuma::tableaux::BPartition;

fn main() -> yokonuma::Result<()> {
    let alg = HeckeAlgebra::generic(2, 3);
    let h = build_halpha(&alg, &PseudoComposition::new(vec![2, 1]));
    println!("ℋ_(2,1): rank {}", h.rank());
    for (name, ok) in &h.checks {
        println!("  {} {name}", if *ok { "ok  " } else { "FAIL" });
    }

    let lambda = BPartition::parse("[[2],[1]]")?;
    let corner = CornerAction::from_hoefsmit(&lambda)?;
    let ind = induce(&alg, &lambda.sizes(), &corner)?;
    let v = build_module(&lambda);
    println!(
        "induced module: dim {}, equal to V^{lambda}: {}",
        ind.dim(),
        ind.matches(&v)
    );
    Ok(())
}

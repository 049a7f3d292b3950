//! Commutant dimensions and trace vectors for every V^λ.

use yokonuma::repr::build_module;
use yokonuma::scalars::SpecPoint;
use yokonuma::tableaux::BPartition;
use yokonuma::verify;

fn main() -> yokonuma::Result<()> {
    let p = SpecPoint::parse("q=2,t=5")?;
    for l in BPartition::all(2, 3) {
        let v = build_module(&l);
        println!(
            "{:<20} dim {}  commutant: generic {}, at q=2,t=5 {}",
            l.to_string(),
            v.dim(),
            verify::commutant_dimension(&v, &SpecPoint::Generic)?,
            verify::commutant_dimension(&v, &p)?
        );
    }
    println!("{}", verify::character_vectors(2, 3).summary());
    Ok(())
}

//! Seminormal matrices of the type-A Hecke algebra on standard tableaux.

use yokonuma::linalg::Matrix;
use yokonuma::repr::{hoefsmit_matrices, partition_tableaux, Convention};
use yokonuma::scalars::{derived_constants, RatFn};

fn main() -> yokonuma::Result<()> {
    let k = derived_constants(1);
    let mu = [2, 1];
    for t in partition_tableaux(&mu) {
        println!("basis: {t}");
    }
    let s = hoefsmit_matrices(&mu, Convention::XMinusOne)?;
    for (i, m) in s.iter().enumerate() {
        println!("S{} = {m:?}", i + 1);
    }
    let id = Matrix::<RatFn>::identity(2);
    println!(
        "S1² = q + ba·S1: {}",
        s[0].mul(&s[0]) == id.scale(&k.q).add(&s[0].scale(&k.ba()))
    );
    println!(
        "braid: {}",
        s[0].mul(&s[1]).mul(&s[0]) == s[1].mul(&s[0]).mul(&s[1])
    );
    Ok(())
}

//! Torus idempotents e_χ, block idempotents e_α and the Fourier transform.

use yokonuma::characters::{char_act, orbit_data, CharIndex};
use yokonuma::group::{Perm, PseudoComposition};
use yokonuma::hecke::HeckeAlgebra;

fn main() -> yokonuma::Result<()> {
    let alg = HeckeAlgebra::generic(2, 2);
    let chi = CharIndex::parse("(1,2)", 2)?;
    let e = alg.idempotent(&chi);
    println!("e_{chi} = {}", alg.format_elem(&e, &[]));
    println!("e² = e: {}", alg.mul(&e, &e) == e);

    let s = Perm::simple(2, 1);
    let lhs = alg.mul(&alg.t_perm(&s), &e);
    let rhs = alg.mul(&alg.idempotent(&char_act(&s, &chi)), &alg.t_perm(&s));
    println!("t_s e_χ = e_(s·χ) t_s: {}", lhs == rhs);

    for alpha in PseudoComposition::all(2, 2) {
        let ea = alg.idempotent_alpha(&alpha);
        println!("e_{:?} has {} terms", alpha.parts(), ea.num_terms());
    }
    println!(
        "orbit of (4,3,1,3,3,4,1,3,1,3): {:?}",
        orbit_data(&CharIndex::parse("(4,3,1,3,3,4,1,3,1,3)", 4)?)
            .0
            .parts()
    );

    let f = alg.fourier(&alg.r(1));
    for ((w, chi), c) in f.terms() {
        println!("  R1 ↦ t_{:?} e_{chi}: {c}", w.one_line());
    }
    Ok(())
}

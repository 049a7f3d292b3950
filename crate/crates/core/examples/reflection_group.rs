//! The group G(b,1,n) = W ⋉ D: products, reduced words, coset representatives.

use yokonuma::group::{
    coset_decompose, enumerate_min_reps, reduced_word, GElem, Perm, PseudoComposition,
};

fn main() -> yokonuma::Result<()> {
    let x = GElem::parse("w=[3,1,2];d=[0,2,1]", 3)?;
    let y = GElem::parse("w=[2,1,3];d=[1,1,0]", 3)?;
    println!("x·y = {}", x.mul(&y));
    println!("x⁻¹ = {}", x.inverse());

    let w0 = Perm::from_one_line(&[3, 2, 1])?;
    println!(
        "reduced word of {:?}: {:?}",
        w0.one_line(),
        reduced_word(&w0)
    );

    let alpha = PseudoComposition::new(vec![1, 2]);
    for w in Perm::all(3) {
        let (min, stab) = coset_decompose(&w, &alpha);
        println!(
            "{:?} = {:?} · {:?}",
            w.one_line(),
            min.one_line(),
            stab.one_line()
        );
    }
    println!(
        "|W^α| for α = (3,0,5,2): {}",
        enumerate_min_reps(&PseudoComposition::new(vec![3, 0, 5, 2])).len()
    );
    Ok(())
}

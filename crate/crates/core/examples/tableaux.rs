//! Standard Young b-tableaux: enumeration, ξ-words, factorization τ = w·τ₀.

use yokonuma::tableaux::{
    axial_distance, enumerate_syt, enumerate_syt0, factorize, BPartition, BTableau,
};

fn main() -> yokonuma::Result<()> {
    let lambda = BPartition::parse("[[2,1],[],[3,2],[1,1]]")?;
    println!(
        "λ = {lambda}: |SYT| = {}, |SYT₀| = {}",
        lambda.num_syt(),
        lambda.num_syt0()
    );

    let tau = BTableau::parse("[[[3,7],[9]],[],[[2,5,10],[4,8]],[[1],[6]]]")?;
    println!("ξ(τ) = {}", tau.xi());
    let (w, t0) = factorize(&tau)?;
    println!("τ = w·τ₀ with w = {:?}, τ₀ = {t0}", w.one_line());
    println!(
        "δ(4,10) in the third component: {}",
        axial_distance(tau.component(3), 4, 10)?
    );

    let small = BPartition::parse("[[1],[1,1]]")?;
    for t in enumerate_syt(&small) {
        let mark = if enumerate_syt0(&small).contains(&t) {
            "  (initial)"
        } else {
            ""
        };
        println!("  {t}{mark}");
    }
    Ok(())
}

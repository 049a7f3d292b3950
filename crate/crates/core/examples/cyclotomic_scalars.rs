//! Exact scalars: Q(ζ_b), the field Q(ζ_b)(q,t) and the derived constants.

use yokonuma::scalars::{derived_constants, CycElem, RatFn, SpecPoint};

fn main() -> yokonuma::Result<()> {
    let z = CycElem::zeta(4);
    println!("ζ₄² = {}", z.pow(2));
    let s = (0..3).fold(CycElem::zero(), |acc, k| acc.add(&CycElem::zeta_pow(3, k)));
    println!("1 + ζ₃ + ζ₃² = {s}");

    let x = RatFn::t().pow(2).div(&RatFn::q())?;
    println!(
        "x = {x}, 1/(1 − x) = {}",
        RatFn::one().div(&RatFn::one().sub(&x))?
    );

    let k = derived_constants(2);
    println!("b = 2: a = {}, y = {}, ε = {}", k.a, k.y, k.eps);
    println!("a at t = q:            {}", SpecPoint::Cpa.apply(&k.a)?);
    println!("y at t = q:            {}", SpecPoint::Cpa.apply(&k.y)?);
    println!(
        "x at (q, t) = (4, 3):  {}",
        SpecPoint::parse("q=4,t=3")?.apply(&k.x)?
    );
    Ok(())
}

//! Specialization points: the group algebra, t = q, and numeric values.

use yokonuma::hecke::HeckeAlgebra;
use yokonuma::scalars::SpecPoint;
use yokonuma::verify;

fn main() -> yokonuma::Result<()> {
    let g = HeckeAlgebra::numeric(2, 2, &SpecPoint::group())?;
    let r = g.r(1);
    println!("q = t = 1:  R1² = {}", g.format_elem(&g.mul(&r, &r), &[]));

    let c = HeckeAlgebra::at(2, 2, &SpecPoint::Cpa)?;
    println!("t = q:      a = {}", c.a());

    let f = HeckeAlgebra::numeric(2, 2, &SpecPoint::finite(3))?;
    let r = f.r(1);
    println!("q = t = 3:  R1² = {}", f.format_elem(&f.mul(&r, &r), &[]));

    println!(
        "{}",
        verify::group_spec_table(3, 2, verify::DEFAULT_MAX_DIM)?.summary()
    );
    println!("{}", verify::cpa_coefficients(2, 3)?.summary());
    Ok(())
}

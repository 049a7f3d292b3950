//! Products in the standard basis {t_x} of ℋ_{b,n}.

use yokonuma::expr::format_result;
use yokonuma::hecke::HeckeAlgebra;

fn main() -> yokonuma::Result<()> {
    let alg = HeckeAlgebra::generic(2, 2);
    let show = |h| format_result(&alg, &h);

    let r = alg.r(1);
    println!("R1²      = {}", show(alg.mul(&r, &r)));
    println!("R1⁻¹     = {}", show(alg.r_inverse(1)?));
    println!("T1·R1    = {}", show(alg.mul(&alg.tj(1), &r)));
    println!("R1·T2    = {}", show(alg.mul(&r, &alg.tj(2))));
    println!("E1       = {}", show(alg.e(1)));

    let alg3 = HeckeAlgebra::generic(3, 3);
    let braid = alg3.mul_all(&[alg3.r(1), alg3.r(2), alg3.r(1)]);
    println!("b=3: R1R2R1 = {}", alg3.format_elem(&braid, &[]));
    println!("dim ℋ_(3,3) = {}", alg3.dimension());
    Ok(())
}

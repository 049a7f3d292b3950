//! Parsing and expanding expressions such as `q*R1 + 2*T1^3*E1`.

use yokonuma::expr::{eval_expr, format_result};
use yokonuma::hecke::HeckeAlgebra;

fn main() {
    let alg = HeckeAlgebra::generic(2, 2);
    let inputs = [
        "R1*R1",
        "T1^2",
        "e[(2,2)]",
        "R1*R1 + -q + -a*T1*E1*R1",
        "2*R1 + q",
        "R1 * X2",
    ];
    for s in inputs {
        match eval_expr(s, &alg) {
            Ok(h) => println!("{s:<28} = {}", format_result(&alg, &h)),
            Err(e) => println!("{s:<28} : {e}"),
        }
    }
}

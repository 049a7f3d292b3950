//! Defining relations as element and matrix identities, plus the sign check.

use yokonuma::repr::Convention;
use yokonuma::verify;

fn main() -> yokonuma::Result<()> {
    for (b, n) in [(1, 3), (2, 3), (3, 2)] {
        println!(
            "{}",
            verify::verify_element_relations(b, n, verify::DEFAULT_MAX_DIM)?.summary()
        );
        println!(
            "{}",
            verify::verify_all_modules(b, n, Convention::XMinusOne).summary()
        );
    }
    let r = verify::sign_regression();
    println!("{}", serde_json::to_string_pretty(&r.to_json()).unwrap());
    Ok(())
}

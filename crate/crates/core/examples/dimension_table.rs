//! Σ_λ |SYT^λ|² = bⁿ·n! one pair at a time and across the whole grid.

use yokonuma::tableaux::BPartition;
use yokonuma::verify;

fn main() -> yokonuma::Result<()> {
    for l in BPartition::all(2, 3) {
        println!("{:<20} |SYT| = {}", l.to_string(), l.num_syt());
    }
    let (lhs, rhs, _) = verify::dimension_identity(2, 3, verify::DEFAULT_MAX_DIM)?;
    println!("{lhs} = {rhs}");
    let grid = verify::dimension_grid(verify::DEFAULT_MAX_DIM);
    println!("{}", grid.summary());
    for note in &grid.notes {
        println!("  {note}");
    }
    Ok(())
}

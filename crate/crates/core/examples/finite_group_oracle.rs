//! Structure constants against convolution of B_a double cosets in GL_n(𝔽_q).

use yokonuma::verify::oracle_compare;

fn main() -> yokonuma::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("integer"));
    let (q, a, b, n) = match (args.next(), args.next(), args.next(), args.next()) {
        (Some(q), Some(a), Some(b), Some(n)) => (q, a, b, n),
        _ => (3, 1, 2, 2),
    };
    let report = oracle_compare(q, a, b, n)?;
    for c in &report.checks {
        println!("{:?}  {}", c.status, c.check);
    }
    for note in &report.notes {
        println!("  {note}");
    }
    println!("{}", report.summary());
    Ok(())
}

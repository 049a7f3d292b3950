//! Acceptance criteria 1–10, one line each. Exact equality throughout.

use std::time::Instant;

use yokonuma::repr::Convention;
use yokonuma::scalars::SpecPoint;
use yokonuma::verify::{self, Report, DEFAULT_MAX_DIM};
use yokonuma::Result;

fn merged(name: &str, parts: Vec<Result<Report>>) -> Result<Report> {
    let mut r = Report::new(name);
    for p in parts {
        r.absorb(p?);
    }
    Ok(r)
}

fn relations() -> Result<Report> {
    let grid = [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)];
    let mut parts = Vec::new();
    for (b, n) in grid {
        parts.push(verify::verify_element_relations(b, n, DEFAULT_MAX_DIM));
        parts.push(Ok(verify::verify_all_modules(b, n, Convention::XMinusOne)));
    }
    parts.push(Ok(verify::sign_regression()));
    merged("relations", parts)
}

fn dimensions() -> Result<Report> {
    let mut r = verify::dimension_grid(DEFAULT_MAX_DIM);
    for (b, n, d) in [(2, 4, 384), (3, 3, 162), (4, 3, 384)] {
        let (lhs, rhs, ok) = verify::dimension_identity(b, n, DEFAULT_MAX_DIM)?;
        r.check(&format!("b={b} n={n}: {lhs} = {d}"), ok && rhs == d, || {
            format!("{lhs}, {rhs}")
        });
    }
    Ok(r)
}

fn irreducible() -> Result<Report> {
    let parts = [(2, 2), (2, 3), (3, 2)]
        .into_iter()
        .map(|(b, n)| verify::irreducibility_suite(b, n, &SpecPoint::Generic))
        .collect();
    merged("irreducibility", parts)
}

fn blocks() -> Result<Report> {
    merged(
        "blocks",
        vec![
            Ok(verify::blocks_suite(2, 3)),
            Ok(verify::blocks_suite(3, 2)),
        ],
    )
}

fn oracle() -> Result<Report> {
    let cases = [
        (2, 1, 1, 2),
        (3, 1, 2, 2),
        (3, 2, 1, 2),
        (4, 1, 3, 2),
        (5, 1, 4, 2),
        (2, 1, 1, 3),
    ];
    merged(
        "oracle",
        cases
            .into_iter()
            .map(|(q, a, b, n)| verify::oracle_compare(q, a, b, n))
            .collect(),
    )
}

fn group_spec() -> Result<Report> {
    merged(
        "group specialization",
        vec![
            verify::group_spec_table(2, 3, DEFAULT_MAX_DIM),
            verify::group_spec_table(3, 2, DEFAULT_MAX_DIM),
        ],
    )
}

fn unit_twist() -> Result<Report> {
    let mut parts = Vec::new();
    for b in [2, 4] {
        for n in [2, 3] {
            parts.push(verify::spa_check(b, n, DEFAULT_MAX_DIM));
            parts.push(verify::cpa_coefficients(b, n));
        }
    }
    merged("unit twist and t = q coefficients", parts)
}

fn main() {
    type Criterion = (&'static str, fn() -> Result<Report>);
    let criteria: [Criterion; 10] = [
        (
            "defining relations (elements, all modules, sign regression)",
            relations,
        ),
        ("Σ_λ |SYT^λ|² = bⁿn! for bⁿn! ≤ 10⁵", dimensions),
        (
            "commutant dimension 1 and distinct trace vectors",
            irreducible,
        ),
        ("Hoefsmit braid and quadratic relations, m ≤ 5", || {
            Ok(verify::hoefsmit_suite(5))
        }),
        ("weight spaces, dim V^λ, γ bijective", blocks),
        ("factorization bijection, n ≤ 5, b ≤ 3", || {
            Ok(verify::factorization_suite(5, 3))
        }),
        ("finite-group convolution oracle", oracle),
        ("group-algebra specialization", group_spec),
        (
            "unit twist u_i, twisted quadratic relation, t = q coefficients",
            unit_twist,
        ),
        ("1 + x + ⋯ + x^k ≠ 0 for k ≤ 8", || {
            Ok(verify::geometric_nonvanishing(8))
        }),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(r) if r.all_pass() => {
                println!(
                    "criterion {:>2}: PASS  {name}  ({} checks, {secs:.1}s)",
                    i + 1,
                    r.checks.len()
                );
            }
            Ok(r) => {
                failed += 1;
                println!(
                    "criterion {:>2}: FAIL  {name}  ({}, {secs:.1}s)",
                    i + 1,
                    r.summary()
                );
                for c in r.failures().take(5) {
                    println!("    {}: {}", c.check, c.witness.as_deref().unwrap_or(""));
                }
            }
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}  (error: {e})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Parametric solutions of `γY³ = γX₁³ + βX₂³ + γ²β²X₃³` over Z[ρ].
//!
//! Shows the worked instance γ = 2, β = 1, a = c = 1 (both sides 2 − 36ρ),
//! then streams a verified batch over all parameters of norm at most 2.
//!
//! Run with: `cargo run --example cubic_solutions`

use pcentral::cubic::{enumerate_solutions, gen_solution, gen_solution_raw, verify_solution};
use pcentral::eisenstein::EisensteinInt;

fn e(a: i64, b: i64) -> EisensteinInt {
    EisensteinInt::new(a, b)
}

fn main() {
    let s = gen_solution(&e(2, 0), &e(1, 0), &e(1, 0), &e(1, 0));
    println!(
        "gamma = {}, beta = {}, a = {}, c = {}",
        s.gamma, s.beta, s.a, s.c
    );
    println!("  Y  = {}", s.y);
    println!("  X1 = {}", s.x1);
    println!("  X2 = {}", s.x2);
    println!("  X3 = {}", s.x3);
    let (lhs, rhs) = s.sides();
    println!("  gamma*Y^3 = {lhs}");
    println!("  gamma*X1^3 + beta*X2^3 + gamma^2*beta^2*X3^3 = {rhs}");

    // the pre-substitution family satisfies its own equation shape
    let raw = gen_solution_raw(&e(1, 0), &e(1, 0), &e(1, 0), &e(1, 0));
    println!(
        "\nraw family at alpha = beta = a = b = 1: (Y, X1, X2, X3) = ({}, {}, {}, {})",
        raw.y, raw.x1, raw.x2, raw.x3
    );

    let gamma = e(1, -2);
    let beta = e(3, 1);
    let mut total = 0usize;
    let mut degenerate = 0usize;
    for solution in enumerate_solutions(&gamma, &beta, 2) {
        assert!(verify_solution(&solution));
        total += 1;
        if solution.degenerate {
            degenerate += 1;
        }
    }
    println!(
        "\nenumerated {total} verified solutions for gamma = {gamma}, beta = {beta} \
         with parameter norms <= 2 ({degenerate} degenerate)"
    );

    let sample = enumerate_solutions(&gamma, &beta, 2).nth(20).unwrap();
    println!(
        "sample line:\n{}",
        pcentral::json::to_canonical_string(&sample.to_json())
    );
}

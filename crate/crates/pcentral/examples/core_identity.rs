//! Symbolic proof of the identity behind the solution generator:
//!
//! `α(a³α + b³β)³ = α(a³α + ρb³β)³ + 3(1−ρ)β(a²bα)³ + 3(1−ρ⁻¹)α²β²(ab²)³`
//!
//! Both sides expand as polynomials in a, b, α, β over Z[ρ]; the report
//! compares them monomial by monomial. A quick numeric spot-check at a few
//! points runs first, as an independent route.
//!
//! Run with: `cargo run --example core_identity`

use pcentral::cubic::{core_identity_sides_at, verify_core_identity};
use pcentral::eisenstein::EisensteinInt;

fn main() {
    println!("numeric spot checks:");
    for (a, b, alpha, beta) in [
        (
            EisensteinInt::new(1, 0),
            EisensteinInt::new(1, 0),
            EisensteinInt::new(1, 0),
            EisensteinInt::new(1, 0),
        ),
        (
            EisensteinInt::new(2, -1),
            EisensteinInt::new(3, 1),
            EisensteinInt::new(-1, 4),
            EisensteinInt::new(5, 2),
        ),
        (
            EisensteinInt::new(0, 7),
            EisensteinInt::new(-2, -2),
            EisensteinInt::new(9, 1),
            EisensteinInt::new(1, -6),
        ),
    ] {
        let (lhs, rhs) = core_identity_sides_at(&a, &b, &alpha, &beta);
        println!(
            "  a={a}, b={b}, alpha={alpha}, beta={beta}: lhs = rhs = {lhs} ({})",
            if lhs == rhs { "ok" } else { "MISMATCH" }
        );
    }

    println!("\nsymbolic expansion over Z[rho]:");
    let report = verify_core_identity();
    println!("{report}");
    std::process::exit(if report.all_match() { 0 } else { 1 });
}

//! Conjugation inside the symbol algebra: `z = (ax+by)·x·(ax+by)⁻¹`.
//!
//! The conjugate stays in the span of x, y and x²y², its cube is exactly α,
//! and the three coefficients match the closed forms that drive the cubic
//! Diophantine parametrization.
//!
//! Run with: `cargo run --example conjugation`

use num_rational::BigRational;
use pcentral::cubic::SymbolAlgebraModel;
use pcentral::cyclo::CycloNum;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() -> pcentral::Result<()> {
    let alpha = CycloNum::from_integer(3, 2)?;
    let beta = CycloNum::from_integer(3, 3)?;
    let model = SymbolAlgebraModel::new(alpha.clone(), beta)?;

    // a = 1 + ρ, b = 1/2
    let a = CycloNum::from_coeffs(3, vec![rat(1, 1), rat(1, 1)])?;
    let b = CycloNum::from_rational(3, rat(1, 2))?;
    let out = model.conjugate_and_cube(&a, &b)?;

    println!("a = {a}, b = {b}");
    println!("z = (a*x + b*y) * x * (a*x + b*y)^-1");
    println!("  = {}", out.element);
    println!("\nz^3 = {} (alpha = {})", out.cube, alpha);
    println!("\ncoefficients of s*z with s = a^3*alpha + b^3*beta:");
    println!("  on x      : {}", out.coefficients[0]);
    println!("  on y      : {}", out.coefficients[1]);
    println!("  on x^2y^2 : {}", out.coefficients[2]);

    // the same coefficients from the closed forms
    let rho = CycloNum::rho(3)?;
    let one = CycloNum::one(3)?;
    println!("\nclosed forms:");
    println!(
        "  a^3*alpha + rho*b^3*beta  = {}",
        a.pow(3)?
            .mul(model.alpha())?
            .add(&rho.mul(&b.pow(3)?)?.mul(model.beta())?)?
    );
    println!(
        "  (1 - rho^-1)*b*a^2*alpha  = {}",
        one.sub(&CycloNum::root_power(3, -1)?)?
            .mul(&b)?
            .mul(&a.pow(2)?)?
            .mul(model.alpha())?
    );
    println!(
        "  (1 - rho)*a*b^2           = {}",
        one.sub(&rho)?.mul(&a)?.mul(&b.pow(2)?)?
    );

    // degenerate direction: b chosen so that a³α + b³β = 0 is rejected
    println!(
        "\ndegenerate parameters are refused: {:?}",
        SymbolAlgebraModel::new(CycloNum::one(3)?, CycloNum::one(3)?)?
            .conjugate_and_cube(&one, &CycloNum::from_integer(3, -1)?)
            .err()
    );
    Ok(())
}

//! Star products in the degree-3 symbol algebra.
//!
//! Builds the algebra with `y·x = ρ·x·y`, `x³ = α`, `y³ = β` and shows the
//! two faces of the triple star product: it vanishes on a triple whose
//! product is not central, and it collapses to the scalar −3ραβ on the
//! coherent triple {x, y, x²y²}.
//!
//! Run with: `cargo run --example star_identity`

use pcentral::clifford::{classify_triple, star2, star3, CliffordElement};
use pcentral::cubic::SymbolAlgebraModel;
use pcentral::cyclo::CycloNum;

fn main() -> pcentral::Result<()> {
    let alpha = CycloNum::from_integer(3, 2)?;
    let beta = CycloNum::from_integer(3, 5)?;
    let model = SymbolAlgebraModel::new(alpha, beta)?;
    let (x, y) = (model.x(), model.y());
    println!(
        "algebra: y*x = rho*x*y, x^3 = {}, y^3 = {}",
        model.alpha(),
        model.beta()
    );

    // the pairwise obstruction vanishes both ways, so x and y span a plane
    println!("\nstar2(x, y) = {}", star2(&x, &y)?);
    println!("star2(y, x) = {}", star2(&y, &x)?);

    let one = CycloNum::one(3)?;
    let w = CliffordElement::monomial(model.presentation(), &[2, 2], one.clone())?;
    let star = star3(&x, &y, &w)?;
    println!("\nstar3(x, y, x^2*y^2) = {}", star);
    println!(
        "  -3*rho*alpha*beta  = {}",
        CycloNum::rho(3)?
            .mul(model.alpha())?
            .mul(model.beta())?
            .scale(&num_rational::BigRational::from_integer((-3).into()))
    );
    println!("  classification: {:?}", classify_triple(&x, &y, &w)?);

    // a triple whose product is x²·(scalars): the six phases cancel
    let v = CliffordElement::monomial(model.presentation(), &[1, 2], one)?;
    println!("\nstar3(x, y, x*y^2) = {}", star3(&x, &y, &v)?);
    println!("  classification: {:?}", classify_triple(&x, &y, &v)?);

    // the coherent-span test over the whole triple
    let coherent = pcentral::clifford::spans_p_central_space(&[x, y, w])?;
    println!("\n{{x, y, x^2*y^2}} spans a 3-central space: {coherent}");
    Ok(())
}

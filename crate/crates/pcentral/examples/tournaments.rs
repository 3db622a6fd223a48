//! Tournament analysis of 3-central generating sets.
//!
//! Orients the complete graph from a commutation matrix, checks the three
//! structural rules of coherent configurations, and runs the diminish step
//! that removes one vertex per triangle to leave an acyclic tournament.
//!
//! Run with: `cargo run --example tournaments`

use pcentral::clifford::PCentralPresentation;
use pcentral::cyclo::CycloNum;
use pcentral::json::to_canonical_string;
use pcentral::linalg::FpMatrix;
use pcentral::tournament::Tournament;

fn main() -> pcentral::Result<()> {
    // x₂ and x₃ close a directed triangle with x₁; x₄ points at all of them
    let c = FpMatrix::from_rows(
        3,
        &[
            vec![0, 1, 2, 2],
            vec![2, 0, 1, 2],
            vec![1, 2, 0, 2],
            vec![1, 1, 1, 0],
        ],
    )?;
    let one = CycloNum::one(3)?;
    let pres = PCentralPresentation::new(c, vec![one; 4])?;
    let t = Tournament::from_presentation(&pres)?;
    println!(
        "tournament: {}",
        to_canonical_string(&t.to_json()).trim_end()
    );

    let report = t.validate_propositions();
    println!("triangles: {:?}", report.triangles);
    println!("admissible: {}", report.admissible());
    println!(
        "report: {}",
        to_canonical_string(&report.to_json()).trim_end()
    );

    let out = t.diminish()?;
    println!("\nafter diminish (default: drop smallest vertex of each triangle):");
    println!("  removed {:?}, kept {:?}", out.removed, out.kept);
    println!(
        "  reduced: {}",
        to_canonical_string(&out.tournament.to_json()).trim_end()
    );

    // a vertex with mixed orientation towards the triangle breaks rule 1
    let broken = Tournament::new(4, [(0, 1), (1, 2), (2, 0), (3, 0), (1, 3), (3, 2)])?;
    let report = broken.validate_propositions();
    println!(
        "\nmixed-orientation tournament: admissible = {}",
        report.admissible()
    );
    println!("  {}", report.failure_summary());
    Ok(())
}

//! Shared generators and reference implementations for the integration
//! suites. Everything is seeded for reproducibility.

#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pcentral::clifford::{CliffordElement, PCentralPresentation};
use pcentral::cyclo::CycloNum;
use pcentral::eisenstein::EisensteinInt;
use pcentral::linalg::FpMatrix;
use pcentral::tournament::Tournament;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=9);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_cyclo(rng: &mut ChaCha8Rng, p: u64) -> CycloNum {
    let coeffs = (0..p - 1).map(|_| random_rational(rng)).collect();
    CycloNum::from_coeffs(p, coeffs).expect("valid coefficient count")
}

pub fn random_nonzero_cyclo(rng: &mut ChaCha8Rng, p: u64) -> CycloNum {
    loop {
        let c = random_cyclo(rng, p);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random Eisenstein integer with components up to `bits` bits (signed).
pub fn random_eisenstein(rng: &mut ChaCha8Rng, bits: usize) -> EisensteinInt {
    let bytes = bits.div_ceil(8).max(1);
    let component = |rng: &mut ChaCha8Rng| {
        let mut data = vec![0u8; bytes];
        rng.fill(&mut data[..]);
        let sign = if rng.gen_bool(0.5) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        BigInt::from_bytes_le(sign, &data)
    };
    EisensteinInt::new(component(rng), component(rng))
}

pub fn random_skew_matrix(rng: &mut ChaCha8Rng, p: u64, n: usize) -> FpMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rng.gen_range(0..p) as i64;
            rows[i][j] = v;
            rows[j][i] = -v;
        }
    }
    FpMatrix::from_rows(p, &rows).expect("valid skew matrix data")
}

pub fn random_presentation(rng: &mut ChaCha8Rng, p: u64, n: usize) -> Arc<PCentralPresentation> {
    let c = random_skew_matrix(rng, p, n);
    let powers = (0..n).map(|_| random_nonzero_cyclo(rng, p)).collect();
    PCentralPresentation::new(c, powers)
        .expect("generated presentation is valid")
        .into_shared()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, pres: &Arc<PCentralPresentation>) -> CliffordElement {
    let p = pres.prime();
    let exps: Vec<u32> = (0..pres.generator_count())
        .map(|_| rng.gen_range(0..p) as u32)
        .collect();
    CliffordElement::monomial(pres, &exps, random_nonzero_cyclo(rng, p)).expect("valid monomial")
}

/// Sparse random element with 1..=max_terms monomials.
pub fn random_sparse_element(
    rng: &mut ChaCha8Rng,
    pres: &Arc<PCentralPresentation>,
    max_terms: usize,
) -> CliffordElement {
    let terms = rng.gen_range(1..=max_terms);
    let mut acc = CliffordElement::zero(pres);
    for _ in 0..terms {
        acc = acc
            .add(&random_monomial(rng, pres))
            .expect("same presentation");
    }
    acc
}

/// Every labeled tournament on n vertices.
pub fn all_tournaments(n: usize) -> Vec<Tournament> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let count = 1usize << pairs.len();
    (0..count)
        .map(|mask| {
            let edges =
                pairs.iter().enumerate().map(
                    |(bit, &(i, j))| {
                        if mask >> bit & 1 == 1 {
                            (i, j)
                        } else {
                            (j, i)
                        }
                    },
                );
            Tournament::new(n, edges).expect("orientation of the complete graph")
        })
        .collect()
}

/// Exhaustive simple directed cycle enumeration (reference implementation,
/// independent of the tournament module's DFS): every vertex subset, every
/// cyclic order anchored at the subset minimum.
pub fn brute_force_cycles(t: &Tournament) -> Vec<Vec<usize>> {
    let n = t.vertex_count();
    let mut cycles = Vec::new();
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if subset.len() < 3 {
            continue;
        }
        let anchor = subset[0];
        let rest: Vec<usize> = subset[1..].to_vec();
        for perm in permutations(&rest) {
            let mut order = vec![anchor];
            order.extend(perm);
            let closed = order
                .iter()
                .zip(order.iter().cycle().skip(1))
                .all(|(&from, &to)| t.has_edge(from, to));
            if closed {
                cycles.push(order);
            }
        }
    }
    cycles
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

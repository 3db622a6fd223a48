//! The Clifford algebra of a p-central generating set, as a concrete
//! p^n-dimensional algebra over Q(ρ).
//!
//! A presentation records an n×n skew-symmetric matrix `C` of commutation
//! exponents and a vector `alpha` of p-th powers, with generators subject to
//! `x_i x_j = ρ^{C_{i,j}} x_j x_i` and `x_k^p = alpha_k`. Elements are kept
//! in normal order (`x_1` before `x_2` before …, exponents in `[0, p-1]`),
//! so products reduce to a closed-form phase plus per-axis power folding and
//! every value has a unique representation.
//!
//! On top of the arithmetic sit the structural operations: p-centrality and
//! coherence tests through the star products, generator changes driven by an
//! invertible matrix (with an engine-verified certificate), and the full
//! decomposition into p-cyclic symbol algebras plus a commutative part.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::fp;
use crate::json::{as_array, as_u64, as_usize, get, object};
use crate::linalg::{entries_from_json, FpMatrix};

/// Defining data of the algebra: prime, commutation matrix, generator powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PCentralPresentation {
    p: u64,
    n: usize,
    commutation: FpMatrix,
    powers: Vec<CycloNum>,
}

impl PCentralPresentation {
    /// Validates and builds a presentation. The matrix must be square,
    /// skew-symmetric with zero diagonal, and every power must be a nonzero
    /// element of Q(ρ) for the same prime. `p = 2` is accepted so the
    /// classical Clifford relations can be computed with; the coherence and
    /// decomposition layers restrict the prime further themselves.
    pub fn new(commutation: FpMatrix, powers: Vec<CycloNum>) -> Result<Self> {
        let p = commutation.modulus();
        commutation.check_alternating()?;
        let n = commutation.rows();
        if powers.len() != n {
            return Err(Error::Format(format!(
                "presentation needs {n} generator powers, got {}",
                powers.len()
            )));
        }
        for (index, alpha) in powers.iter().enumerate() {
            if alpha.prime() != p {
                return Err(Error::ModulusMismatch {
                    left: p,
                    right: alpha.prime(),
                });
            }
            if alpha.is_zero() {
                return Err(Error::ZeroGeneratorPower { index });
            }
        }
        Ok(Self {
            p,
            n,
            commutation,
            powers,
        })
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn commutation(&self) -> &FpMatrix {
        &self.commutation
    }

    /// The commutation exponent `C_{i,j}` (0-based).
    pub fn phase_exponent(&self, i: usize, j: usize) -> u64 {
        self.commutation.get_raw(i, j)
    }

    pub fn power(&self, k: usize) -> &CycloNum {
        &self.powers[k]
    }

    pub fn powers(&self) -> &[CycloNum] {
        &self.powers
    }

    /// JSON form: `{"p": int, "n": int, "c": [[int,...],...], "alpha": [CycloNum,...]}`.
    pub fn to_json(&self) -> Value {
        let c: Vec<Value> = (0..self.n)
            .map(|i| {
                Value::Array(
                    self.commutation
                        .row(i)
                        .iter()
                        .map(|&v| Value::Number(v.into()))
                        .collect(),
                )
            })
            .collect();
        object(vec![
            ("p", Value::Number(self.p.into())),
            ("n", Value::Number((self.n as u64).into())),
            ("c", Value::Array(c)),
            (
                "alpha",
                Value::Array(self.powers.iter().map(|a| a.to_json()).collect()),
            ),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "presentation";
        let p = as_u64(get(value, "p", ctx)?, "presentation prime")?;
        let n = as_usize(get(value, "n", ctx)?, "presentation size")?;
        let c = entries_from_json(get(value, "c", ctx)?)?;
        if c.len() != n || c.iter().any(|row| row.len() != n) {
            return Err(Error::Format(format!("commutation matrix must be {n}x{n}")));
        }
        let alpha = as_array(get(value, "alpha", ctx)?, "generator powers")?;
        if alpha.len() != n {
            return Err(Error::Format(format!(
                "presentation needs {n} generator powers, got {}",
                alpha.len()
            )));
        }
        let powers = alpha
            .iter()
            .map(|a| CycloNum::from_json(p, a))
            .collect::<Result<Vec<_>>>()?;
        Self::new(FpMatrix::from_rows(p, &c)?, powers)
    }
}

/// An element of the algebra: a finite linear combination of normal-ordered
/// monomials with coefficients in Q(ρ). Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordElement {
    pres: Arc<PCentralPresentation>,
    terms: BTreeMap<Vec<u32>, CycloNum>,
}

impl CliffordElement {
    pub fn zero(pres: &Arc<PCentralPresentation>) -> Self {
        Self {
            pres: Arc::clone(pres),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pres: &Arc<PCentralPresentation>) -> Self {
        Self::scalar(pres, CycloNum::one(pres.prime()).expect("valid prime"))
            .expect("scalar of matching prime")
    }

    pub fn scalar(pres: &Arc<PCentralPresentation>, value: CycloNum) -> Result<Self> {
        let exps = vec![0; pres.generator_count()];
        Self::monomial(pres, &exps, value)
    }

    /// The generator `x_k` (0-based).
    pub fn generator(pres: &Arc<PCentralPresentation>, k: usize) -> Result<Self> {
        let n = pres.generator_count();
        if k >= n {
            return Err(Error::GeneratorOutOfRange { index: k, n });
        }
        let mut exps = vec![0u32; n];
        exps[k] = 1;
        Self::monomial(pres, &exps, CycloNum::one(pres.prime())?)
    }

    /// `coeff · x_1^{e_1} … x_n^{e_n}` with exponents already in `[0, p-1]`.
    pub fn monomial(
        pres: &Arc<PCentralPresentation>,
        exponents: &[u32],
        coeff: CycloNum,
    ) -> Result<Self> {
        let n = pres.generator_count();
        let p = pres.prime();
        if exponents.len() != n {
            return Err(Error::ExponentLength {
                got: exponents.len(),
                expected: n,
            });
        }
        if let Some((index, &value)) = exponents.iter().enumerate().find(|&(_, &e)| e as u64 >= p) {
            return Err(Error::ExponentOutOfRange {
                index,
                value: value as u64,
                p,
            });
        }
        if coeff.prime() != p {
            return Err(Error::ModulusMismatch {
                left: p,
                right: coeff.prime(),
            });
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents.to_vec(), coeff);
        }
        Ok(Self {
            pres: Arc::clone(pres),
            terms,
        })
    }

    pub fn presentation(&self) -> &Arc<PCentralPresentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &CycloNum)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient on a given monomial (zero when absent).
    pub fn coefficient(&self, exponents: &[u32]) -> CycloNum {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(|| CycloNum::zero(self.pres.prime()).expect("valid prime"))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) when the element is the scalar c (including zero).
    pub fn as_scalar(&self) -> Option<CycloNum> {
        match self.terms.len() {
            0 => Some(CycloNum::zero(self.pres.prime()).expect("valid prime")),
            1 => {
                let (exps, coeff) = self.terms.iter().next().expect("one term");
                exps.iter().all(|&e| e == 0).then(|| coeff.clone())
            }
            _ => None,
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.as_scalar().is_some()
    }

    fn same_presentation(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.pres, &other.pres) || self.pres == other.pres {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    fn insert_term(terms: &mut BTreeMap<Vec<u32>, CycloNum>, exps: Vec<u32>, coeff: CycloNum) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&coeff).expect("same prime");
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_presentation(other)?;
        let mut terms = self.terms.clone();
        for (exps, coeff) in &other.terms {
            Self::insert_term(&mut terms, exps.clone(), coeff.clone());
        }
        Ok(Self {
            pres: Arc::clone(&self.pres),
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            pres: Arc::clone(&self.pres),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &CycloNum) -> Result<Self> {
        if factor.prime() != self.pres.prime() {
            return Err(Error::ModulusMismatch {
                left: self.pres.prime(),
                right: factor.prime(),
            });
        }
        let mut terms = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            Self::insert_term(&mut terms, exps.clone(), coeff.mul(factor)?);
        }
        Ok(Self {
            pres: Arc::clone(&self.pres),
            terms,
        })
    }

    /// Normal-ordered exact product.
    ///
    /// For monomials `x^e · x^f` the reordering phase is
    /// `ρ^{Σ_{i<j} C_{j,i} e_j f_i}` (every factor of the right word moves
    /// left past the higher-indexed tail of the left word), after which any
    /// axis with `e_i + f_i ≥ p` folds through `x_i^p = alpha_i`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_presentation(other)?;
        let p = self.pres.prime();
        let n = self.pres.generator_count();
        let mut terms = BTreeMap::new();
        for (e, ce) in &self.terms {
            for (f, cf) in &other.terms {
                let mut phase = 0u64;
                for j in 1..n {
                    if e[j] == 0 {
                        continue;
                    }
                    for i in 0..j {
                        if f[i] == 0 {
                            continue;
                        }
                        let c = self.pres.phase_exponent(j, i);
                        let contrib = fp::mul_mod(fp::mul_mod(c, e[j] as u64, p), f[i] as u64, p);
                        phase = fp::add_mod(phase, contrib, p);
                    }
                }
                let mut coeff = ce.mul(cf)?;
                if phase != 0 {
                    coeff = coeff.mul(&CycloNum::root_power(p, phase as i64)?)?;
                }
                let mut exps = Vec::with_capacity(n);
                for i in 0..n {
                    let s = e[i] + f[i];
                    if s as u64 >= p {
                        coeff = coeff.mul(self.pres.power(i))?;
                        exps.push(s - p as u32);
                    } else {
                        exps.push(s);
                    }
                }
                Self::insert_term(&mut terms, exps, coeff);
            }
        }
        Ok(Self {
            pres: Arc::clone(&self.pres),
            terms,
        })
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.pres);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The p-th power, p the presentation prime.
    pub fn pth_power(&self) -> Result<Self> {
        self.pow(self.pres.prime())
    }

    /// True when the p-th power lies in the base field.
    pub fn is_p_central(&self) -> Result<bool> {
        Ok(self.pth_power()?.is_scalar())
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// Inverse of an invertible element.
    ///
    /// A p-central element `v` with scalar `v^p = s ≠ 0` inverts as
    /// `v^{p-1}/s`; anything else falls back to solving the linear system of
    /// left multiplication on the monomial basis.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let p = self.pres.prime();
        let s = self.pow(p)?;
        if let Some(scalar) = s.as_scalar() {
            if scalar.is_zero() {
                return Err(Error::NotInvertible);
            }
            return self.pow(p - 1)?.scale(&scalar.inv()?);
        }
        self.invert_by_regular_representation()
    }

    fn invert_by_regular_representation(&self) -> Result<Self> {
        let p = self.pres.prime();
        let n = self.pres.generator_count();
        let dim = (p as usize)
            .checked_pow(n as u32)
            .filter(|&d| d <= 4096)
            .ok_or_else(|| {
                Error::Unsupported(format!(
                    "regular-representation inverse needs a p^n-dimensional solve; p^n with p = {p}, n = {n} is too large"
                ))
            })?;

        // monomial basis in lexicographic order
        let mut basis: Vec<Vec<u32>> = Vec::with_capacity(dim);
        let mut current = vec![0u32; n];
        loop {
            basis.push(current.clone());
            let mut axis = n;
            while axis > 0 {
                axis -= 1;
                current[axis] += 1;
                if (current[axis] as u64) < p {
                    break;
                }
                current[axis] = 0;
                if axis == 0 {
                    axis = usize::MAX;
                    break;
                }
            }
            if axis == usize::MAX || basis.len() == dim {
                break;
            }
        }
        let index: BTreeMap<&[u32], usize> = basis
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_slice(), i))
            .collect();

        // columns of left multiplication by self
        let zero = CycloNum::zero(p)?;
        let mut matrix: Vec<Vec<CycloNum>> = vec![vec![zero.clone(); dim]; dim];
        for (col, exps) in basis.iter().enumerate() {
            let image = self.mul(&Self::monomial(&self.pres, exps, CycloNum::one(p)?)?)?;
            for (e, c) in &image.terms {
                matrix[index[e.as_slice()]][col] = c.clone();
            }
        }
        let mut rhs = vec![zero.clone(); dim];
        rhs[index[vec![0u32; n].as_slice()]] = CycloNum::one(p)?;

        // Gaussian elimination over Q(ρ)
        for col in 0..dim {
            let Some(pivot) = (col..dim).find(|&r| !matrix[r][col].is_zero()) else {
                return Err(Error::NotInvertible);
            };
            matrix.swap(col, pivot);
            rhs.swap(col, pivot);
            let inv = matrix[col][col].inv()?;
            for c in col..dim {
                matrix[col][c] = matrix[col][c].mul(&inv)?;
            }
            rhs[col] = rhs[col].mul(&inv)?;
            for r in 0..dim {
                if r == col || matrix[r][col].is_zero() {
                    continue;
                }
                let factor = matrix[r][col].clone();
                for c in col..dim {
                    let delta = factor.mul(&matrix[col][c])?;
                    matrix[r][c] = matrix[r][c].sub(&delta)?;
                }
                let delta = factor.mul(&rhs[col])?;
                rhs[r] = rhs[r].sub(&delta)?;
            }
        }

        let mut terms = BTreeMap::new();
        for (i, coeff) in rhs.into_iter().enumerate() {
            Self::insert_term(&mut terms, basis[i].clone(), coeff);
        }
        Ok(Self {
            pres: Arc::clone(&self.pres),
            terms,
        })
    }
}

impl std::fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let monomial: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "({coeff})")?;
            } else if coeff.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "({coeff})*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

/// `u·u·v + u·v·u + v·u·u`: the degree-(2,1) obstruction whose vanishing
/// (in both orders) makes a pair span a p-central plane.
pub fn star2(u: &CliffordElement, v: &CliffordElement) -> Result<CliffordElement> {
    let uu = u.mul(u)?;
    uu.mul(v)?.add(&u.mul(&v.mul(u)?)?)?.add(&v.mul(&uu)?)
}

/// The sum of all six ordered products of u, v, w.
pub fn star3(
    u: &CliffordElement,
    v: &CliffordElement,
    w: &CliffordElement,
) -> Result<CliffordElement> {
    let mut acc = u.mul(v)?.mul(w)?;
    acc = acc.add(&u.mul(w)?.mul(v)?)?;
    acc = acc.add(&v.mul(u)?.mul(w)?)?;
    acc = acc.add(&v.mul(w)?.mul(u)?)?;
    acc = acc.add(&w.mul(u)?.mul(v)?)?;
    acc.add(&w.mul(v)?.mul(u)?)
}

/// Outcome of classifying a triple of 3-central, pairwise non-commuting
/// elements by its star product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleCase {
    /// `u ∗ v ∗ w = 0`.
    Case1,
    /// `u ∗ v ∗ w` is a nonzero scalar (the product of the three elements is
    /// central, up to scalars: `w ~ u^{-1} v^{-1}`).
    Case2,
    /// The triple does not span a 3-central space.
    NotCoherent,
}

/// Classifies a triple of 3-central, pairwise non-commuting elements.
pub fn classify_triple(
    u: &CliffordElement,
    v: &CliffordElement,
    w: &CliffordElement,
) -> Result<TripleCase> {
    let pres = u.presentation();
    if pres.prime() != 3 {
        return Err(Error::Unsupported(format!(
            "coherence classification is defined for p = 3, got p = {}",
            pres.prime()
        )));
    }
    let items = [u, v, w];
    for (index, e) in items.iter().enumerate() {
        u.same_presentation(e)?;
        if !e.is_p_central()? {
            return Err(Error::NotPCentral { index });
        }
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            if items[i].commutes_with(items[j])? {
                return Err(Error::CommutingElements { i, j });
            }
        }
    }
    for a in 0..3 {
        for b in 0..3 {
            if a != b && !star2(items[a], items[b])?.is_zero() {
                return Ok(TripleCase::NotCoherent);
            }
        }
    }
    let s = star3(u, v, w)?;
    Ok(match s.as_scalar() {
        Some(c) if c.is_zero() => TripleCase::Case1,
        Some(_) => TripleCase::Case2,
        None => TripleCase::NotCoherent,
    })
}

/// True when the span of the given 3-central elements is a 3-central space:
/// every pair has both star2 obstructions zero and every 3-subset has a
/// scalar star product.
pub fn spans_p_central_space(elements: &[CliffordElement]) -> Result<bool> {
    if let Some(first) = elements.first() {
        if first.presentation().prime() != 3 {
            return Err(Error::Unsupported(format!(
                "spanning test is defined for p = 3, got p = {}",
                first.presentation().prime()
            )));
        }
        for (index, e) in elements.iter().enumerate() {
            first.same_presentation(e)?;
            if !e.is_p_central()? {
                return Err(Error::NotPCentral { index });
            }
        }
    }
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            if !star2(&elements[i], &elements[j])?.is_zero()
                || !star2(&elements[j], &elements[i])?.is_zero()
            {
                return Ok(false);
            }
        }
    }
    for i in 0..elements.len() {
        for j in (i + 1)..elements.len() {
            for k in (j + 1)..elements.len() {
                if !star3(&elements[i], &elements[j], &elements[k])?.is_scalar() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// One engine-verified commutation relation between new generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedRelation {
    pub left: usize,
    pub right: usize,
    /// Exponent k in the checked identity `y_left · y_right = ρ^k · y_right · y_left`.
    pub phase: u64,
}

/// Evidence attached to a generator change: every pairwise relation and
/// every p-th power was recomputed with element arithmetic, not assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeCertificate {
    pub relations: Vec<VerifiedRelation>,
    /// Engine p-th powers of the new generators (the new alpha vector).
    pub powers: Vec<CycloNum>,
}

impl ChangeCertificate {
    pub fn summary(&self) -> CertificateSummary {
        CertificateSummary {
            relations_checked: self.relations.len(),
            powers_checked: self.powers.len(),
        }
    }
}

/// Compact serializable form of a [`ChangeCertificate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateSummary {
    pub relations_checked: usize,
    pub powers_checked: usize,
}

impl CertificateSummary {
    pub fn to_json(&self) -> Value {
        object(vec![
            (
                "relations_checked",
                Value::Number((self.relations_checked as u64).into()),
            ),
            (
                "powers_checked",
                Value::Number((self.powers_checked as u64).into()),
            ),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "certificate";
        Ok(Self {
            relations_checked: as_usize(get(value, "relations_checked", ctx)?, ctx)?,
            powers_checked: as_usize(get(value, "powers_checked", ctx)?, ctx)?,
        })
    }
}

/// Replaces the generating set through an invertible matrix `D`: generator i
/// becomes the monomial `y_i = x_1^{D_{i,1}} … x_n^{D_{i,n}}`.
///
/// The new commutation matrix is `D·C·Dᵗ` and each new power is the
/// engine-computed `y_i^p`. For odd p the engine value must agree with the
/// closed-form product `Π_k alpha_k^{D_{i,k}}` (the reordering phase
/// `ρ^{C_{j,i}·d_j·d_i·p(p-1)/2}` is trivial); that agreement and every
/// pairwise relation are verified by multiplication before returning.
pub fn change_generators(
    pres: &Arc<PCentralPresentation>,
    transform: &FpMatrix,
) -> Result<(Arc<PCentralPresentation>, ChangeCertificate)> {
    let p = pres.prime();
    let n = pres.generator_count();
    if transform.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: p,
            right: transform.modulus(),
        });
    }
    if transform.rows() != n || transform.cols() != n {
        return Err(Error::DimensionMismatch {
            left_rows: n,
            left_cols: n,
            right_rows: transform.rows(),
            right_cols: transform.cols(),
        });
    }
    transform.invert()?; // singular transforms are rejected here

    let commutation = transform
        .mul(pres.commutation())?
        .mul(&transform.transpose())?;

    let generators: Vec<CliffordElement> = (0..n)
        .map(|i| {
            let exps: Vec<u32> = transform.row(i).iter().map(|&d| d as u32).collect();
            CliffordElement::monomial(pres, &exps, CycloNum::one(p)?)
        })
        .collect::<Result<_>>()?;

    let mut powers = Vec::with_capacity(n);
    for (i, y) in generators.iter().enumerate() {
        let engine = y
            .pth_power()?
            .as_scalar()
            .expect("p-th power of a monomial is scalar");
        if p != 2 {
            let mut closed = CycloNum::one(p)?;
            for (k, alpha) in pres.powers().iter().enumerate() {
                closed = closed.mul(&alpha.pow(transform.get_raw(i, k))?)?;
            }
            assert_eq!(
                engine, closed,
                "internal error: residual phase in p-th power of generator {i}"
            );
        }
        powers.push(engine);
    }

    let mut relations = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let phase = commutation.get_raw(i, j);
            let lhs = generators[i].mul(&generators[j])?;
            let rhs = generators[j]
                .mul(&generators[i])?
                .scale(&CycloNum::root_power(p, phase as i64)?)?;
            assert_eq!(
                lhs, rhs,
                "internal error: generator relation ({i},{j}) failed verification"
            );
            relations.push(VerifiedRelation {
                left: i,
                right: j,
                phase,
            });
        }
    }

    let new_pres = PCentralPresentation::new(commutation, powers.clone())?;
    Ok((Arc::new(new_pres), ChangeCertificate { relations, powers }))
}

/// A generator of the commutative part of a decomposition: the monomial with
/// the given exponent vector, together with its engine-computed p-th power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutativeGenerator {
    pub exponents: Vec<u32>,
    pub pth_power: CycloNum,
}

/// The structure of the algebra: `m` p-cyclic symbol algebras
/// `(a_k, b_k)_{p,F}` tensored with a commutative part, reached through the
/// generator change `transform`. The simple images have degree `p^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub transform: FpMatrix,
    pub symbols: Vec<(CycloNum, CycloNum)>,
    pub commutative: Vec<CommutativeGenerator>,
    pub degree: u64,
    pub certificate: CertificateSummary,
}

impl Decomposition {
    pub fn symbol_count(&self) -> usize {
        self.symbols.len()
    }

    /// JSON form:
    /// `{"D": FpMatrix, "m": int, "symbols": [[CycloNum, CycloNum],...],
    ///   "commutative": [{"exponents": [int,...], "pth_power": CycloNum},...],
    ///   "degree": int, "certificate": {...}}`.
    pub fn to_json(&self) -> Value {
        let symbols: Vec<Value> = self
            .symbols
            .iter()
            .map(|(a, b)| Value::Array(vec![a.to_json(), b.to_json()]))
            .collect();
        let commutative: Vec<Value> = self
            .commutative
            .iter()
            .map(|g| {
                object(vec![
                    (
                        "exponents",
                        Value::Array(
                            g.exponents
                                .iter()
                                .map(|&e| Value::Number((e as u64).into()))
                                .collect(),
                        ),
                    ),
                    ("pth_power", g.pth_power.to_json()),
                ])
            })
            .collect();
        object(vec![
            ("D", self.transform.to_json()),
            ("m", Value::Number((self.symbols.len() as u64).into())),
            ("symbols", Value::Array(symbols)),
            ("commutative", Value::Array(commutative)),
            ("degree", Value::Number(self.degree.into())),
            ("certificate", self.certificate.to_json()),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "decomposition";
        let transform = FpMatrix::from_json(get(value, "D", ctx)?)?;
        let p = transform.modulus();
        let m = as_usize(get(value, "m", ctx)?, "block count")?;
        let symbols = as_array(get(value, "symbols", ctx)?, "symbols")?
            .iter()
            .map(|pair| {
                let pair = as_array(pair, "symbol pair")?;
                if pair.len() != 2 {
                    return Err(Error::Format("symbol must be a pair".into()));
                }
                Ok((
                    CycloNum::from_json(p, &pair[0])?,
                    CycloNum::from_json(p, &pair[1])?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        if symbols.len() != m {
            return Err(Error::Format(format!(
                "decomposition lists m = {m} but {} symbols",
                symbols.len()
            )));
        }
        let commutative = as_array(get(value, "commutative", ctx)?, "commutative part")?
            .iter()
            .map(|g| {
                let exponents =
                    as_array(get(g, "exponents", "commutative generator")?, "exponents")?
                        .iter()
                        .map(|e| Ok(as_u64(e, "exponent")? as u32))
                        .collect::<Result<Vec<_>>>()?;
                Ok(CommutativeGenerator {
                    exponents,
                    pth_power: CycloNum::from_json(
                        p,
                        get(g, "pth_power", "commutative generator")?,
                    )?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let degree = as_u64(get(value, "degree", ctx)?, "degree")?;
        let certificate = CertificateSummary::from_json(get(value, "certificate", ctx)?)?;
        Ok(Self {
            transform,
            symbols,
            commutative,
            degree,
            certificate,
        })
    }
}

/// Runs the whole structure pipeline: reduce the commutation matrix to
/// hyperbolic block form, change generators along the resulting transform,
/// pair the first 2m new generators into symbol algebras and list the rest
/// as the commutative part.
pub fn decompose(pres: &Arc<PCentralPresentation>) -> Result<Decomposition> {
    let p = pres.prime();
    if p == 2 {
        return Err(Error::Unsupported(
            "decomposition requires an odd prime; the p = 2 case needs the classical sign bookkeeping"
                .into(),
        ));
    }
    let reduction = pres.commutation().reduce_alternating()?;
    let (new_pres, certificate) = change_generators(pres, &reduction.transform)?;
    assert_eq!(
        new_pres.commutation(),
        &reduction.canonical,
        "internal error: generator change disagrees with congruence reduction"
    );

    let m = reduction.num_blocks;
    let n = pres.generator_count();
    let symbols = (0..m)
        .map(|k| {
            (
                certificate.powers[2 * k].clone(),
                certificate.powers[2 * k + 1].clone(),
            )
        })
        .collect();
    let commutative = (2 * m..n)
        .map(|i| CommutativeGenerator {
            exponents: reduction
                .transform
                .row(i)
                .iter()
                .map(|&d| d as u32)
                .collect(),
            pth_power: certificate.powers[i].clone(),
        })
        .collect();
    let degree = p
        .checked_pow(m as u32)
        .expect("degree p^m fits in u64 at desk scale");
    Ok(Decomposition {
        transform: reduction.transform,
        symbols,
        commutative,
        degree,
        certificate: certificate.summary(),
    })
}

//! The degree-3 symbol algebra as a solution engine for the cubic equation
//! `γY³ = γX₁³ + βX₂³ + γ²β²X₃³` over the Eisenstein integers.
//!
//! Conjugating the generator x by an invertible combination `a·x + b·y`
//! stays inside the 3-central space spanned by x, y and x²y², and cubing the
//! conjugate yields a polynomial identity in a, b, α, β. Two substitutions
//! turn that identity into a parametric family of exact solutions of the
//! cubic equation above. Everything here is verified exactly: the conjugate
//! is recomputed with element arithmetic, the identity is expanded monomial
//! by monomial over Z\[ρ\], and every emitted solution re-checks its defining
//! equation before it leaves the generator.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::clifford::{star3, CliffordElement, PCentralPresentation};
use crate::cyclo::CycloNum;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::json::{get, object};
use crate::linalg::FpMatrix;

/// The algebra generated by 3-central x, y with `y·x = ρ·x·y`, `x³ = α`,
/// `y³ = β`.
#[derive(Debug, Clone)]
pub struct SymbolAlgebraModel {
    pres: Arc<PCentralPresentation>,
}

impl SymbolAlgebraModel {
    pub fn new(alpha: CycloNum, beta: CycloNum) -> Result<Self> {
        if alpha.prime() != 3 || beta.prime() != 3 {
            return Err(Error::Unsupported(
                "the symbol algebra model lives over Q(ρ) with p = 3".into(),
            ));
        }
        let c = FpMatrix::from_rows(3, &[vec![0, -1], vec![1, 0]])?;
        let pres = PCentralPresentation::new(c, vec![alpha, beta])?.into_shared();
        let model = Self { pres };

        // calibration: star3(x, y, x²y²) must come out as −3ραβ
        let x = model.x();
        let y = model.y();
        let z = CliffordElement::monomial(&model.pres, &[2, 2], CycloNum::one(3)?)?;
        let star = star3(&x, &y, &z)?
            .as_scalar()
            .expect("star product of the central triple is scalar");
        let expected = CycloNum::rho(3)?
            .mul(model.alpha())?
            .mul(model.beta())?
            .scale(&num_rational::BigRational::from_integer((-3).into()));
        assert_eq!(
            star, expected,
            "internal error: star-product calibration failed"
        );
        Ok(model)
    }

    pub fn presentation(&self) -> &Arc<PCentralPresentation> {
        &self.pres
    }

    pub fn alpha(&self) -> &CycloNum {
        self.pres.power(0)
    }

    pub fn beta(&self) -> &CycloNum {
        self.pres.power(1)
    }

    pub fn x(&self) -> CliffordElement {
        CliffordElement::generator(&self.pres, 0).expect("two generators")
    }

    pub fn y(&self) -> CliffordElement {
        CliffordElement::generator(&self.pres, 1).expect("two generators")
    }

    /// Conjugates x by `a·x + b·y` and cubes the result.
    ///
    /// Returns the conjugate z (an element supported on x, y and x²y²), its
    /// cube (always the scalar α), and the three coefficients of `s·z` with
    /// `s = a³α + b³β` — the displayed closed forms `a³α + ρb³β`,
    /// `(1−ρ⁻¹)ba²α` and `(1−ρ)ab²` up to the engine recomputing them.
    pub fn conjugate_and_cube(&self, a: &CycloNum, b: &CycloNum) -> Result<Conjugation> {
        let v = self.x().scale(a)?.add(&self.y().scale(b)?)?;
        let s = v
            .pth_power()?
            .as_scalar()
            .expect("cube of an element of the coherent plane is scalar");
        let closed = a
            .pow(3)?
            .mul(self.alpha())?
            .add(&b.pow(3)?.mul(self.beta())?)?;
        assert_eq!(s, closed, "internal error: (ax+by)³ must equal a³α + b³β");
        if s.is_zero() {
            return Err(Error::DegenerateParameters);
        }

        // v⁻¹ = v²/s, so s·z = v·x·v²
        let cleared = v.mul(&self.x())?.mul(&v.mul(&v)?)?;
        let element = cleared.scale(&s.inv()?)?;
        let cube = element
            .pth_power()?
            .as_scalar()
            .expect("cube of the conjugate is scalar");

        let supported = [[1u32, 0], [0, 1], [2, 2]];
        for (exps, _) in cleared.terms() {
            assert!(
                supported.iter().any(|m| m == exps),
                "internal error: conjugate leaves the x, y, x²y² span"
            );
        }
        let coefficients = [
            cleared.coefficient(&[1, 0]),
            cleared.coefficient(&[0, 1]),
            cleared.coefficient(&[2, 2]),
        ];
        Ok(Conjugation {
            element,
            cube,
            coefficients,
        })
    }
}

/// Result of [`SymbolAlgebraModel::conjugate_and_cube`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conjugation {
    /// `z = (ax+by) · x · (ax+by)⁻¹`.
    pub element: CliffordElement,
    /// `z³`; always equals α.
    pub cube: CycloNum,
    /// Coefficients of `s·z` on x, y, x²y² with `s = a³α + b³β`.
    pub coefficients: [CycloNum; 3],
}

/// A formal polynomial in the commuting indeterminates a, b, α, β with
/// coefficients in Z\[ρ\]; exponent vectors index in that order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct EisPoly {
    terms: BTreeMap<[u8; 4], EisensteinInt>,
}

impl EisPoly {
    fn monomial(exps: [u8; 4], coeff: EisensteinInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Self { terms }
    }

    fn insert(&mut self, exps: [u8; 4], coeff: EisensteinInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&coeff);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(*e, c.clone());
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.insert(exps, ca.mul(cb));
            }
        }
        out
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::monomial([0, 0, 0, 0], EisensteinInt::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Per-monomial outcome of the symbolic expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialComparison {
    /// Exponents of a, b, α, β.
    pub exponents: [u8; 4],
    pub lhs: EisensteinInt,
    pub rhs: EisensteinInt,
}

impl MonomialComparison {
    pub fn matches(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Outcome of [`verify_core_identity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreIdentityReport {
    pub comparisons: Vec<MonomialComparison>,
}

impl CoreIdentityReport {
    pub fn all_match(&self) -> bool {
        self.comparisons.iter().all(MonomialComparison::matches)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &MonomialComparison> {
        self.comparisons.iter().filter(|c| !c.matches())
    }
}

impl std::fmt::Display for CoreIdentityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.comparisons {
            let [a, b, alpha, beta] = c.exponents;
            writeln!(
                f,
                "a^{a} b^{b} alpha^{alpha} beta^{beta}: lhs = {}, rhs = {} [{}]",
                c.lhs,
                c.rhs,
                if c.matches() { "ok" } else { "MISMATCH" }
            )?;
        }
        write!(
            f,
            "{} monomials compared, {}",
            self.comparisons.len(),
            if self.all_match() {
                "all agree".to_string()
            } else {
                format!("{} mismatches", self.mismatches().count())
            }
        )
    }
}

/// Expands both sides of
/// `α(a³α + b³β)³ = α(a³α + ρb³β)³ + 3(1−ρ)β(a²bα)³ + 3(1−ρ⁻¹)α²β²(ab²)³`
/// as formal polynomials over Z\[ρ\] and compares them monomial by monomial.
pub fn verify_core_identity() -> CoreIdentityReport {
    let one = EisensteinInt::one();
    let rho = EisensteinInt::rho();
    let three = EisensteinInt::new(3, 0);
    let three_one_minus_rho = three.mul(&one.sub(&rho));
    let three_one_minus_rho_inv = three.mul(&one.sub(&EisensteinInt::rho_squared()));

    let alpha = EisPoly::monomial([0, 0, 1, 0], one.clone());
    // a³α + b³β
    let base = EisPoly::monomial([3, 0, 1, 0], one.clone())
        .add(&EisPoly::monomial([0, 3, 0, 1], one.clone()));
    // a³α + ρb³β
    let twisted =
        EisPoly::monomial([3, 0, 1, 0], one.clone()).add(&EisPoly::monomial([0, 3, 0, 1], rho));

    let lhs = alpha.mul(&base.pow(3));
    let rhs = alpha
        .mul(&twisted.pow(3))
        // 3(1−ρ)·β·(a²bα)³
        .add(&EisPoly::monomial([6, 3, 3, 1], three_one_minus_rho))
        // 3(1−ρ⁻¹)·α²β²·(ab²)³
        .add(&EisPoly::monomial([3, 6, 2, 2], three_one_minus_rho_inv));

    let mut keys: Vec<[u8; 4]> = lhs.terms.keys().chain(rhs.terms.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let comparisons = keys
        .into_iter()
        .map(|exps| MonomialComparison {
            exponents: exps,
            lhs: lhs
                .terms
                .get(&exps)
                .cloned()
                .unwrap_or_else(EisensteinInt::zero),
            rhs: rhs
                .terms
                .get(&exps)
                .cloned()
                .unwrap_or_else(EisensteinInt::zero),
        })
        .collect();
    CoreIdentityReport { comparisons }
}

/// Evaluates both sides of the core identity numerically at a point,
/// without any polynomial machinery; the independent route used to
/// cross-check the symbolic expansion.
pub fn core_identity_sides_at(
    a: &EisensteinInt,
    b: &EisensteinInt,
    alpha: &EisensteinInt,
    beta: &EisensteinInt,
) -> (EisensteinInt, EisensteinInt) {
    let one = EisensteinInt::one();
    let rho = EisensteinInt::rho();
    let three = EisensteinInt::new(3, 0);
    let a3alpha = a.pow(3).mul(alpha);
    let b3beta = b.pow(3).mul(beta);
    let lhs = alpha.mul(&a3alpha.add(&b3beta).pow(3));
    let rhs = alpha
        .mul(&a3alpha.add(&rho.mul(&b3beta)).pow(3))
        .add(
            &three
                .mul(&one.sub(&rho))
                .mul(beta)
                .mul(&a.pow(2).mul(b).mul(alpha).pow(3)),
        )
        .add(
            &three
                .mul(&one.sub(&EisensteinInt::rho_squared()))
                .mul(&alpha.pow(2))
                .mul(&beta.pow(2))
                .mul(&a.mul(&b.pow(2)).pow(3)),
        );
    (lhs, rhs)
}

/// A verified parametric solution of `γY³ = γX₁³ + βX₂³ + γ²β²X₃³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicSolution {
    pub gamma: EisensteinInt,
    pub beta: EisensteinInt,
    pub a: EisensteinInt,
    pub c: EisensteinInt,
    pub y: EisensteinInt,
    pub x1: EisensteinInt,
    pub x2: EisensteinInt,
    pub x3: EisensteinInt,
    /// True when `a = 0` or `c = 0`; the identity still holds but some
    /// coordinates vanish.
    pub degenerate: bool,
}

impl CubicSolution {
    /// Both sides of the defining equation.
    pub fn sides(&self) -> (EisensteinInt, EisensteinInt) {
        let lhs = self.gamma.mul(&self.y.pow(3));
        let rhs = self
            .gamma
            .mul(&self.x1.pow(3))
            .add(&self.beta.mul(&self.x2.pow(3)))
            .add(
                &self
                    .gamma
                    .pow(2)
                    .mul(&self.beta.pow(2))
                    .mul(&self.x3.pow(3)),
            );
        (lhs, rhs)
    }

    /// JSONL form, one object per line, keys sorted:
    /// `{"X1": Eis, …, "Y": Eis, "a": Eis, "beta": Eis, "c": Eis,
    ///   "degenerate": bool, "format_version": 1, "gamma": Eis, "verified": true}`.
    pub fn to_json(&self) -> Value {
        object(vec![
            ("format_version", Value::Number(1.into())),
            ("gamma", self.gamma.to_json()),
            ("beta", self.beta.to_json()),
            ("a", self.a.to_json()),
            ("c", self.c.to_json()),
            ("Y", self.y.to_json()),
            ("X1", self.x1.to_json()),
            ("X2", self.x2.to_json()),
            ("X3", self.x3.to_json()),
            ("degenerate", Value::Bool(self.degenerate)),
            ("verified", Value::Bool(true)),
        ])
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let ctx = "cubic solution";
        let field =
            |key| -> Result<EisensteinInt> { EisensteinInt::from_json(get(value, key, ctx)?) };
        Ok(Self {
            gamma: field("gamma")?,
            beta: field("beta")?,
            a: field("a")?,
            c: field("c")?,
            y: field("Y")?,
            x1: field("X1")?,
            x2: field("X2")?,
            x3: field("X3")?,
            degenerate: get(value, "degenerate", ctx)?
                .as_bool()
                .ok_or_else(|| Error::Format("cubic solution: degenerate must be a bool".into()))?,
        })
    }
}

/// Exact re-check of the defining equation.
pub fn verify_solution(solution: &CubicSolution) -> bool {
    let (lhs, rhs) = solution.sides();
    lhs == rhs
}

/// The final parametrization: `Y = a³γ − ρβc³`, `X₁ = a³γ − ρ²βc³`,
/// `X₂ = γ(1−ρ)a²c`, `X₃ = (1−ρ)ac²`. The tuple is verified exactly before
/// it is returned; a failure would be an implementation bug and faults hard.
pub fn gen_solution(
    gamma: &EisensteinInt,
    beta: &EisensteinInt,
    a: &EisensteinInt,
    c: &EisensteinInt,
) -> CubicSolution {
    let rho = EisensteinInt::rho();
    let rho2 = EisensteinInt::rho_squared();
    let one_minus_rho = EisensteinInt::one().sub(&rho);
    let a3gamma = a.pow(3).mul(gamma);
    let beta_c3 = beta.mul(&c.pow(3));
    let solution = CubicSolution {
        gamma: gamma.clone(),
        beta: beta.clone(),
        a: a.clone(),
        c: c.clone(),
        y: a3gamma.sub(&rho.mul(&beta_c3)),
        x1: a3gamma.sub(&rho2.mul(&beta_c3)),
        x2: gamma.mul(&one_minus_rho).mul(&a.pow(2)).mul(c),
        x3: one_minus_rho.mul(a).mul(&c.pow(2)),
        degenerate: a.is_zero() || c.is_zero(),
    };
    assert!(
        verify_solution(&solution),
        "internal error: parametric solution failed its defining identity"
    );
    solution
}

/// The pre-substitution family solving
/// `αY³ = αX₁³ + 3(1−ρ)βX₂³ + 3(1−ρ⁻¹)α²β²X₃³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCubicSolution {
    pub alpha: EisensteinInt,
    pub beta: EisensteinInt,
    pub a: EisensteinInt,
    pub b: EisensteinInt,
    pub y: EisensteinInt,
    pub x1: EisensteinInt,
    pub x2: EisensteinInt,
    pub x3: EisensteinInt,
}

impl RawCubicSolution {
    pub fn sides(&self) -> (EisensteinInt, EisensteinInt) {
        let one = EisensteinInt::one();
        let rho = EisensteinInt::rho();
        let three = EisensteinInt::new(3, 0);
        let lhs = self.alpha.mul(&self.y.pow(3));
        let rhs = self
            .alpha
            .mul(&self.x1.pow(3))
            .add(
                &three
                    .mul(&one.sub(&rho))
                    .mul(&self.beta)
                    .mul(&self.x2.pow(3)),
            )
            .add(
                &three
                    .mul(&one.sub(&EisensteinInt::rho_squared()))
                    .mul(&self.alpha.pow(2))
                    .mul(&self.beta.pow(2))
                    .mul(&self.x3.pow(3)),
            );
        (lhs, rhs)
    }

    pub fn verify(&self) -> bool {
        let (lhs, rhs) = self.sides();
        lhs == rhs
    }
}

/// `Y = a³α + b³β`, `X₁ = a³α + ρb³β`, `X₂ = a²bα`, `X₃ = ab²`; verified
/// against the raw equation form before returning.
pub fn gen_solution_raw(
    alpha: &EisensteinInt,
    beta: &EisensteinInt,
    a: &EisensteinInt,
    b: &EisensteinInt,
) -> RawCubicSolution {
    let rho = EisensteinInt::rho();
    let a3alpha = a.pow(3).mul(alpha);
    let b3beta = b.pow(3).mul(beta);
    let solution = RawCubicSolution {
        alpha: alpha.clone(),
        beta: beta.clone(),
        a: a.clone(),
        b: b.clone(),
        y: a3alpha.add(&b3beta),
        x1: a3alpha.add(&rho.mul(&b3beta)),
        x2: a.pow(2).mul(b).mul(alpha),
        x3: a.mul(&b.pow(2)),
    };
    assert!(
        solution.verify(),
        "internal error: raw parametric solution failed its defining identity"
    );
    solution
}

/// Emits [`gen_solution`] for every pair `(a, c)` with both norms at most
/// `bound`, in lexicographic `(a.a, a.b, c.a, c.b)` order.
pub fn enumerate_solutions(
    gamma: &EisensteinInt,
    beta: &EisensteinInt,
    bound: u64,
) -> impl Iterator<Item = CubicSolution> {
    let points = EisensteinInt::points_with_norm_at_most(bound);
    let gamma = gamma.clone();
    let beta = beta.clone();
    let inner = points.clone();
    points.into_iter().flat_map(move |a| {
        let gamma = gamma.clone();
        let beta = beta.clone();
        inner
            .clone()
            .into_iter()
            .map(move |c| gen_solution(&gamma, &beta, &a, &c))
    })
}

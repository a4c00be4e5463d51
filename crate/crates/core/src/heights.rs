//! Donaldson-Futaki invariants and geometric heights of polarized families
//! over a curve, as exact formulas in user-supplied intersection numbers.
//!
//! The family itself is never modeled; callers provide the handful of
//! intersection numbers the formulas consume. For a family `(X, D; L) -> B`
//! of `n`-folds with boundary `D = sum a_i D_i`:
//!
//! - slope `mu = (L^{n-1}.(K_X + D)) / L^n` on the fiber,
//! - `DF = (n+1) L^n.(K_{X/B} + D) - n L^{n+1} mu`,
//! - the geometric height of the embedding by `N + 1` sections with
//!   determinant degree `degdet`:
//!
//! ```text
//! h = (N+1) L^{n+1} - (n+1) (L^n on fiber) degdet
//!     + c_n sum_i a_i [ (N+1) (L|_{D_i})^n - n (fiber deg of L|_{D_i}) degdet ],
//!     c_n = (n+1) / (2n) .
//! ```
//!
//! The expansion uses that a class pulled back from the one-dimensional base
//! squares to zero. Heights are reported un-normalized; only signs and
//! ratios are ever compared, and the overall normalizing constant of the
//! Chow line drops out of every comparison.
//!
//! For curve fibrations (`n = 1`) the degree of the pushforward determinant
//! is the Grothendieck-Riemann-Roch quadratic
//! `D(k) = (k^2/2) L^2 - (k/2) L.omega_{X/B} + deg lambda`, and the height
//! of the `k`-th power polarization is an exact cubic whose `k^3`
//! coefficient vanishes and whose `k^2` coefficient is
//! `(deg X / 2) * DF` - the leading-term identity checked by
//! [`leading_term_check`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum HeightError {
    #[error("fiber degree L^n must be positive, got {0}")]
    NonpositiveFiberDegree(Rational),
    #[error("fiber dimension n must be at least 1")]
    ZeroDimension,
    #[error("boundary coefficient {0} is outside (0, 1]")]
    BadBoundaryCoefficient(Rational),
    #[error("operation requires a curve fibration (n = 1), got n = {0}")]
    NotACurveFamily(u32),
    #[error("pushforward polynomial has degree {0}, expected at most 2")]
    PushforwardDegree(usize),
}

/// One boundary divisor `a_i D_i`: coefficient, `(L|_{D_i})^n` on the total
/// space, and the fiber degree of `L|_{D_i}` (for a family of pointed
/// curves, `D_i` is a multisection and the fiber degree counts its points
/// in a fiber).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryTerm {
    pub a: Rational,
    #[serde(rename = "LDi_n")]
    pub ldi_n: Rational,
    pub fiber_di: Rational,
}

/// Intersection numbers of a polarized family `(X, D; L) -> B` of
/// `n`-folds over a curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyIntersections {
    /// Fiber dimension.
    pub n: u32,
    /// `L^{n+1}` on the total space.
    #[serde(rename = "Lnp1")]
    pub lnp1: Rational,
    /// `L^n . (K_{X/B} + D)` on the total space.
    #[serde(rename = "LnK")]
    pub lnk: Rational,
    /// `L^n` on a fiber (the degree of the fiber).
    #[serde(rename = "fiber_Ln")]
    pub fiber_ln: Rational,
    /// `L^{n-1} . (K_X + D)` on a fiber.
    #[serde(rename = "fiber_Ln1K")]
    pub fiber_ln1k: Rational,
    #[serde(default)]
    pub boundary: Vec<BoundaryTerm>,
}

impl FamilyIntersections {
    pub fn validate(&self) -> Result<(), HeightError> {
        if self.n == 0 {
            return Err(HeightError::ZeroDimension);
        }
        if !self.fiber_ln.is_positive() {
            return Err(HeightError::NonpositiveFiberDegree(self.fiber_ln.clone()));
        }
        for b in &self.boundary {
            if !b.a.is_positive() || b.a > Rational::one() {
                return Err(HeightError::BadBoundaryCoefficient(b.a.clone()));
            }
        }
        Ok(())
    }

    /// `c_n = (n + 1) / (2 n)`.
    pub fn cn(&self) -> Rational {
        Rational::new(i64::from(self.n) + 1, 2 * i64::from(self.n))
    }
}

/// Fiber slope `mu = fiber_Ln1K / fiber_Ln`.
pub fn mu_slope(f: &FamilyIntersections) -> Result<Rational, HeightError> {
    f.validate()?;
    Ok(&f.fiber_ln1k / &f.fiber_ln)
}

/// `DF = (n+1) L^n.(K_{X/B} + D) - n L^{n+1} mu`, exactly.
pub fn df_invariant(f: &FamilyIntersections) -> Result<Rational, HeightError> {
    let mu = mu_slope(f)?;
    let n = Rational::from(f.n);
    let np1 = Rational::from(i64::from(f.n) + 1);
    Ok(np1 * &f.lnk - n * &f.lnp1 * mu)
}

/// Geometric height of the family embedded by `N + 1` sections whose
/// pushforward determinant has degree `degdet`.
pub fn geometric_height(
    f: &FamilyIntersections,
    big_n: u64,
    degdet: &Rational,
) -> Result<Rational, HeightError> {
    f.validate()?;
    let np1 = Rational::from(big_n + 1);
    let n = Rational::from(f.n);
    let dim_np1 = Rational::from(i64::from(f.n) + 1);
    let mut h = &np1 * &f.lnp1 - dim_np1 * &f.fiber_ln * degdet;
    let cn = f.cn();
    for b in &f.boundary {
        let term = &np1 * &b.ldi_n - &n * &b.fiber_di * degdet;
        h += &cn * &b.a * term;
    }
    Ok(h)
}

/// Degree polynomial of the pushforward determinant for a curve fibration:
/// `D(k) = deg_lambda - (Lomega/2) k + (L2/2) k^2` by
/// Grothendieck-Riemann-Roch, where `Lomega = L . omega_{X/B}` (boundary
/// excluded).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardPolynomial(Poly);

impl PushforwardPolynomial {
    /// Wraps explicit coefficients `(constant, linear, quadratic)`;
    /// rejects higher degree.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self, HeightError> {
        let p = Poly::from_coeffs(coeffs);
        match p.degree() {
            Some(d) if d > 2 => Err(HeightError::PushforwardDegree(d)),
            _ => Ok(PushforwardPolynomial(p)),
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn eval(&self, k: &Rational) -> Rational {
        self.0.eval(k)
    }
}

pub fn grr_pushforward(
    l2: &Rational,
    lomega: &Rational,
    deg_lambda: &Rational,
) -> PushforwardPolynomial {
    let half = Rational::new(1, 2);
    PushforwardPolynomial(Poly::from_coeffs(vec![
        deg_lambda.clone(),
        -(&half * lomega),
        &half * l2,
    ]))
}

/// Exact height polynomial `h(k)` of the `k`-th power polarization of a
/// curve family of genus `g`, with `N_k + 1` the Hilbert polynomial
/// `fiber_Ln * k + (1 - g)` (vanishing higher cohomology assumed) and
/// `D(k)` the pushforward-determinant degree:
///
/// ```text
/// h(k) = (N_k + 1) k^2 L^2 - 2 (k fiber_Ln) D(k)
///        + sum_i a_i [ (N_k + 1) k (L . D_i) - fiber_di D(k) ] .
/// ```
pub fn height_polynomial(
    f: &FamilyIntersections,
    genus: i64,
    degdet: &PushforwardPolynomial,
) -> Result<Poly, HeightError> {
    f.validate()?;
    if f.n != 1 {
        return Err(HeightError::NotACurveFamily(f.n));
    }
    let k = Poly::monomial(Rational::one(), 1);
    let hilbert = Poly::from_coeffs(vec![Rational::from(1 - genus), f.fiber_ln.clone()]);
    let d = degdet.poly();

    // (N_k + 1) k^2 L^2
    let mut h = hilbert
        .mul(&k)
        .mul(&k)
        .scale(&f.lnp1);
    // - 2 (k fiber_Ln) D(k)
    h = h.sub(&k.scale(&(Rational::from(2) * &f.fiber_ln)).mul(d));
    // boundary, with c_1 = 1
    for b in &f.boundary {
        let term = hilbert.mul(&k).scale(&b.ldi_n).sub(&d.scale(&b.fiber_di));
        h = h.add(&term.scale(&b.a));
    }
    Ok(h)
}

/// Outcome of the leading-term identity check: the height polynomial built
/// with a Grothendieck-Riemann-Roch pushforward must have zero `k^3`
/// coefficient and `k^2` coefficient `(fiber_Ln / 2) * DF`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeadingTermCheck {
    pub cubic_coefficient: Rational,
    pub quadratic_coefficient: Rational,
    pub expected_quadratic: Rational,
    pub holds: bool,
}

pub fn leading_term_check(
    f: &FamilyIntersections,
    genus: i64,
    degdet: &PushforwardPolynomial,
) -> Result<LeadingTermCheck, HeightError> {
    let h = height_polynomial(f, genus, degdet)?;
    let cubic = h.coeff(3);
    let quadratic = h.coeff(2);
    let expected = Rational::new(1, 2) * &f.fiber_ln * df_invariant(f)?;
    let holds = cubic.is_zero() && quadratic == expected;
    Ok(LeadingTermCheck {
        cubic_coefficient: cubic,
        quadratic_coefficient: quadratic,
        expected_quadratic: expected,
        holds,
    })
}

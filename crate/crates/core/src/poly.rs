//! Univariate polynomials with exact rational coefficients.
//!
//! Small dense representation, enough for the two places polynomials occur:
//! coordinate functions of a family section over an affine chart of a
//! rational base curve, and height polynomials in the twist power `k`.
//! Provides exact gcd, square-free parts, rational root extraction, and a
//! pairwise-coprime refinement used to split a section's special fibers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Polynomial in one variable, coefficients ascending by degree, no trailing
/// zeros. The zero polynomial is the empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c0 + c1 x + c2 x^2 + ...`; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The monomial `c x^n`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^n` (zero beyond the degree).
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from(i))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics if `div` is zero.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        let d = div.degree().expect("division by zero polynomial");
        let lead_inv = div.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let t = &factor * c;
                    rem[k + i] = &rem[k + i] - &t;
                }
                quo[k] = factor;
            }
            rem.pop();
        }
        (Poly::from_coeffs(quo), Poly::from_coeffs(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, div: &Poly) -> Poly {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Leading coefficient scaled to one. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic square-free part `p / gcd(p, p')`.
    pub fn square_free_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.monic()
        } else {
            self.div_exact(&g).monic()
        }
    }

    /// All rational roots, ascending, via the rational root theorem applied
    /// to the primitive integer form. Multiplicities are not reported.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        // clear denominators and content
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * &Rational::from(den.clone());
                scaled.to_integer().expect("cleared denominator")
            })
            .collect();
        // strip x^v factor
        let v = ints
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        let mut roots = Vec::new();
        if v > 0 {
            roots.push(Rational::zero());
        }
        let body = &ints[v..];
        if body.len() > 1 {
            let a0 = body[0].abs();
            let ad = body.last().unwrap().abs();
            let check = |cand: &Rational, out: &mut Vec<Rational>| {
                if self.eval(cand).is_zero() && !out.contains(cand) {
                    out.push(cand.clone());
                }
            };
            for p in divisors(&a0) {
                for q in divisors(&ad) {
                    let cand = Rational::from_big(p.clone(), q.clone()).unwrap();
                    check(&cand, &mut roots);
                    check(&-&cand, &mut roots);
                }
            }
        }
        roots.sort();
        roots
    }

    /// Renders with the given variable name, e.g. `2k^2 - 5/2k`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match i {
                0 => format!("{mag}"),
                1 if mag == Rational::one() => var.to_string(),
                1 => format!("{mag}*{var}"),
                _ if mag == Rational::one() => format!("{var}^{i}"),
                _ => format!("{mag}*{var}^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                });
            } else {
                parts.push(format!("{} {term}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl FromStr for Poly {
    type Err = crate::rational::ParseRationalError;

    /// Parses a comma-separated ascending coefficient list, `"c0,c1,c2"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Poly::zero());
        }
        let coeffs = s
            .split(',')
            .map(|t| t.parse())
            .collect::<Result<Vec<Rational>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // positive divisors by trial division; fine at desk scale
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Refines a family of square-free monic polynomials into a pairwise-coprime
/// set such that each input is, up to a constant, the product of exactly the
/// basis elements dividing it. Constants are dropped.
pub fn coprime_refinement(inputs: &[Poly]) -> Vec<Poly> {
    let mut set: Vec<Poly> = inputs
        .iter()
        .filter(|p| p.degree().map_or(false, |d| d >= 1))
        .map(|p| p.monic())
        .collect();
    loop {
        let mut changed = false;
        'scan: for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                let g = set[i].gcd(&set[j]);
                if g.degree().map_or(false, |d| d >= 1) {
                    let a = set.swap_remove(j);
                    let b = set.swap_remove(i);
                    for piece in [b.div_exact(&g), a.div_exact(&g), g] {
                        if piece.degree().map_or(false, |d| d >= 1) {
                            set.push(piece.monic());
                        }
                    }
                    changed = true;
                    break 'scan;
                }
            }
        }
        if !changed {
            break;
        }
    }
    set.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    set.dedup();
    set
}

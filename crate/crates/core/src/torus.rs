//! Hilbert-Mumford weights and semistability for diagonal torus actions,
//! and heights of sections of split projective bundles over a rational
//! curve.
//!
//! A diagonal action on projective space is a list of characters
//! `chi_i in Z^t`, one per homogeneous coordinate. Characters are
//! normalized on construction so that they sum to zero (the action factors
//! through the special linear group; the lattice is rescaled by a reported
//! integer factor to keep entries integral, which changes no verdict).
//!
//! Sign convention: `w_z(lambda) = -min { <lambda, chi_i> : z_i != 0 }`, so
//! a point is semistable iff `w_z(lambda) >= 0` for every one-parameter
//! subgroup `lambda`, iff the origin lies in the convex hull of the support
//! characters. Hull membership is decided by exact rational linear
//! feasibility; on failure the Farkas certificate is returned as an integer
//! destabilizing `lambda`.
//!
//! A family section over one affine chart of a rational base is a tuple of
//! coordinate polynomials `f_i(u)` twisted by a cocycle `gamma in Z^t`
//! giving line-bundle degrees `e_i = <gamma, chi_i>`; the declared total
//! degree `c` bounds `deg f_i <= c - e_i`. Its height is
//! `(N+1) c' - sum e_i` after removing the common polynomial factor
//! (base locus), where `N + 1` is the number of coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{coprime_refinement, Poly};
use crate::rational::Rational;
use crate::simplex::{feasible_nonnegative, Feasibility};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("need at least one character")]
    NoCharacters,
    #[error("character {index} has {got} entries, expected rank {expected}")]
    CharacterLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("one-parameter subgroup has {got} entries, expected rank {expected}")]
    LambdaLength { expected: usize, got: usize },
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("support index {0} out of range")]
    SupportIndex(usize),
    #[error("support must be nonempty")]
    EmptySupport,
    #[error("cocycle has {got} entries, expected rank {expected}")]
    CocycleLength { expected: usize, got: usize },
    #[error("section has {got} coordinate polynomials, expected {expected}")]
    SectionLength { expected: usize, got: usize },
    #[error("coordinate {index} has degree {got}, exceeding c - e_i = {cap}")]
    DegreeCap { index: usize, got: usize, cap: i64 },
    #[error("section must have a nonzero coordinate")]
    ZeroSection,
    #[error("normalized character entries overflow i64")]
    Overflow,
}

/// A diagonal action: `characters[i]` is the weight vector of the `i`-th
/// homogeneous coordinate. Normalized so the characters sum to zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusProblem {
    rank: usize,
    characters: Vec<Vec<i64>>,
    /// Lattice rescaling applied during normalization (1 when the input
    /// already summed to zero).
    scale: i64,
}

impl TorusProblem {
    /// Normalizes raw characters: translates by the mean, rescaled by the
    /// smallest integer factor keeping entries integral.
    pub fn new(raw: Vec<Vec<i64>>) -> Result<Self, TorusError> {
        if raw.is_empty() {
            return Err(TorusError::NoCharacters);
        }
        let rank = raw[0].len();
        if rank == 0 {
            return Err(TorusError::ZeroRank);
        }
        for (index, chi) in raw.iter().enumerate() {
            if chi.len() != rank {
                return Err(TorusError::CharacterLength {
                    index,
                    expected: rank,
                    got: chi.len(),
                });
            }
        }
        let count = raw.len() as i64;
        let mut total = vec![0i128; rank];
        for chi in &raw {
            for (t, &x) in total.iter_mut().zip(chi) {
                *t += i128::from(x);
            }
        }
        let mut content: i128 = 0;
        for &t in &total {
            content = content.gcd(&t.abs());
        }
        let scale = i128::from(count) / i128::from(count).gcd(&content);
        let mut characters = Vec::with_capacity(raw.len());
        for chi in &raw {
            let mut row = Vec::with_capacity(rank);
            for (j, &x) in chi.iter().enumerate() {
                let v = scale * i128::from(x) - scale * total[j] / i128::from(count);
                row.push(i64::try_from(v).map_err(|_| TorusError::Overflow)?);
            }
            characters.push(row);
        }
        debug_assert!((0..rank).all(|j| characters.iter().map(|c| c[j]).sum::<i64>() == 0));
        Ok(TorusProblem {
            rank,
            characters,
            scale: i64::try_from(scale).map_err(|_| TorusError::Overflow)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn characters(&self) -> &[Vec<i64>] {
        &self.characters
    }

    /// Number of homogeneous coordinates, `N + 1`.
    pub fn coordinate_count(&self) -> usize {
        self.characters.len()
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    fn check_lambda(&self, lambda: &[i64]) -> Result<(), TorusError> {
        if lambda.len() != self.rank {
            return Err(TorusError::LambdaLength {
                expected: self.rank,
                got: lambda.len(),
            });
        }
        Ok(())
    }

    fn check_support(&self, support: &[usize]) -> Result<(), TorusError> {
        if support.is_empty() {
            return Err(TorusError::EmptySupport);
        }
        for &i in support {
            if i >= self.characters.len() {
                return Err(TorusError::SupportIndex(i));
            }
        }
        Ok(())
    }
}

/// A point of the projective space the torus acts on; only the support
/// (set of nonzero coordinates) matters for weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectivePoint {
    coordinates: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coordinates: Vec<Rational>) -> Result<Self, TorusError> {
        if coordinates.iter().all(Rational::is_zero) {
            return Err(TorusError::ZeroPoint);
        }
        Ok(ProjectivePoint { coordinates })
    }

    pub fn support(&self) -> Vec<usize> {
        self.coordinates
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.coordinates
    }
}

fn pairing(lambda: &[i64], chi: &[i64]) -> i64 {
    let dot: i128 = lambda
        .iter()
        .zip(chi)
        .map(|(&l, &c)| i128::from(l) * i128::from(c))
        .sum();
    i64::try_from(dot).expect("pairing fits i64")
}

/// `w_z(lambda) = -min over the support of <lambda, chi_i>`.
pub fn one_ps_weight(
    p: &TorusProblem,
    z: &ProjectivePoint,
    lambda: &[i64],
) -> Result<i64, TorusError> {
    if z.coordinates.len() != p.coordinate_count() {
        return Err(TorusError::PointLength {
            expected: p.coordinate_count(),
            got: z.coordinates.len(),
        });
    }
    weight_on_support(p, &z.support(), lambda)
}

/// Same weight computed from an explicit support set.
pub fn weight_on_support(
    p: &TorusProblem,
    support: &[usize],
    lambda: &[i64],
) -> Result<i64, TorusError> {
    p.check_lambda(lambda)?;
    p.check_support(support)?;
    let min = support
        .iter()
        .map(|&i| pairing(lambda, &p.characters[i]))
        .min()
        .expect("support nonempty");
    Ok(-min)
}

/// Verdict of the semistability test, with a destabilizing one-parameter
/// subgroup when unstable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemistabilityVerdict {
    pub semistable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub destabilizing: Option<Vec<i64>>,
}

/// Semistability of `z`: the origin lies in the convex hull of the support
/// characters. Decided by exact linear feasibility; when it fails, the
/// Farkas certificate is scaled to a primitive integer `lambda` with
/// `w_z(lambda) < 0`.
pub fn is_semistable(p: &TorusProblem, z: &ProjectivePoint) -> Result<SemistabilityVerdict, TorusError> {
    if z.coordinates.len() != p.coordinate_count() {
        return Err(TorusError::PointLength {
            expected: p.coordinate_count(),
            got: z.coordinates.len(),
        });
    }
    semistable_on_support(p, &z.support())
}

pub fn semistable_on_support(
    p: &TorusProblem,
    support: &[usize],
) -> Result<SemistabilityVerdict, TorusError> {
    p.check_support(support)?;
    // rows: one per lattice coordinate, plus the affine row; columns: one
    // per support character. Solve sum mu_i chi_i = 0, sum mu_i = 1,
    // mu >= 0.
    let mut matrix = Vec::with_capacity(p.rank + 1);
    for j in 0..p.rank {
        matrix.push(
            support
                .iter()
                .map(|&i| Rational::from(p.characters[i][j]))
                .collect::<Vec<_>>(),
        );
    }
    matrix.push(vec![Rational::one(); support.len()]);
    let mut rhs = vec![Rational::zero(); p.rank];
    rhs.push(Rational::one());
    match feasible_nonnegative(&matrix, &rhs) {
        Feasibility::Feasible(_) => Ok(SemistabilityVerdict {
            semistable: true,
            destabilizing: None,
        }),
        Feasibility::Infeasible(y) => {
            // y = (mu_1..mu_t, y0) with <y, chi_i> + y0 <= 0 and y0 > 0, so
            // lambda = -y separates the support from the origin.
            let lambda = integerize(&y[..p.rank].iter().map(|v| -v).collect::<Vec<_>>())
                .ok_or(TorusError::Overflow)?;
            debug_assert!(weight_on_support(p, support, &lambda)? < 0);
            Ok(SemistabilityVerdict {
                semistable: false,
                destabilizing: Some(lambda),
            })
        }
    }
}

/// Scales a rational vector to the primitive integer vector on the same
/// ray. `None` if an entry overflows i64 (out of scope at desk scale).
fn integerize(v: &[Rational]) -> Option<Vec<i64>> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| {
            (x * &Rational::from(lcm.clone()))
                .to_integer()
                .expect("denominator cleared")
        })
        .collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if !content.is_zero() && !content.is_one() {
        for x in &mut ints {
            *x /= &content;
        }
    }
    ints.into_iter()
        .map(|x| x.to_i64())
        .collect::<Option<Vec<i64>>>()
}

/// A section of the associated projective bundle over one affine chart of a
/// rational base curve: coordinate polynomials `f_i(u)` with twist degrees
/// `e_i = <cocycle, chi_i>` and declared total degree `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySection {
    pub cocycle: Vec<i64>,
    pub coordinates: Vec<Poly>,
    pub degree: i64,
}

impl FamilySection {
    /// Validates the section against its torus problem and returns the
    /// twist degrees `e_i`.
    pub fn twist_degrees(&self, p: &TorusProblem) -> Result<Vec<i64>, TorusError> {
        if self.cocycle.len() != p.rank() {
            return Err(TorusError::CocycleLength {
                expected: p.rank(),
                got: self.cocycle.len(),
            });
        }
        if self.coordinates.len() != p.coordinate_count() {
            return Err(TorusError::SectionLength {
                expected: p.coordinate_count(),
                got: self.coordinates.len(),
            });
        }
        if self.coordinates.iter().all(Poly::is_zero) {
            return Err(TorusError::ZeroSection);
        }
        let degrees: Vec<i64> = p
            .characters()
            .iter()
            .map(|chi| pairing(&self.cocycle, chi))
            .collect();
        for (index, f) in self.coordinates.iter().enumerate() {
            if let Some(d) = f.degree() {
                let cap = self.degree - degrees[index];
                if cap < 0 || d as i64 > cap {
                    return Err(TorusError::DegreeCap {
                        index,
                        got: d,
                        cap,
                    });
                }
            }
        }
        Ok(degrees)
    }

    /// Common polynomial factor of the nonzero coordinates (monic), the
    /// base locus of the section.
    pub fn common_factor(&self) -> Poly {
        let mut g = Poly::zero();
        for f in self.coordinates.iter().filter(|f| !f.is_zero()) {
            g = if g.is_zero() { f.monic() } else { g.gcd(f) };
            if g.degree() == Some(0) {
                break;
            }
        }
        g
    }
}

/// Height of a section: `(N+1) c' - sum e_i` with the common factor of the
/// coordinates removed (`c' = c - deg gcd`).
pub fn section_height(p: &TorusProblem, s: &FamilySection) -> Result<i64, TorusError> {
    let degrees = s.twist_degrees(p)?;
    let g = s.common_factor();
    let reduced_degree = s.degree - g.degree().unwrap_or(0) as i64;
    let n_plus_1 = p.coordinate_count() as i64;
    Ok(n_plus_1 * reduced_degree - degrees.iter().sum::<i64>())
}

/// Location of a special fiber of a section: a rational parameter value, or
/// the set of roots of a rational-root-free square-free polynomial (listed
/// by ascending coefficients), all of which induce one support pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SpecialLocus {
    #[serde(rename = "rational")]
    Rational { value: Rational },
    #[serde(rename = "algebraic")]
    Algebraic { poly: Vec<Rational> },
}

/// Verdict at one fiber (or at the generic fiber).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberVerdict {
    pub support: Vec<usize>,
    pub semistable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub destabilizing: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFiber {
    pub at: SpecialLocus,
    #[serde(flatten)]
    pub verdict: FiberVerdict,
}

/// Fiberwise semistability profile of a section: the generic verdict plus
/// one entry per special locus where the support drops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionProfile {
    pub generic: FiberVerdict,
    pub special: Vec<SpecialFiber>,
}

impl SectionProfile {
    pub fn has_semistable_fiber(&self) -> bool {
        self.generic.semistable || self.special.iter().any(|s| s.verdict.semistable)
    }
}

fn fiber_verdict(p: &TorusProblem, support: Vec<usize>) -> Result<FiberVerdict, TorusError> {
    let v = semistable_on_support(p, &support)?;
    Ok(FiberVerdict {
        support,
        semistable: v.semistable,
        destabilizing: v.destabilizing,
    })
}

/// Computes the profile. The base locus (common factor) is removed first;
/// the support is then constant outside the roots of the reduced
/// coordinates. Rational roots are listed individually; the remaining
/// square-free factors are reported whole, which is well defined because
/// after coprime refinement each factor either divides a coordinate or is
/// coprime to it.
pub fn fiber_profile(p: &TorusProblem, s: &FamilySection) -> Result<SectionProfile, TorusError> {
    s.twist_degrees(p)?;
    let g = s.common_factor();
    let reduced: Vec<Poly> = s
        .coordinates
        .iter()
        .map(|f| {
            if f.is_zero() || g.degree().unwrap_or(0) == 0 {
                f.clone()
            } else {
                f.div_exact(&g)
            }
        })
        .collect();

    let generic_support: Vec<usize> = reduced
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .map(|(i, _)| i)
        .collect();
    let generic = fiber_verdict(p, generic_support)?;

    let square_free: Vec<Poly> = reduced
        .iter()
        .filter(|f| f.degree().map_or(false, |d| d >= 1))
        .map(Poly::square_free_part)
        .collect();
    let basis = coprime_refinement(&square_free);

    let mut rational_points: Vec<Rational> = Vec::new();
    let mut blocks: Vec<Poly> = Vec::new();
    for q in basis {
        let roots = q.rational_roots();
        let mut rest = q;
        for r in &roots {
            let linear = Poly::from_coeffs(vec![-r, Rational::one()]);
            rest = rest.div_exact(&linear);
            rational_points.push(r.clone());
        }
        if rest.degree().map_or(false, |d| d >= 1) {
            blocks.push(rest);
        }
    }
    rational_points.sort();
    rational_points.dedup();

    let mut special = Vec::new();
    for value in rational_points {
        let support: Vec<usize> = reduced
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_zero() && !f.eval(&value).is_zero())
            .map(|(i, _)| i)
            .collect();
        special.push(SpecialFiber {
            at: SpecialLocus::Rational { value },
            verdict: fiber_verdict(p, support)?,
        });
    }
    for q in blocks {
        let support: Vec<usize> = reduced
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.is_zero() && !f.div_rem(&q).1.is_zero())
            .map(|(i, _)| i)
            .collect();
        special.push(SpecialFiber {
            at: SpecialLocus::Algebraic {
                poly: q.coeffs().to_vec(),
            },
            verdict: fiber_verdict(p, support)?,
        });
    }
    Ok(SectionProfile { generic, special })
}

/// Report of the random-section height harness: every generated instance
/// possessing a semistable fiber must have nonnegative height.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HarnessReport {
    /// Qualifying instances requested.
    pub requested: u32,
    /// Qualifying instances examined (equals `requested` unless the
    /// generation cap was hit).
    pub qualifying: u32,
    /// Total instances generated, including filtered-out ones.
    pub generated: u32,
    /// Heights seen on qualifying instances.
    pub min_height: Option<i64>,
    pub max_height: Option<i64>,
    /// Instances with a semistable fiber and negative height. Must be zero.
    pub violations: u32,
    pub passed: bool,
}

fn splitmix(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9E3779B97F4A7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// One random torus problem plus section, derived deterministically from
/// `(seed, index)`.
pub fn random_instance(seed: u64, index: u64) -> (TorusProblem, FamilySection) {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(seed, index));
    let rank = rng.gen_range(1..=3usize);
    let coords = rng.gen_range(2..=6usize);
    let problem = loop {
        let raw: Vec<Vec<i64>> = (0..coords)
            .map(|_| (0..rank).map(|_| rng.gen_range(-3..=3i64)).collect())
            .collect();
        if let Ok(p) = TorusProblem::new(raw) {
            break p;
        }
    };
    let cocycle: Vec<i64> = (0..rank).map(|_| rng.gen_range(-2..=2i64)).collect();
    let twists: Vec<i64> = problem
        .characters()
        .iter()
        .map(|chi| pairing(&cocycle, chi))
        .collect();
    let max_twist = *twists.iter().max().expect("nonempty");
    let degree = max_twist + rng.gen_range(0..=3i64);
    let mut coordinates: Vec<Poly> = twists
        .iter()
        .map(|&e| {
            let cap = degree - e;
            if cap < 0 || rng.gen_range(0..4) == 0 {
                Poly::zero()
            } else {
                let d = rng.gen_range(0..=cap.min(3)) as usize;
                let mut coeffs: Vec<Rational> = (0..=d)
                    .map(|_| Rational::new(rng.gen_range(-3..=3i64), rng.gen_range(1..=2i64)))
                    .collect();
                if coeffs[d].is_zero() {
                    coeffs[d] = Rational::one();
                }
                Poly::from_coeffs(coeffs)
            }
        })
        .collect();
    if coordinates.iter().all(Poly::is_zero) {
        let lead = twists
            .iter()
            .enumerate()
            .max_by_key(|(_, &e)| e)
            .map(|(i, _)| i)
            .expect("nonempty");
        coordinates[lead] = Poly::one();
    }
    let section = FamilySection {
        cocycle,
        coordinates,
        degree,
    };
    (problem, section)
}

/// Runs the harness until `trials` qualifying instances (sections with at
/// least one semistable fiber) have been examined, generating at most
/// `100 * trials` candidates. Any qualifying instance with negative height
/// is a violation.
pub fn ch0_harness(seed: u64, trials: u32) -> Result<HarnessReport, TorusError> {
    let cap = u64::from(trials) * 100;
    let chunk = u64::from(trials.max(8));
    let mut report = HarnessReport {
        requested: trials,
        qualifying: 0,
        generated: 0,
        min_height: None,
        max_height: None,
        violations: 0,
        passed: false,
    };
    let mut start = 0u64;
    while report.qualifying < trials && start < cap {
        let end = (start + chunk).min(cap);
        let outcomes: Vec<Result<Option<i64>, TorusError>> = (start..end)
            .into_par_iter()
            .map(|index| {
                let (problem, section) = random_instance(seed, index);
                let profile = fiber_profile(&problem, &section)?;
                if profile.has_semistable_fiber() {
                    Ok(Some(section_height(&problem, &section)?))
                } else {
                    Ok(None)
                }
            })
            .collect();
        for outcome in outcomes {
            report.generated += 1;
            if let Some(h) = outcome? {
                report.qualifying += 1;
                report.min_height = Some(report.min_height.map_or(h, |m| m.min(h)));
                report.max_height = Some(report.max_height.map_or(h, |m| m.max(h)));
                if h < 0 {
                    report.violations += 1;
                }
                if report.qualifying == trials {
                    break;
                }
            }
        }
        start = end;
    }
    report.passed = report.violations == 0 && report.qualifying == trials;
    Ok(report)
}

//! Seeded random instances for property harnesses and benchmarks.
//!
//! Everything here is deterministic in the provided RNG; the generators are
//! tuned so that the sampled objects satisfy the preconditions of the
//! checks they feed (stable curves have ample log-canonical class,
//! consistent families satisfy the fiberwise degree relations of an actual
//! family).

use rand::Rng;

use crate::curve::{ComponentSpec, CurveSpec, Multidegree, NodalCurve, PointSpec};
use crate::heights::{BoundaryTerm, FamilyIntersections};
use crate::rational::Rational;
use crate::torus::TorusProblem;

fn small_positive_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(1..=8), rng.gen_range(1..=3))
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

fn weight<R: Rng>(rng: &mut R) -> Rational {
    // in (0, 1]
    let den = rng.gen_range(1..=4i64);
    Rational::new(rng.gen_range(1..=den), den)
}

/// A random connected weighted pointed curve with every component's
/// log-canonical degree positive (so the canonical multidegree is a genuine
/// polarization), at most `max_components` components.
pub fn stable_curve<R: Rng>(rng: &mut R, max_components: usize) -> NodalCurve {
    loop {
        let c = rng.gen_range(1..=max_components);
        let components: Vec<ComponentSpec> = (0..c)
            .map(|i| ComponentSpec {
                id: format!("c{i}"),
                genus: rng.gen_range(0..=3),
            })
            .collect();
        let mut nodes: Vec<(String, String)> = Vec::new();
        // random spanning tree keeps the dual graph connected
        for i in 1..c {
            let j = rng.gen_range(0..i);
            nodes.push((format!("c{j}"), format!("c{i}")));
        }
        for _ in 0..rng.gen_range(0..=2usize) {
            let i = rng.gen_range(0..c);
            let j = rng.gen_range(0..c);
            nodes.push((format!("c{i}"), format!("c{j}")));
        }
        let points: Vec<PointSpec> = (0..rng.gen_range(0..=3usize))
            .map(|k| PointSpec {
                on: format!("c{}", rng.gen_range(0..c)),
                label: format!("p{k}"),
                weight: weight(rng),
                group: None,
            })
            .collect();
        let Ok(curve) = NodalCurve::from_spec(&CurveSpec {
            components,
            nodes,
            points,
        }) else {
            continue;
        };
        let ample = (0..curve.component_count())
            .all(|i| curve.component_log_degree(i).is_positive());
        if ample && curve.log_canonical_degree().is_positive() {
            return curve;
        }
    }
}

/// A random strictly positive multidegree on the curve.
pub fn positive_multidegree<R: Rng>(rng: &mut R, curve: &NodalCurve) -> Multidegree {
    let values = (0..curve.component_count())
        .map(|_| small_positive_rational(rng))
        .collect();
    curve.multidegree(values).expect("length matches")
}

/// The smallest positive integer `r` clearing the denominators of the
/// canonical multidegree of the curve.
pub fn clearing_factor(curve: &NodalCurve) -> Rational {
    let one = Rational::one();
    let degrees = curve.canonical_multidegree(&one);
    let mut lcm = num_bigint::BigInt::from(1);
    for d in degrees.values() {
        lcm = num_integer::Integer::lcm(&lcm, d.denom());
    }
    Rational::from(lcm)
}

/// Data for a random curve fibration consistent with an actual family:
/// the fiber degrees of `K + D` and the total-space `L.(K_{X/B} + D)` are
/// derived from the genus, the boundary, and `L.omega_{X/B}`, so the
/// leading-term identity applies.
pub struct ConsistentFamily {
    pub family: FamilyIntersections,
    pub genus: i64,
    /// `L . omega_{X/B}` (boundary excluded), feeding the GRR pushforward.
    pub lomega: Rational,
    pub deg_lambda: Rational,
}

pub fn consistent_family<R: Rng>(rng: &mut R) -> ConsistentFamily {
    let genus = rng.gen_range(0..=4i64);
    let fiber_ln = small_positive_rational(rng);
    let lnp1 = small_rational(rng);
    let lomega = small_rational(rng);
    let deg_lambda = small_rational(rng);
    let boundary: Vec<BoundaryTerm> = (0..rng.gen_range(0..=3usize))
        .map(|_| BoundaryTerm {
            a: weight(rng),
            ldi_n: small_rational(rng),
            fiber_di: Rational::from(rng.gen_range(1..=2i64)),
        })
        .collect();
    let lnk = &lomega
        + &boundary
            .iter()
            .map(|b| &b.a * &b.ldi_n)
            .sum::<Rational>();
    let fiber_ln1k = Rational::from(2 * genus - 2)
        + boundary.iter().map(|b| &b.a * &b.fiber_di).sum::<Rational>();
    ConsistentFamily {
        family: FamilyIntersections {
            n: 1,
            lnp1,
            lnk,
            fiber_ln,
            fiber_ln1k,
            boundary,
        },
        genus,
        lomega,
        deg_lambda,
    }
}

/// A random torus problem with characters in `{-1, 0, 1}^t` already summing
/// to zero, `rank <= max_rank`, between 2 and `max_coords` coordinates.
///
/// The entry bound matters for lattice-oracle comparisons: for characters
/// with entries in `{-1, 0, 1}` and rank at most 3, an unstable support
/// always admits a destabilizing one-parameter subgroup with entries of
/// magnitude at most 4 (Cramer on the separating system), so the exhaustive
/// `[-5, 5]^t` sweep is a complete oracle.
pub fn small_torus_problem<R: Rng>(
    rng: &mut R,
    max_rank: usize,
    max_coords: usize,
) -> TorusProblem {
    let rank = rng.gen_range(1..=max_rank);
    let coords = rng.gen_range(2..=max_coords);
    loop {
        let mut raw: Vec<Vec<i64>> = (0..coords - 1)
            .map(|_| (0..rank).map(|_| rng.gen_range(-1..=1i64)).collect())
            .collect();
        let last: Vec<i64> = (0..rank)
            .map(|j| -raw.iter().map(|chi| chi[j]).sum::<i64>())
            .collect();
        if last.iter().any(|&x| x.abs() > 1) {
            continue;
        }
        raw.push(last);
        let problem = TorusProblem::new(raw).expect("valid characters");
        debug_assert_eq!(problem.scale(), 1, "sum-zero input is never rescaled");
        return problem;
    }
}

/// A random nonempty support subset of `0..n`.
pub fn random_support<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    loop {
        let support: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
        if !support.is_empty() {
            return support;
        }
    }
}

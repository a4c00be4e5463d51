//! Chow (semi)stability of polarized weighted pointed nodal curves via the
//! subcurve inequality, and the search for semistabilizing twists.
//!
//! For a polarization `L` on a weighted pointed nodal curve `(X, a.x)` with
//! `deg omega(a.x) > 0`, define for every subcurve `Y` (not necessarily
//! connected) the affine functional
//!
//! ```text
//! Phi(Y) = (deg_L Y + sum_{x_j in Y} a_j/2)
//!          - (deg omega(a.x)|_Y / deg omega(a.x)) * (deg_L X + sum_j a_j/2)
//! ```
//!
//! The curve is semistable iff `|Phi(Y)| <= boundary_length(Y)/2` for every
//! proper subcurve; we report `margin(Y) = l_Y/2 - |Phi(Y)|` and classify by
//! the sign of the worst margin. `Phi(Y) = -Phi(Y^c)`, so enumeration is
//! complement-deduplicated. The full curve is excluded: its margin is
//! identically zero and carries no information.
//!
//! For the polarization `omega(a.x)^r` the functional collapses to an
//! `r`-independent expression in the dualizing degrees alone, which is what
//! [`check_asymptotic`] evaluates:
//!
//! ```text
//! (1/2) |deg(omega|_Y) - (deg omega(a.x)|_Y / deg omega(a.x)) deg omega|
//!     <= l_Y / 2 .
//! ```

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{CurveError, Multidegree, NodalCurve, Subcurve, DEFAULT_SUBCURVE_LIMIT};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum ChowError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("total log-canonical degree {0} is not positive")]
    NonpositiveLogCanonicalDegree(Rational),
    #[error("polarization degree {degree} on component `{id}` is not positive")]
    NonpositiveDegree { id: String, degree: Rational },
    #[error("polarization degree {degree} on component `{id}` is not an integer")]
    NonIntegralDegree { id: String, degree: Rational },
    #[error("genera must satisfy g1 >= 2, g2 >= 1; got ({g1}, {g2})")]
    InvalidGenera { g1: u32, g2: u32 },
}

/// Three-way stability status. `Stable` means every proper-subcurve
/// inequality is strict; `StrictlySemistable` means some margin is exactly
/// zero; `Unstable` means some margin is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Status {
    pub fn is_unstable(self) -> bool {
        self == Status::Unstable
    }
}

/// A subcurve achieving the worst margin, identified by component ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub subcurve: Vec<String>,
    pub margin: Rational,
}

/// Outcome of a stability check. `witnesses` lists every
/// complement-deduplicated proper subcurve attaining `worst_margin`, sorted
/// by size then by member list. `worst_margin` is `None` only for an
/// irreducible curve, which is stable vacuously.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    pub status: Status,
    pub worst_margin: Option<Rational>,
    pub witnesses: Vec<Witness>,
    pub caveat_low_degree: bool,
}

/// Options for [`check_finite`].
#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Require the polarization to be integral (an actual embedding degree).
    pub assert_embedding: bool,
    /// `caveat_low_degree` is raised when `deg_L X` is below this; defaults
    /// to `2 * deg omega(a.x)` when `None`.
    pub low_degree_threshold: Option<Rational>,
    /// Component-count cap for subcurve enumeration.
    pub subcurve_limit: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            assert_embedding: false,
            low_degree_threshold: None,
            subcurve_limit: DEFAULT_SUBCURVE_LIMIT,
        }
    }
}

fn validate_positive_log_degree(curve: &NodalCurve) -> Result<Rational, ChowError> {
    let total = curve.log_canonical_degree();
    if !total.is_positive() {
        return Err(ChowError::NonpositiveLogCanonicalDegree(total));
    }
    Ok(total)
}

fn validate_polarization(
    curve: &NodalCurve,
    degrees: &Multidegree,
    assert_embedding: bool,
) -> Result<(), ChowError> {
    for (i, d) in degrees.values().iter().enumerate() {
        if !d.is_positive() {
            return Err(ChowError::NonpositiveDegree {
                id: curve.component_ids()[i].clone(),
                degree: d.clone(),
            });
        }
        if assert_embedding && !d.is_integer() {
            return Err(ChowError::NonIntegralDegree {
                id: curve.component_ids()[i].clone(),
                degree: d.clone(),
            });
        }
    }
    Ok(())
}

/// The functional `Phi(Y)` above, exactly.
pub fn chow_margin(
    curve: &NodalCurve,
    degrees: &Multidegree,
    y: &Subcurve,
) -> Result<Rational, ChowError> {
    let total_log = validate_positive_log_degree(curve)?;
    validate_polarization(curve, degrees, false)?;
    Ok(chow_functional(curve, degrees, &total_log, y))
}

fn chow_functional(
    curve: &NodalCurve,
    degrees: &Multidegree,
    total_log: &Rational,
    y: &Subcurve,
) -> Rational {
    let half = Rational::new(1, 2);
    let on_y = degrees.degree_on(y) + &half * &curve.weight_sum_on(y);
    let global = degrees.total() + &half * &curve.total_weight();
    let proportion = curve.log_omega_degree_on(y, true) / total_log.clone();
    on_y - proportion * global
}

fn classify(
    curve: &NodalCurve,
    entries: Vec<(Subcurve, Rational)>,
    caveat_low_degree: bool,
) -> StabilityVerdict {
    let worst = entries.iter().map(|(_, m)| m.clone()).min();
    let status = match &worst {
        None => Status::Stable,
        Some(m) if m.is_negative() => Status::Unstable,
        Some(m) if m.is_zero() => Status::StrictlySemistable,
        Some(_) => Status::Stable,
    };
    let mut witnesses: Vec<Witness> = entries
        .into_iter()
        .filter(|(_, m)| Some(m) == worst.as_ref())
        .map(|(y, margin)| Witness {
            subcurve: curve.subcurve_ids(&y),
            margin,
        })
        .collect();
    witnesses.sort_by(|a, b| {
        a.subcurve
            .len()
            .cmp(&b.subcurve.len())
            .then_with(|| a.subcurve.cmp(&b.subcurve))
    });
    StabilityVerdict {
        status,
        worst_margin: worst,
        witnesses,
        caveat_low_degree,
    }
}

fn scan_margins<F>(
    curve: &NodalCurve,
    limit: usize,
    margin: F,
) -> Result<Vec<(Subcurve, Rational)>, ChowError>
where
    F: Fn(&Subcurve) -> Rational + Sync,
{
    let subcurves: Vec<Subcurve> = curve.subcurves_with_limit(true, limit)?.collect();
    Ok(subcurves
        .into_par_iter()
        .map(|y| {
            let m = margin(&y);
            (y, m)
        })
        .collect())
}

/// Chow semistability of `(X, a.x; L)` at a fixed polarization, via the
/// subcurve inequality over all complement-deduplicated proper subcurves.
pub fn check_finite(
    curve: &NodalCurve,
    degrees: &Multidegree,
    opts: &CheckOptions,
) -> Result<StabilityVerdict, ChowError> {
    let total_log = validate_positive_log_degree(curve)?;
    validate_polarization(curve, degrees, opts.assert_embedding)?;
    let threshold = opts
        .low_degree_threshold
        .clone()
        .unwrap_or_else(|| Rational::from(2) * &total_log);
    let caveat = degrees.total() < threshold;
    let half = Rational::new(1, 2);
    let entries = scan_margins(curve, opts.subcurve_limit, |y| {
        let ell = Rational::from(curve.boundary_length(y));
        &half * &ell - chow_functional(curve, degrees, &total_log, y).abs()
    })?;
    Ok(classify(curve, entries, caveat))
}

/// Asymptotic Chow stability of `(X, a.x; omega(a.x)^r)` for `r >> 1`. The
/// twist power never appears: the criterion depends only on dualizing
/// degrees.
pub fn check_asymptotic(curve: &NodalCurve) -> Result<StabilityVerdict, ChowError> {
    check_asymptotic_with_limit(curve, DEFAULT_SUBCURVE_LIMIT)
}

pub fn check_asymptotic_with_limit(
    curve: &NodalCurve,
    limit: usize,
) -> Result<StabilityVerdict, ChowError> {
    let total_log = validate_positive_log_degree(curve)?;
    let omega_total = Rational::from(curve.omega_degree_on(&curve.full_subcurve()));
    let half = Rational::new(1, 2);
    let entries = scan_margins(curve, limit, |y| {
        let ell = Rational::from(curve.boundary_length(y));
        let deviation = Rational::from(curve.omega_degree_on(y))
            - curve.log_omega_degree_on(y, true) / total_log.clone() * &omega_total;
        &half * &ell - &half * &deviation.abs()
    })?;
    Ok(classify(curve, entries, false))
}

/// Instability thresholds for the one-point-union of two smooth curves of
/// genera `(g1, g2)`, `g1 >= 2`, `g2 >= 1`, with all marked points on the
/// second component.
///
/// `direct` solves the asymptotic subcurve inequality for `Y = X_1` exactly:
/// the curve is unstable iff the total weight exceeds
/// `(g1 + g2 - 1)/(g1 - 1)`. `published` is the threshold
/// `(g1 + g2 - 1)/(2 (g1 - 1))` reported in the literature for the same
/// configuration. The two differ by a factor of two; `discrepancy` is raised
/// so callers surface the disagreement instead of silently picking a side.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PhThreshold {
    pub g1: u32,
    pub g2: u32,
    pub direct: Rational,
    pub published: Rational,
    pub discrepancy: bool,
}

pub fn ph_threshold(g1: u32, g2: u32) -> Result<PhThreshold, ChowError> {
    if g1 < 2 || g2 < 1 {
        return Err(ChowError::InvalidGenera { g1, g2 });
    }
    let num = Rational::from(i64::from(g1) + i64::from(g2) - 1);
    let direct = &num / &Rational::from(i64::from(g1) - 1);
    let published = &num / &Rational::from(2 * (i64::from(g1) - 1));
    let discrepancy = direct != published;
    Ok(PhThreshold {
        g1,
        g2,
        direct,
        published,
        discrepancy,
    })
}

/// Result of a successful twist search: the integral twist, the twisted
/// multidegree, and the verified verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwistOutcome {
    pub twist: Vec<i64>,
    pub degrees: Vec<Rational>,
    pub verdict: StabilityVerdict,
}

/// One row of the linear system a twist must satisfy: for the subcurve
/// listed, `|constant + sum_i coefficients[i] * b_i| <= bound`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwistConstraint {
    pub subcurve: Vec<String>,
    pub coefficients: Vec<i64>,
    pub constant: Rational,
    pub bound: Rational,
}

/// The semistability constraints on a twist `b` of the given base
/// polarization, one per complement-deduplicated proper subcurve. Twist
/// degrees sum to zero, so only `Phi(Y)` moves, linearly in `b`.
pub fn twist_constraints(
    curve: &NodalCurve,
    base: &Multidegree,
) -> Result<Vec<TwistConstraint>, ChowError> {
    let total_log = validate_positive_log_degree(curve)?;
    let half = Rational::new(1, 2);
    let mut rows = Vec::new();
    for y in curve.subcurves(true)? {
        let mut coefficients = vec![0i64; curve.component_count()];
        for &(a, b) in curve.nodes() {
            if y.contains(a) != y.contains(b) {
                let (inside, outside) = if y.contains(a) { (a, b) } else { (b, a) };
                coefficients[outside] += 1;
                coefficients[inside] -= 1;
            }
        }
        rows.push(TwistConstraint {
            subcurve: curve.subcurve_ids(&y),
            coefficients,
            constant: chow_functional(curve, base, &total_log, &y),
            bound: &half * &Rational::from(curve.boundary_length(&y)),
        });
    }
    Ok(rows)
}

/// Searches for an integral twist `b` (first component pinned to zero,
/// remaining entries in `[-box_radius, box_radius]`) such that the base
/// polarization twisted by `O_X(sum b_i X_i)` is not unstable. Candidates
/// are tried shell by shell in the sup-norm, lexicographically inside each
/// shell, and the winner is re-verified with [`check_finite`] before being
/// returned. `None` when the whole box fails.
pub fn twist_search(
    curve: &NodalCurve,
    base: &Multidegree,
    box_radius: u32,
    opts: &CheckOptions,
) -> Result<Option<TwistOutcome>, ChowError> {
    validate_positive_log_degree(curve)?;
    let c = curve.component_count();
    for shell in 0..=box_radius as i64 {
        let candidates = shell_candidates(c, shell);
        let hit = candidates
            .par_iter()
            .map(|b| {
                let twisted = base.add(&curve.twist_degrees(b).expect("length matches"));
                if !twisted.is_positive() {
                    return None;
                }
                match check_finite(curve, &twisted, opts) {
                    Ok(v) if !v.status.is_unstable() => Some(b.clone()),
                    _ => None,
                }
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .next();
        if let Some(b) = hit {
            // verify the reported twist from scratch
            let twisted = base.add(&curve.twist_degrees(&b)?);
            let verdict = check_finite(curve, &twisted, opts)?;
            debug_assert!(!verdict.status.is_unstable());
            return Ok(Some(TwistOutcome {
                twist: b,
                degrees: twisted.values().to_vec(),
                verdict,
            }));
        }
    }
    Ok(None)
}

/// Twist search from the canonical polarization `omega(a.x)^r`; `r` must
/// clear all component-degree denominators.
pub fn twist_search_canonical(
    curve: &NodalCurve,
    r: &Rational,
    box_radius: u32,
    opts: &CheckOptions,
) -> Result<Option<TwistOutcome>, ChowError> {
    let base = curve.canonical_multidegree(r);
    validate_polarization(curve, &base, true)?;
    twist_search(curve, &base, box_radius, opts)
}

/// All twist vectors with first entry zero and sup-norm exactly `shell`,
/// in lexicographic order.
fn shell_candidates(components: usize, shell: i64) -> Vec<Vec<i64>> {
    let free = components.saturating_sub(1);
    if shell == 0 {
        return vec![vec![0; components]];
    }
    let mut out = Vec::new();
    let mut cursor = vec![-shell; free];
    loop {
        if cursor.iter().any(|&v| v.abs() == shell) {
            let mut b = Vec::with_capacity(components);
            b.push(0);
            b.extend_from_slice(&cursor);
            out.push(b);
        }
        // odometer increment, most significant digit first
        let mut k = free;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cursor[k] < shell {
                cursor[k] += 1;
                for v in cursor.iter_mut().skip(k + 1) {
                    *v = -shell;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{ComponentSpec, CurveSpec, PointSpec};

    fn ph_curve(weights_on_x2: &[Rational]) -> NodalCurve {
        NodalCurve::from_spec(&CurveSpec {
            components: vec![
                ComponentSpec {
                    id: "X1".into(),
                    genus: 2,
                },
                ComponentSpec {
                    id: "X2".into(),
                    genus: 1,
                },
            ],
            nodes: vec![("X1".into(), "X2".into())],
            points: weights_on_x2
                .iter()
                .enumerate()
                .map(|(k, w)| PointSpec {
                    on: "X2".into(),
                    label: format!("p{k}"),
                    weight: w.clone(),
                    group: None,
                })
                .collect(),
        })
        .unwrap()
    }

    fn degrees(curve: &NodalCurve, values: &[i64]) -> Multidegree {
        curve
            .multidegree(values.iter().map(|&v| Rational::from(v)).collect())
            .unwrap()
    }

    #[test]
    fn chow_functional_by_hand() {
        let c = ph_curve(&[]);
        let l = degrees(&c, &[3, 2]);
        let x1 = c.subcurve_by_ids(&["X1"]).unwrap();
        // Phi({X1}) = 3 - (3/4) * 5 = -3/4
        assert_eq!(chow_margin(&c, &l, &x1).unwrap(), Rational::new(-3, 4));
        // whole curve: both terms coincide
        assert_eq!(
            chow_margin(&c, &l, &c.full_subcurve()).unwrap(),
            Rational::zero()
        );
        // complement antisymmetry
        let x2 = c.subcurve_by_ids(&["X2"]).unwrap();
        assert_eq!(
            chow_margin(&c, &l, &x2).unwrap(),
            -chow_margin(&c, &l, &x1).unwrap()
        );
    }

    #[test]
    fn check_finite_examples() {
        let c = ph_curve(&[]);
        let unstable = check_finite(&c, &degrees(&c, &[3, 2]), &CheckOptions::default()).unwrap();
        assert_eq!(unstable.status, Status::Unstable);
        assert_eq!(unstable.worst_margin, Some(Rational::new(-1, 4)));
        assert_eq!(unstable.witnesses.len(), 1);
        assert_eq!(unstable.witnesses[0].subcurve, vec!["X1".to_string()]);

        // (3, 1) is proportional to the dualizing degrees: Phi vanishes on
        // every subcurve and all margins sit at l_Y/2 > 0
        let balanced = check_finite(&c, &degrees(&c, &[3, 1]), &CheckOptions::default()).unwrap();
        assert_eq!(balanced.status, Status::Stable);
        assert_eq!(balanced.worst_margin, Some(Rational::new(1, 2)));

        // margins exactly zero classify as strictly semistable: weight one
        // point on each component pushes Phi({X1}) to the boundary
        let c2 = NodalCurve::from_spec(&CurveSpec {
            components: vec![
                ComponentSpec {
                    id: "X1".into(),
                    genus: 2,
                },
                ComponentSpec {
                    id: "X2".into(),
                    genus: 1,
                },
            ],
            nodes: vec![("X1".into(), "X2".into())],
            points: vec![
                PointSpec {
                    on: "X2".into(),
                    label: "p".into(),
                    weight: Rational::one(),
                    group: None,
                },
                PointSpec {
                    on: "X2".into(),
                    label: "q".into(),
                    weight: Rational::one(),
                    group: None,
                },
            ],
        })
        .unwrap();
        let l = c2.canonical_multidegree(&Rational::one());
        let strict = check_finite(&c2, &l, &CheckOptions::default()).unwrap();
        assert_eq!(strict.status, Status::StrictlySemistable);
        assert_eq!(strict.worst_margin, Some(Rational::zero()));
    }

    #[test]
    fn irreducible_curve_is_vacuously_stable() {
        let smooth = NodalCurve::from_spec(&CurveSpec {
            components: vec![ComponentSpec {
                id: "X".into(),
                genus: 2,
            }],
            nodes: vec![],
            points: vec![],
        })
        .unwrap();
        let sm = smooth.multidegree(vec![Rational::from(5)]).unwrap();
        let verdict = check_finite(&smooth, &sm, &CheckOptions::default()).unwrap();
        assert_eq!(verdict.status, Status::Stable);
        assert!(verdict.worst_margin.is_none());
        assert!(verdict.witnesses.is_empty());
    }

    #[test]
    fn check_finite_rejects_bad_polarizations() {
        let c = ph_curve(&[]);
        let zero = c
            .multidegree(vec![Rational::zero(), Rational::from(4)])
            .unwrap();
        assert!(matches!(
            check_finite(&c, &zero, &CheckOptions::default()),
            Err(ChowError::NonpositiveDegree { .. })
        ));
        let frac = c
            .multidegree(vec![Rational::new(7, 2), Rational::from(1)])
            .unwrap();
        let opts = CheckOptions {
            assert_embedding: true,
            ..CheckOptions::default()
        };
        assert!(matches!(
            check_finite(&c, &frac, &opts),
            Err(ChowError::NonIntegralDegree { .. })
        ));
    }

    #[test]
    fn asymptotic_weight_scan() {
        // total weight 5/2 on X2: unstable (|3 - 24/13| = 15/13 > 1)
        let c = ph_curve(&[Rational::one(), Rational::one(), Rational::new(1, 2)]);
        assert_eq!(
            check_asymptotic(&c).unwrap().status,
            Status::Unstable,
            "total weight 5/2"
        );
        // total weight 3/2: |3 - 24/11| = 9/11 < 1, stable
        let c = ph_curve(&[Rational::one(), Rational::new(1, 2)]);
        assert_eq!(check_asymptotic(&c).unwrap().status, Status::Stable);
        // total weight exactly 2: the inequality for Y = {X1} is an
        // equality, margin zero
        let c = ph_curve(&[Rational::one(), Rational::one()]);
        let verdict = check_asymptotic(&c).unwrap();
        assert_eq!(verdict.status, Status::StrictlySemistable);
        assert_eq!(verdict.worst_margin, Some(Rational::zero()));
        // no marked points: the deviation vanishes identically and every
        // margin is l_Y/2 > 0
        let c = ph_curve(&[]);
        assert_eq!(check_asymptotic(&c).unwrap().status, Status::Stable);
    }

    #[test]
    fn ph_threshold_values() {
        let t = ph_threshold(2, 1).unwrap();
        assert_eq!(t.direct, Rational::from(2));
        assert_eq!(t.published, Rational::from(1));
        assert!(t.discrepancy);
        let t = ph_threshold(3, 1).unwrap();
        assert_eq!(t.direct, Rational::new(3, 2));
        assert_eq!(t.published, Rational::new(3, 4));
        assert!(ph_threshold(1, 1).is_err());
        assert!(ph_threshold(2, 0).is_err());
    }

    #[test]
    fn twist_search_restores_semistability() {
        let c = ph_curve(&[]);
        // start from (7, 1): b = (0, 1) applied to the canonical (6, 2)
        let base = degrees(&c, &[7, 1]);
        let outcome = twist_search(&c, &base, 5, &CheckOptions::default())
            .unwrap()
            .expect("twist exists");
        assert_eq!(outcome.twist, vec![0, -1]);
        assert_eq!(outcome.degrees, vec![Rational::from(6), Rational::from(2)]);
        assert!(!outcome.verdict.status.is_unstable());

        // already semistable input: identity twist
        let ok = degrees(&c, &[6, 2]);
        let outcome = twist_search(&c, &ok, 5, &CheckOptions::default())
            .unwrap()
            .expect("identity works");
        assert_eq!(outcome.twist, vec![0, 0]);

        // single-component curve: the only twist is (0)
        let smooth = NodalCurve::from_spec(&CurveSpec {
            components: vec![ComponentSpec {
                id: "X".into(),
                genus: 2,
            }],
            nodes: vec![],
            points: vec![],
        })
        .unwrap();
        let sm = smooth.multidegree(vec![Rational::from(5)]).unwrap();
        let outcome = twist_search(&smooth, &sm, 3, &CheckOptions::default())
            .unwrap()
            .expect("vacuous");
        assert_eq!(outcome.twist, vec![0]);
    }

    #[test]
    fn twist_search_canonical_requires_integrality() {
        let c = ph_curve(&[Rational::new(1, 2)]);
        // r = 1 leaves the half-integral weight in the degrees
        assert!(matches!(
            twist_search_canonical(&c, &Rational::one(), 2, &CheckOptions::default()),
            Err(ChowError::NonIntegralDegree { .. })
        ));
        // r = 2 clears it
        assert!(
            twist_search_canonical(&c, &Rational::from(2), 2, &CheckOptions::default())
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn shell_enumeration_order() {
        let shells: Vec<Vec<i64>> = shell_candidates(2, 1);
        assert_eq!(shells, vec![vec![0, -1], vec![0, 1]]);
        let shells: Vec<Vec<i64>> = shell_candidates(3, 1);
        assert_eq!(
            shells,
            vec![
                vec![0, -1, -1],
                vec![0, -1, 0],
                vec![0, -1, 1],
                vec![0, 0, -1],
                vec![0, 0, 1],
                vec![0, 1, -1],
                vec![0, 1, 0],
                vec![0, 1, 1],
            ]
        );
    }

    #[test]
    fn constraints_describe_the_search() {
        let c = ph_curve(&[]);
        let base = degrees(&c, &[7, 1]);
        let rows = twist_constraints(&c, &base).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.subcurve, vec!["X1".to_string()]);
        // Phi({X1}) for (7,1): 7 - (3/4) * 8 = 1
        assert_eq!(row.constant, Rational::from(1));
        assert_eq!(row.bound, Rational::new(1, 2));
        // one boundary node: b_2 enters with +1, b_1 with -1
        assert_eq!(row.coefficients, vec![-1, 1]);
        // the found twist b = (0, -1) satisfies |1 - 1| <= 1/2
    }
}

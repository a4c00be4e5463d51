//! Randomized invariants of the subcurve criterion: complement
//! antisymmetry, independence of the twist power, scaling invariance, and
//! post-verification of twist-search results.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chowstab::chow::{check_asymptotic, check_finite, chow_margin, twist_search, CheckOptions};
use chowstab::random::{clearing_factor, positive_multidegree, stable_curve};
use chowstab::rational::Rational;

#[test]
fn complement_antisymmetry_of_the_functional() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..120 {
        let curve = stable_curve(&mut rng, 6);
        let degrees = positive_multidegree(&mut rng, &curve);
        for y in curve.subcurves(false).unwrap() {
            let yc = curve.complement(&y);
            if yc.is_empty() {
                continue;
            }
            let phi = chow_margin(&curve, &degrees, &y).unwrap();
            let phi_c = chow_margin(&curve, &degrees, &yc).unwrap();
            assert_eq!(phi, -phi_c, "antisymmetry fails on {:?}", y.members());
        }
    }
}

#[test]
fn finite_check_at_canonical_degrees_matches_asymptotic() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let opts = CheckOptions::default();
    for _ in 0..120 {
        let curve = stable_curve(&mut rng, 6);
        let asymptotic = check_asymptotic(&curve).unwrap();
        let r0 = clearing_factor(&curve);
        for k in 1..=3i64 {
            let r = &r0 * &Rational::from(k);
            let degrees = curve.canonical_multidegree(&r);
            assert!(degrees.is_integral());
            let finite = check_finite(&curve, &degrees, &opts).unwrap();
            assert_eq!(
                finite.status, asymptotic.status,
                "status must not depend on the twist power (r = {r})"
            );
        }
    }
}

#[test]
fn verdicts_are_scaling_invariant_on_the_canonical_ray() {
    // On multiples of the canonical multidegree the subcurve functional is
    // constant in the scale, so status and witnesses are invariant under
    // any positive rational rescaling.
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let opts = CheckOptions {
        // the caveat flag tracks the absolute degree and is allowed to move
        low_degree_threshold: Some(Rational::zero()),
        ..CheckOptions::default()
    };
    for _ in 0..120 {
        let curve = stable_curve(&mut rng, 6);
        let degrees = curve.canonical_multidegree(&clearing_factor(&curve));
        let base = check_finite(&curve, &degrees, &opts).unwrap();
        let t = Rational::new(rng.gen_range(1..=9), rng.gen_range(1..=4));
        let scaled = check_finite(&curve, &degrees.scale(&t), &opts).unwrap();
        assert_eq!(base.status, scaled.status);
        assert_eq!(base.worst_margin, scaled.worst_margin);
        let names = |v: &chowstab::StabilityVerdict| {
            v.witnesses
                .iter()
                .map(|w| w.subcurve.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(names(&base), names(&scaled));
    }
}

#[test]
fn off_ray_polarizations_destabilize_under_large_scalings() {
    // The inequality bounds an absolute deviation by l_Y/2, so any
    // polarization not proportional to the dualizing degrees goes unstable
    // once scaled far enough. (31, 10) sits close to the (3, 1) ray on the
    // two-component curve: semistable as given, unstable tripled.
    let spec: chowstab::curve::CurveSpec = serde_json::from_str(
        r#"{"components": [{"id": "X1", "genus": 2}, {"id": "X2", "genus": 1}],
            "nodes": [["X1", "X2"]]}"#,
    )
    .unwrap();
    let curve = chowstab::NodalCurve::from_spec(&spec).unwrap();
    let opts = CheckOptions::default();
    let l = curve
        .multidegree(vec![Rational::from(31), Rational::from(10)])
        .unwrap();
    let near = check_finite(&curve, &l, &opts).unwrap();
    assert!(!near.status.is_unstable());
    let far = check_finite(&curve, &l.scale(&Rational::from(3)), &opts).unwrap();
    assert!(far.status.is_unstable());
}

#[test]
fn twist_search_results_are_post_verified() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let opts = CheckOptions::default();
    let mut found = 0;
    for _ in 0..60 {
        let curve = stable_curve(&mut rng, 4);
        let degrees = positive_multidegree(&mut rng, &curve);
        // integral bases keep the search honest about embeddings
        let degrees = curve
            .multidegree(
                degrees
                    .values()
                    .iter()
                    .map(|d| Rational::from(d.numer().clone()) + Rational::from(1))
                    .collect(),
            )
            .unwrap();
        if let Some(outcome) = twist_search(&curve, &degrees, 3, &opts).unwrap() {
            found += 1;
            let twisted = degrees.add(&curve.twist_degrees(&outcome.twist).unwrap());
            let recheck = check_finite(&curve, &twisted, &opts).unwrap();
            assert!(!recheck.status.is_unstable());
            assert_eq!(recheck.status, outcome.verdict.status);
            assert_eq!(twisted.values(), &outcome.degrees[..]);
        }
    }
    assert!(found > 10, "search box too small to exercise the property");
}

//! Hull-membership versus exhaustive lattice sweeps, and invariances of the
//! one-parameter-subgroup weight and section height.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use chowstab::poly::Poly;
use chowstab::random::{random_support, small_torus_problem};
use chowstab::rational::Rational;
use chowstab::torus::{
    fiber_profile, random_instance, section_height, semistable_on_support, weight_on_support,
    FamilySection, TorusProblem,
};

/// Exhaustive oracle: nonnegative weight for every lattice one-parameter
/// subgroup in the box.
fn lattice_semistable(p: &TorusProblem, support: &[usize], radius: i64) -> bool {
    let t = p.rank();
    let mut lambda = vec![-radius; t];
    loop {
        if weight_on_support(p, support, &lambda).unwrap() < 0 {
            return false;
        }
        let mut k = t;
        loop {
            if k == 0 {
                return true;
            }
            k -= 1;
            if lambda[k] < radius {
                lambda[k] += 1;
                for v in lambda.iter_mut().skip(k + 1) {
                    *v = -radius;
                }
                break;
            }
        }
    }
}

#[test]
fn hull_membership_matches_bounded_lattice_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    let mut unstable_seen = 0;
    for _ in 0..400 {
        let p = small_torus_problem(&mut rng, 3, 7);
        let support = random_support(&mut rng, p.coordinate_count());
        let verdict = semistable_on_support(&p, &support).unwrap();
        let oracle = lattice_semistable(&p, &support, 5);
        assert_eq!(
            verdict.semistable, oracle,
            "hull vs lattice mismatch: chars {:?} support {:?}",
            p.characters(),
            support
        );
        if let Some(lambda) = &verdict.destabilizing {
            unstable_seen += 1;
            assert!(weight_on_support(&p, &support, lambda).unwrap() < 0);
        }
    }
    assert!(unstable_seen > 40, "sweep must exercise both verdicts");
}

#[test]
fn opposite_subgroups_have_nonnegative_weight_sum() {
    // w(lambda) + w(-lambda) = max pairing - min pairing >= 0, with
    // equality exactly when the support pairings all agree
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..200 {
        let p = small_torus_problem(&mut rng, 3, 7);
        let support = random_support(&mut rng, p.coordinate_count());
        let lambda: Vec<i64> = (0..p.rank())
            .map(|_| rand::Rng::gen_range(&mut rng, -5..=5))
            .collect();
        let plus = weight_on_support(&p, &support, &lambda).unwrap();
        let minus = weight_on_support(
            &p,
            &support,
            &lambda.iter().map(|v| -v).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(plus + minus >= 0);
        let pairings: Vec<i64> = support
            .iter()
            .map(|&i| {
                lambda
                    .iter()
                    .zip(&p.characters()[i])
                    .map(|(&l, &c)| l * c)
                    .sum()
            })
            .collect();
        let all_equal = pairings.windows(2).all(|w| w[0] == w[1]);
        assert_eq!(plus + minus == 0, all_equal);
    }
}

#[test]
fn section_height_invariant_under_common_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut nontrivial = 0;
    for index in 0..200u64 {
        let (p, s) = random_instance(9, index);
        let h = match section_height(&p, &s) {
            Ok(h) => h,
            Err(_) => continue,
        };
        // multiply every coordinate by the same polynomial and raise the
        // declared degree accordingly
        let factor: Poly = {
            let c0 = Rational::from(rand::Rng::gen_range(&mut rng, -2..=2i64));
            Poly::from_coeffs(vec![c0, Rational::one()])
        };
        let scaled = FamilySection {
            cocycle: s.cocycle.clone(),
            coordinates: s.coordinates.iter().map(|f| f.mul(&factor)).collect(),
            degree: s.degree + 1,
        };
        let h_scaled = section_height(&p, &scaled).unwrap();
        assert_eq!(h, h_scaled, "height must ignore base loci (index {index})");
        nontrivial += 1;
    }
    assert!(nontrivial > 150);
}

#[test]
fn profiles_enumerate_every_support_drop() {
    // every rational root of a reduced coordinate shows up as a special
    // fiber with the evaluated support
    for index in 0..120u64 {
        let (p, s) = random_instance(31, index);
        let Ok(profile) = fiber_profile(&p, &s) else {
            continue;
        };
        for special in &profile.special {
            if let chowstab::torus::SpecialLocus::Rational { value } = &special.at {
                // the reported support is a strict subset of the generic one
                assert!(special
                    .verdict
                    .support
                    .iter()
                    .all(|i| profile.generic.support.contains(i)));
                assert!(special.verdict.support.len() < profile.generic.support.len(),
                    "support must drop at {value} (index {index})");
            }
        }
    }
}

use proptest::prelude::*;

use splitfield::extension::{
    analyze_tower, coprime_degree_criterion, riemann_hurwitz_genus, subgroup_image_test, CoprimeVerdict, ExtensionSpec,
    Lhs, PlaceStatus, SubgroupVerdict,
};
use splitfield::oracle::{
    brute_force_count, count_kummer_solutions, count_lhs_solutions, verify_report, OracleOptions, Verification,
};
use splitfield::poly::{factorize, is_irreducible};
use splitfield::quasisym::{interpolate_orbit_assignment, is_quasisymmetric_semantic, OrbitAssignment};
use splitfield::{Error, FieldCtx, Poly};

fn field(choice: usize) -> FieldCtx {
    let (p, m, n) = [(2, 1, 2), (3, 1, 2), (2, 1, 3), (2, 2, 2), (5, 1, 2), (3, 1, 3)][choice];
    FieldCtx::new(p, m, n).unwrap()
}

fn poly(k: &FieldCtx, codes: &[u64]) -> Poly {
    Poly::from_coeffs(codes.iter().map(|&c| k.element_at(c % k.order()).unwrap()).collect())
}

fn full_trace(k: &FieldCtx, h: Poly, g: Poly) -> ExtensionSpec {
    ExtensionSpec::artin_schreier(k.clone(), Lhs::FullTrace, h, g, false)
}

/// Errors an analysis may legitimately end with on arbitrary input.
fn expected_rejection(e: &Error) -> bool {
    matches!(
        e,
        Error::Reducible(_)
            | Error::ConstantFieldExtension(_)
            | Error::NotCertified
            | Error::NotLowestTerms
            | Error::PerfectPower(_)
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn artin_schreier_agrees_with_oracle(
        choice in 0usize..6,
        h in prop::collection::vec(0u64..1 << 20, 1..9),
        g in prop::collection::vec(0u64..1 << 20, 1..4),
    ) {
        let k = field(choice);
        let (h, g) = (poly(&k, &h), poly(&k, &g));
        prop_assume!(!g.is_zero() && !h.is_zero());
        let spec = full_trace(&k, h, g);
        match spec.analyze(0) {
            Ok(rep) => {
                let o = brute_force_count(&spec, OracleOptions::default()).unwrap();
                prop_assert_eq!(verify_report(&k, &rep, &o), Verification::Verified);
                if let (Some(genus), Some(dd)) = (rep.genus, rep.deg_different) {
                    prop_assert_eq!(2 * genus as i64 - 2, dd as i64 - 2 * rep.degree as i64);
                }
                prop_assert!(rep.n_rational <= rep.degree * (k.order() + 1));
            }
            Err(e) => prop_assert!(expected_rejection(&e), "{e}"),
        }
    }

    #[test]
    fn kummer_agrees_with_oracle_and_is_tame(
        choice in 0usize..6,
        d_pick in 0usize..8,
        h in prop::collection::vec(0u64..1 << 20, 1..8),
        g in prop::collection::vec(0u64..1 << 20, 1..4),
    ) {
        let k = field(choice);
        let ds: Vec<u64> = (2..k.order()).filter(|d| (k.order() - 1).is_multiple_of(*d)).collect();
        prop_assume!(!ds.is_empty());
        let d = ds[d_pick % ds.len()];
        let (h, g) = (poly(&k, &h), poly(&k, &g));
        prop_assume!(!g.is_zero() && !h.is_zero());
        let spec = ExtensionSpec::kummer(k.clone(), d, h, g, false);
        match spec.analyze(0) {
            Ok(rep) => {
                let o = brute_force_count(&spec, OracleOptions::default()).unwrap();
                prop_assert_eq!(verify_report(&k, &rep, &o), Verification::Verified);
                for v in &rep.verdicts {
                    if let PlaceStatus::TameRamified { e, different_exponent } = v.status {
                        prop_assert_eq!(different_exponent, e - 1);
                        prop_assert!(e % k.p() != 0);
                    }
                }
                let dd = rep.deg_different.unwrap();
                prop_assert_eq!(riemann_hurwitz_genus(rep.degree, dd), Ok(rep.genus.unwrap()));
            }
            Err(e) => prop_assert!(expected_rejection(&e), "{e}"),
        }
    }

    #[test]
    fn tower_matches_direct_analysis(
        choice in prop::sample::select(vec![2usize, 3, 5]),
        h in prop::collection::vec(0u64..1 << 20, 2..12),
    ) {
        let k = field(choice);
        let spec = full_trace(&k, poly(&k, &h), Poly::one());
        if let (Ok(direct), Ok(t)) = (spec.analyze(0), analyze_tower(&spec, 0)) {
            prop_assert_eq!(t.deg_different, direct.deg_different);
            prop_assert_eq!(t.prefixes.last().unwrap(), &direct);
            for (i, pre) in t.prefixes.iter().enumerate() {
                prop_assert_eq!(pre.degree, k.p().pow(i as u32 + 1));
            }
        }
    }

    #[test]
    fn irreducibility_criteria_never_conflict(
        choice in 0usize..4,
        f in prop::collection::vec(0u64..1 << 20, 2..10),
    ) {
        let k = field(choice);
        let f = poly(&k, &f);
        let basis = Lhs::FullTrace.root_basis(&k).unwrap();
        if let CoprimeVerdict::IrreducibleCertified { .. } = coprime_degree_criterion(&k, &f) {
            prop_assert_eq!(subgroup_image_test(&k, &basis, &f).unwrap(), SubgroupVerdict::IrreducibleCertified);
        }
    }

    #[test]
    fn factorization_reassembles(choice in 0usize..6, f in prop::collection::vec(0u64..1 << 20, 2..10), seed in any::<u64>()) {
        let k = field(choice);
        let f = poly(&k, &f);
        prop_assume!(!f.is_zero());
        let fac = factorize(&f, &k, seed).unwrap();
        prop_assert_eq!(fac.expand(&k), f.clone());
        for (p, _) in &fac.factors {
            prop_assert!(p.is_monic() && is_irreducible(p, &k));
        }
        prop_assert_eq!(&fac, &factorize(&f, &k, seed ^ 1).unwrap());
    }

    #[test]
    fn orbit_constant_interpolants_are_quasisymmetric(choice in 0usize..6, values in prop::collection::vec(0u64..1 << 20, 64)) {
        let k = field(choice);
        let count = k.galois_orbits().len();
        let values = values.iter().cycle().take(count).map(|&v| k.element_at(v % k.order()).unwrap()).collect();
        let f = interpolate_orbit_assignment(&k, &OrbitAssignment { values }).unwrap();
        prop_assert!(is_quasisymmetric_semantic(&f, &k));
    }
}

#[test]
fn solution_counts_partition_the_field() {
    for choice in 0..6 {
        let k = field(choice);
        let b = Lhs::FullTrace.root_basis(&k).unwrap()[0];
        for lhs in [Lhs::FullTrace, Lhs::PStep(b)] {
            let total: u64 = k.elements().map(|c| count_lhs_solutions(&k, &lhs, c).unwrap()).sum();
            assert_eq!(total, k.order());
        }
        for d in (2..k.order()).filter(|d| (k.order() - 1).is_multiple_of(*d)) {
            let total: u64 = k.elements().map(|c| count_kummer_solutions(&k, d, c)).sum();
            assert_eq!(total, k.order());
        }
    }
}

use esym_core::esym::{elementary, EsymSpec};
use esym_core::groups::enumerate_group;
use esym_core::sampling::{candidate_rng, random_dense_nonmonomial, random_stab_element};
use esym_core::stabilizer::{decompose_stabilizer, is_stabilizer, rank_lemma_check};
use esym_core::{Error, Scalar};

#[test]
fn decomposition_inverts_the_matrix_realization() {
    for (n, r) in [(4, 3), (5, 4)] {
        let spec = EsymSpec::new(n, r).unwrap();
        for g in enumerate_group(n, r as u32) {
            let d = decompose_stabilizer(&g.to_matrix(), spec).unwrap();
            assert_eq!(d.to_element(), g);
            assert_eq!(d.to_matrix().unwrap(), g.to_matrix());
        }
    }
}

#[test]
fn group_law_matches_matrix_product() {
    let e = elementary(EsymSpec::new(5, 3).unwrap());
    for i in 0..50 {
        let mut rng = candidate_rng(3, i);
        let g = random_stab_element(&mut rng, 5, 3);
        let h = random_stab_element(&mut rng, 5, 3);
        let gh = g.product(&h).unwrap();
        assert_eq!(
            gh.to_matrix(),
            g.to_matrix().checked_mul(&h.to_matrix()).unwrap()
        );
        assert_eq!(
            g.product(&g.inverse()).unwrap(),
            esym_core::groups::StabElement::identity(5, 3)
        );
        assert!(is_stabilizer(&gh.to_matrix(), &e).unwrap());
    }
}

#[test]
fn dense_matrices_are_not_decomposable() {
    let spec = EsymSpec::new(5, 3).unwrap();
    for i in 0..20 {
        let m = random_dense_nonmonomial(&mut candidate_rng(11, i), 5);
        assert_eq!(decompose_stabilizer(&m, spec), Err(Error::NotStabilizer));
    }
}

#[test]
fn rank_criterion_with_cyclotomic_entries() {
    let spec = EsymSpec::new(5, 3).unwrap();
    let z = Scalar::zeta(3);
    let zero = Scalar::zero();
    let single = [
        zero.clone(),
        z.clone(),
        zero.clone(),
        zero.clone(),
        zero.clone(),
    ];
    let rep = rank_lemma_check(spec, &single).unwrap();
    assert!(rep.degree_condition && rep.consistent());
    // e_2(1, zeta, zeta^2) = 0, but e_3 = zeta^3 = 1 still breaks the condition
    let three = [Scalar::one(), z.clone(), z.pow(2), zero.clone(), zero];
    let rep = rank_lemma_check(spec, &three).unwrap();
    assert_eq!(rep.rho_value, 3);
    assert!(!rep.degree_condition && rep.witness_b.is_some());
}

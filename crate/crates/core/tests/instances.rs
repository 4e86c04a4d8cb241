use frobpair::dsl::check_pair_with_script;
use frobpair::instances::*;
use frobpair::{check_duality, AxiomReport, CheckId, Error, FieldSpec, FrobeniusPairData, Result};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn every_check(p: &FrobeniusPairData) -> Result<AxiomReport> {
    let mut r = p.check_left_frobenius()?;
    r.extend(p.check_right_frobenius()?);
    r.extend(p.check_commutative()?);
    r.extend(p.check_derived_right_structure()?);
    r.extend(check_duality(p)?);
    Ok(r)
}

fn verdicts(r: &AxiomReport) -> Vec<(CheckId, bool)> {
    r.results.iter().map(|c| (c.id, c.passed())).collect()
}

#[test]
fn catalog_passes_left_axioms() {
    for e in catalog() {
        let r = e.pair.check_left_frobenius().unwrap();
        assert!(r.all_pass(), "{}: {:?}", e.name, r.failures().next());
    }
}

#[test]
fn conjugation_preserves_every_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..100 {
        let mut p = random_instance(k, SizeBounds { max_total_dim: 4 });
        if rng.gen_bool(0.5) {
            let m = frobpair::StructureMap::ALL[rng.gen_range(0..6)];
            let coords = p.map(m).coordinates();
            if !coords.is_empty() {
                let (d, r, c) = coords[rng.gen_range(0..coords.len())];
                let new = fresh_scalar(&mut rng, &p.map(m).entry(d, r, c));
                p = p.mutate(m, d, r, c, new).unwrap();
            }
        }
        let gx = random_automorphism(&mut rng, &p.x);
        let gy = random_automorphism(&mut rng, &p.y);
        let c = conjugate(&p, &gx, &gy).unwrap();
        assert_eq!(
            verdicts(&every_check(&p).unwrap()),
            verdicts(&every_check(&c).unwrap()),
            "instance {k}"
        );
    }
}

#[test]
fn shadow_spheres_are_self_dual() {
    for field in [FieldSpec::Rationals, FieldSpec::prime(2).unwrap()] {
        for n in 1..=4 {
            let p = manifold_shadow_pair(&sphere_cohomology(n, field).unwrap()).unwrap();
            assert!(frobpair::dual_comparison(&p).unwrap().is_invertible());
        }
    }
}

#[test]
fn tensor_products() {
    let q = FieldSpec::Rationals;
    let c2 = catalog_instance("c2", q).unwrap().pair;
    let dual = catalog_instance("truncpoly2", q).unwrap().pair;
    let t = tensor_product(&c2, &dual).unwrap();
    assert!(t.check_left_frobenius().unwrap().all_pass());
    let triv = trivial_pair(q);
    assert_eq!(
        verdicts(&every_check(&tensor_product(&c2, &triv).unwrap()).unwrap()),
        verdicts(&every_check(&c2).unwrap())
    );
    let f2 = catalog_instance("c2", FieldSpec::prime(2).unwrap())
        .unwrap()
        .pair;
    assert!(matches!(
        tensor_product(&c2, &f2),
        Err(Error::FieldMismatch(..))
    ));
}

#[test]
fn script_matches_checker_on_catalog() {
    for e in catalog() {
        let script = check_pair_with_script(&e.pair).unwrap();
        let mut report = e.pair.check_left_frobenius().unwrap();
        report.extend(e.pair.check_right_frobenius().unwrap());
        report.extend(e.pair.check_commutative().unwrap());
        report.extend(e.pair.check_derived_right_structure().unwrap());
        report.extend(check_duality(&e.pair).unwrap());
        for s in &script {
            let id: CheckId = s.label.parse().unwrap();
            assert_eq!(
                report.get(id).unwrap().witness,
                s.witness,
                "{} {}",
                e.name,
                id
            );
        }
    }
}

mod common;

use common::*;
use proptest::prelude::*;
use superybe::catalog::FIXTURES;
use superybe::format::{emit, parse, Document};
use superybe::graded::scalar::{format_scalar, int, parse_scalar, ratio};
use superybe::lie::{check_lie_axioms, semidirect_product};
use superybe::oop::{is_oop, oop_holds, parity_dual_oop};
use superybe::rmat::{is_pan_supersymmetric, rmatrix_to_operator, operator_to_tensor, scybe_defect};

fn pick<T>(items: &[T], k: usize) -> &T {
    &items[k % items.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_text_round_trip(n in -1000i64..1000, d in 1i64..50) {
        let x = ratio(n, d);
        prop_assert_eq!(parse_scalar(&format_scalar(&x)), Some(x));
    }

    #[test]
    fn defect_matches_oracle(seed: u64, k: usize) {
        let mut r = rng(seed);
        let cats = catalog_algebras();
        let g = &pick(&cats, k).algebra;
        let p = parity(&mut r);
        let t = random_tensor(&mut r, g, p);
        prop_assert_eq!(scybe_defect(&t), naive_scybe(&t));
    }

    #[test]
    fn oop_matches_oracle(seed: u64, k: usize, j: usize) {
        let mut r = rng(seed);
        let cats = catalog_algebras();
        let cat = pick(&cats, k);
        let (_, rho) = pick(&cat.reps, j);
        let p = parity(&mut r);
        let t = random_map(&mut r, rho.space(), cat.algebra.space(), p);
        prop_assert_eq!(is_oop(&t, rho).unwrap().holds, koszul_is_oop(&t, rho));
    }

    #[test]
    fn verdict_survives_parity_duality_and_scaling(seed: u64, k: usize, j: usize, c in 1i64..5) {
        let mut r = rng(seed);
        let cats = catalog_algebras();
        let cat = pick(&cats, k);
        let (_, rho) = pick(&cat.reps, j);
        let p = parity(&mut r);
        let t = random_map(&mut r, rho.space(), cat.algebra.space(), p);
        let holds = oop_holds(&t, rho).unwrap();
        let (ts, rho_s) = parity_dual_oop(&t, rho);
        prop_assert_eq!(ts.parity(), p.flip());
        prop_assert_eq!(oop_holds(&ts, &rho_s).unwrap(), holds);
        prop_assert_eq!(oop_holds(&t.scale(&int(-c)), rho).unwrap(), holds);
    }

    #[test]
    fn twist_is_an_involution(seed: u64, k: usize) {
        let mut r = rng(seed);
        let cats = catalog_algebras();
        let g = &pick(&cats, k).algebra;
        let p = parity(&mut r);
        let t = random_tensor(&mut r, g, p);
        prop_assert!(t.tensor().twist().twist().same_coefficients(t.tensor()));
        let pan = random_pan(&mut r, g, p);
        prop_assert!(is_pan_supersymmetric(&pan));
    }

    #[test]
    fn tensor_operator_round_trip(seed: u64, k: usize) {
        let mut r = rng(seed);
        let cats = catalog_algebras();
        let g = &pick(&cats, k).algebra;
        let p = parity(&mut r);
        let t = random_tensor(&mut r, g, p);
        let back = operator_to_tensor(g, &rmatrix_to_operator(&t)).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn document_round_trip(seed: u64, k: usize, j: usize) {
        let mut r = rng(seed);
        let cats = catalog_algebras();
        let cat = pick(&cats, k);
        let (_, rho) = pick(&cat.reps, j);
        let mut doc = Document::new(cat.algebra.clone());
        doc.add_space("V", rho.space().clone()).unwrap();
        doc.add_rep("rho", "V", rho).unwrap();
        let p = parity(&mut r);
        let t = random_map(&mut r, rho.space(), cat.algebra.space(), p);
        doc.add_map("T", "V", "g", &t).unwrap();
        let p = parity(&mut r);
        doc.add_tensor("r", &random_tensor(&mut r, &cat.algebra, p)).unwrap();
        let text = emit(&doc);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(emit(&back), text);
    }
}

#[test]
fn semidirect_products_are_lie_superalgebras() {
    for cat in catalog_algebras() {
        for (name, rho) in &cat.reps {
            let sd = semidirect_product(rho);
            let report = check_lie_axioms(&sd.algebra);
            assert!(report.passed(), "{} ⋉ {name}: {report}", cat.name);
        }
    }
}

#[test]
fn fixture_documents_survive_text() {
    for name in FIXTURES {
        let doc = superybe::catalog::load_fixture(name).unwrap().document;
        assert_eq!(parse(&emit(&doc)).unwrap(), doc, "{name}");
    }
}

//! Desk catalog invariants and the worked values of the harness.

use crownkit::lattice::{chief_series, generated, Subgroup};
use crownkit::permcore::{indices_of, is_soluble};
use crownkit::verify::lemmas::{check_reductions, frattini_trivial};
use crownkit::verify::{builtin, desk_catalog, parse_catalog, sigma_rho_report, Verdict};
use crownkit::{PermGroup, Permutation};

fn desk() -> Vec<PermGroup> {
    let entries = desk_catalog().unwrap();
    entries.iter().map(|e| e.build_in(&entries).unwrap()).collect()
}

#[test]
fn solubility_agrees_with_chief_factors() {
    for g in desk().iter().filter(|g| g.order() <= 200) {
        let by_series = chief_series(g, 0).unwrap().factors.iter().all(|f| f.is_abelian);
        assert_eq!(is_soluble(g).unwrap(), by_series, "{}", g.name());
    }
}

#[test]
fn reductions_on_small_groups() {
    for g in desk().iter().filter(|g| g.order() <= 100) {
        let row = check_reductions(g).unwrap();
        assert_eq!(row.verdict, Verdict::Pass, "{}: {}", g.name(), row.note);
    }
}

#[test]
fn catalog_examples() {
    let c4 = parse_catalog(r#"{"name":"C4","degree":4,"generators":[[1,2,3,0]]}"#).unwrap();
    assert_eq!(c4[0].build().unwrap().order(), 4);
    assert_eq!(builtin("Sym(4)").unwrap().order(), 24);
    assert!(parse_catalog(r#"{"name":"x","degree":3,"generators":[[0,0,2]]}"#).is_err());
}

#[test]
fn split_examples() {
    let s4 = builtin("Sym(4)").unwrap();
    let r = sigma_rho_report(&s4, &Subgroup::trivial(&s4)).unwrap();
    assert_eq!((r.sigma, r.rho, r.max_count), (Some(4), Some(4), Some(8)));
    let v4 = builtin("ElemAbelian(2,2)").unwrap();
    let r = sigma_rho_report(&v4, &Subgroup::trivial(&v4)).unwrap();
    assert_eq!((r.sigma, r.rho), (Some(0), Some(3)));
    // a maximal subgroup has exactly one maximal overgroup
    let gens = [Permutation::parse_cycles("(1 2 3)", 4).unwrap(), Permutation::parse_cycles("(1 2)", 4).unwrap()];
    let s3 = generated(&s4, &indices_of(&s4, &gens).unwrap());
    let r = sigma_rho_report(&s4, &s3).unwrap();
    assert_eq!(r.sigma.unwrap() + r.rho.unwrap(), 1);
}

#[test]
fn frattini_free_members() {
    let names: Vec<String> =
        desk().iter().filter(|g| g.order() <= 24 && frattini_trivial(g).unwrap()).map(|g| g.name().to_string()).collect();
    for n in ["C2", "C6", "S3", "S4", "A4", "E2^2", "D10"] {
        assert!(names.iter().any(|x| x == n), "{n} missing from {names:?}");
    }
    for n in ["C4", "Q8", "D8", "C8"] {
        assert!(!names.iter().any(|x| x == n), "{n} has trivial Frattini subgroup?");
    }
}

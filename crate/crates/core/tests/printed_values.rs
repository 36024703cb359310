//! Statements printed in the source text, checked one by one. Where the text
//! and the computation disagree, the test pins the computed value and names
//! the discrepancy, so a regression in either direction is visible.

use hopf12::bosonization::biproduct_report;
use hopf12::catalog::{build_c, build_c_dual, by_name, double, dual_table_diff, phi_iso, verify_comatrix_relations, NAMES};
use hopf12::hopfcore::{grouplikes, verify_hopf, Level};
use hopf12::nichols::{printed_presentation, presented_basis, SymmetrizerStack};
use hopf12::repmod::{
    character, ext1, in_index_set, is_simple, module_by_name, p_corrected, p_printed, tensor_module, two_dim_census, v_ij,
};
use hopf12::scalars::{NamedConstants, ThetaSign};
use hopf12::ydcat::{module_braiding, verify_paper_tables};

#[test]
fn twelve_dimensional_algebras_are_hopf() {
    for name in ["A0", "A1", "B0", "B1", "C"] {
        let h = by_name(name, ThetaSign::Plus).unwrap();
        assert_eq!(h.dim(), 12, "{name}");
        assert!(verify_hopf(&h, Level::Hopf).all_pass(), "{name}");
    }
    assert!(NAMES.contains(&"D"));
}

#[test]
fn grouplikes_of_c_and_its_dual() {
    let c = build_c();
    let g: Vec<String> = grouplikes(&c).iter().map(|x| c.render(x)).collect();
    assert_eq!(g.len(), 2);
    let (one, a3) = (c.render(&c.basis_vec(0)), c.render(&c.basis_vec(3)));
    assert_eq!(c.basis[3], "a3");
    assert!(g.contains(&one) && g.contains(&a3), "{g:?}");
    assert_eq!(grouplikes(&build_c_dual()).len(), 6);
}

#[test]
fn phi_is_an_isomorphism_for_both_signs() {
    for s in [ThetaSign::Plus, ThetaSign::Minus] {
        assert!(phi_iso(&NamedConstants::new(s)).is_ok(), "θ {s}");
    }
}

/// Three printed rows of the dual comultiplication differ from the dual of `C`.
#[test]
fn printed_dual_table_has_three_wrong_rows() {
    let rows: std::collections::BTreeSet<String> = dual_table_diff().into_iter().map(|m| m.row).collect();
    assert_eq!(rows.len(), 3, "{rows:?}");
}

/// One printed comatrix identity uses the wrong exponent.
#[test]
fn comatrix_relations_report_the_exponent_misprint() {
    let rep = verify_comatrix_relations(&NamedConstants::new(ThetaSign::Plus));
    let failing: Vec<&str> = rep.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failing.len(), 1, "{failing:?}");
}

#[test]
fn double_has_dimension_144_and_its_presentation_holds() {
    for s in [ThetaSign::Plus, ThetaSign::Minus] {
        let d = double(s);
        assert_eq!(d.dim(), 144);
        assert!(d.relation_report.all_pass());
        assert_eq!(d.pbw_rank, 144);
    }
}

#[test]
fn two_dim_modules_are_simple_exactly_off_the_diagonal_condition() {
    let d = double(ThetaSign::Plus);
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(in_index_set(i, j), (3 * i - j).rem_euclid(6) != 0);
            if in_index_set(i, j) {
                assert!(is_simple(&v_ij(d, i, j).unwrap()).unwrap(), "V{i}{j}");
            }
        }
    }
}

#[test]
fn ext_vanishes_between_characters_and_two_dim_simples() {
    let d = double(ThetaSign::Plus);
    for (i, j) in [(0, 1), (3, 1), (2, 4), (5, 5)] {
        let v = v_ij(d, i, j).unwrap();
        for l in 0..6 {
            assert_eq!(ext1(&v, &character(d, l)).dim, 0, "Ext¹(V{i}{j}, chi{l})");
            assert_eq!(ext1(&character(d, l), &v).dim, 0, "Ext¹(chi{l}, V{i}{j})");
        }
    }
}

/// Printed: arrows `chi^i → chi^{i±1}` and `chi^i → chi^{i+3}`. Computed: no `+3` arrows.
#[test]
fn character_ext_has_no_plus_three_arrows() {
    let d = double(ThetaSign::Plus);
    for i in 0..6 {
        assert_eq!(ext1(&character(d, i), &character(d, i + 1)).dim, 1);
        assert_eq!(ext1(&character(d, i), &character(d, i + 5)).dim, 1);
        assert_eq!(ext1(&character(d, i), &character(d, i + 3)).dim, 0);
    }
}

/// The printed four-dimensional module violates `x² = 1 − g²`; the corrected one is a module.
#[test]
fn printed_projective_needs_a_correction() {
    let d = double(ThetaSign::Plus);
    assert!(p_printed(d).check_relations().is_err());
    assert!(p_corrected(d).check_relations().is_ok());
    assert!(module_by_name(d, "Pprinted").unwrap().check_relations().is_err());
}

/// Of the three printed two-dimensional families, the one with top shifted by 3 is not a module.
#[test]
fn two_dim_census_matches_the_extension_computation() {
    let d = double(ThetaSign::Plus);
    let census = two_dim_census(d);
    assert_eq!(census.len(), 18);
    let certified = census.iter().filter(|c| c.printed_certified).count();
    assert_eq!(certified, 12);
    for c in &census {
        assert_eq!(c.printed_certified, c.ext_dim == 1, "M{}{:?}", c.l, c.kind);
    }
}

#[test]
fn printed_simple_tables_match_and_projective_tables_differ() {
    for s in [ThetaSign::Plus, ThetaSign::Minus] {
        let cmp = verify_paper_tables(s);
        assert!(cmp.computed_objects_certified);
        assert!(cmp.mismatches.iter().all(|m| m.module.starts_with('P')), "θ {s}");
        assert_eq!(cmp.mismatches.len(), 30, "θ {s}");
    }
}

#[test]
fn tensor_of_characters_braids_by_sign() {
    let d = double(ThetaSign::Plus);
    for i in 0..6 {
        for j in 0..6 {
            let m = tensor_module(&character(d, i), &character(d, j));
            let b = module_braiding(&m).unwrap();
            let expected = if (i + j) % 2 == 0 { 1 } else { -1 };
            assert_eq!(b.braiding[(0, 0)], hopf12::scalars::Scalar::int(expected));
        }
    }
}

#[test]
fn printed_presentations_give_bases_of_dimension_six() {
    let d = double(ThetaSign::Plus);
    for name in ["V31", "V35", "V22", "V24"] {
        let b = module_braiding(&module_by_name(d, name).unwrap()).unwrap();
        let stack = SymmetrizerStack::new(&b, 5, 1024);
        let (basis, hilbert) = presented_basis(&printed_presentation(name).unwrap(), &stack).unwrap();
        assert_eq!(basis.len(), 6, "{name}");
        assert_eq!(hilbert, vec![1, 2, 2, 1], "{name}");
    }
}

#[test]
fn quantum_plane_biproduct_relations_and_coproducts() {
    let d = double(ThetaSign::Plus);
    let (_, r) = biproduct_report(d, "V22").unwrap();
    assert_eq!(r.dim, 72);
    let holds = |name: &str| r.identities.iter().find(|i| i.identity == name).map(|i| i.holds);
    assert_eq!(holds("ax = ξ²xa"), Some(true));
    assert_eq!(holds("x² − ξ²y² = 0"), Some(true));
    assert_eq!(holds("Δ(x^3)"), Some(true));
    assert!(r.all_pass());
}

/// The long `Δ(y³)` formula holds; the auxiliary coaction of `v1²` and the
/// self-braiding of `v1v2 − ξ²v2v1` do not.
#[test]
fn cube_relation_biproduct_identities() {
    let d = double(ThetaSign::Plus);
    let (_, r) = biproduct_report(d, "V31").unwrap();
    let holds = |name: &str| r.identities.iter().find(|i| i.identity == name).map(|i| i.holds);
    assert_eq!(holds("Δ(y^3)"), Some(true));
    assert_eq!(holds("ay + ξya = Λ⁻¹xba^3"), Some(true));
    assert_eq!(holds("δ(v1²)"), Some(false));
    assert_eq!(holds("c(r⊗r) = r⊗r for r = v1v2 − ξ²v2v1"), Some(false));
    assert_eq!(holds("c(v2³⊗v2³) = v2³⊗v2³ modulo the quadratic relations"), Some(true));
    assert!(r.all_pass());
}

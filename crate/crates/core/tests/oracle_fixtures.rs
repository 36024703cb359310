//! Values frozen from an independent prototype implementation (dense exact
//! matrices over Q(ξ) in Python, written separately from this crate). The
//! fixture file stores every two-dimensional simple's braiding, its
//! symmetrizer ranks through degree 5, and the Ext¹ table on characters.

use hopf12::catalog::double;
use hopf12::nichols::SymmetrizerStack;
use hopf12::repmod::{character, ext1, index_set, v_ij};
use hopf12::scalars::{Scalar, ThetaSign};
use hopf12::ydcat::module_braiding;
use serde_json::Value;

fn oracle() -> Value {
    serde_json::from_str(include_str!("fixtures/oracle.json")).expect("fixture parses")
}

fn scalar(v: &Value) -> Scalar {
    v.as_str().expect("literal").parse().expect("scalar literal")
}

#[test]
fn braidings_of_two_dim_simples_match_prototype() {
    let o = oracle();
    let d = double(ThetaSign::Plus);
    for (i, j) in index_set() {
        let name = format!("V{i}{j}");
        let fixture = &o["v"][&name];
        assert_eq!(fixture["yd_violations"], 0, "{name}");
        let b = module_braiding(&v_ij(d, i, j).unwrap()).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(b.braiding[(r, c)], scalar(&fixture["braiding"][r][c]), "{name} entry ({r},{c})");
            }
        }
    }
}

#[test]
fn symmetrizer_ranks_match_prototype_through_degree_five() {
    let o = oracle();
    let d = double(ThetaSign::Plus);
    for (i, j) in index_set() {
        let name = format!("V{i}{j}");
        let expected: Vec<usize> =
            o["v"][&name]["ranks"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap() as usize).collect();
        let b = module_braiding(&v_ij(d, i, j).unwrap()).unwrap();
        let stack = SymmetrizerStack::new(&b, 5, 1024);
        assert_eq!(stack.ranks, expected, "{name}");
    }
}

#[test]
fn character_ext_table_matches_prototype_for_both_signs() {
    let o = oracle();
    for (sign, key) in [(ThetaSign::Plus, "plus"), (ThetaSign::Minus, "minus")] {
        let d = double(sign);
        for i in 0..6 {
            for j in 0..6 {
                let e = ext1(&character(d, i), &character(d, j)).dim as u64;
                assert_eq!(Some(e), o["ext_characters"][key][i as usize][j as usize].as_u64(), "Ext¹(chi{i}, chi{j}) θ {key}");
            }
        }
    }
}

/// Longer rank sequences reproduced by the prototype for the simples whose
/// Nichols algebras the printed text leaves open.
#[test]
fn open_cases_have_finite_palindromic_ranks() {
    let d = double(ThetaSign::Plus);
    let cases: [((i64, i64), &[usize]); 2] = [((4, 1), &[1, 2, 4, 4, 4, 2, 1, 0]), ((1, 4), &[1, 2, 4, 4, 4, 2, 1, 0])];
    for ((i, j), expected) in cases {
        let b = module_braiding(&v_ij(d, i, j).unwrap()).unwrap();
        let stack = SymmetrizerStack::new(&b, 7, 1 << 7);
        assert_eq!(stack.ranks, expected, "V{i}{j}");
    }
}

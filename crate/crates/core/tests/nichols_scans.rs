//! Finiteness verdicts, infinitude witnesses and the cases left open in print.

use hopf12::catalog::double;
use hopf12::nichols::{indecomposable_infinite_scan, nichols_report, simple_witness_scan, Verdict, WitnessLine};
use hopf12::repmod::{character, module_by_name, v_ij};
use hopf12::scalars::ThetaSign;
use hopf12::ydcat::module_braiding;

fn report(name: &str, maxdeg: usize, budget: usize) -> hopf12::nichols::NicholsReport {
    let b = module_braiding(&module_by_name(double(ThetaSign::Plus), name).unwrap()).unwrap();
    nichols_report(&b, maxdeg, budget, false)
}

#[test]
fn odd_characters_give_exterior_algebras_and_even_ones_polynomial_algebras() {
    let d = double(ThetaSign::Plus);
    for k in 0..6 {
        let b = module_braiding(&character(d, k)).unwrap();
        let r = nichols_report(&b, 6, 1024, false);
        if k % 2 == 1 {
            assert_eq!(r.verdict, Verdict::Finite { dim: 2 });
            assert_eq!(r.ranks, vec![1, 1, 0, 0, 0, 0, 0]);
        } else {
            assert_eq!(r.verdict, Verdict::Infinite { witness: 0 });
            assert!(r.ranks.iter().all(|&x| x == 1));
        }
    }
}

#[test]
fn projective_covers_have_growing_ranks() {
    assert_eq!(report("P0", 4, 1024).ranks, vec![1, 4, 10, 22, 43]);
    assert_eq!(report("P1", 4, 1024).ranks, vec![1, 4, 12, 30, 66]);
}

#[test]
fn witness_scan_covers_listed_simples_projectives_and_duals() {
    let scan = simple_witness_scan(double(ThetaSign::Plus), 6).unwrap();
    assert_eq!(scan.listed.len(), 12);
    assert!(scan.listed.iter().all(|w| w.witness == Some(0)));
    assert_eq!(scan.projectives.iter().map(|w| w.witness).collect::<Vec<_>>(), vec![Some(3), Some(2), Some(3), Some(2), Some(3), Some(2)]);
    assert_eq!(scan.duals.len(), 6);
    assert!(scan.all_witnessed());
    assert!(scan.undecided.iter().all(|r| matches!(r.verdict, Verdict::Undecided { maxdeg: 6 })));
}

#[test]
fn two_dim_indecomposables_are_witnessed_on_socle_or_top() {
    let scan = indecomposable_infinite_scan(double(ThetaSign::Plus));
    assert_eq!(scan.len(), 18);
    for w in &scan {
        if w.module.ends_with("pm") {
            assert!(!w.is_module, "{}", w.module);
            assert!(w.witness.is_none());
        } else {
            let l: u32 = w.module[1..2].parse().unwrap();
            let line = if l % 2 == 0 { WitnessLine::Socle } else { WitnessLine::Top };
            assert_eq!(w.witness, Some(line), "{}", w.module);
        }
    }
}

/// At degree 6 these are undecided; deeper, the symmetrizer vanishes.
#[test]
fn open_cases_are_finite_at_higher_degree() {
    for name in ["V14", "V45", "V41", "V12"] {
        let r = report(name, 7, 1 << 7);
        assert_eq!(r.ranks, vec![1, 2, 4, 4, 4, 2, 1, 0], "{name}");
        assert_eq!(r.verdict, Verdict::Finite { dim: 18 });
    }
    for name in ["V11", "V42", "V44", "V15"] {
        let r = report(name, 10, 1 << 10);
        assert_eq!(r.ranks, vec![1, 2, 4, 5, 6, 6, 5, 4, 2, 1, 0], "{name}");
        assert_eq!(r.verdict, Verdict::Finite { dim: 36 });
        assert_eq!(r.palindromic, Some(true));
    }
}

#[test]
fn verdicts_do_not_depend_on_the_sign_of_theta() {
    for (i, j) in [(3, 1), (1, 0), (4, 1), (2, 5)] {
        let ranks: Vec<Vec<usize>> = [ThetaSign::Plus, ThetaSign::Minus]
            .iter()
            .map(|&s| {
                let b = module_braiding(&v_ij(double(s), i, j).unwrap()).unwrap();
                nichols_report(&b, 5, 1024, false).ranks
            })
            .collect();
        assert_eq!(ranks[0], ranks[1], "V{i}{j}");
    }
}

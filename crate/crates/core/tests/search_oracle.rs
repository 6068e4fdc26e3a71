use proptest::prelude::*;
use rado_core::closed_forms::{r2_single_rhs, RadoResult};
use rado_core::rado_theorems::{r2_unit, rado_general};
use rado_core::search::{
    achievable_sums, compute_rado, compute_rado_with, export_cnf, find_mono_solution,
    has_mono_solution, SearchOptions,
};
use rado_core::{Color, Coloring, Equation};

/// Every weighted total over tuples drawn from `class`, by odometer.
fn naive_totals(class: &[u64], coeffs: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    if class.is_empty() {
        return out;
    }
    let mut idx = vec![0usize; coeffs.len()];
    loop {
        out.push(coeffs.iter().zip(&idx).map(|(c, &i)| c * class[i]).sum());
        let mut p = 0;
        loop {
            if p == idx.len() {
                return out;
            }
            idx[p] += 1;
            if idx[p] < class.len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

fn naive_has_mono(eq: &Equation, coloring: &Coloring) -> bool {
    [Color::Red, Color::Blue].into_iter().any(|color| {
        let class = coloring.class(color);
        let left = naive_totals(&class, eq.lhs());
        let right = naive_totals(&class, eq.rhs());
        left.iter().any(|t| right.contains(t))
    })
}

/// Least r such that every coloring of [r] has a monochromatic solution.
fn naive_rado(eq: &Equation, limit: usize) -> Option<u64> {
    (1..=limit)
        .find(|&r| Coloring::all_canonical(r).all(|c| naive_has_mono(eq, &c)))
        .map(|r| r as u64)
}

fn small_equations() -> Vec<Equation> {
    [
        "1,1=1",
        "1,1=2",
        "1,1=3",
        "1,1,1=1",
        "1,1,1=2",
        "1,1,1=3",
        "1,2=1",
        "1,1=1,1",
        "1,1,1=1,1",
        "1,1=1,2",
        "1,1=2,2",
        "1,3=2",
        "2,2=1,3",
        "1,1,1,1=1",
        "1,1,1,1=3",
        "1,1,1=1,1,1",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

#[test]
fn mono_check_matches_naive_on_all_colorings() {
    for eq in small_equations() {
        for r in 1..=6 {
            for c in Coloring::all_canonical(r) {
                for coloring in [c.clone(), c.swapped()] {
                    assert_eq!(
                        has_mono_solution(&eq, &coloring).unwrap(),
                        naive_has_mono(&eq, &coloring),
                        "{eq} under {coloring}"
                    );
                }
            }
        }
    }
}

#[test]
fn search_matches_naive_rado() {
    for eq in small_equations() {
        let naive = naive_rado(&eq, 14);
        let outcome = compute_rado(&eq, 14).unwrap();
        assert_eq!(outcome.rado, naive, "{eq}");
        if let Some(v) = naive.filter(|&v| v > 1) {
            let w = outcome.witness.unwrap();
            assert_eq!(w.r() as u64, v - 1);
            // the search returns the lexicographically least valid coloring
            let least = Coloring::all_canonical(v as usize - 1).find(|c| !naive_has_mono(&eq, c));
            assert_eq!(Some(w), least, "{eq}");
        }
    }
}

#[test]
fn single_rhs_closed_form_matches_search() {
    let mut checked = 0;
    for m in 3..=9u64 {
        for a in 1..=20u64 {
            let RadoResult::Exact { value, .. } = r2_single_rhs(&m, &a).unwrap() else {
                continue;
            };
            if value > 30 {
                continue;
            }
            let eq = Equation::single_rhs(m as usize, a).unwrap();
            let outcome = compute_rado(&eq, 40).unwrap();
            assert_eq!(outcome.rado, Some(value), "R2({m},{a})");
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn unit_closed_form_matches_search() {
    for n in 1..=10u64 {
        for k in 1..=10u64 {
            if n + k < 3 {
                continue;
            }
            let value = *r2_unit(&n, &k).unwrap().exact_value().unwrap();
            if value > 26 {
                continue;
            }
            let eq = Equation::unit(n as usize, k as usize).unwrap();
            assert_eq!(
                compute_rado(&eq, 40).unwrap().rado,
                Some(value),
                "r2({n},{k})"
            );
        }
    }
}

#[test]
fn general_results_admit_the_search_value() {
    for (n, rhs) in [
        (2u64, vec![1u64, 2]),
        (2, vec![2, 2]),
        (3, vec![1, 4]),
        (3, vec![2, 3]),
        (3, vec![1, 1, 2]),
        (4, vec![1, 2]),
        (5, vec![5, 5]),
        (2, vec![1, 3]),
        (3, vec![2, 4]),
    ] {
        let eq = Equation::new(vec![1; n as usize], rhs.clone()).unwrap();
        let found = compute_rado(&eq, 60).unwrap().rado.unwrap();
        let r = rado_general(&n, &rhs).unwrap();
        assert!(r.admits(&found), "n={n}, rhs={rhs:?}: {r:?} vs {found}");
    }
}

#[test]
fn guo_sun_values_by_search() {
    for (eq, expected) in [("1,2=1", 11), ("2,3=1", 53)] {
        let eq: Equation = eq.parse().unwrap();
        assert_eq!(compute_rado(&eq, 80).unwrap().rado, Some(expected));
    }
}

#[test]
fn result_does_not_depend_on_cutoff_or_threads() {
    for eq in small_equations() {
        let base = compute_rado(&eq, 40).unwrap();
        for max_r in [base.rado.unwrap() + 1, 60] {
            let other = compute_rado(&eq, max_r).unwrap();
            assert_eq!(other.rado, base.rado);
            assert_eq!(other.witness, base.witness);
        }
        for threads in [1, 3, 8] {
            let other = compute_rado_with(&eq, SearchOptions::new(40).threads(threads)).unwrap();
            assert_eq!(
                (other.rado, other.witness),
                (base.rado, base.witness.clone())
            );
        }
    }
}

#[test]
fn cutoff_reports_a_lower_bound() {
    let eq: Equation = "1,1,1,1=1".parse().unwrap();
    let outcome = compute_rado(&eq, 10).unwrap();
    assert!(outcome.cutoff_hit);
    assert_eq!(outcome.rado, None);
    assert_eq!(outcome.lower_bound, Some(11));
    assert!(!has_mono_solution(&eq, outcome.witness.as_ref().unwrap()).unwrap());
}

#[test]
fn cnf_satisfiable_exactly_below_the_rado_number() {
    for eq in small_equations() {
        let rado = compute_rado(&eq, 40).unwrap().rado.unwrap();
        assert!(rado > 1 || compute_rado(&eq, 40).unwrap().witness.is_none());
        for r in 1..=(rado + 1).min(14) {
            let cnf = export_cnf(&eq, r).unwrap();
            let model = cnf.solve_exhaustive().unwrap();
            assert_eq!(model.is_some(), r < rado, "{eq} at r={r}");
            if let Some(c) = model {
                assert!(!has_mono_solution(&eq, &c).unwrap());
            }
        }
    }
}

fn arb_equation() -> impl Strategy<Value = Equation> {
    (
        proptest::collection::vec(1u64..4, 1..4),
        proptest::collection::vec(1u64..4, 1..4),
    )
        .prop_filter("at least three variables", |(l, r)| l.len() + r.len() >= 3)
        .prop_map(|(l, r)| Equation::new(l, r).unwrap())
}

fn arb_coloring() -> impl Strategy<Value = Coloring> {
    proptest::collection::vec(any::<bool>(), 1..14).prop_map(|bits| {
        Coloring::new(
            bits.into_iter()
                .map(|b| if b { Color::Blue } else { Color::Red })
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn swapping_colors_is_invisible(eq in arb_equation(), c in arb_coloring()) {
        prop_assert_eq!(has_mono_solution(&eq, &c).unwrap(), has_mono_solution(&eq, &c.swapped()).unwrap());
    }

    #[test]
    fn restricting_never_creates_solutions(eq in arb_equation(), c in arb_coloring(), cut in 0usize..14) {
        let smaller = c.restrict(cut);
        if has_mono_solution(&eq, &smaller).unwrap() {
            prop_assert!(has_mono_solution(&eq, &c).unwrap());
        }
    }

    #[test]
    fn reconstructed_solutions_balance(eq in arb_equation(), c in arb_coloring()) {
        let found = find_mono_solution(&eq, &c).unwrap();
        prop_assert_eq!(found.is_some(), naive_has_mono(&eq, &c));
        if let Some(s) = found {
            prop_assert_eq!(s.lhs.len(), eq.lhs().len());
            prop_assert_eq!(s.rhs.len(), eq.rhs().len());
            let l: u64 = eq.lhs().iter().zip(&s.lhs).map(|(a, x)| a * x).sum();
            let r: u64 = eq.rhs().iter().zip(&s.rhs).map(|(a, y)| a * y).sum();
            prop_assert_eq!(l, r);
            for v in s.lhs.iter().chain(&s.rhs) {
                prop_assert_eq!(c.color(*v), s.color);
            }
        }
    }

    #[test]
    fn achievable_sums_match_naive(
        values in proptest::collection::btree_set(1u64..30, 0..8),
        coeffs in proptest::collection::vec(1u64..5, 1..4),
    ) {
        let values: Vec<u64> = values.into_iter().collect();
        let got = achievable_sums(&values, &coeffs).unwrap();
        let expected = naive_totals(&values, &coeffs).into_iter().collect();
        prop_assert_eq!(got, expected);
    }
}

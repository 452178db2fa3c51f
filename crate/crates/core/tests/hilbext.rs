use hilbext_core::groebner::{monomials_of_degree, truncated_quotient_length, Ideal};
use hilbext_core::hilbext::*;
use hilbext_core::linalg::span_rank;
use hilbext_core::polyring::{FieldSpec, MonomialOrder, PolyRing, Polynomial};
use proptest::prelude::*;

fn field(p: u64) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

fn spec(ds: &[u32], p: u64) -> ExtensionSpec {
    ExtensionSpec::new(ds.to_vec(), field(p)).unwrap()
}

fn length(ds: &[u32], p: u64) -> u64 {
    match trivial_extension_length(&spec(ds, p)).unwrap().length {
        Length::Finite(n) => n,
        other => panic!("{other:?}"),
    }
}

/// `Σ_t dim R_t / I_t` for `t < bound` by row-reducing the degree-t multiples
/// of the generators. Independent of any Groebner basis.
fn oracle_length(ideal: &Ideal, bound: u32) -> u64 {
    let ring = ideal.ring();
    let n = ring.nvars();
    let mut total = 0;
    for t in 0..bound {
        let basis = monomials_of_degree(n, t);
        let mut rows = Vec::new();
        for g in ideal.nonzero_gens() {
            let dg = g.total_degree().unwrap();
            if dg > t {
                continue;
            }
            for m in monomials_of_degree(n, t - dg) {
                let p = g.mul_term(&m, &ring.field().one());
                rows.push(basis.iter().map(|b| p.coeff_of(b)).collect::<Vec<_>>());
            }
        }
        let q = basis.len() - span_rank(ring.field(), basis.len(), &rows);
        if q == 0 {
            break;
        }
        total += q as u64;
    }
    total
}

#[test]
fn equations_of_two_lines_worth_of_sections() {
    let s = spec(&[1, 1], 0);
    let i = extension_equations(&s).unwrap();
    assert_eq!(i.gens().len(), 9);
    // the x/y presentation, written out over the alias names
    let names = s.display_aliases().unwrap();
    let r = PolyRing::new(&names, field(0), MonomialOrder::GradedReverseLex).unwrap();
    let v = |k: usize| Polynomial::var(&r, k);
    let (x, y) = (|i: usize| v(2 * i), |i: usize| v(2 * i + 1));
    let mut gens = Vec::new();
    for a in 0..2 {
        for b in a..2 {
            gens.push(&x(a) * &x(b));
            gens.push(&y(a) * &y(b));
            gens.push(&(&x(a) * &y(b)) + &(&x(b) * &y(a)));
        }
    }
    let paper = Ideal::new(&r, gens).unwrap();
    let same_names = i.map_vars(&r, &(0..4).collect::<Vec<_>>()).unwrap();
    assert!(same_names.equals(&paper).unwrap());
}

/// The displayed presentation for `n` copies of `O(-2)`, over the alias names.
fn conic_presentation(s: &ExtensionSpec) -> Ideal {
    let n = s.rank() as usize;
    let names = s.display_aliases().unwrap();
    let r = PolyRing::new(&names, field(0), MonomialOrder::GradedReverseLex).unwrap();
    let v = |k: usize| Polynomial::var(&r, k);
    let (y, z, w) = (|i: usize| v(3 * i), |i: usize| v(3 * i + 1), |i: usize| v(3 * i + 2));
    let mut gens = Vec::new();
    for a in 0..n {
        for b in a..n {
            gens.push(&y(a) * &y(b));
            gens.push(&w(a) * &w(b));
            gens.push(&(&z(a) * &w(b)) + &(&z(b) * &w(a)));
            gens.push(&(&y(a) * &z(b)) + &(&y(b) * &z(a)));
            gens.push(&(&(&y(a) * &w(b)) + &(&y(b) * &w(a))) + &(&z(a) * &z(b)));
        }
    }
    Ideal::new(&r, gens).unwrap()
}

#[test]
fn equations_of_conic_shape() {
    let s = spec(&[2, 2], 0);
    let i = extension_equations(&s).unwrap();
    let paper = conic_presentation(&s);
    assert!(i.map_vars(paper.ring(), &(0..6).collect::<Vec<_>>()).unwrap().equals(&paper).unwrap());
}

#[test]
fn three_conics_exceed_the_cubic_truncation() {
    // the closed form is the length of D/m^3; for three conics m^3 ≠ 0
    let s = spec(&[2, 2, 2], 0);
    let i = extension_equations(&s).unwrap();
    let paper = conic_presentation(&s);
    assert!(i.map_vars(paper.ring(), &(0..9).collect::<Vec<_>>()).unwrap().equals(&paper).unwrap());
    assert_eq!(oracle_length(&paper, 64), 26);
    assert_eq!(length(&[2, 2, 2], 0), 26);
    assert_eq!(truncated_quotient_length(&i, 3).unwrap() as i64, formula_1b(&s));
    assert_eq!(closed_form(&s), Some(25));
    assert!(trivial_extension_length(&s).unwrap().formula_discrepancy);
    // likewise for two summands of higher degree
    for (ds, total, cubic) in [(&[2, 3][..], 19, 18), (&[3, 3], 28, 24)] {
        let i = extension_equations(&spec(ds, 0)).unwrap();
        assert_eq!((oracle_length(&i, 64), truncated_quotient_length(&i, 3).unwrap() as u64), (total, cubic), "{ds:?}");
    }
}

#[test]
fn equations_degenerate_shapes() {
    let i = extension_equations(&spec(&[0], 0)).unwrap();
    assert_eq!(i.ring().names(), ["z0_1"]);
    assert_eq!(i.gens().iter().map(|g| g.to_string()).collect::<Vec<_>>(), ["z0_1^2"]);
    for d in 1..5 {
        let i = extension_equations(&spec(&[d], 2)).unwrap();
        let squares: Vec<Polynomial> = (0..=d as usize).map(|k| Polynomial::var(i.ring(), k).pow(2)).collect();
        assert!(i.equals(&Ideal::new(i.ring(), squares).unwrap()).unwrap());
    }
}

#[test]
fn worked_lengths() {
    assert_eq!(length(&[1, 1], 0), 6);
    assert_eq!(length(&[2], 0), 5);
    assert_eq!(length(&[3], 2), 16);
    assert_eq!(length(&[1, 2], 0), 9);
}

#[test]
fn single_summand_lengths() {
    for d in 0..=8 {
        for p in [0, 5, 7] {
            assert_eq!(length(&[d], p), formula_1a(d), "d={d} p={p}");
        }
        assert_eq!(length(&[d], 2), formula_char2(d), "d={d}");
    }
    for d in 2..=10 {
        assert_eq!(formula_1a(d), formula_1a(d - 1) + formula_1a(d - 2));
    }
}

#[test]
fn oracle_agrees_on_small_shapes() {
    for ds in [&[0][..], &[3], &[5], &[1, 1], &[1, 2], &[2, 2], &[0, 1, 1]] {
        for p in [0, 2, 3] {
            let s = spec(ds, p);
            let i = extension_equations(&s).unwrap();
            assert_eq!(length(ds, p), oracle_length(&i, 64), "{ds:?} p={p}");
            for k in 1..5 {
                assert_eq!(truncated_quotient_length(&i, k).unwrap() as u64, oracle_length(&i, k), "{ds:?} k={k}");
            }
        }
    }
}

#[test]
fn corollary_lengths() {
    for n in 1..=4u64 {
        assert_eq!(length(&vec![1; n as usize], 0), 2 * n + 1 + n * (n - 1) / 2);
    }
    for n in 1..=2u64 {
        assert_eq!(length(&vec![2; n as usize], 0), 3 * n + 1 + n * (2 * n - 1));
    }
    assert_eq!(length(&[2, 2], 0), 13);
}

#[test]
fn reports_record_agreement_and_discrepancy() {
    let r = trivial_extension_length(&spec(&[1, 1], 0)).unwrap();
    assert_eq!(r.length, Length::Finite(6));
    assert_eq!(r.agreement, vec![Method::Formula1b]);
    // the printed m^4 correction is negative for two summands
    assert!(r.formula_discrepancy);
    let c = r.checks.iter().find(|c| c.method == Method::Formula1c && c.compares_to == "m^4").unwrap();
    assert!(c.value < 0 && !c.agrees);

    let r = trivial_extension_length(&spec(&[4], 0)).unwrap();
    assert_eq!(r.agreement, vec![Method::Formula1a, Method::Formula1c]);
    assert!(!r.formula_discrepancy);

    let r = trivial_extension_length(&spec(&[3], 2)).unwrap();
    assert_eq!(r.agreement, vec![Method::FormulaChar2]);
    assert_eq!(r.characteristic, 2);
}

#[test]
fn truncated_formulas() {
    for d in 0..=6 {
        let s = spec(&[d], 0);
        let i = extension_equations(&s).unwrap();
        assert_eq!(truncated_quotient_length(&i, 3).unwrap() as i64, formula_1b(&s), "d={d}");
        assert_eq!(truncated_quotient_length(&i, 4).unwrap() as i64, formula_1c(&s), "d={d}");
    }
    for d1 in 0..=3 {
        for d2 in d1..=3 {
            let s = spec(&[d1, d2], 0);
            let i = extension_equations(&s).unwrap();
            assert_eq!(truncated_quotient_length(&i, 3).unwrap() as i64, formula_1b(&s), "{d1},{d2}");
        }
    }
}

#[test]
fn bounds_sandwich_the_double_line() {
    let o1 = spec(&[1], 0);
    let lower = lower_bound(1, &o1).unwrap();
    let upper = upper_bound(&[o1.clone(), o1]).unwrap();
    assert_eq!((lower, upper), (5, 6));
}

#[test]
fn large_characteristic_matches_rationals() {
    for ds in [&[1, 1][..], &[1, 2], &[3], &[2, 2]] {
        for p in [5, 7, 101] {
            assert_eq!(length(ds, p), length(ds, 0), "{ds:?} p={p}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lengths_match_linear_algebra(ds in proptest::collection::vec(0u32..3, 1..3), p in prop::sample::select(vec![0u64, 2, 3, 5])) {
        let s = spec(&ds, p);
        let i = extension_equations(&s).unwrap();
        let n = length(&ds, p);
        prop_assert_eq!(n, oracle_length(&i, 64));
        if p != 2 {
            prop_assert_eq!(truncated_quotient_length(&i, 3).unwrap() as i64, formula_1b(&s));
        }
    }
}

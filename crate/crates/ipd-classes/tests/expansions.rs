use ipd_classes::{expand, wt_h, wt_k, Coefficient, ExpLaurent, SchubertExpansion, YPolynomial};
use ipd_core::{BoundedAffinePermutation, Partition, PartialPermutation};
use ipd_dreams::{enumerate, TheoryMode};

fn figure() -> PartialPermutation {
    PartialPermutation::from_dots(4, &[(1, 2), (3, 4)]).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec())
}

fn y(i: usize, j: usize) -> YPolynomial {
    YPolynomial::root(i, j)
}

fn e(i: usize, j: usize) -> ExpLaurent {
    ExpLaurent::exp_root(i, j)
}

fn dim(f: &PartialPermutation) -> usize {
    BoundedAffinePermutation::from_partial(f).dim()
}

#[test]
fn figure_h_t_expansion() {
    let ex = expand(&figure(), TheoryMode::HT);
    assert_eq!(ex.terms.len(), 3);
    assert_eq!(ex.coefficient(&part(&[2])), Coefficient::Poly(YPolynomial::one()));
    assert_eq!(ex.coefficient(&part(&[1, 1])), Coefficient::Poly(YPolynomial::one()));
    assert_eq!(ex.coefficient(&part(&[2, 1])), Coefficient::Poly(y(1, 4)));
    assert_eq!(ex.to_string(), "[X(2)] + [X(1,1)] + (y1 - y4)[X(2,1)]");
}

#[test]
fn figure_h_t_weights() {
    let mut weights: Vec<String> =
        enumerate(&figure(), TheoryMode::HT).iter().map(|p| wt_h(p).unwrap().to_string()).collect();
    weights.sort();
    assert_eq!(weights, ["1", "1", "y1 - y2", "y2 - y4"]);
}

#[test]
fn figure_k_expansion() {
    let ex = expand(&figure(), TheoryMode::K);
    let got: Vec<(Partition, i64)> = ex.terms.iter().map(|(p, c)| (p.clone(), c.as_int().unwrap())).collect();
    assert_eq!(got, vec![(part(&[1]), -1), (part(&[1, 1]), 1), (part(&[2]), 1)]);
    assert_eq!(ex.to_string(), "-[X(1)] + [X(2)] + [X(1,1)]");
}

#[test]
fn figure_k_t_weights() {
    let dreams = enumerate(&figure(), TheoryMode::KT);
    let mut got: Vec<ExpLaurent> = dreams.iter().map(wt_k).collect();
    let one = ExpLaurent::one();
    let mut want = vec![
        e(2, 4),
        e(1, 4),
        &e(2, 4) - &e(1, 4),
        &one - &e(2, 4),
        e(1, 4),
        &e(2, 4) - &e(1, 4),
    ];
    let key = |p: &ExpLaurent| p.to_string();
    got.sort_by_key(key);
    want.sort_by_key(key);
    assert_eq!(got, want);
    // the two dreams that also appear with fused tiles
    assert!(got.contains(&e(1, 4)));
    assert!(got.contains(&(&(&one - &e(1, 2)) * &e(2, 4))));
}

#[test]
fn figure_k_t_specializes() {
    let kt = expand(&figure(), TheoryMode::KT);
    assert_eq!(kt.specialize_kt_to_k().unwrap().terms, expand(&figure(), TheoryMode::K).terms);
    assert_eq!(kt.specialize_kt_to_ht().unwrap().terms, expand(&figure(), TheoryMode::HT).terms);
}

#[test]
fn empty_f_gives_the_full_box() {
    for n in 1..=4 {
        let f = PartialPermutation::empty(n);
        for mode in TheoryMode::ALL {
            let ex = expand(&f, mode);
            assert_eq!(ex.terms.len(), 1, "{mode}");
            let (lambda, c) = ex.terms.iter().next().unwrap();
            assert_eq!(*lambda, Partition::rectangle(n, 0));
            let unit = match mode {
                TheoryMode::H | TheoryMode::K => Coefficient::Int(1),
                TheoryMode::HT => Coefficient::Poly(YPolynomial::one()),
                TheoryMode::KT => Coefficient::Laurent(ExpLaurent::one()),
            };
            assert_eq!(*c, unit);
        }
    }
}

#[test]
fn full_rank_gives_the_point_class() {
    for n in 1..=4 {
        let f = PartialPermutation::identity(n);
        let ex = expand(&f, TheoryMode::KT);
        assert_eq!(ex.terms.len(), 1);
        assert!(ex.terms.contains_key(&Partition::empty()));
    }
}

#[test]
fn specializations_agree_with_direct_expansions() {
    for n in 1..=5 {
        for f in PartialPermutation::all(n) {
            let kt = expand(&f, TheoryMode::KT);
            let k = kt.specialize_kt_to_k().unwrap();
            let ht = kt.specialize_kt_to_ht().unwrap();
            assert_eq!(k.terms, expand(&f, TheoryMode::K).terms, "{f}");
            assert_eq!(ht.terms, expand(&f, TheoryMode::HT).terms, "{f}");
        }
    }
}

#[test]
fn h_is_the_constant_part_of_h_t() {
    for n in 1..=5 {
        for f in PartialPermutation::all(n) {
            let h = expand(&f, TheoryMode::H);
            let ht = expand(&f, TheoryMode::HT);
            let d = dim(&f);
            let constant: Vec<_> = ht
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.as_poly().unwrap().at_one()))
                .collect();
            let direct: Vec<_> = h.terms.iter().map(|(p, c)| (p.clone(), c.as_int().unwrap())).collect();
            assert_eq!(constant, direct, "{f}");
        }
    }
}

#[test]
fn degree_and_sign_laws() {
    for n in 1..=5 {
        for f in PartialPermutation::all(n) {
            let d = dim(&f);
            assert!(expand(&f, TheoryMode::HT).degree_law_holds(d), "{f}");
            assert!(expand(&f, TheoryMode::KT).degree_law_holds(d), "{f}");
            assert!(expand(&f, TheoryMode::K).sign_law_holds(d), "{f}");
        }
    }
}

#[test]
fn k_classes_have_euler_characteristic_one() {
    // every Schubert variety and every positroid variety has χ(O) = 1
    for n in 1..=5 {
        for f in PartialPermutation::all(n) {
            let total: i64 = expand(&f, TheoryMode::K).terms.values().map(|c| c.as_int().unwrap()).sum();
            assert_eq!(total, 1, "{f}");
        }
    }
}

#[test]
fn graham_positivity() {
    let report = expand(&figure(), TheoryMode::HT).check_graham_positive().unwrap();
    assert!(report.is_positive());
    assert_eq!(report.dreams_checked, 4);
    for n in 1..=5 {
        for f in PartialPermutation::all(n) {
            let report = expand(&f, TheoryMode::HT).check_graham_positive().unwrap();
            assert!(report.is_positive(), "{f}: {:?}", report.violations);
        }
    }
}

#[test]
fn positivity_check_flags_tampering() {
    let mut ex = expand(&figure(), TheoryMode::HT);
    let r = ex.records.iter_mut().find(|r| !r.equivariant.is_empty()).unwrap();
    r.weight = Coefficient::Poly(y(4, 2));
    let report = ex.check_graham_positive().unwrap();
    assert!(!report.is_positive());
    assert!(expand(&figure(), TheoryMode::K).check_graham_positive().is_err());
}

#[test]
fn json_layout() {
    let kt = expand(&figure(), TheoryMode::KT);
    let json = serde_json::to_value(&kt).unwrap();
    assert_eq!(json["mode"], "KT");
    assert_eq!(json["k"], 2);
    assert_eq!(json["n"], 4);
    let two = json["terms"].as_array().unwrap().iter().find(|t| t["partition"] == serde_json::json!([2])).unwrap();
    assert_eq!(two["coeff"], serde_json::json!({"laurent": [{"c": 1, "exp": {"1": 1, "4": -1}}]}));
    let top = json["terms"].as_array().unwrap().iter().find(|t| t["partition"] == serde_json::json!([2, 1])).unwrap();
    assert_eq!(
        top["coeff"],
        serde_json::json!({"laurent": [{"c": -1, "exp": {"1": 1, "4": -1}}, {"c": 1, "exp": {}}]})
    );
    for mode in TheoryMode::ALL {
        let ex = expand(&figure(), mode);
        let back: SchubertExpansion = serde_json::from_str(&serde_json::to_string(&ex).unwrap()).unwrap();
        assert_eq!(back.terms, ex.terms);
        assert_eq!((back.mode, back.k, back.n), (ex.mode, ex.k, ex.n));
    }
    let h = serde_json::to_value(expand(&figure(), TheoryMode::H)).unwrap();
    assert_eq!(h["terms"][0]["coeff"], serde_json::json!({"int": 1}));
}

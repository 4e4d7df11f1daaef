mod common;

use common::{closed_form, part, partitions};
use slgt_core::{
    act, act_diag, act_lower, act_raise, enumerate_patterns, highest_pattern, operator_matrix,
    verify_sln_relations, weight_of, GeneratorSpec, ModuleVector, Realization,
};

#[test]
fn raise_and_lower_are_adjoint() {
    for p in partitions(3, 4).into_iter().chain(partitions(4, 2)) {
        let pats = enumerate_patterns(&p);
        for k in 1..p.n() {
            for xi in &pats {
                for (eta, c) in act_raise(k, xi).unwrap().terms() {
                    assert_eq!(&act_lower(k, eta).unwrap().coefficient(xi), c, "k={k} {xi} -> {eta}");
                }
                for (eta, c) in act_lower(k, xi).unwrap().terms() {
                    assert_eq!(&act_raise(k, eta).unwrap().coefficient(xi), c, "k={k} {xi} <- {eta}");
                }
            }
        }
    }
}

#[test]
fn general_formula_matches_closed_forms() {
    for p in partitions(3, 4) {
        for xi in enumerate_patterns(&p) {
            for (name, spec) in [
                ("E12", GeneratorSpec::Raise(1)),
                ("F21", GeneratorSpec::Lower(1)),
                ("E23", GeneratorSpec::Raise(2)),
                ("F32", GeneratorSpec::Lower(2)),
            ] {
                let oracle = ModuleVector::from_terms(&p, closed_form(name, &xi)).unwrap();
                assert_eq!(act(spec, &xi).unwrap(), oracle, "{name} on {xi}");
            }
        }
    }
}

#[test]
fn raising_shifts_weight_by_simple_root() {
    for p in partitions(3, 4).into_iter().chain(partitions(4, 3)) {
        for xi in enumerate_patterns(&p) {
            let w = weight_of(&xi);
            for k in 1..p.n() {
                for (eta, _) in act_raise(k, &xi).unwrap().terms() {
                    assert_eq!(weight_of(eta), w.shifted_by_root(k, 1));
                    for i in 1..=p.n() {
                        assert_eq!(act_diag(i, eta).unwrap(), weight_of(eta).kappa[i - 1]);
                    }
                }
                for (eta, _) in act_lower(k, &xi).unwrap().terms() {
                    assert_eq!(weight_of(eta), w.shifted_by_root(k, -1));
                }
            }
        }
    }
}

#[test]
fn coefficients_are_positive_square_roots_of_rationals() {
    for p in partitions(3, 4).into_iter().chain(partitions(4, 2)) {
        for xi in enumerate_patterns(&p) {
            for k in 1..p.n() {
                for v in [act_raise(k, &xi).unwrap(), act_lower(k, &xi).unwrap()] {
                    for (_, c) in v.terms() {
                        assert!(c.num_terms() == 1);
                        let sq = c.square().as_rational().expect("rational square");
                        assert!(sq > num::zero());
                        assert!(c.to_f64() > 0.0);
                    }
                }
            }
        }
    }
}

#[test]
fn highest_pattern_is_annihilated() {
    for p in partitions(3, 4).into_iter().chain(partitions(4, 3)).chain(partitions(5, 1)) {
        let beta = highest_pattern(&p);
        for k in 1..p.n() {
            assert!(act_raise(k, &beta).unwrap().is_empty(), "E{k} on β of {p}");
        }
    }
}

#[test]
fn matrices_match_vector_action() {
    let p = part("3,1,0");
    let pats = enumerate_patterns(&p);
    for spec in [GeneratorSpec::Raise(2), GeneratorSpec::Lower(1), GeneratorSpec::Diag(2), GeneratorSpec::Cartan(2)] {
        let m = operator_matrix(spec, &p).unwrap();
        for (j, xi) in pats.iter().enumerate() {
            let image = act(spec, xi).unwrap();
            for (i, eta) in pats.iter().enumerate() {
                assert_eq!(m.get(i, j), &image.coefficient(eta));
            }
        }
    }
}

#[test]
fn relations_hold_beyond_the_worked_examples() {
    for m in ["3,1,0", "4,2,0", "2,1,0,0", "3,2,1,0", "1,1,0,0,0"] {
        let report = verify_sln_relations(&part(m)).unwrap();
        assert!(report.all_passed(), "{m}: {:?}", report.failures().next());
    }
}

#[test]
fn cartan_traces_vanish() {
    for p in partitions(4, 2) {
        let r = Realization::new(&p).unwrap();
        for i in 1..p.n() {
            assert!(r.cartan(i).unwrap().trace().is_zero());
        }
    }
}

#[test]
fn out_of_range_generators_are_rejected() {
    let p = part("2,1,0");
    assert!(operator_matrix(GeneratorSpec::Raise(3), &p).is_err());
    assert!(operator_matrix(GeneratorSpec::Diag(4), &p).is_err());
    assert!(operator_matrix(GeneratorSpec::Cartan(0), &p).is_err());
}

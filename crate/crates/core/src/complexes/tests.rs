use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::algebra::{builtin_from_spec, matrix_algebra, Algebra};
use crate::linhom::{betti_numbers, q, ChainComplex, SparseMatrix, SparseVec};

fn alg(spec: &str) -> Arc<Algebra> {
    Arc::new(builtin_from_spec(spec).unwrap())
}

fn big() -> Limits {
    Limits::new(1_000_000)
}

const BUILTINS: [&str; 6] = ["rationals", "dual", "truncated_poly:3", "split:2", "cyclic:2", "s3"];

#[test]
fn boundaries_square_to_zero() {
    for spec in BUILTINS {
        let a = alg(spec);
        let d = a.dim();
        for kind in ComplexKind::ALL {
            if kind == ComplexKind::Bar && a.group().is_none() {
                continue;
            }
            // keep every degree small
            let mut cutoff = 0;
            while cutoff < 5 && builder(kind, &a, cutoff + 1, big()).unwrap().dim(cutoff + 1) <= 20_000 {
                cutoff += 1;
            }
            let c = build(kind, &a, cutoff, big()).unwrap();
            assert!(c.verify_boundary_squares().is_ok(), "{kind} over {spec} (d = {d}, cutoff {cutoff})");
        }
    }
}

#[test]
fn matrix_algebra_boundaries_square_to_zero() {
    let m2 = Arc::new(matrix_algebra(&alg("rationals"), 2).unwrap());
    for kind in [ComplexKind::Cl, ComplexKind::Chh, ComplexKind::Clambda, ComplexKind::Ce, ComplexKind::CeAdj] {
        let c = build(kind, &m2, 3, big()).unwrap();
        assert!(c.verify_boundary_squares().is_ok(), "{kind}");
    }
}

#[test]
fn commutative_leibniz_boundary_vanishes() {
    for spec in ["rationals", "dual", "truncated_poly:3", "split:2", "cyclic:2"] {
        let a = alg(spec);
        let c = build_cl(&a, 4, big()).unwrap();
        for n in 1..=4 {
            assert!(c.boundary(n).unwrap().is_zero(), "{spec} degree {n}");
        }
        let d = a.dim();
        let expected: Vec<usize> = (0..=4).map(|n| d.pow(n as u32)).collect();
        assert_eq!(betti_numbers(&c), expected[..4]);
    }
}

#[test]
fn cl_of_s3_has_nonzero_boundary() {
    let c = build_cl(&alg("s3"), 2, big()).unwrap();
    assert!(!c.boundary(2).unwrap().is_zero());
    assert!(c.boundary(1).unwrap().is_zero());
}

#[test]
fn hochschild_of_rationals_alternates() {
    let c = build_chh(&alg("rationals"), 5, big()).unwrap();
    for n in 1..=5 {
        let expected = if n % 2 == 0 { 1 } else { 0 };
        assert_eq!(c.boundary(n).unwrap().get(0, 0), q(expected), "degree {n}");
    }
}

/// `HH_*(Q[ε]/ε²)` from the 2-periodic resolution: `A` in every degree,
/// differentials alternately `0` and multiplication by `2ε`.
fn periodic_dual_oracle(cutoff: usize) -> Vec<usize> {
    let two_eps = SparseMatrix::from_triplets(2, 2, vec![(1, 0, q(2))]).unwrap();
    let boundaries =
        (1..=cutoff).map(|n| if n % 2 == 1 { SparseMatrix::zeros(2, 2) } else { two_eps.clone() }).collect();
    betti_numbers(&ChainComplex::new("oracle", vec![2; cutoff + 1], boundaries).unwrap())
}

#[test]
fn hochschild_of_dual_numbers() {
    let c = build_chh(&alg("dual"), 4, big()).unwrap();
    let oracle = periodic_dual_oracle(4);
    assert_eq!(oracle, vec![2, 1, 1, 1]);
    assert_eq!(betti_numbers(&c), oracle);
}

#[test]
fn cyclic_homology_of_rationals() {
    let c = build_clambda(&alg("rationals"), 5, big()).unwrap();
    assert_eq!(c.dims(), &[1, 0, 1, 0, 1, 0]);
    assert_eq!(betti_numbers(&c), vec![1, 0, 1, 0, 1]);
}

#[test]
fn connes_classes_absorb_rotation() {
    let d = 3;
    for n in 0..=3 {
        let basis = ConnesBasis::new(d, n);
        for idx in 0..d.pow(n as u32 + 1) {
            let mut xs = tensor::decode(idx, n + 1, d);
            let c = basis.class(idx);
            xs.rotate_right(1);
            let r = basis.class(tensor::encode(&xs, d));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(c.map(|(k, s)| (k, s * sign)), r);
        }
        for (k, &rep) in basis.reps.iter().enumerate() {
            assert_eq!(basis.class(rep), Some((k, 1)));
        }
    }
}

#[test]
fn degree_zero_theories_agree() {
    for spec in BUILTINS {
        let a = alg(spec);
        let hl = betti_numbers(&build_cl(&a, 2, big()).unwrap())[1];
        let hh = betti_numbers(&build_chh(&a, 1, big()).unwrap())[0];
        let hc = betti_numbers(&build_clambda(&a, 1, big()).unwrap())[0];
        let lie = betti_numbers(&build_ce(&a, 2, big()).unwrap())[1];
        assert_eq!([hl, hc, lie], [hh; 3], "{spec}");
    }
    // A/[A,A] for S_3 is spanned by its three conjugacy classes
    let hh = betti_numbers(&build_chh(&alg("s3"), 1, big()).unwrap())[0];
    assert_eq!(hh, crate::algebra::symmetric_group_s3().conjugacy_classes());
}

#[test]
fn bar_complex_of_c2() {
    let a = alg("cyclic:2");
    let c = build_bar(&a, 4, big()).unwrap();
    assert_eq!(c.dims(), &[1, 2, 4, 8, 16]);
    assert_eq!(betti_numbers(&c), vec![1, 0, 0, 0]);
    // d(g, h) = (h) - (gh) + (g)
    let g = 1;
    let col = c.boundary(2).unwrap().column(tensor::encode(&[g, g], 2));
    assert_eq!(*col, SparseVec::from_terms(vec![(g, q(2)), (0, q(-1))]));
}

#[test]
fn bar_complex_of_trivial_group() {
    let a = alg("cyclic:1");
    let c = build_bar(&a, 4, big()).unwrap();
    assert_eq!(c.dims(), &[1; 5]);
    for n in 1..=4 {
        assert_eq!(c.boundary(n).unwrap().get(0, 0), q(if n % 2 == 0 { 1 } else { 0 }));
    }
}

#[test]
fn bar_needs_a_group() {
    assert!(build_bar(&alg("dual"), 2, big()).is_err());
}

#[test]
fn l_boundary_of_a_transposition() {
    let a = alg("s3");
    let g = crate::algebra::symmetric_group_s3();
    let (x, y) = (1, 2);
    let (xy, yx) = (g.mul(x, y), g.mul(y, x));
    assert_ne!(xy, yx);
    let c = build_l(&a, 2, big()).unwrap();
    let d = a.dim();
    let swap = Permutation::transposition(2, 0, 1).lex_rank();
    let col = c.boundary(2).unwrap().column(swap * d * d + tensor::encode(&[x, y], d));
    assert_eq!(*col, SparseVec::from_terms(vec![(xy, q(1)), (yx, q(-1))]));
    let id = c.boundary(2).unwrap().column(tensor::encode(&[x, y], d));
    assert!(id.is_zero());
}

#[test]
fn p_boundary_in_degree_one() {
    let a = alg("s3");
    let g = crate::algebra::symmetric_group_s3();
    let (x, y) = (3, 1);
    let c = build_p(&a, 1, big()).unwrap();
    let d = a.dim();
    let col = c.boundary(1).unwrap().column(tensor::encode(&[x, y], d));
    assert_eq!(*col, SparseVec::from_terms(vec![(g.mul(x, y), q(1)), (g.mul(y, x), q(-1))]));
}

#[test]
fn p_of_rationals_is_acyclic_above_zero() {
    let c = build_p(&alg("rationals"), 4, big()).unwrap();
    assert_eq!(c.dims(), &[1, 1, 2, 6, 24]);
    assert_eq!(betti_numbers(&c), vec![1, 0, 0, 0]);
}

#[test]
fn l_preserves_cyclic_permutations() {
    for spec in ["dual", "s3"] {
        let a = alg(spec);
        let d = a.dim();
        let cutoff = if d > 2 { 3 } else { 5 };
        let c = build_l(&a, cutoff, big()).unwrap();
        for n in 2..=cutoff {
            let perms = symmetric_group(n);
            let below = symmetric_group(n - 1);
            let block = d.pow(n as u32);
            let m = c.boundary(n).unwrap();
            for (r, sigma) in perms.iter().enumerate().filter(|(_, s)| s.is_cyclic()) {
                for t in 0..block {
                    for (row, _) in m.column(r * block + t).iter() {
                        let tau = &below[row / d.pow(n as u32 - 1)];
                        assert!(tau.is_cyclic(), "{sigma} gives {tau}");
                    }
                }
            }
        }
    }
}

#[test]
fn p_is_the_cyclic_part_of_l() {
    let a = alg("dual");
    let d = a.dim();
    let l = build_l(&a, 4, big()).unwrap();
    let p = PBuilder::new(a.clone(), 3);
    let pc = assemble(&p, 3, big()).unwrap();
    for n in 1..=3 {
        let block = d.pow(n as u32 + 1);
        for col in 0..pc.dim(n) {
            let (sigma, xs) = p.split(n, col);
            let lcol = l.boundary(n + 1).unwrap().column(sigma.lex_rank() * block + tensor::encode(&xs, d));
            let from_l: Vec<(usize, _)> = lcol
                .iter()
                .map(|(row, c)| {
                    let (rank, t) = (row / (block / d), row % (block / d));
                    let tau = &symmetric_group(n)[rank];
                    (p.index(n - 1, tau, &tensor::decode(t, n, d)).unwrap(), c.clone())
                })
                .collect();
            assert_eq!(*pc.boundary(n).unwrap().column(col), SparseVec::from_terms(from_l));
        }
    }
}

#[test]
fn diagonal_faces_match_transport() {
    for (spec, cutoff) in [("dual", 4), ("s3", 2), ("truncated_poly:3", 3)] {
        let a = alg(spec);
        let p = PBuilder::new(a.clone(), cutoff);
        for n in 1..=cutoff {
            for col in 0..p.dim(n) as usize {
                assert_eq!(
                    p.diagonal_boundary_column(n, col),
                    p.boundary_column(n, col),
                    "{spec} degree {n} column {col}"
                );
            }
        }
    }
}

#[test]
fn l_and_p_dimensions() {
    let a = alg("dual");
    assert_eq!(build_l(&a, 3, big()).unwrap().dims(), &[1, 2, 8, 48]);
    assert_eq!(build_p(&a, 3, big()).unwrap().dims(), &[2, 4, 16, 96]);
}

#[test]
fn resource_bound_is_reported() {
    let err = build_chh(&alg("s3"), 6, Limits::default()).unwrap_err();
    assert!(matches!(err, crate::Error::ResourceBound { degree: 6, .. }), "{err}");
}

#[test]
fn theta_normal_form() {
    let (a, b) = (0, 1);
    let swap = Permutation::transposition(2, 0, 1);
    assert_eq!(theta_nf(&[(0, 1, a), (1, 0, b)]), Some((swap.clone(), vec![a, b])));
    assert_eq!(theta_nf(&[(2, 4, a), (4, 2, b)]), Some((swap, vec![a, b])));
    assert_eq!(theta_nf(&[(0, 0, a), (0, 2, b)]), None);
    assert_eq!(theta_nf(&[(0, 1, a), (1, 2, b)]), None);
}

#[test]
fn kahler_dimensions() {
    let t3 = builtin_from_spec("truncated_poly:3").unwrap();
    let omega1 = kahler_module(&t3, 1).unwrap();
    assert_eq!(omega1.dim(), 2);
    assert_eq!(kahler_module(&t3, 0).unwrap().dim(), 3);
    assert_eq!(kahler_module(&builtin_from_spec("split:2").unwrap(), 1).unwrap().dim(), 0);
    assert_eq!(kahler_module(&builtin_from_spec("rationals").unwrap(), 1).unwrap().dim(), 0);
    assert!(kahler_module(&builtin_from_spec("s3").unwrap(), 1).is_err());
}

#[test]
fn kahler_relations_hold() {
    // d(x^2) = 2x dx and d(1) = 0 in Ω¹ of Q[x]/(x^3)
    let t3 = builtin_from_spec("truncated_poly:3").unwrap();
    let m = kahler_module(&t3, 1).unwrap();
    let at = |a0: usize, w: usize| SparseVec::unit(m.ambient_index(a0, &[w]).unwrap().0);
    assert_eq!(m.project(&at(0, 2)), m.project(&at(1, 1)).scale(&q(2)));
    assert!(m.project(&at(1, 0)).is_zero());
    // x^2 dx = 0 since 3x^2 dx = d(x^3)
    assert!(m.project(&at(2, 1)).is_zero());
    assert!(m.project(&at(1, 2)).is_zero());
    assert!(!m.project(&at(0, 1)).is_zero());
    assert!(!m.project(&at(1, 1)).is_zero());
}

#[test]
fn labels_are_readable() {
    let a = alg("dual");
    assert_eq!(labels(&ClBuilder::new(a.clone()), 2, big()).unwrap()[1], "1⊗ε");
    assert_eq!(labels(&ChhBuilder::new(a.clone()), 0, big()).unwrap(), vec!["(1)", "(ε)"]);
    let p = labels(&PBuilder::new(a, 1), 1, big()).unwrap();
    assert_eq!(p[0], "(1 2)⊗1⊗1");
}

#[test]
fn kinds_parse() {
    for kind in ComplexKind::ALL {
        assert_eq!(kind.id().to_lowercase().parse::<ComplexKind>().unwrap(), kind);
    }
    assert!("HH".parse::<ComplexKind>().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn random_algebra_chh_squares_to_zero(entries in proptest::collection::vec(-2i64..=2, 4)) {
        // structure constants of a 2-dimensional algebra spanned by 1 and x,
        // with x·x = a + b x (always associative)
        let table = vec![
            SparseVec::unit(0),
            SparseVec::unit(1),
            SparseVec::unit(1),
            SparseVec::from_terms(vec![(0, q(entries[0])), (1, q(entries[1]))]),
        ];
        let a = Arc::new(Algebra::from_table("x2", vec!["1".into(), "x".into()], SparseVec::unit(0), table).unwrap());
        for kind in [ComplexKind::Chh, ComplexKind::Clambda, ComplexKind::P] {
            let c = build(kind, &a, 4, big()).unwrap();
            prop_assert!(c.verify_boundary_squares().is_ok());
        }
    }
}

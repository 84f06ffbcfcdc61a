use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::algebra::{builtin_from_spec, builtin_morphism, matrix_algebra, Algebra};
use crate::complexes::tensor::{decode, encode};
use crate::complexes::{ComplexKind, Limits, PBuilder, Permutation};
use crate::linhom::{betti_numbers, homology, induced_image_rank, induced_map, q, SparseMatrix, SparseVec};

fn set(spec: &str) -> ComplexSet {
    ComplexSet::new(Arc::new(builtin_from_spec(spec).unwrap()), Limits::new(1_000_000))
}

fn gl(base: &ComplexSet, n: usize) -> ComplexSet {
    ComplexSet::new(Arc::new(matrix_algebra(base.algebra(), n).unwrap()), Limits::new(1_000_000))
}

const BUILTINS: [&str; 6] = ["rationals", "dual", "truncated_poly:3", "split:2", "cyclic:2", "s3"];

#[test]
fn phi_low_degrees() {
    let s = set("s3");
    let f = phi(&s, 2).unwrap();
    let d = 6;
    assert_eq!(*f.map(1).unwrap(), SparseMatrix::identity(d));
    let (a0, a1, a2) = (1, 4, 2);
    let col = f.map(3).unwrap().column(encode(&[a0, a1, a2], d));
    let expected = SparseVec::from_terms(vec![(encode(&[a0, a1, a2], d), q(1)), (encode(&[a0, a2, a1], d), q(-1))]);
    assert_eq!(*col, expected);
}

#[test]
fn phi_is_a_chain_map() {
    for spec in BUILTINS {
        let cutoff = if spec == "s3" { 3 } else { 4 };
        assert!(phi(&set(spec), cutoff).unwrap().verify().is_ok(), "{spec}");
    }
}

#[test]
fn broken_phi_is_caught() {
    let w = phi_with(&set("dual"), 3, true).unwrap().verify().unwrap_err();
    assert!(w.degree >= 2, "{w:?}");
}

#[test]
fn phi_image_is_antisymmetric() {
    let s = set("truncated_poly:3");
    let f = phi(&s, 3).unwrap();
    let d: usize = 3;
    for col in 0..d.pow(4) {
        let mut xs = decode(col, 4, d);
        xs.swap(1, 3);
        let swapped = f.map(4).unwrap().column(encode(&xs, d));
        assert_eq!(*swapped, f.map(4).unwrap().column(col).neg());
    }
}

#[test]
fn theta_examples() {
    let s = set("dual");
    let t = theta(&s, 4).unwrap();
    assert!(t.verify().is_ok());
    // θ(1 ∧ ε) is the class of (1, ε)
    let bases = crate::complexes::ConnesBuilder::new(s.algebra().clone(), 1, s.limits()).unwrap().into_bases();
    let (k, sign) = bases[1].class(encode(&[0, 1], 2)).unwrap();
    assert_eq!(*t.map(2).unwrap().column(0), SparseVec::from_terms(vec![(k, q(sign))]));
    // and (1, ε) + (ε, 1) vanishes in the quotient
    let sum = bases[1].project(&SparseVec::from_terms(vec![(encode(&[0, 1], 2), q(1)), (encode(&[1, 0], 2), q(1))]));
    assert!(sum.is_zero());
}

#[test]
fn epsilon_and_projections_are_chain_maps() {
    let m2 = ComplexSet::new(
        Arc::new(matrix_algebra(&Arc::new(builtin_from_spec("rationals").unwrap()), 2).unwrap()),
        Limits::new(1_000_000),
    );
    assert!(epsilon(&m2, 3).unwrap().verify().is_ok());
    for spec in ["dual", "s3"] {
        let s = set(spec);
        let c = if spec == "s3" { 3 } else { 4 };
        assert!(epsilon(&s, c).unwrap().verify().is_ok(), "{spec}");
        assert!(proj_lie(&s, c).unwrap().verify().is_ok(), "{spec}");
        assert!(proj_adjoint(&s, c).unwrap().verify().is_ok(), "{spec}");
        assert!(proj_i(&s, c).unwrap().verify().is_ok(), "{spec}");
    }
}

#[test]
fn diagram_identities() {
    for spec in ["dual", "s3", "truncated_poly:3"] {
        let s = set(spec);
        let c = if spec == "s3" { 3 } else { 4 };
        let f = phi(&s, c).unwrap();
        let lhs = epsilon(&s, c).unwrap().compose(&proj_adjoint(&s, c).unwrap()).unwrap();
        assert!(lhs.first_difference(&f).unwrap().is_none(), "ε∘proj_adj over {spec}");
        let i_phi = proj_i(&s, c).unwrap().compose(&f).unwrap();
        let theta_proj = theta(&s, c).unwrap().compose(&proj_lie(&s, c + 1).unwrap()).unwrap();
        assert!(i_phi.first_difference(&theta_proj).unwrap().is_none(), "I∘φ over {spec}");
    }
}

#[test]
fn projections_kill_repeats() {
    let s = set("dual");
    let pl = proj_lie(&s, 2).unwrap();
    assert!(pl.map(2).unwrap().column(encode(&[1, 1], 2)).is_zero());
    let pa = proj_adjoint(&s, 2).unwrap();
    assert!(pa.map(3).unwrap().column(encode(&[0, 1, 1], 2)).is_zero());
}

#[test]
fn i_is_identity_in_degree_zero() {
    let s = set("s3");
    assert_eq!(*proj_i(&s, 1).unwrap().map(0).unwrap(), SparseMatrix::identity(6));
}

#[test]
fn kahler_p() {
    let s = set("truncated_poly:3");
    let k = kahler_maps(&s, 3).unwrap();
    // p(1 ⊗ x) = dx, p(x ⊗ x) = x dx; both nonzero and independent
    let p1 = k.p.map(2).unwrap();
    assert_eq!(crate::linhom::rank(p1), k.modules[1].dim());
    assert_eq!(k.modules[1].dim(), 2);
    let a = p1.column(encode(&[0, 1], 3));
    let b = p1.column(encode(&[1, 1], 3));
    assert!(
        !a.is_zero()
            && !b.is_zero()
            && crate::linhom::rank(&SparseMatrix::from_columns(2, vec![a.clone(), b.clone()])) == 2
    );
    for n in 1..=3 {
        assert_eq!(crate::linhom::rank(k.p.map(n).unwrap()), k.modules[n - 1].dim(), "onto in degree {}", n - 1);
    }
    let split = kahler_maps(&set("split:2"), 3).unwrap();
    for n in 2..=4 {
        assert!(split.p.map(n).unwrap().is_zero());
    }
    assert!(kahler_maps(&set("s3"), 2).is_err());
}

#[test]
fn kahler_square_commutes_up_to_boundaries() {
    for spec in ["truncated_poly:3", "dual", "split:2"] {
        let s = set(spec);
        let c = 3;
        let k = kahler_maps(&s, c).unwrap();
        let diff = k.epsilon.compose(&k.p).unwrap().sub(&phi(&s, c).unwrap()).unwrap();
        let chh = s.get(ComplexKind::Chh, c + 1).unwrap();
        for n in 1..=c {
            let h = homology(&chh, n).unwrap();
            let m = diff.map(n + 1).unwrap();
            for col in 0..m.cols() {
                assert!(h.is_boundary(m.column(col)), "{spec} degree {n} column {col}");
            }
        }
    }
}

#[test]
fn trace_examples() {
    let s = set("dual");
    let g = gl(&s, 2);
    let tr = trace(&g, &s, 2).unwrap();
    let meta = g.algebra().matrix_meta().unwrap().clone();
    let big = g.algebra().dim();
    let eps = 1;
    assert_eq!(*tr.map(0).unwrap().column(meta.index(0, 0, eps)), SparseVec::unit(eps));
    let closing = encode(&[meta.index(0, 1, eps), meta.index(1, 0, 0)], big);
    assert_eq!(*tr.map(1).unwrap().column(closing), SparseVec::unit(encode(&[eps, 0], 2)));
    let open = encode(&[meta.index(0, 1, eps), meta.index(0, 1, 0)], big);
    assert!(tr.map(1).unwrap().column(open).is_zero());
}

#[test]
fn morita_maps() {
    for spec in ["dual", "rationals"] {
        let s = set(spec);
        let g = gl(&s, 2);
        let tr = trace(&g, &s, 3).unwrap();
        let co = corner(&s, &g, 3).unwrap();
        assert!(tr.verify().is_ok() && co.verify().is_ok());
        let round = tr.compose(&co).unwrap();
        assert!(round
            .first_difference(&crate::linhom::ChainMapRep::identity(s.get(ComplexKind::Chh, 3).unwrap()))
            .unwrap()
            .is_none());
        for n in 0..=2 {
            let ind = induced_map(&round, n).unwrap();
            assert_eq!(ind, SparseMatrix::identity(ind.cols()));
        }
    }
}

#[test]
fn trace_phi_is_the_composite() {
    let s = set("dual");
    let g = gl(&s, 2);
    let direct = trace_phi(&g, &s, 2).unwrap();
    let composite = trace(&g, &s, 2).unwrap().compose(&phi(&g, 2).unwrap()).unwrap();
    assert!(direct.first_difference(&composite).unwrap().is_none());
    assert!(direct.verify().is_ok());
}

#[test]
fn lift_p_examples() {
    let a = Arc::new(builtin_from_spec("s3").unwrap());
    let d = a.dim();
    let n3 = 3;
    let meta = crate::algebra::MatrixMeta { size: n3, base: a.clone() };
    let big = n3 * n3 * d;
    let p = PBuilder::new(a.clone(), 2);
    let (x, y) = (2, 5);
    let col = p.index(1, &Permutation::cyclic_shift(2), &[x, y]).unwrap();
    let lift = lift_p(&a, n3, 1).unwrap();
    assert_eq!(*lift.column(col), SparseVec::unit(encode(&[meta.index(0, 1, x), meta.index(1, 0, y)], big)));
    // tr∘φ∘lift_P(τ ⊗ a) = a
    let tpl = trace_phi_lift_p(&a, n3, 2).unwrap();
    let tau = Permutation::cyclic_shift(3);
    for t in 0..d.pow(3) {
        let xs = decode(t, 3, d);
        assert_eq!(*tpl.column(p.index(2, &tau, &xs).unwrap()), SparseVec::unit(t));
    }
    assert!(lift_p(&a, 2, 2).is_err());
}

#[test]
fn theta_nf_inverts_lift() {
    let a = Arc::new(builtin_from_spec("dual").unwrap());
    let d = a.dim();
    let p = PBuilder::new(a.clone(), 2);
    let m = theta_nf_lift_p(&a, 3, 2).unwrap();
    for col in 0..m.cols() {
        let (sigma, xs) = p.split(2, col);
        let expected = sigma.lex_rank() * d.pow(3) + encode(&xs, d);
        assert_eq!(*m.column(col), SparseVec::unit(expected));
    }
    // direct Θ_NF on CL_2(gl_2(dual)) agrees on a pattern monomial
    let g = matrix_algebra(&a, 2).unwrap();
    let meta = g.matrix_meta().unwrap();
    let t = theta_nf_matrix(&g, 2).unwrap();
    let mono = encode(&[meta.index(0, 1, 1), meta.index(1, 0, 0)], g.dim());
    let swap = Permutation::transposition(2, 0, 1).lex_rank();
    assert_eq!(*t.column(mono), SparseVec::unit(swap * 4 + encode(&[1, 0], 2)));
    let repeated = encode(&[meta.index(0, 0, 1), meta.index(0, 1, 0)], g.dim());
    assert!(t.column(repeated).is_zero());
}

#[test]
fn bar_maps() {
    for spec in ["cyclic:2", "cyclic:3", "s3"] {
        let s = set(spec);
        let c = if spec == "s3" { 3 } else { 4 };
        let pi = bar_pi(&s, c).unwrap();
        let iota = bar_iota(&s, c).unwrap();
        assert!(pi.verify().is_ok() && iota.verify().is_ok(), "{spec}");
        let round = pi.compose(&iota).unwrap();
        let id = crate::linhom::ChainMapRep::identity(s.get(ComplexKind::Bar, c).unwrap());
        assert!(round.first_difference(&id).unwrap().is_none(), "{spec}");
    }
    let s = set("cyclic:3");
    let iota = bar_iota(&s, 1).unwrap();
    // ι(g) = (g^{-1}, g)
    assert_eq!(*iota.map(1).unwrap().column(1), SparseVec::unit(encode(&[2, 1], 3)));
    assert!(bar_pi(&set("dual"), 2).is_err());
}

#[test]
fn group_homology_is_a_retract() {
    let s = set("cyclic:3");
    let iota = bar_iota(&s, 4).unwrap();
    let bar = betti_numbers(&s.get(ComplexKind::Bar, 4).unwrap());
    for n in 0..=3 {
        assert_eq!(induced_image_rank(&iota, n).unwrap(), bar[n]);
    }
}

#[test]
fn embedding_into_p() {
    let s = set("dual");
    let e = embed_cy(&s, 4).unwrap();
    assert!(e.verify().is_ok());
    assert_eq!(*e.map(0).unwrap(), SparseMatrix::identity(2));
    let hh = betti_numbers(&s.get(ComplexKind::Chh, 4).unwrap());
    let hp = betti_numbers(&s.get(ComplexKind::P, 4).unwrap());
    assert_eq!(hh, hp);
    for n in 0..=3 {
        let m = induced_map(&e, n).unwrap();
        assert_eq!(crate::linhom::rank(&m), hh[n]);
    }
}

#[test]
fn functorial_maps_commute() {
    let f = builtin_morphism("trunc3_to_q").unwrap();
    let a = ComplexSet::new(f.source().clone(), Limits::new(1_000_000));
    let b = ComplexSet::new(f.target().clone(), Limits::new(1_000_000));
    assert!(cl_map(&f, &a, &b, 3, 3).unwrap().verify().is_ok());
    assert!(chh_map(&f, &a, &b, 3, 3).unwrap().verify().is_ok());
    assert!(clambda_map(&f, &a, &b, 3, 3).unwrap().verify().is_ok());
    assert!(cl_map(&f, &b, &a, 2, 2).is_err());
}

#[test]
fn kinds_parse() {
    for k in MapKind::ALL {
        assert_eq!(k.id().parse::<MapKind>().unwrap(), k);
    }
    assert_eq!(MapKind::Phi.shift(), 1);
    assert!(!MapKind::LiftP.is_chain_map());
}

fn x2_algebra() -> Arc<Algebra> {
    Arc::new(builtin_from_spec("truncated_poly:2").unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn i_kills_rotation_defect(coords in proptest::collection::vec(-3i64..=3, 27)) {
        let s = set("truncated_poly:3");
        let i = proj_i(&s, 2).unwrap();
        let v = SparseVec::from_dense(&coords.iter().map(|&c| q(c)).collect::<Vec<_>>());
        // (1 - t) v with t(x_0, x_1, x_2) = (+1)(x_2, x_0, x_1) in even degree
        let rotated = SparseVec::from_terms(v.iter().map(|(k, c)| {
            let mut xs = decode(k, 3, 3);
            xs.rotate_right(1);
            (encode(&xs, 3), c.clone())
        }).collect());
        prop_assert!(i.map(2).unwrap().apply(&v.sub(&rotated)).is_zero());
    }

    #[test]
    fn phi_commutes_on_random_chains(coords in proptest::collection::vec(-3i64..=3, 8)) {
        let s = ComplexSet::new(x2_algebra(), Limits::new(1000));
        let f = phi(&s, 2).unwrap();
        let cl = s.get(ComplexKind::Cl, 3).unwrap();
        let chh = s.get(ComplexKind::Chh, 2).unwrap();
        let v = SparseVec::from_dense(&coords.iter().map(|&c| q(c)).collect::<Vec<_>>());
        let lhs = chh.boundary(2).unwrap().apply(&f.map(3).unwrap().apply(&v));
        let rhs = f.map(2).unwrap().apply(&cl.boundary(3).unwrap().apply(&v));
        prop_assert_eq!(lhs, rhs);
    }
}

mod common;

use braidcheck::axioms::check_all;
use braidcheck::braid::classify;
use braidcheck::derived::derive_tau;
use braidcheck::spec::{self, builtin, TensorName};
use braidcheck::tensor::{encode, eval, Scalar};
use braidcheck::MultiOp;
use common::{c, change_basis, Mat};
use num_complex::Complex64;
use proptest::prelude::*;

const EPS: f64 = 1e-9;

/// Operators with small integer entries, so products are exact in f64.
fn op(dim: usize, arity_in: usize, arity_out: usize) -> impl Strategy<Value = MultiOp> {
    let n = dim.pow(arity_in as u32) * dim.pow(arity_out as u32);
    prop::collection::vec((-3i8..=3, -2i8..=2), n).prop_map(move |v| {
        let cols = dim.pow(arity_in as u32);
        MultiOp::from_fn(dim, arity_in, arity_out, |r, col| {
            let (re, im) = v[r * cols + col];
            Complex64::new(re as f64, im as f64)
        })
    })
}

fn real_op(dim: usize, arity_in: usize, arity_out: usize) -> impl Strategy<Value = MultiOp> {
    let n = dim.pow(arity_in as u32) * dim.pow(arity_out as u32);
    prop::collection::vec(-2.0f64..2.0, n).prop_map(move |v| {
        let cols = dim.pow(arity_in as u32);
        MultiOp::from_fn(dim, arity_in, arity_out, |r, col| c(v[r * cols + col]))
    })
}

fn near_identity(dim: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-0.3f64..0.3, dim * dim).prop_map(move |v| {
        (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| c(if i == j { 1.0 } else { 0.0 } + v[i * dim + j]))
                    .collect()
            })
            .collect()
    })
}

fn close(a: &MultiOp, b: &MultiOp) -> bool {
    a.residual(b).unwrap() < EPS
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(f in op(2, 1, 2), g in op(2, 2, 1), h in op(2, 1, 2)) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert!(close(&left, &right));
    }

    #[test]
    fn tensor_is_associative(f in op(2, 1, 1), g in op(2, 1, 2), h in op(2, 0, 1)) {
        let left = f.tensor(&g).unwrap().tensor(&h).unwrap();
        let right = f.tensor(&g.tensor(&h).unwrap()).unwrap();
        prop_assert!(close(&left, &right));
    }

    #[test]
    fn interchange_law(
        f in op(2, 1, 1),
        g in op(2, 2, 1),
        h in op(2, 1, 1),
        k in op(2, 1, 2),
    ) {
        let left = f.tensor(&g).unwrap().compose(&h.tensor(&k).unwrap()).unwrap();
        let right = f.compose(&h).unwrap().tensor(&g.compose(&k).unwrap()).unwrap();
        prop_assert!(close(&left, &right));
    }

    #[test]
    fn identity_is_neutral(f in op(3, 2, 1)) {
        prop_assert!(close(&MultiOp::identity(3, 1).compose(&f).unwrap(), &f));
        prop_assert!(close(&f.compose(&MultiOp::identity(3, 2)).unwrap(), &f));
    }

    #[test]
    fn padding_matches_kronecker(f in op(2, 2, 1), l in 0usize..2, r in 0usize..2) {
        let kron = MultiOp::identity(2, l)
            .tensor(&f)
            .unwrap()
            .tensor(&MultiOp::identity(2, r))
            .unwrap();
        prop_assert!(close(&f.padded(l, r), &kron));
    }

    #[test]
    fn chain_matches_naive_fold(
        a in op(2, 2, 2),
        b in op(2, 1, 2),
        m in op(2, 2, 1),
        e in op(2, 1, 0),
    ) {
        let chain = eval(&[e.at(0, 1), m.at(0, 1), a.at(1, 0), b.at(0, 1), m.at(1, 0)]).unwrap();
        let naive = [e.padded(0, 1), m.padded(0, 1), a.padded(1, 0), b.padded(0, 1), m.padded(1, 0)]
            .into_iter()
            .reduce(|acc, f| acc.compose(&f).unwrap())
            .unwrap();
        prop_assert!(close(&chain, &naive));
    }

    #[test]
    fn residual_is_a_metric(f in real_op(2, 1, 2), g in real_op(2, 1, 2), h in real_op(2, 1, 2)) {
        let d = |x: &MultiOp, y: &MultiOp| x.residual(y).unwrap();
        prop_assert_eq!(d(&f, &f), 0.0);
        prop_assert_eq!(d(&f, &g), d(&g, &f));
        prop_assert!(d(&f, &h) <= d(&f, &g) + d(&g, &h) + 1e-15);
    }

    #[test]
    fn sparse_and_dense_agree(f in op(2, 2, 2), g in op(2, 2, 2)) {
        let (fs, gs) = (f.to_sparse(), g.to_sparse());
        prop_assert!(fs.is_sparse());
        prop_assert_eq!(&fs, &f);
        prop_assert!(close(&fs.compose(&gs).unwrap(), &f.compose(&g).unwrap()));
        prop_assert!(close(&fs.tensor(&g).unwrap(), &f.tensor(&gs).unwrap()));
        prop_assert_eq!(fs.residual(&g).unwrap(), f.residual(&g).unwrap());
    }

    #[test]
    fn inverse_round_trips(g in near_identity(4)) {
        let a = common::from_dense(&g, 2, 2, 2);
        let inv = a.invert().unwrap();
        prop_assert!(close(&a.compose(&inv).unwrap(), &MultiOp::identity(2, 2)));
        prop_assert!(close(&inv.compose(&a).unwrap(), &MultiOp::identity(2, 2)));
        prop_assert!(close(&a.pow(-2).unwrap().compose(&a.pow(2).unwrap()).unwrap(), &MultiOp::identity(2, 2)));
    }

    #[test]
    fn entries_round_trip(f in op(3, 2, 1)) {
        let entries = spec::entries_of(&f);
        let back = MultiOp::from_triplets(
            3, 2, 1,
            entries.iter().map(|e| (encode(&e.indices[..1], 3), encode(&e.indices[1..], 3), Scalar::new(e.re, e.im))),
        ).unwrap();
        prop_assert_eq!(back, f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn json_round_trip_is_exact(name in prop::sample::select(spec::builtin_names()), g in near_identity(2)) {
        let s = builtin(name).unwrap();
        let s = if s.dim() == 2 { change_basis(&s, &g) } else { s };
        let back = spec::from_json(&spec::to_json(&s)).unwrap();
        prop_assert_eq!(back.residual(&s).unwrap(), 0.0);
        prop_assert_eq!(back.labels(), s.labels());
    }

    #[test]
    fn axioms_survive_basis_change(
        name in prop::sample::select(vec!["z2", "sweedler", "clifford_rank1", "superline"]),
        seed in prop::collection::vec(-0.3f64..0.3, 16),
    ) {
        let s = builtin(name).unwrap();
        let n = s.dim();
        let g: Mat = (0..n)
            .map(|i| (0..n).map(|j| c(if i == j { 1.0 } else { 0.0 } + seed[i * n + j])).collect())
            .collect();
        let t = change_basis(&s, &g);
        let report = check_all(&t);
        prop_assert!(report.overall(), "{}", report.to_text());

        let before = classify(&s, &derive_tau(&s).unwrap()).unwrap();
        let after = classify(&t, &derive_tau(&t).unwrap()).unwrap();
        prop_assert_eq!(before.majid_type, after.majid_type);
        prop_assert_eq!((before.m1, before.ml, before.mr, before.m3), (after.m1, after.ml, after.mr, after.m3));
    }

    #[test]
    fn perturbed_spec_is_detected(
        name in prop::sample::select(vec!["sweedler", "clifford_rank1"]),
        which in 0usize..6,
        pos in any::<prop::sample::Index>(),
        delta in 0.01f64..1.0,
    ) {
        let s = builtin(name).unwrap();
        let t = TensorName::ALL[which];
        let cells = s.tensor(t).rows() * s.tensor(t).cols();
        let k = pos.index(cells);
        let cols = s.tensor(t).cols();
        let bad = s.perturbed(t, k / cols, k % cols, delta).unwrap();
        let report = braidcheck::cli::check(&bad, braidcheck::cli::Suite::All, None).unwrap();
        prop_assert!(!report.overall());
    }
}

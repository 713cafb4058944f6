//! Engine output against the brute-force oracle in `common`, and the golden
//! values that oracle produced.

mod common;

use std::sync::Arc;

use common::{Mod, Ring};
use semidual_core::corpus::{self, sample_modules};
use semidual_core::module::{hom_module, tensor_module};
use semidual_core::relhom::{rel_ext_range, ExtMode, Semidualizing};
use semidual_core::resolve::{betti_numbers, ext_dims};
use semidual_core::{Algebra, Module, Poly};

/// Variable actions of an engine module, in the ring's variable order.
fn to_oracle(m: &Module) -> Mod {
    let ring = m.ring();
    let act = ring
        .vars()
        .iter()
        .map(|v| {
            let e = ring.element_of_poly(&Poly::var(v, 1)).unwrap();
            let a = m.act(&e);
            (0..m.dim())
                .map(|i| (0..m.dim()).map(|j| a.get(i, j) as u64).collect())
                .collect()
        })
        .collect();
    Mod { n: m.dim(), act }
}

fn pairs() -> Vec<(Arc<Algebra>, Ring)> {
    vec![
        (corpus::r1(), common::r1()),
        (corpus::r2(), common::r2()),
        (corpus::r3(), common::r3()),
        (corpus::r4(), common::r4()),
    ]
}

#[test]
fn ring_invariants_match_oracle() {
    // (dim, socle dim), frozen from the oracle.
    let golden = [(3, 2), (3, 1), (4, 1), (4, 3)];
    for ((ring, oracle), (dim, socle)) in pairs().into_iter().zip(golden) {
        let rep = ring.ring_report();
        assert_eq!(oracle.dim(), dim);
        assert_eq!(oracle.socle_dim(&oracle.regular()), socle);
        assert_eq!(rep.dim, dim);
        assert_eq!(rep.socle_dim, socle);
        assert_eq!(rep.is_gorenstein, socle == 1);
    }
}

#[test]
fn betti_numbers_of_k_match_oracle() {
    let golden: [&[usize]; 4] = [
        &[1, 2, 4, 8, 16, 32],
        &[1, 1, 1, 1, 1, 1],
        &[1, 2, 3, 4, 5, 6],
        &[1, 3, 9, 27],
    ];
    for ((ring, oracle), want) in pairs().into_iter().zip(golden) {
        let top = want.len() - 1;
        assert_eq!(oracle.betti(&oracle.residue(), top), want);
        let k = Module::residue_field(ring).unwrap();
        assert_eq!(betti_numbers(&k, top).unwrap(), want);
    }
}

#[test]
fn betti_numbers_of_dualizing_module_match_oracle() {
    let golden: [&[usize]; 4] = [
        &[2, 3, 6, 12, 24],
        &[1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0],
        &[3, 8, 24, 72],
    ];
    for ((ring, oracle), want) in pairs().into_iter().zip(golden) {
        let top = want.len() - 1;
        let od = oracle.dual(&oracle.regular());
        assert_eq!(oracle.betti(&od, top), want);
        let d = Module::dualizing(ring);
        let mut got = betti_numbers(&d, top).unwrap();
        got.resize(want.len(), 0);
        assert_eq!(got, want);
    }
}

#[test]
fn hom_and_tensor_of_dualizing_module() {
    // (dim Hom(D,k), dim D⊗D, dim Hom(D,D), dim D⊗k), frozen from the oracle.
    let golden = [(2, 4, 3, 2), (1, 3, 3, 1), (1, 4, 4, 1), (3, 9, 4, 3)];
    for ((ring, oracle), want) in pairs().into_iter().zip(golden) {
        let (ok, od) = (oracle.residue(), oracle.dual(&oracle.regular()));
        let o = (
            oracle.hom(&od, &ok).n,
            oracle.tensor(&od, &od).n,
            oracle.hom(&od, &od).n,
            oracle.tensor(&od, &ok).n,
        );
        assert_eq!(o, want);
        let k = Module::residue_field(ring.clone()).unwrap();
        let d = Module::dualizing(ring);
        let e = (
            hom_module(&d, &k).unwrap().dim(),
            tensor_module(&d, &d).unwrap().module.dim(),
            hom_module(&d, &d).unwrap().dim(),
            tensor_module(&d, &k).unwrap().module.dim(),
        );
        assert_eq!(e, want);
    }
}

#[test]
fn random_modules_agree_with_oracle() {
    for (ring, oracle) in pairs() {
        let mods = sample_modules(&ring, 11, 8, 5);
        for (j, m) in mods.iter().enumerate() {
            let n = &mods[(j + 1) % mods.len()];
            let (om, on) = (to_oracle(m), to_oracle(n));
            assert_eq!(hom_module(m, n).unwrap().dim(), oracle.hom(&om, &on).n);
            assert_eq!(
                tensor_module(m, n).unwrap().module.dim(),
                oracle.tensor(&om, &on).n
            );
            assert_eq!(m.num_generators().unwrap(), oracle.num_generators(&om));
            let mut b = betti_numbers(m, 2).unwrap();
            b.resize(3, 0);
            assert_eq!(b, oracle.betti(&om, 2));
        }
    }
}

#[test]
fn relative_ext_of_residue_field_over_r1() {
    // Hom(D, k) is two copies of k (its radical vanishes), so the formula side
    // is Ext(k², k²) = 4 · β_i(k).
    let oracle = common::r1();
    let (ok, od) = (oracle.residue(), oracle.dual(&oracle.regular()));
    let h = oracle.hom(&od, &ok);
    assert_eq!((h.n, oracle.num_generators(&h)), (2, 2));
    let betti = oracle.betti(&ok, 4);
    let want: Vec<usize> = betti.iter().map(|b| h.n * h.n * b).collect();
    assert_eq!(want, [4, 8, 16, 32, 64]);

    let ring = corpus::r1();
    let k = Module::residue_field(ring.clone()).unwrap();
    let sd = Semidualizing::certify(&Module::dualizing(ring), 5).unwrap();
    let r = rel_ext_range(4, &sd, &k, &k, ExtMode::Both).unwrap();
    let proper: Vec<usize> = r.iter().map(|x| x.dim_via_proper.unwrap()).collect();
    let formula: Vec<usize> = r.iter().map(|x| x.dim_via_formula.unwrap()).collect();
    assert_eq!(proper, want);
    assert_eq!(formula, want);
    assert_eq!(ext_dims(4, &k, &k).unwrap(), betti);
}

#[test]
fn presentation_examples() {
    let ring = corpus::r1();
    let x = ring.element_of_poly(&Poly::var("x", 1)).unwrap();
    let y = ring.element_of_poly(&Poly::var("y", 1)).unwrap();
    let (k, _) = semidual_core::module::presentation_to_module(&ring, 1, 2, &[vec![x, y]]).unwrap();
    assert_eq!(k.dim(), 1);
    let (r, _) = semidual_core::module::presentation_to_module(&ring, 1, 0, &[vec![]]).unwrap();
    assert_eq!(r.dim(), 3);
    let r2 = corpus::r2();
    let x = r2.element_of_poly(&Poly::var("x", 1)).unwrap();
    let (q, _) = semidual_core::module::presentation_to_module(&r2, 1, 1, &[vec![x]]).unwrap();
    assert_eq!(q.dim(), 1);
}

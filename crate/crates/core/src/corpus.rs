//! The curated rings and a seeded random-module generator.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::Field;
use crate::module::{presentation_to_module, Module};
use crate::poly::{Monomial, Poly};
use crate::ring::Algebra;

fn mono(parts: &[(&str, u32)]) -> Poly {
    let m: Monomial = parts.iter().map(|&(v, e)| (v.into(), e)).collect();
    Poly {
        terms: alloc::vec![(1, m)],
    }
}

fn quadratic_quotient(p: u64, vars: &[&str]) -> Arc<Algebra> {
    let mut rels = Vec::new();
    for (i, a) in vars.iter().enumerate() {
        for b in &vars[i..] {
            rels.push(if a == b {
                mono(&[(a, 2)])
            } else {
                mono(&[(a, 1), (b, 1)])
            });
        }
    }
    let field = Field::new(p).expect("prime");
    Arc::new(Algebra::monomial_quotient(field, vars, &rels).expect("cofinite"))
}

/// `GF(2)[x,y]/(x², xy, y²)`: not Gorenstein, socle of dimension 2.
pub fn r1() -> Arc<Algebra> {
    quadratic_quotient(2, &["x", "y"])
}

/// `GF(3)[x]/(x³)`: Gorenstein.
pub fn r2() -> Arc<Algebra> {
    let field = Field::new(3).expect("prime");
    Arc::new(Algebra::monomial_quotient(field, &["x"], &[Poly::var("x", 3)]).expect("cofinite"))
}

/// `GF(2)[x,y]/(x², y²)`: a Gorenstein complete intersection.
pub fn r3() -> Arc<Algebra> {
    let field = Field::new(2).expect("prime");
    let rels = [Poly::var("x", 2), Poly::var("y", 2)];
    Arc::new(Algebra::monomial_quotient(field, &["x", "y"], &rels).expect("cofinite"))
}

/// `GF(5)[x,y,z]/(all quadratic monomials)`: not Gorenstein, socle of dimension 3.
pub fn r4() -> Arc<Algebra> {
    quadratic_quotient(5, &["x", "y", "z"])
}

/// The four curated rings with their names.
pub fn corpus_rings() -> Vec<(&'static str, Arc<Algebra>)> {
    alloc::vec![("R1", r1()), ("R2", r2()), ("R3", r3()), ("R4", r4())]
}

/// Cokernel of a seeded random `n x m` matrix over the ring, `1 <= n <= max_n`,
/// `0 <= m <= max_m`. Entries are mostly radical elements so the result is
/// rarely zero; deterministic per `(ring, seed)`.
pub fn random_module(ring: &Arc<Algebra>, seed: u64, max_n: usize, max_m: usize) -> Module {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_module_from(ring, &mut rng, max_n, max_m)
}

fn random_module_from(
    ring: &Arc<Algebra>,
    rng: &mut ChaCha8Rng,
    max_n: usize,
    max_m: usize,
) -> Module {
    let n = rng.gen_range(1..=max_n.max(1));
    let m = rng.gen_range(0..=max_m);
    let entries: Vec<Vec<Vec<u32>>> = (0..n)
        .map(|_| (0..m).map(|_| random_entry(ring, rng)).collect())
        .collect();
    let (module, _) =
        presentation_to_module(ring, n, m, &entries).expect("well-shaped presentation");
    module
}

fn random_entry(ring: &Algebra, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let p = ring.field().modulus();
    let mut e = ring.zero_element();
    if rng.gen_ratio(1, 4) {
        return e;
    }
    let rad = ring.radical();
    for j in 0..rad.cols() {
        let c = rng.gen_range(0..p);
        for (x, y) in e.iter_mut().zip(rad.column(j)) {
            *x = ring.field().add(*x, ring.field().mul(c, y));
        }
    }
    if rng.gen_ratio(1, 8) {
        let c = rng.gen_range(1..p);
        for (x, &u) in e.iter_mut().zip(ring.unit()) {
            *x = ring.field().add(*x, ring.field().mul(c, u));
        }
    }
    e
}

/// `count` random modules of k-dimension in `1..=max_dim`, drawn from one
/// seeded stream (presentations with `n <= 3`, `m <= 4`).
pub fn sample_modules(ring: &Arc<Algebra>, seed: u64, count: usize, max_dim: usize) -> Vec<Module> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = random_module_from(ring, &mut rng, 3, 4);
        if m.dim() >= 1 && m.dim() <= max_dim {
            out.push(m.with_label(alloc::format!("M{}", out.len())));
        }
    }
    out
}

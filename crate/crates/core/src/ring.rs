//! Finite-dimensional commutative algebras over GF(p) given by structure
//! constants, with the radical, socle and Loewy data of local ones.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exactlin::{Field, Mat, Subspace};
use crate::poly::Poly;

/// A commutative unital GF(p)-algebra with basis `e_0..e_{d-1}` and
/// multiplication `e_i e_j = sum_k c[i][j][k] e_k`.
///
/// Constructors validate the axioms, so every `Algebra` value is commutative,
/// associative and unital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    vars: Vec<String>,
    var_elems: Vec<Vec<u32>>,
    /// `table[(i * d + j) * d + k] = c[i][j][k]`
    table: Vec<u32>,
    unit: Vec<u32>,
    left: Vec<Mat>,
    radical: Subspace,
    generators: Vec<Vec<u32>>,
}

/// Summary of the local structure of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingReport {
    pub is_local: bool,
    pub socle_dim: usize,
    pub is_gorenstein: bool,
    /// Columns span the radical.
    pub radical_basis: Mat,
    pub loewy_length: usize,
    pub dim: usize,
    /// Minimal number of generators of the maximal ideal (local case).
    pub embedding_dim: usize,
}

impl Algebra {
    /// Builds an algebra from raw structure constants `table[i][j]` (a
    /// `d`-vector per pair) and the coordinates of the unit.
    pub fn from_structure_constants(
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<Vec<u32>>>,
        unit: Vec<u32>,
    ) -> Result<Algebra, Error> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::AlgebraAxiom("nonzero dimension"));
        }
        if table.len() != d
            || table
                .iter()
                .any(|r| r.len() != d || r.iter().any(|v| v.len() != d))
        {
            return Err(Error::DimensionMismatch(
                "structure constants must be d x d x d",
            ));
        }
        if unit.len() != d {
            return Err(Error::DimensionMismatch("unit must be a d-vector"));
        }
        let flat: Vec<u32> = table
            .iter()
            .flatten()
            .flatten()
            .map(|&x| x % field.modulus())
            .collect();
        let unit: Vec<u32> = unit.iter().map(|&x| x % field.modulus()).collect();
        let alg = Self::assemble(field, labels, Vec::new(), Vec::new(), flat, unit);
        alg.validate()?;
        Ok(alg.with_derived_data())
    }

    /// `k[vars] / (relations)` for monomial relations, with the standard
    /// monomials as basis ordered by degree, then lexicographically with the
    /// first variable largest.
    pub fn monomial_quotient(
        field: Field,
        vars: &[&str],
        relations: &[Poly],
    ) -> Result<Algebra, Error> {
        let nv = vars.len();
        let mut rels: Vec<Vec<u32>> = Vec::new();
        for (i, r) in relations.iter().enumerate() {
            let r = r.normalized(field.modulus());
            if r.terms.len() != 1 {
                return Err(Error::NonMonomialRelation(i));
            }
            let mut e = vec![0u32; nv];
            for (v, &x) in &r.terms[0].1 {
                let idx = vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))?;
                e[idx] += x;
            }
            rels.push(e);
        }
        if rels.iter().any(|e| e.iter().all(|&x| x == 0)) {
            return Err(Error::UnitIdeal);
        }
        let mut bound = vec![0u32; nv];
        for (v, b) in bound.iter_mut().enumerate() {
            *b = rels
                .iter()
                .filter(|e| e.iter().enumerate().all(|(w, &x)| (w == v) == (x > 0)))
                .map(|e| e[v])
                .min()
                .ok_or_else(|| Error::NotCofinite(vars[v].to_string()))?;
        }
        let divides = |r: &[u32], m: &[u32]| r.iter().zip(m).all(|(a, b)| a <= b);
        let mut monos: Vec<Vec<u32>> = Vec::new();
        let mut cur = vec![0u32; nv];
        loop {
            if !rels.iter().any(|r| divides(r, &cur)) {
                monos.push(cur.clone());
            }
            // odometer over the box
            let mut k = 0;
            while k < nv {
                cur[k] += 1;
                if cur[k] < bound[k] {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
            if k == nv {
                break;
            }
        }
        monos.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let d = monos.len();
        let index = |m: &[u32]| monos.iter().position(|x| x == m);
        let mut table = vec![0u32; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let prod: Vec<u32> = monos[i].iter().zip(&monos[j]).map(|(a, b)| a + b).collect();
                if let Some(k) = index(&prod) {
                    table[(i * d + j) * d + k] = 1;
                }
            }
        }
        let labels = monos.iter().map(|m| monomial_label(vars, m)).collect();
        let mut unit = vec![0u32; d];
        unit[index(&vec![0; nv]).expect("1 is standard")] = 1;
        let var_elems = (0..nv)
            .map(|v| {
                let mut e = vec![0u32; nv];
                e[v] = 1;
                let mut x = vec![0u32; d];
                if let Some(k) = index(&e) {
                    x[k] = 1;
                }
                x
            })
            .collect();
        let alg = Self::assemble(
            field,
            labels,
            vars.iter().map(|s| s.to_string()).collect(),
            var_elems,
            table,
            unit,
        );
        if d <= 24 {
            alg.validate()?;
        }
        Ok(alg.with_derived_data())
    }

    fn assemble(
        field: Field,
        labels: Vec<String>,
        vars: Vec<String>,
        var_elems: Vec<Vec<u32>>,
        table: Vec<u32>,
        unit: Vec<u32>,
    ) -> Algebra {
        let d = labels.len();
        let left = (0..d)
            .map(|i| {
                let mut m = Mat::zeros(field, d, d);
                for j in 0..d {
                    for k in 0..d {
                        m.set(k, j, table[(i * d + j) * d + k]);
                    }
                }
                m
            })
            .collect();
        Algebra {
            field,
            dim: d,
            labels,
            vars,
            var_elems,
            table,
            unit,
            left,
            radical: Subspace::zero(field, d),
            generators: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), Error> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Err(Error::AlgebraAxiom("commutativity"));
                }
            }
        }
        for i in 0..d {
            let mut e = vec![0u32; d];
            e[i] = 1;
            if self.mul(&self.unit, &e) != e {
                return Err(Error::AlgebraAxiom("the unit law"));
            }
        }
        // (e_i e_j) e_l = e_i (e_j e_l), via left multiplication matrices
        for i in 0..d {
            for j in 0..d {
                let lhs = self.left_mult(self.basis_product(i, j));
                let rhs = self.left[i].mul(&self.left[j]);
                if lhs != rhs {
                    return Err(Error::AlgebraAxiom("associativity"));
                }
            }
        }
        Ok(())
    }

    fn with_derived_data(mut self) -> Algebra {
        self.radical = self.compute_radical();
        self.generators = self.compute_generators();
        self
    }

    /// Nilradical as the kernel of an iterated Frobenius `x -> x^p`, which is
    /// GF(p)-linear on a commutative algebra of characteristic p.
    fn compute_radical(&self) -> Subspace {
        let d = self.dim;
        let f = self.field;
        let p = f.modulus() as u64;
        let cols: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                let mut e = vec![0u32; d];
                e[i] = 1;
                self.pow(&e, p)
            })
            .collect();
        let frob = Mat::from_columns(f, d, &cols);
        let mut it = Mat::identity(f, d);
        let mut reach = 1u64;
        while reach < d as u64 {
            it = frob.mul(&it);
            reach = reach.saturating_mul(p);
        }
        Subspace::span_of_columns(&it.kernel_basis())
    }

    fn compute_generators(&self) -> Vec<Vec<u32>> {
        let d = self.dim;
        if !self.is_local() {
            return (0..d)
                .map(|i| {
                    let mut e = vec![0u32; d];
                    e[i] = 1;
                    e
                })
                .collect();
        }
        let rad = self.radical.basis();
        let sq = self.ideal_product(&rad, &rad);
        let (chosen, _) = Subspace::span_of_columns(&sq).extend_by_columns(&rad);
        chosen.into_iter().map(|j| rad.column(j)).collect()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    /// Structure constants `c[i][j]` as a d-vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let d = self.dim;
        &self.table[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// Left multiplication by `e_i` as a `d x d` matrix.
    pub fn basis_mult(&self, i: usize) -> &Mat {
        &self.left[i]
    }

    /// Matrix of multiplication by an arbitrary element.
    pub fn left_mult(&self, a: &[u32]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            if c != 0 {
                m.add_scaled(&self.left[i], c);
            }
        }
        m
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.left_mult(a).mul_vec(b)
    }

    pub fn pow(&self, a: &[u32], mut e: u64) -> Vec<u32> {
        let mut acc = self.unit.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn zero_element(&self) -> Vec<u32> {
        vec![0; self.dim]
    }

    pub fn basis_element(&self, i: usize) -> Vec<u32> {
        let mut e = self.zero_element();
        e[i] = 1;
        e
    }

    /// Evaluates a polynomial over the algebra's variables.
    pub fn element_of_poly(&self, poly: &Poly) -> Result<Vec<u32>, Error> {
        let f = self.field;
        let mut out = self.zero_element();
        for (c, mono) in &poly.terms {
            let mut term = self.unit.clone();
            for (v, &e) in mono {
                let idx = self
                    .vars
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))?;
                term = self.mul(&term, &self.pow(&self.var_elems[idx], e as u64));
            }
            let c = f.reduce(*c);
            for (o, t) in out.iter_mut().zip(&term) {
                *o = f.add(*o, f.mul(c, *t));
            }
        }
        Ok(out)
    }

    /// Columns span the nilradical (the Jacobson radical, as R is Artinian).
    pub fn radical(&self) -> Mat {
        self.radical.basis()
    }

    pub fn radical_space(&self) -> &Subspace {
        &self.radical
    }

    /// Local with residue field GF(p): the radical has codimension one.
    pub fn is_local(&self) -> bool {
        self.radical.dim() + 1 == self.dim
    }

    /// Algebra generators: lifts of a basis of rad/rad^2 for local rings,
    /// otherwise the whole basis. Module actions are determined by these.
    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Span of all products `a * b` for columns `a` of `x`, `b` of `y`.
    pub fn ideal_product(&self, x: &Mat, y: &Mat) -> Mat {
        let mut cols = Vec::new();
        for i in 0..x.cols() {
            let lm = self.left_mult(&x.column(i));
            for j in 0..y.cols() {
                cols.push(lm.mul_vec(&y.column(j)));
            }
        }
        if cols.is_empty() {
            return Mat::zeros(self.field, self.dim, 0);
        }
        Mat::from_columns(self.field, self.dim, &cols).column_space()
    }

    pub fn ring_report(&self) -> RingReport {
        let f = self.field;
        let d = self.dim;
        let rad = self.radical.basis();
        let socle_dim = if rad.cols() == 0 {
            d
        } else {
            let blocks: Vec<Mat> = (0..rad.cols())
                .map(|j| self.left_mult(&rad.column(j)))
                .collect();
            d - Mat::vconcat(f, d, &blocks).rank()
        };
        let mut loewy = 0;
        let mut power = Mat::identity(f, d);
        while power.cols() > 0 {
            loewy += 1;
            power = self.ideal_product(&power, &rad);
        }
        let is_local = self.is_local();
        RingReport {
            is_local,
            socle_dim,
            is_gorenstein: is_local && socle_dim == 1,
            radical_basis: rad,
            loewy_length: loewy,
            dim: d,
            embedding_dim: if is_local { self.generators.len() } else { 0 },
        }
    }

    /// Coordinates of a radical element in the radical's echelon basis.
    pub fn radical_coordinates(&self, a: &[u32]) -> Option<Vec<u32>> {
        self.radical.coordinates(a)
    }

    /// Human-readable form of an element, e.g. `x + 2*y^2`.
    pub fn format_element(&self, a: &[u32]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let l = &self.labels[i];
            parts.push(match (c, l.as_str()) {
                (_, "1") => alloc::format!("{c}"),
                (1, _) => l.clone(),
                _ => alloc::format!("{c}*{l}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn monomial_label(vars: &[&str], e: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &x)| x > 0)
        .map(|(v, &x)| {
            if x == 1 {
                v.to_string()
            } else {
                alloc::format!("{v}^{x}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

//! Bounded complexes of free-like modules, minimal free and injective
//! resolutions, homology, Ext and Tor.
//!
//! Every complex here has terms `V^{b_i}` for one coefficient module `V`,
//! with differentials given by matrices of ring elements. Applying an additive
//! functor (Hom into N, tensor with N, Hom(C, -), ...) to a resolution only
//! changes the coefficient module, so one resolution serves every derived
//! computation.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exactlin::{Mat, Subspace};
use crate::module::{is_free, is_injective, matlis_dual, Module};
use crate::ring::Algebra;

/// A matrix of ring elements; entry `(r, c)` is a `d`-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    d: usize,
    entries: Vec<u32>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize, d: usize) -> RingMatrix {
        RingMatrix {
            rows,
            cols,
            d,
            entries: vec![0; rows * cols * d],
        }
    }

    pub fn identity(ring: &Algebra, n: usize) -> RingMatrix {
        let mut m = RingMatrix::zeros(n, n, ring.dim());
        for i in 0..n {
            m.set(i, i, ring.unit());
        }
        m
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        d: usize,
        entries: &[Vec<Vec<u32>>],
    ) -> RingMatrix {
        let mut m = RingMatrix::zeros(rows, cols, d);
        for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                m.set(r, c, e);
            }
        }
        m
    }

    /// Columns given as vectors of the free module `R^rows` (summand-major).
    pub fn from_free_columns(d: usize, rows: usize, cols: &[Vec<u32>]) -> RingMatrix {
        let mut m = RingMatrix::zeros(rows, cols.len(), d);
        for (c, v) in cols.iter().enumerate() {
            for r in 0..rows {
                m.set(r, c, &v[r * d..(r + 1) * d]);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &[u32] {
        let i = (r * self.cols + c) * self.d;
        &self.entries[i..i + self.d]
    }

    pub fn set(&mut self, r: usize, c: usize, v: &[u32]) {
        let i = (r * self.cols + c) * self.d;
        self.entries[i..i + self.d].copy_from_slice(v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut t = RingMatrix::zeros(self.cols, self.rows, self.d);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// True when every entry lies in the radical of `ring`.
    pub fn entries_in_radical(&self, ring: &Algebra) -> bool {
        (0..self.rows)
            .all(|r| (0..self.cols).all(|c| ring.radical_space().contains(self.get(r, c))))
    }

    /// The k-linear map `V^cols -> V^rows`, block `(r, c)` acting by entry `(r, c)`.
    pub fn kmatrix(&self, v: &Module) -> Mat {
        let n = v.dim();
        let mut out = Mat::zeros(v.field(), self.rows * n, self.cols * n);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.get(r, c);
                if e.iter().any(|&x| x != 0) {
                    out.set_block(r * n, c * n, &v.act(e));
                }
            }
        }
        out
    }
}

/// A block-diagonal matrix of ring elements: each block repeated `copies`
/// times, blocks laid out in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    blocks: Vec<(RingMatrix, usize)>,
}

impl Differential {
    pub fn single(m: RingMatrix) -> Differential {
        Differential {
            blocks: vec![(m, 1)],
        }
    }

    pub fn blocks(&self) -> &[(RingMatrix, usize)] {
        &self.blocks
    }

    pub fn rows(&self) -> usize {
        self.blocks.iter().map(|(b, c)| b.rows() * c).sum()
    }

    pub fn cols(&self) -> usize {
        self.blocks.iter().map(|(b, c)| b.cols() * c).sum()
    }

    pub fn transpose(&self) -> Differential {
        Differential {
            blocks: self
                .blocks
                .iter()
                .map(|(b, c)| (b.transpose(), *c))
                .collect(),
        }
    }

    /// Block-diagonal sum of `times` copies of `self`.
    pub fn repeated(&self, times: usize) -> Differential {
        if let [(b, c)] = self.blocks.as_slice() {
            return Differential {
                blocks: vec![(b.clone(), c * times)],
            };
        }
        let mut out = Differential { blocks: Vec::new() };
        for _ in 0..times {
            for (b, c) in &self.blocks {
                out.push_block(b.clone(), *c);
            }
        }
        out
    }

    /// Appends a block, merging with an identical last block.
    pub fn push_block(&mut self, block: RingMatrix, copies: usize) {
        if let Some((last, c)) = self.blocks.last_mut() {
            if *last == block {
                *c += copies;
                return;
            }
        }
        self.blocks.push((block, copies));
    }

    /// The full matrix of ring elements.
    pub fn ring_matrix(&self, d: usize) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.rows(), self.cols(), d);
        let (mut r0, mut c0) = (0, 0);
        for (b, copies) in &self.blocks {
            for _ in 0..*copies {
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        out.set(r0 + r, c0 + c, b.get(r, c));
                    }
                }
                r0 += b.rows();
                c0 += b.cols();
            }
        }
        out
    }

    pub fn kmatrix(&self, v: &Module) -> Mat {
        let mut blocks = Vec::new();
        for (b, copies) in &self.blocks {
            let k = b.kmatrix(v);
            for _ in 0..*copies {
                blocks.push(k.clone());
            }
        }
        Mat::block_diag(v.field(), &blocks)
    }

    /// Rank of the k-linear map on `V`-coefficients, block by block.
    pub fn rank_over(&self, v: &Module) -> usize {
        self.blocks
            .iter()
            .map(|(b, copies)| copies * b.kmatrix(v).rank())
            .sum()
    }

    pub fn entries_in_radical(&self, ring: &Algebra) -> bool {
        self.blocks.iter().all(|(b, _)| b.entries_in_radical(ring))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// Differentials lower the degree: `X_{i+1} -> X_i`.
    Homological,
    /// Differentials raise the degree: `X^i -> X^{i+1}`.
    Cohomological,
}

/// The augmentation (homological, `X_0 -> M`) or coaugmentation
/// (cohomological, `M -> X^0`) of a complex.
#[derive(Clone, Debug)]
pub struct Augmentation {
    pub module: Module,
    pub map: Mat,
}

/// A bounded complex with terms `X_i = V^{ranks[i]}` for `0 <= i < ranks.len()`.
///
/// `maps[i]` connects degrees `i` and `i + 1` in the direction given by the
/// orientation. Degree `-1` holds the augmentation module when present; terms
/// outside the stored range are zero.
#[derive(Clone, Debug)]
pub struct AugmentedComplex {
    pub orientation: Orientation,
    pub coefficient: Module,
    pub ranks: Vec<usize>,
    pub maps: Vec<Differential>,
    pub augmentation: Option<Augmentation>,
    /// The complex is known to vanish beyond its last stored term (a
    /// resolution that stopped), so no homology is hidden by truncation.
    pub complete: bool,
}

/// Projective or injective dimension, as far as it can be decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionValue {
    /// The module is zero (dimension `-∞`).
    ZeroModule,
    Finite(usize),
    Infinite,
    /// Nothing decided beyond this bound.
    UnknownBeyond(usize),
}

impl DimensionValue {
    pub fn is_finite(self) -> bool {
        matches!(self, DimensionValue::ZeroModule | DimensionValue::Finite(_))
    }
}

impl fmt::Display for DimensionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionValue::ZeroModule => f.write_str("-∞ (zero module)"),
            DimensionValue::Finite(n) => write!(f, "{n}"),
            DimensionValue::Infinite => f.write_str("∞"),
            DimensionValue::UnknownBeyond(b) => write!(f, "unknown beyond {b}"),
        }
    }
}

enum Outgoing<'a> {
    None,
    Aug(&'a Mat),
    Map(&'a Differential),
}

impl AugmentedComplex {
    pub fn ring(&self) -> &Arc<Algebra> {
        self.coefficient.ring()
    }

    /// Index of the last stored term.
    pub fn length(&self) -> usize {
        self.ranks.len().saturating_sub(1)
    }

    pub fn term(&self, i: isize) -> Module {
        if i == -1 {
            return match &self.augmentation {
                Some(a) => a.module.clone(),
                None => Module::zero(self.ring().clone()),
            };
        }
        match usize::try_from(i).ok().and_then(|i| self.ranks.get(i)) {
            Some(&b) => self.coefficient.power(b),
            None => Module::zero(self.ring().clone()),
        }
    }

    pub fn term_dim(&self, i: isize) -> usize {
        if i == -1 {
            return self.augmentation.as_ref().map_or(0, |a| a.module.dim());
        }
        usize::try_from(i)
            .ok()
            .and_then(|i| self.ranks.get(i))
            .map_or(0, |b| b * self.coefficient.dim())
    }

    /// The map leaving degree `i` (towards `i - 1` or `i + 1`).
    fn outgoing(&self, i: isize) -> Outgoing<'_> {
        match self.orientation {
            Orientation::Homological => match i {
                0 => self
                    .augmentation
                    .as_ref()
                    .map_or(Outgoing::None, |a| Outgoing::Aug(&a.map)),
                i if i >= 1 => self
                    .maps
                    .get(i as usize - 1)
                    .map_or(Outgoing::None, Outgoing::Map),
                _ => Outgoing::None,
            },
            Orientation::Cohomological => match i {
                -1 => self
                    .augmentation
                    .as_ref()
                    .map_or(Outgoing::None, |a| Outgoing::Aug(&a.map)),
                i if i >= 0 => self
                    .maps
                    .get(i as usize)
                    .map_or(Outgoing::None, Outgoing::Map),
                _ => Outgoing::None,
            },
        }
    }

    fn incoming(&self, i: isize) -> Outgoing<'_> {
        match self.orientation {
            Orientation::Homological => self.outgoing(i + 1),
            Orientation::Cohomological => self.outgoing(i - 1),
        }
    }

    fn rank_of(&self, m: &Outgoing<'_>) -> usize {
        match m {
            Outgoing::None => 0,
            Outgoing::Aug(a) => a.rank(),
            Outgoing::Map(d) => d.rank_over(&self.coefficient),
        }
    }

    fn kmatrix_of(&self, m: &Outgoing<'_>) -> Option<Mat> {
        match m {
            Outgoing::None => None,
            Outgoing::Aug(a) => Some((*a).clone()),
            Outgoing::Map(d) => Some(d.kmatrix(&self.coefficient)),
        }
    }

    /// Rank of the k-linear map leaving degree `i`.
    pub fn outgoing_rank(&self, i: isize) -> usize {
        self.rank_of(&self.outgoing(i))
    }

    /// The k-matrix of the map leaving degree `i`, if there is one.
    pub fn outgoing_kmatrix(&self, i: isize) -> Option<Mat> {
        self.kmatrix_of(&self.outgoing(i))
    }

    /// k-dimension of the homology at degree `i`.
    pub fn homology_dim(&self, i: isize) -> usize {
        self.term_dim(i) - self.outgoing_rank(i) - self.rank_of(&self.incoming(i))
    }

    /// Homology dimensions at degrees `-1..=top`, sharing rank computations.
    pub fn homology_dims(&self, top: isize) -> Vec<usize> {
        let ranks: Vec<usize> = (-2..=top + 1).map(|i| self.outgoing_rank(i)).collect();
        (-1..=top)
            .map(|i| {
                let out = ranks[(i + 2) as usize];
                let inc = match self.orientation {
                    Orientation::Homological => ranks[(i + 3) as usize],
                    Orientation::Cohomological => ranks[(i + 1) as usize],
                };
                self.term_dim(i) - out - inc
            })
            .collect()
    }

    /// The homology module `Ker / Im` at degree `i`.
    pub fn homology(&self, i: isize) -> Result<Module, Error> {
        let term = self.term(i);
        let n = term.dim();
        let f = term.field();
        let kernel = match self.outgoing_kmatrix(i) {
            Some(o) => Subspace::span_of_columns(&o.kernel_basis()),
            None => Subspace::span_of_columns(&Mat::identity(f, n)),
        };
        let (kmod, _) = term.submodule(&kernel);
        let image = match self.kmatrix_of(&self.incoming(i)) {
            Some(m) => {
                if !m.is_zero() && (0..m.cols()).any(|j| !kernel.contains(&m.column(j))) {
                    return Err(Error::DimensionMismatch(
                        "differentials do not compose to zero",
                    ));
                }
                m.select_rows(kernel.pivots())
            }
            None => Mat::zeros(f, kernel.dim(), 0),
        };
        let (h, _) = kmod.quotient(&Subspace::span_of_columns(&image));
        Ok(h.with_label(format!("H_{i}")))
    }

    /// Degrees `>= -1` with nonzero homology, among those the stored data
    /// determines (all degrees when complete, otherwise below the top term).
    pub fn exactness_profile(&self) -> Vec<isize> {
        let top = if self.complete {
            self.length() as isize
        } else {
            self.length() as isize - 1
        };
        self.homology_dims(top)
            .into_iter()
            .enumerate()
            .filter(|(_, h)| *h != 0)
            .map(|(j, _)| j as isize - 1)
            .collect()
    }

    /// Checks that consecutive maps compose to zero (materializes matrices).
    pub fn is_complex(&self) -> bool {
        let top = self.ranks.len() as isize;
        (-1..top).all(
            |i| match (self.outgoing_kmatrix(i), self.kmatrix_of(&self.incoming(i))) {
                (Some(o), Some(inc)) => o.mul(&inc).is_zero(),
                _ => true,
            },
        )
    }

    /// `Ω_n`: the kernel of the differential leaving degree `n - 1`
    /// (homological, with `Ω_0 = M`), or the image of the differential leaving
    /// degree `n - 1` (cohomological, with `Ω^0 = M`).
    pub fn syzygy(&self, n: usize) -> Result<Module, Error> {
        let aug = self.augmentation.as_ref().ok_or(Error::DimensionMismatch(
            "syzygy needs an augmented complex",
        ))?;
        if n == 0 {
            return Ok(aug.module.clone());
        }
        if n > self.ranks.len() && !self.complete {
            return Err(Error::DegreeOutOfRange {
                degree: n,
                max: self.ranks.len(),
            });
        }
        let i = n as isize - 1;
        let term = self.term(i);
        let out = self.outgoing_kmatrix(i);
        let sub = match (self.orientation, out) {
            (Orientation::Homological, Some(o)) => Subspace::span_of_columns(&o.kernel_basis()),
            (Orientation::Homological, None) => {
                Subspace::span_of_columns(&Mat::identity(term.field(), term.dim()))
            }
            (Orientation::Cohomological, _) => {
                let target = self.term(n as isize);
                return Ok(match self.outgoing_kmatrix(i) {
                    Some(o) => target.submodule(&Subspace::span_of_columns(&o)).0,
                    None => Module::zero(self.ring().clone()),
                }
                .with_label(format!("Ω^{n}")));
            }
        };
        Ok(term.submodule(&sub).0.with_label(format!("Ω_{n}")))
    }

    /// The same differentials over another coefficient module (a covariant
    /// additive functor applied termwise). The augmentation is dropped.
    pub fn with_coefficient(&self, v: &Module) -> AugmentedComplex {
        AugmentedComplex {
            orientation: self.orientation,
            coefficient: v.clone(),
            ranks: self.ranks.clone(),
            maps: self.maps.clone(),
            augmentation: None,
            complete: self.complete,
        }
    }

    /// A contravariant additive functor applied termwise: transposed
    /// differentials, reversed orientation. The augmentation is dropped.
    pub fn dualized(&self, v: &Module) -> AugmentedComplex {
        AugmentedComplex {
            orientation: match self.orientation {
                Orientation::Homological => Orientation::Cohomological,
                Orientation::Cohomological => Orientation::Homological,
            },
            coefficient: v.clone(),
            ranks: self.ranks.clone(),
            maps: self.maps.iter().map(Differential::transpose).collect(),
            augmentation: None,
            complete: self.complete,
        }
    }
}

fn apply_to_free(d: usize, lm: &Mat, v: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(v.len());
    for chunk in v.chunks(d) {
        out.extend(lm.mul_vec(chunk));
    }
    out
}

/// The minimal free resolution `F_B -> ... -> F_0 -> M -> 0`.
///
/// Each syzygy is computed as a kernel and covered by kernel vectors that
/// complete its radical submodule. Once a syzygy is annihilated by the maximal
/// ideal it is a sum of copies of k, and the remaining terms are the
/// corresponding copies of the resolution of k, stored block-diagonally.
pub fn minimal_free_resolution(m: &Module, bound: usize) -> Result<AugmentedComplex, Error> {
    let ring = m.ring().clone();
    let gens = m.minimal_generators()?;
    let d = ring.dim();
    let regular = Module::regular(ring.clone());
    let gen_mults: Vec<Mat> = ring
        .generators()
        .iter()
        .map(|g| ring.left_mult(g))
        .collect();
    let cover = m.cover_matrix(&gens);
    let mut ranks = vec![gens.len()];
    let mut maps: Vec<Differential> = Vec::new();
    let mut outgoing = cover.clone();
    let mut complete = None;
    for i in 1..=bound {
        let kernel = outgoing.kernel_basis();
        if kernel.cols() == 0 {
            complete = Some(true);
            break;
        }
        let b_prev = ranks[i - 1];
        let basis: Vec<Vec<u32>> = (0..kernel.cols()).map(|j| kernel.column(j)).collect();
        let images: Vec<Vec<u32>> = gen_mults
            .iter()
            .flat_map(|lm| basis.iter().map(move |v| apply_to_free(d, lm, v)))
            .collect();
        if images.iter().all(|v| v.iter().all(|&x| x == 0)) && m.dim() > 0 {
            let phi = RingMatrix::from_free_columns(d, b_prev, &basis);
            let b = basis.len();
            ranks.push(b);
            maps.push(Differential::single(phi));
            let k = Module::residue_field(ring.clone())?;
            let kres = minimal_free_resolution(&k, bound - i)?;
            for (l, map) in kres.maps.iter().enumerate() {
                ranks.push(b * kres.ranks[l + 1]);
                maps.push(map.repeated(b));
            }
            complete = Some(kres.complete);
            break;
        }
        let radical_part = if images.is_empty() {
            Subspace::zero(ring.field(), b_prev * d)
        } else {
            Subspace::span_of_columns(&Mat::from_columns(ring.field(), b_prev * d, &images))
        };
        let (chosen, _) = radical_part.extend_by_columns(&kernel);
        let cols: Vec<Vec<u32>> = chosen.iter().map(|&j| basis[j].clone()).collect();
        let phi = RingMatrix::from_free_columns(d, b_prev, &cols);
        ranks.push(cols.len());
        outgoing = phi.kmatrix(&regular);
        maps.push(Differential::single(phi));
    }
    let complete = complete.unwrap_or_else(|| outgoing.rank() == outgoing.cols());
    Ok(AugmentedComplex {
        orientation: Orientation::Homological,
        coefficient: regular,
        ranks,
        maps,
        augmentation: Some(Augmentation {
            module: m.clone(),
            map: cover,
        }),
        complete,
    })
}

/// The minimal injective resolution `0 -> M -> I^0 -> ... -> I^B`, the Matlis
/// dual of the minimal free resolution of `M^∨`. Terms are powers of the
/// dualizing module.
pub fn minimal_injective_resolution(m: &Module, bound: usize) -> Result<AugmentedComplex, Error> {
    let res = minimal_free_resolution(&matlis_dual(m), bound)?;
    let dualizing = Module::dualizing(m.ring().clone());
    let mut inj = res.dualized(&dualizing);
    let cover = &res
        .augmentation
        .as_ref()
        .expect("resolutions are augmented")
        .map;
    inj.augmentation = Some(Augmentation {
        module: m.clone(),
        map: cover.transpose(),
    });
    Ok(inj)
}

/// `dim Ext^i(M, N)` for `i = 0..=top`, from one minimal free resolution of M.
pub fn ext_dims(top: usize, m: &Module, n: &Module) -> Result<Vec<usize>, Error> {
    let res = minimal_free_resolution(m, top + 1)?;
    let hom = res.dualized(n);
    Ok(hom.homology_dims(top as isize)[1..].to_vec())
}

pub fn ext_dim(i: usize, m: &Module, n: &Module) -> Result<usize, Error> {
    Ok(ext_dims(i, m, n)?[i])
}

/// `dim Ext^i(M, N)` for `i = 0..=top`, computed instead from a minimal
/// injective resolution of N as the cohomology of `Hom(M, I)`.
pub fn ext_dims_via_injective(top: usize, m: &Module, n: &Module) -> Result<Vec<usize>, Error> {
    let inj = minimal_injective_resolution(n, top + 1)?;
    let hom = crate::module::hom_module(m, &inj.coefficient)?;
    let complex = inj.with_coefficient(&hom.module);
    Ok(complex.homology_dims(top as isize)[1..].to_vec())
}

/// `Ext^i(M, N)` as a module: the cohomology of `Hom(F, N)`.
pub fn ext_abs(i: usize, m: &Module, n: &Module) -> Result<Module, Error> {
    let res = minimal_free_resolution(m, i + 1)?;
    let h = res.dualized(n).homology(i as isize)?;
    Ok(h.with_label(format!("Ext^{i}({},{})", m.label(), n.label())))
}

/// `dim Tor_i(M, N)` for `i = 0..=top`.
pub fn tor_dims(top: usize, m: &Module, n: &Module) -> Result<Vec<usize>, Error> {
    let res = minimal_free_resolution(m, top + 1)?;
    let t = res.with_coefficient(n);
    Ok(t.homology_dims(top as isize)[1..].to_vec())
}

pub fn tor_dim(i: usize, m: &Module, n: &Module) -> Result<usize, Error> {
    Ok(tor_dims(i, m, n)?[i])
}

/// `Tor_i(M, N)` as a module: the homology of `F ⊗ N`.
pub fn tor_abs(i: usize, m: &Module, n: &Module) -> Result<Module, Error> {
    let res = minimal_free_resolution(m, i + 1)?;
    let h = res.with_coefficient(n).homology(i as isize)?;
    Ok(h.with_label(format!("Tor_{i}({},{})", m.label(), n.label())))
}

/// Projective dimension over an Artinian local ring: 0 or ∞ (depth zero).
pub fn pd_exact(m: &Module) -> Result<DimensionValue, Error> {
    if !m.ring().is_local() {
        return Err(Error::NotLocal);
    }
    Ok(if m.is_zero() {
        DimensionValue::ZeroModule
    } else if is_free(m)?.is_some() {
        DimensionValue::Finite(0)
    } else {
        DimensionValue::Infinite
    })
}

/// Injective dimension over an Artinian local ring: 0 or ∞.
pub fn id_exact(m: &Module) -> Result<DimensionValue, Error> {
    if !m.ring().is_local() {
        return Err(Error::NotLocal);
    }
    Ok(if m.is_zero() {
        DimensionValue::ZeroModule
    } else if is_injective(m)? {
        DimensionValue::Finite(0)
    } else {
        DimensionValue::Infinite
    })
}

/// Betti numbers `b_0..b_B` of M.
pub fn betti_numbers(m: &Module, bound: usize) -> Result<Vec<usize>, Error> {
    Ok(minimal_free_resolution(m, bound)?.ranks)
}

/// Bass numbers `μ^0..μ^B` of M.
pub fn bass_numbers(m: &Module, bound: usize) -> Result<Vec<usize>, Error> {
    Ok(minimal_injective_resolution(m, bound)?.ranks)
}

/// Renders a complex's ranks and differentials for reports.
pub fn describe(c: &AugmentedComplex) -> String {
    let ring = c.ring();
    let mut s = String::new();
    for (i, map) in c.maps.iter().enumerate() {
        let rm = map.ring_matrix(ring.dim());
        let rows: Vec<String> = (0..rm.rows())
            .map(|r| {
                let cells: Vec<String> = (0..rm.cols())
                    .map(|col| ring.format_element(rm.get(r, col)))
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        s.push_str(&format!("d{}: {}\n", i + 1, rows.join(" ")));
    }
    s
}

//! Finite-dimensional modules over an [`Algebra`], given by action matrices.
//!
//! Every construction here is plain linear algebra: Hom is the solution space
//! of a commutation system, tensor products are quotients of the k-tensor
//! space, kernels and cokernels are subspaces and quotients stable under the
//! action.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exactlin::{Field, Mat, Subspace};
use crate::ring::Algebra;

#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

struct ModuleData {
    ring: Arc<Algebra>,
    dim: usize,
    /// One `dim x dim` matrix per ring basis element.
    action: Vec<Mat>,
    /// Action of the ring's algebra generators.
    gen_action: Vec<Mat>,
    label: String,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({}, dim {})", self.0.label, self.0.dim)
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (same_ring(&self.0.ring, &other.0.ring) && self.0.action == other.0.action)
    }
}

impl Eq for Module {}

pub(crate) fn same_ring(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Module {
    /// Validates that the matrices form a unital representation of the ring.
    pub fn new(
        ring: Arc<Algebra>,
        action: Vec<Mat>,
        label: impl Into<String>,
    ) -> Result<Module, Error> {
        let d = ring.dim();
        if action.len() != d {
            return Err(Error::ModuleAxiom(
                "one action matrix per ring basis element",
            ));
        }
        let n = action.first().map_or(0, Mat::rows);
        if action
            .iter()
            .any(|a| a.rows() != n || a.cols() != n || a.field() != ring.field())
        {
            return Err(Error::ModuleAxiom(
                "square action matrices of a common size",
            ));
        }
        let m = Self::assemble(ring, action, label.into());
        m.validate()?;
        Ok(m)
    }

    /// Skips validation; for constructions that are modules by theory.
    pub(crate) fn from_trusted(
        ring: Arc<Algebra>,
        action: Vec<Mat>,
        label: impl Into<String>,
    ) -> Module {
        let m = Self::assemble(ring, action, label.into());
        debug_assert!(
            m.dim() > 40 || m.validate().is_ok(),
            "trusted construction is not a module"
        );
        m
    }

    fn assemble(ring: Arc<Algebra>, action: Vec<Mat>, label: String) -> Module {
        let dim = action.first().map_or(0, Mat::rows);
        let gen_action = ring
            .generators()
            .iter()
            .map(|g| combine(&action, g, ring.field(), dim))
            .collect();
        Module(Arc::new(ModuleData {
            ring,
            dim,
            action,
            gen_action,
            label,
        }))
    }

    fn validate(&self) -> Result<(), Error> {
        let ring = self.ring();
        if self.act(ring.unit()) != Mat::identity(ring.field(), self.dim()) {
            return Err(Error::ModuleAxiom("the unit law"));
        }
        let d = ring.dim();
        for i in 0..d {
            for j in i..d {
                let lhs = self.0.action[i].mul(&self.0.action[j]);
                if lhs != self.act(ring.basis_product(i, j)) {
                    return Err(Error::ModuleAxiom("multiplicativity"));
                }
                if lhs != self.0.action[j].mul(&self.0.action[i]) {
                    return Err(Error::ModuleAxiom("commutativity of the action"));
                }
            }
        }
        Ok(())
    }

    pub fn zero(ring: Arc<Algebra>) -> Module {
        let f = ring.field();
        let action = vec![Mat::zeros(f, 0, 0); ring.dim()];
        Module::from_trusted(ring, action, "0")
    }

    /// R as a module over itself.
    pub fn regular(ring: Arc<Algebra>) -> Module {
        let action = (0..ring.dim())
            .map(|i| ring.basis_mult(i).clone())
            .collect();
        Module::from_trusted(ring, action, "R")
    }

    /// `R^n`, basis ordered summand-major.
    pub fn free(ring: Arc<Algebra>, n: usize) -> Module {
        let r = Module::regular(ring);
        r.power(n).with_label(format!("R^{n}"))
    }

    /// `R / m` for a local ring.
    pub fn residue_field(ring: Arc<Algebra>) -> Result<Module, Error> {
        if !ring.is_local() {
            return Err(Error::NotLocal);
        }
        let r = Module::regular(ring.clone());
        let (k, _) = r.quotient(ring.radical_space());
        Ok(k.with_label("k"))
    }

    /// The maximal ideal as a submodule of R.
    pub fn maximal_ideal(ring: Arc<Algebra>) -> Result<Module, Error> {
        if !ring.is_local() {
            return Err(Error::NotLocal);
        }
        let r = Module::regular(ring.clone());
        let (m, _) = r.submodule(ring.radical_space());
        Ok(m.with_label("m"))
    }

    /// The dualizing module `Hom_k(R, k)`: the injective hull of the residue field.
    pub fn dualizing(ring: Arc<Algebra>) -> Module {
        matlis_dual(&Module::regular(ring)).with_label("D")
    }

    pub fn with_label(&self, label: impl Into<String>) -> Module {
        Module(Arc::new(ModuleData {
            ring: self.0.ring.clone(),
            dim: self.0.dim,
            action: self.0.action.clone(),
            gen_action: self.0.gen_action.clone(),
            label: label.into(),
        }))
    }

    pub fn ring(&self) -> &Arc<Algebra> {
        &self.0.ring
    }

    pub fn field(&self) -> Field {
        self.0.ring.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// Action matrices, one per ring basis element.
    pub fn action(&self) -> &[Mat] {
        &self.0.action
    }

    /// Action of the ring's algebra generators (see [`Algebra::generators`]).
    pub fn generator_action(&self) -> &[Mat] {
        &self.0.gen_action
    }

    /// Matrix of multiplication by a ring element.
    pub fn act(&self, r: &[u32]) -> Mat {
        combine(&self.0.action, r, self.field(), self.dim())
    }

    pub fn same_ring(&self, other: &Module) -> bool {
        same_ring(self.ring(), other.ring())
    }

    fn check_ring(&self, other: &Module) -> Result<(), Error> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Direct sum with block-diagonal action, summands in order.
    pub fn direct_sum(parts: &[Module]) -> Result<Module, Error> {
        let first = parts
            .first()
            .ok_or(Error::DimensionMismatch("empty direct sum"))?;
        for p in parts {
            first.check_ring(p)?;
        }
        let f = first.field();
        let action = (0..first.ring().dim())
            .map(|i| {
                let blocks: Vec<Mat> = parts.iter().map(|p| p.0.action[i].clone()).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        let label = parts
            .iter()
            .map(|p| p.label())
            .collect::<Vec<_>>()
            .join(" + ");
        Ok(Module::from_trusted(first.ring().clone(), action, label))
    }

    /// `M^n`.
    pub fn power(&self, n: usize) -> Module {
        if n == 0 {
            return Module::zero(self.ring().clone());
        }
        let parts = vec![self.clone(); n];
        Module::direct_sum(&parts)
            .expect("same ring")
            .with_label(format!("{}^{n}", self.label()))
    }

    /// Submodule spanned by an R-stable subspace, with its inclusion matrix.
    pub fn submodule(&self, sub: &Subspace) -> (Module, Mat) {
        let basis = sub.basis();
        let action = self
            .0
            .action
            .iter()
            .map(|a| a.mul(&basis).select_rows(sub.pivots()))
            .collect();
        (
            Module::from_trusted(
                self.ring().clone(),
                action,
                format!("sub({})", self.label()),
            ),
            basis,
        )
    }

    /// Quotient by an R-stable subspace, with projection and section matrices.
    pub fn quotient(&self, sub: &Subspace) -> (Module, Mat) {
        let p = sub.quotient_projection();
        let s = sub.quotient_section();
        let action = self.0.action.iter().map(|a| p.mul(&a.mul(&s))).collect();
        (
            Module::from_trusted(self.ring().clone(), action, format!("{}/sub", self.label())),
            p,
        )
    }

    /// `mM`, spanned by the images of the algebra generators (local case).
    pub fn radical_submodule(&self) -> Subspace {
        let f = self.field();
        let n = self.dim();
        let blocks: Vec<Mat> = self.0.gen_action.clone();
        if blocks.is_empty() || n == 0 {
            return Subspace::zero(f, n);
        }
        Subspace::span_of_columns(&Mat::hconcat(f, n, &blocks))
    }

    /// A minimal generating set: basis vectors of M completing a basis of mM.
    pub fn minimal_generators(&self) -> Result<Vec<Vec<u32>>, Error> {
        if !self.ring().is_local() {
            return Err(Error::NotLocal);
        }
        let mm = self.radical_submodule();
        let (chosen, _) = mm.extend_by_columns(&Mat::identity(self.field(), self.dim()));
        Ok(chosen
            .into_iter()
            .map(|j| {
                let mut e = vec![0u32; self.dim()];
                e[j] = 1;
                e
            })
            .collect())
    }

    /// Matrix of the cover `R^g -> M` sending the j-th basis vector to `gens[j]`.
    pub fn cover_matrix(&self, gens: &[Vec<u32>]) -> Mat {
        let d = self.ring().dim();
        let mut cols = Vec::with_capacity(gens.len() * d);
        for g in gens {
            for a in &self.0.action {
                cols.push(a.mul_vec(g));
            }
        }
        if cols.is_empty() {
            return Mat::zeros(self.field(), self.dim(), 0);
        }
        Mat::from_columns(self.field(), self.dim(), &cols)
    }

    /// Minimal number of generators, `dim M/mM`.
    pub fn num_generators(&self) -> Result<usize, Error> {
        if !self.ring().is_local() {
            return Err(Error::NotLocal);
        }
        Ok(self.dim() - self.radical_submodule().dim())
    }
}

fn combine(action: &[Mat], r: &[u32], f: Field, n: usize) -> Mat {
    let mut m = Mat::zeros(f, n, n);
    for (i, &c) in r.iter().enumerate() {
        if c != 0 {
            m.add_scaled(&action[i], c);
        }
    }
    m
}

/// An R-linear map, `mat` of shape `dst.dim x src.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    pub src: Module,
    pub dst: Module,
    pub mat: Mat,
}

impl ModuleHom {
    pub fn new(src: Module, dst: Module, mat: Mat) -> Result<ModuleHom, Error> {
        src.check_ring(&dst)?;
        if mat.rows() != dst.dim() || mat.cols() != src.dim() {
            return Err(Error::DimensionMismatch(
                "hom matrix must be dst.dim x src.dim",
            ));
        }
        let h = ModuleHom { src, dst, mat };
        if !h.is_linear() {
            return Err(Error::NotLinear);
        }
        Ok(h)
    }

    pub(crate) fn trusted(src: &Module, dst: &Module, mat: Mat) -> ModuleHom {
        debug_assert_eq!((mat.rows(), mat.cols()), (dst.dim(), src.dim()));
        let h = ModuleHom {
            src: src.clone(),
            dst: dst.clone(),
            mat,
        };
        debug_assert!(
            h.src.dim() * h.dst.dim() > 2000 || h.is_linear(),
            "trusted map is not R-linear"
        );
        h
    }

    pub fn identity(m: &Module) -> ModuleHom {
        ModuleHom::trusted(m, m, Mat::identity(m.field(), m.dim()))
    }

    pub fn zero(src: &Module, dst: &Module) -> ModuleHom {
        ModuleHom::trusted(src, dst, Mat::zeros(src.field(), dst.dim(), src.dim()))
    }

    fn is_linear(&self) -> bool {
        self.src
            .generator_action()
            .iter()
            .zip(self.dst.generator_action())
            .all(|(a, b)| self.mat.mul(a) == b.mul(&self.mat))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleHom) -> Result<ModuleHom, Error> {
        if other.dst.dim() != self.src.dim() {
            return Err(Error::DimensionMismatch("compose: codomain/domain"));
        }
        Ok(ModuleHom::trusted(
            &other.src,
            &self.dst,
            self.mat.mul(&other.mat),
        ))
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.src.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.dst.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.src.dim() == self.dst.dim() && self.is_injective()
    }

    pub fn kernel(&self) -> Subquotient {
        let sub = Subspace::span_of_columns(&self.mat.kernel_basis());
        let (m, incl) = self.src.submodule(&sub);
        let m = m.with_label(format!("ker({})", self.src.label()));
        Subquotient {
            map: ModuleHom::trusted(&m, &self.src, incl),
            module: m,
            section: None,
        }
    }

    pub fn image(&self) -> Subquotient {
        let sub = Subspace::span_of_columns(&self.mat);
        let (m, incl) = self.dst.submodule(&sub);
        let m = m.with_label(format!("im({})", self.src.label()));
        Subquotient {
            map: ModuleHom::trusted(&m, &self.dst, incl),
            module: m,
            section: None,
        }
    }

    pub fn cokernel(&self) -> Subquotient {
        let sub = Subspace::span_of_columns(&self.mat);
        let (m, proj) = self.dst.quotient(&sub);
        let m = m.with_label(format!("coker({})", self.dst.label()));
        Subquotient {
            map: ModuleHom::trusted(&self.dst, &m, proj),
            module: m,
            section: Some(sub.quotient_section()),
        }
    }
}

/// A kernel, image or cokernel with its canonical map: the inclusion into the
/// ambient module, or the projection onto the quotient (with a k-linear
/// section for lifting).
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub module: Module,
    pub map: ModuleHom,
    pub section: Option<Mat>,
}

/// `Hom_R(M, N)` with the interpretation of each basis vector as a map.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub src: Module,
    pub dst: Module,
    pub module: Module,
    basis: Vec<Mat>,
    /// Positions in the flattened `dst x src` matrix that read off coordinates.
    free: Vec<usize>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis vector `i` as a `dst.dim x src.dim` matrix.
    pub fn basis_map(&self, i: usize) -> &Mat {
        &self.basis[i]
    }

    pub fn basis_hom(&self, i: usize) -> ModuleHom {
        ModuleHom::trusted(&self.src, &self.dst, self.basis[i].clone())
    }

    /// Coordinates of an R-linear map in this basis; `None` if `f` is not one.
    pub fn coordinates(&self, f: &Mat) -> Option<Vec<u32>> {
        let flat = f.entries();
        let coords: Vec<u32> = self.free.iter().map(|&i| flat[i]).collect();
        if self.combine(&coords) == *f {
            Some(coords)
        } else {
            None
        }
    }

    /// The map with the given coordinates.
    pub fn combine(&self, coords: &[u32]) -> Mat {
        let f = self.src.field();
        let mut out = Mat::zeros(f, self.dst.dim(), self.src.dim());
        for (b, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                out.add_scaled(b, c);
            }
        }
        out
    }

    /// Coordinate matrix (one column per input map).
    pub fn coordinate_matrix(&self, maps: &[Mat]) -> Mat {
        let cols: Vec<Vec<u32>> = maps
            .iter()
            .map(|m| self.coordinates(m).expect("map lies in Hom"))
            .collect();
        if cols.is_empty() {
            return Mat::zeros(self.src.field(), self.dim(), 0);
        }
        Mat::from_columns(self.src.field(), self.dim(), &cols)
    }
}

/// `Hom_R(M, N)` as the solution space of `A_g(N) X = X A_g(M)` over the
/// algebra generators `g`, unknowns ordered by matrix unit `(row, col)`.
pub fn hom_module(m: &Module, n: &Module) -> Result<HomSpace, Error> {
    m.check_ring(n)?;
    let f = m.field();
    let (nm, nn) = (m.dim(), n.dim());
    let unknowns = nn * nm;
    let gens = m.generator_action().len();
    let mut eqs = Mat::zeros(f, gens * unknowns, unknowns);
    for (g, (am, an)) in m
        .generator_action()
        .iter()
        .zip(n.generator_action())
        .enumerate()
    {
        let base = g * unknowns;
        for r in 0..nn {
            for c in 0..nm {
                let row = base + r * nm + c;
                for s in 0..nn {
                    let x = an.get(r, s);
                    if x != 0 {
                        let col = s * nm + c;
                        eqs.set(row, col, f.add(eqs.get(row, col), x));
                    }
                }
                for s in 0..nm {
                    let x = am.get(s, c);
                    if x != 0 {
                        let col = r * nm + s;
                        eqs.set(row, col, f.sub(eqs.get(row, col), x));
                    }
                }
            }
        }
    }
    let (kb, free) = eqs.kernel_with_free();
    let basis: Vec<Mat> = (0..kb.cols())
        .map(|j| Mat::from_vec(f, nn, nm, kb.column(j)))
        .collect();
    let mut hs = HomSpace {
        src: m.clone(),
        dst: n.clone(),
        module: Module::zero(m.ring().clone()),
        basis,
        free,
    };
    // (r f)(x) = r f(x)
    let action = n
        .action()
        .iter()
        .map(|a| {
            let imgs: Vec<Mat> = hs.basis.iter().map(|b| a.mul(b)).collect();
            hs.coordinate_matrix(&imgs)
        })
        .collect();
    hs.module = Module::from_trusted(
        m.ring().clone(),
        action,
        format!("Hom({},{})", m.label(), n.label()),
    );
    Ok(hs)
}

/// `M ⊗_R N` as a quotient of the k-tensor space (index `a * dim N + b`).
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub left: Module,
    pub right: Module,
    pub module: Module,
    /// `dim(M⊗N) x (dim M * dim N)`
    pub projection: Mat,
    /// k-linear section of the projection.
    pub section: Mat,
}

impl TensorSpace {
    /// Class of `x ⊗ y`.
    pub fn pure(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.left.field();
        let mut raw = vec![0u32; x.len() * y.len()];
        for (a, &xa) in x.iter().enumerate() {
            for (b, &yb) in y.iter().enumerate() {
                raw[a * y.len() + b] = f.mul(xa, yb);
            }
        }
        self.projection.mul_vec(&raw)
    }

    /// Class of `e_a ⊗ e_b` as a column of the projection.
    pub fn pure_basis(&self, a: usize, b: usize) -> Vec<u32> {
        self.projection.column(a * self.right.dim() + b)
    }
}

pub fn tensor_module(m: &Module, n: &Module) -> Result<TensorSpace, Error> {
    m.check_ring(n)?;
    let f = m.field();
    let (nm, nn) = (m.dim(), n.dim());
    let total = nm * nn;
    let im = Mat::identity(f, nm);
    let inn = Mat::identity(f, nn);
    let blocks: Vec<Mat> = m
        .generator_action()
        .iter()
        .zip(n.generator_action())
        .map(|(am, an)| am.kron(&inn).sub(&im.kron(an)))
        .collect();
    let rel = if blocks.is_empty() || total == 0 {
        Subspace::zero(f, total)
    } else {
        Subspace::span_of_columns(&Mat::hconcat(f, total, &blocks))
    };
    let projection = rel.quotient_projection();
    let section = rel.quotient_section();
    let action = m
        .action()
        .iter()
        .map(|a| projection.mul(&a.kron(&inn).mul(&section)))
        .collect();
    let module = Module::from_trusted(
        m.ring().clone(),
        action,
        format!("{}⊗{}", m.label(), n.label()),
    );
    Ok(TensorSpace {
        left: m.clone(),
        right: n.clone(),
        module,
        projection,
        section,
    })
}

/// `Hom(C, f): Hom(C, M) -> Hom(C, N)`, `h ↦ f ∘ h`.
pub fn hom_functor_map(
    c: &Module,
    f: &ModuleHom,
) -> Result<(HomSpace, HomSpace, ModuleHom), Error> {
    let hs = hom_module(c, &f.src)?;
    let ht = hom_module(c, &f.dst)?;
    let imgs: Vec<Mat> = (0..hs.dim()).map(|i| f.mat.mul(hs.basis_map(i))).collect();
    let mat = ht.coordinate_matrix(&imgs);
    let map = ModuleHom::trusted(&hs.module, &ht.module, mat);
    Ok((hs, ht, map))
}

/// `Hom(f, N): Hom(M', N) -> Hom(M, N)` for `f: M -> M'`, `h ↦ h ∘ f`.
pub fn hom_functor_map_contra(
    f: &ModuleHom,
    n: &Module,
) -> Result<(HomSpace, HomSpace, ModuleHom), Error> {
    let hs = hom_module(&f.dst, n)?;
    let ht = hom_module(&f.src, n)?;
    let imgs: Vec<Mat> = (0..hs.dim()).map(|i| hs.basis_map(i).mul(&f.mat)).collect();
    let mat = ht.coordinate_matrix(&imgs);
    let map = ModuleHom::trusted(&hs.module, &ht.module, mat);
    Ok((hs, ht, map))
}

/// `C ⊗ f: C ⊗ M -> C ⊗ N`.
pub fn tensor_functor_map(
    c: &Module,
    f: &ModuleHom,
) -> Result<(TensorSpace, TensorSpace, ModuleHom), Error> {
    let ts = tensor_module(c, &f.src)?;
    let tt = tensor_module(c, &f.dst)?;
    let raw = Mat::identity(c.field(), c.dim()).kron(&f.mat);
    let mat = tt.projection.mul(&raw.mul(&ts.section));
    let map = ModuleHom::trusted(&ts.module, &tt.module, mat);
    Ok((ts, tt, map))
}

/// The evaluation `ν: C ⊗ Hom(C, M) -> M`, `c ⊗ f ↦ f(c)`, with the spaces it
/// was built on.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub hom: HomSpace,
    pub tensor: TensorSpace,
    pub map: ModuleHom,
}

pub fn evaluation_nu(c: &Module, m: &Module) -> Result<Evaluation, Error> {
    let hom = hom_module(c, m)?;
    let tensor = tensor_module(c, &hom.module)?;
    let f = c.field();
    let h = hom.dim();
    let mut raw = Mat::zeros(f, m.dim(), c.dim() * h);
    for a in 0..c.dim() {
        for b in 0..h {
            let fb = hom.basis_map(b);
            for r in 0..m.dim() {
                raw.set(r, a * h + b, fb.get(r, a));
            }
        }
    }
    let mat = raw.mul(&tensor.section);
    let map = ModuleHom::trusted(&tensor.module, m, mat);
    Ok(Evaluation { hom, tensor, map })
}

/// The coevaluation `μ: M -> Hom(C, C ⊗ M)`, `m ↦ (c ↦ c ⊗ m)`.
#[derive(Clone, Debug)]
pub struct Coevaluation {
    pub tensor: TensorSpace,
    pub hom: HomSpace,
    pub map: ModuleHom,
}

pub fn coevaluation_mu(c: &Module, m: &Module) -> Result<Coevaluation, Error> {
    let tensor = tensor_module(c, m)?;
    let hom = hom_module(c, &tensor.module)?;
    let f = c.field();
    let maps: Vec<Mat> = (0..m.dim())
        .map(|b| {
            let cols: Vec<Vec<u32>> = (0..c.dim()).map(|a| tensor.pure_basis(a, b)).collect();
            if cols.is_empty() {
                Mat::zeros(f, tensor.module.dim(), 0)
            } else {
                Mat::from_columns(f, tensor.module.dim(), &cols)
            }
        })
        .collect();
    let mat = hom.coordinate_matrix(&maps);
    let map = ModuleHom::trusted(m, &hom.module, mat);
    Ok(Coevaluation { tensor, hom, map })
}

/// The homothety `χ: R -> Hom(C, C)`, `r ↦ (c ↦ rc)`.
pub fn homothety_chi(c: &Module) -> Result<(HomSpace, ModuleHom), Error> {
    let hom = hom_module(c, c)?;
    let r = Module::regular(c.ring().clone());
    let mat = hom.coordinate_matrix(c.action());
    let map = ModuleHom::trusted(&r, &hom.module, mat);
    Ok((hom, map))
}

/// `M^∨ = Hom_k(M, k)` with transposed action.
pub fn matlis_dual(m: &Module) -> Module {
    let action = m.action().iter().map(Mat::transpose).collect();
    Module::from_trusted(m.ring().clone(), action, format!("{}^∨", m.label()))
}

/// `f^∨: N^∨ -> M^∨` for `f: M -> N`.
pub fn matlis_dual_hom(f: &ModuleHom, src_dual: &Module, dst_dual: &Module) -> ModuleHom {
    ModuleHom::trusted(dst_dual, src_dual, f.mat.transpose())
}

/// The natural map `M -> M^∨∨` (identity in dual-of-dual coordinates).
pub fn double_dual_map(m: &Module) -> ModuleHom {
    let dd = matlis_dual(&matlis_dual(m));
    ModuleHom::trusted(m, &dd, Mat::identity(m.field(), m.dim()))
}

/// The adjunction isomorphism `Hom(C ⊗ M, N) -> Hom(M, Hom(C, N))`,
/// `f ↦ (m ↦ (c ↦ f(c ⊗ m)))`, on explicitly constructed carriers.
pub struct Adjunction {
    pub tensor: TensorSpace,
    pub left: HomSpace,
    pub inner: HomSpace,
    pub right: HomSpace,
    pub map: ModuleHom,
}

pub fn adjunction_map(c: &Module, m: &Module, n: &Module) -> Result<Adjunction, Error> {
    let tensor = tensor_module(c, m)?;
    let left = hom_module(&tensor.module, n)?;
    let inner = hom_module(c, n)?;
    let right = hom_module(m, &inner.module)?;
    let f = c.field();
    let images: Vec<Mat> = (0..left.dim())
        .map(|t| {
            let ft = left.basis_map(t);
            let cols: Vec<Vec<u32>> = (0..m.dim())
                .map(|b| {
                    let g: Vec<Vec<u32>> = (0..c.dim())
                        .map(|a| ft.mul_vec(&tensor.pure_basis(a, b)))
                        .collect();
                    let g = if g.is_empty() {
                        Mat::zeros(f, n.dim(), 0)
                    } else {
                        Mat::from_columns(f, n.dim(), &g)
                    };
                    inner.coordinates(&g).expect("c ↦ f(c⊗m) is R-linear")
                })
                .collect();
            if cols.is_empty() {
                Mat::zeros(f, inner.dim(), 0)
            } else {
                Mat::from_columns(f, inner.dim(), &cols)
            }
        })
        .collect();
    let mat = right.coordinate_matrix(&images);
    let map = ModuleHom::trusted(&left.module, &right.module, mat);
    Ok(Adjunction {
        tensor,
        left,
        inner,
        right,
        map,
    })
}

/// Rank of M when M is free, `None` otherwise. Requires a local ring.
///
/// Lifts a basis of M/mM to a cover `R^μ -> M` and checks its kernel.
pub fn is_free(m: &Module) -> Result<Option<usize>, Error> {
    let gens = m.minimal_generators()?;
    let cover = m.cover_matrix(&gens);
    let kernel_dim = cover.cols() - cover.rank();
    Ok(if kernel_dim == 0 {
        Some(gens.len())
    } else {
        None
    })
}

/// Injective iff the Matlis dual is free.
pub fn is_injective(m: &Module) -> Result<bool, Error> {
    Ok(is_free(&matlis_dual(m))?.is_some())
}

/// Builds the module `coker(R^m -> R^n)` for an `n x m` matrix of ring
/// elements, returning it with the projection `R^n -> M`.
pub fn presentation_to_module(
    ring: &Arc<Algebra>,
    n: usize,
    m: usize,
    entries: &[Vec<Vec<u32>>],
) -> Result<(Module, ModuleHom), Error> {
    if entries.len() != n || entries.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch(
            "presentation matrix must be n x m",
        ));
    }
    let d = ring.dim();
    let f = ring.field();
    let free = Module::free(ring.clone(), n);
    // image of R^m: column j*d + i is e_i times the j-th column
    let mut cols = Vec::new();
    for j in 0..m {
        for i in 0..d {
            let mut v = vec![0u32; n * d];
            for (row, entry) in entries.iter().enumerate() {
                let prod = ring.mul(&ring.basis_element(i), &entry[j]);
                v[row * d..(row + 1) * d].copy_from_slice(&prod);
            }
            cols.push(v);
        }
    }
    let sub = if cols.is_empty() {
        Subspace::zero(f, n * d)
    } else {
        Subspace::span_of_columns(&Mat::from_columns(f, n * d, &cols))
    };
    let (q, proj) = free.quotient(&sub);
    let q = q.with_label("coker");
    let proj = ModuleHom::trusted(&free, &q, proj);
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn free_module_dimensions() {
        let r1 = corpus::r1();
        assert_eq!(Module::free(r1.clone(), 1).dim(), 3);
        assert!(Module::free(r1, 0).is_zero());
        assert_eq!(Module::free(corpus::r2(), 2).dim(), 6);
    }

    #[test]
    fn presentations() {
        let r1 = corpus::r1();
        let x = r1.basis_element(1);
        let y = r1.basis_element(2);
        let (k, _) = presentation_to_module(&r1, 1, 2, &[vec![x, y]]).unwrap();
        assert_eq!(k.dim(), 1);
        let (r, _) = presentation_to_module(&r1, 1, 0, &[vec![]]).unwrap();
        assert_eq!(r.dim(), 3);
        let r2 = corpus::r2();
        let (q, _) = presentation_to_module(&r2, 1, 1, &[vec![r2.basis_element(1)]]).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn hom_examples() {
        let r1 = corpus::r1();
        let k = Module::residue_field(r1.clone()).unwrap();
        let d = Module::dualizing(r1.clone());
        let r = Module::regular(r1.clone());
        let m = Module::direct_sum(&[k.clone(), d.clone()]).unwrap();
        let h = hom_module(&r, &m).unwrap();
        assert_eq!(h.dim(), m.dim());
        assert_eq!(hom_module(&d, &k).unwrap().dim(), 2);
        assert_eq!(hom_module(&m, &Module::zero(r1)).unwrap().dim(), 0);
    }

    #[test]
    fn tensor_examples() {
        let r1 = corpus::r1();
        let k = Module::residue_field(r1.clone()).unwrap();
        let d = Module::dualizing(r1.clone());
        let r = Module::regular(r1.clone());
        assert_eq!(tensor_module(&r, &d).unwrap().module.dim(), 3);
        assert_eq!(tensor_module(&d, &k).unwrap().module.dim(), 2);
        assert_eq!(
            tensor_module(&Module::zero(r1), &d).unwrap().module.dim(),
            0
        );
    }

    #[test]
    fn homothety_examples() {
        let r1 = corpus::r1();
        let (_, chi_r) = homothety_chi(&Module::regular(r1.clone())).unwrap();
        assert!(chi_r.is_bijective());
        let (_, chi_d) = homothety_chi(&Module::dualizing(r1.clone())).unwrap();
        assert!(chi_d.is_bijective());
        let (_, chi_k) = homothety_chi(&Module::residue_field(r1).unwrap()).unwrap();
        assert!(!chi_k.is_injective());
    }

    #[test]
    fn evaluation_for_d_and_k() {
        let r1 = corpus::r1();
        let k = Module::residue_field(r1.clone()).unwrap();
        let d = Module::dualizing(r1.clone());
        let ev = evaluation_nu(&d, &k).unwrap();
        assert_eq!((ev.map.src.dim(), ev.map.dst.dim()), (4, 1));
        assert!(!ev.map.is_injective());
        let ev = evaluation_nu(&Module::regular(r1.clone()), &d).unwrap();
        assert!(ev.map.is_bijective());
        let z = Module::zero(r1);
        let ev = evaluation_nu(&d, &z).unwrap();
        assert_eq!((ev.map.src.dim(), ev.map.dst.dim()), (0, 0));
    }

    #[test]
    fn freeness_and_injectivity() {
        let r1 = corpus::r1();
        let k = Module::residue_field(r1.clone()).unwrap();
        let d = Module::dualizing(r1.clone());
        assert_eq!(is_free(&Module::free(r1.clone(), 2)).unwrap(), Some(2));
        assert_eq!(is_free(&k).unwrap(), None);
        assert_eq!(is_free(&d).unwrap(), None);
        assert!(is_injective(&d).unwrap());
        assert!(!is_injective(&k).unwrap());
        assert!(is_injective(&Module::zero(r1)).unwrap());
    }

    #[test]
    fn rejects_non_linear_maps_and_bad_actions() {
        let r1 = corpus::r1();
        let k = Module::residue_field(r1.clone()).unwrap();
        let r = Module::regular(r1.clone());
        // 1 ↦ 1 is not R-linear from k to R
        let bad = Mat::from_rows(r1.field(), &[[1], [0], [0]]).unwrap();
        assert_eq!(
            ModuleHom::new(k, r.clone(), bad).unwrap_err(),
            Error::NotLinear
        );
        let f = r1.field();
        let action = vec![
            Mat::identity(f, 1),
            Mat::identity(f, 1),
            Mat::zeros(f, 1, 1),
        ];
        assert!(Module::new(r1, action, "bad").is_err());
    }
}

//! Finite-dimensional Hom-algebras given by structure constants.
//!
//! A [`HomModule`] is a vector space `Q^d` with a linear self-map α stored
//! as a matrix acting on column vectors: `α(e_i) = Σ_j alpha[j][i] e_j`.
//! Products are [`StructureConstants`]: `c[i][j][k]` is the `e_k`
//! coefficient of `e_i · e_j`. Every identity is multilinear, so checking
//! it on basis elements is exact and complete.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomModule<S> {
    alpha: Matrix<S>,
}

impl<S: Scalar> HomModule<S> {
    pub fn new(alpha: Matrix<S>) -> Result<Self> {
        if alpha.rows() != alpha.cols() {
            return Err(Error::DimensionMismatch(format!(
                "alpha must be square, got {}x{}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        Ok(HomModule { alpha })
    }

    /// `(Q^dim, Id)`.
    pub fn identity(dim: usize) -> Self {
        HomModule {
            alpha: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn alpha(&self) -> &Matrix<S> {
        &self.alpha
    }

    pub fn apply_alpha(&self, v: &[S]) -> Vec<S> {
        self.alpha.mul_vec(v)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        unit(self.dim(), i)
    }
}

pub(crate) fn unit<S: Scalar>(dim: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[i] = S::one();
    v
}

pub(crate) fn sub<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub(crate) fn add<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub(crate) fn is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// A bilinear map `Q^left × Q^right → Q^out` in coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants<S> {
    left: usize,
    right: usize,
    out: usize,
    data: Vec<S>,
}

impl<S: Scalar> StructureConstants<S> {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        StructureConstants {
            left,
            right,
            out,
            data: vec![S::zero(); left * right * out],
        }
    }

    /// A product on a single space of dimension `dim`.
    pub fn square(dim: usize) -> Self {
        Self::zero(dim, dim, dim)
    }

    /// From nested `[i][j][k]` data.
    pub fn from_nested(left: usize, right: usize, out: usize, nested: Vec<Vec<Vec<S>>>) -> Result<Self> {
        let shape_ok = nested.len() == left
            && nested
                .iter()
                .all(|r| r.len() == right && r.iter().all(|k| k.len() == out));
        if !shape_ok {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must have shape {left}x{right}x{out}"
            )));
        }
        Ok(StructureConstants {
            left,
            right,
            out,
            data: nested.into_iter().flatten().flatten().collect(),
        })
    }

    /// Builds from `f(i, j) = e_i · e_j`.
    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vec<S>) -> Self {
        let mut data = Vec::with_capacity(left * right * out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out, "product vector has wrong length");
                data.extend(v);
            }
        }
        StructureConstants { left, right, out, data }
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<S>>> {
        (0..self.left)
            .map(|i| (0..self.right).map(|j| self.basis_product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.data[(i * self.right + j) * self.out + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: S) {
        self.data[(i * self.right + j) * self.out + k] = v;
    }

    /// `e_i · e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[S] {
        let start = (i * self.right + j) * self.out;
        &self.data[start..start + self.out]
    }

    pub fn apply(&self, x: &[S], y: &[S]) -> Vec<S> {
        assert_eq!(x.len(), self.left, "left operand has wrong dimension");
        assert_eq!(y.len(), self.right, "right operand has wrong dimension");
        let mut out = vec![S::zero(); self.out];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi.clone() * yj.clone();
                for (o, p) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !p.is_zero() {
                        *o = o.clone() + c.clone() * p.clone();
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

/// `(A, μ, α)` with an arbitrary bilinear product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra<S> {
    pub module: HomModule<S>,
    pub mul: StructureConstants<S>,
}

impl<S: Scalar> HomAlgebra<S> {
    pub fn new(module: HomModule<S>, mul: StructureConstants<S>) -> Result<Self> {
        let d = module.dim();
        if mul.dims() != (d, d, d) {
            return Err(Error::DimensionMismatch(format!(
                "product of shape {:?} on a module of dimension {d}",
                mul.dims()
            )));
        }
        Ok(HomAlgebra { module, mul })
    }

    pub fn zero(dim: usize) -> Self {
        HomAlgebra {
            module: HomModule::identity(dim),
            mul: StructureConstants::square(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn mul(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.mul.apply(x, y)
    }

    pub fn alpha(&self, x: &[S]) -> Vec<S> {
        self.module.apply_alpha(x)
    }
}

/// `(D, ⊣, ⊢, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDialgebra<S> {
    pub module: HomModule<S>,
    pub lmul: StructureConstants<S>,
    pub rmul: StructureConstants<S>,
}

impl<S: Scalar> HomDialgebra<S> {
    pub fn new(module: HomModule<S>, lmul: StructureConstants<S>, rmul: StructureConstants<S>) -> Result<Self> {
        let d = module.dim();
        if lmul.dims() != (d, d, d) || rmul.dims() != (d, d, d) {
            return Err(Error::DimensionMismatch(format!(
                "dialgebra products must be {d}x{d}x{d}"
            )));
        }
        Ok(HomDialgebra { module, lmul, rmul })
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// `x ⊣ y`.
    pub fn left(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.lmul.apply(x, y)
    }

    /// `x ⊢ y`.
    pub fn right(&self, x: &[S], y: &[S]) -> Vec<S> {
        self.rmul.apply(x, y)
    }

    pub fn alpha(&self, x: &[S]) -> Vec<S> {
        self.module.apply_alpha(x)
    }

    /// `(D, ⊣, α)` as a Hom-nonassociative algebra.
    pub fn left_algebra(&self) -> HomAlgebra<S> {
        HomAlgebra {
            module: self.module.clone(),
            mul: self.lmul.clone(),
        }
    }

    /// `(D, ⊢, α)` as a Hom-nonassociative algebra.
    pub fn right_algebra(&self) -> HomAlgebra<S> {
        HomAlgebra {
            module: self.module.clone(),
            mul: self.rmul.clone(),
        }
    }
}

/// A Hom-A-bimodule `(M, α_M)` over a Hom-associative `A`, together with a
/// map `f: M → A` (a `dim A × dim M` matrix) that is meant to be a morphism
/// of Hom-A-bimodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleData<S> {
    pub algebra: HomAlgebra<S>,
    pub module: HomModule<S>,
    /// `A ⊗ M → M`.
    pub left_act: StructureConstants<S>,
    /// `M ⊗ A → M`.
    pub right_act: StructureConstants<S>,
    pub f: Matrix<S>,
}

impl<S: Scalar> BimoduleData<S> {
    pub fn new(
        algebra: HomAlgebra<S>,
        module: HomModule<S>,
        left_act: StructureConstants<S>,
        right_act: StructureConstants<S>,
        f: Matrix<S>,
    ) -> Result<Self> {
        let (a, m) = (algebra.dim(), module.dim());
        if left_act.dims() != (a, m, m) || right_act.dims() != (m, a, m) {
            return Err(Error::DimensionMismatch(format!(
                "actions must have shapes {a}x{m}x{m} and {m}x{a}x{m}"
            )));
        }
        if f.rows() != a || f.cols() != m {
            return Err(Error::DimensionMismatch(format!("f must be {a}x{m}")));
        }
        Ok(BimoduleData {
            algebra,
            module,
            left_act,
            right_act,
            f,
        })
    }

    /// `A` acting on itself by multiplication, with `f = Id`.
    pub fn regular(algebra: &HomAlgebra<S>) -> Self {
        let d = algebra.dim();
        BimoduleData {
            algebra: algebra.clone(),
            module: algebra.module.clone(),
            left_act: algebra.mul.clone(),
            right_act: algebra.mul.clone(),
            f: Matrix::identity(d),
        }
    }

    /// `B` as a Hom-A-bimodule through a morphism `g: A → B`:
    /// `a·b = g(a)b`, `b·a = b g(a)`. The map `f: B → A` is supplied.
    pub fn along_morphism(a: &HomAlgebra<S>, b: &HomAlgebra<S>, g: &Matrix<S>, f: Matrix<S>) -> Result<Self> {
        if g.rows() != b.dim() || g.cols() != a.dim() {
            return Err(Error::DimensionMismatch(format!("g must be {}x{}", b.dim(), a.dim())));
        }
        let left = StructureConstants::from_fn(a.dim(), b.dim(), b.dim(), |i, j| {
            b.mul(&g.column(i), &unit(b.dim(), j))
        });
        let right = StructureConstants::from_fn(b.dim(), a.dim(), b.dim(), |i, j| {
            b.mul(&unit(b.dim(), i), &g.column(j))
        });
        Self::new(a.clone(), b.module.clone(), left, right, f)
    }

    pub fn act_left(&self, a: &[S], m: &[S]) -> Vec<S> {
        self.left_act.apply(a, m)
    }

    pub fn act_right(&self, m: &[S], a: &[S]) -> Vec<S> {
        self.right_act.apply(m, a)
    }
}

/// Identity whose failure a [`Violation`] reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    HomAssociativity,
    SkewSymmetry,
    HomJacobi,
    HomLeibniz,
    /// One of the five Hom-dialgebra axioms, numbered 1 to 5.
    Dialgebra(u8),
    BimoduleLeft,
    BimoduleRight,
    BimoduleMiddle,
    MorphismLeftAction,
    MorphismRightAction,
    MorphismAlpha,
    /// Compatibility with the product at this position (0 = μ or ⊣, 1 = ⊢).
    MorphismProduct(u8),
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom::HomAssociativity => f.write_str("hom-associativity"),
            Axiom::SkewSymmetry => f.write_str("skew-symmetry"),
            Axiom::HomJacobi => f.write_str("hom-jacobi"),
            Axiom::HomLeibniz => f.write_str("hom-leibniz"),
            Axiom::Dialgebra(n) => write!(f, "dialgebra-axiom-{n}"),
            Axiom::BimoduleLeft => f.write_str("bimodule-left"),
            Axiom::BimoduleRight => f.write_str("bimodule-right"),
            Axiom::BimoduleMiddle => f.write_str("bimodule-middle"),
            Axiom::MorphismLeftAction => f.write_str("morphism-left-action"),
            Axiom::MorphismRightAction => f.write_str("morphism-right-action"),
            Axiom::MorphismAlpha => f.write_str("morphism-alpha"),
            Axiom::MorphismProduct(n) => write!(f, "morphism-product-{n}"),
        }
    }
}

/// A failing instance of an identity: the axiom, the basis indices it was
/// evaluated on, and the exact difference `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<S> {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub discrepancy: Vec<S>,
}

impl<S: Scalar> fmt::Display for Violation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        let diff: Vec<String> = self.discrepancy.iter().map(ToString::to_string).collect();
        write!(f, "{} at ({}): difference [{}]", self.axiom, idx.join(","), diff.join(", "))
    }
}

pub type Violations<S> = Vec<Violation<S>>;

fn record<S: Scalar>(out: &mut Violations<S>, axiom: Axiom, indices: &[usize], lhs: &[S], rhs: &[S]) {
    let diff = sub(lhs, rhs);
    if !is_zero(&diff) {
        out.push(Violation {
            axiom,
            indices: indices.to_vec(),
            discrepancy: diff,
        });
    }
}

fn hypothesis<S: Scalar>(name: &'static str, v: Violations<S>) -> Result<()> {
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Hypothesis {
            hypothesis: name,
            violations: v.iter().map(ToString::to_string).collect(),
        })
    }
}

/// `α(x)(yz) = (xy)α(z)` on all basis triples.
pub fn check_hom_associative<S: Scalar>(a: &HomAlgebra<S>) -> Violations<S> {
    let d = a.dim();
    let e = |i| unit::<S>(d, i);
    let mut out = Vec::new();
    for i in 0..d {
        let ax = a.alpha(&e(i));
        for j in 0..d {
            let xy = a.mul.basis_product(i, j).to_vec();
            for k in 0..d {
                let lhs = a.mul(&ax, a.mul.basis_product(j, k));
                let rhs = a.mul(&xy, &a.alpha(&e(k)));
                record(&mut out, Axiom::HomAssociativity, &[i, j, k], &lhs, &rhs);
            }
        }
    }
    out
}

/// Skew-symmetry on basis pairs `i ≤ j` and the Hom-Jacobi identity
/// `[α(x),[y,z]] + [α(z),[x,y]] + [α(y),[z,x]] = 0` on all triples.
pub fn check_hom_lie<S: Scalar>(l: &HomAlgebra<S>) -> Violations<S> {
    let d = l.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i..d {
            let neg: Vec<S> = l.mul.basis_product(j, i).iter().map(|x| -x.clone()).collect();
            record(&mut out, Axiom::SkewSymmetry, &[i, j], l.mul.basis_product(i, j), &neg);
        }
    }
    let alphas: Vec<Vec<S>> = (0..d).map(|i| l.alpha(&unit(d, i))).collect();
    let br = |i: usize, j: usize| l.mul.basis_product(i, j);
    let zero = vec![S::zero(); d];
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let t1 = l.mul(&alphas[x], br(y, z));
                let t2 = l.mul(&alphas[z], br(x, y));
                let t3 = l.mul(&alphas[y], br(z, x));
                let sum = add(&add(&t1, &t2), &t3);
                record(&mut out, Axiom::HomJacobi, &[x, y, z], &sum, &zero);
            }
        }
    }
    out
}

/// `[[x,y],α(z)] = [[x,z],α(y)] + [α(x),[y,z]]` on all basis triples.
pub fn check_hom_leibniz<S: Scalar>(l: &HomAlgebra<S>) -> Violations<S> {
    let d = l.dim();
    let alphas: Vec<Vec<S>> = (0..d).map(|i| l.alpha(&unit(d, i))).collect();
    let br = |i: usize, j: usize| l.mul.basis_product(i, j);
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let lhs = l.mul(br(x, y), &alphas[z]);
                let rhs = add(&l.mul(br(x, z), &alphas[y]), &l.mul(&alphas[x], br(y, z)));
                record(&mut out, Axiom::HomLeibniz, &[x, y, z], &lhs, &rhs);
            }
        }
    }
    out
}

/// The five Hom-dialgebra axioms on all basis triples:
///
/// 1. `α(x) ⊣ (y ⊣ z) = (x ⊣ y) ⊣ α(z)`
/// 2. `(x ⊣ y) ⊣ α(z) = α(x) ⊣ (y ⊢ z)`
/// 3. `(x ⊢ y) ⊣ α(z) = α(x) ⊢ (y ⊣ z)`
/// 4. `(x ⊣ y) ⊢ α(z) = α(x) ⊢ (y ⊢ z)`
/// 5. `α(x) ⊢ (y ⊢ z) = (x ⊢ y) ⊢ α(z)`
pub fn check_hom_dialgebra<S: Scalar>(dia: &HomDialgebra<S>) -> Violations<S> {
    let d = dia.dim();
    let alphas: Vec<Vec<S>> = (0..d).map(|i| dia.alpha(&unit(d, i))).collect();
    let l = |i: usize, j: usize| dia.lmul.basis_product(i, j);
    let r = |i: usize, j: usize| dia.rmul.basis_product(i, j);
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let idx = [x, y, z];
                let (ax, az) = (&alphas[x], &alphas[z]);
                let ll_a = dia.left(l(x, y), az);
                let a_ll = dia.left(ax, l(y, z));
                let a_lr = dia.left(ax, r(y, z));
                let rl_a = dia.left(r(x, y), az);
                let a_rl = dia.right(ax, l(y, z));
                let lr_a = dia.right(l(x, y), az);
                let a_rr = dia.right(ax, r(y, z));
                let rr_a = dia.right(r(x, y), az);
                record(&mut out, Axiom::Dialgebra(1), &idx, &a_ll, &ll_a);
                record(&mut out, Axiom::Dialgebra(2), &idx, &ll_a, &a_lr);
                record(&mut out, Axiom::Dialgebra(3), &idx, &rl_a, &a_rl);
                record(&mut out, Axiom::Dialgebra(4), &idx, &lr_a, &a_rr);
                record(&mut out, Axiom::Dialgebra(5), &idx, &a_rr, &rr_a);
            }
        }
    }
    out
}

/// The commutator bracket `[x, y] = xy − yx` of a Hom-associative algebra.
pub fn hlie<S: Scalar>(a: &HomAlgebra<S>) -> Result<HomAlgebra<S>> {
    hypothesis("hom-associativity", check_hom_associative(a))?;
    let d = a.dim();
    let bracket = StructureConstants::from_fn(d, d, d, |i, j| {
        sub(a.mul.basis_product(i, j), a.mul.basis_product(j, i))
    });
    HomAlgebra::new(a.module.clone(), bracket)
}

/// The bracket `[x, y] = x ⊣ y − y ⊢ x` of a Hom-dialgebra.
pub fn hleib<S: Scalar>(dia: &HomDialgebra<S>) -> Result<HomAlgebra<S>> {
    hypothesis("hom-dialgebra axioms", check_hom_dialgebra(dia))?;
    let d = dia.dim();
    let bracket = StructureConstants::from_fn(d, d, d, |i, j| {
        sub(dia.lmul.basis_product(i, j), dia.rmul.basis_product(j, i))
    });
    HomAlgebra::new(dia.module.clone(), bracket)
}

/// `⊣ = μ = ⊢` for a Hom-associative algebra.
pub fn dialgebra_from_associative<S: Scalar>(a: &HomAlgebra<S>) -> Result<HomDialgebra<S>> {
    hypothesis("hom-associativity", check_hom_associative(a))?;
    HomDialgebra::new(a.module.clone(), a.mul.clone(), a.mul.clone())
}

/// Hom-associativity of `A`, the three Hom-bimodule conditions
///
/// * `α_A(x)(ym) = (xy)α_M(m)`
/// * `(mx)α_A(y) = α_M(m)(xy)`
/// * `α_A(x)(my) = (xm)α_A(y)`
///
/// and that `f: M → A` is a morphism of Hom-A-bimodules:
/// `f(am) = a f(m)`, `f(ma) = f(m) a`, `f ∘ α_M = α_A ∘ f`.
pub fn check_bimodule<S: Scalar>(b: &BimoduleData<S>) -> Violations<S> {
    let a = &b.algebra;
    let (da, dm) = (a.dim(), b.module.dim());
    let mut out = check_hom_associative(a);
    let alpha_a: Vec<Vec<S>> = (0..da).map(|i| a.alpha(&unit(da, i))).collect();
    let alpha_m: Vec<Vec<S>> = (0..dm).map(|i| b.module.apply_alpha(&unit(dm, i))).collect();
    for x in 0..da {
        for y in 0..da {
            let xy = a.mul.basis_product(x, y);
            for m in 0..dm {
                let ym = b.left_act.basis_product(y, m);
                let my = b.right_act.basis_product(m, y);
                let xm = b.left_act.basis_product(x, m);
                let mx = b.right_act.basis_product(m, x);

                let lhs = b.act_left(&alpha_a[x], ym);
                let rhs = b.act_left(xy, &alpha_m[m]);
                record(&mut out, Axiom::BimoduleLeft, &[x, y, m], &lhs, &rhs);

                let lhs = b.act_right(mx, &alpha_a[y]);
                let rhs = b.act_right(&alpha_m[m], xy);
                record(&mut out, Axiom::BimoduleRight, &[x, y, m], &lhs, &rhs);

                let lhs = b.act_left(&alpha_a[x], my);
                let rhs = b.act_right(xm, &alpha_a[y]);
                record(&mut out, Axiom::BimoduleMiddle, &[x, y, m], &lhs, &rhs);
            }
        }
    }
    for m in 0..dm {
        let fm = b.f.column(m);
        for x in 0..da {
            let lhs = b.f.mul_vec(b.left_act.basis_product(x, m));
            let rhs = a.mul(&unit(da, x), &fm);
            record(&mut out, Axiom::MorphismLeftAction, &[x, m], &lhs, &rhs);

            let lhs = b.f.mul_vec(b.right_act.basis_product(m, x));
            let rhs = a.mul(&fm, &unit(da, x));
            record(&mut out, Axiom::MorphismRightAction, &[m, x], &lhs, &rhs);
        }
        let lhs = b.f.mul_vec(&alpha_m[m]);
        let rhs = a.alpha(&fm);
        record(&mut out, Axiom::MorphismAlpha, &[m], &lhs, &rhs);
    }
    out
}

/// `m1 ⊣ m2 = m1 f(m2)`, `m1 ⊢ m2 = f(m1) m2` on `(M, α_M)`.
pub fn dialgebra_from_bimodule<S: Scalar>(b: &BimoduleData<S>) -> Result<HomDialgebra<S>> {
    hypothesis("hom-bimodule conditions", check_bimodule(b))?;
    let dm = b.module.dim();
    let lmul = StructureConstants::from_fn(dm, dm, dm, |i, j| b.act_right(&unit(dm, i), &b.f.column(j)));
    let rmul = StructureConstants::from_fn(dm, dm, dm, |i, j| b.act_left(&b.f.column(i), &unit(dm, j)));
    HomDialgebra::new(b.module.clone(), lmul, rmul)
}

/// Anything that is a Hom-module with a list of binary products; morphisms
/// between two such structures must respect α and every product.
pub trait HomStructure<S: Scalar> {
    fn module(&self) -> &HomModule<S>;
    fn products(&self) -> Vec<&StructureConstants<S>>;
}

impl<S: Scalar> HomStructure<S> for HomAlgebra<S> {
    fn module(&self) -> &HomModule<S> {
        &self.module
    }

    fn products(&self) -> Vec<&StructureConstants<S>> {
        vec![&self.mul]
    }
}

impl<S: Scalar> HomStructure<S> for HomDialgebra<S> {
    fn module(&self) -> &HomModule<S> {
        &self.module
    }

    fn products(&self) -> Vec<&StructureConstants<S>> {
        vec![&self.lmul, &self.rmul]
    }
}

/// `f ∘ α = α′ ∘ f` on basis vectors and `f(e_i e_j) = f(e_i) f(e_j)` for
/// every product. `f` is a `dim B × dim A` matrix.
pub fn check_morphism<S: Scalar, T: HomStructure<S> + ?Sized>(f: &Matrix<S>, a: &T, b: &T) -> Result<Violations<S>> {
    let (da, db) = (a.module().dim(), b.module().dim());
    if f.rows() != db || f.cols() != da {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {db}x{da}",
            f.rows(),
            f.cols()
        )));
    }
    let (pa, pb) = (a.products(), b.products());
    if pa.len() != pb.len() {
        return Err(Error::InvalidArgument("structures have different numbers of products".into()));
    }
    let mut out = Vec::new();
    let images: Vec<Vec<S>> = (0..da).map(|i| f.column(i)).collect();
    for i in 0..da {
        let lhs = f.mul_vec(&a.module().apply_alpha(&unit(da, i)));
        let rhs = b.module().apply_alpha(&images[i]);
        record(&mut out, Axiom::MorphismAlpha, &[i], &lhs, &rhs);
    }
    for (n, (ma, mb)) in pa.iter().zip(&pb).enumerate() {
        for i in 0..da {
            for j in 0..da {
                let lhs = f.mul_vec(ma.basis_product(i, j));
                let rhs = mb.apply(&images[i], &images[j]);
                record(&mut out, Axiom::MorphismProduct(n as u8), &[i, j], &lhs, &rhs);
            }
        }
    }
    Ok(out)
}

/// Checks that `f: L → A` is a morphism of Hom-Lie algebras
/// `L → HLie(A)`: `f ∘ α_L = α_A ∘ f` and `f[x,y] = f(x)f(y) − f(y)f(x)`.
/// `A` itself is not checked for Hom-associativity here.
pub fn check_lie_morphism<S: Scalar>(f: &Matrix<S>, l: &HomAlgebra<S>, a: &HomAlgebra<S>) -> Result<Violations<S>> {
    let d = a.dim();
    let commutator = HomAlgebra {
        module: a.module.clone(),
        mul: StructureConstants::from_fn(d, d, d, |i, j| sub(a.mul.basis_product(i, j), a.mul.basis_product(j, i))),
    };
    check_morphism(f, l, &commutator)
}

/// `α∘μ` with `α` an endomorphism of an (ordinary) algebra: twisting an
/// associative algebra along an algebra endomorphism yields a
/// Hom-associative algebra.
pub fn twist<S: Scalar>(mul: &StructureConstants<S>, alpha: &Matrix<S>) -> Result<HomAlgebra<S>> {
    let module = HomModule::new(alpha.clone())?;
    let d = module.dim();
    if mul.dims() != (d, d, d) {
        return Err(Error::DimensionMismatch("product and endomorphism disagree on dimension".into()));
    }
    let twisted = StructureConstants::from_fn(d, d, d, |i, j| alpha.mul_vec(mul.basis_product(i, j)));
    HomAlgebra::new(module, twisted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    /// Basis {e, x}: ee = e, ex = x, xe = 0, xx = 0.
    fn ex_algebra() -> HomAlgebra<Q> {
        let mut mul = StructureConstants::square(2);
        mul.set(0, 0, 0, q(1));
        mul.set(0, 1, 1, q(1));
        HomAlgebra::new(HomModule::identity(2), mul).unwrap()
    }

    #[test]
    fn ex_algebra_bracket() {
        let a = ex_algebra();
        assert!(check_hom_associative(&a).is_empty());
        let l = hlie(&a).unwrap();
        assert_eq!(l.mul.basis_product(0, 1), &[q(0), q(1)]);
        assert_eq!(l.mul.basis_product(1, 0), &[q(0), q(-1)]);
        assert_eq!(l.mul.basis_product(0, 0), &[q(0), q(0)]);
        assert_eq!(l.mul.basis_product(1, 1), &[q(0), q(0)]);
        assert!(check_hom_lie(&l).is_empty());
        assert!(check_hom_leibniz(&l).is_empty());
    }

    #[test]
    fn zero_dimensional_algebra_is_fine() {
        let z = HomAlgebra::<Q>::zero(0);
        assert!(check_hom_associative(&z).is_empty());
        assert!(check_hom_lie(&hlie(&z).unwrap()).is_empty());
        let d = dialgebra_from_associative(&z).unwrap();
        assert!(check_hom_dialgebra(&d).is_empty());
    }

    #[test]
    fn non_associative_input_is_rejected() {
        // e·e = e + x, x·e = x: (ee)e = e + 2x but e(ee) = e + x.
        let mut mul = StructureConstants::square(2);
        mul.set(0, 0, 0, q(1));
        mul.set(0, 0, 1, q(1));
        mul.set(1, 0, 1, q(1));
        let a = HomAlgebra::new(HomModule::identity(2), mul).unwrap();
        let v = check_hom_associative(&a);
        assert!(!v.is_empty());
        match hlie(&a) {
            Err(Error::Hypothesis { violations, .. }) => assert_eq!(violations.len(), v.len()),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn square_commutes_on_ex_algebra() {
        let a = ex_algebra();
        let d = dialgebra_from_associative(&a).unwrap();
        assert!(check_hom_dialgebra(&d).is_empty());
        assert_eq!(hleib(&d).unwrap(), hlie(&a).unwrap());
    }

    #[test]
    fn regular_bimodule_gives_associative_dialgebra() {
        let a = ex_algebra();
        let b = BimoduleData::regular(&a);
        assert!(check_bimodule(&b).is_empty());
        let d = dialgebra_from_bimodule(&b).unwrap();
        assert_eq!(d, dialgebra_from_associative(&a).unwrap());
    }

    #[test]
    fn perturbed_left_action_is_caught() {
        let a = ex_algebra();
        let mut b = BimoduleData::regular(&a);
        b.left_act.set(1, 1, 0, q(1));
        let v = check_bimodule(&b);
        assert!(v.iter().any(|x| x.axiom == Axiom::BimoduleLeft || x.axiom == Axiom::MorphismLeftAction));
        assert!(dialgebra_from_bimodule(&b).is_err());
    }

    #[test]
    fn morphism_checks() {
        let a = ex_algebra();
        assert!(check_morphism(&Matrix::identity(2), &a, &a).unwrap().is_empty());
        assert!(check_morphism(&Matrix::zeros(2, 2), &a, &a).unwrap().is_empty());
        // Sending the idempotent to x fails: x·x = 0.
        let b = HomAlgebra::new(HomModule::identity(1), {
            let mut m = StructureConstants::square(1);
            m.set(0, 0, 0, q(1));
            m
        })
        .unwrap();
        let incl = Matrix::from_i64(&[&[0], &[1]]);
        assert!(!check_morphism(&incl, &b, &a).unwrap().is_empty());
        assert!(check_morphism(&Matrix::zeros(1, 1), &b, &a).is_err());
    }

    #[test]
    fn twisting_produces_hom_associative() {
        // Q[t]/(t^3) with basis 1, t, t^2 and endomorphism t ↦ 2t + t^2.
        let mul = StructureConstants::from_fn(3, 3, 3, |i, j| {
            let mut v = vec![q(0); 3];
            if i + j < 3 {
                v[i + j] = q(1);
            }
            v
        });
        let phi = Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 1, 4]]);
        let a = twist(&mul, &phi).unwrap();
        assert!(check_hom_associative(&a).is_empty());
        // The untwisted product with this α is not Hom-associative.
        let plain = HomAlgebra::new(HomModule::new(phi).unwrap(), mul).unwrap();
        assert!(!check_hom_associative(&plain).is_empty());
    }
}

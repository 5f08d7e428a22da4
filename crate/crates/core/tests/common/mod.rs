//! Shared fixtures for the integration tests: seeded random algebras built
//! from a small catalogue of associative algebras, and independent oracles.

#![allow(dead_code)]

use homenv::{
    BimoduleData, HomAlgebra, HomDialgebra, HomModule, Matrix, Scalar, StructureConstants, Q,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(v: i64) -> Q {
    Q::from_i64(v)
}

pub fn frac(p: i64, d: i64) -> Q {
    Q::new(p.into(), d.into())
}

pub fn small(rng: &mut Rng8) -> Q {
    q(rng.gen_range(-3..=3))
}

pub fn random_vec(rng: &mut Rng8, n: usize) -> Vec<Q> {
    (0..n).map(|_| small(rng)).collect()
}

pub fn random_matrix(rng: &mut Rng8, rows: usize, cols: usize) -> Matrix<Q> {
    Matrix::from_rows_with_cols((0..rows).map(|_| random_vec(rng, cols)).collect(), cols).unwrap()
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

/// Invertible: unit lower triangular times unit upper triangular.
pub fn random_invertible(rng: &mut Rng8, n: usize) -> Matrix<Q> {
    let mut lo = Matrix::identity(n);
    let mut up = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lo[(i, j)] = q(rng.gen_range(-2..=2));
            up[(j, i)] = q(rng.gen_range(-2..=2));
        }
    }
    lo.mul(&up).unwrap()
}

/// An associative algebra with a list of algebra endomorphisms.
pub struct Catalogued {
    pub name: &'static str,
    pub mul: StructureConstants<Q>,
    pub endos: Vec<Matrix<Q>>,
}

fn table(dim: usize, entries: &[(usize, usize, usize, i64)]) -> StructureConstants<Q> {
    let mut t = StructureConstants::square(dim);
    for &(i, j, k, v) in entries {
        t.set(i, j, k, q(v));
    }
    t
}

fn m(rows: &[&[i64]]) -> Matrix<Q> {
    Matrix::from_i64(rows)
}

/// Associative algebras of dimension at most 3 with known endomorphisms.
/// Every endomorphism `φ` gives the Hom-associative algebra `(A, φ∘μ, φ)`.
pub fn catalogue(rng: &mut Rng8) -> Vec<Catalogued> {
    let (a, b) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
    let c = rng.gen_range(-2..=2);
    vec![
        Catalogued {
            name: "Q",
            mul: table(1, &[(0, 0, 0, 1)]),
            endos: vec![m(&[&[1]]), m(&[&[0]])],
        },
        Catalogued {
            name: "zero-2",
            mul: StructureConstants::square(2),
            endos: vec![Matrix::identity(2), random_matrix(rng, 2, 2)],
        },
        Catalogued {
            name: "QxQ",
            mul: table(2, &[(0, 0, 0, 1), (1, 1, 1, 1)]),
            endos: vec![Matrix::identity(2), m(&[&[0, 1], &[1, 0]]), m(&[&[1, 0], &[0, 0]]), m(&[&[1, 0], &[1, 0]])],
        },
        Catalogued {
            // basis 1, t
            name: "dual-numbers",
            mul: table(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            endos: vec![Matrix::identity(2), m(&[&[1, 0], &[0, a]])],
        },
        Catalogued {
            // ee = e, ex = x
            name: "ex",
            mul: table(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]),
            endos: vec![Matrix::identity(2), m(&[&[1, 0], &[0, c]])],
        },
        Catalogued {
            // basis 1, t, t^2; φ(t) = a t + b t^2
            name: "Q[t]/t^3",
            mul: table(
                3,
                &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (1, 1, 2, 1)],
            ),
            endos: vec![Matrix::identity(3), m(&[&[1, 0, 0], &[0, a, 0], &[0, b, a * a]])],
        },
        Catalogued {
            // e11, e12, e22
            name: "T2",
            mul: table(3, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)]),
            endos: vec![
                Matrix::identity(3),
                m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]),
                m(&[&[1, 0, 0], &[0, c, 0], &[0, 0, 1]]),
            ],
        },
        Catalogued {
            // t with t·t = 0 inside Q × (zero algebra)
            name: "Q+nil",
            mul: table(2, &[(0, 0, 0, 1)]),
            endos: vec![Matrix::identity(2), m(&[&[1, 0], &[0, b]]), m(&[&[0, 0], &[0, 1]])],
        },
    ]
}

/// `P⁻¹ (P e_i · P e_j)`: the same algebra in the basis given by the columns
/// of `p`.
pub fn change_basis(mul: &StructureConstants<Q>, alpha: &Matrix<Q>, p: &Matrix<Q>) -> HomAlgebra<Q> {
    let d = p.rows();
    let inv = p.inverse().expect("invertible");
    let new_mul = StructureConstants::from_fn(d, d, d, |i, j| inv.mul_vec(&mul.apply(&p.column(i), &p.column(j))));
    let new_alpha = inv.mul(alpha).unwrap().mul(p).unwrap();
    HomAlgebra::new(HomModule::new(new_alpha).unwrap(), new_mul).unwrap()
}

/// A random Hom-associative algebra: a catalogue algebra twisted by one of
/// its endomorphisms, in a random basis.
pub fn random_hom_assoc(rng: &mut Rng8) -> HomAlgebra<Q> {
    let cat = catalogue(rng);
    let pick = &cat[rng.gen_range(0..cat.len())];
    let phi = &pick.endos[rng.gen_range(0..pick.endos.len())];
    let twisted = homenv::twist(&pick.mul, phi).unwrap();
    let p = random_invertible(rng, phi.rows());
    change_basis(&twisted.mul, twisted.module.alpha(), &p)
}

/// A random associative algebra (α = Id), in a random basis.
pub fn random_assoc(rng: &mut Rng8) -> HomAlgebra<Q> {
    let cat = catalogue(rng);
    let pick = &cat[rng.gen_range(0..cat.len())];
    let d = pick.endos[0].rows();
    let p = random_invertible(rng, d);
    change_basis(&pick.mul, &Matrix::identity(d), &p)
}

/// The catalogue algebra `name` twisted by endomorphism `k`, in the
/// standard basis.
pub fn catalogue_algebra(name: &str, k: usize) -> HomAlgebra<Q> {
    let cat = catalogue(&mut rng(0));
    let pick = cat.iter().find(|c| c.name == name).expect("catalogue entry");
    homenv::twist(&pick.mul, &pick.endos[k]).unwrap()
}

/// `{e, x}` with `ee = e`, `ex = x` and α = Id.
pub fn ex_algebra() -> HomAlgebra<Q> {
    catalogue_algebra("ex", 0)
}

/// Kronecker product `a ⊗ b` on coordinates `(i, v) ↦ i * dim b + v`.
pub fn kron(a: &Matrix<Q>, b: &Matrix<Q>) -> Matrix<Q> {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = Matrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[(i * rb + k, j * cb + l)] = a[(i, j)].clone() * b[(k, l)].clone();
                }
            }
        }
    }
    out
}

/// `M = A₀ ⊗ V` over an associative catalogue algebra `A₀` with
/// endomorphism `φ_A`, twisted by `φ_M = φ_A ⊗ φ_V`, with
/// `f(x ⊗ v) = λ(v) x`; requires `λ ∘ φ_V = λ`. The resulting dialgebra
/// has `⊣ ≠ ⊢` in general.
pub fn tensor_bimodule(
    mul: &StructureConstants<Q>,
    phi_a: &Matrix<Q>,
    phi_v: &Matrix<Q>,
    lambda: &[Q],
) -> BimoduleData<Q> {
    let da = phi_a.rows();
    let dv = phi_v.rows();
    let dm = da * dv;
    let phi_m = kron(phi_a, phi_v);
    let a = homenv::twist(mul, phi_a).unwrap();
    let idx = |x: usize, v: usize| x * dv + v;
    // untwisted actions a(x⊗v) = ax⊗v and (x⊗v)a = xa⊗v, then φ_M after
    let left = StructureConstants::from_fn(da, dm, dm, |i, mm| {
        let (x, v) = (mm / dv, mm % dv);
        let prod = mul.basis_product(i, x);
        let mut out = vec![Q::zero(); dm];
        for (k, c) in prod.iter().enumerate() {
            out[idx(k, v)] = c.clone();
        }
        phi_m.mul_vec(&out)
    });
    let right = StructureConstants::from_fn(dm, da, dm, |mm, i| {
        let (x, v) = (mm / dv, mm % dv);
        let prod = mul.basis_product(x, i);
        let mut out = vec![Q::zero(); dm];
        for (k, c) in prod.iter().enumerate() {
            out[idx(k, v)] = c.clone();
        }
        phi_m.mul_vec(&out)
    });
    let mut f = Matrix::zeros(da, dm);
    for x in 0..da {
        for v in 0..dv {
            f[(x, idx(x, v))] = lambda[v].clone();
        }
    }
    BimoduleData::new(a, HomModule::new(phi_m).unwrap(), left, right, f).unwrap()
}

/// A random valid bimodule: the regular bimodule of a random
/// Hom-associative algebra, or a tensor bimodule with `dim M ≤ 4`.
pub fn random_bimodule(rng: &mut Rng8) -> BimoduleData<Q> {
    if rng.gen_bool(0.4) {
        return BimoduleData::regular(&random_hom_assoc(rng));
    }
    let cat = catalogue(rng);
    let small_cat: Vec<&Catalogued> = cat.iter().filter(|c| c.endos[0].rows() <= 2).collect();
    let pick = small_cat[rng.gen_range(0..small_cat.len())];
    let phi_a = &pick.endos[rng.gen_range(0..pick.endos.len())];
    // φ_V(v0) = v0 + r v1, φ_V(v1) = t v1 preserves λ = v0*.
    let (r, t) = (q(rng.gen_range(-2..=2)), q(rng.gen_range(-2..=2)));
    let phi_v = Matrix::from_rows(vec![vec![q(1), q(0)], vec![r, t]]).unwrap();
    tensor_bimodule(&pick.mul, phi_a, &phi_v, &[q(1), q(0)])
}

/// Random Hom-dialgebra from one of the three standard constructions.
pub fn random_dialgebra(rng: &mut Rng8) -> HomDialgebra<Q> {
    match rng.gen_range(0..3) {
        0 => homenv::dialgebra_from_associative(&random_hom_assoc(rng)).unwrap(),
        1 => {
            // α = Id dialgebra: an untwisted tensor bimodule.
            let cat = catalogue(rng);
            let small_cat: Vec<&Catalogued> = cat.iter().filter(|c| c.endos[0].rows() <= 2).collect();
            let pick = small_cat[rng.gen_range(0..small_cat.len())];
            let d = pick.endos[0].rows();
            let b = tensor_bimodule(&pick.mul, &Matrix::identity(d), &Matrix::identity(2), &[q(1), q(rng.gen_range(-2..=2))]);
            homenv::dialgebra_from_bimodule(&b).unwrap()
        }
        _ => homenv::dialgebra_from_bimodule(&random_bimodule(rng)).unwrap(),
    }
}

/// Arbitrary structure constants and α (no identity required).
pub fn random_nonassoc(rng: &mut Rng8, dim: usize) -> HomAlgebra<Q> {
    let mul = StructureConstants::from_fn(dim, dim, dim, |_, _| random_vec(rng, dim));
    HomAlgebra::new(HomModule::new(random_matrix(rng, dim, dim)).unwrap(), mul).unwrap()
}

/// Naive product straight from the table, independent of
/// `StructureConstants::apply`.
pub fn naive_mul(t: &StructureConstants<Q>, x: &[Q], y: &[Q]) -> Vec<Q> {
    let (l, r, o) = t.dims();
    let mut out = vec![Q::zero(); o];
    for i in 0..l {
        for j in 0..r {
            for k in 0..o {
                out[k] += x[i].clone() * y[j].clone() * t.get(i, j, k).clone();
            }
        }
    }
    out
}

pub fn naive_apply(m: &Matrix<Q>, v: &[Q]) -> Vec<Q> {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(Q::zero(), |acc, j| acc + m[(i, j)].clone() * v[j].clone()))
        .collect()
}

pub fn vsub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vadd(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Binomial coefficient in u128.
pub fn binom(n: u64, k: u64) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan_recurrence(n: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for k in 1..=n {
        let next = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
        c.push(next);
    }
    c
}

/// A target with `f ∘ α_V = α_A ∘ f`: `A = V ⊕ W` with block α, `f` the
/// inclusion after `c0 + c1·α_V`, all of it in a random basis of `A`.
pub fn intertwined(rng: &mut Rng8, dv: usize, da: usize) -> (HomModule<Q>, HomAlgebra<Q>, Matrix<Q>) {
    let alpha_v = random_matrix(rng, dv, dv);
    let alpha_w = random_matrix(rng, da - dv, da - dv);
    let mut alpha_a = Matrix::zeros(da, da);
    for i in 0..dv {
        for j in 0..dv {
            alpha_a[(i, j)] = alpha_v[(i, j)].clone();
        }
    }
    for i in 0..da - dv {
        for j in 0..da - dv {
            alpha_a[(dv + i, dv + j)] = alpha_w[(i, j)].clone();
        }
    }
    let (c0, c1) = (small(rng), small(rng));
    let mut poly = Matrix::scalar(dv, c0);
    for i in 0..dv {
        for j in 0..dv {
            poly[(i, j)] = poly[(i, j)].clone() + c1.clone() * alpha_v[(i, j)].clone();
        }
    }
    let mut incl = Matrix::zeros(da, dv);
    for i in 0..dv {
        incl[(i, i)] = Q::one();
    }
    let p = random_invertible(rng, da);
    let inv = p.inverse().unwrap();
    let f = inv.mul(&incl).unwrap().mul(&poly).unwrap();
    let alpha = inv.mul(&alpha_a).unwrap().mul(&p).unwrap();
    let a = HomAlgebra::new(HomModule::new(alpha).unwrap(), random_nonassoc(rng, da).mul).unwrap();
    (HomModule::new(alpha_v).unwrap(), a, f)
}

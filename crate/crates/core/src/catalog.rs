//! The concrete algebras: the four pointed Hopf algebras of dimension 12,
//! the non-pointed algebra `C` and its dual, the isomorphism `φ: A₁ → C*`,
//! and the Drinfeld double `D = D(C^cop)` together with its presentation by
//! generators `a, b, g, x`.

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::checks::{AxiomReport, Check};
use crate::hopfcore::{drinfeld_double, render, Elem, FinDimHopf, HopfError, HopfMorphism, Level, Tensor2, Variant};
use crate::linalg::Matrix;
use crate::scalars::{xi_power, NamedConstants, Scalar, ThetaSign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("relation `{relation}` fails: residual {residual}")]
    PresentationMismatch { relation: String, residual: String },
    #[error("map is not a Hopf morphism: {0}")]
    NotAMorphism(String),
    #[error("unknown algebra `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// The four pointed Hopf algebras of dimension 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pointed {
    A0,
    A1,
    B0,
    B1,
}

impl Pointed {
    pub const ALL: [Pointed; 4] = [Pointed::A0, Pointed::A1, Pointed::B0, Pointed::B1];

    pub fn name(self) -> &'static str {
        match self {
            Pointed::A0 => "A0",
            Pointed::A1 => "A1",
            Pointed::B0 => "B0",
            Pointed::B1 => "B1",
        }
    }
}

fn certified(mut h: FinDimHopf) -> FinDimHopf {
    let r = h.certify(Level::Hopf);
    assert!(r.all_pass(), "catalog algebra {} failed certification: {:?}", h.name, r.failures().next());
    h
}

fn unit12() -> Elem {
    let mut u = vec![Scalar::zero(); 12];
    u[0] = Scalar::one();
    u
}

fn group_counit() -> Elem {
    (0..12).map(|i| if i < 6 { Scalar::one() } else { Scalar::zero() }).collect()
}

/// `⟨g, x | g⁶ = 1, xg = q⁻¹·gx, x² = Σ x2[p]·g^p⟩` with `Δ(x) = x⊗1 + g^s⊗x`,
/// on the basis `g^i ↦ i`, `g^i x ↦ 6 + i`.
fn pointed_from(name: &str, q: Scalar, shift: usize, x2: &[(usize, Scalar)]) -> FinDimHopf {
    let qinv = q.inv().expect("nonzero");
    let mut mult = Vec::new();
    for e in 0..2 {
        for i in 0..6 {
            for f in 0..2 {
                for j in 0..6 {
                    // (g^i x^e)(g^j x^f) = q^{-je} g^{i+j} x^{e+f}
                    let c = if e == 1 { qinv.pow(j as i64) } else { Scalar::one() };
                    if e == 1 && f == 1 {
                        for (p, v) in x2 {
                            mult.push((6 * e + i, 6 * f + j, (i + j + p) % 6, &c * v));
                        }
                    } else {
                        mult.push((6 * e + i, 6 * f + j, 6 * (e + f) + (i + j) % 6, c));
                    }
                }
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..6 {
        comult.push((i, i, i, Scalar::one()));
        comult.push((6 + i, 6 + i, i, Scalar::one()));
        comult.push((6 + i, (i + shift) % 6, 6 + i, Scalar::one()));
    }
    let basis: Vec<String> = (0..6).map(|i| format!("g{i}")).chain((0..6).map(|i| format!("g{i}x"))).collect();
    let algebra =
        FinDimHopf::from_entries(name, basis.clone(), unit12(), group_counit(), &mult, &comult, Matrix::zeros(12, 12))
            .expect("well-formed");
    // S(g^i) = g^{-i}, S(g^i x) = −g^{-s} x g^{-i}.
    let mut s = Matrix::zeros(12, 12);
    for i in 0..6 {
        s[((6 - i) % 6, i)] = Scalar::one();
        let v = algebra.product(&[
            &algebra.basis_vec((6 - shift) % 6),
            &algebra.basis_vec(6),
            &algebra.basis_vec((6 - i) % 6),
        ]);
        for (r, c) in v.iter().enumerate() {
            s[(r, 6 + i)] = -c;
        }
    }
    FinDimHopf::from_entries(name, basis, unit12(), group_counit(), &mult, &comult, s).expect("well-formed")
}

/// One of `A₀, A₁, B₀, B₁`, certified.
pub fn build_pointed(which: Pointed) -> FinDimHopf {
    let h = match which {
        Pointed::A1 => pointed_from("A1", Scalar::int(-1), 1, &[(0, Scalar::one()), (2, Scalar::int(-1))]),
        Pointed::A0 => pointed_from("A0", Scalar::int(-1), 1, &[]),
        Pointed::B0 => pointed_from("B0", Scalar::int(-1), 3, &[]),
        Pointed::B1 => pointed_from("B1", Scalar::xi(), 3, &[]),
    };
    certified(h)
}

pub const C_LABELS: [&str; 12] = ["1", "a", "a2", "a3", "a4", "a5", "b", "ba", "ba2", "ba3", "ba4", "ba5"];

/// The 12-dimensional algebra `C = ⟨a, b | a⁶ = 1, b² = 0, ba = ξab⟩` with
/// `Δ(a) = a⊗a + Λ⁻¹ b⊗ba³`, `Δ(b) = b⊗a⁴ + a⊗b`, `S(a) = a⁵`,
/// `S(b) = ξ⁻²ba`, on the basis `a^i ↦ i`, `ba^i ↦ 6 + i`.
pub fn build_c() -> FinDimHopf {
    let consts = NamedConstants::default();
    let mut mult = Vec::new();
    for e in 0..2 {
        for i in 0..6 {
            for f in 0..2 {
                for j in 0..6 {
                    if e + f == 2 {
                        continue;
                    }
                    // (b^e a^i)(b^f a^j) = ξ^{-if} b^{e+f} a^{i+j}
                    mult.push((6 * e + i, 6 * f + j, 6 * (e + f) + (i + j) % 6, xi_power(-((i * f) as i64))));
                }
            }
        }
    }
    let basis: Vec<String> = C_LABELS.iter().map(|s| s.to_string()).collect();
    let alg = FinDimHopf::from_entries("C", basis.clone(), unit12(), group_counit(), &mult, &[], Matrix::zeros(12, 12))
        .expect("well-formed");
    let a = alg.basis_vec(1);
    let b = alg.basis_vec(6);
    let mut delta_a = Tensor2::pure(&a, &a);
    delta_a.add_term(6, 9, &consts.lambda_inv());
    let mut delta_b = Tensor2::pure(&b, &alg.basis_vec(4));
    delta_b.add_term(1, 6, &Scalar::one());
    let s_a = alg.basis_vec(5);
    let s_b: Elem = alg.basis_vec(7).iter().map(|c| c * &xi_power(-2)).collect();

    let mut comult = Vec::new();
    let mut s = Matrix::zeros(12, 12);
    for e in 0..2 {
        for i in 0..6 {
            let idx = 6 * e + i;
            let mut d = Tensor2::pure(&alg.one(), &alg.one());
            let mut sv = alg.one();
            if e == 1 {
                d = alg.mul_tensor(&d, &delta_b);
            }
            for _ in 0..i {
                d = alg.mul_tensor(&d, &delta_a);
                sv = alg.mul(&sv, &s_a);
            }
            if e == 1 {
                sv = alg.mul(&sv, &s_b);
            }
            for ((j, k), c) in d.0 {
                comult.push((idx, j, k, c));
            }
            for (r, c) in sv.into_iter().enumerate() {
                s[(r, idx)] = c;
            }
        }
    }
    certified(FinDimHopf::from_entries("C", basis, unit12(), group_counit(), &mult, &comult, s).expect("well-formed"))
}

/// The dual `C*` on the dual basis `(a^i)*`, `(ba^i)*`.
pub fn build_c_dual() -> FinDimHopf {
    let mut d = build_c().dual().expect("C is certified");
    d.name = "C*".into();
    d
}

/// `C^cop`, the algebra whose double is `D`.
pub fn build_c_cop() -> FinDimHopf {
    build_c().variant(Variant::Cop).expect("C is certified")
}

/// Representations of `A₁` given on generators `g, x`.
#[derive(Clone, Debug, Serialize)]
pub struct A1Rep {
    pub name: String,
    pub g: Matrix,
    pub x: Matrix,
}

impl A1Rep {
    /// Matrix of a basis element `g^i x^e`.
    pub fn basis_matrix(&self, idx: usize) -> Matrix {
        let m = self.g.pow(idx % 6);
        if idx >= 6 {
            m.mul(&self.x)
        } else {
            m
        }
    }

    /// Check `g⁶ = 1`, `x² = 1 − g²`, `gx = −xg`.
    pub fn check(&self) -> AxiomReport {
        let d = self.g.rows();
        let id = Matrix::identity(d);
        let mut r = AxiomReport::new(self.name.clone());
        r.push(Check::from_bool("g^6 = 1", self.g.pow(6) == id, || format!("{:?}", self.g.pow(6))));
        let x2 = self.x.mul(&self.x);
        let rhs = id.sub(&self.g.mul(&self.g));
        r.push(Check::from_bool("x^2 = 1 - g^2", x2 == rhs, || format!("{:?}", x2.sub(&rhs))));
        let gx = self.g.mul(&self.x).add(&self.x.mul(&self.g));
        r.push(Check::from_bool("gx = -xg", gx.is_zero(), || format!("{gx:?}")));
        r
    }
}

/// `ε`, `χ`, `ρ₁`, `ρ₂`: the simple representations of `A₁`.
pub fn simple_reps_a1() -> Vec<A1Rep> {
    let xi = Scalar::xi();
    let xinv = xi.inv().expect("nonzero");
    let one = Scalar::one();
    let z = Scalar::zero();
    let scalar = |v: i64| Matrix::from_rows(vec![vec![Scalar::int(v)]]);
    vec![
        A1Rep { name: "epsilon".into(), g: scalar(1), x: scalar(0) },
        A1Rep { name: "chi".into(), g: scalar(-1), x: scalar(0) },
        A1Rep {
            name: "rho1".into(),
            g: Matrix::diag(&[xi.clone(), -&xi]),
            x: Matrix::from_rows(vec![vec![z.clone(), &one - &xi], vec![&one + &xi, z.clone()]]),
        },
        A1Rep {
            name: "rho2".into(),
            g: Matrix::diag(&[-&xinv, xinv.clone()]),
            x: Matrix::from_rows(vec![vec![z.clone(), &one - &xinv], vec![&one + &xinv, z]]),
        },
    ]
}

/// The coordinate function `E_ij ∘ ρ` as an element of `A₁*` (0-based `i, j`).
pub fn matrix_coefficient(rep: &A1Rep, i: usize, j: usize) -> Elem {
    (0..12).map(|t| rep.basis_matrix(t)[(i, j)].clone()).collect()
}

/// Check the identities satisfied by the comatrix coefficients
/// `C_ij = E_ij∘ρ₁` and `D_ij = E_ij∘ρ₂` inside `A₁*`.
///
/// Both normalizations `C₁₁²C₂₂ = ε` and `C₁₁³C₂₂ = ε` are evaluated; at most
/// one of them can hold.
pub fn verify_comatrix_relations(consts: &NamedConstants) -> AxiomReport {
    let a1 = build_pointed(Pointed::A1);
    let h = a1.dual().expect("certified");
    let reps = simple_reps_a1();
    let c = |i: usize, j: usize| matrix_coefficient(&reps[2], i - 1, j - 1);
    let d = |i: usize, j: usize| matrix_coefficient(&reps[3], i - 1, j - 1);
    let chi = matrix_coefficient(&reps[1], 0, 0);
    let eps = h.one();
    let s = |x: &Elem| h.antipode_of(x);
    let m = |x: &Elem, y: &Elem| h.mul(x, y);
    let sc = |k: &Scalar, x: &Elem| -> Elem { x.iter().map(|v| v * k).collect() };
    let neg = |x: &Elem| -> Elem { x.iter().map(|v| -v).collect() };
    let zero = h.zero();
    let lam = consts.lambda.clone();
    let lam_inv = consts.lambda_inv();
    let xi = Scalar::xi();

    let mut rep = AxiomReport::new("comatrix relations");
    let mut eq = |name: &str, l: Elem, r: Elem| {
        rep.push(Check::from_bool(name, l == r, || {
            let diff: Elem = l.iter().zip(&r).map(|(a, b)| a - b).collect();
            format!("lhs − rhs = {}", render(&h.basis, &diff))
        }));
    };
    eq("S(C12) = D12", s(&c(1, 2)), d(1, 2));
    eq("S(C21) = D21", s(&c(2, 1)), d(2, 1));
    eq("S(C11) = D22", s(&c(1, 1)), d(2, 2));
    eq("S(C22) = D11", s(&c(2, 2)), d(1, 1));
    eq("S(D12) = -C12", s(&d(1, 2)), neg(&c(1, 2)));
    eq("S(D21) = -C21", s(&d(2, 1)), neg(&c(2, 1)));
    eq("S(D11) = C22", s(&d(1, 1)), c(2, 2));
    eq("S(D22) = C11", s(&d(2, 2)), c(1, 1));
    let c11 = c(1, 1);
    let c22 = c(2, 2);
    let c12 = c(1, 2);
    let c21 = c(2, 1);
    eq("C11^3 = chi", h.pow(&c11, 3), chi.clone());
    eq("C22^3 = epsilon", h.pow(&c22, 3), eps.clone());
    eq("C11 C22 = C22 C11", m(&c11, &c22), m(&c22, &c11));
    eq("C11^2 C22 = epsilon", m(&h.pow(&c11, 2), &c22), eps.clone());
    eq("C11^3 C22 = epsilon", m(&h.pow(&c11, 3), &c22), eps.clone());
    eq("C12^2 = 0", m(&c12, &c12), zero.clone());
    eq("C21^2 = 0", m(&c21, &c21), zero.clone());
    eq("C12 C21 = 0", m(&c12, &c21), zero.clone());
    eq("C21 C12 = 0", m(&c21, &c12), zero.clone());
    eq("C11 C12 = xi C12 C11", m(&c11, &c12), sc(&xi, &m(&c12, &c11)));
    eq("C11 C21 = xi C21 C11", m(&c11, &c21), sc(&xi, &m(&c21, &c11)));
    eq("C11 C12 = Lambda C22 C21", m(&c11, &c12), sc(&lam, &m(&c22, &c21)));
    eq("C11 C21 = Lambda^-1 C22 C12", m(&c11, &c21), sc(&lam_inv, &m(&c22, &c12)));
    eq("S(C11) = C11^5", s(&c11), h.pow(&c11, 5));
    eq("S(C12) = Lambda xi C22 C21", s(&c12), sc(&(&lam * &xi), &m(&c22, &c21)));
    eq("S(C21) = Lambda^-1 xi^-2 C22 C12", s(&c21), sc(&(&lam_inv * &xi_power(-2)), &m(&c22, &c12)));
    eq("S(C22) = C11^2", s(&c22), h.pow(&c11, 2));
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let lhs = h.comult(&c(i, j));
        let rhs = Tensor2::pure(&c(i, 1), &c(1, j)).add(&Tensor2::pure(&c(i, 2), &c(2, j)));
        rep.push(Check::from_bool(format!("Delta(C{i}{j}) comatrix law"), lhs == rhs, || {
            h.render_tensor(&lhs.sub(&rhs))
        }));
        let e = h.counit_of(&c(i, j));
        let want = if i == j { Scalar::one() } else { Scalar::zero() };
        rep.push(Check::from_bool(format!("epsilon(C{i}{j})"), e == want, || format!("ε = {e}")));
    }
    rep
}

/// The matrix of `φ: A₁ → C*`: `φ(g^i) = Σ_k ξ^{-ik}(a^k)*`,
/// `φ(g^i x) = θ Σ_k ξ^{-i(k+1)}(ba^k)*`.
pub fn phi_matrix(consts: &NamedConstants) -> Matrix {
    let mut m = Matrix::zeros(12, 12);
    for i in 0..6i64 {
        for k in 0..6i64 {
            m[(k as usize, i as usize)] = xi_power(-i * k);
            m[(6 + k as usize, 6 + i as usize)] = &consts.theta * &xi_power(-i * (k + 1));
        }
    }
    m
}

/// `φ: A₁ → C*`, certified as a bijective Hopf morphism.
pub fn phi_iso(consts: &NamedConstants) -> Result<HopfMorphism, CatalogError> {
    let m = HopfMorphism { matrix: phi_matrix(consts) };
    let rep = m.certify(&build_pointed(Pointed::A1), &build_c_dual());
    let failure = rep.failures().next().map(|f| {
        format!("{}: {}", f.name, f.witness.as_ref().map(|w| w.detail.as_str()).unwrap_or(""))
    });
    match failure {
        None => Ok(m),
        Some(f) => Err(CatalogError::NotAMorphism(f)),
    }
}

/// One entry of a printed comultiplication row that disagrees with the computed one.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableMismatch {
    pub row: String,
    pub term: String,
    pub printed: String,
    pub computed: String,
}

/// The printed comultiplication of the dual basis of `C*`, as
/// `(row, [(ξ-exponent, left, right)])` over the dual basis indices.
fn printed_dual_table() -> Vec<(usize, Vec<(i64, usize, usize)>)> {
    let plain = |v: &[(usize, usize)]| v.iter().map(|(l, r)| (0, *l, *r)).collect::<Vec<_>>();
    let mut t = vec![
        (0, plain(&[(0, 0), (1, 5), (5, 1), (2, 3), (3, 2), (3, 3)])),
        (1, plain(&[(1, 0), (0, 1), (2, 5), (5, 2), (3, 4), (4, 3)])),
        (2, plain(&[(0, 2), (2, 0), (1, 1), (3, 5), (5, 3), (4, 4)])),
        (3, plain(&[(0, 3), (3, 0), (1, 2), (2, 1), (4, 5), (5, 4)])),
        (4, plain(&[(0, 4), (4, 0), (1, 3), (3, 1), (2, 2), (5, 5)])),
        (5, plain(&[(0, 5), (5, 0), (1, 4), (4, 5), (2, 3), (3, 2)])),
    ];
    // Rows (ba^r)*: 1*⊗B_r + B_r⊗1* + Σ_k ξ^{-k} A_k⊗B_{σ(k)} + B_{σ(k)}⊗A_k,
    // with the printed right-hand indices σ(k) for k = 1..5 listed per row.
    let printed_sigma: [[usize; 5]; 6] = [
        [5, 4, 3, 2, 1],
        [0, 5, 4, 3, 2],
        [1, 0, 5, 4, 3],
        [2, 5, 0, 5, 4],
        [3, 2, 1, 0, 5],
        [4, 3, 2, 1, 0],
    ];
    for (r, sigma) in printed_sigma.iter().enumerate() {
        let mut row = vec![(0, 0, 6 + r), (0, 6 + r, 0)];
        for (k, s) in sigma.iter().enumerate() {
            let k = k + 1;
            row.push((-(k as i64), k, 6 + s));
            row.push((0, 6 + s, k));
        }
        t.push((6 + r, row));
    }
    t
}

/// Compare the printed dual-basis comultiplication table against the
/// transpose of `C`'s multiplication. Returns every disagreeing coefficient.
pub fn dual_table_diff() -> Vec<TableMismatch> {
    let dual = build_c_dual();
    let labels = &dual.basis;
    let mut out = Vec::new();
    for (row, terms) in printed_dual_table() {
        let mut printed = Tensor2::new();
        for (e, l, r) in terms {
            printed.add_term(l, r, &xi_power(e));
        }
        let computed = dual.comult(&dual.basis_vec(row));
        let keys: std::collections::BTreeSet<(usize, usize)> =
            printed.0.keys().chain(computed.0.keys()).copied().collect();
        for k in keys {
            let p = printed.0.get(&k).cloned().unwrap_or_default();
            let c = computed.0.get(&k).cloned().unwrap_or_default();
            if p != c {
                out.push(TableMismatch {
                    row: format!("Δ({})", labels[row]),
                    term: format!("{}⊗{}", labels[k.0], labels[k.1]),
                    printed: p.to_string(),
                    computed: c.to_string(),
                });
            }
        }
    }
    out
}

/// A relation `Σ c·w = 0` over single-letter generators.
#[derive(Clone, Debug, Serialize)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(Vec<usize>, Scalar)>,
}

/// An algebra given by generators and relations, with a spanning set of monomials.
#[derive(Clone, Debug, Serialize)]
pub struct PresentedAlgebra {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
    pub pbw_monomials: Vec<Vec<usize>>,
}

impl PresentedAlgebra {
    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parse a word of single-letter generator names.
    pub fn word(&self, s: &str) -> Vec<usize> {
        s.chars()
            .map(|ch| self.gen_index(&ch.to_string()).unwrap_or_else(|| panic!("unknown generator {ch}")))
            .collect()
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    /// Value of a relation under generator matrices.
    pub fn eval_matrix(rel: &Relation, gens: &[Matrix]) -> Matrix {
        let d = gens[0].rows();
        let mut acc = Matrix::zeros(d, d);
        for (w, c) in &rel.terms {
            acc.add_scaled_assign(&word_matrix(gens, w), c);
        }
        acc
    }

    /// First relation that the generator matrices violate.
    pub fn check_matrices(&self, gens: &[Matrix]) -> Result<(), (String, Matrix)> {
        for rel in &self.relations {
            let v = PresentedAlgebra::eval_matrix(rel, gens);
            if !v.is_zero() {
                return Err((rel.name.clone(), v));
            }
        }
        Ok(())
    }

    /// Value of a relation in a Hopf algebra under a generator assignment.
    pub fn eval_elem(h: &FinDimHopf, rel: &Relation, gens: &[Elem]) -> Elem {
        let mut acc = h.zero();
        for (w, c) in &rel.terms {
            let v = word_elem(h, gens, w);
            for (a, b) in acc.iter_mut().zip(&v) {
                *a += &(b * c);
            }
        }
        acc
    }
}

pub fn word_matrix(gens: &[Matrix], w: &[usize]) -> Matrix {
    let d = gens[0].rows();
    let mut m = Matrix::identity(d);
    for &g in w {
        m = m.mul(&gens[g]);
    }
    m
}

pub fn word_elem(h: &FinDimHopf, gens: &[Elem], w: &[usize]) -> Elem {
    let mut v = h.one();
    for &g in w {
        v = h.mul(&v, &gens[g]);
    }
    v
}

/// Images of the generators of a presented algebra in a Hopf algebra.
#[derive(Clone, Debug)]
pub struct GeneratorEmbedding {
    pub assignment: Vec<Elem>,
}

pub const D_GENERATORS: [&str; 4] = ["a", "b", "g", "x"];

/// Presentation of `D` on generators `a, b, g, x`.
pub fn double_presentation(consts: &NamedConstants) -> PresentedAlgebra {
    let gens: Vec<String> = D_GENERATORS.iter().map(|s| s.to_string()).collect();
    let idx = |s: &str| -> Vec<usize> { s.chars().map(|c| D_GENERATORS.iter().position(|g| g.starts_with(c)).unwrap()).collect() };
    let one = Scalar::one;
    let th = &consts.theta;
    let li = consts.lambda_inv();
    let xm2 = xi_power(-2);
    let rel = |name: &str, terms: Vec<(&str, Scalar)>| Relation {
        name: name.into(),
        terms: terms.into_iter().map(|(w, c)| (idx(w), c)).collect(),
    };
    let relations = vec![
        rel("a^6 = 1", vec![("aaaaaa", one()), ("", -one())]),
        rel("b^2 = 0", vec![("bb", one())]),
        rel("ba = xi ab", vec![("ba", one()), ("ab", -Scalar::xi())]),
        rel("g^6 = 1", vec![("gggggg", one()), ("", -one())]),
        rel("x^2 = 1 - g^2", vec![("xx", one()), ("", -one()), ("gg", one())]),
        rel("gx = -xg", vec![("gx", one()), ("xg", one())]),
        rel("ag = ga", vec![("ag", one()), ("ga", -one())]),
        rel("bg = -gb", vec![("bg", one()), ("gb", one())]),
        rel(
            "ax + xi^-2 xa = Lambda^-1 theta xi^-2 (ba^3 - gb)",
            vec![("ax", one()), ("xa", xm2.clone()), ("baaa", -(&(&li * th) * &xm2)), ("gb", &(&li * th) * &xm2)],
        ),
        rel(
            "bx + xi^-2 xb = theta xi^-2 (a^4 - ga)",
            vec![("bx", one()), ("xb", xm2.clone()), ("aaaa", -(th * &xm2)), ("ga", th * &xm2)],
        ),
    ];
    PresentedAlgebra { generators: gens, relations, pbw_monomials: pbw_words() }
}

/// The PBW monomials `g^k x^δ a^i b^ε`, index `((2k + δ)·6 + i)·2 + ε`.
pub fn pbw_words() -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(144);
    for k in 0..6 {
        for dx in 0..2 {
            for i in 0..6 {
                for eb in 0..2 {
                    let mut w = vec![2; k];
                    w.extend(std::iter::repeat_n(3, dx));
                    w.extend(std::iter::repeat_n(0, i));
                    w.extend(std::iter::repeat_n(1, eb));
                    out.push(w);
                }
            }
        }
    }
    out
}

/// `D = D(C^cop)` with both views: structure tensors and the presentation.
#[derive(Debug)]
pub struct DoubleAlgebra {
    pub hopf: FinDimHopf,
    pub presentation: PresentedAlgebra,
    pub embedding: GeneratorEmbedding,
    pub constants: NamedConstants,
    /// Relation checks in `D`, including the equality of both printed
    /// right-hand sides of the `bx` relation.
    pub relation_report: AxiomReport,
    pub pbw_rank: usize,
    /// `e_t = Σ c · pbw_monomials[w]` for each basis element `t`.
    basis_words: Vec<Vec<(usize, Scalar)>>,
}

impl DoubleAlgebra {
    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    /// Expansion of basis element `t` in PBW monomials.
    pub fn basis_in_pbw(&self, t: usize) -> &[(usize, Scalar)] {
        &self.basis_words[t]
    }

    /// Element of `D` represented by a word in the generators.
    pub fn word(&self, w: &[usize]) -> Elem {
        word_elem(&self.hopf, &self.embedding.assignment, w)
    }

    pub fn generator(&self, name: &str) -> &Elem {
        &self.embedding.assignment[self.presentation.gen_index(name).expect("generator")]
    }
}

/// Build `D(C^cop)`, its generator embedding and PBW basis, and check every
/// relation of the presentation.
pub fn build_d(consts: &NamedConstants) -> Result<DoubleAlgebra, CatalogError> {
    let h = build_c_cop();
    let mut d = drinfeld_double(&h)?;
    d.name = "D".into();
    let n = 12;
    let phi = phi_matrix(consts);
    let emb_c = |i: usize| -> Elem {
        let mut v = vec![Scalar::zero(); 144];
        for p in 0..n {
            if !h.counit[p].is_zero() {
                v[p * n + i] = h.counit[p].clone();
            }
        }
        v
    };
    let emb_dual = |col: usize| -> Elem {
        let mut v = vec![Scalar::zero(); 144];
        for p in 0..n {
            v[p * n] = phi[(p, col)].clone();
        }
        v
    };
    let embedding = GeneratorEmbedding { assignment: vec![emb_c(1), emb_c(6), emb_dual(1), emb_dual(6)] };
    let presentation = double_presentation(consts);

    let mut relation_report = AxiomReport::new("presentation of D");
    for rel in &presentation.relations {
        let v = PresentedAlgebra::eval_elem(&d, rel, &embedding.assignment);
        relation_report.push(Check::from_bool(rel.name.clone(), v.iter().all(|c| c.is_zero()), || d.render(&v)));
    }
    // The bx relation is also printed with right-hand side θξ⁻²(a³ − g)a.
    let w = |s: &str| word_elem(&d, &embedding.assignment, &presentation.word(s));
    let lhs: Elem = w("aaaa").iter().zip(&w("ga")).map(|(x, y)| x - y).collect();
    let alt = {
        let a3_minus_g: Elem = w("aaa").iter().zip(&w("g")).map(|(x, y)| x - y).collect();
        d.mul(&a3_minus_g, &w("a"))
    };
    relation_report.push(Check::from_bool("a^4 - ga = (a^3 - g)a", lhs == alt, || d.render(&alt)));

    if let Some(f) = relation_report.failures().next() {
        return Err(CatalogError::PresentationMismatch {
            relation: f.name.clone(),
            residual: f.witness.as_ref().map(|w| w.detail.clone()).unwrap_or_default(),
        });
    }

    // PBW monomials: build by extending prefixes.
    let words = &presentation.pbw_monomials;
    let mut cols: Vec<Elem> = Vec::with_capacity(words.len());
    let mut cache: std::collections::HashMap<Vec<usize>, Elem> = std::collections::HashMap::new();
    cache.insert(vec![], d.one());
    for wd in words {
        for l in 1..=wd.len() {
            if !cache.contains_key(&wd[..l]) {
                let prev = cache[&wd[..l - 1]].clone();
                let v = d.mul(&prev, &embedding.assignment[wd[l - 1]]);
                cache.insert(wd[..l].to_vec(), v);
            }
        }
        cols.push(cache[&wd[..]].clone());
    }
    let m = Matrix::from_cols(144, &cols);
    let pbw_rank = m.rank();
    let inv = m.inverse().ok_or_else(|| CatalogError::PresentationMismatch {
        relation: "PBW monomials span".into(),
        residual: format!("rank {pbw_rank}"),
    })?;
    let basis_words = (0..144)
        .map(|t| (0..144).filter(|w| !inv[(*w, t)].is_zero()).map(|w| (w, inv[(w, t)].clone())).collect())
        .collect();
    Ok(DoubleAlgebra { hopf: d, presentation, embedding, constants: consts.clone(), relation_report, pbw_rank, basis_words })
}

/// Shared, lazily built copy of `D` for each θ sign.
pub fn double(sign: ThetaSign) -> &'static DoubleAlgebra {
    static PLUS: OnceLock<DoubleAlgebra> = OnceLock::new();
    static MINUS: OnceLock<DoubleAlgebra> = OnceLock::new();
    let cell = match sign {
        ThetaSign::Plus => &PLUS,
        ThetaSign::Minus => &MINUS,
    };
    cell.get_or_init(|| build_d(&NamedConstants::new(sign)).expect("the presentation of D holds"))
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 9] = ["A0", "A1", "B0", "B1", "C", "C*", "Ccop", "D", "KZ2"];

/// Look up a catalog algebra by name.
pub fn by_name(name: &str, sign: ThetaSign) -> Result<FinDimHopf, CatalogError> {
    Ok(match name {
        "A0" => build_pointed(Pointed::A0),
        "A1" => build_pointed(Pointed::A1),
        "B0" => build_pointed(Pointed::B0),
        "B1" => build_pointed(Pointed::B1),
        "C" => build_c(),
        "C*" | "Cdual" => build_c_dual(),
        "Ccop" => build_c_cop(),
        "D" => double(sign).hopf.clone(),
        "KZ2" => crate::hopfcore::cyclic_group_algebra(2),
        _ => return Err(CatalogError::UnknownName(name.to_string())),
    })
}

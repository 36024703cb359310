//! Finite-dimensional Hopf algebras stored as structure constants.
//!
//! A [`FinDimHopf`] holds the multiplication tensor, unit, comultiplication
//! tensor, counit and antipode matrix over a fixed ordered basis. Everything
//! else in the crate — duals, Drinfeld doubles, module actions, biproducts —
//! is built by contracting these tensors exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::{AxiomReport, Check};
use crate::linalg::Matrix;
use crate::scalars::{Rat, Scalar};

pub const SCHEMA_VERSION: &str = "hopf12.findimhopf.v1";

/// Dense coordinate vector of an element.
pub type Elem = Vec<Scalar>;

/// Sparse list of `(index, coefficient)` with sorted, distinct indices.
pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("malformed tensor: {0}")]
    MalformedTensor(String),
    #[error("structure is not certified at level `{0}`")]
    NotCertified(&'static str),
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("argument is not a grouplike element")]
    NotGrouplike,
    #[error("invalid interchange document: {0}")]
    Schema(String),
}

/// How much structure a verification covers; each level includes the previous ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Algebra => "algebra",
            Level::Coalgebra => "coalgebra",
            Level::Bialgebra => "bialgebra",
            Level::Hopf => "hopf",
        }
    }
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Level, String> {
        match s {
            "algebra" => Ok(Level::Algebra),
            "coalgebra" => Ok(Level::Coalgebra),
            "bialgebra" => Ok(Level::Bialgebra),
            "hopf" => Ok(Level::Hopf),
            _ => Err(format!("unknown level `{s}`")),
        }
    }
}

/// Which opposite structure [`FinDimHopf::variant`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Opposite multiplication.
    Op,
    /// Opposite comultiplication.
    Cop,
    /// Both opposite.
    Bop,
}

/// An element of `H ⊗ H`, keyed by basis index pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2(pub BTreeMap<(usize, usize), Scalar>);

impl Tensor2 {
    pub fn new() -> Tensor2 {
        Tensor2::default()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.0.remove(&(i, j));
        }
    }

    /// `x ⊗ y` for dense elements.
    pub fn pure(x: &[Scalar], y: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                t.add_term(i, j, &(a * b));
            }
        }
        t
    }

    pub fn add(&self, o: &Tensor2) -> Tensor2 {
        self.add_scaled(o, &Scalar::one())
    }

    pub fn sub(&self, o: &Tensor2) -> Tensor2 {
        self.add_scaled(o, &Scalar::int(-1))
    }

    pub fn add_scaled(&self, o: &Tensor2, c: &Scalar) -> Tensor2 {
        let mut t = self.clone();
        for ((i, j), v) in &o.0 {
            t.add_term(*i, *j, &(v * c));
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        Tensor2::new().add_scaled(self, c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn render(&self, left: &[String], right: &[String]) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|((i, j), c)| format!("({c})·{}⊗{}", left[*i], right[*j]))
            .collect();
        parts.join(" + ")
    }
}

/// Render a dense element against basis labels.
pub fn render(labels: &[String], x: &[Scalar]) -> String {
    let mut s = String::new();
    for (i, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !s.is_empty() {
            s.push_str(" + ");
        }
        let _ = write!(s, "({c})·{}", labels[i]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Sparse accumulator over a fixed index range.
pub(crate) struct Accum {
    buf: Vec<Scalar>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accum {
    pub(crate) fn new(n: usize) -> Accum {
        Accum { buf: vec![Scalar::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }

    pub(crate) fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.buf[i] += c;
    }

    /// Nonzero entries in index order; resets the accumulator.
    pub(crate) fn drain(&mut self) -> Sparse {
        self.touched.sort_unstable();
        let mut out = Vec::new();
        for &i in &self.touched {
            self.mark[i] = false;
            let v = std::mem::take(&mut self.buf[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

fn sparse_of(x: &[Scalar]) -> Sparse {
    x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn dense_of(n: usize, s: &Sparse) -> Elem {
    let mut v = vec![Scalar::zero(); n];
    for (i, c) in s {
        v[*i] = c.clone();
    }
    v
}

/// Structure constants of a finite-dimensional (co/bi/Hopf) algebra.
///
/// `mult[i·n + j]` lists `e_i·e_j`; `comult[i]` lists the terms
/// `(j, k, c)` of `Δ(e_i) = Σ c·e_j ⊗ e_k`; column `j` of `antipode` is `S(e_j)`.
#[derive(Clone, Debug)]
pub struct FinDimHopf {
    pub name: String,
    pub basis: Vec<String>,
    pub unit: Elem,
    pub counit: Elem,
    mult: Vec<Sparse>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    antipode: Matrix,
    antipode_cols: Vec<Sparse>,
    certified: Option<Level>,
}

impl FinDimHopf {
    /// Assemble from coordinate lists; duplicate entries are summed and zeros dropped.
    pub fn from_entries(
        name: impl Into<String>,
        basis: Vec<String>,
        unit: Elem,
        counit: Elem,
        mult: &[(usize, usize, usize, Scalar)],
        comult: &[(usize, usize, usize, Scalar)],
        antipode: Matrix,
    ) -> Result<FinDimHopf, HopfError> {
        let n = basis.len();
        let bad = |what: &str| HopfError::MalformedTensor(what.to_string());
        if unit.len() != n || counit.len() != n {
            return Err(bad("unit/counit length differs from the basis size"));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(bad("antipode is not dim×dim"));
        }
        let mut m: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n * n];
        for (i, j, k, c) in mult {
            if *i >= n || *j >= n || *k >= n {
                return Err(HopfError::MalformedTensor(format!("mult index ({i},{j},{k}) out of range")));
            }
            *m[i * n + j].entry(*k).or_default() += c;
        }
        let mut d: Vec<BTreeMap<(usize, usize), Scalar>> = vec![BTreeMap::new(); n];
        for (i, j, k, c) in comult {
            if *i >= n || *j >= n || *k >= n {
                return Err(HopfError::MalformedTensor(format!("comult index ({i},{j},{k}) out of range")));
            }
            *d[*i].entry((*j, *k)).or_default() += c;
        }
        let mult = m
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        let comult = d
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, c)| !c.is_zero()).map(|((j, k), c)| (j, k, c)).collect())
            .collect();
        Ok(FinDimHopf::assemble(name.into(), basis, unit, counit, mult, comult, antipode))
    }

    fn assemble(
        name: String,
        basis: Vec<String>,
        unit: Elem,
        counit: Elem,
        mult: Vec<Sparse>,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        antipode: Matrix,
    ) -> FinDimHopf {
        let n = basis.len();
        let antipode_cols = (0..n).map(|j| sparse_of(&antipode.col(j))).collect();
        FinDimHopf { name, basis, unit, counit, mult, comult, antipode, antipode_cols, certified: None }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn certified(&self) -> Option<Level> {
        self.certified
    }

    /// `e_i · e_j` as a sparse list.
    pub fn mult_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i * self.dim() + j]
    }

    /// Terms of `Δ(e_i)`.
    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &Sparse {
        &self.antipode_cols[i]
    }

    pub fn basis_vec(&self, i: usize) -> Elem {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    pub fn zero(&self) -> Elem {
        vec![Scalar::zero(); self.dim()]
    }

    pub fn one(&self) -> Elem {
        self.unit.clone()
    }

    fn check_len(&self, x: &[Scalar]) -> Result<(), HopfError> {
        if x.len() != self.dim() {
            return Err(HopfError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(())
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        self.try_mul(x, y).expect("dimension mismatch")
    }

    pub fn try_mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Elem, HopfError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        let ys = sparse_of(y);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in &ys {
                let ab = a * b;
                for (k, c) in &self.mult[i * n + j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        Ok(out)
    }

    /// Product of a list of elements, left to right.
    pub fn product(&self, xs: &[&Elem]) -> Elem {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn pow(&self, x: &[Scalar], k: usize) -> Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn comult(&self, x: &[Scalar]) -> Tensor2 {
        let mut t = Tensor2::new();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, k, c) in &self.comult[i] {
                t.add_term(*j, *k, &(a * c));
            }
        }
        t
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for (a, b) in x.iter().zip(&self.counit) {
            if !a.is_zero() && !b.is_zero() {
                s += &(a * b);
            }
        }
        s
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Elem {
        self.antipode.mul_vec(x)
    }

    /// Product in `H ⊗ H` (componentwise).
    pub fn mul_tensor(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let n = self.dim();
        let mut t = Tensor2::new();
        for ((a, b), c1) in &x.0 {
            for ((p, q), c2) in &y.0 {
                let c = c1 * c2;
                for (k, d1) in &self.mult[a * n + p] {
                    let cd = &c * d1;
                    for (l, d2) in &self.mult[b * n + q] {
                        t.add_term(*k, *l, &(&cd * d2));
                    }
                }
            }
        }
        t
    }

    pub fn render(&self, x: &[Scalar]) -> String {
        render(&self.basis, x)
    }

    pub fn render_tensor(&self, t: &Tensor2) -> String {
        t.render(&self.basis, &self.basis)
    }

    /// Run every axiom check up to `level`, recording the result in the
    /// certification flag.
    pub fn certify(&mut self, level: Level) -> AxiomReport {
        let r = verify_hopf(self, level);
        self.certified = if r.all_pass() { Some(level) } else { None };
        r
    }

    fn require(&self, level: Level) -> Result<(), HopfError> {
        match self.certified {
            Some(l) if l >= level => Ok(()),
            _ => Err(HopfError::NotCertified(level.name())),
        }
    }

    /// Dual Hopf algebra on the dual basis: multiplication is the transposed
    /// comultiplication and vice versa; the antipode is transposed.
    pub fn dual(&self) -> Result<FinDimHopf, HopfError> {
        self.require(Level::Hopf)?;
        Ok(self.dual_unchecked())
    }

    pub(crate) fn dual_unchecked(&self) -> FinDimHopf {
        let n = self.dim();
        let mut mult: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); n * n];
        for k in 0..n {
            for (i, j, c) in &self.comult[k] {
                mult[i * n + j].insert(k, c.clone());
            }
        }
        let mut comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mult[i * n + j] {
                    comult[*k].push((i, j, c.clone()));
                }
            }
        }
        for row in &mut comult {
            row.sort_by_key(|(i, j, _)| (*i, *j));
        }
        let mult = mult.into_iter().map(|m| m.into_iter().collect()).collect();
        let basis = self.basis.iter().map(|l| format!("{l}*")).collect();
        let mut d = FinDimHopf::assemble(
            format!("dual({})", self.name),
            basis,
            self.counit.clone(),
            self.unit.clone(),
            mult,
            comult,
            self.antipode.transpose(),
        );
        d.certified = self.certified;
        d
    }

    /// `H^op`, `H^cop` or `H^bop`. The antipode of `op`/`cop` is `S⁻¹`.
    pub fn variant(&self, which: Variant) -> Result<FinDimHopf, HopfError> {
        self.require(Level::Hopf)?;
        let n = self.dim();
        let swap_mult = matches!(which, Variant::Op | Variant::Bop);
        let swap_comult = matches!(which, Variant::Cop | Variant::Bop);
        let mult = if swap_mult {
            (0..n * n).map(|ij| self.mult[(ij % n) * n + ij / n].clone()).collect()
        } else {
            self.mult.clone()
        };
        let comult = if swap_comult {
            self.comult
                .iter()
                .map(|row| {
                    let mut r: Vec<_> = row.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect();
                    r.sort_by_key(|(j, k, _)| (*j, *k));
                    r
                })
                .collect()
        } else {
            self.comult.clone()
        };
        let antipode = match which {
            Variant::Bop => self.antipode.clone(),
            _ => self.antipode.inverse().ok_or(HopfError::SingularAntipode)?,
        };
        let tag = match which {
            Variant::Op => "op",
            Variant::Cop => "cop",
            Variant::Bop => "bop",
        };
        let mut v = FinDimHopf::assemble(
            format!("{}^{tag}", self.name),
            self.basis.clone(),
            self.unit.clone(),
            self.counit.clone(),
            mult,
            comult,
            antipode,
        );
        v.certified = self.certified;
        Ok(v)
    }

    /// Dense copies of all structure tensors, for bit-exact comparisons.
    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.mult[i * n + j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn comult_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, row) in self.comult.iter().enumerate() {
            for (j, k, c) in row {
                out.push((i, *j, *k, c.clone()));
            }
        }
        out
    }

    /// Add `delta` to one structure constant (negative controls).
    pub fn perturb(&self, target: Perturbation, delta: &Scalar) -> Result<FinDimHopf, HopfError> {
        let n = self.dim();
        let oob = |s: String| HopfError::MalformedTensor(s);
        let mut mult = self.mult_entries();
        let mut comult = self.comult_entries();
        let mut unit = self.unit.clone();
        let mut counit = self.counit.clone();
        let mut antipode = self.antipode.clone();
        match target {
            Perturbation::Mult(i, j, k) => {
                if i >= n || j >= n || k >= n {
                    return Err(oob(format!("mult index ({i},{j},{k}) out of range")));
                }
                mult.push((i, j, k, delta.clone()));
            }
            Perturbation::Comult(i, j, k) => {
                if i >= n || j >= n || k >= n {
                    return Err(oob(format!("comult index ({i},{j},{k}) out of range")));
                }
                comult.push((i, j, k, delta.clone()));
            }
            Perturbation::Antipode(i, j) => {
                if i >= n || j >= n {
                    return Err(oob(format!("antipode index ({i},{j}) out of range")));
                }
                antipode[(i, j)] += delta;
            }
            Perturbation::Unit(i) => {
                if i >= n {
                    return Err(oob(format!("unit index {i} out of range")));
                }
                unit[i] += delta;
            }
            Perturbation::Counit(i) => {
                if i >= n {
                    return Err(oob(format!("counit index {i} out of range")));
                }
                counit[i] += delta;
            }
        }
        FinDimHopf::from_entries(self.name.clone(), self.basis.clone(), unit, counit, &mult, &comult, antipode)
    }

    /// Whether `S(xy) = S(y)S(x)` on every basis pair.
    pub fn check_antipode_antimultiplicative(&self) -> Check {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let l = self.antipode_of(&dense_of(n, &self.mult[i * n + j]));
                let r = self.mul(&self.antipode_of(&self.basis_vec(j)), &self.antipode_of(&self.basis_vec(i)));
                if l != r {
                    let diff: Elem = l.iter().zip(&r).map(|(a, b)| a - b).collect();
                    return Check::fail("antipode anti-multiplicative", vec![i, j], self.render(&diff));
                }
            }
        }
        Check::pass("antipode anti-multiplicative")
    }

    /// Smallest `k ≥ 1` with `S^k = id`, searched up to `bound`.
    pub fn antipode_order(&self, bound: usize) -> Option<usize> {
        let id = Matrix::identity(self.dim());
        let mut p = self.antipode.clone();
        for k in 1..=bound {
            if p == id {
                return Some(k);
            }
            p = p.mul(&self.antipode);
        }
        None
    }
}

/// A single structure constant to perturb.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Perturbation {
    Mult(usize, usize, usize),
    Comult(usize, usize, usize),
    Antipode(usize, usize),
    Unit(usize),
    Counit(usize),
}

impl std::str::FromStr for Perturbation {
    type Err = String;

    /// `mult:i,j,k`, `comult:i,j,k`, `antipode:i,j`, `unit:i` or `counit:i`.
    fn from_str(s: &str) -> Result<Perturbation, String> {
        let (kind, idx) = s.split_once(':').ok_or_else(|| format!("bad perturbation target `{s}`"))?;
        let ix: Result<Vec<usize>, _> = idx.split(',').map(|t| t.trim().parse::<usize>()).collect();
        let ix = ix.map_err(|e| format!("bad index in `{s}`: {e}"))?;
        match (kind, ix.as_slice()) {
            ("mult", [i, j, k]) => Ok(Perturbation::Mult(*i, *j, *k)),
            ("comult", [i, j, k]) => Ok(Perturbation::Comult(*i, *j, *k)),
            ("antipode", [i, j]) => Ok(Perturbation::Antipode(*i, *j)),
            ("unit", [i]) => Ok(Perturbation::Unit(*i)),
            ("counit", [i]) => Ok(Perturbation::Counit(*i)),
            _ => Err(format!("bad perturbation target `{s}`")),
        }
    }
}

fn first_failure<F>(n: usize, f: F) -> Option<(Vec<usize>, String)>
where
    F: Fn(usize) -> Option<(Vec<usize>, String)> + Sync + Send,
{
    let found: Vec<Option<(Vec<usize>, String)>> = (0..n).into_par_iter().map(f).collect();
    found.into_iter().flatten().next()
}

fn to_check(name: &str, r: Option<(Vec<usize>, String)>) -> Check {
    match r {
        None => Check::pass(name),
        Some((ix, d)) => Check::fail(name, ix, d),
    }
}

/// Check every axiom up to `level` by full contraction over basis indices.
///
/// Failures carry the first violating basis tuple in basis order and the
/// nonzero discrepancy.
pub fn verify_hopf(h: &FinDimHopf, level: Level) -> AxiomReport {
    let n = h.dim();
    let mut rep = AxiomReport::new(h.name.clone());
    let labels = &h.basis;

    let assoc = first_failure(n, |i| {
        let mut acc = Accum::new(n);
        for j in 0..n {
            let ij = &h.mult[i * n + j];
            for k in 0..n {
                for (l, c) in ij {
                    for (m, d) in &h.mult[l * n + k] {
                        acc.add(*m, &(c * d));
                    }
                }
                for (l, c) in &h.mult[j * n + k] {
                    for (m, d) in &h.mult[i * n + l] {
                        acc.add(*m, &-(c * d));
                    }
                }
                let diff = acc.drain();
                if !diff.is_empty() {
                    return Some((vec![i, j, k], render(labels, &dense_of(n, &diff))));
                }
            }
        }
        None
    });
    rep.push(to_check("associativity", assoc));

    let unit = (0..n).find_map(|i| {
        let e = h.basis_vec(i);
        let l = h.mul(&h.unit, &e);
        let r = h.mul(&e, &h.unit);
        if l != e {
            Some((vec![i], format!("1·e = {}", render(labels, &l))))
        } else if r != e {
            Some((vec![i], format!("e·1 = {}", render(labels, &r))))
        } else {
            None
        }
    });
    rep.push(to_check("unit", unit));
    if level == Level::Algebra {
        return rep;
    }

    let coassoc = first_failure(n, |i| {
        let mut m: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (j, k, c) in &h.comult[i] {
            for (p, q, d) in &h.comult[*j] {
                *m.entry((*p, *q, *k)).or_default() += &(c * d);
            }
            for (p, q, d) in &h.comult[*k] {
                *m.entry((*j, *p, *q)).or_default() -= &(c * d);
            }
        }
        m.retain(|_, v| !v.is_zero());
        m.iter().next().map(|((a, b, c), v)| {
            (vec![i], format!("(Δ⊗id)Δ − (id⊗Δ)Δ has ({v})·{}⊗{}⊗{}", labels[*a], labels[*b], labels[*c]))
        })
    });
    rep.push(to_check("coassociativity", coassoc));

    let counit = (0..n).find_map(|i| {
        let mut l = h.zero();
        let mut r = h.zero();
        for (j, k, c) in &h.comult[i] {
            l[*k] += &(c * &h.counit[*j]);
            r[*j] += &(c * &h.counit[*k]);
        }
        let e = h.basis_vec(i);
        if l != e {
            Some((vec![i], format!("(ε⊗id)Δ = {}", render(labels, &l))))
        } else if r != e {
            Some((vec![i], format!("(id⊗ε)Δ = {}", render(labels, &r))))
        } else {
            None
        }
    });
    rep.push(to_check("counit", counit));
    if level == Level::Coalgebra {
        return rep;
    }

    let bialg = first_failure(n, |i| {
        let mut acc = Accum::new(n * n);
        for j in 0..n {
            for (k, c) in &h.mult[i * n + j] {
                for (p, q, d) in &h.comult[*k] {
                    acc.add(p * n + q, &(c * d));
                }
            }
            for (a, b, c1) in &h.comult[i] {
                for (p, q, c2) in &h.comult[j] {
                    let c = -(c1 * c2);
                    let m1 = &h.mult[a * n + p];
                    if m1.is_empty() {
                        continue;
                    }
                    let m2 = &h.mult[b * n + q];
                    for (k, d1) in m1 {
                        let cd = &c * d1;
                        for (l, d2) in m2 {
                            acc.add(k * n + l, &(&cd * d2));
                        }
                    }
                }
            }
            let diff = acc.drain();
            if let Some((x, v)) = diff.first() {
                return Some((
                    vec![i, j],
                    format!("Δ(xy) − Δ(x)Δ(y) has ({v})·{}⊗{}", labels[x / n], labels[x % n]),
                ));
            }
        }
        None
    });
    rep.push(to_check("comultiplication multiplicative", bialg));

    let eps_mult = (0..n).find_map(|i| {
        (0..n).find_map(|j| {
            let lhs = h.counit_of(&dense_of(n, &h.mult[i * n + j]));
            let rhs = &h.counit[i] * &h.counit[j];
            (lhs != rhs).then(|| (vec![i, j], format!("ε(xy) = {lhs}, ε(x)ε(y) = {rhs}")))
        })
    });
    rep.push(to_check("counit multiplicative", eps_mult));

    let d1 = h.comult(&h.unit);
    let one_one = Tensor2::pure(&h.unit, &h.unit);
    rep.push(Check::from_bool("comultiplication unital", d1 == one_one, || {
        format!("Δ(1) = {}", h.render_tensor(&d1))
    }));
    let e1 = h.counit_of(&h.unit);
    rep.push(Check::from_bool("counit unital", e1.is_one(), || format!("ε(1) = {e1}")));
    if level == Level::Bialgebra {
        return rep;
    }

    let anti = first_failure(n, |i| {
        let mut l = Accum::new(n);
        let mut r = Accum::new(n);
        for (j, k, c) in &h.comult[i] {
            for (s, d) in &h.antipode_cols[*j] {
                for (t, m) in &h.mult[s * n + k] {
                    l.add(*t, &(&(c * d) * m));
                }
            }
            for (s, d) in &h.antipode_cols[*k] {
                for (t, m) in &h.mult[j * n + s] {
                    r.add(*t, &(&(c * d) * m));
                }
            }
        }
        let eps = &h.counit[i];
        for (t, u) in h.unit.iter().enumerate() {
            l.add(t, &-(eps * u));
            r.add(t, &-(eps * u));
        }
        let dl = l.drain();
        let dr = r.drain();
        if !dl.is_empty() {
            Some((vec![i], format!("S(x₁)x₂ − ε(x)1 = {}", render(labels, &dense_of(n, &dl)))))
        } else if !dr.is_empty() {
            Some((vec![i], format!("x₁S(x₂) − ε(x)1 = {}", render(labels, &dense_of(n, &dr)))))
        } else {
            None
        }
    });
    rep.push(to_check("antipode", anti));
    rep
}

/// The Drinfeld double `D(H) = H^{*cop} ⊗ H` with basis index `n·p + a`
/// for `e^p ⊗ e_a`.
///
/// Multiplication: `(p⊗a)(q⊗b) = p⟨q₃, a₁⟩q₂ ⊗ a₂⟨q₁, S⁻¹(a₃)⟩`; the
/// coalgebra is the tensor product of `H^{*cop}` and `H`.
pub fn drinfeld_double(h: &FinDimHopf) -> Result<FinDimHopf, HopfError> {
    h.require(Level::Hopf)?;
    let n = h.dim();
    let sinv = h.antipode.inverse().ok_or(HopfError::SingularAntipode)?;
    let sinv_cols: Vec<Sparse> = (0..n).map(|j| sparse_of(&sinv.col(j))).collect();

    // e_r e_s e_t
    let trip: Vec<Sparse> = (0..n * n * n)
        .into_par_iter()
        .map(|rst| {
            let (r, s, t) = (rst / (n * n), (rst / n) % n, rst % n);
            let mut acc = Accum::new(n);
            for (k, c) in &h.mult[r * n + s] {
                for (l, d) in &h.mult[k * n + t] {
                    acc.add(*l, &(c * d));
                }
            }
            acc.drain()
        })
        .collect();

    // Multiplication of H^*: e^p e^s = Σ_k Δ(e_k)[(p,s)] e^k.
    let mut dual_mult: Vec<Sparse> = vec![Vec::new(); n * n];
    for k in 0..n {
        for (p, s, c) in &h.comult[k] {
            dual_mult[p * n + s].push((k, c.clone()));
        }
    }

    // Δ²(e_a) terms.
    let d2: Vec<Vec<(usize, usize, usize, Scalar)>> = (0..n)
        .map(|a| {
            let mut m: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (x, y, c) in &h.comult[a] {
                for (p, q, d) in &h.comult[*x] {
                    *m.entry((*p, *q, *y)).or_default() += &(c * d);
                }
            }
            m.into_iter().filter(|(_, v)| !v.is_zero()).map(|((p, q, y), v)| (p, q, y, v)).collect()
        })
        .collect();

    // cross[a][q] = terms (s, a2, v) with (1⊗e_a)(e^q⊗1) = Σ v · e^s ⊗ e_{a2}.
    let cross: Vec<Vec<Vec<(usize, usize, Scalar)>>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut m: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (a1, a2, a3, c) in &d2[a] {
                for (r, ur) in &sinv_cols[*a3] {
                    let cu = c * ur;
                    for s in 0..n {
                        for (q, v) in &trip[(r * n + s) * n + a1] {
                            *m.entry((*q, s, *a2)).or_default() += &(&cu * v);
                        }
                    }
                }
            }
            let mut by_q: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
            for ((q, s, a2), v) in m {
                if !v.is_zero() {
                    by_q[q].push((s, a2, v));
                }
            }
            by_q
        })
        .collect();

    let nn = n * n;
    let mult: Vec<Sparse> = (0..nn * nn)
        .into_par_iter()
        .map(|xy| {
            let (x, y) = (xy / nn, xy % nn);
            let (p, a) = (x / n, x % n);
            let (q, b) = (y / n, y % n);
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (s, a2, v) in &cross[a][q] {
                for (k, c1) in &dual_mult[p * n + s] {
                    let vc = v * c1;
                    for (l, c2) in &h.mult[a2 * n + b] {
                        *acc.entry(k * n + l).or_default() += &(&vc * c2);
                    }
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect();

    let mut unit = vec![Scalar::zero(); nn];
    for p in 0..n {
        for (k, u) in h.unit.iter().enumerate() {
            if !h.counit[p].is_zero() && !u.is_zero() {
                unit[p * n + k] = &h.counit[p] * u;
            }
        }
    }

    // Δ_{H^{*cop}}(e^p) = Σ [e_r e_s]_p e^s ⊗ e^r.
    let mut dual_comult: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for r in 0..n {
        for s in 0..n {
            for (p, c) in &h.mult[r * n + s] {
                dual_comult[*p].push((s, r, c.clone()));
            }
        }
    }
    let mut comult = Vec::with_capacity(nn);
    for p in 0..n {
        for a in 0..n {
            let mut m: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (p1, p2, c) in &dual_comult[p] {
                for (a1, a2, d) in &h.comult[a] {
                    *m.entry((p1 * n + a1, p2 * n + a2)).or_default() += &(c * d);
                }
            }
            comult.push(m.into_iter().filter(|(_, v)| !v.is_zero()).map(|((x, y), v)| (x, y, v)).collect());
        }
    }

    let mut counit = vec![Scalar::zero(); nn];
    for p in 0..n {
        for a in 0..n {
            counit[p * n + a] = &h.unit[p] * &h.counit[a];
        }
    }

    let basis: Vec<String> = (0..n)
        .flat_map(|p| (0..n).map(move |a| (p, a)))
        .map(|(p, a)| format!("{}*⊗{}", h.basis[p], h.basis[a]))
        .collect();
    let mut d = FinDimHopf::assemble(
        format!("D({})", h.name),
        basis,
        unit,
        counit,
        mult,
        comult,
        Matrix::zeros(nn, nn),
    );

    // S(e^p ⊗ e_a) = (ε ⊗ S(e_a)) · (S_{H^{*cop}}(e^p) ⊗ 1), S_{H^{*cop}}(e^p) = Σ_r [S⁻¹(e_r)]_p e^r.
    let cols: Vec<Elem> = (0..nn)
        .into_par_iter()
        .map(|x| {
            let (p, a) = (x / n, x % n);
            let mut left = vec![Scalar::zero(); nn];
            for (t, c) in &h.antipode_cols[a] {
                for pp in 0..n {
                    if !h.counit[pp].is_zero() {
                        left[pp * n + t] += &(c * &h.counit[pp]);
                    }
                }
            }
            let mut right = vec![Scalar::zero(); nn];
            for r in 0..n {
                let c = &sinv[(p, r)];
                if c.is_zero() {
                    continue;
                }
                for (k, u) in h.unit.iter().enumerate() {
                    if !u.is_zero() {
                        right[r * n + k] += &(c * u);
                    }
                }
            }
            d.mul(&left, &right)
        })
        .collect();
    d.antipode = Matrix::from_cols(nn, &cols);
    d.antipode_cols = cols.iter().map(|c| sparse_of(c)).collect();
    Ok(d)
}

/// A structure-preserving linear map, stored as a `target.dim × source.dim` matrix.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub matrix: Matrix,
}

impl HopfMorphism {
    pub fn apply(&self, x: &[Scalar]) -> Elem {
        self.matrix.mul_vec(x)
    }

    /// Check algebra and coalgebra compatibility on every basis element, plus bijectivity.
    pub fn certify(&self, src: &FinDimHopf, tgt: &FinDimHopf) -> AxiomReport {
        let mut rep = AxiomReport::new(format!("{} → {}", src.name, tgt.name));
        let n = src.dim();
        let cols: Vec<Elem> = (0..n).map(|i| self.matrix.col(i)).collect();
        let mult = (0..n).find_map(|i| {
            (0..n).find_map(|j| {
                let l = self.apply(&dense_of(n, src.mult_basis(i, j)));
                let r = tgt.mul(&cols[i], &cols[j]);
                (l != r).then(|| (vec![i, j], format!("φ(xy) − φ(x)φ(y) = {}", tgt.render(&sub(&l, &r)))))
            })
        });
        rep.push(to_check("multiplicative", mult));
        let u = self.apply(&src.unit);
        rep.push(Check::from_bool("unital", u == tgt.unit, || format!("φ(1) = {}", tgt.render(&u))));
        let comult = (0..n).find_map(|i| {
            let mut l = Tensor2::new();
            for (p, q, c) in src.comult_basis(i) {
                for (a, x) in cols[*p].iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (b, y) in cols[*q].iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        l.add_term(a, b, &(&(c * x) * y));
                    }
                }
            }
            let r = tgt.comult(&cols[i]);
            (l != r).then(|| (vec![i], format!("(φ⊗φ)Δ − Δφ = {}", tgt.render_tensor(&l.sub(&r)))))
        });
        rep.push(to_check("comultiplicative", comult));
        let counit = (0..n).find_map(|i| {
            let e = tgt.counit_of(&cols[i]);
            (e != src.counit[i]).then(|| (vec![i], format!("ε(φ(x)) = {e}, ε(x) = {}", src.counit[i])))
        });
        rep.push(to_check("counital", counit));
        let rank = self.matrix.rank();
        rep.push(Check::from_bool("bijective", rank == n && tgt.dim() == n, || {
            format!("rank {rank} for dimensions {n} → {}", tgt.dim())
        }));
        rep
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Elem {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Jacobson radical of the algebra with multiplication `mult` (dimension
/// `n`), as the kernel of the trace form `(x, y) ↦ tr L_{xy}` (valid in
/// characteristic zero).
fn trace_form_radical(n: usize, mult: impl Fn(usize, usize) -> Sparse) -> Vec<Elem> {
    let tr: Vec<Scalar> = (0..n)
        .map(|k| {
            let mut t = Scalar::zero();
            for s in 0..n {
                for (u, c) in mult(k, s) {
                    if u == s {
                        t += &c;
                    }
                }
            }
            t
        })
        .collect();
    let mut form = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = Scalar::zero();
            for (k, c) in mult(i, j) {
                if !tr[k].is_zero() {
                    v += &(&c * &tr[k]);
                }
            }
            form[(i, j)] = v;
        }
    }
    form.nullspace()
}

/// Jacobson radical of `H` as an algebra.
pub fn jacobson_radical(h: &FinDimHopf) -> Vec<Elem> {
    let n = h.dim();
    trace_form_radical(n, |i, j| h.mult[i * n + j].clone())
}

fn dual_mult_sparse(h: &FinDimHopf) -> Vec<Sparse> {
    let n = h.dim();
    let mut m: Vec<Sparse> = vec![Vec::new(); n * n];
    for k in 0..n {
        for (i, j, c) in &h.comult[k] {
            m[i * n + j].push((k, c.clone()));
        }
    }
    m
}

/// Coradical data of a coalgebra: the coradical is the annihilator of the
/// Jacobson radical of the dual algebra.
#[derive(Clone, Debug, Serialize)]
pub struct CoradicalInfo {
    pub dim: usize,
    /// Number of simple subcoalgebras (dimension of the centre of `H*/rad`).
    pub simple_blocks: usize,
    /// Whether the coradical is closed under multiplication.
    pub closed_under_mult: bool,
    #[serde(skip)]
    pub basis: Vec<Elem>,
}

pub fn coradical(h: &FinDimHopf) -> CoradicalInfo {
    let n = h.dim();
    let dm = dual_mult_sparse(h);
    let rad = trace_form_radical(n, |i, j| dm[i * n + j].clone());
    let basis = if rad.is_empty() {
        (0..n).map(|i| h.basis_vec(i)).collect()
    } else {
        Matrix::from_rows(rad.clone()).nullspace()
    };
    // centre of H*/rad: f with [f, e^k] ∈ rad for all k.
    let simple_blocks = {
        let rad_rank = rad.len();
        // unknown f (n coords) + rad combination per k; solve via quotient coordinates.
        let quotient = complement_projector(n, &rad);
        let mut rows: Vec<Elem> = Vec::new();
        for k in 0..n {
            // column c of the commutator map f ↦ [f, e^k], projected to H*/rad
            let mut block = Matrix::zeros(quotient.rows(), n);
            for f in 0..n {
                let mut v = vec![Scalar::zero(); n];
                for (t, c) in &dm[f * n + k] {
                    v[*t] += c;
                }
                for (t, c) in &dm[k * n + f] {
                    v[*t] -= c;
                }
                let pv = quotient.mul_vec(&v);
                for (r, x) in pv.into_iter().enumerate() {
                    block[(r, f)] = x;
                }
            }
            for r in 0..block.rows() {
                rows.push(block.row(r).to_vec());
            }
        }
        let centre_with_rad = if rows.is_empty() { n } else { n - Matrix::from_rows(rows).rank() };
        centre_with_rad - rad_rank
    };
    let closed_under_mult = {
        let r = crate::linalg::rank_of(&basis, n);
        let mut all = basis.clone();
        'outer: for x in &basis {
            for y in &basis {
                let p = h.mul(x, y);
                all.push(p);
                if crate::linalg::rank_of(&all, n) > r {
                    break 'outer;
                }
            }
        }
        crate::linalg::rank_of(&all, n) == r
    };
    CoradicalInfo { dim: basis.len(), simple_blocks, closed_under_mult, basis }
}

/// A matrix whose kernel is exactly the span of `sub` (rows = quotient coordinates).
pub(crate) fn complement_projector(n: usize, sub: &[Elem]) -> Matrix {
    if sub.is_empty() {
        return Matrix::identity(n);
    }
    let ann = Matrix::from_rows(sub.to_vec()).nullspace();
    if ann.is_empty() {
        return Matrix::zeros(0, n);
    }
    Matrix::from_rows(ann)
}

/// Outcome of the grouplike search.
#[derive(Clone, Debug)]
pub struct GrouplikeSearch {
    pub elements: Vec<Elem>,
    /// Dimension of the span that must contain every grouplike.
    pub span_bound: usize,
    /// True when the search provably found every grouplike.
    pub complete: bool,
}

/// All grouplike elements `g` (`Δ(g) = g⊗g`, `ε(g) = 1`), each verified exactly.
pub fn grouplikes(h: &FinDimHopf) -> Vec<Elem> {
    grouplike_search(h).elements
}

/// Grouplike search.
///
/// The grouplikes span the annihilator `W` of `rad(H*) + [H*, H*]`-ideal, a
/// subcoalgebra. On `W` the operators `R_f(x) = x₁ f(x₂)` have every
/// grouplike as eigenvector with eigenvalue `f(g)`. For a generic `f` the
/// `K`-rational eigenvalues are located numerically, confirmed exactly as
/// roots of the characteristic polynomial, and each one-dimensional
/// eigenspace is normalized and checked to be grouplike. The search is
/// complete when every rational eigenspace is one-dimensional.
pub fn grouplike_search(h: &FinDimHopf) -> GrouplikeSearch {
    let n = h.dim();
    let dm = dual_mult_sparse(h);
    let mut ideal = trace_form_radical(n, |i, j| dm[i * n + j].clone());
    for i in 0..n {
        for j in (i + 1)..n {
            let mut v = vec![Scalar::zero(); n];
            for (t, c) in &dm[i * n + j] {
                v[*t] += c;
            }
            for (t, c) in &dm[j * n + i] {
                v[*t] -= c;
            }
            if v.iter().any(|x| !x.is_zero()) {
                ideal.push(v);
            }
        }
    }
    let mut ideal = Matrix::from_rows_or_empty(ideal, n).row_space();
    loop {
        let before = ideal.len();
        let mut ext = ideal.clone();
        for f in &ideal {
            for k in 0..n {
                let mut l = vec![Scalar::zero(); n];
                let mut r = vec![Scalar::zero(); n];
                for (i, c) in f.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (t, d) in &dm[k * n + i] {
                        l[*t] += &(c * d);
                    }
                    for (t, d) in &dm[i * n + k] {
                        r[*t] += &(c * d);
                    }
                }
                ext.push(l);
                ext.push(r);
            }
        }
        ideal = Matrix::from_rows_or_empty(ext, n).row_space();
        if ideal.len() == before {
            break;
        }
    }
    let w: Vec<Elem> = if ideal.is_empty() {
        (0..n).map(|i| h.basis_vec(i)).collect()
    } else {
        Matrix::from_rows(ideal).nullspace()
    };
    let m = w.len();
    if m == 0 {
        return GrouplikeSearch { elements: vec![], span_bound: 0, complete: true };
    }
    let wmat = Matrix::from_cols(n, &w);

    let mut best = GrouplikeSearch { elements: vec![], span_bound: m, complete: false };
    for attempt in 0..6u64 {
        let f: Vec<Scalar> = (0..n)
            .map(|k| Scalar::int(((k as u64 * 7 + attempt * 13 + 3) % 11) as i64 - 5))
            .collect();
        // R_f restricted to W, in W coordinates.
        let mut rf = Matrix::zeros(m, m);
        let mut ok = true;
        for (c, wv) in w.iter().enumerate() {
            let mut img = vec![Scalar::zero(); n];
            for (i, a) in wv.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (j, k, d) in &h.comult[i] {
                    if !f[*k].is_zero() {
                        img[*j] += &(&(a * d) * &f[*k]);
                    }
                }
            }
            match wmat.solve(&img) {
                Some(coords) => {
                    for (r, x) in coords.into_iter().enumerate() {
                        rf[(r, c)] = x;
                    }
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let poly = char_poly(&rf);
        let roots = rational_roots(&poly);
        let mut found = Vec::new();
        let mut all_simple = true;
        for lam in roots {
            let shifted = rf.sub(&Matrix::scalar(m, &lam));
            let ker = shifted.nullspace();
            if ker.len() != 1 {
                all_simple = false;
                continue;
            }
            let g = wmat.mul_vec(&ker[0]);
            let e = h.counit_of(&g);
            if e.is_zero() {
                continue;
            }
            let einv = e.inv().expect("nonzero");
            let g: Elem = g.iter().map(|x| x * &einv).collect();
            if h.comult(&g) == Tensor2::pure(&g, &g) {
                found.push(g);
            }
        }
        found.sort_by(|a, b| elem_key(a).cmp(&elem_key(b)));
        if all_simple {
            return GrouplikeSearch { elements: found, span_bound: m, complete: true };
        }
        if found.len() > best.elements.len() {
            best.elements = found;
        }
    }
    best
}

fn elem_key(x: &[Scalar]) -> Vec<(usize, String)> {
    x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.to_string())).collect()
}

/// Characteristic polynomial `det(tI − A)`, coefficients from constant term up.
pub fn char_poly(a: &Matrix) -> Vec<Scalar> {
    // Faddeev–LeVerrier.
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Matrix::scalar(n, &coeffs[n + 1 - k]));
        let t = a.mul(&m).trace();
        coeffs[n - k] = -(&t * &Scalar::rational(1, k as i64));
    }
    coeffs
}

fn eval_poly(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Distinct roots in `K` of a polynomial (coefficients low to high), found
/// numerically and confirmed exactly.
pub fn rational_roots(p: &[Scalar]) -> Vec<Scalar> {
    let deg = p.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
    if deg == 0 {
        return vec![];
    }
    let lead = p[deg].to_complex();
    let coeffs: Vec<Complex64> = p[..=deg].iter().map(|c| c.to_complex() / lead).collect();
    let approx = durand_kerner(&coeffs);
    let mut out: Vec<Scalar> = Vec::new();
    for z in approx {
        let h = 3f64.sqrt() / 2.0;
        let v = z.im / h;
        let u = z.re - v / 2.0;
        let (Some(u), Some(v)) = (approximate_rational(u), approximate_rational(v)) else {
            continue;
        };
        let cand = Scalar::new(u, v);
        if !out.contains(&cand) && eval_poly(p, &cand).is_zero() {
            out.push(cand);
        }
    }
    out.sort_by_key(|a| a.to_string());
    out
}

fn durand_kerner(monic: &[Complex64]) -> Vec<Complex64> {
    let deg = monic.len() - 1;
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32)).collect();
    for _ in 0..2000 {
        let mut delta = 0f64;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() < 1e-300 {
                continue;
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

fn approximate_rational(x: f64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    // Continued-fraction convergents up to a modest denominator.
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        if a.abs() > 1e12 {
            break;
        }
        let a = a as i64;
        let h2 = a.checked_mul(h1)?.checked_add(h0)?;
        let k2 = a.checked_mul(k1)?.checked_add(k0)?;
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if k1 > 1_000_000 {
            return None;
        }
        if ((h1 as f64) / (k1 as f64) - x).abs() < 1e-9 {
            return Some(Rat::new(h1, k1));
        }
        let frac = r - r.floor();
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    (k1 != 0 && ((h1 as f64) / (k1 as f64) - x).abs() < 1e-9).then(|| Rat::new(h1, k1))
}

/// Basis of `{v : Δ(v) = v⊗g + h⊗v}`.
pub fn skew_primitives(hopf: &FinDimHopf, g: &[Scalar], h: &[Scalar]) -> Result<Vec<Elem>, HopfError> {
    hopf.check_len(g)?;
    hopf.check_len(h)?;
    if hopf.comult(g) != Tensor2::pure(g, g) || !hopf.counit_of(g).is_one() {
        return Err(HopfError::NotGrouplike);
    }
    if hopf.comult(h) != Tensor2::pure(h, h) || !hopf.counit_of(h).is_one() {
        return Err(HopfError::NotGrouplike);
    }
    let n = hopf.dim();
    // Column v contributes Δ(e_v) − e_v⊗g − h⊗e_v to row (a, b).
    let mut rows: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    let mut push = |a: usize, b: usize, v: usize, c: Scalar| {
        if !c.is_zero() {
            rows.entry((a, b)).or_default().push((v, c));
        }
    };
    for v in 0..n {
        for (a, b, c) in &hopf.comult[v] {
            push(*a, *b, v, c.clone());
        }
        for (b, gb) in g.iter().enumerate() {
            push(v, b, v, -gb);
        }
        for (a, ha) in h.iter().enumerate() {
            push(a, v, v, -ha);
        }
    }
    let mut dense_rows = Vec::new();
    for (_, entries) in rows {
        let mut row = vec![Scalar::zero(); n];
        for (v, c) in entries {
            row[v] += &c;
        }
        if row.iter().any(|x| !x.is_zero()) {
            dense_rows.push(row);
        }
    }
    if dense_rows.is_empty() {
        return Ok((0..n).map(|i| hopf.basis_vec(i)).collect());
    }
    Ok(Matrix::from_rows(dense_rows).nullspace())
}

/// Interchange format for [`FinDimHopf`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HopfJson {
    pub schema: String,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub counit: Vec<Scalar>,
    /// `[i, j, k, c]`: `e_i·e_j` has coefficient `c` at `e_k`.
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    /// `[i, j, k, c]`: `Δ(e_i)` has coefficient `c` at `e_j⊗e_k`.
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    /// `[i, j, c]`: `S(e_j)` has coefficient `c` at `e_i`.
    pub antipode: Vec<(usize, usize, Scalar)>,
}

impl FinDimHopf {
    pub fn to_json(&self) -> HopfJson {
        HopfJson {
            schema: SCHEMA_VERSION.to_string(),
            name: self.name.clone(),
            dim: self.dim(),
            basis: self.basis.clone(),
            unit: self.unit.clone(),
            counit: self.counit.clone(),
            mult: self.mult_entries(),
            comult: self.comult_entries(),
            antipode: self.antipode.nonzero_entries(),
        }
    }

    pub fn from_json(j: &HopfJson) -> Result<FinDimHopf, HopfError> {
        if j.schema != SCHEMA_VERSION {
            return Err(HopfError::Schema(format!("unsupported schema `{}`", j.schema)));
        }
        if j.basis.len() != j.dim {
            return Err(HopfError::Schema("basis length differs from dim".into()));
        }
        let mut s = Matrix::zeros(j.dim, j.dim);
        for (r, c, v) in &j.antipode {
            if *r >= j.dim || *c >= j.dim {
                return Err(HopfError::MalformedTensor(format!("antipode index ({r},{c}) out of range")));
            }
            s[(*r, *c)] = v.clone();
        }
        FinDimHopf::from_entries(j.name.clone(), j.basis.clone(), j.unit.clone(), j.counit.clone(), &j.mult, &j.comult, s)
    }
}

impl Matrix {
    /// Like [`Matrix::from_rows`] but tolerates an empty list.
    pub fn from_rows_or_empty(rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        if rows.is_empty() {
            Matrix::zeros(0, cols)
        } else {
            Matrix::from_rows(rows)
        }
    }
}

/// Group algebra `K[Z_m]` with basis `g^0, …, g^{m−1}`.
pub fn cyclic_group_algebra(m: usize) -> FinDimHopf {
    let basis = (0..m).map(|i| format!("g{i}")).collect();
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    let mut s = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            mult.push((i, j, (i + j) % m, Scalar::one()));
        }
        comult.push((i, i, i, Scalar::one()));
        s[((m - i) % m, i)] = Scalar::one();
    }
    let mut unit = vec![Scalar::zero(); m];
    unit[0] = Scalar::one();
    let counit = vec![Scalar::one(); m];
    FinDimHopf::from_entries(format!("K[Z{m}]"), basis, unit, counit, &mult, &comult, s).expect("well-formed")
}

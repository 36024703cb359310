//! Nichols algebras of braided vector spaces, degree by degree.
//!
//! Everything acts on `V^{⊗n}` in the word basis: index
//! `Σ w_k d^{n−1−k}` for the word `w₀ w₁ … w_{n−1}`. The braiding is applied
//! sparsely on vectors, so no `d^n × d^n` braid-group matrices are ever
//! formed; only the quantum symmetrizer itself is stored densely.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::hopfcore::Elem;
use crate::linalg::{in_span, rank_of, same_span, Matrix};
use crate::scalars::{xi_power, Scalar};
use crate::catalog::DoubleAlgebra;
use crate::repmod::{character, dual_module, is_isomorphic, p_j, two_dim_module, v_ij, IsoResult, ModuleRep, TwoDimKind};
use crate::ydcat::{module_braiding, BraidedSpace, YdError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NicholsError {
    #[error("rewriting system is not confluent: overlap `{overlap}` reduces to two different normal forms")]
    NonConfluent { overlap: String },
    #[error("presented dimension {presented} differs from the symmetrizer total {symmetrizer}")]
    DimensionMismatch { presented: usize, symmetrizer: usize },
    #[error("presented algebra has normal forms beyond degree {0}; not finite within the search bound")]
    Unbounded(usize),
    #[error("tensor space of dimension {0} exceeds the configured budget {1}")]
    Budget(usize, usize),
    #[error("no printed presentation for `{0}`")]
    UnknownPresentation(String),
}

/// Largest `d^n` for which `S_n` is formed (dense `d^n × d^n`, exact).
pub const DEFAULT_TENSOR_BUDGET: usize = 1024;

/// Default top degree of a Nichols computation.
pub const DEFAULT_MAXDEG: usize = 6;

/// Sparse braiding: column `r·d + s` lists `(p·d + k, coefficient)`.
#[derive(Clone, Debug)]
pub struct SparseBraiding {
    pub dim: usize,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl SparseBraiding {
    pub fn new(b: &BraidedSpace) -> SparseBraiding {
        let d2 = b.dim * b.dim;
        let cols = (0..d2)
            .map(|c| (0..d2).filter_map(|r| {
                let v = &b.braiding[(r, c)];
                (!v.is_zero()).then(|| (r, v.clone()))
            }).collect())
            .collect();
        SparseBraiding { dim: b.dim, cols }
    }

    /// Apply `c` at positions `(q, q+1)` of a vector in `V^{⊗n}`.
    pub fn apply_at(&self, n: usize, q: usize, v: &[Scalar]) -> Elem {
        let d = self.dim;
        let high = d.pow((n - q - 2) as u32);
        let block = d * d * high;
        let mut out = vec![Scalar::zero(); v.len()];
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let prefix = idx / block;
            let pair = (idx / high) % (d * d);
            let suffix = idx % high;
            for (np, bc) in &self.cols[pair] {
                out[prefix * block + np * high + suffix] += &(c * bc);
            }
        }
        out
    }

    /// Apply the braid lift of a word `[i₁, …, i_k]`, i.e. `c_{i₁} ⋯ c_{i_k}` (rightmost first).
    pub fn apply_word(&self, n: usize, word: &[usize], v: &[Scalar]) -> Elem {
        let mut cur = v.to_vec();
        for &q in word.iter().rev() {
            cur = self.apply_at(n, q, &cur);
        }
        cur
    }
}

fn unit_vec(len: usize, i: usize) -> Elem {
    let mut v = vec![Scalar::zero(); len];
    v[i] = Scalar::one();
    v
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

/// Reduced word of a permutation (one-line notation) by bubble sort; `leftmost`
/// chooses which inversion to remove first, giving two generally different
/// reduced words.
pub fn reduced_word(perm: &[usize], leftmost: bool) -> Vec<usize> {
    let mut p = perm.to_vec();
    let mut swaps = Vec::new();
    loop {
        let n = p.len();
        let pos = if leftmost {
            (0..n.saturating_sub(1)).find(|&q| p[q] > p[q + 1])
        } else {
            (0..n.saturating_sub(1)).rev().find(|&q| p[q] > p[q + 1])
        };
        match pos {
            Some(q) => {
                p.swap(q, q + 1);
                swaps.push(q);
            }
            None => break,
        }
    }
    swaps.reverse();
    swaps
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=k {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Matrix of the braid lift of a permutation on `V^{⊗n}`.
pub fn braid_lift(c: &SparseBraiding, n: usize, perm: &[usize]) -> Matrix {
    let len = c.dim.pow(n as u32);
    let w = reduced_word(perm, true);
    let cols: Vec<Elem> = (0..len).map(|i| c.apply_word(n, &w, &unit_vec(len, i))).collect();
    Matrix::from_cols(len, &cols)
}

/// Whether the two bubble-sort reduced words of every permutation of `n`
/// letters lift to the same operator.
pub fn lift_well_defined(c: &SparseBraiding, n: usize) -> bool {
    let len = c.dim.pow(n as u32);
    permutations(n).par_iter().all(|p| {
        let w1 = reduced_word(p, true);
        let w2 = reduced_word(p, false);
        (0..len).all(|i| {
            let e = unit_vec(len, i);
            c.apply_word(n, &w1, &e) == c.apply_word(n, &w2, &e)
        })
    })
}

/// `S_n = Σ_{w ∈ S_n} lift(w)` by direct summation (the oracle for the factorized form).
pub fn symmetrizer_bruteforce(c: &SparseBraiding, n: usize) -> Matrix {
    let len = c.dim.pow(n as u32);
    let words: Vec<Vec<usize>> = permutations(n).iter().map(|p| reduced_word(p, true)).collect();
    let cols: Vec<Elem> = (0..len)
        .into_par_iter()
        .map(|i| {
            let e = unit_vec(len, i);
            let mut acc = vec![Scalar::zero(); len];
            for w in &words {
                add_into(&mut acc, &c.apply_word(n, w, &e));
            }
            acc
        })
        .collect();
    Matrix::from_cols(len, &cols)
}

/// `T_n v = Σ_p (move the letter at position p to the end) v`.
pub fn insertion_sum(c: &SparseBraiding, n: usize, v: &[Scalar]) -> Elem {
    let mut acc = v.to_vec();
    for p in 0..n.saturating_sub(1) {
        let mut cur = v.to_vec();
        for q in p..n - 1 {
            cur = c.apply_at(n, q, &cur);
        }
        add_into(&mut acc, &cur);
    }
    acc
}

/// `(S ⊗ id_{V^{⊗k}}) v` for `S` acting on the first factor.
fn apply_left(s: &Matrix, tail: usize, v: &[Scalar]) -> Elem {
    let m = s.rows();
    let mut out = vec![Scalar::zero(); v.len()];
    for x2 in 0..m {
        for y in 0..tail {
            let w = &v[x2 * tail + y];
            if w.is_zero() {
                continue;
            }
            for x in 0..m {
                let sv = &s[(x, x2)];
                if !sv.is_zero() {
                    out[x * tail + y] += &(sv * w);
                }
            }
        }
    }
    out
}

/// `(A ⊗ B) v` with `A` on the first `dim A` factor and `B` on the rest.
fn apply_kron(a: &Matrix, b: &Matrix, v: &[Scalar]) -> Elem {
    let left = apply_left(a, b.rows(), v);
    let mut out = vec![Scalar::zero(); v.len()];
    let tail = b.rows();
    for x in 0..a.rows() {
        let block = &left[x * tail..(x + 1) * tail];
        let bv = b.mul_vec(block);
        out[x * tail..(x + 1) * tail].clone_from_slice(&bv);
    }
    out
}

/// Quantum symmetrizers `S_0, …, S_maxdeg` via `S_n = (S_{n−1} ⊗ id) T_n`,
/// with their ranks and kernels.
#[derive(Clone, Debug)]
pub struct SymmetrizerStack {
    pub name: String,
    pub braiding: SparseBraiding,
    pub matrices: Vec<Matrix>,
    pub ranks: Vec<usize>,
    pub kernels: Vec<Vec<Elem>>,
}

impl SymmetrizerStack {
    /// Degrees whose tensor space exceeds `max_tensor_dim` are not computed.
    pub fn new(b: &BraidedSpace, maxdeg: usize, max_tensor_dim: usize) -> SymmetrizerStack {
        let c = SparseBraiding::new(b);
        let d = c.dim;
        let mut matrices = vec![Matrix::identity(1)];
        let mut ranks = vec![1];
        let mut kernels = vec![vec![]];
        for n in 1..=maxdeg {
            let len = d.pow(n as u32);
            if len > max_tensor_dim {
                break;
            }
            let prev = &matrices[n - 1];
            let cols: Vec<Elem> = (0..len)
                .into_par_iter()
                .map(|i| {
                    let t = insertion_sum(&c, n, &unit_vec(len, i));
                    apply_left(prev, d, &t)
                })
                .collect();
            let s = Matrix::from_cols(len, &cols);
            let kernel = s.nullspace();
            ranks.push(len - kernel.len());
            kernels.push(kernel);
            matrices.push(s);
        }
        SymmetrizerStack { name: b.name.clone(), braiding: c, matrices, ranks, kernels }
    }

    pub fn dim(&self) -> usize {
        self.braiding.dim
    }

    /// Highest degree actually computed.
    pub fn top_degree(&self) -> usize {
        self.matrices.len() - 1
    }

    pub fn symmetrizer(&self, n: usize) -> &Matrix {
        &self.matrices[n]
    }

    pub fn kernel(&self, n: usize) -> &[Elem] {
        &self.kernels[n]
    }

    /// Whether `x ∈ V^{⊗n}` vanishes in the Nichols algebra.
    pub fn is_relation(&self, x: &[Scalar]) -> bool {
        self.is_relation_of_degree(degree_of(self.dim(), x.len()), x)
    }

    /// As [`is_relation`](Self::is_relation) with the degree given (needed when `dim V = 1`).
    pub fn is_relation_of_degree(&self, n: usize, x: &[Scalar]) -> bool {
        self.matrices[n].mul_vec(x).iter().all(|c| c.is_zero())
    }

    /// Span in degree `n` of the two-sided ideal generated by the kernels of
    /// degrees `< n`.
    pub fn lower_ideal(&self, n: usize) -> Vec<Elem> {
        let d = self.dim();
        let len = d.pow(n as u32);
        let mut gens = Vec::new();
        for m in 2..n {
            for k in &self.kernels[m] {
                let rest = n - m;
                for left in 0..=rest {
                    let right = rest - left;
                    let (lp, rp) = (d.pow(left as u32), d.pow(right as u32));
                    let km = k.len();
                    for u in 0..lp {
                        for w in 0..rp {
                            let mut v = vec![Scalar::zero(); len];
                            for (i, c) in k.iter().enumerate() {
                                if !c.is_zero() {
                                    v[(u * km + i) * rp + w] = c.clone();
                                }
                            }
                            gens.push(v);
                        }
                    }
                }
            }
        }
        if gens.is_empty() {
            return gens;
        }
        Matrix::from_rows(gens).row_space()
    }

    /// A basis of `ker S_n` modulo the ideal generated in lower degrees:
    /// the relations that are new in degree `n`.
    pub fn new_relations(&self, n: usize) -> Vec<Elem> {
        let mut span = self.lower_ideal(n);
        let mut out = Vec::new();
        for k in &self.kernels[n] {
            if !in_span(&span, k) {
                span.push(k.clone());
                out.push(k.clone());
            }
        }
        out
    }

    /// `x` lies in `ker S_n` and is not generated by lower-degree relations.
    pub fn is_new_relation(&self, x: &[Scalar]) -> bool {
        let n = degree_of(self.dim(), x.len());
        self.is_relation(x) && !in_span(&self.lower_ideal(n), x)
    }

    /// Braided `(i, j)` coproduct component, `i + j = n`.
    pub fn coproduct_component(&self, x: &[Scalar], i: usize) -> Elem {
        coproduct_component(&self.braiding, x, degree_of(self.dim(), x.len()), i)
    }

    /// `x` is primitive in the quotient: every middle component of `Δ(x)`
    /// vanishes in `B^i ⊗ B^j`, i.e. `(S_i ⊗ S_j) Δ_{i,j}(x) = 0`.
    pub fn is_primitive_mod_relations(&self, x: &[Scalar]) -> bool {
        let n = degree_of(self.dim(), x.len());
        (1..n).all(|i| {
            let comp = self.coproduct_component(x, i);
            apply_kron(&self.matrices[i], &self.matrices[n - i], &comp).iter().all(|c| c.is_zero())
        })
    }
}

fn degree_of(d: usize, len: usize) -> usize {
    let mut n = 0;
    let mut l = 1;
    while l < len {
        l *= d;
        n += 1;
    }
    assert_eq!(l, len, "vector length must be a power of dim V");
    n
}

/// `Δ_{i,j}(x)`: the sum over `(i, j)`-unshuffles, each lifted by moving the
/// chosen `j` letters (rightmost first) to the end.
pub fn coproduct_component(c: &SparseBraiding, x: &[Scalar], n: usize, i: usize) -> Elem {
    let j = n - i;
    let mut acc = vec![Scalar::zero(); x.len()];
    for subset in subsets(n, j) {
        let mut cur = x.to_vec();
        for (rank, &pos) in subset.iter().rev().enumerate() {
            let target = n - 1 - rank;
            for q in pos..target {
                cur = c.apply_at(n, q, &cur);
            }
        }
        add_into(&mut acc, &cur);
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            rec(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// First candidate `w` with `c(w ⊗ w) = w ⊗ w`.
pub fn eigenone_witness(b: &BraidedSpace, candidates: &[Elem]) -> Option<usize> {
    candidates.iter().position(|w| {
        let ww: Elem = w.iter().flat_map(|x| w.iter().map(move |y| x * y)).collect();
        b.braiding.mul_vec(&ww) == ww
    })
}

/// Standard basis vectors of `V` as witness candidates.
pub fn basis_candidates(d: usize) -> Vec<Elem> {
    (0..d).map(|i| unit_vec(d, i)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Verdict {
    Finite { dim: usize },
    /// Certified by `c(w ⊗ w) = w ⊗ w` for the basis vector `witness`.
    Infinite { witness: usize },
    Undecided { maxdeg: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct NicholsReport {
    pub module: String,
    pub dim: usize,
    pub ranks: Vec<usize>,
    pub computed_through: usize,
    pub verdict: Verdict,
    pub palindromic: Option<bool>,
    /// Kernel bases by degree (coordinates in the word basis), only when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernels: Option<BTreeMap<usize, Vec<Elem>>>,
}

/// Ranks up to `maxdeg`, verdict, and the Poincaré-duality check.
pub fn nichols_report(b: &BraidedSpace, maxdeg: usize, max_tensor_dim: usize, with_kernels: bool) -> NicholsReport {
    let stack = SymmetrizerStack::new(b, maxdeg, max_tensor_dim);
    report_from_stack(b, &stack, maxdeg, with_kernels)
}

pub fn report_from_stack(b: &BraidedSpace, stack: &SymmetrizerStack, maxdeg: usize, with_kernels: bool) -> NicholsReport {
    let ranks = stack.ranks.clone();
    let first_zero = ranks.iter().position(|&r| r == 0);
    let verdict = match first_zero {
        // a zero symmetrizer forces every later one to vanish, so the trailing check is structural
        Some(z) if ranks[z..].iter().all(|&r| r == 0) => Verdict::Finite { dim: ranks.iter().sum() },
        _ => match eigenone_witness(b, &basis_candidates(b.dim)) {
            Some(w) => Verdict::Infinite { witness: w },
            None => Verdict::Undecided { maxdeg },
        },
    };
    let palindromic = match (&verdict, first_zero) {
        (Verdict::Finite { .. }, Some(z)) => {
            let top = &ranks[..z];
            Some(top.iter().eq(top.iter().rev()))
        }
        _ => None,
    };
    let kernels = with_kernels.then(|| stack.kernels.iter().enumerate().skip(1).map(|(n, k)| (n, k.clone())).collect());
    NicholsReport {
        module: b.name.clone(),
        dim: b.dim,
        computed_through: stack.top_degree(),
        ranks,
        verdict,
        palindromic,
        kernels,
    }
}

/// `x ∈ V^{⊗n}` as a noncommutative polynomial in `v1, …, vd`.
pub fn render_tensor(x: &[Scalar], d: usize, n: usize) -> String {
    let terms: Vec<String> = x
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let w: String = index_word(i, d, n).iter().map(|g| format!("v{}", g + 1)).collect();
            let w = if w.is_empty() { "1".to_string() } else { w };
            if c.is_one() {
                w
            } else {
                format!("({c}){w}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Noncommutative polynomial: word → coefficient.
pub type Poly = BTreeMap<Vec<usize>, Scalar>;

/// Flatten a homogeneous polynomial of degree `n` into `V^{⊗n}` coordinates.
pub fn poly_to_tensor(p: &Poly, d: usize) -> Elem {
    let n = p.keys().next().map(|w| w.len()).unwrap_or(0);
    let mut v = vec![Scalar::zero(); d.pow(n as u32)];
    for (w, c) in p {
        assert_eq!(w.len(), n, "homogeneous polynomial expected");
        v[word_index(w, d)] += c;
    }
    v
}

pub fn word_index(w: &[usize], d: usize) -> usize {
    w.iter().fold(0, |acc, &x| acc * d + x)
}

pub fn index_word(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut w = vec![0; n];
    for k in (0..n).rev() {
        w[k] = idx % d;
        idx /= d;
    }
    w
}

/// Build a polynomial from `(word, coefficient)` terms.
pub fn poly(terms: &[(&[usize], Scalar)]) -> Poly {
    let mut p = Poly::new();
    for (w, c) in terms {
        *p.entry(w.to_vec()).or_default() += c;
    }
    p.retain(|_, c| !c.is_zero());
    p
}

/// Rewriting rule `lhs → rhs`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Vec<usize>,
    pub rhs: Poly,
}

/// A graded algebra `K⟨generators⟩ / (relations)` with a degree-lexicographic
/// rewriting system.
#[derive(Clone, Debug)]
pub struct PresentedBraidedAlgebra {
    pub name: String,
    pub generators: Vec<String>,
    /// `weight[g]`: position of generator `g` in the monomial order (smaller = smaller).
    pub weight: Vec<usize>,
    pub relations: Vec<(String, Poly)>,
    pub rules: Vec<Rule>,
}

impl PresentedBraidedAlgebra {
    pub fn new(name: impl Into<String>, generators: &[&str], weight: Vec<usize>, relations: Vec<(String, Poly)>) -> PresentedBraidedAlgebra {
        let mut alg = PresentedBraidedAlgebra {
            name: name.into(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            weight,
            relations: relations.clone(),
            rules: Vec::new(),
        };
        for (_, p) in &relations {
            let lead = p.keys().max_by(|a, b| alg.cmp_words(a, b)).expect("nonzero relation").clone();
            let lc = p[&lead].clone();
            let inv = lc.inv().expect("nonzero");
            let rhs: Poly = p.iter().filter(|(w, _)| **w != lead).map(|(w, c)| (w.clone(), -&(c * &inv))).collect();
            alg.rules.push(Rule { lhs: lead, rhs });
        }
        alg
    }

    /// Degree-lexicographic comparison with the generator weights.
    pub fn cmp_words(&self, a: &[usize], b: &[usize]) -> std::cmp::Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            let wa: Vec<usize> = a.iter().map(|&g| self.weight[g]).collect();
            let wb: Vec<usize> = b.iter().map(|&g| self.weight[g]).collect();
            wa.cmp(&wb)
        })
    }

    fn find_rule(&self, w: &[usize]) -> Option<(usize, usize)> {
        for (ri, r) in self.rules.iter().enumerate() {
            let l = r.lhs.len();
            if l <= w.len() {
                if let Some(pos) = (0..=w.len() - l).find(|&p| w[p..p + l] == r.lhs[..]) {
                    return Some((ri, pos));
                }
            }
        }
        None
    }

    /// Normal form of a polynomial.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut todo = p.clone();
        let mut done = Poly::new();
        while let Some((w, c)) = todo.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find_rule(&w) {
                None => {
                    *done.entry(w).or_default() += &c;
                }
                Some((ri, pos)) => {
                    let r = &self.rules[ri];
                    for (rw, rc) in &r.rhs {
                        let mut nw = w[..pos].to_vec();
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(&w[pos + r.lhs.len()..]);
                        *todo.entry(nw).or_default() += &(&c * rc);
                    }
                }
            }
        }
        done.retain(|_, c| !c.is_zero());
        done
    }

    pub fn reduce_word(&self, w: &[usize]) -> Poly {
        let mut p = Poly::new();
        p.insert(w.to_vec(), Scalar::one());
        self.reduce(&p)
    }

    fn one_step(&self, w: &[usize], ri: usize, pos: usize) -> Poly {
        let r = &self.rules[ri];
        let mut out = Poly::new();
        for (rw, rc) in &r.rhs {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + r.lhs.len()..]);
            *out.entry(nw).or_default() += rc;
        }
        out
    }

    /// Resolve every overlap and inclusion ambiguity.
    pub fn check_confluence(&self) -> Result<(), NicholsError> {
        let render = |w: &[usize]| w.iter().map(|&g| self.generators[g].clone()).collect::<Vec<_>>().join("");
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // overlaps: suffix of l1 = prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut w = l1.clone();
                        w.extend_from_slice(&l2[k..]);
                        let a = self.reduce(&self.one_step(&w, i, 0));
                        let b = self.reduce(&self.one_step(&w, j, l1.len() - k));
                        if a != b {
                            return Err(NicholsError::NonConfluent { overlap: render(&w) });
                        }
                    }
                }
                // inclusions
                if i != j && l2.len() <= l1.len() {
                    for pos in 0..=l1.len() - l2.len() {
                        if l1[pos..pos + l2.len()] == l2[..] {
                            let a = self.reduce(&self.one_step(l1, i, 0));
                            let b = self.reduce(&self.one_step(l1, j, pos));
                            if a != b {
                                return Err(NicholsError::NonConfluent { overlap: render(l1) });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Normal-form words of degree `n`, sorted by the monomial order.
    pub fn normal_words(&self, n: usize) -> Vec<Vec<usize>> {
        let g = self.generators.len();
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &words {
                for x in 0..g {
                    let mut nw = w.clone();
                    nw.push(x);
                    // it suffices to test suffixes: prefixes were already normal
                    if !self.rules.iter().any(|r| nw.ends_with(&r.lhs)) {
                        next.push(nw);
                    }
                }
            }
            words = next;
        }
        words.sort_by(|a, b| self.cmp_words(a, b));
        words
    }

    /// Monomial basis (degree-major) and Hilbert numbers; errors if normal
    /// forms persist up to `bound`.
    pub fn basis(&self, bound: usize) -> Result<(Vec<Vec<usize>>, Vec<usize>), NicholsError> {
        let mut all = Vec::new();
        let mut hilbert = Vec::new();
        for n in 0..=bound {
            let w = self.normal_words(n);
            if w.is_empty() {
                return Ok((all, hilbert));
            }
            hilbert.push(w.len());
            all.extend(w);
        }
        Err(NicholsError::Unbounded(bound))
    }

    pub fn render_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&g| self.generators[g].clone()).collect::<Vec<_>>().join("")
    }
}

/// Confluence, finiteness, every relation in the symmetrizer kernel, and the
/// presented Hilbert series equal to the symmetrizer ranks.
pub fn presented_basis(p: &PresentedBraidedAlgebra, stack: &SymmetrizerStack) -> Result<(Vec<Vec<usize>>, Vec<usize>), NicholsError> {
    p.check_confluence()?;
    let (basis, hilbert) = p.basis(32)?;
    let total: usize = stack.ranks.iter().sum();
    let presented: usize = hilbert.iter().sum();
    let top = stack.top_degree();
    let mut agree = hilbert.len() <= top + 1;
    for n in 0..=top {
        agree &= hilbert.get(n).copied().unwrap_or(0) == stack.ranks[n];
    }
    if !agree {
        return Err(NicholsError::DimensionMismatch { presented, symmetrizer: total });
    }
    for (_, r) in &p.relations {
        let n = r.keys().next().map_or(0, |w| w.len());
        if n > top || !stack.is_relation_of_degree(n, &poly_to_tensor(r, stack.dim())) {
            return Err(NicholsError::DimensionMismatch { presented, symmetrizer: total });
        }
    }
    Ok((basis, hilbert))
}

/// The printed presentations of the finite Nichols algebras, keyed by module
/// name (`chi1`, `chi3`, `chi5`, `V31`, `V35`, `V22`, `V24`).
pub fn printed_presentation(name: &str) -> Result<PresentedBraidedAlgebra, NicholsError> {
    let one = Scalar::one;
    let (v1, v2) = (0usize, 1usize);
    let rel = |s: &str, terms: &[(&[usize], Scalar)]| (s.to_string(), poly(terms));
    // v₂ < v₁ puts {v₂^j v₁^i} in normal form; v₁ < v₂ gives {v₁^i v₂^j}.
    let two_low = vec![1, 0];
    let one_low = vec![0, 1];
    Ok(match name {
        "chi1" | "chi3" | "chi5" => PresentedBraidedAlgebra::new(name, &["v"], vec![0], vec![rel("v^2", &[(&[0, 0], one())])]),
        "V31" | "V35" => {
            let q = if name == "V31" { xi_power(2) } else { xi_power(4) };
            PresentedBraidedAlgebra::new(
                name,
                &["v1", "v2"],
                two_low,
                vec![
                    rel("v1^2", &[(&[v1, v1], one())]),
                    rel("v1v2 - q v2v1", &[(&[v1, v2], one()), (&[v2, v1], -q)]),
                    rel("v2^3", &[(&[v2, v2, v2], one())]),
                ],
            )
        }
        "V22" => PresentedBraidedAlgebra::new(
            name,
            &["v1", "v2"],
            one_low,
            vec![
                rel("v1^2 - ξ^2 v2^2", &[(&[v1, v1], one()), (&[v2, v2], -xi_power(2))]),
                rel("v1v2 - v2v1", &[(&[v1, v2], one()), (&[v2, v1], -one())]),
                rel("v1^3", &[(&[v1, v1, v1], one())]),
            ],
        ),
        "V24" => PresentedBraidedAlgebra::new(
            name,
            &["v1", "v2"],
            one_low,
            vec![
                rel("v2^2 + ξ v1^2", &[(&[v2, v2], one()), (&[v1, v1], Scalar::xi())]),
                rel("v1v2 - v2v1", &[(&[v1, v2], one()), (&[v2, v1], -one())]),
                rel("v1^3", &[(&[v1, v1, v1], one())]),
            ],
        ),
        other => return Err(NicholsError::UnknownPresentation(other.to_string())),
    })
}

/// The printed degree-2 relations as tensors (for span comparison with `ker S₂`).
pub fn printed_quadratic_relations(name: &str) -> Result<Vec<Elem>, NicholsError> {
    let p = printed_presentation(name)?;
    let d = p.generators.len();
    Ok(p.relations.iter().filter(|(_, r)| r.keys().all(|w| w.len() == 2)).map(|(_, r)| poly_to_tensor(r, d)).collect())
}

/// The printed cubic relation (`v₂³` or `v₁³`) as a tensor.
pub fn printed_cubic_relation(name: &str) -> Result<Option<Elem>, NicholsError> {
    let p = printed_presentation(name)?;
    let d = p.generators.len();
    Ok(p.relations.iter().find(|(_, r)| r.keys().all(|w| w.len() == 3)).map(|(_, r)| poly_to_tensor(r, d)))
}

/// Whether the printed quadratic relations span exactly `ker S₂`.
pub fn quadratic_relations_match(name: &str, stack: &SymmetrizerStack) -> Result<bool, NicholsError> {
    let rels = printed_quadratic_relations(name)?;
    let d = stack.dim();
    Ok(same_span(&rels, stack.kernel(2), d * d) && rank_of(&rels, d * d) == stack.kernel(2).len())
}

/// The twelve `(i, j)` for which `v₁` itself is an eigenvalue-1 witness.
pub const LISTED_WITNESS_PAIRS: [(i64, i64); 12] =
    [(1, 0), (4, 3), (3, 0), (2, 3), (5, 0), (0, 3), (0, 1), (0, 2), (3, 2), (0, 4), (3, 4), (0, 5)];

/// `(listed, partner)` with `V_listed* ≅ V_partner`; the partner's Nichols
/// algebra is the graded dual of the listed one, hence also infinite.
pub const DUAL_PARTNERS: [((i64, i64), (i64, i64)); 6] =
    [((0, 1), (5, 2)), ((0, 2), (5, 1)), ((3, 2), (2, 1)), ((0, 4), (5, 5)), ((3, 4), (2, 5)), ((0, 5), (5, 4))];

/// Simple pairs (and their duals) for which no witness is known.
pub const UNDECIDED_PAIRS: [((i64, i64), (i64, i64)); 4] = [((1, 1), (4, 2)), ((1, 4), (4, 5)), ((4, 4), (1, 5)), ((4, 1), (1, 2))];

#[derive(Clone, Debug, Serialize)]
pub struct WitnessEntry {
    pub module: String,
    /// Index of the basis vector `w` with `c(w ⊗ w) = w ⊗ w`.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualConfirmation {
    pub listed: String,
    pub partner: String,
    /// `V_listed* ≅ V_partner` with an exact isomorphism.
    pub dual_isomorphic: bool,
    pub listed_ranks: Vec<usize>,
    pub partner_ranks: Vec<usize>,
}

impl DualConfirmation {
    pub fn confirmed(&self) -> bool {
        self.dual_isomorphic && self.listed_ranks == self.partner_ranks
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleScan {
    pub listed: Vec<WitnessEntry>,
    pub even_characters: Vec<WitnessEntry>,
    pub projectives: Vec<WitnessEntry>,
    pub duals: Vec<DualConfirmation>,
    /// Ranks of the undecided modules up to the scan degree; no verdict is claimed.
    pub undecided: Vec<NicholsReport>,
}

impl SimpleScan {
    pub fn all_witnessed(&self) -> bool {
        self.listed.iter().chain(&self.even_characters).chain(&self.projectives).all(|w| w.witness.is_some())
            && self.duals.iter().all(DualConfirmation::confirmed)
    }
}

fn witness_entry(m: &ModuleRep) -> Result<WitnessEntry, YdError> {
    let b = module_braiding(m)?;
    Ok(WitnessEntry { module: m.name.clone(), witness: eigenone_witness(&b, &basis_candidates(b.dim)) })
}

fn ranks_of(m: &ModuleRep, maxdeg: usize) -> Result<Vec<usize>, YdError> {
    let b = module_braiding(m)?;
    Ok(SymmetrizerStack::new(&b, maxdeg, DEFAULT_TENSOR_BUDGET).ranks)
}

/// Infinitude certificates among simples and projectives, and the duality
/// confirmations; `maxdeg` bounds the rank comparisons.
pub fn simple_witness_scan(d: &'static DoubleAlgebra, maxdeg: usize) -> Result<SimpleScan, YdError> {
    let listed = LISTED_WITNESS_PAIRS
        .par_iter()
        .map(|&(i, j)| witness_entry(&v_ij(d, i, j)?))
        .collect::<Result<Vec<_>, _>>()?;
    let even_characters = [0, 2, 4].iter().map(|&k| witness_entry(&character(d, k))).collect::<Result<Vec<_>, _>>()?;
    let projectives = (0..6).into_par_iter().map(|j| witness_entry(&p_j(d, j))).collect::<Result<Vec<_>, _>>()?;
    let duals = DUAL_PARTNERS
        .par_iter()
        .map(|&((i, j), (k, l))| {
            let listed = v_ij(d, i, j)?;
            let partner = v_ij(d, k, l)?;
            Ok(DualConfirmation {
                listed: listed.name.clone(),
                partner: partner.name.clone(),
                dual_isomorphic: matches!(is_isomorphic(&dual_module(&listed), &partner), IsoResult::Yes(_)),
                listed_ranks: ranks_of(&listed, maxdeg)?,
                partner_ranks: ranks_of(&partner, maxdeg)?,
            })
        })
        .collect::<Result<Vec<_>, YdError>>()?;
    let undecided = UNDECIDED_PAIRS
        .iter()
        .flat_map(|&(p, q)| [p, q])
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(i, j)| {
            let b = module_braiding(&v_ij(d, i, j)?)?;
            Ok(nichols_report(&b, maxdeg, DEFAULT_TENSOR_BUDGET, false))
        })
        .collect::<Result<Vec<_>, YdError>>()?;
    Ok(SimpleScan { listed, even_characters, projectives, duals, undecided })
}

/// Where an indecomposable's eigenvalue-1 witness lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessLine {
    /// The socle line, a braided subspace.
    Socle,
    /// The top line, a braided quotient.
    Top,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndecomposableWitness {
    pub module: String,
    /// The matrices satisfy every defining relation of the double.
    pub is_module: bool,
    pub witness: Option<WitnessLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// For each two-dimensional non-simple indecomposable (upper triangular,
/// socle `e₀`, top `e₁`): a Nichols algebra of a subobject or quotient is a
/// subquotient of the whole, so a `+1` self-braiding on either line makes
/// the whole Nichols algebra infinite.
pub fn indecomposable_infinite_scan(d: &'static DoubleAlgebra) -> Vec<IndecomposableWitness> {
    let mut jobs = Vec::new();
    for kind in [TwoDimKind::Plus, TwoDimKind::Minus, TwoDimKind::PlusMinus] {
        for l in 0..6 {
            jobs.push((l, kind));
        }
    }
    jobs.par_iter()
        .map(|&(l, kind)| {
            let m = two_dim_module(d, l, kind);
            let name = m.name.clone();
            if let Err(e) = m.check_relations() {
                return IndecomposableWitness { module: name, is_module: false, witness: None, failure: Some(e.to_string()) };
            }
            let b = match module_braiding(&m) {
                Ok(b) => b,
                Err(e) => return IndecomposableWitness { module: name, is_module: true, witness: None, failure: Some(e.to_string()) },
            };
            let one = Scalar::one();
            let socle = eigenone_witness(&b, &basis_candidates(2)[..1]).is_some();
            // c(e₁⊗e₁) modulo everything involving e₀
            let top = b.braiding[(3, 3)] == one;
            let witness = if socle {
                Some(WitnessLine::Socle)
            } else if top {
                Some(WitnessLine::Top)
            } else {
                None
            };
            IndecomposableWitness { module: name, is_module: true, witness, failure: None }
        })
        .collect()
}

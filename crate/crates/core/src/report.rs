//! The acceptance suite: eleven named criteria, each recomputed from scratch
//! and summarized as a pass/fail verdict with a machine-readable payload.
//!
//! Every criterion reports what was *computed*; a criterion whose expected
//! statement disagrees with the computation fails and says why.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::bosonization::{biproduct_report, BIPRODUCT_MODULES};
use crate::catalog::{build_c, build_c_dual, build_d, build_pointed, double, phi_iso, Pointed};
use crate::hopfcore::{grouplikes, verify_hopf, FinDimHopf, Level};
use crate::nichols::{
    indecomposable_infinite_scan, lift_well_defined, nichols_report, presented_basis, printed_cubic_relation,
    printed_presentation, quadratic_relations_match, simple_witness_scan, symmetrizer_bruteforce, SparseBraiding,
    SymmetrizerStack, Verdict, DEFAULT_MAXDEG, DEFAULT_TENSOR_BUDGET,
};
use crate::repmod::{
    hom_space, is_simple, module_by_name, one_dim_solutions, p_j, quiver_from_table, simples, socle_top, ext_table,
    tensor_dual_laws, RepType,
};
use crate::scalars::{NamedConstants, Scalar, ThetaSign};
use crate::ydcat::{module_braiding, verify_paper_tables};

pub const REPORT_SCHEMA: &str = "hopf12.report.v1";

/// Knobs shared by every criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReportConfig {
    pub theta_sign: ThetaSign,
    pub maxdeg: usize,
    pub tensor_budget: usize,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig { theta_sign: ThetaSign::Plus, maxdeg: DEFAULT_MAXDEG, tensor_budget: DEFAULT_TENSOR_BUDGET }
    }
}

impl ReportConfig {
    pub fn with_sign(self, theta_sign: ThetaSign) -> Self {
        ReportConfig { theta_sign, ..self }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub pass: bool,
    /// Human-readable reasons for a failure (empty on pass).
    pub failures: Vec<String>,
    /// Notes that do not affect the verdict (erratum candidates, partial depth, ...).
    pub notes: Vec<String>,
    pub data: Value,
}

impl CriterionResult {
    fn new(id: u8, title: &str) -> Self {
        CriterionResult { id, title: title.into(), pass: true, failures: vec![], notes: vec![], data: Value::Null }
    }

    fn require(&mut self, ok: bool, why: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.failures.push(why());
        }
    }

    /// One summary line, `PASS [n] title` or `FAIL [n] title: reason; ...`.
    pub fn line(&self) -> String {
        if self.pass {
            format!("PASS [{:>2}] {}", self.id, self.title)
        } else {
            format!("FAIL [{:>2}] {}: {}", self.id, self.title, self.failures.join("; "))
        }
    }
}

fn certify_all(h: &FinDimHopf) -> (bool, usize) {
    let r = verify_hopf(h, Level::Hopf);
    (r.all_pass(), r.failures().count())
}

/// Hopf axioms for the pointed algebras and `C`; grouplikes of `C` and `C*`.
pub fn hopf_certification() -> CriterionResult {
    let mut res = CriterionResult::new(1, "Hopf certification of A0, A1, B0, B1, C; grouplikes of C and C*");
    let mut algebras: Vec<FinDimHopf> = Pointed::ALL.iter().map(|&p| build_pointed(p)).collect();
    algebras.push(build_c());
    let mut certs = Vec::new();
    for h in &algebras {
        let (ok, nfail) = certify_all(h);
        res.require(ok, || format!("{} fails {nfail} Hopf axiom checks", h.name));
        certs.push(json!({"name": h.name, "dim": h.dim(), "hopf": ok}));
    }
    let c = &algebras[algebras.len() - 1];
    let gl = grouplikes(c);
    let expected: BTreeSet<String> = [c.basis_vec(0), c.basis_vec(3)].iter().map(|g| c.render(g)).collect();
    let found: BTreeSet<String> = gl.iter().map(|g| c.render(g)).collect();
    res.require(found == expected, || format!("grouplikes of C are {}, expected {{1, a3}}", render_set(c, &gl)));
    let cd = build_c_dual();
    let gld = grouplikes(&cd);
    res.require(gld.len() == 6, || format!("C* has {} grouplikes, expected 6", gld.len()));
    res.data = json!({
        "algebras": certs,
        "grouplikes_C": gl.iter().map(|g| c.render(g)).collect::<Vec<_>>(),
        "grouplikes_C_dual": gld.len(),
    });
    res
}

fn render_set(h: &FinDimHopf, xs: &[Vec<Scalar>]) -> String {
    format!("{{{}}}", xs.iter().map(|x| h.render(x)).collect::<Vec<_>>().join(", "))
}

/// `φ: A₁ → C*` is a bijective Hopf morphism.
pub fn phi_certification(sign: ThetaSign) -> CriterionResult {
    let mut res = CriterionResult::new(2, "φ: A1 → C* is a bijective Hopf morphism");
    let r = phi_iso(&NamedConstants::new(sign));
    let err = r.as_ref().err().map(|e| e.to_string());
    res.require(r.is_ok(), || err.clone().unwrap_or_default());
    res.data = json!({"certified": r.is_ok()});
    res
}

/// The double: dimension, axioms, presentation, PBW basis.
pub fn double_certification(sign: ThetaSign) -> CriterionResult {
    let mut res = CriterionResult::new(3, "D(C^cop): dim 144, Hopf axioms, presentation, PBW basis");
    match build_d(&NamedConstants::new(sign)) {
        Err(e) => res.require(false, || e.to_string()),
        Ok(d) => {
            let (ok, nfail) = certify_all(&d.hopf);
            res.require(d.dim() == 144, || format!("dim D = {}", d.dim()));
            res.require(ok, || format!("D fails {nfail} Hopf axiom checks"));
            res.require(d.relation_report.all_pass(), || "a presentation relation fails".into());
            res.require(d.pbw_rank == 144, || format!("PBW monomials have rank {}", d.pbw_rank));
            res.data = json!({
                "dim": d.dim(),
                "hopf": ok,
                "relations_checked": d.relation_report.checks.len(),
                "pbw_rank": d.pbw_rank,
            });
        }
    }
    res
}

/// Simple modules, their pairwise non-isomorphism, and dimension accounting.
pub fn simple_census(sign: ThetaSign) -> CriterionResult {
    let mut res = CriterionResult::new(4, "36 simple modules, Σ dim² = 126, accounting 126 + 18 = 144");
    let d = double(sign);
    let s = simples(d);
    let dims: Vec<usize> = s.iter().map(|m| m.dim()).collect();
    let chars = dims.iter().filter(|&&k| k == 1).count();
    let twos = dims.iter().filter(|&&k| k == 2).count();
    res.require(chars == 6 && twos == 30, || format!("{chars} characters and {twos} two-dimensional simples"));
    let not_simple: Vec<String> = s.iter().filter(|m| !matches!(is_simple(m), Ok(true))).map(|m| m.name.clone()).collect();
    res.require(not_simple.is_empty(), || format!("not simple: {}", not_simple.join(", ")));
    let mut iso_pairs = Vec::new();
    for (a, ma) in s.iter().enumerate() {
        for mb in &s[a + 1..] {
            if ma.dim() == mb.dim() && !hom_space(ma, mb).is_empty() {
                iso_pairs.push(format!("{}≅{}", ma.name, mb.name));
            }
        }
    }
    res.require(iso_pairs.is_empty(), || format!("isomorphic pairs: {}", iso_pairs.join(", ")));
    let sum_sq: usize = dims.iter().map(|k| k * k).sum();
    res.require(sum_sq == 126, || format!("Σ dim² = {sum_sq}"));
    let one_dim = one_dim_solutions(d).len();
    res.require(one_dim == 6, || format!("{one_dim} one-dimensional representations"));
    // Every V_{i,j} is its own projective cover; the characters' covers carry the rest.
    let mut covers = Vec::new();
    let mut residual = 0usize;
    for j in 0..6 {
        let p = p_j(d, j);
        let ok = p.check_relations().is_ok();
        let st = socle_top(&p);
        let top_ok = st.top.len() == 1 && st.top.get(&format!("chi{j}")) == Some(&1);
        res.require(ok && top_ok, || format!("{} is not a module with top chi{j}", p.name));
        residual += p.dim() - 1;
        covers.push(json!({"module": p.name, "dim": p.dim(), "top": st.top, "socle": st.socle}));
    }
    let total = sum_sq + residual;
    res.require(total == d.dim(), || format!("126 + {residual} = {total} ≠ dim D"));
    res.data = json!({
        "characters": chars,
        "two_dim": twos,
        "sum_of_squares": sum_sq,
        "one_dim_solutions": one_dim,
        "projective_covers": covers,
        "residual": residual,
        "accounting_total": total,
    });
    res
}

/// Tensor and duality laws among the simples.
pub fn tensor_dual(sign: ThetaSign) -> CriterionResult {
    let mut res = CriterionResult::new(5, "V⊗chi^k and V* laws (180 + 30 isomorphisms)");
    let (t, dl) = tensor_dual_laws(double(sign));
    let tf: Vec<String> = t.iter().filter(|l| !l.holds).map(|l| format!("{} ≇ {}", l.lhs, l.rhs)).collect();
    let df: Vec<String> = dl.iter().filter(|l| !l.holds).map(|l| format!("{} ≇ {}", l.lhs, l.rhs)).collect();
    res.require(t.len() == 180 && tf.is_empty(), || format!("tensor law: {}/{} hold", t.len() - tf.len(), t.len()));
    res.require(dl.len() == 30 && df.is_empty(), || format!("duality law: {}/{} hold", dl.len() - df.len(), dl.len()));
    res.data = json!({
        "tensor_instances": t.len(),
        "tensor_holding": t.len() - tf.len(),
        "dual_instances": dl.len(),
        "dual_holding": dl.len() - df.len(),
        "failures": tf.into_iter().chain(df).collect::<Vec<_>>(),
    });
    res
}

/// Ext¹ table, separated quiver, and representation type.
pub fn ext_quiver(sign: ThetaSign) -> CriterionResult {
    let mut res = CriterionResult::new(6, "Ext¹ table, separated quiver K3,3, wild verdict");
    let (names, table) = ext_table(double(sign));
    let mut char_block = Vec::new();
    let mut wrong = Vec::new();
    for i in 0..6usize {
        let mut row = Vec::new();
        for j in 0..6usize {
            let expected = usize::from([(i + 1) % 6, (i + 5) % 6, (i + 3) % 6].contains(&j));
            if table[i][j] != expected {
                wrong.push(format!("dim Ext¹(chi{i},chi{j}) = {} (expected {expected})", table[i][j]));
            }
            row.push(table[i][j]);
        }
        char_block.push(row);
    }
    res.require(wrong.is_empty(), || wrong.join(", "));
    let mixed: usize =
        (0..names.len()).flat_map(|i| (0..names.len()).map(move |j| (i, j))).filter(|&(i, j)| (i >= 6 || j >= 6) && table[i][j] != 0).count();
    res.require(mixed == 0, || format!("{mixed} nonzero Ext¹ entries involve a two-dimensional simple"));
    let q = quiver_from_table(&names, &table);
    let nontrivial: Vec<_> = q.separated_components.iter().filter(|c| c.edges > 0).collect();
    let k33 = nontrivial.len() == 2 && nontrivial.iter().all(|c| c.vertices.len() == 6 && c.edges == 9);
    let shapes: Vec<String> = nontrivial.iter().map(|c| format!("{} on {} vertices", c.shape, c.vertices.len())).collect();
    res.require(k33, || format!("separated components are {}, not K3,3", shapes.join(" and ")));
    res.require(q.verdict == RepType::Wild, || format!("classifier verdict is {:?}", q.verdict).to_lowercase());
    res.data = json!({
        "character_block": char_block,
        "mixed_nonzero": mixed,
        "separated_components": nontrivial,
        "verdict": q.verdict,
    });
    res
}

/// Coaction and braiding tables; YD axioms; braid relation.
///
/// `downstream_ok` carries the verdicts of the dimension criteria, which
/// decide whether printed-table mismatches are tolerable erratum candidates.
pub fn yd_translation(sign: ThetaSign, downstream_ok: bool) -> CriterionResult {
    let mut res = CriterionResult::new(7, "YD translation of 36 simples and 6 projectives; printed tables; braid relation");
    let cmp = verify_paper_tables(sign);
    res.require(cmp.computed_objects_certified, || "a computed YD module or braiding fails certification".into());
    let modules: BTreeSet<&str> = cmp.mismatches.iter().map(|m| m.module.as_str()).collect();
    if !cmp.mismatches.is_empty() {
        res.notes.push(format!(
            "erratum candidates: {} of {} printed entries differ ({})",
            cmp.mismatches.len(),
            cmp.entries_compared,
            modules.iter().copied().collect::<Vec<_>>().join(", ")
        ));
        res.require(downstream_ok, || "printed tables differ and a downstream dimension claim fails".into());
    }
    res.data = json!({
        "entries_compared": cmp.entries_compared,
        "computed_objects_certified": cmp.computed_objects_certified,
        "mismatches": cmp.mismatches,
    });
    res
}

/// Finite Nichols algebras: ranks, relations, palindromy, presented bases,
/// and the brute-force symmetrizer oracle.
pub fn nichols_dimensions(cfg: ReportConfig) -> CriterionResult {
    let mut res = CriterionResult::new(8, "finite Nichols algebras: ranks, relations, presented bases, symmetrizer oracle");
    let d = double(cfg.theta_sign);
    if cfg.maxdeg < 4 {
        res.notes.push(format!("symmetrizers computed only through degree {}; degree 4 is needed to see them vanish", cfg.maxdeg));
    }
    let mut per_module = Vec::new();
    for name in BIPRODUCT_MODULES {
        let b = match module_by_name(d, name).map_err(|e| e.to_string()).and_then(|m| module_braiding(&m).map_err(|e| e.to_string())) {
            Ok(b) => b,
            Err(e) => {
                res.require(false, || format!("{name}: {e}"));
                continue;
            }
        };
        let stack = SymmetrizerStack::new(&b, cfg.maxdeg, cfg.tensor_budget);
        let rep = crate::nichols::report_from_stack(&b, &stack, cfg.maxdeg, false);
        let expected: &[usize] = if b.dim == 1 { &[1, 1] } else { &[1, 2, 2, 1] };
        let total: usize = expected.iter().sum();
        res.require(rep.verdict == Verdict::Finite { dim: total }, || {
            format!("{name}: ranks {:?} through degree {}, verdict {:?}", rep.ranks, rep.computed_through, rep.verdict)
        });
        res.require(rep.ranks.iter().take(expected.len()).eq(expected.iter()), || format!("{name}: ranks {:?}", rep.ranks));
        res.require(rep.palindromic != Some(false), || format!("{name}: ranks are not palindromic"));
        let quad = if b.dim > 1 && stack.top_degree() >= 2 { quadratic_relations_match(name, &stack).unwrap_or(false) } else { true };
        res.require(quad, || format!("{name}: printed quadratic relations do not span ker S2"));
        let cubic = match printed_cubic_relation(name) {
            Ok(Some(r)) if stack.top_degree() >= 3 => stack.is_new_relation(&r) && stack.is_primitive_mod_relations(&r),
            Ok(Some(_)) => false,
            _ => true,
        };
        res.require(cubic, || format!("{name}: cubic relation is not a new primitive relation"));
        let presented = printed_presentation(name).map_err(|e| e.to_string()).and_then(|p| presented_basis(&p, &stack).map_err(|e| e.to_string()));
        let presented_dim = presented.as_ref().map(|(basis, _)| basis.len()).ok();
        res.require(presented_dim == Some(total), || format!("{name}: presented basis {:?}", presented.as_ref().err()));
        per_module.push(json!({
            "module": name,
            "ranks": rep.ranks,
            "verdict": rep.verdict,
            "palindromic": rep.palindromic,
            "quadratic_relations_match": quad,
            "cubic_new_primitive": cubic,
            "presented_dim": presented_dim,
        }));
    }
    // Brute-force n!-sums against the factorized symmetrizer.
    let mut oracle = Vec::new();
    for name in ["V31", "V22", "P0"] {
        let Ok(b) = module_by_name(d, name).map_err(|e| e.to_string()).and_then(|m| module_braiding(&m).map_err(|e| e.to_string())) else {
            res.require(false, || format!("{name}: no braiding"));
            continue;
        };
        let top = if b.dim > 2 { 3 } else { 4 };
        let stack = SymmetrizerStack::new(&b, top, cfg.tensor_budget.max(b.dim.pow(top as u32)));
        let c = SparseBraiding::new(&b);
        for n in 2..=top {
            let eq = symmetrizer_bruteforce(&c, n) == *stack.symmetrizer(n);
            let lift = lift_well_defined(&c, n);
            res.require(eq && lift, || format!("{name}: brute-force symmetrizer differs at n = {n}"));
            oracle.push(json!({"module": name, "n": n, "equal": eq, "lift_well_defined": lift}));
        }
    }
    res.data = json!({"modules": per_module, "bruteforce": oracle});
    res
}

/// Eigenvalue-1 witnesses for infinite Nichols algebras.
pub fn infinitude(cfg: ReportConfig) -> CriterionResult {
    let mut res = CriterionResult::new(9, "infinitude witnesses: listed simples, even characters, P_j, 18 indecomposables, duals");
    let d = double(cfg.theta_sign);
    let scan = match simple_witness_scan(d, cfg.maxdeg) {
        Ok(s) => s,
        Err(e) => {
            res.require(false, || e.to_string());
            return res;
        }
    };
    let missing: Vec<&str> = scan
        .listed
        .iter()
        .chain(&scan.even_characters)
        .chain(&scan.projectives)
        .filter(|w| w.witness.is_none())
        .map(|w| w.module.as_str())
        .collect();
    res.require(missing.is_empty(), || format!("no witness for {}", missing.join(", ")));
    let unconfirmed: Vec<String> = scan.duals.iter().filter(|c| !c.confirmed()).map(|c| format!("{}*≅{}", c.listed, c.partner)).collect();
    res.require(unconfirmed.is_empty(), || format!("dual partners unconfirmed: {}", unconfirmed.join(", ")));
    let ind = indecomposable_infinite_scan(d);
    let non_modules: Vec<&str> = ind.iter().filter(|w| !w.is_module).map(|w| w.module.as_str()).collect();
    let unwitnessed: Vec<&str> = ind.iter().filter(|w| w.is_module && w.witness.is_none()).map(|w| w.module.as_str()).collect();
    res.require(non_modules.is_empty(), || {
        format!("{} of {} two-dimensional indecomposables violate the relations of D ({})", non_modules.len(), ind.len(), non_modules.join(", "))
    });
    res.require(unwitnessed.is_empty(), || format!("no witness for {}", unwitnessed.join(", ")));
    res.data = json!({"simples": scan, "indecomposables": ind});
    res
}

/// The seven biproducts.
pub fn bosonizations(sign: ThetaSign) -> CriterionResult {
    let mut res = CriterionResult::new(10, "seven bosonizations: dims, Hopf axioms, presentations, coinvariants, coradical");
    let d = double(sign);
    let mut rows = Vec::new();
    let mut dims = Vec::new();
    for m in BIPRODUCT_MODULES {
        match biproduct_report(d, m) {
            Err(e) => res.require(false, || format!("{m}: {e}")),
            Ok((_, r)) => {
                dims.push(r.dim);
                res.require(r.hopf_axioms.all_pass(), || format!("{m}: Hopf axioms fail"));
                res.require(r.inclusion_projection.all_pass(), || format!("{m}: ι/π checks fail"));
                res.require(r.coinvariants_dim == r.nichols_dim, || format!("{m}: coinvariants have dim {}", r.coinvariants_dim));
                res.require(!r.coradical_closed_under_mult, || format!("{m}: coradical is a subalgebra"));
                let bad: Vec<&str> = r.presentation_identities().filter(|i| !i.holds).map(|i| i.identity.as_str()).collect();
                res.require(bad.is_empty(), || format!("{m}: {}", bad.join(", ")));
                let aux: Vec<String> = r.auxiliary_failures().map(|i| i.identity.clone()).collect();
                if !aux.is_empty() {
                    res.notes.push(format!("{m}: auxiliary claims not holding: {}", aux.join(", ")));
                }
                rows.push(json!({
                    "module": r.module,
                    "dim": r.dim,
                    "nichols_dim": r.nichols_dim,
                    "hilbert": r.hilbert,
                    "hopf_axioms": r.hopf_axioms.all_pass(),
                    "inclusion_projection": r.inclusion_projection.all_pass(),
                    "coinvariants_dim": r.coinvariants_dim,
                    "coradical_dim": r.coradical_dim,
                    "coradical_closed_under_mult": r.coradical_closed_under_mult,
                    "grouplikes": r.grouplikes,
                    "skew_primitive_dims": r.skew_primitive_dims,
                    "identities": r.identities,
                }));
            }
        }
    }
    let mut sorted = dims.clone();
    sorted.sort_unstable();
    res.require(sorted == [24, 24, 24, 72, 72, 72, 72], || format!("dimensions {dims:?}"));
    res.data = json!({"biproducts": rows});
    res
}

/// Criteria 1–10 for one configuration, in dependency order.
pub fn core_criteria(cfg: ReportConfig) -> Vec<CriterionResult> {
    let sign = cfg.theta_sign;
    let c1 = hopf_certification();
    let c2 = phi_certification(sign);
    let c3 = double_certification(sign);
    let c4 = simple_census(sign);
    let c5 = tensor_dual(sign);
    let c6 = ext_quiver(sign);
    let c8 = nichols_dimensions(cfg);
    let c9 = infinitude(cfg);
    let c10 = bosonizations(sign);
    let c7 = yd_translation(sign, c8.pass && c10.pass);
    vec![c1, c2, c3, c4, c5, c6, c7, c8, c9, c10]
}

/// Verdict vector of criteria 1–10 (for sign comparisons).
fn verdicts(cs: &[CriterionResult]) -> Vec<bool> {
    cs.iter().map(|c| c.pass).collect()
}

/// Sign independence and thread-count determinism.
///
/// Passes when every criterion reaches the same verdict under both signs of
/// θ, and when the criteria 1–10 payload
/// serializes bit-identically with one thread and with `threads` threads.
pub fn determinism(cfg: ReportConfig, threads: usize, current: &[CriterionResult]) -> CriterionResult {
    let mut res = CriterionResult::new(11, "θ-sign independence and thread-count determinism");
    let other_sign = match cfg.theta_sign {
        ThetaSign::Plus => ThetaSign::Minus,
        ThetaSign::Minus => ThetaSign::Plus,
    };
    let other = core_criteria(cfg.with_sign(other_sign));
    let (a, b) = (verdicts(current), verdicts(&other));
    let differing: Vec<u8> = current.iter().zip(&other).filter(|(x, y)| x.pass != y.pass).map(|(x, _)| x.id).collect();
    res.require(differing.is_empty(), || format!("verdicts differ between θ signs on criteria {differing:?}"));
    let failing: Vec<u8> = current.iter().filter(|c| !c.pass).map(|c| c.id).collect();
    if !failing.is_empty() {
        res.notes.push(format!("criteria {failing:?} fail under both θ signs; counted under their own numbers"));
    }
    let serialize = |n: usize| -> Result<String, String> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| e.to_string())?;
        pool.install(|| serde_json::to_string(&core_criteria(cfg)).map_err(|e| e.to_string()))
    };
    let single = serialize(1);
    let multi = serialize(threads.max(2));
    let same = matches!((&single, &multi), (Ok(x), Ok(y)) if x == y);
    res.require(same, || format!("report differs between 1 and {} threads", threads.max(2)));
    let mut by_sign = serde_json::Map::new();
    by_sign.insert(cfg.theta_sign.to_string(), json!(a));
    by_sign.insert(other_sign.to_string(), json!(b));
    res.data = json!({
        "theta_signs": [cfg.theta_sign, other_sign],
        "verdicts": by_sign,
        "thread_counts": [1, threads.max(2)],
        "bit_identical": same,
    });
    res
}

/// Everything the `full-report` command emits.
#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub schema: &'static str,
    pub config: ReportConfig,
    pub criteria: Vec<CriterionResult>,
    pub all_pass: bool,
    /// Set when `maxdeg` was too small to decide every Nichols question.
    pub partial: bool,
}

impl FullReport {
    pub fn failed(&self) -> Vec<&CriterionResult> {
        self.criteria.iter().filter(|c| !c.pass).collect()
    }
}

/// The whole acceptance suite. `threads` is the thread count compared
/// against a single-threaded run in the determinism criterion.
pub fn full_report(cfg: ReportConfig, threads: usize) -> FullReport {
    let mut criteria = core_criteria(cfg);
    let c11 = determinism(cfg, threads, &criteria);
    criteria.push(c11);
    let all_pass = criteria.iter().all(|c| c.pass);
    FullReport { schema: REPORT_SCHEMA, config: cfg, criteria, all_pass, partial: cfg.maxdeg < 4 }
}

/// Nichols report of a named module at the configured depth.
pub fn nichols_of(cfg: ReportConfig, module: &str) -> Result<crate::nichols::NicholsReport, String> {
    let d = double(cfg.theta_sign);
    let m = module_by_name(d, module).map_err(|e| e.to_string())?;
    let b = module_braiding(&m).map_err(|e| e.to_string())?;
    Ok(nichols_report(&b, cfg.maxdeg, cfg.tensor_budget, false))
}

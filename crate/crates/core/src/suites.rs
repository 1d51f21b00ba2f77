//! Named verification suites. Each suite runs a family of checks and returns
//! one [`CheckReport`] per check, together with any computed data worth keeping.

use std::collections::{BTreeSet, HashMap};

use rand::SeedableRng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::combinat::{adjacency_lemma_counterexample, combinatorial_lemma_check, partitions, Partition, Tableau};
use crate::cyclo::CycloNumber;
use crate::glfq::{
    gl_group, gl_subgroup, hasse_davenport_check, induce, kondo_gauss, verify_bruhat_bijection, weil_character, CyclicLog, FqMatrix,
    GlError,
};
use crate::hyperhecke::{self, HeckeError, HeckeTriple, HyperHecke};
use crate::invariants::mezzadri::verify_cyclic_inductivity;
use crate::invariants::wreath::{expected_class_count, verify_theorem73, wreath_over_gl};
use crate::invariants::{verify_mezzadri, verify_psh_multiplicativity, Example74};
use crate::psh::{gl_instance, symmetric_instance, verify_fibred_grading, wreath_instance, CentralCharacterAlgebra, PshError};
use crate::report::CheckReport;
use crate::specht::{
    character_as_cyclo, permutation_character, submodule_theorem_check, verify_branching, SpechtError, SpechtModule, SymCharacterTable,
};
use crate::symgroup::{brute_force_double_cosets, k_invariant, permutation_matrix, w_of, KMatrix, Permutation, SymError};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GlError),
    #[error(transparent)]
    Specht(#[from] SpechtError),
    #[error(transparent)]
    Psh(#[from] PshError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

impl SuiteError {
    /// Whether the error is a resource bound rather than bad input or a bug.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            SuiteError::Group(GlError::GroupTooLarge { .. } | GlError::FieldTooLarge { .. })
                | SuiteError::Specht(SpechtError::TooLarge { .. })
                | SuiteError::Psh(PshError::Group(GlError::GroupTooLarge { .. }))
                | SuiteError::Hecke(HeckeError::Group(GlError::GroupTooLarge { .. }))
        )
    }
}

/// Parameters shared by the suites; unset fields take each suite's default.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub q: Option<u32>,
    pub maxdeg: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub weil: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub reports: Vec<CheckReport>,
    pub data: Value,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn report(&self, check: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.check == check)
    }

    /// All reports with this check name merged into one.
    pub fn merged(&self, check: &str) -> Option<CheckReport> {
        let mut it = self.reports.iter().filter(|r| r.check == check);
        let mut first = it.next()?.clone();
        for r in it {
            first.merge(r.clone());
        }
        Some(first)
    }
}

/// Every suite with the checks it runs.
pub const REGISTRY: &[(&str, &[&str])] = &[
    (
        "psh",
        &[
            "self-adjoint",
            "associative",
            "coassociative",
            "hopf",
            "unit-counit",
            "positivity",
            "cocommutative",
            "decomposition",
            "fibred-grading",
            "central-character-coproduct",
        ],
    ),
    ("mezzadri", &["mezzadri", "mezzadri-multiplicativity", "mezzadri-cyclic-induction"]),
    ("gauss", &["kondo-induction", "kondo-multiplicativity", "kondo-trivial", "weil-identity"]),
    (
        "branching",
        &[
            "sym5-table",
            "specht-dimension",
            "branching",
            "orthonormality",
            "sign-twist",
            "unitriangularity",
            "column-lemma",
            "adjacency-lemma",
            "submodule-theorem",
        ],
    ),
    ("bruhat", &["bruhat-gl", "bruhat-young", "w-of-example"]),
    ("hasse-davenport", &["hasse-davenport"]),
    (
        "wreath-counterexample",
        &["wreath-class-count", "theorem73", "example74-direct", "example74-display-g", "example74-display-j"],
    ),
    (
        "hecke",
        &[
            "normal-form",
            "associativity",
            "faithfulness",
            "graded-product",
            "coproduct-extremes",
            "coproduct-representatives",
            "classical-hecke",
        ],
    ),
    ("hopflike", &["hopflike-run"]),
];

pub fn suite_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(s, _)| *s).collect()
}

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<SuiteOutcome, SuiteError> {
    let (reports, data) = match name {
        "psh" => psh_suite(p)?,
        "mezzadri" => mezzadri_suite(p)?,
        "gauss" => gauss_suite(p)?,
        "branching" => branching_suite(p)?,
        "bruhat" => bruhat_suite(p)?,
        "hasse-davenport" => hasse_davenport_suite(p)?,
        "wreath-counterexample" => wreath_suite(p)?,
        "hecke" => hecke_suite(p)?,
        "hopflike" => hopflike_suite(p)?,
        other => return Err(SuiteError::UnknownSuite(other.into())),
    };
    Ok(SuiteOutcome { suite: name.into(), reports, data })
}

type Run = (Vec<CheckReport>, Value);

fn psh_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let sym_deg = p.maxdeg.unwrap_or(6);
    let wreath_deg = p.maxdeg.map_or(3, |d| d.min(3));
    let gl_deg = p.maxdeg.map_or(2, |d| d.min(2));
    let qs: Vec<u32> = p.q.map_or(vec![2, 3], |q| vec![q]);
    let mut reports = Vec::new();
    let mut blocks = serde_json::Map::new();

    let sym = symmetric_instance(sym_deg)?;
    reports.extend(sym.verify_all(sym_deg));
    let d = sym.decompose(sym_deg)?;
    reports.push(d.report(&sym.name));
    blocks.insert(sym.name.clone(), json!(d.blocks.len()));

    let wr = wreath_instance(wreath_deg)?;
    reports.extend(wr.verify_all(wreath_deg));
    let d = wr.decompose(wreath_deg)?;
    reports.push(d.report(&wr.name));
    blocks.insert(wr.name.clone(), json!(d.blocks.len()));

    for q in qs {
        let gl = gl_instance(q, gl_deg)?;
        reports.extend(gl.verify_all(gl_deg));
        let d = gl.decompose(gl_deg)?;
        reports.push(d.report(&gl.name));
        blocks.insert(gl.name.clone(), json!(d.blocks.len()));
        reports.push(verify_fibred_grading(q, &gl)?);
        reports.push(CentralCharacterAlgebra::new(q as usize - 1).verify());
    }
    Ok((reports, json!({ "blocks": blocks })))
}

fn mezzadri_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let n = p.n.unwrap_or(6);
    let mut reports = Vec::new();
    for m in 1..=n {
        reports.push(verify_mezzadri(m)?);
        for k in 1..m {
            reports.push(verify_psh_multiplicativity(k, m)?);
        }
    }
    for m in 1..=n.min(5) {
        reports.push(verify_cyclic_inductivity(m)?);
    }
    Ok((reports, json!({ "n": n })))
}

/// Distinct cyclic subgroups of a group of matrices.
fn cyclic_subgroups(g: &crate::glfq::GlGroup) -> Result<Vec<crate::glfq::GlGroup>, GlError> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..g.order() {
        let h = g.subgroup_generated(format!("<{}>", g.element(i)), &[*g.element(i)])?;
        let mut key: Vec<usize> = h.elements().iter().map(|x| g.index_of(x).expect("member")).collect();
        key.sort_unstable();
        if seen.insert(key) {
            out.push(h);
        }
    }
    Ok(out)
}

fn gauss_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let qs: Vec<u32> = p.q.map_or(vec![2, 3], |q| vec![q]);
    let mut reports = Vec::new();
    let mut weil = Vec::new();
    for &q in &qs {
        let g = gl_group(2, q)?;
        let mut r = CheckReport::new("kondo-induction", g.name());
        for h in cyclic_subgroups(&g)? {
            let logs = CyclicLog::new(&h)?;
            for j in 0..h.order() as i64 {
                let chi = logs.character(&h, j);
                let lhs = kondo_gauss(&h, &chi)?;
                let rhs = kondo_gauss(&g, &induce(&g, &h, &chi)?)?;
                r.record(lhs == rhs, || format!("{}, j = {j}: {lhs} vs {rhs}", h.name()));
            }
        }
        reports.push(r);

        // GL_1 × GL_1 as the Levi block of GL_2
        let mut r = CheckReport::new("kondo-multiplicativity", format!("GL(1,{q}) x GL(1,{q})"));
        let l = gl_subgroup(&g, "L(1,1)")?;
        let g1 = gl_group(1, q)?;
        let t1 = g1.character_table()?;
        for x in &t1.irreducibles {
            for y in &t1.irreducibles {
                let prod = l.class_function(|m| {
                    let a = FqMatrix::diag(m.field(), &[m.get(0, 0)]);
                    let b = FqMatrix::diag(m.field(), &[m.get(1, 1)]);
                    g1.eval(x, &a).expect("GL_1 element") * g1.eval(y, &b).expect("GL_1 element")
                });
                let lhs = kondo_gauss(&l, &prod)?;
                let rhs = kondo_gauss(&g1, x)? * kondo_gauss(&g1, y)?;
                r.record(lhs == rhs, || format!("{lhs} vs {rhs}"));
            }
        }
        reports.push(r);

        let mut r = CheckReport::new("kondo-trivial", g1.name());
        let w = kondo_gauss(&g1, &g1.trivial_character())?;
        r.record(w == CycloNumber::from_int(-1), || format!("W(1) = {w}"));
        let direct: CycloNumber = g.elements().iter().map(crate::glfq::psi_measure).sum();
        let w = kondo_gauss(&g, &g.trivial_character())?;
        r.record(w == direct, || format!("W_G(1) = {w}, Σ Ψ = {direct}"));
        reports.push(r);
    }
    let weil_qs: Vec<u32> = qs.iter().copied().filter(|q| q % 2 == 1).collect();
    if p.weil || p.q.is_none() {
        for q in weil_qs {
            let mut r = CheckReport::new("weil-identity", format!("GL(2,{q})"));
            for j in 1..(q * q - 1) as i64 {
                if j % (q as i64 + 1) == 0 {
                    continue;
                }
                let d = weil_character(q, j)?;
                r.record(d.identity_holds(), || format!("Θ = ζ^{j}: {} vs −{q}·{}", d.w_gl, d.w_torus));
                r.record(d.norm == CycloNumber::one(), || format!("r(ζ^{j}) is not irreducible"));
                weil.push(json!({
                    "q": q,
                    "theta": j,
                    "lhs": d.w_gl,
                    "rhs": (-d.w_torus.scale(&crate::cyclo::rat(q as i64))),
                    "lhs_text": d.w_gl.to_string(),
                    "torus_text": d.w_torus.to_string(),
                }));
            }
            reports.push(r);
        }
    }
    Ok((reports, json!({ "weil": weil })))
}

/// The Σ₅ character table as printed: rows are the Specht modules and columns
/// the cycle types, both in the order (5), (4,1), (3,2), (3,1^2), (2^2,1), (2,1^3), (1^5).
pub const SIGMA5_TABLE: [[i64; 7]; 7] = [
    [1, 1, 1, 1, 1, 1, 1],
    [-1, 0, -1, 1, 0, 2, 4],
    [0, -1, 1, -1, 1, 1, 5],
    [1, 0, 0, 0, -2, 0, 6],
    [0, 1, -1, -1, 1, -1, 5],
    [-1, 0, 1, 1, 0, -2, 4],
    [1, -1, -1, 1, 1, -1, 1],
];

fn branching_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let n = p.n.unwrap_or(7);
    let mut reports = Vec::new();

    let mut r = CheckReport::new("sym5-table", "Sym(5)");
    let t5 = SymCharacterTable::compute(5)?;
    for (i, row) in SIGMA5_TABLE.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            r.record(t5.values[i][j] == v, || format!("entry ({i},{j}) is {} not {v}", t5.values[i][j]));
        }
    }
    reports.push(r);

    let mut r = CheckReport::new("specht-dimension", format!("n≤{n}"));
    for m in 1..=n {
        for mu in partitions(m) {
            let module = SpechtModule::new(&mu)?;
            let count = mu.count_standard_tableaux() as usize;
            let rank = module.basis_rank();
            r.record(rank == count && module.dim() == count, || format!("S^{mu}: rank {rank}, {count} standard tableaux"));
        }
    }
    reports.push(r);

    let small = n.min(5);
    let mid = n.min(6);
    let mut br = CheckReport::new("branching", format!("n≤{small}"));
    let mut sub = CheckReport::new("submodule-theorem", format!("n≤{small}"));
    for m in 1..=small {
        for mu in partitions(m) {
            br.merge(verify_branching(&mu)?);
            sub.merge(submodule_theorem_check(&mu)?);
        }
    }
    reports.push(br);

    let mut orth = CheckReport::new("orthonormality", format!("n≤{mid}"));
    let mut sign = CheckReport::new("sign-twist", format!("n≤{mid}"));
    let mut tri = CheckReport::new("unitriangularity", format!("n≤{mid}"));
    for m in 1..=mid {
        let t = SymCharacterTable::cached(m)?;
        let chars: Vec<_> = t.values.iter().map(|v| character_as_cyclo(v, m)).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let k = a.multiplicity(b, &t.class_sizes);
                orth.record(k == Some(i64::from(i == j)), || format!("⟨{}, {}⟩ = {k:?}", t.partitions[i], t.partitions[j]));
            }
        }
        let signs: Vec<i64> = t.partitions.iter().map(|c| crate::symgroup::class_representative(c).sign() as i64).collect();
        for (mu, row) in t.partitions.iter().zip(&t.values) {
            let conj = &t.values[t.index_of(&mu.conjugate()).expect("partition")];
            let twisted: Vec<i64> = row.iter().zip(&signs).map(|(a, s)| a * s).collect();
            sign.record(conj == &twisted, || format!("χ_{} ≠ χ_{mu}·sign", mu.conjugate()));
            let perm = permutation_character(mu);
            for (lam, ch) in t.partitions.iter().zip(&chars) {
                let k = perm.multiplicity(ch, &t.class_sizes);
                let ok = if lam == mu {
                    k == Some(1)
                } else {
                    k == Some(0) || lam.dominates(mu).unwrap_or(false)
                };
                tri.record(ok, || format!("⟨M^{mu}, S^{lam}⟩ = {k:?}"));
            }
        }
    }
    reports.extend([orth, sign, tri]);

    let mut col = CheckReport::new("column-lemma", format!("n≤{small}"));
    for m in 1..=small {
        let shapes = partitions(m);
        let tabs: Vec<Vec<Tableau>> = shapes.iter().map(Tableau::all_of_shape).collect();
        for (a, ta) in shapes.iter().zip(&tabs) {
            for (b, tb) in shapes.iter().zip(&tabs) {
                let dom = a.dominates(b).map_err(|e| SuiteError::Usage(e.to_string()))?;
                let mut bad = 0;
                for t1 in ta {
                    for t2 in tb {
                        if combinatorial_lemma_check(t1, t2).map_err(|e| SuiteError::Usage(e.to_string()))? && !dom {
                            bad += 1;
                        }
                    }
                }
                col.record(bad == 0, || format!("{bad} pairs of shapes {a}, {b} violate the column condition"));
            }
        }
    }
    reports.push(col);

    let mut adj = CheckReport::new("adjacency-lemma", format!("n≤{small}"));
    for m in 1..=small {
        let found = adjacency_lemma_counterexample(m);
        adj.record(found.is_none(), || format!("n = {m}: {found:?}"));
    }
    reports.push(adj);
    reports.push(sub);
    Ok((reports, json!({ "n": n })))
}

fn bruhat_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let m_gl = p.n.map_or(3, |n| n.min(3));
    let m_young = p.n.unwrap_or(7);
    let qs: Vec<u32> = p.q.map_or(vec![2, 3], |q| vec![q]);
    let mut reports = Vec::new();
    let mut counts = Vec::new();

    for &q in &qs {
        let mut r = CheckReport::new("bruhat-gl", format!("GL(m,{q}), m≤{m_gl}"));
        for m in 1..=m_gl {
            for a in 0..=m {
                for alpha in 0..=m {
                    let b = verify_bruhat_bijection(a, alpha, m, q)?;
                    r.record(b.bijective && b.double_cosets == b.k_solutions, || {
                        format!("m={m} a={a} α={alpha}: {} double cosets, {} k-matrices", b.double_cosets, b.k_solutions)
                    });
                    counts.push(json!({ "q": q, "m": m, "a": a, "alpha": alpha, "double_cosets": b.double_cosets }));
                }
            }
        }
        reports.push(r);
    }

    let mut r = CheckReport::new("bruhat-young", format!("Sym(m), m≤{m_young}"));
    for m in 1..=m_young {
        for a in 0..=m {
            for alpha in 0..=m {
                let (all, label) = brute_force_double_cosets(a, alpha, m);
                let index: HashMap<&Permutation, usize> = all.iter().enumerate().map(|(i, x)| (x, i)).collect();
                let count = label.iter().copied().max().map_or(0, |x| x + 1);
                let sols = KMatrix::solutions(a, alpha, m)?;
                let hit: BTreeSet<usize> = sols.iter().map(|k| label[index[&w_of(k, a, alpha, m)]]).collect();
                let invariant_ok = sols.iter().all(|k| k_invariant(&w_of(k, a, alpha, m), a, alpha) == *k);
                r.record(count == sols.len() && hit.len() == count && invariant_ok, || {
                    format!("m={m} a={a} α={alpha}: {count} double cosets, {} k-matrices", sols.len())
                });
            }
        }
    }
    reports.push(r);

    let mut r = CheckReport::new("w-of-example", "k = ((1,3),(2,1)), m = 7");
    let k = KMatrix { k11: 1, k12: 3, k21: 2, k22: 1 };
    let want: Vec<Vec<u8>> = vec![
        vec![1, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 0, 1, 0],
        vec![0, 1, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 1],
    ];
    r.record(k.satisfies(3, 4, 7), || "k does not satisfy the margins".into());
    let got = permutation_matrix(&w_of(&k, 3, 4, 7));
    r.record(got == want, || format!("w(k) = {got:?}"));
    reports.push(r);
    Ok((reports, json!({ "gl_counts": counts })))
}

fn hasse_davenport_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let cases: Vec<(u32, u32)> = match (p.q, p.n) {
        (Some(q), Some(m)) => vec![(q, m as u32)],
        _ => vec![(3, 2), (5, 2), (3, 3)],
    };
    let mut r = CheckReport::new("hasse-davenport", format!("{cases:?}"));
    let mut rows = Vec::new();
    for (pr, m) in cases {
        for j in 0..(pr as i64 - 1) {
            let h = hasse_davenport_check(pr, j, m)?;
            r.record(h.holds, || format!("p={pr} m={m} λ=ζ^{j}: τ(λ∘N) = {}, τ(λ) = {}", h.tau_lifted, h.tau_base));
            rows.push(h);
        }
    }
    Ok((vec![r], serde_json::to_value(rows).unwrap_or(Value::Null)))
}

fn wreath_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let q = p.q.unwrap_or(3);
    let nmax = p.n.unwrap_or(3);
    let mut reports = Vec::new();

    let mut r = CheckReport::new("wreath-class-count", format!("Sym(n)∫GL(1,{q}), n≤{nmax}"));
    let h_classes = (q - 1) as usize;
    for n in 1..=nmax {
        let g = wreath_over_gl(n, 1, q)?;
        let want = expected_class_count(n, h_classes);
        r.record(g.num_classes() == want, || format!("n={n}: {} classes, expected {want}", g.num_classes()));
    }
    reports.push(r);

    let mut r = CheckReport::new("theorem73", format!("GL(1,{q}), n≤{nmax}"));
    let mut t73 = Vec::new();
    for n in 1..=nmax {
        for c in verify_theorem73(n, 1, q)? {
            r.record(c.equal, || format!("n={n} λ={}: {} vs {}", c.lambda, c.computed, c.expected));
            t73.push(json!({ "n": n, "lambda": c.lambda.to_string(), "computed": c.computed.to_string(), "expected": c.expected.to_string() }));
        }
    }
    reports.push(r);

    let ex = Example74::new(q)?;
    let cases = ex.cases()?;
    let mut direct = CheckReport::new("example74-direct", "W_{3,G} vs W_{3,J}(Ind)");
    direct.record(cases.iter().any(|c| c.direct_differ), || "the two polynomials agree for every character of G".into());
    let mut dg = CheckReport::new("example74-display-g", "first displayed expression");
    let mut dj = CheckReport::new("example74-display-j", "second displayed expression");
    let mut rows = Vec::new();
    for c in &cases {
        dg.record(c.display_g_matches, || format!("χ{}: display {} vs dim·W_G = {}", c.character, c.display_g, c.w_g.scale(&c.dim)));
        dj.record(c.display_j_matches, || format!("χ{}: display {} vs dim·W_J = {}", c.character, c.display_j, c.w_j_ind.scale(&c.dim)));
        rows.push(json!({
            "character": c.character,
            "dim": c.dim.to_string(),
            "w_g": c.w_g.to_string(),
            "w_j_ind": c.w_j_ind.to_string(),
            "theorem72": c.theorem72.to_string(),
            "display_g": c.display_g.to_string(),
            "display_j": c.display_j.to_string(),
        }));
    }
    reports.extend([direct, dg, dj]);
    Ok((reports, json!({ "theorem73": t73, "example74": rows })))
}

fn classical_hecke(q: u32) -> Result<CheckReport, SuiteError> {
    let h = HyperHecke::new(2, q)?;
    let mut r = CheckReport::new("classical-hecke", format!("GL(2,{q})"));
    let bm = h.subgroup("B")?;
    let borel = std::sync::Arc::new(h.trivial(bm.clone())?);
    let torus = std::sync::Arc::new(h.trivial(h.subgroup("T")?)?);
    let w = h.subgroup("W")?.into_iter().find(|&x| x != 0).expect("W has two elements");
    r.record(matches!(h.validate(&borel, w, &borel), Err(HeckeError::Containment)), || "[(B,1), w, (B,1)] validated".into());
    let t = h.validate(&torus, w, &borel)?;
    let mb = hyperhecke::InducedModule::new(&h, &borel);
    let mt = hyperhecke::InducedModule::new(&h, &torus);
    let projected = hyperhecke::apply_triple(&h, &t, &mt, &mb);
    let g = h.group();
    // Σ over BwB/B of gxB, against the triple composed with the transfer to Ind_T
    let mut cells: Vec<usize> =
        bm.iter().flat_map(|&x| bm.iter().map(move |&y| g.mul_idx(g.mul_idx(x, w), y))).map(|x| mb.reduce(x).0).collect();
    cells.sort_unstable();
    cells.dedup();
    let d = mb.dim();
    let mut classical = vec![vec![0i64; d]; d];
    let mut composite = vec![vec![0i64; d]; d];
    for (j, &rep) in mb.reps.iter().enumerate() {
        for &c in &cells {
            classical[mb.reduce(g.mul_idx(rep, mb.reps[c])).0][j] += 1;
        }
        let tcosets: BTreeSet<usize> = bm.iter().map(|&x| mt.reduce(g.mul_idx(rep, x)).0).collect();
        for tc in tcosets {
            let (row, v) = &projected.cols[tc];
            // trivial characters: every entry of the projection is 1
            r.record(*v == CycloNumber::one(), || format!("projection entry {v} at column {tc}"));
            composite[*row][j] += 1;
        }
    }
    r.record(classical == composite, || "T_w differs from the triple composed with the transfer".into());
    let qi = q as i64;
    for i in 0..d {
        for j in 0..d {
            let sq: i64 = (0..d).map(|k| classical[i][k] * classical[k][j]).sum();
            let rhs = (qi - 1) * classical[i][j] + qi * i64::from(i == j);
            r.record(sq == rhs, || format!("T_w² ≠ (q−1)T_w + q at ({i},{j})"));
        }
    }
    Ok(r)
}

fn hecke_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let samples = p.samples.unwrap_or(60);
    let seed = p.seed.unwrap_or(2024);
    let mut reports = Vec::new();

    let h2 = HyperHecke::new(2, 2)?;
    let gens = h2.generators()?;
    reports.push(hyperhecke::verify_normal_form(&h2, &gens));
    reports.push(hyperhecke::verify_associativity(&h2, &gens));
    reports.push(hyperhecke::verify_faithfulness(&h2, &gens));
    reports.push(hyperhecke::verify_extreme_components(&gens)?);
    let mut reps = CheckReport::new("coproduct-representatives", "GL(2,2)");
    for t in &gens {
        for a in 0..=2 {
            reps.merge(hyperhecke::verify_coproduct_representatives(t, a)?);
        }
    }
    reports.push(reps);

    let h3 = HyperHecke::new(2, 3)?;
    let poset = h3.poset()?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<HeckeTriple> = (0..samples).map(|_| h3.random_triple(&poset, &mut rng)).collect();
    reports.push(hyperhecke::verify_normal_form(&h3, &sample));
    reports.push(hyperhecke::verify_associativity(&h3, &sample));
    reports.push(hyperhecke::verify_faithfulness(&h3, &sample));
    reports.push(hyperhecke::verify_extreme_components(&sample)?);

    for q in [2, 3] {
        let g1 = HyperHecke::new(1, q)?.generators()?;
        reports.push(hyperhecke::verify_graded_product(&g1, &g1));
        reports.push(classical_hecke(q)?);
    }
    let g1 = HyperHecke::new(1, 2)?.generators()?;
    reports.push(hyperhecke::verify_graded_product(&g1, &gens));
    Ok((reports, json!({ "generators_gl22": gens.len(), "poset_gl23": poset.len(), "samples": samples, "seed": seed })))
}

fn hopflike_suite(p: &SuiteParams) -> Result<Run, SuiteError> {
    let n = p.n.unwrap_or(2);
    let q = p.q.unwrap_or(2);
    let a = p.a.unwrap_or(1);
    let b = p.b.unwrap_or(1);
    let rep = hyperhecke::verify_hopflike(a, b, n, q, p.samples)?;
    let mut r = CheckReport::new("hopflike-run", format!("GL({n},{q}), a={a}, b={b}"));
    r.record(rep.pairs == rep.findings.len() && rep.pairs > 0, || "the sweep did not cover every pair".into());
    Ok((vec![r], serde_json::to_value(&rep).unwrap_or(Value::Null)))
}

pub fn parse_partition(s: &str) -> Result<Partition, SuiteError> {
    s.parse().map_err(|e: crate::combinat::CombinatError| SuiteError::Usage(e.to_string()))
}

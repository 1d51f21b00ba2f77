//! `chartable` and `compute`.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use pshlab::cyclo::CycloNumber;
use pshlab::glfq::{gl_group, kondo_gauss, CharacterTable, GlGroup};
use pshlab::invariants::poly::{CycloPoly, QPoly};
use pshlab::invariants::wreath::{wreath_over_gl, WreathGroup};
use pshlab::invariants::{f_lambda, w_x_brute_force, wreath_invariant};
use pshlab::specht::SymCharacterTable;
use pshlab::suites::parse_partition;

/// A group named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Sym(usize),
    Gl(usize, u32),
    /// Σ_n ∫ GL_m(F_q).
    Wreath(usize, usize, u32),
}

fn parse_gl_args(inner: &str) -> Option<(usize, u32)> {
    let (n, q) = inner.split_once(',')?;
    Some((n.trim().parse().ok()?, q.trim().parse().ok()?))
}

impl std::str::FromStr for GroupSpec {
    type Err = anyhow::Error;

    /// `Sym(n)`, `GL(n,q)`, `Wreath(n,GL(m,q))` or `Wreath(n,C2)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || anyhow!("cannot parse group {s:?}; expected Sym(n), GL(n,q) or Wreath(n,H)");
        let body = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        if let Some(inner) = body("Sym(") {
            return Ok(GroupSpec::Sym(inner.trim().parse().map_err(|_| bad())?));
        }
        if let Some(inner) = body("GL(") {
            let (n, q) = parse_gl_args(inner).ok_or_else(bad)?;
            return Ok(GroupSpec::Gl(n, q));
        }
        if let Some(inner) = body("Wreath(") {
            let (n, h) = inner.split_once(',').ok_or_else(bad)?;
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            return match h.trim() {
                "C2" => Ok(GroupSpec::Wreath(n, 1, 3)),
                h => match h.parse::<GroupSpec>()? {
                    GroupSpec::Gl(m, q) => Ok(GroupSpec::Wreath(n, m, q)),
                    _ => Err(bad()),
                },
            };
        }
        Err(bad())
    }
}

pub fn cyclo_json(c: &CycloNumber, approx: bool) -> Value {
    let mut v = json!({ "exact": c, "text": c.to_string() });
    if approx {
        let (re, im) = c.to_complex();
        v["approx"] = json!([re, im]);
    }
    v
}

fn cyclo_poly_json(p: &CycloPoly, approx: bool) -> Value {
    json!({
        "text": p.to_string(),
        "coeffs": p.coeffs().iter().map(|c| cyclo_json(c, approx)).collect::<Vec<_>>(),
    })
}

fn qpoly_json(p: &QPoly) -> Value {
    json!({ "text": p.to_string(), "coeffs": p })
}

fn dixon_json(table: &CharacterTable) -> Value {
    json!({
        "group": table.group,
        "order": table.order,
        "class_sizes": table.class_sizes,
        "class_orders": table.class_orders,
        "characters": table.irreducibles.iter().map(|c| c.values.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "orthogonality_verified": table.verify().is_ok(),
    })
}

fn dixon_text(table: &CharacterTable) -> String {
    let mut out = format!("{} (order {})\nsizes", table.group, table.order);
    for s in &table.class_sizes {
        out.push_str(&format!("\t{s}"));
    }
    out.push_str("\norders");
    for o in &table.class_orders {
        out.push_str(&format!("\t{o}"));
    }
    for (i, chi) in table.irreducibles.iter().enumerate() {
        out.push_str(&format!("\nχ{i}"));
        for v in &chi.values {
            out.push_str(&format!("\t{v}"));
        }
    }
    out.push_str(&format!("\northogonality verified: {}\n", table.verify().is_ok()));
    out
}

/// The table as JSON together with its human rendering.
pub fn chartable(spec: &GroupSpec) -> Result<(Value, String)> {
    match *spec {
        GroupSpec::Sym(n) => {
            let t = SymCharacterTable::compute(n)?;
            let labels: Vec<String> = t.partitions.iter().map(ToString::to_string).collect();
            let v = json!({
                "group": format!("Sym({n})"),
                "irreducibles": labels,
                "classes": labels,
                "class_sizes": t.class_sizes,
                "values": t.values,
            });
            Ok((v, t.to_csv()))
        }
        GroupSpec::Gl(n, q) => {
            let g = gl_group(n, q)?;
            let t = g.character_table()?;
            Ok((dixon_json(&t), dixon_text(&t)))
        }
        GroupSpec::Wreath(n, m, q) => {
            let g = wreath_over_gl(n, m, q)?;
            let t = g.character_table()?;
            Ok((dixon_json(&t), dixon_text(&t)))
        }
    }
}

pub struct ComputeArgs {
    pub partition: Option<String>,
    pub n: Option<usize>,
    pub lambda: Option<String>,
    pub group: Option<String>,
    pub character: Option<usize>,
    pub q: Option<u32>,
    pub m: Option<usize>,
    pub approx: bool,
}

fn irreducible<'a>(t: &'a CharacterTable, k: usize, name: &str) -> Result<&'a pshlab::classfn::ClassFunction> {
    t.irreducibles.get(k).ok_or_else(|| anyhow!("{name} has {} irreducibles; --char {k} is out of range", t.irreducibles.len()))
}

pub fn compute(kind: &str, a: &ComputeArgs) -> Result<(Value, String)> {
    match kind {
        "f-lambda" => {
            let text = a.partition.as_deref().or(a.lambda.as_deref()).context("f-lambda needs a partition such as \"(3,2)\"")?;
            let lam = parse_partition(text)?;
            let f = f_lambda(&lam);
            Ok((json!({ "lambda": lam.to_string(), "f": qpoly_json(&f) }), format!("f_{lam}(x) = {f}\n")))
        }
        "w-x" => {
            let text = a.lambda.as_deref().or(a.partition.as_deref()).context("w-x needs --lambda")?;
            let lam = parse_partition(text)?;
            let n = a.n.unwrap_or(lam.n());
            if n != lam.n() {
                bail!("{lam} is not a partition of {n}");
            }
            let t = SymCharacterTable::compute(n)?;
            let i = t.index_of(&lam).expect("partition of n");
            let w = w_x_brute_force(n, |ty| t.values[i][t.index_of(ty).expect("cycle type")]);
            Ok((json!({ "n": n, "lambda": lam.to_string(), "w": qpoly_json(&w) }), format!("W^x(ρ_{lam}) = {w}\n")))
        }
        "kondo" => {
            let spec: GroupSpec = a.group.as_deref().context("kondo needs --group GL(n,q)")?.parse()?;
            let GroupSpec::Gl(n, q) = spec else { bail!("kondo is defined on GL(n,q)") };
            let g: std::sync::Arc<GlGroup> = gl_group(n, q)?;
            let t = g.character_table()?;
            let k = a.character.unwrap_or(0);
            let w = kondo_gauss(&g, irreducible(&t, k, g.name())?)?;
            let v = json!({ "group": g.name(), "char": k, "w": cyclo_json(&w, a.approx) });
            Ok((v, format!("W_{}(χ{k}) = {w}\n", g.name())))
        }
        "wreath-w" => {
            let n = a.n.context("wreath-w needs --n")?;
            let (m, q) = (a.m.unwrap_or(1), a.q.unwrap_or(3));
            let g: WreathGroup = wreath_over_gl(n, m, q)?;
            let t = g.character_table()?;
            let k = a.character.unwrap_or(0);
            let w = wreath_invariant(&g, irreducible(&t, k, g.name())?)?;
            let v = json!({ "group": g.name(), "char": k, "w": cyclo_poly_json(&w, a.approx) });
            Ok((v, format!("W_{}(χ{k}) = {w}\n", g.name())))
        }
        other => bail!("unknown compute kind {other:?}; expected f-lambda, w-x, kondo or wreath-w"),
    }
}

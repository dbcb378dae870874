//! Report documents: canonical JSON with sorted keys and a plain-text table
//! rendering of the same document.

use std::fmt::Write as _;

use serde_json::{json, Value};
use sodlab_core::kernel::fmt_rational;
use sodlab_core::partition::PartitionCell;
use sodlab_core::rep::{DestabilizerCase, DestabilizerReport, RepSpec};
use sodlab_core::sod::{EpsStatus, Genericity, NccrCertificate, RefinedComponent, SodComponent, TruncationFrontier, Verdict, WindowKind};
use sodlab_core::zonotope::FaceSignature;
use sodlab_core::{Rational, RationalVector};

pub const TOOL_NAME: &str = "sodlab";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub fn rational(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

/// Rational coordinates as `"p/q"` strings.
pub fn rational_vector(v: &RationalVector) -> Value {
    Value::Array(v.0.iter().map(rational).collect())
}

/// Integral weights as integer arrays, anything else as strings.
pub fn weight(v: &RationalVector) -> Value {
    match v.to_ints() {
        Some(xs) => json!(xs),
        None => rational_vector(v),
    }
}

pub fn weights(vs: &[RationalVector]) -> Value {
    Value::Array(vs.iter().map(weight).collect())
}

pub fn representation(rep: &RepSpec) -> Value {
    let distinct: Vec<Value> =
        rep.distinct().iter().map(|(w, m)| json!({ "weight": weight(w), "mult": m })).collect();
    json!({ "rank": rep.rank(), "dim": rep.dim(), "weights": distinct })
}

pub fn signature(s: &FaceSignature) -> Value {
    json!({
        "r": rational(&s.r),
        "s_plus": s.s_plus,
        "s_minus": s.s_minus,
        "s_zero": s.s_zero,
        "trivial": s.trivial,
    })
}

pub fn destabilizer(d: &DestabilizerReport) -> Value {
    let case = match d.case {
        DestabilizerCase::HasStablePoint => "has_stable_point",
        DestabilizerCase::TrivialActingSubgroup => "trivial_acting_subgroup",
        DestabilizerCase::CentralAttractor => "central_attractor",
    };
    json!({
        "case": case,
        "sigma": d.sigma.as_ref().map(weight),
        "nu": rational_vector(&d.nu),
        "sigma_acts_trivially": d.sigma_acts_trivially,
        "trivial_directions": weights(&d.trivial_directions),
    })
}

pub fn cell(c: &PartitionCell) -> Value {
    json!({
        "signature": signature(&c.signature),
        "lambda": weight(&c.lambda),
        "nu": rational_vector(&c.nu_levi),
        "chi_p": rational_vector(&c.chi_p),
        "members": weights(&c.members),
    })
}

fn summands(u: &[(RationalVector, u64)]) -> Value {
    Value::Array(u.iter().map(|(w, d)| json!({ "highest_weight": weight(w), "dim": d })).collect())
}

pub fn component(c: &SodComponent) -> Value {
    let window_kind = match &c.window_kind {
        WindowKind::RelIntScaled(r) => json!({ "relint_scaled": rational(r) }),
        WindowKind::HalfSizeEps(e) => json!({ "half_size_eps": rational_vector(e) }),
    };
    json!({
        "index": c.index,
        "slot": c.slot,
        "is_d0": c.is_d0,
        "signature": signature(&c.signature),
        "lambda": weight(&c.lambda),
        "levi": c.levi_label,
        "nu": rational_vector(&c.nu),
        "window_kind": window_kind,
        "window": weights(&c.window),
        "u_summands": summands(&c.u_summands),
        "coinvariants": representation(&c.coinvariants),
        "algebra": {
            "text": c.algebra.text,
            "group": c.algebra.group,
            "window_size": c.algebra.window_size,
            "coinvariant_dim": c.algebra.coinvariant_dim,
            "rank_of_u": c.algebra.rank_of_u,
        },
    })
}

pub fn refined(l: &RefinedComponent) -> Value {
    json!({
        "index": l.index,
        "parent": l.parent,
        "depth": l.depth,
        "lambda": weight(&l.lambda),
        "levi": l.levi_label,
        "nu": rational_vector(&l.nu),
        "epsilon": rational_vector(&l.epsilon),
        "window": weights(&l.window),
        "u_summands": summands(&l.u_summands),
        "algebra": l.algebra.text,
    })
}

pub fn certificate(component: usize, c: &NccrCertificate) -> Value {
    let eps_status = match c.eps_status {
        EpsStatus::Fails => "fails",
        EpsStatus::WeaklyGeneric => "weakly_generic",
        EpsStatus::Generic => "generic",
    };
    let genericity = match c.genericity {
        Genericity::CheckedToricRule(b) => json!({ "checked_toric_rule": b }),
        Genericity::UserAsserted(b) => json!({ "user_asserted": b }),
        Genericity::Unknown => json!("unknown"),
    };
    let verdict = match c.verdict {
        Verdict::TwistedNCCR => "twisted_nccr",
        Verdict::FiniteGlobalDimOnly => "finite_global_dimension_only",
        Verdict::Unknown => "unknown",
    };
    json!({
        "component": component,
        "lambda": weight(&c.lambda),
        "nu": rational_vector(&c.nu),
        "levi": c.levi_label,
        "quasi_symmetric": c.quasi_symmetric,
        "epsilon": rational_vector(&c.epsilon),
        "eps_status": eps_status,
        "window": weights(&c.window),
        "window_nonempty": c.window_nonempty,
        "prazno_points": weights(&c.prazno_points),
        "prazno_empty": c.prazno_empty,
        "genericity": genericity,
        "verdict": verdict,
    })
}

pub fn frontier(f: &TruncationFrontier) -> Value {
    json!({
        "box": f.box_radius,
        "r_max": rational(&f.r_max),
        "complete_radius": f.complete_radius.as_ref().map(rational),
        "omitted_radii": f.omitted_radii.iter().map(rational).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with keys in sorted order and a trailing newline.
pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("values always serialize");
    s.push('\n');
    s
}

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => render_json(doc),
        Format::Text => render_text(doc),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("({})", xs.iter().map(compact).collect::<Vec<_>>().join(",")),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn len_of(v: &Value) -> usize {
    v.as_array().map_or(0, Vec::len)
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(header.iter().map(|h| h.to_string()).collect()));
    for r in rows {
        let _ = writeln!(out, "{}", line(r.clone()));
    }
}

fn sizes(sig: &Value) -> String {
    format!("{}/{}/{}", len_of(&sig["s_plus"]), len_of(&sig["s_minus"]), len_of(&sig["s_zero"]))
}

/// Human-readable summary of a report document.
pub fn render_text(doc: &Value) -> String {
    let mut out = String::new();
    let tool = &doc["tool"];
    let _ = writeln!(out, "{} {} {}", compact(&tool["name"]), compact(&tool["version"]), compact(&doc["subcommand"]));
    if let Some(input) = doc.get("input") {
        let _ = writeln!(out, "group {}  dim W = {}  mode {}", compact(&input["group"]), compact(&input["representation"]["dim"]), compact(&input["mode"]));
    }
    if let Some(a) = doc.get("analysis") {
        let _ = writeln!(
            out,
            "levi label {}  rho {}  quasi-symmetric {}  T-stable point {}",
            compact(&a["label"]),
            compact(&a["rho_bar"]),
            compact(&a["quasi_symmetric"]),
            compact(&a["t_stable_point"])
        );
        let d = &a["destabilizer"];
        if d["sigma"] != Value::Null {
            let _ = writeln!(out, "destabilizer sigma {}  case {}", compact(&d["sigma"]), compact(&d["case"]));
        }
    }
    if let Some(Value::Array(cells)) = doc.get("partition") {
        let _ = writeln!(out, "\npartition ({} cells)", cells.len());
        let rows: Vec<Vec<String>> = cells
            .iter()
            .map(|c| {
                vec![
                    compact(&c["signature"]["r"]),
                    sizes(&c["signature"]),
                    compact(&c["lambda"]),
                    len_of(&c["members"]).to_string(),
                    compact(&c["members"]),
                ]
            })
            .collect();
        table(&mut out, &["r", "S+/S-/S0", "lambda", "#", "members"], &rows);
    }
    if let Some(Value::Array(comps)) = doc.get("components") {
        let _ = writeln!(out, "\ncomponents ({})", comps.len());
        let rows: Vec<Vec<String>> = comps
            .iter()
            .map(|c| {
                vec![
                    compact(&c["index"]),
                    compact(&c["slot"]),
                    compact(&c["signature"]["r"]),
                    sizes(&c["signature"]),
                    compact(&c["lambda"]),
                    len_of(&c["window"]).to_string(),
                    compact(&c["algebra"]["text"]),
                ]
            })
            .collect();
        table(&mut out, &["index", "slot", "r", "S+/S-/S0", "lambda", "|L|", "algebra"], &rows);
    }
    if let Some(Value::Array(leaves)) = doc.get("refinement") {
        let _ = writeln!(out, "\nrefinement ({} leaves)", leaves.len());
        let rows: Vec<Vec<String>> = leaves
            .iter()
            .map(|l| {
                vec![
                    compact(&l["index"]),
                    compact(&l["parent"]),
                    compact(&l["lambda"]),
                    compact(&l["epsilon"]),
                    len_of(&l["window"]).to_string(),
                    compact(&l["algebra"]),
                ]
            })
            .collect();
        table(&mut out, &["index", "parent", "lambda", "epsilon", "|L|", "algebra"], &rows);
    }
    if let Some(Value::Array(certs)) = doc.get("certificates") {
        let _ = writeln!(out, "\ncertificates");
        let rows: Vec<Vec<String>> = certs
            .iter()
            .map(|c| {
                let g = match &c["genericity"] {
                    Value::Object(m) => m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(","),
                    other => compact(other),
                };
                vec![
                    compact(&c["component"]),
                    compact(&c["lambda"]),
                    compact(&c["epsilon"]),
                    compact(&c["eps_status"]),
                    len_of(&c["window"]).to_string(),
                    compact(&c["prazno_points"]),
                    g,
                    compact(&c["verdict"]),
                ]
            })
            .collect();
        table(&mut out, &["component", "lambda", "epsilon", "eps", "|L|", "prazno", "genericity", "verdict"], &rows);
    }
    if let Some(Value::Array(blocks)) = doc.get("hilbert") {
        let _ = writeln!(out, "\nhom blocks");
        let rows: Vec<Vec<String>> = blocks
            .iter()
            .map(|b| vec![compact(&b["component"]), compact(&b["mu"]), compact(&b["mu_prime"]), compact(&b["dims"])])
            .collect();
        table(&mut out, &["component", "mu", "mu'", "dims by degree"], &rows);
    }
    if let Some(f) = doc.get("frontier") {
        let _ = writeln!(
            out,
            "\nbox {}  r_max {}  complete up to r = {}  omitted radii {}",
            compact(&f["box"]),
            compact(&f["r_max"]),
            compact(&f["complete_radius"]),
            compact(&f["omitted_radii"])
        );
    }
    if let Some(e) = doc.get("error") {
        let _ = writeln!(out, "\nerror ({}): {}", compact(&e["kind"]), compact(&e["message"]));
    }
    out
}

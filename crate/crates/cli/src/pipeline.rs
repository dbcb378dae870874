//! Subcommand stages over one resolved job.

use serde_json::{json, Map, Value};
use sodlab_core::characters::hom_block_dims;
use sodlab_core::partition::{partition_region, Mode};
use sodlab_core::rep::{coinvariant_rep, find_destabilizer, has_t_stable_point, is_quasi_symmetric};
use sodlab_core::sod::{certify_nccr, default_epsilon, enumerate_sod, quasi_symmetric_refinement, SodReport};
use sodlab_core::{Result, SodError};

use crate::config::ResolvedJob;
use crate::report::{self, TOOL_NAME, TOOL_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subcommand {
    Analyze,
    Partition,
    Sod,
    Nccr,
    Hilbert,
}

impl Subcommand {
    pub fn name(self) -> &'static str {
        match self {
            Subcommand::Analyze => "analyze",
            Subcommand::Partition => "partition",
            Subcommand::Sod => "sod",
            Subcommand::Nccr => "nccr",
            Subcommand::Hilbert => "hilbert",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The weights do not positively span; the document holds the
    /// destabilizer data and an `error` entry.
    PreconditionFailed,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: Value,
    pub status: Status,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::PreconditionFailed => 3,
        }
    }
}

fn input_echo(job: &ResolvedJob) -> Value {
    let c = &job.config;
    json!({
        "preset": c.preset,
        "group": job.tag.to_string(),
        "representation": report::representation(&job.rep),
        "shift": report::rational_vector(&job.profile.nu_global),
        "epsilon": report::rational_vector(&job.epsilon),
        "epsilon_given": job.epsilon_given,
        "twist": job.twist.as_ref().map(|t| json!({ "columns": t.columns(), "offset": t.offset() })),
        "r_max": report::rational(&job.r_max),
        "box": c.box_radius,
        "mode": match job.profile.mode { Mode::Standard => "standard", Mode::QuasiSymmetric => "quasi_symmetric" },
        "genericity_assertion": c.genericity_assertion,
        "degree_bound": c.degree_bound,
        "hilbert_components": c.hilbert_components,
    })
}

fn analysis(job: &ResolvedJob) -> Result<Value> {
    let d = find_destabilizer(&job.rep, &job.datum)?;
    Ok(json!({
        "label": job.datum.dynkin_label(),
        "rank": job.datum.rank(),
        "rho_bar": report::rational_vector(job.datum.rho_bar()),
        "positive_roots": report::weights(job.datum.positive_roots()),
        "quasi_symmetric": is_quasi_symmetric(&job.rep),
        "t_stable_point": has_t_stable_point(&job.rep),
        "destabilizer": report::destabilizer(&d),
    }))
}

fn sod(job: &ResolvedJob) -> Result<SodReport> {
    enumerate_sod(&job.datum, &job.rep, &job.profile, &job.r_max, job.config.box_radius)
}

fn certificates(job: &ResolvedJob, sod: &SodReport) -> Result<Value> {
    let mut out = Vec::new();
    for c in &sod.components {
        let (epsilon, assertion) = if c.lambda.is_zero() {
            (job.epsilon.clone(), job.config.genericity_assertion)
        } else {
            let levi = job.datum.levi(&c.lambda);
            let gens = coinvariant_rep(&job.rep, &c.lambda);
            (default_epsilon(&levi.datum, gens.weights()), None)
        };
        let cert = certify_nccr(&job.datum, &job.rep, &c.lambda, &c.nu, &epsilon, job.twist.as_ref(), assertion)?;
        out.push(report::certificate(c.index, &cert));
    }
    Ok(Value::Array(out))
}

fn hilbert(job: &ResolvedJob, sod: &SodReport) -> Result<Value> {
    let last = sod.components.len() - 1;
    let selected = job.config.hilbert_components.clone().unwrap_or_else(|| vec![last]);
    let mut out = Vec::new();
    for k in selected {
        let c = sod.components.get(k).ok_or_else(|| {
            SodError::InvalidParameters(format!("component {k} does not exist; there are {}", sod.components.len()))
        })?;
        let levi = job.datum.levi(&c.lambda);
        for mu in &c.window {
            for mu_prime in &c.window {
                let dims = hom_block_dims(&levi.datum, mu, mu_prime, &c.coinvariants, job.config.degree_bound)?;
                out.push(json!({
                    "component": k,
                    "mu": report::weight(mu),
                    "mu_prime": report::weight(mu_prime),
                    "dims": dims.dims(),
                }));
            }
        }
    }
    Ok(Value::Array(out))
}

/// Runs `sub` and assembles its report document. Errors are validation
/// failures; a missing T-stable point yields a document with
/// [`Status::PreconditionFailed`].
pub fn run(sub: Subcommand, job: &ResolvedJob) -> Result<Outcome> {
    let mut doc = Map::new();
    doc.insert("tool".into(), json!({ "name": TOOL_NAME, "version": TOOL_VERSION }));
    doc.insert("subcommand".into(), json!(sub.name()));
    doc.insert("input".into(), input_echo(job));
    doc.insert("analysis".into(), analysis(job)?);
    if sub != Subcommand::Analyze && !has_t_stable_point(&job.rep) {
        let err = match partition_region(&job.datum, &job.rep, &job.profile, job.config.box_radius) {
            Err(e @ SodError::NoStablePoint { .. }) => e,
            Err(e) => return Err(e),
            Ok(_) => unreachable!("partition needs a T-stable point"),
        };
        doc.insert("error".into(), json!({ "kind": "no_t_stable_point", "message": err.to_string() }));
        return Ok(Outcome { document: Value::Object(doc), status: Status::PreconditionFailed });
    }
    match sub {
        Subcommand::Analyze => {}
        Subcommand::Partition => {
            let cells = partition_region(&job.datum, &job.rep, &job.profile, job.config.box_radius)?;
            doc.insert("partition".into(), Value::Array(cells.iter().map(report::cell).collect()));
        }
        Subcommand::Sod => {
            let s = sod(job)?;
            doc.insert("components".into(), Value::Array(s.components.iter().map(report::component).collect()));
            doc.insert("absorbed".into(), Value::Array(s.absorbed.iter().map(report::cell).collect()));
            doc.insert("frontier".into(), report::frontier(&s.frontier));
            if job.profile.mode == Mode::QuasiSymmetric {
                let leaves = quasi_symmetric_refinement(&job.datum, &job.rep, &s.components, Some(&job.epsilon))?;
                doc.insert("refinement".into(), Value::Array(leaves.iter().map(report::refined).collect()));
            }
        }
        Subcommand::Nccr => {
            let s = sod(job)?;
            doc.insert("components".into(), Value::Array(s.components.iter().map(report::component).collect()));
            doc.insert("certificates".into(), certificates(job, &s)?);
            doc.insert("frontier".into(), report::frontier(&s.frontier));
        }
        Subcommand::Hilbert => {
            let s = sod(job)?;
            doc.insert("components".into(), Value::Array(s.components.iter().map(report::component).collect()));
            doc.insert("hilbert".into(), hilbert(job, &s)?);
            doc.insert("frontier".into(), report::frontier(&s.frontier));
        }
    }
    Ok(Outcome { document: Value::Object(doc), status: Status::Ok })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::JobConfig;

    fn job(preset: &str) -> ResolvedJob {
        JobConfig { preset: Some(preset.into()), ..JobConfig::from_json("{}").unwrap() }.resolve().unwrap()
    }

    #[test]
    fn pfaffian_certificates() {
        let out = run(Subcommand::Nccr, &job("pfaffian:n=1,h=3")).unwrap();
        let certs = out.document["certificates"].as_array().unwrap();
        let d0 = certs.last().unwrap();
        assert_eq!(d0["verdict"], json!("twisted_nccr"));
        assert_eq!(d0["prazno_empty"], json!(true));
        assert_eq!(d0["genericity"], json!({ "user_asserted": true }));
        let out = run(Subcommand::Nccr, &job("pfaffian:n=1,h=4")).unwrap();
        assert_eq!(out.document["certificates"].as_array().unwrap().last().unwrap()["prazno_empty"], json!(false));
    }

    #[test]
    fn hilbert_block() {
        let out = run(Subcommand::Hilbert, &job("pfaffian:n=1,h=3")).unwrap();
        let b = &out.document["hilbert"][0];
        assert_eq!(b["dims"], json!([1, 0, 3, 0, 6, 0, 10]));
    }

    #[test]
    fn unstable_representation() {
        let c = JobConfig::from_json(r#"{"group": "Torus(1)", "representation": {"weights": [{"weight": ["1"], "mult": 2}]}}"#)
            .unwrap();
        let out = run(Subcommand::Sod, &c.resolve().unwrap()).unwrap();
        assert_eq!(out.exit_code(), 3);
        assert_eq!(out.document["analysis"]["destabilizer"]["sigma"], json!([-1]));
        assert!(out.document["error"]["message"].as_str().unwrap().contains("T-stable"));
    }
}

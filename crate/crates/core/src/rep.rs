//! Representations as weight multisets: sign partitions, quasi-symmetry,
//! stable points, destabilizers and coinvariants.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Result, SodError};
use crate::kernel::lp::Relation;
use crate::kernel::{
    kernel_basis, lp_optimize, rat, strict_feasible, Bound, BoxedLinearProgram, CoweightVector, LpStatus, Matrix,
    Rational, RationalVector, Sense,
};
use crate::roots::{GroupTag, RootDatum};

pub use crate::kernel::{twist_member, TwistData};

/// The weights of `W` as an indexed list. Indices are fixed once at
/// construction: sorted by weight, then by input position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    rank: usize,
    expanded: Vec<RationalVector>,
}

impl RepSpec {
    pub fn new(rank: usize, weights: Vec<(RationalVector, usize)>) -> Result<RepSpec> {
        let mut tagged = Vec::new();
        for (pos, (w, m)) in weights.into_iter().enumerate() {
            if w.dim() != rank {
                return Err(SodError::DimensionMismatch { expected: rank, found: w.dim() });
            }
            if !w.is_integral() {
                return Err(SodError::NotIntegral(w.to_string()));
            }
            if m == 0 {
                return Err(SodError::InvalidParameters(format!("weight {w} has multiplicity 0")));
            }
            for _ in 0..m {
                tagged.push((w.clone(), pos));
            }
        }
        tagged.sort();
        Ok(RepSpec { rank, expanded: tagged.into_iter().map(|(w, _)| w).collect() })
    }

    /// Each listed weight with multiplicity one.
    pub fn from_weights(rank: usize, weights: Vec<RationalVector>) -> Result<RepSpec> {
        RepSpec::new(rank, weights.into_iter().map(|w| (w, 1)).collect())
    }

    pub fn zero(rank: usize) -> RepSpec {
        RepSpec { rank, expanded: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `d = dim W`.
    pub fn dim(&self) -> usize {
        self.expanded.len()
    }

    pub fn weights(&self) -> &[RationalVector] {
        &self.expanded
    }

    /// Distinct weights with multiplicities, in index order.
    pub fn distinct(&self) -> Vec<(RationalVector, usize)> {
        let mut out: Vec<(RationalVector, usize)> = Vec::new();
        for w in &self.expanded {
            match out.last_mut() {
                Some((v, m)) if v == w => *m += 1,
                _ => out.push((w.clone(), 1)),
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &RepSpec) -> Result<RepSpec> {
        if self.rank != other.rank {
            return Err(SodError::DimensionMismatch { expected: self.rank, found: other.rank });
        }
        RepSpec::from_weights(self.rank, self.expanded.iter().chain(&other.expanded).cloned().collect())
    }

    pub fn dual(&self) -> RepSpec {
        RepSpec::from_weights(self.rank, self.expanded.iter().map(|w| -w).collect()).expect("same rank")
    }

    pub fn power(&self, h: usize) -> RepSpec {
        let mut ws = Vec::with_capacity(self.dim() * h);
        for _ in 0..h {
            ws.extend(self.expanded.iter().cloned());
        }
        RepSpec::from_weights(self.rank, ws).expect("same rank")
    }

    /// Weights of `Sym^d`.
    pub fn sym_power(&self, d: usize) -> RepSpec {
        let n = self.dim();
        let mut out = Vec::new();
        let mut idx = vec![0usize; d];
        if n == 0 {
            return if d == 0 { RepSpec::trivial(self.rank) } else { RepSpec::zero(self.rank) };
        }
        loop {
            let mut s = RationalVector::zeros(self.rank);
            for &i in &idx {
                s = &s + &self.expanded[i];
            }
            out.push(s);
            // Next nondecreasing index tuple.
            let Some(k) = (0..d).rev().find(|&k| idx[k] < n - 1) else { break };
            let v = idx[k] + 1;
            for slot in idx.iter_mut().skip(k) {
                *slot = v;
            }
        }
        RepSpec::from_weights(self.rank, out).expect("same rank")
    }

    /// The one-dimensional trivial representation.
    pub fn trivial(rank: usize) -> RepSpec {
        RepSpec { rank, expanded: vec![RationalVector::zeros(rank)] }
    }

    /// Standard representation of a simple catalog factor placed at
    /// coordinate `offset` of a group of rank `rank`.
    pub fn standard(tag: &GroupTag, offset: usize, rank: usize) -> Result<RepSpec> {
        let local: Vec<RationalVector> = match tag {
            GroupTag::Torus(n) | GroupTag::GL(n) => (0..*n).map(|i| RationalVector::unit(*n, i)).collect(),
            GroupTag::SL(n) => {
                let r = n - 1;
                let mut ws: Vec<RationalVector> = (0..r).map(|i| RationalVector::unit(r, i)).collect();
                ws.push(RationalVector(vec![rat(-1); r]));
                ws
            }
            GroupTag::Sp(m) => {
                let n = m / 2;
                let mut ws = Vec::new();
                for i in 0..n {
                    ws.push(RationalVector::unit(n, i));
                    ws.push(-&RationalVector::unit(n, i));
                }
                ws
            }
            GroupTag::Product(_) => {
                return Err(SodError::InvalidParameters(
                    "the standard representation is defined per simple factor".into(),
                ))
            }
        };
        let width = tag.rank();
        if offset + width > rank {
            return Err(SodError::DimensionMismatch { expected: rank, found: offset + width });
        }
        let ws = local
            .into_iter()
            .map(|w| {
                let mut v = RationalVector::zeros(rank);
                for i in 0..width {
                    v[offset + i] = w[i].clone();
                }
                v
            })
            .collect();
        RepSpec::from_weights(rank, ws)
    }

    /// Restriction to the indices `idx` (in the given order).
    pub fn restrict(&self, idx: &[usize]) -> RepSpec {
        RepSpec::from_weights(self.rank, idx.iter().map(|&i| self.expanded[i].clone()).collect()).expect("same rank")
    }
}

/// The index sets `T_λ^{+,0,-}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignPartition {
    pub t_plus: Vec<usize>,
    pub t_zero: Vec<usize>,
    pub t_minus: Vec<usize>,
}

pub fn weight_signs(rep: &RepSpec, lambda: &CoweightVector) -> SignPartition {
    let mut s = SignPartition::default();
    for (i, w) in rep.weights().iter().enumerate() {
        let p = lambda.dot(w);
        if p.is_positive() {
            s.t_plus.push(i);
        } else if p.is_negative() {
            s.t_minus.push(i);
        } else {
            s.t_zero.push(i);
        }
    }
    s
}

/// Whether `d` is a nonnegative combination of `gens`.
pub fn in_cone(gens: &[RationalVector], d: &RationalVector) -> bool {
    let mut p = BoxedLinearProgram::new(gens.len());
    for i in 0..gens.len() {
        p.set_bounds(i, Bound::Closed(Rational::zero()), Bound::Free);
    }
    for k in 0..d.dim() {
        let row = gens.iter().map(|g| g[k].clone()).collect();
        p.add_equality(row, d[k].clone()).expect("row length matches");
    }
    strict_feasible(&p)
}

fn distinct_weights(rep: &RepSpec) -> Vec<RationalVector> {
    rep.distinct().into_iter().map(|(w, _)| w).collect()
}

/// First of `e_1, -e_1, e_2, …` outside the cone spanned by the weights.
fn uncovered_direction(rep: &RepSpec) -> Option<RationalVector> {
    let gens = distinct_weights(rep);
    for k in 0..rep.rank() {
        for sign in [1, -1] {
            let d = RationalVector::unit(rep.rank(), k).scale(&rat(sign));
            if !in_cone(&gens, &d) {
                return Some(d);
            }
        }
    }
    None
}

/// The weights positively span `X(T)_ℝ`.
pub fn has_t_stable_point(rep: &RepSpec) -> bool {
    uncovered_direction(rep).is_none()
}

/// Every line through the origin carries weights summing to zero.
pub fn is_quasi_symmetric(rep: &RepSpec) -> bool {
    let mut lines: BTreeMap<RationalVector, RationalVector> = BTreeMap::new();
    for w in rep.weights() {
        if w.is_zero() {
            continue;
        }
        let mut key = w.primitive();
        if key.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            key = -&key;
        }
        let sum = lines.entry(key).or_insert_with(|| RationalVector::zeros(rep.rank()));
        *sum = &*sum + w;
    }
    lines.values().all(RationalVector::is_zero)
}

/// Weights of the coinvariants `W_λ`, i.e. of `T_λ^0`.
pub fn coinvariant_rep(rep: &RepSpec, lambda: &CoweightVector) -> RepSpec {
    rep.restrict(&weight_signs(rep, lambda).t_zero)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DestabilizerCase {
    HasStablePoint,
    TrivialActingSubgroup,
    CentralAttractor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabilizerReport {
    pub sigma: Option<CoweightVector>,
    /// Weyl average of `sigma` (zero when there is no destabilizer).
    pub nu: CoweightVector,
    pub case: DestabilizerCase,
    /// `sigma` pairs to zero with every weight.
    pub sigma_acts_trivially: bool,
    /// Basis of the coweights pairing to zero with every weight.
    pub trivial_directions: Vec<CoweightVector>,
}

/// A canonical `σ ≠ 0` with `⟨σ,β_i⟩ ≤ 0` for all `i`, when one exists.
///
/// Canonical form: maximize `⟨σ,d⟩` over the box `[-1,1]^n` for the first
/// uncovered direction `d`, fix that value, minimize the coordinates in order,
/// then scale to a primitive integral vector.
pub fn find_destabilizer(rep: &RepSpec, datum: &RootDatum) -> Result<DestabilizerReport> {
    let n = rep.rank();
    if datum.rank() != n {
        return Err(SodError::DimensionMismatch { expected: datum.rank(), found: n });
    }
    let rows: Vec<RationalVector> = distinct_weights(rep);
    let trivial_directions = if rows.is_empty() {
        (0..n).map(|k| RationalVector::unit(n, k)).collect()
    } else {
        kernel_basis(&Matrix::from_rows(&rows))
    };
    let Some(d) = uncovered_direction(rep) else {
        return Ok(DestabilizerReport {
            sigma: None,
            nu: RationalVector::zeros(n),
            case: DestabilizerCase::HasStablePoint,
            sigma_acts_trivially: false,
            trivial_directions,
        });
    };
    let mut p = BoxedLinearProgram::new(n);
    for k in 0..n {
        p.set_bounds(k, Bound::Closed(rat(-1)), Bound::Closed(rat(1)));
    }
    for b in &rows {
        let mut row = b.0.clone();
        row.resize(p.num_vars(), Rational::zero());
        p.add_inequality(row, Relation::Le, Rational::zero())?;
    }
    let pad = |v: &RationalVector, len: usize| {
        let mut r = v.0.clone();
        r.resize(len, Rational::zero());
        r
    };
    p.set_objective(pad(&d, p.num_vars()))?;
    let best = lp_optimize(&p, Sense::Maximize)?;
    let value = best.value.expect("bounded box with the origin feasible");
    p.add_equality(pad(&d, p.num_vars()), value)?;
    let sigma = lex_min(&mut p, n)?.primitive();
    let nu = datum.average_coweight(&sigma);
    let sigma_acts_trivially = rep.weights().iter().all(|b| sigma.dot(b).is_zero());
    let case = if nu.is_zero() { DestabilizerCase::TrivialActingSubgroup } else { DestabilizerCase::CentralAttractor };
    Ok(DestabilizerReport { sigma: Some(sigma), nu, case, sigma_acts_trivially, trivial_directions })
}

/// Minimizes the first `n` coordinates one after another, fixing each
/// optimum before moving on. The program must be bounded in those coordinates.
pub(crate) fn lex_min(p: &mut BoxedLinearProgram, n: usize) -> Result<RationalVector> {
    let mut out = RationalVector::zeros(n);
    for k in 0..n {
        let mut c = vec![Rational::zero(); p.num_vars()];
        c[k] = rat(1);
        p.set_objective(c.clone())?;
        let res = lp_optimize(p, Sense::Minimize)?;
        if res.status != LpStatus::Optimal {
            return Err(SodError::InvalidParameters(format!(
                "coordinate {k} is unbounded below on the canonicalization polytope"
            )));
        }
        let v = res.value.expect("optimal");
        p.add_equality(c, v.clone())?;
        out[k] = v;
    }
    Ok(out)
}

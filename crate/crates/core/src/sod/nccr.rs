//! Certificates for the twisted crepant-resolution conditions at a Levi.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Result, SodError};
use crate::kernel::{enumerate_lattice, frac, in_span, span_basis, CoweightVector, RationalVector, TwistData};
use crate::rep::{coinvariant_rep, is_quasi_symmetric, RepSpec};
use crate::roots::RootDatum;
use crate::zonotope::{
    bounding_box, invariant_parallel, is_generic, is_weakly_generic, member, member_eps, EpsMode, EpsShift, Variant,
    ZonotopeQuery,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EpsStatus {
    Fails,
    WeaklyGeneric,
    Generic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Genericity {
    /// Decided by the two-per-side rule (the Levi is a torus).
    CheckedToricRule(bool),
    UserAsserted(bool),
    Unknown,
}

impl Genericity {
    pub fn value(&self) -> Option<bool> {
        match self {
            Genericity::CheckedToricRule(b) | Genericity::UserAsserted(b) => Some(*b),
            Genericity::Unknown => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    TwistedNCCR,
    /// A hypothesis fails definitely; only finiteness of global dimension
    /// remains.
    FiniteGlobalDimOnly,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NccrCertificate {
    pub lambda: CoweightVector,
    pub nu: RationalVector,
    pub levi_label: String,
    pub quasi_symmetric: bool,
    pub epsilon: RationalVector,
    pub eps_status: EpsStatus,
    /// `X(T̄)^λ_τ ∩ (ν − ρ̄_λ + ½(Σ̄_λ)_ε)`.
    pub window: Vec<RationalVector>,
    pub window_nonempty: bool,
    /// Points of `X(T̄)^λ_τ ∩ (ν − ρ̄_λ + ½(Σ̄_λ)_{±ε})` outside `ν − ρ̄_λ + ½Σ_λ`.
    pub prazno_points: Vec<RationalVector>,
    pub prazno_empty: bool,
    pub genericity: Genericity,
    pub verdict: Verdict,
}

/// Every line through the origin that carries a nonzero weight carries at
/// least two weights (with multiplicity) on each side of the origin.
pub fn toric_two_per_side(weights: &[RationalVector]) -> bool {
    let mut sides: BTreeMap<RationalVector, (usize, usize)> = BTreeMap::new();
    for w in weights {
        if w.is_zero() {
            continue;
        }
        let p = w.primitive();
        let lead_negative = p.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let (key, positive) = if lead_negative { (-&p, false) } else { (p, true) };
        let e = sides.entry(key).or_insert((0, 0));
        if positive {
            e.0 += 1;
        } else {
            e.1 += 1;
        }
    }
    sides.values().all(|&(a, b)| a >= 2 && b >= 2)
}

/// `0` when no nonzero invariant vector is parallel to the span of
/// `generators`; otherwise the first weakly generic vector among the
/// invariant basis vectors, their sum and the negatives of these.
pub fn default_epsilon(datum: &RootDatum, generators: &[RationalVector]) -> RationalVector {
    let n = datum.rank();
    let span = span_basis(generators, n);
    let inv = invariant_parallel(datum, &span);
    if inv.is_empty() {
        return RationalVector::zeros(n);
    }
    let mut cands = inv.clone();
    if inv.len() > 1 {
        cands.push(inv.iter().fold(RationalVector::zeros(n), |s, v| &s + v));
    }
    let negs: Vec<RationalVector> = cands.iter().map(|v| -v).collect();
    cands.extend(negs);
    cands
        .iter()
        .find(|e| is_weakly_generic(e, datum, generators).unwrap_or(false))
        .unwrap_or(&cands[0])
        .clone()
}

/// Evaluates the conditions under which `Λ^ε_{λ,ν,τ}` is a twisted
/// non-commutative crepant resolution of `(Sym W_λ)^{G^λ}`.
///
/// `assertion` supplies the genericity of `W_λ` when the Levi has roots.
pub fn certify_nccr(
    datum: &RootDatum,
    rep: &RepSpec,
    lambda: &CoweightVector,
    nu: &RationalVector,
    epsilon: &RationalVector,
    twist: Option<&TwistData>,
    assertion: Option<bool>,
) -> Result<NccrCertificate> {
    for v in [lambda, nu, epsilon] {
        datum.check_dim(v)?;
    }
    if let Some(t) = twist {
        if t.dim() != datum.rank() {
            return Err(SodError::DimensionMismatch { expected: datum.rank(), found: t.dim() });
        }
    }
    let levi = datum.levi(lambda);
    if !levi.is_invariant(nu) {
        return Err(SodError::NotInvariant(nu.to_string()));
    }
    if !levi.is_invariant(epsilon) {
        return Err(SodError::NotInvariant(epsilon.to_string()));
    }
    let gens = coinvariant_rep(rep, lambda).weights().to_vec();
    let span = span_basis(&gens, datum.rank());
    let eps_status = if !in_span(&span, epsilon) {
        EpsStatus::Fails
    } else if is_generic(epsilon, &levi.datum, &gens)? {
        EpsStatus::Generic
    } else if is_weakly_generic(epsilon, &levi.datum, &gens)? {
        EpsStatus::WeaklyGeneric
    } else {
        EpsStatus::Fails
    };

    let half = frac(1, 2);
    let center = nu - levi.rho_bar_lambda();
    let bbox = bounding_box(&gens, &half, &center);
    let plus = EpsShift { epsilon: epsilon.clone(), mode: EpsMode::Plus };
    let both = EpsShift { epsilon: epsilon.clone(), mode: EpsMode::PlusMinus };
    let window = enumerate_lattice(
        |p| levi.is_dominant(p) && member_eps(&gens, &half, &center, &plus, p),
        &bbox,
        twist,
    )?;
    let half_open = ZonotopeQuery::new(gens.clone(), half.clone(), center.clone(), Variant::HalfOpen);
    let prazno_points = enumerate_lattice(
        |p| levi.is_dominant(p) && member_eps(&gens, &half, &center, &both, p) && !member(&half_open, p),
        &bbox,
        twist,
    )?;

    let genericity = if levi.positive_roots().is_empty() {
        Genericity::CheckedToricRule(toric_two_per_side(&gens))
    } else {
        assertion.map_or(Genericity::Unknown, Genericity::UserAsserted)
    };
    let quasi_symmetric = is_quasi_symmetric(rep);
    let window_nonempty = !window.is_empty();
    let prazno_empty = prazno_points.is_empty();
    let verdict = if !quasi_symmetric || eps_status == EpsStatus::Fails {
        Verdict::Unknown
    } else if !window_nonempty || !prazno_empty || genericity.value() == Some(false) {
        Verdict::FiniteGlobalDimOnly
    } else if genericity.value() == Some(true) {
        Verdict::TwistedNCCR
    } else {
        Verdict::Unknown
    };
    Ok(NccrCertificate {
        lambda: lambda.clone(),
        nu: nu.clone(),
        levi_label: levi.label().to_string(),
        quasi_symmetric,
        epsilon: epsilon.clone(),
        eps_status,
        window,
        window_nonempty,
        prazno_points,
        prazno_empty,
        genericity,
        verdict,
    })
}

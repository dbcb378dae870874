//! Partition of the dominant weights by face signatures.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::{One, Signed};

use crate::error::{Result, SodError};
use crate::kernel::{enumerate_lattice, frac, rat, Interval, Rational, RationalVector, TwistData};
use crate::rep::{find_destabilizer, has_t_stable_point, is_quasi_symmetric, weight_signs, RepSpec};
use crate::roots::{LeviDatum, RootDatum};
use crate::zonotope::{bounding_box, face_signature_at, supporting_lambda, FaceSignature, Variant, ZonotopeQuery};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Components need `r ≥ 1`.
    Standard,
    /// Components need `r > 1/2`; requires a quasi-symmetric representation.
    QuasiSymmetric,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftProfile {
    /// Weyl-invariant shift `ν`.
    pub nu_global: RationalVector,
    pub mode: Mode,
}

impl ShiftProfile {
    pub fn standard(rank: usize) -> Self {
        ShiftProfile { nu_global: RationalVector::zeros(rank), mode: Mode::Standard }
    }

    pub fn quasi_symmetric(rank: usize) -> Self {
        ShiftProfile { nu_global: RationalVector::zeros(rank), mode: Mode::QuasiSymmetric }
    }

    pub fn validate(&self, datum: &RootDatum, rep: &RepSpec) -> Result<()> {
        datum.check_dim(&self.nu_global)?;
        if !datum.is_invariant(&self.nu_global) {
            return Err(SodError::NotInvariant(self.nu_global.to_string()));
        }
        if self.mode == Mode::QuasiSymmetric && !is_quasi_symmetric(rep) {
            return Err(SodError::InvalidParameters(
                "the r > 1/2 threshold needs weights summing to zero on every line through the origin".into(),
            ));
        }
        Ok(())
    }

    /// Whether a cell of radius `r` is split off as its own component.
    pub fn above_threshold(&self, r: &Rational) -> bool {
        match self.mode {
            Mode::Standard => r >= &Rational::one(),
            Mode::QuasiSymmetric => r > &frac(1, 2),
        }
    }

    /// `ν - ρ̄`, the center of the zonotopes.
    pub fn center(&self, datum: &RootDatum) -> RationalVector {
        &self.nu_global - datum.rho_bar()
    }
}

/// The minimal tuple `(r_χ, S_χ)` of a dominant weight.
pub fn signature_of(datum: &RootDatum, rep: &RepSpec, chi: &RationalVector, profile: &ShiftProfile) -> Result<FaceSignature> {
    datum.check_dim(chi)?;
    if !datum.is_dominant(chi, None) {
        return Err(SodError::NotDominant(chi.to_string()));
    }
    face_signature_at(rep.weights(), &profile.center(datum), chi)
}

/// The one-parameter subgroup `λ_χ` attached to a signature.
pub fn canonical_lambda(sig: &FaceSignature, datum: &RootDatum, rep: &RepSpec) -> Result<RationalVector> {
    supporting_lambda(sig, datum, rep.weights())
}

/// Total order on signatures: `(r, |S⁺|, |S⁻|, |S⁰|)` then the index sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderKey {
    pub r: Rational,
    pub sizes: (usize, usize, usize),
    pub sets: (Vec<usize>, Vec<usize>, Vec<usize>),
}

impl Ord for OrderKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.r
            .cmp(&other.r)
            .then_with(|| self.sizes.cmp(&other.sizes))
            .then_with(|| self.sets.cmp(&other.sets))
    }
}

impl PartialOrd for OrderKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl OrderKey {
    /// The coarse part `(r, |S|)`, which is monotone for the partial order.
    pub fn coarse(&self) -> (Rational, (usize, usize, usize)) {
        (self.r.clone(), self.sizes)
    }
}

pub fn order_key(sig: &FaceSignature) -> OrderKey {
    OrderKey {
        r: sig.r.clone(),
        sizes: (sig.s_plus.len(), sig.s_minus.len(), sig.s_zero.len()),
        sets: (sig.s_plus.clone(), sig.s_minus.clone(), sig.s_zero.clone()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCell {
    pub signature: FaceSignature,
    pub lambda: RationalVector,
    pub order_key: OrderKey,
    /// `ν - ρ̄ + ρ̄_λ + χ_p`.
    pub nu_levi: RationalVector,
    /// `-r ∑_{S⁺} β_i`.
    pub chi_p: RationalVector,
    /// Members found in the search box, sorted.
    pub members: Vec<RationalVector>,
}

impl PartitionCell {
    pub fn new(datum: &RootDatum, rep: &RepSpec, profile: &ShiftProfile, signature: FaceSignature) -> Result<PartitionCell> {
        let lambda = canonical_lambda(&signature, datum, rep)?;
        let levi = datum.levi(&lambda);
        let chi_p = signature.chi_p(rep.weights(), datum.rank());
        let nu_levi = &(&profile.center(datum) + levi.rho_bar_lambda()) + &chi_p;
        let order_key = order_key(&signature);
        Ok(PartitionCell { signature, lambda, order_key, nu_levi, chi_p, members: Vec::new() })
    }

    /// Generators of `Σ_λ`: the weights indexed by `S⁰`.
    pub fn levi_generators(&self, rep: &RepSpec) -> Vec<RationalVector> {
        self.signature.s_zero.iter().map(|&i| rep.weights()[i].clone()).collect()
    }
}

/// Lattice points of `center + r·Σ` (given variant) that are dominant for
/// `levi` and lie in the optional coset.
pub fn window_points(
    levi: &LeviDatum,
    generators: &[RationalVector],
    center: &RationalVector,
    r: &Rational,
    variant: Variant,
    twist: Option<&TwistData>,
) -> Result<Vec<RationalVector>> {
    let q = ZonotopeQuery::new(generators.to_vec(), r.clone(), center.clone(), variant);
    let bbox = bounding_box(generators, r, center);
    enumerate_lattice(|p| levi.is_dominant(p) && q.contains(p), &bbox, twist)
}

/// `(ν_levi − ρ̄_λ + r·Σ⁰_λ) ∩ X(T)^λ`, which equals the cell.
pub fn cell_members(cell: &PartitionCell, datum: &RootDatum, rep: &RepSpec) -> Result<Vec<RationalVector>> {
    if cell.signature.trivial {
        return Err(SodError::InvalidParameters("the trivial cell is the single weight ν - ρ̄".into()));
    }
    let levi = datum.levi(&cell.lambda);
    let center = &cell.nu_levi - levi.rho_bar_lambda();
    window_points(&levi, &cell.levi_generators(rep), &center, &cell.signature.r, Variant::RelInt, None)
}

/// Dominant integral weights with every coordinate in `[-radius, radius]`.
pub fn dominant_box(datum: &RootDatum, radius: i64) -> Vec<RationalVector> {
    let bbox: Vec<Interval> = (0..datum.rank()).map(|_| Interval::new(rat(-radius), rat(radius))).collect();
    enumerate_lattice(|p| datum.is_dominant(p, None), &bbox, None).expect("finite box")
}

fn require_stable_point(datum: &RootDatum, rep: &RepSpec) -> Result<()> {
    if has_t_stable_point(rep) {
        return Ok(());
    }
    let d = find_destabilizer(rep, datum)?;
    Err(SodError::NoStablePoint {
        sigma: d.sigma.map(|s| s.to_string()).unwrap_or_default(),
    })
}

/// Cells covering every dominant weight of the box, sorted by order key.
pub fn partition_region(datum: &RootDatum, rep: &RepSpec, profile: &ShiftProfile, radius: i64) -> Result<Vec<PartitionCell>> {
    datum.check_dim(&RationalVector::zeros(rep.rank()))?;
    require_stable_point(datum, rep)?;
    profile.validate(datum, rep)?;
    if radius < 0 {
        return Ok(Vec::new());
    }
    let mut cells: Vec<PartitionCell> = Vec::new();
    let mut by_sig: HashMap<FaceSignature, usize> = HashMap::new();
    for chi in dominant_box(datum, radius) {
        let sig = signature_of(datum, rep, &chi, profile)?;
        let k = match by_sig.get(&sig) {
            Some(&k) => k,
            None => {
                cells.push(PartitionCell::new(datum, rep, profile, sig.clone())?);
                by_sig.insert(sig, cells.len() - 1);
                cells.len() - 1
            }
        };
        cells[k].members.push(chi);
    }
    cells.sort_by(|a, b| a.order_key.cmp(&b.order_key));
    Ok(cells)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionStatus {
    Valid,
    Invalid,
    /// `λ` is not antidominant, or some `μ ∈ ℒ` has `⟨λ,μ⟩ ≤ ⟨λ,χ⟩`.
    PreconditionFailed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCheck {
    pub status: ReductionStatus,
    /// Failing subsets of `T_λ^+`, as expanded indices.
    pub violations: Vec<Vec<usize>>,
}

impl ReductionCheck {
    pub fn valid(&self) -> bool {
        self.status == ReductionStatus::Valid
    }
}

/// Every nonempty subset sum `χ + β_{i_1} + … ` over `T_λ^+` has `(·)⁺`
/// undefined or inside `ℒ`. Subsets with the same weight multiset are
/// checked once.
pub fn validate_reduction_setting(
    ell: &[RationalVector],
    chi: &RationalVector,
    lambda: &RationalVector,
    rep: &RepSpec,
    datum: &RootDatum,
) -> ReductionCheck {
    let base = lambda.dot(chi);
    if !datum.is_antidominant(lambda) || ell.iter().any(|mu| lambda.dot(mu) <= base) {
        return ReductionCheck { status: ReductionStatus::PreconditionFailed, violations: Vec::new() };
    }
    let t_plus = weight_signs(rep, lambda).t_plus;
    let mut groups: Vec<(RationalVector, Vec<usize>)> = Vec::new();
    for i in t_plus {
        let w = &rep.weights()[i];
        match groups.iter_mut().find(|(v, _)| v == w) {
            Some((_, idx)) => idx.push(i),
            None => groups.push((w.clone(), vec![i])),
        }
    }
    let mut violations = Vec::new();
    let mut counts = vec![0usize; groups.len()];
    loop {
        // Next multiplicity vector in mixed radix.
        let Some(k) = (0..groups.len()).find(|&k| counts[k] < groups[k].1.len()) else { break };
        counts[k] += 1;
        for c in counts.iter_mut().take(k) {
            *c = 0;
        }
        let mut s = chi.clone();
        for (c, (w, _)) in counts.iter().zip(&groups) {
            if *c > 0 {
                s.add_scaled(&rat(*c as i64), w);
            }
        }
        if let Some(d) = datum.star_dominate(&s) {
            if !ell.contains(&d.weight) {
                violations.push(
                    counts
                        .iter()
                        .zip(&groups)
                        .flat_map(|(c, (_, idx))| idx[..*c].iter().copied())
                        .collect(),
                );
            }
        }
    }
    let status = if violations.is_empty() { ReductionStatus::Valid } else { ReductionStatus::Invalid };
    ReductionCheck { status, violations }
}

/// `⟨λ, χ⟩` is strictly smaller on `χ` than on all of `ell`.
pub fn strictly_below(lambda: &RationalVector, chi: &RationalVector, ell: &[RationalVector]) -> bool {
    let base = lambda.dot(chi);
    ell.iter().all(|mu| (lambda.dot(mu) - &base).is_positive())
}

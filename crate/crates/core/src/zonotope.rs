//! Weight zonotopes `shift + r·Σ` and their faces.
//!
//! `Σ = {∑ a_i β_i : a_i ∈ ]-1,0]}`; the closed, half-open and relative
//! interior variants differ only in which coefficient bounds are strict.
//! Equal generators are merged: `m` copies with coefficients in `]-r,0]`
//! sweep exactly `]-rm,0]` times the common generator, and likewise for the
//! closed and open intervals, so each distinct generator costs one variable.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::error::{Result, SodError};
use crate::kernel::lp::Relation;
use crate::kernel::{
    forced_tight, in_span, lp_optimize, rat, span_basis, strict_feasible, Bound, BoxedLinearProgram, CoweightVector,
    Interval, LpStatus, Rational, RationalVector, Sense,
};
use crate::rep::lex_min;
use crate::roots::RootDatum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// `a_i ∈ [-r,0]`
    Closed,
    /// `a_i ∈ ]-r,0]`
    HalfOpen,
    /// `a_i ∈ ]-r,0[`
    RelInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonotopeQuery {
    pub generators: Vec<RationalVector>,
    pub radius: Rational,
    pub shift: RationalVector,
    pub variant: Variant,
}

impl ZonotopeQuery {
    pub fn new(generators: Vec<RationalVector>, radius: Rational, shift: RationalVector, variant: Variant) -> Self {
        ZonotopeQuery { generators, radius, shift, variant }
    }

    pub fn contains(&self, p: &RationalVector) -> bool {
        member(self, p)
    }

    /// Coordinate ranges of the closure.
    pub fn bounding_box(&self) -> Vec<Interval> {
        bounding_box(&self.generators, &self.radius, &self.shift)
    }
}

/// A distinct generator, its multiplicity and the indices it came from.
#[derive(Clone, Debug)]
pub(crate) struct Merged {
    pub weight: RationalVector,
    pub mult: usize,
    pub indices: Vec<usize>,
}

pub(crate) fn merge(generators: &[RationalVector]) -> Vec<Merged> {
    let mut map: BTreeMap<&RationalVector, Vec<usize>> = BTreeMap::new();
    for (i, g) in generators.iter().enumerate() {
        map.entry(g).or_default().push(i);
    }
    map.into_iter()
        .map(|(w, indices)| Merged { weight: w.clone(), mult: indices.len(), indices })
        .collect()
}

fn coefficient_bounds(r: &Rational, mult: usize, variant: Variant) -> (Bound, Bound) {
    let lo = -(r * rat(mult as i64));
    match variant {
        Variant::Closed => (Bound::Closed(lo), Bound::Closed(Rational::zero())),
        Variant::HalfOpen => (Bound::Open(lo), Bound::Closed(Rational::zero())),
        Variant::RelInt => (Bound::Open(lo), Bound::Open(Rational::zero())),
    }
}

/// `∑ a_g g = target` over merged generators with scaled coefficient boxes.
fn coefficient_program(merged: &[Merged], r: &Rational, target: &RationalVector, variant: Variant) -> BoxedLinearProgram {
    let mut p = BoxedLinearProgram::new(merged.len());
    for (k, m) in merged.iter().enumerate() {
        let (lo, hi) = coefficient_bounds(r, m.mult, variant);
        p.set_bounds(k, lo, hi);
    }
    for c in 0..target.dim() {
        let row = merged.iter().map(|m| m.weight[c].clone()).collect();
        p.add_equality(row, target[c].clone()).expect("row length matches");
    }
    p
}

/// `p ∈ shift + r·Σ` in the requested variant.
pub fn member(q: &ZonotopeQuery, p: &RationalVector) -> bool {
    let merged = merge(&q.generators);
    let prog = coefficient_program(&merged, &q.radius, &(p - &q.shift), q.variant);
    strict_feasible(&prog)
}

/// Exact coordinate ranges of `shift + r·Σ̄`.
pub fn bounding_box(generators: &[RationalVector], r: &Rational, shift: &RationalVector) -> Vec<Interval> {
    (0..shift.dim())
        .map(|c| {
            let mut lo = shift[c].clone();
            let mut hi = shift[c].clone();
            for g in generators {
                if g[c].is_positive() {
                    lo -= r * &g[c];
                } else {
                    hi -= r * &g[c];
                }
            }
            Interval::new(lo, hi)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radius {
    Finite(Rational),
    Infinite,
}

impl Radius {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Radius::Finite(r) => Some(r),
            Radius::Infinite => None,
        }
    }
}

/// Least `r ≥ 0` with `p ∈ shift + r·Σ̄`.
pub fn min_radius(generators: &[RationalVector], shift: &RationalVector, p: &RationalVector) -> Radius {
    let target = p - shift;
    if target.is_zero() {
        return Radius::Finite(Rational::zero());
    }
    let merged = merge(generators);
    let n = merged.len();
    let mut prog = BoxedLinearProgram::new(n + 1);
    for k in 0..n {
        prog.set_bounds(k, Bound::Free, Bound::Closed(Rational::zero()));
    }
    prog.set_bounds(n, Bound::Closed(Rational::zero()), Bound::Free);
    for c in 0..target.dim() {
        let mut row: Vec<Rational> = merged.iter().map(|m| m.weight[c].clone()).collect();
        row.push(Rational::zero());
        prog.add_equality(row, target[c].clone()).expect("row length matches");
    }
    for (k, m) in merged.iter().enumerate() {
        // a_k + mult·r ≥ 0
        let mut row = vec![Rational::zero(); prog.num_vars()];
        row[k] = rat(1);
        row[n] = rat(m.mult as i64);
        prog.add_inequality(row, Relation::Ge, Rational::zero()).expect("row length matches");
    }
    let mut c = vec![Rational::zero(); prog.num_vars()];
    c[n] = rat(1);
    prog.set_objective(c).expect("length matches");
    match lp_optimize(&prog, Sense::Minimize) {
        Ok(out) if out.status == LpStatus::Optimal => Radius::Finite(out.value.expect("optimal")),
        _ => Radius::Infinite,
    }
}

/// `(r, S⁺, S⁻, S⁰)`; indices refer to the generator list it was computed
/// from. The trivial signature (`p = shift`) puts every index in `S⁰`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FaceSignature {
    pub r: Rational,
    pub s_plus: Vec<usize>,
    pub s_minus: Vec<usize>,
    pub s_zero: Vec<usize>,
    pub trivial: bool,
}

impl FaceSignature {
    pub fn trivial(num_generators: usize) -> Self {
        FaceSignature {
            r: Rational::zero(),
            s_plus: Vec::new(),
            s_minus: Vec::new(),
            s_zero: (0..num_generators).collect(),
            trivial: true,
        }
    }

    /// `χ_p = -r ∑_{S⁺} β_i`.
    pub fn chi_p(&self, generators: &[RationalVector], dim: usize) -> RationalVector {
        let mut s = RationalVector::zeros(dim);
        for &i in &self.s_plus {
            s.add_scaled(&-self.r.clone(), &generators[i]);
        }
        s
    }
}

/// The face of `shift + rΣ̄`, `r` minimal, containing `p` in its relative
/// interior: coefficients forced to `-r` form `S⁺`, forced to `0` form `S⁻`.
pub fn face_signature_at(generators: &[RationalVector], shift: &RationalVector, p: &RationalVector) -> Result<FaceSignature> {
    let r = match min_radius(generators, shift, p) {
        Radius::Finite(r) => r,
        Radius::Infinite => return Err(SodError::OffSpan((p - shift).to_string())),
    };
    if r.is_zero() {
        return Ok(FaceSignature::trivial(generators.len()));
    }
    let merged = merge(generators);
    let prog = coefficient_program(&merged, &r, &(p - shift), Variant::Closed);
    let tight = forced_tight(&prog);
    debug_assert!(tight.feasible);
    let (mut s_plus, mut s_minus, mut s_zero) = (Vec::new(), Vec::new(), Vec::new());
    for (k, m) in merged.iter().enumerate() {
        let target = if tight.lower_forced[k] {
            &mut s_plus
        } else if tight.upper_forced[k] && !m.weight.is_zero() {
            &mut s_minus
        } else {
            &mut s_zero
        };
        target.extend(&m.indices);
    }
    s_plus.sort_unstable();
    s_minus.sort_unstable();
    s_zero.sort_unstable();
    Ok(FaceSignature { r, s_plus, s_minus, s_zero, trivial: false })
}

/// Canonical antidominant `λ` whose sign pattern on the generators is
/// `(S⁺, S⁻, S⁰)`: minimal `ℓ¹` norm subject to `⟨λ,β⟩ ≥ 1` on `S⁺`,
/// `≤ -1` on `S⁻`, `= 0` on `S⁰`, `⟨λ,α⟩ ≤ 0` on positive roots; ties broken
/// lexicographically, then scaled to a primitive integral vector.
pub fn supporting_lambda(sig: &FaceSignature, datum: &RootDatum, generators: &[RationalVector]) -> Result<CoweightVector> {
    let n = datum.rank();
    if sig.trivial {
        return Ok(RationalVector::zeros(n));
    }
    let mut p = BoxedLinearProgram::new(2 * n);
    let row_for = |p: &BoxedLinearProgram, v: &RationalVector| {
        let mut row = vec![Rational::zero(); p.num_vars()];
        for k in 0..n {
            row[k] = v[k].clone();
        }
        row
    };
    let mut seen = BTreeSet::new();
    for (set, rel, rhs) in [
        (&sig.s_plus, Some(Relation::Ge), rat(1)),
        (&sig.s_minus, Some(Relation::Le), rat(-1)),
        (&sig.s_zero, None, rat(0)),
    ] {
        for &i in set {
            let b = &generators[i];
            if !seen.insert((b.clone(), rel)) {
                continue;
            }
            let row = row_for(&p, b);
            match rel {
                Some(rel) => {
                    p.add_inequality(row, rel, rhs.clone())?;
                }
                None => p.add_equality(row, rhs.clone())?,
            }
        }
    }
    for a in datum.positive_roots() {
        let row = row_for(&p, a);
        p.add_inequality(row, Relation::Le, Rational::zero())?;
    }
    // t_k ≥ |λ_k|
    for k in 0..n {
        for sign in [1, -1] {
            let mut row = vec![Rational::zero(); p.num_vars()];
            row[k] = rat(sign);
            row[n + k] = rat(-1);
            p.add_inequality(row, Relation::Le, Rational::zero())?;
        }
    }
    let mut c = vec![Rational::zero(); p.num_vars()];
    for t in c.iter_mut().skip(n).take(n) {
        *t = rat(1);
    }
    p.set_objective(c.clone())?;
    let out = lp_optimize(&p, Sense::Minimize)?;
    if out.status != LpStatus::Optimal {
        return Err(SodError::UnrealizableSignature(format!(
            "r = {}, |S+| = {}, |S-| = {}, |S0| = {}",
            sig.r,
            sig.s_plus.len(),
            sig.s_minus.len(),
            sig.s_zero.len()
        )));
    }
    p.add_equality(c, out.value.expect("optimal"))?;
    Ok(lex_min(&mut p, n)?.primitive())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EpsMode {
    Plus,
    PlusMinus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsShift {
    pub epsilon: RationalVector,
    pub mode: EpsMode,
}

/// `sup{t ≥ 0 : p - tε ∈ shift + rΣ̄}`; `None` when `p` is outside,
/// `Some(Radius::Infinite)` when unbounded.
pub fn eps_reach(generators: &[RationalVector], r: &Rational, shift: &RationalVector, epsilon: &RationalVector, p: &RationalVector) -> Option<Radius> {
    let merged = merge(generators);
    let n = merged.len();
    let target = p - shift;
    let mut prog = BoxedLinearProgram::new(n + 1);
    for (k, m) in merged.iter().enumerate() {
        let (lo, hi) = coefficient_bounds(r, m.mult, Variant::Closed);
        prog.set_bounds(k, lo, hi);
    }
    prog.set_bounds(n, Bound::Closed(Rational::zero()), Bound::Free);
    for c in 0..target.dim() {
        let mut row: Vec<Rational> = merged.iter().map(|m| m.weight[c].clone()).collect();
        row.push(epsilon[c].clone());
        prog.add_equality(row, target[c].clone()).expect("row length matches");
    }
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = rat(1);
    prog.set_objective(c).expect("length matches");
    let out = lp_optimize(&prog, Sense::Maximize).ok()?;
    match out.status {
        LpStatus::Infeasible => None,
        LpStatus::Unbounded => Some(Radius::Infinite),
        LpStatus::Optimal => Some(Radius::Finite(out.value.expect("optimal"))),
    }
}

/// Membership in `Δ_ε` (or `Δ_{±ε}`) for `Δ = shift + rΣ̄`.
pub fn member_eps(generators: &[RationalVector], r: &Rational, shift: &RationalVector, e: &EpsShift, p: &RationalVector) -> bool {
    let moves = |eps: &RationalVector| match eps_reach(generators, r, shift, eps, p) {
        None => false,
        Some(Radius::Infinite) => true,
        Some(Radius::Finite(t)) => t.is_positive(),
    };
    match e.mode {
        EpsMode::Plus => moves(&e.epsilon),
        EpsMode::PlusMinus => moves(&e.epsilon) && moves(&-&e.epsilon),
    }
}

/// Direction spaces of all faces of `Σ̄`, as canonical echelon bases. These
/// are the flats of the generator arrangement: spans closed under adding
/// every generator they contain.
pub fn face_directions(generators: &[RationalVector], dim: usize) -> Vec<Vec<RationalVector>> {
    let mut lines: Vec<RationalVector> = Vec::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        let mut key = g.primitive();
        if key.0.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            key = -&key;
        }
        if !lines.contains(&key) {
            lines.push(key);
        }
    }
    lines.sort();
    let close = |basis: Vec<RationalVector>| -> Vec<RationalVector> {
        let members: Vec<RationalVector> = lines.iter().filter(|l| in_span(&basis, l)).cloned().collect();
        span_basis(&members, dim)
    };
    let mut flats: BTreeSet<Vec<RationalVector>> = BTreeSet::new();
    let mut frontier = vec![Vec::new()];
    flats.insert(Vec::new());
    while let Some(f) = frontier.pop() {
        for l in &lines {
            if in_span(&f, l) {
                continue;
            }
            let mut gens = f.clone();
            gens.push(l.clone());
            let g = close(span_basis(&gens, dim));
            if flats.insert(g.clone()) {
                frontier.push(g);
            }
        }
    }
    flats.into_iter().collect()
}

fn check_epsilon(epsilon: &RationalVector, datum: &RootDatum, generators: &[RationalVector]) -> Result<Vec<RationalVector>> {
    if !datum.is_invariant(epsilon) {
        return Err(SodError::NotInvariant(epsilon.to_string()));
    }
    let span = span_basis(generators, datum.rank());
    if !in_span(&span, epsilon) {
        return Err(SodError::InvalidParameters(format!(
            "epsilon {epsilon} is not parallel to the span of the zonotope generators"
        )));
    }
    Ok(span)
}

/// `ε` lies in no face direction space that misses part of the invariant
/// subspace parallel to `Σ̄`.
pub fn is_weakly_generic(epsilon: &RationalVector, datum: &RootDatum, generators: &[RationalVector]) -> Result<bool> {
    let span = check_epsilon(epsilon, datum, generators)?;
    let invariant: Vec<RationalVector> = invariant_parallel(datum, &span);
    Ok(face_directions(generators, datum.rank())
        .iter()
        .filter(|d| in_span(d, epsilon))
        .all(|d| invariant.iter().all(|v| in_span(d, v))))
}

/// `ε` lies in no proper face direction space.
pub fn is_generic(epsilon: &RationalVector, datum: &RootDatum, generators: &[RationalVector]) -> Result<bool> {
    let span = check_epsilon(epsilon, datum, generators)?;
    Ok(face_directions(generators, datum.rank())
        .iter()
        .filter(|d| d.len() < span.len())
        .all(|d| !in_span(d, epsilon)))
}

/// Basis of `(𝒲-invariants) ∩ span`.
pub fn invariant_parallel(datum: &RootDatum, span: &[RationalVector]) -> Vec<RationalVector> {
    let inv = datum.invariant_subspace();
    if inv.is_empty() || span.is_empty() {
        return Vec::new();
    }
    // Intersection via the kernel of [inv | -span].
    let rows = datum.rank();
    let cols = inv.len() + span.len();
    let mut m = crate::kernel::Matrix::zeros(rows, cols);
    for (j, v) in inv.iter().enumerate() {
        for i in 0..rows {
            m[(i, j)] = v[i].clone();
        }
    }
    for (j, v) in span.iter().enumerate() {
        for i in 0..rows {
            m[(i, inv.len() + j)] = -v[i].clone();
        }
    }
    let ker = crate::kernel::kernel_basis(&m);
    let vecs: Vec<RationalVector> = ker
        .iter()
        .map(|k| {
            let mut v = RationalVector::zeros(rows);
            for (j, b) in inv.iter().enumerate() {
                v.add_scaled(&k[j], b);
            }
            v
        })
        .collect();
    span_basis(&vecs, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::frac;

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_ints(x)
    }

    fn gens1(ws: &[i64]) -> Vec<RationalVector> {
        ws.iter().map(|&w| v(&[w])).collect()
    }

    #[test]
    fn membership_variants() {
        let q = |variant| ZonotopeQuery::new(gens1(&[1, 1, -1, -1]), rat(1), v(&[0]), variant);
        assert!(q(Variant::Closed).contains(&v(&[2])));
        assert!(!q(Variant::RelInt).contains(&v(&[2])));
        let h = ZonotopeQuery::new(gens1(&[1, -1]), rat(1), v(&[0]), Variant::HalfOpen);
        assert!(!h.contains(&v(&[1])));
        assert!(h.contains(&v(&[0])));
    }

    #[test]
    fn radii() {
        assert_eq!(min_radius(&gens1(&[1, 1, -1, -1]), &v(&[0]), &v(&[3])), Radius::Finite(frac(3, 2)));
        assert_eq!(min_radius(&gens1(&[1, -1]), &v(&[4]), &v(&[4])), Radius::Finite(rat(0)));
        let g = vec![v(&[1, 0]), v(&[-1, 0])];
        assert_eq!(min_radius(&g, &v(&[0, 0]), &v(&[0, 1])), Radius::Infinite);
    }

    #[test]
    fn signatures() {
        let g = gens1(&[1, 1, -1, -1]);
        let s = face_signature_at(&g, &v(&[0]), &v(&[3])).unwrap();
        assert_eq!(s.r, frac(3, 2));
        assert_eq!((s.s_plus.clone(), s.s_minus.clone()), (vec![2, 3], vec![0, 1]));
        assert!(s.s_zero.is_empty());
        let t = RootDatum::from_tag("Torus(1)").unwrap();
        assert_eq!(supporting_lambda(&s, &t, &g).unwrap(), v(&[-1]));

        let g2 = vec![v(&[-1, 0]), v(&[0, -1]), v(&[0, 1]), v(&[1, 0])];
        let s = face_signature_at(&g2, &v(&[0, 0]), &v(&[2, 1])).unwrap();
        assert_eq!(s.r, rat(2));
        assert_eq!((s.s_plus.clone(), s.s_minus.clone(), s.s_zero.clone()), (vec![0], vec![3], vec![1, 2]));
        let t2 = RootDatum::from_tag("Torus(2)").unwrap();
        assert_eq!(supporting_lambda(&s, &t2, &g2).unwrap(), v(&[-1, 0]));

        let s = face_signature_at(&g, &v(&[1]), &v(&[1])).unwrap();
        assert!(s.trivial);
        assert!(supporting_lambda(&s, &t, &g).unwrap().is_zero());
    }

    #[test]
    fn eps_regions() {
        let g = gens1(&[1, 1, 1, -1, -1, -1]);
        let plus = EpsShift { epsilon: v(&[1]), mode: EpsMode::Plus };
        assert!(member_eps(&g, &rat(1), &v(&[0]), &plus, &v(&[3])));
        assert!(!member_eps(&g, &rat(1), &v(&[0]), &plus, &v(&[-3])));
        let pm = EpsShift { epsilon: v(&[1]), mode: EpsMode::PlusMinus };
        assert!(!member_eps(&g, &rat(1), &v(&[0]), &pm, &v(&[3])));
        assert!(member_eps(&g, &rat(1), &v(&[0]), &pm, &v(&[2])));
        let zero = EpsShift { epsilon: v(&[0]), mode: EpsMode::PlusMinus };
        assert!(member_eps(&g, &rat(1), &v(&[0]), &zero, &v(&[-3])));
        assert!(!member_eps(&g, &rat(1), &v(&[0]), &zero, &v(&[4])));
    }

    #[test]
    fn genericity() {
        let t = RootDatum::from_tag("Torus(1)").unwrap();
        let g = gens1(&[1, 1, -1, -1]);
        assert!(is_weakly_generic(&v(&[1]), &t, &g).unwrap());
        assert!(is_generic(&v(&[1]), &t, &g).unwrap());
        assert!(!is_generic(&v(&[0]), &t, &g).unwrap());
        let sp = RootDatum::from_tag("Sp(4)").unwrap();
        let w = vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])];
        assert!(is_weakly_generic(&v(&[0, 0]), &sp, &w).unwrap());
        assert!(is_weakly_generic(&v(&[1, 0]), &sp, &w).is_err());
    }

    #[test]
    fn flats_of_coordinate_arrangement() {
        let w = vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1])];
        // {0}, two axes, the plane.
        assert_eq!(face_directions(&w, 2).len(), 4);
    }
}

//! Refinement of components into half-size `ε`-windows for quasi-symmetric
//! representations.
//!
//! A window at center `c` for the Levi `G^λ` splits into the weights with
//! relative radius `r' > ½`, grouped by relative face and handled recursively
//! in a smaller Levi, and those with `r' ≤ ½`. Of the latter, the points of
//! `c + ½(Σ̄_λ)_ε` form a leaf; the rest sit on faces parallel to no `ε`-move
//! and are regrouped around the shifted center `c + aε`.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Result, SodError};
use crate::kernel::{frac, rat, CoweightVector, Rational, RationalVector};
use crate::partition::order_key;
use crate::rep::{coinvariant_rep, RepSpec};
use crate::roots::RootDatum;
use crate::zonotope::{face_signature_at, member_eps, supporting_lambda, EpsMode, EpsShift, FaceSignature};

use super::nccr::default_epsilon;
use super::{u_summands, AlgebraDescriptor, SodComponent};

const MAX_HALVINGS: usize = 64;

/// A leaf `X(T)^λ ∩ (ν − ρ̄_λ + ½(Σ̄_λ)_ε)` of the refinement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedComponent {
    pub index: usize,
    /// Index of the base component it refines.
    pub parent: usize,
    pub depth: usize,
    pub lambda: CoweightVector,
    pub levi_label: String,
    pub nu: RationalVector,
    pub epsilon: RationalVector,
    pub window: Vec<RationalVector>,
    pub u_summands: Vec<(RationalVector, u64)>,
    pub coinvariants: RepSpec,
    pub algebra: AlgebraDescriptor,
}

fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// `a(λ' + bλ'')` for the largest `b = 2^{-k}` whose sign pattern on the
/// weights refines that of `λ'` by `λ''`, which is antidominant, and whose
/// Levi is `G^{λ'} ∩ G^{λ''}`; `a` makes the result primitive integral.
pub fn refine_lambda_combination(
    datum: &RootDatum,
    rep: &RepSpec,
    lambda1: &CoweightVector,
    lambda2: &CoweightVector,
) -> Result<CoweightVector> {
    datum.check_dim(lambda1)?;
    datum.check_dim(lambda2)?;
    if !datum.is_antidominant(lambda1) {
        return Err(SodError::InvalidParameters(format!("{lambda1} pairs positively with a positive root")));
    }
    let outer = datum.levi(lambda1);
    if !outer.datum.is_antidominant(lambda2) {
        return Err(SodError::InvalidParameters(format!(
            "{lambda2} pairs positively with a positive root of the centralizer of {lambda1}"
        )));
    }
    if lambda2.is_zero() {
        return Ok(lambda1.primitive());
    }
    let expected: Vec<i8> = rep
        .weights()
        .iter()
        .map(|b| match sign(&lambda1.dot(b)) {
            0 => sign(&lambda2.dot(b)),
            s => s,
        })
        .collect();
    let inner_roots: Vec<&RationalVector> =
        outer.positive_roots().iter().filter(|a| lambda2.dot(a).is_zero()).collect();
    let mut b = Rational::one();
    for _ in 0..MAX_HALVINGS {
        let mut lam = lambda1.clone();
        lam.add_scaled(&b, lambda2);
        let signs_ok = rep.weights().iter().zip(&expected).all(|(w, s)| sign(&lam.dot(w)) == *s);
        let levi_ok = {
            let l = datum.levi(&lam);
            l.positive_roots().len() == inner_roots.len() && inner_roots.iter().all(|a| l.positive_roots().contains(a))
        };
        if signs_ok && levi_ok && datum.is_antidominant(&lam) {
            return Ok(lam.primitive());
        }
        b /= rat(2);
    }
    Err(SodError::RefinementUnstable(MAX_HALVINGS))
}

struct Refiner<'a> {
    datum: &'a RootDatum,
    rep: &'a RepSpec,
    parent: usize,
    out: Vec<RefinedComponent>,
}

fn strip(sig: &FaceSignature) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    (sig.s_plus.clone(), sig.s_minus.clone(), sig.s_zero.clone())
}

/// Groups points by signature, in descending order key.
fn group_by_signature(points: Vec<(RationalVector, FaceSignature)>) -> Vec<(FaceSignature, Vec<RationalVector>)> {
    let mut groups: Vec<(FaceSignature, Vec<RationalVector>)> = Vec::new();
    let mut at: HashMap<FaceSignature, usize> = HashMap::new();
    for (p, sig) in points {
        match at.get(&sig) {
            Some(&k) => groups[k].1.push(p),
            None => {
                at.insert(sig.clone(), groups.len());
                groups.push((sig, vec![p]));
            }
        }
    }
    groups.sort_by(|a, b| order_key(&b.0).cmp(&order_key(&a.0)));
    groups
}

impl Refiner<'_> {
    fn window(
        &mut self,
        lambda: &CoweightVector,
        center: &RationalVector,
        members: Vec<RationalVector>,
        eps: Option<&RationalVector>,
        depth: usize,
    ) -> Result<()> {
        if members.is_empty() {
            return Ok(());
        }
        let gens = coinvariant_rep(self.rep, lambda).weights().to_vec();
        let half = frac(1, 2);
        let mut low = Vec::new();
        let mut high = Vec::new();
        for mu in members {
            let sig = face_signature_at(&gens, center, &mu)?;
            if sig.r <= half {
                low.push(mu);
            } else {
                high.push((mu, sig));
            }
        }
        for (sig, group) in group_by_signature(high) {
            self.descend(lambda, center, &gens, &sig, group, depth)?;
        }
        self.eps_step(lambda, center, &gens, low, eps, depth)
    }

    fn descend(
        &mut self,
        lambda: &CoweightVector,
        center: &RationalVector,
        gens: &[RationalVector],
        sig: &FaceSignature,
        group: Vec<RationalVector>,
        depth: usize,
    ) -> Result<()> {
        if sig.s_zero.len() == gens.len() {
            return Err(SodError::RefinementUnstable(depth));
        }
        let levi = self.datum.levi(lambda);
        let inner = supporting_lambda(sig, &levi.datum, gens)?;
        let lam = refine_lambda_combination(self.datum, self.rep, lambda, &inner)?;
        let c = center + &sig.chi_p(gens, self.datum.rank());
        self.window(&lam, &c, group, None, depth + 1)
    }

    fn eps_step(
        &mut self,
        lambda: &CoweightVector,
        center: &RationalVector,
        gens: &[RationalVector],
        low: Vec<RationalVector>,
        eps: Option<&RationalVector>,
        depth: usize,
    ) -> Result<()> {
        let levi = self.datum.levi(lambda);
        let epsilon = match eps {
            Some(e) => {
                if !levi.is_invariant(e) {
                    return Err(SodError::NotInvariant(e.to_string()));
                }
                e.clone()
            }
            None => default_epsilon(&levi.datum, gens),
        };
        let half = frac(1, 2);
        let shift = EpsShift { epsilon: epsilon.clone(), mode: EpsMode::Plus };
        let (leaf, rest): (Vec<_>, Vec<_>) =
            low.into_iter().partition(|p| member_eps(gens, &half, center, &shift, p));
        if !rest.is_empty() {
            let (shifted, sigs) = self.stable_shift(gens, center, &epsilon, &rest)?;
            for (sig, group) in group_by_signature(rest.into_iter().zip(sigs).collect()) {
                self.descend(lambda, &shifted, gens, &sig, group, depth)?;
            }
        }
        if !leaf.is_empty() {
            let u = u_summands(&levi, &leaf);
            let coinvariants = coinvariant_rep(self.rep, lambda);
            self.out.push(RefinedComponent {
                index: 0,
                parent: self.parent,
                depth,
                lambda: lambda.clone(),
                levi_label: levi.label().to_string(),
                nu: center + levi.rho_bar_lambda(),
                epsilon,
                window: leaf,
                algebra: AlgebraDescriptor::new(levi.label(), &u, &coinvariants),
                u_summands: u,
                coinvariants,
            });
        }
        Ok(())
    }

    /// The center `c + aε`, halving `a` from 1 until the face pattern of every
    /// point agrees with the one at `a/2`.
    fn stable_shift(
        &self,
        gens: &[RationalVector],
        center: &RationalVector,
        epsilon: &RationalVector,
        points: &[RationalVector],
    ) -> Result<(RationalVector, Vec<FaceSignature>)> {
        let sigs_at = |a: &Rational| -> Result<(RationalVector, Vec<FaceSignature>)> {
            let mut c = center.clone();
            c.add_scaled(a, epsilon);
            let sigs = points.iter().map(|p| face_signature_at(gens, &c, p)).collect::<Result<Vec<_>>>()?;
            Ok((c, sigs))
        };
        let mut a = Rational::one();
        let mut current = sigs_at(&a)?;
        for _ in 0..MAX_HALVINGS {
            let next_a = &a / rat(2);
            let next = sigs_at(&next_a)?;
            let half = frac(1, 2);
            let stable = current.1.iter().zip(&next.1).all(|(x, y)| strip(x) == strip(y))
                && current.1.iter().all(|s| s.r > half);
            if stable {
                return Ok(current);
            }
            a = next_a;
            current = next;
        }
        Err(SodError::RefinementUnstable(MAX_HALVINGS))
    }
}

/// Leaves refining every component, in the order (component, inner order).
/// `epsilon` overrides the choice of `ε` for the `λ = 0` windows.
pub fn quasi_symmetric_refinement(
    datum: &RootDatum,
    rep: &RepSpec,
    components: &[SodComponent],
    epsilon: Option<&RationalVector>,
) -> Result<Vec<RefinedComponent>> {
    let mut all = Vec::new();
    for comp in components {
        let levi = datum.levi(&comp.lambda);
        let center = &comp.nu - levi.rho_bar_lambda();
        let mut r = Refiner { datum, rep, parent: comp.index, out: Vec::new() };
        let eps = if comp.lambda.is_zero() { epsilon } else { None };
        r.window(&comp.lambda, &center, comp.window.clone(), eps, 0)?;
        all.extend(r.out);
    }
    for (i, c) in all.iter_mut().enumerate() {
        c.index = i;
    }
    Ok(all)
}

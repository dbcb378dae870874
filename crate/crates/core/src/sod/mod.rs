//! Ordered decomposition components, their quasi-symmetric refinement,
//! certificates for the crepant-resolution conditions and preset families.

mod nccr;
mod presets;
mod refine;

use num_traits::{One, Signed, Zero};

use crate::characters::weyl_dim;
use crate::error::Result;
use crate::kernel::{frac, rat, Rational, RationalVector};
use crate::partition::{cell_members, partition_region, window_points, Mode, PartitionCell, ShiftProfile};
use crate::rep::RepSpec;
use crate::roots::{LeviDatum, RootDatum};
use crate::zonotope::{FaceSignature, Variant};

pub use nccr::{certify_nccr, default_epsilon, toric_two_per_side, EpsStatus, Genericity, NccrCertificate, Verdict};
pub use presets::{parse_preset, preset, sl2_s, Classification, Family, Preset, Sl2Case};
pub use refine::{quasi_symmetric_refinement, refine_lambda_combination, RefinedComponent};

/// How the weight window `L` of a component is cut out.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WindowKind {
    /// `X(T)^λ ∩ (ν − ρ̄_λ + r·Σ⁰_λ)`.
    RelIntScaled(Rational),
    /// `X(T)^λ ∩ (ν − ρ̄_λ + ½(Σ̄_λ)_ε)`; `ε = 0` is the closed half window.
    HalfSizeEps(RationalVector),
}

/// `(End(U) ⊗ Sym W_λ)^{G^λ}` with `U = ⊕_{μ∈L} V_{G^λ}(μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraDescriptor {
    pub group: String,
    pub window_size: usize,
    pub coinvariant_dim: usize,
    pub rank_of_u: u64,
    pub text: String,
}

impl AlgebraDescriptor {
    pub fn new(group: &str, summands: &[(RationalVector, u64)], coinvariants: &RepSpec) -> Self {
        let u = if summands.is_empty() {
            "0".to_string()
        } else {
            summands.iter().map(|(mu, _)| format!("V{mu}")).collect::<Vec<_>>().join("⊕")
        };
        let w = format!("k^{}", coinvariants.dim());
        let text = if summands.len() == 1 && summands[0].0.is_zero() {
            format!("(Sym {w})^{{{group}}}")
        } else {
            format!("(End({u}) ⊗ Sym {w})^{{{group}}}")
        };
        AlgebraDescriptor {
            group: group.to_string(),
            window_size: summands.len(),
            coinvariant_dim: coinvariants.dim(),
            rank_of_u: summands.iter().map(|(_, d)| d).sum(),
            text,
        }
    }
}

/// `(μ, dim V_{G^λ}(μ))` for every `μ` of the window.
pub fn u_summands(levi: &LeviDatum, window: &[RationalVector]) -> Vec<(RationalVector, u64)> {
    window.iter().map(|mu| (mu.clone(), weyl_dim(&levi.datum, mu, None))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SodComponent {
    /// Position in the total order; `𝒟_0` has the largest index.
    pub index: usize,
    /// `-i` for `𝒟_{-i}`.
    pub slot: i64,
    pub signature: FaceSignature,
    pub lambda: RationalVector,
    pub levi_label: String,
    pub nu: RationalVector,
    pub window_kind: WindowKind,
    pub window: Vec<RationalVector>,
    pub u_summands: Vec<(RationalVector, u64)>,
    pub coinvariants: RepSpec,
    pub algebra: AlgebraDescriptor,
    pub is_d0: bool,
}

/// Where the search was cut off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationFrontier {
    pub box_radius: i64,
    pub r_max: Rational,
    /// Every dominant weight with `r_χ` at most this lies in the box;
    /// `None` when there are no nonzero weights.
    pub complete_radius: Option<Rational>,
    /// Radii of cells found in the box but beyond `r_max`.
    pub omitted_radii: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SodReport {
    pub mode: Mode,
    pub components: Vec<SodComponent>,
    /// Cells below the threshold; their members lie in the `𝒟_0` window.
    pub absorbed: Vec<PartitionCell>,
    pub frontier: TruncationFrontier,
}

impl SodReport {
    pub fn d0(&self) -> &SodComponent {
        self.components.last().expect("𝒟_0 is always present")
    }
}

fn complete_radius(gens: &[RationalVector], center: &RationalVector, radius: i64) -> Option<Rational> {
    let b = rat(radius);
    let mut best: Option<Rational> = None;
    for c in 0..center.dim() {
        let pos: Rational = gens.iter().filter(|g| g[c].is_positive()).map(|g| g[c].clone()).sum();
        let neg: Rational = gens.iter().filter(|g| g[c].is_negative()).map(|g| -g[c].clone()).sum();
        for (room, w) in [(&b - &center[c], neg), (&b + &center[c], pos)] {
            if w.is_positive() {
                let r = room / w;
                best = Some(match best {
                    Some(x) if x <= r => x,
                    _ => r,
                });
            }
        }
    }
    best.map(|r| if r.is_negative() { Rational::zero() } else { r })
}

fn d0_signature(n: usize, r: Rational) -> FaceSignature {
    FaceSignature { r, s_plus: Vec::new(), s_minus: Vec::new(), s_zero: (0..n).collect(), trivial: false }
}

/// The ordered components for the cells found in `[-box, box]^n`.
///
/// Cells with `r` above the mode's threshold and at most `r_max` become
/// components in descending order key; the remaining dominant weights form
/// the last component `𝒟_0`, whose window is `X(T)^+ ∩ (ν−ρ̄+Σ⁰)` in standard
/// mode and `X(T)^+ ∩ (ν−ρ̄+½Σ̄)` in quasi-symmetric mode.
pub fn enumerate_sod(
    datum: &RootDatum,
    rep: &RepSpec,
    profile: &ShiftProfile,
    r_max: &Rational,
    box_radius: i64,
) -> Result<SodReport> {
    let cells = partition_region(datum, rep, profile, box_radius)?;
    let mut components = Vec::new();
    let mut absorbed = Vec::new();
    let mut omitted_radii: Vec<Rational> = Vec::new();
    for cell in cells.into_iter().rev() {
        if cell.signature.trivial || !profile.above_threshold(&cell.signature.r) {
            absorbed.push(cell);
            continue;
        }
        if &cell.signature.r > r_max {
            if !omitted_radii.contains(&cell.signature.r) {
                omitted_radii.push(cell.signature.r.clone());
            }
            continue;
        }
        let levi = datum.levi(&cell.lambda);
        let window = cell_members(&cell, datum, rep)?;
        let coinvariants = rep.restrict(&cell.signature.s_zero);
        let u = u_summands(&levi, &window);
        components.push(SodComponent {
            index: 0,
            slot: 0,
            algebra: AlgebraDescriptor::new(levi.label(), &u, &coinvariants),
            signature: cell.signature.clone(),
            lambda: cell.lambda.clone(),
            levi_label: levi.label().to_string(),
            nu: cell.nu_levi.clone(),
            window_kind: WindowKind::RelIntScaled(cell.signature.r.clone()),
            window,
            u_summands: u,
            coinvariants,
            is_d0: false,
        });
    }
    absorbed.reverse();
    omitted_radii.sort();

    let zero = RationalVector::zeros(datum.rank());
    let levi = datum.levi(&zero);
    let center = profile.center(datum);
    let (r0, variant, kind) = match profile.mode {
        Mode::Standard => (Rational::one(), Variant::RelInt, WindowKind::RelIntScaled(Rational::one())),
        Mode::QuasiSymmetric => (frac(1, 2), Variant::Closed, WindowKind::HalfSizeEps(zero.clone())),
    };
    let window = window_points(&levi, rep.weights(), &center, &r0, variant, None)?;
    let u = u_summands(&levi, &window);
    components.push(SodComponent {
        index: 0,
        slot: 0,
        algebra: AlgebraDescriptor::new(levi.label(), &u, rep),
        signature: d0_signature(rep.dim(), r0),
        lambda: zero,
        levi_label: levi.label().to_string(),
        nu: profile.nu_global.clone(),
        window_kind: kind,
        window,
        u_summands: u,
        coinvariants: rep.clone(),
        is_d0: true,
    });
    let n = components.len();
    for (i, c) in components.iter_mut().enumerate() {
        c.index = i;
        c.slot = i as i64 - (n as i64 - 1);
    }
    let frontier = TruncationFrontier {
        box_radius,
        r_max: r_max.clone(),
        complete_radius: complete_radius(rep.weights(), &center, box_radius),
        omitted_radii,
    };
    Ok(SodReport { mode: profile.mode, components, absorbed, frontier })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::order_key;

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_ints(x)
    }

    fn toric() -> (RootDatum, RepSpec) {
        let g = RootDatum::from_tag("Torus(1)").unwrap();
        let w = RepSpec::from_weights(1, vec![v(&[1]), v(&[1]), v(&[-1]), v(&[-1])]).unwrap();
        (g, w)
    }

    #[test]
    fn toric_components() {
        let (g, w) = toric();
        let rep = enumerate_sod(&g, &w, &ShiftProfile::standard(1), &rat(2), 4).unwrap();
        let radii: Vec<Rational> = rep.components.iter().map(|c| c.signature.r.clone()).collect();
        assert_eq!(radii, vec![rat(2), rat(2), frac(3, 2), frac(3, 2), rat(1), rat(1), rat(1)]);
        let d0 = rep.d0();
        assert!(d0.is_d0);
        assert_eq!(d0.window, vec![v(&[-1]), v(&[0]), v(&[1])]);
        assert_eq!(d0.slot, 0);
        for pair in rep.components[..rep.components.len() - 1].windows(2) {
            assert!(order_key(&pair[0].signature) > order_key(&pair[1].signature));
        }
        assert!(rep.frontier.omitted_radii.is_empty());
        let cut = enumerate_sod(&g, &w, &ShiftProfile::standard(1), &frac(3, 2), 4).unwrap();
        assert_eq!(cut.frontier.omitted_radii, vec![rat(2)]);
        assert_eq!(cut.components.len(), 5);
        assert_eq!(rep.frontier.complete_radius, Some(rat(2)));
    }

    #[test]
    fn quasi_symmetric_d0() {
        let g = RootDatum::from_tag("Sp(2)").unwrap();
        let w = RepSpec::from_weights(1, vec![v(&[1]), v(&[-1])]).unwrap().power(3);
        let rep = enumerate_sod(&g, &w, &ShiftProfile::quasi_symmetric(1), &rat(3), 6).unwrap();
        let d0 = rep.d0();
        assert_eq!(d0.window, vec![v(&[0])]);
        assert_eq!(d0.algebra.text, "(Sym k^6)^{A1}");
    }

    #[test]
    fn empty_representation() {
        let g = RootDatum::from_tag("Torus(0)").unwrap();
        let rep = enumerate_sod(&g, &RepSpec::zero(0), &ShiftProfile::standard(0), &rat(1), 3).unwrap();
        assert_eq!(rep.components.len(), 1);
        assert!(rep.d0().is_d0);
    }
}

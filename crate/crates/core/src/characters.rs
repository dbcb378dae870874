//! Characters of irreducible and symmetric-power representations, and the
//! graded dimensions of the blocks `Hom_{G^λ}(V(μ), V(μ') ⊗ Sym^d W_λ)`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, SodError};
use crate::kernel::{rat, Rational, RationalVector};
use crate::rep::RepSpec;
use crate::roots::{LeviDatum, RootDatum};

/// A finitely supported weight → multiplicity map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CharacterTable {
    rank: usize,
    mults: BTreeMap<RationalVector, u64>,
}

impl CharacterTable {
    pub fn zero(rank: usize) -> Self {
        CharacterTable { rank, mults: BTreeMap::new() }
    }

    /// The character `e^χ`.
    pub fn single(chi: RationalVector) -> Self {
        let rank = chi.dim();
        let mut mults = BTreeMap::new();
        mults.insert(chi, 1);
        CharacterTable { rank, mults }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, mu: &RationalVector) -> u64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    pub fn add(&mut self, mu: RationalVector, m: u64) {
        if m > 0 {
            *self.mults.entry(mu).or_insert(0) += m;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RationalVector, &u64)> {
        self.mults.iter()
    }

    pub fn support_len(&self) -> usize {
        self.mults.len()
    }

    /// Sum of all multiplicities, i.e. the dimension.
    pub fn mass(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Character of the tensor product.
    pub fn tensor(&self, other: &CharacterTable) -> CharacterTable {
        let mut out = CharacterTable::zero(self.rank);
        for (a, m) in &self.mults {
            for (b, n) in &other.mults {
                out.add(a + b, m * n);
            }
        }
        out
    }

    /// `mult(s·μ) = mult(μ)` for every simple reflection `s`.
    pub fn is_weyl_symmetric(&self, datum: &RootDatum) -> bool {
        datum
            .weyl_generators()
            .iter()
            .all(|s| self.mults.iter().all(|(mu, m)| self.get(&s.apply(mu)) == *m))
    }

    /// Multiplicity of the irreducible `V(μ)` in a Weyl-symmetric character:
    /// `∑_w det(w) · mult(w(μ+ρ̄) − ρ̄)`.
    pub fn irreducible_multiplicity(&self, datum: &RootDatum, mu: &RationalVector) -> i64 {
        let rho = datum.rho_bar();
        let shifted = mu + rho;
        datum
            .weyl_group()
            .iter()
            .map(|w| i64::from(w.sign()) * self.get(&(&w.apply(&shifted) - rho)) as i64)
            .sum()
    }
}

/// Degree → dimension, degrees strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims {
    pub entries: Vec<(usize, u64)>,
}

impl GradedDims {
    pub fn dims(&self) -> Vec<u64> {
        self.entries.iter().map(|(_, d)| *d).collect()
    }
}

fn inner(datum: &RootDatum, x: &RationalVector, y: &RationalVector) -> Rational {
    x.dot(&datum.gram().apply(y))
}

/// Weight multiplicities of `V(χ)` by Freudenthal's recursion, over the
/// Levi subgroup when one is given.
pub fn irr_character(datum: &RootDatum, chi: &RationalVector, levi: Option<&LeviDatum>) -> Result<CharacterTable> {
    datum.check_dim(chi)?;
    let d = levi.map_or(datum, |l| &l.datum);
    if !chi.is_integral() {
        return Err(SodError::NotIntegral(chi.to_string()));
    }
    if !d.is_dominant(chi, None) {
        return Err(SodError::NotDominant(chi.to_string()));
    }
    let rho = d.rho_bar();
    let top = inner(d, &(chi + rho), &(chi + rho));
    let mut table = CharacterTable::single(chi.clone());
    let mut layer = vec![chi.clone()];
    while !layer.is_empty() {
        let mut next: Vec<RationalVector> = Vec::new();
        for mu in &layer {
            for a in d.simple_roots() {
                let cand = mu - a;
                if !next.contains(&cand) {
                    next.push(cand);
                }
            }
        }
        next.sort();
        let mut kept = Vec::new();
        for mu in next {
            let denom = &top - inner(d, &(&mu + rho), &(&mu + rho));
            if !denom.is_positive() {
                continue;
            }
            let mut num = Rational::zero();
            for a in d.positive_roots() {
                let mut k = 1i64;
                loop {
                    let up = &mu + &a.scale(&rat(k));
                    let m = table.get(&up);
                    if m == 0 {
                        break;
                    }
                    num += rat(m as i64) * inner(d, &up, a);
                    k += 1;
                }
            }
            let m = rat(2) * num / denom;
            debug_assert!(m.is_integer());
            let m = m.to_integer().to_u64().unwrap_or(0);
            if m > 0 {
                table.add(mu.clone(), m);
                kept.push(mu);
            }
        }
        layer = kept;
    }
    Ok(table)
}

/// `∏_{α>0} ⟨α̌, χ+ρ̄⟩ / ⟨α̌, ρ̄⟩` for dominant `χ`.
pub fn weyl_dim(datum: &RootDatum, chi: &RationalVector, levi: Option<&LeviDatum>) -> u64 {
    let d = levi.map_or(datum, |l| &l.datum);
    let rho = d.rho_bar();
    let shifted = chi + rho;
    let mut p = Rational::one();
    for c in d.positive_coroots() {
        p *= c.dot(&shifted) / c.dot(rho);
    }
    p.to_integer().to_u64().unwrap_or(0)
}

/// Characters of `Sym^0 W, …, Sym^up_to W`.
pub fn sym_power_characters(rep: &RepSpec, up_to: usize) -> Vec<CharacterTable> {
    let n = rep.rank();
    let mut tables: Vec<CharacterTable> = (0..=up_to).map(|_| CharacterTable::zero(n)).collect();
    tables[0].add(RationalVector::zeros(n), 1);
    for b in rep.weights() {
        // Ascending degrees so each weight may be used repeatedly.
        for e in 1..=up_to {
            let (lower, upper) = tables.split_at_mut(e);
            for (mu, m) in lower[e - 1].iter() {
                upper[0].add(mu + b, *m);
            }
        }
    }
    tables
}

pub fn sym_power_character(rep: &RepSpec, d: usize) -> CharacterTable {
    sym_power_characters(rep, d).pop().expect("degree d is present")
}

/// `dim Hom_{G^λ}(V(μ), V(μ') ⊗ Sym^d W_λ)` for `d = 0..=up_to`, where the
/// group is `levi` and `coinv` lists the weights of `W_λ`.
pub fn hom_block_dims(
    levi: &RootDatum,
    mu: &RationalVector,
    mu_prime: &RationalVector,
    coinv: &RepSpec,
    up_to: usize,
) -> Result<GradedDims> {
    for w in [mu, mu_prime] {
        if !levi.is_dominant(w, None) {
            return Err(SodError::NotDominant(w.to_string()));
        }
    }
    let target = irr_character(levi, mu_prime, None)?;
    let entries = sym_power_characters(coinv, up_to)
        .iter()
        .enumerate()
        .map(|(d, s)| {
            let m = target.tensor(s).irreducible_multiplicity(levi, mu);
            (d, u64::try_from(m).expect("multiplicities are nonnegative"))
        })
        .collect();
    Ok(GradedDims { entries })
}

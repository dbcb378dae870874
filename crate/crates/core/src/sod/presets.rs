//! Example families: toric, `SL_2`, determinantal and Pfaffian.

use crate::error::{Result, SodError};
use crate::kernel::{rat, RationalVector};
use crate::rep::RepSpec;
use crate::roots::{GroupTag, RootDatum};

use super::nccr::{default_epsilon, toric_two_per_side};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Rank-one torus with the given integer weights.
    Toric(Vec<i64>),
    /// `⊕ S^{d_i} V` for `SL_2`.
    Sl2(Vec<usize>),
    /// `GL_n` acting on `V^h ⊕ (V^*)^h`, `n < h`.
    Determinantal { n: usize, h: usize },
    /// `Sp_{2n}` acting on `V^h`, `2n < h`.
    Pfaffian { n: usize, h: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2Case {
    /// `k^c` plus one of the seven small representations.
    A,
    /// Not in case A, and `s` odd.
    B,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Toric { two_per_side: bool },
    Sl2 { c: usize, s: u64, case: Sl2Case },
    Determinantal,
    Pfaffian { h_odd: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    pub family: Family,
    pub tag: GroupTag,
    pub datum: RootDatum,
    pub rep: RepSpec,
    pub epsilon: RationalVector,
    /// Genericity of `W_λ` known for the family, when the Levi has roots.
    pub genericity: Option<bool>,
    pub classification: Classification,
}

/// `s^{(n)}`, half the sum of `|weights|` of `S^n V`: `(n+1)²/4` for odd
/// `n` and `n(n+2)/4` for even `n`.
pub fn sl2_s(n: usize) -> u64 {
    let n = n as u64;
    if n % 2 == 1 {
        (n + 1) * (n + 1) / 4
    } else {
        n * (n + 2) / 4
    }
}

const CASE_A: [&[usize]; 7] = [&[1], &[2], &[1, 1], &[1, 2], &[2, 2], &[3], &[4]];

fn sl2_case(ds: &[usize], s: u64) -> Sl2Case {
    let mut nonzero: Vec<usize> = ds.iter().copied().filter(|&d| d > 0).collect();
    nonzero.sort_unstable();
    if CASE_A.iter().any(|a| *a == nonzero.as_slice()) {
        Sl2Case::A
    } else if s % 2 == 1 {
        Sl2Case::B
    } else {
        Sl2Case::Neither
    }
}

fn pm_units(n: usize, h: usize) -> Result<RepSpec> {
    let mut ws = Vec::new();
    for i in 0..n {
        ws.push((RationalVector::unit(n, i), h));
        ws.push((-&RationalVector::unit(n, i), h));
    }
    RepSpec::new(n, ws)
}

pub fn preset(family: &Family) -> Result<Preset> {
    let (tag, rep, epsilon, genericity, classification) = match family {
        Family::Toric(ws) => {
            if ws.is_empty() {
                return Err(SodError::InvalidParameters("a toric preset needs at least one weight".into()));
            }
            let rep = RepSpec::from_weights(1, ws.iter().map(|&w| RationalVector::from_ints(&[w])).collect())?;
            let two = toric_two_per_side(rep.weights());
            (GroupTag::Torus(1), rep, None, None, Classification::Toric { two_per_side: two })
        }
        Family::Sl2(ds) => {
            if ds.is_empty() {
                return Err(SodError::InvalidParameters("an SL(2) preset needs at least one summand".into()));
            }
            let tag = GroupTag::SL(2);
            let v = RepSpec::standard(&tag, 0, 1)?;
            let mut rep = RepSpec::zero(1);
            for &d in ds {
                let s = if d == 0 { RepSpec::trivial(1) } else { v.sym_power(d) };
                rep = rep.direct_sum(&s)?;
            }
            let c = ds.iter().filter(|&&d| d == 0).count();
            let s: u64 = ds.iter().map(|&d| sl2_s(d)).sum();
            let case = sl2_case(ds, s);
            let genericity = (case == Sl2Case::B).then_some(true);
            (tag, rep, None, genericity, Classification::Sl2 { c, s, case })
        }
        Family::Determinantal { n, h } => {
            if !(1..*h).contains(n) {
                return Err(SodError::InvalidParameters(format!("determinantal family needs 1 ≤ n < h, got n = {n}, h = {h}")));
            }
            let eps = RationalVector(vec![rat(1); *n]);
            (GroupTag::GL(*n), pm_units(*n, *h)?, Some(eps), Some(true), Classification::Determinantal)
        }
        Family::Pfaffian { n, h } => {
            if *n < 1 || 2 * n >= *h {
                return Err(SodError::InvalidParameters(format!("Pfaffian family needs n ≥ 1 and 2n < h, got n = {n}, h = {h}")));
            }
            let cls = Classification::Pfaffian { h_odd: h % 2 == 1 };
            (GroupTag::Sp(2 * n), pm_units(*n, *h)?, None, Some(true), cls)
        }
    };
    let datum = RootDatum::build(&tag)?;
    let epsilon = epsilon.unwrap_or_else(|| default_epsilon(&datum, rep.weights()));
    Ok(Preset { family: family.clone(), tag, datum, rep, epsilon, genericity, classification })
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| SodError::Parse(format!("expected a natural number, got {s:?}")))
}

/// `n=1,h=3` or `1,3`.
fn parse_pair(body: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = body.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(SodError::Parse(format!("expected two parameters n,h, got {body:?}")));
    }
    let mut n = None;
    let mut h = None;
    for (k, p) in parts.iter().enumerate() {
        match p.split_once('=') {
            Some(("n", x)) => n = Some(parse_usize(x)?),
            Some(("h", x)) => h = Some(parse_usize(x)?),
            Some((key, _)) => return Err(SodError::Parse(format!("unknown parameter {key:?}"))),
            None if k == 0 => n = Some(parse_usize(p)?),
            None => h = Some(parse_usize(p)?),
        }
    }
    match (n, h) {
        (Some(n), Some(h)) => Ok((n, h)),
        _ => Err(SodError::Parse(format!("expected parameters n and h, got {body:?}"))),
    }
}

/// `pfaffian:n=1,h=3`, `determinantal:n,h`, `sl2:d1,d2,…`, `toric` or
/// `toric:w1,w2,…`.
pub fn parse_preset(s: &str) -> Result<Family> {
    let (name, body) = match s.split_once(':') {
        Some((a, b)) => (a.trim(), Some(b)),
        None => (s.trim(), None),
    };
    match (name, body) {
        ("toric", None) => Ok(Family::Toric(vec![1, 1, -1, -1])),
        ("toric", Some(b)) => b
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| SodError::Parse(format!("expected an integer weight, got {x:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Family::Toric),
        ("sl2", Some(b)) => b.split(',').map(parse_usize).collect::<Result<Vec<_>>>().map(Family::Sl2),
        ("determinantal", Some(b)) => parse_pair(b).map(|(n, h)| Family::Determinantal { n, h }),
        ("pfaffian", Some(b)) => parse_pair(b).map(|(n, h)| Family::Pfaffian { n, h }),
        _ => Err(SodError::Parse(format!("unknown preset {s:?}"))),
    }
}

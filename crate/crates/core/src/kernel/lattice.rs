//! Lattice points in rational boxes, optionally restricted to a coset of a
//! finite-index sublattice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::rational::{ceil_int, floor_int, Rational, RationalVector};
use crate::error::{Result, SodError};

/// A closed interval; a missing end is infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        Interval { lo: Some(lo), hi: Some(hi) }
    }
}

/// The coset `offset + span_ℤ(columns)` of a full-rank sublattice of ℤⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    columns: Vec<Vec<BigInt>>,
    offset: Vec<BigInt>,
    // Lower-triangular column Hermite form, row-major, positive diagonal.
    hermite: Vec<Vec<BigInt>>,
}

impl TwistData {
    pub fn new(columns: Vec<Vec<i64>>, offset: Vec<i64>) -> Result<Self> {
        let dim = offset.len();
        for c in &columns {
            if c.len() != dim {
                return Err(SodError::DimensionMismatch { expected: dim, found: c.len() });
            }
        }
        let columns: Vec<Vec<BigInt>> = columns
            .into_iter()
            .map(|c| c.into_iter().map(BigInt::from).collect())
            .collect();
        let hermite = column_hermite(&columns, dim).ok_or_else(|| {
            SodError::InvalidParameters("sublattice columns do not have full rank".into())
        })?;
        Ok(TwistData {
            columns,
            offset: offset.into_iter().map(BigInt::from).collect(),
            hermite,
        })
    }

    /// The whole lattice ℤⁿ with offset 0.
    pub fn trivial(dim: usize) -> Self {
        let cols = (0..dim)
            .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
            .collect();
        TwistData::new(cols, vec![0; dim]).expect("identity has full rank")
    }

    pub fn dim(&self) -> usize {
        self.offset.len()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        self.columns
            .iter()
            .map(|c| c.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect())
            .collect()
    }

    pub fn offset(&self) -> Vec<i64> {
        self.offset.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect()
    }

    /// `[ℤⁿ : sublattice]`.
    pub fn index(&self) -> BigInt {
        (0..self.dim()).map(|i| self.hermite[i][i].clone()).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.index() == BigInt::from(1)
    }

    /// Integral `v` lies in the sublattice iff forward substitution through
    /// the triangular form stays integral.
    fn contains_difference(&self, v: &[BigInt]) -> bool {
        let n = self.dim();
        let mut y: Vec<BigInt> = Vec::with_capacity(n);
        for i in 0..n {
            let mut rest = v[i].clone();
            for (j, yj) in y.iter().enumerate() {
                rest -= &self.hermite[i][j] * yj;
            }
            let (q, r) = rest.div_rem(&self.hermite[i][i]);
            if !r.is_zero() {
                return false;
            }
            y.push(q);
        }
        true
    }
}

/// Membership of `chi` in the coset described by `t`.
pub fn twist_member(t: &TwistData, chi: &RationalVector) -> bool {
    if chi.dim() != t.dim() || !chi.is_integral() {
        return false;
    }
    let diff: Vec<BigInt> = chi
        .0
        .iter()
        .zip(&t.offset)
        .map(|(x, o)| x.to_integer() - o)
        .collect();
    t.contains_difference(&diff)
}

/// Column operations bring the generators to lower-triangular form
/// `dim × dim`; `None` when the rank is deficient.
fn column_hermite(columns: &[Vec<BigInt>], dim: usize) -> Option<Vec<Vec<BigInt>>> {
    let mut cols: Vec<Vec<BigInt>> = columns.to_vec();
    for i in 0..dim {
        // Euclid on row i across columns i.. until one nonzero entry remains.
        loop {
            let nonzero: Vec<usize> = (i..cols.len()).filter(|&j| !cols[j][i].is_zero()).collect();
            if nonzero.is_empty() {
                return None;
            }
            let p = *nonzero
                .iter()
                .min_by_key(|&&j| cols[j][i].abs())
                .expect("nonempty");
            cols.swap(i, p);
            if nonzero.len() == 1 {
                break;
            }
            for j in i + 1..cols.len() {
                if cols[j][i].is_zero() {
                    continue;
                }
                let q = cols[j][i].div_floor(&cols[i][i]);
                let (head, tail) = cols.split_at_mut(j);
                for (a, b) in tail[0].iter_mut().zip(&head[i]) {
                    *a -= &q * b;
                }
            }
        }
        if cols[i][i].is_negative() {
            for x in cols[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Some((0..dim).map(|r| (0..dim).map(|c| cols[c][r].clone()).collect()).collect())
}

/// Lattice points of `bbox` (intersected with the coset when given) that pass
/// `member`, in lexicographic order.
pub fn enumerate_lattice<F>(
    mut member: F,
    bbox: &[Interval],
    lattice: Option<&TwistData>,
) -> Result<Vec<RationalVector>>
where
    F: FnMut(&RationalVector) -> bool,
{
    let mut ranges = Vec::with_capacity(bbox.len());
    for (k, iv) in bbox.iter().enumerate() {
        let (Some(lo), Some(hi)) = (&iv.lo, &iv.hi) else {
            return Err(SodError::UnboundedRegion { coordinate: k });
        };
        let a = ceil_int(lo);
        let b = floor_int(hi);
        if a > b {
            return Ok(Vec::new());
        }
        ranges.push((a, b));
    }
    let mut out = Vec::new();
    let mut cur: Vec<BigInt> = ranges.iter().map(|(a, _)| a.clone()).collect();
    loop {
        let p = RationalVector(cur.iter().map(|x| Rational::from_integer(x.clone())).collect());
        if lattice.map_or(true, |t| twist_member(t, &p)) && member(&p) {
            out.push(p);
        }
        // Odometer with the last coordinate fastest gives lexicographic order.
        let mut k = cur.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < ranges[k].1 {
                cur[k] += 1;
                for (c, r) in cur.iter_mut().zip(&ranges).skip(k + 1) {
                    *c = r.0.clone();
                }
                break;
            }
        }
    }
}

//! Brute-force reference computations, written without linear programming
//! so they can check the exact kernels independently.
//!
//! Everything works on plain `BigRational` vectors.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves `m x = rhs` when the solution is unique.
fn solve_unique(m: &[Vec<Q>], rhs: &[Q], cols: usize) -> Option<Vec<Q>> {
    let rows = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().zip(rhs).map(|(r, b)| {
        let mut row = r.clone();
        row.push(b.clone());
        row
    }).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..=cols {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < cols || a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| a[i][cols].clone()).collect())
}

/// All basic feasible solutions of `{lo ≤ x ≤ hi, A x = b}` with finite
/// bounds: fix all but at most `rows(A)` coordinates at a bound and solve.
pub fn vertices(lo: &[Q], hi: &[Q], a: &[Vec<Q>], b: &[Q]) -> Vec<Vec<Q>> {
    let m = lo.len();
    let k = a.len().min(m);
    let mut out: Vec<Vec<Q>> = Vec::new();
    for mask in 0u32..(1 << m) {
        let free: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        if free.len() > k {
            continue;
        }
        let fixed: Vec<usize> = (0..m).filter(|i| mask & (1 << i) == 0).collect();
        for choice in 0u32..(1 << fixed.len()) {
            let mut x = vec![Q::zero(); m];
            for (t, &i) in fixed.iter().enumerate() {
                x[i] = if choice & (1 << t) == 0 { lo[i].clone() } else { hi[i].clone() };
            }
            let rhs: Vec<Q> = a
                .iter()
                .zip(b)
                .map(|(row, bi)| bi - fixed.iter().map(|&i| &row[i] * &x[i]).sum::<Q>())
                .collect();
            let sub: Vec<Vec<Q>> = a.iter().map(|row| free.iter().map(|&i| row[i].clone()).collect()).collect();
            let sol = if free.is_empty() {
                if rhs.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None }
            } else {
                solve_unique(&sub, &rhs, free.len())
            };
            let Some(sol) = sol else { continue };
            for (t, &i) in free.iter().enumerate() {
                x[i] = sol[t].clone();
            }
            if x.iter().enumerate().all(|(i, v)| v >= &lo[i] && v <= &hi[i]) && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out
}

/// `max c·x` over the polytope, `None` when empty.
pub fn lp_max(lo: &[Q], hi: &[Q], a: &[Vec<Q>], b: &[Q], c: &[Q]) -> Option<Q> {
    vertices(lo, hi, a, b).iter().map(|x| dot(c, x)).max()
}

/// Feasibility and, per coordinate, whether every feasible point sits at
/// the lower or upper bound.
pub fn forced(lo: &[Q], hi: &[Q], a: &[Vec<Q>], b: &[Q]) -> (bool, Vec<bool>, Vec<bool>) {
    let vs = vertices(lo, hi, a, b);
    let m = lo.len();
    if vs.is_empty() {
        return (false, vec![false; m], vec![false; m]);
    }
    let lower = (0..m).map(|i| vs.iter().all(|x| x[i] == lo[i])).collect();
    let upper = (0..m).map(|i| vs.iter().all(|x| x[i] == hi[i])).collect();
    (true, lower, upper)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Closed,
    HalfOpen,
    RelInt,
}

fn coefficient_system(gens: &[Vec<Q>], r: &Q, target: &[Q]) -> (Vec<Q>, Vec<Q>, Vec<Vec<Q>>) {
    let m = gens.len();
    let lo = vec![-r.clone(); m];
    let hi = vec![Q::zero(); m];
    let a = (0..target.len()).map(|c| gens.iter().map(|g| g[c].clone()).collect()).collect();
    (lo, hi, a)
}

/// `p ∈ shift + r·Σ` with coefficients in `[-r,0]`, `]-r,0]` or `]-r,0[`.
pub fn zonotope_member(gens: &[Vec<Q>], r: &Q, shift: &[Q], p: &[Q], kind: Kind) -> bool {
    let target: Vec<Q> = p.iter().zip(shift).map(|(x, s)| x - s).collect();
    let (lo, hi, a) = coefficient_system(gens, r, &target);
    let (feasible, lower, upper) = forced(&lo, &hi, &a, &target);
    feasible
        && match kind {
            Kind::Closed => true,
            Kind::HalfOpen => !lower.iter().any(|&f| f),
            Kind::RelInt => !lower.iter().chain(&upper).any(|&f| f),
        }
}

/// Searches coefficients on the grid `-r·k/n` for a closed-membership witness.
pub fn grid_witness(gens: &[Vec<Q>], r: &Q, shift: &[Q], p: &[Q], n: i64) -> bool {
    let m = gens.len();
    let steps: Vec<Q> = (0..=n).map(|k| -r * qf(k, n)).collect();
    let mut idx = vec![0usize; m];
    loop {
        let mut s = shift.to_vec();
        for (j, g) in gens.iter().enumerate() {
            for (c, x) in s.iter_mut().enumerate() {
                *x += &steps[idx[j]] * &g[c];
            }
        }
        if s.as_slice() == p {
            return true;
        }
        let Some(k) = (0..m).find(|&k| idx[k] < n as usize) else { return false };
        idx[k] += 1;
        for slot in idx.iter_mut().take(k) {
            *slot = 0;
        }
    }
}

/// Outward normals of the facets of `Σ̄` for positively spanning generators
/// of rank one or two.
fn facet_normals(gens: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let dim = gens[0].len();
    match dim {
        1 => vec![vec![q(1)], vec![q(-1)]],
        2 => gens
            .iter()
            .filter(|g| !g.iter().all(Zero::is_zero))
            .flat_map(|g| [vec![-g[1].clone(), g[0].clone()], vec![g[1].clone(), -g[0].clone()]])
            .collect(),
        _ => panic!("facet normals are implemented for rank one and two"),
    }
}

/// `max_{y ∈ Σ̄} ⟨u,y⟩` for `Σ̄ = {∑ a_i g_i : a_i ∈ [-1,0]}`.
fn support(gens: &[Vec<Q>], u: &[Q]) -> Q {
    gens.iter().map(|g| -dot(u, g)).filter(|x| x.is_positive()).sum()
}

/// Signature `(r, S⁺, S⁻, S⁰)` of `p` relative to `shift + rΣ̄`, from the
/// gauge function and the facets tight at `p`. Needs positively spanning
/// generators of rank one or two.
pub fn signature(gens: &[Vec<Q>], shift: &[Q], p: &[Q]) -> (Q, Vec<usize>, Vec<usize>, Vec<usize>) {
    let x: Vec<Q> = p.iter().zip(shift).map(|(a, b)| a - b).collect();
    let m = gens.len();
    if x.iter().all(Zero::is_zero) {
        return (Q::zero(), Vec::new(), Vec::new(), (0..m).collect());
    }
    let normals = facet_normals(gens);
    let ratio = |u: &Vec<Q>| dot(u, &x) / support(gens, u);
    let r = normals.iter().map(ratio).max().expect("normals exist");
    let tight: Vec<&Vec<Q>> = normals.iter().filter(|u| ratio(u) == r).collect();
    let (mut plus, mut minus, mut zero) = (Vec::new(), Vec::new(), Vec::new());
    for (j, g) in gens.iter().enumerate() {
        if tight.iter().any(|u| dot(u, g).is_negative()) {
            plus.push(j);
        } else if tight.iter().any(|u| dot(u, g).is_positive()) {
            minus.push(j);
        } else {
            zero.push(j);
        }
    }
    (r, plus, minus, zero)
}

/// Number of degree-`d` monomials in variables of the given weights, by
/// weight, from an explicit listing.
pub fn monomial_weight_counts(weights: &[Vec<Q>], dim: usize, d: usize) -> BTreeMap<Vec<Q>, u64> {
    let n = weights.len();
    let mut out = BTreeMap::new();
    if n == 0 {
        if d == 0 {
            out.insert(vec![Q::zero(); dim], 1);
        }
        return out;
    }
    let mut idx = vec![0usize; d];
    loop {
        let mut s = vec![Q::zero(); dim];
        for &i in &idx {
            for (c, x) in s.iter_mut().enumerate() {
                *x += &weights[i][c];
            }
        }
        *out.entry(s).or_insert(0) += 1;
        let Some(k) = (0..d).rev().find(|&k| idx[k] < n - 1) else { break };
        let v = idx[k] + 1;
        for slot in idx.iter_mut().skip(k) {
            *slot = v;
        }
    }
    out
}

/// `∑_w sign(w) · counts[w(μ+ρ) − ρ]` over the listed group elements.
pub fn alternating_multiplicity(
    counts: &BTreeMap<Vec<Q>, u64>,
    group: &[(Vec<Vec<Q>>, i8)],
    rho: &[Q],
    mu: &[Q],
) -> i64 {
    let shifted: Vec<Q> = mu.iter().zip(rho).map(|(a, b)| a + b).collect();
    group
        .iter()
        .map(|(m, sign)| {
            let image: Vec<Q> = m.iter().map(|row| dot(row, &shifted)).zip(rho).map(|(a, b)| a - b).collect();
            i64::from(*sign) * counts.get(&image).copied().unwrap_or(0) as i64
        })
        .sum()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_vertices() {
        let lo = vec![q(0), q(0)];
        let hi = vec![q(1), q(1)];
        assert_eq!(vertices(&lo, &hi, &[], &[]).len(), 4);
        let a = vec![vec![q(1), q(1)]];
        let vs = vertices(&lo, &hi, &a, &[q(1)]);
        assert_eq!(vs.len(), 2);
        assert_eq!(lp_max(&lo, &hi, &a, &[q(1)], &[q(2), q(1)]), Some(q(2)));
    }

    #[test]
    fn interval_signature() {
        let gens = vec![vec![q(1)], vec![q(1)], vec![q(-1)], vec![q(-1)]];
        let (r, p, m, z) = signature(&gens, &[q(0)], &[q(3)]);
        assert_eq!(r, qf(3, 2));
        assert_eq!((p, m, z), (vec![2, 3], vec![0, 1], vec![]));
        assert!(zonotope_member(&gens, &q(1), &[q(0)], &[q(2)], Kind::Closed));
        assert!(!zonotope_member(&gens, &q(1), &[q(0)], &[q(2)], Kind::HalfOpen));
        assert!(zonotope_member(&gens, &q(1), &[q(0)], &[q(-1)], Kind::RelInt));
        assert!(grid_witness(&gens, &q(1), &[q(0)], &[q(2)], 2));
    }

    #[test]
    fn monomials() {
        let w = vec![vec![q(1)], vec![q(-1)]];
        let c = monomial_weight_counts(&w, 1, 2);
        assert_eq!(c.values().sum::<u64>(), 3);
        assert_eq!(binomial(5, 2), 10);
    }
}

//! Exact bounded-variable primal simplex.
//!
//! Programs are `A x = b` with per-variable bounds, each bound absent, closed
//! or open. The simplex itself only sees the closed relaxation; strictness is
//! recovered afterwards by slack maximization: a convex combination of feasible
//! points, one per open bound with positive slack, satisfies every open bound
//! strictly at once.
//!
//! Bounds are handled implicitly (nonbasic variables sit at a bound, or at 0
//! when free) so the tableau has one row per equality. Pivoting follows
//! Bland's rule, including bound flips, which rules out cycling.

use num_traits::{One, Signed, Zero};

use super::rational::{Rational, RationalVector};
use crate::error::{Result, SodError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    Free,
    Closed(Rational),
    Open(Rational),
}

impl Bound {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Bound::Free => None,
            Bound::Closed(v) | Bound::Open(v) => Some(v),
        }
    }

    pub fn is_open(&self) -> bool {
        matches!(self, Bound::Open(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Le,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoxedLinearProgram {
    num_vars: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    lower: Vec<Bound>,
    upper: Vec<Bound>,
    objective: Option<Vec<Rational>>,
}

impl BoxedLinearProgram {
    /// `num_vars` free variables, no rows.
    pub fn new(num_vars: usize) -> Self {
        BoxedLinearProgram {
            num_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
            lower: vec![Bound::Free; num_vars],
            upper: vec![Bound::Free; num_vars],
            objective: None,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn lower(&self, i: usize) -> &Bound {
        &self.lower[i]
    }

    pub fn upper(&self, i: usize) -> &Bound {
        &self.upper[i]
    }

    pub fn set_bounds(&mut self, i: usize, lower: Bound, upper: Bound) {
        self.lower[i] = lower;
        self.upper[i] = upper;
    }

    /// Appends a variable (zero in every existing row) and returns its index.
    pub fn add_var(&mut self, lower: Bound, upper: Bound) -> usize {
        for row in &mut self.rows {
            row.push(Rational::zero());
        }
        if let Some(c) = &mut self.objective {
            c.push(Rational::zero());
        }
        self.lower.push(lower);
        self.upper.push(upper);
        self.num_vars += 1;
        self.num_vars - 1
    }

    pub fn add_equality(&mut self, row: Vec<Rational>, rhs: Rational) -> Result<()> {
        check_len(self.num_vars, row.len())?;
        self.rows.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    /// Adds `row·x ≤ rhs` (or `≥`) through a fresh nonnegative slack variable,
    /// whose index is returned.
    pub fn add_inequality(&mut self, row: Vec<Rational>, rel: Relation, rhs: Rational) -> Result<usize> {
        check_len(self.num_vars, row.len())?;
        let s = self.add_var(Bound::Closed(Rational::zero()), Bound::Free);
        let mut row = row;
        row.push(match rel {
            Relation::Le => Rational::one(),
            Relation::Ge => -Rational::one(),
        });
        self.rows.push(row);
        self.rhs.push(rhs);
        Ok(s)
    }

    pub fn set_objective(&mut self, c: Vec<Rational>) -> Result<()> {
        check_len(self.num_vars, c.len())?;
        self.objective = Some(c);
        Ok(())
    }

    pub fn objective(&self) -> Option<&[Rational]> {
        self.objective.as_deref()
    }

    fn validate(&self) -> Result<()> {
        for row in &self.rows {
            check_len(self.num_vars, row.len())?;
        }
        check_len(self.num_vars, self.lower.len())?;
        check_len(self.num_vars, self.upper.len())?;
        if let Some(c) = &self.objective {
            check_len(self.num_vars, c.len())?;
        }
        Ok(())
    }

    fn has_open_bound(&self) -> bool {
        self.lower.iter().chain(&self.upper).any(Bound::is_open)
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(SodError::DimensionMismatch { expected, found })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Infeasible,
    Unbounded,
    Optimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Optimal value of the closed relaxation.
    pub value: Option<Rational>,
    /// An optimal vertex of the closed relaxation.
    pub witness: Option<RationalVector>,
    /// Whether the optimum is also reached with every open bound strict.
    pub attained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessReport {
    pub feasible: bool,
    pub lower_forced: Vec<bool>,
    pub upper_forced: Vec<bool>,
}

/// Exact optimum over the closed relaxation.
pub fn lp_optimize(prog: &BoxedLinearProgram, sense: Sense) -> Result<LpOutcome> {
    prog.validate()?;
    let Some(c) = prog.objective.clone() else {
        return Err(SodError::InvalidParameters("linear program has no objective".into()));
    };
    let cost: Vec<Rational> = match sense {
        Sense::Minimize => c.clone(),
        Sense::Maximize => c.iter().map(|x| -x).collect(),
    };
    let Some(mut s) = Simplex::phase_one(prog) else {
        return Ok(LpOutcome { status: LpStatus::Infeasible, value: None, witness: None, attained: false });
    };
    match s.optimize(&cost) {
        Step::Unbounded(_) => Ok(LpOutcome {
            status: LpStatus::Unbounded,
            value: None,
            witness: None,
            attained: false,
        }),
        Step::Optimal => {
            let x = s.point(prog.num_vars);
            let value = x.dot(&RationalVector(c.clone()));
            let attained = if prog.has_open_bound() {
                let mut face = prog.clone();
                face.add_equality(c, value.clone())?;
                strict_feasible(&face)
            } else {
                true
            };
            Ok(LpOutcome { status: LpStatus::Optimal, value: Some(value), witness: Some(x), attained })
        }
    }
}

/// Which bounds hold with equality at every point of the closed relaxation.
pub fn forced_tight(prog: &BoxedLinearProgram) -> TightnessReport {
    let n = prog.num_vars;
    let Some(mut s) = Simplex::phase_one(prog) else {
        return TightnessReport { feasible: false, lower_forced: vec![false; n], upper_forced: vec![false; n] };
    };
    let mut lower: Vec<bool> = prog.lower.iter().map(|b| b.value().is_some()).collect();
    let mut upper: Vec<bool> = prog.upper.iter().map(|b| b.value().is_some()).collect();
    let prune = |x: &[Rational], lower: &mut [bool], upper: &mut [bool]| {
        for i in 0..n {
            if lower[i] && Some(&x[i]) != prog.lower[i].value() {
                lower[i] = false;
            }
            if upper[i] && Some(&x[i]) != prog.upper[i].value() {
                upper[i] = false;
            }
        }
    };
    prune(&s.x, &mut lower, &mut upper);
    for i in 0..n {
        for maximize in [true, false] {
            let pending = if maximize { lower[i] } else { upper[i] };
            if !pending {
                continue;
            }
            let mut cost = vec![Rational::zero(); s.ncols];
            cost[i] = if maximize { -Rational::one() } else { Rational::one() };
            match s.optimize(&cost) {
                Step::Optimal => prune(&s.x, &mut lower, &mut upper),
                Step::Unbounded(p) => prune(&p, &mut lower, &mut upper),
            }
        }
    }
    TightnessReport { feasible: true, lower_forced: lower, upper_forced: upper }
}

/// Whether some point satisfies the equalities, the closed bounds, and every
/// open bound strictly.
pub fn strict_feasible(prog: &BoxedLinearProgram) -> bool {
    strict_point(prog).is_some()
}

/// A point witnessing [`strict_feasible`], built as the average of one
/// slack-maximizing point per open bound.
pub fn strict_point(prog: &BoxedLinearProgram) -> Option<RationalVector> {
    let n = prog.num_vars;
    let mut s = Simplex::phase_one(prog)?;
    let mut witnesses: Vec<Vec<Rational>> = vec![s.x[..n].to_vec()];
    for i in 0..n {
        for (bound, maximize) in [(&prog.lower[i], true), (&prog.upper[i], false)] {
            let Bound::Open(v) = bound else { continue };
            if witnesses.iter().any(|w| &w[i] != v) {
                continue;
            }
            let mut cost = vec![Rational::zero(); s.ncols];
            cost[i] = if maximize { -Rational::one() } else { Rational::one() };
            let p = match s.optimize(&cost) {
                Step::Optimal => s.x.clone(),
                Step::Unbounded(p) => p,
            };
            if &p[i] == v {
                return None;
            }
            witnesses.push(p[..n].to_vec());
        }
    }
    let k = Rational::from_integer(witnesses.len().into());
    let mut avg = vec![Rational::zero(); n];
    for w in &witnesses {
        for (a, x) in avg.iter_mut().zip(w) {
            *a += x;
        }
    }
    Some(RationalVector(avg.into_iter().map(|a| a / &k).collect()))
}

enum Step {
    Optimal,
    /// A feasible point strictly better than the current vertex, one unit
    /// along an improving ray.
    Unbounded(Vec<Rational>),
}

enum Leave {
    Row(usize),
    Flip,
}

/// Dense tableau `B⁻¹A` with explicit values for every variable.
#[derive(Clone)]
struct Simplex {
    ncols: usize,
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    basic_row: Vec<Option<usize>>,
    x: Vec<Rational>,
    lo: Vec<Option<Rational>>,
    hi: Vec<Option<Rational>>,
}

impl Simplex {
    /// Finds a feasible basis of the closed relaxation, or `None`.
    fn phase_one(prog: &BoxedLinearProgram) -> Option<Simplex> {
        let n = prog.num_vars;
        let m = prog.rows.len();
        let mut lo: Vec<Option<Rational>> = prog.lower.iter().map(|b| b.value().cloned()).collect();
        let mut hi: Vec<Option<Rational>> = prog.upper.iter().map(|b| b.value().cloned()).collect();
        for i in 0..n {
            if let (Some(l), Some(h)) = (&lo[i], &hi[i]) {
                if l > h {
                    return None;
                }
            }
        }
        let mut x: Vec<Rational> = (0..n)
            .map(|i| lo[i].clone().or_else(|| hi[i].clone()).unwrap_or_else(Rational::zero))
            .collect();

        let mut t = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (r, (row, b)) in prog.rows.iter().zip(&prog.rhs).enumerate() {
            let residual = row.iter().zip(&x).fold(b.clone(), |acc, (a, v)| acc - a * v);
            let neg = residual.is_negative();
            let mut trow: Vec<Rational> = row.iter().map(|a| if neg { -a } else { a.clone() }).collect();
            trow.extend((0..m).map(|k| if k == r { Rational::one() } else { Rational::zero() }));
            t.push(trow);
            basis.push(n + r);
            x.push(residual.abs());
            lo.push(Some(Rational::zero()));
            hi.push(None);
        }
        let ncols = n + m;
        let mut basic_row = vec![None; ncols];
        for (r, &b) in basis.iter().enumerate() {
            basic_row[b] = Some(r);
        }
        let mut s = Simplex { ncols, t, basis, basic_row, x, lo, hi };
        if m == 0 {
            return Some(s);
        }

        let cost: Vec<Rational> = (0..ncols)
            .map(|j| if j >= n { Rational::one() } else { Rational::zero() })
            .collect();
        // Phase one is bounded below by 0.
        let _ = s.optimize(&cost);
        if s.x[n..].iter().any(|v| !v.is_zero()) {
            return None;
        }

        let mut redundant = Vec::new();
        for r in 0..m {
            if s.basis[r] < n {
                continue;
            }
            match (0..n).find(|&j| s.basic_row[j].is_none() && !s.t[r][j].is_zero()) {
                Some(j) => s.pivot(r, j),
                None => redundant.push(r),
            }
        }
        let keep: Vec<usize> = (0..m).filter(|r| !redundant.contains(r)).collect();
        let t: Vec<Vec<Rational>> = keep.iter().map(|&r| s.t[r][..n].to_vec()).collect();
        let basis: Vec<usize> = keep.iter().map(|&r| s.basis[r]).collect();
        let mut basic_row = vec![None; n];
        for (r, &b) in basis.iter().enumerate() {
            basic_row[b] = Some(r);
        }
        s.x.truncate(n);
        s.lo.truncate(n);
        s.hi.truncate(n);
        Some(Simplex { ncols: n, t, basis, basic_row, x: s.x, lo: s.lo, hi: s.hi })
    }

    fn point(&self, n: usize) -> RationalVector {
        RationalVector(self.x[..n].to_vec())
    }

    /// Minimizes `cost·x` from the current feasible basis.
    fn optimize(&mut self, cost: &[Rational]) -> Step {
        loop {
            let Some((j, increase)) = self.entering(cost) else {
                return Step::Optimal;
            };
            let dir = if increase { Rational::one() } else { -Rational::one() };
            let mut best: Option<(Rational, usize, Leave)> = None;
            let mut offer = |theta: Rational, var: usize, leave: Leave| {
                let better = match &best {
                    None => true,
                    Some((b, v, _)) => theta < *b || (theta == *b && var < *v),
                };
                if better {
                    best = Some((theta, var, leave));
                }
            };
            if let (Some(l), Some(h)) = (&self.lo[j], &self.hi[j]) {
                offer(h - l, j, Leave::Flip);
            }
            for (r, row) in self.t.iter().enumerate() {
                let a = &row[j];
                if a.is_zero() {
                    continue;
                }
                let b = self.basis[r];
                let rate = a * &dir;
                if rate.is_positive() {
                    if let Some(l) = &self.lo[b] {
                        offer((&self.x[b] - l) / &rate, b, Leave::Row(r));
                    }
                } else if let Some(h) = &self.hi[b] {
                    offer((h - &self.x[b]) / -&rate, b, Leave::Row(r));
                }
            }
            let Some((theta, _, leave)) = best else {
                let mut p = self.x.clone();
                p[j] += &dir;
                for (r, row) in self.t.iter().enumerate() {
                    p[self.basis[r]] -= &dir * &row[j];
                }
                return Step::Unbounded(p);
            };
            let step = &dir * &theta;
            if !step.is_zero() {
                self.x[j] += &step;
                for r in 0..self.t.len() {
                    let delta = &step * &self.t[r][j];
                    self.x[self.basis[r]] -= delta;
                }
            }
            if let Leave::Row(r) = leave {
                self.pivot(r, j);
            }
        }
    }

    /// Lowest-index improving nonbasic column and its direction.
    fn entering(&self, cost: &[Rational]) -> Option<(usize, bool)> {
        let basic_cost: Vec<(usize, &Rational)> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| !cost[b].is_zero())
            .map(|(r, &b)| (r, &cost[b]))
            .collect();
        for j in 0..self.ncols {
            if self.basic_row[j].is_some() {
                continue;
            }
            let mut d = cost[j].clone();
            for &(r, cb) in &basic_cost {
                let a = &self.t[r][j];
                if !a.is_zero() {
                    d -= cb * a;
                }
            }
            if d.is_negative() && self.hi[j].as_ref().map_or(true, |h| &self.x[j] < h) {
                return Some((j, true));
            }
            if d.is_positive() && self.lo[j].as_ref().map_or(true, |l| &self.x[j] > l) {
                return Some((j, false));
            }
        }
        None
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.t[r][j].recip();
        for v in self.t[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.t[r].clone();
        for (k, row) in self.t.iter_mut().enumerate() {
            if k == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        let old = self.basis[r];
        self.basic_row[old] = None;
        self.basic_row[j] = Some(r);
        self.basis[r] = j;
    }
}

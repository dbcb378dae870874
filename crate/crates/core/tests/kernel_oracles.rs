//! The exact simplex and the zonotope kernels against brute-force vertex and
//! grid enumeration.

use proptest::prelude::*;
use sodlab_core::kernel::{
    enumerate_lattice, forced_tight, lp_optimize, strict_feasible, Bound, BoxedLinearProgram, Interval, LpStatus,
    Sense,
};
use sodlab_core::zonotope::{face_signature_at, member, min_radius, Radius, Variant, ZonotopeQuery};
use sodlab_core::{frac, rat, Rational, RationalVector};
use sodlab_oracles as oracle;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-32i64..=32, 1i64..=32).prop_map(|(n, d)| frac(n, d))
}

#[derive(Clone, Debug)]
struct Instance {
    lo: Vec<Rational>,
    hi: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    cost: Vec<Rational>,
    open: Vec<(bool, bool)>,
}

fn instance() -> impl Strategy<Value = Instance> {
    (1usize..=5, 0usize..=2).prop_flat_map(|(n, k)| {
        (
            prop::collection::vec((small_rational(), small_rational()), n),
            prop::collection::vec(prop::collection::vec(-3i64..=3, n), k),
            prop::collection::vec(small_rational(), k),
            prop::collection::vec(-4i64..=4, n),
            prop::collection::vec((any::<bool>(), any::<bool>()), n),
        )
            .prop_map(|(bounds, rows, rhs, cost, open)| {
                let (lo, hi): (Vec<_>, Vec<_>) =
                    bounds.into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).unzip();
                Instance {
                    lo,
                    hi,
                    rows: rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect(),
                    rhs,
                    cost: cost.into_iter().map(rat).collect(),
                    open,
                }
            })
    })
}

fn program(inst: &Instance, with_open: bool) -> BoxedLinearProgram {
    let mut p = BoxedLinearProgram::new(inst.lo.len());
    for i in 0..inst.lo.len() {
        let (ol, oh) = if with_open { inst.open[i] } else { (false, false) };
        let lo = if ol { Bound::Open(inst.lo[i].clone()) } else { Bound::Closed(inst.lo[i].clone()) };
        let hi = if oh { Bound::Open(inst.hi[i].clone()) } else { Bound::Closed(inst.hi[i].clone()) };
        p.set_bounds(i, lo, hi);
    }
    for (r, b) in inst.rows.iter().zip(&inst.rhs) {
        p.add_equality(r.clone(), b.clone()).unwrap();
    }
    p.set_objective(inst.cost.clone()).unwrap();
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn optimum_matches_vertex_enumeration(inst in instance()) {
        let p = program(&inst, false);
        let out = lp_optimize(&p, Sense::Maximize).unwrap();
        let best = oracle::lp_max(&inst.lo, &inst.hi, &inst.rows, &inst.rhs, &inst.cost);
        match best {
            None => prop_assert_eq!(out.status, LpStatus::Infeasible),
            Some(v) => {
                prop_assert_eq!(out.status, LpStatus::Optimal);
                prop_assert_eq!(out.value, Some(v));
            }
        }
    }

    #[test]
    fn tightness_matches_vertex_enumeration(inst in instance()) {
        let p = program(&inst, false);
        let t = forced_tight(&p);
        let (feasible, lower, upper) = oracle::forced(&inst.lo, &inst.hi, &inst.rows, &inst.rhs);
        prop_assert_eq!(t.feasible, feasible);
        if feasible {
            prop_assert_eq!(t.lower_forced, lower);
            prop_assert_eq!(t.upper_forced, upper);
        }
    }

    #[test]
    fn strictness_matches_vertex_enumeration(inst in instance()) {
        let p = program(&inst, true);
        let (feasible, lower, upper) = oracle::forced(&inst.lo, &inst.hi, &inst.rows, &inst.rhs);
        let expect = feasible
            && (0..inst.lo.len()).all(|i| !(inst.open[i].0 && lower[i]) && !(inst.open[i].1 && upper[i]));
        prop_assert_eq!(strict_feasible(&p), expect);
    }
}

fn generators() -> impl Strategy<Value = Vec<RationalVector>> {
    (1usize..=2).prop_flat_map(|dim| {
        prop::collection::vec(prop::collection::vec(-2i64..=2, dim), 1..=5)
            .prop_map(|gs| gs.into_iter().map(|g| RationalVector::from_ints(&g)).collect())
    })
}

fn raw(v: &[RationalVector]) -> Vec<Vec<Rational>> {
    v.iter().map(|g| g.0.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn membership_matches_oracle(gens in generators(), r in (1i64..=8, 1i64..=4), pt in prop::collection::vec(-16i64..=16, 2)) {
        let dim = gens[0].dim();
        let r = frac(r.0, r.1);
        let shift = RationalVector::zeros(dim);
        let p = RationalVector(pt[..dim].iter().map(|&x| frac(x, 4)).collect());
        for (variant, kind) in [
            (Variant::Closed, oracle::Kind::Closed),
            (Variant::HalfOpen, oracle::Kind::HalfOpen),
            (Variant::RelInt, oracle::Kind::RelInt),
        ] {
            let q = ZonotopeQuery::new(gens.clone(), r.clone(), shift.clone(), variant);
            let expect = oracle::zonotope_member(&raw(&gens), &r, &shift.0, &p.0, kind);
            prop_assert_eq!(member(&q, &p), expect, "{:?}", variant);
        }
        if oracle::grid_witness(&raw(&gens), &r, &shift.0, &p.0, 4) {
            prop_assert!(member(&ZonotopeQuery::new(gens.clone(), r, shift, Variant::Closed), &p));
        }
    }

    #[test]
    fn radius_and_faces_match_gauge(gens in generators(), pt in prop::collection::vec(-12i64..=12, 2)) {
        let dim = gens[0].dim();
        prop_assume!(sodlab_core::rep::in_cone(&gens, &RationalVector::zeros(dim)));
        let mut full = gens.clone();
        full.extend(gens.iter().map(|g| -g));
        full.sort();
        prop_assume!(full.iter().any(|g| !g.is_zero()));
        let rank = sodlab_core::kernel::span_basis(&full, dim).len();
        prop_assume!(rank == dim);
        let shift = RationalVector::zeros(dim);
        let p = RationalVector(pt[..dim].iter().map(|&x| frac(x, 2)).collect());
        let (r, plus, minus, zero) = oracle::signature(&raw(&full), &shift.0, &p.0);
        prop_assert_eq!(min_radius(&full, &shift, &p), Radius::Finite(r.clone()));
        let sig = face_signature_at(&full, &shift, &p).unwrap();
        prop_assert_eq!(sig.r, r);
        prop_assert_eq!((sig.s_plus, sig.s_minus, sig.s_zero), (plus, minus, zero));
    }

    #[test]
    fn lattice_enumeration_matches_loop(bounds in prop::collection::vec((-20i64..=20, -20i64..=20), 1..=3)) {
        let bbox: Vec<Interval> = bounds.iter().map(|&(a, b)| Interval::new(frac(a, 3), frac(b, 3))).collect();
        let got = enumerate_lattice(|_| true, &bbox, None).unwrap();
        let mut count = 1usize;
        for &(a, b) in &bounds {
            let lo = (a as f64 / 3.0).ceil() as i64;
            let hi = (b as f64 / 3.0).floor() as i64;
            count *= if hi >= lo { (hi - lo + 1) as usize } else { 0 };
        }
        prop_assert_eq!(got.len(), count);
        prop_assert!(got.windows(2).all(|w| w[0] < w[1]));
    }
}

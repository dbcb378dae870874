//! Acceptance criteria, one PASS/FAIL line each. Every criterion is exact;
//! the only tolerance is a wall-clock limit per criterion.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sodlab_core::characters::hom_block_dims;
use sodlab_core::kernel::{enumerate_lattice, forced_tight, lp_optimize, BoxedLinearProgram, Bound, LpStatus, Sense, TwistData};
use sodlab_core::partition::{
    canonical_lambda, cell_members, dominant_box, order_key, partition_region, signature_of, validate_reduction_setting,
    ShiftProfile,
};
use sodlab_core::rep::{has_t_stable_point, weight_signs, RepSpec};
use sodlab_core::roots::RootDatum;
use sodlab_core::sod::{certify_nccr, enumerate_sod, preset, Classification, Family, Sl2Case};
use sodlab_core::zonotope::{
    bounding_box, is_weakly_generic, member, member_eps, EpsMode, EpsShift, FaceSignature, Variant, ZonotopeQuery,
};
use sodlab_core::{frac, rat, Rational, RationalVector};
use sodlab_oracles as oracle;

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn raw(v: &[RationalVector]) -> Vec<Vec<Rational>> {
    v.iter().map(|g| g.0.clone()).collect()
}

fn pfaffian_parity() -> Check {
    let mut cases = 0;
    for n in 1..=3usize {
        for h in 2 * n + 1..=7 {
            let p = preset(&Family::Pfaffian { n, h }).map_err(|e| e.to_string())?;
            let z = RationalVector::zeros(n);
            let c = certify_nccr(&p.datum, &p.rep, &z, &z, &z, Some(&TwistData::trivial(n)), p.genericity)
                .map_err(|e| e.to_string())?;
            ensure(c.prazno_empty == (h % 2 == 1), || {
                format!("n={n}, h={h}: prazno_empty={} with points {:?}", c.prazno_empty, c.prazno_points)
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n,h) pairs"))
}

fn determinantal() -> Check {
    for (n, h) in [(1, 2), (1, 3), (2, 3)] {
        let p = preset(&Family::Determinantal { n, h }).map_err(|e| e.to_string())?;
        let z = RationalVector::zeros(n);
        let gens = p.rep.weights().to_vec();
        let weak = is_weakly_generic(&p.epsilon, &p.datum, &gens).map_err(|e| e.to_string())?;
        ensure(weak, || format!("n={n}, h={h}: ε={} not weakly generic", p.epsilon))?;
        let c = certify_nccr(&p.datum, &p.rep, &z, &z, &p.epsilon, None, p.genericity).map_err(|e| e.to_string())?;
        ensure(c.prazno_empty, || format!("n={n}, h={h}: prazno points {:?}", c.prazno_points))?;
        let center = -p.datum.rho_bar();
        let half = frac(1, 2);
        let both = EpsShift { epsilon: p.epsilon.clone(), mode: EpsMode::PlusMinus };
        let half_open = ZonotopeQuery::new(gens.clone(), half.clone(), center.clone(), Variant::HalfOpen);
        let bbox = bounding_box(&gens, &half, &center);
        let a = enumerate_lattice(|x| member_eps(&gens, &half, &center, &both, x), &bbox, None).map_err(|e| e.to_string())?;
        let b = enumerate_lattice(|x| member(&half_open, x), &bbox, None).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("n={n}, h={h}: ±ε window has {} points, half-open window {}", a.len(), b.len()))?;
    }
    Ok("3 families, windows equal".into())
}

fn sl2_catalog() -> Check {
    for ds in [vec![1], vec![2], vec![1, 1], vec![1, 2], vec![2, 2], vec![3], vec![4]] {
        let p = preset(&Family::Sl2(ds.clone())).map_err(|e| e.to_string())?;
        ensure(matches!(p.classification, Classification::Sl2 { case: Sl2Case::A, .. }), || {
            format!("{ds:?} classified {:?}", p.classification)
        })?;
    }
    let mut lists: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(ds) = stack.pop() {
        let s: u64 = ds.iter().map(|&d| sodlab_core::sod::sl2_s(d)).sum();
        if !ds.is_empty() {
            lists.push(ds.clone());
        }
        for d in ds.last().copied().unwrap_or(1)..=6 {
            if s + sodlab_core::sod::sl2_s(d) <= 9 {
                let mut next = ds.clone();
                next.push(d);
                stack.push(next);
            }
        }
    }
    let mut checked = 0;
    for ds in lists {
        let p = preset(&Family::Sl2(ds.clone())).map_err(|e| e.to_string())?;
        let Classification::Sl2 { s, .. } = p.classification else { unreachable!() };
        if s % 2 == 0 {
            continue;
        }
        let z = RationalVector::zeros(1);
        let c = certify_nccr(&p.datum, &p.rep, &z, &z, &z, None, None).map_err(|e| e.to_string())?;
        // Independent count: ½Σ̄ is the interval between half the sums of
        // the negative and of the positive weights.
        let ws: Vec<Rational> = p.rep.weights().iter().map(|w| w[0].clone()).collect();
        let lo = rat(-1) + ws.iter().filter(|x| **x < rat(0)).sum::<Rational>() / rat(2);
        let hi = rat(-1) + ws.iter().filter(|x| **x > rat(0)).sum::<Rational>() / rat(2);
        let count = (0..=s as i64).filter(|&x| lo <= rat(x) && rat(x) <= hi).count() as u64;
        ensure(c.window.len() as u64 == (s - 1) / 2 && count == (s - 1) / 2, || {
            format!("{ds:?}: s={s}, window {}, enumeration {count}", c.window.len())
        })?;
        checked += 1;
    }
    Ok(format!("case A list classified, {checked} odd-s windows of size (s-1)/2"))
}

const GROUPS: [&str; 4] = ["Torus(1)", "Torus(2)", "SL(2)", "Sp(4)"];

fn random_instance(rng: &mut ChaCha8Rng) -> (RootDatum, RepSpec) {
    loop {
        let datum = RootDatum::from_tag(GROUPS[rng.gen_range(0..GROUPS.len())]).unwrap();
        let n = datum.rank();
        let mut ws = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let seed: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            let seed = RationalVector::from_ints(&seed);
            for s in [seed.clone(), -&seed] {
                let orbit: BTreeSet<RationalVector> = datum.weyl_group().iter().map(|w| w.apply(&s)).collect();
                ws.extend(orbit);
            }
        }
        if ws.len() > 10 {
            continue;
        }
        let rep = RepSpec::from_weights(n, ws).unwrap();
        if has_t_stable_point(&rep) {
            return (datum, rep);
        }
    }
}

fn precedes(a: &FaceSignature, b: &FaceSignature) -> bool {
    let sub = |x: &[usize], y: &[usize]| x.iter().all(|i| y.contains(i));
    a.r < b.r || (a.r == b.r && sub(&a.s_plus, &b.s_plus) && sub(&a.s_minus, &b.s_minus))
}

fn coarse(s: &FaceSignature) -> (Rational, usize, usize, usize) {
    (s.r.clone(), s.s_plus.len(), s.s_minus.len(), s.s_zero.len())
}

fn partition_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut sampled = 0usize;
    let mut instances = 0usize;
    let radius = 3;
    while sampled < 500 {
        let (datum, rep) = random_instance(&mut rng);
        instances += 1;
        let profile = ShiftProfile::standard(datum.rank());
        let center = -datum.rho_bar();
        let domain = dominant_box(&datum, radius);
        let mut data = Vec::new();
        for chi in &domain {
            let sig = signature_of(&datum, &rep, chi, &profile).map_err(|e| e.to_string())?;
            let (r, sp, sm, sz) = oracle::signature(&raw(rep.weights()), &center.0, &chi.0);
            ensure(sig.r == r && sig.s_plus == sp && sig.s_minus == sm && sig.s_zero == sz, || {
                format!("{} on {:?}: χ={chi} signature differs from brute force", datum.label(), rep.weights())
            })?;
            let lambda = canonical_lambda(&sig, &datum, &rep).map_err(|e| e.to_string())?;
            ensure(datum.is_antidominant(&lambda), || format!("λ={lambda} not antidominant"))?;
            if !sig.trivial {
                let t = weight_signs(&rep, &lambda);
                ensure(t.t_plus == sig.s_plus && t.t_minus == sig.s_minus && t.t_zero == sig.s_zero, || {
                    format!("χ={chi}: λ={lambda} does not reproduce the signature")
                })?;
            }
            data.push((chi.clone(), sig, lambda));
            sampled += 1;
        }
        for (chi, sig, lambda) in data.iter().filter(|d| !d.1.trivial) {
            let base = lambda.dot(chi);
            for (mu, sig_mu, _) in &data {
                let other = lambda.dot(mu);
                let ok = if sig == sig_mu { base == other } else { precedes(sig, sig_mu) || base < other };
                ensure(ok, || format!("pairing order fails for χ={chi}, μ={mu}"))?;
            }
            if sig.r < rat(1) {
                continue;
            }
            let t_plus = weight_signs(&rep, lambda).t_plus;
            for mask in 1usize..1 << t_plus.len() {
                let mut mu = chi.clone();
                for (bit, &i) in t_plus.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        mu = &mu + &rep.weights()[i];
                    }
                }
                let Some(plus) = datum.star_dominate(&mu) else { continue };
                let s2 = signature_of(&datum, &rep, &plus.weight, &profile).map_err(|e| e.to_string())?;
                ensure(coarse(&s2) < coarse(sig) && base < lambda.dot(&plus.weight), || {
                    format!("monotonicity fails for χ={chi}, μ⁺={}", plus.weight)
                })?;
            }
        }
        let cells = partition_region(&datum, &rep, &profile, radius).map_err(|e| e.to_string())?;
        let mut seen: Vec<RationalVector> = cells.iter().flat_map(|c| c.members.clone()).collect();
        seen.sort();
        ensure(seen == domain, || "cells do not form a disjoint cover of the box".into())?;
        for cell in cells.iter().filter(|c| !c.signature.trivial) {
            for p in cell_members(cell, &datum, &rep).map_err(|e| e.to_string())? {
                ensure(datum.is_dominant(&p, None), || format!("Levi-dominant cell point {p} is not dominant"))?;
            }
        }
    }
    Ok(format!("{sampled} dominant weights over {instances} representations"))
}

fn reduction_settings() -> Check {
    let mut checked = 0usize;
    for f in [Family::Toric(vec![1, 1, -1, -1]), Family::Sl2(vec![3, 0])] {
        let p = preset(&f).map_err(|e| e.to_string())?;
        let profile = ShiftProfile::standard(p.datum.rank());
        let radius = 6;
        let sod = enumerate_sod(&p.datum, &p.rep, &profile, &rat(radius), radius).map_err(|e| e.to_string())?;
        let r_top = sod.components.iter().map(|c| c.signature.r.clone()).max().unwrap();
        // ℒ_{<j} needs every weight of radius below r_j, so enlarge the box
        // until it contains the whole zonotope of radius r_top.
        let mut big = radius;
        loop {
            let wide = enumerate_sod(&p.datum, &p.rep, &profile, &rat(big), big).map_err(|e| e.to_string())?;
            if wide.frontier.complete_radius.is_some_and(|r| r >= r_top) {
                break;
            }
            big += 1;
        }
        let cells = partition_region(&p.datum, &p.rep, &profile, big).map_err(|e| e.to_string())?;
        let in_box = |x: &RationalVector| x.0.iter().all(|c| c <= &rat(radius) && c >= &rat(-radius));
        for comp in sod.components.iter().filter(|c| !c.is_d0) {
            let key = order_key(&comp.signature);
            let ell: Vec<RationalVector> =
                cells.iter().filter(|c| c.order_key < key).flat_map(|c| c.members.clone()).collect();
            for chi in comp.window.iter().filter(|x| in_box(x)) {
                let check = validate_reduction_setting(&ell, chi, &comp.lambda, &p.rep, &p.datum);
                ensure(check.valid(), || format!("{f:?}: χ={chi}, λ={}: {:?}", comp.lambda, check))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} cell members"))
}

fn hilbert_cross_check() -> Check {
    let p = preset(&Family::Pfaffian { n: 1, h: 3 }).map_err(|e| e.to_string())?;
    let zero = RationalVector::zeros(1);
    let weights = raw(p.rep.weights());
    let group: Vec<(Vec<Vec<Rational>>, i8)> =
        p.datum.weyl_group().iter().map(|w| (vec![w.matrix.row(0).0], w.sign())).collect();
    let oracle_dims: Vec<i64> = (0..=6)
        .map(|d| {
            let counts = oracle::monomial_weight_counts(&weights, 1, d);
            oracle::alternating_multiplicity(&counts, &group, &p.datum.rho_bar().0, &zero.0)
        })
        .collect();
    ensure(oracle_dims == vec![1, 0, 3, 0, 6, 0, 10], || format!("oracle gives {oracle_dims:?}"))?;
    let sod = enumerate_sod(&p.datum, &p.rep, &ShiftProfile::standard(1), &rat(2), 4).map_err(|e| e.to_string())?;
    let d0 = sod.d0();
    let dims = hom_block_dims(&p.datum, &zero, &zero, &d0.coinvariants, 6).map_err(|e| e.to_string())?.dims();
    let dims: Vec<i64> = dims.into_iter().map(|x| x as i64).collect();
    ensure(dims == oracle_dims, || format!("character calculus gives {dims:?}"))?;
    Ok(format!("{dims:?}"))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(-32..=32), rng.gen_range(1..=32))
}

fn kernel_oracles() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut lp_cases = 0;
    let mut zono_cases = 0;
    for _ in 0..150 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(0..=2);
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for _ in 0..n {
            let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
            lo.push(a.clone().min(b.clone()));
            hi.push(a.max(b));
        }
        let rows: Vec<Vec<Rational>> = (0..k).map(|_| (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect()).collect();
        let rhs: Vec<Rational> = (0..k).map(|_| random_rational(&mut rng)).collect();
        let cost: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-4..=4))).collect();
        let mut prog = BoxedLinearProgram::new(n);
        for i in 0..n {
            prog.set_bounds(i, Bound::Closed(lo[i].clone()), Bound::Closed(hi[i].clone()));
        }
        for (r, b) in rows.iter().zip(&rhs) {
            prog.add_equality(r.clone(), b.clone()).map_err(|e| e.to_string())?;
        }
        prog.set_objective(cost.clone()).map_err(|e| e.to_string())?;
        let out = lp_optimize(&prog, Sense::Maximize).map_err(|e| e.to_string())?;
        match oracle::lp_max(&lo, &hi, &rows, &rhs, &cost) {
            None => ensure(out.status == LpStatus::Infeasible, || "LP feasible where the oracle finds no vertex".into())?,
            Some(v) => ensure(out.status == LpStatus::Optimal && out.value == Some(v.clone()), || {
                format!("LP optimum {:?} differs from vertex optimum {v}", out.value)
            })?,
        }
        let t = forced_tight(&prog);
        let (feasible, lower, upper) = oracle::forced(&lo, &hi, &rows, &rhs);
        ensure(t.feasible == feasible && (!feasible || (t.lower_forced == lower && t.upper_forced == upper)), || {
            "forced tightness differs from vertex enumeration".into()
        })?;
        lp_cases += 1;
    }
    let kinds = [
        (Variant::Closed, oracle::Kind::Closed),
        (Variant::HalfOpen, oracle::Kind::HalfOpen),
        (Variant::RelInt, oracle::Kind::RelInt),
    ];
    for _ in 0..150 {
        let dim = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=5);
        let gens: Vec<RationalVector> = (0..m)
            .map(|_| RationalVector::from_ints(&(0..dim).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>()))
            .collect();
        let r = frac(rng.gen_range(1..=8), rng.gen_range(1..=4));
        let shift = RationalVector((0..dim).map(|_| frac(rng.gen_range(-4..=4), 2)).collect());
        let p = RationalVector((0..dim).map(|_| frac(rng.gen_range(-16..=16), 4)).collect());
        for (variant, kind) in kinds {
            let q = ZonotopeQuery::new(gens.clone(), r.clone(), shift.clone(), variant);
            let expect = oracle::zonotope_member(&raw(&gens), &r, &shift.0, &p.0, kind);
            ensure(member(&q, &p) == expect, || format!("{variant:?} membership of {p} differs from the oracle"))?;
        }
        if oracle::grid_witness(&raw(&gens), &r, &shift.0, &p.0, 4) {
            let q = ZonotopeQuery::new(gens.clone(), r.clone(), shift.clone(), Variant::Closed);
            ensure(member(&q, &p), || format!("grid witness for {p} rejected"))?;
        }
        zono_cases += 1;
    }
    Ok(format!("{lp_cases} linear programs, {zono_cases} zonotope queries"))
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_sodlab");
    let presets = ["toric", "pfaffian:n=1,h=3", "pfaffian:n=1,h=4", "determinantal:1,2", "determinantal:2,3", "sl2:1,2", "sl2:1,1,1"];
    for p in presets {
        let run = || {
            let out = Command::new(bin).args(["sod", "--preset", p]).output().map_err(|e| e.to_string())?;
            if out.status.code() != Some(0) {
                return Err(format!("{p}: exit {:?}", out.status.code()));
            }
            Ok(out.stdout)
        };
        let (a, b) = (run()?, run()?);
        ensure(a == b, || format!("{p}: two runs differ"))?;
    }
    Ok(format!("{} presets byte-identical", presets.len()))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Check); 8] = [
        ("1 Pfaffian parity: prazno empty iff h odd, 2n < h <= 7", 10, pfaffian_parity),
        ("2 determinantal: weakly generic, prazno empty, window equality", 10, determinantal),
        ("3 SL2 catalog: case A list, odd-s windows of size (s-1)/2", 5, sl2_catalog),
        ("4 partition suite on 500 random dominant weights", 60, partition_suite),
        ("5 reduction settings for toric and S3V+k components, box 6", 30, reduction_settings),
        ("6 Hilbert series of the Pfaffian n=1,h=3 last component", 5, hilbert_cross_check),
        ("7 kernel LP and zonotope membership vs brute-force oracles", 60, kernel_oracles),
        ("8 byte-identical sod reports on every preset", 30, determinism),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let within = took <= Duration::from_secs(limit);
        let (tag, detail) = match (&result, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; exceeded the {limit} s limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} [{name}] {detail} ({:.2} s, limit {limit} s)", took.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p rotsphere --test acceptance`.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{rngs::StdRng, Rng, SeedableRng};
use rayon::prelude::*;
use rotsphere_core::boundary::{
    boundary_residuals, radial_integral_minus, radial_integral_plus, ResidualTolerances, Varsigma,
};
use rotsphere_core::modes::spinor::inner_product;
use rotsphere_core::quadrature::GaussLegendre;
use rotsphere_core::specfun::{sph_j, sph_j_prime, BesselZeros};
use rotsphere_core::{
    enumerate_spectrum, verify_vacuum_equivalence, BoundaryKind, CondensateEvaluator, PhysicalParams,
    Truncation,
};

type Check = Result<String, String>;

const ALL_BC: [BoundaryKind; 3] = [
    BoundaryKind::Spectral,
    BoundaryKind::Mit(Varsigma::Ordinary),
    BoundaryKind::Mit(Varsigma::Chiral),
];

fn params(mass: f64, omega: f64, beta: f64) -> PhysicalParams {
    PhysicalParams::new(mass, 1.0, omega, beta, 0.0).expect("valid parameters")
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn special_functions() -> Check {
    let z = BesselZeros::build(51, 101).map_err(|e| e.to_string())?;
    let mut worst_pi = 0.0f64;
    for i in 1..=20u32 {
        worst_pi = worst_pi.max((z.zero(0, i).unwrap() - f64::from(i) * PI).abs());
    }
    ensure(worst_pi <= 1e-12, || format!("xi_(0,i) - i pi = {worst_pi:e}"))?;
    for n in 0..=50u32 {
        let xi = z.zero(n, 1).unwrap();
        ensure(xi > f64::from(n + 1), || format!("xi_({n},1) = {xi} <= n+1"))?;
        for i in 1..=100u32 {
            let (a, b, c) = (z.zero(n, i).unwrap(), z.zero(n + 1, i).unwrap(), z.zero(n, i + 1).unwrap());
            ensure(a < b && b < c, || format!("interlacing fails at n={n}, i={i}"))?;
        }
    }
    let mut worst_rec = 0.0f64;
    for n in 1..=199u32 {
        for k in 0..=80 {
            let x = 10f64.powf(-2.0 + 5.3 * f64::from(k) / 80.0);
            let (jm, j, jp) = (sph_j(n - 1, x), sph_j(n, x), sph_j(n + 1, x));
            let d = sph_j_prime(n, x);
            let nf = f64::from(n);
            let three_term = jm + jp - (2.0 * nf + 1.0) / x * j;
            let r1 = d + (nf + 1.0) / x * j - jm;
            let r2 = d - nf / x * j + jp;
            let scale = jm.abs().max(jp.abs()).max(((2.0 * nf + 1.0) / x * j).abs()).max(d.abs());
            if scale < 1e-290 {
                continue;
            }
            worst_rec = worst_rec.max(r1.abs().max(r2.abs()).max(three_term.abs()) / scale);
        }
    }
    ensure(worst_rec <= 1e-12, || format!("recurrence residual {worst_rec:e}"))?;
    Ok(format!(
        "max |xi_(0,i) - i pi| = {worst_pi:.1e}, first-zero bound and interlacing hold, recurrence residual {worst_rec:.1e}"
    ))
}

fn radial_integrals() -> Check {
    let gl = GaussLegendre::new(400);
    let mut rng = StdRng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let n = rng.random_range(0..=20u32);
        let radius = rng.random_range(0.5..2.0);
        let x = rng.random_range(0.05..60.0);
        let p = x / radius;
        let (qp, qm) = gl
            .mapped(0.0, radius)
            .map(|(r, w)| {
                let (a, b) = (sph_j(n, p * r), sph_j(n + 1, p * r));
                (w * r * r * 0.5 * (a * a + b * b), w * r * r * 0.5 * (a * a - b * b))
            })
            .fold((0.0, 0.0), |acc, v| (acc.0 + v.0, acc.1 + v.1));
        // Both integrals scale like R^3; compare in units of R^3.
        let r3 = radius.powi(3);
        let e = ((radial_integral_plus(n, p, radius) - qp).abs() / r3)
            .max((radial_integral_minus(n, p, radius) - qm).abs() / r3);
        worst = worst.max(e);
    }
    ensure(worst <= 1e-10, || format!("closed form vs quadrature {worst:e} (units of R^3)"))?;
    Ok(format!("100 samples, max deviation {worst:.1e} R^3"))
}

fn orthonormality() -> Check {
    let radial = GaussLegendre::new(200);
    let angular = GaussLegendre::new(100);
    let mut rng = StdRng::seed_from_u64(5);
    let mut worst_norm = 0.0f64;
    let mut worst_cross = 0.0f64;
    let mut pairs = 0usize;
    for family in ["spectral", "mit"] {
        let mut picked = Vec::new();
        for _ in 0..50 {
            let bc = match family {
                "spectral" => BoundaryKind::Spectral,
                _ if rng.random_bool(0.5) => BoundaryKind::Mit(Varsigma::Ordinary),
                _ => BoundaryKind::Mit(Varsigma::Chiral),
            };
            let mass = [0.0, 1.0, 3.0][rng.random_range(0..3)];
            let modes = enumerate_spectrum(bc, &params(mass, 0.0, 1.0), 11, 8)
                .map_err(|e| e.to_string())?
                .modes();
            let a = modes[rng.random_range(0..modes.len())];
            // A partner sharing (j, m_j, kappa) with another radial index.
            let partners: Vec<_> = modes
                .iter()
                .filter(|b| {
                    b.qn.two_j() == a.qn.two_j()
                        && b.qn.two_mj() == a.qn.two_mj()
                        && b.qn.kappa() == a.qn.kappa()
                        && b.qn != a.qn
                })
                .collect();
            let b = *partners[rng.random_range(0..partners.len())];
            picked.push((bc, mass, a, b));
        }
        let results: Vec<(f64, f64)> = picked
            .par_iter()
            .map(|(_, mass, a, b)| {
                let fa = a.mode_function(*mass);
                let fb = b.mode_function(*mass);
                let n = inner_product(&fa, &fa, 1.0, &radial, &angular);
                let c = inner_product(&fa, &fb, 1.0, &radial, &angular);
                ((n.re - 1.0).abs().max(n.im.abs()), c.norm())
            })
            .collect();
        for (n, c) in results {
            worst_norm = worst_norm.max(n);
            worst_cross = worst_cross.max(c);
            pairs += 1;
        }
    }
    ensure(worst_norm <= 1e-8 && worst_cross <= 1e-8, || {
        format!("norm deviation {worst_norm:e}, cross product {worst_cross:e}")
    })?;
    Ok(format!(
        "{pairs} modes: max |<u,u> - 1| = {worst_norm:.1e}, max |<u,u'>| = {worst_cross:.1e}"
    ))
}

fn boundary_checks() -> Check {
    let thetas = [0.2, 0.9, PI / 2.0, 2.4];
    let cases: Vec<(BoundaryKind, f64)> = ALL_BC
        .iter()
        .flat_map(|&bc| [0.0, 1.0, 5.0].map(|m| (bc, m)))
        .collect();
    let reports = cases
        .par_iter()
        .map(|&(bc, mass)| {
            let s = enumerate_spectrum(bc, &params(mass, 0.0, 1.0), 25, 20).map_err(|e| e.to_string())?;
            Ok(boundary_residuals(&s, &thetas, ResidualTolerances::default()))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let mut modes = 0;
    let (mut q, mut sp, mut rel, mut dens) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (rep, (bc, mass)) in reports.iter().zip(&cases) {
        if let Some((qn, what, v)) = rep.failures.first() {
            return Err(format!("{bc}, M={mass}: {what} residual {v:e} for {qn}"));
        }
        modes += rep.modes_checked;
        q = q.max(rep.max_quantization);
        sp = sp.max(rep.max_spectral_components);
        rel = rel.max(rep.max_mit_relation);
        dens = dens.max(rep.max_mit_density);
    }
    Ok(format!(
        "{modes} modes: quantization {q:.1e}, spectral components {sp:.1e}, MIT relation {rel:.1e}, MIT density {dens:.1e}"
    ))
}

fn vacuum() -> Check {
    let cases: Vec<(BoundaryKind, f64)> = ALL_BC
        .iter()
        .flat_map(|&bc| [0.0, 1.0, 5.0].map(|m| (bc, m)))
        .collect();
    let out = cases
        .par_iter()
        .map(|&(bc, mass)| {
            let modes = enumerate_spectrum(bc, &params(mass, 0.0, 1.0), 25, 20)
                .map_err(|e| e.to_string())?
                .modes();
            let mut checked = 0;
            let mut min_abs = f64::INFINITY;
            for omega in [0.0, 0.5, 0.9, 0.99] {
                let rep = verify_vacuum_equivalence(&modes, omega, 1.0);
                if let Some(v) = rep.violations.first() {
                    return Err(format!("{bc}, M={mass}, Omega R={omega}: E={} E_tilde={} for {}", v.energy, v.corotating_energy, v.qn));
                }
                checked += rep.checked;
                min_abs = min_abs.min(rep.min_abs_corotating);
            }
            Ok((checked, min_abs))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let checked: usize = out.iter().map(|o| o.0).sum();
    let min_abs = out.iter().map(|o| o.1).fold(f64::INFINITY, f64::min);
    Ok(format!("{checked} mode checks, no E*E_tilde <= 0, min |E_tilde| = {min_abs:.3}"))
}

fn oracle_equivalence() -> Check {
    let mut rng = StdRng::seed_from_u64(6);
    let points: Vec<(BoundaryKind, PhysicalParams, f64, f64)> = (0..10)
        .map(|_| {
            let bc = ALL_BC[rng.random_range(0..3)];
            let p = PhysicalParams::new(
                rng.random_range(0.0..3.0),
                1.0,
                rng.random_range(0.0..0.95),
                rng.random_range(0.3..3.0),
                rng.random_range(-1.0..1.0),
            )
            .expect("valid parameters");
            (bc, p, rng.random_range(0.0..0.98), rng.random_range(0.0..PI))
        })
        .collect();
    let t = Truncation::new(11, 10).map_err(|e| e.to_string())?;
    let res = points
        .par_iter()
        .map(|(bc, p, r, th)| {
            let v = CondensateEvaluator::new(*bc, p, t).and_then(|ev| ev.point(*r, *th)).map_err(|e| e.to_string())?;
            let o = support::brute_force_condensate(*bc, p, *r, *th, 11, 10);
            Ok(((v - o).abs() / o.abs(), *bc, *r, *th))
        })
        .collect::<Result<Vec<_>, String>>()?;
    let worst = res.iter().map(|x| x.0).fold(0.0, f64::max);
    if let Some((e, bc, r, th)) = res.iter().find(|x| !(x.0 <= 1e-8)) {
        return Err(format!("{bc} at r={r}, theta={th}: relative deviation {e:e}"));
    }
    Ok(format!("10 random points, max relative deviation {worst:.1e}"))
}

fn exact_zeros() -> Check {
    let rs: Vec<f64> = (0..20).map(|k| f64::from(k) / 19.0).collect();
    let ths: Vec<f64> = (0..10).map(|k| PI * f64::from(k) / 9.0).collect();
    let t = Truncation::default();
    for (beta, mu) in [(0.5, 0.0), (2.0, 0.7)] {
        let p = PhysicalParams::new(0.0, 1.0, 0.0, beta, mu).unwrap();
        let g = CondensateEvaluator::new(BoundaryKind::Spectral, &p, t)
            .and_then(|ev| ev.grid(&rs, &ths))
            .map_err(|e| e.to_string())?;
        let worst = g.values.iter().flatten().fold(0.0f64, |a, v| a.max(v.abs()));
        ensure(worst == 0.0, || format!("massless non-rotating spectral value {worst:e}"))?;
    }
    let mut worst_wall = 0.0f64;
    for vs in [Varsigma::Ordinary, Varsigma::Chiral] {
        for (mass, omega, beta) in [(1.0, 0.6, 1.0), (0.0, 0.9, 0.5)] {
            let g = CondensateEvaluator::new(BoundaryKind::Mit(vs), &params(mass, omega, beta), t)
                .and_then(|ev| ev.grid(&rs, &ths))
                .map_err(|e| e.to_string())?;
            for row in &g.values {
                worst_wall = worst_wall.max(row[19].abs());
            }
        }
    }
    ensure(worst_wall <= 1e-9, || format!("MIT value at r=R {worst_wall:e}"))?;
    let mut worst_iso = 0.0f64;
    for bc in ALL_BC {
        let g = CondensateEvaluator::new(bc, &params(1.0, 0.0, 1.0), t)
            .and_then(|ev| ev.grid(&rs, &ths))
            .map_err(|e| e.to_string())?;
        for k in 0..rs.len() {
            let base = g.values[0][k];
            for row in &g.values {
                // Relative, with an absolute floor for the MIT wall zeros.
                let d = (row[k] - base).abs() / base.abs().max(1e-4);
                worst_iso = worst_iso.max(d);
            }
        }
    }
    ensure(worst_iso <= 1e-10, || format!("Omega=0 theta dependence {worst_iso:e}"))?;
    Ok(format!(
        "massless spectral grid exactly 0, MIT wall max {worst_wall:.1e}, Omega=0 theta spread {worst_iso:.1e}"
    ))
}

fn qualitative() -> Check {
    let t = Truncation::default();
    let value = |bc: BoundaryKind, p: PhysicalParams, r: f64, th: f64| -> Result<f64, String> {
        CondensateEvaluator::new(bc, &p, t).and_then(|ev| ev.point(r, th)).map_err(|e| e.to_string())
    };
    let mut notes = Vec::new();
    for bc in [BoundaryKind::Spectral, BoundaryKind::Mit(Varsigma::Ordinary)] {
        let rot = [0.0, 0.4, 0.8]
            .iter()
            .map(|&om| value(bc, params(1.0, om, 2.0), 0.9, PI / 2.0))
            .collect::<Result<Vec<_>, _>>()?;
        ensure(rot[0] < rot[1] && rot[1] < rot[2], || format!("{bc}: rotation not monotone at r=0.9: {rot:?}"))?;
        let temp = [2.0, 1.0, 0.5]
            .iter()
            .map(|&b| value(bc, params(1.0, 0.5, b), 0.5, PI / 2.0))
            .collect::<Result<Vec<_>, _>>()?;
        ensure(temp[0].abs() < temp[1].abs() && temp[1].abs() < temp[2].abs(), || {
            format!("{bc}: |value| not growing with temperature at r=0.5: {temp:?}")
        })?;
        let still = value(bc, params(1.0, 0.0, 2.0), 0.9, PI / 2.0)?;
        let eq = (value(bc, params(1.0, 0.8, 2.0), 0.9, PI / 2.0)? - still).abs();
        let pole = (value(bc, params(1.0, 0.8, 2.0), 0.9, PI / 8.0)? - still).abs();
        ensure(eq > pole, || format!("{bc}: rotation effect {eq:e} at pi/2 not above {pole:e} at pi/8"))?;
        notes.push(format!("{bc}: rotation {:.2e}->{:.2e}, effect pi/2 {eq:.1e} > pi/8 {pole:.1e}", rot[0], rot[2]));
    }
    let ev = CondensateEvaluator::new(BoundaryKind::Spectral, &params(1.0, 0.8, 0.5), t).map_err(|e| e.to_string())?;
    let rs: Vec<f64> = (0..=100).map(|k| f64::from(k) / 100.0).collect();
    let g = ev.grid(&rs, &[PI / 8.0, PI / 4.0, 3.0 * PI / 8.0, PI / 2.0]).map_err(|e| e.to_string())?;
    let vals: Vec<f64> = g.values.iter().flatten().copied().collect();
    let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    ensure(min < 0.0 && max > 0.0, || format!("spectral condensate range [{min:e}, {max:e}] has one sign"))?;
    notes.push(format!("spectral sign range [{min:.2e}, {max:.2e}]"));
    Ok(notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Check); 8] = [
        ("special functions", 5, special_functions),
        ("closed-form radial integrals", 10, radial_integrals),
        ("orthonormality", 30, orthonormality),
        ("boundary residuals", 30, boundary_checks),
        ("vacuum equivalence", 60, vacuum),
        ("condensate oracle equivalence", 120, oracle_equivalence),
        ("exact zeros", 300, exact_zeros),
        ("qualitative figure properties", 300, qualitative),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (idx, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        total += elapsed;
        let within = elapsed < Duration::from_secs(*limit);
        let (tag, detail) = match (&result, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("too slow; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} [{tag}] {name} ({:.2} s, limit {limit} s): {detail}",
            idx + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed, {:.1} s total", 8 - failed, total.as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

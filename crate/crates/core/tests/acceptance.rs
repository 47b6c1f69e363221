//! End-to-end acceptance gate. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_complex::Complex64;

use harmshear::families::{ConformalFamily, DiskPoint};
use harmshear::lift::{
    assemble_x3_gamma, lift_numeric, x3_closed_case, x3_closed_eq9, x3_closed_fc, MinimalLift,
};
use harmshear::mesh::DiskGrid;
use harmshear::partial_fraction::PartialFractionContext;
use harmshear::quadrature::{integrate_from_origin, QuadratureConfig};
use harmshear::shear::{
    closed_f_special, closed_g_ca, closed_h_ca, shear_numeric, HarmonicShear, ShearSpec,
};
use harmshear::special::{hyp2f1, Hyp2F1Params};
use harmshear::verify::{
    case_pipeline, check_degenerate_collapse, check_epicycloid_boundary, check_local_univalence,
    check_slit_tip, identify_surface, minimality_certificate, seeded_disk_samples,
    MinimalityConfig,
};

type Outcome = Result<String, String>;

const SEED: u64 = 42;

fn samples(n: usize, r: f64, seed: u64) -> Vec<DiskPoint> {
    seeded_disk_samples(n, r, seed).expect("valid sample radius")
}

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn closed_vs_quadrature() -> Outcome {
    let start = Instant::now();
    let pts = samples(500, 0.9, SEED);
    let cfg = QuadratureConfig::default();
    let (mut eh, mut eg) = (0.0_f64, 0.0_f64);
    for c in [-1.5, -1.0, 0.0, 1.0, 1.5] {
        for a in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            let numeric = shear_numeric(ShearSpec::fc_mobius(c, a).unwrap(), cfg).unwrap();
            for &z in &pts {
                let hn = numeric.h(z).map_err(|e| e.to_string())?;
                let gn = numeric.g(z).map_err(|e| e.to_string())?;
                eh = eh.max((closed_h_ca(c, a, z).unwrap() - hn).norm());
                eg = eg.max((closed_g_ca(c, a, z).unwrap() - gn).norm());
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(
        eh <= 1e-8 && eg <= 1e-8 && secs <= 60.0,
        format!("max |Δh| = {eh:.2e}, max |Δg| = {eg:.2e} (tol 1e-8), {secs:.1} s (limit 60 s)"),
    )
}

fn special_shears() -> Outcome {
    let pts = samples(200, 0.9, SEED);
    let (mut shear_err, mut form_err) = (0.0_f64, 0.0_f64);
    for c in [-2.0, 2.0] {
        let family = ConformalFamily::fc(c).unwrap();
        for a in [-1.0, 0.0, 1.0] {
            let s = HarmonicShear::closed(ShearSpec::fc_mobius(c, a).unwrap()).unwrap();
            for &z in &pts {
                let (h, g) = (s.h(z).unwrap(), s.g(z).unwrap());
                shear_err = shear_err.max((h - g - family.eval(z).unwrap()).norm());
                let uv = closed_f_special(c, a, z).unwrap().as_complex();
                form_err = form_err.max((uv - (h + g.conj())).norm() / (1.0 + uv.norm()));
            }
        }
    }
    verdict(
        shear_err <= 1e-10 && form_err <= 1e-10,
        format!("max |h - g - F| = {shear_err:.2e}, (u, v) vs h + conj(g) rel = {form_err:.2e} (tol 1e-10)"),
    )
}

fn slit_tips() -> Outcome {
    let mut worst = 0.0_f64;
    let mut ok = true;
    for (c, a) in [
        (-2.0, -1.0),
        (-2.0, 0.0),
        (-2.0, 1.0),
        (2.0, -1.0),
        (2.0, 0.0),
    ] {
        let r = check_slit_tip(c, a, 0.999).map_err(|e| e.to_string())?;
        worst = worst.max(r.max_residual);
        ok &= r.max_residual <= 5e-2;
    }
    let collapse = check_degenerate_collapse(0.999, 200, 1e-2).map_err(|e| e.to_string())?;
    verdict(
        ok && collapse.passed,
        format!(
            "worst tip error {worst:.2e} (tol 5e-2); (2, 1) image spread {:.2e} around 1/2 (tol 1e-2)",
            collapse.max_residual
        ),
    )
}

fn hypergeometric_identities() -> Outcome {
    let pts = samples(100, 0.9, SEED);
    let cfg = QuadratureConfig::default();
    let mut worst = 0.0_f64;
    for n in [2u32, 3, 4, 6] {
        let b = 1.0 / f64::from(n);
        for &z in &pts {
            let z = z.z();
            let series =
                z * hyp2f1(&Hyp2F1Params::real(1.0, b, 1.0 + b, z.powu(n)).unwrap()).unwrap();
            let quad =
                integrate_from_origin(&|s: Complex64| 1.0 / (1.0 - s.powu(n)), z, &cfg).unwrap();
            worst = worst.max((series - quad).norm());
        }
    }
    verdict(worst <= 1e-10, format!("max error {worst:.2e} (tol 1e-10)"))
}

fn lift_correctness() -> Outcome {
    let cfg = QuadratureConfig::default();
    let pts = samples(100, 0.9, SEED);
    let numeric = |spec: ShearSpec| shear_numeric(spec, cfg).unwrap();

    let mut e_fc = 0.0_f64;
    let cs = [-1.9, -1.0, -0.3, 0.0, 0.7, 1.5, 1.9];
    for (k, &z) in pts.iter().enumerate() {
        let c = cs[k % cs.len()];
        let p = lift_numeric(&numeric(ShearSpec::fc_mobius(c, 0.0).unwrap()), z, &cfg).unwrap();
        e_fc = e_fc.max((x3_closed_fc(c, z).unwrap() - p.x3).abs());
    }

    let mut e_case = 0.0_f64;
    for c in [-2, 0, 2] {
        let s = numeric(ShearSpec::fc_mobius(f64::from(c), 0.0).unwrap());
        for &z in &pts {
            let p = lift_numeric(&s, z, &cfg).unwrap();
            e_case = e_case.max(x3_closed_case(c, z).unwrap().distance(&p));
        }
    }

    let mut e_eq9 = 0.0_f64;
    for m in [1u32, 2, 3] {
        let s = numeric(ShearSpec::epicycloid(2 * m).unwrap());
        for &z in &pts {
            let p = lift_numeric(&s, z, &cfg).unwrap();
            e_eq9 = e_eq9.max((x3_closed_eq9(m, z).unwrap() - p.x3).abs());
        }
    }

    let mut e_gamma = 0.0_f64;
    // resonant and generic angles, including γ = π/2 at n = 2 and γ = π/3 at n = 3
    for (n, gamma) in [
        (1u32, PI / 2.0),
        (2, PI / 3.0),
        (2, PI / 2.0),
        (3, PI / 3.0),
        (3, 1.1),
    ] {
        let ctx = PartialFractionContext::new(n, gamma).unwrap();
        let s = numeric(ShearSpec::fc_power(ctx.c(), 2 * n).unwrap());
        for &z in &pts {
            let p = lift_numeric(&s, z, &cfg).unwrap();
            e_gamma = e_gamma.max((assemble_x3_gamma(&ctx, z).unwrap() - p.x3).abs());
        }
    }

    let z = DiskPoint::new(Complex64::from_polar(0.5, PI / 4.0)).unwrap();
    let hel = lift_numeric(&numeric(ShearSpec::fc_mobius(0.0, 0.0).unwrap()), z, &cfg)
        .unwrap()
        .x3;
    let epi = x3_closed_eq9(1, DiskPoint::new(Complex64::new(0.0, 0.5)).unwrap()).unwrap();
    let e_check = (hel - 0.2352941).abs().max((epi - 0.0363524).abs());

    let worst = e_fc.max(e_case).max(e_eq9).max(e_gamma);
    verdict(
        worst <= 1e-8 && e_check <= 1e-6,
        format!(
            "fc {e_fc:.1e}, case {e_case:.1e}, fn {e_eq9:.1e}, gamma {e_gamma:.1e} (tol 1e-8); checkpoints {e_check:.1e} (tol 1e-6)"
        ),
    )
}

fn minimality() -> Outcome {
    let cfg = MinimalityConfig::default();
    let mut specs: Vec<(String, ShearSpec)> = [-2.0, 0.0, 1.0, 2.0]
        .iter()
        .map(|&c| (format!("c{c}"), ShearSpec::fc_mobius(c, 0.0).unwrap()))
        .collect();
    specs.extend([2u32, 4].map(|n| (format!("n{n}"), ShearSpec::epicycloid(n).unwrap())));
    let (mut lap, mut iso) = (0.0_f64, 0.0_f64);
    let mut ok = true;
    for (label, spec) in specs {
        let lift = MinimalLift::best(spec, QuadratureConfig::default()).unwrap();
        let [h, eg, f] = minimality_certificate(&lift, &label, &cfg).map_err(|e| e.to_string())?;
        ok &= h.passed && eg.passed && f.passed;
        lap = lap.max(h.max_residual);
        iso = iso.max(eg.max_residual).max(f.max_residual);
    }
    verdict(
        ok,
        format!("scaled Laplacian {lap:.2e}, isothermal {iso:.2e} (tol 1e-4)"),
    )
}

fn identification() -> Outcome {
    let pts = samples(500, 0.95, SEED);
    let mut parts = Vec::new();
    let mut ok = true;
    for (case, name) in [(-2, "Enneper"), (0, "helicoid"), (2, "Enneper")] {
        let r = identify_surface(case, &case_pipeline(case).unwrap(), &pts)
            .map_err(|e| e.to_string())?;
        ok &= r.passed;
        parts.push(format!("X{case} -> {name} {:.1e}", r.max_residual));
    }
    verdict(ok, format!("{} (tol 1e-8, 500 samples)", parts.join(", ")))
}

fn univalence() -> Outcome {
    let grid = DiskGrid::new(64, 64, 0.99, true).unwrap();
    let mut combos: Vec<(f64, f64)> = Vec::new();
    for c in [-1.5, -1.0, 0.0, 1.0, 1.5] {
        for a in [-1.0, -0.5, 0.0, 0.5, 1.0] {
            combos.push((c, a));
        }
    }
    for c in [-2.0, 2.0] {
        for a in [-1.0, 0.0, 1.0] {
            if !(c == 2.0 && a == 1.0) {
                combos.push((c, a));
            }
        }
    }
    let mut min_j = f64::INFINITY;
    for &(c, a) in &combos {
        let s = HarmonicShear::closed(ShearSpec::fc_mobius(c, a).unwrap()).unwrap();
        let r = check_local_univalence(&s, &grid).map_err(|e| e.to_string())?;
        min_j = min_j.min(-r.max_residual);
    }
    verdict(
        min_j > 0.0,
        format!(
            "min J = {min_j:.3e} over {} shears x {} nodes",
            combos.len(),
            grid.node_count()
        ),
    )
}

fn epicycloid_boundary() -> Outcome {
    let mut ok = true;
    let (mut pos, mut val) = (0.0_f64, 0.0_f64);
    for n in 2..=8 {
        let r = check_epicycloid_boundary(n).map_err(|e| e.to_string())?;
        ok &= r.all_passed();
        pos = pos.max(r.checks[1].max_residual);
        val = val.max(r.checks[2].max_residual);
    }
    verdict(
        ok,
        format!(
            "n = 2..8: n - 1 minima, position err {pos:.1e} rad, value err {val:.1e} (tol 1e-9)"
        ),
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_harmshear");
    let cases: [&[&str]; 3] = [
        &["verify", "--family", "fc", "--c", "1", "--a", "0.5"],
        &["verify", "--family", "fn", "--n", "4"],
        &["verify", "--family", "fc", "--c", "2", "--a", "1"],
    ];
    for args in cases {
        let run = || {
            Command::new(bin)
                .args(args)
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        if a.stdout != b.stdout || a.stdout.is_empty() {
            return Err(format!("reports differ for {args:?}"));
        }
        if a.status.code() != Some(0) {
            return Err(format!("{args:?} exited with {:?}", a.status.code()));
        }
    }
    Ok("repeated verify runs are byte-identical for 3 flag sets".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("closed-form vs quadrature shears", closed_vs_quadrature),
        ("special slit shears", special_shears),
        ("slit tips and degenerate collapse", slit_tips),
        ("hypergeometric identities", hypergeometric_identities),
        ("lift correctness", lift_correctness),
        ("minimality certificates", minimality),
        ("surface identification", identification),
        ("local univalence", univalence),
        ("epicycloid boundary", epicycloid_boundary),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

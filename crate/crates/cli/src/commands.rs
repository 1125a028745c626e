use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use sungeo::{
    diameter, diametral_points, distance_with, expm_skew_with, geodesic_family_with, log_map_with,
    m_value, plog_status, random_special_unitary, random_unitary, relative_spectrum,
    spectral_summary_with, theta_descriptor_with, theta_sample, LatticeProblem, SpecialUnitary64,
    SpectralData64, Tolerances64,
};

use crate::io::{read_matrix, write_matrix};
use crate::report::{matrix_value, Report};
use crate::{Cli, CliError, Command, TOL_ENV};

pub fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let tol = cli.tol;
    match &cli.command {
        Command::Dist { p, q } => dist(p, q, tol),
        Command::Log { p, q } => log(p, q, tol),
        Command::Geo { p, q, t } => geo(p, q, t, tol),
        Command::Plog { q } => plog(q, tol),
        Command::Diam { n, point } => diam(*n, point.as_deref(), tol),
        Command::Random { n, seed, out } => random(*n, *seed, out.as_deref()),
        Command::Theta { q, samples, seed } => theta(q, *samples, *seed, tol),
        Command::Oracle { q, bound } => oracle(q, *bound, tol),
    }
}

/// `--tol`, then `$SUNGEO_TOL`, then the library default for order `n`.
pub fn resolve_tolerances(flag: Option<f64>, n: usize) -> Result<Tolerances64, CliError> {
    let group = match flag {
        Some(g) => Some(g),
        None => match std::env::var(TOL_ENV) {
            Ok(s) => Some(
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Usage(format!("{TOL_ENV}={s:?} is not a number")))?,
            ),
            Err(_) => None,
        },
    };
    match group {
        None => Ok(Tolerances64::for_order(n)),
        Some(g) if g.is_finite() && g > 0.0 => Ok(Tolerances64::from_group(g)),
        Some(g) => Err(CliError::Usage(format!(
            "tolerance must be positive, got {g}"
        ))),
    }
}

fn load(path: &Path, flag: Option<f64>) -> Result<(SpecialUnitary64, Tolerances64), CliError> {
    let a = read_matrix(path)?;
    let tol = resolve_tolerances(flag, a.order())?;
    let q = SpecialUnitary64::new(a, tol.group)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?;
    Ok((q, tol))
}

fn load_pair(
    p: &Path,
    q: &Path,
    flag: Option<f64>,
) -> Result<(SpecialUnitary64, SpecialUnitary64, Tolerances64), CliError> {
    let (p_m, tol) = load(p, flag)?;
    let (q_m, _) = load(q, flag)?;
    if p_m.order() != q_m.order() {
        return Err(CliError::Invalid(format!(
            "order mismatch: {} vs {}",
            p_m.order(),
            q_m.order()
        )));
    }
    Ok((p_m, q_m, tol))
}

fn paths(ps: &[&Path]) -> Vec<String> {
    ps.iter().map(|p| p.display().to_string()).collect()
}

fn membership(report: Report, label: &str, q: &SpecialUnitary64) -> Report {
    report
        .residual(&format!("{label}_unitarity"), q.unitarity_residual())
        .residual(&format!("{label}_det"), q.det_residual())
}

fn spectral_json(sd: &SpectralData64) -> serde_json::Value {
    json!({
        "zeta": sd.zeta(),
        "s": sd.s(),
        "args": sd.args(),
        "m": m_value(sd),
    })
}

fn dist(p: &Path, q: &Path, flag: Option<f64>) -> Result<Report, CliError> {
    let (pm, qm, tol) = load_pair(p, q, flag)?;
    let (sd, oriented) = relative_spectrum(&pm, &qm, &tol)?;
    let d = distance_with(&pm, &qm, &tol)?;
    let rel = pm.adjoint().compose(&qm, tol.group)?;
    let report = Report::new(
        "dist",
        json!({ "p": paths(&[p])[0], "q": paths(&[q])[0], "tol": tol.group }),
    )
    .outputs(json!({
        "distance": d,
        "relative": spectral_json(&sd),
        "adjoint_oriented": oriented,
    }))
    .residual(
        "spectral_reconstruction",
        sd.reconstruct().distance_to(rel.matrix()),
    );
    Ok(membership(membership(report, "p", &pm), "q", &qm))
}

fn log(p: &Path, q: &Path, flag: Option<f64>) -> Result<Report, CliError> {
    let (pm, qm, tol) = load_pair(p, q, flag)?;
    let x = log_map_with(&pm, &qm, &tol)?;
    let reached = pm.matrix() * expm_skew_with(&x, &tol)?.matrix();
    let d = distance_with(&pm, &qm, &tol)?;
    let skew = (x.matrix() + &x.matrix().adjoint()).frobenius_norm();
    Ok(Report::new(
        "log",
        json!({ "p": paths(&[p])[0], "q": paths(&[q])[0], "tol": tol.group }),
    )
    .outputs(json!({
        "n": x.order(),
        "matrix": matrix_value(x.matrix()),
        "norm": x.norm(),
        "distance": d,
    }))
    .residual("round_trip", reached.distance_to(qm.matrix()))
    .residual("norm_vs_distance", (x.norm() - d).abs())
    .residual("skew_hermitian", skew)
    .residual("trace", x.matrix().trace().norm()))
}

fn geo(p: &Path, q: &Path, ts: &[f64], flag: Option<f64>) -> Result<Report, CliError> {
    if ts.iter().any(|t| !t.is_finite()) {
        return Err(CliError::Invalid("--t values must be finite".into()));
    }
    let (pm, qm, tol) = load_pair(p, q, flag)?;
    let fam = geodesic_family_with(&pm, &qm, &tol)?;
    let mut points = Vec::with_capacity(ts.len());
    let mut worst_unitarity: f64 = 0.0;
    for &t in ts {
        let g = fam.canonical.eval(t)?;
        worst_unitarity = worst_unitarity.max(g.unitarity_residual());
        points.push(json!({ "t": t, "matrix": matrix_value(g.matrix()) }));
    }
    let end = fam.canonical.eval(1.0)?;
    Ok(Report::new(
        "geo",
        json!({ "p": paths(&[p])[0], "q": paths(&[q])[0], "t": ts, "tol": tol.group }),
    )
    .outputs(json!({
        "n": pm.order(),
        "distance": fam.distance,
        "unique": fam.unique,
        "grassmannian": fam.label(),
        "points": points,
    }))
    .residual("endpoint", end.matrix().distance_to(qm.matrix()))
    .residual("points_unitarity", worst_unitarity))
}

fn plog(q: &Path, flag: Option<f64>) -> Result<Report, CliError> {
    let (qm, tol) = load(q, flag)?;
    let sd = spectral_summary_with(&qm, &tol)?;
    let st = plog_status(&sd);
    let report = Report::new("plog", json!({ "q": paths(&[q])[0], "tol": tol.group }))
        .outputs(json!({
            "nonempty": st.nonempty,
            "zeta": st.zeta,
            "s": st.s,
            "singleton": st.is_singleton,
            "grassmannian": st.label(),
            "args": sd.args(),
        }))
        .residual(
            "spectral_reconstruction",
            sd.reconstruct().distance_to(qm.matrix()),
        );
    Ok(membership(report, "q", &qm))
}

fn diam(n: usize, point: Option<&Path>, flag: Option<f64>) -> Result<Report, CliError> {
    let d = diameter::<f64>(n)?;
    let mut report = Report::new(
        "diam",
        json!({ "n": n, "point": point.map(|p| p.display().to_string()) }),
    );
    let Some(path) = point else {
        return Ok(report.outputs(json!({ "diameter": d })));
    };
    let (p, tol) = load(path, flag)?;
    if p.order() != n {
        return Err(CliError::Invalid(format!(
            "point has order {}, expected {n}",
            p.order()
        )));
    }
    let dp = diametral_points(&p)?;
    let mut worst: f64 = 0.0;
    let mut points = Vec::new();
    for pt in &dp.points {
        worst = worst.max((distance_with(&p, pt, &tol)? - d).abs());
        points.push(matrix_value(pt.matrix()));
    }
    report = report
        .outputs(json!({ "diameter": d, "points": points }))
        .residual("distance_to_points", worst);
    Ok(membership(report, "point", &p))
}

fn random(n: usize, seed: u64, out: Option<&Path>) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::Invalid("n must be at least 1".into()));
    }
    let q = random_special_unitary::<f64>(n, seed);
    if let Some(path) = out {
        write_matrix(path, q.matrix())?;
    }
    let report = Report::new(
        "random",
        json!({ "n": n, "seed": seed, "out": out.map(|p| p.display().to_string()) }),
    )
    .outputs(json!({ "n": n, "matrix": matrix_value(q.matrix()) }));
    Ok(membership(report, "q", &q))
}

fn theta(q: &Path, samples: usize, seed: u64, flag: Option<f64>) -> Result<Report, CliError> {
    let (qm, tol) = load(q, flag)?;
    let td = theta_descriptor_with(&qm, &tol)?;
    let base_exp = expm_skew_with(td.base_log(), &tol)?;
    let mut report = Report::new(
        "theta",
        json!({ "q": paths(&[q])[0], "samples": samples, "seed": seed, "tol": tol.group }),
    )
    .residual("base_log_exp", base_exp.matrix().distance_to(qm.matrix()));

    let mut logs = Vec::new();
    if samples > 0 {
        let block = td.block_order().ok_or_else(|| {
            CliError::Invalid("the minimal logarithm is unique; nothing to sample".into())
        })?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let norm = td.base_log().norm();
        let (mut worst_exp, mut worst_norm) = (0.0f64, 0.0f64);
        for _ in 0..samples {
            let r = random_unitary::<f64, _>(block, &mut rng);
            let x = theta_sample(&td, &qm, &r)?;
            let e = expm_skew_with(&x, &tol)?;
            worst_exp = worst_exp.max(e.matrix().distance_to(qm.matrix()));
            worst_norm = worst_norm.max((x.norm() - norm).abs());
            logs.push(matrix_value(x.matrix()));
        }
        report = report
            .residual("samples_exp", worst_exp)
            .residual("samples_norm", worst_norm);
    }
    Ok(report.outputs(json!({
        "n": td.order(),
        "zeta": td.zeta(),
        "singleton": td.is_singleton(),
        "nu1": td.nu1(),
        "nu2": td.nu2(),
        "grassmannian": td.label(),
        "dimension": td.dimension(),
        "beta_arg": td.beta_arg(),
        "m": td.base_log().norm().powi(2),
        "base_log": matrix_value(td.base_log().matrix()),
        "samples": logs,
    })))
}

fn oracle(q: &Path, bound: u32, flag: Option<f64>) -> Result<Report, CliError> {
    let (qm, tol) = load(q, flag)?;
    let sd = spectral_summary_with(&qm, &tol)?;
    let closed = m_value(&sd);
    let brute = LatticeProblem::from_spectrum(&sd)?.brute_force(bound)?;
    let gap = (closed - brute.value).abs();
    let agree = gap <= 1e-9 * closed.max(1.0);
    Ok(Report::new(
        "oracle",
        json!({ "q": paths(&[q])[0], "box": bound, "tol": tol.group }),
    )
    .outputs(json!({
        "closed_form": spectral_json(&sd),
        "lattice_min": brute.value,
        "minimizers": brute.minimizers,
        "agree": agree,
    }))
    .residual("gap", gap))
}

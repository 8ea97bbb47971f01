use std::collections::BTreeMap;
use std::f64::consts::PI;

use fuzzy_core::circle::{
    build_circle, circle_a_mu_eigen, circle_lambda1_minimizer, circle_resolution_check, circle_scs_omega,
    circle_su2_check, circle_ur_audit, circle_x1_analysis, mirror, verify_circle_algebra, a_mu_matrix,
};
use fuzzy_core::numerics::{random_states, BasisTag, SpectrumReport, StateVector};
use fuzzy_core::sphere::{
    alpha1_chain, build_sphere, sphere_bm_analysis, sphere_chi_tilde, sphere_resolution_check, sphere_scs_family,
    sphere_so4_check, sphere_ur_audit, theorem2_audit, verify_sphere_algebra, EulerAngles, ScsFamily, SphereNodes,
};
use fuzzy_core::{KPolicy, ResidualMap, ResolutionReport};

use crate::amplitudes::read_amplitudes;
use crate::config::{ResolutionArgs, RunConfig, Space, SpectrumArgs, UrArgs};
use crate::error::CliError;
use crate::report::{Cell, Report, Row, WideTable};

type Rows = Vec<Row>;

/// Runs `f` for every cutoff on its own thread and concatenates the rows in cutoff order.
fn per_lambda<F>(lambdas: impl Iterator<Item = usize>, f: F) -> Result<Vec<(usize, Rows)>, CliError>
where
    F: Fn(usize) -> Result<Rows, CliError> + Sync,
{
    let lambdas: Vec<usize> = lambdas.collect();
    std::thread::scope(|scope| {
        let f = &f;
        let handles: Vec<_> = lambdas.iter().map(|&l| scope.spawn(move || f(l))).collect();
        lambdas
            .iter()
            .zip(handles)
            .map(|(&l, h)| h.join().expect("worker panicked").map(|rows| (l, rows)))
            .collect()
    })
}

fn k_values(cfg: &RunConfig, lambdas: impl Iterator<Item = usize>) -> Vec<f64> {
    lambdas.map(|l| cfg.policy.resolve(l).expect("validated in RunConfig")).collect()
}

fn flatten(chunks: Vec<(usize, Rows)>) -> Rows {
    chunks.into_iter().flat_map(|(_, r)| r).collect()
}

fn residual_rows(map: ResidualMap, lambda: usize, tol: f64) -> Rows {
    map.into_iter().map(|(name, r)| Row::checked(name, lambda, r, tol, r <= tol)).collect()
}

pub fn verify(cfg: &RunConfig) -> Result<Report, CliError> {
    let (space, policy, tol) = (cfg.space, cfg.policy, cfg.tol);
    let chunks = per_lambda(cfg.lambdas.clone(), |lambda| {
        Ok(match space {
            Space::Circle => {
                let s = build_circle(lambda, policy)?;
                let mut map = verify_circle_algebra(&s);
                map.insert("su2_realization".into(), circle_su2_check(&s));
                residual_rows(map, lambda, tol)
            }
            Space::Sphere => {
                let s = build_sphere(lambda, policy)?;
                let mut map = verify_sphere_algebra(&s);
                let so4 = sphere_so4_check(&s);
                map.insert("so4_brackets".into(), so4.brackets_residual);
                map.insert("so4_casimir_identity".into(), so4.casimir_identity_residual);
                map.insert("so4_pseudo_casimir".into(), so4.pseudo_casimir_residual);
                let mut rows = residual_rows(map, lambda, tol);
                rows.push(Row::info("so4_casimir_value", lambda, so4.casimir_full_sum));
                rows.push(Row::info("so4_convention_factor", lambda, so4.convention_factor));
                rows
            }
        })
    })?;
    Ok(Report { command: "verify", k_values: k_values(cfg, cfg.lambdas.clone()), rows: flatten(chunks), wide: None })
}

pub fn localization(cfg: &RunConfig) -> Result<Report, CliError> {
    let (space, policy) = (cfg.space, cfg.policy);
    let chunks = per_lambda(cfg.lambdas.clone(), |lambda| {
        let lf = lambda as f64;
        let mut rows = Vec::new();
        match space {
            Space::Circle => {
                let s = build_circle(lambda, policy)?;
                let (v, _) = circle_scs_omega(&s, 0.0, &vec![0.0; s.dim()])?;
                let d = s.dispersion(&v)?.disp_x2;
                let bound = 2.0 / (3.0 * (lf + 1.0));
                rows.push(Row::maybe("phi_scs_disp", lambda, d, bound, (lambda >= 2).then_some(d <= bound)));
                let x1 = circle_x1_analysis(&s)?;
                let t = x1.toeplitz_disp_x2;
                rows.push(Row::checked("toeplitz_disp", lambda, t, x1.toeplitz_bound, t < x1.toeplitz_bound));
                if lambda == 1 {
                    let m = circle_lambda1_minimizer()?.disp_x2;
                    let want = 7.0 / 32.0;
                    rows.push(Row::checked("lambda1_min_disp", lambda, m, want, (m - want).abs() <= 1e-12));
                }
            }
            Space::Sphere => {
                let s = build_sphere(lambda, policy)?;
                let madore = 1.0 / (lf + 1.0);
                rows.push(Row::info("madore_min", lambda, madore));
                let id = EulerAngles::identity();
                let (_, d) = sphere_scs_family(&s, ScsFamily::PhiL0, &vec![0.0; lambda + 1], &id)?;
                rows.push(Row::checked("phi_scs_disp", lambda, d.disp_x2, madore, d.disp_x2 < madore));
                let (_, _, cmp) = sphere_chi_tilde(&s)?;
                rows.push(Row::maybe("chi_tilde_disp", lambda, cmp.disp_x2, cmp.sine_bound, cmp.below_sine_bound));
                rows.push(Row::checked("chi_tilde_vs_madore", lambda, cmp.disp_x2, madore, cmp.below_madore));
            }
        }
        Ok(rows)
    })?;
    let k = k_values(cfg, cfg.lambdas.clone());
    let wide = localization_table(space, &chunks, &k);
    Ok(Report { command: "localization", k_values: k, rows: flatten(chunks), wide: Some(wide) })
}

fn localization_table(space: Space, chunks: &[(usize, Rows)], k: &[f64]) -> WideTable {
    let columns: Vec<&'static str> = match space {
        Space::Circle => vec![
            "lambda", "k", "phi_scs_disp", "phi_scs_bound", "phi_scs_below", "toeplitz_disp", "toeplitz_bound",
            "toeplitz_below", "lambda1_min_disp",
        ],
        Space::Sphere => vec![
            "lambda", "k", "madore_min", "phi_scs_disp", "phi_scs_below", "chi_tilde_disp", "chi_tilde_sine_bound",
            "chi_tilde_below_sine", "chi_tilde_below_madore",
        ],
    };
    let rows = chunks
        .iter()
        .zip(k)
        .map(|((lambda, rows), &k)| {
            let by: BTreeMap<&str, &Row> = rows.iter().map(|r| (r.name.as_str(), r)).collect();
            let val = |n: &str| by.get(n).map_or(Cell::Num(f64::NAN), |r| Cell::Num(r.value.0));
            let bnd = |n: &str| Cell::Num(by.get(n).and_then(|r| r.bound).map_or(f64::NAN, |b| b.0));
            let flag = |n: &str| Cell::Flag(by.get(n).and_then(|r| r.pass));
            let mut out = vec![Cell::Int(*lambda), Cell::Num(k)];
            match space {
                Space::Circle => out.extend([
                    val("phi_scs_disp"),
                    bnd("phi_scs_disp"),
                    flag("phi_scs_disp"),
                    val("toeplitz_disp"),
                    bnd("toeplitz_disp"),
                    flag("toeplitz_disp"),
                    val("lambda1_min_disp"),
                ]),
                Space::Sphere => out.extend([
                    val("madore_min"),
                    val("phi_scs_disp"),
                    flag("phi_scs_disp"),
                    val("chi_tilde_disp"),
                    bnd("chi_tilde_disp"),
                    flag("chi_tilde_disp"),
                    flag("chi_tilde_vs_madore"),
                ]),
            }
            out
        })
        .collect();
    WideTable { columns, rows }
}

fn resolution_rows(prefix: &str, lambda: usize, r: &ResolutionReport, tol: f64) -> Rows {
    let mut rows = Vec::new();
    let pass = r.norm_condition && r.exact_nodes;
    rows.push(Row::maybe(format!("{prefix}_residual"), lambda, r.residual, tol, pass.then_some(r.residual <= tol)));
    let gap = (r.constant_measured - r.constant_expected).abs();
    rows.push(Row::maybe(
        format!("{prefix}_constant"),
        lambda,
        r.constant_measured,
        r.constant_expected,
        pass.then_some(gap <= 1e-10),
    ));
    if !r.norm_condition {
        for (i, (m, e)) in r.profile_measured.iter().zip(&r.profile_expected).enumerate() {
            rows.push(Row::maybe(format!("{prefix}_profile_{i}"), lambda, *m, *e, Some((m - e).abs() <= 1e-10)));
        }
    }
    rows
}

pub fn resolution(args: &ResolutionArgs) -> Result<(RunConfig, Report), CliError> {
    let mut cfg = RunConfig::try_from(&args.common)?;
    if cfg.space == Space::Sphere && *cfg.lambdas.end() > args.sphere_cap {
        let lo = *cfg.lambdas.start();
        if lo > args.sphere_cap {
            return Err(CliError::Config(format!("sphere resolution is capped at Λ = {}; raise --sphere-cap", args.sphere_cap)));
        }
        eprintln!("note: sphere resolution capped at Λ = {}", args.sphere_cap);
        cfg.lambdas = lo..=args.sphere_cap;
    }
    for n in [args.nodes_phi, args.nodes_theta, args.nodes_psi].into_iter().flatten() {
        if n == 0 {
            return Err(CliError::Config("node counts must be positive".into()));
        }
    }
    let user = args.amplitudes.as_deref().map(|p| read_amplitudes(p, cfg.space)).transpose()?;
    let (space, policy, tol) = (cfg.space, cfg.policy, cfg.tol);
    let mut chunks = per_lambda(cfg.lambdas.clone(), |lambda| {
        let mut rows = Vec::new();
        match space {
            Space::Circle => {
                let s = build_circle(lambda, policy)?;
                let (omega, _) = circle_scs_omega(&s, 0.0, &vec![0.0; s.dim()])?;
                let m = args.nodes_phi.unwrap_or(2 * lambda + 2);
                rows.extend(resolution_rows("omega", lambda, &circle_resolution_check(&s, &omega, m)?, tol));
                let under = circle_resolution_check(&s, &omega, lambda + 1)?;
                rows.push(Row::info("aliasing_residual", lambda, under.residual));
            }
            Space::Sphere => {
                let s = build_sphere(lambda, policy)?;
                let d = SphereNodes::default_for(lambda);
                let nodes = SphereNodes {
                    phi: args.nodes_phi.unwrap_or(d.phi),
                    theta: args.nodes_theta.unwrap_or(d.theta),
                    psi: Some(args.nodes_psi.unwrap_or(d.psi.unwrap_or(d.phi))),
                };
                let id = EulerAngles::identity();
                let zero = vec![0.0; lambda + 1];
                let (omega, _) = sphere_scs_family(&s, ScsFamily::OmegaLL, &zero, &id)?;
                rows.extend(resolution_rows("omega", lambda, &sphere_resolution_check(&s, &omega, nodes)?, tol));
                let (phi, _) = sphere_scs_family(&s, ScsFamily::PhiL0, &zero, &id)?;
                let coset = SphereNodes { psi: None, ..nodes };
                rows.extend(resolution_rows("phi_coset", lambda, &sphere_resolution_check(&s, &phi, coset)?, tol));
                let under = SphereNodes { phi: lambda + 1, theta: lambda.div_ceil(2), psi: Some(lambda + 1) };
                let r = sphere_resolution_check(&s, &omega, under)?;
                rows.push(Row::info("aliasing_residual", lambda, r.residual));
            }
        }
        Ok(rows)
    })?;
    if let Some((lambda, omega)) = user {
        let k = policy.resolve(lambda)?;
        let rows = match space {
            Space::Circle => {
                let s = build_circle(lambda, KPolicy::Explicit(k))?;
                let m = args.nodes_phi.unwrap_or(2 * lambda + 2);
                resolution_rows("user", lambda, &circle_resolution_check(&s, &omega, m)?, tol)
            }
            Space::Sphere => {
                let s = build_sphere(lambda, KPolicy::Explicit(k))?;
                let d = SphereNodes::default_for(lambda);
                let nodes = SphereNodes {
                    phi: args.nodes_phi.unwrap_or(d.phi),
                    theta: args.nodes_theta.unwrap_or(d.theta),
                    psi: Some(args.nodes_psi.unwrap_or(d.phi)),
                };
                resolution_rows("user", lambda, &sphere_resolution_check(&s, &omega, nodes)?, tol)
            }
        };
        chunks.push((lambda, rows));
    }
    let report = Report {
        command: "resolution",
        k_values: k_values(&cfg, cfg.lambdas.clone()),
        rows: flatten(chunks),
        wide: None,
    };
    Ok((cfg, report))
}

fn flag_row(name: &str, lambda: usize, ok: bool) -> Row {
    Row::checked(name, lambda, if ok { 1.0 } else { 0.0 }, 1.0, ok)
}

fn spectrum_flags(prefix: &str, lambda: usize, s: &SpectrumReport) -> Rows {
    vec![
        Row::info(format!("{prefix}_largest"), lambda, s.largest()),
        flag_row(&format!("{prefix}_symmetric"), lambda, s.flags.symmetric_spectrum),
        flag_row(&format!("{prefix}_simple"), lambda, s.flags.simple),
    ]
}

pub fn spectrum(args: &SpectrumArgs) -> Result<(RunConfig, Report), CliError> {
    let cfg = RunConfig::try_from(&args.common)?;
    let (space, policy) = (cfg.space, cfg.policy);
    let chunks = per_lambda(cfg.lambdas.clone(), |lambda| {
        let mut rows = Vec::new();
        match space {
            Space::Circle => {
                let s = build_circle(lambda, policy)?;
                let x1 = circle_x1_analysis(&s)?;
                rows.extend(spectrum_flags("x1", lambda, &x1.spectrum));
                if let Some(ok) = x1.spectrum.flags.interlaces_previous {
                    rows.push(flag_row("x1_interlaces_previous", lambda, ok));
                }
                for &mu in &args.mu {
                    let pairs = circle_a_mu_eigen(&s, mu)?;
                    let a = a_mu_matrix(&s, mu);
                    let residual = pairs.iter().map(|p| p.residual).fold(0.0, f64::max);
                    let mut gap: f64 = 0.0;
                    for p in &pairs {
                        let partner = pairs.iter().map(|q| (q.z + p.z).norm()).fold(f64::INFINITY, f64::min);
                        let r = mirror(&s, &p.state);
                        let ar = a.matvec(r.amplitudes());
                        let mirrored = ar
                            .iter()
                            .zip(r.amplitudes())
                            .map(|(x, y)| (x + p.z * y).norm_sqr())
                            .sum::<f64>()
                            .sqrt();
                        gap = gap.max(partner).max(mirrored);
                    }
                    rows.push(Row::checked(format!("a_mu_residual[mu={mu}]"), lambda, residual, 1e-8, residual <= 1e-8));
                    rows.push(Row::checked(format!("a_mu_pairing[mu={mu}]"), lambda, gap, 1e-8, gap <= 1e-8));
                }
            }
            Space::Sphere => {
                let s = build_sphere(lambda, policy)?;
                for m in 0..=lambda as i64 {
                    let r = sphere_bm_analysis(&s, m)?;
                    rows.extend(spectrum_flags(&format!("b{m}"), lambda, &r.spectrum));
                }
                let chain = alpha1_chain(&s)?;
                rows.push(flag_row("alpha1_chain_decreasing", lambda, chain.windows(2).all(|w| w[0] > w[1])));
                let floor = (PI / (lambda as f64 + 2.0)).cos();
                rows.push(Row::checked("alpha1_above_cosine", lambda, chain[0], floor, chain[0] > floor));
            }
        }
        Ok(rows)
    })?;
    let report =
        Report { command: "spectrum", k_values: k_values(&cfg, cfg.lambdas.clone()), rows: flatten(chunks), wide: None };
    Ok((cfg, report))
}

fn min_slacks(maps: impl Iterator<Item = Result<ResidualMap, CliError>>) -> Result<ResidualMap, CliError> {
    let mut out = ResidualMap::new();
    for m in maps {
        for (k, v) in m? {
            let e = out.entry(k).or_insert(f64::INFINITY);
            *e = e.min(v);
        }
    }
    Ok(out)
}

pub fn ur_audit(args: &UrArgs) -> Result<(RunConfig, Report), CliError> {
    let cfg = RunConfig::try_from(&args.common)?;
    if args.samples == 0 {
        return Err(CliError::Config("--samples must be positive".into()));
    }
    let (space, policy, tol, seed) = (cfg.space, cfg.policy, cfg.tol, cfg.seed);
    let chunks = per_lambda(cfg.lambdas.clone(), |lambda| {
        let seed = seed.wrapping_add(lambda as u64);
        let map = match space {
            Space::Circle => {
                let s = build_circle(lambda, policy)?;
                let states = random_states(s.dim(), args.samples, seed, BasisTag::Circle { lambda })?;
                min_slacks(states.iter().map(|v| circle_ur_audit(&s, v).map_err(CliError::from)))?
            }
            Space::Sphere => {
                let s = build_sphere(lambda, policy)?;
                let states: Vec<StateVector> = random_states(s.dim(), args.samples, seed, BasisTag::Sphere { lambda })?;
                let mut map = min_slacks(states.iter().map(|v| sphere_ur_audit(&s, v).map_err(CliError::from)))?;
                let t2 = states.iter().map(|v| theorem2_audit(&s, v)).collect::<Result<Vec<_>, _>>()?;
                map.insert("L_squared_vs_mean".into(), t2.into_iter().fold(f64::INFINITY, f64::min));
                map
            }
        };
        Ok(map.into_iter().map(|(k, v)| Row::checked(k, lambda, v, -tol, v >= -tol)).collect())
    })?;
    let report =
        Report { command: "ur-audit", k_values: k_values(&cfg, cfg.lambdas.clone()), rows: flatten(chunks), wide: None };
    Ok((cfg, report))
}

//! Subcommand implementations.

use crate::{
    open_output, spin_from_two_j, CliError, Command, CriterionArg, CurveOpts, Format, KRange,
    OutputOpts,
};
use spindepth::io::fmt_f64;
use spindepth::{
    decohere_particles, detect_depth, detect_depth_fluctuating, duan_criterion,
    fluctuating_nonlinear, fluctuating_sm, nonlinear_criterion, nonlinear_tilde_criterion,
    qubit_tangent_criterion, sm_criterion, sm_tilde_criterion, squeezed_state_moments,
    xi2, xi2_fluctuating, xi2_sm, xi2_sm_fluctuating, BoundaryCurve, CriterionId,
    CriterionResult, CurveCache, DepthOptions, MeasurementRecord, NoiseSpec,
    ShotEnsemble, SpinLength,
};
use std::io::Write;

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Curve {
            two_j,
            kind,
            curves,
            output,
        } => cmd_curve(&two_j, &kind, &curves, &output),
        Command::Boundary {
            n,
            two_j,
            k,
            curves,
            output,
        } => cmd_boundary(n, two_j, &k, &curves, &output),
        Command::Evaluate {
            input,
            criterion,
            krange,
            curves,
            output,
        } => cmd_evaluate(&input, criterion, &krange, &curves, &output),
        Command::Depth {
            input,
            criterion,
            half_integer,
            linear_scan,
            curves,
            output,
        } => cmd_depth(&input, criterion, half_integer, linear_scan, &curves, &output),
        Command::Simulate {
            n,
            mu_min,
            mu_max,
            points,
            noise,
            seed,
            curves,
            output,
        } => cmd_simulate(n, mu_min, mu_max, points, &noise, seed, &curves, &output),
        Command::Fluctuating {
            input,
            two_j,
            criterion,
            krange,
            depth,
            curves,
            output,
        } => cmd_fluctuating(&input, two_j, criterion, &krange, depth, &curves, &output),
    }
}

// ---------------------------------------------------------------- curve

fn cmd_curve(
    two_j_list: &[u32],
    kind: &str,
    curves: &CurveOpts,
    output: &OutputOpts,
) -> Result<(), CliError> {
    let (want_f, want_g) = match kind {
        "f" | "F" => (true, false),
        "g" | "G" => (false, true),
        "both" => (true, true),
        other => return Err(CliError::Usage(format!("unknown curve kind '{other}'"))),
    };
    let cache = curves.cache();
    let mut out = open_output(&output.out)?;
    if output.format == Format::Csv {
        writeln!(out, "two_j,kind,lambda,X,value,derivative")?;
    }
    for &two_j in two_j_list {
        let j = spin_from_two_j(two_j)?;
        let mut emit = |curve: &BoundaryCurve| -> Result<(), CliError> {
            match output.format {
                Format::Json => {
                    let text = spindepth::boundary::curve_to_json(curve)?;
                    writeln!(out, "{text}")?;
                }
                Format::Csv => {
                    for s in &curve.samples {
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            two_j,
                            curve.kind,
                            fmt_f64(s.lambda),
                            fmt_f64(s.x),
                            fmt_f64(s.value),
                            fmt_f64(s.derivative)
                        )?;
                    }
                }
            }
            Ok(())
        };
        if want_f {
            emit(cache.get_f(j)?.as_ref())?;
        }
        if want_g {
            let g = if j.is_integer() {
                cache.get_g(j)?
            } else {
                cache.get_g_halfinteger(j)?
            };
            emit(&g)?;
        }
    }
    out.flush()?;
    eprintln!(
        "curves: {} computed, remainder served from cache",
        cache.computed_count()
    );
    Ok(())
}

// ------------------------------------------------------------- boundary

fn cmd_boundary(
    n: u64,
    two_j: u32,
    ks: &[u64],
    curves: &CurveOpts,
    output: &OutputOpts,
) -> Result<(), CliError> {
    let j = spin_from_two_j(two_j)?;
    let jv = j.value();
    let nf = n as f64;
    let nj = nf * jv;
    let cache = curves.cache();
    let mut out = open_output(&output.out)?;
    if output.format == Format::Csv {
        writeln!(out, "k,curve,second_moment_perp,var_Jx")?;
    }
    let write_point = |out: &mut dyn Write, k: u64, which: &str, smp: f64, var: f64| {
        match output.format {
            Format::Json => writeln!(
                out,
                r#"{{"k":{k},"curve":"{which}","second_moment_perp":{},"var_Jx":{}}}"#,
                serde_json::Number::from_f64(smp).unwrap(),
                serde_json::Number::from_f64(var).unwrap()
            ),
            Format::Csv => writeln!(out, "{k},{which},{},{}", fmt_f64(smp), fmt_f64(var)),
        }
    };
    for &k in ks {
        let group = j
            .times(k)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        if !group.is_integer() {
            return Err(CliError::Usage(format!(
                "k = {k} gives half-integer kj; choose even k for 2j = {two_j}"
            )));
        }
        let g = cache.get_g(group)?;
        let boundary = spindepth::producibility_boundary(n, j, k, &g)?;
        for p in &boundary.points {
            write_point(&mut out, k, "nonlinear", p.second_moment_perp, p.var_jx)?;
        }

        // ξ² linear criterion: the tangent line to the nonlinear boundary.
        let kj = group.value();
        let c = nj * (kj + 1.0);
        let smp_hi = nj * (nj + 1.0);
        let steps = 200;
        for i in 0..=steps {
            let smp = c + (smp_hi - c) * i as f64 / steps as f64;
            let var = (smp - c) / (2.0 * (kj + 1.0) * (nf - k as f64) * jv);
            write_point(&mut out, k, "xi2_tangent", smp, var)?;
        }

        // Duan's criterion applies to qubits.
        if j == SpinLength::HALF {
            let c_duan = nf / 4.0 * (k as f64 + 2.0);
            for i in 0..=steps {
                let smp = c_duan + (smp_hi - c_duan) * i as f64 / steps as f64;
                let var = (smp - c_duan) / (nf * (k as f64 + 2.0));
                write_point(&mut out, k, "duan", smp, var)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

// ------------------------------------------------------------- evaluate

/// Evaluate one criterion at one k, routing odd kj through the analytic
/// bounds where they exist.
fn evaluate_one(
    rec: &MeasurementRecord,
    id: CriterionId,
    k: u64,
    cache: &CurveCache,
) -> Result<CriterionResult, CliError> {
    let group = rec
        .j
        .times(k)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let integer_kj = group.is_integer();
    Ok(match id {
        CriterionId::Nonlinear => {
            if integer_kj {
                nonlinear_criterion(rec, k, cache.get_g(group)?.as_ref())?
            } else {
                nonlinear_tilde_criterion(rec, k)?
            }
        }
        CriterionId::SorensenMolmer => {
            if integer_kj {
                sm_criterion(rec, k, cache.get_f(group)?.as_ref())?
            } else {
                sm_tilde_criterion(rec, k)?
            }
        }
        CriterionId::Xi2 => xi2(rec, k)?,
        CriterionId::Xi2Sm => xi2_sm(rec, k)?,
        CriterionId::Duan => duan_criterion(rec, k)?,
        CriterionId::QubitTangent => qubit_tangent_criterion(rec, k)?,
    })
}

fn write_result_row(
    out: &mut dyn Write,
    format: Format,
    record_index: usize,
    n: u64,
    r: &CriterionResult,
) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut value = serde_json::to_value(r).expect("result serializes");
            let obj = value.as_object_mut().unwrap();
            obj.insert("record".into(), record_index.into());
            obj.insert("N".into(), n.into());
            writeln!(out, "{value}")
        }
        Format::Csv => writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            record_index,
            n,
            r.criterion,
            r.k,
            r.applicable,
            fmt_f64(r.lhs),
            fmt_f64(r.rhs),
            fmt_f64(r.margin),
            r.violated
        ),
    }
}

fn cmd_evaluate(
    input: &std::path::Path,
    criterion: CriterionArg,
    krange: &KRange,
    curves: &CurveOpts,
    output: &OutputOpts,
) -> Result<(), CliError> {
    let records = spindepth::io::read_records_path(input)?;
    if records.is_empty() {
        return Err(CliError::Usage(format!(
            "no records in {}",
            input.display()
        )));
    }
    let cache = curves.cache();
    let mut out = open_output(&output.out)?;
    if output.format == Format::Csv {
        writeln!(out, "record,N,criterion,k,applicable,lhs,rhs,margin,violated")?;
    }
    let mut applicable_seen = false;
    for (idx, rec) in records.iter().enumerate() {
        let (lo, hi) = krange.resolve(rec.n.saturating_sub(1))?;
        for id in criterion.ids() {
            for k in lo..=hi.min(rec.n.saturating_sub(1)) {
                match evaluate_one(rec, id, k, &cache) {
                    Ok(res) => {
                        applicable_seen |= res.applicable;
                        write_result_row(&mut out, output.format, idx, rec.n, &res)?;
                    }
                    Err(CliError::Usage(msg)) | Err(CliError::Inapplicable(msg)) => {
                        eprintln!("record {idx}, {id}, k={k}: {msg}");
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    out.flush()?;
    if !applicable_seen {
        return Err(CliError::Inapplicable(
            "no criterion was applicable for any requested k".into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------- depth

fn cmd_depth(
    input: &std::path::Path,
    criterion: CriterionArg,
    half_integer: bool,
    linear_scan: bool,
    curves: &CurveOpts,
    output: &OutputOpts,
) -> Result<(), CliError> {
    let records = spindepth::io::read_records_path(input)?;
    if records.is_empty() {
        return Err(CliError::Usage(format!(
            "no records in {}",
            input.display()
        )));
    }
    let cache = curves.cache();
    let opts = DepthOptions {
        half_integer_curves: half_integer,
        linear_scan,
        max_k: None,
    };
    let mut out = open_output(&output.out)?;
    if output.format == Format::Csv {
        writeln!(out, "record,N,criterion,max_k_violated,certified_depth")?;
    }
    for (idx, rec) in records.iter().enumerate() {
        for id in criterion.ids() {
            match detect_depth(rec, id, &cache, &opts) {
                Ok(verdict) => match output.format {
                    Format::Json => {
                        writeln!(
                            out,
                            r#"{{"record":{idx},"N":{},"criterion":"{id}","max_k_violated":{},"certified_depth":{}}}"#,
                            rec.n,
                            verdict
                                .max_k_violated
                                .map_or("null".to_string(), |k| k.to_string()),
                            verdict.certified_depth
                        )?;
                    }
                    Format::Csv => {
                        writeln!(
                            out,
                            "{idx},{},{id},{},{}",
                            rec.n,
                            verdict
                                .max_k_violated
                                .map_or(String::new(), |k| k.to_string()),
                            verdict.certified_depth
                        )?;
                    }
                },
                Err(e) => eprintln!("record {idx}, {id}: {e}"),
            }
        }
    }
    out.flush()?;
    Ok(())
}

// ------------------------------------------------------------- simulate

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    n: u64,
    mu_min: f64,
    mu_max: f64,
    points: usize,
    noise: &str,
    seed: u64,
    curves: &CurveOpts,
    output: &OutputOpts,
) -> Result<(), CliError> {
    if points < 2 || mu_min.is_nan() || mu_max.is_nan() || mu_min <= 0.0 || mu_max <= mu_min {
        return Err(CliError::Usage(
            "need points >= 2 and 0 < mu-min < mu-max".into(),
        ));
    }
    let noise: NoiseSpec = noise.parse().map_err(CliError::Usage)?;
    let cache = curves.cache();
    let opts = DepthOptions::default();
    let mut out = open_output(&output.out)?;
    if output.format == Format::Csv {
        writeln!(
            out,
            "mu,mean_Jz,var_Jx,var_ratio,depth_nonlinear,depth_sm"
        )?;
    }
    let _ = seed; // the sweep itself is deterministic
    let ratio = (mu_max / mu_min).powf(1.0 / (points as f64 - 1.0));
    let mut mu = mu_min;
    for _ in 0..points {
        let state = squeezed_state_moments(n, mu)?;
        let rec = match noise {
            NoiseSpec::None => state.to_record().map_err(|e| CliError::Usage(e.to_string()))?,
            NoiseSpec::WhiteNoise { p } => spindepth::apply_white_noise(&state, p)?
                .to_record()
                .map_err(|e| CliError::Usage(e.to_string()))?,
            NoiseSpec::DecohereParticles { m } => decohere_particles(&state, m)?,
        };
        let depth_nl = detect_depth(&rec, CriterionId::Nonlinear, &cache, &opts)?;
        let depth_sm = detect_depth(&rec, CriterionId::SorensenMolmer, &cache, &opts)?;
        let var_ratio = rec.var_jx / (rec.nj() / 2.0);
        match output.format {
            Format::Json => writeln!(
                out,
                r#"{{"mu":{},"mean_Jz":{},"var_Jx":{},"var_ratio":{},"depth_nonlinear":{},"depth_sm":{}}}"#,
                serde_json::Number::from_f64(mu).unwrap(),
                serde_json::Number::from_f64(rec.mean_jz).unwrap(),
                serde_json::Number::from_f64(rec.var_jx).unwrap(),
                serde_json::Number::from_f64(var_ratio).unwrap(),
                depth_nl.certified_depth,
                depth_sm.certified_depth
            )?,
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{}",
                fmt_f64(mu),
                fmt_f64(rec.mean_jz),
                fmt_f64(rec.var_jx),
                fmt_f64(var_ratio),
                depth_nl.certified_depth,
                depth_sm.certified_depth
            )?,
        }
        mu *= ratio;
    }
    out.flush()?;
    Ok(())
}

// ---------------------------------------------------------- fluctuating

fn cmd_fluctuating(
    input: &std::path::Path,
    two_j: u32,
    criterion: CriterionArg,
    krange: &KRange,
    depth: bool,
    curves: &CurveOpts,
    output: &OutputOpts,
) -> Result<(), CliError> {
    let j = spin_from_two_j(two_j)?;
    let ens: ShotEnsemble = spindepth::io::read_ensemble_path(input, j)?;
    if ens.j != j {
        return Err(CliError::Usage(format!(
            "ensemble file has 2j = {}, flag says {two_j}",
            ens.j.two_j()
        )));
    }
    let cache = curves.cache();
    let mut out = open_output(&output.out)?;

    if depth {
        if output.format == Format::Csv {
            writeln!(out, "criterion,max_k_violated,certified_depth")?;
        }
        for id in criterion.ids() {
            match detect_depth_fluctuating(&ens, id, &cache, &DepthOptions::default()) {
                Ok(verdict) => match output.format {
                    Format::Json => writeln!(
                        out,
                        r#"{{"criterion":"{id}","max_k_violated":{},"certified_depth":{}}}"#,
                        verdict
                            .max_k_violated
                            .map_or("null".to_string(), |k| k.to_string()),
                        verdict.certified_depth
                    )?,
                    Format::Csv => writeln!(
                        out,
                        "{id},{},{}",
                        verdict
                            .max_k_violated
                            .map_or(String::new(), |k| k.to_string()),
                        verdict.certified_depth
                    )?,
                },
                Err(e) => eprintln!("{id}: {e}"),
            }
        }
        out.flush()?;
        return Ok(());
    }

    let (lo, hi) = krange.resolve(ens.min_n().saturating_sub(1))?;
    if output.format == Format::Csv {
        writeln!(out, "record,N,criterion,k,applicable,lhs,rhs,margin,violated")?;
    }
    let mut applicable_seen = false;
    for id in criterion.ids() {
        for k in lo..=hi.min(ens.min_n().saturating_sub(1)) {
            let group = match j.times(k) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("{id}, k={k}: {e}");
                    continue;
                }
            };
            if !group.is_integer() {
                continue;
            }
            let res: Result<CriterionResult, spindepth::FluctError> = match id {
                CriterionId::Nonlinear => cache
                    .get_g(group)
                    .map_err(spindepth::CriterionError::from)
                    .map_err(spindepth::FluctError::from)
                    .and_then(|c| fluctuating_nonlinear(&ens, k, &c)),
                CriterionId::SorensenMolmer => cache
                    .get_f(group)
                    .map_err(spindepth::CriterionError::from)
                    .map_err(spindepth::FluctError::from)
                    .and_then(|c| fluctuating_sm(&ens, k, &c)),
                CriterionId::Xi2 => xi2_fluctuating(&ens, k),
                CriterionId::Xi2Sm => xi2_sm_fluctuating(&ens, k),
                other => {
                    eprintln!("{other}: no fluctuating-N form; skipped");
                    continue;
                }
            };
            match res {
                Ok(res) => {
                    applicable_seen |= res.applicable;
                    write_result_row(&mut out, output.format, 0, ens.min_n(), &res)?;
                }
                Err(spindepth::FluctError::NotApplicable { reason }) => {
                    eprintln!("{id}, k={k}: not applicable: {reason}");
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    out.flush()?;
    if !applicable_seen {
        return Err(CliError::Inapplicable(
            "no criterion was applicable for any requested k".into(),
        ));
    }
    Ok(())
}

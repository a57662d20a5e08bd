use pseudoherm::catalog::{build, catalog_list, CatalogEntry};
use pseudoherm::dynamics::{stationarity_check, time_grid};
use pseudoherm::involution::{c_operator_for, involution_constraint_check, GeneralParity};
use pseudoherm::leewick::{build_lee_wick_variant, verify_lee_wick, LeeWickVariant};
use pseudoherm::metric::{metric_for_case, verify_pseudo_hermiticity};
use pseudoherm::sweep::{sweep_point, SweepRow, SweepSpec};
use pseudoherm::{classify, CMat2, Case, Error, Kind, MetricResult, Normalization, PhaseVector, Tolerances, C64};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::input::{decode, hamiltonian, json_value, matrix, params_map, read_file};
use crate::output::{num, opt_num, Body, Format, Outcome, Table};
use crate::{Cli, Command, HArg, MetricFlags, QArg, VariantArg};

pub fn dispatch(cli: &Cli, tol: &Tolerances) -> CliResult<Outcome> {
    let h_of = |a: &HArg| hamiltonian(a.h.as_deref(), cli.input.as_deref());
    match &cli.cmd {
        Command::Classify(a) => classify_cmd(&h_of(a)?, tol),
        Command::Metric { h, m } => metric_cmd(&h_of(h)?, m, tol),
        Command::Verify { h, eta, kind } => verify_cmd(cli, h, eta.as_deref(), *kind, tol),
        Command::Involution { h, m, phi_p, b } => involution_cmd(&h_of(h)?, m, *phi_p, b.as_deref(), tol),
        Command::Catalog { name, params, case, m } => catalog_cmd(name.as_deref(), params, *case, m, tol),
        Command::Sweep {
            entry,
            grid,
            params,
            observables,
            m,
        } => {
            let mut spec = SweepSpec::new(entry, params_map(params)?, grid.clone());
            spec.normalization = normalization(m)?;
            spec.phase = PhaseVector::new(m.phi);
            spec.branch = m.branch;
            spec.circle = m.circle;
            sweep_cmd(&spec, observables, tol)
        }
        Command::Dynamics {
            h,
            m,
            eta,
            b,
            psi0,
            t0,
            t1,
            steps,
        } => {
            let h = h_of(h)?;
            let eta = match eta {
                Some(t) => matrix("eta", t)?,
                None => metric(&h, m, tol)?.eta,
            };
            let b = b.as_deref().map(|t| matrix("b", t)).transpose()?.unwrap_or(CMat2::identity());
            let rep = stationarity_check(&h, &eta, &b, [psi0[0], psi0[1]], &time_grid(*t0, *t1, *steps), tol)?;
            let rows = rep
                .times
                .iter()
                .zip(&rep.values)
                .map(|(t, v)| vec![num(*t), num(v.re), num(v.im)])
                .collect();
            Ok(Body {
                json: to_value(&rep),
                table: Some(Table {
                    header: vec!["t".into(), "re".into(), "im".into()],
                    rows,
                }),
                default: Format::Json,
            }
            .into())
        }
        Command::LeeWick { omega, variant } => lee_wick(*omega, *variant, tol),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library records serialize")
}

fn normalization(m: &MetricFlags) -> CliResult<Normalization> {
    Ok(Normalization::new(m.n1, m.n2)?)
}

/// The single admitted case compatible with `--kind` and `--q`.
fn select_case(h: &CMat2, kind: Option<Kind>, q: Option<QArg>, tol: &Tolerances) -> CliResult<Case> {
    let cl = classify(h, tol)?;
    if cl.exceptional {
        return Err(Error::ExceptionalPoint {
            disc_abs: cl.diagnostics.disc.norm(),
        }
        .into());
    }
    let fits = |c: &Case| kind.is_none_or(|k| c.kind() == k) && q.is_none_or(|q| c.trivial() == (q == QArg::Identity));
    let found: Vec<Case> = cl.case_labels.iter().copied().filter(fits).collect();
    match found.as_slice() {
        [c] => Ok(*c),
        [] => {
            let mut want = vec![];
            if let Some(k) = kind {
                want.push(format!("{k:?}").to_lowercase());
            }
            if let Some(q) = q {
                want.push(format!("{q:?}").to_lowercase());
            }
            Err(Error::CaseMismatch {
                requested: want.join(" "),
            }
            .into())
        }
        _ => Err(Error::KindRequired(format!("{} and {} are both admitted; pass --kind", found[0], found[1])).into()),
    }
}

fn metric(h: &CMat2, m: &MetricFlags, tol: &Tolerances) -> CliResult<MetricResult> {
    let case = select_case(h, m.kind, m.q, tol)?;
    let n = normalization(m)?;
    Ok(metric_for_case(h, &n, &PhaseVector::new(m.phi), case, m.branch, m.circle, tol)?)
}

fn residual_gate(what: &'static str, value: f64, limit: f64) -> Option<CliError> {
    (!(value <= limit)).then_some(CliError::Threshold { what, value, limit })
}

fn classify_cmd(h: &CMat2, tol: &Tolerances) -> CliResult<Outcome> {
    Ok(Body::json(to_value(&classify(h, tol)?)).into())
}

fn metric_cmd(h: &CMat2, m: &MetricFlags, tol: &Tolerances) -> CliResult<Outcome> {
    let r = metric(h, m, tol)?;
    let mut v = to_value(&r);
    v["h"] = to_value(h);
    Ok(Outcome {
        body: Body::json(v),
        failure: residual_gate("residual", r.residual, tol.threshold(1.0)),
    })
}

#[derive(Deserialize)]
struct VerifyInput {
    #[serde(alias = "hamiltonian")]
    h: CMat2,
    eta: CMat2,
    kind: Option<Kind>,
}

fn verify_cmd(cli: &Cli, h: &HArg, eta: Option<&str>, kind: Option<Kind>, tol: &Tolerances) -> CliResult<Outcome> {
    let (hm, em, file_kind) = match (&cli.input, h.h.as_deref(), eta) {
        (Some(p), None, None) => {
            let v: VerifyInput = decode("input", json_value("input", &read_file(p)?)?)?;
            (v.h, v.eta, v.kind)
        }
        (None, Some(ht), Some(et)) => (matrix("h", ht)?, matrix("eta", et)?, None),
        _ => return Err(CliError::Usage("verify takes either --input FILE or both --h and --eta".into())),
    };
    let kind = match kind.or(file_kind) {
        Some(k) => k,
        None => select_case(&hm, None, None, tol)?.kind(),
    };
    let residual = verify_pseudo_hermiticity(&hm, &em, kind, tol)?;
    let body = json!({
        "kind": kind,
        "residual": residual,
        "hermitian": em.approx_eq(&em.dagger(), tol),
    });
    Ok(Outcome {
        body: Body::json(body),
        failure: residual_gate("residual", residual, tol.threshold(1.0)),
    })
}

fn involution_cmd(h: &CMat2, m: &MetricFlags, phi_p: f64, b: Option<&str>, tol: &Tolerances) -> CliResult<Outcome> {
    if m.kind == Some(Kind::Anti) {
        return Err(Error::CaseMismatch {
            requested: "anti kind for the involution analysis".into(),
        }
        .into());
    }
    let n = normalization(m)?;
    let constraints = involution_constraint_check(h, &n, tol)?;
    let eta = metric_for_case(h, &n, &PhaseVector::new(m.phi), Case::Case1, m.branch, m.circle, tol)?.eta;
    let b = b.map(|t| matrix("b", t)).transpose()?.unwrap_or(CMat2::identity());
    let c = c_operator_for(h, Kind::Pseudo, &eta, &b, &GeneralParity::new(phi_p), tol)?;
    let mut v = to_value(&constraints);
    v["eta"] = to_value(&eta);
    v["c"] = to_value(&c);
    v["phi_p"] = json!(phi_p);
    Ok(Body::json(v).into())
}

fn oracle_record(e: &CatalogEntry, case: Case, m: &MetricFlags, tol: &Tolerances) -> CliResult<Value> {
    let n = normalization(m)?;
    let pv = PhaseVector::new(m.phi);
    let h = &e.hamiltonian;
    let res = e
        .oracle_metric(case, &n, &pv, m.branch, m.circle, tol)
        .and_then(|o| metric_for_case(h, &n, &pv, case, m.branch, m.circle, tol).map(|g| (o, g)));
    Ok(match res {
        Ok((o, g)) => json!({
            "case": case,
            "eta": o.eta,
            "parts": o.parts,
            "general_eta": g.eta,
            "rel_diff": o.eta.rel_diff(&g.eta),
        }),
        Err(err) => json!({ "case": case, "error": err.kind(), "message": err.to_string() }),
    })
}

fn catalog_cmd(
    name: Option<&str>,
    params: &[(String, C64)],
    case: Option<Case>,
    m: &MetricFlags,
    tol: &Tolerances,
) -> CliResult<Outcome> {
    let name = match name {
        None | Some("list") => return Ok(Body::json(to_value(&catalog_list())).into()),
        Some(n) => n,
    };
    let params = params_map(params)?;
    if name == "lee-wick" {
        if let Some(k) = params.keys().find(|k| *k != "omega") {
            return Err(Error::NotFound(format!("parameter {k} of lee-wick")).into());
        }
        let omega = params.get("omega").copied().unwrap_or(C64::new(1.0, -0.5));
        return lee_wick(omega, VariantArg::Anticommuting, tol);
    }
    let e = build(name, &params, tol)?;
    let cases = match case {
        Some(c) => vec![c],
        None => e.predicted_cases(),
    };
    let oracles = cases.iter().map(|c| oracle_record(&e, *c, m, tol)).collect::<CliResult<Vec<_>>>()?;
    let v = json!({
        "name": e.name(),
        "model": e.model,
        "hamiltonian": e.hamiltonian,
        "regimes": e.regimes,
        "predicted_cases": e.predicted_cases(),
        "oracles": oracles,
    });
    Ok(Body::json(v).into())
}

const OBSERVABLES: [&str; 8] = [
    "case",
    "exceptional",
    "disc",
    "eigenvalues",
    "det_eta_sign",
    "eta_min_eigenvalue",
    "residual",
    "oracle_residual",
];

fn columns(obs: &str) -> Vec<String> {
    match obs {
        "disc" => vec!["disc_re".into(), "disc_im".into()],
        "eigenvalues" => ["e1_re", "e1_im", "e2_re", "e2_im"].map(String::from).to_vec(),
        o => vec![o.to_string()],
    }
}

fn cells(obs: &str, r: &SweepRow) -> Vec<String> {
    match obs {
        "case" => vec![if r.exceptional {
            "exceptional".into()
        } else if r.cases.is_empty() {
            "none".into()
        } else {
            r.cases.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("+")
        }],
        "exceptional" => vec![r.exceptional.to_string()],
        "disc" => vec![num(r.disc.re), num(r.disc.im)],
        "eigenvalues" => match r.eigenvalues {
            Some((a, b)) => vec![num(a.re), num(a.im), num(b.re), num(b.im)],
            None => vec![String::new(); 4],
        },
        "det_eta_sign" => vec![r.det_eta_sign.map(|s| format!("{s:+}")).unwrap_or_default()],
        "eta_min_eigenvalue" => vec![opt_num(r.eta_min_eigenvalue)],
        "residual" => vec![opt_num(r.residual)],
        "oracle_residual" => vec![opt_num(r.oracle_residual)],
        _ => unreachable!("validated"),
    }
}

fn sweep_cmd(spec: &SweepSpec, observables: &[String], tol: &Tolerances) -> CliResult<Outcome> {
    let obs: Vec<&str> = if observables.is_empty() {
        OBSERVABLES.to_vec()
    } else {
        observables.iter().map(|s| s.trim()).collect()
    };
    if let Some(bad) = obs.iter().find(|o| !OBSERVABLES.contains(o)) {
        return Err(Error::NotFound(format!("observable {bad}")).into());
    }
    let n = spec.validate()?;
    let rows = (0..n)
        .into_par_iter()
        .map(|k| sweep_point(spec, k, tol))
        .collect::<Result<Vec<_>, _>>()?;

    let mut header: Vec<String> = spec.axes.iter().map(|a| a.name.clone()).collect();
    header.extend(obs.iter().flat_map(|o| columns(o)));
    let table_rows = rows
        .iter()
        .map(|r| {
            let mut line: Vec<String> = r.params.iter().map(|x| num(*x)).collect();
            line.extend(obs.iter().flat_map(|o| cells(o, r)));
            line
        })
        .collect();
    let json = json!({
        "entry": spec.entry,
        "axes": spec.axes,
        "rows": rows,
    });
    Ok(Body {
        json,
        table: Some(Table {
            header,
            rows: table_rows,
        }),
        default: Format::Csv,
    }
    .into())
}

fn lee_wick(omega: C64, variant: VariantArg, tol: &Tolerances) -> CliResult<Outcome> {
    let v = match variant {
        VariantArg::Anticommuting => LeeWickVariant::Anticommuting,
        VariantArg::Commuting => LeeWickVariant::Commuting,
    };
    let sys = build_lee_wick_variant(omega, v)?;
    let res = verify_lee_wick(&sys);
    Ok(Outcome {
        body: Body::json(json!({ "system": sys, "residuals": res })),
        failure: residual_gate("lee-wick residual", res.max, tol.threshold(omega.norm())),
    })
}

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::Ratio;
use serde::Deserialize;
use serde_json::{json, Value};
use trace_atlas::experiments::{chebyshev_sweep, discretize_measure, escape_row, MOMENT_GAPS};
use trace_atlas::means::{means_report, sector_mean_bound};
use trace_atlas::potential::{
    discrete_energy, energy_sandwich, equilibrium_moment, generalized_mahler, mahler,
    CompactSetModel, CountingMeasure,
};
use trace_atlas::realroots::{all_roots, in_sector, is_totally_positive, sector_placement, Placement};
use trace_atlas::search::{enumerate_totally_positive, minimal_symmetric_mean, ExtremalRecord, SearchOptions};
use trace_atlas::tolerances::default_root_eps;

use crate::report::{self, by_order, csv_text, envelope, rational};
use crate::{
    AnalyzeArgs, Cause, ChebyshevArgs, Context, DiscretizeArgs, EnergyArgs, EscapeArgs, Failure,
    MomentsArgs, Rendered, SearchArgs, SearchFormat, SweepFormat, Table,
};

/// Attach the echoed inputs to a library error.
fn fail(inputs: &Value) -> impl Fn(trace_atlas::Error) -> Failure + '_ {
    move |e| Failure { inputs: inputs.clone(), error: Cause::Module(e) }
}

pub fn analyze(a: &AnalyzeArgs, ctx: &Context) -> Rendered {
    let inputs = json!({
        "poly": report::coeffs(&a.poly),
        "m": a.m,
        "set": a.set.to_string(),
        "gamma": a.gamma,
    });
    let err = fail(&inputs);
    let p = &a.poly;
    let roots = all_roots(p, default_root_eps(p.degree())).map_err(&err)?;
    let means = means_report(p, &a.m).map_err(&err)?;
    let m = mahler(p, &roots).map_err(&err)?;
    let gm = generalized_mahler(p, &roots, &a.set, false).map_err(&err)?;
    let squarefree = p.is_squarefree().map_err(&err)?;
    let discriminant = if p.degree() >= 2 {
        Value::String(p.discriminant().map_err(&err)?.to_string())
    } else {
        Value::Null
    };
    let totally_positive = if squarefree {
        json!(is_totally_positive(p).map_err(&err)?)
    } else {
        Value::Null
    };

    let (inside, straddling) = match in_sector(&roots, a.gamma) {
        Ok(b) => (json!(b), Value::Null),
        Err(trace_atlas::Error::InsufficientPrecision { index }) => (Value::Null, json!(index)),
        Err(e) => return Err(err(e)),
    };
    let any_outside = roots
        .iter()
        .any(|(z, r, real)| sector_placement(z, r, real, a.gamma) == Placement::Outside);
    let bound = if any_outside || p.constant_term() == &BigInt::from(0) {
        Value::Null
    } else {
        let b = sector_mean_bound(p, &roots, a.gamma).map_err(&err)?;
        json!({ "lhs": b.lhs, "rhs": b.rhs, "slack": b.slack, "holds": b.holds })
    };

    let results = json!({
        "polynomial": report::polynomial(p),
        "squarefree": squarefree,
        "discriminant": discriminant,
        "totally_positive": totally_positive,
        "roots": report::roots(&roots),
        "means": {
            "symmetric": by_order(&means.symmetric),
            "arithmetic_mean": rational(&means.arithmetic_mean),
            "power_sum_means": by_order(&means.power_sum_means),
            "maclaurin": Value::Object(
                means.maclaurin.iter().map(|(m, v)| (m.to_string(), json!(v))).collect()
            ),
        },
        "mahler": report::mahler(&m),
        "generalized_mahler": {
            "set": a.set.to_string(),
            "capacity": a.set.capacity(),
            "estimate": report::mahler(&gm),
        },
        "sector": {
            "gamma": a.gamma,
            "in_sector": inside,
            "straddling_root": straddling,
            "mean_bound": bound,
        },
    });
    Ok(envelope("analyze", &inputs, results, ctx))
}

pub fn chebyshev(a: &ChebyshevArgs, ctx: &Context) -> Rendered {
    let inputs = json!({ "n": a.n, "m": a.m, "R": a.r });
    let err = fail(&inputs);
    let rows = chebyshev_sweep(&a.n, &a.m, a.r).map_err(&err)?;
    let gap_names: Vec<String> = (1..=MOMENT_GAPS).map(|m| format!("gap_m{m}")).collect();
    if a.format == SweepFormat::Json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|row| {
                json!({
                    "n": row.n,
                    "symmetric": by_order(&row.symmetric),
                    "ks": row.weakstar.ks,
                    "ks_error": row.weakstar.ks_error,
                    "moment_gaps": row.weakstar.moment_gaps,
                    "mass_R": row.weakstar.windows[0].1,
                    "mahler_e": report::mahler(&row.mahler_e),
                    "energy": report::energy(&row.energy),
                })
            })
            .collect();
        return Ok(envelope("chebyshev", &inputs, json!({ "rows": rows }), ctx));
    }
    Ok(csv_text(|w| {
        let mut header = vec!["n".to_string()];
        if a.table == Table::Full {
            header.extend(a.m.iter().map(|m| format!("S_{m}")));
        }
        header.push("ks".into());
        if a.table == Table::Full {
            header.push("ks_error".into());
        }
        header.extend(gap_names.iter().cloned());
        header.push("mass_R".into());
        if a.table == Table::Full {
            header.extend(["mahler_e", "mahler_e_error", "energy", "energy_error"].map(String::from));
        }
        w.write_record(&header)?;
        for row in &rows {
            let mut rec = vec![row.n.to_string()];
            if a.table == Table::Full {
                for m in &a.m {
                    let s = row.symmetric.iter().find(|(k, _)| k == m);
                    rec.push(s.map(|(_, q)| q.to_string()).unwrap_or_default());
                }
            }
            rec.push(row.weakstar.ks.to_string());
            if a.table == Table::Full {
                rec.push(row.weakstar.ks_error.to_string());
            }
            rec.extend(row.weakstar.moment_gaps.iter().map(|g| g.to_string()));
            rec.push(row.weakstar.windows[0].1.to_string());
            if a.table == Table::Full {
                rec.push(row.mahler_e.value.to_string());
                rec.push(row.mahler_e.error.to_string());
                rec.push(row.energy.value.to_string());
                rec.push(row.energy.error.to_string());
            }
            w.write_record(&rec)?;
        }
        Ok(())
    }))
}

pub fn moments(a: &MomentsArgs, ctx: &Context) -> Rendered {
    let inputs = json!({ "set": a.set.to_string(), "m": a.m });
    let zero_four = matches!(a.set, CompactSetModel::Interval { a, b } if a == 0.0 && b == 4.0);
    let values: Vec<Value> = a
        .m
        .iter()
        .map(|&m| {
            let v = equilibrium_moment(&a.set, m);
            let mut row = json!({ "m": m, "re": v.re, "im": v.im });
            if zero_four {
                let exact = binomial(BigInt::from(2 * m), BigInt::from(m));
                row["exact"] = Value::String(exact.to_string());
                let rounding = if exact.bits() <= 53 { 0.0 } else { v.re * f64::EPSILON };
                row["error"] = json!(rounding);
            } else {
                // one rounding per term of a sum with at most m + 1 terms
                let scale = match a.set {
                    CompactSetModel::Disk { center, .. } => center.norm(),
                    CompactSetModel::Interval { a, b } => a.abs().max(b.abs()),
                };
                row["error"] = json!(4.0 * (m as f64 + 1.0) * f64::EPSILON * scale.powi(m as i32));
            }
            row
        })
        .collect();
    let results = json!({ "capacity": a.set.capacity(), "moments": values });
    Ok(envelope("moments", &inputs, results, ctx))
}

pub fn energy(a: &EnergyArgs, ctx: &Context) -> Rendered {
    let inputs = json!({ "poly": report::coeffs(&a.poly), "R": a.r });
    let err = fail(&inputs);
    let p = &a.poly;
    let roots = all_roots(p, default_root_eps(p.degree())).map_err(&err)?;
    let mu = CountingMeasure::from_roots(&roots).map_err(&err)?;
    let e = discrete_energy(&mu, a.r).map_err(&err)?;
    let s = energy_sandwich(&[(p.clone(), roots.clone())], a.r).map_err(&err)?;
    let results = json!({
        "polynomial": report::polynomial(p),
        "energy": report::energy(&e),
        "mass_R": mu.mass_in_disk(a.r).map_err(&err)?,
        "sandwich": {
            "h": s.h,
            "log_h": s.log_h,
            "tau_hat": s.tau_hat,
            "lower": s.lower,
            "upper": s.upper,
            "holds": s.holds,
        },
    });
    Ok(envelope("energy", &inputs, results, ctx))
}

pub fn escape(a: &EscapeArgs, ctx: &Context) -> Rendered {
    let inputs = json!({ "p": a.p, "R": a.r });
    let err = fail(&inputs);
    let rows = a
        .p
        .iter()
        .map(|&p| escape_row(p, a.r))
        .collect::<Result<Vec<_>, _>>()
        .map_err(&err)?;
    if a.format == SweepFormat::Json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "p": r.p,
                    "modulus": r.modulus,
                    "mass_R": r.mass_in_disk,
                    "mahler": report::mahler(&r.mahler),
                    "height": r.height,
                })
            })
            .collect();
        return Ok(envelope("escape", &inputs, json!({ "rows": rows }), ctx));
    }
    Ok(csv_text(|w| {
        w.write_record(["p", "modulus", "mass_R", "mahler", "mahler_error", "height"])?;
        for r in &rows {
            w.write_record([
                r.p.to_string(),
                r.modulus.to_string(),
                r.mass_in_disk.to_string(),
                r.mahler.value.to_string(),
                r.mahler.error.to_string(),
                r.height.to_string(),
            ])?;
        }
        Ok(())
    }))
}

fn record_json(r: &ExtremalRecord) -> Value {
    json!({
        "polynomial": report::coeffs(&r.polynomial),
        "pretty": r.polynomial.to_pretty(),
        "degree": r.degree,
        "trace": r.trace,
        "symmetric": by_order(&r.symmetric),
        "certified": r.certified,
        "discriminant": r.discriminant.to_string(),
        "has_rational_root": r.has_rational_root,
    })
}

pub fn search(a: &SearchArgs, ctx: &Context) -> Rendered {
    let inputs = json!({
        "degree": a.degree,
        "trace_max": a.trace_max,
        "m": a.m,
        "exclude_rational_roots": a.exclude_rational_roots,
    });
    let err = fail(&inputs);
    let mut ms = vec![1];
    ms.extend(a.m.iter().copied().filter(|&m| m != 1));
    let opts = SearchOptions { ms, exclude_rational_roots: a.exclude_rational_roots };
    let records = enumerate_totally_positive(a.degree, a.trace_max, &opts).map_err(&err)?;
    match a.format {
        SearchFormat::Jsonl => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&record_json(r).to_string());
                out.push('\n');
            }
            Ok(out)
        }
        SearchFormat::Csv => Ok(csv_text(|w| {
            let mut header = vec!["degree".to_string(), "trace".into(), "coeffs".into()];
            header.extend(opts.ms.iter().map(|m| format!("S_{m}")));
            header.extend(["discriminant", "has_rational_root", "certified"].map(String::from));
            w.write_record(&header)?;
            for r in &records {
                let mut rec = vec![r.degree.to_string(), r.trace.to_string(), report::coeffs(&r.polynomial)];
                for m in &opts.ms {
                    rec.push(r.symmetric_mean(*m).map(|q| q.to_string()).unwrap_or_default());
                }
                rec.push(r.discriminant.to_string());
                rec.push(r.has_rational_root.to_string());
                rec.push(r.certified.to_string());
                w.write_record(&rec)?;
            }
            Ok(())
        })),
        SearchFormat::Json => {
            let mut minimal = Vec::new();
            for &m in &a.m {
                let best = minimal_symmetric_mean(a.degree, m, a.trace_max, &opts).map_err(&err)?;
                minimal.push(json!({
                    "m": m,
                    "value": rational(&best.value),
                    "floor_attained": best.floor_attained,
                    "candidates": best.candidates,
                    "record": record_json(&best.record),
                }));
            }
            let results = json!({
                "count": records.len(),
                "records": records.iter().map(record_json).collect::<Vec<_>>(),
                "minimal": minimal,
            });
            Ok(envelope("search", &inputs, results, ctx))
        }
    }
}

#[derive(Deserialize)]
struct AtomIn {
    re: f64,
    im: f64,
    w: f64,
}

pub fn discretize(a: &DiscretizeArgs, ctx: &Context) -> Rendered {
    let inputs = json!({ "atoms": a.atoms.display().to_string(), "L": a.l });
    let input_err = |msg: String| Failure { inputs: inputs.clone(), error: Cause::Input(msg) };
    let text = std::fs::read_to_string(&a.atoms)
        .map_err(|e| input_err(format!("cannot read {}: {e}", a.atoms.display())))?;
    let parsed: Vec<AtomIn> = serde_json::from_str(&text)
        .map_err(|e| input_err(format!("malformed atoms file: {e}")))?;
    let atoms: Vec<(Complex64, f64)> = parsed.iter().map(|t| (Complex64::new(t.re, t.im), t.w)).collect();
    let d = discretize_measure(&atoms, a.l).map_err(fail(&inputs))?;
    let placed: usize = d.counts.iter().sum();
    let points: Vec<Value> = d
        .measure
        .atoms()
        .iter()
        .map(|t| json!({ "re": t.z.re, "im": t.z.im }))
        .collect();
    let results = json!({
        "point_mass": Ratio::new(1, a.l).to_string(),
        "total_mass": Ratio::new(placed, a.l).to_string(),
        "counts": d.counts,
        "radii": d.radii,
        "displacement_bound": d.displacement_bound,
        "points": points,
    });
    Ok(envelope("discretize", &inputs, results, ctx))
}

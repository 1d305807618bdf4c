use num_complex::Complex64 as Complex;
use rayon::prelude::*;
use so21_core::group::{boost02, rotation, GroupElement, Mat3, Vec3};
use so21_core::iso21::{
    default_tol, induced_action, measure_density, orbit_classify, wigner_rotation, IsoElement, IsoIrrepLabel,
    LittleKind, Momentum, OrbitChart, OrbitClass,
};
use so21_core::numerics::Config;
use so21_core::rep::{assoc_integral, assoc_with, fourier_lambda, fourier_reconstruct, matrix_element, phi_m, zonal_with};
use so21_core::verify::{find_criterion, run_criterion, CRITERIA};
use so21_core::wigner3::{
    covariance_residual_with, wigner_coefficient_3h3_with, wigner_coefficient_with, wigner_oracle, WignerQuery,
};
use so21_core::Error;

use crate::output::{Computed, Failure, Field, Record};
use crate::{AssocPath, Cmd, GroupArgs, Method, OrbitKind};

type Inputs = Vec<(&'static str, Field)>;

fn lib<T: Into<Computed>>(r: Result<T, Error>) -> Result<Computed, Failure> {
    r.map(Into::into).map_err(Failure::Lib)
}

// Points are evaluated in parallel; collect() keeps input order.
fn eval<P, F>(points: Vec<P>, f: F) -> Vec<Record>
where
    P: Send + Sync,
    F: Fn(&P) -> Record + Send + Sync,
{
    points.par_iter().map(f).collect()
}

fn group_element(g: &GroupArgs) -> Result<GroupElement, String> {
    match g.matrix {
        Some(m) => GroupElement::from_matrix(Mat3::from_row_slice(&m)).map_err(|e| format!("--matrix: {e}")),
        None => Ok(rotation(g.phi1) * boost02(g.alpha) * rotation(g.phi2)),
    }
}

fn group_inputs(g: &GroupArgs) -> Inputs {
    match g.matrix {
        Some(m) => vec![("matrix", Field::Text(m.iter().map(|x| format!("{x:.16e}")).collect::<Vec<_>>().join(",")))],
        None => vec![("phi1", Field::Real(g.phi1)), ("alpha", Field::Real(g.alpha)), ("phi2", Field::Real(g.phi2))],
    }
}

fn triple_inputs(sigmas: &[Complex; 3], ms: &[i64; 3]) -> Inputs {
    vec![
        ("sigma1", Field::complex(sigmas[0])),
        ("sigma2", Field::complex(sigmas[1])),
        ("sigma3", Field::complex(sigmas[2])),
        ("m1", Field::Int(ms[0])),
        ("m2", Field::Int(ms[1])),
        ("m3", Field::Int(ms[2])),
    ]
}

fn p_inputs(p: &[f64; 3]) -> Inputs {
    vec![("p0", Field::Real(p[0])), ("p1", Field::Real(p[1])), ("p2", Field::Real(p[2]))]
}

fn cartesian<A: Clone, B: Clone>(a: &[A], b: &[B]) -> Vec<(A, B)> {
    a.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

fn parse_label(s: &str) -> Result<IsoIrrepLabel, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |x: &str| x.parse::<f64>().map_err(|_| format!("--label: cannot parse '{x}'"));
    match parts.as_slice() {
        ["mass", m, spin] => Ok(IsoIrrepLabel::MassSpin {
            m: num(m)?,
            s: spin.parse().map_err(|_| format!("--label: spin '{spin}' must be an integer"))?,
        }),
        ["tachyonic", m, spin] => Ok(IsoIrrepLabel::TachyonicSpin { m: num(m)?, s: num(spin)? }),
        ["helicity", l] => Ok(IsoIrrepLabel::Helicity { lambda: num(l)? }),
        ["boundary", sigma] => Ok(IsoIrrepLabel::BoundaryRep { sigma: crate::parse::parse_complex(sigma)? }),
        _ => Err(format!("--label '{s}': expected mass:M:S, tachyonic:M:S, helicity:L or boundary:SIGMA")),
    }
}

fn class_name(c: OrbitClass) -> &'static str {
    match c {
        OrbitClass::MassiveUpper => "massive_upper",
        OrbitClass::MassiveLower => "massive_lower",
        OrbitClass::Tachyonic => "tachyonic",
        OrbitClass::LightlikeUpper => "lightlike_upper",
        OrbitClass::Origin => "origin",
    }
}

fn kind_name(k: &LittleKind) -> &'static str {
    match k {
        LittleKind::Rotation(_) => "rotation",
        LittleKind::Boost01(_) => "boost01",
        LittleKind::HoroZ(_) => "horo_z",
    }
}

pub fn run(cmd: Cmd, cfg: &Config, seed: u64) -> Result<Vec<Record>, String> {
    let records = match cmd {
        Cmd::Zonal { sigma, alpha } => eval(cartesian(&sigma.0, &alpha.0), |&(s, a)| {
            Record::new(vec![("sigma", Field::complex(s)), ("alpha", Field::Real(a))], lib(zonal_with(s, a, cfg)))
        }),
        Cmd::Assoc { sigma, m, alpha, path } => {
            let pts: Vec<_> = cartesian(&cartesian(&sigma.0, &m.0), &alpha.0);
            eval(pts, |&((s, m), a)| {
                let inputs = vec![
                    ("sigma", Field::complex(s)),
                    ("m", Field::Int(m)),
                    ("alpha", Field::Real(a)),
                    ("path", Field::Text(format!("{path:?}").to_lowercase())),
                ];
                let out = match path {
                    AssocPath::Closed => lib(assoc_with(s, m, a, cfg)),
                    AssocPath::Integral if !a.is_finite() => Err(Failure::Lib(Error::Domain(format!("alpha = {a}")))),
                    AssocPath::Integral => Ok(Computed {
                        value: assoc_integral(s, m, a, cfg.quad_points.max(1)),
                        err_estimate: f64::NAN,
                        terms_used: cfg.quad_points,
                    }),
                };
                Record::new(inputs, out)
            })
        }
        Cmd::MatrixElement { sigma, m_out, m_in, group } => {
            let g = group_element(&group)?;
            let gi = group_inputs(&group);
            let pts = cartesian(&cartesian(&sigma.0, &m_out.0), &m_in.0);
            eval(pts, |&((s, mo), mi)| {
                let mut inputs = vec![("sigma", Field::complex(s)), ("m_out", Field::Int(mo)), ("m_in", Field::Int(mi))];
                inputs.extend(gi.iter().cloned());
                Record::new(inputs, lib(matrix_element(s, mo, mi, &g).map(Computed::exact)))
            })
        }
        Cmd::FourierLambda { lambda, m, psi } => match (m, psi) {
            (_, Some(psi)) => eval(cartesian(&lambda.0, &psi.0), |&(l, p)| {
                Record::new(vec![("lambda", Field::complex(l)), ("psi", Field::Real(p))], lib(fourier_reconstruct(l, p)))
            }),
            (Some(m), None) => eval(cartesian(&lambda.0, &m.0), |&(l, m)| {
                Record::new(
                    vec![("lambda", Field::complex(l)), ("m", Field::Int(m))],
                    lib(fourier_lambda(l, m).map(Computed::exact)),
                )
            }),
            (None, None) => return Err("fourier-lambda needs --m or --psi-grid".into()),
        },
        Cmd::PhiM { sigma, m } => eval(cartesian(&sigma.0, &m.0), |&(s, m)| {
            Record::new(vec![("sigma", Field::complex(s)), ("m", Field::Int(m))], lib(phi_m(s, m).map(Computed::exact)))
        }),
        Cmd::Wigner3 { sigmas, ms, method } => eval(ms, |ms| {
            let q = WignerQuery::new(sigmas, *ms);
            let mut inputs = triple_inputs(&sigmas, ms);
            inputs.push(("method", Field::Text(if method == Method::Series { "series" } else { "3h3" }.into())));
            let out = match method {
                Method::Series => lib(wigner_coefficient_with(&q, cfg)),
                Method::H33 => lib(wigner_coefficient_3h3_with(&q, cfg)),
            };
            Record::new(inputs, out)
        }),
        Cmd::Wigner3Oracle { sigmas, ms, points } => {
            let n = points.unwrap_or(cfg.quad_points);
            if n == 0 {
                return Err("--points must be positive".into());
            }
            // the oracle parallelizes internally
            ms.iter()
                .map(|ms| {
                    let mut inputs = triple_inputs(&sigmas, ms);
                    inputs.push(("points", Field::Int(n as i64)));
                    let out = wigner_oracle(&WignerQuery::new(sigmas, *ms), n)
                        .map(|v| Computed { value: v, err_estimate: f64::NAN, terms_used: n * n });
                    Record::new(inputs, lib(out))
                })
                .collect()
        }
        Cmd::CovarianceCheck { sigmas, ms, truncation, group } => {
            let g = group_element(&group)?;
            let q = WignerQuery::new(sigmas, ms);
            truncation
                .0
                .iter()
                .map(|&big_m| {
                    let mut inputs = triple_inputs(&sigmas, &ms);
                    inputs.extend(group_inputs(&group));
                    inputs.push(("truncation", Field::Int(big_m)));
                    Record::new(inputs, lib(covariance_residual_with(&q, &g, big_m, cfg).map(Computed::real)))
                })
                .collect()
        }
        Cmd::Orbit { p, orbit_tol } => eval(p, |p| {
            let v = Vec3::from(p.0);
            let tol = orbit_tol.unwrap_or_else(|| default_tol(&v));
            let m = Momentum::new(v);
            let class = orbit_classify(&v, tol);
            // the class is reported even when the point lies outside its chart
            let coords = class.clone().and_then(|class| match class {
                OrbitClass::MassiveLower | OrbitClass::Origin => Ok(None),
                _ => OrbitChart::for_momentum(&m)?.chart_inverse(&v).map(Some),
            });
            let class_field = class.map_or(Field::Null, |c| Field::Text(class_name(c).into()));
            let (x, y, out) = match coords {
                Ok(Some((x, y))) => (Field::Real(x), Field::Real(y), Ok(Computed::real(m.msq))),
                Ok(None) => (Field::Null, Field::Null, Ok(Computed::real(m.msq))),
                Err(e) => (Field::Null, Field::Null, Err(e.into())),
            };
            Record::new(p_inputs(&p.0), out).with_extras(vec![("class", class_field), ("chart_x", x), ("chart_y", y)])
        }),
        Cmd::WignerRotation { p, group } => {
            let r = group_element(&group)?;
            let gi = group_inputs(&group);
            eval(p, |p| {
                let mut inputs = p_inputs(&p.0);
                inputs.extend(gi.iter().cloned());
                match wigner_rotation(&Momentum::new(Vec3::from(p.0)), &r) {
                    Ok(w) => Record::new(inputs, Ok(Computed::real(w.kind.parameter())))
                        .with_extras(vec![("kind", Field::Text(kind_name(&w.kind).into()))]),
                    Err(e) => Record::new(inputs, Err(e.into())).with_extras(vec![("kind", Field::Null)]),
                }
            })
        }
        Cmd::InducedAction { label, p, a, group } => {
            let lab = parse_label(&label)?;
            let g = IsoElement::new(Vec3::from(a.0), group_element(&group)?);
            let gi = group_inputs(&group);
            eval(p, |p| {
                let mut inputs = vec![("label", Field::Text(label.clone()))];
                inputs.extend(p_inputs(&p.0));
                inputs.extend([("a0", Field::Real(a.0[0])), ("a1", Field::Real(a.0[1])), ("a2", Field::Real(a.0[2]))]);
                inputs.extend(gi.iter().cloned());
                match induced_action(&lab, &g, &Momentum::new(Vec3::from(p.0))) {
                    Ok((mult, q)) => Record::new(inputs, Ok(Computed::exact(mult))).with_extras(vec![
                        ("q0", Field::Real(q.p[0])),
                        ("q1", Field::Real(q.p[1])),
                        ("q2", Field::Real(q.p[2])),
                    ]),
                    Err(e) => Record::new(inputs, Err(e.into())).with_extras(vec![
                        ("q0", Field::Null),
                        ("q1", Field::Null),
                        ("q2", Field::Null),
                    ]),
                }
            })
        }
        Cmd::Measure { class, x, y } => {
            let (c, name) = match class {
                OrbitKind::Massive => (OrbitClass::MassiveUpper, "massive"),
                OrbitKind::Tachyonic => (OrbitClass::Tachyonic, "tachyonic"),
                OrbitKind::Lightlike => (OrbitClass::LightlikeUpper, "lightlike"),
            };
            eval(cartesian(&x.0, &y.0), |&(x, y)| {
                Record::new(
                    vec![("class", Field::Text(name.into())), ("x", Field::Real(x)), ("y", Field::Real(y))],
                    lib(measure_density(c, (x, y)).map(Computed::real)),
                )
            })
        }
        Cmd::Verify { suite } => {
            let ids: Vec<u8> = if suite == "all" {
                CRITERIA.iter().map(|(id, _)| *id).collect()
            } else {
                vec![find_criterion(&suite).ok_or_else(|| format!("unknown suite '{suite}'"))?]
            };
            ids.into_iter()
                .map(|id| {
                    let rep = run_criterion(id, seed);
                    eprintln!("[{}] criterion {:2} {:<15} {}", if rep.passed { "PASS" } else { "FAIL" }, rep.id, rep.name, rep.detail);
                    let inputs = vec![("criterion", Field::Int(rep.id as i64)), ("name", Field::Text(rep.name.into()))];
                    let out = if rep.passed { Ok(Computed::real(1.0)) } else { Err(Failure::Failed(rep.detail.clone())) };
                    Record::new(inputs, out).with_extras(vec![("detail", Field::Text(rep.detail))])
                })
                .collect()
        }
    };
    Ok(records)
}

use rslab_core::charclass::{product_rs_index, verify_dimension_identities};
use rslab_core::ci::{
    build_ci, ci_invariants, ci_rs_kernel, fermat_signature, hodge_numbers, kahler_einstein, CiManifold, CiSpec,
};
use rslab_core::holonomy::{
    describe_by_dimension, family_index, g2_derived_formulas, hyperkahler_closed_forms, hyperkahler_derived_formulas,
    kernel_dimension, product_parallel_rs, qk_kernel_analysis, sigma_three_half, sphere_check, spin7_derived_formulas,
    spin7_index_identity, symmetric_space_catalog, HolonomyGroup, HolonomyModel, ParallelCounts, Spinors,
    TopologicalInput,
};
use rslab_core::lie::{
    check_tensor_moments, dominant_multiplicities, generic_point, tensor_decompose, RepSum, RootSystem, Weight,
};
use rslab_core::Error;
use serde_json::{json, Value};

use crate::cli::{CiArgs, HolonomyArgs, IndexArgs, Method, ParallelArgs, RepCommand, SphereArgs};
use crate::envelope::q;
use crate::CliError;

/// Results and citations; the caller wraps them with the command echo.
pub struct Output {
    pub inputs: Value,
    pub results: Value,
    pub citations: Vec<String>,
}

fn cite(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

pub fn ci(a: &CiArgs) -> Result<Output, CliError> {
    let spec = CiSpec::new(a.n, &a.degrees)?;
    let m = build_ci(spec.clone())?;
    let inv = ci_invariants(&m);
    let mut citations = cite(&[
        "Chern classes from c(TX) = (1+h)^(n+r+1) / prod(1 + d_j h), h^n[X] = prod d_j",
        "ind Q = <A-hat(X) (ch(T_C X) + 1), [X]>",
    ]);
    let mut invariants = json!({
        "euler": q(&inv.euler),
        "ahat": q(&inv.ahat),
        "ind_d": q(&inv.ind_d),
        "ind_d_tm": q(&inv.ind_d_tm),
        "ind_q": q(&inv.ind_q),
    });
    let chern = inv.signature.clone();
    let series = match a.method {
        Method::Chern => None,
        Method::Series | Method::Both => {
            if spec.degrees.len() != 1 {
                return Err(CliError::Usage("--method series needs a hypersurface (one degree)".into()));
            }
            if a.n % 2 == 1 {
                return Err(CliError::Usage("signature needs even complex dimension".into()));
            }
            citations.push(
                "signature of X_m(d) from the generating function [(1+z)^d - (1-z)^d] / [(1-z^2)((1+z)^d + (1-z)^d)]"
                    .into(),
            );
            Some(fermat_signature(a.n, spec.degrees[0])?)
        }
    };
    if a.method == Method::Both && chern != series {
        return Err(CliError::Failure(format!(
            "{spec}: L-genus signature {} but series signature {}",
            chern.as_ref().map_or("none".into(), ToString::to_string),
            series.as_ref().map_or("none".into(), ToString::to_string)
        )));
    }
    let signature = if a.method == Method::Series { series.clone() } else { chern.clone() };
    invariants["signature"] = signature.as_ref().map_or(Value::Null, q);
    if a.method == Method::Both {
        invariants["signature_series"] = series.as_ref().map_or(Value::Null, q);
        invariants["signature_methods_agree"] = json!(true);
    }
    let hodge = hodge_numbers(&m)?;
    let mut results = json!({
        "manifold": spec.to_string(),
        "classification": classification(&m),
        "invariants": invariants,
        "hodge": hodge.entries,
        "betti": (0..=2 * a.n).map(|k| hodge.betti(k)).collect::<Vec<_>>(),
    });
    if a.kernel {
        let k = ci_rs_kernel(&m)?;
        results["kernel"] = json!({
            "case": k.case.as_str(),
            "dim_ker_q": k.dim_ker_q,
            "ind_q": q(&k.ind_q),
            "ind_d": q(&k.ind_d),
            "kernel_lower_bound": k.kernel_lower_bound.as_ref().map_or(Value::Null, q),
            "nontrivial_on_image_of_p": k.nontrivial_on_image_of_p,
            "ind_q_differs_from_ind_d": k.ind_q_differs_from_ind_d,
            "note": k.note,
        });
        citations.push("Calabi-Yau kernel: dim ker Q = -2 + 2 sum_p h^(1,p)".into());
    }
    if a.identities {
        results["identities"] = identities(2 * a.n)?;
        citations.push("coefficient identities solved on the Pontryagin-number basis".into());
    }
    let inputs = json!({"n": a.n, "degrees": a.degrees, "method": a.method.as_str(), "kernel": a.kernel, "identities": a.identities});
    Ok(Output { inputs, results, citations })
}

fn classification(m: &CiManifold) -> Value {
    json!({
        "complex_dimension": m.spec.n,
        "codimension": m.spec.codimension(),
        "total_degree": m.total_degree,
        "spin": m.spin,
        "c1": m.c1_sign.as_str(),
        "c1_coefficient": m.c1_coefficient(),
        "kahler_einstein": kahler_einstein(m).as_str(),
    })
}

fn identities(real_dimension: u32) -> Result<Value, CliError> {
    let ids = verify_dimension_identities(real_dimension)?;
    let relations: Vec<Value> = ids
        .relations
        .iter()
        .map(|r| {
            json!({
                "target": r.target,
                "terms": r.terms,
                "expected": r.expected.iter().map(q).collect::<Vec<_>>(),
                "solution": r.unique_solution().map(|s| s.iter().map(q).collect::<Vec<_>>()),
                "holds": r.holds(),
            })
        })
        .collect();
    if !ids.all_hold() {
        let bad: Vec<String> = ids.relations.iter().filter(|r| !r.holds()).map(|r| r.target.clone()).collect();
        return Err(CliError::Failure(format!(
            "coefficient identities fail in dimension {real_dimension}: {}",
            bad.join(", ")
        )));
    }
    Ok(json!({"real_dimension": real_dimension, "relations": relations}))
}

fn summary(rs: &RootSystem, s: &RepSum) -> Result<Value, CliError> {
    let summands: Vec<Value> = s
        .sorted_by_dimension(rs)?
        .into_iter()
        .map(|(w, m, d)| json!({"weight": w.to_string(), "multiplicity": m, "dimension": d}))
        .collect();
    Ok(json!({
        "description": describe_by_dimension(rs, s)?,
        "dimension": s.dimension(rs)?,
        "summands": summands,
    }))
}

fn topological_input(g: HolonomyGroup, a: &HolonomyArgs) -> Result<Option<TopologicalInput>, CliError> {
    let any = a.h1p.is_some() || a.hk1.is_some() || a.b2.is_some() || a.b3.is_some() || a.b4_minus.is_some();
    if !any {
        return Ok(None);
    }
    let need = |x: Option<i64>, name: &str| x.ok_or_else(|| CliError::Usage(format!("{g} needs --{name}")));
    let t = match g {
        HolonomyGroup::SU(n) => TopologicalInput::CalabiYau {
            n,
            h1p: a.h1p.clone().ok_or_else(|| CliError::Usage("SU(n) needs --h1p".into()))?,
        },
        HolonomyGroup::Sp(n) => TopologicalInput::HyperKahler {
            n,
            hk1: a.hk1.clone().ok_or_else(|| CliError::Usage("Sp(n) needs --hk1".into()))?,
        },
        HolonomyGroup::Spin7 => TopologicalInput::Spin7 {
            b2: need(a.b2, "b2")?,
            b3: need(a.b3, "b3")?,
            b4_minus: need(a.b4_minus, "b4minus")?,
        },
        HolonomyGroup::G2 => TopologicalInput::G2 { b2: need(a.b2, "b2")?, b3: need(a.b3, "b3")? },
        HolonomyGroup::SpSp(2) => TopologicalInput::QuaternionKahler { b2: need(a.b2, "b2")? },
        _ => return Err(CliError::Usage(format!("no kernel formula from topological data for {g}"))),
    };
    Ok(Some(t))
}

pub fn holonomy(a: &HolonomyArgs) -> Result<Output, CliError> {
    if a.group.eq_ignore_ascii_case("catalog") {
        return catalog();
    }
    let tag = match a.rank {
        Some(r) => format!("{}:{r}", a.group),
        None => a.group.clone(),
    };
    let g: HolonomyGroup = tag.parse()?;
    let model = HolonomyModel::new(g)?;
    let rs = &model.root_system;
    let s = sigma_three_half(&model)?;
    let mut citations = cite(&["Σ_3/2 = Σ_1/2 ⊗ T ⊖ Σ_1/2, decomposed by Klimyk's formula"]);
    let sigma_half = match &model.sigma_half {
        Spinors::Graded { plus, minus } => json!({"plus": summary(rs, plus)?, "minus": summary(rs, minus)?}),
        Spinors::Ungraded(t) => json!({"total": summary(rs, t)?}),
    };
    let mut three_half = json!({"total": summary(rs, &s.total)?});
    if let (Some(p), Some(m)) = (&s.plus, &s.minus) {
        three_half["plus"] = summary(rs, p)?;
        three_half["minus"] = summary(rs, m)?;
    }
    let mut results = json!({
        "group": g.to_string(),
        "real_dimension": model.real_dimension(),
        "root_system": rs.describe(),
        "sigma_half": sigma_half,
        "tangent": summary(rs, &model.tangent)?,
        "sigma_three_half": three_half,
        "parallel_rs": s.total.trivial_multiplicity(),
    });
    match g {
        HolonomyGroup::Spin7 => {
            let derived = spin7_derived_formulas()?;
            let id = spin7_index_identity()?;
            if !id.holds() {
                return Err(CliError::Failure("Spin(7) index identity fails".into()));
            }
            results["formulas"] = json!({
                "kernel": derived.kernel.to_string(),
                "index": derived.index.map(|f| f.to_string()),
                "index_identity": {
                    "ahat": id.ahat.to_string(),
                    "residual_vs_25ahat_minus_sigma": id.residual_signature.to_string(),
                    "residual_vs_9ahat_minus_chi_over_3": id.residual_euler.to_string(),
                    "holds_when_ahat_is_1": true,
                },
            });
            citations.push("refined Betti numbers b2 = b^2_21, b3 = b^3_48, b4- = b^4_35".into());
        }
        HolonomyGroup::G2 => {
            let derived = g2_derived_formulas()?;
            results["formulas"] = json!({"kernel": derived.kernel.to_string()});
            citations.push("refined Betti numbers b2 = b^2_14, b3 - 1 = b^3_27".into());
        }
        HolonomyGroup::Sp(n) => {
            let derived = hyperkahler_derived_formulas(n)?;
            let (kernel, index) = hyperkahler_closed_forms(n);
            let agree = derived.kernel == kernel && derived.index.as_ref() == Some(&index);
            if !agree {
                return Err(CliError::Failure(format!("Sp({n}): derived formulas disagree with the closed forms")));
            }
            results["formulas"] =
                json!({"kernel": kernel.to_string(), "index": index.to_string(), "derived_from_decomposition": true});
            citations.push("refined Hodge numbers h(Λ^{k,1}_0 E) = h^{k,1} - h^{k-2,1}".into());
        }
        HolonomyGroup::SpSp(m) if m >= 2 => {
            let r = qk_kernel_analysis(m)?;
            let entry = |e: &rslab_core::holonomy::QkEntry| {
                json!({"d": e.summand.d, "a": e.summand.a, "b": e.summand.b, "label": e.summand.to_string(),
                       "multiplicity": e.multiplicity, "dimension": e.dimension, "bound": q(&e.bound)})
            };
            results["quaternion_kahler"] = json!({
                "threshold_allows_kernel": r.threshold_allows_kernel,
                "zero_bound": r.zero_bound.iter().map(entry).collect::<Vec<_>>(),
                "kernel_summands": r.kernel_summands.iter().map(entry).collect::<Vec<_>>(),
                "kernel_formula": r.kernel_formula,
                "all_globally_defined": r.all_globally_defined,
            });
            citations.push("Laplacian bound (d+a-b)(d-a-b+2m+2)/(8m(m+2)) · scal".into());
        }
        _ => {}
    }
    if let Some(t) = topological_input(g, a)? {
        let index = match family_index(&t) {
            Ok(i) => json!(i),
            Err(Error::NotApplicable(msg)) => json!(format!("not applicable: {msg}")),
            Err(e) => return Err(e.into()),
        };
        results["topological"] =
            json!({"family": t.family(), "kernel_dimension": kernel_dimension(&t)?, "index": index});
    }
    let inputs = json!({
        "group": a.group, "rank": a.rank, "h1p": a.h1p, "hk1": a.hk1, "b2": a.b2, "b3": a.b3, "b4minus": a.b4_minus,
    });
    Ok(Output { inputs, results, citations })
}

fn catalog() -> Result<Output, CliError> {
    let entries: Vec<Value> = symmetric_space_catalog()?
        .into_iter()
        .map(|e| {
            json!({"name": e.name, "real_dimension": e.real_dimension, "kernel_dimension": e.kernel_dimension,
                   "all_parallel": e.all_parallel, "source": e.source})
        })
        .collect();
    let citations = entries
        .iter()
        .map(|e| format!("{}: {}", e["name"].as_str().unwrap_or(""), e["source"].as_str().unwrap_or("")))
        .collect();
    Ok(Output { inputs: json!({"group": "catalog"}), results: json!({"spaces": entries}), citations })
}

fn parse_weight(s: &str) -> Result<Weight, CliError> {
    let labels: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    labels
        .map(Weight::new)
        .map_err(|_| CliError::Usage(format!("cannot parse weight {s:?}; expected comma-separated integers")))
}

pub fn rep(c: &RepCommand) -> Result<Output, CliError> {
    let (algebra, inputs) = match c {
        RepCommand::Dim(w) | RepCommand::Casimir(w) | RepCommand::Weights(w) => {
            (&w.algebra, json!({"algebra": w.algebra, "weight": w.weight}))
        }
        RepCommand::Tensor(t) => (&t.algebra, json!({"algebra": t.algebra, "lambda": t.lambda, "mu": t.mu})),
    };
    let rs = RootSystem::parse(algebra)?;
    let dominant = |s: &str| -> Result<Weight, CliError> {
        let w = parse_weight(s)?;
        rs.require_dominant(&w)?;
        Ok(w)
    };
    let euclid = |w: &Weight| rs.euclidean(w).iter().map(q).collect::<Vec<_>>();
    let (results, citations) = match c {
        RepCommand::Dim(a) => {
            let w = dominant(&a.weight)?;
            (
                json!({"root_system": rs.describe(), "weight": w.to_string(), "euclidean": euclid(&w), "dimension": rs.weyl_dim(&w)?}),
                cite(&["Weyl dimension formula"]),
            )
        }
        RepCommand::Casimir(a) => {
            let w = dominant(&a.weight)?;
            (
                json!({"root_system": rs.describe(), "weight": w.to_string(), "euclidean": euclid(&w),
                    "dimension": rs.weyl_dim(&w)?, "casimir": q(&rs.casimir(&w)?)}),
                cite(&["Casimir eigenvalue <λ+2δ, λ> in the standard Euclidean normalisation"]),
            )
        }
        RepCommand::Weights(a) => {
            let w = dominant(&a.weight)?;
            let weights: Vec<Value> = dominant_multiplicities(&rs, &w)?
                .into_iter()
                .map(|(mu, m)| json!({"weight": mu.to_string(), "multiplicity": m}))
                .collect();
            (
                json!({"root_system": rs.describe(), "weight": w.to_string(), "dimension": rs.weyl_dim(&w)?, "dominant_weights": weights}),
                cite(&["Freudenthal multiplicity recursion"]),
            )
        }
        RepCommand::Tensor(t) => {
            let (l, m) = (dominant(&t.lambda)?, dominant(&t.mu)?);
            let s = tensor_decompose(&rs, &l, &m)?;
            check_tensor_moments(&rs, &l, &m, &s, &generic_point(rs.rank()))?;
            (
                json!({"root_system": rs.describe(), "decomposition": summary(&rs, &s)?, "moment_check": "pass"}),
                cite(&["Klimyk's formula", "character moments up to order 4 at a generic torus point"]),
            )
        }
    };
    Ok(Output { inputs, results, citations })
}

pub fn sphere(a: &SphereArgs) -> Result<Output, CliError> {
    let hi = a.to.unwrap_or(a.n);
    if hi < a.n {
        return Err(CliError::Usage("--to must be at least n".into()));
    }
    let mut rows = Vec::new();
    for n in a.n..=hi {
        let c = sphere_check(n)?;
        rows.push(json!({"n": c.n, "realization": c.realization, "casimir": q(&c.casimir),
                         "threshold": q(&c.threshold), "margin": q(&c.margin)}));
    }
    Ok(Output {
        inputs: json!({"n": a.n, "to": a.to}),
        results: json!({"spheres": rows, "all_positive": true}),
        citations: cite(&[
            "q(R) acts on Σ_3/2 of S^n as the Casimir of λ = (3/2, 1/2, ..., 1/2), expected n(n+7)/8",
            "Q^2 = Δ + (n-8)/(8n) scal with scal = n(n-1)",
        ]),
    })
}

fn counts(v: &[i64], dim: Option<u32>, side: &str) -> Result<ParallelCounts, CliError> {
    match v {
        [s, r] => Ok(ParallelCounts { spinors: *s, rs: *r, dimension: dim }),
        _ => Err(CliError::Usage(format!("--{side} takes two numbers: parallel spinors, parallel spin-3/2 fields"))),
    }
}

pub fn product_parallel(a: &ParallelArgs) -> Result<Output, CliError> {
    let l = counts(&a.left, a.left_dim, "left")?;
    let r = counts(&a.right, a.right_dim, "right")?;
    let p = product_parallel_rs(&l, &r)?;
    Ok(Output {
        inputs: json!({"left": a.left, "right": a.right, "left_dim": a.left_dim, "right_dim": a.right_dim}),
        results: json!({"parallel_rs": p.value, "caveat": p.caveat}),
        citations: cite(&["S_3/2 of M×N contains S_M ⊗ S_N, S^3/2_M ⊗ S_N and S_M ⊗ S^3/2_N as parallel subbundles"]),
    })
}

fn parse_ci(s: &str) -> Result<CiSpec, CliError> {
    let bad = || CliError::Usage(format!("cannot parse complete intersection {s:?}; expected n:d1,d2,..."));
    let (n, ds) = s.split_once(':').ok_or_else(bad)?;
    let n: u32 = n.trim().parse().map_err(|_| bad())?;
    let ds: Result<Vec<u32>, _> = ds.split(',').map(|d| d.trim().parse::<u32>()).collect();
    Ok(CiSpec::new(n, &ds.map_err(|_| bad())?)?)
}

pub fn product_index(a: &IndexArgs) -> Result<Output, CliError> {
    let (l, r) = (build_ci(parse_ci(&a.left)?)?, build_ci(parse_ci(&a.right)?)?);
    let p = product_rs_index(&l.profile, &r.profile)?;
    Ok(Output {
        inputs: json!({"left": a.left, "right": a.right}),
        results: json!({
            "left": l.spec.to_string(),
            "right": r.spec.to_string(),
            "combination": q(&p.combination),
            "direct": q(&p.direct),
            "agree": p.combination == p.direct,
        }),
        citations: cite(&[
            "ind Q(M×N) = ind Q(M) ind D(N) - ind D(M) ind D(N) + ind D(M) ind Q(N)",
            "direct evaluation on the product Chern profile",
        ]),
    })
}

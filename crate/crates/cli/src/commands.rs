use std::fmt;
use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use pentagon::algebra::{exact_factorizations, Factorization, SelfMap, Subgroup};
use pentagon::constructions::{
    baaj_skandalis, constant_solution, endo_solution, kac_takesaki_s, kac_takesaki_t, militaru,
    sign_solution, zakrzewski,
};
use pentagon::enumeration::{
    classify, count_by_formula, enumerate_by_theorem, enumerate_on_group_within,
    enumerate_raw_within, EnumerationReport, FIXED_DOT_BUDGET, RAW_BUDGET, THETA_BUDGET,
};
use pentagon::format::{coset_datum_to_string, pairmap_to_string, report_to_json, report_to_text};
use pentagon::pentagon::{
    is_cocommutative, is_commutative, is_reversed_solution, is_solution_conditions,
    is_solution_direct, ConditionVerdict, PairMap, Verdict,
};
use pentagon::theta::{self, coset_solution, theta_from_pairmap};
use pentagon::Error;

use crate::input::{load_group, load_map, load_table, parse_elements, require, LoadedTable};
use crate::{ConstructArgs, ConstructionName, EnumerateArgs, Format, MethodArg};

pub struct Outcome {
    pub report: String,
    /// `false` for a failed verdict or a method disagreement.
    pub verdict: bool,
}

#[derive(Debug)]
pub enum CliError {
    Library(Error),
    Algebra(String),
    Usage(String),
}

impl CliError {
    /// Diagnostic code printed as `error[code]`.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Library(e) => match e {
                Error::Io { .. } => "io",
                Error::Parse { .. } => "parse",
                Error::EmptyCarrier
                | Error::RowCount { .. }
                | Error::RaggedRow { .. }
                | Error::EntryOutOfRange { .. }
                | Error::MapLength { .. }
                | Error::SizeMismatch { .. } => "table",
                Error::BudgetExceeded { .. } => "budget",
                Error::SizeOutOfRange { .. } => "size",
                _ => "algebra",
            },
            CliError::Algebra(_) => "algebra",
            CliError::Usage(_) => "usage",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Library(e) => e.fmt(f),
            CliError::Algebra(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

fn join(list: &[usize]) -> String {
    list.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    text
}

fn witness_json(v: Verdict) -> Value {
    match v.witness() {
        Some(t) => json!(t),
        None => Value::Null,
    }
}

pub fn verify(map_path: &Path, group: Option<&Path>, format: Format) -> Result<Outcome, CliError> {
    let loaded = load_map(map_path)?;
    let s = &loaded.map;
    let group_path = group.map(Path::to_path_buf).or(loaded.group_ref);
    let direct = is_solution_direct(s);
    let conditions = is_solution_conditions(s);
    let failed = match conditions {
        ConditionVerdict::Holds => None,
        ConditionVerdict::Fails { condition, at } => Some((condition, at)),
    };
    let datum = match (&group_path, direct.holds()) {
        (Some(path), true) => {
            let (_, g) = load_group(path)?;
            Some(theta::decompose(&theta_from_pairmap(s, &g)?))
        }
        _ => None,
    };

    let report = match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n: {}", s.size());
            let _ = writeln!(out, "solution: {}", direct.holds());
            if let Some(t) = direct.witness() {
                let _ = writeln!(out, "witness: {}", join(&t));
            }
            if let Some((condition, at)) = failed {
                let _ = writeln!(out, "condition: {condition} fails at {}", join(&at));
            }
            if let Some(d) = &datum {
                let _ = writeln!(out, "kernel: {}", join(d.kernel().elements()));
                let _ = writeln!(out, "R: {}", join(d.representatives()));
            }
            out
        }
        Format::Structured => {
            let mut doc = json!({
                "n": s.size(),
                "solution": direct.holds(),
                "witness": witness_json(direct),
            });
            if let Some((condition, at)) = failed {
                doc["condition"] = json!({ "name": condition, "at": at });
            }
            if let Some(d) = &datum {
                doc["kernel"] = json!(d.kernel().elements());
                doc["representatives"] = json!(d.representatives());
            }
            pretty(&doc)
        }
    };
    Ok(Outcome {
        report,
        verdict: direct.holds(),
    })
}

pub fn props(map_path: &Path, format: Format) -> Result<Outcome, CliError> {
    let s = load_map(map_path)?.map;
    let checks = [
        ("solution", is_solution_direct(&s)),
        ("reversed", is_reversed_solution(&s)),
        ("commutative", is_commutative(&s)),
        ("cocommutative", is_cocommutative(&s)),
    ];
    let invertible = s.is_invertible();
    let report = match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "n: {}", s.size());
            for (label, v) in checks {
                match v.witness() {
                    None => {
                        let _ = writeln!(out, "{label}: true");
                    }
                    Some(t) => {
                        let _ = writeln!(out, "{label}: false (witness {})", join(&t));
                    }
                }
            }
            let _ = writeln!(out, "invertible: {invertible}");
            out
        }
        Format::Structured => {
            let mut doc = json!({ "n": s.size(), "invertible": invertible });
            for (label, v) in checks {
                doc[label] = json!({ "holds": v.holds(), "witness": witness_json(v) });
            }
            pretty(&doc)
        }
    };
    Ok(Outcome {
        report,
        verdict: true,
    })
}

fn self_map(flag: &str, text: &Option<String>, n: usize) -> Result<SelfMap, CliError> {
    let images = parse_elements(flag, require(flag, text)?)?;
    Ok(SelfMap::new(n, images)?)
}

fn factorization_from_args(
    args: &ConstructArgs,
    g: &pentagon::algebra::Group,
) -> Result<Factorization, CliError> {
    let a = parse_elements("factor-a", require("factor-a", &args.factor_a)?)?;
    let b = parse_elements("factor-b", require("factor-b", &args.factor_b)?)?;
    Ok(Factorization::from_elements(g, &a, &b)?)
}

pub fn construct(args: &ConstructArgs, format: Format) -> Result<Outcome, CliError> {
    let group_path = args.group.as_deref();
    let table = group_path.map(load_table).transpose()?;
    let group = || -> Result<pentagon::algebra::Group, CliError> {
        let path = require("group", &args.group)?;
        Ok(load_group(path)?.1)
    };
    let (name, map): (&str, PairMap) = match args.name {
        ConstructionName::KtS => ("kt-s", kac_takesaki_s(&group()?)),
        ConstructionName::KtT => ("kt-t", kac_takesaki_t(&group()?)),
        ConstructionName::Endo => {
            let m = table
                .as_ref()
                .map(LoadedTable::magma)
                .ok_or_else(|| CliError::Usage("--group is required".into()))?;
            let gamma = self_map("gamma", &args.gamma, m.size())?;
            ("endo", endo_solution(m, &gamma)?)
        }
        ConstructionName::Constant => {
            let m = table
                .as_ref()
                .map(LoadedTable::magma)
                .ok_or_else(|| CliError::Usage("--group is required".into()))?;
            let e = *require("element", &args.element)?;
            ("constant", constant_solution(m, e)?)
        }
        ConstructionName::Militaru => {
            let n = *require("size", &args.size)?;
            let alpha = self_map("alpha", &args.alpha, n)?;
            let beta = self_map("beta", &args.beta, n)?;
            ("militaru", militaru(n, &alpha, &beta)?)
        }
        ConstructionName::Zakrzewski => {
            let g = group()?;
            let f = factorization_from_args(args, &g)?;
            ("zakrzewski", zakrzewski(&g, &f)?)
        }
        ConstructionName::BaajSkandalis => {
            let g = group()?;
            let f = factorization_from_args(args, &g)?;
            ("baaj-skandalis", baaj_skandalis(&g, &f)?)
        }
        ConstructionName::Coset => {
            let g = group()?;
            let k = parse_elements("kernel", require("kernel", &args.kernel)?)?;
            let r = parse_elements("reps", require("reps", &args.reps)?)?;
            let kernel = Subgroup::new(&g, &k)?;
            ("coset", coset_solution(&g, &kernel, &r)?.pair_map())
        }
        ConstructionName::Sign => {
            let degree = *require("degree", &args.degree)?;
            ("sign", sign_solution(degree)?.1)
        }
    };
    // Only maps of the form (xy, θ_x(y)) carry a group reference.
    let group_form = match args.name {
        ConstructionName::KtS | ConstructionName::Coset => true,
        ConstructionName::Endo | ConstructionName::Constant => {
            matches!(table, Some(LoadedTable::Group { .. }))
        }
        _ => false,
    };
    let group_ref = group_path
        .filter(|_| group_form)
        .map(|p| p.display().to_string());
    let report = match format {
        Format::Text => pairmap_to_string(Some(name), group_ref.as_deref(), &map),
        Format::Structured => pretty(&json!({
            "name": name,
            "group": group_ref,
            "n": map.size(),
            "dot": map.dot_rows(),
            "star": map.star_rows(),
        })),
    };
    Ok(Outcome {
        report,
        verdict: true,
    })
}

fn render(report: &EnumerationReport, format: Format) -> String {
    match format {
        Format::Text => report_to_text(report),
        Format::Structured => report_to_json(report),
    }
}

fn report_value(report: &EnumerationReport) -> Value {
    serde_json::from_str(&report_to_json(report)).expect("reports are valid json")
}

pub fn enumerate(
    args: &EnumerateArgs,
    with_classes: bool,
    format: Format,
) -> Result<Outcome, CliError> {
    let finish = |report: EnumerationReport| -> Result<EnumerationReport, CliError> {
        Ok(if with_classes {
            classify(&report)?
        } else {
            report
        })
    };

    if let Some(n) = args.size {
        if !matches!(args.method, None | Some(MethodArg::Raw)) {
            return Err(CliError::Usage(
                "--size only supports --method raw; pass --group for group methods".into(),
            ));
        }
        let report = enumerate_raw_within(n, None, args.budget.unwrap_or(RAW_BUDGET))?;
        return Ok(Outcome {
            report: render(&finish(report)?, format),
            verdict: true,
        });
    }

    let path = args
        .group
        .as_deref()
        .ok_or_else(|| CliError::Usage("one of --group or --size is required".into()))?;
    let table = load_table(path)?;
    let label = table.label().to_string();
    let method = args.method.unwrap_or(match table {
        LoadedTable::Group { .. } => MethodArg::Theta,
        LoadedTable::Magma { .. } => MethodArg::Raw,
    });
    if method == MethodArg::Raw {
        let m = table.magma();
        let report =
            enumerate_raw_within(m.size(), Some(m), args.budget.unwrap_or(FIXED_DOT_BUDGET))?
                .with_carrier(label);
        return Ok(Outcome {
            report: render(&finish(report)?, format),
            verdict: true,
        });
    }
    let LoadedTable::Group { group: g, .. } = table else {
        return Err(CliError::Algebra(format!(
            "{} is not a group table; only --method raw applies",
            path.display()
        )));
    };
    let theta = || -> Result<EnumerationReport, CliError> {
        Ok(
            enumerate_on_group_within(&g, args.budget.unwrap_or(THETA_BUDGET))?
                .with_carrier(&label),
        )
    };
    let theorem = || -> Result<EnumerationReport, CliError> {
        if let Some(budget) = args.budget {
            let required = count_by_formula(&g);
            if required > budget {
                return Err(Error::BudgetExceeded {
                    what: "coset enumeration",
                    required,
                    budget,
                }
                .into());
            }
        }
        Ok(enumerate_by_theorem(&g)?.with_carrier(&label))
    };
    match method {
        MethodArg::Theta => Ok(Outcome {
            report: render(&finish(theta()?)?, format),
            verdict: true,
        }),
        MethodArg::Theorem => Ok(Outcome {
            report: render(&finish(theorem()?)?, format),
            verdict: true,
        }),
        MethodArg::Both => {
            let scan = finish(theta()?)?;
            let coset = theorem()?;
            let agree = scan.same_solutions(&coset);
            let report = match format {
                Format::Text => {
                    let mut out = report_to_text(&scan);
                    let _ = writeln!(out, "theorem solutions: {}", coset.count());
                    let _ = writeln!(out, "agreement: {agree}");
                    out
                }
                Format::Structured => pretty(&json!({
                    "agreement": agree,
                    "theta-scan": report_value(&scan),
                    "theorem": report_value(&coset),
                })),
            };
            Ok(Outcome {
                report,
                verdict: agree,
            })
        }
        MethodArg::Raw => unreachable!("handled above"),
    }
}

pub fn decompose(map_path: &Path, group_path: &Path, format: Format) -> Result<Outcome, CliError> {
    let s = load_map(map_path)?.map;
    let (_, g) = load_group(group_path)?;
    let gs = match theta_from_pairmap(&s, &g) {
        Ok(gs) => gs,
        Err(Error::NotSolution { condition, at }) => {
            let report = match format {
                Format::Text => format!(
                    "solution: false\ncondition: {condition} fails at {}\n",
                    join(&at)
                ),
                Format::Structured => pretty(&json!({
                    "solution": false,
                    "condition": { "name": condition, "at": at },
                })),
            };
            return Ok(Outcome {
                report,
                verdict: false,
            });
        }
        Err(e) => return Err(e.into()),
    };
    let d = theta::decompose(&gs);
    let report = match format {
        Format::Text => coset_datum_to_string(&g, &d),
        Format::Structured => pretty(&json!({
            "n": g.order(),
            "kernel": d.kernel().elements(),
            "representatives": d.representatives(),
        })),
    };
    Ok(Outcome {
        report,
        verdict: true,
    })
}

pub fn factorize(group_path: &Path, format: Format) -> Result<Outcome, CliError> {
    let (label, g) = load_group(group_path)?;
    let fs = exact_factorizations(&g);
    let report = match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "group: {label}");
            let _ = writeln!(out, "factorizations: {}", fs.len());
            for (i, f) in fs.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "factorization {i}: A = {}; B = {}",
                    join(f.a().elements()),
                    join(f.b().elements())
                );
            }
            out
        }
        Format::Structured => pretty(&json!({
            "group": label,
            "factorizations": fs
                .iter()
                .map(|f| json!({ "a": f.a().elements(), "b": f.b().elements() }))
                .collect::<Vec<_>>(),
        })),
    };
    Ok(Outcome {
        report,
        verdict: true,
    })
}

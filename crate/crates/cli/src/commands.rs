use std::fmt::Write as _;

use hilbext_core::cases::verify::{Check, VerificationRecord};
use hilbext_core::cases::{d5_listed_symbolic_power, quotient_module_twist, symbolic_power_d5};
use hilbext_core::groebner::{
    eliminate, ideal_quotient, quotient_length, saturation_by_quotients, truncated_quotient_length, GroebnerBasis,
};
use hilbext_core::hilbext::{
    extension_equations, lower_bound, trivial_extension_length, upper_bound, ExtensionSpec, Length,
};
use hilbext_core::p1linalg::{ext_dimensions, h2_sym_dim, kernel_lambda, CochainComplex, SheafSum};
use hilbext_core::polyring::FieldSpec;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{parse_field, parse_order, parse_range, parse_twists, read_ideal, IdealInput};
use crate::{table, Cli, Failure, Output, Verb};

fn ok(json: Value, text: String) -> Result<Output, Failure> {
    Ok(Output { json, text, failure: None })
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn lines(xs: &[String]) -> String {
    xs.iter().map(|x| format!("{x}\n")).collect()
}

fn spec_of(twists: &str, field: FieldSpec) -> Result<ExtensionSpec, Failure> {
    Ok(ExtensionSpec::from_twists(&parse_twists(twists)?, field)?)
}

fn basis_json(input: &IdealInput, gb: &GroebnerBasis) -> Value {
    json!({
        "field": input.ring.field().to_string(),
        "order": gb.order().name(),
        "variables": input.ring.names(),
        "basis": strings(gb.elements()),
    })
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    let field = parse_field(&g.field)?;
    let order = parse_order(&g.order)?;
    let vars = g.vars.as_deref();
    match &cli.verb {
        Verb::Length { twists, show_ideal } => length(&spec_of(twists, field)?, *show_ideal),
        Verb::Equations { twists } => {
            let spec = spec_of(twists, field)?;
            let i = extension_equations(&spec)?;
            // generators that vanish in small characteristic are dropped
            let gens = strings(&i.nonzero_gens());
            ok(
                json!({"twists": spec.twists(), "field": field.to_string(), "variables": i.ring().names(), "generators": gens}),
                lines(&gens),
            )
        }
        Verb::Gb { file } => {
            let input = read_ideal(file, &[], vars, field, order)?;
            let gb = input.ideal.groebner()?;
            let basis = strings(gb.elements());
            ok(basis_json(&input, &gb), lines(&basis))
        }
        Verb::Nf { file, polys } => {
            let input = read_ideal(file, polys, vars, field, order)?;
            let gb = input.ideal.groebner()?;
            let mut rows = Vec::new();
            let mut text = String::new();
            for (src, p) in polys.iter().zip(&input.extra) {
                let r = gb.normal_form(p)?.to_string();
                let _ = writeln!(text, "{r}");
                rows.push(json!({"input": src, "normal_form": r}));
            }
            let mut j = basis_json(&input, &gb);
            j["normal_forms"] = Value::Array(rows);
            ok(j, text)
        }
        Verb::Quotient { file, by, truncate } => {
            let extra: Vec<String> = by.iter().cloned().collect();
            let input = read_ideal(file, &extra, vars, field, order)?;
            match (input.extra.first(), truncate) {
                (Some(f), None) => {
                    let q = ideal_quotient(&input.ideal, f)?.groebner()?;
                    let basis = strings(q.elements());
                    let mut j = basis_json(&input, &q);
                    j["by"] = json!(f.to_string());
                    ok(j, lines(&basis))
                }
                (None, Some(k)) => {
                    let n = truncated_quotient_length(&input.ideal, *k)?;
                    ok(json!({"length": n, "truncation": k}), format!("{n}\n"))
                }
                (None, None) => {
                    let n = quotient_length(&input.ideal)?;
                    ok(json!({"length": n}), format!("{n}\n"))
                }
                (Some(_), Some(_)) => Err(Failure::usage("--by and --truncate are exclusive".into())),
            }
        }
        Verb::Saturate { file, by } => {
            let input = read_ideal(file, std::slice::from_ref(by), vars, field, order)?;
            let (sat, steps) = saturation_by_quotients(&input.ideal, &input.extra[0])?;
            let gb = sat.groebner()?;
            let basis = strings(gb.elements());
            let mut j = basis_json(&input, &gb);
            j["by"] = json!(input.extra[0].to_string());
            j["steps"] = json!(steps);
            ok(j, lines(&basis))
        }
        Verb::Eliminate { file, drop } => {
            let input = read_ideal(file, &[], vars, field, order)?;
            let mut idx = Vec::new();
            for name in drop.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                idx.push(
                    input.ring.index_of(name).ok_or_else(|| Failure::usage(format!("unknown variable `{name}`")))?,
                );
            }
            let gb = eliminate(&input.ideal, &idx)?.groebner()?;
            let basis = strings(gb.elements());
            let mut j = basis_json(&input, &gb);
            j["eliminated"] = json!(drop.split(',').map(str::trim).collect::<Vec<_>>());
            ok(j, lines(&basis))
        }
        Verb::SymbolicPower { n } => symbolic_power(*n, field),
        Verb::Hochschild { d, a } => hochschild(*d, *a, field),
        Verb::Bounds { d, twists } => {
            let second = spec_of(twists, field)?;
            let lower = lower_bound(*d, &second)?;
            let upper = upper_bound(&[ExtensionSpec::new(vec![*d], field)?, second.clone()])?;
            ok(
                json!({"d": d, "twists": second.twists(), "field": field.to_string(), "lower": lower, "upper": upper}),
                format!("lower {lower}\nupper {upper}\n"),
            )
        }
        Verb::Verify { check, max } => verify(check, *max),
        Verb::Table { d, repeat, n, shapes } => {
            let rows: Vec<Vec<i64>> = match (d, repeat, n, shapes) {
                (Some(r), None, _, None) => parse_range(r)?.map(|d| vec![-(d as i64)]).collect(),
                (None, Some(t), Some(n), None) => parse_range(n)?.map(|n| vec![*t; n as usize]).collect(),
                (None, None, _, Some(s)) => s.split(';').map(parse_twists).collect::<Result<_, _>>()?,
                _ => return Err(Failure::usage("table needs one of --d, --repeat with --n, or --shapes".into())),
            };
            table::sweep(&rows, field)
        }
    }
}

fn length(spec: &ExtensionSpec, show_ideal: bool) -> Result<Output, Failure> {
    let mut report = trivial_extension_length(spec)?;
    report.ideal = if show_ideal { Some(strings(&extension_equations(spec)?.nonzero_gens())) } else { None };
    let json = serde_json::to_value(&report).expect("serializable");
    match &report.length {
        Length::Finite(n) => {
            let agree: Vec<&str> = report.agreement.iter().map(|m| m.name()).collect();
            let mut text = format!("{n}\n");
            if !agree.is_empty() {
                let _ = writeln!(text, "agrees with: {}", agree.join(", "));
            }
            for c in report.checks.iter().filter(|c| !c.agrees) {
                let _ = writeln!(text, "discrepancy: {} gives {} against {} = {}", c.method.name(), c.value, c.compares_to, c.computed);
            }
            if let Some(i) = &report.ideal {
                text.push_str(&lines(i));
            }
            ok(json, text)
        }
        Length::NotArtinian(w) => Ok(Output {
            json,
            text: String::new(),
            failure: Some(Failure::Compute(format!("quotient is not Artinian (witness {w})"))),
        }),
    }
}

fn symbolic_power(n: u32, field: FieldSpec) -> Result<Output, Failure> {
    let computed = symbolic_power_d5(n, field)?;
    let gb = computed.groebner()?;
    let listed = match d5_listed_symbolic_power(n, field) {
        Ok(l) => Some(computed.equals(&l)?),
        Err(_) => None,
    };
    let twist = quotient_module_twist(n, field).ok();
    let basis = strings(gb.elements());
    let mut text = lines(&basis);
    if let Some(m) = listed {
        let _ = writeln!(text, "matches listed generators: {m}");
    }
    if let Some(t) = twist {
        let _ = writeln!(text, "I^({n}) / I^({}) = O({t})", n + 1);
    }
    ok(
        json!({
            "n": n,
            "field": field.to_string(),
            "variables": gb.ring().names(),
            "basis": basis,
            "matches_listed": listed,
            "quotient_twist": twist,
        }),
        text,
    )
}

fn hochschild(d: usize, a: usize, field: FieldSpec) -> Result<Output, Failure> {
    if d == 0 || a == 0 {
        return Err(Failure::usage("--d and --a must be positive".into()));
    }
    let cx = CochainComplex::for_line(d, &SheafSum::trivial(a), field);
    let e = ext_dimensions(d, a, field)?;
    let k = kernel_lambda(d, &SheafSum::trivial(a), field)?;
    let h2 = h2_sym_dim(d, a, field);
    let json = json!({
        "d": d,
        "a": a,
        "field": field.to_string(),
        "h2_sym": h2,
        "coboundary_rank": cx.coboundary_rank(),
        "ext_trivial": e.ex_trivial,
        "ext_line": e.ex_line,
        "kernel_sigma": e.ker_sigma,
        "rank_sigma": e.rank_sigma,
        "kernel_lambda": k.kernel_dim,
        "symmetric_kernel_lambda": k.symmetric_kernel_dim,
        "expected": {
            "h2_sym": a * (2 * d + 1),
            "ext_trivial": a * (d + 1) * (d + 2) / 2,
            "kernel_sigma": a * d * (d - 1) / 2,
            "kernel_lambda": a * d * d,
        },
    });
    let text = format!(
        "h2_sym {h2}\ncoboundary rank {}\next trivial {}\next line {}\nkernel sigma {}\nrank sigma {}\nkernel lambda {}\nsymmetric kernel lambda {}\n",
        cx.coboundary_rank(),
        e.ex_trivial,
        e.ex_line,
        e.ker_sigma,
        e.rank_sigma,
        k.kernel_dim,
        k.symmetric_kernel_dim
    );
    ok(json, text)
}

fn verify(check: &str, max: Option<usize>) -> Result<Output, Failure> {
    let checks: Vec<Check> = if check == "all" {
        Check::ALL.to_vec()
    } else {
        vec![Check::parse(check).ok_or_else(|| {
            let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
            Failure::usage(format!("unknown check `{check}`; one of all, {}", names.join(", ")))
        })?]
    };
    // groups run in parallel; collecting keeps their order
    let groups: Vec<Result<Vec<VerificationRecord>, _>> = checks.par_iter().map(|c| c.run(max)).collect();
    let mut records = Vec::new();
    for g in groups {
        records.extend(g?);
    }
    let failed = records.iter().filter(|r| !r.pass).count();
    let mut text = String::new();
    for r in &records {
        let _ = writeln!(
            text,
            "{} {} {} computed={}",
            if r.pass { "PASS" } else { "FAIL" },
            r.check,
            r.parameters,
            r.computed
        );
    }
    let _ = writeln!(text, "{} passed, {failed} failed", records.len() - failed);
    let json = json!({"records": records, "passed": records.len() - failed, "failed": failed});
    Ok(Output { json, text, failure: (failed > 0).then_some(Failure::Verification(failed)) })
}

//! End-to-end acceptance run: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hilbext_core::cases::verify::{self, VerificationRecord};
use hilbext_core::hilbext::{trivial_extension_length, ExtensionSpec, Length};
use hilbext_core::polyring::FieldSpec;
use hilbext_core::Result;

type Records = Result<Vec<VerificationRecord>>;

fn keep(recs: Records, prefixes: &[&str]) -> Records {
    Ok(recs?.into_iter().filter(|r| prefixes.iter().any(|p| r.check.starts_with(p))).collect())
}

fn length(ds: Vec<u32>, field: FieldSpec) -> Result<u64> {
    match trivial_extension_length(&ExtensionSpec::new(ds, field)?)?.length {
        Length::Finite(n) => Ok(n),
        Length::NotArtinian(w) => Err(hilbext_core::Error::NotArtinian { witness: w }),
    }
}

fn fibonacci_lengths() -> Records {
    let want = [2u64, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233];
    let mut got = Vec::new();
    for d in 0..=10 {
        got.push(length(vec![d], FieldSpec::rationals())?);
    }
    let mut recs = verify::recursion(10)?;
    recs.push(VerificationRecord {
        check: "sequence".into(),
        parameters: serde_json::json!({"d": "0..10"}),
        expected: serde_json::json!(want),
        computed: serde_json::json!(got),
        pass: got == want,
    });
    Ok(recs)
}

fn char2_lengths() -> Records {
    let f2 = FieldSpec::prime(2)?;
    let mut out = Vec::new();
    for d in 0..=8u32 {
        let n = length(vec![d], f2)?;
        out.push(VerificationRecord {
            check: "char2".into(),
            parameters: serde_json::json!({"d": d}),
            expected: serde_json::json!(1u64 << (d + 1)),
            computed: serde_json::json!(n),
            pass: n == 1 << (d + 1),
        });
    }
    Ok(out)
}

fn lambda_phi_and_tensor_square() -> Records {
    let mut recs = verify::lambda_phi(6)?;
    recs.extend(verify::tensor_square(5)?);
    Ok(recs)
}

fn hochschild() -> Records {
    keep(
        verify::cocycles(5),
        &[
            "cocycles-complex",
            "cocycles-coboundaries",
            "cocycles-h2-sym",
            "cocycles-min-generators",
            "cocycles-kernel-lambda",
            "cocycles-dimension-identity",
        ],
    )
}

fn property_suites() -> Records {
    let mut recs = verify::properties(200, 0x5eed)?;
    recs.extend(verify::scaling_records()?);
    Ok(recs)
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Records>)> = vec![
        ("double line in P^3: lengths 6 and 8", 1, Box::new(|| keep(verify::double_line(), &["double-line-length"]))),
        (
            "D5 cubic: symbolic powers, quotient twists, length 5",
            5,
            Box::new(|| {
                keep(
                    verify::d5_surface(),
                    &["d5-symbolic-power", "d5-quotient-twist", "d5-length"],
                )
            }),
        ),
        ("single summand lengths and the Fibonacci recursion", 30, Box::new(fibonacci_lengths)),
        ("characteristic 2 lengths 2^(d+1)", 10, Box::new(char2_lengths)),
        ("the displayed generators form a Groebner basis", 30, Box::new(|| verify::groebner_generators(12))),
        ("standard expressions of the S-polynomials", 5, Box::new(|| verify::standard_expressions(10))),
        ("saturation identities", 10, Box::new(|| verify::saturation_identities(6))),
        ("lengths for sums of O(-1) and O(-2)", 20, Box::new(|| verify::lines_and_conics(4))),
        ("lambda/phi exactness and the tensor-square cokernel", 10, Box::new(lambda_phi_and_tensor_square)),
        ("Hochschild dimensions", 20, Box::new(hochschild)),
        ("bounds sandwich the double line on the cubic", 1, Box::new(|| keep(verify::bounds(), &["bounds-sandwich"]))),
        ("truncated-length formulas", 60, Box::new(verify::truncated_formula_table)),
        ("property suites and cocycle scaling", 120, Box::new(property_suites)),
    ];

    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match &result {
            Ok(recs) if recs.is_empty() => (false, "no records".to_string()),
            Ok(recs) => {
                let bad: Vec<_> = recs.iter().filter(|r| !r.pass).collect();
                match bad.first() {
                    None => (true, format!("{} records", recs.len())),
                    Some(r) => (false, format!("{} of {} failed, first: {}", bad.len(), recs.len(), serde_json::to_string(r).unwrap())),
                }
            }
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= Duration::from_secs(*limit);
        let pass = ok && in_time;
        let timing = if in_time { String::new() } else { format!(", over the {limit} s limit") };
        println!(
            "{} {:>2}. {name} ({detail}; {:.2} s{timing})",
            if pass { "PASS" } else { "FAIL" },
            k + 1,
            elapsed.as_secs_f64()
        );
        if !pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

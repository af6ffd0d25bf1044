use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use yb_core::cohomology::{classify_h2, coboundary_space, cocycle_space, entropic_basis};
use yb_core::deform::{entropic_by_degree, normalize_to_entropic, DeformationFamily};
use yb_core::json::{lambda_from_json, poly_matrix_from_json, poly_matrix_to_json};
use yb_core::rack::{load_rack, Rack};
use yb_core::yb::{braid_rep, BraidWord, PolyMatrix, YBOperator, YbeVerdict};
use yb_core::{sample, Config, Error};

use crate::output::{Failure, Report, EXIT_MATH};
use crate::{reproduce, Cli, Command, Format};

pub fn run(cli: &Cli) -> Result<(), Failure> {
    let defaults = Config::default();
    let cfg = Config {
        size_limit: cli.size_limit.unwrap_or(defaults.size_limit),
        truncation: cli.trunc.unwrap_or(defaults.truncation),
        ..defaults
    };
    cfg.validate()?;
    match &cli.command {
        Command::Validate { rack } => validate(cli.format, rack),
        Command::Check { rack, matrix } => check(cli.format, rack.as_deref(), matrix.as_deref(), &cfg),
        Command::Braid { rack, word, strands } => braid(cli.format, rack, word, *strands),
        Command::Cohomology { rack, degree, report } => {
            cohomology(report.unwrap_or(cli.format), rack, *degree, &cfg)
        }
        Command::EntropicBasis { rack, degree } => entropic(cli.format, rack, *degree, &cfg),
        Command::Deform { rack, lambda, check } => deform(cli.format, rack, lambda.as_deref(), *check, cli.seed, &cfg),
        Command::Normalize { rack, input } => normalize(cli.format, rack, input, &cfg),
        Command::Reproduce { example } => reproduce::run(cli.format, *example, cli.seed, &cfg),
    }
}

fn read_file(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn matrix_value(m: &PolyMatrix) -> (String, Value) {
    let v = poly_matrix_to_json(m);
    (v.to_string(), v)
}

fn verdict_value(v: YbeVerdict) -> Value {
    match v {
        YbeVerdict::Holds => json!({ "holds": true }),
        YbeVerdict::Fails { witness } => json!({ "holds": false, "witness": witness }),
    }
}

fn validate(format: Format, arg: &str) -> Result<(), Failure> {
    let rack = load_rack(arg).map_err(|e| match e {
        Error::NotRightInvertible { .. }
        | Error::NotSelfDistributive { .. }
        | Error::NotIdempotent { .. }
        | Error::NotConjugationClosed { .. } => Failure::math(format!("axiom violation: {e}")),
        other => Failure::from(other),
    })?;
    let inn = rack.inner_group(Config::default().inner_group_cap)?;
    let classes = rack.behavioral_classes();
    let mut out = Report::new(format, "validate");
    out.rack(&rack)
        .field("kind", "kind", json!(if rack.is_quandle() { "quandle" } else { "rack" }))
        .field("innerGroupOrder", "|Inn(Q)|", json!(inn.order()))
        .field("behavioralClassCount", "behavioral classes", json!(classes.len()))
        .field("behavioralClasses", "classes", json!(classes))
        .field("table", "table", json!(rack.table()));
    out.print();
    Ok(())
}

fn check(format: Format, rack: Option<&str>, matrix: Option<&std::path::Path>, cfg: &Config) -> Result<(), Failure> {
    let mut out = Report::new(format, "check");
    let op = match (rack, matrix) {
        (Some(name), _) => {
            let r = load_rack(name)?;
            out.rack(&r);
            YBOperator::from_rack(&r, 1)
        }
        (None, Some(path)) => {
            let m = poly_matrix_from_json(&read_file(path)?, cfg.truncation)?;
            let n = (1..=m.rows()).find(|k| k * k >= m.rows()).unwrap_or(0);
            if n * n != m.rows() {
                return Err(Failure::input(format!("{} rows is not a square number", m.rows())));
            }
            YBOperator::new(n, m)?
        }
        (None, None) => return Err(Failure::input("give --rack or --matrix")),
    };
    let verdict = op.check_ybe();
    out.field("n", "n", json!(op.n())).field("ybe", "Yang-Baxter", verdict_value(verdict));
    out.print();
    match verdict {
        YbeVerdict::Holds => Ok(()),
        YbeVerdict::Fails { witness } => Err(Failure::math(format!("YBE fails at basis triple {witness:?}"))),
    }
}

fn braid(format: Format, rack: &str, word: &str, strands: Option<usize>) -> Result<(), Failure> {
    let r = load_rack(rack)?;
    let highest = word
        .split_whitespace()
        .filter_map(|t| t.parse::<i64>().ok())
        .map(|l| l.unsigned_abs() as usize)
        .max()
        .unwrap_or(1);
    let w = BraidWord::parse(strands.unwrap_or(highest + 1), word)?;
    let m = braid_rep(&YBOperator::from_rack(&r, 1), &w)?;
    let (text, value) = matrix_value(&m);
    let mut out = Report::new(format, "braid");
    out.rack(&r)
        .field("strands", "strands", json!(w.strands()))
        .field("word", "word", json!(w.letters()))
        .block("matrix", "matrix", text, value);
    out.print();
    Ok(())
}

fn cohomology(format: Format, rack: &str, degree: usize, cfg: &Config) -> Result<(), Failure> {
    let r = load_rack(rack)?;
    cfg.check_rack_size(r.size())?;
    let mut out = Report::new(format, "cohomology");
    out.rack(&r).field("degree", "degree", json!(degree));
    if degree == 2 {
        let rep = classify_h2(&r, cfg)?;
        for (key, label, v) in [
            ("dimZ2", "dim Z2", rep.dim_z),
            ("dimB2", "dim B2", rep.dim_b),
            ("dimE2", "dim E2", rep.dim_e),
            ("dimH2", "dim H2", rep.dim_h),
            ("dimEcapB", "dim E2 ∩ B2", rep.dim_intersection),
            ("dimEplusB", "dim E2 + B2", rep.dim_sum),
        ] {
            out.field(key, label, json!(v));
        }
        out.field("verified", "Z2 = E2 ⊕ B2", json!(rep.verified));
        out.print();
        return if rep.verified { Ok(()) } else { Err(Failure::math("decomposition check failed")) };
    }
    let z = cocycle_space(&r, degree, cfg)?.dim();
    let b = coboundary_space(&r, degree, cfg)?.dim();
    out.field(&format!("dimZ{degree}"), &format!("dim Z{degree}"), json!(z))
        .field(&format!("dimB{degree}"), &format!("dim B{degree}"), json!(b))
        .field(&format!("dimH{degree}"), &format!("dim H{degree}"), json!(z - b));
    out.print();
    Ok(())
}

fn entropic(format: Format, rack: &str, degree: usize, cfg: &Config) -> Result<(), Failure> {
    let r = load_rack(rack)?;
    cfg.check_rack_size(r.size())?;
    let basis = entropic_basis(&r, degree, cfg)?;
    let orbits: Vec<Value> = basis.orbits().iter().map(|o| json!(o)).collect();
    let human = basis
        .orbits()
        .iter()
        .enumerate()
        .map(|(k, o)| {
            let pairs: Vec<String> = o.iter().map(|(x, y)| format!("{x:?}->{y:?}")).collect();
            format!("  {k}: {}", pairs.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut out = Report::new(format, "entropic-basis");
    out.rack(&r)
        .field("degree", "degree", json!(degree))
        .field("count", "orbits", json!(basis.len()))
        .block("orbits", "orbit pairs (x -> y)", human, json!(orbits));
    out.print();
    Ok(())
}

fn deform(format: Format, rack: &str, lambda: Option<&str>, check: bool, seed: u64, cfg: &Config) -> Result<(), Failure> {
    let r = load_rack(rack)?;
    cfg.check_rack_size(r.size())?;
    let basis = entropic_basis(&r, 2, cfg)?;
    let params = match lambda {
        Some(text) => lambda_from_json(text, cfg.truncation)?,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..basis.len()).map(|_| sample::poly(&mut rng, cfg.truncation, 1, 5)).collect()
        }
    };
    let shown: Vec<Value> = params.iter().map(|p| json!(p.to_strings())).collect();
    let fam = DeformationFamily::new(r.clone(), basis, params)?;
    let c = fam.assemble()?;
    let (text, value) = matrix_value(c.matrix());
    let mut out = Report::new(format, "deform");
    out.rack(&r).field("parameters", "parameters", json!(shown)).block("operator", "c(λ)", text, value);
    let verdict = check.then(|| c.check_ybe());
    if let Some(v) = verdict {
        out.field("ybe", "Yang-Baxter", verdict_value(v));
    }
    out.print();
    match verdict {
        Some(YbeVerdict::Fails { witness }) => {
            Err(Failure { code: EXIT_MATH, message: format!("YBE fails at basis triple {witness:?}") })
        }
        _ => Ok(()),
    }
}

fn normalize(format: Format, rack: &str, input: &std::path::Path, cfg: &Config) -> Result<(), Failure> {
    let r: Rack = load_rack(rack)?;
    let m = poly_matrix_from_json(&read_file(input)?, cfg.truncation)?;
    let c = YBOperator::new(r.size(), m)?;
    let result = normalize_to_entropic(&r, &c, cfg)?;
    let entropic = entropic_by_degree(&r, &result.perturbation)?;
    let (alpha_text, alpha) = matrix_value(result.alpha.matrix());
    let (op_text, op) = matrix_value(result.operator.matrix());
    let mut out = Report::new(format, "normalize");
    out.rack(&r)
        .field("entropicByDegree", "entropic by degree", json!(entropic))
        .block("alpha", "α", alpha_text, alpha)
        .block("operator", "c'", op_text, op);
    out.print();
    Ok(())
}

//! Subcommand implementations: parse inputs, call the core library, render
//! text or JSON, and map errors to exit codes.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use kummer_core::{
    brute_force_divisor_check, chord_configuration, common_chord_line, factor, generator_census,
    norm_via_resultant, period_system, prime_divisors_of, radical_axis, search_generator,
    verify_chord_power_relation, ChordKind, Circle, CyclotomicInteger, Error, IdealPrimeDivisor,
    Point, SearchBudget, SearchOutcome,
};

use crate::render::{
    json_divisor, json_factor_entry, json_int, json_line, json_point, json_rat, json_u64,
    poly_string, u_tuple_string,
};
use crate::{BudgetArgs, Command, DivisorSelector, GeometryCommand};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure {
            code: if err.is_internal() { 2 } else { 1 },
            message: err.to_string(),
        }
    }
}

const LAMBDA_CAP: u64 = 31;

fn check_lambda(lambda: u64, allow_large: bool) -> Result<(), Failure> {
    if lambda > LAMBDA_CAP && !allow_large {
        return Err(Failure::input(format!(
            "lambda = {lambda} exceeds the desk-scale cap {LAMBDA_CAP}; pass --allow-large to proceed"
        )));
    }
    Ok(())
}

fn parse_cyclo(lambda: u64, text: &str) -> Result<CyclotomicInteger, Failure> {
    Ok(CyclotomicInteger::parse(lambda, text)?)
}

fn parse_rational(text: &str) -> Result<BigRational, Failure> {
    let t = text.trim();
    let make = |n: &str, d: &str| -> Option<BigRational> {
        let num: BigInt = n.parse().ok()?;
        let den: BigInt = d.parse().ok()?;
        if den == BigInt::from(0) {
            return None;
        }
        Some(BigRational::new(num, den))
    };
    let parsed = match t.split_once('/') {
        Some((n, d)) => make(n, d),
        None => make(t, "1"),
    };
    parsed.ok_or_else(|| Failure::input(format!("malformed rational: {text}")))
}

fn parse_circle(text: &str) -> Result<Circle, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::input(format!(
            "circle must be cx,cy,r2 — got {text}"
        )));
    }
    let cx = parse_rational(parts[0])?;
    let cy = parse_rational(parts[1])?;
    let r2 = parse_rational(parts[2])?;
    Ok(Circle::new(Point::new(cx, cy), r2)?)
}

fn budget(args: &BudgetArgs) -> Result<SearchBudget, Failure> {
    Ok(SearchBudget::new(
        args.support,
        args.bound,
        args.max_candidates,
    )?)
}

fn select_divisor(lambda: u64, sel: &DivisorSelector) -> Result<IdealPrimeDivisor, Failure> {
    let divisors = prime_divisors_of(sel.q, lambda)?;
    if let Some(xi) = sel.xi {
        return divisors
            .into_iter()
            .find(|p| p.xi() == Some(xi))
            .ok_or_else(|| {
                Failure::input(format!(
                    "no divisor of q={} over lambda={lambda} has xi={xi}",
                    sel.q
                ))
            });
    }
    let shift = sel.shift.unwrap_or(0);
    let e = divisors[0].e();
    divisors.into_iter().nth(shift).ok_or_else(|| {
        Failure::input(format!("shift {shift} out of range (e = {e})"))
    })
}

pub fn dispatch(cmd: Command, json_out: bool, allow_large: bool) -> Result<String, Failure> {
    match cmd {
        Command::Norm { lambda, coeffs } => {
            check_lambda(lambda, allow_large)?;
            let g = parse_cyclo(lambda, &coeffs)?;
            let n = g.norm()?;
            let r = norm_via_resultant(&g);
            if n != r {
                return Err(Failure::internal(format!(
                    "norm routes disagree: conjugate product {n} vs resultant {r}"
                )));
            }
            if json_out {
                let mut m = Map::new();
                m.insert("lambda".into(), json_u64(lambda));
                m.insert("coeffs".into(), json!(g.to_coeff_string()));
                m.insert("norm".into(), json_int(&n));
                m.insert("resultantNorm".into(), json_int(&r));
                m.insert("agree".into(), json!(true));
                Ok(Value::Object(m).to_string())
            } else {
                Ok(format!(
                    "norm({}) = {n}\nresultant route agrees",
                    g.to_alpha_string()
                ))
            }
        }

        Command::Mul { lambda, g, h } => {
            check_lambda(lambda, allow_large)?;
            let g = parse_cyclo(lambda, &g)?;
            let h = parse_cyclo(lambda, &h)?;
            let prod = g.mul(&h)?;
            if json_out {
                Ok(json!({
                    "lambda": lambda,
                    "g": g.to_coeff_string(),
                    "h": h.to_coeff_string(),
                    "product": prod.to_coeff_string(),
                })
                .to_string())
            } else {
                Ok(format!(
                    "({}) * ({}) = {}  [{}]",
                    g.to_alpha_string(),
                    h.to_alpha_string(),
                    prod.to_alpha_string(),
                    prod.to_coeff_string()
                ))
            }
        }

        Command::Conj { lambda, g, k } => {
            check_lambda(lambda, allow_large)?;
            let g = parse_cyclo(lambda, &g)?;
            let result = g.conjugate(k)?;
            if json_out {
                Ok(json!({
                    "lambda": lambda,
                    "g": g.to_coeff_string(),
                    "k": k,
                    "result": result.to_coeff_string(),
                })
                .to_string())
            } else {
                Ok(format!(
                    "conjugate({}, {k}) = {}  [{}]",
                    g.to_alpha_string(),
                    result.to_alpha_string(),
                    result.to_coeff_string()
                ))
            }
        }

        Command::Eval {
            lambda,
            g,
            xi,
            modulus,
        } => {
            check_lambda(lambda, allow_large)?;
            let g = parse_cyclo(lambda, &g)?;
            let value = g.evaluate_mod(xi, modulus)?;
            if json_out {
                Ok(json!({
                    "lambda": lambda,
                    "g": g.to_coeff_string(),
                    "xi": xi,
                    "modulus": modulus,
                    "value": value,
                })
                .to_string())
            } else {
                Ok(format!("({})|_(alpha={xi}) = {value}  (mod {modulus})", g.to_alpha_string()))
            }
        }

        Command::Periods { lambda, q } => {
            check_lambda(lambda, allow_large)?;
            let ps = period_system(lambda, q)?;
            let assignment = ps.congruence_assignment()?;
            let poly = ps.period_polynomial()?;
            if json_out {
                let mut m = Map::new();
                m.insert("lambda".into(), json_u64(lambda));
                m.insert("q".into(), json_u64(q));
                m.insert("f".into(), json_u64(ps.f() as u64));
                m.insert("e".into(), json_u64(ps.e() as u64));
                m.insert("gamma".into(), json_u64(ps.gamma()));
                m.insert(
                    "cosets".into(),
                    Value::Array(
                        (0..ps.e())
                            .map(|j| {
                                Value::Array(
                                    ps.coset(j).iter().map(|&t| json_u64(t)).collect(),
                                )
                            })
                            .collect(),
                    ),
                );
                m.insert(
                    "periods".into(),
                    Value::Array(
                        (0..ps.e())
                            .map(|j| json!(ps.period(j).map(|p| p.to_coeff_string()).unwrap_or_default()))
                            .collect(),
                    ),
                );
                m.insert(
                    "periodPolynomial".into(),
                    Value::Array(poly.iter().map(json_int).collect()),
                );
                m.insert(
                    "u".into(),
                    Value::Array(assignment.u().iter().map(|&x| json_u64(x)).collect()),
                );
                Ok(Value::Object(m).to_string())
            } else {
                let mut out = format!(
                    "lambda={lambda} q={q}: f={} e={} gamma={}\n",
                    ps.f(),
                    ps.e(),
                    ps.gamma()
                );
                for j in 0..ps.e() {
                    let mut exps = ps.coset(j).to_vec();
                    exps.sort_unstable();
                    let terms: Vec<String> = exps
                        .iter()
                        .map(|&t| if t == 1 { "α".to_string() } else { format!("α^{t}") })
                        .collect();
                    out.push_str(&format!("eta_{j} = {}\n", terms.join(" + ")));
                }
                out.push_str(&format!("period polynomial: {}\n", poly_string(&poly)));
                out.push_str(&format!("u = {}", u_tuple_string(assignment.u())));
                Ok(out)
            }
        }

        Command::Divisors { lambda, q } => {
            check_lambda(lambda, allow_large)?;
            let divisors = prime_divisors_of(q, lambda)?;
            let note = if q == lambda {
                "ramified: the divisor of 1-alpha".to_string()
            } else if divisors[0].e() == 1 {
                format!("actual prime: {q} stays prime (inert)")
            } else {
                format!("{} conjugate divisors", divisors.len())
            };
            if json_out {
                let mut m = Map::new();
                m.insert("lambda".into(), json_u64(lambda));
                m.insert("q".into(), json_u64(q));
                m.insert(
                    "divisors".into(),
                    Value::Array(divisors.iter().map(json_divisor).collect()),
                );
                m.insert("note".into(), json!(note));
                Ok(Value::Object(m).to_string())
            } else {
                let mut out = format!("divisors of q={q} over lambda={lambda}:\n");
                for p in &divisors {
                    out.push_str(&format!("  {p}  f={} e={}\n", p.f(), p.e()));
                }
                out.push_str(&format!("note: {note}"));
                Ok(out)
            }
        }

        Command::Divides { lambda, divisor, g } => {
            check_lambda(lambda, allow_large)?;
            let p = select_divisor(lambda, &divisor)?;
            let g = parse_cyclo(lambda, &g)?;
            let answer = p.divides(&g)?;
            if json_out {
                let mut m = Map::new();
                m.insert("lambda".into(), json_u64(lambda));
                m.insert("divisor".into(), json_divisor(&p));
                m.insert("g".into(), json!(g.to_coeff_string()));
                m.insert("divides".into(), json!(answer));
                Ok(Value::Object(m).to_string())
            } else {
                Ok(format!("{p} divides {}: {answer}", g.to_alpha_string()))
            }
        }

        Command::Valuation { lambda, divisor, g } => {
            check_lambda(lambda, allow_large)?;
            let p = select_divisor(lambda, &divisor)?;
            let g = parse_cyclo(lambda, &g)?;
            let v = p.valuation(&g)?;
            if json_out {
                let mut m = Map::new();
                m.insert("lambda".into(), json_u64(lambda));
                m.insert("divisor".into(), json_divisor(&p));
                m.insert("g".into(), json!(g.to_coeff_string()));
                m.insert("valuation".into(), json_u64(v));
                Ok(Value::Object(m).to_string())
            } else {
                Ok(format!("valuation of {} at {p} = {v}", g.to_alpha_string()))
            }
        }

        Command::Factor { lambda, coeffs } => {
            check_lambda(lambda, allow_large)?;
            let g = parse_cyclo(lambda, &coeffs)?;
            let factorization = factor(&g)?;
            if json_out {
                let mut m = Map::new();
                m.insert("norm".into(), json_int(factorization.norm()));
                m.insert(
                    "entries".into(),
                    Value::Array(
                        factorization
                            .entries()
                            .iter()
                            .map(|(p, mult)| json_factor_entry(p, *mult))
                            .collect(),
                    ),
                );
                Ok(Value::Object(m).to_string())
            } else {
                let mut out = format!(
                    "norm({}) = {}\n",
                    g.to_alpha_string(),
                    factorization.norm()
                );
                if factorization.entries().is_empty() {
                    out.push_str("unit: no ideal prime divisors");
                } else {
                    for (p, mult) in factorization.entries() {
                        out.push_str(&format!("  {p}^{mult}\n"));
                    }
                    out.pop();
                }
                Ok(out)
            }
        }

        Command::Search {
            lambda,
            divisor,
            budget: budget_args,
        } => {
            check_lambda(lambda, allow_large)?;
            let p = select_divisor(lambda, &divisor)?;
            let b = budget(&budget_args)?;
            let outcome = search_generator(&p, &b)?;
            let (status, generator, note) = match &outcome {
                SearchOutcome::Found(h) => (
                    "found",
                    Some(h.to_coeff_string()),
                    format!("|norm| = {}^{}", p.q(), p.f()),
                ),
                SearchOutcome::Exhausted => (
                    "absent-exhausted",
                    None,
                    "search space exhausted at this budget; bounded evidence of \
                     non-principality, not proof"
                        .to_string(),
                ),
                SearchOutcome::Capped => (
                    "absent-capped",
                    None,
                    "candidate cap reached before exhaustion; bounded evidence only"
                        .to_string(),
                ),
            };
            if json_out {
                let mut m = Map::new();
                m.insert("lambda".into(), json_u64(lambda));
                m.insert("divisor".into(), json_divisor(&p));
                m.insert(
                    "budget".into(),
                    json!({
                        "support": budget_args.support,
                        "bound": budget_args.bound,
                        "maxCandidates": budget_args.max_candidates,
                    }),
                );
                m.insert("status".into(), json!(status));
                m.insert(
                    "generator".into(),
                    generator.clone().map(Value::String).unwrap_or(Value::Null),
                );
                m.insert("note".into(), json!(note));
                Ok(Value::Object(m).to_string())
            } else {
                match generator {
                    Some(h) => Ok(format!("generator of {p}: {h}  ({note})")),
                    None => Ok(format!("no generator of {p} within budget: {note}")),
                }
            }
        }

        Command::Verify {
            lambda,
            q,
            g,
            budget: budget_args,
        } => {
            check_lambda(lambda, allow_large)?;
            let g = parse_cyclo(lambda, &g)?;
            let b = budget(&budget_args)?;
            let report = brute_force_divisor_check(q, lambda, &g, &b)?;
            let output = if json_out {
                let rows: Vec<Value> = report
                    .rows
                    .iter()
                    .map(|row| {
                        let mut m = Map::new();
                        m.insert("divisor".into(), json_divisor(&row.divisor));
                        m.insert("divides".into(), json!(row.divides));
                        m.insert("tested".into(), json!(row.oracle_divides.is_some()));
                        m.insert("agree".into(), json!(row.agree));
                        m.insert(
                            "generator".into(),
                            row.generator
                                .as_ref()
                                .map(|h| Value::String(h.to_coeff_string()))
                                .unwrap_or(Value::Null),
                        );
                        Value::Object(m)
                    })
                    .collect();
                let mut m = Map::new();
                m.insert("lambda".into(), json_u64(lambda));
                m.insert("q".into(), json_u64(q));
                m.insert("subject".into(), json!(g.to_coeff_string()));
                m.insert("rows".into(), Value::Array(rows));
                m.insert("allAgree".into(), json!(report.all_agree));
                Value::Object(m).to_string()
            } else {
                let mut out = format!(
                    "oracle agreement for {} against divisors of q={q}:\n",
                    g.to_alpha_string()
                );
                for row in &report.rows {
                    let oracle = match row.oracle_divides {
                        Some(o) => format!("oracle={o}"),
                        None => "oracle=n/a (no generator within budget)".to_string(),
                    };
                    out.push_str(&format!(
                        "  {}  divides={}  {}  agree={}\n",
                        row.divisor, row.divides, oracle, row.agree
                    ));
                }
                out.push_str(&format!("all agree: {}", report.all_agree));
                out
            };
            if !report.all_agree {
                return Err(Failure::internal(format!(
                    "oracle disagreement detected:\n{output}"
                )));
            }
            Ok(output)
        }

        Command::Sweep {
            lambda,
            q_max,
            budget: budget_args,
        } => {
            check_lambda(lambda, allow_large)?;
            if q_max < 2 {
                return Err(Failure::input("q-max must be at least 2"));
            }
            let b = budget(&budget_args)?;
            sweep(lambda, q_max, &b, &budget_args, json_out)
        }

        Command::Geometry(geo) => geometry(geo, json_out),
    }
}

fn sweep(
    lambda: u64,
    q_max: u64,
    b: &SearchBudget,
    budget_args: &BudgetArgs,
    json_out: bool,
) -> Result<String, Failure> {
    let census = generator_census(lambda, q_max, b)?;
    let one_minus_alpha = {
        let mut raw = vec![0i64; lambda as usize];
        raw[0] = 1;
        raw[1] = -1;
        CyclotomicInteger::from_i64_coeffs(lambda, &raw)
            .map_err(Failure::from)?
    };

    let mut lines: Vec<String> = Vec::new();
    if !json_out {
        lines.push(format!(
            "lambda={lambda} qmax={q_max} budget support={} bound={} cap={}",
            budget_args.support, budget_args.bound, budget_args.max_candidates
        ));
    }

    // census skips q = lambda; interleave its ramified row at the right spot
    let mut census_iter = census.into_iter().peekable();
    for q in 2..=q_max {
        if !kummer_core::is_prime_u64(q) {
            continue;
        }
        if q == lambda {
            if json_out {
                let mut m = Map::new();
                m.insert("q".into(), json_u64(q));
                m.insert("kind".into(), json!("lambda"));
                m.insert(
                    "divisors".into(),
                    json!([{
                        "status": "actual",
                        "generator": one_minus_alpha.to_coeff_string(),
                    }]),
                );
                lines.push(Value::Object(m).to_string());
            } else {
                lines.push(format!("q={q}  lambda-divisor (ramified)"));
                lines.push(format!(
                    "  1-alpha  generator={}",
                    one_minus_alpha.to_coeff_string()
                ));
            }
            continue;
        }
        let (cq, rows) = census_iter
            .next()
            .ok_or_else(|| Failure::internal("census ran out of primes".to_string()))?;
        if cq != q {
            return Err(Failure::internal(format!(
                "census order mismatch: expected {q}, got {cq}"
            )));
        }
        let f = rows[0].0.f();
        let e = rows[0].0.e();
        let u = rows[0].0.u_rotated().unwrap_or_default();
        // unrotate to the canonical tuple (shift 0 row)
        if json_out {
            let mut m = Map::new();
            m.insert("q".into(), json_u64(q));
            m.insert("f".into(), json_u64(f as u64));
            m.insert("e".into(), json_u64(e as u64));
            m.insert(
                "u".into(),
                Value::Array(u.iter().map(|&x| json_u64(x)).collect()),
            );
            let divisors: Vec<Value> = rows
                .iter()
                .map(|(p, outcome)| {
                    let mut d = Map::new();
                    d.insert("shift".into(), json_u64(p.shift() as u64));
                    if let Some(xi) = p.xi() {
                        d.insert("xi".into(), json_u64(xi));
                    }
                    let (status, generator) = match outcome {
                        SearchOutcome::Found(h) => ("found", Some(h.to_coeff_string())),
                        SearchOutcome::Exhausted => ("absent-exhausted", None),
                        SearchOutcome::Capped => ("absent-capped", None),
                    };
                    d.insert("status".into(), json!(status));
                    d.insert(
                        "generator".into(),
                        generator.map(Value::String).unwrap_or(Value::Null),
                    );
                    Value::Object(d)
                })
                .collect();
            m.insert("divisors".into(), Value::Array(divisors));
            lines.push(Value::Object(m).to_string());
        } else {
            lines.push(format!(
                "q={q}  f={f} e={e} u={}",
                u_tuple_string(&u)
            ));
            for (p, outcome) in &rows {
                let label = match p.xi() {
                    Some(xi) => format!("shift={} xi={xi}", p.shift()),
                    None => format!("shift={}", p.shift()),
                };
                let desc = match outcome {
                    SearchOutcome::Found(h) => format!("generator={}", h.to_coeff_string()),
                    SearchOutcome::Exhausted => {
                        "absent (exhausted at budget; bounded evidence, not proof)".to_string()
                    }
                    SearchOutcome::Capped => {
                        "absent (candidate cap reached; bounded evidence, not proof)".to_string()
                    }
                };
                lines.push(format!("  {label}  {desc}"));
            }
        }
    }
    Ok(lines.join("\n"))
}

fn geometry(cmd: GeometryCommand, json_out: bool) -> Result<String, Failure> {
    match cmd {
        GeometryCommand::RadicalAxis { c1, c2 } => {
            let c1 = parse_circle(&c1)?;
            let c2 = parse_circle(&c2)?;
            let axis = radical_axis(&c1, &c2)?;
            let chord = common_chord_line(&c1, &c2)?;
            let agree = chord.as_ref().is_none_or(|ch| ch.line == axis);
            let output = if json_out {
                let mut m = Map::new();
                m.insert("radicalAxis".into(), json_line(&axis));
                m.insert(
                    "commonChord".into(),
                    match &chord {
                        Some(ch) => {
                            let mut c = Map::new();
                            c.insert("line".into(), json_line(&ch.line));
                            c.insert("foot".into(), json_point(&ch.foot));
                            c.insert("halfDistanceSq".into(), json_rat(&ch.half_distance_sq));
                            Value::Object(c)
                        }
                        None => Value::Null,
                    },
                );
                m.insert("agree".into(), json!(agree));
                Value::Object(m).to_string()
            } else {
                let mut out = format!("radical axis: {axis}\n");
                match &chord {
                    Some(ch) => out.push_str(&format!(
                        "common chord: present — line {}, foot ({}, {}), half-distance^2 = {}\n",
                        ch.line, ch.foot.x, ch.foot.y, ch.half_distance_sq
                    )),
                    None => out.push_str(
                        "common chord: absent (circles do not meet in two real points)\n",
                    ),
                }
                out.push_str(&format!("agree: {agree}"));
                out
            };
            if !agree {
                return Err(Failure::internal(format!(
                    "contingent and permanent definitions disagree:\n{output}"
                )));
            }
            Ok(output)
        }

        GeometryCommand::Chord { a, b, x0 } => {
            let a = parse_rational(&a)?;
            let b = parse_rational(&b)?;
            let x0 = parse_rational(&x0)?;
            let cfg = chord_configuration(&a, &b, &x0)?;
            let section = match cfg.kind() {
                ChordKind::Tangent => None,
                _ => Some(kummer_core::verify_section_relation(&cfg)?),
            };
            let power = verify_chord_power_relation(&cfg);
            let carrier = cfg.endpoints_on_carrier_conic();
            if section == Some(false) || !power || !carrier {
                return Err(Failure::internal(
                    "a chord-configuration theorem check failed".to_string(),
                ));
            }
            if json_out {
                let mut m = Map::new();
                m.insert("aAxis".into(), json_rat(&a));
                m.insert("bAxis".into(), json_rat(&b));
                m.insert("x0".into(), json_rat(&x0));
                m.insert("kind".into(), json!(cfg.kind().as_str()));
                m.insert("A".into(), json_point(&cfg.a_point()));
                m.insert("B".into(), json_point(&cfg.b_point()));
                m.insert("O".into(), json_point(&cfg.o_point()));
                m.insert("OPrime".into(), json_point(&cfg.o_prime_point()));
                m.insert("halfChordSq".into(), json_rat(cfg.half_chord_sq()));
                m.insert("sectionConstant".into(), json_rat(&cfg.section_constant()));
                m.insert(
                    "sectionRelation".into(),
                    section.map(Value::Bool).unwrap_or(Value::Null),
                );
                m.insert("chordPowerRelation".into(), json!(power));
                m.insert("endpointsOnCarrierConic".into(), json!(carrier));
                Ok(Value::Object(m).to_string())
            } else {
                let mut out = format!(
                    "ellipse semi-axes a={a} b={b}, vertical secant x={x0}\nkind: {}\n",
                    cfg.kind().as_str()
                );
                out.push_str(&format!(
                    "A=({}, 0)  B=({}, 0)  O=({}, 0)  O'=({}, 0)\n",
                    cfg.a_point().x,
                    cfg.b_point().x,
                    cfg.o_point().x,
                    cfg.o_prime_point().x
                ));
                out.push_str(&format!(
                    "half-chord^2 = {}, section constant = {}\n",
                    cfg.half_chord_sq(),
                    cfg.section_constant()
                ));
                match section {
                    Some(s) => out.push_str(&format!("section relation O'A/O'B = OA/OB: {s}\n")),
                    None => out.push_str("section relation: n/a (tangent)\n"),
                }
                out.push_str(&format!("chord power relation: {power}\n"));
                let conic = match cfg.kind() {
                    ChordKind::Ideal => "supplementary conic x^2/a^2 - y^2/b^2 = 1",
                    _ => "ellipse",
                };
                out.push_str(&format!("endpoints on {conic}: {carrier}"));
                Ok(out)
            }
        }
    }
}

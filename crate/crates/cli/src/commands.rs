use std::path::Path;

use qkrull::qring::{deg_t, split_last_variable, CqlOutcome, TPoly};
use qkrull::verify::{diff_reports, run_corpus, CorpusSpec, PropertyId};
use qkrull::{Polynomial, QuotientRing, RIdeal};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Query, VerifyArgs};
use crate::{dot, load, schema, CliError, CliResult, Outcome, RingFile, EXIT_VERIFY};

fn pretty_json(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json serializes"))
}

pub fn dispatch(cli: Cli) -> CliResult<Outcome> {
    if cli.json_schema {
        return Ok(Outcome::ok(pretty_json(&schema::all())));
    }
    match cli.command {
        None => Err(CliError::Usage("no command given; try --help".into())),
        Some(Command::Analyze { file, pretty }) => analyze(&file, pretty),
        Some(Command::Query { file, query }) => {
            let (rf, r) = load(&file)?;
            query_cmd(&rf, &r, query)
        }
        Some(Command::Dot { file }) => {
            let (_, r) = load(&file)?;
            Ok(Outcome::ok(dot::render(&r)?))
        }
        Some(Command::Verify(args)) => verify(args),
        Some(Command::Fmt { file }) => {
            let text = std::fs::read_to_string(&file).map_err(|e| CliError::io(&file, e))?;
            Ok(Outcome::ok(RingFile::parse(&text)?.print()))
        }
    }
}

fn analyze(file: &Path, pretty: bool) -> CliResult<Outcome> {
    let (_, r) = load(file)?;
    let a = r.analyze()?;
    let v = a.to_json(&r)?;
    if !pretty {
        return Ok(Outcome::ok(pretty_json(&v)));
    }
    let pr = r.poly_ring();
    let show = |ps: &[qkrull::PrimeRep]| -> CliResult<String> {
        Ok(ps.iter().map(|p| p.render(pr)).collect::<Result<Vec<_>, _>>()?.join(" "))
    };
    let mut out = format!("ring       {}\n", r.presentation());
    out.push_str(&format!("dim        {}\n", a.dim));
    out.push_str(&format!("q-dim      {}\n", a.q_dim));
    out.push_str(&format!("Ass        {}\n", show(&a.ass)?));
    out.push_str(&format!("Min        {}\n", show(&a.min_primes)?));
    out.push_str(&format!("q-Max      {}\n", show(&a.q_max)?));
    for (p, h) in a.ass.iter().zip(&a.heights) {
        out.push_str(&format!("height     {} = {h}\n", p.render(pr)?));
    }
    out.push_str(&format!("reduced    {}\n", a.reduced));
    out.push_str(&format!("tau_q-vNr  {}\n", a.tau_q_vnr));
    if a.tainted {
        out.push_str("tainted    true (primes taken from a supplied decomposition)\n");
    }
    Ok(Outcome::ok(out))
}

/// A named ideal of the file or a generator list.
fn resolve_ideal(rf: &RingFile, r: &QuotientRing, arg: &str) -> CliResult<RIdeal> {
    let gens = match rf.named(arg.trim()) {
        Some(g) => g.to_vec(),
        None => r.poly_ring().parse_list(arg)?,
    };
    Ok(r.ideal(gens))
}

fn generators(r: &QuotientRing, a: &RIdeal) -> CliResult<Value> {
    Ok(json!({ "generators": r.render_ideal(a)? }))
}

/// Parses a polynomial over `R[t]` and splits it by powers of `t`.
fn parse_tpoly(r: &QuotientRing, ext: &QuotientRing, src: &str) -> CliResult<TPoly> {
    let f: Polynomial = ext.poly_ring().parse(src)?;
    Ok(split_last_variable(ext.poly_ring(), r.poly_ring(), &f)?)
}

fn query_cmd(rf: &RingFile, r: &QuotientRing, q: Query) -> CliResult<Outcome> {
    let v = match q {
        Query::Dense { ideal } => json!({ "dense": r.is_dense(&resolve_ideal(rf, r, &ideal)?)? }),
        Query::Semiregular { ideal } => json!({ "semiregular": r.is_semiregular(&resolve_ideal(rf, r, &ideal)?)? }),
        Query::QclosureMember { ideal, element } => {
            let a = resolve_ideal(rf, r, &ideal)?;
            let e = r.poly_ring().parse(&element)?;
            json!({ "member": r.q_closure_member(&a, &e)? })
        }
        Query::Qclosure { ideal } => {
            let a = resolve_ideal(rf, r, &ideal)?;
            generators(r, &r.q_closure(&a)?)?
        }
        Query::Ann { ideal } => {
            let a = resolve_ideal(rf, r, &ideal)?;
            generators(r, &r.annihilator(&a)?)?
        }
        Query::Height { prime } => {
            let a = resolve_ideal(rf, r, &prime)?;
            let p = r.prime_from_generators(r.ideal_generators(&a)?)?;
            json!({ "height": r.height(&p)? })
        }
        Query::Extend => {
            let ext = r.extend_poly()?;
            json!({
                "ring": ext.presentation(),
                "analysis": ext.analyze()?.to_json(&ext)?,
            })
        }
        Query::DmCheck { g, f } => {
            let ext = r.extend_poly()?;
            let (g, f) = (parse_tpoly(r, &ext, &g)?, parse_tpoly(r, &ext, &f)?);
            let k = r.dm_check(&g, &f)?;
            json!({ "k": k, "deg_t_f": deg_t(r, &f)? })
        }
        Query::ContentLemma { g, f } => {
            let ext = r.extend_poly()?;
            let (g, f) = (parse_tpoly(r, &ext, &g)?, parse_tpoly(r, &ext, &f)?);
            let (outcome, reason) = match r.content_q_lemma_check(&g, &f)? {
                CqlOutcome::Pass => ("pass", None),
                CqlOutcome::Fail(m) => ("fail", Some(m)),
                CqlOutcome::Skipped(m) => ("skipped", Some(m)),
            };
            let out = Outcome::ok(pretty_json(&json!({ "outcome": outcome, "reason": reason })));
            return Ok(if outcome == "fail" { Outcome { code: EXIT_VERIFY, ..out } } else { out });
        }
    };
    Ok(Outcome::ok(pretty_json(&v)))
}

fn verify(args: VerifyArgs) -> CliResult<Outcome> {
    let mut spec = CorpusSpec { seed: args.seed, n_random: args.count, ..CorpusSpec::default() };
    spec.suite = args
        .suite
        .iter()
        .map(|s| s.trim().parse::<PropertyId>().map_err(|_| CliError::Usage(format!("unknown property `{s}`"))))
        .collect::<CliResult<_>>()?;
    if !args.families.is_empty() {
        spec.named_families = if args.families.iter().any(|f| f == "none") {
            Vec::new()
        } else {
            args.families.iter().map(|s| s.trim().to_string()).collect()
        };
    }
    if let Some(d) = args.draws {
        spec.dm_draws = d;
    }
    if let Some(d) = args.random_draws {
        spec.dm_draws_random = d;
    }
    let report = run_corpus(&spec).map_err(|e| match e {
        qkrull::Error::Structural(m) => CliError::Usage(m),
        e => CliError::Lib(e),
    })?;
    let text = format!("{}\n", report.to_json());
    if let Some(path) = &args.out {
        std::fs::write(path, &text).map_err(|e| CliError::io(path, e))?;
    }
    let s = &report.summary;
    let mut stderr = format!("{} pass, {} fail, {} skip\n", s.pass, s.fail, s.skip);
    let mut code = if report.failed() { EXIT_VERIFY } else { 0 };
    if let Some(path) = &args.expect {
        let expected = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let diff = diff_reports(&expected, &text);
        if !diff.is_empty() {
            stderr.push_str(&format!("report differs from {}:\n", path.display()));
            for line in diff {
                stderr.push_str(&line);
                stderr.push('\n');
            }
            code = EXIT_VERIFY;
        }
    }
    let stdout = if args.pretty { report.render_table() } else { text };
    Ok(Outcome { stdout, stderr, code })
}

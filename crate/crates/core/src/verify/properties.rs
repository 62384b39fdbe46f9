use crate::error::Result;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::Monomial;
use crate::qring::{deg_t, CqlOutcome, QuotientRing, RIdeal, TPoly};

use super::random::{monomials_up_to, random_monomial, random_monomial_ideal, random_tpoly, rng_for};
use super::{CorpusRing, CorpusSpec, PropertyId, Verdict};

const DRAW_STREAM: u64 = 2_000_000;
const CLOSURE_STREAM: u64 = 3_000_000;
/// Bounds for the content-lemma draws.
const DRAW_T_DEGREE: usize = 3;
const DRAW_COEFF_DEGREE: u32 = 2;

pub(super) fn run(entry: &CorpusRing, id: PropertyId, spec: &CorpusSpec) -> Result<Verdict> {
    let r = &entry.ring;
    let name = entry.id.as_str();
    let check = |ok: bool, v: Verdict, why: &str| if ok { v } else { fail_like(v, why, r) };
    Ok(match id {
        PropertyId::QLeq => {
            let (q, d) = (r.q_dim()?, r.dim()?);
            check(q as i32 <= d, Verdict::pass(id, name).with("q_dim", q).with("dim", d), "q_dim > dim")
        }
        PropertyId::Vnr => {
            let vnr = r.is_tau_q_vnr()?;
            let (reduced, q) = (r.is_reduced()?, r.q_dim()?);
            let by_ass = reduced && r.max_ass_are_minimal()?;
            let v = Verdict::pass(id, name)
                .with("tau_q_vnr", vnr)
                .with("reduced", reduced)
                .with("dim", r.dim()?)
                .with("q_dim", q);
            check(vnr == (reduced && q == 0) && vnr == by_ass, v, "characterizations disagree")
        }
        PropertyId::Nil => {
            if !r.is_monomial() {
                return Ok(Verdict::skip(id, name, "nilradical quotient needs a monomial defining ideal"));
            }
            let (q, qn) = (r.q_dim()?, r.quotient_by_nil()?.q_dim()?);
            let strict = embedded_index(name).is_none() || q > qn;
            let v = Verdict::pass(id, name).with("q_dim", q).with("q_dim_nil", qn);
            check(q >= qn && strict, v, "q_dim(R) < q_dim(R/Nil), or not strict on the embedded family")
        }
        PropertyId::Min => {
            let n = r.analyze()?.min_count;
            check(n > 0, Verdict::pass(id, name).with("min_count", n), "no minimal primes")
        }
        PropertyId::Cor25 => {
            if !r.is_monomial() {
                return Ok(Verdict::skip(id, name, "chain oracle needs a monomial defining ideal"));
            }
            let (q, oracle) = (r.q_dim()?, r.q_dim_chain_oracle()?);
            let by_ass: Vec<_> = r.q_max()?.iter().filter_map(|p| p.as_monomial()).collect();
            let same_max = by_ass == r.q_max_by_enumeration()?;
            let v = Verdict::pass(id, name).with("q_dim", q).with("chain_oracle", oracle);
            check(q == oracle && same_max, v, "heights of associated primes disagree with the chain oracle")
        }
        PropertyId::Rem28 => {
            let Some(n) = embedded_index(name) else {
                return Ok(Verdict::skip(id, name, "not a member of the embedded-prime family"));
            };
            let q = r.q_dim()?;
            let m = r.q_max()?;
            let ht = if m.len() == 1 { r.height(&m[0])? } else { usize::MAX };
            let nil = r.quotient_by_nil()?;
            let (qn, vnr) = (nil.q_dim()?, nil.is_tau_q_vnr()?);
            let v = Verdict::pass(id, name)
                .with("n", n)
                .with("q_dim", q)
                .with("dim", r.dim()?)
                .with("ht_m", ht)
                .with("q_dim_nil", qn)
                .with("nil_tau_q_vnr", vnr);
            let ok = q == n && r.dim()? == n as i32 && ht == n && !r.is_reduced()? && qn == 0 && vnr;
            check(ok, v, "family values differ from q_dim = ht(m) = n")
        }
        PropertyId::Dm => dedekind_mertens(entry, spec)?,
        PropertyId::Cql => content_lemma(entry, spec)?,
        PropertyId::MaxExt => {
            let ext = r.extend_poly()?;
            let lifted = r.q_max()?.iter().map(|p| r.extend_prime(p, &ext)).collect::<Result<Vec<_>>>()?;
            let ok = ext.same_prime_sets(&ext.q_max()?, &lifted)?;
            check(ok, Verdict::pass(id, name).with("q_max", lifted.len()), "q_max(R[t]) differs from extended q_max(R)")
        }
        PropertyId::Bounds => {
            let (q, qe) = (r.q_dim()?, r.extend_poly()?.q_dim()?);
            let v = Verdict::pass(id, name).with("q_dim", q).with("q_dim_ext", qe);
            check(q <= qe && qe <= 2 * q, v, "bounds violated")
        }
        PropertyId::Noeth => {
            let (q, qe) = (r.q_dim()?, r.extend_poly()?.q_dim()?);
            let v = Verdict::pass(id, name).with("q_dim", q).with("q_dim_ext", qe);
            check(q == qe, v, "q_dim(R[t]) != q_dim(R)")
        }
        PropertyId::HtExt => {
            let ext = r.extend_poly()?;
            let mut heights = Vec::new();
            let mut ok = true;
            for p in r.q_max()? {
                let (h, he) = (r.height(&p)?, ext.height(&r.extend_prime(&p, &ext)?)?);
                ok &= h == he;
                heights.push(vec![h, he]);
            }
            check(ok, Verdict::pass(id, name).with("heights", heights), "height changed under extension")
        }
        PropertyId::Closure => closure_laws(entry, spec)?,
    })
}

fn fail_like(v: Verdict, why: &str, r: &QuotientRing) -> Verdict {
    let mut f = Verdict::fail(v.property, &v.ring, why).with("ring", r.presentation());
    f.payload.extend(v.payload);
    f
}

fn embedded_index(id: &str) -> Option<usize> {
    id.strip_prefix("embedded-")?.parse().ok()
}

/// The seeded `(g, f)` pairs shared by the two content-lemma properties.
pub fn content_draws(entry: &CorpusRing, spec: &CorpusSpec) -> Vec<(TPoly, TPoly)> {
    let count = if entry.named { spec.dm_draws } else { spec.dm_draws_random };
    let mut rng = rng_for(spec.seed, DRAW_STREAM + entry.index);
    let ring = entry.ring.poly_ring();
    (0..count)
        .map(|_| {
            let g = random_tpoly(&mut rng, ring, DRAW_T_DEGREE, DRAW_COEFF_DEGREE);
            let f = random_tpoly(&mut rng, ring, DRAW_T_DEGREE, DRAW_COEFF_DEGREE);
            (g, f)
        })
        .collect()
}

fn show(r: &QuotientRing, g: &[crate::poly::Polynomial]) -> Vec<String> {
    g.iter().map(|c| r.poly_ring().render(c)).collect()
}

fn dedekind_mertens(entry: &CorpusRing, spec: &CorpusSpec) -> Result<Verdict> {
    let r = &entry.ring;
    let id = PropertyId::Dm;
    let pairs = content_draws(entry, spec);
    let mut max_k = 0;
    for (g, f) in &pairs {
        let bound = deg_t(r, f)?.unwrap_or(0);
        let k = match r.dm_check(g, f) {
            Ok(k) => k,
            Err(e) => {
                return Ok(Verdict::fail(id, &entry.id, e.to_string())
                    .with("ring", r.presentation())
                    .with("g", show(r, g))
                    .with("f", show(r, f)))
            }
        };
        if k > bound {
            return Ok(Verdict::fail(id, &entry.id, "k exceeds deg_t(f)")
                .with("ring", r.presentation())
                .with("g", show(r, g))
                .with("f", show(r, f))
                .with("k", k));
        }
        max_k = max_k.max(k);
    }
    Ok(Verdict::pass(id, &entry.id).with("draws", pairs.len()).with("max_k", max_k))
}

fn content_lemma(entry: &CorpusRing, spec: &CorpusSpec) -> Result<Verdict> {
    let r = &entry.ring;
    let id = PropertyId::Cql;
    let pairs = content_draws(entry, spec);
    let (mut checked, mut skipped) = (0usize, 0usize);
    for (g, f) in &pairs {
        match r.content_q_lemma_check(g, f)? {
            CqlOutcome::Pass => checked += 1,
            CqlOutcome::Skipped(_) => skipped += 1,
            CqlOutcome::Fail(why) => {
                return Ok(Verdict::fail(id, &entry.id, why)
                    .with("ring", r.presentation())
                    .with("g", show(r, g))
                    .with("f", show(r, f)))
            }
        }
    }
    if checked == 0 && !pairs.is_empty() {
        return Ok(Verdict::skip(id, &entry.id, "c(g) was never semiregular").with("skipped", skipped));
    }
    Ok(Verdict::pass(id, &entry.id).with("checked", checked).with("skipped", skipped))
}

fn closure_laws(entry: &CorpusRing, spec: &CorpusSpec) -> Result<Verdict> {
    let r = &entry.ring;
    let id = PropertyId::Closure;
    if !r.is_monomial() {
        return Ok(Verdict::skip(id, &entry.id, "ideal q-closure needs a monomial defining ideal"));
    }
    let n = r.nvars();
    let ring = r.poly_ring();
    let mut rng = rng_for(spec.seed, CLOSURE_STREAM + entry.index);
    let to_r = |m: &MonomialIdeal| r.ideal(m.gens().iter().map(|&g| ring.monomial(g)).collect());
    let a_mono = if n == 0 { MonomialIdeal::zero(0) } else { random_monomial_ideal(&mut rng, n, 3, 3) };
    let b_mono = if n == 0 {
        MonomialIdeal::unit(0)
    } else {
        let d = rand::Rng::gen_range(&mut rng, 1..=3);
        a_mono.with_generator(random_monomial(&mut rng, n, d))
    };
    let chain: Vec<RIdeal> = vec![r.zero_ideal(), to_r(&a_mono), to_r(&b_mono)];
    // monomials of degree <= 4 in the first three variables
    let probe_vars = n.min(3);
    let probes: Vec<_> = monomials_up_to(probe_vars, 4)
        .into_iter()
        .map(|m| {
            let mut e = m.exponents().to_vec();
            e.resize(n, 0);
            ring.monomial(Monomial::from_exponents(&e).expect("small exponents"))
        })
        .collect();

    let fail = |why: String| Ok(Verdict::fail(id, &entry.id, why).with("ring", r.presentation()));
    let mut closures = Vec::new();
    for a in &chain {
        let cl = r.q_closure(a)?;
        let gens = r.render_ideal(a)?;
        if !r.ideal_le(a, &cl)? {
            return fail(format!("A not contained in its closure for A = {gens:?}"));
        }
        if !r.ideal_equal(&r.q_closure(&cl)?, &cl)? {
            return fail(format!("closure not idempotent for A = {gens:?}"));
        }
        for m in &probes {
            if cl.preimage().contains(m)? != r.q_closure_member(a, m)? {
                return fail(format!("member oracle disagrees at {} for A = {gens:?}", ring.render(m)));
            }
        }
        closures.push(cl);
    }
    for w in closures.windows(2) {
        if !r.ideal_le(&w[0], &w[1])? {
            return fail("closure not monotone".to_string());
        }
    }
    Ok(Verdict::pass(id, &entry.id).with("ideals", chain.len()).with("probes", probes.len()))
}

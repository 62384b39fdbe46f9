//! DOT rendering of the poset of monomial primes containing `I`.
//!
//! Nodes are listed by height then variables; edges are the covering
//! relations `p ⊂ p + (x_i)`, drawn from smaller to larger. Each node is
//! labelled `semiregular` or `q-ideal`; the maximal q-ideals are
//! double-circled.

use qkrull::{MonomialPrime, PrimeRep, QuotientRing};

use crate::{CliError, CliResult};

pub fn render(r: &QuotientRing) -> CliResult<String> {
    let Some(i) = r.monomial_ideal() else {
        return Err(CliError::Lib(qkrull::Error::capability(
            "the prime poset is only drawn for monomial defining ideals",
        )));
    };
    let names = r.poly_ring().var_names();
    let primes: Vec<MonomialPrime> = i.primes_containing();
    let q_max: Vec<MonomialPrime> = r.q_max()?.iter().filter_map(PrimeRep::as_monomial).collect();

    let mut out = String::from("digraph primes {\n  rankdir=BT;\n  node [shape=circle];\n");
    for (k, p) in primes.iter().enumerate() {
        let semi = r.is_semiregular(&r.monomial_prime_ideal(*p))?;
        let shape = if q_max.contains(p) { "doublecircle" } else { "circle" };
        let kind = if semi { "semiregular" } else { "q-ideal" };
        out.push_str(&format!("  p{k} [label=\"{}\\n{kind}\", shape={shape}];\n", p.render(names)));
    }
    for (a, p) in primes.iter().enumerate() {
        for (b, q) in primes.iter().enumerate() {
            if (q.mask() & !p.mask()).count_ones() == 1 && q.mask() & p.mask() == p.mask() {
                out.push_str(&format!("  p{a} -> p{b};\n"));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

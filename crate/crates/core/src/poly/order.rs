use std::cmp::Ordering;

use super::monomial::Monomial;

/// A global monomial order. Variable 0 is the largest variable in every kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Grevlex on the first `n` variables, ties broken by grevlex on the rest.
    /// Any monomial involving the first block beats every monomial free of it.
    Block(usize),
}

fn block_degree(m: &Monomial, lo: usize, hi: usize) -> u32 {
    m.exponents()[lo..hi].iter().map(|&e| e as u32).sum()
}

/// Grevlex restricted to variables `lo..hi`, given the degrees there.
fn grevlex_tail(a: &Monomial, b: &Monomial, lo: usize, hi: usize, da: u32, db: u32) -> Ordering {
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        let (ea, eb) = (a.exponent(i), b.exponent(i));
        if ea != eb {
            // smaller exponent in the last differing variable wins
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let n = a.nvars();
        match *self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Grevlex => grevlex_tail(a, b, 0, n, a.degree(), b.degree()),
            MonomialOrder::Block(k) => {
                let k = k.min(n);
                let (fa, fb) = (block_degree(a, 0, k), block_degree(b, 0, k));
                grevlex_tail(a, b, 0, k, fa, fb)
                    .then_with(|| grevlex_tail(a, b, k, n, a.degree() - fa, b.degree() - fb))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn lex_vs_grevlex() {
        let xy = m(&[1, 1]);
        let y3 = m(&[0, 3]);
        assert_eq!(MonomialOrder::Lex.cmp(&xy, &y3), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&xy, &y3), Ordering::Less);
    }

    #[test]
    fn grevlex_tiebreak() {
        // x^2 > xy > y^2 > xz > yz > z^2 in grevlex with x > y > z
        let seq = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert_eq!(MonomialOrder::Grevlex.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} vs {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn block_eliminates_first_block() {
        let t = m(&[1, 0, 0]);
        let big = m(&[0, 5, 5]);
        assert_eq!(MonomialOrder::Block(1).cmp(&t, &big), Ordering::Greater);
    }
}

use serde::Serialize;

use crate::poly::Monomial;

/// `dim k[X]/I` together with a maximal independent variable set.
///
/// `dim == -1` encodes the unit ideal (empty witness). Otherwise the witness
/// has exactly `dim` variables and no leading monomial of `I` lies in
/// `k[witness]`. Among independent sets of maximal size the witness is the
/// lexicographically smallest list of variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCertificate {
    pub dim: i32,
    pub witness: Vec<usize>,
}

fn mask_to_vars(mask: u32) -> Vec<usize> {
    (0..16).filter(|i| mask & (1 << i) != 0).collect()
}

/// Independent-set dimension of a monomial (leading-term) ideal.
pub fn dimension_of_leading_terms(nvars: usize, lms: &[Monomial]) -> DimensionCertificate {
    if lms.iter().any(|m| m.is_one()) {
        return DimensionCertificate { dim: -1, witness: Vec::new() };
    }
    let supports: Vec<u32> = lms.iter().map(|m| m.support() as u32).collect();
    let mut best: Option<(u32, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << nvars) {
        if supports.iter().any(|&s| s & !mask == 0) {
            continue;
        }
        let size = mask.count_ones();
        let vars = mask_to_vars(mask);
        let better = match &best {
            None => true,
            Some((bs, bv)) => size > *bs || (size == *bs && vars < *bv),
        };
        if better {
            best = Some((size, vars));
        }
    }
    let (size, witness) = best.expect("the empty set is independent for proper ideals");
    DimensionCertificate { dim: size as i32, witness }
}

//! Topological K-groups of a Calabi-Yau threefold from its integral
//! homology.

use crate::error::{Error, Result};
use crate::invariants::IntegralHomology;
use crate::linalg::AbelianGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGroups {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
}

/// `H^k = Z^{b_k} ⊕ Tor H_{k-1}`.
pub fn cohomology(h: &IntegralHomology, k: usize) -> AbelianGroup {
    let free = AbelianGroup::free(h.betti(k));
    if k == 0 {
        free
    } else {
        free.direct_sum(&h.group(k - 1).torsion())
    }
}

/// `K^0 = H^0 ⊕ H^2 ⊕ H^4 ⊕ H^6` and `K^1 = H^1 ⊕ H^3 ⊕ H^5`.
pub fn k_groups(h: &IntegralHomology) -> Result<KGroups> {
    if !h.h3_rank_known() {
        return Err(Error::IncompleteHomology);
    }
    let sum = |degrees: &[usize]| {
        degrees
            .iter()
            .fold(AbelianGroup::trivial(), |acc, &k| acc.direct_sum(&cohomology(h, k)))
    };
    Ok(KGroups {
        k0: sum(&[0, 2, 4, 6]),
        k1: sum(&[1, 3, 5]),
    })
}

/// Whether `c_3` can be the third Chern class of a Calabi-Yau threefold
/// with this homology: `Sq^2` vanishes on `H^4` when `c_1 = 0`, forcing
/// `c_3` to be even.
pub fn chern_triple_admissible(_h: &IntegralHomology, c1_is_zero: bool, c3: i64) -> Result<bool> {
    if !c1_is_zero {
        return Err(Error::Unsupported(
            "Sq^2 on H^4 is only evaluated for vanishing first Chern class".into(),
        ));
    }
    Ok(c3 % 2 == 0)
}

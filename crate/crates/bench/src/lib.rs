//! Fixtures shared by the benchmarks.

use chainorder::{gt_poset, mco_hrep, DominantWeight, HPolytope, MarkedPoset, Partition, TypeTag};

pub fn rho_poset(t: TypeTag, n: usize) -> MarkedPoset {
    gt_poset(t, n, &DominantWeight::rho(t, n)).expect("rho is dominant")
}

/// Inequalities of the chain-order polytope of `k * rho` with a checkerboard partition.
pub fn checkerboard(t: TypeTag, n: usize, k: i64) -> HPolytope {
    let p = gt_poset(t, n, &DominantWeight::rho(t, n).scale(k)).expect("rho is dominant");
    let len = t.num_coords(n);
    mco_hrep(&p, &Partition::new((0..len).map(|i| i % 2 == 1).collect())).expect("partition length matches")
}

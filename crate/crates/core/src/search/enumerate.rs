//! Enumeration of t-vectors satisfying `d(d-1) = sum r(r-1) t_r`.
//!
//! Dividing by two, the identity says the `C(d,2)` line pairs are split among
//! the points, a point of multiplicity `r` taking `C(r,2)` of them. With the
//! counts for `r >= 3` chosen, `t_2` is whatever pairs remain.

/// `C(r, 2)`
pub(crate) fn pairs(r: u32) -> u64 {
    r as u64 * (r as u64 - 1) / 2
}

/// Number of identity-satisfying t-vectors on `d` lines whose multiplicities
/// `r >= 3` all satisfy `allowed`.
pub fn identity_vector_count(d: u32, allowed: impl Fn(u32) -> bool) -> u128 {
    let total = pairs(d) as usize;
    let mut ways = vec![0u128; total + 1];
    ways[0] = 1;
    for r in (3..=d).filter(|&r| allowed(r)) {
        let w = pairs(r) as usize;
        for s in w..=total {
            ways[s] += ways[s - w];
        }
    }
    ways.iter().sum()
}

/// Calls `visit` with the dense counts `t_2 ..= t_d` of every
/// identity-satisfying t-vector supported on `{2} ∪ allowed`.
pub fn for_each_identity_vector(d: u32, allowed: &[u32], mut visit: impl FnMut(&[u64])) {
    let mut dense = vec![0u64; d as usize - 1];
    let mut rs: Vec<u32> = allowed
        .iter()
        .copied()
        .filter(|&r| (3..=d).contains(&r))
        .collect();
    rs.sort_unstable_by(|a, b| b.cmp(a));
    rs.dedup();
    descend(&rs, pairs(d), &mut dense, &mut visit);
}

fn descend(rs: &[u32], remaining: u64, dense: &mut [u64], visit: &mut impl FnMut(&[u64])) {
    match rs.split_first() {
        None => {
            dense[0] = remaining;
            visit(dense);
            dense[0] = 0;
        }
        Some((&r, rest)) => {
            let w = pairs(r);
            let slot = r as usize - 2;
            for k in 0..=remaining / w {
                dense[slot] = k;
                descend(rest, remaining - k * w, dense, visit);
            }
            dense[slot] = 0;
        }
    }
}

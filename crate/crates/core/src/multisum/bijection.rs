use crate::error::{Error, Result};
use crate::partition::Partition;

/// Maps a partition with parts `<= k` to a partition of weight `|λ| + k²`
/// with exactly `k` parts and consecutive gaps of at least 2.
///
/// With `ν` the conjugate of `λ` padded with zeros to length `k`, the image is
/// `μ_j = ν_j + 2(k - j) + 1`.
pub fn rogers_ramanujan_map(lambda: &Partition, k: u64) -> Result<Partition> {
    if lambda.largest() > k {
        return Err(Error::Domain(format!(
            "part {} exceeds k = {k}",
            lambda.largest()
        )));
    }
    let conj = lambda.conjugate();
    let parts = (1..=k)
        .map(|j| {
            let nu = conj.parts().get(j as usize - 1).copied().unwrap_or(0);
            nu + 2 * (k - j) + 1
        })
        .collect();
    Partition::new(parts)
}

/// Inverse of [`rogers_ramanujan_map`]: recovers `λ` (parts `<= k`) from a
/// length-`k` partition with gaps of at least 2.
pub fn gap_two_to_bounded(mu: &Partition) -> Result<Partition> {
    let k = mu.len() as u64;
    let parts = mu.parts();
    if parts.windows(2).any(|w| w[0] < w[1] + 2) {
        return Err(Error::Domain(format!("{mu} has a gap smaller than 2")));
    }
    let mut nu = Vec::with_capacity(k as usize);
    for (idx, &p) in parts.iter().enumerate() {
        let j = idx as u64 + 1;
        let shift = 2 * (k - j) + 1;
        if p < shift {
            return Err(Error::Domain(format!("{mu} is below the staircase")));
        }
        if p > shift {
            nu.push(p - shift);
        }
    }
    Ok(Partition::new(nu)?.conjugate())
}

use super::fold::right_bundle;
use crate::error::{Error, Result};
use crate::hv::{bundle, hamming, RandomStream, State};

/// `d(y, L_t)` for `t = 1..=m`, where `L_0 = x` and `L_t = L_{t-1} ⊕p y`.
pub fn converge(
    x: &State,
    y: &State,
    p: f64,
    m: usize,
    stream: &mut RandomStream,
) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(Error::Empty("iteration count m"));
    }
    let mut current = x.clone();
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        current = bundle(&current, y, p, stream)?;
        out.push(hamming(y, &current)?);
    }
    Ok(out)
}

/// `d(y, R_t)` for `t = 1..=m`, where `R_t = x ⊕p (y ⊕p (... ⊕p y))` with `t`
/// copies of `y`. Each `R_t` is built from scratch with fresh noise.
pub fn converge_right(
    x: &State,
    y: &State,
    p: f64,
    m: usize,
    stream: &mut RandomStream,
) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(Error::Empty("iteration count m"));
    }
    (1..=m)
        .map(|t| {
            let ys = vec![y.clone(); t];
            hamming(y, &right_bundle(x, &ys, p, stream)?)
        })
        .collect()
}

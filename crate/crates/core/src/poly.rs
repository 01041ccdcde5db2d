//! Exact dense integer polynomials over `i64`, indexed by degree.
//!
//! Just enough arithmetic for Hilbert-series numerators: everything here is
//! exact; there is no floating point anywhere in the crate.

/// Remove trailing zero coefficients. The zero polynomial becomes `[]`.
pub fn normalize(mut coeffs: Vec<i64>) -> Vec<i64> {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

pub fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    normalize(out)
}

pub fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] -= c;
    }
    normalize(out)
}

pub fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    normalize(out)
}

/// Add `c * z^k` in place.
pub fn add_term(coeffs: &mut Vec<i64>, k: usize, c: i64) {
    if coeffs.len() <= k {
        coeffs.resize(k + 1, 0);
    }
    coeffs[k] += c;
}

/// `1 + z + ... + z^(n-1)`; `n <= 0` gives the zero polynomial.
pub fn geometric(n: i64) -> Vec<i64> {
    if n <= 0 {
        Vec::new()
    } else {
        vec![1; n as usize]
    }
}

pub fn eval_at_one(coeffs: &[i64]) -> i64 {
    coeffs.iter().sum()
}

/// Exact division by `(1 - z)`. Returns `None` when there is a remainder,
/// i.e. when the coefficient sum is nonzero.
pub fn div_one_minus_z(coeffs: &[i64]) -> Option<Vec<i64>> {
    if coeffs.is_empty() {
        return Some(Vec::new());
    }
    // (1 - z) * q = p  forces  q_k = p_0 + ... + p_k.
    let mut q = Vec::with_capacity(coeffs.len());
    let mut acc = 0i64;
    for &c in coeffs {
        acc += c;
        q.push(acc);
    }
    if acc != 0 {
        return None;
    }
    q.pop();
    Some(normalize(q))
}

/// Exact division by `(1 - z)^2`.
pub fn div_one_minus_z_squared(coeffs: &[i64]) -> Option<Vec<i64>> {
    div_one_minus_z(coeffs).and_then(|q| div_one_minus_z(&q))
}

/// `z^c * p(1/z)` for `deg(p) <= c`: the degree-reversal used by linkage.
pub fn reverse_at(coeffs: &[i64], c: usize) -> Vec<i64> {
    let mut out = vec![0i64; c + 1];
    for (k, &v) in coeffs.iter().enumerate() {
        assert!(k <= c, "reverse_at: degree exceeds c");
        out[c - k] = v;
    }
    normalize(out)
}

/// Render as a human-readable polynomial in `z`, e.g. `1 + 2z + 2z^2`.
pub fn to_string_in_z(coeffs: &[i64]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.abs();
        let body = match (k, mag) {
            (0, _) => format!("{mag}"),
            (1, 1) => "z".to_string(),
            (1, _) => format!("{mag}z"),
            (_, 1) => format!("z^{k}"),
            (_, _) => format!("{mag}z^{k}"),
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {}", if c < 0 { '-' } else { '+' }, body));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

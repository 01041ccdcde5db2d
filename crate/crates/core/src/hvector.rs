//! h-vector calculus for plane point schemes: the series-expansion oracle
//! from a Betti table, the closed form from a degree matrix, decreasing-type
//! analysis, the u/v/w/s profile, and the inversion back to the canonical
//! degree matrix with no zero entries.

use crate::error::{Error, Result};
use crate::matrix::{degree_matrix_from_betti, BettiTable, DegreeMatrix};
use crate::poly;
use serde::{Deserialize, Serialize};

/// Coefficients `h_0, ..., h_s` with `h_0 = 1`, `h_s != 0`, all nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HVectorJson", into = "HVectorJson")]
pub struct HVector(Vec<i64>);

#[derive(Serialize, Deserialize)]
struct HVectorJson {
    h: Vec<i64>,
}

impl TryFrom<HVectorJson> for HVector {
    type Error = Error;
    fn try_from(v: HVectorJson) -> Result<Self> {
        HVector::new(v.h)
    }
}

impl From<HVector> for HVectorJson {
    fn from(h: HVector) -> Self {
        HVectorJson { h: h.0 }
    }
}

impl HVector {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        let coeffs = poly::normalize(coeffs);
        if coeffs.is_empty() || coeffs[0] != 1 {
            return Err(Error::InvalidHVector("h_0 must be 1".into()));
        }
        if coeffs.iter().any(|&c| c < 0) {
            return Err(Error::InvalidHVector("coefficients must be nonnegative".into()));
        }
        Ok(Self(coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Top degree `s`.
    pub fn s(&self) -> usize {
        self.0.len() - 1
    }

    /// Number of points: the coefficient sum.
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Arithmetic genus of an aCM curve with this section h-vector:
    /// `sum_{i>=2} (i-1) h_i`.
    pub fn genus(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .skip(2)
            .map(|(i, &h)| (i as i64 - 1) * h)
            .sum()
    }

    /// Once strictly decreasing, always strictly decreasing.
    pub fn is_decreasing_type(&self) -> bool {
        let h = &self.0;
        for i in 0..h.len().saturating_sub(2) {
            if h[i] > h[i + 1] && h[i + 1] <= h[i + 2] {
                return false;
            }
        }
        true
    }

    /// Scan-based profile: `u = max{i : h_i = i+1}`, `v = max{i : h_i = u+1}`,
    /// `w = min{i in [v, s-1] : h_i - h_{i+1} != 1}` (absent when none).
    pub fn uvws(&self) -> Uvws {
        let h = &self.0;
        let s = self.s();
        let u = (0..=s)
            .filter(|&i| h[i] == i as i64 + 1)
            .max()
            .expect("h_0 = 1 always qualifies");
        let v = (0..=s)
            .filter(|&i| h[i] == u as i64 + 1)
            .max()
            .expect("i = u always qualifies");
        let w = (v..s).find(|&i| h[i] - h[i + 1] != 1);
        Uvws { u, v, w, s }
    }

    pub fn polynomial_string(&self) -> String {
        poly::to_string_in_z(&self.0)
    }
}

/// The u/v/w/s profile of an h-vector. Reporting data only; classification
/// goes through the degree-matrix inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Uvws {
    pub u: usize,
    pub v: usize,
    pub w: Option<usize>,
    pub s: usize,
}

/// Series-expansion oracle: the h-vector as the exact quotient of the table's
/// numerator by `(1-z)^2`.
///
/// This is the independent reference every other h-vector computation is
/// checked against.
pub fn hvector_from_betti(b: &BettiTable) -> Result<HVector> {
    if b.ambient() != 2 {
        return Err(Error::Shape("h-vector expansion needs a plane table".into()));
    }
    if b.gens().iter().any(|&d| d < 0) || b.syz().iter().any(|&m| m < 0) {
        return Err(Error::InvalidInput("negative shift in Betti table".into()));
    }
    let n = b.numerator();
    let q = poly::div_one_minus_z_squared(&n)
        .ok_or_else(|| Error::NotDivisible(format!("numerator {:?}", n)))?;
    if q.is_empty() || q[0] != 1 || q.iter().any(|&c| c < 0) {
        return Err(Error::NotDivisible(format!(
            "quotient {:?} is not an h-vector; the table is not one of points",
            q
        )));
    }
    HVector::new(q)
}

/// Closed form from the degree matrix:
/// `sum_i z^(a11+...+a(i-1,i-1)) (1+...+z^(a_ii - 1)) (1+...+z^(E_i))` with
/// `E_i = a(i+1,i+1)+...+a(t,t)+a(i,t+1) - 1`.
///
/// Always equals [`hvector_from_betti`] of the associated table; the oracle
/// identity is enforced in tests over full enumerations.
pub fn hvector_from_degree_matrix(m: &DegreeMatrix) -> HVector {
    let t = m.t();
    let mut acc: Vec<i64> = Vec::new();
    let mut prefix = 0i64; // a11 + ... + a(i-1,i-1)
    for i in 1..=t {
        let tail: i64 = ((i + 1)..=t).map(|k| m.entry(k, k)).sum();
        let top = tail + m.entry(i, t + 1) - 1;
        let term = poly::mul(&poly::geometric(m.entry(i, i)), &poly::geometric(top + 1));
        let mut shifted = vec![0i64; prefix as usize];
        shifted.extend(term);
        acc = poly::add(&acc, &shifted);
        prefix += m.entry(i, i);
    }
    HVector::new(acc).expect("the closed form of a degree matrix is a valid h-vector")
}

/// Invert an h-vector to its canonical degree matrix with no zero entries.
///
/// Reads generators (negative coefficients) and syzygies (positive
/// coefficients) off `N(z) = h(z) (1-z)^2` and rebuilds the matrix. Inputs
/// whose canonical matrix would need a zero entry hide a generator/syzygy
/// pair inside a zero coefficient of `N`; those are refused rather than
/// guessed.
pub fn degree_matrix_from_hvector(h: &HVector) -> Result<DegreeMatrix> {
    let n = poly::mul(h.coeffs(), &[1, -2, 1]);
    debug_assert_eq!(poly::eval_at_one(&n), 0);
    if n.first() != Some(&1) {
        return Err(Error::InvalidHVector("numerator must start with 1".into()));
    }
    let mut gens = Vec::new();
    let mut syz = Vec::new();
    for (k, &c) in n.iter().enumerate().skip(1) {
        if c < 0 {
            gens.extend(std::iter::repeat_n(k as i64, (-c) as usize));
        } else if c > 0 {
            syz.extend(std::iter::repeat_n(k as i64, c as usize));
        }
    }
    if gens.len() != syz.len() + 1 || syz.is_empty() {
        return Err(Error::AmbiguousInversion(format!(
            "{} generators against {} syzygies: a generator/syzygy pair cancelled in the numerator",
            gens.len(),
            syz.len()
        )));
    }
    let table = BettiTable::plane(gens, syz)?;
    let base = degree_matrix_from_betti(&table)?;
    let m = DegreeMatrix::new(base)
        .map_err(|_| Error::InvalidHVector("inverted matrix has a nonpositive diagonal".into()))?;
    if hvector_from_degree_matrix(&m) != *h {
        return Err(Error::AmbiguousInversion(
            "round trip failed: the numerator hides cancelled Betti numbers".into(),
        ));
    }
    Ok(m)
}

/// h-vector of `d` generic points: `1 + 2z + ... + n z^(n-1) + s z^n` with
/// `n = max{ i : i(i+1)/2 <= d }`, `s = d - n(n+1)/2`.
pub fn generic_points_hvector(d: i64) -> Result<HVector> {
    if d < 1 {
        return Err(Error::Precondition("need at least one point".into()));
    }
    let mut n = 1i64;
    while (n + 1) * (n + 2) / 2 <= d {
        n += 1;
    }
    let s = d - n * (n + 1) / 2;
    let mut coeffs: Vec<i64> = (1..=n).collect();
    coeffs.push(s);
    HVector::new(coeffs)
}

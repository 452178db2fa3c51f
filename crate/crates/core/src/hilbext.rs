//! Local equations of the Hilbert scheme at `[P^1]` for trivial extensions
//! of `P^1` by `E = ⊕ O(-d_j)`, their lengths, and the closed forms.
//!
//! A section of `N ⊗ E` near the line is written with coordinates `z_{i,j}`,
//! `0 ≤ i ≤ d_j`; the obstruction to extending it is `Σ_{i+k=ν} z_{i,m} z_{k,λ}`
//! for every unordered pair of summands `(m, λ)` and every `ν ≤ d_m + d_λ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{binomial, quotient_length, truncated_quotient_length, Ideal};
use crate::polyring::{FieldSpec, MonomialOrder, PolyRing, Polynomial, RingRef};

/// `E = ⊕ O(-d_j)` together with the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    ds: Vec<u32>,
    field: FieldSpec,
}

impl ExtensionSpec {
    pub fn new(ds: Vec<u32>, field: FieldSpec) -> Result<Self> {
        if ds.is_empty() {
            return Err(Error::InvalidArgument("at least one summand is required".into()));
        }
        Ok(ExtensionSpec { ds, field })
    }

    /// From signed twists. Positive twists are ample summands, which add
    /// neither variables nor equations, and are dropped.
    pub fn from_twists(twists: &[i64], field: FieldSpec) -> Result<Self> {
        let ds: Vec<u32> = twists.iter().filter(|&&t| t <= 0).map(|&t| (-t) as u32).collect();
        if ds.is_empty() {
            return Err(Error::InvalidArgument("no summand of non-positive degree".into()));
        }
        Self::new(ds, field)
    }

    pub fn ds(&self) -> &[u32] {
        &self.ds
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn twists(&self) -> Vec<i64> {
        self.ds.iter().map(|&d| -(d as i64)).collect()
    }

    /// `r(E)`.
    pub fn rank(&self) -> i64 {
        self.ds.len() as i64
    }

    /// `deg E`.
    pub fn degree(&self) -> i64 {
        -self.ds.iter().map(|&d| d as i64).sum::<i64>()
    }

    pub fn max_d(&self) -> u32 {
        *self.ds.iter().max().unwrap()
    }

    pub fn with_field(&self, field: FieldSpec) -> Self {
        ExtensionSpec { ds: self.ds.clone(), field }
    }

    /// The variable names `z{i}_{j}` (summands counted from 1), grouped by summand.
    pub fn variable_names(&self) -> Vec<String> {
        self.ds
            .iter()
            .enumerate()
            .flat_map(|(j, &d)| (0..=d).map(move |i| format!("z{i}_{}", j + 1)))
            .collect()
    }

    /// Display names for the shapes with a named presentation: `x_j, y_j`
    /// when every `d_j = 1`, `y_j, z_j, w_j` when every `d_j = 2`.
    pub fn display_aliases(&self) -> Option<Vec<String>> {
        let letters: &[&str] = if self.ds.iter().all(|&d| d == 1) {
            &["x", "y"]
        } else if self.ds.iter().all(|&d| d == 2) {
            &["y", "z", "w"]
        } else {
            return None;
        };
        Some((1..=self.ds.len()).flat_map(|j| letters.iter().map(move |l| format!("{l}{j}"))).collect())
    }

    pub fn ring(&self) -> Result<RingRef> {
        PolyRing::new(&self.variable_names(), self.field, MonomialOrder::GradedReverseLex)
    }
}

/// The obstruction equations, in the order (m, λ) with m ≤ λ, then ν.
pub fn extension_equations(spec: &ExtensionSpec) -> Result<Ideal> {
    let ring = spec.ring()?;
    let mut start = Vec::with_capacity(spec.ds.len());
    let mut acc = 0;
    for &d in &spec.ds {
        start.push(acc);
        acc += d as usize + 1;
    }
    let z = |i: usize, j: usize| Polynomial::var(&ring, start[j] + i);
    let mut gens = Vec::new();
    for m in 0..spec.ds.len() {
        for l in m..spec.ds.len() {
            let (dm, dl) = (spec.ds[m] as usize, spec.ds[l] as usize);
            for nu in 0..=dm + dl {
                let mut g = Polynomial::zero(&ring);
                // ordered pairs, so within one summand cross terms appear twice
                for i in nu.saturating_sub(dl)..=dm.min(nu) {
                    g = &g + &(&z(i, m) * &z(nu - i, l));
                }
                gens.push(g);
            }
        }
    }
    Ideal::new(&ring, gens)
}

/// Closed forms and bounds, named as they appear in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Method {
    #[serde(rename = "groebner")]
    Groebner,
    #[serde(rename = "formula-1a")]
    Formula1a,
    #[serde(rename = "formula-char2")]
    FormulaChar2,
    #[serde(rename = "formula-1b")]
    Formula1b,
    #[serde(rename = "formula-1c")]
    Formula1c,
    #[serde(rename = "bound-upper")]
    BoundUpper,
    #[serde(rename = "bound-lower")]
    BoundLower,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Groebner => "groebner",
            Method::Formula1a => "formula-1a",
            Method::FormulaChar2 => "formula-char2",
            Method::Formula1b => "formula-1b",
            Method::Formula1c => "formula-1c",
            Method::BoundUpper => "bound-upper",
            Method::BoundLower => "bound-lower",
        }
    }
}

/// A length, or the witness variable when the quotient is infinite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Length {
    Finite(u64),
    NotArtinian(String),
}

/// One closed form evaluated next to the quantity it claims to compute.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaCheck {
    pub method: Method,
    pub value: i64,
    /// `"total"`, `"m^3"` or `"m^4"`.
    pub compares_to: String,
    pub computed: u64,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthReport {
    pub twists: Vec<i64>,
    pub characteristic: u64,
    pub length: Length,
    pub method: Method,
    /// Closed forms claimed to give the total length that reproduce it.
    pub agreement: Vec<Method>,
    pub checks: Vec<FormulaCheck>,
    pub formula_discrepancy: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
}

/// `Σ_{i ≥ -2} C(d - i, 2 + i)`.
pub fn formula_1a(d: u32) -> u64 {
    let d = d as i64;
    (-2..=d).map(|i| binomial(d - i, 2 + i) as u64).sum()
}

/// `2^{d+1}`.
pub fn formula_char2(d: u32) -> u64 {
    1u64 << (d + 1)
}

/// `1 + (r - deg) + C(-deg, 2)`: the length of `D/m^3`.
pub fn formula_1b(spec: &ExtensionSpec) -> i64 {
    let (r, deg) = (spec.rank(), spec.degree());
    1 + (r - deg) + binomial(-deg, 2) as i64
}

/// The closed form for the total length where one is known: a single
/// summand (either characteristic), or `n` copies of `O(-1)` or `O(-2)`
/// away from characteristic 2.
pub fn closed_form(spec: &ExtensionSpec) -> Option<u64> {
    let n = spec.ds.len() as u64;
    match spec.ds.as_slice() {
        [d] if char2(spec) => Some(formula_char2(*d)),
        [d] => Some(formula_1a(*d)),
        _ if char2(spec) => None,
        ds if ds.iter().all(|&d| d == 1) => Some(2 * n + 1 + n * (n - 1) / 2),
        ds if ds.iter().all(|&d| d == 2) => Some(3 * n + 1 + n * (2 * n - 1)),
        _ => None,
    }
}

/// The printed length of `D/m^4`:
/// `1b + C(-deg - r, 3) - (r-1)(r^2 - 2r - 9 r deg - 18 deg)`.
pub fn formula_1c(spec: &ExtensionSpec) -> i64 {
    let (r, deg) = (spec.rank(), spec.degree());
    formula_1b(spec) + binomial(-deg - r, 3) as i64 - (r - 1) * (r * r - 2 * r - 9 * r * deg - 18 * deg)
}

/// Length of the trivial extension by the concatenated layers.
pub fn upper_bound(layers: &[ExtensionSpec]) -> Result<u64> {
    let first = layers.first().ok_or_else(|| Error::InvalidArgument("no layers".into()))?;
    let ds = layers.iter().flat_map(|l| l.ds.iter().copied()).collect();
    match trivial_extension_length(&ExtensionSpec::new(ds, first.field)?)?.length {
        Length::Finite(n) => Ok(n),
        Length::NotArtinian(w) => Err(Error::NotArtinian { witness: w }),
    }
}

/// `-deg E + rank E + d + 2` for a first layer `O(-d)`, `d > 0`, and second layer `E`.
pub fn lower_bound(d: u32, second: &ExtensionSpec) -> Result<u64> {
    if d == 0 {
        return Err(Error::InvalidArgument("the first layer must be O(-d) with d > 0".into()));
    }
    Ok((-second.degree() + second.rank() + d as i64 + 2) as u64)
}

fn char2(spec: &ExtensionSpec) -> bool {
    spec.field.characteristic() == 2
}

/// Length by Groebner basis, with every applicable closed form alongside.
pub fn trivial_extension_length(spec: &ExtensionSpec) -> Result<LengthReport> {
    let ideal = extension_equations(spec)?;
    let length = match quotient_length(&ideal) {
        Ok(n) => Length::Finite(n as u64),
        Err(Error::NotArtinian { witness }) => Length::NotArtinian(witness),
        Err(e) => return Err(e),
    };
    let mut checks = Vec::new();
    if let Length::Finite(total) = length {
        let single = spec.ds.len() == 1;
        if single && !char2(spec) {
            let v = formula_1a(spec.ds[0]) as i64;
            checks.push(check(Method::Formula1a, v, "total", total));
        }
        if single && char2(spec) {
            let v = formula_char2(spec.ds[0]) as i64;
            checks.push(check(Method::FormulaChar2, v, "total", total));
        }
        if !char2(spec) {
            let t3 = truncated_quotient_length(&ideal, 3)? as u64;
            let t4 = truncated_quotient_length(&ideal, 4)? as u64;
            checks.push(check(Method::Formula1b, formula_1b(spec), "m^3", t3));
            if spec.max_d() <= 3 {
                checks.push(check(Method::Formula1b, formula_1b(spec), "total", total));
            }
            checks.push(check(Method::Formula1c, formula_1c(spec), "m^4", t4));
            if spec.max_d() <= 5 {
                checks.push(check(Method::Formula1c, formula_1c(spec), "total", total));
            }
        }
    }
    let mut agreement: Vec<Method> =
        checks.iter().filter(|c| c.compares_to == "total" && c.agrees).map(|c| c.method).collect();
    agreement.dedup();
    let formula_discrepancy = checks.iter().any(|c| !c.agrees);
    Ok(LengthReport {
        twists: spec.twists(),
        characteristic: spec.field.characteristic(),
        length,
        method: Method::Groebner,
        agreement,
        checks,
        formula_discrepancy,
        ideal: Some(ideal.gens().iter().map(|g| g.to_string()).collect()),
    })
}

fn check(method: Method, value: i64, compares_to: &str, computed: u64) -> FormulaCheck {
    FormulaCheck { method, value, compares_to: compares_to.into(), computed, agrees: value == computed as i64 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        let fib: Vec<u64> = (0..11).map(formula_1a).collect();
        assert_eq!(fib, [2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]);
        assert_eq!(formula_char2(3), 16);
        let q = FieldSpec::rationals();
        let s = |ds: &[u32]| ExtensionSpec::new(ds.to_vec(), q).unwrap();
        assert_eq!(formula_1b(&s(&[1, 1])), 6);
        assert_eq!(formula_1b(&s(&[4])), 12);
        assert_eq!(formula_1c(&s(&[4])), 13);
        assert_eq!(formula_1b(&s(&[1, 2])), 9);
        assert!(formula_1c(&s(&[4, 5])) < 0);
        assert_eq!(lower_bound(1, &s(&[1])).unwrap(), 5);
        assert_eq!(lower_bound(2, &s(&[1, 2])).unwrap(), 9);
        assert!(lower_bound(0, &s(&[1])).is_err());
    }

    #[test]
    fn ample_summands_are_dropped() {
        let q = FieldSpec::rationals();
        let s = ExtensionSpec::from_twists(&[3, -1, 0], q).unwrap();
        assert_eq!(s.ds(), &[1, 0]);
        assert!(ExtensionSpec::from_twists(&[1, 2], q).is_err());
        assert!(ExtensionSpec::new(vec![], q).is_err());
    }

    #[test]
    fn names_and_aliases() {
        let s = ExtensionSpec::new(vec![1, 1], FieldSpec::rationals()).unwrap();
        assert_eq!(s.variable_names(), ["z0_1", "z1_1", "z0_2", "z1_2"]);
        assert_eq!(s.display_aliases().unwrap(), ["x1", "y1", "x2", "y2"]);
        assert!(ExtensionSpec::new(vec![1, 2], FieldSpec::rationals()).unwrap().display_aliases().is_none());
    }
}

use super::buchberger::{buchberger_with, BuchbergerOptions};
use super::{monomials_of_degree, GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::polyring::Monomial;

/// Monomials outside the initial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardMonomialSet {
    Finite(Vec<Monomial>),
    /// No power of variable `witness` is a leading monomial.
    Infinite { witness: usize },
}

impl StandardMonomialSet {
    pub fn len(&self) -> Option<usize> {
        match self {
            StandardMonomialSet::Finite(v) => Some(v.len()),
            StandardMonomialSet::Infinite { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, StandardMonomialSet::Finite(_))
    }
}

/// Artinian test first, then a depth-first walk of the order ideal.
pub fn standard_monomials(g: &GroebnerBasis) -> StandardMonomialSet {
    let n = g.ring().nvars();
    if g.is_unit() {
        return StandardMonomialSet::Finite(Vec::new());
    }
    let lms = g.leading_monomials();
    let mut has_power = vec![false; n];
    for m in &lms {
        if let Some(i) = m.pure_power_var() {
            has_power[i] = true;
        }
    }
    if let Some(witness) = has_power.iter().position(|h| !h) {
        return StandardMonomialSet::Infinite { witness };
    }
    StandardMonomialSet::Finite(walk(g, &lms, None))
}

/// Standard monomials of degree at most `max_degree`; needs no Artinian hypothesis.
pub fn standard_monomials_below(g: &GroebnerBasis, max_degree: u32) -> Vec<Monomial> {
    if g.is_unit() {
        return Vec::new();
    }
    walk(g, &g.leading_monomials(), Some(max_degree))
}

fn walk(g: &GroebnerBasis, lms: &[Monomial], max_degree: Option<u32>) -> Vec<Monomial> {
    let n = g.ring().nvars();
    let mut out = Vec::new();
    let mut stack = vec![(Monomial::one(n), 0usize)];
    while let Some((m, start)) = stack.pop() {
        for i in start..n {
            let next = m.mul(&Monomial::var(n, i, 1));
            if max_degree.is_some_and(|d| next.degree() > d) {
                continue;
            }
            if !lms.iter().any(|l| l.divides(&next)) {
                stack.push((next, i));
            }
        }
        out.push(m);
    }
    let order = g.order();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(b, a)));
    out
}

/// `dim_k R/I`, or `NotArtinian` naming a variable with no pure power in `in(I)`.
pub fn quotient_length(ideal: &Ideal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::NotArtinian { witness: ideal.ring().name(0).to_string() });
    }
    let g = ideal.groebner()?;
    match standard_monomials(&g) {
        StandardMonomialSet::Finite(v) => Ok(v.len()),
        StandardMonomialSet::Infinite { witness } => {
            Err(Error::NotArtinian { witness: g.ring().name(witness).to_string() })
        }
    }
}

/// Number of standard monomials of degree exactly `t`; for a homogeneous
/// ideal this is the Hilbert function of `R/I`.
pub fn hilbert_function(g: &GroebnerBasis, t: u32) -> usize {
    if g.is_unit() {
        return 0;
    }
    let lms = g.leading_monomials();
    monomials_of_degree(g.ring().nvars(), t).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count()
}

/// `dim_k R/(I + m^k)`. Homogeneous ideals are handled by counting standard
/// monomials of `I` in degrees below `k` (from a degree-truncated basis);
/// otherwise the basis of `I + m^k` is computed.
pub fn truncated_quotient_length(ideal: &Ideal, k: u32) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidArgument("truncation degree must be at least 1".into()));
    }
    if ideal.is_zero() {
        let n = ideal.ring().nvars();
        return Ok((0..k).map(|t| monomials_of_degree(n, t).len()).sum());
    }
    if ideal.is_homogeneous() {
        // a basis up to degree k - 1 already fixes the initial ideal there
        let opts = BuchbergerOptions { degree_limit: Some(k - 1), ..Default::default() };
        let (g, _) = buchberger_with(ideal, opts)?;
        return Ok(standard_monomials_below(&g, k - 1).len());
    }
    truncated_quotient_length_by_gb(ideal, k)
}

/// Same quantity, always through a basis of `I + m^k`.
pub fn truncated_quotient_length_by_gb(ideal: &Ideal, k: u32) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidArgument("truncation degree must be at least 1".into()));
    }
    let j = ideal.sum(&Ideal::maximal_power(ideal.ring(), k))?;
    quotient_length(&j)
}

//! Ideals, Buchberger's algorithm, standard monomials and the ideal
//! operations built on them (quotients, saturation, elimination).

mod buchberger;
mod ops;
mod standard;

use std::fmt;

pub use buchberger::{buchberger, buchberger_with, is_groebner_basis, s_polynomial, BuchbergerOptions, BuchbergerStats};
pub use ops::{
    eliminate, ideal_quotient, intersect, min_generators_dim, saturation, saturation_by_quotients,
};
pub use standard::{
    hilbert_function, quotient_length, standard_monomials, standard_monomials_below,
    truncated_quotient_length, truncated_quotient_length_by_gb, StandardMonomialSet,
};

use crate::error::{Error, Result};
use crate::polyring::{parse_polynomial, same_ring, Monomial, MonomialOrder, Polynomial, RingRef};

/// A finitely generated ideal. Zero generators are allowed and ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), gens })
    }

    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| parse_polynomial(s, ring)).collect::<Result<_>>()?;
        Ok(Ideal { ring: ring.clone(), gens })
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &RingRef) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal { ring: ring.clone(), gens }
    }

    /// `m^k`, generated by all monomials of degree `k`.
    pub fn maximal_power(ring: &RingRef, k: u32) -> Self {
        let one = ring.field().one();
        let gens = monomials_of_degree(ring.nvars(), k)
            .into_iter()
            .map(|m| Polynomial::term(ring, m, one.clone()))
            .collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nonzero_gens(&self) -> Vec<Polynomial> {
        self.gens.iter().filter(|g| !g.is_zero()).cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// Every generator vanishes at the origin.
    pub fn in_maximal_ideal(&self) -> bool {
        let one = Monomial::one(self.ring.nvars());
        self.gens.iter().all(|g| g.coeff_of(&one).is_zero())
    }

    pub fn groebner(&self) -> Result<GroebnerBasis> {
        buchberger(self)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal { ring: self.ring.clone(), gens })
    }

    /// `self + (extra)`.
    pub fn with(&self, extra: &[Polynomial]) -> Result<Ideal> {
        self.sum(&Ideal::new(&self.ring, extra.to_vec())?)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let a = self.nonzero_gens();
        let b = other.nonzero_gens();
        let gens = a.iter().flat_map(|f| b.iter().map(move |g| f * g)).collect();
        Ok(Ideal { ring: self.ring.clone(), gens })
    }

    pub fn pow(&self, n: u32) -> Result<Ideal> {
        let mut acc = Ideal::new(&self.ring, vec![Polynomial::one(&self.ring)])?;
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if self.is_zero() {
            return Ok(f.is_zero());
        }
        Ok(self.groebner()?.normal_form(f)?.is_zero())
    }

    /// Ideal equality via reduced Groebner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ok(true),
            (false, false) => Ok(self.groebner()?.elements() == other.groebner()?.elements()),
            _ => Ok(false),
        }
    }

    /// Re-express in `target`, sending variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &RingRef, var_map: &[usize]) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.map_vars(target, var_map)).collect::<Result<_>>()?;
        Ok(Ideal { ring: target.clone(), gens })
    }

    /// One generator per line in the polynomial grammar.
    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| format!("{g}\n")).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// A reduced Groebner basis: monic, mutually irreducible, sorted by leading
/// monomial descending. Unique for a given ideal and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Wrap elements already known to form a reduced basis.
    pub(crate) fn from_reduced(ring: &RingRef, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring: ring.clone(), elements }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    /// The unique remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(crate::polyring::reduce_unchecked(f, &self.elements))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The monomial ideal of leading terms.
    pub fn initial_ideal(&self) -> Ideal {
        let one = self.ring.field().one();
        let gens = self
            .elements
            .iter()
            .map(|g| Polynomial::term(&self.ring, g.leading_monomial().unwrap().clone(), one.clone()))
            .collect();
        Ideal { ring: self.ring.clone(), gens }
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal { ring: self.ring.clone(), gens: self.elements.clone() }
    }

    /// Largest total degree among the elements.
    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }
}

impl fmt::Display for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.elements {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// All exponent vectors of total degree `k` in `n` variables, in lex-descending order.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left as u16;
            out.push(Monomial::new(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, 0, k, &mut vec![0; n], &mut out);
    out
}

/// Binomial coefficient `C(n, k)` with `C(n, k) = 0` for `k < 0` or `k > n`, `n >= 0`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

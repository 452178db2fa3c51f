use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Coeff;
use super::monomial::Monomial;
use super::ring::{same_ring, RingRef};
use crate::error::{Error, Result};

/// A sparse polynomial. Terms are sorted strictly descending in the ring's
/// order and carry no zero coefficients; the empty term list is `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_int(ring: &RingRef, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    /// The variable with index `i`.
    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn term(ring: &RingRef, mono: Monomial, c: Coeff) -> Self {
        debug_assert_eq!(mono.nvars(), ring.nvars());
        if c.is_zero() {
            Self::zero(ring)
        } else {
            Polynomial { ring: ring.clone(), terms: vec![(mono, c)] }
        }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let field = ring.field();
        let order = ring.order();
        let mut raw: Vec<(Monomial, Coeff)> = terms.into_iter().collect();
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wrap terms that are already canonical.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Coefficient of a given monomial (zero when absent).
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        let order = self.ring.order();
        match self.terms.binary_search_by(|(t, _)| order.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field().zero(),
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.add_mul_term(other, &self.ring.field().one(), &Monomial::one(self.ring.nvars())))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let minus = self.ring.field().from_i64(-1);
        Ok(self.add_mul_term(other, &minus, &Monomial::one(self.ring.nvars())))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// `c * m * self`; the order is multiplicative so sortedness is kept.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), field.mul(a, c))).collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// `self + c * m * other`, merging the two sorted term lists.
    pub fn add_mul_term(&self, other: &Polynomial, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, x)| (t.mul(m), field.mul(x, c))).peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((ma, _)), Some((mb, _))) => order.cmp(ma, mb),
            };
            match step {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (ma, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let s = field.add(ca, &cb);
                    if !s.is_zero() {
                        out.push((ma.clone(), s));
                    }
                }
            }
        }
        Polynomial::from_sorted(&self.ring, out)
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_mul_term(large, c, m);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&self.ring.field().inv(c)),
        }
    }

    /// Re-express in `target`, sending variable `i` to variable `var_map[i]`.
    /// Coefficients are coerced into the target field.
    pub fn map_vars(&self, target: &RingRef, var_map: &[usize]) -> Result<Polynomial> {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let tf = target.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u16; n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[var_map[i]] += x;
            }
            let c = coerce(c, &tf)?;
            terms.push((Monomial::new(&e), c));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Replace variable `i` by `images[i]`; all images live in one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.nvars());
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            return Err(Error::InvalidArgument("empty substitution".into()));
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(Error::RingMismatch);
        }
        let tf = target.field();
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, coerce(c, &tf)?);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul_unchecked(&images[i].pow(e as u32));
                }
            }
            acc = acc.add_mul_term(&t, &tf.one(), &Monomial::one(target.nvars()));
        }
        Ok(acc)
    }

    /// Exact quotient by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((m.quotient_of(t)?, c.clone()));
        }
        Some(Polynomial::from_sorted(&self.ring, terms))
    }
}

/// Move a coefficient between fields (Q -> F_p reduces; F_p -> F_q keeps the
/// integer representative; anything -> Q takes the integer representative).
pub(crate) fn coerce(c: &Coeff, target: &super::field::FieldSpec) -> Result<Coeff> {
    match c {
        Coeff::Q(q) => target
            .from_rational(q)
            .ok_or_else(|| Error::Unrepresentable(c.to_string())),
        Coeff::Fp(x) => Ok(target.from_bigint(&num_bigint::BigInt::from(*x))),
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{FieldSpec, MonomialOrder, PolyRing};

    fn ring(p: u64) -> RingRef {
        PolyRing::indexed("z", 3, FieldSpec::new(p).unwrap(), MonomialOrder::GradedReverseLex).unwrap()
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = ring(2);
        let s = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 1);
        let sq = &s * &s;
        let expect = &Polynomial::var(&r, 0).pow(2) + &Polynomial::var(&r, 1).pow(2);
        assert_eq!(sq, expect);
    }

    #[test]
    fn additive_inverse_and_difference_of_squares() {
        let r = ring(0);
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let f = &(&a * &b) + &Polynomial::from_int(&r, 3);
        assert!((&f + &(-&f)).is_zero());
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &a.pow(2) - &b.pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let (r, s) = (ring(0), ring(5));
        let a = Polynomial::var(&r, 0);
        let b = Polynomial::var(&s, 0);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn canonical_form() {
        let r = ring(0);
        let q = r.field();
        let m = Monomial::new(&[1, 0, 0]);
        let p = Polynomial::from_terms(
            &r,
            vec![(Monomial::one(3), q.one()), (m.clone(), q.from_i64(2)), (m.clone(), q.from_i64(-2))],
        );
        assert_eq!(p, Polynomial::one(&r));
        assert!(p.is_homogeneous());
        assert_eq!(p.coeff_of(&m), q.zero());
    }
}

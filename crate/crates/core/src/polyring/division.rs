//! Multivariate division producing standard expressions
//! `f = sum_i q_i g_i + r`.

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::same_ring;
use crate::error::{Error, Result};

/// Output of [`divide`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardExpression {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Divide `f` by `divisors`. The leading term of the running dividend is
/// always cancelled by the first divisor whose leading monomial divides it;
/// otherwise it moves to the remainder. The result satisfies
/// `in(f) >= in(q_i g_i)` for every nonzero quotient and no remainder
/// monomial is divisible by any `in(g_i)`.
pub fn divide(f: &Polynomial, divisors: &[Polynomial]) -> Result<StandardExpression> {
    validate(f, divisors)?;
    let ring = f.ring().clone();
    let field = ring.field();
    let leads: Vec<(&Monomial, _)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term().unwrap();
            (m, field.inv(c))
        })
        .collect();
    let mut quotients: Vec<Vec<_>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term().cloned() {
        match leads.iter().position(|(m, _)| m.divides(&lm)) {
            Some(i) => {
                let shift = leads[i].0.quotient_of(&lm).unwrap();
                let c = field.mul(&lc, &leads[i].1);
                p = p.add_mul_term(&divisors[i], &field.neg(&c), &shift);
                quotients[i].push((shift, c));
            }
            None => {
                remainder.push((lm, lc));
                p = Polynomial::from_sorted(&ring, p.into_terms().split_off(1));
            }
        }
    }
    // monomials were emitted in strictly descending order, so these are canonical
    let quotients = quotients.into_iter().map(|t| Polynomial::from_sorted(&ring, t)).collect();
    Ok(StandardExpression { quotients, remainder: Polynomial::from_sorted(&ring, remainder) })
}

/// Remainder only; skips quotient bookkeeping.
pub fn remainder(f: &Polynomial, divisors: &[Polynomial]) -> Result<Polynomial> {
    validate(f, divisors)?;
    Ok(reduce_unchecked(f, divisors))
}

pub(crate) fn validate(f: &Polynomial, divisors: &[Polynomial]) -> Result<()> {
    for (i, g) in divisors.iter().enumerate() {
        if !same_ring(f.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroDivisor(i));
        }
    }
    Ok(())
}

/// Full reduction of `f` modulo nonzero `divisors` sharing its ring.
pub(crate) fn reduce_unchecked(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let field = ring.field();
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term().cloned() {
        match divisors.iter().find(|g| g.leading_monomial().unwrap().divides(&lm)) {
            Some(g) => {
                let (gm, gc) = g.leading_term().unwrap();
                let shift = gm.quotient_of(&lm).unwrap();
                let c = field.neg(&field.div(&lc, gc));
                p = p.add_mul_term(g, &c, &shift);
            }
            None => {
                remainder.push((lm, lc));
                let mut rest = p.into_terms();
                rest.remove(0);
                p = Polynomial::from_sorted(&ring, rest);
            }
        }
    }
    Polynomial::from_sorted(&ring, remainder)
}

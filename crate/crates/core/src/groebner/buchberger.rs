use std::collections::BTreeMap;

use super::{GroebnerBasis, Ideal};
use crate::error::{Error, Result};
use crate::polyring::{reduce_unchecked, same_ring, Monomial, MonomialOrder, Polynomial, RingRef};

/// `m_ji * g_i - m_ij * g_j` with `m_ij = in(g_i) / gcd(in(g_i), in(g_j))`,
/// where initial terms carry their coefficients and the gcd is monic.
pub fn s_polynomial(gi: &Polynomial, gj: &Polynomial) -> Result<Polynomial> {
    if !same_ring(gi.ring(), gj.ring()) {
        return Err(Error::RingMismatch);
    }
    let ((mi, ci), (mj, cj)) = match (gi.leading_term(), gj.leading_term()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    let g = mi.gcd(mj);
    let m_ij = g.quotient_of(mi).unwrap();
    let m_ji = g.quotient_of(mj).unwrap();
    let field = gi.ring().field();
    let left = gi.mul_term(&m_ji, cj);
    Ok(left.add_mul_term(gj, &field.neg(ci), &m_ij))
}

/// Monic-normalised S-polynomial used inside the algorithm.
fn spair(gi: &Polynomial, gj: &Polynomial, lcm: &Monomial) -> Polynomial {
    let field = gi.ring().field();
    let (mi, _) = gi.leading_term().unwrap();
    let (mj, _) = gj.leading_term().unwrap();
    // elements are monic
    let left = gi.mul_term(&mi.quotient_of(lcm).unwrap(), &field.one());
    left.add_mul_term(gj, &field.from_i64(-1), &mj.quotient_of(lcm).unwrap())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Gebauer-Moeller pair elimination on top of the coprime skip.
    pub chain_criterion: bool,
    /// Drop pairs whose lcm exceeds this degree. Homogeneous input only;
    /// the result is then a basis up to that degree.
    pub degree_limit: Option<u32>,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions { chain_criterion: true, degree_limit: None }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_reduced: usize,
    pub coprime_skipped: usize,
    pub chain_skipped: usize,
    pub zero_reductions: usize,
}

pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis> {
    buchberger_with(ideal, BuchbergerOptions::default()).map(|(g, _)| g)
}

pub fn buchberger_with(ideal: &Ideal, opts: BuchbergerOptions) -> Result<(GroebnerBasis, BuchbergerStats)> {
    let ring = ideal.ring().clone();
    let gens = ideal.nonzero_gens();
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if opts.degree_limit.is_some() && !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut stats = BuchbergerStats::default();
    if gens.iter().all(|g| g.len() == 1) {
        return Ok((monomial_basis(&ring, &gens), stats));
    }
    let mut st = State { ring: ring.clone(), basis: Vec::new(), active: Vec::new(), pairs: BTreeMap::new(), opts };
    for g in gens {
        let h = st.reduce(&g);
        if st.absorb(h, &mut stats) {
            return Ok((unit_basis(&ring), stats));
        }
    }
    while let Some((key, lcm)) = st.pairs.pop_first() {
        let (_, j, i) = key;
        stats.pairs_reduced += 1;
        let s = spair(&st.basis[i], &st.basis[j], &lcm);
        let h = st.reduce(&s);
        if h.is_zero() {
            stats.zero_reductions += 1;
        }
        if st.absorb(h, &mut stats) {
            return Ok((unit_basis(&ring), stats));
        }
    }
    Ok((st.finish(), stats))
}

struct State {
    ring: RingRef,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    /// keyed by (lcm degree, j, i) with i < j: the normal selection strategy
    pairs: BTreeMap<(u32, usize, usize), Monomial>,
    opts: BuchbergerOptions,
}

impl State {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().unwrap()
    }

    fn reduce(&self, f: &Polynomial) -> Polynomial {
        let divisors: Vec<Polynomial> =
            (0..self.basis.len()).filter(|&i| self.active[i]).map(|i| self.basis[i].clone()).collect();
        reduce_unchecked(f, &divisors)
    }

    /// Add a reduced element. Returns true when it is a unit.
    fn absorb(&mut self, h: Polynomial, stats: &mut BuchbergerStats) -> bool {
        if h.is_zero() {
            return false;
        }
        if h.is_constant() {
            return true;
        }
        let h = h.monic();
        let k = self.basis.len();
        let hm = h.leading_monomial().unwrap().clone();
        self.basis.push(h);
        self.active.push(true);
        let old: Vec<usize> = (0..k).filter(|&i| self.active[i]).collect();
        let cand: Vec<(usize, Monomial)> = old.iter().map(|&i| (i, self.lm(i).lcm(&hm))).collect();
        let limit = self.opts.degree_limit;
        let within = |m: &Monomial| limit.map_or(true, |l| m.degree() <= l);

        if self.opts.chain_criterion {
            // keep (i, h) unless another new pair's lcm divides its lcm
            let mut kept: Vec<(usize, Monomial)> = Vec::new();
            for (idx, (i, l)) in cand.iter().enumerate() {
                let coprime = self.lm(*i).is_coprime(&hm);
                let dominated = cand[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                    || kept.iter().any(|(_, l2)| l2.divides(l));
                if coprime || !dominated {
                    kept.push((*i, l.clone()));
                } else {
                    stats.chain_skipped += 1;
                }
            }
            // prune old pairs
            let mut drop = Vec::new();
            for (key, l) in &self.pairs {
                let (_, j, i) = *key;
                if hm.divides(l) && self.lm(i).lcm(&hm) != *l && self.lm(j).lcm(&hm) != *l {
                    drop.push(*key);
                }
            }
            stats.chain_skipped += drop.len();
            for key in drop {
                self.pairs.remove(&key);
            }
            for (i, l) in kept {
                if self.lm(i).is_coprime(&hm) {
                    stats.coprime_skipped += 1;
                } else if within(&l) {
                    self.pairs.insert((l.degree(), k, i), l);
                }
            }
            for &i in &old {
                if hm.divides(self.lm(i)) {
                    self.active[i] = false;
                }
            }
        } else {
            for (i, l) in cand {
                if self.lm(i).is_coprime(&hm) {
                    stats.coprime_skipped += 1;
                } else if within(&l) {
                    self.pairs.insert((l.degree(), k, i), l);
                }
            }
        }
        false
    }

    fn finish(self) -> GroebnerBasis {
        let mut keep: Vec<Polynomial> = Vec::new();
        let cands: Vec<&Polynomial> = (0..self.basis.len()).filter(|&i| self.active[i]).map(|i| &self.basis[i]).collect();
        for (a, g) in cands.iter().enumerate() {
            let m = g.leading_monomial().unwrap();
            let redundant = cands.iter().enumerate().any(|(b, o)| {
                let om = o.leading_monomial().unwrap();
                b != a && om.divides(m) && (om != m || b < a)
            });
            if !redundant {
                keep.push((*g).clone());
            }
        }
        interreduce(&self.ring, keep)
    }
}

/// Reduce every element against the others and sort; input LMs must be minimal.
fn interreduce(ring: &RingRef, minimal: Vec<Polynomial>) -> GroebnerBasis {
    let mut out = Vec::with_capacity(minimal.len());
    for (a, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(b, _)| *b != a).map(|(_, o)| o.clone()).collect();
        let (lm, lc) = g.leading_term().unwrap().clone();
        let tail = Polynomial::from_terms(ring, g.terms()[1..].to_vec());
        let tail = reduce_unchecked(&tail, &others);
        let mut terms = vec![(lm, lc)];
        terms.extend(tail.into_terms());
        out.push(Polynomial::from_terms(ring, terms).monic());
    }
    sort_basis(ring.order(), &mut out);
    GroebnerBasis::from_reduced(ring, out)
}

fn sort_basis(order: MonomialOrder, elems: &mut [Polynomial]) {
    elems.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
}

fn monomial_basis(ring: &RingRef, gens: &[Polynomial]) -> GroebnerBasis {
    let one = ring.field().one();
    let mut mons: Vec<Monomial> = gens.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    mons.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| ring.order().cmp(b, a)));
    mons.dedup();
    let mut minimal: Vec<Monomial> = Vec::new();
    for m in mons {
        if !minimal.iter().any(|n| n.divides(&m)) {
            minimal.push(m);
        }
    }
    let mut out: Vec<Polynomial> = minimal.into_iter().map(|m| Polynomial::term(ring, m, one.clone())).collect();
    if out.iter().any(|p| p.is_constant()) {
        return unit_basis(ring);
    }
    sort_basis(ring.order(), &mut out);
    GroebnerBasis::from_reduced(ring, out)
}

fn unit_basis(ring: &RingRef) -> GroebnerBasis {
    GroebnerBasis::from_reduced(ring, vec![Polynomial::one(ring)])
}

/// Buchberger's criterion on a given generating set, with coprime pairs
/// skipped. The generators are compared under `order` (re-embedded if
/// their ring carries a different one).
pub fn is_groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(true);
    };
    let ring = if first.ring().order() == order { first.ring().clone() } else { first.ring().with_order(order)? };
    let ident: Vec<usize> = (0..ring.nvars()).collect();
    let mut gs = Vec::with_capacity(gens.len());
    for g in gens {
        if !same_ring(g.ring(), first.ring()) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        gs.push(if first.ring().order() == order { g.clone() } else { g.map_vars(&ring, &ident)? });
    }
    for j in 0..gs.len() {
        for i in 0..j {
            let (mi, mj) = (gs[i].leading_monomial().unwrap(), gs[j].leading_monomial().unwrap());
            if mi.is_coprime(mj) {
                continue;
            }
            let s = s_polynomial(&gs[i], &gs[j])?;
            if !reduce_unchecked(&s, &gs).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

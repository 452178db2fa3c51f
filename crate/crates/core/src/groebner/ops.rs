use super::standard::hilbert_function;
use super::Ideal;
use crate::error::{Error, Result};
use crate::polyring::{divide, MonomialOrder, PolyRing, Polynomial, RingRef};

/// A variable name not used by `ring`.
fn fresh_name(ring: &RingRef, base: &str) -> String {
    let mut name = base.to_string();
    while ring.index_of(&name).is_some() {
        name.push('_');
    }
    name
}

/// `ring` with one extra variable in front, under an order eliminating it.
fn with_leading_var(ring: &RingRef) -> Result<(RingRef, Vec<usize>)> {
    let mut names = vec![fresh_name(ring, "_t")];
    names.extend(ring.names().iter().cloned());
    let big = PolyRing::new(&names, ring.field(), MonomialOrder::Block { split: 1 })?;
    Ok((big, (1..=ring.nvars()).collect()))
}

/// Generators of `I ∩ k[remaining variables]`, expressed in the original ring.
pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("variable index {bad} out of range")));
    }
    let mut dropped = vec![false; n];
    for &i in drop {
        dropped[i] = true;
    }
    let order: Vec<usize> = (0..n).filter(|&i| dropped[i]).chain((0..n).filter(|&i| !dropped[i])).collect();
    let split = order.iter().filter(|&&i| dropped[i]).count();
    if split == 0 {
        return canonical(ideal);
    }
    if ideal.is_zero() {
        return Ideal::new(ring, Vec::new());
    }
    let names: Vec<&str> = order.iter().map(|&i| ring.name(i)).collect();
    let big = PolyRing::new(&names, ring.field(), MonomialOrder::Block { split })?;
    let mut to_big = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        to_big[old] = new;
    }
    let g = ideal.map_vars(&big, &to_big)?.groebner()?;
    let kept = g
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[..split].iter().all(|&e| e == 0)))
        .map(|p| p.map_vars(ring, &order))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// `I ∩ J` via `t I + (1 - t) J` and elimination of `t`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    if i.is_zero() || j.is_zero() {
        return Ideal::new(ring, Vec::new());
    }
    let (big, emb) = with_leading_var(ring)?;
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for g in i.nonzero_gens() {
        gens.push(&t * &g.map_vars(&big, &emb)?);
    }
    for g in j.nonzero_gens() {
        gens.push(&one_minus_t * &g.map_vars(&big, &emb)?);
    }
    let e = Ideal::new(&big, gens)?.groebner()?;
    let back: Vec<usize> = std::iter::once(0).chain(0..ring.nvars()).collect();
    let kept = e
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| p.map_vars(ring, &back))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, kept)
}

/// `(I : f) = {g : g f ∈ I}`, returned as its reduced basis.
pub fn ideal_quotient(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = ideal.ring();
    let inter = intersect(ideal, &Ideal::new(ring, vec![f.clone()])?)?;
    let mut gens = Vec::new();
    for h in inter.nonzero_gens() {
        let e = divide(&h, std::slice::from_ref(f))?;
        debug_assert!(e.remainder.is_zero(), "element of (f) not divisible by f");
        gens.push(e.quotients.into_iter().next().unwrap());
    }
    canonical(&Ideal::new(ring, gens)?)
}

/// `(I : f^∞)` with one basis computation of `I + (t f - 1)`.
pub fn saturation(ideal: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = ideal.ring();
    if ideal.is_zero() {
        return Ideal::new(ring, Vec::new());
    }
    let (big, emb) = with_leading_var(ring)?;
    let mut gens = ideal.nonzero_gens().iter().map(|g| g.map_vars(&big, &emb)).collect::<Result<Vec<_>>>()?;
    let tf = &Polynomial::var(&big, 0) * &f.map_vars(&big, &emb)?;
    gens.push(&tf - &Polynomial::one(&big));
    let e = Ideal::new(&big, gens)?.groebner()?;
    let back: Vec<usize> = std::iter::once(0).chain(0..ring.nvars()).collect();
    let kept = e
        .elements()
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| p.map_vars(ring, &back))
        .collect::<Result<Vec<_>>>()?;
    canonical(&Ideal::new(ring, kept)?)
}

/// Iterated quotients `(I : f^k)` until they stabilise. Returns the
/// saturation and the first `k` with `(I : f^k) = (I : f^{k+1})`.
pub fn saturation_by_quotients(ideal: &Ideal, f: &Polynomial) -> Result<(Ideal, usize)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cur = canonical(ideal)?;
    let mut k = 0;
    loop {
        let next = ideal_quotient(&cur, f)?;
        if next.equals(&cur)? {
            return Ok((cur, k));
        }
        cur = next;
        k += 1;
    }
}

/// `dim_k I / mI` for a homogeneous `I ⊆ m`.
pub fn min_generators_dim(ideal: &Ideal) -> Result<usize> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if !ideal.in_maximal_ideal() {
        return Err(Error::NotInMaximalIdeal);
    }
    if ideal.is_zero() {
        return Ok(0);
    }
    let g = ideal.groebner()?;
    let mi = Ideal::maximal(ideal.ring()).product(ideal)?.groebner()?;
    let top = g.max_degree();
    Ok((0..=top).map(|t| hilbert_function(&mi, t) - hilbert_function(&g, t)).sum())
}

fn canonical(ideal: &Ideal) -> Result<Ideal> {
    if ideal.is_zero() {
        return Ideal::new(ideal.ring(), Vec::new());
    }
    Ok(ideal.groebner()?.to_ideal())
}

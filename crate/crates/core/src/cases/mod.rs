//! Worked examples: lines inside fat lines in `P^3`, the double line on the
//! `D_5` cubic surface, and the identities behind the single-summand length.

pub mod verify;

use crate::error::{Error, Result};
use crate::groebner::{
    ideal_quotient, quotient_length, saturation, standard_monomials_below, truncated_quotient_length, Ideal,
    GroebnerBasis, is_groebner_basis,
};
use crate::p1linalg::SheafSum;
use crate::polyring::{FieldSpec, Monomial, MonomialOrder, PolyRing, Polynomial, RingRef};

/// Lines near `x_0 = ... = x_{n-2} = 0` in `P^n`, written
/// `x_m = a_m x_{n-1} + b_m x_n`. In `P^3` the parameters are `a, b, c, d`.
#[derive(Clone, Debug)]
pub struct LineFamily {
    n: usize,
    ambient: RingRef,
    params: RingRef,
    /// parameters followed by the two free coordinates
    joint: RingRef,
}

impl LineFamily {
    pub fn new(n: usize, field: FieldSpec) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument("lines need an ambient P^n with n ≥ 2".into()));
        }
        let ambient = PolyRing::indexed("x", n + 1, field, MonomialOrder::GradedReverseLex)?;
        let names: Vec<String> = if n == 3 {
            ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect()
        } else {
            (0..n - 1).flat_map(|m| [format!("a{m}"), format!("b{m}")]).collect()
        };
        let params = PolyRing::new(&names, field, MonomialOrder::GradedReverseLex)?;
        let mut joint_names = names.clone();
        joint_names.push(format!("x{}", n - 1));
        joint_names.push(format!("x{n}"));
        let joint = PolyRing::new(&joint_names, field, MonomialOrder::GradedReverseLex)?;
        Ok(LineFamily { n, ambient, params, joint })
    }

    pub fn ambient(&self) -> &RingRef {
        &self.ambient
    }

    pub fn params(&self) -> &RingRef {
        &self.params
    }

    /// Images of `x_0, ..., x_n` in the joint ring.
    fn images(&self) -> Vec<Polynomial> {
        let j = &self.joint;
        let np = self.params.nvars();
        let (u, v) = (Polynomial::var(j, np), Polynomial::var(j, np + 1));
        let mut out = Vec::with_capacity(self.n + 1);
        for m in 0..self.n - 1 {
            let a = Polynomial::var(j, 2 * m);
            let b = Polynomial::var(j, 2 * m + 1);
            out.push(&(&a * &u) + &(&b * &v));
        }
        out.push(u);
        out.push(v);
        out
    }
}

/// Conditions on the parameters for the line to lie in the scheme: every
/// coefficient, in the free coordinates, of every pulled-back generator.
pub fn line_condition_ideal(family: &LineFamily, scheme: &Ideal) -> Result<Ideal> {
    if !crate::polyring::same_ring(scheme.ring(), &family.ambient) {
        return Err(Error::RingMismatch);
    }
    let images = family.images();
    let np = family.params.nvars();
    let back: Vec<usize> = (0..np).collect();
    let mut gens = Vec::new();
    for g in scheme.nonzero_gens() {
        let pulled = g.substitute(&images)?;
        // group by the exponents of the two free coordinates
        let mut groups: Vec<((u16, u16), Vec<(Monomial, crate::polyring::Coeff)>)> = Vec::new();
        for (m, c) in pulled.terms() {
            let key = (m.exponent(np), m.exponent(np + 1));
            let param_part = Monomial::new(&m.exponents()[..np]);
            match groups.iter_mut().find(|(k, _)| *k == key) {
                Some((_, ts)) => ts.push((param_part, c.clone())),
                None => groups.push((key, vec![(param_part, c.clone())])),
            }
        }
        for (_, terms) in groups {
            let p = Polynomial::from_terms(&family.params, terms);
            gens.push(p.map_vars(&family.params, &back)?);
        }
    }
    Ideal::new(&family.params, gens)
}

/// `dim_k` of a quotient known to be supported at the origin; `NotLocal` otherwise.
pub fn local_length(ideal: &Ideal) -> Result<u64> {
    let total = quotient_length(ideal)?;
    let at_origin = truncated_quotient_length(ideal, total as u32 + 1)?;
    if at_origin != total {
        return Err(Error::NotLocal);
    }
    Ok(total as u64)
}

/// `k[x0..x3]` for the cubic surface.
pub fn d5_ring(field: FieldSpec) -> Result<RingRef> {
    PolyRing::indexed("x", 4, field, MonomialOrder::GradedReverseLex)
}

/// `f = x3 x0^2 + x0 x2^2 + x2 x1^2`, the cubic with a `D_5` point at `[0:0:0:1]`.
pub fn d5_cubic(ring: &RingRef) -> Polynomial {
    let x = |i| Polynomial::var(ring, i);
    let a = &x(3) * &x(0).pow(2);
    let b = &x(0) * &x(2).pow(2);
    let c = &x(2) * &x(1).pow(2);
    &(&a + &b) + &c
}

/// The line `(x0, x1)` on the cubic surface.
pub fn d5_line(ring: &RingRef) -> Ideal {
    Ideal::new(ring, vec![Polynomial::var(ring, 0), Polynomial::var(ring, 1)]).expect("same ring")
}

/// `I^(n) + (f)` as `((x0, x1)^n + (f)) : x2^∞`, in canonical form.
pub fn symbolic_power_d5(n: u32, field: FieldSpec) -> Result<Ideal> {
    if n == 0 {
        return Err(Error::InvalidArgument("symbolic powers start at n = 1".into()));
    }
    let r = d5_ring(field)?;
    let f = d5_cubic(&r);
    let power = d5_line(&r).pow(n)?.with(std::slice::from_ref(&f))?;
    saturation(&power, &Polynomial::var(&r, 2))
}

/// The explicit generator lists for `n = 2, 3`, with `f` added.
pub fn d5_listed_symbolic_power(n: u32, field: FieldSpec) -> Result<Ideal> {
    let r = d5_ring(field)?;
    let gens: &[&str] = match n {
        2 => &["x0", "x1^2"],
        3 => &["x0^2", "x1^3", "x0*x1", "x0*x2 + x1^2"],
        _ => return Err(Error::InvalidArgument("only n = 2, 3 are listed".into())),
    };
    Ideal::parse(&r, gens)?.with(&[d5_cubic(&r)])
}

/// Splitting type of `big / small` as a graded module on the line
/// `k[x_{n-1}, x_n]`, assuming it is free there: reconstructed from Hilbert
/// function differences by second differences and checked up to `max_t`.
/// `line` must annihilate the module.
pub fn graded_quotient_type(big: &Ideal, small: &Ideal, line: &Ideal, max_t: u32) -> Result<SheafSum> {
    if !big.is_homogeneous() || !small.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gs = small.groebner()?;
    let gb = big.groebner()?;
    for g in small.nonzero_gens() {
        if !gb.contains(&g)? {
            return Err(Error::InvalidArgument("the smaller ideal is not contained in the larger".into()));
        }
    }
    if !line.product(big)?.nonzero_gens().iter().all(|g| gs.contains(g).unwrap_or(false)) {
        return Err(Error::NotFreeRankOne("module is not annihilated by the line's ideal".into()));
    }
    let hf = |g: &GroebnerBasis, t: u32| standard_monomials_below(g, t).iter().filter(|m| m.degree() == t).count();
    let h: Vec<i64> = (0..=max_t).map(|t| hf(&gs, t) as i64 - hf(&gb, t) as i64).collect();
    let at = |t: i64| if t < 0 { 0 } else { h[t as usize] };
    let mut twists = Vec::new();
    for t in 0..=max_t as i64 {
        let mult = at(t) - 2 * at(t - 1) + at(t - 2);
        if mult < 0 {
            return Err(Error::NotFreeRankOne(format!("Hilbert function {h:?} is not that of a free module")));
        }
        twists.extend(std::iter::repeat(-t).take(mult as usize));
    }
    // beyond the last generator the function must grow by the rank each step
    let rank = twists.len() as i64;
    if rank == 0 || at(max_t as i64) - at(max_t as i64 - 1) != rank {
        return Err(Error::NotFreeRankOne(format!("Hilbert function {h:?} has not stabilised")));
    }
    SheafSum::new(twists)
}

/// Twist `e` with `I^(n) / I^(n+1) ≅ O_L(e)` on the cubic surface.
pub fn quotient_module_twist(n: u32, field: FieldSpec) -> Result<i64> {
    let big = symbolic_power_d5(n, field)?;
    let small = symbolic_power_d5(n + 1, field)?;
    let line = d5_line(big.ring());
    let t = graded_quotient_type(&big, &small, &line, 8)?;
    if t.rank() != 1 {
        return Err(Error::NotFreeRankOne(format!("quotient has type {t}")));
    }
    Ok(t.twists()[0])
}

/// `I / I^2` for the line `(x0, x1)` in `P^3` with no surface.
pub fn line_conormal_type(field: FieldSpec) -> Result<SheafSum> {
    let r = d5_ring(field)?;
    let i = d5_line(&r);
    graded_quotient_type(&i, &i.pow(2)?, &i, 8)
}

/// `k[z0..zd]` and `f_m = Σ_{i+j=m} z_i z_j`, `m = 0..2d`.
pub fn single_summand_generators(d: usize, field: FieldSpec) -> Result<(RingRef, Vec<Polynomial>)> {
    let r = PolyRing::indexed("z", d + 1, field, MonomialOrder::GradedReverseLex)?;
    let gens = (0..=2 * d).map(|m| f_m(&r, d, m as i64)).collect();
    Ok((r, gens))
}

/// `f_m`, zero outside `0..=2d`.
fn f_m(r: &RingRef, d: usize, m: i64) -> Polynomial {
    let mut acc = Polynomial::zero(r);
    if m < 0 {
        return acc;
    }
    for i in 0..=d as i64 {
        let j = m - i;
        if (0..=d as i64).contains(&j) {
            acc = &acc + &(&Polynomial::var(r, i as usize) * &Polynomial::var(r, j as usize));
        }
    }
    acc
}

/// `z_k`, zero outside `0..=d`.
fn z_k(r: &RingRef, d: usize, k: i64) -> Polynomial {
    if (0..=d as i64).contains(&k) {
        Polynomial::var(r, k as usize)
    } else {
        Polynomial::zero(r)
    }
}

/// `I_d` over the given field.
pub fn single_summand_ideal(d: usize, field: FieldSpec) -> Result<Ideal> {
    let (r, gens) = single_summand_generators(d, field)?;
    Ideal::new(&r, gens)
}

/// Whether `f_0, ..., f_{2d}` is a Groebner basis under grevlex.
pub fn verify_claim1(d: usize, field: FieldSpec) -> Result<bool> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidArgument("characteristic 2 is excluded".into()));
    }
    let (_, gens) = single_summand_generators(d, field)?;
    is_groebner_basis(&gens, MonomialOrder::GradedReverseLex)
}

/// `a_k = m + 1 - k`, the solution with `a_m = 1` of `a_i + a_ν + a_μ = 0`
/// over `i + ν + μ = 3m + 3`.
pub fn spoly_coefficients(m: usize, d: usize) -> Vec<i64> {
    (0..=d as i64).map(|k| m as i64 + 1 - k).collect()
}

/// Whether the coefficients solve every linear condition.
pub fn verify_spoly_coefficients(m: usize, d: usize) -> bool {
    let a = spoly_coefficients(m, d);
    let target = 3 * m + 3;
    let mut ok = a[m] == 1 && a.get(m + 1).map_or(true, |&x| x == 0);
    for i in 0..=d {
        for nu in 0..=d {
            if let Some(mu) = target.checked_sub(i + nu) {
                if mu <= d {
                    ok &= a[i] + a[nu] + a[mu] == 0;
                }
            }
        }
    }
    ok
}

/// Result of checking the standard expression for one `(m, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpolyCheck {
    pub identity: bool,
    /// `Some` when `m ≥ 1`.
    pub initial_term: Option<bool>,
}

impl SpolyCheck {
    pub fn holds(&self) -> bool {
        self.identity && self.initial_term.unwrap_or(true)
    }
}

/// `z_m f_{2m+3} - z_{m+2} f_{2m+1} = Σ_{i≥3} (i-1) z_{m+i} f_{2m+3-i} - Σ_{i≥1} (i+1) z_{m-i} f_{2m+3+i}`,
/// with out-of-range indices contributing nothing, and the initial term
/// `z_{m-1} z_{m+2}^2` of the left side for `m ≥ 1`.
pub fn verify_claim2(m: usize, d: usize, field: FieldSpec) -> Result<SpolyCheck> {
    if d < 2 || m > d - 2 {
        return Err(Error::InvalidArgument(format!("need m ≤ d - 2, got m = {m}, d = {d}")));
    }
    let (r, _) = single_summand_generators(d, field)?;
    let (mi, di) = (m as i64, d as i64);
    let lhs = &(&z_k(&r, d, mi) * &f_m(&r, d, 2 * mi + 3)) - &(&z_k(&r, d, mi + 2) * &f_m(&r, d, 2 * mi + 1));
    let mut rhs = Polynomial::zero(&r);
    for i in 3..=di {
        let c = Polynomial::from_int(&r, i - 1);
        rhs = &rhs + &(&c * &(&z_k(&r, d, mi + i) * &f_m(&r, d, 2 * mi + 3 - i)));
    }
    for i in 1..=mi {
        let c = Polynomial::from_int(&r, i + 1);
        rhs = &rhs - &(&c * &(&z_k(&r, d, mi - i) * &f_m(&r, d, 2 * mi + 3 + i)));
    }
    let identity = lhs == rhs;
    let initial_term = (m >= 1).then(|| {
        let mut e = vec![0u16; d + 1];
        e[m - 1] = 1;
        e[m + 2] = 2;
        lhs.leading_monomial() == Some(&Monomial::new(&e))
    });
    Ok(SpolyCheck { identity, initial_term })
}

/// `(I_d : z_d) = (z_d, z_{d-1}) + I_{d-2}` by reduced bases.
pub fn verify_saturation_identity(d: usize, field: FieldSpec) -> Result<bool> {
    if d < 2 {
        return Err(Error::InvalidArgument("need d ≥ 2".into()));
    }
    let i = single_summand_ideal(d, field)?;
    let r = i.ring().clone();
    let lhs = ideal_quotient(&i, &Polynomial::var(&r, d))?;
    let lower = embed(&single_summand_ideal(d - 2, field)?, &r)?;
    let rhs = lower.with(&[Polynomial::var(&r, d), Polynomial::var(&r, d - 1)])?;
    lhs.equals(&rhs)
}

/// `(I_d, z_d) = (I_{d-1}, z_d)`.
pub fn verify_companion_identity(d: usize, field: FieldSpec) -> Result<bool> {
    if d < 1 {
        return Err(Error::InvalidArgument("need d ≥ 1".into()));
    }
    let i = single_summand_ideal(d, field)?;
    let r = i.ring().clone();
    let zd = Polynomial::var(&r, d);
    let lhs = i.with(std::slice::from_ref(&zd))?;
    let rhs = embed(&single_summand_ideal(d - 1, field)?, &r)?.with(&[zd])?;
    lhs.equals(&rhs)
}

/// `I_e ⊂ k[z0..ze]` inside a ring with more `z` variables.
fn embed(ideal: &Ideal, target: &RingRef) -> Result<Ideal> {
    ideal.map_vars(target, &(0..ideal.ring().nvars()).collect::<Vec<_>>())
}

/// The scheme `2L` in `P^3`: `(x0, x1)^2`.
pub fn double_line(field: FieldSpec) -> Result<Ideal> {
    let r = d5_ring(field)?;
    d5_line(&r).pow(2)
}

/// `(a^2, b^2, c^2, d^2, 2ab, 2cd, ac, bd, ad + bc)`.
pub fn double_line_listed(field: FieldSpec) -> Result<Ideal> {
    let fam = LineFamily::new(3, field)?;
    Ideal::parse(fam.params(), &["a^2", "b^2", "c^2", "d^2", "2*a*b", "2*c*d", "a*c", "b*d", "a*d + b*c"])
}

/// Line conditions for `2L`.
pub fn double_line_conditions_ideal(field: FieldSpec) -> Result<Ideal> {
    line_condition_ideal(&LineFamily::new(3, field)?, &double_line(field)?)
}

/// Line conditions for `Y = Spec O_S / I^(3)` on the cubic surface.
pub fn d5_line_conditions_ideal(field: FieldSpec) -> Result<Ideal> {
    line_condition_ideal(&LineFamily::new(3, field)?, &symbolic_power_d5(3, field)?)
}

/// The presentation printed for the local ring of `Hilb(Y)`, taken as written.
pub fn d5_displayed_conditions(field: FieldSpec) -> Result<Ideal> {
    let fam = LineFamily::new(3, field)?;
    Ideal::parse(
        fam.params(),
        &[
            "a^2", "b^2", "c^3", "d^2", "2*a*b", "3*c^2*d", "3*d^2*a*c", "b*c", "a*d + b*c", "a + c^2", "b + 2*c*d",
        ],
    )
}

/// `dim O_G / m^2 = 1 + dim G(2, 4)` next to the length of `Hilb(2L)`.
pub fn grassmannian_heuristic() -> Result<(u64, u64)> {
    let q = FieldSpec::rationals();
    let fam = LineFamily::new(3, q)?;
    let tangent = truncated_quotient_length(&Ideal::new(fam.params(), Vec::new())?, 2)? as u64;
    Ok((tangent, local_length(&double_line_conditions_ideal(q)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_solution() {
        for d in 2..=10 {
            for m in 0..=d - 2 {
                assert!(verify_spoly_coefficients(m, d));
            }
        }
        assert_eq!(spoly_coefficients(1, 4), vec![2, 1, 0, -1, -2]);
    }

    #[test]
    fn spoly_range_is_enforced() {
        let q = FieldSpec::rationals();
        assert!(verify_claim2(3, 4, q).is_err());
        assert!(verify_claim2(0, 1, q).is_err());
        assert!(verify_claim2(1, 4, q).unwrap().holds());
    }
}

//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exponents = SmallVec<[u16; 16]>;

/// A monomial as a dense exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n), degree: 0 }
    }

    /// `x_i^e` in `n` variables.
    pub fn var(n: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable when this monomial is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// A monomial order. Variable index 0 has the highest precedence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    Lex,
    #[serde(rename = "grlex")]
    GradedLex,
    #[serde(rename = "grevlex")]
    GradedReverseLex,
    /// Product order: grevlex on variables `[0, split)`, ties broken by
    /// grevlex on `[split, n)`. Eliminates the first block.
    Block { split: usize },
}

impl MonomialOrder {
    /// Checked comparison.
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.nvars() != v.nvars() {
            return Err(Error::VariableCountMismatch(u.nvars(), v.nvars()));
        }
        Ok(self.cmp(u, v))
    }

    /// Comparison for monomials already known to share a ring.
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex(&u.exps, &v.exps),
            MonomialOrder::GradedLex => {
                u.degree.cmp(&v.degree).then_with(|| lex(&u.exps, &v.exps))
            }
            MonomialOrder::GradedReverseLex => {
                u.degree.cmp(&v.degree).then_with(|| revlex(&u.exps, &v.exps))
            }
            MonomialOrder::Block { split } => {
                let (ua, ub) = u.exps.split_at(split);
                let (va, vb) = v.exps.split_at(split);
                grevlex_slice(ua, va).then_with(|| grevlex_slice(ub, vb))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GradedLex => "grlex".into(),
            MonomialOrder::GradedReverseLex => "grevlex".into(),
            MonomialOrder::Block { split } => format!("block:{split}"),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" | "deglex" => Ok(MonomialOrder::GradedLex),
            "grevlex" | "revlex" | "degrevlex" => Ok(MonomialOrder::GradedReverseLex),
            _ if s.starts_with("block:") => s["block:".len()..]
                .parse()
                .map(|split| MonomialOrder::Block { split })
                .map_err(|_| Error::InvalidArgument(format!("bad block split in `{s}`"))),
            _ => Err(Error::InvalidArgument(format!("unknown monomial order `{s}`"))),
        }
    }

    /// Whether this order compares total degree first.
    pub fn is_graded(&self) -> bool {
        match self {
            MonomialOrder::Lex => false,
            MonomialOrder::GradedLex | MonomialOrder::GradedReverseLex => true,
            MonomialOrder::Block { split } => *split == 0,
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Reverse-lexicographic tiebreak: scanning from the last variable, the
/// monomial with the smaller exponent is larger.
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match y.cmp(x) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex_slice(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const ORDERS: [MonomialOrder; 5] = [
        MonomialOrder::Lex,
        MonomialOrder::GradedLex,
        MonomialOrder::GradedReverseLex,
        MonomialOrder::Block { split: 1 },
        MonomialOrder::Block { split: 2 },
    ];

    #[test]
    fn grevlex_prefers_square_of_middle_variable() {
        // z1^2 vs z0*z2 with z0 > z1 > z2
        let u = Monomial::new(&[0, 2, 0]);
        let v = Monomial::new(&[1, 0, 1]);
        assert_eq!(MonomialOrder::GradedReverseLex.compare(&u, &v).unwrap(), Ordering::Greater);
        // lex disagrees: z0 z2 > z1^2
        assert_eq!(MonomialOrder::Lex.cmp(&u, &v), Ordering::Less);
    }

    #[test]
    fn lex_compares_first_exponent() {
        let u = Monomial::new(&[2, 1]);
        let v = Monomial::new(&[1, 3]);
        assert_eq!(MonomialOrder::Lex.cmp(&u, &v), Ordering::Greater);
        assert_eq!(MonomialOrder::GradedLex.cmp(&u, &v), Ordering::Less);
    }

    #[test]
    fn reflexive_and_mismatch() {
        let u = Monomial::new(&[1, 2, 3]);
        for o in ORDERS {
            assert_eq!(o.cmp(&u, &u), Ordering::Equal);
        }
        let w = Monomial::new(&[1, 2]);
        assert_eq!(
            MonomialOrder::Lex.compare(&u, &w),
            Err(Error::VariableCountMismatch(3, 2))
        );
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block { split: 1 };
        // t beats every monomial free of t
        let t = Monomial::new(&[1, 0, 0]);
        let big = Monomial::new(&[0, 9, 9]);
        assert_eq!(o.cmp(&t, &big), Ordering::Greater);
    }

    #[test]
    fn order_names_round_trip() {
        for o in [MonomialOrder::Lex, MonomialOrder::GradedLex, MonomialOrder::GradedReverseLex, MonomialOrder::Block { split: 2 }] {
            assert_eq!(MonomialOrder::parse(&o.name()).unwrap(), o);
        }
        assert!(MonomialOrder::parse("block:x").is_err());
        assert!(MonomialOrder::parse("elim").is_err());
    }

    #[test]
    fn gcd_lcm_quotient() {
        let a = Monomial::new(&[2, 0, 1]);
        let b = Monomial::new(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), Monomial::new(&[2, 3, 1]));
        assert_eq!(a.gcd(&b), Monomial::new(&[1, 0, 0]));
        assert_eq!(a.quotient_of(&a.lcm(&b)), Some(Monomial::new(&[0, 3, 0])));
        assert!(a.quotient_of(&b).is_none());
        assert!(Monomial::new(&[2, 0]).is_coprime(&Monomial::new(&[0, 2])));
        assert_eq!(Monomial::new(&[0, 4, 0]).pure_power_var(), Some(1));
        assert_eq!(Monomial::new(&[1, 4, 0]).pure_power_var(), None);
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u16..4, n).prop_map(|e| Monomial::new(&e))
    }

    proptest! {
        #[test]
        fn orders_are_total_multiplicative_well_founded(
            u in mono(4), v in mono(4), w in mono(4), oi in 0usize..5
        ) {
            let o = ORDERS[oi];
            let uv = o.cmp(&u, &v);
            // antisymmetry and totality
            prop_assert_eq!(uv, o.cmp(&v, &u).reverse());
            prop_assert_eq!(uv == Ordering::Equal, u == v);
            // transitivity on the triple
            if uv != Ordering::Less && o.cmp(&v, &w) != Ordering::Less {
                prop_assert_ne!(o.cmp(&u, &w), Ordering::Less);
            }
            // multiplicativity
            prop_assert_eq!(o.cmp(&u.mul(&w), &v.mul(&w)), uv);
            // 1 is the minimum
            prop_assert_ne!(o.cmp(&u, &Monomial::one(4)), Ordering::Less);
        }
    }
}

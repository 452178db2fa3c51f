//! Split bundles on P^1 and maps between them as matrices of binary forms.
//!
//! Global sections are degree-0 strands of graded maps over `k[x, y]`:
//! `H^0(O(e))` has the monomial basis `x^e, x^{e-1} y, ..., y^e`.

mod hochschild;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use hochschild::{
    basis_cocycles, h2_sym_dim, kernel_lambda, kernel_lambda_dim, literal_basis_cocycles, ChartAlgebra,
    CochainComplex, CochainSpace, Cocycle, ExtDimensions, KernelLambda, ext_dimensions,
};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{Coeff, FieldSpec};

/// `⊕ O(e)` over the listed twists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SheafSum {
    twists: Vec<i64>,
}

impl SheafSum {
    pub fn new(twists: Vec<i64>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::InvalidArgument("a sheaf sum needs at least one summand".into()));
        }
        Ok(SheafSum { twists })
    }

    /// `O^a`.
    pub fn trivial(a: usize) -> Self {
        SheafSum { twists: vec![0; a.max(1)] }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn degree(&self) -> i64 {
        self.twists.iter().sum()
    }

    pub fn h0(&self, m: i64) -> usize {
        self.twists.iter().map(|&t| (t + m + 1).max(0) as usize).sum()
    }

    pub fn h1(&self, m: i64) -> usize {
        self.twists.iter().map(|&t| (-t - m - 1).max(0) as usize).sum()
    }

    pub fn twisted(&self, m: i64) -> SheafSum {
        SheafSum { twists: self.twists.iter().map(|t| t + m).collect() }
    }

    pub fn dual(&self) -> SheafSum {
        SheafSum { twists: self.twists.iter().map(|t| -t).collect() }
    }

    /// Twists sorted ascending; the canonical form of the multiset.
    pub fn sorted(&self) -> SheafSum {
        let mut t = self.twists.clone();
        t.sort_unstable();
        SheafSum { twists: t }
    }
}

impl fmt::Display for SheafSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(|t| format!("O({t})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `dim Hom(A, B) = Σ max(b - a + 1, 0)`.
pub fn hom_dim(a: &SheafSum, b: &SheafSum) -> usize {
    a.twists.iter().flat_map(|&s| b.twists.iter().map(move |&t| (t - s + 1).max(0) as usize)).sum()
}

/// A binary form of fixed degree; `coeffs[i]` multiplies `x^{deg-i} y^i`.
/// Negative degree means the form is forced to be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    degree: i64,
    coeffs: Vec<Coeff>,
}

impl BinaryForm {
    pub fn zero(field: FieldSpec, degree: i64) -> Self {
        BinaryForm { degree, coeffs: vec![field.zero(); (degree + 1).max(0) as usize] }
    }

    /// `x^{deg-i} y^i`.
    pub fn monomial(field: FieldSpec, degree: i64, i: usize) -> Self {
        let mut f = Self::zero(field, degree);
        f.coeffs[i] = field.one();
        f
    }

    pub fn from_coeffs(degree: i64, coeffs: Vec<Coeff>) -> Result<Self> {
        if coeffs.len() as i64 != (degree + 1).max(0) {
            return Err(Error::ShapeMismatch(format!("{} coefficients for a form of degree {degree}", coeffs.len())));
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    pub fn mul(&self, other: &BinaryForm, field: FieldSpec) -> BinaryForm {
        let degree = self.degree + other.degree;
        let mut out = Self::zero(field, degree);
        if self.degree < 0 || other.degree < 0 {
            return out;
        }
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = field.add(&out.coeffs[i + j], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &BinaryForm, field: FieldSpec) -> BinaryForm {
        assert_eq!(self.degree, other.degree);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| field.add(a, b)).collect();
        BinaryForm { degree: self.degree, coeffs }
    }

    pub fn scale(&self, c: &Coeff, field: FieldSpec) -> BinaryForm {
        BinaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| field.mul(a, c)).collect() }
    }

    /// Value at `(x, y) = (1, t)` as coefficients of `1, t, t^2, ...`.
    pub fn dehomogenize(&self) -> &[Coeff] {
        &self.coeffs
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c {
                Coeff::Q(q) if c.is_negative() => (true, Coeff::Q(-q)),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let (ex, ey) = (self.degree as usize - i, i);
            let mut mono = Vec::new();
            if ex > 0 {
                mono.push(if ex == 1 { "x".to_string() } else { format!("x^{ex}") });
            }
            if ey > 0 {
                mono.push(if ey == 1 { "y".to_string() } else { format!("y^{ey}") });
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A map `source → target` of split bundles; entry `(r, c)` is a form of
/// degree `target_r - source_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHom {
    field: FieldSpec,
    source: SheafSum,
    target: SheafSum,
    entries: Vec<Vec<BinaryForm>>,
}

impl GradedHom {
    pub fn new(field: FieldSpec, source: SheafSum, target: SheafSum, entries: Vec<Vec<BinaryForm>>) -> Result<Self> {
        if entries.len() != target.rank() || entries.iter().any(|row| row.len() != source.rank()) {
            return Err(Error::ShapeMismatch("entry matrix does not match source/target ranks".into()));
        }
        for (r, row) in entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                let want = target.twists[r] - source.twists[c];
                if e.degree != want {
                    return Err(Error::ShapeMismatch(format!(
                        "entry ({r}, {c}) has degree {} instead of {want}",
                        e.degree
                    )));
                }
            }
        }
        Ok(GradedHom { field, source, target, entries })
    }

    pub fn zero(field: FieldSpec, source: SheafSum, target: SheafSum) -> Self {
        let entries = target
            .twists
            .iter()
            .map(|t| source.twists.iter().map(|s| BinaryForm::zero(field, t - s)).collect())
            .collect();
        GradedHom { field, source, target, entries }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn source(&self) -> &SheafSum {
        &self.source
    }

    pub fn target(&self) -> &SheafSum {
        &self.target
    }

    pub fn entry(&self, r: usize, c: usize) -> &BinaryForm {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<BinaryForm>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(BinaryForm::is_zero)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GradedHom) -> Result<GradedHom> {
        if inner.target != self.source {
            return Err(Error::ShapeMismatch("composition through different sheaves".into()));
        }
        let f = self.field;
        let mut out = GradedHom::zero(f, inner.source.clone(), self.target.clone());
        for r in 0..self.target.rank() {
            for c in 0..inner.source.rank() {
                let mut acc = BinaryForm::zero(f, self.target.twists[r] - inner.source.twists[c]);
                for k in 0..self.source.rank() {
                    let p = self.entries[r][k].mul(&inner.entries[k][c], f);
                    if p.degree == acc.degree {
                        acc = acc.add(&p, f);
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        Ok(out)
    }

    /// Kronecker product; summand `(i, j)` sits at index `i * rank2 + j`.
    pub fn tensor(&self, other: &GradedHom) -> GradedHom {
        let f = self.field;
        let kron = |a: &SheafSum, b: &SheafSum| SheafSum {
            twists: a.twists.iter().flat_map(|x| b.twists.iter().map(move |y| x + y)).collect(),
        };
        let source = kron(&self.source, &other.source);
        let target = kron(&self.target, &other.target);
        let mut entries = Vec::new();
        for r1 in 0..self.target.rank() {
            for r2 in 0..other.target.rank() {
                let mut row = Vec::new();
                for c1 in 0..self.source.rank() {
                    for c2 in 0..other.source.rank() {
                        row.push(self.entries[r1][c1].mul(&other.entries[r2][c2], f));
                    }
                }
                entries.push(row);
            }
        }
        GradedHom { field: f, source, target, entries }
    }

    /// The dual map `target^∨ → source^∨`.
    pub fn dual(&self) -> GradedHom {
        let entries = (0..self.source.rank())
            .map(|c| (0..self.target.rank()).map(|r| self.entries[r][c].clone()).collect())
            .collect();
        GradedHom { field: self.field, source: self.target.dual(), target: self.source.dual(), entries }
    }

    /// The induced map `H^0(source(m)) → H^0(target(m))` in monomial bases.
    pub fn slice(&self, m: i64) -> Matrix {
        let f = self.field;
        let col_offsets = offsets(&self.source, m);
        let row_offsets = offsets(&self.target, m);
        let mut mat = Matrix::zeros(f, self.target.h0(m), self.source.h0(m));
        for (c, &s) in self.source.twists.iter().enumerate() {
            let ds = s + m;
            for i in 0..(ds + 1).max(0) as usize {
                let g = BinaryForm::monomial(f, ds, i);
                for (r, &t) in self.target.twists.iter().enumerate() {
                    if t + m < 0 {
                        continue;
                    }
                    let img = self.entries[r][c].mul(&g, f);
                    for (j, v) in img.coeffs.iter().enumerate() {
                        if !v.is_zero() {
                            mat.set(row_offsets[r] + j, col_offsets[c] + i, v.clone());
                        }
                    }
                }
            }
        }
        mat
    }

    /// `h^0` of the cokernel twisted by `m`, assuming this map is injective
    /// as a map of sheaves. The `H^1` map's rank is read off the dual map by
    /// Serre duality.
    pub fn cokernel_h0(&self, m: i64) -> usize {
        let rank0 = self.slice(m).rank();
        let rank1 = self.dual().slice(-m - 2).rank();
        self.target.h0(m) - rank0 + self.source.h1(m) - rank1
    }

    /// Splitting type of the cokernel, reconstructed from `h^0(N(m))` by
    /// second differences and checked against rank and degree.
    pub fn cokernel_type(&self) -> Result<SheafSum> {
        let rank = self.target.rank() as i64 - self.source.rank() as i64;
        if rank <= 0 {
            return Err(Error::InvalidArgument("cokernel has no positive rank".into()));
        }
        let degree = self.target.degree() - self.source.degree();
        // every summand of a quotient of ⊕O(b) has twist ≥ min b
        let lo = *self.target.twists.iter().min().unwrap();
        let hi = degree - (rank - 1) * lo;
        let h = |m: i64| self.cokernel_h0(m) as i64;
        let mut twists = Vec::new();
        for a in lo..=hi {
            let mult = h(-a) - 2 * h(-a - 1) + h(-a - 2);
            if mult < 0 {
                return Err(Error::ShapeMismatch(format!("negative multiplicity at twist {a}")));
            }
            twists.extend(std::iter::repeat(a).take(mult as usize));
        }
        let n = SheafSum { twists };
        if n.rank() as i64 != rank || n.degree() != degree {
            return Err(Error::ShapeMismatch(format!(
                "reconstructed {} has rank {} and degree {}, expected {rank} and {degree}",
                n,
                n.rank(),
                n.degree()
            )));
        }
        Ok(n)
    }

    /// Entries as strings, row by row.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|row| row.iter().map(|e| e.to_string()).collect()).collect()
    }
}

fn offsets(s: &SheafSum, m: i64) -> Vec<usize> {
    let mut acc = 0;
    s.twists
        .iter()
        .map(|&t| {
            let o = acc;
            acc += (t + m + 1).max(0) as usize;
            o
        })
        .collect()
}

/// `λ: O(-n) → O^{n+1}`, `f ↦ (x^n f, x^{n-1} y f, ..., y^n f)`.
pub fn lambda_map(n: usize, field: FieldSpec) -> Result<GradedHom> {
    if n == 0 {
        return Err(Error::InvalidArgument("λ needs n ≥ 1".into()));
    }
    let entries = (0..=n).map(|i| vec![BinaryForm::monomial(field, n as i64, i)]).collect();
    GradedHom::new(field, SheafSum { twists: vec![-(n as i64)] }, SheafSum::trivial(n + 1), entries)
}

/// `φ: O^{n+1} → O(1)^n`, `(f_1..f_{n+1}) ↦ (y f_1 - x f_2, ..., y f_n - x f_{n+1})`.
pub fn phi_map(n: usize, field: FieldSpec) -> Result<GradedHom> {
    if n == 0 {
        return Err(Error::InvalidArgument("φ needs n ≥ 1".into()));
    }
    let mut h = GradedHom::zero(field, SheafSum::trivial(n + 1), SheafSum { twists: vec![1; n] });
    let minus = field.from_i64(-1);
    for i in 0..n {
        h.entries[i][i] = BinaryForm::monomial(field, 1, 1);
        h.entries[i][i + 1] = BinaryForm::monomial(field, 1, 0).scale(&minus, field);
    }
    Ok(h)
}

/// Ranks of `λ_m: S_{m-n} → S_m^{n+1}` and `φ_m: S_m^{n+1} → S_{m+1}^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeExactness {
    pub n: usize,
    pub m: i64,
    pub source_dim: usize,
    pub middle_dim: usize,
    pub target_dim: usize,
    pub rank_lambda: usize,
    pub rank_phi: usize,
}

impl DegreeExactness {
    pub fn left_exact(&self) -> bool {
        self.rank_lambda == self.source_dim
    }

    pub fn middle_exact(&self) -> bool {
        self.rank_lambda + self.rank_phi == self.middle_dim
    }

    pub fn right_exact(&self) -> bool {
        self.rank_phi == self.target_dim
    }
}

pub fn degree_exactness(n: usize, m: i64, field: FieldSpec) -> Result<DegreeExactness> {
    let l = lambda_map(n, field)?;
    let p = phi_map(n, field)?;
    let (sl, sp) = (l.slice(m), p.slice(m));
    Ok(DegreeExactness {
        n,
        m,
        source_dim: l.source().h0(m),
        middle_dim: l.target().h0(m),
        target_dim: p.target().h0(m),
        rank_lambda: sl.rank(),
        rank_phi: sp.rank(),
    })
}

/// Splitting type of `coker(λ ⊗ λ)` for `λ = λ(d)`.
pub fn tensor_square_cokernel_type(d: usize, field: FieldSpec) -> Result<SheafSum> {
    let l = lambda_map(d, field)?;
    l.tensor(&l).cokernel_type()
}

//! Hochschild cochains of a split square-zero algebra `O ⊕ ⊕ O(t_j)` on P^1
//! with values in a split bundle `F`, on which the nilpotent summands act by 0.
//!
//! A `k`-cochain is a family of forms, one for every word `w` of components
//! and summand `r` of `F`, of degree `c_r - Σ twist(w_i)`. Component 0 is
//! the unit. Basis vectors are ordered by word (lexicographic, unit first),
//! then by `r`, then by monomial `x^{D-i} y^i` with `i` ascending.

use serde::Serialize;

use super::{BinaryForm, GradedHom, SheafSum};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polyring::{Coeff, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Block {
    word: Vec<usize>,
    r: usize,
    degree: i64,
    offset: usize,
}

/// Basis bookkeeping for `Hom(A^{⊗k}, F)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainSpace {
    arity: usize,
    comps: Vec<i64>,
    coeff: SheafSum,
    blocks: Vec<Block>,
    dim: usize,
}

impl CochainSpace {
    fn new(arity: usize, comps: &[i64], coeff: &SheafSum) -> Self {
        let nc = comps.len();
        let mut blocks = Vec::new();
        let mut offset = 0;
        for code in 0..nc.pow(arity as u32) {
            let word = decode(code, nc, arity);
            let tw: i64 = word.iter().map(|&c| comps[c]).sum();
            for (r, &c) in coeff.twists().iter().enumerate() {
                let degree = c - tw;
                blocks.push(Block { word: word.clone(), r, degree, offset });
                offset += (degree + 1).max(0) as usize;
            }
        }
        CochainSpace { arity, comps: comps.to_vec(), coeff: coeff.clone(), blocks, dim: offset }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn block(&self, word: &[usize], r: usize) -> &Block {
        let nc = self.comps.len();
        let code = word.iter().fold(0, |acc, &c| acc * nc + c);
        &self.blocks[code * self.coeff.rank() + r]
    }

    /// Position of monomial `i` in the `(word, r)` component.
    pub fn index(&self, word: &[usize], r: usize, i: usize) -> Option<usize> {
        if word.len() != self.arity || word.iter().any(|&c| c >= self.comps.len()) || r >= self.coeff.rank() {
            return None;
        }
        let b = self.block(word, r);
        ((i as i64) <= b.degree).then(|| b.offset + i)
    }

    /// Degree of the forms in the `(word, r)` component.
    pub fn degree(&self, word: &[usize], r: usize) -> i64 {
        self.block(word, r).degree
    }

    /// The `(word, r)` component of a cochain vector as a form.
    pub fn component(&self, values: &[Coeff], word: &[usize], r: usize) -> BinaryForm {
        let b = self.block(word, r);
        let len = (b.degree + 1).max(0) as usize;
        BinaryForm { degree: b.degree, coeffs: values[b.offset..b.offset + len].to_vec() }
    }
}

fn decode(mut code: usize, nc: usize, arity: usize) -> Vec<usize> {
    let mut w = vec![0; arity];
    for slot in w.iter_mut().rev() {
        *slot = code % nc;
        code /= nc;
    }
    w
}

/// Component of a product: the unit is neutral, nilpotents multiply to zero.
fn comp_mul(a: usize, b: usize) -> Option<usize> {
    match (a, b) {
        (0, c) | (c, 0) => Some(c),
        _ => None,
    }
}

/// Spaces `C^1, C^2, C^3` with the differentials between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    field: FieldSpec,
    spaces: [CochainSpace; 3],
}

impl CochainComplex {
    /// `nil_twists` are the twists of the square-zero summands.
    pub fn new(nil_twists: &[i64], coeff: &SheafSum, field: FieldSpec) -> Self {
        let mut comps = vec![0];
        comps.extend_from_slice(nil_twists);
        let spaces = [1, 2, 3].map(|k| CochainSpace::new(k, &comps, coeff));
        CochainComplex { field, spaces }
    }

    /// The first-order thickening `O ⊕ O(-d)` of the line.
    pub fn for_line(d: usize, coeff: &SheafSum, field: FieldSpec) -> Self {
        Self::new(&[-(d as i64)], coeff, field)
    }

    /// The trivial extension `O ⊕ O^{d+1}`.
    pub fn for_trivial(d: usize, coeff: &SheafSum, field: FieldSpec) -> Self {
        Self::new(&vec![0; d + 1], coeff, field)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeff(&self) -> &SheafSum {
        &self.spaces[0].coeff
    }

    /// Twists of the algebra components, unit first.
    pub fn components(&self) -> &[i64] {
        &self.spaces[0].comps
    }

    /// `C^k` for `k = 1, 2, 3`.
    pub fn space(&self, k: usize) -> &CochainSpace {
        &self.spaces[k - 1]
    }

    /// Entries `(row, col, sign)` of the differential `C^k → C^{k+1}`.
    fn delta_entries(&self, k: usize) -> Vec<(usize, usize, i64)> {
        let (src, dst) = (self.space(k), self.space(k + 1));
        let mut out = Vec::new();
        for b in &dst.blocks {
            if b.degree < 0 {
                continue;
            }
            let w = &b.word;
            let mut terms: Vec<(Vec<usize>, i64)> = Vec::new();
            if w[0] == 0 {
                terms.push((w[1..].to_vec(), 1));
            }
            for i in 0..k {
                if let Some(p) = comp_mul(w[i], w[i + 1]) {
                    let mut v = w[..i].to_vec();
                    v.push(p);
                    v.extend_from_slice(&w[i + 2..]);
                    terms.push((v, if i % 2 == 0 { -1 } else { 1 }));
                }
            }
            if w[k] == 0 {
                terms.push((w[..k].to_vec(), if k % 2 == 0 { -1 } else { 1 }));
            }
            for (v, sign) in terms {
                let sb = src.block(&v, b.r);
                debug_assert_eq!(sb.degree, b.degree);
                for i in 0..=b.degree as usize {
                    out.push((b.offset + i, sb.offset + i, sign));
                }
            }
        }
        out
    }

    fn delta(&self, k: usize) -> Matrix {
        let f = self.field;
        let mut m = Matrix::zeros(f, self.space(k + 1).dim, self.space(k).dim);
        for (r, c, s) in self.delta_entries(k) {
            m.add_to(r, c, &f.from_i64(s));
        }
        m
    }

    /// `δ^0: C^1 → C^2`.
    pub fn delta0(&self) -> Matrix {
        self.delta(1)
    }

    /// `δ^1: C^2 → C^3`.
    pub fn delta1(&self) -> Matrix {
        self.delta(2)
    }

    /// Argument swap on `C^2`.
    pub fn swap(&self) -> Matrix {
        let s = self.space(2);
        let mut m = Matrix::zeros(self.field, s.dim, s.dim);
        for b in &s.blocks {
            let t = s.block(&[b.word[1], b.word[0]], b.r);
            for i in 0..(b.degree + 1).max(0) as usize {
                m.set(t.offset + i, b.offset + i, self.field.one());
            }
        }
        m
    }

    fn one_minus_swap(&self) -> Matrix {
        let f = self.field;
        let mut m = self.swap();
        let n = m.rows();
        let mut out = Matrix::identity(f, n);
        for r in 0..n {
            for c in 0..n {
                let v = m.get(r, c).clone();
                if !v.is_zero() {
                    out.add_to(r, c, &f.neg(&v));
                }
            }
        }
        m = out;
        m
    }

    /// Basis of symmetric 2-cocycles.
    pub fn symmetric_cocycles(&self) -> Vec<Vec<Coeff>> {
        self.delta1().vstack(&self.one_minus_swap()).expect("same width").nullspace()
    }

    pub fn coboundary_rank(&self) -> usize {
        self.delta0().rank()
    }

    /// `dim` of symmetric 2-cocycles modulo coboundaries.
    pub fn h2_sym_dim(&self) -> usize {
        self.symmetric_cocycles().len() - self.coboundary_rank()
    }

    pub fn cocycle(&self, values: Vec<Coeff>) -> Result<Cocycle> {
        if values.len() != self.space(2).dim {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a cochain space of dimension {}",
                values.len(),
                self.space(2).dim
            )));
        }
        Ok(Cocycle { complex: self.clone(), values })
    }

    /// A 2-cochain with a single nonzero monomial.
    pub fn unit_cochain(&self, word: [usize; 2], r: usize, i: usize) -> Result<Cocycle> {
        let s = self.space(2);
        let idx = s
            .index(&word, r, i)
            .ok_or_else(|| Error::InvalidArgument(format!("no basis element ({word:?}, {r}, {i})")))?;
        let mut v = vec![self.field.zero(); s.dim];
        v[idx] = self.field.one();
        self.cocycle(v)
    }

    /// Pullback of 2-cochains of `self` along an algebra map from `source`'s
    /// algebra. `comp_map` sends source components to ours; both complexes
    /// must share the coefficient sheaf.
    pub fn pullback_matrix(&self, source: &CochainComplex, comp_map: &GradedHom) -> Result<Matrix> {
        if self.coeff() != source.coeff() {
            return Err(Error::ShapeMismatch("pullback between different coefficient sheaves".into()));
        }
        if comp_map.source().twists() != source.components() || comp_map.target().twists() != self.components() {
            return Err(Error::ShapeMismatch("component map does not match the algebras".into()));
        }
        let f = self.field;
        let (ys, xs) = (self.space(2), source.space(2));
        let mut m = Matrix::zeros(f, xs.dim, ys.dim);
        for xb in &xs.blocks {
            if xb.degree < 0 {
                continue;
            }
            for yb in ys.blocks.iter().filter(|b| b.r == xb.r && b.degree >= 0) {
                let p = comp_map
                    .entry(yb.word[0], xb.word[0])
                    .mul(comp_map.entry(yb.word[1], xb.word[1]), f);
                if p.is_zero() {
                    continue;
                }
                for mu in 0..=yb.degree as usize {
                    for (k, c) in p.coeffs.iter().enumerate() {
                        if !c.is_zero() {
                            m.add_to(xb.offset + mu + k, yb.offset + mu, c);
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// Post-composition with `hom: F → F'` on 2-cochains.
    pub fn push_matrix(&self, hom: &GradedHom) -> Result<(CochainComplex, Matrix)> {
        if hom.source() != self.coeff() {
            return Err(Error::ShapeMismatch("push along a map from a different sheaf".into()));
        }
        let f = self.field;
        let out = CochainComplex::new(&self.components()[1..], hom.target(), f);
        let (s, t) = (self.space(2), out.space(2));
        let mut m = Matrix::zeros(f, t.dim, s.dim);
        for sb in s.blocks.iter().filter(|b| b.degree >= 0) {
            for (r2, _) in hom.target().twists().iter().enumerate() {
                let tb = t.block(&sb.word, r2);
                let e = hom.entry(r2, sb.r);
                if tb.degree < 0 || e.is_zero() {
                    continue;
                }
                for mu in 0..=sb.degree as usize {
                    for (k, c) in e.coeffs.iter().enumerate() {
                        if !c.is_zero() {
                            m.add_to(tb.offset + mu + k, sb.offset + mu, c);
                        }
                    }
                }
            }
        }
        Ok((out, m))
    }
}

/// A 2-cochain together with the complex it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    complex: CochainComplex,
    values: Vec<Coeff>,
}

impl Cocycle {
    pub fn complex(&self) -> &CochainComplex {
        &self.complex
    }

    pub fn values(&self) -> &[Coeff] {
        &self.values
    }

    pub fn component(&self, word: [usize; 2], r: usize) -> BinaryForm {
        self.complex.space(2).component(&self.values, &word, r)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Coeff::is_zero)
    }

    pub fn is_cocycle(&self) -> bool {
        let f = self.complex.field;
        let mut img = vec![f.zero(); self.complex.space(3).dim];
        for (r, c, s) in self.complex.delta_entries(2) {
            if !self.values[c].is_zero() {
                img[r] = f.add(&img[r], &f.mul(&f.from_i64(s), &self.values[c]));
            }
        }
        img.iter().all(Coeff::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        let sw = self.complex.swap().apply(&self.values).expect("square");
        sw == self.values
    }

    pub fn add(&self, other: &Cocycle) -> Result<Cocycle> {
        if self.complex != other.complex {
            return Err(Error::ShapeMismatch("cochains from different complexes".into()));
        }
        let f = self.complex.field;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f.add(a, b)).collect();
        Ok(Cocycle { complex: self.complex.clone(), values })
    }

    /// `c · f`.
    pub fn scale(&self, c: &Coeff) -> Cocycle {
        let f = self.complex.field;
        Cocycle { complex: self.complex.clone(), values: self.values.iter().map(|v| f.mul(v, c)).collect() }
    }

    /// `hom ∘ f`.
    pub fn push(&self, hom: &GradedHom) -> Result<Cocycle> {
        let (out, m) = self.complex.push_matrix(hom)?;
        let values = m.apply(&self.values)?;
        Ok(Cocycle { complex: out, values })
    }

    /// Solve `hom ∘ g = self` for `g` with values in `hom`'s source.
    pub fn unpush(&self, hom: &GradedHom) -> Result<Option<Cocycle>> {
        let base = CochainComplex::new(&self.complex.components()[1..], hom.source(), self.complex.field);
        let (out, m) = base.push_matrix(hom)?;
        if out != self.complex {
            return Err(Error::ShapeMismatch("cochain does not take values in the target of the map".into()));
        }
        Ok(m.solve(&self.values)?.map(|values| Cocycle { complex: base, values }))
    }
}

/// Symmetric 2-cocycles on `O ⊕ O(-d)` with values in `O^a` spanning the
/// cohomology together with the coboundary: for every summand `r`, the
/// unit-unit cocycle (the coboundary of the identity on the unit) followed
/// by the `2d + 1` monomials of degree `2d` on the nilpotent-nilpotent slot.
pub fn basis_cocycles(d: usize, a: usize, field: FieldSpec) -> Result<Vec<Cocycle>> {
    let cx = CochainComplex::for_line(d, &SheafSum::trivial(a), field);
    let mut out = Vec::new();
    for r in 0..a {
        out.push(cx.unit_cochain([0, 0], r, 0)?);
        for i in 0..=2 * d {
            out.push(cx.unit_cochain([1, 1], r, i)?);
        }
    }
    Ok(out)
}

/// The readings `x m'` and `φ_i (x m' + x' m)` placed on the mixed slots
/// with `φ_i` running over degree-`d` monomials. None of them is a cocycle.
pub fn literal_basis_cocycles(d: usize, field: FieldSpec) -> Result<Vec<Cocycle>> {
    let cx = CochainComplex::for_line(d, &SheafSum::trivial(1), field);
    let mut out = vec![cx.unit_cochain([0, 1], 0, 0)?];
    for i in 0..=d {
        out.push(cx.unit_cochain([0, 1], 0, i)?.add(&cx.unit_cochain([1, 0], 0, i)?)?);
    }
    Ok(out)
}

/// `dim` of symmetric extensions of `O ⊕ O(-d)` by `O^a`.
pub fn h2_sym_dim(d: usize, a: usize, field: FieldSpec) -> usize {
    CochainComplex::for_line(d, &SheafSum::trivial(a), field).h2_sym_dim()
}

/// The algebra map `O ⊕ O(-d) → O ⊕ O^{d+1}`, identity on units and `λ` on
/// the nilpotent part, as a component matrix.
fn line_to_trivial(d: usize, field: FieldSpec) -> GradedHom {
    let src = SheafSum { twists: vec![0, -(d as i64)] };
    let tgt = SheafSum { twists: vec![0; d + 2] };
    let mut h = GradedHom::zero(field, src, tgt);
    h.entries[0][0] = BinaryForm::monomial(field, 0, 0);
    for j in 0..=d {
        h.entries[j + 1][1] = BinaryForm::monomial(field, d as i64, j);
    }
    h
}

/// Kernel of pulling 2-cochains back from `O ⊕ O^{d+1}` to `O ⊕ O(-d)`,
/// with the antisymmetric family `e_i ⊗ e_j - e_j ⊗ e_i` inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelLambda {
    pub d: usize,
    pub coeff_rank: usize,
    pub kernel_dim: usize,
    pub symmetric_kernel_dim: usize,
    pub family_size: usize,
    pub family_rank: usize,
    pub family_in_kernel: bool,
    pub family_antisymmetric: bool,
    /// No nonzero combination of the family is symmetric.
    pub family_meets_symmetric_trivially: bool,
}

pub fn kernel_lambda(d: usize, coeff: &SheafSum, field: FieldSpec) -> Result<KernelLambda> {
    if d == 0 {
        return Err(Error::InvalidArgument("λ needs d ≥ 1".into()));
    }
    let y = CochainComplex::for_trivial(d, coeff, field);
    let x = CochainComplex::for_line(d, coeff, field);
    let pb = y.pullback_matrix(&x, &line_to_trivial(d, field))?;
    let kernel_dim = pb.nullspace().len();
    let symmetric_kernel_dim = pb.vstack(&y.one_minus_swap())?.nullspace().len();

    let mut family = Vec::new();
    for r in 0..coeff.rank() {
        if y.space(2).degree(&[1, 1], r) < 0 {
            continue;
        }
        for i in 1..=d + 1 {
            for j in i + 1..=d + 1 {
                for k in 0..=y.space(2).degree(&[i, j], r) as usize {
                    let a = y.unit_cochain([i, j], r, k)?;
                    let b = y.unit_cochain([j, i], r, k)?;
                    family.push(a.add(&b.scale(&field.from_i64(-1)))?);
                }
            }
        }
    }
    let vecs: Vec<Vec<Coeff>> = family.iter().map(|c| c.values.clone()).collect();
    let family_rank = crate::linalg::span_rank(field, y.space(2).dim, &vecs);
    let zero = |v: &[Coeff]| v.iter().all(Coeff::is_zero);
    let family_in_kernel = vecs.iter().all(|v| zero(&pb.apply(v).unwrap()));
    let sw = y.swap();
    let family_antisymmetric = family.iter().all(|c| {
        let s = sw.apply(&c.values).unwrap();
        zero(&s.iter().zip(&c.values).map(|(a, b)| field.add(a, b)).collect::<Vec<_>>())
    });
    let oms = y.one_minus_swap();
    let images: Vec<Vec<Coeff>> = vecs.iter().map(|v| oms.apply(v).unwrap()).collect();
    let family_meets_symmetric_trivially = crate::linalg::span_rank(field, y.space(2).dim, &images) == family_rank;
    Ok(KernelLambda {
        d,
        coeff_rank: coeff.rank(),
        kernel_dim,
        symmetric_kernel_dim,
        family_size: family.len(),
        family_rank,
        family_in_kernel,
        family_antisymmetric,
        family_meets_symmetric_trivially,
    })
}

pub fn kernel_lambda_dim(d: usize, coeff: &SheafSum, field: FieldSpec) -> Result<usize> {
    kernel_lambda(d, coeff, field).map(|k| k.kernel_dim)
}

/// Extension spaces of the trivial extension and of the line, and the map
/// `σ` induced between them by pullback.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtDimensions {
    pub d: usize,
    pub a: usize,
    pub ex_trivial: usize,
    pub ex_line: usize,
    pub ker_sigma: usize,
    pub rank_sigma: usize,
}

/// Computed directly from the two complexes.
pub fn ext_dimensions(d: usize, a: usize, field: FieldSpec) -> Result<ExtDimensions> {
    if d == 0 {
        return Err(Error::InvalidArgument("λ needs d ≥ 1".into()));
    }
    let coeff = SheafSum::trivial(a);
    let y = CochainComplex::for_trivial(d, &coeff, field);
    let x = CochainComplex::for_line(d, &coeff, field);
    let z = y.symmetric_cocycles();
    let by = y.coboundary_rank();
    let ex_trivial = z.len() - by;
    let ex_line = x.h2_sym_dim();
    let pb = y.pullback_matrix(&x, &line_to_trivial(d, field))?;
    let d0x = x.delta0();
    // columns: pulled-back cocycles, then coboundaries on the line
    let rows = x.space(2).dim;
    let pulled: Vec<Vec<Coeff>> = z.iter().map(|v| pb.apply(v).unwrap()).collect();
    let mut m = Matrix::zeros(field, rows, z.len() + d0x.cols());
    for (c, v) in pulled.iter().enumerate() {
        for (r, e) in v.iter().enumerate() {
            m.set(r, c, e.clone());
        }
    }
    for r in 0..rows {
        for c in 0..d0x.cols() {
            m.set(r, z.len() + c, d0x.get(r, c).clone());
        }
    }
    let preimage = m.nullspace().len() - d0x.nullspace().len();
    let ker_sigma = preimage - by;
    Ok(ExtDimensions { d, a, ex_trivial, ex_line, ker_sigma, rank_sigma: ex_trivial - ker_sigma })
}

/// Structure constants of an extension algebra `A ⊕ F` on the chart
/// `x ≠ 0`, truncated to `k[t]/(t^{N+1})` with `t = y/x`.
///
/// Basis vector `p * G + g` stands for `t^p e_g`, where `g` runs over the
/// algebra components and then the summands of `F` (`G` generators in all).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartAlgebra {
    field: FieldSpec,
    ncomps: usize,
    gens: usize,
    truncation: usize,
    /// `gen_table[g][h][p]`: coefficient vector over generators of `t^p` in `e_g e_h`
    gen_table: Vec<Vec<Vec<Vec<Coeff>>>>,
}

impl ChartAlgebra {
    pub fn new(cocycle: &Cocycle, truncation: usize) -> Self {
        let cx = &cocycle.complex;
        let f = cx.field;
        let nc = cx.components().len();
        let nr = cx.coeff().rank();
        let g = nc + nr;
        let zero_vec = || vec![vec![f.zero(); g]; truncation + 1];
        let mut gen_table = vec![vec![zero_vec(); g]; g];
        for p in 0..g {
            for q in 0..g {
                let cell = &mut gen_table[p][q];
                match (p < nc, q < nc) {
                    (true, true) => {
                        if let Some(c) = comp_mul(p, q) {
                            cell[0][c] = f.one();
                        }
                        for r in 0..nr {
                            let form = cocycle.component([p, q], r);
                            for (k, c) in form.dehomogenize().iter().enumerate().take(truncation + 1) {
                                cell[k][nc + r] = c.clone();
                            }
                        }
                    }
                    (true, false) if p == 0 => cell[0][q] = f.one(),
                    (false, true) if q == 0 => cell[0][p] = f.one(),
                    _ => {}
                }
            }
        }
        ChartAlgebra { field: f, ncomps: nc, gens: g, truncation, gen_table }
    }

    pub fn dim(&self) -> usize {
        self.gens * (self.truncation + 1)
    }

    /// Whether basis vector `i` is `t^p v_r` for a summand of `F`.
    pub fn is_module_direction(&self, i: usize) -> bool {
        i % self.gens >= self.ncomps
    }

    /// Product of basis vectors `i` and `j`.
    pub fn product(&self, i: usize, j: usize) -> Vec<Coeff> {
        let f = self.field;
        let (pi, gi) = (i / self.gens, i % self.gens);
        let (pj, gj) = (j / self.gens, j % self.gens);
        let mut out = vec![f.zero(); self.dim()];
        for (k, row) in self.gen_table[gi][gj].iter().enumerate() {
            let p = pi + pj + k;
            if p > self.truncation {
                break;
            }
            for (h, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out[p * self.gens + h] = c.clone();
                }
            }
        }
        out
    }

    /// Bilinear extension of the table.
    pub fn mul(&self, u: &[Coeff], v: &[Coeff]) -> Vec<Coeff> {
        let f = self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = f.mul(a, b);
                for (k, c) in self.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = f.add(&out[k], &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<Coeff> {
        let mut e = vec![self.field.zero(); self.dim()];
        e[i] = self.field.one();
        e
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ij = self.product(i, j);
                (0..n).all(|k| self.mul(&ij, &self.basis(k)) == self.mul(&self.basis(i), &self.product(j, k)))
            })
        })
    }

    /// Whether `psi` (a square matrix on this basis) is multiplicative from
    /// `self` to `other`.
    pub fn is_homomorphism(&self, psi: &Matrix, other: &ChartAlgebra) -> bool {
        let n = self.dim();
        if other.dim() != n || psi.rows() != n || psi.cols() != n {
            return false;
        }
        let cols: Vec<Vec<Coeff>> = (0..n).map(|i| psi.column(i)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| psi.apply(&self.product(i, j)).unwrap() == other.mul(&cols[i], &cols[j]))
        })
    }

    /// `(s, m, v) ↦ (s, m, c v)`.
    pub fn module_scaling(&self, c: &Coeff) -> Matrix {
        let f = self.field;
        let mut m = Matrix::identity(f, self.dim());
        for i in (0..self.dim()).filter(|&i| self.is_module_direction(i)) {
            m.set(i, i, c.clone());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn differentials_compose_to_zero() {
        for d in 1..4 {
            let cx = CochainComplex::for_line(d, &SheafSum::new(vec![0, -1]).unwrap(), q());
            assert!(cx.delta1().mul(&cx.delta0()).unwrap().is_zero());
        }
        let cx = CochainComplex::for_trivial(2, &SheafSum::trivial(1), q());
        assert!(cx.delta1().mul(&cx.delta0()).unwrap().is_zero());
    }

    #[test]
    fn indexing() {
        let cx = CochainComplex::for_line(2, &SheafSum::trivial(1), q());
        let s = cx.space(2);
        // (u,u): deg 0, (u,n): deg 2, (n,u): deg 2, (n,n): deg 4
        assert_eq!(s.dim(), 1 + 3 + 3 + 5);
        assert_eq!(s.index(&[0, 0], 0, 0), Some(0));
        assert_eq!(s.index(&[0, 1], 0, 2), Some(3));
        assert_eq!(s.index(&[1, 1], 0, 0), Some(7));
        assert_eq!(s.index(&[1, 1], 0, 5), None);
    }

    #[test]
    fn coboundaries_are_symmetric_cocycles() {
        let cx = CochainComplex::for_line(2, &SheafSum::trivial(2), q());
        let d0 = cx.delta0();
        for c in 0..d0.cols() {
            let v = cx.cocycle(d0.column(c)).unwrap();
            assert!(v.is_cocycle() && v.is_symmetric());
        }
    }

    #[test]
    fn chart_of_zero_cocycle_is_trivial_extension() {
        let cx = CochainComplex::for_line(1, &SheafSum::trivial(1), q());
        let zero = cx.cocycle(vec![q().zero(); cx.space(2).dim()]).unwrap();
        let t = ChartAlgebra::new(&zero, 2);
        assert!(t.is_associative() && t.is_commutative());
        // v * v = 0, e_nil * e_nil = 0
        assert!(t.product(2, 2).iter().all(Coeff::is_zero));
        assert!(t.product(1, 1).iter().all(Coeff::is_zero));
    }
}

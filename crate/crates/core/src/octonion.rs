//! The Cayley algebra `𝕆` over the basis `{1, e₁, …, e₇}`.
//!
//! Imaginary units multiply according to seven oriented Fano lines
//! `(i, j, k)`, each meaning `e_i e_j = e_k` together with its cyclic
//! rotations and the anticommuted products `e_j e_i = -e_k`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::math;

/// Oriented lines of the canonical multiplication table.
///
/// Six of them are pinned by the coordinate expressions of `ξ = −N × ν` and
/// `J X₁,₃`; the orientation of the last one is the only choice that keeps
/// the norm multiplicative (see [`validate_table`]).
pub const CANONICAL_TRIPLES: [[u8; 3]; 7] =
    [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 5, 7], [3, 4, 7], [3, 5, 6], [4, 2, 6]];

/// Product table for the canonical triples.
pub static CANONICAL: ProductTable = ProductTable::from_triples(&CANONICAL_TRIPLES);

/// An octonion `c₀ + Σ cᵢ eᵢ`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Octonion(pub [f64; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([0.0; 8]);
    pub const ONE: Octonion = Octonion([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);

    pub const fn new(c: [f64; 8]) -> Self {
        Octonion(c)
    }

    pub fn real(x: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = x;
        Octonion(c)
    }

    /// `e_i` for `0 ≤ i ≤ 7`, where `e_0 = 1`.
    pub fn basis(i: usize) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion(c)
    }

    pub fn from_imaginary(v: [f64; 7]) -> Self {
        let mut c = [0.0; 8];
        c[1..].copy_from_slice(&v);
        Octonion(c)
    }

    pub fn re(&self) -> f64 {
        self.0[0]
    }

    pub fn imaginary(&self) -> [f64; 7] {
        let mut v = [0.0; 7];
        v.copy_from_slice(&self.0[1..]);
        v
    }

    pub fn is_pure_imaginary(&self) -> bool {
        self.0[0] == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    pub fn conjugate(&self) -> Octonion {
        let mut c = self.0;
        for x in c[1..].iter_mut() {
            *x = -*x;
        }
        Octonion(c)
    }

    /// Canonical Euclidean inner product on `𝕆 ≅ E⁸`.
    pub fn inner(&self, other: &Octonion) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.inner(self)
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.norm_sq())
    }

    /// Product on the canonical table.
    pub fn multiply(&self, other: &Octonion) -> Octonion {
        CANONICAL.multiply(self, other)
    }

    /// `x × y = xy + <x, y>·1` for pure imaginary `x`, `y`.
    pub fn cross(&self, other: &Octonion) -> Result<Octonion> {
        cross_with(&CANONICAL, self, other)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Octonion(c)
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        self + (-rhs)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self * -1.0
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        let mut c = self.0;
        for a in c.iter_mut() {
            *a *= s;
        }
        Octonion(c)
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        CANONICAL.multiply(&self, &rhs)
    }
}

/// Cross product against an explicit table.
pub fn cross_with(table: &ProductTable, x: &Octonion, y: &Octonion) -> Result<Octonion> {
    for v in [x, y] {
        if !v.is_pure_imaginary() {
            return Err(Error::NotPureImaginary { real_part: v.re() });
        }
    }
    let mut p = table.multiply(x, y);
    // Re(xy) = -<x, y> for imaginary operands; set it exactly.
    p.0[0] = 0.0;
    Ok(p)
}

/// Seven oriented lines, structurally checked: every unordered pair of
/// distinct imaginary indices lies on exactly one line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoTable {
    triples: [[u8; 3]; 7],
}

impl FanoTable {
    pub fn canonical() -> Self {
        FanoTable { triples: CANONICAL_TRIPLES }
    }

    pub fn new(triples: &[[u8; 3]]) -> Result<Self> {
        if triples.len() != 7 {
            return Err(Error::MalformedTable(format!("expected 7 triples, got {}", triples.len())));
        }
        let mut seen = [[0u8; 8]; 8];
        for t in triples {
            if t.iter().any(|&i| !(1..=7).contains(&i)) {
                return Err(Error::MalformedTable(format!("index out of 1..=7 in {t:?}")));
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(Error::MalformedTable(format!("repeated index in {t:?}")));
            }
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                let (lo, hi) = (a.min(b) as usize, a.max(b) as usize);
                seen[lo][hi] += 1;
            }
        }
        for i in 1..=7 {
            for j in i + 1..=7 {
                match seen[i][j] {
                    1 => {}
                    0 => return Err(Error::MalformedTable(format!("pair {{{i},{j}}} not covered"))),
                    n => return Err(Error::MalformedTable(format!("pair {{{i},{j}}} covered {n} times"))),
                }
            }
        }
        let mut out = [[0u8; 3]; 7];
        out.copy_from_slice(triples);
        Ok(FanoTable { triples: out })
    }

    pub fn triples(&self) -> &[[u8; 3]; 7] {
        &self.triples
    }

    /// Same table with line `index` traversed in the opposite orientation.
    pub fn with_reversed_line(&self, index: usize) -> Self {
        let mut t = self.triples;
        t[index].swap(0, 1);
        FanoTable { triples: t }
    }

    pub fn product_table(&self) -> ProductTable {
        ProductTable::from_triples(&self.triples)
    }
}

/// Resolved basis products: `e_i e_j = sign · e_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductTable {
    index: [[u8; 8]; 8],
    sign: [[i8; 8]; 8],
}

impl ProductTable {
    /// Builds the table from seven oriented lines. The input is assumed to be
    /// structurally valid (see [`FanoTable::new`]).
    pub const fn from_triples(triples: &[[u8; 3]; 7]) -> Self {
        let mut index = [[0u8; 8]; 8];
        let mut sign = [[0i8; 8]; 8];
        let mut i = 0;
        while i < 8 {
            index[0][i] = i as u8;
            sign[0][i] = 1;
            index[i][0] = i as u8;
            sign[i][0] = 1;
            if i > 0 {
                index[i][i] = 0;
                sign[i][i] = -1;
            }
            i += 1;
        }
        let mut t = 0;
        while t < 7 {
            let [a, b, c] = triples[t];
            let rot = [[a, b, c], [b, c, a], [c, a, b]];
            let mut k = 0;
            while k < 3 {
                let [p, q, r] = rot[k];
                index[p as usize][q as usize] = r;
                sign[p as usize][q as usize] = 1;
                index[q as usize][p as usize] = r;
                sign[q as usize][p as usize] = -1;
                k += 1;
            }
            t += 1;
        }
        ProductTable { index, sign }
    }

    /// `e_i e_j` as `(index, sign)`, with index 0 standing for `1`.
    pub fn basis_product(&self, i: usize, j: usize) -> (usize, i8) {
        (self.index[i][j] as usize, self.sign[i][j])
    }

    pub fn multiply(&self, a: &Octonion, b: &Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for i in 0..8 {
            let ai = a.0[i];
            if ai == 0.0 {
                continue;
            }
            for j in 0..8 {
                let bj = b.0[j];
                if bj == 0.0 {
                    continue;
                }
                let k = self.index[i][j] as usize;
                out[k] += f64::from(self.sign[i][j]) * ai * bj;
            }
        }
        Octonion(out)
    }

    /// The 7×7 signed matrix of imaginary products: entry `(i, j)` is
    /// `±k` for `e_i e_j = ±e_k`; diagonal entries are `-0`, i.e. `-1`.
    pub fn signed_matrix(&self) -> [[i8; 7]; 7] {
        let mut m = [[0i8; 7]; 7];
        for i in 1..8 {
            for j in 1..8 {
                let (k, s) = self.basis_product(i, j);
                m[i - 1][j - 1] = s * k as i8;
            }
        }
        m
    }
}

/// One failing product `a · b` out of [`signed_basis_sums`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductViolation {
    pub left: u32,
    pub right: u32,
    pub residual: f64,
}

/// Displayed coordinate expression the table fails to reproduce.
#[derive(Clone, Debug, PartialEq)]
pub struct EquationMismatch {
    pub expression: &'static str,
    pub component: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TableDiagnostics {
    pub samples: usize,
    pub norm_violations: Vec<ProductViolation>,
    pub alternativity_violations: Vec<ProductViolation>,
    pub equation_mismatches: Vec<EquationMismatch>,
}

impl TableDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.norm_violations.is_empty()
            && self.alternativity_violations.is_empty()
            && self.equation_mismatches.is_empty()
    }
}

/// All `Σ εᵢ eᵢ` (`i = 0..=7`, `εᵢ ∈ {−1, 0, 1}`) with at most three nonzero
/// terms, in a fixed order. `ProductViolation` indices refer to this list.
pub fn signed_basis_sums() -> Vec<Octonion> {
    let mut out = Vec::new();
    out.push(Octonion::ZERO);
    for k in 1..=3usize {
        let mut idx = [0usize; 3];
        combos(0, 0, k, &mut idx, &mut out);
    }
    out
}

fn combos(start: usize, depth: usize, k: usize, idx: &mut [usize; 3], out: &mut Vec<Octonion>) {
    if depth == k {
        for mask in 0..(1u32 << k) {
            let mut c = [0.0; 8];
            for (d, &i) in idx[..k].iter().enumerate() {
                c[i] = if mask & (1 << d) != 0 { -1.0 } else { 1.0 };
            }
            out.push(Octonion(c));
        }
        return;
    }
    for i in start..8 {
        idx[depth] = i;
        combos(i + 1, depth + 1, k, idx, out);
    }
}

const TABLE_TOL: f64 = 1e-12;

/// Brute-force validation of a multiplication table.
///
/// Checks norm multiplicativity `|ab| = |a||b|` and both alternative laws
/// `a(ab) = (aa)b`, `(ab)b = a(bb)` over all pairs from
/// [`signed_basis_sums`], then checks that the table reproduces the
/// coordinate forms of `(Σ xᵢeᵢ) × e₇` and of `J X₁,₃ = x × X₁,₃`
/// coefficient by coefficient.
pub fn validate_table(table: &FanoTable) -> TableDiagnostics {
    let pt = table.product_table();
    let elems = signed_basis_sums();
    let mut diag = TableDiagnostics { samples: elems.len() * elems.len(), ..Default::default() };

    for (i, a) in elems.iter().enumerate() {
        let aa = pt.multiply(a, a);
        let na = a.norm();
        for (j, b) in elems.iter().enumerate() {
            let ab = pt.multiply(a, b);
            let norm_res = math::abs(ab.norm() - na * b.norm());
            if norm_res > TABLE_TOL {
                diag.norm_violations.push(ProductViolation { left: i as u32, right: j as u32, residual: norm_res });
            }
            let left = (pt.multiply(a, &ab) - pt.multiply(&aa, b)).norm();
            let bb = pt.multiply(b, b);
            let right = (pt.multiply(&ab, b) - pt.multiply(a, &bb)).norm();
            let alt = f64::max(left, right);
            if alt > TABLE_TOL {
                diag.alternativity_violations.push(ProductViolation { left: i as u32, right: j as u32, residual: alt });
            }
        }
    }

    check_xi_expression(&pt, &mut diag.equation_mismatches);
    check_j_x13_expression(&pt, &mut diag.equation_mismatches);
    diag
}

/// `(Σ_{i≤6} xᵢeᵢ) × e₇ = x₆e₁ + x₅e₂ + x₄e₃ − x₃e₄ − x₂e₅ − x₁e₆`.
fn check_xi_expression(pt: &ProductTable, out: &mut Vec<EquationMismatch>) {
    // (source index i, target component k, sign)
    const EXPECTED: [(usize, usize, i8); 6] = [(6, 1, 1), (5, 2, 1), (4, 3, 1), (3, 4, -1), (2, 5, -1), (1, 6, -1)];
    for (i, k, s) in EXPECTED {
        let got = pt.basis_product(i, 7);
        if got != (k, s) {
            out.push(EquationMismatch {
                expression: "xi",
                component: k,
                detail: format!("e{i} e7 = {:+}e{}, expected {s:+}e{k}", got.1, got.0),
            });
        }
    }
}

/// `J X₁,₃ = (Σ_{i≤6} xᵢeᵢ + r e₇)(−x₃e₁ + x₁e₃)` compared symbolically, as
/// quadratic forms in `(x₁, …, x₆, r)`, against the displayed ∂₁…∂₆
/// coefficients.
fn check_j_x13_expression(pt: &ProductTable, out: &mut Vec<EquationMismatch>) {
    // variable 7 stands for r
    let mut got = [[[0i32; 8]; 8]; 7];
    for i in 1..=7 {
        for (j, coeff_var, sign) in [(1usize, 3usize, -1i32), (3, 1, 1)] {
            let (k, s) = pt.basis_product(i, j);
            if k == 0 {
                continue;
            }
            let (lo, hi) = (i.min(coeff_var), i.max(coeff_var));
            got[k - 1][lo][hi] += sign * i32::from(s);
        }
    }
    let mut want = [[[0i32; 8]; 8]; 7];
    let terms: [(usize, usize, usize, i32); 10] = [
        (1, 1, 2, 1),
        (2, 1, 1, -1),
        (2, 3, 3, -1),
        (3, 2, 3, 1),
        (4, 3, 5, -1),
        (4, 1, 7, 1),
        (5, 1, 6, 1),
        (5, 3, 4, 1),
        (6, 3, 7, -1),
        (6, 1, 5, -1),
    ];
    for (k, a, b, c) in terms {
        want[k - 1][a][b] += c;
    }
    for k in 0..6 {
        if got[k] != want[k] {
            out.push(EquationMismatch {
                expression: "J X_{1,3}",
                component: k + 1,
                detail: format!("coefficient of e{} differs", k + 1),
            });
        }
    }
}

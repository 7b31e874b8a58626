//! Unimodular symmetric bilinear forms over ℤ.
//!
//! An [`IntersectionForm`] stands for `(H₂(X; ℤ), ∩)` of a closed simply-connected
//! topological 4-manifold `X`. Cohomology classes in `H²(X; ℤ)` are stored as
//! *pairing vectors*: entry `i` of a [`CohomologyClass`] is `⟨c, eᵢ⟩`, the value of
//! the class on the `i`-th homology basis element. In that convention the
//! divisibility of a class is the gcd of its entries and the characteristic test
//! is a parity check against the diagonal.
//!
//! Everything here is exact. Determinants use fraction-free (Bareiss) elimination,
//! the signature comes from a rational Lagrange diagonalization, and no floating
//! point is involved anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("the form has rank 0")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix is not symmetric: entry ({row},{col}) differs from ({col},{row})")]
    NotSymmetric { row: usize, col: usize },
    #[error("matrix is not unimodular: |det| = {0}")]
    NotUnimodular(BigInt),
    #[error("class has {found} entries but the form has rank {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("unknown form block `{0}` (expected one of 1, -1, H, E8, -E8)")]
    UnknownBlock(String),
}

/// Determinant of a square integer matrix by Bareiss elimination.
///
/// Every intermediate value is a minor of the input, so the divisions are exact.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Checks that `matrix` is a non-empty symmetric integer matrix with `|det| = 1`.
pub fn validate(matrix: &[Vec<BigInt>]) -> Result<(), FormError> {
    let n = matrix.len();
    if n == 0 {
        return Err(FormError::Empty);
    }
    for (row, entries) in matrix.iter().enumerate() {
        if entries.len() != n {
            return Err(FormError::NotSquare { row, len: entries.len(), expected: n });
        }
    }
    for row in 0..n {
        for col in row + 1..n {
            if matrix[row][col] != matrix[col][row] {
                return Err(FormError::NotSymmetric { row, col });
            }
        }
    }
    let det = determinant(matrix).abs();
    if !det.is_one() {
        return Err(FormError::NotUnimodular(det));
    }
    Ok(())
}

/// Named building blocks for intersection forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormBlock {
    /// ⟨1⟩, the form of ℂP².
    #[serde(rename = "1")]
    PlusOne,
    /// ⟨−1⟩, the form of ℂP² with reversed orientation.
    #[serde(rename = "-1")]
    MinusOne,
    /// The hyperbolic plane, the form of S²×S².
    #[serde(rename = "H")]
    Hyperbolic,
    /// The positive definite E8 form.
    #[serde(rename = "E8")]
    E8,
    /// The negative definite E8 form.
    #[serde(rename = "-E8")]
    NegE8,
}

/// Cartan matrix of E8, the standard even positive definite unimodular form of rank 8.
const E8_MATRIX: [[i64; 8]; 8] = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
];

impl FormBlock {
    pub fn rank(self) -> usize {
        match self {
            FormBlock::PlusOne | FormBlock::MinusOne => 1,
            FormBlock::Hyperbolic => 2,
            FormBlock::E8 | FormBlock::NegE8 => 8,
        }
    }

    pub fn matrix(self) -> Vec<Vec<i64>> {
        match self {
            FormBlock::PlusOne => vec![vec![1]],
            FormBlock::MinusOne => vec![vec![-1]],
            FormBlock::Hyperbolic => vec![vec![0, 1], vec![1, 0]],
            FormBlock::E8 => E8_MATRIX.iter().map(|r| r.to_vec()).collect(),
            FormBlock::NegE8 => E8_MATRIX.iter().map(|r| r.iter().map(|x| -x).collect()).collect(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormBlock::PlusOne => "1",
            FormBlock::MinusOne => "-1",
            FormBlock::Hyperbolic => "H",
            FormBlock::E8 => "E8",
            FormBlock::NegE8 => "-E8",
        }
    }
}

impl FromStr for FormBlock {
    type Err = FormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" | "+1" => Ok(FormBlock::PlusOne),
            "-1" => Ok(FormBlock::MinusOne),
            "H" | "h" => Ok(FormBlock::Hyperbolic),
            "E8" | "e8" => Ok(FormBlock::E8),
            "-E8" | "-e8" => Ok(FormBlock::NegE8),
            other => Err(FormError::UnknownBlock(other.to_string())),
        }
    }
}

impl fmt::Display for FormBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A symmetric unimodular integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionForm {
    matrix: Vec<Vec<BigInt>>,
}

impl IntersectionForm {
    pub fn new(matrix: Vec<Vec<BigInt>>) -> Result<Self, FormError> {
        validate(&matrix)?;
        Ok(IntersectionForm { matrix })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, FormError> {
        Self::new(rows.iter().map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// Direct sum of named blocks, in the listed order.
    pub fn from_blocks(blocks: &[FormBlock]) -> Result<Self, FormError> {
        let n: usize = blocks.iter().map(|b| b.rank()).sum();
        if n == 0 {
            return Err(FormError::Empty);
        }
        let mut matrix = vec![vec![BigInt::zero(); n]; n];
        let mut offset = 0;
        for block in blocks {
            for (i, row) in block.matrix().into_iter().enumerate() {
                for (j, x) in row.into_iter().enumerate() {
                    matrix[offset + i][offset + j] = BigInt::from(x);
                }
            }
            offset += block.rank();
        }
        Ok(IntersectionForm { matrix })
    }

    pub fn direct_sum(&self, other: &IntersectionForm) -> IntersectionForm {
        let (n, m) = (self.rank(), other.rank());
        let mut matrix = vec![vec![BigInt::zero(); n + m]; n + m];
        for i in 0..n {
            matrix[i][..n].clone_from_slice(&self.matrix[i]);
        }
        for i in 0..m {
            matrix[n + i][n..].clone_from_slice(&other.matrix[i]);
        }
        IntersectionForm { matrix }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.matrix[i][j]
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.matrix)
    }

    /// Form is even iff every diagonal entry is even; this is the spin condition.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.matrix[i][i].is_even())
    }

    /// Number of positive minus number of negative eigenvalues.
    ///
    /// Computed by Lagrange reduction over ℚ. A nonzero diagonal entry is split off as
    /// a 1×1 block; if the whole remaining diagonal vanishes, a nonzero off-diagonal
    /// entry spans a hyperbolic 2×2 block, which contributes zero.
    pub fn signature(&self) -> i64 {
        let mut a: Vec<Vec<BigRational>> =
            self.matrix.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        let mut sig = 0i64;
        while !a.is_empty() {
            let n = a.len();
            if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
                let pivot = a[p][p].clone();
                sig += if pivot.is_positive() { 1 } else { -1 };
                let col: Vec<BigRational> = (0..n).map(|i| a[i][p].clone()).collect();
                for i in 0..n {
                    if i == p || col[i].is_zero() {
                        continue;
                    }
                    let factor = &col[i] / &pivot;
                    for j in 0..n {
                        if j != p {
                            let t = &factor * &col[j];
                            a[i][j] -= t;
                        }
                    }
                }
                remove_indices(&mut a, &[p]);
                continue;
            }
            let Some((p, q)) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
            else {
                // Degenerate remainder; cannot occur for a unimodular form.
                break;
            };
            let b = a[p][q].clone();
            let cp: Vec<BigRational> = (0..n).map(|i| a[i][p].clone()).collect();
            let cq: Vec<BigRational> = (0..n).map(|i| a[i][q].clone()).collect();
            for i in 0..n {
                if i == p || i == q {
                    continue;
                }
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let t = (&cp[i] * &cq[j] + &cq[i] * &cp[j]) / &b;
                    a[i][j] -= t;
                }
            }
            remove_indices(&mut a, &[p, q]);
        }
        sig
    }

    fn check_len(&self, c: &CohomologyClass) -> Result<(), FormError> {
        if c.len() != self.rank() {
            return Err(FormError::LengthMismatch { expected: self.rank(), found: c.len() });
        }
        Ok(())
    }

    /// `⟨c², [X]⟩ = pᵀ Q⁻¹ p` for the pairing vector `p` of `c`.
    ///
    /// Solves `Q x = p` by exact rational elimination; the solution is
    /// `adj(Q) p / det Q`, which is integral because `det Q = ±1`.
    pub fn square(&self, c: &CohomologyClass) -> Result<BigInt, FormError> {
        self.check_len(c)?;
        let x = solve_exact(&self.matrix, c.pairings());
        let value: BigRational = x
            .iter()
            .zip(c.pairings())
            .map(|(xi, pi)| xi * BigRational::from_integer(pi.clone()))
            .fold(BigRational::zero(), |acc, t| acc + t);
        debug_assert!(value.is_integer());
        Ok(value.to_integer())
    }

    /// True iff `⟨c, x⟩ ≡ Q(x, x) (mod 2)` for every `x`, i.e. `c` reduces to `w₂`.
    pub fn is_characteristic(&self, c: &CohomologyClass) -> Result<bool, FormError> {
        self.check_len(c)?;
        Ok(c.pairings().iter().enumerate().all(|(i, p)| p.is_even() == self.matrix[i][i].is_even()))
    }

    /// The form in the basis given by the columns of `u`, i.e. `uᵀ Q u`.
    ///
    /// Returns an error when `u` is not unimodular.
    pub fn change_basis(&self, u: &[Vec<BigInt>]) -> Result<IntersectionForm, FormError> {
        let n = self.rank();
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(FormError::LengthMismatch { expected: n, found: u.len() });
        }
        let qu = mat_mul(&self.matrix, u);
        let ut = transpose(u);
        IntersectionForm::new(mat_mul(&ut, &qu))
    }
}

impl fmt::Display for IntersectionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn remove_indices(a: &mut Vec<Vec<BigRational>>, idx: &[usize]) {
    let keep = |i: usize| !idx.contains(&i);
    let rows: Vec<Vec<BigRational>> = std::mem::take(a)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| keep(*i))
        .map(|(_, row)| row.into_iter().enumerate().filter(|(j, _)| keep(*j)).map(|(_, x)| x).collect())
        .collect();
    *a = rows;
}

fn solve_exact(matrix: &[Vec<BigInt>], rhs: &[BigInt]) -> Vec<BigRational> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().chain(std::iter::once(b)).map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("unimodular matrix is invertible");
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let prow = a[col].clone();
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for (x, p) in a[r].iter_mut().zip(&prow) {
                    *x -= &factor * p;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n].clone()).collect()
}

pub(crate) fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = b.first().map_or(0, |r| r.len());
    a.iter().map(|row| (0..m).map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum()).collect()).collect()
}

pub(crate) fn transpose(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// An element of `H²(X; ℤ)` given by its values on the homology basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    pairings: Vec<BigInt>,
}

impl CohomologyClass {
    pub fn new(pairings: Vec<BigInt>) -> Self {
        CohomologyClass { pairings }
    }

    pub fn from_i64(pairings: &[i64]) -> Self {
        CohomologyClass { pairings: pairings.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        CohomologyClass { pairings: vec![BigInt::zero(); rank] }
    }

    pub fn pairings(&self) -> &[BigInt] {
        &self.pairings
    }

    pub fn len(&self) -> usize {
        self.pairings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairings.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.pairings.iter().all(|x| x.is_zero())
    }

    /// The largest `m` with `c = m · primitive`; zero for the zero class.
    pub fn divisibility(&self) -> BigInt {
        self.pairings.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Divides every pairing by `m`, or returns `None` if `m` does not divide the class.
    pub fn div_exact(&self, m: &BigInt) -> Option<CohomologyClass> {
        if m.is_zero() {
            return None;
        }
        self.pairings
            .iter()
            .map(|x| {
                let (q, r) = x.div_rem(m);
                r.is_zero().then_some(q)
            })
            .collect::<Option<Vec<_>>>()
            .map(CohomologyClass::new)
    }

    pub fn scale(&self, m: &BigInt) -> CohomologyClass {
        CohomologyClass::new(self.pairings.iter().map(|x| x * m).collect())
    }

    pub fn neg(&self) -> CohomologyClass {
        CohomologyClass::new(self.pairings.iter().map(|x| -x).collect())
    }

    /// Pads with zero pairings, as for a class pulled back to `X # Y` from `X`.
    pub fn extend_zeros(&self, extra: usize) -> CohomologyClass {
        let mut pairings = self.pairings.clone();
        pairings.extend(std::iter::repeat_n(BigInt::zero(), extra));
        CohomologyClass::new(pairings)
    }

    /// Pairing vector of the same class in the basis given by the columns of `u`.
    pub fn change_basis(&self, u: &[Vec<BigInt>]) -> CohomologyClass {
        let col = self.pairings.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>();
        let ut = transpose(u);
        CohomologyClass::new(mat_mul(&ut, &col).into_iter().map(|r| r[0].clone()).collect())
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairings.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for CohomologyClass {
    type Err = std::num::ParseIntError;

    /// Parses a comma-separated list such as `2,0,-4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = trimmed.split(',').map(|t| t.trim().parse::<i64>()).collect::<Result<Vec<_>, _>>()?;
        Ok(CohomologyClass::from_i64(&values))
    }
}

/// How a form is given in a 4-manifold description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormSpec {
    Blocks { blocks: Vec<String> },
    Matrix { matrix: Vec<Vec<i64>> },
}

/// JSON description of a closed simply-connected 4-manifold:
/// `{"form": {"blocks": [...]} | {"matrix": [[...]]}, "ks": 0|1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDescription {
    pub form: FormSpec,
    pub ks: u8,
}

impl ManifoldDescription {
    pub fn intersection_form(&self) -> Result<IntersectionForm, FormError> {
        match &self.form {
            FormSpec::Blocks { blocks } => {
                let parsed = blocks.iter().map(|b| b.parse::<FormBlock>()).collect::<Result<Vec<_>, _>>()?;
                IntersectionForm::from_blocks(&parsed)
            }
            FormSpec::Matrix { matrix } => IntersectionForm::from_rows(matrix),
        }
    }
}

/// Least non-negative residue of `x` modulo `m`.
pub fn residue(x: &BigInt, m: u32) -> u32 {
    x.mod_floor(&BigInt::from(m)).to_u32().expect("residue fits in u32")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(rows: &[&[i64]]) -> IntersectionForm {
        IntersectionForm::from_rows(rows).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(IntersectionForm::from_rows(&[[1]]).is_ok());
        assert!(IntersectionForm::from_rows(&[[0, 1], [1, 0]]).is_ok());
        assert_eq!(IntersectionForm::from_rows(&[[2]]).unwrap_err(), FormError::NotUnimodular(BigInt::from(2)));
        assert_eq!(
            IntersectionForm::from_rows(&[[1, 1], [0, 1]]).unwrap_err(),
            FormError::NotSymmetric { row: 0, col: 1 }
        );
        assert_eq!(IntersectionForm::from_rows::<[i64; 0]>(&[]).unwrap_err(), FormError::Empty);
        assert!(matches!(
            IntersectionForm::from_rows(&[vec![1, 0], vec![0]]),
            Err(FormError::NotSquare { row: 1, .. })
        ));
    }

    #[test]
    fn determinant_handles_zero_pivots() {
        let h = form(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.determinant(), BigInt::from(-1));
        let e8 = IntersectionForm::from_blocks(&[FormBlock::E8]).unwrap();
        assert_eq!(e8.determinant(), BigInt::one());
        let m = vec![vec![BigInt::from(1), BigInt::from(2)], vec![BigInt::from(2), BigInt::from(4)]];
        assert!(determinant(&m).is_zero());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(form(&[&[1]]).signature(), 1);
        assert_eq!(form(&[&[0, 1], &[1, 0]]).signature(), 0);
        assert_eq!(IntersectionForm::from_blocks(&[FormBlock::E8]).unwrap().signature(), 8);
        assert_eq!(IntersectionForm::from_blocks(&[FormBlock::NegE8]).unwrap().signature(), -8);
        let k3 = IntersectionForm::from_blocks(&[
            FormBlock::NegE8,
            FormBlock::NegE8,
            FormBlock::Hyperbolic,
            FormBlock::Hyperbolic,
            FormBlock::Hyperbolic,
        ])
        .unwrap();
        assert_eq!(k3.signature(), -16);
        // all-zero diagonal with a nontrivial off-diagonal pattern
        let q = form(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(q.signature(), 0);
    }

    #[test]
    fn parity() {
        assert!(form(&[&[0, 1], &[1, 0]]).is_even());
        assert!(!form(&[&[1]]).is_even());
        assert!(IntersectionForm::from_blocks(&[FormBlock::E8]).unwrap().is_even());
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(CohomologyClass::from_i64(&[2, 4]).divisibility(), BigInt::from(2));
        assert_eq!(CohomologyClass::from_i64(&[1, 0, 0]).divisibility(), BigInt::from(1));
        assert_eq!(CohomologyClass::from_i64(&[0, 0]).divisibility(), BigInt::from(0));
        assert_eq!(CohomologyClass::from_i64(&[-6, 9]).divisibility(), BigInt::from(3));
    }

    #[test]
    fn square_examples() {
        let sq = |q: &IntersectionForm, p: &[i64]| q.square(&CohomologyClass::from_i64(p)).unwrap();
        assert_eq!(sq(&form(&[&[1]]), &[2]), BigInt::from(4));
        // Q⁻¹ = Q for the hyperbolic plane: pᵀQp = 2·1·1
        assert_eq!(sq(&form(&[&[0, 1], &[1, 0]]), &[1, 1]), BigInt::from(2));
        assert_eq!(sq(&form(&[&[1, 0], &[0, 1]]), &[1, 2]), BigInt::from(5));
        assert_eq!(
            form(&[&[1]]).square(&CohomologyClass::from_i64(&[1, 2])).unwrap_err(),
            FormError::LengthMismatch { expected: 1, found: 2 }
        );
    }

    #[test]
    fn square_uses_the_inverse_form() {
        // Q = [[2,1],[1,1]], Q⁻¹ = [[1,-1],[-1,2]]; p = (1,0) gives 1, not Q(p,p) = 2.
        let q = form(&[&[2, 1], &[1, 1]]);
        assert_eq!(q.square(&CohomologyClass::from_i64(&[1, 0])).unwrap(), BigInt::from(1));
        assert_eq!(q.square(&CohomologyClass::from_i64(&[0, 1])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn characteristic_examples() {
        let ch = |q: &IntersectionForm, p: &[i64]| q.is_characteristic(&CohomologyClass::from_i64(p)).unwrap();
        assert!(ch(&form(&[&[1]]), &[1]));
        assert!(ch(&form(&[&[0, 1], &[1, 0]]), &[0, 0]));
        assert!(!ch(&form(&[&[1, 0], &[0, 1]]), &[1, 0]));
    }

    #[test]
    fn block_parsing() {
        assert_eq!("E8".parse::<FormBlock>().unwrap(), FormBlock::E8);
        assert_eq!("-1".parse::<FormBlock>().unwrap(), FormBlock::MinusOne);
        assert!(matches!("E7".parse::<FormBlock>(), Err(FormError::UnknownBlock(_))));
    }

    #[test]
    fn description_json() {
        let d: ManifoldDescription =
            serde_json::from_str(r#"{"form": {"blocks": ["E8","E8","H","H","H"]}, "ks": 0}"#).unwrap();
        let q = d.intersection_form().unwrap();
        assert_eq!(q.rank(), 22);
        assert_eq!(q.signature(), 16);
        let d: ManifoldDescription = serde_json::from_str(r#"{"form": {"matrix": [[0,1],[1,0]]}, "ks": 1}"#).unwrap();
        assert_eq!(d.intersection_form().unwrap().rank(), 2);
        assert_eq!(d.ks, 1);
        let bad: Result<ManifoldDescription, _> = serde_json::from_str(r#"{"form": 3, "ks": 0}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn class_parsing() {
        let c: CohomologyClass = "2,0,-4".parse().unwrap();
        assert_eq!(c, CohomologyClass::from_i64(&[2, 0, -4]));
        assert!("2,x".parse::<CohomologyClass>().is_err());
    }
}

//! The Atiyah–Hirzebruch spectral sequence for `Ω₅^{Spin}(ℝP^∞ × (ℂP^∞)^r; twist)`.
//!
//! `E²_{p,q} = H_p(ℝP^∞ × (ℂP^∞)^r; Ω_q^{Spin})` with `Ω_q^{Spin} = ℤ, ℤ/2, ℤ/2, 0, ℤ, 0`
//! for `q = 0..=5`. Mod-2 cohomology is the polynomial algebra `𝔽₂[α, β₁, …, β_r]`,
//! so homology classes are indexed by the dual monomial basis. The differentials
//! `d₂: E_{p,1} → E_{p−2,2}` and `d₂: E_{p,0} → E_{p−2,1}` are dual to
//! `Sq² + w∪`, where `w` is the twisting class; on the bottom row they are
//! precomposed with reduction mod 2.
//!
//! Only orders are computed. `d₃` into `E_{1,4}` is not derived from first
//! principles but fixed by a per-twist policy (see [`omega5_order`]), so the
//! computation checks the known group orders for consistency rather than proving
//! them.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub const MAX_DEGREE: u32 = 7;
pub const MAX_R: usize = 6;
/// Largest `r` for which [`omega5_order`] runs.
pub const MAX_ORDER_R: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AhssError {
    #[error("out of range: {0}")]
    RangeExceeded(String),
    #[error("twist {0} needs r >= 1")]
    TwistNeedsFactor(TwistKind),
    #[error(
        "order mismatch for r = {r}, twist {twist}: spectral sequence gives 2^{computed_log2}, \
         closed form gives 2^{expected_log2}"
    )]
    OrderMismatch { r: usize, twist: TwistKind, computed_log2: u32, expected_log2: u32 },
}

/// `α^a β₁^{b₁} ⋯ β_r^{b_r}`, of degree `a + 2Σbᵢ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub a: u32,
    pub b: Vec<u32>,
}

impl Monomial {
    pub fn new(a: u32, b: Vec<u32>) -> Monomial {
        Monomial { a, b }
    }

    pub fn degree(&self) -> u32 {
        self.a + 2 * self.b.iter().sum::<u32>()
    }

    pub fn r(&self) -> usize {
        self.b.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.r(), other.r());
        Monomial { a: self.a + other.a, b: self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect() }
    }

    /// Whether the dual homology class lifts to integral homology: all β-classes do,
    /// and the `ℝP^∞` factor contributes integrally only in degree 0 and odd degrees.
    pub fn is_integral(&self) -> bool {
        self.a == 0 || self.a % 2 == 1
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let power = |name: String, e: u32| if e == 1 { name } else { format!("{name}^{e}") };
        if self.a > 0 {
            parts.push(power("a".into(), self.a));
        }
        for (i, &e) in self.b.iter().enumerate() {
            if e > 0 {
                parts.push(power(format!("b{}", i + 1), e));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwistKind {
    /// Untwisted (type II).
    None,
    /// Twisted by `2η`, with `w₂ = α²` (type III).
    TwoEta,
    /// Twisted by `γ`, with `w₂ = β₁` (type I).
    Gamma,
}

impl TwistKind {
    pub const ALL: [TwistKind; 3] = [TwistKind::None, TwistKind::TwoEta, TwistKind::Gamma];

    /// The class `w` in `Sq² + w∪`.
    pub fn class(self, r: usize) -> Option<Monomial> {
        match self {
            TwistKind::None => None,
            TwistKind::TwoEta => Some(Monomial::new(2, vec![0; r])),
            TwistKind::Gamma => {
                let mut b = vec![0; r];
                b[0] = 1;
                Some(Monomial::new(0, b))
            }
        }
    }

    fn min_r(self) -> usize {
        usize::from(self == TwistKind::Gamma)
    }
}

impl fmt::Display for TwistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistKind::None => "none",
            TwistKind::TwoEta => "two-eta",
            TwistKind::Gamma => "gamma",
        })
    }
}

impl std::str::FromStr for TwistKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(TwistKind::None),
            "two-eta" | "2eta" | "twoeta" => Ok(TwistKind::TwoEta),
            "gamma" => Ok(TwistKind::Gamma),
            other => Err(format!("unknown twist `{other}` (expected none, two-eta or gamma)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficients {
    Mod2,
    Integral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyBasis {
    Mod2(Vec<Monomial>),
    /// `ℤ^free ⊕ (ℤ/2)^torsion`.
    Integral {
        free: usize,
        torsion: usize,
    },
}

fn check_range(p: u32, r: usize) -> Result<(), AhssError> {
    if p > MAX_DEGREE {
        return Err(AhssError::RangeExceeded(format!("degree {p} > {MAX_DEGREE}")));
    }
    if r > MAX_R {
        return Err(AhssError::RangeExceeded(format!("r = {r} > {MAX_R}")));
    }
    Ok(())
}

/// All `b ∈ ℕ^r` with `Σb = n`, in lexicographic order.
fn compositions(n: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Monomials of degree `p` in `r + 1` variables, sorted.
pub fn monomials(p: u32, r: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (p % 2..=p).step_by(2) {
        for b in compositions((p - a) / 2, r) {
            out.push(Monomial::new(a, b));
        }
    }
    out.sort();
    out
}

pub fn homology_basis(p: u32, r: usize, coeff: Coefficients) -> Result<HomologyBasis, AhssError> {
    check_range(p, r)?;
    let basis = monomials(p, r);
    Ok(match coeff {
        Coefficients::Mod2 => HomologyBasis::Mod2(basis),
        Coefficients::Integral => HomologyBasis::Integral {
            free: basis.iter().filter(|m| m.a == 0).count(),
            torsion: basis.iter().filter(|m| m.a % 2 == 1).count(),
        },
    })
}

fn binomial_is_odd(n: u32, k: u32) -> bool {
    // Lucas: C(n, k) is odd iff the bits of k are a subset of the bits of n.
    k <= n && (n & k) == k
}

/// `Sq^j` of a monomial as an 𝔽₂-combination (a sorted set of monomials).
///
/// Uses `Sq(x^e) = Σ_k C(e,k) x^{e+k}` for each one- or two-dimensional generator
/// and the Cartan formula across generators.
pub fn sq(j: u32, m: &Monomial) -> Vec<Monomial> {
    // Each generator contributes a shift of k·deg(x); track the total shift.
    let mut terms: BTreeMap<Monomial, bool> = BTreeMap::new();
    let mut partial: Vec<(u32, Monomial)> = vec![(0, Monomial::new(0, vec![0; m.r()]))];
    let exps: Vec<(u32, u32)> = std::iter::once((m.a, 1)).chain(m.b.iter().map(|&e| (e, 2))).collect();
    for (idx, &(e, deg)) in exps.iter().enumerate() {
        let mut next = Vec::new();
        for (shift, mono) in &partial {
            for k in 0..=e {
                let s = shift + k * deg;
                if s > j || !binomial_is_odd(e, k) {
                    continue;
                }
                let mut t = mono.clone();
                if idx == 0 {
                    t.a = e + k;
                } else {
                    t.b[idx - 1] = e + k;
                }
                next.push((s, t));
            }
        }
        partial = next;
    }
    for (shift, mono) in partial {
        if shift == j {
            *terms.entry(mono).or_insert(false) ^= true;
        }
    }
    terms.into_iter().filter(|&(_, odd)| odd).map(|(m, _)| m).collect()
}

pub fn sq2(m: &Monomial) -> Vec<Monomial> {
    sq(2, m)
}

/// `(Sq² + w∪)(m)` for the twist class `w`.
pub fn twisted_sq2(m: &Monomial, twist: TwistKind) -> Vec<Monomial> {
    let mut out = sq2(m);
    if let Some(w) = twist.class(m.r()) {
        let t = m.mul(&w);
        match out.binary_search(&t) {
            Ok(i) => {
                out.remove(i);
            }
            Err(i) => out.insert(i, t),
        }
    }
    out
}

/// Dense matrix over 𝔽₂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<bool>>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> F2Matrix {
        F2Matrix { rows, cols, data: vec![vec![false; cols]; rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.data[i][j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|row| row.iter().all(|&x| !x))
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j];
            }
        }
        t
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k] {
                    for j in 0..other.cols {
                        out.data[i][j] ^= other.data[k][j];
                    }
                }
            }
        }
        out
    }

    /// Keeps only the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> F2Matrix {
        F2Matrix {
            rows: self.rows,
            cols: cols.len(),
            data: self.data.iter().map(|row| cols.iter().map(|&j| row[j]).collect()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&i| m[i][col]) else { continue };
            m.swap(rank, pivot);
            for i in 0..self.rows {
                if i != rank && m[i][col] {
                    let pivot_row = m[rank].clone();
                    for (x, y) in m[i].iter_mut().zip(pivot_row) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

/// `Sq² + w∪ : H^{p−2} → H^p` in monomial bases; rows index `H^p`, columns `H^{p−2}`.
pub fn cohomology_matrix(p: u32, r: usize, twist: TwistKind) -> Result<F2Matrix, AhssError> {
    check_range(p, r)?;
    if r < twist.min_r() {
        return Err(AhssError::TwistNeedsFactor(twist));
    }
    let target = monomials(p, r);
    let source = if p >= 2 { monomials(p - 2, r) } else { Vec::new() };
    let mut m = F2Matrix::zeros(target.len(), source.len());
    for (j, s) in source.iter().enumerate() {
        for t in twisted_sq2(s, twist) {
            let i = target.binary_search(&t).expect("Sq² raises degree by 2");
            m.set(i, j, true);
        }
    }
    Ok(m)
}

/// Indices of the monomials of degree `p` whose dual classes lift integrally.
fn integral_columns(p: u32, r: usize) -> Vec<usize> {
    monomials(p, r).iter().enumerate().filter(|(_, m)| m.is_integral()).map(|(i, _)| i).collect()
}

/// `d₂: E²_{p,q} → E²_{p−2,q+1}` for `q ∈ {0, 1}`; columns index the domain basis,
/// rows `H_{p−2}`. For `q = 0` the domain is the image of integral homology.
pub fn d2_matrix(p: u32, q: u32, r: usize, twist: TwistKind) -> Result<F2Matrix, AhssError> {
    let dual = cohomology_matrix(p, r, twist)?.transpose();
    match q {
        1 => Ok(dual),
        0 => Ok(dual.select_columns(&integral_columns(p, r))),
        _ => Err(AhssError::RangeExceeded(format!("d2 is only nontrivial out of rows q = 0, 1 (got q = {q})"))),
    }
}

/// `E²_{p,q}` as an abstract group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Zero,
    /// `ℤ^free ⊕ (ℤ/2)^torsion`.
    Integral {
        free: usize,
        torsion: usize,
    },
    /// `(ℤ/2)^dim`.
    Mod2 {
        dim: usize,
    },
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |base: &str, n: usize| match n {
            0 => None,
            1 => Some(base.to_string()),
            n => Some(format!("{base}^{n}")),
        };
        let parts: Vec<String> = match *self {
            Group::Zero => vec![],
            Group::Integral { free, torsion } => term("Z", free).into_iter().chain(term("Z/2", torsion)).collect(),
            Group::Mod2 { dim } => term("Z/2", dim).into_iter().collect(),
        };
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Differential {
    pub p: u32,
    pub q: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
}

/// `E²` for `p + q ≤ 6`, every `d₂` whose source has total degree `≤ 7`, and the
/// `E³` groups that are 𝔽₂-vector spaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Page {
    pub r: usize,
    pub twist: TwistKind,
    pub e2: BTreeMap<(u32, u32), Group>,
    pub d2: Vec<Differential>,
    /// `E³_{p,q}` dimensions for rows 1 and 2 and for odd `p` on row 0.
    pub e3: BTreeMap<(u32, u32), usize>,
}

fn e2_group(p: u32, q: u32, r: usize) -> Result<Group, AhssError> {
    if q == 3 || q == 5 {
        return Ok(Group::Zero);
    }
    Ok(match homology_basis(p, r, if q == 1 || q == 2 { Coefficients::Mod2 } else { Coefficients::Integral })? {
        HomologyBasis::Mod2(b) => Group::Mod2 { dim: b.len() },
        HomologyBasis::Integral { free, torsion } => Group::Integral { free, torsion },
    })
}

impl Page {
    pub fn compute(r: usize, twist: TwistKind) -> Result<Page, AhssError> {
        check_range(0, r)?;
        if r < twist.min_r() {
            return Err(AhssError::TwistNeedsFactor(twist));
        }
        let mut e2 = BTreeMap::new();
        for total in 0..=6 {
            for q in 0..=total.min(5) {
                e2.insert((total - q, q), e2_group(total - q, q, r)?);
            }
        }
        let mut d2 = Vec::new();
        let mut ranks = BTreeMap::new();
        for q in 0..=1 {
            for p in 2..=MAX_DEGREE - q {
                let m = d2_matrix(p, q, r, twist)?;
                ranks.insert((p, q), m.rank());
                d2.push(Differential { p, q, rows: m.rows(), cols: m.cols(), rank: m.rank() });
            }
        }
        let rank_of = |p: u32, q: u32| ranks.get(&(p, q)).copied().unwrap_or(0);
        let mut e3 = BTreeMap::new();
        for total in 0..=6u32 {
            for q in 0..=2u32.min(total) {
                let p = total - q;
                let dim = match q {
                    0 if p % 2 == 1 => integral_columns(p, r).len() - rank_of(p, 0),
                    0 => continue,
                    1 => monomials(p, r).len() - rank_of(p, 1) - rank_of(p + 2, 0),
                    _ => monomials(p, r).len() - rank_of(p + 2, 1),
                };
                e3.insert((p, q), dim);
            }
        }
        Ok(Page { r, twist, e2, d2, e3 })
    }

    pub fn e3_dim(&self, p: u32, q: u32) -> Option<usize> {
        self.e3.get(&(p, q)).copied()
    }

    /// Aligned text tables of `E²`, the `d₂` ranks and `E³`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("E2 page, r = {}, twist {} (rows q, columns p)\n", self.r, self.twist));
        let width = self.e2.values().map(|g| g.to_string().len()).max().unwrap_or(1).max(3);
        out.push_str(&format!("{:>4} |", "q\\p"));
        for p in 0..=6 {
            out.push_str(&format!(" {p:>width$}"));
        }
        out.push('\n');
        for q in (0..=5).rev() {
            out.push_str(&format!("{q:>4} |"));
            for p in 0..=6 {
                let cell = self.e2.get(&(p, q)).map(|g| g.to_string()).unwrap_or_default();
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        out.push_str("\nd2 differentials (E_{p,q} -> E_{p-2,q+1})\n");
        out.push_str(&format!("{:>3} {:>3} {:>6} {:>6} {:>5}\n", "p", "q", "rows", "cols", "rank"));
        for d in &self.d2 {
            out.push_str(&format!("{:>3} {:>3} {:>6} {:>6} {:>5}\n", d.p, d.q, d.rows, d.cols, d.rank));
        }
        out.push_str("\nE3 dimensions over F2\n");
        out.push_str(&format!("{:>3} {:>3} {:>5}\n", "p", "q", "dim"));
        for (&(p, q), dim) in &self.e3 {
            out.push_str(&format!("{p:>3} {q:>3} {dim:>5}\n"));
        }
        out
    }
}

/// `log₂ |Ω₅|` from the closed forms: `(ℤ/4)^r ⊕ (ℤ/2)^{r(r−1)/2}` untwisted, extended
/// by `Ω₄^{Pin⁺} ≅ ℤ/16` for `2η`, and `(ℤ/4)^{r−1} ⊕ (ℤ/2)^{r(r−1)/2}` extended by
/// `Ω₄^{Pin^c}` (order 16) for `γ`.
pub fn closed_form_log2(r: usize, twist: TwistKind) -> Result<u32, AhssError> {
    if r < twist.min_r() {
        return Err(AhssError::TwistNeedsFactor(twist));
    }
    let r = r as u32;
    let pairs = r * r.saturating_sub(1) / 2;
    Ok(match twist {
        TwistKind::None => 2 * r + pairs,
        TwistKind::TwoEta => 4 + 2 * r + pairs,
        TwistKind::Gamma => 4 + 2 * (r - 1) + pairs,
    })
}

pub fn closed_form_order(r: usize, twist: TwistKind) -> Result<u64, AhssError> {
    Ok(1u64 << closed_form_log2(r, twist)?)
}

/// The stated group structure.
pub fn group_structure(r: usize, twist: TwistKind) -> String {
    let pairs = r * r.saturating_sub(1) / 2;
    let g = |fours: usize| format!("(Z/4)^{fours} + (Z/2)^{pairs}");
    match twist {
        TwistKind::None => g(r),
        TwistKind::TwoEta => format!("extension 0 -> {} -> Omega_5 -> Omega_4^Pin+ = Z/16 -> 0", g(r)),
        TwistKind::Gamma => {
            format!("extension 0 -> {} -> Omega_5 -> Omega_4^Pinc = Z/8 + Z/2 -> 0", g(r.saturating_sub(1)))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Omega5 {
    pub r: usize,
    pub twist: TwistKind,
    /// `E³` dimensions on total degree 5, as `((p, q), dim)`.
    pub e3: Vec<((u32, u32), usize)>,
    /// `E³_{4,2}`, the source of the `d₃` into `E_{1,4}`.
    pub e3_4_2: usize,
    pub d3_rank: usize,
    pub log2_order: u32,
    pub order: u64,
    pub closed_form_order: u64,
    pub structure: String,
}

/// Order of `Ω₅^{Spin}(ℝP^∞ × (ℂP^∞)^r; twist)` from the spectral sequence.
///
/// `d₃: E³_{4,2} → E³_{1,4} ≅ ℤ/2` is set by policy: maximal rank untwisted, zero for
/// `2η`, and for `γ` the unique rank that reproduces the closed-form order. A result
/// that still disagrees with the closed form is an error.
pub fn omega5_order(r: usize, twist: TwistKind) -> Result<Omega5, AhssError> {
    if r > MAX_ORDER_R {
        return Err(AhssError::RangeExceeded(format!("r = {r} > {MAX_ORDER_R}")));
    }
    let page = Page::compute(r, twist)?;
    let e = |p, q| page.e3_dim(p, q).expect("computed");
    let e1_4 = match page.e2[&(1, 4)] {
        Group::Integral { free: 0, torsion } => torsion,
        other => unreachable!("H_1 with integer coefficients is Z/2, got {other}"),
    };
    let e3 = vec![((5, 0), e(5, 0)), ((4, 1), e(4, 1)), ((3, 2), e(3, 2)), ((1, 4), e1_4)];
    let e3_4_2 = e(4, 2);
    let before_d3: usize = e3.iter().map(|&(_, d)| d).sum();
    let expected = closed_form_log2(r, twist)?;
    let max_d3 = e3_4_2.min(e1_4);
    let d3_rank = match twist {
        TwistKind::None => max_d3,
        TwistKind::TwoEta => 0,
        TwistKind::Gamma => {
            let needed = before_d3 as i64 - i64::from(expected);
            if (0..=max_d3 as i64).contains(&needed) {
                needed as usize
            } else {
                0
            }
        }
    };
    let log2_order = (before_d3 - d3_rank) as u32;
    if log2_order != expected {
        return Err(AhssError::OrderMismatch { r, twist, computed_log2: log2_order, expected_log2: expected });
    }
    Ok(Omega5 {
        r,
        twist,
        e3,
        e3_4_2,
        d3_rank,
        log2_order,
        order: 1u64 << log2_order,
        closed_form_order: 1u64 << expected,
        structure: group_structure(r, twist),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(a: u32, b: &[u32]) -> Monomial {
        Monomial::new(a, b.to_vec())
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            homology_basis(2, 1, Coefficients::Mod2).unwrap(),
            HomologyBasis::Mod2(vec![mono(0, &[1]), mono(2, &[0])])
        );
        assert_eq!(
            homology_basis(5, 1, Coefficients::Integral).unwrap(),
            HomologyBasis::Integral { free: 0, torsion: 3 }
        );
        assert_eq!(
            homology_basis(0, 3, Coefficients::Integral).unwrap(),
            HomologyBasis::Integral { free: 1, torsion: 0 }
        );
        assert!(matches!(homology_basis(8, 1, Coefficients::Mod2), Err(AhssError::RangeExceeded(_))));
        assert!(matches!(homology_basis(2, 7, Coefficients::Mod2), Err(AhssError::RangeExceeded(_))));
    }

    /// Oracle: expand `(x + x²)^e` with explicit polynomial multiplication mod 2.
    fn total_square_power(e: u32) -> Vec<bool> {
        let mut poly = vec![true]; // coefficients of x^0, x^1, ...
        for _ in 0..e {
            let mut next = vec![false; poly.len() + 2];
            for (i, &c) in poly.iter().enumerate() {
                if c {
                    next[i + 1] ^= true;
                    next[i + 2] ^= true;
                }
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn sq2_examples() {
        assert_eq!(sq2(&mono(0, &[1])), [mono(0, &[2])]);
        assert_eq!(sq2(&mono(2, &[])), [mono(4, &[])]);
        let expanded = total_square_power(3);
        assert!(expanded[5]);
        assert_eq!(sq2(&mono(3, &[])), [mono(5, &[])]);
        assert_eq!(sq2(&mono(1, &[])), Vec::<Monomial>::new());
        // Cartan: Sq²(αβ) = α²·Sq¹β + α·β² = αβ²
        assert_eq!(sq2(&mono(1, &[1])), [mono(1, &[2])]);
    }

    #[test]
    fn sq_matches_expansion_in_alpha() {
        for e in 0..12 {
            let expanded = total_square_power(e);
            for j in 0..=e {
                let want: Vec<Monomial> = if expanded[(e + j) as usize] { vec![mono(e + j, &[])] } else { vec![] };
                assert_eq!(sq(j, &mono(e, &[])), want, "Sq^{j}(a^{e})");
            }
        }
    }

    #[test]
    fn twisted_examples() {
        let got = twisted_sq2(&mono(0, &[1]), TwistKind::TwoEta);
        assert_eq!(got, [mono(0, &[2]), mono(2, &[1])]);
        // (Sq² + β₁)(β₁) = β₁² + β₁² = 0
        assert!(twisted_sq2(&mono(0, &[1]), TwistKind::Gamma).is_empty());
    }

    #[test]
    fn dualization_is_transpose() {
        for twist in TwistKind::ALL {
            for r in twist.min_r()..=3 {
                for p in 2..=MAX_DEGREE {
                    let c = cohomology_matrix(p, r, twist).unwrap();
                    assert_eq!(d2_matrix(p, 1, r, twist).unwrap(), c.transpose());
                }
            }
        }
    }

    #[test]
    fn d2_squares_to_zero() {
        for twist in TwistKind::ALL {
            for r in twist.min_r()..=4 {
                for p in 4..=MAX_DEGREE {
                    let first = d2_matrix(p, 0, r, twist).unwrap();
                    let second = d2_matrix(p - 2, 1, r, twist).unwrap();
                    assert!(second.mul(&first).is_zero(), "r={r} p={p} {twist}");
                }
            }
        }
    }

    #[test]
    fn f2_rank() {
        let mut m = F2Matrix::zeros(3, 3);
        for (i, j) in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2)] {
            m.set(i, j, true);
        }
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
        assert_eq!(F2Matrix::zeros(2, 5).rank(), 0);
    }

    #[test]
    fn orders_match_closed_forms() {
        for twist in TwistKind::ALL {
            for r in twist.min_r()..=MAX_ORDER_R {
                let o = omega5_order(r, twist).unwrap();
                assert_eq!(o.order, o.closed_form_order);
            }
        }
        assert_eq!(omega5_order(1, TwistKind::None).unwrap().order, 4);
        assert_eq!(omega5_order(0, TwistKind::None).unwrap().order, 1);
        assert_eq!(omega5_order(0, TwistKind::TwoEta).unwrap().order, 16);
        assert_eq!(omega5_order(2, TwistKind::None).unwrap().order, 32);
        assert_eq!(omega5_order(0, TwistKind::Gamma).unwrap_err(), AhssError::TwistNeedsFactor(TwistKind::Gamma));
        assert!(matches!(omega5_order(5, TwistKind::None), Err(AhssError::RangeExceeded(_))));
    }

    #[test]
    fn untwisted_rank_one_survivors() {
        // E∞_{5,0} ≅ Z/2 and E∞_{4,1} ≅ Z/2, with E_{3,2} and E_{1,4} gone
        let o = omega5_order(1, TwistKind::None).unwrap();
        assert_eq!(o.e3, [((5, 0), 1), ((4, 1), 1), ((3, 2), 0), ((1, 4), 1)]);
        assert_eq!(o.d3_rank, 1);
    }

    #[test]
    fn page_rendering() {
        let page = Page::compute(1, TwistKind::None).unwrap();
        assert_eq!(page.e2[&(2, 2)], Group::Mod2 { dim: 2 });
        assert_eq!(page.e2[&(5, 0)], Group::Integral { free: 0, torsion: 3 });
        let text = page.render();
        assert!(text.contains("E2 page"));
        assert!(text.contains("E3 dimensions"));
    }
}

//! Circle connected sums of building-block 5-manifolds.
//!
//! A [`ManifoldExpression`] is an ordered `#_{S¹}` composite of [`Block`]s. Its
//! complete invariants ([`Invariants`]) are the w₂-type, the rank `r` of `H₂`, and
//! the Pin bordism class of the characteristic submanifold; the latter is additive
//! under `#_{S¹}`. Every invariant tuple is realized by exactly one
//! [`StandardForm`].
//!
//! Framing convention: each join carries one bit. A set bit reverses the Pin
//! structure on everything to the right of the join, so the right operand's
//! contribution enters with a minus sign. This makes `X(1) # X(1)` the class-2
//! manifold and `X(1) #~ X(1)` the class-0 manifold.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bordism::{BordismElement, BordismError, CanonicalClass, Category, Flavor, GroupKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid expression: {0}")]
    InvalidExpression(String),
    #[error("*S2xRP3 exists only in the topological category")]
    StarInSmooth,
    #[error("category mismatch: {0} vs {1}")]
    CategoryMismatch(Category, Category),
    #[error("diffeomorphism comparison needs smooth inputs")]
    DiffeoNeedsSmooth,
    #[error("no standard form has these invariants: {0}")]
    NoStandardForm(String),
    #[error("standard form parameters out of range: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Bordism(#[from] BordismError),
}

/// The w₂-type trichotomy: II if `w₂(M) = 0`; III if `w₂(M) ≠ 0` but the universal
/// cover is spin; I otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum W2Type {
    I,
    II,
    III,
}

impl W2Type {
    /// Which Pin flavor the characteristic submanifold carries.
    pub fn flavor(self) -> Flavor {
        match self {
            W2Type::I => Flavor::PinC,
            W2Type::II => Flavor::PinMinus,
            W2Type::III => Flavor::PinPlus,
        }
    }
}

impl fmt::Display for W2Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            W2Type::I => "I",
            W2Type::II => "II",
            W2Type::III => "III",
        })
    }
}

impl std::str::FromStr for W2Type {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(W2Type::I),
            "II" | "2" => Ok(W2Type::II),
            "III" | "3" => Ok(W2Type::III),
            other => Err(format!("unknown w2-type `{other}` (expected I, II or III)")),
        }
    }
}

/// Pin⁺ class of a (possibly fake) ℝP⁵ block, signed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FakeClass {
    /// Class in ℤ/16. Odd classes are the four fake ℝP⁵'s (up to sign), even
    /// classes are composites `X(l) # X(l')`.
    Smooth(u8),
    /// Class `(ks, q)` in ℤ/2 ⊕ ℤ/8.
    Top { ks: u8, q: u8 },
}

impl FakeClass {
    pub fn smooth(q: i64) -> FakeClass {
        FakeClass::Smooth(q.rem_euclid(16) as u8)
    }

    pub fn top(ks: i64, q: i64) -> FakeClass {
        FakeClass::Top { ks: ks.rem_euclid(2) as u8, q: q.rem_euclid(8) as u8 }
    }

    pub fn category(self) -> Category {
        match self {
            FakeClass::Smooth(_) => Category::Smooth,
            FakeClass::Top { .. } => Category::Top,
        }
    }

    fn q(self) -> u8 {
        match self {
            FakeClass::Smooth(q) | FakeClass::Top { q, .. } => q,
        }
    }

    fn ks(self) -> u8 {
        match self {
            FakeClass::Smooth(_) => 0,
            FakeClass::Top { ks, .. } => ks,
        }
    }

    /// The same block seen in the topological category.
    pub fn forget_smooth(self) -> FakeClass {
        match self {
            FakeClass::Smooth(q) => FakeClass::Top { ks: 0, q: q % 8 },
            top => top,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// `X⁵(q)` or `X⁵(p, q)`.
    FakeRp5(FakeClass),
    S2xRp3,
    /// The non-smoothable manifold homotopy equivalent to S²×ℝP³.
    StarS2xRp3,
    Cp2xS1,
    /// `(#_k S²×S²) × S¹` with `k ≥ 1`.
    S2xS2xS1(u32),
}

impl Block {
    /// Whether the block has fundamental group ℤ/2 (as opposed to ℤ).
    pub fn is_z2(&self) -> bool {
        matches!(self, Block::FakeRp5(_) | Block::S2xRp3 | Block::StarS2xRp3)
    }

    pub fn rank(&self) -> u32 {
        match self {
            Block::FakeRp5(c) => u32::from(c.q() % 2 == 0),
            Block::S2xRp3 | Block::StarS2xRp3 | Block::Cp2xS1 => 1,
            Block::S2xS2xS1(k) => 2 * k,
        }
    }

    fn check_category(&self, category: Category) -> Result<(), AlgebraError> {
        match self {
            Block::StarS2xRp3 if category == Category::Smooth => Err(AlgebraError::StarInSmooth),
            Block::FakeRp5(c) if c.category() != category => {
                Err(AlgebraError::CategoryMismatch(category, c.category()))
            }
            Block::S2xS2xS1(0) => Err(AlgebraError::InvalidExpression("(S2xS2)xS1 needs a positive count".into())),
            _ => Ok(()),
        }
    }

    /// Contribution to the characteristic-submanifold class in `kind`.
    fn contribution(&self, kind: GroupKind) -> Result<BordismElement, BordismError> {
        let top = kind.category == Category::Top;
        let coords: Vec<i64> = match (self, kind.flavor) {
            (Block::FakeRp5(c), Flavor::PinPlus) => {
                let q = i64::from(c.q());
                if top {
                    vec![i64::from(c.ks()), q]
                } else {
                    vec![q]
                }
            }
            (Block::FakeRp5(c), Flavor::PinC) => {
                let q = i64::from(c.q() % 8);
                if top {
                    vec![i64::from(c.ks()), q, 0]
                } else {
                    vec![q, 0]
                }
            }
            (Block::FakeRp5(c), Flavor::PinMinus) => {
                if top {
                    vec![i64::from(c.ks())]
                } else {
                    vec![]
                }
            }
            (Block::Cp2xS1, Flavor::PinC) => {
                if top {
                    vec![0, 0, 1]
                } else {
                    vec![0, 1]
                }
            }
            (Block::StarS2xRp3, _) => {
                let mut v = vec![0; kind.arity()];
                v[0] = 1;
                v
            }
            _ => vec![0; kind.arity()],
        };
        BordismElement::reduced(kind, &coords)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::FakeRp5(FakeClass::Smooth(q)) => write!(f, "X({q})"),
            Block::FakeRp5(FakeClass::Top { ks, q }) => write!(f, "X({ks},{q})"),
            Block::S2xRp3 => f.write_str("S2xRP3"),
            Block::StarS2xRp3 => f.write_str("*S2xRP3"),
            Block::Cp2xS1 => f.write_str("CP2xS1"),
            Block::S2xS2xS1(k) => write!(f, "{k}*(S2xS2)xS1"),
        }
    }
}

/// An ordered circle connected sum of blocks with one framing bit per join.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ManifoldExpression {
    category: Category,
    blocks: Vec<Block>,
    framings: Vec<bool>,
}

impl ManifoldExpression {
    /// Builds an expression, checking block/category compatibility and that there
    /// is exactly one framing bit per join. It may still lack a ℤ/2 block; such a
    /// piece can only be used as an operand of [`connected_sum`].
    pub fn new(category: Category, blocks: Vec<Block>, framings: Vec<bool>) -> Result<Self, AlgebraError> {
        if blocks.is_empty() {
            return Err(AlgebraError::InvalidExpression("no blocks".into()));
        }
        if framings.len() + 1 != blocks.len() {
            return Err(AlgebraError::InvalidExpression(format!(
                "{} blocks need {} framing bits, got {}",
                blocks.len(),
                blocks.len() - 1,
                framings.len()
            )));
        }
        for b in &blocks {
            b.check_category(category)?;
        }
        Ok(ManifoldExpression { category, blocks, framings })
    }

    pub fn single(category: Category, block: Block) -> Result<Self, AlgebraError> {
        Self::new(category, vec![block], vec![])
    }

    /// Appends one block with the given framing bit at the new join.
    pub fn join(mut self, block: Block, framing: bool) -> Result<Self, AlgebraError> {
        block.check_category(self.category)?;
        self.blocks.push(block);
        self.framings.push(framing);
        Ok(self)
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn framings(&self) -> &[bool] {
        &self.framings
    }

    pub fn has_z2_block(&self) -> bool {
        self.blocks.iter().any(Block::is_z2)
    }

    /// Fails unless the expression describes a manifold with π₁ = ℤ/2.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        if !self.has_z2_block() {
            return Err(AlgebraError::InvalidExpression(
                "no block with fundamental group Z/2 (the composite would have π₁ = Z)".into(),
            ));
        }
        Ok(())
    }

    /// Orientation sign of each block's Pin structure under the framing convention.
    fn signs(&self) -> impl Iterator<Item = bool> + '_ {
        std::iter::once(false).chain(self.framings.iter().scan(false, |flip, &b| {
            *flip ^= b;
            Some(*flip)
        }))
    }

    pub fn w2type(&self) -> W2Type {
        let has = |f: fn(&Block) -> bool| self.blocks.iter().any(f);
        let fake = has(|b| matches!(b, Block::FakeRp5(_)));
        let s2rp3 = has(|b| matches!(b, Block::S2xRp3 | Block::StarS2xRp3));
        let cp2 = has(|b| matches!(b, Block::Cp2xS1));
        if cp2 || (fake && s2rp3) {
            W2Type::I
        } else if fake {
            W2Type::III
        } else {
            W2Type::II
        }
    }

    /// Rank of `H₂`: block ranks plus one for every ℤ/2–ℤ/2 join.
    pub fn rank(&self) -> u32 {
        let z2 = self.blocks.iter().filter(|b| b.is_z2()).count() as u32;
        self.blocks.iter().map(Block::rank).sum::<u32>() + z2.saturating_sub(1)
    }

    pub fn invariants(&self) -> Result<Invariants, AlgebraError> {
        self.validate()?;
        let w2type = self.w2type();
        let kind = GroupKind::new(self.category, w2type.flavor());
        let mut class = BordismElement::zero(kind);
        for (block, negate) in self.blocks.iter().zip(self.signs()) {
            let c = block.contribution(kind)?;
            class = class.add(&if negate { c.neg() } else { c })?;
        }
        Ok(Invariants::new(w2type, self.rank(), class))
    }
}

impl fmt::Display for ManifoldExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.blocks[0])?;
        for (block, &framing) in self.blocks[1..].iter().zip(&self.framings) {
            write!(f, " {} {}", if framing { "#~" } else { "#" }, block)?;
        }
        Ok(())
    }
}

/// `a #_{S¹} b`. A set `framing` negates the whole contribution of `b` relative to
/// the first block of `a`, so `[a # b] = [a] ± [b]` whatever framings `a` carries;
/// the bit stored at the new join is adjusted by the parity of `a`'s own framings.
pub fn connected_sum(
    a: &ManifoldExpression,
    b: &ManifoldExpression,
    framing: bool,
) -> Result<ManifoldExpression, AlgebraError> {
    if a.category != b.category {
        return Err(AlgebraError::CategoryMismatch(a.category, b.category));
    }
    if !a.has_z2_block() && !b.has_z2_block() {
        return Err(AlgebraError::InvalidExpression(
            "at least one operand of a circle sum needs fundamental group Z/2".into(),
        ));
    }
    let mut blocks = a.blocks.clone();
    blocks.extend_from_slice(&b.blocks);
    let mut framings = a.framings.clone();
    let parity = a.framings.iter().fold(false, |acc, &bit| acc ^ bit);
    framings.push(framing ^ parity);
    framings.extend_from_slice(&b.framings);
    Ok(ManifoldExpression { category: a.category, blocks, framings })
}

/// Complete invariants: category, w₂-type, `r = rk H₂`, and the signed class `[P]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Invariants {
    category: Category,
    w2type: W2Type,
    r: u32,
    p_class: BordismElement,
}

impl Invariants {
    /// The group of `p_class` fixes the category; its flavor must match `w2type`.
    pub fn new(w2type: W2Type, r: u32, p_class: BordismElement) -> Invariants {
        debug_assert_eq!(p_class.kind().flavor, w2type.flavor());
        Invariants { category: p_class.kind().category, w2type, r, p_class }
    }

    pub fn try_new(w2type: W2Type, r: u32, p_class: BordismElement) -> Result<Invariants, AlgebraError> {
        if p_class.kind().flavor != w2type.flavor() {
            return Err(AlgebraError::InvalidParameters(format!(
                "type {w2type} needs a {:?} class, got {}",
                w2type.flavor(),
                p_class.kind()
            )));
        }
        Ok(Invariants::new(w2type, r, p_class))
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn w2type(&self) -> W2Type {
        self.w2type
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn p_class(&self) -> BordismElement {
        self.p_class
    }

    pub fn canonical_class(&self) -> CanonicalClass {
        self.p_class.canonicalize()
    }

    /// Kirby–Siebenmann invariant, only defined topologically.
    pub fn ks(&self) -> Option<u8> {
        (self.category == Category::Top).then(|| self.p_class.ks())
    }

    /// The ℝP⁴ coordinate of the canonical class (types I and III).
    pub fn q(&self) -> Option<u8> {
        self.canonical_class().rep().arf()
    }

    /// The ℂP² coordinate (type I).
    pub fn s(&self) -> Option<u8> {
        self.p_class.w2sq()
    }

    /// The same manifold seen in the topological category.
    pub fn to_top(&self) -> Invariants {
        match self.category {
            Category::Top => *self,
            Category::Smooth => Invariants {
                category: Category::Top,
                w2type: self.w2type,
                r: self.r,
                p_class: self.p_class.forget_smooth().expect("smooth class"),
            },
        }
    }

    /// Comparison key up to diffeomorphism (smooth) or homeomorphism (top).
    fn key(&self) -> (W2Type, u32, CanonicalClass) {
        (self.w2type, self.r, self.canonical_class())
    }

    /// For type I, `⟨w₂(M)² ∪ t + t⁵, [M]⟩ = (q + s) mod 2`; zero otherwise.
    pub fn homotopy_bit(&self) -> u8 {
        match self.w2type {
            W2Type::I => (self.p_class.arf().unwrap_or(0) + self.p_class.w2sq().unwrap_or(0)) % 2,
            _ => 0,
        }
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} type {}, r = {}, [P] = {}", self.category, self.w2type, self.r, self.canonical_class())
    }
}

impl Serialize for Invariants {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Invariants", 7)?;
        s.serialize_field("category", &self.category)?;
        s.serialize_field("w2type", &self.w2type)?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("p_class", &self.p_class)?;
        s.serialize_field("canonical_class", &self.canonical_class())?;
        s.serialize_field("ks", &self.ks())?;
        s.serialize_field("relations_hold", &check_relations(self))?;
        s.end()
    }
}

/// Parity relations between the invariants:
/// type I `q + s + r ≡ 1`, type II `r ≡ 1`, type III `q + r ≡ 1` (mod 2).
pub fn check_relations(inv: &Invariants) -> bool {
    let r = inv.r % 2;
    let q = u32::from(inv.p_class.arf().unwrap_or(0) % 2);
    let s = u32::from(inv.p_class.w2sq().unwrap_or(0));
    match inv.w2type {
        W2Type::I => (q + s + r) % 2 == 1,
        W2Type::II => r == 1,
        W2Type::III => (q + r) % 2 == 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Diffeo,
    Homeo,
    Homotopy,
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "diffeo" | "diffeomorphism" => Ok(Level::Diffeo),
            "homeo" | "homeomorphism" => Ok(Level::Homeo),
            "homotopy" => Ok(Level::Homotopy),
            other => Err(format!("unknown level `{other}` (expected diffeo, homeo or homotopy)")),
        }
    }
}

/// Decides whether two manifolds with the given invariants are equivalent.
pub fn equivalent(a: &Invariants, b: &Invariants, level: Level) -> Result<bool, AlgebraError> {
    match level {
        Level::Diffeo => {
            if a.category != Category::Smooth || b.category != Category::Smooth {
                return Err(AlgebraError::DiffeoNeedsSmooth);
            }
            Ok(a.key() == b.key())
        }
        Level::Homeo => Ok(a.to_top().key() == b.to_top().key()),
        Level::Homotopy => {
            Ok(a.w2type == b.w2type && a.r == b.r && (a.w2type != W2Type::I || a.homotopy_bit() == b.homotopy_bit()))
        }
    }
}

/// The lines of the list of standard forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `X(q) # S²×ℝP³ # (#_k S²×S²)×S¹`, type I with `s = 0`.
    FakeWithS2xRp3,
    /// `X(q) # ℂP²×S¹ # (#_k S²×S²)×S¹`, type I with `s = 1`.
    FakeWithCp2xS1,
    /// `S²×ℝP³ # (#_k S²×S²)×S¹`, or `*(S²×ℝP³)` when `p = 1`.
    S2xRp3,
    /// `X(q) # (#_k S²×S²)×S¹`.
    Fake,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::FakeWithS2xRp3, Family::FakeWithCp2xS1, Family::S2xRp3, Family::Fake];

    pub fn w2type(self) -> W2Type {
        match self {
            Family::FakeWithS2xRp3 | Family::FakeWithCp2xS1 => W2Type::I,
            Family::S2xRp3 => W2Type::II,
            Family::Fake => W2Type::III,
        }
    }

    /// `r - 2k` for this family and `q`.
    fn rank_offset(self, q: u8) -> u32 {
        let even = u32::from(q.is_multiple_of(2));
        match self {
            Family::FakeWithS2xRp3 => 2 + even,
            Family::FakeWithCp2xS1 => 1 + even,
            Family::S2xRp3 => 1,
            Family::Fake => even,
        }
    }

    fn q_max(self, category: Category) -> u8 {
        match (self, category) {
            (Family::S2xRp3, _) => 0,
            (Family::Fake, Category::Smooth) => 8,
            _ => 4,
        }
    }
}

/// A canonical representative from the list of standard forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StandardForm {
    category: Category,
    family: Family,
    p: u8,
    q: u8,
    k: u32,
}

impl StandardForm {
    pub fn new(category: Category, family: Family, p: u8, q: u8, k: u32) -> Result<Self, AlgebraError> {
        let p_max = if category == Category::Top { 1 } else { 0 };
        if p > p_max {
            return Err(AlgebraError::InvalidParameters(format!("p = {p} in the {category} category")));
        }
        if q > family.q_max(category) {
            return Err(AlgebraError::InvalidParameters(format!(
                "q = {q} exceeds {} for {family:?} in the {category} category",
                family.q_max(category)
            )));
        }
        Ok(StandardForm { category, family, p, q, k })
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn w2type(&self) -> W2Type {
        self.family.w2type()
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s(&self) -> u8 {
        u8::from(self.family == Family::FakeWithCp2xS1)
    }

    pub fn r(&self) -> u32 {
        2 * self.k + self.family.rank_offset(self.q)
    }

    /// Invariants read straight off the parameters.
    pub fn invariants(&self) -> Invariants {
        let flavor = self.w2type().flavor();
        let kind = GroupKind::new(self.category, flavor);
        let (p, q, s) = (i64::from(self.p), i64::from(self.q), i64::from(self.s()));
        let coords: Vec<i64> = match (self.category, flavor) {
            (Category::Smooth, Flavor::PinC) => vec![q, s],
            (Category::Smooth, Flavor::PinPlus) => vec![q],
            (Category::Smooth, Flavor::PinMinus) => vec![],
            (Category::Top, Flavor::PinC) => vec![p, q, s],
            (Category::Top, Flavor::PinPlus) => vec![p, q],
            (Category::Top, Flavor::PinMinus) => vec![p],
        };
        let class = BordismElement::new(kind, &coords).expect("parameters validated at construction");
        Invariants::new(self.w2type(), self.r(), class)
    }

    fn fake_block(&self) -> Block {
        Block::FakeRp5(match self.category {
            Category::Smooth => FakeClass::Smooth(self.q),
            Category::Top => FakeClass::Top { ks: self.p, q: self.q },
        })
    }

    /// A composite realizing this form, with all framings 0.
    pub fn to_expression(&self) -> ManifoldExpression {
        let mut blocks = match self.family {
            Family::FakeWithS2xRp3 => vec![self.fake_block(), Block::S2xRp3],
            Family::FakeWithCp2xS1 => vec![self.fake_block(), Block::Cp2xS1],
            Family::S2xRp3 => vec![if self.p == 1 { Block::StarS2xRp3 } else { Block::S2xRp3 }],
            Family::Fake => vec![self.fake_block()],
        };
        if self.k > 0 {
            blocks.push(Block::S2xS2xS1(self.k));
        }
        let framings = vec![false; blocks.len() - 1];
        ManifoldExpression { category: self.category, blocks, framings }
    }

    /// The unique standard form with the given invariants.
    pub fn from_invariants(inv: &Invariants) -> Result<StandardForm, AlgebraError> {
        let rep = *inv.canonical_class().rep();
        let p = rep.ks();
        let q = rep.arf().unwrap_or(0);
        let family = match inv.w2type {
            W2Type::I => {
                if rep.w2sq() == Some(1) {
                    Family::FakeWithCp2xS1
                } else {
                    Family::FakeWithS2xRp3
                }
            }
            W2Type::II => Family::S2xRp3,
            W2Type::III => Family::Fake,
        };
        let offset = family.rank_offset(q);
        if inv.r < offset || !(inv.r - offset).is_multiple_of(2) {
            return Err(AlgebraError::NoStandardForm(inv.to_string()));
        }
        StandardForm::new(inv.category, family, p, q, (inv.r - offset) / 2)
    }

    fn sort_key(&self) -> (u32, W2Type, u8, u8, u8) {
        (self.r(), self.w2type(), self.q, self.s(), self.p)
    }

    /// Textbook rendering, e.g. `X^5(3) #_S1 (S^2 x RP^3) #_S1 ((#_2 S^2 x S^2) x S^1)`.
    pub fn describe(&self) -> String {
        let fake = match self.category {
            Category::Smooth => format!("X^5({})", self.q),
            Category::Top => format!("X^5({},{})", self.p, self.q),
        };
        let mut parts = match self.family {
            Family::FakeWithS2xRp3 => vec![fake, "(S^2 x RP^3)".to_string()],
            Family::FakeWithCp2xS1 => vec![fake, "(CP^2 x S^1)".to_string()],
            Family::S2xRp3 if self.p == 1 => vec!["*(S^2 x RP^3)".to_string()],
            Family::S2xRp3 => vec!["(S^2 x RP^3)".to_string()],
            Family::Fake => vec![fake],
        };
        if self.k > 0 {
            parts.push(format!("((#_{} S^2 x S^2) x S^1)", self.k));
        }
        parts.join(" #_S1 ")
    }
}

impl fmt::Display for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expression())
    }
}

impl PartialOrd for StandardForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StandardForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.category, self.sort_key(), self.family).cmp(&(other.category, other.sort_key(), other.family))
    }
}

impl Serialize for StandardForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("StandardForm", 9)?;
        s.serialize_field("category", &self.category)?;
        s.serialize_field("w2type", &self.w2type())?;
        s.serialize_field("family", &self.family)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("q", &self.q)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("r", &self.r())?;
        s.serialize_field("expression", &self.to_string())?;
        s.serialize_field("description", &self.describe())?;
        s.end()
    }
}

/// The standard form of the manifold described by `e`.
pub fn normalize(e: &ManifoldExpression) -> Result<StandardForm, AlgebraError> {
    StandardForm::from_invariants(&e.invariants()?)
}

/// All standard forms of `category` with `r ≤ r_max`, ordered by `(r, type, q, s, p)`.
pub fn enumerate(r_max: u32, category: Category) -> Vec<StandardForm> {
    let p_max = if category == Category::Top { 1 } else { 0 };
    let mut out = Vec::new();
    for family in Family::ALL {
        for q in 0..=family.q_max(category) {
            for p in 0..=p_max {
                let offset = family.rank_offset(q);
                let mut k = 0;
                while 2 * k + offset <= r_max {
                    out.push(StandardForm::new(category, family, p, q, k).expect("in range"));
                    k += 1;
                }
            }
        }
    }
    out.sort();
    out
}

//! The six four-dimensional Pin bordism groups and their ± quotients.
//!
//! | kind          | group          | coordinates        | generators      |
//! |---------------|----------------|--------------------|-----------------|
//! | smooth Pinᶜ   | ℤ/8 ⊕ ℤ/2      | (arf, w₂²)         | ℝP⁴, ℂP²        |
//! | smooth Pin⁺   | ℤ/16           | (a)                | ℝP⁴             |
//! | smooth Pin⁻   | 0              | ()                 |                 |
//! | top Pinᶜ      | ℤ/2 ⊕ ℤ/8 ⊕ ℤ/2 | (KS, arf, w₂²)     | E8, ℝP⁴, ℂP²    |
//! | top Pin⁺      | ℤ/2 ⊕ ℤ/8      | (KS, arf)          | E8, ℝP⁴         |
//! | top Pin⁻      | ℤ/2            | (KS)               | E8              |
//!
//! The smooth Pin⁺ coordinate is generator-relative (ℝP⁴ ↦ 1); there is no named
//! invariant behind it.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BordismError {
    #[error("cannot combine elements of {0} and {1}")]
    KindMismatch(GroupKind, GroupKind),
    #[error("{kind} expects {expected} coordinates, got {found}")]
    Arity { kind: GroupKind, expected: usize, found: usize },
    #[error("coordinate {index} of {kind} must be in 0..{modulus}, got {value}")]
    ResidueOutOfRange { kind: GroupKind, index: usize, modulus: u8, value: i64 },
    #[error("{0} is not a smooth bordism group")]
    NotSmooth(GroupKind),
    #[error("cannot parse bordism element `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Smooth,
    Top,
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Smooth => "smooth",
            Category::Top => "top",
        })
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "smooth" | "diff" | "pl" => Ok(Category::Smooth),
            "top" | "topological" => Ok(Category::Top),
            other => Err(format!("unknown category `{other}` (expected smooth or top)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    PinC,
    PinPlus,
    PinMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupKind {
    pub category: Category,
    pub flavor: Flavor,
}

impl GroupKind {
    pub const ALL: [GroupKind; 6] = [
        GroupKind::new(Category::Smooth, Flavor::PinC),
        GroupKind::new(Category::Smooth, Flavor::PinPlus),
        GroupKind::new(Category::Smooth, Flavor::PinMinus),
        GroupKind::new(Category::Top, Flavor::PinC),
        GroupKind::new(Category::Top, Flavor::PinPlus),
        GroupKind::new(Category::Top, Flavor::PinMinus),
    ];

    pub const fn new(category: Category, flavor: Flavor) -> Self {
        GroupKind { category, flavor }
    }

    /// Cyclic orders of the coordinates, in coordinate order.
    pub fn orders(self) -> &'static [u8] {
        match (self.category, self.flavor) {
            (Category::Smooth, Flavor::PinC) => &[8, 2],
            (Category::Smooth, Flavor::PinPlus) => &[16],
            (Category::Smooth, Flavor::PinMinus) => &[],
            (Category::Top, Flavor::PinC) => &[2, 8, 2],
            (Category::Top, Flavor::PinPlus) => &[2, 8],
            (Category::Top, Flavor::PinMinus) => &[2],
        }
    }

    pub fn generators(self) -> &'static [&'static str] {
        match (self.category, self.flavor) {
            (Category::Smooth, Flavor::PinC) => &["RP4", "CP2"],
            (Category::Smooth, Flavor::PinPlus) => &["RP4"],
            (Category::Smooth, Flavor::PinMinus) => &[],
            (Category::Top, Flavor::PinC) => &["E8", "RP4", "CP2"],
            (Category::Top, Flavor::PinPlus) => &["E8", "RP4"],
            (Category::Top, Flavor::PinMinus) => &["E8"],
        }
    }

    pub fn invariant_names(self) -> &'static [&'static str] {
        match (self.category, self.flavor) {
            (Category::Smooth, Flavor::PinC) => &["arf", "w2^2"],
            (Category::Smooth, Flavor::PinPlus) => &["?"],
            (Category::Smooth, Flavor::PinMinus) => &[],
            (Category::Top, Flavor::PinC) => &["KS", "arf", "w2^2"],
            (Category::Top, Flavor::PinPlus) => &["KS", "arf"],
            (Category::Top, Flavor::PinMinus) => &["KS"],
        }
    }

    pub fn arity(self) -> usize {
        self.orders().len()
    }

    pub fn order(self) -> u32 {
        self.orders().iter().map(|&m| u32::from(m)).product()
    }

    /// Position of the Kirby–Siebenmann coordinate, if the group has one.
    pub fn ks_index(self) -> Option<usize> {
        (self.category == Category::Top).then_some(0)
    }

    /// Position of the ℝP⁴ coordinate (ℤ/16 or ℤ/8), if any.
    pub fn arf_index(self) -> Option<usize> {
        match (self.category, self.flavor) {
            (_, Flavor::PinMinus) => None,
            (Category::Smooth, _) => Some(0),
            (Category::Top, _) => Some(1),
        }
    }

    /// Position of the ℂP² coordinate, if any.
    pub fn w2sq_index(self) -> Option<usize> {
        match (self.category, self.flavor) {
            (Category::Smooth, Flavor::PinC) => Some(1),
            (Category::Top, Flavor::PinC) => Some(2),
            _ => None,
        }
    }

    pub fn with_category(self, category: Category) -> GroupKind {
        GroupKind { category, flavor: self.flavor }
    }

    fn prefix(self) -> &'static str {
        match (self.category, self.flavor) {
            (Category::Smooth, Flavor::PinC) => "pinc",
            (Category::Smooth, Flavor::PinPlus) => "pin+",
            (Category::Smooth, Flavor::PinMinus) => "pin-",
            (Category::Top, Flavor::PinC) => "top-pinc",
            (Category::Top, Flavor::PinPlus) => "top-pin+",
            (Category::Top, Flavor::PinMinus) => "top-pin-",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.prefix())
    }
}

impl FromStr for GroupKind {
    type Err = BordismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        GroupKind::ALL.into_iter().find(|k| k.prefix() == s).ok_or(BordismError::Parse(s))
    }
}

/// Human-facing description of one bordism group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInfo {
    pub kind: GroupKind,
    pub orders: Vec<u8>,
    pub generators: Vec<&'static str>,
    pub invariants: Vec<&'static str>,
}

impl fmt::Display for GroupInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group = if self.orders.is_empty() {
            "0".to_string()
        } else {
            self.orders.iter().map(|m| format!("Z/{m}")).collect::<Vec<_>>().join(" + ")
        };
        let gens = if self.generators.is_empty() { "--".to_string() } else { self.generators.join(", ") };
        let invs = if self.invariants.is_empty() { "--".to_string() } else { self.invariants.join(", ") };
        write!(f, "{}: {} ; invariants ({}) ; generators {}", self.kind, group, invs, gens)
    }
}

pub fn group_info(kind: GroupKind) -> GroupInfo {
    GroupInfo {
        kind,
        orders: kind.orders().to_vec(),
        generators: kind.generators().to_vec(),
        invariants: kind.invariant_names().to_vec(),
    }
}

/// An element of one of the six groups, stored as signed (not ± reduced) residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BordismElement {
    kind: GroupKind,
    coords: [u8; 3],
}

impl BordismElement {
    pub fn new(kind: GroupKind, coords: &[i64]) -> Result<Self, BordismError> {
        let orders = kind.orders();
        if coords.len() != orders.len() {
            return Err(BordismError::Arity { kind, expected: orders.len(), found: coords.len() });
        }
        let mut out = [0u8; 3];
        for (index, (&value, &modulus)) in coords.iter().zip(orders).enumerate() {
            if value < 0 || value >= i64::from(modulus) {
                return Err(BordismError::ResidueOutOfRange { kind, index, modulus, value });
            }
            out[index] = value as u8;
        }
        Ok(BordismElement { kind, coords: out })
    }

    /// Builds an element from arbitrary integers, reducing each one mod its order.
    pub fn reduced(kind: GroupKind, coords: &[i64]) -> Result<Self, BordismError> {
        let orders = kind.orders();
        if coords.len() != orders.len() {
            return Err(BordismError::Arity { kind, expected: orders.len(), found: coords.len() });
        }
        let mut out = [0u8; 3];
        for (i, (&value, &m)) in coords.iter().zip(orders).enumerate() {
            out[i] = value.rem_euclid(i64::from(m)) as u8;
        }
        Ok(BordismElement { kind, coords: out })
    }

    pub fn zero(kind: GroupKind) -> Self {
        BordismElement { kind, coords: [0; 3] }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords[..self.kind.arity()]
    }

    pub fn coord(&self, index: usize) -> u8 {
        self.coords()[index]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Kirby–Siebenmann coordinate; zero for smooth groups.
    pub fn ks(&self) -> u8 {
        self.kind.ks_index().map_or(0, |i| self.coords[i])
    }

    pub fn arf(&self) -> Option<u8> {
        self.kind.arf_index().map(|i| self.coords[i])
    }

    pub fn w2sq(&self) -> Option<u8> {
        self.kind.w2sq_index().map(|i| self.coords[i])
    }

    pub fn add(&self, other: &BordismElement) -> Result<BordismElement, BordismError> {
        if self.kind != other.kind {
            return Err(BordismError::KindMismatch(self.kind, other.kind));
        }
        let mut coords = [0u8; 3];
        for (i, &m) in self.kind.orders().iter().enumerate() {
            coords[i] = (self.coords[i] + other.coords[i]) % m;
        }
        Ok(BordismElement { kind: self.kind, coords })
    }

    pub fn neg(&self) -> BordismElement {
        let mut coords = [0u8; 3];
        for (i, &m) in self.kind.orders().iter().enumerate() {
            coords[i] = (m - self.coords[i]) % m;
        }
        BordismElement { kind: self.kind, coords }
    }

    /// Integer multiple `n · self`.
    pub fn times(&self, n: i64) -> BordismElement {
        let mut coords = [0u8; 3];
        for (i, &m) in self.kind.orders().iter().enumerate() {
            coords[i] = (i64::from(self.coords[i]) * n).rem_euclid(i64::from(m)) as u8;
        }
        BordismElement { kind: self.kind, coords }
    }

    /// The class of `self` in the quotient by `x ~ −x`.
    pub fn canonicalize(&self) -> CanonicalClass {
        let neg = self.neg();
        let rep = if neg.coords() < self.coords() { neg } else { *self };
        CanonicalClass { rep }
    }

    /// The forgetful map from smooth to topological bordism.
    ///
    /// Smooth manifolds have vanishing KS. On Pin⁺ the ℤ/16 generator ℝP⁴ maps to
    /// the ℤ/8 generator ℝP⁴, so the kernel is {0, 8}.
    pub fn forget_smooth(&self) -> Result<BordismElement, BordismError> {
        if self.kind.category != Category::Smooth {
            return Err(BordismError::NotSmooth(self.kind));
        }
        let top = self.kind.with_category(Category::Top);
        let coords: Vec<i64> = match self.kind.flavor {
            Flavor::PinC => vec![0, i64::from(self.coords[0]), i64::from(self.coords[1])],
            Flavor::PinPlus => vec![0, i64::from(self.coords[0] % 8)],
            Flavor::PinMinus => vec![0],
        };
        BordismElement::new(top, &coords)
    }

    /// Every element of the group, in lexicographic coordinate order.
    pub fn all(kind: GroupKind) -> Vec<BordismElement> {
        let mut out = vec![BordismElement::zero(kind)];
        for (i, &m) in kind.orders().iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..m).map(move |v| {
                        let mut c = e;
                        c.coords[i] = v;
                        c
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for BordismElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.coords();
        match coords {
            [single] => write!(f, "{}:{}", self.kind, single),
            _ => {
                let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                write!(f, "{}:({})", self.kind, parts.join(","))
            }
        }
    }
}

impl FromStr for BordismElement {
    type Err = BordismError;

    /// Parses `pin+:7`, `pinc:(1,1)`, `top-pin+:(1,3)`, `pin-:()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BordismError::Parse(s.to_string());
        let (prefix, value) = s.trim().split_once(':').ok_or_else(bad)?;
        let kind: GroupKind = prefix.parse().map_err(|_| bad())?;
        let value = value.trim();
        let inner = match value.strip_prefix('(') {
            Some(rest) => rest.strip_suffix(')').ok_or_else(bad)?,
            None => value,
        };
        let coords = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?
        };
        BordismElement::new(kind, &coords)
    }
}

impl Serialize for BordismElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An element of `Ω/±`, represented by the lexicographically smaller of `x` and `−x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalClass {
    rep: BordismElement,
}

impl CanonicalClass {
    pub fn rep(&self) -> &BordismElement {
        &self.rep
    }

    pub fn kind(&self) -> GroupKind {
        self.rep.kind
    }

    /// All canonical classes of a group, in order.
    pub fn all(kind: GroupKind) -> Vec<CanonicalClass> {
        let mut out: Vec<CanonicalClass> = BordismElement::all(kind).iter().map(|e| e.canonicalize()).collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.rep)
    }
}

impl Serialize for CanonicalClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rep.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPC: GroupKind = GroupKind::new(Category::Smooth, Flavor::PinC);
    const SPP: GroupKind = GroupKind::new(Category::Smooth, Flavor::PinPlus);
    const SPM: GroupKind = GroupKind::new(Category::Smooth, Flavor::PinMinus);
    const TPC: GroupKind = GroupKind::new(Category::Top, Flavor::PinC);
    const TPP: GroupKind = GroupKind::new(Category::Top, Flavor::PinPlus);

    fn el(kind: GroupKind, c: &[i64]) -> BordismElement {
        BordismElement::new(kind, c).unwrap()
    }

    #[test]
    fn group_table() {
        assert_eq!(group_info(SPP).orders, vec![16]);
        assert_eq!(group_info(SPP).generators, vec!["RP4"]);
        assert!(group_info(SPM).orders.is_empty());
        assert_eq!(group_info(TPC).orders, vec![2, 8, 2]);
        assert_eq!(group_info(TPC).generators, vec!["E8", "RP4", "CP2"]);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(el(SPP, &[9]).add(&el(SPP, &[9])).unwrap(), el(SPP, &[2]));
        assert_eq!(el(SPC, &[7, 1]).add(&el(SPC, &[1, 1])).unwrap(), el(SPC, &[0, 0]));
        assert_eq!(el(SPP, &[3]).neg(), el(SPP, &[13]));
        assert_eq!(el(SPP, &[3]).add(&el(SPC, &[3, 0])).unwrap_err(), BordismError::KindMismatch(SPP, SPC));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(el(SPP, &[13]).canonicalize().rep(), &el(SPP, &[3]));
        assert_eq!(el(SPC, &[7, 1]).canonicalize().rep(), &el(SPC, &[1, 1]));
        assert_eq!(el(TPC, &[1, 5, 0]).canonicalize().rep(), &el(TPC, &[1, 3, 0]));
        assert_eq!(CanonicalClass::all(SPP).len(), 9);
        assert_eq!(CanonicalClass::all(SPC).len(), 10);
    }

    #[test]
    fn forget_examples() {
        assert_eq!(el(SPP, &[7]).forget_smooth().unwrap(), el(TPP, &[0, 7]));
        assert_eq!(el(SPP, &[8]).forget_smooth().unwrap(), el(TPP, &[0, 0]));
        assert_eq!(el(SPC, &[1, 1]).forget_smooth().unwrap(), el(TPC, &[0, 1, 1]));
        assert_eq!(el(TPP, &[1, 1]).forget_smooth().unwrap_err(), BordismError::NotSmooth(TPP));
    }

    #[test]
    fn residues_are_checked() {
        assert!(matches!(
            BordismElement::new(SPP, &[16]),
            Err(BordismError::ResidueOutOfRange { modulus: 16, value: 16, .. })
        ));
        assert!(matches!(BordismElement::new(SPC, &[1]), Err(BordismError::Arity { .. })));
        assert_eq!(BordismElement::reduced(SPP, &[-3]).unwrap(), el(SPP, &[13]));
    }

    #[test]
    fn notation_round_trip() {
        for kind in GroupKind::ALL {
            for e in BordismElement::all(kind) {
                let text = e.to_string();
                assert_eq!(text.parse::<BordismElement>().unwrap(), e, "{text}");
            }
        }
        assert_eq!("pin+:7".parse::<BordismElement>().unwrap(), el(SPP, &[7]));
        assert_eq!("pinc:(1,1)".parse::<BordismElement>().unwrap(), el(SPC, &[1, 1]));
        assert_eq!("top-pin+:(1,3)".parse::<BordismElement>().unwrap(), el(TPP, &[1, 3]));
        assert_eq!("pin-:()".parse::<BordismElement>().unwrap(), BordismElement::zero(SPM));
        assert!("spin:1".parse::<BordismElement>().is_err());
        assert!("pin+:(1".parse::<BordismElement>().is_err());
    }
}

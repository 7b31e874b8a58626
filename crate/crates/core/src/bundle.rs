//! Total spaces of circle bundles over simply-connected 4-manifolds.
//!
//! Given a closed simply-connected 4-manifold `X` (intersection form plus
//! Kirby–Siebenmann invariant) and the Chern class `c₁` of a line bundle whose
//! divisibility is 2, the total space `M` has `π₁(M) = ℤ/2`. Writing `c₁ = 2c̃`, the
//! classification reads off the w₂-type from the parity of the form and of `c̃`,
//! the Pin class from `c̃²`, and `r = rk H₂(X) − 1`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{check_relations, Family, Invariants, StandardForm, W2Type};
use crate::bordism::Category;
use crate::forms::{residue, CohomologyClass, FormError, IntersectionForm, ManifoldDescription};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("c1 has divisibility {0}, expected 2")]
    WrongDivisibility(BigInt),
    #[error("c1 = 0: the total space is X x S1, which has fundamental group Z")]
    ZeroClass,
    #[error("c1 has divisibility {m}: {reason}")]
    NotSupported { m: BigInt, reason: &'static str },
    #[error("Kirby-Siebenmann invariant must be 0 or 1, got {0}")]
    InvalidKs(u8),
    #[error("an even form of signature {signature} has Kirby-Siebenmann invariant {expected}, got {ks}")]
    InconsistentKs { signature: i64, expected: u8, ks: u8 },
    #[error("k formula gave the non-integral or negative value {numerator}/2")]
    NonIntegralK { numerator: i64 },
    #[error("classification violates the parity relations: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    InvalidForm(#[from] FormError),
}

impl BundleError {
    /// Errors that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, BundleError::NonIntegralK { .. } | BundleError::Inconsistent(_))
    }
}

/// A 4-manifold together with the Chern class of a line bundle over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleInput {
    form: IntersectionForm,
    ks: u8,
    c1: CohomologyClass,
}

impl BundleInput {
    /// For an even form the Kirby–Siebenmann invariant is forced to be
    /// `signature / 8 mod 2`, and inputs contradicting that are rejected.
    pub fn new(form: IntersectionForm, ks: u8, c1: CohomologyClass) -> Result<Self, BundleError> {
        if ks > 1 {
            return Err(BundleError::InvalidKs(ks));
        }
        if c1.len() != form.rank() {
            return Err(FormError::LengthMismatch { expected: form.rank(), found: c1.len() }.into());
        }
        if form.is_even() {
            let signature = form.signature();
            let expected = (signature / 8).rem_euclid(2) as u8;
            if ks != expected {
                return Err(BundleError::InconsistentKs { signature, expected, ks });
            }
        }
        Ok(BundleInput { form, ks, c1 })
    }

    pub fn from_description(desc: &ManifoldDescription, c1: CohomologyClass) -> Result<Self, BundleError> {
        Self::new(desc.intersection_form()?, desc.ks, c1)
    }

    pub fn form(&self) -> &IntersectionForm {
        &self.form
    }

    pub fn ks(&self) -> u8 {
        self.ks
    }

    pub fn c1(&self) -> &CohomologyClass {
        &self.c1
    }

    /// The same bundle pulled back to `X # S²×S²`.
    pub fn stabilize(&self) -> BundleInput {
        let h = IntersectionForm::from_rows(&[[0, 1], [1, 0]]).expect("hyperbolic form");
        BundleInput { form: self.form.direct_sum(&h), ks: self.ks, c1: self.c1.extend_zeros(2) }
    }

    pub fn negate(&self) -> BundleInput {
        BundleInput { form: self.form.clone(), ks: self.ks, c1: self.c1.neg() }
    }
}

/// The classified total space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub m: u32,
    pub r: u32,
    pub w2type: W2Type,
    pub smoothable: bool,
    /// `⟨c̃², [X]⟩` with `c₁ = 2c̃`.
    #[serde(serialize_with = "as_string")]
    pub tilde_square: BigInt,
    pub q: Option<u8>,
    pub s: Option<u8>,
    pub k: u32,
    pub homeo_form: StandardForm,
    pub smooth_forms: Vec<StandardForm>,
    pub invariants: Invariants,
    pub rule: &'static str,
}

fn as_string<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

const RULE_II: &str = "w2(X) = 0 gives type II: M = S2xRP3 #_S1 (#_k S2xS2)xS1 with k = rk H2(X)/2 - 1, \
                       using *S2xRP3 when KS(X) = 1";
const RULE_III: &str = "w2(X) = c1(xi~) mod 2 gives type III: q = <c1(xi~)^2,[X]> mod 8 up to sign, \
                        k = (rk H2(X) - (3+(-1)^q)/2)/2, p = KS(X); the smooth class is only determined \
                        up to the kernel {0, 8} of Z/16 -> Z/8";
const RULE_I: &str = "w2(X) differs from 0 and from c1(xi~) mod 2, giving type I: q = <c1(xi~)^2,[X]> mod 8 \
                      up to sign, s = (rk H2(X) + q) mod 2, k = (rk H2(X) - (7+(-1)^q)/2)/2 for s = 0 and \
                      (rk H2(X) - (5+(-1)^q)/2)/2 for s = 1, p = KS(X)";

fn checked_divisibility(c1: &CohomologyClass) -> Result<BigInt, BundleError> {
    let m = c1.divisibility();
    if m.is_zero() {
        return Err(BundleError::ZeroClass);
    }
    Ok(m)
}

/// w₂-type of the total space of the bundle with Chern class `c1` (divisibility 2).
pub fn w2_type(form: &IntersectionForm, c1: &CohomologyClass) -> Result<W2Type, BundleError> {
    let m = checked_divisibility(c1)?;
    if m != BigInt::from(2) {
        return Err(BundleError::WrongDivisibility(m));
    }
    let tilde = c1.div_exact(&m).expect("divisibility divides every entry");
    Ok(if form.is_even() {
        W2Type::II
    } else if form.is_characteristic(&tilde)? {
        W2Type::III
    } else {
        W2Type::I
    })
}

/// Odd divisibility is always smoothable; even divisibility exactly when `KS(X) = 0`.
pub fn is_smoothable(ks: u8, c1: &CohomologyClass) -> Result<bool, BundleError> {
    let m = checked_divisibility(c1)?;
    Ok(m.bit(0) || ks == 0)
}

/// `n / 2` when `n` is a non-negative even number.
fn half(n: i64) -> Result<u32, BundleError> {
    if n < 0 || n % 2 != 0 {
        return Err(BundleError::NonIntegralK { numerator: n });
    }
    u32::try_from(n / 2).map_err(|_| BundleError::NonIntegralK { numerator: n })
}

fn minus_one_pow(q: u8) -> i64 {
    if q.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Representative of `±x` in `ℤ/n` lying in `0..=n/2`.
fn canonical_mod(x: u32, n: u32) -> u8 {
    let x = x % n;
    x.min((n - x) % n) as u8
}

pub fn classify(input: &BundleInput) -> Result<Classification, BundleError> {
    let m = checked_divisibility(&input.c1)?;
    if m.is_one() {
        return Err(BundleError::NotSupported {
            m,
            reason: "the total space is simply connected (Smale-Barden / Duan-Liang classification)",
        });
    }
    if m != BigInt::from(2) {
        return Err(BundleError::NotSupported { m, reason: "only divisibility 2 (fundamental group Z/2) is handled" });
    }
    let w2type = w2_type(&input.form, &input.c1)?;
    let tilde = input.c1.div_exact(&m).expect("divisibility divides every entry");
    let tilde_square = input.form.square(&tilde)?;
    let rank = input.form.rank() as i64;
    let r = (rank - 1) as u32;
    let q = canonical_mod(residue(&tilde_square, 8), 8);

    let (family, k, rule) = match w2type {
        W2Type::II => (Family::S2xRp3, half(rank - 2)?, RULE_II),
        W2Type::III => (Family::Fake, half(rank - (3 + minus_one_pow(q)) / 2)?, RULE_III),
        W2Type::I => {
            if (rank + i64::from(q)) % 2 == 0 {
                (Family::FakeWithS2xRp3, half(rank - (7 + minus_one_pow(q)) / 2)?, RULE_I)
            } else {
                (Family::FakeWithCp2xS1, half(rank - (5 + minus_one_pow(q)) / 2)?, RULE_I)
            }
        }
    };
    let q_param = if w2type == W2Type::II { 0 } else { q };
    let homeo_form = StandardForm::new(Category::Top, family, input.ks, q_param, k)
        .map_err(|e| BundleError::Inconsistent(e.to_string()))?;
    let invariants = homeo_form.invariants();
    if invariants.r() != r || !check_relations(&invariants) {
        return Err(BundleError::Inconsistent(format!("{invariants} from rank {rank}")));
    }

    let smoothable = is_smoothable(input.ks, &input.c1)?;
    let mut smooth_forms = Vec::new();
    if smoothable {
        let qs = if w2type == W2Type::III { vec![q, canonical_mod(u32::from(q) + 8, 16)] } else { vec![q_param] };
        for sq in qs {
            let form = StandardForm::new(Category::Smooth, family, 0, sq, k)
                .map_err(|e| BundleError::Inconsistent(e.to_string()))?;
            smooth_forms.push(form);
        }
        smooth_forms.sort();
        smooth_forms.dedup();
    }

    Ok(Classification {
        m: m.to_u32().expect("m = 2"),
        r,
        w2type,
        smoothable,
        tilde_square,
        q: (w2type != W2Type::II).then_some(q),
        s: (w2type == W2Type::I).then_some(homeo_form.s()),
        k,
        homeo_form,
        smooth_forms,
        invariants,
        rule,
    })
}

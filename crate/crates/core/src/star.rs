//! Star structures on H: the Hopf star of the real form SL_q(2,R) and the two twisted stars.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{Generator, HElement, HTensor, LawReport, Uq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StarKind {
    /// `X₊* = -q⁻¹X₊`, `X₋* = -qX₋`, `K* = K`; obeys `Δ∘* = (*⊗*)∘Δ`.
    HopfSL2R,
    /// `X₊* = X₋`, `X₋* = X₊`, `K* = K⁻¹`; obeys `Δ∘* = (*⊗*)∘Δ^op`.
    TwistedPlus,
    /// `X₊* = -X₋`, `X₋* = -X₊`, `K* = K⁻¹`.
    TwistedMinus,
}

impl StarKind {
    pub const ALL: [StarKind; 3] = [StarKind::HopfSL2R, StarKind::TwistedPlus, StarKind::TwistedMinus];

    pub fn cli_name(self) -> &'static str {
        match self {
            StarKind::HopfSL2R => "hopf",
            StarKind::TwistedPlus => "twisted+",
            StarKind::TwistedMinus => "twisted-",
        }
    }

    pub fn law(self) -> CoproductLaw {
        match self {
            StarKind::HopfSL2R => CoproductLaw::Plain,
            _ => CoproductLaw::Twisted,
        }
    }

    pub fn is_twisted(self) -> bool {
        self.law() == CoproductLaw::Twisted
    }

    /// `+1` for the plus branch, `-1` for the minus branch, `0` for the Hopf star.
    pub fn branch(self) -> i64 {
        match self {
            StarKind::HopfSL2R => 0,
            StarKind::TwistedPlus => 1,
            StarKind::TwistedMinus => -1,
        }
    }
}

impl fmt::Display for StarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for StarKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hopf" => Ok(StarKind::HopfSL2R),
            "twisted+" => Ok(StarKind::TwistedPlus),
            "twisted-" => Ok(StarKind::TwistedMinus),
            _ => Err(Error::Parse(format!("unknown star {s:?}; expected hopf, twisted+ or twisted-"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoproductLaw {
    Plain,
    Twisted,
}

/// An antilinear, antimultiplicative map on H fixed by the images of the generators.
#[derive(Clone, Debug)]
pub struct StarStructure {
    pub kind: Option<StarKind>,
    pub law: CoproductLaw,
    /// Images of `X₊, X₋, K`.
    pub images: [HElement; 3],
}

impl StarStructure {
    pub fn builtin(h: &Uq, kind: StarKind) -> StarStructure {
        let f = h.field();
        let images = match kind {
            StarKind::HopfSL2R => [h.xp().scale(&-f.q_pow(-1)), h.xm().scale(&-f.q()), h.k()],
            StarKind::TwistedPlus => [h.xm(), h.xp(), h.k_pow(-1)],
            StarKind::TwistedMinus => [h.xm().neg(), h.xp().neg(), h.k_pow(-1)],
        };
        StarStructure { kind: Some(kind), law: kind.law(), images }
    }

    /// A user supplied star; run [`StarStructure::check_all`] before trusting it.
    pub fn custom(images: [HElement; 3], law: CoproductLaw) -> StarStructure {
        StarStructure { kind: None, law, images }
    }

    pub fn image(&self, g: Generator) -> &HElement {
        match g {
            Generator::Xp => &self.images[0],
            Generator::Xm => &self.images[1],
            Generator::K => &self.images[2],
        }
    }

    pub fn apply(&self, h: &Uq, x: &HElement) -> HElement {
        let conj = conj_coeffs(x);
        h.extend_antihom(&conj, &self.images)
    }

    pub fn apply_tensor(&self, h: &Uq, t: &HTensor) -> HTensor {
        t.map(|x| self.apply(h, x), |y| self.apply(h, y))
    }

    /// The star respects the defining relations of H, so it is well defined.
    pub fn check_relations(&self, h: &Uq) -> LawReport {
        let f = h.field();
        let mut r = LawReport::new("star respects relations");
        let s = |x: &HElement| self.apply(h, x);
        // each relation, with both sides starred, must still hold among the images
        let img = &self.images;
        let lhs = h.mul(&img[0], &img[2]);
        let rhs = h.mul(&img[2], &img[0]).scale(&f.q_pow(2).conj());
        r.record(lhs == rhs, || "(K Xp)* = conj(q^2) (Xp K)*".into());
        let lhs = h.mul(&img[1], &img[2]);
        let rhs = h.mul(&img[2], &img[1]).scale(&f.q_pow(-2).conj());
        r.record(lhs == rhs, || "(K Xm)* = conj(q^-2) (Xm K)*".into());
        let lhs = h.mul(&img[1], &img[0]).sub(&h.mul(&img[0], &img[1]));
        r.record(lhs == s(&h.cartan()), || "([Xp, Xm])* = C*".into());
        r.record(h.pow(&img[0], h.n()).is_zero() && h.pow(&img[1], h.n()).is_zero(), || "nilpotency".into());
        r.record(h.pow(&img[2], h.n()) == h.one(), || "(K*)^N = 1".into());
        r
    }

    pub fn check_involution(&self, h: &Uq) -> LawReport {
        let mut r = LawReport::new("star is involutive");
        for m in h.basis() {
            let x = HElement::term(m, h.field().one());
            r.record(self.apply(h, &self.apply(h, &x)) == x, || format!("** ≠ id on {m}"));
        }
        r
    }

    /// `Δ(x*) = (*⊗*)Δ(x)` for the plain law, `Δ(x*) = (*⊗*)Δ^op(x)` for the twisted law.
    pub fn check_coproduct_law(&self, h: &Uq) -> LawReport {
        self.check_law(h, self.law)
    }

    pub fn check_law(&self, h: &Uq, law: CoproductLaw) -> LawReport {
        let name = match law {
            CoproductLaw::Plain => "Δ∘* = (*⊗*)∘Δ",
            CoproductLaw::Twisted => "Δ∘* = (*⊗*)∘Δ^op",
        };
        let mut r = LawReport::new(name);
        for m in h.basis() {
            let x = HElement::term(m, h.field().one());
            let lhs = h.coproduct(&self.apply(h, &x));
            let d = match law {
                CoproductLaw::Plain => h.coproduct(&x),
                CoproductLaw::Twisted => h.coproduct_op(&x),
            };
            r.record(lhs == self.apply_tensor(h, &d), || format!("violated on {m}"));
        }
        r
    }

    /// `S∘*∘S∘* = id` for the plain law, `S∘* = *∘S` for the twisted law.
    pub fn check_antipode_relation(&self, h: &Uq) -> LawReport {
        let name = match self.law {
            CoproductLaw::Plain => "S*S* = id",
            CoproductLaw::Twisted => "S* = *S",
        };
        let mut r = LawReport::new(name);
        for m in h.basis() {
            let x = HElement::term(m, h.field().one());
            let ok = match self.law {
                CoproductLaw::Plain => h.antipode(&self.apply(h, &h.antipode(&self.apply(h, &x)))) == x,
                CoproductLaw::Twisted => h.antipode(&self.apply(h, &x)) == self.apply(h, &h.antipode(&x)),
            };
            r.record(ok, || format!("violated on {m}"));
        }
        r
    }

    pub fn check_counit(&self, h: &Uq) -> LawReport {
        let mut r = LawReport::new("ε(x*) = conj ε(x)");
        for m in h.basis() {
            let x = HElement::term(m, h.field().one());
            r.record(h.counit(&self.apply(h, &x)) == h.counit(&x).conj(), || format!("violated on {m}"));
        }
        r
    }

    pub fn check_all(&self, h: &Uq) -> Vec<LawReport> {
        vec![
            self.check_relations(h),
            self.check_involution(h),
            self.check_coproduct_law(h),
            self.check_antipode_relation(h),
            self.check_counit(h),
        ]
    }
}

pub fn conj_coeffs(x: &HElement) -> HElement {
    let mut r = HElement::zero();
    for (m, c) in x.terms() {
        r.add_term(*m, c.conj());
    }
    r
}

/// The linear anti-automorphism `X₊ ↔ X₋`, `K ↦ K` (the transpose of H).
pub fn transpose_antiautomorphism(h: &Uq, x: &HElement) -> HElement {
    h.extend_antihom(x, &[h.xm(), h.xp(), h.k()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> Uq {
        Uq::new(3).unwrap()
    }

    #[test]
    fn hopf_star_examples() {
        let h = h3();
        let s = StarStructure::builtin(&h, StarKind::HopfSL2R);
        assert_eq!(s.apply(&h, &h.k()), h.k());
        let xpxm = h.mul(&h.xp(), &h.xm());
        assert_eq!(s.apply(&h, &xpxm), h.mul(&h.xm(), &h.xp()));
    }

    #[test]
    fn twisted_star_antilinear() {
        let h = h3();
        let s = StarStructure::builtin(&h, StarKind::TwistedPlus);
        let x = h.xp().scale(&h.field().q());
        assert_eq!(s.apply(&h, &x), h.xm().scale(&h.field().q_pow(-1)));
    }

    #[test]
    fn all_laws_for_builtin_stars() {
        let h = h3();
        for kind in StarKind::ALL {
            let s = StarStructure::builtin(&h, kind);
            for r in s.check_all(&h) {
                assert!(r.passed(), "{kind}: {} {:?}", r.name, r.failures);
            }
        }
    }

    #[test]
    fn only_hopf_star_obeys_plain_law() {
        let h = h3();
        for kind in StarKind::ALL {
            let s = StarStructure::builtin(&h, kind);
            let plain = s.check_law(&h, CoproductLaw::Plain);
            assert_eq!(plain.passed(), kind == StarKind::HopfSL2R, "{kind}");
        }
        let tp = StarStructure::builtin(&h, StarKind::TwistedPlus);
        let plain = tp.check_law(&h, CoproductLaw::Plain);
        assert!(plain.failures.iter().any(|f| f.contains("Xp^1 Xm^0 K^0")));
        let k_only = plain.failures.iter().any(|f| f.contains("Xp^0 Xm^0 K^1"));
        assert!(!k_only, "plain and twisted laws agree on K");
    }

    #[test]
    fn parse_names() {
        for kind in StarKind::ALL {
            assert_eq!(kind.cli_name().parse::<StarKind>().unwrap(), kind);
        }
        assert!("sl2".parse::<StarKind>().is_err());
    }

    #[test]
    fn bad_custom_star_is_detected() {
        let h = h3();
        // K* = K with X₊* = X₋ clashes with K X₊ = q² X₊ K
        let s = StarStructure::custom([h.xm(), h.xp(), h.k()], CoproductLaw::Twisted);
        assert!(!s.check_relations(&h).passed());
    }
}

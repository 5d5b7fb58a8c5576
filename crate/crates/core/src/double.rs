//! The double H̃: the quotient with `K^{2N} = 1`, realized inside `H ⊕ H` by
//! `K̃ = (K, -K)`, `X̃₊ = (X₊, X₊)`, `X̃₋ = (X₋, -X₋)`.
//!
//! Representations come in two sectors labeled by the eigenvalue `ω = ±1` of the central
//! element `K̃^N`. The `ω = +1` ones are representations of H, the `ω = -1` ones are not.
//! A star on H̃ acts blockwise: the twisted stars of branch `±` restrict to branch `±` on the
//! upper block and to branch `∓` on the lower one, while the Hopf star restricts to itself.

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloNum, EmbeddingChoice};
use crate::error::{Error, Result};
use crate::forms::{solve_constraints, FormSolutionSpace, Signature};
use crate::hopf::{Generator, HElement, LawReport, Uq};
use crate::linalg::{Matrix, Subspace};
use crate::rep::{regular_representation, Representation, Structure};
use crate::star::{StarKind, StarStructure};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleElement {
    pub upper: HElement,
    pub lower: HElement,
}

#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    h: Uq,
}

fn partner(kind: StarKind) -> StarKind {
    match kind {
        StarKind::HopfSL2R => StarKind::HopfSL2R,
        StarKind::TwistedPlus => StarKind::TwistedMinus,
        StarKind::TwistedMinus => StarKind::TwistedPlus,
    }
}

impl DoubleAlgebra {
    pub fn new(h: &Uq) -> DoubleAlgebra {
        DoubleAlgebra { h: h.clone() }
    }

    pub fn uq(&self) -> &Uq {
        &self.h
    }

    pub fn dim(&self) -> usize {
        2 * self.h.dim()
    }

    pub fn one(&self) -> DoubleElement {
        DoubleElement { upper: self.h.one(), lower: self.h.one() }
    }

    pub fn generator(&self, g: Generator) -> DoubleElement {
        let x = self.h.generator(g);
        let lower = if g == Generator::Xp { x.clone() } else { x.neg() };
        DoubleElement { upper: x, lower }
    }

    pub fn mul(&self, a: &DoubleElement, b: &DoubleElement) -> DoubleElement {
        DoubleElement { upper: self.h.mul(&a.upper, &b.upper), lower: self.h.mul(&a.lower, &b.lower) }
    }

    pub fn pow(&self, a: &DoubleElement, e: u32) -> DoubleElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    pub fn add(&self, a: &DoubleElement, b: &DoubleElement) -> DoubleElement {
        DoubleElement { upper: a.upper.add(&b.upper), lower: a.lower.add(&b.lower) }
    }

    pub fn scale(&self, a: &DoubleElement, c: &CycloNum) -> DoubleElement {
        DoubleElement { upper: a.upper.scale(c), lower: a.lower.scale(c) }
    }

    pub fn is_one(&self, a: &DoubleElement) -> bool {
        *a == self.one()
    }

    /// Blockwise star; see the module docs.
    pub fn star(&self, kind: StarKind, a: &DoubleElement) -> DoubleElement {
        let up = StarStructure::builtin(&self.h, kind);
        let low = StarStructure::builtin(&self.h, partner(kind));
        DoubleElement { upper: up.apply(&self.h, &a.upper), lower: low.apply(&self.h, &a.lower) }
    }

    /// Prescribed star images of `X̃₊, X̃₋, K̃`.
    pub fn star_images(&self, kind: StarKind) -> [DoubleElement; 3] {
        let f = self.h.field();
        let [xp, xm, k] = Generator::ALL.map(|g| self.generator(g));
        let kinv = self.pow(&k, 2 * self.h.n() - 1);
        match kind {
            StarKind::HopfSL2R => [self.scale(&xp, &-f.q_pow(-1)), self.scale(&xm, &-f.q()), k],
            _ => {
                let s = f.from_int(kind.branch());
                [self.scale(&xm, &s), self.scale(&xp, &s), kinv]
            }
        }
    }

    /// Relations of U_q with `K̃^{2N} = 1`, plus the order of `K̃`.
    pub fn check_relations(&self) -> LawReport {
        let h = &self.h;
        let f = h.field();
        let n = h.n();
        let [xp, xm, k] = Generator::ALL.map(|g| self.generator(g));
        let kinv = self.pow(&k, 2 * n - 1);
        let mut r = LawReport::new("relations of the double");
        r.record(self.mul(&k, &xp) == self.scale(&self.mul(&xp, &k), &f.q_pow(2)), || "K Xp = q^2 Xp K".into());
        r.record(self.mul(&k, &xm) == self.scale(&self.mul(&xm, &k), &f.q_pow(-2)), || "K Xm = q^-2 Xm K".into());
        let comm = self.add(&self.mul(&xp, &xm), &self.scale(&self.mul(&xm, &xp), &f.from_int(-1)));
        let rhs = self.scale(&self.add(&k, &self.scale(&kinv, &f.from_int(-1))), &f.theta().inv().expect("nonzero"));
        r.record(comm == rhs, || "[Xp, Xm] = (K - K^-1)/(q - q^-1)".into());
        let zero = DoubleElement { upper: HElement::zero(), lower: HElement::zero() };
        r.record(self.pow(&xp, n) == zero && self.pow(&xm, n) == zero, || "Xp^N = Xm^N = 0".into());
        r.record(self.k_order() == 2 * n, || format!("K has order {}", self.k_order()));
        r
    }

    /// Smallest `m > 0` with `K̃^m = 1`.
    pub fn k_order(&self) -> u32 {
        let k = self.generator(Generator::K);
        let mut p = k.clone();
        let mut m = 1;
        while !self.is_one(&p) {
            p = self.mul(&p, &k);
            m += 1;
        }
        m
    }

    /// The blockwise star matches the prescribed generator images, and is an antimultiplicative
    /// involution respecting the relations.
    pub fn check_star(&self, kind: StarKind) -> LawReport {
        let h = &self.h;
        let f = h.field();
        let n = h.n();
        let mut r = LawReport::new(format!("{} star on the double", kind.cli_name()));
        let images = self.star_images(kind);
        for (g, img) in Generator::ALL.iter().zip(&images) {
            let x = self.generator(*g);
            r.record(self.star(kind, &x) == *img, || format!("image of {}", g.name()));
            r.record(self.star(kind, img) == x, || format!("involution on {}", g.name()));
        }
        let [xp, xm, k] = images;
        let kinv = self.pow(&k, 2 * n - 1);
        r.record(self.mul(&xp, &k) == self.scale(&self.mul(&k, &xp), &f.q_pow(-2)), || "Xp* K* = q^-2 K* Xp*".into());
        r.record(self.mul(&xm, &k) == self.scale(&self.mul(&k, &xm), &f.q_pow(2)), || "Xm* K* = q^2 K* Xm*".into());
        let comm = self.add(&self.mul(&xm, &xp), &self.scale(&self.mul(&xp, &xm), &f.from_int(-1)));
        let rhs = self.scale(&self.add(&k, &self.scale(&kinv, &f.from_int(-1))), &(-f.theta()).inv().expect("nonzero"));
        r.record(comm == rhs, || "Xm* Xp* - Xp* Xm* = (K* - K*^-1)/conj(q - q^-1)".into());
        r.record(self.is_one(&self.pow(&k, 2 * n)), || "(K*)^{2N} = 1".into());
        r
    }

    /// Dimension of the algebra generated by `X̃₊, X̃₋, K̃` inside `H ⊕ H`.
    pub fn span_dim(&self) -> usize {
        let reg = self.regular();
        let one: Vec<CycloNum> = {
            let mut v = self.h.to_vector(&self.h.one());
            v.extend(self.h.to_vector(&self.h.one()));
            v
        };
        let [a, b, c] = &reg.mats;
        Subspace::span(self.h.field(), self.dim(), &[one]).closure(&[a, b, c]).dim()
    }

    /// Left multiplication on `H ⊕ H`, upper PBW basis first.
    pub fn regular(&self) -> DoubleRep {
        let reg = regular_representation(&self.h);
        let up = DoubleRep::from_rep(&reg, 1);
        let low = DoubleRep::from_rep(&reg, -1);
        up.direct_sum(&low, "regular~")
    }
}

/// A representation of the double, by the matrices of `X̃₊, X̃₋, K̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleRep {
    pub name: String,
    /// Eigenvalue of `K̃^N`, or 0 for mixed sums.
    pub omega: i64,
    pub mats: [Matrix; 3],
}

/// `"3_irr" -> "3-_irr"`.
pub fn minus_name(name: &str) -> String {
    match name.split_once('_') {
        Some((a, b)) => format!("{a}-_{b}"),
        None => format!("{name}-"),
    }
}

impl DoubleRep {
    /// `ω = 1`: the H-representation itself; `ω = -1`: `(ρ(X₊), -ρ(X₋), -ρ(K))`.
    pub fn from_rep(rep: &Representation, omega: i64) -> DoubleRep {
        let [xp, xm, k] = rep.matrices().clone();
        if omega == 1 {
            DoubleRep { name: rep.name.clone(), omega, mats: [xp, xm, k] }
        } else {
            DoubleRep { name: minus_name(&rep.name), omega: -1, mats: [xp, xm.neg(), k.neg()] }
        }
    }

    pub fn dim(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn direct_sum(&self, o: &DoubleRep, name: &str) -> DoubleRep {
        let (d1, d2) = (self.dim(), o.dim());
        let f = self.mats[0].field().clone();
        let block = |a: &Matrix, b: &Matrix| {
            Matrix::from_fn(&f, d1 + d2, d1 + d2, |i, j| {
                if i < d1 && j < d1 {
                    a[(i, j)].clone()
                } else if i >= d1 && j >= d1 {
                    b[(i - d1, j - d1)].clone()
                } else {
                    f.zero()
                }
            })
        };
        let omega = if self.omega == o.omega { self.omega } else { 0 };
        DoubleRep {
            name: name.into(),
            omega,
            mats: [block(&self.mats[0], &o.mats[0]), block(&self.mats[1], &o.mats[1]), block(&self.mats[2], &o.mats[2])],
        }
    }

    pub fn check_relations(&self, h: &Uq) -> LawReport {
        let f = self.mats[0].field();
        let [xp, xm, k] = &self.mats;
        let n = h.n() as usize;
        let d = self.dim();
        let kinv = k.pow(2 * n - 1);
        let mut r = LawReport::new(format!("relations on {}", self.name));
        r.record(k.mul(xp) == xp.mul(k).scale(&f.q_pow(2)), || "K Xp = q^2 Xp K".into());
        r.record(k.mul(xm) == xm.mul(k).scale(&f.q_pow(-2)), || "K Xm = q^-2 Xm K".into());
        let c = k.sub(&kinv).scale(&f.theta().inv().expect("nonzero"));
        r.record(xp.mul(xm).sub(&xm.mul(xp)) == c, || "[Xp, Xm] = (K - K^-1)/(q - q^-1)".into());
        r.record(xp.pow(n).is_zero() && xm.pow(n).is_zero(), || "Xp^N = Xm^N = 0".into());
        r.record(k.pow(2 * n) == Matrix::identity(f, d), || "K^{2N} = 1".into());
        if self.omega != 0 {
            let w = Matrix::identity(f, d).scale(&f.from_int(self.omega));
            r.record(k.pow(n) == w, || format!("K^N = {}", self.omega));
        }
        r
    }

    /// The same matrices read as a would-be representation of H.
    pub fn as_h_representation(&self) -> Representation {
        let labels = (0..self.dim()).map(|i| format!("v{i}")).collect();
        Representation::new(self.name.clone(), labels, self.mats.clone()).expect("square")
    }

    /// Matrices of the starred generators.
    pub fn star_images(&self, h: &Uq, kind: StarKind) -> [Matrix; 3] {
        let f = self.mats[0].field();
        let [xp, xm, k] = &self.mats;
        match kind {
            StarKind::HopfSL2R => [xp.scale(&-f.q_pow(-1)), xm.scale(&-f.q()), k.clone()],
            _ => {
                let s = f.from_int(kind.branch());
                [xm.scale(&s), xp.scale(&s), k.pow(2 * h.n() as usize - 1)]
            }
        }
    }
}

/// Invariant hermitian forms on a representation of the double.
pub fn double_forms(h: &Uq, rep: &DoubleRep, kind: StarKind) -> FormSolutionSpace {
    let pairs: Vec<(Matrix, Matrix)> = rep.mats.iter().cloned().zip(rep.star_images(h, kind)).collect();
    FormSolutionSpace {
        name: rep.name.clone(),
        star: Some(kind),
        dim: rep.dim(),
        basis: solve_constraints(h.field(), rep.dim(), &pairs),
    }
}

/// Named representations in both sectors: the indecomposables of H and their `ω = -1` partners.
pub fn build_double(st: &Structure) -> Result<(DoubleAlgebra, Vec<DoubleRep>)> {
    let h = &st.h;
    if h.n() != 3 {
        return Err(Error::UnsupportedN(h.n(), "the double's named representations are tabulated for N = 3"));
    }
    let alg = DoubleAlgebra::new(h);
    let mut reps = Vec::new();
    for name in ["3_irr", "6_odd", "6_eve", "5_odd", "3_odd", "4_eve", "3_eve", "2_eve"] {
        let r = st.named_module(name)?;
        reps.push(DoubleRep::from_rep(&r, 1));
        reps.push(DoubleRep::from_rep(&r, -1));
    }
    Ok((alg, reps))
}

pub fn named_double_rep(st: &Structure, name: &str) -> Result<DoubleRep> {
    if name == "regular~" || name == "regular" {
        return Ok(DoubleAlgebra::new(&st.h).regular());
    }
    let (_, reps) = build_double(st)?;
    reps.into_iter().find(|r| r.name == name).ok_or_else(|| Error::UnknownRepresentation(name.into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorPair {
    pub name: String,
    pub star: String,
    pub plus: Option<Signature>,
    pub minus: Option<Signature>,
}

/// Generic twisted signatures of a module and its `ω = -1` partner.
pub fn sector_pair(st: &Structure, name: &str, kind: StarKind, e: &EmbeddingChoice) -> Result<SectorPair> {
    let r = st.named_module(name)?;
    let sig = |d: &DoubleRep| -> Result<Option<Signature>> {
        let s = double_forms(&st.h, d, kind);
        if s.basis.is_empty() {
            Ok(None)
        } else {
            Ok(Some(s.generic_signature(e)?))
        }
    };
    Ok(SectorPair {
        name: name.into(),
        star: kind.cli_name().into(),
        plus: sig(&DoubleRep::from_rep(&r, 1))?,
        minus: sig(&DoubleRep::from_rep(&r, -1))?,
    })
}

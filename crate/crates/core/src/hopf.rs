//! The restricted quantum group H = U_q(sl2) at an odd primitive N-th root of unity.
//!
//! Generators X₊, X₋, K with
//! `K X± = q^{±2} X± K`, `[X₊, X₋] = (K - K⁻¹)/(q - q⁻¹)`, `X±^N = 0`, `K^N = 1`,
//! and coproduct `ΔX₊ = X₊⊗1 + K⊗X₊`, `ΔX₋ = X₋⊗K⁻¹ + 1⊗X₋`, `ΔK = K⊗K`.
//! Elements are expanded on the PBW basis `X₊ᵃ X₋ᵇ Kᶜ`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloNum, Field};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PbwMonomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl PbwMonomial {
    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        PbwMonomial { a, b, c }
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Xp^{} Xm^{} K^{}", self.a, self.b, self.c)
    }
}

/// The three algebra generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    Xp,
    Xm,
    K,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::Xp, Generator::Xm, Generator::K];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Xp => "Xp",
            Generator::Xm => "Xm",
            Generator::K => "K",
        }
    }
}

/// Sparse linear combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HElement {
    terms: BTreeMap<PbwMonomial, CycloNum>,
}

impl HElement {
    pub fn zero() -> Self {
        HElement { terms: BTreeMap::new() }
    }

    pub fn term(m: PbwMonomial, c: CycloNum) -> Self {
        let mut h = HElement::zero();
        h.add_term(m, c);
        h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &CycloNum)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Option<&CycloNum> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &HElement, s: &CycloNum) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &o.terms {
            self.add_term(*m, c * s);
        }
    }

    pub fn add(&self, o: &HElement) -> HElement {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &HElement) -> HElement {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c);
        }
        r
    }

    pub fn scale(&self, s: &CycloNum) -> HElement {
        if s.is_zero() {
            return HElement::zero();
        }
        HElement { terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn neg(&self) -> HElement {
        HElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}) * {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse element of H ⊗ H.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HTensor {
    terms: BTreeMap<(PbwMonomial, PbwMonomial), CycloNum>,
}

impl HTensor {
    pub fn zero() -> Self {
        HTensor { terms: BTreeMap::new() }
    }

    pub fn pure(x: &HElement, y: &HElement) -> Self {
        let mut t = HTensor::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                t.add_term((*m1, *m2), c1 * c2);
            }
        }
        t
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &CycloNum)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: (PbwMonomial, PbwMonomial), c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, o: &HTensor) -> HTensor {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &HTensor) -> HTensor {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, -c);
        }
        r
    }

    /// The flip `x ⊗ y ↦ y ⊗ x`.
    pub fn flip(&self) -> HTensor {
        HTensor { terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect() }
    }

    /// Applies linear maps to both legs.
    pub fn map(&self, f: impl Fn(&HElement) -> HElement, g: impl Fn(&HElement) -> HElement) -> HTensor {
        let mut r = HTensor::zero();
        for ((m1, m2), c) in &self.terms {
            let l = f(&HElement::term(*m1, c.clone()));
            let rr = g(&HElement::term(*m2, c.field().one()));
            for (x, cx) in l.terms() {
                for (y, cy) in rr.terms() {
                    r.add_term((*x, *y), cx * cy);
                }
            }
        }
        r
    }
}

impl fmt::Debug for HTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|((a, b), c)| format!("({c}) * [{a}] ⊗ [{b}]")).collect();
        write!(f, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })
    }
}

struct UqInner {
    n: u32,
    field: Field,
    products: Vec<OnceLock<HElement>>,
    coproducts: Vec<OnceLock<HTensor>>,
}

/// Handle to the algebra H for a fixed odd N; cheap to clone.
#[derive(Clone)]
pub struct Uq(Arc<UqInner>);

impl fmt::Debug for Uq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Uq(N={})", self.0.n)
    }
}

impl Uq {
    pub fn new(n: u32) -> Result<Uq> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::UnsupportedN(n, "the construction needs an odd N >= 3"));
        }
        let field = Field::new(n)?;
        let d = (n * n * n) as usize;
        let products = (0..d * d).map(|_| OnceLock::new()).collect();
        let coproducts = (0..d).map(|_| OnceLock::new()).collect();
        Ok(Uq(Arc::new(UqInner { n, field, products, coproducts })))
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        (self.0.n as usize).pow(3)
    }

    /// PBW monomials in lexicographic order of `(a, b, c)`.
    pub fn basis(&self) -> Vec<PbwMonomial> {
        let n = self.0.n;
        let mut v = Vec::with_capacity(self.dim());
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    v.push(PbwMonomial::new(a, b, c));
                }
            }
        }
        v
    }

    pub fn index(&self, m: &PbwMonomial) -> usize {
        let n = self.0.n as usize;
        (m.a as usize * n + m.b as usize) * n + m.c as usize
    }

    pub fn monomial_at(&self, i: usize) -> PbwMonomial {
        let n = self.0.n as usize;
        PbwMonomial::new((i / (n * n)) as u32, ((i / n) % n) as u32, (i % n) as u32)
    }

    pub fn mono(&self, a: u32, b: u32, c: u32) -> HElement {
        HElement::term(PbwMonomial::new(a, b, c), self.field().one())
    }

    pub fn one(&self) -> HElement {
        self.mono(0, 0, 0)
    }

    pub fn xp(&self) -> HElement {
        self.mono(1, 0, 0)
    }

    pub fn xm(&self) -> HElement {
        self.mono(0, 1, 0)
    }

    pub fn k(&self) -> HElement {
        self.mono(0, 0, 1)
    }

    pub fn generator(&self, g: Generator) -> HElement {
        match g {
            Generator::Xp => self.xp(),
            Generator::Xm => self.xm(),
            Generator::K => self.k(),
        }
    }

    /// `K^e` for any integer exponent.
    pub fn k_pow(&self, e: i64) -> HElement {
        self.mono(0, 0, e.rem_euclid(self.0.n as i64) as u32)
    }

    pub fn scalar(&self, c: CycloNum) -> HElement {
        HElement::term(PbwMonomial::new(0, 0, 0), c)
    }

    /// `(K - K⁻¹)/(q - q⁻¹)`, the value of the commutator `[X₊, X₋]`.
    pub fn cartan(&self) -> HElement {
        let inv = self.field().theta().inv().expect("theta is nonzero");
        self.k().sub(&self.k_pow(-1)).scale(&inv)
    }

    /// Left multiplication of a PBW monomial by a generator, normal ordered.
    fn gen_times_mono(&self, g: Generator, m: PbwMonomial) -> HElement {
        let n = self.0.n;
        let f = self.field();
        match g {
            Generator::K => {
                // K X₊ᵃ X₋ᵇ = q^{2a-2b} X₊ᵃ X₋ᵇ K
                let e = 2 * m.a as i64 - 2 * m.b as i64;
                HElement::term(PbwMonomial::new(m.a, m.b, (m.c + 1) % n), f.q_pow(e))
            }
            Generator::Xp => {
                if m.a + 1 < n {
                    HElement::term(PbwMonomial::new(m.a + 1, m.b, m.c), f.one())
                } else {
                    HElement::zero()
                }
            }
            Generator::Xm => {
                if m.a == 0 {
                    if m.b + 1 < n {
                        HElement::term(PbwMonomial::new(0, m.b + 1, m.c), f.one())
                    } else {
                        HElement::zero()
                    }
                } else {
                    // X₋ X₊ = X₊ X₋ - C with C = (K - K⁻¹)/(q - q⁻¹)
                    let rest = PbwMonomial::new(m.a - 1, m.b, m.c);
                    let inner = self.gen_times_elem(Generator::Xm, &HElement::term(rest, f.one()));
                    let first = self.gen_times_elem(Generator::Xp, &inner);
                    let cm = self.mul(&self.cartan(), &HElement::term(rest, f.one()));
                    first.sub(&cm)
                }
            }
        }
    }

    fn gen_times_elem(&self, g: Generator, x: &HElement) -> HElement {
        let mut r = HElement::zero();
        for (m, c) in x.terms() {
            r.add_scaled(&self.gen_times_mono(g, *m), c);
        }
        r
    }

    fn mono_product(&self, l: PbwMonomial, r: PbwMonomial) -> &HElement {
        let d = self.dim();
        let idx = self.index(&l) * d + self.index(&r);
        self.0.products[idx].get_or_init(|| {
            let f = self.field();
            let mut acc = HElement::term(r, f.one());
            for _ in 0..l.c {
                acc = self.gen_times_elem(Generator::K, &acc);
            }
            for _ in 0..l.b {
                acc = self.gen_times_elem(Generator::Xm, &acc);
            }
            for _ in 0..l.a {
                acc = self.gen_times_elem(Generator::Xp, &acc);
            }
            acc
        })
    }

    pub fn mul(&self, x: &HElement, y: &HElement) -> HElement {
        let mut r = HElement::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                r.add_scaled(self.mono_product(*m1, *m2), &(c1 * c2));
            }
        }
        r
    }

    pub fn mul_all(&self, xs: &[&HElement]) -> HElement {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &HElement, e: u32) -> HElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    pub fn commutator(&self, x: &HElement, y: &HElement) -> HElement {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn tensor_mul(&self, x: &HTensor, y: &HTensor) -> HTensor {
        let mut r = HTensor::zero();
        for ((a1, b1), c1) in x.terms() {
            for ((a2, b2), c2) in y.terms() {
                let c = c1 * c2;
                let l = self.mono_product(*a1, *a2);
                let rr = self.mono_product(*b1, *b2);
                for (x, cx) in l.terms() {
                    let cc = &c * cx;
                    for (y, cy) in rr.terms() {
                        r.add_term((*x, *y), &cc * cy);
                    }
                }
            }
        }
        r
    }

    pub fn tensor_one(&self) -> HTensor {
        HTensor::pure(&self.one(), &self.one())
    }

    fn generator_coproduct(&self, g: Generator) -> HTensor {
        match g {
            Generator::Xp => HTensor::pure(&self.xp(), &self.one()).add(&HTensor::pure(&self.k(), &self.xp())),
            Generator::Xm => {
                HTensor::pure(&self.xm(), &self.k_pow(-1)).add(&HTensor::pure(&self.one(), &self.xm()))
            }
            Generator::K => HTensor::pure(&self.k(), &self.k()),
        }
    }

    fn mono_coproduct(&self, m: PbwMonomial) -> &HTensor {
        self.0.coproducts[self.index(&m)].get_or_init(|| {
            let mut acc = self.tensor_one();
            for (g, e) in [(Generator::Xp, m.a), (Generator::Xm, m.b), (Generator::K, m.c)] {
                let dg = self.generator_coproduct(g);
                for _ in 0..e {
                    acc = self.tensor_mul(&acc, &dg);
                }
            }
            acc
        })
    }

    pub fn coproduct(&self, x: &HElement) -> HTensor {
        let mut r = HTensor::zero();
        for (m, c) in x.terms() {
            for (k, v) in self.mono_coproduct(*m).terms() {
                r.add_term(*k, v * c);
            }
        }
        r
    }

    pub fn coproduct_op(&self, x: &HElement) -> HTensor {
        self.coproduct(x).flip()
    }

    pub fn counit(&self, x: &HElement) -> CycloNum {
        let mut r = self.field().zero();
        for (m, c) in x.terms() {
            if m.a == 0 && m.b == 0 {
                r += c;
            }
        }
        r
    }

    /// Extends generator images as a linear anti-homomorphism:
    /// `X₊ᵃX₋ᵇKᶜ ↦ img(K)ᶜ img(X₋)ᵇ img(X₊)ᵃ`.
    pub fn extend_antihom(&self, x: &HElement, img: &[HElement; 3]) -> HElement {
        let mut r = HElement::zero();
        for (m, c) in x.terms() {
            let mut acc = self.one();
            for _ in 0..m.c {
                acc = self.mul(&acc, &img[2]);
            }
            for _ in 0..m.b {
                acc = self.mul(&acc, &img[1]);
            }
            for _ in 0..m.a {
                acc = self.mul(&acc, &img[0]);
            }
            r.add_scaled(&acc, c);
        }
        r
    }

    /// Extends generator images as a linear homomorphism.
    pub fn extend_hom(&self, x: &HElement, img: &[HElement; 3]) -> HElement {
        let mut r = HElement::zero();
        for (m, c) in x.terms() {
            let mut acc = self.one();
            for _ in 0..m.a {
                acc = self.mul(&acc, &img[0]);
            }
            for _ in 0..m.b {
                acc = self.mul(&acc, &img[1]);
            }
            for _ in 0..m.c {
                acc = self.mul(&acc, &img[2]);
            }
            r.add_scaled(&acc, c);
        }
        r
    }

    pub fn antipode(&self, x: &HElement) -> HElement {
        let f = self.field();
        let kinv = self.k_pow(-1);
        let img = [
            self.mul(&kinv, &self.xp()).scale(&f.from_int(-1)),
            self.mul(&self.xm(), &self.k()).scale(&f.from_int(-1)),
            kinv,
        ];
        self.extend_antihom(x, &img)
    }

    pub fn antipode_inverse(&self, x: &HElement) -> HElement {
        let f = self.field();
        let kinv = self.k_pow(-1);
        let img = [
            self.mul(&self.xp(), &kinv).scale(&f.from_int(-1)),
            self.mul(&self.k(), &self.xm()).scale(&f.from_int(-1)),
            kinv,
        ];
        self.extend_antihom(x, &img)
    }

    /// Multiplication map `H ⊗ H → H`.
    pub fn multiply_tensor(&self, t: &HTensor) -> HElement {
        let mut r = HElement::zero();
        for ((a, b), c) in t.terms() {
            r.add_scaled(self.mono_product(*a, *b), c);
        }
        r
    }

    /// Coordinates on the PBW basis.
    pub fn to_vector(&self, x: &HElement) -> Vec<CycloNum> {
        let mut v = vec![self.field().zero(); self.dim()];
        for (m, c) in x.terms() {
            v[self.index(m)] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[CycloNum]) -> HElement {
        let mut h = HElement::zero();
        for (i, c) in v.iter().enumerate() {
            h.add_term(self.monomial_at(i), c.clone());
        }
        h
    }

    /// Canonical text form: terms `coef * Xp^a Xm^b K^c` in PBW order.
    pub fn render(&self, x: &HElement) -> String {
        x.to_string()
    }
}

/// Outcome of a family of exact identity checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl LawReport {
    pub fn new(name: impl Into<String>) -> Self {
        LawReport { name: name.into(), checked: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

type Tensor3 = BTreeMap<(PbwMonomial, PbwMonomial, PbwMonomial), CycloNum>;

fn tensor3_add(t: &mut Tensor3, k: (PbwMonomial, PbwMonomial, PbwMonomial), c: CycloNum) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k).or_insert_with(|| c.field().zero());
    *e += &c;
    if e.is_zero() {
        t.remove(&k);
    }
}

impl Uq {
    /// The relations of H evaluated on the generators.
    pub fn check_relations(&self) -> LawReport {
        let f = self.field();
        let n = self.n();
        let mut r = LawReport::new("algebra relations");
        let (xp, xm, k) = (self.xp(), self.xm(), self.k());
        r.record(self.mul(&k, &xp) == self.mul(&xp, &k).scale(&f.q_pow(2)), || "K Xp = q^2 Xp K".into());
        r.record(self.mul(&k, &xm) == self.mul(&xm, &k).scale(&f.q_pow(-2)), || "K Xm = q^-2 Xm K".into());
        r.record(self.commutator(&xp, &xm) == self.cartan(), || "[Xp, Xm] = (K - K^-1)/(q - q^-1)".into());
        r.record(self.pow(&xp, n).is_zero(), || "Xp^N = 0".into());
        r.record(self.pow(&xm, n).is_zero(), || "Xm^N = 0".into());
        r.record(self.pow(&k, n) == self.one(), || "K^N = 1".into());
        r
    }

    pub fn check_coassociativity(&self) -> LawReport {
        let mut r = LawReport::new("coassociativity");
        for m in self.basis() {
            let d = self.coproduct(&HElement::term(m, self.field().one()));
            let mut left = Tensor3::new();
            let mut right = Tensor3::new();
            for ((x, y), c) in d.terms() {
                for ((x1, x2), cx) in self.mono_coproduct(*x).terms() {
                    tensor3_add(&mut left, (*x1, *x2, *y), c * cx);
                }
                for ((y1, y2), cy) in self.mono_coproduct(*y).terms() {
                    tensor3_add(&mut right, (*x, *y1, *y2), c * cy);
                }
            }
            r.record(left == right, || format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ on {m}"));
        }
        r
    }

    pub fn check_counit(&self) -> LawReport {
        let mut r = LawReport::new("counit");
        for m in self.basis() {
            let h = HElement::term(m, self.field().one());
            let d = self.coproduct(&h);
            let mut left = HElement::zero();
            let mut right = HElement::zero();
            for ((x, y), c) in d.terms() {
                if x.a == 0 && x.b == 0 {
                    left.add_term(*y, c.clone());
                }
                if y.a == 0 && y.b == 0 {
                    right.add_term(*x, c.clone());
                }
            }
            r.record(left == h && right == h, || format!("counit law fails on {m}"));
        }
        r
    }

    pub fn check_antipode(&self) -> LawReport {
        let mut r = LawReport::new("antipode");
        for m in self.basis() {
            let h = HElement::term(m, self.field().one());
            let d = self.coproduct(&h);
            let eps = self.scalar(self.counit(&h));
            let left = self.multiply_tensor(&d.map(|x| self.antipode(x), |y| y.clone()));
            let right = self.multiply_tensor(&d.map(|x| x.clone(), |y| self.antipode(y)));
            r.record(left == eps && right == eps, || format!("m(S⊗id)Δ = ηε fails on {m}"));
            let back = self.antipode(&self.antipode_inverse(&h));
            let back2 = self.antipode_inverse(&self.antipode(&h));
            r.record(back == h && back2 == h, || format!("S∘S⁻¹ ≠ id on {m}"));
        }
        r
    }

    /// `S²(h) = K⁻¹ h K` on all PBW monomials.
    pub fn check_square_antipode(&self) -> LawReport {
        let mut r = LawReport::new("S^2 = Ad(K^-1)");
        let kinv = self.k_pow(-1);
        for m in self.basis() {
            let h = HElement::term(m, self.field().one());
            let s2 = self.antipode(&self.antipode(&h));
            let conj = self.mul_all(&[&kinv, &h, &self.k()]);
            r.record(s2 == conj, || format!("S^2 ≠ K^-1 h K on {m}"));
        }
        r
    }

    /// Δ(xy) = Δ(x)Δ(y) on all pairs of generators and basis monomials.
    pub fn check_coproduct_homomorphism(&self) -> LawReport {
        let mut r = LawReport::new("coproduct is multiplicative");
        for g in Generator::ALL {
            let x = self.generator(g);
            for m in self.basis() {
                let y = HElement::term(m, self.field().one());
                let lhs = self.coproduct(&self.mul(&x, &y));
                let rhs = self.tensor_mul(&self.coproduct(&x), &self.coproduct(&y));
                r.record(lhs == rhs, || format!("Δ({} * {m}) mismatch", g.name()));
            }
        }
        r
    }

    pub fn check_hopf_axioms(&self) -> Vec<LawReport> {
        vec![
            self.check_relations(),
            self.check_coassociativity(),
            self.check_counit(),
            self.check_antipode(),
            self.check_square_antipode(),
            self.check_coproduct_homomorphism(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h3() -> Uq {
        Uq::new(3).unwrap()
    }

    #[test]
    fn rejects_even_or_small_n() {
        assert!(Uq::new(4).is_err());
        assert!(Uq::new(1).is_err());
        assert!(Uq::new(5).is_ok());
    }

    #[test]
    fn k_times_xp() {
        let h = h3();
        let lhs = h.mul(&h.k(), &h.xp());
        assert_eq!(lhs, h.mono(1, 0, 1).scale(&h.field().q_pow(2)));
    }

    #[test]
    fn xm_times_xp() {
        let h = h3();
        let lhs = h.mul(&h.xm(), &h.xp());
        let rhs = h.mono(1, 1, 0).sub(&h.cartan());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nilpotency() {
        let h = h3();
        assert!(h.mul(&h.mono(2, 0, 0), &h.xp()).is_zero());
        assert!(h.mul(&h.xm(), &h.mono(0, 2, 0)).is_zero());
    }

    #[test]
    fn coproduct_examples() {
        let h = h3();
        assert_eq!(h.coproduct(&h.k()), HTensor::pure(&h.k(), &h.k()));
        assert_eq!(h.coproduct(&h.one()), h.tensor_one());
        let lhs = h.coproduct(&h.mul(&h.xp(), &h.xm()));
        let rhs = h.tensor_mul(&h.coproduct(&h.xp()), &h.coproduct(&h.xm()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_and_antipode_examples() {
        let h = h3();
        let f = h.field();
        assert_eq!(h.counit(&h.k()), f.one());
        assert!(h.counit(&h.xp()).is_zero());
        assert_eq!(h.mul(&h.antipode(&h.k()), &h.k()), h.one());
        assert_eq!(h.antipode(&h.xp()), h.mul(&h.k_pow(-1), &h.xp()).neg());
    }

    #[test]
    fn hopf_axioms_n3() {
        let h = h3();
        for r in h.check_hopf_axioms() {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn vector_round_trip() {
        let h = h3();
        let x = h.xp().add(&h.mono(2, 1, 2).scale(&h.field().q()));
        assert_eq!(h.from_vector(&h.to_vector(&x)), x);
        for i in 0..h.dim() {
            assert_eq!(h.index(&h.monomial_at(i)), i);
        }
    }
}

//! The reduced function algebra F of SL_q(2), dual to H.
//!
//! F is generated by the entries of `T = [[a, b], [c, d]]` with `ab = qba`, `ac = qca`,
//! `bc = cb`, `bd = qdb`, `cd = qdc`, `ad - da = (q - q⁻¹)bc`, `ad - qbc = 1`, reduced by
//! `a^N = d^N = 1`, `b^N = c^N = 0`. Since `a` is invertible, `d = a⁻¹(1 + q bc)` and the
//! monomials `aⁱ bʲ cᵏ` form a basis of dimension N³.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloNum, Field};
use crate::hopf::{HElement, LawReport, PbwMonomial, Uq};
use crate::star::{StarKind, StarStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FMonomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl FMonomial {
    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        FMonomial { i, j, k }
    }
}

impl fmt::Display for FMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{} c^{}", self.i, self.j, self.k)
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct FElement {
    terms: BTreeMap<FMonomial, CycloNum>,
}

impl FElement {
    pub fn zero() -> Self {
        FElement { terms: BTreeMap::new() }
    }

    pub fn term(m: FMonomial, c: CycloNum) -> Self {
        let mut f = FElement::zero();
        f.add_term(m, c);
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FMonomial, &CycloNum)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: FMonomial, c: CycloNum) {
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

    pub fn add(&self, o: &FElement) -> FElement {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &FElement) -> FElement {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, -c);
        }
        r
    }

    pub fn scale(&self, s: &CycloNum) -> FElement {
        let mut r = FElement::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, c * s);
        }
        r
    }

    /// Is `self = λ·o` for some scalar `λ` (including `λ = 0`)?
    pub fn proportional_to(&self, o: &FElement) -> bool {
        let Some((m, c)) = o.terms.iter().next() else { return self.is_zero() };
        let lambda = match self.terms.get(m) {
            Some(x) => x.div(c).expect("nonzero"),
            None => return self.is_zero(),
        };
        *self == o.scale(&lambda)
    }
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c}) * {m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type FTensor = BTreeMap<(FMonomial, FMonomial), CycloNum>;

fn ftensor_add(t: &mut FTensor, k: (FMonomial, FMonomial), c: CycloNum) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k).or_insert_with(|| c.field().zero());
    *e += &c;
    if e.is_zero() {
        t.remove(&k);
    }
}

/// One of the four matrix entries of `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FGen {
    A,
    B,
    C,
    D,
}

impl FGen {
    pub const ALL: [FGen; 4] = [FGen::A, FGen::B, FGen::C, FGen::D];

    pub fn name(self) -> &'static str {
        match self {
            FGen::A => "a",
            FGen::B => "b",
            FGen::C => "c",
            FGen::D => "d",
        }
    }
}

struct FunInner {
    h: Uq,
    /// Values of each basis monomial of F on the PBW basis of H.
    functionals: OnceLock<Vec<Vec<CycloNum>>>,
}

#[derive(Clone)]
pub struct FunAlgebra(Arc<FunInner>);

impl fmt::Debug for FunAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fun(N={})", self.n())
    }
}

impl FunAlgebra {
    pub fn new(h: &Uq) -> FunAlgebra {
        FunAlgebra(Arc::new(FunInner { h: h.clone(), functionals: OnceLock::new() }))
    }

    pub fn uq(&self) -> &Uq {
        &self.0.h
    }

    pub fn n(&self) -> u32 {
        self.0.h.n()
    }

    pub fn field(&self) -> &Field {
        self.0.h.field()
    }

    pub fn basis(&self) -> Vec<FMonomial> {
        let n = self.n();
        let mut v = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    v.push(FMonomial::new(i, j, k));
                }
            }
        }
        v
    }

    pub fn index(&self, m: &FMonomial) -> usize {
        let n = self.n() as usize;
        (m.i as usize * n + m.j as usize) * n + m.k as usize
    }

    pub fn mono(&self, i: u32, j: u32, k: u32) -> FElement {
        FElement::term(FMonomial::new(i, j, k), self.field().one())
    }

    pub fn one(&self) -> FElement {
        self.mono(0, 0, 0)
    }

    pub fn gen(&self, g: FGen) -> FElement {
        match g {
            FGen::A => self.mono(1, 0, 0),
            FGen::B => self.mono(0, 1, 0),
            FGen::C => self.mono(0, 0, 1),
            FGen::D => {
                // d = a^{N-1} (1 + q bc)
                let n = self.n();
                self.mono(n - 1, 0, 0).add(&self.mono(n - 1, 1, 1).scale(&self.field().q()))
            }
        }
    }

    pub fn scalar(&self, c: CycloNum) -> FElement {
        FElement::term(FMonomial::new(0, 0, 0), c)
    }

    fn mono_mul(&self, x: FMonomial, y: FMonomial) -> Option<(FMonomial, i64)> {
        let n = self.n();
        if x.j + y.j >= n || x.k + y.k >= n {
            return None;
        }
        // moving a^{i'} left past b^j c^k costs q^{-i'(j+k)}
        let e = -(y.i as i64) * (x.j + x.k) as i64;
        Some((FMonomial::new((x.i + y.i) % n, x.j + y.j, x.k + y.k), e))
    }

    pub fn mul(&self, x: &FElement, y: &FElement) -> FElement {
        let f = self.field();
        let mut r = FElement::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                if let Some((m, e)) = self.mono_mul(*m1, *m2) {
                    r.add_term(m, &(c1 * c2) * &f.q_pow(e));
                }
            }
        }
        r
    }

    pub fn mul_all(&self, xs: &[&FElement]) -> FElement {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn pow(&self, x: &FElement, e: u32) -> FElement {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    fn tensor_mul(&self, x: &FTensor, y: &FTensor) -> FTensor {
        let f = self.field();
        let mut r = FTensor::new();
        for ((a1, b1), c1) in x {
            for ((a2, b2), c2) in y {
                let (Some((a, ea)), Some((b, eb))) = (self.mono_mul(*a1, *a2), self.mono_mul(*b1, *b2)) else {
                    continue;
                };
                ftensor_add(&mut r, (a, b), &(c1 * c2) * &f.q_pow(ea + eb));
            }
        }
        r
    }

    fn pure(&self, x: &FElement, y: &FElement) -> FTensor {
        let mut t = FTensor::new();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                ftensor_add(&mut t, (*m1, *m2), c1 * c2);
            }
        }
        t
    }

    /// Matrix coproduct `ΔT_ij = Σ_k T_ik ⊗ T_kj`.
    pub fn coproduct_gen(&self, g: FGen) -> FTensor {
        let (a, b, c, d) = (self.gen(FGen::A), self.gen(FGen::B), self.gen(FGen::C), self.gen(FGen::D));
        let sum = |x: FTensor, y: FTensor| {
            let mut r = x;
            for (k, v) in y {
                ftensor_add(&mut r, k, v);
            }
            r
        };
        match g {
            FGen::A => sum(self.pure(&a, &a), self.pure(&b, &c)),
            FGen::B => sum(self.pure(&a, &b), self.pure(&b, &d)),
            FGen::C => sum(self.pure(&c, &a), self.pure(&d, &c)),
            FGen::D => sum(self.pure(&c, &b), self.pure(&d, &d)),
        }
    }

    pub fn coproduct(&self, x: &FElement) -> FTensor {
        let da = self.coproduct_gen(FGen::A);
        let db = self.coproduct_gen(FGen::B);
        let dc = self.coproduct_gen(FGen::C);
        let mut r = FTensor::new();
        for (m, c) in x.terms() {
            let mut acc = self.pure(&self.one(), &self.one());
            for _ in 0..m.i {
                acc = self.tensor_mul(&acc, &da);
            }
            for _ in 0..m.j {
                acc = self.tensor_mul(&acc, &db);
            }
            for _ in 0..m.k {
                acc = self.tensor_mul(&acc, &dc);
            }
            for (k, v) in acc {
                ftensor_add(&mut r, k, &v * c);
            }
        }
        r
    }

    pub fn counit(&self, x: &FElement) -> CycloNum {
        let mut r = self.field().zero();
        for (m, c) in x.terms() {
            if m.j == 0 && m.k == 0 {
                r += c;
            }
        }
        r
    }

    fn extend_antihom(&self, x: &FElement, img: &[FElement; 3], conj: bool) -> FElement {
        let mut r = FElement::zero();
        for (m, c) in x.terms() {
            let mut acc = self.one();
            for _ in 0..m.k {
                acc = self.mul(&acc, &img[2]);
            }
            for _ in 0..m.j {
                acc = self.mul(&acc, &img[1]);
            }
            for _ in 0..m.i {
                acc = self.mul(&acc, &img[0]);
            }
            let c = if conj { c.conj() } else { c.clone() };
            r = r.add(&acc.scale(&c));
        }
        r
    }

    /// Antipode from the inverse matrix `S(T) = [[d, -q⁻¹b], [-qc, a]]`.
    pub fn antipode(&self, x: &FElement) -> FElement {
        let f = self.field();
        let img = [
            self.gen(FGen::D),
            self.gen(FGen::B).scale(&-f.q_pow(-1)),
            self.gen(FGen::C).scale(&-f.q()),
        ];
        self.extend_antihom(x, &img, false)
    }

    /// Stars on F: all generators self-adjoint for the Hopf kind; `a* = a`, `b* = ±c`,
    /// `c* = ±b`, `d* = d` for the twisted kinds.
    pub fn star(&self, kind: StarKind, x: &FElement) -> FElement {
        let s = self.field().from_int(kind.branch());
        let img = match kind {
            StarKind::HopfSL2R => [self.gen(FGen::A), self.gen(FGen::B), self.gen(FGen::C)],
            _ => [self.gen(FGen::A), self.gen(FGen::C).scale(&s), self.gen(FGen::B).scale(&s)],
        };
        self.extend_antihom(x, &img, true)
    }

    fn functionals(&self) -> &Vec<Vec<CycloNum>> {
        self.0.functionals.get_or_init(|| {
            let h = &self.0.h;
            let f = self.field();
            let d = h.dim();
            // fundamental representation on the PBW basis
            let letter = |row: usize, col: usize| -> Vec<CycloNum> {
                h.basis()
                    .iter()
                    .map(|m| {
                        // E12^a E21^b diag(q, q^-1)^c
                        let mut mat = [[f.one(), f.zero()], [f.zero(), f.one()]];
                        let e12 = [[f.zero(), f.one()], [f.zero(), f.zero()]];
                        let e21 = [[f.zero(), f.zero()], [f.one(), f.zero()]];
                        let kk = [[f.q(), f.zero()], [f.zero(), f.q_pow(-1)]];
                        let mm = |x: &[[CycloNum; 2]; 2], y: &[[CycloNum; 2]; 2]| {
                            let mut z = [[f.zero(), f.zero()], [f.zero(), f.zero()]];
                            for i in 0..2 {
                                for j in 0..2 {
                                    z[i][j] = &(&x[i][0] * &y[0][j]) + &(&x[i][1] * &y[1][j]);
                                }
                            }
                            z
                        };
                        for _ in 0..m.a {
                            mat = mm(&mat, &e12);
                        }
                        for _ in 0..m.b {
                            mat = mm(&mat, &e21);
                        }
                        for _ in 0..m.c {
                            mat = mm(&mat, &kk);
                        }
                        mat[row][col].clone()
                    })
                    .collect()
            };
            let fa = letter(0, 0);
            let fb = letter(0, 1);
            let fc = letter(1, 0);
            let counit: Vec<CycloNum> = h.basis().iter().map(|m| h.counit(&h.mono(m.a, m.b, m.c))).collect();
            let conv = |x: &[CycloNum], y: &[CycloNum]| -> Vec<CycloNum> {
                h.basis()
                    .iter()
                    .map(|m| {
                        let mut acc = f.zero();
                        for ((m1, m2), c) in h.coproduct(&h.mono(m.a, m.b, m.c)).terms() {
                            let (u, v) = (&x[h.index(m1)], &y[h.index(m2)]);
                            if !u.is_zero() && !v.is_zero() {
                                acc += &(&(c * u) * v);
                            }
                        }
                        acc
                    })
                    .collect()
            };
            let n = self.n();
            let mut out = vec![Vec::new(); d];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let mut acc = counit.clone();
                        for _ in 0..k {
                            acc = conv(&fc, &acc);
                        }
                        for _ in 0..j {
                            acc = conv(&fb, &acc);
                        }
                        for _ in 0..i {
                            acc = conv(&fa, &acc);
                        }
                        out[self.index(&FMonomial::new(i, j, k))] = acc;
                    }
                }
            }
            out
        })
    }

    /// Duality pairing, fixed by `⟨T_ij, h⟩ = ρ₂(h)_ij` and `⟨ff', h⟩ = ⟨f⊗f', Δh⟩`.
    pub fn pairing(&self, x: &FElement, y: &HElement) -> CycloNum {
        let table = self.functionals();
        let h = &self.0.h;
        let mut acc = self.field().zero();
        for (fm, fc) in x.terms() {
            let row = &table[self.index(fm)];
            for (hm, hc) in y.terms() {
                let v = &row[h.index(hm)];
                if !v.is_zero() {
                    acc += &(&(fc * hc) * v);
                }
            }
        }
        acc
    }

    pub fn pairing_mono(&self, x: &FMonomial, m: &PbwMonomial) -> CycloNum {
        self.functionals()[self.index(x)][self.0.h.index(m)].clone()
    }

    /// The functional `⟨x, ·⟩` as its values on the PBW basis.
    pub fn functional(&self, x: &FElement) -> Vec<CycloNum> {
        let h = &self.0.h;
        h.basis().iter().map(|m| self.pairing(x, &h.mono(m.a, m.b, m.c))).collect()
    }

    /// `λ_L = (1 + a + … + a^{N-1}) b^{N-1} c^{N-1}`.
    pub fn lambda_left(&self) -> FElement {
        let n = self.n();
        let mut s = FElement::zero();
        for i in 0..n {
            s = s.add(&self.mono(i, 0, 0));
        }
        self.mul(&s, &self.mono(0, n - 1, n - 1))
    }

    /// `λ_R = b^{N-1} c^{N-1} (1 + a + … + a^{N-1})`.
    pub fn lambda_right(&self) -> FElement {
        let n = self.n();
        let mut s = FElement::zero();
        for i in 0..n {
            s = s.add(&self.mono(i, 0, 0));
        }
        self.mul(&self.mono(0, n - 1, n - 1), &s)
    }
}

/// 2×2 matrices with entries in F.
pub type FMatrix2 = [[FElement; 2]; 2];

impl FunAlgebra {
    pub fn t_matrix(&self) -> FMatrix2 {
        [[self.gen(FGen::A), self.gen(FGen::B)], [self.gen(FGen::C), self.gen(FGen::D)]]
    }

    pub fn mat_mul(&self, x: &FMatrix2, y: &FMatrix2) -> FMatrix2 {
        let e = |i: usize, j: usize| self.mul(&x[i][0], &y[0][j]).add(&self.mul(&x[i][1], &y[1][j]));
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }

    /// Transpose combined with the star on each entry.
    pub fn mat_dagger(&self, kind: StarKind, x: &FMatrix2) -> FMatrix2 {
        let s = |i: usize, j: usize| self.star(kind, &x[j][i]);
        [[s(0, 0), s(0, 1)], [s(1, 0), s(1, 1)]]
    }

    pub fn mat_scalar(&self, m: [[CycloNum; 2]; 2]) -> FMatrix2 {
        let [[a, b], [c, d]] = m;
        [[self.scalar(a), self.scalar(b)], [self.scalar(c), self.scalar(d)]]
    }

    /// The quantum symplectic form `[[0, q^{-1/2}], [-q^{1/2}, 0]]`.
    pub fn sigma(&self) -> FMatrix2 {
        let f = self.field();
        let r = f.sqrt_q().expect("odd N");
        let ri = r.inv().expect("nonzero");
        self.mat_scalar([[f.zero(), ri], [-r, f.zero()]])
    }

    /// The twisted metric `diag(1, ±1)`.
    pub fn sigma_twisted(&self, kind: StarKind) -> FMatrix2 {
        let f = self.field();
        self.mat_scalar([[f.one(), f.zero()], [f.zero(), f.from_int(kind.branch())]])
    }

    /// `T†ΣT = Σ` for the Hopf star, `(ST)†Σ±T = Σ±` for the twisted stars.
    pub fn quantum_metric_check(&self, kind: StarKind) -> LawReport {
        self.quantum_metric_check_with(kind, &self.default_metric(kind))
    }

    pub fn default_metric(&self, kind: StarKind) -> FMatrix2 {
        match kind {
            StarKind::HopfSL2R => self.sigma(),
            _ => self.sigma_twisted(kind),
        }
    }

    pub fn quantum_metric_check_with(&self, kind: StarKind, sigma: &FMatrix2) -> LawReport {
        let t = self.t_matrix();
        let (name, left) = match kind {
            StarKind::HopfSL2R => ("T†ΣT = Σ", t.clone()),
            _ => {
                let st = [
                    [self.antipode(&t[0][0]), self.antipode(&t[0][1])],
                    [self.antipode(&t[1][0]), self.antipode(&t[1][1])],
                ];
                ("(ST)†ΣT = Σ", st)
            }
        };
        let lhs = self.mat_mul(&self.mat_mul(&self.mat_dagger(kind, &left), sigma), &t);
        let mut r = LawReport::new(name);
        for i in 0..2 {
            for j in 0..2 {
                r.record(lhs[i][j] == sigma[i][j], || format!("entry ({i},{j}) is {}", lhs[i][j]));
            }
        }
        r
    }

    pub fn check_hopf_axioms(&self) -> Vec<LawReport> {
        let f = self.field();
        let mut rel = LawReport::new("F relations");
        let (a, b, c, d) = (self.gen(FGen::A), self.gen(FGen::B), self.gen(FGen::C), self.gen(FGen::D));
        let q = f.q();
        let m = |x: &FElement, y: &FElement| self.mul(x, y);
        rel.record(m(&a, &b) == m(&b, &a).scale(&q), || "ab = qba".into());
        rel.record(m(&a, &c) == m(&c, &a).scale(&q), || "ac = qca".into());
        rel.record(m(&b, &c) == m(&c, &b), || "bc = cb".into());
        rel.record(m(&b, &d) == m(&d, &b).scale(&q), || "bd = qdb".into());
        rel.record(m(&c, &d) == m(&d, &c).scale(&q), || "cd = qdc".into());
        rel.record(m(&a, &d).sub(&m(&d, &a)) == m(&b, &c).scale(&f.theta()), || "ad - da = (q - q^-1) bc".into());
        rel.record(m(&a, &d).sub(&m(&b, &c).scale(&q)) == self.one(), || "ad - qbc = 1".into());
        let n = self.n();
        rel.record(self.pow(&a, n) == self.one() && self.pow(&d, n) == self.one(), || "a^N = d^N = 1".into());
        rel.record(self.pow(&b, n).is_zero() && self.pow(&c, n).is_zero(), || "b^N = c^N = 0".into());

        let mut coassoc = LawReport::new("F coassociativity");
        let mut counit = LawReport::new("F counit");
        let mut anti = LawReport::new("F antipode");
        for mono in self.basis() {
            let x = FElement::term(mono, f.one());
            let dx = self.coproduct(&x);
            let mut left: BTreeMap<(FMonomial, FMonomial, FMonomial), CycloNum> = BTreeMap::new();
            let mut right = left.clone();
            let mut l_eps = FElement::zero();
            let mut r_eps = FElement::zero();
            let mut l_s = FElement::zero();
            let mut r_s = FElement::zero();
            for ((m1, m2), cv) in &dx {
                let one = f.one();
                for ((u, v), cu) in self.coproduct(&FElement::term(*m1, one.clone())) {
                    let e = left.entry((u, v, *m2)).or_insert_with(|| f.zero());
                    *e += &(cv * &cu);
                }
                for ((u, v), cu) in self.coproduct(&FElement::term(*m2, one.clone())) {
                    let e = right.entry((*m1, u, v)).or_insert_with(|| f.zero());
                    *e += &(cv * &cu);
                }
                let x1 = FElement::term(*m1, one.clone());
                let x2 = FElement::term(*m2, one.clone());
                l_eps = l_eps.add(&x2.scale(&(cv * &self.counit(&x1))));
                r_eps = r_eps.add(&x1.scale(&(cv * &self.counit(&x2))));
                l_s = l_s.add(&self.mul(&self.antipode(&x1), &x2).scale(cv));
                r_s = r_s.add(&self.mul(&x1, &self.antipode(&x2)).scale(cv));
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            coassoc.record(left == right, || format!("on {mono}"));
            counit.record(l_eps == x && r_eps == x, || format!("on {mono}"));
            let eps = self.scalar(self.counit(&x));
            anti.record(l_s == eps && r_s == eps, || format!("on {mono}"));
        }
        vec![rel, coassoc, counit, anti]
    }

    /// Duality laws linking F and H, checked on generators of F against the PBW basis.
    pub fn check_duality(&self) -> Vec<LawReport> {
        let h = self.uq().clone();
        let f = self.field();
        let mut unit = LawReport::new("⟨1, h⟩ = ε(h)");
        let mut prod = LawReport::new("⟨Δf, h⊗h'⟩ = ⟨f, hh'⟩");
        let mut anti = LawReport::new("⟨Sf, h⟩ = ⟨f, Sh⟩");
        let mut cop = LawReport::new("⟨f, 1⟩ = ε(f)");
        for m in h.basis() {
            let x = h.mono(m.a, m.b, m.c);
            unit.record(self.pairing(&self.one(), &x) == h.counit(&x), || format!("on {m}"));
        }
        for fm in self.basis() {
            let fx = FElement::term(fm, f.one());
            cop.record(self.pairing(&fx, &h.one()) == self.counit(&fx), || format!("on {fm}"));
        }
        for g in FGen::ALL {
            let fx = self.gen(g);
            let dfx = self.coproduct(&fx);
            for m in h.basis() {
                let x = h.mono(m.a, m.b, m.c);
                anti.record(
                    self.pairing(&self.antipode(&fx), &x) == self.pairing(&fx, &h.antipode(&x)),
                    || format!("({}, {m})", g.name()),
                );
                for g2 in crate::hopf::Generator::ALL {
                    let y = h.generator(g2);
                    let lhs = self.pairing(&fx, &h.mul(&x, &y));
                    let mut rhs = f.zero();
                    for ((m1, m2), c) in &dfx {
                        rhs += &(&(c * &self.pairing_mono(m1, &m)) * &self.pairing(&FElement::term(*m2, f.one()), &y));
                    }
                    prod.record(lhs == rhs, || format!("({}, {m}, {})", g.name(), g2.name()));
                }
            }
        }
        vec![unit, cop, prod, anti]
    }

    /// `⟨f*, h⟩ = conj⟨f, (Sh)*⟩` (Hopf) or `⟨f*, h⟩ = conj⟨f, h*⟩` (twisted).
    pub fn check_star_duality(&self, kind: StarKind) -> LawReport {
        let h = self.uq();
        let s = StarStructure::builtin(h, kind);
        let name = if kind.is_twisted() { "⟨f*, h⟩ = conj⟨f, h*⟩" } else { "⟨f*, h⟩ = conj⟨f, (Sh)*⟩" };
        let mut r = LawReport::new(name);
        for g in FGen::ALL {
            let fx = self.gen(g);
            let fs = self.star(kind, &fx);
            for m in h.basis() {
                let x = h.mono(m.a, m.b, m.c);
                let inner = if kind.is_twisted() { s.apply(h, &x) } else { s.apply(h, &h.antipode(&x)) };
                r.record(self.pairing(&fs, &x) == self.pairing(&fx, &inner).conj(), || {
                    format!("({}, {m})", g.name())
                });
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fun3() -> FunAlgebra {
        FunAlgebra::new(&Uq::new(3).unwrap())
    }

    #[test]
    fn relations_and_hopf_axioms() {
        let fa = fun3();
        for r in fa.check_hopf_axioms() {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn pairing_examples() {
        let fa = fun3();
        let h = fa.uq();
        let q = fa.field().q();
        assert_eq!(fa.pairing(&fa.gen(FGen::A), &h.k()), q);
        assert_eq!(fa.pairing(&fa.gen(FGen::B), &h.xp()), fa.field().one());
        assert!(fa.pairing(&fa.gen(FGen::B), &h.xm()).is_zero());
        assert!(fa.pairing(&fa.gen(FGen::B), &h.k()).is_zero());
        assert_eq!(fa.pairing(&fa.gen(FGen::D), &h.k()), q.inv().unwrap());
    }

    #[test]
    fn duality_laws() {
        let fa = fun3();
        for r in fa.check_duality() {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn pairing_is_nondegenerate() {
        let fa = fun3();
        let f = fa.field();
        let d = fa.uq().dim();
        let m = crate::linalg::Matrix::from_fn(f, d, d, |i, j| {
            fa.pairing_mono(&fa.basis()[i], &fa.uq().monomial_at(j))
        });
        assert_eq!(m.rank(), d);
    }

    #[test]
    fn star_examples() {
        let fa = fun3();
        let f = fa.field();
        assert_eq!(fa.star(StarKind::HopfSL2R, &fa.gen(FGen::A)), fa.gen(FGen::A));
        assert_eq!(fa.star(StarKind::TwistedPlus, &fa.gen(FGen::B)), fa.gen(FGen::C));
        assert_eq!(fa.star(StarKind::HopfSL2R, &fa.scalar(f.q())), fa.scalar(f.q_pow(-1)));
        for kind in StarKind::ALL {
            assert_eq!(fa.star(kind, &fa.gen(FGen::D)), fa.gen(FGen::D), "{kind}");
        }
    }

    #[test]
    fn star_duality_all_kinds() {
        let fa = fun3();
        for kind in StarKind::ALL {
            let r = fa.check_star_duality(kind);
            assert!(r.passed(), "{kind}: {:?}", &r.failures[..r.failures.len().min(5)]);
        }
    }

    #[test]
    fn quantum_metric() {
        let fa = fun3();
        for kind in StarKind::ALL {
            let r = fa.quantum_metric_check(kind);
            assert!(r.passed(), "{kind}: {:?}", r.failures);
        }
        let f = fa.field();
        let scaled = fa.sigma().map(|row| row.map(|e| e.scale(&f.from_int(7))));
        assert!(fa.quantum_metric_check_with(StarKind::HopfSL2R, &scaled).passed());
    }

    #[test]
    fn lambda_invariance() {
        let fa = fun3();
        let (ll, lr) = (fa.lambda_left(), fa.lambda_right());
        for g in FGen::ALL {
            let x = fa.gen(g);
            let eps = fa.counit(&x);
            assert_eq!(fa.mul(&x, &ll), ll.scale(&eps), "f λ_L for {}", g.name());
            assert_eq!(fa.mul(&lr, &x), lr.scale(&eps), "λ_R f for {}", g.name());
        }
        assert!(!ll.proportional_to(&lr));
        assert!(fa.pow(&fa.gen(FGen::B), 3).is_zero());
    }
}

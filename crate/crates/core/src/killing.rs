//! Adjoint action, quantum trace, Killing forms and invariant integrals on H.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloNum, EmbeddingChoice};
use crate::error::Result;
use crate::forms::{signature, Signature};
use crate::hopf::{HElement, LawReport, PbwMonomial, Uq};
use crate::linalg::{Matrix, Subspace, SparseEliminator, Vector};
use crate::rep::{regular_trace_of, Structure};
use crate::star::{transpose_antiautomorphism, StarKind, StarStructure};

/// `ad_x(y) = x₁ y S(x₂)`.
pub fn ad(h: &Uq, x: &HElement, y: &HElement) -> HElement {
    let mut out = HElement::zero();
    for ((m1, m2), c) in h.coproduct(x).terms() {
        let t = h.mul_all(&[&h.mono(m1.a, m1.b, m1.c), y, &h.antipode(&h.mono(m2.a, m2.b, m2.c))]);
        out.add_scaled(&t, c);
    }
    out
}

/// The nine adjoint identities on generators.
pub fn check_adjoint_table(h: &Uq) -> LawReport {
    let f = h.field();
    let (xp, xm, k) = (h.xp(), h.xm(), h.k());
    let one = h.one();
    let q2 = f.q_pow(2);
    let qm2 = f.q_pow(-2);
    let theta_inv = f.theta().inv().expect("nonzero");
    let q3_q_inv = (&f.q_pow(3) - &f.q()).inv().expect("nonzero");
    let rows: Vec<(&str, HElement, HElement)> = vec![
        ("ad_K(K) = K", ad(h, &k, &k), k.clone()),
        ("ad_K(Xm) = q^-2 Xm", ad(h, &k, &xm), xm.scale(&qm2)),
        ("ad_K(Xp) = q^2 Xp", ad(h, &k, &xp), xp.scale(&q2)),
        ("ad_Xp(K) = (1 - q^2) Xp K", ad(h, &xp, &k), h.mul(&xp, &k).scale(&(&f.one() - &q2))),
        (
            "ad_Xp(Xm) = (1 - q^-2) Xp Xm + (K - K^-1)/(q^3 - q)",
            ad(h, &xp, &xm),
            h.mul(&xp, &xm).scale(&(&f.one() - &qm2)).add(&k.sub(&h.k_pow(-1)).scale(&q3_q_inv)),
        ),
        ("ad_Xm(K) = (1 - q^-2) Xm K^2", ad(h, &xm, &k), h.mul(&xm, &h.k_pow(2)).scale(&(&f.one() - &qm2))),
        ("ad_Xm(Xm) = 0", ad(h, &xm, &xm), HElement::zero()),
        ("ad_Xm(Xp) = (1 - K^2)/(q - q^-1)", ad(h, &xm, &xp), one.sub(&h.k_pow(2)).scale(&theta_inv)),
        ("ad_Xp(Xp) = (1 - q^2) Xp^2", ad(h, &xp, &xp), h.pow(&xp, 2).scale(&(&f.one() - &q2))),
    ];
    let mut r = LawReport::new("adjoint table");
    for (name, lhs, rhs) in rows {
        r.record(lhs == rhs, || format!("{name}: got {lhs}"));
    }
    r
}

/// Quantum trace `Tr(L_{K⁻¹ x})` in the regular representation.
pub fn quantum_trace_regular(st: &Structure, x: &HElement) -> CycloNum {
    let h = &st.h;
    regular_trace_of(h, &st.trace, &h.mul(&h.k_pow(-1), x))
}

/// The Killing form `(x, y)_u = Tr_q(xy)`.
pub fn killing(st: &Structure, x: &HElement, y: &HElement) -> CycloNum {
    quantum_trace_regular(st, &st.h.mul(x, y))
}

/// A random element with a few monomials and small coefficients in Z[q].
pub fn random_element(h: &Uq, rng: &mut ChaCha8Rng) -> HElement {
    let f = h.field();
    let n = h.n();
    let mut x = HElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = PbwMonomial::new(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let c = &f.from_int(rng.gen_range(-3..=3)) + &(&f.q() * &f.from_int(rng.gen_range(-2..=2)));
        x.add_term(m, c);
    }
    x
}

/// Killing symmetry, ad-invariance and the trace lemma on random instances.
pub fn check_killing_identities(st: &Structure, samples: usize, seed: u64) -> Vec<LawReport> {
    let h = &st.h;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sym = LawReport::new("(Y, X)_u = (X, S²Y)_u");
    let mut inv = LawReport::new("(ad_Z₁ X, ad_Z₂ Y)_u = ε(Z)(X, Y)_u");
    let mut lemma = LawReport::new("Tr_q(ad_X Y) = ε(X) Tr_q(Y)");
    let mut left = LawReport::new("ad_{XY} = ad_X ad_Y");
    let mut comp = LawReport::new("ad_X(YZ) = ad_X₁(Y) ad_X₂(Z)");
    let gens = [h.xp(), h.xm(), h.k()];
    for i in 0..samples {
        let x = random_element(h, &mut rng);
        let y = random_element(h, &mut rng);
        let z = if i < gens.len() { gens[i].clone() } else { random_element(h, &mut rng) };
        sym.record(killing(st, &y, &x) == killing(st, &x, &h.antipode(&h.antipode(&y))), || format!("X = {x}"));
        let mut lhs = h.field().zero();
        for ((m1, m2), c) in h.coproduct(&z).terms() {
            let a = ad(h, &h.mono(m1.a, m1.b, m1.c), &x);
            let b = ad(h, &h.mono(m2.a, m2.b, m2.c), &y);
            lhs += &(c * &killing(st, &a, &b));
        }
        inv.record(lhs == &h.counit(&z) * &killing(st, &x, &y), || format!("Z = {z}"));
        lemma.record(
            quantum_trace_regular(st, &ad(h, &x, &y)) == &h.counit(&x) * &quantum_trace_regular(st, &y),
            || format!("X = {x}"),
        );
        left.record(ad(h, &h.mul(&x, &y), &z) == ad(h, &x, &ad(h, &y, &z)), || format!("X = {x}"));
        let mut rhs = HElement::zero();
        for ((m1, m2), c) in h.coproduct(&x).terms() {
            let t = h.mul(&ad(h, &h.mono(m1.a, m1.b, m1.c), &y), &ad(h, &h.mono(m2.a, m2.b, m2.c), &z));
            rhs.add_scaled(&t, c);
        }
        comp.record(ad(h, &x, &h.mul(&y, &z)) == rhs, || format!("X = {x}"));
    }
    vec![sym, inv, lemma, left, comp]
}

fn basis_elements(h: &Uq) -> Vec<HElement> {
    h.basis().iter().map(|m| h.mono(m.a, m.b, m.c)).collect()
}

/// Gram matrix `G_ij = Tr_q(b_i* b_j)` over the PBW basis, multiplied by the conjugate of its
/// first nonzero diagonal entry so that a hermitian form up to phase becomes hermitian.
pub fn hermitianized_killing(st: &Structure, kind: StarKind) -> Matrix {
    let h = &st.h;
    let s = StarStructure::builtin(h, kind);
    let b = basis_elements(h);
    let starred: Vec<HElement> = b.iter().map(|x| s.apply(h, x)).collect();
    let g = Matrix::from_fn(h.field(), b.len(), b.len(), |i, j| killing(st, &starred[i], &b[j]));
    let phase = (0..b.len()).map(|i| g[(i, i)].clone()).find(|d| !d.is_zero());
    match phase {
        Some(d) => g.scale(&d.conj()),
        None => g,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramAnalysis {
    pub star: String,
    pub dim: usize,
    pub hermitian: bool,
    pub symmetric: bool,
    pub rank: usize,
    pub signature: Option<Signature>,
    /// First entry `(i, j)` with `G_ij ≠ conj(G_ji)`.
    pub hermiticity_witness: Option<(usize, usize)>,
    pub kernel_dim: usize,
}

pub fn analyze(g: &Matrix, kind: StarKind, e: &EmbeddingChoice) -> Result<GramAnalysis> {
    let hermitian = g.is_hermitian();
    let signature = if hermitian { Some(signature(g, e)?) } else { None };
    let rank = g.rank();
    Ok(GramAnalysis {
        star: kind.cli_name().into(),
        dim: g.rows(),
        hermitian,
        symmetric: g.is_symmetric(),
        rank,
        signature,
        hermiticity_witness: g.hermiticity_witness(),
        kernel_dim: g.rows() - rank,
    })
}

/// `{y : G y = 0}`, the radical of the form `(x, y) = x† G y`.
pub fn form_kernel(g: &Matrix) -> Subspace {
    Subspace::span(g.field(), g.rows(), &g.nullspace())
}

/// Invariances of the hermitianized Killing form for the Hopf star:
/// `(ad_Z X, Y) = (X, ad_{Z*} Y)`, `Σ (ad_{(SZ₁)*} X, ad_{Z₂} Y) = ε(Z)(X, Y)` and
/// `(XY, Z) = (Y, X* Z)`.
pub fn check_hermitian_killing_invariances(st: &Structure, samples: usize, seed: u64) -> Vec<LawReport> {
    let h = &st.h;
    let s = StarStructure::builtin(h, StarKind::HopfSL2R);
    let form = |x: &HElement, y: &HElement| killing(st, &s.apply(h, x), y);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = LawReport::new("(ad_Z X, Y) = (X, ad_Z* Y)");
    let mut inv = LawReport::new("(ad_(SZ₁)* X, ad_Z₂ Y) = ε(Z)(X, Y)");
    let mut mult = LawReport::new("(XY, Z) = (Y, X* Z)");
    for _ in 0..samples {
        let x = random_element(h, &mut rng);
        let y = random_element(h, &mut rng);
        let z = random_element(h, &mut rng);
        adj.record(form(&ad(h, &z, &x), &y) == form(&x, &ad(h, &s.apply(h, &z), &y)), || format!("Z = {z}"));
        let mut lhs = h.field().zero();
        for ((m1, m2), c) in h.coproduct(&z).terms() {
            let a = ad(h, &s.apply(h, &h.antipode(&h.mono(m1.a, m1.b, m1.c))), &x);
            let b = ad(h, &h.mono(m2.a, m2.b, m2.c), &y);
            // both the star and the first slot are antilinear, so c enters unconjugated
            lhs += &(c * &form(&a, &b));
        }
        inv.record(lhs == &h.counit(&z) * &form(&x, &y), || format!("Z = {z}"));
        mult.record(form(&h.mul(&x, &y), &z) == form(&y, &h.mul(&s.apply(h, &x), &z)), || format!("X = {x}"));
    }
    vec![adj, inv, mult]
}

/// A linear functional on H by its values on the PBW basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub values: Vector,
}

impl Functional {
    pub fn eval(&self, h: &Uq, x: &HElement) -> CycloNum {
        let mut acc = h.field().zero();
        for (m, c) in x.terms() {
            let v = &self.values[h.index(m)];
            if !v.is_zero() {
                acc += &(c * v);
            }
        }
        acc
    }

    fn dual(h: &Uq, m: PbwMonomial) -> Functional {
        let f = h.field();
        let mut values = vec![f.zero(); h.dim()];
        values[h.index(&m)] = f.one();
        Functional { values }
    }
}

/// `∫_L = (X₊^{N-1} X₋^{N-1} K)^⋆` and `∫_R = (X₊^{N-1} X₋^{N-1} K⁻¹)^⋆`.
pub fn integrals(h: &Uq) -> (Functional, Functional) {
    let n = h.n();
    (Functional::dual(h, PbwMonomial::new(n - 1, n - 1, 1)), Functional::dual(h, PbwMonomial::new(n - 1, n - 1, n - 1)))
}

/// `h₁ ∫(h₂) = 1 ∫(h)`.
pub fn is_left_invariant_on(h: &Uq, phi: &Functional, x: &HElement) -> bool {
    let mut acc = HElement::zero();
    for ((m1, m2), c) in h.coproduct(x).terms() {
        let v = phi.eval(h, &h.mono(m2.a, m2.b, m2.c));
        if !v.is_zero() {
            acc.add_term(*m1, c * &v);
        }
    }
    acc == h.one().scale(&phi.eval(h, x))
}

/// `∫(h₁) h₂ = ∫(h) 1`.
pub fn is_right_invariant_on(h: &Uq, phi: &Functional, x: &HElement) -> bool {
    let mut acc = HElement::zero();
    for ((m1, m2), c) in h.coproduct(x).terms() {
        let v = phi.eval(h, &h.mono(m1.a, m1.b, m1.c));
        if !v.is_zero() {
            acc.add_term(*m2, c * &v);
        }
    }
    acc == h.one().scale(&phi.eval(h, x))
}

/// Dimension of the space of functionals that are left invariant, right invariant, or both.
pub fn invariant_functional_dims(h: &Uq) -> (usize, usize, usize) {
    let f = h.field();
    let d = h.dim();
    let basis = basis_elements(h);
    // unknowns: values φ(b_k); equation for each basis x and each output monomial
    let rows = |left: bool| {
        let mut out = Vec::new();
        for x in &basis {
            let mut eqs: std::collections::BTreeMap<usize, std::collections::BTreeMap<usize, CycloNum>> =
                std::collections::BTreeMap::new();
            for ((m1, m2), c) in h.coproduct(x).terms() {
                let (out_m, arg) = if left { (m1, m2) } else { (m2, m1) };
                let e = eqs.entry(h.index(out_m)).or_default();
                let s = e.entry(h.index(arg)).or_insert_with(|| f.zero());
                *s += c;
            }
            // minus φ(x) on the unit component
            let xm = x.terms().next().map(|(m, _)| h.index(m)).expect("monomial");
            let e = eqs.entry(h.index(&PbwMonomial::new(0, 0, 0))).or_default();
            let s = e.entry(xm).or_insert_with(|| f.zero());
            *s -= &f.one();
            out.extend(eqs.into_values());
        }
        out
    };
    let solve = |sets: &[bool]| {
        let mut el = SparseEliminator::new(f, d);
        for &l in sets {
            for r in rows(l) {
                el.insert(r);
            }
        }
        d - el.rank()
    };
    (solve(&[true]), solve(&[false]), solve(&[true, false]))
}

pub fn check_integrals(h: &Uq) -> Vec<LawReport> {
    let (il, ir) = integrals(h);
    let mut left = LawReport::new("h₁ ∫_L h₂ = 1 ∫_L h");
    let mut right = LawReport::new("∫_R(h₁) h₂ = ∫_R(h) 1");
    for x in basis_elements(h) {
        left.record(is_left_invariant_on(h, &il, &x), || format!("on {x}"));
        right.record(is_right_invariant_on(h, &ir, &x), || format!("on {x}"));
    }
    let (l, r, both) = invariant_functional_dims(h);
    let mut uni = LawReport::new("not unimodular");
    uni.record(l == 1 && r == 1, || format!("left/right invariant spaces have dims {l}, {r}"));
    uni.record(both == 0, || format!("bi-invariant space has dim {both}"));
    uni.record(il != ir, || "∫_L = ∫_R".into());
    uni.record(il.eval(h, &h.one()).is_zero(), || "∫_L(1) ≠ 0".into());
    vec![left, right, uni]
}

/// `G_ij = ∫_L(b_i* b_j)` on the PBW basis.
pub fn integral_gram(h: &Uq, kind: StarKind) -> Matrix {
    let s = StarStructure::builtin(h, kind);
    let (il, _) = integrals(h);
    let b = basis_elements(h);
    let starred: Vec<HElement> = b.iter().map(|x| s.apply(h, x)).collect();
    Matrix::from_fn(h.field(), b.len(), b.len(), |i, j| il.eval(h, &h.mul(&starred[i], &b[j])))
}

/// Gram matrix `B† G B` of the form restricted to the span of the columns of `B`.
pub fn restrict_form(g: &Matrix, basis: &[Vector]) -> Matrix {
    let b = Matrix::from_columns(g.field(), g.rows(), basis);
    b.dagger().mul(g).mul(&b)
}

/// Basis of H fixed by the antilinear conjugation `c = * ∘ τ`, with `τ` the transpose.
///
/// Candidates `v + c(v)` and `θ(v - c(v))` over PBW monomials `v`; the first independent ones
/// are kept.
pub fn c_real_basis(h: &Uq, kind: StarKind) -> Vec<HElement> {
    let s = StarStructure::builtin(h, kind);
    let c = |x: &HElement| s.apply(h, &transpose_antiautomorphism(h, x));
    let theta = h.field().theta();
    let mut span = Subspace::zero(h.field(), h.dim());
    let mut out = Vec::new();
    for v in basis_elements(h) {
        let cv = c(&v);
        for w in [v.add(&cv), v.sub(&cv).scale(&theta)] {
            if span.insert(&h.to_vector(&w)) {
                out.push(w);
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntegralAnalysis {
    pub gram: GramAnalysis,
    /// Hopf star: `∫_L(X*) = conj ∫_L(X)` on all monomials.
    pub star_reality: Option<bool>,
    /// Hopf star: signature on the Wedderburn complement.
    pub complement_signature: Option<Signature>,
    /// Hopf star: `(dim, signature)` on each block ideal `He` with `He ∩ J = 0`. Such an ideal
    /// lies in every Wedderburn complement.
    pub semisimple_block_signatures: Vec<(usize, Signature)>,
    /// Twisted stars: the Gram matrix in the basis fixed by `* ∘ τ`.
    pub c_real_symmetric: Option<bool>,
    pub c_real_hermitian: Option<bool>,
    pub c_real_hermiticity_witness: Option<(usize, usize)>,
    pub c_real_rank: Option<usize>,
}

pub fn analyze_integral(st: &Structure, kind: StarKind, e: &EmbeddingChoice) -> Result<IntegralAnalysis> {
    let h = &st.h;
    let g = integral_gram(h, kind);
    let gram = analyze(&g, kind, e)?;
    let mut out = IntegralAnalysis {
        gram,
        star_reality: None,
        complement_signature: None,
        semisimple_block_signatures: Vec::new(),
        c_real_symmetric: None,
        c_real_hermitian: None,
        c_real_hermiticity_witness: None,
        c_real_rank: None,
    };
    if kind.is_twisted() {
        let cb = c_real_basis(h, kind);
        let vecs: Vec<Vector> = cb.iter().map(|x| h.to_vector(x)).collect();
        let b = Matrix::from_columns(h.field(), h.dim(), &vecs);
        // (x, y) = ∫ x* y with x* antilinear: in coordinates x† G y
        let gc = b.dagger().mul(&g).mul(&b);
        out.c_real_symmetric = Some(gc.is_symmetric());
        out.c_real_hermitian = Some(gc.is_hermitian());
        out.c_real_hermiticity_witness = gc.hermiticity_witness();
        out.c_real_rank = Some(gc.rank());
    } else {
        let s = StarStructure::builtin(h, kind);
        let (il, _) = integrals(h);
        let real = basis_elements(h).iter().all(|x| il.eval(h, &s.apply(h, x)) == il.eval(h, x).conj());
        out.star_reality = Some(real);
        out.complement_signature = Some(signature(&restrict_form(&g, st.complement.basis()), e)?);
        for he in semisimple_block_ideals(st) {
            out.semisimple_block_signatures.push((he.dim(), signature(&restrict_form(&g, he.basis()), e)?));
        }
    }
    Ok(out)
}

/// Two-sided block ideals `He` (e a central block idempotent) meeting the radical trivially.
///
/// If `S` is any Wedderburn complement and `x` lies in the matching simple factor of `S`, then
/// `x ↦ x(1 - e)` is an algebra map from a simple algebra into the nilpotent radical, hence zero;
/// so `He ⊂ S`.
pub fn semisimple_block_ideals(st: &Structure) -> Vec<Subspace> {
    let h = &st.h;
    st.block_idempotents()
        .iter()
        .map(|e| {
            let vecs: Vec<Vector> = basis_elements(h).iter().map(|b| h.to_vector(&h.mul(b, e))).collect();
            Subspace::span(h.field(), h.dim(), &vecs)
        })
        .filter(|he| he.intersection(&st.radical).dim() == 0)
        .collect()
}

/// `1 (X, Y) = X₁* Y₁ (X₂, Y₂)` (Hopf) or `X₂* Y₁ (X₁, Y₂)` (twisted).
pub fn check_integral_coinvariance(st: &Structure, kind: StarKind, samples: usize, seed: u64) -> LawReport {
    let h = &st.h;
    let s = StarStructure::builtin(h, kind);
    let (il, _) = integrals(h);
    let form = |x: &HElement, y: &HElement| il.eval(h, &h.mul(&s.apply(h, x), y));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = if kind.is_twisted() { "1 (X, Y) = X₂* Y₁ (X₁, Y₂)" } else { "1 (X, Y) = X₁* Y₁ (X₂, Y₂)" };
    let mut r = LawReport::new(name);
    for _ in 0..samples {
        let x = random_element(h, &mut rng);
        let y = random_element(h, &mut rng);
        let mut acc = HElement::zero();
        for ((a1, a2), ca) in h.coproduct(&x).terms() {
            let (x1, x2) = (h.mono(a1.a, a1.b, a1.c), h.mono(a2.a, a2.b, a2.c));
            for ((b1, b2), cb) in h.coproduct(&y).terms() {
                let (y1, y2) = (h.mono(b1.a, b1.b, b1.c), h.mono(b2.a, b2.b, b2.c));
                let (outer, inner) = if kind.is_twisted() { (&x2, &x1) } else { (&x1, &x2) };
                let v = form(inner, &y2);
                if v.is_zero() {
                    continue;
                }
                let t = h.mul(&s.apply(h, outer), &y1);
                acc.add_scaled(&t, &(&(&ca.conj() * cb) * &v));
            }
        }
        r.record(acc == h.one().scale(&form(&x, &y)), || format!("X = {x}, Y = {y}"));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fun::FunAlgebra;

    fn st3() -> Structure {
        Structure::new(&Uq::new(3).unwrap()).unwrap()
    }

    #[test]
    fn adjoint_table() {
        let h = Uq::new(3).unwrap();
        let r = check_adjoint_table(&h);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn killing_identities() {
        let st = st3();
        for r in check_killing_identities(&st, 20, 7) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
        for r in check_hermitian_killing_invariances(&st, 10, 8) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn hermitianized_killing_hopf() {
        let st = st3();
        let g = hermitianized_killing(&st, StarKind::HopfSL2R);
        let a = analyze(&g, StarKind::HopfSL2R, &EmbeddingChoice::default()).unwrap();
        assert!(a.hermitian);
        assert_eq!(a.rank, 14);
        assert!(a.signature.unwrap().matches_up_to_sign(&Signature::new(8, 6, 13)));
        assert_eq!(form_kernel(&g), st.radical);
    }

    #[test]
    fn hermitianized_killing_twisted_fails() {
        let st = st3();
        for kind in [StarKind::TwistedPlus, StarKind::TwistedMinus] {
            let g = hermitianized_killing(&st, kind);
            assert!(!g.is_hermitian(), "{kind}");
            assert!(g.hermiticity_witness().is_some());
        }
    }

    #[test]
    fn integrals_and_lambda() {
        let h = Uq::new(3).unwrap();
        for r in check_integrals(&h) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
        let (il, ir) = integrals(&h);
        let x = h.mul_all(&[&h.xp(), &h.xm(), &h.k()]);
        assert!(is_left_invariant_on(&h, &il, &x));
        let any_right_failure = h.basis().iter().any(|m| !is_right_invariant_on(&h, &il, &h.mono(m.a, m.b, m.c)));
        assert!(any_right_failure);
        // λ_L and λ_R pair like ∫_L and ∫_R up to a scalar
        let fa = FunAlgebra::new(&h);
        for (lam, int) in [(fa.lambda_left(), &il), (fa.lambda_right(), &ir)] {
            let v = fa.functional(&lam);
            let m = Matrix::from_columns(h.field(), h.dim(), &[v, int.values.clone()]);
            assert_eq!(m.rank(), 1);
        }
    }

    #[test]
    fn integral_product_hopf() {
        let st = st3();
        let a = analyze_integral(&st, StarKind::HopfSL2R, &EmbeddingChoice::default()).unwrap();
        assert!(a.gram.hermitian);
        assert_eq!(a.gram.signature, Some(Signature::new(14, 13, 0)));
        assert_eq!(a.star_reality, Some(true));
        // the M(3) block sits in every complement and carries an indefinite restriction
        assert_eq!(a.semisimple_block_signatures, vec![(9, Signature::new(5, 4, 0))]);
        assert!(!a.complement_signature.unwrap().is_definite());
        assert!(check_integral_coinvariance(&st, StarKind::HopfSL2R, 10, 3).passed());
    }

    #[test]
    fn integral_product_twisted() {
        let st = st3();
        for kind in [StarKind::TwistedPlus, StarKind::TwistedMinus] {
            let a = analyze_integral(&st, kind, &EmbeddingChoice::default()).unwrap();
            assert!(!a.gram.hermitian, "{kind}");
            assert_eq!(a.gram.rank, 27);
            assert_eq!(a.c_real_symmetric, Some(true), "{kind}");
            assert_eq!(a.c_real_hermitian, Some(false), "{kind}");
            assert_eq!(a.c_real_rank, Some(27));
            assert!(check_integral_coinvariance(&st, kind, 10, 4).passed(), "{kind}");
        }
    }
}

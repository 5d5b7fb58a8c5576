//! Invariant hermitian forms on representations, their signatures and Witt decompositions.
//!
//! A form `(v, w) = v† G w` makes `ρ` a *-representation when `‖h‖† G = G ‖h*‖`. Since
//! conjugation is only linear over the real subfield `K⁺`, each entry of `G` is split as
//! `u + θv` with `u, v ∈ K⁺` and `θ = q - q⁻¹`; the system is then `K⁺`-linear.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloNum, EmbeddingChoice, Field};
use crate::error::{Error, Result};
use crate::hopf::{Generator, HElement, Uq};
use crate::linalg::{Matrix, SparseEliminator};
use crate::plane::{MMonomial, QuantumPlane};
use crate::rep::Representation;
use crate::star::{StarKind, StarStructure};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub const fn new(pos: usize, neg: usize, zero: usize) -> Self {
        Signature { pos, neg, zero }
    }

    pub fn dim(&self) -> usize {
        self.pos + self.neg + self.zero
    }

    pub fn rank(&self) -> usize {
        self.pos + self.neg
    }

    pub fn flipped(&self) -> Signature {
        Signature::new(self.neg, self.pos, self.zero)
    }

    /// Forms are only fixed up to a real factor, so the sign is normalized to have at
    /// least as many positive as negative directions.
    pub fn canonical(&self) -> Signature {
        if self.neg > self.pos {
            self.flipped()
        } else {
            *self
        }
    }

    pub fn matches_up_to_sign(&self, o: &Signature) -> bool {
        self == o || self.flipped() == *o
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.pos == 0 || self.neg == 0)
    }

    pub fn witt(&self) -> Witt {
        let index = self.pos.min(self.neg);
        let aniso = self.pos.abs_diff(self.neg);
        let mut parts = vec![index.to_string(), index.to_string()];
        if aniso > 0 {
            parts.push(aniso.to_string());
        }
        if self.zero > 0 {
            parts.push(self.zero.to_string());
        }
        Witt { index, decomposition: format!("{} = {}", self.dim(), parts.join(" + ")) }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.pos, self.neg, self.zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witt {
    pub index: usize,
    pub decomposition: String,
}

/// Signature of a hermitian matrix by hermitian congruence.
///
/// Diagonal pivots are used when available. When the remaining diagonal vanishes but some
/// `G_ij = z ≠ 0`, replacing `e_i` by `e_i + conj(z) e_j` produces the diagonal entry `2|z|²`.
pub fn signature(g: &Matrix, e: &EmbeddingChoice) -> Result<Signature> {
    if !g.is_square() || !g.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = g.rows();
    let mut m: Vec<Vec<CycloNum>> = (0..n).map(|r| g.row(r)).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = Signature::new(0, 0, 0);
    while !active.is_empty() {
        let piv = match active.iter().position(|&i| !m[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let found = active.iter().enumerate().find_map(|(pi, &i)| {
                    active.iter().find(|&&j| j != i && !m[i][j].is_zero()).map(|&j| (pi, i, j))
                });
                let Some((pi, i, j)) = found else {
                    sig.zero += active.len();
                    break;
                };
                let c = m[i][j].conj();
                let cc = c.conj();
                // column i += c * column j, then row i += conj(c) * row j
                for &r in &active {
                    let t = &m[r][j] * &c;
                    m[r][i] += &t;
                }
                for &k in &active {
                    let t = &m[j][k] * &cc;
                    m[i][k] += &t;
                }
                pi
            }
        };
        let i = active.remove(piv);
        let p = m[i][i].clone();
        match p.sign_real(e)? {
            1 => sig.pos += 1,
            -1 => sig.neg += 1,
            _ => unreachable!("pivot is nonzero"),
        }
        let pinv = p.inv()?;
        for &a in &active {
            if m[a][i].is_zero() {
                continue;
            }
            let fa = &m[a][i] * &pinv;
            for &b in &active {
                if !m[i][b].is_zero() {
                    let t = &fa * &m[i][b];
                    m[a][b] -= &t;
                }
            }
        }
    }
    Ok(sig)
}

/// A space of hermitian forms, given by a `K⁺`-basis.
#[derive(Clone, Debug)]
pub struct FormSolutionSpace {
    pub name: String,
    pub star: Option<StarKind>,
    pub dim: usize,
    pub basis: Vec<Matrix>,
}

impl FormSolutionSpace {
    pub fn real_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combination(&self, coeffs: &[CycloNum]) -> Matrix {
        let f = self.field();
        let mut g = Matrix::zeros(&f, self.dim, self.dim);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                g = g.add(&b.scale(c));
            }
        }
        g
    }

    fn field(&self) -> Field {
        self.basis.first().map(|b| b.field().clone()).unwrap_or_else(|| Field::new(3).expect("N = 3"))
    }

    /// Signatures of `samples` integer combinations drawn from a fixed seed.
    pub fn sample_signatures(&self, e: &EmbeddingChoice, samples: usize) -> Result<Vec<Signature>> {
        if self.basis.is_empty() {
            return Ok(vec![Signature::new(0, 0, self.dim)]);
        }
        if self.basis.len() == 1 {
            return Ok(vec![signature(&self.basis[0], e)?]);
        }
        let f = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut out = Vec::with_capacity(samples);
        for _ in 0..samples {
            let coeffs: Vec<CycloNum> = (0..self.basis.len()).map(|_| f.from_int(rng.gen_range(-6..=6))).collect();
            out.push(signature(&self.combination(&coeffs), e)?);
        }
        Ok(out)
    }

    /// The signature of a generic member: most frequent among the samples of maximal rank.
    pub fn generic_signature(&self, e: &EmbeddingChoice) -> Result<Signature> {
        let sigs = self.sample_signatures(e, 24)?;
        let max_rank = sigs.iter().map(|s| s.rank()).max().unwrap_or(0);
        let mut counts: BTreeMap<Signature, usize> = BTreeMap::new();
        for s in sigs.iter().filter(|s| s.rank() == max_rank) {
            *counts.entry(s.canonical()).or_default() += 1;
        }
        let best = counts.iter().max_by_key(|(s, c)| (**c, std::cmp::Reverse(**s))).map(|(s, _)| *s);
        Ok(best.unwrap_or(Signature::new(0, 0, self.dim)))
    }

    /// Distinct canonical signatures seen over the samples.
    pub fn signature_range(&self, e: &EmbeddingChoice, samples: usize) -> Result<BTreeSet<Signature>> {
        Ok(self.sample_signatures(e, samples)?.into_iter().map(|s| s.canonical()).collect())
    }

    pub fn report(&self, e: &EmbeddingChoice) -> Result<FormReport> {
        let generic = self.generic_signature(e)?;
        Ok(FormReport {
            name: self.name.clone(),
            star: self.star.map(|s| s.cli_name().to_string()),
            dim: self.dim,
            real_dim: self.real_dim(),
            signature: generic,
            witt: generic.witt(),
            basis_forms: self.basis.iter().map(|b| b.to_strings()).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormReport {
    pub name: String,
    pub star: Option<String>,
    pub dim: usize,
    pub real_dim: usize,
    pub signature: Signature,
    pub witt: Witt,
    pub basis_forms: Vec<Vec<Vec<String>>>,
}

/// Indexing of the `K⁺` unknowns of a hermitian `d×d` matrix.
struct HermVars {
    d: usize,
}

impl HermVars {
    fn count(&self) -> usize {
        self.d * self.d
    }

    /// `G_ii = t_i`; `G_ij = u_ij + θ v_ij` and `G_ji = u_ij - θ v_ij` for `i < j`.
    fn entry(&self, f: &Field, i: usize, j: usize) -> Vec<(usize, CycloNum)> {
        let d = self.d;
        if i == j {
            return vec![(i, f.one())];
        }
        let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        // pairs (a, b) with a < b, in row-major order
        let k = a * d - a * (a + 1) / 2 + (b - a - 1);
        let u = d + 2 * k;
        vec![(u, f.one()), (u + 1, &f.theta() * &f.from_int(s))]
    }

    fn matrix(&self, f: &Field, sol: &[CycloNum]) -> Matrix {
        Matrix::from_fn(f, self.d, self.d, |i, j| {
            let mut acc = f.zero();
            for (v, c) in self.entry(f, i, j) {
                if !sol[v].is_zero() {
                    acc += &(&c * &sol[v]);
                }
            }
            acc
        })
    }
}

/// All hermitian `G` with `A† G = G B` for each pair `(A, B)`.
pub fn solve_constraints(field: &Field, d: usize, pairs: &[(Matrix, Matrix)]) -> Vec<Matrix> {
    let vars = HermVars { d };
    let mut el = SparseEliminator::new(field, vars.count());
    let entries: Vec<Vec<Vec<(usize, CycloNum)>>> =
        (0..d).map(|i| (0..d).map(|j| vars.entry(field, i, j)).collect()).collect();
    for (a, b) in pairs {
        let ad = a.dagger();
        for r in 0..d {
            for c in 0..d {
                let mut row: BTreeMap<usize, CycloNum> = BTreeMap::new();
                let mut push = |coef: &CycloNum, e: &[(usize, CycloNum)], neg: bool| {
                    for (v, x) in e {
                        let t = coef * x;
                        let slot = row.entry(*v).or_insert_with(|| field.zero());
                        if neg {
                            *slot -= &t;
                        } else {
                            *slot += &t;
                        }
                    }
                };
                for k in 0..d {
                    let x = &ad[(r, k)];
                    if !x.is_zero() {
                        push(x, &entries[k][c], false);
                    }
                    let y = &b[(k, c)];
                    if !y.is_zero() {
                        push(y, &entries[r][k], true);
                    }
                }
                let re: BTreeMap<usize, CycloNum> = row.iter().map(|(k, v)| (*k, v.re())).collect();
                let im: BTreeMap<usize, CycloNum> = row.iter().map(|(k, v)| (*k, v.im_theta())).collect();
                el.insert(re);
                el.insert(im);
            }
        }
    }
    el.nullspace().into_iter().map(|s| vars.matrix(field, &s)).collect()
}

/// Hermitian forms making `rep` a *-representation.
pub fn solve_forms(h: &Uq, rep: &Representation, star: &StarStructure) -> FormSolutionSpace {
    let images = rep.star_images(h, star);
    let pairs: Vec<(Matrix, Matrix)> =
        Generator::ALL.iter().zip(images).map(|(g, s)| (rep.matrix(*g).clone(), s)).collect();
    FormSolutionSpace {
        name: rep.name.clone(),
        star: star.kind,
        dim: rep.dim(),
        basis: solve_constraints(rep.field(), rep.dim(), &pairs),
    }
}

/// Forms on M invariant under both the H-action and left multiplication by `x`, `y`.
pub fn solve_module_algebra_form(plane: &QuantumPlane, kind: StarKind) -> FormSolutionSpace {
    let h = plane.uq();
    let rep = plane.representation();
    let star = StarStructure::builtin(h, kind);
    let images = rep.star_images(h, &star);
    let mut pairs: Vec<(Matrix, Matrix)> =
        Generator::ALL.iter().zip(images).map(|(g, s)| (rep.matrix(*g).clone(), s)).collect();
    for z in [plane.x(), plane.y()] {
        pairs.push((plane.left_multiplication(&z), plane.left_multiplication(&plane.star(kind, &z))));
    }
    FormSolutionSpace { name: "M".into(), star: Some(kind), dim: rep.dim(), basis: solve_constraints(rep.field(), rep.dim(), &pairs) }
}

/// Entries of a form on M outside the support `r + p ≡ s + t ≡ N - 1 (mod N)`, where
/// rows and columns are indexed by `x^r y^s` and `x^p y^t`.
pub fn plane_support_violations(plane: &QuantumPlane, g: &Matrix) -> Vec<(MMonomial, MMonomial)> {
    let n = plane.n();
    let basis = plane.basis();
    let mut out = Vec::new();
    for a in &basis {
        for b in &basis {
            let on = (a.0 + b.0) % n == n - 1 && (a.1 + b.1) % n == n - 1;
            if !on && !g[(plane.index(a), plane.index(b))].is_zero() {
                out.push((*a, *b));
            }
        }
    }
    out
}

/// `Σ ‖(S h₁)*‖† G ‖h₂‖ = ε(h) G`, the invariance of the scalar product under `h`.
pub fn check_invariance(h: &Uq, rep: &Representation, star: &StarStructure, g: &Matrix, x: &HElement) -> bool {
    let f = rep.field();
    let mut acc = Matrix::zeros(f, rep.dim(), rep.dim());
    for ((m1, m2), c) in h.coproduct(x).terms() {
        let a = rep.act(h, &star.apply(h, &h.antipode(&h.mono(m1.a, m1.b, m1.c))));
        let b = rep.act(h, &h.mono(m2.a, m2.b, m2.c));
        acc = acc.add(&a.dagger().mul(g).mul(&b).scale(c));
    }
    acc == g.scale(&h.counit(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::Structure;

    fn emb() -> EmbeddingChoice {
        EmbeddingChoice::default()
    }

    fn diag(f: &Field, v: &[i64]) -> Matrix {
        Matrix::from_fn(f, v.len(), v.len(), |r, c| if r == c { f.from_int(v[r]) } else { f.zero() })
    }

    #[test]
    fn signature_examples() {
        let f = Field::new(3).unwrap();
        assert_eq!(signature(&diag(&f, &[1, -1]), &emb()).unwrap(), Signature::new(1, 1, 0));
        assert_eq!(signature(&Matrix::zeros(&f, 5, 5), &emb()).unwrap(), Signature::new(0, 0, 5));
        // anti-diagonal with entries iq and -iq²; i√3 = q - q², so i = (q - q²)/√3 and the
        // scale does not change the signature
        let iq = &(&f.q() - &f.q_pow(2)) * &f.q();
        let g = Matrix::from_fn(&f, 2, 2, |r, c| match (r, c) {
            (0, 1) => iq.clone(),
            (1, 0) => iq.conj(),
            _ => f.zero(),
        });
        assert!(g.is_hermitian());
        assert_eq!(signature(&g, &emb()).unwrap(), Signature::new(1, 1, 0));
        let bad = Matrix::from_fn(&f, 2, 2, |r, c| if r == 0 && c == 1 { f.one() } else { f.zero() });
        assert!(matches!(signature(&bad, &emb()), Err(Error::NotHermitian)));
    }

    #[test]
    fn witt_strings() {
        assert_eq!(Signature::new(3, 3, 0).witt().decomposition, "6 = 3 + 3");
        assert_eq!(Signature::new(5, 4, 0).witt().decomposition, "9 = 4 + 4 + 1");
        assert_eq!(Signature::new(3, 0, 0).witt().index, 0);
    }

    #[test]
    fn hopf_forms_on_3_irr() {
        let st = Structure::new(&Uq::new(3).unwrap()).unwrap();
        let h = &st.h;
        let rep = st.named_module("3_irr").unwrap();
        let star = StarStructure::builtin(h, StarKind::HopfSL2R);
        let sp = solve_forms(h, &rep, &star);
        assert_eq!(sp.real_dim(), 1);
        assert!(signature(&sp.basis[0], &emb()).unwrap().matches_up_to_sign(&Signature::new(2, 1, 0)));
        for x in [h.xp(), h.xm(), h.k(), h.mul(&h.xp(), &h.xm())] {
            assert!(check_invariance(h, &rep, &star, &sp.basis[0], &x));
        }
    }

    #[test]
    fn twisted_forms_on_3_irr() {
        let st = Structure::new(&Uq::new(3).unwrap()).unwrap();
        let h = &st.h;
        let rep = st.named_module("3_irr").unwrap();
        let plus = solve_forms(h, &rep, &StarStructure::builtin(h, StarKind::TwistedPlus));
        let minus = solve_forms(h, &rep, &StarStructure::builtin(h, StarKind::TwistedMinus));
        assert_eq!((plus.real_dim(), minus.real_dim()), (1, 1));
        assert!(signature(&plus.basis[0], &emb()).unwrap().matches_up_to_sign(&Signature::new(2, 1, 0)));
        assert!(signature(&minus.basis[0], &emb()).unwrap().matches_up_to_sign(&Signature::new(3, 0, 0)));
    }

    #[test]
    fn plane_form() {
        let h = Uq::new(3).unwrap();
        let plane = QuantumPlane::new(&h);
        let hopf = solve_module_algebra_form(&plane, StarKind::HopfSL2R);
        assert_eq!(hopf.real_dim(), 1);
        let g = &hopf.basis[0];
        assert!(plane_support_violations(&plane, g).is_empty());
        let sig = signature(g, &emb()).unwrap().canonical();
        assert_eq!(sig, Signature::new(5, 4, 0));
        assert_eq!(sig.witt().decomposition, "9 = 4 + 4 + 1");
        for kind in [StarKind::TwistedPlus, StarKind::TwistedMinus] {
            assert_eq!(solve_module_algebra_form(&plane, kind).real_dim(), 0);
        }
    }
}

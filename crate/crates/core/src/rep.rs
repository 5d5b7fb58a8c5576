//! Representations of H and the structure of H as an algebra: radical, Wedderburn
//! complement, projective indecomposables and their submodule lattices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloNum, Field};
use crate::error::{Error, Result};
use crate::hopf::{Generator, HElement, LawReport, Uq};
use crate::linalg::{is_zero_vec, unit_vector, vec_add, vec_scale, Matrix, Subspace, Vector};
use crate::star::StarStructure;

/// A finite dimensional representation, given by the matrices of `X₊, X₋, K`.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation {
    pub name: String,
    pub labels: Vec<String>,
    mats: [Matrix; 3],
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({}, dim {})", self.name, self.dim())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepReport {
    pub name: String,
    pub dim: usize,
    pub labels: Vec<String>,
    pub xp: Vec<Vec<String>>,
    pub xm: Vec<Vec<String>>,
    pub k: Vec<Vec<String>>,
}

impl Representation {
    pub fn new(name: impl Into<String>, labels: Vec<String>, mats: [Matrix; 3]) -> Result<Representation> {
        let d = labels.len();
        if mats.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Dimension(format!("generator matrices must be {d}x{d}")));
        }
        Ok(Representation { name: name.into(), labels, mats })
    }

    fn unlabeled(name: impl Into<String>, mats: [Matrix; 3]) -> Representation {
        let d = mats[0].rows();
        Representation { name: name.into(), labels: (0..d).map(|i| format!("v{i}")).collect(), mats }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> &Field {
        self.mats[0].field()
    }

    pub fn matrix(&self, g: Generator) -> &Matrix {
        match g {
            Generator::Xp => &self.mats[0],
            Generator::Xm => &self.mats[1],
            Generator::K => &self.mats[2],
        }
    }

    pub fn matrices(&self) -> &[Matrix; 3] {
        &self.mats
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Representation {
        self.name = name.into();
        self
    }

    /// The matrix `‖x‖` of an arbitrary element.
    pub fn act(&self, h: &Uq, x: &HElement) -> Matrix {
        let f = self.field();
        let d = self.dim();
        let n = h.n() as usize;
        let powers = |m: &Matrix| {
            let mut v = vec![Matrix::identity(f, d)];
            for i in 1..n {
                let next = v[i - 1].mul(m);
                v.push(next);
            }
            v
        };
        let (pp, pm, pk) = (powers(&self.mats[0]), powers(&self.mats[1]), powers(&self.mats[2]));
        let mut out = Matrix::zeros(f, d, d);
        for (m, c) in x.terms() {
            let t = pp[m.a as usize].mul(&pm[m.b as usize]).mul(&pk[m.c as usize]);
            out = out.add(&t.scale(c));
        }
        out
    }

    /// Matrices `‖g*‖` of the starred generators.
    pub fn star_images(&self, h: &Uq, star: &StarStructure) -> [Matrix; 3] {
        [self.act(h, &star.images[0]), self.act(h, &star.images[1]), self.act(h, &star.images[2])]
    }

    /// The defining relations of H hold for the generator matrices.
    pub fn check_relations(&self, h: &Uq) -> LawReport {
        let f = self.field();
        let [xp, xm, k] = &self.mats;
        let d = self.dim();
        let n = h.n() as usize;
        let mut r = LawReport::new(format!("relations on {}", self.name));
        r.record(k.mul(xp) == xp.mul(k).scale(&f.q_pow(2)), || "K Xp = q^2 Xp K".into());
        r.record(k.mul(xm) == xm.mul(k).scale(&f.q_pow(-2)), || "K Xm = q^-2 Xm K".into());
        let kinv = k.pow(n - 1);
        let c = k.sub(&kinv).scale(&f.theta().inv().expect("theta is nonzero"));
        r.record(xp.mul(xm).sub(&xm.mul(xp)) == c, || "[Xp, Xm] = (K - K^-1)/(q - q^-1)".into());
        r.record(xp.pow(n).is_zero() && xm.pow(n).is_zero(), || "Xp^N = Xm^N = 0".into());
        r.record(k.pow(n) == Matrix::identity(f, d), || "K^N = 1".into());
        r
    }

    pub fn validate(&self, h: &Uq) -> Result<()> {
        let r = self.check_relations(h);
        if r.passed() {
            Ok(())
        } else {
            Err(Error::PreconditionFailed(format!("{}: {}", r.name, r.failures.join("; "))))
        }
    }

    /// Smallest submodule containing `vectors`.
    pub fn generated(&self, vectors: &[Vector]) -> Subspace {
        let ops: Vec<&Matrix> = self.mats.iter().collect();
        Subspace::span(self.field(), self.dim(), vectors).closure(&ops)
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.mats.iter().all(|m| s.is_stable_under(m))
    }

    /// The action restricted to a submodule, in its echelon basis.
    pub fn subrep(&self, name: impl Into<String>, s: &Subspace) -> Representation {
        let f = self.field();
        let k = s.dim();
        let restrict = |m: &Matrix| {
            let cols: Vec<Vector> =
                s.basis().iter().map(|b| s.coordinates(&m.apply(b)).expect("not a submodule")).collect();
            Matrix::from_columns(f, k, &cols)
        };
        Representation::unlabeled(name, [restrict(&self.mats[0]), restrict(&self.mats[1]), restrict(&self.mats[2])])
    }

    /// The induced action on `V / s`, using the standard basis vectors off the pivots of `s`.
    pub fn quotient(&self, name: impl Into<String>, s: &Subspace) -> (Representation, Vec<usize>) {
        let f = self.field();
        let comp = s.complement_indices();
        let induced = |m: &Matrix| {
            let cols: Vec<Vector> = comp
                .iter()
                .map(|&c| {
                    let r = s.reduce(&m.column(c));
                    comp.iter().map(|&i| r[i].clone()).collect()
                })
                .collect();
            Matrix::from_columns(f, comp.len(), &cols)
        };
        let rep = Representation::unlabeled(name, [induced(&self.mats[0]), induced(&self.mats[1]), induced(&self.mats[2])]);
        (rep, comp)
    }

    /// `Tr(‖K⁻¹‖ ‖x‖)`.
    pub fn quantum_trace(&self, h: &Uq, x: &HElement) -> CycloNum {
        let kinv = self.mats[2].pow(h.n() as usize - 1);
        kinv.mul(&self.act(h, x)).trace()
    }

    pub fn direct_sum(&self, o: &Representation, name: impl Into<String>) -> Representation {
        let f = self.field();
        let (a, b) = (self.dim(), o.dim());
        let block = |x: &Matrix, y: &Matrix| {
            Matrix::from_fn(f, a + b, a + b, |r, c| {
                if r < a && c < a {
                    x[(r, c)].clone()
                } else if r >= a && c >= a {
                    y[(r - a, c - a)].clone()
                } else {
                    f.zero()
                }
            })
        };
        let mut labels = self.labels.clone();
        labels.extend(o.labels.iter().cloned());
        Representation {
            name: name.into(),
            labels,
            mats: [block(&self.mats[0], &o.mats[0]), block(&self.mats[1], &o.mats[1]), block(&self.mats[2], &o.mats[2])],
        }
    }

    pub fn report(&self) -> RepReport {
        RepReport {
            name: self.name.clone(),
            dim: self.dim(),
            labels: self.labels.clone(),
            xp: self.mats[0].to_strings(),
            xm: self.mats[1].to_strings(),
            k: self.mats[2].to_strings(),
        }
    }

    pub fn from_report(field: &Field, r: &RepReport) -> Result<Representation> {
        let mats = [Matrix::parse(field, &r.xp)?, Matrix::parse(field, &r.xm)?, Matrix::parse(field, &r.k)?];
        Representation::new(r.name.clone(), r.labels.clone(), mats)
    }
}

/// Left multiplication on the PBW basis.
pub fn regular_representation(h: &Uq) -> Representation {
    let f = h.field();
    let d = h.dim();
    let basis = h.basis();
    let mat = |g: &HElement| {
        let cols: Vec<Vector> = basis.iter().map(|m| h.to_vector(&h.mul(g, &h.mono(m.a, m.b, m.c)))).collect();
        Matrix::from_columns(f, d, &cols)
    };
    Representation {
        name: "regular".into(),
        labels: basis.iter().map(|m| m.to_string()).collect(),
        mats: [mat(&h.xp()), mat(&h.xm()), mat(&h.k())],
    }
}

/// The irreducible `V_n` (`1 <= n <= N`): `K v_j = q^{n-1-2j} v_j`, `X₋ v_j = v_{j+1}`,
/// `X₊ v_j = [j][n-j] v_{j-1}`.
pub fn irreducible(h: &Uq, n: u32) -> Result<Representation> {
    if n == 0 || n > h.n() {
        return Err(Error::UnknownRepresentation(format!("irreducible of dimension {n} (N = {})", h.n())));
    }
    let f = h.field();
    let d = n as usize;
    let xp = Matrix::from_fn(f, d, d, |r, c| if c == r + 1 { &f.qint(c as i64) * &f.qint(n as i64 - c as i64) } else { f.zero() });
    let xm = Matrix::from_fn(f, d, d, |r, c| if r == c + 1 { f.one() } else { f.zero() });
    let k = Matrix::from_fn(f, d, d, |r, c| if r == c { f.q_pow(n as i64 - 1 - 2 * r as i64) } else { f.zero() });
    Ok(Representation {
        name: format!("{n}_irr"),
        labels: (0..d).map(|j| format!("v{j}")).collect(),
        mats: [xp, xm, k],
    })
}

/// Values `Tr(L_m)` of the regular trace on each PBW monomial.
fn regular_trace(h: &Uq) -> Vec<CycloNum> {
    let basis = h.basis();
    basis
        .iter()
        .map(|m| {
            let x = h.mono(m.a, m.b, m.c);
            let mut t = h.field().zero();
            for b in &basis {
                if let Some(c) = h.mul(&x, &h.mono(b.a, b.b, b.c)).coeff(b) {
                    t += c;
                }
            }
            t
        })
        .collect()
}

/// `Tr(L_x)` in the regular representation.
pub fn regular_trace_of(h: &Uq, table: &[CycloNum], x: &HElement) -> CycloNum {
    let mut acc = h.field().zero();
    for (m, c) in x.terms() {
        let t = &table[h.index(m)];
        if !t.is_zero() {
            acc += &(c * t);
        }
    }
    acc
}

/// Everything about H as an algebra, computed once.
#[derive(Clone, Debug)]
pub struct Structure {
    pub h: Uq,
    pub trace: Vec<CycloNum>,
    pub radical: Subspace,
    pub irreps: Vec<Representation>,
    /// `units[i][r][c]` lifts the matrix unit `E_rc` of `End(V_{i+1})`.
    pub units: Vec<Vec<Vec<HElement>>>,
    pub complement: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PimClass {
    pub name: String,
    pub dim: usize,
    pub multiplicity: usize,
    pub head_dim: usize,
}

impl Structure {
    pub fn new(h: &Uq) -> Result<Structure> {
        let f = h.field();
        let d = h.dim();
        let trace = regular_trace(h);
        let basis = h.basis();
        let elems: Vec<HElement> = basis.iter().map(|m| h.mono(m.a, m.b, m.c)).collect();
        let gram = Matrix::from_fn(f, d, d, |i, j| regular_trace_of(h, &trace, &h.mul(&elems[i], &elems[j])));
        let radical = Subspace::span(f, d, &gram.nullspace());
        let irreps: Vec<Representation> = (1..=h.n()).map(|n| irreducible(h, n)).collect::<Result<_>>()?;
        let units = lift_matrix_units(h, &irreps)?;
        let mut complement = Subspace::zero(f, d);
        for block in &units {
            for row in block {
                for u in row {
                    complement.insert(&h.to_vector(u));
                }
            }
        }
        Ok(Structure { h: h.clone(), trace, radical, irreps, units, complement })
    }

    pub fn radical_elements(&self) -> Vec<HElement> {
        self.radical.basis().iter().map(|v| self.h.from_vector(v)).collect()
    }

    /// Dimensions of the simple blocks `End(V_n)` of `H/J`, largest first.
    pub fn block_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.irreps.iter().map(|r| r.dim() * r.dim()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Lifted primitive idempotents `e^{(n)}_{jj}`.
    pub fn primitive_idempotents(&self) -> Vec<HElement> {
        self.units.iter().flat_map(|b| (0..b.len()).map(move |j| b[j][j].clone())).collect()
    }

    /// Lifts of the central idempotents of `H/J`, one per simple block.
    pub fn block_idempotents(&self) -> Vec<HElement> {
        self.units
            .iter()
            .map(|b| (0..b.len()).fold(HElement::zero(), |acc, j| acc.add(&b[j][j])))
            .collect()
    }

    /// The projective cover `P_n = H e^{(n)}_{00}` as a subspace of the regular module.
    pub fn pim_subspace(&self, n: u32) -> Subspace {
        let h = &self.h;
        let e = &self.units[n as usize - 1][0][0];
        let vecs: Vec<Vector> = h.basis().iter().map(|m| h.to_vector(&h.mul(&h.mono(m.a, m.b, m.c), e))).collect();
        Subspace::span(h.field(), h.dim(), &vecs)
    }

    pub fn pim(&self, n: u32) -> Representation {
        let name = pim_name(self.h.n(), n);
        regular_representation(&self.h).subrep(name, &self.pim_subspace(n))
    }

    pub fn pim_classes(&self) -> Vec<PimClass> {
        (1..=self.h.n())
            .rev()
            .map(|n| PimClass {
                name: pim_name(self.h.n(), n),
                dim: self.pim_subspace(n).dim(),
                multiplicity: n as usize,
                head_dim: n as usize,
            })
            .collect()
    }

    /// `J·V`.
    pub fn module_radical(&self, rep: &Representation) -> Subspace {
        let mut vecs = Vec::new();
        for j in self.radical_elements() {
            let m = rep.act(&self.h, &j);
            for c in 0..rep.dim() {
                vecs.push(m.column(c));
            }
        }
        Subspace::span(rep.field(), rep.dim(), &vecs)
    }

    /// `{v : J v = 0}`.
    pub fn socle(&self, rep: &Representation) -> Subspace {
        let f = rep.field();
        let d = rep.dim();
        let mut rows = Vec::new();
        for j in self.radical_elements() {
            let m = rep.act(&self.h, &j);
            for r in 0..d {
                rows.push(m.row(r));
            }
        }
        if rows.is_empty() {
            return Subspace::full(f, d);
        }
        Subspace::span(f, d, &Matrix::from_rows(f, d, &rows).nullspace())
    }

    pub fn is_irreducible(&self, rep: &Representation) -> bool {
        rep.dim() > 0 && self.module_radical(rep).dim() == 0 && self.is_indecomposable(rep)
    }

    /// `End_H(V)` as a list of matrices.
    pub fn endomorphisms(&self, rep: &Representation) -> Vec<Matrix> {
        hom_space(rep, rep)
    }

    /// Indecomposable iff `End_H(V)` is local, i.e. `End/rad End` is one dimensional.
    pub fn is_indecomposable(&self, rep: &Representation) -> bool {
        if rep.dim() == 0 {
            return false;
        }
        let ends = self.endomorphisms(rep);
        let f = rep.field();
        let k = ends.len();
        let gram = Matrix::from_fn(f, k, k, |i, j| ends[i].mul(&ends[j]).trace());
        k - gram.nullspace().len() == 1
    }

    /// Submodule lattice of a projective indecomposable.
    pub fn lattice(&self, rep: &Representation, lambda: &CycloNum) -> Result<Lattice> {
        let rad = self.module_radical(rep);
        let soc = self.socle(rep);
        let head = rep.dim() - rad.dim();
        if head == 0 || head > self.h.n() as usize {
            return Err(Error::NotPim(rep.name.clone()));
        }
        let expected = self.pim_subspace(head as u32).dim();
        if expected != rep.dim() || !self.is_indecomposable(rep) {
            return Err(Error::NotPim(rep.name.clone()));
        }
        if head == self.h.n() as usize {
            return Ok(Lattice { dim: rep.dim(), radical: rad, socle: soc, intermediate: None });
        }
        let intermediate = self.intermediate(rep, &rad, &soc, lambda)?;
        Ok(Lattice { dim: rep.dim(), radical: rad, socle: soc, intermediate: Some(intermediate) })
    }

    /// The submodule `soc + H·w` with `w = w₁ + λ w₂` a highest weight vector of `rad/soc`.
    fn intermediate(&self, rep: &Representation, rad: &Subspace, soc: &Subspace, lambda: &CycloNum) -> Result<Subspace> {
        let f = rep.field();
        let radrep = rep.subrep("rad", rad);
        // the socle inside rad coordinates
        let soc_in_rad: Vec<Vector> = soc.basis().iter().map(|v| rad.coordinates(v).expect("soc ⊂ rad")).collect();
        let soc_r = Subspace::span(f, rad.dim(), &soc_in_rad);
        let (q, comp) = radrep.quotient("rad/soc", &soc_r);
        let hw = q.matrix(Generator::Xp).nullspace();
        if hw.len() < 2 {
            return Err(Error::Internal(format!("rad/soc of {} has {} highest weight vectors", rep.name, hw.len())));
        }
        let w = vec_add(&hw[0], &vec_scale(&hw[1], lambda));
        let mut lifted = vec![f.zero(); rad.dim()];
        for (x, &c) in w.iter().zip(&comp) {
            lifted[c] = x.clone();
        }
        let mut inrep = vec![f.zero(); rep.dim()];
        for (x, b) in lifted.iter().zip(rad.basis()) {
            if !x.is_zero() {
                inrep = vec_add(&inrep, &vec_scale(b, x));
            }
        }
        let mut gens: Vec<Vector> = soc.basis().to_vec();
        gens.push(inrep);
        Ok(rep.generated(&gens))
    }

    /// The named modules for N = 3 plus `regular`, `N_irr` and `n_irr`.
    pub fn named_module(&self, name: &str) -> Result<Representation> {
        let n = self.h.n();
        if name == "regular" {
            return Ok(regular_representation(&self.h));
        }
        if let Some(k) = name.strip_suffix("_irr").and_then(|s| s.parse::<u32>().ok()) {
            if k >= 1 && k <= n {
                return irreducible(&self.h, k);
            }
        }
        if n == 3 {
            let zero = self.h.field().zero();
            let pick = |p: u32, which: &str, out: &str| -> Result<Representation> {
                let rep = self.pim(p);
                let lat = self.lattice(&rep, &zero)?;
                let sub = match which {
                    "pim" => return Ok(rep.renamed(out)),
                    "rad" => lat.radical,
                    "mid" => lat.intermediate.expect("non-simple pim"),
                    "soc" => lat.socle,
                    "head" => return Ok(rep.quotient(out, &lat.radical).0),
                    _ => unreachable!(),
                };
                Ok(rep.subrep(out, &sub))
            };
            let r = match name {
                "6_odd" => pick(1, "pim", name),
                "5_odd" => pick(1, "rad", name),
                "3_odd" => pick(1, "mid", name),
                "6_eve" => pick(2, "pim", name),
                "4_eve" => pick(2, "rad", name),
                "3_eve" => pick(2, "mid", name),
                "2_eve" => pick(2, "head", name),
                _ => Err(Error::UnknownRepresentation(name.into())),
            };
            return r;
        }
        Err(Error::UnknownRepresentation(name.into()))
    }
}

pub const NAMED_MODULES_N3: [&str; 10] =
    ["3_irr", "6_odd", "5_odd", "3_odd", "1_irr", "6_eve", "4_eve", "3_eve", "2_eve", "regular"];

fn pim_name(n_root: u32, n: u32) -> String {
    if n == n_root {
        format!("{n}_irr")
    } else if n_root == 3 {
        if n == 1 { "6_odd".into() } else { "6_eve".into() }
    } else {
        format!("P{n}")
    }
}

#[derive(Clone, Debug)]
pub struct Lattice {
    pub dim: usize,
    pub radical: Subspace,
    pub socle: Subspace,
    pub intermediate: Option<Subspace>,
}

impl Lattice {
    /// Dimensions of the chain `0 ⊂ soc ⊂ intermediate ⊂ rad ⊂ P`.
    pub fn chain_dims(&self) -> Vec<usize> {
        let mut v = vec![0, self.socle.dim()];
        if let Some(i) = &self.intermediate {
            v.push(i.dim());
        }
        v.push(self.radical.dim());
        v.push(self.dim);
        v.dedup();
        v
    }
}

/// `Hom_H(V, W)` as a basis of `dim W × dim V` matrices.
pub fn hom_space(v: &Representation, w: &Representation) -> Vec<Matrix> {
    let f = v.field();
    let (dv, dw) = (v.dim(), w.dim());
    let nvars = dv * dw;
    let mut el = crate::linalg::SparseEliminator::new(f, nvars);
    let var = |r: usize, c: usize| r * dv + c;
    for (a, b) in w.matrices().iter().zip(v.matrices()) {
        // T a_V = a_W T  entrywise: Σ_k T_rk V_kc - Σ_k W_rk T_kc = 0
        for r in 0..dw {
            for c in 0..dv {
                let mut row = std::collections::BTreeMap::new();
                for k in 0..dv {
                    let x = &b[(k, c)];
                    if !x.is_zero() {
                        let e = row.entry(var(r, k)).or_insert_with(|| f.zero());
                        *e += x;
                    }
                }
                for k in 0..dw {
                    let x = &a[(r, k)];
                    if !x.is_zero() {
                        let e = row.entry(var(k, c)).or_insert_with(|| f.zero());
                        *e -= x;
                    }
                }
                el.insert(row);
            }
        }
    }
    el.nullspace().into_iter().map(|s| Matrix::from_fn(f, dw, dv, |r, c| s[var(r, c)].clone())).collect()
}

/// Lifts matrix units of `H/J = ⊕ End(V_n)` to H.
fn lift_matrix_units(h: &Uq, irreps: &[Representation]) -> Result<Vec<Vec<Vec<HElement>>>> {
    let f = h.field();
    let d = h.dim();
    let basis = h.basis();
    // φ: H → ⊕ End(V_n), one column per PBW monomial
    let images: Vec<Vec<Matrix>> = irreps
        .iter()
        .map(|r| basis.iter().map(|m| r.act(h, &h.mono(m.a, m.b, m.c))).collect())
        .collect();
    let total: usize = irreps.iter().map(|r| r.dim() * r.dim()).sum();
    let phi = Matrix::from_fn(f, total, d, |row, col| {
        let mut off = 0;
        for (i, r) in irreps.iter().enumerate() {
            let s = r.dim() * r.dim();
            if row < off + s {
                let k = row - off;
                return images[i][col][(k / r.dim(), k % r.dim())].clone();
            }
            off += s;
        }
        unreachable!()
    });
    let preimage = |block: usize, r: usize, c: usize| -> HElement {
        let off: usize = irreps[..block].iter().map(|x| x.dim() * x.dim()).sum();
        let t = unit_vector(f, total, off + r * irreps[block].dim() + c);
        h.from_vector(&phi.solve(&t).expect("φ is onto"))
    };
    let one = h.one();
    // orthogonal primitive idempotents, lifted one at a time inside the corner (1-f)H(1-f)
    let mut acc = HElement::zero();
    let mut idem: Vec<Vec<HElement>> = Vec::new();
    for (b, r) in irreps.iter().enumerate() {
        let mut row = Vec::new();
        for j in 0..r.dim() {
            let x = preimage(b, j, j);
            let co = one.sub(&acc);
            let mut e = h.mul_all(&[&co, &x, &co]);
            let mut steps = 0;
            loop {
                let e2 = h.mul(&e, &e);
                if e2 == e {
                    break;
                }
                steps += 1;
                if steps > 64 {
                    return Err(Error::LiftingDivergence(steps));
                }
                let e3 = h.mul(&e2, &e);
                e = e2.scale(&f.from_int(3)).sub(&e3.scale(&f.from_int(2)));
            }
            acc = acc.add(&e);
            row.push(e);
        }
        idem.push(row);
    }
    if acc != one {
        return Err(Error::Internal("lifted idempotents do not sum to 1".into()));
    }
    let mut units = Vec::new();
    for (b, r) in irreps.iter().enumerate() {
        let n = r.dim();
        let es = &idem[b];
        let mut u0 = vec![es[0].clone()];
        let mut v0 = vec![es[0].clone()];
        for j in 1..n {
            let x = h.mul_all(&[&es[0], &preimage(b, 0, j), &es[j]]);
            let y = h.mul_all(&[&es[j], &preimage(b, j, 0), &es[0]]);
            // xy = e₀ + r with r nilpotent in e₀He₀; invert by the Neumann series
            let rr = h.mul(&x, &y).sub(&es[0]);
            let mut inv = es[0].clone();
            let mut term = es[0].clone();
            for _ in 0..d {
                term = h.mul(&term, &rr).neg();
                if term.is_zero() {
                    break;
                }
                inv = inv.add(&term);
            }
            let y = h.mul(&y, &inv);
            if h.mul(&x, &y) != es[0] || h.mul(&y, &x) != es[j] {
                return Err(Error::Internal(format!("matrix unit lift failed in block {b}")));
            }
            u0.push(x);
            v0.push(y);
        }
        let block: Vec<Vec<HElement>> =
            (0..n).map(|i| (0..n).map(|j| if i == j { es[i].clone() } else { h.mul(&v0[i], &u0[j]) }).collect()).collect();
        units.push(block);
    }
    Ok(units)
}

/// Coordinates of `v` as an element of H (used for idempotent checks on vectors).
pub fn is_nilpotent(m: &Matrix) -> bool {
    m.pow(m.rows().max(1)).is_zero()
}

/// Splits a module into indecomposable direct summands.
///
/// Candidates are cyclic submodules generated by weight vectors; a candidate `W` is a
/// summand iff some module map `π: V → W` restricts to the identity on `W`, and the
/// recursion stops once `End_H` is local.
pub fn decompose_module(st: &Structure, rep: &Representation) -> Result<Vec<Summand>> {
    let f = rep.field();
    let full = Subspace::full(f, rep.dim());
    let mut out = Vec::new();
    split(st, rep, &full, &mut out)?;
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then(b.irreducible.cmp(&a.irreducible)));
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub dim: usize,
    pub irreducible: bool,
    pub subspace: Subspace,
    pub rep: Representation,
}

fn split(st: &Structure, parent: &Representation, s: &Subspace, out: &mut Vec<Summand>) -> Result<()> {
    let f = parent.field();
    let rep = parent.subrep(format!("summand{}", out.len()), s);
    let lift = |v: &Vector| -> Vector {
        let mut acc = vec![f.zero(); parent.dim()];
        for (x, b) in v.iter().zip(s.basis()) {
            if !x.is_zero() {
                acc = vec_add(&acc, &vec_scale(b, x));
            }
        }
        acc
    };
    if st.is_indecomposable(&rep) {
        let irreducible = st.module_radical(&rep).dim() == 0;
        out.push(Summand { dim: rep.dim(), irreducible, subspace: s.clone(), rep });
        return Ok(());
    }
    for w in weight_vector_candidates(st, &rep) {
        let sub = rep.generated(&[w]);
        if sub.dim() == rep.dim() {
            continue;
        }
        if let Some(comp) = complement_submodule(&rep, &sub) {
            let lifted = |x: &Subspace| Subspace::span(f, parent.dim(), &x.basis().iter().map(&lift).collect::<Vec<_>>());
            split(st, parent, &lifted(&sub), out)?;
            split(st, parent, &lifted(&comp), out)?;
            return Ok(());
        }
    }
    Err(Error::Internal(format!("no direct summand found in a module of dimension {}", rep.dim())))
}

/// Weight vectors: a basis of each `K`-eigenspace, then pairwise sums within each.
fn weight_vector_candidates(st: &Structure, rep: &Representation) -> Vec<Vector> {
    let f = rep.field();
    let k = rep.matrix(Generator::K);
    let mut out = Vec::new();
    let mut extra = Vec::new();
    for e in 0..st.h.n() as i64 {
        let shifted = k.sub(&Matrix::identity(f, rep.dim()).scale(&f.q_pow(e)));
        let space = shifted.nullspace();
        for (i, v) in space.iter().enumerate() {
            out.push(v.clone());
            for w in &space[i + 1..] {
                extra.push(vec_add(v, w));
            }
        }
    }
    out.extend(extra);
    out.retain(|v| !is_zero_vec(v));
    out
}

/// A submodule complementary to `sub`, if `sub` is a direct summand.
pub fn complement_submodule(rep: &Representation, sub: &Subspace) -> Option<Subspace> {
    let f = rep.field();
    let w = rep.subrep("W", sub);
    let homs = hom_space(rep, &w);
    if homs.is_empty() {
        return None;
    }
    // find π = Σ t_i homs[i] with π ι = id_W
    let k = sub.dim();
    let incl = Matrix::from_columns(f, rep.dim(), sub.basis());
    let comps: Vec<Matrix> = homs.iter().map(|p| p.mul(&incl)).collect();
    let sys = Matrix::from_fn(f, k * k, homs.len(), |r, c| comps[c][(r / k, r % k)].clone());
    let rhs: Vec<CycloNum> = (0..k * k).map(|r| if r / k == r % k { f.one() } else { f.zero() }).collect();
    let t = sys.solve(&rhs)?;
    let mut pi = Matrix::zeros(f, k, rep.dim());
    for (ti, p) in t.iter().zip(&homs) {
        if !ti.is_zero() {
            pi = pi.add(&p.scale(ti));
        }
    }
    Some(Subspace::span(f, rep.dim(), &pi.nullspace()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st3() -> Structure {
        Structure::new(&Uq::new(3).unwrap()).unwrap()
    }

    #[test]
    fn regular_and_irreps_satisfy_relations() {
        let h = Uq::new(3).unwrap();
        assert!(regular_representation(&h).check_relations(&h).passed());
        for n in 1..=3 {
            let r = irreducible(&h, n).unwrap();
            assert!(r.check_relations(&h).passed(), "V_{n}");
        }
        assert!(irreducible(&h, 4).is_err());
    }

    #[test]
    fn regular_is_homomorphism() {
        let h = Uq::new(3).unwrap();
        let reg = regular_representation(&h);
        let x = h.mul(&h.xp(), &h.k()).add(&h.xm());
        let y = h.mul(&h.xm(), &h.xm()).add(&h.k_pow(2));
        assert_eq!(reg.act(&h, &h.mul(&x, &y)), reg.act(&h, &x).mul(&reg.act(&h, &y)));
    }

    #[test]
    fn structure_dimensions() {
        let st = st3();
        assert_eq!(st.radical.dim(), 13);
        assert_eq!(st.block_dims(), vec![9, 4, 1]);
        assert_eq!(st.complement.dim(), 14);
        assert!(st.complement.intersection(&st.radical).dim() == 0);
        let classes = st.pim_classes();
        let dims: Vec<(usize, usize)> = classes.iter().map(|c| (c.dim, c.multiplicity)).collect();
        assert_eq!(dims, vec![(3, 3), (6, 2), (6, 1)]);
        let total: usize = classes.iter().map(|c| c.dim * c.multiplicity).sum();
        assert_eq!(total, 27);
    }

    #[test]
    fn radical_elements_are_nilpotent() {
        let st = st3();
        let reg = regular_representation(&st.h);
        for j in st.radical_elements() {
            assert!(is_nilpotent(&reg.act(&st.h, &j)));
        }
    }

    #[test]
    fn idempotents_are_orthogonal() {
        let st = st3();
        let h = &st.h;
        let es = st.primitive_idempotents();
        for (i, a) in es.iter().enumerate() {
            for (j, b) in es.iter().enumerate() {
                let p = h.mul(a, b);
                if i == j {
                    assert_eq!(&p, a);
                } else {
                    assert!(p.is_zero());
                }
            }
        }
        let sum = st.block_idempotents().iter().fold(HElement::zero(), |acc, e| acc.add(e));
        assert_eq!(sum, h.one());
    }

    #[test]
    fn lattices() {
        let st = st3();
        let zero = st.h.field().zero();
        let p1 = st.pim(1);
        let l1 = st.lattice(&p1, &zero).unwrap();
        assert_eq!(l1.chain_dims(), vec![0, 1, 3, 5, 6]);
        let p2 = st.pim(2);
        let l2 = st.lattice(&p2, &zero).unwrap();
        assert_eq!(l2.chain_dims(), vec![0, 2, 3, 4, 6]);
        let p3 = st.pim(3);
        assert_eq!(st.lattice(&p3, &zero).unwrap().radical.dim(), 0);
        // the intermediate submodule depends on λ but its dimension does not
        let other = st.lattice(&p1, &st.h.field().from_int(2)).unwrap();
        assert_eq!(other.intermediate.as_ref().unwrap().dim(), 3);
        assert_ne!(other.intermediate, l1.intermediate);
        let not_pim = st.named_module("5_odd").unwrap();
        assert!(matches!(st.lattice(&not_pim, &zero), Err(Error::NotPim(_))));
    }

    #[test]
    fn named_modules_dims() {
        let st = st3();
        for (name, d) in
            [("3_irr", 3), ("6_odd", 6), ("5_odd", 5), ("3_odd", 3), ("1_irr", 1), ("6_eve", 6), ("4_eve", 4), ("3_eve", 3), ("2_eve", 2)]
        {
            let r = st.named_module(name).unwrap();
            assert_eq!(r.dim(), d, "{name}");
            assert!(r.check_relations(&st.h).passed(), "{name}");
        }
        assert!(st.named_module("7_odd").is_err());
    }

    #[test]
    fn quantum_dimensions() {
        let st = st3();
        let h = &st.h;
        for n in 1..=3 {
            assert!(st.pim(n).quantum_trace(h, &h.one()).is_zero(), "P{n}");
        }
        assert_eq!(irreducible(h, 2).unwrap().quantum_trace(h, &h.one()), h.field().from_int(-1));
        assert!(regular_representation(h).quantum_trace(h, &h.one()).is_zero());
    }

    #[test]
    fn decompose_regular_pim_sum() {
        let st = st3();
        let a = st.pim(1);
        let b = st.named_module("3_irr").unwrap();
        let sum = a.direct_sum(&b, "sum");
        let parts = decompose_module(&st, &sum).unwrap();
        let dims: Vec<usize> = parts.iter().map(|p| p.dim).collect();
        assert_eq!(dims, vec![3, 6]);
        assert!(parts[0].irreducible && !parts[1].irreducible);
    }
}

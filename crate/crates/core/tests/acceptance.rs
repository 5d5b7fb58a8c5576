//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Expected values are written out here. Where a value can be recomputed by other means
//! (numerical eigenvalues for signatures, Burnside's theorem for the radical), the oracle below
//! does so independently of the library's own algorithms.

use std::process::ExitCode;

use nalgebra::{Complex, DMatrix};
use uqsl2::double::{double_forms, sector_pair, DoubleAlgebra};
use uqsl2::forms::{plane_support_violations, solve_forms, solve_module_algebra_form};
use uqsl2::killing::{
    analyze_integral, check_adjoint_table, check_integrals, check_killing_identities, form_kernel,
    hermitianized_killing, integral_gram,
};
use uqsl2::rep::{irreducible, regular_representation};
use uqsl2::tensor::{check_star_closure, some_invariant_form};
use uqsl2::{
    EmbeddingChoice, FunAlgebra, LawReport, Matrix, QuantumPlane, Signature, StarKind, StarStructure, Structure, Uq,
};

use StarKind::{HopfSL2R as Hopf, TwistedMinus as TwMinus, TwistedPlus as TwPlus};

struct Criterion {
    parts: Vec<(String, bool, String)>,
}

impl Criterion {
    fn new() -> Criterion {
        Criterion { parts: Vec::new() }
    }

    fn part(&mut self, what: impl Into<String>, ok: bool, got: impl std::fmt::Display) {
        self.parts.push((what.into(), ok, got.to_string()));
    }

    fn law(&mut self, r: &LawReport) {
        let first = r.failures.first().cloned().unwrap_or_default();
        self.part(format!("{} [{}]", r.name, r.checked), r.passed(), first);
    }

    fn passed(&self) -> bool {
        self.parts.iter().all(|p| p.1)
    }
}

/// Signature from floating-point eigenvalues of the image under `q -> exp(2πi/N)`.
fn numeric_signature(g: &Matrix) -> Signature {
    let d = g.rows();
    let m = DMatrix::from_fn(d, d, |i, j| {
        let (re, im) = g[(i, j)].to_complex(1);
        Complex::new(re, im)
    });
    let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let eig = m.symmetric_eigen();
    let tol = 1e-8 * scale * d as f64;
    let (mut p, mut n, mut z) = (0, 0, 0);
    for &e in eig.eigenvalues.iter() {
        if e > tol {
            p += 1;
        } else if e < -tol {
            n += 1;
        } else {
            z += 1;
        }
    }
    Signature::new(p, n, z)
}

fn canon(p: usize, n: usize, z: usize) -> Signature {
    Signature::new(p, n, z).canonical()
}

fn structure(h: &Uq, st: &Structure) -> Criterion {
    let mut c = Criterion::new();
    c.part("dim H = 27", h.dim() == 27, h.dim());
    // Burnside: V_n is absolutely irreducible iff its image spans all n x n matrices
    let basis = h.basis();
    let mut semisimple = 0;
    for n in 1..=h.n() {
        let v = irreducible(h, n).unwrap();
        let images: Vec<Vec<_>> = basis.iter().map(|m| v.act(h, &h.mono(m.a, m.b, m.c)).entries().to_vec()).collect();
        let rank = Matrix::from_rows(h.field(), (n * n) as usize, &images).rank();
        c.part(format!("V_{n} spans M_{n}"), rank == (n * n) as usize, rank);
        semisimple += (n * n) as usize;
    }
    let rad = st.radical.dim();
    c.part("radical dim 13 (= 27 - Σ n²)", rad == 13 && rad == h.dim() - semisimple, rad);
    c.part("blocks {9,4,1}", st.block_dims() == vec![9, 4, 1], format!("{:?}", st.block_dims()));
    let shape: Vec<(usize, usize)> = st.pim_classes().iter().map(|p| (p.dim, p.multiplicity)).collect();
    c.part("PIMs 3x3, 2x6, 1x6", shape == vec![(3, 3), (6, 2), (6, 1)], format!("{shape:?}"));
    c
}

fn axioms(h: &Uq) -> Criterion {
    let mut c = Criterion::new();
    for r in h.check_hopf_axioms() {
        c.law(&r);
    }
    for kind in StarKind::ALL {
        for r in StarStructure::builtin(h, kind).check_all(h) {
            c.law(&LawReport { name: format!("{kind}: {}", r.name), ..r });
        }
    }
    c
}

fn form_signatures(h: &Uq, st: &Structure, e: &EmbeddingChoice) -> Criterion {
    let mut c = Criterion::new();
    let table = [
        ("3_irr", Hopf, canon(2, 1, 0)),
        ("6_odd", Hopf, canon(3, 3, 0)),
        ("5_odd", Hopf, canon(2, 2, 1)),
        ("3_odd", Hopf, canon(1, 1, 1)),
        ("6_eve", Hopf, canon(3, 3, 0)),
        ("3_eve", Hopf, canon(1, 0, 2)),
        ("2_eve", Hopf, canon(1, 1, 0)),
        ("3_irr", TwPlus, canon(2, 1, 0)),
        ("3_irr", TwMinus, canon(3, 0, 0)),
        ("6_eve", TwPlus, canon(2, 4, 0)),
        ("6_eve", TwMinus, canon(3, 3, 0)),
        ("2_eve", TwPlus, canon(2, 0, 0)),
        ("2_eve", TwMinus, canon(1, 1, 0)),
        ("3_eve", TwPlus, canon(1, 0, 2)),
        ("3_eve", TwMinus, canon(1, 0, 2)),
        ("3_odd", TwPlus, canon(2, 0, 1)),
        ("3_odd", TwMinus, canon(1, 1, 1)),
    ];
    for (name, kind, want) in table {
        let rep = st.named_module(name).unwrap();
        let sp = solve_forms(h, &rep, &StarStructure::builtin(h, kind));
        let got = sp.generic_signature(e).unwrap();
        c.part(format!("{name} {kind}"), got == want, got);
        if sp.real_dim() == 1 {
            let num = numeric_signature(&sp.basis[0]).canonical();
            c.part(format!("{name} {kind} numeric"), num == want, num);
        }
        if name == "6_odd" {
            c.part("6_odd Witt", got.witt().decomposition == "6 = 3 + 3", got.witt().decomposition);
        }
    }
    c
}

fn real_dims(h: &Uq) -> Criterion {
    let mut c = Criterion::new();
    let reg = regular_representation(h);
    for kind in StarKind::ALL {
        let d = solve_forms(h, &reg, &StarStructure::builtin(h, kind)).real_dim();
        c.part(format!("regular {kind} → 27"), d == 27, d);
    }
    let dbl = DoubleAlgebra::new(h);
    let d = double_forms(h, &dbl.regular(), TwPlus).real_dim();
    c.part("double regular → 54", d == 54, d);
    let plane = QuantumPlane::new(h);
    for (kind, want) in [(Hopf, 1), (TwPlus, 0), (TwMinus, 0)] {
        let d = solve_module_algebra_form(&plane, kind).real_dim();
        c.part(format!("M {kind} → {want}"), d == want, d);
    }
    c
}

fn plane_form(h: &Uq, e: &EmbeddingChoice) -> Criterion {
    let mut c = Criterion::new();
    let plane = QuantumPlane::new(h);
    let sp = solve_module_algebra_form(&plane, Hopf);
    let Some(g) = sp.basis.first() else {
        c.part("a form exists", false, "none");
        return c;
    };
    let bad = plane_support_violations(&plane, g);
    c.part("support r+p = s+t = 2", bad.is_empty(), format!("{bad:?}"));
    let sig = sp.generic_signature(e).unwrap();
    c.part("(5,4,0)", sig == canon(5, 4, 0), sig);
    c.part("numeric (5,4,0)", numeric_signature(g).canonical() == canon(5, 4, 0), numeric_signature(g));
    c.part("Witt 9 = 4 + 4 + 1", sig.witt().decomposition == "9 = 4 + 4 + 1", sig.witt().decomposition);
    c
}

fn killing(st: &Structure, e: &EmbeddingChoice) -> Criterion {
    let mut c = Criterion::new();
    c.law(&check_adjoint_table(&st.h));
    for r in check_killing_identities(st, 100, 0xacce) {
        c.part(format!("{} [{}]", r.name, r.checked), r.passed() && r.checked >= 100, r.failures.len());
    }
    let g = hermitianized_killing(st, Hopf);
    c.part("hermitian", g.is_hermitian(), "");
    c.part("kernel = radical", form_kernel(&g) == st.radical, form_kernel(&g).dim());
    let sig = uqsl2::signature(&g, e).unwrap();
    c.part("signature (8,6,13) up to sign", sig.matches_up_to_sign(&Signature::new(8, 6, 13)), sig);
    let num = numeric_signature(&g);
    c.part("numeric (8,6,13) up to sign", num.matches_up_to_sign(&Signature::new(8, 6, 13)), num);
    c
}

fn integrals(st: &Structure, e: &EmbeddingChoice) -> Criterion {
    let mut c = Criterion::new();
    for r in check_integrals(&st.h) {
        c.law(&r);
    }
    let a = analyze_integral(st, Hopf, e).unwrap();
    c.part("hopf: hermitian", a.gram.hermitian, "");
    let sig = a.gram.signature.unwrap_or_default();
    c.part("hopf: (14,13,0)", sig == Signature::new(14, 13, 0), sig);
    let num = numeric_signature(&integral_gram(&st.h, Hopf));
    c.part("hopf: numeric (14,13,0)", num == Signature::new(14, 13, 0), num);
    let comp = a.complement_signature.unwrap_or_default();
    let blocks: Vec<String> = a.semisimple_block_signatures.iter().map(|(d, s)| format!("{s} on the {d}-dim block ideal")).collect();
    c.part(
        "hopf: positive definite on the Wedderburn complement",
        comp.is_definite() && comp.neg == 0,
        format!("{comp}, with {}", blocks.join(", ")),
    );
    for kind in [TwPlus, TwMinus] {
        let a = analyze_integral(st, kind, e).unwrap();
        let w = a.gram.hermiticity_witness;
        c.part(format!("{kind}: not hermitian, witness"), !a.gram.hermitian && w.is_some(), format!("{w:?}"));
        c.part(format!("{kind}: symmetric in the * ∘ τ real basis"), a.c_real_symmetric == Some(true), "");
    }
    c
}

fn quantum_metric(h: &Uq) -> Criterion {
    let mut c = Criterion::new();
    let fa = FunAlgebra::new(h);
    for kind in StarKind::ALL {
        c.law(&fa.quantum_metric_check(kind));
    }
    c
}

fn tensor(h: &Uq, st: &Structure) -> Criterion {
    let mut c = Criterion::new();
    let names = ["3_irr", "2_eve"];
    for kind in StarKind::ALL {
        for a in names {
            for b in names {
                let (ra, rb) = (st.named_module(a).unwrap(), st.named_module(b).unwrap());
                let ga = some_invariant_form(h, &ra, kind).unwrap();
                let gb = some_invariant_form(h, &rb, kind).unwrap();
                let r = check_star_closure(h, &ra, &ga, &rb, &gb, kind).unwrap();
                if kind.is_twisted() {
                    c.part(format!("{kind} {a}⊗{b} op identity"), r.op_identity.passed(), "");
                    let w = r.plain_failure_witness.clone();
                    c.part(format!("{kind} {a}⊗{b} plain failure witness"), w.is_some(), format!("{w:?}"));
                } else {
                    c.part(format!("{kind} {a}⊗{b} closure"), r.plain.passed(), r.plain.failures.join("; "));
                }
            }
        }
    }
    c
}

fn double(h: &Uq, st: &Structure, e: &EmbeddingChoice) -> Criterion {
    let mut c = Criterion::new();
    let k = DoubleAlgebra::new(h).k_order();
    c.part("K̃ order 2N", k == 2 * h.n(), k);
    let p = sector_pair(st, "3_irr", TwPlus, e).unwrap();
    c.part("3-_irr twisted+ (3,0,0)", p.minus == Some(Signature::new(3, 0, 0)), format!("{:?}", p.minus));
    c.part("3_irr twisted+ (2,1,0)", p.plus == Some(Signature::new(2, 1, 0)), format!("{:?}", p.plus));
    c
}

fn main() -> ExitCode {
    let h = Uq::new(3).unwrap();
    let st = Structure::new(&h).unwrap();
    let e = EmbeddingChoice::default();
    let runs: Vec<(&str, Box<dyn Fn() -> Criterion>)> = vec![
        ("structure of H", Box::new(|| structure(&h, &st))),
        ("Hopf axioms and star laws", Box::new(|| axioms(&h))),
        ("invariant form signatures", Box::new(|| form_signatures(&h, &st, &e))),
        ("solution space dimensions", Box::new(|| real_dims(&h))),
        ("quantum plane form", Box::new(|| plane_form(&h, &e))),
        ("Killing form", Box::new(|| killing(&st, &e))),
        ("integrals and the integral scalar product", Box::new(|| integrals(&st, &e))),
        ("quantum metric", Box::new(|| quantum_metric(&h))),
        ("tensor closure", Box::new(|| tensor(&h, &st))),
        ("double", Box::new(|| double(&h, &st, &e))),
    ];
    let mut failed = 0;
    for (i, (title, f)) in runs.iter().enumerate() {
        let c = f();
        if c.passed() {
            println!("PASS  {:>2}  {title} ({} checks)", i + 1, c.parts.len());
        } else {
            failed += 1;
            let bad: Vec<String> =
                c.parts.iter().filter(|p| !p.1).map(|(w, _, got)| format!("{w}: got {got}")).collect();
            println!("FAIL  {:>2}  {title}: {}", i + 1, bad.join("; "));
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

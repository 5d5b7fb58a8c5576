use serde::Serialize;
use uqsl2::double::{build_double, double_forms, named_double_rep, sector_pair, DoubleAlgebra};
use uqsl2::forms::{check_invariance, plane_support_violations, solve_forms, solve_module_algebra_form};
use uqsl2::killing::{
    analyze, analyze_integral, check_adjoint_table, check_hermitian_killing_invariances, check_integral_coinvariance,
    check_integrals, check_killing_identities, form_kernel, hermitianized_killing,
};
use uqsl2::rep::decompose_module;
use uqsl2::tensor::{check_star_closure, some_invariant_form};
use uqsl2::{
    EmbeddingChoice, Error, FunAlgebra, QuantumPlane, Result, Signature, StarKind, StarStructure, Structure, Uq,
};

use crate::report::{Parameters, Report};

pub struct Ctx {
    pub n: u32,
    pub star: Option<StarKind>,
    pub rep: Option<String>,
    pub with: Option<String>,
    pub analyze: bool,
    pub embedding: EmbeddingChoice,
}

impl Ctx {
    fn star(&self) -> StarKind {
        self.star.unwrap_or(StarKind::HopfSL2R)
    }

    fn stars(&self) -> Vec<StarKind> {
        match self.star {
            Some(s) => vec![s],
            None => StarKind::ALL.to_vec(),
        }
    }

    fn report(&self, command: &str, star: Option<StarKind>) -> Report {
        Report::new(
            command,
            Parameters {
                n: self.n,
                star: star.map(|s| s.cli_name().to_string()),
                rep: self.rep.clone(),
                embedding: self.embedding.k,
            },
        )
    }

    fn uq(&self) -> Result<Uq> {
        Uq::new(self.n)
    }

    fn structure(&self) -> Result<Structure> {
        Structure::new(&self.uq()?)
    }
}

/// Generic signatures at N = 3, compared up to a global sign.
fn expected_signature(name: &str, kind: StarKind) -> Option<Signature> {
    use StarKind::*;
    let s = |p, n, z| Some(Signature::new(p, n, z).canonical());
    match (name, kind) {
        ("3_irr", HopfSL2R) => s(2, 1, 0),
        ("6_odd", HopfSL2R) => s(3, 3, 0),
        ("5_odd", HopfSL2R) => s(2, 2, 1),
        ("3_odd", HopfSL2R) => s(1, 1, 1),
        ("6_eve", HopfSL2R) => s(3, 3, 0),
        ("3_eve", HopfSL2R) => s(1, 0, 2),
        ("2_eve", HopfSL2R) => s(1, 1, 0),
        ("3_irr", TwistedPlus) => s(2, 1, 0),
        ("3_irr", TwistedMinus) => s(3, 0, 0),
        ("6_eve", TwistedPlus) => s(2, 4, 0),
        ("6_eve", TwistedMinus) => s(3, 3, 0),
        ("2_eve", TwistedPlus) => s(2, 0, 0),
        ("2_eve", TwistedMinus) => s(1, 1, 0),
        ("3_eve", TwistedPlus | TwistedMinus) => s(1, 0, 2),
        ("3_odd", TwistedPlus) => s(2, 0, 1),
        ("3_odd", TwistedMinus) => s(1, 1, 1),
        _ => None,
    }
}

fn set_pairs<T: Serialize>(r: &mut Report, pairs: Vec<(&str, T)>) {
    for (k, v) in pairs {
        r.set(k, v);
    }
}

pub fn check_axioms(c: &Ctx) -> Result<Report> {
    let h = c.uq()?;
    let mut r = c.report("check-axioms", c.star);
    r.checks(h.check_hopf_axioms());
    for kind in c.stars() {
        r.checks(StarStructure::builtin(&h, kind).check_all(&h).into_iter().map(|mut l| {
            l.name = format!("[{}] {}", kind.cli_name(), l.name);
            l
        }));
    }
    let fa = FunAlgebra::new(&h);
    r.checks(fa.check_hopf_axioms());
    r.checks(fa.check_duality());
    let plane = QuantumPlane::new(&h);
    r.check(plane.check_module_algebra());
    r.check(plane.check_coaction());
    set_pairs(&mut r, vec![("dim_H", h.dim()), ("dim_F", fa.basis().len()), ("dim_M", plane.dim())]);
    Ok(r)
}

pub fn stars(c: &Ctx) -> Result<Report> {
    let h = c.uq()?;
    let fa = FunAlgebra::new(&h);
    let mut r = c.report("stars", c.star);
    let mut images = serde_json::Map::new();
    for kind in c.stars() {
        let s = StarStructure::builtin(&h, kind);
        let tag = |mut l: uqsl2::LawReport| {
            l.name = format!("[{}] {}", kind.cli_name(), l.name);
            l
        };
        r.checks(s.check_all(&h).into_iter().map(tag));
        r.check(tag(fa.check_star_duality(kind)));
        r.check(tag(fa.quantum_metric_check(kind)));
        let imgs: Vec<String> = s.images.iter().map(|x| h.render(x)).collect();
        images.insert(kind.cli_name().into(), serde_json::json!(imgs));
    }
    r.set("images", images);
    Ok(r)
}

pub fn reps(c: &Ctx) -> Result<Report> {
    let st = c.structure()?;
    let h = &st.h;
    let mut r = c.report("reps", None);
    let classes = st.pim_classes();
    set_pairs(&mut r, vec![("dim", h.dim()), ("radical_dim", st.radical.dim())]);
    r.set("block_dims", st.block_dims());
    r.set("pim_classes", &classes);
    if c.n == 3 {
        r.expect("dim H = 27", h.dim() == 27, || format!("{}", h.dim()));
        r.expect("radical dim = 13", st.radical.dim() == 13, || format!("{}", st.radical.dim()));
        r.expect("block dims {9, 4, 1}", st.block_dims() == vec![9, 4, 1], || format!("{:?}", st.block_dims()));
        let shape: Vec<(usize, usize)> = classes.iter().map(|p| (p.dim, p.multiplicity)).collect();
        r.expect("PIMs 3 x 3_irr, 2 x 6_eve, 1 x 6_odd", shape == vec![(3, 3), (6, 2), (6, 1)], || format!("{shape:?}"));
    }
    if let Some(name) = &c.rep {
        let rep = st.named_module(name)?;
        r.check(rep.check_relations(h));
        r.set("rep", rep.report());
        r.set("indecomposable", st.is_indecomposable(&rep));
        r.set("irreducible", st.is_irreducible(&rep));
        r.set("module_radical_dim", st.module_radical(&rep).dim());
        r.set("socle_dim", st.socle(&rep).dim());
        let pim_index = match name.as_str() {
            "6_odd" if c.n == 3 => Some(1),
            "6_eve" if c.n == 3 => Some(2),
            s => s.strip_prefix('P').and_then(|k| k.parse::<u32>().ok()),
        };
        if let Some(p) = pim_index.filter(|p| (1..c.n).contains(p)) {
            let lat = st.lattice(&st.pim(p), &h.field().zero())?;
            r.set("lattice_chain", lat.chain_dims());
        }
        if c.analyze {
            let parts = decompose_module(&st, &rep)?;
            let dims: Vec<(usize, bool)> = parts.iter().map(|s| (s.dim, s.irreducible)).collect();
            r.set("decomposition", dims);
        }
    }
    Ok(r)
}

pub fn forms(c: &Ctx) -> Result<Report> {
    let st = c.structure()?;
    let h = &st.h;
    let kind = c.star();
    let name = c.rep.clone().unwrap_or_else(|| "3_irr".into());
    let mut r = c.report("forms", Some(kind));
    r.parameters.rep = Some(name.clone());
    let rep = st.named_module(&name)?;
    let star = StarStructure::builtin(h, kind);
    let space = solve_forms(h, &rep, &star);
    let mut inv = uqsl2::LawReport::new("Σ ‖(S h₁)*‖† G ‖h₂‖ = ε(h) G on each basis form");
    let probes = [h.xp(), h.xm(), h.k(), h.mul(&h.xp(), &h.xm())];
    for g in &space.basis {
        for x in &probes {
            inv.record(check_invariance(h, &rep, &star, g, x), || format!("on {}", h.render(x)));
        }
    }
    if !space.basis.is_empty() {
        r.check(inv);
    }
    let report = space.report(&c.embedding)?;
    if c.n == 3 {
        if let Some(want) = expected_signature(&name, kind) {
            r.expect(format!("generic signature {want} up to sign"), report.signature.matches_up_to_sign(&want), || {
                format!("got {}", report.signature)
            });
        }
        if name == "regular" {
            r.expect("real dimension 27", report.real_dim == 27, || format!("got {}", report.real_dim));
        }
    }
    if c.analyze {
        let range: Vec<String> = space.signature_range(&c.embedding, 24)?.iter().map(|s| s.to_string()).collect();
        r.set("signature_range", range);
    }
    set_pairs(&mut r, vec![("real_dim", serde_json::json!(report.real_dim))]);
    r.set("signature", report.signature.to_string());
    r.set("witt", &report.witt.decomposition);
    r.set("form", &report);
    Ok(r)
}

pub fn plane(c: &Ctx) -> Result<Report> {
    let h = c.uq()?;
    let kind = c.star();
    let plane = QuantumPlane::new(&h);
    let mut r = c.report("plane", Some(kind));
    r.check(plane.check_module_algebra());
    r.check(plane.check_coaction());
    r.check(plane.check_matrix_algebra());
    r.check(plane.check_star_relations(kind));
    r.check(plane.check_star_compat(kind, kind)?);
    let space = solve_module_algebra_form(&plane, kind);
    let report = space.report(&c.embedding)?;
    r.set("real_dim", report.real_dim);
    if kind.is_twisted() {
        r.expect("no invariant module-algebra form", report.real_dim == 0, || format!("real dim {}", report.real_dim));
    } else {
        r.expect("real dimension 1", report.real_dim == 1, || format!("got {}", report.real_dim));
        if let Some(g) = space.basis.first() {
            let bad = plane_support_violations(&plane, g);
            r.expect("support r + p = s + t = N - 1", bad.is_empty(), || format!("{bad:?}"));
            r.set("signature", report.signature.to_string());
            r.set("witt", &report.witt.decomposition);
            if c.n == 3 {
                r.expect("signature (5,4,0) up to sign", report.signature.matches_up_to_sign(&Signature::new(5, 4, 0)), || {
                    format!("got {}", report.signature)
                });
            }
        }
    }
    r.set("form", &report);
    if c.analyze {
        let st = Structure::new(&h)?;
        let dims: Vec<(usize, bool)> = plane.decompose(&st)?.iter().map(|s| (s.dim, s.irreducible)).collect();
        r.set("decomposition", dims);
    }
    Ok(r)
}

pub fn killing(c: &Ctx) -> Result<Report> {
    let st = c.structure()?;
    let kind = c.star();
    let mut r = c.report("killing", Some(kind));
    r.check(check_adjoint_table(&st.h));
    r.checks(check_killing_identities(&st, 100, 0xad));
    if !kind.is_twisted() {
        r.checks(check_hermitian_killing_invariances(&st, 30, 0xbe));
    }
    let g = hermitianized_killing(&st, kind);
    let a = analyze(&g, kind, &c.embedding)?;
    if kind.is_twisted() {
        r.expect("hermitianized Killing form is not hermitian", !a.hermitian && a.hermiticity_witness.is_some(), || {
            "hermitian".into()
        });
    } else {
        r.expect("hermitian", a.hermitian, || format!("{:?}", a.hermiticity_witness));
        r.expect("kernel = Jacobson radical", form_kernel(&g) == st.radical, || format!("kernel dim {}", a.kernel_dim));
        if c.n == 3 {
            let ok = a.rank == 14 && a.signature.is_some_and(|s| s.matches_up_to_sign(&Signature::new(8, 6, 13)));
            r.expect("rank 14, signature (8,6,13) up to sign", ok, || format!("{:?}", a.signature));
        }
    }
    r.set("gram", &a);
    Ok(r)
}

pub fn integral(c: &Ctx) -> Result<Report> {
    let st = c.structure()?;
    let kind = c.star();
    let mut r = c.report("integral", Some(kind));
    r.checks(check_integrals(&st.h));
    r.check(check_integral_coinvariance(&st, kind, 20, 0x1f));
    if c.analyze {
        let a = analyze_integral(&st, kind, &c.embedding)?;
        if kind.is_twisted() {
            r.expect("not hermitian, with a witness", !a.gram.hermitian && a.gram.hermiticity_witness.is_some(), || {
                "hermitian".into()
            });
            r.expect("symmetric in the * ∘ τ real basis", a.c_real_symmetric == Some(true), || "not symmetric".into());
            r.expect("nondegenerate", a.gram.rank == st.h.dim(), || format!("rank {}", a.gram.rank));
        } else {
            r.expect("hermitian", a.gram.hermitian, || format!("{:?}", a.gram.hermiticity_witness));
            r.expect("∫_L(X*) = conj ∫_L(X)", a.star_reality == Some(true), || "fails".into());
            if c.n == 3 {
                r.expect("signature (14,13,0)", a.gram.signature == Some(Signature::new(14, 13, 0)), || {
                    format!("{:?}", a.gram.signature)
                });
            }
            if let Some(s) = a.complement_signature {
                r.set("complement_signature", s.to_string());
                if !s.is_definite() {
                    r.notes.push(format!(
                        "restricted to the Wedderburn complement the form has signature {s}, so it is not positive definite there"
                    ));
                }
            }
            if let Some(s) = a.gram.signature {
                r.set("signature", s.to_string());
            }
        }
        r.set("analysis", &a);
    }
    Ok(r)
}

pub fn tensor(c: &Ctx) -> Result<Report> {
    let st = c.structure()?;
    let h = &st.h;
    let kind = c.star();
    let mut r = c.report("tensor", Some(kind));
    let pairs: Vec<(String, String)> = match (&c.rep, &c.with) {
        (Some(a), Some(b)) => vec![(a.clone(), b.clone())],
        (Some(a), None) => vec![(a.clone(), a.clone())],
        _ => {
            let names = ["3_irr", "2_eve"];
            names.iter().flat_map(|a| names.iter().map(move |b| (a.to_string(), b.to_string()))).collect()
        }
    };
    let mut out = Vec::new();
    for (a, b) in pairs {
        let (ra, rb) = (st.named_module(&a)?, st.named_module(&b)?);
        let missing = || Error::PreconditionFailed(format!("no invariant form for {kind}"));
        let ga = some_invariant_form(h, &ra, kind).ok_or_else(missing)?;
        let gb = some_invariant_form(h, &rb, kind).ok_or_else(missing)?;
        let cr = check_star_closure(h, &ra, &ga, &rb, &gb, kind)?;
        let tag = format!("[{a} ⊗ {b}]");
        if kind.is_twisted() {
            let mut op = cr.op_identity.clone();
            op.name = format!("{tag} {}", op.name);
            r.check(op);
            r.expect(format!("{tag} plain closure fails"), cr.plain_failure_witness.is_some(), || "it holds".into());
        } else {
            let mut p = cr.plain.clone();
            p.name = format!("{tag} {}", p.name);
            r.check(p);
        }
        out.push(cr);
    }
    r.set("pairs", out);
    Ok(r)
}

pub fn double(c: &Ctx) -> Result<Report> {
    let st = c.structure()?;
    let h = &st.h;
    let kind = c.star();
    let alg = DoubleAlgebra::new(h);
    let mut r = c.report("double", Some(kind));
    r.check(alg.check_relations());
    r.check(alg.check_star(kind));
    let span = alg.span_dim();
    let want = 2 * h.dim();
    r.expect(format!("dim = 2 N^3 = {want}"), span == want, || format!("got {span}"));
    set_pairs(&mut r, vec![("k_order", alg.k_order() as usize), ("dim", span)]);
    if c.n == 3 {
        let (_, reps) = build_double(&st)?;
        let mut rel = uqsl2::LawReport::new("relations on the named representations, K^N = ω");
        for d in &reps {
            let ok = d.check_relations(h).passed() && d.as_h_representation().check_relations(h).passed() == (d.omega == 1);
            rel.record(ok, || d.name.clone());
        }
        r.check(rel);
        r.set("representations", reps.iter().map(|d| (d.name.clone(), d.dim(), d.omega)).collect::<Vec<_>>());
        let mut pairs = Vec::new();
        for name in ["3_irr", "2_eve"] {
            pairs.push(sector_pair(&st, name, kind, &c.embedding)?);
        }
        if kind.is_twisted() {
            let p = &pairs[0];
            let (a, b) = if kind == StarKind::TwistedPlus {
                (Signature::new(2, 1, 0), Signature::new(3, 0, 0))
            } else {
                (Signature::new(3, 0, 0), Signature::new(2, 1, 0))
            };
            r.expect(format!("3_irr {a} and 3-_irr {b}"), p.plus == Some(a) && p.minus == Some(b), || {
                format!("{:?} / {:?}", p.plus, p.minus)
            });
        }
        r.set("sectors", pairs);
    }
    if let Some(name) = &c.rep {
        let d = named_double_rep(&st, name)?;
        let space = double_forms(h, &d, kind);
        let rep = space.report(&c.embedding)?;
        if d.name == "regular~" {
            r.expect(format!("real dimension {want}"), rep.real_dim == want, || format!("got {}", rep.real_dim));
        }
        r.set("real_dim", rep.real_dim);
        r.set("signature", rep.signature.to_string());
        if d.dim() <= 12 {
            r.set("form", &rep);
        }
    }
    Ok(r)
}

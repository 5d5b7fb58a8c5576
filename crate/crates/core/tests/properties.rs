use std::sync::OnceLock;

use proptest::prelude::*;
use uqsl2::fun::FunAlgebra;
use uqsl2::rep::regular_representation;
use uqsl2::{
    signature, CycloNum, EmbeddingChoice, Field, HElement, Matrix, PbwMonomial, QuantumPlane, Representation, Signature,
    StarKind, StarStructure, Uq,
};

fn h3() -> &'static Uq {
    static H: OnceLock<Uq> = OnceLock::new();
    H.get_or_init(|| Uq::new(3).unwrap())
}

fn reg3() -> &'static Representation {
    static R: OnceLock<Representation> = OnceLock::new();
    R.get_or_init(|| regular_representation(h3()))
}

fn num(f: &Field, coeffs: &[i64], den: i64) -> CycloNum {
    let mut x = f.zero();
    for (j, c) in coeffs.iter().enumerate() {
        x += &(&f.from_int(*c) * &f.q_pow(j as i64));
    }
    &x * &f.from_ratio(1, den).unwrap()
}

fn cyclo(n: u32) -> impl Strategy<Value = CycloNum> {
    (prop::collection::vec(-6i64..=6, n as usize), 1i64..=4).prop_map(move |(c, d)| num(&Field::new(n).unwrap(), &c, d))
}

fn helement() -> impl Strategy<Value = HElement> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), prop::collection::vec(-3i64..=3, 2)), 1..4).prop_map(|terms| {
        let f = h3().field();
        let mut x = HElement::zero();
        for ((a, b, c), co) in terms {
            x.add_term(PbwMonomial::new(a, b, c), num(f, &co, 1));
        }
        x
    })
}

fn star_kind() -> impl Strategy<Value = StarKind> {
    prop::sample::select(StarKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms((x, y, z) in prop::sample::select(vec![3u32, 5, 7]).prop_flat_map(|n| (cyclo(n), cyclo(n), cyclo(n)))) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_a_field_involution(x in cyclo(3), y in cyclo(3)) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        let f = x.field().clone();
        let split = &x.re() + &(&f.theta() * &x.im_theta());
        prop_assert_eq!(split, x.clone());
        prop_assert!(x.re().is_real() && x.im_theta().is_real());
    }

    #[test]
    fn exact_sign_agrees_with_floats(x in cyclo(5)) {
        let r = &x + &x.conj();
        let (v, _) = r.to_complex(1);
        let s = r.sign_real(&EmbeddingChoice::default()).unwrap();
        if r.is_zero() {
            prop_assert_eq!(s, 0);
        } else if v.abs() > 1e-9 {
            prop_assert_eq!(s as f64, v.signum());
        }
    }

    #[test]
    fn product_is_associative(x in helement(), y in helement(), z in helement()) {
        let h = h3();
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
    }

    #[test]
    fn coproduct_counit_antipode_are_morphisms(x in helement(), y in helement()) {
        let h = h3();
        let xy = h.mul(&x, &y);
        prop_assert_eq!(h.coproduct(&xy), h.tensor_mul(&h.coproduct(&x), &h.coproduct(&y)));
        prop_assert_eq!(h.counit(&xy), &h.counit(&x) * &h.counit(&y));
        prop_assert_eq!(h.antipode(&xy), h.mul(&h.antipode(&y), &h.antipode(&x)));
    }

    #[test]
    fn stars_are_antimultiplicative_involutions(kind in star_kind(), x in helement(), y in helement()) {
        let h = h3();
        let s = StarStructure::builtin(h, kind);
        prop_assert_eq!(s.apply(h, &s.apply(h, &x)), x.clone());
        prop_assert_eq!(s.apply(h, &h.mul(&x, &y)), h.mul(&s.apply(h, &y), &s.apply(h, &x)));
        let expected = match kind {
            StarKind::HopfSL2R => s.apply_tensor(h, &h.coproduct(&x)),
            _ => s.apply_tensor(h, &h.coproduct_op(&x)),
        };
        prop_assert_eq!(h.coproduct(&s.apply(h, &x)), expected);
    }

    #[test]
    fn regular_representation_is_multiplicative(x in helement(), y in helement()) {
        let h = h3();
        let r = reg3();
        prop_assert_eq!(r.act(h, &h.mul(&x, &y)), r.act(h, &x).mul(&r.act(h, &y)));
    }

    #[test]
    fn pairing_turns_products_into_coproducts(x in helement(), i in 0usize..27, j in 0usize..27) {
        let h = h3();
        let fa = FunAlgebra::new(h);
        let (f, g) = (fa.basis()[i], fa.basis()[j]);
        let (fe, ge) = (fa.mono(f.i, f.j, f.k), fa.mono(g.i, g.j, g.k));
        // ⟨fg, x⟩ = ⟨f, x₁⟩⟨g, x₂⟩
        let lhs = fa.pairing(&fa.mul(&fe, &ge), &x);
        let mut rhs = h.field().zero();
        for ((m1, m2), c) in h.coproduct(&x).terms() {
            let a = fa.pairing(&fe, &h.mono(m1.a, m1.b, m1.c));
            let b = fa.pairing(&ge, &h.mono(m2.a, m2.b, m2.c));
            rhs += &(&(c * &a) * &b);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn plane_is_a_module_algebra(x in helement(), r in 0u32..3, s in 0u32..3, p in 0u32..3, t in 0u32..3) {
        let h = h3();
        let m = QuantumPlane::new(h);
        let (z, w) = (m.mono(r, s), m.mono(p, t));
        let lhs = m.act_left(&x, &m.mul(&z, &w));
        let mut rhs = uqsl2::MElement::zero();
        for ((m1, m2), c) in h.coproduct(&x).terms() {
            let a = m.act_left(&h.mono(m1.a, m1.b, m1.c), &z);
            let b = m.act_left(&h.mono(m2.a, m2.b, m2.c), &w);
            rhs = rhs.add(&m.mul(&a, &b).scale(c));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sylvester_inertia(diag in prop::collection::vec(-3i64..=3, 1..6), upper in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 15)) {
        let f = Field::new(3).unwrap();
        let d = diag.len();
        let dm = Matrix::from_fn(&f, d, d, |i, j| if i == j { f.from_int(diag[i]) } else { f.zero() });
        // unit upper triangular change of basis with entries in Z[q]
        let mut k = 0;
        let p = Matrix::from_fn(&f, d, d, |i, j| {
            if i == j {
                f.one()
            } else if i < j {
                k += 1;
                num(&f, &upper[(k - 1) % upper.len()], 1)
            } else {
                f.zero()
            }
        });
        let g = p.dagger().mul(&dm).mul(&p);
        let pos = diag.iter().filter(|v| **v > 0).count();
        let neg = diag.iter().filter(|v| **v < 0).count();
        prop_assert_eq!(signature(&g, &EmbeddingChoice::default()).unwrap(), Signature::new(pos, neg, d - pos - neg));
    }
}

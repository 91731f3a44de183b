use super::*;
use proptest::prelude::*;

fn ring(field: FieldSpec, n: usize) -> Ring {
    Ring::projective(field, n).unwrap()
}

fn x(r: Ring, i: usize) -> Polynomial {
    Polynomial::var(r, i).unwrap()
}

fn k(r: Ring, v: i64) -> FieldElem {
    r.field().from_i64(v)
}

fn hf_count(gb: &GroebnerBasis, d: u32) -> usize {
    crate::poly::terms_of_degree(gb.ring(), d)
        .iter()
        .filter(|t| !gb.lead_divides(t))
        .count()
}

#[test]
fn already_reduced_basis_is_kept() {
    let r = ring(FieldSpec::Rationals, 2);
    let gens = vec![x(r, 1).sub(&x(r, 0)).unwrap(), x(r, 2)];
    let gb = buchberger(r, &gens, MonomialOrder::DegRevLex).unwrap();
    let mut got = gb.polys().to_vec();
    got.sort_by(|a, b| a.to_string().cmp(&b.to_string()));
    let mut want = gens.clone();
    want.sort_by(|a, b| a.to_string().cmp(&b.to_string()));
    // X1 - X0 has leading term X0 in DegRevLex, so its monic form is X0 - X1.
    assert_eq!(got.len(), 2);
    assert!(got.contains(&x(r, 2)));
    assert!(got.contains(&x(r, 0).sub(&x(r, 1)).unwrap()));
}

#[test]
fn s_polynomial_chain_produces_cubic() {
    let r = ring(FieldSpec::Rationals, 2);
    let f1 = x(r, 1).pow(2).unwrap();
    let f2 = x(r, 1).mul(&x(r, 2)).unwrap().sub(&x(r, 2).pow(2).unwrap()).unwrap();
    let gb = buchberger(r, &[f1, f2], MonomialOrder::DegRevLex).unwrap();
    let x2_cubed = x(r, 2).pow(3).unwrap();
    assert!(gb.polys().contains(&x2_cubed));
    assert!(gb.normal_form(&x2_cubed).is_zero());
    assert!(gb.is_consistent());
}

#[test]
fn f3_complete_intersection_has_expected_hilbert_function() {
    let r = ring(FieldSpec::prime(3).unwrap(), 2);
    let g1 = x(r, 1).pow(2).unwrap().add(&x(r, 2).pow(2).unwrap()).unwrap();
    let g2 = x(r, 0)
        .mul(&x(r, 1).pow(2).unwrap())
        .unwrap()
        .add(&x(r, 1).pow(3).unwrap())
        .unwrap()
        .add(&x(r, 2).pow(3).unwrap())
        .unwrap();
    let gb = buchberger(r, &[g1, g2], MonomialOrder::DegRevLex).unwrap();
    let hf: Vec<usize> = (0..5).map(|d| hf_count(&gb, d)).collect();
    assert_eq!(hf, vec![1, 3, 5, 6, 6]);
}

#[test]
fn normal_form_examples() {
    let r = ring(FieldSpec::Rationals, 2);
    let gb = buchberger(r, &[x(r, 1)], MonomialOrder::DegRevLex).unwrap();
    assert!(gb.normal_form(&x(r, 1).pow(2).unwrap()).is_zero());
    let f = x(r, 1).add(&x(r, 2)).unwrap();
    assert_eq!(gb.normal_form(&f), x(r, 2));
}

#[test]
fn normal_form_keeps_rational_scale() {
    let r = ring(FieldSpec::Rationals, 2);
    let half = FieldSpec::Rationals.parse_elem("1/2").unwrap();
    let gb = buchberger(r, &[x(r, 1).sub(&x(r, 2).scale(&k(r, 3))).unwrap()], MonomialOrder::DegRevLex).unwrap();
    // x1/2 ≡ 3/2 x2
    let nf = gb.normal_form(&x(r, 1).scale(&half));
    assert_eq!(nf, x(r, 2).scale(&FieldSpec::Rationals.parse_elem("3/2").unwrap()));
}

#[test]
fn intersection_examples() {
    let r = ring(FieldSpec::Rationals, 2);
    let i = Ideal::new(r, vec![x(r, 1)]).unwrap();
    let j = Ideal::new(r, vec![x(r, 2)]).unwrap();
    let ij = intersect(&i, &j).unwrap();
    assert_eq!(ij.gb().polys(), &[x(r, 1).mul(&x(r, 2)).unwrap()]);
    let p = Ideal::new(r, vec![x(r, 1).sub(&x(r, 0)).unwrap(), x(r, 2)]).unwrap();
    assert!(intersect(&p, &p).unwrap().same_as(&p));
}

#[test]
fn coordinate_points_intersection() {
    let r = ring(FieldSpec::Rationals, 2);
    let pt = |a: usize, b: usize| Ideal::new(r, vec![x(r, a), x(r, b)]).unwrap();
    let i = intersect(&intersect(&pt(1, 2), &pt(0, 2)).unwrap(), &pt(0, 1)).unwrap();
    let want = Ideal::new(
        r,
        vec![
            x(r, 0).mul(&x(r, 1)).unwrap(),
            x(r, 0).mul(&x(r, 2)).unwrap(),
            x(r, 1).mul(&x(r, 2)).unwrap(),
        ],
    )
    .unwrap();
    assert!(i.same_as(&want));
}

#[test]
fn ideal_power_examples() {
    let a = Ring::affine(FieldSpec::Rationals, 2).unwrap();
    let m = Ideal::new(a, vec![x(a, 1), x(a, 2)]).unwrap();
    let m2 = ideal_power(&m, 2).unwrap();
    let want = Ideal::new(
        a,
        vec![x(a, 1).pow(2).unwrap(), x(a, 1).mul(&x(a, 2)).unwrap(), x(a, 2).pow(2).unwrap()],
    )
    .unwrap();
    assert!(m2.same_as(&want));
    assert!(ideal_power(&m, 1).unwrap().same_as(&m));

    let r = ring(FieldSpec::Rationals, 2);
    let p = Ideal::new(r, vec![x(r, 1).sub(&x(r, 0)).unwrap(), x(r, 2)]).unwrap();
    let p2 = ideal_power(&p, 2).unwrap();
    let hf: Vec<usize> = (0..5).map(|d| hf_count(p2.gb(), d)).collect();
    assert_eq!(hf, vec![1, 3, 3, 3, 3]);
}

#[test]
fn saturation_examples() {
    let r = ring(FieldSpec::Rationals, 2);
    let i = Ideal::new(r, vec![x(r, 0).mul(&x(r, 1)).unwrap()]).unwrap();
    let s = saturate(&i, &x(r, 0)).unwrap();
    assert!(s.same_as(&Ideal::new(r, vec![x(r, 1)]).unwrap()));
    let s2 = saturate(&s, &x(r, 0)).unwrap();
    assert!(s2.same_as(&s));
    // The iterated-colon path agrees with the reverse-lex path.
    let it = saturate_iterated(&i.as_submodule(), &x(r, 0)).unwrap();
    let it = Ideal::new(r, it.generators().iter().map(|g| g.coord(0)).collect()).unwrap();
    assert!(it.same_as(&s));
}

#[test]
fn colon_by_non_variable() {
    let r = ring(FieldSpec::Rationals, 2);
    let f = x(r, 1).add(&x(r, 2)).unwrap();
    let i = Ideal::new(r, vec![f.mul(&x(r, 0)).unwrap(), x(r, 1).pow(3).unwrap()]).unwrap();
    let c = colon(&i, &f).unwrap();
    assert!(c.contains(&x(r, 0)));
    for g in c.generators() {
        assert!(i.contains(&g.mul(&f).unwrap()));
    }
}

#[test]
fn module_examples() {
    let r = ring(FieldSpec::Rationals, 1);
    let f = GradedFreeModule::new(r, vec![0, 0]);
    let v = ModuleElement::single(1, x(r, 1));
    let n = Submodule::new(f, vec![v.clone()]).unwrap();
    assert_eq!(n.gb().elements(), &[v]);

    let syz = polynomial_syzygies(r, &[x(r, 0), x(r, 1)]).unwrap();
    let gb = syz.gb();
    assert_eq!(gb.elements().len(), 1);
    let s = &gb.elements()[0];
    let want = ModuleElement::new(r, vec![(0, x(r, 1)), (1, x(r, 0).neg())]).unwrap();
    assert!(s == &want || s == &want.neg());

    let single = polynomial_syzygies(r, &[x(r, 0).pow(2).unwrap()]).unwrap();
    assert!(single.gb().elements().is_empty());
}

#[test]
fn syzygies_of_square_of_maximal_ideal() {
    let a = Ring::affine(FieldSpec::Rationals, 2).unwrap();
    let gens = [x(a, 1).pow(2).unwrap(), x(a, 1).mul(&x(a, 2)).unwrap(), x(a, 2).pow(2).unwrap()];
    let syz = polynomial_syzygies(a, &gens).unwrap();
    let s1 = ModuleElement::new(a, vec![(0, x(a, 2)), (1, x(a, 1).neg())]).unwrap();
    let s2 = ModuleElement::new(a, vec![(1, x(a, 2)), (2, x(a, 1).neg())]).unwrap();
    assert!(syz.contains(&s1) && syz.contains(&s2));
    let expected = Submodule::new(syz.module().clone(), vec![s1, s2]).unwrap();
    assert!(expected.same_as(&syz));
    // Every generator really is a relation.
    for s in syz.generators() {
        let mut acc = Polynomial::zero(a);
        for (j, p) in s.coords() {
            acc = acc.add(&p.mul(&gens[*j]).unwrap()).unwrap();
        }
        assert!(acc.is_zero());
    }
}

#[test]
fn module_saturation_paths_agree() {
    let r = ring(FieldSpec::Rationals, 2);
    let f = GradedFreeModule::new(r, vec![1, 1]);
    let gens = vec![
        ModuleElement::new(r, vec![(0, x(r, 0).mul(&x(r, 1)).unwrap()), (1, x(r, 0).mul(&x(r, 2)).unwrap())]).unwrap(),
        ModuleElement::single(1, x(r, 0).pow(2).unwrap().mul(&x(r, 1)).unwrap()),
        ModuleElement::single(0, x(r, 2).pow(2).unwrap()),
    ];
    let n = Submodule::new(f, gens).unwrap();
    let a = saturate_by_x0(&n).unwrap();
    let b = saturate_iterated(&n, &x(r, 0)).unwrap();
    assert!(a.same_as(&b));
    let v = ModuleElement::new(r, vec![(0, x(r, 1)), (1, x(r, 2))]).unwrap();
    assert!(a.contains(&v));
    assert!(!n.contains(&v));
}

fn arb_poly(r: Ring, maxdeg: u32) -> impl Strategy<Value = Polynomial> {
    let n = r.n();
    proptest::collection::vec((proptest::collection::vec(0u32..=maxdeg, n + 1), -4i64..5), 1..4).prop_map(
        move |ts| {
            let terms = ts
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= maxdeg)
                .map(|(e, c)| (Term::from_exponents(&e).unwrap(), r.field().from_i64(c)))
                .collect();
            Polynomial::from_terms(r, terms)
        },
    )
}

fn small_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::prime(7).unwrap())]
}

fn homogeneous_part(f: &Polynomial) -> Polynomial {
    match f.degree() {
        None => f.clone(),
        Some(d) => Polynomial::from_terms(*f.ring(), f.terms().iter().filter(|(t, _)| t.degree() == d).cloned().collect()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn buchberger_criterion_holds(field in small_field(), seeds in proptest::collection::vec(arb_poly(ring(FieldSpec::Rationals, 2), 3), 1..4)) {
        let r = ring(field, 2);
        let gens: Vec<Polynomial> = seeds.iter().map(|f| Polynomial::from_terms(r, f.terms().iter().map(|(t, c)| (*t, field.parse_elem(&c.to_string()).unwrap())).collect())).collect();
        let ideal = Ideal::new(r, gens.clone()).unwrap();
        let gb = ideal.gb();
        prop_assert!(gb.is_consistent());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        for p in gb.polys() {
            prop_assert!(ideal.contains(p));
        }
    }

    #[test]
    fn membership_of_combinations(seeds in proptest::collection::vec(arb_poly(ring(FieldSpec::Rationals, 2), 2), 2..4), mult in arb_poly(ring(FieldSpec::Rationals, 2), 2)) {
        let r = ring(FieldSpec::Rationals, 2);
        let ideal = Ideal::new(r, seeds.clone()).unwrap();
        let combo = seeds[0].mul(&mult).unwrap().add(&seeds[1]).unwrap();
        prop_assert!(ideal.contains(&combo));
        // Linearity and idempotence of the normal form.
        let gb = ideal.gb();
        let nf = gb.normal_form(&mult);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        let sum = gb.normal_form(&mult.add(&combo).unwrap());
        prop_assert_eq!(sum, nf);
    }

    #[test]
    fn homogeneous_input_gives_homogeneous_basis(seeds in proptest::collection::vec(arb_poly(ring(FieldSpec::Rationals, 2), 3), 1..4)) {
        let r = ring(FieldSpec::Rationals, 2);
        let gens: Vec<Polynomial> = seeds.iter().map(homogeneous_part).collect();
        let ideal = Ideal::new(r, gens).unwrap();
        for p in ideal.gb().polys() {
            prop_assert!(p.is_homogeneous());
        }
    }

    #[test]
    fn intersection_contracts(a in proptest::collection::vec(arb_poly(ring(FieldSpec::Rationals, 2), 2), 1..3), b in proptest::collection::vec(arb_poly(ring(FieldSpec::Rationals, 2), 2), 1..3)) {
        let r = ring(FieldSpec::Rationals, 2);
        let i = Ideal::new(r, a).unwrap();
        let j = Ideal::new(r, b).unwrap();
        let ij = intersect(&i, &j).unwrap();
        for g in ij.generators() {
            prop_assert!(i.contains(g));
            prop_assert!(j.contains(g));
        }
        for g in i.product(&j).unwrap().generators() {
            prop_assert!(ij.contains(g));
        }
    }

    #[test]
    fn saturation_is_saturated(a in proptest::collection::vec(arb_poly(ring(FieldSpec::Rationals, 2), 3), 1..3), g in arb_poly(ring(FieldSpec::Rationals, 2), 2)) {
        let r = ring(FieldSpec::Rationals, 2);
        let i = Ideal::new(r, a.iter().map(|f| homogeneous_part(f).mul(&x(r, 0)).unwrap()).collect()).unwrap();
        let s = saturate(&i, &x(r, 0)).unwrap();
        let x0g = x(r, 0).mul(&g).unwrap();
        prop_assert_eq!(s.contains(&x0g), s.contains(&g));
        prop_assert!(i.is_subset_of(&s));
    }
}

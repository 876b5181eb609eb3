use super::*;
use crate::hallalg::CfAlgebra;
use crate::hallnum::TableConfig;
use crate::quiver::{DimVec, Quiver};
use crate::report::Status;
use std::sync::OnceLock;

fn a2() -> &'static HallTable {
    static T: OnceLock<HallTable> = OnceLock::new();
    T.get_or_init(|| HallTable::build(&Quiver::linear(2), &DimVec(vec![2, 2]), &TableConfig::default()).unwrap())
}

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

#[test]
fn products_on_a2() {
    let a = SfAlgebra::new(a2()).unwrap();
    let (v1, v2) = (a.parse("s[[1,0]]").unwrap(), a.parse("s[[0,1]]").unwrap());
    assert_eq!(a.render(&a.mult(&v2, &v1).unwrap()), "(L-1)*s[[1,1]] + s[[1,0],[0,1]]");
    assert_eq!(a.render(&a.mult(&v1, &v2).unwrap()), "s[[1,0],[0,1]]");
    let f = a.parse("L*s[[1,1]] - 2*dbar[[1,0]]").unwrap();
    assert_eq!(a.mult(&a.one(), &f).unwrap(), f);
    assert_eq!(a.mult(&f, &a.one()).unwrap(), f);
    // #Aut(V₁) = ℓ - 1
    assert_eq!(a.parse("dbar[[1,0]]").unwrap(), SFElem::term(a.table().simple(0).unwrap(), rf("1/(L-1)")));
    assert_eq!(a.render_dbar(&a.dbar(2)), format!("dbar{}", a.table().label(2)));
    assert!(matches!(a.parse("s[[3,0]]"), Err(Error::Bound(_))));
    let big = a.parse("s[[1,1],[1,1]]").unwrap();
    assert!(matches!(a.mult(&big, &v1), Err(Error::Bound(_))));
}

#[test]
fn dbar_constants_are_hall_polynomials() {
    let t = a2();
    let a = SfAlgebra::new(t).unwrap();
    let g = t.specialize_generic();
    for (&(x, y, z), c) in a.constants() {
        let d = c.mul(a.aut(z)).div(&a.aut(x).mul(a.aut(y))).unwrap();
        assert_eq!(d, g.hall[&(x, y, z)]);
    }
}

#[test]
fn corrupted_tables_are_rejected() {
    let mut t = a2().clone();
    let k = *t.ext.keys().find(|k| k.0 != k.1 && !t.classes[k.0].is_zero() && !t.classes[k.1].is_zero()).unwrap();
    t.ext.insert(k, crate::hallnum::CountPoly::from_i64s(&[7]));
    assert!(matches!(SfAlgebra::new(&t), Err(Error::Consistency(_))));
}

#[test]
fn suites_pass_on_a2() {
    let t = a2();
    let a = SfAlgebra::new(t).unwrap();
    let cf = CfAlgebra::new(t);
    for rep in [
        assoc_check(&a).unwrap(),
        lambda_circ_check(&a).unwrap(),
        degeneration_check(&a, &cf).unwrap(),
        phi_check(&a).unwrap(),
        integral_identity_check(&a, &IntegralMode::Pair).unwrap(),
    ] {
        assert!(rep.ok() && rep.count(Status::Pass) == 1, "{rep:?}");
    }
    let span = composition_span(&a, &DimVec(vec![2, 2])).unwrap();
    assert!(span.ok() && span.count(Status::Pass) == 8, "{span:?}");
    let (i, d) = (&span.checks[0], &span.checks[3]);
    assert_eq!((i.name.as_str(), i.detail["rank"].as_u64()), ("span[0,1]", Some(1)));
    assert_eq!((d.name.as_str(), d.detail["rank"].as_u64()), ("span[1,1]", Some(2)));
}

#[test]
fn quantum_serre() {
    let t = a2();
    let a = SfAlgebra::new(t).unwrap();
    let cf = CfAlgebra::new(t);
    let rep = qserre_check(&a, &cf).unwrap();
    assert!(rep.ok() && rep.count(Status::Pass) == 4, "{rep:?}");
    let untwisted = rep.checks[0].detail["untwisted_residue"].as_str().unwrap().to_string();
    assert_ne!(untwisted, "0");

    let t2 = HallTable::build(&Quiver::new(2, vec![]).unwrap(), &DimVec(vec![1, 1]), &TableConfig::default()).unwrap();
    let b = SfAlgebra::new(&t2).unwrap();
    let (d1, d2) = (b.dbar(t2.simple(0).unwrap()), b.dbar(t2.simple(1).unwrap()));
    assert_eq!(b.mult(&d1, &d2).unwrap(), b.mult(&d2, &d1).unwrap());
    assert!(qserre_check(&b, &CfAlgebra::new(&t2)).unwrap().ok());
}

#[test]
fn phi_examples() {
    let a = SfAlgebra::new(a2()).unwrap();
    let (v1, v2) = (a.parse("s[[1,0]]").unwrap(), a.parse("s[[0,1]]").unwrap());
    assert_eq!(a.phi_lambda(&v1), a_basis(DimVec(vec![1, 0])));
    assert_eq!(a.phi_lambda(&a.one()), phi_one(2));
    let p = a.phi_lambda(&a.mult(&v2, &v1).unwrap());
    assert_eq!(p, AElem::term(DimVec(vec![1, 1]), RatFunc::l()));
}

#[test]
fn integral_over_posets() {
    let a = SfAlgebra::new(a2()).unwrap();
    for (name, p) in
        [("chain", Poset::chain(3)), ("antichain", Poset::antichain(3)), ("vee", Poset::parse(3, "0<2,1<2").unwrap())]
    {
        let rep = integral_identity_check(&a, &IntegralMode::Poset(name.into(), p)).unwrap();
        assert!(rep.ok(), "{rep:?}");
        assert!(rep.checks[0].detail["tuples"].as_u64().unwrap() > 10);
    }
    let (v1, v2) = (a.s(a.table().simple(0).unwrap()), a.s(a.table().simple(1).unwrap()));
    assert_eq!(a.render(&a.direct_sum(&v1, &v2).unwrap()), "s[[1,0],[0,1]]");
}

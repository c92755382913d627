use gdlab::cli::format::StructureFile;
use gdlab::cli::search::search;
use gdlab::conformal::{affinize, lambda_bracket, PolyVector};
use gdlab::costructures::{dualize_algebra, dualize_coalgebra, CoalgebraStructure};
use gdlab::exactalg::{MPoly, Scalar, Var};
use gdlab::structures::{is_gd, AlgebraStructure, Table};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = i64> {
    prop_oneof![6 => Just(0i64), 1 => Just(1i64), 1 => Just(-1i64)]
}

fn table(n: usize) -> impl Strategy<Value = Table> {
    proptest::collection::vec(entry(), n * n * n).prop_map(move |v| {
        let mut t = Table::zeros(n);
        for (idx, c) in v.into_iter().enumerate() {
            t.set(idx / (n * n), (idx / n) % n, idx % n, Scalar::from(c));
        }
        t
    })
}

fn algebra_of(n: usize) -> impl Strategy<Value = AlgebraStructure> {
    (table(n), table(n)).prop_map(|(c, b)| AlgebraStructure::new(c, b.sub(&b.opposite())))
}

fn algebra() -> impl Strategy<Value = AlgebraStructure> {
    (2usize..=3).prop_flat_map(algebra_of)
}

fn coalgebra() -> impl Strategy<Value = CoalgebraStructure> {
    (2usize..=3).prop_flat_map(|n| (table(n), table(n))).prop_map(|(c, b)| CoalgebraStructure::new(c, b))
}

proptest! {
    #[test]
    fn file_round_trip(alg in algebra(), co in coalgebra()) {
        let co = if co.dim == alg.dim { co } else { CoalgebraStructure::zero(alg.dim) };
        let d = gdlab::bialgebras::BialgebraData::new(alg, co).unwrap();
        let f = StructureFile::from_bialgebra(&d).unwrap();
        let g = StructureFile::parse(&f.to_json()).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.bialgebra().unwrap(), d);
    }

    #[test]
    fn lambda_bracket_is_sesquilinear(alg in algebra(), i in 0usize..2, j in 0usize..2) {
        let cs = affinize(&alg);
        let n = cs.dim;
        let e = |k| PolyVector::basis(n, k);
        let d = MPoly::var(Var::D);
        let base = lambda_bracket(&cs, &e(i), &e(j)).unwrap();
        let left = lambda_bracket(&cs, &e(i).scale(&d), &e(j)).unwrap();
        let right = lambda_bracket(&cs, &e(i), &e(j).scale(&d)).unwrap();
        let l = MPoly::var(Var::Lambda);
        prop_assert_eq!(left, base.scale(&-&l));
        prop_assert_eq!(right, base.scale(&(&d + &l)));
    }

    #[test]
    fn search_closed_under_negation(alg in algebra_of(2).prop_filter("GD", is_gd)) {
        let unit: Vec<Scalar> = [-1, 0, 1].into_iter().map(Scalar::from).collect();
        for skew in [true, false] {
            let sols = search(&alg, &unit, skew).unwrap().solutions;
            for r in &sols {
                let neg = r.scaled(&Scalar::from(-1));
                prop_assert!(sols.contains(&neg));
            }
        }
    }

    #[test]
    fn dualize_is_an_involution(co in coalgebra(), alg in algebra()) {
        prop_assert_eq!(dualize_algebra(&dualize_coalgebra(&co)), co);
        prop_assert_eq!(dualize_coalgebra(&dualize_algebra(&alg)), alg);
    }
}

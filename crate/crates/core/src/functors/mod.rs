//! Lexicographic ℓ-groups, the `Γ` and `Δ` functors, Komori and Chang
//! algebras, and the Belluce and `Id_c` lattices.

mod chang;
mod lattices;
mod lgroup;
mod lspec;
mod symbolic;

pub use chang::{chang_op, ChangElem, ChangOp};
pub use lattices::{belluce, idc};
pub use lgroup::{
    convex_subgroups, lgroup_prime_spectrum, parse_rational, rational, Coord, LIdealDescriptor, LexElem, LexGroup,
    UnitalLGroup, MAX_RANK,
};
pub use lspec::{verify_lspec, LspecReport};
pub use symbolic::{
    chang, delta, delta_m_rational, gamma, komori, symbolic_spec, GammaAlgebra, Presentation, SymbolicMvAlgebra,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::{validate_algebra, MvOps, Order};

    fn lex(v: &[i64]) -> LexElem {
        LexElem::from_ints(v)
    }

    #[test]
    fn gamma_of_integers_is_a_finite_chain() {
        for m in 1..=6 {
            let gu = UnitalLGroup::new(LexGroup::integers(1).unwrap(), lex(&[m])).unwrap();
            let GammaAlgebra::Finite(a) = gamma(&gu).unwrap() else { panic!("expected a table") };
            assert_eq!(a.size(), m as usize + 1);
            assert!(validate_algebra(&a.to_tables()).unwrap().is_valid());
            assert!(a.elements().all(|x| a.elements().all(|y| a.le(x, y) || a.le(y, x))));
        }
        let bad = UnitalLGroup::new(LexGroup::integers(1).unwrap(), lex(&[0]));
        assert!(bad.is_err());
    }

    #[test]
    fn chang_arithmetic() {
        let c = delta(&LexGroup::integers(1).unwrap()).unwrap();
        assert_eq!(c.presentation(), Presentation::Chang);
        assert_eq!(c.oplus(&lex(&[0, 2]), &lex(&[0, 3])), lex(&[0, 5]));
        assert_eq!(c.neg(&lex(&[0, 4])), lex(&[1, -4]));
        assert_eq!(c.ord(&lex(&[0, 4])), Order::Infinite);
        assert_eq!(c.ord(&lex(&[1, -4])), Order::Finite(2));
        assert_eq!(c.ord(&lex(&[1, 0])), Order::Finite(1));
        assert!(c.is_perfect());
        assert_eq!(komori(1).unwrap(), chang());
    }

    #[test]
    fn table_matches_gamma() {
        let c = chang();
        let mut elems = Vec::new();
        for n in 0..=50 {
            elems.push(ChangElem::Multiple(n));
            elems.push(ChangElem::CoMultiple(n));
        }
        for &x in &elems {
            let nx = chang_op(ChangOp::Neg, x, x).unwrap();
            assert_eq!(nx.to_lex(), c.neg(&x.to_lex()));
            for &y in &elems {
                let s = chang_op(ChangOp::Oplus, x, y).unwrap();
                assert_eq!(s.to_lex(), c.oplus(&x.to_lex(), &y.to_lex()), "{x} ⊕ {y}");
            }
        }
    }

    #[test]
    fn komori_interval() {
        assert!(komori(0).is_err());
        let k2 = komori(2).unwrap();
        assert_eq!(k2.presentation(), Presentation::Komori(2));
        assert!(k2.element_from_ints(&[2, -3]).is_ok());
        assert!(k2.element_from_ints(&[2, 3]).is_err());
        assert!(k2.element_from_ints(&[0, -1]).is_err());
        assert!(!k2.is_perfect());
        assert_eq!(k2.rank_value().unwrap(), 2);
        assert_eq!(k2.ord(&lex(&[1, 5])), Order::Finite(2));
        assert_eq!(k2.ord(&lex(&[1, -5])), Order::Finite(3));
        assert_eq!(k2.ord(&lex(&[2, -5])), Order::Finite(2));
    }

    #[test]
    fn symbolic_order_matches_iteration() {
        for s in [komori(3).unwrap(), delta_m_rational(2).unwrap(), chang()] {
            for x in s.sample_elements(3) {
                let mut acc = s.zero();
                let mut n = 0usize;
                let iterated = loop {
                    if acc == s.one() {
                        break Order::Finite(n);
                    }
                    if n > 64 {
                        break Order::Infinite;
                    }
                    acc = s.oplus(&acc, &x);
                    n += 1;
                };
                let expected = if x.is_zero() { Order::Infinite } else { iterated };
                assert_eq!(s.ord(&x), expected, "{x} in {s}");
            }
        }
    }

    #[test]
    fn default_lattice_operations_agree_with_lex_order() {
        let s = komori(2).unwrap();
        let xs = s.sample_elements(2);
        for x in &xs {
            for y in &xs {
                let j = s.oplus(&s.neg(&s.oplus(&s.neg(x), y)), y);
                assert_eq!(j, s.join(x, y));
                let m = s.neg(&s.join(&s.neg(x), &s.neg(y)));
                assert_eq!(m, s.meet(x, y));
            }
        }
    }

    #[test]
    fn delta_examples() {
        let d0 = delta(&LexGroup::trivial()).unwrap();
        assert_eq!(d0.materialize().unwrap().size(), 2);
        let g: LexGroup = "ZxZ".parse().unwrap();
        let d = delta(&g).unwrap();
        assert_eq!(d.rank(), 3);
        let gu = UnitalLGroup::new(LexGroup::integers(3).unwrap(), lex(&[1, 0, 0])).unwrap();
        let GammaAlgebra::Symbolic(direct) = gamma(&gu).unwrap() else { panic!() };
        for x in d.sample_elements(2) {
            for y in d.sample_elements(2) {
                assert_eq!(d.oplus(&x, &y), direct.oplus(&x, &y));
            }
        }
    }

    #[test]
    fn spectra_are_chains() {
        for m in 1..=8 {
            let s = symbolic_spec(&komori(m).unwrap()).unwrap();
            assert!(s.is_order_isomorphic(&crate::poset::SpecPoset::chain(2)));
            assert_eq!(s.labels(), ["{0}", "Rad"]);
        }
        let d = delta(&"ZxZ".parse().unwrap()).unwrap();
        assert_eq!(symbolic_spec(&d).unwrap().len(), 3);
        assert_eq!(lgroup_prime_spectrum(&LexGroup::integers(1).unwrap()).unwrap().len(), 1);
        assert_eq!(lgroup_prime_spectrum(&LexGroup::integers(2).unwrap()).unwrap().len(), 2);
        assert!(lgroup_prime_spectrum(&LexGroup::trivial()).unwrap().is_empty());
    }

    #[test]
    fn convex_subgroups_match_window_oracle() {
        // A subgroup of a lex product is convex iff membership of a sampled
        // element depends only on its leading nonzero position.
        for g in ["Z", "ZxZ", "ZxQxZ"] {
            let g: LexGroup = g.parse().unwrap();
            let d = g.rank();
            let window: Vec<LexElem> = {
                let mut out = vec![LexElem(vec![])];
                for _ in 0..d {
                    out = out
                        .into_iter()
                        .flat_map(|p| (-2..=2).map(move |v| {
                            let mut e = p.0.clone();
                            e.push(num::BigRational::from_integer(v.into()));
                            LexElem(e)
                        }))
                        .collect();
                }
                out
            };
            let subgroups = convex_subgroups(&g);
            assert_eq!(subgroups.len(), d + 1);
            for c in &subgroups {
                for x in &window {
                    for y in &window {
                        if c.contains(x) && c.contains(y) {
                            assert!(c.contains(&x.sub(y)));
                        }
                        // 0 ≤ y ≤ x ∈ C ⇒ y ∈ C
                        let zero = LexElem::zero(d);
                        if c.contains(x) && zero <= *y && y <= x {
                            assert!(c.contains(y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn collapse_to_leading_coordinate_is_onto() {
        // The projection K_m → Γ(ℤ, m) is onto: every k in 0..=m is hit.
        for m in 1..=4 {
            let k = komori(m).unwrap();
            let q = k.quotient_by(LIdealDescriptor { rank: 2, k: 1 }).unwrap();
            let target = q.materialize().unwrap();
            let hit: std::collections::BTreeSet<i64> = k
                .sample_elements(m as i64)
                .iter()
                .map(|x| num::ToPrimitive::to_i64(&x.coord(0).to_integer()).unwrap())
                .collect();
            assert_eq!(hit.len(), target.size());
        }
    }
}

use std::sync::Arc;

use num::{BigInt, BigRational, Integer, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{Outcome, Suite};
use crate::bits::{self, Mask};
use crate::classify::{
    in_vc, in_vkm, is_local, is_perfect, is_perfect_ideal, is_semisimple, is_supermaximal, local_spectrum_profile,
    maximal_above, rank, rank_of_prime,
};
use crate::corpus::{chain_shape, Corpus, NamedHom};
use crate::functors::{
    belluce, chang_op, gamma, idc, komori, symbolic_spec, verify_lspec, ChangElem, ChangOp, GammaAlgebra, LexElem,
    LexGroup, UnitalLGroup,
};
use crate::lattice::{
    dual_closure_equalities, dual_preserves_closed, elementwise_join, is_closed_epi_defn, is_closed_epi_downsets,
    is_closed_epi_ideals, is_lattice_ideal, lattices_isomorphic, FiniteDistLattice, LatticeHom,
};
use crate::mcnaughton::{
    check_form1, eval_nf, homogenize, is_cone_1d, is_locally_homogeneous, is_syntactically_homogeneous, rho,
    zero_at_origin_criterion, zeroset_1d, NormalForm, Piece, RatPoint,
};
use crate::mv::{lukasiewicz, quotient, FiniteMvAlgebra, MvHom, MvOps};
use crate::poset::SpecPoset;
use crate::spectra::{
    compact_opens_lattice, enumerate_ideals, homeomorphic, ideal_generated, ideal_sum, is_ideal, is_root_system,
    maximals, o, pullback_prime, spec, v, zariski_topology, IdealSet, Spectrum,
};

macro_rules! suite {
    ($id:literal, $statement:literal, $run:path) => {
        Suite { id: $id, statement: $statement, run: $run }
    };
}

/// Sorted by id.
pub(super) static REGISTRY: &[Suite] = &[
    suite!("chang-table", "the closed-form Chang table agrees with Γ(ℤ lex ℤ, (1,0)) for coefficients up to 50", chang_table),
    suite!("chang-variety", "membership in the Chang variety: maximal, prime and presentation routes agree with the identity 2x² = (2x)²", chang_variety),
    suite!("closed-epi-counterexample", "the 4-chain onto 2-chain collapse is closed while its dual does not preserve closed sets", closed_epi_counterexample),
    suite!("closed-epi-equivalence", "closedness by definition, by principal down-sets and by ideals agree on every surjective lattice hom", closed_epi_equivalence),
    suite!("compact-opens-principal", "principal ideals, prime-signature classes and compact opens of the spectrum give isomorphic lattices", compact_opens_principal),
    suite!("delta-zerosets", "zero sets of terms over Δ(ℚ) are unions of sector cones, constant on rays", delta_zerosets),
    suite!("downset-join", "principal down-sets join pointwise and pull back to ideals", downset_join),
    suite!("dual-closure-equalities", "the dual closure equalities hold exactly for homs that are closed by ideals", dual_closure_equalities_suite),
    suite!("homeomorphism-test", "spectra are homeomorphic exactly when the algebras have equally many chain factors", homeomorphism_test),
    suite!("homogeneous-cones", "zero sets of homogeneous unary normal forms are cones", homogeneous_cones),
    suite!("homogeneous-not-converse", "x ∧ ρ(2x−1) vanishes at 0 and is locally homogeneous without being homogeneous", homogeneous_not_converse),
    suite!("homogenization", "the homogenised form ψ satisfies ψ(x, 1) = φ(x) on a grid of step 1/24", homogenization),
    suite!("ideal-intersection", "V(I₁) ∩ … ∩ V(Iₖ) = V(I₁ ⊕ … ⊕ Iₖ) for families of at most three ideals", ideal_intersection),
    suite!("image-ideal", "quotient maps send ideals to ideals, with preimage I ⊕ kernel", image_ideal),
    suite!("komori-spectra", "symbolic spectra of K_m are homeomorphic 2-chains for m ≤ 8", komori_spectra),
    suite!("komori-variety", "membership in V(K_m) for m ≤ 6 matches the divisibility of the chain factors and is monotone", komori_variety),
    suite!("lgroup-spectrum", "Spec Δ(G) minus its closed point is the ℓ-spectrum of G", lgroup_spectrum),
    suite!("local-criteria", "an algebra is local exactly when it is a nontrivial chain", local_criteria),
    suite!("local-homogeneity", "a random normal form is locally homogeneous at 0 exactly when it vanishes there", local_homogeneity),
    suite!("local-spectrum", "local quotient, a single closed point and a primary intersection agree for every closed set", local_spectrum),
    suite!("open-join", "O(x ⊕ y) = O(x) ∪ O(y)", open_join),
    suite!("perfect-criteria", "a finite algebra is perfect exactly when it has two elements", perfect_criteria),
    suite!("perfect-ideal-criteria", "an ideal is perfect exactly when its quotient has two elements", perfect_ideal_criteria),
    suite!("prime-pullback", "the dual of a quotient map is continuous", prime_pullback),
    suite!("quotient-correspondence", "primes of A/I correspond order-isomorphically to primes above I", quotient_correspondence),
    suite!("rank-convention", "Ł_d belongs to V(K_m) exactly when d divides m, for d, m ≤ 6", rank_convention),
    suite!("rank-lifting", "a prime has the rank of the maximal ideal above it", rank_lifting),
    suite!("rho-truncation", "ρ(q) = 0 exactly when q ≤ 0, and ρ clamps to [0, 1]", rho_truncation),
    suite!("root-supermaximal", "a maximal ideal is supermaximal exactly when every prime below it is perfect", root_supermaximal),
    suite!("root-system", "every spectrum is a root system", root_system),
    suite!("semisimple-spectrum", "every finite algebra is semisimple and its primes are all maximal", semisimple_spectrum),
    suite!("spectral-sober", "the Zariski topology of every spectrum is sober and spectral", spectral_sober),
    suite!("supermaximal-perfect", "a prime is perfect exactly when the maximal ideal above it is supermaximal", supermaximal_perfect),
    suite!("zero-at-origin", "the syntactic zero-at-origin criterion matches φ(0) = 0 on random normal forms", zero_at_origin),
    suite!("zeroset-1d", "exact unary zero sets match dense sampling at denominators up to 97", zeroset_1d_suite),
];

/// The first counterexample in input order, evaluating in parallel.
fn first<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> Outcome {
    let results: Vec<Outcome> = items.par_iter().map(f).collect();
    for r in results {
        if let Some(c) = r? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn each_algebra(c: &Corpus, f: impl Fn(&str, &FiniteMvAlgebra, &Spectrum) -> Outcome + Sync + Send) -> Outcome {
    first(&c.algebras, |a| f(&a.name, &a.algebra, &spec(&a.algebra)?))
}

fn each_hom(c: &Corpus, f: impl Fn(&NamedHom) -> Outcome + Sync + Send) -> Outcome {
    first(&c.homs, f)
}

fn members(m: Mask) -> Vec<usize> {
    bits::to_vec(m)
}

fn ideal_intersection(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        let ideals = enumerate_ideals(a)?;
        let n = ideals.len();
        let mut families: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            families.push(vec![i]);
            for j in i + 1..n {
                families.push(vec![i, j]);
                for k in j + 1..n {
                    families.push(vec![i, j, k]);
                }
            }
        }
        for fam in families {
            let family: Vec<IdealSet> = fam.iter().map(|&i| ideals[i]).collect();
            let mut cap = s.poset.all();
            for &i in &family {
                cap &= v(a, s, i)?;
            }
            let sum = ideal_sum(a, &family)?;
            let rhs = v(a, s, sum)?;
            if cap != rhs {
                return Ok(Some(json!({
                    "algebra": name,
                    "family": family.iter().map(|i| i.members()).collect::<Vec<_>>(),
                    "intersection": members(cap),
                    "v_of_sum": members(rhs),
                })));
            }
        }
        Ok(None)
    })
}

fn open_join(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        for x in a.elements() {
            for y in a.elements() {
                let lhs = o(a, s, a.add(x, y))?;
                let rhs = o(a, s, x)? | o(a, s, y)?;
                if lhs != rhs {
                    return Ok(Some(json!({ "algebra": name, "x": x, "y": y, "lhs": members(lhs), "rhs": members(rhs) })));
                }
            }
        }
        Ok(None)
    })
}

fn spectral_sober(c: &Corpus) -> Outcome {
    each_algebra(c, |name, _, s| {
        let t = zariski_topology(&s.poset)?;
        let (sober, spectral) = (t.is_sober(), t.is_spectral());
        Ok((!sober || !spectral).then(|| json!({ "algebra": name, "sober": sober, "spectral": spectral })))
    })
}

fn root_system(c: &Corpus) -> Outcome {
    each_algebra(c, |name, _, s| Ok((!is_root_system(&s.poset)).then(|| json!({ "algebra": name }))))
}

/// Every proper ideal with its quotient map.
fn quotients(a: &FiniteMvAlgebra) -> crate::Result<Vec<(IdealSet, FiniteMvAlgebra, MvHom)>> {
    let arc = Arc::new(a.clone());
    let mut out = Vec::new();
    for i in enumerate_ideals(a)? {
        if i.is_whole(a) {
            continue;
        }
        let (q, pi) = quotient(&arc, &i)?;
        out.push((i, q, pi));
    }
    Ok(out)
}

fn quotient_correspondence(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        for (i, q, pi) in quotients(a)? {
            let sq = spec(&q)?;
            let pulled: Vec<IdealSet> = sq.primes.iter().map(|&p| pullback_prime(&pi, p)).collect::<crate::Result<_>>()?;
            let mut got: Vec<Mask> = pulled.iter().map(|p| p.mask()).collect();
            got.sort_unstable();
            let mut want: Vec<Mask> = s.primes.iter().filter(|p| i.is_subset(**p)).map(|p| p.mask()).collect();
            want.sort_unstable();
            let order_kept = (0..pulled.len()).all(|x| {
                (0..pulled.len()).all(|y| sq.primes[x].is_subset(sq.primes[y]) == pulled[x].is_subset(pulled[y]))
            });
            if got != want || !order_kept {
                return Ok(Some(json!({
                    "algebra": name,
                    "ideal": i.members(),
                    "pulled_back": got.iter().map(|&m| members(m)).collect::<Vec<_>>(),
                    "primes_above": want.iter().map(|&m| members(m)).collect::<Vec<_>>(),
                    "order_kept": order_kept,
                })));
            }
        }
        Ok(None)
    })
}

fn prime_pullback(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        let ideals = enumerate_ideals(a)?;
        for (i, q, pi) in quotients(a)? {
            let sq = spec(&q)?;
            let pulled: Vec<IdealSet> = sq.primes.iter().map(|&p| pullback_prime(&pi, p)).collect::<crate::Result<_>>()?;
            for k in &ideals {
                // Preimage of the closed set V(K) under the dual map.
                let pre = bits::from_iter((0..pulled.len()).filter(|&x| k.is_subset(pulled[x])));
                let image = ideal_generated(&q, pi.image(k.mask()))?;
                let closed = v(&q, &sq, image)?;
                if pre != closed {
                    return Ok(Some(json!({
                        "algebra": name,
                        "ideal": i.members(),
                        "closed_set_of": k.members(),
                        "preimage": members(pre),
                        "expected": members(closed),
                    })));
                }
            }
        }
        Ok(None)
    })
}

fn image_ideal(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        let ideals = enumerate_ideals(a)?;
        for (i, q, pi) in quotients(a)? {
            for &k in &ideals {
                let img = pi.image(k.mask());
                let pre = pi.preimage(img);
                let sum = ideal_sum(a, &[k, i])?;
                if !is_ideal(&q, img) || pre != sum.mask() {
                    return Ok(Some(json!({
                        "algebra": name,
                        "kernel": i.members(),
                        "ideal": k.members(),
                        "image": members(img),
                        "preimage_of_image": members(pre),
                    })));
                }
            }
        }
        Ok(None)
    })
}

fn compact_opens_principal(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        let b = belluce(a)?;
        let i = idc(a)?;
        let k = compact_opens_lattice(&s.poset)?;
        let (bi, ik) = (lattices_isomorphic(&b, &i), lattices_isomorphic(&i, &k));
        Ok((!bi || !ik).then(|| json!({ "algebra": name, "belluce_idc": bi, "idc_compact_opens": ik })))
    })
}

fn homeomorphism_test(c: &Corpus) -> Outcome {
    let data: Vec<(SpecPoset, usize)> = c
        .algebras
        .par_iter()
        .map(|a| Ok((spec(&a.algebra)?.poset, chain_shape(&a.algebra)?.len())))
        .collect::<crate::Result<_>>()?;
    let pairs: Vec<(usize, usize)> =
        (0..data.len()).flat_map(|i| (i..data.len()).map(move |j| (i, j))).collect();
    first(&pairs, |&(i, j)| {
        let h = homeomorphic(&data[i].0, &data[j].0)?;
        let expected = data[i].1 == data[j].1;
        Ok((h != expected).then(|| {
            json!({ "first": c.algebras[i].name, "second": c.algebras[j].name, "homeomorphic": h, "expected": expected })
        }))
    })
}

fn hom_json(h: &NamedHom) -> serde_json::Value {
    json!({ "hom": h.name, "map": h.hom.map() })
}

fn closed_epi_equivalence(c: &Corpus) -> Outcome {
    each_hom(c, |h| {
        let d = is_closed_epi_defn(&h.hom)?;
        let ds = is_closed_epi_downsets(&h.hom)?;
        let id = is_closed_epi_ideals(&h.hom)?;
        Ok((d != ds || ds != id).then(|| {
            let mut v = hom_json(h);
            v["definition"] = json!(d);
            v["downsets"] = json!(ds);
            v["ideals"] = json!(id);
            v
        }))
    })
}

fn dual_closure_equalities_suite(c: &Corpus) -> Outcome {
    each_hom(c, |h| {
        let eq = dual_closure_equalities(&h.hom)?;
        let closed = is_closed_epi_ideals(&h.hom)?;
        Ok((eq.holds() != closed).then(|| {
            let mut v = hom_json(h);
            v["equalities"] = json!(eq);
            v["closed_by_ideals"] = json!(closed);
            v
        }))
    })
}

fn closed_epi_counterexample(_: &Corpus) -> Outcome {
    let four = Arc::new(FiniteDistLattice::chain(4)?);
    let two = Arc::new(FiniteDistLattice::chain(2)?);
    let f = LatticeHom::new(four, two, vec![0, 1, 1, 1])?;
    let d = is_closed_epi_defn(&f)?;
    let ds = is_closed_epi_downsets(&f)?;
    let id = is_closed_epi_ideals(&f)?;
    let p = dual_preserves_closed(&f)?;
    let witness = p.witness_prime.map(|w| w.members());
    let reproduced = d && ds && id && !p.preserves && witness.as_deref() == Some(&[0, 1, 2][..]);
    Ok((!reproduced).then(|| {
        json!({
            "map": f.map(),
            "closed_definition": d,
            "closed_downsets": ds,
            "closed_ideals": id,
            "dual_preserves_closed": p.preserves,
            "witness_prime": witness,
        })
    }))
}

fn downset_join(c: &Corpus) -> Outcome {
    let lattice_failure = first(&c.lattices, |l| {
        let m = &l.lattice;
        for b in m.elements() {
            for x in m.elements() {
                if elementwise_join(m, m.down(b), m.down(x)) != m.down(m.join(b, x)) {
                    return Ok(Some(json!({ "lattice": l.name, "b": b, "c": x })));
                }
            }
        }
        Ok(None)
    })?;
    if lattice_failure.is_some() {
        return Ok(lattice_failure);
    }
    each_hom(c, |h| {
        let m = h.hom.target();
        for b in m.elements() {
            let pre = h.hom.preimage(m.down(b));
            if !is_lattice_ideal(h.hom.source(), pre) {
                let mut v = hom_json(h);
                v["b"] = json!(b);
                v["preimage"] = json!(members(pre));
                return Ok(Some(v));
            }
        }
        Ok(None)
    })
}

fn perfect_criteria(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        let p = is_perfect(a)?;
        Ok((p != (a.size() == 2)).then(|| json!({ "algebra": name, "perfect": p })))
    })
}

fn perfect_ideal_criteria(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        for (i, q, _) in quotients(a)? {
            let p = is_perfect_ideal(a, i)?;
            if p != (q.size() == 2) {
                return Ok(Some(json!({ "algebra": name, "ideal": i.members(), "perfect": p, "quotient_size": q.size() })));
            }
        }
        Ok(None)
    })
}

fn local_criteria(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        let l = is_local(a)?;
        let chain = chain_shape(a)?.len() == 1;
        Ok((l != chain).then(|| json!({ "algebra": name, "local": l, "chain": chain })))
    })
}

fn supermaximal_perfect(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        for &p in &s.primes {
            let perfect = is_perfect_ideal(a, p)?;
            let sm = is_supermaximal(a, maximal_above(a, p)?)?;
            if perfect != sm {
                return Ok(Some(json!({ "algebra": name, "prime": p.members(), "perfect": perfect, "supermaximal": sm })));
            }
        }
        Ok(None)
    })
}

/// `2x² = (2x)²`, an equational description of the Chang variety.
fn satisfies_chang_identity(a: &FiniteMvAlgebra) -> bool {
    a.elements().all(|x| {
        let twice = a.add(x, x);
        let square = a.prod(x, x);
        a.prod(twice, twice) == a.add(square, square)
    })
}

fn chang_variety(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        let member = in_vc(a)?;
        let identity = satisfies_chang_identity(a);
        let boolean = chain_shape(a)?.iter().all(|&m| m == 1);
        Ok((member != identity || member != boolean)
            .then(|| json!({ "algebra": name, "in_vc": member, "identity": identity, "boolean": boolean })))
    })
}

fn root_supermaximal(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        for m in maximals(a)? {
            let sm = is_supermaximal(a, m)?;
            let mut all_perfect = true;
            for &p in s.primes.iter().filter(|p| p.is_subset(m)) {
                all_perfect &= is_perfect_ideal(a, p)?;
            }
            if sm != all_perfect {
                return Ok(Some(json!({ "algebra": name, "maximal": m.members(), "supermaximal": sm, "root_perfect": all_perfect })));
            }
        }
        Ok(None)
    })
}

fn local_spectrum(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        for (i, _, _) in quotients(a)? {
            let p = local_spectrum_profile(a, i)?;
            if !p.agree() {
                return Ok(Some(json!({ "algebra": name, "ideal": i.members(), "profile": p })));
            }
        }
        Ok(None)
    })
}

fn semisimple_spectrum(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        let ss = is_semisimple(a)?;
        let all_maximal = s.poset.maximal() == s.poset.all();
        Ok((!ss || !all_maximal).then(|| json!({ "algebra": name, "semisimple": ss, "all_maximal": all_maximal })))
    })
}

fn rank_lifting(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, s| {
        for &p in &s.primes {
            let (rp, rm) = (rank_of_prime(a, p)?, rank_of_prime(a, maximal_above(a, p)?)?);
            if rp != rm {
                return Ok(Some(json!({ "algebra": name, "prime": p.members(), "rank": rp, "maximal_rank": rm })));
            }
        }
        Ok(None)
    })
}

fn komori_variety(c: &Corpus) -> Outcome {
    each_algebra(c, |name, a, _| {
        let shape = chain_shape(a)?;
        let mut verdicts = Vec::new();
        for m in 1..=6usize {
            let member = in_vkm(a, m)?;
            let expected = shape.iter().all(|d| m % d == 0);
            if member != expected {
                return Ok(Some(json!({ "algebra": name, "m": m, "member": member, "expected": expected })));
            }
            verdicts.push(member);
        }
        for m in 1..=6usize {
            for k in (2 * m..=6).step_by(m) {
                if verdicts[m - 1] && !verdicts[k - 1] {
                    return Ok(Some(json!({ "algebra": name, "m": m, "multiple": k, "monotone": false })));
                }
            }
        }
        Ok(None)
    })
}

fn rank_convention(_: &Corpus) -> Outcome {
    for d in 1..=6usize {
        let l = lukasiewicz(d)?;
        let r = rank(&l)?;
        if r != d {
            return Ok(Some(json!({ "d": d, "rank": r })));
        }
        for m in 1..=6usize {
            let member = in_vkm(&l, m)?;
            if member != (m % d == 0) {
                return Ok(Some(json!({ "d": d, "m": m, "member": member })));
            }
        }
    }
    Ok(None)
}

fn lgroup_spectrum(_: &Corpus) -> Outcome {
    for g in ["trivial", "Z", "Q", "ZxZ", "QxZ", "ZxQxZ"] {
        let group: LexGroup = g.parse()?;
        let r = verify_lspec(&group)?;
        if !r.holds() {
            return Ok(Some(json!({ "group": g, "closed_point": r.closed_point, "isomorphic": r.isomorphic })));
        }
    }
    Ok(None)
}

fn komori_spectra(_: &Corpus) -> Outcome {
    let two_chain = SpecPoset::chain(2);
    for m in 1..=8 {
        let s = symbolic_spec(&komori(m)?)?;
        if !homeomorphic(&s, &two_chain)? {
            return Ok(Some(json!({ "m": m, "points": s.len() })));
        }
    }
    Ok(None)
}

fn chang_table(_: &Corpus) -> Outcome {
    let gu = UnitalLGroup::new(LexGroup::integers(2)?, LexElem::from_ints(&[1, 0]))?;
    let GammaAlgebra::Symbolic(g) = gamma(&gu)? else {
        return Err(crate::Error::Inconsistent("Γ(ℤ lex ℤ, (1,0)) is not symbolic".into()));
    };
    let elems: Vec<ChangElem> = (0..=50).flat_map(|n| [ChangElem::Multiple(n), ChangElem::CoMultiple(n)]).collect();
    for &x in &elems {
        let nx = chang_op(ChangOp::Neg, x, x)?;
        if nx.to_lex() != g.neg(&x.to_lex()) {
            return Ok(Some(json!({ "op": "neg", "x": x.to_string(), "table": nx.to_string() })));
        }
        for &y in &elems {
            let s = chang_op(ChangOp::Oplus, x, y)?;
            if s.to_lex() != g.oplus(&x.to_lex(), &y.to_lex()) {
                return Ok(Some(json!({ "op": "oplus", "x": x.to_string(), "y": y.to_string(), "table": s.to_string() })));
            }
        }
    }
    Ok(None)
}

fn rho_truncation(_: &Corpus) -> Outcome {
    for d in 1..=12i64 {
        for n in -30..=30i64 {
            let q = BigRational::new(n.into(), d.into());
            let r = rho(&q);
            let expected = BigRational::new(n.clamp(0, d).into(), d.into());
            if r != expected || r.is_zero() != (n <= 0) {
                return Ok(Some(json!({ "q": q.to_string(), "rho": r.to_string() })));
            }
        }
    }
    Ok(None)
}

/// Random forms shared by the McNaughton suites.
fn random_forms(seed: u64, count: usize, max_arity: usize) -> Vec<NormalForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let arity = rng.gen_range(1..=max_arity);
            NormalForm::random(&mut rng, arity, 10, 3, 3)
        })
        .collect()
}

/// `φ(0)` by integer clamping, independent of the rational evaluator.
fn vanishes_at_origin(phi: &NormalForm) -> bool {
    phi.meets().iter().map(|join| join.iter().map(|p| p.b.clamp(0, 1)).max().unwrap_or(0)).min() == Some(0)
}

fn zero_at_origin(c: &Corpus) -> Outcome {
    let forms = random_forms(c.spec.seed, 10_000, 3);
    first(&forms, |phi| {
        let criterion = zero_at_origin_criterion(phi)?;
        let value = vanishes_at_origin(phi);
        Ok((criterion != value).then(|| json!({ "form": phi.to_string(), "criterion": criterion, "vanishes": value })))
    })
}

fn local_homogeneity(c: &Corpus) -> Outcome {
    let forms = random_forms(c.spec.seed, 10_000, 3);
    first(&forms, |phi| {
        let local = is_locally_homogeneous(phi)?;
        let value = vanishes_at_origin(phi);
        Ok((local != value).then(|| json!({ "form": phi.to_string(), "locally_homogeneous": local, "vanishes": value })))
    })
}

fn homogeneous_not_converse(_: &Corpus) -> Outcome {
    let phi = NormalForm::new(1, vec![vec![Piece::new(vec![1], 0)], vec![Piece::new(vec![2], -1)]])?;
    let at_zero = eval_nf(&phi, &RatPoint::origin(1))?;
    let syntactic = is_syntactically_homogeneous(&phi);
    let local = is_locally_homogeneous(&phi)?;
    let criterion = zero_at_origin_criterion(&phi)?;
    Ok((!at_zero.is_zero() || syntactic || !local || !criterion).then(|| {
        json!({
            "form": phi.to_string(),
            "value_at_zero": at_zero.to_string(),
            "syntactically_homogeneous": syntactic,
            "locally_homogeneous": local,
            "criterion": criterion,
        })
    }))
}

fn homogenization(c: &Corpus) -> Outcome {
    let forms = random_forms(c.spec.seed ^ 0x4d, 300, 2);
    let q = |k: i64| BigRational::new(k.into(), 24.into());
    first(&forms, |phi| {
        let psi = homogenize(phi);
        if !is_syntactically_homogeneous(&psi) {
            return Ok(Some(json!({ "form": phi.to_string(), "homogenised": psi.to_string() })));
        }
        let n = phi.arity();
        for code in 0..25i64.pow(n as u32) {
            let coords: Vec<BigRational> = (0..n).map(|i| q(code / 25i64.pow(i as u32) % 25)).collect();
            let mut lifted = coords.clone();
            lifted.push(q(24));
            let lhs = eval_nf(&psi, &RatPoint::new(lifted)?)?;
            let rhs = eval_nf(phi, &RatPoint::new(coords.clone())?)?;
            if lhs != rhs {
                return Ok(Some(json!({
                    "form": phi.to_string(),
                    "x": coords.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "psi": lhs.to_string(),
                    "phi": rhs.to_string(),
                })));
            }
        }
        Ok(None)
    })
}

/// Whether a unary form vanishes at `k/d`, by integer arithmetic.
fn vanishes_at(phi: &NormalForm, k: i64, d: i64) -> bool {
    phi.meets()
        .iter()
        .map(|join| join.iter().map(|p| (p.a[0] * k + p.b * d).clamp(0, d)).max().unwrap_or(0))
        .min()
        == Some(0)
}

fn zeroset_1d_suite(c: &Corpus) -> Outcome {
    let forms = random_forms(c.spec.seed ^ 0x1d, 1_000, 1);
    let grid: Vec<(i64, i64)> =
        (1..=97i64).flat_map(|d| (0..=d).filter(move |k| k.gcd(&d) == 1).map(move |k| (k, d))).collect();
    first(&forms, |phi| {
        let z = zeroset_1d(phi)?;
        for &(k, d) in &grid {
            let x = BigRational::new(BigInt::from(k), BigInt::from(d));
            if z.contains(&x) != vanishes_at(phi, k, d) {
                return Ok(Some(json!({ "form": phi.to_string(), "zeroset": z.to_string(), "x": x.to_string() })));
            }
        }
        Ok(None)
    })
}

fn homogeneous_cones(c: &Corpus) -> Outcome {
    let forms: Vec<NormalForm> = random_forms(c.spec.seed ^ 0xc0, 1_000, 1)
        .into_iter()
        .map(|phi| {
            let meets = phi
                .meets()
                .iter()
                .map(|join| join.iter().map(|p| Piece::new(p.a.clone(), 0)).collect())
                .collect();
            NormalForm::new(1, meets)
        })
        .collect::<crate::Result<_>>()?;
    first(&forms, |phi| {
        let z = zeroset_1d(phi)?;
        Ok((!is_cone_1d(&z)).then(|| json!({ "form": phi.to_string(), "zeroset": z.to_string() })))
    })
}

fn delta_zerosets(_: &Corpus) -> Outcome {
    for n in 1..=2 {
        let r = check_form1(n, 4)?;
        if r.violation.is_some() {
            return Ok(Some(json!(r)));
        }
    }
    Ok(None)
}

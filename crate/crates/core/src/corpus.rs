//! The finite test corpus: every MV-algebra with at most six elements,
//! products of Łukasiewicz chains, every bounded distributive lattice with
//! at most six elements, and every surjective homomorphism between those
//! lattices. Generation is deterministic, so the same [`CorpusSpec`] always
//! yields the same corpus and the same emitted bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::io::{to_json, HomFile, Operand};
use crate::lattice::{lattices_isomorphic, FiniteDistLattice, LatticeHom};
use crate::mv::{canonical_tables, lukasiewicz, quotient, validate_algebra, FiniteMvAlgebra, RawTables};
use crate::spectra::maximals;
use crate::{guard, Error, Result};

/// Largest carrier for the exhaustive algebra and lattice searches.
pub const EXHAUSTIVE_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub max_algebra_size: usize,
    pub max_lattice_size: usize,
    /// Chain products `Ł_{m_1} × … × Ł_{m_k}` added on top of the exhaustive
    /// algebras. Shapes already covered by the exhaustive search are skipped.
    pub chain_shapes: Vec<Vec<usize>>,
    /// Seed for the sampled families (random normal forms).
    pub seed: u64,
}

impl Default for CorpusSpec {
    /// Exhaustive up to six elements plus every chain product with at most
    /// sixteen elements.
    fn default() -> Self {
        Self {
            max_algebra_size: EXHAUSTIVE_LIMIT,
            max_lattice_size: EXHAUSTIVE_LIMIT,
            chain_shapes: shapes_up_to(16),
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug)]
pub struct NamedAlgebra {
    pub name: String,
    pub algebra: Arc<FiniteMvAlgebra>,
}

#[derive(Clone, Debug)]
pub struct NamedLattice {
    pub name: String,
    pub lattice: Arc<FiniteDistLattice>,
}

#[derive(Clone, Debug)]
pub struct NamedHom {
    pub name: String,
    /// Indices into [`Corpus::lattices`].
    pub source: usize,
    pub target: usize,
    pub hom: LatticeHom,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub spec: CorpusSpec,
    pub algebras: Vec<NamedAlgebra>,
    pub lattices: Vec<NamedLattice>,
    pub homs: Vec<NamedHom>,
}

/// Every nondecreasing shape `m_1 ≤ … ≤ m_k` (each `m_i ≥ 1`) whose product
/// has at most `max_size` elements, ordered by size and then shape.
pub fn shapes_up_to(max_size: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, size: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let least = prefix.last().copied().unwrap_or(1);
        for m in least.. {
            if size * (m + 1) > max {
                break;
            }
            prefix.push(m);
            extend(prefix, size * (m + 1), max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_size, &mut out);
    out.sort_by_key(|s| (shape_size(s), s.clone()));
    out
}

fn shape_size(shape: &[usize]) -> usize {
    shape.iter().map(|m| m + 1).product()
}

/// `Ł1xL2`-style name of a shape; the empty shape is the trivial algebra.
pub fn shape_name(shape: &[usize]) -> String {
    if shape.is_empty() {
        return "trivial".into();
    }
    shape.iter().map(|m| format!("L{m}")).collect::<Vec<_>>().join("x")
}

/// `Ł_{m_1} × … × Ł_{m_k}` in mixed radix: the last factor varies fastest.
/// Elements are labelled by their coordinate numerators; a single factor
/// is the chain itself.
pub fn chain_products(shape: &[usize]) -> Result<FiniteMvAlgebra> {
    if shape.contains(&0) {
        return Err(Error::Invalid("chain factors need m ≥ 1".into()));
    }
    let size = shape
        .iter()
        .try_fold(1usize, |acc, m| acc.checked_mul(m + 1))
        .ok_or(Error::SizeGuard { size: usize::MAX, limit: guard::size_guard() })?;
    guard::check_size(size)?;
    if let [m] = shape {
        return lukasiewicz(*m);
    }
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; shape.len()];
        for (i, m) in shape.iter().enumerate().rev() {
            d[i] = x % (m + 1);
            x /= m + 1;
        }
        d
    };
    let index = |d: &[usize]| d.iter().zip(shape).fold(0, |acc, (v, m)| acc * (m + 1) + v);
    let labels = (0..size)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(usize::to_string).collect();
            format!("({})", d.join(","))
        })
        .collect();
    let add = |x: usize, y: usize| {
        let s: Vec<usize> = digits(x).iter().zip(digits(y)).zip(shape).map(|((a, b), m)| (a + b).min(*m)).collect();
        index(&s)
    };
    let not = |x: usize| {
        let s: Vec<usize> = digits(x).iter().zip(shape).map(|(a, m)| m - a).collect();
        index(&s)
    };
    FiniteMvAlgebra::from_fn(size, add, not, Some(labels))
}

/// The shape of the chain decomposition `A ≅ ∏ A/M` over the maximal
/// ideals, sorted. Fails if the factor sizes do not multiply to `|A|`.
pub fn chain_shape(a: &FiniteMvAlgebra) -> Result<Vec<usize>> {
    let arc = Arc::new(a.clone());
    let mut shape = Vec::new();
    for m in maximals(a)? {
        let (q, _) = quotient(&arc, &m)?;
        shape.push(q.size() - 1);
    }
    shape.sort_unstable();
    if shape_size(&shape) != a.size() {
        return Err(Error::Inconsistent(format!(
            "simple quotients of sizes {shape:?} do not account for {} elements",
            a.size()
        )));
    }
    Ok(shape)
}

/// Partial `⊕` table, filled symmetrically.
struct Search {
    n: usize,
    neg: Vec<usize>,
    table: Vec<Option<usize>>,
}

impl Search {
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        self.table[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: Option<usize>) {
        self.table[x * self.n + y] = v;
        self.table[y * self.n + x] = v;
    }

    /// Associativity and the Łukasiewicz identity on every instance whose
    /// entries are already known.
    fn consistent(&self) -> bool {
        let n = self.n;
        let neg = &self.neg;
        for x in 0..n {
            for y in 0..n {
                let lhs = self.get(neg[x], y).and_then(|t| self.get(neg[t], y));
                let rhs = self.get(neg[y], x).and_then(|t| self.get(neg[t], x));
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    if l != r {
                        return false;
                    }
                }
                let Some(xy) = self.get(x, y) else { continue };
                for z in 0..n {
                    let Some(yz) = self.get(y, z) else { continue };
                    if let (Some(l), Some(r)) = (self.get(xy, z), self.get(x, yz)) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, cells: &[(usize, usize)], out: &mut Vec<RawTables>) {
        let Some((&(x, y), rest)) = cells.split_first() else {
            let n = self.n;
            out.push(RawTables {
                size: n,
                oplus: (0..n).map(|i| (0..n).map(|j| self.get(i, j).expect("filled")).collect()).collect(),
                neg: self.neg.clone(),
                labels: None,
            });
            return;
        };
        // x ⊕ y = 0 forces x = y = 0, and both are nonzero here.
        for v in 1..self.n {
            self.set(x, y, Some(v));
            if self.consistent() {
                self.fill(rest, out);
            }
        }
        self.set(x, y, None);
    }
}

/// Involutions of `{1, …, n−2}` up to relabelling: `f` fixed points
/// followed by adjacent transposed pairs.
fn canonical_involutions(n: usize) -> Vec<Vec<usize>> {
    let top = n - 1;
    let k = n.saturating_sub(2);
    (0..=k)
        .filter(|f| (k - f).is_multiple_of(2))
        .map(|f| {
            let mut neg: Vec<usize> = (0..n).collect();
            neg[0] = top;
            neg[top] = 0;
            for i in (1 + f..=k).step_by(2) {
                neg[i] = i + 1;
                neg[i + 1] = i;
            }
            neg
        })
        .collect()
}

/// Every complete `⊕` table compatible with `neg` that survives pruning.
/// 0 is the neutral element and the last index is absorbing.
fn tables_for(neg: Vec<usize>) -> Vec<RawTables> {
    let n = neg.len();
    let top = n - 1;
    let mut s = Search { n, neg, table: vec![None; n * n] };
    for x in 0..n {
        s.set(0, x, Some(x));
        s.set(top, x, Some(top));
    }
    for x in 1..top {
        s.set(x, s.neg[x], Some(top));
    }
    let cells: Vec<(usize, usize)> = (1..top)
        .flat_map(|x| (x..top).map(move |y| (x, y)))
        .filter(|&(x, y)| s.get(x, y).is_none())
        .collect();
    let mut out = Vec::new();
    if s.consistent() {
        s.fill(&cells, &mut out);
    }
    out
}

/// Every MV-algebra with exactly `n` elements, one per isomorphism class,
/// in canonical table form and ordered by that form. Found by exhaustive
/// search over `⊕`/`¬` tables, not by the chain decomposition.
pub fn mv_algebras_of_size(n: usize) -> Result<Vec<FiniteMvAlgebra>> {
    if n == 0 || n > EXHAUSTIVE_LIMIT {
        return Err(Error::Invalid(format!("exhaustive search covers sizes 1..={EXHAUSTIVE_LIMIT}")));
    }
    if n == 1 {
        return Ok(vec![crate::mv::trivial()]);
    }
    let candidates: Vec<RawTables> =
        canonical_involutions(n).into_par_iter().flat_map_iter(tables_for).collect();
    let mut classes = BTreeMap::new();
    for raw in candidates {
        let report = validate_algebra(&raw)?;
        if !report.is_valid() {
            continue;
        }
        let canon = canonical_tables(&FiniteMvAlgebra::from_tables(&raw)?)?;
        classes.entry((canon.oplus.clone(), canon.neg.clone())).or_insert(canon);
    }
    classes.into_values().map(|t| FiniteMvAlgebra::from_tables(&t)).collect()
}

/// Every MV-algebra with at most `n` elements up to isomorphism.
pub fn all_mv_algebras(n: usize) -> Result<Vec<FiniteMvAlgebra>> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::Invalid(format!("exhaustive search covers sizes up to {EXHAUSTIVE_LIMIT}")));
    }
    let mut out = Vec::new();
    for size in 1..=n {
        out.extend(mv_algebras_of_size(size)?);
    }
    Ok(out)
}

/// Every bounded distributive lattice with exactly `n` elements up to
/// isomorphism, found by enumerating orders on the elements strictly
/// between a fixed bottom `0` and top `n−1`.
pub fn lattices_of_size(n: usize) -> Result<Vec<FiniteDistLattice>> {
    if n == 0 || n > EXHAUSTIVE_LIMIT {
        return Err(Error::Invalid(format!("exhaustive search covers sizes 1..={EXHAUSTIVE_LIMIT}")));
    }
    if n <= 2 {
        return Ok(vec![FiniteDistLattice::chain(n)?]);
    }
    let k = n - 2;
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut found: Vec<FiniteDistLattice> = Vec::new();
    // Each pair is incomparable (0), below (1) or above (2).
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut lt = vec![vec![false; k]; k];
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => lt[i][j] = true,
                2 => lt[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive =
            (0..k).all(|a| (0..k).all(|b| !lt[a][b] || (0..k).all(|c| !lt[b][c] || lt[a][c])));
        if !transitive {
            continue;
        }
        let le = |x: usize, y: usize| x == y || x == 0 || y == n - 1 || (x > 0 && y > 0 && y < n - 1 && x < n - 1 && lt[x - 1][y - 1]);
        let Ok(l) = FiniteDistLattice::from_order(n, le, None) else { continue };
        if !found.iter().any(|f| lattices_isomorphic(f, &l)) {
            found.push(l);
        }
    }
    Ok(found)
}

pub fn all_lattices(n: usize) -> Result<Vec<FiniteDistLattice>> {
    let mut out = Vec::new();
    for size in 1..=n {
        out.extend(lattices_of_size(size)?);
    }
    Ok(out)
}

/// Every surjective bounded-lattice homomorphism `L → M`, by backtracking
/// over maps that preserve the bounds and every join and meet decided so far.
pub fn surjective_homs(l: &Arc<FiniteDistLattice>, m: &Arc<FiniteDistLattice>) -> Result<Vec<LatticeHom>> {
    fn go(
        x: usize,
        map: &mut Vec<Option<usize>>,
        l: &FiniteDistLattice,
        m: &FiniteDistLattice,
        out: &mut Vec<Vec<usize>>,
    ) {
        if x == l.size() {
            out.push(map.iter().map(|v| v.expect("assigned")).collect());
            return;
        }
        let fixed = map[x];
        let choices: Vec<usize> = match fixed {
            Some(v) => vec![v],
            None => m.elements().collect(),
        };
        for v in choices {
            map[x] = Some(v);
            let ok = (0..=x).all(|y| {
                let fy = map[y].expect("assigned");
                let agrees = |z: usize, w: usize| map[z].is_none_or(|fz| fz == w);
                agrees(l.join(x, y), m.join(v, fy)) && agrees(l.meet(x, y), m.meet(v, fy))
            });
            if ok {
                go(x + 1, map, l, m, out);
            }
        }
        map[x] = fixed;
    }
    if l.size() < m.size() {
        return Ok(Vec::new());
    }
    let mut map = vec![None; l.size()];
    map[l.bottom()] = Some(m.bottom());
    if map[l.top()].is_some_and(|v| v != m.top()) {
        return Ok(Vec::new());
    }
    map[l.top()] = Some(m.top());
    let mut maps = Vec::new();
    go(0, &mut map, l, m, &mut maps);
    maps.into_iter()
        .map(|f| LatticeHom::new(l.clone(), m.clone(), f))
        .filter(|h| h.as_ref().map_or(true, LatticeHom::is_surjective))
        .collect()
}

fn lattice_names(lattices: &[FiniteDistLattice]) -> Vec<String> {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    lattices
        .iter()
        .map(|l| {
            let i = count.entry(l.size()).or_default();
            *i += 1;
            format!("D{}-{}", l.size(), i)
        })
        .collect()
}

/// Every surjective hom between lattices of the corpus up to `max_size`.
/// Source and target are indices into [`all_lattices`]`(max_size)`.
pub fn all_surjective_lattice_homs(max_size: usize) -> Result<Vec<(usize, usize, LatticeHom)>> {
    let lattices: Vec<Arc<FiniteDistLattice>> = all_lattices(max_size)?.into_iter().map(Arc::new).collect();
    homs_between(&lattices)
}

fn homs_between(lattices: &[Arc<FiniteDistLattice>]) -> Result<Vec<(usize, usize, LatticeHom)>> {
    let pairs: Vec<(usize, usize)> =
        (0..lattices.len()).flat_map(|i| (0..lattices.len()).map(move |j| (i, j))).collect();
    let per_pair: Vec<Result<Vec<(usize, usize, LatticeHom)>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            Ok(surjective_homs(&lattices[i], &lattices[j])?.into_iter().map(|h| (i, j, h)).collect())
        })
        .collect();
    let mut out = Vec::new();
    for r in per_pair {
        out.extend(r?);
    }
    Ok(out)
}

pub fn build(spec: &CorpusSpec) -> Result<Corpus> {
    let mut algebras = Vec::new();
    let mut named = BTreeMap::<String, usize>::new();
    for a in all_mv_algebras(spec.max_algebra_size)? {
        let name = shape_name(&chain_shape(&a)?);
        if named.insert(name.clone(), algebras.len()).is_some() {
            return Err(Error::Inconsistent(format!("two non-isomorphic algebras share the shape {name}")));
        }
        algebras.push(NamedAlgebra { name, algebra: Arc::new(a) });
    }
    for shape in &spec.chain_shapes {
        let mut sorted = shape.clone();
        sorted.sort_unstable();
        let name = shape_name(&sorted);
        if named.contains_key(&name) {
            continue;
        }
        named.insert(name.clone(), algebras.len());
        algebras.push(NamedAlgebra { name, algebra: Arc::new(chain_products(&sorted)?) });
    }

    let raw = all_lattices(spec.max_lattice_size)?;
    let names = lattice_names(&raw);
    let lattices: Vec<NamedLattice> = raw
        .into_iter()
        .zip(names)
        .map(|(l, name)| NamedLattice { name, lattice: Arc::new(l) })
        .collect();
    let arcs: Vec<Arc<FiniteDistLattice>> = lattices.iter().map(|l| l.lattice.clone()).collect();
    let mut per_pair: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let homs = homs_between(&arcs)?
        .into_iter()
        .map(|(i, j, hom)| {
            let k = per_pair.entry((i, j)).or_default();
            *k += 1;
            let name = format!("{}-to-{}-{}", lattices[i].name, lattices[j].name, k);
            NamedHom { name, source: i, target: j, hom }
        })
        .collect();
    Ok(Corpus { spec: spec.clone(), algebras, lattices, homs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub spec: CorpusSpec,
    pub algebras: usize,
    pub lattices: usize,
    pub homs: usize,
    pub files: Vec<ManifestEntry>,
}

/// The corpus as `(relative path, contents)` pairs in path order.
pub fn render(corpus: &Corpus) -> Result<Vec<(String, String)>> {
    let mut files = Vec::new();
    for a in &corpus.algebras {
        files.push((format!("algebras/{}.json", a.name), to_json(&a.algebra.to_tables())?));
    }
    for l in &corpus.lattices {
        files.push((format!("lattices/{}.json", l.name), to_json(&l.lattice.to_tables())?));
    }
    for h in &corpus.homs {
        let file = HomFile::<()> {
            source: Operand::Path(format!("../lattices/{}.json", corpus.lattices[h.source].name).into()),
            target: Operand::Path(format!("../lattices/{}.json", corpus.lattices[h.target].name).into()),
            map: h.hom.map().to_vec(),
        };
        files.push((format!("homs/{}.json", h.name), to_json(&file)?));
    }
    files.sort();
    Ok(files)
}

pub fn manifest(corpus: &Corpus, files: &[(String, String)]) -> Manifest {
    Manifest {
        spec: corpus.spec.clone(),
        algebras: corpus.algebras.len(),
        lattices: corpus.lattices.len(),
        homs: corpus.homs.len(),
        files: files
            .iter()
            .map(|(path, body)| ManifestEntry { path: path.clone(), sha256: hex::encode(Sha256::digest(body.as_bytes())) })
            .collect(),
    }
}

/// Writes the corpus under `out` with `manifest.json` at the root.
pub fn emit(spec: &CorpusSpec, out: &Path) -> Result<Manifest> {
    let corpus = build(spec)?;
    let files = render(&corpus)?;
    for dir in ["algebras", "lattices", "homs"] {
        fs::create_dir_all(out.join(dir))?;
    }
    for (path, body) in &files {
        fs::write(out.join(path), body)?;
    }
    let m = manifest(&corpus, &files);
    fs::write(out.join("manifest.json"), to_json(&m)?)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mv::{is_isomorphic, product};

    /// Unordered factorisations of `n` into factors ≥ 2.
    fn multiplicative_partitions(n: usize, least: usize) -> usize {
        if n == 1 {
            return 1;
        }
        (least..=n).filter(|d| n.is_multiple_of(*d)).map(|d| multiplicative_partitions(n / d, d)).sum()
    }

    #[test]
    fn algebra_counts_match_factorisations() {
        for n in 1..=EXHAUSTIVE_LIMIT {
            let found = mv_algebras_of_size(n).unwrap();
            assert_eq!(found.len(), multiplicative_partitions(n, 2), "size {n}");
            for (i, a) in found.iter().enumerate() {
                assert!(validate_algebra(&a.to_tables()).unwrap().is_valid());
                for b in &found[i + 1..] {
                    assert!(!is_isomorphic(a, b));
                }
            }
        }
        assert_eq!(all_mv_algebras(6).unwrap().len(), 8);
        assert!(all_mv_algebras(7).is_err());
    }

    #[test]
    fn small_sizes() {
        assert!(mv_algebras_of_size(1).unwrap()[0].is_trivial());
        assert_eq!(mv_algebras_of_size(2).unwrap()[0].size(), 2);
        let three = mv_algebras_of_size(3).unwrap();
        assert!(is_isomorphic(&three[0], &lukasiewicz(2).unwrap()));
    }

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| lattices_of_size(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 5]);
    }

    #[test]
    fn chain_products_match_iterated_product() {
        let l1 = lukasiewicz(1).unwrap();
        let l2 = lukasiewicz(2).unwrap();
        let l3 = lukasiewicz(3).unwrap();
        assert!(is_isomorphic(&chain_products(&[2, 2]).unwrap(), &product(&l2, &l2).unwrap()));
        assert!(is_isomorphic(&chain_products(&[1, 3]).unwrap(), &product(&l1, &l3).unwrap()));
        assert_eq!(chain_products(&[4]).unwrap(), lukasiewicz(4).unwrap());
        assert_eq!(chain_shape(&chain_products(&[3, 1, 2]).unwrap()).unwrap(), vec![1, 2, 3]);
        assert!(chain_products(&[0]).is_err());
    }

    #[test]
    fn default_shapes() {
        let big: Vec<_> = shapes_up_to(16).into_iter().filter(|s| shape_size(s) > 6).collect();
        assert_eq!(big.len(), 23);
    }

    #[test]
    fn homs_include_identities_and_the_chain_collapse() {
        let homs = all_surjective_lattice_homs(4).unwrap();
        let lattices = all_lattices(4).unwrap();
        for (i, l) in lattices.iter().enumerate() {
            let id: Vec<usize> = l.elements().collect();
            assert!(homs.iter().any(|(s, t, h)| (*s, *t) == (i, i) && h.map() == id));
        }
        let four = lattices.iter().position(|l| l.size() == 4 && l.is_chain()).unwrap();
        let two = lattices.iter().position(|l| l.size() == 2).unwrap();
        let collapse: Vec<Vec<usize>> =
            homs.iter().filter(|(s, t, _)| (*s, *t) == (four, two)).map(|(_, _, h)| h.map().to_vec()).collect();
        assert_eq!(collapse.len(), 3);
        assert!(collapse.contains(&vec![0, 1, 1, 1]));
    }

    #[test]
    fn emission_is_deterministic() {
        let spec = CorpusSpec { chain_shapes: vec![vec![2, 2], vec![1, 1, 1]], ..CorpusSpec::default() };
        let a = build(&spec).unwrap();
        let b = build(&spec).unwrap();
        let (fa, fb) = (render(&a).unwrap(), render(&b).unwrap());
        assert_eq!(fa, fb);
        assert_eq!(manifest(&a, &fa), manifest(&b, &fb));
        assert_eq!(a.algebras.len(), 10);
        let names: Vec<&str> = a.algebras.iter().map(|x| x.name.as_str()).collect();
        assert!(names.contains(&"L1xL2") && names.contains(&"L1xL1xL1"));
    }
}

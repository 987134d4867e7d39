use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::guard;
use crate::{Error, Result};

/// The basic MV signature. Everything else (∨, ∧, ⊙, ⊖) is derived from
/// `zero`, `oplus` and `neg`, and the defaults below expand the defining
/// identities literally.
pub trait MvOps {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn oplus(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.neg(&self.zero())
    }

    /// `x ∨ y = ¬(¬x ⊕ y) ⊕ y`
    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let t = self.oplus(&self.neg(x), y);
        self.oplus(&self.neg(&t), y)
    }

    /// `x ∧ y = ¬(¬x ∨ ¬y)`
    fn meet(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.neg(&self.join(&self.neg(x), &self.neg(y)))
    }

    /// `x ⊙ y = ¬(¬x ⊕ ¬y)`
    fn odot(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.neg(&self.oplus(&self.neg(x), &self.neg(y)))
    }

    /// `x ⊖ y = x ⊙ ¬y`
    fn ominus(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.odot(x, &self.neg(y))
    }

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.meet(x, y) == *x
    }
}

/// Raw operation tables as they appear on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTables {
    pub size: usize,
    pub oplus: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    OplusCommutative,
    OplusAssociative,
    ZeroIdentity,
    NegInvolution,
    /// `x ⊕ ¬0 = ¬0`
    OneAbsorbing,
    /// `¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ x) ⊕ x`
    Lukasiewicz,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::OplusCommutative => "x ⊕ y = y ⊕ x",
            Axiom::OplusAssociative => "(x ⊕ y) ⊕ z = x ⊕ (y ⊕ z)",
            Axiom::ZeroIdentity => "x ⊕ 0 = x",
            Axiom::NegInvolution => "¬¬x = x",
            Axiom::OneAbsorbing => "x ⊕ ¬0 = ¬0",
            Axiom::Lukasiewicz => "¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ x) ⊕ x",
        };
        f.write_str(s)
    }
}

/// A failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom, self.witness)
    }
}

/// Outcome of [`validate_algebra`]: the first witness for each violated axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

fn check_shape(raw: &RawTables) -> Result<()> {
    let n = raw.size;
    if n == 0 {
        return Err(Error::Malformed("size must be positive".into()));
    }
    if raw.neg.len() != n {
        return Err(Error::Malformed(format!(
            "neg has {} entries, expected {n}",
            raw.neg.len()
        )));
    }
    if raw.oplus.len() != n {
        return Err(Error::Malformed(format!(
            "oplus has {} rows, expected {n}",
            raw.oplus.len()
        )));
    }
    for (i, row) in raw.oplus.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "oplus row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(j) = row.iter().position(|&v| v >= n) {
            return Err(Error::Malformed(format!(
                "oplus[{i}][{j}] = {} is out of range",
                row[j]
            )));
        }
    }
    if let Some(i) = raw.neg.iter().position(|&v| v >= n) {
        return Err(Error::Malformed(format!(
            "neg[{i}] = {} is out of range",
            raw.neg[i]
        )));
    }
    if let Some(labels) = &raw.labels {
        if labels.len() != n {
            return Err(Error::Malformed(format!(
                "{} labels for {n} elements",
                labels.len()
            )));
        }
    }
    Ok(())
}

/// Checks the MV axioms exhaustively. Shape errors are returned as
/// [`Error::Malformed`]; axiom failures are reported in the
/// [`ValidationReport`].
pub fn validate_algebra(raw: &RawTables) -> Result<ValidationReport> {
    check_shape(raw)?;
    let n = raw.size;
    let o = |x: usize, y: usize| raw.oplus[x][y];
    let neg = |x: usize| raw.neg[x];
    let one = neg(0);
    let mut report = ValidationReport::default();
    let mut record = |axiom: Axiom, witness: Vec<usize>| {
        if !report.violated(axiom) {
            report.violations.push(Violation { axiom, witness });
        }
    };

    for x in 0..n {
        if o(x, 0) != x || o(0, x) != x {
            record(Axiom::ZeroIdentity, vec![x]);
        }
        if neg(neg(x)) != x {
            record(Axiom::NegInvolution, vec![x]);
        }
        if o(x, one) != one {
            record(Axiom::OneAbsorbing, vec![x]);
        }
        for y in 0..n {
            if o(x, y) != o(y, x) {
                record(Axiom::OplusCommutative, vec![x, y]);
            }
            let lhs = o(neg(o(neg(x), y)), y);
            let rhs = o(neg(o(neg(y), x)), x);
            if lhs != rhs {
                record(Axiom::Lukasiewicz, vec![x, y]);
            }
            for z in 0..n {
                if o(o(x, y), z) != o(x, o(y, z)) {
                    record(Axiom::OplusAssociative, vec![x, y, z]);
                }
            }
        }
    }
    Ok(report)
}

/// A finite MV-algebra given by its `⊕` and `¬` tables. Index 0 is the
/// constant 0 and `neg[0]` is the constant 1.
///
/// Construction validates the axioms, so every value of this type is an
/// MV-algebra. The lattice operations and the order are precomputed.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMvAlgebra {
    size: usize,
    oplus: Vec<usize>,
    neg: Vec<usize>,
    labels: Option<Vec<String>>,
    join: Vec<usize>,
    meet: Vec<usize>,
    below: Vec<Mask>,
}

impl fmt::Debug for FiniteMvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMvAlgebra")
            .field("size", &self.size)
            .field("neg", &self.neg)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl FiniteMvAlgebra {
    pub fn from_tables(raw: &RawTables) -> Result<Self> {
        check_shape(raw)?;
        guard::check_size(raw.size)?;
        let report = validate_algebra(raw)?;
        if let Some(v) = report.violations.into_iter().next() {
            return Err(Error::NotAnMvAlgebra(v));
        }
        Ok(Self::build(raw))
    }

    /// Builds from closures over indices `0..size`.
    pub fn from_fn(
        size: usize,
        oplus: impl Fn(usize, usize) -> usize,
        neg: impl Fn(usize) -> usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let raw = RawTables {
            size,
            oplus: (0..size)
                .map(|x| (0..size).map(|y| oplus(x, y)).collect())
                .collect(),
            neg: (0..size).map(neg).collect(),
            labels,
        };
        Self::from_tables(&raw)
    }

    fn build(raw: &RawTables) -> Self {
        let n = raw.size;
        let oplus: Vec<usize> = raw.oplus.iter().flatten().copied().collect();
        let neg = raw.neg.clone();
        let o = |x: usize, y: usize| oplus[x * n + y];
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = o(neg[o(neg[x], y)], y);
            }
        }
        for x in 0..n {
            for y in 0..n {
                meet[x * n + y] = neg[join[neg[x] * n + neg[y]]];
            }
        }
        let below = (0..n)
            .map(|x| bits::from_iter((0..n).filter(|&y| meet[y * n + x] == y)))
            .collect();
        Self {
            size: n,
            oplus,
            neg,
            labels: raw.labels.clone(),
            join,
            meet,
            below,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn top(&self) -> usize {
        self.neg[0]
    }

    pub fn all(&self) -> Mask {
        bits::full(self.size)
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.oplus[x * self.size + y]
    }

    #[inline]
    pub fn not(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sup(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y]
    }

    #[inline]
    pub fn inf(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.neg[self.add(self.neg[x], self.neg[y])]
    }

    #[inline]
    pub fn diff(&self, x: usize, y: usize) -> usize {
        self.prod(x, self.neg[y])
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        bits::has(self.below[y], x)
    }

    /// `{y : y ≤ x}`
    pub fn below(&self, x: usize) -> Mask {
        self.below[x]
    }

    /// `d(x, y) = (x ⊖ y) ⊕ (y ⊖ x)`
    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.add(self.diff(x, y), self.diff(y, x))
    }

    /// n-fold sum `x ⊕ … ⊕ x` (n ≥ 1).
    pub fn multiple(&self, x: usize, n: usize) -> usize {
        (1..n).fold(x, |acc, _| self.add(acc, x))
    }

    /// n-fold product `x ⊙ … ⊙ x` (n ≥ 1).
    pub fn power(&self, x: usize, n: usize) -> usize {
        (1..n).fold(x, |acc, _| self.prod(acc, x))
    }

    /// The distinct values `x, x², x³, …` of the ⊙-powers of `x`. The orbit
    /// is decreasing and therefore stabilises within `size` steps.
    pub fn powers(&self, x: usize) -> Mask {
        let mut seen: Mask = 0;
        let mut p = x;
        while !bits::has(seen, p) {
            seen |= bits::bit(p);
            p = self.prod(p, x);
        }
        seen
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Malformed(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn to_tables(&self) -> RawTables {
        let n = self.size;
        RawTables {
            size: n,
            oplus: (0..n)
                .map(|x| (0..n).map(|y| self.add(x, y)).collect())
                .collect(),
            neg: self.neg.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    pub fn oplus_table(&self) -> &[usize] {
        &self.oplus
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "element {x} out of range for an algebra of size {}",
                self.size
            )))
        }
    }

    pub fn check_mask(&self, mask: Mask) -> Result<()> {
        if bits::subset(mask, self.all()) {
            Ok(())
        } else {
            Err(Error::Invalid(format!(
                "subset {:?} exceeds the carrier of size {}",
                bits::to_vec(mask),
                self.size
            )))
        }
    }
}

impl MvOps for FiniteMvAlgebra {
    type Elem = usize;

    fn zero(&self) -> usize {
        0
    }

    fn oplus(&self, x: &usize, y: &usize) -> usize {
        self.add(*x, *y)
    }

    fn neg(&self, x: &usize) -> usize {
        self.not(*x)
    }

    fn join(&self, x: &usize, y: &usize) -> usize {
        self.sup(*x, *y)
    }

    fn meet(&self, x: &usize, y: &usize) -> usize {
        self.inf(*x, *y)
    }

    fn leq(&self, x: &usize, y: &usize) -> bool {
        self.le(*x, *y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DerivedOp {
    Join,
    Meet,
    Odot,
    Ominus,
    Leq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivedValue {
    Elem(usize),
    Bool(bool),
}

/// Evaluates a derived connective by expanding its defining identity over the
/// raw `⊕`/`¬` tables (the cached lattice tables are not consulted).
pub fn derived_op(a: &FiniteMvAlgebra, op: DerivedOp, x: usize, y: usize) -> Result<DerivedValue> {
    a.check_element(x)?;
    a.check_element(y)?;
    let join = |x: usize, y: usize| a.add(a.not(a.add(a.not(x), y)), y);
    let meet = |x: usize, y: usize| a.not(join(a.not(x), a.not(y)));
    let odot = |x: usize, y: usize| a.not(a.add(a.not(x), a.not(y)));
    Ok(match op {
        DerivedOp::Join => DerivedValue::Elem(join(x, y)),
        DerivedOp::Meet => DerivedValue::Elem(meet(x, y)),
        DerivedOp::Odot => DerivedValue::Elem(odot(x, y)),
        DerivedOp::Ominus => DerivedValue::Elem(odot(x, a.not(y))),
        DerivedOp::Leq => DerivedValue::Bool(meet(x, y) == x),
    })
}

/// Additive order of an element: the least `n` with `n·x = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => f.write_str("∞"),
        }
    }
}

pub fn ord(a: &FiniteMvAlgebra, x: usize) -> Result<Order> {
    a.check_element(x)?;
    let one = a.top();
    let mut visited: Mask = 0;
    let mut sum = x;
    let mut n = 1;
    loop {
        if sum == one {
            return Ok(Order::Finite(n));
        }
        if bits::has(visited, sum) {
            return Ok(Order::Infinite);
        }
        visited |= bits::bit(sum);
        sum = a.add(sum, x);
        n += 1;
    }
}

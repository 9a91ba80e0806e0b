//! Exterior-algebra arithmetic in Plücker coordinates.
//!
//! A grade-k element is stored as a sparse map from size-k index sets J
//! (1-based, strictly increasing) to coefficients of `e_{j1} ∧ … ∧ e_{jk}`.
//! Index sets are ordered lexicographically; that order fixes both the
//! coordinate layout and the shuffle-sign convention everywhere in the crate.
//!
//! Measured subspaces pair a decomposable k-vector with a witness basis and
//! canonicalize the sign so equality is testable: the first nonzero Plücker
//! coordinate (in lexicographic order) is positive.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FloatScalar, Scalar};

/// Strictly increasing subset of `{1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    n: u32,
    elems: Vec<u32>,
}

impl IndexSet {
    pub fn new(n: usize, elems: Vec<u32>) -> Result<Self> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "index set {elems:?} is not strictly increasing"
            )));
        }
        if elems.iter().any(|&j| j == 0 || j as usize > n) {
            return Err(Error::InvalidInput(format!(
                "index set {elems:?} leaves the range 1..={n}"
            )));
        }
        Ok(IndexSet {
            n: n as u32,
            elems,
        })
    }

    pub fn empty(n: usize) -> Self {
        IndexSet {
            n: n as u32,
            elems: Vec::new(),
        }
    }

    /// `[k] = {1, …, k}` inside ambient dimension n.
    pub fn prefix(n: usize, k: usize) -> Self {
        IndexSet {
            n: n as u32,
            elems: (1..=k as u32).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, j: u32) -> bool {
        self.elems.binary_search(&j).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.elems.iter().copied()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    /// Merge two disjoint sets, returning the shuffle sign, or None when
    /// they intersect.
    fn merge_signed(&self, other: &IndexSet) -> Option<(IndexSet, i8)> {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let mut inversions = 0usize;
        let (mut a, mut b) = (0usize, 0usize);
        while a < self.elems.len() && b < other.elems.len() {
            match self.elems[a].cmp(&other.elems[b]) {
                std::cmp::Ordering::Less => {
                    out.push(self.elems[a]);
                    a += 1;
                }
                std::cmp::Ordering::Greater => {
                    // other.elems[b] jumps over the remaining elements of self
                    inversions += self.elems.len() - a;
                    out.push(other.elems[b]);
                    b += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&self.elems[a..]);
        out.extend_from_slice(&other.elems[b..]);
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        Some((
            IndexSet {
                n: self.n,
                elems: out,
            },
            sign,
        ))
    }
}

impl std::fmt::Display for IndexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Sparse element of the k-th exterior power of R^n.
#[derive(Clone, Debug, PartialEq)]
pub struct KVector<S> {
    n: usize,
    k: usize,
    coords: BTreeMap<IndexSet, S>,
}

impl<S: Scalar> KVector<S> {
    pub fn zero(n: usize, k: usize) -> Self {
        KVector {
            n,
            k,
            coords: BTreeMap::new(),
        }
    }

    /// Basis element `e_J`.
    pub fn basis(set: IndexSet) -> Self {
        let n = set.ambient();
        let k = set.len();
        let mut coords = BTreeMap::new();
        coords.insert(set, S::one());
        KVector { n, k, coords }
    }

    /// Grade-1 vector from coordinates.
    pub fn from_vector(v: &[S]) -> Self {
        let n = v.len();
        let mut coords = BTreeMap::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                coords.insert(
                    IndexSet::new(n, vec![i as u32 + 1]).expect("singleton is valid"),
                    c.clone(),
                );
            }
        }
        KVector { n, k: 1, coords }
    }

    pub fn from_coords(
        n: usize,
        k: usize,
        entries: impl IntoIterator<Item = (IndexSet, S)>,
    ) -> Result<Self> {
        let mut coords = BTreeMap::new();
        for (set, c) in entries {
            if set.ambient() != n || set.len() != k {
                return Err(Error::DimensionMismatch(format!(
                    "coordinate {set} does not match grade {k} in dimension {n}"
                )));
            }
            if !c.is_zero() {
                coords.insert(set, c);
            }
        }
        Ok(KVector { n, k, coords })
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, set: &IndexSet) -> S {
        self.coords.get(set).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, &S)> {
        self.coords.iter()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.k);
        }
        KVector {
            n: self.n,
            k: self.k,
            coords: self
                .coords
                .iter()
                .map(|(s, v)| (s.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::DimensionMismatch(
                "k-vector addition needs equal ambient dimension and grade".into(),
            ));
        }
        let mut coords = self.coords.clone();
        for (set, c) in &other.coords {
            let entry = coords.entry(set.clone()).or_insert_with(S::zero);
            *entry += c.clone();
            if entry.is_zero() {
                coords.remove(set);
            }
        }
        Ok(KVector {
            n: self.n,
            k: self.k,
            coords,
        })
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-S::one()))
    }

    /// Wedge product; rejects grade overflow.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(
                "wedge operands live in different ambient dimensions".into(),
            ));
        }
        if self.k + other.k > self.n {
            return Err(Error::GradeOverflow {
                j: self.k,
                k: other.k,
                n: self.n,
            });
        }
        let mut coords: BTreeMap<IndexSet, S> = BTreeMap::new();
        for (a, ca) in &self.coords {
            for (b, cb) in &other.coords {
                if let Some((merged, sign)) = a.merge_signed(b) {
                    let mut term = ca.clone() * cb.clone();
                    if sign < 0 {
                        term = -term;
                    }
                    let entry = coords.entry(merged.clone()).or_insert_with(S::zero);
                    *entry += term;
                    if entry.is_zero() {
                        coords.remove(&merged);
                    }
                }
            }
        }
        Ok(KVector {
            n: self.n,
            k: self.k + other.k,
            coords,
        })
    }

    /// Max-coordinate norm: `max_J |φ_J|`, zero iff the vector is zero.
    pub fn norm(&self) -> S {
        let mut best = S::zero();
        for c in self.coords.values() {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    /// Index sets with exactly nonzero coefficient.
    pub fn support(&self) -> BTreeSet<IndexSet> {
        self.coords.keys().cloned().collect()
    }

    /// Support with coefficients below `rel_tol * max|coefficient|` discarded;
    /// this is the right notion for float wedges where cancellation leaves
    /// roundoff residue.
    pub fn support_tol(&self, rel_tol: &S) -> BTreeSet<IndexSet> {
        let scale = self.norm();
        let cutoff = rel_tol.clone() * scale;
        self.coords
            .iter()
            .filter(|(_, c)| c.abs() > cutoff)
            .map(|(s, _)| s.clone())
            .collect()
    }

    /// Flip the sign so the first nonzero coordinate (lexicographic J) is
    /// positive; identity on the zero vector.
    pub fn canonical_sign(&self) -> Self {
        match self.coords.values().next() {
            Some(first) if first.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Scale every coordinate by `exp(Σ_{j∈J} x_j)`; the support is preserved.
    pub fn diag_scaled(&self, exponents: &[S]) -> Self
    where
        S: FloatScalar,
    {
        assert_eq!(exponents.len(), self.n, "one exponent per coordinate");
        let coords = self
            .coords
            .iter()
            .map(|(set, c)| {
                let mut e = S::zero();
                for j in set.iter() {
                    e += exponents[j as usize - 1];
                }
                (set.clone(), c.clone() * e.exp())
            })
            .collect();
        KVector {
            n: self.n,
            k: self.k,
            coords,
        }
    }
}

/// Wedge of a list of grade-1 vectors.
pub fn wedge_of_vectors<S: Scalar>(n: usize, vectors: &[Vec<S>]) -> Result<KVector<S>> {
    if vectors.len() > n {
        return Err(Error::GradeOverflow {
            j: vectors.len(),
            k: 0,
            n,
        });
    }
    let mut acc = KVector::basis(IndexSet::empty(n));
    for v in vectors {
        if v.len() != n {
            return Err(Error::DimensionMismatch(
                "vector length differs from ambient dimension".into(),
            ));
        }
        acc = acc.wedge(&KVector::from_vector(v))?;
    }
    Ok(acc)
}

/// Support of the subspace spanned by independent vectors: the support of
/// their wedge, which is basis-independent.
pub fn support_of_subspace<S: Scalar>(
    n: usize,
    basis: &[Vec<S>],
    rel_tol: &S,
) -> Result<BTreeSet<IndexSet>> {
    let w = wedge_of_vectors(n, basis)?;
    if w.is_zero() {
        return Err(Error::DependentVectors(
            "support of a subspace needs an independent spanning set".into(),
        ));
    }
    Ok(w.support_tol(rel_tol))
}

/// Independent route to the same set: J belongs to the support iff the
/// coordinate projection onto J is injective on the span, i.e. the k×k
/// submatrix of the basis on rows J has full rank.
pub fn support_by_projection<S: Scalar>(
    n: usize,
    basis: &[Vec<S>],
    tol: &S,
) -> Result<BTreeSet<IndexSet>> {
    let k = basis.len();
    let cols = Matrix::from_cols(basis);
    if cols.nrows() != n {
        return Err(Error::DimensionMismatch(
            "vector length differs from ambient dimension".into(),
        ));
    }
    if cols.rank(tol) < k {
        return Err(Error::DependentVectors(
            "projection support needs an independent spanning set".into(),
        ));
    }
    let mut out = BTreeSet::new();
    for subset in subsets_of_size(n, k) {
        let rows: Vec<Vec<S>> = subset
            .iter()
            .map(|&r| (0..k).map(|j| cols[(r - 1, j)].clone()).collect())
            .collect();
        let sub = Matrix::from_rows(&rows);
        if sub.rank(tol) == k {
            out.insert(IndexSet::new(n, subset.iter().map(|&r| r as u32).collect())?);
        }
    }
    Ok(out)
}

/// All size-k subsets of {1..n} in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + 1 + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// A subspace of R^n equipped with a nonzero decomposable k-vector (up to
/// sign) and a witness basis.
#[derive(Clone, Debug)]
pub struct MeasuredSubspace<S> {
    n: usize,
    dim: usize,
    plucker: KVector<S>,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> MeasuredSubspace<S> {
    /// Build from a spanning set; rejects dependent input.
    pub fn from_basis(n: usize, basis: Vec<Vec<S>>) -> Result<Self> {
        let w = wedge_of_vectors(n, &basis)?;
        if w.is_zero() {
            return Err(Error::DependentVectors(
                "measured subspace needs an independent basis".into(),
            ));
        }
        Ok(MeasuredSubspace {
            n,
            dim: basis.len(),
            plucker: w.canonical_sign(),
            basis,
        })
    }

    /// The zero subspace, measured by the empty wedge (norm 1).
    pub fn trivial(n: usize) -> Self {
        MeasuredSubspace {
            n,
            dim: 0,
            plucker: KVector::basis(IndexSet::empty(n)),
            basis: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut e = vec![S::zero(); n];
                e[i] = S::one();
                e
            })
            .collect();
        Self::from_basis(n, basis).expect("standard basis is independent")
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn plucker(&self) -> &KVector<S> {
        &self.plucker
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    /// `‖M‖_MS`: max-coordinate norm of the measuring k-vector.
    pub fn norm_ms(&self) -> S {
        self.plucker.norm()
    }

    pub fn support(&self) -> BTreeSet<IndexSet> {
        self.plucker.support_tol(&S::default_tol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num_traits::One;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn e(n: usize, j: u32) -> KVector<Rational> {
        KVector::basis(IndexSet::new(n, vec![j]).unwrap())
    }

    /// Brute-force wedge of grade-1 vectors: expand the full distributive
    /// sum and compute each permutation sign by bubble-sorting the index
    /// word. Independent of the merge-based implementation above.
    fn naive_wedge(n: usize, vectors: &[Vec<Rational>]) -> BTreeMap<Vec<u32>, Rational> {
        let k = vectors.len();
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        let mut word = vec![0u32; k];
        fn rec(
            n: usize,
            vectors: &[Vec<Rational>],
            depth: usize,
            word: &mut Vec<u32>,
            acc: &mut BTreeMap<Vec<u32>, Rational>,
        ) {
            if depth == vectors.len() {
                // bubble sort for the sign; repeated index kills the term
                let mut w = word.clone();
                let mut sign = 1i64;
                for i in 0..w.len() {
                    for j in 0..w.len().saturating_sub(i + 1) {
                        if w[j] > w[j + 1] {
                            w.swap(j, j + 1);
                            sign = -sign;
                        }
                    }
                }
                if w.windows(2).any(|p| p[0] == p[1]) {
                    return;
                }
                let mut coeff = Rational::one();
                for (d, &idx) in word.iter().enumerate() {
                    coeff *= vectors[d][idx as usize - 1].clone();
                }
                if coeff.is_zero() {
                    return;
                }
                let entry = acc.entry(w).or_insert_with(Rational::zero);
                *entry += coeff * Rational::from_int(sign);
                return;
            }
            for idx in 1..=n as u32 {
                word[depth] = idx;
                rec(n, vectors, depth + 1, word, acc);
            }
        }
        rec(n, vectors, 0, &mut word, &mut acc);
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    fn assert_matches_naive(n: usize, vectors: &[Vec<Rational>]) {
        let fast = wedge_of_vectors(n, vectors).unwrap();
        let slow = naive_wedge(n, vectors);
        let mut fast_map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (set, c) in fast.iter() {
            fast_map.insert(set.elems().to_vec(), c.clone());
        }
        assert_eq!(fast_map, slow);
    }

    #[test]
    fn wedge_basis_case() {
        let w = e(2, 1).wedge(&e(2, 2)).unwrap();
        let set = IndexSet::new(2, vec![1, 2]).unwrap();
        assert_eq!(w.coeff(&set), Rational::one());
        assert_eq!(w.support().len(), 1);
    }

    #[test]
    fn wedge_self_is_zero() {
        let v = KVector::from_vector(&[rat(3, 1), rat(-2, 5), rat(1, 7)]);
        assert!(v.wedge(&v).unwrap().is_zero());
    }

    #[test]
    fn wedge_bilinear_example_matches_oracle() {
        // (e1 + e2) ∧ (e1 − e2) = −2 e_{1,2}
        let a = vec![rat(1, 1), rat(1, 1)];
        let b = vec![rat(1, 1), rat(-1, 1)];
        assert_matches_naive(2, &[a.clone(), b.clone()]);
        let w = wedge_of_vectors(2, &[a, b]).unwrap();
        let set = IndexSet::new(2, vec![1, 2]).unwrap();
        assert_eq!(w.coeff(&set), rat(-2, 1));
    }

    #[test]
    fn grade_overflow_rejected() {
        let v = e(2, 1).wedge(&e(2, 2)).unwrap();
        assert!(matches!(
            v.wedge(&e(2, 1)),
            Err(Error::GradeOverflow { .. })
        ));
    }

    #[test]
    fn kvec_norm_examples() {
        let e12 = KVector::<f64>::basis(IndexSet::new(3, vec![1, 2]).unwrap());
        assert_eq!(e12.norm(), 1.0);
        assert_eq!(KVector::<f64>::zero(3, 2).norm(), 0.0);
        let v = e12
            .scale(&3.0)
            .add(&KVector::basis(IndexSet::new(3, vec![1, 3]).unwrap()).scale(&-4.0))
            .unwrap();
        assert_eq!(v.norm(), 4.0);
    }

    #[test]
    fn support_examples() {
        let tol = Rational::zero();
        // {e1, e2} in R³
        let s = support_of_subspace(
            3,
            &[
                vec![rat(1, 1), rat(0, 1), rat(0, 1)],
                vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            ],
            &tol,
        )
        .unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(&IndexSet::new(3, vec![1, 2]).unwrap()));

        // {e1+e3, e2} in R³ → {{1,2},{2,3}}
        let basis = vec![
            vec![rat(1, 1), rat(0, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
        ];
        let s = support_of_subspace(3, &basis, &tol).unwrap();
        let expect: BTreeSet<_> = [
            IndexSet::new(3, vec![1, 2]).unwrap(),
            IndexSet::new(3, vec![2, 3]).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(s, expect);
        // cross-check against the projection-injectivity definition
        let s2 = support_by_projection(3, &basis, &tol).unwrap();
        assert_eq!(s, s2);

        // {(1,1)} in R² → both singletons
        let s = support_of_subspace(2, &[vec![rat(1, 1), rat(1, 1)]], &tol).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn dependent_basis_rejected() {
        let r = support_of_subspace(
            2,
            &[vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]],
            &Rational::zero(),
        );
        assert!(matches!(r, Err(Error::DependentVectors(_))));
    }

    #[test]
    fn diag_action_examples() {
        // identity exponents
        let v: KVector<f64> = KVector::from_vector(&[1.0, 2.0]);
        let w = v.diag_scaled(&[0.0, 0.0]);
        assert_eq!(v, w);

        // n=2, x = (ln 2, −ln 2), e1 ↦ 2 e1
        let e1: KVector<f64> = KVector::from_vector(&[1.0, 0.0]);
        let w = e1.diag_scaled(&[2.0f64.ln(), -(2.0f64.ln())]);
        let set = IndexSet::new(2, vec![1]).unwrap();
        assert!((w.coeff(&set) - 2.0).abs() < 1e-15);

        // n=3, x = (1,0,−1), e_{1,3} fixed (exponents sum to zero over J)
        let e13: KVector<f64> = KVector::basis(IndexSet::new(3, vec![1, 3]).unwrap());
        let w = e13.diag_scaled(&[1.0, 0.0, -1.0]);
        let set = IndexSet::new(3, vec![1, 3]).unwrap();
        assert!((w.coeff(&set) - 1.0).abs() < 1e-15);
        assert_eq!(w.support(), e13.support());
    }

    #[test]
    fn measured_subspace_sign_canonical() {
        let m = MeasuredSubspace::from_basis(2, vec![vec![rat(0, 1), rat(-3, 1)]]).unwrap();
        let set = IndexSet::new(2, vec![2]).unwrap();
        assert_eq!(m.plucker().coeff(&set), rat(3, 1));
        assert_eq!(m.norm_ms(), rat(3, 1));
        assert_eq!(MeasuredSubspace::<f64>::trivial(4).norm_ms(), 1.0);
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-6i64..=6).prop_map(|p| Rational::from_int(p))
    }

    fn rat_vec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec(small_rat(), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn wedge_antisymmetric_and_bilinear(u in rat_vec(4), v in rat_vec(4), w in rat_vec(4), a in small_rat()) {
            let ku = KVector::from_vector(&u);
            let kv = KVector::from_vector(&v);
            let kw = KVector::from_vector(&w);
            // antisymmetry
            prop_assert_eq!(ku.wedge(&kv).unwrap(), kv.wedge(&ku).unwrap().neg());
            // bilinearity in the first slot: (u + a·w) ∧ v = u∧v + a·(w∧v)
            let lhs = ku.add(&kw.scale(&a)).unwrap().wedge(&kv).unwrap();
            let rhs = ku.wedge(&kv).unwrap().add(&kw.wedge(&kv).unwrap().scale(&a)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn wedge_matches_shuffle_sum_oracle(u in rat_vec(3), v in rat_vec(3), w in rat_vec(3)) {
            assert_matches_naive(3, &[u.clone(), v.clone()]);
            assert_matches_naive(3, &[u, v, w]);
        }

        #[test]
        fn support_is_basis_independent(
            b in proptest::collection::vec(rat_vec(4), 2),
            m in proptest::collection::vec((-3i64..=3), 4),
        ) {
            let w = wedge_of_vectors(4, &b).unwrap();
            prop_assume!(!w.is_zero());
            // change of basis: b0' = b0 + m0·b1 style integer mixes with unit determinant
            let b2 = vec![
                b[0].iter().zip(&b[1]).map(|(x, y)| x.clone() + Rational::from_int(m[0]) * y.clone()).collect::<Vec<_>>(),
                b[1].iter().zip(&b[0]).map(|(x, _y)| x.clone()).collect::<Vec<_>>(),
            ];
            let tol = Rational::zero();
            prop_assert_eq!(
                support_of_subspace(4, &b, &tol).unwrap(),
                support_of_subspace(4, &b2, &tol).unwrap()
            );
        }

        #[test]
        fn plucker_and_projection_supports_agree(
            b in proptest::collection::vec(rat_vec(5), 3),
        ) {
            let w = wedge_of_vectors(5, &b).unwrap();
            prop_assume!(!w.is_zero());
            let tol = Rational::zero();
            prop_assert_eq!(
                support_of_subspace(5, &b, &tol).unwrap(),
                support_by_projection(5, &b, &tol).unwrap()
            );
        }

        #[test]
        fn diag_action_commutes_with_wedge(
            u in proptest::collection::vec(-4.0f64..4.0, 4),
            v in proptest::collection::vec(-4.0f64..4.0, 4),
            x in proptest::collection::vec(-1.0f64..1.0, 4),
        ) {
            let ku = KVector::from_vector(&u);
            let kv = KVector::from_vector(&v);
            let lhs = ku.wedge(&kv).unwrap().diag_scaled(&x);
            let rhs = ku.diag_scaled(&x).wedge(&kv.diag_scaled(&x)).unwrap();
            for (set, c) in lhs.iter() {
                prop_assert!((c - rhs.coeff(set)).abs() < 1e-9);
            }
            for (set, c) in rhs.iter() {
                prop_assert!((c - lhs.coeff(set)).abs() < 1e-9);
            }
        }

        #[test]
        fn diag_norm_is_convex_along_segments(
            v in proptest::collection::vec(-4.0f64..4.0, 3),
            x0 in proptest::collection::vec(-1.5f64..1.5, 3),
            x1 in proptest::collection::vec(-1.5f64..1.5, 3),
        ) {
            let kv = KVector::from_vector(&v);
            prop_assume!(!kv.is_zero());
            let mid: Vec<f64> = x0.iter().zip(&x1).map(|(a, b)| 0.5 * (a + b)).collect();
            let f = |x: &[f64]| kv.diag_scaled(x).norm();
            prop_assert!(f(&mid) <= 0.5 * (f(&x0) + f(&x1)) + 1e-9);
        }
    }
}

//! Reduced simplicial homology over a field, Reisner's Cohen–Macaulay test
//! and sequential Cohen–Macaulayness.
//!
//! Betti numbers come from ranks of sparse boundary matrices. Over Q the
//! elimination is fraction-free in `i128` with row-gcd normalisation and
//! restarts in arbitrary precision if an intermediate overflows.
//!
//! Sequential Cohen–Macaulayness is tested on the pure `m`-skeletons for
//! `m = 1..=dim`. The 0-skeleton is always Cohen–Macaulay, so including it
//! would not change any verdict.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::{Error, Exec, Outcome, Result, SimplicialComplex, VertexSet};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Coefficients {
    #[default]
    Rational,
    Prime(u64),
}

impl Coefficients {
    /// `GF(p)`; `p` must be a prime below 2^32.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Coefficients::Prime(p))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FromStr for Coefficients {
    type Err = Error;

    /// `q`, or `gf:p` for a prime `p`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "rational" {
            return Ok(Coefficients::Rational);
        }
        let p = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("gf"))
            .ok_or_else(|| Error::OutOfRange(format!("unknown field `{s}`; use q or gf:p")))?;
        let p: u64 = p
            .parse()
            .map_err(|_| Error::OutOfRange(format!("unknown field `{s}`; use q or gf:p")))?;
        Coefficients::prime(p)
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Rational => f.write_str("q"),
            Coefficients::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl Serialize for Coefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, .., β̃_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub field: Coefficients,
    pub reduced_betti: Vec<usize>,
}

impl BettiProfile {
    /// `β̃_d`; zero outside the stored range.
    pub fn betti(&self, d: isize) -> usize {
        usize::try_from(d + 1)
            .ok()
            .and_then(|i| self.reduced_betti.get(i).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced_betti.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^d β̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating(&self.reduced_betti)
    }

    /// Smallest degree with nonzero reduced homology.
    pub fn first_nonzero(&self) -> Option<isize> {
        self.reduced_betti
            .iter()
            .position(|&b| b != 0)
            .map(|i| i as isize - 1)
    }
}

// index 0 has sign -1 (degree -1)
fn alternating(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { -(x as i64) } else { x as i64 })
        .sum()
}

/// Reduced Euler characteristic from the f-vector, `Σ (-1)^d f_d`.
pub fn reduced_euler_characteristic(k: &SimplicialComplex) -> Result<i64> {
    Ok(alternating(&k.f_vector()?))
}

type SparseRow<T> = Vec<(u32, T)>;

/// Faces grouped by cardinality with an index lookup per layer.
struct Layers {
    faces: Vec<Vec<VertexSet>>,
    index: Vec<HashMap<VertexSet, u32>>,
}

impl Layers {
    fn new(k: &SimplicialComplex) -> Result<Self> {
        let dim = k.dim().map_or(-1, |d| d);
        let mut faces: Vec<Vec<VertexSet>> = vec![Vec::new(); (dim + 2) as usize];
        for f in k.faces()? {
            faces[f.len()].push(f);
        }
        let index = faces
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .enumerate()
                    .map(|(i, f)| (*f, i as u32))
                    .collect()
            })
            .collect();
        Ok(Layers { faces, index })
    }

    /// Rows of the boundary map from faces of size `size` to size `size - 1`.
    fn boundary(&self, size: usize) -> Vec<SparseRow<i64>> {
        self.faces[size]
            .iter()
            .map(|f| {
                let mut row: SparseRow<i64> = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (self.index[size - 1][&f.without(v)], sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect()
    }
}

/// Reduced Betti numbers of `k`. The void complex has an empty profile.
pub fn reduced_homology(k: &SimplicialComplex, field: Coefficients) -> Result<BettiProfile> {
    if k.is_void() {
        return Ok(BettiProfile {
            field,
            reduced_betti: Vec::new(),
        });
    }
    let layers = Layers::new(k)?;
    let sizes = layers.faces.len();
    // rank[s] = rank of the boundary leaving faces of size s
    let mut rank = vec![0usize; sizes + 1];
    for (s, r) in rank.iter_mut().enumerate().take(sizes).skip(1) {
        let rows = layers.boundary(s);
        if cfg!(debug_assertions) && s + 1 < sizes {
            debug_assert!(composition_vanishes(&layers, s + 1));
        }
        *r = matrix_rank(rows, field);
    }
    let reduced_betti = (0..sizes)
        .map(|s| layers.faces[s].len() - rank[s] - rank[s + 1])
        .collect();
    Ok(BettiProfile {
        field,
        reduced_betti,
    })
}

fn composition_vanishes(layers: &Layers, size: usize) -> bool {
    let lower: Vec<HashMap<u32, i64>> = layers
        .boundary(size - 1)
        .into_iter()
        .map(|r| r.into_iter().collect())
        .collect();
    layers.boundary(size).iter().all(|row| {
        let mut acc: HashMap<u32, i64> = HashMap::new();
        for &(j, c) in row {
            for (&i, &d) in &lower[j as usize] {
                *acc.entry(i).or_default() += c * d;
            }
        }
        acc.values().all(|&x| x == 0)
    })
}

/// Checks `∂ ∘ ∂ = 0` over the integers for every pair of consecutive
/// boundary maps of `k`.
pub fn boundary_squares_to_zero(k: &SimplicialComplex) -> Result<bool> {
    let layers = Layers::new(k)?;
    Ok((2..layers.faces.len()).all(|s| composition_vanishes(&layers, s)))
}

/// Checks the Euler–Poincaré identity for `k` over `field`.
pub fn euler_poincare_holds(k: &SimplicialComplex, field: Coefficients) -> Result<bool> {
    Ok(reduced_homology(k, field)?.euler_characteristic() == reduced_euler_characteristic(k)?)
}

fn matrix_rank(rows: Vec<SparseRow<i64>>, field: Coefficients) -> usize {
    match field {
        Coefficients::Prime(p) => rank_mod_p(rows, p),
        Coefficients::Rational => {
            let small: Vec<SparseRow<i128>> = rows
                .iter()
                .map(|r| r.iter().map(|&(j, c)| (j, c as i128)).collect())
                .collect();
            rank_exact(small).unwrap_or_else(|| {
                let big = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(|(j, c)| (j, BigInt::from(c))).collect())
                    .collect();
                rank_exact(big).expect("arbitrary precision cannot overflow")
            })
        }
    }
}

trait Exact: Clone + Integer + Signed {
    fn checked_mul_(&self, o: &Self) -> Option<Self>;
    fn checked_sub_(&self, o: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn checked_mul_(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn checked_sub_(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
}

impl Exact for BigInt {
    fn checked_mul_(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub_(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
}

/// Rank over Q by fraction-free elimination; `None` on overflow.
fn rank_exact<T: Exact>(mut rows: Vec<SparseRow<T>>) -> Option<usize> {
    rows.sort_by_key(|r| r.len());
    let mut pivots: HashMap<u32, SparseRow<T>> = HashMap::new();
    for mut row in rows {
        while let Some((lead, a)) = row.first().cloned() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, row);
                break;
            };
            let b = p[0].1.clone();
            let g = a.gcd(&b);
            let (ra, rb) = (b / g.clone(), a / g);
            // row <- ra * row - rb * p, cancelling the lead entry
            let mut out: SparseRow<T> = Vec::with_capacity(row.len() + p.len());
            let (mut i, mut j) = (1, 1);
            while i < row.len() || j < p.len() {
                let (col, val) = match (row.get(i), p.get(j)) {
                    (Some(x), Some(y)) if x.0 == y.0 => {
                        i += 1;
                        j += 1;
                        (x.0, x.1.checked_mul_(&ra)?.checked_sub_(&y.1.checked_mul_(&rb)?)?)
                    }
                    (Some(x), Some(y)) if x.0 < y.0 => {
                        i += 1;
                        (x.0, x.1.checked_mul_(&ra)?)
                    }
                    (Some(x), None) => {
                        i += 1;
                        (x.0, x.1.checked_mul_(&ra)?)
                    }
                    (_, Some(y)) => {
                        j += 1;
                        (y.0, T::zero().checked_sub_(&y.1.checked_mul_(&rb)?)?)
                    }
                    (None, None) => unreachable!(),
                };
                if !val.is_zero() {
                    out.push((col, val));
                }
            }
            let g = out
                .iter()
                .fold(T::zero(), |acc, (_, v)| acc.gcd(v));
            if !g.is_zero() && !g.is_one() {
                for e in &mut out {
                    e.1 = e.1.clone() / g.clone();
                }
            }
            row = out;
        }
    }
    Some(pivots.len())
}

fn rank_mod_p(rows: Vec<SparseRow<i64>>, p: u64) -> usize {
    let p128 = p as u128;
    let reduce = |c: i64| (c.rem_euclid(p as i64)) as u64;
    let inv = |a: u64| {
        // Fermat
        let (mut base, mut e, mut acc) = (a as u128, p - 2, 1u128);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p128;
            }
            base = base * base % p128;
            e >>= 1;
        }
        acc as u64
    };
    let mut rows: Vec<SparseRow<u64>> = rows
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(j, c)| (j, reduce(c)))
                .filter(|e| e.1 != 0)
                .collect()
        })
        .collect();
    rows.sort_by_key(|r| r.len());
    // pivot rows are stored normalised to a leading 1
    let mut pivots: HashMap<u32, SparseRow<u64>> = HashMap::new();
    for mut row in rows {
        while let Some(&(lead, a)) = row.first() {
            let Some(piv) = pivots.get(&lead) else {
                let s = inv(a) as u128;
                for e in &mut row {
                    e.1 = (e.1 as u128 * s % p128) as u64;
                }
                pivots.insert(lead, row);
                break;
            };
            // row <- row - a * piv
            let mut out = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (1, 1);
            let sub = |y: u64| ((p128 - (a as u128 * y as u128 % p128)) % p128) as u64;
            while i < row.len() || j < piv.len() {
                let (col, val) = match (row.get(i), piv.get(j)) {
                    (Some(x), Some(y)) if x.0 == y.0 => {
                        i += 1;
                        j += 1;
                        (x.0, ((x.1 as u128 + sub(y.1) as u128) % p128) as u64)
                    }
                    (Some(x), Some(y)) if x.0 < y.0 => {
                        i += 1;
                        (x.0, x.1)
                    }
                    (Some(x), None) => {
                        i += 1;
                        (x.0, x.1)
                    }
                    (_, Some(y)) => {
                        j += 1;
                        (y.0, sub(y.1))
                    }
                    (None, None) => unreachable!(),
                };
                if val != 0 {
                    out.push((col, val));
                }
            }
            row = out;
        }
    }
    pivots.len()
}

/// Why a complex fails to be Cohen–Macaulay.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CmWitness {
    /// Facets of different dimensions.
    NonPure { min_dim: isize, max_dim: isize },
    /// `β̃_degree(lk face) ≠ 0` with `degree < dim lk face`.
    LinkHomology {
        face: Vec<String>,
        #[serde(skip)]
        mask: VertexSet,
        degree: isize,
        link_reduced_betti: Vec<usize>,
    },
}

impl CmWitness {
    pub fn face(&self) -> Option<VertexSet> {
        match self {
            CmWitness::LinkHomology { mask, .. } => Some(*mask),
            CmWitness::NonPure { .. } => None,
        }
    }
}

fn purity_witness(k: &SimplicialComplex) -> Option<CmWitness> {
    if k.is_pure() {
        return None;
    }
    let dims = k.facets().iter().map(|f| f.len() as isize - 1);
    Some(CmWitness::NonPure {
        min_dim: dims.clone().min().unwrap_or(-1),
        max_dim: dims.max().unwrap_or(-1),
    })
}

fn face_witness(
    k: &SimplicialComplex,
    f: VertexSet,
    field: Coefficients,
) -> Result<Option<CmWitness>> {
    let lk = k.link_unchecked(f);
    let dim = lk.dim().unwrap_or(-1);
    let h = reduced_homology(&lk, field)?;
    Ok(h
        .first_nonzero()
        .filter(|&d| d < dim)
        .map(|degree| CmWitness::LinkHomology {
            face: k.face_labels(f),
            mask: f,
            degree,
            link_reduced_betti: h.reduced_betti.clone(),
        }))
}

/// Reisner's criterion, preceded by a purity check. Faces are visited by
/// size and then lexicographically, and the first failing face is the
/// witness regardless of `exec`.
pub fn is_cohen_macaulay(
    k: &SimplicialComplex,
    field: Coefficients,
    exec: Exec,
) -> Result<Outcome<(), CmWitness>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some(w) = purity_witness(k) {
        return Ok(Outcome::Fails(w));
    }
    let faces = k.faces()?;
    match exec.find_first(&faces, |&f| face_witness(k, f, field).transpose()) {
        None => Ok(Outcome::Holds(())),
        Some((_, w)) => Ok(Outcome::Fails(w?)),
    }
}

/// Every Reisner failure of `k`, in face order. A non-pure complex yields
/// the single purity witness.
pub fn cm_failures(
    k: &SimplicialComplex,
    field: Coefficients,
    exec: Exec,
) -> Result<Vec<CmWitness>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    if let Some(w) = purity_witness(k) {
        return Ok(vec![w]);
    }
    let faces = k.faces()?;
    exec.map(&faces, |&f| face_witness(k, f, field))
        .into_iter()
        .filter_map(Result::transpose)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkeletonReport {
    pub m: usize,
    pub cohen_macaulay: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CmWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScmReport {
    pub field: Coefficients,
    pub skeletons: Vec<SkeletonReport>,
}

impl ScmReport {
    pub fn is_scm(&self) -> bool {
        self.skeletons.iter().all(|s| s.cohen_macaulay)
    }

    /// The smallest failing skeleton dimension.
    pub fn first_failure(&self) -> Option<&SkeletonReport> {
        self.skeletons.iter().find(|s| !s.cohen_macaulay)
    }
}

/// Tests every pure `m`-skeleton, `m = 1..=dim`.
pub fn is_scm(k: &SimplicialComplex, field: Coefficients, exec: Exec) -> Result<ScmReport> {
    let dim = k.dim().ok_or(Error::VoidComplex)?;
    let mut skeletons = Vec::new();
    for m in 1..=dim.max(0) as usize {
        let sk = k.pure_skeleton(m)?;
        let witness = is_cohen_macaulay(&sk, field, exec)?.witness().cloned();
        skeletons.push(SkeletonReport {
            m,
            cohen_macaulay: witness.is_none(),
            witness,
        });
    }
    Ok(ScmReport { field, skeletons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ind_r;
    use crate::graph::{complete, cycle, g_graph, h_graph, path};

    const FIELDS: [Coefficients; 3] = [
        Coefficients::Rational,
        Coefficients::Prime(2),
        Coefficients::Prime(3),
    ];

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Coefficients>().unwrap(), Coefficients::Rational);
        assert_eq!("gf:7".parse::<Coefficients>().unwrap(), Coefficients::Prime(7));
        assert_eq!("gf:9".parse::<Coefficients>(), Err(Error::NotPrime(9)));
        assert!("r".parse::<Coefficients>().is_err());
        assert_eq!(Coefficients::Prime(5).to_string(), "gf:5");
    }

    #[test]
    fn simplex_boundaries() {
        for n in 2..=6 {
            let k = ind_r(&complete(n), n - 1).unwrap();
            for field in FIELDS {
                let h = reduced_homology(&k, field).unwrap();
                assert_eq!(h.betti(n as isize - 2), 1);
                assert_eq!(h.reduced_betti.iter().sum::<usize>(), 1);
            }
        }
    }

    #[test]
    fn empty_and_void() {
        let k = ind_r(&path(2), 1).unwrap();
        let e = SimplicialComplex::empty(k.labels().clone(), k.ground());
        assert_eq!(reduced_homology(&e, Coefficients::Rational).unwrap().reduced_betti, vec![1]);
        let v = SimplicialComplex::void(k.labels().clone(), k.ground());
        assert!(reduced_homology(&v, Coefficients::Rational).unwrap().reduced_betti.is_empty());
        // two points
        assert_eq!(reduced_homology(&k, Coefficients::Rational).unwrap().reduced_betti, vec![0, 1]);
    }

    #[test]
    fn cycles_and_contractible_examples() {
        // Ind(C_n) for small n
        let h = reduced_homology(&ind_r(&cycle(5).unwrap(), 1).unwrap(), Coefficients::Rational).unwrap();
        assert_eq!(h.reduced_betti, vec![0, 0, 1]);
        for r in [2, 3] {
            let k = ind_r(&g_graph(r).unwrap(), r).unwrap();
            for field in FIELDS {
                assert!(reduced_homology(&k, field).unwrap().is_acyclic());
            }
        }
        let sk = ind_r(&h_graph(2).unwrap(), 3).unwrap().pure_skeleton(3).unwrap();
        assert!(reduced_homology(&sk, Coefficients::Rational).unwrap().is_acyclic());
    }

    #[test]
    fn torsion_shows_up_mod_two() {
        // six-vertex real projective plane
        let k = SimplicialComplex::from_labels(
            ["1", "2", "3", "4", "5", "6"],
            &[
                vec!["1", "2", "3"], vec!["1", "3", "4"], vec!["1", "4", "5"],
                vec!["1", "5", "6"], vec!["1", "2", "6"], vec!["2", "3", "5"],
                vec!["3", "4", "6"], vec!["2", "4", "5"], vec!["3", "5", "6"],
                vec!["2", "4", "6"],
            ],
        )
        .unwrap();
        assert!(reduced_homology(&k, Coefficients::Rational).unwrap().is_acyclic());
        let h2 = reduced_homology(&k, Coefficients::Prime(2)).unwrap();
        assert_eq!(h2.reduced_betti, vec![0, 0, 1, 1]);
        assert!(euler_poincare_holds(&k, Coefficients::Prime(2)).unwrap());
        assert!(boundary_squares_to_zero(&k).unwrap());
    }

    #[test]
    fn reisner_examples() {
        let simplex = ind_r(&complete(4), 4).unwrap();
        assert!(is_cohen_macaulay(&simplex, Coefficients::Rational, Exec::Sequential)
            .unwrap()
            .holds());

        let h2 = h_graph(2).unwrap();
        let sk = ind_r(&h2, 3).unwrap().pure_skeleton(3).unwrap();
        let out = is_cohen_macaulay(&sk, Coefficients::Rational, Exec::Parallel).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.face(), Some(sk.face(&["x1", "x2"]).unwrap()));

        let g2 = g_graph(2).unwrap();
        let sk = ind_r(&g2, 2).unwrap().pure_skeleton(3).unwrap();
        let out = is_cohen_macaulay(&sk, Coefficients::Rational, Exec::Sequential).unwrap();
        match out.witness().unwrap() {
            CmWitness::LinkHomology { face, degree, link_reduced_betti, .. } => {
                assert_eq!(face, &["1", "4"]);
                assert_eq!(*degree, 0);
                assert_eq!(link_reduced_betti, &[0, 1, 0]);
            }
            w => panic!("unexpected witness {w:?}"),
        }

        let nonpure = ind_r(&crate::graph::figure_one(), 2).unwrap();
        assert!(matches!(
            is_cohen_macaulay(&nonpure, Coefficients::Rational, Exec::Sequential).unwrap(),
            Outcome::Fails(CmWitness::NonPure { min_dim: 1, max_dim: 3 })
        ));
    }

    #[test]
    fn scm_reports() {
        let k = ind_r(&h_graph(2).unwrap(), 3).unwrap();
        let rep = is_scm(&k, Coefficients::Rational, Exec::Parallel).unwrap();
        assert!(!rep.is_scm());
        assert_eq!(rep.first_failure().unwrap().m, 3);
        assert!(rep.skeletons[..2].iter().all(|s| s.cohen_macaulay));

        let rep = is_scm(&ind_r(&path(5), 1).unwrap(), Coefficients::Rational, Exec::Sequential).unwrap();
        assert!(rep.is_scm());
    }

    #[test]
    fn strategies_agree() {
        let k = ind_r(&g_graph(2).unwrap(), 2).unwrap().pure_skeleton(2).unwrap();
        for field in FIELDS {
            assert_eq!(
                cm_failures(&k, field, Exec::Sequential).unwrap(),
                cm_failures(&k, field, Exec::Parallel).unwrap()
            );
        }
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i128::MAX / 2;
        let rows: Vec<SparseRow<i128>> = vec![vec![(0, big), (1, 1)], vec![(0, big - 1), (1, 3)]];
        assert_eq!(rank_exact(rows), None);
        let rows: Vec<SparseRow<BigInt>> = vec![
            vec![(0, BigInt::from(big)), (1, BigInt::from(1))],
            vec![(0, BigInt::from(big - 1)), (1, BigInt::from(3))],
        ];
        assert_eq!(rank_exact(rows), Some(2));
    }
}

//! Families of non-intersecting Schröder paths and the involution that
//! collapses a signed sum over path tuples onto them.
//!
//! # Anchor schemes
//!
//! | scheme   | slot `k` (0-based) runs from | to          | paths  |
//! |----------|------------------------------|-------------|--------|
//! | `Pi`     | `(-2k-1, 0)`                 | `(2k+1, 0)` | large  |
//! | `Omega`  | `(-2k-1, 0)`                 | `(2k+1, 0)` | small  |
//! | `PiStar` | `(-2k, 0)`                   | `(2k, 0)`   | large  |
//!
//! Slot 0 of `PiStar` is the single point at the origin.
//!
//! # Intersection
//!
//! Two paths intersect when they share a lattice vertex. Every step keeps
//! `x + y` mod 2 fixed, and all anchors of a scheme share one parity, so all
//! vertices of a family lie in one parity class. Two steps that cross away
//! from a vertex would need endpoints of both parities, and the midpoint of
//! a level step has the other parity. Sharing a vertex is therefore the same
//! as touching anywhere.
//!
//! # Tail swap
//!
//! For a configuration `(σ, τ)` with `τ_k` running from start `k` to end
//! `σ(k)`, [`tail_swap`] picks `i` as the smallest slot whose path meets
//! another path, `v` as the first vertex along `τ_i` shared with another
//! path, and `j` as the smallest other slot through `v`. It exchanges the
//! parts of `τ_i` and `τ_j` after `v` and replaces `σ` by `σ∘(i j)`. The
//! multiset of visited vertices, the prefix of `τ_i` up to `v` and the set of
//! slots through `v` are all unchanged by the swap, so the same `(i, v, j)` is
//! selected again and the map is an involution.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::schroeder::{enumerate_paths, walk_paths, BigCount, Point, SchroederPath, Step};
use crate::{Error, Result};

pub const DEFAULT_FAMILY_CUTOFF: usize = 3;

/// A permutation of `{0, …, n-1}`; displayed and parsed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From a 1-based word such as `[2, 1, 3]`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &w in word {
            if w == 0 || w > n || seen[w - 1] {
                return Err(Error::Domain(format!("{word:?} is not a permutation of 1..={n}")));
            }
            seen[w - 1] = true;
        }
        Ok(Permutation {
            images: word.iter().map(|w| w - 1).collect(),
        })
    }

    pub fn word(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of slot `k` (0-based).
    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
            .sum()
    }

    pub fn sign(&self) -> i32 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `σ∘(a b)`: sends `a` to `σ(b)`, `b` to `σ(a)`.
    pub fn then_transpose(&self, a: usize, b: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(a, b);
        Permutation { images }
    }

    /// All permutations of `n` elements in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation { images: prefix.clone() });
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    extend(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.word().iter().map(|w| w.to_string()).collect();
        write!(f, "({})", word.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchemeKind {
    Pi,
    Omega,
    PiStar,
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchemeKind::Pi => "pi",
            SchemeKind::Omega => "omega",
            SchemeKind::PiStar => "pistar",
        })
    }
}

impl FromStr for SchemeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pi" => Ok(SchemeKind::Pi),
            "omega" => Ok(SchemeKind::Omega),
            "pistar" | "pi-star" | "pi*" => Ok(SchemeKind::PiStar),
            other => Err(Error::Domain(format!("unknown scheme {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AnchorScheme {
    pub kind: SchemeKind,
    pub n: usize,
}

impl AnchorScheme {
    pub fn new(kind: SchemeKind, n: usize) -> Self {
        AnchorScheme { kind, n }
    }

    pub fn start(&self, slot: usize) -> i64 {
        match self.kind {
            SchemeKind::Pi | SchemeKind::Omega => -(2 * slot as i64 + 1),
            SchemeKind::PiStar => -2 * slot as i64,
        }
    }

    pub fn end(&self, slot: usize) -> i64 {
        -self.start(slot)
    }

    pub fn small_only(&self) -> bool {
        self.kind == SchemeKind::Omega
    }
}

fn check_path(scheme: &AnchorScheme, path: &SchroederPath, from: usize, to: usize) -> Result<()> {
    if path.start_x() != scheme.start(from) || path.end_x() != scheme.end(to) {
        return Err(Error::Domain(format!(
            "path {path} should run from x = {} to x = {}",
            scheme.start(from),
            scheme.end(to)
        )));
    }
    if scheme.small_only() && !path.is_small() {
        return Err(Error::Domain(format!("path {path} has a level step on the axis")));
    }
    Ok(())
}

/// True iff no two of the paths share a vertex.
pub fn paths_disjoint(paths: &[SchroederPath]) -> bool {
    let mut seen = HashSet::new();
    paths.iter().all(|p| p.vertices().into_iter().all(|v| seen.insert(v)))
}

/// An ordered tuple of paths obeying an anchor scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFamily {
    scheme: AnchorScheme,
    paths: Vec<SchroederPath>,
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    scheme: SchemeKind,
    n: usize,
    paths: Vec<SchroederPath>,
}

impl Serialize for PathFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyRepr {
            scheme: self.scheme.kind,
            n: self.scheme.n,
            paths: self.paths.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PathFamily {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = FamilyRepr::deserialize(d)?;
        PathFamily::new(AnchorScheme::new(repr.scheme, repr.n), repr.paths).map_err(serde::de::Error::custom)
    }
}

impl PathFamily {
    /// Checks the path count, every endpoint and, for `Omega`, smallness.
    /// Intersection is not checked; see [`is_nonintersecting`](Self::is_nonintersecting).
    pub fn new(scheme: AnchorScheme, paths: Vec<SchroederPath>) -> Result<Self> {
        if paths.len() != scheme.n {
            return Err(Error::Domain(format!(
                "{} scheme of size {} given {} paths",
                scheme.kind,
                scheme.n,
                paths.len()
            )));
        }
        for (k, p) in paths.iter().enumerate() {
            check_path(&scheme, p, k, k)?;
        }
        Ok(PathFamily { scheme, paths })
    }

    pub fn scheme(&self) -> AnchorScheme {
        self.scheme
    }

    pub fn paths(&self) -> &[SchroederPath] {
        &self.paths
    }

    pub fn is_nonintersecting(&self) -> bool {
        paths_disjoint(&self.paths)
    }

    /// Sort key for the canonical family order: the step words of the
    /// paths, slot by slot, compared with `U < L < D`.
    pub fn canonical_key(&self) -> Vec<&[Step]> {
        self.paths.iter().map(|p| p.steps()).collect()
    }
}

pub fn canonical_sort(families: &mut [PathFamily]) {
    families.sort_by(|a, b| a.canonical_key().cmp(&b.canonical_key()));
}

/// Every non-intersecting family under `scheme`, in canonical order, by
/// slot-by-slot backtracking: candidates for slot `k + 1` are generated with
/// every vertex of slots `0..=k` blocked.
pub fn enumerate_family(scheme: AnchorScheme, cutoff: usize) -> Result<Vec<PathFamily>> {
    if scheme.n > cutoff {
        return Err(Error::SizeLimit {
            what: "path family",
            n: scheme.n,
            cutoff,
        });
    }
    let mut out = Vec::new();
    let mut used = HashSet::new();
    let mut chosen = Vec::with_capacity(scheme.n);
    extend_family(&scheme, &mut used, &mut chosen, &mut out);
    Ok(out)
}

fn extend_family(
    scheme: &AnchorScheme,
    used: &mut HashSet<Point>,
    chosen: &mut Vec<SchroederPath>,
    out: &mut Vec<PathFamily>,
) {
    let slot = chosen.len();
    if slot == scheme.n {
        out.push(PathFamily {
            scheme: *scheme,
            paths: chosen.clone(),
        });
        return;
    }
    let (start, end) = (scheme.start(slot), scheme.end(slot));
    let mut candidates = Vec::new();
    walk_paths(start, end, scheme.small_only(), &|v| used.contains(&v), &mut |steps| {
        candidates.push(steps.to_vec())
    });
    for steps in candidates {
        let path = SchroederPath::new(start, steps).expect("walk_paths yields valid paths");
        let vertices = path.vertices();
        used.extend(vertices.iter().copied());
        chosen.push(path);
        extend_family(scheme, used, chosen, out);
        chosen.pop();
        for v in &vertices {
            used.remove(v);
        }
    }
}

fn require(f: &PathFamily, kind: SchemeKind, min_n: usize) -> Result<()> {
    if f.scheme.kind != kind || f.scheme.n < min_n {
        return Err(Error::Domain(format!(
            "expected a {kind} family of size at least {min_n}, got {} of size {}",
            f.scheme.kind, f.scheme.n
        )));
    }
    if !f.is_nonintersecting() {
        return Err(Error::Domain("family is not non-intersecting".into()));
    }
    Ok(())
}

/// `Π_{m} → Ω_{m+1}`: `ω_1 = UD`, `ω_k = UU π_{k-1} DD`.
pub fn phi(f: &PathFamily) -> Result<PathFamily> {
    require(f, SchemeKind::Pi, 1)?;
    let mut paths = Vec::with_capacity(f.paths.len() + 1);
    paths.push(SchroederPath::parse(-1, "UD")?);
    paths.extend(f.paths.iter().map(|p| p.framed(2)));
    PathFamily::new(AnchorScheme::new(SchemeKind::Omega, f.scheme.n + 1), paths)
}

/// Inverse of [`phi`]: drops `ω_1` and strips two frame steps from each end
/// of the remaining paths.
pub fn phi_inverse(f: &PathFamily) -> Result<PathFamily> {
    require(f, SchemeKind::Omega, 2)?;
    if f.paths[0].steps() != [Step::Up, Step::Down] {
        return Err(Error::Domain(format!("first path is {}, expected UD", f.paths[0])));
    }
    let paths = f.paths[1..].iter().map(|p| p.unframed(2)).collect::<Result<Vec<_>>>()?;
    PathFamily::new(AnchorScheme::new(SchemeKind::Pi, f.scheme.n - 1), paths)
}

/// `Π_{m} → Π*_{m+1}`: `μ_0` is the origin, `μ_k = U π_k D`.
pub fn rho(f: &PathFamily) -> Result<PathFamily> {
    require(f, SchemeKind::Pi, 1)?;
    let mut paths = Vec::with_capacity(f.paths.len() + 1);
    paths.push(SchroederPath::point(0));
    paths.extend(f.paths.iter().map(|p| p.framed(1)));
    PathFamily::new(AnchorScheme::new(SchemeKind::PiStar, f.scheme.n + 1), paths)
}

pub fn rho_inverse(f: &PathFamily) -> Result<PathFamily> {
    require(f, SchemeKind::PiStar, 2)?;
    let paths = f.paths[1..].iter().map(|p| p.unframed(1)).collect::<Result<Vec<_>>>()?;
    PathFamily::new(AnchorScheme::new(SchemeKind::Pi, f.scheme.n - 1), paths)
}

/// A permutation together with paths from each start to the permuted end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedConfiguration {
    scheme: AnchorScheme,
    sigma: Permutation,
    paths: Vec<SchroederPath>,
}

impl SignedConfiguration {
    pub fn new(scheme: AnchorScheme, sigma: Permutation, paths: Vec<SchroederPath>) -> Result<Self> {
        if sigma.len() != scheme.n || paths.len() != scheme.n {
            return Err(Error::Domain(format!(
                "configuration of size {} given a permutation of {} and {} paths",
                scheme.n,
                sigma.len(),
                paths.len()
            )));
        }
        for (k, p) in paths.iter().enumerate() {
            check_path(&scheme, p, k, sigma.apply(k))?;
        }
        Ok(SignedConfiguration { scheme, sigma, paths })
    }

    pub fn scheme(&self) -> AnchorScheme {
        self.scheme
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn paths(&self) -> &[SchroederPath] {
        &self.paths
    }

    pub fn sign(&self) -> i32 {
        self.sigma.sign()
    }

    pub fn is_nonintersecting(&self) -> bool {
        paths_disjoint(&self.paths)
    }
}

/// Where [`tail_swap`] acts: slots `i < j` and the shared vertex after which
/// their tails are exchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwapSite {
    pub i: usize,
    pub j: usize,
    pub vertex: Point,
}

/// The swap site of a configuration, or `None` when its paths are pairwise
/// disjoint.
pub fn swap_site(c: &SignedConfiguration) -> Option<SwapSite> {
    let vertex_lists: Vec<Vec<Point>> = c.paths.iter().map(|p| p.vertices()).collect();
    let mut owners: HashMap<Point, Vec<usize>> = HashMap::new();
    for (slot, vs) in vertex_lists.iter().enumerate() {
        for &v in vs {
            owners.entry(v).or_default().push(slot);
        }
    }
    for (i, vs) in vertex_lists.iter().enumerate() {
        if let Some(&vertex) = vs.iter().find(|v| owners[v].len() > 1) {
            let j = owners[&vertex].iter().copied().find(|&s| s != i).unwrap();
            return Some(SwapSite { i, j, vertex });
        }
    }
    None
}

/// The sign-reversing involution on configurations; fixed points are exactly
/// the configurations with pairwise disjoint paths.
pub fn tail_swap(c: &SignedConfiguration) -> SignedConfiguration {
    let Some(site) = swap_site(c) else {
        return c.clone();
    };
    let cut = |slot: usize| {
        c.paths[slot]
            .vertices()
            .iter()
            .position(|&v| v == site.vertex)
            .expect("swap vertex lies on both paths")
    };
    let (ci, cj) = (cut(site.i), cut(site.j));
    let (pi, pj) = (&c.paths[site.i], &c.paths[site.j]);
    let joined = |head: &SchroederPath, at: usize, tail: &SchroederPath, from: usize| {
        let steps = [&head.steps()[..at], &tail.steps()[from..]].concat();
        SchroederPath::new(head.start_x(), steps).expect("tails meet at a common vertex")
    };
    let mut paths = c.paths.clone();
    paths[site.i] = joined(pi, ci, pj, cj);
    paths[site.j] = joined(pj, cj, pi, ci);
    SignedConfiguration {
        scheme: c.scheme,
        sigma: c.sigma.then_transpose(site.i, site.j),
        paths,
    }
}

/// Path sets between every start and every end of a scheme, used to
/// enumerate or sample configurations.
#[derive(Debug, Clone)]
pub struct ConfigurationSpace {
    scheme: AnchorScheme,
    // sets[from][to]
    sets: Vec<Vec<Vec<SchroederPath>>>,
}

impl ConfigurationSpace {
    pub fn new(scheme: AnchorScheme, cutoff: usize) -> Result<Self> {
        if scheme.n > cutoff {
            return Err(Error::SizeLimit {
                what: "signed configuration set",
                n: scheme.n,
                cutoff,
            });
        }
        let sets = (0..scheme.n)
            .map(|from| {
                (0..scheme.n)
                    .map(|to| enumerate_paths(scheme.start(from), scheme.end(to), scheme.small_only()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ConfigurationSpace { scheme, sets })
    }

    pub fn scheme(&self) -> AnchorScheme {
        self.scheme
    }

    pub fn paths_between(&self, from: usize, to: usize) -> &[SchroederPath] {
        &self.sets[from][to]
    }

    /// Visit every configuration: permutations in lexicographic order, then
    /// path tuples in odometer order.
    pub fn for_each(&self, mut visit: impl FnMut(&SignedConfiguration)) {
        let n = self.scheme.n;
        for sigma in Permutation::all(n) {
            let choices: Vec<&[SchroederPath]> = (0..n).map(|k| self.paths_between(k, sigma.apply(k))).collect();
            if choices.iter().any(|c| c.is_empty()) {
                continue;
            }
            let mut counter = vec![0usize; n];
            'tuples: loop {
                let paths = (0..n).map(|k| choices[k][counter[k]].clone()).collect();
                visit(&SignedConfiguration {
                    scheme: self.scheme,
                    sigma: sigma.clone(),
                    paths,
                });
                let mut k = n;
                loop {
                    if k == 0 {
                        break 'tuples;
                    }
                    k -= 1;
                    counter[k] += 1;
                    if counter[k] < choices[k].len() {
                        break;
                    }
                    counter[k] = 0;
                }
            }
        }
    }

    /// Uniform permutation, then an independent uniform path for each slot.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> SignedConfiguration {
        let n = self.scheme.n;
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        let sigma = Permutation { images };
        let paths = (0..n)
            .map(|k| {
                self.paths_between(k, sigma.apply(k))
                    .choose(rng)
                    .expect("every start reaches every end")
                    .clone()
            })
            .collect();
        SignedConfiguration {
            scheme: self.scheme,
            sigma,
            paths,
        }
    }
}

/// `Σ sgn(σ)` over every configuration of the scheme, by explicit
/// enumeration. For `Pi`, `Omega` and `PiStar` this equals the determinant
/// of `H1`, `G1` and `H0` respectively.
pub fn signed_count(kind: SchemeKind, n: usize, cutoff: usize) -> Result<BigCount> {
    let space = ConfigurationSpace::new(AnchorScheme::new(kind, n), cutoff)?;
    let mut total = BigCount::zero();
    space.for_each(|c| total += c.sign());
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::{closed_form, HankelKind};

    fn path(start: i64, steps: &str) -> SchroederPath {
        SchroederPath::parse(start, steps).unwrap()
    }

    fn pi(paths: Vec<SchroederPath>) -> PathFamily {
        let n = paths.len();
        PathFamily::new(AnchorScheme::new(SchemeKind::Pi, n), paths).unwrap()
    }

    #[test]
    fn permutation_sign() {
        let p = Permutation::from_word(&[3, 1, 2]).unwrap();
        assert_eq!(p.inversions(), 2);
        assert_eq!(p.sign(), 1);
        assert_eq!(Permutation::from_word(&[2, 1]).unwrap().sign(), -1);
        assert!(Permutation::from_word(&[1, 1]).is_err());
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(3).iter().map(|p| p.sign()).sum::<i32>(), 0);
        let t = Permutation::from_word(&[2, 3, 1]).unwrap().then_transpose(0, 2);
        assert_eq!(t.word(), vec![1, 3, 2]);
        assert_eq!(t.to_string(), "(1 3 2)");
    }

    #[test]
    fn nonintersection_examples() {
        assert!(pi(vec![path(-1, "UD")]).is_nonintersecting());
        assert!(!pi(vec![path(-1, "L"), path(-3, "LLL")]).is_nonintersecting());
        assert!(pi(vec![path(-1, "UD"), path(-3, "UULDD")]).is_nonintersecting());
    }

    #[test]
    fn family_validation() {
        let scheme = AnchorScheme::new(SchemeKind::Omega, 1);
        assert!(PathFamily::new(scheme, vec![path(-1, "L")]).is_err());
        assert!(PathFamily::new(scheme, vec![path(-3, "UUDD")]).is_err());
        assert!(PathFamily::new(scheme, vec![]).is_err());
    }

    #[test]
    fn family_counts() {
        let count = |kind, n| enumerate_family(AnchorScheme::new(kind, n), 3).unwrap().len();
        assert_eq!(count(SchemeKind::Pi, 1), 2);
        assert_eq!(count(SchemeKind::Pi, 2), 8);
        assert_eq!(count(SchemeKind::Pi, 3), 64);
        assert_eq!(count(SchemeKind::Omega, 1), 1);
        assert_eq!(count(SchemeKind::Omega, 2), 2);
        assert_eq!(count(SchemeKind::Omega, 3), 8);
        assert_eq!(count(SchemeKind::PiStar, 1), 1);
        assert_eq!(count(SchemeKind::PiStar, 2), 2);
        assert_eq!(count(SchemeKind::PiStar, 3), 8);
    }

    #[test]
    fn family_cutoff() {
        assert_eq!(
            enumerate_family(AnchorScheme::new(SchemeKind::Pi, 4), DEFAULT_FAMILY_CUTOFF),
            Err(Error::SizeLimit {
                what: "path family",
                n: 4,
                cutoff: 3
            })
        );
    }

    #[test]
    fn enumerated_families_are_canonical_and_disjoint() {
        let fams = enumerate_family(AnchorScheme::new(SchemeKind::Pi, 3), 3).unwrap();
        let mut sorted = fams.clone();
        canonical_sort(&mut sorted);
        assert_eq!(fams, sorted);
        assert!(fams.iter().all(|f| f.is_nonintersecting()));
        let distinct: HashSet<_> = fams.iter().collect();
        assert_eq!(distinct.len(), fams.len());
    }

    #[test]
    fn vertex_parity() {
        for kind in [SchemeKind::Pi, SchemeKind::Omega] {
            for f in enumerate_family(AnchorScheme::new(kind, 3), 3).unwrap() {
                let all: HashSet<Point> = f.paths().iter().flat_map(|p| p.vertices()).collect();
                assert!(all.iter().all(|&(x, y)| (x + y).rem_euclid(2) == 1));
                // level-step midpoints never coincide with a vertex
                for p in f.paths() {
                    for (w, s) in p.vertices().iter().zip(p.steps()) {
                        if *s == Step::Level {
                            assert!(!all.contains(&(w.0 + 1, w.1)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        let out = phi(&pi(vec![path(-1, "L")])).unwrap();
        let words: Vec<_> = out.paths().iter().map(|p| p.step_string()).collect();
        assert_eq!(words, ["UD", "UULDD"]);
        assert_eq!(out.paths()[1].start_x(), -3);

        let out = phi(&pi(vec![path(-1, "UD")])).unwrap();
        let words: Vec<_> = out.paths().iter().map(|p| p.step_string()).collect();
        assert_eq!(words, ["UD", "UUUDDD"]);
        assert!(out.paths().iter().all(|p| p.is_small()));
        assert!(out.is_nonintersecting());
    }

    #[test]
    fn phi_rejects_intersecting_input() {
        let bad = pi(vec![path(-1, "L"), path(-3, "LLL")]);
        assert!(phi(&bad).is_err());
        assert!(rho(&bad).is_err());
    }

    #[test]
    fn phi_is_a_bijection_onto_omega() {
        for m in 1..=2 {
            let domain = enumerate_family(AnchorScheme::new(SchemeKind::Pi, m), 3).unwrap();
            let codomain: HashSet<_> = enumerate_family(AnchorScheme::new(SchemeKind::Omega, m + 1), 3)
                .unwrap()
                .into_iter()
                .collect();
            let image: HashSet<_> = domain.iter().map(|f| phi(f).unwrap()).collect();
            assert_eq!(image.len(), domain.len());
            assert_eq!(image, codomain);
            for f in &domain {
                assert_eq!(&phi_inverse(&phi(f).unwrap()).unwrap(), f);
            }
        }
    }

    #[test]
    fn rho_examples() {
        let out = rho(&pi(vec![path(-1, "L")])).unwrap();
        assert_eq!(out.paths()[0], SchroederPath::point(0));
        assert_eq!(out.paths()[1], path(-2, "ULD"));
        let out = rho(&pi(vec![path(-1, "UD")])).unwrap();
        assert_eq!(out.paths()[1], path(-2, "UUDD"));
        assert_eq!(out.paths()[1].end_x(), 2);
    }

    #[test]
    fn rho_is_a_bijection_onto_pi_star() {
        for m in 1..=2 {
            let domain = enumerate_family(AnchorScheme::new(SchemeKind::Pi, m), 3).unwrap();
            let codomain: HashSet<_> = enumerate_family(AnchorScheme::new(SchemeKind::PiStar, m + 1), 3)
                .unwrap()
                .into_iter()
                .collect();
            let image: HashSet<_> = domain.iter().map(|f| rho(f).unwrap()).collect();
            assert_eq!(image, codomain);
            for f in &domain {
                let g = rho(f).unwrap();
                assert!(g.paths()[1..].iter().all(|p| p.is_small()));
                assert_eq!(&rho_inverse(&g).unwrap(), f);
            }
        }
    }

    #[test]
    fn tail_swap_fixes_disjoint_identity_configurations() {
        let scheme = AnchorScheme::new(SchemeKind::Pi, 2);
        let c = SignedConfiguration::new(
            scheme,
            Permutation::identity(2),
            vec![path(-1, "UD"), path(-3, "UULDD")],
        )
        .unwrap();
        assert_eq!(tail_swap(&c), c);
    }

    #[test]
    fn tail_swap_uncrosses_a_transposition() {
        let scheme = AnchorScheme::new(SchemeKind::Pi, 2);
        // A_1 = (-1,0) -> B_2 = (3,0) and A_2 = (-3,0) -> B_1 = (1,0)
        let c = SignedConfiguration::new(
            scheme,
            Permutation::from_word(&[2, 1]).unwrap(),
            vec![path(-1, "UDL"), path(-3, "LUD")],
        )
        .unwrap();
        let site = swap_site(&c).unwrap();
        assert_eq!(
            site,
            SwapSite {
                i: 0,
                j: 1,
                vertex: (-1, 0)
            }
        );
        let out = tail_swap(&c);
        assert!(out.sigma().is_identity());
        assert_eq!(out.paths()[0], path(-1, "UD"));
        assert_eq!(out.paths()[1], path(-3, "LUDL"));
        assert_eq!(tail_swap(&out), c);
    }

    #[test]
    fn exhaustive_involution_at_two() {
        for kind in [SchemeKind::Pi, SchemeKind::Omega, SchemeKind::PiStar] {
            let space = ConfigurationSpace::new(AnchorScheme::new(kind, 2), 3).unwrap();
            let mut fixed = 0;
            space.for_each(|c| {
                let out = tail_swap(c);
                assert_eq!(&tail_swap(&out), c);
                if &out == c {
                    fixed += 1;
                    assert!(c.sigma().is_identity() && c.is_nonintersecting());
                } else {
                    assert_eq!(out.sign(), -c.sign());
                    assert_eq!(swap_site(&out), swap_site(c));
                    assert!(!(c.sigma().is_identity() && c.is_nonintersecting()));
                }
            });
            let expected = enumerate_family(AnchorScheme::new(kind, 2), 3).unwrap().len();
            assert_eq!(fixed, expected, "{kind}");
        }
    }

    /// The swap rule that takes the lexicographically first intersecting
    /// pair and exchanges tails after their last common vertex.
    fn first_pair_last_vertex_swap(c: &SignedConfiguration) -> SignedConfiguration {
        let n = c.paths().len();
        for i in 0..n {
            for j in i + 1..n {
                let vi = c.paths()[i].vertices();
                let vj: HashSet<Point> = c.paths()[j].vertices().into_iter().collect();
                if let Some(&v) = vi.iter().rev().find(|v| vj.contains(v)) {
                    let ci = vi.iter().position(|&w| w == v).unwrap();
                    let cj = c.paths()[j].vertices().iter().position(|&w| w == v).unwrap();
                    let (pi, pj) = (&c.paths()[i], &c.paths()[j]);
                    let mut paths = c.paths().to_vec();
                    paths[i] =
                        SchroederPath::new(pi.start_x(), [&pi.steps()[..ci], &pj.steps()[cj..]].concat()).unwrap();
                    paths[j] =
                        SchroederPath::new(pj.start_x(), [&pj.steps()[..cj], &pi.steps()[ci..]].concat()).unwrap();
                    return SignedConfiguration::new(c.scheme(), c.sigma().then_transpose(i, j), paths).unwrap();
                }
            }
        }
        c.clone()
    }

    #[test]
    fn first_pair_last_vertex_rule_is_not_an_involution() {
        // tau_2 separates tau_1 from tau_3 except where tau_3 dives through it.
        let c = SignedConfiguration::new(
            AnchorScheme::new(SchemeKind::Pi, 3),
            Permutation::identity(3),
            vec![path(-1, "UD"), path(-3, "UULDD"), path(-5, "LLUDLL")],
        )
        .unwrap();
        let once = first_pair_last_vertex_swap(&c);
        assert_ne!(first_pair_last_vertex_swap(&once), c);
        let ours = tail_swap(&c);
        assert_eq!(tail_swap(&ours), c);
    }

    #[test]
    fn signed_counts_match_determinants() {
        assert_eq!(signed_count(SchemeKind::Pi, 1, 3).unwrap(), 2.into());
        assert_eq!(signed_count(SchemeKind::Pi, 2, 3).unwrap(), 8.into());
        assert_eq!(signed_count(SchemeKind::Omega, 2, 3).unwrap(), 2.into());
        assert_eq!(
            signed_count(SchemeKind::PiStar, 2, 3).unwrap(),
            closed_form(HankelKind::H0, 2)
        );
        assert!(matches!(
            signed_count(SchemeKind::Pi, 4, 3),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn configuration_validation() {
        let scheme = AnchorScheme::new(SchemeKind::Pi, 2);
        let bad = SignedConfiguration::new(
            scheme,
            Permutation::identity(2),
            vec![path(-1, "UDLL"), path(-3, "LUD")],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn family_json() {
        let f = pi(vec![path(-1, "UD"), path(-3, "UULDD")]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"scheme":"pi","n":2,"paths":[{"start_x":-1,"steps":"UD"},{"start_x":-3,"steps":"UULDD"}]}"#
        );
        assert_eq!(serde_json::from_str::<PathFamily>(&json).unwrap(), f);
        assert!(
            serde_json::from_str::<PathFamily>(r#"{"scheme":"omega","n":1,"paths":[{"start_x":-1,"steps":"L"}]}"#)
                .is_err()
        );
    }
}

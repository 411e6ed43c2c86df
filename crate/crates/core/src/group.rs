//! Finitely generated permutation groups.
//!
//! A [`PermGroup`] is immutable; its stabilizer chain is built lazily on first use
//! and cached, after which all queries are read-only.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

/// Identification of a permutation group by its order alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GiantKind {
    Symmetric,
    Alternating,
    Other,
}

impl fmt::Display for GiantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GiantKind::Symmetric => "symmetric",
            GiantKind::Alternating => "alternating",
            GiantKind::Other => "other",
        })
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "PermGroup(degree {}, <{}>)", self.degree, gens.join(", "))
    }
}

impl PermGroup {
    /// The group generated by `generators`. Duplicates and identities are dropped.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("group degree must be positive".into()));
        }
        let mut gens: Vec<Permutation> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators: gens,
            chain: OnceLock::new(),
        })
    }

    fn with_chain(degree: usize, generators: Vec<Permutation>, chain: StabilizerChain) -> Self {
        let group = PermGroup::new(degree, generators).expect("degrees checked by caller");
        let _ = group.chain.set(chain);
        group
    }

    /// Parses generators from 1-based cycle notation.
    pub fn from_cycle_strings(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        PermGroup::new(n, gens).expect("valid degree")
    }

    /// The alternating group, generated by the 3-cycles `(1,2,k)`.
    pub fn alternating(n: usize) -> Self {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).unwrap())
            .collect();
        PermGroup::new(n, gens).expect("valid degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators, &[]))
    }

    /// A fresh chain whose base starts with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> StabilizerChain {
        StabilizerChain::build(self.degree, &self.generators, prefix)
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as a machine integer, if it fits.
    pub fn order_usize(&self) -> Option<usize> {
        self.order().to_usize()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain().contains(p))
    }

    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(())
    }

    fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && self.order() == other.order()
    }

    /// Orbit of `point`, sorted ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        self.check_point(point)?;
        Ok(orbit_under(&self.generators, self.degree, point))
    }

    /// Orbit partition of `0..degree`, each orbit sorted, ordered by minimal point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_under(&self.generators, self.degree)
    }

    pub fn is_transitive(&self) -> bool {
        orbit_under(&self.generators, self.degree, 0).len() == self.degree
    }

    /// Transitive, with the stabilizer of a point transitive on the remaining points.
    pub fn is_2_transitive(&self) -> Result<bool> {
        if self.degree < 2 {
            return Err(Error::InvalidParameter(
                "2-transitivity needs degree at least 2".into(),
            ));
        }
        if !self.is_transitive() {
            return Ok(false);
        }
        let stab = self.point_stabilizer(0)?;
        Ok(stab.orbit(1)?.len() == self.degree - 1)
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[point])
    }

    /// Pointwise stabilizer of `points`, taken from a chain with those points as base prefix.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let chain = self.chain_with_base(points);
        let depth = points.len();
        let gens = chain.stabilizer_generators(depth);
        Ok(PermGroup::with_chain(self.degree, gens, chain.tail(depth)))
    }

    /// All elements, refusing when the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::cap("group order", order, cap));
        }
        Ok(self.chain().elements())
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &PermGroup) -> Result<PermGroup> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        PermGroup::new(self.degree, gens)
    }

    /// `t⁻¹ G t`.
    pub fn conjugate(&self, t: &Permutation) -> Result<PermGroup> {
        self.check_degree(t)?;
        PermGroup::new(
            self.degree,
            self.generators
                .iter()
                .map(|g| g.conjugate_unchecked(t))
                .collect(),
        )
    }

    /// Whether `t` normalizes this group (conjugates every generator back into it).
    pub fn is_normalized_by(&self, t: &Permutation) -> bool {
        self.generators.iter().all(|g| self.has(&g.conjugate_unchecked(t)))
    }

    /// Whether `self` is a normal subgroup of `ambient`.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient.generators.iter().all(|t| self.is_normalized_by(t))
    }

    /// Compares the order against `n!` and `n!/2`.
    pub fn classify_giant(&self) -> GiantKind {
        let order = self.order();
        let full = factorial(self.degree);
        if order == full {
            GiantKind::Symmetric
        } else if self.degree >= 2 && order == full / 2u32 {
            GiantKind::Alternating
        } else {
            GiantKind::Other
        }
    }

    /// Intersection, computed by enumerating the smaller group and testing membership
    /// in the larger.
    pub fn intersect_small(&self, other: &PermGroup, cap: usize) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elems = small.elements(cap)?;
        let members = elems.into_iter().filter(|e| large.has(e));
        Ok(generated_by_elements(self.degree, members))
    }

    /// Smallest normal subgroup of `self` containing `elements`.
    pub fn normal_closure(&self, elements: &[Permutation]) -> Result<PermGroup> {
        for e in elements {
            self.check_degree(e)?;
        }
        let mut gens: Vec<Permutation> = elements.iter().filter(|e| !e.is_identity()).cloned().collect();
        gens.dedup();
        let mut current = PermGroup::new(self.degree, gens.clone())?;
        let mut idx = 0;
        while idx < gens.len() {
            let n = gens[idx].clone();
            idx += 1;
            for t in &self.generators {
                let c = n.conjugate_unchecked(t);
                if !current.has(&c) {
                    gens.push(c);
                    current = PermGroup::new(self.degree, gens.clone())?;
                }
            }
        }
        Ok(current)
    }

    /// Conjugacy classes by exhaustive enumeration. The identity class comes first.
    pub fn conjugacy_classes(&self, cap: usize) -> Result<Vec<Vec<Permutation>>> {
        let elems = self.elements(cap)?;
        let index: HashMap<&Permutation, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut class_of = vec![usize::MAX; elems.len()];
        let mut classes: Vec<Vec<Permutation>> = Vec::new();
        let mut order: Vec<usize> = (0..elems.len()).collect();
        // identity first
        if let Some(id_pos) = elems.iter().position(Permutation::is_identity) {
            order.swap(0, id_pos);
        }
        for &start in &order {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            class_of[start] = cid;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = &elems[members[head]];
                head += 1;
                for t in &self.generators {
                    let y = x.conjugate_unchecked(t);
                    let j = index[&y];
                    if class_of[j] == usize::MAX {
                        class_of[j] = cid;
                        members.push(j);
                    }
                }
            }
            classes.push(members.into_iter().map(|i| elems[i].clone()).collect());
        }
        Ok(classes)
    }

    /// Every normal subgroup exactly once, ascending by order.
    ///
    /// A normal subgroup is a union of conjugacy classes; each is found as a
    /// normal closure of one class or a join of such closures, and is identified
    /// by the set of classes it contains.
    pub fn normal_subgroups_small(&self, cap: usize) -> Result<Vec<PermGroup>> {
        let classes = self.conjugacy_classes(cap)?;
        let reps: Vec<&Permutation> = classes.iter().map(|c| &c[0]).collect();
        let signature = |n: &PermGroup| -> Vec<bool> { reps.iter().map(|r| n.has(r)).collect() };

        let mut found: Vec<(Vec<bool>, PermGroup)> = Vec::new();
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        let trivial = PermGroup::trivial(self.degree);
        seen.insert(signature(&trivial));
        found.push((signature(&trivial), trivial));
        for rep in reps.iter().skip(1) {
            let n = self.normal_closure(&[(*rep).clone()])?;
            let sig = signature(&n);
            if seen.insert(sig.clone()) {
                found.push((sig, n));
            }
        }
        // close under joins
        let mut i = 0;
        while i < found.len() {
            for j in 0..i {
                let (a, b) = (&found[i], &found[j]);
                if a.0.iter().zip(&b.0).all(|(x, y)| !y || *x) || b.0.iter().zip(&a.0).all(|(x, y)| !y || *x) {
                    continue;
                }
                let joined = a.1.join(&b.1)?;
                let sig = signature(&joined);
                if seen.insert(sig.clone()) {
                    found.push((sig, joined));
                }
            }
            i += 1;
        }
        let mut groups: Vec<PermGroup> = found.into_iter().map(|(_, g)| g).collect();
        groups.sort_by_key(|g| g.order());
        Ok(groups)
    }
}

/// Group generated by a stream of elements, keeping only those that enlarge it.
pub(crate) fn generated_by_elements(
    degree: usize,
    elements: impl IntoIterator<Item = Permutation>,
) -> PermGroup {
    let mut gens = Vec::new();
    let mut current = PermGroup::trivial(degree);
    for e in elements {
        if !current.has(&e) {
            gens.push(e);
            current = PermGroup::new(degree, gens.clone()).expect("same degree");
        }
    }
    current
}

pub(crate) fn orbit_under(generators: &[Permutation], degree: usize, point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let x = orbit[head];
        head += 1;
        for g in generators {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

pub(crate) fn orbits_under(generators: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree {
        if assigned[p] {
            continue;
        }
        let orb = orbit_under(generators, degree, p);
        for &x in &orb {
            assigned[x] = true;
        }
        out.push(orb);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(degree, gens).unwrap()
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(g(5, &["(1,2)", "(1,2,3,4,5)"]).order(), BigUint::from(120u32));
        assert_eq!(PermGroup::symmetric(4).order(), BigUint::from(24u32));
        assert_eq!(PermGroup::alternating(5).order(), BigUint::from(60u32));
        assert_eq!(PermGroup::trivial(3).order(), BigUint::one());
        assert_eq!(PermGroup::symmetric(21).order(), factorial(21));
    }

    #[test]
    fn membership() {
        let a5 = PermGroup::alternating(5);
        assert!(!a5.contains(&p("(1,2)", 5)).unwrap());
        assert!(a5.contains(&p("(1,2)(3,4)", 5)).unwrap());
        assert!(a5.contains(&p("(1,2)", 6)).is_err());
    }

    #[test]
    fn example_k5_group_is_s5() {
        let g = g(5, &["(2,4)(3,5)", "(3,5)", "(1,2)(3,4)"]);
        assert_eq!(g.order(), BigUint::from(120u32));
    }

    #[test]
    fn orbits_of_klein_group() {
        let l = g(5, &["(2,4)(3,5)", "(3,5)"]);
        assert_eq!(l.orbits(), vec![vec![0], vec![1, 3], vec![2, 4]]);
        assert_eq!(PermGroup::trivial(5).orbit(3).unwrap(), vec![3]);
        assert!(l.orbit(5).is_err());
    }

    #[test]
    fn transitivity() {
        let c5 = g(5, &["(1,2,3,4,5)"]);
        assert!(c5.is_transitive());
        assert!(!c5.is_2_transitive().unwrap());
        assert!(PermGroup::symmetric(5).is_2_transitive().unwrap());
        assert!(PermGroup::trivial(1).is_2_transitive().is_err());
    }

    #[test]
    fn point_stabilizer_of_s5() {
        let s5 = PermGroup::symmetric(5);
        let st = s5.point_stabilizer(0).unwrap();
        assert_eq!(st.order(), BigUint::from(24u32));
        assert!(st.generators().iter().all(|x| x.image(0) == 0));
        assert!(s5.point_stabilizer(9).is_err());
    }

    #[test]
    fn element_enumeration_and_cap() {
        assert_eq!(PermGroup::symmetric(4).elements(100).unwrap().len(), 24);
        let l = g(5, &["(2,4)(3,5)", "(3,5)"]);
        let mut elems: Vec<String> = l.elements(10).unwrap().iter().map(|e| e.to_string()).collect();
        elems.sort();
        assert_eq!(elems, vec!["()", "(2,4)", "(2,4)(3,5)", "(3,5)"]);
        let err = PermGroup::alternating(5).elements(50).unwrap_err();
        assert!(err.is_cap_exceeded());
    }

    #[test]
    fn intersections() {
        let l = g(5, &["(2,4)(3,5)", "(3,5)"]);
        let t = p("(1,2)(3,4)", 5);
        let lg = l.conjugate(&t).unwrap();
        assert!(l.intersect_small(&lg, 100).unwrap().is_trivial());
        let a5 = PermGroup::alternating(5);
        assert!(a5.intersect_small(&a5, 100).unwrap().same_group(&a5));
        assert!(PermGroup::symmetric(8)
            .intersect_small(&PermGroup::alternating(8), 100)
            .unwrap_err()
            .is_cap_exceeded());
    }

    #[test]
    fn normal_closure_of_three_cycle() {
        let s5 = PermGroup::symmetric(5);
        let n = s5.normal_closure(&[p("(1,2,3)", 5)]).unwrap();
        assert!(n.same_group(&PermGroup::alternating(5)));
    }

    #[test]
    fn normal_subgroups_of_s4() {
        let orders: Vec<BigUint> = PermGroup::symmetric(4)
            .normal_subgroups_small(10_000)
            .unwrap()
            .iter()
            .map(PermGroup::order)
            .collect();
        let expect: Vec<BigUint> = [1u32, 4, 12, 24].iter().map(|&x| BigUint::from(x)).collect();
        assert_eq!(orders, expect);
    }

    #[test]
    fn giant_classification() {
        assert_eq!(PermGroup::symmetric(6).classify_giant(), GiantKind::Symmetric);
        assert_eq!(PermGroup::alternating(6).classify_giant(), GiantKind::Alternating);
        assert_eq!(g(5, &["(1,2,3,4,5)"]).classify_giant(), GiantKind::Other);
    }
}

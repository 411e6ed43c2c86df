//! Permutations of a finite point set.
//!
//! Points are `0..degree` internally. Text I/O uses the 1-based disjoint-cycle
//! notation `(1,2)(3,4)`, so conversion happens only in [`Permutation::parse_cycles`]
//! and [`Permutation::to_cycle_string`].
//!
//! Composition uses the right-action convention: `p.compose(&q)` first applies
//! `p`, then `q`, so `i^(pq) = (i^p)^q`. The same order is used by the `*`
//! operator. Conjugation is `p^t = t⁻¹ p t` and the commutator is
//! `[p, q] = p⁻¹ q⁻¹ p q`.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_integer_lcm::lcm;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image array; `images[i]` is the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() {
                return Err(Error::PointOutOfRange {
                    point: x,
                    degree: images.len(),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p >= degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(Error::Parse(format!("point {} repeated", p + 1)));
                }
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `"(1,2)(3,4)"`. The empty string and
    /// `"()"` denote the identity. Points may be separated by commas or spaces.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body_start
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &body_start[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let point: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange {
                        point,
                        degree,
                    });
                }
                cycle.push(point - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body_start[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `point`, i.e. `point^self`.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.then(other))
    }

    #[inline]
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `t⁻¹ · self · t`.
    pub fn conjugate(&self, t: &Permutation) -> Result<Permutation> {
        self.check_degree(t)?;
        Ok(self.conjugate_unchecked(t))
    }

    pub(crate) fn conjugate_unchecked(&self, t: &Permutation) -> Permutation {
        // (i^t)^(t⁻¹ p t) = (i^p)^t
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[t.images[i]] = t.images[x];
        }
        Permutation { images }
    }

    /// `self⁻¹ · q⁻¹ · self · q`.
    pub fn commutator(&self, q: &Permutation) -> Result<Permutation> {
        self.check_degree(q)?;
        Ok(self.inverse().then(&q.inverse()).then(self).then(q))
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut result = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }

    /// All cycles including fixed points, each starting at its minimal point,
    /// ordered by minimal point.
    fn all_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Non-trivial cycles (0-based), minimal point first, sorted by minimal point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// Multiset of cycle lengths including fixed points, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.all_cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] != i).collect()
    }

    pub fn parity(&self) -> Parity {
        let cycles = self.all_cycles().len();
        if (self.degree() - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Element order: the lcm of the cycle lengths.
    pub fn order(&self) -> BigUint {
        self.all_cycles()
            .iter()
            .fold(BigUint::from(1u32), |acc, c| lcm(&acc, &BigUint::from(c.len())))
    }

    /// 1-based cycle notation with fixed points omitted; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.to_cycle_string(), self.degree())
    }
}

/// Right-action product: `&p * &q` applies `p` first.
///
/// Panics on a degree mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.then(rhs)
    }
}

mod num_integer_lcm {
    use num_bigint::BigUint;
    use num_traits::Zero;

    pub fn lcm(a: &BigUint, b: &BigUint) -> BigUint {
        if a.is_zero() || b.is_zero() {
            return BigUint::zero();
        }
        a / gcd(a.clone(), b.clone()) * b
    }

    fn gcd(mut a: BigUint, mut b: BigUint) -> BigUint {
        while !b.is_zero() {
            let r = &a % &b;
            a = b;
            b = r;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn compose_follows_right_action() {
        assert!(p("(1,2)", 3).compose(&p("(1,2)", 3)).unwrap().is_identity());
        let klein = p("(2,4)(3,5)", 5).compose(&p("(3,5)", 5)).unwrap();
        assert_eq!(klein, p("(2,4)", 5));
        // (1 2) then (2 3): 1 -> 2 -> 3
        let q = p("(1,2)", 3).compose(&p("(2,3)", 3)).unwrap();
        assert_eq!(q.image(0), 2);
    }

    #[test]
    fn compose_rejects_mixed_degrees() {
        let err = p("(1,2)", 3).compose(&p("(1,2)", 4)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(p("(1,2,3)", 3).inverse(), p("(1,3,2)", 3));
        assert!(Permutation::identity(4).inverse().is_identity());
    }

    #[test]
    fn conjugate_moves_support() {
        let t = p("(1,2)(3,4)", 5);
        assert_eq!(p("(3,5)", 5).conjugate(&t).unwrap(), p("(4,5)", 5));
        assert_eq!(
            p("(1,2)", 5).conjugate(&Permutation::identity(5)).unwrap(),
            p("(1,2)", 5)
        );
    }

    fn k2m_c(m: usize) -> (Permutation, Permutation) {
        let n = 2 * m + 1;
        let a = Permutation::from_cycles(n, &[(1..n).collect()]).unwrap();
        let b_cycles: Vec<Vec<usize>> = (3..=m + 1).map(|i| vec![i - 1, 2 * m + 4 - i - 1]).collect();
        let b = Permutation::from_cycles(n, &b_cycles).unwrap();
        let g = p("(1,2)(3,4)", n);
        (&a.pow(2) * &b, g)
    }

    #[test]
    fn commutator_matches_dihedral_formula() {
        let (c, g) = k2m_c(4);
        assert_eq!(c.commutator(&g).unwrap(), p("(1,8,2)(3,4)(7,6)", 9));
        let (c, g) = k2m_c(5);
        assert_eq!(c.commutator(&g).unwrap(), p("(1,10,2)(3,4)(9,8)", 11));
        assert!(c.commutator(&Permutation::identity(11)).unwrap().is_identity());
    }

    #[test]
    fn parity_of_cycles() {
        assert!(Permutation::identity(3).parity().is_even());
        for b in 2..8 {
            let c = Permutation::from_cycles(8, &[(0..b).collect()]).unwrap();
            assert_eq!(c.parity().is_even(), b % 2 == 1);
        }
    }

    #[test]
    fn cycle_string_round_trip() {
        assert!(p("", 4).is_identity());
        assert!(p("()", 4).is_identity());
        assert_eq!(p("(2,3,4,5)", 5).to_cycle_string(), "(2,3,4,5)");
        assert_eq!(p(" ( 3, 4 ) (1 , 2)", 5).to_cycle_string(), "(1,2)(3,4)");
        assert_eq!(p("(5,2)", 5).to_cycle_string(), "(2,5)");
        assert_eq!(Permutation::identity(2).to_cycle_string(), "()");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse_cycles("(1,2)(2,3)", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse_cycles("(1,7)", 4),
            Err(Error::PointOutOfRange { point: 7, degree: 4 })
        ));
        assert!(Permutation::parse_cycles("(1,2", 4).is_err());
        assert!(Permutation::parse_cycles("1,2)", 4).is_err());
        assert!(Permutation::parse_cycles("(1,x)", 4).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn support_cycle_type_order() {
        let id = Permutation::identity(5);
        assert!(id.support().is_empty());
        assert_eq!(id.cycle_type(), vec![1; 5]);
        assert_eq!(id.order(), BigUint::from(1u32));

        // g1 of the (a, b) = (3, 4) abelian construction: (4,5)(8,9)
        let g1 = p("(4,5)(8,9)", 13);
        assert_eq!(g1.support(), vec![3, 4, 7, 8]);
        assert_eq!(g1.order(), BigUint::from(2u32));

        let q = p("(1,2,3)(4,5)", 6);
        assert_eq!(q.cycle_type(), vec![1, 2, 3]);
        assert_eq!(q.order(), BigUint::from(6u32));
        // brute force: smallest k with q^k = id
        let mut k = 1u64;
        while !q.pow(k).is_identity() {
            k += 1;
        }
        assert_eq!(BigUint::from(k), q.order());
    }
}

//! Finite Abelian groups presented as direct products of cyclic groups.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on the number of elements [`GroupSpec::enumerate`] will list.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// A finite Abelian group `Z_{d_1} ⊕ … ⊕ Z_{d_r}`, kept in the order given.
///
/// The empty factor list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    factors: Vec<u64>,
    order: u64,
}

/// An element of a [`GroupSpec`]: one residue per cyclic factor.
///
/// The derived ordering is lexicographic on residues, which coincides with
/// the mixed-radix enumeration order of the owning group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn new(residues: Vec<u64>) -> Self {
        GroupElement(residues)
    }

    pub fn residues(&self) -> &[u64] {
        &self.0
    }

    pub fn into_residues(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&r| r == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// Result of [`GroupSpec::ant_decomposition`]: the group is isomorphic to
/// `Z_{cyclic_order} ⊕ odd_part` with `cyclic_order = 4m`, `m > 1` and
/// `|odd_part|` odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntDecomposition {
    pub cyclic_order: u64,
    pub odd_part: GroupSpec,
}

impl AntDecomposition {
    /// `m` in `Z_{4m}`.
    pub fn m(&self) -> u64 {
        self.cyclic_order / 4
    }

    /// `Z_{4m} ⊕ H` as a single spec, cyclic factor first.
    pub fn as_spec(&self) -> GroupSpec {
        GroupSpec::cyclic(self.cyclic_order).concat(&self.odd_part)
    }
}

impl GroupSpec {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidSpec(format!(
                "cyclic factor {bad} is below 2"
            )));
        }
        let order = factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::InvalidSpec("group order overflows u64".into()))?;
        Ok(GroupSpec { factors, order })
    }

    pub fn trivial() -> Self {
        GroupSpec {
            factors: Vec::new(),
            order: 1,
        }
    }

    /// `Z_n`; `n = 1` gives the trivial group.
    ///
    /// Panics if `n == 0`.
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        if n == 1 {
            Self::trivial()
        } else {
            GroupSpec {
                factors: vec![n],
                order: n,
            }
        }
    }

    /// `(Z_2)^m`.
    pub fn elementary_two(m: usize) -> Self {
        GroupSpec {
            factors: vec![2; m],
            order: 1u64 << m,
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Direct sum with `other`, factors of `self` first.
    pub fn concat(&self, other: &GroupSpec) -> GroupSpec {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupSpec {
            factors,
            order: self.order * other.order,
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    /// Validates that `residues` is a reduced element of this group.
    pub fn element(&self, residues: Vec<u64>) -> Result<GroupElement> {
        let e = GroupElement(residues);
        self.check(&e)?;
        Ok(e)
    }

    /// Builds an element from arbitrary integers, reducing each coordinate.
    pub fn element_reduced(&self, residues: &[i64]) -> Result<GroupElement> {
        if residues.len() != self.factors.len() {
            return Err(self.shape_error(residues.len()));
        }
        Ok(GroupElement(
            residues
                .iter()
                .zip(&self.factors)
                .map(|(&r, &d)| r.rem_euclid(d as i64) as u64)
                .collect(),
        ))
    }

    pub fn conforms(&self, a: &GroupElement) -> bool {
        a.0.len() == self.factors.len() && a.0.iter().zip(&self.factors).all(|(&r, &d)| r < d)
    }

    pub fn check(&self, a: &GroupElement) -> Result<()> {
        if a.0.len() != self.factors.len() {
            return Err(self.shape_error(a.0.len()));
        }
        for (i, (&r, &d)) in a.0.iter().zip(&self.factors).enumerate() {
            if r >= d {
                return Err(Error::InvalidElement(format!(
                    "coordinate {i} is {r}, not reduced modulo {d}"
                )));
            }
        }
        Ok(())
    }

    fn shape_error(&self, got: usize) -> Error {
        Error::InvalidElement(format!(
            "element has {got} coordinates, group {self} has {}",
            self.factors.len()
        ))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub fn negate(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.negate_unchecked(a))
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, &self.negate_unchecked(b)))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((&x, &y), &d)| ((x as u128 + y as u128) % d as u128) as u64)
                .collect(),
        )
    }

    pub(crate) fn add_assign_unchecked(&self, acc: &mut GroupElement, b: &GroupElement) {
        for ((x, &y), &d) in acc.0.iter_mut().zip(&b.0).zip(&self.factors) {
            *x = ((*x as u128 + y as u128) % d as u128) as u64;
        }
    }

    pub(crate) fn negate_unchecked(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &d)| if x == 0 { 0 } else { d - x })
                .collect(),
        )
    }

    /// `k·a`.
    pub fn scale(&self, a: &GroupElement, k: u64) -> Result<GroupElement> {
        self.check(a)?;
        Ok(GroupElement(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &d)| ((x as u128 * k as u128) % d as u128) as u64)
                .collect(),
        ))
    }

    /// Position of `a` in mixed-radix order (last coordinate fastest).
    pub fn index_of(&self, a: &GroupElement) -> u64 {
        a.0.iter()
            .zip(&self.factors)
            .fold(0u64, |acc, (&r, &d)| acc * d + r)
    }

    /// Inverse of [`GroupSpec::index_of`]. `index` must be below the order.
    pub fn element_at(&self, mut index: u64) -> GroupElement {
        debug_assert!(index < self.order);
        let mut res = vec![0; self.factors.len()];
        for (slot, &d) in res.iter_mut().zip(&self.factors).rev() {
            *slot = index % d;
            index /= d;
        }
        GroupElement(res)
    }

    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        self.enumerate_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    /// Every element exactly once, in mixed-radix order.
    pub fn enumerate_with_cap(&self, cap: u64) -> Result<Vec<GroupElement>> {
        if self.order > cap {
            return Err(Error::CapExceeded {
                limit: cap,
                requested: self.order,
            });
        }
        Ok((0..self.order).map(|i| self.element_at(i)).collect())
    }

    /// Primary decomposition, sorted by `(prime, exponent)`.
    pub fn canonical(&self) -> GroupSpec {
        let mut parts: Vec<(u64, u64)> = self
            .factors
            .iter()
            .flat_map(|&d| prime_power_parts(d))
            .collect();
        parts.sort_unstable();
        let factors: Vec<u64> = parts.into_iter().map(|(_, q)| q).collect();
        GroupSpec {
            factors,
            order: self.order,
        }
    }

    pub fn is_isomorphic(&self, other: &GroupSpec) -> bool {
        self.canonical() == other.canonical()
    }

    /// Number of even-order factors in the primary decomposition.
    pub fn even_primary_factors(&self) -> usize {
        self.factors.iter().filter(|&&d| d % 2 == 0).count()
    }

    /// `|I(A)| = 2^e − 1`, `e` the number of even-order primary factors.
    pub fn involution_count(&self) -> u64 {
        (1u64 << self.even_primary_factors()) - 1
    }

    /// Splits into the Sylow 2-subgroup and the odd-order part, both in
    /// canonical form.
    pub fn sylow_split(&self) -> (GroupSpec, GroupSpec) {
        let canon = self.canonical();
        let (two, odd): (Vec<u64>, Vec<u64>) = canon.factors.iter().partition(|&&q| q % 2 == 0);
        let two_order = two.iter().product();
        let odd_order = odd.iter().product();
        (
            GroupSpec {
                factors: two,
                order: two_order,
            },
            GroupSpec {
                factors: odd,
                order: odd_order,
            },
        )
    }

    /// True iff the canonical form is all 2s (`Z_2` included).
    pub fn is_elementary_two(&self) -> bool {
        !self.factors.is_empty() && self.canonical().factors.iter().all(|&q| q == 2)
    }

    /// Writes the group as `Z_{4m} ⊕ H` with `m > 1` and `|H|` odd, when
    /// possible.
    ///
    /// Requires a cyclic Sylow 2-subgroup of order at least 4. A group given
    /// as a single cyclic factor keeps its full order as `4m`. Otherwise a
    /// Sylow 2-part of order at least 8 is used alone with `H` the odd part,
    /// and a Sylow 2-part of order 4 absorbs the largest invariant factor of
    /// the odd part.
    pub fn ant_decomposition(&self) -> Option<AntDecomposition> {
        let (two, odd) = self.sylow_split();
        if two.factors.len() != 1 || two.order < 4 {
            return None;
        }
        if self.factors.len() == 1 {
            if self.order == 4 {
                return None;
            }
            return Some(AntDecomposition {
                cyclic_order: self.order,
                odd_part: GroupSpec::trivial(),
            });
        }
        if two.order >= 8 {
            return Some(AntDecomposition {
                cyclic_order: two.order,
                odd_part: odd,
            });
        }
        if odd.is_trivial() {
            return None;
        }
        // Largest invariant factor of the odd part: the top power of each prime.
        let mut rest: Vec<u64> = Vec::new();
        let mut absorbed = 1u64;
        let parts: Vec<(u64, u64)> = odd
            .factors
            .iter()
            .map(|&q| (smallest_prime_factor(q), q))
            .collect();
        for (i, &(p, q)) in parts.iter().enumerate() {
            let is_top = parts.get(i + 1).is_none_or(|&(p2, _)| p2 != p);
            if is_top {
                absorbed *= q;
            } else {
                rest.push(q);
            }
        }
        let rest_order = rest.iter().product();
        Some(AntDecomposition {
            cyclic_order: 4 * absorbed,
            odd_part: GroupSpec {
                factors: rest,
                order: rest_order,
            },
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("trivial");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{d}")?;
        }
        Ok(())
    }
}

/// Parses `Z8xZ3` (case-insensitive), `Z2^3`, or `trivial`.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim().to_ascii_lowercase();
        if text == "trivial" || text == "1" || text == "z1" {
            return Ok(GroupSpec::trivial());
        }
        let bad = || Error::InvalidSpec(format!("cannot parse group `{s}`"));
        let mut factors = Vec::new();
        for part in text.split(['x', '+', '*']) {
            let part = part.trim();
            let body = part.strip_prefix('z').ok_or_else(bad)?;
            let (base, power) = match body.split_once('^') {
                Some((b, p)) => (b, p.parse::<usize>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let d: u64 = base.parse().map_err(|_| bad())?;
            factors.extend(core::iter::repeat_n(d, power));
        }
        GroupSpec::new(factors)
    }
}

/// Primary decomposition of `factors` (each ≥ 2).
pub fn canonicalize_spec(factors: &[u64]) -> Result<GroupSpec> {
    Ok(GroupSpec::new(factors.to_vec())?.canonical())
}

/// All Abelian groups of order `n` up to isomorphism, in canonical form.
pub fn groups_of_order(n: u64) -> Vec<GroupSpec> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![GroupSpec::trivial()];
    }
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for partition in partitions(e as usize) {
            // ascending exponents inside one prime
            let mut powers: Vec<u64> = partition.iter().map(|&k| p.pow(k as u32)).collect();
            powers.sort_unstable();
            for prefix in &out {
                let mut f = prefix.clone();
                f.extend_from_slice(&powers);
                next.push(f);
            }
        }
        out = next;
    }
    let mut groups: Vec<GroupSpec> = out
        .into_iter()
        .map(|f| GroupSpec::new(f).expect("prime powers are ≥ 2").canonical())
        .collect();
    groups.sort_by(|a, b| {
        a.factors
            .len()
            .cmp(&b.factors.len())
            .then_with(|| a.factors.cmp(&b.factors))
    });
    groups.dedup();
    groups
}

/// Integer partitions of `n`, each in non-increasing order.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `(prime, exponent)` pairs of `n ≥ 2`, primes ascending.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn prime_power_parts(d: u64) -> Vec<(u64, u64)> {
    factorize(d)
        .into_iter()
        .map(|(p, e)| (p, p.pow(e)))
        .collect()
}

fn smallest_prime_factor(q: u64) -> u64 {
    factorize(q).first().map_or(q, |&(p, _)| p)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "not coprime");
    old_s.rem_euclid(m as i128) as u64
}

/// One prime-power part of a given cyclic factor.
#[derive(Debug, Clone)]
struct PrimaryPart {
    factor: usize,
    modulus: u64,
    canonical_slot: usize,
}

/// Coordinates of a spec relative to its primary decomposition.
#[derive(Debug, Clone)]
struct PrimaryCoordinates {
    spec: GroupSpec,
    parts: Vec<PrimaryPart>,
}

impl PrimaryCoordinates {
    fn new(spec: &GroupSpec) -> Self {
        let mut keyed: Vec<((u64, u64), usize, u64)> = Vec::new();
        for (i, &d) in spec.factors.iter().enumerate() {
            for (p, q) in prime_power_parts(d) {
                keyed.push(((p, q), i, q));
            }
        }
        let mut order: Vec<usize> = (0..keyed.len()).collect();
        order.sort_by_key(|&j| keyed[j].0);
        let mut parts: Vec<PrimaryPart> = keyed
            .iter()
            .map(|&(_, factor, modulus)| PrimaryPart {
                factor,
                modulus,
                canonical_slot: 0,
            })
            .collect();
        for (slot, &j) in order.iter().enumerate() {
            parts[j].canonical_slot = slot;
        }
        PrimaryCoordinates {
            spec: spec.clone(),
            parts,
        }
    }

    fn to_canonical(&self, a: &GroupElement) -> Vec<u64> {
        let mut out = vec![0; self.parts.len()];
        for part in &self.parts {
            out[part.canonical_slot] = a.0[part.factor] % part.modulus;
        }
        out
    }

    fn element_from_canonical(&self, coords: &[u64]) -> GroupElement {
        let mut res = vec![0u64; self.spec.factors.len()];
        for part in &self.parts {
            let d = self.spec.factors[part.factor];
            let cofactor = d / part.modulus;
            let inv = mod_inverse(cofactor % part.modulus, part.modulus);
            let term = (coords[part.canonical_slot] as u128 * cofactor as u128 % d as u128)
                * inv as u128
                % d as u128;
            res[part.factor] = ((res[part.factor] as u128 + term) % d as u128) as u64;
        }
        GroupElement(res)
    }
}

/// An explicit isomorphism between two presentations of the same group,
/// routed through their common primary decomposition.
#[derive(Debug, Clone)]
pub struct GroupIsomorphism {
    source: PrimaryCoordinates,
    target: PrimaryCoordinates,
}

impl GroupIsomorphism {
    pub fn new(source: &GroupSpec, target: &GroupSpec) -> Result<Self> {
        if !source.is_isomorphic(target) {
            return Err(Error::InvalidSpec(format!(
                "{source} and {target} are not isomorphic"
            )));
        }
        Ok(GroupIsomorphism {
            source: PrimaryCoordinates::new(source),
            target: PrimaryCoordinates::new(target),
        })
    }

    pub fn source(&self) -> &GroupSpec {
        &self.source.spec
    }

    pub fn target(&self) -> &GroupSpec {
        &self.target.spec
    }

    pub fn apply(&self, a: &GroupElement) -> Result<GroupElement> {
        self.source.spec.check(a)?;
        Ok(self.target.element_from_canonical(&self.source.to_canonical(a)))
    }
}

/// Addition and negation tables over element indices, for the searches.
#[derive(Debug, Clone)]
pub struct CayleyTable {
    spec: GroupSpec,
    n: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
}

/// Largest group the search tables are built for.
pub const CAYLEY_CAP: u64 = 4096;

impl CayleyTable {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let elems = spec.enumerate_with_cap(CAYLEY_CAP)?;
        let n = elems.len();
        let mut add = vec![0u32; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate().skip(i) {
                let s = spec.index_of(&spec.add_unchecked(a, b)) as u32;
                add[i * n + j] = s;
                add[j * n + i] = s;
            }
        }
        let neg = elems
            .iter()
            .map(|a| spec.index_of(&spec.negate_unchecked(a)) as u32)
            .collect();
        Ok(CayleyTable {
            spec: spec.clone(),
            n,
            add,
            neg,
        })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn element(&self, index: usize) -> GroupElement {
        self.spec.element_at(index as u64)
    }

    pub fn index(&self, a: &GroupElement) -> usize {
        self.spec.index_of(a) as usize
    }
}

//! Finite Abelian groups given as products of cyclic groups, their character
//! groups, and the canonical pairing between the two.
//!
//! A presentation `Z_{d_1} × … × Z_{d_k}` is taken exactly as written; no
//! normal-form reduction is applied. Elements and characters are exponent
//! vectors, and a character `(r_1, …, r_k)` pairs with `(a_1, …, a_k)` to
//! `Π ζ_{d_i}^{r_i a_i}`. Enumeration is always lexicographic on exponent
//! vectors, which coincides with the mixed-radix index order used internally.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycAccumulator, CycNumber, CyclotomicField};
use crate::error::{Error, Result};
use crate::rational::{gcd, lcm};

/// Cyclic orders `(d_1, …, d_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    orders: Vec<u32>,
}

impl GroupSpec {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if let Some(pos) = orders.iter().position(|&d| d == 0) {
            return Err(Error::ParseGroup {
                pos,
                msg: "cyclic order must be at least 1".into(),
            });
        }
        Ok(GroupSpec { orders })
    }

    pub fn trivial() -> Self {
        GroupSpec { orders: Vec::new() }
    }

    pub fn cyclic(n: u32) -> Self {
        assert!(n >= 1);
        GroupSpec { orders: vec![n] }
    }

    /// Parses `Z<d>(xZ<d>)*`, case-insensitively, or `1` for the trivial group.
    pub fn parse(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let err = |pos: usize, msg: &str| Error::ParseGroup {
            pos,
            msg: msg.to_string(),
        };
        if text == "1" {
            return Ok(Self::trivial());
        }
        if text.is_empty() {
            return Err(err(0, "empty group spec"));
        }
        let mut orders = Vec::new();
        let mut pos = 0;
        loop {
            if pos >= bytes.len() || !bytes[pos].eq_ignore_ascii_case(&b'z') {
                return Err(err(pos, "expected 'Z'"));
            }
            pos += 1;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err(pos, "expected cyclic order"));
            }
            let d: u32 = text[start..pos]
                .parse()
                .map_err(|_| err(start, "cyclic order out of range"))?;
            if d == 0 {
                return Err(err(start, "cyclic order must be at least 1"));
            }
            orders.push(d);
            if pos == bytes.len() {
                break;
            }
            if !bytes[pos].eq_ignore_ascii_case(&b'x') {
                return Err(err(pos, "expected 'x' between factors"));
            }
            pos += 1;
        }
        Ok(GroupSpec { orders })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Group order n = Π d_i.
    pub fn order(&self) -> u64 {
        self.orders.iter().map(|&d| d as u64).product()
    }

    /// Exponent e = lcm(d_i), 1 for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &d| lcm(acc, d as u64))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.orders.iter().map(|d| format!("Z{d}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// An element of Γ as an exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<u32>);

/// An element of Γ* as an exponent vector over the same cyclic factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub Vec<u32>);

impl GroupElement {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Character {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

/// Renders an exponent vector as used in CLI degree strings: `()` for the
/// trivial group, otherwise the exponents joined by `.`.
pub fn exponent_string(exps: &[u32]) -> String {
    if exps.is_empty() {
        return "()".into();
    }
    exps.iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(".")
}

struct GroupData {
    spec: GroupSpec,
    n: usize,
    exponent: u64,
    field: Arc<CyclotomicField>,
    elements: Vec<Vec<u32>>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    /// Pairing exponents: ⟨χ_i, g_j⟩ = ζ_e^{pairing[i*n + j]}.
    pairing: Vec<u32>,
    roots: Vec<CycNumber>,
}

/// A finite Abelian group together with its precomputed tables and the
/// scalar field ℚ(ζ_e) every computation over it uses.
///
/// Cloning is cheap. Basis elements of both Γ and Γ* are addressed by their
/// lexicographic index in `0..n`.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({})", self.0.spec)
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Group {}

impl Group {
    pub fn new(spec: GroupSpec) -> Self {
        let n = spec.order() as usize;
        let exponent = spec.exponent();
        let field = CyclotomicField::new(exponent);
        let k = spec.rank();
        let orders = spec.orders().to_vec();

        let mut elements = Vec::with_capacity(n);
        let mut cur = vec![0u32; k];
        for _ in 0..n {
            elements.push(cur.clone());
            for i in (0..k).rev() {
                cur[i] += 1;
                if cur[i] < orders[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
        let encode = |v: &[u32]| -> usize {
            v.iter()
                .zip(&orders)
                .fold(0usize, |acc, (&a, &d)| acc * d as usize + a as usize)
        };
        let mut mul = vec![0usize; n * n];
        let mut pairing = vec![0u32; n * n];
        let weights: Vec<u64> = orders.iter().map(|&d| exponent / d as u64).collect();
        let mut buf = vec![0u32; k];
        for i in 0..n {
            for j in 0..n {
                for t in 0..k {
                    buf[t] = (elements[i][t] + elements[j][t]) % orders[t];
                }
                mul[i * n + j] = encode(&buf);
                let p: u64 = (0..k)
                    .map(|t| {
                        (elements[i][t] as u64 * elements[j][t] as u64 % orders[t] as u64)
                            * weights[t]
                    })
                    .sum::<u64>()
                    % exponent;
                pairing[i * n + j] = p as u32;
            }
        }
        let inv = (0..n)
            .map(|i| {
                let neg: Vec<u32> = elements[i]
                    .iter()
                    .zip(&orders)
                    .map(|(&a, &d)| (d - a) % d)
                    .collect();
                encode(&neg)
            })
            .collect();
        let roots = (0..exponent)
            .map(|r| CycNumber::root_of_unity(&field, r as i64))
            .collect();
        Group(Arc::new(GroupData {
            spec,
            n,
            exponent,
            field,
            elements,
            mul,
            inv,
            pairing,
            roots,
        }))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::new(GroupSpec::parse(text)?))
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.0.spec
    }

    pub fn order(&self) -> usize {
        self.0.n
    }

    pub fn exponent(&self) -> u64 {
        self.0.exponent
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.0.field
    }

    pub fn zero(&self) -> CycNumber {
        CycNumber::zero(&self.0.field)
    }

    pub fn one(&self) -> CycNumber {
        CycNumber::one(&self.0.field)
    }

    /// ζ_e^k.
    pub fn root(&self, k: i64) -> CycNumber {
        self.0.roots[k.rem_euclid(self.0.exponent as i64) as usize].clone()
    }

    pub(crate) fn check_same(&self, other: &Group) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpecMismatch(
                self.spec().to_string(),
                other.spec().to_string(),
            ))
        }
    }

    pub fn exponents(&self, idx: usize) -> &[u32] {
        &self.0.elements[idx]
    }

    pub fn element(&self, idx: usize) -> GroupElement {
        GroupElement(self.0.elements[idx].clone())
    }

    pub fn character(&self, idx: usize) -> Character {
        Character(self.0.elements[idx].clone())
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.0.n).map(|i| self.element(i))
    }

    pub fn characters(&self) -> impl Iterator<Item = Character> + '_ {
        (0..self.0.n).map(|i| self.character(i))
    }

    fn index_of(&self, what: &'static str, exps: &[u32]) -> Result<usize> {
        let orders = self.0.spec.orders();
        if exps.len() != orders.len() || exps.iter().zip(orders).any(|(&a, &d)| a >= d) {
            return Err(Error::NotInGroup {
                what,
                exponents: exps.to_vec(),
                group: self.0.spec.to_string(),
            });
        }
        Ok(exps
            .iter()
            .zip(orders)
            .fold(0usize, |acc, (&a, &d)| acc * d as usize + a as usize))
    }

    pub fn index_of_element(&self, g: &GroupElement) -> Result<usize> {
        self.index_of("element", &g.0)
    }

    pub fn index_of_character(&self, c: &Character) -> Result<usize> {
        self.index_of("character", &c.0)
    }

    /// Index of the identity (and of the trivial character).
    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn identity(&self) -> GroupElement {
        self.element(0)
    }

    pub fn trivial_character(&self) -> Character {
        self.character(0)
    }

    #[inline]
    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        self.0.mul[i * self.0.n + j]
    }

    #[inline]
    pub fn inv_idx(&self, i: usize) -> usize {
        self.0.inv[i]
    }

    pub fn mul(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        let (i, j) = (self.index_of_element(g)?, self.index_of_element(h)?);
        Ok(self.element(self.mul_idx(i, j)))
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        Ok(self.element(self.inv_idx(self.index_of_element(g)?)))
    }

    pub fn mul_characters(&self, a: &Character, b: &Character) -> Result<Character> {
        let (i, j) = (self.index_of_character(a)?, self.index_of_character(b)?);
        Ok(self.character(self.mul_idx(i, j)))
    }

    pub fn order_idx(&self, i: usize) -> u64 {
        self.exponents(i)
            .iter()
            .zip(self.spec().orders())
            .fold(1, |acc, (&a, &d)| lcm(acc, d as u64 / gcd(d as u64, a as u64)))
    }

    /// Order of `g`: lcm over i of `d_i / gcd(d_i, a_i)`.
    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        Ok(self.order_idx(self.index_of_element(g)?))
    }

    /// Exponent `p` with ⟨χ_ci, g_gi⟩ = ζ_e^p.
    #[inline]
    pub fn pairing_exp(&self, ci: usize, gi: usize) -> u32 {
        self.0.pairing[ci * self.0.n + gi]
    }

    pub fn pairing_idx(&self, ci: usize, gi: usize) -> CycNumber {
        self.root(self.pairing_exp(ci, gi) as i64)
    }

    /// The canonical pairing ⟨χ, g⟩ at conductor e.
    pub fn pairing(&self, chi: &Character, g: &GroupElement) -> Result<CycNumber> {
        Ok(self.pairing_idx(
            self.index_of_character(chi)?,
            self.index_of_element(g)?,
        ))
    }

    /// Smallest subgroup containing `generators`, by orbit closure.
    pub fn subgroup_closure(&self, generators: &[GroupElement]) -> Result<Subgroup> {
        let gens = generators
            .iter()
            .map(|g| self.index_of_element(g))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = self.mul_idx(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let members = (0..self.order()).filter(|&i| seen[i]).collect();
        Ok(Subgroup {
            group: self.clone(),
            members,
        })
    }

    /// Coset representatives of Γ/N, each the lexicographically least element
    /// of its coset.
    pub fn quotient(&self, sub: &Subgroup) -> Result<QuotientData> {
        self.check_same(&sub.group)?;
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &h in &sub.members {
                covered[self.mul_idx(g, h)] = true;
            }
        }
        Ok(QuotientData {
            subgroup: sub.clone(),
            coset_reps: reps,
        })
    }

    /// Δ = {γ' ∈ Γ* | ⟨γ', γ⟩ = 1 for all γ ∈ N}. The result lives in Γ*.
    pub fn annihilator(&self, sub: &Subgroup) -> Result<Subgroup> {
        self.check_same(&sub.group)?;
        let members = (0..self.order())
            .filter(|&c| sub.members.iter().all(|&g| self.pairing_exp(c, g) == 0))
            .collect();
        Ok(Subgroup {
            group: self.clone(),
            members,
        })
    }

    /// The subgroup of Γ on which every character of `chars` (a subgroup of
    /// Γ*) is trivial; inverts [`Group::annihilator`] under Γ** ≅ Γ.
    pub fn annihilator_of_characters(&self, chars: &Subgroup) -> Result<Subgroup> {
        self.check_same(&chars.group)?;
        let members = (0..self.order())
            .filter(|&g| chars.members.iter().all(|&c| self.pairing_exp(c, g) == 0))
            .collect();
        Ok(Subgroup {
            group: self.clone(),
            members,
        })
    }
}

/// A subgroup of Γ (or of Γ*, depending on context) stored as a sorted set of
/// element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    group: Group,
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `elements` contains the identity and is closed under
    /// multiplication and inversion.
    pub fn new(group: &Group, elements: &[GroupElement]) -> Result<Self> {
        let set: BTreeSet<usize> = elements
            .iter()
            .map(|g| group.index_of_element(g))
            .collect::<Result<_>>()?;
        Self::from_indices(group, set.into_iter().collect())
    }

    pub fn from_indices(group: &Group, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&i| i >= group.order()) {
            return Err(Error::NotSubgroup("index out of range".into()));
        }
        let mut present = vec![false; group.order()];
        for &i in &members {
            present[i] = true;
        }
        if !present[0] {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for &a in &members {
            if !present[group.inv_idx(a)] {
                return Err(Error::NotSubgroup(format!(
                    "not closed under inverse at {:?}",
                    group.exponents(a)
                )));
            }
            for &b in &members {
                if !present[group.mul_idx(a, b)] {
                    return Err(Error::NotSubgroup(format!(
                        "not closed under product of {:?} and {:?}",
                        group.exponents(a),
                        group.exponents(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            group: group.clone(),
            members,
        })
    }

    pub(crate) fn from_sorted_unchecked(group: &Group, members: Vec<usize>) -> Self {
        Subgroup {
            group: group.clone(),
            members,
        }
    }

    pub fn whole(group: &Group) -> Self {
        Self::from_sorted_unchecked(group, (0..group.order()).collect())
    }

    pub fn trivial(group: &Group) -> Self {
        Self::from_sorted_unchecked(group, vec![0])
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains_idx(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.members.iter().map(|&i| self.group.element(i)).collect()
    }

    pub fn characters(&self) -> Vec<Character> {
        self.members.iter().map(|&i| self.group.character(i)).collect()
    }

    pub fn exponent_vectors(&self) -> Vec<Vec<u32>> {
        self.members
            .iter()
            .map(|&i| self.group.exponents(i).to_vec())
            .collect()
    }
}

/// Γ/N with one lexicographically least representative per coset.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub subgroup: Subgroup,
    pub coset_reps: Vec<usize>,
}

impl QuotientData {
    /// m = n / |N|.
    pub fn order(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn representatives(&self) -> Vec<GroupElement> {
        let g = self.subgroup.group();
        self.coset_reps.iter().map(|&i| g.element(i)).collect()
    }
}

/// Outcome of the character orthogonality and completeness check.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub group_order: usize,
    /// Pairs `(α', β')` whose orthogonality sum differs from `n δ`.
    pub orthogonality_failures: Vec<(Character, Character)>,
    /// Pairs `(α, β)` whose completeness sum differs from `n δ`.
    pub completeness_failures: Vec<(GroupElement, GroupElement)>,
    /// The common diagonal value, when every diagonal sum agreed.
    pub diagonal: Option<CycNumber>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.orthogonality_failures.is_empty() && self.completeness_failures.is_empty()
    }
}

/// Evaluates Σ_α ⟨α',α⟩⟨β',α⟩* and Σ_{α'} ⟨α',α⟩⟨α',β⟩* for every pair and
/// compares each with `n δ` exactly.
pub fn check_orthogonality_completeness(spec: &GroupSpec) -> OrthogonalityReport {
    let group = Group::new(spec.clone());
    let n = group.order();
    let expected_diag = CycNumber::from_int(group.field(), n as i64);
    let zero = group.zero();
    let mut report = OrthogonalityReport {
        group_order: n,
        orthogonality_failures: Vec::new(),
        completeness_failures: Vec::new(),
        diagonal: None,
    };
    let mut diag_ok = true;
    let sum = |terms: &mut dyn Iterator<Item = i64>| {
        let mut acc = CycAccumulator::new(group.field());
        let one = crate::rational::Rational::ONE;
        for k in terms {
            acc.add_rational_root(&one, k);
        }
        acc.finish()
    };
    for a in 0..n {
        for b in 0..n {
            let expected = if a == b { &expected_diag } else { &zero };
            let orth = sum(&mut (0..n).map(|g| {
                group.pairing_exp(a, g) as i64 - group.pairing_exp(b, g) as i64
            }));
            if &orth != expected {
                diag_ok &= a != b;
                report
                    .orthogonality_failures
                    .push((group.character(a), group.character(b)));
            }
            let compl = sum(&mut (0..n).map(|c| {
                group.pairing_exp(c, a) as i64 - group.pairing_exp(c, b) as i64
            }));
            if &compl != expected {
                diag_ok &= a != b;
                report
                    .completeness_failures
                    .push((group.element(a), group.element(b)));
            }
        }
    }
    if diag_ok {
        report.diagonal = Some(expected_diag);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Group {
        Group::parse(s).unwrap()
    }

    #[test]
    fn parse_specs() {
        assert_eq!(GroupSpec::parse("Z4xZ2").unwrap().orders(), &[4, 2]);
        assert_eq!(GroupSpec::parse("z4XZ2").unwrap().orders(), &[4, 2]);
        assert!(GroupSpec::parse("1").unwrap().orders().is_empty());
        let z6 = GroupSpec::parse("Z6").unwrap();
        assert_eq!((z6.order(), z6.exponent()), (6, 6));
        assert_eq!(GroupSpec::trivial().exponent(), 1);
        assert_eq!(GroupSpec::parse("Z4xZ6").unwrap().exponent(), 12);
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!(
            GroupSpec::parse("Z4xY2"),
            Err(Error::ParseGroup {
                pos: 3,
                msg: "expected 'Z'".into()
            })
        );
        assert!(matches!(
            GroupSpec::parse("Z0"),
            Err(Error::ParseGroup { pos: 1, .. })
        ));
        assert!(matches!(
            GroupSpec::parse("Z4x"),
            Err(Error::ParseGroup { pos: 3, .. })
        ));
        assert!(matches!(
            GroupSpec::parse("Z4*Z2"),
            Err(Error::ParseGroup { pos: 2, .. })
        ));
        assert!(GroupSpec::parse("").is_err());
        assert!(GroupSpec::parse("Z").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["1", "Z1", "Z4xZ2", "Z2xZ2xZ2"] {
            assert_eq!(GroupSpec::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn group_operations() {
        let z4 = g("Z4");
        let prod = z4
            .mul(&GroupElement(vec![1]), &GroupElement(vec![3]))
            .unwrap();
        assert_eq!(prod, z4.identity());
        let z42 = g("Z4xZ2");
        assert_eq!(z42.element_order(&GroupElement(vec![1, 1])).unwrap(), 4);
        assert_eq!(z42.element_order(&GroupElement(vec![2, 1])).unwrap(), 2);
        assert_eq!(z42.element_order(&z42.identity()).unwrap(), 1);
        for x in z42.elements() {
            assert_eq!(z42.mul(&x, &z42.identity()).unwrap(), x);
            let inv = z42.inverse(&x).unwrap();
            assert_eq!(z42.mul(&x, &inv).unwrap(), z42.identity());
        }
        assert!(matches!(
            z42.mul(&GroupElement(vec![1]), &z42.identity()),
            Err(Error::NotInGroup { .. })
        ));
        assert!(z4.index_of_element(&GroupElement(vec![4])).is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let grp = g("Z2xZ3");
        let all: Vec<_> = grp.elements().collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[1], GroupElement(vec![0, 1]));
    }

    #[test]
    fn pairing_values() {
        let z4 = g("Z4");
        assert_eq!(
            z4.pairing(&Character(vec![1]), &GroupElement(vec![1]))
                .unwrap(),
            CycNumber::root_of_unity(z4.field(), 1)
        );
        let z42 = g("Z4xZ2");
        // ζ₄ · ζ₂ = −i
        let v = z42
            .pairing(&Character(vec![1, 1]), &GroupElement(vec![1, 1]))
            .unwrap();
        assert_eq!(v, -&CycNumber::root_of_unity(z42.field(), 1));
        for x in z42.elements() {
            assert!(z42.pairing(&z42.trivial_character(), &x).unwrap().is_one());
        }
    }

    #[test]
    fn orthogonality_small() {
        let r = check_orthogonality_completeness(&GroupSpec::parse("Z2").unwrap());
        assert!(r.passed());
        assert_eq!(r.diagonal.unwrap().as_rational().unwrap().to_string(), "2");
        let r1 = check_orthogonality_completeness(&GroupSpec::trivial());
        assert!(r1.passed());
        assert!(r1.diagonal.unwrap().is_one());
        let r8 = check_orthogonality_completeness(&GroupSpec::parse("Z4xZ2").unwrap());
        assert!(r8.passed());
        assert_eq!(r8.diagonal.unwrap().as_rational().unwrap().to_string(), "8");
    }

    #[test]
    fn closure_quotient_annihilator() {
        let z4 = g("Z4");
        let sub = z4.subgroup_closure(&[GroupElement(vec![2])]).unwrap();
        assert_eq!(sub.elements(), vec![GroupElement(vec![0]), GroupElement(vec![2])]);
        assert_eq!(z4.subgroup_closure(&[]).unwrap().order(), 1);

        let q = z4.quotient(&sub).unwrap();
        assert_eq!(
            q.representatives(),
            vec![GroupElement(vec![0]), GroupElement(vec![1])]
        );
        assert_eq!(q.order(), 2);
        assert_eq!(z4.quotient(&Subgroup::whole(&z4)).unwrap().order(), 1);
        assert_eq!(z4.quotient(&Subgroup::trivial(&z4)).unwrap().order(), 4);

        let ann = z4.annihilator(&sub).unwrap();
        assert_eq!(ann.characters(), vec![Character(vec![0]), Character(vec![2])]);
        assert_eq!(z4.annihilator(&Subgroup::trivial(&z4)).unwrap().order(), 4);
        assert_eq!(
            z4.annihilator(&Subgroup::whole(&z4)).unwrap().indices(),
            &[0]
        );

        let z42 = g("Z4xZ2");
        let s = z42
            .subgroup_closure(&[GroupElement(vec![2, 0]), GroupElement(vec![0, 1])])
            .unwrap();
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn subgroup_validation() {
        let z4 = g("Z4");
        assert!(Subgroup::new(&z4, &[GroupElement(vec![0]), GroupElement(vec![1])]).is_err());
        assert!(Subgroup::new(&z4, &[GroupElement(vec![2])]).is_err());
        assert!(Subgroup::new(&z4, &[GroupElement(vec![0]), GroupElement(vec![2])]).is_ok());
    }
}

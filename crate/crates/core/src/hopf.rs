//! The group Hopf algebras H = ℂΓ* and A = ℂΓ with their tensor powers.
//!
//! Elements are sparse maps from basis tuples (lexicographic element indices)
//! to scalars. Zero coefficients are never stored, and keys are kept sorted so
//! iteration and serialization are deterministic.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::bichar::FunctionTable;
use crate::cyclotomic::{CycAccumulator, CycNumber};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::rational::Rational;
use crate::report::{AxiomCheck, AxiomReport};

/// Which algebra a basis index refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    /// ℂΓ*, spanned by characters.
    Star,
    /// ℂΓ, spanned by group elements.
    Group,
}

/// A basis tuple of some tensor power.
pub trait BasisKey: Copy + Ord + Hash + std::fmt::Debug {
    fn unit(group: &Group) -> Self;
    fn mul(self, other: Self, group: &Group) -> Self;
    fn exponents(self, group: &Group) -> Vec<Vec<u32>>;
}

impl BasisKey for usize {
    fn unit(group: &Group) -> Self {
        group.identity_index()
    }
    fn mul(self, other: Self, group: &Group) -> Self {
        group.mul_idx(self, other)
    }
    fn exponents(self, group: &Group) -> Vec<Vec<u32>> {
        vec![group.exponents(self).to_vec()]
    }
}

impl BasisKey for (usize, usize) {
    fn unit(group: &Group) -> Self {
        let e = group.identity_index();
        (e, e)
    }
    fn mul(self, o: Self, group: &Group) -> Self {
        (group.mul_idx(self.0, o.0), group.mul_idx(self.1, o.1))
    }
    fn exponents(self, group: &Group) -> Vec<Vec<u32>> {
        vec![
            group.exponents(self.0).to_vec(),
            group.exponents(self.1).to_vec(),
        ]
    }
}

impl BasisKey for (usize, usize, usize) {
    fn unit(group: &Group) -> Self {
        let e = group.identity_index();
        (e, e, e)
    }
    fn mul(self, o: Self, group: &Group) -> Self {
        (
            group.mul_idx(self.0, o.0),
            group.mul_idx(self.1, o.1),
            group.mul_idx(self.2, o.2),
        )
    }
    fn exponents(self, group: &Group) -> Vec<Vec<u32>> {
        vec![
            group.exponents(self.0).to_vec(),
            group.exponents(self.1).to_vec(),
            group.exponents(self.2).to_vec(),
        ]
    }
}

/// A finitely supported linear combination of basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<K: BasisKey> {
    group: Group,
    side: Side,
    coeffs: BTreeMap<K, CycNumber>,
}

pub type HopfElement = Tensor<usize>;
pub type Tensor2 = Tensor<(usize, usize)>;
pub type Tensor3 = Tensor<(usize, usize, usize)>;

impl<K: BasisKey> Tensor<K> {
    pub fn zero(group: &Group, side: Side) -> Self {
        Tensor {
            group: group.clone(),
            side,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(group: &Group, side: Side, key: K) -> Self {
        Self::from_terms(group, side, [(key, group.one())])
    }

    pub fn unit(group: &Group, side: Side) -> Self {
        Self::basis(group, side, K::unit(group))
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms(
        group: &Group,
        side: Side,
        terms: impl IntoIterator<Item = (K, CycNumber)>,
    ) -> Self {
        let mut t = Self::zero(group, side);
        for (k, c) in terms {
            t.add_term(k, &c);
        }
        t
    }

    pub(crate) fn from_accumulators(
        group: &Group,
        side: Side,
        acc: HashMap<K, CycAccumulator>,
    ) -> Self {
        let coeffs = acc
            .into_iter()
            .map(|(k, a)| (k, a.finish()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Tensor {
            group: group.clone(),
            side,
            coeffs,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &CycNumber)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> CycNumber {
        self.coeffs
            .get(key)
            .cloned()
            .unwrap_or_else(|| self.group.zero())
    }

    pub fn add_term(&mut self, key: K, c: &CycNumber) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&key) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.coeffs.remove(&key);
                } else {
                    *v = s;
                }
            }
            None => {
                self.coeffs.insert(key, c.clone());
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        self.group.check_same(&other.group)?;
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn scale_by(&self, x: &CycNumber) -> Self {
        self.map_coeffs(|c| c * x)
    }

    fn map_coeffs(&self, f: impl Fn(&CycNumber) -> CycNumber) -> Self {
        Tensor {
            group: self.group.clone(),
            side: self.side,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (*k, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Product in the tensor power of the group algebra: basis tuples
    /// multiply componentwise.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut acc: HashMap<K, CycAccumulator> = HashMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                acc.entry(a.mul(*b, &self.group))
                    .or_insert_with(|| CycAccumulator::new(self.group.field()))
                    .add_product(x, y);
            }
        }
        Ok(Self::from_accumulators(&self.group, self.side, acc))
    }

    /// Lexicographically first key whose coefficients differ.
    pub fn first_difference(&self, other: &Self) -> Option<K> {
        let mut keys: Vec<K> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .find(|k| self.coeffs.get(k) != other.coeffs.get(k))
    }

    /// Applies a basis map linearly.
    pub fn map_basis<L: BasisKey>(&self, side: Side, f: impl Fn(K) -> L) -> Tensor<L> {
        Tensor::from_terms(
            &self.group,
            side,
            self.coeffs.iter().map(|(k, c)| (f(*k), c.clone())),
        )
    }
}

impl HopfElement {
    /// Δ(γ) = γ ⊗ γ.
    pub fn coproduct(&self) -> Tensor2 {
        self.map_basis(self.side, |a| (a, a))
    }

    /// ε(γ) = 1, so ε is the coefficient sum.
    pub fn counit(&self) -> CycNumber {
        let mut acc = CycAccumulator::new(self.group.field());
        for c in self.coeffs.values() {
            acc.add(c);
        }
        acc.finish()
    }

    /// S(γ) = γ⁻¹.
    pub fn antipode(&self) -> HopfElement {
        let g = self.group.clone();
        self.map_basis(self.side, move |a| g.inv_idx(a))
    }

    /// The scalar multiple of the unit `c · 1`.
    pub fn scalar(group: &Group, side: Side, c: CycNumber) -> Self {
        Self::from_terms(group, side, [(group.identity_index(), c)])
    }
}

/// Where a Tensor2 is placed inside the triple tensor power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Legs {
    L12,
    L23,
    L13,
}

impl Tensor2 {
    /// T(h ⊗ h') = h' ⊗ h.
    pub fn twist(&self) -> Tensor2 {
        self.map_basis(self.side, |(a, b)| (b, a))
    }

    /// R₁₂ = R ⊗ 1, R₂₃ = 1 ⊗ R, R₁₃ = (T ⊗ id)(R₂₃).
    pub fn lift(&self, legs: Legs) -> Tensor3 {
        let e = self.group.identity_index();
        match legs {
            Legs::L12 => self.map_basis(self.side, |(a, b)| (a, b, e)),
            Legs::L23 => self.map_basis(self.side, |(a, b)| (e, a, b)),
            Legs::L13 => self.map_basis(self.side, |(a, b)| (a, e, b)),
        }
    }

    /// (Δ ⊗ id)
    pub fn coproduct_left(&self) -> Tensor3 {
        self.map_basis(self.side, |(a, b)| (a, a, b))
    }

    /// (id ⊗ Δ)
    pub fn coproduct_right(&self) -> Tensor3 {
        self.map_basis(self.side, |(a, b)| (a, b, b))
    }

    /// (ε ⊗ id)
    pub fn counit_left(&self) -> HopfElement {
        self.map_basis(self.side, |(_, b)| b)
    }

    /// (id ⊗ ε)
    pub fn counit_right(&self) -> HopfElement {
        self.map_basis(self.side, |(a, _)| a)
    }

    /// (S ⊗ id)
    pub fn antipode_left(&self) -> Tensor2 {
        let g = self.group.clone();
        self.map_basis(self.side, move |(a, b)| (g.inv_idx(a), b))
    }

    /// (id ⊗ S)
    pub fn antipode_right(&self) -> Tensor2 {
        let g = self.group.clone();
        self.map_basis(self.side, move |(a, b)| (a, g.inv_idx(b)))
    }

    /// The multiplication map m(x ⊗ y) = xy.
    pub fn multiply_out(&self) -> HopfElement {
        let g = self.group.clone();
        self.map_basis(self.side, move |(a, b)| g.mul_idx(a, b))
    }

    /// x ⊗ y.
    pub fn tensor(x: &HopfElement, y: &HopfElement) -> Result<Tensor2> {
        x.check(y)?;
        let mut acc: HashMap<(usize, usize), CycAccumulator> = HashMap::new();
        for (a, u) in x.terms() {
            for (b, v) in y.terms() {
                acc.entry((*a, *b))
                    .or_insert_with(|| CycAccumulator::new(x.group.field()))
                    .add_product(u, v);
            }
        }
        Ok(Self::from_accumulators(&x.group, x.side, acc))
    }

    /// The JSON record form, sorted by `(a, b)`.
    pub fn to_records(&self) -> Vec<TensorRecord> {
        self.terms()
            .map(|(&(a, b), c)| TensorRecord {
                a: self.group.exponents(a).to_vec(),
                b: self.group.exponents(b).to_vec(),
                c: c.clone(),
            })
            .collect()
    }

    pub fn from_records(group: &Group, side: Side, records: &[TensorRecord]) -> Result<Self> {
        let idx = |v: &[u32]| match side {
            Side::Star => group.index_of_character(&crate::group::Character(v.to_vec())),
            Side::Group => group.index_of_element(&crate::group::GroupElement(v.to_vec())),
        };
        let mut t = Self::zero(group, side);
        for r in records {
            if r.c.conductor() != group.exponent() {
                return Err(Error::ConductorMismatch(group.exponent(), r.c.conductor()));
            }
            t.add_term((idx(&r.a)?, idx(&r.b)?), &r.c);
        }
        Ok(t)
    }
}

/// One coefficient of a Tensor2 in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorRecord {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub c: CycNumber,
}

/// σ_t(α, β) = Σ c_{α',β'} ⟨α', α⟩⟨β', β⟩.
pub fn function_from_tensor(t: &Tensor2) -> Result<FunctionTable> {
    if t.side != Side::Star {
        return Err(Error::SideMismatch);
    }
    let g = &t.group;
    let n = g.order();
    let mut values = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut acc = CycAccumulator::new(g.field());
            for (&(x, y), c) in t.terms() {
                acc.add_shifted(c, (g.pairing_exp(x, a) + g.pairing_exp(y, b)) as i64);
            }
            values.push(acc.finish());
        }
    }
    FunctionTable::new(g, values)
}

/// c_{α',β'} = (1/n²) Σ_{α,β} σ(α,β) ⟨α',α⟩* ⟨β',β⟩*, one double sum per
/// output pair.
pub fn tensor_from_function(f: &FunctionTable) -> Tensor2 {
    let g = f.group();
    let n = g.order();
    let e = g.exponent() as i64;
    let scale = Rational::new(1, (n * n) as i64);
    let mut t = Tensor2::zero(g, Side::Star);
    for x in 0..n {
        for y in 0..n {
            let mut acc = CycAccumulator::new(g.field());
            for a in 0..n {
                let pa = g.pairing_exp(x, a) as i64;
                for b in 0..n {
                    let shift = e - pa + e - g.pairing_exp(y, b) as i64;
                    acc.add_shifted(f.get(a, b), shift);
                }
            }
            t.add_term((x, y), &acc.finish().scale(&scale));
        }
    }
    t
}

/// Inverse in H ⊗ H through the function algebra. Rejects with the first zero
/// point (α, β) of σ_t.
pub fn invert_tensor2(t: &Tensor2) -> Result<Tensor2> {
    let f = function_from_tensor(t)?;
    let inv = tensor_from_function(&f.pointwise_inverse()?);
    let unit = Tensor2::unit(&t.group, Side::Star);
    if t.mul(&inv)? != unit {
        return Err(Error::Internal("tensor inverse failed verification".into()));
    }
    Ok(inv)
}

/// ⟨a*, a⟩: the bilinear extension of ⟨χ, g⟩.
pub fn hopf_pairing(a_star: &HopfElement, a: &HopfElement) -> Result<CycNumber> {
    a_star.group.check_same(&a.group)?;
    if a_star.side != Side::Star || a.side != Side::Group {
        return Err(Error::SideMismatch);
    }
    let g = &a.group;
    let mut acc = CycAccumulator::new(g.field());
    for (&x, u) in a_star.terms() {
        for (&y, v) in a.terms() {
            let uv = u * v;
            acc.add_shifted(&uv, g.pairing_exp(x, y) as i64);
        }
    }
    Ok(acc.finish())
}

/// ⟨x ⊗ y, a ⊗ b⟩ = ⟨x, a⟩⟨y, b⟩ on basis tensors.
fn pair2(g: &Group, t: &Tensor2, a: usize, b: usize) -> CycNumber {
    let mut acc = CycAccumulator::new(g.field());
    for (&(x, y), c) in t.terms() {
        acc.add_shifted(c, (g.pairing_exp(x, a) + g.pairing_exp(y, b)) as i64);
    }
    acc.finish()
}

/// Checks every pairing axiom on basis elements:
/// ⟨hh', a⟩ = ⟨h ⊗ h', Δa⟩, ⟨h, aa'⟩ = ⟨Δh, a ⊗ a'⟩, ⟨1, a⟩ = ε(a),
/// ⟨h, 1⟩ = ε(h), and ⟨Sh, a⟩ = ⟨h, Sa⟩.
pub fn verify_hopf_pairing_axioms(group: &Group) -> AxiomReport {
    let n = group.order();
    let star = |i| HopfElement::basis(group, Side::Star, i);
    let elem = |i| HopfElement::basis(group, Side::Group, i);
    let pair = |x: &HopfElement, y: &HopfElement| hopf_pairing(x, y).expect("same group");
    let ex = |keys: &[usize]| -> Vec<Vec<u32>> {
        keys.iter().map(|&k| group.exponents(k).to_vec()).collect()
    };

    let mut product_coproduct = None;
    'outer: for h in 0..n {
        for h2 in 0..n {
            let prod = star(h).mul(&star(h2)).expect("same side");
            let t = Tensor2::basis(group, Side::Star, (h, h2));
            for a in 0..n {
                let d = elem(a).coproduct();
                let (&(a1, a2), c) = d.terms().next().expect("group-like");
                if pair(&prod, &elem(a)) != c * &pair2(group, &t, a1, a2) {
                    product_coproduct = Some(ex(&[h, h2, a]));
                    break 'outer;
                }
            }
        }
    }

    let mut coproduct_product = None;
    'outer2: for h in 0..n {
        let d = star(h).coproduct();
        for a in 0..n {
            for a2 in 0..n {
                let prod = elem(a).mul(&elem(a2)).expect("same side");
                if pair(&star(h), &prod) != pair2(group, &d, a, a2) {
                    coproduct_product = Some(ex(&[h, a, a2]));
                    break 'outer2;
                }
            }
        }
    }

    let unit_star = HopfElement::unit(group, Side::Star);
    let unit_group = HopfElement::unit(group, Side::Group);
    let unit_left = (0..n)
        .find(|&a| pair(&unit_star, &elem(a)) != elem(a).counit())
        .map(|a| ex(&[a]));
    let unit_right = (0..n)
        .find(|&h| pair(&star(h), &unit_group) != star(h).counit())
        .map(|h| ex(&[h]));

    let mut antipode = None;
    'outer3: for h in 0..n {
        for a in 0..n {
            if pair(&star(h).antipode(), &elem(a)) != pair(&star(h), &elem(a).antipode()) {
                antipode = Some(ex(&[h, a]));
                break 'outer3;
            }
        }
    }

    let mut r = AxiomReport::new();
    r.push(AxiomCheck::from_witness("product_coproduct", product_coproduct));
    r.push(AxiomCheck::from_witness("coproduct_product", coproduct_product));
    r.push(AxiomCheck::from_witness("unit_counit_left", unit_left));
    r.push(AxiomCheck::from_witness("unit_counit_right", unit_right));
    r.push(AxiomCheck::from_witness("antipode", antipode));
    r
}

/// Coassociativity, counit and antipode laws on every basis element.
pub fn verify_hopf_axioms(group: &Group, side: Side) -> AxiomReport {
    let n = group.order();
    let ex = |k: usize| vec![group.exponents(k).to_vec()];
    let mut r = AxiomReport::new();
    let basis = |i| HopfElement::basis(group, side, i);
    let coassoc = (0..n)
        .find(|&i| {
            let d = basis(i).coproduct();
            d.coproduct_left() != d.coproduct_right()
        })
        .map(ex);
    let counit = (0..n)
        .find(|&i| {
            let x = basis(i);
            let d = x.coproduct();
            d.counit_left() != x || d.counit_right() != x
        })
        .map(ex);
    let antipode = (0..n)
        .find(|&i| {
            let x = basis(i);
            let d = x.coproduct();
            let eps = HopfElement::scalar(group, side, x.counit());
            d.antipode_left().multiply_out() != eps || d.antipode_right().multiply_out() != eps
        })
        .map(ex);
    r.push(AxiomCheck::from_witness("coassociativity", coassoc));
    r.push(AxiomCheck::from_witness("counit", counit));
    r.push(AxiomCheck::from_witness("antipode", antipode));
    r
}

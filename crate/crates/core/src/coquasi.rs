//! Bilinear forms on ℂΓ × ℂΓ, their convolution algebra, and the
//! coquasitriangularity axioms.

use crate::bichar::{from_table, FunctionTable};
use crate::cyclotomic::{CycAccumulator, CycNumber};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::{function_from_tensor, HopfElement, Side, Tensor2};
use crate::report::{AxiomCheck, AxiomReport};

/// A bilinear form on ℂΓ, fixed by its values on Γ × Γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    table: FunctionTable,
}

impl BilinearForm {
    pub fn from_table(table: FunctionTable) -> Self {
        BilinearForm { table }
    }

    /// ϱ(a, b) = Σ ⟨R¹ᵢ, a⟩⟨R²ᵢ, b⟩.
    pub fn from_tensor(r: &Tensor2) -> Result<Self> {
        Ok(BilinearForm {
            table: function_from_tensor(r)?,
        })
    }

    /// ε_B(a, b) = ε(a)ε(b), the constant-1 table on group elements.
    pub fn unit(group: &Group) -> Self {
        BilinearForm {
            table: FunctionTable::constant(group, group.one()),
        }
    }

    pub fn zero(group: &Group) -> Self {
        BilinearForm {
            table: FunctionTable::constant(group, group.zero()),
        }
    }

    pub fn group(&self) -> &Group {
        self.table.group()
    }

    pub fn table(&self) -> &FunctionTable {
        &self.table
    }

    pub fn get(&self, a: usize, b: usize) -> &CycNumber {
        self.table.get(a, b)
    }

    /// Bilinear extension to arbitrary elements of ℂΓ.
    pub fn eval(&self, x: &HopfElement, y: &HopfElement) -> Result<CycNumber> {
        let g = self.group();
        g.check_same(x.group())?;
        g.check_same(y.group())?;
        if x.side() != Side::Group || y.side() != Side::Group {
            return Err(Error::SideMismatch);
        }
        let mut acc = CycAccumulator::new(g.field());
        for (&a, u) in x.terms() {
            for (&b, v) in y.terms() {
                let uv = u * v;
                acc.add_product(&uv, self.get(a, b));
            }
        }
        Ok(acc.finish())
    }

    /// (ψ ∗ ψ')(a, b) = Σ ψ(a¹ᵢ, b¹ⱼ) ψ'(a²ᵢ, b²ⱼ), summed over the coproduct
    /// terms of the basis elements a and b.
    pub fn convolution(&self, other: &Self) -> Result<Self> {
        let g = self.group().clone();
        g.check_same(other.group())?;
        let table = FunctionTable::from_fn(&g, |a, b| {
            let da = HopfElement::basis(&g, Side::Group, a).coproduct();
            let db = HopfElement::basis(&g, Side::Group, b).coproduct();
            let mut acc = CycAccumulator::new(g.field());
            for (&(a1, a2), ca) in da.terms() {
                for (&(b1, b2), cb) in db.terms() {
                    let coeff = ca * cb;
                    let val = self.get(a1, b1) * other.get(a2, b2);
                    acc.add_product(&coeff, &val);
                }
            }
            acc.finish()
        });
        Ok(BilinearForm { table })
    }

    /// The pointwise reciprocal, checked to be a two-sided convolution
    /// inverse.
    pub fn convolution_inverse(&self) -> Result<Self> {
        let inv = BilinearForm {
            table: self.table.pointwise_inverse()?,
        };
        let unit = Self::unit(self.group());
        if self.convolution(&inv)? != unit || inv.convolution(self)? != unit {
            return Err(Error::Internal("convolution inverse failed verification".into()));
        }
        Ok(inv)
    }

    fn basis(&self, i: usize) -> HopfElement {
        HopfElement::basis(self.group(), Side::Group, i)
    }

    fn ex(&self, keys: &[usize]) -> Vec<Vec<u32>> {
        keys.iter()
            .map(|&k| self.group().exponents(k).to_vec())
            .collect()
    }

    /// Σ b¹ⱼ a¹ᵢ ϱ(a²ᵢ, b²ⱼ) = Σ ϱ(a¹ᵢ, b¹ⱼ) a²ᵢ b²ⱼ for basis a, b.
    fn comm_witness(&self) -> Option<Vec<Vec<u32>>> {
        let g = self.group();
        let n = g.order();
        for a in 0..n {
            let da = self.basis(a).coproduct();
            for b in 0..n {
                let db = self.basis(b).coproduct();
                let mut lhs = HopfElement::zero(g, Side::Group);
                let mut rhs = HopfElement::zero(g, Side::Group);
                for (&(a1, a2), ca) in da.terms() {
                    for (&(b1, b2), cb) in db.terms() {
                        let c = ca * cb;
                        lhs.add_term(g.mul_idx(b1, a1), &(&c * self.get(a2, b2)));
                        rhs.add_term(g.mul_idx(a2, b2), &(&c * self.get(a1, b1)));
                    }
                }
                if lhs != rhs {
                    return Some(self.ex(&[a, b]));
                }
            }
        }
        None
    }

    /// ϱ(bc, a) = Σ ϱ(b, a¹ᵢ) ϱ(c, a²ᵢ), witness (a, b, c).
    fn rho3_witness(&self) -> Option<Vec<Vec<u32>>> {
        let n = self.group().order();
        for a in 0..n {
            let da = self.basis(a).coproduct();
            for b in 0..n {
                for c in 0..n {
                    let bc = self.basis(b).mul(&self.basis(c)).expect("same side");
                    let lhs = self.eval(&bc, &self.basis(a)).expect("same group");
                    let mut acc = CycAccumulator::new(self.group().field());
                    for (&(a1, a2), k) in da.terms() {
                        acc.add_product(k, &(self.get(b, a1) * self.get(c, a2)));
                    }
                    if lhs != acc.finish() {
                        return Some(self.ex(&[a, b, c]));
                    }
                }
            }
        }
        None
    }

    /// ϱ(a, bc) = Σ ϱ(a¹ᵢ, c) ϱ(a²ᵢ, b), witness (a, b, c).
    fn rho4_witness(&self) -> Option<Vec<Vec<u32>>> {
        let n = self.group().order();
        for a in 0..n {
            let da = self.basis(a).coproduct();
            for b in 0..n {
                for c in 0..n {
                    let bc = self.basis(b).mul(&self.basis(c)).expect("same side");
                    let lhs = self.eval(&self.basis(a), &bc).expect("same group");
                    let mut acc = CycAccumulator::new(self.group().field());
                    for (&(a1, a2), k) in da.terms() {
                        acc.add_product(k, &(self.get(a1, c) * self.get(a2, b)));
                    }
                    if lhs != acc.finish() {
                        return Some(self.ex(&[a, b, c]));
                    }
                }
            }
        }
        None
    }

    /// Convolution invertibility, the commutation relation, ϱ(bc,a) and
    /// ϱ(a,bc) expansions, ϱ(1,a) = ϱ(a,1) = ε(a), and agreement with the
    /// bicharacter test on the underlying table.
    pub fn verify_coquasi(&self) -> AxiomReport {
        let g = self.group();
        let n = g.order();
        let e = g.identity_index();
        let mut r = AxiomReport::new();
        let inv = match self.convolution_inverse() {
            Ok(_) => None,
            Err(Error::NotInvertible(w)) => Some(w),
            Err(_) => Some(Vec::new()),
        };
        r.push(AxiomCheck::from_witness("invertible", inv));
        r.push(AxiomCheck::from_witness("comm", self.comm_witness()));
        r.push(AxiomCheck::from_witness("rho3", self.rho3_witness()));
        r.push(AxiomCheck::from_witness("rho4", self.rho4_witness()));
        let unit = (0..n)
            .find(|&a| !self.get(e, a).is_one() || !self.get(a, e).is_one())
            .map(|a| self.ex(&[a]));
        r.push(AxiomCheck::from_witness("rho_unit", unit));
        let axioms_hold = r.passed();
        let is_bichar = from_table(&self.table).is_ok();
        r.push(AxiomCheck::new(
            "bicharacter_equivalence",
            axioms_hold == is_bichar,
            None,
        ));
        r
    }

    /// ϱ' ∘ T = ϱ, where ϱ' is the convolution inverse.
    pub fn is_cotriangular(&self) -> Result<bool> {
        self.require_coquasi()?;
        let inv = self.convolution_inverse()?;
        Ok(inv.table.transpose() == self.table)
    }

    fn require_coquasi(&self) -> Result<()> {
        let rep = self.verify_coquasi();
        let failed = rep.failures().next().map(|f| f.name.clone());
        match failed {
            None => Ok(()),
            Some(name) => Err(Error::NotCoquasitriangular(name)),
        }
    }

    /// ϱ(Sα, β) = ϱ'(α, β), ϱ'(α, Sβ) = ϱ(α, β), ϱ(Sα, Sβ) = ϱ(α, β).
    pub fn antipode_relations_check(&self) -> Result<AxiomReport> {
        self.require_coquasi()?;
        let g = self.group();
        let n = g.order();
        let inv = self.convolution_inverse()?;
        let find = |f: &dyn Fn(usize, usize) -> bool| {
            (0..n * n)
                .map(|k| (k / n, k % n))
                .find(|&(a, b)| !f(a, b))
                .map(|(a, b)| self.ex(&[a, b]))
        };
        let mut r = AxiomReport::new();
        r.push(AxiomCheck::from_witness(
            "antipode_left",
            find(&|a, b| self.get(g.inv_idx(a), b) == inv.get(a, b)),
        ));
        r.push(AxiomCheck::from_witness(
            "antipode_right",
            find(&|a, b| inv.get(a, g.inv_idx(b)) == self.get(a, b)),
        ));
        r.push(AxiomCheck::from_witness(
            "antipode_both",
            find(&|a, b| self.get(g.inv_idx(a), g.inv_idx(b)) == self.get(a, b)),
        ));
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bichar::{cyclic_bicharacter, enumerate_all};

    #[test]
    fn convolution_laws() {
        let g = Group::parse("Z4xZ2").unwrap();
        let all: Vec<_> = enumerate_all(&g).collect();
        let unit = BilinearForm::unit(&g);
        let zero = BilinearForm::zero(&g);
        for s in &all {
            let f = BilinearForm::from_table(s.table());
            assert_eq!(f.convolution(&unit).unwrap(), f);
            assert_eq!(zero.convolution(&f).unwrap(), zero);
            let inv = f.convolution_inverse().unwrap();
            assert_eq!(inv.table(), &s.inverse().table());
        }
        for s in &all[..5] {
            for t in &all[25..] {
                let p = BilinearForm::from_table(s.table())
                    .convolution(&BilinearForm::from_table(t.table()))
                    .unwrap();
                assert_eq!(p.table(), &s.product(t).unwrap().table());
            }
        }
        assert!(matches!(
            zero.convolution_inverse(),
            Err(Error::NotInvertible(_))
        ));
        assert_eq!(unit.convolution_inverse().unwrap(), unit);
    }

    #[test]
    fn coquasi_on_bicharacters() {
        let g = Group::parse("Z4xZ2").unwrap();
        for s in enumerate_all(&g) {
            let f = BilinearForm::from_table(s.table());
            let rep = f.verify_coquasi();
            assert!(rep.passed(), "{rep:?}");
            assert!(f.antipode_relations_check().unwrap().passed());
            assert_eq!(f.is_cotriangular().unwrap(), s.is_commutation_factor());
        }
        assert!(BilinearForm::unit(&g).verify_coquasi().passed());
        assert!(BilinearForm::unit(&g).is_cotriangular().unwrap());
    }

    #[test]
    fn cotriangular_examples() {
        let f = BilinearForm::from_table(cyclic_bicharacter(2, 1).table());
        assert!(f.is_cotriangular().unwrap());
        let f = BilinearForm::from_table(cyclic_bicharacter(4, 1).table());
        assert!(!f.is_cotriangular().unwrap());
    }

    #[test]
    fn non_bicharacter_fails() {
        let g = Group::parse("Z4").unwrap();
        let mut t = FunctionTable::constant(&g, g.one());
        t.set(1, 1, g.root(1));
        let f = BilinearForm::from_table(t);
        let rep = f.verify_coquasi();
        assert!(!rep.holds("rho3") || !rep.holds("rho4"));
        assert!(rep.holds("bicharacter_equivalence"));
        assert!(matches!(
            f.is_cotriangular(),
            Err(Error::NotCoquasitriangular(_))
        ));
    }
}

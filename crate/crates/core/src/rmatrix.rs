//! Universal R-matrices of ℂΓ* built from bicharacters, and exact checks of
//! the quasitriangularity axioms.

use crate::bichar::{Bicharacter, FunctionTable, PairingData};
use crate::error::Result;
use crate::group::{Group, GroupSpec};
use crate::hopf::{
    function_from_tensor, invert_tensor2, tensor_from_function, BasisKey, HopfElement, Legs,
    Side, Tensor, Tensor2,
};
use crate::rational::{gcd, mod_inverse, Rational};
use crate::report::{AxiomCheck, AxiomReport};

/// R_σ = (1/n²) Σ σ(α,β) ⟨α',α⟩* ⟨β',β⟩* α' ⊗ β'.
pub fn r_from_bicharacter(sigma: &Bicharacter) -> Tensor2 {
    tensor_from_function(&sigma.table())
}

/// The same Ansatz applied to an arbitrary function table.
pub fn r_from_table(table: &FunctionTable) -> Tensor2 {
    tensor_from_function(table)
}

/// σ(α,β) = Σ c_{α',β'} ⟨α',α⟩⟨β',β⟩.
pub fn sigma_from_tensor(r: &Tensor2) -> Result<FunctionTable> {
    function_from_tensor(r)
}

/// R^τ = (1/m) Σ_{α₁∈Δ₁, α₂∈Δ₂} τ(α₁,α₂) α₁ ⊗ α₂.
pub fn r_from_pairing(p: &PairingData) -> Tensor2 {
    let g = p.group();
    let scale = Rational::new(1, p.m as i64);
    let mut t = Tensor2::zero(g, Side::Star);
    for (i, &a) in p.delta1.indices().iter().enumerate() {
        for (j, &b) in p.delta2.indices().iter().enumerate() {
            t.add_term((a, b), &p.tau_at(i, j).scale(&scale));
        }
    }
    t
}

/// The closed form on Γ_n for σ_k:
/// R = (d/n) Σ_{x,y ∈ Z_{n/d}} (ω^d)^{-ℓxy} (χ^d)^x ⊗ (χ^d)^y
/// with d = gcd(k, n) and ℓ the inverse of k/d modulo n/d. `k ≡ 0` means k = n.
pub fn r_cyclic(n: u32, k: i64) -> Tensor2 {
    let group = Group::new(GroupSpec::cyclic(n));
    let n64 = n as i64;
    let mut k = k.rem_euclid(n64);
    if k == 0 {
        k = n64;
    }
    let d = gcd(k as u64, n as u64) as i64;
    let q = n64 / d;
    let l = mod_inverse(k / d, q).expect("k/d is a unit mod n/d");
    let scale = Rational::new(d, n64);
    let mut t = Tensor2::zero(&group, Side::Star);
    for x in 0..q {
        for y in 0..q {
            let c = group.root(-d * l * x * y).scale(&scale);
            t.add_term((((d * x) % n64) as usize, ((d * y) % n64) as usize), &c);
        }
    }
    t
}

fn witness<K: BasisKey>(g: &Group, a: &Tensor<K>, b: &Tensor<K>) -> Option<Vec<Vec<u32>>> {
    a.first_difference(b).map(|k| k.exponents(g))
}

/// URM1–URM4, the two counit identities and (S ⊗ id)R = R⁻¹, each by raw
/// tensor arithmetic.
pub fn verify_urm(r: &Tensor2) -> AxiomReport {
    let g = r.group().clone();
    let side = r.side();
    let mut report = AxiomReport::new();

    let inverse = invert_tensor2(r);
    let inv_witness = match &inverse {
        Ok(_) => None,
        Err(crate::error::Error::NotInvertible(w)) => Some(w.clone()),
        Err(_) => Some(Vec::new()),
    };
    report.push(AxiomCheck::from_witness("URM1", inv_witness));

    let mut urm2 = None;
    for h in 0..g.order() {
        let d = HopfElement::basis(&g, side, h).coproduct();
        let lhs = r.mul(&d).expect("same side");
        let rhs = d.twist().mul(r).expect("same side");
        if let Some((a, b)) = lhs.first_difference(&rhs) {
            urm2 = Some(vec![
                g.exponents(h).to_vec(),
                g.exponents(a).to_vec(),
                g.exponents(b).to_vec(),
            ]);
            break;
        }
    }
    report.push(AxiomCheck::from_witness("URM2", urm2));

    let r12 = r.lift(Legs::L12);
    let r13 = r.lift(Legs::L13);
    let r23 = r.lift(Legs::L23);
    let urm3 = witness(&g, &r.coproduct_left(), &r13.mul(&r23).expect("same side"));
    report.push(AxiomCheck::from_witness("URM3", urm3));
    let urm4 = witness(&g, &r.coproduct_right(), &r13.mul(&r12).expect("same side"));
    report.push(AxiomCheck::from_witness("URM4", urm4));

    let one = HopfElement::unit(&g, side);
    report.push(AxiomCheck::from_witness(
        "counit_left",
        witness(&g, &r.counit_left(), &one),
    ));
    report.push(AxiomCheck::from_witness(
        "counit_right",
        witness(&g, &r.counit_right(), &one),
    ));
    let antipode = match &inverse {
        Ok(inv) => AxiomCheck::from_witness("antipode", witness(&g, &r.antipode_left(), inv)),
        Err(_) => AxiomCheck::new("antipode", false, None),
    };
    report.push(antipode);
    report
}

/// R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂.
pub fn check_yang_baxter(r: &Tensor2) -> AxiomCheck {
    let g = r.group();
    let r12 = r.lift(Legs::L12);
    let r13 = r.lift(Legs::L13);
    let r23 = r.lift(Legs::L23);
    let lhs = r12.mul(&r13).and_then(|x| x.mul(&r23)).expect("same side");
    let rhs = r23.mul(&r13).and_then(|x| x.mul(&r12)).expect("same side");
    AxiomCheck::from_witness("YBE", witness(g, &lhs, &rhs))
}

/// T(R) = R⁻¹.
pub fn is_triangular(r: &Tensor2) -> Result<bool> {
    Ok(r.twist() == invert_tensor2(r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bichar::{cyclic_bicharacter, enumerate_all};
    use crate::cyclotomic::CycNumber;

    fn super_r() -> Tensor2 {
        let g = Group::parse("Z2").unwrap();
        let h = |x: i64| CycNumber::from_rational(g.field(), Rational::new(x, 2));
        Tensor2::from_terms(
            &g,
            Side::Star,
            [((0, 0), h(1)), ((0, 1), h(1)), ((1, 0), h(1)), ((1, 1), h(-1))],
        )
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(r_cyclic(2, 1), super_r());
        assert_eq!(r_from_bicharacter(&cyclic_bicharacter(2, 1)), super_r());
        for n in 1..=6 {
            let g = Group::new(GroupSpec::cyclic(n));
            assert_eq!(r_cyclic(n, n as i64), Tensor2::unit(&g, Side::Star));
            assert_eq!(r_cyclic(n, 0), Tensor2::unit(&g, Side::Star));
        }
        let r42 = r_cyclic(4, 2);
        let g = r42.group().clone();
        let h = |x: i64| CycNumber::from_rational(g.field(), Rational::new(x, 2));
        let expect = Tensor2::from_terms(
            &g,
            Side::Star,
            [((0, 0), h(1)), ((0, 2), h(1)), ((2, 0), h(1)), ((2, 2), h(-1))],
        );
        assert_eq!(r42, expect);
        assert_eq!(r_from_bicharacter(&cyclic_bicharacter(4, 2)), expect);
    }

    #[test]
    fn roundtrip_and_unit() {
        let g = Group::parse("Z4xZ2").unwrap();
        for s in enumerate_all(&g) {
            let r = r_from_bicharacter(&s);
            assert_eq!(sigma_from_tensor(&r).unwrap(), s.table());
        }
        let one = Tensor2::unit(&g, Side::Star);
        assert_eq!(
            sigma_from_tensor(&one).unwrap(),
            FunctionTable::constant(&g, g.one())
        );
        assert_eq!(r_from_bicharacter(&Bicharacter::trivial(&g)), one);
        let z2 = Group::parse("Z2").unwrap();
        let t = sigma_from_tensor(&Tensor2::basis(&z2, Side::Star, (1, 1))).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                assert_eq!(*t.get(a, b), CycNumber::from_int(z2.field(), sign));
            }
        }
    }

    #[test]
    fn pairing_route() {
        let g = Group::parse("Z4xZ2").unwrap();
        for s in enumerate_all(&g) {
            let p = s.induced_pairing().unwrap();
            assert_eq!(r_from_pairing(&p), r_from_bicharacter(&s));
        }
    }

    #[test]
    fn urm_on_bicharacters() {
        let g = Group::parse("Z4xZ2").unwrap();
        for s in enumerate_all(&g) {
            let r = r_from_bicharacter(&s);
            let rep = verify_urm(&r);
            assert!(rep.passed(), "{}: {rep:?}", s.k_spec());
        }
        assert!(verify_urm(&Tensor2::unit(&g, Side::Star)).passed());
    }

    #[test]
    fn urm_rejects_non_bicharacter() {
        // σ(γ,γ) = ζ₄ on Γ₂, else 1; the values live in ℚ(ζ₄), so use Γ₄'s
        // subgroup-free analogue: a table on Z4 that is 1 except at (1, 1).
        let g = Group::parse("Z4").unwrap();
        let mut t = FunctionTable::constant(&g, g.one());
        t.set(1, 1, g.root(1));
        let rep = verify_urm(&r_from_table(&t));
        assert!(rep.holds("URM1"));
        assert!(!rep.holds("URM3") || !rep.holds("URM4"));
    }

    #[test]
    fn triangularity() {
        assert!(is_triangular(&super_r()).unwrap());
        assert!(!is_triangular(&r_cyclic(4, 1)).unwrap());
        let tri: Vec<i64> = (0..4)
            .filter(|&k| is_triangular(&r_cyclic(4, k)).unwrap())
            .collect();
        assert_eq!(tri, vec![0, 2]);
    }

    #[test]
    fn yang_baxter() {
        for n in 1..=5 {
            for k in 0..n as i64 {
                assert!(check_yang_baxter(&r_cyclic(n, k)).pass);
            }
        }
    }
}

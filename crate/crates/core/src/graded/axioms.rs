use std::fmt::{self, Display};

use num_traits::{One, Zero};

use super::*;
use crate::linear::SparseVector;

/// Outcome of one family of identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub cases: usize,
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "pass {} ({} cases)", c.name, c.cases)?,
                Some(w) => writeln!(f, "FAIL {}: {}", c.name, w)?,
            }
        }
        Ok(())
    }
}

/// Accumulates cases for one identity, keeping the first counterexample.
struct Tally {
    name: String,
    cases: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Self { name: name.into(), cases: 0, witness: None }
    }

    fn expect_eq<T: PartialEq + Display>(&mut self, context: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.cases += 1;
        if self.witness.is_none() && lhs != rhs {
            self.witness = Some(format!("{}: {} != {}", context(), lhs, rhs));
        }
    }

    fn expect(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.cases += 1;
        if self.witness.is_none() && !ok {
            self.witness = Some(context());
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck { name: self.name, cases: self.cases, witness: self.witness }
    }
}

struct Words<'a, L>(&'a [L]);

impl<L: Display> Display for Words<'_, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("[]");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Display wrapper for tensors, rendering words as `a⊗b`.
pub struct ShowTensor<'a, L: Ord>(pub &'a Tensor<L>);

impl<L: Ord + Clone + Display> Display for ShowTensor<'_, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: SparseVector<String> = self.0.map_keys(|w| Words(w).to_string());
        write!(f, "{rendered}")
    }
}

#[derive(PartialEq)]
struct Shown<L: Ord>(Tensor<L>);

impl<L: Ord + Clone + Display> Display for Shown<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        ShowTensor(&self.0).fmt(f)
    }
}

/// Checks the DG-bialgebra axioms on every basis element (pair, triple) in
/// `window`, reporting the first counterexample per axiom.
pub fn check_bialgebra_axioms<B: Bialgebra>(alg: &B, window: &Window) -> AxiomReport {
    let basis = alg.basis(window);
    let unit = alg.unit();
    let mut checks = Vec::new();

    let mut degrees = Tally::new("degrees");
    for a in &basis {
        let da = alg.degree(a);
        let d = alg.differential(a);
        degrees.expect(d.is_zero() || element_degree(alg, &d) == Some(da + 1), || format!("d({a}) = {d}"));
        let cop = alg.coproduct(a);
        degrees.expect(
            cop.keys().all(|w| w.len() == 2) && (cop.is_zero() || tensor_degree(alg, &cop) == Some(da)),
            || format!("Δ({a}) = {}", ShowTensor(&cop)),
        );
        degrees.expect(da == 0 || alg.counit(a).is_zero(), || format!("ε({a}) ≠ 0 in degree {da}"));
        for b in &basis {
            let p = alg.product(a, b);
            degrees.expect(p.is_zero() || element_degree(alg, &p) == Some(da + alg.degree(b)), || {
                format!("{a}·{b} = {p}")
            });
        }
    }
    degrees.expect(element_degree(alg, &unit) == Some(0), || format!("unit {unit}"));
    checks.push(degrees.finish());

    let mut assoc = Tally::new("associativity");
    for a in &basis {
        for b in &basis {
            let ab = alg.product(a, b);
            for c in &basis {
                let left = mul_elements(alg, &ab, &SparseVector::basis(c.clone()));
                let right = mul_elements(alg, &SparseVector::basis(a.clone()), &alg.product(b, c));
                assoc.expect_eq(|| format!("({a}·{b})·{c} vs {a}·({b}·{c})"), &left, &right);
            }
        }
    }
    checks.push(assoc.finish());

    let mut unital = Tally::new("unitality");
    for a in &basis {
        let e = SparseVector::basis(a.clone());
        unital.expect_eq(|| format!("1·{a}"), &mul_elements(alg, &unit, &e), &e);
        unital.expect_eq(|| format!("{a}·1"), &mul_elements(alg, &e, &unit), &e);
    }
    checks.push(unital.finish());

    let mut coassoc = Tally::new("coassociativity");
    let mut counit_law = Tally::new("counit");
    for a in &basis {
        let cop = alg.coproduct(a);
        let left = apply_slot(alg, &cop, 0, 0, |l| alg.coproduct(l));
        let right = apply_slot(alg, &cop, 1, 0, |l| alg.coproduct(l));
        coassoc.expect_eq(|| format!("(Δ⊗1)Δ({a}) vs (1⊗Δ)Δ({a})"), &Shown(left), &Shown(right));
        let e = Shown(SparseVector::basis(vec![a.clone()]));
        let lc = apply_slot(alg, &cop, 0, 0, |l| scalar(alg.counit(l)));
        let rc = apply_slot(alg, &cop, 1, 0, |l| scalar(alg.counit(l)));
        counit_law.expect_eq(|| format!("(ε⊗1)Δ({a})"), &Shown(lc), &e);
        counit_law.expect_eq(|| format!("(1⊗ε)Δ({a})"), &Shown(rc), &e);
    }
    checks.push(coassoc.finish());
    checks.push(counit_law.finish());

    let mut delta_mult = Tally::new("coproduct multiplicative");
    let mut eps_mult = Tally::new("counit multiplicative");
    let unit_t = as_tensor(&unit);
    delta_mult.expect_eq(
        || "Δ(1)".into(),
        &Shown(coproduct_element(alg, &unit)),
        &Shown(concat(&unit_t, &unit_t)),
    );
    eps_mult.expect(counit_element(alg, &unit).is_one(), || "ε(1) ≠ 1".into());
    for a in &basis {
        let da = alg.coproduct(a);
        for b in &basis {
            let ab = alg.product(a, b);
            let lhs = coproduct_element(alg, &ab);
            let rhs = slot_product(alg, &da, &alg.coproduct(b));
            delta_mult.expect_eq(|| format!("Δ({a}·{b})"), &Shown(lhs), &Shown(rhs));
            eps_mult.expect_eq(
                || format!("ε({a}·{b})"),
                &counit_element(alg, &ab),
                &(alg.counit(a) * alg.counit(b)),
            );
        }
    }
    checks.push(delta_mult.finish());
    checks.push(eps_mult.finish());

    let mut d_squared = Tally::new("d squared");
    let mut leibniz = Tally::new("leibniz");
    let mut co_leibniz = Tally::new("co-leibniz");
    let mut eps_d = Tally::new("counit chain map");
    leibniz.expect(diff_element(alg, &unit).is_zero(), || format!("d(1) = {}", diff_element(alg, &unit)));
    for a in &basis {
        let d = alg.differential(a);
        let dd = diff_element(alg, &d);
        d_squared.expect(dd.is_zero(), || format!("d²({a}) = {dd}"));
        let lhs = coproduct_element(alg, &d);
        let rhs = tensor_differential(alg, &alg.coproduct(a));
        co_leibniz.expect_eq(|| format!("Δd({a}) vs dΔ({a})"), &Shown(lhs), &Shown(rhs));
        let ed = counit_element(alg, &d);
        eps_d.expect(ed.is_zero(), || format!("ε(d{a}) = {ed}"));
        let sign = Sign::pow(alg.degree(a)).to_rational();
        let ea = SparseVector::basis(a.clone());
        for b in &basis {
            let eb = SparseVector::basis(b.clone());
            let lhs = diff_element(alg, &alg.product(a, b));
            let mut rhs = mul_elements(alg, &d, &eb);
            rhs.add_scaled(&mul_elements(alg, &ea, &alg.differential(b)), &sign);
            leibniz.expect_eq(|| format!("d({a}·{b})"), &lhs, &rhs);
        }
    }
    checks.push(d_squared.finish());
    checks.push(leibniz.finish());
    checks.push(co_leibniz.finish());
    checks.push(eps_d.finish());

    AxiomReport { checks }
}

/// All words of weight `n` over `basis`.
pub fn words_of_weight<L: Clone>(basis: &[L], n: usize) -> Vec<Vec<L>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                basis.iter().map(move |l| {
                    let mut v = w.clone();
                    v.push(l.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Checks the cosimplicial identities among faces and degeneracies on all
/// basis words of weight `≤ n_max` in `window`.
pub fn simplicial_identities_check<B: Bialgebra>(alg: &B, n_max: usize, window: &Window) -> AxiomReport {
    let basis = alg.basis(window);
    let mut faces = Tally::new("face-face");
    let mut degens = Tally::new("degeneracy-degeneracy");
    let mut mixed = Tally::new("degeneracy-face");
    let face = |x: &Tensor<B::Label>, i| face_tensor(alg, x, i).expect("face index");
    let degen = |x: &Tensor<B::Label>, i| degeneracy_tensor(alg, x, i).expect("degeneracy index");
    for n in 0..=n_max {
        for w in words_of_weight(&basis, n) {
            let x: Tensor<B::Label> = SparseVector::basis(w.clone());
            let face_images: Vec<_> = (0..=n + 1).map(|i| face(&x, i)).collect();
            for j in 1..=n + 2 {
                for i in 0..j {
                    let lhs = face(&face_images[i], j);
                    let rhs = face(&face_images[j - 1], i);
                    faces.expect_eq(|| format!("∂{j}∂{i} on {}", Words(&w)), &Shown(lhs), &Shown(rhs));
                }
            }
            if n >= 2 {
                for j in 0..=n - 2 {
                    for i in 0..=j {
                        let lhs = degen(&degen(&x, i), j);
                        let rhs = degen(&degen(&x, j + 1), i);
                        degens.expect_eq(|| format!("s{j}s{i} on {}", Words(&w)), &Shown(lhs), &Shown(rhs));
                    }
                }
            }
            for (i, fi) in face_images.iter().enumerate() {
                for j in 0..=n {
                    let lhs = degen(fi, j);
                    let rhs = if i < j {
                        face(&degen(&x, j - 1), i)
                    } else if i == j || i == j + 1 {
                        x.clone()
                    } else {
                        face(&degen(&x, j), i - 1)
                    };
                    mixed.expect_eq(|| format!("s{j}∂{i} on {}", Words(&w)), &Shown(lhs), &Shown(rhs));
                }
            }
        }
    }
    AxiomReport { checks: vec![faces.finish(), degens.finish(), mixed.finish()] }
}

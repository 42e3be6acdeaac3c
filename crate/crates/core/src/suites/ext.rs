//! `Ext¹(1, xy⁻¹)` over the upper-triangular algebra, on the window of
//! Laurent and polynomial bound 2 and words of weight at most 2.

use super::{Check, CheckResult};
use crate::cobar::CobarElement;
use crate::graded::{Bialgebra, Monomial, Tensor, UpperTriangularHopf, Window};
use crate::holim::{character_from_grouplike, hom_cohomology, hom_diff, HolimMorphism, HomWindow};
use crate::linear::{int, SparseVector};

const IDS: [&str; 4] = ["ext-example.boundary", "ext-example.cycles", "ext-example.dimension", "ext-example.nonzero-class"];

pub(super) fn skipped() -> Vec<CheckResult> {
    IDS.iter().map(|id| CheckResult::skip(*id, "defined for the upper-triangular algebra only")).collect()
}

pub(super) fn ext_example() -> Vec<CheckResult> {
    let ut = UpperTriangularHopf;
    let n = 2;
    let one = character_from_grouplike(&ut, &ut.unit(), n).expect("unit is grouplike");
    let chi = character_from_grouplike(&ut, &SparseVector::basis(Monomial::new(1, -1, 0)), n).expect("xy⁻¹ is grouplike");
    let window = HomWindow { source: one.clone(), target: chi.clone(), degree: 1, max_weight: 2, window: Window::new(2, 2) };
    let h = match hom_cohomology(&ut, &window) {
        Ok(h) => h,
        Err(e) => {
            return IDS
                .iter()
                .map(|id| {
                    let mut c = Check::new(id);
                    c.case(false, || format!("error: {e}"));
                    c.finish()
                })
                .collect()
        }
    };

    let difference: Tensor<Monomial> = [(vec![Monomial::ONE], int(1)), (vec![Monomial::new(1, -1, 0)], int(-1))].into_iter().collect();
    let difference = CobarElement::new(difference, n);
    let class = CobarElement::generator(Monomial::new(0, -1, 1), n);

    let mut cycles = Check::new(IDS[1]);
    for x in [&difference, &class] {
        match HolimMorphism::new(&ut, &one, &chi, 1, x.clone()) {
            Ok(f) => {
                let df = hom_diff(&ut, &f);
                cycles.case(df.is_zero(), || format!("d({x}) = {}", df.element()));
            }
            Err(e) => cycles.case(false, || format!("{x}: {e}")),
        }
        cycles.case(h.is_windowed_cycle(x), || format!("{x} is not in the windowed cycle space"));
    }
    cycles.note(format!("[1] - [xy^-1] and [y^-1z] are closed in Hom^1(1, xy^-1); cycle space of dimension {}", h.cycle_dimension));

    let mut boundary = Check::new(IDS[0]);
    let witness = h.boundary_witness(&difference.scale(&int(-1)));
    boundary.case(witness.as_ref() == Some(&CobarElement::one(n)), || format!("preimage {witness:?}"));
    boundary.note("d(1) = [xy^-1] - [1]: multiplication by 1 - xy^-1 on Hom^0");

    let mut nonzero = Check::new(IDS[3]);
    let witness = h.boundary_witness(&class);
    nonzero.case(witness.is_none(), || format!("[y^-1z] = d({})", witness.as_ref().map(ToString::to_string).unwrap_or_default()));
    nonzero.note("[y^-1z] is outside the span of the boundaries");

    let mut dimension = Check::new(IDS[2]);
    dimension.case(h.boundary_rank == 1, || format!("boundary rank {}", h.boundary_rank));
    dimension.case(h.dimension >= 1, || format!("windowed Ext^1 has dimension {}", h.dimension));
    dimension.note(format!(
        "windowed Ext^1 dimension {}, boundary rank {}, chain dimension {}{}",
        h.dimension,
        h.boundary_rank,
        h.chain_dimension,
        if h.leak.is_some() { ", window not closed under d" } else { "" }
    ));

    vec![boundary.finish(), cycles.finish(), dimension.finish(), nonzero.finish()]
}

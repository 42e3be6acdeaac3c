use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use super::{element_degree, tensor_degree, Bialgebra, Element, Tensor, Window};
use crate::linear::{Rational, SparseVector};

/// A basis label of a table-defined algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TableLabel(Arc<str>);

impl TableLabel {
    pub fn new(name: &str) -> Self {
        Self(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for TableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("undeclared label `{0}`")]
    UnknownLabel(String),
    #[error("label `{0}` declared twice")]
    DuplicateLabel(String),
    #[error("{what} of `{label}` has degree {found}, expected {expected}")]
    Degree { what: &'static str, label: String, expected: i64, found: i64 },
    #[error("{what} of `{label}` is not homogeneous")]
    Inhomogeneous { what: &'static str, label: String },
    #[error("{what} of `{label}` given twice")]
    Repeated { what: &'static str, label: String },
    #[error("counit missing on `{0}`")]
    MissingCounit(String),
    #[error("counit nonzero on `{0}`, which is not in degree 0")]
    CounitDegree(String),
    #[error("coproduct of `{0}` contains a word that is not of weight 2")]
    CoproductWeight(String),
    #[error("no unit given")]
    MissingUnit,
    #[error("{0} does not stay inside the tabulated basis")]
    NotClosed(String),
}

/// A finite-dimensional bialgebra given by structure-constant tables.
/// Missing products, coproducts and differentials are zero; the counit
/// must be given on every label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableBialgebra {
    name: String,
    basis: Vec<TableLabel>,
    degrees: BTreeMap<TableLabel, i64>,
    unit: Element<TableLabel>,
    product: BTreeMap<(TableLabel, TableLabel), Element<TableLabel>>,
    coproduct: BTreeMap<TableLabel, Tensor<TableLabel>>,
    counit: BTreeMap<TableLabel, Rational>,
    differential: BTreeMap<TableLabel, Element<TableLabel>>,
}

/// Incremental construction of a [`TableBialgebra`] with validation at
/// every step.
#[derive(Clone, Debug)]
pub struct TableBuilder {
    table: TableBialgebra,
    unit_set: bool,
}

impl TableBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            table: TableBialgebra {
                name: name.into(),
                basis: Vec::new(),
                degrees: BTreeMap::new(),
                unit: SparseVector::zero(),
                product: BTreeMap::new(),
                coproduct: BTreeMap::new(),
                counit: BTreeMap::new(),
                differential: BTreeMap::new(),
            },
            unit_set: false,
        }
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.table.name = name.into();
    }

    pub fn declare(&mut self, label: &str, degree: i64) -> Result<TableLabel, TableError> {
        let l = TableLabel::new(label);
        if self.table.degrees.contains_key(&l) {
            return Err(TableError::DuplicateLabel(label.into()));
        }
        self.table.degrees.insert(l.clone(), degree);
        self.table.basis.push(l.clone());
        Ok(l)
    }

    pub fn label(&self, name: &str) -> Result<TableLabel, TableError> {
        let l = TableLabel::new(name);
        if self.table.degrees.contains_key(&l) {
            Ok(l)
        } else {
            Err(TableError::UnknownLabel(name.into()))
        }
    }

    pub fn degree_of(&self, label: &TableLabel) -> Option<i64> {
        self.table.degrees.get(label).copied()
    }

    fn check_element(&self, what: &'static str, label: &str, e: &Element<TableLabel>, expected: i64) -> Result<(), TableError> {
        for l in e.keys() {
            self.label(l.as_str())?;
        }
        self.check_degree(what, label, element_degree(&self.table, e), e.is_zero(), expected)
    }

    fn check_degree(
        &self,
        what: &'static str,
        label: &str,
        found: Option<i64>,
        zero: bool,
        expected: i64,
    ) -> Result<(), TableError> {
        match found {
            _ if zero => Ok(()),
            None => Err(TableError::Inhomogeneous { what, label: label.into() }),
            Some(d) if d != expected => Err(TableError::Degree { what, label: label.into(), expected, found: d }),
            Some(_) => Ok(()),
        }
    }

    pub fn set_unit(&mut self, unit: Element<TableLabel>) -> Result<(), TableError> {
        self.check_element("unit", "1", &unit, 0)?;
        self.table.unit = unit;
        self.unit_set = true;
        Ok(())
    }

    pub fn set_product(&mut self, a: &TableLabel, b: &TableLabel, value: Element<TableLabel>) -> Result<(), TableError> {
        let name = format!("{a} * {b}");
        let expected = self.table.degree(a) + self.table.degree(b);
        self.check_element("product", &name, &value, expected)?;
        if self.table.product.insert((a.clone(), b.clone()), value).is_some() {
            return Err(TableError::Repeated { what: "product", label: name });
        }
        Ok(())
    }

    pub fn set_coproduct(&mut self, a: &TableLabel, value: Tensor<TableLabel>) -> Result<(), TableError> {
        for w in value.keys() {
            if w.len() != 2 {
                return Err(TableError::CoproductWeight(a.to_string()));
            }
            for l in w {
                self.label(l.as_str())?;
            }
        }
        let found = tensor_degree(&self.table, &value);
        self.check_degree("coproduct", a.as_str(), found, value.is_zero(), self.table.degree(a))?;
        if self.table.coproduct.insert(a.clone(), value).is_some() {
            return Err(TableError::Repeated { what: "coproduct", label: a.to_string() });
        }
        Ok(())
    }

    pub fn set_counit(&mut self, a: &TableLabel, value: Rational) -> Result<(), TableError> {
        if !value.is_zero() && self.table.degree(a) != 0 {
            return Err(TableError::CounitDegree(a.to_string()));
        }
        if self.table.counit.insert(a.clone(), value).is_some() {
            return Err(TableError::Repeated { what: "counit", label: a.to_string() });
        }
        Ok(())
    }

    pub fn set_differential(&mut self, a: &TableLabel, value: Element<TableLabel>) -> Result<(), TableError> {
        let expected = self.table.degree(a) + 1;
        self.check_element("differential", a.as_str(), &value, expected)?;
        if self.table.differential.insert(a.clone(), value).is_some() {
            return Err(TableError::Repeated { what: "differential", label: a.to_string() });
        }
        Ok(())
    }

    pub fn build(self) -> Result<TableBialgebra, TableError> {
        if !self.unit_set {
            return Err(TableError::MissingUnit);
        }
        if let Some(l) = self.table.basis.iter().find(|l| !self.table.counit.contains_key(l)) {
            return Err(TableError::MissingCounit(l.to_string()));
        }
        Ok(self.table)
    }
}

impl TableBialgebra {
    /// Tabulates a finite-dimensional algebra, using the display form of its
    /// labels as table labels.
    pub fn tabulate<B: Bialgebra>(alg: &B) -> Result<Self, TableError> {
        let basis = alg.basis(&Window::default());
        let mut b = TableBuilder::new(alg.name());
        let mut names = BTreeMap::new();
        for l in &basis {
            let t = b.declare(&l.to_string(), alg.degree(l))?;
            names.insert(l.clone(), t);
        }
        let rename = |l: &B::Label| names.get(l).cloned().ok_or_else(|| TableError::NotClosed(alg.name()));
        let convert = |e: &Element<B::Label>| -> Result<Element<TableLabel>, TableError> {
            e.iter().map(|(l, c)| Ok((rename(l)?, c.clone()))).collect()
        };
        b.set_unit(convert(&alg.unit())?)?;
        for x in &basis {
            for y in &basis {
                let p = convert(&alg.product(x, y))?;
                if !p.is_zero() {
                    b.set_product(&names[x], &names[y], p)?;
                }
            }
            let cop: Tensor<TableLabel> = alg
                .coproduct(x)
                .iter()
                .map(|(w, c)| Ok((w.iter().map(rename).collect::<Result<Vec<_>, _>>()?, c.clone())))
                .collect::<Result<_, TableError>>()?;
            if !cop.is_zero() {
                b.set_coproduct(&names[x], cop)?;
            }
            b.set_counit(&names[x], alg.counit(x))?;
            let d = convert(&alg.differential(x))?;
            if !d.is_zero() {
                b.set_differential(&names[x], d)?;
            }
        }
        b.build()
    }

    pub fn labels(&self) -> &[TableLabel] {
        &self.basis
    }

    pub fn label(&self, name: &str) -> Option<TableLabel> {
        let l = TableLabel::new(name);
        self.degrees.contains_key(&l).then_some(l)
    }

    pub fn products(&self) -> impl Iterator<Item = (&(TableLabel, TableLabel), &Element<TableLabel>)> {
        self.product.iter()
    }

    pub fn coproducts(&self) -> impl Iterator<Item = (&TableLabel, &Tensor<TableLabel>)> {
        self.coproduct.iter()
    }

    pub fn differentials(&self) -> impl Iterator<Item = (&TableLabel, &Element<TableLabel>)> {
        self.differential.iter()
    }

    pub fn counits(&self) -> impl Iterator<Item = (&TableLabel, &Rational)> {
        self.counit.iter()
    }

    /// Replaces the coproduct of one label without validation; used to
    /// build deliberately broken algebras.
    pub fn with_coproduct(mut self, label: &TableLabel, value: Tensor<TableLabel>) -> Self {
        self.coproduct.insert(label.clone(), value);
        self
    }
}

impl Bialgebra for TableBialgebra {
    type Label = TableLabel;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn degree(&self, label: &TableLabel) -> i64 {
        self.degrees[label]
    }

    fn unit(&self) -> Element<TableLabel> {
        self.unit.clone()
    }

    fn product(&self, a: &TableLabel, b: &TableLabel) -> Element<TableLabel> {
        self.product.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    fn coproduct(&self, a: &TableLabel) -> Tensor<TableLabel> {
        self.coproduct.get(a).cloned().unwrap_or_default()
    }

    fn counit(&self, a: &TableLabel) -> Rational {
        self.counit.get(a).cloned().unwrap_or_else(Rational::zero)
    }

    fn differential(&self, a: &TableLabel) -> Element<TableLabel> {
        self.differential.get(a).cloned().unwrap_or_default()
    }

    fn basis(&self, _: &Window) -> Vec<TableLabel> {
        self.basis.clone()
    }

    fn is_finite_dimensional(&self) -> bool {
        true
    }
}

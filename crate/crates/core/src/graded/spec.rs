use std::collections::BTreeMap;

use crate::forms::BilinearForm;

use super::{BilinearMap, GradedError, GradedModule, Representation};

/// A graded module together with named products, representations and forms.
///
/// Conventional product names are `dot`, `bracket`, `zinbiel` (`◇`) and
/// `prelie` (`∗`); representations default to `rho` and `mu`, forms to `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    module: GradedModule,
    products: BTreeMap<String, BilinearMap>,
    representations: BTreeMap<String, Representation>,
    forms: BTreeMap<String, BilinearForm>,
}

impl AlgebraSpec {
    pub fn new(module: GradedModule) -> Self {
        AlgebraSpec {
            module,
            products: BTreeMap::new(),
            representations: BTreeMap::new(),
            forms: BTreeMap::new(),
        }
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn products(&self) -> &BTreeMap<String, BilinearMap> {
        &self.products
    }

    pub fn representations(&self) -> &BTreeMap<String, Representation> {
        &self.representations
    }

    pub fn forms(&self) -> &BTreeMap<String, BilinearForm> {
        &self.forms
    }

    pub fn product(&self, name: &str) -> Option<&BilinearMap> {
        self.products.get(name)
    }

    pub fn representation(&self, name: &str) -> Option<&Representation> {
        self.representations.get(name)
    }

    pub fn form(&self, name: &str) -> Option<&BilinearForm> {
        self.forms.get(name)
    }

    /// Inserts under the map's own name, replacing any previous entry.
    pub fn insert_product(&mut self, map: BilinearMap) -> Result<(), GradedError> {
        if map.dim() != self.dim() {
            return Err(GradedError::ContextMismatch);
        }
        self.products.insert(map.name().to_string(), map);
        Ok(())
    }

    pub fn with_product(mut self, map: BilinearMap) -> Result<Self, GradedError> {
        self.insert_product(map)?;
        Ok(self)
    }

    pub fn insert_representation(
        &mut self,
        name: impl Into<String>,
        rep: Representation,
    ) -> Result<(), GradedError> {
        if rep.algebra_dim() != self.dim() || !rep.carrier().same_context(&self.module) {
            return Err(GradedError::ContextMismatch);
        }
        self.representations.insert(name.into(), rep);
        Ok(())
    }

    pub fn insert_form(&mut self, name: impl Into<String>, form: BilinearForm) -> Result<(), GradedError> {
        if form.dim() != self.dim() || !std::ptr::eq(form.matrix().field(), self.module.field()) {
            return Err(GradedError::ContextMismatch);
        }
        self.forms.insert(name.into(), form);
        Ok(())
    }

    pub fn remove_representation(&mut self, name: &str) -> Option<Representation> {
        self.representations.remove(name)
    }
}

//! Iso-class descriptors for indecomposables of string algebras.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::linalg::{q_string, Q};
use crate::qkit::{BandWord, DimVector, Quiver, StringWord};
use crate::strmod::{string_to_rep, BandModule, Representation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    String(StringWord),
    Band(BandModule),
}

/// An indecomposable module given by a canonical descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoClass {
    descriptor: Descriptor,
    dim: DimVector,
    label: String,
}

impl IsoClass {
    pub fn string(q: &Quiver, word: StringWord) -> Self {
        let dim = word.dim_vector(q);
        let label = word.display(q);
        IsoClass { descriptor: Descriptor::String(word), dim, label }
    }

    pub fn band(q: &Quiver, band: BandWord, multiplicity: usize, lambda: Q) -> Result<Self> {
        let module = BandModule::new(band, multiplicity, lambda)?;
        let dim = module.dim_vector(q);
        let label = format!("H{}[{}; {}]", module.multiplicity, module.band.display(q), q_string(&module.lambda));
        Ok(IsoClass { descriptor: Descriptor::Band(module), dim, label })
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.descriptor
    }

    pub fn dim(&self) -> &DimVector {
        &self.dim
    }

    pub fn length(&self) -> usize {
        self.dim.total()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn as_string(&self) -> Option<&StringWord> {
        match &self.descriptor {
            Descriptor::String(s) => Some(s),
            Descriptor::Band(_) => None,
        }
    }

    pub fn as_band(&self) -> Option<&BandModule> {
        match &self.descriptor {
            Descriptor::Band(b) => Some(b),
            Descriptor::String(_) => None,
        }
    }

    pub fn is_band(&self) -> bool {
        matches!(self.descriptor, Descriptor::Band(_))
    }

    pub fn is_simple(&self) -> bool {
        self.length() == 1
    }

    pub fn rep(&self, q: &Quiver) -> Representation {
        match &self.descriptor {
            Descriptor::String(s) => string_to_rep(q, s),
            Descriptor::Band(b) => b.to_rep(q),
        }
    }

    /// Descriptor order used for tie-breaking: by length, strings before
    /// bands, then canonical words.
    pub fn descriptor_cmp(&self, other: &IsoClass) -> Ordering {
        self.length().cmp(&other.length()).then_with(|| match (&self.descriptor, &other.descriptor) {
            (Descriptor::String(a), Descriptor::String(b)) => a.canonical_cmp(b),
            (Descriptor::String(_), Descriptor::Band(_)) => Ordering::Less,
            (Descriptor::Band(_), Descriptor::String(_)) => Ordering::Greater,
            (Descriptor::Band(a), Descriptor::Band(b)) => a
                .multiplicity
                .cmp(&b.multiplicity)
                .then_with(|| a.band.len().cmp(&b.band.len()))
                .then_with(|| self.label.cmp(&other.label))
                .then_with(|| a.lambda.cmp(&b.lambda)),
        })
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl Serialize for IsoClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label)
    }
}

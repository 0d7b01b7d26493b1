use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::subset::{SubsetMask, MAX_ELEMENTS};

/// Labelled ground set; element `i` is the `i`-th declared label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::SizeLimit(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() || label.contains([',', '=', ' ']) {
                return Err(Error::BadParams(format!("invalid element label {label:?}")));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::BadParams(format!("duplicate element label {label:?}")));
            }
        }
        Ok(GroundSet { labels, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::BadArgs(format!("unknown element {label:?}")))
    }

    pub fn mask<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<SubsetMask> {
        labels
            .into_iter()
            .try_fold(SubsetMask::EMPTY, |m, l| Ok(m.with(self.element(l.as_ref())?)))
    }

    /// Parses a comma-joined label list; the empty string is the empty set.
    pub fn parse_mask(&self, text: &str) -> Result<SubsetMask> {
        self.mask(text.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    /// Comma-joined labels in index order.
    pub fn format_mask(&self, mask: SubsetMask) -> String {
        self.format_sequence(mask.iter())
    }

    pub fn format_sequence(&self, seq: impl IntoIterator<Item = usize>) -> String {
        seq.into_iter().map(|i| self.label(i)).collect::<Vec<_>>().join(",")
    }

    pub fn mask_labels(&self, mask: SubsetMask) -> Vec<String> {
        mask.iter().map(|i| self.labels[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_oversize() {
        assert!(matches!(GroundSet::new(["a", "a"]), Err(Error::BadParams(_))));
        let many: Vec<String> = (0..21).map(|i| format!("e{i}")).collect();
        assert!(matches!(GroundSet::new(many), Err(Error::SizeLimit(21))));
    }

    #[test]
    fn masks_follow_declaration_order() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        let m = g.parse_mask("z,x").unwrap();
        assert_eq!(m, SubsetMask::from_indices([0, 2]));
        assert_eq!(g.format_mask(m), "x,z");
        assert_eq!(g.parse_mask("").unwrap(), SubsetMask::EMPTY);
        assert!(g.parse_mask("w").is_err());
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

/// A composition: a finite sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, String> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(format!("part {} of a composition is zero", pos + 1));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = String;
    fn try_from(v: Vec<u32>) -> Result<Self, String> {
        Composition::new(v)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_must_be_positive() {
        assert!(Composition::new(vec![1, 0]).is_err());
        let c = Composition::new(vec![3, 1, 2, 1]).unwrap();
        assert_eq!(c.weight(), 7);
        assert_eq!(c.to_string(), "(3,1,2,1)");
    }
}

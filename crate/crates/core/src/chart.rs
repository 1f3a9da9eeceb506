use std::fmt;

use crate::error::{Error, Result};

/// An affine chart `A^d` with named coordinates.
///
/// Dimension zero is allowed and stands for the point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    coords: Vec<String>,
}

impl Chart {
    pub fn new<I, S>(coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let coords: Vec<String> = coords.into_iter().map(Into::into).collect();
        for (i, c) in coords.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::EmptyCoordinate);
            }
            if coords[..i].contains(c) {
                return Err(Error::DuplicateCoordinate(c.clone()));
            }
        }
        Ok(Chart { coords })
    }

    /// The zero-dimensional chart.
    pub fn point() -> Self {
        Chart { coords: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.coords.iter().position(|c| c == name)
    }

    /// Appends a fresh coordinate; fails if the name is already used.
    pub fn extended(&self, name: &str) -> Result<Self> {
        if name.is_empty() {
            return Err(Error::EmptyCoordinate);
        }
        if self.index_of(name).is_some() {
            return Err(Error::CoordinateCollision(name.to_string()));
        }
        let mut coords = self.coords.clone();
        coords.push(name.to_string());
        Ok(Chart { coords })
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A^{}[{}]", self.dim(), self.coords.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert_eq!(
            Chart::new(["x", "y", "x"]),
            Err(Error::DuplicateCoordinate("x".into()))
        );
        assert_eq!(Chart::new(["x", ""]), Err(Error::EmptyCoordinate));
        assert_eq!(Chart::new(Vec::<String>::new()).unwrap(), Chart::point());
    }

    #[test]
    fn extension_checks_collisions() {
        let c = Chart::new(["x", "y"]).unwrap();
        assert_eq!(c.extended("z").unwrap().coords(), ["x", "y", "z"]);
        assert_eq!(c.extended("y"), Err(Error::CoordinateCollision("y".into())));
    }
}

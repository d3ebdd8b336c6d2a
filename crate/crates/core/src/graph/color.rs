use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "R",
            Color::Blue => "B",
        })
    }
}

/// A red/blue label for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorAssignment(Vec<Color>);

impl ColorAssignment {
    pub fn new(colors: Vec<Color>) -> Self {
        ColorAssignment(colors)
    }

    pub fn uniform(n: usize, color: Color) -> Self {
        ColorAssignment(vec![color; n])
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Color) -> Self {
        ColorAssignment((0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.0[v] = c;
    }

    pub fn count(&self, c: Color) -> usize {
        self.0.iter().filter(|&&x| x == c).count()
    }

    pub fn has_both(&self) -> bool {
        self.0.contains(&Color::Red) && self.0.contains(&Color::Blue)
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    /// Colors of `vertices`, in order; used when extracting subgraphs.
    pub fn restrict(&self, vertices: &[usize]) -> ColorAssignment {
        ColorAssignment(vertices.iter().map(|&v| self.0[v]).collect())
    }
}

impl std::ops::Index<usize> for ColorAssignment {
    type Output = Color;
    fn index(&self, v: usize) -> &Color {
        &self.0[v]
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A generator label; `L < R` in the derived order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

/// A finite word over `{L, R}` encoding a composition of generators,
/// outermost generator first: `"RLR"` is `R ∘ L ∘ R`, so the last letter
/// is the first one applied to a vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWord {
    letters: Vec<Letter>,
}

impl PathWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// A copy extended by one more (innermost) letter.
    pub fn child(&self, letter: Letter) -> Self {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Self { letters }
    }

    /// Maximal runs of equal letters, read from the outermost end.
    pub fn run_lengths(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.letters {
            match out.last_mut() {
                Some((letter, n)) if *letter == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}

impl From<Vec<Letter>> for PathWord {
    fn from(letters: Vec<Letter>) -> Self {
        Self { letters }
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Letter::L),
                'R' => Ok(Letter::R),
                other => Err(Error::Parse(format!("invalid letter {other:?} in word"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(PathWord::from)
    }
}

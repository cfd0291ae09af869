use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::DreamError;

/// An edge label. Letters are numbered from 1; letter `m` belongs to the m-th dot of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Label {
    Zero,
    One,
    Letter(u8),
}

impl Label {
    pub fn is_zero(self) -> bool {
        self == Label::Zero
    }

    /// Letters and 1 both count as "lettered" for the crossing rules.
    pub fn is_lettered(self) -> bool {
        self != Label::Zero
    }

    pub fn is_letter(self) -> bool {
        matches!(self, Label::Letter(_))
    }

    pub fn letter_char(m: u8) -> Option<char> {
        match m {
            1..=26 => Some((b'A' + m - 1) as char),
            27..=52 => Some((b'a' + m - 27) as char),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Zero => write!(f, "0"),
            Label::One => write!(f, "1"),
            Label::Letter(m) => match Label::letter_char(*m) {
                Some(c) => write!(f, "{c}"),
                None => write!(f, "#{m}"),
            },
        }
    }
}

impl FromStr for Label {
    type Err = DreamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let c = chars.next().ok_or_else(|| DreamError::BadLabel(s.to_string()))?;
        if let Some(rest) = s.strip_prefix('#') {
            return rest
                .parse::<u8>()
                .ok()
                .filter(|&m| m > 0)
                .map(Label::Letter)
                .ok_or_else(|| DreamError::BadLabel(s.to_string()));
        }
        if chars.next().is_some() {
            return Err(DreamError::BadLabel(s.to_string()));
        }
        match c {
            '0' => Ok(Label::Zero),
            '1' => Ok(Label::One),
            'A'..='Z' => Ok(Label::Letter(c as u8 - b'A' + 1)),
            'a'..='z' => Ok(Label::Letter(c as u8 - b'a' + 27)),
            _ => Err(DreamError::BadLabel(s.to_string())),
        }
    }
}

impl TryFrom<String> for Label {
    type Error = DreamError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Label> for String {
    fn from(l: Label) -> Self {
        l.to_string()
    }
}

/// A vertical edge label: either `[0]` or a nonempty word of distinct nonzero labels with any 1 last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Label>", into = "Vec<Label>")]
pub struct Word(Vec<Label>);

impl Word {
    pub fn zero() -> Self {
        Word(vec![Label::Zero])
    }

    pub fn single(l: Label) -> Self {
        Word(vec![l])
    }

    pub fn new(labels: Vec<Label>) -> Result<Self, DreamError> {
        let bad = || DreamError::BadWord(labels.iter().map(ToString::to_string).collect());
        if labels.is_empty() {
            return Err(bad());
        }
        if labels.len() > 1 {
            if labels.contains(&Label::Zero) {
                return Err(bad());
            }
            if labels[..labels.len() - 1].contains(&Label::One) {
                return Err(bad());
            }
            for (a, x) in labels.iter().enumerate() {
                if labels[a + 1..].contains(x) {
                    return Err(bad());
                }
            }
        }
        Ok(Word(labels))
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [Label::Zero]
    }

    pub fn last(&self) -> Label {
        *self.0.last().expect("words are nonempty")
    }

    pub fn contains(&self, l: Label) -> bool {
        self.0.contains(&l)
    }

    /// The single label, if the word has length one.
    pub fn as_single(&self) -> Option<Label> {
        match self.0[..] {
            [l] => Some(l),
            _ => None,
        }
    }

    /// Drops the last label; `None` if that would leave the word empty.
    pub fn without_last(&self) -> Option<Word> {
        (self.0.len() > 1).then(|| Word(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Appends `c`, if the result is still a word.
    pub fn pushed(&self, c: Label) -> Option<Word> {
        if self.is_zero() || c.is_zero() {
            return None;
        }
        let mut v = self.0.clone();
        v.push(c);
        Word::new(v).ok()
    }
}

impl TryFrom<Vec<Label>> for Word {
    type Error = DreamError;

    fn try_from(v: Vec<Label>) -> Result<Self, Self::Error> {
        Word::new(v)
    }
}

impl From<Word> for Vec<Label> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_strings() {
        for l in [Label::Zero, Label::One, Label::Letter(1), Label::Letter(26), Label::Letter(27), Label::Letter(60)] {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
        assert_eq!(Label::Letter(2).to_string(), "B");
        assert_eq!(Label::Letter(28).to_string(), "b");
        assert!("AB".parse::<Label>().is_err());
    }

    #[test]
    fn word_rules() {
        let a = Label::Letter(1);
        let b = Label::Letter(2);
        assert!(Word::new(vec![a, Label::One]).is_ok());
        assert!(Word::new(vec![Label::One, a]).is_err());
        assert!(Word::new(vec![a, a]).is_err());
        assert!(Word::new(vec![a, Label::Zero]).is_err());
        assert!(Word::new(vec![]).is_err());
        let w = Word::new(vec![a, b]).unwrap();
        assert_eq!(w.without_last(), Some(Word::single(a)));
        assert_eq!(w.pushed(Label::One).unwrap().to_string(), "AB1");
        assert!(Word::single(Label::One).pushed(a).is_none());
        assert!(Word::zero().pushed(a).is_none());
    }
}

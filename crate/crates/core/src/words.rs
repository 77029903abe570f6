//! Free-group words over a symmetrized integer alphabet.
//!
//! A positive letter `x_i` is encoded as `+i` and its inverse as `-i`. The
//! stable letter of an HNN extension is a reserved code outside the
//! base-group range, so plain group words and HNN words share one
//! representation and one parser (with two validation modes).

use std::fmt;
use thiserror::Error;

/// Reserved integer code for the stable letter `t` (outside every base rank).
pub const STABLE_CODE: i32 = i32::MAX;

/// A single signed letter. `code != 0`; the inverse of code `c` is `-c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(code: i32) -> Letter {
        assert!(code != 0, "letter code must be nonzero");
        Letter(code)
    }

    pub fn code(self) -> i32 {
        self.0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn is_stable(self) -> bool {
        self.0.abs() == STABLE_CODE
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", letter_text(self.0))
    }
}

/// A group word: a sequence of nonzero letter codes plus a cached
/// "already freely reduced" flag. The empty word is reduced.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<i32>,
    reduced: bool,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new(), reduced: true }
    }

    pub fn from_codes(codes: Vec<i32>) -> Word {
        assert!(codes.iter().all(|&c| c != 0), "letter codes must be nonzero");
        let reduced = is_reduced(&codes);
        Word { letters: codes, reduced }
    }

    pub fn codes(&self) -> &[i32] {
        &self.letters
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().map(|&c| Letter(c))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Plain concatenation, no reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        let reduced = if self.is_empty() {
            other.reduced
        } else if other.is_empty() {
            self.reduced
        } else {
            false
        };
        Word { letters, reduced }
    }

    /// Reversed, letter-inverted word. `free_reduce(w ∘ invert(w)) = ε`.
    pub fn invert(&self) -> Word {
        let letters: Vec<i32> = self.letters.iter().rev().map(|&c| -c).collect();
        Word { letters, reduced: self.reduced }
    }

    /// The unique freely reduced word representing the same element.
    /// Idempotent and length-nonincreasing.
    pub fn free_reduce(&self) -> Word {
        if self.reduced {
            return self.clone();
        }
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &c in &self.letters {
            if stack.last() == Some(&-c) {
                stack.pop();
            } else {
                stack.push(c);
            }
        }
        Word { letters: stack, reduced: true }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", format_word(self))
    }
}

fn is_reduced(codes: &[i32]) -> bool {
    codes.windows(2).all(|w| w[0] != -w[1])
}

/// An HNN word split at stable letters: syllables `w_0, ..., w_k` over the
/// base alphabet and signs `ε_1, ..., ε_k` of the stable letters between
/// them (`syllables.len() == signs.len() + 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnnWordText {
    pub syllables: Vec<Word>,
    pub signs: Vec<i8>,
}

impl HnnWordText {
    pub fn from_plain(w: Word) -> HnnWordText {
        HnnWordText { syllables: vec![w], signs: Vec::new() }
    }

    /// Number of stable letters (the syllable length `k`).
    pub fn syllable_length(&self) -> usize {
        self.signs.len()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown character {0:?} at position {1}")]
    UnknownChar(char, usize),
    #[error("letter {0:?} exceeds rank {1}")]
    LetterOutOfRange(char, usize),
    #[error("stable letter {0:?} not allowed here (position {1})")]
    StableNotAllowed(char, usize),
    #[error("rank {0} not supported by the textual interface (1..=26)")]
    BadRank(usize),
}

fn char_code(ch: char, rank: usize, allow_stable: bool, pos: usize) -> Result<i32, ParseError> {
    // With `allow_stable`, 't'/'T' always denote the stable letter, even when
    // rank >= 20 would make 't' a base letter.
    if allow_stable && (ch == 't' || ch == 'T') {
        return Ok(if ch == 't' { STABLE_CODE } else { -STABLE_CODE });
    }
    let (base, sign) = if ch.is_ascii_lowercase() {
        (ch as u8 - b'a', 1)
    } else if ch.is_ascii_uppercase() {
        (ch as u8 - b'A', -1)
    } else {
        return Err(ParseError::UnknownChar(ch, pos));
    };
    let idx = base as usize + 1;
    if idx > rank {
        return Err(ParseError::LetterOutOfRange(ch, pos));
    }
    Ok(sign * idx as i32)
}

/// Parses a word over the base alphabet: lowercase = positive letter,
/// uppercase = inverse. No stable letters allowed.
pub fn parse_word(text: &str, rank: usize) -> Result<Word, ParseError> {
    if rank == 0 || rank > 26 {
        return Err(ParseError::BadRank(rank));
    }
    let mut codes = Vec::with_capacity(text.len());
    for (pos, ch) in text.chars().enumerate() {
        let code = char_code(ch, rank, false, pos)?;
        codes.push(code);
    }
    Ok(Word::from_codes(codes))
}

/// Parses an HNN word: like [`parse_word`] but `t`/`T` delimit syllables.
pub fn parse_hnn_word(text: &str, rank: usize) -> Result<HnnWordText, ParseError> {
    if rank == 0 || rank > 26 {
        return Err(ParseError::BadRank(rank));
    }
    let mut syllables = vec![Vec::new()];
    let mut signs = Vec::new();
    for (pos, ch) in text.chars().enumerate() {
        let code = char_code(ch, rank, true, pos)?;
        if code.abs() == STABLE_CODE {
            signs.push(if code > 0 { 1 } else { -1 });
            syllables.push(Vec::new());
        } else {
            syllables.last_mut().unwrap().push(code);
        }
    }
    Ok(HnnWordText {
        syllables: syllables.into_iter().map(Word::from_codes).collect(),
        signs,
    })
}

fn letter_text(code: i32) -> String {
    if code == STABLE_CODE {
        return "t".to_string();
    }
    if code == -STABLE_CODE {
        return "T".to_string();
    }
    let idx = code.unsigned_abs();
    if idx >= 1 && idx <= 26 {
        let ch = (b'a' + (idx - 1) as u8) as char;
        if code > 0 {
            ch.to_string()
        } else {
            ch.to_ascii_uppercase().to_string()
        }
    } else {
        // Outside the textual range; only reachable through the library API.
        format!("<{code}>")
    }
}

/// Formats a word in the uppercase-as-inverse convention.
pub fn format_word(w: &Word) -> String {
    w.codes().iter().map(|&c| letter_text(c)).collect()
}

pub fn format_hnn_word(w: &HnnWordText) -> String {
    let mut out = format_word(&w.syllables[0]);
    for (i, &s) in w.signs.iter().enumerate() {
        out.push(if s > 0 { 't' } else { 'T' });
        out.push_str(&format_word(&w.syllables[i + 1]));
    }
    out
}

/// Substitutes `images[|i|-1]^sign(i)` for each signed 1-based index and
/// freely reduces. Used to apply a basis-indexed map to a rewritten word.
pub fn substitute(images: &[Word], indices: &[i32]) -> Word {
    let mut codes = Vec::new();
    for &ix in indices {
        let img = &images[(ix.unsigned_abs() as usize) - 1];
        if ix > 0 {
            codes.extend_from_slice(img.codes());
        } else {
            codes.extend(img.codes().iter().rev().map(|&c| -c));
        }
    }
    Word::from_codes(codes).free_reduce()
}

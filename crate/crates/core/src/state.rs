//! Boundary state words.
//!
//! The state of one side of a mosaic records, edge by edge, whether a
//! connection point is present (`o`) or absent (`x`).  Words of length
//! `len` are numbered `1..=2^len` in reverse-lexicographic order: the
//! first position varies fastest and `x` sorts before `o`, so position
//! `p` (1-based) of the `i`-th word is `o` exactly when bit `p - 1` of
//! `i - 1` is set.  For length 3 the order runs
//! `xxx, oxx, xox, oox, xxo, oxo, xoo, ooo`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A word over `{x, o}` describing one side of a mosaic boundary.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct StateWord {
    bits: u64,
    len: usize,
}

impl StateWord {
    /// Longest representable word.
    pub const MAX_LEN: usize = 63;

    /// The all-`x` word of the given length.
    pub fn blank(len: usize) -> Result<Self, Error> {
        Self::check_len(len)?;
        Ok(StateWord { bits: 0, len })
    }

    /// Word whose position `p` (0-based) is `o` exactly when `is_o(p)`.
    pub fn from_fn(len: usize, mut is_o: impl FnMut(usize) -> bool) -> Result<Self, Error> {
        Self::check_len(len)?;
        let mut bits = 0u64;
        for p in 0..len {
            if is_o(p) {
                bits |= 1 << p;
            }
        }
        Ok(StateWord { bits, len })
    }

    /// The `index`-th word (1-based) of the given length.
    ///
    /// # Errors
    ///
    /// [`Error::StateIndexOutOfRange`] unless `1 <= index <= 2^len`.
    pub fn from_index(index: usize, len: usize) -> Result<Self, Error> {
        Self::check_len(len)?;
        let max = 1usize << len;
        if index == 0 || index > max {
            return Err(Error::StateIndexOutOfRange { index, len, max });
        }
        Ok(StateWord {
            bits: (index - 1) as u64,
            len,
        })
    }

    /// All words of the given length in index order.
    pub fn all(len: usize) -> Result<impl Iterator<Item = StateWord>, Error> {
        Self::check_len(len)?;
        Ok((0..1u64 << len).map(move |bits| StateWord { bits, len }))
    }

    /// 1-based position of this word in the reverse-lexicographic order.
    pub fn index(&self) -> usize {
        self.bits as usize + 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Whether position `pos` (0-based) carries a connection point.
    ///
    /// # Panics
    ///
    /// Panics if `pos >= self.len()`.
    pub fn has_cp(&self, pos: usize) -> bool {
        assert!(pos < self.len, "position {pos} out of range for length {}", self.len);
        self.bits >> pos & 1 == 1
    }

    /// Number of `o` letters.
    pub fn cp_count(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Concatenation `self · tail`; the tail occupies the higher positions.
    pub fn concat(&self, tail: &StateWord) -> Result<StateWord, Error> {
        let len = self.len + tail.len;
        Self::check_len(len)?;
        Ok(StateWord {
            bits: self.bits | tail.bits << self.len,
            len,
        })
    }

    /// Split into the first `mid` letters and the rest.
    ///
    /// # Panics
    ///
    /// Panics if `mid > self.len()`.
    pub fn split_at(&self, mid: usize) -> (StateWord, StateWord) {
        assert!(mid <= self.len, "split point {mid} out of range for length {}", self.len);
        let head = StateWord {
            bits: self.bits & ((1u64 << mid) - 1),
            len: mid,
        };
        let tail = StateWord {
            bits: self.bits >> mid,
            len: self.len - mid,
        };
        (head, tail)
    }

    fn check_len(len: usize) -> Result<(), Error> {
        if len > Self::MAX_LEN {
            Err(Error::WordTooLong {
                len,
                max: Self::MAX_LEN,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for StateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len {
            f.write_str(if self.has_cp(p) { "o" } else { "x" })?;
        }
        Ok(())
    }
}

impl FromStr for StateWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::check_len(s.len())?;
        let mut bits = 0u64;
        for (p, c) in s.chars().enumerate() {
            match c {
                'o' => bits |= 1 << p,
                'x' => {}
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        column: p + 1,
                        message: format!("invalid state letter {other:?}, expected 'x' or 'o'"),
                    })
                }
            }
        }
        Ok(StateWord { bits, len: s.len() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_three_order() {
        let words: Vec<String> = StateWord::all(3)
            .unwrap()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(
            words,
            ["xxx", "oxx", "xox", "oox", "xxo", "oxo", "xoo", "ooo"]
        );
    }

    #[test]
    fn index_examples() {
        assert_eq!("xxx".parse::<StateWord>().unwrap().index(), 1);
        assert_eq!("xox".parse::<StateWord>().unwrap().index(), 3);
        assert_eq!("ooo".parse::<StateWord>().unwrap().index(), 8);
        assert_eq!(StateWord::from_index(2, 3).unwrap().to_string(), "oxx");
        assert_eq!(StateWord::from_index(1, 5).unwrap().to_string(), "xxxxx");
        assert_eq!(StateWord::from_index(4, 2).unwrap().to_string(), "oo");
    }

    #[test]
    fn roundtrip_small_lengths() {
        for len in 0..=8 {
            for index in 1..=(1usize << len) {
                let w = StateWord::from_index(index, len).unwrap();
                assert_eq!(w.index(), index);
                assert_eq!(w.to_string().parse::<StateWord>().unwrap(), w);
            }
        }
    }

    #[test]
    fn out_of_range_indices() {
        assert!(matches!(
            StateWord::from_index(0, 3),
            Err(Error::StateIndexOutOfRange { index: 0, len: 3, max: 8 })
        ));
        assert!(matches!(
            StateWord::from_index(9, 3),
            Err(Error::StateIndexOutOfRange { .. })
        ));
        assert!(matches!(
            StateWord::blank(64),
            Err(Error::WordTooLong { len: 64, max: 63 })
        ));
    }

    #[test]
    fn concat_and_split() {
        let l: StateWord = "ox".parse().unwrap();
        let t: StateWord = "oox".parse().unwrap();
        let joined = l.concat(&t).unwrap();
        assert_eq!(joined.to_string(), "oxoox");
        let (head, tail) = joined.split_at(2);
        assert_eq!(head, l);
        assert_eq!(tail, t);
        assert_eq!(joined.cp_count(), 3);
    }

    #[test]
    fn bad_letter_rejected() {
        let err = "oxq".parse::<StateWord>().unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 3, .. }));
    }
}

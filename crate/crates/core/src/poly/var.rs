use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::PolyError;

const NAME_BYTES: usize = 8;

/// A short variable name packed into a machine word.
///
/// Names are 1 to 8 ASCII characters: a letter or `_` followed by letters,
/// digits or `_`. Packing is big-endian with zero padding, so the integer
/// order is the lexicographic order of the names.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Name(u64);

impl Name {
    pub fn new(s: &str) -> Result<Self, PolyError> {
        let bytes = s.as_bytes();
        let valid_head = bytes
            .first()
            .is_some_and(|b| b.is_ascii_alphabetic() || *b == b'_');
        let valid_tail = bytes
            .iter()
            .all(|b| b.is_ascii_alphanumeric() || *b == b'_');
        if !valid_head || !valid_tail || bytes.len() > NAME_BYTES {
            return Err(PolyError::InvalidName(s.to_string()));
        }
        let mut packed = [0u8; NAME_BYTES];
        packed[..bytes.len()].copy_from_slice(bytes);
        Ok(Name(u64::from_be_bytes(packed)))
    }

    pub fn as_str(&self) -> String {
        let packed = self.0.to_be_bytes();
        let len = packed.iter().position(|b| *b == 0).unwrap_or(NAME_BYTES);
        // construction guarantees ASCII
        String::from_utf8_lossy(&packed[..len]).into_owned()
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str())
    }
}

/// An indeterminate: a name with an optional nonnegative index, so that
/// `x`, `c[0]` and `c[3]` are three distinct variables.
///
/// Ordering is lexicographic on the name, then numeric on the index, with
/// the unindexed variable first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarId {
    name: Name,
    index: Option<u32>,
}

impl VarId {
    pub fn try_plain(name: &str) -> Result<Self, PolyError> {
        Ok(VarId {
            name: Name::new(name)?,
            index: None,
        })
    }

    pub fn try_indexed(name: &str, index: u32) -> Result<Self, PolyError> {
        Ok(VarId {
            name: Name::new(name)?,
            index: Some(index),
        })
    }

    /// Unindexed variable from a literal name.
    ///
    /// Panics if `name` is not a valid name; meant for names fixed in code.
    pub fn plain(name: &str) -> Self {
        Self::try_plain(name).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Indexed variable from a literal name. Panics like [`VarId::plain`].
    pub fn indexed(name: &str, index: u32) -> Self {
        Self::try_indexed(name, index).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn from_parts(name: Name, index: Option<u32>) -> Self {
        VarId { name, index }
    }

    pub fn name(&self) -> Name {
        self.name
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }

    pub fn with_index(&self, index: u32) -> Self {
        VarId {
            name: self.name,
            index: Some(index),
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name
            .cmp(&other.name)
            .then_with(|| self.index.cmp(&other.index))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}[{}]", self.name, i),
            None => write!(f, "{}", self.name),
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VarId {
    type Err = PolyError;

    /// Parses `x` or `c[3]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.find('[') {
            None => VarId::try_plain(s),
            Some(open) => {
                let inner = s[open + 1..]
                    .strip_suffix(']')
                    .ok_or_else(|| PolyError::InvalidName(s.to_string()))?;
                let index: u32 = inner
                    .trim()
                    .parse()
                    .map_err(|_| PolyError::InvalidName(s.to_string()))?;
                VarId::try_indexed(s[..open].trim(), index)
            }
        }
    }
}

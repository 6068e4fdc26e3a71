//! Growable bitsets over the nonnegative integers, used as sumsets.

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new() -> Self {
        Bits::default()
    }

    pub fn singleton(i: usize) -> Self {
        let mut b = Bits::new();
        b.insert(i);
        b
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= src << shift`.
    pub fn or_shifted(&mut self, src: &Bits, shift: usize) {
        let Some(top) = src.words.iter().rposition(|&w| w != 0) else {
            return;
        };
        let word_shift = shift / 64;
        let bit_shift = shift % 64;
        let need = top + word_shift + 2;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        if bit_shift == 0 {
            for (i, &w) in src.words[..=top].iter().enumerate() {
                self.words[i + word_shift] |= w;
            }
        } else {
            for (i, &w) in src.words[..=top].iter().enumerate() {
                self.words[i + word_shift] |= w << bit_shift;
                self.words[i + word_shift + 1] |= w >> (64 - bit_shift);
            }
        }
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn first_common(&self, other: &Bits) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find_map(|(i, (a, b))| {
                let c = a & b;
                (c != 0).then(|| i * 64 + c.trailing_zeros() as usize)
            })
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// `{ c·x : x ∈ self }`.
    pub fn scaled(&self, c: usize) -> Bits {
        if c == 1 {
            return self.clone();
        }
        let mut out = Bits::new();
        for x in self.ones() {
            out.insert(x * c);
        }
        out
    }

    /// Minkowski sum `{ x + y : x ∈ self, y ∈ other }`.
    pub fn sumset(&self, other: &Bits) -> Bits {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Bits::new();
        for x in small.ones() {
            out.or_shifted(large, x);
        }
        out
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut b = Bits::new();
        for i in iter {
            b.insert(i);
        }
        b
    }
}

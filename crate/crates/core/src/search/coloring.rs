use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A red/blue coloring of `[r] = {1, ..., r}`. Ordering is lexicographic
/// with `Red < Blue`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring { colors }
    }

    /// Colors the listed integers red and the rest of `[r]` blue.
    pub fn from_red(r: usize, red: &[u64]) -> Self {
        let mut colors = vec![Color::Blue; r];
        for &v in red {
            assert!(v >= 1 && v as usize <= r, "{v} is outside [1, {r}]");
            colors[v as usize - 1] = Color::Red;
        }
        Coloring { colors }
    }

    pub fn monochrome(r: usize, color: Color) -> Self {
        Coloring {
            colors: vec![color; r],
        }
    }

    pub fn r(&self) -> usize {
        self.colors.len()
    }

    /// Color of the integer `v`, `1 <= v <= r`.
    pub fn color(&self, v: u64) -> Color {
        self.colors[v as usize - 1]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn class(&self, color: Color) -> Vec<u64> {
        (1..=self.r() as u64)
            .filter(|&v| self.color(v) == color)
            .collect()
    }

    pub fn red(&self) -> Vec<u64> {
        self.class(Color::Red)
    }

    pub fn blue(&self) -> Vec<u64> {
        self.class(Color::Blue)
    }

    pub fn swapped(&self) -> Coloring {
        Coloring {
            colors: self.colors.iter().map(|c| c.other()).collect(),
        }
    }

    pub fn restrict(&self, r: usize) -> Coloring {
        Coloring {
            colors: self.colors[..r.min(self.r())].to_vec(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.colors.first().is_none_or(|&c| c == Color::Red)
    }

    /// The color-swapped form with `1` red.
    pub fn canonical(&self) -> Coloring {
        if self.is_canonical() {
            self.clone()
        } else {
            self.swapped()
        }
    }

    /// All `2^(r-1)` canonical colorings of `[r]`, in lexicographic order.
    pub fn all_canonical(r: usize) -> impl Iterator<Item = Coloring> {
        assert!(r < 64, "enumerating colorings of [{r}] is not supported");
        let count: u64 = if r == 0 { 1 } else { 1 << (r - 1) };
        (0..count).map(move |bits| {
            let colors = (0..r)
                .map(|i| {
                    // integer 1 is the most significant position; it stays red
                    let pos = r - 1 - i;
                    if pos < 64 && bits >> pos & 1 == 1 {
                        Color::Blue
                    } else {
                        Color::Red
                    }
                })
                .collect();
            Coloring { colors }
        })
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.colors {
            f.write_str(match c {
                Color::Red => "R",
                Color::Blue => "B",
            })?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    r: usize,
    red: Vec<u64>,
    blue: Vec<u64>,
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ColoringRepr {
            r: self.r(),
            red: self.red(),
            blue: self.blue(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = ColoringRepr::deserialize(d)?;
        let mut seen = vec![None; repr.r];
        for (vals, color) in [(&repr.red, Color::Red), (&repr.blue, Color::Blue)] {
            for &v in vals {
                let slot = (v as usize)
                    .checked_sub(1)
                    .and_then(|i| seen.get_mut(i))
                    .ok_or_else(|| D::Error::custom(format!("{v} is outside [1, {}]", repr.r)))?;
                if slot.replace(color).is_some() {
                    return Err(D::Error::custom(format!("{v} is colored twice")));
                }
            }
        }
        let colors = seen
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| D::Error::custom(format!("{} is uncolored", i + 1))))
            .collect::<Result<_, _>>()?;
        Ok(Coloring { colors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_and_text() {
        let c = Coloring::from_red(4, &[1, 4]);
        assert_eq!(c.red(), vec![1, 4]);
        assert_eq!(c.blue(), vec![2, 3]);
        assert_eq!(c.to_string(), "RBBR");
        assert_eq!(c.swapped().to_string(), "BRRB");
        assert_eq!(c.swapped().canonical(), c);
        assert_eq!(c.restrict(2).to_string(), "RB");
    }

    #[test]
    fn canonical_enumeration_is_lexicographic() {
        let all: Vec<String> = Coloring::all_canonical(3).map(|c| c.to_string()).collect();
        assert_eq!(all, ["RRR", "RRB", "RBR", "RBB"]);
        assert_eq!(Coloring::all_canonical(0).count(), 1);
        let mut sorted = Coloring::all_canonical(6).collect::<Vec<_>>();
        assert!(sorted.iter().all(Coloring::is_canonical));
        let copy = sorted.clone();
        sorted.sort();
        assert_eq!(sorted, copy);
    }

    #[test]
    fn json_shape() {
        let c = Coloring::from_red(4, &[1, 4]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"r":4,"red":[1,4],"blue":[2,3]}"#);
        assert_eq!(serde_json::from_str::<Coloring>(&s).unwrap(), c);
        for bad in [
            r#"{"r":3,"red":[1,4],"blue":[2]}"#,
            r#"{"r":3,"red":[1,2],"blue":[2,3]}"#,
            r#"{"r":3,"red":[1],"blue":[2]}"#,
            r#"{"r":3,"red":[0],"blue":[1,2,3]}"#,
        ] {
            assert!(serde_json::from_str::<Coloring>(bad).is_err(), "{bad}");
        }
    }
}

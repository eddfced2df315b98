//! Freely reduced words in the meridian generators a_1..a_m.

use std::fmt;

/// A word in the free group: letters are nonzero integers, letter g > 0 for
/// the generator a_g and -g for its inverse. Always freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: vec![] }
    }

    /// Single generator a_g (1-based).
    pub fn generator(g: usize) -> Self {
        FreeWord {
            letters: vec![g as i32],
        }
    }

    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = FreeWord::identity();
        for &l in letters {
            assert!(l != 0, "letter 0 is not a generator");
            w.push(l);
        }
        w
    }

    fn push(&mut self, letter: i32) {
        if self.letters.last() == Some(&-letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// self^by = by^-1 * self * by.
    pub fn conjugate(&self, by: &Self) -> Self {
        by.inverse().mul(self).mul(by)
    }

    /// Commutator [self, other] = self * other * self^-1 * other^-1.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).mul(&self.inverse()).mul(&other.inverse())
    }

    /// Exponent-sum vector over m generators.
    pub fn abelianization(&self, m: usize) -> Vec<i64> {
        let mut v = vec![0i64; m];
        for &l in &self.letters {
            let g = l.unsigned_abs() as usize - 1;
            v[g] += if l > 0 { 1 } else { -1 };
        }
        v
    }

    /// True if the word is w^-1 a_i w for a single generator a_i.
    pub fn is_conjugate_of_generator(&self) -> bool {
        let n = self.letters.len();
        if n % 2 == 0 {
            return false;
        }
        let mid = n / 2;
        if self.letters[mid] <= 0 {
            return false;
        }
        (0..mid).all(|k| self.letters[k] == -self.letters[n - 1 - k])
    }

    /// Plain form: space-separated signed letters, e.g. "a3^-1 a1 a3".
    pub fn plain(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("a{l}")
                } else {
                    format!("a{}^-1", -l)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Pretty conjugation form using letters a, b, c, ... for generators:
    /// a word w^-1 g w renders as "g^{w}", other words as concatenations.
    pub fn pretty(&self) -> String {
        fn letter_name(g: i32) -> String {
            let idx = g.unsigned_abs() as usize - 1;
            if idx < 26 {
                ((b'a' + idx as u8) as char).to_string()
            } else {
                format!("a{}", idx + 1)
            }
        }
        fn render(letters: &[i32]) -> String {
            if letters.is_empty() {
                return "1".into();
            }
            // detect w^-1 g w shape for nicer output
            let n = letters.len();
            if n % 2 == 1 {
                let mid = n / 2;
                let symmetric = (0..mid).all(|k| letters[k] == -letters[n - 1 - k]);
                if symmetric && mid > 0 {
                    let base = render(&letters[mid..mid + 1]);
                    let conj: String = letters[mid + 1..]
                        .iter()
                        .map(|&l| {
                            if l > 0 {
                                letter_name(l)
                            } else {
                                format!("{}^-1", letter_name(l))
                            }
                        })
                        .collect();
                    return format!("{base}^{{{conj}}}");
                }
            }
            letters
                .iter()
                .map(|&l| {
                    if l > 0 {
                        letter_name(l)
                    } else {
                        format!("{}^-1", letter_name(l))
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        }
        render(&self.letters)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.plain())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_confluent() {
        let w = FreeWord::from_letters(&[1, 2, -2, -1, 3]);
        assert_eq!(w, FreeWord::generator(3));
        let again = FreeWord::from_letters(w.letters());
        assert_eq!(again, w);
    }

    #[test]
    fn conjugation_and_abelianization() {
        let a = FreeWord::generator(1);
        let b = FreeWord::generator(2);
        let c = a.conjugate(&b); // b^-1 a b
        assert_eq!(c.letters(), &[-2, 1, 2]);
        assert_eq!(c.abelianization(2), vec![1, 0]);
        assert!(c.is_conjugate_of_generator());
        assert!(!a.mul(&b).is_conjugate_of_generator());
        assert_eq!(c.mul(&c.inverse()), FreeWord::identity());
    }

    #[test]
    fn rendering() {
        // c^{bd^-1} = (bd^-1)^-1 c (bd^-1) = d b^-1 c b d^-1
        let c = FreeWord::generator(3);
        let bd = FreeWord::generator(2).mul(&FreeWord::generator(4).inverse());
        let w = c.conjugate(&bd);
        assert_eq!(w.plain(), "a4 a2^-1 a3 a2 a4^-1");
        assert_eq!(w.pretty(), "c^{bd^-1}");
        assert_eq!(FreeWord::identity().plain(), "1");
    }
}

//! Finite group presentations and sound Tietze simplification.

use std::fmt;

use super::HomotopyError;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// Cancels adjacent `x x⁻¹` pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancelling the ends against each other.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == w[w.len() - 1].inv() {
        w.pop();
        w.remove(0);
    }
    w
}

/// Least rotation of `w` or of its inverse, as a key for relators that
/// generate the same normal subgroup.
fn cyclic_key(w: &[Letter]) -> Word {
    let inv = inverse_word(w);
    let mut best = w.to_vec();
    for cand in [w.to_vec(), inv] {
        for k in 0..cand.len() {
            let mut rot = cand[k..].to_vec();
            rot.extend_from_slice(&cand[..k]);
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

/// Generators and relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

fn lowercase_token(name: &str) -> bool {
    name.chars().all(|c| c.is_ascii_lowercase())
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, HomotopyError> {
        for (i, g) in generators.iter().enumerate() {
            if g.is_empty() || g.chars().any(char::is_whitespace) || generators[..i].contains(g) {
                return Err(HomotopyError::BadGenerator(g.clone()));
            }
        }
        if relators.iter().flatten().any(|l| l.gen >= generators.len()) {
            return Err(HomotopyError::BadWord("letter out of range".into()));
        }
        Ok(Presentation { generators, relators })
    }

    /// Parses tokens: a generator name, `name^-1`, or an uppercase
    /// spelling of an all-lowercase generator name for its inverse.
    pub fn parse_token(&self, token: &str) -> Result<Letter, HomotopyError> {
        if let Some(name) = token.strip_suffix("^-1") {
            if let Some(g) = self.generators.iter().position(|x| x == name) {
                return Ok(Letter { gen: g, inverse: true });
            }
        }
        if let Some(g) = self.generators.iter().position(|x| x == token) {
            return Ok(Letter::new(g));
        }
        let lower = token.to_ascii_lowercase();
        if lower != token && lowercase_token(&lower) {
            if let Some(g) = self.generators.iter().position(|x| *x == lower) {
                return Ok(Letter { gen: g, inverse: true });
            }
        }
        Err(HomotopyError::BadWord(format!("unknown token `{token}`")))
    }

    pub fn parse_word<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word, HomotopyError> {
        tokens.iter().map(|t| self.parse_token(t.as_ref())).collect()
    }

    pub fn token(&self, l: Letter) -> String {
        let name = &self.generators[l.gen];
        if !l.inverse {
            name.clone()
        } else if lowercase_token(name) {
            name.to_ascii_uppercase()
        } else {
            format!("{name}^-1")
        }
    }

    pub fn word_tokens(&self, w: &[Letter]) -> Vec<String> {
        w.iter().map(|&l| self.token(l)).collect()
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        self.word_tokens(w).join(" ")
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty() && self.relators.is_empty()
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| exponent_vector(r, self.generators.len()))
            .collect()
    }
}

pub fn exponent_vector(w: &[Letter], n: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    for l in w {
        v[l.gen] += l.exponent();
    }
    v
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        let side = |items: &[String]| {
            if items.is_empty() {
                String::new()
            } else {
                format!("{} ", items.join(", "))
            }
        };
        write!(f, "< {}| {}>", side(&self.generators), side(&rels))
    }
}

/// Applies free and cyclic reduction, drops trivial and repeated relators,
/// and eliminates generators occurring exactly once in some relator.
/// Each elimination uses one unit of `budget`; every move preserves the
/// group up to isomorphism.
pub fn tietze_simplify(p: &Presentation, budget: usize) -> Presentation {
    let mut gens = p.generators.clone();
    let mut rels: Vec<Word> = p.relators.clone();
    let mut steps = 0;
    loop {
        rels = tidy(rels);
        if steps >= budget {
            break;
        }
        // shortest relator that defines some generator
        let mut best: Option<(usize, usize, usize)> = None;
        for (ri, r) in rels.iter().enumerate() {
            for g in 0..gens.len() {
                let pos: Vec<usize> = (0..r.len()).filter(|&k| r[k].gen == g).collect();
                if pos.len() == 1 && best.is_none_or(|(_, _, len)| r.len() < len) {
                    best = Some((ri, g, r.len()));
                }
            }
        }
        let Some((ri, g, _)) = best else { break };
        let r = rels.remove(ri);
        let k = r.iter().position(|l| l.gen == g).unwrap();
        // r rotated to g^ε w, so g = w⁻¹ (ε = 1) or g = w (ε = -1)
        let mut w: Word = r[k + 1..].to_vec();
        w.extend_from_slice(&r[..k]);
        let value = if r[k].inverse { w } else { inverse_word(&w) };
        let value_inv = inverse_word(&value);
        rels = rels
            .into_iter()
            .map(|rel| {
                let mut out = Vec::new();
                for l in rel {
                    if l.gen == g {
                        out.extend_from_slice(if l.inverse { &value_inv } else { &value });
                    } else {
                        out.push(l);
                    }
                }
                out
            })
            .collect();
        gens.remove(g);
        for rel in &mut rels {
            for l in rel.iter_mut() {
                if l.gen > g {
                    l.gen -= 1;
                }
            }
        }
        steps += 1;
    }
    Presentation {
        generators: gens,
        relators: rels,
    }
}

fn tidy(rels: Vec<Word>) -> Vec<Word> {
    let mut seen = std::collections::HashSet::new();
    rels.into_iter()
        .map(|r| cyclic_reduce(&r))
        .filter(|r| !r.is_empty() && seen.insert(cyclic_key(r)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], rels: &[&[&str]]) -> Presentation {
        let p = Presentation::new(gens.iter().map(|s| s.to_string()).collect(), Vec::new()).unwrap();
        let rels = rels.iter().map(|r| p.parse_word(r).unwrap()).collect();
        Presentation::new(p.generators, rels).unwrap()
    }

    #[test]
    fn tokens_round_trip() {
        let p = pres(&["a", "e01"], &[]);
        let w = p.parse_word(&["a", "A", "e01^-1", "a^-1"]).unwrap();
        assert_eq!(p.word_tokens(&w), vec!["a", "A", "e01^-1", "A"]);
        assert!(p.parse_token("B").is_err());
        assert_eq!(free_reduce(&w).len(), 2);
        assert_eq!(cyclic_reduce(&p.parse_word(&["a", "e01", "A"]).unwrap()).len(), 1);
    }

    #[test]
    fn tietze_examples() {
        assert!(tietze_simplify(&pres(&["a"], &[&["a"]]), 10).is_empty());
        let torus = pres(&["a", "b"], &[&["a", "b", "A", "B"]]);
        assert_eq!(tietze_simplify(&torus, 10), torus);
        let z3 = pres(&["a", "b"], &[&["a", "a", "a"], &["b", "A"]]);
        let s = tietze_simplify(&z3, 10);
        assert_eq!(s.generators.len(), 1);
        assert_eq!(s.relators, vec![vec![Letter::new(0); 3]]);
        assert_eq!(tietze_simplify(&z3, 0).generators.len(), 2);
    }
}

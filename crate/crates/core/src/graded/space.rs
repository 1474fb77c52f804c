//! Finite-dimensional super vector spaces with an ordered homogeneous basis.
//!
//! Bases are kept in canonical block order: every even label precedes every
//! odd label. Constructions that would break the order (suspension, direct
//! sums) re-sort stably and return the permutation they applied.

use std::collections::HashSet;
use std::fmt;

use super::Parity;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
}

/// `sV` together with the index map `v_i -> s v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suspension {
    pub space: SuperSpace,
    pub perm: Vec<usize>,
}

/// `A ⊕ B` together with the embeddings of both summands' bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSum {
    pub space: SuperSpace,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

fn is_atom(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_wrapped(label: &str) -> bool {
    if !(label.starts_with('(') && label.ends_with(')')) {
        return false;
    }
    let mut depth = 0i32;
    for (i, c) in label.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 != label.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Name of `s v` given the name of `v`.
pub fn suspend_label(label: &str) -> String {
    format!("s{label}")
}

/// Inverse of [`suspend_label`]; `None` if the label carries no marker.
pub fn desuspend_label(label: &str) -> Option<String> {
    label
        .strip_prefix('s')
        .filter(|rest| !rest.is_empty())
        .map(str::to_string)
}

/// Name of the dual basis vector `v*`.
pub fn dual_label(label: &str) -> String {
    if is_atom(label) || is_wrapped(label) {
        format!("{label}*")
    } else {
        format!("({label})*")
    }
}

impl SuperSpace {
    pub fn new<I, J, S, T>(even: I, odd: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = T>,
        S: Into<String>,
        T: Into<String>,
    {
        let mut labels: Vec<String> = even.into_iter().map(Into::into).collect();
        let n_even = labels.len();
        labels.extend(odd.into_iter().map(Into::into));
        let parities = (0..labels.len())
            .map(|i| if i < n_even { Parity::Even } else { Parity::Odd })
            .collect();
        Self::from_parts(labels, parities)
    }

    /// Builds a space from labels already in canonical block order.
    pub fn from_parts(labels: Vec<String>, parities: Vec<Parity>) -> Result<Self> {
        if labels.len() != parities.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} labels but {} parities",
                labels.len(),
                parities.len()
            )));
        }
        if parities.windows(2).any(|w| w[0] == Parity::Odd && w[1] == Parity::Even) {
            return Err(Error::ShapeMismatch(
                "even basis vectors must precede odd ones".into(),
            ));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(|c| c.is_whitespace() || "=#[]".contains(c)) {
                return Err(Error::Precondition(format!("invalid basis label `{l}`")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(SuperSpace { labels, parities })
    }

    /// Stable sort into block order; `perm[i]` is the new index of old vector `i`.
    pub fn from_unsorted(labels: Vec<String>, parities: Vec<Parity>) -> Result<(Self, Vec<usize>)> {
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by_key(|&i| parities[i]);
        let mut perm = vec![0; labels.len()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let sorted_labels = order.iter().map(|&i| labels[i].clone()).collect();
        let sorted_parities = order.iter().map(|&i| parities[i]).collect();
        Ok((Self::from_parts(sorted_labels, sorted_parities)?, perm))
    }

    pub fn empty() -> Self {
        SuperSpace {
            labels: Vec::new(),
            parities: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn dim_even(&self) -> usize {
        self.parities.iter().filter(|p| p.is_even()).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn indices(&self, parity: Parity) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(move |&i| self.parities[i] == parity)
    }

    /// Same dimensions in each parity.
    pub fn same_shape(&self, other: &SuperSpace) -> bool {
        self.parities == other.parities
    }

    /// The parity-reversed space `sV`, re-sorted into block order.
    pub fn suspend(&self) -> Suspension {
        let labels = self.labels.iter().map(|l| suspend_label(l)).collect();
        let parities = self.parities.iter().map(|p| p.flip()).collect();
        let (space, perm) =
            Self::from_unsorted(labels, parities).expect("suspension preserves label uniqueness");
        Suspension { space, perm }
    }

    /// Strips one suspension marker from every label. Fails if some label has none.
    pub fn desuspend_labels(&self) -> Option<SuperSpace> {
        let labels = self
            .labels
            .iter()
            .map(|l| desuspend_label(l))
            .collect::<Option<Vec<_>>>()?;
        Self::from_parts(labels, self.parities.clone()).ok()
    }

    /// The dual space `V*` with the dual basis in the same order and parities.
    pub fn dual(&self) -> SuperSpace {
        SuperSpace {
            labels: self.labels.iter().map(|l| dual_label(l)).collect(),
            parities: self.parities.clone(),
        }
    }

    /// `self ⊕ other`; labels are paired as `(x,0)` / `(0,u)` only when they collide.
    pub fn direct_sum(&self, other: &SuperSpace) -> DirectSum {
        let left_set: HashSet<&str> = self.labels.iter().map(String::as_str).collect();
        let collide = other.labels.iter().any(|l| left_set.contains(l.as_str()));
        let mut labels = Vec::with_capacity(self.dim() + other.dim());
        if collide {
            labels.extend(self.labels.iter().map(|l| format!("({l},0)")));
            labels.extend(other.labels.iter().map(|l| format!("(0,{l})")));
        } else {
            labels.extend(self.labels.iter().cloned());
            labels.extend(other.labels.iter().cloned());
        }
        let parities = self.parities.iter().chain(&other.parities).copied().collect();
        let (space, perm) =
            Self::from_unsorted(labels, parities).expect("direct sum labels are unique");
        DirectSum {
            space,
            left: perm[..self.dim()].to_vec(),
            right: perm[self.dim()..].to_vec(),
        }
    }
}

impl fmt::Debug for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let even: Vec<&str> = self.indices(Parity::Even).map(|i| self.label(i)).collect();
        let odd: Vec<&str> = self.indices(Parity::Odd).map(|i| self.label(i)).collect();
        write!(f, "({} | {})", even.join(" "), odd.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ef() -> SuperSpace {
        SuperSpace::new(["e"], ["f"]).unwrap()
    }

    #[test]
    fn suspension_swaps_blocks() {
        let s = ef().suspend();
        assert_eq!(s.space.labels(), &["sf".to_string(), "se".to_string()]);
        assert_eq!(s.space.parities(), &[Parity::Even, Parity::Odd]);
        assert_eq!(s.perm, vec![1, 0]);
    }

    #[test]
    fn purely_even_becomes_purely_odd() {
        let v = SuperSpace::new(["a", "b"], Vec::<String>::new()).unwrap();
        let s = v.suspend().space;
        assert_eq!(s.dim_odd(), 2);
        assert_eq!(s.dim_even(), 0);
    }

    #[test]
    fn double_suspension_strips_to_original() {
        let v = SuperSpace::new(["v1", "v2"], ["w1", "(0,x)", "e*"]).unwrap();
        let s1 = v.suspend();
        let ss = s1.space.suspend();
        let composed: Vec<usize> = s1.perm.iter().map(|&i| ss.perm[i]).collect();
        assert_eq!(composed, (0..5).collect::<Vec<_>>());
        let back = ss.space.desuspend_labels().unwrap().desuspend_labels().unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn labels_must_be_unique_and_ordered() {
        assert_eq!(
            SuperSpace::new(["a"], ["a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert!(SuperSpace::from_parts(
            vec!["f".into(), "e".into()],
            vec![Parity::Odd, Parity::Even]
        )
        .is_err());
    }

    #[test]
    fn direct_sum_pairs_colliding_labels() {
        let g = ef();
        let sum = g.direct_sum(&g);
        assert_eq!(sum.space.labels(), &["(e,0)", "(0,e)", "(f,0)", "(0,f)"]);
        assert_eq!(sum.left, vec![0, 2]);
        assert_eq!(sum.right, vec![1, 3]);
        let other = SuperSpace::new(["v"], ["w"]).unwrap();
        let sum = g.direct_sum(&other);
        assert_eq!(sum.space.labels(), &["e", "v", "f", "w"]);
    }

    #[test]
    fn dual_labels() {
        assert_eq!(dual_label("f"), "f*");
        assert_eq!(dual_label("(0,f)"), "(0,f)*");
        assert_eq!(dual_label("e*"), "(e*)*");
        assert_eq!(suspend_label("e*"), "se*");
        assert_eq!(desuspend_label("se*").as_deref(), Some("e*"));
        assert_eq!(desuspend_label("s"), None);
        assert_eq!(desuspend_label("s(0,f)").as_deref(), Some("(0,f)"));
    }
}

use std::collections::BTreeMap;

use super::CriticalSimplexDiagram;
use crate::error::{Error, Result};
use crate::simplex::{Label, Level, Simplex};

impl CriticalSimplexDiagram {
    /// `σ ∈ K` iff `A_σ*` is non-empty. Simplices over unknown vertices are absent.
    pub fn membership(&self, s: &Simplex) -> bool {
        self.knows(s) && !self.intersect(s, true).is_empty()
    }

    /// `true` iff `s` is in the complex and no maximal star strictly contains it.
    pub fn is_maximal(&self, s: &Simplex) -> bool {
        if !self.knows(s) {
            return false;
        }
        let hits = self.intersect(s, true);
        !hits.is_empty() && hits.iter().all(|l| self.simplex_of(l).len() == s.len())
    }

    /// Minimum level over `A_σ`.
    pub fn filtration(&self, s: &Simplex) -> Result<Level> {
        self.filtration_labels(s).map(|(level, _)| level)
    }

    /// `true` iff every coface of `s` has a strictly larger filtration value.
    ///
    /// Every star achieving the minimum level of `A_σ` must be `s` itself;
    /// a strict superset at that level is a coface with the same value.
    pub fn is_critical(&self, s: &Simplex) -> Result<bool> {
        let (level, labels) = self.filtration_labels(s)?;
        Ok(labels
            .iter()
            .take_while(|l| l.level == level)
            .all(|l| self.simplex_of(l).len() == s.len()))
    }

    /// Filtration values of the `d + 1` facets of `s`.
    ///
    /// One pass over the smallest member array `A_r` finds every label missing
    /// from exactly one other array `A_j`; those bound the facet omitting `j`.
    /// Labels absent from `A_r` itself are invisible to that pass, so the facet
    /// omitting `r` is resolved with a second scan from the next smallest array.
    /// Facets with no witness inherit `f(s)`.
    pub fn facet_filtrations(&self, s: &Simplex) -> Result<BTreeMap<Simplex, Level>> {
        let f = self.filtration(s)?;
        if s.dim() == 0 {
            return Err(Error::Dimension {
                requested: 0,
                dim: 0,
            });
        }
        let verts = s.vertices();
        let arrays: Vec<_> = verts.iter().map(|&v| self.arr(v)).collect();
        let by_size = |skip: Option<usize>| {
            (0..verts.len())
                .filter(|&i| Some(i) != skip)
                .min_by_key(|&i| arrays[i].len())
                .expect("at least two vertices")
        };
        let r = by_size(None);
        let mut best = vec![f; verts.len()];

        for label in arrays[r].maximal.iter().chain(arrays[r].other.iter()) {
            let mut missing = None;
            let mut misses = 0;
            for (j, a) in arrays.iter().enumerate() {
                if j != r && !a.contains(label) {
                    misses += 1;
                    missing = Some(j);
                    if misses > 1 {
                        break;
                    }
                }
            }
            if let (1, Some(j)) = (misses, missing) {
                best[j] = best[j].min(label.level);
            }
        }

        let q = by_size(Some(r));
        for label in arrays[q].maximal.iter().chain(arrays[q].other.iter()) {
            if arrays[r].contains(label) {
                continue;
            }
            if arrays
                .iter()
                .enumerate()
                .all(|(j, a)| j == r || j == q || a.contains(label))
            {
                best[r] = best[r].min(label.level);
            }
        }

        Ok(best
            .into_iter()
            .enumerate()
            .map(|(i, level)| (s.without_index(i).expect("dimension >= 1"), level))
            .collect())
    }

    /// Every codimension-1 coface of `s` with its filtration value, read off
    /// the stars that contain `s`.
    pub fn coface_filtrations_codim1(&self, s: &Simplex) -> Result<BTreeMap<Simplex, Level>> {
        let (_, labels) = self.filtration_labels(s)?;
        let mut out: BTreeMap<Simplex, Level> = BTreeMap::new();
        for label in labels {
            let star = self.simplex_of(&label);
            if star.len() == s.len() {
                continue;
            }
            for &w in star.vertices() {
                if s.contains(w) {
                    continue;
                }
                out.entry(s.with_vertex(w))
                    .and_modify(|h| *h = (*h).min(label.level))
                    .or_insert(label.level);
            }
        }
        Ok(out)
    }

    /// The maximal stars containing `s` (its maximal cofaces), in label order.
    pub fn maximal_cofaces(&self, s: &Simplex) -> Vec<(Label, &Simplex)> {
        if !self.knows(s) {
            return Vec::new();
        }
        self.intersect(s, true)
            .into_iter()
            .map(|l| (l, self.simplex_of(&l)))
            .collect()
    }

    /// `f(s)` together with `A_σ` in ascending label order.
    pub(super) fn filtration_labels(&self, s: &Simplex) -> Result<(Level, Vec<Label>)> {
        if !self.membership(s) {
            return Err(Error::NotInComplex(s.clone()));
        }
        let labels = self.intersect(s, false);
        let level = labels[0].level;
        Ok((level, labels))
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::figure1;
    use super::*;
    use crate::simplex;

    #[test]
    fn membership_and_maximality() {
        let d = figure1();
        assert!(d.membership(&simplex![1, 3, 4]));
        assert!(!d.membership(&simplex![1, 5]));
        assert!(!d.membership(&simplex![1, 7]));
        assert!(!CriticalSimplexDiagram::new(4, 1).membership(&simplex![1]));
        assert!(d.is_maximal(&simplex![1, 2, 3, 4]));
        assert!(!d.is_maximal(&simplex![1, 3, 4]));
        assert!(d.is_maximal(&simplex![3, 5, 6]));
        assert!(!d.is_maximal(&simplex![1, 5]));
    }

    #[test]
    fn filtration_values() {
        let d = figure1();
        assert_eq!(d.filtration(&simplex![1, 3, 4]).unwrap(), 3);
        assert_eq!(d.filtration(&simplex![5, 6]).unwrap(), 1);
        assert_eq!(d.filtration(&simplex![2]).unwrap(), 0);
        assert_eq!(d.filtration(&simplex![1, 2]).unwrap(), 5);
        assert!(matches!(
            d.filtration(&simplex![1, 5]),
            Err(Error::NotInComplex(_))
        ));
    }

    #[test]
    fn criticality() {
        let d = figure1();
        assert!(d.is_critical(&simplex![2, 4]).unwrap());
        assert!(!d.is_critical(&simplex![1, 3]).unwrap());
        assert!(d.is_critical(&simplex![1, 2, 3, 4]).unwrap());
        assert!(d.is_critical(&simplex![6]).unwrap());
        assert!(d.is_critical(&simplex![1, 4]).unwrap());
        assert!(!d.is_critical(&simplex![2, 3]).unwrap());
        assert!(d.is_critical(&simplex![1, 5]).is_err());
    }

    #[test]
    fn facets_of_figure1_simplices() {
        let d = figure1();
        let got = d.facet_filtrations(&simplex![1, 2, 3, 4]).unwrap();
        let want: BTreeMap<_, _> = [
            (simplex![2, 3, 4], 5),
            (simplex![1, 3, 4], 3),
            (simplex![1, 2, 4], 5),
            (simplex![1, 2, 3], 5),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        let got = d.facet_filtrations(&simplex![5, 6]).unwrap();
        assert_eq!(
            got,
            [(simplex![5], 0), (simplex![6], 0)].into_iter().collect()
        );

        let got = d.facet_filtrations(&simplex![3, 5, 6]).unwrap();
        let want: BTreeMap<_, _> = [
            (simplex![5, 6], 1),
            (simplex![3, 6], 2),
            (simplex![3, 5], 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        assert!(matches!(
            d.facet_filtrations(&simplex![4]),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn codim1_cofaces() {
        let d = figure1();
        assert_eq!(
            d.coface_filtrations_codim1(&simplex![5, 6]).unwrap(),
            [(simplex![3, 5, 6], 2)].into_iter().collect()
        );
        assert!(d
            .coface_filtrations_codim1(&simplex![1, 2, 3, 4])
            .unwrap()
            .is_empty());
        assert_eq!(
            d.coface_filtrations_codim1(&simplex![1, 4]).unwrap(),
            [(simplex![1, 3, 4], 3), (simplex![1, 2, 4], 5)]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn maximal_coface_listing() {
        let d = figure1();
        let got: Vec<_> = d
            .maximal_cofaces(&simplex![3])
            .into_iter()
            .map(|(_, s)| s.clone())
            .collect();
        assert_eq!(got, vec![simplex![3, 5, 6], simplex![1, 2, 3, 4]]);
    }
}

use std::collections::{BTreeMap, BTreeSet};

use super::{CriticalSimplexDiagram, Star};
use crate::error::{Error, Result};
use crate::simplex::{Label, Level, Simplex, VertexId};

impl CriticalSimplexDiagram {
    /// Stores `s` at level `level` without looking at anything already stored.
    ///
    /// The caller states whether `s` is maximal. Redundant stars are allowed;
    /// queries stay correct and [`cleanup`](Self::cleanup) removes them.
    pub fn lazy_insert(&mut self, s: &Simplex, level: Level, maximal: bool) -> Result<Label> {
        self.check_level(level)?;
        self.check_vertices(s)?;
        let label = self.fresh_label(level);
        self.place(
            label,
            Star {
                simplex: s.clone(),
                maximal,
            },
        );
        Ok(label)
    }

    /// Inserts `s` with filtration value `level`.
    ///
    /// Every coface of `s` already present must have a strictly larger value.
    /// When `s` becomes maximal, maximal stars that are now faces of `s` are
    /// dropped (level at least `level`) or moved to the non-maximal segment.
    pub fn insert(&mut self, s: &Simplex, level: Level) -> Result<Label> {
        self.check_level(level)?;
        self.check_vertices(s)?;
        let cofaces = self.intersect(s, false);
        if let Some(l) = cofaces.first().filter(|l| l.level <= level) {
            return Err(Error::PreconditionViolated {
                simplex: s.clone(),
                level,
                coface: self.simplex_of(l).clone(),
                coface_level: l.level,
            });
        }
        let maximal = self
            .intersect(s, true)
            .iter()
            .all(|l| self.simplex_of(l).len() == s.len());
        if maximal {
            self.retire_maximal_faces(s, level);
        }
        self.lazy_insert(s, level, maximal)
    }

    /// Removes `s` and all its cofaces; everything else keeps its value.
    ///
    /// Each star containing `s` is replaced by its facets that avoid one
    /// vertex of `s`, at the star's level.
    pub fn remove(&mut self, s: &Simplex) -> Result<()> {
        let (_, labels) = self.filtration_labels(s)?;
        let mut replacements: BTreeMap<Simplex, Level> = BTreeMap::new();
        for label in labels {
            let star = self.delete_star(label).expect("label from A_σ");
            for &v in s.vertices() {
                if let Some(facet) = star.simplex.without_vertex(v) {
                    replacements
                        .entry(facet)
                        .and_modify(|h| *h = (*h).min(label.level))
                        .or_insert(label.level);
                }
            }
        }
        self.restore_all(replacements);
        Ok(())
    }

    /// Removes the free pair `(sigma, tau)`: `tau` must be the only proper
    /// coface of `sigma` and have one more vertex.
    pub fn elementary_collapse(&mut self, sigma: &Simplex, tau: &Simplex) -> Result<()> {
        let not_free = || Error::NotAFreePair {
            sigma: sigma.clone(),
            tau: tau.clone(),
        };
        if tau.len() != sigma.len() + 1 || !sigma.is_face_of(tau) || !self.membership(sigma) {
            return Err(not_free());
        }
        if !self
            .intersect(sigma, true)
            .iter()
            .all(|l| self.simplex_of(l) == tau)
        {
            return Err(not_free());
        }

        let mut keep: BTreeMap<Simplex, Level> = self
            .facet_filtrations(tau)?
            .into_iter()
            .filter(|(f, _)| f != sigma)
            .collect();
        if sigma.dim() > 0 {
            keep.extend(self.facet_filtrations(sigma)?);
        }

        for label in self.intersect(sigma, false) {
            self.delete_star(label);
        }
        self.restore_all(keep);
        Ok(())
    }

    /// Applies the vertex map `pi`, sending every vertex outside `survivors`
    /// to a survivor. The diagram afterwards represents the image complex,
    /// where each image simplex takes the smallest value among its preimages.
    pub fn collapse_vertices(
        &mut self,
        pi: &BTreeMap<VertexId, VertexId>,
        survivors: &BTreeSet<VertexId>,
    ) -> Result<()> {
        let n = self.n() as VertexId;
        if let Some(&v) = survivors.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::InvalidVertexMap(format!(
                "survivor {v} is not a vertex"
            )));
        }
        for (&from, &to) in pi {
            if survivors.contains(&from) && from != to {
                return Err(Error::InvalidVertexMap(format!(
                    "survivor {from} must map to itself"
                )));
            }
            if !survivors.contains(&to) {
                return Err(Error::InvalidVertexMap(format!(
                    "{from} maps to {to}, which is not a survivor"
                )));
            }
        }
        let doomed: Vec<VertexId> = (1..=n).filter(|v| !survivors.contains(v)).collect();
        if let Some(v) = doomed.iter().find(|v| !pi.contains_key(v)) {
            return Err(Error::InvalidVertexMap(format!("no image for vertex {v}")));
        }

        let mut touched: BTreeSet<Label> = BTreeSet::new();
        for &v in &doomed {
            let a = self.arr(v);
            touched.extend(a.maximal.iter().chain(a.other.iter()));
        }
        let mut images: BTreeMap<Simplex, Level> = BTreeMap::new();
        for label in touched {
            let star = self.delete_star(label).expect("label from A_v");
            let mapped = star
                .simplex
                .vertices()
                .iter()
                .map(|v| pi.get(v).copied().unwrap_or(*v))
                .collect::<BTreeSet<_>>();
            let image = Simplex::from_sorted(mapped.into_iter().collect());
            images
                .entry(image)
                .and_modify(|h| *h = (*h).min(label.level))
                .or_insert(label.level);
        }
        self.restore_all(images);
        Ok(())
    }

    /// Deletes every stored star that is not critical, keeps one copy of each
    /// duplicated simplex, and fixes every maximality flag. Returns the number
    /// of stars deleted. No query result changes.
    pub fn cleanup(&mut self) -> usize {
        let verdicts: Vec<(Label, bool, bool)> = self
            .stars
            .iter()
            .map(|(&label, star)| {
                let (keep, maximal) = self.verdict(label, &star.simplex);
                (label, keep, maximal)
            })
            .collect();
        let mut deleted = 0;
        for (label, keep, maximal) in verdicts {
            if keep {
                self.set_maximal(label, maximal);
            } else {
                self.delete_star(label);
                deleted += 1;
            }
        }
        deleted
    }

    /// Whether the star `label` survives cleanup, and whether its simplex is maximal.
    pub(super) fn verdict(&self, label: Label, s: &Simplex) -> (bool, bool) {
        let cover = self.intersect(s, false);
        let level = cover[0].level;
        let mut at_min = cover.iter().take_while(|l| l.level == level);
        let critical = at_min.all(|l| self.simplex_of(l).len() == s.len());
        let keep = critical && cover[0] == label;
        let maximal = cover.iter().all(|l| self.simplex_of(l).len() == s.len());
        (keep, maximal)
    }

    /// Maximal stars that are faces of `s`, found by scanning `A_v*` for each
    /// vertex of `s`: dropped when their level is at least `level`, otherwise
    /// moved out of the maximal segment.
    fn retire_maximal_faces(&mut self, s: &Simplex, level: Level) {
        let mut seen = BTreeSet::new();
        for &v in s.vertices() {
            for &label in &self.arr(v).maximal {
                seen.insert(label);
            }
        }
        for label in seen {
            if !self.simplex_of(&label).is_face_of(s) {
                continue;
            }
            if label.level >= level {
                self.delete_star(label);
            } else {
                self.set_maximal(label, false);
            }
        }
    }

    /// Makes sure each simplex is present with at most the given value,
    /// largest simplices first so that bigger replacements cover smaller ones.
    fn restore_all(&mut self, targets: BTreeMap<Simplex, Level>) {
        let mut order: Vec<_> = targets.into_iter().collect();
        order.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.cmp(b)));
        for (s, level) in order {
            self.restore(&s, level);
        }
    }

    fn restore(&mut self, s: &Simplex, level: Level) {
        let covered = !self.intersect(s, true).is_empty();
        let cover = self.intersect(s, false);
        let current = cover.first().map(|l| l.level);
        if covered {
            if current.is_some_and(|h| h <= level) {
                return;
            }
            self.lazy_insert(s, level, false)
                .expect("validated simplex");
            return;
        }
        if let Some(&l) = cover
            .iter()
            .find(|l| l.level == level && self.simplex_of(l) == s)
        {
            self.retire_maximal_faces(s, level);
            self.set_maximal(l, true);
            return;
        }
        self.retire_maximal_faces(s, level);
        self.lazy_insert(s, level, true).expect("validated simplex");
    }
}

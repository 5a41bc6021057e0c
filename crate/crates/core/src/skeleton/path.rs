use std::cmp::Ordering;

use serde::Serialize;

use super::{Degree, KGraph};
use crate::error::{Error, Result};

/// A path in the k-graph of a skeleton, stored as its colour-ascending edge
/// word. The empty word at a vertex is that vertex.
///
/// Paths carry the fingerprint of the graph that made them; mixing paths of
/// different graphs is an error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    graph: u64,
    range: usize,
    source: usize,
    word: Vec<usize>,
    degree: Degree,
}

impl Path {
    pub fn range(&self) -> usize {
        self.range
    }

    pub fn source(&self) -> usize {
        self.source
    }

    /// Edge indices in normal form.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn is_vertex(&self) -> bool {
        self.word.is_empty()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.word, self.range, &self.degree, self.graph).cmp(&(&other.word, other.range, &other.degree, other.graph))
    }
}

/// Serialisable form of a path, with ids instead of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathView {
    pub range: String,
    pub source: String,
    pub word: Vec<String>,
    pub degree: Degree,
}

impl KGraph {
    /// The vertex `v` as a degree-zero path.
    pub fn vertex_path(&self, v: usize) -> Path {
        Path {
            graph: self.fingerprint(),
            range: v,
            source: v,
            word: Vec::new(),
            degree: Degree::zero(self.k()),
        }
    }

    pub fn edge_path(&self, e: usize) -> Path {
        Path {
            graph: self.fingerprint(),
            range: self.edge_range(e),
            source: self.edge_source(e),
            word: vec![e],
            degree: Degree::unit(self.k(), self.color(e)),
        }
    }

    fn check_composable_word(&self, word: &[usize]) -> Result<()> {
        for w in word.windows(2) {
            if self.edge_source(w[0]) != self.edge_range(w[1]) {
                return Err(Error::NonComposable {
                    source_vertex: self.vertex_id(self.edge_source(w[0])).to_string(),
                    range_vertex: self.vertex_id(self.edge_range(w[1])).to_string(),
                });
            }
        }
        Ok(())
    }

    fn swap_at(&self, word: &mut [usize], i: usize) {
        let (x, y) = self
            .swap_pair(word[i], word[i + 1])
            .expect("validated skeleton has a square for every bicoloured pair");
        word[i] = x;
        word[i + 1] = y;
    }

    /// Rewrite a composable word so that its colours follow `target`, which
    /// must be a rearrangement of the word's colours.
    fn reorder(&self, word: &mut [usize], target: &[usize]) {
        for (i, &c) in target.iter().enumerate() {
            let j = (i..word.len())
                .find(|&j| self.color(word[j]) == c)
                .expect("target is a rearrangement of the word's colours");
            for p in (i..j).rev() {
                self.swap_at(word, p);
            }
        }
    }

    /// The colour-ascending representative of a composable word.
    pub fn normal_form(&self, word: &[usize]) -> Result<Vec<usize>> {
        self.check_composable_word(word)?;
        let mut w = word.to_vec();
        let mut target: Vec<usize> = w.iter().map(|&e| self.color(e)).collect();
        target.sort_unstable();
        self.reorder(&mut w, &target);
        Ok(w)
    }

    fn from_normal_word(&self, range: usize, word: Vec<usize>) -> Path {
        let mut degree = vec![0u32; self.k()];
        for &e in &word {
            degree[self.color(e)] += 1;
        }
        let source = word.last().map_or(range, |&e| self.edge_source(e));
        let range = word.first().map_or(range, |&e| self.edge_range(e));
        Path {
            graph: self.fingerprint(),
            range,
            source,
            word,
            degree: Degree::new(degree),
        }
    }

    /// The path of an arbitrary composable, nonempty edge word.
    pub fn path_from_word(&self, word: &[usize]) -> Result<Path> {
        let first = *word
            .first()
            .ok_or_else(|| Error::BadParameter("empty edge word; use a vertex path".into()))?;
        let w = self.normal_form(word)?;
        Ok(self.from_normal_word(self.edge_range(first), w))
    }

    /// Parse a path from edge ids, or a single vertex id for a vertex path.
    pub fn path_from_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<Path> {
        if ids.len() == 1 {
            if let Ok(v) = self.vertex(ids[0].as_ref()) {
                if self.edge(ids[0].as_ref()).is_err() {
                    return Ok(self.vertex_path(v));
                }
            }
        }
        let word = ids
            .iter()
            .map(|id| self.edge(id.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.path_from_word(&word)
    }

    /// Whether `p` was produced by this graph.
    pub fn owns(&self, p: &Path) -> bool {
        p.graph == self.fingerprint()
    }

    fn check_own(&self, p: &Path) -> Result<()> {
        if !self.owns(p) {
            return Err(Error::SkeletonMismatch);
        }
        Ok(())
    }

    fn check_degree(&self, d: &Degree) -> Result<()> {
        if d.rank() != self.k() {
            return Err(Error::DegreeArity {
                expected: self.k(),
                got: d.rank(),
            });
        }
        Ok(())
    }

    /// `a·b`, defined when `s(a) = r(b)`.
    pub fn compose(&self, a: &Path, b: &Path) -> Result<Path> {
        self.check_own(a)?;
        self.check_own(b)?;
        if a.source != b.range {
            return Err(Error::NonComposable {
                source_vertex: self.vertex_id(a.source).to_string(),
                range_vertex: self.vertex_id(b.range).to_string(),
            });
        }
        let mut w = a.word.clone();
        w.extend_from_slice(&b.word);
        let target = (a.degree() + b.degree()).color_sequence();
        self.reorder(&mut w, &target);
        Ok(self.from_normal_word(a.range, w))
    }

    /// The unique `(μ, ν)` with `d(μ) = m` and `μν = λ`.
    pub fn factorize(&self, lambda: &Path, m: &Degree) -> Result<(Path, Path)> {
        self.check_own(lambda)?;
        self.check_degree(m)?;
        let rest = lambda.degree.checked_sub(m).ok_or_else(|| Error::DegreeOutOfRange {
            requested: m.coords().to_vec(),
            available: lambda.degree.coords().to_vec(),
        })?;
        let mut w = lambda.word.clone();
        let mut target = m.color_sequence();
        target.extend(rest.color_sequence());
        self.reorder(&mut w, &target);
        let tail = w.split_off(m.total() as usize);
        let mu = self.from_normal_word(lambda.range, w);
        let nu = self.from_normal_word(mu.source, tail);
        Ok((mu, nu))
    }

    /// `λ(m, n)`.
    pub fn segment(&self, lambda: &Path, m: &Degree, n: &Degree) -> Result<Path> {
        self.check_degree(n)?;
        if !m.le(n) {
            return Err(Error::DegreeOutOfRange {
                requested: m.coords().to_vec(),
                available: n.coords().to_vec(),
            });
        }
        let (head, _) = self.factorize(lambda, n)?;
        let (_, mid) = self.factorize(&head, m)?;
        Ok(mid)
    }

    /// `vΛ^n`, in lexicographic order of edge words.
    pub fn enumerate_paths(&self, v: usize, n: &Degree) -> Result<Vec<Path>> {
        self.check_degree(n)?;
        if v >= self.vertex_count() {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        let colors = n.color_sequence();
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(colors.len());
        self.extend_words(v, &colors, &mut word, &mut |w| {
            out.push(self.from_normal_word(v, w.to_vec()));
        });
        Ok(out)
    }

    /// Number of paths `vΛ^n` without materialising them.
    pub fn count_paths(&self, v: usize, n: &Degree) -> Result<usize> {
        self.check_degree(n)?;
        let colors = n.color_sequence();
        let mut count = 0usize;
        let mut word = Vec::with_capacity(colors.len());
        self.extend_words(v, &colors, &mut word, &mut |_| count += 1);
        Ok(count)
    }

    fn extend_words(&self, at: usize, colors: &[usize], word: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
        let Some((&c, rest)) = colors.split_first() else {
            emit(word);
            return;
        };
        for &e in self.edges_into(at, c) {
            word.push(e);
            self.extend_words(self.edge_source(e), rest, word, emit);
            word.pop();
        }
    }

    /// All paths with range `v` and degree at most `bound`.
    pub fn paths_up_to(&self, v: usize, bound: &Degree) -> Result<Vec<Path>> {
        let mut out = Vec::new();
        for d in bound.box_below() {
            out.extend(self.enumerate_paths(v, &d)?);
        }
        Ok(out)
    }

    pub fn view(&self, p: &Path) -> PathView {
        PathView {
            range: self.vertex_id(p.range).to_string(),
            source: self.vertex_id(p.source).to_string(),
            word: p.word.iter().map(|&e| self.edge_id(e).to_string()).collect(),
            degree: p.degree.clone(),
        }
    }

    /// Human-readable form: edge ids joined by `.`, or the vertex id.
    pub fn display_path(&self, p: &Path) -> String {
        if p.word.is_empty() {
            return self.vertex_id(p.range).to_string();
        }
        p.word.iter().map(|&e| self.edge_id(e)).collect::<Vec<_>>().join(".")
    }

    pub(crate) fn path_unchecked(&self, range: usize, word: Vec<usize>) -> Path {
        self.from_normal_word(range, word)
    }
}
